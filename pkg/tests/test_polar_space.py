import itertools
import json
from collections import Counter

import pytest

from matrix_oracle import scalar_sign
from pentagram_atlas.errors import DegeneratePair, DuplicatePoint, NonCommuting, ProductNotScalar
from pentagram_atlas.pauli import OBSERVABLES, parse
from pentagram_atlas.polar_space import (
    KLEIN_QUADRIC,
    PlaneClass,
    classify_plane,
    enumerate_lines,
    enumerate_planes,
    extend_to_fano,
    fano_plane,
    line_at_infinity,
    make_context,
    make_line,
    on_quadric,
)
from pentagram_atlas.enumerator import enumerate_contexts

from conftest import GHZ


def labels(objs):
    return set(objs.labels)


def _vec(o):
    return (o.x << 3) | o.z


def _form(u, v):
    return (bin((u >> 3) & (v & 7)).count("1") + bin((v >> 3) & (u & 7)).count("1")) & 1


def brute_force_planes():
    """Spans of commuting independent triples, computed on raw 6-bit vectors."""
    vecs = [_vec(o) for o in OBSERVABLES]
    by_vec = {_vec(o): o.id for o in OBSERVABLES}
    planes = set()
    for u, v, w in itertools.combinations(vecs, 3):
        if _form(u, v) or _form(u, w) or _form(v, w) or u ^ v == w:
            continue
        span = {a * u ^ b * v ^ c * w for a, b, c in itertools.product((0, 1), repeat=3)} - {0}
        planes.add(frozenset(by_vec[s] for s in span))
    return planes


@pytest.fixture(scope="module")
def planes():
    return enumerate_planes()


def test_make_line():
    line = make_line("XII", "IXI")
    assert labels(line) == {"XII", "IXI", "XXI"} and line.sign == 1
    line = make_line("XXI", "YYI")
    assert labels(line) == {"XXI", "YYI", "ZZI"} and line.sign == -1
    assert scalar_sign(["XXI", "YYI", "ZZI"]) == -1


def test_make_line_errors():
    with pytest.raises(NonCommuting):
        make_line("XII", "ZII")
    with pytest.raises(DegeneratePair):
        make_line("XII", "XII")


def test_make_context():
    c = make_context(["XII", "IXI", "IIX", "XXX"])
    assert c.sign == 1 == scalar_sign(["XII", "IXI", "IIX", "XXX"])
    assert c.points == tuple(sorted(parse(s).id for s in ["XII", "IXI", "IIX", "XXX"]))
    c = make_context(["XXX", "XYY", "YXY", "YYX"])
    assert c.sign == -1 == scalar_sign(["XXX", "XYY", "YXY", "YYX"])


@pytest.mark.parametrize("pts, err", [
    (["XII", "IXI", "IIX", "XXY"], ProductNotScalar),
    (["XII", "ZII", "IIX", "YIX"], NonCommuting),
    (["XII", "XII", "IXI", "XXI"], DuplicatePoint),
])
def test_make_context_errors(pts, err):
    with pytest.raises(err):
        make_context(pts)


def test_extend_all_x_context():
    c = make_context(["XII", "IXI", "IIX", "XXX"])
    plane = extend_to_fano(c)
    assert labels(plane) == {"XII", "IXI", "IIX", "XXI", "XIX", "IXX", "XXX"}
    assert labels(line_at_infinity(c)) == {"XXI", "XIX", "IXX"}
    assert plane.plane_class is PlaneClass.C
    for line in plane.lines:
        assert line.sign == scalar_sign(line.labels) == 1


def test_extend_ghz_edge():
    c = make_context(GHZ[-1])
    plane = extend_to_fano(c)
    assert labels(line_at_infinity(c)) == {"IZZ", "ZIZ", "ZZI"}
    assert plane.plane_class is PlaneClass.NEGATIVE
    neg = {frozenset(line.labels) for line in plane.negative_lines}
    assert neg == {frozenset(s) for s in (("XXX", "XYY", "IZZ"), ("XXX", "YXY", "ZIZ"), ("XXX", "YYX", "ZZI"))}
    for line in plane.lines:
        assert line.sign == scalar_sign(line.labels)


def test_extension_contains_context():
    for c in enumerate_contexts():
        assert set(c.points) <= set(extend_to_fano(c).points)


def test_positive_a_example(planes):
    plane = next(p for p in planes if len(p.negative_lines) == 4)
    assert plane.sign == 1
    assert classify_plane(plane) is PlaneClass.A


def test_plane_count(planes):
    assert len(planes) == 135
    # generators of W(5,2): (2+1)(2^2+1)(2^3+1)
    assert (2 + 1) * (4 + 1) * (8 + 1) == 135
    assert {frozenset(p.points) for p in planes} == brute_force_planes()


def test_planes_are_sorted_and_classified(planes):
    assert [p.points for p in planes] == sorted(p.points for p in planes)
    for p in planes:
        assert classify_plane(p) is p.plane_class


def test_plane_class_census(planes):
    # frozen on first verified run
    census = Counter(p.plane_class for p in planes)
    assert census == {PlaneClass.NEGATIVE: 54, PlaneClass.A: 27, PlaneClass.B: 27, PlaneClass.C: 27}


def test_line_census():
    lines = enumerate_lines()
    assert len(lines) == 315
    per_point = Counter(p for line in lines for p in line.points)
    assert set(per_point.values()) == {15} and len(per_point) == 63
    brute = {frozenset((a.id, b.id, (a + b).id)) for a, b in itertools.combinations(OBSERVABLES, 2)
             if scalar_sign([a.label, b.label, (a + b).label]) is not None}
    assert brute == {frozenset(line.points) for line in lines}


def test_line_signs_match_oracle():
    for line in enumerate_lines():
        assert line.sign == scalar_sign(line.labels)


def test_context_census_and_uniqueness(planes):
    contexts = enumerate_contexts()
    assert len(contexts) == 945 == 135 * 7
    plane_sets = [set(p.points) for p in planes]
    for c in contexts:
        hosts = [s for s in plane_sets if set(c.points) <= s]
        assert hosts == [set(extend_to_fano(c).points)]
    per_plane = Counter(extend_to_fano(c).points for c in contexts)
    assert set(per_plane.values()) == {7}


def test_contexts_per_plane_are_complements_of_lines(planes):
    contexts = {c.points for c in enumerate_contexts()}
    for p in planes:
        for line in p.lines:
            rest = tuple(sorted(set(p.points) - set(line.points)))
            assert rest in contexts


def test_sign_coherence(planes):
    for p in planes:
        assert p.sign == scalar_sign(p.labels)
        line_product = 1
        for line in p.lines:
            line_product *= line.sign
        assert p.sign == line_product
        assert (p.sign == -1) == (len(p.negative_lines) == 3)


def test_classification_totality(planes):
    assert {len(p.negative_lines) for p in planes} == {0, 3, 4}
    for p in planes:
        if not p.negative_lines:
            census = Counter(OBSERVABLES[i - 1].kind.value for i in p.points)
            assert (census["A"], census["B"], census["C"]) in {(1, 3, 3), (3, 3, 1)}


def test_negative_line_structure(planes):
    for p in planes:
        neg = [set(line.points) for line in p.negative_lines]
        if p.plane_class is PlaneClass.NEGATIVE:
            assert len(set.intersection(*neg)) == 1
        elif p.plane_class is PlaneClass.A:
            meets = {frozenset(a & b) for a, b in itertools.combinations(neg, 2)}
            assert len(meets) == 6
            assert all(not (a & b & c) for a, b, c in itertools.combinations(neg, 3))


def test_fano_plane_constructor():
    p = fano_plane(["XII", "IXI", "IIX", "XXI", "XIX", "IXX", "XXX"])
    assert p.plane_class is PlaneClass.C
    with pytest.raises(NonCommuting):
        fano_plane(["XII", "ZII", "IIX", "XXI", "XIX", "IXX", "XXX"])


def test_klein_quadric():
    assert len(KLEIN_QUADRIC) == 35
    assert sum(on_quadric([o]) for o in OBSERVABLES) == 35


@pytest.mark.parametrize("pts, expected", [
    (["XXX", "XYY"], True),
    (["YII"], False),
    ([s for c in GHZ for s in c], False),
])
def test_on_quadric(pts, expected):
    assert on_quadric(pts) is expected


def test_json_forms(planes):
    p = planes[0]
    d = json.loads(json.dumps(p.to_json()))
    assert d["points"] == list(p.points) and d["class"] in {"neg", "a", "b", "c"}
    assert d["labels"] == [OBSERVABLES[i - 1].label for i in p.points]
    c = make_context(GHZ[0]).to_json()
    assert "class" not in c and c["sign"] == 1
