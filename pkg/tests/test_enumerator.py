import itertools
import json
from collections import Counter

import pytest

from matrix_oracle import commutes, scalar_sign
from pentagram_atlas import enumerator
from pentagram_atlas.cache import DATA_FILE, META_FILE, dumps_pentagrams, load_or_build, read_cache, write_cache
from pentagram_atlas.enumerator import (
    ContextGraph,
    enumerate_contexts,
    enumerate_pentagrams,
    pentagrams_from_keys,
    pentagrams_on_quadric,
    validate_pentagram,
)
from pentagram_atlas.errors import BadIntersection, EvenParity, EvenParityConfigurationFound, RepeatedMeetPoint
from pentagram_atlas.pauli import OBSERVABLES
from pentagram_atlas.polar_space import Context, KLEIN_QUADRIC, extend_to_fano, make_context, on_quadric

from conftest import GHZ


def test_context_count_brute_force():
    vec = {o.id: (o.x << 3) | o.z for o in OBSERVABLES}
    found = []
    for combo in itertools.combinations(range(1, 64), 4):
        a, b, c, d = (vec[i] for i in combo)
        if a ^ b ^ c ^ d:
            continue
        labels = [OBSERVABLES[i - 1].label for i in combo]
        if all(commutes(u, v) for u, v in itertools.combinations(labels, 2)):
            found.append(combo)
    assert len(found) == 945
    assert found == [c.points for c in enumerate_contexts()]


def test_contexts_validate_and_sign_census():
    contexts = enumerate_contexts()
    for c in contexts:
        assert make_context(c.points) == c
    # frozen on first verified run
    assert Counter(c.sign for c in contexts) == {1: 621, -1: 324}


def test_context_graph():
    g = ContextGraph()
    assert len(g) == 945
    for i, nbrs in enumerate(g.adjacency):
        assert i not in nbrs
        for j in nbrs:
            assert i in g.adjacency[j]
    sizes = Counter((g.masks[i] & g.masks[j]).bit_count() for i in range(0, 945, 37) for j in range(945))
    assert set(sizes) <= {0, 1, 2, 4}


def test_pentagram_count(pentagrams):
    assert len(pentagrams) == 12096
    assert len({p.key for p in pentagrams}) == 12096
    assert [p.key for p in pentagrams] == sorted(p.key for p in pentagrams)


def test_family_split(pentagrams):
    families = Counter(p.negative_context_count for p in pentagrams)
    assert (families[5], families[3], families[1]) == (108, 4104, 7884)


def test_ghz_pentagram_enumerated(pentagrams, ghz):
    assert ghz.key in {p.key for p in pentagrams}
    assert ghz.negative_context_count == 1
    assert [scalar_sign(c) for c in GHZ].count(-1) == 1


def test_degree_regularity(pentagrams):
    for p in pentagrams:
        assert len(p.points) == 10
        assert set(Counter(i for c in p.contexts for i in c.points).values()) == {2}
        for a, b in itertools.combinations(p.contexts, 2):
            assert len(set(a.points) & set(b.points)) == 1


def test_validate_ghz(ghz):
    assert ghz.negative_context_count == 1
    assert validate_pentagram(reversed(ghz.contexts)) == ghz


def test_validate_five_contexts_of_one_plane():
    c = make_context(GHZ[-1])
    plane = extend_to_fano(c)
    in_plane = [x for x in enumerate_contexts() if set(x.points) <= set(plane.points)][:5]
    with pytest.raises(BadIntersection):
        validate_pentagram(in_plane)


def test_validate_disjoint_context():
    contexts = [make_context(c) for c in GHZ[:4]] + [make_context(["ZII", "IZI", "IIZ", "ZZZ"])]
    with pytest.raises(BadIntersection):
        validate_pentagram(contexts)


def test_validate_repeated_meet_point():
    xii = OBSERVABLES[31].id
    through = [c for c in enumerate_contexts() if xii in c.points]
    # five contexts through XII meeting pairwise only there
    for five in itertools.combinations(through, 5):
        if all(len(set(a.points) & set(b.points)) == 1 for a, b in itertools.combinations(five, 2)):
            break
    else:
        pytest.fail("no star of contexts found")
    with pytest.raises(RepeatedMeetPoint):
        validate_pentagram(five)


def test_validate_even_parity(ghz):
    flipped = list(ghz.contexts)
    flipped[0] = Context(flipped[0].points, -flipped[0].sign)
    with pytest.raises(EvenParity):
        validate_pentagram(flipped)


def test_search_rejects_even_configurations(monkeypatch):
    real = enumerator._contexts()
    tampered = (Context(real[0].points, -real[0].sign),) + real[1:]
    monkeypatch.setattr(enumerator, "_contexts", lambda: tampered)
    with pytest.raises(EvenParityConfigurationFound):
        enumerate_pentagrams(threads=1)


def test_parallel_matches_serial(pentagrams):
    assert enumerate_pentagrams(threads=2) == pentagrams


def test_quadric_pentagrams(pentagrams, ghz):
    quadric = pentagrams_on_quadric(pentagrams)
    assert len(quadric) == 336
    assert all(on_quadric(p.points) for p in quadric)
    assert ghz not in quadric
    assert all(KLEIN_QUADRIC.issuperset(p.points) for p in quadric)


def test_cache_round_trip(tmp_path, pentagrams):
    write_cache(tmp_path, pentagrams)
    assert read_cache(tmp_path) == pentagrams
    meta = json.loads((tmp_path / META_FILE).read_text())
    assert meta["count"] == 12096 and meta["families"] == {"5": 108, "3": 4104, "1": 7884}
    records = json.loads((tmp_path / DATA_FILE).read_text())
    assert records[0] == pentagrams[0].to_json()
    assert pentagrams_from_keys(r["contexts"] for r in records) == pentagrams


def test_cache_hash_mismatch_triggers_rebuild(tmp_path, pentagrams):
    write_cache(tmp_path, pentagrams[:3])
    data = tmp_path / DATA_FILE
    data.write_bytes(data.read_bytes().replace(b'"neg":1', b'"neg":3', 1))
    assert read_cache(tmp_path) is None
    rebuilt, fresh = load_or_build(tmp_path, threads=1)
    assert fresh and rebuilt == pentagrams
    assert data.read_bytes() == dumps_pentagrams(pentagrams)
    assert load_or_build(tmp_path)[1] is False


def test_cache_dir_env(monkeypatch, tmp_path):
    from pentagram_atlas.cache import resolve_cache_dir

    monkeypatch.setenv("PENTAGRAM_ATLAS_CACHE", str(tmp_path))
    assert resolve_cache_dir() == tmp_path
    assert resolve_cache_dir("elsewhere").name == "elsewhere"
    monkeypatch.delenv("PENTAGRAM_ATLAS_CACHE")
    assert str(resolve_cache_dir()) == "cache"
