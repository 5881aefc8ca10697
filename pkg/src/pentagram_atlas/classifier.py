"""Type signatures of pentagrams and the 45-row atlas.

A signature is the 8-tuple (C-, O_A, O_B, O_C, F-, F+a, F+b, F+c): negative
contexts, observables of each kind, and the classes of the five Fano planes
the contexts extend to.  Type numbers are never derived; they come from the
golden transcription in ``golden/table1.csv``.
"""
from __future__ import annotations

import csv
import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, NamedTuple, Sequence

from .enumerator import Pentagram
from .errors import MissingType, UnknownSignature
from .pauli import OBSERVABLES, ObservableKind, kind
from .polar_space import KLEIN_QUADRIC, PlaneClass, extend_to_fano

CSV_COLUMNS = ["T", "C-", "O_A", "O_B", "O_C", "F-", "F+a", "F+b", "F+c", "K"]


class TypeSignature(NamedTuple):
    c_neg: int
    o_a: int
    o_b: int
    o_c: int
    f_neg: int
    f_a: int
    f_b: int
    f_c: int


@dataclass(frozen=True)
class AtlasRow:
    t: int
    signature: TypeSignature
    k: int
    n: int | None = None  # multiplicity; absent from the golden table

    def csv_row(self) -> list[int]:
        row = [self.t, *self.signature, self.k]
        return row if self.n is None else row + [self.n]

    def to_json(self) -> dict:
        d = {"T": self.t, "signature": list(self.signature), "K": self.k}
        if self.n is not None:
            d["N"] = self.n
            d["derived"] = True
        return d

    @classmethod
    def from_json(cls, d: dict) -> "AtlasRow":
        return cls(d["T"], TypeSignature(*d["signature"]), d["K"], d.get("N"))


class ContextKind(NamedTuple):
    sign: int
    plane_class: PlaneClass


def load_table1(path: str | Path | None = None) -> list[AtlasRow]:
    """Read the golden type-table transcription."""
    if path is None:
        text = resources.files(__package__).joinpath("golden/table1.csv").read_text()
    else:
        text = Path(path).read_text()
    rows = []
    for rec in csv.DictReader(text.splitlines()):
        vals = [int(rec[c]) for c in CSV_COLUMNS]
        rows.append(AtlasRow(vals[0], TypeSignature(*vals[1:9]), vals[9]))
    return rows


def signature(p: Pentagram) -> TypeSignature:
    kinds = Counter(kind(OBSERVABLES[i - 1]) for i in p.points)
    planes = Counter(extend_to_fano(c).plane_class for c in p.contexts)
    return TypeSignature(
        p.negative_context_count,
        kinds[ObservableKind.A],
        kinds[ObservableKind.B],
        kinds[ObservableKind.C],
        planes[PlaneClass.NEGATIVE],
        planes[PlaneClass.A],
        planes[PlaneClass.B],
        planes[PlaneClass.C],
    )


def type_index(golden: Sequence[AtlasRow]) -> dict[TypeSignature, int]:
    return {row.signature: row.t for row in golden}


def build_atlas(pentagrams: Iterable[Pentagram], golden: Sequence[AtlasRow] | None = None) -> list[AtlasRow]:
    """Group pentagrams by signature and match the groups against the type table.

    Rows come back in golden order with computed K (pentagrams whose points
    are all symmetric) and multiplicity N.
    """
    golden = load_table1() if golden is None else golden
    counts: Counter[TypeSignature] = Counter()
    klein: Counter[TypeSignature] = Counter()
    for p in pentagrams:
        s = signature(p)
        counts[s] += 1
        if KLEIN_QUADRIC.issuperset(p.points):
            klein[s] += 1
    known = type_index(golden)
    unknown = sorted(set(counts) - set(known))
    if unknown:
        raise UnknownSignature(f"signatures absent from the type table: {[tuple(s) for s in unknown]}")
    missing = sorted(row.t for row in golden if row.signature not in counts)
    if missing:
        raise MissingType(f"types never realized: {missing}")
    return [AtlasRow(row.t, row.signature, klein[row.signature], counts[row.signature]) for row in golden]


@dataclass
class KleinCensus:
    counts: dict[int, int]
    expected: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def realized_types(self) -> set[int]:
        return {t for t, k in self.counts.items() if k > 0}

    @property
    def missing_types(self) -> set[int]:
        return {t for t, k in self.counts.items() if k == 0}

    @property
    def mismatches(self) -> dict[int, tuple[int, int]]:
        """type -> (expected, computed) wherever the two disagree."""
        return {t: (self.expected[t], k) for t, k in self.counts.items() if self.expected.get(t) != k}


def klein_census(atlas: Sequence[AtlasRow], quadric_pentagrams: Iterable[Pentagram],
                 golden: Sequence[AtlasRow] | None = None) -> KleinCensus:
    """Per-type counts of quadric pentagrams, compared with the K column."""
    golden = load_table1() if golden is None else golden
    types = type_index(atlas)
    counts = {row.t: 0 for row in atlas}
    for p in quadric_pentagrams:
        counts[types[signature(p)]] += 1
    return KleinCensus(counts, {row.t: row.k for row in golden})


class PentagramIndex:
    """Lookup of pentagrams by the pairs of contexts they contain."""

    def __init__(self, pentagrams: Sequence[Pentagram]):
        self.pentagrams = list(pentagrams)
        self.position = {p.key: i for i, p in enumerate(self.pentagrams)}
        self.by_pair: dict[tuple, list[int]] = defaultdict(list)
        for i, p in enumerate(self.pentagrams):
            for a, b in itertools.combinations(p.key, 2):
                self.by_pair[a, b].append(i)

    def neighbors(self, p: Pentagram) -> list[Pentagram]:
        own = set(p.key)
        found = set()
        for a, b in itertools.combinations(p.key, 2):
            found.update(self.by_pair.get((a, b), ()))
        found.discard(self.position.get(p.key))
        hits = [self.pentagrams[i] for i in sorted(found)]
        return [q for q in hits if len(own & set(q.key)) == 2]


def two_edge_neighbors(p: Pentagram, pentagrams: Sequence[Pentagram] | PentagramIndex) -> list[Pentagram]:
    """Pentagrams other than ``p`` sharing exactly two of its contexts."""
    if isinstance(pentagrams, PentagramIndex):
        return pentagrams.neighbors(p)
    own = set(p.key)
    return [q for q in pentagrams if q.key != p.key and len(own & set(q.key)) == 2]


def context_kinds(p: Pentagram) -> list[ContextKind]:
    return [ContextKind(c.sign, extend_to_fano(c).plane_class) for c in p.contexts]


def context_kind_census(pentagrams: Iterable[Pentagram]) -> set[ContextKind]:
    seen = set()
    for p in pentagrams:
        seen.update(context_kinds(p))
    return seen


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    counterexamples: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f": {self.detail}" if self.detail else "")


def _check_each(name: str, items, predicate: Callable, limit: int = 5) -> Check:
    bad = [x for x in items if not predicate(x)]
    detail = f"{len(bad)} counterexamples" if bad else ""
    return Check(name, not bad, detail, bad[:limit])


def _type_set(name: str, got: set[int], expected: set[int]) -> Check:
    ok = got == expected
    return Check(f"{name} {sorted(expected)}", ok, "" if ok else f"got {sorted(got)}")


def structural_suite(pentagrams: Sequence[Pentagram], golden: Sequence[AtlasRow] | None = None) -> list[Check]:
    """The fine-structure observations about pentagram types, each checked
    over every pentagram (or every realized type, where the claim is about
    types)."""
    golden = load_table1() if golden is None else golden
    types = type_index(golden)
    sigs = [(p, signature(p)) for p in pentagrams]
    realized = {types[s]: s for _, s in sigs}

    def kind_of(i):
        return kind(OBSERVABLES[i - 1])

    def b_pairs(item):
        p, _ = item
        return all(sum(kind_of(i) is ObservableKind.B for i in c.points) != 1 for c in p.contexts)

    def three_a_on_edge(item):
        p, s = item
        if s.o_a != 3 or types[s] in (41, 42):
            return True
        a_points = {i for i in p.points if kind_of(i) is ObservableKind.A}
        return any(a_points <= set(c.points) for c in p.contexts)

    def b_and_c_without_a(item):
        _, s = item
        if s.f_b > 0 and s.f_c > 0 and s.f_a == 0:
            return s.c_neg == 1 or types[s] == 12
        return True

    def all_three_positive(item):
        _, s = item
        if s.f_a and s.f_b and s.f_c:
            return (s.o_a and s.o_b and s.o_c) or types[s] == 19
        return True

    checks = [
        _check_each("type-C floor/gap: O_C >= 2 and O_C != 8", sigs, lambda it: it[1].o_c >= 2 and it[1].o_c != 8),
        _check_each("type-B band: O_B in {0,4,5}", sigs, lambda it: it[1].o_b in (0, 4, 5)),
        _check_each("type-B pairing: no context holds exactly one type-B point", sigs, b_pairs),
        _check_each("three type-A points share a context (except types 41, 42)", sigs, three_a_on_edge),
        _check_each("type-A ceiling: O_A <= 6", sigs, lambda it: it[1].o_a <= 6),
        _check_each("b and c planes without a imply C- = 1 (except type 12)", sigs, b_and_c_without_a),
        _check_each("no type-A point implies no c plane", sigs, lambda it: it[1].o_a > 0 or it[1].f_c == 0),
        _check_each("all three positive classes imply all three kinds (except type 19)", sigs, all_three_positive),
    ]
    all_neg = {t for t, s in realized.items() if s.f_neg == 5}
    all_pos = {t for t, s in realized.items() if s.f_neg == 0}
    c_only = {t for t, s in realized.items() if s.f_a == 0 and s.f_b == 0 and s.f_c > 0}
    equal = {t for t, s in realized.items() if s.f_a == s.f_b == s.f_c != 0}
    checks += [
        _type_set("all planes negative exactly for types", all_neg, {1, 4}),
        _type_set("all planes positive exactly for types", all_pos, {41, 42}),
        _type_set("positive planes of class c only exactly for types", c_only, {13, 27, 45}),
        _type_set("equally represented positive classes exactly for types", equal, {15, 32}),
    ]
    return checks
