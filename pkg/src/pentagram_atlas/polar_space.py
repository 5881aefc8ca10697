"""Lines, Fano planes and contexts of the three-qubit symplectic polar space.

Points are referred to by observable id (1..63) inside every geometric object;
tuples of ids are kept sorted, which fixes the canonical order used in all
outputs.
"""
from __future__ import annotations

import enum
import functools
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    DegeneratePair,
    DuplicatePoint,
    NonCommuting,
    ProductNotScalar,
    UnclassifiablePlane,
)
from .pauli import (
    OBSERVABLES,
    ObservableKind,
    ObservableLike,
    as_observable,
    is_symmetric,
    kind,
    product_sign,
    symplectic_form,
)


class PlaneClass(enum.Enum):
    NEGATIVE = "neg"
    A = "a"  # positive, four negative lines in Pasch position
    B = "b"  # positive, no negative line, one type-A and three type-C points
    C = "c"  # positive, no negative line, three type-A points and one type-C

    @property
    def positive(self) -> bool:
        return self is not PlaneClass.NEGATIVE


def _obs(i: int):
    return OBSERVABLES[i - 1]


def _sum_id(a: int, b: int) -> int:
    """Id of the GF(2) sum of two distinct points."""
    s = _obs(a) + _obs(b)
    return s.id


def _labels(points: Iterable[int]) -> tuple[str, ...]:
    return tuple(_obs(p).label for p in points)


@dataclass(frozen=True)
class IsotropicLine:
    points: tuple[int, int, int]
    sign: int

    @property
    def labels(self) -> tuple[str, ...]:
        return _labels(self.points)

    @property
    def negative(self) -> bool:
        return self.sign < 0


@dataclass(frozen=True)
class Context:
    """Four pairwise commuting observables whose product is +-III."""

    points: tuple[int, int, int, int]
    sign: int

    @property
    def labels(self) -> tuple[str, ...]:
        return _labels(self.points)

    @property
    def negative(self) -> bool:
        return self.sign < 0

    @property
    def mask(self) -> int:
        return _mask(self.points)

    def to_json(self) -> dict:
        return {"points": list(self.points), "labels": list(self.labels), "sign": self.sign}


@dataclass(frozen=True)
class FanoPlane:
    points: tuple[int, ...]
    lines: tuple[IsotropicLine, ...]
    sign: int
    plane_class: PlaneClass

    @property
    def labels(self) -> tuple[str, ...]:
        return _labels(self.points)

    @property
    def negative_lines(self) -> tuple[IsotropicLine, ...]:
        return tuple(line for line in self.lines if line.negative)

    def to_json(self) -> dict:
        return {
            "points": list(self.points),
            "labels": list(self.labels),
            "sign": self.sign,
            "class": self.plane_class.value,
        }


def _mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


@functools.lru_cache(maxsize=None)
def _line(a: int, b: int) -> IsotropicLine:
    pts = tuple(sorted((a, b, _sum_id(a, b))))
    return IsotropicLine(pts, product_sign(_obs(p) for p in pts))


def make_line(a: ObservableLike, b: ObservableLike) -> IsotropicLine:
    """The totally isotropic line through two commuting points."""
    a, b = as_observable(a), as_observable(b)
    if a == b:
        raise DegeneratePair(f"{a.label} twice does not span a line")
    if symplectic_form(a, b):
        raise NonCommuting(f"{a.label} and {b.label} anticommute")
    return _line(*sorted((a.id, b.id)))


def make_context(points: Iterable[ObservableLike]) -> Context:
    obs = [as_observable(p) for p in points]
    if len(obs) != 4:
        raise ValueError(f"a context has 4 points, got {len(obs)}")
    if len(set(obs)) != 4:
        raise DuplicatePoint(f"repeated point in {[o.label for o in obs]}")
    x = z = 0
    for o in obs:
        x ^= o.x
        z ^= o.z
    if x or z:
        raise ProductNotScalar(f"product of {[o.label for o in obs]} is not +-III")
    for a, b in itertools.combinations(obs, 2):
        if symplectic_form(a, b):
            raise NonCommuting(f"{a.label} and {b.label} anticommute")
    ids = tuple(sorted(o.id for o in obs))
    # zero sum with distinct points already excludes a collinear triple
    for a, b, c in itertools.combinations(ids, 3):
        assert _sum_id(a, b) != c
    return Context(ids, product_sign(obs))


def line_at_infinity(c: Context) -> IsotropicLine:
    """The line completing the affine plane ``c`` to its Fano plane."""
    p1, p2, p3, _ = c.points
    return _line(*sorted((_sum_id(p1, p2), _sum_id(p1, p3))))


def _plane_lines(points: tuple[int, ...]) -> tuple[IsotropicLine, ...]:
    lines = {_line(a, b) for a, b in itertools.combinations(points, 2)}
    return tuple(sorted(lines, key=lambda line: line.points))


def _classify(points, lines) -> PlaneClass:
    neg = sum(line.negative for line in lines)
    if neg == 3:
        return PlaneClass.NEGATIVE
    if neg == 4:
        return PlaneClass.A
    if neg == 0:
        census = Counter(kind(_obs(p)) for p in points)
        abc = tuple(census[k] for k in ObservableKind)
        if abc == (1, 3, 3):
            return PlaneClass.B
        if abc == (3, 3, 1):
            return PlaneClass.C
        raise UnclassifiablePlane(f"plane {_labels(points)} has kind census {abc}")
    raise UnclassifiablePlane(f"plane {_labels(points)} has {neg} negative lines")


@functools.lru_cache(maxsize=None)
def _plane(points: tuple[int, ...]) -> FanoPlane:
    lines = _plane_lines(points)
    if len(points) != 7 or len(lines) != 7:
        raise ValueError(f"{_labels(points)} is not a Fano plane")
    sign = product_sign(_obs(p) for p in points)
    return FanoPlane(points, lines, sign, _classify(points, lines))


def fano_plane(points: Iterable[ObservableLike]) -> FanoPlane:
    """Build and classify the plane on seven given points."""
    pts = tuple(sorted(as_observable(p).id for p in points))
    for a, b in itertools.combinations(pts, 2):
        if symplectic_form(_obs(a), _obs(b)):
            raise NonCommuting(f"{_obs(a).label} and {_obs(b).label} anticommute")
    return _plane(pts)


def extend_to_fano(c: Context) -> FanoPlane:
    return _plane(tuple(sorted(c.points + line_at_infinity(c).points)))


def classify_plane(p: FanoPlane) -> PlaneClass:
    """Class from the negative-line count, refined by the point-kind census."""
    return _classify(p.points, p.lines)


def enumerate_lines() -> list[IsotropicLine]:
    """All 315 totally isotropic lines."""
    lines = set()
    for a, b in itertools.combinations(OBSERVABLES, 2):
        if not symplectic_form(a, b):
            lines.add(_line(a.id, b.id))
    return sorted(lines, key=lambda line: line.points)


@functools.lru_cache(maxsize=1)
def _all_planes() -> tuple[FanoPlane, ...]:
    found = set()
    for line in enumerate_lines():
        a, b, _ = line.points
        for o in OBSERVABLES:
            c = o.id
            if c in line.points or any(symplectic_form(_obs(p), o) for p in line.points):
                continue
            span = set(line.points) | {c} | {_sum_id(p, c) for p in line.points}
            found.add(tuple(sorted(span)))
    return tuple(_plane(pts) for pts in sorted(found))


def enumerate_planes() -> list[FanoPlane]:
    """All 135 maximal totally isotropic subspaces, classified."""
    return list(_all_planes())


KLEIN_QUADRIC: frozenset[int] = frozenset(o.id for o in OBSERVABLES if is_symmetric(o))


def on_quadric(points: Iterable[ObservableLike]) -> bool:
    """True iff every given observable is symmetric."""
    return all(as_observable(p).id in KLEIN_QUADRIC for p in points)
