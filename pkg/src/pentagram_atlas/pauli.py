"""Exact arithmetic in the factored three-qubit Pauli group.

An observable is stored as two 3-bit integers ``x`` and ``z`` (qubit 1 is the
most significant bit).  The letter on qubit ``j`` is decoded from
``(x_j, z_j)``: (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y.  Every observable stands
for its literal tensor product with phase +1, and all signs in the package are
relative to those representatives.

Numeric ids use the per-qubit code I=0, Z=1, X=2, Y=3, so that
``id = 16*code(q1) + 4*code(q2) + code(q3)`` runs over 1..63.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import IdentityNotAPoint, LabelError

NQUBITS = 3
LETTERS = "IZXY"  # indexed by per-qubit code

# (left code, right code) -> (result code, exponent of i)
_MUL = {
    (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
    (1, 0): (1, 0), (1, 1): (0, 0), (1, 2): (3, 1), (1, 3): (2, 3),
    (2, 0): (2, 0), (2, 1): (3, 3), (2, 2): (0, 0), (2, 3): (1, 1),
    (3, 0): (3, 0), (3, 1): (2, 1), (3, 2): (1, 3), (3, 3): (0, 0),
}


class ObservableKind(enum.Enum):
    A = "A"  # two identity letters
    B = "B"  # one identity letter
    C = "C"  # no identity letter


_KIND_BY_IDENTITY_COUNT = {2: ObservableKind.A, 1: ObservableKind.B, 0: ObservableKind.C}


@dataclass(frozen=True)
class Phase:
    """A global phase ``i**k``."""

    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 4)

    @property
    def is_real(self) -> bool:
        return self.k % 2 == 0

    @property
    def sign(self) -> int:
        if not self.is_real:
            raise ValueError(f"phase i^{self.k} is not real")
        return 1 if self.k == 0 else -1

    def __mul__(self, other: "Phase") -> "Phase":
        return Phase(self.k + other.k)

    def __str__(self):
        return ("+1", "+i", "-1", "-i")[self.k]


@dataclass(frozen=True)
class PauliObservable:
    """A nontrivial element of the factored three-qubit Pauli group."""

    x: int
    z: int

    def __post_init__(self):
        if not (0 <= self.x < 8 and 0 <= self.z < 8):
            raise LabelError(f"x and z must be 3-bit vectors, got x={self.x}, z={self.z}")
        if self.x == 0 and self.z == 0:
            raise IdentityNotAPoint("III is not a point of the polar space")

    def codes(self) -> tuple[int, int, int]:
        """Per-qubit codes (I=0, Z=1, X=2, Y=3), qubit 1 first."""
        shifts = range(NQUBITS - 1, -1, -1)
        return tuple(2 * ((self.x >> s) & 1) + ((self.z >> s) & 1) for s in shifts)

    @property
    def id(self) -> int:
        c1, c2, c3 = self.codes()
        return 16 * c1 + 4 * c2 + c3

    @property
    def label(self) -> str:
        return "".join(LETTERS[c] for c in self.codes())

    @property
    def kind(self) -> ObservableKind:
        return kind(self)

    @property
    def symmetric(self) -> bool:
        return is_symmetric(self)

    @classmethod
    def from_id(cls, i: int) -> "PauliObservable":
        if not 1 <= i <= 63:
            raise LabelError(f"observable id must lie in 1..63, got {i}")
        x = z = 0
        for shift in (4, 2, 0):
            c = (i >> shift) & 3
            x = (x << 1) | (c >> 1)
            z = (z << 1) | (c & 1)
        return cls(x, z)

    def __add__(self, other: "PauliObservable") -> "PauliObservable | None":
        """GF(2) sum; ``None`` stands for the identity."""
        x, z = self.x ^ other.x, self.z ^ other.z
        return None if x == 0 and z == 0 else PauliObservable(x, z)

    def __str__(self):
        return self.label

    def __repr__(self):
        return f"PauliObservable({self.label!r})"


ObservableLike = Union[PauliObservable, int, str]


def parse(label: str) -> PauliObservable:
    """Turn a three-letter label such as ``"XYZ"`` into an observable."""
    if not isinstance(label, str) or len(label) != NQUBITS:
        raise LabelError(f"expected a 3-letter label over IXYZ, got {label!r}")
    x = z = 0
    for ch in label.upper():
        c = LETTERS.find(ch)
        if c < 0:
            raise LabelError(f"bad letter {ch!r} in label {label!r}")
        x = (x << 1) | (c >> 1)
        z = (z << 1) | (c & 1)
    if x == 0 and z == 0:
        raise IdentityNotAPoint("III is the identity, not a point of the polar space")
    return PauliObservable(x, z)


def format(o: PauliObservable) -> str:  # noqa: A001
    return o.label


def as_observable(o: ObservableLike) -> PauliObservable:
    """Accept an observable, a numeric id or a label."""
    if isinstance(o, PauliObservable):
        return o
    if isinstance(o, str):
        return parse(o)
    if isinstance(o, int) and not isinstance(o, bool):
        return PauliObservable.from_id(o)
    raise TypeError(f"cannot interpret {o!r} as an observable")


def all_observables() -> list[PauliObservable]:
    """The 63 points, in id order."""
    return list(OBSERVABLES)


def symplectic_form(a: PauliObservable, b: PauliObservable) -> int:
    """0 if the two observables commute, 1 if they anticommute."""
    return (bin(a.x & b.z).count("1") + bin(b.x & a.z).count("1")) & 1


def commute(a: PauliObservable, b: PauliObservable) -> bool:
    return symplectic_form(a, b) == 0


def signed_product(observables: Iterable[PauliObservable]) -> tuple[PauliObservable | None, Phase]:
    """Multiply representatives in the given order.

    Returns the resulting observable (``None`` for the identity) and the
    accumulated phase.
    """
    observables = list(observables)
    if not observables:
        raise ValueError("signed_product needs at least one observable")
    acc = [0] * NQUBITS
    k = 0
    for o in observables:
        for q, c in enumerate(o.codes()):
            acc[q], e = _MUL[acc[q], c]
            k += e
    i = 16 * acc[0] + 4 * acc[1] + acc[2]
    return (PauliObservable.from_id(i) if i else None), Phase(k)


def product_sign(observables: Iterable[PauliObservable]) -> int:
    """Sign of a product that is known to be ``+-III``."""
    rest, phase = signed_product(observables)
    if rest is not None:
        raise ValueError(f"product is {rest.label}, not a scalar")
    return phase.sign


def kind(o: PauliObservable) -> ObservableKind:
    return _KIND_BY_IDENTITY_COUNT[o.codes().count(0)]


def is_symmetric(o: PauliObservable) -> bool:
    """True iff the representative matrix is symmetric (even number of Y)."""
    return bin(o.x & o.z).count("1") % 2 == 0


OBSERVABLES: tuple[PauliObservable, ...] = tuple(PauliObservable.from_id(i) for i in range(1, 64))
