"""Dense 8x8 matrix arithmetic over the Gaussian integers.

Used only to cross-check the symbolic phase bookkeeping; entries are
``(re, im)`` integer pairs so the check stays exact.
"""
from __future__ import annotations

from typing import Iterable

from .pauli import PauliObservable

Entry = tuple[int, int]
Matrix = list[list[Entry]]

_ZERO = (0, 0)
_SINGLE = {
    "I": [[(1, 0), _ZERO], [_ZERO, (1, 0)]],
    "X": [[_ZERO, (1, 0)], [(1, 0), _ZERO]],
    "Y": [[_ZERO, (0, -1)], [(0, 1), _ZERO]],
    "Z": [[(1, 0), _ZERO], [_ZERO, (-1, 0)]],
}


def _mul(a: Entry, b: Entry) -> Entry:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def kron(a: Matrix, b: Matrix) -> Matrix:
    return [[_mul(x, y) for x in ra for y in rb] for ra in a for rb in b]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            re = im = 0
            for k in range(n):
                if a[i][k] != _ZERO and b[k][j] != _ZERO:
                    x = _mul(a[i][k], b[k][j])
                    re += x[0]
                    im += x[1]
            row.append((re, im))
        out.append(row)
    return out


def identity() -> Matrix:
    return [[(1, 0) if i == j else _ZERO for j in range(8)] for i in range(8)]


def matrix(o: PauliObservable) -> Matrix:
    m = [[(1, 0)]]
    for letter in o.label:
        m = kron(m, _SINGLE[letter])
    return m


def product(observables: Iterable[PauliObservable]) -> Matrix:
    m = None
    for o in observables:
        m = matrix(o) if m is None else matmul(m, matrix(o))
    return m


def identity_multiple(m: Matrix) -> Entry | None:
    """The scalar ``c`` if ``m == c * I``, else None."""
    c = m[0][0]
    for i, row in enumerate(m):
        for j, e in enumerate(row):
            if e != (c if i == j else _ZERO):
                return None
    return c


def scalar_sign(observables: Iterable[PauliObservable]) -> int | None:
    """+1 or -1 if the product is +-III, otherwise None."""
    c = identity_multiple(product(observables))
    return {(1, 0): 1, (-1, 0): -1}.get(c)


def commute(a: PauliObservable, b: PauliObservable) -> bool:
    ma, mb = matrix(a), matrix(b)
    return matmul(ma, mb) == matmul(mb, ma)
