"""Exact symmetric matrices over the rationals.

The one nontrivial algorithm here is the negative semidefiniteness test.
It runs a symmetric Gaussian elimination on -Q with exact Fraction
arithmetic, so the verdict carries no floating point doubt.  A zero
pivot is legal only when its entire remaining row is zero; any other
failure yields a rational witness vector v with v^T Q v > 0 which is
re-verified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import ConsistencyError, DimensionMismatch


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact arithmetic requires int or Fraction entries, got {type(x).__name__}")


class SymmetricMatrix:
    """Immutable symmetric matrix with exact rational entries."""

    __slots__ = ("dim", "_rows")

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(_as_fraction(x) for x in row) for row in rows)
        dim = len(rows)
        for row in rows:
            if len(row) != dim:
                raise DimensionMismatch(f"expected {dim} columns, got {len(row)}")
        for i in range(dim):
            for j in range(i + 1, dim):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
        self.dim = dim
        self._rows = rows

    @classmethod
    def zeros(cls, dim: int) -> "SymmetricMatrix":
        return cls([[0] * dim for _ in range(dim)])

    @classmethod
    def outer(cls, v: Sequence) -> "SymmetricMatrix":
        """Rank one matrix v v^T."""
        v = [_as_fraction(x) for x in v]
        return cls([[a * b for b in v] for a in v])

    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, SymmetricMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"SymmetricMatrix([{body}])"

    def __add__(self, other: "SymmetricMatrix") -> "SymmetricMatrix":
        self._check_dim(other)
        return SymmetricMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: "SymmetricMatrix") -> "SymmetricMatrix":
        self._check_dim(other)
        return SymmetricMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def scaled(self, c) -> "SymmetricMatrix":
        c = _as_fraction(c)
        return SymmetricMatrix([[c * x for x in row] for row in self._rows])

    def _check_dim(self, other: "SymmetricMatrix") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")

    def matvec(self, v: Sequence) -> tuple:
        if len(v) != self.dim:
            raise DimensionMismatch(f"expected vector of length {self.dim}, got {len(v)}")
        v = [_as_fraction(x) for x in v]
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self._rows)

    def quad(self, v: Sequence) -> Fraction:
        """Quadratic form v^T Q v."""
        w = self.matvec(v)
        return sum((_as_fraction(a) * b for a, b in zip(v, w)), Fraction(0))

    def restricted(self, indices: Sequence[int]) -> "SymmetricMatrix":
        """Principal submatrix on the given index list, in the given order."""
        return SymmetricMatrix([[self._rows[i][j] for j in indices] for i in indices])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def to_float_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self._rows], dtype=float)

    def to_json_rows(self) -> list:
        return [[str(x) for x in row] for row in self._rows]


@dataclass(frozen=True)
class NsdResult:
    """Outcome of a negative semidefiniteness test.

    ``witness`` is set exactly when the test fails and is a primitive
    integer vector with witness^T Q witness > 0.
    """

    is_nsd: bool
    witness: Optional[tuple]

    def __bool__(self) -> bool:
        return self.is_nsd


def _primitive(v: Iterable[Fraction]) -> tuple:
    """Scale a rational vector to coprime integers (sign preserved)."""
    v = list(v)
    lcm = 1
    for x in v:
        d = x.denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)

def is_negative_semidefinite(q: SymmetricMatrix) -> NsdResult:
    """Exact NSD test with a re-verified counterexample on failure.

    Works on P = -Q.  Positive pivots are eliminated symmetrically; the
    running congruence P_t = E P E^T is tracked so that a failure vector
    w for P_t lifts to v = E^T w for the original matrix.  A vanishing
    pivot with a nonzero off-diagonal entry c at column j gives the
    indefinite 2x2 block [[0, c], [c, b]], defeated by
    w = -(b+1)/(2c) e_k + e_j which has w^T P w = -1.
    """
    d = q.dim
    p = [[-x for x in row] for row in q.rows()]
    e = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]

    def lift(w):
        v = [Fraction(0)] * d
        for i, wi in enumerate(w):
            if wi:
                row = e[i]
                for m in range(d):
                    v[m] += wi * row[m]
        witness = _primitive(v)
        if q.quad(witness) <= 0:
            raise ConsistencyError("NSD witness failed its own re-check")
        return witness

    for k in range(d):
        pivot = p[k][k]
        if pivot < 0:
            w = [Fraction(0)] * d
            w[k] = Fraction(1)
            return NsdResult(False, lift(w))
        if pivot == 0:
            bad = next((j for j in range(k + 1, d) if p[k][j] != 0), None)
            if bad is None:
                continue
            c = p[k][bad]
            b = p[bad][bad]
            w = [Fraction(0)] * d
            w[k] = -(b + 1) / (2 * c)
            w[bad] = Fraction(1)
            return NsdResult(False, lift(w))
        lam = [p[i][k] / pivot for i in range(k + 1, d)]
        for off, li in enumerate(lam):
            if li == 0:
                continue
            i = k + 1 + off
            prow, krow = p[i], p[k]
            for j in range(k, d):
                prow[j] -= li * krow[j]
            erow, ekrow = e[i], e[k]
            for j in range(d):
                erow[j] -= li * ekrow[j]
        for j in range(k + 1, d):
            p[k][j] = Fraction(0)
    return NsdResult(True, None)


def float_eigenvalues(q: SymmetricMatrix) -> list:
    """Eigenvalues in ascending order, floating point (diagnostic only)."""
    if q.dim == 0:
        return []
    return [float(x) for x in np.linalg.eigvalsh(q.to_float_array())]
