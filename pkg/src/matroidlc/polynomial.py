"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a mapping from exponent vectors (tuples of nonnegative
ints, one slot per variable) to nonzero Fraction coefficients.  Zero
coefficients are dropped on construction, so the zero polynomial is the
empty mapping and equality is plain dict equality.  The canonical term
order used for serialization and printing is ascending total degree with
lexicographic ties.

Matroid generating polynomials follow one fixed variable convention:
variable 0 is the homogenizing variable y and variable i (1-based) is
z_i for ground element i.  For a matroid whose ground set currently has
m elements inside an ambient label space of size n, the independence-set
generating polynomial

    g_M(y, z) = sum over independent I of y^(m - |I|) * prod_{i in I} z_i

is homogeneous of degree m in n + 1 variables.  Contractions keep the
ambient space, which makes d/dz_J g_M and g_{M/J} literally equal as
polynomials rather than equal up to relabeling.
"""

from __future__ import annotations

from fractions import Fraction
from math import perm
from types import MappingProxyType
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, NotHomogeneous
from .linalg import SymmetricMatrix
from .matroid import Matroid


def _as_coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


class SparsePolynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[dict] = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise DimensionMismatch(
                    f"exponent vector {exp} has length {len(exp)}, expected {nvars}"
                )
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _as_coeff(c)
            if c:
                clean[exp] = c
        self.nvars = nvars
        self._terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "SparsePolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "SparsePolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePolynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} outside 0..{nvars - 1}")
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Largest term degree; the zero polynomial reports -1."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self._terms}
        return len(degrees) <= 1

    def homogeneous_degree(self) -> int:
        if not self.is_homogeneous():
            raise NotHomogeneous("polynomial mixes total degrees")
        return self.total_degree()

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def active_variables(self) -> frozenset:
        """Variables with a nonzero partial derivative.

        Monomials differentiate to distinct monomials, so no
        cancellation can hide a variable that appears in some term.
        """
        out = set()
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e:
                    out.add(i)
        return frozenset(out)

    def canonical_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    # -- ring operations --------------------------------------------------

    def _check_same_space(self, other: "SparsePolynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatch(
                f"polynomials in {self.nvars} and {other.nvars} variables"
            )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePolynomial)
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_same_space(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return SparsePolynomial(self.nvars, out)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_coeff(other)
            return SparsePolynomial(self.nvars, {e: c * v for e, v in self._terms.items()})
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check_same_space(other)
        out = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                out[exp] = out.get(exp, Fraction(0)) + ca * cb
        return SparsePolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = SparsePolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.nvars}, {format_polynomial(self)!r})"

    # -- calculus ----------------------------------------------------------

    def partial_derivative(self, index: int) -> "SparsePolynomial":
        if not 0 <= index < self.nvars:
            raise ValueError(f"variable index {index} outside 0..{self.nvars - 1}")
        out = {}
        for exp, c in self._terms.items():
            e = exp[index]
            if e:
                new = list(exp)
                new[index] = e - 1
                out[tuple(new)] = c * e
        return SparsePolynomial(self.nvars, out)

    def directional_derivative(self, direction: Sequence) -> "SparsePolynomial":
        """D_v f = sum_i v_i * d f / d x_i."""
        if len(direction) != self.nvars:
            raise DimensionMismatch(
                f"direction of length {len(direction)} for {self.nvars} variables"
            )
        out = {}
        for i, v in enumerate(direction):
            v = _as_coeff(v)
            if not v:
                continue
            for exp, c in self.partial_derivative(i)._terms.items():
                out[exp] = out.get(exp, Fraction(0)) + v * c
        return SparsePolynomial(self.nvars, out)

    def derivative_multi(self, alpha: Sequence[int]) -> "SparsePolynomial":
        """Mixed derivative d^alpha f with falling-factorial scaling."""
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.nvars:
            raise DimensionMismatch(
                f"multi-index of length {len(alpha)} for {self.nvars} variables"
            )
        if any(a < 0 for a in alpha):
            raise ValueError(f"negative entry in multi-index {alpha}")
        out = {}
        for exp, c in self._terms.items():
            if all(e >= a for e, a in zip(exp, alpha)):
                factor = 1
                for e, a in zip(exp, alpha):
                    if a:
                        factor *= perm(e, a)
                out[tuple(e - a for e, a in zip(exp, alpha))] = c * factor
        return SparsePolynomial(self.nvars, out)

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, point: Sequence):
        """Evaluate at a point; exact for int/Fraction coordinates,
        floating point when given floats."""
        point = tuple(point)
        if len(point) != self.nvars:
            raise DimensionMismatch(
                f"point of length {len(point)} for {self.nvars} variables"
            )
        if not self._terms:
            return Fraction(0)
        maxes = [0] * self.nvars
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e > maxes[i]:
                    maxes[i] = e
        pows = []
        for x, m in zip(point, maxes):
            row = [1]
            for _ in range(m):
                row.append(row[-1] * x)
            pows.append(row)
        total = Fraction(0)
        for exp, c in self._terms.items():
            v = c
            for i, e in enumerate(exp):
                if e:
                    v = v * pows[i][e]
            total = total + v
        return total

    def gradient(self, point: Sequence) -> tuple:
        return tuple(self.partial_derivative(i).evaluate(point) for i in range(self.nvars))

    def hessian(self, point: Sequence) -> SymmetricMatrix:
        """Exact Hessian matrix; the point must be rational."""
        point = tuple(point)
        if len(point) != self.nvars:
            raise DimensionMismatch(
                f"point of length {len(point)} for {self.nvars} variables"
            )
        n = self.nvars
        firsts = [self.partial_derivative(i) for i in range(n)]
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = firsts[i].partial_derivative(j).evaluate(point)
                rows[i][j] = v
                rows[j][i] = v
        return SymmetricMatrix(rows)

    # -- substitution ----------------------------------------------------------

    def substitute_affine(
        self,
        matrix: Sequence[Sequence],
        offset: Sequence,
        nvars_out: Optional[int] = None,
    ) -> "SparsePolynomial":
        """Compose with the affine map x = A u + b.

        ``matrix`` has one row per current variable, one column per new
        variable; ``offset`` has one entry per current variable.  When A
        and b are entrywise nonnegative this substitution preserves
        nonnegativity of coefficients and complete log-concavity.
        """
        rows = [tuple(_as_coeff(x) for x in row) for row in matrix]
        if len(rows) != self.nvars:
            raise DimensionMismatch(f"{len(rows)} matrix rows for {self.nvars} variables")
        if len(offset) != self.nvars:
            raise DimensionMismatch(f"{len(offset)} offsets for {self.nvars} variables")
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise DimensionMismatch("matrix rows have unequal lengths")
        m = widths.pop() if widths else (0 if nvars_out is None else nvars_out)
        if nvars_out is not None and nvars_out != m:
            raise DimensionMismatch(f"matrix has {m} columns but nvars_out={nvars_out}")
        offset = [_as_coeff(x) for x in offset]
        images = []
        for i in range(self.nvars):
            img = {}
            if offset[i]:
                img[(0,) * m] = offset[i]
            for j, a in enumerate(rows[i]):
                if a:
                    exp = [0] * m
                    exp[j] = 1
                    img[tuple(exp)] = a
            images.append(SparsePolynomial(m, img))
        power_cache: dict = {}

        def img_power(i: int, e: int) -> SparsePolynomial:
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = images[i] ** e
            return power_cache[key]

        result = SparsePolynomial.zero(m)
        for exp, c in self._terms.items():
            term = SparsePolynomial.constant(m, c)
            for i, e in enumerate(exp):
                if e:
                    term = term * img_power(i, e)
            result = result + term
        return result


def format_polynomial(f: SparsePolynomial, names: Optional[Sequence[str]] = None) -> str:
    """Readable rendering, leading terms first."""
    if f.is_zero():
        return "0"
    if names is None:
        names = [f"x{i}" for i in range(f.nvars)]
    if len(names) != f.nvars:
        raise DimensionMismatch(f"{len(names)} names for {f.nvars} variables")
    parts = []
    for exp, c in reversed(f.canonical_items()):
        factors = []
        for name, e in zip(names, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        elif c == -1:
            parts.append("-" + "*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    rendered = " + ".join(parts)
    return rendered.replace("+ -", "- ")


def matroid_variable_names(ambient: int) -> tuple:
    return ("y",) + tuple(f"z{i}" for i in range(1, ambient + 1))


# -- matroid generating polynomials -------------------------------------


def independence_polynomial(m: Matroid, limit: Optional[int] = None) -> SparsePolynomial:
    """g_M(y, z) = sum over independent I of y^(|ground| - |I|) z^I.

    Homogeneous of degree |ground| in ambient + 1 variables, every
    coefficient equal to 1.
    """
    degree = m.n_elements
    nv = m.ambient + 1
    terms = {}
    for mask in m.independent_set_masks(limit):
        exp = [0] * nv
        exp[0] = degree - mask.bit_count()
        rest = mask
        while rest:
            bit = rest & -rest
            exp[bit.bit_length()] = 1
            rest ^= bit
        terms[tuple(exp)] = 1
    return SparsePolynomial(nv, terms)


def bases_polynomial(m: Matroid, limit: Optional[int] = None) -> SparsePolynomial:
    """p_M(z) = sum over bases B of z^B, in ambient variables z_1..z_n.

    There is no homogenizing variable here; a rank zero matroid has the
    single basis {} and p_M = 1.
    """
    nv = m.ambient
    r = m.rank
    terms = {}
    for mask in m.independent_set_masks(limit):
        if mask.bit_count() != r:
            continue
        exp = [0] * nv
        rest = mask
        while rest:
            bit = rest & -rest
            exp[bit.bit_length() - 1] = 1
            rest ^= bit
        terms[tuple(exp)] = 1
    return SparsePolynomial(nv, terms)


def bivariate_restriction(m: Matroid, limit: Optional[int] = None) -> SparsePolynomial:
    """f_M(y, z) = sum_k I_k y^(n-k) z^k, the image of g_M under z_i -> z."""
    counts = m.count_independent_by_size(limit)
    n = m.n_elements
    return SparsePolynomial(2, {(n - k, k): c for k, c in enumerate(counts) if c})


# -- JSON ----------------------------------------------------------------


def polynomial_to_json(f: SparsePolynomial) -> dict:
    return {
        "nvars": f.nvars,
        "terms": [
            {"exp": list(exp), "coeff": str(c)} for exp, c in f.canonical_items()
        ],
    }


def polynomial_from_json(obj: dict) -> SparsePolynomial:
    if not isinstance(obj, dict):
        raise ValueError("polynomial description must be a JSON object")
    nvars = int(obj["nvars"])
    terms = {}
    for item in obj["terms"]:
        exp = tuple(int(e) for e in item["exp"])
        coeff = Fraction(str(item["coeff"]))
        terms[exp] = terms.get(exp, Fraction(0)) + coeff
    return SparsePolynomial(nvars, terms)
