"""Exact rational arithmetic: bivariate polynomials and determinants.

Everything downstream (volumes, generating functions, vertex coordinates)
runs over arbitrary-precision rationals.  A polynomial in the two formal
variables q and t is a dict mapping exponent pairs (deg_q, deg_t) to
nonzero Fraction coefficients; the zero polynomial is the empty dict.
Univariate polynomials (in t alone, or in a renamed variable such as y)
use the same type with deg_q == 0 throughout.

No floating point is used anywhere in this package.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping

Monomial = tuple[int, int]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational of the form "num" or "num/den".

    Decimal notation is rejected on purpose: all command-line and file
    inputs stay exact.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not an exact rational: {text!r} (use e.g. '1/2')")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Render a Fraction as "num/den", or "num" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class BivariatePolynomial:
    """Immutable polynomial in q and t with rational coefficients.

    Canonical form: no zero coefficients are stored, so two polynomials are
    equal exactly when their monomial dicts are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable[tuple[Monomial, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for (dq, dt), coeff in items:
            if dq < 0 or dt < 0:
                raise ValueError(f"negative exponent in monomial ({dq}, {dt})")
            coeff = Fraction(coeff)
            if coeff:
                key = (int(dq), int(dt))
                clean[key] = clean.get(key, Fraction(0)) + coeff
                if not clean[key]:
                    del clean[key]
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def constant(cls, c) -> "BivariatePolynomial":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, deg_q: int, deg_t: int, coeff=1) -> "BivariatePolynomial":
        return cls({(deg_q, deg_t): Fraction(coeff)})

    @classmethod
    def var_q(cls) -> "BivariatePolynomial":
        return cls.monomial(1, 0)

    @classmethod
    def var_t(cls) -> "BivariatePolynomial":
        return cls.monomial(0, 1)

    @classmethod
    def one_plus_t_power(cls, k: int) -> "BivariatePolynomial":
        """(1 + t)**k expanded by the binomial theorem."""
        if k < 0:
            raise ValueError("negative power")
        return cls({(0, i): Fraction(math.comb(k, i)) for i in range(k + 1)})

    # -- inspection ---------------------------------------------------

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Monomials sorted lexicographically by (deg_q, deg_t)."""
        return sorted(self._terms.items())

    def coefficient(self, deg_q: int, deg_t: int) -> Fraction:
        return self._terms.get((deg_q, deg_t), Fraction(0))

    def restrict_q_power(self, deg_q: int) -> "BivariatePolynomial":
        """The coefficient of q**deg_q, as a polynomial in t."""
        return BivariatePolynomial(
            {(0, dt): c for (dq, dt), c in self._terms.items() if dq == deg_q}
        )

    def degree_q(self) -> int:
        return max((dq for dq, _ in self._terms), default=0)

    def degree_t(self) -> int:
        return max((dt for _, dt in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "BivariatePolynomial":
        other = _coerce(other)
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            acc = out.get(key, Fraction(0)) + coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        result = BivariatePolynomial.zero()
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        result = BivariatePolynomial.zero()
        result._terms = {key: -coeff for key, coeff in self._terms.items()}
        return result

    def __sub__(self, other) -> "BivariatePolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "BivariatePolynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "BivariatePolynomial":
        other = _coerce(other)
        out: dict[Monomial, Fraction] = {}
        for (aq, at), ca in self._terms.items():
            for (bq, bt), cb in other._terms.items():
                key = (aq + bq, at + bt)
                acc = out.get(key, Fraction(0)) + ca * cb
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        result = BivariatePolynomial.zero()
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivariatePolynomial":
        if exponent < 0:
            raise ValueError("negative power")
        result = BivariatePolynomial.constant(1)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- evaluation and substitution ------------------------------------

    def evaluate(self, q, t) -> Fraction:
        """Exact evaluation at rational q and t."""
        q = Fraction(q)
        t = Fraction(t)
        total = Fraction(0)
        for (dq, dt), coeff in self._terms.items():
            total += coeff * q**dq * t**dt
        return total

    def substitute(self, q=None, t=None) -> "BivariatePolynomial":
        """Substitute rational values for q and/or t; None keeps the variable."""
        out = BivariatePolynomial.zero()
        for (dq, dt), coeff in self._terms.items():
            c = coeff
            if q is not None:
                c *= Fraction(q) ** dq
                dq = 0
            if t is not None:
                c *= Fraction(t) ** dt
                dt = 0
            out += BivariatePolynomial.monomial(dq, dt, c)
        return out

    def compose_t(self, replacement: "BivariatePolynomial") -> "BivariatePolynomial":
        """Substitute a polynomial for the t variable (q left untouched)."""
        out = BivariatePolynomial.zero()
        powers: dict[int, BivariatePolynomial] = {0: BivariatePolynomial.constant(1)}
        for (dq, dt), coeff in sorted(self._terms.items()):
            if dt not in powers:
                dt_max = max(powers)
                acc = powers[dt_max]
                for k in range(dt_max + 1, dt + 1):
                    acc = acc * replacement
                    powers[k] = acc
            out += BivariatePolynomial.monomial(dq, 0, coeff) * powers[dt]
        return out

    # -- serialization --------------------------------------------------

    def to_json_obj(self) -> list:
        """[[deg_q, deg_t, "num/den"], ...] sorted lexicographically."""
        return [[dq, dt, format_rational(c)] for (dq, dt), c in self.terms()]

    @classmethod
    def from_json_obj(cls, obj) -> "BivariatePolynomial":
        return cls({(int(dq), int(dt)): parse_rational(str(c)) for dq, dt, c in obj})

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (dq, dt), coeff in self.terms():
            factors = []
            if coeff != 1 or (dq == 0 and dt == 0):
                factors.append(format_rational(coeff))
            if dq:
                factors.append("q" if dq == 1 else f"q^{dq}")
            if dt:
                factors.append("t" if dt == 1 else f"t^{dt}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def _coerce(value) -> BivariatePolynomial:
    if isinstance(value, BivariatePolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return BivariatePolynomial.constant(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to polynomial")


# ----------------------------------------------------------------------
# Exact linear algebra
# ----------------------------------------------------------------------


class RationalMatrix:
    """Rectangular matrix of Fractions; determinant defined when square."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if self.rows:
            width = len(self.rows[0])
            if any(len(row) != width for row in self.rows):
                raise ValueError("ragged matrix")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)


def determinant(matrix) -> Fraction:
    """Exact determinant via rational Gaussian elimination.

    Accepts a RationalMatrix or a plain sequence of rows.
    """
    rows = matrix.rows if isinstance(matrix, RationalMatrix) else matrix
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix of dimension >= 1")
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col]), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            det = -det
        pivot = m[col][col]
        det *= pivot
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] / pivot
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def matrix_rank(rows: Iterable[Iterable]) -> int:
    """Rank of a rational matrix, by Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    n_cols = len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                factor = m[r][col] / pivot
                for c in range(col, n_cols):
                    m[r][c] -= factor * m[rank][c]
        rank += 1
        if rank == len(m):
            break
    return rank


def solve_linear_system(a_rows, b_vec) -> tuple[Fraction, ...] | None:
    """Solve A x = b exactly for square A; None when A is singular."""
    n = len(a_rows)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(a_rows, b_vec)]
    if any(len(row) != n + 1 for row in m):
        raise ValueError("system shape mismatch")
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col]), None)
        if pivot_row is None:
            return None
        m[col], m[pivot_row] = m[pivot_row], m[col]
        pivot = m[col][col]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col] / pivot
                for c in range(col, n + 1):
                    m[r][c] -= factor * m[col][c]
    return tuple(m[i][n] / m[i][i] for i in range(n))


# ----------------------------------------------------------------------
# Random-cluster polynomial -> Tutte polynomial conversion
# ----------------------------------------------------------------------


def tutte_from_z(z: BivariatePolynomial, nodes: int) -> BivariatePolynomial:
    """Convert the spanning-subgraph sum Z_G(q, t) of a connected graph on
    `nodes` nodes into its Tutte polynomial T_G(x, y).

    Substitutes q -> (x-1)(y-1) and t -> (y-1), then divides by
    (y-1)**(nodes-1).  The intermediate Laurent step is handled by working
    in the variable u = y - 1 and shifting degrees down at the end; a
    nonzero residue below u**(nodes-1) means the input was not the
    spanning-subgraph sum of a connected graph.

    In the result the first exponent slot holds x and the second holds y.
    """
    if nodes < 1:
        raise ValueError("nodes must be >= 1")
    shift = nodes - 1
    # Accumulate sum c * (x-1)^dq * u^(dq+dt) as a polynomial in (x, u).
    in_x_u = BivariatePolynomial.zero()
    x_minus_1 = BivariatePolynomial.var_q() - 1
    for (dq, dt), coeff in z.terms():
        term = (x_minus_1**dq) * BivariatePolynomial.monomial(0, dq + dt, coeff)
        in_x_u = in_x_u + term
    shifted: dict[Monomial, Fraction] = {}
    for (dx, du), coeff in in_x_u.terms():
        if du < shift:
            raise ValueError(
                "nonzero residue below the cancellation degree: "
                "input is not the spanning-subgraph sum of a connected graph"
            )
        shifted[(dx, du - shift)] = coeff
    # Substitute u = y - 1 back.
    y_minus_1 = BivariatePolynomial.var_t() - 1
    out = BivariatePolynomial.zero()
    for (dx, du), coeff in sorted(shifted.items()):
        out += BivariatePolynomial.monomial(dx, 0, coeff) * (y_minus_1**du)
    return out


def z_from_tutte(tutte: BivariatePolynomial, n: int) -> BivariatePolynomial:
    """Expand t**n * T(1 + q/t, 1 + t) as an exact polynomial in (q, t).

    For the Tutte polynomial of a connected graph on n+1 nodes the x-degree
    is at most n, so each monomial x**a y**b contributes
    t**(n-a) * (t+q)**a * (1+t)**b and no negative powers of t occur.
    """
    t_plus_q = BivariatePolynomial.var_t() + BivariatePolynomial.var_q()
    out = BivariatePolynomial.zero()
    for (a, b), coeff in tutte.terms():
        if a > n:
            raise ValueError(f"x-degree {a} exceeds {n}")
        term = BivariatePolynomial.monomial(0, n - a, coeff)
        term = term * t_plus_q**a * BivariatePolynomial.one_plus_t_power(b)
        out += term
    return out
