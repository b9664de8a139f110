"""Polytope constructions over exact rationals at fixed parameters (q, t).

Five polytope families are built as H-representations (each inequality is
an affine form required to be >= 0):

* cayley:   1 <= x_i <= 2 x_{i-1}            (x_0 = 1)
* tcayley:  1 <= x_i <= (1+t) x_{i-1}
* tutte:    x_n >= 1-q  and, for 1 <= j <= i <= n,
            q x_i <= q (1+t) x_{i-1} - t (1-q)(1 - x_{j-1})
* tgayley:  the tutte system at q = 1
* gayley:   the tutte system at q = 1, t = 1

The simplices attached to labeled forests and the subdivision pieces
attached to plane forests are driven by the node coordinates

    root at NFS position l:      t (x_l - 1 + q)
    non-root at position i:      (q x_i - (1-q)(1-x_l)) / (1+t)^j - (x_l - 1 + q)

with x_0 = 1, j the node's cane-path count and l the position of its
component root.  Setting q = 1 recovers the one-parameter constructions,
and additionally t = 1 the classical ones.

All geometry here is at fixed rational parameter values; symbolic claims
live in the volumes module as closed-form polynomials.  Comparison of
polytopes is by point set (membership, vertex sets), never by literal
inequality lists, which are kept unnormalized as generated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import format_rational, parse_rational
from .forests import LabeledForest, NodeCoordinate, PlaneForest

FAMILIES = ("cayley", "gayley", "tcayley", "tgayley", "tutte")

Point = tuple[Fraction, ...]


class ParameterDomainError(ValueError):
    """A parameter lies outside the family's admissible domain."""


class DimensionError(ValueError):
    """Mismatched dimensions between geometric objects."""


# ----------------------------------------------------------------------
# Affine forms, H-representations, simplices
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class AffineForm:
    """constant + sum(coefficients[i] * x_{i+1}), evaluated exactly."""

    constant: Fraction
    coefficients: tuple[Fraction, ...]

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != len(self.coefficients):
            raise DimensionError("point/form dimension mismatch")
        total = self.constant
        for a, x in zip(self.coefficients, point):
            if a:
                total += a * x
        return total

    def __add__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(
            self.constant + other.constant,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __sub__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(
            self.constant - other.constant,
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def scaled(self, factor: Fraction) -> "AffineForm":
        factor = Fraction(factor)
        return AffineForm(self.constant * factor, tuple(a * factor for a in self.coefficients))

    @staticmethod
    def constant_form(dimension: int, value) -> "AffineForm":
        return AffineForm(Fraction(value), (Fraction(0),) * dimension)

    @staticmethod
    def linear(dimension: int, index: int, coeff=1, constant=0) -> "AffineForm":
        """constant + coeff * x_index (index is 1-based)."""
        coeffs = [Fraction(0)] * dimension
        coeffs[index - 1] = Fraction(coeff)
        return AffineForm(Fraction(constant), tuple(coeffs))


@dataclass(frozen=True)
class HRep:
    """Finite system of affine inequalities form(x) >= 0 in R^dimension."""

    dimension: int
    inequalities: tuple[AffineForm, ...]

    def contains(self, point: Sequence[Fraction], strict: bool = False) -> bool:
        if len(point) != self.dimension:
            raise DimensionError("point dimension mismatch")
        for form in self.inequalities:
            value = form.evaluate(point)
            if value < 0 or (strict and value == 0):
                return False
        return True

    def to_text(self) -> str:
        lines = [f"{self.dimension} {len(self.inequalities)}"]
        for form in self.inequalities:
            parts = [format_rational(form.constant)]
            parts.extend(format_rational(a) for a in form.coefficients)
            lines.append(" ".join(parts))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "HRep":
        lines = [line for line in text.splitlines() if line.strip()]
        dim, count = (int(x) for x in lines[0].split())
        forms = []
        for line in lines[1 : count + 1]:
            values = [parse_rational(x) for x in line.split()]
            if len(values) != dim + 1:
                raise ValueError("row width mismatch")
            forms.append(AffineForm(values[0], tuple(values[1:])))
        return cls(dim, tuple(forms))

    def to_json_obj(self) -> dict:
        return {
            "dimension": self.dimension,
            "inequalities": [
                [format_rational(f.constant)] + [format_rational(a) for a in f.coefficients]
                for f in self.inequalities
            ],
        }


def contains(hrep: HRep, point: Sequence[Fraction], strict: bool = False) -> bool:
    return hrep.contains(point, strict=strict)


@dataclass(frozen=True)
class Simplex:
    """dimension+1 affinely independent points in R^dimension."""

    dimension: int
    vertices: tuple[Point, ...]

    def __post_init__(self):
        if len(self.vertices) != self.dimension + 1:
            raise DimensionError("a simplex in R^n needs exactly n+1 vertices")
        if any(len(v) != self.dimension for v in self.vertices):
            raise DimensionError("vertex dimension mismatch")

    def to_text(self) -> str:
        lines = [f"{self.dimension} {len(self.vertices)}"]
        for v in self.vertices:
            lines.append(" ".join(format_rational(x) for x in v))
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "dimension": self.dimension,
            "vertices": [[format_rational(x) for x in v] for v in self.vertices],
        }


def vrep_to_text(points: Iterable[Point], dimension: int) -> str:
    pts = list(points)
    lines = [f"{dimension} {len(pts)}"]
    for v in pts:
        lines.append(" ".join(format_rational(x) for x in v))
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# Parameter handling
# ----------------------------------------------------------------------


def _check_t(t) -> Fraction:
    t = Fraction(t)
    if t <= 0:
        raise ParameterDomainError(f"t must be positive, got {t}")
    return t


def _check_q(q, allow_one=True) -> Fraction:
    q = Fraction(q)
    if q <= 0 or q > 1 or (not allow_one and q == 1):
        hi = "1" if allow_one else "1 (exclusive)"
        raise ParameterDomainError(f"q must lie in (0, {hi}], got {q}")
    return q


def family_parameters(family: str, q=None, t=None) -> tuple[Fraction, Fraction]:
    """Effective (q, t) for a family; fixed values override the arguments."""
    if family not in FAMILIES:
        raise ParameterDomainError(f"unknown family {family!r}")
    if family == "cayley":
        return Fraction(1), Fraction(1)
    if family == "gayley":
        return Fraction(1), Fraction(1)
    if family == "tcayley" or family == "tgayley":
        return Fraction(1), _check_t(1 if t is None else t)
    return _check_q(1 if q is None else q), _check_t(1 if t is None else t)


# ----------------------------------------------------------------------
# H-representations of the five families
# ----------------------------------------------------------------------


def build_hrep(family: str, n: int, q=None, t=None) -> HRep:
    """H-representation of the requested family in R^n."""
    if family not in FAMILIES:
        raise ParameterDomainError(f"unknown family {family!r}")
    if n < 1:
        raise ParameterDomainError("n must be >= 1")
    q_eff, t_eff = family_parameters(family, q, t)
    if family in ("cayley", "tcayley"):
        return _chain_hrep_lower_one(n, t_eff)
    return _tutte_hrep(n, q_eff, t_eff)


def _chain_hrep_lower_one(n: int, t: Fraction) -> HRep:
    """1 <= x_i <= (1+t) x_{i-1} with x_0 = 1."""
    w = 1 + t
    rows = []
    for i in range(1, n + 1):
        rows.append(AffineForm.linear(n, i, 1, -1))  # x_i - 1 >= 0
        if i == 1:
            rows.append(AffineForm.linear(n, 1, -1, w))  # (1+t) - x_1 >= 0
        else:
            upper = AffineForm.linear(n, i - 1, w) - AffineForm.linear(n, i, 1)
            rows.append(upper)
    return HRep(n, tuple(rows))


def _tutte_hrep(n: int, q: Fraction, t: Fraction) -> HRep:
    """q x_i <= q(1+t) x_{i-1} - t(1-q)(1-x_{j-1}) for j <= i, plus x_n >= 1-q."""
    w = 1 + t
    rows = []
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            # q(1+t) x_{i-1} - t(1-q)(1 - x_{j-1}) - q x_i >= 0, x_0 = 1.
            coeffs = [Fraction(0)] * n
            const = Fraction(0)
            if i == 1:
                const += q * w
            else:
                coeffs[i - 2] += q * w
            const -= t * (1 - q)
            if j == 1:
                const += t * (1 - q)
            else:
                coeffs[j - 2] += t * (1 - q)
            coeffs[i - 1] -= q
            rows.append(AffineForm(const, tuple(coeffs)))
    rows.append(AffineForm.linear(n, n, 1, -(1 - q)))
    return HRep(n, tuple(rows))


# ----------------------------------------------------------------------
# Simplices of the triangulations
# ----------------------------------------------------------------------


def simplex_for_forest(f: LabeledForest, q, t) -> Simplex:
    """The simplex attached to a labeled forest on n+1 nodes, in R^n.

    Vertices come in closed form: vertex p (p = 1..n+1) puts the chain
    coordinates of labels below p at their 0-end and the rest at the
    qt-end.  Concretely, with w = 1+t and r the maximal label of a node's
    component:

      root at position l:       x_l = 1 if p <= r else 1-q
      non-root at position i:   x_i = w^(j+1) if p <= label,
                                      w^j     if label < p <= r,
                                      1-q     if p > r.
    """
    q = _check_q(q)
    t = _check_t(t)
    n = f.node_count - 1
    w = 1 + t
    coords = f.coordinates()
    powers = [Fraction(1)]
    for _ in range(f.node_count + 1):
        powers.append(powers[-1] * w)
    one_minus_q = 1 - q
    vertices = []
    for p in range(1, f.node_count + 1):
        x: list[Fraction] = [Fraction(0)] * n
        for label, rec in coords.items():
            if rec.position == 0:
                continue
            r = rec.root_label
            if rec.is_root:
                x[rec.position - 1] = Fraction(1) if p <= r else one_minus_q
            elif p <= label:
                x[rec.position - 1] = powers[rec.cane_exponent + 1]
            elif p <= r:
                x[rec.position - 1] = powers[rec.cane_exponent]
            else:
                x[rec.position - 1] = one_minus_q
        vertices.append(tuple(x))
    return Simplex(n, tuple(vertices))


def _coordinate_form(rec: NodeCoordinate, n: int, q: Fraction, t: Fraction) -> AffineForm:
    """The node's chain coordinate as an affine form on R^n."""
    if rec.position == 0:
        return AffineForm.constant_form(n, q * t)
    if rec.is_root:
        return AffineForm.linear(n, rec.position, t, -t * (1 - q))
    wj = (1 + t) ** rec.cane_exponent
    coeffs = [Fraction(0)] * n
    coeffs[rec.position - 1] = q / wj
    const = (1 - q) - (1 - q) / wj
    if rec.root_position == 0:
        const += (1 - q) / wj - 1  # x_l = 1 collapses into the constant
    else:
        coeffs[rec.root_position - 1] += (1 - q) / wj - 1
    return AffineForm(const, tuple(coeffs))


def forest_chain_hrep(f: LabeledForest, q, t) -> HRep:
    """The defining chain of the forest's simplex, as an H-representation.

    Rows: c(1) >= 0 and c(k+1) - c(k) >= 0 for the label-ordered chain of
    node coordinates; c(n+1) is the constant qt.
    """
    q = _check_q(q)
    t = _check_t(t)
    n = f.node_count - 1
    coords = f.coordinates()
    forms = [_coordinate_form(coords[label], n, q, t) for label in range(1, f.node_count + 1)]
    rows = [forms[0]]
    for k in range(f.node_count - 1):
        rows.append(forms[k + 1] - forms[k])
    return HRep(n, tuple(rows))


# ----------------------------------------------------------------------
# Subdivision pieces
# ----------------------------------------------------------------------


def piece_for_plane_forest(pf: PlaneForest, q, t) -> HRep:
    """The subdivision piece of a plane forest on n+1 nodes, in R^n.

    Per-node chains: for a node with successors v_1..v_k (left to right)
    in a component rooted at w,  0 <= c(v_1) <= ... <= c(v_k) <= c(w);
    for the roots w_1..w_m (left to right),  0 <= c(w_m) <= ... <= c(w_1)
    with c(w_1) = qt constant.
    """
    q = _check_q(q)
    t = _check_t(t)
    n = pf.node_count() - 1
    coords, _, children, root_positions = pf.nfs_structure()
    forms = [_coordinate_form(rec, n, q, t) for rec in coords]
    rows: list[AffineForm] = []
    for u in range(pf.node_count()):
        kids = children.get(u, ())
        if not kids:
            continue
        root_form = forms[coords[u].root_position]
        rows.append(forms[kids[0]])
        for a, b in zip(kids, kids[1:]):
            rows.append(forms[b] - forms[a])
        rows.append(root_form - forms[kids[-1]])
    if len(root_positions) > 1:
        rows.append(forms[root_positions[-1]])
        for a, b in zip(root_positions, root_positions[1:]):
            rows.append(forms[a] - forms[b])
    return HRep(n, tuple(rows))


def product(a: HRep, b: HRep) -> HRep:
    """Cartesian product; b's variables are shifted after a's."""
    dim = a.dimension + b.dimension
    rows = [AffineForm(f.constant, f.coefficients + (Fraction(0),) * b.dimension) for f in a.inequalities]
    rows += [AffineForm(f.constant, (Fraction(0),) * a.dimension + f.coefficients) for f in b.inequalities]
    return HRep(dim, tuple(rows))


def cone(p: HRep) -> HRep:
    """Cone with apex 0 and base {1} x P: 0 <= x_0 <= 1, x in x_0 * P."""
    return cone_q(p, 1)


def cone_q(p: HRep, q) -> HRep:
    """Skew cone with apex (1-q, ..., 1-q) and base {1} x P.

    A point (x_0, x) belongs iff 1-q <= x_0 <= 1 and
    q*x lies in (x_0 - 1 + q) P + (1-q)(1-x_0) * (1, ..., 1).
    Each row b + a.y >= 0 of P linearizes to
    b (x_0 - 1 + q) + sum_i a_i (q x_i - (1-q)(1-x_0)) >= 0,
    which for bounded P describes the closed cone exactly.
    """
    q = _check_q(q)
    dim = p.dimension + 1
    rows = [
        AffineForm.linear(dim, 1, 1, -(1 - q)),  # x_0 >= 1-q
        AffineForm.linear(dim, 1, -1, 1),  # x_0 <= 1
    ]
    for form in p.inequalities:
        s = sum(form.coefficients, Fraction(0))
        const = form.constant * (q - 1) - (1 - q) * s
        coeffs = [form.constant + (1 - q) * s]
        coeffs.extend(q * a for a in form.coefficients)
        rows.append(AffineForm(const, tuple(coeffs)))
    return HRep(dim, tuple(rows))


def piece_for_plane_forest_via_cones(pf: PlaneForest, q, t) -> HRep:
    """The same piece assembled as D_1 x cone_q(D_2 x cone_q(D_3 x ...)).

    Each D_p is the one-component piece of the p-th plane tree at q = 1
    (its chain coordinates never mention q); the skew cones then reinstate
    the q-dependence.  Must describe the same point set as the direct
    construction.
    """
    q = _check_q(q)
    t = _check_t(t)
    trees = [PlaneForest((tree,)) for tree in pf.trees]
    current = _tree_piece_t(trees[-1], t)
    for tree in reversed(trees[:-1]):
        current = product(_tree_piece_t(tree, t), cone_q(current, q))
    return current


def _tree_piece_t(tree_pf: PlaneForest, t: Fraction) -> HRep:
    return piece_for_plane_forest(tree_pf, 1, t)


# ----------------------------------------------------------------------
# Orthoschemes
# ----------------------------------------------------------------------


def orthoscheme_vertices(lengths: Sequence[Fraction]) -> list[Point]:
    """Prefix points (l_1, ..., l_k, 0, ..., 0) for k = 0..n."""
    lengths = [Fraction(x) for x in lengths]
    n = len(lengths)
    points = []
    for k in range(n + 1):
        points.append(tuple(lengths[:k]) + (Fraction(0),) * (n - k))
    return points


def orthoscheme(lengths: Sequence[Fraction]) -> Simplex:
    verts = orthoscheme_vertices(lengths)
    return Simplex(len(verts) - 1, tuple(verts))
