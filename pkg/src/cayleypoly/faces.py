"""Closed-form vertex sets, vertex-facet incidence, and f-vectors.

Facets are detected from the known vertex sets by a contact-rank test
(an inequality is a facet iff the vertices it touches span an affine
space of dimension n-1); the face lattice is the intersection closure of
the facet contact sets.  No linear programming is involved: ranks are
computed exactly over the rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import HRep, ParameterDomainError, Point, build_hrep

# ----------------------------------------------------------------------
# Vertex sets
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class VertexSet:
    points: tuple[Point, ...]
    provenance: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("vertex set contains duplicate points")


def _binary_chain_point(n: int, choose_upper: int, t: Fraction) -> list[Fraction]:
    """x_i = (1+t) x_{i-1} when bit i-1 is set, else 1 (x_0 = 1)."""
    w = 1 + t
    x: list[Fraction] = []
    prev = Fraction(1)
    for i in range(1, n + 1):
        prev = w * prev if choose_upper >> (i - 1) & 1 else Fraction(1)
        x.append(prev)
    return x


def cayley_vertices(n: int, t) -> VertexSet:
    """The 2^n vertices given by the binary choice x_i in {1, (1+t) x_{i-1}}."""
    t = Fraction(t)
    if t <= 0:
        raise ParameterDomainError("t must be positive")
    points = []
    provenance = []
    for mask in range(1 << n):
        points.append(tuple(_binary_chain_point(n, mask, t)))
        provenance.append(_mask_name(mask, n))
    return VertexSet(tuple(points), tuple(provenance))


def tutte_vertices(n: int, q, t) -> VertexSet:
    """The 2^n vertices: binary chain points with the maximal suffix of
    coordinates equal to 1 replaced by 1-q (all-ones becomes all 1-q)."""
    q = Fraction(q)
    t = Fraction(t)
    if not 0 < q < 1:
        raise ParameterDomainError("q must lie strictly between 0 and 1")
    if t <= 0:
        raise ParameterDomainError("t must be positive")
    points = []
    provenance = []
    for mask in range(1 << n):
        x = _binary_chain_point(n, mask, t)
        i = n
        while i > 0 and x[i - 1] == 1:
            x[i - 1] = 1 - q
            i -= 1
        points.append(tuple(x))
        provenance.append(_mask_name(mask, n))
    return VertexSet(tuple(points), tuple(provenance))


def _mask_name(mask: int, n: int) -> str:
    inside = ",".join(str(i) for i in range(1, n + 1) if mask >> (i - 1) & 1)
    return "S={" + inside + "}"


# ----------------------------------------------------------------------
# Face lattice
# ----------------------------------------------------------------------


class InconsistentGeometryError(ValueError):
    """A supposed vertex violates the H-representation."""


@dataclass(frozen=True)
class FaceLattice:
    dimension: int
    facets: tuple[frozenset[int], ...]
    faces_by_dim: dict[int, tuple[frozenset[int], ...]]
    f_vector: tuple[int, ...]


def _integer_points(points: Sequence[Point]) -> list[tuple[int, ...]]:
    scale = 1
    for p in points:
        for x in p:
            scale = scale * x.denominator // math.gcd(scale, x.denominator)
    return [tuple(int(x * scale) for x in p) for p in points]


def _affine_dim(int_points: list[tuple[int, ...]]) -> int:
    """Dimension of the affine hull, by integer echelon elimination."""
    if not int_points:
        return -1
    base = int_points[0]
    echelon: list[list[int]] = []  # rows with strictly increasing pivot columns
    width = len(base)
    for p in int_points[1:]:
        row = [a - b for a, b in zip(p, base)]
        for er in echelon:
            pivot = next(c for c in range(width) if er[c])
            if row[pivot]:
                factor_r, factor_e = er[pivot], row[pivot]
                row = [x * factor_r - y * factor_e for x, y in zip(row, er)]
        if any(row):
            echelon.append(row)
            echelon.sort(key=lambda r: next(c for c in range(width) if r[c]))
        if len(echelon) == width:
            break
    return len(echelon)


def face_lattice(vertices: VertexSet, hrep: HRep) -> FaceLattice:
    """Vertex-index face lattice from the known vertex set and H-rep.

    Every point must satisfy every inequality; facets are the contact
    sets of affine dimension n-1, faces their intersection closure,
    graded by affine dimension.  The f-vector lists (f_0, ..., f_{n-1}).
    """
    n = hrep.dimension
    points = vertices.points
    if any(len(p) != n for p in points):
        raise InconsistentGeometryError("vertex dimension mismatch")
    contact_masks = []
    for form in hrep.inequalities:
        mask = 0
        for idx, p in enumerate(points):
            value = form.evaluate(p)
            if value < 0:
                raise InconsistentGeometryError(
                    f"point {idx} violates an inequality by {value}"
                )
            if value == 0:
                mask |= 1 << idx
        contact_masks.append(mask)
    int_points = _integer_points(points)

    def dim_of(mask: int) -> int:
        return _affine_dim([int_points[i] for i in range(len(points)) if mask >> i & 1])

    facet_masks = sorted(
        {m for m in contact_masks if m and dim_of(m) == n - 1}
    )
    faces: dict[int, int] = {}
    frontier = list(facet_masks)
    for mask in frontier:
        faces[mask] = dim_of(mask)
    while frontier:
        new: list[int] = []
        for mask in frontier:
            for facet in facet_masks:
                meet = mask & facet
                if meet and meet not in faces:
                    faces[meet] = dim_of(meet)
                    new.append(meet)
        frontier = new
    f_vector = [0] * n
    faces_by_dim: dict[int, list[frozenset[int]]] = {d: [] for d in range(n)}
    for mask, dim in faces.items():
        f_vector[dim] += 1
        faces_by_dim[dim].append(frozenset(i for i in range(len(points)) if mask >> i & 1))
    return FaceLattice(
        dimension=n,
        facets=tuple(frozenset(i for i in range(len(points)) if m >> i & 1) for m in facet_masks),
        faces_by_dim={d: tuple(sorted(v, key=sorted)) for d, v in faces_by_dim.items()},
        f_vector=tuple(f_vector),
    )


def tutte_f_vector(n: int, q, t) -> tuple[int, ...]:
    vs = tutte_vertices(n, q, t)
    hrep = build_hrep("tutte", n, q, t)
    return face_lattice(vs, hrep).f_vector


# ----------------------------------------------------------------------
# Edge/2-face count formulas and their verification
# ----------------------------------------------------------------------


def edge_count_formula(n: int) -> int:
    """Observed edge count of the 2-parameter polytope: 3(n-1) 2^(n-2) + 1."""
    return 3 * (n - 1) * 2 ** (n - 2) + 1 if n >= 2 else 0


def two_face_count_formula(n: int) -> int:
    """Observed 2-face count: 2^(n-5) (9 n^2 - 29 n + 38) - 1."""
    value = Fraction(9 * n * n - 29 * n + 38) * Fraction(2) ** (n - 5) - 1
    if value.denominator != 1:
        raise ArithmeticError(f"formula not integral at n={n}")
    return value.numerator


@dataclass(frozen=True)
class ConjectureRow:
    n: int
    q: Fraction
    t: Fraction
    edges_computed: int
    edges_formula: int
    two_faces_computed: int
    two_faces_formula: int

    @property
    def matches(self) -> bool:
        return (
            self.edges_computed == self.edges_formula
            and self.two_faces_computed == self.two_faces_formula
        )


def conjecture_check(n_max: int, samples=((Fraction(1, 2), Fraction(1)),)) -> list[ConjectureRow]:
    """Compare computed f_1 and f_2 against the closed formulas for n = 2..n_max.

    At n = 2 the polytope is two-dimensional and its single top face is
    counted as the one 2-face, matching the formula's degenerate value.
    """
    if n_max > 7:
        raise ValueError("n_max above 7 is not supported at desk scale")
    rows = []
    for n in range(2, n_max + 1):
        for q, t in samples:
            f = tutte_f_vector(n, q, t)
            two_faces = f[2] if n >= 3 else 1
            rows.append(
                ConjectureRow(
                    n=n,
                    q=Fraction(q),
                    t=Fraction(t),
                    edges_computed=f[1],
                    edges_formula=edge_count_formula(n),
                    two_faces_computed=two_faces,
                    two_faces_formula=two_face_count_formula(n),
                )
            )
    return rows


# ----------------------------------------------------------------------
# Separation certificate
# ----------------------------------------------------------------------


def vertices_are_extreme(vertices: VertexSet, hrep: HRep) -> bool:
    """True when no point lies in the convex hull of the others.

    Certificate: for every ordered pair (a, b) some valid inequality is
    tight at a and strictly positive at b.  If a were a convex combination
    of the rest with a positive weight on b, that inequality would be
    tight at a yet positive on the combination.
    """
    values = [
        [form.evaluate(p) for p in vertices.points] for form in hrep.inequalities
    ]
    if any(v < 0 for row in values for v in row):
        raise InconsistentGeometryError("a point violates the H-representation")
    count = len(vertices.points)
    for a in range(count):
        for b in range(count):
            if a == b:
                continue
            if not any(row[a] == 0 and row[b] > 0 for row in values):
                return False
    return True
