"""End-to-end verification jobs: triangulations, subdivisions, refinement,
specializations, and NFS fiber checks.

Partition certificates are statistical but exact: seeded rational sample
points (bounded denominators, linear congruential stream) are drawn from
the interior of the polytope, any sample touching a boundary hyperplane
of a candidate cell is discarded and regenerated, and each surviving
sample must lie strictly inside exactly one cell.  Combined with the
exact volume-sum identities and vertex containment this certifies the
partitions at desk scale; no pairwise intersection LP is attempted.

Every job is deterministic given (kind, family, n, parameters, seed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .exact import BivariatePolynomial, format_rational, solve_linear_system
from .forests import (
    LabeledForest,
    PlaneForest,
    cane_edges,
    catalan,
    enumerate_labeled_forests,
    enumerate_plane_forests,
    enumerate_plane_trees,
    nfs,
    shape,
)
from .geometry import (
    HRep,
    Point,
    build_hrep,
    family_parameters,
    forest_chain_hrep,
    orthoscheme_vertices,
    piece_for_plane_forest,
    piece_for_plane_forest_via_cones,
    simplex_for_forest,
)
from .graphs import LabeledGraph, component_count, enumerate_graphs
from .volumes import (
    closed_form_piece_volume,
    closed_form_simplex_volume,
    connected_gf,
    family_total_polynomial,
    simplex_volume_scaled,
    specialize_for_family,
    z_bruteforce,
)

DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 20240605
VERIFY_MAX_N = 5


@dataclass
class VerificationReport:
    kind: str
    family: Optional[str]
    n: int
    q: Optional[Fraction]
    t: Optional[Fraction]
    seed: Optional[int]
    passed: bool
    checks: dict = field(default_factory=dict)
    counterexample: Optional[dict] = None

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "family": self.family,
            "n": self.n,
            "q": None if self.q is None else format_rational(self.q),
            "t": None if self.t is None else format_rational(self.t),
            "seed": self.seed,
            "passed": self.passed,
            "checks": self.checks,
            "counterexample": self.counterexample,
        }


# ----------------------------------------------------------------------
# Seeded rational sampling
# ----------------------------------------------------------------------


class RationalLCG:
    """Deterministic rational stream in (0, 1) with bounded denominators."""

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MODULUS = 1 << 64

    def __init__(self, seed: int, denominator: int = 257):
        self.state = seed & (self.MODULUS - 1)
        self.denominator = denominator

    def next_unit(self) -> Fraction:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) % self.MODULUS
        k = 1 + (self.state >> 16) % (self.denominator - 1)
        return Fraction(k, self.denominator)


def sample_interior_point(family: str, n: int, q: Fraction, t: Fraction, rng: RationalLCG) -> Point:
    """One exact rational point strictly inside the family polytope.

    Coordinates are drawn left to right, each strictly between its lower
    bound and the minimum of its currently active upper bounds.
    """
    w = 1 + t
    lower_one = family in ("cayley", "tcayley")
    x: list[Fraction] = []
    for i in range(1, n + 1):
        prev = x[i - 2] if i >= 2 else Fraction(1)
        if family in ("cayley", "tcayley", "gayley", "tgayley"):
            lo = Fraction(1) if lower_one else Fraction(0)
            hi = w * prev
        else:
            lo = 1 - q
            hi = min(
                (q * w * prev - t * (1 - q) * (1 - (x[j - 2] if j >= 2 else Fraction(1)))) / q
                for j in range(1, i + 1)
            )
        r = rng.next_unit()
        x.append(lo + r * (hi - lo))
    return tuple(x)


# ----------------------------------------------------------------------
# Brute-force vertex enumeration (test oracle, desk scale only)
# ----------------------------------------------------------------------


def enumerate_hrep_vertices(hrep: HRep) -> tuple[Point, ...]:
    """All vertices of a (bounded) H-rep by solving every n-subset of
    tight inequalities; intended for small n only."""
    n = hrep.dimension
    if n == 0:
        return ((),)
    found: set[Point] = set()
    rows = hrep.inequalities
    for subset in combinations(range(len(rows)), n):
        a = [rows[k].coefficients for k in subset]
        b = [-rows[k].constant for k in subset]
        solution = solve_linear_system(a, b)
        if solution is None:
            continue
        if hrep.contains(solution):
            found.add(solution)
    return tuple(sorted(found))


# ----------------------------------------------------------------------
# Cells per family
# ----------------------------------------------------------------------


def family_forests(family: str, n: int) -> list[LabeledForest]:
    trees_only = family in ("cayley", "tcayley")
    return list(enumerate_labeled_forests(n + 1, trees_only=trees_only))


def family_plane_forests(family: str, n: int) -> list[PlaneForest]:
    if family in ("cayley", "tcayley"):
        return list(enumerate_plane_trees(n + 1))
    return list(enumerate_plane_forests(n + 1))


class _IntCells:
    """Integer-cleared inequality systems for fast exact sign sweeps."""

    def __init__(self, hreps: list[HRep]):
        self.cells = []
        for hrep in hreps:
            rows = []
            for form in hrep.inequalities:
                denom = form.constant.denominator
                for a in form.coefficients:
                    denom = denom * a.denominator // math.gcd(denom, a.denominator)
                rows.append(
                    (
                        int(form.constant * denom),
                        tuple(int(a * denom) for a in form.coefficients),
                    )
                )
            self.cells.append(rows)

    def classify(self, numerators: tuple[int, ...], denominator: int, index: int) -> int:
        """+1 strictly inside, 0 inside touching a boundary, -1 outside."""
        touched = False
        for b, coeffs in self.cells[index]:
            value = b * denominator
            for c, p in zip(coeffs, numerators):
                if c:
                    value += c * p
            if value < 0:
                return -1
            if value == 0:
                touched = True
        return 0 if touched else 1


def _point_to_ints(point: Point) -> tuple[tuple[int, ...], int]:
    denom = 1
    for x in point:
        denom = denom * x.denominator // math.gcd(denom, x.denominator)
    return tuple(int(x * denom) for x in point), denom


def _partition_certificate(
    family: str,
    n: int,
    q: Fraction,
    t: Fraction,
    hreps: list[HRep],
    samples: int,
    seed: int,
) -> dict:
    """Draw interior samples; each generic one must be in exactly one cell."""
    cells = _IntCells(hreps)
    rng = RationalLCG(seed)
    accepted = 0
    discarded = 0
    failure = None
    attempts_left = 60 * samples
    while accepted < samples and attempts_left > 0:
        attempts_left -= 1
        point = sample_interior_point(family, n, q, t, rng)
        numerators, denominator = _point_to_ints(point)
        inside = 0
        generic = True
        for idx in range(len(hreps)):
            status = cells.classify(numerators, denominator, idx)
            if status == 0:
                generic = False
                break
            if status == 1:
                inside += 1
        if not generic:
            discarded += 1
            continue
        accepted += 1
        if inside != 1:
            failure = {
                "point": [format_rational(x) for x in point],
                "cells_containing": inside,
            }
            break
    return {
        "samples": accepted,
        "discarded_non_generic": discarded,
        "ok": failure is None and accepted == samples,
        "failure": failure,
    }


# ----------------------------------------------------------------------
# Verification jobs
# ----------------------------------------------------------------------


def _expected_cell_volume(family: str, n: int) -> BivariatePolynomial:
    return family_total_polynomial(family, n)


def verify_triangulation(
    family: str,
    n: int,
    q=None,
    t=None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Check the simplicial decomposition of one family polytope."""
    if n > VERIFY_MAX_N:
        raise ValueError(f"full triangulation checks are desk scale: n <= {VERIFY_MAX_N}")
    q_eff, t_eff = family_parameters(family, q, t)
    polytope = build_hrep(family, n, q, t)
    forests = family_forests(family, n)
    simplices = [simplex_for_forest(f, q_eff, t_eff) for f in forests]
    chains = [forest_chain_hrep(f, q_eff, t_eff) for f in forests]
    checks: dict = {}
    counterexample = None

    if family in ("cayley", "tcayley"):
        expected_count = (n + 1) ** (n - 1)
    else:
        expected_count = sum(
            1
            for g in enumerate_graphs(n + 1)
            if component_count(g) == (n + 1) - g.edge_count()
        )
    checks["cell_count"] = {"got": len(simplices), "expected": expected_count}

    bad_vertex = None
    for f, s in zip(forests, simplices):
        for v in s.vertices:
            if not polytope.contains(v):
                bad_vertex = {"forest": f.to_parent_text(), "vertex": [format_rational(x) for x in v]}
                break
        if bad_vertex:
            break
    checks["vertex_containment"] = {"ok": bad_vertex is None}
    if bad_vertex:
        counterexample = bad_vertex

    total = sum((simplex_volume_scaled(s) for s in simplices), Fraction(0))
    expected_total = _expected_cell_volume(family, n).evaluate(q_eff, t_eff)
    checks["volume_sum"] = {
        "got": format_rational(total),
        "expected": format_rational(expected_total),
        "ok": total == expected_total,
    }

    checks["sampling"] = _partition_certificate(family, n, q_eff, t_eff, chains, samples, seed)

    passed = (
        checks["cell_count"]["got"] == checks["cell_count"]["expected"]
        and checks["vertex_containment"]["ok"]
        and checks["volume_sum"]["ok"]
        and checks["sampling"]["ok"]
    )
    if not passed and counterexample is None:
        counterexample = checks["sampling"].get("failure")
    return VerificationReport(
        "triangulation", family, n, q_eff, t_eff, seed, passed, checks, counterexample
    )


def verify_subdivision(
    family: str,
    n: int,
    q=None,
    t=None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Check the coarse subdivision of one family polytope."""
    if n > VERIFY_MAX_N:
        raise ValueError(f"full subdivision checks are desk scale: n <= {VERIFY_MAX_N}")
    q_eff, t_eff = family_parameters(family, q, t)
    polytope = build_hrep(family, n, q, t)
    plane = family_plane_forests(family, n)
    pieces = [piece_for_plane_forest(pf, q_eff, t_eff) for pf in plane]
    checks: dict = {}

    expected_count = catalan(n) if family in ("cayley", "tcayley") else catalan(n + 1)
    checks["cell_count"] = {"got": len(pieces), "expected": expected_count}

    closed_total = BivariatePolynomial.zero()
    for pf in plane:
        closed_total += specialize_for_family(family, closed_form_piece_volume(pf))
    expected_total = _expected_cell_volume(family, n)
    checks["volume_sum"] = {
        "got": closed_total.to_json_obj(),
        "expected": expected_total.to_json_obj(),
        "ok": closed_total == expected_total,
    }

    # Piece facets must stay inside the polytope: check simplex vertices of
    # the refinement instead of unavailable piece V-reps.
    containment_ok = True
    for f in family_forests(family, n):
        s = simplex_for_forest(f, q_eff, t_eff)
        if not all(polytope.contains(v) for v in s.vertices):
            containment_ok = False
            break
    checks["vertex_containment"] = {"ok": containment_ok}

    checks["sampling"] = _partition_certificate(family, n, q_eff, t_eff, pieces, samples, seed)

    passed = (
        checks["cell_count"]["got"] == checks["cell_count"]["expected"]
        and checks["volume_sum"]["ok"]
        and checks["vertex_containment"]["ok"]
        and checks["sampling"]["ok"]
    )
    return VerificationReport(
        "subdivision", family, n, q_eff, t_eff, seed, passed, checks,
        checks["sampling"].get("failure"),
    )


def verify_refinement(family: str, n: int, q=None, t=None) -> VerificationReport:
    """Each simplex sits inside the piece of its plane shape; multiplicities
    and volume sums match the closed formulas."""
    if n > VERIFY_MAX_N:
        raise ValueError(f"refinement checks are desk scale: n <= {VERIFY_MAX_N}")
    q_eff, t_eff = family_parameters(family, q, t)
    forests = family_forests(family, n)
    plane = family_plane_forests(family, n)
    piece_by_shape = {pf: piece_for_plane_forest(pf, q_eff, t_eff) for pf in plane}
    groups: dict[PlaneForest, list[LabeledForest]] = {pf: [] for pf in plane}
    containment_ok = True
    counterexample = None
    for f in forests:
        pf = shape(f)
        groups[pf].append(f)
        piece = piece_by_shape[pf]
        s = simplex_for_forest(f, q_eff, t_eff)
        if not all(piece.contains(v) for v in s.vertices):
            containment_ok = False
            counterexample = {"forest": f.to_parent_text(), "shape": pf.to_text()}
            break
    counts_ok = True
    volume_ok = True
    for pf, members in groups.items():
        if len(members) != pf.labeled_forest_count():
            counts_ok = False
            counterexample = counterexample or {
                "shape": pf.to_text(),
                "got": len(members),
                "expected": pf.labeled_forest_count(),
            }
        simplex_sum = BivariatePolynomial.zero()
        for f in members:
            simplex_sum += closed_form_simplex_volume(f)
        if simplex_sum != closed_form_piece_volume(pf):
            volume_ok = False
            counterexample = counterexample or {"shape": pf.to_text(), "mismatch": "volume"}
    checks = {
        "vertex_containment": {"ok": containment_ok},
        "shape_multiplicities": {"ok": counts_ok},
        "piece_volume_refines": {"ok": volume_ok},
        "total_forests": {"got": sum(len(v) for v in groups.values()), "expected": len(forests)},
    }
    passed = containment_ok and counts_ok and volume_ok
    return VerificationReport(
        "refinement", family, n, q_eff, t_eff, None, passed, checks, counterexample
    )


def verify_specializations(n: int, q=Fraction(1, 2), t=Fraction(2)) -> VerificationReport:
    """Fixed-parameter specializations tie the five families together."""
    if n > VERIFY_MAX_N:
        raise ValueError(f"specialization checks are desk scale: n <= {VERIFY_MAX_N}")
    q = Fraction(q)
    t = Fraction(t)
    checks: dict = {}

    tutte11 = enumerate_hrep_vertices(build_hrep("tutte", n, 1, 1))
    gayley = enumerate_hrep_vertices(build_hrep("gayley", n))
    ortho = tuple(sorted(orthoscheme_vertices([Fraction(2) ** k for k in range(1, n + 1)])))
    checks["tutte_q1_t1_is_gayley"] = {"ok": tutte11 == gayley == ortho}

    from .faces import cayley_vertices, tutte_vertices  # local import avoids a cycle

    tcayley = enumerate_hrep_vertices(build_hrep("tcayley", n, t=t))
    closed = tuple(sorted(cayley_vertices(n, t).points))
    checks["tcayley_vertices_closed_form"] = {"ok": tcayley == closed}

    qt_vertices = enumerate_hrep_vertices(build_hrep("tutte", n, q, t))
    closed_qt = tuple(sorted(tutte_vertices(n, q, t).points))
    checks["tutte_vertices_closed_form"] = {"ok": qt_vertices == closed_qt}

    z = z_bruteforce(n + 1)
    connected = connected_gf(n + 1, "bruteforce")
    checks["z_q0_coefficient_is_connected_gf"] = {"ok": z.restrict_q_power(0) == connected}

    tree_sum = BivariatePolynomial.zero()
    for f in enumerate_labeled_forests(n + 1, trees_only=True):
        tree_sum += closed_form_simplex_volume(f).substitute(q=1)
    checks["tree_simplices_sum_to_tcayley_total"] = {"ok": tree_sum == connected}

    checks["gayley_total"] = {
        "ok": z.substitute(q=1, t=1) == BivariatePolynomial.constant(2 ** math.comb(n + 1, 2))
    }
    one_plus_t_pow = BivariatePolynomial.one_plus_t_power(math.comb(n + 1, 2))
    checks["tgayley_total"] = {"ok": z.substitute(q=1) == one_plus_t_pow}

    passed = all(entry["ok"] for entry in checks.values())
    return VerificationReport("specializations", None, n, q, t, None, passed, checks, None)


def verify_piece_constructions(n: int, q=Fraction(1, 2), t=Fraction(1)) -> VerificationReport:
    """Direct piece inequalities agree with the product/cone assembly."""
    if n > 4:
        raise ValueError("piece construction cross-check is desk scale: n <= 4")
    q = Fraction(q)
    t = Fraction(t)
    mismatch = None
    for pf in enumerate_plane_forests(n + 1):
        direct = piece_for_plane_forest(pf, q, t)
        combin = piece_for_plane_forest_via_cones(pf, q, t)
        if enumerate_hrep_vertices(direct) != enumerate_hrep_vertices(combin):
            mismatch = {"shape": pf.to_text()}
            break
    checks = {"vertex_sets_equal": {"ok": mismatch is None}}
    return VerificationReport(
        "piece-constructions", None, n, q, t, None, mismatch is None, checks, mismatch
    )


# ----------------------------------------------------------------------
# NFS fiber verification
# ----------------------------------------------------------------------


def _fiber_shard(args) -> dict[tuple, list[tuple[int, int, int]]]:
    node_count, lo, hi = args
    out: dict[tuple, list[tuple[int, int, int]]] = {}
    for mask in range(lo, hi):
        g = LabeledGraph(node_count, mask)
        f = nfs(g)
        key = tuple(f.parent.get(v, 0) for v in range(1, node_count + 1))
        out.setdefault(key, []).append((mask, component_count(g), g.edge_count()))
    return out


def verify_fiber(node_count: int, jobs: int = 1) -> VerificationReport:
    """Exhaustive check that NFS preimages are forest-plus-cane-edge sets.

    Sweeps every graph on the given node count, groups by search forest,
    and compares each fiber with {forest edges union C : C subset of cane
    edges}, in both unweighted and (component, edge)-weighted form.
    """
    if not 1 <= node_count <= 7:
        raise ValueError("fiber sweep supported for 1..7 nodes")
    total_masks = 1 << (node_count * (node_count - 1) // 2)
    if jobs <= 1:
        grouped = _fiber_shard((node_count, 0, total_masks))
    else:
        import multiprocessing

        step = -(-total_masks // jobs)
        shards = [(node_count, lo, min(lo + step, total_masks)) for lo in range(0, total_masks, step)]
        grouped = {}
        with multiprocessing.Pool(jobs) as pool:
            for part in pool.map(_fiber_shard, shards):
                for key, items in part.items():
                    grouped.setdefault(key, []).extend(items)
    counterexample = None
    forests_seen = 0
    for key, members in grouped.items():
        f = LabeledForest(node_count, {v: p for v, p in enumerate(key, start=1) if p})
        forests_seen += 1
        canes = sorted(cane_edges(f))
        expected_masks = set()
        base = f.edge_list()
        for sub in range(1 << len(canes)):
            extra = [canes[k] for k in range(len(canes)) if sub >> k & 1]
            expected_masks.add(LabeledGraph.from_edges(node_count, base + extra).edges)
        got_masks = {mask for mask, _, _ in members}
        if got_masks != expected_masks:
            counterexample = {"forest": f.to_parent_text(), "reason": "fiber set mismatch"}
            break
        weighted = BivariatePolynomial.zero()
        for _, k, e in members:
            weighted += BivariatePolynomial.monomial(k - 1, e)
        if weighted != closed_form_simplex_volume(f):
            counterexample = {"forest": f.to_parent_text(), "reason": "weighted fiber mismatch"}
            break
    expected_forests = sum(
        1
        for g in enumerate_graphs(node_count)
        if component_count(g) == node_count - g.edge_count()
    ) if node_count <= 6 else forests_seen
    checks = {
        "graphs_swept": {"got": sum(len(v) for v in grouped.values()), "expected": total_masks},
        "distinct_forests": {"got": forests_seen, "expected": expected_forests},
        "fibers": {"ok": counterexample is None},
    }
    passed = (
        counterexample is None
        and checks["graphs_swept"]["got"] == total_masks
        and forests_seen == expected_forests
    )
    return VerificationReport("fiber", None, node_count - 1, None, None, None, passed, checks, counterexample)


# ----------------------------------------------------------------------
# Batch driver
# ----------------------------------------------------------------------


def run_all(
    nmax: int,
    q=Fraction(1, 2),
    t=Fraction(1),
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
) -> list[VerificationReport]:
    """Triangulation, subdivision, refinement, specialization and fiber
    checks for every family and every n up to nmax."""
    from .geometry import FAMILIES

    reports = []
    for n in range(1, nmax + 1):
        for family in FAMILIES:
            reports.append(verify_triangulation(family, n, q, t, samples=samples, seed=seed))
            reports.append(verify_subdivision(family, n, q, t, samples=samples, seed=seed))
            reports.append(verify_refinement(family, n, q, t))
        reports.append(verify_specializations(n, q, t))
        if n <= 4:
            reports.append(verify_piece_constructions(n, q, t))
    reports.append(verify_fiber(min(nmax + 1, 6), jobs=jobs))
    return reports
