"""Exact volumes, graph generating functions, and the counting results.

All volumes are reported scaled by n! (so every identity stays inside the
polynomial ring); raw volumes are the scaled values divided by n!.

The spanning-subgraph sum

    Z_{K_n}(q, t) = sum over subgraphs H of K_n of q^(k(H)-1) t^(e(H))

is computed by an exhaustive sweep of all 2^C(n,2) subgraphs.  The sweep
enumerates the subgraph of K_{n-1} induced on {1..n-1} (connectivity via
union-find, bucketed by the partition pattern of the node set) and then
attaches every subset of edges at node n, so each subgraph of K_n is
counted exactly once; shards of the outer enumeration can run in
parallel.  No recursion formula enters this oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import BivariatePolynomial, determinant
from .forests import (
    LabeledForest,
    PlaneForest,
    alpha,
    enumerate_labeled_forests,
    enumerate_plane_forests,
    enumerate_plane_trees,
)
from .geometry import FAMILIES, ParameterDomainError, Simplex, family_parameters

Z_MAX_NODES = 7


class DegenerateSimplexError(ValueError):
    """The vertex set is affinely dependent (zero volume)."""


# ----------------------------------------------------------------------
# Determinant volumes
# ----------------------------------------------------------------------


def simplex_volume(s: Simplex) -> Fraction:
    """|det(v_i - v_0)| / n!; raises on a degenerate vertex set."""
    return simplex_volume_scaled(s) / math.factorial(s.dimension)


def simplex_volume_scaled(s: Simplex) -> Fraction:
    """n! times the volume, i.e. |det(v_i - v_0)|."""
    if s.dimension == 0:
        return Fraction(1)
    v0 = s.vertices[0]
    rows = [[x - y for x, y in zip(v, v0)] for v in s.vertices[1:]]
    det = determinant(rows)
    if det == 0:
        raise DegenerateSimplexError("affinely dependent vertices")
    return abs(det)


# ----------------------------------------------------------------------
# Closed-form volumes
# ----------------------------------------------------------------------


def closed_form_simplex_volume(f: LabeledForest) -> BivariatePolynomial:
    """n! vol of the forest's simplex: q^(k-1) t^|E| (1+t)^alpha."""
    k = f.component_count()
    e = f.edge_count()
    return BivariatePolynomial.monomial(k - 1, e) * BivariatePolynomial.one_plus_t_power(alpha(f))


def closed_form_piece_volume(pf: PlaneForest) -> BivariatePolynomial:
    """n! vol of the plane forest's subdivision piece.

    multinomial(n; reduced degrees) / prod_{j>=2}(a_j + ... + a_m)
    times q^(m-1) t^(sum d_i) (1+t)^(C(n+2-m, 2) - sum i d_i).
    """
    sizes = pf.component_sizes()
    m = len(sizes)
    total = sum(sizes)
    n = total - 1
    reduced = pf.reduced_degree_sequence()
    prefactor = Fraction(math.factorial(n))
    for d in reduced:
        prefactor /= math.factorial(d)
    for j in range(1, m):
        prefactor /= sum(sizes[j:])
    exponent = math.comb(total + 1 - m, 2) - sum(i * d for i, d in enumerate(reduced, start=1))
    poly = BivariatePolynomial.monomial(m - 1, sum(reduced), prefactor)
    return poly * BivariatePolynomial.one_plus_t_power(exponent)


# ----------------------------------------------------------------------
# Spanning-subgraph sweep
# ----------------------------------------------------------------------


def _partition_pattern(n: int, edge_pairs) -> tuple[int, ...]:
    """Canonical component labels of {0..n-1} under the given edges."""
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in edge_pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    relabel: dict[int, int] = {}
    out = []
    for v in range(n):
        root = find(v)
        if root not in relabel:
            relabel[root] = len(relabel)
        out.append(relabel[root])
    return tuple(out)


def subgraph_tally(n: int, shard: Optional[tuple[int, int]] = None) -> dict[tuple[int, int], int]:
    """Counts of spanning subgraphs of K_n by (components, edges).

    `shard`, when given, restricts the outer sweep over the edge masks of
    K_{n-1} to the half-open range [lo, hi); summing the tallies of a
    partition of the full range reproduces the total (used by --jobs).
    """
    if not 1 <= n <= Z_MAX_NODES:
        raise ValueError(f"n must be in 1..{Z_MAX_NODES}")
    if n == 1:
        return {(1, 0): 1} if shard is None or shard[0] == 0 else {}
    m = n - 1
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    lo, hi = shard if shard is not None else (0, 1 << len(pairs))
    # Bucket the K_{n-1} masks by partition pattern and edge count.
    buckets: dict[tuple[int, ...], list[int]] = {}
    for mask in range(lo, hi):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        pattern = _partition_pattern(m, edges)
        counts = buckets.setdefault(pattern, [0] * (len(pairs) + 1))
        counts[len(edges)] += 1
    # Attach every subset of edges from node n to {1..n-1}.
    tally: dict[tuple[int, int], int] = {}
    for pattern, by_edges in buckets.items():
        k_base = len(set(pattern))
        for star in range(1 << m):
            star_size = bin(star).count("1")
            touched = len({pattern[v] for v in range(m) if star >> v & 1})
            k = k_base - touched + 1
            for e_base, count in enumerate(by_edges):
                if count:
                    key = (k, e_base + star_size)
                    tally[key] = tally.get(key, 0) + count
    return tally


def _merge_tallies(tallies) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for tally in tallies:
        for key, count in tally.items():
            out[key] = out.get(key, 0) + count
    return out


def z_bruteforce(n: int, jobs: int = 1) -> BivariatePolynomial:
    """Z_{K_n}(q, t) by exhaustive subgraph enumeration (2 <= n <= 7)."""
    if not 2 <= n <= Z_MAX_NODES:
        raise ValueError(f"n must be in 2..{Z_MAX_NODES}")
    tally = _tally_with_jobs(n, jobs)
    return BivariatePolynomial({(k - 1, e): Fraction(c) for (k, e), c in tally.items()})


def z_bruteforce_naive(n: int) -> BivariatePolynomial:
    """Single-level sweep over all edge masks of K_n; cross-check oracle."""
    if not 2 <= n <= 6:
        raise ValueError("naive sweep supported for 2 <= n <= 6")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    terms: dict[tuple[int, int], Fraction] = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        k = len(set(_partition_pattern(n, edges)))
        key = (k - 1, len(edges))
        terms[key] = terms.get(key, Fraction(0)) + 1
    return BivariatePolynomial(terms)


def _tally_with_jobs(n: int, jobs: int) -> dict[tuple[int, int], int]:
    if jobs <= 1 or n <= 3:
        return subgraph_tally(n)
    total = 1 << math.comb(n - 1, 2)
    step = -(-total // jobs)
    shards = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    import multiprocessing

    with multiprocessing.Pool(jobs) as pool:
        parts = pool.starmap(_tally_shard, [(n, shard) for shard in shards])
    return _merge_tallies(parts)


def _tally_shard(n: int, shard: tuple[int, int]) -> dict[tuple[int, int], int]:
    return subgraph_tally(n, shard)


def connected_gf(n: int, mode: str = "bruteforce", jobs: int = 1) -> BivariatePolynomial:
    """Edge generating function of connected labeled graphs on n nodes.

    bruteforce: restrict the subgraph sweep to one component (n <= 7).
    recursion:  the alternating-sum recurrence
        r_0 = 1,  r_k = -sum_{j=1..k} C(k,j) (1+t)^C(j,2) r_{k-j},
        F_n = sum_{j=0..n-1} C(n-1,j) (1+t)^C(j+1,2) r_{n-1-j}
    valid for n up to 30.  Both modes agree on their common range.
    """
    if mode == "bruteforce":
        if not 1 <= n <= Z_MAX_NODES:
            raise ValueError(f"bruteforce mode needs 1 <= n <= {Z_MAX_NODES}")
        tally = _tally_with_jobs(n, jobs)
        return BivariatePolynomial(
            {(0, e): Fraction(c) for (k, e), c in tally.items() if k == 1}
        )
    if mode == "recursion":
        if not 1 <= n <= 30:
            raise ValueError("recursion mode supported for 1 <= n <= 30")
        r = [BivariatePolynomial.constant(1)]
        for k in range(1, n):
            acc = BivariatePolynomial.zero()
            for j in range(1, k + 1):
                term = BivariatePolynomial.one_plus_t_power(math.comb(j, 2)) * r[k - j]
                acc += term * math.comb(k, j)
            r.append(-acc)
        out = BivariatePolynomial.zero()
        for j in range(n):
            term = BivariatePolynomial.one_plus_t_power(math.comb(j + 1, 2)) * r[n - 1 - j]
            out += term * math.comb(n - 1, j)
        return out
    raise ValueError(f"unknown mode {mode!r}")


# ----------------------------------------------------------------------
# Tree inversions
# ----------------------------------------------------------------------


def tree_inversions(tree: LabeledForest) -> int:
    """Pairs (i, j), i > j, with non-root i an ancestor of j."""
    if not tree.is_tree():
        raise ValueError("inversions are defined for trees")
    root = tree.component_order[0]
    count = 0
    for j in range(1, tree.node_count + 1):
        anc = tree.parent.get(j)
        while anc is not None:
            if anc > j and anc != root:
                count += 1
            anc = tree.parent.get(anc)
    return count


def inversion_enumerator(n: int) -> BivariatePolynomial:
    """Generating function of labeled trees on n nodes by inversion count.

    Returned in the second exponent slot (read it as a polynomial in y).
    Equals the Tutte polynomial of K_n evaluated at x = 1, and satisfies
    F_n(t) = t^(n-1) * (this polynomial at y = 1+t).
    """
    if not 1 <= n <= Z_MAX_NODES:
        raise ValueError(f"n must be in 1..{Z_MAX_NODES}")
    terms: dict[tuple[int, int], Fraction] = {}
    for tree in enumerate_labeled_forests(n, trees_only=True):
        key = (0, tree_inversions(tree))
        terms[key] = terms.get(key, Fraction(0)) + 1
    return BivariatePolynomial(terms)


# ----------------------------------------------------------------------
# Integer-point and partition counts
# ----------------------------------------------------------------------


def lattice_and_partition_counts(n: int) -> tuple[int, int]:
    """Two independently computed counts of the classical 1857 identity.

    First: integer sequences 1 <= a_1 <= 2, 1 <= a_{i+1} <= 2 a_i (the
    integer points of the n-dimensional chain polytope).  Second: the
    total number of partitions of all N in {0..2^n - 1} into parts
    1, 2, 4, ..., 2^(n-1).  The two must agree.
    """
    if not 1 <= n <= 12:
        raise ValueError("n must be in 1..12")
    # Integer chains, one DP layer per coordinate.
    ways = {1: 1, 2: 1}
    for _ in range(n - 1):
        nxt: dict[int, int] = {}
        for value, count in ways.items():
            for succ in range(1, 2 * value + 1):
                nxt[succ] = nxt.get(succ, 0) + count
        ways = nxt
    lattice_points = sum(ways.values())
    # Partitions into binary parts, a coin-counting DP.
    limit = (1 << n) - 1
    table = [1] + [0] * limit
    for part in (1 << k for k in range(n)):
        for value in range(part, limit + 1):
            table[value] += table[value - part]
    return lattice_points, sum(table)


# ----------------------------------------------------------------------
# Family totals and volume reports
# ----------------------------------------------------------------------


def family_total_polynomial(family: str, n: int, jobs: int = 1) -> BivariatePolynomial:
    """n! vol of the family polytope as a polynomial, from the graph sweep.

    tutte: Z_{K_{n+1}}(q, t); tgayley: its q = 1 specialization (in t);
    tcayley: the connected part (in t); gayley and cayley: the constants
    obtained from those at t = 1.
    """
    if family not in FAMILIES:
        raise ParameterDomainError(f"unknown family {family!r}")
    z = z_bruteforce(n + 1, jobs=jobs)
    if family == "tutte":
        return z
    if family == "tgayley":
        return z.substitute(q=1)
    if family == "gayley":
        return z.substitute(q=1, t=1)
    if family == "tcayley":
        return z.restrict_q_power(0)
    return z.restrict_q_power(0).substitute(t=1)


@dataclass(frozen=True)
class VolumeReport:
    """n!-scaled volume of one family polytope, computed three ways."""

    family: str
    n: int
    q: Optional[Fraction]
    t: Optional[Fraction]
    by_closed_form: BivariatePolynomial
    by_graph_sum: BivariatePolynomial
    by_pieces: BivariatePolynomial
    by_determinant: Optional[Fraction] = None

    def agree(self) -> bool:
        if self.by_closed_form != self.by_graph_sum or self.by_pieces != self.by_graph_sum:
            return False
        if self.by_determinant is not None and self.q is not None:
            return self.by_determinant == self.by_graph_sum.evaluate(self.q, self.t)
        return True


def specialize_for_family(family: str, poly: BivariatePolynomial) -> BivariatePolynomial:
    if family == "cayley":
        return poly.substitute(q=1, t=1)
    if family == "gayley":
        return poly.substitute(q=1, t=1)
    if family in ("tcayley", "tgayley"):
        return poly.substitute(q=1)
    return poly


def volume_report(
    family: str,
    n: int,
    q=None,
    t=None,
    with_determinant: bool = True,
    jobs: int = 1,
) -> VolumeReport:
    """Compute the family volume by simplices, pieces, and the graph sweep."""
    trees_only = family in ("cayley", "tcayley")
    q_eff, t_eff = family_parameters(family, q, t)
    closed = BivariatePolynomial.zero()
    det_total: Optional[Fraction] = Fraction(0) if with_determinant else None
    from .geometry import simplex_for_forest  # local import to avoid a cycle

    for f in enumerate_labeled_forests(n + 1, trees_only=trees_only):
        closed += specialize_for_family(family, closed_form_simplex_volume(f))
        if with_determinant:
            det_total += simplex_volume_scaled(simplex_for_forest(f, q_eff, t_eff))
    pieces = BivariatePolynomial.zero()
    plane = enumerate_plane_trees(n + 1) if trees_only else enumerate_plane_forests(n + 1)
    for pf in plane:
        pieces += specialize_for_family(family, closed_form_piece_volume(pf))
    graph_sum = family_total_polynomial(family, n, jobs=jobs)
    return VolumeReport(
        family=family,
        n=n,
        q=q_eff if with_determinant else None,
        t=t_eff if with_determinant else None,
        by_closed_form=closed,
        by_graph_sum=graph_sum,
        by_pieces=pieces,
        by_determinant=det_total,
    )
