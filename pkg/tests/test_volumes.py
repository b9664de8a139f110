"""Volumes, generating functions, recursion, inversions, and counts."""

import math
from fractions import Fraction

import pytest

from cayleypoly import (
    BivariatePolynomial,
    DegenerateSimplexError,
    LabeledForest,
    PlaneForest,
    Simplex,
    closed_form_piece_volume,
    closed_form_simplex_volume,
    connected_gf,
    enumerate_labeled_forests,
    enumerate_plane_forests,
    family_total_polynomial,
    inversion_enumerator,
    lattice_and_partition_counts,
    orthoscheme,
    simplex_for_forest,
    simplex_volume,
    simplex_volume_scaled,
    tree_inversions,
    tutte_from_z,
    volume_report,
    z_bruteforce,
)
from cayleypoly.volumes import z_bruteforce_naive

P = BivariatePolynomial
HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


# ----------------------------------------------------------------------
# Determinant volumes
# ----------------------------------------------------------------------


def test_orthoscheme_volume():
    assert simplex_volume(orthoscheme([2, 4])) == 4  # the 2-leg orthoscheme
    assert simplex_volume_scaled(orthoscheme([2, 4])) == 8


def test_unit_simplex_volume():
    s = Simplex(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert simplex_volume(s) == Fraction(1, 6)


def test_star_simplex_volume(star3):
    s = simplex_for_forest(star3, 1, 1)
    assert simplex_volume_scaled(s) == 2  # 2 = 2^alpha at t = 1
    assert simplex_volume(s) == 1


def test_degenerate_simplex_rejected():
    s = Simplex(2, ((0, 0), (1, 1), (2, 2)))
    with pytest.raises(DegenerateSimplexError):
        simplex_volume(s)


def test_point_simplex_volume():
    s = Simplex(0, ((),))
    assert simplex_volume(s) == 1


# ----------------------------------------------------------------------
# Closed forms
# ----------------------------------------------------------------------


def test_closed_form_simplex_examples(star3):
    assert closed_form_simplex_volume(star3) == P({(0, 2): 1, (0, 3): 1})  # t^2 (1+t)
    pair = LabeledForest.from_edges(3, [(3, 1)])
    assert closed_form_simplex_volume(pair) == P({(1, 1): 1})  # q t
    edgeless = LabeledForest.from_edges(4, [])
    assert closed_form_simplex_volume(edgeless) == P({(3, 0): 1})  # q^3


def test_closed_form_piece_examples():
    rect = PlaneForest.from_degree_sequence([1, 0, 0])
    assert closed_form_piece_volume(rect) == P({(1, 1): 2})  # 2 q t
    path = PlaneForest.from_degree_sequence([1, 1, 1, 0])
    assert closed_form_piece_volume(path) == P({(0, 3): 6})  # 3! t^3
    singleton = PlaneForest.from_degree_sequence([0])
    assert closed_form_piece_volume(singleton) == P.constant(1)


def test_determinant_matches_closed_form():
    for params in ((HALF, Fraction(1)), (THIRD, Fraction(2))):
        for n in range(1, 5):
            for f in enumerate_labeled_forests(n + 1):
                scaled = simplex_volume_scaled(simplex_for_forest(f, *params))
                assert scaled == closed_form_simplex_volume(f).evaluate(*params)


# ----------------------------------------------------------------------
# Spanning-subgraph sums
# ----------------------------------------------------------------------


def test_z_small_values():
    assert z_bruteforce(2) == P({(1, 0): 1, (0, 1): 1})
    assert z_bruteforce(3) == P({(2, 0): 1, (1, 1): 3, (0, 2): 3, (0, 3): 1})
    for n in range(2, 7):
        assert z_bruteforce(n).evaluate(1, 1) == 2 ** math.comb(n, 2)


def test_z_against_naive_sweep():
    for n in range(2, 6):
        assert z_bruteforce(n) == z_bruteforce_naive(n)


def test_z_domain():
    with pytest.raises(ValueError):
        z_bruteforce(1)
    with pytest.raises(ValueError):
        z_bruteforce(8)


def test_family_totals():
    assert family_total_polynomial("gayley", 2) == P.constant(8)
    assert family_total_polynomial("cayley", 3) == P.constant(38)
    assert family_total_polynomial("tgayley", 2) == P.one_plus_t_power(3)
    assert family_total_polynomial("tcayley", 2) == P({(0, 2): 3, (0, 3): 1})


# ----------------------------------------------------------------------
# Connected generating function
# ----------------------------------------------------------------------


def test_connected_gf_examples():
    assert connected_gf(2) == P({(0, 1): 1})  # F_2 = t
    assert connected_gf(3) == P({(0, 2): 3, (0, 3): 1})
    assert connected_gf(4) == P({(0, 3): 16, (0, 4): 15, (0, 5): 6, (0, 6): 1})


def test_recursion_first_steps():
    # r_1 = -1 gives F_2 = (1+t)^0 r_1 + (1+t) r_0 = t.
    assert connected_gf(2, "recursion") == P({(0, 1): 1})
    assert connected_gf(1, "recursion") == P.constant(1)


def test_recursion_matches_bruteforce():
    for n in range(1, 7):
        assert connected_gf(n, "recursion") == connected_gf(n, "bruteforce")


def test_connected_gf_mode_validation():
    with pytest.raises(ValueError):
        connected_gf(3, "guess")
    with pytest.raises(ValueError):
        connected_gf(31, "recursion")


# ----------------------------------------------------------------------
# Inversion enumerator
# ----------------------------------------------------------------------


def test_inversion_enumerator_small():
    assert inversion_enumerator(2) == P.constant(1)
    assert inversion_enumerator(3) == P({(0, 0): 2, (0, 1): 1})  # 2 + y


def test_inversion_identity_with_connected_gf():
    # t^(n-1) Inv_n(1+t) = F_n(t).
    shift = P.one_plus_t_power(1)
    for n in range(2, 7):
        inv = inversion_enumerator(n)
        lhs = P.monomial(0, n - 1) * inv.compose_t(shift)
        assert lhs == connected_gf(n)


def test_inversion_equals_tutte_at_x_one():
    for n in range(2, 6):
        tutte = tutte_from_z(z_bruteforce(n), n)
        at_x1 = P.zero()
        for (dx, dy), coeff in tutte.terms():
            at_x1 += P.monomial(0, dy, coeff)
        assert at_x1 == inversion_enumerator(n)


def test_tree_inversions_examples(star3, path3):
    assert tree_inversions(star3) == 0
    assert tree_inversions(path3) == 1
    with pytest.raises(ValueError):
        tree_inversions(LabeledForest.from_edges(3, []))


# ----------------------------------------------------------------------
# Integer points and partitions
# ----------------------------------------------------------------------


def test_lattice_and_partition_examples():
    assert lattice_and_partition_counts(1) == (2, 2)
    assert lattice_and_partition_counts(2) == (6, 6)
    assert lattice_and_partition_counts(3) == (26, 26)


def test_lattice_domain():
    with pytest.raises(ValueError):
        lattice_and_partition_counts(0)


# ----------------------------------------------------------------------
# The volume identities at small n
# ----------------------------------------------------------------------


def test_simplex_sum_equals_subgraph_sum():
    for n in range(1, 5):
        total = P.zero()
        for f in enumerate_labeled_forests(n + 1):
            total += closed_form_simplex_volume(f)
        assert total == z_bruteforce(n + 1)


def test_piece_sum_equals_subgraph_sum():
    for n in range(1, 5):
        total = P.zero()
        for pf in enumerate_plane_forests(n + 1):
            total += closed_form_piece_volume(pf)
        assert total == z_bruteforce(n + 1)


def test_gayley_total_power():
    for n in range(1, 5):
        total = P.zero()
        for f in enumerate_labeled_forests(n + 1):
            total += closed_form_simplex_volume(f).substitute(q=1)
        assert total == P.one_plus_t_power(math.comb(n + 1, 2))


def test_volume_report_tutte():
    report = volume_report("tutte", 2, HALF, 1)
    assert report.agree()
    assert report.by_determinant == Fraction(23, 4)


def test_volume_report_symbolic():
    report = volume_report("tcayley", 3, with_determinant=False)
    assert report.agree()
    assert report.by_graph_sum == connected_gf(4)
