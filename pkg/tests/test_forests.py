"""Neighbors-first search, cane paths, shapes, and enumeration."""

import math
import random

import pytest

from cayleypoly import (
    LabeledForest,
    LabeledGraph,
    PlaneForest,
    alpha,
    cane_edges,
    cane_paths_from,
    catalan,
    component_count,
    enumerate_graphs,
    enumerate_labeled_forests,
    enumerate_plane_forests,
    enumerate_plane_trees,
    fiber_of,
    nfs,
    shape,
)
from cayleypoly.graphs import component_partition


# ----------------------------------------------------------------------
# NFS on graphs
# ----------------------------------------------------------------------


def test_nfs_complete_graph_three():
    f = nfs(LabeledGraph.from_text("3:1-2,1-3,2-3"))
    assert f.to_parent_text() == "3,3,0"
    assert f.order == (3, 2, 1)


def test_nfs_single_edge_on_three():
    f = nfs(LabeledGraph.from_text("3:1-2"))
    assert f.component_order == (3, 2)
    assert f.order == (3, 2, 1)
    assert f.parent == {1: 2}


def test_nfs_edgeless():
    f = nfs(LabeledGraph(4, 0))
    assert f.component_order == (4, 3, 2, 1)
    assert f.order == (4, 3, 2, 1)


def test_nfs_preserves_components_and_edges():
    for g in enumerate_graphs(5):
        f = nfs(g)
        assert set(f.edge_list()) <= set(g.edge_list())
        forest_graph = LabeledGraph.from_edges(5, f.edge_list())
        assert component_partition(forest_graph) == component_partition(g)


def test_nfs_idempotent_on_forests():
    for g in enumerate_graphs(5):
        f = nfs(g)
        again = nfs(LabeledGraph.from_edges(5, f.edge_list()))
        assert again == f


# ----------------------------------------------------------------------
# Worked twelve-node examples
# ----------------------------------------------------------------------


def test_worked_tree_order_and_exponents(worked_tree12):
    assert worked_tree12.order == (12, 11, 10, 6, 8, 7, 9, 3, 1, 4, 2, 5)
    expected = {1: 4, 2: 2, 3: 3, 4: 1, 5: 0, 6: 2, 7: 3, 8: 2, 9: 3, 10: 1, 11: 0}
    for node, j in expected.items():
        assert cane_paths_from(worked_tree12, node) == j
    assert alpha(worked_tree12) == 21


def test_worked_forest_order_and_exponents(worked_forest12):
    assert worked_forest12.order == (12, 11, 10, 6, 8, 4, 2, 5, 9, 7, 3, 1)
    assert worked_forest12.component_order == (12, 9)
    expected = {11: 0, 10: 1, 6: 2, 8: 2, 4: 1, 2: 2, 5: 0, 7: 0, 3: 1, 1: 2}
    for node, j in expected.items():
        assert cane_paths_from(worked_forest12, node) == j
    coords = worked_forest12.coordinates()
    assert coords[9].is_root and coords[9].position == 8
    assert coords[7].root_position == 8 and coords[7].root_label == 9


# ----------------------------------------------------------------------
# Cane paths and cane edges
# ----------------------------------------------------------------------


def test_cane_paths_examples(star3, path3):
    assert cane_paths_from(path3, 1) == 0
    assert cane_paths_from(star3, 1) == 1
    assert cane_paths_from(star3, 2) == 0
    with pytest.raises(ValueError):
        cane_paths_from(star3, 9)


def test_alpha_examples(star3, path3):
    assert alpha(star3) == 1
    assert alpha(path3) == 0
    total = sum(2 ** alpha(t) for t in enumerate_labeled_forests(4, trees_only=True))
    assert total == 38  # connected graphs on four nodes


def test_cane_edges_examples(star3, path3):
    assert cane_edges(star3) == {(1, 2)}
    assert cane_edges(path3) == set()


def test_cane_edge_count_is_alpha():
    for f in enumerate_labeled_forests(5):
        assert len(cane_edges(f)) == alpha(f)


def test_fiber_reconstruction_three_nodes(star3):
    fiber = {g.to_text() for g in fiber_of(star3)}
    assert fiber == {"3:1-3,2-3", "3:1-2,1-3,2-3"}


def test_fiber_lemma_exhaustive_small():
    for n in range(1, 6):
        grouped = {}
        for g in enumerate_graphs(n):
            grouped.setdefault(nfs(g), set()).add(g.edges)
        for f, masks in grouped.items():
            expected = {g.edges for g in fiber_of(f)}
            assert masks == expected
            assert len(masks) == 2 ** alpha(f)


def test_fiber_property_sampled_seven_nodes():
    # Random 7-node forests: adding any subset of cane edges leaves the
    # search forest unchanged, adding any other edge changes it.
    rng = random.Random(99)
    for _ in range(60):
        base = random_tree(7, rng)
        keep = [e for e in base.edge_list() if rng.random() < 0.7]
        f = nfs(LabeledGraph.from_edges(7, keep))
        canes = sorted(cane_edges(f))
        tree_edges = f.edge_list()
        extra = [e for k, e in enumerate(canes) if rng.getrandbits(1)]
        g = LabeledGraph.from_edges(7, tree_edges + extra)
        assert nfs(g) == f
        non_members = [
            (i, j)
            for i in range(1, 8)
            for j in range(i + 1, 8)
            if (i, j) not in set(tree_edges) and (i, j) not in set(canes)
        ]
        if non_members:
            bad = non_members[rng.randrange(len(non_members))]
            g_bad = LabeledGraph.from_edges(7, tree_edges + [bad])
            assert nfs(g_bad) != f


# ----------------------------------------------------------------------
# Alpha via degree sequences
# ----------------------------------------------------------------------


def degree_formula_alpha(f: LabeledForest) -> int:
    pf = shape(f)
    reduced = pf.reduced_degree_sequence()
    total = f.node_count
    m = pf.component_count()
    return math.comb(total + 1 - m, 2) - sum(i * d for i, d in enumerate(reduced, start=1))


def test_alpha_degree_formula_forests():
    for n in range(1, 7):
        for f in enumerate_labeled_forests(n):
            assert alpha(f) == degree_formula_alpha(f)


def random_tree(n: int, rng: random.Random) -> LabeledForest:
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    edges = [(labels[i], labels[rng.randrange(i)]) for i in range(1, n)]
    return LabeledForest.from_edges(n, edges)


def test_alpha_degree_formula_random_trees_seven():
    rng = random.Random(421)
    for _ in range(300):
        t = random_tree(7, rng)
        assert alpha(t) == degree_formula_alpha(t)


def test_plane_alpha_matches_labeled():
    for f in enumerate_labeled_forests(5):
        assert shape(f).alpha() == alpha(f)


def test_seven_node_forest_battery():
    # One pass over all forests on seven nodes: the enumeration count
    # matches the acyclic-subgraph count from the independent subgraph
    # sweep, the cane-path total agrees with the degree-sequence formula
    # on every forest, and summing 2^alpha over the trees reproduces the
    # connected-graph count on seven nodes.
    from cayleypoly.volumes import connected_gf, subgraph_tally

    forests = list(enumerate_labeled_forests(7))
    tally = subgraph_tally(7)
    acyclic = sum(c for (k, e), c in tally.items() if k + e == 7)
    assert len(forests) == acyclic == 36961
    connected_total = 0
    for f in forests:
        assert alpha(f) == degree_formula_alpha(f)
        if f.is_tree():
            connected_total += 2 ** alpha(f)
    assert connected_total == connected_gf(7).evaluate(1, 1)


# ----------------------------------------------------------------------
# Shapes
# ----------------------------------------------------------------------


def test_shape_examples(star3, path3):
    assert shape(star3).degree_sequence() == (2, 0, 0)
    assert shape(path3).degree_sequence() == (1, 1, 0)
    singles = LabeledForest.from_edges(2, [])
    assert shape(singles).degree_sequence() == (0, 0)
    assert shape(singles).component_sizes() == (1, 1)


def test_shape_positions_mirror_labeled_forest():
    # The NFS structure of the shape coincides position-by-position with
    # the labeled forest's own coordinates.
    for f in enumerate_labeled_forests(5):
        by_position = {rec.position: rec for rec in f.coordinates().values()}
        coords, _, _, _ = shape(f).nfs_structure()
        for position, rec in enumerate(coords):
            labeled = by_position[position]
            assert rec.is_root == labeled.is_root
            assert rec.cane_exponent == labeled.cane_exponent
            assert rec.root_position == labeled.root_position


def test_shape_groups_and_multiplicities():
    for n in range(1, 6):
        groups = {}
        for f in enumerate_labeled_forests(n):
            groups.setdefault(shape(f), []).append(f)
        assert len(groups) == catalan(n)
        for pf, members in groups.items():
            assert len(members) == pf.labeled_forest_count()


# ----------------------------------------------------------------------
# Enumeration counts
# ----------------------------------------------------------------------


def test_tree_counts():
    assert sum(1 for _ in enumerate_labeled_forests(2, trees_only=True)) == 1
    assert sum(1 for _ in enumerate_labeled_forests(4, trees_only=True)) == 16
    for n in range(1, 7):
        count = sum(1 for _ in enumerate_labeled_forests(n, trees_only=True))
        assert count == (1 if n == 1 else n ** (n - 2))


def test_forest_counts_against_graph_sweep():
    for n in range(1, 6):
        by_enum = sum(1 for _ in enumerate_labeled_forests(n))
        acyclic = sum(
            1
            for g in enumerate_graphs(n)
            if component_count(g) == n - g.edge_count()
        )
        assert by_enum == acyclic
    assert sum(1 for _ in enumerate_labeled_forests(3)) == 7


def test_forest_enumeration_unique_and_canonical():
    seen = set()
    for f in enumerate_labeled_forests(5):
        key = f.to_parent_text()
        assert key not in seen
        seen.add(key)
        for root in f.component_order:
            assert root == max(_component_nodes(f, root))


def _component_nodes(f: LabeledForest, root: int) -> set:
    nodes = {root}
    changed = True
    while changed:
        changed = False
        for v, p in f.parent.items():
            if p in nodes and v not in nodes:
                nodes.add(v)
                changed = True
    return nodes


def test_plane_forest_counts():
    assert sum(1 for _ in enumerate_plane_forests(3)) == 5
    assert sum(1 for _ in enumerate_plane_forests(1)) == 1
    assert sum(1 for _ in enumerate_plane_trees(4)) == catalan(3)
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_plane_forests(n)) == catalan(n)


def test_plane_forest_round_trip():
    for pf in enumerate_plane_forests(5):
        seq = pf.degree_sequence()
        assert PlaneForest.from_degree_sequence(seq) == pf
        assert sum(seq) == pf.node_count() - pf.component_count()
        assert PlaneForest.from_text(pf.to_text()) == pf


def test_degree_sequence_component_zeros():
    # Only the zero closing each component is erased; inner zeros stay.
    pf = PlaneForest.from_degree_sequence([2, 0, 0, 1, 0])
    assert pf.component_sizes() == (3, 2)
    assert pf.reduced_degree_sequence() == (2, 0, 1)
    assert pf.edge_count() == 3


def test_single_node_edge_cases():
    f = LabeledForest.from_edges(1, [])
    assert alpha(f) == 0
    assert cane_edges(f) == set()
    pf = shape(f)
    assert pf.degree_sequence() == (0,)
    assert pf.reduced_degree_sequence() == ()
    assert pf.labeled_forest_count() == 1


def test_parent_text_round_trip(worked_forest12):
    text = worked_forest12.to_parent_text()
    assert LabeledForest.from_parent_text(text) == worked_forest12


def test_invalid_forests_rejected():
    with pytest.raises(ValueError):
        LabeledForest(3, {1: 2, 2: 1})  # cycle
    with pytest.raises(ValueError):
        LabeledForest(3, {3: 2})  # root 2 below node 3
    with pytest.raises(ValueError):
        LabeledForest.from_edges(3, [(1, 2), (2, 3), (1, 3)])  # cycle
    with pytest.raises(ValueError):
        list(enumerate_labeled_forests(9))


def test_invalid_plane_forests_rejected():
    with pytest.raises(ValueError):
        PlaneForest.from_degree_sequence([2, 0])  # truncated
    with pytest.raises(ValueError):
        PlaneForest(())
    with pytest.raises(ValueError):
        list(enumerate_plane_forests(0))
