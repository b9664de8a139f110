"""Shared fixtures: small forests and the twelve-node worked examples.

The two twelve-node fixtures were reconstructed by hand from a printed
NFS trace and its coordinate chain; they pin down the traversal order,
the cane-path exponents, and the simplex vertex tables at full size.
"""

import pytest

from cayleypoly import LabeledForest


@pytest.fixture
def star3():
    """Star rooted at 3 with leaves 1, 2."""
    return LabeledForest.from_edges(3, [(3, 1), (3, 2)])


@pytest.fixture
def path3():
    """Path 3-2-1 rooted at 3."""
    return LabeledForest.from_edges(3, [(3, 2), (2, 1)])


@pytest.fixture
def worked_tree12():
    """Twelve-node tree with NFS order 12,11,10,6,8,7,9,3,1,4,2,5."""
    edges = [
        (12, 6), (12, 10), (12, 11),
        (6, 7), (6, 8),
        (7, 9),
        (9, 1), (9, 3),
        (10, 2), (10, 4),
        (11, 5),
    ]
    return LabeledForest.from_edges(12, edges)


@pytest.fixture
def worked_forest12():
    """Two-component twelve-node forest: an eight-node tree rooted at 12
    and a star rooted at 9 with leaves 1, 3, 7."""
    edges = [
        (12, 6), (12, 10), (12, 11),
        (6, 8),
        (10, 2), (10, 4),
        (11, 5),
        (9, 1), (9, 3), (9, 7),
    ]
    return LabeledForest.from_edges(12, edges)
