from __future__ import annotations

import pytest

from pathcentral.graph import DirectedGraph, loads_edge_list


def graph_from_pairs(pairs) -> DirectedGraph:
    return DirectedGraph.from_edges(pairs)


@pytest.fixture
def three_path() -> DirectedGraph:
    """a -> b -> c."""
    return loads_edge_list("a b\nb c\n")


@pytest.fixture
def diamond() -> DirectedGraph:
    """s splits to a and b, both rejoin at t."""
    return loads_edge_list("s a\ns b\na t\nb t\n")


@pytest.fixture
def three_cycle() -> DirectedGraph:
    return loads_edge_list("a b\nb c\nc a\n")


@pytest.fixture
def shortcut() -> DirectedGraph:
    """a -> b -> c with a direct a -> c edge and a tail c -> d."""
    return loads_edge_list("a b\nb c\na c\nc d\n")
