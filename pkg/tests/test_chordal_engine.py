import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from services.chordal_engine import (
    SeparatorFamily,
    build_clique_tree,
    clique_tree_to_dot,
    graph_separator_family,
    is_chordal,
    is_chordal_bruteforce,
    is_minimal_separator,
    is_perfect_elimination_ordering,
    maximal_cliques,
    maximum_cardinality_search,
    minimal_separators_direct,
    minimal_separators_exhaustive,
    perfect_elimination_ordering,
    separator_multiset,
    validate_clique_tree,
)
from services.errors import DomainError, UnsupportedSizeError
from services.graph_core import Graph, parse_edge_list


def _from_networkx(nx_graph) -> Graph:
    return Graph.from_edges(nx_graph.number_of_nodes(), nx_graph.edges())


ATLAS = [g for g in graph_atlas_g() if g.number_of_nodes() >= 1]
CONNECTED_ATLAS_6 = [g for g in ATLAS if g.number_of_nodes() <= 6 and nx.is_connected(g)]


# Reconhecimento

def test_mcs_breaks_ties_by_smallest_id(p4):
    assert maximum_cardinality_search(p4).order == (0, 1, 2, 3)
    assert perfect_elimination_ordering(p4).order == (3, 2, 1, 0)


def test_is_perfect_elimination_ordering_examples(p4, c4):
    assert is_perfect_elimination_ordering(p4, [0, 3, 1, 2])
    assert not is_perfect_elimination_ordering(c4, [0, 1, 2, 3])


def test_is_perfect_elimination_ordering_requires_permutation(p4):
    with pytest.raises(DomainError):
        is_perfect_elimination_ordering(p4, [0, 1, 2])


def test_is_chordal_small_cases(p4, c4, hajos, k4):
    assert is_chordal(p4)
    assert is_chordal(hajos)
    assert is_chordal(k4)
    assert not is_chordal(c4)


def test_is_chordal_agrees_with_oracles_on_atlas():
    """Testa MCS + PEO contra o networkx e a busca de ciclos induzidos (n <= 7)"""
    for nx_graph in ATLAS:
        g = _from_networkx(nx_graph)
        expected = nx.is_chordal(nx_graph)
        assert is_chordal(g) == expected
        assert is_chordal_bruteforce(g) == expected


def test_bruteforce_size_limit():
    with pytest.raises(UnsupportedSizeError):
        is_chordal_bruteforce(Graph(13))


# Cliques e árvores de cliques

def test_maximal_cliques_hajos(hajos):
    assert maximal_cliques(hajos) == [(0, 1, 2), (0, 1, 3), (0, 2, 4), (1, 2, 5)]


def test_maximal_cliques_claw_and_k4(claw, k4):
    assert maximal_cliques(claw) == [(0, 1), (0, 2), (0, 3)]
    assert maximal_cliques(k4) == [(0, 1, 2, 3)]


def test_maximal_cliques_requires_chordal(c4):
    with pytest.raises(DomainError):
        maximal_cliques(c4)


def test_maximal_cliques_match_networkx():
    for nx_graph in CONNECTED_ATLAS_6:
        if not nx.is_chordal(nx_graph):
            continue
        expected = set(nx.chordal_graph_cliques(nx_graph))
        assert {frozenset(c) for c in maximal_cliques(_from_networkx(nx_graph))} == expected


@pytest.mark.parametrize("seed", range(5))
def test_clique_tree_of_p4_is_a_path(p4, seed):
    tree = build_clique_tree(p4, seed)
    assert len(tree.cliques) == 3
    assert sorted(e.label for e in tree.edges) == [(1,), (2,)]
    assert validate_clique_tree(p4, tree) == []


def test_clique_tree_requires_connected_chordal(two_p3, c4):
    with pytest.raises(DomainError):
        build_clique_tree(two_p3)
    with pytest.raises(DomainError):
        build_clique_tree(c4)


def test_separator_multiset_examples(hajos, k4, butterfly):
    assert separator_multiset(build_clique_tree(hajos)) == SeparatorFamily(((0, 1), (0, 2), (1, 2)))
    assert separator_multiset(build_clique_tree(k4)) == SeparatorFamily(())
    assert separator_multiset(build_clique_tree(butterfly)) == SeparatorFamily(((0,), (0, 2), (0, 5)))


def test_separator_multiset_keeps_repeated_members(claw):
    assert separator_multiset(build_clique_tree(claw)) == SeparatorFamily(((0,), (0,)))


def test_separator_family_rejects_empty_member():
    with pytest.raises(DomainError):
        SeparatorFamily(((),))


def test_multiset_is_the_same_for_every_seed(hajos, butterfly, gem):
    for g in (hajos, butterfly, gem):
        families = {separator_multiset(build_clique_tree(g, seed)) for seed in range(20)}
        assert len(families) == 1


def test_seeds_can_change_the_tree_shape(claw):
    # As três cliques do claw se intersectam em {0}: qualquer árvore geradora é válida
    shapes = {frozenset((e.a, e.b) for e in build_clique_tree(claw, seed).edges) for seed in range(20)}
    assert len(shapes) > 1


def test_graph_separator_family_is_union_over_components(two_p3):
    assert graph_separator_family(two_p3) == SeparatorFamily(((1,), (4,)))


def test_validate_clique_tree_reports_bad_label(p4):
    tree = build_clique_tree(p4)
    broken = tree.__class__(tree.cliques, (tree.edges[0]._replace(label=(0,)),) + tree.edges[1:])
    assert validate_clique_tree(p4, broken)


def test_clique_tree_to_dot_uses_names():
    (g,) = parse_edge_list("a b\nb c\n")
    dot = clique_tree_to_dot(build_clique_tree(g), g.names)
    assert dot.startswith("graph clique_tree {")
    assert 'c0 -- c1 [label="{b}"];' in dot


# Separadores minimais

def test_is_minimal_separator_p4(p4):
    assert is_minimal_separator(p4, [1])
    assert not is_minimal_separator(p4, [0])
    assert not is_minimal_separator(p4, [1, 2])
    assert not is_minimal_separator(p4, [])


def test_minimal_separators_of_c4(c4):
    assert minimal_separators_direct(c4) == [(0, 2), (1, 3)]
    assert minimal_separators_exhaustive(c4) == [(0, 2), (1, 3)]


def test_direct_separators_match_exhaustive_scan():
    for nx_graph in CONNECTED_ATLAS_6:
        g = _from_networkx(nx_graph)
        assert minimal_separators_direct(g) == minimal_separators_exhaustive(g)


def test_clique_tree_labels_are_the_minimal_separators():
    for nx_graph in CONNECTED_ATLAS_6:
        g = _from_networkx(nx_graph)
        if is_chordal(g):
            assert graph_separator_family(g).support() == minimal_separators_direct(g)


def test_exhaustive_scan_size_limit():
    with pytest.raises(UnsupportedSizeError):
        minimal_separators_exhaustive(Graph(9))
