import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher
from networkx.generators.atlas import graph_atlas_g

from services.chordal_engine import is_chordal
from services.errors import DomainError
from services.graph_core import Graph, induced_subgraph
from services.pattern_detector import (
    CATALOG,
    CLASS_PATTERNS,
    classify,
    contains_induced,
    find_isomorphism,
    forbidden_profile,
    is_isomorphic,
    missing_containments,
    remark_implications_check,
)
from services.separator_analysis import SEPARATOR_CLASSES, hereditary_property_holds


def _from_networkx(nx_graph) -> Graph:
    return Graph.from_edges(nx_graph.number_of_nodes(), nx_graph.edges())


def _to_networkx(g: Graph):
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(g.vertices)
    nx_graph.add_edges_from(g.edges())
    return nx_graph


def _members(report):
    return {class_id for class_id, verdict in report.classes.items() if verdict.member}


def test_catalog_sizes():
    sizes = {name: (p.graph.n, p.graph.edge_count) for name, p in CATALOG.items()}
    assert sizes == {
        "claw": (4, 3),
        "P4": (4, 3),
        "2P3": (6, 4),
        "gem": (5, 7),
        "dart": (5, 6),
        "butterfly": (7, 10),
        "hajos": (6, 9),
    }


def test_remark_containments_hold():
    assert remark_implications_check()
    assert missing_containments() == []


def test_find_isomorphism_maps_edges(gem):
    relabeled = Graph.from_edges(5, [(4, 3), (3, 2), (2, 1), (0, 1), (0, 2), (0, 3), (0, 4)])
    mapping = find_isomorphism(relabeled, gem)
    assert mapping is not None
    for u, v in gem.edges():
        assert relabeled.adjacent(mapping[u], mapping[v])


def test_is_isomorphic_agrees_with_networkx():
    atlas = [g for g in graph_atlas_g() if g.number_of_nodes() == 5]
    for a in atlas:
        for b in atlas:
            assert is_isomorphic(_from_networkx(a), _from_networkx(b)) == nx.is_isomorphic(a, b)


def test_contains_induced_agrees_with_networkx():
    """Testa a busca de subgrafo induzido contra o GraphMatcher (induzido por vértices)"""
    for nx_graph in graph_atlas_g()[::5]:
        g = _from_networkx(nx_graph)
        for pattern in CATALOG.values():
            expected = GraphMatcher(nx_graph, _to_networkx(pattern.graph)).subgraph_is_isomorphic()
            found = contains_induced(g, pattern)
            assert (found is not None) == expected
            if found is not None:
                assert is_isomorphic(induced_subgraph(g, found), pattern.graph)


def test_hajos_contains_gem(hajos):
    # Sem o vértice a=3, z domina o P4 b-x-y-c
    witness = contains_induced(hajos, CATALOG["gem"])
    assert witness is not None
    assert is_isomorphic(induced_subgraph(hajos, [0, 1, 2, 4, 5]), CATALOG["gem"].graph)


def test_forbidden_profile(k4, gem, hajos):
    assert forbidden_profile(k4) == []
    assert forbidden_profile(gem) == ["P4", "gem"]
    assert "hajos" in forbidden_profile(hajos)
    assert "gem" in forbidden_profile(hajos)


def test_classify_gem_passes_only_dart_free_class(gem):
    report = classify(gem)
    assert _members(report) == {"v", "helly"}
    assert report.classes["i"].witness.pattern == "gem"


def test_classify_hajos_is_not_helly(hajos):
    report = classify(hajos)
    verdict = report.classes["helly"]
    assert not verdict.member
    assert verdict.witness.pattern == "hajos"
    assert sorted(verdict.witness.vertices) == [0, 1, 2, 3, 4, 5]


def test_classify_p4_and_claw(p4, claw):
    assert _members(classify(p4)) == {"i", "iii", "iv", "v", "helly"}
    assert _members(classify(claw)) == {"ii", "iii", "iv", "v", "vi", "helly"}


def test_classify_k4_is_member_of_every_class(k4):
    assert _members(classify(k4)) == set(CLASS_PATTERNS)


def test_classify_requires_chordal(c4):
    with pytest.raises(DomainError):
        classify(c4)


def test_classify_dart(dart):
    assert is_chordal(dart)
    report = classify(dart)
    assert _members(report) == {"iv", "vi", "helly"}
    for class_id in ("iii", "v"):
        assert report.classes[class_id].witness.pattern == "dart"
    # S(dart) = {{0}, {0,1}} é um par de contenção: o dart não pode estar em (ii)
    assert not report.classes["ii"].member
    assert report.classes["ii"].witness.pattern == "dart"
    assert not hereditary_property_holds(dart, SEPARATOR_CLASSES["ii"])[0]


def test_pattern_and_separator_sides_agree_on_class_ii(connected_chordal_corpus_5):
    for g in connected_chordal_corpus_5.graphs:
        holds = hereditary_property_holds(g, SEPARATOR_CLASSES["ii"])[0]
        assert classify(g).classes["ii"].member == holds
