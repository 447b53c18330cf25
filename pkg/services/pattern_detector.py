import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from schemas.graphs import ClassReport, ClassVerdict, PatternWitness
from services.chordal_engine import is_chordal
from services.errors import DomainError
from services.graph_core import Graph, VertexSet, induced_subgraph, to_graph6

logger = logging.getLogger("graphclass.patterns")


@dataclass(frozen=True)
class PatternGraph:
    name: str
    graph: Graph


def _pattern(name: str, n: int, edges: Sequence[Tuple[int, int]]) -> PatternGraph:
    return PatternGraph(name, Graph.from_edges(n, edges))


# claw: centro 0; P4: 0-1-2-3; 2P3: 0-1-2 e 3-4-5; gem: P4 + 4 universal;
# dart: losango 0,1,2,3 (0-1 é a diagonal) + 4 pendente em 0;
# butterfly: centro 0 ligado a 2P3 em 1..6; hajos: x=0 y=1 z=2, a=3 (xy), b=4 (xz), c=5 (yz).
CATALOG: Dict[str, PatternGraph] = {
    p.name: p
    for p in (
        _pattern("claw", 4, [(0, 1), (0, 2), (0, 3)]),
        _pattern("P4", 4, [(0, 1), (1, 2), (2, 3)]),
        _pattern("2P3", 6, [(0, 1), (1, 2), (3, 4), (4, 5)]),
        _pattern("gem", 5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
        _pattern("dart", 5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)]),
        _pattern(
            "butterfly", 7,
            [(0, v) for v in range(1, 7)] + [(1, 2), (2, 3), (4, 5), (5, 6)]
        ),
        _pattern("hajos", 6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (2, 5)]),
    )
}

CLASS_PATTERNS: Dict[str, Tuple[str, ...]] = {
    "i": ("claw", "gem"),
    "ii": ("P4", "gem", "dart", "butterfly"),
    "iii": ("dart", "gem"),
    "iv": ("gem", "butterfly"),
    "v": ("dart",),
    "vi": ("2P3", "P4"),
    "helly": ("hajos",),
}

# (menor, maior): o menor é subgrafo induzido do maior.
REMARK_CONTAINMENTS: Tuple[Tuple[str, str], ...] = (
    ("claw", "dart"),
    ("P4", "gem"),
    ("dart", "butterfly"),
    ("2P3", "butterfly"),
)


def _degree_sequence(g: Graph) -> List[int]:
    return sorted(g.degree(v) for v in g.vertices)


def find_isomorphism(h: Graph, p: Graph) -> Optional[Dict[int, int]]:
    """Mapeamento vértices de p -> vértices de h que preserva adjacência e não adjacência."""
    if h.n != p.n or h.edge_count != p.edge_count or _degree_sequence(h) != _degree_sequence(p):
        return None

    order = sorted(p.vertices, key=lambda v: -p.degree(v))
    mapping: Dict[int, int] = {}
    used = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        pv = order[k]
        for hv in h.vertices:
            if hv in used or h.degree(hv) != p.degree(pv):
                continue
            if any(p.adjacent(pv, pu) != h.adjacent(hv, hu) for pu, hu in mapping.items()):
                continue
            mapping[pv] = hv
            used.add(hv)
            if extend(k + 1):
                return True
            del mapping[pv]
            used.discard(hv)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphic(h: Graph, p: Graph) -> bool:
    return find_isomorphism(h, p) is not None


def contains_induced(g: Graph, p: PatternGraph) -> Optional[VertexSet]:
    """Primeira ocorrência (ordem lexicográfica) de p como subgrafo induzido de g."""
    target_edges = p.graph.edge_count
    for combo in combinations(g.vertices, p.graph.n):
        mask = 0
        for v in combo:
            mask |= 1 << v
        twice = sum(bin(g.neighbors_mask(v) & mask).count("1") for v in combo)
        if twice != 2 * target_edges:
            continue
        if is_isomorphic(induced_subgraph(g, combo), p.graph):
            return VertexSet(combo)
    return None


def forbidden_profile(g: Graph, catalog: Mapping[str, PatternGraph] = CATALOG) -> List[str]:
    return [name for name, p in catalog.items() if contains_induced(g, p) is not None]


def classify(
    g: Graph,
    catalog: Mapping[str, PatternGraph] = CATALOG,
    class_patterns: Mapping[str, Tuple[str, ...]] = CLASS_PATTERNS
) -> ClassReport:
    if not is_chordal(g):
        raise DomainError("classify exige grafo cordal")

    occurrences: Dict[str, Optional[VertexSet]] = {}

    def occurrence(name: str) -> Optional[VertexSet]:
        if name not in occurrences:
            occurrences[name] = contains_induced(g, catalog[name])
        return occurrences[name]

    classes = {}
    for class_id, names in class_patterns.items():
        witness = None
        for name in names:
            found = occurrence(name)
            if found is not None:
                witness = PatternWitness(pattern=name, vertices=list(found))
                break
        classes[class_id] = ClassVerdict(member=witness is None, witness=witness)

    return ClassReport(graph6=to_graph6(g), chordal=True, classes=classes)


def missing_containments(catalog: Mapping[str, PatternGraph] = CATALOG) -> List[Tuple[str, str]]:
    return [
        (smaller, larger)
        for smaller, larger in REMARK_CONTAINMENTS
        if contains_induced(catalog[larger].graph, catalog[smaller]) is None
    ]


def remark_implications_check(catalog: Mapping[str, PatternGraph] = CATALOG) -> bool:
    return not missing_containments(catalog)
