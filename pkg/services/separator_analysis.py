import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from schemas.graphs import HellyReport
from services.chordal_engine import (
    CliqueTree,
    SeparatorFamily,
    graph_separator_family,
    is_chordal,
)
from services.errors import DomainError, UnsupportedSizeError
from services.graph_core import Graph, VertexSet, induced_subgraph_mask, mask_members

logger = logging.getLogger("graphclass.separators")

HEREDITARY_SCAN_MAX_N = 10
HELLY_BRUTEFORCE_MAX_MEMBERS = 20


class PairRelation(str, Enum):
    DISJOINT = "disjoint"
    EQUAL = "equal"
    PROPER_CONTAINMENT = "containment"
    OVERLAP = "overlap"


PairClassifier = Callable[[Sequence[int], Sequence[int]], PairRelation]


@dataclass(frozen=True)
class PropertySpec:
    """Conjunto de relações permitidas entre pares de separadores."""

    name: str
    allowed: FrozenSet[PairRelation]

    def __post_init__(self):
        if not self.allowed:
            raise DomainError(f"Propriedade {self.name} sem nenhuma relação permitida")

    def summarize(self) -> str:
        return "|".join(sorted(r.value for r in self.allowed))


def _allowing(name: str, *allowed: PairRelation) -> PropertySpec:
    return PropertySpec(name, frozenset(allowed))


SEPARATOR_CLASSES: Dict[str, PropertySpec] = {
    "i": _allowing("i", PairRelation.DISJOINT),
    "ii": _allowing("ii", PairRelation.EQUAL),
    "iii": _allowing("iii", PairRelation.DISJOINT, PairRelation.EQUAL),
    "iv": _allowing("iv", PairRelation.DISJOINT, PairRelation.EQUAL, PairRelation.PROPER_CONTAINMENT),
    "v": _allowing("v", PairRelation.DISJOINT, PairRelation.EQUAL, PairRelation.OVERLAP),
    "vi": _allowing("vi", PairRelation.EQUAL, PairRelation.PROPER_CONTAINMENT),
}

# Uma relação proibida por vez.
SINGLE_RELATION_BANS: Dict[PairRelation, PropertySpec] = {
    banned: PropertySpec(f"no-{banned.value}", frozenset(PairRelation) - {banned})
    for banned in PairRelation
}


def classify_pair(a: Sequence[int], b: Sequence[int]) -> PairRelation:
    sa, sb = set(a), set(b)
    if not sa & sb:
        return PairRelation.DISJOINT
    if sa == sb:
        return PairRelation.EQUAL
    if sa < sb or sb < sa:
        return PairRelation.PROPER_CONTAINMENT
    return PairRelation.OVERLAP


def relation_profile(
    f: Iterable[Sequence[int]],
    classifier: PairClassifier = classify_pair
) -> FrozenSet[PairRelation]:
    members = list(f)
    return frozenset(classifier(a, b) for a, b in combinations(members, 2))


def relation_matrix(
    f: SeparatorFamily,
    classifier: PairClassifier = classify_pair
) -> List[List[Optional[PairRelation]]]:
    size = len(f)
    return [
        [None if i == j else classifier(f[i], f[j]) for j in range(size)]
        for i in range(size)
    ]


@lru_cache(maxsize=512)
def induced_families(g: Graph) -> Tuple[Tuple[VertexSet, SeparatorFamily], ...]:
    """Família S(G') de todo subgrafo induzido, por tamanho e depois ordem lexicográfica."""
    if not is_chordal(g):
        raise DomainError("A varredura hereditária exige grafo cordal")
    if g.n > HEREDITARY_SCAN_MAX_N:
        raise UnsupportedSizeError(
            f"Varredura hereditária limitada a {HEREDITARY_SCAN_MAX_N} vértices (n={g.n})"
        )
    result = []
    for size in range(g.n + 1):
        for combo in combinations(g.vertices, size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            result.append((VertexSet(combo), graph_separator_family(induced_subgraph_mask(g, mask))))
    return tuple(result)


def hereditary_property_holds(
    g: Graph,
    p: PropertySpec,
    classifier: PairClassifier = classify_pair
) -> Tuple[bool, Optional[VertexSet]]:
    """Verifica a propriedade em todos os subgrafos induzidos; devolve o menor contraexemplo."""
    for subset, family in induced_families(g):
        if not relation_profile(family, classifier) <= p.allowed:
            return False, subset
    return True, None


def hereditary_relation_profile(
    g: Graph,
    classifier: PairClassifier = classify_pair
) -> FrozenSet[PairRelation]:
    realized = set()
    for _, family in induced_families(g):
        realized |= relation_profile(family, classifier)
    return frozenset(realized)


def is_witness(members: Sequence[Sequence[int]]) -> bool:
    """Subfamília (>= 2 membros) dois a dois intersectante com interseção total vazia."""
    if len(members) < 2:
        return False
    sets = [set(m) for m in members]
    if any(not a & b for a, b in combinations(sets, 2)):
        return False
    return not set.intersection(*sets)


def _report(f: SeparatorFamily, indices: Optional[Sequence[int]]) -> HellyReport:
    if indices is None:
        return HellyReport(holds=True)
    return HellyReport(
        holds=False,
        witness_indices=list(indices),
        witness_sets=[list(f[i]) for i in indices],
    )


def helly_check_bruteforce(f: SeparatorFamily) -> HellyReport:
    """Examina todas as subfamílias com >= 2 membros, menores primeiro."""
    if len(f) > HELLY_BRUTEFORCE_MAX_MEMBERS:
        raise UnsupportedSizeError(
            f"Verificação exaustiva de Helly limitada a {HELLY_BRUTEFORCE_MAX_MEMBERS} membros"
        )
    masks = [VertexSet(s).mask for s in f]
    for size in range(2, len(f) + 1):
        for combo in combinations(range(len(f)), size):
            if any(not masks[i] & masks[j] for i, j in combinations(combo, 2)):
                continue
            common = -1
            for i in combo:
                common &= masks[i]
            if not common:
                return _report(f, combo)
    return _report(f, None)


def helly_check_triples(f: SeparatorFamily) -> HellyReport:
    """Critério das triplas: para cada trio de vértices, os membros com >= 2 deles
    (sempre dois a dois intersectantes) precisam ter interseção não vazia."""
    masks = [VertexSet(s).mask for s in f]
    ground = 0
    for m in masks:
        ground |= m
    for trio in combinations(list(mask_members(ground)), 3):
        trio_mask = 0
        for v in trio:
            trio_mask |= 1 << v
        chosen = [i for i, m in enumerate(masks) if bin(m & trio_mask).count("1") >= 2]
        if len(chosen) < 2:
            continue
        common = -1
        for i in chosen:
            common &= masks[i]
        if not common:
            return _report(f, chosen)
    return _report(f, None)


def hereditary_helly_holds(g: Graph) -> HellyReport:
    """Helly em S(G') para todo subgrafo induzido; o contraexemplo é o menor G' que falha."""
    for subset, family in induced_families(g):
        report = helly_check_triples(family)
        if not report.holds:
            report.counterexample_vertices = list(subset)
            # Índices da testemunha referem-se a S(G') com ids reindexados.
            report.witness_sets = [[subset[v] for v in s] for s in report.witness_sets]
            return report
    return HellyReport(holds=True)


def leaf_separators(t: CliqueTree) -> SeparatorFamily:
    if len(t.cliques) < 2:
        raise DomainError("Árvore com um único nó não tem folhas com arestas")
    leaves = set(t.leaves())
    return SeparatorFamily(tuple(e.label for e in t.edges if e.a in leaves or e.b in leaves))
