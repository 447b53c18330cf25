import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from services.errors import DomainError, UnsupportedSizeError
from services.graph_core import (
    Graph,
    VertexSet,
    component_masks,
    induced_subgraph_mask,
    is_connected,
    mask_members,
)

logger = logging.getLogger("graphclass.chordal")

BRUTEFORCE_CHORDAL_MAX_N = 12
EXHAUSTIVE_SEPARATORS_MAX_N = 8


@dataclass(frozen=True)
class EliminationOrdering:
    order: Tuple[int, ...]

    def reversed(self) -> "EliminationOrdering":
        return EliminationOrdering(tuple(reversed(self.order)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def __len__(self) -> int:
        return len(self.order)


class CliqueTreeEdge(NamedTuple):
    a: int
    b: int
    label: VertexSet


@dataclass(frozen=True)
class CliqueTree:
    """Árvore sobre as cliques maximais; cada aresta é rotulada pela interseção dos extremos."""

    cliques: Tuple[VertexSet, ...]
    edges: Tuple[CliqueTreeEdge, ...]

    def degree(self, node: int) -> int:
        return sum(1 for e in self.edges if node in (e.a, e.b))

    def leaves(self) -> List[int]:
        return [i for i in range(len(self.cliques)) if self.degree(i) == 1]


@dataclass(frozen=True)
class SeparatorFamily:
    """Multiconjunto indexado de separadores minimais (conjuntos iguais podem repetir)."""

    separators: Tuple[VertexSet, ...] = ()

    def __post_init__(self):
        for s in self.separators:
            if not s:
                raise DomainError("Separador vazio não pertence à família")

    @classmethod
    def normalized(cls, separators) -> "SeparatorFamily":
        return cls(tuple(sorted(VertexSet(s) for s in separators)))

    def __len__(self) -> int:
        return len(self.separators)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.separators)

    def __getitem__(self, index: int) -> VertexSet:
        return self.separators[index]

    def support(self) -> List[VertexSet]:
        return sorted(set(self.separators))


class _DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def root(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def join(self, a: int, b: int) -> bool:
        ra, rb = self.root(a), self.root(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def maximum_cardinality_search(g: Graph) -> EliminationOrdering:
    """Visita sempre o vértice com mais vizinhos já visitados (empate: menor id)."""
    weights = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        best = -1
        for v in g.vertices:
            if not visited >> v & 1 and (best < 0 or weights[v] > weights[best]):
                best = v
        order.append(best)
        visited |= 1 << best
        for u in mask_members(g.neighbors_mask(best) & ~visited):
            weights[u] += 1
    return EliminationOrdering(tuple(order))


def _as_order(g: Graph, o: Union[EliminationOrdering, Sequence[int]]) -> Tuple[int, ...]:
    order = tuple(o.order if isinstance(o, EliminationOrdering) else o)
    if sorted(order) != list(g.vertices):
        raise DomainError(f"Ordem {list(order)} não é uma permutação de 0..{g.n - 1}")
    return order


def is_perfect_elimination_ordering(g: Graph, o: Union[EliminationOrdering, Sequence[int]]) -> bool:
    order = _as_order(g, o)
    later = 0
    for v in reversed(order):
        if not g.is_clique_mask(g.neighbors_mask(v) & later):
            return False
        later |= 1 << v
    return True


def perfect_elimination_ordering(g: Graph) -> EliminationOrdering:
    return maximum_cardinality_search(g).reversed()


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination_ordering(g, perfect_elimination_ordering(g))


def _induces_cycle(g: Graph, mask: int) -> bool:
    for v in mask_members(mask):
        if bin(g.neighbors_mask(v) & mask).count("1") != 2:
            return False
    return len(component_masks(g, mask)) == 1


def is_chordal_bruteforce(g: Graph) -> bool:
    """Procura ciclos induzidos de comprimento >= 4 em todos os subconjuntos."""
    if g.n > BRUTEFORCE_CHORDAL_MAX_N:
        raise UnsupportedSizeError(
            f"Oráculo de força bruta limitado a {BRUTEFORCE_CHORDAL_MAX_N} vértices (n={g.n})"
        )
    for size in range(4, g.n + 1):
        for combo in combinations(g.vertices, size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _induces_cycle(g, mask):
                return False
    return True


def _require_chordal(g: Graph, operation: str) -> None:
    if not is_chordal(g):
        raise DomainError(f"{operation} exige grafo cordal")


def maximal_cliques(g: Graph) -> List[VertexSet]:
    _require_chordal(g, "maximal_cliques")
    later = 0
    candidates = []
    for v in reversed(perfect_elimination_ordering(g).order):
        candidates.append((g.neighbors_mask(v) & later) | 1 << v)
        later |= 1 << v

    unique = set(candidates)
    maximal = [c for c in unique if not any(c != d and c & d == c for d in unique)]
    return sorted(VertexSet.from_mask(c) for c in maximal)


def build_clique_tree(g: Graph, tie_break_seed: int = 0) -> CliqueTree:
    """Árvore geradora de peso máximo do grafo de interseção das cliques.

    Arestas de mesmo peso são ordenadas por chaves sorteadas com `tie_break_seed`,
    então sementes diferentes podem produzir árvores diferentes.
    """
    _require_chordal(g, "build_clique_tree")
    if not is_connected(g):
        raise DomainError("build_clique_tree exige grafo conexo; use graph_separator_family")

    cliques = maximal_cliques(g)
    rng = random.Random(tie_break_seed)
    candidates = []
    for i, j in combinations(range(len(cliques)), 2):
        weight = len(cliques[i] & cliques[j])
        if weight:
            candidates.append((-weight, rng.random(), i, j))
    candidates.sort()

    forest = _DisjointSet(len(cliques))
    edges = []
    for _, _, i, j in candidates:
        if forest.join(i, j):
            edges.append(CliqueTreeEdge(i, j, cliques[i] & cliques[j]))
            if len(edges) == len(cliques) - 1:
                break
    return CliqueTree(tuple(cliques), tuple(edges))


def separator_multiset(t: CliqueTree) -> SeparatorFamily:
    return SeparatorFamily.normalized(e.label for e in t.edges)


@lru_cache(maxsize=8192)
def graph_separator_family(g: Graph, tie_break_seed: int = 0) -> SeparatorFamily:
    """Multiconjunto S(G) para qualquer grafo cordal: união disjunta sobre as componentes."""
    _require_chordal(g, "graph_separator_family")
    labels = []
    for mask in component_masks(g):
        members = list(mask_members(mask))
        if len(members) < 3:
            continue
        tree = build_clique_tree(induced_subgraph_mask(g, mask), tie_break_seed)
        for edge in tree.edges:
            labels.append(VertexSet(members[i] for i in edge.label))
    return SeparatorFamily.normalized(labels)


def validate_clique_tree(g: Graph, t: CliqueTree) -> List[str]:
    """Lista os problemas encontrados na árvore (vazia quando a árvore é válida)."""
    problems = []
    if sorted(t.cliques) != maximal_cliques(g):
        problems.append("nós não coincidem com as cliques maximais")

    k = len(t.cliques)
    forest = _DisjointSet(k)
    if len(t.edges) != max(k - 1, 0):
        problems.append(f"{len(t.edges)} arestas para {k} cliques")
    for e in t.edges:
        if not forest.join(e.a, e.b):
            problems.append(f"ciclo na aresta ({e.a}, {e.b})")
        if e.label != t.cliques[e.a] & t.cliques[e.b]:
            problems.append(f"rótulo {list(e.label)} diferente da interseção em ({e.a}, {e.b})")

    for v in g.vertices:
        nodes = {i for i, c in enumerate(t.cliques) if v in c}
        inner = [e for e in t.edges if e.a in nodes and e.b in nodes]
        if nodes and len(inner) != len(nodes) - 1:
            problems.append(f"cliques com o vértice {v} não formam subárvore")
    return problems


def clique_tree_to_dot(t: CliqueTree, names: Optional[Sequence[str]] = None) -> str:
    def fmt(vs: VertexSet) -> str:
        return "{" + ",".join(names[v] if names else str(v) for v in vs) + "}"

    lines = ["graph clique_tree {"]
    for i, clique in enumerate(t.cliques):
        lines.append(f'  c{i} [label="{fmt(clique)}"];')
    for e in t.edges:
        lines.append(f'  c{e.a} -- c{e.b} [label="{fmt(e.label)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _neighborhood_mask(g: Graph, mask: int) -> int:
    result = 0
    for v in mask_members(mask):
        result |= g.neighbors_mask(v)
    return result & ~mask


def is_minimal_separator(g: Graph, s: Sequence[int]) -> bool:
    """S é separador minimal sse G - S tem ao menos duas componentes cheias (N(C) = S)."""
    s_mask = VertexSet(s).mask
    if not s_mask:
        return False
    full = 0
    for component in component_masks(g, g.full_mask & ~s_mask):
        if _neighborhood_mask(g, component) == s_mask:
            full += 1
    return full >= 2


def minimal_separators_direct(g: Graph) -> List[VertexSet]:
    """Separadores minimais por vizinhança de componentes, fechada sob a regra de expansão.

    Parte de N(C) para cada componente C de G - N[u] e, para cada separador S e
    x em S, acrescenta N(C) para as componentes C de G - (S u N(x)).
    """
    found = set()
    pending = []

    def collect(removed: int) -> None:
        for component in component_masks(g, g.full_mask & ~removed):
            separator = _neighborhood_mask(g, component)
            if separator and separator not in found:
                found.add(separator)
                pending.append(separator)

    for u in g.vertices:
        collect(g.neighbors_mask(u) | 1 << u)
    while pending:
        separator = pending.pop()
        for x in mask_members(separator):
            collect(separator | g.neighbors_mask(x))
    return sorted(VertexSet.from_mask(s) for s in found)


def _separates(g: Graph, s_mask: int, u: int, v: int) -> bool:
    for component in component_masks(g, g.full_mask & ~s_mask):
        if component >> u & 1:
            return not component >> v & 1
    return True


def minimal_separators_exhaustive(g: Graph) -> List[VertexSet]:
    if g.n > EXHAUSTIVE_SEPARATORS_MAX_N:
        raise UnsupportedSizeError(
            f"Varredura exaustiva limitada a {EXHAUSTIVE_SEPARATORS_MAX_N} vértices (n={g.n})"
        )
    same_component: Dict[int, int] = {}
    for mask in component_masks(g):
        for v in mask_members(mask):
            same_component[v] = mask

    found = set()
    for u, v in combinations(g.vertices, 2):
        if g.adjacent(u, v) or not same_component[u] >> v & 1:
            continue
        rest = g.full_mask & ~(1 << u | 1 << v)
        subset = rest
        while True:
            if subset and _separates(g, subset, u, v) and not any(
                _separates(g, subset & ~(1 << w), u, v) for w in mask_members(subset)
            ):
                found.add(subset)
            if subset == 0:
                break
            subset = (subset - 1) & rest
    return sorted(VertexSet.from_mask(s) for s in found)
