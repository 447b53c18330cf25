import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from services.chordal_engine import is_chordal
from services.errors import DomainError, UnsupportedSizeError
from services.graph_core import Graph, is_connected, mask_members

logger = logging.getLogger("graphclass.enumeration")

INTERNAL_MAX_N = 8
LABELED_ORACLE_MAX_N = 5


class CorpusFilter(str, Enum):
    ALL = "all"
    CONNECTED = "connected"
    CHORDAL = "chordal"
    CONNECTED_CHORDAL = "connected-chordal"


# Contagens publicadas de classes de isomorfismo para n = 1..8
# (OEIS A000088, A001349, A048193, A048192).
PUBLISHED_CLASS_COUNTS: Dict[CorpusFilter, Tuple[int, ...]] = {
    CorpusFilter.ALL: (1, 2, 4, 11, 34, 156, 1044, 12346),
    CorpusFilter.CONNECTED: (1, 1, 2, 6, 21, 112, 853, 11117),
    CorpusFilter.CHORDAL: (1, 2, 4, 10, 27, 94, 393, 2119),
    CorpusFilter.CONNECTED_CHORDAL: (1, 1, 2, 5, 15, 58, 272, 1614),
}


def parse_filter(value) -> CorpusFilter:
    try:
        return CorpusFilter(value)
    except ValueError:
        valid = ", ".join(f.value for f in CorpusFilter)
        raise DomainError(f"Filtro desconhecido: {value} (use {valid})")


def matches_filter(g: Graph, flt: CorpusFilter) -> bool:
    if flt in (CorpusFilter.CONNECTED, CorpusFilter.CONNECTED_CHORDAL) and not is_connected(g):
        return False
    if flt in (CorpusFilter.CHORDAL, CorpusFilter.CONNECTED_CHORDAL) and not is_chordal(g):
        return False
    return True


def _code(g: Graph, order: Sequence[int]) -> int:
    # Bits na ordem do graph6, primeiro par no bit mais significativo:
    # o menor inteiro corresponde à menor cadeia de bits.
    code = 0
    for j in range(1, len(order)):
        row = g.neighbors_mask(order[j])
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def refined_cells(g: Graph) -> List[List[int]]:
    """Partição ordenada por refinamento de cores a partir dos graus."""
    colors = [g.degree(v) for v in g.vertices]
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in mask_members(g.neighbors_mask(v)))))
            for v in g.vertices
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        stable = len(palette) == len(set(colors))
        colors = refined
        if stable:
            break
    cells: Dict[int, List[int]] = {}
    for v in g.vertices:
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_code(g: Graph) -> int:
    """Menor cadeia de adjacência entre as permutações compatíveis com a partição refinada."""
    cells = refined_cells(g)
    best = None
    for arrangement in product(*(permutations(cell) for cell in cells)):
        order = [v for part in arrangement for v in part]
        code = _code(g, order)
        if best is None or code < best:
            best = code
    return best or 0


def canonical_form(g: Graph) -> Graph:
    code = canonical_code(g)
    pairs = g.n * (g.n - 1) // 2
    bits = 0
    for k in range(pairs):
        if code >> (pairs - 1 - k) & 1:
            bits |= 1 << k
    return Graph(g.n, bits)


def bruteforce_canonical_code(g: Graph) -> int:
    return min(_code(g, order) for order in permutations(g.vertices))


def enumerate_graphs(max_n: int, flt=CorpusFilter.ALL, min_n: int = 1) -> Iterator[Graph]:
    """Um representante por classe de isomorfismo, com min_n <= n <= max_n.

    Cada nível nasce do anterior acrescentando um vértice com todas as vizinhanças
    possíveis. Os quatro filtros são preservados pela remoção de algum vértice, então
    basta expandir os grafos já filtrados.
    """
    flt = parse_filter(flt)
    if max_n > INTERNAL_MAX_N:
        raise UnsupportedSizeError(
            f"Enumeração interna limitada a n <= {INTERNAL_MAX_N}; para n={max_n} use um corpus graph6 externo"
        )
    if max_n < 1:
        return

    level: List[Graph] = [Graph(1)]
    for n in range(1, max_n + 1):
        if n > 1:
            start = time.perf_counter()
            offset = (n - 1) * (n - 2) // 2
            seen: Dict[int, Graph] = {}
            candidates = 0
            for parent in level:
                for neighborhood in range(1 << (n - 1)):
                    child = Graph(n, parent.bits | neighborhood << offset)
                    if not matches_filter(child, flt):
                        continue
                    candidates += 1
                    code = canonical_code(child)
                    if code not in seen:
                        seen[code] = canonical_form(child)
            level = [seen[code] for code in sorted(seen)]
            logger.debug(
                "Enumeration level | n=%s filter=%s candidates=%s classes=%s duration_ms=%.1f",
                n,
                flt.value,
                candidates,
                len(level),
                (time.perf_counter() - start) * 1000
            )
        if n >= min_n:
            yield from level


@lru_cache(maxsize=None)
def labeled_class_count(n: int, flt=CorpusFilter.ALL) -> int:
    """Oráculo: todos os grafos rotulados em n vértices, deduplicados por permutação completa."""
    flt = parse_filter(flt)
    if n > LABELED_ORACLE_MAX_N:
        raise UnsupportedSizeError(f"Oráculo rotulado limitado a n <= {LABELED_ORACLE_MAX_N}")
    codes = set()
    for bits in range(1 << (n * (n - 1) // 2)):
        g = Graph(n, bits)
        if matches_filter(g, flt):
            codes.add(bruteforce_canonical_code(g))
    return len(codes)


def reference_class_count(n: int, flt=CorpusFilter.ALL) -> Tuple[int, str]:
    """Contagem de referência para n vértices e a origem dela (oráculo rotulado ou tabela publicada)."""
    flt = parse_filter(flt)
    if n <= LABELED_ORACLE_MAX_N:
        return labeled_class_count(n, flt), "oráculo rotulado"
    if n > INTERNAL_MAX_N:
        raise UnsupportedSizeError(f"Sem contagem de referência para n={n}")
    return PUBLISHED_CLASS_COUNTS[flt][n - 1], "contagem publicada"


@dataclass
class Corpus:
    source: str
    filter: CorpusFilter
    graphs: List[Graph] = field(default_factory=list)
    max_n: Optional[int] = None
    min_n: int = 1

    @classmethod
    def internal(cls, max_n: int, flt=CorpusFilter.CONNECTED_CHORDAL, min_n: int = 1) -> "Corpus":
        flt = parse_filter(flt)
        start = time.perf_counter()
        graphs = list(enumerate_graphs(max_n, flt, min_n))
        logger.info(
            "Corpus enumerated | max_n=%s filter=%s graphs=%s duration_ms=%.1f",
            max_n,
            flt.value,
            len(graphs),
            (time.perf_counter() - start) * 1000
        )
        return cls(source=f"internal(max_n={max_n})", filter=flt, graphs=graphs, max_n=max_n, min_n=min_n)

    @classmethod
    def external(cls, graphs: Iterable[Graph], flt=CorpusFilter.ALL, source: str = "external") -> "Corpus":
        flt = parse_filter(flt)
        given = list(graphs)
        kept = [g for g in given if matches_filter(g, flt)]
        logger.info(
            "Corpus ingested | source=%s filter=%s given=%s kept=%s",
            source,
            flt.value,
            len(given),
            len(kept)
        )
        return cls(source=source, filter=flt, graphs=kept, max_n=max((g.n for g in kept), default=None))

    def __len__(self) -> int:
        return len(self.graphs)

    def counts_by_n(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for g in self.graphs:
            counts[g.n] = counts.get(g.n, 0) + 1
        return dict(sorted(counts.items()))

