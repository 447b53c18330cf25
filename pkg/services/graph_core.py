import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from services.errors import DomainError, GraphParseError, UnsupportedSizeError

logger = logging.getLogger("graphclass.graph_core")

GRAPH6_MAX_N = 62
GRAPH6_HEADER = ">>graph6<<"
_MIN_BYTE = 63
_MAX_BYTE = 126


def pair_index(u: int, v: int) -> int:
    """Posição do par {u, v} na matriz triangular, na ordem de colunas do graph6."""
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def mask_members(mask: int) -> Iterator[int]:
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


class VertexSet(tuple):
    """Conjunto de vértices: tupla ordenada e sem repetições."""

    def __new__(cls, members: Iterable[int] = ()):
        return super().__new__(cls, sorted(set(members)))

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        return tuple.__new__(cls, mask_members(mask))

    @property
    def mask(self) -> int:
        value = 0
        for v in self:
            value |= 1 << v
        return value

    def __and__(self, other: Iterable[int]) -> "VertexSet":
        return VertexSet(set(self) & set(other))

    def __or__(self, other: Iterable[int]) -> "VertexSet":
        return VertexSet(set(self) | set(other))

    def __sub__(self, other: Iterable[int]) -> "VertexSet":
        return VertexSet(set(self) - set(other))

    def issubset(self, other: Iterable[int]) -> bool:
        return set(self) <= set(other)

    def __repr__(self) -> str:
        return f"VertexSet({list(self)})"


@dataclass(frozen=True)
class Graph:
    """Grafo simples não direcionado com vértices 0..n-1.

    A adjacência fica numa matriz triangular compactada em `bits` (bit k = k-ésimo
    par na ordem do graph6). `names` é só para relatórios e não entra na igualdade.
    """

    n: int
    bits: int = 0
    names: Optional[Tuple[str, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"Número de vértices inválido: {self.n}")
        if self.bits < 0 or self.bits >> (self.n * (self.n - 1) // 2):
            raise DomainError("Bits de adjacência fora da matriz triangular")
        if self.names is not None and len(self.names) != self.n:
            raise DomainError("Mapa de nomes não cobre exatamente os vértices do grafo")

        masks = [0] * self.n
        for v in range(1, self.n):
            base = v * (v - 1) // 2
            row = self.bits >> base
            for u in range(v):
                if row >> u & 1:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        names: Optional[Sequence[str]] = None
    ) -> "Graph":
        bits = 0
        for u, v in edges:
            if u == v:
                raise DomainError(f"Laço no vértice {u} não é permitido")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"Aresta ({u}, {v}) fora do intervalo 0..{n - 1}")
            bits |= 1 << pair_index(u, v)
        return cls(n, bits, tuple(names) if names is not None else None)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return u != v and bool(self._masks[u] >> v & 1)

    def neighbors_mask(self, v: int) -> int:
        return self._masks[v]

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet.from_mask(self._masks[v])

    def degree(self, v: int) -> int:
        return bin(self._masks[v]).count("1")

    def edges(self) -> Iterator[Tuple[int, int]]:
        for v in range(1, self.n):
            for u in range(v):
                if self._masks[u] >> v & 1:
                    yield u, v

    @property
    def edge_count(self) -> int:
        return bin(self.bits).count("1")

    def is_clique_mask(self, mask: int) -> bool:
        for v in mask_members(mask):
            if (mask & ~(1 << v)) & ~self._masks[v]:
                return False
        return True

    def label(self, v: int) -> str:
        return self.names[v] if self.names else str(v)


def _check_vertices(g: Graph, members: Iterable[int]) -> None:
    for v in members:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise DomainError(f"Vértice {v} fora do intervalo 0..{g.n - 1}")


def parse_graph6(text: str) -> Graph:
    """Decodifica um grafo no formato graph6 (até 62 vértices)."""
    data = text.strip()
    base_offset = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base_offset = len(GRAPH6_HEADER)
    if not data:
        raise GraphParseError("Texto graph6 vazio", offset=base_offset)

    for i, ch in enumerate(data):
        if not _MIN_BYTE <= ord(ch) <= _MAX_BYTE:
            raise GraphParseError(
                f"Caractere {ch!r} fora do intervalo graph6 (63..126)",
                offset=base_offset + i
            )

    n = ord(data[0]) - _MIN_BYTE
    if n > GRAPH6_MAX_N:
        raise UnsupportedSizeError(
            f"Campo de tamanho de múltiplos bytes não suportado (byte {base_offset}); máximo {GRAPH6_MAX_N} vértices"
        )

    pair_count = n * (n - 1) // 2
    expected = (pair_count + 5) // 6
    payload = data[1:]
    if len(payload) < expected:
        raise GraphParseError(
            f"Payload truncado: esperados {expected} bytes para n={n}, recebidos {len(payload)}",
            offset=base_offset + 1 + len(payload)
        )
    if len(payload) > expected:
        raise GraphParseError(
            f"Bytes excedentes após o payload de n={n}",
            offset=base_offset + 1 + expected
        )

    bits = 0
    for k in range(expected * 6):
        chunk = ord(payload[k // 6]) - _MIN_BYTE
        if chunk >> (5 - k % 6) & 1:
            if k >= pair_count:
                raise GraphParseError(
                    "Bits de preenchimento diferentes de zero",
                    offset=base_offset + 1 + k // 6
                )
            bits |= 1 << k
    return Graph(n, bits)


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise UnsupportedSizeError(f"graph6 suporta no máximo {GRAPH6_MAX_N} vértices (n={g.n})")
    pair_count = g.n * (g.n - 1) // 2
    out = [chr(g.n + _MIN_BYTE)]
    for start in range(0, pair_count, 6):
        chunk = 0
        for k in range(start, start + 6):
            chunk <<= 1
            if k < pair_count and g.bits >> k & 1:
                chunk |= 1
        out.append(chr(chunk + _MIN_BYTE))
    return "".join(out)


def _build_edge_list_graph(tokens: List[str], edges: List[Tuple[str, str]]) -> Graph:
    if all(t.isdigit() for t in tokens):
        order = sorted(tokens, key=int)
    else:
        order = tokens
    index: Dict[str, int] = {name: i for i, name in enumerate(order)}
    return Graph.from_edges(
        len(order),
        ((index[a], index[b]) for a, b in edges),
        names=order
    )


def parse_edge_list(text: str) -> List[Graph]:
    """Lê um ou mais grafos em lista de arestas.

    Cada linha é "u v" (aresta) ou "u" (vértice isolado). Uma linha "# nome"
    inicia um novo grafo quando o atual já tem conteúdo.
    """
    graphs: List[Graph] = []
    tokens: List[str] = []
    seen: set = set()
    edges: List[Tuple[str, str]] = []

    def flush():
        if tokens:
            graphs.append(_build_edge_list_graph(list(tokens), list(edges)))
        tokens.clear()
        seen.clear()
        edges.clear()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            flush()
            continue
        parts = line.split()
        if len(parts) > 2:
            raise GraphParseError(f"Linha de lista de arestas inválida: {line!r}", line=lineno)
        if len(parts) == 2 and parts[0] == parts[1]:
            raise GraphParseError(f"Laço em {parts[0]!r} não é permitido", line=lineno)
        for token in parts:
            if token not in seen:
                seen.add(token)
                tokens.append(token)
        if len(parts) == 2:
            edges.append((parts[0], parts[1]))
    flush()
    return graphs


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.label(u)} {g.label(v)}" for u, v in g.edges()]
    isolated = [g.label(v) for v in g.vertices if g.neighbors_mask(v) == 0]
    return "\n".join(lines + isolated)


def _looks_like_graph6(line: str) -> bool:
    if line.startswith(GRAPH6_HEADER):
        return True
    return bool(line) and all(_MIN_BYTE <= ord(ch) <= _MAX_BYTE for ch in line)


def read_graphs(text: str, fmt: str = "auto") -> List[Graph]:
    """Lê grafos em graph6 (um por linha) ou lista de arestas.

    `auto` escolhe graph6 só quando todas as linhas úteis têm a forma de graph6.
    """
    if fmt not in ("auto", "graph6", "edgelist"):
        raise DomainError(f"Formato de entrada desconhecido: {fmt}")

    lines = [line.strip() for line in text.splitlines()]
    if fmt == "auto":
        data = [line for line in lines if line and not line.startswith("#")]
        fmt = "graph6" if data and all(_looks_like_graph6(line) for line in data) else "edgelist"

    if fmt == "edgelist":
        return parse_edge_list(text)

    graphs = []
    for lineno, line in enumerate(lines, start=1):
        if not line or line.startswith("#"):
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphParseError as e:
            raise GraphParseError(str(e), offset=e.offset, line=lineno) from e
    return graphs


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgrafo induzido por `s`, reindexado 0..|s|-1 pela ordem crescente de `s`."""
    members = list(s)
    _check_vertices(g, members)
    vs = VertexSet(members)
    bits = 0
    for j in range(1, len(vs)):
        row = g.neighbors_mask(vs[j])
        for i in range(j):
            if row >> vs[i] & 1:
                bits |= 1 << pair_index(i, j)
    names = tuple(g.names[v] for v in vs) if g.names else None
    return Graph(len(vs), bits, names)


def induced_subgraph_mask(g: Graph, mask: int) -> Graph:
    return induced_subgraph(g, mask_members(mask))


def remove_vertices(g: Graph, r: Iterable[int]) -> Tuple[Graph, VertexSet]:
    """Remove `r` de `g`; devolve o grafo resultante e os vértices originais mantidos."""
    removed = VertexSet(r)
    _check_vertices(g, removed)
    kept = VertexSet(v for v in g.vertices if v not in set(removed))
    return induced_subgraph(g, kept), kept


def component_masks(g: Graph, within: Optional[int] = None) -> List[int]:
    """Componentes conexas de g[within] como máscaras, ordenadas pelo menor vértice."""
    remaining = g.full_mask if within is None else within
    components = []
    while remaining:
        start = remaining & -remaining
        component = start
        frontier = start
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            fresh = g.neighbors_mask(v) & remaining & ~component
            component |= fresh
            frontier |= fresh
        components.append(component)
        remaining &= ~component
    return components


def connected_components(g: Graph) -> List[VertexSet]:
    return [VertexSet.from_mask(mask) for mask in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1
