from typing import Optional


class GraphClassError(ValueError):
    """Erro base das operações sobre grafos."""


class GraphParseError(GraphClassError):
    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"linha {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{message}{suffix}")


class DomainError(GraphClassError):
    """Pré-condição violada (grafo não cordal, vértice fora do intervalo, etc.)."""


class UnsupportedSizeError(GraphClassError):
    pass
