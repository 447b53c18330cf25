from typing import Iterable, List, Optional, Sequence, TypeVar

from services.errors import DomainError, GraphParseError
from services.graph_core import Graph, read_graphs

T = TypeVar("T")


def get_setting_or_param(param_value: Optional[T], setting_value: Optional[T], param_name: str) -> T:
    if param_value is not None:
        return param_value
    if setting_value is not None:
        return setting_value
    raise DomainError(f"{param_name} deve ser fornecido na chamada ou definido no .env")


def load_graphs(text: str, fmt: str = "auto") -> List[Graph]:
    graphs = read_graphs(text, fmt)
    if not graphs:
        raise GraphParseError("Nenhum grafo encontrado na entrada")
    return graphs


def format_vertex_set(members: Iterable[int], names: Optional[Sequence[str]] = None) -> str:
    return "{" + ",".join(names[v] if names else str(v) for v in members) + "}"
