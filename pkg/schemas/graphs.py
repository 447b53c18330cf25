from pydantic import BaseModel, Field
from typing import Dict, List, Optional


class GraphRequest(BaseModel):
    graph: str = Field(..., description="Grafo em graph6 ou lista de arestas")
    format: str = Field("auto", description="Formato de entrada: auto, graph6 ou edgelist")
    seed: int = Field(0, description="Semente de desempate da árvore de cliques")


class HellyReport(BaseModel):
    holds: bool = Field(..., description="Indica se a família satisfaz a propriedade de Helly")
    witness_indices: Optional[List[int]] = Field(None, description="Índices da testemunha na família")
    witness_sets: Optional[List[List[int]]] = Field(None, description="Conjuntos da testemunha")
    counterexample_vertices: Optional[List[int]] = Field(
        None,
        description="Vértices do menor subgrafo induzido cuja família falha"
    )


class PatternWitness(BaseModel):
    pattern: str
    vertices: List[int]


class ClassVerdict(BaseModel):
    member: bool
    witness: Optional[PatternWitness] = None


class ClassReport(BaseModel):
    graph6: str
    chordal: bool
    classes: Dict[str, ClassVerdict] = Field(default_factory=dict)


class SeparatorReport(BaseModel):
    graph6: str
    separators: List[List[int]] = Field(..., description="Multiconjunto normalizado de separadores")
    relations: List[List[Optional[str]]] = Field(..., description="Relação entre cada par de separadores")


class CliqueTreeReport(BaseModel):
    graph6: str
    seed: int
    cliques: List[List[int]]
    edges: List[List[int]] = Field(..., description="Pares de índices de cliques")
    labels: List[List[int]]
    dot: str


class PatternProfile(BaseModel):
    graph6: str
    patterns: List[str]
