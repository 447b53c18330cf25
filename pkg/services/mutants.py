"""Definições usadas pela verificação e os mutantes documentados.

Cada mutante altera um único padrão, um conjunto de relações permitidas ou a
classificação de pares; a verificação exaustiva precisa acusar falha em todos.
"""
from dataclasses import dataclass, field, replace
from typing import Dict, Mapping, Optional

from services.errors import DomainError
from services.graph_core import Graph
from services.pattern_detector import CATALOG, CLASS_PATTERNS, PatternGraph
from services.separator_analysis import (
    SEPARATOR_CLASSES,
    PairClassifier,
    PairRelation,
    PropertySpec,
    classify_pair,
)


@dataclass(frozen=True)
class Definitions:
    name: str = "baseline"
    description: str = "catálogo e classes sem alteração"
    catalog: Mapping[str, PatternGraph] = field(default_factory=lambda: dict(CATALOG))
    class_patterns: Mapping[str, tuple] = field(default_factory=lambda: dict(CLASS_PATTERNS))
    separator_classes: Mapping[str, PropertySpec] = field(default_factory=lambda: dict(SEPARATOR_CLASSES))
    classifier: PairClassifier = classify_pair


BASELINE = Definitions()


def _with_pattern(name: str, n: int, edges) -> Dict[str, PatternGraph]:
    catalog = dict(CATALOG)
    catalog[name] = PatternGraph(name, Graph.from_edges(n, edges))
    return catalog


def overlap_includes_disjoint(a, b) -> PairRelation:
    """Leitura literal de Overlap, que também cobre pares disjuntos."""
    relation = classify_pair(a, b)
    return PairRelation.OVERLAP if relation is PairRelation.DISJOINT else relation


MUTANTS: Dict[str, Definitions] = {
    m.name: m
    for m in (
        replace(
            BASELINE,
            name="butterfly-5-vertex",
            description="butterfly lido como dois triângulos com um vértice comum",
            catalog=_with_pattern("butterfly", 5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
        ),
        replace(
            BASELINE,
            name="overlap-includes-disjoint",
            description="pares disjuntos classificados como Overlap",
            classifier=overlap_includes_disjoint,
        ),
        replace(
            BASELINE,
            name="dart-as-diamond",
            description="dart sem o vértice pendente",
            catalog=_with_pattern("dart", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        ),
        replace(
            BASELINE,
            name="claw-as-k14",
            description="claw trocado por K1,4",
            catalog=_with_pattern("claw", 5, [(0, 1), (0, 2), (0, 3), (0, 4)]),
        ),
        replace(
            BASELINE,
            name="class-iii-disjoint-only",
            description="classe iii sem permitir Equal",
            separator_classes={
                **SEPARATOR_CLASSES,
                "iii": PropertySpec("iii", frozenset({PairRelation.DISJOINT})),
            },
        ),
        replace(
            BASELINE,
            name="hajos-as-gem",
            description="padrão de Helly trocado pelo gem",
            catalog=_with_pattern(
                "hajos", 5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]
            ),
        ),
    )
}


def get_definitions(mutant: Optional[str] = None) -> Definitions:
    if not mutant:
        return BASELINE
    if mutant not in MUTANTS:
        raise DomainError(f"Mutante desconhecido: {mutant} (disponíveis: {', '.join(MUTANTS)})")
    return MUTANTS[mutant]
