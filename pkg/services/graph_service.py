import logging
import time
from typing import Iterator, List, Optional, Sequence

from schemas.graphs import (
    ClassReport,
    CliqueTreeReport,
    HellyReport,
    PatternProfile,
    SeparatorReport,
)
from schemas.verification import VerificationReport
from services.chordal_engine import (
    build_clique_tree,
    clique_tree_to_dot,
    graph_separator_family,
    is_chordal,
)
from services.enumeration import Corpus, enumerate_graphs
from services.errors import DomainError
from services.graph_core import Graph, to_graph6
from services.mutants import get_definitions
from services.pattern_detector import classify, forbidden_profile
from services.separator_analysis import (
    HELLY_BRUTEFORCE_MAX_MEMBERS,
    HEREDITARY_SCAN_MAX_N,
    helly_check_bruteforce,
    helly_check_triples,
    hereditary_helly_holds,
    relation_matrix,
)
from services.verification_harness import run_verification

logger = logging.getLogger("graphclass.service")


class GraphClassService:
    def __init__(self, seeds: Sequence[int], workers: int = 1, mutant: Optional[str] = None):
        self.seeds = list(seeds)
        self.workers = workers
        self.definitions = get_definitions(mutant)

    def _require_chordal(self, g: Graph, command: str) -> None:
        if not is_chordal(g):
            raise DomainError(f"{command} exige grafo cordal ({to_graph6(g)} não é cordal)")

    def classify(self, g: Graph) -> ClassReport:
        self._require_chordal(g, "classify")
        start = time.perf_counter()
        report = classify(g, self.definitions.catalog, self.definitions.class_patterns)
        logger.info(
            "Classify | graph=%s members=%s duration_ms=%.1f",
            report.graph6,
            ",".join(k for k, v in report.classes.items() if v.member) or "none",
            (time.perf_counter() - start) * 1000
        )
        return report

    def separators(self, g: Graph) -> SeparatorReport:
        self._require_chordal(g, "separators")
        family = graph_separator_family(g, self.seeds[0] if self.seeds else 0)
        matrix = relation_matrix(family, self.definitions.classifier)
        return SeparatorReport(
            graph6=to_graph6(g),
            separators=[list(s) for s in family],
            relations=[[r.value if r else None for r in row] for row in matrix],
        )

    def clique_tree(self, g: Graph, seed: int = 0) -> CliqueTreeReport:
        tree = build_clique_tree(g, seed)
        return CliqueTreeReport(
            graph6=to_graph6(g),
            seed=seed,
            cliques=[list(c) for c in tree.cliques],
            edges=[[e.a, e.b] for e in tree.edges],
            labels=[list(e.label) for e in tree.edges],
            dot=clique_tree_to_dot(tree, g.names),
        )

    def helly(self, g: Graph) -> HellyReport:
        self._require_chordal(g, "helly")
        family = graph_separator_family(g)
        if len(family) <= HELLY_BRUTEFORCE_MAX_MEMBERS:
            report = helly_check_bruteforce(family)
        else:
            report = helly_check_triples(family)
        if g.n <= HEREDITARY_SCAN_MAX_N:
            report.counterexample_vertices = hereditary_helly_holds(g).counterexample_vertices
        return report

    def patterns(self, g: Graph) -> PatternProfile:
        return PatternProfile(graph6=to_graph6(g), patterns=forbidden_profile(g, self.definitions.catalog))

    def enumerate(self, max_n: int, flt: str, min_n: int = 1) -> Iterator[Graph]:
        return enumerate_graphs(max_n, flt, min_n)

    def verify(
        self,
        max_n: Optional[int] = None,
        flt: str = "connected",
        graphs: Optional[List[Graph]] = None,
        source: str = "external"
    ) -> VerificationReport:
        if graphs is not None:
            corpus = Corpus.external(graphs, flt, source=source)
        else:
            corpus = Corpus.internal(max_n, flt)
        return run_verification(corpus, self.seeds, self.definitions, self.workers)
