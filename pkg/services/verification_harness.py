import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from schemas.verification import CorpusInfo, SuiteFailure, SuiteResult, VerificationReport
from services.chordal_engine import (
    BRUTEFORCE_CHORDAL_MAX_N,
    EXHAUSTIVE_SEPARATORS_MAX_N,
    build_clique_tree,
    graph_separator_family,
    is_chordal,
    is_chordal_bruteforce,
    is_minimal_separator,
    minimal_separators_direct,
    minimal_separators_exhaustive,
    separator_multiset,
    validate_clique_tree,
)
from services.enumeration import Corpus, reference_class_count
from services.graph_core import Graph, VertexSet, is_connected, remove_vertices, to_graph6
from services.mutants import BASELINE, Definitions
from services.pattern_detector import (
    REMARK_CONTAINMENTS,
    classify,
    contains_induced,
    missing_containments,
    remark_implications_check,
)
from services.separator_analysis import (
    PairRelation,
    helly_check_bruteforce,
    helly_check_triples,
    hereditary_helly_holds,
    hereditary_property_holds,
    hereditary_relation_profile,
    induced_families,
    is_witness,
    leaf_separators,
    SINGLE_RELATION_BANS,
)

logger = logging.getLogger("graphclass.harness")

DEFAULT_SEEDS: Tuple[int, ...] = tuple(range(20))

RELATION_BAN_PATTERNS: Dict[PairRelation, Tuple[str, ...]] = {
    PairRelation.DISJOINT: ("P4", "2P3"),
    PairRelation.EQUAL: ("claw",),
    PairRelation.PROPER_CONTAINMENT: ("dart",),
    PairRelation.OVERLAP: ("gem", "butterfly"),
}

CLASS_STATEMENTS: Dict[str, str] = {
    "i": "separadores sempre disjuntos <=> (claw, gem)-free",
    "ii": "separadores sempre iguais <=> (P4, gem, dart, butterfly)-free",
    "iii": "disjuntos ou iguais <=> (dart, gem)-free (estritamente cordais)",
    "iv": "disjuntos, iguais ou contidos <=> (gem, butterfly)-free",
    "v": "disjuntos, iguais ou sobrepostos <=> dart-free",
    "vi": "iguais ou contidos <=> (2P3, P4)-free",
}


class Outcome(NamedTuple):
    applies: bool
    exercised: bool = False
    diagnostic: Optional[str] = None


SKIP = Outcome(False)


@dataclass(frozen=True)
class Claim:
    claim_id: str
    statement: str
    check: Callable[[Graph], Outcome]


def _chordal_connected(g: Graph) -> bool:
    return is_connected(g) and is_chordal(g)


def _has_family_of(g: Graph, size: int) -> bool:
    return any(len(family) >= size for _, family in induced_families(g))


def _sets(items) -> str:
    return "[" + ", ".join("{" + ",".join(map(str, s)) + "}" for s in items) + "]"


def check_separator_class(definitions: Definitions, class_id: str, g: Graph) -> Outcome:
    if not _chordal_connected(g):
        return SKIP
    report = classify(g, definitions.catalog, {class_id: definitions.class_patterns[class_id]})
    verdict = report.classes[class_id]
    holds, counterexample = hereditary_property_holds(
        g, definitions.separator_classes[class_id], definitions.classifier
    )
    diagnostic = None
    if verdict.member != holds:
        pattern_side = (
            "membro" if verdict.member
            else f"não membro ({verdict.witness.pattern} em {verdict.witness.vertices})"
        )
        separator_side = "membro" if holds else f"não membro (contraexemplo {list(counterexample)})"
        diagnostic = f"padrões: {pattern_side}; separadores: {separator_side}"
    return Outcome(True, _has_family_of(g, 2), diagnostic)


def check_relation_ban(definitions: Definitions, relation: PairRelation, g: Graph) -> Outcome:
    if not _chordal_connected(g):
        return SKIP
    names = RELATION_BAN_PATTERNS[relation]
    found = [(name, contains_induced(g, definitions.catalog[name])) for name in names]
    present = [(name, vs) for name, vs in found if vs is not None]
    holds, counterexample = hereditary_property_holds(g, SINGLE_RELATION_BANS[relation], definitions.classifier)
    diagnostic = None
    if holds != (not present):
        diagnostic = (
            f"padrões presentes: {[(n, list(vs)) for n, vs in present]}; "
            f"relação {relation.value} {'ausente' if holds else f'realizada em {list(counterexample)}'}"
        )
    return Outcome(True, _has_family_of(g, 2), diagnostic)


def check_helly_theorem(definitions: Definitions, g: Graph) -> Outcome:
    if not _chordal_connected(g):
        return SKIP
    verdict = classify(g, definitions.catalog, {"helly": definitions.class_patterns["helly"]}).classes["helly"]
    report = hereditary_helly_holds(g)
    diagnostic = None
    if verdict.member != report.holds:
        diagnostic = (
            f"hajos-free={verdict.member}; Helly hereditário={report.holds}"
            + (f" (falha em {report.counterexample_vertices}, testemunha {report.witness_sets})"
               if not report.holds else "")
        )
    return Outcome(True, _has_family_of(g, 3), diagnostic)


def check_helly_algorithms(g: Graph) -> Outcome:
    if not is_chordal(g):
        return SKIP
    problems = []
    for subset, family in induced_families(g):
        fast = helly_check_triples(family)
        slow = helly_check_bruteforce(family)
        if fast.holds != slow.holds:
            problems.append(f"{list(subset)}: triplas={fast.holds} força bruta={slow.holds}")
        for name, report in (("triplas", fast), ("força bruta", slow)):
            if not report.holds and not is_witness(report.witness_sets):
                problems.append(f"{list(subset)}: testemunha inválida de {name} {report.witness_sets}")
    return Outcome(True, _has_family_of(g, 3), "; ".join(problems[:3]) or None)


def check_leaf_witness(seeds: Sequence[int], g: Graph) -> Outcome:
    if not _chordal_connected(g):
        return SKIP
    report = hereditary_helly_holds(g)
    if report.holds or len(report.counterexample_vertices) != g.n:
        return Outcome(True, False, None)
    bad = []
    for seed in seeds:
        leaves = leaf_separators(build_clique_tree(g, seed))
        if not is_witness(list(leaves)):
            bad.append(f"semente {seed}: {_sets(leaves)}")
    return Outcome(True, True, "; ".join(bad[:3]) or None)


def check_chordality(g: Graph) -> Outcome:
    if g.n > BRUTEFORCE_CHORDAL_MAX_N:
        return SKIP
    fast, slow = is_chordal(g), is_chordal_bruteforce(g)
    diagnostic = None if fast == slow else f"MCS={fast} ciclos induzidos={slow}"
    return Outcome(True, g.n >= 4, diagnostic)


def check_dirac(g: Graph) -> Outcome:
    if not is_connected(g):
        return SKIP
    separators = minimal_separators_direct(g)
    non_cliques = [s for s in separators if not g.is_clique_mask(s.mask)]
    chordal = is_chordal(g)
    diagnostic = None
    if chordal == bool(non_cliques):
        diagnostic = f"cordal={chordal}; separadores que não são cliques: {_sets(non_cliques)}"
    return Outcome(True, bool(separators), diagnostic)


def check_labels_vs_direct(g: Graph) -> Outcome:
    if not _chordal_connected(g):
        return SKIP
    labels = graph_separator_family(g).support()
    direct = minimal_separators_direct(g)
    diagnostic = None
    if labels != direct:
        diagnostic = f"rótulos {_sets(labels)} != separadores diretos {_sets(direct)}"
    return Outcome(True, bool(direct), diagnostic)


def check_separator_oracles(g: Graph) -> Outcome:
    if not is_connected(g) or g.n > EXHAUSTIVE_SEPARATORS_MAX_N:
        return SKIP
    direct = minimal_separators_direct(g)
    exhaustive = minimal_separators_exhaustive(g)
    problems = []
    if direct != exhaustive:
        problems.append(f"vizinhança {_sets(direct)} != exaustivo {_sets(exhaustive)}")
    rejected = [s for s in direct if not is_minimal_separator(g, s)]
    if rejected:
        problems.append(f"sem duas componentes cheias: {_sets(rejected)}")
    return Outcome(True, bool(exhaustive), "; ".join(problems) or None)


def check_multiset_invariance(seeds: Sequence[int], g: Graph) -> Outcome:
    if not _chordal_connected(g):
        return SKIP
    families = {}
    shapes = set()
    problems = []
    for seed in seeds:
        tree = build_clique_tree(g, seed)
        problems.extend(f"semente {seed}: {p}" for p in validate_clique_tree(g, tree))
        shapes.add(frozenset((e.a, e.b) for e in tree.edges))
        families.setdefault(separator_multiset(tree), []).append(seed)
    if len(families) > 1:
        problems.append(
            "multiconjuntos distintos: "
            + "; ".join(f"{_sets(f)} (sementes {s[:3]})" for f, s in families.items())
        )
    return Outcome(True, len(shapes) > 1, "; ".join(problems[:3]) or None)


def check_separator_heredity(g: Graph) -> Outcome:
    if not _chordal_connected(g):
        return SKIP
    separators = minimal_separators_direct(g)
    missing = []
    for s in separators:
        for size in range(1, len(s)):
            for r in combinations(s, size):
                reduced, kept = remove_vertices(g, r)
                index = {v: i for i, v in enumerate(kept)}
                target = VertexSet(index[v] for v in s if v not in r)
                if target not in minimal_separators_direct(reduced):
                    missing.append(f"S={list(s)} R={list(r)}")
    return Outcome(True, any(len(s) >= 2 for s in separators), "; ".join(missing[:3]) or None)


def check_relation_heredity(definitions: Definitions, g: Graph) -> Outcome:
    """Contenção realizada obriga Equal; sobreposição obriga Disjoint."""
    if not _chordal_connected(g):
        return SKIP
    profile = hereditary_relation_profile(g, definitions.classifier)
    problems = []
    if PairRelation.PROPER_CONTAINMENT in profile and PairRelation.EQUAL not in profile:
        problems.append("contenção sem igualdade")
    if PairRelation.OVERLAP in profile and PairRelation.DISJOINT not in profile:
        problems.append("sobreposição sem disjunção")
    exercised = PairRelation.PROPER_CONTAINMENT in profile or PairRelation.OVERLAP in profile
    return Outcome(True, exercised, "; ".join(problems) or None)


def _evaluate(check: Callable[[Graph], Outcome], graphs: List[Graph], workers: int) -> List[Outcome]:
    if workers > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(check, graphs, chunksize=max(1, len(graphs) // (workers * 4))))
    return [check(g) for g in graphs]


def run_claim(claim: Claim, corpus: Corpus, workers: int = 1) -> SuiteResult:
    start = time.perf_counter()
    outcomes = _evaluate(claim.check, corpus.graphs, workers)
    result = SuiteResult(claim_id=claim.claim_id, statement=claim.statement)
    for g, outcome in zip(corpus.graphs, outcomes):
        if not outcome.applies:
            continue
        result.graphs_tested += 1
        result.graphs_exercised += int(outcome.exercised)
        if outcome.diagnostic:
            result.failures.append(SuiteFailure(graph6=to_graph6(g), diagnostic=outcome.diagnostic))
    result.elapsed_ms = round((time.perf_counter() - start) * 1000, 1)

    log = logger.warning if result.failures else logger.info
    log(
        "Suite finished | claim=%s graphs=%s exercised=%s failures=%s duration_ms=%.1f",
        claim.claim_id,
        result.graphs_tested,
        result.graphs_exercised,
        len(result.failures),
        result.elapsed_ms
    )
    return result


def verify_theorem6(corpus: Corpus, definitions: Definitions = BASELINE, workers: int = 1) -> List[SuiteResult]:
    return [
        run_claim(
            Claim(f"separator-classes.{class_id}", CLASS_STATEMENTS[class_id],
                  partial(check_separator_class, definitions, class_id)),
            corpus,
            workers
        )
        for class_id in CLASS_STATEMENTS
    ]


def verify_relation_bans(corpus: Corpus, definitions: Definitions = BASELINE, workers: int = 1) -> List[SuiteResult]:
    return [
        run_claim(
            Claim(
                f"relation-bans.{relation.value}",
                f"nenhum par {relation.value} em subgrafo induzido <=> ({', '.join(names)})-free",
                partial(check_relation_ban, definitions, relation)
            ),
            corpus,
            workers
        )
        for relation, names in RELATION_BAN_PATTERNS.items()
    ]


def verify_helly_theorem(corpus: Corpus, definitions: Definitions = BASELINE, workers: int = 1) -> SuiteResult:
    return run_claim(
        Claim("helly.hajos-free", "Helly em todo subgrafo induzido <=> hajos-free",
              partial(check_helly_theorem, definitions)),
        corpus,
        workers
    )


def verify_helly_algorithms(corpus: Corpus, workers: int = 1) -> SuiteResult:
    return run_claim(
        Claim("helly.triples-agree", "critério das triplas concorda com a busca exaustiva", check_helly_algorithms),
        corpus,
        workers
    )


def verify_leaf_witness(corpus: Corpus, seeds: Sequence[int] = DEFAULT_SEEDS, workers: int = 1) -> SuiteResult:
    return run_claim(
        Claim("helly.leaf-witness",
              "grafo minimal sem Helly: separadores das folhas de toda árvore de cliques formam testemunha",
              partial(check_leaf_witness, tuple(seeds))),
        corpus,
        workers
    )


def verify_background(corpus: Corpus, seeds: Sequence[int] = DEFAULT_SEEDS, workers: int = 1) -> List[SuiteResult]:
    seeds = tuple(seeds)
    claims = [
        Claim("chordality.recognition", "MCS + PEO concorda com a busca de ciclos induzidos", check_chordality),
        Claim("separators.dirac", "cordal <=> todo separador minimal é clique", check_dirac),
        Claim("separators.clique-tree-labels",
              "rótulos da árvore de cliques = separadores minimais diretos", check_labels_vs_direct),
        Claim("separators.oracles", "geração por vizinhança = varredura exaustiva", check_separator_oracles),
        Claim("clique-tree.multiset-invariance",
              "toda árvore de cliques é válida e tem o mesmo multiconjunto de rótulos",
              partial(check_multiset_invariance, seeds)),
        Claim("separators.heredity", "S \\ R é separador minimal de G - R para R ⊂ S não vazio",
              check_separator_heredity),
    ]
    return [run_claim(claim, corpus, workers) for claim in claims]


def verify_remarks(corpus: Corpus, definitions: Definitions = BASELINE, workers: int = 1) -> List[SuiteResult]:
    start = time.perf_counter()
    catalog_result = SuiteResult(
        claim_id="patterns.containments",
        statement="claw ⊑ dart, P4 ⊑ gem, dart ⊑ butterfly, 2P3 ⊑ butterfly",
    )
    missing = [] if remark_implications_check(definitions.catalog) else missing_containments(definitions.catalog)
    for smaller, larger in missing:
        host = definitions.catalog[larger].graph
        catalog_result.failures.append(
            SuiteFailure(graph6=to_graph6(host), diagnostic=f"{smaller} não é subgrafo induzido de {larger}")
        )
    catalog_result.graphs_tested = len(REMARK_CONTAINMENTS)
    catalog_result.graphs_exercised = len(REMARK_CONTAINMENTS) - len(missing)
    catalog_result.elapsed_ms = round((time.perf_counter() - start) * 1000, 1)

    heredity = run_claim(
        Claim("relations.heredity", "contenção obriga igualdade; sobreposição obriga disjunção",
              partial(check_relation_heredity, definitions)),
        corpus,
        workers
    )
    return [catalog_result, heredity]


def verify_enumeration(corpus: Corpus) -> SuiteResult:
    result = SuiteResult(
        claim_id="enumeration.counts",
        statement="contagem por n = oráculo rotulado (n <= 5) ou contagem publicada (6 <= n <= 8)",
    )
    if not corpus.source.startswith("internal"):
        return result
    start = time.perf_counter()
    counts = corpus.counts_by_n()
    for n in range(corpus.min_n, (corpus.max_n or 0) + 1):
        expected, origin = reference_class_count(n, corpus.filter)
        result.graphs_tested += counts.get(n, 0)
        result.graphs_exercised += counts.get(n, 0)
        if counts.get(n, 0) != expected:
            result.failures.append(
                SuiteFailure(graph6="", diagnostic=f"n={n}: enumerados {counts.get(n, 0)}, {origin} {expected}")
            )
    result.elapsed_ms = round((time.perf_counter() - start) * 1000, 1)
    return result


def run_verification(
    corpus: Corpus,
    seeds: Sequence[int] = DEFAULT_SEEDS,
    definitions: Definitions = BASELINE,
    workers: int = 1
) -> VerificationReport:
    start = time.perf_counter()
    logger.info(
        "Verification started | source=%s filter=%s graphs=%s seeds=%s mutant=%s workers=%s",
        corpus.source,
        corpus.filter.value,
        len(corpus),
        len(seeds),
        definitions.name,
        workers
    )
    suites: List[SuiteResult] = [verify_enumeration(corpus)]
    suites += verify_background(corpus, seeds, workers)
    suites += verify_remarks(corpus, definitions, workers)
    suites += verify_relation_bans(corpus, definitions, workers)
    suites += verify_theorem6(corpus, definitions, workers)
    suites.append(verify_helly_theorem(corpus, definitions, workers))
    suites.append(verify_helly_algorithms(corpus, workers))
    suites.append(verify_leaf_witness(corpus, seeds, workers))

    verification = VerificationReport(
        corpus=CorpusInfo(
            source=corpus.source,
            filter=corpus.filter.value,
            size=len(corpus),
            max_n=corpus.max_n,
            seeds=list(seeds),
            mutant=None if definitions is BASELINE else definitions.name,
        ),
        suites=suites,
    )
    logger.info(
        "Verification finished | suites=%s failed=%s duration_ms=%.1f",
        len(suites),
        sum(1 for s in suites if not s.passed),
        (time.perf_counter() - start) * 1000
    )
    return verification


def report(results: VerificationReport, max_failure_rows: int = 5) -> Tuple[str, str]:
    """Resumo em texto (com tempos) e JSON determinístico (sem tempos)."""
    corpus = results.corpus
    header = f"corpus: {corpus.source} filter={corpus.filter} graphs={corpus.size}"
    if corpus.mutant:
        header += f" mutant={corpus.mutant}"
    lines = [header, f"{'claim':34} {'tested':>7} {'exercised':>9} {'failures':>8}  verdict  time_ms"]
    for suite in results.suites:
        if suite.failures:
            verdict = "FAIL"
        elif suite.vacuous:
            verdict = "VACUOUS"
        else:
            verdict = "PASS"
        lines.append(
            f"{suite.claim_id:34} {suite.graphs_tested:>7} {suite.graphs_exercised:>9} "
            f"{len(suite.failures):>8}  {verdict:7}  {suite.elapsed_ms:.1f}"
        )
        for failure in suite.failures[:max_failure_rows]:
            lines.append(f"    {failure.graph6 or '-'}: {failure.diagnostic}")
    lines.append("result: " + ("PASS" if results.passed else "FAIL"))

    document = json.dumps(results.model_dump(mode="json"), indent=2, sort_keys=True, ensure_ascii=False)
    return "\n".join(lines) + "\n", document + "\n"
