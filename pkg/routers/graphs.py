import logging
import time
from typing import List, Optional

from fastapi import APIRouter, HTTPException, Query

from config import settings
from schemas.graphs import (
    ClassReport,
    CliqueTreeReport,
    GraphRequest,
    HellyReport,
    PatternProfile,
    SeparatorReport,
)
from services.errors import GraphClassError
from services.graph_core import Graph, to_graph6
from services.graph_service import GraphClassService
from utils.helpers import get_setting_or_param, load_graphs

logger = logging.getLogger("api.graphs")

router = APIRouter()


def _single_graph(request: GraphRequest) -> Graph:
    graphs = load_graphs(request.graph, request.format)
    if len(graphs) != 1:
        raise GraphClassError(f"Esperado exatamente um grafo, recebidos {len(graphs)}")
    return graphs[0]


def _run(operation: str, request: GraphRequest, action):
    start = time.perf_counter()
    try:
        g = _single_graph(request)
        service = GraphClassService(seeds=settings.seeds)
        response = action(service, g)
        logger.info(
            "Graph request | operation=%s n=%s edges=%s duration_ms=%.1f",
            operation,
            g.n,
            g.edge_count,
            (time.perf_counter() - start) * 1000
        )
        return response
    except GraphClassError as e:
        logger.warning("Graph request rejected | operation=%s error=%s", operation, e)
        raise HTTPException(status_code=400, detail=str(e))
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"Erro inesperado: {e}")
        raise HTTPException(status_code=500, detail=f"Erro interno do servidor: {str(e)}")


@router.post("/classify", response_model=ClassReport, tags=["Grafos"])
async def classify_graph(request: GraphRequest):
    """
    Classifica um grafo cordal nas seis classes de separadores e na classe Helly.

    Grafos não cordais são rejeitados com 400.
    """
    return _run("classify", request, lambda service, g: service.classify(g))


@router.post("/separators", response_model=SeparatorReport, tags=["Grafos"])
async def graph_separators(request: GraphRequest):
    """Multiconjunto de separadores minimais e a matriz de relações entre pares."""
    return _run("separators", request, lambda service, g: service.separators(g))


@router.post("/cliquetree", response_model=CliqueTreeReport, tags=["Grafos"])
async def graph_clique_tree(request: GraphRequest):
    """Árvore de cliques com desempate pela semente informada, inclusive em DOT."""
    return _run("cliquetree", request, lambda service, g: service.clique_tree(g, request.seed))


@router.post("/helly", response_model=HellyReport, tags=["Grafos"])
async def graph_helly(request: GraphRequest):
    return _run("helly", request, lambda service, g: service.helly(g))


@router.post("/patterns", response_model=PatternProfile, tags=["Grafos"])
async def graph_patterns(request: GraphRequest):
    """Padrões proibidos do catálogo que ocorrem como subgrafo induzido."""
    return _run("patterns", request, lambda service, g: service.patterns(g))


@router.get("/enumerate", response_model=List[str], tags=["Grafos"])
async def enumerate_graphs(
        max_n: Optional[int] = Query(None, ge=1, le=8, description="Maior número de vértices (usa padrão do .env se não informado)"),
        min_n: int = Query(1, ge=1, description="Menor número de vértices"),
        filter: Optional[str] = Query(None, description="all, connected, chordal ou connected-chordal")
):
    """Um representante graph6 por classe de isomorfismo."""
    try:
        max_n = get_setting_or_param(max_n, settings.max_n, "max_n")
        flt = get_setting_or_param(filter, settings.corpus_filter, "filter")
        service = GraphClassService(seeds=settings.seeds)
        graphs = [to_graph6(g) for g in service.enumerate(max_n, flt, min_n)]
        logger.info("Enumerate request | max_n=%s min_n=%s filter=%s graphs=%s", max_n, min_n, flt, len(graphs))
        return graphs
    except GraphClassError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Erro inesperado: {e}")
        raise HTTPException(status_code=500, detail=f"Erro interno do servidor: {str(e)}")
