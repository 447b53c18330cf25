import logging
from datetime import datetime

from fastapi import APIRouter, HTTPException

from config import settings
from schemas.verification import VerificationReport, VerifyRequest
from services.errors import GraphClassError
from services.graph_core import parse_graph6
from services.graph_service import GraphClassService
from utils.helpers import get_setting_or_param

logger = logging.getLogger("api.verification")

router = APIRouter()


@router.get("/health", tags=["Health"])
async def health_check():
    return {
        "status": "healthy",
        "timestamp": datetime.now().isoformat(),
        "version": "1.0.0"
    }


@router.post("/verify", response_model=VerificationReport, tags=["Verificação"])
async def verify(request: VerifyRequest):
    """
    Executa todas as suítes de verificação sobre um corpus.

    Pode ser usado de duas formas:
    1. Com max_n e filter, enumerando o corpus internamente
    2. Com graphs (lista graph6), verificando um corpus externo

    Sementes e filtro podem vir do request ou do .env
    """
    try:
        seeds = get_setting_or_param(request.seeds, settings.seeds, "seeds")
        flt = get_setting_or_param(request.filter, settings.corpus_filter, "filter")
        service = GraphClassService(seeds=seeds, workers=settings.workers, mutant=request.mutant)

        if request.graphs is not None:
            graphs = [parse_graph6(line) for line in request.graphs]
            response = service.verify(flt=flt, graphs=graphs, source="request")
        else:
            max_n = get_setting_or_param(request.max_n, settings.max_n, "max_n")
            response = service.verify(max_n=max_n, flt=flt)

        logger.info(
            "Verify response | source=%s graphs=%s passed=%s mutant=%s",
            response.corpus.source,
            response.corpus.size,
            response.passed,
            request.mutant or "none"
        )
        return response

    except GraphClassError as e:
        logger.warning("Verify request rejected | error=%s", e)
        raise HTTPException(status_code=400, detail=str(e))
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"Erro inesperado: {e}")
        raise HTTPException(status_code=500, detail=f"Erro interno do servidor: {str(e)}")
