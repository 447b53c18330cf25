from pydantic import BaseModel, Field, computed_field
from typing import List, Optional


class SuiteFailure(BaseModel):
    graph6: str
    diagnostic: str


class SuiteResult(BaseModel):
    claim_id: str = Field(..., description="Identificador da afirmação verificada")
    statement: str = Field(..., description="Enunciado curto da afirmação")
    graphs_tested: int = 0
    graphs_exercised: int = Field(0, description="Grafos que de fato exercitam a propriedade")
    failures: List[SuiteFailure] = Field(default_factory=list)
    elapsed_ms: float = Field(0.0, exclude=True)

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.failures

    @computed_field
    @property
    def vacuous(self) -> bool:
        return self.graphs_exercised == 0


class CorpusInfo(BaseModel):
    source: str
    filter: str
    size: int
    max_n: Optional[int] = None
    seeds: List[int] = Field(default_factory=list)
    mutant: Optional[str] = None


class VerificationReport(BaseModel):
    corpus: CorpusInfo
    suites: List[SuiteResult]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)


class VerifyRequest(BaseModel):
    max_n: Optional[int] = Field(None, ge=1, le=8, description="Maior número de vértices (padrão do .env)")
    filter: Optional[str] = Field(None, description="all, connected, chordal ou connected-chordal")
    seeds: Optional[List[int]] = Field(None, description="Sementes de desempate")
    mutant: Optional[str] = Field(None, description="Mutante documentado a aplicar")
    graphs: Optional[List[str]] = Field(None, description="Corpus externo em graph6 (substitui a enumeração)")
