import os
import logging

from dotenv import load_dotenv

# Carrega variáveis do .env antes de instanciar configurações globais.
load_dotenv()


def parse_seed_list(value: str) -> list:
    """Aceita "0-19" (intervalo inclusivo) ou "0,1,5"."""
    value = value.strip()
    if "-" in value and "," not in value:
        start, end = value.split("-", 1)
        return list(range(int(start), int(end) + 1))
    return [int(part) for part in value.split(",") if part.strip()]


class Settings:
    def __init__(self):
        self.seeds_raw = os.getenv("GRAPHCLASS_SEEDS", "0-19")
        self.max_n_raw = os.getenv("GRAPHCLASS_MAX_N", "6")
        self.corpus_filter = os.getenv("GRAPHCLASS_FILTER", "connected")
        self.workers_raw = os.getenv("GRAPHCLASS_WORKERS", "1")
        self.log_level = os.getenv("LOG_LEVEL", "INFO").upper()
        self.api_host = os.getenv("API_HOST", "0.0.0.0")
        self.api_port = int(os.getenv("API_PORT", "8000"))

    @property
    def seeds(self) -> list:
        return parse_seed_list(self.seeds_raw)

    @property
    def max_n(self) -> int:
        return int(self.max_n_raw)

    @property
    def workers(self) -> int:
        return int(self.workers_raw)

    def validate(self):
        invalid_vars = []
        try:
            if not self.seeds:
                invalid_vars.append("GRAPHCLASS_SEEDS")
        except ValueError:
            invalid_vars.append("GRAPHCLASS_SEEDS")

        try:
            if not 1 <= self.max_n <= 8:
                invalid_vars.append("GRAPHCLASS_MAX_N")
        except ValueError:
            invalid_vars.append("GRAPHCLASS_MAX_N")

        try:
            if self.workers < 1:
                invalid_vars.append("GRAPHCLASS_WORKERS")
        except ValueError:
            invalid_vars.append("GRAPHCLASS_WORKERS")

        if self.corpus_filter not in ("all", "connected", "chordal", "connected-chordal"):
            invalid_vars.append("GRAPHCLASS_FILTER")

        if self.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            invalid_vars.append("LOG_LEVEL")

        if invalid_vars:
            error_msg = f"Variáveis de ambiente inválidas: {', '.join(invalid_vars)}"
            logging.error(error_msg)
            raise ValueError(error_msg)


# Instância global das configurações
settings = Settings()
