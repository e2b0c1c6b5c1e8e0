"""Configuration management for the toolkit."""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic_settings import BaseSettings

# Load environment variables
load_dotenv()


class Settings(BaseSettings):
    """Toolkit settings; CLI flags override them for one invocation."""

    # Logging
    log_level: str = os.getenv("LOG_LEVEL", "INFO")

    # Truncation and carrier defaults
    default_trunc: int = int(os.getenv("DEFAULT_TRUNC", "3"))
    default_dim: int = int(os.getenv("DEFAULT_DIM", "1"))
    max_trunc: int = int(os.getenv("MAX_TRUNC", "6"))  # CLI refuses anything larger

    # Spec files
    strict_load: bool = os.getenv("STRICT_LOAD", "True").lower() == "true"
    fixtures_dir: str = os.getenv(
        "FIXTURES_DIR", str(Path(__file__).resolve().parent.parent / "data" / "fixtures")
    )  # bare --file names are looked up here too

    # Perturbation corpus
    corpus_seed: int = int(os.getenv("CORPUS_SEED", "20130517"))
    corpus_perturbations: int = int(os.getenv("CORPUS_PERTURBATIONS", "12"))

    # Reports: None writes compact JSON lines
    report_indent: Optional[int] = None

    class Config:
        env_file = ".env"
        case_sensitive = False

    def model_post_init(self, __context):
        """The perturbation corpus never shrinks below ten entries."""
        if self.corpus_perturbations < 10:
            self.corpus_perturbations = 10


# Global settings instance
settings = Settings()
