"""
Core configuration module for the power graph products toolkit.
"""

import os
from typing import Optional

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _env_bool(name: str, default: str = "False") -> bool:
    return os.getenv(name, default).lower() == "true"


class AppSettings:
    """Application settings configuration."""

    # Server settings
    HOST: str = os.getenv("HOST", "0.0.0.0")
    PORT: int = int(os.getenv("PORT", "8000"))
    DEBUG: bool = _env_bool("DEBUG")
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # API settings
    API_TITLE: str = "Power Graph Products API"
    API_DESCRIPTION: str = "Power graphs of finite groups, their graph products and the checks relating them"
    API_VERSION: str = "1.0.0"


class GroupSettings:
    """Finite group construction limits."""

    MAX_GROUP_ORDER: int = int(os.getenv("MAX_GROUP_ORDER", "10000"))
    MAX_SYMMETRIC_DEGREE: int = int(os.getenv("MAX_SYMMETRIC_DEGREE", "5"))

    # Tables up to this order get the exhaustive O(n^3) associativity scan
    ASSOCIATIVITY_FULL_SCAN_MAX: int = int(os.getenv("ASSOCIATIVITY_FULL_SCAN_MAX", "64"))
    ASSOCIATIVITY_SAMPLES: int = int(os.getenv("ASSOCIATIVITY_SAMPLES", "20000"))
    SAMPLE_SEED: int = int(os.getenv("SAMPLE_SEED", "0"))

    # Directory the HTTP API may read Cayley table files from; unset disables them
    API_CAYLEY_DIR: str = os.getenv("API_CAYLEY_DIR", "")

    @property
    def max_order(self) -> int:
        """Get the largest admissible group order."""
        return self.MAX_GROUP_ORDER

    @property
    def full_scan_max(self) -> int:
        """Get the largest order checked exhaustively for associativity."""
        return self.ASSOCIATIVITY_FULL_SCAN_MAX

    @property
    def api_cayley_dir(self) -> Optional[str]:
        """Get the directory served Cayley files must live in, if any."""
        return self.API_CAYLEY_DIR or None


class GraphSettings:
    """Graph construction and isomorphism limits."""

    MAX_PRODUCT_VERTICES: int = int(os.getenv("MAX_PRODUCT_VERTICES", "10000"))
    ISO_MAX_VERTICES: int = int(os.getenv("ISO_MAX_VERTICES", "200"))
    DEFAULT_FORMAT: str = os.getenv("DEFAULT_FORMAT", "edgelist")

    @property
    def max_product_vertices(self) -> int:
        """Get the vertex cap for graph products."""
        return self.MAX_PRODUCT_VERTICES

    @property
    def iso_max_vertices(self) -> int:
        """Get the vertex cap for isomorphism testing."""
        return self.ISO_MAX_VERTICES


class VerificationSettings:
    """Defaults for the verification sweeps."""

    DEFAULT_MAX_ORDER: int = int(os.getenv("VERIFY_MAX_ORDER", "36"))
    MAX_ORDER_CAP: int = int(os.getenv("VERIFY_MAX_ORDER_CAP", "64"))
    RANDOM_GRAPH_COUNT: int = int(os.getenv("RANDOM_GRAPH_COUNT", "50"))
    RANDOM_GRAPH_MAX_VERTICES: int = int(os.getenv("RANDOM_GRAPH_MAX_VERTICES", "8"))
    RANDOM_EDGE_PROBABILITY: float = float(os.getenv("RANDOM_EDGE_PROBABILITY", "0.5"))
    DEFAULT_SEED: int = int(os.getenv("VERIFY_SEED", "0"))
    WORKERS: int = int(os.getenv("VERIFY_WORKERS", "1"))

    @property
    def max_order(self) -> int:
        """Get the default product order bound for sweeps."""
        return self.DEFAULT_MAX_ORDER

    @property
    def seed(self) -> int:
        """Get the default random seed."""
        return self.DEFAULT_SEED


class Settings:
    """Main settings container."""

    def __init__(self):
        self.app = AppSettings()
        self.groups = GroupSettings()
        self.graphs = GraphSettings()
        self.verification = VerificationSettings()

    @property
    def host(self) -> str:
        """Get the host."""
        return self.app.HOST

    @property
    def port(self) -> int:
        """Get the port."""
        return self.app.PORT

    @property
    def is_debug(self) -> bool:
        """Check if debug mode is enabled."""
        return self.app.DEBUG

    @property
    def log_level(self) -> str:
        """Get the configured log level."""
        return "DEBUG" if self.app.DEBUG else self.app.LOG_LEVEL


# Global settings instance
settings = Settings()
