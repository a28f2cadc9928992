"""
Configuration settings for the poset-limit toolkit.
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables (prefix POSETLIM_)."""

    model_config = SettingsConfigDict(
        env_prefix="POSETLIM_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Runtime
    threads: int = Field(default=1, ge=1, description="Worker cap for replicates")
    log_level: str = Field(default="INFO", description="Log level")
    log_format: str = Field(
        default="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {message}",
        description="Loguru format string for the stderr sink"
    )
    default_seed: int = Field(default=0, description="Seed used when none is given")

    # Exact enumeration
    enumeration_budget: int = Field(
        default=10**8, description="Largest |P|^|Q| (or N^|Q|) enumerated exactly"
    )
    frontier_limit: int = Field(
        default=2**20, description="Partial maps held before recursing chunk-wise"
    )
    isomorphism_max_size: int = Field(
        default=12, description="Largest poset handed to the isomorphism search"
    )

    # Monte Carlo
    mc_chunk_size: int = Field(
        default=2**16, ge=1, description="Samples per vectorised Monte-Carlo block"
    )
    stderr_multiplier: float = Field(
        default=4.0, description="Tolerance (in standard errors) of statistical checks"
    )
    axiom_tolerance_user: float = Field(
        default=1e-9, description="Tolerance for kernels loaded from user files"
    )

    # Cut metric
    cut_norm_max_parts: int = Field(
        default=24, description="Largest part count for exact cut-norm enumeration"
    )
    cut_restarts: int = Field(default=32, ge=1, description="Coupling search restarts")
    local_search_sweeps: int = Field(
        default=8, ge=0, description="Improvement sweeps per restart"
    )
    full_swap_limit: int = Field(
        default=12, description="Side size up to which all pairwise swaps are tried"
    )
    local_search_max_cells: int = Field(
        default=16, description="Largest coupled cell count searched by local moves"
    )
    coupling_search_limit: int = Field(
        default=10**4,
        ge=0,
        description="Largest parts1 * parts2 for which the convergence run searches couplings",
    )

    # Output
    csv_significant_digits: int = Field(
        default=12, description="Significant digits for floats in CSV output"
    )


# Global settings instance
settings = Settings()
