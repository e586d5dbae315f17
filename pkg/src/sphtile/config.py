"""Configuration settings for sphtile."""

from typing import Optional
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings."""

    # Logging
    log_level: str = "INFO"
    log_file: Optional[str] = None

    # Verification tolerance used by the CLI (SPHTILE_TOLERANCE overrides)
    tolerance: float = 1e-9

    # Tolerance ladder
    identity_tol: float = 1e-12
    closure_tol: float = 1e-9
    placement_tol: float = 1e-8
    antipodal_tol: float = 1e-9
    perpendicular_tol: float = 1e-10
    avc_tol: float = 1e-9
    degeneracy_tol: float = 1e-9

    # Root finding
    root_grid_points: int = 10_000
    root_xtol: float = 1e-12

    # Enumeration
    max_f: int = 64

    # Tiling search
    search_node_limit: int = 200_000
    vertex_merge_tol: float = 1e-6

    # Output
    canonical_output: bool = True

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        env_prefix = "SPHTILE_"
        case_sensitive = False


# Global settings instance
settings = Settings()
