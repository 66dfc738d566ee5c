from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


# R_o = 300 km maps to t_o = 1 ms exactly.
SPEED_OF_LIGHT = 3.0e8


class FdaSettings(BaseSettings):
    angle_points: int = 721
    quadrature_samples_per_cycle: int = 10_000
    design_grid_size: int = 256
    output_dir: Path = Path(".")
    log_level: str = "WARNING"
    marginal_fot: float = 0.45
    max_fot: float = 0.5

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", env_prefix="FDA_", extra="ignore"
    )


def get_settings() -> FdaSettings:
    """
    Get fresh toolkit settings from environment variables.
    This function creates a new settings instance each time it's called,
    ensuring it picks up any changes to environment variables.
    """
    return FdaSettings()
