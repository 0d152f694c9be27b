from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    app_name: str = "curvaplane"
    app_version: str = "1.0.0"
    log_level: str = "INFO"

    solver_tolerance: float = 1e-10
    direct_solver_limit: int = 100_000
    chord_tolerance: float = 1e-12

    coordinate_decimals: int = 6
    default_seed: int = 0

    harnack_growth: float = 3.0
    poincare_enlargement: float = 2.0

    @property
    def coordinate_scale(self) -> float:
        """Multiplier used to snap generated coordinates to integer keys."""
        return float(10 ** self.coordinate_decimals)

    class Config:
        env_file = ".env"
        env_prefix = "CURVAPLANE_"
        case_sensitive = False


settings = Settings()
