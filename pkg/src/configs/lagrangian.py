from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    SettingsConfigDict,
)


class LagrangianConfig(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="TURAN_LAGRANGIAN_", extra="ignore", env_file=".env"
    )

    SEED: int = Field(default=0)
    RESTARTS: int = Field(default=200, ge=0)
    MAX_ITERATIONS: int = Field(default=5000, ge=1)
    # stop once a step improves p by less than this
    TOLERANCE: float = Field(default=1e-13, gt=0)
    # uniform-on-support starting points are enumerated up to this many vertices
    SUPPORT_ENUMERATION_MAX_N: int = Field(default=10, ge=0)

    RESOLUTION: int = Field(default=120, ge=1)
    LEMMA_MARGIN: float = Field(default=1e-3, ge=0)
