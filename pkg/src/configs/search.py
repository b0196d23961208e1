from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    SettingsConfigDict,
)


class SearchConfig(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="TURAN_SEARCH_", extra="ignore", env_file=".env"
    )

    NODE_BUDGET: int = Field(default=5_000_000, ge=1)
    SYMMETRY_PRUNING: bool = Field(default=True)
    # 7-set checks grow as C(n, 7)
    MAX_N_FAMILY_M: int = Field(default=10)
