from pydantic import AliasChoices, Field
from pydantic_settings import (
    BaseSettings,
    SettingsConfigDict,
)


class RuntimeConfig(BaseSettings):
    model_config = SettingsConfigDict(extra="ignore", env_file=".env")

    THREADS: int = Field(
        default=1,
        ge=1,
        validation_alias=AliasChoices("TURAN_THREADS", "THREADS"),
    )
    SEED: int = Field(
        default=20190101,
        validation_alias=AliasChoices("TURAN_SEED", "SEED"),
    )
    TOOL_VERSION: str = Field(default="0.1.0")
