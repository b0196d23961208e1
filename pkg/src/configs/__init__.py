from pydantic import Field
from pydantic_settings import BaseSettings

from .lagrangian import LagrangianConfig
from .logger import LoggerConfig
from .runtime import RuntimeConfig
from .search import SearchConfig


class Config(BaseSettings):
    LOGGER: LoggerConfig = Field(default_factory=LoggerConfig)
    LAGRANGIAN: LagrangianConfig = Field(default_factory=LagrangianConfig)
    SEARCH: SearchConfig = Field(default_factory=SearchConfig)
    RUNTIME: RuntimeConfig = Field(default_factory=RuntimeConfig)


__all__ = (
    "Config",
    "LagrangianConfig",
    "LoggerConfig",
    "RuntimeConfig",
    "SearchConfig",
)
