from dishka import Container, make_container

from src.configs import Config

from .providers.application.config import ConfigProvider
from .providers.infrastructure.engine import EngineProvider


def create_container(cfg: Config) -> Container:
    return make_container(ConfigProvider(cfg), EngineProvider())
