from dishka import Provider, Scope, provide

from src.configs import Config, LagrangianConfig, RuntimeConfig, SearchConfig


class ConfigProvider(Provider):
    def __init__(self, cfg: Config):
        super().__init__(scope=Scope.APP)
        self.cfg = cfg

    @provide
    def provide_config(self) -> Config:
        return self.cfg

    @provide
    def provide_lagrangian(self) -> LagrangianConfig:
        return self.cfg.LAGRANGIAN

    @provide
    def provide_search(self) -> SearchConfig:
        return self.cfg.SEARCH

    @provide
    def provide_runtime(self) -> RuntimeConfig:
        return self.cfg.RUNTIME
