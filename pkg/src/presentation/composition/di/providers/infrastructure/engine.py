from dishka import Provider, Scope, provide

from src.configs import Config, LagrangianConfig, SearchConfig
from src.infrastructure.core.lagrangian import LagrangianSolver
from src.infrastructure.core.search import FreeEdgeSearch
from src.infrastructure.core.verification import LemmaVerifier


class EngineProvider(Provider):
    scope = Scope.APP

    @provide
    def provide_solver(self, cfg: LagrangianConfig) -> LagrangianSolver:
        return LagrangianSolver(cfg)

    @provide
    def provide_search(self, cfg: SearchConfig) -> FreeEdgeSearch:
        return FreeEdgeSearch(cfg)

    @provide
    def provide_verifier(
        self, cfg: Config, solver: LagrangianSolver, search: FreeEdgeSearch
    ) -> LemmaVerifier:
        return LemmaVerifier(cfg, solver, search)
