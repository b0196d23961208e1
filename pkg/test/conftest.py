import pytest

from src.configs import LagrangianConfig, SearchConfig
from src.infrastructure.core.lagrangian import LagrangianSolver
from src.infrastructure.core.search import FreeEdgeSearch


@pytest.fixture
def solver() -> LagrangianSolver:
    return LagrangianSolver(LagrangianConfig(RESTARTS=20))


@pytest.fixture
def search() -> FreeEdgeSearch:
    return FreeEdgeSearch(SearchConfig())
