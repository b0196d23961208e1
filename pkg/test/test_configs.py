"""
Settings layer and log serialization.
"""
from fractions import Fraction

import numpy as np
import orjson

from src.application.dtos import ClaimDTO, ReportDTO
from src.configs import Config, LagrangianConfig, RuntimeConfig, SearchConfig
from src.infrastructure.log import serialize_to_json
from src.presentation.composition.di import create_container
from src.infrastructure.core.search import FreeEdgeSearch


def test_defaults():
    cfg = Config()
    assert cfg.RUNTIME.THREADS >= 1
    assert cfg.LAGRANGIAN.RESOLUTION == 120
    assert cfg.SEARCH.SYMMETRY_PRUNING


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("TURAN_THREADS", "3")
    monkeypatch.setenv("TURAN_SEED", "42")
    monkeypatch.setenv("TURAN_LAGRANGIAN_RESTARTS", "5")
    monkeypatch.setenv("TURAN_SEARCH_NODE_BUDGET", "1000")
    assert RuntimeConfig().THREADS == 3
    assert RuntimeConfig().SEED == 42
    assert LagrangianConfig().RESTARTS == 5
    assert SearchConfig().NODE_BUDGET == 1000


def test_serialize_exact_values():
    payload = orjson.loads(
        serialize_to_json({"q": Fraction(2, 27), "s": frozenset({3, 1}), "x": np.float64(0.5)})
    )
    assert payload["q"]["num"] == 2 and payload["q"]["den"] == 27
    assert payload["s"] == [1, 3]
    assert payload["x"] == 0.5


def test_report_results_keep_rationals_exact():
    report = ReportDTO(
        command="edlb",
        results={"bound": Fraction(1, 2), "rows": [(Fraction(8, 9), 3)]},
        tool_version="test",
    )
    dumped = report.model_dump()
    assert dumped["results"]["bound"] == {"num": 1, "den": 2, "value": 0.5}
    assert dumped["results"]["rows"][0][0]["num"] == 8
    claim = ClaimDTO(name="q", passed=True, measured={"q": Fraction(4, 3)})
    assert claim.model_dump()["measured"]["q"]["den"] == 3


def test_container_shares_engine():
    container = create_container(Config(SEARCH=SearchConfig(NODE_BUDGET=10)))
    try:
        search = container.get(FreeEdgeSearch)
        assert search is container.get(FreeEdgeSearch)
        assert search.cfg.NODE_BUDGET == 10
    finally:
        container.close()
