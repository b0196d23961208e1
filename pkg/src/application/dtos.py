from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from pydantic import BaseModel, Field, field_validator

if TYPE_CHECKING:
    from src.infrastructure.core.hypergraph import Hypergraph


class RationalDTO(BaseModel):
    num: int
    den: int = Field(gt=0)
    value: float

    @classmethod
    def of(cls, q: Fraction | int) -> RationalDTO:
        q = Fraction(q)
        return cls(num=q.numerator, den=q.denominator, value=float(q))

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


def wrap_rationals(value: Any) -> Any:
    """Replace every Fraction inside nested dicts, lists and tuples by a RationalDTO."""
    if isinstance(value, Fraction):
        return RationalDTO.of(value)
    if isinstance(value, dict):
        return {k: wrap_rationals(v) for k, v in value.items()}
    if isinstance(value, list):
        return [wrap_rationals(v) for v in value]
    if isinstance(value, tuple):
        return tuple(wrap_rationals(v) for v in value)
    return value


class HypergraphDTO(BaseModel):
    r: int
    n: int
    edges: list[tuple[int, ...]]

    @classmethod
    def of(cls, graph: Hypergraph) -> HypergraphDTO:
        return cls(r=graph.r, n=graph.n, edges=list(graph.edges))

    def to_hypergraph(self) -> Hypergraph:
        from src.infrastructure.core.hypergraph import Hypergraph

        return Hypergraph(self.r, self.n, self.edges)


class SimplexPointDTO(BaseModel):
    weights: list[float]


class LatticeBoundDTO(BaseModel):
    bound: RationalDTO
    lattice_max: RationalDTO
    correction: RationalDTO
    resolution: int
    formula: str = Field(description="Correction term used for the bound")


class LagrangianResultDTO(BaseModel):
    lower_bound: float
    maximizer: SimplexPointDTO
    certified_upper_bound: LatticeBoundDTO | None = None
    iterations: int
    restarts: int
    seed: int


class PartitionKind(str, Enum):
    SEMIBIPARTITE = "semibipartite"
    G26_COLORING = "g26-coloring"


class PartitionWitnessDTO(BaseModel):
    kind: PartitionKind
    # semibipartite: 0 is side A, 1 is side B; g26-coloring: vertex of G26
    assignment: list[int]


class ViolationKind(str, Enum):
    M1 = "M1"
    M2 = "M2"
    M3 = "M3"
    MEMBER = "member"


class M3Mode(str, Enum):
    EXACT = "exact"
    FAST = "fast"


class MViolationDTO(BaseModel):
    kind: ViolationKind
    core: list[int]
    witness_edges: list[tuple[int, ...]]
    mode: M3Mode = M3Mode.EXACT
    # fast mode only: the superset exceeded the vertex bound of the family
    exceeds_vertex_bound: bool = False


class EventKind(str, Enum):
    SYMMETRIZE = "symmetrize"
    CLEAN_REMOVE = "cleanRemove"
    INITIAL_REMOVE = "initialRemove"


class SymmetrizationEventDTO(BaseModel):
    kind: EventKind
    step: int
    vertex: int | None = Field(default=None, description="Removed vertex")
    source: int | None = Field(default=None, description="Vertex being copied")
    replaced_class: list[int] = Field(default_factory=list)


class SymmetrizationTraceDTO(BaseModel):
    algorithm: int
    alpha: RationalDTO | None = None
    input: HypergraphDTO
    events: list[SymmetrizationEventDTO]
    removed_snapshots: list[list[int]]
    final: HypergraphDTO
    final_vertices: list[int]
    min_degree_trajectory: list[int]


class RegionPointDTO(BaseModel):
    shadow_density: RationalDTO
    edge_density: RationalDTO


class ShadowRegimeDTO(BaseModel):
    regime: str
    shadow_size: int
    semibipartite_gap: RationalDTO
    g26_gap: RationalDTO


class ConvergenceRowDTO(BaseModel):
    construction: str
    n: int
    point: RegionPointDTO
    target_shadow: RationalDTO
    target_edge: RationalDTO
    distance: float


class SearchResultDTO(BaseModel):
    n: int
    family: str
    max_edges: int
    witness: HypergraphDTO
    nodes_expanded: int
    optimal: bool
    upper_bound: RationalDTO | None = None


class StabilityDiagnosticDTO(BaseModel):
    n: int
    edges: int
    eps: float
    alpha: RationalDTO
    removed: int
    removed_bound: float
    min_degree_trajectory: list[int]
    final_vertices: int
    final_edges: int
    final_semibipartite: bool
    final_g26_colorable: bool
    contracts_hold: bool
    degree_bound_failures: int


class FiveVertexSweepDTO(BaseModel):
    instances: int
    classes: int
    eight_edge_classes: int
    all_eight_edge_embed: bool
    max_lower_bound: float
    max_certified_bound: RationalDTO
    min_gap: RationalDTO
    resolution: int
    margin: float
    passed: bool


class ClaimDTO(BaseModel):
    name: str
    passed: bool
    measured: dict[str, Any] = Field(default_factory=dict)
    elapsed: float = 0.0

    @field_validator("measured", mode="before")
    @classmethod
    def exact_measured(cls, value: Any) -> Any:
        return wrap_rationals(value)


class ReportDTO(BaseModel):
    command: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    results: Any = None
    timings: dict[str, float] = Field(default_factory=dict)
    tool_version: str
    seed: int | None = None

    @field_validator("inputs", "results", mode="before")
    @classmethod
    def exact_results(cls, value: Any) -> Any:
        return wrap_rationals(value)
