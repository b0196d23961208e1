"""
Batch checks of the countable claims, grouped in suites.

Each claim is a zero-argument callable returning (passed, measured values).
Claims run on a thread pool; the report keeps declaration order.
"""

import itertools
import math
import random
import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any

import structlog

from src.application.dtos import ClaimDTO, RationalDTO
from src.application.exceptions import ParameterError, TuranError
from src.configs import Config

from .constructions import (
    g1_sides,
    g1_size,
    g2_part_sizes,
    g2_size,
    kostochka_size,
    make_full_star,
    make_g1,
    make_g2,
    make_g26,
    make_k53_minus,
    make_kostochka,
    perturbed_near_extremal,
    random_g26_colorable,
    random_hypergraph,
    random_semibipartite,
)
from .containment import contains_subgraph, is_isomorphic
from .families import ExplicitFamily
from .family_m import is_m_free
from .hypergraph import Hypergraph, blowup, complete, shadow_clique_number, transversal
from .lagrangian import (
    G26_LAGRANGIAN,
    LagrangianSolver,
    star_lagrangian_bound,
    verify_five_vertex_family,
)
from .region import (
    G1_TARGET,
    G2_TARGET,
    convergence_table,
    count_induced_k43_minus,
    edit_distance_lower_bound,
    phi_formula,
    region_point,
)
from .search import FreeEdgeSearch, upper_bound_m_free
from .symmetrize import (
    algorithm1,
    check_symmetrization_contracts,
    equivalence_classes,
    replay,
    stability_diagnostic,
)

logger = structlog.get_logger(__name__)

Measured = dict[str, Any]
Claim = Callable[[], tuple[bool, Measured]]

SUITES = ("core", "lagrangian", "search", "region", "symmetrize")


class LemmaVerifier:
    def __init__(
        self,
        cfg: Config,
        solver: LagrangianSolver,
        search: FreeEdgeSearch,
        samples: int = 200,
    ):
        self.cfg = cfg
        self.solver = solver
        self.search = search
        self.samples = samples

    def _rng(self, salt: int) -> random.Random:
        return random.Random(self.cfg.RUNTIME.SEED * 1_000_003 + salt)

    # core

    def _g26_shadow(self) -> tuple[bool, Measured]:
        g26 = make_g26()
        pairs = len(g26.shadow())
        degrees = sorted(set(g26.degrees))
        return pairs == 15 and degrees == [8], {"edges": len(g26), "shadow": pairs, "degrees": degrees}

    def _transversals(self) -> tuple[bool, Measured]:
        values = {
            "empty": transversal(Hypergraph(3, 5)),
            "two disjoint edges": transversal(Hypergraph(3, 6, [(0, 1, 2), (3, 4, 5)])),
            "K4": transversal(complete(4, 3)),
        }
        return list(values.values()) == [0, 2, 2], values

    def _constructions_m_free(self) -> tuple[bool, Measured]:
        bad = [
            f"{name}({n})"
            for n in range(6, 11)
            for name, make in (("g1", make_g1), ("g2", make_g2))
            if is_m_free(make(n)) is not None
        ]
        return not bad, {"violations": bad}

    def _blowup_equivalence(self) -> tuple[bool, Measured]:
        rng = self._rng(1)
        mismatches = 0
        free = 0
        for _ in range(self.samples):
            n = rng.randint(4, 7)
            graph = random_hypergraph(n, rng.uniform(0.1, 0.6), rng)
            original = is_m_free(graph) is None
            blown = is_m_free(blowup(graph, [2] * n)) is None
            free += original
            mismatches += original != blown
        return mismatches == 0, {"samples": self.samples, "m_free": free, "mismatches": mismatches}

    def _embeddable_bounds(self) -> tuple[bool, Measured]:
        rng = self._rng(2)
        over = []
        for i in range(self.samples // 2):
            n = 6 + i % 7
            semi = random_semibipartite(n, rng.uniform(0.3, 1.0), rng)
            colored = random_g26_colorable(n, rng.uniform(0.3, 1.0), rng)
            if len(semi) > g1_size(n):
                over.append(("semibipartite", n, len(semi)))
            if len(colored) > g2_size(n):
                over.append(("g26-colorable", n, len(colored)))
        return not over, {"samples": self.samples // 2, "exceeding": over}

    def _g1_shadow_cliques(self) -> tuple[bool, Measured]:
        found = {n: shadow_clique_number(make_g1(n)) for n in range(6, 13)}
        expected = {n: len(g1_sides(n)[1]) + 1 for n in found}
        return found == expected, {"clique_numbers": found}

    # lagrangian

    def _lagrangian_k4(self) -> tuple[bool, Measured]:
        k4 = complete(4, 3)
        result = self.solver.solve(k4, certify=True)
        certificate = result.certified_upper_bound
        assert certificate is not None
        target = Fraction(1, 16)
        passed = (
            abs(result.lower_bound - 1 / 16) < 1e-9
            and certificate.lattice_max.to_fraction() <= target
            and certificate.bound.to_fraction() >= target
        )
        return passed, {
            "lower": result.lower_bound,
            "bound": certificate.bound,
            "correction": certificate.correction,
        }

    def _lagrangian_g26(self) -> tuple[bool, Measured]:
        g26 = make_g26()
        result = self.solver.solve(g26, certify=True)
        certificate = result.certified_upper_bound
        assert certificate is not None
        spread = max(abs(w - 1 / 6) for w in result.maximizer.weights)
        passed = (
            abs(result.lower_bound - float(G26_LAGRANGIAN)) < 1e-9
            and spread < 1e-6
            and certificate.lattice_max.to_fraction() <= G26_LAGRANGIAN
            and certificate.bound.to_fraction() >= G26_LAGRANGIAN
        )
        return passed, {
            "lower": result.lower_bound,
            "distance_to_uniform": spread,
            "bound": certificate.bound,
            "correction": certificate.correction,
        }

    def _blowup_lagrangian(self) -> tuple[bool, Measured]:
        g26 = make_g26()
        failed = [n for n in range(6, 13) if not self.solver.check_blowup_bound(g26, list(g2_part_sizes(n)))]
        return not failed, {"failed": failed}

    def _star_bound(self) -> tuple[bool, Measured]:
        values = {}
        for s in range(3, 9):
            bound = star_lagrangian_bound(s)
            values[s] = self.solver.lower(make_full_star(s)).lower_bound
            if values[s] > float(bound) + 1e-9 or bound >= G26_LAGRANGIAN:
                return False, {"s": s, "lower": values[s], "bound": RationalDTO.of(bound)}
        return True, {"lower": values}

    def _five_vertex_sweep(self) -> tuple[bool, Measured]:
        sweep = verify_five_vertex_family(self.solver)
        return sweep.passed, sweep.model_dump()

    # search

    def _search_small(self) -> tuple[bool, Measured]:
        family = self.search.family_m()
        found = {n: self.search.max_free_edges(n, family).max_edges for n in range(3, 6)}
        k5_minus = self.search.max_free_edges(5, ExplicitFamily([make_k53_minus()], name="k53minus")).max_edges
        within = all(found[n] <= math.floor(upper_bound_m_free(n)) for n in found)
        monotone = all(found[n] <= found[n + 1] for n in (3, 4))
        passed = found[3] == 1 and found[4] == 4 and k5_minus == 8 and within and monotone
        return passed, {"ex_m": found, "ex_k53_minus_5": k5_minus}

    def _search_six(self) -> tuple[bool, Measured]:
        result = self.search.max_free_edges(6, self.search.family_m())
        witness = result.witness.to_hypergraph()
        passed = (
            result.optimal
            and result.max_edges == upper_bound_m_free(6)
            and is_isomorphic(witness, make_g26())
            and is_m_free(witness) is None
        )
        return passed, {"max_edges": result.max_edges, "nodes": result.nodes_expanded, "optimal": result.optimal}

    # region

    def _phi_formula(self) -> tuple[bool, Measured]:
        mismatches = [
            (n, m)
            for n in (6, 9, 12, 15)
            for m in range(n // 3 + 1)
            if count_induced_k43_minus(make_kostochka(n, m)) != phi_formula(n, m)
        ]
        return not mismatches, {"mismatches": mismatches}

    def _kostochka(self) -> tuple[bool, Measured]:
        k4 = complete(4, 3)
        bad = []
        for n in (6, 9, 12):
            for m in range(n // 3 + 1):
                graph = make_kostochka(n, m)
                if len(graph) != kostochka_size(n) or contains_subgraph(k4, graph.complement()) is not None:
                    bad.append((n, m))
        return not bad, {"failures": bad}

    def _edit_distance(self) -> tuple[bool, Measured]:
        nine = edit_distance_lower_bound(make_kostochka(9, 1), make_kostochka(9, 0))
        twelve = edit_distance_lower_bound(make_kostochka(12, 2), make_kostochka(12, 0))
        passed = nine == Fraction(1, 2) and twelve == Fraction(4, 3)
        return passed, {"n9": RationalDTO.of(nine), "n12": RationalDTO.of(twelve)}

    def _region_targets(self) -> tuple[bool, Measured]:
        rows = convergence_table([60, 120, 240])
        last = {row.construction: row for row in rows if row.n == 240}
        by_kind: dict[str, list[float]] = {}
        for row in rows:
            by_kind.setdefault(row.construction, []).append(row.distance)
        shrinking = all(a >= b for d in by_kind.values() for a, b in itertools.pairwise(d))
        star = region_point(make_full_star(100)).shadow_density.to_fraction()
        passed = (
            last["g1"].distance < 0.01
            and last["g2"].distance < 0.01
            and shrinking
            and star == 1
        )
        return passed, {
            "distances": by_kind,
            "targets": {
                "g1": [RationalDTO.of(q) for q in G1_TARGET],
                "g2": [RationalDTO.of(q) for q in G2_TARGET],
            },
            "star_shadow_density": RationalDTO.of(star),
        }

    # symmetrize

    def _algorithm1_contracts(self) -> tuple[bool, Measured]:
        rng = self._rng(3)
        failures = 0
        for _ in range(self.samples):
            n = rng.randint(3, 9)
            graph = random_hypergraph(n, rng.uniform(0.05, 0.7), rng)
            trace = algorithm1(graph)
            steps = sum(1 for _ in trace.events)
            if not check_symmetrization_contracts(graph, trace) or steps > len(equivalence_classes(graph)):
                failures += 1
        return failures == 0, {"samples": self.samples, "failures": failures}

    def _algorithm1_m_free(self) -> tuple[bool, Measured]:
        rng = self._rng(4)
        checked = 0
        broken = 0
        for _ in range(self.samples):
            n = rng.randint(5, 8)
            graph = random_hypergraph(n, rng.uniform(0.1, 0.4), rng)
            if is_m_free(graph) is not None:
                continue
            checked += 1
            if any(is_m_free(h) is not None for h in replay(graph, algorithm1(graph))):
                broken += 1
        return broken == 0, {"m_free_inputs": checked, "broken": broken}

    def _cleaning_diagnostic(self) -> tuple[bool, Measured]:
        rows = []
        for kind, n, eps in itertools.product(("g1", "g2"), (12, 18, 24), (0.01, 0.005)):
            graph = perturbed_near_extremal(kind, n, eps, self.cfg.RUNTIME.SEED)
            report = stability_diagnostic(graph, eps)
            rows.append(
                {
                    "input": kind,
                    "n": n,
                    "eps": eps,
                    "removed": report.removed,
                    "removed_bound": report.removed_bound,
                    "degree_bound_failures": report.degree_bound_failures,
                    "contracts_hold": report.contracts_hold,
                }
            )
        return all(r["contracts_hold"] for r in rows), {"runs": rows}

    def claims(self, suite: str) -> list[tuple[str, Claim]]:
        table: dict[str, list[tuple[str, Claim]]] = {
            "core": [
                ("shadow of G26 is complete and G26 is 8-regular", self._g26_shadow),
                ("transversal numbers of small graphs", self._transversals),
                ("G1 and G2 are M-free for n in 6..10", self._constructions_m_free),
                ("M-freeness agrees with M-freeness of the 2-blowup", self._blowup_equivalence),
                ("embeddable graphs respect the g1 and g2 edge bounds", self._embeddable_bounds),
                ("shadow clique number of G1 is |B| + 1", self._g1_shadow_cliques),
            ],
            "lagrangian": [
                ("Lagrangian of K4 is 1/16", self._lagrangian_k4),
                ("Lagrangian of G26 is 2/27 at the uniform point", self._lagrangian_g26),
                ("balanced G26 blowups stay below the Lagrangian bound", self._blowup_lagrangian),
                ("full stars stay within the star bound", self._star_bound),
                ("five-vertex graphs with at most 8 edges stay below 2/27", self._five_vertex_sweep),
            ],
            "search": [
                ("small Turan numbers for M and K5 minus an edge", self._search_small),
                ("ex(6, M) = 16 attained by G26", self._search_six),
            ],
            "region": [
                ("induced K4- counts of G(n, m) match the closed form", self._phi_formula),
                ("G(n, m) has n(n-3)(2n-3)/27 edges and a K4-free complement", self._kostochka),
                ("edit distance lower bounds between Kostochka graphs", self._edit_distance),
                ("G1 and G2 approach (8/9, 4/9) and (5/6, 4/9)", self._region_targets),
            ],
            "symmetrize": [
                ("symmetrization keeps edges and ends in a blowup", self._algorithm1_contracts),
                ("symmetrization preserves M-freeness", self._algorithm1_m_free),
                ("cleaning symmetrization meets its output contract", self._cleaning_diagnostic),
            ],
        }
        if suite == "all":
            return [claim for name in SUITES for claim in table[name]]
        if suite not in table:
            raise ParameterError(f"unknown suite {suite!r}, expected one of {', '.join(SUITES)} or all")
        return table[suite]

    @staticmethod
    def _run_claim(name: str, claim: Claim) -> ClaimDTO:
        started = time.perf_counter()
        try:
            passed, measured = claim()
        except TuranError as error:
            passed, measured = False, {"error": str(error)}
        elapsed = time.perf_counter() - started
        logger.info("verify.claim", claim=name, passed=passed, elapsed=round(elapsed, 3))
        return ClaimDTO(name=name, passed=passed, measured=measured, elapsed=elapsed)

    def run(self, suite: str) -> list[ClaimDTO]:
        claims = self.claims(suite)
        with ThreadPoolExecutor(max_workers=self.cfg.RUNTIME.THREADS) as pool:
            return list(pool.map(lambda item: self._run_claim(*item), claims))
