"""Dichotomy verdict for (target, budget) pairs and the hardness-witness
compiler that emits the applicable reduction.

For t >= 2 the complexity of t-frugal H-colouring is decided purely by
the maximum in-degree of H: at most 1 is polynomial (see polydecide),
at least 2 is NP-complete.  The NP-complete side carries one of two
reductions: from indicator-graph colouring when the indicator graph is
not bipartite, and from monotone t-in-2t exact SAT when it is (in which
case the maximum in-degree is necessarily exactly 2, since the
in-neighbours of any maximum-in-degree vertex form a clique in the
indicator graph).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .digraph import Assignment, Colouring, Digraph, UGraph
from .errors import ConsistencyError, ContractError
from .gadgets import StarG, build_star_g, lift_colouring, project_colouring
from .indicator import indicator_graph, two_colouring
from .satkit import (
    IncidenceLegend,
    MonotoneSatInstance,
    decode_sat_witness,
    encode_sat_witness,
    sat_to_digraph,
)


class Complexity(enum.Enum):
    POLYNOMIAL_TIME = "P"
    NP_COMPLETE = "NPC"


ROUTE_SAT = "sat"
ROUTE_HSTAR = "hstar"


@dataclass(frozen=True)
class Verdict:
    complexity: Complexity
    delta_minus: int
    hstar_bipartite: Optional[bool]  # None when the indicator graph is irrelevant
    route: Optional[str]  # reduction route for NP-complete targets
    note: str


def classify(H: Digraph, t: int) -> Verdict:
    """Structural dichotomy verdict; never runs the exponential oracle.

    t = 1 is out of scope: the t-frugal landscape there has no simple
    structural description.
    """
    if t < 2:
        raise ContractError(f"classification covers t >= 2 only, got t={t}")
    delta = H.max_in_degree()
    if delta >= 2:
        bipartite = two_colouring(indicator_graph(H).graph).bipartite
        if bipartite and delta > 2:
            raise ConsistencyError(
                "bipartite indicator graph with max in-degree above 2 is impossible"
            )
        if bipartite:
            return Verdict(
                Complexity.NP_COMPLETE,
                delta,
                True,
                ROUTE_SAT,
                f"max in-degree {delta}; indicator graph bipartite, "
                f"reduce from monotone {t}-in-{2 * t} exact SAT",
            )
        return Verdict(
            Complexity.NP_COMPLETE,
            delta,
            False,
            ROUTE_HSTAR,
            f"max in-degree {delta}; indicator graph not bipartite, "
            "reduce from indicator-graph colouring",
        )
    if delta == 1:
        return Verdict(
            Complexity.POLYNOMIAL_TIME,
            1,
            None,
            None,
            "max in-degree 1; decidable via core shape and levelings",
        )
    return Verdict(
        Complexity.POLYNOMIAL_TIME,
        0,
        None,
        None,
        "degenerate: target has no arcs, only arcless instances are colourable",
    )


@dataclass(frozen=True)
class HardnessWitness:
    """A compiled reduction instance plus certificate translators."""

    route: str
    instance: Digraph
    target: Digraph
    t: int
    star: Optional[StarG] = None
    legend: Optional[IncidenceLegend] = None
    hstar_colours: Optional[tuple[int, ...]] = None

    def lift_certificate(self, certificate) -> Colouring:
        """Source certificate -> t-frugal colouring of the instance."""
        if self.route == ROUTE_HSTAR:
            return lift_colouring(self.star, self.target, certificate, self.t)
        return encode_sat_witness(self.legend, self.target, certificate)

    def project_certificate(self, f: Colouring) -> Union[Colouring, Assignment]:
        """t-frugal colouring of the instance -> source certificate."""
        if self.route == ROUTE_HSTAR:
            return project_colouring(self.star, f)
        return decode_sat_witness(f, self.target, self.hstar_colours, self.legend)


def build_hardness_witness(
    H: Digraph, t: int, source: Union[UGraph, MonotoneSatInstance]
) -> HardnessWitness:
    """Emit the reduction instance for an NP-complete target.

    The source must match the verdict's route: an undirected graph for
    the indicator route, a width-2t monotone instance for the SAT route.
    """
    verdict = classify(H, t)
    if verdict.complexity is not Complexity.NP_COMPLETE:
        raise ContractError("hardness witnesses exist only for NP-complete targets")
    if verdict.route == ROUTE_HSTAR:
        if not isinstance(source, UGraph):
            raise ContractError("indicator route takes an undirected source graph")
        star = build_star_g(source, t, verdict.delta_minus)
        return HardnessWitness(ROUTE_HSTAR, star.graph, H, t, star=star)
    if not isinstance(source, MonotoneSatInstance):
        raise ContractError("SAT route takes a monotone SAT source instance")
    graph, legend = sat_to_digraph(source, t)
    colours = two_colouring(indicator_graph(H).graph).colours
    return HardnessWitness(
        ROUTE_SAT, graph, H, t, legend=legend, hstar_colours=colours
    )
