"""Exact machinery for frugal homomorphisms of directed graphs.

A homomorphism of a digraph G to a digraph H is t-frugal when no more
than t in-neighbours of any vertex of G share an image.  This package
provides the complete toolkit around the complexity dichotomy of that
problem for t >= 2: exact solvers and certificate checkers, the
indicator-graph construction, the frugality-forcing gadget reductions,
the monotone exact-count SAT transformation chain, polynomial-time
deciders for targets of maximum in-degree 1, and a structural
classifier, all validated against brute-force oracles at desk scale.
"""

from .classifier import (
    Complexity,
    HardnessWitness,
    Verdict,
    build_hardness_witness,
    classify,
)
from .digraph import Assignment, Colouring, Digraph, UGraph
from .errors import (
    BudgetExceededError,
    CertificateError,
    ConsistencyError,
    ContractError,
    FrugalhomError,
    ParseError,
)
from .gadgets import (
    EdgeGadget,
    F0Placement,
    GadgetF,
    GadgetF0,
    GadgetF1,
    StarG,
    build_f,
    build_f0,
    build_f1,
    build_star_g,
    lift_colouring,
    project_colouring,
)
from .indicator import IndicatorResult, TwoColouringResult, indicator_graph, two_colouring
from .polydecide import (
    CoreShape,
    compose_retraction,
    compute_core_delta1,
    decide_t_frugal_delta1,
    homs_to_cycle,
    homs_to_cycle_union,
    homs_to_path,
)
from .satkit import (
    IncidenceLegend,
    MonotoneSatInstance,
    TransformRecord,
    chain_from_1in3,
    check_exactly,
    decode_sat_witness,
    encode_sat_witness,
    forward_witness,
    lift_half,
    pull_back,
    sat_to_digraph,
    switch_assignment,
    widen,
)
from .satkit import solve as solve_sat
from .solver import (
    enumerate_graph_homomorphisms,
    enumerate_homomorphisms,
    enumerate_t_frugal,
    find_graph_homomorphism,
    find_homomorphism,
    find_t_frugal,
    is_graph_homomorphism,
    is_homomorphism,
    is_t_frugal,
    is_valid_t_frugal,
)

__all__ = [
    "Assignment",
    "BudgetExceededError",
    "CertificateError",
    "Colouring",
    "Complexity",
    "ConsistencyError",
    "ContractError",
    "CoreShape",
    "Digraph",
    "EdgeGadget",
    "F0Placement",
    "FrugalhomError",
    "GadgetF",
    "GadgetF0",
    "GadgetF1",
    "HardnessWitness",
    "IncidenceLegend",
    "IndicatorResult",
    "MonotoneSatInstance",
    "ParseError",
    "StarG",
    "TransformRecord",
    "TwoColouringResult",
    "UGraph",
    "Verdict",
    "build_f",
    "build_f0",
    "build_f1",
    "build_hardness_witness",
    "build_star_g",
    "chain_from_1in3",
    "check_exactly",
    "classify",
    "compose_retraction",
    "compute_core_delta1",
    "decide_t_frugal_delta1",
    "decode_sat_witness",
    "encode_sat_witness",
    "enumerate_graph_homomorphisms",
    "enumerate_homomorphisms",
    "enumerate_t_frugal",
    "find_graph_homomorphism",
    "find_homomorphism",
    "find_t_frugal",
    "forward_witness",
    "homs_to_cycle",
    "homs_to_cycle_union",
    "homs_to_path",
    "indicator_graph",
    "is_graph_homomorphism",
    "is_homomorphism",
    "is_t_frugal",
    "is_valid_t_frugal",
    "lift_colouring",
    "lift_half",
    "project_colouring",
    "pull_back",
    "sat_to_digraph",
    "solve_sat",
    "switch_assignment",
    "two_colouring",
    "widen",
]

__version__ = "0.1.0"
