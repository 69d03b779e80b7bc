"""Monotone exact-count SAT: instances, transformations, brute-force
oracle, and the clause-incidence digraph reduction.

An instance is a collection of width-k clauses of distinct unnegated
variables; an assignment satisfies it at level ell when every clause has
exactly ell true variables.  The transformations (widen, lift_half, and
their composition from the 1-in-3 base) each return a TransformRecord
that makes the reduction invertible: pull_back maps a certificate of the
transformed instance to one of the source.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .digraph import Assignment, Colouring, Digraph
from .errors import CertificateError, ConsistencyError, ContractError
from .indicator import indicator_graph
from .solver import is_homomorphism, is_t_frugal


@dataclass(frozen=True)
class MonotoneSatInstance:
    """Uniform-width monotone clause set over variables 0..n-1."""

    n: int
    k: int
    clauses: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, k: int, clauses: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ContractError(f"variable count must be nonnegative, got {n}")
        if k < 1:
            raise ContractError(f"clause width must be positive, got {k}")
        normalized = []
        for clause in clauses:
            c = tuple(sorted(int(x) for x in clause))
            if len(set(c)) != len(c):
                raise ContractError(f"clause {c} repeats a variable")
            if len(c) != k:
                raise ContractError(f"clause {c} has width {len(c)}, expected {k}")
            if c and (c[0] < 0 or c[-1] >= n):
                raise ContractError(f"clause {c} out of range for n={n}")
            normalized.append(c)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "clauses", tuple(normalized))


def _check_assignment(S: MonotoneSatInstance, a: Assignment) -> None:
    if len(a) != S.n:
        raise ContractError(f"assignment has length {len(a)}, expected {S.n}")


def _check_ell(S: MonotoneSatInstance, ell: int) -> None:
    if not (1 <= ell <= S.k):
        raise ContractError(f"exact count {ell} outside 1..{S.k}")


def check_exactly(S: MonotoneSatInstance, a: Assignment, ell: int) -> bool:
    """True iff every clause has exactly ell true variables under a."""
    _check_assignment(S, a)
    _check_ell(S, ell)
    return all(sum(1 for x in clause if a[x]) == ell for clause in S.clauses)


def solve(S: MonotoneSatInstance, ell: int) -> Optional[Assignment]:
    """Lexicographically first satisfying assignment (False < True), or None.

    Complete 2^n enumeration with bit-parallel clause counting; intended
    for n up to the mid-twenties.
    """
    _check_ell(S, ell)
    n = S.n
    # variable i sits at bit n-1-i so that increasing integers enumerate
    # assignments in lexicographic order
    masks = [sum(1 << (n - 1 - x) for x in clause) for clause in S.clauses]
    for m in range(1 << n):
        if all((m & mask).bit_count() == ell for mask in masks):
            return tuple(bool(m >> (n - 1 - i) & 1) for i in range(n))
    return None


def switch_assignment(a: Assignment) -> Assignment:
    """Componentwise negation; swaps exact-count ell with k - ell."""
    return tuple(not v for v in a)


@dataclass(frozen=True)
class TransformRecord:
    """Provenance of one reduction step (or a composed chain).

    kind is "widen", "lift", or "chain".  The record keeps both endpoint
    instances and exact-count levels so certificates can be validated and
    pulled back without extra context.
    """

    kind: str
    source: MonotoneSatInstance
    result: MonotoneSatInstance
    source_ell: int
    result_ell: int
    x_vars: tuple[int, ...] = ()
    y_vars: tuple[int, ...] = ()
    steps: tuple["TransformRecord", ...] = ()
    switched: bool = False


def widen(S: MonotoneSatInstance, ell: int) -> tuple[MonotoneSatInstance, TransformRecord]:
    """Width k -> k+1 preserving exact count ell; requires ell <= k/2.

    Adds ell+1 fresh variables x_i (each appended to every clause in turn,
    multiplying the clause count by ell+1) plus k-ell fresh variables y_j
    and the single clause {x_1..x_{ell+1}, y_1..y_{k-ell}}.  Any
    certificate of the result forces every x_i false, so its restriction
    to the original variables satisfies S.
    """
    _check_ell(S, ell)
    if 2 * ell > S.k:
        raise ContractError(f"widen requires ell <= k/2, got ell={ell}, k={S.k}")
    xs = tuple(range(S.n, S.n + ell + 1))
    ys = tuple(range(S.n + ell + 1, S.n + S.k + 1))
    clauses = [clause + (x,) for clause in S.clauses for x in xs]
    clauses.append(xs + ys)
    result = MonotoneSatInstance(S.n + S.k + 1, S.k + 1, clauses)
    record = TransformRecord("widen", S, result, ell, ell, x_vars=xs, y_vars=ys)
    return result, record


def lift_half(S: MonotoneSatInstance, ell: int) -> tuple[MonotoneSatInstance, TransformRecord]:
    """Exact count ell-1 of width 2*ell-1 -> exact count ell of width 2*ell.

    Appends one fresh variable to every clause.  A certificate with the
    fresh variable true restricts to a source certificate; with it false,
    the switched restriction is one.
    """
    if ell < 2:
        raise ContractError(f"lift_half requires ell >= 2, got {ell}")
    if S.k != 2 * ell - 1:
        raise ContractError(f"lift_half requires width {2 * ell - 1}, got {S.k}")
    x = S.n
    clauses = [clause + (x,) for clause in S.clauses]
    result = MonotoneSatInstance(S.n + 1, S.k + 1, clauses)
    record = TransformRecord("lift", S, result, ell - 1, ell, x_vars=(x,))
    return result, record


def pull_back(record: TransformRecord, a: Assignment) -> Assignment:
    """Translate a certificate of record.result into one of record.source."""
    if not check_exactly(record.result, a, record.result_ell):
        raise CertificateError("assignment does not satisfy the transformed instance")
    if record.kind == "widen":
        return tuple(a[: record.source.n])
    if record.kind == "lift":
        restriction = tuple(a[: record.source.n])
        if a[record.x_vars[0]]:
            return restriction
        return switch_assignment(restriction)
    if record.kind == "chain":
        if record.switched:
            a = switch_assignment(a)
        for step in reversed(record.steps):
            a = pull_back(step, a)
        return a
    raise ContractError(f"unknown record kind {record.kind!r}")


def forward_witness(record: TransformRecord, a: Assignment) -> Assignment:
    """Translate a certificate of record.source into one of record.result."""
    if not check_exactly(record.source, a, record.source_ell):
        raise CertificateError("assignment does not satisfy the source instance")
    if record.kind == "widen":
        ell = record.source_ell
        values = list(a) + [False] * (record.source.k + 1)
        for y in record.y_vars[:ell]:
            values[y] = True
        return tuple(values)
    if record.kind == "lift":
        return tuple(a) + (True,)
    if record.kind == "chain":
        for step in record.steps:
            a = forward_witness(step, a)
        if record.switched:
            a = switch_assignment(a)
        return a
    raise ContractError(f"unknown record kind {record.kind!r}")


def chain_from_1in3(
    S: MonotoneSatInstance, target_ell: int, target_k: int
) -> tuple[MonotoneSatInstance, TransformRecord]:
    """Compose widen/lift_half steps from a width-3 instance at exact
    count 1 up to exact count target_ell of width target_k.

    Only target_ell <= target_k/2 is constructed directly; otherwise the
    chain is built for target_k - target_ell and the record is marked
    switched, to be undone at pull_back time.
    """
    if S.k != 3:
        raise ContractError(f"chain source must have width 3, got {S.k}")
    if not (1 <= target_ell < target_k) or target_k < 3:
        raise ContractError(f"invalid target {target_ell}-in-{target_k}")
    built_ell = target_ell if 2 * target_ell <= target_k else target_k - target_ell
    switched = built_ell != target_ell

    plan: list[tuple[str, int]] = []
    ell, k = built_ell, target_k
    while (ell, k) != (1, 3):
        if 2 * ell <= k - 1:
            plan.append(("widen", ell))
            k -= 1
        else:
            # ell == k/2 with k even: undo a lift_half from (ell-1, k-1)
            plan.append(("lift", ell))
            ell -= 1
            k -= 1
    plan.reverse()

    current = S
    steps: list[TransformRecord] = []
    for kind, step_ell in plan:
        if kind == "widen":
            current, rec = widen(current, step_ell)
        else:
            current, rec = lift_half(current, step_ell)
        steps.append(rec)
    record = TransformRecord(
        "chain", S, current, 1, target_ell, steps=tuple(steps), switched=switched
    )
    return current, record


@dataclass(frozen=True)
class IncidenceLegend:
    """Vertex bookkeeping for the clause-incidence digraph of an instance."""

    instance: MonotoneSatInstance
    t: int
    graph: Digraph
    variable_vertices: tuple[int, ...]
    clause_vertices: tuple[int, ...]


def sat_to_digraph(S: MonotoneSatInstance, t: int) -> tuple[Digraph, IncidenceLegend]:
    """Bipartite incidence digraph of a width-2t instance.

    One vertex per variable, one per clause, an arc variable -> clause for
    each membership; clause vertices have in-degree 2t.
    """
    if t < 1:
        raise ContractError(f"frugality budget must be >= 1, got {t}")
    if S.k != 2 * t:
        raise ContractError(f"incidence reduction requires width {2 * t}, got {S.k}")
    variable_vertices = tuple(range(S.n))
    clause_vertices = tuple(range(S.n, S.n + len(S.clauses)))
    arcs = [
        (x, clause_vertices[j]) for j, clause in enumerate(S.clauses) for x in clause
    ]
    graph = Digraph(S.n + len(S.clauses), arcs)
    return graph, IncidenceLegend(S, t, graph, variable_vertices, clause_vertices)


def encode_sat_witness(legend: IncidenceLegend, H: Digraph, a: Assignment) -> Colouring:
    """Turn a satisfying assignment into a t-frugal H-colouring of the
    incidence digraph.

    Clause vertices all go to one vertex of in-degree 2 in H; variable
    vertices go to its two in-neighbours, true variables to one and false
    to the other.
    """
    S, t = legend.instance, legend.t
    if not check_exactly(S, a, t):
        raise CertificateError("assignment does not satisfy the instance at exact count t")
    x = next((v for v in range(H.n) if H.in_degree(v) == 2), None)
    if x is None:
        raise ContractError("target has no vertex of in-degree 2")
    y, z = H.in_neighbours(x)
    images = [y if a[i] else z for i in range(S.n)]
    images.extend([x] * len(S.clauses))
    return tuple(images)


def decode_sat_witness(
    f: Colouring, H: Digraph, hstar_colours: tuple[int, ...], legend: IncidenceLegend
) -> Assignment:
    """Read a satisfying assignment off a t-frugal H-colouring of the
    incidence digraph: variable truth is the indicator colour of its image.
    """
    S, t, G = legend.instance, legend.t, legend.graph
    if not (is_homomorphism(G, H, f) and is_t_frugal(G, H, f, t)):
        raise CertificateError("colouring is not a valid t-frugal homomorphism")
    ind = indicator_graph(H)
    if len(hstar_colours) != H.n:
        raise CertificateError("two-colouring has the wrong length")
    if any(hstar_colours[u] == hstar_colours[v] for u, v in ind.graph.edges):
        raise CertificateError("two-colouring is not proper on the indicator graph")
    a = tuple(bool(hstar_colours[f[u]]) for u in legend.variable_vertices)
    if not check_exactly(S, a, t):
        raise ConsistencyError(
            "decoded assignment misses the exact count; decoding requires a "
            "target of max in-degree 2 with a bipartite indicator graph"
        )
    return a
