"""Text formats for graphs, colourings, assignments, and SAT instances.

All formats are line-based ASCII with LF endings; '#' starts a comment
line and blank lines are ignored.  Serialization is canonical (arcs,
edges, and clause variables sorted) so parse(serialize(x)) == x and
serialized output is stable.

  .dg   "digraph n m" then m lines "u v"      (arc u -> v)
  .ug   "graph n m"   then m lines "u v"      (edge, written with u < v)
  .map  "map n"       then n lines "g h"      (instance vertex -> target)
  .asg  one line of n characters '0'/'1'      (variable i at position i)
  .mks  "mksat n k c" then c lines of k distinct variable indices
"""

from __future__ import annotations

from typing import Callable, Iterator

from .digraph import Assignment, Colouring, Digraph, UGraph
from .errors import ParseError
from .satkit import MonotoneSatInstance


def _significant_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_header(
    lines: Iterator[tuple[int, str]], name: str, fields: int
) -> tuple[int, list[int]]:
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(f"missing '{name}' header", 1) from None
    parts = line.split()
    if parts[0] != name or len(parts) != fields + 1:
        raise ParseError(f"expected header '{name}' with {fields} counts, got {line!r}", lineno)
    try:
        values = [int(p) for p in parts[1:]]
    except ValueError:
        raise ParseError(f"non-integer count in header {line!r}", lineno) from None
    if any(v < 0 for v in values):
        raise ParseError(f"negative count in header {line!r}", lineno)
    return lineno, values


def _parse_int_rows(
    lines: Iterator[tuple[int, str]], count: int, width: int, what: str, header_line: int
) -> list[tuple[int, list[int]]]:
    rows = []
    last = header_line
    for _ in range(count):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise ParseError(f"expected {count} {what} lines, found {len(rows)}", last) from None
        last = lineno
        parts = line.split()
        if len(parts) != width:
            raise ParseError(f"expected {width} fields, got {line!r}", lineno)
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        rows.append((lineno, values))
    for lineno, line in lines:
        raise ParseError(f"trailing content {line!r}", lineno)
    return rows


def parse_digraph(text: str) -> Digraph:
    lines = _significant_lines(text)
    header_line, (n, m) = _parse_header(lines, "digraph", 2)
    arcs: set[tuple[int, int]] = set()
    for lineno, (u, v) in _parse_int_rows(lines, m, 2, "arc", header_line):
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"arc ({u}, {v}) out of range for n={n}", lineno)
        if (u, v) in arcs:
            raise ParseError(f"duplicate arc ({u}, {v})", lineno)
        arcs.add((u, v))
    return Digraph(n, arcs)


def serialize_digraph(G: Digraph) -> str:
    out = [f"digraph {G.n} {len(G.arcs)}"]
    out.extend(f"{u} {v}" for u, v in G.sorted_arcs)
    return "\n".join(out) + "\n"


def parse_ugraph(text: str) -> UGraph:
    lines = _significant_lines(text)
    header_line, (n, m) = _parse_header(lines, "graph", 2)
    edges: set[tuple[int, int]] = set()
    for lineno, (u, v) in _parse_int_rows(lines, m, 2, "edge", header_line):
        if u == v:
            raise ParseError(f"loop at vertex {u} not allowed", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for n={n}", lineno)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        edges.add(key)
    return UGraph(n, edges)


def serialize_ugraph(G: UGraph) -> str:
    out = [f"graph {G.n} {len(G.edges)}"]
    out.extend(f"{u} {v}" for u, v in G.sorted_edges)
    return "\n".join(out) + "\n"


def parse_colouring(text: str) -> Colouring:
    lines = _significant_lines(text)
    header_line, (n,) = _parse_header(lines, "map", 1)
    images: dict[int, int] = {}
    for lineno, (g, h) in _parse_int_rows(lines, n, 2, "mapping", header_line):
        if not 0 <= g < n:
            raise ParseError(f"instance vertex {g} out of range for n={n}", lineno)
        if h < 0:
            raise ParseError(f"negative target vertex {h}", lineno)
        if g in images:
            raise ParseError(f"duplicate mapping for vertex {g}", lineno)
        images[g] = h
    return tuple(images[g] for g in range(n))


def serialize_colouring(f: Colouring) -> str:
    out = [f"map {len(f)}"]
    out.extend(f"{g} {h}" for g, h in enumerate(f))
    return "\n".join(out) + "\n"


def parse_assignment(text: str) -> Assignment:
    lines = list(_significant_lines(text))
    if not lines:
        return ()  # zero variables serialize to a blank line
    if len(lines) > 1:
        raise ParseError(f"trailing content {lines[1][1]!r}", lines[1][0])
    lineno, line = lines[0]
    if any(ch not in "01" for ch in line):
        raise ParseError(f"assignment must be all '0'/'1', got {line!r}", lineno)
    return tuple(ch == "1" for ch in line)


def serialize_assignment(a: Assignment) -> str:
    return "".join("1" if v else "0" for v in a) + "\n"


def parse_sat_instance(text: str) -> MonotoneSatInstance:
    lines = _significant_lines(text)
    header_line, (n, k, c) = _parse_header(lines, "mksat", 3)
    if k < 1:
        raise ParseError("clause width must be positive", header_line)
    clauses = []
    for lineno, values in _parse_int_rows(lines, c, k, "clause", header_line):
        if len(set(values)) != len(values):
            raise ParseError(f"clause repeats a variable: {values}", lineno)
        if any(not 0 <= x < n for x in values):
            raise ParseError(f"clause variable out of range for n={n}: {values}", lineno)
        clauses.append(tuple(sorted(values)))
    return MonotoneSatInstance(n, k, clauses)


def serialize_sat_instance(S: MonotoneSatInstance) -> str:
    out = [f"mksat {S.n} {S.k} {len(S.clauses)}"]
    out.extend(" ".join(str(x) for x in clause) for clause in S.clauses)
    return "\n".join(out) + "\n"


def _reader(parse: Callable):
    def read(path: str):
        with open(path, "r", encoding="ascii") as fh:
            return parse(fh.read())

    return read


def _writer(serialize: Callable):
    def write(path: str, value) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(serialize(value))

    return write


read_digraph = _reader(parse_digraph)
write_digraph = _writer(serialize_digraph)
read_ugraph = _reader(parse_ugraph)
write_ugraph = _writer(serialize_ugraph)
read_colouring = _reader(parse_colouring)
write_colouring = _writer(serialize_colouring)
read_assignment = _reader(parse_assignment)
write_assignment = _writer(serialize_assignment)
read_sat_instance = _reader(parse_sat_instance)
write_sat_instance = _writer(serialize_sat_instance)
