"""Kohnert moves and the closure of a diagram under them."""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass

from .diagrams import Diagram, weight
from .polynomials import IntPolynomial, monomial_generating

DEFAULT_MAX_DIAGRAMS = 10 ** 6


class ResourceBoundError(RuntimeError):
    """Raised when a closure would exceed the configured diagram budget."""


def _max_diagrams(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("KOHNERT_MAX_DIAGRAMS")
    return int(env) if env else DEFAULT_MAX_DIAGRAMS


def kohnert_move(diagram: Diagram, r: int) -> Diagram | None:
    """Drop the rightmost cell of row r to the first empty spot below it.

    Returns None when row r is empty or the cell has nowhere to go.
    """
    cols = diagram.row(r)
    if not cols:
        return None
    c = cols[-1]
    occupied = set(diagram.col(c))
    for dst in range(r - 1, 0, -1):
        if dst not in occupied:
            return diagram.move_cell((c, r), (c, dst))
    return None


def reverse_kohnert_moves(diagram: Diagram, max_row: int | None = None) -> list[tuple[Diagram, int]]:
    """All (source, row) pairs whose Kohnert move yields this diagram.

    Candidate sources lift one cell within its column up to ``max_row``
    (default: the top occupied row of the diagram itself).
    """
    if max_row is None:
        max_row = diagram.max_row
    found = []
    for c, r0 in diagram.sorted_cells:
        occupied = set(diagram.col(c))
        for r in range(r0 + 1, max_row + 1):
            if r in occupied:
                continue
            source = diagram.move_cell((c, r0), (c, r))
            if kohnert_move(source, r) == diagram:
                found.append((source, r))
    found.sort(key=lambda pair: (pair[0].sorted_cells, pair[1]))
    return found


@dataclass(frozen=True)
class KohnertSet:
    source: Diagram
    members: tuple[Diagram, ...]          # sorted canonically
    edges: frozenset[tuple[Diagram, Diagram, int]]   # (from, to, row moved)

    def __contains__(self, diagram: Diagram) -> bool:
        return diagram in self.member_set

    @property
    def member_set(self) -> frozenset[Diagram]:
        value = self.__dict__.get("_member_set")
        if value is None:
            value = frozenset(self.members)
            self.__dict__["_member_set"] = value
        return value


def generate_kd(diagram: Diagram, max_diagrams: int | None = None) -> KohnertSet:
    """Breadth-first closure of a diagram under Kohnert moves."""
    limit = _max_diagrams(max_diagrams)
    seen = {diagram}
    queue = deque([diagram])
    edges = []
    while queue:
        current = queue.popleft()
        for r in current.by_row:
            nxt = kohnert_move(current, r)
            if nxt is None:
                continue
            edges.append((current, nxt, r))
            if nxt not in seen:
                if len(seen) >= limit:
                    raise ResourceBoundError(
                        f"closure exceeds {limit} diagrams (KOHNERT_MAX_DIAGRAMS)")
                seen.add(nxt)
                queue.append(nxt)
    return KohnertSet(source=diagram,
                      members=tuple(sorted(seen)),
                      edges=frozenset(edges))


def kohnert_polynomial(diagram: Diagram, n: int | None = None,
                       max_diagrams: int | None = None) -> IntPolynomial:
    """Generating polynomial of the row weights over the closure."""
    if n is None:
        n = diagram.max_row
    kset = generate_kd(diagram, max_diagrams)
    return monomial_generating((weight(t, n) for t in kset.members), n)


def kd_to_json(kset: KohnertSet) -> str:
    index = {t: i for i, t in enumerate(kset.members)}
    edges = sorted((index[s], index[t], r) for s, t, r in kset.edges)
    return json.dumps({
        "source": index[kset.source],
        "count": len(kset.members),
        "members": [sorted(map(list, t.cells)) for t in kset.members],
        "edges": [list(e) for e in edges],
    })


def _grid_label(diagram: Diagram) -> str:
    grid = diagram.to_grid()
    if not grid:
        return "(empty)\\l"
    return grid.replace("\n", "\\l") + "\\l"


def kd_to_dot(kset: KohnertSet) -> str:
    index = {t: i for i, t in enumerate(kset.members)}
    lines = ["digraph kohnert_moves {",
             '  node [shape=box fontname="monospace"];']
    for i, t in enumerate(kset.members):
        lines.append(f'  n{i} [label="{_grid_label(t)}"];')
    for s, t, r in sorted(kset.edges, key=lambda e: (index[e[0]], index[e[1]], e[2])):
        lines.append(f"  n{index[s]} -> n{index[t]} [row={r}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
