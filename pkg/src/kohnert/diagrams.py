"""Diagrams: finite sets of unit cells in the first quadrant.

A cell is a pair (col, row), both 1-based, with row 1 at the bottom.
Diagrams are immutable; the canonical form is the sorted cell tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .compositions import check_composition
from .perms import Permutation, check_permutation

Cell = tuple[int, int]


class GridParseError(ValueError):
    """Raised for malformed grid text; carries line and column info."""


def check_cell(cell) -> Cell:
    c, r = cell
    if not (isinstance(c, int) and isinstance(r, int) and c >= 1 and r >= 1):
        raise ValueError(f"bad cell {cell!r}: coordinates must be integers >= 1")
    return (c, r)


@dataclass(frozen=True)
class Diagram:
    cells: frozenset[Cell]

    @staticmethod
    def of(*cells) -> "Diagram":
        return Diagram(frozenset(check_cell(c) for c in cells))

    @staticmethod
    def from_cells(cells) -> "Diagram":
        return Diagram.of(*cells)

    @cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    @cached_property
    def max_row(self) -> int:
        return max((r for _, r in self.cells), default=0)

    @cached_property
    def max_col(self) -> int:
        return max((c for c, _ in self.cells), default=0)

    @cached_property
    def by_row(self) -> dict[int, tuple[int, ...]]:
        """Occupied columns of each nonempty row, sorted."""
        rows: dict[int, list[int]] = {}
        for c, r in self.cells:
            rows.setdefault(r, []).append(c)
        return {r: tuple(sorted(cs)) for r, cs in sorted(rows.items())}

    @cached_property
    def by_col(self) -> dict[int, tuple[int, ...]]:
        """Occupied rows of each nonempty column, sorted."""
        cols: dict[int, list[int]] = {}
        for c, r in self.cells:
            cols.setdefault(c, []).append(r)
        return {c: tuple(sorted(rs)) for c, rs in sorted(cols.items())}

    def row(self, r: int) -> tuple[int, ...]:
        return self.by_row.get(r, ())

    def col(self, c: int) -> tuple[int, ...]:
        return self.by_col.get(c, ())

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self.cells

    def __iter__(self):
        return iter(self.sorted_cells)

    def __lt__(self, other: "Diagram") -> bool:
        return self.sorted_cells < other.sorted_cells

    def move_cell(self, src: Cell, dst: Cell) -> "Diagram":
        if src not in self.cells:
            raise ValueError(f"cell {src} not present")
        dst = check_cell(dst)
        if dst in self.cells:
            raise ValueError(f"cell {dst} already present")
        return Diagram(self.cells - {src} | {dst})

    def shift_cols(self, delta: int) -> "Diagram":
        """Translate all cells horizontally by delta columns."""
        return Diagram.of(*((c + delta, r) for c, r in self.cells))

    def transpose(self) -> "Diagram":
        return Diagram.of(*((r, c) for c, r in self.cells))

    def to_grid(self) -> str:
        """Render as text, one line per row from the top row down to row 1.

        Cells print as 'O', gaps as '.'; the grid is the minimal bounding
        width and height.  The empty diagram renders as the empty string.
        """
        if not self.cells:
            return ""
        width = self.max_col
        lines = []
        for r in range(self.max_row, 0, -1):
            occupied = set(self.row(r))
            lines.append("".join("O" if c in occupied else "." for c in range(1, width + 1)))
        return "\n".join(lines)

    @staticmethod
    def from_grid(text: str) -> "Diagram":
        """Parse the textual grid format; '#' lines are comments.

        The last non-comment line is row 1, the line above it row 2, etc.
        """
        raw = text.split("\n")
        if raw and raw[-1] == "":
            raw = raw[:-1]
        lines = [(idx, line) for idx, line in enumerate(raw, start=1)
                 if not line.startswith("#")]
        total = len(lines)
        cells = []
        for pos, (idx, line) in enumerate(lines, start=1):
            r = total - pos + 1
            for col0, ch in enumerate(line):
                if ch == "O":
                    cells.append((col0 + 1, r))
                elif ch != ".":
                    raise GridParseError(
                        f"line {idx}, column {col0 + 1}: unexpected character {ch!r}")
        return Diagram.of(*cells)


def weight(diagram: Diagram, n: int | None = None) -> tuple[int, ...]:
    """Cells per row, from row 1 up to row n (default: the top occupied row)."""
    if n is None:
        n = diagram.max_row
    elif n < diagram.max_row:
        raise ValueError(f"diagram has cells above row {n}")
    return tuple(len(diagram.row(r)) for r in range(1, n + 1))


def column_weights(diagram: Diagram, n: int | None = None) -> tuple[int, ...]:
    """Cells per column, from column 1 out to column n."""
    if n is None:
        n = diagram.max_col
    elif n < diagram.max_col:
        raise ValueError(f"diagram has cells beyond column {n}")
    return tuple(len(diagram.col(c)) for c in range(1, n + 1))


def composition_diagram(a) -> Diagram:
    """Left-justified diagram with a_r cells in row r."""
    a = check_composition(a)
    return Diagram.of(*((c, r + 1) for r, parts in enumerate(a) for c in range(1, parts + 1)))


def is_composition_diagram(diagram: Diagram) -> bool:
    return all(cols == tuple(range(1, len(cols) + 1)) for cols in diagram.by_row.values())


def rothe_diagram(w: Permutation) -> Diagram:
    """Cells (w_j, i) for every inversion i < j with w_i > w_j."""
    w = check_permutation(w)
    cells = [(w[j], i + 1)
             for i in range(len(w))
             for j in range(i + 1, len(w))
             if w[i] > w[j]]
    return Diagram.of(*cells)


def is_southwest(diagram: Diagram) -> bool:
    """Whenever (c1, r2) and (c2, r1) are cells with c1 < c2 and r1 < r2,
    the corner (c1, r1) must also be a cell."""
    by_col = diagram.by_col
    for c1, rows1 in by_col.items():
        for c2, rows2 in by_col.items():
            if c1 >= c2:
                continue
            have1 = set(rows1)
            for r2 in rows1:
                for r1 in rows2:
                    if r1 < r2 and r1 not in have1:
                        return False
    return True


EMPTY = Diagram(frozenset())
