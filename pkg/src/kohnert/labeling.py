"""Diagram labelings and what they decide: Kohnert tableaux, the
labeling of a diagram with respect to another, a membership test for
move closures that avoids generating them, and the Demazure and
fundamental slide expansions of Kohnert polynomials.

A labeling attaches a positive integer to every cell.  Rectifying a
labeled diagram re-labels cells column by column before they slide
left, so that the final labels record which row of the source diagram
each cell came from.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .compositions import Composition, check_composition
from .crystal import raising, rectify, rectify_column
from .diagrams import (Cell, Diagram, GridParseError, column_weights,
                       composition_diagram, is_composition_diagram,
                       is_southwest, weight)
from .moves import generate_kd
from .perms import sort_and_minimal_perm


@dataclass(frozen=True)
class Labeling:
    """A positive integer label on every cell of a base diagram."""

    base: Diagram
    labels: tuple[tuple[Cell, int], ...]

    def __post_init__(self):
        items = tuple(sorted(self.labels))
        object.__setattr__(self, "labels", items)
        if len(items) != len(self.base) or \
                {cell for cell, _ in items} != set(self.base.cells):
            raise ValueError("labels must cover the base diagram exactly")
        if any(v < 1 for _, v in items):
            raise ValueError("labels must be positive")

    @staticmethod
    def of(base: Diagram, mapping) -> "Labeling":
        return Labeling(base, tuple(dict(mapping).items()))

    @cached_property
    def label_map(self) -> dict[Cell, int]:
        return dict(self.labels)

    def label(self, cell: Cell) -> int:
        return self.label_map[cell]

    def is_strict(self) -> bool:
        """Distinct labels within every column."""
        for c in range(1, self.base.max_col + 1):
            col = [self.label((c, r)) for r in self.base.col(c)]
            if len(set(col)) != len(col):
                return False
        return True

    def to_grid(self) -> str:
        """The diagram grid with labels in place of 'O'; labels past 9
        print bracketed, like '[12]'."""
        if not self.base.cells:
            return ""
        lines = []
        for r in range(self.base.max_row, 0, -1):
            row = []
            for c in range(1, self.base.max_col + 1):
                if (c, r) in self.base:
                    v = self.label((c, r))
                    row.append(str(v) if v <= 9 else f"[{v}]")
                else:
                    row.append(".")
            lines.append("".join(row))
        return "\n".join(lines)

    @staticmethod
    def from_grid(text: str) -> "Labeling":
        """Parse the labeled grid format; '#' lines are comments."""
        raw = text.split("\n")
        if raw and raw[-1] == "":
            raw = raw[:-1]
        lines = [(idx, line) for idx, line in enumerate(raw, start=1)
                 if not line.startswith("#")]
        total = len(lines)
        cells: dict[Cell, int] = {}
        for pos, (idx, line) in enumerate(lines, start=1):
            r = total - pos + 1
            col = 0
            i = 0
            while i < len(line):
                ch = line[i]
                col += 1
                if ch == ".":
                    i += 1
                elif ch.isdigit() and ch != "0":
                    cells[(col, r)] = int(ch)
                    i += 1
                elif ch == "[":
                    end = line.find("]", i)
                    body = line[i + 1:end]
                    if end < 0 or not body.isdigit() or int(body) < 1:
                        raise GridParseError(
                            f"line {idx}, column {col}: bad bracketed label")
                    cells[(col, r)] = int(body)
                    i = end + 1
                else:
                    raise GridParseError(
                        f"line {idx}, column {col}: unexpected character {ch!r}")
        return Labeling.of(Diagram.of(*cells), cells)


def super_standard(d: Diagram) -> Labeling:
    """Label r on every cell of row r."""
    return Labeling.of(d, {(c, r): r for c, r in d})


def is_flagged(lab: Labeling) -> bool:
    """Every label at least its row index."""
    return all(v >= r for (_, r), v in lab.labels)


def labeling_diagram(lab: Labeling) -> Diagram:
    """The diagram with a cell (c, r) when column c carries label r."""
    if not lab.is_strict():
        raise ValueError("labeling diagram requires a strict labeling")
    return Diagram.of(*((c, v) for (c, _), v in lab.labels))


@dataclass(frozen=True)
class LabelPairing:
    """Label pairing at columns (c, c+1): each column-(c+1) cell either
    points at a column-c partner weakly above it or is unpaired."""

    c: int
    pairs: tuple[tuple[Cell, Cell], ...]    # (right cell, left partner)
    unpaired: tuple[Cell, ...]              # highest to lowest


def label_pairing(t: Diagram, lab: Labeling, c: int) -> LabelPairing:
    """Pair column-(c+1) cells, top to bottom, each with the available
    column-c cell weakly above it carrying the largest label that stays
    weakly below its own.  Label ties break toward the lower cell."""
    if c < 1:
        raise ValueError("column index must be >= 1")
    avail = set(t.col(c))
    pairs = []
    unpaired = []
    for r in sorted(t.col(c + 1), reverse=True):
        x = (c + 1, r)
        lx = lab.label(x)
        cands = [(lab.label((c, s)), -s, s) for s in avail
                 if s >= r and lab.label((c, s)) <= lx]
        if cands:
            s = max(cands)[2]
            avail.discard(s)
            pairs.append((x, (c, s)))
        else:
            unpaired.append(x)
    return LabelPairing(c=c, pairs=tuple(pairs), unpaired=tuple(unpaired))


def relabel_rectify(t: Diagram, lab: Labeling, c: int) -> tuple[Diagram, Labeling]:
    """Rectify column c+1 into column c, re-labeling first.

    Unpaired cells repeatedly trade labels upward with paired cells
    whose partner's label fits below their own; then every paired cell
    adopts its partner's original label; then the unpaired cells slide
    left carrying their new labels.
    """
    pairing = label_pairing(t, lab, c)
    partner = dict(pairing.pairs)
    new = dict(lab.label_map)
    for x in pairing.unpaired:
        while True:
            cands = [z for z, y in partner.items()
                     if z[1] > x[1] and lab.label(y) <= new[x] < new[z]]
            if not cands:
                break
            z = max(cands, key=lambda cell: (new[cell], cell[1]))
            new[x], new[z] = new[z], new[x]
    for z, y in partner.items():
        new[z] = lab.label(y)
    moved = rectify_column(t, c)
    carried = {cell: new[cell] if cell in t else new[(c + 1, cell[1])]
               for cell in moved}
    return moved, Labeling.of(moved, carried)


def rect_labeling(t: Diagram, lab: Labeling) -> tuple[Diagram, Labeling]:
    """Fully rectify a labeled diagram by right-to-left column sweeps.

    The re-labeling phases can rewrite labels even after the cells stop
    moving, so sweeps continue to a joint fixpoint of cells and labels.
    """
    for _ in range(4 + len(t) * max(t.max_col, 1)):
        before = (t, lab)
        for c in range(t.max_col - 1, 0, -1):
            t, lab = relabel_rectify(t, lab, c)
        if (t, lab) == before:
            return t, lab
    raise ValueError("labeling failed to stabilise under rectification")


def _equal_column_weights(t: Diagram, d: Diagram) -> bool:
    n = max(t.max_col, d.max_col)
    return n == 0 or column_weights(t, n) == column_weights(d, n)


def labeling_with_reason(t: Diagram, d: Diagram) -> tuple[Labeling | None, str | None]:
    """Label t with respect to d, or explain why no labeling fits.

    Columns are labeled right to left.  The already labeled part right
    of column c is rectified, anchored so its leftmost column is c+1;
    the row indices of column c of d are then assigned smallest first,
    each to the lowest unlabeled column-c cell lying weakly above the
    like-labeled cell of that rectified part, when present.
    """
    if not _equal_column_weights(t, d):
        raise ValueError("diagrams must have equal column weights")
    assigned: dict[Cell, int] = {}
    for c in range(t.max_col, 0, -1):
        right = [(cc, r) for cc, r in t if cc > c]
        anchor: dict[int, int] = {}
        if right:
            part = Diagram.of(*((cc - c, r) for cc, r in right))
            part_lab = Labeling.of(part, {(cc - c, r): assigned[(cc, r)]
                                          for cc, r in right})
            rpart, rlab = rect_labeling(part, part_lab)
            anchor = {rlab.label((1, r)): r for r in rpart.col(1)}
        avail = sorted(t.col(c))
        for r in sorted(d.col(c)):
            floor = anchor.get(r)
            cands = [s for s in avail if floor is None or s >= floor]
            if not cands:
                return None, f"label {r} has no admissible cell in column {c}"
            avail.remove(cands[0])
            assigned[(c, cands[0])] = r
    return Labeling.of(t, assigned), None


def kohnert_labeling(t: Diagram, d: Diagram) -> Labeling | None:
    """Label t with respect to d, or None when no labeling fits."""
    lab, _ = labeling_with_reason(t, d)
    return lab


def membership(t: Diagram, d: Diagram) -> bool:
    """Whether t lies in the move closure of d, decided by labels alone."""
    return membership_report(t, d)[0]


def membership_report(t: Diagram, d: Diagram) -> tuple[bool, str]:
    """Membership by labels, with the reason a non-member fails.

    A failed labeling and an unflagged labeling both mean non-member,
    but the diagnostics tell them apart.
    """
    if not is_southwest(d):
        raise ValueError("membership test requires a southwest diagram")
    if not _equal_column_weights(t, d):
        return False, "column weights differ"
    lab, reason = labeling_with_reason(t, d)
    if lab is None:
        return False, f"no labeling exists: {reason}"
    for (c, r), v in lab.labels:
        if v < r:
            return False, f"labeling is not flagged: label {v} below row {r} at column {c}"
    return True, "member"


def is_kohnert_tableau(lab: Labeling, a: Composition) -> bool:
    """Content-a Kohnert tableau test.

    One label i in each column 1..a_i, labels at least their row, each
    label's cells weakly descending left to right, and every inverted
    pair within a column excused by a matching label up and to the right.
    """
    check_composition(a)
    by_label: dict[int, dict[int, int]] = {}
    for (c, r), v in lab.labels:
        cols = by_label.setdefault(v, {})
        if c in cols or v > len(a):
            return False
        cols[c] = r
    for i in range(1, len(a) + 1):
        cols = by_label.get(i, {})
        if sorted(cols) != list(range(1, a[i - 1] + 1)):
            return False
        rows = [cols[c] for c in sorted(cols)]
        if any(rows[k] < rows[k + 1] for k in range(len(rows) - 1)):
            return False
    if not is_flagged(lab):
        return False
    for c in range(1, lab.base.max_col + 1):
        col_rows = sorted(lab.base.col(c))
        for r_lo in col_rows:
            for r_hi in col_rows:
                if r_hi > r_lo and lab.label((c, r_hi)) < lab.label((c, r_lo)):
                    nxt = by_label[lab.label((c, r_hi))].get(c + 1)
                    if nxt is None or nxt <= r_lo:
                        return False
    return True


def is_yamanouchi(y: Diagram, d: Diagram) -> bool:
    """Whether rectifying y's labeling lands on a super-standard
    composition diagram; such members index the Demazure expansion."""
    if not membership(y, d):
        raise ValueError("diagram is not in the move closure")
    return _yamanouchi_core(y, d)


def _yamanouchi_core(y: Diagram, d: Diagram) -> bool:
    base, rl = rect_labeling(y, kohnert_labeling(y, d))
    return is_composition_diagram(base) and \
        all(v == r for (_, r), v in rl.labels)


def yamanouchi_diagrams(d: Diagram, max_diagrams=None) -> list[Diagram]:
    """The Yamanouchi members of the closure of d, sorted."""
    if not is_southwest(d):
        raise ValueError("Yamanouchi analysis requires a southwest diagram")
    kset = generate_kd(d, max_diagrams)
    return [t for t in kset.members if _yamanouchi_core(t, d)]


def demazure_expansion(d: Diagram, max_diagrams=None) -> list[Composition]:
    """Weights of the Yamanouchi members: the multiset e with
    kohnert_polynomial(d) equal to the sum of Demazure characters over e."""
    n = d.max_row
    return sorted(weight(y, n) for y in yamanouchi_diagrams(d, max_diagrams))


def is_quasi_yamanouchi(t: Diagram, d: Diagram) -> bool:
    """Whether every fully liftable row is pinned by its label.

    A row r with no row-(r+1) cell weakly right of its leftmost cell
    must carry label r there; failing rows could slide up, so t would
    not contribute a fundamental slide term.
    """
    if not membership(t, d):
        raise ValueError("diagram is not in the move closure")
    return _quasi_yamanouchi_core(t, d)


def _quasi_yamanouchi_core(t: Diagram, d: Diagram) -> bool:
    lab = kohnert_labeling(t, d)
    for r in sorted({r for _, r in t}):
        leftmost = min(t.row(r))
        if any(c >= leftmost for c in t.row(r + 1)):
            continue
        if lab.label((leftmost, r)) != r:
            return False
    return True


def quasi_yamanouchi_diagrams(d: Diagram, max_diagrams=None) -> list[Diagram]:
    """The quasi-Yamanouchi members of the closure of d, sorted."""
    if not is_southwest(d):
        raise ValueError("slide analysis requires a southwest diagram")
    kset = generate_kd(d, max_diagrams)
    return [t for t in kset.members if _quasi_yamanouchi_core(t, d)]


def slide_expansion(d: Diagram, max_diagrams=None) -> list[Composition]:
    """Weights of the quasi-Yamanouchi members: the multiset e with
    kohnert_polynomial(d) equal to the sum of slide polynomials over e."""
    n = d.max_row
    return sorted(weight(t, n) for t in quasi_yamanouchi_diagrams(d, max_diagrams))


def is_vexillary_diagram(d: Diagram) -> bool:
    """Rows, as sets of occupied columns, form a chain under inclusion."""
    rows = [set(d.row(r)) for r in range(1, d.max_row + 1) if d.row(r)]
    rows.sort(key=len)
    return all(rows[i] <= rows[i + 1] for i in range(len(rows) - 1))


def vexillary_theorem_check(d: Diagram, max_diagrams=None) -> bool:
    """Whether the Demazure expansion has a single term; checked to
    agree with the row-chain test."""
    if not is_southwest(d):
        raise ValueError("vexillary check requires a southwest diagram")
    single = len(demazure_expansion(d, max_diagrams)) == 1
    if single != is_vexillary_diagram(d):
        raise AssertionError("single-term expansion disagrees with row chains")
    return single


def column_swap(d: Diagram, c: int) -> Diagram | None:
    """Exchange columns c and c+1 when comparable as row sets, else None.

    On southwest diagrams the swap preserves southwestness and the
    Kohnert polynomial.
    """
    if c < 1:
        raise ValueError("column index must be >= 1")
    left = set(d.col(c))
    right = set(d.col(c + 1))
    if not (left <= right or right <= left):
        return None
    swapped = ((c + 1 if cc == c else c if cc == c + 1 else cc, r)
               for cc, r in d)
    return Diagram.of(*swapped)


def component_demazure_data(component, d: Diagram):
    """(lam, w, a) for one crystal component of the closure of d.

    lam is the weight of the unique highest member, a the weight of the
    labeling diagram after rectifying that member's labeling, and w the
    minimal permutation carrying sorted a to a.  The rectified members
    are checked to tile the closure of the composition diagram of a.
    """
    if not is_southwest(d):
        raise ValueError("component data requires a southwest diagram")
    comp = set(component)
    if not comp:
        raise ValueError("component is empty")
    top_row = max(t.max_row for t in comp)
    tops = [t for t in comp
            if all(raising(t, i) is None for i in range(1, top_row + 1))]
    if len(tops) != 1:
        raise ValueError("not a single crystal component")
    u = tops[0]
    lab = kohnert_labeling(u, d)
    if lab is None or not is_flagged(lab):
        raise ValueError("component contains a non-member")
    _, rl = rect_labeling(u, lab)
    label_dgm = labeling_diagram(rl)
    if not is_composition_diagram(label_dgm):
        raise AssertionError("rectified labels are not a composition diagram")
    a = weight(label_dgm)
    lam, w = sort_and_minimal_perm(a)
    if weight(u, len(a)) != lam:
        raise AssertionError("highest weight does not match the sorted labels")
    rect_image = {rectify(t) for t in comp}
    if len(rect_image) != len(comp):
        raise AssertionError("rectification is not injective on the component")
    if rect_image != generate_kd(composition_diagram(a)).member_set:
        raise AssertionError("rectified component misses the composition closure")
    return lam, w, a
