"""Semistandard Young tableaux, semistandard key tableaux, and their
crystal graphs, including Demazure truncations.

Tableaux store their rows bottom up, so ``rows[0]`` is row 1.  Young
tableaux have partition shape with rows weakly increasing left to right
and columns strictly increasing upward.  Key tableaux have composition
shape with rows weakly decreasing, distinct entries in each column, and
every entry in row r at most r.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .compositions import Composition, check_composition, strip_trailing_zeros
from .crystal import _bracket
from .diagrams import Diagram, weight
from .perms import Permutation, reduced_word
from .polynomials import IntPolynomial, monomial_generating


@dataclass(frozen=True)
class Tableau:
    """A filling whose ``rows[r - 1]`` lists row r left to right."""

    rows: tuple[tuple[int, ...], ...]

    @staticmethod
    def of(*rows) -> "Tableau":
        return Tableau(tuple(tuple(row) for row in rows))

    @cached_property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def entry(self, c: int, r: int) -> int:
        return self.rows[r - 1][c - 1]

    def cells(self):
        for r, row in enumerate(self.rows, start=1):
            for c, value in enumerate(row, start=1):
                yield c, r, value

    def positions_of(self, value: int) -> list[tuple[int, int]]:
        """Cells (column, row) holding ``value``."""
        return [(c, r) for c, r, v in self.cells() if v == value]

    def replace(self, c: int, r: int, value: int) -> "Tableau":
        rows = [list(row) for row in self.rows]
        rows[r - 1][c - 1] = value
        return Tableau(tuple(tuple(row) for row in rows))

    def weight(self, n: int | None = None) -> Composition:
        values = [v for _, _, v in self.cells()]
        if n is None:
            n = max(values, default=0)
        if any(v > n for v in values):
            raise ValueError(f"entry exceeds n={n}")
        counts = [0] * n
        for v in values:
            counts[v - 1] += 1
        return tuple(counts)

    def __len__(self) -> int:
        return sum(len(row) for row in self.rows)

    def __lt__(self, other: "Tableau"):
        return self.rows < other.rows

    def to_text(self) -> str:
        """Rows top first, entries space separated, '-' for an empty row."""
        return "\n".join(" ".join(str(v) for v in row) if row else "-"
                         for row in reversed(self.rows))


# The two families share the representation; validity is what differs.
Ssyt = Tableau
Sskt = Tableau


def is_ssyt(t: Tableau, n: int | None = None) -> bool:
    """Partition shape, rows weakly increase, columns strictly increase."""
    shape = t.shape
    if any(k == 0 for k in shape) or list(shape) != sorted(shape, reverse=True):
        return False
    for c, r, v in t.cells():
        if v < 1 or (n is not None and v > n):
            return False
        if c > 1 and t.entry(c - 1, r) > v:
            return False
        if r > 1 and t.entry(c, r - 1) >= v:
            return False
    return True


def is_sskt(t: Tableau, shape: Composition | None = None) -> bool:
    """Key tableau validity, including distinct column entries."""
    if shape is not None and t.shape != tuple(shape):
        return False
    for c, r, v in t.cells():
        if v < 1 or v > r:
            return False
        if c > 1 and t.entry(c - 1, r) < v:
            return False
    for c in range(1, max(t.shape, default=0) + 1):
        col = [(r, t.entry(c, r)) for r in range(1, len(t.rows) + 1)
               if len(t.rows[r - 1]) >= c]
        values = [v for _, v in col]
        if len(set(values)) != len(values):
            return False
        for r_up, i in col:
            for r_dn, k in col:
                if r_up > r_dn and i < k:
                    # the smaller entry on top forces a larger entry
                    # somewhere right of the lower cell in its row
                    if not any(j > i for j in t.rows[r_dn - 1][c:]):
                        return False
    return True


def highest_weight_tableau(lam: Composition) -> Tableau:
    """Row r of the Young diagram of lam filled with entry r."""
    lam = strip_trailing_zeros(tuple(lam))
    if list(lam) != sorted(lam, reverse=True):
        raise ValueError("shape must be a partition")
    return Tableau(tuple(tuple([r] * lam[r - 1])
                         for r in range(1, len(lam) + 1)))


def _split_unpaired(openers, closers):
    """Bracket-match cells across columns after same-column pairing.

    openers/closers are (column, row) cell lists with all columns
    distinct; returns the unmatched cells of each kind sorted by column.
    """
    opener_events = [(c, (c, r)) for c, r in openers]
    closer_events = [(c, (c, r)) for c, r in closers]
    _, open_rest, close_rest = _bracket(opener_events, closer_events)
    return sorted(open_rest), sorted(close_rest)


def _ssyt_unpaired(t: Tableau, i: int):
    """Unpaired entry-i cells and entry-(i+1) cells, sorted by column.

    An i+1 seeks an unpaired i to its right, after same-column pairs.
    """
    low = t.positions_of(i)
    high = t.positions_of(i + 1)
    common = {c for c, _ in low} & {c for c, _ in high}
    unpaired_high, unpaired_low = _split_unpaired(
        [cell for cell in high if cell[0] not in common],
        [cell for cell in low if cell[0] not in common])
    return unpaired_low, unpaired_high


def ssyt_lower(t: Tableau, i: int) -> Tableau | None:
    """Change the rightmost unpaired i to i+1, or None if there is none."""
    if i < 1:
        raise ValueError("operator index must be >= 1")
    unpaired_low, _ = _ssyt_unpaired(t, i)
    if not unpaired_low:
        return None
    c, r = unpaired_low[-1]
    return t.replace(c, r, i + 1)


def ssyt_raise(t: Tableau, i: int) -> Tableau | None:
    """Change the leftmost unpaired i+1 to i; inverse of ssyt_lower."""
    if i < 1:
        raise ValueError("operator index must be >= 1")
    _, unpaired_high = _ssyt_unpaired(t, i)
    if not unpaired_high:
        return None
    c, r = unpaired_high[0]
    return t.replace(c, r, i)


@dataclass(frozen=True)
class TableauCrystal:
    """A set of tableaux with its lowering edges (t, i, f_i(t))."""

    n: int
    elements: tuple[Tableau, ...]
    edges: frozenset[tuple[Tableau, int, Tableau]]
    highest: Tableau

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def lowering_map(self) -> dict:
        out: dict[Tableau, dict[int, Tableau]] = {t: {} for t in self.elements}
        for t, i, u in self.edges:
            out[t][i] = u
        return out

    def character(self) -> IntPolynomial:
        return character(self.elements, self.n)


def character(elements, n: int | None = None) -> IntPolynomial:
    """Sum of x^weight over tableaux or diagrams."""
    if isinstance(elements, TableauCrystal):
        n = elements.n if n is None else n
        elements = elements.elements
    if n is None:
        raise ValueError("n is required unless a crystal is given")
    weights = [weight(x, n) if isinstance(x, Diagram) else x.weight(n)
               for x in elements]
    return monomial_generating(weights, n)


def build_crystal(lam: Composition, n: int) -> TableauCrystal:
    """The full crystal on SSYT_n(lam): closure of u_lam under lowering."""
    top = highest_weight_tableau(lam)
    if len(top.rows) > n:
        raise ValueError("shape has more rows than allowed entries")
    elements = {top}
    edges = []
    frontier = [top]
    while frontier:
        t = frontier.pop()
        for i in range(1, n):
            u = ssyt_lower(t, i)
            if u is None:
                continue
            edges.append((t, i, u))
            if u not in elements:
                elements.add(u)
                frontier.append(u)
    return TableauCrystal(n=n, elements=tuple(sorted(elements)),
                          edges=frozenset(edges), highest=top)


def demazure_set_op(elements, i: int) -> frozenset:
    """Close a set of tableaux downward along its i-strings."""
    grown = set(elements)
    for t in elements:
        u = ssyt_lower(t, i)
        while u is not None:
            grown.add(u)
            u = ssyt_lower(u, i)
    return frozenset(grown)


def demazure_subset(lam: Composition, w: Permutation, n: int,
                    last: bool = False) -> TableauCrystal:
    """The Demazure crystal B_w(lam) inside B(lam).

    Starting from the highest weight tableau, each letter of a reduced
    word of w in turn closes the set downward along its i-strings.
    Lowering edges that leave the subset are omitted.  The ``last`` flag
    picks the alternative canonical word, for cross-checking.
    """
    top = highest_weight_tableau(lam)
    if len(top.rows) > n:
        raise ValueError("shape has more rows than allowed entries")
    if len(w) > n:
        raise ValueError("permutation is too long for this crystal")
    elements: frozenset[Tableau] = frozenset([top])
    for i in reduced_word(w, last=last):
        elements = demazure_set_op(elements, i)
    edges = {(t, i, u) for t in elements for i in range(1, n)
             if (u := ssyt_lower(t, i)) is not None and u in elements}
    return TableauCrystal(n=n, elements=tuple(sorted(elements)),
                          edges=frozenset(edges), highest=top)


def enumerate_ssyt(lam: Composition, n: int) -> list[Tableau]:
    """All SSYT of shape lam with entries at most n, by filtered search."""
    lam = strip_trailing_zeros(tuple(lam))
    if list(lam) != sorted(lam, reverse=True):
        raise ValueError("shape must be a partition")
    results = []
    for values in product(range(1, n + 1), repeat=sum(lam)):
        rows = []
        pos = 0
        for k in lam:
            rows.append(tuple(values[pos:pos + k]))
            pos += k
        t = Tableau(tuple(rows))
        if is_ssyt(t, n):
            results.append(t)
    return sorted(results)


def enumerate_sskt(a: Composition) -> list[Tableau]:
    """All semistandard key tableaux of shape a, by filtered search."""
    check_composition(a)
    ranges = [range(1, r + 1) for r, k in enumerate(a, start=1)
              for _ in range(k)]
    results = []
    for values in product(*ranges):
        rows = []
        pos = 0
        for k in a:
            rows.append(tuple(values[pos:pos + k]))
            pos += k
        t = Tableau(tuple(rows))
        if is_sskt(t):
            results.append(t)
    return sorted(results)


def _sskt_unpaired_high(t: Tableau, i: int) -> list[tuple[int, int]]:
    """Unpaired entry-(i+1) cells, sorted by column.

    An i seeks an unpaired i+1 to its right, after same-column pairs.
    """
    low = t.positions_of(i)
    high = t.positions_of(i + 1)
    common = {c for c, _ in low} & {c for c, _ in high}
    _, unpaired_high = _split_unpaired(
        [cell for cell in low if cell[0] not in common],
        [cell for cell in high if cell[0] not in common])
    return unpaired_high


def sskt_raise(t: Tableau, i: int) -> Tableau | None:
    """Raise a key tableau at index i.

    The rightmost unpaired i+1 becomes i; then every consecutive column
    to its left holding an i+1 in the same row with an i above gets
    those two entries swapped.
    """
    if i < 1:
        raise ValueError("operator index must be >= 1")
    unpaired = _sskt_unpaired_high(t, i)
    if not unpaired:
        return None
    c0, r0 = unpaired[-1]
    out = t.replace(c0, r0, i)
    for c in range(c0 - 1, 0, -1):
        if len(out.rows[r0 - 1]) < c or out.entry(c, r0) != i + 1:
            break
        above = [r for r in range(r0 + 1, len(out.rows) + 1)
                 if len(out.rows[r - 1]) >= c and out.entry(c, r) == i]
        if not above:
            break
        out = out.replace(c, r0, i).replace(c, above[0], i + 1)
    return out


def sskt_crystal(a: Composition) -> TableauCrystal:
    """The Demazure crystal on all key tableaux of shape a.

    Edges are stored as lowering edges, obtained by reversing the
    raising operator, which is checked to be injective per index.
    """
    elements = enumerate_sskt(a)
    element_set = set(elements)
    n = len(a)
    edges = set()
    seen: dict[tuple[Tableau, int], Tableau] = {}
    tops = []
    for t in elements:
        raised = False
        for i in range(1, n):
            u = sskt_raise(t, i)
            if u is None:
                continue
            raised = True
            if u not in element_set:
                raise AssertionError("raising left the key tableau family")
            if (u, i) in seen:
                raise AssertionError("raising operator is not injective")
            seen[(u, i)] = t
            edges.add((u, i, t))
        if not raised:
            tops.append(t)
    if len(tops) != 1:
        raise AssertionError("key tableau crystal lacks a unique highest weight")
    return TableauCrystal(n=n, elements=tuple(elements),
                          edges=frozenset(edges), highest=tops[0])


def phi(d: Diagram, n: int | None = None) -> Tableau:
    """Embed a rectified diagram into SSYT by complementing row indices.

    Each cell in row r becomes entry n - r + 1 and every column is
    sorted increasingly from the bottom.  Weight-reversing: row counts
    of d reappear as entry counts in reversed order.
    """
    from .crystal import is_rectified
    if not is_rectified(d):
        raise ValueError("diagram is not rectified")
    if n is None:
        n = d.max_row
    if n < d.max_row:
        raise ValueError("n must be at least the highest occupied row")
    cols = {c: sorted(n - r + 1 for r in d.col(c))
            for c in range(1, d.max_col + 1)}
    top = max((len(v) for v in cols.values()), default=0)
    rows = []
    for k in range(1, top + 1):
        rows.append(tuple(cols[c][k - 1] for c in range(1, d.max_col + 1)
                          if len(cols[c]) >= k))
    return Tableau(tuple(rows))


def psi(t: Tableau) -> Diagram:
    """Turn a key tableau into a diagram: entry r in column c -> cell (c,r).

    Weight preserving, and intertwines the key tableau raising operator
    with the diagram raising operator.
    """
    if not is_sskt(t):
        raise ValueError("not a semistandard key tableau")
    return Diagram(frozenset((c, v) for c, _, v in t.cells()))
