"""Hand-checked data for one worked example used across the test suite.

The running example is the five-cell southwest diagram with cells
(1,2), (2,2), (3,2), (1,3), (3,4).  Its move closure has 19 members,
enumerated here with letters A..S; the move edges, the crystal raising
edges, the rectified image of each member, and the two crystal
components were all worked out by hand on graph paper and frozen.
"""

from kohnert.diagrams import Diagram


def from_row_cols(rows):
    """Build a diagram from {row: iterable of occupied columns}."""
    return Diagram.of(*((c, r) for r, cols in rows.items() for c in cols))


def _decode(table):
    return {
        key: from_row_cols({4: r4, 3: r3, 2: r2, 1: r1})
        for key, (r4, r3, r2, r1) in table.items()
    }


# occupied columns in rows 4, 3, 2, 1 for each closure member
MEMBERS = _decode({
    "A": ({3}, {1}, {1, 2, 3}, ()),
    "B": ((), {1, 3}, {1, 2, 3}, ()),
    "C": ({3}, (), {1, 2, 3}, {1}),
    "D": ({3}, {1}, {1, 2}, {3}),
    "E": ((), {1, 3}, {1, 2}, {3}),
    "F": ((), {3}, {1, 2, 3}, {1}),
    "G": ({3}, (), {1, 2}, {1, 3}),
    "H": ({3}, {1}, {1}, {2, 3}),
    "I": ((), {1, 3}, {1}, {2, 3}),
    "J": ((), {1}, {1, 2, 3}, {3}),
    "K": ((), {3}, {1, 2}, {1, 3}),
    "L": ({3}, {1}, (), {1, 2, 3}),
    "M": ((), {1, 3}, (), {1, 2, 3}),
    "N": ((), {1}, {1, 3}, {2, 3}),
    "O": ((), (), {1, 2, 3}, {1, 3}),
    "P": ({3}, (), {1}, {1, 2, 3}),
    "Q": ((), {1}, {3}, {1, 2, 3}),
    "R": ((), {3}, {1}, {1, 2, 3}),
    "S": ((), (), {1, 3}, {1, 2, 3}),
})

D5 = MEMBERS["A"]

LETTER = {d: k for k, d in MEMBERS.items()}

# undirected move edges between members, as letter pairs
MOVE_EDGES = frozenset(
    frozenset(pair)
    for pair in (
        "AB AC AD BE BJ CF CG DE DG DH EI EJ FO FK GK GP HI HP HL IM IN "
        "JO KO KR LM LP MQ NS PR QS RS"
    ).split()
)

# all triples (x, i, y) with raising(x, i) == y; every other pair gives None
RAISING_EDGES = (
    ("A", 1, "D"),
    ("D", 1, "H"),
    ("H", 1, "L"),
    ("C", 1, "G"),
    ("G", 1, "P"),
    ("F", 1, "K"),
    ("K", 1, "R"),
    ("B", 1, "E"),
    ("E", 1, "I"),
    ("I", 1, "M"),
    ("J", 1, "N"),
    ("N", 1, "Q"),
    ("O", 1, "S"),
    ("L", 2, "P"),
    ("I", 2, "N"),
    ("M", 2, "Q"),
    ("Q", 2, "S"),
    ("C", 3, "F"),
    ("G", 3, "K"),
    ("P", 3, "R"),
)

# rectified image of each member, same encoding as MEMBERS
RECTIFIED = _decode({
    "A": ({1}, {1}, {1, 2, 3}, ()),
    "B": ((), {1, 2}, {1, 2, 3}, ()),
    "C": ({1}, (), {1, 2, 3}, {1}),
    "D": ({1}, {1}, {1, 2}, {3}),
    "E": ((), {1, 2}, {1, 2}, {3}),
    "F": ((), {1}, {1, 2, 3}, {1}),
    "G": ({1}, (), {1, 2}, {1, 3}),
    "H": ({1}, {1}, {1}, {2, 3}),
    "I": ((), {1, 2}, {1}, {2, 3}),
    "J": ((), {1}, {1, 2, 3}, {2}),
    "K": ((), {1}, {1, 2}, {1, 3}),
    "L": ({1}, {1}, (), {1, 2, 3}),
    "M": ((), {1, 2}, (), {1, 2, 3}),
    "N": ((), {1}, {1, 2}, {2, 3}),
    "O": ((), (), {1, 2, 3}, {1, 2}),
    "P": ({1}, (), {1}, {1, 2, 3}),
    "Q": ((), {1}, {2}, {1, 2, 3}),
    "R": ((), {1}, {1}, {1, 2, 3}),
    "S": ((), (), {1, 2}, {1, 2, 3}),
})

# the two crystal components, smaller first
COMPONENT_SMALL = frozenset("BEIJMNOQS")
COMPONENT_LARGE = frozenset("ACDFGHKLPR")
