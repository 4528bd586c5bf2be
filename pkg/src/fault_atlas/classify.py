"""Closed-form fault-free tileability classification for all four topologies.

Families are matched in a fixed order: odd area first, then degenerate
1-wide boards, then the remaining not-tileable families, then the tileable
base-plus-even-expansion families.  Some boards satisfy several family
shapes (all with the same verdict); the first match is reported.

Tori are swap-symmetric, so torus boards are canonicalized to a >= b before
matching.  Cylinders and Moebius strips are not (4'x6 is tileable while 6'x4
is not); their rules match oriented (height, circumference) pairs exactly.

The rectangle rule is the externally known closed form -- even area with
both sides at least 5, except 6x6 -- plus the isolated 1x2 board, whose
single domino crosses the board's only fold line.  The classification is
validated against the exhaustive search oracle, not trusted from citation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .topology import BoardSpec, Topology, build_board

REASON_ODD_AREA = "odd-area"
REASON_DEGENERATE = "degenerate"
REASON_RULE = "rule-family"


@dataclass(frozen=True)
class Family:
    """One classification rule: a board-shape predicate with a fixed verdict."""

    id: str
    tileable: bool
    matches: Callable[[int, int], bool]
    base: tuple[int, int] | None = None  # minimal member of an expanding family
    rows_step: int = 0  # 0 fixed, 1 any taller, 2 even expansion
    cols_step: int = 0
    reason: str = REASON_RULE


@dataclass(frozen=True)
class Verdict:
    tileable: bool
    reason: str
    family_id: str


def _fam(fid: str, tileable: bool, pred: Callable[[int, int], bool], *,
         base: tuple[int, int] | None = None, rows_step: int = 0, cols_step: int = 0,
         reason: str = REASON_RULE) -> Family:
    return Family(fid, tileable, pred, base, rows_step, cols_step, reason)


_ODD = {
    Topology.RECTANGLE: "odd x odd",
    Topology.CYLINDER: "odd' x odd",
    Topology.TORUS: "odd' x odd'",
    Topology.MOBIUS: 'odd" x odd',
}

RECTANGLE_FAMILIES: tuple[Family, ...] = (
    _fam("1 x 2", True, lambda a, b: sorted((a, b)) == [1, 2]),
    _fam("min(a,b) <= 4", False, lambda a, b: min(a, b) <= 4),
    _fam("6 x 6", False, lambda a, b: (a, b) == (6, 6)),
    _fam("(5+2n) x (6+2m)", True, lambda a, b: a % 2 == 1 and a >= 5 and b % 2 == 0 and b >= 6,
         base=(5, 6), rows_step=2, cols_step=2),
    _fam("(6+2n) x (5+2m)", True, lambda a, b: a % 2 == 0 and a >= 6 and b % 2 == 1 and b >= 5,
         base=(6, 5), rows_step=2, cols_step=2),
    _fam("(6+2n) x (8+2m)", True, lambda a, b: a % 2 == 0 and a >= 6 and b % 2 == 0 and b >= 8,
         base=(6, 8), rows_step=2, cols_step=2),
    _fam("(8+2n) x (6+2m)", True, lambda a, b: a % 2 == 0 and a >= 8 and b % 2 == 0 and b >= 6,
         base=(8, 6), rows_step=2, cols_step=2),
)

CYLINDER_FAMILIES: tuple[Family, ...] = (
    _fam("(2n)' x 1", False, lambda a, b: b == 1, reason=REASON_DEGENERATE, rows_step=2),
    _fam("1' x (2n)", False, lambda a, b: a == 1, reason=REASON_DEGENERATE, cols_step=2),
    _fam("(2+n)' x 2", False, lambda a, b: b == 2, rows_step=1),
    _fam("2' x (2+n)", False, lambda a, b: a == 2, cols_step=1),
    _fam("(4+2n)' x 3", False, lambda a, b: b == 3 and a % 2 == 0 and a >= 4, rows_step=2),
    _fam("3' x (4+2n)", False, lambda a, b: a == 3 and b % 2 == 0 and b >= 4, cols_step=2),
    _fam("(4+n)' x 4", False, lambda a, b: b == 4 and a >= 4, rows_step=1),
    _fam("4' x (5+2n)", False, lambda a, b: a == 4 and b % 2 == 1 and b >= 5, cols_step=2),
    _fam("6' x 5", False, lambda a, b: (a, b) == (6, 5)),
    _fam("5' x 6", False, lambda a, b: (a, b) == (5, 6)),
    _fam("(4+2n)' x (6+2m)", True, lambda a, b: a % 2 == 0 and a >= 4 and b % 2 == 0 and b >= 6,
         base=(4, 6), rows_step=2, cols_step=2),
    _fam("(7+2n)' x (6+2m)", True, lambda a, b: a % 2 == 1 and a >= 7 and b % 2 == 0 and b >= 6,
         base=(7, 6), rows_step=2, cols_step=2),
    _fam("(6+2n)' x (7+2m)", True, lambda a, b: a % 2 == 0 and a >= 6 and b % 2 == 1 and b >= 7,
         base=(6, 7), rows_step=2, cols_step=2),
    _fam("(8+2n)' x (5+2m)", True, lambda a, b: a % 2 == 0 and a >= 8 and b % 2 == 1 and b >= 5,
         base=(8, 5), rows_step=2, cols_step=2),
    _fam("(5+2n)' x (8+2m)", True, lambda a, b: a % 2 == 1 and a >= 5 and b % 2 == 0 and b >= 8,
         base=(5, 8), rows_step=2, cols_step=2),
)

TORUS_FAMILIES: tuple[Family, ...] = (
    _fam("(2n)' x 1'", False, lambda a, b: b == 1, reason=REASON_DEGENERATE, rows_step=2),
    _fam("(2+n)' x 2'", False, lambda a, b: b == 2, rows_step=1),
    _fam("(4+2n)' x 3'", False, lambda a, b: b == 3 and a % 2 == 0 and a >= 4, rows_step=2),
    _fam("(5+2n)' x 4'", False, lambda a, b: b == 4 and a % 2 == 1 and a >= 5, rows_step=2),
    _fam("6' x 5'", False, lambda a, b: (a, b) == (6, 5)),
    _fam("8' x 5'", False, lambda a, b: (a, b) == (8, 5)),
    _fam("7' x 6'", False, lambda a, b: (a, b) == (7, 6)),
    _fam("(4+2n)' x (4+2m)'", True, lambda a, b: a % 2 == 0 and a >= 4 and b % 2 == 0 and b >= 4,
         base=(4, 4), rows_step=2, cols_step=2),
    _fam("(8+2n)' x (7+2m)'", True, lambda a, b: a % 2 == 0 and a >= 8 and b % 2 == 1 and b >= 7,
         base=(8, 7), rows_step=2, cols_step=2),
    _fam("(9+2n)' x (6+2m)'", True, lambda a, b: a % 2 == 1 and a >= 9 and b % 2 == 0 and b >= 6,
         base=(9, 6), rows_step=2, cols_step=2),
    _fam("(10+2n)' x (5+2m)'", True, lambda a, b: a % 2 == 0 and a >= 10 and b % 2 == 1 and b >= 5,
         base=(10, 5), rows_step=2, cols_step=2),
)

MOBIUS_FAMILIES: tuple[Family, ...] = (
    _fam('(2n)" x 1', False, lambda a, b: b == 1, reason=REASON_DEGENERATE, rows_step=2),
    _fam('1" x (2n)', False, lambda a, b: a == 1, reason=REASON_DEGENERATE, cols_step=2),
    _fam('(1+2n)" x 2', False, lambda a, b: b == 2 and a % 2 == 1, rows_step=2),
    _fam('(2n)" x 2', False, lambda a, b: b == 2 and a % 2 == 0, rows_step=2),
    _fam('2" x (2+n)', False, lambda a, b: a == 2, cols_step=1),
    _fam('3" x (4+2n)', False, lambda a, b: a == 3 and b % 2 == 0 and b >= 4, cols_step=2),
    _fam('4" x (4+2n)', False, lambda a, b: a == 4 and b % 2 == 0 and b >= 4, cols_step=2),
    _fam('6" x 4', False, lambda a, b: (a, b) == (6, 4)),
    _fam('(4+2n)" x (3+2m)', True, lambda a, b: a % 2 == 0 and a >= 4 and b % 2 == 1 and b >= 3,
         base=(4, 3), rows_step=2, cols_step=2),
    _fam('(5+2n)" x (4+2m)', True, lambda a, b: a % 2 == 1 and a >= 5 and b % 2 == 0 and b >= 4,
         base=(5, 4), rows_step=2, cols_step=2),
    _fam('(4+2n)" x (5+2m)', True, lambda a, b: a % 2 == 0 and a >= 4 and b % 2 == 1 and b >= 5,
         base=(4, 5), rows_step=2, cols_step=2),
    _fam('(6+2n)" x (6+2m)', True, lambda a, b: a % 2 == 0 and a >= 6 and b % 2 == 0 and b >= 6,
         base=(6, 6), rows_step=2, cols_step=2),
    _fam('(8+2n)" x (4+2m)', True, lambda a, b: a % 2 == 0 and a >= 8 and b % 2 == 0 and b >= 4,
         base=(8, 4), rows_step=2, cols_step=2),
)

FAMILIES: dict[Topology, tuple[Family, ...]] = {
    Topology.RECTANGLE: RECTANGLE_FAMILIES,
    Topology.CYLINDER: CYLINDER_FAMILIES,
    Topology.TORUS: TORUS_FAMILIES,
    Topology.MOBIUS: MOBIUS_FAMILIES,
}


def canonical_dims(board: BoardSpec) -> tuple[int, int]:
    """Torus boards are the same board rotated; match with a >= b."""
    if board.topology is Topology.TORUS and board.a < board.b:
        return board.b, board.a
    return board.a, board.b


def classify(board: BoardSpec) -> Verdict:
    """Fault-free tileability verdict with the matched family."""
    a, b = canonical_dims(board)
    if (a * b) % 2:
        return Verdict(False, REASON_ODD_AREA, _ODD[board.topology])
    for fam in FAMILIES[board.topology]:
        if fam.matches(a, b):
            return Verdict(fam.tileable, fam.reason, fam.id)
    raise AssertionError(f"no family matches {board}")  # totality is an invariant


def matching_tileable_families(board: BoardSpec) -> list[tuple[Family, int, int]]:
    """All tileable families containing the board, with (family, n, m) offsets."""
    a, b = canonical_dims(board)
    out = []
    for fam in FAMILIES[board.topology]:
        if fam.tileable and fam.matches(a, b) and fam.base is not None:
            n = (a - fam.base[0]) // 2
            m = (b - fam.base[1]) // 2
            out.append((fam, n, m))
    return out


def base_boards(topology: Topology) -> list[BoardSpec]:
    """The minimal member of each expanding tileable family."""
    out = []
    for fam in FAMILIES[topology]:
        if fam.tileable and fam.base is not None:
            out.append(build_board(topology, *fam.base))
    return out
