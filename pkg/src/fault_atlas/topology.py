"""Boards, domino placements, and fault curves on four grid topologies.

A board is an a x b grid of unit cells, 0-indexed with row 0 at the top.
Cylinders glue the two vertical edges (the seam, vertical line 0), tori glue
both edge pairs, and Moebius strips glue the vertical edges with a half twist
so that (r, b-1) meets (a-1-r, 0).

Every domino is identified by the unit grid segment interior to it -- its
crossing edge.  Identifying placements by edges rather than cell pairs keeps
parallel placements distinct on small wrapped boards (e.g. a cylinder of
circumference 2 joins each horizontal cell pair twice: once through the seam
and once through the internal line).

A fault curve is a fold locus: a maximal set of grid lines along which the
board could be folded.  On a Moebius strip a horizontal fold at line l
continues across the twist as line a-l, so those two lines form one curve;
the middle line of an even-height strip closes onto itself.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidDimensionError

Cell = tuple[int, int]


class Topology(str, enum.Enum):
    RECTANGLE = "rectangle"
    CYLINDER = "cylinder"
    TORUS = "torus"
    MOBIUS = "mobius"

    @property
    def wraps_cols(self) -> bool:
        """True when the column (circumference) direction is glued."""
        return self is not Topology.RECTANGLE

    @property
    def wraps_rows(self) -> bool:
        """True when the row direction is glued (torus only)."""
        return self is Topology.TORUS

    @property
    def twisted(self) -> bool:
        return self is Topology.MOBIUS


@dataclass(frozen=True)
class BoardSpec:
    """A board: topology plus height a (rows) and width b (columns)."""

    topology: Topology
    a: int
    b: int

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise InvalidDimensionError(f"dimensions must be integers, got {self.a!r} x {self.b!r}")
        if self.a < 1 or self.b < 1:
            raise InvalidDimensionError(f"dimensions must be >= 1, got {self.a} x {self.b}")

    @property
    def area(self) -> int:
        return self.a * self.b

    @property
    def capacity(self) -> int:
        """Dominoes in any complete tiling; defined only for even area."""
        if self.area % 2:
            raise ValueError(f"capacity undefined for odd area {self.a}x{self.b}")
        return self.area // 2

    def cells(self) -> Iterator[Cell]:
        for r in range(self.a):
            for c in range(self.b):
                yield (r, c)

    def cell_index(self, cell: Cell) -> int:
        r, c = cell
        return r * self.b + c

    def __str__(self) -> str:
        mark = {"rectangle": "", "cylinder": "'", "torus": "'", "mobius": '"'}[self.topology.value]
        tail = "'" if self.topology is Topology.TORUS else ""
        return f"{self.topology.value} {self.a}{mark}x{self.b}{tail}"


@dataclass(frozen=True, order=True)
class CrossingEdge:
    """The unit grid segment interior to one domino.

    axis "h": a segment of horizontal line `line` (1..a-1 internal; 0 is the
    glued row edge on a torus) at column `offset`; crossed by a vertical
    domino.  axis "v": a segment of vertical line `line` (1..b-1 internal;
    0 is the seam on wrapped topologies) at row `offset`; crossed by a
    horizontal domino.
    """

    axis: str
    line: int
    offset: int

    def key(self) -> tuple[str, int, int]:
        return (self.axis, self.line, self.offset)


@dataclass(frozen=True)
class Placement:
    """One domino: its crossing edge plus the two cells it covers."""

    edge: CrossingEdge
    cells: tuple[Cell, Cell]

    @property
    def is_wrap(self) -> bool:
        return self.edge.line == 0


@dataclass(frozen=True)
class FaultCurve:
    """A fold locus: the grid lines it consists of and their crossing edges."""

    id: int
    axis: str  # "horizontal" | "vertical"
    lines: frozenset[int]
    crossing_edges: frozenset[CrossingEdge]

    @property
    def cap(self) -> int:
        return len(self.crossing_edges)


def build_board(topology: Topology | str, a: int, b: int) -> BoardSpec:
    """Construct a validated board; raises InvalidDimensionError on bad dims."""
    return BoardSpec(Topology(topology), a, b)


def cell_color(board: BoardSpec, cell: Cell) -> int:
    """Checkerboard color of a cell: (r + c) mod 2."""
    r, c = cell
    if not (0 <= r < board.a and 0 <= c < board.b):
        raise ValueError(f"cell {cell} outside board {board}")
    return (r + c) % 2


def _seam_cells(board: BoardSpec, r: int) -> tuple[Cell, Cell] | None:
    """Cells joined by the seam segment at offset r, or None if degenerate."""
    a, b = board.a, board.b
    if board.topology is Topology.MOBIUS:
        r2 = a - 1 - r
        if b == 1:
            if r >= r2:  # offsets r and a-1-r name the same glued segment
                return None
            return ((r, 0), (r2, 0))
        return ((r, b - 1), (r2, 0))
    if b == 1:  # cylinder/torus wrap would join a cell to itself
        return None
    return ((r, b - 1), (r, 0))


@functools.lru_cache(maxsize=None)
def _edge_table(board: BoardSpec) -> tuple[Placement, ...]:
    """All placements of the board, in canonical (axis, line, offset) order."""
    a, b, topo = board.a, board.b, board.topology
    out: list[Placement] = []
    h_lines = range(a) if topo is Topology.TORUS else range(1, a)
    for line in h_lines:
        upper = (line - 1) % a
        lower = line % a
        if upper == lower:  # torus with a == 1
            continue
        for c in range(b):
            out.append(Placement(CrossingEdge("h", line, c), ((upper, c), (lower, c))))
    for line in range(1, b):
        for r in range(a):
            out.append(Placement(CrossingEdge("v", line, r), ((r, line - 1), (r, line))))
    if topo.wraps_cols:
        for r in range(a):
            joined = _seam_cells(board, r)
            if joined is not None:
                out.append(Placement(CrossingEdge("v", 0, r), joined))
    out.sort(key=lambda p: p.edge.key())
    return tuple(out)


def placements(board: BoardSpec) -> tuple[Placement, ...]:
    """Every domino placement on the board, one per distinct crossing edge."""
    return _edge_table(board)


@functools.lru_cache(maxsize=None)
def placement_index(board: BoardSpec) -> dict[tuple[str, int, int], Placement]:
    return {p.edge.key(): p for p in _edge_table(board)}


def _horizontal_curve_keys(board: BoardSpec) -> list[frozenset[int]]:
    a, topo = board.a, board.topology
    if topo is Topology.TORUS:
        return [frozenset({line}) for line in range(a)]
    if topo is Topology.MOBIUS:
        keys = []
        for line in range(1, a):
            pair = frozenset({line, a - line})
            if pair not in keys:
                keys.append(pair)
        return keys
    return [frozenset({line}) for line in range(1, a)]


@functools.lru_cache(maxsize=None)
def fault_curves(board: BoardSpec) -> tuple[FaultCurve, ...]:
    """All fold loci with their crossing-edge sets (possibly empty)."""
    by_key: dict[tuple[str, frozenset[int]], list[CrossingEdge]] = {}
    for key in _horizontal_curve_keys(board):
        by_key[("horizontal", key)] = []
    v_lines = range(board.b) if board.topology.wraps_cols else range(1, board.b)
    for line in v_lines:
        by_key[("vertical", frozenset({line}))] = []
    for plc in _edge_table(board):
        edge = plc.edge
        if edge.axis == "h":
            if board.topology is Topology.MOBIUS:
                key = ("horizontal", frozenset({edge.line, board.a - edge.line}))
            else:
                key = ("horizontal", frozenset({edge.line}))
        else:
            key = ("vertical", frozenset({edge.line}))
        by_key[key].append(edge)

    def order(item: tuple[tuple[str, frozenset[int]], list[CrossingEdge]]) -> tuple[int, int]:
        (axis, lines), _ = item
        return (0 if axis == "horizontal" else 1, min(lines))

    curves = []
    for cid, ((axis, lines), edges) in enumerate(sorted(by_key.items(), key=order)):
        curves.append(FaultCurve(cid, axis, lines, frozenset(edges)))
    return tuple(curves)


@functools.lru_cache(maxsize=None)
def curve_index(board: BoardSpec) -> dict[tuple[str, int, int], int]:
    """Map each crossing edge key to the id of its (unique) fault curve."""
    out: dict[tuple[str, int, int], int] = {}
    for curve in fault_curves(board):
        for edge in curve.crossing_edges:
            out[edge.key()] = curve.id
    return out


def curve_of(board: BoardSpec, edge: CrossingEdge) -> FaultCurve:
    return fault_curves(board)[curve_index(board)[edge.key()]]
