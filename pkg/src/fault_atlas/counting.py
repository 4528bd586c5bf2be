"""Counting impossibility arguments: parity-forced minimum crossing profiles.

Every complete tiling induces a crossing profile: per horizontal line the
number of vertical dominoes crossing it (x), per internal vertical line the
number of horizontal dominoes crossing it (y), the seam crossings (s), and on
a Moebius strip the wrap count per row pair (u, with s = sum(u)).  Counting
the cells of each row and column modulo 2 forces linear relations on these
quantities over GF(2); covering every fault curve forces per-curve sums >= 1;
caps bound each variable by its number of crossing edges; on a Moebius strip
with both sides even, wrap tiles cover same-colored cells so color balance
forces s to be even.

A board is counting-feasible when some parity class of the GF(2) solution
set can realize a total of exactly a*b/2 under those constraints (totals
within a class move in steps of 2).  Infeasible is a sound verdict: the
board is not fault-free tileable.  Feasible proves nothing by itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ParitySpaceTooLargeError
from .tiling import Tiling
from .topology import BoardSpec, Topology, fault_curves

PARITY_CLASS_GUARD = 1 << 16

STATUS_OK = "ok"
STATUS_TOO_LARGE = "parity-space-too-large"
STATUS_ODD_AREA = "odd-area"


@dataclass(frozen=True)
class Variable:
    kind: str  # "x" | "y" | "s" | "u"
    key: object  # line index for x/y, None for s, frozenset row pair for u
    cap: int

    @property
    def name(self) -> str:
        if self.kind == "u":
            return f"u{sorted(self.key)}"
        if self.kind == "s":
            return "s"
        return f"{self.kind}[{self.key}]"


@dataclass(frozen=True)
class ParitySystem:
    """GF(2) equations, coverage groups, and caps over a board's profile."""

    board: BoardSpec
    variables: tuple[Variable, ...]
    equations: tuple[tuple[int, int], ...]  # (variable bitmask, rhs bit)
    coverage_groups: tuple[tuple[int, ...], ...]  # variable indices per fault curve

    def var_index(self) -> dict[tuple[str, object], int]:
        return {(v.kind, v.key): i for i, v in enumerate(self.variables)}

    def parity_classes(self) -> Iterator[tuple[int, ...]]:
        """Yield every parity assignment satisfying the GF(2) equations."""
        solved = _solve_gf2(self.equations, len(self.variables))
        if solved is None:
            return
        particular, kernel = solved
        if (1 << len(kernel)) > PARITY_CLASS_GUARD:
            raise ParitySpaceTooLargeError(
                f"{len(kernel)} free variables exceed the {PARITY_CLASS_GUARD} class guard"
            )
        n = len(self.variables)
        for pick in range(1 << len(kernel)):
            vec = particular
            rest = pick
            k = 0
            while rest:
                if rest & 1:
                    vec ^= kernel[k]
                rest >>= 1
                k += 1
            yield tuple((vec >> i) & 1 for i in range(n))

    def check_values(self, values: dict[tuple[str, object], int]) -> list[str]:
        """Evaluate all constraints on integer profile values; returns violations."""
        idx = self.var_index()
        vec = [0] * len(self.variables)
        for key, val in values.items():
            if key not in idx:
                return [f"unknown variable {key}"]
            vec[idx[key]] = val
        out = []
        for i, var in enumerate(self.variables):
            if not 0 <= vec[i] <= var.cap:
                out.append(f"{var.name} = {vec[i]} outside [0, {var.cap}]")
        for mask, rhs in self.equations:
            acc = 0
            m = mask
            i = 0
            while m:
                if m & 1:
                    acc ^= vec[i] & 1
                m >>= 1
                i += 1
            if acc != rhs:
                out.append(f"parity equation violated (mask {mask:#x}, rhs {rhs})")
        for group in self.coverage_groups:
            if sum(vec[i] for i in group) < 1:
                names = ", ".join(self.variables[i].name for i in group)
                out.append(f"fault curve uncovered ({names})")
        total = sum(vec)
        if self.board.area % 2 == 0 and total != self.board.capacity:
            out.append(f"total {total} != capacity {self.board.capacity}")
        return out


@dataclass(frozen=True)
class CrossingProfile:
    x: dict[int, int]
    y: dict[int, int]
    u: dict[frozenset, int]
    s: int

    def as_values(self, board: BoardSpec) -> dict[tuple[str, object], int]:
        values: dict[tuple[str, object], int] = {}
        values.update({("x", line): n for line, n in self.x.items()})
        values.update({("y", line): n for line, n in self.y.items()})
        if board.topology is Topology.MOBIUS:
            values.update({("u", pair): n for pair, n in self.u.items()})
        elif board.topology.wraps_cols:
            values[("s", None)] = self.s
        return values


@dataclass(frozen=True)
class FeasibilityReport:
    min_required: int | None
    feasible: bool | None  # None when the parity space exceeded the guard
    parity_classes_examined: int
    reachable: tuple[tuple[int, int], ...]  # (min, max) per admissible class, step 2
    capacity: int | None
    status: str = STATUS_OK


def _mobius_pairs(a: int) -> list[frozenset]:
    pairs = []
    for r in range(a):
        r2 = a - 1 - r
        if r <= r2:
            pairs.append(frozenset({r, r2}))
    return pairs


def build_parity_system(board: BoardSpec) -> ParitySystem:
    """Emit the GF(2) row/column/color equations with coverage and caps."""
    a, b, topo = board.a, board.b, board.topology
    variables: list[Variable] = []
    index: dict[tuple[str, object], int] = {}

    def add(kind: str, key: object, cap: int) -> int:
        index[(kind, key)] = len(variables)
        variables.append(Variable(kind, key, cap))
        return len(variables) - 1

    h_lines = range(a) if topo is Topology.TORUS else range(1, a)
    for line in h_lines:
        cap = 0 if (topo is Topology.TORUS and a == 1) else b
        add("x", line, cap)
    for line in range(1, b):
        add("y", line, a)
    if topo in (Topology.CYLINDER, Topology.TORUS):
        add("s", None, a if b >= 2 else 0)
    u_vars: list[int] = []
    if topo is Topology.MOBIUS:
        for pair in _mobius_pairs(a):
            if len(pair) == 2:
                cap = 2 if b >= 2 else 1
            else:
                cap = 1 if b >= 2 else 0
            u_vars.append(add("u", pair, cap))

    equations: list[tuple[int, int]] = []

    def x_bit(line: int) -> int:
        if topo is Topology.TORUS:
            return 1 << index[("x", line % a)]
        if 1 <= line <= a - 1:
            return 1 << index[("x", line)]
        return 0  # board boundary: no line, forced zero

    for r in range(a):
        mask = x_bit(r) ^ x_bit(r + 1)
        if topo is Topology.MOBIUS and r != a - 1 - r:
            mask ^= 1 << index[("u", frozenset({r, a - 1 - r}))]
        equations.append((mask, b & 1))

    def col_side(line: int) -> int:
        if 1 <= line <= b - 1:
            return 1 << index[("y", line)]
        if topo is Topology.RECTANGLE:
            return 0
        if topo is Topology.MOBIUS:
            mask = 0
            for i in u_vars:
                mask ^= 1 << i
            return mask
        return 1 << index[("s", None)]

    for c in range(b):
        # b == 1 cancels naturally: both sides of the column are the seam,
        # so every wrap tile contributes two cells and the terms XOR away.
        equations.append((col_side(c) ^ col_side(c + 1), a & 1))

    if topo is Topology.MOBIUS and a % 2 == 0 and b % 2 == 0:
        mask = 0
        for i in u_vars:
            mask ^= 1 << i
        equations.append((mask, 0))

    groups: list[tuple[int, ...]] = []
    for curve in fault_curves(board):
        if curve.axis == "horizontal":
            groups.append(tuple(index[("x", line)] for line in sorted(curve.lines)))
        elif curve.lines == {0}:
            if topo is Topology.MOBIUS:
                groups.append(tuple(u_vars))
            else:
                groups.append((index[("s", None)],))
        else:
            groups.append(tuple(index[("y", line)] for line in sorted(curve.lines)))
    return ParitySystem(board, tuple(variables), tuple(equations), tuple(groups))


def _solve_gf2(equations: tuple[tuple[int, int], ...], n_vars: int):
    """Row-reduce; returns (particular solution bitmask, kernel basis) or None."""
    rows = [(mask, rhs) for mask, rhs in equations]
    pivots: list[tuple[int, int, int]] = []  # (pivot col, mask, rhs)
    for mask, rhs in rows:
        for col, pmask, prhs in pivots:
            if (mask >> col) & 1:
                mask ^= pmask
                rhs ^= prhs
        if mask == 0:
            if rhs:
                return None
            continue
        col = (mask & -mask).bit_length() - 1
        for i, (pcol, pmask, prhs) in enumerate(pivots):
            if (pmask >> col) & 1:
                pivots[i] = (pcol, pmask ^ mask, prhs ^ rhs)
        pivots.append((col, mask, rhs))
    pivot_cols = {col for col, _, _ in pivots}
    particular = 0
    for col, mask, rhs in pivots:
        if rhs:
            particular |= 1 << col
    kernel = []
    for free in range(n_vars):
        if free in pivot_cols:
            continue
        vec = 1 << free
        for col, mask, _rhs in pivots:
            if (mask >> free) & 1:
                vec |= 1 << col
        kernel.append(vec)
    return particular, kernel


def _class_stats(system: ParitySystem, parities: tuple[int, ...]) -> tuple[int, int] | None:
    """(min total, max total) for one parity class, or None if inadmissible."""
    vmin = []
    vmax = []
    for var, p in zip(system.variables, parities):
        if p > var.cap:
            return None
        vmin.append(p)
        vmax.append(var.cap - ((var.cap - p) % 2))
    total_min = sum(vmin)
    for group in system.coverage_groups:
        if sum(vmin[i] for i in group) == 0:
            if any(vmax[i] >= 2 for i in group):
                total_min += 2
            else:
                return None
    return total_min, sum(vmax)


def counting_feasible(board: BoardSpec) -> FeasibilityReport:
    """Decide whether any admissible profile can total exactly a*b/2."""
    if board.area % 2:
        return FeasibilityReport(None, False, 0, (), None, STATUS_ODD_AREA)
    system = build_parity_system(board)
    capacity = board.capacity
    reachable: list[tuple[int, int]] = []
    examined = 0
    feasible = False
    best: int | None = None
    try:
        for parities in system.parity_classes():
            examined += 1
            stats = _class_stats(system, parities)
            if stats is None:
                continue
            lo, hi = stats
            reachable.append((lo, hi))
            if best is None or lo < best:
                best = lo
            if lo <= capacity <= hi and (capacity - lo) % 2 == 0:
                feasible = True
    except ParitySpaceTooLargeError:
        return FeasibilityReport(None, None, examined, (), capacity, STATUS_TOO_LARGE)
    reachable.sort()
    return FeasibilityReport(best, feasible, examined, tuple(reachable), capacity)


def min_required_tiles(board: BoardSpec) -> int | None:
    """Minimum tiles to cover all fault curves under parity and caps.

    The exact-sum condition is excluded.  None means no parity class admits
    any assignment at all (some curve can never be crossed).  Raises
    ParitySpaceTooLargeError past the enumeration guard.
    """
    if board.area % 2:
        raise ValueError(f"min_required_tiles needs even area, got {board.a}x{board.b}")
    system = build_parity_system(board)
    best: int | None = None
    for parities in system.parity_classes():
        stats = _class_stats(system, parities)
        if stats is None:
            continue
        if best is None or stats[0] < best:
            best = stats[0]
    return best


def profile_of(board: BoardSpec, tiling: Tiling) -> CrossingProfile:
    """Crossing counts per line / seam / wrap pair for a tiling."""
    x: dict[int, int] = {}
    y: dict[int, int] = {}
    u: dict[frozenset, int] = {}
    a, topo = board.a, board.topology
    h_lines = range(a) if topo is Topology.TORUS else range(1, a)
    for line in h_lines:
        x[line] = 0
    for line in range(1, board.b):
        y[line] = 0
    if topo is Topology.MOBIUS:
        for pair in _mobius_pairs(a):
            u[pair] = 0
    s = 0
    for plc in tiling.dominoes:
        edge = plc.edge
        if edge.axis == "h":
            x[edge.line] += 1
        elif edge.line == 0:
            s += 1
            if topo is Topology.MOBIUS:
                u[frozenset({edge.offset, a - 1 - edge.offset})] += 1
        else:
            y[edge.line] += 1
    return CrossingProfile(x, y, u, s)


def check_profile(board: BoardSpec, profile: CrossingProfile) -> list[str]:
    """All violated necessity constraints (including exact sum); [] if none."""
    system = build_parity_system(board)
    return system.check_values(profile.as_values(board))
