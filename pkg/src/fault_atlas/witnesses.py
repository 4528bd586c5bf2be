"""Witness construction: base cases, expansion chains, search fallback, cache.

Order of attack for a tileable board: exact base match (searched directly),
then the shortest expansion chain from the nearest family base, then a
budgeted direct search.  Every returned tiling has been re-verified.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .classify import classify, matching_tileable_families
from .errors import ExpansionFailedError, WitnessUnavailableError
from .expansion import COLS, ROWS, expand
from .search import SearchBudget, find_fault_free
from .tiling import Tiling, decode_for_board, encode, verify, tiling_from_edges
from .topology import BoardSpec, Topology, build_board

CACHE_ENV = "FAULT_ATLAS_CACHE"

_FALLBACK_BUDGET = SearchBudget(max_nodes=20_000_000)


class WitnessStore:
    """One JSON witness file per board in a configurable directory."""

    def __init__(self, directory: "str | Path") -> None:
        self.directory = Path(directory)

    def path_for(self, board: BoardSpec) -> Path:
        return self.directory / f"{board.topology.value}_{board.a}x{board.b}.json"

    def load(self, board: BoardSpec) -> Tiling | None:
        path = self.path_for(board)
        if not path.exists():
            return None
        tiling = decode_for_board(path.read_text(encoding="utf-8"), board)
        if not verify(board, tiling).fault_free:
            return None  # stale or tampered cache entry; rebuild
        return tiling

    def save(self, tiling: Tiling) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path_for(tiling.board)
        path.write_text(encode(tiling), encoding="utf-8")
        return path


def default_store(explicit: "str | Path | None" = None) -> WitnessStore | None:
    """Resolve the cache directory: FAULT_ATLAS_CACHE overrides any explicit dir."""
    env = os.environ.get(CACHE_ENV)
    if env:
        return WitnessStore(env)
    if explicit is not None:
        return WitnessStore(explicit)
    return None


@dataclass(frozen=True)
class BaseCase:
    board: BoardSpec
    witness: Tiling


_base_cache: dict[BoardSpec, Tiling] = {}


def _base_witness(board: BoardSpec) -> Tiling:
    got = _base_cache.get(board)
    if got is None:
        outcome = find_fault_free(board)
        assert outcome.status == "found", f"base case {board} must be tileable"
        got = outcome.witness
        _base_cache[board] = got
    return got


def base_cases(topology: Topology) -> list[BaseCase]:
    """Each expanding tileable family's minimal board with a verified witness."""
    from .classify import base_boards

    return [BaseCase(b, _base_witness(b)) for b in base_boards(topology)]


def _transpose(tiling: Tiling) -> Tiling:
    """Swap rows and columns of a torus tiling (tori are swap-symmetric)."""
    board = tiling.board
    assert board.topology is Topology.TORUS
    flipped = build_board(Topology.TORUS, board.b, board.a)
    edges = []
    for p in tiling.dominoes:
        axis, line, off = p.edge.key()
        edges.append(("v" if axis == "h" else "h", line, off))
    return tiling_from_edges(flipped, edges)


def _expansion_chain(board: BoardSpec) -> Tiling | None:
    """Grow a witness from the nearest family base; None if every path fails."""
    a, b = board.a, board.b
    swapped = board.topology is Topology.TORUS and a < b
    if swapped:
        a, b = b, a
    options = sorted(matching_tileable_families(board), key=lambda t: (t[1] + t[2], t[0].id))
    for fam, n, m in options:
        base = build_board(board.topology, *fam.base)
        current = _base_witness(base)
        try:
            for _ in range(n):
                current = expand(current, ROWS)
            for _ in range(m):
                current = expand(current, COLS)
        except ExpansionFailedError:
            continue
        if swapped:
            current = _transpose(current)
        assert current.board == board
        return current
    return None


def witness(board: BoardSpec, *, store: WitnessStore | None = None,
            budget: SearchBudget | None = None) -> Tiling:
    """A verified fault-free tiling for a board classified tileable.

    Raises ValueError for boards that are not fault-free tileable and
    WitnessUnavailableError when the fallback search budget runs out
    (which is not a negative verdict).
    """
    verdict = classify(board)
    if not verdict.tileable:
        raise ValueError(f"{board} is not fault-free tileable ({verdict.family_id})")
    if store is not None:
        cached = store.load(board)
        if cached is not None:
            return cached
    result = _expansion_chain(board)
    if result is None:
        outcome = find_fault_free(board, budget or _FALLBACK_BUDGET)
        if outcome.status == "found":
            result = outcome.witness
        elif outcome.status == "inconclusive":
            raise WitnessUnavailableError(f"search budget exhausted on {board}")
        else:
            raise AssertionError(f"classify says tileable but search exhausted {board}")
    report = verify(board, result)
    assert report.fault_free
    if store is not None:
        store.save(result)
    return result
