"""Band-insertion expansion: grown witnesses must re-verify fault-free."""

from __future__ import annotations

import pytest

from fault_atlas import (
    ExpansionFailedError,
    Tiling,
    build_board,
    expand,
    find_fault_free,
    find_tiling,
    verify,
)
from fault_atlas.witnesses import base_cases
from fault_atlas.topology import Topology


def _witness(topo, a, b):
    outcome = find_fault_free(build_board(topo, a, b))
    assert outcome.status == "found"
    return outcome.witness


class TestExpand:
    def test_rectangle_5x6_rows_gives_7x6(self):
        grown = expand(_witness("rectangle", 5, 6), "rows")
        assert (grown.board.a, grown.board.b) == (7, 6)
        assert verify(grown.board, grown).fault_free

    def test_cylinder_4x6_cols_gives_4x8(self):
        grown = expand(_witness("cylinder", 4, 6), "cols")
        assert (grown.board.a, grown.board.b) == (4, 8)
        assert verify(grown.board, grown).fault_free

    def test_mobius_rows_crosses_the_twist(self):
        grown = expand(_witness("mobius", 4, 3), "rows")
        assert (grown.board.a, grown.board.b) == (6, 3)
        assert verify(grown.board, grown).fault_free

    def test_every_base_expands_once_per_axis(self):
        for topo in Topology:
            for case in base_cases(topo):
                for axis in ("rows", "cols"):
                    grown = expand(case.witness, axis)
                    assert verify(grown.board, grown).fault_free, (case.board, axis)

    def test_preserves_domino_count(self):
        w = _witness("torus", 4, 4)
        grown = expand(w, "cols")
        assert len(grown.dominoes) == len(w.dominoes) + w.board.a

    def test_bad_axis(self):
        with pytest.raises(ValueError):
            expand(_witness("rectangle", 5, 6), "diagonal")

    def test_input_must_be_fault_free(self):
        board = build_board("rectangle", 6, 6)
        full = find_tiling(board).witness  # valid matching, but has faults
        with pytest.raises(ValueError):
            expand(full, "rows")

    def test_isolated_1x2_cannot_expand(self):
        board = build_board("rectangle", 1, 2)
        w = find_fault_free(board).witness
        for axis in ("rows", "cols"):
            with pytest.raises(ExpansionFailedError):
                expand(w, axis)
