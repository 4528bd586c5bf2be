"""Verification reports and the witness document format."""

from __future__ import annotations

import json

import pytest

from fault_atlas import (
    InvalidWitnessError,
    Tiling,
    WitnessDecodeError,
    build_board,
    decode,
    decode_for_board,
    encode,
    fault_curves,
    find_fault_free,
    find_tiling,
    verify,
)
from fault_atlas.tiling import tiling_from_edges


class TestVerify:
    def test_two_horizontal_dominoes_leave_center_fold(self):
        board = build_board("rectangle", 2, 2)
        tiling = tiling_from_edges(board, [("v", 1, 0), ("v", 1, 1)])
        report = verify(board, tiling)
        assert report.matching_valid
        uncrossed = [fault_curves(board)[cid] for cid in report.uncrossed_curves]
        assert [(c.axis, sorted(c.lines)) for c in uncrossed] == [("horizontal", [1])]
        assert not report.fault_free

    def test_5x6_search_witness_is_fault_free(self, witness_5x6):
        report = verify(witness_5x6.board, witness_5x6)
        assert report.fault_free

    def test_any_complete_6x6_tiling_has_a_fault(self):
        board = build_board("rectangle", 6, 6)
        outcome = find_tiling(board)
        assert outcome.status == "found"
        report = verify(board, outcome.witness)
        assert report.matching_valid and not report.fault_free

    def test_foreign_placement_rejected(self, witness_5x6):
        other = build_board("rectangle", 5, 8)
        with pytest.raises(InvalidWitnessError):
            verify(other, witness_5x6)

    def test_incomplete_tiling_reports_uncovered(self):
        board = build_board("rectangle", 2, 2)
        tiling = tiling_from_edges(board, [("v", 1, 0)])
        report = verify(board, tiling)
        assert not report.matching_valid
        assert report.uncovered_cells == ((1, 0), (1, 1))
        assert not report.fault_free

    def test_crossing_counts_sum_to_capacity(self):
        for topo, a, b in [("rectangle", 5, 6), ("cylinder", 4, 6),
                           ("torus", 4, 4), ("mobius", 4, 3), ("mobius", 5, 4)]:
            board = build_board(topo, a, b)
            w = find_fault_free(board).witness
            report = verify(board, w)
            assert sum(report.curve_crossings.values()) == board.capacity


class TestWitnessFormat:
    def test_round_trip_identity(self, witness_5x6):
        text = encode(witness_5x6)
        again = decode(text)
        assert again == witness_5x6
        assert encode(again) == text  # byte-exact on canonical documents

    def test_round_trip_all_topologies(self):
        for topo, a, b in [("cylinder", 4, 6), ("torus", 4, 4), ("mobius", 4, 3)]:
            board = build_board(topo, a, b)
            w = find_fault_free(board).witness
            assert decode(encode(w)) == w

    def test_wrong_domino_count_still_parses(self):
        board = build_board("rectangle", 2, 2)
        tiling = tiling_from_edges(board, [("v", 1, 0)])
        parsed = decode(encode(tiling))
        assert len(parsed.dominoes) == 1
        assert not verify(board, parsed).matching_valid

    def test_mobius_wrap_encodes_via_seam_edge(self):
        board = build_board("mobius", 4, 3)
        w = find_fault_free(board).witness
        doc = json.loads(encode(w))
        wraps = [d for d in doc["dominoes"] if d["edge"][1] == 0]
        assert wraps, "expected at least one wrapping tile on a fault-free 4-by-3 strip"
        for d in wraps:
            axis, line, offset = d["edge"]
            assert axis == "v" and line == 0
            r = offset
            assert sorted(map(tuple, d["cells"])) == sorted([(r, 2), (3 - r, 0)])
        assert decode(encode(w)) == w

    def test_syntax_error(self):
        with pytest.raises(WitnessDecodeError):
            decode("{not json")

    def test_unknown_edge(self):
        doc = {"topology": "rectangle", "a": 2, "b": 2,
               "dominoes": [{"edge": ["v", 7, 0], "cells": [[0, 0], [0, 1]]}]}
        with pytest.raises(WitnessDecodeError):
            decode(json.dumps(doc))

    def test_cells_must_match_edge(self):
        doc = {"topology": "rectangle", "a": 2, "b": 2,
               "dominoes": [{"edge": ["v", 1, 0], "cells": [[0, 0], [1, 0]]}]}
        with pytest.raises(WitnessDecodeError):
            decode(json.dumps(doc))

    def test_duplicate_edge(self):
        doc = {"topology": "rectangle", "a": 2, "b": 2,
               "dominoes": [{"edge": ["v", 1, 0], "cells": [[0, 0], [0, 1]]},
                            {"edge": ["v", 1, 0], "cells": [[0, 0], [0, 1]]}]}
        with pytest.raises(WitnessDecodeError):
            decode(json.dumps(doc))

    def test_bad_dimensions(self):
        doc = {"topology": "rectangle", "a": 0, "b": 2, "dominoes": []}
        with pytest.raises(WitnessDecodeError):
            decode(json.dumps(doc))

    def test_decode_for_board_rejects_mismatch(self, witness_5x6):
        with pytest.raises(WitnessDecodeError):
            decode_for_board(encode(witness_5x6), build_board("rectangle", 5, 8))
