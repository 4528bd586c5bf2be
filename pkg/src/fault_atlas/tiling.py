"""Tilings, matching/fault verification, and the JSON witness format.

Parsing and semantic validation are deliberately separate: `decode` accepts
any structurally well-formed document (wrong domino counts included), and
`verify` then reports the defects, so a bad witness yields a structured
report rather than a crash.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InvalidWitnessError, WitnessDecodeError
from .topology import (
    BoardSpec,
    Cell,
    CrossingEdge,
    Placement,
    Topology,
    build_board,
    curve_index,
    fault_curves,
    placement_index,
)


@dataclass(frozen=True)
class Tiling:
    """A set of placements claimed to be a perfect, fault-free cover."""

    board: BoardSpec
    dominoes: frozenset[Placement]


@dataclass(frozen=True)
class VerificationReport:
    matching_valid: bool
    uncovered_cells: tuple[Cell, ...]
    doubly_covered_cells: tuple[Cell, ...]
    curve_crossings: dict[int, int]
    uncrossed_curves: tuple[int, ...]
    fault_free: bool


def verify(board: BoardSpec, tiling: Tiling) -> VerificationReport:
    """Check perfect-matching validity and fault-curve coverage.

    fault_free holds iff the matching is valid and every fault curve is
    crossed by at least one domino.  Raises InvalidWitnessError if any
    placement does not belong to the board.
    """
    if tiling.board != board:
        raise InvalidWitnessError(f"tiling is for {tiling.board}, not {board}")
    known = placement_index(board)
    coverage = {cell: 0 for cell in board.cells()}
    crossings = {curve.id: 0 for curve in fault_curves(board)}
    edge_to_curve = curve_index(board)
    for plc in tiling.dominoes:
        expected = known.get(plc.edge.key())
        if expected is None or set(expected.cells) != set(plc.cells):
            raise InvalidWitnessError(f"foreign placement {plc} on board {board}")
        for cell in plc.cells:
            coverage[cell] += 1
        crossings[edge_to_curve[plc.edge.key()]] += 1
    uncovered = tuple(sorted(c for c, n in coverage.items() if n == 0))
    doubled = tuple(sorted(c for c, n in coverage.items() if n > 1))
    matching_valid = not uncovered and not doubled
    uncrossed = tuple(cid for cid, n in sorted(crossings.items()) if n == 0)
    return VerificationReport(
        matching_valid=matching_valid,
        uncovered_cells=uncovered,
        doubly_covered_cells=doubled,
        curve_crossings=crossings,
        uncrossed_curves=uncrossed,
        fault_free=matching_valid and not uncrossed,
    )


def tiling_from_edges(board: BoardSpec, edges: "list[CrossingEdge] | list[tuple[str, int, int]]") -> Tiling:
    """Build a tiling from crossing edges known to exist on the board."""
    table = placement_index(board)
    dominoes = []
    for edge in edges:
        key = edge.key() if isinstance(edge, CrossingEdge) else (edge[0], edge[1], edge[2])
        dominoes.append(table[key])
    return Tiling(board, frozenset(dominoes))


def encode(tiling: Tiling) -> str:
    """Serialize to the canonical witness document (UTF-8 JSON text)."""
    doc = {
        "topology": tiling.board.topology.value,
        "a": tiling.board.a,
        "b": tiling.board.b,
        "dominoes": [
            {
                "edge": [p.edge.axis, p.edge.line, p.edge.offset],
                "cells": [list(p.cells[0]), list(p.cells[1])],
            }
            for p in sorted(tiling.dominoes, key=lambda p: p.edge.key())
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def decode(text: str) -> Tiling:
    """Parse a witness document.

    Structural errors (bad JSON, unknown edges, cells that disagree with the
    edge) raise WitnessDecodeError; a wrong domino count parses fine and is
    left for verify() to report.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WitnessDecodeError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise WitnessDecodeError("witness document must be a JSON object")
    try:
        topology = Topology(doc["topology"])
        a = doc["a"]
        b = doc["b"]
        entries = doc["dominoes"]
    except (KeyError, ValueError) as exc:
        raise WitnessDecodeError(f"missing or invalid field: {exc}") from exc
    if not isinstance(a, int) or not isinstance(b, int) or a < 1 or b < 1:
        raise WitnessDecodeError(f"dimension mismatch: bad dimensions {a!r} x {b!r}")
    if not isinstance(entries, list):
        raise WitnessDecodeError("dominoes must be a list")
    board = build_board(topology, a, b)
    table = placement_index(board)
    dominoes = []
    seen = set()
    for entry in entries:
        try:
            axis, line, offset = entry["edge"]
            cells = entry["cells"]
        except (KeyError, TypeError, ValueError) as exc:
            raise WitnessDecodeError(f"malformed domino entry {entry!r}: {exc}") from exc
        key = (axis, line, offset)
        plc = table.get(key)
        if plc is None:
            raise WitnessDecodeError(f"unknown edge id {key} on {board}")
        if key in seen:
            raise WitnessDecodeError(f"duplicate edge id {key}")
        seen.add(key)
        try:
            declared_cells = {tuple(cells[0]), tuple(cells[1])}
        except (IndexError, TypeError) as exc:
            raise WitnessDecodeError(f"malformed cells in {entry!r}: {exc}") from exc
        if declared_cells != set(plc.cells):
            raise WitnessDecodeError(
                f"cells {sorted(declared_cells)} disagree with edge {key} -> {sorted(plc.cells)}"
            )
        dominoes.append(plc)
    return Tiling(board, frozenset(dominoes))


def decode_for_board(text: str, board: BoardSpec) -> Tiling:
    """Decode and reject witnesses written for a different board."""
    tiling = decode(text)
    if tiling.board != board:
        raise WitnessDecodeError(f"witness is for {tiling.board}, expected {board}")
    return tiling
