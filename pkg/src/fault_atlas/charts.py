"""X/O tileability charts: deterministic, diffable golden-file format.

Line 1 is "<topology> <max_a> <max_b>"; then max_a rows of max_b characters,
X for fault-free tileable and O for not, row index a ascending top to
bottom, column index b ascending left to right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import classify
from .topology import Topology, build_board


@dataclass(frozen=True)
class Chart:
    topology: Topology
    max_a: int
    max_b: int
    cells: tuple[str, ...]  # one row string of X/O per height a


def build_chart(topology: Topology | str, max_a: int, max_b: int | None = None) -> Chart:
    topo = Topology(topology)
    max_b = max_a if max_b is None else max_b
    rows = []
    for a in range(1, max_a + 1):
        row = []
        for b in range(1, max_b + 1):
            row.append("X" if classify(build_board(topo, a, b)).tileable else "O")
        rows.append("".join(row))
    return Chart(topo, max_a, max_b, tuple(rows))


def chart_text(chart: Chart) -> str:
    lines = [f"{chart.topology.value} {chart.max_a} {chart.max_b}"]
    lines.extend(chart.cells)
    return "\n".join(lines) + "\n"
