"""The five standard report tables, regenerated from embedded defaults.

Output is byte-deterministic: fixed decimal formatting, '.' separator, no
locale involvement anywhere. Golden-file tests pin the exact bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bom, config, roofline, training
from .tables import render_csv, render_text


@dataclass(frozen=True)
class Table:
    number: int
    title: str
    headers: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    right_align: frozenset[int]

    def as_text(self) -> str:
        head = f"Table {self.number}. {self.title}\n"
        return head + render_text(self.headers, self.rows, self.right_align)

    def as_csv(self) -> str:
        return render_csv(self.headers, self.rows)


def table1() -> Table:
    rows = []
    for row in config.compare_configs(config.TABLE1_ENTRIES):
        rows.append((
            row.standard,
            row.label,
            str(row.dimms),
            f"{row.bus_bits}-bit",
            str(row.burst_length),
            f"{row.tx_width_bytes} B",
            row.speed_label,
            f"{row.peak_gbs:.1f}",
        ))
    return Table(
        number=1,
        title="Transaction width and peak bandwidth by configuration",
        headers=("Standard", "Configuration", "DIMMs", "Bus", "BL", "Tx Width",
                 "Speed", "BW (GB/s)"),
        rows=tuple(rows),
        right_align=frozenset({2, 4, 7}),
    )


def table2() -> Table:
    rows = []
    for label, cfg in config.TABLE2_ENTRIES:
        rows.append((
            label,
            cfg.speed_label,
            f"{cfg.total_bus_bits}-bit",
            f"{cfg.peak_bandwidth_gbs:.1f}",
            f"≈{config.approx_gbs(cfg.effective_bandwidth_gbs)}",
        ))
    return Table(
        number=2,
        title="Peak and effective bandwidth at representative speeds",
        headers=("Configuration", "Speed", "Bus", "Peak (GB/s)", "Effective (GB/s)"),
        rows=tuple(rows),
        right_align=frozenset({3, 4}),
    )


def table3() -> Table:
    rows = tuple(
        (w.name, w.bw_sensitivity.value, w.deficit_display)
        for w in roofline.WORKLOAD_TABLE
    )
    return Table(
        number=3,
        title="Workload bandwidth sensitivity and projected deficit vs dual sub-channel DDR5-5600",
        headers=("Workload", "BW Sens.", "Deficit"),
        rows=rows,
        right_align=frozenset(),
    )


def table4() -> Table:
    return Table(
        number=4,
        title="Memory controller sub-channel handling",
        headers=("Property", "Intel iMC", "AMD UMC"),
        rows=training.CONTROLLER_COMPARISON,
        right_align=frozenset(),
    )


def table5() -> Table:
    return Table(
        number=5,
        title="Module BOM reduction breakdown by component",
        headers=("Component", "% of std. BOM", "Single-SC saving"),
        rows=tuple(bom.bom_table_rows()),
        right_align=frozenset(),
    )


_BUILDERS = {1: table1, 2: table2, 3: table3, 4: table4, 5: table5}
ALL_TABLES = (1, 2, 3, 4, 5)


def build_table(number: int) -> Table:
    try:
        return _BUILDERS[number]()
    except KeyError:
        raise ValueError(f"no table {number}; available: 1-5") from None


def render_report(numbers: tuple[int, ...] = ALL_TABLES, fmt: str = "text") -> str:
    """Concatenated tables, blank-line separated, in ascending table order."""
    parts = []
    for number in numbers:
        table = build_table(number)
        parts.append(table.as_text() if fmt == "text" else table.as_csv())
    sep = "\n" if fmt == "text" else "\r\n"
    return sep.join(parts)
