"""Transaction-width, bandwidth, and capacity arithmetic for DRAM populations.

All bandwidths are decimal GB/s (1 GB/s = 1e9 bytes/s); binary units would
not reproduce the published configuration tables. Peak bandwidth is computed
with a single division (bits * MT/s / 8000) so the canonical values compare
exactly against their literals.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Sequence

from .errors import ToolkitError

X86_CACHE_LINE_BYTES = 64

DEFAULT_BUS_EFFICIENCY = {"DDR4": 0.80, "DDR5": 0.85}


class MemoryStandard(Enum):
    DDR4 = "DDR4"
    DDR5 = "DDR5"


class InvalidWidthError(ToolkitError):
    """Bus width is not a positive multiple of 8 bits."""


def transaction_width_bytes(bus_bits: int, burst_length: int) -> int:
    """Bytes moved by one burst: (bus_bits / 8) * burst_length."""
    if bus_bits <= 0 or bus_bits % 8 != 0:
        raise InvalidWidthError(f"bus width must be a positive multiple of 8 bits, got {bus_bits}")
    if burst_length <= 0:
        raise InvalidWidthError(f"burst length must be positive, got {burst_length}")
    return (bus_bits // 8) * burst_length


def fills_cache_line(bus_bits: int, burst_length: int) -> bool:
    """True when one burst transfers exactly one 64-byte x86 cache line."""
    return transaction_width_bytes(bus_bits, burst_length) == X86_CACHE_LINE_BYTES


@dataclass(frozen=True)
class MemoryConfig:
    """One DRAM population scenario.

    DDR5 units are 32-bit sub-channels with BL16/BL32; DDR4 is a monolithic
    64-bit channel with BL8 and no sub-channel concept.
    """

    standard: MemoryStandard
    dimm_count: int
    channels: int
    populated_subchannels_per_channel: int
    bus_bits_per_unit: int
    burst_length: int
    data_rate_mts: int
    bus_efficiency: float | None = None

    def __post_init__(self):
        if self.dimm_count < 1 or self.channels < 1 or self.data_rate_mts <= 0:
            raise ValueError("dimm_count, channels, and data_rate_mts must be positive")
        if self.standard is MemoryStandard.DDR4:
            if self.burst_length != 8 or self.bus_bits_per_unit != 64:
                raise ValueError("DDR4 requires BL8 and a 64-bit monolithic unit")
            if self.populated_subchannels_per_channel != 1:
                raise ValueError("DDR4 has no sub-channel concept; unit count per channel is 1")
        else:
            if self.burst_length not in (16, 32):
                raise ValueError("DDR5 burst length must be 16 or 32")
            if self.bus_bits_per_unit != 32:
                raise ValueError("DDR5 units are 32-bit sub-channels")
            if self.populated_subchannels_per_channel not in (1, 2):
                raise ValueError("populated sub-channels per channel must be 1 or 2")
        if self.bus_efficiency is None:
            object.__setattr__(
                self, "bus_efficiency", DEFAULT_BUS_EFFICIENCY[self.standard.value]
            )
        if not 0.0 < self.bus_efficiency <= 1.0:
            raise ValueError(f"bus efficiency must be in (0, 1], got {self.bus_efficiency}")

    @classmethod
    def ddr4(cls, channels: int = 1, data_rate_mts: int = 3200,
             dimm_count: int | None = None, bus_efficiency: float | None = None) -> "MemoryConfig":
        return cls(
            standard=MemoryStandard.DDR4,
            dimm_count=channels if dimm_count is None else dimm_count,
            channels=channels,
            populated_subchannels_per_channel=1,
            bus_bits_per_unit=64,
            burst_length=8,
            data_rate_mts=data_rate_mts,
            bus_efficiency=bus_efficiency,
        )

    @classmethod
    def ddr5(cls, channels: int = 1, subchannels: int = 2, data_rate_mts: int = 5600,
             burst_length: int = 16, dimm_count: int | None = None,
             bus_efficiency: float | None = None) -> "MemoryConfig":
        return cls(
            standard=MemoryStandard.DDR5,
            dimm_count=channels if dimm_count is None else dimm_count,
            channels=channels,
            populated_subchannels_per_channel=subchannels,
            bus_bits_per_unit=32,
            burst_length=burst_length,
            data_rate_mts=data_rate_mts,
            bus_efficiency=bus_efficiency,
        )

    @property
    def total_bus_bits(self) -> int:
        return self.channels * self.populated_subchannels_per_channel * self.bus_bits_per_unit

    @property
    def transaction_width_bytes(self) -> int:
        return transaction_width_bytes(self.total_bus_bits, self.burst_length)

    @property
    def peak_bandwidth_gbs(self) -> float:
        return self.total_bus_bits * self.data_rate_mts / 8000.0

    @property
    def effective_bandwidth_gbs(self) -> float:
        return self.peak_bandwidth_gbs * self.bus_efficiency

    @property
    def speed_label(self) -> str:
        return f"{self.standard.value}-{self.data_rate_mts}"


def approx_gbs(value: float) -> int:
    """Display rounding for "approximately N GB/s" table cells.

    Rounds to one decimal first (the table display precision), then half-up
    to an integer. This two-stage rule reproduces every published effective
    value, including 20.48 -> 20.5 -> 21 for the DDR4 reference row, which
    plain nearest-integer rounding would miss.
    """
    one_dp = Decimal(repr(value)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP)
    return int(one_dp.quantize(Decimal("1"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class DieSpec:
    """DRAM die population for one capacity computation.

    die_count is the number of data dies in the population unit under
    consideration (4 for a 32-bit single sub-channel at x8, 8 for a
    standard 64-bit module at x8).
    """

    die_density_gbit: float
    die_count: int
    organisation: str = "x8"

    def __post_init__(self):
        if self.die_density_gbit <= 0 or self.die_count < 1:
            raise ValueError("die density and count must be positive")
        if self.organisation != "x8":
            raise ValueError("only x8 die organisation is modeled")


def min_capacity_gb(die: DieSpec) -> float:
    """Minimum module capacity in GB: die_count * density / 8."""
    return die.die_count * die.die_density_gbit / 8.0


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    standard: str
    dimms: int
    bus_bits: int
    burst_length: int
    tx_width_bytes: int
    speed_label: str
    peak_gbs: float
    effective_gbs: float


def compare_configs(entries: Sequence[tuple[str, MemoryConfig]]) -> list[ComparisonRow]:
    """Tabulate width/bandwidth figures for labeled configs, in given order."""
    if not entries:
        raise ValueError("need at least one configuration to compare")
    rows = []
    for label, cfg in entries:
        rows.append(ComparisonRow(
            label=label,
            standard=cfg.standard.value,
            dimms=cfg.dimm_count,
            bus_bits=cfg.total_bus_bits,
            burst_length=cfg.burst_length,
            tx_width_bytes=cfg.transaction_width_bytes,
            speed_label=cfg.speed_label,
            peak_gbs=cfg.peak_bandwidth_gbs,
            effective_gbs=cfg.effective_bandwidth_gbs,
        ))
    return rows


# Canonical single-DIMM-per-channel scenarios addressable by name on the CLI.
NAMED_CONFIGS: dict[str, MemoryConfig] = {
    "ddr4-3200": MemoryConfig.ddr4(channels=1, data_rate_mts=3200),
    "dual-sc-4800": MemoryConfig.ddr5(channels=1, subchannels=2, data_rate_mts=4800),
    "dual-sc-5600": MemoryConfig.ddr5(channels=1, subchannels=2, data_rate_mts=5600),
    "dual-sc-6400": MemoryConfig.ddr5(channels=1, subchannels=2, data_rate_mts=6400),
    "single-sc-4800": MemoryConfig.ddr5(channels=1, subchannels=1, data_rate_mts=4800),
    "single-sc-5600": MemoryConfig.ddr5(channels=1, subchannels=1, data_rate_mts=5600),
    "single-sc-6400": MemoryConfig.ddr5(channels=1, subchannels=1, data_rate_mts=6400),
}

# Default dataset behind `report --table 1`: transaction width and peak
# bandwidth across DDR4/DDR5 population scenarios.
TABLE1_ENTRIES: tuple[tuple[str, MemoryConfig], ...] = (
    ("1 DIMM, 1 channel", MemoryConfig.ddr4(channels=1)),
    ("2 DIMM, 2 channel (dual)", MemoryConfig.ddr4(channels=2)),
    ("1 DIMM, 1ch, dual SC (std.)", MemoryConfig.ddr5(channels=1, subchannels=2)),
    ("2 DIMM, 2ch, dual SC (std.)", MemoryConfig.ddr5(channels=2, subchannels=2)),
    ("1 DIMM, 1ch, single SC", MemoryConfig.ddr5(channels=1, subchannels=1)),
    ("2 DIMM, 2ch, single SC", MemoryConfig.ddr5(channels=2, subchannels=1)),
)

# Default dataset behind `report --table 2`: dual vs single sub-channel
# bandwidth at representative speeds, with a DDR4 reference row.
TABLE2_ENTRIES: tuple[tuple[str, MemoryConfig], ...] = (
    ("Dual SC (std.)", NAMED_CONFIGS["dual-sc-4800"]),
    ("Dual SC (std.)", NAMED_CONFIGS["dual-sc-5600"]),
    ("Dual SC (std.)", NAMED_CONFIGS["dual-sc-6400"]),
    ("Single SC", NAMED_CONFIGS["single-sc-4800"]),
    ("Single SC", NAMED_CONFIGS["single-sc-5600"]),
    ("Single SC", NAMED_CONFIGS["single-sc-6400"]),
    ("DDR4-3200 (reference)", NAMED_CONFIGS["ddr4-3200"]),
)
