"""Bill-of-materials decomposition for standard vs single sub-channel modules.

Cost figures are propagated as [low, high] intervals with endpoint
arithmetic; the source material works entirely in ranges and absolute spot
prices are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ToolkitError


class InvalidCountsError(ToolkitError):
    """Die counts are non-positive or the reduced count exceeds the standard."""


@dataclass(frozen=True)
class Interval:
    low: float
    high: float

    def __post_init__(self):
        if self.low > self.high:
            raise ValueError(f"interval bounds out of order: [{self.low}, {self.high}]")

    def scale(self, k: float) -> "Interval":
        if k < 0:
            raise ValueError("negative scale would flip the interval")
        return Interval(self.low * k, self.high * k)

    def encloses(self, other: "Interval", eps: float = 1e-9) -> bool:
        return self.low <= other.low + eps and self.high >= other.high - eps

    @property
    def midpoint(self) -> float:
        return (self.low + self.high) / 2.0


@dataclass(frozen=True)
class DiePricing:
    """Per-die price interval for one die generation."""

    price_per_die_usd: Interval = Interval(3.50, 4.50)
    generation_label: str = "16Gb"

    def __post_init__(self):
        if self.price_per_die_usd.low < 0:
            raise ValueError("die price cannot be negative")


# Overhead (everything that is not DRAM dies) as a fraction of module BOM,
# implied by the published module totals against their die costs:
# 8 dies at $3.50-4.50 vs a $30-40 module gives 1 - 28/30 = 1/15 at the low
# end and 1 - 36/40 = 1/10 at the high end. The component-share table's
# 60-70% die share does not reconcile with those dollar figures and is
# reproduced separately as published data.
DEFAULT_OVERHEAD_FRACTION = Interval(1.0 / 15.0, 1.0 / 10.0)

# Die counts per module class for the two density generations.
GENERATION_DIE_COUNTS = {
    "16Gb": {"standard": 8, "single_sc": 4},
    "32Gb": {"standard": 4, "single_sc": 2},
}


def module_bom_usd(die_count: int, pricing: DiePricing = DiePricing(),
                   fixed_overhead_fraction: Interval = DEFAULT_OVERHEAD_FRACTION) -> Interval:
    """Module BOM interval: die cost scaled up by the non-die overhead share.

    BOM = die_cost / (1 - overhead_fraction), endpoint-wise. With zero-cost
    dies the result degenerates to the overhead contribution alone.
    """
    if die_count <= 0:
        raise InvalidCountsError(f"die count must be positive, got {die_count}")
    if not 0 <= fixed_overhead_fraction.low <= fixed_overhead_fraction.high < 1:
        raise ValueError("overhead fraction must lie in [0, 1)")
    die_cost = pricing.price_per_die_usd.scale(die_count)
    return Interval(
        die_cost.low / (1.0 - fixed_overhead_fraction.low),
        die_cost.high / (1.0 - fixed_overhead_fraction.high),
    )


def bom_ratio(n_std: int, n_sc: int) -> float:
    """Fractional die-count saving (n_std - n_sc) / n_std."""
    if n_sc <= 0 or n_std <= 0:
        raise InvalidCountsError("die counts must be positive")
    if n_sc > n_std:
        raise InvalidCountsError(
            f"reduced-module die count {n_sc} exceeds standard count {n_std}"
        )
    return (n_std - n_sc) / n_std


@dataclass(frozen=True)
class BomComponent:
    name: str
    share_of_standard_bom_pct: Interval
    share_display: str
    saving_pct: Interval
    saving_display: str


# Published per-component breakdown of the single sub-channel saving.
# "negligible" (PMIC) is encoded as exactly 0% with the qualitative label
# preserved for output.
BOM_BREAKDOWN: tuple[BomComponent, ...] = (
    BomComponent("DRAM dies", Interval(60, 70), "60-70%", Interval(50, 50), "≈50%"),
    BomComponent("PCB (substrate + layers)", Interval(15, 20), "15-20%", Interval(30, 40), "≈30-40%"),
    BomComponent("PMIC", Interval(5, 10), "5-10%", Interval(0, 0), "negligible"),
    BomComponent("Passives + assembly", Interval(5, 10), "5-10%", Interval(20, 20), "≈20%"),
)

TOTAL_BOM_SAVING = BomComponent(
    "Total module BOM", Interval(100, 100), "100%", Interval(35, 45), "≈35-45%"
)


def bom_table_rows() -> list[tuple[str, str, str]]:
    """Component rows plus the total row, as display strings."""
    rows = [(c.name, c.share_display, c.saving_display) for c in BOM_BREAKDOWN]
    rows.append((TOTAL_BOM_SAVING.name, TOTAL_BOM_SAVING.share_display,
                 TOTAL_BOM_SAVING.saving_display))
    return rows
