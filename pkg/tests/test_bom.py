"""Tests for the bill-of-materials interval model."""

import pytest

from ddr5sc import bom
from ddr5sc.bom import DiePricing, Interval, bom_ratio, module_bom_usd


def test_standard_module_bom_encloses_published_interval():
    interval = module_bom_usd(8)
    assert interval.encloses(Interval(30.0, 40.0))
    assert interval.low == pytest.approx(30.0)
    assert interval.high == pytest.approx(40.0)


def test_single_sc_module_bom_encloses_published_interval():
    interval = module_bom_usd(4)
    assert interval.encloses(Interval(15.0, 20.0))
    assert interval.low == pytest.approx(15.0)
    assert interval.high == pytest.approx(20.0)


def test_zero_cost_dies_leave_overhead_only():
    pricing = DiePricing(Interval(0.0, 0.0))
    interval = module_bom_usd(8, pricing)
    die_cost = pricing.price_per_die_usd.scale(8)
    # the whole BOM is the overhead component (here zero, as is the overhead)
    assert interval.low - die_cost.low == 0.0
    assert interval.high - die_cost.high == 0.0


def test_module_bom_monotone_in_price_and_count():
    cheap = module_bom_usd(8, DiePricing(Interval(2.0, 3.0)))
    dear = module_bom_usd(8, DiePricing(Interval(3.0, 4.0)))
    assert cheap.low <= dear.low and cheap.high <= dear.high
    fewer = module_bom_usd(4)
    more = module_bom_usd(8)
    assert fewer.low <= more.low and fewer.high <= more.high


def test_module_bom_rejects_bad_inputs():
    with pytest.raises(bom.InvalidCountsError):
        module_bom_usd(0)
    with pytest.raises(ValueError):
        module_bom_usd(8, fixed_overhead_fraction=Interval(0.5, 1.0))


def test_bom_ratio_known_values():
    assert bom_ratio(8, 4) == 0.5
    assert bom_ratio(4, 2) == 0.5
    assert bom_ratio(8, 8) == 0.0


def test_bom_ratio_invalid_counts():
    with pytest.raises(bom.InvalidCountsError):
        bom_ratio(4, 8)
    with pytest.raises(bom.InvalidCountsError):
        bom_ratio(8, 0)
    with pytest.raises(bom.InvalidCountsError):
        bom_ratio(0, 0)


def test_bom_ratio_scale_invariance():
    for a, b in ((8, 4), (3, 1), (5, 2), (7, 3)):
        base = bom_ratio(a, b)
        for k in (2, 3, 10, 100):
            assert bom_ratio(k * a, k * b) == pytest.approx(base, rel=1e-12)


def test_die_generation_progression():
    # Ratio is preserved across the density transition while the absolute
    # die differential halves.
    assert bom_ratio(8, 4) == bom_ratio(4, 2) == 0.5
    assert (8 - 4) == 2 * (4 - 2)


def test_generation_die_counts():
    assert bom.GENERATION_DIE_COUNTS["16Gb"] == {"standard": 8, "single_sc": 4}
    assert bom.GENERATION_DIE_COUNTS["32Gb"] == {"standard": 4, "single_sc": 2}


def test_breakdown_rows_are_byte_stable():
    assert bom.bom_table_rows() == [
        ("DRAM dies", "60-70%", "≈50%"),
        ("PCB (substrate + layers)", "15-20%", "≈30-40%"),
        ("PMIC", "5-10%", "negligible"),
        ("Passives + assembly", "5-10%", "≈20%"),
        ("Total module BOM", "100%", "≈35-45%"),
    ]


def test_breakdown_total_and_share_consistency():
    total = bom.TOTAL_BOM_SAVING
    assert (total.saving_pct.low, total.saving_pct.high) == (35, 45)
    # component share intervals bracket 100% even though midpoints drift
    low_sum = sum(c.share_of_standard_bom_pct.low for c in bom.BOM_BREAKDOWN)
    high_sum = sum(c.share_of_standard_bom_pct.high for c in bom.BOM_BREAKDOWN)
    assert low_sum <= 100 <= high_sum
    pmic = next(c for c in bom.BOM_BREAKDOWN if c.name == "PMIC")
    assert pmic.saving_pct == Interval(0, 0)
    assert pmic.saving_display == "negligible"


def test_interval_helpers():
    with pytest.raises(ValueError):
        Interval(2.0, 1.0)
    assert Interval(1.0, 3.0).midpoint == 2.0
    assert Interval(1.0, 3.0).scale(2.0) == Interval(2.0, 6.0)
    with pytest.raises(ValueError):
        Interval(1.0, 3.0).scale(-1.0)
    assert Interval(0.0, 10.0).encloses(Interval(1.0, 9.0))
    assert not Interval(2.0, 10.0).encloses(Interval(1.0, 9.0))
