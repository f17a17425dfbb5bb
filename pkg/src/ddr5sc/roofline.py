"""Roofline classification of workloads against memory-bandwidth ceilings.

Attainable throughput is min(P, I*B) for peak compute P, arithmetic
intensity I, and memory bandwidth B. A workload is bandwidth-limited when
I < P/B (strict; the boundary counts as compute-bound). B defaults to the
platform's effective bandwidth so verdicts describe sustained behavior;
peak is selectable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .config import MemoryConfig, approx_gbs
from .errors import ToolkitError


class UnknownWorkloadError(ToolkitError):
    """Workload name not present in the embedded deficit dataset."""


class BandwidthSensitivity(Enum):
    VERY_LOW = "Very Low"
    LOW = "Low"
    LOW_MEDIUM = "Low-Med"
    MEDIUM = "Medium"
    HIGH = "High"


@dataclass(frozen=True)
class WorkloadProfile:
    """A workload's bandwidth sensitivity and published deficit interval.

    deficit_display preserves the published table notation ("<3%" vs
    "0-3%"); deficit_range_pct carries the numeric bounds.
    """

    name: str
    bw_sensitivity: BandwidthSensitivity
    deficit_range_pct: tuple[float, float]
    deficit_display: str
    arithmetic_intensity: float | None = None

    def __post_init__(self):
        lo, hi = self.deficit_range_pct
        if not (0 <= lo <= hi <= 100):
            raise ValueError(f"deficit range must satisfy 0 <= lo <= hi <= 100, got {lo}..{hi}")


@dataclass(frozen=True)
class ComputePlatform:
    """Peak compute paired with a memory config that supplies bandwidth."""

    peak_compute_flops: float
    memory_config: MemoryConfig
    use_peak_bandwidth: bool = False

    def __post_init__(self):
        if self.peak_compute_flops <= 0:
            raise ValueError("peak compute must be positive")

    @property
    def bandwidth_bytes_per_s(self) -> float:
        cfg = self.memory_config
        gbs = cfg.peak_bandwidth_gbs if self.use_peak_bandwidth else cfg.effective_bandwidth_gbs
        return gbs * 1e9

    @property
    def crossover_intensity(self) -> float:
        """Intensity at which the memory roof meets the compute roof (P/B)."""
        return self.peak_compute_flops / self.bandwidth_bytes_per_s


def is_bandwidth_limited(intensity: float, platform: ComputePlatform) -> bool:
    if intensity < 0:
        raise ValueError("arithmetic intensity must be non-negative")
    return intensity < platform.crossover_intensity


def attainable_throughput(intensity: float, platform: ComputePlatform) -> float:
    if intensity < 0:
        raise ValueError("arithmetic intensity must be non-negative")
    return min(platform.peak_compute_flops, intensity * platform.bandwidth_bytes_per_s)


def roofline_deficit(intensity: float, platform_full: ComputePlatform,
                     platform_half: ComputePlatform) -> float:
    """Fractional throughput loss when moving from full to reduced bandwidth.

    0 for compute-bound workloads; equal to the bandwidth reduction fraction
    for fully memory-bound ones. The platforms must share peak compute.
    """
    if platform_full.peak_compute_flops != platform_half.peak_compute_flops:
        raise ValueError("platforms must differ only in memory bandwidth")
    full = attainable_throughput(intensity, platform_full)
    if full == 0.0:
        return 0.0
    return 1.0 - attainable_throughput(intensity, platform_half) / full


# Published per-workload deficit projections for single vs dual sub-channel
# DDR5-5600. Tabulated, not recomputed: the source gives no per-workload
# intensities, so the analytic path above cannot reproduce these rows.
WORKLOAD_TABLE: tuple[WorkloadProfile, ...] = (
    WorkloadProfile("Web / office / productivity", BandwidthSensitivity.LOW, (2, 8), "2-8%"),
    WorkloadProfile("Gaming, GPU-bound", BandwidthSensitivity.LOW, (5, 12), "5-12%"),
    WorkloadProfile("Gaming, CPU-bound", BandwidthSensitivity.MEDIUM, (15, 35), "15-35%"),
    WorkloadProfile("Software development", BandwidthSensitivity.LOW_MEDIUM, (8, 15), "8-15%"),
    WorkloadProfile("Video playback", BandwidthSensitivity.LOW, (2, 5), "2-5%"),
    WorkloadProfile("Video transcoding (x264/x265)", BandwidthSensitivity.HIGH, (30, 50), "30-50%"),
    WorkloadProfile("iGPU, 1080p+", BandwidthSensitivity.HIGH, (35, 55), "35-55%"),
    WorkloadProfile("CPU AI / LLM serving", BandwidthSensitivity.HIGH, (40, 60), "40-60%"),
    WorkloadProfile("Scientific simulation (HPC)", BandwidthSensitivity.HIGH, (40, 60), "40-60%"),
    WorkloadProfile("POS / kiosk / embedded", BandwidthSensitivity.VERY_LOW, (0, 3), "<3%"),
)

_WORKLOADS_BY_NAME = {w.name: w for w in WORKLOAD_TABLE}
_WORKLOADS_BY_FOLDED = {w.name.casefold(): w for w in WORKLOAD_TABLE}


def table3_lookup(workload_name: str) -> WorkloadProfile:
    """Look up a workload's published deficit interval by name."""
    profile = _WORKLOADS_BY_NAME.get(workload_name)
    if profile is None:
        profile = _WORKLOADS_BY_FOLDED.get(workload_name.casefold())
    if profile is None:
        known = ", ".join(sorted(_WORKLOADS_BY_NAME))
        raise UnknownWorkloadError(f"unknown workload {workload_name!r}; known: {known}")
    return profile


@dataclass(frozen=True)
class InversionReport:
    """Effective-bandwidth comparison of a candidate config against a baseline."""

    candidate_label: str
    baseline_label: str
    candidate_peak_gbs: float
    baseline_peak_gbs: float
    candidate_effective_gbs: float
    baseline_effective_gbs: float
    inversion: bool


def detect_inversion(candidate: MemoryConfig, baseline: MemoryConfig,
                     candidate_label: str = "candidate",
                     baseline_label: str = "baseline") -> InversionReport:
    """Report whether the nominally newer config under-delivers the baseline."""
    eff_c = candidate.effective_bandwidth_gbs
    eff_b = baseline.effective_bandwidth_gbs
    return InversionReport(
        candidate_label=candidate_label,
        baseline_label=baseline_label,
        candidate_peak_gbs=candidate.peak_bandwidth_gbs,
        baseline_peak_gbs=baseline.peak_bandwidth_gbs,
        candidate_effective_gbs=eff_c,
        baseline_effective_gbs=eff_b,
        inversion=eff_c < eff_b,
    )


DEFAULT_IGPU_DEMAND_GBS = (18.0, 22.0)


@dataclass(frozen=True)
class IgpuMarginReport:
    sustained_gbs: float
    demand_gbs: tuple[float, float]
    headroom_low_gbs: float
    headroom_high_gbs: float
    verdict: str


def igpu_margin(config: MemoryConfig,
                demand_gbs: tuple[float, float] = DEFAULT_IGPU_DEMAND_GBS) -> IgpuMarginReport:
    """Judge sustained bandwidth against an iGPU demand interval.

    Verdict rule: insufficient when sustained <= demand high; marginal while
    within a quarter of the demand span above it; sufficient beyond. The
    marginal band width is a modeling choice, not a published figure.
    """
    demand_low, demand_high = demand_gbs
    if not demand_low < demand_high:
        raise ValueError("demand interval must be non-degenerate (low < high)")
    sustained = config.effective_bandwidth_gbs
    marginal_ceiling = demand_high + 0.25 * (demand_high - demand_low)
    if sustained <= demand_high:
        verdict = "insufficient"
    elif sustained < marginal_ceiling:
        verdict = "marginal"
    else:
        verdict = "sufficient"
    return IgpuMarginReport(
        sustained_gbs=sustained,
        demand_gbs=(demand_low, demand_high),
        headroom_low_gbs=sustained - demand_high,
        headroom_high_gbs=sustained - demand_low,
        verdict=verdict,
    )


def roofline_curve(platform: ComputePlatform, intensity_min: float, intensity_max: float,
                   points: int) -> list[tuple[float, float]]:
    """(intensity, attainable FLOP/s) series on a geometric intensity grid."""
    if not 0 < intensity_min < intensity_max or points < 2:
        raise ValueError("need 0 < intensity_min < intensity_max and at least 2 points")
    ratio = (intensity_max / intensity_min) ** (1.0 / (points - 1))
    series = []
    for i in range(points):
        intensity = intensity_min * ratio ** i
        series.append((intensity, attainable_throughput(intensity, platform)))
    return series


def sustained_gbs_display(config: MemoryConfig) -> int:
    """Integer "approximately N GB/s" form of the sustained bandwidth."""
    return approx_gbs(config.effective_bandwidth_gbs)
