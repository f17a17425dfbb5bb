"""POST/memory-training outcome simulation over slot-population scenarios.

Training is modeled as a binary assertion per training group, not an
electrical simulation. Per-sub-channel controllers (Intel) train each
populated 32-bit sub-channel independently and skip absent ones; the
unified controller (AMD AM5) trains each populated slot as one 64-bit
group and aborts POST when a module leaves a 32-bit half unterminated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

from . import spd
from .errors import ToolkitError


class InvalidPopulationError(ToolkitError):
    """A module descriptor is internally inconsistent or misplaced."""


class NotBootedError(ToolkitError):
    """Bandwidth was requested for a population that does not reach BootOk."""


class Vendor(Enum):
    INTEL_PRE_ARL = "IntelPreARL"
    INTEL_ARROW_LAKE = "IntelArrowLake"
    AMD_AM5 = "AmdAm5"


class SchedulingGranularity(Enum):
    SUB_CHANNEL_32 = "SubChannel32"
    CHANNEL_64 = "Channel64"


class TrainingScope(Enum):
    PER_SUB_CHANNEL = "PerSubChannel"
    UNIFIED_64 = "Unified64"


class PostOutcome(Enum):
    BOOT_OK = "BootOk"
    TRAINING_FAILURE = "TrainingFailure"
    NO_MEMORY = "NoMemory"


@dataclass(frozen=True)
class TrainingUnitRoute:
    """One training group and the slot half (or whole slot) that feeds it.

    half is the 32-bit module half wired to a sub-channel unit, or None for
    a unified 64-bit unit that consumes both halves of its slot.
    """

    controller: str
    unit: str
    slot: str
    half: int | None


@dataclass(frozen=True)
class PlatformModel:
    vendor: Vendor
    scheduling_granularity: SchedulingGranularity
    training_scope: TrainingScope
    routes: tuple[TrainingUnitRoute, ...]
    slots: tuple[str, ...]

    def __post_init__(self):
        # Vendor rows of the controller-comparison table, enforced.
        if self.vendor is Vendor.AMD_AM5:
            expected = (SchedulingGranularity.CHANNEL_64, TrainingScope.UNIFIED_64)
        else:
            expected = (SchedulingGranularity.SUB_CHANNEL_32, TrainingScope.PER_SUB_CHANNEL)
        if (self.scheduling_granularity, self.training_scope) != expected:
            raise ValueError(f"{self.vendor.value} granularity/scope combination is invalid")
        for route in self.routes:
            if route.slot not in self.slots:
                raise ValueError(f"route references unknown slot {route.slot!r}")


def _intel_pre_arl() -> PlatformModel:
    # One slot per channel; the slot carries both sub-channels of its channel.
    routes = (
        TrainingUnitRoute("CH0", "SC0", "A", 0),
        TrainingUnitRoute("CH0", "SC1", "A", 1),
        TrainingUnitRoute("CH1", "SC0", "B", 0),
        TrainingUnitRoute("CH1", "SC1", "B", 1),
    )
    return PlatformModel(Vendor.INTEL_PRE_ARL, SchedulingGranularity.SUB_CHANNEL_32,
                         TrainingScope.PER_SUB_CHANNEL, routes, ("A", "B"))


def _intel_arrow_lake() -> PlatformModel:
    # Split-slot routing: each controller's SC0 lands in slot A and SC1 in
    # slot B, so one populated slot exposes one sub-channel of each controller.
    routes = (
        TrainingUnitRoute("CMC0", "SC0", "A", 0),
        TrainingUnitRoute("CMC1", "SC0", "A", 1),
        TrainingUnitRoute("CMC0", "SC1", "B", 0),
        TrainingUnitRoute("CMC1", "SC1", "B", 1),
    )
    return PlatformModel(Vendor.INTEL_ARROW_LAKE, SchedulingGranularity.SUB_CHANNEL_32,
                         TrainingScope.PER_SUB_CHANNEL, routes, ("A", "B"))


def _amd_am5() -> PlatformModel:
    routes = (
        TrainingUnitRoute("UMC", "CHA", "A", None),
        TrainingUnitRoute("UMC", "CHB", "B", None),
    )
    return PlatformModel(Vendor.AMD_AM5, SchedulingGranularity.CHANNEL_64,
                         TrainingScope.UNIFIED_64, routes, ("A", "B"))


PLATFORMS: dict[Vendor, PlatformModel] = {
    Vendor.INTEL_PRE_ARL: _intel_pre_arl(),
    Vendor.INTEL_ARROW_LAKE: _intel_arrow_lake(),
    Vendor.AMD_AM5: _amd_am5(),
}

PLATFORM_CLI_NAMES = {
    "intel-pre-arl": Vendor.INTEL_PRE_ARL,
    "arrow-lake": Vendor.INTEL_ARROW_LAKE,
    "am5": Vendor.AMD_AM5,
}


def platform_model(name_or_vendor: str | Vendor) -> PlatformModel:
    if isinstance(name_or_vendor, Vendor):
        return PLATFORMS[name_or_vendor]
    vendor = PLATFORM_CLI_NAMES.get(name_or_vendor)
    if vendor is None:
        raise ValueError(
            f"unknown platform {name_or_vendor!r}; known: {', '.join(sorted(PLATFORM_CLI_NAMES))}"
        )
    return PLATFORMS[vendor]


@dataclass(frozen=True)
class InstalledModule:
    """A DIMM as the slot sees it: SPD descriptor byte plus populated halves."""

    kind: str
    spd_byte235: int
    populated_halves: tuple[int, ...]

    def validate(self) -> spd.ModuleClass:
        """Cross-check the SPD descriptor against the physical population."""
        halves = self.populated_halves
        if not halves or any(h not in (0, 1) for h in halves) or len(set(halves)) != len(halves):
            raise InvalidPopulationError(
                f"module {self.kind!r}: populated halves must be a non-empty subset of (0, 1)"
            )
        try:
            desc = spd.decode_byte235(self.spd_byte235)
        except spd.SpdError as exc:
            raise InvalidPopulationError(f"module {self.kind!r}: {exc}") from exc
        cls = spd.classify_module(desc)
        if cls is spd.ModuleClass.SINGLE_SC:
            if len(halves) != 1:
                raise InvalidPopulationError(
                    f"module {self.kind!r}: single sub-channel class with {len(halves)} populated halves"
                )
        elif cls is spd.ModuleClass.STANDARD_DUAL_SC:
            if tuple(sorted(halves)) != (0, 1):
                raise InvalidPopulationError(
                    f"module {self.kind!r}: dual sub-channel class must populate both halves"
                )
        else:
            raise InvalidPopulationError(
                f"module {self.kind!r}: class {cls.value} does not fit a two-half DIMM slot"
            )
        return cls


# Module kinds addressable from the CLI and scenario files. single-sc-b is
# the SC1-only variant whose platform behavior is assumed symmetric.
MODULE_KINDS: dict[str, InstalledModule] = {
    "standard": InstalledModule("standard", 0b001_00_010, (0, 1)),
    "single-sc": InstalledModule("single-sc", 0b000_00_010, (0,)),
    "single-sc-b": InstalledModule("single-sc-b", 0b000_00_010, (1,)),
}


def module_kind(name: str) -> InstalledModule:
    try:
        return MODULE_KINDS[name]
    except KeyError:
        raise ValueError(
            f"unknown module kind {name!r}; known: {', '.join(sorted(MODULE_KINDS))}"
        ) from None


@dataclass(frozen=True)
class TrainedUnit:
    controller: str
    unit: str
    width_bits: int


@dataclass(frozen=True)
class PostResult:
    outcome: PostOutcome
    trained_units: tuple[TrainedUnit, ...]
    total_active_bus_bits: int
    failure_reason: str = ""
    notes: tuple[str, ...] = ()


Population = Mapping[str, InstalledModule | None]


def _check_population(platform: PlatformModel, population: Population) -> dict[str, InstalledModule]:
    installed = {}
    for slot, module in population.items():
        if slot not in platform.slots:
            raise InvalidPopulationError(
                f"slot {slot!r} does not exist on {platform.vendor.value}"
            )
        if module is None:
            continue
        module.validate()
        installed[slot] = module
    return installed


def simulate_post(platform: PlatformModel, population: Population) -> PostResult:
    """Deterministic POST outcome for one platform/population combination."""
    installed = _check_population(platform, population)
    if platform.training_scope is TrainingScope.PER_SUB_CHANNEL:
        return _simulate_per_subchannel(platform, installed)
    return _simulate_unified(platform, installed)


def _simulate_per_subchannel(platform: PlatformModel,
                             installed: dict[str, InstalledModule]) -> PostResult:
    trained = []
    notes = []
    for route in platform.routes:
        module = installed.get(route.slot)
        if module is None:
            continue  # absent sub-channel: training skipped
        if route.half in module.populated_halves:
            trained.append(TrainedUnit(route.controller, route.unit, 32))
    for slot in platform.slots:
        module = installed.get(slot)
        if module is not None and module.populated_halves == (1,):
            notes.append(
                f"slot {slot}: SC1-only module; treated symmetrically to SC0-only "
                "(host behavior for this orientation is undocumented)"
            )
    if not trained:
        return PostResult(PostOutcome.NO_MEMORY, (), 0, "no populated sub-channels detected",
                          tuple(notes))
    return PostResult(PostOutcome.BOOT_OK, tuple(trained), 32 * len(trained), "", tuple(notes))


def _simulate_unified(platform: PlatformModel,
                      installed: dict[str, InstalledModule]) -> PostResult:
    trained = []
    for route in platform.routes:
        module = installed.get(route.slot)
        if module is None:
            continue
        if tuple(sorted(module.populated_halves)) != (0, 1):
            reason = (
                f"unterminated DQ half on unified 64-bit training "
                f"(slot {route.slot}, module {module.kind!r})"
            )
            return PostResult(PostOutcome.TRAINING_FAILURE, (), 0, reason)
        trained.append(TrainedUnit(route.controller, route.unit, 64))
    if not trained:
        return PostResult(PostOutcome.NO_MEMORY, (), 0, "no populated sub-channels detected")
    return PostResult(PostOutcome.BOOT_OK, tuple(trained), 64 * len(trained))


@dataclass(frozen=True)
class MatrixCell:
    assignment: tuple[tuple[str, str | None], ...]  # (slot, module kind or None)
    result: PostResult


def population_matrix(platform: PlatformModel,
                      module_kinds: Sequence[InstalledModule]) -> list[MatrixCell]:
    """POST results for every slot assignment over the given kinds.

    Every slot independently takes each kind or stays empty; cells are
    ordered by slot-major cartesian product with "empty" first.
    """
    if not module_kinds:
        raise ValueError("need at least one module kind")
    options: list[InstalledModule | None] = [None, *module_kinds]
    cells = []
    for combo in itertools.product(options, repeat=len(platform.slots)):
        population = dict(zip(platform.slots, combo))
        assignment = tuple(
            (slot, module.kind if module is not None else None)
            for slot, module in population.items()
        )
        cells.append(MatrixCell(assignment, simulate_post(platform, population)))
    return cells


def active_bandwidth_gbs(platform: PlatformModel, population: Population,
                         data_rate_mts: int) -> float:
    """Peak bandwidth over the sub-channels that actually trained."""
    result = simulate_post(platform, population)
    if result.outcome is not PostOutcome.BOOT_OK:
        raise NotBootedError(
            f"POST did not complete: {result.outcome.value}"
            + (f" ({result.failure_reason})" if result.failure_reason else "")
        )
    return result.total_active_bus_bits * data_rate_mts / 8000.0


# Controller-comparison rows behind `report --table 4`.
CONTROLLER_COMPARISON: tuple[tuple[str, str, str], ...] = (
    ("Scheduling granularity", "32-bit sub-channel", "64-bit channel"),
    ("Single SC support", "Yes", "No"),
    ("Training scope", "Per sub-channel", "All 64-bit"),
    ("Asymm. population", "Supported", "Boot failure"),
    ("PHY power gating", "Per sub-channel", "Full channel"),
    ("SPD SC detection", "Used at init", "N/A"),
)
