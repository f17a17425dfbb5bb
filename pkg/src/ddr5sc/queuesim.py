"""Discrete-event simulation of cache-line fills through sub-channel queues.

Model assumptions, stated once:

* Each request is one 64-byte cache-line fill served by a single FIFO
  command queue per sub-channel, with deterministic service time equal to
  the burst duration: BL/2 DRAM clock cycles at clock = data_rate/2 MHz,
  so BL16 at 5600 MT/s occupies the bus for 8 * (2000/5600) ns.
* First-access latency is a single constant added to every request's total
  latency; it pipelines with other requests' bursts and does not occupy
  the queue. Bank-level parallelism, row-buffer hits, and scheduler
  reordering are not modeled; the quantity under study is head-of-line
  blocking at the queue itself.
* Arrivals are Poisson. Runs are seeded and fully deterministic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum

from .errors import ToolkitError

CACHE_LINE_BYTES = 64
MIN_REQUESTS = 10_000
MAX_UTILIZATION = 0.98
WARMUP_FRACTION = 0.10


class InvalidConfigError(ToolkitError):
    """Simulation parameters outside the supported ranges."""


class UnstableLoadError(ToolkitError):
    """Offered utilization at or beyond the stability cap."""


class InvalidUtilizationError(ToolkitError):
    """Analytic wait requested for utilization outside [0, 1)."""


class Routing(Enum):
    ROUND_ROBIN = "round-robin"
    UNIFORM_RANDOM = "uniform-random"


@dataclass(frozen=True)
class SimConfig:
    arrival_rate_per_ns: float
    subchannel_count: int = 1
    data_rate_mts: int = 5600
    burst_length: int = 16
    first_access_latency_ns: float = 14.0
    routing: Routing = Routing.ROUND_ROBIN
    duration_requests: int = 100_000
    seed: int = 0

    def __post_init__(self):
        if self.subchannel_count not in (1, 2):
            raise InvalidConfigError("sub-channel count must be 1 or 2")
        if self.burst_length not in (16, 32):
            raise InvalidConfigError("burst length must be 16 or 32")
        if self.data_rate_mts <= 0:
            raise InvalidConfigError("data rate must be positive")
        if self.arrival_rate_per_ns <= 0:
            raise InvalidConfigError("arrival rate must be positive")
        if self.first_access_latency_ns < 0:
            raise InvalidConfigError("first-access latency cannot be negative")
        if self.duration_requests < MIN_REQUESTS:
            raise InvalidConfigError(
                f"need at least {MIN_REQUESTS} requests for stable statistics"
            )

    @property
    def service_time_ns(self) -> float:
        # BL/2 clock cycles; the DRAM clock runs at data_rate/2 MHz.
        return (self.burst_length / 2) * (2000.0 / self.data_rate_mts)

    @property
    def offered_utilization(self) -> float:
        return self.arrival_rate_per_ns * self.service_time_ns / self.subchannel_count

    @property
    def peak_bandwidth_gbs(self) -> float:
        return self.subchannel_count * 32 * self.data_rate_mts / 8000.0

    @classmethod
    def from_utilization(cls, rho: float, **kwargs) -> "SimConfig":
        """Build a config whose per-queue offered utilization equals rho."""
        if rho <= 0:
            raise InvalidConfigError("utilization must be positive")
        burst_length = kwargs.get("burst_length", 16)
        data_rate_mts = kwargs.get("data_rate_mts", 5600)
        subchannels = kwargs.get("subchannel_count", 1)
        service = (burst_length / 2) * (2000.0 / data_rate_mts)
        return cls(arrival_rate_per_ns=rho * subchannels / service, **kwargs)


@dataclass(frozen=True)
class QueueSimResult:
    mean_total_latency_ns: float
    mean_queue_wait_ns: float
    p95_latency_ns: float
    achieved_utilization: float
    throughput_gbs: float
    requests_served: int
    max_concurrent_bursts: int


@dataclass(frozen=True)
class _Trace:
    waits: list[float]
    makespan_ns: float
    max_concurrent: int


def _run_events(config: SimConfig) -> _Trace:
    n = config.duration_requests
    sc = config.subchannel_count
    service = config.service_time_ns
    arrival_rng = random.Random(config.seed)
    # Separate stream so 1-SC and 2-SC runs with one seed share arrivals.
    route_rng = random.Random(f"{config.seed}:routing")

    waits = [0.0] * n
    busy_events: list[tuple[float, int]] = []
    last_departure = [0.0] * sc
    t = 0.0
    uniform = sc == 2 and config.routing is Routing.UNIFORM_RANDOM
    queue_toggle = 0
    for i in range(n):
        t += arrival_rng.expovariate(config.arrival_rate_per_ns)
        if sc == 1:
            q = 0
        elif uniform:
            q = route_rng.randrange(2)
        else:
            q = queue_toggle
            queue_toggle ^= 1
        start = t if t >= last_departure[q] else last_departure[q]
        departure = start + service
        waits[i] = start - t
        last_departure[q] = departure
        if sc == 2:
            busy_events.append((start, 1))
            busy_events.append((departure, -1))

    if sc == 1:
        max_concurrent = 1 if n else 0
    else:
        # Departures sort before starts at equal times: back-to-back service
        # on one queue is not concurrency.
        busy_events.sort(key=lambda ev: (ev[0], ev[1]))
        level = 0
        max_concurrent = 0
        for _, delta in busy_events:
            level += delta
            if level > max_concurrent:
                max_concurrent = level
    return _Trace(waits, max(last_departure), max_concurrent)


def run_simulation(config: SimConfig) -> QueueSimResult:
    """Serve `duration_requests` Poisson arrivals and summarize latency.

    Statistics cover requests after a warm-up discard of the first 10%.
    Raises UnstableLoadError when offered utilization reaches 0.98.
    """
    rho = config.offered_utilization
    if rho >= MAX_UTILIZATION:
        raise UnstableLoadError(
            f"offered utilization {rho:.3f} exceeds the {MAX_UTILIZATION} stability cap"
        )
    trace = _run_events(config)
    discard = int(config.duration_requests * WARMUP_FRACTION)
    kept = trace.waits[discard:]
    served = len(kept)
    fixed = config.first_access_latency_ns + config.service_time_ns
    mean_wait = sum(kept) / served
    totals = sorted(w + fixed for w in kept)
    p95 = totals[max(0, math.ceil(0.95 * served) - 1)]
    busy_ns = config.duration_requests * config.service_time_ns
    utilization = busy_ns / (config.subchannel_count * trace.makespan_ns)
    throughput = config.duration_requests * CACHE_LINE_BYTES / trace.makespan_ns
    return QueueSimResult(
        mean_total_latency_ns=mean_wait + fixed,
        mean_queue_wait_ns=mean_wait,
        p95_latency_ns=p95,
        achieved_utilization=utilization,
        throughput_gbs=throughput,
        requests_served=served,
        max_concurrent_bursts=trace.max_concurrent,
    )


def latency_histogram(config: SimConfig, bins: int = 50) -> list[tuple[float, float, int]]:
    """(bin_start_ns, bin_end_ns, count) over post-warmup total latencies."""
    if bins < 1:
        raise InvalidConfigError("need at least one histogram bin")
    trace = _run_events(config)
    discard = int(config.duration_requests * WARMUP_FRACTION)
    fixed = config.first_access_latency_ns + config.service_time_ns
    totals = [w + fixed for w in trace.waits[discard:]]
    low = min(totals)
    high = max(totals)
    width = (high - low) / bins or 1.0
    counts = [0] * bins
    for value in totals:
        idx = min(int((value - low) / width), bins - 1)
        counts[idx] += 1
    return [(low + i * width, low + (i + 1) * width, counts[i]) for i in range(bins)]


def analytic_md1_wait(rho: float, service_time_ns: float) -> float:
    """Mean queue wait of an M/D/1 queue: rho * S / (2 * (1 - rho))."""
    if not 0.0 <= rho < 1.0:
        raise InvalidUtilizationError(f"utilization must be in [0, 1), got {rho}")
    return rho * service_time_ns / (2.0 * (1.0 - rho))


@dataclass(frozen=True)
class ScComparison:
    """Single-queue vs dual-queue latency at equal aggregate load."""

    aggregate_rate_per_ns: float
    result_1sc: QueueSimResult
    result_2sc: QueueSimResult
    latency_1sc_ns: float
    latency_2sc_ns: float
    relative_increase: float
    # Published estimate for context; reported, never asserted.
    reference_band_pct: tuple[float, float] = (15.0, 25.0)


def compare_sc_counts(base: SimConfig, aggregate_rate_per_ns: float) -> ScComparison:
    """Run 1-SC and 2-SC configs against the same aggregate arrival rate."""
    common = dict(
        data_rate_mts=base.data_rate_mts,
        burst_length=base.burst_length,
        first_access_latency_ns=base.first_access_latency_ns,
        routing=base.routing,
        duration_requests=base.duration_requests,
        seed=base.seed,
    )
    one = run_simulation(SimConfig(aggregate_rate_per_ns, subchannel_count=1, **common))
    two = run_simulation(SimConfig(aggregate_rate_per_ns, subchannel_count=2, **common))
    lat1 = one.mean_total_latency_ns
    lat2 = two.mean_total_latency_ns
    return ScComparison(
        aggregate_rate_per_ns=aggregate_rate_per_ns,
        result_1sc=one,
        result_2sc=two,
        latency_1sc_ns=lat1,
        latency_2sc_ns=lat2,
        relative_increase=(lat1 - lat2) / lat2,
    )


def concurrency_demo(config: SimConfig) -> int:
    """Maximum number of bursts observed in service simultaneously."""
    return run_simulation(config).max_concurrent_bursts
