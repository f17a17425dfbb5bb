"""Loader for the shared JSON scenario file used by the CLI subcommands.

The schema is published in schema/config.schema.json. All sections are
optional; subcommands read the ones they need and CLI flags win over file
values.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .config import MemoryConfig
from .errors import ConfigFileError
from .queuesim import InvalidConfigError, Routing, SimConfig
from .training import InstalledModule, PlatformModel, module_kind, platform_model


def load_document(path: str | Path) -> dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as fin:
            doc = json.load(fin)
    except OSError as exc:
        raise ConfigFileError(f"cannot read scenario file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigFileError(f"scenario file {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigFileError(f"scenario file {path} must hold a JSON object at top level")
    return doc


def _require(entry: dict, key: str, where: str) -> Any:
    if key not in entry:
        raise ConfigFileError(f"{where}: missing required field {key!r}")
    return entry[key]


def parse_memory_configs(doc: dict[str, Any]) -> list[tuple[str, MemoryConfig]]:
    entries = doc.get("memory_configs", [])
    if not isinstance(entries, list):
        raise ConfigFileError("memory_configs must be an array")
    parsed = []
    for i, entry in enumerate(entries):
        where = f"memory_configs[{i}]"
        if not isinstance(entry, dict):
            raise ConfigFileError(f"{where}: expected an object")
        label = _require(entry, "label", where)
        standard = str(_require(entry, "standard", where)).upper()
        if standard not in ("DDR4", "DDR5"):
            raise ConfigFileError(f"{where}: standard must be DDR4 or DDR5")
        dimms = entry.get("dimm_count")
        try:
            if standard == "DDR4":
                cfg = MemoryConfig.ddr4(
                    channels=int(entry.get("channels", 1)),
                    data_rate_mts=int(_require(entry, "data_rate_mts", where)),
                    dimm_count=None if dimms is None else int(dimms),
                    bus_efficiency=entry.get("bus_efficiency"),
                )
            else:
                cfg = MemoryConfig.ddr5(
                    channels=int(entry.get("channels", 1)),
                    subchannels=int(entry.get("subchannels_per_channel", 2)),
                    data_rate_mts=int(_require(entry, "data_rate_mts", where)),
                    burst_length=int(entry.get("burst_length", 16)),
                    dimm_count=None if dimms is None else int(dimms),
                    bus_efficiency=entry.get("bus_efficiency"),
                )
        except (ValueError, TypeError) as exc:
            raise ConfigFileError(f"{where}: {exc}") from exc
        parsed.append((str(label), cfg))
    return parsed


def parse_population(doc: dict[str, Any]) -> tuple[PlatformModel, dict[str, InstalledModule | None]]:
    platform_name = doc.get("platform")
    if platform_name is None:
        raise ConfigFileError("scenario file has no 'platform' entry")
    try:
        platform = platform_model(str(platform_name))
    except ValueError as exc:
        raise ConfigFileError(str(exc)) from exc
    slots_doc = doc.get("slots", {})
    if not isinstance(slots_doc, dict):
        raise ConfigFileError("'slots' must map slot ids to module kinds")
    population: dict[str, InstalledModule | None] = {slot: None for slot in platform.slots}
    for slot, kind in slots_doc.items():
        if kind is None:
            continue
        try:
            population[str(slot)] = module_kind(str(kind))
        except ValueError as exc:
            raise ConfigFileError(str(exc)) from exc
    return platform, population


def parse_workloads(doc: dict[str, Any]) -> list[tuple[str, float | None]]:
    entries = doc.get("workloads", [])
    if not isinstance(entries, list):
        raise ConfigFileError("workloads must be an array")
    parsed = []
    for i, entry in enumerate(entries):
        where = f"workloads[{i}]"
        if not isinstance(entry, dict):
            raise ConfigFileError(f"{where}: expected an object")
        name = str(_require(entry, "name", where))
        intensity = entry.get("arithmetic_intensity")
        if intensity is not None:
            intensity = float(intensity)
            if intensity < 0:
                raise ConfigFileError(f"{where}: arithmetic_intensity cannot be negative")
        parsed.append((name, intensity))
    return parsed


def parse_sim_config(doc: dict[str, Any]) -> SimConfig | None:
    sim = doc.get("simulation")
    if sim is None:
        return None
    if not isinstance(sim, dict):
        raise ConfigFileError("'simulation' must be an object")
    kwargs: dict[str, Any] = {}
    for src, dst in (
        ("subchannels", "subchannel_count"),
        ("data_rate_mts", "data_rate_mts"),
        ("burst_length", "burst_length"),
        ("first_access_latency_ns", "first_access_latency_ns"),
        ("requests", "duration_requests"),
        ("seed", "seed"),
    ):
        if src in sim:
            kwargs[dst] = sim[src]
    if "routing" in sim:
        try:
            kwargs["routing"] = Routing(sim["routing"])
        except ValueError as exc:
            raise ConfigFileError(f"unknown routing {sim['routing']!r}") from exc
    rate = sim.get("lambda_per_ns")
    rho = sim.get("rho")
    if rate is not None and rho is not None:
        raise ConfigFileError("give either lambda_per_ns or rho, not both")
    try:
        if rho is not None:
            return SimConfig.from_utilization(float(rho), **kwargs)
        if rate is not None:
            return SimConfig(arrival_rate_per_ns=float(rate), **kwargs)
    except (TypeError, ValueError, InvalidConfigError) as exc:
        raise ConfigFileError(f"simulation section: {exc}") from exc
    raise ConfigFileError("simulation section needs lambda_per_ns or rho")
