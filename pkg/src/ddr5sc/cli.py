"""Command-line entry point.

Exit codes: 0 success, 1 I/O or scenario-file error, 2 decode/validation
error, 3 simulated boot failure. Output is plain UTF-8 with fixed decimal
formatting; no styling is ever emitted, so DDR5SC_NO_COLOR is honored
trivially.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import asdict, dataclass
from enum import Enum
from pathlib import Path

from . import __version__, bom, config, configfile, queuesim, report, roofline, spd, training
from .errors import ConfigFileError, ToolkitError
from .tables import render_csv, render_text

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_BOOT_FAILURE = 3


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record accompanying every file the CLI writes."""

    subcommand: str
    parameters: dict
    input_digests: dict
    version: str

    def as_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"


def _jsonable(value):
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _manifest(args: argparse.Namespace) -> RunManifest:
    skip = {"func", "out", "command", "subcommand"}
    params = {
        k: _jsonable(v) for k, v in sorted(vars(args).items())
        if k not in skip and not callable(v)
    }
    digests = {}
    for key in ("config", "image"):
        value = getattr(args, key, None)
        if value:
            digests[str(value)] = _digest(value)
    label = getattr(args, "command", "?")
    sub = getattr(args, "subcommand", None)
    if sub:
        label = f"{label} {sub}"
    return RunManifest(label, params, digests, __version__)


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        Path(f"{out}.manifest.json").write_text(_manifest(args).as_json(), encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_json(args: argparse.Namespace, payload: dict) -> None:
    _emit(args, json.dumps(_jsonable(payload)))


# ---------------------------------------------------------------- spd


def _parse_byte_literal(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise ToolkitError(f"not a byte literal: {text!r} (use e.g. 0x22 or 0b00100010)") from None


def cmd_spd_decode(args) -> int:
    if args.image:
        raw = spd.extract_byte235(Path(args.image).read_bytes())
    elif args.byte is not None:
        raw = _parse_byte_literal(args.byte)
    else:
        raise ToolkitError("spd decode needs a byte literal or --image")
    desc = spd.decode_byte235(raw)
    _emit_json(args, {
        "sub_channels": desc.sub_channel_count,
        "ecc_bits": desc.bus_extension_bits,
        "primary_width_bits": desc.primary_bus_width_bits,
        "module_class": spd.classify_module(desc).value,
    })
    return EXIT_OK


def cmd_spd_encode(args) -> int:
    try:
        desc = spd.SpdChannelBusWidth(args.sub_channels, args.ecc_bits, args.width)
    except ValueError as exc:
        raise ToolkitError(str(exc)) from exc
    _emit(args, f"0x{spd.encode_byte235(desc):02X}")
    return EXIT_OK


# ---------------------------------------------------------------- config


def _resolve_entries(args) -> list[tuple[str, config.MemoryConfig]]:
    if getattr(args, "config", None):
        entries = configfile.parse_memory_configs(configfile.load_document(args.config))
        if not entries:
            raise ConfigFileError(f"{args.config} has no memory_configs section")
        return entries
    if getattr(args, "names", None):
        entries = []
        for name in args.names.split(","):
            name = name.strip()
            if name not in config.NAMED_CONFIGS:
                raise ConfigFileError(
                    f"unknown config name {name!r}; known: {', '.join(sorted(config.NAMED_CONFIGS))}"
                )
            entries.append((name, config.NAMED_CONFIGS[name]))
        return entries
    return list(config.TABLE1_ENTRIES)


def cmd_config_compare(args) -> int:
    rows = config.compare_configs(_resolve_entries(args))
    headers = ("Label", "Standard", "DIMMs", "Bus", "BL", "Tx Width",
               "Speed", "Peak (GB/s)", "Effective (GB/s)")
    cells = [
        (r.label, r.standard, str(r.dimms), f"{r.bus_bits}-bit", str(r.burst_length),
         f"{r.tx_width_bytes} B", r.speed_label, f"{r.peak_gbs:.1f}", f"{r.effective_gbs:.1f}")
        for r in rows
    ]
    if args.csv:
        _emit(args, render_csv(headers, cells))
    else:
        _emit(args, render_text(headers, cells, right_align={2, 4, 7, 8}))
    return EXIT_OK


# ---------------------------------------------------------------- roofline


def _named_config(name: str) -> config.MemoryConfig:
    cfg = config.NAMED_CONFIGS.get(name)
    if cfg is None:
        raise ConfigFileError(
            f"unknown config name {name!r}; known: {', '.join(sorted(config.NAMED_CONFIGS))}"
        )
    return cfg


def _platform_for(args, memory_name: str) -> roofline.ComputePlatform:
    return roofline.ComputePlatform(
        peak_compute_flops=args.peak_flops,
        memory_config=_named_config(memory_name),
        use_peak_bandwidth=args.use_peak,
    )


def _classify_workload_rows(args, platform: roofline.ComputePlatform) -> list[tuple]:
    rows = []
    for name, intensity in configfile.parse_workloads(configfile.load_document(args.config)):
        if intensity is not None:
            limited = roofline.is_bandwidth_limited(intensity, platform)
            attainable = roofline.attainable_throughput(intensity, platform)
            rows.append((name, f"{intensity:g}", "yes" if limited else "no",
                         f"{attainable / 1e9:.1f}", ""))
        else:
            # no intensity given: fall back to the published deficit range
            profile = roofline.table3_lookup(name)
            rows.append((name, "", "", "", profile.deficit_display))
    return rows


def cmd_roofline_classify(args) -> int:
    platform = _platform_for(args, args.memory)
    if args.emit_plot_data:
        series = roofline.roofline_curve(platform, args.ai_min, args.ai_max, args.ai_points)
        csv_text = render_csv(
            ("intensity_flop_per_byte", "attainable_flops"),
            [(f"{i!r}", f"{a!r}") for i, a in series],
        )
        Path(args.emit_plot_data).write_text(csv_text, encoding="utf-8")
    if args.config:
        headers = ("Workload", "Intensity (FLOP/B)", "BW limited",
                   "Attainable (GFLOP/s)", "Published deficit")
        rows = _classify_workload_rows(args, platform)
        if not rows:
            raise ConfigFileError(f"{args.config} has no workloads section")
        renderer = render_csv if args.csv else render_text
        _emit(args, renderer(headers, rows))
        return EXIT_OK
    if args.intensity is None:
        raise ToolkitError("classify needs --intensity or --config with workloads")
    _emit_json(args, {
        "intensity_flop_per_byte": args.intensity,
        "bandwidth_gbs": platform.bandwidth_bytes_per_s / 1e9,
        "crossover_intensity": platform.crossover_intensity,
        "bandwidth_limited": roofline.is_bandwidth_limited(args.intensity, platform),
        "attainable_flops": roofline.attainable_throughput(args.intensity, platform),
    })
    return EXIT_OK


def cmd_roofline_deficit(args) -> int:
    if args.workload:
        profile = roofline.table3_lookup(args.workload)
        _emit_json(args, {
            "workload": profile.name,
            "bw_sensitivity": profile.bw_sensitivity.value,
            "deficit_range_pct": list(profile.deficit_range_pct),
            "deficit_display": profile.deficit_display,
            "source": "published projection (tabulated, not recomputed)",
        })
        return EXIT_OK
    if args.intensity is None:
        raise ToolkitError("deficit needs --workload or --intensity")
    full = _platform_for(args, args.memory_full)
    half = _platform_for(args, args.memory_half)
    deficit = roofline.roofline_deficit(args.intensity, full, half)
    _emit_json(args, {
        "intensity_flop_per_byte": args.intensity,
        "bandwidth_full_gbs": full.bandwidth_bytes_per_s / 1e9,
        "bandwidth_half_gbs": half.bandwidth_bytes_per_s / 1e9,
        "deficit_fraction": deficit,
    })
    return EXIT_OK


def cmd_roofline_inversion(args) -> int:
    rep = roofline.detect_inversion(
        _named_config(args.candidate), _named_config(args.baseline),
        candidate_label=args.candidate, baseline_label=args.baseline,
    )
    _emit_json(args, asdict(rep))
    return EXIT_OK


def cmd_roofline_igpu(args) -> int:
    rep = roofline.igpu_margin(_named_config(args.memory), (args.demand_low, args.demand_high))
    payload = asdict(rep)
    payload["sustained_gbs_display"] = roofline.sustained_gbs_display(_named_config(args.memory))
    _emit_json(args, payload)
    return EXIT_OK


# ---------------------------------------------------------------- post / matrix


def _parse_slots(platform: training.PlatformModel, text: str) -> dict:
    population: dict[str, training.InstalledModule | None] = {s: None for s in platform.slots}
    if not text:
        return population
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ToolkitError(f"slot assignment must look like A=single-sc, got {item!r}")
        slot, kind = item.split("=", 1)
        population[slot.strip()] = training.module_kind(kind.strip())
    return population


def _resolve_population(args) -> tuple[training.PlatformModel, dict]:
    if args.config:
        platform, population = configfile.parse_population(configfile.load_document(args.config))
        if args.platform:
            platform = training.platform_model(args.platform)
        if args.slots:
            population = _parse_slots(platform, args.slots)
        return platform, population
    if not args.platform:
        raise ToolkitError("post needs --platform (or --config with a platform entry)")
    platform = training.platform_model(args.platform)
    return platform, _parse_slots(platform, args.slots or "")


def _post_text(platform: training.PlatformModel, population: dict,
               result: training.PostResult) -> str:
    slot_desc = " ".join(
        f"{slot}={population[slot].kind if population[slot] else '(empty)'}"
        for slot in platform.slots
    )
    lines = [
        f"platform:        {platform.vendor.value}",
        f"slots:           {slot_desc}",
        f"outcome:         {result.outcome.value}",
        f"active bus bits: {result.total_active_bus_bits}",
    ]
    if result.trained_units:
        trained = ", ".join(f"{u.controller}.{u.unit}({u.width_bits}b)" for u in result.trained_units)
        lines.append(f"trained units:   {trained}")
    if result.failure_reason:
        lines.append(f"reason:          {result.failure_reason}")
    for note in result.notes:
        lines.append(f"note:            {note}")
    return "\n".join(lines)


def cmd_post(args) -> int:
    platform, population = _resolve_population(args)
    result = training.simulate_post(platform, population)
    if args.json:
        payload = asdict(result)
        payload["platform"] = platform.vendor.value
        if args.mts and result.outcome is training.PostOutcome.BOOT_OK:
            payload["active_bandwidth_gbs"] = training.active_bandwidth_gbs(
                platform, population, args.mts)
        _emit_json(args, payload)
    else:
        text = _post_text(platform, population, result)
        if args.mts and result.outcome is training.PostOutcome.BOOT_OK:
            bw = training.active_bandwidth_gbs(platform, population, args.mts)
            text += f"\nactive bandwidth: {bw:.1f} GB/s at {args.mts} MT/s"
        _emit(args, text)
    return EXIT_OK if result.outcome is training.PostOutcome.BOOT_OK else EXIT_BOOT_FAILURE


def cmd_matrix(args) -> int:
    platform = training.platform_model(args.platform)
    kinds = [training.module_kind(k.strip()) for k in args.kinds.split(",") if k.strip()]
    cells = training.population_matrix(platform, kinds)
    headers = tuple(f"slot {s}" for s in platform.slots) + ("Outcome", "Active bits")
    rows = []
    for cell in cells:
        assignment = [kind if kind else "(empty)" for _, kind in cell.assignment]
        rows.append((*assignment, cell.result.outcome.value,
                     str(cell.result.total_active_bus_bits)))
    renderer = render_csv if args.csv else render_text
    _emit(args, renderer(headers, rows))
    return EXIT_OK


# ---------------------------------------------------------------- simulate


def _sim_config_from(args) -> queuesim.SimConfig:
    base = configfile.parse_sim_config(configfile.load_document(args.config)) if args.config else None
    kwargs = {
        "subchannel_count": args.sc if args.sc is not None else (base.subchannel_count if base else 1),
        "data_rate_mts": args.mts if args.mts is not None else (base.data_rate_mts if base else 5600),
        "burst_length": args.bl if args.bl is not None else (base.burst_length if base else 16),
        "first_access_latency_ns": args.first_access if args.first_access is not None
                                   else (base.first_access_latency_ns if base else 14.0),
        "duration_requests": args.requests if args.requests is not None
                             else (base.duration_requests if base else 100_000),
        "seed": args.seed if args.seed is not None else (base.seed if base else 0),
        "routing": queuesim.Routing(args.routing) if args.routing
                   else (base.routing if base else queuesim.Routing.ROUND_ROBIN),
    }
    if args.rho is not None and args.rate is not None:
        raise ToolkitError("--rho and --lambda are mutually exclusive")
    if args.rho is not None:
        return queuesim.SimConfig.from_utilization(args.rho, **kwargs)
    if args.rate is not None:
        return queuesim.SimConfig(arrival_rate_per_ns=args.rate, **kwargs)
    if base is not None:
        return queuesim.SimConfig(arrival_rate_per_ns=base.arrival_rate_per_ns, **kwargs)
    raise ToolkitError("simulate needs --rho or --lambda (or a scenario file)")


def _sim_result_rows(cfg: queuesim.SimConfig, res: queuesim.QueueSimResult) -> list[tuple[str, str]]:
    return [
        ("sub_channels", str(cfg.subchannel_count)),
        ("data_rate_mts", str(cfg.data_rate_mts)),
        ("burst_length", str(cfg.burst_length)),
        ("routing", cfg.routing.value),
        ("seed", str(cfg.seed)),
        ("service_time_ns", f"{cfg.service_time_ns:.3f}"),
        ("offered_utilization", f"{cfg.offered_utilization:.3f}"),
        ("requests_served", str(res.requests_served)),
        ("mean_queue_wait_ns", f"{res.mean_queue_wait_ns:.3f}"),
        ("mean_total_latency_ns", f"{res.mean_total_latency_ns:.3f}"),
        ("p95_latency_ns", f"{res.p95_latency_ns:.3f}"),
        ("achieved_utilization", f"{res.achieved_utilization:.3f}"),
        ("throughput_gbs", f"{res.throughput_gbs:.1f}"),
        ("max_concurrent_bursts", str(res.max_concurrent_bursts)),
    ]


def cmd_simulate(args) -> int:
    cfg = _sim_config_from(args)
    if args.compare:
        comparison = queuesim.compare_sc_counts(cfg, cfg.arrival_rate_per_ns)
        band_lo, band_hi = comparison.reference_band_pct
        rows = [
            ("aggregate_lambda_per_ns", f"{comparison.aggregate_rate_per_ns!r}"),
            ("mean_total_latency_1sc_ns", f"{comparison.latency_1sc_ns:.3f}"),
            ("mean_total_latency_2sc_ns", f"{comparison.latency_2sc_ns:.3f}"),
            ("relative_increase_pct", f"{100 * comparison.relative_increase:.1f}"),
            ("published_estimate_pct", f"{band_lo:.0f}-{band_hi:.0f} (context only, not asserted)"),
        ]
        renderer = render_csv if args.csv else render_text
        _emit(args, renderer(("Metric", "Value"), rows))
        return EXIT_OK
    result = queuesim.run_simulation(cfg)
    if args.latency_csv:
        hist = queuesim.latency_histogram(cfg, bins=args.hist_bins)
        Path(args.latency_csv).write_text(
            render_csv(("bin_start_ns", "bin_end_ns", "count"),
                       [(f"{lo:.3f}", f"{hi:.3f}", str(n)) for lo, hi, n in hist]),
            encoding="utf-8",
        )
    rows = _sim_result_rows(cfg, result)
    renderer = render_csv if args.csv else render_text
    _emit(args, renderer(("Metric", "Value"), rows))
    return EXIT_OK


# ---------------------------------------------------------------- bom


def cmd_bom(args) -> int:
    pricing = bom.DiePricing(bom.Interval(args.price_low, args.price_high), args.generation)
    counts = bom.GENERATION_DIE_COUNTS[args.generation]
    if args.dies is not None:
        classes = [(f"{args.dies}-die module", args.dies)]
    else:
        classes = [("standard", counts["standard"]), ("single-sc", counts["single_sc"])]
    rows = []
    for label, dies in classes:
        interval = bom.module_bom_usd(dies, pricing)
        rows.append((label, str(dies), f"${interval.low:.2f}-${interval.high:.2f}"))
    ratio = bom.bom_ratio(counts["standard"], counts["single_sc"])
    if args.csv:
        text = render_csv(("Class", "Dies", "BOM (USD)"), rows)
        text += render_csv(("Component", "% of std. BOM", "Single-SC saving"), bom.bom_table_rows())
    else:
        text = f"Module BOM, {args.generation} generation, "
        text += f"${args.price_low:.2f}-${args.price_high:.2f} per die\n\n"
        text += render_text(("Class", "Dies", "BOM (USD)"), rows, right_align={1})
        text += f"\nDie-count saving ratio (standard vs single-SC): {ratio:.2f}\n"
        text += "\n" + report.table5().as_text()
    _emit(args, text)
    return EXIT_OK


# ---------------------------------------------------------------- report


def cmd_report(args) -> int:
    numbers = report.ALL_TABLES if args.all else (args.table,)
    if numbers == (None,):
        raise ToolkitError("report needs --table N or --all")
    _emit(args, report.render_report(tuple(numbers), "csv" if args.csv else "text"))
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ddr5sc",
        description="Modeling toolkit for single sub-channel (32-bit) DDR5 memory modules.",
        epilog="Output is plain UTF-8; DDR5SC_NO_COLOR is accepted and trivially honored.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", help="write output to this file (plus a .manifest.json sidecar)")

    # spd
    p_spd = sub.add_parser("spd", help="decode/encode the SPD bus-width descriptor byte")
    spd_sub = p_spd.add_subparsers(dest="subcommand", required=True)
    p_dec = spd_sub.add_parser("decode", help="decode a descriptor byte or an SPD image")
    p_dec.add_argument("byte", nargs="?", help="byte literal, e.g. 0x22 or 0b00100010")
    p_dec.add_argument("--image", help="raw SPD EEPROM dump; decodes the byte at offset 0xEB")
    add_out(p_dec)
    p_dec.set_defaults(func=cmd_spd_decode)
    p_enc = spd_sub.add_parser("encode", help="encode a descriptor byte from field values")
    p_enc.add_argument("--sub-channels", type=int, required=True, choices=(1, 2, 4, 8))
    p_enc.add_argument("--ecc-bits", type=int, default=0, choices=(0, 4, 8))
    p_enc.add_argument("--width", type=int, required=True, choices=(8, 16, 32, 64))
    add_out(p_enc)
    p_enc.set_defaults(func=cmd_spd_encode)

    # config
    p_cfg = sub.add_parser("config", help="bandwidth/width comparison tables")
    cfg_sub = p_cfg.add_subparsers(dest="subcommand", required=True)
    p_cmp = cfg_sub.add_parser("compare", help="tabulate labeled population scenarios")
    p_cmp.add_argument("--config", help="scenario file with a memory_configs array")
    p_cmp.add_argument("--names", help="comma-separated built-in config names")
    p_cmp.add_argument("--csv", action="store_true")
    add_out(p_cmp)
    p_cmp.set_defaults(func=cmd_config_compare)

    # roofline
    p_roof = sub.add_parser("roofline", help="bandwidth-limited classification and reports")
    roof_sub = p_roof.add_subparsers(dest="subcommand", required=True)

    def add_platform_flags(p):
        p.add_argument("--peak-flops", type=float, default=1e11,
                       help="platform peak compute in FLOP/s (default 1e11)")
        p.add_argument("--use-peak", action="store_true",
                       help="use peak instead of effective bandwidth")

    p_cls = roof_sub.add_parser("classify", help="memory- vs compute-bound verdict")
    p_cls.add_argument("--intensity", type=float, help="FLOP per byte")
    p_cls.add_argument("--config", help="scenario file with a workloads array")
    p_cls.add_argument("--csv", action="store_true")
    p_cls.add_argument("--memory", default="single-sc-5600")
    add_platform_flags(p_cls)
    p_cls.add_argument("--emit-plot-data", metavar="FILE",
                       help="write an (intensity, attainable) CSV series")
    p_cls.add_argument("--ai-min", type=float, default=0.01)
    p_cls.add_argument("--ai-max", type=float, default=100.0)
    p_cls.add_argument("--ai-points", type=int, default=64)
    add_out(p_cls)
    p_cls.set_defaults(func=cmd_roofline_classify)

    p_def = roof_sub.add_parser("deficit", help="throughput loss between two bandwidths")
    p_def.add_argument("--workload", help="published workload name (tabulated path)")
    p_def.add_argument("--intensity", type=float, help="FLOP per byte (analytic path)")
    p_def.add_argument("--memory-full", default="dual-sc-5600")
    p_def.add_argument("--memory-half", default="single-sc-5600")
    add_platform_flags(p_def)
    add_out(p_def)
    p_def.set_defaults(func=cmd_roofline_deficit)

    p_inv = roof_sub.add_parser("inversion", help="effective-bandwidth inversion check")
    p_inv.add_argument("--candidate", default="single-sc-4800")
    p_inv.add_argument("--baseline", default="ddr4-3200")
    add_out(p_inv)
    p_inv.set_defaults(func=cmd_roofline_inversion)

    p_igpu = roof_sub.add_parser("igpu", help="iGPU bandwidth headroom verdict")
    p_igpu.add_argument("--memory", default="single-sc-5600")
    p_igpu.add_argument("--demand-low", type=float, default=18.0)
    p_igpu.add_argument("--demand-high", type=float, default=22.0)
    add_out(p_igpu)
    p_igpu.set_defaults(func=cmd_roofline_igpu)

    # post
    p_post = sub.add_parser("post", help="simulate POST/training for one population")
    p_post.add_argument("--platform", choices=sorted(training.PLATFORM_CLI_NAMES))
    p_post.add_argument("--slots", help="comma-separated slot assignments, e.g. A=single-sc")
    p_post.add_argument("--config", help="scenario file with platform/slots entries")
    p_post.add_argument("--mts", type=int, help="also report active bandwidth at this data rate")
    p_post.add_argument("--json", action="store_true")
    add_out(p_post)
    p_post.set_defaults(func=cmd_post)

    # matrix
    p_mat = sub.add_parser("matrix", help="POST outcomes over every slot assignment")
    p_mat.add_argument("--platform", required=True, choices=sorted(training.PLATFORM_CLI_NAMES))
    p_mat.add_argument("--kinds", default="single-sc,standard",
                       help="comma-separated module kinds (default single-sc,standard)")
    p_mat.add_argument("--csv", action="store_true")
    add_out(p_mat)
    p_mat.set_defaults(func=cmd_matrix)

    # simulate
    p_sim = sub.add_parser("simulate", help="queue-latency discrete-event simulation")
    p_sim.add_argument("--sc", type=int, choices=(1, 2))
    p_sim.add_argument("--mts", type=int)
    p_sim.add_argument("--bl", type=int, choices=(16, 32))
    p_sim.add_argument("--lambda", dest="rate", type=float,
                       help="arrival rate in requests/ns (exclusive with --rho)")
    p_sim.add_argument("--rho", type=float,
                       help="per-queue offered utilization (exclusive with --lambda)")
    p_sim.add_argument("--requests", type=int)
    p_sim.add_argument("--seed", type=int)
    p_sim.add_argument("--routing", choices=[r.value for r in queuesim.Routing])
    p_sim.add_argument("--first-access", type=float, help="first-access latency in ns")
    p_sim.add_argument("--config", help="scenario file with a simulation section")
    p_sim.add_argument("--compare", action="store_true",
                       help="compare 1 vs 2 sub-channels at equal aggregate load")
    p_sim.add_argument("--latency-csv", metavar="FILE", help="write a latency histogram CSV")
    p_sim.add_argument("--hist-bins", type=int, default=50)
    p_sim.add_argument("--csv", action="store_true")
    add_out(p_sim)
    p_sim.set_defaults(func=cmd_simulate)

    # bom
    p_bom = sub.add_parser("bom", help="module bill-of-materials intervals")
    p_bom.add_argument("--dies", type=int, help="explicit die count (default: both module classes)")
    p_bom.add_argument("--price-low", type=float, default=3.50)
    p_bom.add_argument("--price-high", type=float, default=4.50)
    p_bom.add_argument("--generation", choices=sorted(bom.GENERATION_DIE_COUNTS), default="16Gb")
    p_bom.add_argument("--csv", action="store_true")
    add_out(p_bom)
    p_bom.set_defaults(func=cmd_bom)

    # report
    p_rep = sub.add_parser("report", help="regenerate the five standard tables")
    p_rep.add_argument("--table", type=int, choices=report.ALL_TABLES)
    p_rep.add_argument("--all", action="store_true")
    p_rep.add_argument("--csv", action="store_true")
    add_out(p_rep)
    p_rep.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except training.NotBootedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOOT_FAILURE
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())
