"""``ichannel`` command-line front end.

Exit codes: 0 success, 1 bad configuration, 2 invalid channel, 3 the
requested capacity formula does not apply to the channel's regime.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import geometry
from .channel import (
    HETERODYNE, HOMODYNE, JOINT, PARAM_KEYS, ChannelParams, FresnelGeometry,
    detection_noise, fresnel_summary, validate,
)
from .errors import ChannelError, ConfigError, RegimeError
from .han_kobayashi import HK_BUILDERS, PowerSplit, sweep_splits
from .presets import FIG3_SPLIT, FIGURE_SERIES, PRESETS, figure_of
from .regimes import (
    check_quantum_vsi, classify_coherent, strong_region_coherent,
    strong_region_minentropy_hull, strong_region_quantum_conjectured, vsi_region,
)
from .svg import render

EXIT_OK, EXIT_CONFIG, EXIT_INVALID, EXIT_REGIME = 0, 1, 2, 3

STRATEGIES = (
    "vsi-homodyne", "vsi-heterodyne", "vsi-joint",
    "strong-homodyne", "strong-heterodyne", "strong-minentropy-hull", "strong-quantum",
    "hk-homodyne", "hk-heterodyne", "hk-quantum", "hk-minentropy-hull",
)


class Job:
    """Parsed configuration: channel, optional geometry, split and grid."""

    def __init__(self, name, params, geometry=None, split=None, grid=None, figure=None):
        self.name = name
        self.params = params
        self.geometry = geometry
        self.split = split
        self.grid = grid
        self.figure = figure


def _number(doc, key):
    try:
        value = doc[key]
    except KeyError:
        raise ConfigError(f"missing key {key!r}") from None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key!r} must be a number, got {value!r}")
    return float(value)


def load_job(source: str) -> Job:
    """Read a preset name or a JSON config file."""
    if source in PRESETS and not Path(source).exists():
        split = PowerSplit(*FIG3_SPLIT) if figure_of(source) == 3 else None
        return Job(source, PRESETS[source], split=split, figure=figure_of(source))
    try:
        doc = json.loads(Path(source).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {source!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON in {source!r}: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    # accept a bare channel document or one nested under "channel"
    channel = doc.get("channel", doc)
    params = ChannelParams(**{k: _number(channel, k) for k in PARAM_KEYS})

    geom = None
    if "geometry" in channel:
        gdoc = channel["geometry"]
        try:
            geom = FresnelGeometry(_number(gdoc, "At"), _number(gdoc, "Ar"),
                                   _number(gdoc, "wavelength"), _number(gdoc, "L"))
        except ChannelError as exc:
            raise ConfigError(str(exc)) from None
    split = None
    if "split" in doc:
        try:
            split = PowerSplit(_number(doc["split"], "lambda1"), _number(doc["split"], "lambda2"))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    grid = int(_number(doc["sweep"], "grid")) if "sweep" in doc else None
    figure = doc.get("figure")
    return Job(Path(source).stem, params, geom, split, grid, figure)


def _parse_split(text: str | None, job: Job) -> PowerSplit | None:
    if text is None:
        return job.split
    try:
        l1, l2 = (float(t) for t in text.split(","))
        return PowerSplit(l1, l2)
    except ValueError as exc:
        raise ConfigError(f"--split expects 'l1,l2' in [0,1], got {text!r}: {exc}") from None


def build_region(name: str, params: ChannelParams, split=None, force=False,
                 family: str = "matched") -> geometry.RatePolytope:
    if name not in STRATEGIES:
        raise ConfigError(f"unknown strategy {name!r}; choose from {', '.join(STRATEGIES)}")
    kind, _, det = name.partition("-")
    dets = {"homodyne": HOMODYNE, "heterodyne": HETERODYNE, "joint": JOINT}
    if kind == "vsi":
        return vsi_region(params, dets[det], force=force)
    if name == "strong-quantum":
        return strong_region_quantum_conjectured(params)
    if name == "strong-minentropy-hull":
        return strong_region_minentropy_hull(params, family)
    if kind == "strong":
        return strong_region_coherent(params, dets[det], force=force)
    if split is None:
        raise ConfigError(f"strategy {name} needs a power split (--split l1,l2)")
    return HK_BUILDERS[name](params, split)


def regime_report(name: str, params: ChannelParams) -> dict:
    if name.endswith("homodyne"):
        return classify_coherent(params, HOMODYNE).to_json()
    if name.endswith("heterodyne"):
        return classify_coherent(params, HETERODYNE).to_json()
    return check_quantum_vsi(params).to_json()


def summarize(name: str, region: geometry.RatePolytope, params: ChannelParams) -> dict:
    vs = geometry.vertices(region)
    return {
        "strategy": name,
        "label": region.label,
        "annotations": list(region.annotations),
        "clamped": region.clamped,
        "regime_report": regime_report(name, params),
        "area": geometry.area(region),
        "corner_rates": {
            "r1_max": max(v.r1 for v in vs),
            "r2_max": max(v.r2 for v in vs),
            "sum_max": max(v.r1 + v.r2 for v in vs),
        },
        "vertices": [[v.r1, v.r2] for v in vs],
    }


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _write(out: Path, filename: str, text: str) -> None:
    out.mkdir(parents=True, exist_ok=True)
    (out / filename).write_text(text, encoding="utf-8", newline="\n")


# -- commands -------------------------------------------------------------

def run_validate(job: Job, args) -> dict:
    p = validate(job.params)
    report = {
        "valid": True,
        "channel": p.to_dict(),
        "eta_bar1": p.eta_bar1,
        "eta_bar2": p.eta_bar2,
        "detection_noise": {
            det.value: vars(detection_noise(p, det)) for det in (HOMODYNE, HETERODYNE)
        },
    }
    if job.geometry is not None:
        report["fresnel"] = vars(fresnel_summary(job.geometry))
    return report


def run_classify(job: Job, args) -> dict:
    p = validate(job.params)
    return {
        "reports": [
            classify_coherent(p, HOMODYNE).to_json(),
            classify_coherent(p, HETERODYNE).to_json(),
            check_quantum_vsi(p).to_json(),
        ]
    }


def _require_strategies(args, count: int) -> list[str]:
    names = args.strategy or []
    if len(names) != count:
        raise ConfigError(f"{args.command} needs exactly {count} --strategy option(s)")
    return names


def run_region(job: Job, args) -> dict:
    p = validate(job.params)
    (name,) = _require_strategies(args, 1)
    region = build_region(name, p, _parse_split(args.split, job), args.force, args.family)
    summary = summarize(name, region, p)
    if args.out:
        _write(Path(args.out), f"{name}.csv", geometry.vertices_csv(region))
        _write(Path(args.out), f"{name}.json", _dump(summary))
    return summary


def run_sweep(job: Job, args) -> dict:
    p = validate(job.params)
    (name,) = _require_strategies(args, 1)
    if name not in HK_BUILDERS:
        raise ConfigError(f"sweep works on {', '.join(HK_BUILDERS)}; got {name!r}")
    grid = args.grid or job.grid or 11
    if grid < 2:
        raise ConfigError("--grid must be at least 2")
    region = sweep_splits(p, name, grid)
    summary = summarize(name, region, p)
    summary["grid"] = grid
    if args.out:
        stem = f"{name}-sweep{grid}"
        _write(Path(args.out), f"{stem}.csv", geometry.vertices_csv(region))
        _write(Path(args.out), f"{stem}.json", _dump(summary))
    return summary


def run_compare(job: Job, args) -> dict:
    p = validate(job.params)
    name_a, name_b = _require_strategies(args, 2)
    split = _parse_split(args.split, job)
    a = build_region(name_a, p, split, args.force, args.family)
    b = build_region(name_b, p, split, args.force, args.family)
    wa = geometry.region_difference_witness(a, b)
    wb = geometry.region_difference_witness(b, a)
    if wa is None and wb is None:
        relation = "A = B"
    elif wa is None:
        relation = "A ⊂ B"
    elif wb is None:
        relation = "B ⊂ A"
    else:
        relation = "incomparable"
    area_b = geometry.area(b)
    return {
        "a": name_a,
        "b": name_b,
        "a_subset_b": wa is None,
        "b_subset_a": wb is None,
        "relation": relation,
        "witness_a_not_b": None if wa is None else list(wa),
        "witness_b_not_a": None if wb is None else list(wb),
        "area_a": geometry.area(a),
        "area_b": area_b,
        "area_ratio": geometry.area(a) / area_b if area_b > 0 else None,
    }


def run_figure(job: Job, args) -> dict:
    p = validate(job.params)
    figure = args.figure or job.figure
    if figure not in FIGURE_SERIES:
        raise ConfigError("figure id must be 1, 2 or 3 (use a fig* preset or --figure)")
    split = _parse_split(args.split, job)
    if figure == 3 and split is None:
        split = PowerSplit(*FIG3_SPLIT)
    out = Path(args.out or ".")
    stem = job.name if job.name.startswith("fig") else f"fig{figure}-{job.name}"
    series, summaries = [], []
    for name in FIGURE_SERIES[figure]:
        # regions outside their capacity regime are still drawn, annotated
        region = build_region(name, p, split, force=True, family=args.family)
        vs = geometry.vertices(region)
        label = name + ("".join(f" [{a}]" for a in region.annotations if a != "achievable"))
        series.append((label, [(v.r1, v.r2) for v in vs]))
        _write(out, f"{stem}_{name}.csv", geometry.vertices_csv(region))
        summaries.append(summarize(name, region, p))
    _write(out, f"{stem}.svg", render(series, title=f"Figure {figure}: {job.name}"))
    return {"figure": figure, "preset": job.name, "svg": f"{stem}.svg", "series": summaries}


COMMANDS = {
    "validate": run_validate,
    "classify": run_classify,
    "region": run_region,
    "sweep": run_sweep,
    "compare": run_compare,
    "figure": run_figure,
}


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ichannel",
        description="Rate regions of the two-user optical interference channel.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", required=True,
                        help="JSON config path or preset (" + ", ".join(PRESETS) + ")")
    parser.add_argument("--strategy", action="append",
                        help="region builder; give twice for compare")
    parser.add_argument("--split", help="Han-Kobayashi personal power fractions 'l1,l2'")
    parser.add_argument("--grid", type=int, help="split sweep grid size (default 11)")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--force", action="store_true",
                        help="build capacity regions even outside their regime")
    parser.add_argument("--figure", type=int, choices=(1, 2, 3))
    parser.add_argument("--family", choices=("matched", "independent"), default="matched",
                        help="min-entropy decoder variations for the strong-interference hull")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        job = load_job(args.config)
        result = COMMANDS[args.command](job, args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ChannelError as exc:
        print(_dump({"valid": False, "error": type(exc).__name__, "detail": str(exc)}), end="")
        return EXIT_INVALID
    except RegimeError as exc:
        print(f"regime error: {exc}", file=sys.stderr)
        return EXIT_REGIME
    print(_dump(result), end="")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
