"""Command-line front end.

Exit codes: 0 success, 2 usage or configuration error, 3 degenerate input
(the generated divisor collapsed to the identity).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field, replace
from typing import List, Optional

from .curve import HyperellipticCurve, enumerate_points, find_point
from .errors import DegenerateResult, HecError, InvalidCurve, InvalidField, PointSearchExhausted
from .field import PrimeField, parse_int
from .jacobian import ENUMERATION_BUDGET, ORDER_LIMIT, enumerate_divisors, jacobian_order
from .sbox_analysis import AnalysisReport, analyze
from .sbox_gen import FAMILY_MAX, GenParams, Generation, SBox4, generate

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DEGENERATE = 3

REFERENCE_SBOX = SBox4.from_hex("C56B90AD3EF84712")

_EXAMPLE_F = ["3", "1", "2", "0", "0", "1"]  # x^5 + 2x^2 + x + 3
PRESETS = {
    "example1": {"prime": "11", "genus": 2, "h": [], "f": _EXAMPLE_F, "points": ["0", "1"], "key": "0xB"},
    "example2": {
        "prime": str(10**34 + 1233),
        "genus": 2,
        "h": [],
        "f": _EXAMPLE_F,
        "points": ["0", "1"],
        "key": "0xB",
    },
}

POINT_COUNT_LIMIT = 10**6


class ConfigError(Exception):
    def __init__(self, fieldname: str, message: str):
        super().__init__(f"{fieldname}: {message}")
        self.fieldname = fieldname


@dataclass
class RunConfig:
    prime: Optional[str] = None
    genus: Optional[int] = None
    h_coeffs: List[str] = field(default_factory=list)
    f_coeffs: List[str] = field(default_factory=list)
    point_xs: List[str] = field(default_factory=lambda: ["0", "1"])
    multiplicities: Optional[List[int]] = None
    key: Optional[str] = None
    wide_key: bool = False
    family_size: int = 1
    output_format: str = "table"


_FILE_KEYS = {
    "prime": "prime",
    "genus": "genus",
    "h": "h_coeffs",
    "f": "f_coeffs",
    "points": "point_xs",
    "mults": "multiplicities",
    "key": "key",
    "wide_key": "wide_key",
    "family": "family_size",
    "format": "output_format",
}


def _apply(cfg: RunConfig, data: dict, origin: str) -> RunConfig:
    updates = {}
    for k, v in data.items():
        if k == "preset":
            continue
        if k not in _FILE_KEYS:
            raise ConfigError(k, f"unknown key in {origin}")
        updates[_FILE_KEYS[k]] = v
    return replace(cfg, **updates)


def _split(text: str) -> List[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Preset, then config file, then explicit flags."""
    cfg = RunConfig()
    file_data = {}
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                file_data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError("config", str(exc)) from None
        if not isinstance(file_data, dict):
            raise ConfigError("config", "top level must be a JSON object")
    preset = args.preset or file_data.get("preset")
    if preset is not None:
        if preset not in PRESETS:
            raise ConfigError("preset", f"unknown preset {preset!r}")
        cfg = _apply(cfg, PRESETS[preset], "preset")
    cfg = _apply(cfg, file_data, "config file")
    flags = {}
    for name, attr in (("prime", "prime"), ("genus", "genus"), ("key", "key"), ("family", "family_size")):
        value = getattr(args, name, None)
        if value is not None:
            flags[attr] = value
    if getattr(args, "h", None) is not None:
        flags["h_coeffs"] = _split(args.h)
    if getattr(args, "f", None) is not None:
        flags["f_coeffs"] = _split(args.f)
    if getattr(args, "points", None) is not None:
        flags["point_xs"] = _split(args.points)
    if getattr(args, "mults", None) is not None:
        flags["multiplicities"] = _split(args.mults)
    if getattr(args, "wide_key", False):
        flags["wide_key"] = True
    if getattr(args, "format", None) is not None:
        flags["output_format"] = args.format
    return replace(cfg, **flags)


def _int(value, fieldname: str) -> int:
    try:
        return parse_int(value if isinstance(value, (int, str)) else str(value))
    except (ValueError, TypeError):
        raise ConfigError(fieldname, f"not an integer: {value!r}") from None


def build_curve(cfg: RunConfig) -> HyperellipticCurve:
    if cfg.prime is None:
        raise ConfigError("prime", "required (use --prime or --preset)")
    p = _int(cfg.prime, "prime")
    try:
        F = PrimeField(p)
    except InvalidField as exc:
        raise ConfigError("prime", str(exc)) from None
    if not cfg.f_coeffs:
        raise ConfigError("f", "coefficients required")
    h = [_int(c, "h") for c in cfg.h_coeffs]
    f = [_int(c, "f") for c in cfg.f_coeffs]
    genus = None if cfg.genus is None else _int(cfg.genus, "genus")
    try:
        return HyperellipticCurve(F, h, f, genus)
    except InvalidCurve as exc:
        name = "genus" if "genus" in str(exc) else ("h" if "deg h" in str(exc) else "f")
        raise ConfigError(name, str(exc)) from None


def _check_format(cfg: RunConfig):
    if cfg.output_format not in ("table", "json", "csv"):
        raise ConfigError("format", f"unknown format {cfg.output_format!r}")


def _check_family(cfg: RunConfig) -> int:
    n = _int(cfg.family_size, "family")
    if not 1 <= n <= FAMILY_MAX:
        raise ConfigError("family", f"must be in [1, {FAMILY_MAX}], got {n}")
    return n


def build_params(cfg: RunConfig) -> GenParams:
    _check_format(cfg)
    n = _check_family(cfg)
    curve = build_curve(cfg)
    if cfg.key is None:
        raise ConfigError("key", "required (use --key)")
    key = _int(cfg.key, "key")
    if key < 0:
        raise ConfigError("key", "must be nonnegative")
    if not cfg.wide_key and key > 0xF:
        raise ConfigError("key", f"{key} does not fit in 4 bits (pass --wide-key to allow)")
    xs = [_int(x, "points") for x in cfg.point_xs]
    if not xs:
        raise ConfigError("points", "at least one start x is required")
    mults = [1] * len(xs) if cfg.multiplicities is None else [_int(m, "mults") for m in cfg.multiplicities]
    if len(mults) != len(xs):
        raise ConfigError("mults", f"expected {len(xs)} multiplicities, got {len(mults)}")
    if any(m < 1 for m in mults):
        raise ConfigError("mults", "multiplicities must be positive")
    try:
        points = [(find_point(curve, x), m) for x, m in zip(xs, mults)]
    except PointSearchExhausted as exc:
        raise ConfigError("points", str(exc)) from None
    return GenParams(curve, points, key, n)


# -- rendering ----------------------------------------------------------------


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _box_lines(sbox: SBox4) -> List[str]:
    return [
        "x    : " + " ".join(f"{x:X}" for x in range(16)),
        "S(x) : " + " ".join(f"{v:X}" for v in sbox),
    ]


def _report_lines(report: AnalysisReport) -> List[str]:
    lines = [f"{k:<24}{v}" for k, v in report.scalar_metrics().items()]
    lines.append("sac_matrix (row = input bit, col = output bit):")
    for row in report.sac_matrix:
        lines.append("  " + "  ".join(f"{int(e * 16):>2}/16" for e in row))
    return lines


def _json_value(v):
    return v if isinstance(v, (bool, int, str)) else str(v)


def render_generate(gen: Generation, fmt: str, with_analysis: bool) -> str:
    sb = gen.sbox
    meta = gen.metadata()
    if fmt == "json":
        out = {"sbox": sb.hex(), "table": list(sb), "metadata": meta, "curve": gen.params.curve.describe()}
        if with_analysis:
            out["analysis"] = analyze(sb).to_json()
        return dump_json(out)
    if fmt == "csv":
        return _csv([
            ["name", "sbox", "key", "fold_rule", "completion_used"],
            ["Sb1", sb.hex(), meta["key"], meta["fold_rule"], str(meta["completion_used"]).lower()],
        ])
    lines = [f"Sb1 = {sb.hex()}", *_box_lines(sb), ""]
    for k in ("key", "fold_rule", "completion_used", "distinct_nibbles", "x_p", "y_p", "q", "curve_hash"):
        lines.append(f"{k:<18}{meta[k]}")
    if with_analysis:
        lines += ["", *_report_lines(analyze(sb))]
    return "\n".join(lines) + "\n"


def render_family(gen: Generation, fmt: str, with_analysis: bool) -> str:
    boxes = gen.family
    reports = [analyze(b) for b in boxes] if with_analysis else None
    if fmt == "json":
        entries = []
        for i, b in enumerate(boxes):
            e = {"name": f"Sb{i + 1}", "sbox": b.hex(), "table": list(b)}
            if reports:
                e["analysis"] = reports[i].to_json()
            entries.append(e)
        return dump_json({"family": entries, "metadata": gen.metadata()})
    if fmt == "csv":
        header = ["name", "sbox"]
        if reports:
            header += list(reports[0].scalar_metrics())
        rows = [header]
        for i, b in enumerate(boxes):
            row = [f"Sb{i + 1}", b.hex()]
            if reports:
                row += [str(v).lower() if isinstance(v, bool) else v for v in reports[i].scalar_metrics().values()]
            rows.append(row)
        return _csv(rows)
    lines = []
    for i, b in enumerate(boxes):
        line = f"Sb{i + 1:<3} {b.hex()}"
        if reports:
            m = reports[i].scalar_metrics()
            line += "  " + " ".join(f"{k}={v}" for k, v in m.items())
        lines.append(line)
    return "\n".join(lines) + "\n"


def render_analysis(sb: SBox4, fmt: str) -> str:
    report = analyze(sb)
    if fmt == "json":
        return dump_json({"sbox": sb.hex(), "analysis": report.to_json()})
    if fmt == "csv":
        rows = [["metric", "value"]]
        rows += [[k, str(v).lower() if isinstance(v, bool) else v] for k, v in report.scalar_metrics().items()]
        return _csv(rows)
    return "\n".join([f"S-box {sb.hex()}", *_box_lines(sb), "", *_report_lines(report)]) + "\n"


def _delta(a, b):
    if isinstance(a, bool) or isinstance(b, bool):
        return "same" if a == b else "differs"
    if isinstance(a, int) and isinstance(b, int):
        return a - b
    return "same" if a == b else "differs"


def render_compare(gen: Generation, fmt: str) -> str:
    g_rep, r_rep = analyze(gen.sbox), analyze(REFERENCE_SBOX)
    gm, rm = g_rep.scalar_metrics(), r_rep.scalar_metrics()
    if fmt == "json":
        return dump_json({
            "generated": {"sbox": gen.sbox.hex(), "analysis": g_rep.to_json(), "metadata": gen.metadata()},
            "reference": {"sbox": REFERENCE_SBOX.hex(), "analysis": r_rep.to_json()},
            "deltas": {k: _json_value(_delta(gm[k], rm[k])) for k in gm},
        })
    if fmt == "csv":
        rows = [["metric", "generated", "reference"], ["sbox", gen.sbox.hex(), REFERENCE_SBOX.hex()]]
        for k in gm:
            rows.append([k] + [str(v).lower() if isinstance(v, bool) else v for v in (gm[k], rm[k])])
        return _csv(rows)
    lines = [f"{'metric':<26}{'generated':<20}{'reference':<20}delta"]
    lines.append(f"{'sbox':<26}{gen.sbox.hex():<20}{REFERENCE_SBOX.hex():<20}")
    for k in gm:
        lines.append(f"{k:<26}{str(gm[k]):<20}{str(rm[k]):<20}{_delta(gm[k], rm[k])}")
    return "\n".join(lines) + "\n"


def curve_info(curve: HyperellipticCurve) -> dict:
    info = {
        "curve": curve.describe(),
        "fingerprint": curve.fingerprint(),
        "nonsingularity_verified": curve.nonsingularity_verified,
        "warnings": [] if curve.nonsingularity_verified else ["unverified non-singularity"],
    }
    p = curve.p
    if p < POINT_COUNT_LIMIT:
        info["affine_points"] = len(enumerate_points(curve))
    if p < ORDER_LIMIT:
        if curve.genus == 2:
            info["jacobian_order"] = jacobian_order(curve)
        elif sum(p ** (2 * d) for d in range(curve.genus + 1)) <= ENUMERATION_BUDGET:
            info["jacobian_order"] = len(enumerate_divisors(curve))
    return info


def render_curve_info(info: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(info)
    flat = [
        ("prime", info["curve"]["prime"]),
        ("genus", info["curve"]["genus"]),
        ("h", " ".join(info["curve"]["h"]) or "0"),
        ("f", " ".join(info["curve"]["f"])),
        ("fingerprint", info["fingerprint"]),
        ("nonsingularity_verified", str(info["nonsingularity_verified"]).lower()),
    ]
    for k in ("affine_points", "jacobian_order"):
        if k in info:
            flat.append((k, info[k]))
    if info["warnings"]:
        flat.append(("warnings", "; ".join(info["warnings"])))
    if fmt == "csv":
        return _csv([["field", "value"], *flat])
    return "\n".join(f"{k:<26}{v}" for k, v in flat) + "\n"


# -- argument parsing ---------------------------------------------------------


def _add_config_flags(sp: argparse.ArgumentParser):
    sp.add_argument("--preset", choices=sorted(PRESETS), help="built-in curve and point configuration")
    sp.add_argument("--config", metavar="FILE", help="JSON config file; flags override it")
    sp.add_argument("--prime", help="field characteristic, decimal or 0x-hex")
    sp.add_argument("--genus", help="curve genus")
    sp.add_argument("--h", help="comma-separated coefficients of h(x), ascending degree")
    sp.add_argument("--f", help="comma-separated coefficients of f(x), ascending degree")
    sp.add_argument("--points", help="comma-separated start x values for point search")
    sp.add_argument("--mults", help="comma-separated point multiplicities")
    sp.add_argument("--key", help="key, decimal or 0x-hex (4 bits unless --wide-key)")
    sp.add_argument("--wide-key", action="store_true", help="allow keys wider than 4 bits")
    sp.add_argument("--family", help=f"number of rotated boxes, 1..{FAMILY_MAX}")
    sp.add_argument("--analyze", action="store_true", help="attach metric reports")
    sp.add_argument("--format", choices=["table", "json", "csv"])


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecsbox", description="Key-dependent 4-bit S-boxes from hyperelliptic Jacobians."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("generate", "generate the first dynamic S-box"),
        ("family", "generate the rotated family Sb1..SbN"),
        ("compare", "compare the generated box against the static reference box"),
        ("curve-info", "summarize the configured curve"),
    ):
        _add_config_flags(sub.add_parser(name, help=help_text))
    sp = sub.add_parser("analyze", help="analyze a 16-hex-digit S-box")
    sp.add_argument("sbox", help="16 hex digits, entry for input 0 first")
    sp.add_argument("--format", choices=["table", "json", "csv"], default="table")
    return parser


def run(args: argparse.Namespace, out) -> int:
    if args.command == "analyze":
        try:
            sb = SBox4.from_hex(args.sbox)
        except ValueError as exc:
            raise ConfigError("sbox", str(exc)) from None
        out.write(render_analysis(sb, args.format))
        return EXIT_OK
    cfg = resolve_config(args)
    _check_format(cfg)
    if args.command == "curve-info":
        out.write(render_curve_info(curve_info(build_curve(cfg)), cfg.output_format))
        return EXIT_OK
    params = build_params(cfg)
    gen = generate(params)
    if args.command == "generate":
        out.write(render_generate(gen, cfg.output_format, args.analyze))
    elif args.command == "family":
        out.write(render_family(gen, cfg.output_format, args.analyze))
    else:
        out.write(render_compare(gen, cfg.output_format))
    return EXIT_OK


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return run(args, out)
    except ConfigError as exc:
        err.write(f"hecsbox: error: {exc}\n")
        return EXIT_CONFIG
    except DegenerateResult as exc:
        err.write(f"hecsbox: degenerate input: {exc}\n")
        return EXIT_DEGENERATE
    except HecError as exc:
        err.write(f"hecsbox: error: {exc}\n")
        return EXIT_CONFIG


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
