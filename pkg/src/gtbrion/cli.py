"""Command-line front end.

    gtbrion schur --lambda 2,1,0 [--at 1,1,1]
    gtbrion weyl --lambda 2,1,0 [--at 1,2,3]
    gtbrion vertices --lambda 5,4,2,0
    gtbrion contributions --lambda 2,2,0 --seed 7
    gtbrion verify --lambda 2,2,0 --regular-companion 3,2,0 --seed 7

Defaults for --seed, --format, --cap and --jobs may be set through the
environment variables GTBRION_SEED, GTBRION_FORMAT, GTBRION_CAP and
GTBRION_JOBS.  Weights with a leading negative entry must be written as
``--lambda=-1,-2``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import format_rational
from .brion import sample_x_point, validate_x_point, weyl_character
from .cones import NonGenericPointError
from .patterns import (
    DEFAULT_PATTERN_CAP,
    NotDominantError,
    PatternCapError,
    check_dominant,
    is_regular,
    schur_eval,
    schur_polynomial,
    weyl_dimension,
)
from .polytope import enumerate_vertices
from .verify import contributions_report, default_jobs, make_context, run_verification

ENV_PREFIX = "GTBRION_"
FORMATS = ("json", "csv", "text")


@dataclass
class RunConfig:
    command: str
    lam: tuple
    seed: int = 0
    fmt: str = "text"
    cap: int = DEFAULT_PATTERN_CAP
    jobs: int = 1
    at: list = field(default_factory=list)
    t_at: list = field(default_factory=list)
    companion: tuple | None = None

    @property
    def n(self) -> int:
        return len(self.lam)


def _env(name, default, cast=str):
    raw = os.environ.get(ENV_PREFIX + name)
    return cast(raw) if raw not in (None, "") else default


def parse_weight(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def parse_point(text: str) -> tuple:
    try:
        return tuple(Fraction(v.strip()) for v in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lambda", dest="lam", type=parse_weight, required=True,
                        help="dominant highest weight, comma separated (n is its length)")
    common.add_argument("--at", action="append", type=parse_point, default=[],
                        help="x-point as comma-separated rationals; repeatable; rejected if not generic")
    common.add_argument("--t-at", dest="t_at", action="append", type=parse_point, default=[],
                        help="t-point over all pattern positions (row-major); repeatable")
    common.add_argument("--seed", type=int, default=_env("SEED", 0, int),
                        help="seed for sampled evaluation points (env GTBRION_SEED)")
    common.add_argument("--format", dest="fmt", choices=FORMATS, default=_env("FORMAT", "text"),
                        help="output format (env GTBRION_FORMAT)")
    common.add_argument("--cap", type=int, default=_env("CAP", DEFAULT_PATTERN_CAP, int),
                        help="refuse weights with more GT patterns than this (env GTBRION_CAP)")
    common.add_argument("--jobs", type=int, default=_env("JOBS", default_jobs(), int),
                        help="worker processes for per-vertex work (env GTBRION_JOBS)")
    common.add_argument("--regular-companion", dest="companion", type=parse_weight, default=None,
                        help="regular weight lambda' used to check the degeneration identity")

    parser = argparse.ArgumentParser(prog="gtbrion", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("schur", parents=[common], help="Schur polynomial from GT patterns, or its value")
    sub.add_parser("weyl", parents=[common], help="character value from Weyl's formula")
    sub.add_parser("vertices", parents=[common], help="list and classify polytope vertices")
    sub.add_parser("contributions", parents=[common], help="per-vertex Brion contributions")
    sub.add_parser("verify", parents=[common], help="run every theorem check; exit 0 iff all pass")
    return parser


def config_from_args(args) -> RunConfig:
    lam = check_dominant(args.lam)
    if args.fmt not in FORMATS:
        raise ValueError(f"unknown format {args.fmt!r}")
    for x in args.at:
        if len(x) != len(lam):
            raise ValueError(f"--at point {x} must have {len(lam)} coordinates")
    companion = check_dominant(args.companion) if args.companion is not None else None
    return RunConfig(args.command, lam, args.seed, args.fmt, args.cap, max(1, args.jobs),
                     list(args.at), list(args.t_at), companion)


# ---------------------------------------------------------------------------
# Commands


def cmd_schur(cfg: RunConfig) -> tuple[dict, int]:
    count = weyl_dimension(cfg.lam)
    if count > cfg.cap:
        raise PatternCapError(count, cfg.cap)
    if cfg.at:
        values = [schur_eval(cfg.lam, x, cfg.cap) for x in cfg.at]
        return {"lambda": list(cfg.lam), "points": [[format_rational(v) for v in x] for x in cfg.at],
                "values": [format_rational(v) for v in values]}, 0
    poly = schur_polynomial(cfg.lam, cfg.cap)
    terms = [{"exponent": [mono[f"x_{i}"] for i in range(1, cfg.n + 1)], "coefficient": format_rational(c)}
             for mono, c in poly.sorted_terms()]
    return {"lambda": list(cfg.lam), "polynomial": str(poly), "terms": terms}, 0


def cmd_weyl(cfg: RunConfig) -> tuple[dict, int]:
    if cfg.at:
        points = [validate_x_point(x) for x in cfg.at]
    else:
        points = [sample_x_point(cfg.n, random.Random(cfg.seed))]
    values = [weyl_character(cfg.lam, x) for x in points]
    return {"lambda": list(cfg.lam), "points": [[format_rational(v) for v in x] for x in points],
            "values": [format_rational(v) for v in values]}, 0


def cmd_vertices(cfg: RunConfig) -> tuple[dict, int]:
    vertices = enumerate_vertices(cfg.lam)
    regular = is_regular(cfg.lam)
    flag = "simplicial" if regular else "acyclic"
    return {
        "lambda": list(cfg.lam),
        "regular": regular,
        "vertices": [v.to_json() for v in vertices],
        "summary": {"vertices": len(vertices), flag: sum(v.simplicial for v in vertices)},
    }, 0


def cmd_contributions(cfg: RunConfig) -> tuple[dict, int]:
    ctx = make_context(cfg.lam, cfg.seed, cfg.at or None, n_points=1, jobs=cfg.jobs)
    report = contributions_report(cfg.lam, ctx)
    return report, 0 if report["all_equal"] else 1


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    report = run_verification(cfg.lam, cfg.companion, seed=cfg.seed, x_points=cfg.at or None,
                              t_points=cfg.t_at or None, jobs=cfg.jobs, cap=cfg.cap)
    return report, 0 if report["all_passed"] else 1


COMMANDS = {
    "schur": cmd_schur,
    "weyl": cmd_weyl,
    "vertices": cmd_vertices,
    "contributions": cmd_contributions,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------------------
# Rendering


def render(cfg: RunConfig, report: dict) -> str:
    if cfg.fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False)
    if cfg.fmt == "csv":
        return _render_csv(cfg, report)
    return _render_text(cfg, report)


def _render_csv(cfg: RunConfig, report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if cfg.command == "schur" and "terms" in report:
        w.writerow([f"x{i}" for i in range(1, cfg.n + 1)] + ["coefficient"])
        for t in report["terms"]:
            w.writerow(t["exponent"] + [t["coefficient"]])
    elif cfg.command in ("schur", "weyl"):
        w.writerow(["point", "value"])
        for x, v in zip(report["points"], report["values"]):
            w.writerow([",".join(x), v])
    elif cfg.command == "vertices":
        flag = "simplicial" if report["regular"] else "acyclic"
        w.writerow(["pattern", "mu", flag, "permutation", "edges"])
        for v in report["vertices"]:
            w.writerow(["/".join(",".join(map(str, r)) for r in v["pattern"]), ",".join(map(str, v["mu"])),
                        v[flag], ",".join(map(str, v.get("permutation", []))), len(v["edges"])])
    elif cfg.command == "contributions":
        w.writerow(["pattern", "mu", "contribution", "matched"])
        for v in report["vertices"]:
            w.writerow(["/".join(",".join(map(str, r)) for r in v["pattern"]), ",".join(map(str, v["mu"])),
                        v["contribution"], v["matched"]])
    else:
        w.writerow(["check", "status"])
        for c in report["checks"]:
            w.writerow([c["name"], c["status"]])
    return buf.getvalue().rstrip("\n")


def _render_text(cfg: RunConfig, report: dict) -> str:
    lines = []
    if cfg.command == "schur" and "polynomial" in report:
        return report["polynomial"]
    if cfg.command in ("schur", "weyl"):
        return "\n".join(report["values"])
    if cfg.command == "vertices":
        flag = "simplicial" if report["regular"] else "acyclic"
        for v in report["vertices"]:
            rows = " / ".join(" ".join(map(str, r)) for r in v["pattern"])
            perm = f"  w={tuple(v['permutation'])}" if "permutation" in v else ""
            lines.append(f"{rows}  mu={tuple(v['mu'])}  {flag}={v[flag]}{perm}")
        s = report["summary"]
        lines.append(f"{s['vertices']} vertices, {s[flag]} {flag}")
        return "\n".join(lines)
    if cfg.command == "contributions":
        for v in report["vertices"]:
            rows = " / ".join(" ".join(map(str, r)) for r in v["pattern"])
            lines.append(f"{rows}  mu={tuple(v['mu'])}  {v['contribution']}  [{v['matched']}]")
        lines.append(f"brion={report['brion_total']} schur={report['schur_oracle']} "
                     f"weyl={report['weyl_total']} all_equal={report['all_equal']}")
        return "\n".join(lines)
    for c in report["checks"]:
        lines.append(f"{c['status'].upper():4}  {c['name']}")
    lines.append("all checks passed" if report["all_passed"] else "SOME CHECKS FAILED")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        report, status = COMMANDS[cfg.command](cfg)
    except PatternCapError as exc:
        print(f"refusing: lambda has {exc.count} GT patterns, above the cap of {exc.cap}", file=sys.stderr)
        return 2
    except (NotDominantError, NonGenericPointError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(cfg, report))
    return status


if __name__ == "__main__":
    sys.exit(main())
