"""Command-line front end: eval, verify, search, list.

Machine-readable CSV goes to the chosen output (stdout by default); the
human-readable summary goes to stderr.  Exit codes: 0 when the run met its
expectation, 1 when a verification expectation failed, 2 for usage errors.

Config precedence: command-line flags > config file (key=value lines) >
HGF_SEED environment variable (seed only) > built-in defaults.
"""

from __future__ import annotations

import argparse
import os
import sys

import hgf
from hgf import ineq, metrics, specfun
from hgf.report import DEFAULT_SEED, GridSpec, ScanSpec
from hgf.suites import SEARCHES, SUITES, run_search, run_suite

# name -> (argument names, callable); point arguments take "re,im"
EVAL_REGISTRY = {
    "ellint_K": (("r",), lambda a: specfun.ellint_K(a["r"])),
    "mu": (("r",), lambda a: specfun.mu(a["r"])),
    "mu_inv": (("y",), lambda a: specfun.mu_inv(a["y"])),
    "gamma2": (("s",), lambda a: specfun.gamma2(a["s"])),
    "phi_K": (("K", "r"), lambda a: specfun.phi_K(a["K"], a["r"])),
    "lambda_K": (("K",), lambda a: specfun.lambda_K(a["K"])),
    "eta_K": (("K", "t"), lambda a: specfun.eta_K(a["K"], a["t"])),
    "boundary_dist": (("dom", "p"), lambda a: metrics.boundary_dist(a["dom"], a["p"])),
    "rho_half_plane": (("x", "y"), lambda a: metrics.rho_half_plane(a["x"], a["y"])),
    "rho_disk": (("a", "b"), lambda a: metrics.rho_disk(a["a"], a["b"])),
    "h_metric": (("dom", "c", "x", "y"),
                 lambda a: metrics.h_metric(a["dom"], a["c"], a["x"], a["y"])),
    "h_from_rho": (("c", "rho"), lambda a: metrics.h_from_rho(a["c"], a["rho"])),
    "F_mfprop": (("c", "t"), lambda a: ineq.F_mfprop(a["c"], a["t"])),
    "lemma22_f": (("c", "x"), lambda a: ineq.lemma22_f(a["c"], a["x"])),
    "distortion_rhs": (("c", "K", "h"),
                       lambda a: ineq.distortion_rhs(a["c"], a["K"], a["h"])),
    "stretch_map": (("K", "p"), lambda a: metrics.stretch_map(a["K"], a["p"])),
    "mobius_apply": (("m", "p"),
                     lambda a: metrics.mobius_apply(metrics.MobiusH(*a["m"]), a["p"])),
}

_POINT_ARGS = {"p", "x", "y", "a", "b"}


class CliError(Exception):
    pass


def _parse_value(name: str, text: str):
    if name == "dom":
        return text
    if name == "m":
        parts = text.split(",")
        if len(parts) != 4:
            raise CliError(f"argument {name} wants 'a,b,c,d', got {text!r}")
        return tuple(float(p) for p in parts)
    if name in _POINT_ARGS and "," in text:
        re_s, im_s = text.split(",")
        return (float(re_s), float(im_s))
    try:
        return float(text)
    except ValueError as exc:
        raise CliError(f"argument {name}={text!r} is not a number") from exc


def _parse_grid_token(token: str) -> tuple[str, GridSpec]:
    if "=" not in token:
        raise CliError(f"grid override {token!r} is not of the form name=value or "
                       "name=min:max:count[:log]")
    name, rest = token.split("=", 1)
    parts = rest.split(":")
    try:
        if len(parts) == 1:
            v = float(parts[0])
            return name, GridSpec(v, v, 1)
        if len(parts) in (3, 4):
            lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
            spacing = "linear"
            if len(parts) == 4:
                if parts[3] != "log":
                    raise CliError(f"unknown spacing {parts[3]!r} in {token!r}")
                spacing = "log"
            return name, GridSpec(lo, hi, count, spacing)
    except (ValueError, CliError) as exc:
        if isinstance(exc, CliError):
            raise
        raise CliError(f"bad grid override {token!r}: {exc}") from exc
    raise CliError(f"bad grid override {token!r}")


def _read_config(path: str) -> dict[str, str]:
    opts: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise CliError(f"config line {line!r} is not key=value")
                k, v = line.split("=", 1)
                opts[k.strip()] = v.strip()
    except OSError as exc:
        raise CliError(f"cannot read config {path!r}: {exc}") from exc
    return opts


def _build_scanspec(suite: str, args, config: dict[str, str]) -> ScanSpec:
    grids: dict[str, GridSpec] = {}
    for key, val in config.items():
        if key.startswith("grid."):
            name, g = _parse_grid_token(key[len("grid."):] + "=" + val)
            grids[name] = g
    for token in args.grid or []:
        name, g = _parse_grid_token(token)
        grids[name] = g
    for token in args.overrides or []:
        name, g = _parse_grid_token(token)
        grids[name] = g

    def pick(flag_val, key, conv, default):
        if flag_val is not None:
            return conv(flag_val)
        if key in config:
            return conv(config[key])
        return default

    env_seed = os.environ.get("HGF_SEED")
    seed = pick(args.seed, "seed", int, int(env_seed) if env_seed else DEFAULT_SEED)
    try:
        return ScanSpec(
            suite=suite,
            grids=grids,
            samples=pick(args.samples, "samples", int, None),
            seed=seed,
            tol=pick(args.tol, "tol", float, None),
            out=pick(args.out, "out", str, None),
            jobs=pick(args.jobs, "jobs", int, 0),
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _emit(report, out: str | None) -> None:
    if out in (None, "-"):
        report.write_csv(sys.stdout)
    else:
        with open(out, "w", encoding="utf-8", newline="") as f:
            report.write_csv(f)
    print(report.summary(), file=sys.stderr)


def _cmd_eval(args) -> int:
    name = args.function
    if name not in EVAL_REGISTRY:
        known = ", ".join(sorted(EVAL_REGISTRY))
        raise CliError(f"unknown function {name!r}; known: {known}")
    wanted, fn = EVAL_REGISTRY[name]
    given: dict[str, object] = {}
    for token in args.args:
        if "=" not in token:
            raise CliError(f"expected key=value, got {token!r}")
        k, v = token.split("=", 1)
        if k not in wanted:
            raise CliError(f"{name} does not take {k!r}; wants {', '.join(wanted)}")
        given[k] = _parse_value(k, v)
    missing = [w for w in wanted if w not in given]
    if missing:
        raise CliError(f"{name} missing arguments: {', '.join(missing)}; "
                       f"wants {', '.join(wanted)}")
    try:
        value = fn(given)
    except (ValueError, OverflowError) as exc:
        raise CliError(f"{name}: {exc}") from exc
    if isinstance(value, metrics.HalfPlanePoint):
        print(f"{value.re:.15g},{value.im:.15g}")
    else:
        print(f"{value:.15g}")
    return 0


def _cmd_verify(args) -> int:
    if args.suite not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise CliError(f"unknown suite {args.suite!r}; known: {known}")
    config = _read_config(args.config) if args.config else {}
    spec = _build_scanspec(args.suite, args, config)
    report = run_suite(spec)
    _emit(report, spec.out)
    return 0 if report.ok else 1


def _cmd_search(args) -> int:
    if args.target not in SEARCHES:
        known = ", ".join(sorted(SEARCHES))
        raise CliError(f"unknown search target {args.target!r}; known: {known}")
    config = _read_config(args.config) if args.config else {}
    spec = _build_scanspec(args.target, args, config)
    report = run_search(spec)
    _emit(report, spec.out)
    return 0


def _cmd_list(args) -> int:
    print("functions (eval):")
    for name in sorted(EVAL_REGISTRY):
        wanted, _ = EVAL_REGISTRY[name]
        print(f"  {name}({', '.join(wanted)})")
    print("suites (verify):")
    for name in sorted(SUITES):
        print(f"  {name:22s} {SUITES[name].description}")
    print("search targets (search):")
    for name in sorted(SEARCHES):
        print(f"  {name:22s} {SEARCHES[name].description}")
    return 0


def _add_scan_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("overrides", nargs="*", metavar="param=grid",
                   help="grid overrides, e.g. c=1 or t=1e-6:1e6:61:log")
    p.add_argument("--grid", action="append", metavar="param=min:max:count[:log]")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--out", help="CSV output path ('-' for stdout)")
    p.add_argument("--jobs", type=int, help="worker pool size (0 = auto)")
    p.add_argument("--config", help="key=value config file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgf",
        description="Hyperbolic-type metric and distortion-function verification tool",
    )
    parser.add_argument("--version", action="version",
                        version=f"hgf {hgf.__version__} (backend: {hgf.backend_name()})")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a registered function")
    p_eval.add_argument("function")
    p_eval.add_argument("args", nargs="*", metavar="key=value")
    p_eval.set_defaults(fn=_cmd_eval)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite")
    _add_scan_flags(p_verify)
    p_verify.set_defaults(fn=_cmd_verify)

    p_search = sub.add_parser("search", help="search for counterexamples")
    p_search.add_argument("target")
    _add_scan_flags(p_search)
    p_search.set_defaults(fn=_cmd_search)

    p_list = sub.add_parser("list", help="list functions, suites, and targets")
    p_list.set_defaults(fn=_cmd_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
