"""Command-line front end: admissibility checks, region diagrams, dyadic
decay sweeps, quotient experiments, and exponent-grid scans.

Exit codes: 0 success / Strong; 2 configuration error or unknown checker;
3 WeakTypeOnly; 4 Fails; 5 OutOfScope; 1 an experiment verdict came back
Inconsistent.  Exponent flags (--q, --r, ...) take the exponent itself as
an exact rational or 'inf'; decimals are rejected so the arithmetic stays
exact end to end.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .exponents import (RecipExponent, Status, SymbolProfile, Verdict,
                        check_gn1d_general, check_gn_1d,
                        check_gn_highd_general, check_gn_sphere,
                        check_large_freq, check_local_gn, parse_rational,
                        region_boundary, schroedinger_exponent, wave_exponent)
from .spectral import Grid, annulus_bump, random_band_limited
from .verify import (QuotientProblem, fit_dyadic_decay, gn_quotient,
                     slope_experiment)

EXIT_BY_STATUS = {
    Status.STRONG: 0,
    Status.WEAK_TYPE_ONLY: 3,
    Status.FAILS: 4,
    Status.OUT_OF_SCOPE: 5,
}

CHECKERS = ("sphere", "oned", "general1d", "generalhd", "largefreq", "local",
            "wave", "schroedinger")


class ConfigError(Exception):
    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field


# ---------------------------------------------------------------------------
# Parsing helpers.
# ---------------------------------------------------------------------------

def _need(args: dict, field: str):
    v = args.get(field)
    if v is None:
        raise ConfigError(field, "required for this checker")
    return v


def _as_recip(field: str, value) -> RecipExponent:
    try:
        return RecipExponent.from_exponent(value)
    except ValueError as exc:
        raise ConfigError(field, str(exc)) from None


def _as_frac(field: str, value) -> Fraction:
    try:
        return parse_rational(value) if isinstance(value, str) else Fraction(value)
    except ValueError as exc:
        raise ConfigError(field, str(exc)) from None


def _as_int(field: str, value) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigError(field, f"expected an integer, got {value!r}") from None


def _profile(args: dict, d_default: int | None = None) -> SymbolProfile:
    d = _as_int("d", args.get("d", d_default))
    k = args.get("k")
    k = _as_int("k", k) if k is not None else max(d - 1, 1)
    try:
        return SymbolProfile(
            d=d, k=k,
            alpha1=_as_frac("alpha1", args.get("alpha1", 1)),
            alpha2=_as_frac("alpha2", args.get("alpha2", 0)),
            s1=_as_frac("s1", args.get("s1", args.get("s", 1))),
            s2=_as_frac("s2", args.get("s2", 0)),
            kappa=_as_frac("kappa", _need(args, "kappa")),
        )
    except ValueError as exc:
        raise ConfigError("profile", str(exc)) from None


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def run_checker(name: str, args: dict) -> Verdict:
    if name == "sphere":
        return check_gn_sphere(
            _as_int("d", _need(args, "d")), _as_frac("s", _need(args, "s")),
            _as_frac("kappa", _need(args, "kappa")),
            _as_recip("r", _need(args, "r")), _as_recip("q", _need(args, "q")))
    if name == "oned":
        return check_gn_1d(
            _as_frac("kappa", _need(args, "kappa")), _as_frac("s", _need(args, "s")),
            _as_recip("q", _need(args, "q")), _as_recip("r1", _need(args, "r1")),
            _as_recip("r2", _need(args, "r2")))
    if name == "general1d":
        return check_gn1d_general(
            _profile(args, d_default=1), _as_recip("q", _need(args, "q")),
            _as_recip("r1", _need(args, "r1")), _as_recip("r2", _need(args, "r2")))
    if name == "generalhd":
        return check_gn_highd_general(
            _profile(args), _as_recip("q", _need(args, "q")),
            _as_recip("r", _need(args, "r")))
    if name == "largefreq":
        return check_large_freq(
            _profile(args), _as_recip("q", _need(args, "q")),
            _as_recip("r1", _need(args, "r1")), _as_recip("r2", _need(args, "r2")))
    if name == "local":
        return check_local_gn(
            _as_int("d", _need(args, "d")), _as_frac("s", _need(args, "s")),
            _as_frac("kappa", _need(args, "kappa")),
            _as_recip("q", _need(args, "q")), _as_recip("r", _need(args, "r")))
    if name == "wave":
        return wave_exponent(_as_int("d", _need(args, "d")),
                             _as_frac("kappa", _need(args, "kappa")))
    if name == "schroedinger":
        return schroedinger_exponent(_as_int("d", _need(args, "d")),
                                     _as_frac("kappa", _need(args, "kappa")))
    raise ConfigError("checker", f"unknown checker {name!r}")


def cmd_check(ns: argparse.Namespace, cfg: dict) -> int:
    verdict = run_checker(ns.checker, cfg)
    print(json.dumps(verdict.to_dict(), indent=2, sort_keys=True))
    return EXIT_BY_STATUS[verdict.status]


# ---------------------------------------------------------------------------
# region
# ---------------------------------------------------------------------------

def cmd_region(ns: argparse.Namespace, cfg: dict) -> int:
    from .reporting import render_region_svg, write_json

    params = {k: v for k, v in cfg.items()
              if k in ("d", "k", "s", "s1", "s2", "kappa", "alpha", "alpha1",
                       "alpha2") and v is not None}
    if cfg.get("r2") is not None:
        params["ir2"] = _as_recip("r2", cfg["r2"]).value
    try:
        polys = region_boundary(ns.checker, params, n=int(cfg.get("grid_n", 48)))
    except (ValueError, KeyError) as exc:
        raise ConfigError("region", str(exc)) from None
    out = Path(cfg.get("out") or ".")
    out.mkdir(parents=True, exist_ok=True)
    xlabel = "1/p" if ns.checker in ("acalculus", "sobolev") else "1/r"
    render_region_svg(polys, out / f"region_{ns.checker}.svg",
                      title=f"{ns.checker} region", xlabel=xlabel)
    write_json(out / f"region_{ns.checker}.json",
               {"checker": ns.checker,
                "params": {k: str(v) for k, v in params.items()},
                "polylines": [p.to_dict() for p in polys]})
    print(f"wrote region_{ns.checker}.svg / .json in {out}")
    return 0


# ---------------------------------------------------------------------------
# dyadic
# ---------------------------------------------------------------------------

def cmd_dyadic(ns: argparse.Namespace, cfg: dict) -> int:
    from .reporting import render_slope_figure, write_csv, write_json

    d = _as_int("d", cfg.get("d", 2))
    js = range(_as_int("jmin", cfg.get("jmin", 2)),
               _as_int("jmax", cfg.get("jmax", 6)) + 1)
    grid = None
    if ns.projector == "slab":
        grid = Grid(d, _as_int("n", cfg.get("n", 512)),
                    float(cfg.get("half_width", 402.0)))
    report = fit_dyadic_decay(
        ns.projector, js,
        _as_recip("p", cfg.get("p", 2)).value, _as_recip("q", cfg.get("q", 2)).value,
        d=d, k=_as_int("k", cfg["k"]) if cfg.get("k") is not None else None,
        quantity=cfg.get("quantity", "opnorm"), grid=grid,
        n=_as_int("n", cfg.get("n", 512)),
        ensemble_size=_as_int("ensemble", cfg.get("ensemble", 3)),
        seed=_as_int("seed", cfg.get("seed", 0)),
        tolerance=float(_as_frac("tolerance", cfg.get("tolerance", "1/20"))),
        jobs=_as_int("jobs", cfg.get("jobs", 1)))

    out = Path(cfg.get("out") or ".")
    out.mkdir(parents=True, exist_ok=True)
    stem = f"dyadic_{ns.projector}_{cfg.get('quantity', 'opnorm')}"
    rows = [[s["j"], s["value"], s.get("upper"), s.get("witness", "")]
            for s in report.samples]
    write_csv(out / f"{stem}.csv", ["j", "value", "upper_bound", "witness"], rows)
    write_json(out / f"{stem}.json", report.to_dict())
    render_slope_figure(report, out / f"{stem}.png", stem)
    print(f"{stem}: fitted {report.fitted_slope:.4f} predicted "
          f"{report.predicted_slope:.4f} [{report.verdict}]")
    return 0 if report.verdict == "Consistent" else 1


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _scales(field: str, spec: str) -> list[int]:
    try:
        if ".." in spec:
            a, b = spec.split("..")
            return list(range(int(a), int(b) + 1))
        return [int(tok) for tok in spec.split(",")]
    except ValueError:
        raise ConfigError(field, f"expected 'a..b' or comma list, got {spec!r}") from None


def cmd_verify(ns: argparse.Namespace, cfg: dict) -> int:
    from .reporting import render_slope_figure, write_csv, write_json

    family = cfg.get("family", "Knapp")
    if family not in ("Knapp", "Annulus", "Dilated"):
        raise ConfigError("family", f"unknown family {family!r}")
    d = _as_int("d", cfg.get("d", 2))
    prob = QuotientProblem.sphere_power(
        d, _as_frac("s", cfg.get("s", 2)), _as_frac("kappa", _need(cfg, "kappa")),
        _as_recip("q", _need(cfg, "q")).value,
        _as_recip("r1", cfg.get("r1", cfg.get("r", 2))).value,
        _as_recip("r2", cfg.get("r2", cfg.get("r", 2))).value)
    exps = _scales("scales", cfg.get("scales", "3..7" if family != "Dilated" else "2..5"))
    params = [2.0 ** (-e) for e in exps] if family != "Dilated" else [2.0 ** e for e in exps]
    report = slope_experiment(
        family, params, prob,
        tolerance=float(_as_frac("tolerance", cfg.get("tolerance", "1/20"))),
        jobs=_as_int("jobs", cfg.get("jobs", 1)))

    out = Path(cfg.get("out") or ".")
    out.mkdir(parents=True, exist_ok=True)
    stem = f"verify_{family.lower()}"
    rows = [[s.family, s.parameter, s.quotient, s.norms["numerator"],
             s.norms["denominator1"], s.norms["denominator2"]]
            for s in report.samples]
    write_csv(out / f"{stem}.csv",
              ["family", "parameter", "quotient", "numerator",
               "denominator1", "denominator2"], rows)
    write_json(out / f"{stem}.json", report.to_dict())
    render_slope_figure(report, out / f"{stem}.png", stem)
    print(f"{stem}: fitted {report.fitted_slope:.4f} predicted "
          f"{report.predicted_slope:.4f} [{report.verdict}]")
    return 0 if report.verdict == "Consistent" else 1


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

_SCAN_AXES = ("kappa", "q", "r", "r1", "r2")


def _axis_values(axis: str, steps: int) -> list:
    # kappa scans its own range; exponent axes scan the reciprocal in [0,1].
    return [Fraction(i, steps) for i in range(steps + 1)]


def cmd_scan(ns: argparse.Namespace, cfg: dict) -> int:
    from .reporting import write_csv

    steps = _as_int("step", cfg.get("step", 24))
    if steps > 1000:
        raise ConfigError("step", f"{steps} > 1000: runtime guard")
    vary = [a.strip() for a in str(cfg.get("vary", "kappa,q")).split(",")]
    if len(vary) != 2 or any(a not in _SCAN_AXES for a in vary):
        raise ConfigError("vary", f"expected two of {_SCAN_AXES}, got {vary}")
    checker = cfg.get("checker", "sphere")
    if checker not in CHECKERS:
        raise ConfigError("checker", f"unknown checker {checker!r}")
    measure = bool(cfg.get("measure", False))

    mq_cache: dict = {}

    def measured_quotient(args: dict):
        d = _as_int("d", args.get("d", 2))
        kappa = _as_frac("kappa", args.get("kappa", "1/2"))
        s = _as_frac("s", args.get("s", 2))
        iq = _as_recip("q", args.get("q", 2)).value
        ir1 = _as_recip("r1", args.get("r1", args.get("r", 2))).value
        ir2 = _as_recip("r2", args.get("r2", args.get("r", 2))).value
        prob = QuotientProblem.sphere_power(d, s, kappa, iq, ir1, ir2)
        if d not in mq_cache:
            g = Grid(d, 64, 16.0)
            seed = _as_int("seed", args.get("seed", 0))
            mq_cache[d] = [annulus_bump(g, 0.125)] + [
                random_band_limited(g, seed + i, (0.25, 1.75)) for i in range(3)]
        best = 0.0
        for u in mq_cache[d]:
            try:
                best = max(best, gn_quotient(u, prob).quotient)
            except ValueError:
                pass
        return best

    header = [vary[0], vary[1], "status"] + (["max_quotient"] if measure else [])
    rows = []
    for v1 in _axis_values(vary[0], steps):
        for v2 in _axis_values(vary[1], steps):
            args = dict(cfg)
            for axis, val in zip(vary, (v1, v2)):
                # exponent axes are scanned via the reciprocal
                args[axis] = str(val) if axis == "kappa" else ("inf" if val == 0 else str(1 / val))
            try:
                status = run_checker(checker, args).status.value
            except ConfigError:
                raise
            row = [str(v1), str(v2), status]
            if measure:
                row.append(measured_quotient(args) if status == "Strong" else None)
            rows.append(row)

    out = Path(cfg.get("out") or ".")
    out.mkdir(parents=True, exist_ok=True)
    write_csv(out / f"scan_{checker}.csv", header, rows)
    print(f"wrote scan_{checker}.csv ({len(rows)} rows) in {out}")
    return 0


# ---------------------------------------------------------------------------
# Parser and dispatch.
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file; flags override it")
    common.add_argument("--out", help="output directory (default .)")
    common.add_argument("--seed", help="RNG seed (unsigned integer)")
    common.add_argument("--tolerance", help="slope tolerance, exact rational")
    common.add_argument("--jobs", help="parallel workers for experiment batches")

    value_flags = ("d", "k", "s", "s1", "s2", "alpha", "alpha1", "alpha2",
                   "kappa", "q", "r", "r1", "r2", "p")

    top = argparse.ArgumentParser(
        prog="gnvanish",
        description="admissible-exponent checks and grid experiments for "
                    "interpolation inequalities with vanishing symbols")
    sub = top.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("check", parents=[common],
                        help="decide admissibility of an exponent tuple")
    pc.add_argument("checker", help="|".join(CHECKERS))
    for f in value_flags:
        pc.add_argument(f"--{f}")

    pr = sub.add_parser("region", parents=[common],
                        help="emit a Riesz-diagram SVG + JSON polylines")
    pr.add_argument("checker",
                    help="acalculus|sobolev|" + "|".join(CHECKERS[:6]))
    for f in value_flags:
        pr.add_argument(f"--{f}")
    pr.add_argument("--grid-n", dest="grid_n", help="marching grid resolution")

    pd = sub.add_parser("dyadic", parents=[common],
                        help="dyadic decay sweep (kernel norms or opnorm probes)")
    pd.add_argument("projector", choices=("annulus", "slab"))
    pd.add_argument("--quantity", choices=("kernel", "opnorm"))
    for f in ("d", "k", "p", "q"):
        pd.add_argument(f"--{f}")
    pd.add_argument("--jmin")
    pd.add_argument("--jmax")
    pd.add_argument("--n")
    pd.add_argument("--half-width", dest="half_width")
    pd.add_argument("--ensemble")

    pv = sub.add_parser("verify", parents=[common],
                        help="quotient slope experiment against the checker "
                             "prediction")
    pv.add_argument("--family", choices=("Knapp", "Annulus", "Dilated"))
    for f in ("d", "s", "kappa", "q", "r", "r1", "r2"):
        pv.add_argument(f"--{f}")
    pv.add_argument("--scales", help="'a..b' or comma list of dyadic exponents")

    ps = sub.add_parser("scan", parents=[common],
                        help="CSV of verdicts over an exponent grid")
    ps.add_argument("--checker")
    ps.add_argument("--vary", help="two of kappa,q,r,r1,r2 (comma separated)")
    ps.add_argument("--step", help="grid step denominator (max 1000)")
    ps.add_argument("--measure", action="store_true",
                    help="attach a measured max quotient per Strong row")
    for f in ("d", "k", "s", "s1", "s2", "alpha1", "alpha2", "kappa",
              "q", "r", "r1", "r2"):
        ps.add_argument(f"--{f}")

    return top


def _merge_config(ns: argparse.Namespace) -> dict:
    cfg: dict = {}
    if getattr(ns, "config", None):
        path = Path(ns.config)
        if not path.exists():
            raise ConfigError("config", f"no such file: {path}")
        try:
            loaded = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError("config", f"invalid JSON: {exc}") from None
        if not isinstance(loaded, dict):
            raise ConfigError("config", "top level must be a JSON object")
        cfg.update(loaded)
    for key, val in vars(ns).items():
        if key in ("command", "config") or val is None or val is False:
            continue
        cfg[key] = val
    return cfg


_COMMANDS = {
    "check": cmd_check,
    "region": cmd_region,
    "dyadic": cmd_dyadic,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        cfg = _merge_config(ns)
        return _COMMANDS[ns.command](ns, cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
