"""Command-line front end: ``ptqs spectrum|probabilities|neutrino-scan|verify``.

Exit codes: 0 success, 1 configuration error, 2 physics-domain error,
3 oracle verification failure.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import neutrino, oracle, transitions
from .config import COMMANDS, FORMATS, ConfigError, Grid, RunConfig, parse_pairs
from .errors import NotSymmetricError, PhysicsDomainError
from .ptcore import PTParams, build_symmetric_hamiltonian, spectral_decompose

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_PHYSICS = 2
EXIT_VERIFY = 3

DEFAULT_TIME_POINTS = 65

# argparse attributes that map one-to-one onto config keys
_FLAG_KEYS = (
    "rho", "sigma", "varphi", "phi_offdiag", "dm2", "m2_bar", "energy",
    "grid", "format", "out", "tolerance", "draws", "seed",
)


def fmt(x: float) -> str:
    """Fixed 12 significant digits, locale independent, no negative zero."""
    x = float(x)
    if x == 0.0:
        x = 0.0
    return format(x, ".11e")


def _rounded(x: float) -> float:
    return float(fmt(x))


def _complex_json(z) -> list[float]:
    z = complex(z)
    return [_rounded(z.real), _rounded(z.imag)]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ptqs", description="PT-symmetric two-level systems and neutrino oscillations")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", help="flat 'key = value' file; flags override it")
    ap.add_argument("--format", choices=FORMATS)
    ap.add_argument("--out", help="output path (default: standard output)")
    ap.add_argument("--grid", help="time or baseline grid start:stop:count")
    for name in ("rho", "sigma", "varphi", "phi-offdiag", "dm2", "m2-bar", "energy", "tolerance", "draws", "seed"):
        ap.add_argument(f"--{name}")
    ap.add_argument("--alpha-prime", action="append", help="may repeat or be comma separated")
    ap.add_argument("--fig1", action="store_true", help="scan the reference set of alpha' values")
    return ap


def load_config(args: argparse.Namespace) -> RunConfig:
    raw: dict[str, str] = {}
    if args.config:
        try:
            text = Path(args.config).read_text()
        except OSError as exc:
            raise ConfigError("config", f"cannot read {args.config!r}: {exc.strerror}") from None
        raw.update(parse_pairs(text))
    raw["command"] = args.command
    for key in _FLAG_KEYS:
        value = getattr(args, key)
        if value is not None:
            raw[key] = value
    if args.alpha_prime:
        raw["alpha_prime"] = ",".join(args.alpha_prime)
    elif args.fig1:
        raw["alpha_prime"] = ",".join(repr(a) for a in neutrino.FIG1_ALPHA_PRIMES)
    return RunConfig.from_mapping(raw)


def _params(cfg: RunConfig) -> PTParams:
    return PTParams(cfg.rho, cfg.sigma, cfg.varphi, cfg.phi_offdiag)


def _spectral(cfg: RunConfig):
    p = _params(cfg)
    try:
        H = build_symmetric_hamiltonian(p)
    except NotSymmetricError as exc:
        raise ConfigError("phi_offdiag", str(exc)) from None
    return spectral_decompose(H, p)


def cmd_spectrum(cfg: RunConfig) -> str:
    spec = _spectral(cfg)
    hermitian = cfg.varphi == 0.0 or spec.alpha == 0.0
    scalars = {
        "E_plus": spec.E_plus,
        "E_minus": spec.E_minus,
        "alpha": spec.alpha,
        "beta": spec.beta,
        "discriminant": _params(cfg).discriminant,
    }
    matrices = {"eta_plus": spec.eta_plus, "C": spec.C, "G": spec.G, "H_prime": spec.H_prime}
    notes = ["phase: unbroken"]
    if hermitian:
        notes.append("Hermitian limit: eta_plus = identity")

    if cfg.format == "json":
        doc = {
            "notes": notes,
            **{k: _rounded(v) for k, v in scalars.items()},
            **{k: [[_complex_json(z) for z in row] for row in m] for k, m in matrices.items()},
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    buf = io.StringIO()
    for note in notes:
        buf.write(f"# {note}\n")
    buf.write("quantity,re,im\n")
    for k, v in scalars.items():
        buf.write(f"{k},{fmt(v)},{fmt(0.0)}\n")
    for k, m in matrices.items():
        for i in range(2):
            for j in range(2):
                buf.write(f"{k}[{i}][{j}],{fmt(m[i, j].real)},{fmt(m[i, j].imag)}\n")
    return buf.getvalue()


PROBABILITY_COLUMNS = ("t", "P_aa", "P_ab", "P_ba", "P_bb", "row_sum_a", "row_sum_b", "delta_T")


def probability_rows(cfg: RunConfig) -> list[tuple[float, ...]]:
    spec = _spectral(cfg)
    if cfg.grid is not None:
        times = cfg.grid.points()
    elif spec.beta > 0:
        times = transitions.period_grid(spec, DEFAULT_TIME_POINTS)
    else:
        times = np.zeros(1)
    rows = []
    for t in times:
        t = float(t)
        p = {(i, j): transitions.probability_cpt(spec, i, j, t).probability for i in "ab" for j in "ab"}
        rows.append(
            (
                t,
                p["a", "a"],
                p["a", "b"],
                p["b", "a"],
                p["b", "b"],
                p["a", "a"] + p["a", "b"],
                p["b", "a"] + p["b", "b"],
                p["a", "b"] - p["b", "a"],
            )
        )
    return rows


def cmd_probabilities(cfg: RunConfig) -> str:
    rows = probability_rows(cfg)
    if cfg.format == "json":
        doc = {"columns": list(PROBABILITY_COLUMNS), "rows": [[_rounded(x) for x in r] for r in rows]}
        return json.dumps(doc, indent=2) + "\n"
    lines = [",".join(PROBABILITY_COLUMNS)]
    lines += [",".join(fmt(x) for x in r) for r in rows]
    return "\n".join(lines) + "\n"


def scan_curves(cfg: RunConfig) -> list[neutrino.ProbabilityCurve]:
    grid = cfg.grid or Grid(0.0, 2000.0, 2001)
    baselines = tuple(grid.points().tolist())
    if any(b < 0 for b in baselines):
        raise ConfigError("grid", "baselines must be non-negative")
    common = dict(delta_m2_32=cfg.dm2, sigma=cfg.sigma, energy=cfg.energy, m2_bar=cfg.m2_bar, baselines=baselines)
    try:
        if cfg.alpha_prime:
            configs = [neutrino.OscillationConfig(alpha_prime=a, **common) for a in cfg.alpha_prime]
        else:
            configs = [neutrino.OscillationConfig(rho=cfg.rho, varphi=cfg.varphi, **common)]
    except PhysicsDomainError:
        raise
    except ValueError as exc:
        key = next((k for k in ("energy", "alpha_prime", "dm2") if k in str(exc)), "grid")
        raise ConfigError(key, str(exc)) from None
    return [neutrino.probability_curve(c) for c in configs]


def _curve_csv(curve: neutrino.ProbabilityCurve) -> str:
    lines = [f"# alpha_prime = {fmt(curve.alpha_prime)}", "L_km,P_mumu,P_mutau"]
    lines += [
        f"{fmt(L)},{fmt(pm)},{fmt(pt)}"
        for L, pm, pt in zip(curve.baseline_km, curve.p_mumu, curve.p_mutau)
    ]
    return "\n".join(lines) + "\n"


def _curve_json(curve: neutrino.ProbabilityCurve) -> dict:
    return {
        "alpha_prime": _rounded(curve.alpha_prime),
        "L_km": [_rounded(x) for x in curve.baseline_km],
        "P_mumu": [_rounded(x) for x in curve.p_mumu],
        "P_mutau": [_rounded(x) for x in curve.p_mutau],
    }


def cmd_neutrino_scan(cfg: RunConfig) -> list[tuple[str | None, str]]:
    """Rendered curves as ``(path, text)`` pairs; ``path`` is None for stdout.

    With ``--out`` and several CSV curves, each curve gets its own file with
    an index suffix (``scan.csv`` -> ``scan_0.csv``, ``scan_1.csv``, ...).
    """
    curves = scan_curves(cfg)
    if cfg.format == "json":
        text = json.dumps({"curves": [_curve_json(c) for c in curves]}, indent=2) + "\n"
        return [(cfg.out, text)]
    if cfg.out is None:
        return [(None, "\n".join(_curve_csv(c) for c in curves))]
    if len(curves) == 1:
        return [(cfg.out, _curve_csv(curves[0]))]
    base = Path(cfg.out)
    return [(str(base.with_name(f"{base.stem}_{i}{base.suffix}")), _curve_csv(c)) for i, c in enumerate(curves)]


def cmd_verify(cfg: RunConfig) -> tuple[bool, str]:
    reports = oracle.run_verification(draws=cfg.draws, seed=cfg.seed, tolerance=cfg.tolerance)
    buf = io.StringIO()
    oracle.write_reports(reports, buf)
    return all(r.passed for r in reports), buf.getvalue()


def _emit(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def run(cfg: RunConfig) -> int:
    if cfg.command == "spectrum":
        _emit(cfg.out, cmd_spectrum(cfg))
    elif cfg.command == "probabilities":
        _emit(cfg.out, cmd_probabilities(cfg))
    elif cfg.command == "neutrino-scan":
        for path, text in cmd_neutrino_scan(cfg):
            _emit(path, text)
    else:
        ok, text = cmd_verify(cfg)
        _emit(cfg.out, text)
        if not ok:
            print("ptqs: oracle verification failed", file=sys.stderr)
            return EXIT_VERIFY
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        return run(cfg)
    except ConfigError as exc:
        print(f"ptqs: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except PhysicsDomainError as exc:
        print(f"ptqs: {exc}", file=sys.stderr)
        return EXIT_PHYSICS
    except OSError as exc:
        print(f"ptqs: cannot write output: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
