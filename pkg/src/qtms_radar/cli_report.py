"""Command-line front end.

Subcommands evaluate scenarios and emit the standard report tables:

- ``snr``        quantum SNR (dB) versus signal photon number per scenario
- ``roc``        detection probability versus false-alarm probability
- ``snr-vs-rho`` the SNR required to reach a given correlation
- ``range``      maximum detection range versus minimum required SNR
- ``validate``   Monte Carlo validation of the analytic formulas
- ``scenario``   show / dump / check scenario definitions

CSV goes to stdout (or ``--out``), a ``#``-prefixed summary to stderr.
Output is deterministic: fixed grids unless overridden, 12 significant
digits, LF endings, no timestamps; identical invocations produce
byte-identical bytes.  Exit codes: 0 success, 1 validation failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from dataclasses import dataclass
from typing import Callable, Sequence, TextIO

import numpy as np

from . import oracle_mc
from .detection import effective_rho, roc_curve, snr_for_rho
from .quantum_gaussian import SqueezeParams, covariance_closed_form, pearson_rho
from .radar_range import max_range
from .receiver_model import snr_quantum
from .scenarios import (
    Scenario,
    ScenarioFormatError,
    derive_illumination,
    derive_range_params,
    derive_receiver_inputs,
    linear_to_db,
    parse_scenario,
    preset,
    preset_names,
    resolved_values,
    scenario_from_source,
    write_scenario,
)

_SWEEP_VARIABLES = ("n_s", "p_fa", "rho", "snr_min", "n_channels")
_SWEEP_SCALES = ("lin", "log")
_DEFAULT_VALIDATE_SEED = 20260819
_DEFAULT_VALIDATE_SAMPLES = 1_000_000
# Documented default grids; the published figures give axes, not grids.
_DEFAULT_SNR_SWEEP = ("n_s", 0.01, 1.0, 50, "log")
_DEFAULT_ROC_SWEEP = ("p_fa", 1e-7, 1.0, 70, "log")
_DEFAULT_RHO_SWEEP = ("rho", 0.01, 0.99, 99, "lin")
_DEFAULT_RANGE_SWEEP = ("snr_min", -20.0, 0.0, 41, "lin")
_PEARSON_R_GRID = (0.1, 0.5, 1.0)
# 5x5 oracle grid; capped at 3 so the rarest cell (a=0, b=3, Q1 = e^{-4.5})
# still expects >= 2000 hits at the smallest allowed sample size.
_MARCUM_A_GRID = (0.0, 0.5, 1.0, 2.0, 3.0)
_MARCUM_B_GRID = (0.0, 0.5, 1.0, 2.0, 3.0)


class UsageError(ValueError):
    """Bad flags or grids; reported on stderr with exit code 2."""


@dataclass(frozen=True)
class SweepSpec:
    """One swept axis: variable, bounds, point count and scale."""

    variable: str
    start: float
    stop: float
    points: int
    scale: str

    def __post_init__(self) -> None:
        if self.variable not in _SWEEP_VARIABLES:
            raise UsageError(
                f"unknown sweep variable {self.variable!r}; choose one of "
                f"{', '.join(_SWEEP_VARIABLES)}"
            )
        if self.scale not in _SWEEP_SCALES:
            raise UsageError(f"sweep scale must be lin or log, got {self.scale!r}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise UsageError(f"sweep bounds must be finite, got {self.start}..{self.stop}")
        if not self.start < self.stop:
            raise UsageError(f"sweep start must be < stop, got {self.start}..{self.stop}")
        if self.points < 2:
            raise UsageError(f"sweep needs >= 2 points, got {self.points}")
        if self.scale == "log" and not self.start > 0.0:
            raise UsageError(f"log sweep requires start > 0, got {self.start}")

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)

    def describe(self) -> str:
        return (
            f"{self.variable} {self.scale} [{_fmt(self.start)}, {_fmt(self.stop)}] "
            f"x{self.points}"
        )


@dataclass(frozen=True)
class CsvTable:
    """Rectangular, finite-valued numeric table."""

    header: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if not self.header:
            raise ValueError("CSV table needs at least one column")
        for row in self.rows:
            if len(row) != len(self.header):
                raise ValueError(
                    f"ragged CSV row: {len(row)} values under {len(self.header)} columns"
                )
            for v in row:
                if not math.isfinite(v):
                    raise ValueError(f"CSV values must be finite, got {v}")

    def render(self) -> str:
        lines = [",".join(self.header)]
        lines.extend(",".join(_fmt(v) for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def _label(name: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")
    return slug or "scenario"


def _parse_sweep(text: str) -> SweepSpec:
    parts = text.split(":")
    if len(parts) != 5:
        raise UsageError(
            f"sweep must be <var>:<start>:<stop>:<points>:<lin|log>, got {text!r}"
        )
    var, start_s, stop_s, points_s, scale = parts
    try:
        start = float(start_s)
        stop = float(stop_s)
        points = int(points_s)
    except ValueError as exc:
        raise UsageError(f"bad sweep numbers in {text!r}: {exc}") from exc
    return SweepSpec(variable=var, start=start, stop=stop, points=points, scale=scale)


def _default_sweep(spec: tuple[str, float, float, int, str]) -> SweepSpec:
    var, start, stop, points, scale = spec
    return SweepSpec(variable=var, start=start, stop=stop, points=points, scale=scale)


def _resolve_sweep(
    args: argparse.Namespace,
    allowed: tuple[str, ...],
    default: tuple[str, float, float, int, str],
) -> tuple[SweepSpec, bool]:
    """The command's sweep: parsed from --sweep or the documented default."""
    if getattr(args, "sweep", None):
        spec = _parse_sweep(args.sweep)
        if spec.variable not in allowed:
            raise UsageError(
                f"this command sweeps {', '.join(allowed)}; got {spec.variable!r}"
            )
        return spec, False
    return _default_sweep(default), True


def _load_scenarios(args: argparse.Namespace, default_all: bool) -> list[Scenario]:
    sources: list[str] = list(getattr(args, "scenario", None) or [])
    if not sources:
        if not default_all:
            raise UsageError("give at least one --scenario <name|path>")
        sources = list(preset_names())
    return [scenario_from_source(src) for src in sources]


def _write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _footer(lines: Sequence[str], stream: TextIO | None = None) -> None:
    stream = stream if stream is not None else sys.stderr
    for line in lines:
        stream.write(f"# {line}\n")


def _sweep_note(spec: SweepSpec, is_default: bool) -> str:
    return f"sweep: {spec.describe()}{' (default)' if is_default else ''}"


def _scenario_rho(s: Scenario) -> float:
    g, n, i = derive_receiver_inputs(s)
    return effective_rho(s.rho0, snr_quantum(g, n, i))


def _cmd_snr(args: argparse.Namespace) -> int:
    scenarios = _load_scenarios(args, default_all=True)
    spec, is_default = _resolve_sweep(args, ("n_s",), _DEFAULT_SNR_SWEEP)
    grid = spec.values()

    header = ["n_s"] + [f"snr_db_{_label(s.name)}" for s in scenarios]
    columns: list[np.ndarray] = [grid]
    for s in scenarios:
        g, n, _ = derive_receiver_inputs(s)
        snr_db = np.array(
            [
                linear_to_db(snr_quantum(g, n, derive_illumination(s, n_s=float(x))))
                for x in grid
            ]
        )
        columns.append(snr_db)
    table = CsvTable(
        header=tuple(header),
        rows=tuple(tuple(float(c[k]) for c in columns) for k in range(len(grid))),
    )
    _write_out(table.render(), args.out)

    notes = [
        "command: snr",
        f"scenarios: {', '.join(s.name for s in scenarios)}",
        _sweep_note(spec, is_default),
        "m_modes: "
        + ", ".join(f"{s.name}={derive_illumination(s).m_modes}" for s in scenarios),
    ]
    names = [s.name for s in scenarios]
    if "EJPA" in names and "JPA" in names:
        hits = [k for k, x in enumerate(grid) if abs(x - 0.1) <= 1e-9 * 0.1]
        if hits:
            k = hits[0]
            gap = float(columns[1 + names.index("EJPA")][k] - columns[1 + names.index("JPA")][k])
            notes.append(f"EJPA-JPA gap at n_s = 0.1: {_fmt(gap)} dB")
    _footer(notes)
    return 0


def _cmd_roc(args: argparse.Namespace) -> int:
    if args.rho is not None and args.scenario:
        raise UsageError("--rho and --scenario are alternatives; give only one")

    channels: list[int] = []
    sweep_notes: list[str] = []
    if getattr(args, "sweep", None):
        parsed = _parse_sweep(args.sweep)
        if parsed.variable == "n_channels":
            channels = sorted({int(round(v)) for v in parsed.values()})
            if any(c < 1 for c in channels):
                raise UsageError("n_channels sweep must stay >= 1")
            sweep_notes.append(f"channels from sweep: {parsed.describe()}")
            spec, is_default = _default_sweep(_DEFAULT_ROC_SWEEP), True
        elif parsed.variable == "p_fa":
            spec, is_default = parsed, False
        else:
            raise UsageError(f"roc sweeps p_fa or n_channels; got {parsed.variable!r}")
    else:
        spec, is_default = _default_sweep(_DEFAULT_ROC_SWEEP), True
    if not channels:
        try:
            channels = [int(tok) for tok in str(args.channels).split(",") if tok.strip()]
        except ValueError as exc:
            raise UsageError(f"--channels must be comma-separated integers: {exc}") from exc
        if not channels or any(c < 1 for c in channels):
            raise UsageError(f"--channels needs integers >= 1, got {args.channels!r}")

    if args.rho is not None:
        if not 0.0 <= args.rho < 1.0:
            raise UsageError(f"--rho must be in [0, 1), got {args.rho}")
        sources: list[tuple[str, float]] = [("rho", float(args.rho))]
        source_note = f"sources: rho = {_fmt(args.rho)}"
    else:
        scenarios = _load_scenarios(args, default_all=True)
        sources = [(s.name, _scenario_rho(s)) for s in scenarios]
        source_note = "sources: " + ", ".join(
            f"{name} (rho = {_fmt(rho)})" for name, rho in sources
        )

    grid = spec.values()
    header = ["p_fa"]
    columns = [np.asarray(grid, dtype=float)]
    for name, rho in sources:
        for n in channels:
            curve = roc_curve(rho, n, grid)
            header.append(f"pd_{_label(name)}_n{n}")
            columns.append(np.asarray(curve.p_d, dtype=float))
    table = CsvTable(
        header=tuple(header),
        rows=tuple(tuple(float(c[k]) for c in columns) for k in range(len(grid))),
    )
    _write_out(table.render(), args.out)

    notes = [
        "command: roc",
        source_note,
        f"channels: {', '.join(str(c) for c in channels)}",
        _sweep_note(spec, is_default),
        *sweep_notes,
    ]
    _footer(notes)
    return 0


def _cmd_snr_vs_rho(args: argparse.Namespace) -> int:
    rho0 = float(args.rho0)
    if not 0.0 < rho0 <= 1.0:
        raise UsageError(f"--rho0 must be in (0, 1], got {rho0}")
    spec, is_default = _resolve_sweep(args, ("rho",), _DEFAULT_RHO_SWEEP)
    grid = spec.values()
    if grid[0] <= 0.0 or grid[-1] >= rho0:
        raise UsageError(
            f"rho grid must lie strictly inside (0, rho0 = {_fmt(rho0)}), "
            f"got [{_fmt(float(grid[0]))}, {_fmt(float(grid[-1]))}]"
        )

    rows = []
    for x in grid:
        snr = snr_for_rho(float(x), rho0=rho0)
        rows.append((float(x), snr, linear_to_db(snr)))
    table = CsvTable(header=("rho", "snr_linear", "snr_db"), rows=tuple(rows))
    _write_out(table.render(), args.out)
    _footer(
        [
            "command: snr-vs-rho",
            f"rho0: {_fmt(rho0)}",
            _sweep_note(spec, is_default),
        ]
    )
    return 0


def _cmd_range(args: argparse.Namespace) -> int:
    scenarios = _load_scenarios(args, default_all=False) if args.scenario else [preset("EJPA")]
    if len(scenarios) != 1:
        raise UsageError("range takes exactly one --scenario")
    s = scenarios[0]
    spec, is_default = _resolve_sweep(args, ("snr_min",), _DEFAULT_RANGE_SWEEP)
    grid = spec.values()

    rows = []
    for snr_min_db in grid:
        params = derive_range_params(s, snr_min_linear=10.0 ** (float(snr_min_db) / 10.0))
        rows.append((float(snr_min_db), max_range(params)))
    table = CsvTable(header=("snr_min_db", "range_m"), rows=tuple(rows))
    _write_out(table.render(), args.out)

    reference = max_range(derive_range_params(s))
    _footer(
        [
            "command: range",
            f"scenario: {s.name}",
            _sweep_note(spec, is_default),
            f"reference: snr_min_db = {_fmt(s.snr_db)} -> range {_fmt(reference)} m",
        ]
    )
    return 0


def _validate_reports(
    seed: int, samples: int, corrupt_marcum: bool
) -> list[tuple[str, str, oracle_mc.McReport]]:
    reports: list[tuple[str, str, oracle_mc.McReport]] = []
    for k, r in enumerate(_PEARSON_R_GRID):
        cov = covariance_closed_form(SqueezeParams(r=r, phi=0.0))
        draws = oracle_mc.sample_gaussian(cov, samples, seed + k)
        target = pearson_rho(r)
        for pair, pair_target in (((0, 2), target), ((1, 3), -target)):
            rep = oracle_mc.empirical_pearson(draws, pair, pair_target)
            reports.append(("pearson", f"r={_fmt(r)} pair={pair[0]}{pair[1]}", rep))
    idx = 0
    for a in _MARCUM_A_GRID:
        for b in _MARCUM_B_GRID:
            rep = oracle_mc.marcum_oracle(a, b, samples, seed + 100 + idx)
            if corrupt_marcum:
                # Negative-control hook: shift the target far outside the
                # statistical gate so the run must fail.
                bad_target = rep.target + 0.05
                rep = oracle_mc.McReport(
                    estimate=rep.estimate,
                    std_error=rep.std_error,
                    n_samples=rep.n_samples,
                    target=bad_target,
                    z_score=oracle_mc._z_score(rep.estimate, bad_target, rep.std_error),
                )
            reports.append(("marcum", f"a={_fmt(a)} b={_fmt(b)}", rep))
            idx += 1
    return reports


def _cmd_validate(args: argparse.Namespace) -> int:
    seed = int(args.seed)
    if not 0 <= seed < (1 << 64):
        raise UsageError(f"--seed must be in [0, 2^64), got {seed}")
    samples = int(args.samples)
    if samples < 100_000:
        raise UsageError(f"--samples must be >= 100000, got {samples}")

    reports = _validate_reports(seed, samples, bool(args.corrupt_marcum))
    widths = (8, 22, 16, 16, 13, 10)
    head = ("oracle", "point", "estimate", "target", "std_error", "z")
    lines = ["".join(f"{h:<{w}}" for h, w in zip(head, widths)) + "verdict"]
    failures = []
    max_abs_z = 0.0
    for oracle, point, rep in reports:
        ok = abs(rep.z_score) < 5.0
        if not ok:
            failures.append(f"{oracle} {point} z = {_fmt(rep.z_score)}")
        if math.isfinite(rep.z_score):
            max_abs_z = max(max_abs_z, abs(rep.z_score))
        else:
            max_abs_z = math.inf
        cells = (
            oracle,
            point,
            _fmt(rep.estimate),
            _fmt(rep.target),
            _fmt(rep.std_error),
            f"{rep.z_score:+.3f}",
        )
        lines.append(
            "".join(f"{c:<{w}}" for c, w in zip(cells, widths))
            + ("pass" if ok else "FAIL")
        )
    verdict = "PASS" if not failures else "FAIL"
    lines.append(
        f"validate: {len(reports)} reports, n = {samples}, seed = {seed}, "
        f"max |z| = {_fmt(max_abs_z)}, {verdict}"
    )
    _write_out("\n".join(lines) + "\n", args.out)

    notes = ["command: validate", f"seed: {seed}", f"samples: {samples}"]
    notes.extend(f"failed: {f}" for f in failures)
    _footer(notes)
    return 0 if not failures else 1


def _cmd_scenario(args: argparse.Namespace) -> int:
    action = args.action
    if action == "show":
        s = scenario_from_source(args.source)
        lines = [f"{key} = {value} ({label})" for key, value, label in resolved_values(s)]
        _write_out("\n".join(lines) + "\n", args.out)
        _footer(["command: scenario show", f"scenario: {s.name}"])
        return 0
    if action == "dump":
        s = scenario_from_source(args.source)
        _write_out(write_scenario(s), args.out)
        _footer(["command: scenario dump", f"scenario: {s.name}"])
        return 0
    if action == "check":
        from pathlib import Path

        path = Path(args.source)
        if not path.exists():
            raise UsageError(f"scenario check needs an existing file, got {args.source!r}")
        try:
            s = parse_scenario(path.read_text(encoding="utf-8"))
        except ScenarioFormatError as exc:
            for err in exc.errors:
                sys.stderr.write(f"{args.source}: {err}\n")
            return 1
        _footer(["command: scenario check", f"scenario: {s.name}", "ok"])
        return 0
    raise UsageError(f"unknown scenario action {action!r}")


def _add_common_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="output path, or - for stdout (default)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtms-radar",
        description="Quantum two-mode squeezing radar performance reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_snr = sub.add_parser("snr", help="SNR (dB) versus signal photon number")
    p_snr.add_argument("--scenario", action="append", help="preset name or scenario file")
    p_snr.add_argument("--sweep", help="n_s:<start>:<stop>:<points>:<lin|log>")
    _add_common_output_flags(p_snr)
    p_snr.set_defaults(func=_cmd_snr)

    p_roc = sub.add_parser("roc", help="detection vs false-alarm probability")
    p_roc.add_argument("--scenario", action="append", help="preset name or scenario file")
    p_roc.add_argument("--rho", type=float, default=None, help="explicit correlation in [0, 1)")
    p_roc.add_argument("--channels", default="150", help="comma-separated channel counts")
    p_roc.add_argument("--sweep", help="p_fa or n_channels sweep spec")
    _add_common_output_flags(p_roc)
    p_roc.set_defaults(func=_cmd_roc)

    p_rho = sub.add_parser("snr-vs-rho", help="SNR required for a target correlation")
    p_rho.add_argument("--rho0", type=float, default=1.0, help="correlation ceiling (0, 1]")
    p_rho.add_argument("--sweep", help="rho:<start>:<stop>:<points>:<lin|log>")
    _add_common_output_flags(p_rho)
    p_rho.set_defaults(func=_cmd_snr_vs_rho)

    p_range = sub.add_parser("range", help="maximum range versus minimum SNR")
    p_range.add_argument("--scenario", action="append", help="preset name or scenario file")
    p_range.add_argument("--sweep", help="snr_min:<start>:<stop>:<points>:<lin|log>")
    _add_common_output_flags(p_range)
    p_range.set_defaults(func=_cmd_range)

    p_val = sub.add_parser("validate", help="run the Monte Carlo validation suite")
    p_val.add_argument("--seed", type=int, default=_DEFAULT_VALIDATE_SEED)
    p_val.add_argument("--samples", type=int, default=_DEFAULT_VALIDATE_SAMPLES)
    p_val.add_argument("--corrupt-marcum", action="store_true", help=argparse.SUPPRESS)
    _add_common_output_flags(p_val)
    p_val.set_defaults(func=_cmd_validate)

    p_scn = sub.add_parser("scenario", help="show, dump or check a scenario")
    p_scn.add_argument("action", choices=("show", "dump", "check"))
    p_scn.add_argument("source", help="preset name or scenario file")
    _add_common_output_flags(p_scn)
    p_scn.set_defaults(func=_cmd_scenario)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return 0 if code is None else int(code)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ScenarioFormatError as exc:
        for err in exc.errors:
            sys.stderr.write(f"error: {err}\n")
        return 1
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
