"""Command-line front end.

Emits exact values, expansion coefficients, convergence tables and
verification reports as CSV (RFC-4180-style) or JSON.  Exit status: 0 on
success, 1 on verification failure, 2 on usage errors.
"""
from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass

import click
import mpmath

from . import asym, energy, jacobi, minimize as optim
from .exceptions import CapacityError, DomainError, FeketeError
from .jacobi import JacobiParams
from .precision import STD, active, use

EXACT_KINDS = ("pq", "interval")
EXPANSION_KINDS = ("lambda", "p1", "disc", "potential", "elliptic", "interval",
                   "general-interval")
VERIFY_KINDS = ("lambda", "p1", "disc", "potential", "elliptic", "interval", "minimize")


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: command, ranges, charges, order, output shape."""

    command: str
    kind: str
    values: tuple[int, ...] = ()
    p: float | None = None
    q: float | None = None
    order: int = 0
    fmt: str = "csv"
    a: float | None = None
    b: float | None = None
    tol: float = 1e-8
    slope_tol: float = 0.15


def _parse_range(text: str | None, flag: str) -> tuple[int, ...]:
    """Parse 'a..b' (inclusive) or a comma list of integers."""
    if text is None or not text.strip():
        raise click.UsageError(f"empty range for {flag}")
    text = text.strip()
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise ValueError("descending range")
            return tuple(range(lo, hi + 1))
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise click.UsageError(f"cannot parse range {text!r} for {flag}: {exc}") from exc


def _resolve_charges(p, q, alpha, beta, required: bool) -> tuple[float, float] | None:
    """Exactly one of (p, q) / (alpha, beta); the other pair is derived."""
    has_pq = p is not None or q is not None
    has_ab = alpha is not None or beta is not None
    if has_pq and has_ab:
        raise click.UsageError("give either --p/--q or --alpha/--beta, not both")
    if has_pq:
        if p is None or q is None:
            raise click.UsageError("--p and --q must be given together")
        return float(p), float(q)
    if has_ab:
        if alpha is None or beta is None:
            raise click.UsageError("--alpha and --beta must be given together")
        return (alpha + 1) / 2, (beta + 1) / 2
    if required:
        raise click.UsageError("this command needs --p/--q (or --alpha/--beta)")
    return None


def _format_scalar(x) -> str:
    ctx = active()
    if ctx.mode == STD:
        return format(float(x), ".17g")
    return mpmath.nstr(mpmath.mpf(x), 32)


def _json_scalar(x):
    return float(x) if active().mode == STD else _format_scalar(x)


def _write(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", newline="") as handle:
            handle.write(text)


def _emit_table(header: tuple[str, ...], rows, fmt: str, out: str | None,
                command: str) -> None:
    if fmt == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(row))
        _write("\r\n".join(lines) + "\r\n", out)
    else:
        payload = {
            "command": command,
            "rows": [dict(zip(header, row)) for row in rows],
        }
        _write(json.dumps(payload, indent=2) + "\n", out)


# -- command implementations (testable without the click layer) ---------------


def cmd_exact(cfg: RunConfig) -> tuple[tuple[str, ...], list[tuple[str, ...]]]:
    rows = []
    if cfg.kind == "interval":
        header = ("N", "interval_energy", "log_discriminant")
        for N in cfg.values:
            rows.append((
                str(N),
                _format_scalar(energy.interval_energy_exact(N)),
                _format_scalar(energy.discriminant_N_log(N)),
            ))
        return header, rows
    header = ("n", "potential_energy", "elliptic_log_energy", "log_pq_discriminant")
    for n in cfg.values:
        rows.append((
            str(n),
            _format_scalar(energy.potential_energy_exact(n, cfg.p, cfg.q)),
            _format_scalar(energy.elliptic_log_energy_exact(n, cfg.p, cfg.q)),
            _format_scalar(energy.pq_discriminant_log(n, cfg.p, cfg.q)),
        ))
    return header, rows


def _build_expansion(kind: str, order: int, p, q, a=None, b=None) -> asym.Expansion:
    if kind == "interval":
        return asym.interval_energy_expansion(order)
    if kind == "general-interval":
        if a is None or b is None:
            raise click.UsageError("general-interval needs --a and --b")
        return asym.general_interval_energy_expansion(a, b, order)
    if p is None or q is None:
        raise click.UsageError(f"kind {kind!r} needs charges --p/--q or --alpha/--beta")
    params = JacobiParams.from_charges(p, q)
    if kind == "lambda":
        return asym.leading_coeff_expansion(params, order)
    if kind == "p1":
        return asym.value_at_one_expansion(params, order)
    if kind == "disc":
        return asym.discriminant_expansion(params, order)
    if kind == "potential":
        return asym.potential_energy_expansion(p, q, order)
    if kind == "elliptic":
        return asym.elliptic_log_energy_expansion(p, q, order)
    raise click.UsageError(f"unknown expansion kind {kind!r}")


def cmd_coeffs(cfg: RunConfig) -> dict:
    expansion = _build_expansion(cfg.kind, cfg.order, cfg.p, cfg.q, cfg.a, cfg.b)
    return asym.expansion_to_json(expansion)


def _exact_for_kind(kind: str, n: int, p, q):
    if kind == "interval":
        return energy.interval_energy_exact(n)
    params = JacobiParams.from_charges(p, q)
    if kind == "lambda":
        return jacobi.leading_coeff_log(n, params)
    if kind == "p1":
        return jacobi.value_at_one_log(n, params)
    if kind == "disc":
        return jacobi.discriminant_log(n, params)
    if kind == "potential":
        return energy.potential_energy_exact(n, p, q)
    if kind == "elliptic":
        return energy.elliptic_log_energy_exact(n, p, q)
    raise click.UsageError(f"unknown exact kind {kind!r}")


def cmd_table(cfg: RunConfig) -> tuple[tuple[str, ...], list[tuple[str, ...]]]:
    expansion = _build_expansion(cfg.kind, cfg.order, cfg.p, cfg.q, cfg.a, cfg.b)
    header = ["n", "exact"]
    for mp_ in range(cfg.order + 1):
        header += [f"truncated_{mp_}", f"error_{mp_}"]
    rows = []
    for n in cfg.values:
        exact = _exact_for_kind(cfg.kind, n, cfg.p, cfg.q)
        row = [str(n), _format_scalar(exact)]
        for mp_ in range(cfg.order + 1):
            approx = asym.evaluate_expansion(expansion, n, mp_)
            row += [_format_scalar(approx), _format_scalar(abs(exact - approx))]
        rows.append(tuple(row))
    return tuple(header), rows


def _fit_slope(ns, errors) -> float:
    xs = [math.log(n) for n in ns]
    floor = sys.float_info.min
    ys = [math.log(max(float(e), floor)) for e in errors]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    var = sum((x - mean_x) ** 2 for x in xs)
    cov = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    return cov / var


def cmd_verify(cfg: RunConfig):
    """Rows of (exact, truncated, error) plus fitted slopes per truncation order.

    Returns (header, rows, ok); ok is False when a slope misses
    -(order+1) by more than the slope tolerance (or, for the minimizer
    check, when a zero deviates beyond the tolerance).
    """
    header = ("record", "kind", "order", "n", "exact", "truncated", "error",
              "slope", "expected", "ok")
    rows: list[tuple[str, ...]] = []
    ok = True
    if cfg.kind == "minimize":
        p = cfg.p if cfg.p is not None else 1.0
        q = cfg.q if cfg.q is not None else 1.0
        for n in cfg.values:
            report = optim.minimize_potential(n, p, q)
            target = jacobi.zeros(n, JacobiParams.from_charges(p, q)).points
            deviation = max(abs(u - v) for u, v in zip(report.points, target))
            good = report.converged and deviation <= cfg.tol
            ok = ok and good
            rows.append(("point", "minimize", "", str(n), "", "",
                         _format_scalar(deviation), "", "", str(good).lower()))
        return header, rows, ok
    if len(cfg.values) < 2:
        raise click.UsageError("verify needs at least two n values to fit slopes")
    expansion = _build_expansion(cfg.kind, cfg.order, cfg.p, cfg.q, cfg.a, cfg.b)
    exacts = {n: _exact_for_kind(cfg.kind, n, cfg.p, cfg.q) for n in cfg.values}
    errors_by_n = {n: [] for n in cfg.values}
    for order in range(cfg.order + 1):
        errors = []
        for n in cfg.values:
            approx = asym.evaluate_expansion(expansion, n, order)
            err = abs(exacts[n] - approx)
            errors.append(err)
            errors_by_n[n].append(err)
            rows.append(("point", cfg.kind, str(order), str(n),
                         _format_scalar(exacts[n]), _format_scalar(approx),
                         _format_scalar(err), "", "", ""))
        slope = _fit_slope(cfg.values, errors)
        expected = -(order + 1)
        good = abs(slope - expected) <= cfg.slope_tol
        ok = ok and good
        rows.append(("slope", cfg.kind, str(order), "", "", "", "",
                     f"{slope:.6f}", str(expected), str(good).lower()))
    # empirically optimal truncation per n (the series is asymptotic: more
    # terms stop helping once below the precision floor)
    for n in cfg.values:
        errs = errors_by_n[n]
        best = min(range(len(errs)), key=lambda i: float(errs[i]))
        rows.append(("best", cfg.kind, str(best), str(n), "", "",
                     _format_scalar(errs[best]), "", "", ""))
    return header, rows, ok


def cmd_zeros(cfg: RunConfig) -> tuple[tuple[str, ...], list[tuple[str, ...]]]:
    header = ("n", "index", "x")
    rows = []
    params = JacobiParams.from_charges(cfg.p, cfg.q)
    for n in cfg.values:
        for i, x in enumerate(jacobi.zeros(n, params).points, start=1):
            rows.append((str(n), str(i), _format_scalar(x)))
    return header, rows


def cmd_minimize(cfg: RunConfig) -> dict:
    (n,) = cfg.values
    report = optim.minimize_potential(n, cfg.p, cfg.q, tol=cfg.tol)
    return {
        "n": n,
        "p": cfg.p,
        "q": cfg.q,
        "converged": report.converged,
        "iterations": report.iterations,
        "grad_norm": _json_scalar(report.grad_norm),
        "energy": _json_scalar(report.energy),
        "points": [_json_scalar(x) for x in report.points],
    }


# -- click layer ---------------------------------------------------------------


def _common_options(fn):
    fn = click.option("--precision", type=click.Choice(["std", "ext"]),
                      envvar="FEKETE_PRECISION", default="std",
                      help="Scalar arithmetic mode (also via FEKETE_PRECISION).")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
                      default="csv", help="Output format.")(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False, writable=True),
                      default=None, help="Output path (default: stdout).")(fn)
    return fn


def _charge_options(fn):
    fn = click.option("--p", type=float, default=None, help="Charge at +1.")(fn)
    fn = click.option("--q", type=float, default=None, help="Charge at -1.")(fn)
    fn = click.option("--alpha", type=float, default=None, help="Jacobi exponent alpha = 2p-1.")(fn)
    fn = click.option("--beta", type=float, default=None, help="Jacobi exponent beta = 2q-1.")(fn)
    return fn


@click.group()
@click.version_option()
def cli():
    """Exact minimal logarithmic energies of interval point configurations,
    their complete asymptotic expansions, and numerical verification."""


@cli.command("exact")
@click.option("--kind", type=click.Choice(EXACT_KINDS), default=None,
              help="pq: external-field problem rows; interval: Fekete rows.")
@click.option("--n", "n_range", default=None, help="Range a..b or comma list (pq kind).")
@click.option("--N", "N_range", default=None, help="Range a..b or comma list (interval kind).")
@_charge_options
@_common_options
def exact_command(kind, n_range, N_range, p, q, alpha, beta, precision, fmt, out):
    """Exact energies and log-discriminants for a range of sizes."""
    use(precision)
    if kind is None:
        kind = "interval" if N_range is not None else "pq"
    if kind == "interval":
        values = _parse_range(N_range, "--N")
        cfg = RunConfig(command="exact", kind=kind, values=values, fmt=fmt)
    else:
        values = _parse_range(n_range, "--n")
        charges = _resolve_charges(p, q, alpha, beta, required=True)
        cfg = RunConfig(command="exact", kind=kind, values=values,
                        p=charges[0], q=charges[1], fmt=fmt)
    try:
        header, rows = cmd_exact(cfg)
    except (DomainError, CapacityError) as exc:
        raise click.UsageError(str(exc)) from exc
    _emit_table(header, rows, fmt, out, "exact")


@cli.command("coeffs")
@click.option("--kind", type=click.Choice(EXPANSION_KINDS), required=True)
@click.option("--order", "--M", "order", type=int, default=4,
              help="Number of tail coefficients.")
@click.option("--a", type=float, default=None, help="Left endpoint (general-interval).")
@click.option("--b", type=float, default=None, help="Right endpoint (general-interval).")
@_charge_options
@_common_options
def coeffs_command(kind, order, a, b, p, q, alpha, beta, precision, fmt, out):
    """Expansion coefficients as serialized JSON."""
    use(precision)
    needs_charges = kind not in ("interval", "general-interval")
    charges = _resolve_charges(p, q, alpha, beta, required=needs_charges)
    cfg = RunConfig(command="coeffs", kind=kind, order=order, fmt=fmt, a=a, b=b,
                    p=charges[0] if charges else None,
                    q=charges[1] if charges else None)
    try:
        payload = cmd_coeffs(cfg)
    except (DomainError, CapacityError) as exc:
        raise click.UsageError(str(exc)) from exc
    _write(json.dumps(payload, indent=2) + "\n", out)


@cli.command("table")
@click.option("--kind", type=click.Choice(EXPANSION_KINDS), required=True)
@click.option("--n", "--N", "n_range", default=None, help="Range a..b or comma list.")
@click.option("--order", "--M", "order", type=int, default=2)
@click.option("--a", type=float, default=None)
@click.option("--b", type=float, default=None)
@_charge_options
@_common_options
def table_command(kind, n_range, order, a, b, p, q, alpha, beta, precision, fmt, out):
    """Convergence table: exact value, truncations and errors per n."""
    use(precision)
    needs_charges = kind not in ("interval", "general-interval")
    charges = _resolve_charges(p, q, alpha, beta, required=needs_charges)
    cfg = RunConfig(command="table", kind=kind, values=_parse_range(n_range, "--n"),
                    order=order, fmt=fmt, a=a, b=b,
                    p=charges[0] if charges else None,
                    q=charges[1] if charges else None)
    try:
        header, rows = cmd_table(cfg)
    except (DomainError, CapacityError) as exc:
        raise click.UsageError(str(exc)) from exc
    _emit_table(header, rows, fmt, out, "table")


@cli.command("zeros")
@click.option("--n", "n_range", required=True, help="Degree range a..b or comma list.")
@_charge_options
@_common_options
def zeros_command(n_range, p, q, alpha, beta, precision, fmt, out):
    """Zeros of the Jacobi polynomial attached to the charges."""
    use(precision)
    charges = _resolve_charges(p, q, alpha, beta, required=True)
    cfg = RunConfig(command="zeros", kind="zeros", values=_parse_range(n_range, "--n"),
                    p=charges[0], q=charges[1], fmt=fmt)
    try:
        header, rows = cmd_zeros(cfg)
    except (DomainError, FeketeError) as exc:
        raise click.UsageError(str(exc)) from exc
    _emit_table(header, rows, fmt, out, "zeros")


@cli.command("minimize")
@click.option("--n", "n_value", type=int, required=True)
@click.option("--tol", type=float, default=1e-10)
@_charge_options
@_common_options
def minimize_command(n_value, tol, p, q, alpha, beta, precision, fmt, out):
    """Run the electrostatic Newton solver and report the configuration."""
    use(precision)
    charges = _resolve_charges(p, q, alpha, beta, required=True)
    cfg = RunConfig(command="minimize", kind="minimize", values=(n_value,),
                    p=charges[0], q=charges[1], tol=tol, fmt=fmt)
    try:
        payload = cmd_minimize(cfg)
    except (DomainError, FeketeError) as exc:
        raise click.UsageError(str(exc)) from exc
    if fmt == "json":
        _write(json.dumps(payload, indent=2) + "\n", out)
    else:
        header = ("index", "x")
        rows = [(str(i), str(v)) for i, v in enumerate(payload["points"], start=1)]
        _emit_table(header, rows, fmt, out, "minimize")


@cli.command("verify")
@click.option("--kind", type=click.Choice(VERIFY_KINDS), required=True)
@click.option("--n", "--N", "n_range", required=True,
              help="Sizes to test, e.g. 20,40,80,160.")
@click.option("--order", "--M", "order", type=int, default=2,
              help="Largest truncation order to check.")
@click.option("--slope-tol", type=float, default=0.15,
              help="Allowed deviation of fitted slopes from -(order+1).")
@click.option("--tol", type=float, default=1e-8,
              help="Zero-deviation tolerance for --kind minimize.")
@_charge_options
@_common_options
def verify_command(kind, n_range, order, slope_tol, tol, p, q, alpha, beta,
                   precision, fmt, out):
    """Check truncation-order decay (or minimizer agreement) and set the
    exit status accordingly."""
    use(precision)
    needs_charges = kind not in ("interval", "minimize")
    charges = _resolve_charges(p, q, alpha, beta, required=needs_charges)
    cfg = RunConfig(command="verify", kind=kind, values=_parse_range(n_range, "--n"),
                    order=order, slope_tol=slope_tol, tol=tol, fmt=fmt,
                    p=charges[0] if charges else None,
                    q=charges[1] if charges else None)
    try:
        header, rows, ok = cmd_verify(cfg)
    except (DomainError, CapacityError, FeketeError) as exc:
        raise click.UsageError(str(exc)) from exc
    if fmt == "json":
        payload = {
            "command": "verify",
            "ok": ok,
            "rows": [dict(zip(header, row)) for row in rows],
        }
        _write(json.dumps(payload, indent=2) + "\n", out)
    else:
        _emit_table(header, rows, fmt, out, "verify")
    if not ok:
        sys.exit(1)


def main():
    cli()


if __name__ == "__main__":
    main()
