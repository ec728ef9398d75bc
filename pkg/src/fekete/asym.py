"""Truncated Poincare-type expansions.

Each builder returns an :class:`Expansion` holding the leading coefficients
(of n^2, n log n, n, log n, 1, under fixed keys) and the tail coefficients
c_m of n^(-m) up to a requested order.  Tail coefficients are assembled
symbolically from exact-rational Bernoulli data and rounded once into the
active precision; the constant terms combine log 2, log pi, log A and
log-gamma / negapolygamma values at O(1) arguments.

The series are asymptotic (divergent in general): evaluation never chooses
a truncation order by itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .exceptions import CapacityError, DomainError
from .jacobi import JacobiParams
from .precision import EXT, Scalar, active, as_fraction
from .specfun import (
    bernoulli_number,
    constants,
    hurwitz_zeta_negint_fraction,
    log_gamma,
    negapolygamma2,
)

LEADING_KEYS = ("n2", "nlogn", "n", "logn", "const")

KINDS = (
    "log_lambda",
    "log_P1",
    "log_D",
    "potential",
    "elliptic_E0",
    "interval_E0",
    "general_interval_E0",
)

_MAX_ORDER = {"std": 10, "ext": 16}


def max_order() -> int:
    """Largest supported truncation order in the active mode."""
    return _MAX_ORDER[active().mode]


@dataclass(frozen=True)
class Expansion:
    """A truncated asymptotic series: leading terms plus n^(-m) tail."""

    kind: str
    params: dict[str, float]
    leading: dict[str, Scalar]
    tail: tuple[Scalar, ...]

    @property
    def order(self) -> int:
        return len(self.tail)


def _check_order(order: int) -> None:
    if order < 0:
        raise DomainError(f"truncation order must be >= 0, got {order}")
    if order > max_order():
        raise CapacityError(f"order {order} exceeds the mode maximum {max_order()}")


def _zeta(m: int, a: Fraction) -> Fraction:
    return hurwitz_zeta_negint_fraction(m, a)


_ONE = Fraction(1)


def _half_pow(m: int) -> Fraction:
    """1 - 2^(-m)."""
    return _ONE - Fraction(1, 2 ** m)


# -- exact-rational tail coefficients ---------------------------------------


def lambda_tail_fraction(m: int, alpha, beta) -> Fraction:
    """c_m of log lambda_n: (-1)^(m-1)/m [(1-2^-m) zeta(-m, a+b+1) + zeta(-m)]."""
    ab1 = as_fraction(alpha) + as_fraction(beta) + 1
    value = (_half_pow(m) * _zeta(m, ab1) + _zeta(m, _ONE)) / m
    return value if m % 2 else -value


def value_at_one_tail_fraction(m: int, alpha) -> Fraction:
    """c_m of log P_n(1): (-1)^m/m [zeta(-m, alpha+1) - zeta(-m)]."""
    a1 = as_fraction(alpha) + 1
    value = (_zeta(m, a1) - _zeta(m, _ONE)) / m
    return -value if m % 2 else value


def discriminant_psi_fraction(m: int, alpha, beta) -> Fraction:
    """The bracket Psi_m(alpha, beta) of the discriminant expansion."""
    a1 = as_fraction(alpha) + 1
    b1 = as_fraction(beta) + 1
    ab1 = a1 + b1 - 1
    half = _half_pow(m)
    value = -Fraction(2 * m + 1, m + 1) * _zeta(m + 1, _ONE) - 2 * _zeta(m, _ONE)
    value += a1 * _zeta(m, a1) - _zeta(m + 1, a1) / (m + 1)
    value += b1 * _zeta(m, b1) - _zeta(m + 1, b1) / (m + 1)
    value -= ((2 - Fraction(1, 2 ** m)) * m + half) / (m + 1) * _zeta(m + 1, ab1)
    value += (ab1 - 1) * half * _zeta(m, ab1)
    return value


def discriminant_tail_fraction(m: int, alpha, beta) -> Fraction:
    """c_m of log D_n: (-1)^(m-1)/m * Psi_m(alpha, beta).

    (With this sign the truncation error decays at the next tail order and
    the tails compose exactly to the potential-energy expansion.)
    """
    value = discriminant_psi_fraction(m, alpha, beta) / m
    return value if m % 2 else -value


def potential_h_fraction(m: int, p, q) -> Fraction:
    """H_m(p, q) = zeta(-m-1) + zeta(-m-1, 2p) + zeta(-m-1, 2q)
    + (1 - 2^-m) zeta(-m-1, 2p+2q-1)."""
    p = as_fraction(p)
    q = as_fraction(q)
    return (
        _zeta(m + 1, _ONE)
        + _zeta(m + 1, 2 * p)
        + _zeta(m + 1, 2 * q)
        + _half_pow(m) * _zeta(m + 1, 2 * p + 2 * q - 1)
    )


def potential_tail_fraction(m: int, p, q) -> Fraction:
    """c_m of the potential energy: (-1)^(m-1)/(m(m+1)) H_m(p, q)."""
    value = potential_h_fraction(m, p, q) / (m * (m + 1))
    return value if m % 2 else -value


def elliptic_h_fraction(m: int, p, q) -> Fraction:
    """H'_m(p, q) of the elliptic-configuration logarithmic energy."""
    p = as_fraction(p)
    q = as_fraction(q)
    half = _half_pow(m)
    value = potential_h_fraction(m, p, q) / (m + 1)
    value -= 2 * p * _zeta(m, 2 * p)
    value -= 2 * q * _zeta(m, 2 * q)
    value -= 2 * half * (p + q) * _zeta(m, 2 * p + 2 * q - 1)
    return value


def elliptic_tail_fraction(m: int, p, q) -> Fraction:
    """c_m of the elliptic logarithmic energy: (-1)^(m-1)/m H'_m(p, q)."""
    value = elliptic_h_fraction(m, p, q) / m
    return value if m % 2 else -value


def interval_tail_fraction(m: int) -> Fraction:
    """c_m of the interval energy:
    [1 - 2^-m + 4 (1 - 2^-(m+2)) B_{m+2}/(m+2)] / (m(m+1))."""
    bracket = _half_pow(m) + 4 * _half_pow(m + 2) * bernoulli_number(m + 2) / (m + 2)
    return bracket / (m * (m + 1))


# -- expansion builders ------------------------------------------------------


def _tail(order: int, coeff_fn) -> tuple[Scalar, ...]:
    ctx = active()
    return tuple(ctx.real(coeff_fn(m)) for m in range(1, order + 1))


def leading_coeff_expansion(params: JacobiParams, order: int) -> Expansion:
    """log lambda_n ~ (log 2) n - (log n)/2 + (alpha+beta) log 2 - (log pi)/2 + tail."""
    _check_order(order)
    ctx = active()
    ab = as_fraction(params.alpha) + as_fraction(params.beta)
    leading = {
        "n2": ctx.zero(),
        "nlogn": ctx.zero(),
        "n": ctx.ln2,
        "logn": ctx.real(Fraction(-1, 2)),
        "const": ctx.real(ab) * ctx.ln2 - ctx.ln_pi / 2,
    }
    tail = _tail(order, lambda m: lambda_tail_fraction(m, params.alpha, params.beta))
    return Expansion(
        kind="log_lambda",
        params={"alpha": float(params.alpha), "beta": float(params.beta)},
        leading=leading,
        tail=tail,
    )


def value_at_one_expansion(params: JacobiParams, order: int) -> Expansion:
    """log P_n(1) ~ alpha log n - log Gamma(alpha+1) + tail."""
    _check_order(order)
    ctx = active()
    leading = {
        "n2": ctx.zero(),
        "nlogn": ctx.zero(),
        "n": ctx.zero(),
        "logn": ctx.real(params.alpha),
        "const": -log_gamma(params.alpha + 1),
    }
    tail = _tail(order, lambda m: value_at_one_tail_fraction(m, params.alpha))
    return Expansion(
        kind="log_P1",
        params={"alpha": float(params.alpha), "beta": float(params.beta)},
        leading=leading,
        tail=tail,
    )


def discriminant_expansion(params: JacobiParams, order: int) -> Expansion:
    """log D_n ~ (log 2) n^2 + (2(a+b) log 2 - log pi) n
    + (5/2 - (a+1)^2 - (b+1)^2)/2 * log n + C(a, b) + tail."""
    _check_order(order)
    ctx = active()
    a = as_fraction(params.alpha)
    b = as_fraction(params.beta)
    ab = a + b
    logn_coeff = (Fraction(5, 2) - (a + 1) ** 2 - (b + 1) ** 2) / 2
    const = (
        ctx.real(-Fraction(1, 8) - (ab + Fraction(1, 2)) ** 2 / 2)
        + ctx.real((Fraction(11, 6) + ab * ab) / 2) * ctx.ln2
        + ctx.ln_pi
        + 3 * constants().log_glaisher
        + ctx.real(a + 1) * log_gamma(params.alpha + 1)
        - negapolygamma2(params.alpha + 1)
        + ctx.real(b + 1) * log_gamma(params.beta + 1)
        - negapolygamma2(params.beta + 1)
    )
    leading = {
        "n2": ctx.ln2,
        "nlogn": ctx.zero(),
        "n": 2 * ctx.real(ab) * ctx.ln2 - ctx.ln_pi,
        "logn": ctx.real(logn_coeff),
        "const": const,
    }
    tail = _tail(order, lambda m: discriminant_tail_fraction(m, params.alpha, params.beta))
    return Expansion(
        kind="log_D",
        params={"alpha": float(params.alpha), "beta": float(params.beta)},
        leading=leading,
        tail=tail,
    )


def potential_energy_expansion(p: float, q: float, order: int) -> Expansion:
    """Minimal potential energy under endpoint charges (p, q):
    (log 2) n^2 - n log n + 2 (log 2)(p+q-1) n
    - 2 [(p-1/4)^2 + (q-1/4)^2] log n + C_1(p, q) + tail.

    The symmetric case p = q is the same assembly (the specialised
    symmetric-field formulas agree coefficient by coefficient).
    """
    _check_order(order)
    if not (p > 0 and q > 0):
        raise DomainError(f"charges must be positive, got p={p}, q={q}")
    ctx = active()
    fp = as_fraction(p)
    fq = as_fraction(q)
    logn_coeff = -2 * ((fp - Fraction(1, 4)) ** 2 + (fq - Fraction(1, 4)) ** 2)
    const = (
        ctx.real(2 * ((fp + fq - 1) ** 2 - Fraction(11, 24))) * ctx.ln2
        - ctx.real(fp + fq) * ctx.ln_pi
        - 3 * constants().log_glaisher
        + negapolygamma2(2 * p)
        + negapolygamma2(2 * q)
    )
    leading = {
        "n2": ctx.ln2,
        "nlogn": ctx.real(-1),
        "n": ctx.real(2 * (fp + fq - 1)) * ctx.ln2,
        "logn": ctx.real(logn_coeff),
        "const": const,
    }
    tail = _tail(order, lambda m: potential_tail_fraction(m, p, q))
    return Expansion(
        kind="potential", params={"p": float(p), "q": float(q)}, leading=leading, tail=tail
    )


def elliptic_log_energy_expansion(p: float, q: float, order: int) -> Expansion:
    """Logarithmic energy of the elliptic (p,q)-Fekete configuration:
    (log 2) n^2 - n log n - 2 (log 2) n + 2 (p^2 + q^2 - 1/8) log n
    + C_1'(p, q) + tail."""
    _check_order(order)
    if not (p > 0 and q > 0):
        raise DomainError(f"charges must be positive, got p={p}, q={q}")
    ctx = active()
    fp = as_fraction(p)
    fq = as_fraction(q)
    const = (
        -ctx.real(2 * ((fp + fq) ** 2 - Fraction(13, 24))) * ctx.ln2
        - 3 * constants().log_glaisher
        - 2 * ctx.real(fp) * log_gamma(2 * p)
        + negapolygamma2(2 * p)
        - 2 * ctx.real(fq) * log_gamma(2 * q)
        + negapolygamma2(2 * q)
    )
    leading = {
        "n2": ctx.ln2,
        "nlogn": ctx.real(-1),
        "n": -2 * ctx.ln2,
        "logn": ctx.real(2 * (fp * fp + fq * fq - Fraction(1, 8))),
        "const": const,
    }
    tail = _tail(order, lambda m: elliptic_tail_fraction(m, p, q))
    return Expansion(
        kind="elliptic_E0", params={"p": float(p), "q": float(q)}, leading=leading, tail=tail
    )


def interval_energy_expansion(order: int) -> Expansion:
    """Minimal logarithmic N-point energy of [-1, 1]:
    (log 2) N^2 - N log N - 2 (log 2) N - (log N)/4
    + 13 log 2 / 12 - 3 log A + tail."""
    _check_order(order)
    ctx = active()
    leading = {
        "n2": ctx.ln2,
        "nlogn": ctx.real(-1),
        "n": -2 * ctx.ln2,
        "logn": ctx.real(Fraction(-1, 4)),
        "const": ctx.real(Fraction(13, 12)) * ctx.ln2 - 3 * constants().log_glaisher,
    }
    tail = _tail(order, interval_tail_fraction)
    return Expansion(kind="interval_E0", params={}, leading=leading, tail=tail)


def general_interval_energy_expansion(a: float, b: float, order: int) -> Expansion:
    """Same as the [-1, 1] expansion with N^2 coefficient W([a, b]) and N
    coefficient -(log 2 + W([a, b])); all other terms are capacity-independent."""
    if not b > a:
        raise DomainError(f"interval needs b > a, got [{a}, {b}]")
    base = interval_energy_expansion(order)
    ctx = active()
    w = -ctx.log(ctx.real((b - a) / 4))
    leading = dict(base.leading)
    leading["n2"] = w
    leading["n"] = -(ctx.ln2 + w)
    return Expansion(
        kind="general_interval_E0",
        params={"a": float(a), "b": float(b)},
        leading=leading,
        tail=base.tail,
    )


def evaluate_expansion(expansion: Expansion, n: int, order: int | None = None) -> Scalar:
    """Numeric value of the leading terms plus the tail truncated at ``order``.

    Deterministic evaluation order: leading terms descending (n^2, n log n,
    n, log n, const), then tail ascending in m.
    """
    if n < 2:
        raise DomainError(f"expansion evaluation requires n >= 2, got {n}")
    if order is None:
        order = expansion.order
    if order < 0 or order > expansion.order:
        raise CapacityError(
            f"truncation order {order} outside the built tail length {expansion.order}"
        )
    ctx = active()
    nn = ctx.real(n)
    logn = ctx.log(nn)
    lead = expansion.leading
    value = lead["n2"] * nn * nn
    value += lead["nlogn"] * nn * logn
    value += lead["n"] * nn
    value += lead["logn"] * logn
    value += lead["const"]
    npow = nn
    for m in range(order):
        value += expansion.tail[m] / npow
        npow *= nn
    return value


# -- serialization (the CLI wire format) -------------------------------------


def _scalar_to_json(x: Scalar):
    if isinstance(x, float):
        return x
    return mpmath.nstr(x, mpmath.libmp.repr_dps(mpmath.mp.prec))


def _scalar_from_json(v) -> Scalar:
    ctx = active()
    if isinstance(v, str):
        return mpmath.mpf(v) if ctx.mode == EXT else float(v)
    return ctx.real(v)


def expansion_to_json(expansion: Expansion) -> dict:
    """JSON-ready dict: {kind, params, leading: named map, tail: array}."""
    return {
        "kind": expansion.kind,
        "params": {k: float(v) for k, v in expansion.params.items()},
        "leading": {k: _scalar_to_json(expansion.leading[k]) for k in LEADING_KEYS},
        "tail": [_scalar_to_json(c) for c in expansion.tail],
    }


def expansion_from_json(data: dict) -> Expansion:
    if data.get("kind") not in KINDS:
        raise DomainError(f"unknown expansion kind {data.get('kind')!r}")
    leading = {k: _scalar_from_json(data["leading"][k]) for k in LEADING_KEYS}
    tail = tuple(_scalar_from_json(c) for c in data["tail"])
    return Expansion(
        kind=data["kind"],
        params={k: float(v) for k, v in data.get("params", {}).items()},
        leading=leading,
        tail=tail,
    )
