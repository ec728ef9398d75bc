"""Scalar arithmetic modes.

Two modes are supported and applied uniformly at run time:

* ``"std"`` -- ordinary float64 arithmetic via :mod:`math` (about 16
  significant decimal digits),
* ``"ext"`` -- mpmath arithmetic carrying :data:`EXTENDED_DPS` significant
  decimal digits, for verifying high-order expansion tails that fall below
  the float64 noise floor of the O(n^2) energies.

Numeric kernels obtain the active :class:`Context` through :func:`active`
and route elementary functions and transcendental constants through it;
plain Python operators then keep the scalar type (float or ``mpf``)
throughout a computation.
"""
from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction
from typing import Union

import mpmath

from .exceptions import DomainError

Scalar = Union[float, mpmath.mpf]

STD = "std"
EXT = "ext"

#: decimal digits carried in extended mode
EXTENDED_DPS = 32

#: guard digits used while generating transcendental constants
_GUARD_DPS = 10


def as_fraction(x) -> Fraction:
    """Exact rational value of ``x`` (int, float, Fraction or mpf).

    Every finite binary float *is* a rational, so no rounding occurs.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise DomainError(f"cannot convert non-finite value {x!r} to a rational")
        return Fraction(x)
    if isinstance(x, mpmath.mpf):
        if not mpmath.isfinite(x):
            raise DomainError(f"cannot convert non-finite value {x!r} to a rational")
        sign, man, exp, _ = x._mpf_
        value = Fraction(man) * Fraction(2) ** exp
        return -value if sign else value
    raise TypeError(f"no exact rational conversion for {type(x).__name__}")


class Context:
    """Arithmetic backend for one precision mode."""

    __slots__ = ("mode", "dps", "_consts")

    def __init__(self, mode: str):
        if mode not in (STD, EXT):
            raise ValueError(f"unknown precision mode {mode!r} (expected 'std' or 'ext')")
        self.mode = mode
        self.dps = 16 if mode == STD else EXTENDED_DPS
        self._consts: dict = {}

    def __repr__(self) -> str:
        return f"Context(mode={self.mode!r}, dps={self.dps})"

    @property
    def key(self) -> tuple:
        return (self.mode, self.dps)

    # -- conversions -----------------------------------------------------

    def real(self, x) -> Scalar:
        """Convert ``x`` to the active scalar type, rounding once."""
        if isinstance(x, Fraction):
            if self.mode == STD:
                return x.numerator / x.denominator
            return mpmath.mpf(x.numerator) / mpmath.mpf(x.denominator)
        return float(x) if self.mode == STD else mpmath.mpf(x)

    def zero(self) -> Scalar:
        return 0.0 if self.mode == STD else mpmath.mpf(0)

    # -- elementary functions ---------------------------------------------

    def log(self, x) -> Scalar:
        return math.log(x) if self.mode == STD else mpmath.log(x)

    def exp(self, x) -> Scalar:
        return math.exp(x) if self.mode == STD else mpmath.exp(x)

    def sqrt(self, x) -> Scalar:
        return math.sqrt(x) if self.mode == STD else mpmath.sqrt(x)

    def lgamma(self, x) -> Scalar:
        # caller guarantees x > 0
        return math.lgamma(x) if self.mode == STD else mpmath.loggamma(x)

    # -- cached transcendental constants -----------------------------------
    # All constants come from mpmath at guarded precision and are rounded
    # once into the active scalar type.

    def _const(self, name: str, fn) -> Scalar:
        value = self._consts.get(name)
        if value is None:
            with mpmath.workdps(self.dps + _GUARD_DPS):
                raw = fn()
            value = self.real(raw)
            self._consts[name] = value
        return value

    @property
    def pi(self) -> Scalar:
        return self._const("pi", lambda: +mpmath.pi)

    @property
    def ln2(self) -> Scalar:
        return self._const("ln2", lambda: mpmath.log(2))

    @property
    def ln_pi(self) -> Scalar:
        return self._const("ln_pi", lambda: mpmath.log(mpmath.pi))

    @property
    def ln_2pi(self) -> Scalar:
        return self._const("ln_2pi", lambda: mpmath.log(2 * mpmath.pi))

    @property
    def euler_gamma(self) -> Scalar:
        return self._const("euler_gamma", lambda: +mpmath.euler)

    @property
    def log_glaisher(self) -> Scalar:
        return self._const("log_glaisher", lambda: mpmath.log(mpmath.glaisher))

    def zeta_int(self, k: int) -> Scalar:
        """Riemann zeta at an integer argument k >= 2."""
        if k < 2:
            raise DomainError(f"zeta_int requires k >= 2, got {k}")
        return self._const(f"zeta_{k}", lambda: mpmath.zeta(k))

    # -- tolerances ---------------------------------------------------------

    @property
    def eps(self) -> float:
        """Unit roundoff scale of the mode."""
        return 2.0 ** -52 if self.mode == STD else 10.0 ** (-self.dps)

    def tol(self, std_tol: float) -> float:
        """Scale a standard-mode tolerance to the active precision."""
        if self.mode == STD:
            return std_tol
        return std_tol * 10.0 ** (16 - self.dps)


_CONTEXTS = {STD: Context(STD), EXT: Context(EXT)}
_ACTIVE = _CONTEXTS[STD]


def active() -> Context:
    """The context currently in force."""
    return _ACTIVE


def use(mode: str) -> Context:
    """Switch the process-wide precision mode (startup-time configuration)."""
    global _ACTIVE
    if mode not in _CONTEXTS:
        raise ValueError(f"unknown precision mode {mode!r} (expected 'std' or 'ext')")
    _ACTIVE = _CONTEXTS[mode]
    if _ACTIVE.mode == EXT:
        mpmath.mp.dps = _ACTIVE.dps
    return _ACTIVE


@contextmanager
def precision_mode(mode: str):
    """Temporarily switch modes (used by tests and the CLI)."""
    previous = _ACTIVE.mode
    previous_dps = mpmath.mp.dps
    use(mode)
    try:
        yield _ACTIVE
    finally:
        use(previous)
        mpmath.mp.dps = previous_dps


class CompensatedSum:
    """Neumaier-compensated accumulator.

    Keeps float64 sums accurate to a few ulps of the true value independent
    of term count; harmless (and still used, for identical code paths) under
    mpmath scalars.
    """

    __slots__ = ("_sum", "_carry")

    def __init__(self, zero: Scalar = 0.0):
        self._sum = zero
        self._carry = zero - zero

    def add(self, value) -> "CompensatedSum":
        total = self._sum + value
        if abs(self._sum) >= abs(value):
            self._carry += (self._sum - total) + value
        else:
            self._carry += (value - total) + self._sum
        self._sum = total
        return self

    @property
    def value(self) -> Scalar:
        return self._sum + self._carry
