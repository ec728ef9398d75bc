"""Independent electrostatic optimizer.

Minimizes the external-field potential energy directly by damped Newton
iteration on the interior of [-1, 1], providing the oracle that the optima
coincide with Jacobi polynomial zeros; the Fekete problem (max product of
mutual distances) is solved by fixing the endpoints analytically and
minimizing the (1,1) field problem inside.

The optimizer works in ordinary float64: the energy Hessian is available
in closed form and is positive definite throughout the ordered interior
chamber, so Newton with feasibility damping converges to the unique
minimum from any interior start.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import energy
from .energy import Configuration
from .exceptions import DomainError

_MAX_ITER = 200
_DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solve: final points, iteration count, gradient norm."""

    configuration: Configuration
    iterations: int
    grad_norm: float
    converged: bool
    energy: float

    @property
    def points(self) -> tuple[float, ...]:
        return self.configuration.points


def _check_interior(points) -> None:
    if any(not (-1.0 < x < 1.0) for x in points):
        raise DomainError("points must be strictly interior to [-1, 1]")
    if len(set(points)) != len(points):
        raise DomainError("points must be pairwise distinct")


def gradient(config: Configuration) -> np.ndarray:
    """Gradient of the potential energy.

    Component i is 2 [ p/(1-x_i) - q/(1+x_i) - sum_{j != i} 1/(x_i - x_j) ].
    """
    if config.charges is None:
        raise DomainError("gradient needs a charged configuration")
    _check_interior(config.points)
    p, q = config.charges
    x = np.asarray(config.points, dtype=float)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, np.inf)
    interaction = np.sum(1.0 / diff, axis=1)
    return 2.0 * (p / (1.0 - x) - q / (1.0 + x) - interaction)


def _hessian(x: np.ndarray, p: float, q: float) -> np.ndarray:
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, np.inf)
    inv_sq = 1.0 / diff ** 2
    h = -2.0 * inv_sq
    diag = 2.0 * (p / (1.0 - x) ** 2 + q / (1.0 + x) ** 2 + np.sum(inv_sq, axis=1))
    np.fill_diagonal(h, diag)
    return h


def _potential(x: np.ndarray, p: float, q: float) -> float:
    return energy.potential_energy_config(Configuration(tuple(x), charges=(p, q)))


def _feasible(x: np.ndarray) -> bool:
    return bool(np.all(x > -1.0) and np.all(x < 1.0) and np.all(np.diff(x) > 0))


def minimize_potential(n: int, p: float, q: float, tol: float = _DEFAULT_TOL,
                       max_iter: int = _MAX_ITER) -> SolveReport:
    """Minimize the (p, q) external-field energy of n interior unit charges.

    Damped Newton with the ordering constraint maintained by step halving
    (never by re-sorting).  Starts from Chebyshev points scaled by 1 - 1/n.
    A non-converged run is reported, not raised.
    """
    if n < 1:
        raise DomainError(f"minimize_potential requires n >= 1, got {n}")
    if not (p > 0 and q > 0):
        raise DomainError(f"charges must be positive, got p={p}, q={q}")
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    i = np.arange(1, n + 1)
    x = -np.cos((2 * i - 1) * np.pi / (2 * n)) * (1.0 - 1.0 / n)
    x = np.sort(x)
    value = _potential(x, p, q)
    grad = gradient(Configuration(tuple(x), charges=(p, q)))
    iterations = 0
    while iterations < max_iter and np.max(np.abs(grad)) > tol:
        iterations += 1
        step = np.linalg.solve(_hessian(x, p, q), -grad)
        t = 1.0
        accepted = False
        while t > 1e-16:
            candidate = x + t * step
            if _feasible(candidate):
                candidate_value = _potential(candidate, p, q)
                if candidate_value <= value + 1e-14 * (1.0 + abs(value)):
                    accepted = True
                    break
            t *= 0.5
        if not accepted:
            break  # no acceptable step; report non-convergence
        x = candidate
        value = candidate_value
        grad = gradient(Configuration(tuple(x), charges=(p, q)))
    grad_norm = float(np.max(np.abs(grad)))
    config = Configuration(tuple(float(v) for v in x), charges=(p, q))
    return SolveReport(
        configuration=config,
        iterations=iterations,
        grad_norm=grad_norm,
        converged=grad_norm <= tol,
        energy=float(value),
    )


def fekete_maximize(N: int, tol: float = _DEFAULT_TOL) -> SolveReport:
    """Maximize the product of all mutual distances of N points in [-1, 1].

    The maximizer always contains both endpoints (otherwise rescaling the
    configuration increases the product), so the interior reduces to the
    (1, 1) external-field problem with N - 2 charges; the endpoints are
    fixed analytically rather than searched for.
    """
    if N < 2:
        raise DomainError(f"fekete_maximize requires N >= 2, got {N}")
    if N == 2:
        config = Configuration((-1.0, 1.0))
        return SolveReport(
            configuration=config,
            iterations=0,
            grad_norm=0.0,
            converged=True,
            energy=float(energy.log_energy_config(config)),
        )
    inner = minimize_potential(N - 2, 1.0, 1.0, tol=tol)
    config = Configuration((-1.0,) + inner.points + (1.0,))
    return SolveReport(
        configuration=config,
        iterations=inner.iterations,
        grad_norm=inner.grad_norm,
        converged=inner.converged,
        energy=float(energy.log_energy_config(config)),
    )
