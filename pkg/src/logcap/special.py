"""Numerical kernels: elliptic integrals, Jacobi theta series, quadrature, linear solve.

Everything is plain float64.  The complete integrals use the
arithmetic-geometric mean, the incomplete integral of the first kind a
Carlson symmetric form, and the singular integrals a Chebyshev-Gauss rule
(inverse-square-root endpoint weight) plus an adaptive Gauss-Legendre
scheme for the half-line tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, SingularMatrixError

_AGM_MAX_ITERS = 40
_THETA_TERM_TOL = 1e-16
_THETA_MAX_TERMS = 20000


@dataclass(frozen=True)
class EllipticParams:
    """Modulus bundle (k, k', nome q, angle omega) for the theta-quotient formula."""

    k: float
    k_prime: float
    q: float
    omega: float

    def __post_init__(self):
        if abs(self.k * self.k + self.k_prime * self.k_prime - 1.0) > 1e-14:
            raise DomainError("moduli must satisfy k^2 + k'^2 = 1")
        if not 0.0 <= self.q < 1.0:
            raise DomainError(f"nome must lie in [0, 1), got {self.q}")


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    est_error: float
    nodes_used: int


def complete_K(k: float) -> float:
    """Complete elliptic integral of the first kind, by AGM iteration."""
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got {k}")
    a, g = 1.0, math.sqrt((1.0 - k) * (1.0 + k))
    for _ in range(_AGM_MAX_ITERS):
        if abs(a - g) < 1e-16 * a:
            break
        a, g = 0.5 * (a + g), math.sqrt(a * g)
    return math.pi / (2.0 * a)


def complete_E(k: float) -> float:
    """Complete elliptic integral of the second kind, by AGM with partial sums."""
    if not 0.0 <= k <= 1.0:
        raise DomainError(f"modulus must lie in [0, 1], got {k}")
    if k == 1.0:
        return 1.0
    a, g = 1.0, math.sqrt((1.0 - k) * (1.0 + k))
    s = 0.5 * k * k
    pw = 1.0
    for _ in range(_AGM_MAX_ITERS):
        c = 0.5 * (a - g)
        if c < 1e-17 * a:
            break
        s += pw * c * c
        a, g = 0.5 * (a + g), math.sqrt(a * g)
        pw *= 2.0
    return math.pi / (2.0 * a) * (1.0 - s)


def _carlson_rf(x: float, y: float, z: float) -> float:
    # duplication algorithm; args >= 0 with at most one zero
    for _ in range(200):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * (sy + sz) + sy * sz
        x, y, z = 0.25 * (x + lam), 0.25 * (y + lam), 0.25 * (z + lam)
        mu = (x + y + z) / 3.0
        dx, dy, dz = (mu - x) / mu, (mu - y) / mu, (mu - z) / mu
        if max(abs(dx), abs(dy), abs(dz)) < 1e-3:
            break
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / math.sqrt(mu)


def incomplete_F(lam: float, k: float) -> float:
    """Legendre incomplete integral of the first kind, F(arcsin(lam), k).

    The first argument is the *sine* of the amplitude, so
    incomplete_F(1, k) == complete_K(k).
    """
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"sine of amplitude must lie in [0, 1], got {lam}")
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got {k}")
    if lam == 0.0:
        return 0.0
    return lam * _carlson_rf((1.0 - lam) * (1.0 + lam), 1.0 - (k * lam) ** 2, 1.0)


def _check_nome(q: float) -> None:
    if not 0.0 <= q < 1.0:
        raise DomainError(f"nome must lie in [0, 1), got {q}")


def theta3(z: float, q: float) -> float:
    """Jacobi theta_3(z; q) = 1 + 2 sum_m q^(m^2) cos(2 m z)."""
    _check_nome(q)
    total = 1.0
    qm = q  # q^(m^2)
    qstep = q * q * q  # q^(2m+1)
    m = 1
    while 2.0 * qm >= _THETA_TERM_TOL:
        total += 2.0 * qm * math.cos(2.0 * m * z)
        qm *= qstep
        qstep *= q * q
        m += 1
        if m > _THETA_MAX_TERMS:
            raise ConvergenceError(f"theta series did not converge for q={q}")
    return total


def theta4(z: float, q: float) -> float:
    """Jacobi theta_4(z; q) = 1 + 2 sum_m (-1)^m q^(m^2) cos(2 m z)."""
    _check_nome(q)
    total = 1.0
    qm = q
    qstep = q * q * q
    m = 1
    sign = -1.0
    while 2.0 * qm >= _THETA_TERM_TOL:
        total += 2.0 * sign * qm * math.cos(2.0 * m * z)
        qm *= qstep
        qstep *= q * q
        sign = -sign
        m += 1
        if m > _THETA_MAX_TERMS:
            raise ConvergenceError(f"theta series did not converge for q={q}")
    return total


def _vectorized(f):
    """Wrap a scalar-or-vector callable so it always maps 1-D arrays to 1-D arrays."""

    def call(x: np.ndarray) -> np.ndarray:
        try:
            y = np.asarray(f(x), dtype=float)
        except (TypeError, ValueError):
            return np.array([float(f(xi)) for xi in x])
        if y.shape != x.shape:
            return np.array([float(f(xi)) for xi in x])
        return y

    return call


def chebyshev_gauss(g, a: float, b: float, m: int) -> float:
    """Integral of g(t) / sqrt((t - a)(b - t)) over (a, b) by the m-node Chebyshev rule.

    Exact (up to rounding) whenever g pulled back to [-1, 1] is a polynomial
    of degree < 2m.
    """
    if m < 1:
        raise DomainError(f"node count must be positive, got {m}")
    if not a < b:
        raise DomainError(f"need a < b, got ({a}, {b})")
    nodes = np.cos((2.0 * np.arange(1, m + 1) - 1.0) * np.pi / (2.0 * m))
    t = 0.5 * (a + b) + 0.5 * (b - a) * nodes
    vals = _vectorized(g)(t)
    return float(vals.sum()) * math.pi / m


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(15)


class _Budget:
    __slots__ = ("used", "limit")

    def __init__(self, limit: int):
        self.used = 0
        self.limit = limit

    def spend(self, n: int) -> None:
        self.used += n
        if self.used > self.limit:
            raise _BudgetExhausted()


class _BudgetExhausted(Exception):
    pass


class _BudgetExceeded(Exception):
    """Internal: budget ran out; ``partial`` holds the best value so far."""

    def __init__(self, partial: float):
        super().__init__("node budget exhausted")
        self.partial = partial


def _adaptive_gl(f, a: float, b: float, tol: float, budget: _Budget) -> tuple[float, float]:
    """Adaptive 15-point Gauss-Legendre on [a, b] by bisection.

    Returns (value, error_estimate); the estimate is the sum of the
    bisection defects of the accepted panels.
    """

    def panel(lo: float, hi: float) -> float:
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        budget.spend(_GL_NODES.size)
        return half * float(np.dot(_GL_WEIGHTS, f(mid + half * _GL_NODES)))

    total_width = b - a
    value = 0.0
    err = 0.0
    stack: list[tuple[float, float, float]] = []
    pending = 0.0  # coarse value of the panel being refined right now
    try:
        stack.append((a, b, panel(a, b)))
        while stack:
            lo, hi, coarse = stack.pop()
            pending = coarse
            mid = 0.5 * (lo + hi)
            left, right = panel(lo, mid), panel(mid, hi)
            pending = 0.0
            fine = left + right
            delta = abs(fine - coarse)
            local_tol = tol * (hi - lo) / total_width
            if delta <= max(local_tol, 1e-16 * abs(fine)) or (hi - lo) <= 1e-14 * total_width:
                value += fine
                err += delta
            else:
                stack.append((lo, mid, left))
                stack.append((mid, hi, right))
    except _BudgetExhausted:
        # settle the unfinished panels at their coarse estimates
        partial = value + pending + sum(c for _, _, c in stack)
        raise _BudgetExceeded(partial) from None
    return value, err


def tail_integral(h, b: float, tol: float, width: float = 2.0,
                  max_evals: int = 100000) -> QuadratureResult:
    """Integral of h over (b, infinity) for h = O(1/t^2) at infinity.

    An inverse-square-root singularity of h at t = b is allowed: the near
    part over (b, T], T = b + width, is computed after the substitution
    t = b + (T - b) u^2, which removes it; the far part uses s = 1/t.
    """
    if tol <= 0.0:
        raise DomainError("tolerance must be positive")
    if width <= 0.0:
        raise DomainError("split width must be positive")
    T = max(b + width, 0.5 * width)
    hv = _vectorized(h)
    budget = _Budget(max_evals)

    def near_f(u: np.ndarray) -> np.ndarray:
        t = b + (T - b) * u * u
        return 2.0 * (T - b) * u * hv(t)

    def far_f(s: np.ndarray) -> np.ndarray:
        return hv(1.0 / s) / (s * s)

    near_val = 0.0
    try:
        near_val, near_err = _adaptive_gl(near_f, 0.0, 1.0, 0.5 * tol, budget)
        far_val, far_err = _adaptive_gl(far_f, 0.0, 1.0 / T, 0.5 * tol, budget)
    except _BudgetExceeded as exc:
        partial = QuadratureResult(near_val + exc.partial, math.inf, budget.used)
        raise ConvergenceError(
            f"tail integral used more than {max_evals} evaluations", partial=partial
        ) from None
    return QuadratureResult(near_val + far_val, near_err + far_err, budget.used)


def solve_dense(mat, rhs) -> np.ndarray:
    """Solve M x = rhs by Gaussian elimination with partial pivoting.

    Intended for the small (n-1) x (n-1) systems arising here; raises
    SingularMatrixError when a pivot falls below 1e-13 * max|M|.
    """
    m = np.array(mat, dtype=float)
    v = np.array(rhs, dtype=float).ravel()
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"matrix must be square, got shape {m.shape}")
    s = m.shape[0]
    if v.size != s:
        raise DomainError("right-hand side length does not match the matrix")
    if s == 0:
        return np.empty(0)
    scale = np.abs(m).max()
    pivot_floor = 1e-13 * (scale if scale > 0.0 else 1.0)
    for col in range(s):
        piv = col + int(np.argmax(np.abs(m[col:, col])))
        if abs(m[piv, col]) <= pivot_floor:
            raise SingularMatrixError(f"pivot {m[piv, col]:.3e} below threshold")
        if piv != col:
            m[[col, piv]] = m[[piv, col]]
            v[[col, piv]] = v[[piv, col]]
        factors = m[col + 1:, col] / m[col, col]
        m[col + 1:, col:] -= np.outer(factors, m[col, col:])
        v[col + 1:] -= factors * v[col]
    x = np.empty(s)
    for row in range(s - 1, -1, -1):
        x[row] = (v[row] - m[row, row + 1:] @ x[row + 1:]) / m[row, row]
    return x
