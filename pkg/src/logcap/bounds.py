"""Elementary lower and upper bounds for the capacity of interval unions.

Lower bounds: the classical measure bound, Schiefermayr's two-interval
bound, Solynin's tailored-partition bound, the general partition bound,
and the gap-division bound with free division points (optimized by a
deterministic grid search).  Upper bounds: the trivial 1/2, polarization,
Gillis, Schiefermayr's elliptic-integral bound, and the circle-projection
bound.  Products of powers are evaluated in the log domain; a vanishing
factor short-circuits to 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .sets import (
    CircleArcSet,
    GapPoints,
    IntervalUnion,
    Partition,
    measure_within,
)
from .special import complete_E, complete_K

LOWER = "lower"
UPPER = "upper"

_LOG_FLOOR = 1e-300

# deterministic grid-search schedule
_GRID_CANDIDATES = 33
_REFINE_ROUNDS = 3
_REFINE_FACTOR = 10.0
_MAX_SWEEPS = 60


@dataclass(frozen=True)
class BoundReport:
    name: str
    kind: str  # "lower" or "upper"
    value: float
    params: Partition | GapPoints | None = None


def _check_two_interval(alpha: float, beta: float) -> None:
    if not (-1.0 < alpha < beta < 1.0):
        raise DomainError(
            f"need -1 < alpha < beta < 1 for [-1,alpha] u [beta,1], got ({alpha}, {beta})"
        )


def _require_unit_subset(e: IntervalUnion) -> None:
    a1, bn = e.hull
    if a1 < -1.0 or bn > 1.0:
        raise DomainError(f"set must lie inside [-1, 1], hull is [{a1}, {bn}]")


def _require_unit_hull(e: IntervalUnion) -> None:
    if not e.is_unit_hull():
        raise DomainError("bound requires a_1 = -1 and b_n = 1 exactly")


def classical_bounds(e: IntervalUnion) -> tuple[float, float]:
    """(measure/4, 1/2) for a subset of [-1, 1]."""
    _require_unit_subset(e)
    return e.total_length() / 4.0, 0.5


def schiefermayr_lower(alpha: float, beta: float) -> float:
    """Elementary lower bound for [-1,alpha] u [beta,1]; tight when alpha + beta = 0."""
    _check_two_interval(alpha, beta)
    num = ((1.0 - alpha * alpha) * (1.0 - beta * beta)) ** 0.25
    den = math.sqrt((1.0 - alpha) * (1.0 + beta)) + math.sqrt((1.0 + alpha) * (1.0 - beta))
    return num / den


def polarization_upper(alpha: float, beta: float) -> float:
    """Upper bound by symmetrizing the gap about the origin; tight when alpha + beta = 0."""
    _check_two_interval(alpha, beta)
    return 0.25 * math.sqrt(4.0 - (alpha - beta) ** 2)


def gillis_upper(alpha: float, beta: float) -> float:
    """Gillis' logarithmic-interpolation upper bound for [-1,alpha] u [beta,1]."""
    _check_two_interval(alpha, beta)
    la = math.log((1.0 + alpha) / 8.0)
    lb = math.log((1.0 - beta) / 8.0)
    return 2.0 * math.exp(la * lb / (la + lb))


def schiefermayr_upper(alpha: float, beta: float) -> float:
    """Elliptic-integral upper bound for [-1,alpha] u [beta,1].

    Stated for alpha + beta >= 0; otherwise the reflected set
    [-1,-beta] u [-alpha,1] of equal capacity is used.
    """
    _check_two_interval(alpha, beta)
    if alpha + beta < 0.0:
        alpha, beta = -beta, -alpha
    k = 2.0 * (beta - alpha) / ((1.0 - alpha) * (1.0 + beta))
    if not 0.0 < k < 1.0:
        raise DomainError(f"modulus outside (0, 1): {k}")
    ratio = complete_E(k) / complete_K(k)
    t = (1.0 + alpha) * (1.0 - beta) / ((1.0 - alpha) * (1.0 + beta))
    log_term = math.log((math.sqrt(2.0) + math.sqrt(1.0 - alpha)) / math.sqrt(1.0 + alpha))
    return (1.0 + alpha) / (2.0 * (1.0 + beta)) * math.exp(2.0 * (ratio - t) * log_term ** 2)


def beurling_arc_capacity(l: float) -> float:
    """Capacity of a single arc of length l; the minimum over closed arc sets of that length."""
    if not 0.0 < l <= 2.0 * math.pi:
        raise DomainError(f"arc length must lie in (0, 2*pi], got {l}")
    return math.sin(l / 4.0)


def haliste_arcs_capacity(l: float, n: int) -> float:
    """Capacity of n rotationally symmetric arcs of total length l.

    This is the maximum capacity among unions of n closed arcs of total
    length l, so it serves as an upper bound for such unions.
    """
    if not 0.0 < l < 2.0 * math.pi:
        raise DomainError(f"total arc length must lie in (0, 2*pi), got {l}")
    if n < 1:
        raise DomainError("need a positive number of arcs")
    return math.sin(l / 4.0) ** (1.0 / n)


def sector_product_lower(f: CircleArcSet, sector_angles) -> float:
    """Lower bound for the capacity of a circle subset from a sector partition.

    ``sector_angles`` are increasing angles phi_0 < ... < phi_m with
    phi_m = phi_0 + 2*pi; sector k spans beta_k * pi radians and
    contributes [sin(mes(sector k intersect F) / (2 beta_k))] ** (beta_k^2 / 2).
    An empty intersection forces the bound to 0.
    """
    angles = [float(a) for a in sector_angles]
    if len(angles) < 2:
        raise DomainError("need at least one sector")
    for lo, hi in zip(angles, angles[1:]):
        if not lo < hi:
            raise DomainError("sector angles must strictly increase")
    if abs((angles[-1] - angles[0]) - 2.0 * math.pi) > 1e-9:
        raise DomainError("sector angles must cover exactly one full turn")
    log_total = 0.0
    for lo, hi in zip(angles, angles[1:]):
        beta = (hi - lo) / math.pi
        mes = f.length_within(lo, hi)
        if mes <= 0.0:
            return 0.0
        s = min(1.0, math.sin(mes / (2.0 * beta)))
        log_total += 0.5 * beta * beta * math.log(max(s, _LOG_FLOOR))
    return math.exp(log_total)


def partition_lower(e: IntervalUnion, p: Partition) -> float:
    """Partition lower bound: 1/2 prod_k sin(pi mu_k / (2 M_k)) ** (2 M_k^2 / pi^2).

    M_k is the arccos measure of cell k and mu_k that of its intersection
    with the set; a cell missing the set entirely gives bound 0.
    """
    _require_unit_subset(e)
    log_total = 0.0
    for lo, hi in p.cells():
        cell_mu = math.acos(lo) - math.acos(hi)
        inter_mu = measure_within(e, lo, hi)
        if inter_mu <= 0.0:
            return 0.0
        s = min(1.0, math.sin(math.pi * inter_mu / (2.0 * cell_mu)))
        log_total += (2.0 * cell_mu * cell_mu / math.pi ** 2) * math.log(max(s, _LOG_FLOOR))
    return 0.5 * math.exp(log_total)


def _gap_division_log(theta_a, theta_b, deltas_theta) -> float:
    """Log of the gap-division product; deltas_theta = [pi, th(d_1), ..., th(d_{n-1}), 0]."""
    total = 0.0
    n = len(theta_a)
    for k in range(n):
        d_prev, d_k = deltas_theta[k], deltas_theta[k + 1]
        span = d_prev - d_k
        factor = 0.5 * (
            math.cos(math.pi * (theta_b[k] - d_k) / span)
            - math.cos(math.pi * (theta_a[k] - d_k) / span)
        )
        if factor <= 0.0:
            return -math.inf
        total += (span * span / math.pi ** 2) * math.log(factor)
    return total


def gap_division_lower(e: IntervalUnion, d: GapPoints) -> float:
    """Lower bound from one division point per gap (hull must be [-1, 1]).

    Each component contributes a cosine-difference factor raised to the
    squared relative arccos span of its enclosing division cell.
    """
    _require_unit_hull(e)
    if e.n < 2:
        raise DomainError("bound needs at least two intervals")
    d.validate_for(e)
    theta_a = [math.acos(a) for a, _ in e.intervals]
    theta_b = [math.acos(b) for _, b in e.intervals]
    dt = [math.pi] + [math.acos(x) for x in d.deltas] + [0.0]
    log_val = _gap_division_log(theta_a, theta_b, dt)
    if log_val == -math.inf:
        return 0.0
    return 0.5 * math.exp(log_val)


def _coordinate_grid_max(f, boxes):
    """Deterministic coordinate maximization over open boxes.

    Starts from 33 equispaced interior candidates per coordinate, sweeps
    coordinates to a fixed point, then refines the grid by 10x around the
    incumbent for 3 rounds.  Ties keep the lowest-index candidate.
    """
    ndim = len(boxes)
    base_step = [(hi - lo) / (_GRID_CANDIDATES + 1) for lo, hi in boxes]
    cand = [
        [lo + (j + 1) * base_step[i] for j in range(_GRID_CANDIDATES)]
        for i, (lo, hi) in enumerate(boxes)
    ]
    x = [c[_GRID_CANDIDATES // 2] for c in cand]
    best = f(x)

    def sweep(candidates, x, best):
        for _ in range(_MAX_SWEEPS):
            moved = False
            for i in range(ndim):
                trial = list(x)
                best_i, best_v = x[i], best
                for c in candidates[i]:
                    if c == x[i]:
                        continue
                    trial[i] = c
                    v = f(trial)
                    if v > best_v:
                        best_v, best_i = v, c
                trial[i] = best_i
                if best_i != x[i]:
                    x = list(trial)
                    best = best_v
                    moved = True
            if not moved:
                return x, best
        return x, best

    x, best = sweep(cand, x, best)
    step = list(base_step)
    for _ in range(_REFINE_ROUNDS):
        step = [s / _REFINE_FACTOR for s in step]
        half = _GRID_CANDIDATES // 2
        cand = []
        for i, (lo, hi) in enumerate(boxes):
            pts = [x[i] + (j - half) * step[i] for j in range(_GRID_CANDIDATES)]
            cand.append([p for p in pts if lo < p < hi])
        x, best = sweep(cand, x, best)
    return best, x


def gap_division_lower_max(e: IntervalUnion) -> tuple[float, GapPoints]:
    """Maximize the gap-division bound over the division points."""
    _require_unit_hull(e)
    if e.n < 2:
        raise DomainError("bound needs at least two intervals")
    theta_a = [math.acos(a) for a, _ in e.intervals]
    theta_b = [math.acos(b) for _, b in e.intervals]

    def objective(deltas):
        dt = [math.pi] + [math.acos(x) for x in deltas] + [0.0]
        return _gap_division_log(theta_a, theta_b, dt)

    best_log, best_x = _coordinate_grid_max(objective, e.gaps())
    value = 0.0 if best_log == -math.inf else 0.5 * math.exp(best_log)
    return value, GapPoints(tuple(best_x))


def _solynin_points(e: IntervalUnion, d: GapPoints, interior) -> Partition:
    interior = list(interior)
    if len(interior) != max(0, e.n - 2):
        raise DomainError(
            f"expected {max(0, e.n - 2)} interior points for {e.n} intervals, "
            f"got {len(interior)}"
        )
    for g, (a, b) in zip(interior, e.intervals[1:-1]):
        if not a < g < b:
            raise DomainError(f"interior point {g} outside component ({a}, {b})")
    pts = [-1.0]
    for i, delta in enumerate(d.deltas):
        pts.append(delta)
        if i < len(interior):
            pts.append(interior[i])
    pts.append(1.0)
    return Partition(tuple(pts))


def solynin_lower(e: IntervalUnion, d: GapPoints, interior=()) -> float:
    """Tailored-partition lower bound: each cell meets one component at one shared endpoint.

    ``interior`` supplies one split point inside each interior component
    (none are needed for two intervals).
    """
    _require_unit_hull(e)
    if e.n < 2:
        raise DomainError("bound needs at least two intervals")
    d.validate_for(e)
    return partition_lower(e, _solynin_points(e, d, interior))


def solynin_lower_max(e: IntervalUnion) -> tuple[float, Partition]:
    """Maximize the tailored-partition bound over gap and interior split points."""
    _require_unit_hull(e)
    if e.n < 2:
        raise DomainError("bound needs at least two intervals")
    boxes = e.gaps() + list(e.intervals[1:-1])
    ngaps = e.n - 1

    def objective(x):
        d = GapPoints(tuple(x[:ngaps]))
        pts = _solynin_points(e, d, x[ngaps:])
        v = partition_lower(e, pts)
        return -math.inf if v <= 0.0 else math.log(v)

    best_log, best_x = _coordinate_grid_max(objective, boxes)
    value = 0.0 if best_log == -math.inf else math.exp(best_log)
    pts = _solynin_points(e, GapPoints(tuple(best_x[:ngaps])), best_x[ngaps:])
    return value, pts


def projection_upper(e: IntervalUnion) -> float:
    """Upper bound 1/2 cos(sum of gap arccos spans / 2) ** (1/(n-1)).

    Comes from projecting to the circle and replacing the preimage by the
    extremal rotationally symmetric arc family of the same total length.
    """
    _require_unit_hull(e)
    n = e.n
    if n < 2:
        raise DomainError("bound needs at least two intervals")
    s = sum(
        math.acos(e.intervals[k + 1][0]) - math.acos(e.intervals[k][1])
        for k in range(n - 1)
    )
    return 0.5 * math.cos(0.5 * s) ** (1.0 / (n - 1))


def uniform_measure_partition(n_cells: int) -> Partition:
    """Partition of [-1, 1] into cells of equal arccos measure."""
    if n_cells < 1:
        raise DomainError("need at least one cell")
    pts = [math.cos(math.pi * (n_cells - k) / n_cells) for k in range(n_cells + 1)]
    pts[0], pts[-1] = -1.0, 1.0
    return Partition(tuple(pts))


def all_bounds(e: IntervalUnion) -> list[BoundReport]:
    """Every bound applicable to the set, in a stable order.

    Two-interval-only bounds appear only for n = 2 with hull [-1, 1];
    the gap-division and projection bounds additionally need the unit
    hull; a single interval gets just the classical pair.
    """
    _require_unit_subset(e)
    lo, hi = classical_bounds(e)
    reports = [BoundReport("classical_lower", LOWER, lo)]
    unit_hull = e.is_unit_hull()
    two = e.n == 2 and unit_hull
    if two:
        alpha, beta = e.intervals[0][1], e.intervals[1][0]
        reports.append(BoundReport("schiefermayr_lower", LOWER, schiefermayr_lower(alpha, beta)))
    if e.n >= 2:
        if unit_hull:
            sol_val, sol_pts = solynin_lower_max(e)
            reports.append(BoundReport("solynin_lower", LOWER, sol_val, sol_pts))
        upart = uniform_measure_partition(e.n)
        reports.append(BoundReport("partition_uniform_lower", LOWER, partition_lower(e, upart), upart))
        if unit_hull:
            gd_val, gd_pts = gap_division_lower_max(e)
            reports.append(BoundReport("gap_division_lower", LOWER, gd_val, gd_pts))
    reports.append(BoundReport("classical_upper", UPPER, hi))
    if two:
        reports.append(BoundReport("polarization_upper", UPPER, polarization_upper(alpha, beta)))
        reports.append(BoundReport("gillis_upper", UPPER, gillis_upper(alpha, beta)))
        reports.append(BoundReport("schiefermayr_upper", UPPER, schiefermayr_upper(alpha, beta)))
    if e.n >= 2 and unit_hull:
        reports.append(BoundReport("projection_upper", UPPER, projection_upper(e)))
    return reports
