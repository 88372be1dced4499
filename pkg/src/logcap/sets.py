"""Interval unions on the real line and arc subsets of the unit circle.

The central object is :class:`IntervalUnion`, a finite union of disjoint
closed intervals.  For subsets of ``[-1, 1]`` the module provides the
arccos-weighted measure ``chebyshev_measure`` (integral of dx/sqrt(1-x^2)),
the symmetric circle preimage, and the canonical projection sets obtained
from rotationally symmetric arc families.  All values are immutable and
every operation is a pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ValidationError

TWO_PI = 2.0 * math.pi

# endpoints this close to +-1 are snapped exactly, so hull checks can use ==
_SNAP_TOL = 1e-14


@dataclass(frozen=True)
class IntervalUnion:
    """Ordered union of disjoint closed intervals [a_1,b_1], ..., [a_n,b_n].

    Invariants: at least one interval, all endpoints finite, and
    a_1 < b_1 < a_2 < ... < a_n < b_n.  Use :func:`make_interval_union` to
    build one from unordered or touching input pairs.
    """

    intervals: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if not self.intervals:
            raise ValidationError("interval union needs at least one interval")
        prev = None
        for a, b in self.intervals:
            if not (math.isfinite(a) and math.isfinite(b)):
                raise ValidationError(f"non-finite endpoint in ({a}, {b})")
            if a >= b:
                raise ValidationError(f"reversed or empty interval ({a}, {b})")
            if prev is not None and a <= prev:
                raise ValidationError("intervals must be sorted and disjoint")
            prev = b

    @property
    def n(self) -> int:
        return len(self.intervals)

    @property
    def hull(self) -> tuple[float, float]:
        return self.intervals[0][0], self.intervals[-1][1]

    def endpoints(self) -> list[float]:
        """Flat [a_1, b_1, ..., a_n, b_n]."""
        out = []
        for a, b in self.intervals:
            out.append(a)
            out.append(b)
        return out

    def gaps(self) -> list[tuple[float, float]]:
        """Open gaps (b_i, a_{i+1}) between consecutive intervals."""
        return [
            (self.intervals[i][1], self.intervals[i + 1][0])
            for i in range(self.n - 1)
        ]

    def total_length(self) -> float:
        return sum(b - a for a, b in self.intervals)

    def contains(self, x: float) -> bool:
        return any(a <= x <= b for a, b in self.intervals)

    def is_unit_hull(self) -> bool:
        """True when the hull is exactly [-1, 1]."""
        return self.intervals[0][0] == -1.0 and self.intervals[-1][1] == 1.0

    def to_json_dict(self) -> dict:
        return {"intervals": [[a, b] for a, b in self.intervals]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "IntervalUnion":
        try:
            pairs = data["intervals"]
        except (TypeError, KeyError) as exc:
            raise ValidationError("expected {'intervals': [[a, b], ...]}") from exc
        return make_interval_union([tuple(p) for p in pairs])


@dataclass(frozen=True)
class CircleArcSet:
    """Closed subset of the unit circle as disjoint arcs in [0, 2*pi].

    Arcs are sorted by start angle with non-overlapping interiors; an arc
    crossing angle 0 is stored split at 0.  Total length lies in (0, 2*pi].
    """

    arcs: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if not self.arcs:
            raise ValidationError("arc set must be nonempty")
        prev = None
        for s, e in self.arcs:
            if not (0.0 <= s < e <= TWO_PI):
                raise ValidationError(f"arc ({s}, {e}) outside [0, 2*pi] or reversed")
            if prev is not None and s < prev:
                raise ValidationError("arcs must be sorted with disjoint interiors")
            prev = e
        if self.total_length() > TWO_PI + 1e-12:
            raise ValidationError("total arc length exceeds 2*pi")

    def total_length(self) -> float:
        return sum(e - s for s, e in self.arcs)

    def length_within(self, lo: float, hi: float) -> float:
        """Arc length of the set inside the sector [lo, hi] (angles, hi <= lo + 2*pi)."""
        total = 0.0
        for s, e in self.arcs:
            for shift in (-TWO_PI, 0.0, TWO_PI):
                ss, ee = s + shift, e + shift
                total += max(0.0, min(ee, hi) - max(ss, lo))
        return total


@dataclass(frozen=True)
class Partition:
    """Division points -1 = t_0 < t_1 < ... < t_s = 1 of the base interval."""

    points: tuple[float, ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValidationError("partition needs at least two points")
        if self.points[0] != -1.0 or self.points[-1] != 1.0:
            raise ValidationError("partition must start at -1 and end at 1")
        for lo, hi in zip(self.points, self.points[1:]):
            if not lo < hi:
                raise ValidationError("partition points must strictly increase")

    def cells(self) -> list[tuple[float, float]]:
        return list(zip(self.points, self.points[1:]))


@dataclass(frozen=True)
class GapPoints:
    """One chosen point per gap of an interval union (delta_1 ... delta_{n-1})."""

    deltas: tuple[float, ...]

    def validate_for(self, e: IntervalUnion) -> None:
        if len(self.deltas) != e.n - 1:
            raise DomainError(
                f"expected {e.n - 1} gap points for a union of {e.n} intervals, "
                f"got {len(self.deltas)}"
            )
        for d, (lo, hi) in zip(self.deltas, e.gaps()):
            if not lo < d < hi:
                raise DomainError(f"gap point {d} outside open gap ({lo}, {hi})")


def _snap(x: float) -> float:
    if abs(x - 1.0) < _SNAP_TOL:
        return 1.0
    if abs(x + 1.0) < _SNAP_TOL:
        return -1.0
    return x


def make_interval_union(pairs) -> IntervalUnion:
    """Build an :class:`IntervalUnion` from (a, b) pairs.

    Pairs are sorted; overlapping or touching intervals are merged.
    Endpoints within 1e-14 of +-1 are snapped to +-1 exactly.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValidationError("need at least one interval")
    cleaned = []
    for pair in pairs:
        try:
            a, b = float(pair[0]), float(pair[1])
        except (TypeError, ValueError, IndexError) as exc:
            raise ValidationError(f"not an interval pair: {pair!r}") from exc
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValidationError(f"non-finite endpoint in ({a}, {b})")
        if a >= b:
            raise ValidationError(f"reversed or empty interval ({a}, {b})")
        cleaned.append((_snap(a), _snap(b)))
    cleaned.sort()
    merged = [list(cleaned[0])]
    for a, b in cleaned[1:]:
        if a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    return IntervalUnion(tuple((a, b) for a, b in merged))


def _require_unit_subset(e: IntervalUnion) -> None:
    a1, bn = e.hull
    if a1 < -1.0 or bn > 1.0:
        raise DomainError(f"set must lie inside [-1, 1], hull is [{a1}, {bn}]")


def chebyshev_measure(e: IntervalUnion) -> float:
    """Measure of e under dx/sqrt(1-x^2); half the length of its circle preimage.

    Equals sum_i [arccos(a_i) - arccos(b_i)] and lies in [0, pi].
    """
    _require_unit_subset(e)
    return sum(math.acos(a) - math.acos(b) for a, b in e.intervals)


def measure_within(e: IntervalUnion, lo: float, hi: float) -> float:
    """chebyshev_measure of the part of e inside [lo, hi], without building the intersection."""
    if lo < -1.0 or hi > 1.0:
        raise DomainError("cell must lie inside [-1, 1]")
    total = 0.0
    for a, b in e.intervals:
        s, t = max(a, lo), min(b, hi)
        if t > s:
            total += math.acos(s) - math.acos(t)
    return total


def intersect(a: IntervalUnion, b: IntervalUnion) -> IntervalUnion | None:
    """Exact set intersection; returns None when the intersection is empty."""
    out = []
    i = j = 0
    ia, ib = a.intervals, b.intervals
    while i < len(ia) and j < len(ib):
        lo = max(ia[i][0], ib[j][0])
        hi = min(ia[i][1], ib[j][1])
        if lo < hi:
            out.append((lo, hi))
        if ia[i][1] < ib[j][1]:
            i += 1
        else:
            j += 1
    if not out:
        return None
    return IntervalUnion(tuple(out))


def normalize_to_unit(e: IntervalUnion) -> tuple[IntervalUnion, float]:
    """Affine image of e with hull exactly [-1, 1], plus the half-width scale.

    Capacity transforms as cap(e) = scale * cap(normalized).
    """
    a1, bn = e.hull
    scale = 0.5 * (bn - a1)
    center = 0.5 * (bn + a1)
    mapped = [((a - center) / scale, (b - center) / scale) for a, b in e.intervals]
    # force the hull endpoints exactly, the interior ones via snapping
    mapped[0] = (-1.0, mapped[0][1])
    mapped[-1] = (mapped[-1][0], 1.0)
    out = IntervalUnion(tuple((_snap(a), _snap(b)) for a, b in mapped))
    return out, scale


def _project_arc(s: float, e: float) -> tuple[float, float]:
    """Projection of the arc {exp(i*t): s <= t <= e} onto the real axis."""
    lo = min(math.cos(s), math.cos(e))
    hi = max(math.cos(s), math.cos(e))
    # the arc may contain a crest (angle 0 mod 2pi) or a trough (pi mod 2pi)
    if math.ceil(s / TWO_PI) * TWO_PI <= e:
        hi = 1.0
    if math.pi + math.ceil((s - math.pi) / TWO_PI) * TWO_PI <= e:
        lo = -1.0
    return lo, hi


def canonical_set(l: float, n: int) -> IntervalUnion:
    """Projection onto the real axis of n arcs of total length l centered at angles 2*pi*j/n.

    These are the sets on which the partition and gap-division bounds are tight.
    """
    if not 0.0 < l < TWO_PI:
        raise DomainError(f"total arc length must lie in (0, 2*pi), got {l}")
    if n < 1:
        raise DomainError("need a positive number of arcs")
    h = l / (2.0 * n)
    pairs = []
    for j in range(n):
        c = TWO_PI * j / n
        pairs.append(_project_arc(c - h, c + h))
    return make_interval_union(pairs)


def circle_preimage(e: IntervalUnion) -> CircleArcSet:
    """Symmetric preimage of e on the unit circle under orthogonal projection.

    Total arc length equals 2 * chebyshev_measure(e).
    """
    _require_unit_subset(e)
    arcs = []
    for a, b in e.intervals:
        t1, t0 = math.acos(a), math.acos(b)  # t0 < t1 in [0, pi]
        arcs.append((t0, t1))  # upper half
        arcs.append((TWO_PI - t1, TWO_PI - t0))  # mirrored arc, lower half
    # merge arcs sharing endpoints; a join across angle 0 stays split at 0
    arcs = [(s, e) for s, e in arcs if e > s]
    arcs.sort()
    merged = [list(arcs[0])]
    for s, e in arcs[1:]:
        if s <= merged[-1][1] + 1e-15:
            merged[-1][1] = max(merged[-1][1], e)
        else:
            merged.append([s, e])
    return CircleArcSet(tuple((s, e) for s, e in merged))


def project_to_real_axis(f: CircleArcSet) -> IntervalUnion:
    """Orthogonal projection of an arc set onto the real axis."""
    return make_interval_union([_project_arc(s, e) for s, e in f.arcs])
