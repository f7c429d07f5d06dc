"""Two-dimensional rate regions as intersections of half-planes.

Every region lives in the nonnegative quadrant and is bounded by constraints
``a*R1 + b*R2 <= c`` with ``a, b >= 0``.  Such regions are down-closed, which
keeps vertex enumeration and hull re-expression simple.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import EmptyFamilyError, UnboundedError

VERTEX_TOL = 1e-12
CONTAINS_TOL = 1e-9


class RatePoint(NamedTuple):
    r1: float
    r2: float


@dataclass(frozen=True)
class RateConstraint:
    a: float
    b: float
    c: float

    def slack(self, r1: float, r2: float) -> float:
        return self.c - self.a * r1 - self.b * r2


@dataclass(frozen=True)
class RatePolytope:
    constraints: tuple[RateConstraint, ...]
    label: str = ""
    annotations: tuple[str, ...] = ()
    # set when some computed bound came out negative and was clamped to 0
    clamped: bool = False

    def with_label(self, label: str, *annotations: str) -> "RatePolytope":
        notes = tuple(dict.fromkeys(self.annotations + annotations))
        return replace(self, label=label, annotations=notes)

    def bound(self, a: float, b: float) -> float:
        """Tightest bound among constraints of exactly this shape (inf if none)."""
        return min(
            (k.c for k in self.constraints if k.a == a and k.b == b),
            default=math.inf,
        )


def polytope(
    bounds: Iterable[tuple[float, float, float]],
    label: str = "",
    annotations: Sequence[str] = (),
) -> RatePolytope:
    """Build a region from ``(a, b, c)`` triples, clamping negative bounds to 0."""
    constraints = []
    clamped = False
    for a, b, c in bounds:
        if a < 0 or b < 0 or (a == 0 and b == 0):
            raise ValueError(f"invalid constraint shape ({a}, {b})")
        if c < 0:
            c, clamped = 0.0, True
        constraints.append(RateConstraint(float(a), float(b), float(c)))
    return RatePolytope(tuple(constraints), label, tuple(annotations), clamped)


def box(c1: float, c2: float, label: str = "") -> RatePolytope:
    return polytope([(1, 0, c1), (0, 1, c2)], label)


def pentagon(c1: float, c2: float, s: float, label: str = "") -> RatePolytope:
    return polytope([(1, 0, c1), (0, 1, c2), (1, 1, s)], label)


def axis_limits(p: RatePolytope) -> tuple[float, float]:
    """Largest R1 and R2 reachable, read off the constraints alone."""
    r1 = min((k.c / k.a for k in p.constraints if k.a > 0), default=math.inf)
    r2 = min((k.c / k.b for k in p.constraints if k.b > 0), default=math.inf)
    if math.isinf(r1) or math.isinf(r2):
        raise UnboundedError("region needs a constraint bounding each rate axis")
    return r1, r2


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def monotone_chain(points: Iterable[Sequence[float]]) -> list[RatePoint]:
    """Counter-clockwise convex hull; collinear and duplicate points dropped."""
    pts = [(float(x), float(y)) for x, y in points]
    if not pts:
        return []
    # relative to the extent of the point set, so tiny regions keep their shape
    scale = max(max(abs(x), abs(y)) for x, y in pts)
    eps = VERTEX_TOL * scale * scale
    # coordinates equal up to rounding become exactly equal; otherwise a
    # near-vertical sliver edge can make the chain discard a true corner
    xs = _merge_close([x for x, _ in pts], VERTEX_TOL * scale)
    ys = _merge_close([y for _, y in pts], VERTEX_TOL * scale)
    pts = sorted(set((xs[x], ys[y]) for x, y in pts))
    if len(pts) <= 1:
        return [RatePoint(*p) for p in pts]

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= eps:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return [RatePoint(*p) for p in lower[:-1] + upper[:-1]]


def _merge_close(values: list[float], tol: float) -> dict[float, float]:
    """Map each value to the first member of its run of tol-close neighbours."""
    out = {}
    rep = prev = None
    for v in sorted(set(values)):
        if prev is None or v - prev > tol:
            rep = v
        out[v] = rep
        prev = v
    return out


def _start_at_origin(hull: list[RatePoint]) -> list[RatePoint]:
    if not hull:
        return hull
    k = min(range(len(hull)), key=lambda j: (hull[j].r1 + hull[j].r2, hull[j].r1))
    return hull[k:] + hull[:k]


def vertices(p: RatePolytope) -> list[RatePoint]:
    """Extreme points in counter-clockwise order, starting at the origin."""
    axis_limits(p)
    lines = [(k.a, k.b, k.c) for k in p.constraints]
    lines += [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0)]  # the axes R1 = 0, R2 = 0
    tol = VERTEX_TOL * max(abs(k.c) for k in p.constraints)
    candidates = []
    for (a1, b1, c1), (a2, b2, c2) in combinations(lines, 2):
        det = a1 * b2 - a2 * b1
        if det == 0.0:
            continue
        x = (c1 * b2 - c2 * b1) / det
        y = (a1 * c2 - a2 * c1) / det
        if x < -tol or y < -tol:
            continue
        x, y = (x if x > 0 else 0.0), (y if y > 0 else 0.0)
        if all(k.slack(x, y) >= -tol for k in p.constraints):
            candidates.append((x, y))
    return _start_at_origin(monotone_chain(candidates))


def _snap(v: float) -> float:
    half = round(v * 2.0) / 2.0
    return half if abs(v - half) <= 1e-9 else v


def from_vertices(
    pts: Iterable[Sequence[float]], label: str = "", annotations: Sequence[str] = ()
) -> RatePolytope:
    """Smallest down-closed convex region containing the given points."""
    pts = [(float(x) if x > 0 else 0.0, float(y) if y > 0 else 0.0) for x, y in pts]
    pts.append((0.0, 0.0))
    hull = _start_at_origin(monotone_chain(pts))
    r1max = max(q.r1 for q in hull)
    r2max = max(q.r2 for q in hull)
    bounds = [(1.0, 0.0, r1max), (0.0, 1.0, r2max)]
    for p, q in zip(hull, hull[1:] + hull[:1]):
        n1, n2 = q.r2 - p.r2, -(q.r1 - p.r1)  # outward normal of a ccw edge
        scale = max(abs(n1), abs(n2))
        if scale == 0.0:
            continue
        n1, n2 = n1 / scale, n2 / scale
        if n1 < -1e-9 or n2 < -1e-9:
            continue  # an axis edge; nonnegativity is implicit
        n1, n2 = _snap(max(n1, 0.0)), _snap(max(n2, 0.0))
        if (n1, n2) in ((1.0, 0.0), (0.0, 1.0)):
            continue  # already covered by the axis limits above
        bounds.append((n1, n2, n1 * p.r1 + n2 * p.r2))
    return polytope(bounds, label, annotations)


def convex_hull_union(ps: Sequence[RatePolytope], label: str = "") -> RatePolytope:
    if not ps:
        raise EmptyFamilyError("convex hull of an empty family")
    pooled = [v for p in ps for v in vertices(p)]
    hull = from_vertices(pooled, label)
    notes = tuple(dict.fromkeys(a for p in ps for a in p.annotations))
    return replace(hull, annotations=notes, clamped=any(p.clamped for p in ps))


def area(p: RatePolytope) -> float:
    vs = vertices(p)
    total = 0.0
    for (x1, y1), (x2, y2) in zip(vs, vs[1:] + vs[:1]):
        total += x1 * y2 - x2 * y1
    return abs(total) / 2.0


def perimeter(p: RatePolytope) -> float:
    vs = vertices(p)
    if len(vs) < 2:
        return 0.0
    return sum(math.dist(u, v) for u, v in zip(vs, vs[1:] + vs[:1]))


def contains(p: RatePolytope, pt: Sequence[float], tol: float = CONTAINS_TOL) -> bool:
    r1, r2 = pt
    if r1 < -tol or r2 < -tol:
        return False
    return all(k.a * r1 + k.b * r2 <= k.c + tol for k in p.constraints)


def region_difference_witness(p: RatePolytope, q: RatePolytope) -> RatePoint | None:
    """A vertex of p lying outside q, or None when p is inside q."""
    for v in vertices(p):
        if not contains(q, v):
            return v
    return None


def is_subset(p: RatePolytope, q: RatePolytope) -> bool:
    return region_difference_witness(p, q) is None


def mirrored(p: RatePolytope) -> RatePolytope:
    return replace(
        p, constraints=tuple(RateConstraint(k.b, k.a, k.c) for k in p.constraints)
    )


@dataclass
class GridEstimate:
    area: float
    sample_points: list[RatePoint] = field(default_factory=list)

    def __iter__(self):
        return iter((self.area, self.sample_points))


def grid_oracle(p: RatePolytope, resolution: int, max_samples: int = 256) -> GridEstimate:
    """Rasterize the bounding box and count cell centres inside the region.

    Uses only the constraints, never the vertex enumeration, so it can serve
    as an independent check on :func:`area`.
    """
    if resolution < 10:
        raise ValueError("resolution must be at least 10")
    r1max, r2max = axis_limits(p)
    if r1max <= 0 or r2max <= 0:
        return GridEstimate(0.0, [RatePoint(0.0, 0.0)])
    dx, dy = r1max / resolution, r2max / resolution
    xs = (np.arange(resolution) + 0.5) * dx
    ys = (np.arange(resolution) + 0.5) * dy
    inside = 0
    kept: list[RatePoint] = []
    stride = max(1, resolution // 16)
    for j in range(0, resolution, 256):
        Y = ys[j:j + 256, None]
        mask = np.ones((Y.shape[0], resolution), dtype=bool)
        for k in p.constraints:
            mask &= k.a * xs[None, :] + k.b * Y <= k.c
        inside += int(mask.sum())
        for r, c in zip(*np.nonzero(mask[::stride, ::stride])):
            if len(kept) < max_samples:
                kept.append(RatePoint(float(xs[c * stride]), float(Y[r * stride, 0])))
    return GridEstimate(inside * dx * dy, kept)


def vertices_csv(p: RatePolytope) -> str:
    """``R1,R2`` header then one vertex per line, ccw from the origin."""
    buf = io.StringIO()
    buf.write("R1,R2\n")
    for v in vertices(p):
        buf.write(f"{v.r1:.9g},{v.r2:.9g}\n")
    return buf.getvalue()
