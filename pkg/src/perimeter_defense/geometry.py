"""Perimeter parameterization and winning-region membership predicates.

Conventions used throughout:

* The target region is convex; its boundary is parameterized by arc length
  ``s in [0, L)``, counter-clockwise.  Defenders live on the boundary at arc
  positions; intruders live in the plane.
* A race margin is ``defender_time - intruder_time`` for some breach point:
  positive means the intruder can reach that point first.  Ties and near-ties
  (within the time tolerance) classify as defender-winning, matching the
  convention that defenders are at least as fast.
* Intruder travel times use the shortest path that does not cut through the
  open interior of the target.  A straight chord through the target is not a
  realizable approach: the intruder would touch the boundary (and score or be
  captured) at the first crossing.  For points inside the target the straight
  segment to the boundary is itself interior, so the plain Euclidean distance
  applies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Perimeter",
    "SpeedModel",
    "ArcInterval",
    "point_at",
    "project",
    "arc_distance",
    "race_distance",
    "win_margin_1v1",
    "in_intruder_win_1v1",
    "in_independent_region",
    "in_cooperative_region",
    "in_paired_defense_region",
    "in_implicit_zone",
    "breach_target_pincer",
]

# Relative tolerances; see `arc_tolerance` / `time_tolerance`.
ARC_TOL_REL = 1e-6
TIME_TOL_REL = 1e-9
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SpeedModel:
    """Maximum speeds of the two teams; ``nu = v_intruder / v_defender``."""

    v_defender: float
    v_intruder: float

    def __post_init__(self) -> None:
        if self.v_defender <= 0 or self.v_intruder <= 0:
            raise ValueError("speeds must be positive")
        if self.nu > 1.0 + 1e-12:
            raise ValueError(f"speed ratio nu={self.nu} outside (0, 1]")

    @property
    def nu(self) -> float:
        return self.v_intruder / self.v_defender

    @staticmethod
    def from_ratio(v_defender: float, nu: float) -> "SpeedModel":
        return SpeedModel(v_defender, v_defender * nu)


class Perimeter:
    """Arc-length parameterized convex boundary (circle or convex polygon).

    Precomputes an immutable table of ``sample_resolution`` boundary points
    used by all sampled predicates; instances are treated as read-only.
    """

    def __init__(self, kind: str, length: float, sample_resolution: int):
        self.kind = kind
        self.length = float(length)
        self.sample_resolution = int(sample_resolution)
        if self.sample_resolution < 64:
            raise ValueError("sample_resolution must be at least 64")
        self.sample_arcs = np.arange(self.sample_resolution) * (
            self.length / self.sample_resolution
        )
        self.sample_points = self.point_at_many(self.sample_arcs)

    # -- construction ------------------------------------------------------

    @staticmethod
    def circle(
        center: tuple[float, float] = (0.0, 0.0),
        radius: float = 1.0,
        sample_resolution: int = 2048,
    ) -> "CirclePerimeter":
        return CirclePerimeter(center, radius, sample_resolution)

    @staticmethod
    def polygon(
        vertices,
        sample_resolution: int = 2048,
    ) -> "PolygonPerimeter":
        return PolygonPerimeter(vertices, sample_resolution)

    # -- subclass API --------------------------------------------------------

    def point_at_many(self, s: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def point_at(self, s: float) -> np.ndarray:
        return self.point_at_many(np.asarray([s], dtype=float))[0]

    def project(self, x) -> float:
        raise NotImplementedError

    def is_inside(self, x) -> bool:
        """True if x is strictly inside the target region."""
        raise NotImplementedError

    def boundary_distance(self, x) -> float:
        """Unsigned Euclidean distance from x to the boundary curve."""
        raise NotImplementedError

    def race_distances(self, x) -> np.ndarray:
        """Race distance from x to every precomputed sample point."""
        raise NotImplementedError

    def race_distance(self, x, s: float) -> float:
        """Race distance from x to the boundary point at arc position s."""
        raise NotImplementedError

    def outward_normal(self, s: float) -> np.ndarray:
        raise NotImplementedError

    # -- shared helpers ------------------------------------------------------

    def wrap(self, s: float) -> float:
        return float(np.mod(s, self.length))

    def arc_ccw(self, s1: float, s2: float) -> float:
        return float(np.mod(s2 - s1, self.length))

    def arc_shortest(self, s1: float, s2: float) -> float:
        d = self.arc_ccw(s1, s2)
        return min(d, self.length - d)

    def describe(self) -> dict:
        raise NotImplementedError


class CirclePerimeter(Perimeter):
    def __init__(self, center, radius, sample_resolution=2048):
        if radius <= 0:
            raise ValueError("radius must be positive")
        self.center = np.asarray(center, dtype=float)
        self.radius = float(radius)
        super().__init__("circle", 2.0 * math.pi * radius, sample_resolution)

    def point_at_many(self, s):
        theta = np.asarray(s, dtype=float) / self.radius
        return self.center + self.radius * np.stack(
            [np.cos(theta), np.sin(theta)], axis=-1
        )

    def project(self, x):
        v = np.asarray(x, dtype=float) - self.center
        theta = math.atan2(v[1], v[0])
        return self.wrap(theta * self.radius)

    def is_inside(self, x):
        v = np.asarray(x, dtype=float) - self.center
        return float(np.hypot(v[0], v[1])) < self.radius

    def boundary_distance(self, x):
        v = np.asarray(x, dtype=float) - self.center
        return abs(float(np.hypot(v[0], v[1])) - self.radius)

    def _polar(self, x):
        v = np.asarray(x, dtype=float) - self.center
        return float(np.hypot(v[0], v[1])), math.atan2(v[1], v[0])

    def race_distances(self, x):
        rho, theta_x = self._polar(x)
        theta_s = self.sample_arcs / self.radius
        phi = np.abs(np.mod(theta_s - theta_x + math.pi, 2.0 * math.pi) - math.pi)
        eucl = np.sqrt(
            np.maximum(
                rho * rho
                + self.radius * self.radius
                - 2.0 * rho * self.radius * np.cos(phi),
                0.0,
            )
        )
        if rho < self.radius:
            return eucl
        alpha = math.acos(min(1.0, self.radius / rho))
        tangent = math.sqrt(max(rho * rho - self.radius * self.radius, 0.0))
        wrapped = tangent + self.radius * (phi - alpha)
        return np.where(phi <= alpha, eucl, wrapped)

    def race_distance(self, x, s):
        rho, theta_x = self._polar(x)
        phi = abs(
            math.remainder(s / self.radius - theta_x, 2.0 * math.pi)
        )
        eucl = math.sqrt(
            max(
                rho * rho
                + self.radius * self.radius
                - 2.0 * rho * self.radius * math.cos(phi),
                0.0,
            )
        )
        if rho < self.radius:
            return eucl
        alpha = math.acos(min(1.0, self.radius / rho))
        if phi <= alpha:
            return eucl
        tangent = math.sqrt(max(rho * rho - self.radius * self.radius, 0.0))
        return tangent + self.radius * (phi - alpha)

    def outward_normal(self, s):
        theta = s / self.radius
        return np.array([math.cos(theta), math.sin(theta)])

    def describe(self):
        return {
            "type": "circle",
            "center": [float(self.center[0]), float(self.center[1])],
            "radius": self.radius,
        }


class PolygonPerimeter(Perimeter):
    def __init__(self, vertices, sample_resolution=2048):
        verts = np.asarray(vertices, dtype=float)
        if verts.ndim != 2 or verts.shape[0] < 3 or verts.shape[1] != 2:
            raise ValueError("polygon needs at least 3 planar vertices")
        edges = np.roll(verts, -1, axis=0) - verts
        cross = edges[:, 0] * np.roll(edges, -1, axis=0)[:, 1] - edges[:, 1] * np.roll(
            edges, -1, axis=0
        )[:, 0]
        if np.any(cross <= 0):
            raise ValueError("vertices must be strictly convex and ccw-ordered")
        edge_len = np.hypot(edges[:, 0], edges[:, 1])
        if np.any(edge_len == 0):
            raise ValueError("repeated vertices")
        self.vertices = verts
        self.edges = edges
        self.edge_len = edge_len
        self.edge_dir = edges / edge_len[:, None]
        self.cum_len = np.concatenate([[0.0], np.cumsum(edge_len)])
        super().__init__("polygon", float(self.cum_len[-1]), sample_resolution)

    def point_at_many(self, s):
        s = np.mod(np.asarray(s, dtype=float), self.length)
        idx = np.clip(
            np.searchsorted(self.cum_len, s, side="right") - 1,
            0,
            len(self.vertices) - 1,
        )
        t = s - self.cum_len[idx]
        return self.vertices[idx] + self.edge_dir[idx] * t[:, None]

    def project(self, x):
        x = np.asarray(x, dtype=float)
        best_s, best_d = 0.0, math.inf
        for j in range(len(self.vertices)):
            t = float(np.dot(x - self.vertices[j], self.edge_dir[j]))
            t = min(max(t, 0.0), self.edge_len[j])
            p = self.vertices[j] + self.edge_dir[j] * t
            d = float(np.hypot(*(x - p)))
            if d < best_d - 1e-15:
                best_d = d
                best_s = self.wrap(self.cum_len[j] + t)
        return best_s

    def _edge_cross(self, x):
        x = np.asarray(x, dtype=float)
        rel = x[None, :] - self.vertices
        return self.edges[:, 0] * rel[:, 1] - self.edges[:, 1] * rel[:, 0]

    def is_inside(self, x):
        return bool(np.all(self._edge_cross(x) > 0.0))

    def boundary_distance(self, x):
        x = np.asarray(x, dtype=float)
        best = math.inf
        for j in range(len(self.vertices)):
            t = float(np.dot(x - self.vertices[j], self.edge_dir[j]))
            t = min(max(t, 0.0), self.edge_len[j])
            p = self.vertices[j] + self.edge_dir[j] * t
            best = min(best, float(np.hypot(*(x - p))))
        return best

    def _silhouette(self, x):
        """Arc range [s_a, s_b] (ccw) of the boundary visible from exterior x,
        with the two tangent vertices.  None when x is inside or on ∂T."""
        cross = self._edge_cross(x)
        front = cross < 0.0
        if not front.any():
            return None
        n = len(front)
        if front.all():  # cannot happen for a convex polygon and finite x
            raise RuntimeError("degenerate silhouette")
        starts = [j for j in range(n) if front[j] and not front[j - 1]]
        a = starts[0]
        b = a
        while front[(b + 1) % n]:
            b = (b + 1) % n
        return a, (b + 1) % n

    def race_distances(self, x):
        x = np.asarray(x, dtype=float)
        pts = self.sample_points
        eucl = np.hypot(pts[:, 0] - x[0], pts[:, 1] - x[1])
        if self.is_inside(x):
            return eucl
        sil = self._silhouette(x)
        if sil is None:
            # x on the boundary: shortest exterior paths follow the boundary
            sx = self.project(x)
            ccw = np.mod(self.sample_arcs - sx, self.length)
            return np.minimum(ccw, self.length - ccw)
        a, b1 = sil
        s_a = self.cum_len[a]
        s_b = self.cum_len[b1] if b1 != 0 else self.length
        va, vb = self.vertices[a], self.vertices[b1 % len(self.vertices)]
        da = float(np.hypot(*(x - va)))
        db = float(np.hypot(*(x - vb)))
        rel = np.mod(self.sample_arcs - s_a, self.length)
        vis_len = np.mod(s_b - s_a, self.length)
        visible = rel <= vis_len
        wrap_ccw = db + np.mod(self.sample_arcs - s_b, self.length)
        wrap_cw = da + np.mod(s_a - self.sample_arcs, self.length)
        return np.where(visible, eucl, np.minimum(wrap_ccw, wrap_cw))

    def race_distance(self, x, s):
        x = np.asarray(x, dtype=float)
        p = self.point_at(s)
        eucl = float(np.hypot(*(x - p)))
        if self.is_inside(x):
            return eucl
        sil = self._silhouette(x)
        if sil is None:
            sx = self.project(x)
            return self.arc_shortest(sx, s)
        a, b1 = sil
        s_a = self.cum_len[a]
        s_b = self.cum_len[b1] if b1 != 0 else self.length
        if np.mod(s - s_a, self.length) <= np.mod(s_b - s_a, self.length):
            return eucl
        va, vb = self.vertices[a], self.vertices[b1 % len(self.vertices)]
        wrap_ccw = float(np.hypot(*(x - vb))) + self.arc_ccw(s_b, s)
        wrap_cw = float(np.hypot(*(x - va))) + self.arc_ccw(s, s_a)
        return min(wrap_ccw, wrap_cw)

    def outward_normal(self, s):
        s = self.wrap(s)
        idx = min(
            int(np.searchsorted(self.cum_len, s, side="right") - 1),
            len(self.vertices) - 1,
        )
        d = self.edge_dir[idx]
        return np.array([d[1], -d[0]])

    def describe(self):
        return {"type": "polygon", "vertices": self.vertices.tolist()}


@dataclass(frozen=True)
class ArcInterval:
    """Open ccw arc interval from ``start`` to ``end``.

    ``degenerate_full`` marks the (i, i) pair interval: the whole boundary
    minus the single defender position.
    """

    start: float
    end: float
    perimeter_length: float
    degenerate_full: bool = False

    def __post_init__(self) -> None:
        if self.degenerate_full and self.start != self.end:
            raise ValueError("degenerate_full interval requires start == end")

    @property
    def ccw_length(self) -> float:
        if self.degenerate_full:
            return self.perimeter_length
        return float(np.mod(self.end - self.start, self.perimeter_length))

    def contains(self, s: float) -> bool:
        """Open-interval membership of an arc position."""
        if self.degenerate_full:
            return np.mod(s - self.start, self.perimeter_length) != 0.0
        rel = np.mod(s - self.start, self.perimeter_length)
        return 0.0 < rel < self.ccw_length

    def overlaps(self, other: "ArcInterval") -> bool:
        """True when the two open intervals share any arc."""
        if self.ccw_length == 0.0 or other.ccw_length == 0.0:
            return False
        if self.degenerate_full or other.degenerate_full:
            return True
        return (
            self.contains(other.start)
            or other.contains(self.start)
            or np.mod(self.start - other.start, self.perimeter_length) == 0.0
        )


# -- tolerances --------------------------------------------------------------


def arc_tolerance(perimeter: Perimeter) -> float:
    return ARC_TOL_REL * perimeter.length


def time_tolerance(perimeter: Perimeter, speeds: SpeedModel) -> float:
    return TIME_TOL_REL * perimeter.length / speeds.v_defender


def _margin_lipschitz(speeds: SpeedModel) -> float:
    # |d margin / d s| <= 1/v_D + 1/v_A per unit arc length
    return 1.0 / speeds.v_defender + 1.0 / speeds.v_intruder


# -- basic operations ---------------------------------------------------------


def point_at(perimeter: Perimeter, s: float) -> np.ndarray:
    """Boundary point at arc position s (any real; reduced modulo L)."""
    return perimeter.point_at(perimeter.wrap(s))


def project(perimeter: Perimeter, x) -> float:
    """Arc position minimizing Euclidean distance to x; ties take smallest s."""
    return perimeter.project(x)


def arc_distance(perimeter: Perimeter, s1: float, s2: float, direction: str = "shortest") -> float:
    """Arc distance from s1 to s2 in the given direction (ccw, cw, shortest)."""
    s1, s2 = perimeter.wrap(s1), perimeter.wrap(s2)
    if direction == "ccw":
        return perimeter.arc_ccw(s1, s2)
    if direction == "cw":
        return perimeter.arc_ccw(s2, s1)
    if direction == "shortest":
        return perimeter.arc_shortest(s1, s2)
    raise ValueError(f"unknown direction {direction!r}")


def race_distance(perimeter: Perimeter, x, s: float) -> float:
    """Intruder travel distance from x to γ(s) respecting the target interior."""
    return perimeter.race_distance(x, perimeter.wrap(s))


def _golden_max(f, lo: float, hi: float, tol: float) -> float:
    """Maximum value of f on [lo, hi] via golden-section search."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    return max(fc, fd, f(0.5 * (a + b)))


def _refined_sup(
    values: np.ndarray,
    coords: np.ndarray,
    f,
    gap: float,
    tol: float,
    lip: float,
    cyclic_period: float | None = None,
    domain: tuple[float, float] | None = None,
) -> float:
    """Sup of f over a sampled 1-d domain.

    ``coords`` are positions in the domain coordinate (arc position for the
    cyclic case, offsets for linear intervals).  Every local maximum whose
    sample value could still hold the true sup under the Lipschitz bound
    ``lip`` is refined with a golden-section pass on its bracket.
    """
    if len(values) == 0:
        return -math.inf
    order = np.argsort(coords, kind="stable")
    values = values[order]
    coords = coords[order]
    coarse = float(values.max())
    slack = lip * gap
    near = values >= coarse - slack
    if len(values) < 3:
        local = np.ones_like(near)
    else:
        left = np.roll(values, 1)
        right = np.roll(values, -1)
        local = (values >= left) & (values >= right)
        if cyclic_period is None:
            local[0] = values[0] >= values[1]
            local[-1] = values[-1] >= values[-2]
    best = coarse
    for i in np.nonzero(local & near)[0]:
        lo = coords[i] - gap
        hi = coords[i] + gap
        if domain is not None:
            lo = max(lo, domain[0])
            hi = min(hi, domain[1])
        if hi <= lo:
            continue
        best = max(best, _golden_max(f, lo, hi, tol))
    return best


def _margin_samples_either(perimeter: Perimeter, speeds: SpeedModel, s_d: float, x) -> np.ndarray:
    arcs = perimeter.sample_arcs
    d = np.mod(arcs - s_d, perimeter.length)
    arc_short = np.minimum(d, perimeter.length - d)
    dist = perimeter.race_distances(x)
    return arc_short / speeds.v_defender - dist / speeds.v_intruder


def _value_tolerance(perimeter: Perimeter, speeds: SpeedModel) -> float:
    # Bracket width for golden refinement; chosen so the value error stays
    # below the time tolerance eta_t.
    eta_t = time_tolerance(perimeter, speeds)
    return min(arc_tolerance(perimeter), 0.25 * eta_t / _margin_lipschitz(speeds))


def win_margin_1v1(
    perimeter: Perimeter,
    speeds: SpeedModel,
    s_d: float,
    x,
    direction: str = "either",
) -> float:
    """Best race margin the intruder at x can achieve against one defender.

    The margin at a breach point is defender time minus intruder time; the
    returned value is the supremum over breach points.  For ``cw`` / ``ccw``
    the supremum ranges over the half of the boundary which that rotation
    covers as the shorter route, so the ``either`` margin equals the max of
    the two directional margins.
    """
    s_d = perimeter.wrap(s_d)
    L = perimeter.length
    gap = L / perimeter.sample_resolution
    tol = _value_tolerance(perimeter, speeds)
    lip = _margin_lipschitz(speeds)
    v_d, v_a = speeds.v_defender, speeds.v_intruder

    arcs = perimeter.sample_arcs
    rel = np.mod(arcs - s_d, L)
    dist = perimeter.race_distances(x)

    if direction == "either":
        values = np.minimum(rel, L - rel) / v_d - dist / v_a

        def f(s: float) -> float:
            r = np.mod(s - s_d, L)
            return min(r, L - r) / v_d - perimeter.race_distance(x, perimeter.wrap(s)) / v_a

        return _refined_sup(values, arcs, f, gap, tol, lip, cyclic_period=L)

    if direction == "ccw":
        sign = 1.0
    elif direction == "cw":
        sign = -1.0
    else:
        raise ValueError(f"unknown direction {direction!r}")

    # Linear domain in rotation offset r in [0, L/2]: breach at s_d + sign*r.
    r_coords = rel if sign > 0 else np.mod(-rel, L)
    mask = r_coords <= L / 2.0
    values = r_coords[mask] / v_d - dist[mask] / v_a

    def f_dir(r: float) -> float:
        s = perimeter.wrap(s_d + sign * r)
        return r / v_d - perimeter.race_distance(x, s) / v_a

    return _refined_sup(
        values, r_coords[mask], f_dir, gap, tol, lip, domain=(0.0, L / 2.0)
    )


def _classify_margin(coarse: np.ndarray, refine, gap: float, lip: float, eta_t: float):
    """Membership decision from a coarse sup with optional refinement.

    ``refine`` is invoked only when the coarse sup sits inside the ambiguity
    band where sampling error could flip the classification.
    """
    band = 0.5 * lip * gap
    if coarse > eta_t:
        return True
    if coarse + band <= eta_t:
        return False
    return refine() > eta_t


def in_intruder_win_1v1(perimeter: Perimeter, speeds: SpeedModel, s_d: float, x) -> bool:
    """True iff x lies in the intruder-winning region against one defender."""
    values = _margin_samples_either(perimeter, speeds, perimeter.wrap(s_d), x)
    gap = perimeter.length / perimeter.sample_resolution
    lip = _margin_lipschitz(speeds)
    eta_t = time_tolerance(perimeter, speeds)
    return _classify_margin(
        float(values.max()),
        lambda: win_margin_1v1(perimeter, speeds, s_d, x, "either"),
        gap,
        lip,
        eta_t,
    )


def in_independent_region(perimeter: Perimeter, speeds: SpeedModel, pair, x) -> bool:
    """Membership in A_I: the intruder beats both boundary defenders 1v1."""
    s_r, s_l = pair
    if perimeter.wrap(s_r) == perimeter.wrap(s_l):
        return in_intruder_win_1v1(perimeter, speeds, s_r, x)
    return in_intruder_win_1v1(perimeter, speeds, s_r, x) and in_intruder_win_1v1(
        perimeter, speeds, s_l, x
    )


def cooperative_margin(perimeter: Perimeter, speeds: SpeedModel, pair, x) -> float:
    """Best margin against the pincering pair over the open interior arc.

    The right defender sweeps ccw from s_R, the left defender cw from s_L;
    the defender arrival time at interior offset a is min(a, Δ - a) / v_D.
    """
    s_r, s_l = perimeter.wrap(pair[0]), perimeter.wrap(pair[1])
    delta = perimeter.arc_ccw(s_r, s_l)
    if delta == 0.0:
        return -math.inf
    L = perimeter.length
    tol = _value_tolerance(perimeter, speeds)
    lip = _margin_lipschitz(speeds)

    rel = np.mod(perimeter.sample_arcs - s_r, L)
    mask = (rel > 0.0) & (rel < delta)
    n_inside = int(mask.sum())
    if n_inside >= 8:
        offsets = rel[mask]
        dist = perimeter.race_distances(x)[mask]
        gap = L / perimeter.sample_resolution
    else:
        n = 33
        offsets = delta * (np.arange(1, n + 1) / (n + 1.0))
        pts_arcs = np.mod(s_r + offsets, L)
        dist = np.array([perimeter.race_distance(x, s) for s in pts_arcs])
        gap = delta / (n + 1.0)
    values = (
        np.minimum(offsets, delta - offsets) / speeds.v_defender
        - dist / speeds.v_intruder
    )

    def f(a: float) -> float:
        s = perimeter.wrap(s_r + a)
        return (
            min(a, delta - a) / speeds.v_defender
            - perimeter.race_distance(x, s) / speeds.v_intruder
        )

    return _refined_sup(values, offsets, f, gap, tol, lip, domain=(0.0, delta))


def in_cooperative_region(perimeter: Perimeter, speeds: SpeedModel, pair, x) -> bool:
    """Membership in A_C: the intruder beats the pincer to some interior point."""
    s_r, s_l = perimeter.wrap(pair[0]), perimeter.wrap(pair[1])
    if s_r == s_l:
        return in_intruder_win_1v1(perimeter, speeds, s_r, x)
    eta_t = time_tolerance(perimeter, speeds)
    return cooperative_margin(perimeter, speeds, pair, x) > eta_t


def in_paired_defense_region(perimeter: Perimeter, speeds: SpeedModel, pair, x) -> bool:
    """Membership in R_pair = A_I minus A_C, where the pincer wins."""
    return in_independent_region(perimeter, speeds, pair, x) and not in_cooperative_region(
        perimeter, speeds, pair, x
    )


def in_implicit_zone(perimeter: Perimeter, speeds: SpeedModel, pair, x) -> bool:
    """True iff x is defender-winning against both boundary defenders."""
    s_r, s_l = pair
    return not in_intruder_win_1v1(perimeter, speeds, s_r, x) and not in_intruder_win_1v1(
        perimeter, speeds, s_l, x
    )


def breach_target_pincer(perimeter: Perimeter, pair) -> float:
    """Interior-arc midpoint of an ordered pair (the pincer meeting point)."""
    s_r, s_l = perimeter.wrap(pair[0]), perimeter.wrap(pair[1])
    delta = perimeter.arc_ccw(s_r, s_l)
    if delta == 0.0:
        raise ValueError("no interior breach target for a degenerate pair")
    return perimeter.wrap(s_r + 0.5 * delta)
