"""Oriented parametric surfaces and quaternionic surface quadrature.

A surface is a list of charts, each mapping a parameter rectangle into
space with analytic partials.  Quadrature places a Gauss-Legendre tensor
grid on every chart; the oriented element is

    dsigma = (n1 + n2 i + n3 j) dS

with n the outward unit normal.  Integrals of the two-sided form
g dsigma f are the workhorse for Cauchy-type theorems and for force and
moment evaluation.

Node evaluation is deterministic by construction: nodes are generated
chart-major in a fixed order, per-node values land in arrays indexed by
node, and reductions use numpy's pairwise summation.  An optional thread
pool only parallelizes the per-node evaluations; it cannot change the
result, bit for bit.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from .quaternion import Quaternion, ReducedPoint

__all__ = [
    "gauss_legendre",
    "Chart",
    "ChartNodes",
    "ParametricSurface",
    "RegularBody",
    "VolumeNodes",
    "sphere_body",
    "box_body",
    "cylinder_body",
    "integrate_g_dsigma_f",
    "integrate_scalar_dsigma",
    "integrate_scalar",
    "integrate_vector_area",
    "integrate_moment_kernel",
]


@lru_cache(maxsize=64)
def gauss_legendre(n: int):
    """Gauss-Legendre nodes and weights on [-1, 1], cached and read-only."""
    x, w = np.polynomial.legendre.leggauss(int(n))
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _scaled_gauss(n: int, a: float, b: float):
    x, w = gauss_legendre(n)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return mid + half * x, half * w


class Chart:
    """One oriented parametric patch.

    ``position`` and the two analytic ``partial`` callables take (s, t)
    within ``s_range`` x ``t_range``.  The oriented normal is
    ``orientation * (r_s x r_t)`` normalized; orientation is +1 or -1.
    ``node_counts`` maps a quadrature order to per-axis node counts.
    ``meta`` carries structural tags (chart role, cap pairing) consumed
    by integration gates downstream.
    """

    def __init__(self, position, partial_s, partial_t,
                 s_range: tuple[float, float], t_range: tuple[float, float],
                 orientation: int = 1, name: str = "",
                 node_counts: Optional[Callable[[int], tuple[int, int]]] = None,
                 meta: Optional[dict] = None):
        if orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        self.position = position
        self.partial_s = partial_s
        self.partial_t = partial_t
        self.s_range = (float(s_range[0]), float(s_range[1]))
        self.t_range = (float(t_range[0]), float(t_range[1]))
        self.orientation = orientation
        self.name = name
        self.node_counts = node_counts or (lambda order: (order, order))
        self.meta = dict(meta or {})

    def nodes(self, order: int) -> "ChartNodes":
        ns, nt = self.node_counts(order)
        s_nodes, s_w = _scaled_gauss(ns, *self.s_range)
        t_nodes, t_w = _scaled_gauss(nt, *self.t_range)
        points: list[ReducedPoint] = []
        normals: list[ReducedPoint] = []
        weights = np.empty(ns * nt)
        params = np.empty((ns * nt, 2))
        idx = 0
        for a, ws in zip(s_nodes, s_w):
            for b, wt in zip(t_nodes, t_w):
                p = self.position(a, b)
                rs = self.partial_s(a, b)
                rt = self.partial_t(a, b)
                cr = rs.cross(rt)
                area = cr.norm()
                if area <= 0.0:
                    raise ValueError(
                        f"degenerate surface element on chart "
                        f"{self.name or '<anonymous>'} at ({a}, {b})")
                n = cr / area
                if self.orientation < 0:
                    n = -n
                points.append(p)
                normals.append(n)
                weights[idx] = ws * wt * area
                params[idx, 0] = a
                params[idx, 1] = b
                idx += 1
        weights.setflags(write=False)
        params.setflags(write=False)
        return ChartNodes(self, points, normals, weights, params)


class ChartNodes(NamedTuple):
    """Quadrature data for one chart: points, unit normals, dS weights."""

    chart: Chart
    points: list[ReducedPoint]
    normals: list[ReducedPoint]
    weights: np.ndarray
    params: np.ndarray


class ParametricSurface:
    """An oriented surface assembled from charts, with cached quadrature."""

    def __init__(self, charts: Sequence[Chart], name: str = ""):
        self.charts = list(charts)
        if not self.charts:
            raise ValueError("a surface needs at least one chart")
        self.name = name
        self._node_cache: dict[int, tuple[ChartNodes, ...]] = {}

    def quadrature(self, order: int) -> tuple[ChartNodes, ...]:
        order = int(order)
        if order < 2:
            raise ValueError("quadrature order must be at least 2")
        if order not in self._node_cache:
            self._node_cache[order] = tuple(c.nodes(order) for c in self.charts)
        return self._node_cache[order]

    def node_count(self, order: int) -> int:
        return sum(len(cn.points) for cn in self.quadrature(order))

    def area(self, order: int) -> float:
        return float(sum(np.sum(cn.weights) for cn in self.quadrature(order)))


class VolumeNodes(NamedTuple):
    points: list[ReducedPoint]
    weights: np.ndarray


class RegularBody:
    """A closed surface bounding a solid, with optional volume quadrature."""

    def __init__(self, surface: ParametricSurface,
                 interior_point: ReducedPoint,
                 volume_nodes: Optional[Callable[[int], VolumeNodes]] = None,
                 name: str = ""):
        self.surface = surface
        self.interior_point = interior_point
        self._volume_nodes = volume_nodes
        self.name = name or surface.name
        self._volume_cache: dict[int, VolumeNodes] = {}

    @property
    def has_volume_quadrature(self) -> bool:
        return self._volume_nodes is not None

    def volume_nodes(self, order: int) -> VolumeNodes:
        if self._volume_nodes is None:
            raise ValueError(f"body {self.name!r} has no volume quadrature")
        order = int(order)
        if order not in self._volume_cache:
            self._volume_cache[order] = self._volume_nodes(order)
        return self._volume_cache[order]

    def volume(self, order: int) -> float:
        vn = self.volume_nodes(order)
        return float(np.sum(vn.weights))


# ----------------------------------------------------------------------
# builders
# ----------------------------------------------------------------------

def sphere_body(radius: float,
                center: ReducedPoint = ReducedPoint(0.0, 0.0, 0.0),
                name: str = "") -> RegularBody:
    """Sphere, one chart in (u, phi) with u = cos(polar angle).

    In these parameters the area element is exactly R^2 du dphi, so the
    Gauss grid in u integrates polynomials in the polar cosine exactly.
    The raw cross product r_u x r_phi points inward; orientation -1
    flips it outward.
    """
    r0 = float(radius)
    if r0 <= 0.0:
        raise ValueError("sphere radius must be positive")
    cx, cy, cz = center.x, center.y, center.z

    def pos(u, phi):
        s = math.sqrt(max(0.0, 1.0 - u * u))
        return ReducedPoint(cx + r0 * s * math.cos(phi),
                            cy + r0 * s * math.sin(phi),
                            cz + r0 * u)

    def dpos_du(u, phi):
        s = math.sqrt(max(0.0, 1.0 - u * u))
        return ReducedPoint(-r0 * u * math.cos(phi) / s,
                            -r0 * u * math.sin(phi) / s,
                            r0)

    def dpos_dphi(u, phi):
        s = math.sqrt(max(0.0, 1.0 - u * u))
        return ReducedPoint(-r0 * s * math.sin(phi),
                            r0 * s * math.cos(phi), 0.0)

    chart = Chart(pos, dpos_du, dpos_dphi, (-1.0, 1.0), (0.0, 2.0 * math.pi),
                  orientation=-1, name="sphere",
                  node_counts=lambda order: (order, 2 * order),
                  meta={"role": "sphere"})
    surface = ParametricSurface([chart], name=name or f"sphere(R={r0})")

    def volume_nodes(order: int) -> VolumeNodes:
        rr, wr = _scaled_gauss(order, 0.0, r0)
        uu, wu = gauss_legendre(order)
        pp, wp = _scaled_gauss(2 * order, 0.0, 2.0 * math.pi)
        pts: list[ReducedPoint] = []
        wts = np.empty(order * order * 2 * order)
        idx = 0
        for r, w1 in zip(rr, wr):
            for u, w2 in zip(uu, wu):
                s = math.sqrt(max(0.0, 1.0 - u * u))
                for phi, w3 in zip(pp, wp):
                    pts.append(ReducedPoint(cx + r * s * math.cos(phi),
                                            cy + r * s * math.sin(phi),
                                            cz + r * u))
                    wts[idx] = w1 * w2 * w3 * r * r
                    idx += 1
        wts.setflags(write=False)
        return VolumeNodes(pts, wts)

    return RegularBody(surface, center, volume_nodes, name=surface.name)


def box_body(x_range: tuple[float, float], y_range: tuple[float, float],
             z_range: tuple[float, float], name: str = "") -> RegularBody:
    """Axis-aligned box with six face charts, normals outward."""
    x0, x1 = map(float, x_range)
    y0, y1 = map(float, y_range)
    z0, z1 = map(float, z_range)
    if not (x0 < x1 and y0 < y1 and z0 < z1):
        raise ValueError("box ranges must be increasing")

    def const(v):
        return lambda s, t: v

    ex = ReducedPoint(1.0, 0.0, 0.0)
    ey = ReducedPoint(0.0, 1.0, 0.0)
    ez = ReducedPoint(0.0, 0.0, 1.0)

    charts = [
        # r_s x r_t for (y, z) parameters is +x; flip on the low face.
        Chart(lambda s, t: ReducedPoint(x1, s, t), const(ey), const(ez),
              (y0, y1), (z0, z1), orientation=1, name="face+x",
              meta={"role": "box_face"}),
        Chart(lambda s, t: ReducedPoint(x0, s, t), const(ey), const(ez),
              (y0, y1), (z0, z1), orientation=-1, name="face-x",
              meta={"role": "box_face"}),
        # (x, z) parameters give r_s x r_t = -y; flip on the high face.
        Chart(lambda s, t: ReducedPoint(s, y1, t), const(ex), const(ez),
              (x0, x1), (z0, z1), orientation=-1, name="face+y",
              meta={"role": "box_face"}),
        Chart(lambda s, t: ReducedPoint(s, y0, t), const(ex), const(ez),
              (x0, x1), (z0, z1), orientation=1, name="face-y",
              meta={"role": "box_face"}),
        # (x, y) parameters give r_s x r_t = +z; flip on the low face.
        Chart(lambda s, t: ReducedPoint(s, t, z1), const(ex), const(ey),
              (x0, x1), (y0, y1), orientation=1, name="face+z",
              meta={"role": "box_face"}),
        Chart(lambda s, t: ReducedPoint(s, t, z0), const(ex), const(ey),
              (x0, x1), (y0, y1), orientation=-1, name="face-z",
              meta={"role": "box_face"}),
    ]
    surface = ParametricSurface(charts, name=name or "box")
    mid = ReducedPoint(0.5 * (x0 + x1), 0.5 * (y0 + y1), 0.5 * (z0 + z1))

    def volume_nodes(order: int) -> VolumeNodes:
        xs, wx = _scaled_gauss(order, x0, x1)
        ys, wy = _scaled_gauss(order, y0, y1)
        zs, wz = _scaled_gauss(order, z0, z1)
        pts: list[ReducedPoint] = []
        wts = np.empty(order ** 3)
        idx = 0
        for x, w1 in zip(xs, wx):
            for y, w2 in zip(ys, wy):
                for z, w3 in zip(zs, wz):
                    pts.append(ReducedPoint(x, y, z))
                    wts[idx] = w1 * w2 * w3
                    idx += 1
        wts.setflags(write=False)
        return VolumeNodes(pts, wts)

    return RegularBody(surface, mid, volume_nodes, name=surface.name)


def cylinder_body(radius: float, z_min: float, z_max: float,
                  center2d: tuple[float, float] = (0.0, 0.0),
                  name: str = "") -> RegularBody:
    """Circular cylinder with flat caps.

    The side chart runs (angle, height) with normal (y', -x', 0)/R, which
    is the outward radial direction.  Each cap is ruled from the axis
    point outward; top and bottom caps share the same parameter nodes and
    differ only in orientation, so cap contributions of any z-independent
    integrand cancel bitwise.
    """
    r0 = float(radius)
    z0, z1 = float(z_min), float(z_max)
    if r0 <= 0.0 or not z0 < z1:
        raise ValueError("cylinder needs positive radius and z_min < z_max")
    cx, cy = map(float, center2d)

    def side_pos(s, t):
        return ReducedPoint(cx + r0 * math.cos(s), cy + r0 * math.sin(s), t)

    def side_ds(s, t):
        return ReducedPoint(-r0 * math.sin(s), r0 * math.cos(s), 0.0)

    side = Chart(side_pos, side_ds,
                 lambda s, t: ReducedPoint(0.0, 0.0, 1.0),
                 (0.0, 2.0 * math.pi), (z0, z1), orientation=1,
                 name="cylinder_side",
                 node_counts=lambda order: (2 * order, order),
                 meta={"role": "cylinder_side"})

    def cap_pos(z_cap):
        return lambda u, s: ReducedPoint(cx + u * r0 * math.cos(s),
                                         cy + u * r0 * math.sin(s), z_cap)

    def cap_du(u, s):
        return ReducedPoint(r0 * math.cos(s), r0 * math.sin(s), 0.0)

    def cap_ds(u, s):
        return ReducedPoint(-u * r0 * math.sin(s), u * r0 * math.cos(s), 0.0)

    caps_meta = {"role": "cap", "pair_id": "cylinder_caps"}
    top = Chart(cap_pos(z1), cap_du, cap_ds, (0.0, 1.0), (0.0, 2.0 * math.pi),
                orientation=1, name="cap_top",
                node_counts=lambda order: (order, 2 * order),
                meta={**caps_meta, "cap_side": "top"})
    bottom = Chart(cap_pos(z0), cap_du, cap_ds, (0.0, 1.0),
                   (0.0, 2.0 * math.pi), orientation=-1, name="cap_bottom",
                   node_counts=lambda order: (order, 2 * order),
                   meta={**caps_meta, "cap_side": "bottom"})

    surface = ParametricSurface([side, top, bottom],
                                name=name or f"cylinder(R={r0})")
    axis_mid = ReducedPoint(cx, cy, 0.5 * (z0 + z1))

    def volume_nodes(order: int) -> VolumeNodes:
        rr, wr = _scaled_gauss(order, 0.0, r0)
        ss, w_s = _scaled_gauss(2 * order, 0.0, 2.0 * math.pi)
        zz, wz = _scaled_gauss(order, z0, z1)
        pts: list[ReducedPoint] = []
        wts = np.empty(order * 2 * order * order)
        idx = 0
        for r, w1 in zip(rr, wr):
            for s, w2 in zip(ss, w_s):
                for z, w3 in zip(zz, wz):
                    pts.append(ReducedPoint(cx + r * math.cos(s),
                                            cy + r * math.sin(s), z))
                    wts[idx] = w1 * w2 * w3 * r
                    idx += 1
        wts.setflags(write=False)
        return VolumeNodes(pts, wts)

    return RegularBody(surface, axis_mid, volume_nodes, name=surface.name)


# ----------------------------------------------------------------------
# integration
# ----------------------------------------------------------------------

def evaluate_nodes(fn, points: Sequence[ReducedPoint],
                   workers: Optional[int] = None) -> list:
    """Apply fn to every point, preserving order; threads optional."""
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(fn, points))
    return [fn(p) for p in points]


def _surface_of(obj) -> ParametricSurface:
    if isinstance(obj, RegularBody):
        return obj.surface
    return obj


def _accumulate_quaternion(surface, per_node, order, workers) -> Quaternion:
    """Sum per_node(point, normal) * weight chart by chart, pairwise."""
    total = np.zeros(4)
    for cn in _surface_of(surface).quadrature(order):
        pairs = list(zip(cn.points, cn.normals))
        vals = evaluate_nodes(lambda pn: per_node(*pn), pairs, workers)
        arr = np.array([v.as_tuple() for v in vals]) * cn.weights[:, None]
        total = total + np.sum(arr, axis=0)
    return Quaternion(*total)


def integrate_g_dsigma_f(surface, g, f, order: int,
                         workers: Optional[int] = None) -> Quaternion:
    """The two-sided surface integral of g dsigma f.

    Either side may be None (treated as the constant 1).  g and f are
    callables from points to quaternions; QuaternionField instances
    qualify.
    """
    def per_node(p: ReducedPoint, n: ReducedPoint) -> Quaternion:
        nq = n.to_quaternion()
        left = g(p) * nq if g is not None else nq
        return left * f(p) if f is not None else left

    return _accumulate_quaternion(surface, per_node, order, workers)


def integrate_scalar_dsigma(surface, h, order: int,
                            workers: Optional[int] = None) -> Quaternion:
    """Integral of a scalar weight against the quaternion element dsigma."""
    def per_node(p: ReducedPoint, n: ReducedPoint) -> Quaternion:
        return n.to_quaternion() * float(h(p))

    return _accumulate_quaternion(surface, per_node, order, workers)


def integrate_scalar(surface, h, order: int,
                     workers: Optional[int] = None) -> float:
    """Plain scalar surface integral of h dS."""
    total = 0.0
    for cn in _surface_of(surface).quadrature(order):
        vals = evaluate_nodes(lambda p: float(h(p)), cn.points, workers)
        total += float(np.sum(np.array(vals) * cn.weights))
    return total


def integrate_vector_area(surface, order: int,
                          workers: Optional[int] = None) -> ReducedPoint:
    """The vector area: integral of the unit normal dS; zero when closed."""
    q = integrate_scalar_dsigma(surface, lambda p: 1.0, order, workers)
    return ReducedPoint(q.q0, q.q1, q.q2)


def integrate_moment_kernel(surface, h, about: ReducedPoint, order: int,
                            workers: Optional[int] = None) -> ReducedPoint:
    """Integral of h(x) (x - about) x n dS, the moment-arm weighted normal."""
    total = np.zeros(3)
    for cn in _surface_of(surface).quadrature(order):
        pairs = list(zip(cn.points, cn.normals))

        def per_node(pn):
            p, n = pn
            arm = p - about
            return (float(h(p)) * arm.cross(n)).as_tuple()

        vals = evaluate_nodes(per_node, pairs, workers)
        arr = np.array(vals) * cn.weights[:, None]
        total = total + np.sum(arr, axis=0)
    return ReducedPoint(*total)
