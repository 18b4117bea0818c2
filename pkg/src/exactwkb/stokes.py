"""Stokes lines and sectors for the canonical model and for analytic
potentials with a simple turning point at the origin.

A Stokes line for direction alpha is the locus Im(e^{-i alpha}
int_0^q sqrt(V)) = 0; for the canonical V = q these are the three exact
rays arg q in {2 alpha/3, 2 alpha/3 +- 2 pi/3}.

Sector convention (printed by the CLI): S1 lies between L0 and L1
counterclockwise, S2 between L1 and L-1, S-1 between L-1 and L0, for
rays L0: arg = 2 alpha/3, L1: +2 pi/3, L-1: -2 pi/3.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

from .contours import _gl
from .errors import TraceEscape
from .series import PuiseuxSeries

TWO_PI_3 = 2.0 * math.pi / 3.0

SECTOR_CONVENTION = ("S1: (L0, L1) counterclockwise; S2: (L1, L-1); "
                     "S-1: (L-1, L0)")


@dataclass(frozen=True)
class StokesDiagram:
    direction_alpha: float
    turning_points: tuple
    lines: tuple          # tuple of polylines (tuples of complex nodes)
    sector_labels: dict = field(default_factory=dict)


def canonical_stokes_lines(alpha: float, extent: float = 3.0,
                           n_nodes: int = 40) -> StokesDiagram:
    """The three exact rays of the canonical simple turning point."""
    lines = []
    for k in (0, 1, -1):
        th = 2.0 * (alpha + k * math.pi) / 3.0
        ray = tuple((extent * j / (n_nodes - 1)) * cmath.exp(1j * th)
                    for j in range(n_nodes))
        lines.append(ray)
    labels = {"S1": "between L0 and L1", "S2": "between L1 and L-1",
              "S-1": "between L-1 and L0"}
    return StokesDiagram(direction_alpha=alpha, turning_points=(0j,),
                         lines=tuple(lines), sector_labels=labels)


def classify_sector(z: complex, alpha: float = 0.0,
                    tol: float = 1e-9) -> str:
    """Sector id of z for the canonical diagram, or ON_LINE within an
    angular tolerance of a Stokes ray."""
    if z == 0:
        raise ValueError("z = 0 is the turning point")
    th = cmath.phase(z * cmath.exp(-2j * alpha / 3.0))
    for k, name in ((0.0, "L0"), (TWO_PI_3, "L1"), (-TWO_PI_3, "L-1")):
        d = abs((th - k + math.pi) % (2.0 * math.pi) - math.pi)
        if d < tol:
            return "ON_LINE:" + name
    if 0.0 < th < TWO_PI_3:
        return "S1"
    if -TWO_PI_3 < th < 0.0:
        return "S-1"
    return "S2"


def _callable_potential(V) -> Callable[[complex], complex]:
    if callable(V):
        return V
    if isinstance(V, PuiseuxSeries):
        items = sorted((int(e), complex(c) if not hasattr(c, "denominator")
                        else float(c)) for e, c in V.to_float().coeffs.items())

        def f(q):
            tot = 0j
            for e, c in items:
                tot += c * q ** e
            return tot

        return f
    raise TypeError("V must be callable or a Taylor series")


def potential_stokes_curves(V, alpha: float = 0.0,
                            step: float = 0.01,
                            extent: float = 2.0,
                            region_radius: float | None = None,
                            max_nodes: int = 2000) -> StokesDiagram:
    """Trace the three Stokes curves of a simple turning point at 0.

    Predictor-corrector on the field dq/dt = e^{i alpha}/sqrt(V(q)) with
    the branch of sqrt(V) continued along the curve, plus a Newton
    correction restoring Im(e^{-i alpha} w) = 0 for the running action
    w = int_0^q sqrt(V).  Each accepted node keeps the defining residual
    below trace tolerance; leaving the declared analyticity region
    raises TraceEscape.
    """
    Vf = _callable_potential(V)
    region = region_radius if region_radius is not None else extent * 1.5
    lines = []
    for k in (0, 1, -1):
        th = 2.0 * (alpha + k * math.pi) / 3.0
        nodes = _trace_one(Vf, alpha, th, step, extent, region, max_nodes)
        lines.append(tuple(nodes))
    labels = {"convention": SECTOR_CONVENTION}
    return StokesDiagram(direction_alpha=alpha, turning_points=(0j,),
                         lines=tuple(lines), sector_labels=labels)


def _trace_one(Vf, alpha, theta0, step, extent, region, max_nodes):
    # seed just off the turning point along the exact local ray; the
    # local model V ~ q gives w ~ (2/3) q^{3/2}
    q = 0.25 * step * cmath.exp(1j * theta0)
    w, sq = _action_from_origin(Vf, q)
    nodes = [0j, q]
    rot = cmath.exp(1j * alpha)
    outward = cmath.exp(1j * theta0)
    for _ in range(max_nodes):
        # RK4 on unit-speed dq/ds = +- e^{i alpha} / sqrt(V), the sign
        # chosen to march away from the turning point; the branch of
        # sqrt(V) is continued from the previous sample
        def f(qq, sq_prev, ref_dir):
            s = cmath.sqrt(Vf(qq))
            if abs(s - sq_prev) > abs(s + sq_prev):
                s = -s
            d = rot / s
            d /= abs(d)
            if (d.conjugate() * ref_dir).real < 0:
                d = -d
            return d, s

        k1, s1 = f(q, sq, outward)
        k2, s2 = f(q + 0.5 * step * k1, s1, k1)
        k3, s3 = f(q + 0.5 * step * k2, s2, k2)
        k4, s4 = f(q + step * k3, s3, k3)
        q_new = q + (step / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        outward = (q_new - q) / abs(q_new - q)
        # action increment by 8-point Gauss-Legendre, branch-continued
        dw, sq_new = _action_increment(Vf, q, q_new, sq)
        w_new = w + dw
        # Newton correction restoring Im(e^{-i alpha} w) = 0
        for _ in range(2):
            resid = (w_new * cmath.exp(-1j * alpha)).imag
            if abs(resid) < 1e-15:
                break
            dq = -1j * resid * cmath.exp(1j * alpha) / sq_new
            dw2, sq_new2 = _action_increment(Vf, q_new, q_new + dq, sq_new)
            q_new, w_new, sq_new = q_new + dq, w_new + dw2, sq_new2
        if abs(q_new) > region:
            raise TraceEscape(
                f"trace left the analyticity region |q| <= {region}")
        q, w, sq = q_new, w_new, sq_new
        nodes.append(q)
        if abs(q) >= extent:
            break
        if abs(q) > 3.0 * step and abs(Vf(q)) < 0.5 * step:
            break  # within a step of another zero of V
    return nodes


def _action_increment(Vf, a, b, sq_prev):
    x, wts = _gl(8)
    mid, half = (a + b) / 2.0, (b - a) / 2.0
    total = 0j
    s_run = sq_prev
    for xi, wi in zip(x, wts):
        qq = mid + half * xi
        s = cmath.sqrt(Vf(qq))
        if abs(s - s_run) > abs(s + s_run):
            s = -s
        s_run = s
        total += wi * s
    s_end = cmath.sqrt(Vf(b))
    if abs(s_end - s_run) > abs(s_end + s_run):
        s_end = -s_end
    return total * half, s_end


def action_along_polyline(Vf_or_V, nodes, n_gl: int = 24) -> complex:
    """int_0^q sqrt(V) along a polyline from the turning point, with the
    branch continued segmentwise.  Independent of the tracer's running
    increments (used to re-verify traced nodes)."""
    Vf = _callable_potential(Vf_or_V) if not callable(Vf_or_V) else Vf_or_V
    x, wts = _gl(n_gl)
    total = 0j
    s_run = None
    for a, b in zip(nodes[:-1], nodes[1:]):
        if a == 0:
            dw, s_run = _action_from_origin(Vf, b, n_gl)
            total += dw
            continue
        # panelize where the sqrt branch point at 0 is close relative to
        # the chord length
        npan = min(32, max(1, int(math.ceil(4.0 * abs(b - a) / abs(a)))))
        for k in range(npan):
            aa = a + (b - a) * k / npan
            bb = a + (b - a) * (k + 1) / npan
            mid, half = (aa + bb) / 2.0, (bb - aa) / 2.0
            for xi, wi in zip(x, wts):
                qq = mid + half * xi
                s = cmath.sqrt(Vf(qq))
                if s_run is None:
                    ref = cmath.sqrt(qq)
                    if abs(s - ref) > abs(s + ref):
                        s = -s
                elif abs(s - s_run) > abs(s + s_run):
                    s = -s
                s_run = s
                total += wi * s * half
    return total


def _action_from_origin(Vf, q, n_gl: int = 24):
    """int_0^q sqrt(V) on the straight segment, with the sqrt(q')
    endpoint singularity removed by q' = q u^2 (integrand 2 q u
    sqrt(V(q u^2)) is analytic in u)."""
    x, wts = _gl(n_gl)
    root_q = cmath.sqrt(q)
    total = 0j
    s_run = None
    for xi, wi in zip(x, wts):
        u = 0.5 * (xi + 1.0)
        s = cmath.sqrt(Vf(q * u * u))
        ref = u * root_q if s_run is None else s_run
        if abs(s - ref) > abs(s + ref):
            s = -s
        s_run = s
        total += wi * 2.0 * q * u * s * 0.5
    return total, s_run


def node_condition_residuals(V, diagram: StokesDiagram,
                             sample_every: int = 5) -> list[float]:
    """|Im(e^{-i alpha} int_0^q sqrt(V))| at sampled trace nodes,
    re-integrated independently along the traced polyline."""
    Vf = _callable_potential(V)
    alpha = diagram.direction_alpha
    out = []
    for line in diagram.lines:
        for j in range(2, len(line), sample_every):
            w = action_along_polyline(Vf, line[:j + 1])
            out.append(abs((w * cmath.exp(-1j * alpha)).imag))
    return out
