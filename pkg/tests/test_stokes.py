"""Stokes-line geometry: canonical rays, sector classification, tracing."""

import cmath
import math
from fractions import Fraction as Fr

import pytest

from exactwkb.errors import TraceEscape
from exactwkb.series import TaylorSeries
from exactwkb.stokes import (canonical_stokes_lines, classify_sector,
                             node_condition_residuals,
                             potential_stokes_curves)

V_FIG5 = TaylorSeries({1: 1, 2: Fr(1, 2)})


def _canon(th):
    return round(th % (2 * math.pi), 10) % round(2 * math.pi, 10)


def ray_args(diagram):
    return sorted(_canon(cmath.phase(line[-1])) for line in diagram.lines)


def test_canonical_rays_alpha_zero():
    d = canonical_stokes_lines(0.0)
    assert ray_args(d) == sorted(_canon(x) for x in
                                 (0.0, 2 * math.pi / 3, -2 * math.pi / 3))


def test_canonical_rays_rotate_with_alpha():
    d = canonical_stokes_lines(math.pi / 2)
    expect = sorted(_canon((math.pi / 2 + k * math.pi) * 2 / 3)
                    for k in (0, 1, -1))
    assert ray_args(d) == expect


def test_alpha_periodicity_and_half_turn():
    base = set(ray_args(canonical_stokes_lines(0.0)))
    assert set(ray_args(canonical_stokes_lines(3 * math.pi))) == base
    # alpha -> alpha + pi maps the ray set to itself (roles swap)
    assert set(ray_args(canonical_stokes_lines(math.pi))) == base


def test_classification():
    assert classify_sector(cmath.exp(1j * math.pi / 3)) == "S1"
    assert classify_sector(cmath.exp(2j * math.pi / 3)) == "ON_LINE:L1"
    assert classify_sector(cmath.exp(1j * math.pi)) == "S2"
    assert classify_sector(cmath.exp(-1j * math.pi / 3)) == "S-1"
    with pytest.raises(ValueError):
        classify_sector(0j)


def test_classification_locally_constant():
    for th in (0.3, 1.2, -0.9, 2.8):
        z = cmath.exp(1j * th)
        if classify_sector(z).startswith("ON_LINE"):
            continue
        up = classify_sector(z * cmath.exp(1e-9j))
        dn = classify_sector(z * cmath.exp(-1e-9j))
        assert up == dn == classify_sector(z)


def test_tracer_reduces_to_canonical_rays():
    d = potential_stokes_curves(TaylorSeries({1: 1}), 0.0, step=0.02, extent=1.0)
    for line in d.lines:
        th = cmath.phase(line[-1])
        for q in line[2:]:
            dev = abs((cmath.phase(q) - th + math.pi) % (2 * math.pi) - math.pi)
            assert dev < 1e-9


def test_fig5_potential_node_condition():
    d = potential_stokes_curves(V_FIG5, 0.0, step=0.01, extent=1.5,
                                region_radius=5.0)
    assert len(d.lines) == 3
    assert max(node_condition_residuals(V_FIG5, d)) < 1e-10


def test_fig5_topology_real_ray_and_connection():
    # alpha = 0: one line runs out along the positive real axis
    d = potential_stokes_curves(V_FIG5, 0.0, step=0.01, extent=2.0,
                                region_radius=8.0)
    ends = [line[-1] for line in d.lines]
    real_line = min(ends, key=lambda q: abs(q.imag))
    assert real_line.real > 1.9 and abs(real_line.imag) < 1e-9
    # the connection to the second turning point q = -2 shows up in the
    # imaginary direction: V < 0 on (-2, 0) makes the action imaginary
    d2 = potential_stokes_curves(V_FIG5, math.pi / 2, step=0.005, extent=6.0,
                                 region_radius=20.0)
    ends2 = [line[-1] for line in d2.lines]
    assert min(abs(q + 2.0) for q in ends2) < 5e-3
    assert max(node_condition_residuals(V_FIG5, d2)) < 1e-10


def test_trace_escape():
    with pytest.raises(TraceEscape):
        potential_stokes_curves(V_FIG5, 0.0, step=0.01, extent=4.0,
                                region_radius=0.5)
