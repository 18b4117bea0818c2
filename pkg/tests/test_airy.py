"""Airy model: exact coefficients, contour oracle, Borel summation,
lateral sums and the Stokes jump."""

import cmath
import math
from fractions import Fraction as Fr

import pytest

from exactwkb.airy import (airy_alpha, airy_borel_sum, airy_contour,
                           airy_oracle, airy_symbol, lateral_sums,
                           stokes_jump, symbol_borel_sum)
from exactwkb.borel import pade_from_taylor
from exactwkb.errors import PoleOnRay
from exactwkb.series import PuiseuxSeries
from exactwkb.symbols import branch_arg, zpow

L1_POINT = 0.8 * cmath.exp(2j * math.pi / 3)


def test_alpha_exact_values():
    assert airy_alpha(0) == 1
    assert airy_alpha(1) == Fr(-5, 48)
    assert airy_alpha(2) == Fr(385, 4608)


def test_symbol_monomials_and_minor_factorials():
    sym = airy_symbol(6)
    for n, g in enumerate(sym.eps_coeffs):
        if n == 0:
            assert g == PuiseuxSeries({0: 1})
        else:
            assert g == PuiseuxSeries({Fr(-3 * n, 2): airy_alpha(n)})
    assert sym.minor().factorial_check(sym)


def test_branch_positive_real_on_L0():
    assert abs(zpow(2.0, Fr(3, 2)) - 2.0 ** 1.5) < 1e-15
    assert abs(zpow(2.0, Fr(1, 4)) - 2.0 ** 0.25) < 1e-15
    # cut placement: branch_arg covers (-2pi/3, 4pi/3]
    assert branch_arg(cmath.exp(1j * 0.99 * math.pi)) > 0
    assert branch_arg(cmath.exp(1j * 1.3 * math.pi)) > math.pi


@pytest.mark.parametrize("eps", [0.1, 0.05])
def test_contour_matches_independent_oracle(eps):
    r = airy_contour(1.0, eps)
    o = airy_oracle(1.0, eps)
    assert abs(r.value - o) / abs(o) < 1e-10
    assert abs(r.value - o) <= 10 * (r.est_error + 1e-18) + 1e-13 * abs(o)


def test_contour_schwarz_symmetry():
    z = 1.2
    a = airy_contour(z, 0.08 + 0.01j).value
    b = airy_contour(z, 0.08 - 0.01j).value
    assert abs(a - b.conjugate()) / abs(a) < 1e-11


def test_contour_real_on_L0():
    r = airy_contour(1.5, 0.07)
    assert abs(r.value.imag) < 1e-12 * abs(r.value)


def test_contour_all_sectors_vs_oracle():
    for th in (-0.6 * math.pi, -0.2 * math.pi, 0.3 * math.pi, 2 * math.pi / 3,
               0.85 * math.pi, 1.1 * math.pi):
        z = 0.9 * cmath.exp(1j * th)
        r = airy_contour(z, 0.05)
        o = airy_oracle(z, 0.05)
        assert abs(r.value - o) / abs(o) < 1e-9, th


@pytest.mark.parametrize("eps", [0.1, 0.05, 0.02])
def test_borel_sum_vs_contour(eps):
    b = airy_borel_sum(1.0, eps, 24, pade=(12, 12))
    c = airy_contour(1.0, eps)
    assert abs(b.value - c.value) / abs(c.value) < 1e-8


def test_borel_error_decreases_with_eps():
    errs = []
    for eps in (0.2, 0.1, 0.05, 0.02):
        b = airy_borel_sum(1.0, eps, 18)
        o = airy_oracle(1.0, eps)
        errs.append(abs(b.value - o) / abs(o))
    assert all(errs[i + 1] < errs[i] or errs[i + 1] < 1e-14
               for i in range(len(errs) - 1)), errs


def test_borel_degenerate_truncation():
    # one eps-order: value reduces to the bare prefactor
    b = airy_borel_sum(1.0, 0.05, 1, pade=(0, 0))
    sym = airy_symbol(0)
    assert b.value == sym.prefactor(1.0, 0.05)


def test_pade_clamps_to_available_data():
    import numpy as np

    c = np.array([1.0, -1.0, 1.0])      # 1/(1+x) truncated
    ap = pade_from_taylor(c, 5, 5)      # clamped to fit 3 coefficients
    assert abs(complex(ap(0.5)) - 1 / 1.5) < 1e-12


def test_pole_on_ray_raises():
    import numpy as np

    # minor of 1/(1 - xi): pole at xi = +1 on the positive ray
    c = np.ones(12)
    with pytest.raises(PoleOnRay):
        from exactwkb.borel import borel_pade_laplace

        borel_pade_laplace(c, 0.05, pade=(5, 6), theta=0.0)


def test_lateral_sum_above_continues_entire_function_on_L1():
    eps = 0.05
    sym = airy_symbol(39)
    lo, hi = lateral_sums(sym, L1_POINT, eps)
    oracle = airy_oracle(L1_POINT, eps)
    assert abs(hi - oracle) / abs(oracle) < 1e-10
    assert abs(lo - oracle) / abs(oracle) > 1e-10  # below-ray sum differs


def test_stokes_jump_matches_alien_derivative():
    jump, pred = stokes_jump(L1_POINT, 0.05, 40)
    assert abs(jump - pred) / abs(pred) < 1e-4


def test_stokes_jump_off_line_is_null():
    z = 0.8 * cmath.exp(1j * math.pi / 3)
    jump, _ = stokes_jump(z, 0.05, 40)
    scale = abs(symbol_borel_sum(airy_symbol(39), z, 0.05).value)
    assert abs(jump) / scale < 1e-8


def test_stokes_jump_mirror_on_L0():
    jump, pred = stokes_jump(0.8, 0.05, 40, mirror=True)
    assert abs(jump - pred) / abs(pred) < 1e-4


def test_borel_vs_contour_sampled_grid():
    # agreement within est_error + tolerance across a sector sample
    for th in (0.15 * math.pi, 0.4 * math.pi, -0.3 * math.pi):
        z = 1.1 * cmath.exp(1j * th)
        for eps in (0.08, 0.03):
            b = airy_borel_sum(z, eps, 28)
            c = airy_contour(z, eps)
            tol = b.est_error + c.est_error + 1e-10 * abs(c.value)
            assert abs(b.value - c.value) <= tol


def test_verify_quadrature_suite_json_clean():
    import json

    from exactwkb.verification import run_suite

    suite = run_suite("all")
    json.dumps(suite)          # numpy scalars must not leak through
    assert suite["passed"] is True
