"""Singular-PDE kernel: recursion routes, closed forms, bounds, and the
confluent-function quadrature."""

import cmath
import math
import random
from fractions import Fraction as Fr

import numpy as np
import pytest

from exactwkb.airy import airy_contour
from exactwkb.coefficients import GaussianRational
from exactwkb.errors import DomainExit
from exactwkb.contours import ContourSpec
from exactwkb.pde import (BivariateSeries, confluent_eval, convergence_radius,
                          delta_sup_on_disk, empirical_x_radius,
                          iteration_bound, local_decomposition, pde_residual,
                          pde_taylor, picard_deltas,
                          picard_partial_sums_match, psi_eval)
from exactwkb.series import PuiseuxSeries, TaylorSeries

F0 = TaylorSeries({})
H0 = TaylorSeries({})


def rand_taylor(rng, deg, gaussian=False):
    def coeff():
        if gaussian:
            return GaussianRational(Fr(rng.randint(-9, 9), rng.randint(1, 5)),
                                    Fr(rng.randint(-9, 9), rng.randint(1, 5)))
        return Fr(rng.randint(-9, 9), rng.randint(1, 5))

    return TaylorSeries({k: coeff() for k in range(deg + 1)})


def test_zero_data_gives_constant_kernel():
    psi = pde_taylor(F0, H0, 12, 12)
    assert all(a.is_zero() for a in psi.a_list[1:])


def test_exponential_closed_form():
    lam = Fr(2, 3)
    psi = pde_taylor(TaylorSeries({0: lam * lam}), TaylorSeries({0: lam}), 20, 8)
    fact = 1
    for n in range(21):
        if n:
            fact *= n
        assert psi.a_list[n].coeff(0) == lam ** n / Fr(fact)
        assert len(psi.a_list[n].coeffs) <= 1


def test_cosh_family_second_coefficient():
    lam = Fr(1, 2)
    psi = pde_taylor(TaylorSeries({1: lam * lam}), H0, 6, 10)
    assert psi.a_list[1].is_zero()
    assert psi.a_list[2] == PuiseuxSeries({1: lam * lam / 6}, trunc=11)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_route_equivalence_random_rational(seed):
    rng = random.Random(seed)
    F = rand_taylor(rng, 3, gaussian=(seed == 3))
    h = rand_taylor(rng, 2, gaussian=(seed == 3))
    pa = pde_taylor(F, h, 20, 20, route="transform")
    pb = pde_taylor(F, h, 20, 20, route="ode")
    for a, b in zip(pa.a_list, pb.a_list):
        assert (a - b).is_zero()


def test_pde_residual_defining_property_and_probes():
    rng = random.Random(9)
    F = rand_taylor(rng, 3)
    h = rand_taylor(rng, 2)
    psi = pde_taylor(F, h, 10, 14)
    assert pde_residual(psi, F) == 0
    one = BivariateSeries(a_list=(PuiseuxSeries({0: 1}),), Nx=0, Nz=5)
    assert pde_residual(one, F0) == 0
    probe = BivariateSeries(a_list=(PuiseuxSeries({0: 1}),) * 3, Nx=2, Nz=5)
    assert abs(pde_residual(probe, TaylorSeries({0: 1}))) == 1


def test_convergence_radius_formula():
    rep = convergence_radius(1.0, 2.0, 10.0, 0.0, 0.0)
    exact = (3.0 / math.e) * (-1.0 + math.sqrt(1.0 + 1.0 / (9.0 * math.e)))
    assert abs(rep.r_prime - exact) < 1e-14
    assert rep.M == 0.0
    # min clamps at small R
    rep2 = convergence_radius(1.0, 2.0, 0.001, 1.0, 1.0)
    assert rep2.r_prime == 0.001
    assert rep2.M == 1.0 + 0.0005
    with pytest.raises(ValueError):
        convergence_radius(2.0, 1.0, 1.0, 0.0, 0.0)


def test_iteration_bound_values():
    assert iteration_bound(0, 0.5, 0.0, 3.0, 1.0, 1.0, 1.0, 2.0) == 3.0
    assert iteration_bound(3, 0.0, 0.0, 3.0, 1.0, 1.0, 1.0, 2.0) == 0.0
    v = iteration_bound(1, 0.1, 0.0, 2.0, 0.0, 1.0, 1.0, 2.0)
    assert abs(v - 2.0 * math.e * 0.1 * (0.1 + 6.0)) < 1e-14


def test_picard_sums_reproduce_kernel():
    rng = random.Random(11)
    F = rand_taylor(rng, 3)
    h = rand_taylor(rng, 2)
    assert picard_partial_sums_match(F, h, 10, 8, 12)


def test_picard_increments_dominated_by_bound():
    F = TaylorSeries({0: Fr(1, 3), 1: Fr(1, 5)})
    h = TaylorSeries({0: Fr(1, 2), 1: Fr(1, 4)})
    r0, r1, R = 1.0, 2.0, 1.0
    d0 = r1 - r0
    Fn = 1 / 3 + r1 / 5
    hn = 1 / 2 + r1 / 4
    M = hn + R / 2 * Fn
    deltas = picard_deltas(F, h, 8, 20, 30)
    for k, d in enumerate(deltas):
        emp = delta_sup_on_disk(d, 0.02, r0)
        bound = iteration_bound(k, 0.02, 0.0, M, Fn, r0, d0, r1)
        assert emp <= bound * (1.0 + 1e-9), (k, emp, bound)


def test_psi_eval_closed_forms():
    lam = 1
    psi = pde_taylor(TaylorSeries({0: lam}), TaylorSeries({0: lam}), 20, 6)
    assert abs(psi_eval(psi, 0.7, 0.1) - math.exp(0.1)) < 1e-12
    psi2 = pde_taylor(TaylorSeries({1: 1}), H0, 24, 24)
    ref = cmath.cosh(0.1 * cmath.sqrt(3 * 0.2 + 0.1) / 3.0)
    assert abs(psi_eval(psi2, 0.2, 0.1) - ref) < 1e-10
    assert psi_eval(psi2, 0.3, 0.0) == 1.0


def test_psi_eval_divergence_warning():
    # kernel for F with a finite radius: geometric-type F
    F = TaylorSeries({k: 1 for k in range(12)})
    psi = pde_taylor(F, H0, 24, 24)
    r = empirical_x_radius(psi, 0.5)
    msgs = []
    psi_eval(psi, 0.5, 3.0 * r, warn=msgs.append)
    assert msgs, "expected a divergence warning far outside the radius"


def test_radius_honesty_inside_r_prime():
    rng = random.Random(23)
    for _ in range(3):
        F = rand_taylor(rng, 2)
        h = rand_taylor(rng, 2)
        psi = pde_taylor(F, h, 30, 12)
        rep = convergence_radius(0.3, 0.6, 10.0, 1.0, 1.0)
        for z_abs in (0.1, 0.3):
            r_emp = empirical_x_radius(psi, z_abs)
            assert r_emp > rep.r_prime


def test_confluent_trivial_kernel_equals_airy():
    z, eps = 0.9 * cmath.exp(1j * math.pi / 3), 0.05
    c = confluent_eval(F0, H0, z, eps)
    a = airy_contour(z, eps)
    assert abs(c.value - a.value) <= 1e-12 * abs(a.value)


def test_confluent_entire_kernel_vs_direct_quadrature():
    # F = lam^2, h = lam: Psi = exp(lam (z - zhat^2)) exactly
    lam = 0.3
    F = TaylorSeries({0: Fr(9, 100)})
    h = TaylorSeries({0: Fr(3, 10)})
    z, eps = 1.0, 0.08
    got = confluent_eval(F, h, z, eps, Nx=40, Nz=10)

    from exactwkb.airy import airy_raw_contour

    direct = airy_raw_contour(z, eps, g=lambda w: np.exp(lam * (z - w * w)))
    want = direct.value / (1j * cmath.sqrt(math.pi * eps))
    assert abs(got.value - want) / abs(want) < 1e-10


def test_confluent_decay_rate_with_eps():
    z = 0.9 * cmath.exp(0.15j * math.pi)
    v1 = confluent_eval(F0, H0, z, 0.06).value
    v2 = confluent_eval(F0, H0, z, 0.03).value
    from exactwkb.symbols import action

    pred = -action(z).real * (1 / 0.03 - 1 / 0.06)
    got = math.log(abs(v2 / v1))
    assert abs(got - pred) / abs(pred) < 0.02


def test_confluent_explicit_path_domain_exit():
    F = TaylorSeries({k: 1 for k in range(12)})   # radius-limited kernel
    bad = ContourSpec(path=(0.0 + 0j, 5.0 + 0j))
    with pytest.raises(DomainExit):
        confluent_eval(F, H0, 0.4, 0.05, spec=bad, Nx=24, Nz=24)


def test_local_decomposition_S1_airy():
    z = 0.9 * cmath.exp(1j * math.pi / 3)
    rep = local_decomposition(F0, H0, z, [0.02, 0.05, 0.1], "S1", N=30)
    for row in rep["rows"]:
        assert row["rel_err"] < 1e-6


def test_local_decomposition_S2_two_term():
    z = 0.9 * cmath.exp(0.9j * math.pi)
    rep = local_decomposition(F0, H0, z, [0.05], "S2", N=30)
    row = rep["rows"][0]
    assert row["one_term_rel_err"] > 10.0 * row["rel_err"]


def test_local_decomposition_asymptotic_consistency_small_F():
    Fc = TaylorSeries({0: Fr(1, 10)})
    z = 0.9 * cmath.exp(1j * math.pi / 3)
    grid = [0.02, 0.04, 0.08]
    rep = local_decomposition(Fc, H0, z, grid, "S1", N=24)
    errs = [row["rel_err"] for row in rep["rows"]]
    slope = np.polyfit(np.log(grid), np.log(errs), 1)[0]
    assert slope > 0.9, (errs, slope)
