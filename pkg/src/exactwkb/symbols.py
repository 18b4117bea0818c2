"""Formal WKB symbols for the canonical simple-turning-point model.

A symbol is exp(-sigma*(2/3) z^{3/2}/eps) * z^{-1/4} * sum_n g_n(z) eps^n
with the quarter-power prefactor kept factored so that the g_n live on
the half-integer exponent lattice.

Branch convention (used by every sector-dependent computation): the
determinations of z^{3/2} and z^{1/4} are fixed to be positive real on
the Stokes line L0 (z real > 0), with the cut placed along
arg z = 4*pi/3 == -2*pi/3, i.e. arguments are reduced to the interval
(-2*pi/3, 4*pi/3].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .series import EpsSeries

_TWO_THIRDS_PI = 2.0 * math.pi / 3.0


def branch_arg(z: complex) -> float:
    """Argument of z reduced to the cut convention (-2*pi/3, 4*pi/3]."""
    th = cmath.phase(z)
    if th <= -_TWO_THIRDS_PI:
        th += 2.0 * math.pi
    return th


def zpow(z: complex, e) -> complex:
    """z**e on the branch that is positive real along L0."""
    e = float(e)
    if z == 0:
        return 0j if e > 0 else complex("inf")
    r = abs(z)
    th = branch_arg(z)
    return cmath.exp(complex(math.log(r) * e, th * e))


def action(z: complex) -> complex:
    """(2/3) z^{3/2} on the fixed branch."""
    return (2.0 / 3.0) * zpow(z, Fraction(3, 2))


@dataclass(frozen=True)
class WKBSymbol:
    """Formal WKB solution data.

    sign is sigma in exp(-sigma*(2/3) z^{3/2}/eps): +1 for the symbol
    recessive along L0, -1 for its eps -> -eps partner.
    """

    sign: int
    prefactor_exp: Fraction
    eps_coeffs: tuple
    order: int

    def __post_init__(self):
        assert self.sign in (+1, -1)
        assert len(self.eps_coeffs) == self.order + 1

    @classmethod
    def from_g(cls, gs, sign: int = +1) -> "WKBSymbol":
        return cls(sign=sign, prefactor_exp=Fraction(-1, 4),
                   eps_coeffs=tuple(gs), order=len(gs) - 1)

    def series(self) -> EpsSeries:
        return EpsSeries(self.eps_coeffs)

    def flip_eps(self) -> "WKBSymbol":
        """The eps -> -eps partner symbol."""
        gs = [g if n % 2 == 0 else -g for n, g in enumerate(self.eps_coeffs)]
        return WKBSymbol(sign=-self.sign, prefactor_exp=self.prefactor_exp,
                         eps_coeffs=tuple(gs), order=self.order)

    def prefactor(self, z: complex, eps: complex) -> complex:
        return cmath.exp(-self.sign * action(z) / eps) * zpow(z, self.prefactor_exp)

    def g_values(self, z: complex) -> np.ndarray:
        """g_n(z) on the fixed branch, n = 0..order."""
        return np.array([g.eval(z, zpow) for g in self.eps_coeffs])

    def truncated_sum(self, z: complex, eps: complex, orders: int | None = None) -> complex:
        """Plain truncated summation (divergent series; use few orders)."""
        n = self.order + 1 if orders is None else min(orders, self.order + 1)
        vals = self.g_values(z)[:n]
        powers = eps ** np.arange(n)
        return self.prefactor(z, eps) * np.dot(vals, powers)

    def minor(self) -> "BorelMinor":
        """Borel transform of the eps-series part: coefficient of xi^(n-1)
        is g_n/(n-1)!, n >= 1 (exact in exact mode)."""
        coeffs = []
        fact = 1
        for n in range(1, self.order + 1):
            coeffs.append(self.eps_coeffs[n] * Fraction(1, fact))
            fact *= n
        return BorelMinor(coeffs=tuple(coeffs))


@dataclass(frozen=True)
class BorelMinor:
    """Minor sum_n g_n(z) xi^{n-1}/Gamma(n) as xi-coefficients in z-series form."""

    coeffs: tuple

    def at_z(self, z: complex, pow_fn: Callable | None = None) -> np.ndarray:
        pf = zpow if pow_fn is None else pow_fn
        return np.array([c.eval(z, pf) for c in self.coeffs])

    def factorial_check(self, symbol: WKBSymbol) -> bool:
        """coefficient n times (n-1)! reproduces g_n exactly."""
        fact = 1
        for n, c in enumerate(self.coeffs, start=1):
            if not (c * Fraction(fact) - symbol.eps_coeffs[n]).is_zero():
                return False
            fact *= n
        return True
