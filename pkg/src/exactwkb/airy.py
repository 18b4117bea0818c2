"""The Airy reference model (F = 0).

Closed-form WKB symbol with exact rational coefficients, Borel-Pade-
Laplace summation, an independent contour-integral oracle, and the
numeric Stokes-jump check on the lateral sums.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import mpmath

from .borel import PADE_DEFAULT, borel_pade_laplace
from .contours import ContourSpec, LaplaceResult, descent_chain_integral
from .errors import ContourFailure
from .series import PuiseuxSeries
from .symbols import WKBSymbol, branch_arg, zpow


def airy_alpha(n: int) -> Fraction:
    """Exact rational alpha_n with alpha_n(z) = alpha_n z^{-3n/2}.

    (-3/4)^n Gamma(n+1/6) Gamma(n+5/6) / (2 pi n!) reduces to a rational:
    Gamma(1/6) Gamma(5/6) = 2 pi by reflection, and the remaining factors
    are the rational products prod_{j<n} (j+1/6)(j+5/6).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    acc = Fraction(1)
    for j in range(n):
        acc *= Fraction((6 * j + 1) * (6 * j + 5), 36)
    acc *= Fraction(-3, 4) ** n
    return acc / math.factorial(n)


def airy_symbol(N: int) -> WKBSymbol:
    """Airy WKB symbol to order N (exact monomial coefficients)."""
    gs = [PuiseuxSeries.monomial(airy_alpha(n), Fraction(-3 * n, 2))
          for n in range(N + 1)]
    return WKBSymbol.from_g(gs)


# ---------------------------------------------------------------------------
# Independent oracle: scaled Airy function via mpmath.
# ---------------------------------------------------------------------------

def airy_oracle(z: complex, eps: complex, dps: int | None = None) -> complex:
    """2 sqrt(pi) eps^{-1/6} Ai(z eps^{-2/3}), evaluated independently of any
    contour machinery (arbitrary-precision mpmath.airyai).

    Principal powers of eps are used; Re(eps) > 0 throughout the toolkit.
    """
    with mpmath.workdps(dps or max(30, mpmath.mp.dps)):
        me = mpmath.mpc(eps)
        arg = mpmath.mpc(z) * me ** mpmath.mpf("-2/3")
        val = 2 * mpmath.sqrt(mpmath.pi) * me ** mpmath.mpf("-1/6") \
            * mpmath.airyai(arg)
        return complex(val)


def airy_contour(z: complex, eps: complex,
                 spec: ContourSpec | None = None) -> LaplaceResult:
    """Saddle-point evaluation of the Airy integral, normalized to the
    Borel sum of the symbol.

    Integrates exp(-S(z, zhat)/eps) with S = z zhat - zhat^3/3 along a
    truncated steepest-descent path (through the saddle zhat = sqrt(z)
    on the fixed branch; past the Stokes line L1 the continued contour
    threads both saddles), then divides by i sqrt(pi eps) so the value
    equals 2 sqrt(pi) eps^{-1/6} Ai(z eps^{-2/3}) for every z != 0.
    """
    raw = airy_raw_contour(z, eps, spec)
    norm = 1.0 / (1j * cmath.sqrt(math.pi * eps))
    return LaplaceResult(value=raw.value * norm,
                         est_error=raw.est_error * abs(norm),
                         nodes_used=raw.nodes_used)


def airy_raw_contour(z: complex, eps: complex,
                     spec: ContourSpec | None = None,
                     g=None) -> LaplaceResult:
    """Raw truncated-contour integral of exp(-S/eps) * g along the
    continued descent chain (g defaults to 1)."""
    if z == 0:
        raise ContourFailure("z = 0 is the turning point; no saddle path")
    spec = spec or ContourSpec()
    S, dS, d2S = airy_S(z)
    saddles, up = airy_saddle_chain(z, eps)
    hint = cmath.exp(1j * (-math.pi / 3.0 + cmath.phase(eps) / 3.0))
    return descent_chain_integral(S, dS, d2S, saddles, eps, spec, g=g,
                                  up_dir_last=up, in_dir_hint=hint)


def airy_S(z: complex):
    """S(z, .) = z w - w^3/3 and its first two w-derivatives (vectorized)."""

    def S(w):
        return z * w - w ** 3 / 3.0

    def dS(w):
        return z - w ** 2

    def d2S(w):
        return -2.0 * w

    return S, dS, d2S


def airy_saddle_chain(z: complex, eps: complex):
    """Saddle list threaded by the continued V3 -> V1 contour, plus the
    crossing direction at the final saddle.

    Inside S1/S-1 (|arg z| < 2 pi/3 on the fixed branch) the descent
    chain holds one saddle, +sqrt(z); on and beyond L1 it holds both.
    The crossing direction pi/2 - arg(z)/4 + arg(eps)/2 is the continuous
    determination that is +i for z > 0, eps > 0.
    """
    th = branch_arg(z)
    up = cmath.exp(1j * (math.pi / 2.0 - th / 4.0 + cmath.phase(eps) / 2.0))
    root = zpow(z, Fraction(1, 2))
    if abs(th) < 2.0 * math.pi / 3.0 - 1e-12:
        return [root], up
    return [-root, root], up


# ---------------------------------------------------------------------------
# Borel-Pade-Laplace summation of the symbol.
# ---------------------------------------------------------------------------

def airy_borel_sum(z: complex, eps: complex, N: int,
                   pade: tuple[int, int] | None = PADE_DEFAULT,
                   theta: float = 0.0,
                   method: str = "laguerre") -> LaplaceResult:
    """Borel sum of the Airy symbol at (z, eps) via Pade acceleration.

    N counts eps-orders including eps^0, so the minor is built from
    alpha_1 .. alpha_{N-1}; (L, M) larger than the available data is
    clamped down.  theta rotates the Laplace ray (lateral sums).
    """
    sym = airy_symbol(max(N - 1, 0))
    return symbol_borel_sum(sym, z, eps, pade=pade, theta=theta, method=method)


def symbol_borel_sum(symbol: WKBSymbol, z: complex, eps: complex,
                     pade: tuple[int, int] | None = PADE_DEFAULT,
                     theta: float = 0.0,
                     method: str = "laguerre") -> LaplaceResult:
    """Borel sum of any formal symbol at fixed z along the ray arg xi = theta."""
    minor_vals = symbol.minor().at_z(z)
    res = borel_pade_laplace(minor_vals, eps, pade=pade, theta=theta,
                             method=method)
    pref = symbol.prefactor(z, eps)
    return LaplaceResult(value=pref * (1.0 + res.value),
                         est_error=abs(pref) * res.est_error,
                         nodes_used=res.nodes_used)


def airy_borel_sum_hp(z, eps, N: int, pade: tuple[int, int] | None = None,
                      dps: int = 40):
    """High-precision Borel-Pade-Laplace sum of the Airy symbol.

    Same construction as airy_borel_sum but in mpmath arithmetic
    throughout (exact rational minor coefficients, LU-solved Pade,
    adaptive quadrature on the truncated ray).  Returns an mpmath mpc.
    Needed where the summation error sits below the double-precision
    floor, e.g. to resolve its decay as eps shrinks.
    """
    with mpmath.workdps(dps):
        zm = mpmath.mpc(z)
        em = mpmath.mpc(eps)
        th = mpmath.arg(zm)
        if th <= -2 * mpmath.pi / 3:
            th += 2 * mpmath.pi

        def zpow_mp(r):
            return mpmath.exp(mpmath.log(abs(zm)) * r + 1j * th * r)

        c = []
        fact = mpmath.mpf(1)
        for n in range(1, max(N, 1)):
            a = airy_alpha(n)
            c.append(mpmath.mpf(a.numerator) / a.denominator
                     * zpow_mp(mpmath.mpf(-3 * n) / 2) / fact)
            fact *= n
        pref = mpmath.exp(-(mpmath.mpf(2) / 3) * zpow_mp(mpmath.mpf(3) / 2) / em) \
            * zpow_mp(-mpmath.mpf(1) / 4)
        if not c:
            return pref
        if pade is None:
            L = M = len(c) // 2
        else:
            L, M = pade
        n_av = len(c)
        while L + M + 1 > n_av:
            if L >= M:
                L -= 1
            else:
                M -= 1
        if M > 0:
            A = mpmath.matrix(M, M)
            rhs = mpmath.matrix(M, 1)
            for i in range(M):
                for j in range(1, M + 1):
                    k = L + 1 + i - j
                    A[i, j - 1] = c[k] if k >= 0 else mpmath.mpf(0)
                rhs[i] = -c[L + 1 + i]
            b = mpmath.lu_solve(A, rhs)
            den = [mpmath.mpc(1)] + [b[i] for i in range(M)]
        else:
            den = [mpmath.mpc(1)]
        num = []
        for k in range(L + 1):
            acc = mpmath.mpc(0)
            for j in range(0, min(k, M) + 1):
                acc += den[j] * c[k - j]
            num.append(acc)

        def R(xi):
            return mpmath.polyval(num[::-1], xi) / mpmath.polyval(den[::-1], xi)

        T = (dps * mpmath.log(10) + 10) * abs(em) / mpmath.cos(mpmath.arg(em))
        integral = mpmath.quad(lambda t: mpmath.exp(-t / em) * R(t), [0, T])
        return pref * (1 + integral)


def stokes_jump(z: complex, eps: complex, N: int,
                delta: float = math.radians(10.0),
                mirror: bool = False) -> tuple[complex, complex]:
    """Numeric Stokes jump of the Airy symbol across the singular ray.

    With mirror=False, z is expected on L1 (arg z = 2*pi/3): the minor of
    the recessive-branch symbol is then singular on the positive xi ray.
    Returns (jump, predicted) where

        jump      = lateral sum below the ray - lateral sum above it,
        predicted = -i * Borel sum of the eps -> -eps partner symbol,

    so that jump == predicted expresses the alien-derivative relation of
    the model.  The jump orientation (below minus above) is the one under
    which analytic continuation counterclockwise across L1 picks up the
    -i partner term.

    With mirror=True the same check is run on L0 for the partner symbol,
    whose minor is singular on the positive ray when z is real > 0.
    """
    sym = airy_symbol(max(N - 1, 0))
    if mirror:
        sym = sym.flip_eps()
    partner = sym.flip_eps()
    lo, hi = lateral_sums(sym, z, eps, delta=delta)
    jump = lo - hi
    pred = -1j * symbol_borel_sum(partner, z, eps).value
    return jump, pred


def lateral_sums(symbol: WKBSymbol, z: complex, eps: complex,
                 delta: float = math.radians(10.0),
                 singular_theta: float = 0.0) -> tuple[complex, complex]:
    """Lateral Borel sums of a symbol just below / above a singular ray
    direction, using the adaptive ray quadrature (robust near the Pade
    pole string that emulates the cut)."""
    lo = symbol_borel_sum(symbol, z, eps, theta=singular_theta - delta,
                          method="adaptive").value
    hi = symbol_borel_sum(symbol, z, eps, theta=singular_theta + delta,
                          method="adaptive").value
    return lo, hi
