"""Pade acceleration of Borel minors and Laplace quadrature along rays.

The Borel sum of a symbol is prefactor * (1 + int_ray exp(-xi/eps) R(xi) dxi)
where R is the (L, M) Pade approximant of the truncated minor.  The Pade
pole string emulates the minor's branch cut, which is what makes lateral
sums and the Stokes-jump measurement possible at finite order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .contours import LaplaceResult
from .errors import PoleOnRay

PADE_DEFAULT = None  # None -> balanced (floor(n/2), floor(n/2)) clamped to data


@dataclass(frozen=True)
class PadeApproximant:
    """Rational approximant num/den with coefficients in ascending order."""

    num: np.ndarray
    den: np.ndarray

    def __call__(self, xi):
        xi = np.asarray(xi, dtype=complex)
        n = np.polyval(self.num[::-1], xi)
        d = np.polyval(self.den[::-1], xi)
        return n / d

    def poles(self) -> np.ndarray:
        if len(self.den) <= 1:
            return np.empty(0, dtype=complex)
        return np.roots(self.den[::-1])

    def residues(self) -> np.ndarray:
        dden = np.polyder(self.den[::-1])
        ps = self.poles()
        return np.polyval(self.num[::-1], ps) / np.polyval(dden, ps)


def pade_from_taylor(c: np.ndarray, L: int, M: int) -> PadeApproximant:
    """(L, M) Pade approximant from Taylor coefficients c[0..].

    If fewer than L+M+1 coefficients are available the degrees are
    clamped down (numerator first) to fit the data exactly.
    """
    c = np.asarray(c, dtype=complex)
    n = len(c)
    if n == 0:
        return PadeApproximant(num=np.zeros(1), den=np.ones(1))
    while L + M + 1 > n:
        if L >= M:
            L -= 1
        else:
            M -= 1
    if M == 0:
        return PadeApproximant(num=c[:L + 1].copy(), den=np.ones(1))
    A = np.empty((M, M), dtype=complex)
    for i in range(M):
        for j in range(1, M + 1):
            k = L + 1 + i - j
            A[i, j - 1] = c[k] if k >= 0 else 0.0
    rhs = -c[L + 1:L + M + 1]
    try:
        b = np.linalg.solve(A, rhs)
    except np.linalg.LinAlgError:
        b = np.linalg.lstsq(A, rhs, rcond=None)[0]
    den = np.concatenate(([1.0 + 0j], b))
    num = np.zeros(L + 1, dtype=complex)
    for k in range(L + 1):
        acc = 0j
        for j in range(0, min(k, M) + 1):
            acc += den[j] * c[k - j]
        num[k] = acc
    return PadeApproximant(num=num, den=den)


def _ray_distance(p: complex, theta: float) -> float:
    """Distance from p to the ray {t e^{i theta} : t >= 0}."""
    w = p * cmath.exp(-1j * theta)
    if w.real <= 0:
        return abs(p)
    return abs(w.imag)


def check_poles_off_ray(approx: PadeApproximant, theta: float,
                        eps_scale: float, froissart_tol: float = 1e-12) -> None:
    """Raise PoleOnRay when a genuine pole obstructs the integration ray.

    Froissart doublets (spurious pole/zero pairs with negligible residue)
    are ignored.
    """
    ps = approx.poles()
    if len(ps) == 0:
        return
    rs = approx.residues()
    scale = max(1.0, float(np.max(np.abs(rs))))
    for p, r in zip(ps, rs):
        if abs(r) < froissart_tol * scale:
            continue
        if _ray_distance(p, theta) < 0.03 * (abs(p) + eps_scale):
            raise PoleOnRay(
                f"Pade pole at {p:.6g} obstructs the ray arg xi = {theta:.4f}")


_LAG_CACHE: dict = {}


def _laguerre(n: int):
    if n not in _LAG_CACHE:
        _LAG_CACHE[n] = np.polynomial.laguerre.laggauss(n)
    return _LAG_CACHE[n]


def laplace_ray(R, eps: complex, theta: float = 0.0,
                method: str = "laguerre", n_nodes: int = 48) -> LaplaceResult:
    """int_0^inf(ray theta) exp(-xi/eps) R(xi) dxi.

    'laguerre' uses Gauss-Laguerre with node doubling for the error
    estimate; 'adaptive' uses scipy.integrate.quad on the finite
    truncated ray (robust near pole strings, used for lateral sums).
    Requires cos(theta - arg eps) > 0.
    """
    phi = theta - cmath.phase(eps)
    if math.cos(phi) <= 0.05:
        raise PoleOnRay(f"ray arg xi = {theta:.4f} is outside the half-plane of eps")
    if method == "laguerre":
        val1 = _laguerre_pass(R, eps, phi, theta, n_nodes)
        val2 = _laguerre_pass(R, eps, phi, theta, 2 * n_nodes)
        return LaplaceResult(value=val2, est_error=abs(val2 - val1),
                             nodes_used=3 * n_nodes)
    if method == "adaptive":
        rot = cmath.exp(1j * theta)
        decay = math.cos(phi) / abs(eps)
        T = 60.0 / decay

        def f_re(t):
            xi = rot * t
            return (cmath.exp(-xi / eps) * complex(R(xi)) * rot).real

        def f_im(t):
            xi = rot * t
            return (cmath.exp(-xi / eps) * complex(R(xi)) * rot).imag

        re, re_err = integrate.quad(f_re, 0.0, T, limit=400, epsabs=1e-15, epsrel=1e-13)
        im, im_err = integrate.quad(f_im, 0.0, T, limit=400, epsabs=1e-15, epsrel=1e-13)
        return LaplaceResult(value=complex(re, im),
                             est_error=float(math.hypot(re_err, im_err)),
                             nodes_used=0)
    raise ValueError(f"unknown Laplace method {method!r}")


def _laguerre_pass(R, eps, phi, theta, n):
    x, w = _laguerre(n)
    rot = cmath.exp(1j * phi)
    xi = eps * rot * x
    # exp(-xi/eps) = exp(-x rot) = exp(-x) * exp(-x (rot - 1))
    extra = np.exp(-x * (rot - 1.0))
    vals = R(xi)
    return complex(eps * rot * np.dot(w, extra * vals))


def borel_pade_laplace(minor_coeffs, eps: complex,
                       pade: tuple[int, int] | None = PADE_DEFAULT,
                       theta: float = 0.0,
                       method: str = "laguerre") -> LaplaceResult:
    """Laplace integral of the Pade-accelerated minor along a ray.

    minor_coeffs are the numeric xi-Taylor coefficients of the minor at
    fixed z.  Returns the integral only (the caller adds the eps^0 term
    and the exponential prefactor).
    """
    c = np.asarray(minor_coeffs, dtype=complex)
    if len(c) == 0:
        return LaplaceResult(0j, 0.0, 0)
    if pade is None:
        half = len(c) // 2
        L, M = half, half
    else:
        L, M = pade
        if L < 0 or M < 0:
            raise ValueError("Pade orders must be nonnegative")
    approx = pade_from_taylor(c, L, M)
    check_poles_off_ray(approx, theta, abs(eps))
    return laplace_ray(approx, eps, theta=theta, method=method)
