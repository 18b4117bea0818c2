"""Hardy's polynomial family for higher-order turning points.

P_m comes from the hyperbolic multiple-angle identities, Q_m is its
quasi-homogeneous lift, S_n = (2/(n+2)) Q_{n+2}(-z, zhat) generates the
exponential integrals solving the higher turning-point model, and T_n
is the companion polynomial fixed by the two structural identities

    (dS_n/dz)^2 = T_n dS_n/dzhat + z^n,      d2S_n/dz2 = dT_n/dzhat.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .contours import ContourSpec, LaplaceResult, saddle_point_integral
from .errors import ContourFailure

Poly2 = dict  # {(i, j): Fraction} for z^i zhat^j


def hardy_polynomial(m: int) -> list[Fraction]:
    """Coefficients (ascending) of P_m with cosh(mq) = P_m(sinh q) for
    even m and sinh(mq) = P_m(sinh q) for odd m.

    Builds cosh/sinh(mq) by the addition formulas over the ring
    Z[s, c]/(c^2 = 1 + s^2), then eliminates c.
    """
    if m < 2:
        raise ValueError("m must be >= 2")

    # elements p(s) + q(s) c of Z[s, c]/(c^2 - 1 - s^2)
    def mul(a, b):
        (p1, q1), (p2, q2) = a, b
        p = _padd(_pmul(p1, p2),
                  _pmul(_pmul(q1, q2), [Fraction(1), Fraction(0), Fraction(1)]))
        q = _padd(_pmul(p1, q2), _pmul(q1, p2))
        return (p, q)

    sinh1 = ([Fraction(0), Fraction(1)], [Fraction(0)])   # s
    cosh1 = ([Fraction(0)], [Fraction(1)])                # c
    sin_k, cos_k = sinh1, cosh1
    for _ in range(m - 1):
        sin_k, cos_k = (_pair_add(mul(sin_k, cosh1), mul(cos_k, sinh1)),
                        _pair_add(mul(cos_k, cosh1), mul(sin_k, sinh1)))
    p, q = cos_k if m % 2 == 0 else sin_k
    if any(c != 0 for c in q):
        raise AssertionError("parity elimination failed for P_m")
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _padd(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else Fraction(0))
            + (b[i] if i < len(b) else Fraction(0)) for i in range(n)]


def _pair_add(a, b):
    return (_padd(a[0], b[0]), _padd(a[1], b[1]))


@dataclass(frozen=True)
class HardyPair:
    """S_n, T_n with the two structural identities holding exactly."""

    n: int
    S: Poly2
    T: Poly2


def hardy_S_T(n: int) -> HardyPair:
    """Exact S_n and T_n.

    S_n = (2/(n+2)) z^{m/2} P_m(zhat z^{-1/2}) at z -> -z (m = n+2, a
    genuine polynomial by the parity of P_m); T_n is the zhat-
    antiderivative of d2S_n/dz2 with the z-dependent constant matched so
    the first identity holds at zhat = 0.  Both identities are then
    verified by exact expansion (hard error on failure).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n + 2
    P = hardy_polynomial(m)
    S: Poly2 = {}
    for j, c in enumerate(P):
        if c == 0:
            continue
        if (m - j) % 2 != 0:
            raise AssertionError("P_m parity violated")
        i = (m - j) // 2
        S[(i, j)] = S.get((i, j), Fraction(0)) + c * Fraction(2, m) * Fraction(-1) ** i
    Szz = _d(_d(S, 0), 0)
    T = _anti(Szz, 1)
    # the zhat-free integration "constant" C(z) is fixed by the first
    # identity: C * dS/dzhat = (dS/dz)^2 - z^n - T0 * dS/dzhat, an exact
    # polynomial division
    Sz = _d(S, 0)
    Szh = _d(S, 1)
    need = _sub(_sub(_mul(Sz, Sz), {(n, 0): Fraction(1)}), _mul(T, Szh))
    corr, rem = _poly2_divmod(need, Szh)
    if rem:
        raise AssertionError(f"T_n correction not divisible for n={n}")
    T = _add(T, corr)
    pair = HardyPair(n=n, S={k: v for k, v in S.items() if v != 0},
                     T={k: v for k, v in T.items() if v != 0})
    if not hardy_identities_hold(pair):
        raise AssertionError(f"structural identities failed for n={n}")
    return pair


def _poly2_divmod(a: Poly2, b: Poly2) -> tuple[Poly2, Poly2]:
    """Division by leading-term elimination, zhat-major ordering."""
    def lead(p):
        return max(p, key=lambda k: (k[1], k[0]))

    rem = dict(a)
    quot: Poly2 = {}
    lb = lead(b)
    cb = b[lb]
    while rem:
        la = lead(rem)
        if la[0] < lb[0] or la[1] < lb[1]:
            break
        k = (la[0] - lb[0], la[1] - lb[1])
        c = rem[la] / cb
        quot[k] = quot.get(k, Fraction(0)) + c
        rem = _sub(rem, _mul({k: c}, b))
    return quot, rem


def hardy_identities_hold(pair: HardyPair) -> bool:
    Sz = _d(pair.S, 0)
    Szh = _d(pair.S, 1)
    lhs = _mul(Sz, Sz)
    rhs = _add(_mul(pair.T, Szh), {(pair.n, 0): Fraction(1)})
    if _sub(lhs, rhs):
        return False
    if _sub(_d(Sz, 0), _d(pair.T, 1)):
        return False
    return True


def quasi_homogeneous_ok(pair: HardyPair) -> bool:
    """S_n(l^2 z, l zhat) = l^{n+2} S_n(z, zhat): weight 2i + j = n + 2."""
    return all(2 * i + j == pair.n + 2 for (i, j) in pair.S)


def _d(p: Poly2, var: int) -> Poly2:
    out: Poly2 = {}
    for (i, j), c in p.items():
        if var == 0 and i > 0:
            out[(i - 1, j)] = out.get((i - 1, j), Fraction(0)) + c * i
        if var == 1 and j > 0:
            out[(i, j - 1)] = out.get((i, j - 1), Fraction(0)) + c * j
    return {k: v for k, v in out.items() if v != 0}


def _anti(p: Poly2, var: int) -> Poly2:
    out: Poly2 = {}
    for (i, j), c in p.items():
        if var == 1:
            out[(i, j + 1)] = c / (j + 1)
        else:
            out[(i + 1, j)] = c / (i + 1)
    return out


def _mul(a: Poly2, b: Poly2) -> Poly2:
    out: Poly2 = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, Fraction(0)) + c1 * c2
    return {k: v for k, v in out.items() if v != 0}


def _add(a: Poly2, b: Poly2) -> Poly2:
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, Fraction(0)) + c
    return {k: v for k, v in out.items() if v != 0}


def _sub(a: Poly2, b: Poly2) -> Poly2:
    return _add(a, {k: -c for k, c in b.items()})


def poly2_eval(p: Poly2, z: complex, zhat) -> complex | np.ndarray:
    zhat = np.asarray(zhat, dtype=complex)
    out = np.zeros_like(zhat)
    for (i, j), c in p.items():
        out = out + float(c) * (z ** i) * zhat ** j
    return out


def hardy_phi_eval(n: int, z: complex, eps: complex,
                   spec: ContourSpec | None = None,
                   convention: str = "eps2") -> LaplaceResult:
    """Phi_n(z, eps) = int exp(-S_n(z, zhat)/w) dzhat through the most
    recessive saddle.

    convention='eps2' takes w = eps, under which the integral satisfies
    eps^2 Phi'' = z^n Phi; convention='eps' takes w = sqrt(eps) so that
    eps Phi'' = z^n Phi as in the first-power normalization (the two
    printed forms of the model equation differ; both are exposed).
    """
    if convention == "eps2":
        w = eps
    elif convention == "eps":
        w = cmath.sqrt(eps)
    else:
        raise ValueError("convention must be 'eps' or 'eps2'")
    pair = hardy_S_T(n)
    spec = spec or ContourSpec()
    dS = _d(pair.S, 1)
    dd = _d(dS, 1)
    # saddles: roots of dS/dzhat(z, .)
    deg = max(j for (_, j) in dS)
    poly = np.zeros(deg + 1, dtype=complex)
    for (i, j), c in dS.items():
        poly[deg - j] += float(c) * (z ** i)
    saddles = np.roots(poly)
    if len(saddles) == 0:
        raise ContourFailure("no saddle points")
    S_at = [complex(poly2_eval(pair.S, z, s)) for s in saddles]
    # most recessive: largest Re(S/w) (smallest integrand)
    k = int(np.argmax([(v / w).real for v in S_at]))
    saddle = complex(saddles[k])

    def S(x):
        return poly2_eval(pair.S, z, x)

    def d2S(x):
        return poly2_eval(dd, z, x)

    return saddle_point_integral(S, lambda x: poly2_eval(dS, z, x), d2S,
                                 saddle, w, spec)


def hardy_ode_residual(n: int, z: complex, eps: complex,
                       spec: ContourSpec | None = None,
                       convention: str = "eps2",
                       h_rel: float = 0.02) -> float:
    """Relative residual of the turning-point ODE at z by 5-point finite
    differences on a fixed contour (the path is frozen at the stencil
    center so Phi stays analytic across the stencil)."""
    if convention == "eps2":
        w = eps
    else:
        w = cmath.sqrt(eps)
    pair = hardy_S_T(n)
    dS = _d(pair.S, 1)
    deg = max(j for (_, j) in dS)
    poly = np.zeros(deg + 1, dtype=complex)
    for (i, j), c in dS.items():
        poly[deg - j] += float(c) * (z ** i)
    saddles = np.roots(poly)
    S_at = [complex(poly2_eval(pair.S, z, s)) for s in saddles]
    k = int(np.argmax([(v / w).real for v in S_at]))
    saddle = complex(saddles[k])
    dd = _d(dS, 1)
    base = spec or ContourSpec()

    def S0(x):
        return poly2_eval(pair.S, z, x)

    def d2S0(x):
        return poly2_eval(dd, z, x)

    from .contours import canonical_up_dir, saddle_descent_path
    nodes, _, _ = saddle_descent_path(S0, lambda x: poly2_eval(dS, z, x), d2S0,
                                      saddle, w,
                                      base, canonical_up_dir(complex(d2S0(saddle)), w))
    fixed = base.with_path(nodes)

    h = h_rel * abs(eps) ** 0.5

    def phi(zz):
        def S(x):
            return poly2_eval(pair.S, zz, x)

        def d2S(x):
            return poly2_eval(dd, zz, x)

        return saddle_point_integral(S, lambda x: poly2_eval(dS, zz, x), d2S,
                                     saddle, w, fixed).value

    f2 = (-phi(z + 2 * h) + 16 * phi(z + h) - 30 * phi(z)
          + 16 * phi(z - h) - phi(z - 2 * h)) / (12 * h * h)
    val = phi(z)
    if convention == "eps2":
        resid = eps * eps * f2 - (z ** n) * val
    else:
        resid = eps * f2 - (z ** n) * val
    return abs(resid) / max(abs(z ** n * val), abs(eps * eps * f2))
