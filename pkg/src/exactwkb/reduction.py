"""Turning-point reduction: Liouville transform, induced potential,
resurgent reduction to the Airy equation, and decomposition of symbols
in the Airy basis.

The reduction series s(z, eps) is characterized by the master relation

    s (s')^2 - (eps^2/2) {s, z} = z + eps^2 F(z),

obtained by substituting u = (ds/dz)^{-1/2} y(s(z, eps), eps) into
u'' - (z/eps^2) u = F u and using y_ss = (s/eps^2) y.  Its residual is
the module's own correctness certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .airy import airy_symbol
from .errors import LogObstruction, NotSimpleTurningPoint, SeriesError
from .series import EpsSeries, PuiseuxSeries, require_taylor
from .symbols import WKBSymbol

_HALF = Fraction(1, 2)


def liouville_map(V: PuiseuxSeries, N: int) -> PuiseuxSeries:
    """z(q) = ((3/2) int_0^q V^{1/2})^{2/3} for V = q + O(q^2).

    The simple-turning-point normalization V(0) = 0, V'(0) = 1 is
    enforced; the result is a Taylor map z(q) = q + O(q^2) on the
    integer lattice (the 2/3 power's transient lattice widening cancels
    against the q^{3/2} of the integrated square root).
    """
    require_taylor(V, "V")
    if not V.coeffs.get(Fraction(0), Fraction(0)) == 0:
        raise NotSimpleTurningPoint("V(0) != 0")
    if not V.coeffs.get(Fraction(1), Fraction(0)) == 1:
        raise NotSimpleTurningPoint("V'(0) != 1")
    order = Fraction(N)
    sqrtV = V.pow_rational(_HALF, order=order + 1)
    zq = (sqrtV.antiderivative() * Fraction(3, 2)).pow_rational(
        Fraction(2, 3), order=order + 1)
    zq = zq.with_trunc(min(zq.trunc, order + 1))
    if not zq.is_taylor():
        raise SeriesError("Liouville map left the integer lattice")
    return zq


def schwarzian(f: PuiseuxSeries, order=None) -> PuiseuxSeries:
    """{f, q} = f'''/f' - (3/2)(f''/f')^2 for a series with f'(0) != 0."""
    f1 = f.derivative()
    f2 = f1.derivative()
    f3 = f2.derivative()
    inv = f1.inverse(order=order)
    r2 = f2 * inv
    return f3 * inv - r2 * r2 * Fraction(3, 2)


def induced_potential_F(V: PuiseuxSeries, N: int) -> PuiseuxSeries:
    """Correction potential F(z) = (z / 2V(q)) {z, q} at q = q(z).

    Composes the Liouville map, its Lagrange inverse and the Schwarzian
    derivative; the result is holomorphic at 0.
    """
    # z(q) carried a few orders past N so the two derivatives inside the
    # Schwarzian still leave N retained orders
    zq = liouville_map(V, N + 3)
    order = Fraction(N + 1)
    sch = schwarzian(zq, order=order)
    ratio = zq.div(V, order=order)          # z(q)/V(q), holomorphic, -> 1
    G = ratio * sch * _HALF                  # F written in the q variable
    qz = zq.reversion(order + 1)
    out = G.with_trunc(min(G.trunc, order)).compose(qz)
    return out.with_trunc(min(out.trunc, order))


@dataclass(frozen=True)
class ReductionSeries:
    """s(z, eps) = z + sum_{k>=2} s_k(z) eps^k (odd orders vanish)."""

    s_coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.s_coeffs) - 1

    def as_eps_series(self) -> EpsSeries:
        return EpsSeries(self.s_coeffs)

    def compose_with(self, zq: PuiseuxSeries) -> "ReductionSeries":
        """s(z(q), eps): pushes the reduction through a change of variable."""
        out = [zq]
        for sk in self.s_coeffs[1:]:
            out.append(sk.compose(zq) if not sk.is_zero() else PuiseuxSeries.zero())
        return ReductionSeries(s_coeffs=tuple(out))


def master_relation_residual(s: ReductionSeries, F: PuiseuxSeries,
                             orders: int | None = None) -> EpsSeries:
    """s (s')^2 - (eps^2/2){s, z} - z - eps^2 F as an eps-series."""
    S = s.as_eps_series()
    S1 = S.dz()
    lhs = S * S1 * S1
    # {s, z}: all eps-series with invertible leading coefficient s0' = 1
    S2 = S1.dz()
    S3 = S2.dz()
    inv = S1.recip()
    r2 = S2 * inv
    sch = S3 * inv - r2 * r2 * Fraction(3, 2)
    lhs = lhs - sch.eps_shift(2) * _HALF
    z = PuiseuxSeries.monomial(1, 1)
    rhs = EpsSeries.const(z, lhs.order) + EpsSeries.const(F, lhs.order).eps_shift(2)
    resid = lhs - rhs.truncated(lhs.order)
    if orders is not None:
        resid = resid.truncated(orders + 1)
    return resid


def reduce_to_airy(F: PuiseuxSeries, N_eps: int, N_z: int) -> ReductionSeries:
    """Reduction series solving the master relation order by order.

    At eps-order k the unknown s_k satisfies 2 z s_k' + s_k = rhs_k with
    rhs_k built from lower orders; coefficientwise (2m+1) c_m = rhs_m.
    Holomorphy forces the odd orders to vanish (asserted, not assumed):
    a nonzero rhs at odd k would demand a z^{-1/2} homogeneous part.
    """
    require_taylor(F, "F")
    Fz = F.with_trunc(min(F.trunc, Fraction(N_z)))
    z = PuiseuxSeries.monomial(1, 1)
    coeffs = [z] + [PuiseuxSeries.zero()] * N_eps
    for k in range(1, N_eps + 1):
        partial = ReductionSeries(s_coeffs=tuple(coeffs[:k + 1]))
        resid = master_relation_residual(partial, Fz)
        rhs = -resid.coeffs[k]
        if rhs.is_zero():
            continue
        if not rhs.is_taylor():
            raise LogObstruction(
                f"resonant non-holomorphic term at eps-order {k}")
        sk = PuiseuxSeries(
            {m: c / (2 * m + 1) for m, c in rhs.coeffs.items()},
            trunc=rhs.trunc)
        coeffs[k] = sk
    return ReductionSeries(s_coeffs=tuple(coeffs))


def schrodinger_pipeline(V: PuiseuxSeries, N: int,
                         N_z: int | None = None) -> tuple[PuiseuxSeries, ReductionSeries]:
    """Full reduction of eps^2 Y'' = V(q) Y at a simple turning point.

    Returns (F, s(q, eps)) where F is the induced potential in the
    straightened variable and s is the composed reduction series in q,
    satisfying s (ds/dq)^2 - (eps^2/2){s, q} = V(q) on retained orders.
    """
    N_z = N_z if N_z is not None else N + 4
    F = induced_potential_F(V, N_z)
    s_can = reduce_to_airy(F, N, N_z)
    zq = liouville_map(V, N_z)
    return F, s_can.compose_with(zq)


def schrodinger_master_residual(s_q: ReductionSeries, V: PuiseuxSeries,
                                orders: int) -> EpsSeries:
    """s (ds/dq)^2 - (eps^2/2){s, q} - V(q), the q-variable certificate."""
    S = s_q.as_eps_series()
    S1 = S.dz()
    lhs = S * S1 * S1
    S2 = S1.dz()
    S3 = S2.dz()
    inv = S1.recip()
    r2 = S2 * inv
    sch = S3 * inv - r2 * r2 * Fraction(3, 2)
    lhs = lhs - sch.eps_shift(2) * _HALF
    resid = lhs - EpsSeries.const(V, lhs.order)
    return resid.truncated(orders + 1)


# ---------------------------------------------------------------------------
# Decomposition in the Airy symbol basis.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BasisDecomposition:
    """phi = a(z, eps) A + b(z, eps) eps dA/dz with holomorphic a_k, b_k."""

    a_coeffs: tuple
    b_coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.a_coeffs) - 1

    def holomorphy_scan(self) -> bool:
        """All retained a_k, b_k have integer exponents >= 0."""
        return all(c.is_taylor() for c in self.a_coeffs + self.b_coeffs)


def airy_basis_decomposition(phi: WKBSymbol, N: int) -> BasisDecomposition:
    """Solve phi = a A + b eps dA/dz order by order in eps.

    Both sides carry the common exponential/quarter-power prefactor; at
    the series level A contributes u = sum alpha_n eps^n and eps dA/dz
    contributes v = -z^{1/2} u + eps (u' - u/(4z)).  Each eps-order
    splits over the exponent lattice: integer exponents determine a_n,
    half-integer exponents determine b_n (after dividing -z^{1/2}).
    """
    if phi.sign != +1:
        raise SeriesError("decompose the sign=+1 determination")
    if N > phi.order:
        raise SeriesError(f"phi carries only {phi.order} orders, asked {N}")
    A = airy_symbol(N)
    u = list(A.eps_coeffs)
    v = [PuiseuxSeries.monomial(-1, _HALF) * u[0]]
    quarter = PuiseuxSeries.monomial(Fraction(1, 4), -1)
    for m in range(1, N + 1):
        v.append(PuiseuxSeries.monomial(-1, _HALF) * u[m]
                 + u[m - 1].derivative() - quarter * u[m - 1])
    a: list[PuiseuxSeries] = []
    b: list[PuiseuxSeries] = []
    inv_sqrt = PuiseuxSeries.monomial(-1, -_HALF)
    for n in range(N + 1):
        known = PuiseuxSeries.zero()
        for k in range(n):
            known = known + a[k] * u[n - k] + b[k] * v[n - k]
        resid = phi.eps_coeffs[n] - known
        a_n, half_part = _lattice_split(resid)
        b_n = inv_sqrt * half_part
        a.append(a_n)
        b.append(b_n)
    return BasisDecomposition(a_coeffs=tuple(a), b_coeffs=tuple(b))


def reconstruct_from_basis(dec: BasisDecomposition, N: int) -> WKBSymbol:
    """a A + b eps dA/dz as a plain symbol (for exact reconstruction checks)."""
    A = airy_symbol(N)
    u = list(A.eps_coeffs)
    v = [PuiseuxSeries.monomial(-1, _HALF) * u[0]]
    quarter = PuiseuxSeries.monomial(Fraction(1, 4), -1)
    for m in range(1, N + 1):
        v.append(PuiseuxSeries.monomial(-1, _HALF) * u[m]
                 + u[m - 1].derivative() - quarter * u[m - 1])
    gs = []
    for n in range(N + 1):
        acc = PuiseuxSeries.zero()
        for k in range(n + 1):
            acc = acc + dec.a_coeffs[k] * u[n - k] + dec.b_coeffs[k] * v[n - k]
        gs.append(acc)
    return WKBSymbol.from_g(gs)


def _lattice_split(s: PuiseuxSeries) -> tuple[PuiseuxSeries, PuiseuxSeries]:
    """Split a half-lattice series into integer and half-integer parts."""
    ints = {e: c for e, c in s.coeffs.items() if e.denominator == 1}
    halfs = {e: c for e, c in s.coeffs.items() if e.denominator == 2}
    return (PuiseuxSeries(ints, s.trunc, s.lattice),
            PuiseuxSeries(halfs, s.trunc, s.lattice))
