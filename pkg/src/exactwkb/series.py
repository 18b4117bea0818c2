"""Truncated Puiseux/Taylor series with exact or floating coefficients.

A :class:`PuiseuxSeries` is a finite map ``exponent -> coefficient`` with
exponents on the lattice (1/d)Z for a small denominator bound ``d``
(2 by default, widened to 6 only transiently inside rational powers),
together with a truncation order: exponents >= ``trunc`` are unknown.
``trunc`` may be ``+inf`` for exact (polynomial) data, which is how the
closed-form objects of the model are carried around without artificial
truncation.

Truncation is tracked pessimistically: every operation propagates the
tightest provably valid order, never extrapolating.  All values are
immutable after construction and all operations are pure functions.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping

from .coefficients import coeff_is_zero, is_exact, lift, to_complex
from .errors import LatticeError, LogObstruction, SeriesError

INF = math.inf

_Exp = Fraction  # exponents are always Fractions internally


def _as_exp(e) -> Fraction:
    if isinstance(e, Fraction):
        return e
    if isinstance(e, int):
        return Fraction(e)
    if isinstance(e, str):
        return Fraction(e)
    if isinstance(e, tuple) and len(e) == 2:
        return Fraction(e[0], e[1])
    raise SeriesError(f"exponent {e!r} is not rational")


def binomial(r: Fraction, k: int) -> Fraction:
    """Generalized binomial coefficient C(r, k) for rational r."""
    out = Fraction(1)
    for j in range(k):
        out *= (r - j)
        out /= (j + 1)
    return out


class PuiseuxSeries:
    """Truncated series sum_e c_e z^e with rational exponents.

    Parameters
    ----------
    coeffs : mapping exponent -> coefficient
        Exponents may be ints, Fractions, "p/q" strings or (p, q) pairs.
        Exact zero coefficients are dropped.
    trunc : Fraction or +inf
        Exponents >= trunc are unknown (default: +inf, exact data).
    lattice : int
        All exponent denominators must divide this (2 by default; 1, 3
        and 6 are also accepted, 6 only as a transient inside rational
        powers).
    """

    __slots__ = ("coeffs", "trunc", "lattice")

    def __init__(self, coeffs: Mapping | Iterable = (), trunc=INF, lattice: int = 2):
        if lattice not in (1, 2, 3, 6):
            raise LatticeError(f"unsupported exponent lattice denominator {lattice}")
        if trunc is not INF:
            trunc = _as_exp(trunc)
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        data = {}
        for e, c in items:
            e = _as_exp(e)
            if e.denominator > 1 and lattice % e.denominator != 0:
                raise LatticeError(
                    f"exponent {e} not on the 1/{lattice} lattice")
            if trunc is not INF and e >= trunc:
                continue
            c = lift(c)
            if coeff_is_zero(c):
                continue
            data[e] = data[e] + c if e in data else c
            if coeff_is_zero(data[e]):
                del data[e]
        object.__setattr__(self, "coeffs", data)
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "lattice", lattice)

    def __setattr__(self, *a):
        raise AttributeError("PuiseuxSeries is immutable")

    # -- basic queries -------------------------------------------------

    @property
    def min_exp(self) -> Fraction:
        """Smallest stored exponent (== trunc for the zero series)."""
        if not self.coeffs:
            return self.trunc if self.trunc is not INF else Fraction(0)
        return min(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, e) -> Any:
        e = _as_exp(e)
        if self.trunc is not INF and e >= self.trunc:
            raise SeriesError(f"coefficient of z^{e} is beyond truncation {self.trunc}")
        return self.coeffs.get(e, Fraction(0))

    def leading(self):
        """(exponent, coefficient) of the lowest-order term."""
        if not self.coeffs:
            raise SeriesError("zero series has no leading term")
        e = min(self.coeffs)
        return e, self.coeffs[e]

    def terms(self):
        """Terms sorted by exponent."""
        return sorted(self.coeffs.items())

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs.values())

    def is_taylor(self) -> bool:
        return all(e >= 0 and e.denominator == 1 for e in self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PuiseuxSeries):
            return self.coeffs == other.coeffs and self.trunc == other.trunc
        return NotImplemented

    def __hash__(self):
        return hash((tuple(self.terms()), self.trunc))

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, trunc=INF, lattice=2):
        return cls({}, trunc, lattice)

    @classmethod
    def one(cls, trunc=INF, lattice=2):
        return cls({0: 1}, trunc, lattice)

    @classmethod
    def monomial(cls, coeff, e, trunc=INF, lattice=None):
        e = _as_exp(e)
        if lattice is None:
            lattice = 1 if e.denominator == 1 else 2
        return cls({e: coeff}, trunc, lattice)

    def with_trunc(self, trunc):
        """Same data, tighter truncation."""
        if trunc is not INF:
            trunc = _as_exp(trunc)
            if self.trunc is not INF and trunc > self.trunc:
                raise SeriesError("cannot loosen a truncation")
        return PuiseuxSeries(self.coeffs, trunc, self.lattice)

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "PuiseuxSeries":
        return PuiseuxSeries({e: fn(c) for e, c in self.coeffs.items()},
                             self.trunc, self.lattice)

    def to_float(self) -> "PuiseuxSeries":
        return self.map_coefficients(to_complex)

    # -- ring operations -----------------------------------------------

    def _join_lattice(self, other: "PuiseuxSeries") -> int:
        a, b = self.lattice, other.lattice
        return a * b // math.gcd(a, b)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        data = dict(self.coeffs)
        for e, c in other.coeffs.items():
            data[e] = data[e] + c if e in data else c
        return PuiseuxSeries(data, trunc, self._join_lattice(other))

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries({e: -c for e, c in self.coeffs.items()},
                             self.trunc, self.lattice)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PuiseuxSeries):
            # error(a*b) <= a_known * err_b + err_a * b_known
            trunc = INF
            if other.trunc is not INF:
                trunc = min(trunc, self.min_exp + other.trunc)
            if self.trunc is not INF:
                trunc = min(trunc, other.min_exp + self.trunc)
            data: dict = {}
            for ea, ca in self.coeffs.items():
                for eb, cb in other.coeffs.items():
                    e = ea + eb
                    if e >= trunc:
                        continue
                    p = ca * cb
                    data[e] = data[e] + p if e in data else p
            return PuiseuxSeries(data, trunc, self._join_lattice(other))
        c = lift(other)
        if coeff_is_zero(c):
            return PuiseuxSeries.zero(self.trunc, self.lattice)
        return PuiseuxSeries({e: v * c for e, v in self.coeffs.items()},
                             self.trunc, self.lattice)

    def __rmul__(self, other):
        return self.__mul__(other)

    def _coerce(self, other):
        if isinstance(other, PuiseuxSeries):
            return other
        try:
            c = lift(other)
        except TypeError:
            return NotImplemented
        return PuiseuxSeries({0: c} if not coeff_is_zero(c) else {}, INF,
                             self.lattice)

    def shift(self, e) -> "PuiseuxSeries":
        """Multiply by the monomial z^e."""
        e = _as_exp(e)
        trunc = self.trunc if self.trunc is INF else self.trunc + e
        lattice = self.lattice
        if e.denominator > 1 and lattice % e.denominator != 0:
            lattice = lattice * e.denominator // math.gcd(lattice, e.denominator)
        return PuiseuxSeries({k + e: c for k, c in self.coeffs.items()},
                             trunc, lattice)

    def inverse(self, order=None) -> "PuiseuxSeries":
        """Multiplicative inverse 1/self.

        For a non-monomial denominator with infinite truncation the
        result is an infinite series, so a relative ``order`` (number of
        retained orders past the leading one) must be supplied.
        """
        if self.is_zero():
            raise SeriesError("division by a series that is zero within its truncation")
        m, c0 = self.leading()
        rel = None if self.trunc is INF else self.trunc - m
        if len(self.coeffs) == 1:
            one = Fraction(1)
            inv = one / c0
            t = INF if rel is None else rel - m
            return PuiseuxSeries({-m: inv}, t, self.lattice)
        if rel is None:
            if order is None:
                raise SeriesError(
                    "inverse of an untruncated non-monomial series needs an explicit order")
            rel = _as_exp(order)
        # self = c0 z^m (1 + u), u = self/(c0 z^m) - 1, ord(u) > 0
        u = (self.shift(-m) * (Fraction(1) / c0) - 1).with_trunc(rel)
        geo = PuiseuxSeries.one(rel, self.lattice)
        term = PuiseuxSeries.one(rel, self.lattice)
        step, _ = u.leading() if not u.is_zero() else (rel, None)
        k = Fraction(0)
        while k + step < rel and not term.is_zero():
            term = (-term * u).with_trunc(rel)
            geo = geo + term
            k += step
        return geo.shift(-m) * (Fraction(1) / c0)

    def div(self, other: "PuiseuxSeries", order=None) -> "PuiseuxSeries":
        return self * other.inverse(order)

    def __truediv__(self, other):
        if isinstance(other, PuiseuxSeries):
            return self.div(other)
        c = lift(other)
        return PuiseuxSeries({e: v / c for e, v in self.coeffs.items()},
                             self.trunc, self.lattice)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = PuiseuxSeries.one(lattice=self.lattice)
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def pow_rational(self, r, order=None) -> "PuiseuxSeries":
        """self**r for rational r, by binomial expansion about the leading
        monomial.

        The leading coefficient must possess an exact r-th power in exact
        mode (it does throughout the model, where it is 1); r times the
        leading exponent must land on a lattice with denominator <= 6.
        """
        r = _as_exp(r)
        if self.is_zero():
            if r > 0:
                return PuiseuxSeries.zero(self.trunc, self.lattice)
            raise SeriesError("0 cannot be raised to a non-positive rational power")
        if r.denominator == 1 and int(r) >= 0:
            return self ** int(r)
        m, c0 = self.leading()
        new_exp = m * r
        if new_exp.denominator > 6:
            raise LatticeError(
                f"exponent {new_exp} leaves the admissible lattice (denominator > 6)")
        c0r = _coeff_root(c0, r)
        rel = None if self.trunc is INF else self.trunc - m
        if len(self.coeffs) == 1:
            t = INF if rel is None else new_exp + rel
            lat = _lattice_for(new_exp, self.lattice)
            return PuiseuxSeries({new_exp: c0r}, t, lat)
        if rel is None:
            if order is None:
                raise SeriesError(
                    "rational power of an untruncated non-monomial series needs an order")
            rel = _as_exp(order)
        u = (self.shift(-m) * (Fraction(1) / c0) - 1).with_trunc(rel)
        out = PuiseuxSeries.one(rel, u.lattice)
        term = PuiseuxSeries.one(rel, u.lattice)
        step, _ = u.leading()
        k = 0
        while k * step < rel and not term.is_zero():
            term = (term * u).with_trunc(rel)
            k += 1
            out = out + term * binomial(r, k)
        lat = _lattice_for(new_exp, out.lattice)
        return PuiseuxSeries({new_exp + e: c0r * c for e, c in out.coeffs.items()},
                             INF if rel is INF else new_exp + rel, lat)

    def sqrt(self, order=None) -> "PuiseuxSeries":
        return self.pow_rational(Fraction(1, 2), order)

    # -- calculus --------------------------------------------------------

    def derivative(self) -> "PuiseuxSeries":
        trunc = self.trunc if self.trunc is INF else self.trunc - 1
        return PuiseuxSeries({e - 1: c * e for e, c in self.coeffs.items() if e != 0},
                             trunc, self.lattice)

    def antiderivative(self) -> "PuiseuxSeries":
        """Termwise antiderivative with zero integration constant.

        Raises LogObstruction when a z^-1 term is present: the model's
        normalization forbids logarithms.  In exact mode any nonzero
        z^-1 coefficient raises; for float coefficients the test is
        relative to the series scale (identities that cancel the z^-1
        term exactly leave only rounding residue there, which is
        dropped).
        """
        res = self.coeffs.get(Fraction(-1), Fraction(0))
        if not coeff_is_zero(res):
            if is_exact(res):
                raise LogObstruction(
                    "antiderivative of a z^-1 term would introduce log z")
            scale = max((abs(to_complex(c)) for c in self.coeffs.values()),
                        default=0.0)
            if abs(to_complex(res)) > 1e-9 * scale:
                raise LogObstruction(
                    "antiderivative of a z^-1 term would introduce log z")
        trunc = self.trunc if self.trunc is INF else self.trunc + 1
        return PuiseuxSeries({e + 1: c / (e + 1)
                              for e, c in self.coeffs.items() if e != -1},
                             trunc, self.lattice)

    # -- composition -----------------------------------------------------

    def compose(self, inner: "PuiseuxSeries", order=None) -> "PuiseuxSeries":
        """self(inner(z)) for Taylor self and inner with ord(inner) >= 1."""
        if not self.is_taylor():
            raise SeriesError("composition requires a Taylor outer series")
        if not inner.is_zero() and inner.min_exp < 1:
            raise SeriesError("composition requires ord(inner) >= 1")
        trunc = INF
        if self.trunc is not INF:
            v = inner.min_exp if not inner.is_zero() else Fraction(1)
            trunc = self.trunc * v
        if inner.trunc is not INF:
            trunc = min(trunc, inner.trunc)
        if trunc is INF and order is not None:
            trunc = _as_exp(order)
        return self._compose_plain(inner, trunc)

    def _compose_plain(self, inner, trunc):
        out = PuiseuxSeries.zero(trunc, inner.lattice)
        power = PuiseuxSeries.one(trunc, inner.lattice)
        last = 0
        for e, c in sorted(self.coeffs.items()):
            k = int(e)
            for _ in range(k - last):
                power = power * inner
                if trunc is not INF:
                    power = power.with_trunc(trunc)
            last = k
            out = out + power * c
        return out

    def reversion(self, order) -> "PuiseuxSeries":
        """Compositional inverse g with self(g(z)) = z + O(z^order).

        Requires a Taylor series with f(0) = 0 and f'(0) != 0.
        """
        if not self.is_taylor():
            raise SeriesError("compositional inversion requires a Taylor series")
        if not coeff_is_zero(self.coeffs.get(Fraction(0), Fraction(0))):
            raise SeriesError("compositional inversion requires f(0) = 0")
        a1 = self.coeffs.get(Fraction(1), Fraction(0))
        if coeff_is_zero(a1):
            raise SeriesError("not invertible as a formal map: f'(0) = 0")
        N = int(_as_exp(order))
        inv_a1 = Fraction(1) / a1 if isinstance(a1, Fraction) else 1 / a1
        g = {Fraction(1): inv_a1}
        for m in range(2, N):
            gs = PuiseuxSeries(g, trunc=m + 1, lattice=1)
            comp = self._compose_plain(gs, Fraction(m + 1))
            resid = comp.coeffs.get(Fraction(m), Fraction(0))
            corr = -resid * inv_a1
            if not coeff_is_zero(corr):
                g[Fraction(m)] = corr
        return PuiseuxSeries(g, trunc=N, lattice=1)

    # -- evaluation ------------------------------------------------------

    def eval(self, z: complex, zpow: Callable[[complex, Fraction], complex] | None = None) -> complex:
        """Numeric value at z.  ``zpow(z, e)`` fixes the branch of z^e
        (principal branch by default)."""
        if zpow is None:
            zpow = _principal_pow
        total = 0j
        for e, c in self.coeffs.items():
            total += to_complex(c) * zpow(z, e)
        return total

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return str(v)
            if hasattr(v, "re") and hasattr(v, "im") and is_exact(v):
                return None  # handled below
            return v

        coeffs = []
        for e, c in self.terms():
            if is_exact(c):
                if isinstance(c, (int, Fraction)):
                    re_s, im_s = str(Fraction(c)), "0"
                else:
                    re_s, im_s = str(c.re), str(c.im)
                coeffs.append([str(e), [re_s, im_s]])
            else:
                cc = to_complex(c)
                coeffs.append([str(e), [cc.real, cc.imag]])
        return {
            "min_exp": str(self.min_exp),
            "trunc": "inf" if self.trunc is INF else str(self.trunc),
            "coeffs": coeffs,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, d: dict, lattice: int = 2) -> "PuiseuxSeries":
        from .coefficients import GaussianRational

        trunc = INF if d.get("trunc", "inf") == "inf" else Fraction(d["trunc"])
        coeffs = {}
        for e, val in d.get("coeffs", []):
            re_v, im_v = val
            if isinstance(re_v, str):
                re_f, im_f = Fraction(re_v), Fraction(im_v)
                c = re_f if im_f == 0 else GaussianRational(re_f, im_f)
            else:
                c = complex(re_v, im_v)
                if c.imag == 0:
                    c = complex(re_v, 0.0)
            coeffs[Fraction(e)] = c
        return cls(coeffs, trunc, lattice)

    @classmethod
    def from_json(cls, s: str, lattice: int = 2) -> "PuiseuxSeries":
        return cls.from_json_dict(json.loads(s), lattice)

    def __repr__(self):
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for e, c in self.terms()[:8]:
                parts.append(f"({c})z^{e}" if e != 0 else f"({c})")
            body = " + ".join(parts)
            if len(self.coeffs) > 8:
                body += " + ..."
        t = "" if self.trunc is INF else f" + O(z^{self.trunc})"
        return f"<PuiseuxSeries {body}{t}>"


def _principal_pow(z: complex, e: Fraction) -> complex:
    if e == 0:
        return 1.0 + 0j
    if e.denominator == 1 and -8 <= e <= 8:
        return complex(z) ** int(e)
    return complex(z) ** float(e)


def _lattice_for(e: Fraction, current: int) -> int:
    d = e.denominator
    if current % d == 0:
        return current
    return current * d // math.gcd(current, d)


def _coeff_root(c, r: Fraction):
    """Exact c**r when possible, float otherwise."""
    if isinstance(c, Fraction):
        if c == 1:
            return Fraction(1)
        if r.denominator == 1:
            return c ** int(r)
        num = _iroot(c.numerator, r.denominator)
        den = _iroot(c.denominator, r.denominator)
        if num is not None and den is not None and c > 0:
            return Fraction(num, den) ** r.numerator
        raise SeriesError(
            f"leading coefficient {c} has no exact rational {r.denominator}-th root")
    return to_complex(c) ** float(r)


def _iroot(n: int, k: int) -> int | None:
    if n < 0:
        return None
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == n:
            return cand
    return None


class TaylorSeries(PuiseuxSeries):
    """PuiseuxSeries restricted to integer exponents >= 0."""

    def __init__(self, coeffs=(), trunc=INF, lattice: int = 1):
        super().__init__(coeffs, trunc, lattice)
        for e in self.coeffs:
            if e < 0 or e.denominator != 1:
                raise SeriesError(f"TaylorSeries got exponent {e}")

    @classmethod
    def from_list(cls, vals, trunc=None) -> "TaylorSeries":
        t = len(vals) if trunc is None else trunc
        return cls({Fraction(i): v for i, v in enumerate(vals)}, t)


def as_taylor(s: PuiseuxSeries) -> TaylorSeries:
    """View a Puiseux series as Taylor, validating the invariant."""
    if isinstance(s, TaylorSeries):
        return s
    return TaylorSeries(s.coeffs, s.trunc)


def require_taylor(s: PuiseuxSeries, name: str) -> PuiseuxSeries:
    if not s.is_taylor():
        raise SeriesError(f"{name} must be holomorphic at 0 (a Taylor series)")
    return s


# ---------------------------------------------------------------------------
# Truncated series in eps with PuiseuxSeries coefficients.
# ---------------------------------------------------------------------------

class EpsSeries:
    """sum_n c_n(z) eps^n truncated in eps, c_n PuiseuxSeries.

    ``order`` is the number of known eps-orders (coefficients 0..order-1).
    Used for the formal-symbol algebra: transport/Riccati consistency,
    basis decomposition, and the turning-point reduction residuals.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[PuiseuxSeries]):
        cs = []
        for c in coeffs:
            if not isinstance(c, PuiseuxSeries):
                c = PuiseuxSeries({0: c}) if not coeff_is_zero(lift(c)) \
                    else PuiseuxSeries.zero()
            cs.append(c)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("EpsSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> PuiseuxSeries:
        return self.coeffs[n]

    def valuation(self) -> int:
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                return n
        return self.order

    @classmethod
    def zero(cls, order: int) -> "EpsSeries":
        return cls([PuiseuxSeries.zero()] * order)

    @classmethod
    def const(cls, s: PuiseuxSeries, order: int) -> "EpsSeries":
        return cls([s] + [PuiseuxSeries.zero()] * (order - 1))

    def truncated(self, order: int) -> "EpsSeries":
        return EpsSeries(self.coeffs[:order])

    def __add__(self, other: "EpsSeries") -> "EpsSeries":
        n = min(self.order, other.order)
        return EpsSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    def __sub__(self, other: "EpsSeries") -> "EpsSeries":
        n = min(self.order, other.order)
        return EpsSeries([self.coeffs[i] - other.coeffs[i] for i in range(n)])

    def __neg__(self):
        return EpsSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, EpsSeries):
            n = min(self.valuation() + other.order, other.valuation() + self.order)
            out = []
            for k in range(n):
                acc = PuiseuxSeries.zero()
                for i in range(max(0, k - other.order + 1), min(k, self.order - 1) + 1):
                    acc = acc + self.coeffs[i] * other.coeffs[k - i]
                out.append(acc)
            return EpsSeries(out)
        return EpsSeries([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def eps_shift(self, k: int) -> "EpsSeries":
        """Multiply by eps^k (k may be negative when the low orders vanish)."""
        if k >= 0:
            return EpsSeries([PuiseuxSeries.zero()] * k + list(self.coeffs))
        for j in range(-k):
            if j < self.order and not self.coeffs[j].is_zero():
                raise SeriesError("eps_shift below a nonzero order")
        return EpsSeries(self.coeffs[-k:])

    def dz(self) -> "EpsSeries":
        return EpsSeries([c.derivative() for c in self.coeffs])

    def recip(self) -> "EpsSeries":
        """1/self when the eps^0 coefficient is an invertible series."""
        c0inv = self.coeffs[0].inverse()
        n = self.order
        out = [c0inv]
        for k in range(1, n):
            acc = PuiseuxSeries.zero()
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(-(c0inv * acc))
        return EpsSeries(out)

    def binomial_pow(self, r) -> "EpsSeries":
        """(1 + U)^r where self = 1 + U with U of positive eps-valuation."""
        r = _as_exp(r)
        n = self.order
        one = PuiseuxSeries.one()
        u = EpsSeries([self.coeffs[0] - one] + list(self.coeffs[1:]))
        if not u.coeffs[0].is_zero():
            raise SeriesError("binomial_pow requires eps^0 coefficient equal to 1")
        out = EpsSeries.const(one, n)
        term = EpsSeries.const(one, n)
        for k in range(1, n):
            term = (term * u).truncated(n)
            if term.valuation() >= n:
                break
            out = out + term * binomial(r, k)
        return out

    def exp(self) -> "EpsSeries":
        """exp(self) for positive eps-valuation arguments."""
        if not self.coeffs[0].is_zero():
            raise SeriesError("exp requires positive eps-valuation")
        n = self.order
        out = EpsSeries.const(PuiseuxSeries.one(), n)
        term = EpsSeries.const(PuiseuxSeries.one(), n)
        for k in range(1, n):
            term = (term * self).truncated(n) * Fraction(1, k)
            if term.valuation() >= n:
                break
            out = out + term
        return out

    def map(self, fn) -> "EpsSeries":
        return EpsSeries([fn(c) for c in self.coeffs])

    def __repr__(self):
        return f"<EpsSeries order={self.order}>"
