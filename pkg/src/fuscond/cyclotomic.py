"""Exact cyclotomic arithmetic over rational coefficient vectors.

Elements of Q(zeta_N) are stored as polynomials in zeta_N reduced modulo the
N-th cyclotomic polynomial, with fractions.Fraction coefficients.  Binary
operations lift both operands to the lcm order; when that order would exceed
ORDER_CAP the operation falls back to high-precision complex floats
(mpmath, at whatever working precision the caller has configured).
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

ORDER_CAP = 2400

Poly = tuple  # little-endian Fraction coefficients

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _padd(a, b):
    n = max(len(a), len(b))
    out = [_ZERO] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pmul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _pdivmod(a, b):
    # exact division with remainder over Q; b must be nonzero
    a = list(a)
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / Fraction(b[-1])
    while True:
        _trim(a)
        if not a or len(a) < len(b):
            break
        d = len(a) - len(b)
        c = a[-1] * inv_lead
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] -= c * y
    return _trim(q), a


def _pmod(a, b):
    return _pdivmod(a, b)[1]


def _pxgcd(a, b):
    # extended gcd over Q[x]: returns (g, u, v) with u*a + v*b = g
    r0, r1 = list(a), list(b)
    u0, u1 = [_ONE], []
    v0, v1 = [], [_ONE]
    while _trim(list(r1)):
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _padd(u0, [-c for c in _pmul(q, u1)])
        v0, v1 = v1, _padd(v0, [-c for c in _pmul(q, v1)])
    return r0, u0, v0


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Poly:
    """Coefficients of the n-th cyclotomic polynomial, little-endian."""
    if n == 1:
        return (Fraction(-1), Fraction(1))
    f = [_ZERO] * (n + 1)
    f[0], f[n] = Fraction(-1), Fraction(1)
    poly = f
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _pdivmod(poly, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(poly)


@lru_cache(maxsize=None)
def _euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _zeta_powers(order: int, prec: int):
    # cached numeric zeta powers keyed by working precision
    return _zeta_powers_cached(order, prec)


@lru_cache(maxsize=64)
def _zeta_powers_cached(order: int, prec: int):
    with mp.workdps(prec):
        z = mp.e ** (2j * mp.pi / order)
        return tuple(z**k for k in range(order))


class Cyc:
    """An element of the cyclotomic field Q(zeta_order)."""

    __slots__ = ("order", "coeffs")
    __hash__ = None

    def __init__(self, order: int, coeffs, reduce: bool = True):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        c = [Fraction(x) for x in coeffs]
        if reduce:
            c = _pmod(c, list(cyclotomic_polynomial(order)))
        self.coeffs = tuple(c)
        # collapse rational values to order 1 so lcm growth stays small
        if order > 1 and all(x == 0 for x in self.coeffs[1:]):
            self.order = 1
            self.coeffs = self.coeffs[:1]
        else:
            self.order = order

    # -- constructors ----------------------------------------------------
    @staticmethod
    def rational(q) -> "Cyc":
        q = Fraction(q)
        return Cyc(1, [q] if q else [], reduce=False)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyc":
        k %= n
        poly = [_ZERO] * k + [_ONE]
        return Cyc(n, poly)

    @staticmethod
    def sqrt_int(m: int) -> "Cyc":
        """Exact square root of a nonnegative integer."""
        if m < 0:
            raise ValueError("sqrt_int needs a nonnegative integer")
        if m == 0:
            return Cyc.rational(0)
        square, free = 1, 1
        rest = m
        p = 2
        while p * p <= rest:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            square *= p ** (e // 2)
            if e % 2:
                free *= p
            p += 1
        if rest > 1:
            free *= rest
        out = Cyc.rational(square)
        for p in _prime_factors(free):
            out = out * _sqrt_prime(p)
        return out

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return self.order == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coeffs[0] if self.coeffs else _ZERO

    def to_mpc(self, prec: int | None = None) -> mp.mpc:
        prec = prec or mp.mp.dps
        zp = _zeta_powers(self.order, prec)
        with mp.workdps(prec):
            total = mp.mpc(0)
            for k, c in enumerate(self.coeffs):
                if c:
                    total += mp.mpf(c.numerator) / c.denominator * zp[k]
            return total

    def __complex__(self) -> complex:
        return complex(self.to_mpc())

    # -- structure --------------------------------------------------------
    def _lift_coeffs(self, order: int) -> list:
        """Reduced coefficient list of this element viewed in Q(zeta_order)."""
        if order == self.order:
            return list(self.coeffs)
        step = order // self.order
        poly = [_ZERO] * (len(self.coeffs) * step or 1)
        for k, c in enumerate(self.coeffs):
            poly[k * step] = c
        return _pmod(poly, list(cyclotomic_polynomial(order)))

    @staticmethod
    def _common(a: "Cyc", b: "Cyc"):
        n = math.lcm(a.order, b.order)
        if n > ORDER_CAP:
            return None
        return n, a._lift_coeffs(n), b._lift_coeffs(n)

    def conj(self) -> "Cyc":
        if self.order == 1:
            return self
        poly = [_ZERO] * self.order
        for k, c in enumerate(self.coeffs):
            poly[(self.order - k) % self.order] += c
        return Cyc(self.order, poly)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyc):
            return other
        if isinstance(other, numbers.Integral):  # int and numpy ints
            return Cyc.rational(int(other))
        if isinstance(other, numbers.Rational):
            return Cyc.rational(Fraction(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return self.to_mpc() + other
        pair = Cyc._common(self, o)
        if pair is None:
            return self.to_mpc() + o.to_mpc()
        n, a, b = pair
        return Cyc(n, _padd(a, b), reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.order, [-c for c in self.coeffs], reduce=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return self.to_mpc() - other
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return self.to_mpc() * other
        pair = Cyc._common(self, o)
        if pair is None:
            return self.to_mpc() * o.to_mpc()
        n, a, b = pair
        return Cyc(n, _pmul(a, b))

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        g, u, _ = _pxgcd(list(self.coeffs), list(cyclotomic_polynomial(self.order)))
        scale = 1 / g[0]
        return Cyc(self.order, [c * scale for c in u])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return self.to_mpc() / other
        if o.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyc.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        pair = Cyc._common(self, o)
        if pair is None:
            return abs(self.to_mpc() - o.to_mpc()) < mp.mpf(10) ** (-mp.mp.dps + 8)
        _, a, b = pair
        return a == b

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.as_fraction()})"
        terms = [
            f"{c}*z{self.order}^{k}" for k, c in enumerate(self.coeffs) if c
        ]
        return "Cyc(" + " + ".join(terms) + ")"


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> Cyc:
    if p == 2:
        return Cyc.zeta(8, 1) + Cyc.zeta(8, 7)
    # quadratic Gauss sum: sum of legendre(a,p) zeta_p^a squares to (-1)^((p-1)/2) p
    g = Cyc.rational(0)
    for a in range(1, p):
        leg = pow(a, (p - 1) // 2, p)
        g = g + (Cyc.zeta(p, a) if leg == 1 else -Cyc.zeta(p, a))
    if p % 4 == 1:
        return g
    return Cyc.zeta(4, 3) * g  # -i * (i sqrt(p))


def _prime_factors(n: int):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def as_mpc(x, prec: int | None = None) -> mp.mpc:
    """Coerce any supported scalar to an mpmath complex number."""
    if isinstance(x, Cyc):
        return x.to_mpc(prec)
    if isinstance(x, Fraction):
        return mp.mpc(mp.mpf(x.numerator) / x.denominator)
    if isinstance(x, numbers.Integral):
        return mp.mpc(int(x))
    if isinstance(x, numbers.Real) and not isinstance(x, float):
        return mp.mpc(float(x))
    return mp.mpc(x)


def scalar_is_exact(x) -> bool:
    return isinstance(x, (Cyc, int, Fraction))


def exact_scalar(x):
    """View of x as a Cyc when exactly representable, else None."""
    if isinstance(x, Cyc):
        return x
    if isinstance(x, numbers.Integral):
        return Cyc.rational(int(x))
    if isinstance(x, numbers.Rational):
        return Cyc.rational(Fraction(x))
    return None
