"""
Exact arithmetic in the cyclotomic field Q(zeta_N).

An element is stored as an integer coefficient vector of length phi(N) over a
common positive denominator, reduced modulo the N-th cyclotomic polynomial.
Reduction is canonical, so equality and zero tests are coefficient-wise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
import json

from .errors import DivisionByZero, IncompatibleOrder


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_divmod(num, den):
    """Polynomial division over Q on coefficient lists (low degree first)."""
    num = [Fraction(c) for c in num]
    den = _trim(den)
    if not den:
        raise DivisionByZero("polynomial division by zero")
    lead = Fraction(den[-1])
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    while len(_trim(num)) >= len(den):
        num = _trim(num)
        shift = len(num) - len(den)
        c = num[-1] / lead
        quot[shift] = c
        for i, d in enumerate(den):
            num[i + shift] -= c * d
    return _trim(quot), _trim(num)


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first.

    Computed as (x^n - 1) divided by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(c) for c in num)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce_int_poly(coeffs, n):
    """Reduce an integer polynomial modulo the monic Phi_n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = list(coeffs)
    for top in range(len(c) - 1, deg - 1, -1):
        lead = c[top]
        if lead:
            shift = top - deg
            for i in range(deg + 1):
                c[shift + i] -= lead * phi[i]
    c = c[:deg]
    if len(c) < deg:
        c.extend([0] * (deg - len(c)))
    return c


@lru_cache(maxsize=None)
def _zeta_power(n, k):
    k %= n
    return tuple(_reduce_int_poly([0] * k + [1], n))


class Cyclotomic:
    """An element of Q(zeta_N) for a fixed primitive N-th root of unity zeta_N."""

    __slots__ = ("order", "_nums", "_den", "_hash")

    def __init__(self, order, nums, den=1, _reduced=False):
        self.order = order
        if not _reduced:
            if len(nums) != euler_phi(order):
                nums = _reduce_int_poly(nums, order)
            if den < 0:
                nums = [-x for x in nums]
                den = -den
            if den == 0:
                raise DivisionByZero("zero denominator")
            g = den
            for x in nums:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if not any(nums):
                g = den
            if g != 1:
                nums = [x // g for x in nums]
                den //= g
            nums = tuple(nums)
        self._nums = nums
        self._den = den
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> Cyclotomic:
        return cls(order, _zeta_power(order, power), 1, _reduced=True)

    @classmethod
    def from_rational(cls, order: int, value) -> Cyclotomic:
        value = Fraction(value)
        nums = [0] * euler_phi(order)
        nums[0] = value.numerator
        return cls(order, nums, value.denominator)

    @classmethod
    def from_coeffs(cls, order: int, coeffs) -> Cyclotomic:
        """Build from rational coefficients of powers of zeta (any length)."""
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        return cls(order, _reduce_int_poly(nums, order) if len(nums) != euler_phi(order) else nums, den)

    @classmethod
    def one(cls, order: int) -> Cyclotomic:
        return cls.from_rational(order, 1)

    @classmethod
    def zero(cls, order: int) -> Cyclotomic:
        return cls.from_rational(order, 0)

    # inspection -----------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(x, self._den) for x in self._nums)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_one(self) -> bool:
        return self._den == 1 and self._nums[0] == 1 and not any(self._nums[1:])

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                m = self.order * other.order // gcd(self.order, other.order)
                return embed_order(self, m) == embed_order(other, m)
            return self._den == other._den and self._nums == other._nums
        if isinstance(other, (int, Fraction)):
            return self == Cyclotomic.from_rational(self.order, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._nums[0], self._den))
            else:
                self._hash = hash((self.order, self._nums, self._den))
        return self._hash

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise IncompatibleOrder(
                    f"orders {self.order} and {other.order} differ; embed first")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.order, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self._den == other._den:
            return Cyclotomic(self.order, [a + b for a, b in zip(self._nums, other._nums)], self._den)
        return Cyclotomic(
            self.order,
            [a * other._den + b * self._den for a, b in zip(self._nums, other._nums)],
            self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-x for x in self._nums), self._den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Cyclotomic.zero(self.order)
        if self.is_rational():
            a = self._nums[0]
            return Cyclotomic(self.order, [a * x for x in other._nums], self._den * other._den)
        if other.is_rational():
            a = other._nums[0]
            return Cyclotomic(self.order, [a * x for x in self._nums], self._den * other._den)
        prod = poly_mul(self._nums, other._nums)
        return Cyclotomic(self.order, _reduce_int_poly(prod, self.order), self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        return cyc_inv(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * cyc_inv(other)

    def __rtruediv__(self, other):
        return cyc_inv(self) * other

    def __pow__(self, e: int):
        if e < 0:
            return cyc_inv(self) ** (-e)
        result = Cyclotomic.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # display --------------------------------------------------------------

    def __repr__(self):
        return f"Cyclotomic({self.order}, {str(self)!r})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else (f"z{self.order}" if k == 1 else f"z{self.order}^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    # serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order,
                "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> Cyclotomic:
        if isinstance(data, str):
            data = json.loads(data)
        order = int(data["order"])
        coeffs = [Fraction(int(n), int(d)) for n, d in data["coeffs"]]
        if len(coeffs) != euler_phi(order):
            raise ValueError("coefficient vector length must equal phi(order)")
        return cls.from_coeffs(order, coeffs)


def cyc_add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def cyc_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def _poly_xgcd(a, b):
    """Return (g, s) with s*a = g modulo b, g monic gcd (coefficients Fractions)."""
    r0, r1 = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        qs = poly_mul(q, s1)
        n = max(len(s0), len(qs))
        s0, s1 = s1, _trim([(s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0)
                            for i in range(n)])
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0]


def cyc_inv(a: Cyclotomic) -> Cyclotomic:
    """Multiplicative inverse via the extended Euclidean algorithm with Phi_N."""
    if a.is_zero():
        raise DivisionByZero("inverse of zero in a cyclotomic field")
    if a.is_rational():
        return Cyclotomic.from_rational(a.order, Fraction(a._den, a._nums[0]))
    g, s = _poly_xgcd(a._nums, cyclotomic_polynomial(a.order))
    assert len(g) == 1, "Phi_N is irreducible, gcd must be 1"
    s = [c * a._den for c in s]
    return Cyclotomic.from_coeffs(a.order, s)


def embed_order(a: Cyclotomic, m: int) -> Cyclotomic:
    """Express ``a`` in Q(zeta_m) using zeta_N = zeta_m^(m/N)."""
    n = a.order
    if m % n:
        raise IncompatibleOrder(f"order {n} does not divide {m}")
    if m == n:
        return a
    step = m // n
    nums = [0] * (step * (len(a._nums) - 1) + 1)
    for k, c in enumerate(a._nums):
        nums[k * step] = c
    return Cyclotomic(m, _reduce_int_poly(nums, m), a._den)


def zeta_order(n: int, power: int) -> int:
    """Multiplicative order of zeta_n^power."""
    return n // gcd(power % n, n) if power % n else 1
