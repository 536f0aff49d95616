"""
Scalars for generic (formal) q: Laurent polynomials over Z and the field Q(q).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclotomic import Cyclotomic, poly_divmod, poly_mul, _trim
from .errors import DivisionByZero


class LaurentPoly:
    """A finite sum of c_k q^k with integer (or rational) coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: c for k, c in terms.items() if c}

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls({0: c})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

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
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self.terms) != 1:
                raise DivisionByZero("only monomials are units in Z[q, 1/q]")
            (k, c), = self.terms.items()
            if c not in (1, -1):
                raise DivisionByZero("only monomials are units in Z[q, 1/q]")
            return LaurentPoly({k * e: c ** (-e)})
        result = LaurentPoly.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def low(self) -> int:
        return min(self.terms) if self.terms else 0

    def high(self) -> int:
        return max(self.terms) if self.terms else 0

    def to_poly(self):
        """Return (shift, coefficient list) with self = q^shift * poly."""
        lo = self.low()
        if not self.terms:
            return 0, []
        coeffs = [0] * (self.high() - lo + 1)
        for k, c in self.terms.items():
            coeffs[k - lo] = c
        return lo, coeffs

    @classmethod
    def from_poly(cls, shift, coeffs) -> LaurentPoly:
        return cls({shift + i: c for i, c in enumerate(coeffs)})

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Division in Z[q, 1/q]; raises if the quotient is not a Laurent polynomial."""
        if other.is_zero():
            raise DivisionByZero("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        s1, p1 = self.to_poly()
        s2, p2 = other.to_poly()
        quot, rem = poly_divmod(p1, p2)
        if rem:
            raise ArithmeticError("Laurent division is not exact")
        coeffs = [int(c) if Fraction(c).denominator == 1 else c for c in quot]
        return LaurentPoly.from_poly(s1 - s2, coeffs)

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c)) if Fraction(c).denominator == 1 else 1
        return g or 1

    def evaluate(self, value):
        """Substitute q := value (a Cyclotomic root of unity or rational)."""
        total = None
        for k, c in self.terms.items():
            term = (value ** k) * c
            total = term if total is None else total + term
        if total is None:
            return value * 0
        return total

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            elif mono:
                parts.append(f"{c}*{mono}")
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"laurent": [[k, str(self.terms[k])] for k in sorted(self.terms)]}


def _poly_gcd(a, b):
    a, b = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


class RationalFunction:
    """An element of Q(q), kept as num/den with gcd removed and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,), _normalized=False):
        num = _trim([Fraction(c) for c in num])
        den = _trim([Fraction(c) for c in den])
        if not den:
            raise DivisionByZero("zero denominator")
        if not _normalized:
            if not num:
                den = [Fraction(1)]
            else:
                g = _poly_gcd(num, den)
                if len(g) > 1:
                    num, _ = poly_divmod(num, g)
                    den, _ = poly_divmod(den, g)
                lead = den[-1]
                num = [c / lead for c in num]
                den = [c / lead for c in den]
        self.num = tuple(num)
        self.den = tuple(den)

    @classmethod
    def from_laurent(cls, p) -> RationalFunction:
        if isinstance(p, (int, Fraction)):
            return cls([p])
        shift, coeffs = p.to_poly()
        if shift >= 0:
            return cls([0] * shift + list(coeffs))
        return cls(coeffs, [0] * (-shift) + [1])

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == self.den

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction([other])
        if isinstance(other, LaurentPoly):
            return RationalFunction.from_laurent(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            n = max(len(self.num), len(other.num))
            num = [(self.num[i] if i < len(self.num) else 0) + (other.num[i] if i < len(other.num) else 0)
                   for i in range(n)]
            return RationalFunction(num, self.den)
        a = poly_mul(self.num, other.den)
        b = poly_mul(other.num, self.den)
        n = max(len(a), len(b))
        num = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        return RationalFunction(num, poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction([-c for c in self.num], self.den, _normalized=True)

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
            return RationalFunction([])
        return RationalFunction(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = RationalFunction([1])
        for _ in range(e):
            result = result * self
        return result

    def __repr__(self):
        return f"RationalFunction({list(map(str, self.num))}, {list(map(str, self.den))})"


Q = LaurentPoly.monomial(1)


def specialize(p: LaurentPoly, order: int, power: int = 1) -> Cyclotomic:
    """Evaluate at q = zeta_order^power."""
    total = Cyclotomic.zero(order)
    for k, c in p.terms.items():
        total = total + Cyclotomic.zeta(order, k * power) * c
    return total
