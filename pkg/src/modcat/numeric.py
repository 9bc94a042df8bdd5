"""Exact arithmetic kernels.

Three coefficient domains are provided:

* ``CycNum`` -- an element of the cyclotomic field Q(zeta_L), stored in
  canonical form over the power basis {zeta_L^e : 0 <= e < phi(L)} with an
  integer coefficient vector over a common positive denominator.  Equality
  of value coincides with equality of the canonical form, so the zero test
  is exact.  Arithmetic between different orders lifts both operands to
  the least common multiple of the orders.

* ``QRatFn`` -- a ratio of Laurent polynomials over Q in a formal variable
  v standing for a square root of q, kept reduced with a monic denominator
  that has a nonzero constant term.  The bar involution sends v to 1/v.

* plain ``complex`` -- the float mode used for cross-checks only, with a
  global default tolerance.  Floats never decide a pass/fail verdict when
  an exact route exists.
"""

from __future__ import annotations

import cmath
import os
from fractions import Fraction
from functools import lru_cache
from math import gcd

DEFAULT_TOLERANCE = 1e-9


def default_tolerance() -> float:
    env = os.environ.get("MODCAT_TOLERANCE")
    return float(env) if env else DEFAULT_TOLERANCE


def approx_eq(a: complex, b: complex, tol: float | None = None) -> bool:
    if tol is None:
        tol = default_tolerance()
    return abs(a - b) <= tol


# --------------------------------------------------------------------------
# integer polynomial helpers for cyclotomic polynomials (ascending coeffs)

def _zpoly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _zpoly_divexact(num: list[int], den: list[int]) -> list[int]:
    # exact division by a monic-up-to-sign integer polynomial
    num = num[:]
    dn = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        q, r = divmod(num[i], lead)
        assert r == 0
        out[i - dn] = q
        if q:
            for j, y in enumerate(den):
                num[i - dn + j] -= q * y
    assert all(x == 0 for x in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Coefficients of the cyclotomic polynomial of the given order, ascending."""
    if order == 1:
        return (-1, 1)
    poly = [-1] + [0] * (order - 1) + [1]          # x^order - 1
    for d in range(1, order):
        if order % d == 0:
            poly = _zpoly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _phi(order: int) -> int:
    return len(cyclotomic_polynomial(order)) - 1


@lru_cache(maxsize=None)
def _power_rows(order: int) -> tuple[tuple[int, ...], ...]:
    """Row e = coordinates of zeta^e over the power basis, e < max(order, 2 phi - 1)."""
    phi = _phi(order)
    top = max(order, 2 * phi - 1)
    rows: list[tuple[int, ...]] = []
    for e in range(phi):
        rows.append(tuple(int(i == e) for i in range(phi)))
    # x^phi = -(lower part of the cyclotomic polynomial), which is monic
    head = tuple(-c for c in cyclotomic_polynomial(order)[:phi])
    for e in range(phi, top):
        prev = rows[e - 1]
        carry = prev[phi - 1]
        shifted = [0] + list(prev[:phi - 1])
        if carry:
            shifted = [s + carry * h for s, h in zip(shifted, head)]
        rows.append(tuple(shifted))
    return tuple(rows)


def _reduce_exponents(order: int, raw: dict[int, int]) -> list[int]:
    """Canonical coordinates of sum raw[e] * zeta^e (integer coefficients)."""
    phi = _phi(order)
    rows = _power_rows(order)
    out = [0] * phi
    for e, c in raw.items():
        if not c:
            continue
        row = rows[e % order] if e >= order or e < 0 else rows[e]
        for i, r in enumerate(row):
            if r:
                out[i] += c * r
    return out


class CycNum:
    """Exact element of a cyclotomic field, in canonical form."""

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, num: tuple[int, ...], den: int,
                 _normalized: bool = False):
        if not _normalized:
            g = den
            for x in num:
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                num = tuple(x // g for x in num)
                den //= g
            if all(x == 0 for x in num):
                order, num, den = 1, (0,), 1
        self.order = order
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(value) -> "CycNum":
        f = Fraction(value)
        return CycNum(1, (f.numerator,), f.denominator)

    @staticmethod
    def zero() -> "CycNum":
        return CycNum(1, (0,), 1, _normalized=True)

    @staticmethod
    def one() -> "CycNum":
        return CycNum(1, (1,), 1, _normalized=True)

    @staticmethod
    def root_of_unity(order: int, exponent: int) -> "CycNum":
        """zeta_order^exponent, stored at the smallest sufficient order."""
        exponent %= order
        g = gcd(exponent, order)
        if g > 1:
            order //= g
            exponent //= g
        vec = _reduce_exponents(order, {exponent: 1})
        return CycNum(order, tuple(vec), 1)

    # -- canonical form helpers --------------------------------------------

    def _lift_num(self, order: int) -> list[int]:
        """Integer numerator vector of self lifted into Q(zeta_order)."""
        if order == self.order:
            return list(self.num)
        step = order // self.order
        raw = {e * step: c for e, c in enumerate(self.num) if c}
        return _reduce_exponents(order, raw)

    def _common(self, other: "CycNum") -> tuple[int, list[int], list[int]]:
        L = self.order * other.order // gcd(self.order, other.order)
        return L, self._lift_num(L), other._lift_num(L)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self.num[0], self.den)

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, CycNum):
            return value
        if isinstance(value, (int, Fraction)):
            return CycNum.from_rational(value)
        return NotImplemented

    def __add__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        L, a, b = self._common(other)
        da, db = self.den, other.den
        g = gcd(da, db)
        ma, mb = db // g, da // g
        nums = tuple(x * ma + y * mb for x, y in zip(a, b))
        return CycNum(L, nums, da * ma)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, tuple(-x for x in self.num), self.den,
                      _normalized=True)

    def __sub__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return CycNum.zero()
        L, a, b = self._common(other)
        conv: dict[int, int] = {}
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        k = i + j
                        conv[k] = conv.get(k, 0) + x * y
        nums = _reduce_exponents(L, conv)
        return CycNum(L, tuple(nums), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        L = self.order
        phi = _phi(L)
        mod = [Fraction(c) for c in cyclotomic_polynomial(L)]
        poly = [Fraction(x, self.den) for x in self.num]
        inv = _poly_modular_inverse(poly, mod)
        den = 1
        for c in inv:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [0] * phi
        for i, c in enumerate(inv):
            nums[i] = int(c * den)
        return CycNum(L, tuple(nums), den)

    def __truediv__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycNum.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def conjugate(self) -> "CycNum":
        """Complex conjugation: zeta^e -> zeta^(-e)."""
        L = self.order
        raw = {(-e) % L: c for e, c in enumerate(self.num) if c}
        nums = _reduce_exponents(L, raw)
        return CycNum(L, tuple(nums), self.den)

    bar = conjugate  # the bar involution restricts to conjugation here

    # -- comparisons and export ----------------------------------------------

    def __eq__(self, other):
        other = CycNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == other.order:
            return self.num == other.num and self.den == other.den
        L, a, b = self._common(other)
        return self.den == other.den and a == b

    __hash__ = None  # mutable-free but equality crosses orders; not hashable

    def to_complex(self) -> complex:
        acc = 0j
        L = self.order
        for e, c in enumerate(self.num):
            if c:
                acc += c * cmath.exp(2j * cmath.pi * e / L)
        return acc / self.den

    def to_json_obj(self):
        return {
            "order": self.order,
            "coeffs": [[e, str(Fraction(c, self.den))]
                       for e, c in enumerate(self.num) if c],
        }

    @staticmethod
    def from_json_obj(obj) -> "CycNum":
        order = int(obj["order"])
        phi = _phi(order)
        fracs = {int(e): Fraction(s) for e, s in obj["coeffs"]}
        den = 1
        for f in fracs.values():
            den = den * f.denominator // gcd(den, f.denominator)
        nums = [0] * phi
        for e, f in fracs.items():
            nums[e] = int(f * den)
        return CycNum(order, tuple(nums), den)

    def __repr__(self) -> str:
        if self.is_zero():
            return "CycNum(0)"
        terms = []
        for e, c in enumerate(self.num):
            if c:
                coeff = Fraction(c, self.den)
                terms.append(f"{coeff}*z{self.order}^{e}" if e else f"{coeff}")
        return "CycNum(" + " + ".join(terms) + ")"


def _poly_modular_inverse(poly: list[Fraction],
                          mod: list[Fraction]) -> list[Fraction]:
    """Inverse of poly modulo mod via the extended Euclidean algorithm."""

    def strip(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def pdivmod(a, b):
        a = a[:]
        q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
        inv_lead = 1 / b[-1]
        while len(a) >= len(b) and strip(a):
            shift = len(a) - len(b)
            factor = a[-1] * inv_lead
            q[shift] = factor
            for i, c in enumerate(b):
                a[shift + i] -= factor * c
            strip(a)
        return strip(q), a

    r0, r1 = mod[:], strip(poly[:])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while True:
        q, r = pdivmod(r0, r1)
        r = strip(r)
        if not r:
            break
        qs = _fq_mul(q, s1)
        s = [x - y for x, y in
             zip(s0 + [Fraction(0)] * max(0, len(qs) - len(s0)),
                 qs + [Fraction(0)] * max(0, len(s0) - len(qs)))]
        r0, r1, s0, s1 = r1, r, s1, strip(s)
    if len(r1) != 1:
        raise ZeroDivisionError("element is a zero divisor (not invertible)")
    lead = r1[0]
    return [c / lead for c in s1]


def _fq_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def epsilon_power(a, lacing: int, kappa: int) -> CycNum:
    """eps^a for eps = exp(pi i / (lacing * kappa)), a any exact rational."""
    f = Fraction(a)
    return CycNum.root_of_unity(2 * lacing * kappa * f.denominator,
                                f.numerator)


def sqrt_of_int(n: int) -> CycNum:
    """The positive square root of a positive integer, as an exact CycNum.

    Uses quadratic Gauss sums: sqrt(p) lies in Q(zeta_p) for p = 1 mod 4,
    in Q(zeta_{4p}) for p = 3 mod 4, and sqrt(2) = zeta_8 + zeta_8^{-1}.
    """
    if n <= 0:
        raise ValueError("square root of a non-positive integer")
    square = 1
    rest = n
    for p in _prime_factors(n):
        while rest % (p * p) == 0:
            rest //= p * p
            square *= p
    result = CycNum.from_rational(square)
    for p in _prime_factors(rest):
        if p == 2:
            root = CycNum.root_of_unity(8, 1) + CycNum.root_of_unity(8, 7)
        else:
            gauss = CycNum.zero()
            for t in range(p):
                gauss = gauss + CycNum.root_of_unity(p, (t * t) % p)
            if p % 4 == 1:
                root = gauss
            else:
                root = CycNum.root_of_unity(4, 3) * gauss  # -i * (i sqrt p)
        result = result * root
    value = result.to_complex()
    assert abs(value - n ** 0.5) < 1e-6, "wrong branch of the square root"
    return result


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --------------------------------------------------------------------------
# Laurent polynomials and rational functions in v = q^(1/2)


class LaurentPoly:
    """Laurent polynomial over Q in the formal variable v."""

    __slots__ = ("low", "coeffs")

    def __init__(self, low: int = 0, coeffs: tuple[Fraction, ...] = ()):
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        while coeffs and coeffs[0] == 0:
            coeffs = coeffs[1:]
            low += 1
        if not coeffs:
            low = 0
        self.low = low
        self.coeffs = coeffs

    @staticmethod
    def constant(value) -> "LaurentPoly":
        f = Fraction(value)
        return LaurentPoly(0, (f,)) if f else LaurentPoly()

    @staticmethod
    def monomial(exponent: int, value=1) -> "LaurentPoly":
        f = Fraction(value)
        return LaurentPoly(exponent, (f,)) if f else LaurentPoly()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.low + i, c

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly)
                and self.low == other.low and self.coeffs == other.coeffs)

    __hash__ = None

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [Fraction(0)] * (high - low + 1)
        for e, c in self.items():
            out[e - low] += c
        for e, c in other.items():
            out[e - low] += c
        return LaurentPoly(low, tuple(out))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] += x * y
        return LaurentPoly(self.low + other.low, tuple(out))

    def scale(self, value) -> "LaurentPoly":
        f = Fraction(value)
        if not f:
            return LaurentPoly()
        return LaurentPoly(self.low, tuple(c * f for c in self.coeffs))

    def bar(self) -> "LaurentPoly":
        """v -> 1/v."""
        return LaurentPoly(-self.high, tuple(reversed(self.coeffs)))

    def eval_eps_half(self, lacing: int, kappa: int) -> CycNum:
        """Value at v = eps^(1/2)."""
        acc = CycNum.zero()
        for e, c in self.items():
            acc = acc + epsilon_power(Fraction(e, 2), lacing, kappa) * c
        return acc

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}*v^{e}" if e else f"{c}"
                          for e, c in self.items())


def _ordinary(p: LaurentPoly) -> list[Fraction]:
    return list(p.coeffs)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    def strip(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = strip(a[:]), strip(b[:])
    while b:
        inv = 1 / b[-1]
        r = a[:]
        while len(r) >= len(b) and strip(r):
            shift = len(r) - len(b)
            f = r[-1] * inv
            for i, c in enumerate(b):
                r[shift + i] -= f * c
            strip(r)
        a, b = b, strip(r)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _poly_divexact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - 1, len(b) - 2, -1):
        f = a[i] * inv
        out[i - len(b) + 1] = f
        if f:
            for j, c in enumerate(b):
                a[i - len(b) + 1 + j] -= f * c
    assert all(x == 0 for x in a)
    return out


class PoleAtEpsilonError(ArithmeticError):
    """A rational function was evaluated at a zero of its denominator."""

    def __init__(self, denominator: "LaurentPoly", lacing: int, kappa: int):
        self.denominator = denominator
        super().__init__(
            f"pole at the root of unity (lacing {lacing}, kappa {kappa}): "
            f"denominator {denominator!r} vanishes")


class QRatFn:
    """Reduced ratio of Laurent polynomials in v over Q."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = LaurentPoly()
            self.den = LaurentPoly.constant(1)
            return
        # shift all v-powers of the denominator into the numerator
        num = LaurentPoly(num.low - den.low, num.coeffs)
        den = LaurentPoly(0, den.coeffs)
        g = _poly_gcd(_ordinary(num), _ordinary(den))
        if len(g) > 1:
            new_num = _poly_divexact(_ordinary(num), g)
            new_den = _poly_divexact(_ordinary(den), g)
            num = LaurentPoly(num.low, tuple(new_num))
            den = LaurentPoly(0, tuple(new_den))
        lead = den.coeffs[-1]
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_rational(value) -> "QRatFn":
        return QRatFn(LaurentPoly.constant(value), LaurentPoly.constant(1))

    @staticmethod
    def zero() -> "QRatFn":
        return QRatFn.from_rational(0)

    @staticmethod
    def one() -> "QRatFn":
        return QRatFn.from_rational(1)

    @staticmethod
    def monomial(exponent: int, value=1) -> "QRatFn":
        return QRatFn(LaurentPoly.monomial(exponent, value),
                      LaurentPoly.constant(1))

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == LaurentPoly.constant(1)

    # -- arithmetic --------------------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, QRatFn):
            return value
        if isinstance(value, (int, Fraction)):
            return QRatFn.from_rational(value)
        return NotImplemented

    def __add__(self, other):
        other = QRatFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QRatFn(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = QRatFn.__new__(QRatFn)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = QRatFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QRatFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QRatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QRatFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return QRatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = QRatFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return (QRatFn.one() / self) ** (-exponent)
        out = QRatFn.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        other = QRatFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def bar(self) -> "QRatFn":
        """The involution v -> 1/v with rational coefficients untouched."""
        return QRatFn(self.num.bar(), self.den.bar())

    def eval_at_epsilon(self, lacing: int, kappa: int) -> CycNum:
        """Value at v = eps^(1/2); raises PoleAtEpsilonError on a pole."""
        den_val = self.den.eval_eps_half(lacing, kappa)
        if den_val.is_zero():
            raise PoleAtEpsilonError(self.den, lacing, kappa)
        num_val = self.num.eval_eps_half(lacing, kappa)
        return num_val / den_val

    def to_complex(self, v: complex) -> complex:
        num = sum(complex(c) * v ** e for e, c in self.num.items())
        den = sum(complex(c) * v ** e for e, c in self.den.items())
        return num / den

    def to_json_obj(self):
        return {
            "num": [[e, str(c)] for e, c in self.num.items()],
            "den": [[e, str(c)] for e, c in self.den.items()],
        }

    @staticmethod
    def from_json_obj(obj) -> "QRatFn":
        def build(pairs):
            if not pairs:
                return LaurentPoly()
            low = min(e for e, _ in pairs)
            high = max(e for e, _ in pairs)
            coeffs = [Fraction(0)] * (high - low + 1)
            for e, s in pairs:
                coeffs[e - low] = Fraction(s)
            return LaurentPoly(low, tuple(coeffs))

        return QRatFn(build(obj["num"]), build(obj["den"]))

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f"QRatFn({self.num!r})"
        return f"QRatFn(({self.num!r}) / ({self.den!r}))"


def q_number(n: int, d: int = 1) -> QRatFn:
    """The q-number [n] with symmetrizer d: (q^(nd) - q^(-nd)) / (q^d - q^(-d))."""
    if n < 0:
        return -q_number(-n, d)
    acc = LaurentPoly()
    for j in range(n):
        acc = acc + LaurentPoly.monomial(2 * d * (n - 1 - 2 * j))
    return QRatFn(acc, LaurentPoly.constant(1))
