"""Exact arithmetic: integer polynomials and cyclotomic number fields.

Rationals are :class:`fractions.Fraction`.  Polynomials are dense, ascending,
with no trailing zeros.  The number field ``Q(zeta_N)`` is realized as
``Q[t]/(Phi_N(t))`` in the power basis ``1, t, ..., t^(phi(N)-1)``.
"""

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

from cyclocat import kernels

NEG_INF = float("-inf")


class IntPolynomial:
    """Dense univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k, c=1):
        if k < 0:
            raise ValueError("negative exponent in a polynomial")
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.leading == 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divrem(self, divisor):
        """Return ``(quotient, remainder)``; the divisor must be monic."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if not divisor.is_monic():
            raise ValueError(f"divisor {divisor} is not monic")
        r = list(self.coeffs)
        db = len(divisor.coeffs) - 1
        if len(r) - 1 < db:
            return IntPolynomial(), IntPolynomial(r)
        quot = [0] * (len(r) - db)
        b = divisor.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c:
                quot[k - db] = c
                for i in range(db + 1):
                    r[k - db + i] -= c * b[i]
        return IntPolynomial(quot), IntPolynomial(r[:db])

    def __floordiv__(self, divisor):
        return self.divrem(divisor)[0]

    def __mod__(self, divisor):
        return self.divrem(divisor)[1]

    def exact_div(self, divisor):
        quot, rem = self.divrem(divisor)
        if not rem.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return quot

    def divides(self, other):
        return other.divrem(self)[1].is_zero()

    def substitute_power(self, k):
        """Return p(q^k) for k >= 1."""
        out = [0] * (k * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPolynomial(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_terms(enumerate(self.coeffs), "q")

    def format(self, var="q"):
        return format_terms(enumerate(self.coeffs), var)


def format_terms(terms, var):
    """Render ``(exponent, coefficient)`` pairs in ascending order, e.g. ``1 - q + q^3``."""
    parts = []
    for k, c in terms:
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def poly_divrem(a, b):
    return a.divrem(b)


def divisors(k):
    return [d for d in range(1, k + 1) if k % d == 0]


def totient(k):
    return sum(1 for i in range(1, k + 1) if gcd(i, k) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k):
    """Phi_k by exact division of q^k - 1 by Phi_d for the proper divisors d."""
    if k < 1:
        raise ValueError("cyclotomic index must be positive")
    p = IntPolynomial.monomial(k) - 1
    for d in divisors(k)[:-1]:
        p = p.exact_div(cyclotomic_polynomial(d))
    return p


# --- the field Q[t]/(Phi_N) ------------------------------------------------


class CyclotomicField:
    """The number field Q[t]/(Phi_N(t)); one shared instance per N."""

    _instances = {}

    def __new__(cls, N):
        N = int(N)
        if N < 1:
            raise ValueError("field order must be positive")
        inst = cls._instances.get(N)
        if inst is None:
            inst = super().__new__(cls)
            inst._setup(N)
            cls._instances[N] = inst
        return inst

    def _setup(self, N):
        self.N = N
        self.modulus = cyclotomic_polynomial(N)
        self.phi = self.modulus.degree
        phi = self.phi
        # t^(phi + k) reduced, for k in [0, phi - 1)
        table = []
        cur = [-c for c in self.modulus.coeffs[:phi]]
        for _ in range(max(phi - 1, 0)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * m for c, m in zip(cur, self.modulus.coeffs[:phi])]
        self.table = tuple(table)
        self._zero_num = (0,) * phi
        self.zero = CyclotomicScalar._make(self, self._zero_num, 1)
        self.one = CyclotomicScalar._make(self, (1,) + (0,) * (phi - 1), 1)
        self._roots = {}
        self._inverses = {}

    def __reduce__(self):
        return (CyclotomicField, (self.N,))

    def __repr__(self):
        return f"CyclotomicField({self.N})"

    def __call__(self, value):
        return self.coerce(value)

    def coerce(self, value):
        if isinstance(value, CyclotomicScalar):
            if value.field is not self:
                raise ValueError(f"scalar of {value.field} used in {self}")
            return value
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            num = (value.numerator,) + (0,) * (self.phi - 1)
            return CyclotomicScalar._make(self, num, value.denominator)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot interpret {value!r} as an element of {self}")

    def from_coords(self, coords):
        """Element with the given power-basis coordinates (Fractions or ints)."""
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.phi:
            return self.from_poly_fractions(coords)
        coords += [Fraction(0)] * (self.phi - len(coords))
        den = 1
        for c in coords:
            den = den * c.denominator // gcd(den, c.denominator)
        num, den = kernels.normalize([int(c * den) for c in coords], den)
        return CyclotomicScalar._make(self, num, den)

    def from_poly_fractions(self, coeffs):
        """Reduce an arbitrary-length rational coefficient list modulo Phi_N."""
        r = [Fraction(c) for c in coeffs]
        mod = self.modulus.coeffs
        for k in range(len(r) - 1, self.phi - 1, -1):
            c = r[k]
            if c:
                for i in range(self.phi + 1):
                    r[k - self.phi + i] -= c * mod[i]
        r = r[: self.phi]
        return self.from_coords(r)

    def root(self, e):
        """The class of t^(e mod N)."""
        e %= self.N
        r = self._roots.get(e)
        if r is None:
            r = self.from_poly_fractions([0] * e + [1])
            self._roots[e] = r
        return r

    def parse(self, text):
        return parse_scalar(self, text)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*)?)?
        (?P<var>t(?:\s*\^\s*(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_scalar(field, text):
    """Parse ``"1/2 + 3*t^2 - t"``; powers of t at or above phi(N) are reduced."""
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    coeffs = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse scalar {text!r} at position {pos}")
        sign, coef, var = m.group("sign"), m.group("coef"), m.group("var")
        if coef is None and var is None:
            raise ValueError(f"cannot parse scalar {text!r} at position {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in scalar {text!r}")
        value = Fraction(coef) if coef is not None else Fraction(1)
        if value.denominator == 0:
            raise ValueError(f"zero denominator in {text!r}")
        if sign == "-":
            value = -value
        k = 0
        if var is not None:
            k = int(m.group("exp")) if m.group("exp") else 1
        coeffs[k] = coeffs.get(k, 0) + value
        pos = m.end()
        first = False
    top = max(coeffs)
    dense = [coeffs.get(k, 0) for k in range(top + 1)]
    return field.from_poly_fractions(dense)


class CyclotomicScalar:
    """Element of Q[t]/(Phi_N(t)); immutable."""

    __slots__ = ("field", "num", "den")

    @classmethod
    def _make(cls, field, num, den):
        self = object.__new__(cls)
        self.field = field
        self.num = num
        self.den = den
        return self

    @property
    def coords(self):
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self):
        return not any(self.num)

    def is_one(self):
        return self.den == 1 and self.num == self.field.one.num

    def is_rational(self):
        return not any(self.num[1:])

    def _other(self, other):
        if isinstance(other, CyclotomicScalar):
            if other.field is not self.field:
                raise ValueError("scalars from different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        num, den = kernels.add(self.num, self.den, other.num, other.den)
        return CyclotomicScalar._make(self.field, num, den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        num, den = kernels.sub(self.num, self.den, other.num, other.den)
        return CyclotomicScalar._make(self.field, num, den)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CyclotomicScalar._make(self.field, tuple(-c for c in self.num), self.den)

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        f = self.field
        if other.is_rational():
            num, den = kernels.scale(self.num, self.den, other.num[0], other.den)
        elif self.is_rational():
            num, den = kernels.scale(other.num, other.den, self.num[0], self.den)
        else:
            num, den = kernels.mul(self.num, self.den, other.num, other.den, f.table)
        return CyclotomicScalar._make(f, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        f = self.field
        if self.is_rational():
            c = self.num[0]
            num, den = kernels.normalize([self.den] + [0] * (f.phi - 1), c)
            return CyclotomicScalar._make(f, num, den)
        key = (self.num, self.den)
        inv = f._inverses.get(key)
        if inv is None:
            inv = f.from_coords(_poly_inverse_mod(list(self.coords), [Fraction(c) for c in f.modulus.coeffs]))
            if len(f._inverses) < 65536:
                f._inverses[key] = inv
        return inv

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CyclotomicScalar):
            return self.field is other.field and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.field.N, self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CyclotomicScalar({self.field.N}, {str(self)!r})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod_q(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, bi in enumerate(b):
                a[k + i] -= c * bi
    return _trim(q), _trim(a[: len(b) - 1])


def _poly_mul_q(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub_q(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_inverse_mod(a, mod):
    """u with u*a = 1 modulo ``mod`` by the extended Euclidean algorithm over Q."""
    r0, r1 = _trim(list(mod)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        quot, rem = _poly_divmod_q(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub_q(s0, _poly_mul_q(quot, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


def scalar_root_of_unity(N, e):
    return CyclotomicField(N).root(e)


def scalar_inverse(s):
    return s.inverse()
