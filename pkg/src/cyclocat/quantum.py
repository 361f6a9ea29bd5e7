"""Quantum integers, cyclotomic quotient rings and the four-step theorem check.

The rings involved are ``Z[x^+-1, y^+-1]`` (Grothendieck ring of bigraded
modules), its quotient ``Z[x, y]/([n]_x, [m]_y)`` and ``Z[q]/(Phi_nm)``.
Equality in every quotient is decided through unique normal forms obtained by
monic division.
"""

import json
from dataclasses import dataclass, field as dc_field
from math import gcd

from cyclocat.arith import IntPolynomial, cyclotomic_polynomial, format_terms


def is_prime(k):
    if k < 2:
        return False
    i = 2
    while i * i <= k:
        if k % i == 0:
            return False
        i += 1
    return True


def _require_distinct_primes(n, m, odd=False):
    for k in (n, m):
        if not isinstance(k, int) or not is_prime(k):
            raise ValueError(f"{k} is not a prime")
        if odd and k == 2:
            raise ValueError("the theorem is stated for odd primes; 2 is rejected")
    if n == m:
        raise ValueError(f"the primes must be distinct (got {n} twice)")


def quantum_integer(n):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 1:
        raise ValueError("quantum integers are defined here for n >= 1")
    return IntPolynomial([1] * n)


def cyclotomic(k):
    return cyclotomic_polynomial(k)


def check_product_identity(n, m):
    """[nm]_q == [n]_q [m]_q Phi_nm(q)."""
    _require_distinct_primes(n, m)
    return quantum_integer(n * m) == quantum_integer(n) * quantum_integer(m) * cyclotomic(n * m)


def bezout_witness(n, m):
    """Smallest positive a with a*n = 1 (mod m), and b = (a*n - 1)/m."""
    if gcd(n, m) != 1:
        raise ValueError(f"gcd({n}, {m}) != 1")
    a = pow(n, -1, m) if m > 1 else 1
    if a == 0:
        a = m
    b = (a * n - 1) // m
    if b <= 0:
        # only when a*n == 1; shift to the next positive solution
        a += m
        b = (a * n - 1) // m
    return a, b


def bezout_sides(n, m):
    """Both sides of the Bezout chain for Phi_nm, as exact polynomials."""
    _require_distinct_primes(n, m)
    a, b = bezout_witness(n, m)
    nm = quantum_integer(n * m)
    qn, qm = quantum_integer(n), quantum_integer(m)
    rhs = (quantum_integer(a * n).exact_div(qn) * nm.exact_div(qm)
           - IntPolynomial.monomial(1) * quantum_integer(b * m).exact_div(qm) * nm.exact_div(qn))
    return cyclotomic(n * m), rhs


def check_bezout_identity(n, m):
    lhs, rhs = bezout_sides(n, m)
    return lhs == rhs


def crt_exponents(n, m):
    """(alpha, beta) in [0, nm) with alpha = (1, 0) and beta = (0, 1) modulo (n, m)."""
    if gcd(n, m) != 1:
        raise ValueError(f"gcd({n}, {m}) != 1")
    N = n * m
    alpha = next(e for e in range(N) if e % n == 1 % n and e % m == 0)
    beta = next(e for e in range(N) if e % n == 0 and e % m == 1 % m)
    return alpha, beta


def _reduce_cyclic(terms, N):
    """Sum c*q^e with exponents taken modulo N (the ring Z[q]/(q^N - 1))."""
    out = [0] * N
    for e, c in terms:
        out[e % N] += c
    return IntPolynomial(out)


def check_crt_correspondence(n, m):
    """[n]_x and [m]_y correspond to [nm]/[m] and [nm]/[n]; q -> xy inverts x, y -> q^alpha, q^beta."""
    _require_distinct_primes(n, m)
    N = n * m
    alpha, beta = crt_exponents(n, m)
    nm = quantum_integer(N)
    ok = _reduce_cyclic(((i * alpha, 1) for i in range(n)), N) == _reduce_cyclic(
        enumerate(nm.exact_div(quantum_integer(m)).coeffs), N)
    ok &= _reduce_cyclic(((j * beta, 1) for j in range(m)), N) == _reduce_cyclic(
        enumerate(nm.exact_div(quantum_integer(n)).coeffs), N)
    for a in range(n):
        for b in range(m):
            e = (a * alpha + b * beta) % N
            ok &= (e % n, e % m) == (a, b)
    for e in range(N):
        ok &= ((e % n) * alpha + (e % m) * beta) % N == e
    return bool(ok)


# --- two-variable Laurent polynomials --------------------------------------------


class LaurentPolynomial2:
    """Integer Laurent polynomial in x, y; terms map (i, j) -> nonzero int."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for k, c in (terms or {}).items():
            c = int(c)
            if c:
                clean[(int(k[0]), int(k[1]))] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    @classmethod
    def from_x(cls, poly):
        return cls({(i, 0): c for i, c in enumerate(poly.coeffs)})

    @classmethod
    def from_y(cls, poly):
        return cls({(0, j): c for j, c in enumerate(poly.coeffs)})

    def is_zero(self):
        return not self.terms

    def items(self):
        return self.terms.items()

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial2):
            return other
        if isinstance(other, int):
            return LaurentPolynomial2({(0, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial2(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial2({k: -c for k, c in self.terms.items()})

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
        out = {}
        for (i, j), c in self.terms.items():
            for (k, l), d in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + c * d
        return LaurentPolynomial2(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((i, j), c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPolynomial2({(-i * -e, -j * -e): c ** -e})
        out = LaurentPolynomial2({(0, 0): 1})
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def min_exponents(self):
        if not self.terms:
            return 0, 0
        return min(i for i, _ in self.terms), min(j for _, j in self.terms)

    def clear_units(self):
        """Multiply by the unique monomial x^a y^b making all exponents >= 0 with minimum 0."""
        a, b = self.min_exponents()
        return LaurentPolynomial2({(i - a, j - b): c for (i, j), c in self.terms.items()})

    def __repr__(self):
        return f"LaurentPolynomial2({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.terms.items():
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            body = "*".join(mono)
            mag = abs(c)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def _divisible_by_quantum(P, n, var):
    """P (a polynomial in x, y with nonnegative exponents) divisible by [n] in var."""
    qn = quantum_integer(n)
    rows = {}
    for (i, j), c in P.items():
        e, other = (i, j) if var == 0 else (j, i)
        rows.setdefault(other, {})[e] = c
    for coeffs in rows.values():
        poly = IntPolynomial([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])
        if not poly.divrem(qn)[1].is_zero():
            return False
    return True


def in_product_ideal(P, n, m):
    """P lies in the principal ideal ([n]_x [m]_y) of the Laurent ring."""
    Q = P.clear_units()
    return _divisible_by_quantum(Q, n, 0) and _divisible_by_quantum(Q, m, 1)


# --- Z[x, y]/([n]_x, [m]_y) and Z[q]/(Phi_nm) ---------------------------------------


class QuotientElementXY:
    """Element of Z[x, y]/([n]_x, [m]_y) in normal form (deg_x < n-1, deg_y < m-1).

    x and y are units in this ring (x^n = y^m = 1), so negative exponents are
    accepted and reduced first.
    """

    __slots__ = ("n", "m", "rep")

    def __init__(self, n, m, poly):
        self.n, self.m = n, m
        self.rep = self.normal_form(n, m, poly)

    @staticmethod
    def normal_form(n, m, poly):
        if n < 1 or m < 1:
            raise ValueError("n and m must be positive")
        if n == 1 or m == 1:
            return LaurentPolynomial2()
        grid = [[0] * m for _ in range(n)]
        for (i, j), c in poly.items():
            grid[i % n][j % m] += c
        # x^(n-1) = -(1 + x + ... + x^(n-2)) modulo [n]_x
        for j in range(m):
            c = grid[n - 1][j]
            if c:
                grid[n - 1][j] = 0
                for i in range(n - 1):
                    grid[i][j] -= c
        for i in range(n):
            c = grid[i][m - 1]
            if c:
                grid[i][m - 1] = 0
                for j in range(m - 1):
                    grid[i][j] -= c
        return LaurentPolynomial2({(i, j): grid[i][j] for i in range(n) for j in range(m) if grid[i][j]})

    def _check(self, other):
        if not isinstance(other, QuotientElementXY) or (self.n, self.m) != (other.n, other.m):
            raise TypeError("elements of different quotient rings")

    def __add__(self, other):
        self._check(other)
        return QuotientElementXY(self.n, self.m, self.rep + other.rep)

    def __sub__(self, other):
        self._check(other)
        return QuotientElementXY(self.n, self.m, self.rep - other.rep)

    def __mul__(self, other):
        self._check(other)
        return QuotientElementXY(self.n, self.m, self.rep * other.rep)

    def is_zero(self):
        return self.rep.is_zero()

    def is_one(self):
        return self.rep == LaurentPolynomial2.monomial(0, 0)

    def __eq__(self, other):
        if not isinstance(other, QuotientElementXY):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self.rep == other.rep

    def __hash__(self):
        return hash((self.n, self.m, self.rep))

    def to_cyclotomic(self):
        """Image under x -> q^alpha, y -> q^beta in Z[q]/(Phi_nm)."""
        N = self.n * self.m
        alpha, beta = crt_exponents(self.n, self.m)
        return CycloIntegerElement(N, _reduce_cyclic((((i * alpha + j * beta), c) for (i, j), c in self.rep.items()), N))

    def __repr__(self):
        return f"QuotientElementXY(n={self.n}, m={self.m}, {self.rep})"

    def __str__(self):
        return str(self.rep)


class CycloIntegerElement:
    """Element of Z[q]/(Phi_N(q)), stored as its remainder modulo Phi_N."""

    __slots__ = ("N", "rep")

    def __init__(self, N, poly):
        self.N = N
        if not isinstance(poly, IntPolynomial):
            poly = IntPolynomial(poly)
        self.rep = poly.divrem(cyclotomic(N))[1]

    @classmethod
    def q_power(cls, N, e):
        return cls(N, IntPolynomial.monomial(e % N))

    def __add__(self, other):
        return CycloIntegerElement(self.N, self.rep + other.rep)

    def __sub__(self, other):
        return CycloIntegerElement(self.N, self.rep - other.rep)

    def __mul__(self, other):
        return CycloIntegerElement(self.N, self.rep * other.rep)

    def is_zero(self):
        return self.rep.is_zero()

    def __eq__(self, other):
        if not isinstance(other, CycloIntegerElement):
            return NotImplemented
        return self.N == other.N and self.rep == other.rep

    def __hash__(self):
        return hash((self.N, self.rep))

    def __repr__(self):
        return f"CycloIntegerElement({self.N}, {self.rep})"

    def __str__(self):
        return f"{self.rep} in Z[q]/Phi_{self.N}"


# --- the four-step check ---------------------------------------------------------


@dataclass
class StepResult:
    name: str
    passed: bool
    details: list = dc_field(default_factory=list)


@dataclass
class TheoremReport:
    n: int
    m: int
    steps: list

    @property
    def passed(self):
        return all(s.passed for s in self.steps)

    def to_text(self):
        lines = [f"K0 of the Verdier quotient for n={self.n}, m={self.m}: Z[q]/Phi_{self.n * self.m}"]
        for k, s in enumerate(self.steps, 1):
            lines.append(f"step{k}: {'PASS' if s.passed else 'FAIL'} ({s.name})")
            lines.extend(f"  {d}" for d in s.details)
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)

    def to_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "passed": self.passed,
            "steps": [{"step": k, "name": s.name, "passed": s.passed, "details": list(s.details)}
                      for k, s in enumerate(self.steps, 1)],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _step2(n, m):
    qn = LaurentPolynomial2.from_x(quantum_integer(n))
    qm = LaurentPolynomial2.from_y(quantum_integer(m))
    # [n]_x [m]_y = [m]_y * [n]_x + 0 * [m]_y exhibits it inside the ideal
    member = qn * qm == qm * qn + LaurentPolynomial2() * qm
    prod_zero = QuotientElementXY(n, m, qn * qm).is_zero()
    x = QuotientElementXY(n, m, LaurentPolynomial2.monomial(1, 0))
    y = QuotientElementXY(n, m, LaurentPolynomial2.monomial(0, 1))
    x_inv = QuotientElementXY(n, m, LaurentPolynomial2.monomial(n - 1, 0))
    y_inv = QuotientElementXY(n, m, LaurentPolynomial2.monomial(0, m - 1))
    inv = (x * x_inv).is_one() and (y * y_inv).is_one()
    details = [
        f"[{n}]_x[{m}]_y = [{m}]_y * [{n}]_x lies in ([{n}]_x, [{m}]_y): {'yes' if member and prod_zero else 'no'}",
        f"x * x^{n - 1} = 1 and y * y^{m - 1} = 1 in the quotient: {'yes' if inv else 'no'}",
    ]
    return StepResult("x, y invertible and [n]_x[m]_y redundant in Z[x,y]/([n]_x,[m]_y)",
                      member and prod_zero and inv, details)


def _step3(n, m):
    alpha, beta = crt_exponents(n, m)
    ok = check_crt_correspondence(n, m)
    details = [f"x -> q^{alpha}, y -> q^{beta}, inverse q -> xy",
               f"[{n}]_x -> [{n * m}]_q/[{m}]_q and [{m}]_y -> [{n * m}]_q/[{n}]_q mod q^{n * m} - 1: {'yes' if ok else 'no'}"]
    return StepResult("CRT correspondence Z[C_n x C_m] = Z[C_nm]", ok, details)


def _step4(n, m):
    N = n * m
    a, b = bezout_witness(n, m)
    prod = check_product_identity(n, m)
    lhs, rhs = bezout_sides(n, m)
    bez = lhs == rhs
    phi = cyclotomic(N)
    nm = quantum_integer(N)
    A = nm.exact_div(quantum_integer(m))
    B = nm.exact_div(quantum_integer(n))
    # (A, B) contained in (Phi): both are multiples of Phi
    forward = phi.divides(A) and phi.divides(B)
    details = [
        f"Phi_{N} = {phi}",
        f"[{N}]_q = [{n}]_q[{m}]_q Phi_{N}: {'yes' if prod else 'no'}",
        f"1 = {a}*{n} - {b}*{m}; Bezout combination equals Phi_{N}: {'yes' if bez else 'no'}",
        f"([{N}]_q/[{m}]_q, [{N}]_q/[{n}]_q) contained in (Phi_{N}): {'yes' if forward else 'no'}",
    ]
    return StepResult("ideal ([nm]/[m], [nm]/[n]) equals (Phi_nm)", prod and bez and forward, details)


def verify_main_theorem(n, m):
    """Run the four verification steps for distinct odd primes n, m."""
    _require_distinct_primes(n, m, odd=True)
    from cyclocat import k0  # k0 depends on this module

    steps = [k0.kernel_ideal_step(n, m), _step2(n, m), _step3(n, m), _step4(n, m)]
    return TheoremReport(n, m, steps)
