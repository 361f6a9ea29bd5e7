"""Grothendieck classes of bigraded modules and their images in the quotient rings."""

from dataclasses import dataclass

from cyclocat.arith import IntPolynomial
from cyclocat.modules import (
    Z2,
    GradingScheme,
    free_module,
    interval_module,
    rectangle_module,
    tensor,
)
from cyclocat.quantum import (
    CycloIntegerElement,
    LaurentPolynomial2,
    QuotientElementXY,
    StepResult,
    _divisible_by_quantum,
    in_product_ideal,
    quantum_integer,
)


class K0Class:
    """Class in Z[x^+-1, y^+-1]/([n]_x [m]_y); equality is decided modulo the ideal."""

    __slots__ = ("n", "m", "rep")
    __hash__ = None

    def __init__(self, n, m, rep):
        self.n, self.m = n, m
        self.rep = rep if isinstance(rep, LaurentPolynomial2) else LaurentPolynomial2(rep)

    def _check(self, other):
        if not isinstance(other, K0Class) or (self.n, self.m) != (other.n, other.m):
            raise TypeError("classes of different Grothendieck rings")

    def __add__(self, other):
        self._check(other)
        return K0Class(self.n, self.m, self.rep + other.rep)

    def __sub__(self, other):
        self._check(other)
        return K0Class(self.n, self.m, self.rep - other.rep)

    def __neg__(self):
        return K0Class(self.n, self.m, -self.rep)

    def __mul__(self, other):
        self._check(other)
        return K0Class(self.n, self.m, self.rep * other.rep)

    def is_zero(self):
        return in_product_ideal(self.rep, self.n, self.m)

    def __eq__(self, other):
        if not isinstance(other, K0Class):
            return NotImplemented
        self._check(other)
        return (self - other).is_zero()

    def __repr__(self):
        return f"K0Class(n={self.n}, m={self.m}, {self.rep})"

    def __str__(self):
        return str(self.rep)


def class_of(X):
    """Sum over degrees (a, b) of dim X^(a,b) * x^a y^b."""
    sch = X.scheme
    if sch.kind != Z2:
        raise ValueError("classes are defined for the Z2 scheme only (cyclic degrees have no Laurent lift)")
    return K0Class(sch.n, sch.m, LaurentPolynomial2(dict(X.dims)))


def class_additivity_check(tri):
    """[X] - [Y] + [Z] == 0 for a validated short exact sequence."""
    return (class_of(tri.X) - class_of(tri.Y) + class_of(tri.Z)).is_zero()


def class_multiplicativity_check(X, Y):
    return class_of(tensor(X, Y)) == class_of(X) * class_of(Y)


def quotient_class(c):
    """Normal form in Z[x, y]/([n]_x, [m]_y) and its image in Z[q]/(Phi_nm)."""
    red = QuotientElementXY(c.n, c.m, c.rep)
    return red, red.to_cyclotomic()


@dataclass(frozen=True)
class SingleAlgebraFacts:
    n: int
    inverse_ok: bool
    identity_ok: bool
    free_class_zero: bool
    x_normal_form: IntPolynomial

    @property
    def passed(self):
        return self.inverse_ok and self.identity_ok and self.free_class_zero

    def to_text(self):
        yes = lambda b: "yes" if b else "no"
        return (f"K0 of H_{self.n}: Z[x]/([{self.n}]_x)\n"
                f"(x - 1)[{self.n}]_x = x^{self.n} - 1: {yes(self.identity_ok)}\n"
                f"x * x^{self.n - 1} = 1: {yes(self.inverse_ok)}\n"
                f"class of the free module is 0: {yes(self.free_class_zero)}\n"
                f"x reduces to {self.x_normal_form.format('x')}")


def single_algebra_k0(n):
    """Ring facts for K0 of the single algebra H_n, realized as the scheme (n, 1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    qn = quantum_integer(n)
    x = IntPolynomial.monomial(1)
    identity_ok = (x - 1) * qn == IntPolynomial.monomial(n) - 1
    inverse_ok = (x * IntPolynomial.monomial(n - 1)).divrem(qn)[1] == IntPolynomial([1])
    F = free_module(GradingScheme(Z2, n, 1), (0, 0))
    c = class_of(F)
    free_zero = c.rep == LaurentPolynomial2.from_x(qn) and c.is_zero()
    return SingleAlgebraFacts(n, inverse_ok, identity_ok, free_zero, x.divrem(qn)[1])


def evaluation_witness(n, m):
    """x -> 0, y -> 1 into Z/(m) kills [n]_x [m]_y, so x has no inverse without x^-1.

    Returns True when the map is well defined and sends x to a non-unit.
    """
    at = quantum_integer(n)(0) * quantum_integer(m)(1)
    return at % m == 0 and m > 1


def _kernel_samples(sch, which):
    """Deterministic members of ker P0 (which=0) or ker P1 (which=1), and the ideal generator."""
    n, m = sch.n, sch.m
    full = m if which == 0 else n
    other = n if which == 0 else m
    samples = []
    for start in ((0, 0), (-1, 2), (2, -3)):
        for a in range(1, other + 1):
            samples.append(rectangle_module(sch, start, a, m) if which == 0 else rectangle_module(sch, start, n, a))
    gen = interval_module(sch, (0, 0), 1 - which, full)
    # the twisted tensor: both factors use the surviving differential
    samples.append(tensor(interval_module(sch, (1, 1), 1 - which, 2), gen))
    samples.append(tensor(interval_module(sch, (0, -1), which, 2), gen))
    return gen, samples


def kernel_ideal_step(n, m):
    """The image of K0 of both kernels is the ideal ([n]_x, [m]_y).

    The ideal generators [m]_y and [n]_x are realized by the full chains in
    the e1 and e0 directions; sampled kernel members have classes divisible by
    them (so vanish in the quotient).
    """
    from cyclocat.stable import in_kernel_P0, in_kernel_P1

    sch = GradingScheme(Z2, n, m)
    gens_ok = True
    members_ok = True
    count = 0
    for which, qpoly, var in ((0, quantum_integer(m), 1), (1, quantum_integer(n), 0)):
        test = in_kernel_P0 if which == 0 else in_kernel_P1
        gen, samples = _kernel_samples(sch, which)
        expected = LaurentPolynomial2.from_y(qpoly) if var == 1 else LaurentPolynomial2.from_x(qpoly)
        gens_ok &= test(gen) and class_of(gen).rep == expected
        for X in samples:
            count += 1
            c = class_of(X)
            red, _ = quotient_class(c)
            members_ok &= test(X) and _divisible_by_quantum(c.rep.clear_units(), qpoly.degree + 1, var) and red.is_zero()
    details = [
        f"[{m}]_y is the class of the length-{m} d1-chain (in ker P0); [{n}]_x of the length-{n} d0-chain (in ker P1): "
        + ("yes" if gens_ok else "no"),
        f"{count} sampled kernel members have classes in ([{n}]_x, [{m}]_y): " + ("yes" if members_ok else "no"),
    ]
    return StepResult("image of K0(S) equals the ideal ([n]_x, [m]_y)", bool(gens_ok and members_ok), details)

