"""Pure-Python scalar kernels for arithmetic in Q[t]/(Phi_N(t)).

An element is stored as ``(num, den)``: a tuple of ``phi(N)`` integers and a
positive integer denominator with ``gcd(num..., den) == 1``.  ``table[k]``
holds the power-basis coordinates of ``t^(phi + k)`` reduced modulo Phi_N.

The compiled module ``_speedups`` exports the same functions with the same
semantics; ``cyclocat.kernels`` picks one at import time.
"""

from math import gcd


def normalize(num, den):
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g == 0 or all(c == 0 for c in num):
        return tuple(0 for _ in num), 1
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


def add(anum, aden, bnum, bden):
    if aden == bden:
        return normalize([a + b for a, b in zip(anum, bnum)], aden)
    return normalize([a * bden + b * aden for a, b in zip(anum, bnum)], aden * bden)


def sub(anum, aden, bnum, bden):
    if aden == bden:
        return normalize([a - b for a, b in zip(anum, bnum)], aden)
    return normalize([a * bden - b * aden for a, b in zip(anum, bnum)], aden * bden)


def mul(anum, aden, bnum, bden, table):
    phi = len(anum)
    conv = [0] * (2 * phi - 1)
    for i, a in enumerate(anum):
        if a:
            for j, b in enumerate(bnum):
                if b:
                    conv[i + j] += a * b
    for k in range(2 * phi - 2, phi - 1, -1):
        c = conv[k]
        if c:
            row = table[k - phi]
            for i in range(phi):
                r = row[i]
                if r:
                    conv[i] += c * r
    return normalize(conv[:phi], aden * bden)


def scale(anum, aden, p, r):
    """Multiply by the rational ``p/r`` (``r > 0``)."""
    return normalize([a * p for a in anum], aden * r)
