"""Finite-dimensional graded modules over H_n (x) H_m.

A module is a graded vector space with two commuting nilpotent differentials
``d0`` (``d0^n = 0``) and ``d1`` (``d1^m = 0``).  The group-like generators
``k0, k1`` are not stored: they act on a homogeneous component by a power of
``q0 = t^m`` resp. ``q1 = t^n`` determined by the degree.

Two grading schemes are supported:

``Z2``
    homological bigrading (the ``zmod`` setting).  ``d0`` has degree (1, 0),
    ``d1`` degree (0, 1) and ``k_i`` acts on degree ``(a, b)`` by
    ``q_i^(-a)`` resp. ``q_i^(-b)``.
``cyclic``
    implicit Z/n x Z/m grading (the ``mod`` setting).  ``d0`` has degree
    (-1, 0), ``d1`` degree (0, -1), and ``k_i`` acts on degree ``(a, b)`` by
    ``q_0^a`` resp. ``q_1^b``.

Differential blocks are keyed by source degree; a block maps the component at
``g`` to the component at ``g + e``.  Only non-zero blocks are stored.
"""

import random
from dataclasses import dataclass
from math import gcd

from cyclocat.arith import CyclotomicField
from cyclocat.linalg import Matrix, Subspace, block_diag, inverse, kron, rank

Z2 = "Z2"
CYCLIC = "cyclic"


class ModuleError(ValueError):
    """A module or morphism violates its defining relations."""


@dataclass(frozen=True)
class GradingScheme:
    kind: str
    n: int
    m: int

    def __post_init__(self):
        if self.kind not in (Z2, CYCLIC):
            raise ValueError(f"unknown grading scheme {self.kind!r}")
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be positive")
        if gcd(self.n, self.m) != 1:
            raise ValueError(f"n={self.n} and m={self.m} are not coprime")

    @property
    def field(self):
        return CyclotomicField(self.n * self.m)

    @property
    def q0(self):
        return self.field.root(self.m)

    @property
    def q1(self):
        return self.field.root(self.n)

    def order(self, which):
        return self.n if which == 0 else self.m

    def norm(self, g):
        a, b = int(g[0]), int(g[1])
        if self.kind == CYCLIC:
            return (a % self.n, b % self.m)
        return (a, b)

    def step(self, which):
        if self.kind == Z2:
            return (1, 0) if which == 0 else (0, 1)
        return (self.n - 1, 0) if which == 0 else (0, self.m - 1)

    def add(self, g, h):
        return self.norm((g[0] + h[0], g[1] + h[1]))

    def sub(self, g, h):
        return self.norm((g[0] - h[0], g[1] - h[1]))

    def move(self, g, a=0, b=0):
        """``g + a*e0 + b*e1``."""
        if self.kind == Z2:
            return (g[0] + a, g[1] + b)
        return ((g[0] - a) % self.n, (g[1] - b) % self.m)

    def offset(self, base, g):
        """The ``(a, b)`` with ``g = base + a*e0 + b*e1``, 0 <= a < n, 0 <= b < m; None if outside."""
        if self.kind == Z2:
            a, b = g[0] - base[0], g[1] - base[1]
        else:
            a, b = (base[0] - g[0]) % self.n, (base[1] - g[1]) % self.m
        if 0 <= a < self.n and 0 <= b < self.m:
            return (a, b)
        return None

    def k_eigenvalue(self, which, g):
        """Scalar by which ``k_which`` acts on the component of degree g."""
        q = self.q0 if which == 0 else self.q1
        e = -g[which] if self.kind == Z2 else g[which]
        return q ** (e % (self.n * self.m))

    def swapped(self):
        return GradingScheme(self.kind, self.m, self.n)

    def describe(self):
        return f"{self.kind}(n={self.n}, m={self.m})"


def _zero_block(field, r, c):
    return Matrix.zeros(field, r, c)


class GradedModule:
    """Graded H_n (x) H_m-module; immutable after construction."""

    __slots__ = ("scheme", "dims", "d", "_pow_cache")

    def __init__(self, scheme, dims, d0=None, d1=None, check=True):
        self.scheme = scheme
        self.dims = {scheme.norm(g): int(k) for g, k in dims.items() if int(k) > 0}
        if any(int(k) < 0 for k in dims.values()):
            raise ModuleError("negative dimension")
        field = scheme.field
        self.d = ({}, {})
        for which, blocks in ((0, d0 or {}), (1, d1 or {})):
            for g, mat in blocks.items():
                g = scheme.norm(g)
                h = scheme.add(g, scheme.step(which))
                shape = (self.dims.get(h, 0), self.dims.get(g, 0))
                if mat.shape != shape:
                    raise ModuleError(f"d{which} block at {g} has shape {mat.shape}, expected {shape}")
                if mat.field is not field:
                    raise ModuleError(f"d{which} block at {g} has scalars outside {field}")
                if shape[0] and shape[1] and not mat.is_zero():
                    self.d[which][g] = mat
        self._pow_cache = {}
        if check:
            problems = validate(self)
            if problems:
                raise ModuleError(problems[0])

    @property
    def field(self):
        return self.scheme.field

    def dim(self, g):
        return self.dims.get(self.scheme.norm(g), 0)

    @property
    def total_dim(self):
        return sum(self.dims.values())

    def degrees(self):
        return sorted(self.dims)

    def block(self, which, g):
        g = self.scheme.norm(g)
        mat = self.d[which].get(g)
        if mat is not None:
            return mat
        h = self.scheme.add(g, self.scheme.step(which))
        return _zero_block(self.field, self.dim(h), self.dim(g))

    def power(self, which, k, g):
        """Matrix of ``d_which^k`` from degree g."""
        g = self.scheme.norm(g)
        key = (which, k, g)
        hit = self._pow_cache.get(key)
        if hit is not None:
            return hit
        if k == 0:
            res = Matrix.identity(self.field, self.dim(g))
        else:
            prev = self.power(which, k - 1, g)
            h = self.scheme.move(g, k - 1, 0) if which == 0 else self.scheme.move(g, 0, k - 1)
            res = self.block(which, h) @ prev
        self._pow_cache[key] = res
        return res

    def path(self, a, b, g):
        """Matrix of ``d0^a d1^b`` from degree g."""
        g = self.scheme.norm(g)
        if a == 0:
            return self.power(1, b, g)
        if b == 0:
            return self.power(0, a, g)
        h = self.scheme.move(g, 0, b)
        return self.power(0, a, h) @ self.power(1, b, g)

    def __eq__(self, other):
        if not isinstance(other, GradedModule):
            return NotImplemented
        return self.scheme == other.scheme and self.dims == other.dims and self.d == other.d

    def __hash__(self):
        return hash((self.scheme, tuple(sorted(self.dims.items()))))

    def __repr__(self):
        return f"GradedModule({self.scheme.describe()}, dim={self.total_dim}, degrees={len(self.dims)})"


def validate(M):
    """List of violated relations (empty when M is a valid module)."""
    problems = []
    s = M.scheme
    for which in (0, 1):
        N = s.order(which)
        for g in M.degrees():
            if not M.power(which, N, g).is_zero():
                problems.append(f"d{which}^{N} != 0 at degree {g}")
                break
    for g in M.degrees():
        lhs = M.block(1, s.move(g, 1, 0)) @ M.block(0, g)
        rhs = M.block(0, s.move(g, 0, 1)) @ M.block(1, g)
        if lhs != rhs:
            problems.append(f"d0 and d1 do not commute at degree {g}")
            break
    return problems


def check_twist(M):
    """The relation d_i k_i = q_i k_i d_i in matrix form, for every stored block."""
    s = M.scheme
    for which, q in ((0, s.q0), (1, s.q1)):
        for g, D in M.d[which].items():
            h = s.add(g, s.step(which))
            if D.scale(s.k_eigenvalue(which, g)) != D.scale(q * s.k_eigenvalue(which, h)):
                return False
    return True


# --- morphisms --------------------------------------------------------------


class ModuleMorphism:
    """Degree-preserving linear map commuting with d0 and d1."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source, target, blocks, check=True):
        if source.scheme != target.scheme:
            raise ModuleError("morphism between modules of different schemes")
        self.source = source
        self.target = target
        s = source.scheme
        self.blocks = {}
        for g, mat in blocks.items():
            g = s.norm(g)
            shape = (target.dim(g), source.dim(g))
            if mat.shape != shape:
                raise ModuleError(f"morphism block at {g} has shape {mat.shape}, expected {shape}")
            if shape[0] and shape[1] and not mat.is_zero():
                self.blocks[g] = mat
        if check:
            problems = validate_morphism(self)
            if problems:
                raise ModuleError(problems[0])

    @property
    def scheme(self):
        return self.source.scheme

    def block(self, g):
        g = self.scheme.norm(g)
        mat = self.blocks.get(g)
        if mat is not None:
            return mat
        return _zero_block(self.source.field, self.target.dim(g), self.source.dim(g))

    def degrees(self):
        return sorted(set(self.source.dims) | set(self.target.dims))

    def compose(self, other):
        """``self o other``."""
        if other.target != self.source:
            raise ModuleError("composition of non-composable morphisms")
        blocks = {g: self.block(g) @ other.block(g) for g in other.source.dims if self.target.dim(g)}
        return ModuleMorphism(other.source, self.target, blocks, check=False)

    def __add__(self, other):
        self._same_ends(other)
        return ModuleMorphism(self.source, self.target, {g: self.block(g) + other.block(g) for g in self.source.dims}, check=False)

    def __sub__(self, other):
        self._same_ends(other)
        return ModuleMorphism(self.source, self.target, {g: self.block(g) - other.block(g) for g in self.source.dims}, check=False)

    def scale(self, c):
        return ModuleMorphism(self.source, self.target, {g: m.scale(c) for g, m in self.blocks.items()}, check=False)

    def _same_ends(self, other):
        if self.source != other.source or self.target != other.target:
            raise ModuleError("morphisms with different source/target")

    def is_zero(self):
        return not self.blocks

    def __eq__(self, other):
        if not isinstance(other, ModuleMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.blocks == other.blocks

    def __hash__(self):
        return hash(tuple(sorted(self.blocks)))

    def rank(self):
        return sum(rank(m) for m in self.blocks.values())

    def is_injective(self):
        return all(rank(self.block(g)) == self.source.dim(g) for g in self.source.dims)

    def is_surjective(self):
        return all(rank(self.block(g)) == self.target.dim(g) for g in self.target.dims)

    def __repr__(self):
        return f"ModuleMorphism({self.source!r} -> {self.target!r})"


def validate_morphism(f):
    problems = []
    X, Y = f.source, f.target
    s = X.scheme
    for which in (0, 1):
        for g in X.degrees():
            h = s.add(g, s.step(which))
            if f.block(h) @ X.block(which, g) != Y.block(which, g) @ f.block(g):
                problems.append(f"morphism does not commute with d{which} at degree {g}")
                return problems
    return problems


def identity_morphism(M):
    return ModuleMorphism(M, M, {g: Matrix.identity(M.field, k) for g, k in M.dims.items()}, check=False)


def zero_morphism(X, Y):
    return ModuleMorphism(X, Y, {}, check=False)


# --- constructions ----------------------------------------------------------


def zero_module(scheme):
    return GradedModule(scheme, {})


def free_module(scheme, degree=(0, 0)):
    """Rank-one free module generated in the given degree."""
    field = scheme.field
    one = Matrix.identity(field, 1)
    degree = scheme.norm(degree)
    dims, d0, d1 = {}, {}, {}
    for a in range(scheme.n):
        for b in range(scheme.m):
            g = scheme.move(degree, a, b)
            dims[g] = 1
            if a + 1 < scheme.n:
                d0[g] = one
            if b + 1 < scheme.m:
                d1[g] = one
    return GradedModule(scheme, dims, d0, d1, check=False)


def interval_module(scheme, start, direction, length):
    """Chain of ``length`` one-dimensional components along e0 or e1."""
    N = scheme.order(direction)
    if not 1 <= length <= N:
        raise ValueError(f"interval length {length} outside [1, {N}]")
    one = Matrix.identity(scheme.field, 1)
    start = scheme.norm(start)
    dims, blocks = {}, {}
    for k in range(length):
        g = scheme.move(start, k, 0) if direction == 0 else scheme.move(start, 0, k)
        dims[g] = 1
        if k + 1 < length:
            blocks[g] = one
    # identity chains satisfy the relations by construction
    if direction == 0:
        return GradedModule(scheme, dims, blocks, {}, check=False)
    return GradedModule(scheme, dims, {}, blocks, check=False)


def simple_module(scheme, degree=(0, 0)):
    return interval_module(scheme, degree, 0, 1)


def unit_module(scheme):
    return simple_module(scheme, (0, 0))


def rectangle_module(scheme, start, a, b):
    """``interval(e0, a) (x) interval(e1, b)`` shifted to start at ``start``."""
    return shift(tensor(interval_module(scheme, (0, 0), 0, a), interval_module(scheme, (0, 0), 1, b)),
                 scheme.sub((0, 0), start))


def shift(M, s):
    """Re-index: the shifted module has ``M{s}^(h) = M^(h + s)``."""
    sch = M.scheme
    mv = lambda g: sch.sub(g, s)
    return GradedModule(
        sch,
        {mv(g): k for g, k in M.dims.items()},
        {mv(g): m for g, m in M.d[0].items()},
        {mv(g): m for g, m in M.d[1].items()},
        check=False,
    )


def shift_morphism(f, s):
    sch = f.scheme
    return ModuleMorphism(shift(f.source, s), shift(f.target, s),
                          {sch.sub(g, s): m for g, m in f.blocks.items()}, check=False)


def _assemble(field, row_sizes, col_sizes, pieces):
    """Dense matrix from sub-blocks ``pieces[(i, j)]`` on a grid of block sizes."""
    z = field.zero
    ncols = sum(col_sizes)
    col_off = [0]
    for c in col_sizes:
        col_off.append(col_off[-1] + c)
    rows = []
    for i, rs in enumerate(row_sizes):
        block_rows = [[z] * ncols for _ in range(rs)]
        for (pi, pj), mat in pieces.items():
            if pi != i:
                continue
            off = col_off[pj]
            for r in range(rs):
                src = mat.rows[r]
                dst = block_rows[r]
                for c, x in enumerate(src):
                    if not x.is_zero():
                        dst[off + c] = dst[off + c] + x
        rows.extend(tuple(r) for r in block_rows)
    return Matrix._raw(field, tuple(rows), ncols)


def direct_sum(*mods):
    if not mods:
        raise ValueError("direct_sum of nothing")
    sch = mods[0].scheme
    for M in mods:
        if M.scheme != sch:
            raise ModuleError("direct sum of modules with different schemes")
    field = sch.field
    dims = {}
    for M in mods:
        for g, k in M.dims.items():
            dims[g] = dims.get(g, 0) + k
    blocks = ({}, {})
    for which in (0, 1):
        for g in dims:
            h = sch.add(g, sch.step(which))
            if not dims.get(h):
                continue
            parts = [M.block(which, g) for M in mods]
            if all(p.is_zero() for p in parts):
                continue
            blocks[which][g] = block_diag(field, parts)
    return GradedModule(sch, dims, blocks[0], blocks[1], check=False)


def direct_sum_morphism(*maps):
    src = direct_sum(*[f.source for f in maps])
    tgt = direct_sum(*[f.target for f in maps])
    field = src.field
    blocks = {g: block_diag(field, [f.block(g) for f in maps]) for g in src.dims}
    return ModuleMorphism(src, tgt, blocks, check=False)


def _tensor_layout(X, Y):
    """For each degree g: ordered list of (g1, g2) pairs with g1 + g2 = g."""
    sch = X.scheme
    layout = {}
    for g1 in X.degrees():
        for g2 in Y.degrees():
            layout.setdefault(sch.add(g1, g2), []).append((g1, g2))
    return layout


def tensor(X, Y):
    """Tensor product with ``d(x (x) y) = dx (x) y + (k x) (x) dy``."""
    if X.scheme != Y.scheme:
        raise ModuleError("tensor product of modules with different schemes")
    sch = X.scheme
    field = sch.field
    layout = _tensor_layout(X, Y)
    dims = {g: sum(X.dim(a) * Y.dim(b) for a, b in pairs) for g, pairs in layout.items()}
    blocks = ({}, {})
    for which in (0, 1):
        e = sch.step(which)
        for g, pairs in layout.items():
            h = sch.add(g, e)
            tpairs = layout.get(h)
            if not tpairs:
                continue
            tindex = {p: i for i, p in enumerate(tpairs)}
            pieces = {}
            for j, (g1, g2) in enumerate(pairs):
                dx, dy = X.dim(g1), Y.dim(g2)
                left = (sch.add(g1, e), g2)
                if left in tindex and X.dim(left[0]):
                    D = X.block(which, g1)
                    if not D.is_zero():
                        pieces[(tindex[left], j)] = kron(D, Matrix.identity(field, dy))
                right = (g1, sch.add(g2, e))
                if right in tindex and Y.dim(right[1]):
                    D = Y.block(which, g2)
                    if not D.is_zero():
                        lam = sch.k_eigenvalue(which, g1)
                        piece = kron(Matrix.scalar(field, dx, lam), D)
                        key = (tindex[right], j)
                        pieces[key] = pieces[key] + piece if key in pieces else piece
            if pieces:
                mat = _assemble(field, [X.dim(a) * Y.dim(b) for a, b in tpairs],
                                [X.dim(a) * Y.dim(b) for a, b in pairs], pieces)
                blocks[which][g] = mat
    return GradedModule(sch, dims, blocks[0], blocks[1], check=False)


def tensor_morphism(f, g):
    """``f (x) g`` on the canonical tensor bases."""
    X = tensor(f.source, g.source)
    Y = tensor(f.target, g.target)
    lx = _tensor_layout(f.source, g.source)
    ly = _tensor_layout(f.target, g.target)
    field = X.field
    blocks = {}
    for deg, pairs in lx.items():
        tpairs = ly.get(deg, [])
        tindex = {p: i for i, p in enumerate(tpairs)}
        pieces = {}
        for j, (g1, g2) in enumerate(pairs):
            if (g1, g2) in tindex:
                pieces[(tindex[(g1, g2)], j)] = kron(f.block(g1), g.block(g2))
        if tpairs:
            blocks[deg] = _assemble(field, [f.target.dim(a) * g.target.dim(b) for a, b in tpairs],
                                    [f.source.dim(a) * g.source.dim(b) for a, b in pairs], pieces)
    return ModuleMorphism(X, Y, blocks, check=False)


def base_change(M, mats):
    """Conjugate by invertible per-degree matrices; returns (new module, iso M -> new)."""
    sch = M.scheme
    field = sch.field
    B = {g: mats.get(g) or Matrix.identity(field, k) for g, k in M.dims.items()}
    Binv = {g: inverse(b) for g, b in B.items()}
    blocks = ({}, {})
    for which in (0, 1):
        for g, D in M.d[which].items():
            h = sch.add(g, sch.step(which))
            blocks[which][g] = B[h] @ D @ Binv[g]
    N = GradedModule(sch, dict(M.dims), blocks[0], blocks[1], check=False)
    return N, ModuleMorphism(M, N, B, check=False)


def swap(M):
    """Exchange the roles of the two tensor factors (and of n, m)."""
    sch = M.scheme.swapped()
    sw = lambda g: (g[1], g[0])
    return GradedModule(
        sch,
        {sw(g): k for g, k in M.dims.items()},
        {sw(g): m for g, m in M.d[1].items()},
        {sw(g): m for g, m in M.d[0].items()},
        check=False,
    )


def swap_morphism(f):
    return ModuleMorphism(swap(f.source), swap(f.target),
                          {(g[1], g[0]): m for g, m in f.blocks.items()}, check=False)


# Figure coordinates (row, column) of the 3 x 5 example; d0 goes down a row,
# d1 right a column.  Cyclic degree of cell (r, c) is (-r mod 3, -c mod 5).
_CE_D1_ARROWS = (
    [((0, c), (0, c + 1)) for c in (1, 2, 3)] + [((0, 4), (0, 0))]
    + [((1, c), (1, c + 1)) for c in range(4)]
    + [((2, c), (2, c + 1)) for c in range(4)]
)
_CE_D0_ARROWS = (
    [((0, c), (1, c)) for c in (1, 2, 3, 4)]
    + [((1, c), (2, c)) for c in range(5)]
    + [((2, 0), (0, 0))]
)


def counterexample_module(n=3, m=5):
    """The 15-dimensional cyclic-scheme module lying in both kernels without being free."""
    if (n, m) != (3, 5):
        raise ValueError("the counterexample is only available for (n, m) = (3, 5)")
    sch = GradingScheme(CYCLIC, 3, 5)
    one = Matrix.identity(sch.field, 1)
    cell = lambda rc: sch.norm((-rc[0], -rc[1]))
    dims = {cell((r, c)): 1 for r in range(3) for c in range(5)}
    d0 = {cell(src): one for src, _ in _CE_D0_ARROWS}
    d1 = {cell(src): one for src, _ in _CE_D1_ARROWS}
    for arrows, which in ((_CE_D0_ARROWS, 0), (_CE_D1_ARROWS, 1)):
        for src, dst in arrows:
            assert sch.add(cell(src), sch.step(which)) == cell(dst)
    return GradedModule(sch, dims, d0, d1)


# --- random generation --------------------------------------------------------


def random_unimodular(field, k, rng, spread=2):
    """Random integer matrix of determinant 1 (product of unitriangular factors)."""
    z, o = field.zero, field.one
    L = [[o if i == j else (field.coerce(rng.randint(-spread, spread)) if j < i else z) for j in range(k)] for i in range(k)]
    U = [[o if i == j else (field.coerce(rng.randint(-spread, spread)) if j > i else z) for j in range(k)] for i in range(k)]
    return Matrix(field, L, k) @ Matrix(field, U, k)


def random_base_change(M, rng):
    mats = {g: random_unimodular(M.field, k, rng) for g, k in M.dims.items() if k > 1}
    return base_change(M, mats)[0]


def _random_degree(rng, spread=2):
    return (rng.randint(-spread, spread), rng.randint(-spread, spread))


def _random_summand(sch, budget, rng):
    n, m = sch.n, sch.m
    kind = rng.random()
    start = _random_degree(rng)
    if kind < 0.6:
        a, b = rng.randint(1, n), rng.randint(1, m)
        if a * b > budget:
            a, b = 1, 1
        return rectangle_module(sch, start, a, b)
    if kind < 0.8:
        # tensor of two chains in the same direction: the q-twist enters here
        which = rng.randint(0, 1)
        N = sch.order(which)
        a, b = rng.randint(1, N), rng.randint(1, N)
        if a * b > budget:
            return simple_module(sch, start)
        X = interval_module(sch, start, which, a)
        Y = interval_module(sch, _random_degree(rng, 1), which, b)
        return tensor(X, Y)
    which = rng.randint(0, 1)
    return interval_module(sch, start, which, rng.randint(1, min(budget, sch.order(which))))


def random_module(scheme, max_dim, seed, base_change=True):
    """Random valid module of total dimension <= max_dim; deterministic per seed."""
    if max_dim < 1:
        raise ValueError("max_dim must be at least 1")
    rng = random.Random(seed) if not isinstance(seed, random.Random) else seed
    parts = []
    budget = rng.randint(1, max_dim)
    used = 0
    while used < budget:
        S = _random_summand(scheme, budget - used, rng)
        if used + S.total_dim > budget:
            break
        parts.append(S)
        used += S.total_dim
    if not parts:
        parts = [simple_module(scheme, _random_degree(rng))]
    M = direct_sum(*parts)
    if base_change:
        M = random_base_change(M, rng)
    return M


def random_kernel_module(scheme, which, max_dim, seed, twist=True):
    """Random module in ker P0 (which=0) or ker P1 (which=1).

    Summands are ``Z (x) rectangle`` where the rectangle is a full chain in the
    surviving direction (so the summand is induced from the smaller Hopf
    subalgebra) and Z is a small random module; a random base change follows.
    """
    rng = random.Random(seed) if not isinstance(seed, random.Random) else seed
    full = scheme.m if which == 0 else scheme.n
    other = scheme.n if which == 0 else scheme.m
    parts = []
    budget = rng.randint(full, max(full, max_dim))
    used = 0
    while used + full <= budget:
        a = rng.randint(1, other)
        size = a * full
        if used + size > budget:
            a = 1
            size = full
        if which == 0:
            R = rectangle_module(scheme, _random_degree(rng), a, full)
        else:
            R = rectangle_module(scheme, _random_degree(rng), full, a)
        room = (budget - used) // size
        if twist and room >= 2 and rng.random() < 0.4:
            Z = random_module(scheme, min(room, 4), rng, base_change=False)
            R = tensor(Z, R)
        parts.append(R)
        used += R.total_dim
    if not parts:
        parts = [rectangle_module(scheme, (0, 0), 1, full) if which == 0 else rectangle_module(scheme, (0, 0), full, 1)]
    return random_base_change(direct_sum(*parts), rng)


def random_projective(scheme, max_dim, seed):
    """Random free module (direct sum of shifted free modules, possibly tensored)."""
    rng = random.Random(seed) if not isinstance(seed, random.Random) else seed
    nm = scheme.n * scheme.m
    if max_dim < nm:
        raise ValueError(f"a free module needs dimension at least {nm}")
    parts = []
    count = rng.randint(1, max_dim // nm)
    k = 0
    while k < count:
        F = free_module(scheme, _random_degree(rng))
        room = count - k
        if room >= 2 and rng.random() < 0.4:
            Z = random_module(scheme, room, rng, base_change=False)
            F = tensor(Z, F)
        parts.append(F)
        k += F.total_dim // nm
    return random_base_change(direct_sum(*parts), rng)



def random_both_kernels(scheme, max_dim, seed):
    """Random module lying in ker P0 and ker P1.

    Built as ``A (x) B`` with A in ker P0 and B in ker P1 (both ideals are
    tensor ideals), optionally plus a free summand, then base-changed.
    """
    rng = random.Random(seed) if not isinstance(seed, random.Random) else seed
    n, m = scheme.n, scheme.m
    if max_dim < n * m:
        raise ValueError(f"a module in both kernels needs dimension at least {n * m}")
    A = random_kernel_module(scheme, 0, max(m, max_dim // n), rng, twist=False)
    room = max_dim // A.total_dim
    B = random_kernel_module(scheme, 1, max(n, room), rng, twist=False)
    while A.total_dim * B.total_dim > max_dim:
        A = rectangle_module(scheme, _random_degree(rng), 1, m)
        B = random_kernel_module(scheme, 1, max(n, max_dim // m), rng, twist=False)
    M = tensor(A, B)
    if max_dim - M.total_dim >= n * m and rng.random() < 0.5:
        M = direct_sum(M, free_module(scheme, _random_degree(rng)))
    return random_base_change(M, rng)

# --- submodules and quotients ---------------------------------------------------


def submodule_ses(X, generators):
    """Submodule S generated by homogeneous vectors and the quotient Q = X/S.

    ``generators`` is a list of ``(degree, vector)``.  Returns ``(i, p)`` with
    ``i: S -> X`` the inclusion and ``p: X -> Q`` the projection.
    """
    sch = X.scheme
    field = X.field
    spans = {g: Subspace(field, k) for g, k in X.dims.items()}
    for g, v in generators:
        g = sch.norm(g)
        for a in range(sch.n):
            for b in range(sch.m):
                h = sch.move(g, a, b)
                if h not in spans:
                    continue
                w = X.path(a, b, g).apply(tuple(v))
                spans[h].add(w)
    # basis of S_g: the echelon rows; complement: unused standard vectors
    sub_basis = {g: [tuple(r) for r in sp.rows] for g, sp in spans.items()}
    comp = {g: sp.complement_basis() for g, sp in spans.items()}
    change = {}
    for g, k in X.dims.items():
        cols = list(sub_basis[g]) + [tuple(field.one if i == j else field.zero for i in range(k)) for j in comp[g]]
        change[g] = inverse(Matrix.from_columns(field, cols, k))
    s_dims = {g: len(b) for g, b in sub_basis.items()}
    q_dims = {g: len(c) for g, c in comp.items()}
    s_blocks, q_blocks = ({}, {}), ({}, {})
    for which in (0, 1):
        for g, D in X.d[which].items():
            h = sch.add(g, sch.step(which))
            if h not in change:
                continue
            C = change[h]
            ks, kq = s_dims[g], q_dims[g]
            hs = s_dims.get(h, 0)
            if ks and hs:
                img = C @ D @ Matrix.from_columns(field, sub_basis[g], X.dim(g))
                s_blocks[which][g] = img.submatrix(range(hs), range(ks))
            if kq and q_dims.get(h):
                cols = [tuple(field.one if i == j else field.zero for i in range(X.dim(g))) for j in comp[g]]
                img = C @ D @ Matrix.from_columns(field, cols, X.dim(g))
                q_blocks[which][g] = img.submatrix(range(hs, hs + q_dims[h]), range(kq))
    S = GradedModule(sch, s_dims, s_blocks[0], s_blocks[1], check=False)
    Q = GradedModule(sch, q_dims, q_blocks[0], q_blocks[1], check=False)
    inc = {g: Matrix.from_columns(field, sub_basis[g], X.dim(g)) for g in S.dims}
    proj = {g: change[g].submatrix(range(s_dims[g], X.dim(g)), range(X.dim(g))) for g in Q.dims}
    return ModuleMorphism(S, X, inc, check=False), ModuleMorphism(X, Q, proj, check=False)
