"""Restriction functors, R0 and its unit, and stable-category computations.

The governing algebra ``k[d0, d1]/(d0^n, d1^m)`` is graded local, so a
module is projective iff it is free, and a morphism is stably trivial iff it
lifts along the projective cover of its target.  Hom spaces are computed from
a projective presentation of the source: a morphism is determined by its values
on a lifted basis of the top, subject to the minimal relations.
"""

from collections import Counter
from dataclasses import dataclass, field as dc_field

from cyclocat.linalg import Matrix, Subspace, hstack, nullspace, rank, solve, vstack
from cyclocat.modules import (
    Z2,
    GradedModule,
    ModuleError,
    ModuleMorphism,
    direct_sum,
    free_module,
    swap,
    swap_morphism,
    validate_morphism,
    zero_module,
)


class ContractViolation(ValueError):
    """A precondition of a construction does not hold for the given input."""


@dataclass(frozen=True)
class RestrictedModule:
    """A module with one differential forgotten; ``survivor`` is 0 or 1."""

    module: GradedModule
    survivor: int

    @property
    def scheme(self):
        return self.module.scheme

    @property
    def order(self):
        return self.module.scheme.order(self.survivor)


def restrict_P0(X):
    """Forget d0 (restriction to G_n (x) H_m)."""
    return RestrictedModule(X, 1)


def restrict_P1(X):
    """Forget d1 (restriction to H_n (x) G_m)."""
    return RestrictedModule(X, 0)


def _step(sch, which, g, k):
    return sch.move(g, k, 0) if which == 0 else sch.move(g, 0, k)


@dataclass(frozen=True)
class IntervalDecomposition:
    direction: int
    intervals: tuple  # sorted (start_degree, length) pairs

    def multiset(self):
        return Counter(self.intervals)

    def lengths(self):
        return Counter(L for _, L in self.intervals)

    def total_dim(self):
        return sum(L for _, L in self.intervals)

    def rank_at(self, scheme, g, j):
        """rank of d^j at degree g implied by the intervals."""
        N = scheme.order(self.direction)
        count = 0
        for start, L in self.intervals:
            for k in range(min(L, N)):
                if _step(scheme, self.direction, start, k) == g:
                    if k + j <= L - 1:
                        count += 1
                    break
        return count

    def to_text(self, scheme):
        name = "e0" if self.direction == 0 else "e1"
        lines = [f"direction: {name}", f"intervals: {len(self.intervals)}"]
        for (start, L), mult in sorted(self.multiset().items()):
            lines.append(f"  start {list(start)} length {L} x{mult}")
        return "\n".join(lines)


def decompose_intervals(R):
    """Interval multiset of the surviving graded nilpotent operator.

    Repeatedly split off a chain of maximal length generated by a homogeneous
    vector (degrees scanned in descending lexicographic order); the span of
    the chains found so far is a d-stable subspace S and lengths are measured
    in the quotient by S.
    """
    M, w = R.module, R.survivor
    sch = M.scheme
    N = sch.order(w)
    field = M.field
    spans = {g: Subspace(field, k) for g, k in M.dims.items()}
    found = []
    order = sorted(M.dims, reverse=True)
    for L in range(N, 0, -1):
        for g in order:
            tgt = _step(sch, w, g, L - 1)
            if tgt not in spans:
                continue
            P = M.power(w, L - 1, g)
            for i in range(M.dim(g)):
                if spans[tgt].contains(P.column(i)):
                    continue
                for k in range(L):
                    spans[_step(sch, w, g, k)].add(M.power(w, k, g).column(i))
                found.append((g, L))
    dec = IntervalDecomposition(w, tuple(sorted(found)))
    assert dec.total_dim() == M.total_dim
    return dec


def interval_soundness(R, dec=None):
    """Ranks of d^j predicted by the intervals agree with matrix ranks."""
    dec = dec or decompose_intervals(R)
    M, w = R.module, R.survivor
    N = M.scheme.order(w)
    for g in M.degrees():
        for j in range(N + 1):
            if dec.rank_at(M.scheme, g, j) != rank(M.power(w, j, g)):
                return False
    return True


def in_kernel_P0(X):
    """Restriction to G_n (x) H_m is free: every d1-interval has length m."""
    return all(L == X.scheme.m for _, L in decompose_intervals(restrict_P0(X)).intervals)


def in_kernel_P1(X):
    """Restriction to H_n (x) G_m is free: every d0-interval has length n."""
    return all(L == X.scheme.n for _, L in decompose_intervals(restrict_P1(X)).intervals)


# --- tops, covers, presentations --------------------------------------------------


def top_generators(X):
    """Homogeneous vectors lifting a basis of X / (im d0 + im d1)."""
    sch = X.scheme
    field = X.field
    gens = []
    for g in X.degrees():
        sp = Subspace(field, X.dim(g))
        for which, src in ((0, sch.move(g, -1, 0)), (1, sch.move(g, 0, -1))):
            if X.dim(src):
                for col in X.block(which, src).columns():
                    sp.add(col)
        for j in sp.complement_basis():
            gens.append((g, tuple(field.one if i == j else field.zero for i in range(X.dim(g)))))
    return gens


def _cover_index(sch, gens, g):
    """Basis of the free cover at degree g: (generator index, a, b)."""
    out = []
    for j, (c, _) in enumerate(gens):
        ab = sch.offset(c, g)
        if ab is not None:
            out.append((j, ab[0], ab[1]))
    return out


def _cover_matrix(M, gens, values, g, index):
    """Columns d0^a d1^b v_j for the cover basis at g (values v_j live in M)."""
    field = M.field
    cols = [M.path(a, b, gens[j][0]).apply(values[j]) for j, a, b in index]
    return Matrix.from_columns(field, cols, M.dim(g))


def is_projective(X):
    """X is free: nm * dim(top) == dim X and the top lifts generate X."""
    sch = X.scheme
    gens = top_generators(X)
    if len(gens) * sch.n * sch.m != X.total_dim:
        return False
    values = [v for _, v in gens]
    for g in X.degrees():
        idx = _cover_index(sch, gens, g)
        if rank(_cover_matrix(X, gens, values, g, idx)) != X.dim(g):
            return False
    return True


def is_stably_zero(X):
    return is_projective(X)


def projective_cover(Y):
    """Free module F on lifted top generators of Y and the surjection F -> Y."""
    sch = Y.scheme
    gens = top_generators(Y)
    if not gens:
        F = zero_module(sch)
        return F, ModuleMorphism(F, Y, {}, check=False)
    F = direct_sum(*[free_module(sch, c) for c, _ in gens])
    values = [v for _, v in gens]
    blocks = {}
    for g in F.dims:
        idx = _cover_index(sch, gens, g)
        blocks[g] = _cover_matrix(Y, gens, values, g, idx)
    return F, ModuleMorphism(F, Y, blocks, check=False)


class Presentation:
    """Generators and minimal relations of X, for computing Hom(X, -)."""

    def __init__(self, X):
        self.module = X
        sch = X.scheme
        field = X.field
        self.gens = top_generators(X)
        self.degrees = [c for c, _ in self.gens]
        values = [v for _, v in self.gens]
        self.index = {}
        self.cover = {}
        kernels = {}
        cover_degrees = set()
        for c in self.degrees:
            for a in range(sch.n):
                for b in range(sch.m):
                    cover_degrees.add(sch.move(c, a, b))
        for g in cover_degrees:
            idx = _cover_index(sch, self.gens, g)
            self.index[g] = idx
            P = _cover_matrix(X, self.gens, values, g, idx)
            self.cover[g] = P
            kernels[g] = nullspace(P) if P.nrows else [
                tuple(field.one if i == j else field.zero for i in range(len(idx))) for j in range(len(idx))]
        # minimal relations: kernel modulo the images of neighbouring kernels
        self.relations = []
        for g in sorted(cover_degrees):
            pos = {t: i for i, t in enumerate(self.index[g])}
            sp = Subspace(field, len(pos))
            for which in (0, 1):
                src = sch.move(g, -1, 0) if which == 0 else sch.move(g, 0, -1)
                if src not in kernels:
                    continue
                for vec in kernels[src]:
                    img = [field.zero] * len(pos)
                    for (j, a, b), x in zip(self.index[src], vec):
                        t = (j, a + 1, b) if which == 0 else (j, a, b + 1)
                        if t in pos:
                            img[pos[t]] = x
                    sp.add(img)
            for vec in kernels[g]:
                if sp.add(vec):
                    self.relations.append((g, vec))
        self._sections = {}

    def section(self, g):
        """Right inverse of the cover map at g."""
        S = self._sections.get(g)
        if S is None:
            X = self.module
            P = self.cover[g]
            S = solve(P, Matrix.identity(X.field, X.dim(g)))
            self._sections[g] = S
        return S

    def value_slices(self, Y):
        """Offsets of each generator's value inside the unknown vector for Hom(X, Y)."""
        offs = []
        pos = 0
        for c in self.degrees:
            offs.append((pos, Y.dim(c)))
            pos += Y.dim(c)
        return offs, pos

    def hom_basis(self, Y):
        """Basis of Hom(X, Y), each element as its stacked values on the generators."""
        field = self.module.field
        offs, nvars = self.value_slices(Y)
        if nvars == 0:
            return []
        rows = []
        for g, vec in self.relations:
            dy = Y.dim(g)
            if not dy:
                continue
            block_rows = [[field.zero] * nvars for _ in range(dy)]
            for (j, a, b), x in zip(self.index[g], vec):
                if x.is_zero():
                    continue
                start, width = offs[j]
                if not width:
                    continue
                P = Y.path(a, b, self.degrees[j])
                for r in range(dy):
                    prow = P.rows[r]
                    brow = block_rows[r]
                    for cidx in range(width):
                        y = prow[cidx]
                        if not y.is_zero():
                            brow[start + cidx] = brow[start + cidx] + x * y
            rows.extend(block_rows)
        if not rows:
            return [tuple(field.one if i == j else field.zero for i in range(nvars)) for j in range(nvars)]
        return nullspace(Matrix._raw(field, tuple(tuple(r) for r in rows), nvars))

    def values_of(self, f):
        """Stacked values of a morphism f: X -> Y on the generators."""
        out = []
        for c, v in self.gens:
            out.extend(f.block(c).apply(v))
        return tuple(out)

    def morphism(self, Y, vector):
        """The morphism X -> Y with the given values on the generators."""
        X = self.module
        offs, _ = self.value_slices(Y)
        values = [tuple(vector[s:s + w]) for s, w in offs]
        blocks = {}
        for g in X.dims:
            if not Y.dim(g):
                continue
            idx = self.index[g]
            Phi = _cover_matrix(Y, self.gens, values, g, idx)
            blocks[g] = Phi @ self.section(g)
        return ModuleMorphism(X, Y, blocks, check=False)


def projective_part(pres, Y):
    """Spanning set of the morphisms X -> Y factoring through a projective.

    Every map X -> F into the free cover of Y is given by linear functionals on
    X in the socle degrees of F (Frobenius pairing); composing with the cover
    map gives the spanning set, in generator-value coordinates.
    """
    X = pres.module
    sch = X.scheme
    field = X.field
    n, m = sch.n, sch.m
    offs, nvars = pres.value_slices(Y)
    out = []
    for e, u in top_generators(Y):
        s = sch.move(e, n - 1, m - 1)
        ds = X.dim(s)
        if not ds:
            continue
        pieces = []
        for j, (c, x) in enumerate(pres.gens):
            ab = sch.offset(e, c)
            if ab is None or not Y.dim(c):
                pieces.append(None)
                continue
            a, b = ab
            w = X.path(n - 1 - a, m - 1 - b, c).apply(x)
            img = Y.path(a, b, e).apply(u)
            pieces.append((w, img))
        for k in range(ds):
            vec = [field.zero] * nvars
            nonzero = False
            for j, piece in enumerate(pieces):
                if piece is None:
                    continue
                w, img = piece
                coef = w[k]
                if coef.is_zero():
                    continue
                start, width = offs[j]
                for i in range(width):
                    if not img[i].is_zero():
                        vec[start + i] = coef * img[i]
                        nonzero = True
            if nonzero:
                out.append(tuple(vec))
    return out


@dataclass
class StableHom:
    dim_hom: int
    dim_projective: int
    representatives: list = dc_field(default_factory=list)

    @property
    def dim(self):
        return self.dim_hom - self.dim_projective

    def to_text(self):
        return (f"dim Hom: {self.dim_hom}\n"
                f"dim factoring through projectives: {self.dim_projective}\n"
                f"dim stable Hom: {self.dim}")


def stable_hom(X, Y, representatives=True):
    """Dimension of the stable Hom space and morphisms representing a basis of it."""
    if X.scheme != Y.scheme:
        raise ModuleError("stable_hom between modules of different schemes")
    pres = Presentation(X)
    basis = pres.hom_basis(Y)
    _, nvars = pres.value_slices(Y)
    sp = Subspace(X.field, nvars)
    for v in projective_part(pres, Y):
        sp.add(v)
    dim_proj = len(sp)
    reps = []
    for v in basis:
        if sp.add(v) and representatives:
            reps.append(pres.morphism(Y, v))
    return StableHom(len(basis), dim_proj, reps)


def is_stably_trivial(f):
    """f factors through a projective module."""
    pres = Presentation(f.source)
    _, nvars = pres.value_slices(f.target)
    sp = Subspace(f.source.field, nvars)
    for v in projective_part(pres, f.target):
        sp.add(v)
    return sp.contains(pres.values_of(f))


# --- R0, eta and the factorization ---------------------------------------------------


def R0(Y):
    """``Y + Y{1,0} + ... + Y{n-1,0}`` with d0 shifting slots down and d1 diagonal."""
    if Y.survivor != 1:
        raise ContractViolation("R0 takes a module over G_n (x) H_m (d1 surviving)")
    M = Y.module
    sch = M.scheme
    n = sch.n
    field = M.field
    layout = {}
    for k in range(n):
        for z in M.dims:
            layout.setdefault(sch.move(z, -k, 0), []).append((k, z))
    for h in layout:
        layout[h].sort()
    dims = {h: sum(M.dim(z) for _, z in slots) for h, slots in layout.items()}
    d0, d1 = {}, {}
    for h, slots in layout.items():
        h0 = sch.move(h, 1, 0)
        if h0 in layout:
            tslots = layout[h0]
            toff = _offsets(M, tslots)
            soff = _offsets(M, slots)
            rows = [[field.zero] * dims[h] for _ in range(dims[h0])]
            for k, z in slots:
                if k == 0:
                    continue
                r0 = toff[(k - 1, z)]
                c0 = soff[(k, z)]
                for i in range(M.dim(z)):
                    rows[r0 + i][c0 + i] = field.one
            d0[h] = Matrix._raw(field, tuple(tuple(r) for r in rows), dims[h])
        h1 = sch.move(h, 0, 1)
        if h1 in layout:
            tslots = layout[h1]
            toff = _offsets(M, tslots)
            soff = _offsets(M, slots)
            rows = [[field.zero] * dims[h] for _ in range(dims[h1])]
            for k, z in slots:
                z1 = sch.move(z, 0, 1)
                if (k, z1) not in toff:
                    continue
                D = M.block(1, z)
                r0, c0 = toff[(k, z1)], soff[(k, z)]
                for i in range(D.nrows):
                    for j in range(D.ncols):
                        rows[r0 + i][c0 + j] = D.rows[i][j]
            d1[h] = Matrix._raw(field, tuple(tuple(r) for r in rows), dims[h])
    return GradedModule(sch, dims, d0, d1, check=False)


def _offsets(M, slots):
    off = {}
    pos = 0
    for k, z in slots:
        off[(k, z)] = pos
        pos += M.dim(z)
    return off


def eta(X):
    """The monomorphism ``x -> (x, d0 x, ..., d0^(n-1) x)`` into R0 P0 X."""
    sch = X.scheme
    target = R0(restrict_P0(X))
    blocks = {}
    for g in X.dims:
        parts = [X.power(0, k, g) for k in range(sch.n) if X.dim(sch.move(g, k, 0))]
        blocks[g] = vstack(X.field, parts, X.dim(g))
    return ModuleMorphism(X, target, blocks, check=False)


def R1(Y):
    if Y.survivor != 0:
        raise ContractViolation("R1 takes a module over H_n (x) G_m (d0 surviving)")
    return swap(R0(RestrictedModule(swap(Y.module), 1)))


def eta1(X):
    return swap_morphism(eta(swap(X)))


def factor_through_eta(f, check_kernel=True):
    """g: R0 P0 X -> Y with g o eta_X = f, for Y in ker P1 (Z2 scheme).

    Induction over the first homological degree, highest first.  At level j
    the unknown is a d1-equivariant map h_j from X^j into Y (lowering the
    first degree by n-1); the slot-k part of g is ``d0^(n-1-k) h``.  The
    equation ``d0^(n-1) h_j = f - s_j eta`` is solved exactly.
    """
    X, Y = f.source, f.target
    sch = X.scheme
    if sch.kind != Z2:
        raise ContractViolation("the factorization induction needs the Z2 scheme")
    if check_kernel and not in_kernel_P1(Y):
        raise ContractViolation("factorization through eta: target is not in ker P1")
    n = sch.n
    field = X.field
    down = lambda g: sch.move(g, -(n - 1), 0)
    H = {}
    for j in sorted({g[0] for g in X.dims}, reverse=True):
        degs = sorted(g for g in X.dims if g[0] == j)
        resid = {}
        for g in degs:
            r = f.block(g)
            for k in range(1, n):
                gk = sch.move(g, k, 0)
                if gk in H:
                    r = r - Y.power(0, n - 1 - k, down(gk)) @ H[gk] @ X.power(0, k, g)
            resid[g] = r
        H.update(_solve_level(X, Y, degs, resid, down, n, field, j))
    R = R0(restrict_P0(X))
    blocks = {}
    for h in R.dims:
        cols = []
        for k in range(n):
            z = sch.move(h, k, 0)
            if not X.dim(z):
                continue
            if z in H:
                cols.append(Y.power(0, n - 1 - k, down(z)) @ H[z])
            else:
                cols.append(Matrix.zeros(field, Y.dim(h), X.dim(z)))
        blocks[h] = hstack(field, cols, Y.dim(h))
    return ModuleMorphism(R, Y, blocks, check=False)


def _solve_level(X, Y, degs, resid, down, n, field, level):
    sch = X.scheme
    var = {}
    nvars = 0
    for g in degs:
        shape = (Y.dim(down(g)), X.dim(g))
        var[g] = (nvars, shape)
        nvars += shape[0] * shape[1]
    if nvars == 0:
        for g in degs:
            if not resid[g].is_zero():
                raise ContractViolation(f"factorization through eta: no preimage at first degree {level}")
        return {}
    rows, rhs = [], []
    z = field.zero

    def unknown(g, r, c):
        start, (nr, nc) = var[g]
        return start + r * nc + c

    for g in degs:
        start, (ny, nx) = var[g]
        top = Y.power(0, n - 1, down(g))
        R = resid[g]
        for r in range(top.nrows):
            for c in range(nx):
                row = [z] * nvars
                for s in range(ny):
                    x = top.rows[r][s]
                    if not x.is_zero():
                        row[unknown(g, s, c)] = x
                rows.append(row)
                rhs.append(R.rows[r][c])
        # d1-equivariance: H_{g+e1} D1X_g = D1Y H_g
        g1 = sch.move(g, 0, 1)
        DX = X.block(1, g)
        DY = Y.block(1, down(g))
        for r in range(DY.nrows):
            for c in range(nx):
                row = [z] * nvars
                if g1 in var:
                    for s in range(DX.nrows):
                        x = DX.rows[s][c]
                        if not x.is_zero():
                            row[unknown(g1, r, s)] = x
                for s in range(ny):
                    x = DY.rows[r][s]
                    if not x.is_zero():
                        row[unknown(g, s, c)] = row[unknown(g, s, c)] - x
                rows.append(row)
                rhs.append(z)
    if not rows:
        return {g: Matrix.zeros(field, *var[g][1]) for g in degs}
    A = Matrix._raw(field, tuple(tuple(r) for r in rows), nvars)
    B = Matrix._raw(field, tuple((x,) for x in rhs), 1)
    sol = solve(A, B)
    if sol is None:
        raise ContractViolation(
            f"factorization through eta: the linear system at first degree {level} has no solution "
            "(the target is not in ker P1, the morphism is invalid, or the target is not induced)")
    out = {}
    for g in degs:
        start, (nr, nc) = var[g]
        out[g] = Matrix._raw(field, tuple(tuple(sol.rows[start + r * nc + c][0] for c in range(nc)) for r in range(nr)), nc)
    return out


def factor_through_eta1(f, check_kernel=True):
    """Symmetric version: g: R1 P1 X -> Y with g o eta1_X = f, for Y in ker P0."""
    g = factor_through_eta(swap_morphism(f), check_kernel=check_kernel)
    return swap_morphism(g)


# --- triangles -------------------------------------------------------------------


@dataclass(frozen=True)
class Triangle:
    """A short exact sequence X -> Y -> Z, standing in for a distinguished triangle."""

    X: GradedModule
    Y: GradedModule
    Z: GradedModule
    i: ModuleMorphism
    p: ModuleMorphism


def cone_from_ses(i, p):
    """Validate ``0 -> X -> Y -> Z -> 0`` and return it as a triangle record."""
    X, Y, Z = i.source, i.target, p.target
    if p.source != Y:
        raise ModuleError("the two maps are not composable")
    for f, name in ((i, "i"), (p, "p")):
        probs = validate_morphism(f)
        if probs:
            raise ModuleError(f"{name}: {probs[0]}")
    for g in sorted(set(X.dims) | set(Y.dims) | set(Z.dims)):
        if Y.dim(g) != X.dim(g) + Z.dim(g):
            raise ModuleError(f"dimensions do not add up at degree {g}")
        if rank(i.block(g)) != X.dim(g):
            raise ModuleError(f"i is not injective at degree {g}")
        if rank(p.block(g)) != Z.dim(g):
            raise ModuleError(f"p is not surjective at degree {g}")
        if not (p.block(g) @ i.block(g)).is_zero():
            raise ModuleError(f"p o i != 0 at degree {g}")
    return Triangle(X, Y, Z, i, p)
