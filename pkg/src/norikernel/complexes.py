"""Bounded cochain complexes, tensor products, filtered complexes with
their spectral pages, graded pairings, and the Lefschetz machinery.

Complexes live on an explicit degree range; everything outside is zero.
Differentials raise degree by one and d*d = 0 is enforced on
construction.  The tensor differential follows the Koszul rule
d(x ox y) = dx ox y + (-1)^deg(x) x ox dy.
"""

from .comodules import AlgModule
from .errors import FalsifiedIdentityError, InputError
from .fields import check_same_field
from .matrices import Matrix, Subspace, kernel, solve_linear
from .matrices import cokernel_of_inclusion, image as column_space


class Complex:
    """dims[i] and d_i: C^i -> C^{i+1} for lo <= i <= hi.  Optionally the
    terms carry module structures over one algebra, in which case the
    differentials are checked to intertwine."""

    def __init__(self, field, lo, hi, dims, diffs, modules=None):
        if lo > hi:
            raise InputError("empty degree range")
        self.field = field
        self.lo = int(lo)
        self.hi = int(hi)
        self.dims = {int(k): int(v) for k, v in dims.items()}
        for i in range(self.lo, self.hi + 1):
            self.dims.setdefault(i, 0)
        self.diffs = {}
        for i in range(self.lo, self.hi):
            d = diffs.get(i)
            if d is None:
                d = Matrix.zeros(field, self.dim(i + 1), self.dim(i))
            if (d.nrows, d.ncols) != (self.dim(i + 1), self.dim(i)):
                raise InputError("differential at degree %d must be %dx%d"
                                 % (i, self.dim(i + 1), self.dim(i)))
            check_same_field(field, d.field)
            self.diffs[i] = d
        self.modules = dict(modules) if modules else None
        if self.modules is not None:
            self._check_module_structure()
        for i in range(self.lo, self.hi - 1):
            if not (self.diffs[i + 1] * self.diffs[i]).is_zero():
                raise InputError("d*d is nonzero at degree %d" % i)

    def _check_module_structure(self):
        from .comodules import ModuleMap
        for i in range(self.lo, self.hi + 1):
            m = self.modules.get(i)
            if m is None or m.dim != self.dim(i):
                raise InputError("module data missing or mismatched at degree %d"
                                 % i)
        for i in range(self.lo, self.hi):
            ModuleMap(self.modules[i], self.modules[i + 1], self.diffs[i])

    def dim(self, i):
        return self.dims.get(i, 0)

    def diff(self, i):
        if self.lo <= i < self.hi:
            return self.diffs[i]
        return Matrix.zeros(self.field, self.dim(i + 1), self.dim(i))

    def cohomology(self):
        """Per-degree cohomology: dimension, plus the induced module when
        the complex carries module structure."""
        out = {}
        for i in range(self.lo, self.hi + 1):
            ker = kernel(self.diff(i))
            rank_in = self.diff(i - 1).rank()
            h_dim = ker.dim - rank_in
            piece = {"dim": h_dim, "kernel_dim": ker.dim, "boundary_rank": rank_in}
            if self.modules is not None:
                piece["module"] = self._cohomology_module(i, ker)
            out[i] = piece
        self._check_euler(out)
        return out

    def _check_euler(self, out):
        f_sum = 0
        h_sum = 0
        for i in range(self.lo, self.hi + 1):
            sign = 1 if i % 2 == 0 else -1
            f_sum += sign * self.dim(i)
            h_sum += sign * out[i]["dim"]
        if f_sum != h_sum:
            raise FalsifiedIdentityError("Euler characteristic mismatch",
                                         witness={"chain": f_sum, "cohomology": h_sum})

    def _cohomology_module(self, i, ker):
        from .comodules import AlgModule as AM
        parent = self.modules[i]
        # coordinates of the boundary image inside the kernel
        boundary = column_space(self.diff(i - 1))
        in_ker = [ker.coordinates(v) for v in boundary.basis.rows]
        if any(c is None for c in in_ker):
            raise FalsifiedIdentityError("boundaries escaped the kernel")
        inner = Subspace.from_vectors(self.field, ker.dim, [list(c) for c in in_ker])
        qdim, proj = cokernel_of_inclusion(inner)
        pivots = set(inner.pivots)
        free = [c for c in range(ker.dim) if c not in pivots]
        section = Matrix(self.field, [[self.field.one() if free[j] == r else
                                       self.field.zero() for j in range(qdim)]
                                      for r in range(ker.dim)], qdim)
        incl = ker.basis.transpose()
        action = []
        for t in range(parent.algebra.dim):
            lift = incl * section          # quotient -> ambient
            moved = parent.action[t] * lift
            cols = []
            for j in range(qdim):
                coords = ker.coordinates(moved.column(j))
                if coords is None:
                    raise FalsifiedIdentityError("action does not preserve cocycles")
                cols.append(proj.apply(coords))
            action.append(Matrix.from_columns(self.field, cols, qdim))
        return AM(parent.algebra, qdim, action)

    def cohomology_dims(self):
        return {i: piece["dim"] for i, piece in self.cohomology().items()}

    def __repr__(self):
        return "Complex(degrees %d..%d over %r)" % (self.lo, self.hi, self.field)


def tensor_complex(c1, c2):
    """Total complex of the double complex, Koszul signs on the right
    factor."""
    check_same_field(c1.field, c2.field)
    f = c1.field
    lo, hi = c1.lo + c2.lo, c1.hi + c2.hi
    dims = {}
    offsets = {}
    for n in range(lo, hi + 1):
        total = 0
        for i in range(c1.lo, c1.hi + 1):
            j = n - i
            if c2.lo <= j <= c2.hi:
                offsets[(i, j)] = total
                total += c1.dim(i) * c2.dim(j)
        dims[n] = total
    diffs = {}
    for n in range(lo, hi):
        entries = [[f.zero()] * dims[n] for _ in range(dims[n + 1])]
        for i in range(c1.lo, c1.hi + 1):
            j = n - i
            if not (c2.lo <= j <= c2.hi) or c1.dim(i) * c2.dim(j) == 0:
                continue
            src_off = offsets[(i, j)]
            # dx ox y component
            if (i + 1, j) in offsets and c1.dim(i + 1):
                blk = c1.diff(i).kronecker(Matrix.identity(f, c2.dim(j)))
                _write_block(entries, blk, offsets[(i + 1, j)], src_off, f, f.one())
            # (-1)^i x ox dy component
            if (i, j + 1) in offsets and c2.dim(j + 1):
                sign = f.one() if i % 2 == 0 else f.neg(f.one())
                blk = Matrix.identity(f, c1.dim(i)).kronecker(c2.diff(j))
                _write_block(entries, blk, offsets[(i, j + 1)], src_off, f, sign)
        diffs[n] = Matrix(f, entries, dims[n])
    return Complex(f, lo, hi, dims, diffs)


def _write_block(entries, block, row_off, col_off, field, scale):
    for r in range(block.nrows):
        for c in range(block.ncols):
            x = block.rows[r][c]
            if x:
                entries[row_off + r][col_off + c] = field.add(
                    entries[row_off + r][col_off + c], field.mul(scale, x))


def kunneth_check(c1, c2):
    """dim H^n(C ox C') = sum over i+j=n of dim H^i dim H^j, exactly."""
    h1 = c1.cohomology_dims()
    h2 = c2.cohomology_dims()
    total = tensor_complex(c1, c2)
    ht = total.cohomology_dims()
    table = {}
    ok = True
    for n in range(total.lo, total.hi + 1):
        expect = 0
        for i in range(c1.lo, c1.hi + 1):
            j = n - i
            if c2.lo <= j <= c2.hi:
                expect += h1[i] * h2[j]
        table[n] = {"tensor": ht[n], "expected": expect}
        if ht[n] != expect:
            ok = False
    return ok, table


# -- filtered complexes and spectral pages ---------------------------------------


class FilteredComplex:
    """A complex with a decreasing filtration F^p, p_min <= p <= p_max.
    F^p is the full space for p <= p_min and zero for p > p_max; the
    stored subspaces must nest and be preserved by the differentials."""

    def __init__(self, complex_, filtration, p_min, p_max):
        self.complex = complex_
        self.p_min = int(p_min)
        self.p_max = int(p_max)
        if self.p_min > self.p_max:
            raise InputError("empty filtration range")
        f = complex_.field
        self.filtration = {}
        for n in range(complex_.lo, complex_.hi + 1):
            for p in range(self.p_min, self.p_max + 1):
                sub = filtration.get((n, p)) if isinstance(filtration, dict) else None
                if sub is None:
                    raise InputError("filtration misses (degree %d, level %d)"
                                     % (n, p))
                if sub.ambient_dim != complex_.dim(n):
                    raise InputError("filtration subspace at (%d, %d) has wrong "
                                     "ambient dimension" % (n, p))
                self.filtration[(n, p)] = sub
        self._validate()

    def level(self, n, p):
        if n < self.complex.lo or n > self.complex.hi:
            return Subspace.zero(self.complex.field, 0)
        if p <= self.p_min:
            return Subspace.full(self.complex.field, self.complex.dim(n))
        if p > self.p_max:
            return Subspace.zero(self.complex.field, self.complex.dim(n))
        return self.filtration[(n, p)]

    def _validate(self):
        c = self.complex
        for n in range(c.lo, c.hi + 1):
            full = Subspace.full(c.field, c.dim(n))
            if self.level(n, self.p_min) != full:
                raise InputError("filtration at degree %d is not exhaustive" % n)
            for p in range(self.p_min, self.p_max + 1):
                if not self.level(n, p).contains_subspace(self.level(n, p + 1)):
                    raise InputError("filtration does not decrease at "
                                     "(degree %d, level %d)" % (n, p))
        for n in range(c.lo, c.hi):
            d = c.diff(n)
            for p in range(self.p_min, self.p_max + 1):
                img = self.level(n, p).linear_image(d)
                if not self.level(n + 1, p).contains_subspace(img):
                    raise InputError("differential does not preserve level %d "
                                     "at degree %d" % (p, n))

    def _z(self, p, n, r):
        """Z_r = F^p(n) meet d^{-1}(F^{p+r}(n+1)); r = -1 means F^p."""
        c = self.complex
        if n < c.lo or n > c.hi:
            return Subspace.zero(c.field, 0)
        base = self.level(n, p)
        if r < 0:
            return base
        target = self.level(n + 1, p + r)
        return base.intersect(target.preimage(c.diff(n)))

    def page_dims(self, r):
        """Dimensions of E_r^{p,q}, as a map (p, q) -> dim (nonzero only)."""
        c = self.complex
        out = {}
        for n in range(c.lo, c.hi + 1):
            for p in range(self.p_min - 1, self.p_max + 2):
                z = self._z(p, n, r)
                denom = self._z(p + 1, n, r - 1)
                boundary = self._z(p - r + 1, n - 1, r - 1).linear_image(
                    c.diff(n - 1)) if n - 1 >= c.lo else \
                    Subspace.zero(c.field, c.dim(n))
                dropped = denom.sum(boundary)
                dim = z.dim - z.intersect(dropped).dim
                if dim:
                    out[(p, n - p)] = dim
        return out

    def pages(self, r_max):
        return {r: self.page_dims(r) for r in range(0, r_max + 1)}

    def infinity_page(self):
        r_stab = self.p_max - self.p_min + 2
        return self.page_dims(r_stab)

    def check_consistency(self, r_max):
        """Monotone page dimensions and the E_infinity sum rule."""
        pages = self.pages(r_max)
        stab = self.infinity_page()
        ok = True
        for r in range(1, r_max + 1):
            prev = pages[r - 1]
            for key, dim in pages[r].items():
                if dim > prev.get(key, 0) and r > 0:
                    ok = False
        h = self.complex.cohomology_dims()
        for n in range(self.complex.lo, self.complex.hi + 1):
            total = sum(dim for (p, q), dim in stab.items() if p + q == n)
            if total != h[n]:
                ok = False
        return ok


def decalage(fc):
    """The shifted filtration: Dec(F)^p C^n = {x in F^(p+n) : dx in
    F^(p+n+1)}."""
    c = fc.complex
    new_min = fc.p_min - c.hi - 1
    new_max = fc.p_max - c.lo
    filtration = {}
    for n in range(c.lo, c.hi + 1):
        for p in range(new_min, new_max + 1):
            # _z(p+n, n, 1) = F^(p+n) meet d^{-1}(F^(p+n+1)), exactly Dec
            filtration[(n, p)] = fc._z(p + n, n, 1)
    return FilteredComplex(c, filtration, new_min, new_max)


def dec_check(fc):
    """Deligne's identity: E_1 of the shifted filtration agrees with E_2
    of the original, under (p, q) -> (2p + q, -p)."""
    dec = decalage(fc)
    e1_dec = dec.page_dims(1)
    e2 = fc.page_dims(2)
    table = []
    ok = True
    keys = set(e1_dec)
    keys |= {(-b, a + 2 * b) for (a, b) in e2}
    for (p, q) in sorted(keys):
        lhs = e1_dec.get((p, q), 0)
        rhs = e2.get((2 * p + q, -p), 0)
        table.append({"dec_p": p, "dec_q": q, "e1_dec": lhs, "e2": rhs})
        if lhs != rhs:
            ok = False
    return ok, table


# -- graded pairings -----------------------------------------------------------------


class GradedPairing:
    """dims of H^0..H^(2n) and pairing matrices H^i x H^(2n-i) -> F."""

    def __init__(self, field, n, dims, pairings):
        self.field = field
        self.n = int(n)
        self.dims = [int(d) for d in dims]
        if len(self.dims) != 2 * self.n + 1:
            raise InputError("need dimensions for degrees 0..2n")
        self.pairings = {}
        for i in range(2 * self.n + 1):
            mat = pairings.get(i)
            want = (self.dims[i], self.dims[2 * self.n - i])
            if mat is None:
                if want[0] == 0 or want[1] == 0:
                    mat = Matrix.zeros(field, want[0], want[1])
                else:
                    raise InputError("pairing missing at degree %d" % i)
            if (mat.nrows, mat.ncols) != want:
                raise InputError("pairing at degree %d must be %dx%d"
                                 % (i, want[0], want[1]))
            self.pairings[i] = mat

    def verify(self):
        """Perfect means every pairing matrix is square and invertible."""
        failures = []
        for i in range(2 * self.n + 1):
            m = self.pairings[i]
            if not m.is_square():
                failures.append({"degree": i, "reason": "not square",
                                 "shape": [m.nrows, m.ncols]})
            elif m.nrows and m.rank() != m.nrows:
                failures.append({"degree": i, "reason": "singular",
                                 "rank": m.rank()})
        return len(failures) == 0, failures

    def duality_data(self):
        """Per-degree coevaluation/evaluation from the basis formulas."""
        from .tensor import DualityDatum, duality_from_pairing
        ok, failures = self.verify()
        if not ok:
            raise InputError("pairing is not perfect: %r" % failures)
        out = {}
        for i in range(2 * self.n + 1):
            m = self.pairings[i]
            if m.nrows == 0:
                out[i] = DualityDatum(self.field, 0, 0, [], [])
            else:
                out[i] = duality_from_pairing(self.field, m)
        return out


# -- Lefschetz ------------------------------------------------------------------------


class LefschetzDatum:
    """Graded dims H^0..H^(2n) with an operator H^i -> H^(i+2); the hard
    Lefschetz isomorphisms are verified on construction and violations
    are rejected naming the failing power."""

    def __init__(self, field, n, dims, operator):
        self.field = field
        self.n = int(n)
        self.dims = [int(d) for d in dims]
        if len(self.dims) != 2 * self.n + 1:
            raise InputError("need dimensions for degrees 0..2n")
        self.operator = {}
        for i in range(2 * self.n - 1):
            mat = operator.get(i)
            want = (self.dims[i + 2], self.dims[i])
            if mat is None:
                mat = Matrix.zeros(field, want[0], want[1])
            if (mat.nrows, mat.ncols) != want:
                raise InputError("operator at degree %d must be %dx%d"
                                 % (i, want[0], want[1]))
            self.operator[i] = mat
        self._verify_hard_lefschetz()

    def power(self, i, k):
        """The matrix of the k-th operator power H^i -> H^(i+2k)."""
        if k == 0:
            return Matrix.identity(self.field, self.dim(i))
        acc = Matrix.identity(self.field, self.dim(i))
        deg = i
        for _ in range(k):
            if deg + 2 > 2 * self.n:
                return Matrix.zeros(self.field, 0, self.dim(i))
            acc = self.operator[deg] * acc
            deg += 2
        return acc

    def dim(self, i):
        if 0 <= i <= 2 * self.n:
            return self.dims[i]
        return 0

    def _verify_hard_lefschetz(self):
        for i in range(1, self.n + 1):
            m = self.power(self.n - i, i)
            if m.nrows != m.ncols or (m.nrows and m.rank() != m.nrows):
                raise InputError(
                    "hard Lefschetz fails: power %d from degree %d is not an "
                    "isomorphism" % (i, self.n - i))


def lefschetz_decompose(ld):
    """Primitive parts p^i = ker of the (n - i + 1)st power on H^i, with a
    basis-level certificate that the shifted primitives decompose every
    degree."""
    f = ld.field
    primitives = {}
    for i in range(ld.n + 1):
        primitives[i] = kernel(ld.power(i, ld.n - i + 1))
    certificate = {}
    for m in range(2 * ld.n + 1):
        vectors = []
        layers = []
        k = max(0, m - ld.n)
        while m - 2 * k >= 0:
            i = m - 2 * k
            if i <= ld.n:
                power = ld.power(i, k)
                for v in primitives[i].basis.rows:
                    vectors.append(power.apply(v))
                layers.append({"k": k, "primitive_degree": i,
                               "count": primitives[i].dim})
            k += 1
        span = Subspace.from_vectors(f, ld.dim(m), vectors)
        if span.dim != len(vectors) or span.dim != ld.dim(m):
            raise FalsifiedIdentityError(
                "primitive decomposition fails in degree %d" % m,
                witness={"independent": span.dim, "vectors": len(vectors),
                         "dim": ld.dim(m)})
        certificate[m] = layers
    return {"primitive_dims": [primitives[i].dim for i in range(ld.n + 1)],
            "certificate": certificate}


def graded_endomorphism_algebra(field, dims):
    """The full block algebra sum of End(H^i), realized on the graded
    space; a convenient host for involutions in the positivity test."""
    from .endomorphisms import FiniteAlgebra
    mats = []
    total = sum(dims)
    offsets = []
    pos = 0
    for d in dims:
        offsets.append(pos)
        pos += d
    for b, d in enumerate(dims):
        for i in range(d):
            for j in range(d):
                m = [[field.zero()] * total for _ in range(total)]
                m[offsets[b] + i][offsets[b] + j] = field.one()
                mats.append(Matrix(field, m, total))
    return FiniteAlgebra.from_matrices(field, mats)


def lefschetz_semisimple(algebra, involution):
    """Positivity criterion for a graded endomorphism algebra with a
    supplied involution; delegates to the trace-form positivity test."""
    from .comodules import kleiman_check
    return kleiman_check(algebra, involution)