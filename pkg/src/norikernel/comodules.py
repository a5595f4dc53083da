"""Finite-dimensional modules over a FiniteAlgebra.

Comodules over the predual coalgebra of End(H|_D) are represented as
modules over End(H|_D) itself throughout; for finite subdiagrams the two
categories agree.  Module axioms are verified exactly whenever a module
is constructed, and every kernel/cokernel/image factors through verified
module maps.
"""

from .endomorphisms import FiniteAlgebra
from .errors import (FalsifiedIdentityError, InputError,
                     PresentationSearchError)
from .fields import check_same_field
from .matrices import (Matrix, Subspace, is_positive_definite, kernel,
                       solve_homogeneous)


class AlgModule:
    """A left module given by one action matrix per algebra basis element."""

    def __init__(self, algebra, dim, action, check=True):
        self.algebra = algebra
        self.dim = int(dim)
        self.action = tuple(action)
        if len(self.action) != algebra.dim:
            raise InputError("need one action matrix per basis element")
        for m in self.action:
            if (m.nrows, m.ncols) != (self.dim, self.dim):
                raise InputError("action matrices must be %dx%d" % (self.dim, self.dim))
            check_same_field(m.field, algebra.field)
        if check:
            self.verify()

    @property
    def field(self):
        return self.algebra.field

    def action_of(self, coords):
        f = self.field
        acc = Matrix.zeros(f, self.dim, self.dim)
        for c, m in zip(coords, self.action):
            if c:
                acc = acc + m.scale(c)
        return acc

    def verify(self):
        alg = self.algebra
        ident = Matrix.identity(self.field, self.dim)
        if self.action_of(alg.unit) != ident:
            raise FalsifiedIdentityError("unit does not act as the identity")
        for i in range(alg.dim):
            for j in range(alg.dim):
                lhs = self.action[i] * self.action[j]
                rhs = self.action_of(alg.mult[i][j])
                if lhs != rhs:
                    raise FalsifiedIdentityError(
                        "module axiom fails against the structure constants",
                        witness={"pair": (i, j)})

    @classmethod
    def zero(cls, algebra):
        z = Matrix.zeros(algebra.field, 0, 0)
        return cls(algebra, 0, [z] * algebra.dim, check=False)

    @classmethod
    def direct_sum(cls, algebra, summands):
        """Block sum; also returns the injection maps."""
        f = algebra.field
        dim = sum(s.dim for s in summands)
        action = []
        for i in range(algebra.dim):
            action.append(Matrix.block_diag(f, [s.action[i] for s in summands]))
        total = cls(algebra, dim, action, check=False)
        injections = []
        offset = 0
        for s in summands:
            rows = [[f.one() if r == offset + c else f.zero() for c in range(s.dim)]
                    for r in range(dim)]
            injections.append(ModuleMap(s, total, Matrix(f, rows, s.dim), check=False))
            offset += s.dim
        return total, injections

    def __repr__(self):
        return "AlgModule(dim %d over %r)" % (self.dim, self.algebra)


class ModuleMap:
    """A linear map intertwining the actions."""

    def __init__(self, source, target, matrix, check=True):
        if source.algebra is not target.algebra and \
           not source.algebra.structure_constants_equal(target.algebra):
            raise InputError("module map needs both sides over the same algebra")
        if (matrix.nrows, matrix.ncols) != (target.dim, source.dim):
            raise InputError("module map matrix must be %dx%d"
                             % (target.dim, source.dim))
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            self.verify()

    def verify(self):
        for i in range(self.source.algebra.dim):
            if self.matrix * self.source.action[i] != \
               self.target.action[i] * self.matrix:
                raise FalsifiedIdentityError("map does not intertwine the actions",
                                             witness={"basis": i})

    def compose(self, other):
        """self after other."""
        return ModuleMap(other.source, self.target, self.matrix * other.matrix,
                         check=False)

    def __repr__(self):
        return "ModuleMap(%d -> %d)" % (self.source.dim, self.target.dim)


def tautological_module(algebra, vid):
    """h(M): the vertex space with the M-component action."""
    if algebra.vertex_blocks is None:
        raise InputError("tautological modules need an endomorphism algebra")
    dims = dict(algebra.vertex_blocks)
    if str(vid) not in dims:
        raise InputError("vertex %r is not part of the computed subgraph" % (vid,))
    d = dims[str(vid)]
    action = [algebra.tuple_component(algebra.basis_element(i), vid)
              for i in range(algebra.dim)]
    return AlgModule(algebra, d, action)


def hom_space(v, w):
    """Basis of module maps v -> w, canonical echelon order."""
    if not v.algebra.structure_constants_equal(w.algebra):
        raise InputError("hom space needs modules over the same algebra")
    f = v.field
    nv, nw = v.dim, w.dim
    unknowns = nw * nv
    rows = []
    for t in range(v.algebra.dim):
        a = v.action[t]
        b = w.action[t]
        # X*a - b*X = 0, entry (r, c), unknowns X[i][j] flattened row-major
        for r in range(nw):
            for c in range(nv):
                row = [f.zero()] * unknowns
                for k in range(nv):
                    if a.rows[k][c]:
                        row[r * nv + k] = f.add(row[r * nv + k], a.rows[k][c])
                for k in range(nw):
                    if b.rows[r][k]:
                        row[k * nv + c] = f.sub(row[k * nv + c], b.rows[r][k])
                rows.append(row)
    sol = solve_homogeneous(Matrix(f, rows, unknowns))
    maps = []
    for vec in sol.basis.rows:
        m = Matrix(f, [list(vec[r * nv:(r + 1) * nv]) for r in range(nw)], nv)
        maps.append(ModuleMap(v, w, m))
    return maps


def _subspace_module(parent, space):
    """Induced module on a subspace closed under the action."""
    f = parent.field
    incl = space.basis.transpose()
    action = []
    for m in parent.action:
        cols = []
        for j in range(space.dim):
            img = m.apply(incl.column(j))
            coords = space.coordinates(img)
            if coords is None:
                raise FalsifiedIdentityError("subspace is not action-stable")
            cols.append(coords)
        action.append(Matrix.from_columns(f, cols, space.dim))
    sub = AlgModule(parent.algebra, space.dim, action)
    return sub, ModuleMap(sub, parent, incl)


def kernel_of(f):
    """(kernel module, inclusion map)."""
    return _subspace_module(f.source, kernel(f.matrix))


def image_of(f):
    """(image module, inclusion into target, corestriction of f)."""
    from .matrices import image as column_space
    space = column_space(f.matrix)
    img, incl = _subspace_module(f.target, space)
    cols = [space.coordinates(f.matrix.column(j)) for j in range(f.source.dim)]
    corestrict = ModuleMap(f.source, img,
                           Matrix.from_columns(f.matrix.field, cols, img.dim))
    composite = incl.compose(corestrict)
    if composite.matrix != f.matrix:
        raise FalsifiedIdentityError("canonical factorization failed")
    return img, incl, corestrict


def cokernel_of(f):
    """(cokernel module, projection map)."""
    from .matrices import cokernel as coker
    qdim, proj = coker(f.matrix)
    field = f.matrix.field
    target = f.target
    # section: unit vectors at the non-pivot coordinates of the image
    from .matrices import image as column_space
    pivots = set(column_space(f.matrix).pivots)
    free = [c for c in range(target.dim) if c not in pivots]
    sec = Matrix(field, [[field.one() if free[j] == r else field.zero()
                          for j in range(qdim)] for r in range(target.dim)], qdim)
    action = [proj * m * sec for m in target.action]
    cok = AlgModule(target.algebra, qdim, action)
    return cok, ModuleMap(target, cok, proj)


def pairwise_hom_dims(modules):
    return [[len(hom_space(v, w)) for w in modules] for v in modules]


# -- presentations by tautological modules ----------------------------------------


class Presentation:
    """A verified exact sequence  (+) h(M_i) -> (+) h(N_j) -> V -> 0."""

    def __init__(self, generators, relations, relation_map, generator_map, report):
        self.generators = tuple(generators)
        self.relations = tuple(relations)
        self.relation_map = relation_map
        self.generator_map = generator_map
        self.report = report

    def to_json(self):
        return dict(self.report)


def _greedy_cover(candidates, target_dim, field, max_copies):
    """Pick tautological maps whose images jointly fill the target."""
    chosen = []
    copies = {vid: 0 for vid, _ in candidates}
    current = Subspace.zero(field, target_dim)
    if target_dim == 0:
        return chosen
    for vid, homs in candidates:
        for h in homs:
            if copies[vid] >= max_copies:
                break
            enlarged = current.sum(_map_image(h))
            if enlarged.dim > current.dim:
                chosen.append((vid, h))
                copies[vid] += 1
                current = enlarged
                if current.dim == target_dim:
                    return chosen
    return chosen if current.dim == target_dim else None


def _map_image(h):
    from .matrices import image as column_space
    return column_space(h.matrix)


def present(algebra, module, max_copies=8):
    """Search for a presentation of `module` by tautological modules.

    Follows the constructive route: first cover the module by images of
    maps out of the h(M), then cover the kernel of that cover the same
    way.  Raises PresentationSearchError with a coverage report when the
    bound is exhausted or no tautological map can reach part of the
    module; a returned Presentation is always rank-verified.
    """
    if algebra.vertex_blocks is None:
        raise InputError("presentations need an endomorphism algebra")
    f = algebra.field
    taut = {vid: tautological_module(algebra, vid)
            for vid, _ in algebra.vertex_blocks}
    vertex_order = [vid for vid, _ in algebra.vertex_blocks]

    def cover(target):
        candidates = [(vid, hom_space(taut[vid], target)) for vid in vertex_order]
        reachable = Subspace.zero(f, target.dim)
        for _, homs in candidates:
            for h in homs:
                reachable = reachable.sum(_map_image(h))
        if reachable.dim < target.dim:
            raise PresentationSearchError(
                "tautological images span only %d of %d dimensions"
                % (reachable.dim, target.dim),
                report={"covered_dim": reachable.dim, "dim": target.dim})
        chosen = _greedy_cover(candidates, target.dim, f, max_copies)
        if chosen is None:
            raise PresentationSearchError(
                "copy bound %d exhausted before covering" % max_copies,
                report={"dim": target.dim, "max_copies": max_copies})
        return chosen

    # generators
    if module.dim == 0:
        gen_ids, gen_maps = [], []
    else:
        chosen = cover(module)
        gen_ids = [vid for vid, _ in chosen]
        gen_maps = [h for _, h in chosen]
    gen_sum, gen_inj = AlgModule.direct_sum(algebra, [taut[v] for v in gen_ids])
    pi_matrix = Matrix.zeros(f, module.dim, gen_sum.dim)
    for h, inj in zip(gen_maps, gen_inj):
        pi_matrix = pi_matrix + h.matrix * inj.matrix.transpose()
    pi = ModuleMap(gen_sum, module, pi_matrix)

    # relations cover the kernel of pi
    ker_module, ker_incl = kernel_of(pi)
    if ker_module.dim == 0:
        rel_ids, rel_maps = [], []
    else:
        chosen = cover(ker_module)
        rel_ids = [vid for vid, _ in chosen]
        rel_maps = [h for _, h in chosen]
    rel_sum, rel_inj = AlgModule.direct_sum(algebra, [taut[v] for v in rel_ids])
    rel_matrix = Matrix.zeros(f, gen_sum.dim, rel_sum.dim)
    for h, inj in zip(rel_maps, rel_inj):
        rel_matrix = rel_matrix + ker_incl.matrix * h.matrix * inj.matrix.transpose()
    rel = ModuleMap(rel_sum, gen_sum, rel_matrix)

    checks = _verify_presentation(rel, pi, module)
    report = {"generators": ["h(%s)" % v for v in gen_ids],
              "relations": ["h(%s)" % v for v in rel_ids],
              "module_dim": module.dim}
    report.update(checks)
    return Presentation([("h(%s)" % v) for v in gen_ids],
                        [("h(%s)" % v) for v in rel_ids], rel, pi, report)


def _verify_presentation(rel, pi, module):
    from .matrices import image as column_space
    composite = pi.matrix * rel.matrix
    if not composite.is_zero():
        raise FalsifiedIdentityError("presentation composite is nonzero")
    if pi.matrix.rank() != module.dim:
        raise FalsifiedIdentityError("generator map is not surjective")
    ker = kernel(pi.matrix)
    img = column_space(rel.matrix)
    if not (ker.dim == img.dim and ker.contains_subspace(img)):
        raise FalsifiedIdentityError("image of relations differs from the kernel")
    return {"exact": True, "composite_zero": True, "surjective": True,
            "kernel_dim": ker.dim}


# -- quotient by the kernel of an exact projection -------------------------------


def quotient_by_kernel(modules, idempotent):
    """Hom tables of the quotient category by the ideal of maps killed by
    restriction to a central idempotent's eigenspace.

    `idempotent` is given in algebra coordinates; it must be central,
    idempotent and nonzero (a zero restriction functor is rejected as
    degenerate).  Returns, per ordered pair of modules, the dimensions of
    Hom, of the ideal, and the projection onto the quotient, after
    verifying both absorption laws on the given data.
    """
    if not modules:
        raise InputError("need at least one module")
    alg = modules[0].algebra
    f = alg.field
    eps = tuple(f.coerce(c) for c in idempotent)
    if len(eps) != alg.dim:
        raise InputError("idempotent coordinates have wrong length")
    if not any(eps):
        raise InputError("the zero idempotent gives a degenerate restriction")
    if alg.multiply(eps, eps) != eps:
        raise InputError("supplied element is not idempotent")
    for i in range(alg.dim):
        b = alg.basis_element(i)
        if alg.multiply(eps, b) != alg.multiply(b, eps):
            raise InputError("idempotent is not central")

    from .matrices import cokernel_of_inclusion
    homs = {}
    ideals = {}
    tables = {}
    for a, va in enumerate(modules):
        for b, wb in enumerate(modules):
            basis = hom_space(va, wb)
            e_v = va.action_of(eps)
            member_rows = []
            for h in basis:
                member_rows.append([x for row in (h.matrix * e_v).rows for x in row])
            # ideal = hom-space coordinates where the map restricted to the
            # idempotent part vanishes
            if basis:
                killed = solve_homogeneous(
                    Matrix(f, list(map(list, zip(*member_rows))), len(basis)))
            else:
                killed = Subspace.zero(f, 0)
            homs[(a, b)] = basis
            ideals[(a, b)] = killed
            qdim, proj = cokernel_of_inclusion(killed)
            tables[(a, b)] = {"hom_dim": len(basis), "ideal_dim": killed.dim,
                              "quotient_dim": qdim, "projection": proj}
    _verify_absorption(modules, homs, ideals)
    return tables


def _verify_absorption(modules, homs, ideals):
    for a in range(len(modules)):
        for b in range(len(modules)):
            ideal_ab = ideals[(a, b)]
            for c in range(len(modules)):
                # post-composition: Hom(b,c) o I(a,b) inside I(a,c)
                for vec in ideal_ab.basis.rows:
                    fmap = _combine(homs[(a, b)], vec)
                    if fmap is None:
                        continue
                    for g in homs[(b, c)]:
                        composite = g.matrix * fmap
                        coords = _hom_coordinates(homs[(a, c)], composite)
                        if coords is None or not ideals[(a, c)].contains(coords):
                            raise FalsifiedIdentityError(
                                "ideal not absorbed under post-composition",
                                witness={"pair": (a, b, c)})
                # pre-composition: I(a,b) o Hom(c,a) inside I(c,b)
                for vec in ideal_ab.basis.rows:
                    fmap = _combine(homs[(a, b)], vec)
                    if fmap is None:
                        continue
                    for g in homs[(c, a)]:
                        composite = fmap * g.matrix
                        coords = _hom_coordinates(homs[(c, b)], composite)
                        if coords is None or not ideals[(c, b)].contains(coords):
                            raise FalsifiedIdentityError(
                                "ideal not absorbed under pre-composition",
                                witness={"pair": (a, b, c)})


def _combine(basis, coords):
    if not basis:
        return None
    f = basis[0].matrix.field
    acc = Matrix.zeros(f, basis[0].matrix.nrows, basis[0].matrix.ncols)
    for c, h in zip(coords, basis):
        if c:
            acc = acc + h.matrix.scale(c)
    return acc


def _hom_coordinates(basis, matrix):
    if not basis:
        return None if not matrix.is_zero() else ()
    f = matrix.field
    flat_each = [[x for row in h.matrix.rows for x in row] for h in basis]
    space = Subspace.from_vectors(f, matrix.nrows * matrix.ncols, flat_each)
    target = [x for row in matrix.rows for x in row]
    raw = space.coordinates(target)
    if raw is None:
        return None
    # express back in the original (possibly non-echelon) hom basis: the
    # hom bases here come from solve_homogeneous and are already echelon,
    # so raw coordinates apply directly.
    return raw


# -- semisimplicity -----------------------------------------------------------------


class SemisimpleVerdict:
    def __init__(self, semisimple, radical_basis, method, detail=""):
        self.semisimple = semisimple
        self.radical_basis = radical_basis
        self.method = method
        self.detail = detail

    def to_json(self):
        rad = None
        if self.radical_basis is not None:
            rad = [[str(x) for x in row] for row in self.radical_basis]
        return {"semisimple": self.semisimple, "radical_dim":
                len(self.radical_basis) if self.radical_basis is not None else None,
                "radical_basis": rad, "method": self.method, "detail": self.detail}


def trace_form_gram(algebra):
    """Gram matrix of (a, b) -> trace of left multiplication by a*b."""
    f = algebra.field
    n = algebra.dim
    lmats = [algebra.left_mult_matrix(algebra.basis_element(i)) for i in range(n)]
    rows = []
    for i in range(n):
        rows.append([(lmats[i] * lmats[j]).trace() for j in range(n)])
    return Matrix(f, rows, n)


def is_semisimple(algebra, enumeration_bound=200000):
    """Trace-form verdict: in characteristic zero the radical of the form
    trace(L_a L_b) is the Jacobson radical.  In characteristic p a
    nondegenerate form still certifies semisimplicity; a degenerate one is
    inconclusive and falls back to the exhaustive radical search when the
    field is small enough."""
    if algebra.dim == 0:
        return SemisimpleVerdict(True, [], "trace_form", "zero algebra")
    gram = trace_form_gram(algebra)
    rad = kernel(gram)
    if algebra.field.is_rational:
        return SemisimpleVerdict(rad.dim == 0, list(rad.basis.rows), "trace_form")
    if rad.dim == 0:
        return SemisimpleVerdict(True, [], "trace_form")
    p = algebra.field.p
    if p ** algebra.dim <= enumeration_bound:
        radical = radical_by_search(algebra, enumeration_bound)
        return SemisimpleVerdict(len(radical) == 0, radical, "exhaustive_search",
                                 "trace form degenerate in characteristic %d" % p)
    return SemisimpleVerdict(None, None, "inconclusive",
                             "trace form degenerate in characteristic %d and "
                             "the field is too large to enumerate" % p)


class KleimanResult:
    def __init__(self, definite, semisimple, witness=None):
        self.definite = definite
        self.semisimple = semisimple
        self.witness = witness

    def to_json(self):
        return {"positive_definite": self.definite, "semisimple": self.semisimple,
                "witness": self.witness}


def kleiman_check(algebra, involution):
    """Positive definiteness of trace(a b') for a supplied involution b'.

    The involution is a matrix on algebra coordinates, verified to be an
    algebra anti-automorphism with square one; definiteness is decided
    exactly through leading principal minors and implies semisimplicity.
    Only available over the rationals."""
    if not algebra.field.is_rational:
        raise InputError("the positivity criterion needs rational coefficients")
    f = algebra.field
    n = algebra.dim
    if (involution.nrows, involution.ncols) != (n, n):
        raise InputError("involution matrix has wrong shape")
    if involution * involution != Matrix.identity(f, n):
        raise InputError("involution does not square to the identity")
    if involution.apply(algebra.unit) != algebra.unit:
        raise InputError("involution does not fix the unit")
    for i in range(n):
        for j in range(n):
            lhs = involution.apply(algebra.mult[i][j])
            rhs = algebra.multiply(involution.apply(algebra.basis_element(j)),
                                   involution.apply(algebra.basis_element(i)))
            if lhs != rhs:
                raise InputError("involution is not an anti-automorphism "
                                 "(fails on basis pair (%d, %d))" % (i, j))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            prime = involution.apply(algebra.basis_element(j))
            row.append(algebra.trace_of(algebra.multiply(
                algebra.basis_element(i), prime)))
        rows.append(row)
    gram = Matrix(f, rows, n)
    if gram != gram.transpose():
        return KleimanResult(False, None, witness="trace form is not symmetric")
    if is_positive_definite(gram):
        return KleimanResult(True, True)
    return KleimanResult(False, None, witness="a leading principal minor is <= 0")


# -- independent brute-force radical -----------------------------------------------


def _sandwich_witness_rational(algebra):
    """Nonzero a with a*b*a = 0 for every b, decided by elimination over
    the algebraic closure (Groebner bases); returns True when such an
    element exists.  Such an element exists exactly when the radical is
    nonzero."""
    import sympy

    n = algebra.dim
    xs = sympy.symbols("x0:%d" % n)
    # m3[i][j][k] = coordinates of b_i * b_j * b_k
    polys = []
    for j in range(n):
        coords = [sympy.Integer(0)] * n
        acc = {}
        for i in range(n):
            left = algebra.mult[i][j]
            for t, c in enumerate(left):
                if c:
                    for k in range(n):
                        cell = algebra.mult[t][k]
                        for s, d in enumerate(cell):
                            if d:
                                key = (i, k, s)
                                acc[key] = acc.get(key, 0) + \
                                    sympy.Rational(c.numerator, c.denominator) * \
                                    sympy.Rational(d.numerator, d.denominator)
        comps = [sympy.Integer(0)] * n
        for (i, k, s), coeff in acc.items():
            comps[s] = comps[s] + coeff * xs[i] * xs[k]
        polys.extend(c for c in comps if c != 0)
    if not polys:
        return n > 0  # multiplication is identically zero on a nonzero space
    for idx in range(n):
        gb = sympy.groebner(polys + [xs[idx] - 1], *xs, order="grevlex",
                            domain="QQ")
        if gb.exprs != [sympy.Integer(1)]:
            return True
    return False


def _enumerate_sandwich(algebra):
    """All sandwich elements over a small prime field, as a subspace."""
    p = algebra.field.p
    n = algebra.dim
    found = []
    basis = [algebra.basis_element(i) for i in range(n)]
    total = p ** n
    for code in range(1, total):
        coords = []
        c = code
        for _ in range(n):
            coords.append(c % p)
            c //= p
        coords = tuple(coords)
        ok = True
        for j in range(n):
            inner = algebra.multiply(coords, basis[j])
            if any(algebra.multiply(inner, coords)):
                ok = False
                break
        if ok:
            found.append(coords)
    return Subspace.from_vectors(algebra.field, n, found)


def _ideal_closure(algebra, seed_vectors):
    """Two-sided ideal generated by a set of coordinate vectors."""
    f = algebra.field
    n = algebra.dim
    current = Subspace.from_vectors(f, n, seed_vectors)
    while True:
        new_vecs = list(current.basis.rows)
        for v in current.basis.rows:
            for i in range(n):
                b = algebra.basis_element(i)
                new_vecs.append(algebra.multiply(b, v))
                new_vecs.append(algebra.multiply(v, b))
        bigger = Subspace.from_vectors(f, n, new_vecs)
        if bigger.dim == current.dim:
            return current
        current = bigger


def _subspace_nilpotent(algebra, space):
    """Does the subspace, assumed an ideal, power down to zero?"""
    current = space
    for _ in range(algebra.dim + 1):
        if current.dim == 0:
            return True
        prods = []
        for x in current.basis.rows:
            for y in space.basis.rows:
                prods.append(algebra.multiply(x, y))
        current = Subspace.from_vectors(algebra.field, algebra.dim, prods)
    return current.dim == 0


def _quotient_algebra(algebra, ideal):
    from .matrices import cokernel_of_inclusion
    f = algebra.field
    qdim, proj = cokernel_of_inclusion(ideal)
    pivots = set(ideal.pivots)
    free = [c for c in range(algebra.dim) if c not in pivots]
    sec_cols = []
    for c in free:
        v = [f.zero()] * algebra.dim
        v[c] = f.one()
        sec_cols.append(tuple(v))
    mult = []
    for i in range(qdim):
        row = []
        for j in range(qdim):
            prod = algebra.multiply(sec_cols[i], sec_cols[j])
            row.append(proj.apply(prod))
        mult.append(row)
    unit = proj.apply(algebra.unit)
    return FiniteAlgebra(f, mult, unit), proj, sec_cols


def radical_by_search(algebra, enumeration_bound=200000):
    """Jacobson radical over a small prime field by exhaustive search for
    square-zero-sandwich elements, independent of any trace form.

    An element a with aXa = 0 for all X generates a square-zero ideal
    inside the radical, and the radical is nonzero exactly when such an
    element exists; peel the ideal generated by all of them off and
    recurse on the quotient."""
    if algebra.field.is_rational:
        raise InputError("exhaustive search needs a finite field; "
                         "use certified_radical over the rationals")
    if algebra.field.p ** algebra.dim > enumeration_bound:
        raise InputError("field too large for the exhaustive search")
    if algebra.dim == 0:
        return []
    sandwich = _enumerate_sandwich(algebra)
    if sandwich.dim == 0:
        return []
    ideal = _ideal_closure(algebra, list(sandwich.basis.rows))
    if not _subspace_nilpotent(algebra, ideal):
        raise FalsifiedIdentityError("sandwich ideal failed nilpotency")
    quotient, _, sec = _quotient_algebra(algebra, ideal)
    f = algebra.field
    vectors = [list(v) for v in ideal.basis.rows]
    for v in radical_by_search(quotient, enumeration_bound):
        lift = [f.zero()] * algebra.dim
        for r, coeff in enumerate(v):
            if coeff:
                for t in range(algebra.dim):
                    lift[t] = f.add(lift[t], f.mul(coeff, sec[r][t]))
        vectors.append(lift)
    space = Subspace.from_vectors(f, algebra.dim, vectors)
    return list(space.basis.rows)


def certified_radical(algebra, enumeration_bound=200000):
    """The radical with an independent certificate.

    Candidate: the trace-form radical.  Certificates: it is a two-sided
    ideal; it is nilpotent (so it sits inside the radical); and the
    quotient algebra has no nonzero square-zero-sandwich element (so
    nothing of the radical remains outside it).  The last step uses
    Groebner elimination over the rationals and exhaustive search over
    small prime fields, neither of which involves the trace form."""
    f = algebra.field
    if not f.is_rational:
        rad = radical_by_search(algebra, enumeration_bound)
        return rad, True
    gram = trace_form_gram(algebra)
    rad = kernel(gram)
    n = algebra.dim
    for v in rad.basis.rows:
        for i in range(n):
            b = algebra.basis_element(i)
            if not rad.contains(algebra.multiply(b, v)) or \
               not rad.contains(algebra.multiply(v, b)):
                raise FalsifiedIdentityError("trace-form radical is not an ideal")
    if not _subspace_nilpotent(algebra, rad):
        raise FalsifiedIdentityError("trace-form radical is not nilpotent")
    quotient, _, _ = _quotient_algebra(algebra, rad)
    if quotient.dim and _sandwich_witness_rational(quotient):
        raise FalsifiedIdentityError(
            "quotient by the trace-form radical still has a nilpotent ideal")
    return list(rad.basis.rows), True
