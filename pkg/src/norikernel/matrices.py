"""Exact dense linear algebra over QQ and F_p.

Everything returns canonical data: subspaces always come back as the
unique reduced row echelon basis, so equality of subspaces is equality
of matrices and repeated runs are bit-identical.

Rational elimination is fraction-free: rows are cleared to integers and
combined by cross-multiplication with gcd stripping, so no Fraction
arithmetic happens until the final normalization pass.
"""

from fractions import Fraction
from math import gcd

from .errors import InputError
from .fields import check_same_field


class Matrix:
    """Immutable rows x cols matrix with entries in a fixed field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if rows:
            ncols = len(rows[0])
            for row in rows:
                if len(row) != ncols:
                    raise InputError("ragged matrix rows")
        elif ncols is None:
            raise InputError("0-row matrix needs an explicit column count")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field, nrows, ncols):
        zero = field.zero()
        return cls(field, [[zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, field, columns, nrows=None):
        if not columns:
            if nrows is None:
                raise InputError("0-column matrix needs an explicit row count")
            return cls(field, [[] for _ in range(nrows)], 0)
        nrows = len(columns[0])
        return cls(field, [[col[i] for col in columns] for i in range(nrows)], len(columns))

    # -- basics ------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.rows))

    def __repr__(self):
        return "Matrix(%r, %d x %d)" % (self.field, self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def tolist(self):
        return [list(r) for r in self.rows]

    def is_zero(self):
        zero = self.field.zero()
        return all(x == zero for row in self.rows for x in row)

    def is_square(self):
        return self.nrows == self.ncols

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise InputError("expected a Matrix, got %r" % (other,))
        check_same_field(self.field, other.field)

    def __add__(self, other):
        self._check(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise InputError("shape mismatch in addition")
        f = self.field
        return Matrix(f, [[f.add(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return Matrix(f, [[f.neg(a) for a in row] for row in self.rows], self.ncols)

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        return Matrix(f, [[f.mul(c, a) for a in row] for row in self.rows], self.ncols)

    def __mul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise InputError("shape mismatch in product: %dx%d times %dx%d"
                             % (self.nrows, self.ncols, other.nrows, other.ncols))
        f = self.field
        zero = f.zero()
        out = []
        for ra in self.rows:
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a = ra[k]
                    if a:
                        acc = f.add(acc, f.mul(a, other.rows[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix(f, out, other.ncols)

    def apply(self, vector):
        """Matrix times coordinate vector (a sequence), returns a tuple."""
        if len(vector) != self.ncols:
            raise InputError("vector length %d does not match %d columns"
                             % (len(vector), self.ncols))
        f = self.field
        vec = [f.coerce(x) for x in vector]
        out = []
        for row in self.rows:
            acc = f.zero()
            for a, x in zip(row, vec):
                if a and x:
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return tuple(out)

    def transpose(self):
        return Matrix(self.field, [self.column(j) for j in range(self.ncols)], self.nrows)

    def trace(self):
        if not self.is_square():
            raise InputError("trace of a non-square matrix")
        f = self.field
        acc = f.zero()
        for i in range(self.nrows):
            acc = f.add(acc, self.rows[i][i])
        return acc

    def kronecker(self, other):
        """Kronecker product; dims multiply, (A ox B)(C ox D) = AC ox BD."""
        self._check(other)
        f = self.field
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([f.mul(a, b) for a in ra for b in rb])
        return Matrix(f, out, self.ncols * other.ncols)

    def hstack(self, other):
        self._check(other)
        if self.nrows != other.nrows:
            raise InputError("hstack row mismatch")
        return Matrix(self.field, [ra + rb for ra, rb in zip(self.rows, other.rows)],
                      self.ncols + other.ncols)

    def vstack(self, other):
        self._check(other)
        if self.ncols != other.ncols:
            raise InputError("vstack column mismatch")
        return Matrix(self.field, self.rows + other.rows, self.ncols)

    @classmethod
    def block_diag(cls, field, blocks):
        nrows = sum(b.nrows for b in blocks)
        ncols = sum(b.ncols for b in blocks)
        zero = field.zero()
        out = [[zero] * ncols for _ in range(nrows)]
        r = c = 0
        for b in blocks:
            check_same_field(field, b.field)
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[r + i][c + j] = b.rows[i][j]
            r += b.nrows
            c += b.ncols
        return cls(field, out, ncols)

    # -- elimination -------------------------------------------------------

    def rref(self):
        """Reduced row echelon form.  Returns (Matrix, pivot column tuple)."""
        if self.field.is_rational:
            rows, pivots = _echelon_integer([list(r) for r in self.rows], self.ncols)
            rows = _back_substitute_rational(rows, pivots)
        else:
            rows, pivots = _rref_mod_p([list(r) for r in self.rows], self.ncols, self.field.p)
        return Matrix(self.field, rows, self.ncols), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def inverse(self):
        if not self.is_square():
            raise InputError("inverse of a non-square matrix")
        n = self.nrows
        aug = self.hstack(Matrix.identity(self.field, n))
        red, pivots = aug.rref()
        if tuple(pivots) != tuple(range(n)):
            raise InputError("matrix is singular")
        return Matrix(self.field, [row[n:] for row in red.rows], n)

    def det(self):
        """Determinant; Bareiss over QQ, plain elimination over F_p."""
        if not self.is_square():
            raise InputError("determinant of a non-square matrix")
        if self.nrows == 0:
            return self.field.one()
        if self.field.is_rational:
            return _det_bareiss(self.rows)
        return _det_mod_p([list(r) for r in self.rows], self.field.p)


# -- fraction-free elimination over QQ --------------------------------------


def _strip_content(row):
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def _integer_rows(rows):
    """Scale each Fraction row to a primitive integer row (row space kept)."""
    out = []
    for row in rows:
        lcm = 1
        for x in row:
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
        out.append(_strip_content([int(x * lcm) for x in row]))
    return out


def _echelon_integer(rows, ncols):
    """Row echelon form of integer rows by fraction-free cross-elimination.

    Combines rows as piv*row - lead*pivrow and strips the gcd afterwards,
    keeping every intermediate value an integer.
    """
    rows = _integer_rows(rows)
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            lead = rows[i][c]
            if lead:
                rows[i] = _strip_content(
                    [piv * rows[i][j] - lead * rows[r][j] for j in range(ncols)])
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def _back_substitute_rational(int_rows, pivots):
    rows = [[Fraction(x) for x in row] for row in int_rows]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        piv = rows[k][c]
        rows[k] = [x / piv for x in rows[k]]
        for i in range(k):
            factor = rows[i][c]
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[k])]
    return rows


def _rref_mod_p(rows, ncols, p):
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                lead = rows[i][c]
                rows[i] = [(a - lead * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def _det_bareiss(rows):
    m, scale = _to_common_integer(rows)
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], scale)


def _to_common_integer(rows):
    """Clear denominators row by row; returns (int rows, det scale factor)."""
    scale = 1
    out = []
    for row in rows:
        lcm = 1
        for x in row:
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
        scale *= lcm
        out.append([int(x * lcm) for x in row])
    return out, scale


def _det_mod_p(rows, p):
    n = len(rows)
    sign = 1
    for k in range(n):
        if not rows[k][k]:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        inv = pow(rows[k][k], p - 2, p)
        for i in range(k + 1, n):
            if rows[i][k]:
                factor = rows[i][k] * inv % p
                rows[i] = [(a - factor * b) % p for a, b in zip(rows[i], rows[k])]
    det = sign
    for k in range(n):
        det = det * rows[k][k]
    return det % p


# -- subspaces ----------------------------------------------------------------


class Subspace:
    """A subspace of F^n held as its unique reduced-echelon row basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis, pivots):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_vectors(cls, field, ambient_dim, vectors):
        mat = Matrix(field, [list(v) for v in vectors], ambient_dim)
        red, pivots = mat.rref()
        return cls(field, ambient_dim, Matrix(field, red.rows[:len(pivots)], ambient_dim),
                   pivots)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls.from_vectors(field, ambient_dim, [])

    @classmethod
    def full(cls, field, ambient_dim):
        return cls.from_vectors(field, ambient_dim,
                                Matrix.identity(field, ambient_dim).rows)

    @property
    def dim(self):
        return self.basis.nrows

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim %d of F^%d)" % (self.dim, self.ambient_dim)

    def coordinates(self, vector):
        """Coordinates of vector in the echelon basis, or None if outside."""
        f = self.field
        vec = [f.coerce(x) for x in vector]
        if len(vec) != self.ambient_dim:
            raise InputError("vector has wrong ambient dimension")
        coords = [vec[c] for c in self.pivots]
        residue = list(vec)
        for coeff, row in zip(coords, self.basis.rows):
            if coeff:
                residue = [f.sub(a, f.mul(coeff, b)) for a, b in zip(residue, row)]
        if any(residue):
            return None
        return tuple(coords)

    def contains(self, vector):
        return self.coordinates(vector) is not None

    def contains_subspace(self, other):
        return all(self.contains(row) for row in other.basis.rows)

    def sum(self, other):
        _check_ambient(self, other)
        return Subspace.from_vectors(self.field, self.ambient_dim,
                                     self.basis.rows + other.basis.rows)

    def intersect(self, other):
        _check_ambient(self, other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        # x*B1 = y*B2  <=>  (x, y) in kernel of [B1^T | -B2^T]
        stacked = self.basis.transpose().hstack(-other.basis.transpose())
        sol = solve_homogeneous(stacked)
        vectors = [self.basis.transpose().apply(v[:self.dim]) for v in sol.basis.rows]
        return Subspace.from_vectors(self.field, self.ambient_dim, vectors)

    def linear_image(self, mat):
        """Image of this subspace under mat (applied to column vectors)."""
        if mat.ncols != self.ambient_dim:
            raise InputError("ambient dimension mismatch in linear_image")
        return Subspace.from_vectors(self.field, mat.nrows,
                                     [mat.apply(v) for v in self.basis.rows])

    def preimage(self, mat):
        """{x : mat*x in self} as a subspace of the domain."""
        if mat.nrows != self.ambient_dim:
            raise InputError("ambient dimension mismatch in preimage")
        _, projection = cokernel_of_inclusion(self)
        return kernel(projection * mat)


def _check_ambient(a, b):
    check_same_field(a.field, b.field)
    if a.ambient_dim != b.ambient_dim:
        raise InputError("ambient dimension mismatch")


# -- the spec operations -------------------------------------------------------


def solve_homogeneous(constraints):
    """Full solution space of constraints * x = 0, canonical echelon basis."""
    red, pivots = constraints.rref()
    f = constraints.field
    n = constraints.ncols
    free = [c for c in range(n) if c not in pivots]
    vectors = []
    for c in free:
        v = [f.zero()] * n
        v[c] = f.one()
        for k, pc in enumerate(pivots):
            v[pc] = f.neg(red.rows[k][c])
        vectors.append(v)
    return Subspace.from_vectors(f, n, vectors)


def kernel(f):
    return solve_homogeneous(f)


def image(f):
    """Column space of f as a subspace of F^nrows."""
    return Subspace.from_vectors(f.field, f.nrows,
                                 [f.column(j) for j in range(f.ncols)])


def cokernel_of_inclusion(subspace):
    """Quotient by a subspace: (dim of quotient, projection matrix).

    The projection reads off the non-pivot coordinates after reducing a
    vector modulo the subspace; it kills exactly the subspace and is the
    identity on the complementary coordinate vectors.
    """
    f = subspace.field
    n = subspace.ambient_dim
    pivots = set(subspace.pivots)
    free = [c for c in range(n) if c not in pivots]
    rows = []
    for c in free:
        row = [f.zero()] * n
        row[c] = f.one()
        for k, pc in enumerate(subspace.pivots):
            row[pc] = f.neg(subspace.basis.rows[k][c])
        rows.append(row)
    return len(free), Matrix(f, rows, n)


def cokernel(f):
    """Cokernel of a matrix: (quotient dim, projection with proj*f = 0)."""
    return cokernel_of_inclusion(image(f))


def kronecker(f, g):
    return f.kronecker(g)


def transpose(f):
    return f.transpose()


def solve_linear(a, b):
    """One solution of a*x = b plus the kernel, or (None, kernel) when
    inconsistent.  b is a coordinate sequence."""
    f = a.field
    bcol = Matrix(f, [[x] for x in b], 1) if len(b) else Matrix(f, [], 1)
    if bcol.nrows != a.nrows:
        raise InputError("right-hand side has wrong length")
    red, pivots = a.hstack(bcol).rref()
    if a.ncols in pivots:
        return None, solve_homogeneous(a)
    x = [f.zero()] * a.ncols
    for k, c in enumerate(pivots):
        x[c] = red.rows[k][a.ncols]
    return tuple(x), solve_homogeneous(a)


def is_positive_definite(gram):
    """Exact test via leading principal minors; requires a symmetric
    rational matrix."""
    if not gram.field.is_rational:
        raise InputError("positive definiteness needs rational entries")
    if not gram.is_square() or gram != gram.transpose():
        raise InputError("positive definiteness needs a symmetric matrix")
    for k in range(1, gram.nrows + 1):
        minor = Matrix(gram.field, [row[:k] for row in gram.rows[:k]], k)
        if minor.det() <= 0:
            return False
    return True
