import random
from fractions import Fraction

import pytest

from norikernel.errors import FieldMismatchError, InputError
from norikernel.fields import QQ, Field
from norikernel.matrices import (Matrix, Subspace, cokernel, image,
                                 is_positive_definite, kernel, kronecker,
                                 solve_homogeneous, transpose)

from oracles import naive_mul, naive_rank

GF5 = Field(5)


def rand_matrix(rng, field, nrows, ncols, lo=-2, hi=2):
    return Matrix(field, [[rng.randint(lo, hi) for _ in range(ncols)]
                          for _ in range(nrows)], ncols)


def test_field_rejects_non_prime():
    with pytest.raises(InputError):
        Field(6)
    with pytest.raises(InputError):
        Field(2 ** 31 + 11)


def test_field_mismatch_rejected():
    a = Matrix(QQ, [[1]])
    b = Matrix(GF5, [[1]])
    with pytest.raises(FieldMismatchError):
        a * b


def test_solve_homogeneous_zero_map():
    # 1x1 zero matrix: every scalar solves it
    sol = solve_homogeneous(Matrix(QQ, [[0]]))
    assert sol.dim == 1
    assert sol.basis.tolist() == [[1]]


def test_solve_homogeneous_equality_constraint():
    # x - y = 0
    sol = solve_homogeneous(Matrix(QQ, [[1, -1]]))
    assert sol.dim == 1
    assert sol.basis.tolist() == [[1, 1]]


def test_solve_homogeneous_rank3_kernel():
    # random 4x6 of rank 3: kernel dim via rank-nullity against the oracle
    rng = random.Random(31)
    while True:
        m = rand_matrix(rng, QQ, 4, 6)
        if naive_rank(m.tolist()) == 3:
            break
    sol = solve_homogeneous(m)
    assert sol.dim == 6 - 3
    for v in sol.basis.rows:
        assert all(x == 0 for x in m.apply(v))


def test_kernel_cokernel_identity_and_zero():
    ident = Matrix(QQ, [[1, 0], [0, 1]])
    assert kernel(ident).dim == 0
    assert cokernel(ident)[0] == 0
    zero = Matrix.zeros(QQ, 2, 3)
    assert kernel(zero).dim == 3
    assert cokernel(zero)[0] == 2


def test_cokernel_projection_example():
    # f = [[1,0],[0,0]]: cokernel is the second coordinate
    f = Matrix(QQ, [[1, 0], [0, 0]])
    qdim, proj = cokernel(f)
    assert qdim == 1
    assert proj.tolist() == [[0, 1]]
    assert (proj * f).is_zero()


def test_cokernel_projection_properties():
    rng = random.Random(7)
    for field in (QQ, GF5):
        for _ in range(25):
            m = rand_matrix(rng, field, rng.randint(1, 4), rng.randint(1, 4))
            qdim, proj = cokernel(m)
            assert (proj * m).is_zero()
            assert proj.rank() == qdim == m.nrows - image(m).dim


@pytest.mark.parametrize("field", [QQ, GF5])
def test_rank_nullity_and_transpose_swap(field):
    rng = random.Random(11)
    for _ in range(40):
        m = rand_matrix(rng, field, rng.randint(0, 4), rng.randint(1, 5))
        r = m.rank()
        assert kernel(m).dim + image(m).dim == m.ncols
        assert image(m).dim == r
        assert cokernel(m)[0] == m.nrows - r
        assert cokernel(m)[0] == kernel(transpose(m)).dim
        if field is QQ:
            assert r == naive_rank(m.tolist())


def test_rref_is_deterministic_and_canonical():
    m = Matrix(QQ, [[2, 4, 1], [1, 2, 3], [3, 6, 4]])
    r1, p1 = m.rref()
    r2, p2 = m.rref()
    assert r1 == r2 and p1 == p2
    # a different spanning set of the same row space gives the same rref
    m2 = Matrix(QQ, [[1, 2, 3], [3, 6, 4], [5, 10, 8]])
    assert m2.rref()[0].rows[:2] == r1.rows[:2]


def test_kronecker_identities():
    assert kronecker(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)) == \
        Matrix.identity(QQ, 6)
    assert kronecker(Matrix(QQ, [[2]]), Matrix(QQ, [[1, 1]])).tolist() == [[2, 2]]


def test_kronecker_mixed_product():
    rng = random.Random(13)
    for _ in range(10):
        a = rand_matrix(rng, QQ, 2, 2)
        b = rand_matrix(rng, QQ, 2, 2)
        c = rand_matrix(rng, QQ, 2, 2)
        d = rand_matrix(rng, QQ, 2, 2)
        left = kronecker(a, b) * kronecker(c, d)
        right = kronecker(a * c, b * d)
        assert left == right
        assert naive_mul(a.tolist(), c.tolist()) == (a * c).tolist()


def test_transpose_involution():
    rng = random.Random(17)
    m = rand_matrix(rng, QQ, 3, 5)
    assert transpose(transpose(m)) == m


def test_det_and_inverse():
    m = Matrix(QQ, [[Fraction(1, 2), 1], [1, 3]])
    assert m.det() == Fraction(1, 2)
    assert m * m.inverse() == Matrix.identity(QQ, 2)
    rng = random.Random(19)
    for _ in range(20):
        a = rand_matrix(rng, GF5, 3, 3)
        if a.rank() == 3:
            assert a * a.inverse() == Matrix.identity(GF5, 3)


def test_positive_definite():
    assert is_positive_definite(Matrix(QQ, [[2, -1], [-1, 2]]))
    assert not is_positive_definite(Matrix(QQ, [[1, 2], [2, 1]]))
    assert not is_positive_definite(Matrix(QQ, [[0]]))
    with pytest.raises(InputError):
        is_positive_definite(Matrix(QQ, [[1, 2], [0, 1]]))


def test_subspace_operations():
    s = Subspace.from_vectors(QQ, 3, [[1, 1, 0], [0, 0, 1]])
    t = Subspace.from_vectors(QQ, 3, [[1, 1, 0], [1, 0, 0]])
    meet = s.intersect(t)
    assert meet.dim == 1 and meet.contains([1, 1, 0])
    join = s.sum(t)
    assert join.dim == 3
    assert s.coordinates([2, 2, 5]) == (2, 5)
    assert s.coordinates([1, 0, 0]) is None


def test_subspace_preimage():
    m = Matrix(QQ, [[1, 0], [0, 0]])
    target = Subspace.from_vectors(QQ, 2, [[1, 0]])
    pre = target.preimage(m)
    assert pre.dim == 2  # everything maps into span(e1)
    target2 = Subspace.from_vectors(QQ, 2, [[0, 1]])
    pre2 = target2.preimage(m)
    assert pre2.dim == 1 and pre2.contains([0, 1])


def test_zero_dimensional_shapes():
    m = Matrix(QQ, [], 3)
    assert m.nrows == 0 and m.rank() == 0
    assert kernel(m).dim == 3
    n = Matrix.zeros(QQ, 2, 0)
    assert kernel(n).dim == 0
    assert cokernel(n)[0] == 2
    assert kronecker(m, n).nrows == 0
