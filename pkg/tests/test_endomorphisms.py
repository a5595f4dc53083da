import random

import pytest

from norikernel.diagrams import (Diagram, Edge, Representation, Vertex,
                                 disjoint_union, product)
from norikernel.endomorphisms import (Coalgebra, CoalgebraMap, FiniteAlgebra,
                                      check_initial_object_product,
                                      check_path_invariance, compute_end,
                                      compute_endvee, dual_coalgebra,
                                      restriction_map)
from norikernel.errors import InputError
from norikernel.fields import QQ, Field
from norikernel.matrices import Matrix


def rep_single(dim=1, vid="pt", field=QQ):
    return Representation(Diagram([Vertex(vid)]), field, {vid: dim}, {})


def rep_edge(matrix, dims, field=QQ):
    d = Diagram([Vertex("A"), Vertex("B")], [Edge("f", "A", "B")])
    return Representation(d, field, {"A": dims[0], "B": dims[1]}, {"f": matrix})


def test_end_of_point_is_scalars():
    alg = compute_end(rep_single(1))
    assert alg.dim == 1
    assert alg.unit == (1,)


def test_end_of_direct_sum_square_is_m2():
    r = rep_single(1)
    sq = product(r, r, "direct_sum")
    alg = compute_end(sq)
    assert alg.dim == 4
    m2 = FiniteAlgebra.matrix_algebra(QQ, 2)
    assert alg.structure_constants_equal(m2)


def test_end_forcing_edge():
    # invertible 1x1 edge matrix forces the diagonal
    alg = compute_end(rep_edge(Matrix(QQ, [[1]]), (1, 1)))
    assert alg.dim == 1
    # zero edge matrix imposes nothing: F x F
    alg2 = compute_end(rep_edge(Matrix(QQ, [[0]]), (1, 1)))
    assert alg2.dim == 2


def test_end_respects_selector_and_empty_warning():
    rep = rep_edge(Matrix(QQ, [[1]]), (1, 1))
    sub = rep.diagram.subdiagram(["A"])
    alg = compute_end(rep, sub)
    assert alg.dim == 1
    empty = rep.diagram.subdiagram([])
    zero = compute_end(rep, empty)
    assert zero.dim == 0 and zero.warnings


def test_end_over_fp():
    alg = compute_end(rep_edge(Matrix(Field(7), [[3]]), (1, 1), Field(7)))
    assert alg.dim == 1


def test_end_loop_centralizer():
    # single vertex dim 2 with a nilpotent loop: centralizer a*I + b*N
    d = Diagram([Vertex("v")], [Edge("e", "v", "v")])
    rep = Representation(d, QQ, {"v": 2}, {"e": Matrix(QQ, [[0, 1], [0, 0]])})
    alg = compute_end(rep)
    assert alg.dim == 2


def test_endvee_point_is_grouplike():
    coalg, _ = compute_endvee(rep_single(1))
    assert coalg.dim == 1
    assert coalg.comult[0].tolist() == [[1]]
    assert coalg.counit == (1,)


def test_endvee_m2_matrix_coefficients():
    r = rep_single(1)
    coalg, alg = compute_endvee(product(r, r, "direct_sum"))
    assert coalg.dim == 4
    # basis order is e11, e12, e21, e22; Delta(e_pq*) = sum_j e_pj* ox e_jq*
    def unit_idx(p, q):
        return 2 * p + q
    for p in range(2):
        for q in range(2):
            m = coalg.comult[unit_idx(p, q)]
            for a in range(4):
                for b in range(4):
                    expect = 0
                    for j in range(2):
                        if a == unit_idx(p, j) and b == unit_idx(j, q):
                            expect = 1
                    assert m[a, b] == expect
    assert list(coalg.counit) == [1, 0, 0, 1]


def test_endvee_disjoint_union_is_coproduct():
    r1 = rep_edge(Matrix(QQ, [[2]]), (1, 1))
    d2 = Diagram([Vertex("C")])
    r2 = Representation(d2, QQ, {"C": 2}, {})
    union = disjoint_union(r1, r2)
    coalg, alg = compute_endvee(union)
    c1, a1 = compute_endvee(r1)
    c2, a2 = compute_endvee(r2)
    assert coalg.dim == c1.dim + c2.dim
    assert coalg.structure_equal(c1.direct_sum(c2))
    assert alg.structure_constants_equal(a1.direct_product(a2))


def test_dual_coalgebra_verifies_axioms():
    alg = FiniteAlgebra.matrix_algebra(QQ, 3)
    coalg = dual_coalgebra(alg)
    assert coalg.dim == 9  # verify() ran in the constructor


def test_restriction_map_identity_and_projection():
    rep = rep_edge(Matrix(QQ, [[1]]), (1, 1))
    # D = D': identity
    whole = rep.diagram.subdiagram(["A", "B"], ["f"])
    r = restriction_map(rep, whole)
    assert r.algebra_matrix == Matrix.identity(QQ, 1)
    # D = one free vertex inside the forcing diagram: F -> F onto
    inner = rep.diagram.subdiagram(["A"])
    r2 = restriction_map(rep, inner)
    assert r2.algebra_matrix.tolist() == [[1]]
    assert r2.surjective
    assert isinstance(r2.coalgebra_map, CoalgebraMap)


def test_restriction_functoriality():
    # chain D < D' < D'': composite of restrictions = restriction
    d = Diagram([Vertex("A"), Vertex("B"), Vertex("C")],
                [Edge("f", "A", "B"), Edge("g", "B", "C")])
    rep = Representation(d, QQ, {"A": 1, "B": 1, "C": 1},
                         {"f": Matrix(QQ, [[1]]), "g": Matrix(QQ, [[1]])})
    d1 = d.subdiagram(["A"])
    d2 = d.subdiagram(["A", "B"], ["f"])
    r_21 = restriction_map(rep.restrict(d2), d1)
    r_full_2 = restriction_map(rep, d2)
    r_full_1 = restriction_map(rep, d1)
    assert r_21.algebra_matrix * r_full_2.algebra_matrix == r_full_1.algebra_matrix


def test_restriction_rejects_non_subdiagram():
    rep = rep_edge(Matrix(QQ, [[1]]), (1, 1))
    other = Diagram([Vertex("Z")])
    with pytest.raises(InputError):
        restriction_map(rep, other)


def test_path_invariance_chain():
    d = Diagram([Vertex("A"), Vertex("B"), Vertex("C")],
                [Edge("g", "A", "B"), Edge("f", "B", "C")])
    rep = Representation(d, QQ, {"A": 1, "B": 1, "C": 1},
                         {"g": Matrix(QQ, [[1]]), "f": Matrix(QQ, [[1]])})
    res = check_path_invariance(rep)
    assert res.equal and res.dim_edges == res.dim_paths == 1


def test_path_invariance_edgeless():
    res = check_path_invariance(rep_single(2))
    assert res.equal


def test_path_invariance_random_corpus():
    rng = random.Random(5)
    for _ in range(20):
        nv = rng.randint(1, 5)
        verts = [Vertex("v%d" % i) for i in range(nv)]
        dims = {"v%d" % i: rng.randint(0, 3) for i in range(nv)}
        edges = []
        mats = {}
        for k in range(rng.randint(0, 2 * nv)):
            a, b = sorted(rng.sample(range(nv), 2)) if nv > 1 else (0, 0)
            if a == b:
                continue
            eid = "e%d" % k
            edges.append(Edge(eid, "v%d" % a, "v%d" % b))
            mats[eid] = Matrix(QQ, [[rng.randint(-2, 2)
                                     for _ in range(dims["v%d" % a])]
                                    for _ in range(dims["v%d" % b])],
                               dims["v%d" % a])
        rep = Representation(Diagram(verts, edges), QQ, dims, mats)
        assert check_path_invariance(rep).equal


def test_initial_object_product():
    def with_initial(vid, dim):
        d = Diagram([Vertex("0" + vid, initial=True), Vertex(vid)],
                    [Edge("i" + vid, "0" + vid, vid)])
        return Representation(d, QQ, {"0" + vid: 0, vid: dim},
                              {"i" + vid: Matrix(QQ, [[]] * dim, 0)})

    r1 = with_initial("P", 1)
    r2 = with_initial("Q", 1)
    res = check_initial_object_product(r1, r2)
    assert res.equal and res.dim_product == 2

    # without initial objects the square of a point has dim 4, not 2
    alg = compute_end(product(rep_single(1), rep_single(1), "direct_sum"))
    assert alg.dim == 4

    # degenerate: initial-only diagrams, everything dimension 0
    d0 = Diagram([Vertex("z", initial=True)])
    z = Representation(d0, QQ, {"z": 0}, {})
    res0 = check_initial_object_product(z, z)
    assert res0.equal and res0.dim_product == 0

    # missing initial structure is a precondition error
    with pytest.raises(InputError):
        check_initial_object_product(rep_single(1), rep_single(1))


def test_from_matrices_rejects_non_closed():
    n = Matrix(QQ, [[0, 1], [0, 0]])
    with pytest.raises(InputError):
        FiniteAlgebra.from_matrices(QQ, [Matrix.identity(QQ, 2),
                                         Matrix(QQ, [[0, 1], [1, 0]]), n])


def test_upper_triangular_table():
    ut = FiniteAlgebra.upper_triangular(QQ, 2)
    assert ut.dim == 3
    assert ut.trace_of(ut.unit) == 2
