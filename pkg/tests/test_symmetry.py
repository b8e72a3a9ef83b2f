import itertools
import random
from fractions import Fraction

import pytest
import sympy

from lyalg import linalg
from lyalg.algebra import abelian, heisenberg, sl2
from lyalg.symmetry import (
    FiniteAbelianGroup,
    GroupAlgebra,
    GroupTooLarge,
    Grading,
    NotADecomposition,
    automorphism_equivalence_check,
    conjugate_point,
    convolution,
    counit,
    enumerate_diagonal_gradings,
    grading_to_point,
    is_automorphism_direct,
    point_from_matrix,
    point_to_grading,
    validate_grading,
    verify_group_point,
)
from lyalg.universal import RelationViolated, presentation
from oracles import DenseLY, brute_force_gradings, is_morphism

H_SWAP = [[-1, 0, 0], [0, 0, 1], [0, 1, 0]]
SHEAR = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
SCALING = [[1, 0, 0], [0, 2, 0], [0, 0, 1]]

H1 = heisenberg(1)
PRES = presentation(H1)


@pytest.mark.parametrize("M", [H_SWAP, SHEAR], ids=["swap", "shear"])
def test_heisenberg_automorphisms(M):
    assert is_automorphism_direct(H1, M).ok
    r = automorphism_equivalence_check(H1, M, PRES)
    assert r.direct and r.via_points and r.agree
    assert r.lines() == ["automorphism: yes, point: yes, agreement: yes"]


def test_scaling_is_not_an_automorphism():
    chk = is_automorphism_direct(H1, SCALING)
    assert not chk.ok and chk.witness == ("binary", 2, 3)
    assert not is_morphism(H1, H1, SCALING)
    r = automorphism_equivalence_check(H1, SCALING, PRES)
    assert not r.direct and not r.point and r.agree
    with pytest.raises(RelationViolated):
        point_from_matrix(PRES, SCALING)


def test_singular_matrix():
    chk = is_automorphism_direct(H1, [[0, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert chk.witness == ("singular",)


def test_sl2_chevalley_is_an_automorphism():
    M = [[-1, 0, 0], [0, 0, -1], [0, -1, 0]]
    r = automorphism_equivalence_check(sl2(), M)
    assert r.direct and r.agree


@pytest.mark.parametrize("seed", range(40))
def test_equivalence_on_random_small_matrices(seed):
    rng = random.Random(seed)
    M = [[rng.randint(-1, 1) for _ in range(3)] for _ in range(3)]
    if seed % 4 == 0:
        M = [list(r) for r in linalg.matmul(H_SWAP, SHEAR)]
    r = automorphism_equivalence_check(H1, M, PRES)
    oracle = sympy.Matrix(M).det() != 0 and is_morphism(H1, H1, M)
    assert r.direct == oracle
    assert r.agree


def test_convolution_is_matrix_product():
    p, q = point_from_matrix(PRES, H_SWAP), point_from_matrix(PRES, SHEAR)
    pq = convolution(p, q)
    assert sympy.Matrix(pq.zeta().matrix) == sympy.Matrix(H_SWAP) * sympy.Matrix(SHEAR)
    assert convolution(p, p).T == counit(PRES).T
    assert convolution(counit(PRES), q).T == q.T


def test_convolution_abelian_random():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(2, 4)
        pres = presentation(abelian(n))
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        B = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        prod = convolution(point_from_matrix(pres, A), point_from_matrix(pres, B))
        assert sympy.Matrix(prod.matrix()) == sympy.Matrix(A) * sympy.Matrix(B)


def _assignment_set(gradings):
    return {gr.assignment for gr in gradings}


@pytest.mark.parametrize("L,orders", [
    (H1, (2,)), (H1, (3,)), (abelian(2), (2, 2)), (sl2(), (2,)), (heisenberg(2), (2,)), (abelian(3), (3,)),
], ids=["h1-Z2", "h1-Z3", "ab2-Z2xZ2", "sl2-Z2", "h2-Z2", "ab3-Z3"])
def test_gradings_match_brute_force(L, orders):
    G = FiniteAbelianGroup(orders)
    found = enumerate_diagonal_gradings(L, G)
    assert _assignment_set(found) == set(brute_force_gradings(L, orders))
    assert len(found) == len(_assignment_set(found))
    for gr in found:
        assert validate_grading(L, gr).ok
        back = point_to_grading(grading_to_point(L, gr))
        assert back.assignment == gr.assignment


def test_heisenberg_has_only_trivial_diagonal_gradings():
    # [e1,e2] = e0 and {e1,e2,e1} = {e1,e2,e2} = e0 force deg e1 = deg e2 = 0
    for d in (2, 3, 4):
        found = enumerate_diagonal_gradings(H1, FiniteAbelianGroup((d,)))
        assert [gr.assignment for gr in found] == [((0,),) * 3]


def test_abelian_z2xz2_count():
    assert len(enumerate_diagonal_gradings(abelian(2), FiniteAbelianGroup((2, 2)))) == 16


def test_sl2_gradings_respect_bracket_directly():
    L = sl2()
    D = DenseLY.of(L)
    G = FiniteAbelianGroup((2,))
    found = enumerate_diagonal_gradings(L, G)
    for gr in found:
        for i, j in itertools.product(range(3), repeat=2):
            v = D.br(D.e(i + 1), D.e(j + 1))
            target = G.add(gr.assignment[i], gr.assignment[j])
            assert all(v[s] == 0 or gr.assignment[s] == target for s in range(3))


def test_validate_grading_witness():
    gr = Grading.diagonal(FiniteAbelianGroup((2,)), [(0,), (1,), (0,)])
    chk = validate_grading(H1, gr)
    assert not chk.ok and chk.witness == (2, 3)
    with pytest.raises(NotADecomposition):
        grading_to_point(H1, gr)
    bad = Grading(FiniteAbelianGroup((2,)), {(0,): [[1, 0, 0], [1, 0, 0]], (1,): [[0, 0, 1]]})
    with pytest.raises(NotADecomposition):
        validate_grading(H1, bad)


def test_group_algebra_is_commutative_and_associative():
    KG = GroupAlgebra(FiniteAbelianGroup((2, 3)))
    rng = random.Random(2)
    el = lambda: tuple(Fraction(rng.randint(-2, 2)) for _ in range(KG.size))  # noqa: E731
    for _ in range(10):
        a, b, c = el(), el(), el()
        assert KG.mul(a, b) == KG.mul(b, a)
        assert KG.mul(KG.mul(a, b), c) == KG.mul(a, KG.mul(b, c))
        assert KG.mul(KG.one(), a) == a


def test_group_too_large():
    with pytest.raises(GroupTooLarge):
        FiniteAbelianGroup.parse("8x9")
    assert FiniteAbelianGroup.parse("2x2").order == 4


def test_group_point_rejects_non_grading():
    G = FiniteAbelianGroup((2,))
    KG = GroupAlgebra(G)
    images = {(s, i): (KG.basis((1,)) if s == i == 2 else KG.basis((0,)) if s == i else KG.zero())
              for s in range(1, 4) for i in range(1, 4)}
    with pytest.raises(RelationViolated):
        verify_group_point(PRES, G, images)


def test_conjugate_point_on_abelian():
    L = abelian(2)
    pres = presentation(L)
    G = FiniteAbelianGroup((2,))
    gr = Grading.diagonal(G, [(0,), (1,)])
    theta = grading_to_point(L, gr, pres)
    u = point_from_matrix(pres, [[1, 1], [0, 1]])
    conj = conjugate_point(theta, u)
    comps = point_to_grading(conj).components
    # conjugation by U moves each component L_g to U L_g
    assert [list(r) for r in comps[(0,)]] == [[1, 0]]
    assert linalg.in_span(comps[(1,)], [1, 1])
    assert conjugate_point(theta, counit(pres)).images == theta.images


def test_ternary_closure_witness():
    # degree 1 on e1 and e2 passes every binary check but {e1,e2,e1} = e0 needs degree 1
    gr = Grading.diagonal(FiniteAbelianGroup((2,)), [(0,), (1,), (1,)])
    assert validate_grading(H1, gr).witness == (2, 3, 2)
