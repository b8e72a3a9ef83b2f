import random

import pytest
import sympy

from lyalg import linalg
from lyalg.algebra import abelian, from_lie, heisenberg, sl2
from lyalg.hopf import (
    antipode_check,
    hopf_envelope,
    inverse_matrix_check,
    involution_check,
    universal_coaction,
)
from lyalg.poly import YES
from lyalg.symmetry import first_violated
from lyalg.universal import bialgebra_structure, presentation
from oracles import random_lie_bracket, to_sympy

SHEAR = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
H_SWAP = [[-1, 0, 0], [0, 0, 1], [0, 1, 0]]


def _envelope(L, depth):
    return hopf_envelope(bialgebra_structure(L), depth)


def test_abelian_one_dim_envelope_is_laurent_ring():
    H = _envelope(abelian(1), 1)
    assert len(H.vs) == 2
    x, xbar = sympy.symbols("x xbar")
    gens = [to_sympy(g.poly, [x, xbar]) for g in H.generators]
    ours = sympy.groebner(gens, x, xbar, order="grevlex")
    assert list(ours.exprs) == [x * xbar - 1]


def _test_algebras():
    rng = random.Random(4)
    return [abelian(2), heisenberg(1), sl2(), heisenberg(2), from_lie(random_lie_bracket(rng, 3), 3)]


@pytest.mark.parametrize("idx", range(5))
@pytest.mark.parametrize("depth", [1, 2])
def test_level0_slice_is_the_bialgebra_presentation(idx, depth):
    L = _test_algebras()[idx]
    B = bialgebra_structure(L)
    H = hopf_envelope(B, depth)
    assert H.level0_slice() == [(g.label, g.poly) for g in B.pres.generators]


def test_generator_counts():
    H = _envelope(heisenberg(1), 2)
    assert len(H.vs) == 27
    assert len(H.generators) == 3 * 36 + 2 * 2 * 9
    assert len(H.convolution_generators()) == 36


def test_antipode_heisenberg_depth1():
    r = antipode_check(_envelope(heisenberg(1), 1))
    assert r.passed and not r.unknown
    assert len(r.entries) == 36


@pytest.mark.slow
def test_antipode_sl2_depth2():
    r = antipode_check(_envelope(sl2(), 2))
    assert r.passed and not r.unknown


@pytest.mark.parametrize("L", [heisenberg(1), sl2()], ids=["h1", "sl2"])
def test_involution_and_inverse_matrix(L):
    H = _envelope(L, 2)
    inv = involution_check(H)
    assert inv.passed and len(inv.entries) == L.dim ** 2
    assert inverse_matrix_check(H).passed


def test_coaction_is_certified():
    r = universal_coaction(_envelope(heisenberg(1), 1)).verify()
    # one entry per output coordinate of every binary and ternary basis input
    assert r.passed and len(r.entries) == 3 * 9 + 3 * 27
    assert {e.method for e in r.entries} == {"syntactic", "generators", "groebner"}


def _evaluate(H, levels):
    values = [x for M in levels for row in M for x in row]
    return [g for g in H.generators if g.poly.evaluate(values)]


@pytest.mark.parametrize("M", [SHEAR, H_SWAP], ids=["shear", "swap"])
def test_automorphism_gives_point_of_envelope(M):
    # an automorphism M and its inverse satisfy every relation at depth 2
    Minv = linalg.inverse(M)
    H = _envelope(heisenberg(1), 2)
    assert _evaluate(H, [M, Minv, M]) == []


def test_lift_is_not_transposed():
    # for the shear the transposed inverse is not a point, so a transposed
    # level-1 lift would reject the pair (M, M^-1)
    pres = presentation(heisenberg(1))
    Minv = linalg.inverse(SHEAR)
    assert first_violated(pres, Minv) is None
    assert first_violated(pres, [list(r) for r in zip(*Minv)]) == ("P", 1, 1, 3)
    H = _envelope(heisenberg(1), 1)
    bad = _evaluate(H, [SHEAR, [list(r) for r in zip(*Minv)]])
    assert bad


def test_delta_pattern_and_dump():
    H = _envelope(abelian(1), 2)
    assert H.delta_terms(0, 1, 1) == [((0, 1, 1), (0, 1, 1))]
    H = _envelope(heisenberg(1), 1)
    assert H.delta_terms(1, 1, 2) == [((1, s, 2), (1, 1, s)) for s in (1, 2, 3)]
    text = H.dump_text()
    assert text == _envelope(heisenberg(1), 1).dump_text()
    assert "S(x{0}[i,j]) = x{1}[i,j]" in text


def test_antipode_outside_truncation():
    H = _envelope(abelian(1), 1)
    with pytest.raises(ValueError):
        H.antipode(H.var(1, 1, 1))
    with pytest.raises(ValueError):
        _envelope(abelian(1), 0)


def test_statuses_are_yes():
    r = antipode_check(_envelope(abelian(2), 1))
    assert {e.status for e in r.entries} <= {YES}
