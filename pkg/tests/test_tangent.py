import random

import pytest

from oddmoduli.canonical_ideal import initial_forms
from oddmoduli.deformation import parse_param, pre_deform, render_param, residue_system
from oddmoduli.errors import InconsistentLinearSystem
from oddmoduli.polyring import ParamName
from oddmoduli.syzygy import build_cubic_syzygies, build_quadratic_syzygies
from oddmoduli.tangent import label_rank, linearize, solve_T1

from conftest import odd

FREE5 = ["d_{15,2}", "d_{15,3}", "c_{12,4}", "d_{15,4}", "d_{15,5}", "c_{12,6}",
         "c_{13,7}", "d_{15,8}", "d_{15,9}", "d_{15,10}"]
FREE6 = ["c_{14,2}", "d_{18,3}", "c_{14,4}", "d_{18,4}", "c_{14,5}", "d_{18,5}", "c_{14,6}",
         "d_{18,6}", "c_{15,7}", "c_{15,8}", "c_{16,1,8}", "c_{16,1,9}", "d_{18,10}",
         "d_{18,11}", "d_{18,12}"]

# Frozen from an independent sympy computation: every degree 3 and 4 syzygy
# of the monomial curve lifted to first order, solved by nullspace.
ORACLE = {
    7: [2, 3, 4, 4, 5, 5, 6, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11, 12, 13, 14],
    8: [2, 3, 4, 4, 5, 5, 6, 6, 6, 7, 7, 7, 8, 8, 8, 9, 9, 10, 10, 10, 11, 11, 12, 12, 13,
        14, 15, 16],
}


def test_genus5(run5):
    T1 = run5.T1
    assert T1.dim == 10
    assert T1.alpha == [2, 3, 4, 4, 5, 6, 7, 8, 9, 10]
    assert T1.dims == {2: 1, 3: 1, 4: 2, 5: 1, 6: 1, 7: 1, 8: 1, 9: 1, 10: 1}
    assert [render_param(x, run5.G) for x in T1.free] == FREE5


def test_genus5_eliminations(run5):
    G, E = run5.G, run5.T1.eliminations
    assert E[parse_param("d_{16,10}", G)] == {(parse_param("d_{15,10}", G),): 1}
    assert E[parse_param("c_{14,4}", G)] == {(parse_param("c_{12,4}", G),): -1}


def test_genus6(run6):
    T1 = run6.T1
    assert T1.dim == 15
    assert T1.alpha == [2, 3, 4, 4, 5, 5, 6, 6, 7, 8, 8, 9, 10, 11, 12]
    assert [render_param(x, run6.G) for x in T1.free] == FREE6


def test_linear_counts(run5, run6):
    assert len(run5.linear) == 62
    assert len(run6.linear) == 164


def test_empty_system():
    params = [ParamName("c", 12, 1, w) for w in (1, 2, 3)]
    T1 = solve_T1([], params)
    assert T1.dim == 3 and T1.dims == {1: 1, 2: 1, 3: 1}


def test_mixed_weight_and_constant_rejected():
    a, b = ParamName("c", 12, 1, 1), ParamName("c", 12, 1, 2)
    with pytest.raises(InconsistentLinearSystem):
        solve_T1([(1, {a: 1, b: 1})], [a, b])
    with pytest.raises(InconsistentLinearSystem):
        linearize([(3, {(): 1})])


def test_dimension_independent_of_pivot_rule(run6):
    rng = random.Random(1)
    params = run6.D.params
    salt = {x: rng.random() for x in params}
    T1 = solve_T1(run6.linear, params, pivot_key=lambda x: salt[x])
    assert T1.alpha == run6.T1.alpha
    assert label_rank(params[0]) == (params[0].kind, params[0].s, params[0].i)


@pytest.mark.parametrize("g", sorted(ORACLE))
def test_larger_genus_matches_oracle(g):
    G = initial_forms(odd(g))
    D = pre_deform(G)
    syz = build_quadratic_syzygies(G) + build_cubic_syzygies(G)
    T1 = solve_T1(linearize(residue_system(D, syz)), D.params)
    assert T1.dim == g * (g - 1) // 2
    assert T1.alpha == ORACLE[g]
