from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oddmoduli.errors import DegreeMismatch, WeightMismatch
from oddmoduli.polyring import (ParamName, Ring, XForm, p_add, p_degree, p_eval, p_linear_part,
                                p_mul, p_render, p_subst, p_weight, substitute_t, t_mul)

from conftest import odd

R5 = Ring(odd(5))
NAMES = [ParamName("c", 12, 1, w) for w in (1, 2, 3, 4)] + [ParamName("d", 15, 1, 5)]


def test_monomial_order_examples():
    # same degree and weight: the one with more X_0 is smaller
    a, b = R5.mono(0, 7, 8), R5.mono(5, 5, 5)
    assert R5.weight(a) == R5.weight(b) == 15
    assert R5.cmp(b, a) == 1
    # then more of the top variable is smaller
    c, d = R5.mono(6, 6), R5.mono(5, 7)
    assert R5.cmp(c, d) == 1
    assert R5.render(R5.mono(6, 6, 8)) == "X_6^2X_8"
    assert Ring(odd(6)).render(Ring(odd(6)).mono(10)) == "X_{10}"


def test_param_name_rendering():
    x = ParamName("c", 16, 1, 8)
    assert x.render() == "c_{16,8}"
    assert x.render(True) == "c_{16,1,8}"
    assert x.offset == 8 and x.label == ("F", 16, 1)


polys = st.dictionaries(
    st.lists(st.sampled_from(NAMES), max_size=3).map(lambda v: tuple(sorted(v))),
    st.integers(-5, 5).filter(bool), max_size=5)
points = st.fixed_dictionaries({x: st.fractions(-3, 3, max_denominator=4) for x in NAMES})


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys, points)
def test_param_arithmetic_is_a_ring(a, b, c, pt):
    assert p_mul(a, b) == p_mul(b, a)
    assert p_mul(p_mul(a, b), c) == p_mul(a, p_mul(b, c))
    s = p_add(dict(a), b)
    assert p_eval(s, pt) == p_eval(a, pt) + p_eval(b, pt)
    assert p_eval(p_mul(a, b), pt) == p_eval(a, pt) * p_eval(b, pt)


@settings(max_examples=50, deadline=None)
@given(polys, polys, points)
def test_substitution_commutes_with_evaluation(a, b, pt):
    x = NAMES[0]
    sub = p_subst(a, {x: b})
    pt2 = dict(pt)
    pt2[x] = p_eval(b, pt)
    assert p_eval(sub, pt) == p_eval(a, pt2)


def test_param_helpers():
    x, y = NAMES[0], NAMES[1]
    p = {(x,): 2, (x, y): -1}
    assert p_degree(p) == 2 and p_degree({}) == -1
    assert p_linear_part(p) == {(x,): 2}
    assert p_render(p) == "-c_{12,1}*c_{12,2} + 2*c_{12,1}"
    assert p_render({(x, x): Fraction(1, 2)}) == "1/2*c_{12,1}^2"
    with pytest.raises(WeightMismatch):
        p_weight({(x,): 1, (y,): 1})
    assert p_weight({(x, y): 1, (NAMES[2],): 3}) == 3


def test_xform_arithmetic_and_weights():
    f = XForm.binomial(R5, R5.mono(6, 6), R5.mono(5, 7))
    assert f.render() == "X_6^2 - X_5X_7"
    assert f.weight() == 12
    g = f.mul_monomial(R5.mono(8))
    assert g.degree == 3 and g.weight() == 20
    assert (f - f).is_zero()
    h = f.copy()
    h.iadd(XForm.monomial(R5, R5.mono(5, 6)), None, {(NAMES[0],): -1})
    assert h.weight() == 12
    with pytest.raises(DegreeMismatch):
        f.iadd(g)
    bad = f + XForm.monomial(R5, R5.mono(5, 5))
    assert not bad.is_isobaric()


def test_substitute_t():
    f = XForm.binomial(R5, R5.mono(6, 6), R5.mono(5, 7))
    assert substitute_t(f) == {}
    g = XForm(R5, 2, {R5.mono(5, 5): {(NAMES[1],): 1}, R5.mono(0, 8): {(): 2}})
    assert substitute_t(g) == {10: {(NAMES[1],): 1}, 8: {(): 2}}
    assert t_mul({1: {(): 1}}, {2: {(): 3}}) == {3: {(): 3}}
