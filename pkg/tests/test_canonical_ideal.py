import random
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from oddmoduli.canonical_ideal import (all_monomials, divide, hilbert_codim, ideal_membership,
                                       initial_forms)
from oddmoduli.polyring import XForm
from oddmoduli.semigroup import dim_Ir

from conftest import odd

# Reference generator tables, as (leading monomial, basis monomial) text.
TABLE5 = {
    "X_6^2 - X_5X_7", "X_6X_7 - X_5X_8", "X_7^2 - X_6X_8",
    "X_5^3 - X_0X_7X_8", "X_5^2X_6 - X_0X_8^2", "X_6^3 - X_5^2X_8", "X_7^3 - X_5X_8^2",
}
TABLE6 = {
    "X_7^2 - X_6X_8", "X_7X_8 - X_6X_9", "X_8^2 - X_6X_{10}",
    "X_7X_9 - X_6X_{10}", "X_8X_9 - X_7X_{10}", "X_9^2 - X_8X_{10}",
    "X_6^3 - X_0X_8X_{10}", "X_6^2X_7 - X_0X_9X_{10}", "X_6^2X_8 - X_0X_{10}^2",
    "X_6X_7^2 - X_0X_{10}^2", "X_7^3 - X_6^2X_9", "X_7^2X_8 - X_6^2X_{10}",
    "X_8X_9^2 - X_6X_{10}^2", "X_9^3 - X_7X_{10}^2",
}


def test_genus5_table(G5):
    assert len(G5.quadratics) == 3 and len(G5.cubics) == 4
    text = {G5.name(lab): f.render() for lab, f in G5.initial_forms().items()}
    assert set(text.values()) == TABLE5
    assert text["F_{12}"] == "X_6^2 - X_5X_7"
    assert text["G_{21}"] == "X_7^3 - X_5X_8^2"


def test_genus6_table(G6):
    assert len(G6.quadratics) == 6 and len(G6.cubics) == 8
    assert {f.render() for f in G6.initial_forms().values()} == TABLE6
    # index 1 at weight 16 is X_7X_9, index 2 is X_8^2
    assert G6.initial_form(("F", 16, 1)).render() == "X_7X_9 - X_6X_{10}"
    assert G6.name(("G", 20, 2)) == "G_{20,2}"


def test_excluded(G5, G6):
    assert G5.excluded == {("F", 13, 1), ("F", 14, 1), ("G", 16, 1)}
    assert G6.excluded == {("F", 16, 1), ("F", 17, 1), ("F", 18, 1), ("G", 20, 2)}


@pytest.mark.parametrize("g", range(5, 10))
def test_generators_vanish_on_curve(g):
    G = initial_forms(odd(g))
    R = G.ring
    assert len(G.quadratics) == (g - 2) * (g - 3) // 2
    for f in G.initial_forms().values():
        assert f.is_isobaric()
        # on (s^{2g-2-n} t^n) every binomial vanishes
        for s, t in [(2, 3), (5, -1), (1, 7)]:
            pt = {n: s ** (R.top - n) * t ** n for n in R.nongaps}
            total = 0
            for m, coef in f.terms.items():
                value = coef[()]
                for n, e in zip(R.nongaps, m):
                    value *= pt[n] ** e
                total += value
            assert total == 0
    for gen in G.quadratics + G.cubics:
        assert R.key(gen.lead) > R.key(gen.basis)


@pytest.mark.parametrize("g", [5, 6, 7])
@pytest.mark.parametrize("r", [2, 3, 4])
def test_hilbert_codim_of_monomial_curve(g, r):
    G = initial_forms(odd(g))
    assert hilbert_codim(list(G.initial_forms().values()), r, G.ring) == dim_Ir(G.S, r)


def _random_form(G, d, seed):
    R = G.ring
    rng = random.Random(seed)
    monos = all_monomials(R, d)
    f = XForm(R, d)
    for m in rng.sample(monos, min(6, len(monos))):
        f.iadd(XForm.monomial(R, m), None, {(): rng.randint(-9, 9) or 1})
    return f


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 6]), st.sampled_from([2, 3, 4]), st.integers(0, 10 ** 6),
       st.integers(0, 10 ** 6))
def test_division_is_confluent(g, d, seed, order_seed):
    G = initial_forms(odd(g))
    f = _random_form(G, d, seed)
    a = divide(f, G)
    b = divide(f, G, rng=random.Random(order_seed))
    assert a.remainder == b.remainder
    assert all(G.in_basis(m) for m in a.remainder.terms)


def test_membership(G5):
    R = G5.ring
    F = G5.initial_form(("F", 12, 1))
    G = G5.initial_form(("G", 21, 2))
    f = F.mul_monomial(R.mono(0, 8)) + G.mul_monomial(R.mono(6))
    assert ideal_membership(f, G5)
    assert not ideal_membership(XForm.monomial(R, R.mono(6, 6, 6, 6)), G5)


def test_every_monomial_has_a_rewrite(G6):
    R = G6.ring
    for d in (2, 3, 4):
        for m in combinations_with_replacement(R.nongaps, d):
            m = R.mono(*m)
            if G6.in_basis(m):
                continue
            mult, lab = G6.step(m)
            lead = G6.by_label[lab].lead
            assert R.mul(mult, lead) == m or m in G6.multiples or d == 4
