import random
from fractions import Fraction

import pytest

from oddmoduli.errors import MissingAssignment
from oddmoduli.polyring import XForm
from oddmoduli.verify import (check_hilbert, check_point, check_transversal_at_P, expected_codim,
                              hilbert_rank, lifted_syzygies_vanish, perturb, run_samples,
                              sample_free_point, specialize)


def test_expected_codim():
    assert [expected_codim(5, r) for r in (2, 3, 4)] == [3, 15, 42]
    assert [expected_codim(6, r) for r in (2, 3, 4)] == [6, 31, 91]


def test_zero_point_is_the_monomial_curve(run5):
    zero = {x: Fraction(0) for x in run5.D.params}
    forms = specialize(run5.D, zero)
    assert forms == run5.G.initial_forms()
    assert check_transversal_at_P(run5.G, forms)
    assert lifted_syzygies_vanish(run5.G, run5.syzygies, forms)
    assert [hilbert_rank(run5.G, forms, r) for r in (2, 3, 4)] == [3, 15, 42]
    assert check_point(run5.D, run5.R, run5.syzygies, zero).ok


def test_missing_assignment(run5):
    with pytest.raises(MissingAssignment):
        specialize(run5.D, {})


def test_transversality_fails_without_cubic(run5):
    G = run5.G
    forms = dict(G.initial_forms())
    lab = max(l for l in G.excluded if l[0] == "G")
    forms[lab] = XForm(G.ring, 3)
    assert not check_transversal_at_P(G, forms)


def test_hilbert_drops_when_a_quadric_is_lost(run6):
    G = run6.G
    forms = dict(G.initial_forms())
    del forms[("F", 14, 1)]
    # the other generators no longer span I_2
    assert not check_hilbert(G, {k: v for k, v in forms.items() if v.degree == 2}, 2)
    assert check_hilbert(G, G.initial_forms(), 4)


def test_genus6_samples(run6):
    summary = run_samples(run6.D, run6.R, run6.syzygies, run6.P, samples=3, seed=7,
                          chart=run6.best_chart)
    assert summary.passed == 3
    assert summary.perturbed_detected == 3


def test_perturbation_is_rejected(run5):
    rng = random.Random(11)
    full = run5.P.full_point(sample_free_point(run5.P, rng))
    bad, name = perturb(run5.P, full, rng)
    assert bad[name] == full[name] + 1
    assert check_point(run5.D, run5.R, run5.syzygies, bad, max_degree=2).any_failure
