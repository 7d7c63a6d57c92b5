import pytest

from oddmoduli.canonical_ideal import initial_forms
from oddmoduli.syzygy import (_top_ok, build_cubic_syzygies, build_quadratic_syzygies,
                              default_syzygies, expand, reference_syzygies, render)

from conftest import odd


def _built(G):
    return build_quadratic_syzygies(G) + build_cubic_syzygies(G)


@pytest.mark.parametrize("g", range(5, 10))
def test_counts_and_vanishing(g):
    G = initial_forms(odd(g))
    syz = _built(G)
    quad = [r for r in syz if r.target[0] == "F"]
    cub = [r for r in syz if r.target[0] == "G"]
    assert len(quad) == (g - 3) * (g - 4) // 2
    assert len(cub) == len(G.cubics) - 1
    targets = {r.target for r in syz}
    assert not targets & G.excluded
    top = G.ring.index(G.ring.top)
    for rel in syz:
        assert expand(rel, G).is_zero()
        assert all(sum(m) <= 2 for _, m, _ in rel.terms)
        # X_{2g-2} only multiplies excluded generators or lower-degree forms
        assert all(_top_ok(G, rel.target, lab) for _, m, lab in rel.terms if m[top])


def test_genus5_matches_reference(G5):
    built = {r.target: sorted(r.terms) for r in _built(G5)}
    ref = {r.target: sorted(r.terms) for r in reference_syzygies(G5)}
    assert built == ref
    assert len(ref) == 4


def test_genus5_rendered(G5):
    text = [render(r, G5) for r in default_syzygies(G5)]
    assert text[0] == "X_8F_{12} - X_7F_{13} + X_6F_{14}"
    assert any("X_8^2F_{13}" in t for t in text)


def test_genus6_reference(G6):
    syz = default_syzygies(G6)
    assert len(syz) == 10
    assert sum(r.target[0] == "F" for r in syz) == 3
    assert all(expand(r, G6).is_zero() for r in syz)
    assert all(r.source == "reference" for r in syz)
    built = _built(G6)
    assert {r.target for r in built} == {r.target for r in syz}


def test_no_reference_beyond_genus6():
    assert reference_syzygies(initial_forms(odd(7))) is None
