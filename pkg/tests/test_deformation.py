import pytest

from oddmoduli.canonical_ideal import initial_forms
from oddmoduli.deformation import (default_normalizations, greedy_normalizations, param_space,
                                   parse_param, pre_deform, read_normalization_file,
                                   render_param, residue_system, transformation_tangents)
from oddmoduli.errors import UnknownParameter
from oddmoduli.polyring import ParamName, p_eval, p_weight
from oddmoduli.syzygy import default_syzygies
from oddmoduli.tangent import linearize, solve_T1

from conftest import odd


def test_parameter_counts(G5, G6):
    assert len(param_space(G5)) == 74
    assert len(param_space(G6)) == 185
    assert len(pre_deform(G5).params) == 64
    assert len(pre_deform(G6).params) == 170


@pytest.mark.parametrize("g", range(5, 10))
def test_normalization_count(g):
    G = initial_forms(odd(g))
    norm = default_normalizations(G)
    assert len(norm) == g * (g - 1) // 2
    assert norm <= set(param_space(G))
    assert len(transformation_tangents(G)) == g * (g - 1) // 2


def test_parse_param(G5, G6):
    assert parse_param("c_{12,4}", G5) == ParamName("c", 12, 1, 4)
    assert parse_param("c 12 1 4", G5) == ParamName("c", 12, 1, 4)
    assert parse_param("d_{15,10}", G5) == ParamName("d", 15, 1, 10)
    assert parse_param("c_{16,1,8}", G6) == ParamName("c", 16, 1, 8)
    assert render_param(ParamName("c", 16, 1, 8), G6) == "c_{16,1,8}"
    assert render_param(ParamName("c", 14, 1, 5), G6) == "c_{14,5}"
    # weight 8 at s=16 belongs to two quadrics, so the short form is ambiguous
    with pytest.raises(UnknownParameter):
        parse_param("c_{16,8}", G6)
    for bad in ("c_{12,3}", "e_{12,4}", "c_{99,1}", "nonsense"):
        with pytest.raises(UnknownParameter):
            parse_param(bad, G5)


def test_normalization_file(G5, tmp_path):
    names = sorted(render_param(x, G5) for x in default_normalizations(G5))
    path = tmp_path / "norm.txt"
    path.write_text("# override\n" + "\n".join(names) + "\n")
    assert read_normalization_file(str(path), G5) == default_normalizations(G5)
    with pytest.raises(UnknownParameter):
        pre_deform(G5, {ParamName("c", 12, 1, 3)})


@pytest.mark.parametrize("fixture, count", [("G5", 70), ("G6", 188)])
def test_residue_counts_and_weights(fixture, count, request):
    G = request.getfixturevalue(fixture)
    D = pre_deform(G)
    R = residue_system(D, default_syzygies(G))
    assert len(R) == count
    zero = {x: 0 for x in D.params}
    for e in R.entries:
        assert p_weight(e.poly) == e.weight
        assert p_eval(e.poly, zero) == 0
        assert e.weight > 0


@pytest.mark.parametrize("g, dim", [(5, 10), (6, 15)])
def test_greedy_normalization_gives_same_tangent(g, dim):
    G = initial_forms(odd(g))
    out = []
    for norm in (default_normalizations(G), greedy_normalizations(G)):
        D = pre_deform(G, norm)
        T1 = solve_T1(linearize(residue_system(D, default_syzygies(G))), D.params)
        out.append(T1.alpha)
    assert out[0] == out[1]
    assert len(out[0]) == dim
