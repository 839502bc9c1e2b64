from fractions import Fraction

import pytest

from cohomdim.analysis import (CAVEAT_GEOMETRIC, analyze, analyze_multi_base, bounds_table,
                               example_hl, search_char_dependence, trial_seeds,
                               validate_hypotheses)
from cohomdim.errors import HypothesisError, ParameterError, UsageError
from cohomdim.ideals import Ideal, maximal_ideal
from cohomdim.poly import polynomial_ring

LAMBDA_T = [(1, 2, 3), (1, 2, 6), (1, 3, 4), (1, 4, 5), (1, 5, 6),
            (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]


def two_planes(p=0, n_vars=4):
    R = polynomial_ring(p, n_vars)
    X = R.gens()
    return R, [Ideal(R, X[:2], "I1"), Ideal(R, X[2:4], "I2")]


def test_validate_examples():
    val = validate_hypotheses(example_hl(2, 7))
    assert (val.c, val.d, val.caveats) == (2, 6, [])
    R = polynomial_ring(7, 6)
    with pytest.raises(HypothesisError, match="height") as err:
        validate_hypotheses([maximal_ideal(R), Ideal(R, R.gens()[:2])])
    assert err.value.kind == "height"
    with pytest.raises(HypothesisError) as err:
        validate_hypotheses([Ideal(R, R.gens()[:1]), Ideal(R, R.gens()[:2])])
    assert err.value.kind == "containment"
    with pytest.raises(HypothesisError) as err:
        validate_hypotheses([])
    assert err.value.kind == "empty"
    with pytest.raises(HypothesisError) as err:
        validate_hypotheses([Ideal(polynomial_ring(0, 1), [])])
    assert err.value.kind == "dimension"


def test_nonlinear_input_gets_caveats():
    R = polynomial_ring(0, 4)
    X = R.gens()
    val = validate_hypotheses([Ideal(R, [X[0] * X[1] - X[2] * X[3]])])
    assert CAVEAT_GEOMETRIC in val.caveats and val.c == 1


@pytest.mark.parametrize("base_char", [7, 0])
def test_example_report(base_char):
    rep = analyze(example_hl(2, base_char), characteristics=[2, 0, 7])
    assert (rep.d, rep.c, rep.t, rep.v) == (6, 2, 2, 3)
    assert rep.lambda_t == LAMBDA_T
    assert len(rep.lambda_t1) == 15
    assert rep.delta_counts == [6, 15, 10, 0]
    assert rep.w == {2: 1, 0: 0, 7: 0}
    assert rep.phi_coker == rep.w == rep.relative
    v2, v0 = rep.verdicts[2], rep.verdicts[0]
    assert v2.conclusion == "H^4_I ≅ (H^6_m)^1" and v2.cd == 4 and not v2.cd_le_v
    assert v0.conclusion == "H^4_I = 0" and v0.cd_le_v and "cd ≤ 3" in v0.statement
    assert rep.bounds["hl"] == 3 and rep.bounds["faltings"] == 4


def test_two_planes_every_characteristic():
    for p in (0, 2, 3):
        _, primes = two_planes(p)
        rep = analyze(primes, characteristics=[0, 2, 3, 5, 7])
        assert (rep.t, rep.v) == (1, 2)
        assert set(rep.w.values()) == {1}
        assert all(v.conclusion == "H^3_I ≅ (H^4_m)^1" for v in rep.verdicts.values())


def test_divisible_case_statement():
    # d = 7, c = 3: c divides d - 1, so the verdict is unconditional
    R = polynomial_ring(5, 7)
    X = R.gens()
    primes = [Ideal(R, X[0:3]), Ideal(R, X[3:6]), Ideal(R, [X[6], X[0] + X[3], X[1] + X[4]])]
    rep = analyze(primes, characteristics=[0, 2])
    assert rep.t == 1 and rep.v == 5
    assert all(w == 0 for w in rep.w.values())
    assert "unconditionally" in rep.verdicts[0].statement


def test_t_zero_note():
    R = polynomial_ring(0, 3)
    X = R.gens()
    rep = analyze([Ideal(R, X[:2]), Ideal(R, X[1:])])
    assert rep.t == 0 and rep.w == {0: 0}
    assert any("t = 0" in n for n in rep.notes)


def test_multi_base():
    R, primes = two_planes(0, 6)
    X = R.gens()
    single = analyze_multi_base(primes, [Ideal(R, X[4:], "P")], [0])
    rep = single.reports[0]
    assert rep.d == 4 and rep.complex.simplices(0) == ((1,), (2,))
    assert rep.complex.simplices(1) == () and rep.w == {0: 1}
    assert not single.cd_le_v
    # w = 0 for a base that leaves the edge in Δ
    other = Ideal(R, [X[4], X[0] + X[2]], "Q")
    assert analyze(primes, other, [0]).w == {0: 0}
    both = analyze_multi_base(primes, [Ideal(R, X[4:], "P"), other], [0])
    assert [r.w[0] for r in both.reports] == [1, 0]
    assert both.overall == {0: False}
    with pytest.raises(UsageError):
        analyze_multi_base(primes, [Ideal(R, X[4:]), Ideal(R, X[3:])], [0])
    # no base equals plain analyze
    assert analyze(primes, None, [0]).w == analyze_multi_base(
        primes, [Ideal(R, [])], [0]).reports[0].w


def test_example_hl_values():
    I4 = example_hl(2, 7)[3]
    R = I4.ring
    X = R.gens()
    assert I4.generators == (X[0] + X[2] + X[5], X[0] * 3 + X[3] + X[5] * 4)
    Q4 = example_hl(2, 0)[3]
    Y = Q4.ring.gens()
    assert Q4.generators[1] == Y[0] * Fraction(1, 5) + Y[3] + Y[5] * Fraction(1, 2)
    assert all(p.is_linear() for p in example_hl(Fraction(3, 2), 0))


@pytest.mark.parametrize("a,char,condition", [
    (1, 7, "a ≠ 1"), (0, 0, "a ≠ 0"), (-1, 0, "a ≠ -1"), (6, 7, "a ≠ -1"),
    (2, 5, "a^2 + a - 1 ≠ 0"),  # 4 + 2 - 1 = 5
    (3, 11, "a^2 + a - 1 ≠ 0"),  # 9 + 3 - 1 = 11
])
def test_example_hl_parameter_errors(a, char, condition):
    with pytest.raises(ParameterError, match=condition.replace("^", r"\^").replace("+", r"\+")):
        example_hl(a, char)


def test_bounds_table():
    assert bounds_table(6, 2) == {"faltings": 4, "hl": 3, "sum": {0: 4, 1: 5}, "main": {0: 3, 1: 4}}


def test_search_examples():
    out = search_char_dependence(6, 2, 6, 3, seed=1, characteristics=[0, 2, 7],
                                 inject=example_hl(2, 7))
    assert out.findings[0].trial == -1 and out.findings[0].w == {0: 0, 2: 1, 7: 0}
    assert search_char_dependence(6, 2, 2, 40, seed=2).findings == []
    assert search_char_dependence(7, 3, 2, 40, seed=3, base_char=2).findings == []
    empty = search_char_dependence(6, 2, 6, 0, seed=0)
    assert empty.findings == [] and empty.trials == 0
    with pytest.raises(UsageError):
        search_char_dependence(0, 2, 6, 1, seed=0)


def test_determinism():
    a = search_char_dependence(5, 2, 4, 15, seed=11, characteristics=[0, 2])
    b = search_char_dependence(5, 2, 4, 15, seed=11, characteristics=[0, 2], workers=2)
    assert a == b
    assert trial_seeds(5, 4) == trial_seeds(5, 4) != trial_seeds(6, 4)
    r1 = analyze(example_hl(2, 7), characteristics=[2, 0])
    r2 = analyze(example_hl(2, 7), characteristics=[2, 0])
    assert r1.input_digest == r2.input_digest and r1.w == r2.w
