import pytest
from hypothesis import given, strategies as st

from kummer_models.analysis import analyze
from kummer_models.base import mk_curve
from kummer_models.degen import (atlas, case_ii_fixture, enumerate_admissible, example_family,
                                 is_admissible, is_torsor_type, nonextendible_example,
                                 necessary_conditions, realize, special_case_suite)
from kummer_models.errors import HypothesisError, InvalidInputError
from kummer_models.padic import mk_context


def _admissible_oracle(t, p, vp, vl1):
    """Clauses i)-iv) evaluated with fractions, independently of the package."""
    from fractions import Fraction
    j, g1, g2, k = t
    ok = max(g1, g2) <= k <= vl1 and g2 <= p * (k - g1 + j) <= p * g2 and p * j <= g1
    if k < p * g2:
        ok = ok and g1 - j == Fraction(vp, p)
    else:
        ok = ok and 0 <= p * (g2 - j) <= vp - p * g1 + k
    return ok


def test_example_types(ctx33, ctx31):
    assert is_admissible((0, 4, 1, 5), ctx33) == (True, "admissible")
    assert is_admissible((0, 0, 0, 0), ctx31)[0]
    ok, why = is_admissible((0, 4, 1, 9), ctx33)
    assert not ok and why.startswith("ii)")
    assert is_admissible((1, 2, 1, 2), ctx31)[1].startswith("iii)")
    assert not is_admissible((0, 4, 1, 10), ctx33)[0]
    assert not is_admissible((-1, 0, 0, 0), ctx31)[0]


@pytest.mark.parametrize("p,d", [(3, 1), (3, 3), (5, 1)])
def test_enumeration_matches_oracle(p, d):
    ctx = mk_context(p, d)
    vl1 = p * d
    got = set(enumerate_admissible(ctx))
    ref = {(j, a, b, k) for j in range(vl1 + 1) for a in range(vl1 + 1) for b in range(vl1 + 1)
           for k in range(vl1 + 1) if _admissible_oracle((j, a, b, k), p, ctx.v_p, vl1)}
    assert got == ref
    for j, g1, g2, k in got:
        assert 0 <= k - g1 + j <= min(g2, ctx.v_lambda2)


def test_enumeration_contents(ctx31):
    ts = enumerate_admissible(ctx31)
    assert (1, 3, 1, 3) in ts
    assert all((1, 3, g2, 3) in ts for g2 in (1, 2, 3))
    assert enumerate_admissible(ctx31, "torsor") == [t for t in ts if is_torsor_type(t, ctx31)]
    with pytest.raises(InvalidInputError):
        enumerate_admissible(ctx31, "bogus")


def test_admissible_family_not_realizable(ctx31):
    vp, p = ctx31.v_p, ctx31.p
    for j in range(ctx31.v_lambda2):
        t = (j, vp // p + j, ctx31.v_lambda1, ctx31.v_lambda1)
        assert is_admissible(t, ctx31)[0]
        assert t not in enumerate_admissible(ctx31, "torsor")
        assert necessary_conditions(t, ctx31) is not None
        with pytest.raises(InvalidInputError):
            realize(t, mk_curve(ctx31))


@pytest.mark.parametrize("d", [1, 3])
def test_realize_all_torsor_types(d):
    ctx = mk_context(3, d)
    A = mk_curve(ctx)
    for t in enumerate_admissible(ctx, "torsor"):
        r = realize(t, A)
        assert r.report.degen == t and r.report.strongly_extendible
        if r.presentation is not None:
            for res in r.presentation.coaction_residuals():
                assert res.is_zero()


def test_realize_examples(ctx31, A31):
    r = realize((1, 3, 1, 3), A31)
    assert r.report.model.literal() == "E(3,1,0,1)"
    r = realize((0, 0, 0, 0), A31)
    assert r.presentation is None and r.f == A31.parse("1 + Z^2")
    d = realize((0, 2, 0, 2), A31).as_dict()
    assert d["group"] == "E(2,0,0,1)" and d["f2"] == "Z"


def test_realize_iii_family(ctx33, A33):
    for t in enumerate_admissible(ctx33, "torsor"):
        j, g1, g2, _ = t
        if g2 == j:
            rep = realize(t, A33).report
            assert g1 >= 3 * g2 and rep.alpha.reduce_prec(g2).is_zero()


def test_realize_rejects(ctx31, A31, P31):
    with pytest.raises(InvalidInputError):
        realize((0, 2, 1, 3), A31)  # kappa > gamma1
    with pytest.raises(InvalidInputError):
        realize((0, 4, 1, 9), A31)  # not admissible
    with pytest.raises(HypothesisError):
        realize((0, 0, 0, 0), P31)


def test_nonextendible_family(ctx33, A33):
    fam = example_family(ctx33)
    assert fam == [(4, 1), (5, 1)]
    for g1, g2 in fam:
        rep = analyze(nonextendible_example(A33, g1, g2), A33)
        assert rep.degen == (0, g1, g2, g1 + g2) and not rep.strongly_extendible
    with pytest.raises(InvalidInputError):
        nonextendible_example(A33, 2, 1)


@pytest.mark.parametrize("d", [1, 3])
def test_special_case_suite(d):
    results = special_case_suite(mk_context(3, d))
    assert [r.case for r in results] == ["i", "ii", "iii", "iv", "v", "vi"]
    for r in results:
        assert r.passed, r.as_dict()
        assert r.checked > 0


def test_etale_fixture(ctx31, A31):
    rep = analyze(case_ii_fixture(A31, 3).kummer, A31)
    assert rep.degen == (1, 3, 3, 3)


def test_atlas(ctx31):
    entries = {e.degen: e for e in atlas(ctx31)}
    assert set(entries) == set(enumerate_admissible(ctx31))
    assert entries[(0, 2, 3, 3)].realizable is False
    assert entries[(1, 3, 3, 3)].realizable is True
    assert entries[(0, 2, 1, 3)].realizable == "unknown"
    for t, e in entries.items():
        if e.realizable is True:
            assert e.witness_cover and e.model
        if is_torsor_type(t, ctx31):
            assert e.realizable is True
    assert set(entries[(0, 0, 0, 0)].as_dict()) == {"type", "admissible", "realizable", "model",
                                                     "witness_cover", "reason"}


def test_atlas_nonextendible_family_true(ctx33):
    entries = {e.degen: e for e in atlas(ctx33, witnesses=True)}
    assert entries[(0, 4, 1, 5)].realizable is True
    assert entries[(0, 4, 1, 5)].model == "E(5,1,0,1)"
    assert not any(e.realizable is True and necessary_conditions(t, ctx33) for t, e in entries.items())


@given(st.tuples(*[st.integers(0, 9)] * 4))
def test_admissibility_matches_oracle(t):
    ctx = mk_context(3, 3)
    ok, reason = is_admissible(t, ctx)
    assert ok == _admissible_oracle(t, 3, ctx.v_p, ctx.v_lambda1)
    assert (reason == "admissible") == ok
