import pytest
from hypothesis import given, strategies as st

from kummer_models import errors
from kummer_models.analysis import analyze, analyze_zp, compute_level, prepare_cover, relation_derivative
from kummer_models.base import QuotientB1, mk_curve
from kummer_models.fixtures import COVERS
from kummer_models.padic import mk_context


@pytest.mark.parametrize("name,p,d,src,expected", COVERS, ids=[c[0] for c in COVERS])
def test_bundled_covers(name, p, d, src, expected):
    A = mk_curve(mk_context(p, d))
    f = A.parse(src)
    if isinstance(expected, str):
        with pytest.raises(getattr(errors, expected)):
            analyze(f, A)
    else:
        assert analyze(f, A).degen == expected


def test_example_report(A33):
    rep = analyze(A33.parse("(1+pi^12*(1+Z^2))*(1+Z^2+pi^3*Z)^3"), A33)
    assert rep.degen == (0, 4, 1, 5)
    assert rep.model.literal() == "E(5,1,0,1)"
    assert not rep.strongly_extendible
    assert rep.differents == (18 - 2 * 4, 18 - 2 * 1)
    d = rep.as_dict()
    assert d["witnesses"]["H"] == "T1" and d["alpha"] == "0"
    # witnesses: f g^(-p) = 1 + pi^(p gamma1) f1
    assert rep.f * rep.g ** -3 == 1 + rep.f1.shift_pi(12)


def test_compute_level(A31):
    lv = compute_level(A31.parse("1+pi^9*(1+Z^2)"), 2)
    assert lv.level == 1
    lv = compute_level(A31.parse("1+pi^9*(1+Z^2)"), 1)
    assert lv.level == 3  # capped at v(lambda1)
    lv = compute_level(A31.parse("(1+Z)^3*(1+pi^3*Z^2)"), 1)
    f = A31.parse("(1+Z)^3*(1+pi^3*Z^2)")
    assert lv.level == 1 and f * lv.g ** 3 == 1 + lv.f0.shift_pi(3)


def test_analyze_zp(A33, P31, ctx31):
    rep = analyze_zp(A33.parse("1+pi^9*(1+Z^2)"), A33)
    assert (rep.gamma, rep.different, rep.different_direct) == (3, 12, 12)
    assert rep.model.literal() == "G(3,1)"
    rep = analyze_zp(P31.parse("1 + 2*pi^9"), P31)
    assert (rep.gamma, rep.different) == (3, 0)  # etale over the point
    with pytest.raises(errors.HypothesisError):
        analyze_zp(P31.parse("2"), P31)  # perfect residue field: never reduced
    with pytest.raises(errors.NotAUnitError):
        analyze_zp(P31.parse("pi"), P31)


@pytest.mark.parametrize("gamma", range(4))
def test_different_direct(A31, gamma):
    f = A31.parse("1+pi^%d*(1+Z^2)" % (3 * gamma))
    rep = analyze_zp(f, A31)
    assert rep.gamma == gamma
    B = QuotientB1(A31, gamma, rep.f0)
    assert relation_derivative(B).valuation() == 6 - 2 * gamma == rep.different


def test_prepare_cover(A31, P31):
    with pytest.raises(errors.HypothesisError):
        prepare_cover(A31.parse("pi*(1+Z^2)"), A31)
    u = prepare_cover(A31.parse("pi^9*(1+Z^2)"), A31)
    assert u == A31.parse("1+Z^2")
    with pytest.raises(errors.InvalidInputError):
        prepare_cover(A31.parse("0"), A31)
    with pytest.raises(errors.NotAUnitError):
        prepare_cover(A31.parse("pi^9*Z"), A31)
    with pytest.raises(errors.InvalidInputError):
        prepare_cover(P31.one(), A31)
    with pytest.raises(errors.HypothesisError):
        analyze(P31.one(), P31)


def test_pi_power_is_stripped(A31):
    assert analyze(A31.parse("pi^9*(1+Z^2)"), A31).degen == (0, 0, 0, 0)


BASE_COVERS = [(3, 3, "(1+pi^12*(1+Z^2))*(1+Z^2+pi^3*Z)^3"), (3, 3, "1+pi^9*(1+Z^2)"),
               (3, 1, "1+Z^2"), (3, 3, "(1+pi^12*(1+Z^2))*(1+Z)^3")]


@given(st.sampled_from(BASE_COVERS), st.integers(1, 8), st.integers(0, 30), st.integers(1, 6))
def test_invariant_under_unit_powers(cover, a, k, i):
    p, d, src = cover
    A = mk_curve(mk_context(p, d))
    f = A.parse(src)
    if a % p == 0:
        a += 1
    u = A.const(a) + (A.Z() ** i).shift_pi(k + 1)
    g = f * u ** (p * p)
    r0, r1 = analyze(f, A), analyze(g, A)
    assert r0.degen == r1.degen
    j, g1, g2, kappa = r1.degen
    assert p * j <= g1 and j <= g2 and g1 <= kappa <= g1 + g2 - j
