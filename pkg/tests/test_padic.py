import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from kummer_models.errors import InexactDivisionError, InvalidInputError, NotAUnitError
from kummer_models.padic import AtLeast, div_pi_pow, eisenstein_coeffs, inv_unit, mk_context, valuation
from kummer_models.tower import Elt

PD = [(3, 1), (3, 3), (5, 1)]


@pytest.mark.parametrize("p,d", PD + [(7, 1), (3, 2)])
def test_eisenstein_matches_sympy(p, d):
    x = sympy.symbols("x")
    poly = sympy.Poly(sympy.cyclotomic_poly(p * p, x).subs(x, 1 + x ** d), x)
    assert eisenstein_coeffs(p, d) == [int(c) for c in poly.all_coeffs()[::-1]]


@pytest.mark.parametrize("p,d", PD)
def test_eisenstein_shape(p, d):
    E = eisenstein_coeffs(p, d)
    e = p * (p - 1) * d
    assert len(E) == e + 1 and E[-1] == 1
    assert E[0] == p
    assert all(c % p == 0 for c in E[:-1])


@pytest.mark.parametrize("p,d", PD)
def test_context_constants(p, d):
    ctx = mk_context(p, d)
    assert ctx.e == ctx.v_p == p * (p - 1) * d
    assert ctx.N0 == 4 * ctx.e
    assert ctx.v_lambda1 == p * d and ctx.v_lambda2 == d
    assert ctx.lambda2.valuation() == d
    assert ctx.lambda1.valuation() == p * d
    assert ctx.eta.valuation() == d
    assert ctx.eta_pi.valuation() == d
    assert ctx.zeta2 ** (p * p) == 1
    assert not (ctx.zeta2 ** p == 1)
    assert ctx.zeta2.inv() == ctx.zeta2 ** (p * p - 1)
    assert ctx.R.const(p).valuation() == ctx.e


def test_describe(ctx33):
    assert ctx33.describe() == {"p": 3, "d": 3, "e": 18, "N": 72}


@pytest.mark.parametrize("p,d,N", [(2, 1, None), (4, 1, None), (9, 1, None), (3, 0, None), (3, 1, 5)])
def test_context_rejects(p, d, N):
    with pytest.raises(InvalidInputError):
        mk_context(p, d, N)


def test_context_is_cached():
    assert mk_context(3, 1) is mk_context(3, 1)


def _elements(ctx):
    return st.lists(st.integers(0, ctx.q - 1), min_size=ctx.e, max_size=ctx.e).map(
        lambda c: Elt(ctx.R, np.array(c, dtype=np.int64), ctx.N0)._normalized())


C31 = mk_context(3, 1)
C33 = mk_context(3, 3)


def _sympy_mul(ctx, a, b):
    x = sympy.symbols("x")
    E = sympy.Poly(list(reversed(ctx.eisenstein_poly)), x)
    pa = sympy.Poly(list(reversed([int(c) for c in a.arr])), x)
    pb = sympy.Poly(list(reversed([int(c) for c in b.arr])), x)
    r = (pa * pb).rem(E)
    coeffs = [int(c) for c in r.all_coeffs()[::-1]]
    coeffs += [0] * (ctx.e - len(coeffs))
    return Elt(ctx.R, np.array([c % ctx.q for c in coeffs], dtype=np.int64), ctx.N0)._normalized()


@given(_elements(C31), _elements(C31))
def test_mul_matches_sympy_d1(a, b):
    ref = _sympy_mul(C31, a, b)
    assert (a * b - ref).reduce_prec(min(a.prec, b.prec)).is_zero()


@given(_elements(C33), _elements(C33))
def test_mul_matches_sympy_d3(a, b):
    ref = _sympy_mul(C33, a, b)
    assert (a * b - ref).reduce_prec(min(a.prec, b.prec)).is_zero()


@given(_elements(C31), _elements(C31), _elements(C31))
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + (-a) == 0


@given(_elements(C33))
def test_unit_inverse(a):
    if a.valuation() > 0:
        with pytest.raises(NotAUnitError):
            inv_unit(a)
        return
    assert a * inv_unit(a) == 1


@given(_elements(C31), st.integers(0, 30))
def test_shift_div_roundtrip(a, k):
    b = a.shift_pi(k)
    assert b.valuation() == min(a.valuation() + k, b.prec)
    back = div_pi_pow(b, k)
    assert back.prec == b.prec - k
    assert (back - a).reduce_prec(back.prec).is_zero()


@given(_elements(C31), _elements(C31))
def test_valuation_of_product(a, b):
    va, vb = a.valuation(), b.valuation()
    if va + vb < min(a.prec + vb, b.prec + va):
        assert (a * b).valuation() == va + vb


def test_div_pi_exactness(ctx31):
    with pytest.raises(InexactDivisionError):
        ctx31.pi(3).div_pi(4)
    assert ctx31.pi(3).div_pi(3) == 1
    p_over_pi = ctx31.R.const(3).div_pi(1)
    assert p_over_pi.valuation() == ctx31.e - 1


def test_valuation_marker(ctx31):
    z = ctx31.R.zero(10)
    v = valuation(z)
    assert isinstance(v, AtLeast) and int(v) == 10 and repr(v) == ">=10"
    assert valuation(ctx31.pi(4)) == 4 and not isinstance(valuation(ctx31.pi(4)), AtLeast)


def test_precision_of_product(ctx31):
    a = ctx31.pi(2, prec=10)
    b = ctx31.pi(3, prec=20)
    assert (a * b).prec == min(10 + 3, 20 + 2)


def test_large_modulus_vp_path():
    ctx = mk_context(13, 1)
    assert ctx._vp is None
    assert ctx.R.const(13 ** 3).valuation() == 3 * ctx.e
    arr = np.array([0, 1, 13, 13 ** 2 * 5], dtype=np.int64)
    assert list(ctx.vp_of(arr)) == [ctx.M, 0, 1, 2]
