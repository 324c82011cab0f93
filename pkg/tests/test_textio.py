import numpy as np
import pytest
from hypothesis import given, strategies as st

from kummer_models.errors import ParseError
from kummer_models.textio import format_elt, parse_model_literal, parse_type_literal
from kummer_models.tower import Elt


def test_examples(A33, A31):
    f = A33.parse("1 + pi^12*(1+Z^2)")
    assert f == 1 + (1 + A33.Z() ** 2).shift_pi(12)
    assert A31.parse("0").is_zero()
    assert format_elt(A31.parse("(1+Z)^3")) == "1 + 3*Z + 3*Z^2 + Z^3"
    assert A31.parse("-Z + 2") == 2 - A31.Z()
    assert format_elt(A31.parse("-pi^2*Z^3")) == "-pi^2*Z^3"


@pytest.mark.parametrize("src,pos", [("1+", 2), ("1 + Y", 4), ("(1+Z", 4), ("1 ** 2", 3), ("2 $ 3", 2),
                                     ("Z^", 2), ("", 0)])
def test_syntax_errors_carry_position(A31, src, pos):
    with pytest.raises(ParseError) as exc:
        A31.parse(src)
    assert exc.value.pos == pos


def test_degree_cap(A31):
    with pytest.raises(ParseError):
        A31.parse("Z^16")
    assert A31.parse("(1+Z)^20 - (1+Z)^20").is_zero()  # wide evaluation, exact cancellation


def test_huge_degree_rejected(A31):
    with pytest.raises(ParseError):
        A31.parse("Z^5000")


def test_point_base_has_no_Z(P31):
    with pytest.raises(ParseError):
        P31.parse("1 + Z")
    assert P31.parse("1 + pi^2") == 1 + P31.ctx.pi(2)


def test_model_literals():
    assert parse_model_literal("G(3, 1)") == ("G", 3, 1)
    assert parse_model_literal("E(5,1,0,1)") == ("E", 5, 1, "0", 1)
    assert parse_model_literal("E(3,3,pi + pi^2,1)") == ("E", 3, 3, "pi + pi^2", 1)
    with pytest.raises(ParseError):
        parse_model_literal("H(1,2)")


def test_type_literals():
    assert parse_type_literal("0,4,1,5") == (0, 4, 1, 5)
    assert parse_type_literal("(1, 3, 1, 3)") == (1, 3, 1, 3)
    for bad in ("1,2,3", "a,b,c,d", "1,-1,0,0"):
        with pytest.raises(ParseError):
            parse_type_literal(bad)


@st.composite
def curve_elements(draw, ctx_D=(None, 6)):
    from kummer_models.base import mk_curve
    from kummer_models.padic import mk_context
    ctx = draw(st.sampled_from([mk_context(3, 1), mk_context(5, 1), mk_context(3, 3)]))
    A = mk_curve(ctx, 6)
    n = 6 * ctx.e
    vals = draw(st.lists(st.integers(0, ctx.q - 1), min_size=n, max_size=n))
    prec = draw(st.integers(1, ctx.N0))
    return A, Elt(A.tower, np.array(vals, dtype=np.int64).reshape(6, ctx.e), prec)._normalized()


@given(curve_elements())
def test_print_parse_roundtrip(data):
    A, x = data
    y = A.parse(format_elt(x), prec=x.prec)
    assert (x - y).is_zero()
    assert format_elt(y) == format_elt(x)
