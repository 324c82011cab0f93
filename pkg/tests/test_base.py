import pytest

from kummer_models.base import (BaseRing, QuotientB1, in_ap_span, mk_curve, require_unit,
                                residue_pth_power_test, subring_nontriviality)
from kummer_models.errors import InvalidInputError, NotAUnitError


def test_base_variants(ctx31):
    A = mk_curve(ctx31, 8)
    assert A.D == 8 and A.residue_dim() == 8 and not A.is_point
    with pytest.raises(InvalidInputError):
        BaseRing(ctx31, "disc")
    with pytest.raises(InvalidInputError):
        mk_curve(ctx31, 1)
    assert "curve" in repr(A)


def test_units(A31, P31):
    assert A31.is_unit(A31.parse("2 + Z"))
    assert not A31.is_unit(A31.parse("pi + Z"))
    with pytest.raises(NotAUnitError):
        require_unit(A31, A31.Z())
    with pytest.raises(InvalidInputError):
        P31.Z()


def test_residue_roots_over_A(A31):
    assert residue_pth_power_test(A31.parse("1 + Z^2"), 1) is None
    r = residue_pth_power_test(A31.parse("1 + Z^3 + pi*Z"), 1)
    assert r == A31.parse("1 + Z")
    assert residue_pth_power_test(A31.parse("1 + Z^3"), 2) is None
    assert residue_pth_power_test(A31.parse("2 + Z^9"), 2) == A31.parse("2 + Z")
    with pytest.raises(InvalidInputError):
        residue_pth_power_test(A31.one(), 3)


def test_residue_roots_over_B1(A31):
    f1 = A31.parse("1 + Z^2")
    B = QuotientB1(A31, 1, f1)
    assert residue_pth_power_test(B.lift(f1), 1) is not None  # T1^p = f1 mod pi
    assert residue_pth_power_test(B.lift(A31.Z()), 1) is None
    r = residue_pth_power_test(B.T() ** 3, 1)
    assert r is not None and (r ** 3 - B.T() ** 3).divisible_by_pi(1)


def test_subring_witness(A31):
    f1 = A31.parse("1 + Z^2")
    w = subring_nontriviality(f1, A31)
    assert w == A31.Z()
    assert not in_ap_span(f1, A31.Z())
    assert in_ap_span(f1, A31.parse("Z^2"))  # Z^2 = f1 - 1


def test_subring_point(P31):
    assert subring_nontriviality(P31.one(), P31) is None


def test_B1_guards(A31, A33):
    f1 = A31.parse("1 + Z^2")
    with pytest.raises(InvalidInputError):
        QuotientB1(A31, 4, f1)  # (p-1) * 4 > v(p) = 6
    with pytest.raises(InvalidInputError):
        QuotientB1(A33, 1, f1)  # f1 from another ring
    B = QuotientB1(A31, 3, f1)  # etale extreme is allowed
    assert B.unit_u() ** 3 == B.lift(1 + f1.shift_pi(9))


def test_B1_derivative_and_coeffs(A31):
    B = QuotientB1(A31, 1, A31.parse("1 + Z^2"))
    T = B.T()
    h = 2 + T * 3 + T ** 2
    assert B.derivative(h) == 3 + T * 2
    assert B.coeff_T(h, 0) == 2 and B.coeff_T(h, 2) == 1
