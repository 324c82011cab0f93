"""Base rings A, the degree-p quotient B1 = A[T1]/(psi - f1), residue tests."""
from math import comb

import numpy as np

from .errors import InvalidInputError, NotAUnitError
from .fp import in_span
from .textio import parse_in
from .tower import Axis, Elt, Tower

PolyElt = Elt
DEFAULT_ZDEG = 16


class BaseRing:
    """A = R (``point``) or the truncated local curve R[Z]/(Z^D) (``curve``)."""

    def __init__(self, ctx, variant="curve", D=DEFAULT_ZDEG):
        if variant not in ("point", "curve"):
            raise InvalidInputError("unknown base variant %r" % variant)
        if variant == "curve" and D < 2:
            raise InvalidInputError("degree cap D must be >= 2")
        self.ctx = ctx
        self.variant = variant
        self.D = D if variant == "curve" else 1
        axes = () if variant == "point" else (Axis("Z", D),)
        self.tower = Tower(ctx, axes)

    @property
    def is_point(self):
        return self.variant == "point"

    def __repr__(self):
        if self.is_point:
            return "BaseRing(point, p=%d, d=%d)" % (self.ctx.p, self.ctx.d)
        return "BaseRing(curve, p=%d, d=%d, D=%d)" % (self.ctx.p, self.ctx.d, self.D)

    def parse(self, src, prec=None):
        return parse_in(src, self.tower, prec)

    def const(self, c, prec=None):
        return self.tower.const(c, self.ctx.N0 if prec is None else prec)

    def one(self):
        return self.const(1)

    def Z(self, prec=None):
        if self.is_point:
            raise InvalidInputError("the point base has no coordinate Z")
        return self.tower.gen("Z", self.ctx.N0 if prec is None else prec)

    def pi(self, k=1):
        return self.tower.pi_power(k, self.ctx.N0)

    def lift(self, x):
        """Image of an element of R in A."""
        return self.tower.embed(x, [])

    def is_unit(self, f):
        """f is a unit iff f(Z=0) is a unit of R."""
        return int(f.arr[(0,) * self.tower.ndim + (0,)]) % self.ctx.p != 0

    def residue_dim(self):
        return self.D


def mk_point(ctx):
    return BaseRing(ctx, "point")


def mk_curve(ctx, D=DEFAULT_ZDEG):
    return BaseRing(ctx, "curve", D)


class QuotientB1:
    """B1 = A[T1]/(((1 + pi^g T1)^p - 1)/pi^(pg) - f1), free of rank p over A."""

    def __init__(self, base: BaseRing, gamma1: int, f1: Elt):
        ctx = base.ctx
        p = ctx.p
        if gamma1 < 0 or (p - 1) * gamma1 > ctx.v_p:
            raise InvalidInputError(
                "relation is not integral: (p-1)*gamma1 = %d > v(p) = %d" % ((p - 1) * gamma1, ctx.v_p))
        if f1.ring is not base.tower:
            raise InvalidInputError("f1 must be an element of the base ring")
        self.base = base
        self.ctx = ctx
        self.gamma1 = gamma1
        self.f1 = f1
        A = base.tower
        # T^p = f1 - sum_{k=1}^{p-1} C(p,k) pi^(-gamma1 (p-k)) T^k
        coeffs = [f1]
        for k in range(1, p):
            c = ctx.R.const(-comb(p, k)).div_pi(gamma1 * (p - k))
            coeffs.append(A.embed(c, []))
        self.tower = A.extend("T1", coeffs)

    def __repr__(self):
        return "QuotientB1(gamma1=%d, %r)" % (self.gamma1, self.base)

    def T(self):
        return self.tower.gen("T1", self.ctx.N0)

    def lift(self, x):
        """Image of an element of A (or R) in B1."""
        if x.ring.ndim == 0:
            return self.tower.embed(x, [])
        return self.tower.embed(x, list(range(x.ring.ndim)))

    def unit_u(self):
        """1 + pi^gamma1 T1, whose p-th power is 1 + pi^(p gamma1) f1."""
        return 1 + self.T().shift_pi(self.gamma1)

    def derivative(self, h: Elt) -> Elt:
        """d/dT1 of the normal form (degree < p in T1)."""
        out = self.tower.zero(h.prec)
        ax = self.tower.ndim - 1
        arr = np.moveaxis(h.arr, ax, 0)
        dst = np.moveaxis(out.arr, ax, 0)
        for k in range(1, self.ctx.p):
            dst[k - 1] = arr[k] * k
        return out._normalized()

    def coeff_T(self, h: Elt, k: int) -> Elt:
        """Coefficient of T1^k, an element of A."""
        A = self.base.tower
        arr = np.take(h.arr, k, axis=self.tower.ndim - 1).copy()
        return Elt(A, arr, h.prec)._normalized()


def b1_mul(x: Elt, y: Elt) -> Elt:
    return x * y


def b1_reduce(x: Elt) -> Elt:
    return x._normalized()


def b1_inv_unit(x: Elt) -> Elt:
    return x.inv()


def _residue_root_monomial(f: Elt, n: int):
    ring = f.ring
    p = ring.ctx.p
    r = f.residue()
    if ring.ndim == 0:
        return ring.from_residue(r, prec=f.prec)
    ppn = p ** n
    nz = np.flatnonzero(r)
    if np.any(nz % ppn):
        return None
    root = np.zeros_like(r)
    root[nz // ppn] = r[nz]
    return ring.from_residue(root)


def residue_pth_power_test(f: Elt, n: int = 1):
    """g with g^(p^n) = f mod pi, or None.

    Over A the residue ring F_p[Z]/(Z^D) is handled by exponent divisibility;
    over any other tower ring by linear algebra on the Frobenius image.
    """
    ring = f.ring
    if n not in (1, 2):
        raise InvalidInputError("n must be 1 or 2")
    if all(ax.kind == "trunc" for ax in ring.axes) and ring.ndim <= 1:
        return _residue_root_monomial(f, n)
    p = ring.ctx.p
    F = ring.frobenius_matrix(n)
    w = in_span(F, f.residue().ravel(), p)
    if w is None:
        return None
    return ring.from_residue(w)


def ap_span_matrix(f1: Elt):
    """Columns spanning A_k^p[f1] = span{Z^(pi) f1^t : t < p} inside F_p[Z]/(Z^D)."""
    ring = f1.ring
    p = ring.ctx.p
    D = ring.shape[0]
    f1r = f1.reduce_prec(1)
    powers = [ring.one(prec=1)]
    for _ in range(1, p):
        powers.append(powers[-1] * f1r)
    cols = []
    for t in range(p):
        for i in range(0, D, p):
            cols.append((powers[t] * ring.monomial((i,), prec=1)).residue())
    return np.array(cols, dtype=np.int64).T % p


def in_ap_span(f1: Elt, g: Elt) -> bool:
    return in_span(ap_span_matrix(f1), g.residue(), g.ring.ctx.p) is not None


def subring_nontriviality(f1: Elt, base: BaseRing | None = None):
    """First monomial Z^k outside A_k^p[f1], or None when there is none."""
    ring = f1.ring
    if ring.ndim == 0 or (base is not None and base.is_point):
        return None
    p = ring.ctx.p
    S = ap_span_matrix(f1)
    D = ring.shape[0]
    for k in range(D):
        v = np.zeros(D, dtype=np.int64)
        v[k] = 1
        if in_span(S, v, p) is None:
            return ring.monomial((k,), prec=ring.ctx.N0)
    return None


def require_unit(base: BaseRing, f: Elt, what="element"):
    if not base.is_unit(f):
        raise NotAUnitError("%s is not a unit of A" % what)
