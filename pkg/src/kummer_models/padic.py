"""The ring R = Z_p[x]/(Phi_{p^2}(1 + x^d)) with uniformizer pi = x.

R is the ring of integers of Q_p(zeta_{p^2})(pi) with pi^d = zeta_2 - 1; it is
totally ramified of degree e = p(p-1)d.  Elements are stored as coefficient
vectors in pi^0..pi^(e-1) modulo q = p^M together with an absolute
pi-adic precision; see ``tower.Elt``.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from .errors import InvalidInputError, NotAUnitError
from .tower import Elt, Tower

RingElt = Elt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def eisenstein_coeffs(p: int, d: int) -> list:
    """Integer coefficients (low to high) of Phi_{p^2}(1 + x^d)."""
    e = p * (p - 1) * d
    out = [0] * (e + 1)
    for k in range(p):
        for i in range(p * k + 1):
            out[d * i] += comb(p * k, i)
    return out


class AtLeast(int):
    """Valuation marker: every known digit vanishes, so v >= this value."""

    def __repr__(self):
        return ">=%d" % int(self)

    __str__ = __repr__


@dataclass(eq=False)
class PAdicContext:
    p: int
    d: int
    N0: int
    e: int = field(init=False)
    eisenstein_poly: list = field(init=False)

    def __post_init__(self):
        p, d = self.p, self.d
        self.e = e = p * (p - 1) * d
        self.eisenstein_poly = eisenstein_coeffs(p, d)
        # internal constants carry 2e guard digits beyond the input precision
        self.Ncap = self.N0 + 2 * e
        self.M = -(-self.Ncap // e)
        self.q = q = p ** self.M
        E = self.eisenstein_poly
        self.eis = np.array([c % q for c in E[:e]], dtype=np.int64)
        red = np.zeros((max(e - 1, 1), e), dtype=np.int64)
        row = [(-c) % q for c in E[:e]]
        for h in range(e - 1):
            red[h] = row
            top = row[-1]
            row = [0] + row[:-1]
            row = [(r - top * c) % q for r, c in zip(row, E[:e])]
        self.red = red
        cm = np.zeros((self.Ncap + 1, e), dtype=np.int64)
        for prec in range(self.Ncap + 1):
            for i in range(e):
                k = min(max(-(-(prec - i) // e), 0), self.M)
                cm[prec, i] = p ** k
        self.colmod = cm
        self._vp = None
        if q <= 1 << 22:
            tab = np.zeros(q, dtype=np.int64)
            for k in range(1, self.M):
                tab[::p ** k] = k
            tab[0] = self.M
            self._vp = tab
        self._pipow = {}
        self.R = Tower(self, ())
        self._constants()

    # helpers used by the tower engine ---------------------------------
    def vp_of(self, arr):
        """p-adic valuation of each entry (M for zero entries)."""
        arr = np.asarray(arr, dtype=np.int64)
        if self._vp is not None:
            return self._vp[arr]
        out = np.zeros(arr.shape, dtype=np.int64)
        for k in range(1, self.M):
            out[arr % self.p ** k == 0] = k
        out[arr == 0] = self.M
        return out

    def pi_power_arr(self, k):
        if k not in self._pipow:
            e, q = self.e, self.q
            if k < e:
                v = np.zeros(e, dtype=np.int64)
                v[k] = 1
            else:
                v = np.array(self.red[k - e]) if k - e < e - 1 else None
                if v is None:
                    half = self.pi_power_arr(k // 2)
                    rest = self.pi_power_arr(k - k // 2)
                    from .kernels import conv
                    v = conv(half[None, :], rest[None, :], self.red, q)[0]
            self._pipow[k] = v % self.q
        return self._pipow[k].copy()

    # constants -----------------------------------------------------------
    def _constants(self):
        p, d, R = self.p, self.d, self.R
        self.v_p = self.e
        self.v_lambda2 = d
        self.v_lambda1 = p * d
        self.zeta2 = R.one() + R.pi_power(d)
        self.zeta1 = self.zeta2 ** p
        self.lambda2 = self.zeta2 - 1
        self.lambda1 = self.zeta1 - 1
        eta = R.zero()
        power = R.one()
        for k in range(1, p):
            power = power * self.lambda2
            eta = eta + power * ((-1) ** (k - 1) * pow(k, -1, self.q))
        self.eta = eta
        unit = self.lambda1.div_pi(self.v_lambda1)
        self.eta_pi = eta * unit.inv()

    # convenience ---------------------------------------------------------
    def elt(self, c=0, prec=None):
        return self.R.const(c, self.N0 if prec is None else prec)

    def pi(self, k=1, prec=None):
        return self.R.pi_power(k, self.N0 if prec is None else prec)

    def v_lambda(self, n):
        """v(lambda_(n)) for n = 1, 2."""
        return {1: self.v_lambda1, 2: self.v_lambda2}[n]

    def describe(self):
        return {"p": self.p, "d": self.d, "e": self.e, "N": self.N0}


@lru_cache(maxsize=None)
def mk_context(p: int, d: int = 1, N0: int | None = None) -> PAdicContext:
    if p == 2:
        raise InvalidInputError("p = 2 is excluded; p must be an odd prime")
    if not is_prime(p):
        raise InvalidInputError("p = %d is not prime" % p)
    if d < 1:
        raise InvalidInputError("d must be >= 1")
    e = p * (p - 1) * d
    if N0 is None:
        N0 = 4 * e
    if N0 < 2 * e:
        raise InvalidInputError("precision %d below the minimum 2e = %d" % (N0, 2 * e))
    return PAdicContext(p, d, N0)


# module-level operations on elements of R ------------------------------------
def valuation(x: Elt):
    v = x.valuation()
    return AtLeast(v) if v >= x.prec else v


def inv_unit(x: Elt) -> Elt:
    if x.valuation() != 0:
        raise NotAUnitError("element is not a unit")
    return x.inv()


def div_pi_pow(x: Elt, k: int) -> Elt:
    return x.div_pi(k)
