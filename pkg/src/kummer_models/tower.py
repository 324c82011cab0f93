"""Free R-algebras presented as towers of truncations and monic relations.

Every ring used by the package (R itself, the truncated base ring A, the
degree-p quotient B1, Hopf algebras and their tensor powers) is a free
R-module with a monomial basis.  An element is an int64 array of shape
``ring.shape + (e,)``: the last axis holds the coefficients of pi^0..pi^(e-1)
of each basis coefficient, taken modulo the context modulus q = p^M.

Axes are reduced in order.  A ``trunc`` axis kills x^n; a ``monic`` axis
rewrites x^n as sum_k c_k x^k where the c_k live on earlier axes only.
"""
from dataclasses import dataclass

import numpy as np

from .errors import InexactDivisionError, NotAUnitError, PrecisionError
from .kernels import conv


@dataclass(frozen=True)
class Axis:
    name: str
    n: int
    kind: str = "trunc"  # or "monic"
    rel: object = None  # array (full ndim) of the c_k, x-axis of length n
    rel_prec: int = 10**9


class Tower:
    """A ring descriptor: context plus a sequence of axes."""

    def __init__(self, ctx, axes=()):
        self.ctx = ctx
        self.axes = tuple(axes)
        self.shape = tuple(ax.n for ax in self.axes)
        self.ndim = len(self.axes)
        self.rel_prec = min([ax.rel_prec for ax in self.axes if ax.kind == "monic"],
                            default=ctx.Ncap)
        self.has_monic = any(ax.kind == "monic" for ax in self.axes)
        # relation arrays padded with trailing unit axes to full rank
        self._rels = []
        for i, ax in enumerate(self.axes):
            if ax.kind != "monic":
                self._rels.append(None)
                continue
            rel = np.asarray(ax.rel, dtype=np.int64)
            if rel.ndim != i + 2:
                raise ValueError("relation of axis %s has wrong rank" % ax.name)
            self._rels.append(rel.reshape(rel.shape[:-1] + (1,) * (self.ndim - i - 1) + (ctx.e,)))
        self._cache = {}

    def __repr__(self):
        return "Tower(%s)" % ", ".join("%s<%d:%s" % (a.name, a.n, a.kind) for a in self.axes)

    # construction -----------------------------------------------------
    def zero(self, prec=None):
        return Elt(self, np.zeros(self.shape + (self.ctx.e,), np.int64),
                   self.ctx.Ncap if prec is None else prec)

    def one(self, prec=None):
        return self.const(1, prec)

    def const(self, c, prec=None):
        x = self.zero(prec)
        x.arr[(0,) * self.ndim + (0,)] = int(c) % self.ctx.q
        return x._normalized()

    def monomial(self, exps, coeff=1, prec=None):
        """coeff * pi^k * prod x_i^exps[i]; a trailing extra entry is k."""
        exps = tuple(int(t) for t in exps)
        k = exps[self.ndim] if len(exps) > self.ndim else 0
        exps = exps[:self.ndim]
        if any(ei >= n for ei, n in zip(exps, self.shape)):
            raise ValueError("monomial outside the basis of %r" % (self,))
        x = self.zero(prec)
        x.arr[exps] = (self.ctx.pi_power_arr(k) * (int(coeff) % self.ctx.q)) % self.ctx.q
        return x._normalized()

    def gen(self, name, prec=None):
        names = [a.name for a in self.axes]
        exps = [0] * self.ndim
        exps[names.index(name)] = 1
        return self.monomial(exps, prec=prec)

    def pi_power(self, k, prec=None):
        return self.monomial((0,) * self.ndim + (k,), prec=prec)

    def embed(self, x, positions=None):
        """Image of an element whose ring axes sit at increasing ``positions``."""
        src = x.ring
        if positions is None:
            names = [a.name for a in self.axes]
            positions = [names.index(a.name) for a in src.axes]
        if list(positions) != sorted(positions):
            raise ValueError("embedding positions must increase")
        arr = np.zeros(self.shape + (self.ctx.e,), np.int64)
        idx = [0] * self.ndim
        for pos, ax in zip(positions, src.axes):
            idx[pos] = slice(0, ax.n)
        arr[tuple(idx)] = x.arr
        return Elt(self, arr, x.prec)._normalized()

    def extend(self, name, coeffs):
        """Adjoin x with x^n = sum_k coeffs[k] x^k, coefficients in this ring."""
        rel = np.stack([c.arr for c in coeffs], axis=self.ndim)
        prec = min(c.prec for c in coeffs)
        return Tower(self.ctx, self.axes + (Axis(name, len(coeffs), "monic", rel, prec),))

    def tensor(self, other, suffix="'"):
        """Tensor product over R; axes of ``other`` are renamed with ``suffix``."""
        axes = list(self.axes)
        for ax in other.axes:
            rel = ax.rel
            if rel is not None:
                rel = np.asarray(rel).reshape((1,) * self.ndim + np.shape(rel))
            axes.append(Axis(ax.name + suffix, ax.n, ax.kind, rel, ax.rel_prec))
        return Tower(self.ctx, axes)

    # reduction ----------------------------------------------------------
    def _fold(self, raw, upto=None):
        ctx = self.ctx
        upto = self.ndim if upto is None else upto
        for i in range(upto):
            ax = self.axes[i]
            m = raw.shape[i]
            if m <= ax.n:
                continue
            if ax.kind == "trunc":
                raw = raw[(slice(None),) * i + (slice(0, ax.n),)]
                continue
            raw = np.array(raw, copy=True)
            n = ax.n
            for t in range(m - 1, n - 1, -1):
                sl = (slice(None),) * i + (slice(t, t + 1),)
                X = raw[sl]
                if not X.any():
                    continue
                Y = conv(X, self._rels[i], ctx.red, ctx.q)
                Y = self._fold(Y, i)
                tgt = (slice(None),) * i + (slice(t - n, t),)
                raw[tgt] = (raw[tgt] + Y) % ctx.q
                raw[sl] = 0
            raw = raw[(slice(None),) * i + (slice(0, n),)]
        return raw

    def mul_arrays(self, a, b):
        return self._fold(conv(a, b, self.ctx.red, self.ctx.q))

    # residue algebra ----------------------------------------------------
    def basis_size(self):
        return int(np.prod(self.shape, dtype=np.int64)) if self.shape else 1

    def basis_elt(self, k, prec=None):
        idx = np.unravel_index(k, self.shape) if self.shape else ()
        return self.monomial(tuple(int(i) for i in idx), prec=prec)

    def residue_mul_matrix(self, x):
        """Matrix over F_p of multiplication by x on the residue algebra."""
        p = self.ctx.p
        xr = x.reduce_prec(1)
        cols = []
        for k in range(self.basis_size()):
            cols.append((xr * self.basis_elt(k, prec=1)).residue().ravel())
        return np.array(cols, dtype=np.int64).T % p

    def frobenius_matrix(self, n=1):
        """Columns: residues of b^(p^n) for the basis monomials b."""
        key = ("frob", n)
        if key not in self._cache:
            p = self.ctx.p
            cols = []
            for k in range(self.basis_size()):
                b = self.basis_elt(k, prec=1)
                for _ in range(n):
                    b = b ** p
                cols.append(b.residue().ravel())
            self._cache[key] = np.array(cols, dtype=np.int64).T % p
        return self._cache[key]

    def from_residue(self, vec, prec=None):
        """Lift a residue vector (entries mod p) with digits in [0, p)."""
        x = self.zero(prec)
        x.arr[..., 0] = np.asarray(vec, dtype=np.int64).reshape(self.shape) % self.ctx.p
        return x._normalized()


class Elt:
    """Element of a Tower ring, known modulo pi^prec."""

    __slots__ = ("ring", "arr", "prec")

    def __init__(self, ring, arr, prec):
        self.ring = ring
        self.arr = arr
        self.prec = int(min(prec, ring.ctx.Ncap))

    # bookkeeping --------------------------------------------------------
    def _normalized(self):
        ctx = self.ring.ctx
        if self.prec < 0:
            raise PrecisionError("negative precision")
        self.arr = np.asarray(self.arr, dtype=np.int64) % ctx.colmod[self.prec]
        return self

    def copy(self):
        return Elt(self.ring, self.arr.copy(), self.prec)

    def reduce_prec(self, prec):
        return Elt(self.ring, self.arr.copy(), min(prec, self.prec))._normalized()

    def valuation(self):
        """pi-adic valuation; equals ``self.prec`` when every known digit is 0."""
        ctx = self.ring.ctx
        arr = self.arr
        if not arr.any():
            return self.prec
        vals = ctx.vp_of(arr) * ctx.e + np.arange(ctx.e)
        return int(min(vals.min(), self.prec))

    def is_zero(self):
        return not self.arr.any()

    def divisible_by_pi(self, k):
        """Decide v(self) >= k; raises PrecisionError when undecidable."""
        v = self.valuation()
        if v < self.prec:
            return v >= k
        if self.prec >= k:
            return True
        raise PrecisionError("need precision %d, have %d" % (k, self.prec))

    def residue(self):
        return self.arr[..., 0] % self.ring.ctx.p

    def __eq__(self, other):
        if not isinstance(other, Elt):
            other = self.ring.const(other)
        d = self - other
        return d.is_zero()

    def __hash__(self):  # pragma: no cover - elements are not used as keys
        raise TypeError("unhashable")

    def congruent(self, other, k):
        """self == other mod pi^k."""
        return (self - other).divisible_by_pi(k)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Elt):
            if other.ring is not self.ring:
                if other.ring.ctx is not self.ring.ctx:
                    raise ValueError("context mismatch")
                if other.ring.ndim == 0:
                    return self.ring.embed(other, [])
                raise ValueError("ring mismatch: %r vs %r" % (self.ring, other.ring))
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        return Elt(self.ring, self.arr + other.arr, min(self.prec, other.prec))._normalized()

    __radd__ = __add__

    def __neg__(self):
        return Elt(self.ring, -self.arr, self.prec)._normalized()

    def __sub__(self, other):
        other = self._coerce(other)
        return Elt(self.ring, self.arr - other.arr, min(self.prec, other.prec))._normalized()

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Elt(self.ring, self.arr * (other % self.ring.ctx.q), self.prec)._normalized()
        other = self._coerce(other)
        va, vb = self.valuation(), other.valuation()
        prec = min(self.prec + vb, other.prec + va)
        ring = self.ring
        if ring.has_monic:
            prec = min(prec, ring.rel_prec)
        arr = ring.mul_arrays(self.arr, other.arr)
        return Elt(ring, arr, prec)._normalized()

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift_pi(self, k):
        """Multiply by pi^k (k >= 0)."""
        if k == 0:
            return self.copy()
        return self * self.ring.ctx.R.pi_power(k)

    def div_pi(self, k):
        """Exact division by pi^k; raises InexactDivisionError otherwise."""
        if k == 0:
            return self.copy()
        if not self.divisible_by_pi(k):
            raise InexactDivisionError("valuation %d < %d" % (self.valuation(), k))
        ctx = self.ring.ctx
        arr = self.arr.copy()
        for _ in range(k):
            c0 = arr[..., 0] // ctx.p
            new = np.empty_like(arr)
            new[..., :-1] = arr[..., 1:] - c0[..., None] * ctx.eis[None, 1:ctx.e]
            new[..., -1] = -c0
            arr = new % ctx.q
        return Elt(self.ring, arr, self.prec - k)._normalized()

    def inv(self):
        """Inverse of a unit: residue inverse by linear algebra, then Newton."""
        ring = self.ring
        ctx = ring.ctx
        if ring.ndim == 0:
            c0 = int(self.arr[0]) % ctx.p
            if c0 == 0:
                raise NotAUnitError("not a unit")
            y = ring.const(pow(c0, -1, ctx.p))
        else:
            from .fp import solve_mod_p
            M = ring.residue_mul_matrix(self)
            rhs = np.zeros(ring.basis_size(), dtype=np.int64)
            rhs[0] = 1
            sol = solve_mod_p(M, rhs, ctx.p)
            if sol is None:
                raise NotAUnitError("residue image is not invertible")
            y = ring.from_residue(sol)
        for _ in range(64):
            err = self * y - 1
            if err.is_zero():
                break
            y = y * (1 - err)
            y.prec = ctx.Ncap
        else:  # pragma: no cover
            raise PrecisionError("Newton iteration did not converge")
        y.prec = err.prec
        return y._normalized()

    def coeff(self, idx):
        """Coefficient at a basis multi-index as an element of R."""
        R = self.ring.ctx.R
        return Elt(R, self.arr[tuple(idx)].copy(), self.prec)._normalized()

    def __repr__(self):
        from .textio import format_elt
        return "<%s | prec %d>" % (format_elt(self), self.prec)
