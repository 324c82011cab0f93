"""Model group schemes G_{lambda,n} and E^{(mu,lambda;E_p(aS),j)} with their Hopf data.

All groups are over R with mu = pi^m and lambda = pi^n.  Coordinate rings are
towers with monic relations, so every identity is checked on normal forms.
"""
from dataclasses import dataclass, field
from math import comb, factorial

import numpy as np

from .errors import InexactDivisionError, InvalidInputError, InvariantError
from .kernels import conv
from .tower import Elt, Tower


# small helpers -------------------------------------------------------------------
def lift_class(ctx, a, n):
    """Canonical lift to full precision of the class of ``a`` modulo pi^n."""
    if isinstance(a, int):
        a = ctx.R.const(a)
    r = a.reduce_prec(n)
    return Elt(ctx.R, r.arr.copy(), ctx.N0)._normalized()


def scalar_mul(c: Elt, x: Elt) -> Elt:
    """Product of an element of R with an element of any tower ring."""
    ctx = x.ring.ctx
    e = ctx.e
    rows = x.arr.reshape(-1, e)
    out = conv(c.arr.reshape(1, e), rows, ctx.red, ctx.q)
    prec = min(x.prec + c.valuation(), c.prec + x.valuation())
    return Elt(x.ring, out.reshape(x.arr.shape), prec)._normalized()


def _monomial_images(ring: Tower, images, target: Tower):
    """Images of every basis monomial of ``ring`` under x_k -> images[k]."""
    out = {(): target.one()}
    for k, n in enumerate(ring.shape):
        nxt = {}
        powers = [target.one()]
        for _ in range(1, n):
            powers.append(powers[-1] * images[k])
        for key, val in out.items():
            for t in range(n):
                nxt[key + (t,)] = val if t == 0 else val * powers[t]
        out = nxt
    return out


def substitute(x: Elt, images, target: Tower) -> Elt:
    """Apply the R-algebra map sending the generators of x.ring to ``images``."""
    monos = _monomial_images(x.ring, images, target)
    acc = target.zero()
    for idx, mono in monos.items():
        c = x.coeff(idx)
        if c.is_zero() and c.prec >= x.prec:
            continue
        acc = acc + scalar_mul(c, mono)
    acc.prec = min(acc.prec, x.prec)
    return acc._normalized()


def ep_coeffs(a: Elt):
    """Coefficients a^i / i!, i < p, of the truncated exponential E_p(aS)."""
    ctx = a.ring.ctx
    out = [ctx.R.one()]
    for i in range(1, ctx.p):
        out.append(a ** i * pow(factorial(i), -1, ctx.q))
    return out


def ep(a: Elt):
    return ep_coeffs(a)


def ep_eval(coeffs, x: Elt) -> Elt:
    """sum_i coeffs[i] x^i in the ring of x (Horner)."""
    acc = x.ring.zero()
    for c in reversed(coeffs):
        acc = acc * x + x.ring.embed(c, [])
    return acc


def _rel_coeffs(ctx, ring: Tower, N: int, shift: int):
    """Coefficients c_k with x^N = sum c_k x^k from ((1 + pi^shift x)^N - 1)/pi^(N shift) = 0."""
    coeffs = [ring.zero()]
    for k in range(1, N):
        c = ctx.R.const(-comb(N, k)).div_pi(shift * (N - k))
        coeffs.append(ring.embed(c, []))
    return coeffs


# Hopf data -------------------------------------------------------------------------
@dataclass
class HopfData:
    ring: Tower
    tensor: Tower
    gens: list
    comul: list
    counit: list
    antipode: list
    relations: object  # callable(ring, values) -> list of Elt that must vanish

    @property
    def rank(self):
        return self.ring.basis_size()


@dataclass
class HopfReport:
    coassociative: bool
    counit: bool
    antipode: bool
    closure: bool
    prec: int
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.coassociative and self.counit and self.antipode and self.closure

    def as_dict(self):
        return {"coassociativity": self.coassociative, "counit": self.counit,
                "antipode": self.antipode, "closure": self.closure,
                "precision": self.prec, "ok": self.ok, "failures": list(self.failures)}


class ModelGroup:
    """G(m,n) = G_{pi^m,n} or E(m,n,a,j) = E^{(pi^m,pi^n;E_p(aS),j)}."""

    def __init__(self, ctx, kind, m, n, a=None, j=None):
        self.ctx = ctx
        self.kind = kind
        self.m = m
        self.n = n
        self.a = a
        self.j = j
        self._hopf = None

    def __repr__(self):
        return self.literal()

    def literal(self):
        if self.kind == "G":
            return "G(%d,%d)" % (self.m, self.n)
        from .textio import format_elt
        return "E(%d,%d,%s,%d)" % (self.m, self.n, format_elt(self.a.reduce_prec(self.n)), self.j)

    @property
    def order_exponent(self):
        return self.n if self.kind == "G" else 2

    def hopf(self) -> HopfData:
        if self._hopf is None:
            self._hopf = _glam_hopf(self) if self.kind == "G" else _ext_hopf(self)
        return self._hopf

    def is_mu(self):
        return self.m == 0 and (self.kind == "G" or self.n == 0)


# G_{lambda,n} ---------------------------------------------------------------------------
def mk_glam_n(ctx, m: int, n: int) -> ModelGroup:
    if n not in (1, 2):
        raise InvalidInputError("n must be 1 or 2")
    if m < 0 or ctx.p ** (n - 1) * (ctx.p - 1) * m > ctx.v_p:
        raise InvalidInputError(
            "integrality condition fails: p^(n-1)(p-1)m = %d > v(p) = %d"
            % (ctx.p ** (n - 1) * (ctx.p - 1) * m, ctx.v_p))
    return ModelGroup(ctx, "G", m, n)


def special_fiber_kind(g: ModelGroup) -> str:
    ctx = g.ctx
    if g.m == 0:
        return "MuType"
    w = ctx.p ** (g.n - 1) * (ctx.p - 1) * g.m
    return "AlphaType" if w < ctx.v_p else "AlphaCrossEtale"


def glam_ring(ctx, m, n, name="T"):
    N = ctx.p ** n
    return ctx.R.extend(name, _rel_coeffs(ctx, ctx.R, N, m))


def _glam_hopf(g: ModelGroup) -> HopfData:
    ctx = g.ctx
    N = ctx.p ** g.n
    H = glam_ring(ctx, g.m, g.n)
    HH = H.tensor(H)
    T = H.gen("T")
    Ta, Tb = HH.gen("T"), HH.gen("T'")
    comul = [Ta + Tb + (Ta * Tb).shift_pi(g.m)]
    antipode = [-(T * (1 + T.shift_pi(g.m)) ** (N - 1))]
    coeffs = _rel_coeffs(ctx, ctx.R, N, g.m)

    def relations(ring, vals):
        x = vals[0]
        acc = x ** N
        for k in range(1, N):
            acc = acc - x ** k * ring.embed(coeffs[k], [])
        return [acc]

    return HopfData(H, HH, ["T"], comul, [ctx.R.zero()], antipode, relations)


# Phi and Phi^1 -------------------------------------------------------------------------
def _check_mn(ctx, m, n):
    if not (ctx.v_lambda1 >= m >= n >= 0):
        raise InvalidInputError("need v(lambda_1) = %d >= m >= n >= 0, got m=%d n=%d"
                                % (ctx.v_lambda1, m, n))


def phi_membership(ctx, m: int, n: int, a: Elt, j: int) -> bool:
    """p a - j pi^m == (p / pi^(m(p-1))) a^p  mod pi^(np)."""
    _check_mn(ctx, m, n)
    p = ctx.p
    a = lift_class(ctx, a, n) if n else ctx.R.zero()
    try:
        c = ctx.R.const(p).div_pi(m * (p - 1))
    except InexactDivisionError as exc:  # pragma: no cover - excluded by _check_mn
        raise InvalidInputError(str(exc))
    lhs = a * p - ctx.R.pi_power(m) * (j % p)
    rhs = c * a ** p
    return (lhs - rhs).divisible_by_pi(n * p)


def phi1_canonical(ctx, m: int, n: int):
    """Canonical element of Phi^1_{pi^m,pi^n}, or None if that set is empty."""
    _check_mn(ctx, m, n)
    p = ctx.p
    if m < p * n:
        if p * m - n < ctx.v_p:
            return None
        return ctx.eta_pi.shift_pi(m).div_pi(ctx.v_lambda1).reduce_prec(ctx.N0)
    return ctx.R.zero(ctx.N0)


def phi1_membership(ctx, m: int, n: int, a: Elt) -> bool:
    """Both valuation bounds of the classification of Phi^1."""
    _check_mn(ctx, m, n)
    p = ctx.p
    a = lift_class(ctx, a, n) if n else ctx.R.zero()
    if m < p * n:
        base = phi1_canonical(ctx, m, n)
        if base is None:
            return False
        b = a - base
    else:
        b = a
    v = min(b.valuation(), n)
    return p * v >= max(p * n + (p - 1) * m - ctx.v_p, n)


# extensions ---------------------------------------------------------------------------
def mk_extension(ctx, m: int, n: int, a, j: int) -> ModelGroup:
    _check_mn(ctx, m, n)
    if isinstance(a, int):
        a = ctx.R.const(a)
    if isinstance(a, str):
        from .textio import parse_in
        a = parse_in(a, ctx.R)
    j = j % ctx.p
    if n and not a.divisible_by_pi(1):
        raise InvalidInputError("a must lie in pi R")
    a = lift_class(ctx, a, n) if n else ctx.R.zero()
    if not phi_membership(ctx, m, n, a, j):
        raise InvalidInputError("(a, j) is not in Phi_{pi^%d,pi^%d}" % (m, n))
    if j == 1 and not phi1_membership(ctx, m, n, a):
        raise InvalidInputError("a is not in Phi^1_{pi^%d,pi^%d}" % (m, n))
    g = ModelGroup(ctx, "E", m, n, a, j)
    try:
        g.hopf()
    except InexactDivisionError as exc:
        raise InvalidInputError("presentation is not integral: %s" % exc)
    return g


def ext_ring(ctx, m, n, a, j, names=("S1", "S2")):
    """R[S1,S2]/(rel1, rel2) together with F(S1) = E_p(a S1)."""
    p = ctx.p
    H1 = ctx.R.extend(names[0], _rel_coeffs(ctx, ctx.R, p, m))
    S1 = H1.gen(names[0])
    F = ep_eval(ep_coeffs(a), S1)
    xj = (1 + S1.shift_pi(m)) ** j
    const = (F ** p - xj).div_pi(p * n)
    coeffs = [-const]
    for k in range(1, p):
        c = ctx.R.const(-comb(p, k)).div_pi(n * (p - k))
        coeffs.append(F ** (p - k) * c)
    return H1, H1.extend(names[1], coeffs)


def _ext_hopf(g: ModelGroup) -> HopfData:
    ctx = g.ctx
    p, m, n, j = ctx.p, g.m, g.n, g.j
    _, H = ext_ring(ctx, m, n, g.a, j)
    HH = H.tensor(H)
    Fc = ep_coeffs(g.a)
    S1, S2 = H.gen("S1"), H.gen("S2")
    A1, A2, B1, B2 = HH.gen("S1"), HH.gen("S2"), HH.gen("S1'"), HH.gen("S2'")
    FA, FB = ep_eval(Fc, A1), ep_eval(Fc, B1)
    d1 = A1 + B1 + (A1 * B1).shift_pi(m)
    d2 = A2 * FB + FA * B2 + (A2 * B2).shift_pi(n) + (FA * FB - ep_eval(Fc, d1)).div_pi(n)
    x = 1 + S1.shift_pi(m)
    s1 = -(S1 * x ** (p - 1))
    u = ep_eval(Fc, S1) + S2.shift_pi(n)
    uinv = u ** (p - 1) * x ** ((p - 1) * j)
    s2 = (uinv - ep_eval(Fc, s1)).div_pi(n)

    def relations(ring, vals):
        v1, v2 = vals
        xv = 1 + v1.shift_pi(m)
        uv = ep_eval(Fc, v1) + v2.shift_pi(n)
        return [xv ** p - 1, uv ** p * xv ** ((p - 1) * j) - 1]

    zero = ctx.R.zero()
    return HopfData(H, HH, ["S1", "S2"], [d1, d2], [zero, zero], [s1, s2], relations)


# Hopf axioms ------------------------------------------------------------------------------
def _first_bad(arr, prec, ctx):
    bad = np.argwhere((arr % ctx.colmod[prec]).any(axis=-1))
    return tuple(int(i) for i in bad[0]) if len(bad) else None


def hopf_axioms(g: ModelGroup) -> HopfReport:
    hd = g.hopf()
    ctx = g.ctx
    H, HH = hd.ring, hd.tensor
    rank = hd.rank
    e = ctx.e
    half = H.ndim
    failures = []
    # comultiplication of every basis monomial, as elements of H (x) H
    D = _monomial_images(H, hd.comul, HH)
    keys = sorted(D)
    Darr = np.stack([D[k].arr.reshape(rank * rank, e) for k in keys])
    eps_mono = _monomial_images(H, [ctx.R.embed(c, []) if c.ring.ndim else c for c in hd.counit], ctx.R)
    prec = min(min(d.prec for d in D.values()), min(c.prec for c in hd.comul))
    coassoc = counit_ok = antipode_ok = True
    for gi, w in enumerate(hd.comul):
        W = w.arr.reshape(rank, rank, e)
        left = np.zeros((rank * rank, rank, e), dtype=np.int64)
        right = np.zeros((rank, rank * rank, e), dtype=np.int64)
        for I in range(rank):
            for J in range(rank):
                c = W[I, J]
                if not c.any():
                    continue
                cc = c.reshape(1, e)
                left[:, J] = (left[:, J] + conv(cc, Darr[I], ctx.red, ctx.q)) % ctx.q
                right[I] = (right[I] + conv(cc, Darr[J], ctx.red, ctx.q)) % ctx.q
        diff = (left.reshape(rank, rank, rank, e) - right.reshape(rank, rank, rank, e)) % ctx.q
        pr = min(prec, w.prec)
        bad = _first_bad(diff, pr, ctx)
        if bad is not None:
            coassoc = False
            failures.append("coassociativity on %s at monomial %s" % (hd.gens[gi], bad))
        # counit laws
        x = H.gen(hd.gens[gi], pr)
        for side in (0, 1):
            acc = H.zero(pr)
            for idx, ev in eps_mono.items():
                flat = int(np.ravel_multi_index(idx, H.shape))
                sl = W[flat] if side == 0 else W[:, flat]
                part = Elt(H, sl.reshape(H.shape + (e,)).copy(), pr)
                acc = acc + scalar_mul(ev, part)
            if not (acc - x).is_zero():
                counit_ok = False
                failures.append("counit (%s side) on %s" % ("left" if side == 0 else "right", hd.gens[gi]))
        # antipode laws
        S = _monomial_images(H, hd.antipode, H)
        target = H.const(0, pr) + hd.counit[gi]
        accl = H.zero(pr)
        accr = H.zero(pr)
        for idx, sx in S.items():
            flat = int(np.ravel_multi_index(idx, H.shape)) if H.shape else 0
            rowl = Elt(H, W[flat].reshape(H.shape + (e,)).copy(), pr)
            rowr = Elt(H, W[:, flat].reshape(H.shape + (e,)).copy(), pr)
            accl = accl + sx * rowl
            accr = accr + rowr * sx
        for name, acc in (("left", accl), ("right", accr)):
            d = acc - target
            if not d.is_zero():
                antipode_ok = False
                failures.append("antipode (%s) on %s, residual valuation %d" % (name, hd.gens[gi], d.valuation()))
    closure = True
    for label, ring, vals in (("comultiplication", HH, hd.comul),
                              ("antipode", H, hd.antipode)):
        for k, r in enumerate(hd.relations(ring, vals)):
            if not r.is_zero():
                closure = False
                failures.append("closure: relation %d under %s, residual valuation %d" % (k, label, r.valuation()))
    for k, r in enumerate(hd.relations(ctx.R, list(hd.counit))):
        if not r.is_zero():
            closure = False
            failures.append("closure: relation %d under counit" % k)
    return HopfReport(coassoc, counit_ok, antipode_ok, closure, prec, failures)


# homomorphisms between G_{lambda,n} ---------------------------------------------------------
@dataclass
class ModelMap:
    source: ModelGroup
    target: ModelGroup
    r: int
    s: int
    images: list  # images of the target generators in the source ring
    is_isomorphism: bool

    def as_dict(self):
        from .textio import format_elt
        return {"source": self.source.literal(), "target": self.target.literal(),
                "r": self.r, "s": self.s, "isomorphism": self.is_isomorphism,
                "images": [format_elt(x) for x in self.images]}


def hom_r(ctx, m1: int, m2: int, n: int) -> int:
    for r in range(n + 1):
        if ctx.p ** r * m1 >= m2:
            return r
    return n


def hom_group(g1: ModelGroup, g2: ModelGroup):
    """(order, generator) of Hom(G_{pi^m,n}, G_{pi^m',n})."""
    if g1.kind != "G" or g2.kind != "G" or g1.n != g2.n:
        raise InvalidInputError("hom_group needs two G(m,n) with the same n")
    ctx = g1.ctx
    p, n = ctx.p, g1.n
    r = hom_r(ctx, g1.m, g2.m, n)
    H = g1.hopf().ring
    T = H.gen("T")
    img = ((1 + T.shift_pi(g1.m)) ** (p ** r) - 1).div_pi(g2.m)
    gen = ModelMap(g1, g2, p ** r, 0, [img], g1.m == g2.m)
    return p ** (n - r), gen


def is_hopf_morphism(src: ModelGroup, tgt: ModelGroup, images) -> bool:
    """Ring map defined by ``images`` respects the relations and comultiplication."""
    hs, ht = src.hopf(), tgt.hopf()
    for r in ht.relations(hs.ring, images):
        if not r.is_zero():
            return False
    HH = hs.tensor
    half = hs.ring.ndim
    left = [substitute(x, hs.comul, HH) for x in images]
    emb1 = [HH.embed(x, list(range(half))) for x in images]
    emb2 = [HH.embed(x, list(range(half, 2 * half))) for x in images]
    for k, w in enumerate(ht.comul):
        right = substitute(w, emb1 + emb2, HH)
        if not (left[k] - right).is_zero():
            return False
    return True


def hom_brute_force(g1: ModelGroup, g2: ModelGroup) -> int:
    """Count k < p^n for which T -> ((1+lambda T)^k - 1)/lambda' is an integral Hopf map."""
    ctx = g1.ctx
    n = g1.n
    H = g1.hopf().ring
    T = H.gen("T")
    x = 1 + T.shift_pi(g1.m)
    count = 0
    power = H.one()
    for k in range(ctx.p ** n):
        if k:
            power = power * x
        try:
            img = (power - 1).div_pi(g2.m)
        except InexactDivisionError:
            continue
        if is_hopf_morphism(g1, g2, [img]):
            count += 1
    return count


# model maps between extensions ----------------------------------------------------------------
def _ext_map_images(g1, g2, r, s):
    ctx = g1.ctx
    H = g1.hopf().ring
    S1, S2 = H.gen("S1"), H.gen("S2")
    x = 1 + S1.shift_pi(g1.m)
    i1 = (x ** r - 1).div_pi(g2.m)
    F1 = ep_eval(ep_coeffs(g1.a), S1)
    F2 = ep_eval(ep_coeffs(g2.a), i1)
    i2 = ((F1 + S2.shift_pi(g1.n)) ** r * x ** s - F2).div_pi(g2.n)
    return [i1, i2]


def model_map(g1: ModelGroup, g2: ModelGroup):
    """The r = 1 model map g1 -> g2 between models of Z/p^2, or None."""
    if g1.kind != "E" or g2.kind != "E" or g1.j != 1 or g2.j != 1:
        raise InvalidInputError("model maps are defined between E(m,n,a,1) groups")
    ctx = g1.ctx
    if g1.m < g2.m or g1.n < g2.n:
        return None
    lhs = g1.a - (g2.a.shift_pi(g1.m - g2.m))
    if not lhs.divisible_by_pi(g2.n):
        return None
    for s in range(ctx.p):
        try:
            images = _ext_map_images(g1, g2, 1, s)
        except InexactDivisionError:
            continue
        iso = g1.m == g2.m and g1.n == g2.n
        return ModelMap(g1, g2, 1, s, images, iso)
    raise InvariantError("congruence holds but no integral model map was found")


def enumerate_model_maps(g1: ModelGroup, g2: ModelGroup):
    """All (r, s) whose defining expressions are integral Hopf maps."""
    ctx = g1.ctx
    out = []
    for r in range(1, ctx.p):
        for s in range(ctx.p):
            try:
                images = _ext_map_images(g1, g2, r, s)
            except InexactDivisionError:
                continue
            if is_hopf_morphism(g1, g2, images):
                out.append(ModelMap(g1, g2, r, s, images, g1.m == g2.m and g1.n == g2.n))
    return out


def map_matrix_residue(g1: ModelGroup, g2: ModelGroup, images):
    """F_p matrix of the ring map on residue bases (invertible iff the map is an isomorphism)."""
    H1 = g1.hopf().ring
    H2 = g2.hopf().ring
    monos = _monomial_images(H2, images, H1)
    cols = [monos[k].residue().ravel() for k in sorted(monos)]
    return np.array(cols, dtype=np.int64).T % g1.ctx.p


# torsors ---------------------------------------------------------------------------------------
@dataclass
class TorsorPresentation:
    group: ModelGroup
    f1: Elt
    f2: Elt
    ring: Tower  # A[T1, T2] / (rel1, rel2)
    kummer: Elt  # f in A with Y_K = Spec A_K[y]/(y^(p^2) - f)

    def coaction(self):
        """Images of T1, T2 in H (x) Y, and the ring H (x) Y."""
        g = self.group
        ctx = g.ctx
        hd = g.hopf()
        HY = hd.ring.tensor(self.ring, suffix="")
        Fc = ep_coeffs(g.a)
        S1, S2 = HY.gen("S1"), HY.gen("S2")
        T1, T2 = HY.gen("T1"), HY.gen("T2")
        t1 = S1 + T1 + (S1 * T1).shift_pi(g.m)
        FS, FT = ep_eval(Fc, S1), ep_eval(Fc, T1)
        t2 = S2 * FT + FS * T2 + (S2 * T2).shift_pi(g.n) + (FS * FT - ep_eval(Fc, t1)).div_pi(g.n)
        return HY, [t1, t2]

    def coaction_residuals(self):
        """Relations of Y evaluated on the co-action images (all must vanish)."""
        g = self.group
        ctx = g.ctx
        p, m, n, j = ctx.p, g.m, g.n, g.j
        HY, (t1, t2) = self.coaction()
        nz = len(self.f1.ring.axes)
        pos = list(range(g.hopf().ring.ndim, g.hopf().ring.ndim + nz))
        f1 = HY.embed(self.f1, pos)
        f2 = HY.embed(self.f2, pos)
        Fc = ep_coeffs(g.a)
        Gc = ep_coeffs(g.a ** p)
        x = 1 + t1.shift_pi(m)
        y = ep_eval(Fc, t1) + t2.shift_pi(n)
        r1 = x ** p - (1 + f1.shift_pi(p * m))
        r2 = y ** p - x ** j * (ep_eval(Gc, f1) + f2.shift_pi(p * n))
        return [r1, r2]


def torsor_equations(g: ModelGroup, base, f1: Elt, f2: Elt) -> TorsorPresentation:
    """Presentation of the E-torsor Y over A defined by (f1, f2)."""
    if g.kind != "E":
        raise InvalidInputError("torsor_equations needs an extension group")
    ctx = g.ctx
    p, m, n, j = ctx.p, g.m, g.n, g.j
    A = base.tower
    one_f1 = 1 + f1.shift_pi(p * m)
    Gc = ep_coeffs(g.a ** p)
    Gf1 = ep_eval(Gc, f1)
    unit2 = Gf1 + f2.shift_pi(p * n)
    if not base.is_unit(one_f1) or not base.is_unit(unit2):
        raise InvalidInputError("torsor data must give units 1 + pi^(pm) f1 and G(f1) + pi^(pn) f2")
    coeffs1 = [f1] + [A.embed(c, []) for c in
                      (ctx.R.const(-comb(p, k)).div_pi(m * (p - k)) for k in range(1, p))]
    Y1 = A.extend("T1", coeffs1)
    T1 = Y1.gen("T1")
    F = ep_eval(ep_coeffs(g.a), T1)
    x = 1 + T1.shift_pi(m)
    xj = x ** j
    lift = list(range(A.ndim))
    Gf1_y = Y1.embed(Gf1, lift)
    f2_y = Y1.embed(f2, lift)
    try:
        const = (F ** p - xj * Gf1_y).div_pi(p * n) - xj * f2_y
    except InexactDivisionError as exc:
        raise InvalidInputError("torsor equation is not integral: %s" % exc)
    coeffs2 = [-const]
    for k in range(1, p):
        c = ctx.R.const(-comb(p, k)).div_pi(n * (p - k))
        coeffs2.append(F ** (p - k) * c)
    Y = Y1.extend("T2", coeffs2)
    kummer = one_f1 ** j * unit2 ** p
    return TorsorPresentation(g, f1, f2, Y, kummer)
