"""Degeneration type (j, gamma1, gamma2, kappa) of a cyclic p^2-cover and its effective model."""
from dataclasses import dataclass, field
from math import comb

from .base import BaseRing, QuotientB1, residue_pth_power_test
from .errors import (HypothesisError, InvalidInputError, InvariantError,
                     KummerError, NotAUnitError)
from .groups import ModelGroup, mk_extension, mk_glam_n
from .textio import format_elt
from .tower import Elt


@dataclass
class LevelResult:
    level: int
    g: Elt
    f0: Elt


@dataclass
class AnalysisReport:
    degen: tuple
    g: Elt
    f1: Elt
    H: Elt
    alpha: Elt
    model: ModelGroup
    strongly_extendible: bool
    differents: tuple
    f: Elt
    base: BaseRing
    B1: QuotientB1 = field(repr=False, default=None)

    @property
    def j(self):
        return self.degen[0]

    @property
    def gamma1(self):
        return self.degen[1]

    @property
    def gamma2(self):
        return self.degen[2]

    @property
    def kappa(self):
        return self.degen[3]

    def as_dict(self):
        j, g1, g2, k = self.degen
        return {"j": j, "gamma1": g1, "gamma2": g2, "kappa": k,
                "alpha": format_elt(self.alpha.reduce_prec(g2)),
                "model": self.model.literal(),
                "extendible": self.strongly_extendible,
                "differents": list(self.differents),
                "witnesses": {"g": format_elt(self.g.reduce_prec(g1)),
                              "f1": format_elt(self.f1.reduce_prec(1)),
                              "H": format_elt(self.H.reduce_prec(g2))}}


def prepare_cover(f: Elt, base: BaseRing) -> Elt:
    """Strip the pi-power of f; the rest must be a unit and the power a multiple of p^2."""
    ctx = base.ctx
    if f.ring is not base.tower:
        raise InvalidInputError("cover generator must be an element of the base ring")
    v = f.valuation()
    if v >= f.prec:
        raise InvalidInputError("cover generator is zero to working precision")
    if v % (ctx.p ** 2):
        raise HypothesisError(
            "pi-valuation %d of f is not divisible by p^2: the torsor is not weakly "
            "extendible with reduced special fiber" % v)
    u = f.div_pi(v) if v else f
    if not base.is_unit(u):
        raise NotAUnitError("f / pi^%d is not a unit of A" % v)
    return u


def compute_level(f: Elt, n: int) -> LevelResult:
    """Largest c <= v(lambda_(n)) with f g^(p^n) = 1 + pi^(c p^n) f0, plus g and f0."""
    ring = f.ring
    ctx = ring.ctx
    p = ctx.p
    ppn = p ** n
    cap = ctx.v_lambda(n)
    g = ring.one()
    w = f
    c = 0
    while True:
        f0 = (w - 1).div_pi(c * ppn)
        if c == cap:
            return LevelResult(c, g, f0)
        r = residue_pth_power_test(f0, n)
        if r is None:
            return LevelResult(c, g, f0)
        if r.arr.any():
            hinv = (1 + r.shift_pi(c)).inv()
            g = g * hinv
            w = w * hinv ** ppn
            f0 = (w - 1).div_pi(c * ppn)
        if not f0.divisible_by_pi(ppn):
            raise HypothesisError(
                "level %d: f0 vanishes mod pi but not mod pi^%d; the special fiber "
                "is not reduced" % (c, ppn))
        c += 1


def solve_threshold(B: QuotientB1, H: Elt, gamma1: int, gamma2: int, j: int):
    """(kappa, alpha): least m >= gamma1 with a H == pi^(m - gamma1) H' mod pi^gamma2, a in pi R."""
    ctx = B.ctx
    if gamma2 == 0:
        return gamma1, ctx.R.zero(ctx.N0)
    Q0 = B.derivative(H) * H.inv()
    origin = (0,) * B.tower.ndim
    for m in range(gamma1, gamma1 + gamma2 - j + 1):
        Q = Q0.shift_pi(m - gamma1).reduce_prec(gamma2)
        c = Q.coeff(origin)
        rest = Q - B.tower.embed(c, [])
        if not rest.is_zero():
            continue
        if not c.divisible_by_pi(1):
            continue
        return m, Elt(ctx.R, c.arr.copy(), ctx.N0)._normalized()
    raise InvariantError("no threshold found up to gamma1 + gamma2 - j")


def _differents(ctx, g1, g2):
    return (ctx.v_p - (ctx.p - 1) * g1, ctx.v_p - (ctx.p - 1) * g2)


def analyze(f: Elt, base: BaseRing, check=True) -> AnalysisReport:
    ctx = base.ctx
    p = ctx.p
    if base.is_point:
        raise HypothesisError("a point base admits no p^2-cover with integral special fiber")
    f = prepare_cover(f, base)
    # (1) level of the p^2-cover
    lv2 = compute_level(f, 2)
    j = lv2.level
    f = f * lv2.g ** (p * p)
    # (2) first p-subcover: f g^(-p) = 1 + pi^(p gamma1) f1
    lv1 = compute_level(f, 1)
    gamma1 = lv1.level
    g = lv1.g.inv()
    g0 = (g - 1).div_pi(p * j)
    if p * j == gamma1 and g0.divisible_by_pi(1):
        g = g * (1 + base.pi(p * j))
    f1 = (f * g ** (-p) - 1).div_pi(p * gamma1)
    # (3) second p-subcover over B1
    B = QuotientB1(base, gamma1, f1)
    x = B.lift(g) * B.unit_u()
    lvB = compute_level(x, 1)
    gamma2 = lvB.level
    H = lvB.g.inv()
    if j > 0:
        a0 = B.coeff_T(H, 0)
        a0inv = a0.inv()
        f = f * a0inv ** (p * p)
        g = g * a0inv ** p
        H = H * B.lift(a0inv)
    # (4) effective threshold
    kappa, alpha = solve_threshold(B, H, gamma1, gamma2, j)
    degen = (j, gamma1, gamma2, kappa)
    try:
        model = mk_extension(ctx, kappa, gamma2, alpha, 1)
    except KummerError as exc:
        raise InvariantError("effective model E(%d,%d,...,1) rejected: %s" % (kappa, gamma2, exc))
    report = AnalysisReport(degen, g, f1, H, alpha, model, kappa == gamma1,
                            _differents(ctx, gamma1, gamma2), f, base, B)
    if check:
        check_report(report)
    return report


def check_report(rep: AnalysisReport):
    """Assert the structural invariants of a degeneration type and its witnesses."""
    from .degen import is_admissible

    ctx = rep.base.ctx
    p = ctx.p
    j, g1, g2, k = rep.degen
    vl1 = ctx.v_lambda1
    problems = []
    if not (p * j <= g1 <= vl1):
        problems.append("p j <= gamma1 <= v(lambda1)")
    if not (j <= g2 <= vl1):
        problems.append("j <= gamma2 <= v(lambda1)")
    if not (g1 <= k <= g1 + g2 - j):
        problems.append("gamma1 <= kappa <= gamma1 + gamma2 - j")
    a = rep.alpha.reduce_prec(g2)
    va = a.valuation()
    if not (va == k - g1 + j or (va >= g2 and k - g1 + j == g2)):
        problems.append("alpha valuation clause (v = %d)" % va)
    if rep.strongly_extendible != (k == g1):
        problems.append("extendibility verdict")
    ok, reason = is_admissible(rep.degen, ctx)
    if not ok:
        problems.append("admissibility: %s" % reason)
    if problems:
        raise InvariantError("report %s violates: %s" % (rep.degen, "; ".join(problems)))


@dataclass
class ZpReport:
    gamma: int
    model: ModelGroup
    different: int
    different_direct: int
    g: Elt
    f0: Elt

    def as_dict(self):
        return {"gamma": self.gamma, "model": self.model.literal(),
                "different": self.different, "different_direct": self.different_direct}


def relation_derivative(B: QuotientB1) -> Elt:
    """d/dT of ((1 + pi^g T)^p - 1)/pi^(p g) as an element of B1."""
    ctx = B.ctx
    p, gm = ctx.p, B.gamma1
    T = B.T()
    acc = B.tower.zero()
    for k in range(1, p + 1):
        c = ctx.R.const(k * comb(p, k)).div_pi(gm * (p - k))
        acc = acc + T ** (k - 1) * B.tower.embed(c, [])
    return acc


def analyze_zp(f: Elt, base: BaseRing) -> ZpReport:
    """Degree-p cover T^p = f: level gamma, model G(gamma,1), different valuation."""
    ctx = base.ctx
    f = prepare_cover(f, base) if not base.is_point else f
    if base.is_point and not base.is_unit(f):
        raise NotAUnitError("f is not a unit")
    lv = compute_level(f, 1)
    gamma = lv.level
    model = mk_glam_n(ctx, gamma, 1)
    different = ctx.v_p - (ctx.p - 1) * gamma
    B = QuotientB1(base, gamma, lv.f0)
    direct = relation_derivative(B).valuation()
    if direct != different:
        raise InvariantError("different mismatch: %d vs %d" % (direct, different))
    return ZpReport(gamma, model, different, direct, lv.g, lv.f0)
