"""Admissible degeneration types, their enumeration and explicit realization."""
from dataclasses import dataclass
from itertools import product

from .analysis import AnalysisReport, analyze
from .base import BaseRing, QuotientB1, residue_pth_power_test, subring_nontriviality
from .errors import HypothesisError, InvalidInputError, InvariantError, KummerError
from .groups import (ModelGroup, TorsorPresentation, ep_coeffs, ep_eval, mk_extension,
                     phi1_canonical, phi1_membership, torsor_equations)
from .textio import format_elt
from .tower import Elt

TORSOR = "torsor"


def is_admissible(t, ctx):
    """(ok, reason); reason names the first failing clause."""
    j, g1, g2, k = t
    p = ctx.p
    if min(t) < 0:
        return False, "negative entry"
    if not (max(g1, g2) <= k <= ctx.v_lambda1):
        return False, "i) max(gamma1, gamma2) <= kappa <= v(lambda1)"
    if not (g2 <= p * (k - g1 + j) <= p * g2):
        return False, "ii) gamma2 <= p(kappa - gamma1 + j) <= p gamma2"
    if k < p * g2:
        if g1 - j != ctx.v_p // p:
            return False, "iii) kappa < p gamma2 forces gamma1 - j = v(p)/p"
    elif not (0 <= p * (g2 - j) <= ctx.v_p - p * g1 + k):
        return False, "iii) 0 <= p(gamma2 - j) <= v(p) - p gamma1 + kappa"
    if p * j > g1:
        return False, "iv) p j <= gamma1"
    return True, "admissible"


def is_torsor_type(t, ctx) -> bool:
    """kappa = gamma1 < v(lambda1): the range covered by the realization construction."""
    return t[3] == t[1] < ctx.v_lambda1


def enumerate_admissible(ctx, filter=None):
    if filter not in (None, TORSOR):
        raise InvalidInputError("unknown filter %r" % filter)
    top = ctx.v_lambda1
    out = []
    for t in product(range(top + 1), repeat=4):
        if not is_admissible(t, ctx)[0]:
            continue
        if filter == TORSOR and not is_torsor_type(t, ctx):
            continue
        out.append(t)
    return out


# realization ----------------------------------------------------------------------
@dataclass
class Realization:
    degen: tuple
    f: Elt
    presentation: TorsorPresentation | None
    report: AnalysisReport
    f2: Elt | None = None

    def as_dict(self):
        d = {"type": list(self.degen), "f": format_elt(self.f),
             "model": self.report.model.literal(),
             "extendible": self.report.strongly_extendible}
        if self.presentation is not None:
            d["group"] = self.presentation.group.literal()
            d["f1"] = format_elt(self.presentation.f1)
            d["f2"] = format_elt(self.presentation.f2)
        return d


def default_f1(base: BaseRing) -> Elt:
    """1 + Z^2, checked to be neither a p-th power mod pi nor to span all of A_k."""
    if base.is_point:
        raise HypothesisError("realization needs the local curve base")
    f1 = base.parse("1 + Z^2")
    if residue_pth_power_test(f1, 1) is not None:
        raise HypothesisError("f1 = 1 + Z^2 is a p-th power mod pi")
    if subring_nontriviality(f1, base) is None:
        raise HypothesisError("A_k = A_k^p[f1]; no f3 available")
    return f1


def second_step_residue(g: ModelGroup, base: BaseRing, f1: Elt) -> Elt:
    """P(T1) = (E_p(aT1)^(-p) (1 + pi^m T1) E_p(a^p f1) - 1)/pi^(pn) in B1."""
    ctx = g.ctx
    p = ctx.p
    B = QuotientB1(base, g.m, f1)
    F = ep_eval(ep_coeffs(g.a), B.T())
    G = B.lift(ep_eval(ep_coeffs(g.a ** p), f1))
    return (F ** (-p) * B.unit_u() * G - 1).div_pi(p * g.n)


def torsor_fixture(g: ModelGroup, base: BaseRing, f1: Elt) -> TorsorPresentation:
    """E-torsor with f2 chosen so that the special fiber stays integral."""
    P = second_step_residue(g, base, f1)
    f2 = base.const(0)
    if residue_pth_power_test(P, 1) is not None:
        f2 = subring_nontriviality(f1, base)
    return torsor_equations(g, base, f1, f2)


def realization_alpha(t, ctx) -> Elt:
    j, g1, g2, _ = t
    p = ctx.p
    if g1 == ctx.v_lambda1:
        # etale first step: the class is forced, cases (ii) and (iii)
        return phi1_canonical(ctx, g1, g2)
    if g1 < p * g2:
        a = phi1_canonical(ctx, g1, g2)
        if a is None:
            raise InvariantError("Phi^1 empty for admissible %s" % (t,))
        return a
    a = ctx.R.zero() if j == g2 else ctx.pi(j)
    if not phi1_membership(ctx, g1, g2, a):
        raise InvariantError("alpha = pi^%d fails the Phi^1 bound for %s" % (j, t))
    return a


def realize(t, base: BaseRing) -> Realization:
    ctx = base.ctx
    t = tuple(int(x) for x in t)
    ok, reason = is_admissible(t, ctx)
    if not ok:
        raise InvalidInputError("%s is not admissible: %s" % (t, reason))
    edge = t[3] == t[1] == ctx.v_lambda1
    if not (is_torsor_type(t, ctx) or edge):
        raise InvalidInputError("realize needs kappa = gamma1; got %s" % (t,))
    if edge and necessary_conditions(t, ctx) is not None:
        raise InvalidInputError("%s is not realizable: %s" % (t, necessary_conditions(t, ctx)))
    f1 = default_f1(base)
    j, g1, g2, _ = t
    if g1 == 0:
        pres = None
        f2 = None
        f = f1
    else:
        g = mk_extension(ctx, g1, g2, realization_alpha(t, ctx), 1)
        pres = torsor_fixture(g, base, f1)
        f = pres.kummer
        f2 = pres.f2
    rep = analyze(f, base)
    if rep.degen != t:
        raise InvariantError("round trip: realized %s but analysis gives %s" % (t, rep.degen))
    return Realization(t, f, pres, rep, f2)


def nonextendible_example(base: BaseRing, gamma1: int, gamma2: int) -> Elt:
    """(1 + pi^(p g1)(1 + Z^2)) (1 + Z^2 + pi^(p g2) Z)^p, expected type (0, g1, g2, g1 + g2)."""
    ctx = base.ctx
    p = ctx.p
    if not (ctx.v_p > p * gamma1 > p * p * gamma2 > 0):
        raise InvalidInputError("need v(p) > p gamma1 > p^2 gamma2 > 0")
    f1 = default_f1(base)
    g = f1 + base.Z().shift_pi(p * gamma2)
    return (1 + f1.shift_pi(p * gamma1)) * g ** p


def example_family(ctx):
    p = ctx.p
    return [(g1, g2) for g1 in range(ctx.v_lambda1 + 1) for g2 in range(1, ctx.v_lambda1 + 1)
            if ctx.v_p > p * g1 > p * p * g2]


# special cases --------------------------------------------------------------------
@dataclass
class CaseResult:
    case: str
    passed: bool
    checked: int
    detail: str = ""

    def as_dict(self):
        return {"case": self.case, "passed": self.passed, "checked": self.checked,
                "detail": self.detail}


def glam2_fixture(base: BaseRing, j: int) -> Elt:
    """Kummer generator of a G_{pi^j,2}-torsor: 1 + pi^(p^2 j)(1 + Z^2)."""
    return 1 + default_f1(base).shift_pi(base.ctx.p ** 2 * j)


def case_ii_fixture(base: BaseRing, gamma2: int) -> TorsorPresentation:
    """Torsor under E(v(lambda1), gamma2, eta_pi-type class, 1)."""
    ctx = base.ctx
    a = phi1_canonical(ctx, ctx.v_lambda1, gamma2)
    g = mk_extension(ctx, ctx.v_lambda1, gamma2, a, 1)
    return torsor_fixture(g, base, default_f1(base))


def necessary_conditions(t, ctx):
    """First necessary condition for realizability that t violates, or None."""
    j, g1, g2, k = t
    p, vl1, vl2 = ctx.p, ctx.v_lambda1, ctx.v_lambda2
    if j < vl2 and p * j == g1 and t != (j, p * j, j, p * j):
        return "(i) p j = gamma1 with j < v(lambda2) forces (j, pj, j, pj)"
    if j == vl2 and not (g1 == k == vl1 and g2 >= vl2):
        return "(ii) j = v(lambda2) forces (v(lambda2), v(lambda1), gamma2, v(lambda1))"
    if g2 == j and not (k == g1 and g1 >= p * g2):
        return "(iii) gamma2 = j forces (gamma2, gamma1, gamma2, gamma1) with gamma1 >= p gamma2"
    if j == 0 and (k == g1) != (g2 == 0):
        return "(iv) j = 0: extendible iff gamma2 = 0"
    if g2 == vl1 and t != (vl2, vl1, vl1, vl1):
        return "(v) gamma2 = v(lambda1) forces (v(lambda2), v(lambda1), v(lambda1), v(lambda1))"
    if g1 == vl1 and j != min(g2, vl2):
        return "(vi) gamma1 = v(lambda1) forces j = min(gamma2, v(lambda2))"
    return None


def special_case_suite(ctx, base: BaseRing | None = None, realize_all=True):
    from .base import mk_curve

    base = base or mk_curve(ctx)
    p, vl1, vl2 = ctx.p, ctx.v_lambda1, ctx.v_lambda2
    results = []

    def run(name, fn):
        try:
            n, detail = fn()
            results.append(CaseResult(name, True, n, detail))
        except (KummerError, AssertionError) as exc:
            results.append(CaseResult(name, False, 0, str(exc)))

    torsor_types = enumerate_admissible(ctx, TORSOR) if realize_all else []
    realized = {t: realize(t, base).report for t in torsor_types}

    def case_i():
        n = 0
        for j in range(vl2):
            rep = analyze(glam2_fixture(base, j), base)
            assert rep.degen == (j, p * j, j, p * j), rep.degen
            n += 1
        for t, rep in realized.items():
            if t[0] < vl2:
                assert (p * t[0] == t[1]) == (t == (t[0], p * t[0], t[0], p * t[0])), t
                assert (t[1] == 0) == rep.model.is_mu(), t
                n += 1
        return n, "G_{pi^j,2} fixtures for j < %d" % vl2

    def case_ii():
        n = 0
        for g2 in range(vl2, vl1 + 1):
            rep = analyze(case_ii_fixture(base, g2).kummer, base)
            assert rep.degen == (vl2, vl1, g2, vl1), (g2, rep.degen)
            n += 1
        for t in realized:
            assert t[0] != vl2, t
        return n, "E(v(lambda1), gamma2, eta_pi, 1) fixtures"

    def case_iii():
        n = 0
        for t, rep in realized.items():
            if t[2] == t[0]:
                assert t[1] >= p * t[2], t
                assert rep.alpha.reduce_prec(t[2]).is_zero(), t
                n += 1
            else:
                assert not rep.alpha.reduce_prec(t[2]).is_zero(), t
        return n, "alpha = 0 exactly when gamma2 = j"

    def case_iv():
        n = 0
        rep = analyze(default_f1(base), base)
        assert rep.degen == (0, 0, 0, 0) and rep.strongly_extendible
        n += 1
        for g1, g2 in example_family(ctx):
            rep = analyze(nonextendible_example(base, g1, g2), base)
            assert rep.degen == (0, g1, g2, g1 + g2), rep.degen
            assert not rep.strongly_extendible
            n += 1
        for t, rep in realized.items():
            if t[0] == 0:
                assert t[2] == 0 and rep.strongly_extendible, t
                n += 1
        return n, "j = 0: extendible iff gamma2 = 0"

    def case_v():
        rep = analyze(case_ii_fixture(base, vl1).kummer, base)
        assert rep.degen == (vl2, vl1, vl1, vl1), rep.degen
        for t in realized:
            assert t[2] != vl1, t
        return 1, "etale Z/p^2 fixture"

    def case_vi():
        n = 0
        for t in enumerate_admissible(ctx):
            if t[1] == vl1 and t[0] != min(t[2], vl2):
                continue  # admissible but excluded by (vi)
            n += 1
        for t, rep in realized.items():
            if t[1] == vl1:
                assert t[0] == min(t[2], vl2), t
        return n, "gamma1 = v(lambda1) implies j = min(gamma2, v(lambda2))"

    for name, fn in (("i", case_i), ("ii", case_ii), ("iii", case_iii), ("iv", case_iv),
                     ("v", case_v), ("vi", case_vi)):
        run(name, fn)
    return results


# atlas ----------------------------------------------------------------------------
@dataclass
class AtlasEntry:
    degen: tuple
    admissible: bool
    realizable: object  # True, False or "unknown"
    model: str | None
    witness_cover: str | None
    reason: str = ""

    def as_dict(self):
        return {"type": list(self.degen), "admissible": self.admissible,
                "realizable": self.realizable, "model": self.model,
                "witness_cover": self.witness_cover, "reason": self.reason}


def atlas(ctx, base: BaseRing | None = None, witnesses=True):
    """One entry per admissible tuple with a realizability verdict."""
    from .base import mk_curve

    base = base or mk_curve(ctx)
    vl1, vl2 = ctx.v_lambda1, ctx.v_lambda2
    fixtures = {}
    if witnesses:
        for g1, g2 in example_family(ctx):
            fixtures[(0, g1, g2, g1 + g2)] = ("non-extendible example family",
                                              nonextendible_example(base, g1, g2))
        for g2 in range(vl2, vl1 + 1):
            fixtures[(vl2, vl1, g2, vl1)] = ("E(v(lambda1), gamma2, eta_pi, 1) fixture",
                                             case_ii_fixture(base, g2).kummer)
    out = []
    for t in enumerate_admissible(ctx):
        entry = AtlasEntry(t, True, "unknown", None, None)
        bad = necessary_conditions(t, ctx)
        if bad is not None:
            entry.realizable, entry.reason = False, bad
        elif t[3] == t[1]:
            entry.realizable = True
            entry.reason = ("kappa = gamma1 < v(lambda1)" if is_torsor_type(t, ctx)
                            else "kappa = gamma1 = v(lambda1), explicit fixture")
            if witnesses:
                r = realize(t, base)
                entry.model, entry.witness_cover = r.report.model.literal(), format_elt(r.f)
        elif t in fixtures:
            reason, f = fixtures[t]
            rep = analyze(f, base)
            if rep.degen != t:
                raise InvariantError("fixture for %s analyzed as %s" % (t, rep.degen))
            entry.realizable, entry.reason = True, reason
            entry.model, entry.witness_cover = rep.model.literal(), format_elt(f)
        else:
            entry.reason = "kappa > gamma1 outside the known families"
        out.append(entry)
    return out
