"""Command-line front end.

Every subcommand writes line-delimited JSON records (``--format json``) or a
short human summary (``--format text``).  Each record carries the context
``{p, d, D, N}`` it was computed in.  Exit status: 0 ok, 2 invalid input,
3 hypothesis violation, 4 precision exhaustion, 5 internal invariant failure.
"""
import json
import sys

import click

from . import analysis, degen, groups
from .base import BaseRing, mk_curve, mk_point
from .errors import InvalidInputError, KummerError, PrecisionError
from .padic import mk_context
from .textio import format_elt, parse_model_literal, parse_type_literal


def parse_element(src: str, ring: BaseRing):
    """Parse an expression in pi and Z into an element of ``ring``."""
    return ring.parse(src)


def model_from_literal(ctx, src: str) -> groups.ModelGroup:
    lit = parse_model_literal(src)
    if lit[0] == "G":
        return groups.mk_glam_n(ctx, lit[1], lit[2])
    _, m, n, a, j = lit
    return groups.mk_extension(ctx, m, n, a, j)


class Session:
    """Context and base ring for one invocation."""

    def __init__(self, p, d, zdeg, prec, base="curve"):
        self.p, self.d, self.zdeg, self.prec, self.base_kind = p, d, zdeg, prec, base
        if zdeg < 2:
            raise InvalidInputError("--zdeg must be >= 2")
        self.ctx = mk_context(p, d, prec)
        self.base = mk_point(self.ctx) if base == "point" else mk_curve(self.ctx, zdeg)

    def context(self):
        c = self.ctx
        return {"p": c.p, "d": c.d, "D": self.base.D, "N": c.N0}

    def doubled(self):
        return Session(self.p, self.d, 2 * self.zdeg, 2 * self.ctx.N0, self.base_kind)


# commands: each returns (records, stable keys compared under --strict) ---------------------
def cmd_analyze(s: Session, f):
    rep = analysis.analyze(parse_element(f, s.base), s.base)
    rec = {"f": f, **rep.as_dict()}
    return [rec], ("j", "gamma1", "gamma2", "kappa", "alpha", "model", "extendible", "differents")


def cmd_analyze_zp(s: Session, f):
    rep = analysis.analyze_zp(parse_element(f, s.base), s.base)
    return [{"f": f, **rep.as_dict()}], ("gamma", "model", "different", "different_direct")


def cmd_enumerate(s: Session, filter):
    out = []
    for t in degen.enumerate_admissible(s.ctx, filter):
        out.append({"type": list(t), "admissible": True,
                    "torsor_range": degen.is_torsor_type(t, s.ctx)})
    return out, ("type", "torsor_range")


def cmd_realize(s: Session, type_):
    r = degen.realize(parse_type_literal(type_), s.base)
    return [r.as_dict()], ("type", "model", "extendible", "group")


def cmd_hopf_check(s: Session, model):
    g = model_from_literal(s.ctx, model)
    rep = groups.hopf_axioms(g)
    rec = {"model": g.literal(), **rep.as_dict()}
    if g.kind == "G":
        rec["special_fiber"] = groups.special_fiber_kind(g)
    return [rec], ("model", "coassociativity", "counit", "antipode", "closure", "ok")


def cmd_hom(s: Session, src, tgt):
    g1, g2 = model_from_literal(s.ctx, src), model_from_literal(s.ctx, tgt)
    if g1.kind == "G" and g2.kind == "G":
        order, gen = groups.hom_group(g1, g2)
        r = groups.hom_r(s.ctx, g1.m, g2.m, g1.n)
        rec = {"from": g1.literal(), "to": g2.literal(), "r": r, "order": order,
               "brute_force": groups.hom_brute_force(g1, g2),
               "generator": format_elt(gen.images[0])}
        return [rec], ("from", "to", "r", "order", "brute_force")
    mm = groups.model_map(g1, g2)
    rec = {"from": g1.literal(), "to": g2.literal(), "exists": mm is not None}
    if mm is not None:
        rec.update({"r": mm.r, "s": mm.s, "isomorphism": mm.is_isomorphism,
                    "images": [format_elt(x) for x in mm.images]})
    return [rec], ("from", "to", "exists", "r", "s", "isomorphism")


def cmd_atlas(s: Session, witnesses):
    out = [e.as_dict() for e in degen.atlas(s.ctx, s.base, witnesses=witnesses)]
    return out, ("type", "admissible", "realizable", "model")


def _stable(records, keys):
    return [{k: r.get(k) for k in keys} for r in records]


def run(session: Session, fn, kwargs, strict=False):
    """Execute one command; with ``strict`` repeat at doubled D and N and compare."""
    records, keys = fn(session, **kwargs)
    if strict:
        again, _ = fn(session.doubled(), **kwargs)
        if _stable(records, keys) != _stable(again, keys):
            raise PrecisionError("result changes at doubled truncation (D=%d, N=%d)"
                                 % (2 * session.zdeg, 2 * session.ctx.N0))
    ctx = session.context()
    for r in records:
        r["context"] = ctx
        if strict:
            r["strict"] = True
    return records


def _summary(name, rec):
    if name == "analyze":
        return "type (%d,%d,%d,%d)  model %s  extendible %s  differents %s" % (
            rec["j"], rec["gamma1"], rec["gamma2"], rec["kappa"], rec["model"],
            str(rec["extendible"]).lower(), tuple(rec["differents"]))
    if name == "analyze-zp":
        return "gamma %d  model %s  different %d" % (rec["gamma"], rec["model"], rec["different"])
    if name in ("enumerate", "atlas"):
        t = "(%s)" % ",".join(str(x) for x in rec["type"])
        if name == "enumerate":
            return t
        return "%s  realizable %s  %s" % (t, rec["realizable"], rec["model"] or "")
    if name == "realize":
        return "type %s  cover %s  model %s" % (tuple(rec["type"]), rec["f"], rec["model"])
    if name == "hopf-check":
        return "%s  %s" % (rec["model"], "ok" if rec["ok"] else "; ".join(rec["failures"]))
    if name == "hom":
        if "order" in rec:
            return "Hom(%s, %s): order %d (r=%d, brute force %d)" % (
                rec["from"], rec["to"], rec["order"], rec["r"], rec["brute_force"])
        if not rec["exists"]:
            return "no model map %s -> %s" % (rec["from"], rec["to"])
        return "model map %s -> %s, s=%d%s" % (rec["from"], rec["to"], rec["s"],
                                              ", isomorphism" if rec["isomorphism"] else "")
    return json.dumps(rec, sort_keys=True)


def emit(name, records, fmt):
    for rec in records:
        if fmt == "json":
            click.echo(json.dumps({"command": name, **rec}, sort_keys=True))
        else:
            click.echo(_summary(name, rec))


def _common(f):
    opts = [
        click.option("--p", "p", type=int, default=3, show_default=True, help="odd prime"),
        click.option("--d", "d", type=int, default=1, show_default=True,
                     help="pi^d = zeta_{p^2} - 1"),
        click.option("--zdeg", type=int, default=16, show_default=True,
                     help="degree cap D of R[Z]/(Z^D)"),
        click.option("--prec", type=int, default=None, help="pi-adic precision N (default 4e)"),
        click.option("--strict", is_flag=True, help="re-run at 2D, 2N and compare"),
        click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json",
                     show_default=True),
    ]
    for o in reversed(opts):
        f = o(f)
    return f


def _invoke(name, fn, kwargs, p, d, zdeg, prec, strict, fmt, base="curve"):
    try:
        session = Session(p, d, zdeg, prec, base)
        records = run(session, fn, kwargs, strict)
    except KummerError as exc:
        click.echo("error (%s): %s" % (type(exc).__name__, exc), err=True)
        sys.exit(exc.exit_code)
    emit(name, records, fmt)


@click.group()
def main():
    """Finite flat models of mu_p, mu_p^2 and degeneration of cyclic p^2-covers."""


@main.command("analyze")
@click.option("--f", "f", required=True, help="Kummer generator, e.g. '1 + pi^12*(1+Z^2)'")
@_common
def analyze_cmd(f, **kw):
    """Degeneration type and effective model of T^(p^2) = f."""
    _invoke("analyze", cmd_analyze, {"f": f}, **kw)


@main.command("analyze-zp")
@click.option("--f", "f", required=True)
@click.option("--base", type=click.Choice(["curve", "point"]), default="curve", show_default=True)
@_common
def analyze_zp_cmd(f, base, **kw):
    """Level, model and different of the degree-p cover T^p = f."""
    _invoke("analyze-zp", cmd_analyze_zp, {"f": f}, base=base, **kw)


@main.command("enumerate")
@click.option("--filter", "filter_", type=click.Choice(["torsor"]), default=None,
              help="torsor: keep kappa = gamma1 < v(lambda1)")
@_common
def enumerate_cmd(filter_, **kw):
    """Admissible degeneration types."""
    _invoke("enumerate", cmd_enumerate, {"filter": filter_}, **kw)


@main.command("realize")
@click.option("--type", "type_", required=True, help="j,g1,g2,k")
@_common
def realize_cmd(type_, **kw):
    """Explicit cover with the given degeneration type (kappa = gamma1)."""
    _invoke("realize", cmd_realize, {"type_": type_}, **kw)


@main.command("hopf-check")
@click.option("--model", required=True, help="G(m,n) or E(m,n,a,j)")
@_common
def hopf_check_cmd(model, **kw):
    """Verify the Hopf algebra axioms of a model."""
    _invoke("hopf-check", cmd_hopf_check, {"model": model}, **kw)


@main.command("hom")
@click.option("--from", "src", required=True)
@click.option("--to", "tgt", required=True)
@_common
def hom_cmd(src, tgt, **kw):
    """Hom(G(m,n), G(m',n)) or the model map between two E(m,n,a,1)."""
    _invoke("hom", cmd_hom, {"src": src, "tgt": tgt}, **kw)


@main.command("atlas")
@click.option("--no-witness", is_flag=True, help="skip constructing witness covers")
@_common
def atlas_cmd(no_witness, **kw):
    """Admissible types with realizability verdict true, false or unknown."""
    _invoke("atlas", cmd_atlas, {"witnesses": not no_witness}, **kw)


if __name__ == "__main__":  # pragma: no cover
    main()
