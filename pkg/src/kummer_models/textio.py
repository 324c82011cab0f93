"""Printing and parsing of ring elements, model literals and type literals.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := int | 'pi' | NAME | '(' expr ')'

NAME is any generator of the target ring (``Z`` for the local curve).  A
leading '-' is also accepted.  Printing uses balanced integer
representatives, so ``parse(format(x)) == x`` for every normal form.
"""
import re
from dataclasses import dataclass

import numpy as np

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
MAX_EXPANDED_DEGREE = 4096


# printing ---------------------------------------------------------------------
def _balanced(c, m):
    c = int(c) % m
    return c - m if 2 * c > m else c


def format_elt(x) -> str:
    """Canonical text of an element, e.g. ``1 + 2*pi^3 - pi^7*Z``."""
    ring = x.ring
    ctx = ring.ctx
    names = [ax.name for ax in ring.axes]
    mods = ctx.colmod[x.prec]
    terms = []
    for idx in np.ndindex(*ring.shape) if ring.shape else [()]:
        row = x.arr[idx] if idx else x.arr
        mono = "*".join(n if k == 1 else "%s^%d" % (n, k)
                        for n, k in zip(names, idx) if k)
        for i in range(ctx.e):
            c = _balanced(row[i], int(mods[i]))
            if c == 0:
                continue
            factors = [] if abs(c) == 1 else [str(abs(c))]
            if i:
                factors.append("pi" if i == 1 else "pi^%d" % i)
            if mono:
                factors.append(mono)
            body = "*".join(factors) or "1"
            terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += " %s %s" % (sign, body)
    return out


# parsing ----------------------------------------------------------------------
@dataclass
class _Node:
    kind: str  # int, var, add, sub, mul, pow, neg
    value: object = None
    kids: tuple = ()


def _tokenize(src):
    toks = []
    pos = 0
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:  # pragma: no cover - the pattern matches any non-space
            raise ParseError("unexpected input", pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError("unexpected character %r" % ch, start)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", None, len(src)))
    return toks


class _Parser:
    def __init__(self, src, names):
        self.toks = _tokenize(src)
        self.i = 0
        self.names = names

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %r, found %r" % (kind, tok[1] if tok[1] is not None else "end"), tok[2])
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("unexpected %r" % (tok[1],), tok[2])
        return node

    def expr(self):
        if self.peek()[0] == "-":
            self.take()
            node = _Node("neg", kids=(self.term(),))
        else:
            node = self.term()
        while self.peek()[0] in "+-" and self.peek()[0] != "end":
            op = self.take()[0]
            node = _Node("add" if op == "+" else "sub", kids=(node, self.term()))
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.take()
            node = _Node("mul", kids=(node, self.factor()))
        return node

    def factor(self):
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            k = self.take("int")[1]
            node = _Node("pow", value=k, kids=(node,))
        return node

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return _Node("int", tok[1])
        if tok[0] == "name":
            self.take()
            if tok[1] != "pi" and tok[1] not in self.names:
                raise ParseError("unknown symbol %r" % tok[1], tok[2])
            return _Node("var", tok[1])
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        raise ParseError("unexpected %r" % (tok[1] if tok[1] is not None else "end"), tok[2])


def _degree_bound(node, name):
    k = node.kind
    if k == "int":
        return 0
    if k == "var":
        return 1 if node.value == name else 0
    if k == "pow":
        return node.value * _degree_bound(node.kids[0], name)
    if k == "mul":
        return sum(_degree_bound(c, name) for c in node.kids)
    return max(_degree_bound(c, name) for c in node.kids)


def _eval(node, ring):
    k = node.kind
    if k == "int":
        return ring.const(node.value)
    if k == "var":
        return ring.pi_power(1) if node.value == "pi" else ring.gen(node.value)
    if k == "neg":
        return -_eval(node.kids[0], ring)
    if k == "add":
        return _eval(node.kids[0], ring) + _eval(node.kids[1], ring)
    if k == "sub":
        return _eval(node.kids[0], ring) - _eval(node.kids[1], ring)
    if k == "mul":
        return _eval(node.kids[0], ring) * _eval(node.kids[1], ring)
    return _eval(node.kids[0], ring) ** node.value


def parse_in(src: str, ring, prec=None):
    """Parse an expression into an element of the tower ``ring``.

    Truncated axes are evaluated in a wider ring first so that an expression
    whose value has terms beyond the truncation is reported, not clipped.
    """
    from .tower import Axis, Tower

    names = [ax.name for ax in ring.axes]
    node = _Parser(src, names).parse()
    ctx = ring.ctx
    wide_axes = []
    for ax in ring.axes:
        if ax.kind == "trunc":
            bound = _degree_bound(node, ax.name) + 1
            if bound > MAX_EXPANDED_DEGREE:
                raise ParseError("degree bound %d in %s too large" % (bound, ax.name))
            wide_axes.append(Axis(ax.name, max(ax.n, bound)))
        else:
            wide_axes.append(ax)
    wide = Tower(ctx, wide_axes)
    val = _eval(node, wide)
    if wide.shape != ring.shape:
        sl = tuple(slice(0, n) for n in ring.shape)
        extra = val.arr.copy()
        extra[sl] = 0
        if extra.any():
            raise ParseError("value has terms beyond the degree cap %s" % (ring.shape,))
    val = type(val)(ring, val.arr[tuple(slice(0, n) for n in ring.shape)].copy(), val.prec)
    prec = ctx.N0 if prec is None else prec
    return val.reduce_prec(prec)


# literals ---------------------------------------------------------------------
_GLIT = re.compile(r"^\s*G\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")
_ELIT = re.compile(r"^\s*E\(\s*(\d+)\s*,\s*(\d+)\s*,(.*),\s*(-?\d+)\s*\)\s*$")


def parse_model_literal(src: str):
    """``G(m,n)`` -> ("G", m, n); ``E(m,n,a,j)`` -> ("E", m, n, a_text, j)."""
    m = _GLIT.match(src)
    if m:
        return ("G", int(m.group(1)), int(m.group(2)))
    m = _ELIT.match(src)
    if m:
        return ("E", int(m.group(1)), int(m.group(2)), m.group(3).strip(), int(m.group(4)))
    raise ParseError("not a model literal: %r" % src, 0)


def parse_type_literal(src: str):
    parts = [s.strip() for s in src.strip().strip("()").split(",")]
    if len(parts) != 4 or not all(s.isdigit() for s in parts):
        raise ParseError("type must be four naturals j,g1,g2,k: %r" % src, 0)
    return tuple(int(s) for s in parts)
