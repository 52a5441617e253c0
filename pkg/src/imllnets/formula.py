"""Formulas over the single atom p, polarities, and the linear-implication view.

Two views of the same polarized formula exist side by side:

* the raw multiplicative view built from Atom, Tensor and Par;
* the implicational view built from Atom, Lolli and Tensor.

`abb` maps raw to implicational, `unabb` goes back.  Nets and everything
downstream of the parser work in the implicational view.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Atom:
    def __repr__(self):
        return "p"


@dataclass(frozen=True)
class Tensor:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Par:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Lolli:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Tensor, Par, Lolli]
P = Atom()
POS, NEG = "+", "-"


def flip(pol):
    return NEG if pol == POS else POS


@dataclass(frozen=True)
class PolarizedFormula:
    """A formula with its polarity; `view` is "imp" or "raw"."""
    formula: Formula
    polarity: str
    view: str = "imp"

    def __post_init__(self):
        if self.polarity not in (POS, NEG):
            raise ValueError(f"unknown polarity {self.polarity!r}")

    def __str__(self):
        return format_polarized(self)


class FormulaSyntaxError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


# -- views -----------------------------------------------------------------

def abb(pf: PolarizedFormula) -> PolarizedFormula:
    """Raw (Tensor/Par) polarized formula to its implicational view."""
    if pf.view != "raw":
        raise ValueError("abb expects the raw view")
    return PolarizedFormula(_abb(pf.formula, pf.polarity), pf.polarity)


def _abb(f, pol):
    if isinstance(f, Atom):
        return f
    if isinstance(f, Tensor):
        if pol == NEG:
            return Lolli(_abb(f.left, POS), _abb(f.right, NEG))
        return Tensor(_abb(f.left, POS), _abb(f.right, POS))
    if isinstance(f, Par):
        if pol == POS:
            return Lolli(_abb(f.left, NEG), _abb(f.right, POS))
        return Tensor(_abb(f.left, NEG), _abb(f.right, NEG))
    raise TypeError(f"not a raw formula: {f!r}")


def unabb(pf: PolarizedFormula) -> PolarizedFormula:
    if pf.view != "imp":
        raise ValueError("unabb expects the implicational view")
    return PolarizedFormula(_unabb(pf.formula, pf.polarity), pf.polarity, "raw")


def _unabb(f, pol):
    if isinstance(f, Atom):
        return f
    if isinstance(f, Lolli):
        if pol == POS:
            return Par(_unabb(f.left, NEG), _unabb(f.right, POS))
        return Tensor(_unabb(f.left, POS), _unabb(f.right, NEG))
    if isinstance(f, Tensor):
        if pol == POS:
            return Tensor(_unabb(f.left, POS), _unabb(f.right, POS))
        return Par(_unabb(f.left, NEG), _unabb(f.right, NEG))
    raise TypeError(f"not an implicational formula: {f!r}")


def child_polarities(f, pol):
    """Polarities of the two immediate subformulas in the implicational view."""
    if isinstance(f, Lolli):
        return flip(pol), pol
    return pol, pol


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(-o)|([()*@+\-])|(B'|B)(?![A-Za-z0-9_'])|([a-z][A-Za-z0-9_]*))")


def _tokenize(text):
    toks, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("-o", start))
        elif m.group(2):
            toks.append((m.group(2), start))
        elif m.group(3):
            toks.append(("alias:" + m.group(3), start))
        else:
            toks.append(("atom", start))
        pos = m.end()
    return toks


class _Parser:
    # Surface trees are tuples; -o is resolved only once the polarity is known.
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0
        self.end = len(text)

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self):
        return self.toks[self.i][1] if self.i < len(self.toks) else self.end

    def take(self, kind):
        if self.peek() != kind:
            raise FormulaSyntaxError(f"expected {kind!r}", self.pos())
        self.i += 1

    def imp(self):
        left = self.mul()
        if self.peek() == "-o":
            self.i += 1
            return ("lolli", left, self.imp())
        return left

    def mul(self):
        node = self.unary()
        while self.peek() in ("*", "@"):
            op = "tensor" if self.peek() == "*" else "par"
            self.i += 1
            node = (op, node, self.unary())
        return node

    def unary(self):
        tok = self.peek()
        if tok == "atom":
            self.i += 1
            return ("atom",)
        if tok and tok.startswith("alias:"):
            self.i += 1
            return ("imp", ALIASES[tok[6:]])
        if tok == "(":
            self.i += 1
            node = self.imp()
            self.take(")")
            return node
        raise FormulaSyntaxError("expected a formula", self.pos())


def _resolve(node, pol):
    kind = node[0]
    if kind == "atom":
        return P
    if kind == "imp":
        return _unabb(node[1], pol)
    a, b = node[1], node[2]
    if kind == "lolli":
        if pol == POS:
            return Par(_resolve(a, NEG), _resolve(b, POS))
        return Tensor(_resolve(a, POS), _resolve(b, NEG))
    if kind == "tensor":
        return Tensor(_resolve(a, POS), _resolve(b, pol))
    return Par(_resolve(a, NEG), _resolve(b, pol))


def parse_formula(text: str) -> PolarizedFormula:
    """Parse into the raw view.

    `*` is tensor, `@` is par, `-o` is linear implication (right associative,
    looser than `*` and `@`).  A trailing `+` or `-` sets the polarity of the
    whole formula and defaults to `+`.  Any lowercase name is the atom p;
    `B` and `B'` are built-in abbreviations.
    """
    ps = _Parser(text)
    if not ps.toks:
        raise FormulaSyntaxError("empty formula", 0)
    node = ps.imp()
    pol = POS
    if ps.peek() in (POS, NEG):
        pol = ps.peek()
        ps.i += 1
    if ps.i != len(ps.toks):
        tok = ps.peek()
        if tok in (POS, NEG):
            raise FormulaSyntaxError("polarity marker must end the formula", ps.pos())
        raise FormulaSyntaxError(f"unexpected token {tok!r}", ps.pos())
    return PolarizedFormula(_resolve(node, pol), pol, "raw")


def parse_type(text: str) -> PolarizedFormula:
    """Parse straight into the implicational view."""
    return abb(parse_formula(text))


# -- printing --------------------------------------------------------------

def _wrap(s, f):
    return s if isinstance(f, Atom) else f"({s})"


def format_imp(f: Formula, pol: str = POS) -> str:
    """Print an implicational formula so that `parse_type` reads it back.

    A tensor prints as `*` at positive positions and `@` at negative ones,
    since that is the raw connective it stands for.
    """
    if isinstance(f, Atom):
        return "p"
    if isinstance(f, Lolli):
        left = _wrap(format_imp(f.left, flip(pol)), f.left)
        right = format_imp(f.right, pol)
        if isinstance(f.right, Tensor):
            right = f"({right})"
        return f"{left} -o {right}"
    op = "*" if pol == POS else "@"
    return f"{_wrap(format_imp(f.left, pol), f.left)} {op} {_wrap(format_imp(f.right, pol), f.right)}"


def format_raw(f: Formula) -> str:
    if isinstance(f, Atom):
        return "p"
    op = {Tensor: "*", Par: "@"}[type(f)]
    return f"{_wrap(format_raw(f.left), f.left)} {op} {_wrap(format_raw(f.right), f.right)}"


def format_polarized(pf: PolarizedFormula) -> str:
    if pf.view == "raw":
        body = format_raw(pf.formula)
    else:
        body = format_imp(pf.formula, pf.polarity)
    if isinstance(pf.formula, Atom):
        return f"p{pf.polarity}"
    return f"({body}){pf.polarity}"


# -- measures and predicates -----------------------------------------------

def connectives(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    return 1 + connectives(f.left) + connectives(f.right)


def atom_count(f: Formula) -> int:
    return connectives(f) + 1


def _has(f, cls):
    if isinstance(f, cls):
        return True
    return not isinstance(f, Atom) and (_has(f.left, cls) or _has(f.right, cls))


def is_iimll(f: Formula) -> bool:
    return not _has(f, Tensor) and not _has(f, Par)


def order(f: Formula) -> int:
    """Nesting depth of implication on the left; p has order 1."""
    if isinstance(f, Atom):
        return 1
    if not isinstance(f, Lolli):
        raise ValueError("order is defined on implicational formulas without tensor")
    return max(order(f.left) + 1, order(f.right))


def uncurry(f: Formula):
    """Split A1 -o ... -o An -o R into ([A1..An], R) with R not an implication."""
    args = []
    while isinstance(f, Lolli):
        args.append(f.left)
        f = f.right
    return args, f


def curry(args, result):
    for a in reversed(args):
        result = Lolli(a, result)
    return result


def arity(f: Formula) -> int:
    args, res = uncurry(f)
    if not isinstance(res, Atom) or not all(isinstance(a, Atom) for a in args):
        raise ValueError("arity needs the shape p -o ... -o p")
    return len(args)


def tensor_width(f: Formula):
    """Number of atoms if f is a tensor of atoms (any bracketing), else None."""
    if isinstance(f, Atom):
        return 1
    if isinstance(f, Tensor):
        a, b = tensor_width(f.left), tensor_width(f.right)
        if a and b:
            return a + b
    return None


def simple_params(f: Formula):
    """Return (blocks, d) when f is simple, else None.

    blocks holds one (ks, m) per leading argument B_i = P_k1 -o ... -o P_m,
    where P_k is a tensor of k atoms, and d is the width of the result.
    """
    args, res = uncurry(f)
    d = tensor_width(res)
    if not d:
        return None
    blocks = []
    for b in args:
        hyps, m_part = uncurry(b)
        m = tensor_width(m_part)
        ks = [tensor_width(h) for h in hyps]
        if not m or not all(ks):
            return None
        blocks.append((ks, m))
    return blocks, d


def is_simple(f: Formula) -> bool:
    return simple_params(f) is not None


def instantiate_formula(f, a: Formula):
    """Replace every atom of an implicational formula by `a`.

    Accepts a bare formula or a PolarizedFormula; polarities inside follow
    from the enlarged tree, so nothing else needs recomputing.
    """
    if isinstance(f, PolarizedFormula):
        if f.view != "imp":
            f = abb(f)
        return PolarizedFormula(instantiate_formula(f.formula, a), f.polarity)
    if isinstance(f, Atom):
        return a
    return type(f)(instantiate_formula(f.left, a), instantiate_formula(f.right, a))


# -- addresses -------------------------------------------------------------

def subformula(f: Formula, addr: str) -> Formula:
    for step in addr:
        f = f.left if step == "L" else f.right
    return f


def polarity_at(f: Formula, pol: str, addr: str) -> str:
    for step in addr:
        lp, rp = child_polarities(f, pol)
        f, pol = (f.left, lp) if step == "L" else (f.right, rp)
    return pol


def leaf_addresses(f: Formula, addr: str = ""):
    if isinstance(f, Atom):
        return [addr]
    return leaf_addresses(f.left, addr + "L") + leaf_addresses(f.right, addr + "R")


def lollis(*args):
    """lollis(A, B, C) is A -o B -o C."""
    return curry(list(args[:-1]), args[-1])


def _pp():
    return Lolli(P, P)


BOOL = lollis(P, _pp(), _pp(), P)
BOOL_ALT = lollis(P, P, lollis(P, P, P), P)
ALIASES = {"B": BOOL, "B'": BOOL_ALT}


def bool_fun_type(n: int, base: Formula = BOOL) -> Formula:
    """B -o ... -o B with n arguments."""
    return curry([base] * n, base)
