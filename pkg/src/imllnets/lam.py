"""Linear lambda terms for implicational nets, and type-directed enumeration."""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .formula import (
    Atom, BOOL, BOOL_ALT, Formula, Lolli, NEG, POS, bool_fun_type,
    child_polarities, is_iimll, uncurry,
)
from .net import (
    ID, Net, PAR_NEG, PAR_POS, TENSOR_NEG, TENSOR_POS, dr_check,
)
from .analysis import equal, require_normal
from .context import apply_all
from .rewrite import normalize


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Lam:
    var: str
    body: "Term"

    def __str__(self):
        return format_term(self)


@dataclass(frozen=True)
class App:
    fun: "Term"
    arg: "Term"

    def __str__(self):
        return format_term(self)


Term = Var | Lam | App


class TermError(ValueError):
    pass


# -- syntax ------------------------------------------------------------------

_TERM_TOKEN = re.compile(r"\s*(?:([\\λ])|(\.)|(\()|(\))|([A-Za-z_][A-Za-z0-9_']*))")


def parse_term(text: str) -> Term:
    """Parse `\\x y. x (y z)`; `λ` works in place of the backslash."""
    toks, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TERM_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise TermError(f"unexpected character {text[pos]!r} at position {pos}")
        kinds = ("lam", ".", "(", ")", "id")
        i = m.lastindex - 1
        toks.append((kinds[i], m.group(m.lastindex)))
        pos = m.end()
    toks.append(("end", None))
    i = 0

    def peek():
        return toks[i][0]

    def term():
        nonlocal i
        if peek() == "lam":
            i += 1
            names = []
            while peek() == "id":
                names.append(toks[i][1])
                i += 1
            if not names or peek() != ".":
                raise TermError("malformed abstraction")
            i += 1
            body = term()
            for n in reversed(names):
                body = Lam(n, body)
            return body
        t = atom()
        while peek() in ("id", "(", "lam"):
            t = App(t, term() if peek() == "lam" else atom())
        return t

    def atom():
        nonlocal i
        kind, val = toks[i]
        if kind == "id":
            i += 1
            return Var(val)
        if kind == "(":
            i += 1
            t = term()
            if peek() != ")":
                raise TermError("missing )")
            i += 1
            return t
        raise TermError(f"unexpected {kind}")

    t = term()
    if peek() != "end":
        raise TermError("trailing input")
    return t


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Lam):
        names = []
        while isinstance(t, Lam):
            names.append(t.var)
            t = t.body
        return "\\" + " ".join(names) + ". " + format_term(t)
    fun = format_term(t.fun)
    if isinstance(t.fun, Lam):
        fun = f"({fun})"
    arg = format_term(t.arg)
    if not isinstance(t.arg, Var):
        arg = f"({arg})"
    return f"{fun} {arg}"


def de_bruijn(t: Term, env=()):
    """Nameless form; free variables keep their names."""
    if isinstance(t, Var):
        for i, n in enumerate(reversed(env)):
            if n == t.name:
                return i
        return t.name
    if isinstance(t, Lam):
        return ("lam", de_bruijn(t.body, env + (t.var,)))
    return ("app", de_bruijn(t.fun, env), de_bruijn(t.arg, env))


def alpha_eq(a: Term, b: Term) -> bool:
    return de_bruijn(a) == de_bruijn(b)


def free_vars(t: Term) -> list[str]:
    """Free variable occurrences, left to right (with repeats)."""
    if isinstance(t, Var):
        return [t.name]
    if isinstance(t, Lam):
        return [v for v in free_vars(t.body) if v != t.var]
    return free_vars(t.fun) + free_vars(t.arg)


def is_linear(t: Term) -> bool:
    if isinstance(t, Lam):
        return free_vars(t.body).count(t.var) == 1 and is_linear(t.body)
    if isinstance(t, App):
        fv = free_vars(t.fun) + free_vars(t.arg)
        return len(fv) == len(set(fv)) and is_linear(t.fun) and is_linear(t.arg)
    return True


def spine(t: Term):
    """Split into (bound names, head, arguments)."""
    names = []
    while isinstance(t, Lam):
        names.append(t.var)
        t = t.body
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    return names, t, args[::-1]


# -- nets to terms -----------------------------------------------------------

def assign_term(net: Net) -> Term:
    """The linear term of a normal implicational net.

    Bound variables are named x1, x2, ... in binding order; hypotheses left
    open by the net are named y1, y2, ... by node order.
    """
    require_normal(net)
    for pf in net.nodes.values():
        if not is_iimll(pf.formula):
            raise TermError("term assignment needs an implicational net")
    names = {}
    for i, c in enumerate(n for n in net.conclusions() if net.polarity(n) == NEG):
        names[c] = f"y{i + 1}"
    counter = itertools.count(1)

    def term_at(v):
        lams = []
        while net.producing(v).kind == PAR_POS:
            hyp, v = net.producing(v).premises
            names[hyp] = f"x{next(counter)}"
            lams.append(names[hyp])
        node = net.producing(v).conclusions[1]
        args = []
        while True:
            l = net.consuming(node)
            if l is None or l.kind != TENSOR_NEG or l.premises[1] != node:
                break
            args.append(l.premises[0])
            node = l.conclusions[0]
        # arguments are visited outermost first so names follow binding order
        arg_terms = [term_at(a) for a in reversed(args)]
        if node not in names:
            raise TermError(f"head node {node} is not a hypothesis")
        body = Var(names[node])
        for a in arg_terms:
            body = App(body, a)
        for n in reversed(lams):
            body = Lam(n, body)
        return body

    t = term_at(net.positive_conclusion())
    return _rename_bound(t)


def _rename_bound(t: Term) -> Term:
    """Rename bound variables to x1, x2, ... in order of their binders."""
    counter = itertools.count(1)

    def go(t, env):
        if isinstance(t, Var):
            return Var(env.get(t.name, t.name))
        if isinstance(t, Lam):
            new = f"x{next(counter)}"
            return Lam(new, go(t.body, {**env, t.var: new}))
        return App(go(t.fun, env), go(t.arg, env))

    return go(t, {})


# -- terms to nets -----------------------------------------------------------

def term_to_net(t: Term, a: Formula, hyps=()) -> Net:
    """Net of a linear term at implicational type `a`, in normal form.

    `hyps` lists (name, type) for free variables; they become negative
    conclusions.  Terms whose neutral subterms stop short of the atom are
    accepted and eta expanded by normalization.
    """
    if not is_linear(t):
        raise TermError("term is not linear")
    fv = free_vars(t)
    declared = [n for n, _ in hyps]
    if sorted(fv) != sorted(declared):
        raise TermError("free variables do not match the declared hypotheses")
    net = Net()
    env = {}
    for name, ty in hyps:
        env[name] = net.new_node(ty, NEG)
    _build(net, t, a, env)
    return normalize(net)


def _build(net, t, a, env) -> int:
    if isinstance(t, Lam):
        if not isinstance(a, Lolli):
            raise TermError(f"abstraction at non-implication type")
        hyp = net.new_node(a.left, NEG)
        body = _build(net, t.body, a.right, {**env, t.var: hyp})
        if hyp in net.nodes and hyp not in net.producer:
            raise TermError(f"variable {t.var} unused")
        return net.add_binary(PAR_POS, hyp, body)
    _, head, args = spine(t)
    if not isinstance(head, Var):
        raise TermError("term is not in normal form")
    if head.name not in env:
        raise TermError(f"unbound variable {head.name}")
    h = env[head.name]
    ty = net.formula(h)
    arg_types, rest = [], ty
    for _ in args:
        if not isinstance(rest, Lolli):
            raise TermError(f"{head.name} applied to too many arguments")
        arg_types.append(rest.left)
        rest = rest.right
    if rest != a:
        raise TermError(f"type mismatch at {format_term(t)}")
    pos, cur = net.add_id(a)
    for arg, at in reversed(list(zip(args, arg_types))):
        cur = net.add_binary(TENSOR_NEG, _build(net, arg, at, env), cur)
    # the chain's bottom node is the variable's own hypothesis node
    lid = net.producer[cur]
    l = net.remove_link(lid)
    net.remove_node(cur)
    net.add_link(l.kind, l.premises, tuple(h if n == cur else n for n in l.conclusions), link_id=lid)
    return pos


# -- enumeration -------------------------------------------------------------

DEFAULT_BOUND = 200000


def enum_bound() -> int:
    return int(os.environ.get("IMLL_ENUM_BOUND", DEFAULT_BOUND))


class EnumerationBoundExceeded(RuntimeError):
    pass


def _balance(f, pol):
    """Positive minus negative atom occurrences."""
    if isinstance(f, Atom):
        return 1 if pol == POS else -1
    lp, rp = child_polarities(f, pol)
    return _balance(f.left, lp) + _balance(f.right, rp)


@lru_cache(maxsize=None)
def _search(goal, ctx):
    """Nameless linear normal terms of `goal` using every entry of `ctx` once.

    Variables are context positions: ("v", i); ("lam", body) binds position
    len(ctx); ("app", head, args).
    """
    if isinstance(goal, Lolli):
        return tuple(("lam", b) for b in _search(goal.right, ctx + (goal.left,)))
    if not isinstance(goal, Atom):
        raise TermError("enumeration covers implicational types only")
    out = []
    for hi, hty in enumerate(ctx):
        arg_tys, res = uncurry(hty)
        if res != goal:
            continue
        rest = [i for i in range(len(ctx)) if i != hi]
        k = len(arg_tys)
        if k == 0:
            if not rest:
                out.append(("v", hi, ()))
            continue
        for split in itertools.product(range(k), repeat=len(rest)):
            parts = [[] for _ in range(k)]
            for var, slot in zip(rest, split):
                parts[slot].append(var)
            if any(sum(_balance(ctx[v], NEG) for v in part) + _balance(at, POS) != 0
                   for part, at in zip(parts, arg_tys)):
                continue
            choices = []
            for part, at in zip(parts, arg_tys):
                sub = _search(at, tuple(ctx[v] for v in part))
                if not sub:
                    break
                choices.append([_reindex(s, part, len(ctx)) for s in sub])
            else:
                for combo in itertools.product(*choices):
                    out.append(("v", hi, tuple(combo)))
        if len(out) > enum_bound():
            raise EnumerationBoundExceeded(f"more than {enum_bound()} terms")
    return tuple(out)


def _reindex(t, part, outer_len):
    """Map a term over sub-context `part` to the enclosing context."""
    def go(t, depth):
        if t[0] == "lam":
            return ("lam", go(t[1], depth + 1))
        i = t[1]
        j = part[i] if i < len(part) else outer_len + (i - len(part))
        return ("v", j, tuple(go(a, depth) for a in t[2]))
    return go(t, 0)


def _named(t, ctx_names, counter):
    if t[0] == "lam":
        name = f"x{next(counter)}"
        return Lam(name, _named(t[1], ctx_names + [name], counter))
    body = Var(ctx_names[t[1]])
    for a in t[2]:
        body = App(body, _named(a, ctx_names, counter))
    return body


def enumerate_terms(a: Formula) -> list[Term]:
    """All closed linear normal terms of an implicational type, canonical order."""
    if not is_iimll(a):
        raise TermError("enumerate_terms needs an implicational type")
    terms = [_rename_bound(_named(t, [], itertools.count(1))) for t in _search(a, ())]
    return sorted(terms, key=lambda t: repr(de_bruijn(t)))


def enumerate_normal(a: Formula) -> list[Net]:
    """All closed normal nets of `a`.

    Implicational types go through term search; types with tensors go
    through axiom matchings.
    """
    if is_iimll(a):
        return [term_to_net(t, a) for t in enumerate_terms(a)]
    return enumerate_by_matching(a)


def skeleton(a: Formula):
    """Cut-free net of a+ without its axioms; returns (net, pos leaves, neg leaves)."""
    net = Net()
    pos, neg = [], []

    def build(f, pol):
        if isinstance(f, Atom):
            n = net.new_node(f, pol)
            (pos if pol == POS else neg).append(n)
            return n
        lp, rp = child_polarities(f, pol)
        left, right = build(f.left, lp), build(f.right, rp)
        if isinstance(f, Lolli):
            kind = PAR_POS if pol == POS else TENSOR_NEG
        else:
            kind = TENSOR_POS if pol == POS else PAR_NEG
        return net.add_binary(kind, left, right)

    build(a, POS)
    return net, pos, neg


def enumerate_by_matching(a: Formula) -> list[Net]:
    """All closed normal nets of `a`, by trying every axiom matching.

    Independent of term search: a normal net is its conclusion's syntax
    tree plus a pairing of positive and negative atoms, kept when the
    switching check passes.
    """
    base, pos, neg = skeleton(a)
    if len(pos) != len(neg):
        return []
    out = []
    for perm in itertools.permutations(neg):
        net = base.copy()
        for x, y in zip(pos, perm):
            net.add_link(ID, (), (x, y))
        if dr_check(net, "contract"):
            out.append(net)
    return out


# -- booleans ----------------------------------------------------------------

ZERO_TERM = parse_term("\\x f g. g (f x)")
ONE_TERM = parse_term("\\x f g. f (g x)")


@lru_cache(maxsize=None)
def boolean_nets(base: Formula = BOOL):
    """(0, 1) as nets of `base`, which is B or B'."""
    if base == BOOL:
        return term_to_net(ZERO_TERM, BOOL), term_to_net(ONE_TERM, BOOL)
    if base == BOOL_ALT:
        return (term_to_net(parse_term("\\x y h. h x y"), BOOL_ALT),
                term_to_net(parse_term("\\x y h. h y x"), BOOL_ALT))
    raise ValueError("booleans are defined for B and B'")


def zero(base=BOOL):
    return boolean_nets(base)[0]


def one(base=BOOL):
    return boolean_nets(base)[1]


def read_boolean(net: Net, base: Formula = BOOL) -> int:
    z, o = boolean_nets(base)
    net = normalize(net)
    if equal(net, z):
        return 0
    if equal(net, o):
        return 1
    raise AssertionError("normal form is not a boolean")


def eval_boolean(fun: Net, args, base: Formula = BOOL) -> int:
    """Value of a net of B^n -o B at booleans given as 0/1 or as nets."""
    nets = [boolean_nets(base)[a] if isinstance(a, int) else a for a in args]
    return read_boolean(apply_all(fun, nets), base)


def truth_table(fun: Net, n: int, base: Formula = BOOL) -> tuple:
    """Outputs over all inputs in lexicographic order of (c1, ..., cn)."""
    return tuple(eval_boolean(fun, cs, base) for cs in itertools.product((0, 1), repeat=n))


def format_table(table, n) -> str:
    rows = []
    for cs, v in zip(itertools.product((0, 1), repeat=n), table):
        rows.append(" ".join(map(str, cs)) + f" -> {v}")
    return "\n".join(rows) + "\n"


# -- classification of B^n -o B ---------------------------------------------

def closed_forms(n: int) -> dict:
    f = factorial(n)
    return {
        "a": f * 2 * 2 * n,
        "b": f * 2 * (2 * n * n - n),
        "c": f * 2 * (n + 1) * 2 * n,
        "d": f * (n * n + 3 * n + 2),
        "total": f * (9 * n * n + 9 * n + 2),
        "nonconstant": f * 2 * n,
        "distinct": 2 * n + 2,
    }


def _subterms(t):
    yield t
    if isinstance(t, Lam):
        yield from _subterms(t.body)
    elif isinstance(t, App):
        yield from _subterms(t.fun)
        yield from _subterms(t.arg)


def _is_eta_of(t, name):
    return (isinstance(t, Lam) and isinstance(t.body, App)
            and t.body.fun == Var(name) and t.body.arg == Var(t.var))


def _is_composite(t, outer, inner):
    if not (isinstance(t, Lam) and isinstance(t.body, App) and t.body.fun == Var(outer)):
        return False
    a = t.body.arg
    return isinstance(a, App) and a.fun == Var(inner) and a.arg == Var(t.var)


def term_case(t: Term, n: int) -> str:
    """Case a-d of a term of B^n -o B, by the subterms built from f and g."""
    names, _, _ = spine(t)
    f, g = names[n + 1], names[n + 2]
    subs = list(_subterms(t))
    if any(_is_composite(s, f, g) or _is_composite(s, g, f) for s in subs):
        return "a"
    has_f = any(_is_eta_of(s, f) for s in subs)
    has_g = any(_is_eta_of(s, g) for s in subs)
    if has_f and has_g:
        return "b"
    if has_f or has_g:
        return "c"
    return "d"


def classify(n: int, exhaustive: bool = True) -> dict:
    """Case counts, total, distinct functions and nonconstant count for B^n -o B."""
    expected = closed_forms(n)
    if not exhaustive:
        return dict(expected)
    if n > 3:
        raise ValueError("exhaustive classification is limited to n <= 3")
    ty = bool_fun_type(n)
    terms = enumerate_terms(ty)
    counts = {"a": 0, "b": 0, "c": 0, "d": 0}
    tables = set()
    nonconstant = 0
    for t in terms:
        counts[term_case(t, n)] += 1
        table = truth_table(term_to_net(t, ty), n)
        tables.add(table)
        if len(set(table)) > 1:
            nonconstant += 1
    report = dict(counts, total=len(terms), nonconstant=nonconstant, distinct=len(tables))
    report["matches_closed_forms"] = all(report[k] == expected[k] for k in expected)
    return report


# -- the alternative instantiation type --------------------------------------

def _parity(cs):
    return sum(cs) % 2


def alt_type_probe(max_n: int = 2) -> dict:
    """Which boolean functions are definable over B' = p -o p -o (p -o p -o p) -o p."""
    booleans = enumerate_normal(BOOL_ALT)
    report = {"count": len(booleans)}
    by_arity = {}
    for n in range(1, max_n + 1):
        ty = bool_fun_type(n, BOOL_ALT)
        tables = sorted({truth_table(net, n, BOOL_ALT) for net in enumerate_normal(ty)})
        by_arity[n] = tables
    report["tables"] = by_arity
    report["unary"] = by_arity.get(1, [])
    inputs = {n: list(itertools.product((0, 1), repeat=n)) for n in by_arity}
    report["constant_found"] = any(len(set(t)) == 1 for ts in by_arity.values() for t in ts)
    report["all_parity"] = all(
        all(v == _parity(cs) for cs, v in zip(inputs[n], t))
        or all(v == 1 - _parity(cs) for cs, v in zip(inputs[n], t))
        for n, ts in by_arity.items() for t in ts)
    return report
