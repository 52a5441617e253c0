"""Separating two distinct closed nets by a context.

The pipeline brings both nets to a common shape step by step.  Tensors are
removed from the conclusion, the order is lowered below 4, and the result
is read as a composition of unary and n-ary boolean functions.  Choosing
definable functions for the variables of that composition gives a context
sending one net to 0 and the other to 1 once both are instantiated at B.

Every intermediate context is a rewiring: the hole's type A cut against
an expanded copy of A, whose atoms are linked to those of a new type A'.
Normalizing a plugged rewiring only renames the atoms of the plugged net,
so distinct nets stay distinct.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import equal, measure_lolli, require_normal
from .context import apply_all, apply_net, compose, make_hole, plug
from .formula import (
    Atom, BOOL, Formula, Lolli, NEG, P, POS, PolarizedFormula, Tensor,
    bool_fun_type, child_polarities, curry, format_imp,
    instantiate_formula, is_iimll, is_simple, leaf_addresses, order,
    polarity_at, simple_params, subformula, uncurry,
)
from .lam import App, Lam, Var, boolean_nets, read_boolean, term_to_net
from .net import (
    ID, Net, PAR_NEG, PAR_POS, TENSOR_NEG, TENSOR_POS, dr_check,
    is_closed, validate_structure,
)
from .rewrite import normalize


class SeparationError(ValueError):
    """A precondition of the separation pipeline does not hold."""


# -- rewiring contexts -------------------------------------------------------

_KIND = {
    (Lolli, POS): PAR_POS, (Lolli, NEG): TENSOR_NEG,
    (Tensor, POS): TENSOR_POS, (Tensor, NEG): PAR_NEG,
}


def _tree(net: Net, f: Formula, pol: str, addr: str, leaves: dict) -> int:
    """Build the syntax tree of f with open atomic leaves; return its root."""
    if isinstance(f, Atom):
        n = net.new_node(f, pol)
        leaves[addr] = n
        return n
    lp, rp = child_polarities(f, pol)
    left = _tree(net, f.left, lp, addr + "L", leaves)
    right = _tree(net, f.right, rp, addr + "R", leaves)
    return net.add_binary(_KIND[type(f), pol], left, right)


def rewiring_context(a: Formula, a2: Formula, pairs) -> Net:
    """Context with hole A and conclusion A2 whose axioms are given by `pairs`.

    Each pair joins two atom leaves named ("in", address in A) or
    ("out", address in A2).  Raises AssertionError when the result is not
    a valid context.
    """
    ctx = Net()
    hole = ctx.add_hole(a)
    leaves = {"in": {}, "out": {}}
    inner = _tree(ctx, a, NEG, "", leaves["in"])
    ctx.add_cut(hole, inner)
    _tree(ctx, a2, POS, "", leaves["out"])
    used = set()
    for x, y in pairs:
        u, v = leaves[x[0]][x[1]], leaves[y[0]][y[1]]
        if ctx.polarity(u) == ctx.polarity(v):
            raise AssertionError(f"pairing {x} with {y} joins equal polarities")
        if ctx.polarity(u) == NEG:
            u, v = v, u
        ctx.add_link(ID, (), (u, v))
        used.update((u, v))
    missing = [n for side in leaves.values() for n in side.values() if n not in used]
    if missing:
        raise AssertionError(f"rewiring leaves {len(missing)} atoms unpaired")
    if validate_structure(ctx) or not dr_check(ctx):
        raise AssertionError(f"rewiring {format_imp(a)} into {format_imp(a2)} is not a net")
    return ctx


def replace_at(f: Formula, addr: str, g: Formula) -> Formula:
    if not addr:
        return g
    if addr[0] == "L":
        return type(f)(replace_at(f.left, addr[1:], g), f.right)
    return type(f)(f.left, replace_at(f.right, addr[1:], g))


def hoist(a: Formula, addr: str):
    """Move the left premise of the par link at `addr` to a new outermost argument.

    Returns (A2, address map from A's leaves to A2's leaves).  The par may be
    a positive implication or a negative tensor; in both cases its left
    premise is negative, which is what an outermost argument needs.
    """
    f = subformula(a, addr)
    if addr == "" or not isinstance(f, (Lolli, Tensor)):
        raise SeparationError(f"no inner par link at address {addr!r}")
    pol = polarity_at(a, POS, addr)
    if (type(f), pol) not in ((Lolli, POS), (Tensor, NEG)):
        raise SeparationError(f"link at {addr!r} is not a par")
    a2 = Lolli(f.left, replace_at(a, addr, f.right))
    amap = {}
    for u in leaf_addresses(a):
        if u.startswith(addr + "L"):
            amap[u] = "L" + u[len(addr) + 1:]
        elif u.startswith(addr + "R"):
            amap[u] = "R" + addr + u[len(addr) + 1:]
        else:
            amap[u] = "R" + u
    return a2, amap


def hoist_context(a: Formula, addr: str) -> Net:
    a2, amap = hoist(a, addr)
    return rewiring_context(a, a2, [(("in", u), ("out", v)) for u, v in amap.items()])


def _plug_pair(ctx, n1, n2):
    return normalize(plug(ctx, n1)), normalize(plug(ctx, n2))


def _require_pair(n1: Net, n2: Net):
    for n in (n1, n2):
        require_normal(n)
        if not is_closed(n):
            raise SeparationError("nets must be closed")
    if n1.nodes[n1.positive_conclusion()] != n2.nodes[n2.positive_conclusion()]:
        raise SeparationError("nets have different conclusions")
    if equal(n1, n2):
        raise SeparationError("nets are equal")


def _check_unequal(n1, n2, stage):
    if equal(n1, n2):
        raise AssertionError(f"{stage} identified two distinct nets")


# -- order reduction ---------------------------------------------------------

def third_order_target(a: Formula):
    """Address of the leftmost-outermost argument of an argument whose order is at least 2."""
    args, _ = uncurry(a)
    for i, ai in enumerate(args):
        if order(ai) < 3:
            continue
        inner, _ = uncurry(ai)
        for j, d in enumerate(inner):
            if order(d) >= 2:
                return "R" * i + "L" + "R" * j + "L"
    return None


def rewire_third_order(a: Formula, addr: str) -> Net:
    """Context pulling the first argument of the implication at `addr` out to the top."""
    if not is_iimll(a):
        raise SeparationError("order reduction works on implicational types")
    if len(addr) < 2 or addr.count("L") != 2 or not addr.endswith("L"):
        raise SeparationError(f"{addr!r} is not an argument of an argument")
    if not isinstance(subformula(a, addr), Lolli):
        raise SeparationError(f"subformula at {addr!r} is not an implication")
    return hoist_context(a, addr)


def reduce_order(n1: Net, n2: Net, log=None):
    """Lower the order of a distinct pair to at most 3.

    Returns (context, n1', n2').  `log` collects one
    (address, measure before, measure after) triple per net and step.
    """
    _require_pair(n1, n2)
    a = n1.conclusion_formula()
    if not is_iimll(a):
        raise SeparationError("order reduction works on implicational types")
    ctx = make_hole(a)
    while order(a) > 3:
        addr = third_order_target(a)
        step = rewire_third_order(a, addr)
        m1, m2 = measure_lolli(n1), measure_lolli(n2)
        n1, n2 = _plug_pair(step, n1, n2)
        k1, k2 = measure_lolli(n1), measure_lolli(n2)
        if log is not None:
            log.append((addr, (m1, k1), (m2, k2)))
        if not (k1 < m1 and k2 < m2):
            raise AssertionError("measure did not decrease under rewiring")
        _check_unequal(n1, n2, "order reduction")
        ctx = compose(step, ctx)
        a = n1.conclusion_formula()
    return normalize(ctx), n1, n2


# -- tensors -----------------------------------------------------------------

def _pure_neg_tensor(f, pol):
    return pol == NEG and not isinstance(f, Lolli) and not _contains_lolli(f)


def _contains_lolli(f):
    if isinstance(f, Atom):
        return False
    return isinstance(f, Lolli) or _contains_lolli(f.left) or _contains_lolli(f.right)


def _allowed_pars(a: Formula) -> set:
    """Addresses of the par links a simple formula may keep."""
    ok = set()
    args, _ = uncurry(a)
    for i, b in enumerate(args):
        ok.add("R" * i)
        base = "R" * i + "L"
        inner, m = uncurry(b)
        m_addr = base + "R" * len(inner)
        if _pure_neg_tensor(m, NEG):
            ok.update(u for u in _internal_addresses(m, m_addr))
    return ok


def _internal_addresses(f, addr):
    if isinstance(f, Atom):
        return []
    return [addr] + _internal_addresses(f.left, addr + "L") + _internal_addresses(f.right, addr + "R")


def misplaced_par(a: Formula):
    """First par link, in preorder, that keeps `a` from being simple."""
    ok = _allowed_pars(a)
    stack = [(a, POS, "")]
    while stack:
        f, pol, addr = stack.pop()
        if isinstance(f, Atom):
            continue
        if (type(f), pol) in ((Lolli, POS), (Tensor, NEG)) and addr not in ok:
            return addr
        lp, rp = child_polarities(f, pol)
        stack.append((f.right, rp, addr + "R"))
        stack.append((f.left, lp, addr + "L"))
    return None


def to_simple(n1: Net, n2: Net, log=None):
    """Hoist misplaced par links until the common conclusion is simple."""
    _require_pair(n1, n2)
    a = n1.conclusion_formula()
    ctx = make_hole(a)
    while not is_simple(a):
        addr = misplaced_par(a)
        if addr is None:
            raise AssertionError(f"no par to hoist in non-simple {format_imp(a)}")
        step = hoist_context(a, addr)
        n1, n2 = _plug_pair(step, n1, n2)
        _check_unequal(n1, n2, "simplification")
        if log is not None:
            log.append((addr, format_imp(n1.conclusion_formula())))
        ctx = compose(step, ctx)
        a = n1.conclusion_formula()
    return normalize(ctx), n1, n2


def iimll_adapter(a: Formula):
    """(A2, pairs) turning a simple formula into an implicational one of order 2.

    Argument i of A, with hypotheses holding k atoms in all and a result of
    m atoms, becomes C_i = p -o ... -o p -o p with k hypotheses; the first
    m - 1 result atoms become extra leading arguments.  The d result atoms
    of A feed a final continuation p -o ... -o p -o p.
    """
    params = simple_params(a)
    if params is None:
        raise SeparationError(f"{format_imp(a)} is not simple")
    blocks, d = params
    extras = sum(m - 1 for _, m in blocks)
    cs = [curry([P] * sum(ks), P) for ks, _ in blocks]
    cont = curry([P] * d, P)
    a2 = curry([P] * extras + cs + [cont], P)

    def arg(i):
        return "R" * i + "L"

    pairs, extra = [], 0
    for i, (ks, m) in enumerate(blocks):
        b_addr = arg(i)
        hyps, _ = uncurry(subformula(a, b_addr))
        k_leaves = [u for j, h in enumerate(hyps)
                    for u in leaf_addresses(h, b_addr + "R" * j + "L")]
        m_leaves = leaf_addresses(subformula(a, b_addr + "R" * len(hyps)), b_addr + "R" * len(hyps))
        c_addr = arg(extras + i)
        for j, u in enumerate(k_leaves):
            pairs.append((("in", u), ("out", c_addr + "R" * j + "L")))
        pairs.append((("in", m_leaves[-1]), ("out", c_addr + "R" * len(k_leaves))))
        for u in m_leaves[:-1]:
            pairs.append((("in", u), ("out", arg(extra))))
            extra += 1
    res = "R" * len(blocks)
    k_addr = arg(extras + len(blocks))
    for j, u in enumerate(leaf_addresses(subformula(a, res), res)):
        pairs.append((("in", u), ("out", k_addr + "R" * j + "L")))
    last = extras + len(blocks) + 1
    pairs.append((("out", k_addr + "R" * d), ("out", "R" * last)))
    return a2, pairs


def simple_to_iimll(n1: Net, n2: Net):
    _require_pair(n1, n2)
    a = n1.conclusion_formula()
    a2, pairs = iimll_adapter(a)
    ctx = rewiring_context(a, a2, pairs)
    n1, n2 = _plug_pair(ctx, n1, n2)
    _check_unequal(n1, n2, "tensor removal")
    return ctx, n1, n2


# -- instantiation -----------------------------------------------------------

def instantiate_net(net: Net, a: Formula) -> Net:
    """Replace the atom by `a` everywhere, then expand axioms to atomic ones."""
    out = net.copy()
    out.nodes = {n: PolarizedFormula(instantiate_formula(pf.formula, a), pf.polarity)
                 for n, pf in net.nodes.items()}
    return normalize(out)


# -- compositions ------------------------------------------------------------

@dataclass(frozen=True)
class CompositionExpr:
    """A variable applied to subexpressions; x variables have no arguments."""
    head: str
    args: tuple = ()

    def __str__(self):
        if not self.args:
            return self.head
        return f"{self.head}({', '.join(map(str, self.args))})"

    def variables(self):
        out = [self.head]
        for a in self.args:
            out.extend(a.variables())
        return out

    def positions(self, path=()):
        """Map variable -> (path of (head, argument index) pairs from the root)."""
        out = {self.head: path}
        for k, a in enumerate(self.args):
            out.update(a.positions(path + ((self.head, k),)))
        return out

    def at(self, path):
        e = self
        for _, k in path:
            e = e.args[k]
        return e


def variable_labels(a: Formula) -> list[str]:
    """G1, G2, ... for higher arguments and x1, x2, ... for atomic ones, left to right."""
    args, _ = uncurry(a)
    labels, g, x = [], 0, 0
    for ai in args:
        if isinstance(ai, Atom):
            x += 1
            labels.append(f"x{x}")
        else:
            g += 1
            labels.append(f"G{g}")
    return labels


def _check_low_order(a: Formula):
    if not is_iimll(a):
        raise SeparationError("compositions are read from implicational nets")
    if order(a) > 3:
        raise SeparationError(f"order {order(a)} is too high")


def extract_composition(net: Net) -> CompositionExpr:
    require_normal(net)
    a = net.conclusion_formula()
    _check_low_order(a)
    labels = variable_labels(a)
    root = net.positive_conclusion()
    top = {}
    v = root
    i = 0
    while net.producing(v).kind == PAR_POS:
        hyp, v = net.producing(v).premises
        top[hyp] = labels[i]
        i += 1

    def expr(v):
        node = net.producing(v).conclusions[1]
        args = []
        while True:
            l = net.consuming(node)
            if l is None or l.kind != TENSOR_NEG or l.premises[1] != node:
                break
            args.append(l.premises[0])
            node = l.conclusions[0]
        return CompositionExpr(top[node], tuple(expr(x) for x in reversed(args)))

    return expr(v)


def composition_net(expr: CompositionExpr, a: Formula) -> Net:
    """The net of `a` whose composition is `expr`."""
    _check_low_order(a)
    labels = variable_labels(a)

    def term(e):
        t = Var(e.head)
        for x in e.args:
            t = App(t, term(x))
        return t

    body = term(expr)
    for name in reversed(labels):
        body = Lam(name, body)
    return term_to_net(body, a)


# -- definable functions -----------------------------------------------------

@dataclass(frozen=True)
class FunctionTag:
    kind: str  # CONST_0, CONST_1, PROJ or NEG_PROJ
    k: int = 0

    def __str__(self):
        return self.kind if self.kind.startswith("CONST") else f"{self.kind}({self.k})"

    def apply(self, values):
        if self.kind == "CONST_0":
            return 0
        if self.kind == "CONST_1":
            return 1
        v = values[self.k - 1]
        return v if self.kind == "PROJ" else 1 - v


CONST_0 = FunctionTag("CONST_0")
CONST_1 = FunctionTag("CONST_1")


def PROJ(k):
    return FunctionTag("PROJ", k)


def NEG_PROJ(k):
    return FunctionTag("NEG_PROJ", k)


def definable_tags(n: int):
    return [CONST_0, CONST_1] + [PROJ(k) for k in range(1, n + 1)] + [NEG_PROJ(k) for k in range(1, n + 1)]


def _identity():
    return Lam("y", Var("y"))


def _apps(head, *args):
    t = head
    for a in args:
        t = App(t, a)
    return t


def definable_function_term(tag: FunctionTag, n: int):
    """Term of B^n -o B realizing `tag`.

    Arguments other than the selected one are absorbed by feeding them the
    point and two identities, which returns the point whatever the boolean.
    """
    if n < 1:
        raise SeparationError("definable functions take at least one argument")
    if tag.kind in ("PROJ", "NEG_PROJ") and not 1 <= tag.k <= n:
        raise SeparationError(f"projection index {tag.k} out of range 1..{n}")
    names = [f"F{i}" for i in range(1, n + 1)]
    selected = names[tag.k - 1] if tag.k else None
    point = Var("x")
    for name in names:
        if name != selected:
            point = _apps(Var(name), point, _identity(), _identity())
    f, g = Var("f"), Var("g")
    if tag.kind == "CONST_0":
        body = App(g, App(f, point))
    elif tag.kind == "CONST_1":
        body = App(f, App(g, point))
    elif tag.kind == "PROJ":
        body = _apps(Var(selected), point, f, g)
    elif tag.kind == "NEG_PROJ":
        body = _apps(Var(selected), point, g, f)
    else:
        raise SeparationError(f"unknown function tag {tag}")
    for name in reversed(names + ["x", "f", "g"]):
        body = Lam(name, body)
    return body


def definable_function_net(tag: FunctionTag, n: int) -> Net:
    return term_to_net(definable_function_term(tag, n), bool_fun_type(n))


def parse_tag(text: str) -> FunctionTag:
    text = text.strip()
    if text in ("CONST_0", "CONST_1"):
        return FunctionTag(text)
    for kind in ("NEG_PROJ", "PROJ"):
        if text.startswith(kind + "(") and text.endswith(")"):
            return FunctionTag(kind, int(text[len(kind) + 1:-1]))
    raise SeparationError(f"unknown function tag {text!r}")


# -- assignments -------------------------------------------------------------

@dataclass
class Assignment:
    functions: dict = field(default_factory=dict)  # G label -> FunctionTag
    values: dict = field(default_factory=dict)     # x label -> 0 or 1
    rule: str = ""

    def __str__(self):
        parts = [f"{k}={v}" for k, v in sorted(self.values.items(), key=_label_key)]
        parts += [f"{k}={v}" for k, v in sorted(self.functions.items(), key=_label_key)]
        return ", ".join(parts)


def _label_key(item):
    name = item[0]
    return name[0], int(name[1:])


def evaluate(expr: CompositionExpr, asg: Assignment) -> int:
    if not expr.args:
        return asg.values[expr.head]
    return asg.functions[expr.head].apply([evaluate(a, asg) for a in expr.args])


def _fill_defaults(asg, exprs):
    for e in exprs:
        for v in e.variables():
            if v.startswith("x"):
                asg.values.setdefault(v, 0)
            else:
                asg.functions.setdefault(v, CONST_0)
    return asg


def _project_path(asg, path):
    for head, k in path:
        asg.functions[head] = PROJ(k + 1)


def _case_one(f1, f2):
    """A variable applied to different atomic arguments at the same position."""
    pos1 = f1.positions()
    found = []
    for g, path in pos1.items():
        if g.startswith("x"):
            continue
        e1 = f1.at(path)
        e2 = f2.at(f2.positions()[g])
        for k, (u, v) in enumerate(zip(e1.args, e2.args)):
            if not u.args and not v.args and u.head != v.head:
                found.append((len(path), _label_key((g,)), g, k, u.head, v.head))
    if not found:
        return None
    _, _, g, k, x1, x2 = min(found)
    asg = Assignment(rule="different arguments")
    _project_path(asg, pos1[g] + ((g, k),))
    asg.values[x1] = 0
    asg.values[x2] = 1
    return _fill_defaults(asg, (f1, f2))


def _case_two(f1, f2):
    """A variable sitting at different positions: make the shallowest one constant 1."""
    pos1, pos2 = f1.positions(), f2.positions()
    moved = [g for g in pos1 if g.startswith("G") and pos1[g] != pos2[g]]
    if not moved:
        return None, None
    # ties go to the second expression, so the assignment already reads (0, 1)
    cands = [(len(pos2[g]), 0, _label_key((g,)), g, 2) for g in moved]
    cands += [(len(pos1[g]), 1, _label_key((g,)), g, 1) for g in moved]
    *_, g, side = min(cands)
    path = (pos1 if side == 1 else pos2)[g]
    asg = Assignment(rule="different positions")
    _project_path(asg, path)
    asg.functions[g] = CONST_1
    _fill_defaults(asg, (f1, f2))
    return asg, ((1, 0) if side == 1 else (0, 1))


def _first_difference(f1, f2):
    """Project both expressions down to where they first differ."""
    path = []
    a, b = f1, f2
    while a.head == b.head:
        k = next(k for k, (u, v) in enumerate(zip(a.args, b.args)) if u != v)
        path.append((a.head, k))
        a, b = a.args[k], b.args[k]
    asg = Assignment(rule="first difference")
    _project_path(asg, path)
    if b.args:
        asg.functions[b.head] = CONST_1
    else:
        asg.values[b.head] = 1
    return _fill_defaults(asg, (f1, f2))


def choose_assignment(f1: CompositionExpr, f2: CompositionExpr):
    """Return (assignment, (value of f1, value of f2)) with distinct values.

    The two rules of the classic argument are tried first; when the path
    they rely on is not shared by both expressions, the assignment is taken
    from the first point where the expression trees differ.
    """
    if f1 == f2:
        raise SeparationError("expressions are equal")
    if sorted(f1.variables()) != sorted(f2.variables()):
        raise SeparationError("expressions use different variables")
    candidates = []
    asg = _case_one(f1, f2)
    if asg is not None:
        candidates.append(asg)
    else:
        asg, _ = _case_two(f1, f2)
        if asg is not None:
            candidates.append(asg)
    candidates.append(_first_difference(f1, f2))
    for asg in candidates:
        got = (evaluate(f1, asg), evaluate(f2, asg))
        if got[0] != got[1]:
            return asg, got
    raise AssertionError("no separating assignment found")


def assignment_context(a: Formula, asg: Assignment, base: Formula = BOOL) -> Net:
    """Context on the instantiated type of `a` that applies the hole to the assignment."""
    _check_low_order(a)
    args, _ = uncurry(a)
    nets = []
    for label, ai in zip(variable_labels(a), args):
        if label.startswith("x"):
            if label not in asg.values:
                raise SeparationError(f"no value for {label}")
            nets.append(boolean_nets(base)[asg.values[label]])
        else:
            if label not in asg.functions:
                raise SeparationError(f"no function for {label}")
            n = len(uncurry(ai)[0])
            tag = asg.functions[label]
            if tag.k > n:
                raise SeparationError(f"{label} takes {n} arguments, {tag} does not fit")
            nets.append(definable_function_net(tag, n))
    return apply_all(make_hole(instantiate_formula(a, base)), nets)


def negation_context() -> Net:
    return apply_net(definable_function_net(NEG_PROJ(1), 1), make_hole(BOOL))


# -- end to end --------------------------------------------------------------

@dataclass
class Separation:
    context: Net
    stages: list        # (name, conclusion) after each stage
    compositions: tuple
    assignment: Assignment
    negated: bool
    results: tuple      # values of the two plugged nets


def separate(t1: Net, t2: Net) -> Separation:
    """Context C with C[t1[B/p]] normalizing to 0 and C[t2[B/p]] to 1."""
    for t in (t1, t2):
        if t.holes():
            raise SeparationError("nets must not contain holes")
    n1, n2 = normalize(t1), normalize(t2)
    _require_pair(n1, n2)
    a = n1.conclusion_formula()
    stages = [("input", format_imp(a))]
    ctx = make_hole(a)
    if not is_iimll(a):
        step, n1, n2 = to_simple(n1, n2)
        ctx = compose(step, ctx)
        stages.append(("simple", format_imp(n1.conclusion_formula())))
        step, n1, n2 = simple_to_iimll(n1, n2)
        ctx = compose(step, ctx)
        stages.append(("implicational", format_imp(n1.conclusion_formula())))
    if order(n1.conclusion_formula()) > 3:
        step, n1, n2 = reduce_order(n1, n2)
        ctx = compose(step, ctx)
        stages.append(("order", format_imp(n1.conclusion_formula())))
    f1, f2 = extract_composition(n1), extract_composition(n2)
    asg, got = choose_assignment(f1, f2)
    final = assignment_context(n1.conclusion_formula(), asg)
    final = compose(final, instantiate_net(ctx, BOOL))
    negated = got == (1, 0)
    if negated:
        final = compose(negation_context(), final)
    final = normalize(final)
    if validate_structure(final) or not dr_check(final):
        raise AssertionError("separating context is not a net")
    results = verify(final, t1, t2)
    if results != (0, 1):
        raise AssertionError(f"separation produced {results}")
    return Separation(final, stages, (f1, f2), asg, negated, results)


def verify(ctx: Net, t1: Net, t2: Net) -> tuple:
    """Boolean values of the context applied to both nets instantiated at B."""
    return tuple(read_boolean(plug(ctx, instantiate_net(t, BOOL))) for t in (t1, t2))
