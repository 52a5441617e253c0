"""One-hole contexts: plugging, composition and application."""

from __future__ import annotations

from .formula import Formula, Lolli, POS
from .net import Net, NetError, TENSOR_NEG, dr_check, validate_structure


def make_hole(a: Formula) -> Net:
    net = Net()
    net.add_hole(a)
    return net


def hole_node(ctx: Net) -> int:
    holes = ctx.holes()
    if len(holes) != 1:
        raise NetError(f"a context has exactly one hole, found {len(holes)}")
    return ctx.links[holes[0]].conclusions[0]


def hole_type(ctx: Net) -> Formula:
    return ctx.formula(hole_node(ctx))


def is_context(net: Net) -> bool:
    if len(net.holes()) != 1 or validate_structure(net):
        return False
    return dr_check(net) and len(net.conclusions()) == 1 and net.polarity(net.conclusions()[0]) == POS


def _fill(ctx: Net, net: Net) -> Net:
    h = hole_node(ctx)
    root = net.positive_conclusion()
    if ctx.formula(h) != net.formula(root):
        raise NetError("type mismatch between hole and plugged net")
    out = ctx.copy()
    ren = out.absorb(net)
    out.remove_link(out.producer[h])
    user = out.consumer.get(h)
    if user is not None:
        l = out.remove_link(user)
        prem = tuple(ren[root] if n == h else n for n in l.premises)
        out.add_link(l.kind, prem, l.conclusions, link_id=user)
    out.remove_node(h)
    return out


def plug(ctx: Net, net: Net) -> Net:
    """Replace the hole of `ctx` by the closed net `net`."""
    if len(net.conclusions()) != 1:
        raise NetError("only closed nets can be plugged")
    if net.holes():
        raise NetError("plugged net must not contain a hole")
    return _fill(ctx, net)


def compose(outer: Net, inner: Net) -> Net:
    """Context whose plugging equals plugging `inner` then `outer`."""
    if len(inner.holes()) != 1:
        raise NetError("inner argument must be a context")
    if hole_type(outer) != inner.conclusion_formula():
        raise NetError("outer hole type differs from inner conclusion")
    return _fill(outer, inner)


def apply_net(fun: Net, arg: Net) -> Net:
    """Application of a net of A -o C to a net of A, before normalization.

    The argument's conclusion and a fresh axiom on C meet in a TENSOR_NEG
    link whose conclusion is cut against the function.  Either side may be
    a context.
    """
    f = fun.conclusion_formula()
    a = arg.conclusion_formula()
    if not isinstance(f, Lolli) or f.left != a:
        raise NetError("argument type does not match the function")
    out = Net()
    rf = out.absorb(fun)
    ra = out.absorb(arg)
    c_pos, c_neg = out.add_id(f.right)
    app = out.add_binary(TENSOR_NEG, ra[arg.positive_conclusion()], c_neg)
    out.add_cut(rf[fun.positive_conclusion()], app)
    return out


def apply_all(fun: Net, args) -> Net:
    for a in args:
        fun = apply_net(fun, a)
    return fun
