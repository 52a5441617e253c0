import itertools

import pytest

from imllnets.analysis import equal
from imllnets.context import apply_all, apply_net, compose, hole_node, hole_type, is_context, make_hole, plug
from imllnets.formula import BOOL, Lolli, P
from imllnets.lam import boolean_nets, enumerate_normal, parse_term, read_boolean, term_to_net
from imllnets.net import HOLE, Net, NetError, dr_check, same_structure
from imllnets.rewrite import identity_net, normalize

NEG_TERM = "\\F x f g. F x g f"


def neg_net():
    return term_to_net(parse_term(NEG_TERM), Lolli(BOOL, BOOL))


def test_bare_hole():
    ctx = make_hole(BOOL)
    assert is_context(ctx)
    assert hole_type(ctx) == BOOL
    zero = boolean_nets()[0]
    assert same_structure(plug(ctx, zero), zero)


def test_application_context():
    ctx = apply_net(neg_net(), make_hole(BOOL))
    assert is_context(ctx)
    zero, one = boolean_nets()
    assert read_boolean(plug(ctx, zero)) == 1
    assert read_boolean(plug(ctx, one)) == 0


def test_compose_matches_sequential_plugging():
    inner = apply_net(neg_net(), make_hole(BOOL))
    outer = apply_net(neg_net(), make_hole(BOOL))
    both = compose(outer, inner)
    assert is_context(both) and len(both.holes()) == 1
    for b in boolean_nets():
        once = normalize(plug(both, b))
        twice = normalize(plug(outer, normalize(plug(inner, b))))
        assert equal(once, twice)
        assert equal(once, b)


def test_hole_as_function_argument():
    fun = enumerate_normal(Lolli(BOOL, BOOL))
    for f, b in itertools.product(fun, boolean_nets()):
        ctx = apply_net(f, make_hole(BOOL))
        assert dr_check(ctx)
        assert equal(normalize(plug(ctx, b)), normalize(apply_net(f, b)))


def test_context_in_function_position():
    ctx = apply_all(make_hole(Lolli(BOOL, BOOL)), [boolean_nets()[1]])
    assert is_context(ctx)
    assert read_boolean(plug(ctx, neg_net())) == 0


def test_errors():
    with pytest.raises(NetError):
        plug(make_hole(BOOL), identity_net(P))
    with pytest.raises(NetError):
        plug(make_hole(Lolli(P, P)), boolean_nets()[0])
    with pytest.raises(NetError):
        apply_net(neg_net(), term_to_net(parse_term("\\x. x"), Lolli(P, P)))
    with pytest.raises(NetError):
        compose(make_hole(BOOL), boolean_nets()[0])
    with pytest.raises(NetError):
        hole_node(Net())
    assert not is_context(boolean_nets()[0])


def test_hole_link_kind():
    ctx = make_hole(BOOL)
    (lid,) = ctx.holes()
    assert ctx.links[lid].kind == HOLE
