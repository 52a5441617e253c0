import random

import pytest
from generators import eta_cut, nets_of, random_cut_net

from imllnets.context import apply_net
from imllnets.formula import BOOL, Lolli, P, Tensor, connectives, parse_type
from imllnets.lam import boolean_nets, parse_term, term_to_net
from imllnets.net import CUT, ID, PAR_POS, TENSOR_NEG, Net, NetError, dr_check, same_structure, validate_structure
from imllnets.rewrite import (
    ETA_1, ETA_2, ID_RULE, MULT_1, MULT_2, Redex, apply_rule, eta_expand_max, find_redexes,
    format_trace, identity_net, is_normal, normalize, sn_size,
)

PP = Lolli(P, P)


def count(net, kind):
    return sum(l.kind == kind for l in net.links.values())


def atomic_cut():
    net = Net()
    a, b = net.add_id(P)
    c, d = net.add_id(P)
    net.add_cut(a, d)
    return net


def test_sn_size_examples():
    assert sn_size(identity_net(P)) == 0
    assert sn_size(atomic_cut()) == 1
    assert sn_size(identity_net(PP)) == 1


def test_find_redexes_examples():
    assert find_redexes(boolean_nets()[0]) == []
    (r,) = find_redexes(atomic_cut())
    assert r.rule == ID_RULE
    (r,) = find_redexes(identity_net(PP))
    assert r.rule == ETA_1
    (r,) = find_redexes(identity_net(Tensor(P, P)))
    assert r.rule == ETA_2


def test_axiom_cut_is_identity():
    zero = boolean_nets()[0]
    net = eta_cut(zero)
    rs = find_redexes(net)
    first = next(r for r in rs if r.rule == ID_RULE)
    assert same_structure(apply_rule(net, first), zero)


def test_eta_shape():
    net = apply_rule(identity_net(PP), find_redexes(identity_net(PP))[0])
    assert count(net, ID) == 2 and count(net, PAR_POS) == 1 and count(net, TENSOR_NEG) == 1
    assert dr_check(net)
    assert all(net.formula(l.conclusions[0]) == P for l in net.links.values() if l.kind == ID)


def test_mult_shape():
    ident = term_to_net(parse_term("\\x. x"), PP)
    arg = term_to_net(parse_term("\\x. x"), PP)
    net = apply_net(term_to_net(parse_term("\\h. h"), Lolli(PP, PP)), arg)
    net = normalize(net)
    assert same_structure(net, ident)
    # one multiplicative step by hand
    fun = term_to_net(parse_term("\\x. x"), PP)
    a = Net()
    pos, neg = a.add_id(P)
    cut_net = Net()
    rf = cut_net.absorb(fun)
    ra = cut_net.absorb(a)
    out_pos, out_neg = cut_net.add_id(P)
    app = cut_net.add_binary(TENSOR_NEG, ra[pos], out_neg)
    cut_net.add_cut(rf[fun.positive_conclusion()], app)
    (r,) = [r for r in find_redexes(cut_net) if r.rule == MULT_1]
    before = sn_size(cut_net)
    after = apply_rule(cut_net, r)
    assert count(after, CUT) == 2
    assert sn_size(after) == before
    assert validate_structure(after) == [] and dr_check(after)


def test_mult_2_fires_on_tensors():
    net = Net()
    a, b = net.add_id(Tensor(P, P))
    c, d = net.add_id(Tensor(P, P))
    net.add_cut(a, d)
    for _ in range(2):
        net = apply_rule(net, next(r for r in find_redexes(net) if r.rule in (ETA_2,)))
    rules = {r.rule for r in find_redexes(net)}
    assert MULT_2 in rules


def test_stale_redex():
    net = identity_net(PP)
    with pytest.raises(NetError):
        apply_rule(net, Redex(ID_RULE, 0, 0))


def test_negation_by_application():
    neg = term_to_net(parse_term("\\F x f g. F x g f"), Lolli(BOOL, BOOL))
    zero, one = boolean_nets()
    assert same_structure(normalize(apply_net(neg, zero)), one)
    assert same_structure(normalize(apply_net(neg, one)), zero)


def test_idempotent_and_already_normal():
    zero = boolean_nets()[0]
    assert same_structure(normalize(zero), zero)
    rng = random.Random(4)
    for _ in range(50):
        n = normalize(random_cut_net(rng))
        assert is_normal(n)
        assert same_structure(normalize(n), n)


def test_eta_expand_max():
    assert same_structure(eta_expand_max(P), identity_net(P))
    net = eta_expand_max(PP)
    assert count(net, PAR_POS) == 1 and count(net, TENSOR_NEG) == 1 and count(net, ID) == 2
    net = eta_expand_max(BOOL)
    binary = len(net.links) - count(net, ID)
    assert binary == 2 * connectives(BOOL)
    assert count(net, ID) == connectives(BOOL) + 1
    assert dr_check(net) and is_normal(net)


def test_cut_against_expansion_contracts():
    """A normal net cut against the maximal expansion of its type normalizes back to itself."""
    for a in (BOOL, Lolli(BOOL, BOOL), parse_type("p -o (p@p) -o ((p -o p*p)*(p*p))").formula):
        for n in nets_of(a)[:12]:
            exp = eta_expand_max(a)
            net = Net()
            rn = net.absorb(n)
            re_ = net.absorb(exp)
            neg = next(x for x in exp.conclusions() if exp.polarity(x) == "-")
            net.add_cut(rn[n.positive_conclusion()], re_[neg])
            assert same_structure(normalize(net), n)


def test_traces():
    trace = []
    normalize(eta_cut(boolean_nets()[1]), trace=trace)
    assert [t[0] for t in trace] == list(range(1, len(trace) + 1))
    assert trace[-1][2] == 0
    text = format_trace(trace)
    assert text.splitlines()[0].startswith("step 1 rule=")
    tsv = format_trace(trace, tsv=True).splitlines()
    assert tsv[0] == "step\trule\tsn_size" and len(tsv) == len(trace) + 1


def test_trace_sizes_match_recount():
    """Replay a random strategy step by step; the traced sizes are the real ones."""
    rng = random.Random(8)
    for _ in range(100):
        net = random_cut_net(rng)
        seed = rng.random()
        trace = []
        normalize(net, strategy="random", rng=random.Random(seed), trace=trace)
        replay = random.Random(seed)
        cur = net
        for step, rule, size in trace:
            rs = find_redexes(cur)
            r = rs[replay.randrange(len(rs))]
            assert r.rule == rule
            cur = apply_rule(cur, r)
            assert validate_structure(cur) == [] and dr_check(cur, "contract")
            assert sn_size(cur) == size
        assert is_normal(cur) and trace[-1][2] == 0


def test_lexicographic_decrease():
    """(sn_size, number of links) drops at every step, whatever the redex choice."""
    rng = random.Random(17)
    for _ in range(300):
        cur = random_cut_net(rng)
        key = (sn_size(cur), len(cur.links))
        while True:
            rs = find_redexes(cur)
            if not rs:
                break
            cur = apply_rule(cur, rng.choice(rs))
            new = (sn_size(cur), len(cur.links))
            assert new < key
            key = new


def test_not_one_step_confluent():
    """ID rule and eta expansion on the same axiom diverge and need several steps to meet."""
    ident = normalize(identity_net(PP))
    closed = Net()
    r = closed.absorb(ident)
    closed.add_binary(PAR_POS, r[ident.conclusions()[1]], r[ident.conclusions()[0]])
    net = eta_cut(closed)
    rules = {r.rule: r for r in find_redexes(net)}
    assert set(rules) == {ID_RULE, ETA_1}
    left = apply_rule(net, rules[ID_RULE])
    right = apply_rule(net, rules[ETA_1])
    assert is_normal(left)
    assert not same_structure(left, right)
    one_step = [apply_rule(right, r) for r in find_redexes(right)]
    assert not any(same_structure(x, left) for x in one_step)
    trace = []
    assert same_structure(normalize(right, trace=trace), left)
    assert len(trace) > 1


@pytest.mark.parametrize("seed", range(5))
def test_confluence_random(seed):
    rng = random.Random(seed)
    for _ in range(100):
        net = random_cut_net(rng)
        a = normalize(net, strategy="random", rng=random.Random(rng.random()))
        b = normalize(net, strategy="random", rng=random.Random(rng.random()))
        assert same_structure(a, b)
        assert same_structure(a, normalize(net))


def test_unknown_strategy():
    with pytest.raises(ValueError):
        normalize(identity_net(P), strategy="fastest")
