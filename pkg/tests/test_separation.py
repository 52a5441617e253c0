import itertools
import re

import pytest

from imllnets.analysis import equal, measure_lolli
from imllnets.context import hole_type, is_context, plug
from imllnets.formula import (
    BOOL, Lolli, P, bool_fun_type, instantiate_formula, is_iimll, is_simple, leaf_addresses,
    order, parse_type,
)
from imllnets.lam import boolean_nets, enumerate_normal, read_boolean, truth_table
from imllnets.net import dr_check, validate_structure
from imllnets.rewrite import normalize
from imllnets.separation import (
    CONST_0, CONST_1, NEG_PROJ, PROJ, Assignment, CompositionExpr, SeparationError,
    assignment_context, choose_assignment, composition_net, definable_function_net,
    definable_tags, evaluate, extract_composition, hoist, hoist_context, iimll_adapter,
    instantiate_net, misplaced_par, negation_context, parse_tag, reduce_order,
    rewiring_context, separate, simple_to_iimll, third_order_target, to_simple,
    variable_labels, verify,
)

HIGH_ORDER = [
    "((p -o p) -o p) -o (p -o p) -o p",
    "((p -o p) -o p -o p) -o (p -o p) -o p -o p",
    "((p -o p) -o p) -o (p -o p) -o (p -o p) -o p",
    "B -o B",
    "(B -o p) -o p",
    "(((p -o p) -o p) -o p) -o ((p -o p) -o p) -o p",
]
IMLL = ["p -o (p@p) -o ((p -o p*p)*(p*p))", "p -o p -o p*p", "(p@p) -o p*p", "p -o (p -o p*p)*p"]


def expr(text):
    """Parse G1(G2(x1), x2) style compositions."""
    toks = re.findall(r"[A-Za-z]+\d+|[(),]", text)
    pos = 0

    def go():
        nonlocal pos
        head = toks[pos]
        pos += 1
        args = []
        if pos < len(toks) and toks[pos] == "(":
            pos += 1
            while True:
                args.append(go())
                pos += 1
                if toks[pos - 1] == ")":
                    break
        return CompositionExpr(head, tuple(args))

    return go()


def ty(text):
    return parse_type(text).formula


def test_hoist_moves_left_premise_out():
    a = ty("p -o (p -o p*p)*(p*p)")
    addr = misplaced_par(a)
    assert addr == "RL"
    a2, amap = hoist(a, addr)
    assert a2 == ty("p -o p -o (p*p)*(p*p)")
    assert sorted(amap.values()) == sorted(leaf_addresses(a2))
    ctx = hoist_context(a, addr)
    assert is_context(ctx) and hole_type(ctx) == a
    with pytest.raises(SeparationError):
        hoist(a, "")


def test_rewiring_rejects_bad_pairs():
    with pytest.raises(AssertionError):
        rewiring_context(Lolli(P, P), Lolli(P, P), [(("in", "L"), ("out", "L"))])
    with pytest.raises(AssertionError):
        # crossing the wires of p -o p against itself is not a net
        rewiring_context(Lolli(P, P), Lolli(P, P), [(("in", "L"), ("in", "R")), (("out", "L"), ("out", "R"))])


def test_third_order_target():
    assert third_order_target(BOOL) is None
    assert third_order_target(bool_fun_type(1)) == "LRL"
    assert third_order_target(ty("p -o ((p -o p) -o p) -o p")) == "RLL"


@pytest.mark.parametrize("text", HIGH_ORDER)
def test_reduce_order(text):
    nets = enumerate_normal(ty(text))
    assert len(nets) >= 2
    for n1, n2 in itertools.combinations(nets, 2):
        log = []
        ctx, m1, m2 = reduce_order(n1, n2, log)
        assert order(m1.conclusion_formula()) <= 3
        assert log and all(k1 < a1 and k2 < a2 for _, (a1, k1), (a2, k2) in log)
        assert not equal(m1, m2)
        assert equal(normalize(plug(ctx, n1)), m1)
        assert measure_lolli(m1) < measure_lolli(n1)


def test_reduce_order_rejects_equal_pair():
    n = enumerate_normal(bool_fun_type(1))[0]
    with pytest.raises(SeparationError):
        reduce_order(n, n)


def test_adapter_example():
    a = ty("p -o p -o (p @ p) -o ((p*p)*(p*p))")
    a2, _ = iimll_adapter(a)
    assert a2 == ty("p -o p -o p -o p -o (p -o p -o p -o p -o p) -o p")
    with pytest.raises(SeparationError):
        iimll_adapter(ty("p -o (p -o p*p)*(p*p)"))


@pytest.mark.parametrize("text", IMLL)
def test_tensor_removal(text):
    nets = enumerate_normal(ty(text))
    for n1, n2 in itertools.combinations(nets, 2):
        _, s1, s2 = to_simple(n1, n2)
        assert is_simple(s1.conclusion_formula()) and not equal(s1, s2)
        _, i1, i2 = simple_to_iimll(s1, s2)
        a = i1.conclusion_formula()
        assert is_iimll(a) and order(a) < 4
        assert not equal(i1, i2)


def test_instantiate_net():
    zero = boolean_nets()[0]
    big = instantiate_net(zero, BOOL)
    assert big.conclusion_formula() == instantiate_formula(BOOL, BOOL)
    assert validate_structure(big) == [] and dr_check(big, "contract")


def test_composition_of_booleans():
    assert variable_labels(BOOL) == ["x1", "G1", "G2"]
    zero, one = boolean_nets()
    assert str(extract_composition(zero)) == "G2(G1(x1))"
    assert str(extract_composition(one)) == "G1(G2(x1))"
    e = expr("G2(G1(x1))")
    assert equal(composition_net(e, BOOL), zero)


def test_composition_roundtrip():
    a = ty("p -o p -o (p -o p -o p) -o (p -o p) -o p")
    for n in enumerate_normal(a):
        assert equal(composition_net(extract_composition(n), a), n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_definable_functions(n):
    tables = set()
    inputs = list(itertools.product((0, 1), repeat=n))
    for tag in definable_tags(n):
        net = definable_function_net(tag, n)
        table = truth_table(net, n)
        assert table == tuple(tag.apply(cs) for cs in inputs)
        tables.add(table)
    assert len(tables) == 2 * n + 2


def test_parse_tag():
    assert parse_tag("PROJ(2)") == PROJ(2)
    assert parse_tag("NEG_PROJ(1)") == NEG_PROJ(1)
    assert parse_tag("CONST_1") == CONST_1
    with pytest.raises(SeparationError):
        parse_tag("XOR")


def test_different_arguments_example():
    f1 = expr("G1(G2(x5,G4(x4,x3)),G3(x2,x1))")
    f2 = expr("G1(G2(x5,G4(x1,x3)),G3(x2,x4))")
    asg, got = choose_assignment(f1, f2)
    assert got == (0, 1)
    assert asg.values == {"x1": 0, "x2": 0, "x3": 0, "x4": 1, "x5": 0}
    assert asg.functions == {"G1": PROJ(2), "G2": CONST_0, "G3": PROJ(2), "G4": CONST_0}


def test_different_positions_example():
    # H1, H2, H3 of the worked example are G4, G5, G6 here
    f1 = expr("G1(G6(x4),G2(G5(G4(x3)),G3(x2,x1)))")
    f2 = expr("G1(G6(x4),G2(G5(G3(x2,x1)),G4(x3)))")
    asg, got = choose_assignment(f1, f2)
    assert got == (0, 1)
    assert asg.rule == "different positions"
    assert asg.functions == {"G1": PROJ(2), "G2": PROJ(2), "G3": CONST_0,
                             "G4": CONST_1, "G5": CONST_0, "G6": CONST_0}
    assert set(asg.values.values()) == {0}


def test_assignment_errors():
    with pytest.raises(SeparationError):
        choose_assignment(expr("G1(x1)"), expr("G1(x1)"))
    with pytest.raises(SeparationError):
        choose_assignment(expr("G1(x1)"), expr("G1(x2)"))
    asg = Assignment({"G1": CONST_0}, {})
    with pytest.raises(SeparationError):
        assignment_context(ty("p -o (p -o p) -o p"), asg)


def test_evaluate():
    asg = Assignment({"G1": NEG_PROJ(1)}, {"x1": 0})
    assert evaluate(expr("G1(x1)"), asg) == 1


def test_negation_context():
    ctx = negation_context()
    zero, one = boolean_nets()
    assert read_boolean(plug(ctx, zero)) == 1
    assert read_boolean(plug(ctx, one)) == 0


def test_separate_booleans():
    zero, one = boolean_nets()
    res = separate(zero, one)
    assert res.results == (0, 1)
    assert verify(res.context, zero, one) == (0, 1)
    res = separate(one, zero)
    assert res.results == (0, 1)
    assert is_context(res.context)


def test_separate_sample_of_functions():
    nets = enumerate_normal(bool_fun_type(1))
    for n1, n2 in list(itertools.combinations(nets, 2))[::19]:
        assert separate(n1, n2).results == (0, 1)


def test_separate_tensor_type():
    nets = enumerate_normal(ty(IMLL[0]))
    res = separate(nets[0], nets[5])
    names = [name for name, _ in res.stages]
    assert names[:3] == ["input", "simple", "implicational"]
    assert res.results == (0, 1)


def test_separate_preconditions():
    zero, one = boolean_nets()
    with pytest.raises(SeparationError):
        separate(zero, zero)
    with pytest.raises(SeparationError):
        separate(zero, enumerate_normal(ty("p -o p"))[0])


@pytest.mark.parametrize("text", HIGH_ORDER[:3] + HIGH_ORDER[4:])
def test_separate_high_order(text):
    nets = enumerate_normal(ty(text))
    for n1, n2 in itertools.permutations(nets, 2):
        res = separate(n1, n2)
        assert res.stages[-1][0] == "order"
        assert res.results == (0, 1)
