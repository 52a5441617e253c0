"""Cut elimination and eta expansion on nets."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .formula import Atom, Formula, Lolli, NEG, POS, connectives
from .net import (
    CUT, ID, PAR_NEG, PAR_POS, TENSOR_NEG, TENSOR_POS, Net, NetError,
)

ID_RULE, MULT_1, MULT_2, ETA_1, ETA_2 = "ID_RULE", "MULT_1", "MULT_2", "ETA_1", "ETA_2"
PRIORITY = {ID_RULE: 0, MULT_1: 1, MULT_2: 1, ETA_1: 2, ETA_2: 2}


@dataclass(frozen=True, order=True)
class Redex:
    rule: str
    link: int   # the CUT link for ID_RULE/MULT, the ID link for ETA
    key: int    # smallest participating node id

    def sort_key(self):
        return (PRIORITY[self.rule], self.key, self.link)


def sn_size(net: Net) -> int:
    total = 0
    for l in net.links.values():
        if l.kind == ID:
            total += connectives(net.formula(l.conclusions[0]))
        elif l.kind == CUT:
            total += connectives(net.formula(l.premises[0])) + 1
    return total


def classify_link(net: Net, lid: int):
    """The rule that fires on link `lid`, or None."""
    l = net.links.get(lid)
    if l is None:
        return None
    if l.kind == ID:
        f = net.formula(l.conclusions[0])
        if isinstance(f, Atom):
            return None
        return ETA_1 if isinstance(f, Lolli) else ETA_2
    if l.kind != CUT:
        return None
    a, b = l.premises
    ka, kb = net.producing(a).kind, net.producing(b).kind
    if ka == ID or kb == ID:
        return ID_RULE
    if ka == PAR_POS and kb == TENSOR_NEG:
        return MULT_1
    if ka == TENSOR_POS and kb == PAR_NEG:
        return MULT_2
    return None  # a cut against a hole is stuck


def _redex(net, lid):
    rule = classify_link(net, lid)
    if rule is None:
        return None
    l = net.links[lid]
    return Redex(rule, lid, min(l.nodes()))


def find_redexes(net: Net) -> list[Redex]:
    found = (_redex(net, lid) for lid in net.links)
    return sorted((r for r in found if r), key=Redex.sort_key)


def is_normal(net: Net) -> bool:
    return not find_redexes(net) and not any(l.kind == CUT for l in net.links.values())


def _replace_conclusion(net, lid, old, new):
    l = net.links[lid]
    concl = tuple(new if n == old else n for n in l.conclusions)
    net.remove_link(lid)
    net.add_link(l.kind, l.premises, concl, link_id=lid)


def _fire(net: Net, r: Redex):
    """Apply `r` in place; return the ids of links worth re-examining."""
    l = net.links[r.link]
    touched = []
    if r.rule == ID_RULE:
        a, b = l.premises
        pb = net.producer[b]
        if net.links[pb].kind == ID:
            idl, keep_side, gone = pb, a, b
            other = net.links[pb].conclusions[0]       # c+ survives
        else:
            idl, keep_side, gone = net.producer[a], b, a
            other = net.links[idl].conclusions[1]      # d- survives
        if idl == net.producer[keep_side]:
            raise NetError("cut between the two conclusions of one axiom")
        net.remove_link(r.link)
        net.remove_link(idl)
        _replace_conclusion(net, net.producer[keep_side], keep_side, other)
        net.remove_node(keep_side)
        net.remove_node(gone)
        if other in net.consumer:
            touched.append(net.consumer[other])
        return touched
    if r.rule in (MULT_1, MULT_2):
        a, b = l.premises
        la, lb = net.producer[a], net.producer[b]
        a1, a2 = net.links[la].premises
        b1, b2 = net.links[lb].premises
        for lid in (r.link, la, lb):
            net.remove_link(lid)
        net.remove_node(a)
        net.remove_node(b)
        if r.rule == MULT_1:
            pairs = [(b1, a1), (a2, b2)]
        else:
            pairs = [(a1, b1), (a2, b2)]
        return [net.add_cut(x, y) for x, y in pairs]
    # eta expansion keeps both conclusion ids
    c, d = l.conclusions
    f = net.formula(c)
    net.remove_link(r.link)
    if r.rule == ETA_1:
        x1 = net.new_node(f.left, NEG)
        x2 = net.new_node(f.right, POS)
        y1 = net.new_node(f.left, POS)
        y2 = net.new_node(f.right, NEG)
        net.add_link(PAR_POS, (x1, x2), (c,))
        net.add_link(TENSOR_NEG, (y1, y2), (d,))
        touched.append(net.add_link(ID, (), (y1, x1)))
        touched.append(net.add_link(ID, (), (x2, y2)))
    else:
        x1 = net.new_node(f.left, POS)
        x2 = net.new_node(f.right, POS)
        y1 = net.new_node(f.left, NEG)
        y2 = net.new_node(f.right, NEG)
        net.add_link(TENSOR_POS, (x1, x2), (c,))
        net.add_link(PAR_NEG, (y1, y2), (d,))
        touched.append(net.add_link(ID, (), (x1, y1)))
        touched.append(net.add_link(ID, (), (x2, y2)))
    for n in (c, d):
        if n in net.consumer:
            touched.append(net.consumer[n])
    return touched


def apply_rule(net: Net, r: Redex) -> Net:
    """One rewrite step on a copy of `net`."""
    if classify_link(net, r.link) != r.rule:
        raise NetError(f"stale redex {r}")
    out = net.copy()
    _fire(out, r)
    return out


SN_DELTA = {MULT_1: 0, MULT_2: 0, ETA_1: -1, ETA_2: -1}


def _delta(net, r):
    if r.rule == ID_RULE:
        s = connectives(net.formula(net.links[r.link].premises[0]))
        return -(2 * s + 1)
    return SN_DELTA[r.rule]


def normalize(net: Net, strategy: str = "default", rng=None, trace=None) -> Net:
    """Rewrite until no redex is left.

    `strategy` is "default" (ID rule first, then multiplicative, then eta,
    each lowest node id first) or "random" (uniform among all redexes,
    drawn from `rng`).  If `trace` is a list, (step, rule, sn_size) tuples
    are appended after each step.
    """
    out = net.copy()
    size = sn_size(out) if trace is not None else 0
    step = 0

    def fire(r):
        nonlocal size, step
        step += 1
        if trace is not None:
            size += _delta(out, r)
        touched = _fire(out, r)
        if trace is not None:
            trace.append((step, r.rule, size))
        return touched

    if strategy == "random":
        while True:
            rs = find_redexes(out)
            if not rs:
                return out
            fire(rs[rng.randrange(len(rs))])
    if strategy != "default":
        raise ValueError(f"unknown strategy {strategy!r}")

    heap = []

    def push(lid):
        r = _redex(out, lid)
        if r:
            heapq.heappush(heap, (r.sort_key(), r))

    for lid in list(out.links):
        push(lid)
    while heap:
        key, r = heapq.heappop(heap)
        cur = _redex(out, r.link)
        if cur is None:
            continue
        if cur.sort_key() != key:
            heapq.heappush(heap, (cur.sort_key(), cur))
            continue
        for lid in fire(cur):
            push(lid)
    return out


def format_trace(trace, tsv: bool = False) -> str:
    if tsv:
        rows = ["step\trule\tsn_size"] + [f"{n}\t{rule}\t{k}" for n, rule, k in trace]
    else:
        rows = [f"step {n} rule={rule} sn_size={k}" for n, rule, k in trace]
    return "\n".join(rows) + ("\n" if rows else "")


def identity_net(a: Formula) -> Net:
    net = Net()
    net.add_id(a)
    return net


def eta_expand_max(a) -> Net:
    """Normal form of the axiom on `a`: conclusions a+ then a-, all axioms atomic."""
    if hasattr(a, "formula"):
        a = a.formula
    return normalize(identity_net(a))
