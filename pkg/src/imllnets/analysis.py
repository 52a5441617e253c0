"""Main paths, direct subnets, depth, the implication measure and equality.

All of these work on normal nets (cut free, atomic axioms).  In such a net
every node is a subformula occurrence of some conclusion, so a node has a
global address: the index of its conclusion (positive first) and the L/R
path down that conclusion's syntax tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .formula import Atom, POS, is_iimll
from .net import CUT, HOLE, ID, Net, PAR_NEG, PAR_POS, TENSOR_NEG, TENSOR_POS, node_text


class NotNormal(ValueError):
    pass


def require_normal(net: Net):
    for l in net.links.values():
        if l.kind == CUT:
            raise NotNormal("net has a cut")
        if l.kind == HOLE:
            raise NotNormal("net has a hole")
        if l.kind == ID and not isinstance(net.formula(l.conclusions[0]), Atom):
            raise NotNormal("net has a compound axiom")


def addresses(net: Net) -> dict:
    """Map node -> (conclusion index, path)."""
    out = {}
    for i, c in enumerate(net.conclusions()):
        stack = [(c, "")]
        while stack:
            n, path = stack.pop()
            out[n] = (i, path)
            l = net.producing(n)
            if l.kind not in (ID, HOLE, CUT):
                stack.append((l.premises[0], path + "L"))
                stack.append((l.premises[1], path + "R"))
    return out


def format_address(addr) -> str:
    return f"{addr[0]}:{addr[1]}"


@dataclass(frozen=True)
class MainPath:
    """Alternating nodes and tokens: (n0, t0, n1, t1, ..., nk)."""
    items: tuple

    @property
    def nodes(self):
        return self.items[::2]

    @property
    def tokens(self):
        return self.items[1::2]

    @property
    def head(self):
        return self.items[-1]


def _paths_from(net: Net, start: int):
    done, stack = [], [(start,)]
    while stack:
        seq = stack.pop()
        n = seq[-1]
        nxt = []
        if net.polarity(n) == POS:
            l = net.producing(n)
            if l.kind == TENSOR_POS:
                nxt = [("L", l.premises[0]), ("R", l.premises[1])]
            elif l.kind == PAR_POS:
                nxt = [("R", l.premises[1])]
            elif l.kind == ID:
                nxt = [("ID", l.conclusions[1])]
            else:
                raise NotNormal(f"unexpected {l.kind} above a positive node")
        else:
            l = net.consuming(n)
            if l is not None and l.kind == TENSOR_NEG and l.premises[1] == n:
                nxt = [("R", l.conclusions[0])]
            elif l is not None and l.kind == PAR_NEG:
                nxt = [("L" if l.premises[0] == n else "R", l.conclusions[0])]
        if not nxt:
            done.append(MainPath(seq))
        for tok, m in reversed(nxt):
            stack.append(seq + (tok, m))
    return done


def main_paths(net: Net, root: int | None = None) -> list[MainPath]:
    """Main paths from the positive conclusion, or from `root` if given."""
    require_normal(net)
    if root is None:
        root = net.positive_conclusion()
    return _paths_from(net, root)


def _arguments(net, paths):
    """Left premises of the TENSOR_NEG links crossed by `paths`, in path order."""
    args = []
    for mp in paths:
        for n, tok in zip(mp.nodes, mp.tokens):
            if tok == "R" and net.polarity(n) != POS:
                l = net.consuming(n)
                if l.kind == TENSOR_NEG and l.premises[0] not in args:
                    args.append(l.premises[0])
    return args


class Analysis:
    """Cached main-path data for every subnet root of a normal net."""

    def __init__(self, net: Net):
        require_normal(net)
        self.net = net
        self.addr = addresses(net)
        self.root = net.positive_conclusion()
        self._paths = {}

    def paths(self, v):
        if v not in self._paths:
            self._paths[v] = _paths_from(self.net, v)
        return self._paths[v]

    def children(self, v):
        """Positive conclusions of the direct subnets below root `v`."""
        return _arguments(self.net, self.paths(v))

    def roots(self):
        """Every subnet root of the hierarchy, outermost first."""
        order, todo = [], [self.root]
        while todo:
            v = todo.pop(0)
            order.append(v)
            todo.extend(self.children(v))
        return order

    def signature(self, v):
        """Addresses and tokens of the paths from `v`, plus where each head is bound."""
        net, addr = self.net, self.addr
        sig = []
        for mp in self.paths(v):
            steps = tuple(
                (addr[n], tok) for n, tok in zip(mp.items[::2], mp.items[1::2] + (None,))
            )
            binder = net.consuming(mp.head)
            bound = addr[binder.conclusions[0]] if binder and binder.kind == PAR_POS else None
            sig.append((steps, bound))
        return tuple(sig)

    @cached_property
    def depths(self) -> dict:
        out = {}
        for v in reversed(self.roots()):
            kids = self.children(v)
            out[v] = 1 + max((out[k] for k in kids), default=0)
        return out

    def owned_positive(self, v):
        """Positive occurrences whose least enclosing subnet is the one rooted at `v`."""
        net = self.net
        owned, stack = [], [v]
        while stack:
            n = stack.pop()
            owned.append(n)
            l = net.producing(n)
            if l.kind in (PAR_POS, TENSOR_POS):
                stack.extend(p for p in l.premises if net.polarity(p) == POS)
        return owned

    def covered_nodes(self):
        seen = set()
        for v in self.roots():
            for mp in self.paths(v):
                seen.update(mp.nodes)
        return seen


def direct_subnet_roots(net: Net) -> list[int]:
    a = Analysis(net)
    return a.children(a.root)


def subnet_at(net: Net, root: int) -> Net:
    """The subnet rooted at a positive node, as a standalone net.

    Its negative conclusions are the hypotheses it uses that are bound
    outside it.
    """
    a = Analysis(net)
    keep, todo = set(), [root]
    while todo:
        v = todo.pop()
        for mp in a.paths(v):
            keep.update(mp.nodes)
        keep.update(a.owned_positive(v))
        todo.extend(a.children(v))
    sub = Net()
    for n in sorted(keep):
        sub.add_node(net.nodes[n], node_id=n)
    for lid, l in sorted(net.links.items()):
        if all(n in keep for n in l.conclusions) and all(n in keep for n in l.premises):
            sub.add_link(l.kind, l.premises, l.conclusions, link_id=lid)
    return sub


def direct_subnets(net: Net) -> list[Net]:
    return [subnet_at(net, r) for r in direct_subnet_roots(net)]


def _require_iimll(net):
    for pf in net.nodes.values():
        if not is_iimll(pf.formula):
            raise ValueError("depth and measure are defined on IIMLL nets")


def depth(net: Net) -> int:
    _require_iimll(net)
    a = Analysis(net)
    return a.depths[a.root]


def occurrence_depths(net: Net) -> dict:
    """Depth of every positive occurrence: D - depth(owner) + 1."""
    _require_iimll(net)
    a = Analysis(net)
    total = a.depths[a.root]
    out = {}
    for v in a.roots():
        for n in a.owned_positive(v):
            out[n] = total - a.depths[v] + 1
    return out


def depth_of_occurrence(net: Net, occ: int) -> int:
    return occurrence_depths(net)[occ]


def measure_lolli(net: Net) -> int:
    return sum(occurrence_depths(net).values())


def conclusion_types(net: Net):
    return [net.nodes[n] for n in net.conclusions()]


def equal(a: Net, b: Net) -> bool:
    """Equality of normal nets with the same conclusions, by main paths.

    Paths are compared position by position through global addresses;
    heads must be bound by par links at the same address, and the direct
    subnets met along the way must be equal in turn.
    """
    if conclusion_types(a) != conclusion_types(b):
        raise ValueError("nets have different conclusions")
    x, y = Analysis(a), Analysis(b)
    todo = [(x.root, y.root)]
    while todo:
        u, v = todo.pop()
        if x.signature(u) != y.signature(v):
            return False
        ku, kv = x.children(u), y.children(v)
        if [x.addr[k] for k in ku] != [y.addr[k] for k in kv]:
            return False
        todo.extend(zip(ku, kv))
    return True


def axiom_matching(net: Net) -> frozenset:
    """Set of (address of p+, address of p-) over the axioms of a normal net."""
    require_normal(net)
    addr = addresses(net)
    return frozenset((addr[l.conclusions[0]], addr[l.conclusions[1]])
                     for l in net.links.values() if l.kind == ID)


def equal_by_matching(a: Net, b: Net) -> bool:
    """Independent decider: a normal net is fixed by its conclusions and axiom pairing."""
    if conclusion_types(a) != conclusion_types(b):
        raise ValueError("nets have different conclusions")
    return axiom_matching(a) == axiom_matching(b)


def format_main_path(net: Net, mp: MainPath, addr=None) -> str:
    addr = addr or addresses(net)
    parts = []
    for i, item in enumerate(mp.items):
        if i % 2:
            parts.append(item)
        else:
            parts.append(f"{node_text(net.nodes[item])}[{format_address(addr[item])}]")
    return " ".join(parts)
