"""Proof structures over polarized formula occurrences, and the switching check."""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass

from .formula import (
    Atom, Formula, Lolli, NEG, POS, PolarizedFormula, Tensor, format_imp,
    is_iimll, parse_type,
)

ID, CUT, HOLE = "ID", "CUT", "HOLE"
TENSOR_POS, TENSOR_NEG = "TENSOR_POS", "TENSOR_NEG"
PAR_POS, PAR_NEG = "PAR_POS", "PAR_NEG"
KINDS = (ID, CUT, TENSOR_POS, TENSOR_NEG, PAR_POS, PAR_NEG, HOLE)
PARS = (PAR_POS, PAR_NEG)
BINARY = (TENSOR_POS, TENSOR_NEG, PAR_POS, PAR_NEG)

# premise polarities and the connective each binary link builds
LINK_SHAPE = {
    TENSOR_NEG: ((POS, NEG), NEG, Lolli),
    PAR_POS: ((NEG, POS), POS, Lolli),
    TENSOR_POS: ((POS, POS), POS, Tensor),
    PAR_NEG: ((NEG, NEG), NEG, Tensor),
}


@dataclass(frozen=True)
class Link:
    kind: str
    premises: tuple = ()
    conclusions: tuple = ()

    def nodes(self):
        return self.premises + self.conclusions


class NetError(ValueError):
    pass


class Net:
    """A proof structure: nodes carry implicational polarized formulas.

    Every node is the conclusion of exactly one link and the premise of at
    most one.  Nodes not consumed by any link are the conclusions of the net.
    """

    def __init__(self):
        self.nodes: dict[int, PolarizedFormula] = {}
        self.links: dict[int, Link] = {}
        self.producer: dict[int, int] = {}
        self.consumer: dict[int, int] = {}
        self._next_node = 0
        self._next_link = 0

    # -- mutation, used while building ------------------------------------
    def add_node(self, formula, polarity=None, node_id=None) -> int:
        if polarity is not None:
            formula = PolarizedFormula(formula, polarity)
        if node_id is None:
            node_id = self._next_node
        if node_id in self.nodes:
            raise NetError(f"duplicate node {node_id}")
        self.nodes[node_id] = formula
        self._next_node = max(self._next_node, node_id + 1)
        return node_id

    def add_link(self, kind, premises=(), conclusions=(), link_id=None) -> int:
        if link_id is None:
            link_id = self._next_link
        link = Link(kind, tuple(premises), tuple(conclusions))
        self.links[link_id] = link
        self._next_link = max(self._next_link, link_id + 1)
        for n in link.premises:
            self.consumer[n] = link_id
        for n in link.conclusions:
            self.producer[n] = link_id
        return link_id

    def remove_link(self, link_id):
        link = self.links.pop(link_id)
        for n in link.premises:
            if self.consumer.get(n) == link_id:
                del self.consumer[n]
        for n in link.conclusions:
            if self.producer.get(n) == link_id:
                del self.producer[n]
        return link

    def remove_node(self, node_id):
        del self.nodes[node_id]

    def new_node(self, formula: Formula, polarity: str) -> int:
        return self.add_node(PolarizedFormula(formula, polarity))

    def link_formula(self, kind, premises, conclusions) -> int:
        return self.add_link(kind, premises, conclusions)

    # -- convenient constructors -------------------------------------------
    def add_id(self, formula: Formula):
        pos = self.new_node(formula, POS)
        neg = self.new_node(formula, NEG)
        self.add_link(ID, (), (pos, neg))
        return pos, neg

    def add_binary(self, kind, left, right) -> int:
        _, pol, ctor = LINK_SHAPE[kind]
        out = self.new_node(ctor(self.formula(left), self.formula(right)), pol)
        self.add_link(kind, (left, right), (out,))
        return out

    def add_cut(self, pos, neg):
        return self.add_link(CUT, (pos, neg), ())

    def add_hole(self, formula: Formula) -> int:
        n = self.new_node(formula, POS)
        self.add_link(HOLE, (), (n,))
        return n

    # -- queries ----------------------------------------------------------
    def formula(self, n) -> Formula:
        return self.nodes[n].formula

    def polarity(self, n) -> str:
        return self.nodes[n].polarity

    def producing(self, n) -> Link:
        return self.links[self.producer[n]]

    def consuming(self, n):
        lid = self.consumer.get(n)
        return None if lid is None else self.links[lid]

    def conclusions(self):
        """Unconsumed nodes, positive first, then by id."""
        cs = [n for n in self.nodes if n not in self.consumer]
        return sorted(cs, key=lambda n: (self.polarity(n) != POS, n))

    def positive_conclusion(self) -> int:
        pos = [n for n in self.conclusions() if self.polarity(n) == POS]
        if len(pos) != 1:
            raise NetError(f"expected one positive conclusion, found {len(pos)}")
        return pos[0]

    def conclusion_formula(self) -> Formula:
        return self.formula(self.positive_conclusion())

    def links_of(self, *kinds):
        return [(lid, l) for lid, l in sorted(self.links.items()) if l.kind in kinds]

    def holes(self):
        return [lid for lid, l in self.links.items() if l.kind == HOLE]

    def copy(self) -> "Net":
        other = Net()
        other.nodes = dict(self.nodes)
        other.links = dict(self.links)
        other.producer = dict(self.producer)
        other.consumer = dict(self.consumer)
        other._next_node = self._next_node
        other._next_link = self._next_link
        return other

    def absorb(self, other: "Net") -> dict:
        """Copy other's nodes and links in with fresh ids; return the node renaming."""
        ren = {}
        for n in sorted(other.nodes):
            ren[n] = self.add_node(other.nodes[n])
        for lid in sorted(other.links):
            l = other.links[lid]
            self.add_link(l.kind, [ren[x] for x in l.premises], [ren[x] for x in l.conclusions])
        return ren

    def __repr__(self):
        return f"<Net {len(self.nodes)} nodes, {len(self.links)} links>"

    def __str__(self):
        return format_net(self)


ProofStructure = Net
ProofNet = Net


# -- validation --------------------------------------------------------------

def validate_structure(net: Net) -> list[str]:
    """List every typing or wiring violation; empty means well formed."""
    errs = []
    produced, consumed = {}, {}
    for lid, l in sorted(net.links.items()):
        where = f"link {lid} ({l.kind})"
        for n in l.nodes():
            if n not in net.nodes:
                errs.append(f"{where}: dangling node {n}")
        for n in l.conclusions:
            if n in produced:
                errs.append(f"{where}: node {n} is already a conclusion of link {produced[n]}")
            produced[n] = lid
        for n in l.premises:
            if n in consumed:
                errs.append(f"{where}: node {n} is already a premise of link {consumed[n]}")
            consumed[n] = lid
        if any(n not in net.nodes for n in l.nodes()):
            continue
        errs.extend(f"{where}: {e}" for e in _check_link(net, l))
    for n in sorted(net.nodes):
        if n not in produced:
            errs.append(f"node {n}: not the conclusion of any link")
    return errs


def _check_link(net, l):
    f, pol = net.formula, net.polarity
    arity = {ID: (0, 2), CUT: (2, 0), HOLE: (0, 1)}.get(l.kind, (2, 1))
    if l.kind not in KINDS:
        return [f"unknown link kind"]
    if (len(l.premises), len(l.conclusions)) != arity:
        return [f"expected {arity[0]} premises and {arity[1]} conclusions"]
    if l.kind in (ID, CUT):
        a, b = l.conclusions or l.premises
        errs = []
        if (pol(a), pol(b)) != (POS, NEG):
            errs.append("polarity clash, expected (+, -)")
        if f(a) != f(b):
            errs.append("formula mismatch between the two sides")
        return errs
    if l.kind == HOLE:
        return [] if pol(l.conclusions[0]) == POS else ["hole conclusion must be positive"]
    (lp, rp), cp, ctor = LINK_SHAPE[l.kind]
    a, b = l.premises
    c = l.conclusions[0]
    errs = []
    if (pol(a), pol(b)) != (lp, rp):
        if (pol(b), pol(a)) == (lp, rp):
            errs.append("premise order violation (left and right swapped)")
        else:
            errs.append(f"polarity clash on premises, expected ({lp}, {rp})")
    if pol(c) != cp:
        errs.append(f"polarity clash on conclusion, expected {cp}")
    if f(c) != ctor(f(a), f(b)):
        errs.append("formula mismatch between premises and conclusion")
    return errs


def check_structure(net: Net):
    errs = validate_structure(net)
    if errs:
        raise NetError("; ".join(errs))


# -- switching graphs --------------------------------------------------------

def par_links(net: Net):
    return [lid for lid, l in sorted(net.links.items()) if l.kind in PARS]


def switchings(net: Net):
    """All maps from par links to 0 (left premise) or 1 (right premise)."""
    pars = par_links(net)
    for bits in itertools.product((0, 1), repeat=len(pars)):
        yield dict(zip(pars, bits))


def dr_graph(net: Net, sw: dict):
    """Vertices and undirected edges of the switching graph for `sw`."""
    edges = []
    for lid, l in sorted(net.links.items()):
        if l.kind in (ID, CUT):
            edges.append(tuple(l.nodes()))
        elif l.kind in PARS:
            edges.append((l.premises[sw[lid]], l.conclusions[0]))
        elif l.kind in (TENSOR_POS, TENSOR_NEG):
            c = l.conclusions[0]
            edges.append((l.premises[0], c))
            edges.append((l.premises[1], c))
    return sorted(net.nodes), edges


def _is_tree(vertices, edges):
    if len(edges) != len(vertices) - 1:
        return False
    adj = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {vertices[0]}
    queue = deque([vertices[0]])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vertices)


def dr_check_exhaustive(net: Net) -> bool:
    if not net.nodes:
        return False
    return all(_is_tree(*dr_graph(net, sw)) for sw in switchings(net))


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def dr_check_contract(net: Net) -> bool:
    """Switching check by graph contraction, polynomial in the net size."""
    if not net.nodes:
        return False
    uf = _UnionFind(net.nodes)
    pars = []
    for lid, l in sorted(net.links.items()):
        if l.kind in (ID, CUT):
            pairs = [tuple(l.nodes())]
        elif l.kind in (TENSOR_POS, TENSOR_NEG):
            pairs = [(p, l.conclusions[0]) for p in l.premises]
        elif l.kind in PARS:
            pars.append(l)
            continue
        else:
            pairs = []
        for a, b in pairs:
            if not uf.union(a, b):
                return False
    pending = pars
    while pending:
        rest = []
        for l in pending:
            a, b = (uf.find(x) for x in l.premises)
            c = uf.find(l.conclusions[0])
            if a == b:
                if a == c:
                    return False
                uf.union(a, c)
            else:
                rest.append(l)
        if len(rest) == len(pending):
            return False
        pending = rest
    roots = {uf.find(n) for n in net.nodes}
    return len(roots) == 1


EXHAUSTIVE_LIMIT = 10


def dr_check(net: Net, method: str = "auto") -> bool:
    """Every switching graph is acyclic and connected.

    `method` is "exhaustive" (2^k traversals), "contract", or "auto", which
    picks exhaustive for at most EXHAUSTIVE_LIMIT par links.
    """
    if method == "auto":
        method = "exhaustive" if len(par_links(net)) <= EXHAUSTIVE_LIMIT else "contract"
    if method == "exhaustive":
        return dr_check_exhaustive(net)
    if method == "contract":
        return dr_check_contract(net)
    raise ValueError(f"unknown method {method!r}")


def is_closed(net: Net) -> bool:
    return len(net.conclusions()) == 1


subnet_conclusions = Net.conclusions


def is_proof_net(net: Net) -> bool:
    if validate_structure(net) or not dr_check(net):
        return False
    return sum(net.polarity(n) == POS for n in net.conclusions()) == 1


def components(net: Net):
    uf = _UnionFind(net.nodes)
    for l in net.links.values():
        ns = l.nodes()
        for x in ns[1:]:
            uf.union(ns[0], x)
    return uf


# -- inductive construction --------------------------------------------------

def _as_formula(x):
    if isinstance(x, str):
        return parse_type(x).formula
    if isinstance(x, PolarizedFormula):
        return x.formula
    return x


def build_inductive(script, iimll: bool = False) -> Net:
    """Build a net by the formation clauses.

    Steps are tuples: ("ID", A), ("HOLE", A), and (KIND, left, right) for
    CUT and the four binary links, citing node ids created by earlier steps.
    ID creates the nodes A+ and A- with the next two ids.  Joining clauses
    (CUT, TENSOR_NEG, TENSOR_POS) need premises from different nets;
    PAR_POS and PAR_NEG need them in the same net.  In IIMLL mode the
    tensor-forming clauses TENSOR_POS and PAR_NEG are refused.
    """
    net = Net()
    comp = {}
    for i, step in enumerate(script):
        kind, *args = step
        where = f"step {i} ({kind})"
        if kind in (ID, HOLE):
            (a,) = args
            a = _as_formula(a)
            if iimll and not is_iimll(a):
                raise NetError(f"{where}: tensor formula in IIMLL mode")
            made = net.add_id(a) if kind == ID else (net.add_hole(a),)
            for n in made:
                comp[n] = made[0]
            continue
        if kind not in BINARY and kind != CUT:
            raise NetError(f"{where}: unknown clause")
        if iimll and kind in (TENSOR_POS, PAR_NEG):
            raise NetError(f"{where}: clause not allowed in IIMLL mode")
        left, right = args
        for n in (left, right):
            if n not in net.nodes:
                raise NetError(f"{where}: unknown node {n}")
            if n in net.consumer:
                raise NetError(f"{where}: node {n} is not a conclusion")
        if left == right:
            raise NetError(f"{where}: premises must be distinct")
        cl, cr = _find(comp, left), _find(comp, right)
        joining = kind in (CUT, TENSOR_NEG, TENSOR_POS)
        if joining and cl == cr:
            raise NetError(f"{where}: premises must come from different nets")
        if not joining and cl != cr:
            raise NetError(f"{where}: premises must come from the same net")
        if kind == CUT:
            net.add_cut(left, right)
            out = None
        else:
            out = net.add_binary(kind, left, right)
            comp[out] = cl
        comp[cr] = cl
        errs = [e for e in validate_structure(net)]
        if errs:
            raise NetError(f"{where}: " + "; ".join(errs))
    roots = {_find(comp, n) for n in net.nodes}
    if len(roots) > 1:
        raise NetError("script leaves more than one net")
    assert dr_check(net), "formation clauses produced a structure failing the switching check"
    return net


def _find(comp, n):
    while comp[n] != n:
        n = comp[n]
    return n


# -- canonical relabelling and text format -----------------------------------

def canonical_order(net: Net):
    """Deterministic traversal order of nodes from the conclusions.

    From a node we step to its producing link, then its consuming link; a
    link lists premises, then conclusions.  The result depends only on the
    graph shape and the order of the conclusions.
    """
    order, seen = [], set()
    starts = net.conclusions() + sorted(net.nodes)
    for s in starts:
        if s in seen:
            continue
        stack = [s]
        while stack:
            n = stack.pop()
            if n in seen:
                continue
            seen.add(n)
            order.append(n)
            nbrs = []
            for lid in (net.producer.get(n), net.consumer.get(n)):
                if lid is not None:
                    nbrs.extend(net.links[lid].nodes())
            stack.extend(reversed([m for m in nbrs if m not in seen]))
    return order


def relabel(net: Net, mapping: dict) -> Net:
    out = Net()
    for n in sorted(net.nodes, key=lambda n: mapping[n]):
        out.add_node(net.nodes[n], node_id=mapping[n])
    for _, l in sorted(net.links.items(), key=lambda kv: _link_key(kv[1], mapping)):
        out.add_link(l.kind, [mapping[x] for x in l.premises], [mapping[x] for x in l.conclusions])
    return out


def canonical(net: Net) -> Net:
    return relabel(net, {n: i for i, n in enumerate(canonical_order(net))})


def _link_key(l, mapping):
    ends = l.conclusions or l.premises
    return (l.kind, [mapping[x] for x in ends], [mapping[x] for x in l.premises])


def structure_key(net: Net):
    """Hashable key; two nets share it iff they are identical up to node names."""
    c = canonical(net)
    nodes = tuple((n, c.nodes[n].formula, c.nodes[n].polarity) for n in sorted(c.nodes))
    links = tuple(sorted((l.kind, l.premises, l.conclusions) for l in c.links.values()))
    return nodes, links


def same_structure(a: Net, b: Net) -> bool:
    return structure_key(a) == structure_key(b)


def format_net(net: Net, canonicalize: bool = True) -> str:
    if canonicalize:
        net = canonical(net)
    lines = []
    for n in sorted(net.nodes):
        pf = net.nodes[n]
        lines.append(f"node {n} {node_text(pf)}")
    ident = {n: n for n in net.nodes}
    for l in sorted(net.links.values(), key=lambda l: _link_key(l, ident)):
        prem = ",".join(map(str, l.premises))
        conc = ",".join(map(str, l.conclusions))
        lines.append(f"link {l.kind} premises=[{prem}] conclusions=[{conc}]")
    return "\n".join(lines) + "\n"


def node_text(pf):
    body = format_imp(pf.formula, pf.polarity)
    if not isinstance(pf.formula, Atom):
        body = f"({body})"
    return body + pf.polarity


_NODE_RE = re.compile(r"node\s+(\d+)\s+(.+)$")
_LINK_RE = re.compile(r"link\s+(\w+)\s*(?:premises=\[([\d,\s]*)\])?\s*(?:conclusions=\[([\d,\s]*)\])?\s*$")


class NetSyntaxError(ValueError):
    pass


def parse_net(text: str) -> Net:
    net = Net()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _NODE_RE.match(line)
        if m:
            body = m.group(2).strip()
            if not body or body[-1] not in "+-":
                raise NetSyntaxError(f"line {lineno}: node formula needs a trailing polarity")
            try:
                pf = parse_type(body)
                net.add_node(pf, node_id=int(m.group(1)))
            except ValueError as e:
                raise NetSyntaxError(f"line {lineno}: {e}") from None
            continue
        m = _LINK_RE.match(line)
        if m:
            kind = m.group(1)
            if kind not in KINDS:
                raise NetSyntaxError(f"line {lineno}: unknown link kind {kind}")
            prem = _ids(m.group(2))
            conc = _ids(m.group(3))
            net.add_link(kind, prem, conc)
            continue
        raise NetSyntaxError(f"line {lineno}: cannot parse {raw!r}")
    return net


def _ids(s):
    if not s or not s.strip():
        return []
    return [int(x) for x in s.split(",") if x.strip()]
