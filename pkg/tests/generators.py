"""Random inputs shared by the test modules."""

import random
from functools import lru_cache

from imllnets.context import apply_net
from imllnets.formula import BOOL, BOOL_ALT, Lolli, P, Tensor
from imllnets.lam import enumerate_normal
from imllnets.net import (
    CUT, ID, PAR_NEG, PAR_POS, TENSOR_NEG, TENSOR_POS, Net,
)

PP = Lolli(P, P)

# function types whose argument types also have closed nets
FUNCTION_TYPES = [
    Lolli(BOOL, BOOL),
    Lolli(BOOL_ALT, BOOL_ALT),
    Lolli(BOOL, BOOL_ALT),
    Lolli(Lolli(BOOL, BOOL), BOOL),
    Lolli(Lolli(PP, PP), PP),
    Lolli(BOOL, Lolli(BOOL, BOOL)),
]


@lru_cache(maxsize=None)
def nets_of(a):
    return tuple(enumerate_normal(a))


def _argument(rng, a, depth):
    """A closed net of `a`, sometimes itself an unnormalized application."""
    if depth > 0 and rng.random() < 0.5:
        for f in rng.sample(FUNCTION_TYPES, len(FUNCTION_TYPES)):
            if f.right == a:
                fun = rng.choice(nets_of(f))
                return apply_net(fun, _argument(rng, f.left, depth - 1))
    return rng.choice(nets_of(a))


def eta_cut(net: Net) -> Net:
    """Cut the conclusion against a compound axiom on its own type."""
    out = net.copy()
    root = out.positive_conclusion()
    pos, neg = out.add_id(out.formula(root))
    out.add_cut(root, neg)
    return out


def random_cut_net(rng: random.Random) -> Net:
    """A closed net with at least one cut, built from applications and axiom cuts."""
    f = rng.choice(FUNCTION_TYPES)
    net = apply_net(rng.choice(nets_of(f)), _argument(rng, f.left, 2))
    while rng.random() < 0.3:
        net = eta_cut(net)
    if f.right == Lolli(BOOL, BOOL) and rng.random() < 0.5:
        net = apply_net(net, _argument(rng, BOOL, 1))
    return net


SMALL = [P, PP, Lolli(P, PP), Tensor(P, P)]


def random_script(rng: random.Random, n_ids: int = 3, iimll: bool = False):
    """A legal derivation script and nothing else; joins until one net is left."""
    script = []
    comps = []   # list of (positive conclusion, [negative conclusions])
    formulas = {}
    next_id = 0
    pool = SMALL[:3] if iimll else SMALL
    for _ in range(n_ids):
        a = rng.choice(pool)
        script.append((ID, a))
        pos, neg = next_id, next_id + 1
        formulas[pos] = formulas[neg] = a
        next_id += 2
        comps.append([pos, [neg]])

    def fresh(f):
        nonlocal next_id
        n = next_id
        formulas[n] = f
        next_id += 1
        return n

    while len(comps) > 1 or (comps[0][1] and rng.random() < 0.5):
        moves = []
        for i, (pos, negs) in enumerate(comps):
            # in IIMLL mode joins need a negative conclusion, so keep one around
            if negs and not (iimll and len(comps) > 1 and len(negs) == 1):
                moves.append(("par_pos", i))
            if len(negs) >= 2 and not iimll:
                moves.append(("par_neg", i))
        if len(comps) > 1:
            moves.append(("join", None))
        move, i = rng.choice(moves)
        if move == "par_pos":
            pos, negs = comps[i]
            neg = negs.pop(rng.randrange(len(negs)))
            script.append((PAR_POS, neg, pos))
            comps[i][0] = fresh(Lolli(formulas[neg], formulas[pos]))
        elif move == "par_neg":
            pos, negs = comps[i]
            a = negs.pop(rng.randrange(len(negs)))
            b = negs.pop(rng.randrange(len(negs)))
            script.append((PAR_NEG, a, b))
            negs.append(fresh(Tensor(formulas[a], formulas[b])))
        else:
            i, j = rng.sample(range(len(comps)), 2)
            (pi, ni), (pj, nj) = comps[i], comps[j]
            kinds = ["tensor_pos"] if not iimll else []
            if nj:
                kinds.append("tensor_neg")
                if any(formulas[n] == formulas[pi] for n in nj):
                    kinds.append("cut")
            if not kinds:
                kinds = ["tensor_neg"] if nj else []
            if not kinds:
                i, j = j, i
                (pi, ni), (pj, nj) = comps[i], comps[j]
                kinds = ["tensor_neg"] if nj else (["tensor_pos"] if not iimll else [])
            if not kinds:
                continue
            kind = rng.choice(kinds)
            if kind == "tensor_pos":
                script.append((TENSOR_POS, pi, pj))
                merged = [fresh(Tensor(formulas[pi], formulas[pj])), ni + nj]
            elif kind == "tensor_neg":
                n = nj.pop(rng.randrange(len(nj)))
                script.append((TENSOR_NEG, pi, n))
                nj.append(fresh(Lolli(formulas[pi], formulas[n])))
                merged = [pj, ni + nj]
            else:
                n = next(n for n in nj if formulas[n] == formulas[pi])
                nj.remove(n)
                script.append((CUT, pi, n))
                merged = [pj, ni + nj]
            comps = [c for k, c in enumerate(comps) if k not in (i, j)] + [merged]
    return script
