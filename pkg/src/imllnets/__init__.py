"""IMLL proof nets: correctness, cut elimination, equality and separation."""

from .formula import (
    Atom, BOOL, BOOL_ALT, Lolli, P, Par, PolarizedFormula, Tensor, abb,
    bool_fun_type, format_imp, is_iimll, is_simple, order, parse_formula,
    parse_type, unabb,
)
from .net import Net, ProofNet, build_inductive, dr_check, format_net, is_proof_net, parse_net
from .rewrite import normalize, sn_size
from .analysis import depth, equal, equal_by_matching, main_paths, measure_lolli
from .context import apply_net, compose, make_hole, plug
from .lam import assign_term, enumerate_normal, eval_boolean, parse_term, term_to_net, truth_table
from .separation import extract_composition, instantiate_net, separate

__version__ = "0.1.0"
