"""Schur-Weyl basis states of N-site, n-level systems from GT-pattern calculus."""
from .engine import SchurWeylLabel, SchurWeylState, amplitude, build_graph, expand_state
from .operator import TauChain, tensor_op_element
from .oracle import FactorialBudgetExceeded, reference_state
from .rsk import DoubleGTPattern, rsk_forward, rsk_inverse
from .surd import SurdSum
from .young import GTPattern, parse_tableau

__all__ = [
    "SchurWeylLabel",
    "SchurWeylState",
    "amplitude",
    "build_graph",
    "expand_state",
    "TauChain",
    "tensor_op_element",
    "FactorialBudgetExceeded",
    "reference_state",
    "DoubleGTPattern",
    "rsk_forward",
    "rsk_inverse",
    "SurdSum",
    "GTPattern",
    "parse_tableau",
]
