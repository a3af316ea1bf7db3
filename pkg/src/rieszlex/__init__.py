"""Riesz decomposition properties of partially ordered groups and their lexicographic products.

Exact rational arithmetic throughout.  The main entry points:

* carriers and their order: :mod:`rieszlex.groups`
* order properties and witnesses: :mod:`rieszlex.props`
* RDP tables and their verification: :mod:`rieszlex.rdp`
* constructive solvers: :mod:`rieszlex.solvers`
* brute-force ground truth: :mod:`rieszlex.oracle`
* pinned worked examples: :mod:`rieszlex.casebook`
* text syntax and command line: :mod:`rieszlex.dsl`, :mod:`rieszlex.cli`
"""

from .casebook import CASES, CaseReport, Claim, run_case
from .dsl import parse_descriptor, parse_element, print_descriptor, print_element
from .errors import (
    AbelianRequired,
    ConstructionFailed,
    DensityRequired,
    InvalidEquation,
    InvalidWitness,
    NcdpWitnessUnavailable,
    NoRuleApplies,
    NotApplicable,
    NotComDirected,
    NotDirected,
    NotFound,
    ParseError,
    RieszError,
    ShapeMismatch,
    SolverFailed,
    UnknownCase,
    Unsupported,
    WrdpWitnessUnavailable,
)
from .groups import (
    DEFAULT_BUDGET,
    Descriptor,
    Free,
    Int,
    Lex,
    Mat,
    Matrix,
    Prod,
    Rat,
    SearchBudget,
    Trivial,
    Word,
)
from .oracle import brute_force_table, search_wrdp_k
from .rdp import Equation, RdpTable, TableReport, check_rdp1_com, check_rdp2_meet, interpolate, rdp0_decompose, verify_table
from .solvers import SolverTrace, solve
from .verdict import Status, Verdict

__version__ = "0.1.0"

__all__ = [
    "AbelianRequired",
    "CASES",
    "CaseReport",
    "Claim",
    "ConstructionFailed",
    "DEFAULT_BUDGET",
    "DensityRequired",
    "Descriptor",
    "Equation",
    "F403",
    "Free",
    "Int",
    "InvalidEquation",
    "InvalidWitness",
    "Lex",
    "Mat",
    "Matrix",
    "NcdpWitnessUnavailable",
    "NoRuleApplies",
    "NotApplicable",
    "NotComDirected",
    "NotDirected",
    "NotFound",
    "ParseError",
    "Prod",
    "Rat",
    "RdpTable",
    "RieszError",
    "SearchBudget",
    "ShapeMismatch",
    "SolverFailed",
    "SolverTrace",
    "Status",
    "TableReport",
    "Trivial",
    "UnknownCase",
    "Unsupported",
    "Verdict",
    "Word",
    "WrdpWitnessUnavailable",
    "brute_force_table",
    "check_rdp1_com",
    "check_rdp2_meet",
    "interpolate",
    "parse_descriptor",
    "parse_element",
    "print_descriptor",
    "print_element",
    "rdp0_decompose",
    "run_case",
    "search_wrdp_k",
    "solve",
    "verify_table",
]
