"""Exact computations around automorphisms of Mumford curves.

Thin wrapper over the compiled core; reports come back as JSON strings
so callers can json.loads() them.
"""

import json

from ._core import (
    PrecisionError,
    TableMismatchError,
    asm_discrete,
    census,
    check_table,
    compare_to_bound,
    diff_table,
    element_add,
    element_mul,
    element_valuation,
    exceptional_orders,
    herrlich_dim,
    hurwitz_genus,
    regenerate_table,
    translation_mirror,
    tree_distance,
    tree_genus,
    tree_mu,
    tree_window,
)
from ._core import case_report as _case_report
from ._core import family_asm as _family_asm
from ._core import family_drinfeld as _family_drinfeld
from ._core import family_icosa as _family_icosa


def case_report(tokens):
    return json.loads(_case_report(list(tokens)))


def family_asm(p, t):
    return json.loads(_family_asm(p, t))


def family_drinfeld(p, t, degrees):
    return json.loads(_family_drinfeld(p, t, list(degrees)))


def family_icosa(p):
    return json.loads(_family_icosa(p))


__all__ = [
    "PrecisionError",
    "TableMismatchError",
    "asm_discrete",
    "case_report",
    "census",
    "check_table",
    "compare_to_bound",
    "diff_table",
    "element_add",
    "element_mul",
    "element_valuation",
    "exceptional_orders",
    "family_asm",
    "family_drinfeld",
    "family_icosa",
    "herrlich_dim",
    "hurwitz_genus",
    "regenerate_table",
    "translation_mirror",
    "tree_distance",
    "tree_genus",
    "tree_mu",
    "tree_window",
]
