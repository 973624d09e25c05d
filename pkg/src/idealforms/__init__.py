"""Symbolic engine for a family of ideals on countable sets.

The package normalizes ideal expressions to canonical forms, compiles
them into tree schemas whose restrictions of the well-founded ideal
realize them, classifies arbitrary schemas (with embedding witnesses in
the non-Borel case), decides membership of finitely presented query sets
with checkable certificates, and maps scattered countable linear orders
to the same classification.
"""

import sys as _sys

# deep diagonal blocks nest schemas a few frames per ordinal stage; the
# default interpreter limit is too tight for structural recursion on them
_sys.setrecursionlimit(max(_sys.getrecursionlimit(), 20000))

from .errors import (
    FiniteSchema,
    IdealFormsError,
    NotASubset,
    NotLimit,
    ParseError,
    QuotientOverflow,
    UnknownContainment,
)
from .ideals import CanonicalForm, IdealExpr, Kind, b_rank, combine, iso_check, normalize, perp
from .ordinals import Ordinal, OrdKind, add, compare, fund_seq, kind
from .classification import Borel, NonBorel, TreeClass, classify, classify_via_derivative, scaffold_class
from .membership import (
    FinSet,
    QueryTerm,
    Schema,
    Ternary,
    Transversal,
    Union,
    frechet_witness,
    id_witness,
    member_of,
    member_perp,
    q_in_id,
    q_in_wf,
    subset_of,
)
from .oracle import Budget, check_witness, enumerate_schema, explicit_derivative, law_suite
from .orders import (
    LinTerm,
    NonScattered,
    Scattered,
    WoClass,
    rationalize,
    scattered_check,
    wo_classify,
    wo_self_dual,
)
from .rank import tree_rank
from .trees import TreeSchema, compile_ideal, cone_of, in_id, in_wf, member_elem
from .text import parse_expr, parse_order, parse_ordinal, parse_query, parse_tree
from .witnesses import DominatingBranch, EmbeddingWitness, UnboundedFamily

__all__ = [
    "Borel",
    "Budget",
    "CanonicalForm",
    "DominatingBranch",
    "EmbeddingWitness",
    "FinSet",
    "FiniteSchema",
    "IdealExpr",
    "IdealFormsError",
    "Kind",
    "LinTerm",
    "NonBorel",
    "NonScattered",
    "NotASubset",
    "NotLimit",
    "OrdKind",
    "Ordinal",
    "ParseError",
    "QueryTerm",
    "QuotientOverflow",
    "Scattered",
    "Schema",
    "Ternary",
    "Transversal",
    "TreeClass",
    "TreeSchema",
    "UnboundedFamily",
    "Union",
    "UnknownContainment",
    "WoClass",
    "add",
    "b_rank",
    "check_witness",
    "classify",
    "classify_via_derivative",
    "combine",
    "compare",
    "compile_ideal",
    "cone_of",
    "enumerate_schema",
    "explicit_derivative",
    "frechet_witness",
    "fund_seq",
    "id_witness",
    "in_id",
    "in_wf",
    "iso_check",
    "kind",
    "law_suite",
    "member_elem",
    "member_of",
    "member_perp",
    "normalize",
    "parse_expr",
    "parse_order",
    "parse_ordinal",
    "parse_query",
    "parse_tree",
    "perp",
    "q_in_id",
    "q_in_wf",
    "rationalize",
    "scaffold_class",
    "scattered_check",
    "subset_of",
    "tree_rank",
    "wo_classify",
    "wo_self_dual",
]
