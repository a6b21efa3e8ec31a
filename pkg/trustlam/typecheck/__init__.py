"""
Subtyping and type assignment.
"""
from trustlam.typecheck.subtype import (
        SubtypeEnv, subtype, join, sum_of, summands, normalize_type, normalize_dist, type_equal,
        )
from trustlam.typecheck.checker import TypedTerm, Checker, infer, type_term, check_program
