"""
Terms, types and programs: ASTs, parser, printer and structural operations.
"""
from trustlam.syntax.terms import (
        Atom, Arrow, Sum, TuplePow, BoolAnn, Dist, UNIT, UNIT_BOOL,
        Var, BoolLit, Const, Abs, App, Choice, Exp, Tuple, Proj, Trust,
        TRUE, FALSE, Program, children,
        )
from trustlam.syntax.parser import parse_program, parse_term, parse_type, parse_dist
from trustlam.syntax.printer import print_term, print_type, print_dist, print_program
from trustlam.syntax.ops import (
        free_vars, is_closed, substitute, fresh_name, alpha_normal, alpha_eq,
        is_value, subterms, size,
        )
