"""
Pretty-printer producing concrete syntax that parses back to the same AST.
Fractions are always printed exactly (``a/b`` or ``a``).
"""
from trustlam.utils import frac2str
from trustlam.syntax.terms import (
        Atom, Arrow, Sum, TuplePow, BoolAnn,
        Var, BoolLit, Const, Abs, App, Choice, Exp, Tuple, Proj, Trust,
        UNIT,
        )

# binding strength of each printed form, higher binds tighter
TERM, APP, OPERAND, POSTFIX, ATOM = range(5)
ARROW, SUM, POWER, ATYPE = range(4)


def _wrap(text, level, required):
    return f"({text})" if level < required else text


def _flatten(ty):
    # nested sums print as one flat sum
    if not isinstance(ty, Sum):
        return [ty]
    return [a for s in ty.summands for a in _flatten(s)]


def print_type(ty, required=ARROW):
    """
    Render a type: ``A->B``, ``A+B``, ``(A+B)^4``, ``Bool(1/2 H, 1/2 T)@0``.
    """
    if isinstance(ty, Atom):
        return ty.name
    if isinstance(ty, BoolAnn):
        return "Bool" + print_dist(ty.ann)
    if isinstance(ty, Arrow):
        text = f"{print_type(ty.domain, SUM)}->{print_type(ty.codomain, ARROW)}"
        return _wrap(text, ARROW, required)
    if isinstance(ty, Sum):
        flat = _flatten(ty)
        if len(flat) == 1:
            return print_type(flat[0], required)
        return _wrap("+".join(print_type(a, POWER) for a in flat), SUM, required)
    if isinstance(ty, TuplePow):
        return _wrap(f"{print_type(ty.element, ATYPE)}^{ty.n}", POWER, required)
    raise TypeError(f"Not a type: {ty!r}")


def print_dist(dist):
    """``(1/2 H, 1/2 T)@1/20``"""
    entries = ", ".join(f"{frac2str(q)} {print_type(ty)}" for q, ty in dist.entries)
    return f"({entries})@{frac2str(dist.epsilon)}"


def print_term(t, required=TERM):
    """
    Render a term in concrete syntax.

    Args:
        t (Term): Term to print.
        required (int): Binding strength demanded by the context (internal).

    Returns:
        str
    """
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return t.name
    if isinstance(t, BoolLit):
        return "true" if t.value else "false"
    if isinstance(t, Abs):
        text = f"\\{t.var}:{print_type(t.ann)}. {print_term(t.body, TERM)}"
        return _wrap(text, TERM, required)
    if isinstance(t, App):
        text = f"{print_term(t.fn, APP)} {print_term(t.arg, OPERAND)}"
        return _wrap(text, APP, required)
    if isinstance(t, Exp):
        return _wrap(f"exp[{t.n}] {print_term(t.body, OPERAND)}", OPERAND, required)
    if isinstance(t, Trust):
        text = f"trust {print_term(t.arg, OPERAND)} with {print_dist(t.ann)}"
        return _wrap(text, OPERAND, required)
    if isinstance(t, Proj):
        return _wrap(f"{print_term(t.subject, POSTFIX)}#{t.index}", POSTFIX, required)
    if isinstance(t, Choice):
        return "{" + ", ".join(f"{frac2str(p)} {print_term(u)}" for p, u in t.branches) + "}"
    if isinstance(t, Tuple):
        return "<" + ", ".join(print_term(u) for u in t.elements) + ">"
    raise TypeError(f"Not a term: {t!r}")


def print_program(program):
    """Render a whole program, declarations first, one per line."""
    lines = [f"type {a};" for a in program.atoms if a != UNIT]
    lines += [f"subtype {a} <: {b};" for a, b in program.subtypes]
    lines += [f"const {c}:{a};" for c, a in program.consts]
    lines.append(f"main = {print_term(program.main)}")
    return "\n".join(lines) + "\n"
