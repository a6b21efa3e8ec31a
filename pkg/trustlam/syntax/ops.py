"""
Structural operations on terms: free variables, capture-avoiding
substitution, alpha-equivalence and value recognition.
"""
from itertools import count

from trustlam.syntax.terms import (
        Var, BoolLit, Const, Abs, App, Choice, Exp, Tuple, Proj, Trust, children,
        )


def free_vars(t):
    """
    Free variables of a term.

    Args:
        t (Term): Term.

    Returns:
        frozenset[str]: Names of the variables not bound by an enclosing abstraction.
    """
    if isinstance(t, Var):
        return frozenset([t.name])
    if isinstance(t, Abs):
        return free_vars(t.body) - {t.var}
    names = frozenset()
    for child in children(t):
        names |= free_vars(child)
    return names


def is_closed(t):
    return not free_vars(t)


def fresh_name(base, avoid):
    """First of ``base_1, base_2, ...`` not in ``avoid``."""
    base = base.split("_")[0] or "x"
    for i in count(1):
        name = f"{base}_{i}"
        if name not in avoid:
            return name


def rename(t, old, new):
    """Replace free occurrences of variable ``old`` by ``Var(new)``."""
    return substitute(t, Var(new), old)


def substitute(t, s, x):
    """
    Capture-avoiding substitution ``t[s/x]``. A binder that would capture a
    free variable of s is renamed to a fresh name first.

    Args:
        t (Term): Term substituted into.
        s (Term): Replacement.
        x (str): Variable name replaced.

    Returns:
        Term
    """
    if x not in free_vars(t):
        return t
    return _subst(t, s, x, free_vars(s))


def _subst(t, s, x, fv_s):
    if isinstance(t, Var):
        return s if t.name == x else t
    if isinstance(t, (BoolLit, Const)):
        return t
    if isinstance(t, Abs):
        if t.var == x:
            return t
        body_fv = free_vars(t.body)
        if x not in body_fv:
            return t
        var, body = t.var, t.body
        if var in fv_s:
            var = fresh_name(var, fv_s | body_fv | {x})
            body = _subst(body, Var(var), t.var, frozenset([var]))
        return Abs(var, t.ann, _subst(body, s, x, fv_s), pos=t.pos)
    if isinstance(t, App):
        return App(_subst(t.fn, s, x, fv_s), _subst(t.arg, s, x, fv_s), pos=t.pos)
    if isinstance(t, Choice):
        return Choice([(p, _subst(u, s, x, fv_s)) for p, u in t.branches], pos=t.pos)
    if isinstance(t, Exp):
        return Exp(t.n, _subst(t.body, s, x, fv_s), pos=t.pos)
    if isinstance(t, Tuple):
        return Tuple([_subst(u, s, x, fv_s) for u in t.elements], pos=t.pos)
    if isinstance(t, Proj):
        return Proj(_subst(t.subject, s, x, fv_s), t.index, pos=t.pos)
    if isinstance(t, Trust):
        return Trust(_subst(t.arg, s, x, fv_s), t.ann, pos=t.pos)
    raise TypeError(f"Not a term: {t!r}")


def alpha_normal(t, _names=None, _depth=0):
    """
    Canonical representative of t's alpha-equivalence class: every bound
    variable is renamed after its binding depth (``#0``, ``#1``, ...). The
    generated names cannot be written in program text, so they never clash
    with free variables.
    """
    names = _names or {}
    if isinstance(t, Var):
        return Var(names.get(t.name, t.name))
    if isinstance(t, (BoolLit, Const)):
        return t
    if isinstance(t, Abs):
        new = f"#{_depth}"
        return Abs(new, t.ann, alpha_normal(t.body, {**names, t.var: new}, _depth + 1))
    if isinstance(t, App):
        return App(alpha_normal(t.fn, names, _depth), alpha_normal(t.arg, names, _depth))
    if isinstance(t, Choice):
        return Choice([(p, alpha_normal(u, names, _depth)) for p, u in t.branches])
    if isinstance(t, Exp):
        return Exp(t.n, alpha_normal(t.body, names, _depth))
    if isinstance(t, Tuple):
        return Tuple([alpha_normal(u, names, _depth) for u in t.elements])
    if isinstance(t, Proj):
        return Proj(alpha_normal(t.subject, names, _depth), t.index)
    if isinstance(t, Trust):
        return Trust(alpha_normal(t.arg, names, _depth), t.ann)
    raise TypeError(f"Not a term: {t!r}")


def alpha_eq(t, u):
    """True iff t and u only differ in the names of bound variables."""
    return alpha_normal(t) == alpha_normal(u)


def is_value(t):
    """Booleans, constants, abstractions and tuples of values."""
    if isinstance(t, (BoolLit, Const, Abs)):
        return True
    if isinstance(t, Tuple):
        return all(is_value(u) for u in t.elements)
    return False


def subterms(t):
    """All subterms of t in preorder, t included."""
    stack = [t]
    while stack:
        u = stack.pop()
        yield u
        stack.extend(reversed(children(u)))


def size(t):
    return sum(1 for _ in subterms(t))
