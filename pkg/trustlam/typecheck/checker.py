"""
Syntax-directed type assignment.

Booleans take their annotation from an optional expected type (``hint``)
threaded down from the context: application arguments get the function's
domain, application heads an arrow into the hint, abstraction bodies the
codomain, choice branches the hint itself, tuple and experiment elements
the element type of a tuple-power hint and projection subjects
``(hint)^j``. Without a usable hint a boolean is typed
``Bool(1 Unit)@0``.
"""
import logging
from dataclasses import dataclass, field

from trustlam.errors import TypeCheckError, Diagnostic
from trustlam.syntax.terms import (
        Arrow, TuplePow, BoolAnn, UNIT_BOOL,
        Var, BoolLit, Const, Abs, App, Choice, Exp, Tuple, Proj, Trust,
        )
from trustlam.syntax.printer import print_type, print_term
from trustlam.typecheck.subtype import SubtypeEnv, subtype, summands, sum_of, join

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TypedTerm:
    """A term with its derived type and the typed immediate subterms."""
    term: object
    ty: object
    children: tuple = field(default=(), repr=False)


def bool_type(hint):
    if isinstance(hint, BoolAnn):
        return hint
    for a in summands(hint) if hint is not None else ():
        if isinstance(a, BoolAnn):
            return a
    return UNIT_BOOL


class Checker:
    """
    Collects diagnostics while typing a term so that errors in sibling
    subterms are all reported at once.

    Args:
        env (SubtypeEnv): Atoms, atomic relation and constant types.
    """
    def __init__(self, env):
        self.env = env
        self.diagnostics = []

    def fail(self, code, message, t):
        line, col = t.pos or (None, None)
        self.diagnostics.append(Diagnostic(code, message, line, col))
        return None

    def declared(self, ty, t):
        try:
            self.env.check_type(ty)
        except TypeCheckError as exc:
            self.diagnostics.extend(exc.diagnostics())
            return False
        return True

    def check(self, t, ctx, hint=None):
        """
        Type t under ctx, returning a TypedTerm or None after recording a diagnostic.
        """
        if isinstance(t, Var):
            if t.name not in ctx:
                return self.fail("unbound-variable", f"Unbound variable {t.name}", t)
            return TypedTerm(t, ctx[t.name])

        if isinstance(t, Const):
            if t.name not in self.env.consts:
                return self.fail("unknown-constant", f"Unknown constant {t.name}", t)
            return TypedTerm(t, self.env.consts[t.name])

        if isinstance(t, BoolLit):
            return TypedTerm(t, bool_type(hint))

        if isinstance(t, Abs):
            if not self.declared(t.ann, t):
                return None
            body_hint = hint.codomain if isinstance(hint, Arrow) else None
            body = self.check(t.body, {**ctx, t.var: t.ann}, body_hint)
            if body is None:
                return None
            return TypedTerm(t, Arrow(t.ann, body.ty), (body,))

        if isinstance(t, App):
            return self.check_app(t, ctx, hint)

        if isinstance(t, Choice):
            branches = [self.check(u, ctx, hint) for u in t.terms]
            if None in branches:
                return None
            return TypedTerm(t, sum_of(b.ty for b in branches), tuple(branches))

        if isinstance(t, Exp):
            elem_hint = hint.element if isinstance(hint, TuplePow) else None
            body = self.check(t.body, ctx, elem_hint)
            if body is None:
                return None
            return TypedTerm(t, TuplePow(body.ty, t.n), (body,))

        if isinstance(t, Tuple):
            elem_hint = hint.element if isinstance(hint, TuplePow) else None
            elements = [self.check(u, ctx, elem_hint) for u in t.elements]
            if None in elements:
                return None
            ty = TuplePow(join(e.ty for e in elements), len(elements))
            return TypedTerm(t, ty, tuple(elements))

        if isinstance(t, Proj):
            subject_hint = TuplePow(hint, t.index) if hint is not None else None
            subject = self.check(t.subject, ctx, subject_hint)
            if subject is None:
                return None
            if not isinstance(subject.ty, TuplePow):
                return self.fail("not-a-tuple", "Projection of a term of non-tuple type "
                                 f"{print_type(subject.ty)}", t)
            if t.index > subject.ty.n:
                return self.fail("index-out-of-range", f"Projection #{t.index} of a "
                                 f"{subject.ty.n}-tuple type {print_type(subject.ty)}", t)
            return TypedTerm(t, subject.ty.element, (subject,))

        if isinstance(t, Trust):
            if not self.declared(BoolAnn(t.ann), t):
                return None
            arg = self.check(t.arg, ctx)
            if arg is None:
                return None
            if not isinstance(arg.ty, TuplePow):
                return self.fail("not-a-tuple", "Trust? needs a tuple of results, got type "
                                 f"{print_type(arg.ty)}", t)
            return TypedTerm(t, BoolAnn(t.ann), (arg,))

        raise TypeError(f"Not a term: {t!r}")

    def check_app(self, t, ctx, hint=None):
        # heads only read the codomain of their hint
        head = self.check(t.fn, ctx, Arrow(None, hint) if hint is not None else None)
        arrows = summands(head.ty) if head is not None else []
        if head is not None and not all(isinstance(a, Arrow) for a in arrows):
            self.fail("not-a-function", f"Cannot apply {print_term(t.fn)} of type "
                      f"{print_type(head.ty)}", t)
            head = None
        arg = self.check(t.arg, ctx, arrows[0].domain if head is not None else None)
        if head is None or arg is None:
            return None
        for a in arrows:
            if not subtype(arg.ty, a.domain, self.env):
                return self.fail("argument-mismatch", f"Argument type {print_type(arg.ty)} "
                                 f"is not a subtype of {print_type(a.domain)}", t)
        return TypedTerm(t, sum_of(a.codomain for a in arrows), (head, arg))


def type_term(t, ctx=None, env=None, hint=None):
    """
    Type t, returning the full TypedTerm.

    Raises:
        TypeCheckError: with every diagnostic found.
    """
    env = env or SubtypeEnv()
    checker = Checker(env)
    typed = checker.check(t, dict(ctx or {}), hint)
    if checker.diagnostics:
        raise TypeCheckError(checker.diagnostics)
    return typed


def infer(t, ctx=None, env=None, hint=None):
    """
    Type of t under variable context ``ctx`` and environment ``env``.

    Args:
        t (Term): Term to type.
        ctx (dict[str, TypeExpr]): Types of free variables.
        env (SubtypeEnv): Atoms, atomic relation and constant types.
        hint (TypeExpr): Expected type, only used to annotate booleans.

    Returns:
        TypeExpr
    """
    return type_term(t, ctx, env, hint).ty


def check_program(program):
    """
    Type a parsed program's main term with its declared constants.

    Returns:
        TypedTerm
    """
    env = SubtypeEnv.from_program(program)
    typed = type_term(program.main, {}, env)
    logger.debug("main : %s", print_type(typed.ty))
    return typed
