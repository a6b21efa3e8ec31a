"""
Immutable ASTs for terms, types, distribution annotations and programs.

All nodes are frozen dataclasses, so they hash and compare structurally and
can be shared freely. The optional ``pos`` field holds the ``(line, col)`` a
node was parsed from; it never takes part in equality.
"""
from dataclasses import dataclass, field
from fractions import Fraction

UNIT = "Unit"  # reserved atom, implicitly declared in every program


def _pos():
    return field(default=None, compare=False, repr=False)


# ---------------------------------------------------------------- types

@dataclass(frozen=True)
class Atom:
    name: str
    pos: tuple = _pos()


@dataclass(frozen=True)
class Arrow:
    domain: object
    codomain: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Sum:
    summands: tuple
    pos: tuple = _pos()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if not self.summands:
            raise ValueError("Sum type needs at least one summand")


@dataclass(frozen=True)
class TuplePow:
    element: object
    n: int
    pos: tuple = _pos()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Tuple power must be at least 1, got {self.n}")


@dataclass(frozen=True)
class Dist:
    """
    Target distribution annotation ``(q1 B1, ..., qm Bm) @ epsilon``.

    Args:
        entries (tuple[tuple[Fraction, TypeExpr]]): Probability/type pairs.
            The same type may occur more than once.
        epsilon (Fraction): Total variation threshold, may be negative.
    """
    entries: tuple
    epsilon: Fraction = Fraction(0)
    pos: tuple = _pos()

    def __post_init__(self):
        entries = tuple((Fraction(q), ty) for q, ty in self.entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if not entries:
            raise ValueError("Distribution needs at least one entry")
        if any(q < 0 for q, _ in entries):
            raise ValueError("Distribution probabilities must be nonnegative")
        total = sum(q for q, _ in entries)
        if total != 1:
            raise ValueError(f"Distribution probabilities sum to {total}, not 1")

    @property
    def probs(self):
        return tuple(q for q, _ in self.entries)

    @property
    def types(self):
        return tuple(ty for _, ty in self.entries)


@dataclass(frozen=True)
class BoolAnn:
    ann: Dist
    pos: tuple = _pos()


UNIT_BOOL = BoolAnn(Dist(((Fraction(1), Atom(UNIT)),), Fraction(0)))

TYPE_NODES = (Atom, Arrow, Sum, TuplePow, BoolAnn)


# ---------------------------------------------------------------- terms

@dataclass(frozen=True)
class Var:
    name: str
    pos: tuple = _pos()


@dataclass(frozen=True)
class BoolLit:
    value: bool
    pos: tuple = _pos()


@dataclass(frozen=True)
class Const:
    name: str
    pos: tuple = _pos()


@dataclass(frozen=True)
class Abs:
    var: str
    ann: object
    body: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class App:
    fn: object
    arg: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Choice:
    """``{p1 t1, ..., pn tn}``, weights positive and summing to exactly 1."""
    branches: tuple
    pos: tuple = _pos()

    def __post_init__(self):
        branches = tuple((Fraction(p), t) for p, t in self.branches)
        object.__setattr__(self, "branches", branches)
        if not branches:
            raise ValueError("Choice needs at least one branch")
        if any(p <= 0 for p, _ in branches):
            raise ValueError("Choice weights must be positive")
        total = sum(p for p, _ in branches)
        if total != 1:
            raise ValueError(f"Choice weights sum to {total}, not 1")

    @property
    def weights(self):
        return tuple(p for p, _ in self.branches)

    @property
    def terms(self):
        return tuple(t for _, t in self.branches)


@dataclass(frozen=True)
class Exp:
    n: int
    body: object
    pos: tuple = _pos()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Experiment count must be at least 1, got {self.n}")


@dataclass(frozen=True)
class Tuple:
    elements: tuple
    pos: tuple = _pos()

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise ValueError("Tuple needs at least one element")


@dataclass(frozen=True)
class Proj:
    subject: object
    index: int
    pos: tuple = _pos()

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"Projection index must be at least 1, got {self.index}")


@dataclass(frozen=True)
class Trust:
    arg: object
    ann: Dist
    pos: tuple = _pos()


TRUE = BoolLit(True)
FALSE = BoolLit(False)

TERM_NODES = (Var, BoolLit, Const, Abs, App, Choice, Exp, Tuple, Proj, Trust)


# ---------------------------------------------------------------- programs

@dataclass(frozen=True)
class Program:
    """
    Parsed program file.

    Args:
        atoms (tuple[str]): Declared atomic types (``Unit`` excluded).
        subtypes (tuple[tuple[str, str]]): The atomic relation, (sub, super) pairs.
        consts (tuple[tuple[str, str]]): Constant names with their atom.
        main (Term): Program body.
    """
    atoms: tuple
    subtypes: tuple
    consts: tuple
    main: object

    @property
    def const_types(self):
        return {name: Atom(atom) for name, atom in self.consts}


def children(t):
    """Immediate subterms of t, left to right."""
    if isinstance(t, Abs):
        return (t.body,)
    if isinstance(t, App):
        return (t.fn, t.arg)
    if isinstance(t, Choice):
        return t.terms
    if isinstance(t, Exp):
        return (t.body,)
    if isinstance(t, Tuple):
        return t.elements
    if isinstance(t, Proj):
        return (t.subject,)
    if isinstance(t, Trust):
        return (t.arg,)
    return ()
