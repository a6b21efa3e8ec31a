"""
Subtype relation extending the declared atomic relation to complex types,
plus the sum normal form used for type equality.
"""
from fractions import Fraction

from trustlam.errors import TypeCheckError, Diagnostic
from trustlam.syntax.terms import Atom, Arrow, Sum, TuplePow, BoolAnn, Dist, UNIT
from trustlam.syntax.printer import print_type


class SubtypeEnv:
    """
    Declared atoms, the atomic subtype relation and constant types.

    Args:
        atoms (iterable[str]): Declared atom names (``Unit`` is always added).
        edges (iterable[tuple[str, str]]): Atomic relation as (sub, super) pairs.
        consts (dict[str, Atom]): Constant name to its atomic type.
    """
    def __init__(self, atoms=(), edges=(), consts=None):
        self.atoms = frozenset(atoms) | {UNIT}
        self.edges = frozenset(tuple(e) for e in edges)
        self.consts = dict(consts or {})
        for sub, sup in self.edges:
            self.check_atom(sub)
            self.check_atom(sup)
        self.closure = self._close()

    @classmethod
    def from_program(cls, program):
        return cls(program.atoms, program.subtypes, program.const_types)

    def _close(self):
        # reflexive-transitive closure, one graph search per atom
        above = {a: set() for a in self.atoms}
        for sub, sup in self.edges:
            above[sub].add(sup)
        closure = set()
        for start in self.atoms:
            seen, stack = {start}, [start]
            while stack:
                for nxt in above[stack.pop()]:
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            closure.update((start, b) for b in seen)
        return frozenset(closure)

    def check_atom(self, name, pos=None):
        if name not in self.atoms:
            line, col = pos or (None, None)
            raise TypeCheckError([Diagnostic("undeclared-atom", f"Type {name} is not declared",
                                             line, col)])

    def check_type(self, ty):
        """Raise TypeCheckError if ty mentions an undeclared atom."""
        if isinstance(ty, Atom):
            self.check_atom(ty.name, ty.pos)
        elif isinstance(ty, Arrow):
            self.check_type(ty.domain)
            self.check_type(ty.codomain)
        elif isinstance(ty, Sum):
            for a in ty.summands:
                self.check_type(a)
        elif isinstance(ty, TuplePow):
            self.check_type(ty.element)
        elif isinstance(ty, BoolAnn):
            self.check_dist(ty.ann)

    def check_dist(self, dist):
        for _, ty in dist.entries:
            self.check_type(ty)

    def atom_sub(self, a, b):
        return (a, b) in self.closure

    def __repr__(self):
        return f"SubtypeEnv(atoms={sorted(self.atoms)}, edges={sorted(self.edges)})"


def summands(ty):
    """Flattened summands of ty; a non-sum is its own single summand."""
    if isinstance(ty, Sum):
        out = []
        for a in ty.summands:
            out.extend(summands(a))
        return out
    return [ty]


def sum_of(types):
    """
    Sum of the distinct types in ``types`` (flattened, first occurrence
    order, equality up to normal form). A single distinct type is returned bare.
    """
    distinct, keys = [], set()
    for ty in types:
        for a in summands(ty):
            key = normalize_type(a)
            if key not in keys:
                keys.add(key)
                distinct.append(a)
    if len(distinct) == 1:
        return distinct[0]
    return Sum(distinct)


def join(types):
    """
    Canonical common supertype of a nonempty list of types (the Sum of the
    distinct ones). Every input is a subtype of the result.
    """
    types = list(types)
    if not types:
        raise ValueError("join of no types")
    return sum_of(types)


def normalize_type(ty):
    """
    Sum normal form: sums flattened, deduplicated and ordered by printed form,
    distributions merged per type. Positions are dropped.
    """
    if isinstance(ty, Atom):
        return Atom(ty.name)
    if isinstance(ty, Arrow):
        return Arrow(normalize_type(ty.domain), normalize_type(ty.codomain))
    if isinstance(ty, Sum):
        parts = {}
        for a in summands(ty):
            a = normalize_type(a)
            for b in summands(a):
                parts.setdefault(print_type(b), b)
        if len(parts) == 1:
            return next(iter(parts.values()))
        return Sum([parts[k] for k in sorted(parts)])
    if isinstance(ty, TuplePow):
        return TuplePow(normalize_type(ty.element), ty.n)
    if isinstance(ty, BoolAnn):
        return BoolAnn(normalize_dist(ty.ann))
    raise TypeError(f"Not a type: {ty!r}")


def normalize_dist(dist):
    """Masses summed per normalized type, entries ordered by printed type."""
    masses, types = {}, {}
    for q, ty in dist.entries:
        ty = normalize_type(ty)
        key = print_type(ty)
        masses[key] = masses.get(key, Fraction(0)) + q
        types[key] = ty
    return Dist([(masses[k], types[k]) for k in sorted(masses)], dist.epsilon)


def type_equal(a, b):
    return normalize_type(a) == normalize_type(b)


def subtype(a, b, env):
    """
    Decide ``a <: b``.

    Sums compare summand-wise (each summand of a is below some summand of b),
    a non-sum counting as a one-summand sum. Arrows are contravariant in the
    domain, ``(A)^m <: (B)^n`` needs ``m >= n`` and ``A <: B``, and annotated
    booleans are only related when their annotations are equal.

    Args:
        a (TypeExpr): Candidate subtype.
        b (TypeExpr): Candidate supertype.
        env (SubtypeEnv): Atoms and atomic relation.

    Returns:
        bool
    """
    env.check_type(a)
    env.check_type(b)
    return _sub(a, b, env)


def _sub(a, b, env):
    if isinstance(a, Sum) or isinstance(b, Sum):
        targets = summands(b)
        return all(any(_sub1(x, y, env) for y in targets) for x in summands(a))
    return _sub1(a, b, env)


def _sub1(a, b, env):
    if isinstance(a, Atom) and isinstance(b, Atom):
        return env.atom_sub(a.name, b.name)
    if isinstance(a, Arrow) and isinstance(b, Arrow):
        return _sub(b.domain, a.domain, env) and _sub(a.codomain, b.codomain, env)
    if isinstance(a, TuplePow) and isinstance(b, TuplePow):
        return a.n >= b.n and _sub(a.element, b.element, env)
    if isinstance(a, BoolAnn) and isinstance(b, BoolAnn):
        return normalize_dist(a.ann) == normalize_dist(b.ann)
    return False
