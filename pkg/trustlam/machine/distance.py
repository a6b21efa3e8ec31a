"""
Total variation distance, the frequency encoding of a tuple of results and
the Trust? check built on both.
"""
import logging
from fractions import Fraction

from trustlam.syntax.terms import Dist, TRUE, FALSE
from trustlam.syntax.printer import print_term, print_type
from trustlam.typecheck import SubtypeEnv, infer, subtype, normalize_type

logger = logging.getLogger(__name__)


class _NoMatch:
    """Marker for a tuple holding a value that matches no target entry."""

    def __repr__(self):
        return "NO_MATCH"


NO_MATCH = _NoMatch()


def type_masses(dist):
    """Summed probability per type (up to sum normal form)."""
    masses = {}
    for q, ty in dist.entries:
        key = normalize_type(ty)
        masses[key] = masses.get(key, Fraction(0)) + q
    return masses


def tv_from_masses(p, q):
    support_p = {k for k, v in p.items() if v > 0}
    support_q = {k for k, v in q.items() if v > 0}
    if not (support_p <= support_q or support_q <= support_p):
        return Fraction(1)
    keys = set(p) | set(q)
    return max((abs(p.get(k, 0) - q.get(k, 0)) for k in keys), default=Fraction(0))


def tv_distance(p, q, env=None):
    """
    Total variation distance between two annotations: the largest absolute
    difference of the masses given to one type, or 1 when neither support
    contains the other. Masses of repeated types are summed first.

    Args:
        p (Dist): First distribution.
        q (Dist or NO_MATCH): Second distribution.
        env (SubtypeEnv): Unused, types are compared for equality.

    Returns:
        Fraction
    """
    if p is NO_MATCH or q is NO_MATCH:
        return Fraction(1)
    return tv_from_masses(type_masses(p), type_masses(q))


class TrustTest:
    """
    Trust? check against one target, shared by the reduction rule and the
    exact confidence computation so both use the same grouping.

    Each value goes to the first target entry whose type it is a subtype of
    (the value typed with that entry as expected type). A value matching
    several entries is logged as a warning.

    Args:
        target (Dist): Annotation ``(q1 B1, ..., qm Bm) @ epsilon``.
        env (SubtypeEnv): Subtype environment of the program.
        ctx (dict): Variable context used to type values.
    """
    def __init__(self, target, env=None, ctx=None):
        self.target = target
        self.env = env or SubtypeEnv()
        self.ctx = ctx or {}
        self.masses = type_masses(target)
        self.keys = [normalize_type(ty) for ty in target.types]
        self._buckets = {}

    def bucket(self, value):
        """Index of the first matching entry, or None."""
        if value in self._buckets:
            return self._buckets[value]
        matches = [j for j, ty in enumerate(self.target.types)
                   if subtype(infer(value, self.ctx, self.env, hint=ty), ty, self.env)]
        distinct = {self.keys[j] for j in matches}
        if len(distinct) > 1:
            logger.warning("%s matches several target types (%s), grouped with %s",
                           print_term(value),
                           ", ".join(print_type(self.target.types[j]) for j in matches),
                           print_type(self.target.types[matches[0]]))
        result = matches[0] if matches else None
        self._buckets[value] = result
        return result

    def counts(self, values):
        """Per-entry counts and number of unmatched values."""
        counts, miss = [0] * len(self.keys), 0
        for v in values:
            j = self.bucket(v)
            if j is None:
                miss += 1
            else:
                counts[j] += 1
        return counts, miss

    def distance(self, counts, miss=0):
        if miss:
            return Fraction(1)
        n = sum(counts)
        empirical = {}
        for key, k in zip(self.keys, counts):
            empirical[key] = empirical.get(key, Fraction(0)) + Fraction(k, n)
        return tv_from_masses(self.masses, empirical)

    def passes(self, counts, miss=0):
        return self.distance(counts, miss) <= self.target.epsilon

    def empirical(self, values):
        counts, miss = self.counts(values)
        if miss:
            return NO_MATCH
        n = len(values)
        return Dist([(Fraction(k, n), ty) for k, ty in zip(counts, self.target.types)])

    def check(self, values):
        counts, miss = self.counts(values)
        return TRUE if self.passes(counts, miss) else FALSE


def empirical_dist(values, target, env=None, ctx=None):
    """
    Distribution encoded by a tuple of values, grouped by the target's entry
    types in declaration order.

    Args:
        values (sequence[Term]): Closed values.
        target (Dist): Target annotation giving the entry types.
        env (SubtypeEnv): Subtype environment.
        ctx (dict): Variable context.

    Returns:
        Dist or NO_MATCH: ``count_j/n`` on entry j, or NO_MATCH if some value
        matches no entry.
    """
    return TrustTest(target, env, ctx).empirical(list(values))


def trust_check(values, annotation, env=None, ctx=None):
    """``true`` iff the tuple's frequencies are within epsilon of the annotation."""
    return TrustTest(annotation, env, ctx).check(list(values))
