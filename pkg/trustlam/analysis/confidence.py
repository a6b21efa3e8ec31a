"""
Confidence values: the probability that Trust? on an experiment of n runs
of a term reduces to true, as a function of n.

The literal reduction tree of ``trust exp[n] t with P`` grows exponentially
with n. :func:`confidence` instead groups the exact outputs of t into the
target's buckets and sums multinomial probabilities of the count vectors that
pass the check, which gives the same rational.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, lcm

from trustlam.errors import EnumerationLimitError
from trustlam.syntax.terms import Dist, Exp, Trust, TRUE
from trustlam.syntax.printer import print_term, print_dist
from trustlam.typecheck import infer, normalize_type
from trustlam.machine.distance import TrustTest
from trustlam.analysis.tree import build_tree, output_distribution, DEFAULT_NODE_LIMIT
from trustlam.utils import frac2str, next_color

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = Fraction(1, 20)
DEFAULT_ENUMERATION_LIMIT = 2000000


def compositions(n, parts):
    """All tuples of ``parts`` nonnegative integers summing to n."""
    if parts == 1:
        yield (n,)
        return
    for k in range(n + 1):
        for rest in compositions(n - k, parts - 1):
            yield (k,) + rest


def bucket_probs(t, target, env=None, ctx=None, limit=DEFAULT_NODE_LIMIT):
    """
    Probability that one run of t lands in each target entry, plus the
    probability it matches no entry.

    Returns:
        tuple: ``(list[Fraction], Fraction)``
    """
    test = TrustTest(target, env, ctx)
    probs, miss = [Fraction(0)] * len(target.entries), Fraction(0)
    for value, p in output_distribution(t, env, ctx, limit):
        j = test.bucket(value)
        if j is None:
            miss += p
        else:
            probs[j] += p
    return probs, miss


def confidence(t, target, n, env=None, ctx=None, limit=DEFAULT_ENUMERATION_LIMIT,
               node_limit=DEFAULT_NODE_LIMIT):
    """
    Exact probability that ``trust exp[n] t with target`` reduces to true.
    The threshold is ``target.epsilon``.

    Args:
        t (Term): Closed, well-typed term.
        target (Dist): Target distribution and threshold.
        n (int): Number of runs in the experiment.
        env (SubtypeEnv): Subtype environment.
        ctx (dict): Variable context.
        limit (int): Max number of count vectors enumerated.
        node_limit (int): Max number of distinct terms explored for the outputs of t.

    Returns:
        Fraction

    Raises:
        EnumerationLimitError: too many count vectors for this n.
    """
    probs, _ = bucket_probs(t, target, env, ctx, node_limit)
    return _confidence(probs, TrustTest(target, env, ctx), n, limit)


def _confidence(probs, test, n, limit):
    if n < 1:
        raise ValueError(f"Number of runs must be positive, got {n}")
    if test.target.epsilon >= 1:
        # total variation never exceeds 1
        return Fraction(1)
    # below that a run outside every bucket fails the check, so only vectors
    # over buckets of positive mass can contribute
    live = [j for j, r in enumerate(probs) if r > 0]
    if not live:
        return Fraction(0)
    needed = comb(n + len(live) - 1, len(live) - 1)
    if needed > limit:
        raise EnumerationLimitError(limit, needed)
    logger.debug("confidence n=%d over %d buckets: %d count vectors", n, len(live), needed)

    denom = lcm(*(probs[j].denominator for j in live))
    weights = [probs[j].numerator * (denom // probs[j].denominator) for j in live]
    total = 0
    counts = [0] * len(probs)
    for vector in compositions(n, len(live)):
        for j, k in zip(live, vector):
            counts[j] = k
        if not test.passes(counts):
            continue
        term, remaining = 1, n
        for w, k in zip(weights, vector):
            term *= comb(remaining, k) * w**k
            remaining -= k
        total += term
    return Fraction(total, denom**n)


def confidence_via_tree(t, target, n, env=None, ctx=None, node_limit=DEFAULT_NODE_LIMIT):
    """
    Same value as :func:`confidence`, obtained by building the reduction tree
    of ``trust exp[n] t with target`` and summing the probabilities of its
    ``true`` leaves. Only feasible for small n.
    """
    tree = build_tree(Trust(Exp(n, t), target), env, ctx, node_limit)
    return sum((p for leaf, p in tree.leaves() if leaf.term == TRUE), Fraction(0))


def trust_target(t, env=None, ctx=None, epsilon=DEFAULT_EPSILON, limit=DEFAULT_NODE_LIMIT):
    """
    The distribution t itself produces, as a target: output probabilities
    summed per output type. Confidence against it approaches 1 as n grows.

    Returns:
        Dist
    """
    masses = {}
    for value, p in output_distribution(t, env, ctx, limit):
        ty = normalize_type(infer(value, ctx, env))
        masses[ty] = masses.get(ty, Fraction(0)) + p
    return Dist([(m, ty) for ty, m in masses.items()], epsilon)


@dataclass(frozen=True)
class ConfidenceCurve:
    """
    Confidence values of one term against one target.

    Args:
        term (Term): Tested term.
        target (Dist): Target distribution and threshold.
        points (tuple[tuple[int, Fraction]]): ``(n, confidence)`` pairs, n increasing.
    """
    term: object
    target: Dist
    points: tuple

    @property
    def ns(self):
        return tuple(n for n, _ in self.points)

    def value(self, n):
        return dict(self.points)[n]

    def to_dict(self, decimal=False):
        return {
            "term": print_term(self.term),
            "target": print_dist(self.target),
            "points": [{"n": n, "confidence": frac2str(v, decimal)} for n, v in self.points],
        }

    def plot(self, ax=None, color=None, label=None):
        """
        Plot confidence versus n with matplotlib.

        Args:
            ax (Axes): Specific mpl Axes to plot on.
            color (str): Color to use for plot.
            label (str): Label to use for legend entry.
        """
        import matplotlib.pyplot as plt
        ax = plt.gca() if ax is None else ax
        color = next_color(0) if color is None else color
        ax.plot(self.ns, [float(v) for _, v in self.points], "-o", markersize=3,
                color=color, label=label or print_dist(self.target))
        ax.set_xlabel("n (runs)", fontsize=14)
        ax.set_ylabel("Pr(Trust? = true)", fontsize=14)
        ax.set_ylim(-0.02, 1.02)
        return ax


def confidence_curve(t, target, n_max, env=None, ctx=None, ns=None,
                     limit=DEFAULT_ENUMERATION_LIMIT, node_limit=DEFAULT_NODE_LIMIT):
    """
    Confidence values for n = 1..n_max (or for the explicit grid ``ns``).

    Returns:
        ConfidenceCurve
    """
    ns = list(ns) if ns is not None else list(range(1, n_max + 1))
    probs, _ = bucket_probs(t, target, env, ctx, node_limit)
    test = TrustTest(target, env, ctx)
    points = tuple((n, _confidence(probs, test, n, limit)) for n in ns)
    return ConfidenceCurve(t, target, points)


class Verdict(Enum):
    PRECEDES = "precedes"
    SUCCEEDS = "succeeds"
    EQUIVALENT = "equivalent"
    INCONCLUSIVE = "inconclusive"

    @property
    def at_most(self):
        """Non-strict order: the first curve precedes or is equivalent to the second."""
        return self in (Verdict.PRECEDES, Verdict.EQUIVALENT)


def compare_confidence(c1, c2, tol=Fraction(1, 100), window=5):
    """
    Finite-sample estimate of the limit of c1(n)/c2(n), looking at the ratio
    at the ``window`` largest grid points. This is a heuristic, the limit
    itself is not computed.

    Args:
        c1 (ConfidenceCurve): First curve.
        c2 (ConfidenceCurve): Second curve, on the same n grid.
        tol (Fraction): Ratios within ``tol`` of 1 count as equal.
        window (int): Number of grid points compared.

    Returns:
        Verdict: PRECEDES if every ratio is below ``1 - tol``, SUCCEEDS if every
        ratio is above ``1 + tol``, EQUIVALENT if all are within ``tol`` of 1,
        INCONCLUSIVE otherwise or when c2 vanishes at a compared point.
    """
    if c1.ns != c2.ns:
        raise ValueError("Confidence curves must share the same n grid")
    ratios = []
    for (n, f), (_, g) in list(zip(c1.points, c2.points))[-window:]:
        if g == 0:
            logger.info("second curve is 0 at n=%d, ratio undefined", n)
            return Verdict.INCONCLUSIVE
        ratios.append(Fraction(f) / g)
    if all(r < 1 - tol for r in ratios):
        return Verdict.PRECEDES
    if all(r > 1 + tol for r in ratios):
        return Verdict.SUCCEEDS
    if all(abs(r - 1) <= tol for r in ratios):
        return Verdict.EQUIVALENT
    return Verdict.INCONCLUSIVE
