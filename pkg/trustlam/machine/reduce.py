"""
Call-by-name reduction.

The redex is found by walking down the term: the head of an application,
the leftmost non-value element of a tuple, the subject of a projection
(until it is a literal tuple) and the argument of Trust? (until it is a
tuple of values). Choices, experiments, beta redexes, projections of
literal tuples and Trust? on tuples of values fire where they stand. An
experiment copies its body unevaluated.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from trustlam.errors import StuckTermError, FuelExhaustedError
from trustlam.syntax.terms import Var, Abs, App, Choice, Exp, Tuple, Proj, Trust, children
from trustlam.syntax.ops import is_value, substitute
from trustlam.syntax.printer import print_term
from trustlam.utils import frac2str
from trustlam.machine.distance import TrustTest
from trustlam.machine.rng import RngState, sample_choice

logger = logging.getLogger(__name__)

DEFAULT_FUEL = 10**6
ONE = Fraction(1)


class Rule(Enum):
    BETA = "beta"
    CHOICE = "choice"
    EXP = "exp"
    PROJ = "proj"
    TRUST_TRUE = "trust-true"
    TRUST_FALSE = "trust-false"


@dataclass(frozen=True)
class StepOutcome:
    """
    One reduction step of a whole term.

    Args:
        reduct (Term): Whole term after the step.
        probability (Fraction): Probability of this alternative (1 unless a choice fired).
        rule (Rule): Rule applied at the redex.
        path (tuple[int]): Child indices from the root down to the redex.
        redex (Term): The contracted subterm.
    """
    reduct: object
    probability: object
    rule: Rule
    path: tuple = ()
    redex: object = field(default=None, repr=False)

    @property
    def tag(self):
        """Rule name, or ``'context'`` when the redex is not the whole term."""
        return "context" if self.path else self.rule.value


def replace_child(t, i, new):
    """Copy of t with its i-th immediate subterm replaced."""
    if isinstance(t, Abs):
        return Abs(t.var, t.ann, new, pos=t.pos)
    if isinstance(t, App):
        return App(new, t.arg, pos=t.pos) if i == 0 else App(t.fn, new, pos=t.pos)
    if isinstance(t, Choice):
        branches = list(t.branches)
        branches[i] = (branches[i][0], new)
        return Choice(branches, pos=t.pos)
    if isinstance(t, Exp):
        return Exp(t.n, new, pos=t.pos)
    if isinstance(t, Tuple):
        elements = list(t.elements)
        elements[i] = new
        return Tuple(elements, pos=t.pos)
    if isinstance(t, Proj):
        return Proj(new, t.index, pos=t.pos)
    if isinstance(t, Trust):
        return Trust(new, t.ann, pos=t.pos)
    raise TypeError(f"{type(t).__name__} has no subterms")


def plug(t, path, new):
    """Replace the subterm of t at ``path`` by ``new``."""
    if not path:
        return new
    i = path[0]
    return replace_child(t, i, plug(children(t)[i], path[1:], new))


def decompose(t):
    """
    Locate the redex selected by the call-by-name strategy.

    Args:
        t (Term): Closed non-value term.

    Returns:
        tuple: ``(redex, path)``

    Raises:
        StuckTermError: t is a value, or a non-value with no redex.
    """
    path = []
    u = t
    while True:
        if isinstance(u, (Choice, Exp)):
            return u, tuple(path)
        if isinstance(u, App):
            if isinstance(u.fn, Abs):
                return u, tuple(path)
            if is_value(u.fn):
                raise StuckTermError(f"Cannot apply value {print_term(u.fn)}")
            path.append(0)
            u = u.fn
        elif isinstance(u, Proj):
            if isinstance(u.subject, Tuple):
                return u, tuple(path)
            path.append(0)
            u = u.subject
        elif isinstance(u, Trust):
            if isinstance(u.arg, Tuple) and is_value(u.arg):
                return u, tuple(path)
            path.append(0)
            u = u.arg
        elif isinstance(u, Tuple):
            for i, e in enumerate(u.elements):
                if not is_value(e):
                    break
            else:
                raise StuckTermError(f"{print_term(t)} is a value")
            path.append(i)
            u = e
        elif isinstance(u, Var):
            raise StuckTermError(f"Free variable {u.name} in {print_term(t)}")
        else:
            raise StuckTermError(f"{print_term(u)} is a value")


def contract(redex, env=None, ctx=None):
    """
    All alternatives of a redex as ``(probability, reduct, Rule)`` triples,
    in branch order. Equal reducts of distinct branches stay distinct.
    """
    if isinstance(redex, Choice):
        return [(p, u, Rule.CHOICE) for p, u in redex.branches]
    if isinstance(redex, Exp):
        return [(ONE, Tuple([redex.body] * redex.n), Rule.EXP)]
    if isinstance(redex, App):
        fn = redex.fn
        return [(ONE, substitute(fn.body, redex.arg, fn.var), Rule.BETA)]
    if isinstance(redex, Proj):
        elements = redex.subject.elements
        if redex.index > len(elements):
            raise StuckTermError(f"Projection #{redex.index} of a {len(elements)}-tuple")
        return [(ONE, elements[redex.index - 1], Rule.PROJ)]
    if isinstance(redex, Trust):
        verdict = TrustTest(redex.ann, env, ctx).check(redex.arg.elements)
        rule = Rule.TRUST_TRUE if verdict.value else Rule.TRUST_FALSE
        return [(ONE, verdict, rule)]
    raise StuckTermError(f"{print_term(redex)} is not a redex")


def alternatives(t, env=None, ctx=None):
    """
    Every probabilistic alternative of the single call-by-name step of t.
    Probabilities sum to exactly 1.

    Returns:
        list[StepOutcome]
    """
    redex, path = decompose(t)
    return [StepOutcome(plug(t, path, reduct), p, rule, path, redex)
            for p, reduct, rule in contract(redex, env, ctx)]


def step(t, rng, env=None, ctx=None):
    """
    Perform one call-by-name step, sampling the branch of a choice with ``rng``.

    Args:
        t (Term): Closed, well-typed non-value.
        rng (RngState): Random state, advanced when a choice fires.
        env (SubtypeEnv): Subtype environment (used by Trust?).
        ctx (dict): Variable context (used by Trust?).

    Returns:
        StepOutcome
    """
    redex, path = decompose(t)
    options = contract(redex, env, ctx)
    i = sample_choice([p for p, _, _ in options], rng) if len(options) > 1 else 0
    p, reduct, rule = options[i]
    return StepOutcome(plug(t, path, reduct), p, rule, path, redex)


@dataclass
class Trace:
    """
    Record of one evaluation.

    Args:
        seed (int): Seed of the run.
        steps (list[tuple[Term, StepOutcome]]): Term before each step and the step.
        final (Term): Value reached.
        n_steps (int): Number of steps, also counted when steps are not recorded.
    """
    seed: int
    steps: list
    final: object
    n_steps: int = 0

    def to_dict(self):
        return {
            "seed": self.seed,
            "steps": [{"rule": s.tag,
                       "redex": print_term(s.redex),
                       "prob": frac2str(s.probability),
                       "term": print_term(s.reduct)} for _, s in self.steps],
            "final": print_term(self.final),
        }


def evaluate(t, seed=0, fuel=DEFAULT_FUEL, env=None, ctx=None, record=True):
    """
    Reduce t to a value, resolving choices with a PRNG seeded by ``seed``.
    Same seed and term give the same trace.

    Args:
        t (Term): Closed, well-typed term.
        seed (int): Unsigned 64-bit seed.
        fuel (int): Max number of steps.
        env (SubtypeEnv): Subtype environment.
        ctx (dict): Variable context.
        record (bool): Keep every step in the trace (disable for bulk runs).

    Returns:
        Trace

    Raises:
        FuelExhaustedError: no value after ``fuel`` steps.
    """
    rng = RngState(seed)
    steps, n = [], 0
    while not is_value(t):
        if n >= fuel:
            raise FuelExhaustedError(f"No value after {fuel} steps (seed {seed})")
        outcome = step(t, rng, env, ctx)
        if record:
            steps.append((t, outcome))
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug("%s %s -> %s", outcome.tag, frac2str(outcome.probability),
                         print_term(outcome.reduct))
        t = outcome.reduct
        n += 1
    return Trace(seed, steps, t, n)
