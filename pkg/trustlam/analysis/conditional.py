"""
Conditional constructs and the conditional, joint and disjunction
probabilities derived from exact output distributions.

The conditional construct ``(s1, ..., sn | {p1 t1, ..., pn tn})`` is encoded as
``(\\x1. ... \\xn. {p1 <t1, x1>, ..., pn <tn, xn>}) s1 ... sn``: the choice picks
a label ti and the pair carries the output of the matching branch si.
"""
from fractions import Fraction

from trustlam.syntax.terms import Dist, Var, Abs, App, Choice, Exp, Tuple, Trust, TRUE
from trustlam.syntax.ops import free_vars, fresh_name, alpha_eq
from trustlam.typecheck import infer, sum_of
from trustlam.analysis.tree import output_distribution


def make_conditional(branches, chooser, env=None, ctx=None):
    """
    Build the conditional construct selecting branch ``s_i`` with the label
    and probability of the i-th alternative of ``chooser``.

    Args:
        branches (sequence[Term]): Terms s1..sn.
        chooser (Choice): ``{p1 t1, ..., pn tn}`` with the same arity.
        env (SubtypeEnv): Used to type the branches for the binder annotations.
        ctx (dict): Variable context.

    Returns:
        Term
    """
    branches = list(branches)
    if not isinstance(chooser, Choice):
        raise TypeError("chooser must be a Choice term")
    if len(branches) != len(chooser.branches):
        raise ValueError(f"{len(branches)} branches for a {len(chooser.branches)}-way choice")
    avoid = set()
    for s in branches + list(chooser.terms):
        avoid |= free_vars(s)
    names = []
    for _ in branches:
        name = fresh_name("x", avoid)
        avoid.add(name)
        names.append(name)
    body = Choice([(p, Tuple([label, Var(x)]))
                   for (p, label), x in zip(chooser.branches, names)])
    for s, x in reversed(list(zip(branches, names))):
        body = Abs(x, infer(s, ctx, env), body)
    term = body
    for s in branches:
        term = App(term, s)
    return term


def conditional_prob(u, i, branches, chooser, env=None, ctx=None):
    """
    Probability that the construct outputs u as second element given that it
    chose label ``t_i``, i.e. the probability that ``s_i`` reduces to u.

    Args:
        u (Term): Value.
        i (int): 1-based branch index.

    Returns:
        Fraction
    """
    branches = list(branches)
    if not 1 <= i <= len(branches):
        raise IndexError(f"Branch index {i} out of range 1..{len(branches)}")
    return output_distribution(branches[i - 1], env, ctx).prob(u)


def first_prob(construct_dist, label):
    """Probability that the first element of a pair output is ``label``."""
    return sum((p for v, p in construct_dist
                if isinstance(v, Tuple) and alpha_eq(v.elements[0], label)), Fraction(0))


def joint_prob(t, s, u, v, env=None, ctx=None):
    """Probability that ``<t, s>`` reduces to ``<u, v>``."""
    return output_distribution(Tuple([t, s]), env, ctx).prob(Tuple([u, v]))


def disjunction_prob(t, tys, env=None, ctx=None):
    """
    Probability that t outputs a value of one of the types ``tys``, computed
    as the probability that ``trust exp[1] t with (1 A1+...+Ak)@0`` is true.
    """
    target = Dist([(Fraction(1), sum_of(list(tys)))], Fraction(0))
    return output_distribution(Trust(Exp(1, t), target), env, ctx).prob(TRUE)


def make_dependent_conditional(body, x, s, env=None, ctx=None, ann=None):
    """
    Conditional construct whose branches are ``(\\x. body) v`` for every output
    v of s, chosen with v's exact probability and labelled by v.

    Args:
        body (Term): Term depending on x.
        x (str): Variable name.
        s (Term): Closed term whose outputs feed x.
        ann (TypeExpr): Annotation of x, defaults to the type of s.
    """
    ann = ann if ann is not None else infer(s, ctx, env)
    outputs = output_distribution(s, env, ctx)
    fn = Abs(x, ann, body)
    chooser = Choice([(p, v) for v, p in outputs])
    return make_conditional([App(fn, v) for v, _ in outputs], chooser, env, ctx)


def dependent_prob(v, s_value, body, x, env=None, ctx=None, ann=None):
    """
    Probability that ``body[s/x]`` reduces to v given that s reduced to
    ``s_value``.
    """
    ann = ann if ann is not None else infer(s_value, ctx, env)
    return output_distribution(App(Abs(x, ann, body), s_value), env, ctx).prob(v)
