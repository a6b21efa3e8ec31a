import os
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from trustlam import env
from trustlam.programs import program_path
from trustlam.syntax import (
        Atom, Sum, TuplePow, BoolAnn, Dist, Const, Var, Abs, App, Choice, Exp, Tuple, Proj,
        Trust, TRUE, FALSE,
        parse_program,
        )
from trustlam.typecheck import SubtypeEnv

test_dir = os.path.abspath(os.path.dirname(__file__))

H, T = Atom('H'), Atom('T')
HT = Sum([H, T])
h, t = Const('h'), Const('t')
COIN_ENV = SubtypeEnv(['H', 'T', 'L', 'R', 'M'],
                      consts={'h': H, 't': T, 'l': Atom('L'), 'r': Atom('R'), 'm': Atom('M')})
LABELS = [Const('l'), Const('r'), Const('m')]


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: statistical and property suites (run by default)')


def load(name):
    """Parse a shipped example program, returning ``(program, env)``."""
    with open(program_path(name)) as file:
        program = parse_program(file.read())
    return program, SubtypeEnv.from_program(program)


@pytest.fixture
def tmp_env(tmp_path, monkeypatch):
    """Temporary trustlam env file, without TRUSTLAM_* process variables."""
    for key in list(os.environ):
        if key.startswith(env.prefix):
            monkeypatch.delenv(key)
    env_file = tmp_path / '.env'
    monkeypatch.setattr(env, 'env_file', str(env_file))
    return env_file


probs = st.sampled_from([Fraction(1, 2), Fraction(1, 3), Fraction(2, 3),
                         Fraction(1, 4), Fraction(3, 4), Fraction(1, 6)])

FAIR_BOOL = BoolAnn(Dist([(Fraction(1, 2), H), (Fraction(1, 2), T)], Fraction(1, 4)))

BASE_TYPES = [H, T, HT, FAIR_BOOL, TuplePow(H, 2), TuplePow(HT, 2), TuplePow(FAIR_BOOL, 2),
              TuplePow(TuplePow(HT, 2), 2)]


@st.composite
def terms_of(draw, ty, depth):
    """
    Closed terms over the coin atoms whose type, inferred with ``ty`` as
    the expected type, is exactly ``ty`` (up to sum normal form). Booleans
    and trust checks only occur at ``FAIR_BOOL``; applications may have a
    choice of two functions with different domains as their head.
    """
    below = max(depth - 1, 0)
    if isinstance(ty, TuplePow):
        if draw(st.booleans()):
            return Exp(ty.n, draw(terms_of(ty.element, below)))
        return Tuple([draw(terms_of(ty.element, below)) for _ in range(ty.n)])

    base = 'bool' if isinstance(ty, BoolAnn) else 'const'
    if isinstance(ty, Sum):
        kinds = ['choice'] + (['beta', 'dup', 'choice_fn'] if depth > 0 else [])
    else:
        kinds = [base] + (['choice', 'beta', 'dup', 'const_fn', 'choice_fn', 'proj']
                          if depth > 0 else [])
    if isinstance(ty, BoolAnn) and depth > 0:
        kinds.append('trust')
    kind = draw(st.sampled_from(kinds))

    if kind == 'const':
        return h if ty == H else t
    if kind == 'bool':
        return draw(st.sampled_from([TRUE, FALSE]))
    if kind == 'trust':
        n = draw(st.integers(1, 3))
        return Trust(draw(terms_of(TuplePow(draw(st.sampled_from([H, HT])), n), below)), ty.ann)
    if kind == 'choice':
        p = draw(probs)
        if isinstance(ty, Sum):
            return Choice([(p, draw(terms_of(H, below))), (1 - p, draw(terms_of(T, below)))])
        return Choice([(p, draw(terms_of(ty, below))), (1 - p, draw(terms_of(ty, below)))])
    if kind == 'beta':
        return App(Abs('x', ty, Var('x')), draw(terms_of(ty, below)))
    if kind == 'dup':
        p = draw(probs)
        body = Choice([(p, Var('x')), (1 - p, Var('x'))])
        return App(Abs('x', ty, body), draw(terms_of(ty, below)))
    if kind == 'const_fn':
        other = draw(st.sampled_from([H, T, HT, FAIR_BOOL]))
        return App(Abs('y', other, draw(terms_of(ty, below))), draw(terms_of(other, below)))
    if kind == 'choice_fn':
        p = draw(probs)
        head = Choice([(p, Abs('y', H, draw(terms_of(ty, below)))),
                       (1 - p, Abs('y', HT, draw(terms_of(ty, below))))])
        return App(head, draw(terms_of(H, below)))
    n = draw(st.integers(1, 2))
    return Proj(draw(terms_of(TuplePow(ty, n), below)), draw(st.integers(1, n)))


def closed_terms(max_depth=8):
    """``(type, term)`` pairs of closed well-typed terms of the base types."""
    return st.tuples(st.sampled_from(BASE_TYPES), st.integers(0, max_depth)).flatmap(
            lambda args: st.tuples(st.just(args[0]), terms_of(*args)))


coin_targets = st.builds(
        lambda p, eps: Dist([(p, H), (1 - p, T)], eps),
        st.sampled_from([Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]),
        st.sampled_from([Fraction(0), Fraction(1, 10), Fraction(1, 4), Fraction(1, 2)]),
        )
