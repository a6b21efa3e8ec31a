from fractions import Fraction

import pytest
from hypothesis import given, settings, HealthCheck, strategies as st

from trustlam.errors import ParseError
from trustlam.programs import program_names
from trustlam.syntax import (
        Atom, Arrow, Sum, TuplePow, BoolAnn, Dist, Var, BoolLit, Const, Abs, App, Choice, Exp,
        Tuple, Proj, Trust, TRUE,
        parse_program, parse_term, parse_type, parse_dist,
        print_term, print_type, print_dist, print_program,
        free_vars, is_closed, substitute, alpha_eq, alpha_normal, is_value, size, subterms,
        )

from conftest import H, T, h, t, load, probs, closed_terms


def test_parse_coin():
    program, _ = load('coin')
    assert program.atoms == ('H', 'T')
    assert program.subtypes == ()
    assert program.consts == (('h', 'H'), ('t', 'T'))
    assert program.main == Choice([(Fraction(1, 2), h), (Fraction(1, 2), t)])


def test_parse_subtypes():
    program, env = load('even_odd')
    assert ('Two', 'Even') in program.subtypes
    assert env.atom_sub('Four', 'Even')
    assert not env.atom_sub('Four', 'Odd')


@pytest.mark.parametrize('name', program_names())
def test_print_parses_back(name):
    program, _ = load(name)
    assert parse_program(print_program(program)) == program


def test_positions():
    program = parse_program('type H;\nconst h : H;\nmain = <h,\n  zz>')
    assert program.main.pos == (3, 8)
    assert program.main.elements[1].pos == (4, 3)


def test_precedence():
    f, x = Var('f'), Var('x')
    assert parse_term('f x#2') == App(f, Proj(x, 2))
    assert parse_term('exp[2] f x') == App(Exp(2, f), x)
    assert parse_term('f g x') == App(App(f, Var('g')), x)
    assert parse_term('\\x:H. f x', consts=['f']) == Abs('x', H, App(Const('f'), x))


def test_bound_names_shadow_constants():
    term = parse_term('\\h:H. h', consts=['h'])
    assert term == Abs('h', H, Var('h'))


def test_parse_types():
    assert parse_type('H+T') == Sum([H, T])
    assert parse_type('(H+T)^4') == TuplePow(Sum([H, T]), 4)
    assert parse_type('H+(T+H)') == Sum([H, T, H])
    ty = parse_type('H->T->H')
    assert print_type(ty) == 'H->T->H'
    assert print_type(parse_type('(H->T)->H')) == '(H->T)->H'
    assert print_type(parse_type('(H->T)+H')) == '(H->T)+H'


def test_parse_dist():
    dist = parse_dist('(1/2 H, 1/2 T)@1/20')
    assert dist == Dist([(Fraction(1, 2), H), (Fraction(1, 2), T)], Fraction(1, 20))
    assert parse_dist('(1 H)@-1/2').epsilon == Fraction(-1, 2)
    assert print_dist(dist) == '(1/2 H, 1/2 T)@1/20'
    assert parse_type('Bool(1 Unit)@0') == BoolAnn(Dist([(1, Atom('Unit'))], 0))


def test_print_terms():
    term = parse_term('(\\x:H. {1/3 x, 2/3 t}) h', consts=['h', 't'])
    assert print_term(term) == '(\\x:H. {1/3 x, 2/3 t}) h'
    assert print_term(Trust(Exp(2, h), Dist([(1, H)], 0))) == 'trust exp[2] h with (1 H)@0'
    assert print_term(Proj(App(Var('f'), h), 1)) == '(f h)#1'
    assert print_term(Tuple([TRUE, BoolLit(False)])) == '<true, false>'


@pytest.mark.parametrize('text, code, where', [
    ('', 'syntax', (1, 1)),
    ('main = $', 'syntax', (1, 8)),
    ('type H;\ntype H;\nmain = true', 'duplicate-declaration', (2, 6)),
    ('const h : H;\nmain = h', 'undeclared-atom', (1, 11)),
    ('type H;\nconst h : H;\nmain = {1/2 h, 1/3 h}', 'bad-weights', (3, 8)),
    ('main = trust <true> with (1/2 Unit)@0', 'bad-distribution', (1, 26)),
    ('main = {1/0 true}', 'syntax', (1, 9)),
    ('main = exp[0] true', 'syntax', (1, 8)),
])
def test_parse_errors(text, code, where):
    with pytest.raises(ParseError) as excinfo:
        parse_program(text)
    assert excinfo.value.code == code
    assert (excinfo.value.line, excinfo.value.col) == where
    assert excinfo.value.exit_code == 3


def test_free_vars():
    term = Abs('x', H, App(Var('x'), Var('y')))
    assert free_vars(term) == {'y'}
    assert not is_closed(term)
    assert is_closed(Abs('y', H, term))


def test_substitute_avoids_capture():
    term = Abs('y', H, App(Var('x'), Var('y')))
    result = substitute(term, Var('y'), 'x')
    assert result == Abs('y_1', H, App(Var('y'), Var('y_1')))


def test_substitute_stops_at_binder():
    term = Abs('x', H, Var('x'))
    assert substitute(term, h, 'x') == term
    assert substitute(Tuple([Var('x'), Var('x')]), h, 'x') == Tuple([h, h])


def test_alpha():
    assert alpha_eq(Abs('x', H, Var('x')), Abs('z', H, Var('z')))
    k = Abs('x', H, Abs('y', H, Var('x')))
    assert not alpha_eq(k, Abs('x', H, Abs('y', H, Var('y'))))
    assert alpha_normal(k) == alpha_normal(Abs('a', H, Abs('b', H, Var('a'))))
    assert not alpha_eq(Abs('x', H, Var('x')), Abs('x', T, Var('x')))


def test_values():
    assert is_value(h)
    assert is_value(TRUE)
    assert is_value(Abs('x', H, Choice([(Fraction(1, 2), h), (Fraction(1, 2), t)])))
    assert is_value(Tuple([h, Tuple([t, TRUE])]))
    assert not is_value(Tuple([h, App(Abs('x', H, Var('x')), h)]))
    assert not is_value(Choice([(1, h)]))
    assert not is_value(Var('x'))


def test_node_validation():
    with pytest.raises(ValueError):
        Choice([(Fraction(1, 2), h)])
    with pytest.raises(ValueError):
        Choice([(Fraction(3, 2), h), (Fraction(-1, 2), t)])
    with pytest.raises(ValueError):
        Exp(0, h)
    with pytest.raises(ValueError):
        Proj(h, 0)
    with pytest.raises(ValueError):
        Dist([(Fraction(1, 2), H)])
    with pytest.raises(ValueError):
        TuplePow(H, 0)


def test_size():
    assert size(parse_term('<h, {1/2 h, 1/2 t}>', consts=['h', 't'])) == 5


def test_subterms_preorder():
    coin = Choice([(Fraction(1, 2), h), (Fraction(1, 2), t)])
    term = Tuple([Abs('x', H, Var('x')), coin])
    assert list(subterms(term)) == [term, Abs('x', H, Var('x')), Var('x'), coin, h, t]


def test_print_nested_sums():
    assert print_type(Sum([H])) == 'H'
    assert print_type(Sum([Sum([H, T]), H])) == 'H+T+H'
    assert print_type(TuplePow(Sum([Sum([H]), Sum([T])]), 2)) == '(H+T)^2'
    assert print_type(Arrow(Sum([H, Sum([T])]), Sum([H]))) == 'H+T->H'
    assert print_type(Sum([Arrow(H, T), Sum([T])])) == '(H->T)+T'
    assert parse_type(print_type(Sum([Sum([H, T]), Sum([T])]))) == Sum([H, T, T])


names = st.sampled_from(['x', 'y', 'z'])
FAIR = Dist([(Fraction(1, 2), H), (Fraction(1, 2), T)], Fraction(1, 4))


def _types(make_sum):
    return st.recursive(
            st.sampled_from([H, T, BoolAnn(FAIR)]),
            lambda inner: st.one_of(
                st.builds(Arrow, inner, inner),
                st.lists(inner, min_size=1, max_size=3).map(make_sum),
                st.builds(TuplePow, inner, st.integers(1, 3)),
                ),
            max_leaves=8)


def _flat_sum(parts):
    flat = [a for p in parts for a in (p.summands if isinstance(p, Sum) else [p])]
    return flat[0] if len(flat) == 1 else Sum(flat)


# nested and one-summand sums included
types = _types(Sum)
# sums as the parser builds them
parsed_types = _types(_flat_sum)

open_terms = st.recursive(
        names.map(Var) | st.sampled_from([h, t, TRUE]),
        lambda inner: st.one_of(
            st.builds(Abs, names, parsed_types, inner),
            st.builds(App, inner, inner),
            st.builds(lambda p, a, b: Choice([(p, a), (1 - p, b)]), probs, inner, inner),
            st.builds(Exp, st.integers(1, 3), inner),
            st.lists(inner, min_size=1, max_size=3).map(Tuple),
            st.builds(Proj, inner, st.integers(1, 3)),
            st.builds(Trust, inner, st.just(FAIR)),
            ),
        max_leaves=12)


@settings(max_examples=500, deadline=None)
@given(types)
def test_type_print_is_stable(ty):
    text = print_type(ty)
    assert print_type(parse_type(text)) == text


@settings(max_examples=500, deadline=None)
@given(open_terms)
def test_open_terms_print_parse_back(term):
    assert alpha_eq(parse_term(print_term(term), consts=['h', 't']), term)


@settings(max_examples=300, deadline=None,
          suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
@given(closed_terms())
def test_closed_terms_print_parse_back(typed):
    _, term = typed
    assert alpha_eq(parse_term(print_term(term), consts=['h', 't']), term)


@settings(max_examples=500, deadline=None)
@given(open_terms, open_terms, names)
def test_substitution_free_variables(u, s, x):
    result = free_vars(substitute(u, s, x))
    if x in free_vars(u):
        assert result == (free_vars(u) - {x}) | free_vars(s)
    else:
        assert result == free_vars(u)
