"""
Tokenizer and recursive-descent parser for program files.

Grammar (whitespace-insensitive, ``--`` starts a comment)::

    program  := decl* "main" "=" term
    decl     := "type" IDENT ";" | "subtype" IDENT "<:" IDENT ";" | "const" IDENT ":" IDENT ";"
    term     := "\\" IDENT ":" type "." term | app
    app      := app operand | operand
    operand  := "exp" "[" NAT "]" operand | "trust" operand "with" dist | postfix
    postfix  := postfix "#" NAT | atom
    atom     := "true" | "false" | IDENT | "{" rat term ("," rat term)* "}"
              | "<" term ("," term)* ">" | "(" term ")"
    type     := btype "->" type | btype
    btype    := btype "+" ptype | ptype
    ptype    := atype "^" NAT | atype
    atype    := IDENT | "Bool" dist | "(" type ")"
    dist     := "(" rat type ("," rat type)* ")" "@" ["-"] rat
    rat      := NAT | NAT "/" NAT
"""
import re
from collections import namedtuple
from fractions import Fraction

from trustlam.errors import ParseError
from trustlam.syntax.terms import (
        Atom, Arrow, Sum, TuplePow, BoolAnn, Dist,
        Var, BoolLit, Const, Abs, App, Choice, Exp, Tuple, Proj, Trust,
        Program, UNIT,
        )

Token = namedtuple("Token", "kind text line col")

KEYWORDS = {"type", "subtype", "const", "main", "true", "false", "exp", "trust", "with", "Bool"}

token_spec = [
    ("COMMENT", r"--[^\n]*"),
    ("NEWLINE", r"\n"),
    ("SKIP", r"[ \t\r]+"),
    ("PUNCT", r"->|<:|[\\:.;=(){}<>,#\[\]^+@/-]"),
    ("NAT", r"\d+"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("MISMATCH", r"."),
]
token_re = re.compile("|".join(f"(?P<{name}>{regex})" for name, regex in token_spec))

OPERAND_START = {"exp", "trust", "true", "false", "IDENT", "{", "<", "("}


def tokenize(text):
    """
    Split program text into tokens. Keywords and punctuation use their own
    text as kind; names are ``IDENT`` and numbers ``NAT``.
    """
    line, line_start = 1, 0
    for match in token_re.finditer(text):
        kind, value = match.lastgroup, match.group()
        col = match.start() - line_start + 1
        if kind == "NEWLINE":
            line, line_start = line + 1, match.end()
            continue
        if kind in ("SKIP", "COMMENT"):
            continue
        if kind == "MISMATCH":
            raise ParseError(f"Unexpected character {value!r}", line, col, code="syntax")
        if kind == "PUNCT" or (kind == "IDENT" and value in KEYWORDS):
            kind = value
        yield Token(kind, value, line, col)
    yield Token("EOF", "", line, len(text) - line_start + 1)


class Parser:
    """
    One-shot parser over a token list.

    Args:
        text (str): Source text.
        consts (iterable[str]): Names parsed as constants when not bound by an
            enclosing abstraction.
        atoms (iterable[str] or None): Declared atoms. Types naming any other
            atom are rejected; None disables the check.
    """
    def __init__(self, text, consts=(), atoms=None):
        self.tokens = list(tokenize(text))
        self.i = 0
        self.consts = set(consts)
        self.atoms = None if atoms is None else set(atoms) | {UNIT}
        self.bound = []

    # ------------------------------------------------------------ helpers

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, kind):
        if self.peek().kind == kind:
            return self.next()
        return None

    def expect(self, kind, what=None):
        tok = self.peek()
        if tok.kind != kind:
            found = repr(tok.text) if tok.text else "end of input"
            self.error(f"Expected {what or repr(kind)} but found {found}", tok)
        return self.next()

    def error(self, message, tok, code="syntax"):
        raise ParseError(message, tok.line, tok.col, code=code)

    def build(self, cls, tok, *args, code="syntax"):
        try:
            return cls(*args, pos=(tok.line, tok.col))
        except ValueError as exc:
            self.error(str(exc), tok, code=code)

    def nat(self):
        return int(self.expect("NAT", "a natural number").text)

    def finish(self, result):
        self.expect("EOF", "end of input")
        return result

    # ------------------------------------------------------------ program

    def program(self):
        atoms, subtypes, consts = [], [], []
        self.atoms = {UNIT}
        while self.peek().kind in ("type", "subtype", "const"):
            tok = self.next()
            if tok.kind == "type":
                name = self.expect("IDENT", "a type name")
                if name.text in self.atoms:
                    self.error(f"Duplicate declaration of type {name.text}", name,
                               code="duplicate-declaration")
                self.atoms.add(name.text)
                atoms.append(name.text)
            elif tok.kind == "subtype":
                sub = self.declared_atom()
                self.expect("<:")
                sup = self.declared_atom()
                if (sub, sup) in subtypes:
                    self.error(f"Duplicate declaration {sub} <: {sup}", tok,
                               code="duplicate-declaration")
                subtypes.append((sub, sup))
            else:
                name = self.expect("IDENT", "a constant name")
                self.expect(":")
                atom = self.declared_atom()
                if name.text in self.consts:
                    self.error(f"Duplicate declaration of constant {name.text}", name,
                               code="duplicate-declaration")
                self.consts.add(name.text)
                consts.append((name.text, atom))
            self.expect(";")
        self.expect("main", "a declaration or 'main'")
        self.expect("=")
        main = self.term()
        return self.finish(Program(tuple(atoms), tuple(subtypes), tuple(consts), main))

    def declared_atom(self):
        tok = self.expect("IDENT", "a type name")
        if tok.text not in self.atoms:
            self.error(f"Type {tok.text} is not declared (declare it before use)", tok,
                       code="undeclared-atom")
        return tok.text

    # ------------------------------------------------------------ terms

    def term(self):
        tok = self.accept("\\")
        if tok is None:
            return self.app()
        var = self.expect("IDENT", "a variable name").text
        self.expect(":")
        ann = self.type_()
        self.expect(".")
        self.bound.append(var)
        body = self.term()
        self.bound.pop()
        return Abs(var, ann, body, pos=(tok.line, tok.col))

    def app(self):
        t = self.operand()
        while self.peek().kind in OPERAND_START:
            t = App(t, self.operand(), pos=t.pos)
        return t

    def operand(self):
        tok = self.peek()
        if self.accept("exp"):
            self.expect("[")
            n = self.nat()
            self.expect("]")
            return self.build(Exp, tok, n, self.operand())
        if self.accept("trust"):
            arg = self.operand()
            self.expect("with", "'with'")
            return Trust(arg, self.dist(), pos=(tok.line, tok.col))
        return self.postfix()

    def postfix(self):
        t = self.atom()
        while self.peek().kind == "#":
            tok = self.next()
            t = self.build(Proj, tok, t, self.nat())
        return t

    def atom(self):
        tok = self.next()
        pos = (tok.line, tok.col)
        if tok.kind in ("true", "false"):
            return BoolLit(tok.kind == "true", pos=pos)
        if tok.kind == "IDENT":
            if tok.text in self.consts and tok.text not in self.bound:
                return Const(tok.text, pos=pos)
            return Var(tok.text, pos=pos)
        if tok.kind == "{":
            branches = [(self.rat(), self.term())]
            while self.accept(","):
                branches.append((self.rat(), self.term()))
            self.expect("}")
            return self.build(Choice, tok, branches, code="bad-weights")
        if tok.kind == "<":
            elements = [self.term()]
            while self.accept(","):
                elements.append(self.term())
            self.expect(">")
            return Tuple(elements, pos=pos)
        if tok.kind == "(":
            t = self.term()
            self.expect(")")
            return t
        found = repr(tok.text) if tok.text else "end of input"
        self.error(f"Expected a term but found {found}", tok)

    # ------------------------------------------------------------ types

    def type_(self):
        left = self.btype()
        tok = self.accept("->")
        if tok:
            return Arrow(left, self.type_(), pos=(tok.line, tok.col))
        return left

    def btype(self):
        tok = self.peek()
        parts = [self.ptype()]
        while self.accept("+"):
            parts.append(self.ptype())
        if len(parts) == 1:
            return parts[0]
        summands = []
        for part in parts:
            summands.extend(part.summands if isinstance(part, Sum) else [part])
        return Sum(summands, pos=(tok.line, tok.col))

    def ptype(self):
        a = self.atype()
        tok = self.accept("^")
        if tok:
            return self.build(TuplePow, tok, a, self.nat())
        return a

    def atype(self):
        tok = self.next()
        pos = (tok.line, tok.col)
        if tok.kind == "IDENT":
            if self.atoms is not None and tok.text not in self.atoms:
                self.error(f"Type {tok.text} is not declared", tok, code="undeclared-atom")
            return Atom(tok.text, pos=pos)
        if tok.kind == "Bool":
            return BoolAnn(self.dist(), pos=pos)
        if tok.kind == "(":
            ty = self.type_()
            self.expect(")")
            return ty
        found = repr(tok.text) if tok.text else "end of input"
        self.error(f"Expected a type but found {found}", tok)

    def dist(self):
        tok = self.expect("(")
        entries = [(self.rat(), self.type_())]
        while self.accept(","):
            entries.append((self.rat(), self.type_()))
        self.expect(")")
        self.expect("@")
        negative = self.accept("-")
        eps = self.rat()
        return self.build(Dist, tok, entries, -eps if negative else eps, code="bad-distribution")

    def rat(self):
        tok = self.peek()
        num = self.nat()
        if not self.accept("/"):
            return Fraction(num)
        den = self.nat()
        if den == 0:
            self.error("Zero denominator", tok)
        return Fraction(num, den)


def _scope(program, consts):
    if program is not None:
        return [c for c, _ in program.consts], list(program.atoms)
    return list(consts or ()), None


def parse_program(text):
    """
    Parse a whole program file.

    Args:
        text (str): Program source.

    Returns:
        Program

    Raises:
        ParseError: syntax errors, bad weights, undeclared or duplicate declarations.
    """
    return Parser(text).program()


def parse_term(text, program=None, consts=None):
    """
    Parse a single term. Names are constants if declared in ``program`` (or
    listed in ``consts``) and not bound; everything else is a variable.
    """
    names, atoms = _scope(program, consts)
    parser = Parser(text, names, atoms)
    return parser.finish(parser.term())


def parse_type(text, program=None):
    _, atoms = _scope(program, None)
    parser = Parser(text, (), atoms)
    return parser.finish(parser.type_())


def parse_dist(text, program=None):
    """Parse a target distribution such as ``(1/2 H, 1/2 T)@1/20``."""
    _, atoms = _scope(program, None)
    parser = Parser(text, (), atoms)
    return parser.finish(parser.dist())
