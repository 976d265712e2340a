"""Terms, formulas, and their ASCII concrete syntax.

Supported syntax:

- Predicates: uppercase identifier, optional argument list (e.g. ``P``, ``A(x)``)
- Terms: lowercase identifiers; an identifier bound by an enclosing
  quantifier is a variable, anything else is a constant
- Negation: ``!``
- Conjunction: ``/\\``     Disjunction: ``\\/``
- Implication: ``->``      Biconditional: ``<->``
- Quantifiers: ``forall x . body``, ``exists x . body``
- Constants: ``True``, ``False``

Precedence, tightest first: ``!``, ``/\\``, ``\\/``, ``->``, ``<->``.
``->`` and ``<->`` associate to the right, ``/\\`` and ``\\/`` to the left.
A quantifier body extends as far to the right as possible.
"""

import re
from dataclasses import dataclass


class ParseError(Exception):
    """Raised on any malformed input; carries the character offset."""

    def __init__(self, position: int, message: str):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.message = message


class CaptureError(Exception):
    """Raised when substituting a variable would capture it under a binder."""

    def __init__(self, binder: str):
        super().__init__(f"substitution would be captured by the quantifier binding '{binder}'")
        self.binder = binder


# --- Terms ---------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


Term = Var | Const


@dataclass(frozen=True)
class AnyTerm:
    """Distinguished match_instance answer for vacuous instantiation."""

    def __str__(self):
        return "<any term>"


ANY_TERM = AnyTerm()


# --- Formulas ------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Truth:
    pass


@dataclass(frozen=True)
class Falsity:
    pass


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Atom | Truth | Falsity | Not | And | Or | Implies | Iff | Forall | Exists

TRUTH = Truth()
FALSITY = Falsity()


# --- Tokenizer -----------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<iff><->)
  | (?P<imp>->)
  | (?P<and>/\\)
  | (?P<or>\\/)
  | (?P<not>!)
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<comma>,)
  | (?P<dot>\.)
  | (?P<lower>[a-z][A-Za-z0-9]*)
  | (?P<upper>[A-Z][A-Za-z0-9]*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(pos, f"unknown token {text[pos]!r}")
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


# --- Parser --------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, expected: str | None = None) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(len(self.text), "unexpected end of input")
        if expected is not None and tok.kind != expected:
            raise ParseError(tok.pos, f"expected {expected}, found {tok.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> Formula:
        f = self.formula(frozenset())
        tok = self.peek()
        if tok is not None:
            raise ParseError(tok.pos, f"unexpected token {tok.text!r} after formula")
        return f

    def formula(self, bound: frozenset[str]) -> Formula:
        left = self.implication(bound)
        tok = self.peek()
        if tok is not None and tok.kind == "iff":
            self.next()
            return Iff(left, self.formula(bound))
        return left

    def implication(self, bound: frozenset[str]) -> Formula:
        left = self.disjunction(bound)
        tok = self.peek()
        if tok is not None and tok.kind == "imp":
            self.next()
            return Implies(left, self.implication(bound))
        return left

    def disjunction(self, bound: frozenset[str]) -> Formula:
        f = self.conjunction(bound)
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "or":
                return f
            self.next()
            f = Or(f, self.conjunction(bound))

    def conjunction(self, bound: frozenset[str]) -> Formula:
        f = self.unary(bound)
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "and":
                return f
            self.next()
            f = And(f, self.unary(bound))

    def unary(self, bound: frozenset[str]) -> Formula:
        tok = self.peek()
        if tok is None:
            raise ParseError(len(self.text), "unexpected end of input")
        if tok.kind == "not":
            self.next()
            return Not(self.unary(bound))
        if tok.kind == "lower" and tok.text in ("forall", "exists"):
            return self.quantifier(bound)
        return self.primary(bound)

    def quantifier(self, bound: frozenset[str]) -> Formula:
        kw = self.next()
        var = self.peek()
        if var is None or var.kind != "lower":
            pos = var.pos if var is not None else len(self.text)
            raise ParseError(pos, f"expected a variable after {kw.text!r}")
        if var.text in ("forall", "exists"):
            raise ParseError(var.pos, f"{var.text!r} is a reserved word")
        self.next()
        dot = self.peek()
        if dot is None or dot.kind != "dot":
            pos = dot.pos if dot is not None else len(self.text)
            raise ParseError(pos, f"expected '.' after the variable of {kw.text!r}")
        self.next()
        body = self.formula(bound | {var.text})
        return Forall(var.text, body) if kw.text == "forall" else Exists(var.text, body)

    def primary(self, bound: frozenset[str]) -> Formula:
        tok = self.next()
        if tok.kind == "lparen":
            f = self.formula(bound)
            self.next("rparen")
            return f
        if tok.kind == "upper":
            if tok.text == "True":
                return TRUTH
            if tok.text == "False":
                return FALSITY
            return self.atom(tok, bound)
        raise ParseError(tok.pos, f"expected a formula, found {tok.text!r}")

    def atom(self, name: _Token, bound: frozenset[str]) -> Formula:
        tok = self.peek()
        if tok is None or tok.kind != "lparen":
            return Atom(name.text)
        self.next()
        args = [self.term(bound)]
        while True:
            tok = self.next()
            if tok.kind == "rparen":
                return Atom(name.text, tuple(args))
            if tok.kind != "comma":
                raise ParseError(tok.pos, f"expected ',' or ')' in argument list, found {tok.text!r}")
            args.append(self.term(bound))

    def term(self, bound: frozenset[str]) -> Term:
        tok = self.next()
        if tok.kind != "lower":
            raise ParseError(tok.pos, f"expected a term, found {tok.text!r}")
        if tok.text in ("forall", "exists"):
            raise ParseError(tok.pos, f"{tok.text!r} is a reserved word")
        return Var(tok.text) if tok.text in bound else Const(tok.text)


def parse_formula(text: str) -> Formula:
    """Parse the concrete syntax; raises ParseError with a position on failure."""
    if not text.strip():
        raise ParseError(0, "empty formula")
    return _Parser(text).parse()


# --- Printer -------------------------------------------------------------

# Binding strength of each connective; quantifiers are looser than all of
# them because their body extends maximally to the right.
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5}


def print_formula(f: Formula) -> str:
    """Render with minimal parentheses; reparsing yields the same tree."""
    return _print(f, 0, True)


def _print(f: Formula, level: int, tail: bool) -> str:
    # `tail` means no token follows this subformula before a closing
    # parenthesis or the end of the string, so an unparenthesized
    # quantifier body cannot swallow anything it should not.
    if isinstance(f, Atom):
        if not f.args:
            return f.predicate
        return f.predicate + "(" + ", ".join(t.name for t in f.args) + ")"
    if isinstance(f, Truth):
        return "True"
    if isinstance(f, Falsity):
        return "False"
    if isinstance(f, Not):
        return "!" + _print(f.body, _PREC[Not], tail)
    if isinstance(f, (Forall, Exists)):
        kw = "forall" if isinstance(f, Forall) else "exists"
        body = _print(f.body, 0, True)
        s = f"{kw} {f.var} . {body}"
        return s if tail else "(" + s + ")"
    op, prec, right_assoc = _BINARY[type(f)]
    wrap = prec < level
    left = _print(f.left, prec + (1 if right_assoc else 0), False)
    right = _print(f.right, prec + (0 if right_assoc else 1), True if wrap else tail)
    s = f"{left} {op} {right}"
    return "(" + s + ")" if wrap else s


_BINARY = {
    And: ("/\\", _PREC[And], False),
    Or: ("\\/", _PREC[Or], False),
    Implies: ("->", _PREC[Implies], True),
    Iff: ("<->", _PREC[Iff], True),
}


# --- Variables, constants, substitution ----------------------------------

def free_variables(f: Formula) -> set[str]:
    """Names of variables with at least one free occurrence in f."""
    if isinstance(f, Atom):
        return {t.name for t in f.args if isinstance(t, Var)}
    if isinstance(f, (Truth, Falsity)):
        return set()
    if isinstance(f, Not):
        return free_variables(f.body)
    if isinstance(f, (And, Or, Implies, Iff)):
        return free_variables(f.left) | free_variables(f.right)
    return free_variables(f.body) - {f.var}


def constants_of(f: Formula) -> set[str]:
    """Names of all constants occurring anywhere in f."""
    if isinstance(f, Atom):
        return {t.name for t in f.args if isinstance(t, Const)}
    if isinstance(f, (Truth, Falsity)):
        return set()
    if isinstance(f, Not):
        return constants_of(f.body)
    if isinstance(f, (And, Or, Implies, Iff)):
        return constants_of(f.left) | constants_of(f.right)
    return constants_of(f.body)


def substitute(f: Formula, var: str, t: Term) -> Formula:
    """Replace every free occurrence of `var` in f by the term t.

    Raises CaptureError if t is a variable that would become bound at any
    replacement site.
    """
    if isinstance(f, Atom):
        return Atom(f.predicate, tuple(t if a == Var(var) else a for a in f.args))
    if isinstance(f, (Truth, Falsity)):
        return f
    if isinstance(f, Not):
        return Not(substitute(f.body, var, t))
    if isinstance(f, (And, Or, Implies, Iff)):
        return type(f)(substitute(f.left, var, t), substitute(f.right, var, t))
    if f.var == var:
        return f
    if isinstance(t, Var) and t.name == f.var and var in free_variables(f.body):
        raise CaptureError(f.var)
    return type(f)(f.var, substitute(f.body, var, t))


class _NoMatch(Exception):
    pass


def match_instance(body: Formula, var: str, candidate: Formula) -> Term | AnyTerm | None:
    """Find the term t with substitute(body, var, t) == candidate.

    Returns the unique witness, ANY_TERM when var has no free occurrence in
    body and body equals candidate, or None when no witness exists.
    """
    witnesses: list[Term] = []
    try:
        _collect(body, var, candidate, frozenset(), witnesses)
    except _NoMatch:
        return None
    if not witnesses:
        return ANY_TERM if body == candidate else None
    t = witnesses[0]
    if any(w != t for w in witnesses):
        return None
    try:
        return t if substitute(body, var, t) == candidate else None
    except CaptureError:
        return None


def _collect(b: Formula, var: str, c: Formula, bound: frozenset[str], out: list[Term]):
    if type(b) is not type(c):
        raise _NoMatch
    if isinstance(b, Atom):
        if b.predicate != c.predicate or len(b.args) != len(c.args):
            raise _NoMatch
        for tb, tc in zip(b.args, c.args):
            if tb == Var(var) and var not in bound:
                out.append(tc)
            elif tb != tc:
                raise _NoMatch
        return
    if isinstance(b, (Truth, Falsity)):
        return
    if isinstance(b, Not):
        _collect(b.body, var, c.body, bound, out)
        return
    if isinstance(b, (And, Or, Implies, Iff)):
        _collect(b.left, var, c.left, bound, out)
        _collect(b.right, var, c.right, bound, out)
        return
    if b.var != c.var:
        raise _NoMatch
    _collect(b.body, var, c.body, bound | {b.var}, out)
