"""Monadic second-order logic with parity counting (C2MS) on finite graphs.

Formulas quantify over vertices (lowercase variables) and vertex sets
(uppercase variables), with connectives & | !, an adjacency atom edge(x, y),
membership x in X, an even-cardinality atom Even(X), and vertex equality
x = y. Evaluation on a finite graph is exhaustive enumeration with
short-circuiting; set variables range over all 2^n subsets, so a cost
estimator refuses formulas whose enumeration would be astronomically large.

Surface grammar (ASCII, shell-friendly):

    formula := quant | or
    quant   := ("exists" | "forall") IDENT "." formula
    or      := and { "|" and }
    and     := not { "&" not }
    not     := "!" not | atom
    atom    := "edge" "(" ident "," ident ")" | ident "in" IDENT
             | "Even" "(" IDENT ")" | ident "=" ident | "(" formula ")"

Quantifier scope extends as far right as possible; a quantified formula used
as an operand of & | ! must be parenthesized.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import FormulaParseError, SizeLimitError
from .graphs import Graph, GraphFamily

__all__ = [
    "Formula",
    "Edge",
    "In",
    "Even",
    "Eq",
    "Not",
    "And",
    "Or",
    "ExistsVertex",
    "ForallVertex",
    "ExistsSet",
    "ForallSet",
    "parse_formula",
    "pretty",
    "free_variables",
    "evaluate",
    "theory_member",
    "theory_member_witness",
    "named_formula",
    "NAMED_FORMULA_SOURCES",
    "DEFAULT_COST_LIMIT",
]

DEFAULT_COST_LIMIT = 2**30

_KEYWORDS = {"exists", "forall", "in", "edge", "Even"}


def is_set_name(name: str) -> bool:
    return name[0].isupper()


class _Ctx(NamedTuple):
    n: int
    adj: tuple[int, ...]


_MISSING = object()


class Formula:
    """Base class of AST nodes; subclasses are frozen dataclasses."""

    def _eval(self, ctx: _Ctx, env: dict) -> bool:
        raise NotImplementedError

    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class Edge(Formula):
    x: str
    y: str

    def _eval(self, ctx, env):
        return (ctx.adj[env[self.x]] >> env[self.y]) & 1 == 1


@dataclass(frozen=True)
class In(Formula):
    x: str
    set_var: str

    def _eval(self, ctx, env):
        return (env[self.set_var] >> env[self.x]) & 1 == 1


@dataclass(frozen=True)
class Even(Formula):
    set_var: str

    def _eval(self, ctx, env):
        return env[self.set_var].bit_count() % 2 == 0


@dataclass(frozen=True)
class Eq(Formula):
    x: str
    y: str

    def _eval(self, ctx, env):
        return env[self.x] == env[self.y]


@dataclass(frozen=True)
class Not(Formula):
    body: Formula

    def _eval(self, ctx, env):
        return not self.body._eval(ctx, env)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def _eval(self, ctx, env):
        return self.left._eval(ctx, env) and self.right._eval(ctx, env)


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def _eval(self, ctx, env):
        return self.left._eval(ctx, env) or self.right._eval(ctx, env)


class _Quantifier(Formula):
    var: str
    body: Formula

    def _domain(self, ctx: _Ctx) -> range:
        raise NotImplementedError

    def _scan(self, ctx, env, want: bool) -> bool:
        var, body = self.var, self.body
        prev = env.get(var, _MISSING)
        result = not want
        for value in self._domain(ctx):
            env[var] = value
            if body._eval(ctx, env) == want:
                result = want
                break
        if prev is _MISSING:
            env.pop(var, None)
        else:
            env[var] = prev
        return result


@dataclass(frozen=True)
class ExistsVertex(_Quantifier):
    var: str
    body: Formula

    def _domain(self, ctx):
        return range(ctx.n)

    def _eval(self, ctx, env):
        return self._scan(ctx, env, True)


@dataclass(frozen=True)
class ForallVertex(_Quantifier):
    var: str
    body: Formula

    def _domain(self, ctx):
        return range(ctx.n)

    def _eval(self, ctx, env):
        return self._scan(ctx, env, False)


@dataclass(frozen=True)
class ExistsSet(_Quantifier):
    var: str
    body: Formula

    def _domain(self, ctx):
        return range(1 << ctx.n)

    def _eval(self, ctx, env):
        return self._scan(ctx, env, True)


@dataclass(frozen=True)
class ForallSet(_Quantifier):
    var: str
    body: Formula

    def _domain(self, ctx):
        return range(1 << ctx.n)

    def _eval(self, ctx, env):
        return self._scan(ctx, env, False)


# ---------------------------------------------------------------- parsing

class _Token(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<sym>[()&|!=.,]))"
)


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_pos = len(text) - len(stripped)
            raise FormulaParseError(f"unexpected character {stripped[0]!r}", bad_pos)
        if m.group("ident"):
            name = m.group("ident")
            kind = "kw" if name in _KEYWORDS else "ident"
            tokens.append(_Token(kind, name, m.start("ident")))
        else:
            tokens.append(_Token("sym", m.group("sym"), m.start("sym")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> _Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _next(self) -> _Token:
        tok = self._peek()
        if tok is None:
            raise FormulaParseError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def _expect_sym(self, sym: str) -> None:
        tok = self._next()
        if tok.kind != "sym" or tok.text != sym:
            raise FormulaParseError(f"expected {sym!r}, found {tok.text!r}", tok.pos)

    def _expect_ident(self, want_set: bool | None, role: str) -> str:
        tok = self._next()
        if tok.kind == "kw":
            raise FormulaParseError(f"keyword {tok.text!r} cannot be a variable", tok.pos)
        if tok.kind != "ident":
            raise FormulaParseError(f"expected {role}, found {tok.text!r}", tok.pos)
        if want_set is True and not is_set_name(tok.text):
            raise FormulaParseError(f"{role} must start uppercase, got {tok.text!r}", tok.pos)
        if want_set is False and is_set_name(tok.text):
            raise FormulaParseError(f"{role} must start lowercase, got {tok.text!r}", tok.pos)
        return tok.text

    def parse(self) -> Formula:
        f = self._formula()
        tok = self._peek()
        if tok is not None:
            raise FormulaParseError(f"unexpected trailing {tok.text!r}", tok.pos)
        return f

    def _formula(self) -> Formula:
        tok = self._peek()
        if tok is not None and tok.kind == "kw" and tok.text in ("exists", "forall"):
            self._next()
            var = self._expect_ident(None, "quantified variable")
            self._expect_sym(".")
            body = self._formula()
            if tok.text == "exists":
                return ExistsSet(var, body) if is_set_name(var) else ExistsVertex(var, body)
            return ForallSet(var, body) if is_set_name(var) else ForallVertex(var, body)
        return self._or()

    def _or(self) -> Formula:
        left = self._and()
        while True:
            tok = self._peek()
            if tok is None or tok.kind != "sym" or tok.text != "|":
                return left
            self._next()
            left = Or(left, self._and())

    def _and(self) -> Formula:
        left = self._not()
        while True:
            tok = self._peek()
            if tok is None or tok.kind != "sym" or tok.text != "&":
                return left
            self._next()
            left = And(left, self._not())

    def _not(self) -> Formula:
        tok = self._peek()
        if tok is not None and tok.kind == "sym" and tok.text == "!":
            self._next()
            return Not(self._not())
        return self._atom()

    def _atom(self) -> Formula:
        tok = self._peek()
        if tok is None:
            raise FormulaParseError("unexpected end of input", len(self.text))
        if tok.kind == "sym" and tok.text == "(":
            self._next()
            inner = self._formula()
            self._expect_sym(")")
            return inner
        if tok.kind == "kw" and tok.text == "edge":
            self._next()
            self._expect_sym("(")
            x = self._expect_ident(False, "edge endpoint")
            self._expect_sym(",")
            y = self._expect_ident(False, "edge endpoint")
            self._expect_sym(")")
            return Edge(x, y)
        if tok.kind == "kw" and tok.text == "Even":
            self._next()
            self._expect_sym("(")
            s = self._expect_ident(True, "Even argument")
            self._expect_sym(")")
            return Even(s)
        if tok.kind == "ident":
            name = self._next().text
            if is_set_name(name):
                raise FormulaParseError(
                    f"set variable {name!r} cannot stand alone", tok.pos
                )
            follow = self._peek()
            if follow is not None and follow.kind == "kw" and follow.text == "in":
                self._next()
                s = self._expect_ident(True, "membership set")
                return In(name, s)
            if follow is not None and follow.kind == "sym" and follow.text == "=":
                self._next()
                y = self._expect_ident(False, "equality operand")
                return Eq(name, y)
            where = follow.pos if follow is not None else len(self.text)
            raise FormulaParseError(f"expected 'in' or '=' after {name!r}", where)
        raise FormulaParseError(f"unexpected {tok.text!r}", tok.pos)


def parse_formula(text: str) -> Formula:
    """Parse surface syntax into an AST; errors carry a character position."""
    return _Parser(text).parse()


_LEVEL_OR, _LEVEL_AND, _LEVEL_NOT, _LEVEL_ATOM = 1, 2, 3, 4


def _pp(f: Formula, min_level: int) -> str:
    if isinstance(f, (ExistsVertex, ExistsSet, ForallVertex, ForallSet)):
        kw = "exists" if isinstance(f, (ExistsVertex, ExistsSet)) else "forall"
        s = f"{kw} {f.var}. {_pp(f.body, 0)}"
        level = 0
    elif isinstance(f, Or):
        s = f"{_pp(f.left, _LEVEL_OR)} | {_pp(f.right, _LEVEL_AND)}"
        level = _LEVEL_OR
    elif isinstance(f, And):
        s = f"{_pp(f.left, _LEVEL_AND)} & {_pp(f.right, _LEVEL_NOT)}"
        level = _LEVEL_AND
    elif isinstance(f, Not):
        s = f"!{_pp(f.body, _LEVEL_NOT)}"
        level = _LEVEL_NOT
    elif isinstance(f, Edge):
        s, level = f"edge({f.x}, {f.y})", _LEVEL_ATOM
    elif isinstance(f, In):
        s, level = f"{f.x} in {f.set_var}", _LEVEL_ATOM
    elif isinstance(f, Even):
        s, level = f"Even({f.set_var})", _LEVEL_ATOM
    elif isinstance(f, Eq):
        s, level = f"{f.x} = {f.y}", _LEVEL_ATOM
    else:
        raise TypeError(f"not a formula node: {f!r}")
    return f"({s})" if level < min_level else s


def pretty(f: Formula) -> str:
    """Surface syntax that reparses to the identical AST."""
    return _pp(f, 0)


def free_variables(f: Formula) -> tuple[set[str], set[str]]:
    """Free vertex variables and free set variables of a formula."""
    free_v: set[str] = set()
    free_s: set[str] = set()

    def walk(node: Formula, bound: set[str]) -> None:
        if isinstance(node, (ExistsVertex, ExistsSet, ForallVertex, ForallSet)):
            walk(node.body, bound | {node.var})
        elif isinstance(node, (And, Or)):
            walk(node.left, bound)
            walk(node.right, bound)
        elif isinstance(node, Not):
            walk(node.body, bound)
        elif isinstance(node, Edge):
            for v in (node.x, node.y):
                if v not in bound:
                    free_v.add(v)
        elif isinstance(node, Eq):
            for v in (node.x, node.y):
                if v not in bound:
                    free_v.add(v)
        elif isinstance(node, In):
            if node.x not in bound:
                free_v.add(node.x)
            if node.set_var not in bound:
                free_s.add(node.set_var)
        elif isinstance(node, Even):
            if node.set_var not in bound:
                free_s.add(node.set_var)
        else:
            raise TypeError(f"not a formula node: {node!r}")

    walk(f, set())
    return free_v, free_s


def _cost(f: Formula, n: int) -> int:
    if isinstance(f, (ExistsVertex, ForallVertex)):
        return 1 + max(n, 1) * _cost(f.body, n)
    if isinstance(f, (ExistsSet, ForallSet)):
        return 1 + (1 << n) * _cost(f.body, n)
    if isinstance(f, (And, Or)):
        return 1 + _cost(f.left, n) + _cost(f.right, n)
    if isinstance(f, Not):
        return 1 + _cost(f.body, n)
    return 1


def evaluate(g: Graph, f: Formula, max_cost: int = DEFAULT_COST_LIMIT) -> bool:
    """Truth of a closed formula on a graph by exhaustive enumeration.

    Raises ValueError for open formulas and SizeLimitError when the
    worst-case number of enumerated environments exceeds ``max_cost``.
    """
    free_v, free_s = free_variables(f)
    if free_v or free_s:
        names = ", ".join(sorted(free_v | free_s))
        raise ValueError(f"formula has unbound variables: {names}")
    cost = _cost(f, g.n)
    if cost > max_cost:
        raise SizeLimitError(
            f"evaluation cost {cost} exceeds the limit {max_cost}; "
            f"reduce the graph or the quantifier nesting"
        )
    return f._eval(_Ctx(g.n, g.adj), {})


def theory_member_witness(
    family: GraphFamily, f: Formula, max_cost: int = DEFAULT_COST_LIMIT
) -> tuple[bool, int | None]:
    """Whether the formula holds on every member; on failure also the index
    of the first member falsifying it. Vacuously true for empty families."""
    for i, g in enumerate(family):
        if not evaluate(g, f, max_cost):
            return False, i
    return True, None


def theory_member(family: GraphFamily, f: Formula, max_cost: int = DEFAULT_COST_LIMIT) -> bool:
    """Whether the formula belongs to the theory of the finite family."""
    holds, _ = theory_member_witness(family, f, max_cost)
    return holds


NAMED_FORMULA_SOURCES = {
    # A path of length two: three vertices chained by two edges.
    "path2": "exists x. exists y. exists z. edge(x, y) & edge(y, z)",
    # Proper 2-coloring: X and Y cover the vertices and no edge lies inside
    # either class. ("z, z' in X" is transcribed as a conjunction.)
    "two_colorable": (
        "exists X. exists Y. (forall z. z in X | z in Y)"
        " & (forall z. forall w. !edge(z, w)"
        " | !(((z in X) & (w in X)) | ((z in Y) & (w in Y))))"
    ),
    # Every nonempty, neighbor-closed vertex set is everything. The empty
    # graph and single vertices count as connected under this formula.
    "connected": (
        "forall X. !((exists x. x in X)"
        " & (forall x. forall y. !((x in X) & edge(x, y)) | y in X))"
        " | (forall z. z in X)"
    ),
    # The full vertex set has even cardinality.
    "even_order": "exists X. (forall y. y in X) & Even(X)",
}

_named_cache: dict[str, Formula] = {}


def named_formula(name: str) -> Formula:
    """Look up a library formula by name; see NAMED_FORMULA_SOURCES."""
    try:
        source = NAMED_FORMULA_SOURCES[name]
    except KeyError:
        known = ", ".join(sorted(NAMED_FORMULA_SOURCES))
        raise KeyError(f"unknown formula {name!r} (known: {known})") from None
    if name not in _named_cache:
        _named_cache[name] = parse_formula(source)
    return _named_cache[name]


def library_names() -> Iterator[str]:
    return iter(sorted(NAMED_FORMULA_SOURCES))
