"""Input language for surface data: ring, polynomial, matrix, and task statements.

The format is a small ``;``-separated declaration language::

    ring P(1,1,2,3) over Q(i) vars x,y,z,w;
    poly f = w^2 - z^3 - x^6 - y^6;
    matrix q = [0, 1/2; 1/2, 0];
    task classify-singularities

Coefficients are exact rationals (``3``, ``-7/2``); the imaginary unit ``i``
is available only when the ring is declared ``over Q(i)``.  ``^`` denotes
powers, ``*`` is required between factors, and ``#`` starts a line comment.
:func:`canonical_text` prints a document back in this grammar; parsing the
canonical text reproduces the document exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MathDomainError, ParseError
from .fields import Coefficient, coeff_repr, gaussian_field
from .polyalg import MultiPoly, WeightSystem

RESERVED_WORDS = frozenset({"ring", "poly", "matrix", "task", "over", "vars"})


@dataclass(frozen=True)
class Ambient:
    """A weighted projective ambient space P(w_0,...,w_n) with named coordinates."""

    weights: tuple[int, ...]
    variables: tuple[str, ...]
    over_gaussian: bool = False

    def __post_init__(self):
        if len(self.weights) != len(self.variables):
            raise ParseError("number of weights differs from number of variables")
        if any(w < 1 for w in self.weights):
            raise ParseError("weights must be positive integers")
        if len(set(self.variables)) != len(self.variables):
            raise ParseError("duplicate variable name")
        if self.over_gaussian and "i" in self.variables:
            raise ParseError("variable name 'i' collides with the imaginary unit")

    @property
    def weight_system(self) -> WeightSystem:
        return WeightSystem(tuple(self.weights))

    def label(self) -> str:
        return "P(" + ",".join(str(w) for w in self.weights) + ")"

    def coefficient_field(self) -> str:
        return "Q(i)" if self.over_gaussian else "Q"


@dataclass(frozen=True)
class NamedPoly:
    name: str | None
    poly: MultiPoly


@dataclass(frozen=True)
class NamedMatrix:
    name: str | None
    rows: tuple[tuple[Coefficient, ...], ...]


@dataclass(frozen=True)
class InputDocument:
    """A parsed input: ambient declaration, polynomial/matrix blocks, task selector."""

    ambient: Ambient | None
    polys: tuple[NamedPoly, ...] = ()
    matrices: tuple[NamedMatrix, ...] = ()
    task: str | None = None

    def require_ambient(self) -> Ambient:
        if self.ambient is None:
            raise MathDomainError("document declares no ring")
        return self.ambient

    def poly(self, name: str | None = None) -> MultiPoly:
        if name is not None:
            for entry in self.polys:
                if entry.name == name:
                    return entry.poly
            raise MathDomainError(f"document has no polynomial named {name!r}")
        if not self.polys:
            raise MathDomainError("document has no polynomial block")
        return self.polys[0].poly

    def matrix(self, name: str | None = None) -> tuple[tuple[Coefficient, ...], ...]:
        if name is not None:
            for entry in self.matrices:
                if entry.name == name:
                    return entry.rows
            raise MathDomainError(f"document has no matrix named {name!r}")
        if not self.matrices:
            raise MathDomainError("document has no matrix block")
        return self.matrices[0].rows


# -- lexer -----------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "eof", or a single punctuation character
    text: str
    line: int
    column: int


_PUNCTUATION = set(";,()[]=+-*/^")


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, column, i, n = 1, 1, 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, column, i = line + 1, 1, i + 1
            continue
        if ch in " \t\r":
            column, i = column + 1, i + 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start = column
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                raise ParseError("decimal literals are not supported; use exact fractions like 3/2", line, start)
            tokens.append(Token("int", text[i:j], line, start))
            column += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, start))
            column += j - i
            i = j
            continue
        if ch in _PUNCTUATION:
            tokens.append(Token(ch, ch, line, start))
            column += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start)
    tokens.append(Token("eof", "", line, column))
    return tokens


# -- parser ----------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def lookahead(self) -> Token:
        return self.tokens[self.pos]

    def peek2(self) -> Token:
        return self.tokens[min(self.pos + 1, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message: str):
        tok = self.lookahead
        if tok.kind == "eof" and self.pos > 0:
            # Anchor unexpected-end errors on the last real token.
            prev = self.tokens[self.pos - 1]
            raise ParseError(f"{message} (unexpected end of input)", prev.line, prev.column)
        raise ParseError(message, tok.line, tok.column)

    def expect(self, kind: str, what: str | None = None) -> Token:
        if self.lookahead.kind != kind:
            self.fail(f"expected {what or kind!r}")
        return self.advance()

    def expect_word(self, word: str) -> Token:
        if self.lookahead.kind != "ident" or self.lookahead.text != word:
            self.fail(f"expected '{word}'")
        return self.advance()

    def int_literal(self, what: str) -> int:
        if self.lookahead.kind != "int":
            self.fail(f"expected {what}")
        return int(self.advance().text)

    # -- statements ---------------------------------------------------------

    def document(self) -> InputDocument:
        ambient: Ambient | None = None
        polys: list[NamedPoly] = []
        matrices: list[NamedMatrix] = []
        task: str | None = None
        while self.lookahead.kind != "eof":
            tok = self.lookahead
            if tok.kind != "ident":
                self.fail("expected a statement (ring, poly, matrix, or task)")
            if tok.text == "ring":
                if ambient is not None:
                    self.fail("duplicate ring declaration")
                if polys or matrices:
                    self.fail("the ring declaration must come first")
                ambient = self.ring_statement()
            elif tok.text == "poly":
                polys.append(self.poly_statement(ambient))
            elif tok.text == "matrix":
                matrices.append(self.matrix_statement(ambient))
            elif tok.text == "task":
                if task is not None:
                    self.fail("duplicate task declaration")
                task = self.task_statement()
            else:
                self.fail("expected a statement (ring, poly, matrix, or task)")
            if self.lookahead.kind == ";":
                self.advance()
            elif self.lookahead.kind != "eof":
                self.fail("expected ';' between statements")
        return InputDocument(ambient, tuple(polys), tuple(matrices), task)

    def ring_statement(self) -> Ambient:
        self.expect_word("ring")
        head = self.lookahead
        self.expect_word("P")
        self.expect("(", "'('")
        weights = [self.int_literal("a positive weight")]
        while self.lookahead.kind == ",":
            self.advance()
            weights.append(self.int_literal("a positive weight"))
        self.expect(")", "')'")
        if any(w < 1 for w in weights):
            raise ParseError("weights must be positive integers", head.line, head.column)
        over_gaussian = False
        if self.lookahead.kind == "ident" and self.lookahead.text == "over":
            self.advance()
            field_tok = self.lookahead
            self.expect_word("Q")
            self.expect("(", "'('")
            unit = self.expect("ident", "'i'")
            if unit.text != "i":
                raise ParseError("the only supported extension is Q(i)", unit.line, unit.column)
            self.expect(")", "')'")
            over_gaussian = True
            del field_tok
        self.expect_word("vars")
        names = [self.variable_name(over_gaussian)]
        while self.lookahead.kind == ",":
            self.advance()
            names.append(self.variable_name(over_gaussian))
        if len(names) != len(weights):
            raise ParseError(
                f"{len(weights)} weights but {len(names)} variables", head.line, head.column
            )
        if len(set(names)) != len(names):
            raise ParseError("duplicate variable name", head.line, head.column)
        return Ambient(tuple(weights), tuple(names), over_gaussian)

    def variable_name(self, over_gaussian: bool) -> str:
        tok = self.expect("ident", "a variable name")
        if tok.text in RESERVED_WORDS:
            raise ParseError(f"{tok.text!r} is a reserved word", tok.line, tok.column)
        if over_gaussian and tok.text == "i":
            raise ParseError("variable name 'i' collides with the imaginary unit", tok.line, tok.column)
        return tok.text

    def optional_block_name(self) -> str | None:
        if self.lookahead.kind == "ident" and self.peek2().kind == "=":
            tok = self.advance()
            if tok.text in RESERVED_WORDS:
                raise ParseError(f"{tok.text!r} is a reserved word", tok.line, tok.column)
            self.advance()  # '='
            return tok.text
        return None

    def poly_statement(self, ambient: Ambient | None) -> NamedPoly:
        self.expect_word("poly")
        name = self.optional_block_name()
        return NamedPoly(name, self.expression(ambient))

    def expression(self, ambient: Ambient | None) -> MultiPoly:
        # Syntax first (the whole expression must parse), then evaluation, so
        # that a malformed tail is reported before an undeclared leading name.
        return _evaluate(self.expression_node(), ambient)

    def matrix_statement(self, ambient: Ambient | None) -> NamedMatrix:
        self.expect_word("matrix")
        name = self.optional_block_name()
        open_tok = self.lookahead
        self.expect("[", "'['")
        rows = [self.matrix_row(ambient)]
        while self.lookahead.kind == ";":
            self.advance()
            rows.append(self.matrix_row(ambient))
        self.expect("]", "']'")
        if len({len(r) for r in rows}) != 1:
            raise ParseError("matrix rows have unequal lengths", open_tok.line, open_tok.column)
        return NamedMatrix(name, tuple(rows))

    def matrix_row(self, ambient: Ambient | None) -> tuple[Coefficient, ...]:
        entries = [self.matrix_entry(ambient)]
        while self.lookahead.kind == ",":
            self.advance()
            entries.append(self.matrix_entry(ambient))
        return tuple(entries)

    def matrix_entry(self, ambient: Ambient | None) -> Coefficient:
        tok = self.lookahead
        value = self.expression(ambient)
        if not value.is_constant():
            raise ParseError("matrix entries must be constant scalars", tok.line, tok.column)
        return value.constant_value()

    def task_statement(self) -> str:
        self.expect_word("task")
        parts = [self.expect("ident", "a task name").text]
        while self.lookahead.kind == "-":
            self.advance()
            parts.append(self.expect("ident", "a task name").text)
        return "-".join(parts)

    # -- expressions ----------------------------------------------------------
    #
    # Expressions parse to a small AST so syntax errors surface before
    # semantic ones (undeclared variables, division by zero, ...).

    def expression_node(self) -> "_Node":
        left = self.term_node()
        while self.lookahead.kind in ("+", "-"):
            op = self.advance()
            left = ("bin", op, left, self.term_node())
        return left

    def term_node(self) -> "_Node":
        left = self.unary_node()
        while self.lookahead.kind in ("*", "/"):
            op = self.advance()
            left = ("bin", op, left, self.unary_node())
        return left

    def unary_node(self) -> "_Node":
        if self.lookahead.kind == "-":
            self.advance()
            return ("neg", self.unary_node())
        if self.lookahead.kind == "+":
            self.advance()
            return self.unary_node()
        return self.power_node()

    def power_node(self) -> "_Node":
        base = self.atom_node()
        if self.lookahead.kind == "^":
            op = self.advance()
            if self.lookahead.kind == "-":
                raise ParseError("exponent must be a nonnegative integer", op.line, op.column)
            return ("pow", base, self.int_literal("an integer exponent"))
        return base

    def atom_node(self) -> "_Node":
        tok = self.lookahead
        if tok.kind == "int":
            self.advance()
            return ("const", tok)
        if tok.kind == "(":
            self.advance()
            inner = self.expression_node()
            self.expect(")", "')'")
            return inner
        if tok.kind == "ident":
            self.advance()
            return ("name", tok)
        self.fail("expected a number, a variable, or '('")
        raise AssertionError("unreachable")


_Node = tuple  # ("const", tok) | ("name", tok) | ("neg", node) | ("pow", node, int) | ("bin", op, l, r)


def _evaluate(node: _Node, ambient: Ambient | None) -> MultiPoly:
    variables = ambient.variables if ambient else ()
    kind = node[0]
    if kind == "const":
        return MultiPoly.constant(variables, Fraction(int(node[1].text)))
    if kind == "name":
        tok = node[1]
        if ambient is not None and tok.text in ambient.variables:
            return MultiPoly.variable(variables, tok.text)
        if tok.text == "i":
            if ambient is not None and ambient.over_gaussian:
                return MultiPoly.constant(variables, gaussian_field().generator())
            raise ParseError("'i' requires a ring declared over Q(i)", tok.line, tok.column)
        raise ParseError(f"undeclared variable {tok.text!r}", tok.line, tok.column)
    if kind == "neg":
        return -_evaluate(node[1], ambient)
    if kind == "pow":
        return _evaluate(node[1], ambient) ** node[2]
    op = node[1]
    left = _evaluate(node[2], ambient)
    right = _evaluate(node[3], ambient)
    if op.kind == "+":
        return left + right
    if op.kind == "-":
        return left - right
    if op.kind == "*":
        return left * right
    if not right.is_constant():
        raise ParseError("division by a non-constant polynomial", op.line, op.column)
    value = right.constant_value()
    if not value:
        raise ParseError("division by zero", op.line, op.column)
    return left / value


def parse(text: str) -> InputDocument:
    """Parse an input document; raises :class:`ParseError` with line/column on failure."""
    return _Parser(text).document()


# -- canonical printing ------------------------------------------------------------


def render_poly(p: MultiPoly) -> str:
    """Graded-lexicographic rendering; re-parses to an equal polynomial."""
    return str(p)


def _render_matrix(rows: tuple[tuple[Coefficient, ...], ...]) -> str:
    return "[" + "; ".join(", ".join(coeff_repr(c) for c in row) for row in rows) + "]"


def canonical_text(doc: InputDocument) -> str:
    """Print a document in the grammar; ``parse(canonical_text(doc)) == doc``."""
    statements: list[str] = []
    if doc.ambient is not None:
        ring = "ring " + doc.ambient.label()
        if doc.ambient.over_gaussian:
            ring += " over Q(i)"
        ring += " vars " + ",".join(doc.ambient.variables)
        statements.append(ring)
    for entry in doc.polys:
        prefix = f"poly {entry.name} = " if entry.name else "poly "
        statements.append(prefix + render_poly(entry.poly))
    for entry in doc.matrices:
        prefix = f"matrix {entry.name} = " if entry.name else "matrix "
        statements.append(prefix + _render_matrix(entry.rows))
    if doc.task is not None:
        statements.append("task " + doc.task)
    return ";\n".join(statements) + "\n"
