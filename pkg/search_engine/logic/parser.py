"""
Goal Parser

Recursive-descent parser for the goal text syntax:

    goals    := sequent (';' sequent)*
    sequent  := [formula (',' formula)*] '|-' formula  |  formula
    formula  := or ('->' formula)?          right associative
    or       := and ('|' and)*
    and      := unit ('&' unit)*
    unit     := NAME | '?' NAME | 'true' | 'false' | '(' formula ')'

Example: `A |- (B -> C) | (A & A)`
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List

from .formula import And, Atom, Bot, Formula, GoalState, Imp, Meta, Or, Sequent, Top

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)"
    r"|(?P<nl>\n)"
    r"|(?P<turnstile>\|-)"
    r"|(?P<arrow>->)"
    r"|(?P<meta>\?[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<name>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<punct>[&|(),;])"
)


class GoalSyntaxError(ValueError):
    """Goal text that does not follow the grammar; line and column are 1-based"""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise GoalSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup
        if kind == "nl":
            line, line_start = line + 1, match.end()
        elif kind != "ws":
            value = match.group()
            if kind == "punct" or kind in ("turnstile", "arrow"):
                kind = value
            elif kind == "name" and value in ("true", "false"):
                kind = value
            tokens.append(Token(kind, value, line, pos - line_start + 1))
        pos = match.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.current
        self.pos += 1
        return token

    def error(self, expected: str) -> GoalSyntaxError:
        token = self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        return GoalSyntaxError(f"expected {expected}, found {found}", token.line, token.column)

    def expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            raise self.error(repr(kind) if kind != "end" else "end of input")
        return self.advance()

    def goals(self) -> List[Sequent]:
        goals = [self.sequent()]
        while self.current.kind == ";":
            self.advance()
            if self.current.kind == "end":
                break
            goals.append(self.sequent())
        return goals

    def sequent(self) -> Sequent:
        if self.current.kind == "|-":
            self.advance()
            return Sequent((), self.formula())
        formulas = [self.formula()]
        while self.current.kind == ",":
            self.advance()
            formulas.append(self.formula())
        if self.current.kind == "|-":
            self.advance()
            return Sequent(tuple(formulas), self.formula())
        if len(formulas) == 1:
            return Sequent((), formulas[0])
        raise self.error("'|-'")

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.current.kind == "->":
            self.advance()
            return Imp(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.current.kind == "|":
            self.advance()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unit()
        while self.current.kind == "&":
            self.advance()
            left = And(left, self.unit())
        return left

    def unit(self) -> Formula:
        token = self.current
        if token.kind == "name":
            self.advance()
            return Atom(token.text)
        if token.kind == "meta":
            self.advance()
            return Meta(token.text[1:])
        if token.kind == "true":
            self.advance()
            return Top()
        if token.kind == "false":
            self.advance()
            return Bot()
        if token.kind == "(":
            self.advance()
            inner = self.formula()
            self.expect(")")
            return inner
        raise self.error("a formula")


def parse_formula(text: str) -> Formula:
    parser = _Parser(text)
    result = parser.formula()
    parser.expect("end")
    return result


def parse_sequent(text: str) -> Sequent:
    parser = _Parser(text)
    result = parser.sequent()
    parser.expect("end")
    return result


def parse_goal_state(text: str) -> GoalState:
    """Parse `;`-separated goals into one goal state with an empty substitution"""
    parser = _Parser(text)
    if parser.current.kind == "end":
        return GoalState(())
    goals = parser.goals()
    parser.expect("end")
    return GoalState(tuple(goals))
