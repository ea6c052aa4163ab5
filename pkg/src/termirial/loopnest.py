"""Parser, analyzer, and literal simulator for chain loop nests.

The DSL describes nests such as

    n = 100
    for i = 1 to n
    for j = 1 to i
    for k = 1 to j

one loop per line, where the first bound is the nest parameter and every
later bound is the index of the loop immediately above it.  A chain nest
of depth d runs its innermost body termirial_p(n, d-1) times, which is
why only strict chains are accepted: any other bound shape would change
the count away from a termirial, so it is rejected rather than
miscounted.

Keywords are case-insensitive, index names are case-sensitive, and '#'
starts a comment.  The assignment line is optional; without it the
analysis stays symbolic in the parameter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .budget import DEFAULT_STEP_BUDGET, check_budget
from .core import termirial_p

KEYWORDS = ("for", "to")


class LoopNestError(Exception):
    """Parse-time error with a 1-based line and column."""

    kind = "error"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class LoopSyntaxError(LoopNestError):
    kind = "syntax"


class UnknownIdentifierError(LoopNestError):
    kind = "unknown-identifier"


class NonChainBoundError(LoopNestError):
    kind = "non-chain-bound"


class DuplicateIndexError(LoopNestError):
    kind = "duplicate-index"


@dataclass(frozen=True)
class Loop:
    index: str
    bound: str


@dataclass(frozen=True)
class LoopNestProgram:
    param_name: str
    param_value: int | None
    loops: tuple[Loop, ...]

    @property
    def depth(self) -> int:
        return len(self.loops)


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident" | "int" | "eq"
    text: str
    column: int


_TOKEN_RE = re.compile(r"(?P<ws>[ \t]+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<int>[0-9]+)|(?P<eq>=)")


def _tokenize(code: str, lineno: int) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(code):
        match = _TOKEN_RE.match(code, pos)
        if match is None:
            raise LoopSyntaxError(f"unexpected character {code[pos]!r}", lineno, pos + 1)
        if match.lastgroup != "ws":
            tokens.append(_Token(match.lastgroup, match.group(), match.start() + 1))
        pos = match.end()
    return tokens


def _is_keyword(token: _Token) -> bool:
    return token.kind == "ident" and token.text.lower() in KEYWORDS


class _LineParser:
    """Pulls expected tokens off one line, reporting precise positions."""

    def __init__(self, tokens: list[_Token], lineno: int, line_len: int):
        self.tokens = tokens
        self.lineno = lineno
        self.line_len = line_len
        self.pos = 0

    def _next(self, expected: str) -> _Token:
        if self.pos >= len(self.tokens):
            raise LoopSyntaxError(f"expected {expected}, found end of line", self.lineno, self.line_len + 1)
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def keyword(self, word: str) -> None:
        token = self._next(f"'{word}'")
        if not (token.kind == "ident" and token.text.lower() == word):
            raise LoopSyntaxError(f"expected '{word}', found {token.text!r}", self.lineno, token.column)

    def ident(self, expected: str) -> _Token:
        token = self._next(expected)
        if token.kind != "ident" or _is_keyword(token):
            raise LoopSyntaxError(f"expected {expected}, found {token.text!r}", self.lineno, token.column)
        return token

    def literal_eq(self) -> None:
        token = self._next("'='")
        if token.kind != "eq":
            raise LoopSyntaxError(f"expected '=', found {token.text!r}", self.lineno, token.column)

    def literal_one(self) -> None:
        token = self._next("'1'")
        if token.kind != "int" or token.text != "1":
            raise LoopSyntaxError(
                f"expected '1' (loops always run from 1), found {token.text!r}", self.lineno, token.column
            )

    def integer(self) -> int:
        token = self._next("an integer")
        if token.kind != "int":
            raise LoopSyntaxError(f"expected an integer, found {token.text!r}", self.lineno, token.column)
        return int(token.text)

    def end(self) -> None:
        if self.pos < len(self.tokens):
            token = self.tokens[self.pos]
            raise LoopSyntaxError(f"unexpected {token.text!r} after end of statement", self.lineno, token.column)


def parse(source: str) -> LoopNestProgram:
    """Parse DSL text into a LoopNestProgram.

    Raises LoopSyntaxError, UnknownIdentifierError, NonChainBoundError, or
    DuplicateIndexError, each carrying the offending line and column.
    """
    param_name: str | None = None
    param_value: int | None = None
    loops: list[Loop] = []
    index_names: list[str] = []
    lineno = 0

    for lineno, raw in enumerate(source.splitlines(), start=1):
        code = raw.split("#", 1)[0]
        tokens = _tokenize(code, lineno)
        if not tokens:
            continue
        line = _LineParser(tokens, lineno, len(code))

        if not loops and param_name is None and _looks_like_assign(tokens):
            name = line.ident("a parameter name")
            line.literal_eq()
            param_value = line.integer()
            line.end()
            param_name = name.text
            continue

        line.keyword("for")
        index = line.ident("a loop index")
        line.literal_eq()
        line.literal_one()
        line.keyword("to")
        bound = line.ident("a bound identifier")
        line.end()

        first = not loops
        if first and param_name is None:
            param_name = bound.text
        if index.text == param_name or index.text in index_names:
            raise DuplicateIndexError(f"index {index.text!r} is already in use", lineno, index.column)

        enclosing = param_name if first else index_names[-1]
        if bound.text != enclosing:
            known = bound.text == param_name or bound.text in index_names or bound.text == index.text
            if known:
                raise NonChainBoundError(
                    f"bound {bound.text!r} breaks the chain; expected {enclosing!r}", lineno, bound.column
                )
            raise UnknownIdentifierError(f"unknown name {bound.text!r}", lineno, bound.column)

        loops.append(Loop(index=index.text, bound=bound.text))
        index_names.append(index.text)

    if not loops:
        raise LoopSyntaxError("expected at least one loop", max(lineno, 1), 1)
    assert param_name is not None
    return LoopNestProgram(param_name=param_name, param_value=param_value, loops=tuple(loops))


def _looks_like_assign(tokens: list[_Token]) -> bool:
    return (
        len(tokens) >= 2
        and tokens[0].kind == "ident"
        and not _is_keyword(tokens[0])
        and tokens[1].kind == "eq"
    )


def render(prog: LoopNestProgram) -> str:
    """Canonical DSL text; parse(render(prog)) == prog."""
    lines = []
    if prog.param_value is not None:
        lines.append(f"{prog.param_name} = {prog.param_value}")
    lines.extend(f"for {loop.index} = 1 to {loop.bound}" for loop in prog.loops)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AnalysisResult:
    """Iteration count of a chain nest: exact, closed-form, and asymptotic."""

    depth: int
    order: int  # depth - 1, the termirial order of the count
    param_name: str
    param_value: int | None
    exact_count: int | None
    theta_exponent: int

    def termirial_text(self) -> str:
        base = self.param_name if self.param_value is None else str(self.param_value)
        return f"termirial_p({base}, {self.order})"

    def binomial_text(self) -> str:
        if self.param_value is None:
            top = self.param_name if self.order == 0 else f"{self.param_name}+{self.order}"
        else:
            top = str(self.param_value + self.order)
        return f"C({top}, {self.depth})"

    def theta_text(self) -> str:
        return f"Θ({self.param_name}^{self.theta_exponent})"


def analyze(prog: LoopNestProgram, n: int | None = None) -> AnalysisResult:
    """Iteration count of the nest: termirial_p(n, depth-1) = C(n+depth-1, depth).

    The bound n is prog.param_value unless overridden; when neither is
    given the result is symbolic (exact_count is None).
    """
    value = prog.param_value if n is None else n
    depth = prog.depth
    return AnalysisResult(
        depth=depth,
        order=depth - 1,
        param_name=prog.param_name,
        param_value=value,
        exact_count=None if value is None else termirial_p(value, depth - 1),
        theta_exponent=depth,
    )


def simulate(prog: LoopNestProgram, n: int, budget: int = DEFAULT_STEP_BUDGET) -> int:
    """Run the nest literally and count innermost-body entries.

    Independent of the closed form apart from the budget pre-check, so it
    serves as the oracle for analyze().  A bound of 0 is an empty loop
    and contributes nothing.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    check_budget(termirial_p(n, prog.depth - 1), budget, f"simulate depth {prog.depth} with n = {n}")
    last = prog.depth - 1

    def run(level: int, bound: int) -> int:
        if level == last:
            entries = 0
            for _ in range(1, bound + 1):
                entries += 1
            return entries
        return sum(run(level + 1, k) for k in range(1, bound + 1))

    return run(0, n)
