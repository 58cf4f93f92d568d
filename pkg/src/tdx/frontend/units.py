"""Recursive-descent pass over MiniSrc tokens.

Only the structure the metrics need is recovered: function boundaries,
statement counts, block depth, decision points and a few expression facts.
No syntax tree is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lexer import Token, TokenKind, is_halstead_operand, is_halstead_operator


class ParseError(Exception):
    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


BOOL_OPS = frozenset({"&&", "||"})


@dataclass
class UnitMetrics:
    name: str
    start_line: int
    end_line: int
    loc: int = 0
    lloc: int = 0
    comment_lines: int = 0
    param_count: int = 0
    return_count: int = 0
    max_nesting: int = 0
    bool_op_max: int = 0
    decisions: int = 0
    n1: int = 0
    n2: int = 0
    eta1: int = 0
    eta2: int = 0

    @property
    def cc_original(self) -> int:
        # e - n + 2p with p = 1
        return self.decisions + 1

    @property
    def cc_aip(self) -> int:
        # e - n + p with p = 1
        return self.decisions

    @property
    def halstead_volume(self) -> float:
        from .metrics import halstead_volume

        return halstead_volume(self.n1, self.n2, self.eta1, self.eta2)


@dataclass
class _Scope:
    """Counters for one unit, or for the file's top-level code."""

    lloc: int = 0
    returns: int = 0
    decisions: int = 0
    max_nesting: int = 0
    bool_op_max: int = 0
    # (line, number of `=` tokens) for every if/while condition holding an assignment
    condition_assignments: list[tuple[int, int]] = field(default_factory=list)


@dataclass
class ParseResult:
    units: list[UnitMetrics]
    toplevel: _Scope
    # unit name (or None for top-level code) per condition assignment
    condition_assignments: list[tuple[int, int, str | None]]


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self.toks = [t for t in tokens if t.kind is not TokenKind.COMMENT]
        self.pos = 0

    # -- token helpers -------------------------------------------------

    def peek(self) -> Token | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def last_line(self) -> int:
        return self.toks[-1].line if self.toks else 1

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of file", self.last_line())
        self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.text == text and tok.kind is not TokenKind.OPERAND

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"expected {text!r} before end of file", self.last_line())
        if tok.text != text or tok.kind is TokenKind.OPERAND:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.line)
        self.pos += 1
        return tok

    # -- grammar ---------------------------------------------------------

    def parse_file(self) -> ParseResult:
        units: list[UnitMetrics] = []
        top = _Scope()
        assigns: list[tuple[int, int, str | None]] = []
        while self.peek() is not None:
            if self.at("fn"):
                unit, scope = self.parse_function()
                units.append(unit)
                assigns.extend((ln, n, unit.name) for ln, n in scope.condition_assignments)
            else:
                self.parse_statement(top, level=0)
        assigns.extend((ln, n, None) for ln, n in top.condition_assignments)
        assigns.sort(key=lambda a: a[0])
        return ParseResult(units, top, assigns)

    def parse_function(self) -> tuple[UnitMetrics, _Scope]:
        start_idx = self.pos
        fn_tok = self.expect("fn")
        name_tok = self.next()
        if name_tok.kind is not TokenKind.OPERAND or not _is_identifier(name_tok.text):
            raise ParseError(f"expected function name, found {name_tok.text!r}", name_tok.line)
        self.expect("(")
        params = 0
        if not self.at(")"):
            while True:
                p = self.next()
                if p.kind is not TokenKind.OPERAND or not _is_identifier(p.text):
                    raise ParseError(f"expected parameter name, found {p.text!r}", p.line)
                params += 1
                if self.at(","):
                    self.pos += 1
                    continue
                break
        self.expect(")")
        scope = _Scope()
        end_tok = self.parse_block(scope, level=0)
        unit_tokens = self.toks[start_idx:self.pos]
        ops = [t.text for t in unit_tokens if is_halstead_operator(t)]
        opnds = [t.text for t in unit_tokens if is_halstead_operand(t)]
        unit = UnitMetrics(
            name=name_tok.text,
            start_line=fn_tok.line,
            end_line=end_tok.line,
            lloc=scope.lloc,
            param_count=params,
            return_count=scope.returns,
            max_nesting=scope.max_nesting,
            bool_op_max=scope.bool_op_max,
            decisions=scope.decisions,
            n1=len(ops),
            n2=len(opnds),
            eta1=len(set(ops)),
            eta2=len(set(opnds)),
        )
        return unit, scope

    def parse_block(self, scope: _Scope, level: int) -> Token:
        """Parse `{ stmt* }` whose contents sit at nesting `level`; return the `}`."""
        self.expect("{")
        scope.max_nesting = max(scope.max_nesting, level)
        while True:
            tok = self.peek()
            if tok is None:
                raise ParseError("unbalanced braces: missing '}'", self.last_line())
            if self.at("}"):
                return self.next()
            self.parse_statement(scope, level)

    def parse_statement(self, scope: _Scope, level: int) -> None:
        tok = self.peek()
        assert tok is not None
        if tok.kind is TokenKind.KEYWORD:
            kw = tok.text
            if kw == "if":
                self.pos += 1
                self.parse_conditional(scope, level)
                while self.at("else"):
                    self.pos += 1
                    if self.at("if"):
                        self.pos += 1
                        self.parse_conditional(scope, level)
                    else:
                        self.parse_block(scope, level + 1)
                        break
                return
            if kw == "while":
                self.pos += 1
                self.parse_conditional(scope, level)
                return
            if kw == "for":
                self.pos += 1
                scope.lloc += 1
                scope.decisions += 1
                self.expect("(")
                self.parse_expression(scope, (";",))
                self.expect(";")
                self.parse_expression(scope, (";",))
                self.expect(";")
                self.parse_expression(scope, (")",))
                self.expect(")")
                self.parse_block(scope, level + 1)
                return
            if kw == "switch":
                self.pos += 1
                self.parse_switch(scope, level)
                return
            if kw == "return":
                self.pos += 1
                scope.lloc += 1
                scope.returns += 1
                self.parse_expression(scope, (";",))
                self.expect(";")
                return
            if kw in ("break", "continue"):
                self.pos += 1
                scope.lloc += 1
                self.expect(";")
                return
            if kw == "fn":
                raise ParseError("nested function definitions are not allowed", tok.line)
            raise ParseError(f"unexpected {kw!r}", tok.line)
        if self.at("{"):
            self.parse_block(scope, level + 1)
            return
        if self.at(";"):
            self.pos += 1
            return
        if self.at("}"):
            raise ParseError("unbalanced braces: unexpected '}'", tok.line)
        scope.lloc += 1
        self.parse_expression(scope, (";",))
        self.expect(";")

    def parse_conditional(self, scope: _Scope, level: int) -> None:
        """`( cond ) block` after an if / else-if / while keyword."""
        scope.lloc += 1
        scope.decisions += 1
        open_tok = self.expect("(")
        cond = self.parse_expression(scope, (")",))
        self.expect(")")
        assigns = sum(1 for t in cond if t.kind is TokenKind.OPERATOR and t.text == "=")
        if assigns:
            scope.condition_assignments.append((open_tok.line, assigns))
        self.parse_block(scope, level + 1)

    def parse_switch(self, scope: _Scope, level: int) -> None:
        scope.lloc += 1
        self.expect("(")
        self.parse_expression(scope, (")",))
        self.expect(")")
        self.expect("{")
        body = level + 1
        scope.max_nesting = max(scope.max_nesting, body)
        while True:
            tok = self.peek()
            if tok is None:
                raise ParseError("unbalanced braces: missing '}'", self.last_line())
            if self.at("}"):
                self.pos += 1
                return
            if self.at("case"):
                self.pos += 1
                scope.lloc += 1
                scope.decisions += 1
                self.parse_expression(scope, (":",))
                self.expect(":")
            elif self.at("default"):
                self.pos += 1
                scope.lloc += 1
                self.expect(":")
            else:
                self.parse_statement(scope, body)

    def parse_expression(self, scope: _Scope, stop: tuple[str, ...]) -> list[Token]:
        """Consume tokens up to (not including) a stop symbol at paren depth 0."""
        depth = 0
        out: list[Token] = []
        while True:
            tok = self.peek()
            if tok is None:
                raise ParseError(f"expected {stop[0]!r} before end of file", self.last_line())
            if tok.kind is TokenKind.PUNCTUATION:
                if depth == 0 and tok.text in stop:
                    break
                if tok.text == "(":
                    depth += 1
                elif tok.text == ")":
                    if depth == 0:
                        raise ParseError("unbalanced parentheses: unexpected ')'", tok.line)
                    depth -= 1
                elif tok.text in "{};:":
                    raise ParseError(f"unexpected {tok.text!r} in expression", tok.line)
            elif tok.kind is TokenKind.KEYWORD:
                raise ParseError(f"unexpected keyword {tok.text!r} in expression", tok.line)
            out.append(tok)
            self.pos += 1
        bool_ops = sum(1 for t in out if t.kind is TokenKind.OPERATOR and t.text in BOOL_OPS)
        scope.decisions += bool_ops
        scope.bool_op_max = max(scope.bool_op_max, bool_ops)
        return out


def _is_identifier(text: str) -> bool:
    return text[:1].isalpha() or text[:1] == "_"


def parse(tokens: list[Token]) -> ParseResult:
    return _Parser(tokens).parse_file()


def parse_units(tokens: list[Token]) -> list[UnitMetrics]:
    """One UnitMetrics per `fn` definition, line counts included."""
    from .metrics import line_classes

    result = parse(tokens)
    code, comment = line_classes(tokens)
    for unit in result.units:
        fill_line_counts(unit, code, comment)
    return result.units


def fill_line_counts(unit: UnitMetrics, code: set[int], comment: set[int]) -> None:
    span = range(unit.start_line, unit.end_line + 1)
    unit.loc = sum(1 for ln in span if ln in code)
    unit.comment_lines = sum(1 for ln in span if ln in comment and ln not in code)
