"""Per-file and codebase-level base measurements."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from statistics import fmean

from .lexer import (
    LexError,
    Token,
    TokenKind,
    is_halstead_operand,
    is_halstead_operator,
    tokenize,
)
from .units import UnitMetrics, fill_line_counts, parse

MINISRC = "minisrc"
TEXT = "text"

TEXT_COMMENT_PREFIXES = ("#", "//")


def halstead_volume(n1: int, n2: int, eta1: int, eta2: int) -> float:
    """(n1 + n2) * ln(eta1 + eta2), natural log.

    A vocabulary of 0 or 1 has no information content; the volume is 0.
    """
    vocabulary = eta1 + eta2
    if vocabulary <= 1:
        return 0.0
    return (n1 + n2) * math.log(vocabulary)


def whitespace_complexity(source_text: str, indent_width: int = 4) -> int:
    """Sum of indentation levels over non-blank lines (tabs expand to indent_width)."""
    if indent_width < 1:
        raise ValueError("indent_width must be >= 1")
    total = 0
    for line in source_text.splitlines():
        if not line.strip():
            continue
        columns = 0
        for ch in line:
            if ch == " ":
                columns += 1
            elif ch == "\t":
                columns += indent_width
            elif ch in "\f\v":
                continue
            else:
                break
        total += columns // indent_width
    return total


@dataclass(frozen=True)
class CloneBlock:
    """One side of a clone pair: a 1-based, inclusive line range in a file."""

    path: str
    start_line: int
    end_line: int


@dataclass(frozen=True)
class ClonePair:
    first: CloneBlock
    second: CloneBlock
    length: int  # lines in each block (code lines, blanks/comments skipped)
    mode: str  # "identical" | "similar"
    textual: bool  # the two blocks are also identical line-by-line


@dataclass
class FileMetrics:
    path: str
    language: str = MINISRC
    units: list[UnitMetrics] = field(default_factory=list)
    loc: int = 0
    lloc: int = 0
    comment_lines: int = 0
    n1: int = 0
    n2: int = 0
    eta1: int = 0
    eta2: int = 0
    decisions: int = 0
    whitespace_complexity: int = 0
    duplicate_blocks: list[ClonePair] = field(default_factory=list)
    # normalized code lines for clone detection: (line number, text)
    code_lines: list[tuple[int, str]] = field(default_factory=list, repr=False)
    # the same lines reduced to token kinds with operand names erased
    shape_lines: list[tuple[int, str]] = field(default_factory=list, repr=False)
    # if/while conditions containing `=`: (line, count, enclosing unit or None)
    condition_assignments: list[tuple[int, int, str | None]] = field(default_factory=list)
    # comments that lex as code: (line, token count)
    commented_code: list[tuple[int, int]] = field(default_factory=list)

    @property
    def comment_ratio(self) -> float:
        denom = self.loc + self.comment_lines
        return self.comment_lines / denom if denom else 0.0

    @property
    def is_minisrc(self) -> bool:
        return self.language == MINISRC

    @property
    def halstead_volume(self) -> float | None:
        if not self.is_minisrc:
            return None
        return halstead_volume(self.n1, self.n2, self.eta1, self.eta2)

    @property
    def cc_aip(self) -> int | None:
        return self.decisions if self.is_minisrc else None

    @property
    def cc_original(self) -> int | None:
        return self.decisions + 1 if self.is_minisrc else None


@dataclass
class CodebaseMetrics:
    files: list[FileMetrics] = field(default_factory=list)

    @property
    def modules(self) -> list[FileMetrics]:
        """Files with the full metric set (MiniSrc); these feed the MI averages."""
        return [f for f in self.files if f.is_minisrc]

    def _avg(self, values: list[float]) -> float:
        return fmean(values) if values else 0.0

    @property
    def v_hal_avg(self) -> float:
        return self._avg([f.halstead_volume for f in self.modules])

    @property
    def cc_avg(self) -> float:
        return self._avg([f.cc_aip for f in self.modules])

    @property
    def loc_avg(self) -> float:
        return self._avg([f.loc for f in self.modules])

    @property
    def comment_ratio_avg(self) -> float:
        return self._avg([f.comment_ratio for f in self.modules])

    @property
    def total_loc(self) -> int:
        return sum(f.loc for f in self.files)

    @property
    def total_lloc(self) -> int:
        return sum(f.lloc for f in self.files)

    @property
    def units(self) -> list[tuple[FileMetrics, UnitMetrics]]:
        return [(f, u) for f in self.files for u in f.units]

    def file(self, path: str) -> FileMetrics | None:
        for f in self.files:
            if f.path == path:
                return f
        return None


def line_classes(tokens: list[Token]) -> tuple[set[int], set[int]]:
    """Return (lines holding code, non-blank lines covered by a comment)."""
    code: set[int] = set()
    comment: set[int] = set()
    for tok in tokens:
        if tok.kind is TokenKind.COMMENT:
            for offset, part in enumerate(tok.text.split("\n")):
                if part.strip():
                    comment.add(tok.line + offset)
        else:
            code.add(tok.line)
    return code, comment


_WS = re.compile(r"\s+")


def _normalize(line: str) -> str:
    return _WS.sub(" ", line.strip())


def _shape_lines(tokens: list[Token]) -> list[tuple[int, str]]:
    by_line: dict[int, list[str]] = {}
    for tok in tokens:
        if tok.kind is TokenKind.COMMENT:
            continue
        text = "$" if tok.kind is TokenKind.OPERAND else tok.text
        by_line.setdefault(tok.line, []).append(text)
    return [(ln, " ".join(parts)) for ln, parts in sorted(by_line.items())]


def _commented_code(tokens: list[Token]) -> list[tuple[int, int]]:
    found = []
    for tok in tokens:
        if tok.kind is not TokenKind.COMMENT:
            continue
        body = tok.text[2:-2] if tok.text.startswith("/*") else tok.text[2:]
        try:
            inner = tokenize(body)
        except LexError:
            continue
        inner = [t for t in inner if t.kind is not TokenKind.COMMENT]
        if any(t.kind is TokenKind.OPERATOR for t in inner):
            found.append((tok.line, len(inner)))
    return found


def analyze_minisrc(path: str, source_text: str, indent_width: int = 4) -> FileMetrics:
    """Full metric extraction for a MiniSrc file.

    Raises LexError / ParseError (both carry ``.line``).
    """
    tokens = tokenize(source_text)
    result = parse(tokens)
    code, comment = line_classes(tokens)
    for unit in result.units:
        fill_line_counts(unit, code, comment)

    ops = [t.text for t in tokens if is_halstead_operator(t)]
    opnds = [t.text for t in tokens if is_halstead_operand(t)]
    src_lines = source_text.split("\n")
    code_lines = [(ln, _normalize(src_lines[ln - 1])) for ln in sorted(code)]

    return FileMetrics(
        path=path,
        language=MINISRC,
        units=result.units,
        loc=len(code),
        lloc=sum(u.lloc for u in result.units) + result.toplevel.lloc,
        comment_lines=len(comment - code),
        n1=len(ops),
        n2=len(opnds),
        eta1=len(set(ops)),
        eta2=len(set(opnds)),
        decisions=sum(u.decisions for u in result.units) + result.toplevel.decisions,
        whitespace_complexity=whitespace_complexity(source_text, indent_width),
        code_lines=code_lines,
        shape_lines=_shape_lines(tokens),
        condition_assignments=result.condition_assignments,
        commented_code=_commented_code(tokens),
    )


def analyze_text(path: str, source_text: str, indent_width: int = 4) -> FileMetrics:
    """Degraded mode: line counts, comment ratio, whitespace complexity, line clones."""
    loc = 0
    comments = 0
    code_lines = []
    for ln, raw in enumerate(source_text.split("\n"), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith(TEXT_COMMENT_PREFIXES):
            comments += 1
            continue
        loc += 1
        code_lines.append((ln, _normalize(raw)))
    return FileMetrics(
        path=path,
        language=TEXT,
        loc=loc,
        comment_lines=comments,
        whitespace_complexity=whitespace_complexity(source_text, indent_width),
        code_lines=code_lines,
    )
