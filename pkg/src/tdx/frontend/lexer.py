"""Lexer for MiniSrc, the small brace-delimited reference language.

Token classification (also used for Halstead counting):

=============  ==========================================  ===============
kind           examples                                    Halstead role
=============  ==========================================  ===============
keyword        if else while for switch case default       operator
               return break continue
keyword        fn                                          none
operator       = + - * / % ! == != < <= > >= && ||         operator
operand        identifiers, numbers, strings, true/false   operand
punctuation    ( ) { } , ; :                               none
comment        // ...   /* ... */                          none
=============  ==========================================  ===============
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass


class TokenKind(str, enum.Enum):
    OPERATOR = "operator"
    OPERAND = "operand"
    KEYWORD = "keyword"
    COMMENT = "comment"
    PUNCTUATION = "punctuation"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int

    @property
    def end_line(self) -> int:
        return self.line + self.text.count("\n")


class LexError(Exception):
    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


KEYWORDS = frozenset(
    {"fn", "if", "else", "while", "for", "switch", "case", "default",
     "return", "break", "continue"}
)
# `fn` only introduces a definition; every other keyword steers control flow.
FLOW_KEYWORDS = KEYWORDS - {"fn"}

# Longest operators first so `==` wins over `=`.
OPERATORS = ("&&", "||", "==", "!=", "<=", ">=", "=", "+", "-", "*", "/", "%", "!", "<", ">")
PUNCTUATION = frozenset("(){},;:")

_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER = re.compile(r"[0-9]+(?:\.[0-9]+)?")


def tokenize(source_text: str) -> list[Token]:
    """Split MiniSrc source into tokens, keeping comments as comment tokens.

    Raises LexError for unterminated strings or block comments and for
    characters outside the language.
    """
    tokens: list[Token] = []
    pos = 0
    line = 1
    n = len(source_text)
    while pos < n:
        ch = source_text[pos]
        if ch == "\n":
            line += 1
            pos += 1
            continue
        if ch.isspace():
            pos += 1
            continue
        if source_text.startswith("//", pos):
            end = source_text.find("\n", pos)
            end = n if end == -1 else end
            tokens.append(Token(TokenKind.COMMENT, source_text[pos:end], line))
            pos = end
            continue
        if source_text.startswith("/*", pos):
            end = source_text.find("*/", pos + 2)
            if end == -1:
                raise LexError("unterminated block comment", line)
            text = source_text[pos:end + 2]
            tokens.append(Token(TokenKind.COMMENT, text, line))
            line += text.count("\n")
            pos = end + 2
            continue
        if ch == '"':
            end = _scan_string(source_text, pos, line)
            tokens.append(Token(TokenKind.OPERAND, source_text[pos:end], line))
            pos = end
            continue
        m = _WORD.match(source_text, pos)
        if m:
            word = m.group()
            kind = TokenKind.KEYWORD if word in KEYWORDS else TokenKind.OPERAND
            tokens.append(Token(kind, word, line))
            pos = m.end()
            continue
        m = _NUMBER.match(source_text, pos)
        if m:
            tokens.append(Token(TokenKind.OPERAND, m.group(), line))
            pos = m.end()
            continue
        if ch in PUNCTUATION:
            tokens.append(Token(TokenKind.PUNCTUATION, ch, line))
            pos += 1
            continue
        for op in OPERATORS:
            if source_text.startswith(op, pos):
                tokens.append(Token(TokenKind.OPERATOR, op, line))
                pos += len(op)
                break
        else:
            raise LexError(f"unexpected character {ch!r}", line)
    return tokens


def _scan_string(text: str, start: int, line: int) -> int:
    pos = start + 1
    while pos < len(text):
        ch = text[pos]
        if ch == "\\":
            if pos + 1 >= len(text) or text[pos + 1] == "\n":
                break
            pos += 2
            continue
        if ch == "\n":
            break
        if ch == '"':
            return pos + 1
        pos += 1
    raise LexError("unterminated string literal", line)


def is_halstead_operator(tok: Token) -> bool:
    if tok.kind is TokenKind.OPERATOR:
        return True
    return tok.kind is TokenKind.KEYWORD and tok.text in FLOW_KEYWORDS


def is_halstead_operand(tok: Token) -> bool:
    return tok.kind is TokenKind.OPERAND
