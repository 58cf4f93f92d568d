import pytest

from tdx.frontend.lexer import LexError, TokenKind, is_halstead_operand, is_halstead_operator, tokenize

K = TokenKind


def kinds(text):
    return [(t.kind, t.text) for t in tokenize(text)]


def test_minimal_statement():
    assert kinds("x = 1") == [(K.OPERAND, "x"), (K.OPERATOR, "="), (K.OPERAND, "1")]


def test_comment_only_line():
    assert kinds("// note") == [(K.COMMENT, "// note")]


def test_condition_hand_tokenized():
    assert kinds("if (a && b) { }") == [
        (K.KEYWORD, "if"), (K.PUNCTUATION, "("), (K.OPERAND, "a"), (K.OPERATOR, "&&"),
        (K.OPERAND, "b"), (K.PUNCTUATION, ")"), (K.PUNCTUATION, "{"), (K.PUNCTUATION, "}"),
    ]


def test_longest_operator_wins():
    assert [t.text for t in tokenize("a==b<=c!=d")] == ["a", "==", "b", "<=", "c", "!=", "d"]


def test_block_comment_spans_lines():
    toks = tokenize("/* a\nb */\nx")
    assert toks[0].kind is K.COMMENT and toks[0].end_line == 2
    assert toks[1].line == 3


def test_string_literal_is_operand():
    (tok,) = tokenize('"a // b"')
    assert tok.kind is K.OPERAND


@pytest.mark.parametrize("src, line", [
    ('x = "open', 1),
    ("x = 1\n/* never closed", 2),
    ("x = 1\ny = 2 @ 3", 2),
])
def test_lex_errors_carry_line(src, line):
    with pytest.raises(LexError) as err:
        tokenize(src)
    assert err.value.line == line


def test_lines_non_decreasing():
    lines = [t.line for t in tokenize("fn f(a) {\n  x = a;\n  // c\n  return x;\n}\n")]
    assert lines == sorted(lines)


def test_halstead_roles():
    toks = {t.text: t for t in tokenize("fn f(a) { if (a) { return a + 1; } }")}
    assert is_halstead_operator(toks["if"]) and is_halstead_operator(toks["return"])
    assert is_halstead_operator(toks["+"])
    assert not is_halstead_operator(toks["fn"]) and not is_halstead_operand(toks["fn"])
    assert is_halstead_operand(toks["a"]) and is_halstead_operand(toks["1"])
    assert not is_halstead_operator(toks["("]) and not is_halstead_operand(toks["("])


def test_comments_never_count():
    toks = tokenize("// x = y + z\n/* a * b */")
    assert not any(is_halstead_operator(t) or is_halstead_operand(t) for t in toks)
