import pytest

from tdx.frontend import analyze_file
from tdx.frontend.lexer import tokenize
from tdx.frontend.units import ParseError, parse, parse_units


def unit(src):
    (u,) = analyze_file("t.ms", src, minisrc=True).units
    return u


def test_straight_line_body():
    u = unit("fn f(a) {\n  x = a + 1;\n  return x;\n}\n")
    assert (u.decisions, u.cc_original, u.cc_aip) == (0, 1, 0)


def test_one_if_one_and():
    u = unit("fn f(a, b) {\n  if (a && b) {\n    return 1;\n  }\n  return 0;\n}\n")
    assert u.decisions == 2
    assert u.cc_original == 3


def test_nested_depth():
    u = unit("fn f(a) {\n if (a) {\n  if (a) {\n   while (a) {\n    a = a - 1;\n   }\n  }\n }\n}\n")
    assert u.max_nesting == 3


def test_all_decision_kinds():
    src = """fn f(a, b) {
    if (a) { x = 1; } else if (b) { x = 2; } else { x = 3; }
    while (a || b) { a = a - 1; }
    for (i = 0; i < 3; i = i + 1) { x = x + i; }
    switch (x) {
        case 1: x = 0;
        case 2: x = 1;
        default: x = 2;
    }
    return x;
}
"""
    u = unit(src)
    # if, else-if, while, ||, for, case, case
    assert u.decisions == 7
    assert u.cc_original - u.cc_aip == 1


def test_switch_adds_a_level():
    u = unit("fn f(a) {\n  switch (a) {\n    case 1: return 1;\n  }\n  return 0;\n}\n")
    assert u.max_nesting == 1


def test_counts():
    src = """fn g(p, q, r) {
    // leading comment
    if (p > 1 && q > 2 && r > 3) {
        return p;
    }

    return q;
}
"""
    u = unit(src)
    assert u.param_count == 3
    assert u.return_count == 2
    assert u.bool_op_max == 2
    assert u.loc == 6
    assert u.comment_lines == 1
    # if header + 2 returns
    assert u.lloc == 3
    assert (u.start_line, u.end_line) == (1, 8)


def test_halstead_counters():
    u = unit("fn f(a) {\n  x = a + a;\n}\n")
    # operators: = +; operands: x a a (parameter list counts too)
    assert u.eta1 == 2 and u.n1 == 2
    assert u.eta1 <= u.n1 and u.eta2 <= u.n2


def test_condition_assignment_recorded():
    res = parse(tokenize("fn f(q) {\n  while (x = q) {\n    q = 0;\n  }\n}\n"))
    assert [(ln, n) for ln, n, _ in res.condition_assignments] == [(2, 1)]


@pytest.mark.parametrize("src", [
    "fn f(a) {\n  x = 1;\n",
    "fn f(a) {\n  x = 1;\n}}\n",
    "fn f(a) {\n  if (a {\n  }\n}\n",
])
def test_unbalanced_is_parse_error(src):
    with pytest.raises(ParseError) as err:
        parse_units(tokenize(src))
    assert err.value.line >= 1


def test_text_mode_has_no_units():
    f = analyze_file("notes.txt", "fn f(a) {\n}\n", minisrc=False)
    assert f.units == [] and f.loc == 2
