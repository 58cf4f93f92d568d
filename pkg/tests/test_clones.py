"""Clone detection against a brute-force all-window-pairs oracle."""

import re

import pytest
from hypothesis import given, settings, strategies as st

from corpus import minisrc_corpus
from tdx.frontend import analyze_file
from tdx.frontend.clones import IDENTICAL, SIMILAR, detect_clones, matching_windows

KEYWORDS = {"fn", "if", "else", "while", "for", "switch", "case", "default", "return",
            "break", "continue"}
TOKEN = re.compile(r"[A-Za-z_]\w*|\d+|&&|\|\||[=!<>]=|[-+*/%=<>!(){},;:]")


def oracle_lines(text, mode):
    """(line number, comparison key) for every code line; corpus has only // comments."""
    out = []
    for ln, raw in enumerate(text.split("\n"), start=1):
        s = raw.strip()
        if not s or s.startswith("//"):
            continue
        if mode == IDENTICAL:
            key = " ".join(s.split())
        else:
            key = " ".join("$" if (t[0].isalnum() or t[0] == "_") and t not in KEYWORDS else t
                           for t in TOKEN.findall(s))
        out.append((ln, key))
    return out


def oracle_windows(sources, window, mode):
    paths = sorted(sources)
    seqs = [oracle_lines(sources[p], mode) for p in paths]
    positions = [(f, i) for f, seq in enumerate(seqs) for i in range(len(seq) - window + 1)]
    found = set()
    for x, (fa, i) in enumerate(positions):
        for fb, j in positions[x + 1:]:
            if fa == fb and j - i < window:
                continue
            if all(seqs[fa][i + k][1] == seqs[fb][j + k][1] for k in range(window)):
                found.add((fa, i, fb, j))
    return paths, seqs, found


def oracle_clones(sources, window, mode):
    paths, seqs, found = oracle_windows(sources, window, mode)
    blocks = set()
    for fa, i, fb, j in found:
        if (fa, i - 1, fb, j - 1) in found:
            continue  # not the start of a maximal run
        k = 0
        while (fa, i + k + 1, fb, j + k + 1) in found:
            k += 1
        end = k + window - 1
        blocks.add((paths[fa], seqs[fa][i][0], seqs[fa][i + end][0],
                    paths[fb], seqs[fb][j][0], seqs[fb][j + end][0]))
    return blocks


def as_blocks(pairs):
    return {(p.first.path, p.first.start_line, p.first.end_line,
             p.second.path, p.second.start_line, p.second.end_line) for p in pairs}


def analyze(sources):
    return [analyze_file(p, t, minisrc=True) for p, t in sources.items()]


BLOCK = ["a = b + 1;", "c = a * 2;", "d = c - b;", "e = d / 3;", "f = e + a;", "g = f * f;"]


def fn(name, body):
    return "\n".join([f"fn {name}(b) {{", *body, "}"]) + "\n"


def test_exact_copy_across_files():
    files = analyze({"x.ms": fn("one", BLOCK), "y.ms": "z = 0;\n" + fn("two", BLOCK)})
    pairs = detect_clones(files, 6, IDENTICAL)
    assert len(pairs) == 1
    p = pairs[0]
    # the six statements plus the shared closing brace
    assert (p.first.path, p.first.start_line, p.first.end_line) == ("x.ms", 2, 8)
    assert (p.second.path, p.second.start_line, p.second.end_line) == ("y.ms", 3, 9)
    assert p.length == 7
    assert p.textual


def test_renamed_copy_is_only_a_similar_clone():
    renamed = [re.sub(r"\b([a-g])\b", r"\1\1", s) for s in BLOCK]
    files = analyze({"x.ms": fn("one", BLOCK), "y.ms": fn("two", renamed)})
    assert detect_clones(files, 6, IDENTICAL) == []
    similar = detect_clones(files, 6, SIMILAR)
    assert len(similar) == 1 and not similar[0].textual


def test_overlapping_windows_in_one_file_are_not_clones():
    body = ["x = x + 1;"] * 8
    files = analyze({"x.ms": fn("one", body)})
    pairs = detect_clones(files, 6, IDENTICAL)
    # only non-overlapping placements could match, and 8 lines leave none
    assert pairs == []


def test_window_validation():
    with pytest.raises(ValueError):
        detect_clones([], 1, IDENTICAL)
    with pytest.raises(ValueError):
        detect_clones([], 6, "fuzzy")


@pytest.mark.parametrize("mode", [IDENTICAL, SIMILAR])
@pytest.mark.parametrize("window", [3, 6])
def test_five_file_corpus_matches_brute_force(mode, window):
    sources = minisrc_corpus(seed=7, files=5)
    assert sum(t.count("\n") for t in sources.values()) <= 2000
    files = analyze(sources)
    _, _, windows = oracle_windows(sources, window, mode)
    assert matching_windows(files, window, mode) == windows
    got = as_blocks(detect_clones(files, window, mode))
    assert got == oracle_clones(sources, window, mode)
    assert got  # the corpus is built to contain clones


def test_pairs_reported_once_and_canonical():
    files = analyze(minisrc_corpus(seed=11, files=4))
    pairs = detect_clones(files, 4, IDENTICAL)
    keys = [as_blocks([p]).pop() for p in pairs]
    assert len(keys) == len(set(keys))
    for p in pairs:
        assert (p.first.path, p.first.start_line) < (p.second.path, p.second.start_line)


def test_input_order_does_not_matter():
    files = analyze(minisrc_corpus(seed=5, files=4))
    assert detect_clones(files, 5, SIMILAR) == detect_clones(files[::-1], 5, SIMILAR)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10_000), window=st.integers(2, 7),
       mode=st.sampled_from([IDENTICAL, SIMILAR]))
def test_random_corpora_match_brute_force(seed, window, mode):
    sources = minisrc_corpus(seed=seed, files=3, functions=4)
    files = analyze(sources)
    assert as_blocks(detect_clones(files, window, mode)) == oracle_clones(sources, window, mode)
