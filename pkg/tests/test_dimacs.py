from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chromsum.dimacs import DimacsParseError, read_dimacs, write_dimacs
from chromsum.graph import path, petersen, random_gnp


def test_read_path():
    assert read_dimacs("p edge 3 2\ne 1 2\ne 2 3") == path(3)


def test_comments_duplicates_and_orientation():
    text = "c hello\np edge 3 3\ne 1 2\ne 2 1\ne 1 2\ne 3 2\n"
    g = read_dimacs(text)
    assert g == path(3)


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("p edge 3 1\ne 1 1\n", 2, "self-loop"),
        ("p edge 3 1\ne 1 4\n", 2, "out of range"),
        ("e 1 2\n", 1, "before header"),
        ("p graph 3 1\n", 1, "bad header"),
        ("p edge x 1\n", 1, "bad header"),
        ("p edge 3 1\nq 1 2\n", 2, "unknown line"),
        ("p edge 3 1\ne 1\n", 2, "two endpoints"),
        ("c nothing\n", 0, "missing"),
    ],
)
def test_parse_errors_report_line(text, line, fragment):
    with pytest.raises(DimacsParseError) as info:
        read_dimacs(text)
    assert info.value.lineno == line
    assert fragment in str(info.value)


def test_write_is_canonical():
    text = write_dimacs(petersen(), comments=("petersen",))
    assert text.startswith("c petersen\np edge 10 15\n")
    assert write_dimacs(read_dimacs(text)) == write_dimacs(petersen())


@settings(max_examples=50, deadline=None)
@given(n=st.integers(0, 15), seed=st.integers(0, 10**9))
def test_roundtrip(n, seed):
    g = random_gnp(max(n, 1), Fraction(1, 3), seed)
    back = read_dimacs(write_dimacs(g))
    assert back == g
    assert all(back.neighbors(v) == g.neighbors(v) for v in range(g.n))
