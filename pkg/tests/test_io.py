import json

import numpy as np
import pytest

from gaingraph import Gain, build_graph
from gaingraph.generators import random_graph
from gaingraph.io import (
    FormatError,
    matrix_to_csv,
    matrix_to_json,
    read_graph,
    read_json_graph,
    read_switching,
    read_tgg,
    write_json_graph,
    write_tgg,
)

SAMPLE = """# a triangle
n 3
e 0 1 1/4
e 1 2 0.25
e 0 2 0.0
"""


def test_read_tgg():
    g = read_tgg(SAMPLE)
    assert g.n == 3 and g.m == 3
    assert g.gain(0, 1).turns.numerator == 1
    assert g.gain(1, 2).turns == 0.25


def test_roundtrip_exact():
    for seed in range(5):
        g = random_graph(10, 0.5, seed)
        assert read_tgg(write_tgg(g)) == g


def test_roundtrip_rational_gains():
    g = build_graph(3, [(0, 1, "1/3"), (1, 2, "5/7")])
    text = write_tgg(g)
    assert "1/3" in text and "5/7" in text
    assert read_tgg(text) == g


def test_write_read_write_byte_identical():
    g = random_graph(12, 0.4, 9)
    text = write_tgg(g)
    assert write_tgg(read_tgg(text)) == text


@pytest.mark.parametrize(
    "text,line",
    [
        ("e 0 1 0.5\nn 2\n", 1),  # edge before n
        ("n 2\ne 0 1\n", 2),  # short edge line
        ("n 2\ne 0 1 x\n", 2),  # bad turns
        ("n 2\nz 0\n", 2),  # unknown directive
        ("n two\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as exc:
        read_tgg(text)
    assert exc.value.line == line


def test_missing_n():
    with pytest.raises(FormatError):
        read_tgg("# nothing\n")


def test_json_mirror():
    g = build_graph(3, [(0, 1, "1/4"), (1, 2, Gain(0.125))])
    text = write_json_graph(g)
    obj = json.loads(text)
    assert obj["n"] == 3
    assert read_json_graph(text) == g


def test_read_graph_autodetect():
    g = random_graph(6, 0.5, 1)
    assert read_graph(write_tgg(g)) == g
    assert read_graph(write_json_graph(g)) == g


def test_read_switching():
    zeta = read_switching("0.25\n1/2\n# note\n0.0\n", 3)
    assert zeta[1] == Gain.parse("1/2")
    with pytest.raises(FormatError):
        read_switching("0.25\n", 3)


def test_matrix_export():
    M = np.array([[0, 1j], [-1j, 0]])
    rows = json.loads(matrix_to_json(M))
    assert rows[0][1] == [0.0, 1.0]
    csv = matrix_to_csv(M)
    assert csv.splitlines()[0].split(",")[1] == "0+1i"
