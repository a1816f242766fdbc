import json
import math

import numpy as np
import pytest

from gaingraph.cli import main, parse_angle
from gaingraph.gains import Gain
from gaingraph.io import read_tgg, write_tgg
from gaingraph.generators import cycle, random_graph


def run(capsys, monkeypatch, argv, stdin=""):
    import io
    import sys

    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_angle():
    assert parse_angle("0.25turns") == Gain(0.25)
    assert parse_angle("1/4").value == pytest.approx(1j)
    assert parse_angle("0.25") == Gain(0.25)
    assert abs(parse_angle(f"{math.pi}rad").value + 1.0) < 1e-12


def test_generate_and_spectrum_pipe(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["generate", "cycle", "3", "0.5turns"])
    assert code == 0
    g = read_tgg(out)
    assert g.n == 3
    code, out2, _ = run(
        capsys, monkeypatch,
        ["spectrum", "--matrix", "adjacency", "--format", "json"], stdin=out,
    )
    assert code == 0
    vals = json.loads(out2)["eigenvalues"]
    assert np.allclose(vals, [1, 1, -2], atol=1e-9)


def test_spectrum_closed_form(capsys, monkeypatch):
    text = write_tgg(cycle(7, Gain(0.3)))
    code, out, _ = run(
        capsys, monkeypatch,
        ["spectrum", "--closed-form", "--format", "json"], stdin=text,
    )
    assert code == 0
    assert json.loads(out)["closed_form_deviation"] <= 1e-9


def test_info_json(capsys, monkeypatch):
    text = write_tgg(cycle(5))
    code, out, _ = run(capsys, monkeypatch, ["info", "--format", "json"], stdin=text)
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 5 and obj["m"] == 5 and obj["connected"]
    assert obj["b"] == 1
    assert obj["degrees"] == [2] * 5


def test_balance_text_and_json(capsys, monkeypatch):
    text = write_tgg(cycle(4, Gain(0.3)))
    code, out, _ = run(capsys, monkeypatch, ["balance"], stdin=text)
    assert code == 0
    assert "unbalanced" in out and "witness" in out
    code, out, _ = run(capsys, monkeypatch, ["balance", "--format", "json"],
                       stdin=write_tgg(cycle(4)))
    obj = json.loads(out)
    assert obj["balanced"] and len(obj["potential"]) == 4


def test_switch_roundtrip(tmp_path, capsys, monkeypatch):
    g = random_graph(5, 0.8, 3)
    graph_file = tmp_path / "g.tgg"
    graph_file.write_text(write_tgg(g))
    zeta_file = tmp_path / "zeta.txt"
    zeta_file.write_text("0.1\n0.2\n0.3\n0.4\n1/2\n")
    code, out, _ = run(
        capsys, monkeypatch, ["switch", str(graph_file), "--zeta", str(zeta_file)]
    )
    assert code == 0
    h = read_tgg(out)
    # switching is spectrum-preserving; check one edge by hand
    e = g.edges[0]
    zeta = [Gain(0.1), Gain(0.2), Gain(0.3), Gain(0.4), Gain.parse("1/2")]
    expect = zeta[e.u].inverse() * e.gain * zeta[e.v]
    assert h.gain(e.u, e.v).isclose(expect, 1e-9)


def test_bounds_text(capsys, monkeypatch):
    text = write_tgg(cycle(5, Gain(0.2)))
    code, out, _ = run(capsys, monkeypatch, ["bounds"], stdin=text)
    assert code == 0
    assert "laplacian_lower_bound" in out
    assert "signless_comparison" in out
    assert "FAIL" not in out


def test_verify_exit_codes(capsys, monkeypatch):
    text = write_tgg(cycle(6, Gain(0.4)))
    code, out, _ = run(capsys, monkeypatch, ["verify"], stdin=text)
    assert code == 0
    code, out, _ = run(capsys, monkeypatch, ["verify", "--seeds", "5"])
    assert code == 0
    assert out.count("PASS") == 5


def test_generate_to_file(tmp_path, capsys, monkeypatch):
    dest = tmp_path / "out.tgg"
    code, _, _ = run(capsys, monkeypatch, ["generate", "star", "6", "-o", str(dest)])
    assert code == 0
    assert read_tgg(dest.read_text()).n == 6


@pytest.mark.parametrize(
    "argv,stdin",
    [
        (["spectrum"], "garbage\n"),
        (["generate", "torus", "5"], ""),
        (["generate", "cycle"], ""),
        (["info", "/nonexistent/file.tgg"], ""),
        (["spectrum"], "n 2\ne 0 5 0.1\n"),
    ],
)
def test_bad_input_exit_2(capsys, monkeypatch, argv, stdin):
    code, _, err = run(capsys, monkeypatch, argv, stdin=stdin)
    assert code == 2
    assert "error:" in err
