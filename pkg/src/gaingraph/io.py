"""File formats: the TGG text format, its JSON mirror, and matrix export.

TGG is line-oriented:

    # comment
    n 4
    e 0 1 0.25
    e 1 2 1/3

Gains are turns for the orientation u -> v, written either as a decimal
or as an exact rational "p/q".  Writing is canonical: floats use their
shortest round-tripping repr, so read(write(g)) reproduces g exactly and
write(read(f)) is byte-identical for canonical files.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import List, Sequence, TextIO, Union

import numpy as np

from .gains import Gain
from .graph import GainGraph, GraphError, build_graph


class FormatError(ValueError):
    """Malformed input file; carries the offending line number."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _format_turns(g: Gain) -> str:
    t = g.turns
    if isinstance(t, Fraction):
        return f"{t.numerator}/{t.denominator}"
    return repr(t)


# -- TGG ------------------------------------------------------------------

def read_tgg(text: str) -> GainGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise FormatError("duplicate 'n' line", lineno)
            if len(parts) != 2:
                raise FormatError("'n' line needs one integer", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise FormatError(f"bad vertex count {parts[1]!r}", lineno) from None
        elif parts[0] == "e":
            if n is None:
                raise FormatError("'e' line before 'n' line", lineno)
            if len(parts) != 4:
                raise FormatError("'e' line needs: e <u> <v> <turns>", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
                g = Gain.parse(parts[3])
            except (ValueError, ZeroDivisionError):
                raise FormatError(f"bad edge line {line!r}", lineno) from None
            edges.append((u, v, g))
        else:
            raise FormatError(f"unknown directive {parts[0]!r}", lineno)
    if n is None:
        raise FormatError("missing 'n' line")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def write_tgg(g: GainGraph) -> str:
    lines = [f"n {g.n}"]
    for e in g.edges:
        lines.append(f"e {e.u} {e.v} {_format_turns(e.gain)}")
    return "\n".join(lines) + "\n"


# -- JSON mirror ----------------------------------------------------------

def read_json_graph(text: str) -> GainGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise FormatError("JSON graph needs keys 'n' and 'edges'")
    edges = []
    for rec in obj["edges"]:
        t = rec["turns"]
        gain = Gain.parse(t) if isinstance(t, str) else Gain(float(t))
        edges.append((rec["u"], rec["v"], gain))
    try:
        return build_graph(int(obj["n"]), edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def write_json_graph(g: GainGraph) -> str:
    edges = []
    for e in g.edges:
        t = e.gain.turns
        rec = {
            "u": e.u,
            "v": e.v,
            "turns": _format_turns(e.gain) if isinstance(t, Fraction) else t,
        }
        edges.append(rec)
    return json.dumps({"n": g.n, "edges": edges})


def read_graph(text: str) -> GainGraph:
    """Auto-detect TGG vs JSON by the first non-blank character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return read_json_graph(text)
    return read_tgg(text)


# -- switching-function files ---------------------------------------------

def read_switching(text: str, n: int) -> List[Gain]:
    """One turns token per line (decimal or p/q); must match vertex count."""
    zeta = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            zeta.append(Gain.parse(line))
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad turns value {line!r}", lineno) from None
    if len(zeta) != n:
        raise FormatError(f"switching function has {len(zeta)} values, graph has {n} vertices")
    return zeta


# -- matrix export --------------------------------------------------------

def matrix_to_json(M: np.ndarray) -> str:
    rows = [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(M, dtype=complex)]
    return json.dumps(rows)


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def matrix_to_csv(M: np.ndarray) -> str:
    lines = [",".join(_fmt_complex(z) for z in row) for row in np.asarray(M, dtype=complex)]
    return "\n".join(lines) + "\n"
