"""Command-line front end.

Angles on the command line accept "Xturns", "Xrad", "p/q" (rational
turns) or a bare decimal, which is read as turns.  All numeric output is
printed with 12 significant digits.  Exit status: 0 success, 1 verify
found a corrected-variant violation or identity failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import List, Optional

import numpy as np

from . import eigen
from .bounds import BoundReport, verify_all
from .eigen import eigen_hermitian
from .gains import Gain
from .generators import (
    broom,
    complete,
    cone_triangle,
    cycle,
    path,
    random_graph,
    star,
)
from .graph import (
    GainGraph,
    GraphError,
    degree_profile,
    inverse_pair_partition,
    is_connected,
)
from .io import (
    FormatError,
    matrix_to_csv,
    matrix_to_json,
    read_graph,
    read_switching,
    write_json_graph,
    write_tgg,
)
from .matrices import adjacency, laplacian, signless_laplacian
from .spectra import cycle_spectrum, path_spectrum
from .switching import apply_switch, balance_certificate, balanced_component_count


def fmt(x: float) -> str:
    return f"{x:.12g}"


def parse_angle(text: str) -> Gain:
    """Parse 'Xturns', 'Xrad', 'p/q' or a bare decimal turn count."""
    text = text.strip()
    if text.endswith("turns"):
        return Gain.parse(text[: -len("turns")])
    if text.endswith("rad"):
        return Gain.from_radians(float(text[: -len("rad")]))
    return Gain.parse(text)


class CliError(Exception):
    pass


def _read_input(path: str) -> GainGraph:
    try:
        if path == "-":
            return read_graph(sys.stdin.read())
        with open(path) as fh:
            return read_graph(fh.read())
    except OSError as exc:
        raise CliError(str(exc)) from exc
    except FormatError as exc:
        raise CliError(str(exc)) from exc


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _gain_str(g: Gain) -> str:
    t = g.turns
    if isinstance(t, Fraction):
        return f"{t.numerator}/{t.denominator}"
    return fmt(float(t))


# -- subcommands -----------------------------------------------------------

def cmd_generate(args) -> int:
    kind = args.kind
    rest: List[str] = args.params
    try:
        if kind == "cycle":
            g = cycle(int(rest[0]), parse_angle(rest[1]) if len(rest) > 1 else Gain())
        elif kind == "path":
            g = path(int(rest[0]), [parse_angle(t) for t in rest[1:]] or None)
        elif kind == "star":
            g = star(int(rest[0]))
        elif kind == "broom":
            g = broom(int(rest[0]))
        elif kind in ("cone_triangle", "cone"):
            g = cone_triangle(int(rest[0]), parse_angle(rest[1]) if len(rest) > 1 else Gain())
        elif kind == "complete":
            g = complete(int(rest[0]))
        elif kind == "random":
            g = random_graph(int(rest[0]), float(rest[1]), int(rest[2]))
        else:
            raise CliError(f"unknown generator {kind!r}")
    except (IndexError, ValueError, ZeroDivisionError, GraphError) as exc:
        raise CliError(f"bad generator parameters: {exc}") from exc
    _emit(write_tgg(g), args.output)
    return 0


def cmd_info(args) -> int:
    g = _read_input(args.input)
    prof = degree_profile(g)
    part = inverse_pair_partition(g)
    b = balanced_component_count(g, tol=args.tol_gain)
    if args.format == "json":
        obj = {
            "n": g.n,
            "m": g.m,
            "delta": prof.delta,
            "b": b,
            "connected": is_connected(g),
            "degrees": prof.d.tolist(),
            "net_degrees": [[z.real, z.imag] for z in prof.net],
            "average_2_degrees": prof.m2.tolist(),
            "used_gains": sorted(_gain_str(x) for x in prof.used_gains),
            "inverse_pairs": [sorted(_gain_str(x) for x in p) for p in part.pairs],
        }
        _emit(json.dumps(obj, indent=2) + "\n", args.output)
        return 0
    lines = [
        f"n = {g.n}",
        f"m = {g.m}",
        f"Delta = {prof.delta}",
        f"b = {b}",
        f"connected = {is_connected(g)}",
        "vertex  degree  net_degree  avg2degree",
    ]
    for j in range(g.n):
        z = prof.net[j]
        lines.append(f"{j:6d}  {prof.d[j]:6d}  {fmt(z.real)}{z.imag:+.12g}i  {fmt(prof.m2[j])}")
    lines.append("used gains (turns): " + ", ".join(sorted(_gain_str(x) for x in prof.used_gains)))
    lines.append("inverse pairs: " + "; ".join(
        "{" + ", ".join(sorted(_gain_str(x) for x in p)) + "}" for p in part.pairs))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _detect_family(g: GainGraph):
    """Recognize a cycle or a path; return ('cycle', total) / ('path',) / None."""
    if not is_connected(g) or g.n < 2:
        return None
    degs = sorted(g.degree(u) for u in range(g.n))
    if g.n >= 3 and degs[0] == 2 and degs[-1] == 2 and g.m == g.n:
        # walk the cycle from vertex 0 to accumulate the total gain
        walk = [0, g.neighbors(0)[0]]
        while len(walk) <= g.n:
            nxt = [w for w in g.neighbors(walk[-1]) if w != walk[-2]]
            walk.append(nxt[0])
            if walk[-1] == 0:
                break
        from .graph import gain_of_walk

        return ("cycle", gain_of_walk(g, walk))
    if degs[0] == 1 and degs[1] == 1 and all(x == 2 for x in degs[2:]) and g.m == g.n - 1:
        return ("path",)
    return None


def cmd_spectrum(args) -> int:
    g = _read_input(args.input)
    builder = {"adjacency": adjacency, "laplacian": laplacian, "signless": signless_laplacian}
    M = builder[args.matrix](g)
    spec = eigen_hermitian(M, off_tol=args.tol_eigen, want_vectors=False)
    closed = None
    if args.closed_form:
        fam = _detect_family(g)
        if fam is None:
            closed = "not a cycle or path"
        elif args.matrix == "signless":
            closed = "no closed form for the signless matrix"
        else:
            cf = cycle_spectrum(g.n, fam[1]) if fam[0] == "cycle" else path_spectrum(g.n)
            vals = cf.adjacency if args.matrix == "adjacency" else cf.laplacian
            closed = float(np.abs(vals - spec.eigenvalues).max())
    if args.format == "json":
        obj = {
            "matrix": args.matrix,
            "eigenvalues": spec.eigenvalues.tolist(),
            "residual": spec.residual,
        }
        if closed is not None:
            obj["closed_form_deviation"] = closed
        _emit(json.dumps(obj) + "\n", args.output)
    elif args.format == "csv":
        _emit("\n".join(fmt(x) for x in spec.eigenvalues) + "\n", args.output)
    else:
        lines = [f"{args.matrix} eigenvalues (descending):"]
        lines += ["  " + fmt(x) for x in spec.eigenvalues]
        lines.append(f"residual = {fmt(spec.residual)}")
        if closed is not None:
            lines.append(f"closed-form check: {closed if isinstance(closed, str) else fmt(closed)}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_balance(args) -> int:
    g = _read_input(args.input)
    cert = balance_certificate(g, tol=args.tol_gain)
    b = balanced_component_count(g, tol=args.tol_gain)
    if args.format == "json":
        obj = {"balanced": cert.balanced, "b": b}
        if cert.balanced:
            obj["potential"] = [_gain_str(t) for t in cert.potential]
        else:
            obj["witness_cycle"] = list(cert.witness_cycle)
            obj["witness_gain"] = _gain_str(cert.witness_gain)
        _emit(json.dumps(obj, indent=2) + "\n", args.output)
        return 0
    lines = [f"verdict: {'balanced' if cert.balanced else 'unbalanced'}", f"b = {b}"]
    if cert.balanced:
        lines.append("potential (turns per vertex):")
        lines += [f"  {i}: {_gain_str(t)}" for i, t in enumerate(cert.potential)]
    else:
        lines.append("witness cycle: " + " -> ".join(map(str, cert.witness_cycle)))
        lines.append(f"witness gain (turns): {_gain_str(cert.witness_gain)}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_switch(args) -> int:
    g = _read_input(args.input)
    try:
        with open(args.zeta) as fh:
            zeta = read_switching(fh.read(), g.n)
    except OSError as exc:
        raise CliError(str(exc)) from exc
    except FormatError as exc:
        raise CliError(str(exc)) from exc
    _emit(write_tgg(apply_switch(g, zeta)), args.output)
    return 0


def _report_rows(reports: List[BoundReport]):
    for r in reports:
        yield {
            "name": r.name,
            "variant": r.variant,
            "lhs": r.lhs,
            "rhs": r.rhs,
            "slack": r.slack,
            "holds": r.holds,
            "equality": r.equality,
            "notes": r.notes,
        }


def _print_reports(reports, identities, skipped, fmt_kind, out):
    if fmt_kind == "json":
        obj = {
            "bounds": list(_report_rows(reports)),
            "identities": [
                {"name": c.name, "deviation": c.deviation, "tol": c.tol,
                 "passed": c.passed, "notes": c.notes}
                for c in identities
            ],
            "skipped": skipped,
        }
        _emit(json.dumps(obj, indent=2) + "\n", out)
    elif fmt_kind == "csv":
        lines = ["name,variant,lhs,rhs,slack,holds,equality,notes"]
        for row in _report_rows(reports):
            lines.append(
                f"{row['name']},{row['variant']},{fmt(row['lhs'])},{fmt(row['rhs'])},"
                f"{fmt(row['slack'])},{row['holds']},{row['equality']},\"{row['notes']}\""
            )
        for c in identities:
            lines.append(f"{c.name},identity,{fmt(c.deviation)},{fmt(c.tol)},,"
                         f"{c.passed},,\"{c.notes}\"")
        _emit("\n".join(lines) + "\n", out)
    else:
        lines = []
        for r in reports:
            mark = "ok " if r.holds else ("WARN" if r.variant == "printed" else "FAIL")
            lines.append(
                f"[{mark}] {r.name} ({r.variant}): {fmt(r.lhs)} <= {fmt(r.rhs)} "
                f"slack={fmt(r.slack)} {r.equality}"
                + (f"  # {r.notes}" if r.notes else "")
            )
        for c in identities:
            mark = "ok " if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.name}: deviation {fmt(c.deviation)} (tol {fmt(c.tol)})"
                         + (f"  # {c.notes}" if c.notes else ""))
        for s in skipped:
            lines.append(f"[skip] {s}")
        _emit("\n".join(lines) + "\n", out)


def cmd_bounds(args) -> int:
    g = _read_input(args.input)
    result = verify_all(g, seed=args.seed)
    _print_reports(result.reports, result.identities, result.skipped, args.format, args.output)
    return 0


def cmd_verify(args) -> int:
    failures = 0
    if args.seeds:
        lines = []
        for s in range(args.seeds):
            rng = np.random.default_rng(np.uint64(args.seed + s))
            n = int(rng.integers(3, 24))
            p = float(rng.choice([0.3, 0.5, 0.8]))
            g = random_graph(n, p, seed=args.seed + s)
            result = verify_all(g, seed=args.seed + s)
            ok = result.passed
            failures += 0 if ok else 1
            lines.append(f"seed {args.seed + s}: n={g.n} m={g.m} "
                         f"{'PASS' if ok else 'FAIL'} ({len(result.warnings)} printed-variant warnings)")
        _emit("\n".join(lines) + "\n", args.output)
        return 1 if failures else 0
    g = _read_input(args.input)
    result = verify_all(g, seed=args.seed)
    _print_reports(result.reports, result.identities, result.skipped, args.format, args.output)
    return 0 if result.passed else 1


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gaingraph",
                                 description="Complex unit gain graphs: matrices, spectra, balance, bounds.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default="-",
                           help="TGG/JSON graph file, or - for stdin")
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("-o", "--output", default=None, help="write output to a file")
        p.add_argument("--tol-eigen", type=float, default=eigen.OFF_TOL,
                       help="relative off-diagonal convergence threshold")
        p.add_argument("--tol-gain", type=float, default=1e-9,
                       help="turns tolerance for gain equality")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("generate", help="write a named family as TGG")
    p.add_argument("kind", help="cycle|path|star|broom|cone_triangle|complete|random")
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("info", help="graph summary: degrees, gains, b(Phi)")
    add_common(p)
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("spectrum", help="eigenvalues of a chosen matrix")
    add_common(p)
    p.add_argument("--matrix", choices=["adjacency", "laplacian", "signless"],
                   default="adjacency")
    p.add_argument("--closed-form", action="store_true",
                   help="cross-check cycle/path closed forms when recognized")
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("balance", help="balance certificate and b(Phi)")
    add_common(p)
    p.set_defaults(fn=cmd_balance)

    p = sub.add_parser("switch", help="apply a switching function")
    add_common(p)
    p.add_argument("--zeta", required=True, help="file with one turns value per vertex")
    p.set_defaults(fn=cmd_switch)

    p = sub.add_parser("bounds", help="evaluate every bound; violations are data")
    add_common(p)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("verify", help="full verification; nonzero exit on failures")
    add_common(p)
    p.add_argument("--seeds", type=int, default=0,
                   help="run the randomized suite over K seeds instead of a file")
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
