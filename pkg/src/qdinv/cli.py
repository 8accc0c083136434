"""Command line entry point: ``qdinv <subcommand> --a A --b B ...``.

Exit status is 0 on success, 1 on bad input and 2 when a verification
finds a counterexample.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from fractions import Fraction
from typing import Any, Optional, Sequence

from qdinv.bijections import Arrow, boundary_arrow_set, phi_mixed, verify_bijection
from qdinv.cone import (
    NotInCone,
    decompose,
    effective_bound_check,
    nested_to_vector,
    truncation_radius,
)
from qdinv.diagrams import (
    DiagramShapeError,
    Subdiagram,
    enumerate_subdiagrams,
    parse_subdiagram,
    upper_boundary,
)
from qdinv.forms import GVector, B, B_raw, Q, deficit_B_raw, deficit_Q
from qdinv.semigroup import GapDiagram, ParameterError, antiproj_row, gap_diagram, proj_row
from qdinv.series import CapExceeded, catalan_count, dinv_distribution, z_partial_sum
from qdinv.statistics import (
    classify_cells,
    cross_dinv,
    cross_dinv_half,
    dinv,
    double_cross_dinv,
    nested_dinv,
)
from qdinv.verify import run_verify

log = logging.getLogger("qdinv")


class InputError(Exception):
    """Malformed command line input; exit status 1."""


class VerificationFailed(Exception):
    def __init__(self, payload):
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: usage error: {message}\n")


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _load_json(text: str, flag: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON for {flag}: {e.msg} at position {e.pos}") from None


def _diagram(G: GapDiagram, text: str, flag: str) -> Subdiagram:
    obj = _load_json(text, flag)
    if not isinstance(obj, dict):
        raise InputError(f"{flag} must be a JSON object with 'rows' and/or 'values'")
    try:
        return parse_subdiagram(obj, G)
    except (DiagramShapeError, KeyError) as e:
        raise InputError(f"invalid diagram for {flag}: {e.args[0]}") from None


def _vector(G: GapDiagram, text: str, flag: str) -> GVector:
    """A vector ``{"gap": "p/q"}``, or a diagram object standing for its indicator."""
    obj = _load_json(text, flag)
    if not isinstance(obj, dict):
        raise InputError(f"{flag} must be a JSON object")
    if "rows" in obj or "values" in obj:
        return GVector.indicator(_diagram(G, text, flag))
    entries = {}
    for k, v in obj.items():
        try:
            if not isinstance(v, (str, int)) or isinstance(v, bool):
                raise ValueError
            entries[int(k)] = Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise InputError(
                f"malformed entry {k!r}: {v!r} in {flag}; keys are gap values, values \"p/q\""
            ) from None
    try:
        return GVector(G, entries)
    except KeyError as e:
        raise InputError(f"invalid vector for {flag}: {e.args[0]}") from None


def _family(G: GapDiagram, text: str, flag: str) -> list[Subdiagram]:
    obj = _load_json(text, flag)
    if not isinstance(obj, list):
        raise InputError(f"{flag} must be a JSON list of diagrams")
    return [_diagram(G, json.dumps(item), flag) for item in obj]


def _vals(G: GapDiagram, cells) -> list[int]:
    return sorted(G.value(c) for c in cells)


def _arrow_json(G: GapDiagram, w: Arrow) -> dict:
    return {
        "source": G.value(w.source),
        "target": G.value(w.target),
        "color": w.color,
        "source_cell": list(w.source),
        "target_cell": list(w.target),
    }


# subcommand handlers: (args, G) -> (payload, table or None)


def cmd_gaps(args, G):
    table = [["row", "x", "value"]] + [
        [y, x, v] for y, row in enumerate(G.values, 1) for x, v in enumerate(row, 1)
    ]
    payload = G.to_json()
    payload["gaps"] = list(G.gap_values)
    payload["genus"] = G.genus
    if args.cell is None:
        return payload, table
    try:
        c = G.cell(args.cell)
    except KeyError:
        raise InputError(f"--cell {args.cell} is not a gap of <{G.a},{G.b}>") from None
    v = G.params.value
    proj = []
    for r in range(1, G.height + 1):
        j, k = proj_row(G.params, c, r), antiproj_row(G.params, c, r)
        proj.append({"row": r, "proj": v(j), "proj_in_G": j in G, "antiproj": v(k)})
    payload["cell"] = {"value": args.cell, "x": c.x, "y": c.y, "projections": proj}
    table = [["row", "proj", "proj_in_G", "antiproj"]] + [
        [e["row"], e["proj"], e["proj_in_G"], e["antiproj"]] for e in proj
    ]
    return payload, table


def cmd_catalan(args, G):
    return {"a": G.a, "b": G.b, "catalan": catalan_count(G)}, None


def cmd_paths(args, G):
    if catalan_count(G) > args.cap:
        raise CapExceeded(f"{catalan_count(G)} subdiagrams, above the cap of {args.cap}")
    rows = [(list(D.rows), len(D), dinv(D)) for D in enumerate_subdiagrams(G)]
    payload = {
        "a": G.a,
        "b": G.b,
        "count": len(rows),
        "paths": [{"rows": r, "size": s, "dinv": d} for r, s, d in rows],
    }
    table = [["rows", "size", "dinv"]] + [[" ".join(map(str, r)), s, d] for r, s, d in rows]
    return payload, table


def cmd_dinv(args, G):
    D = _diagram(G, args.diagram, "--diagram")
    return {"rows": list(D.rows), "size": len(D), "dinv": dinv(D)}, None


def cmd_classify(args, G):
    D = _diagram(G, args.diagram, "--diagram")
    c = classify_cells(D)
    return {
        "rows": list(D.rows),
        "dinv": len(c.contributing),
        "blue": _vals(G, c.blue),
        "red": _vals(G, c.red),
        "contributing": _vals(G, c.contributing),
    }, None


def cmd_cross_dinv(args, G):
    D = _diagram(G, args.d, "--d")
    E = _diagram(G, args.e, "--e")
    return {
        "double_dinv": double_cross_dinv(D, E),
        "dinv": fmt_rational(cross_dinv(D, E)),
        "dinv_D_E": cross_dinv_half(D, E),
        "dinv_E_D": cross_dinv_half(E, D),
        "common_cells": _vals(G, D.cells & E.cells),
    }, None


def cmd_qform(args, G):
    if (args.vector is None) == (args.diagram is None):
        raise InputError("qform needs exactly one of --vector or --diagram")
    if args.vector is not None:
        n = _vector(G, args.vector, "--vector")
    else:
        n = _vector(G, args.diagram, "--diagram")
    return {"Q": fmt_rational(Q(n))}, None


def cmd_braw(args, G):
    n, m = _vector(G, args.n, "--n"), _vector(G, args.m, "--m")
    return {"B_raw": fmt_rational(B_raw(n, m))}, None


def cmd_bform(args, G):
    n, m = _vector(G, args.n, "--n"), _vector(G, args.m, "--m")
    return {"B": fmt_rational(B(n, m))}, None


def cmd_deficit(args, G):
    D = _diagram(G, args.diagram, "--diagram")
    if args.e is None:
        return {"size": len(D), "deficit_Q": deficit_Q(D)}, None
    E = _diagram(G, args.e, "--e")
    return {"size": len(D), "deficit_B_raw": deficit_B_raw(D, E)}, None


def cmd_arrows(args, G):
    D = _diagram(G, args.diagram, "--diagram")
    E = D if args.e is None else _diagram(G, args.e, "--e")
    arrows = boundary_arrow_set(D, E)
    payload = {
        "boundary_in_G": [G.value(u) for u in upper_boundary(E) if u in G],
        "arrows": [_arrow_json(G, w) for w in arrows],
        "blue": sum(w.color == "blue" for w in arrows),
        "red": sum(w.color == "red" for w in arrows),
    }
    table = [["source", "target", "color"]] + [
        [G.value(w.source), G.value(w.target), w.color] for w in arrows
    ]
    return payload, table


def cmd_phi(args, G):
    D = _diagram(G, args.diagram, "--diagram")
    E = D if args.e is None else _diagram(G, args.e, "--e")
    arrows = boundary_arrow_set(D, E)
    if args.arrow is not None:
        try:
            src, tgt = (int(t) for t in args.arrow.split(","))
        except ValueError:
            raise InputError("--arrow must be 'source,target' gap values") from None
        arrows = [w for w in arrows if (G.value(w.source), G.value(w.target)) == (src, tgt)]
        if not arrows:
            raise InputError(f"({src},{tgt}) is not an arrow from D into the boundary")
    images = [(w, phi_mixed(D, E, w)) for w in arrows]
    report = verify_bijection(D, E)
    payload = {
        "map": [dict(_arrow_json(G, w), image=G.value(c)) for w, c in images],
        "blue_cells": _vals(G, report.blue.predicted),
        "red_cells": _vals(G, report.red.predicted),
        "inverse_ok": report.inverse_ok,
    }
    table = [["source", "target", "color", "image"]] + [
        [G.value(w.source), G.value(w.target), w.color, G.value(c)] for w, c in images
    ]
    return payload, table


def cmd_verify(args, G):
    start = time.perf_counter()
    report = run_verify(
        G.a,
        G.b,
        pairwise=args.pairwise,
        max_pairs=args.max_pairs,
        samples=args.samples,
        seed=args.seed,
    )
    # timing goes to stderr so stdout stays byte-identical between runs
    log.info("verify a=%d b=%d wall_time=%.3fs", G.a, G.b, time.perf_counter() - start)
    if not report["ok"]:
        raise VerificationFailed(report)
    table = [["check", "cases", "failures"]] + [
        [name, c["cases"], c["failures"]] for name, c in report["checks"].items()
    ]
    return report, table


def cmd_decompose(args, G):
    n = _vector(G, args.vector, "--vector")
    dec = decompose(n)
    return {
        "weights": [fmt_rational(w) for w in dec.weights],
        "layers": [list(D.rows) for D in dec.layers],
        "layer_values": [list(D.values) for D in dec.layers],
    }, None


def cmd_bound_check(args, G):
    n = _vector(G, args.vector, "--vector")
    res = effective_bound_check(n)
    payload = {"Q": fmt_rational(res.Q), "bound": fmt_rational(res.bound), "ok": res.ok}
    if not res.ok:
        raise VerificationFailed(payload)
    return payload, None


def cmd_nested_dinv(args, G):
    family = _family(G, args.family, "--family")
    try:
        value = nested_dinv(family)
    except ValueError as e:
        raise InputError(str(e)) from None
    n = nested_to_vector(family, G)
    return {"nested_dinv": fmt_rational(value), "Q": fmt_rational(Q(n)), "vector": n.to_json()}, None


def cmd_dinv_dist(args, G):
    poly = dinv_distribution(G, cap=args.cap)
    payload = {"coeffs": {str(e): c for e, c in poly.coeffs.items()}, "total": poly.total()}
    table = [["exponent", "coefficient"]] + [[e, c] for e, c in poly.coeffs.items()]
    return payload, table


def cmd_zseries(args, G):
    s = z_partial_sum(G, args.order, radius=args.radius, cap=args.cap)
    payload = s.to_json()
    payload["truncation_radius"] = truncation_radius(G, args.order)
    table = [["exponent", "coefficient"]] + [[e, c] for e, c in enumerate(s.coefficients)]
    return payload, table


def _add_ab(p):
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qdinv", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _add_ab(p)
        p.set_defaults(func=func)
        return p

    add("gaps", cmd_gaps, "gap set of <a,b> as a Young diagram").add_argument(
        "--cell", type=int, help="also project this gap onto every row"
    )
    add("catalan", cmd_catalan, "number of subdiagrams, binom(a+b,a)/(a+b)")
    add("paths", cmd_paths, "list every subdiagram with its dinv").add_argument(
        "--cap", type=int, default=10**6
    )
    add("dinv", cmd_dinv, "dinv of a subdiagram").add_argument("--diagram", required=True)
    add("classify", cmd_classify, "blue, red and contributing cells").add_argument(
        "--diagram", required=True
    )
    p = add("cross-dinv", cmd_cross_dinv, "cross-dinv of two subdiagrams")
    p.add_argument("--d", required=True)
    p.add_argument("--e", required=True)
    p = add("qform", cmd_qform, "Q of a vector or of a diagram's indicator")
    p.add_argument("--vector")
    p.add_argument("--diagram")
    for name, func, help_ in (
        ("braw", cmd_braw, "raw bilinear form B'(n,m)"),
        ("bform", cmd_bform, "symmetric form B(n,m)"),
    ):
        p = add(name, func, help_)
        p.add_argument("--n", required=True)
        p.add_argument("--m", required=True)
    p = add("deficit", cmd_deficit, "Q(1_D) or B'(1_D,1_E) through boundary arrows")
    p.add_argument("--diagram", required=True)
    p.add_argument("--e")
    p = add("arrows", cmd_arrows, "arrows from D into the upper boundary of E (default E=D)")
    p.add_argument("--diagram", required=True)
    p.add_argument("--e")
    p = add("phi", cmd_phi, "images of boundary arrows under the blue/red maps")
    p.add_argument("--diagram", required=True)
    p.add_argument("--e")
    p.add_argument("--arrow", help="restrict to one arrow given as 'source,target' values")
    p = add("verify", cmd_verify, "exhaustive verification harness")
    p.add_argument("--pairwise", action="store_true")
    p.add_argument("--max-pairs", type=int)
    p.add_argument("--samples", type=int, default=0, help="random cone-vector pairs")
    p.add_argument("--seed", type=int, default=0)
    add("decompose", cmd_decompose, "canonical decomposition of a cone vector").add_argument(
        "--vector", required=True
    )
    add("bound-check", cmd_bound_check, "check Q(n) >= max|n|^2/|G|").add_argument(
        "--vector", required=True
    )
    add("nested-dinv", cmd_nested_dinv, "high-rank dinv of an ascending chain").add_argument(
        "--family", required=True
    )
    add("dinv-dist", cmd_dinv_dist, "distribution of dinv over subdiagrams").add_argument(
        "--cap", type=int, default=10**6
    )
    p = add("zseries", cmd_zseries, "partial sum of z^Q(n) over integer cone vectors")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--cap", type=int, default=10**7)
    p.add_argument("--radius", type=int)
    return parser


def _scalar(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def render(payload: dict, table: Optional[list], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    rows = table if table is not None else [["key", "value"]] + [
        [k, _scalar(v)] for k, v in payload.items()
    ]
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    cells = [[_scalar(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(cells[0]))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cells)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        G = gap_diagram(args.a, args.b)
        payload, table = args.func(args, G)
    except ParameterError as e:
        print(f"qdinv: parameter error: {e}", file=sys.stderr)
        return 1
    except InputError as e:
        print(f"qdinv: input error: {e}", file=sys.stderr)
        return 1
    except NotInCone as e:
        print(f"qdinv: vector is not in the cone: {e}", file=sys.stderr)
        return 1
    except CapExceeded as e:
        print(f"qdinv: refused: {e}", file=sys.stderr)
        return 1
    except VerificationFailed as e:
        sys.stdout.write(render(e.payload, None, "json"))
        print("qdinv: verification FAILED", file=sys.stderr)
        return 2
    sys.stdout.write(render(payload, table, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
