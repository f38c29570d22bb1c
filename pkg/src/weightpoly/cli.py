"""Command line front end.

Thin adapter over the library: parse arguments, build the objects, print the
result as text or JSON.  No arithmetic happens here.

Exit codes: 0 on success (and on all-pass for the verifying subcommands),
1 when a verification subcommand finds a failing check, 2 on usage or input
errors (bad flags, malformed files, infeasible requests).
"""

from __future__ import annotations

import argparse
import json
import sys

from .builders import SideData, dual_side_data, gt_slice, polygon_hrep
from .counting import (MultiplicityQuery, count_dilates, ehrhart_fit,
                       real_fiber_size, verify_duality, verify_ehrhart_identity,
                       weight_multiplicity)
from .exact import frac, frac_str
from .polytopes import (HPolytope, UnboundedPolytopeError,
                        combinatorial_fingerprint, h_to_v, remove_redundant)
from .reference import reference_battery
from .toric import facet_labels, fan_to_json_dict, normal_fan, singularity_report


class _InputError(Exception):
    """Bad user input that argparse cannot catch on its own."""


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="output format (default: text)")


def _add_side_source(p: argparse.ArgumentParser, with_polytope_file: bool = False) -> None:
    p.add_argument("--m", type=int, help="projective space dimension")
    p.add_argument("--r", help="comma separated side lengths, e.g. 3,3,3,3,3 or 5/2,5/2,3,3,3")
    p.add_argument("--side-file", help="JSON file with {\"m\": ..., \"r\": [...]}")
    if with_polytope_file:
        p.add_argument("--polytope-file",
                       help="JSON file with an inequality description; overrides --m/--r")


def _add_chart(p: argparse.ArgumentParser, default: str) -> None:
    p.add_argument("--chart", choices=("diag", "entry"), default=default,
                   help=f"coordinate chart to work in (default: {default})")


def _parse_side(args: argparse.Namespace) -> SideData:
    if args.side_file is not None:
        try:
            with open(args.side_file, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise _InputError(f"cannot read side file: {exc}") from exc
        return SideData.from_json_dict(data)
    if args.m is None or args.r is None:
        raise _InputError("need --m and --r (or --side-file)")
    try:
        r = tuple(frac(part.strip()) for part in args.r.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise _InputError(f"cannot parse --r: {exc}") from exc
    return SideData.from_weights(args.m, r)


def _parse_polytope(args: argparse.Namespace) -> HPolytope | None:
    path = getattr(args, "polytope_file", None)
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _InputError(f"cannot read polytope file: {exc}") from exc
    return HPolytope.from_json_dict(data)


def _chart_polytope(args: argparse.Namespace) -> HPolytope:
    """The polytope a geometry subcommand should operate on."""
    P = _parse_polytope(args)
    if P is not None:
        return P
    s = _parse_side(args)
    if args.chart == "diag" and s.m == 1:
        return polygon_hrep(s)
    cs = gt_slice(s)
    return cs.diag_chart if args.chart == "diag" else cs.entry_chart


def _emit(args: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _vec_str(v: tuple) -> str:
    return ",".join(frac_str(c) for c in v)


def _point_str(v: tuple) -> str:
    return "(" + ", ".join(frac_str(c) for c in v) + ")"


def _cmd_polytope(args: argparse.Namespace) -> int:
    P = remove_redundant(_chart_polytope(args))
    lines = [f"dim: {P.dim}"]
    lines += [f"eq: {_vec_str(a)} = {frac_str(b)}" for a, b in P.eqs]
    lines += [f"ineq: {_vec_str(a)} <= {frac_str(b)}" for a, b in P.ineqs]
    _emit(args, P.to_json_dict(), lines)
    return 0


def _cmd_vertices(args: argparse.Namespace) -> int:
    V = h_to_v(_chart_polytope(args))
    _emit(args, V.to_json_dict(), [_point_str(v) for v in V.vertices])
    return 0


def _cmd_fan(args: argparse.Namespace) -> int:
    F = normal_fan(remove_redundant(_chart_polytope(args)))
    lines = [f"ambient: {F.ambient_dim}"]
    for vertex, cone in F.maximal_cones:
        rays = " ".join(_point_str(r) for r in cone.rays)
        lines.append(f"vertex {_point_str(vertex)}: rays {rays}")
    _emit(args, fan_to_json_dict(F), lines)
    return 0


def _cmd_singular(args: argparse.Namespace) -> int:
    report = singularity_report(normal_fan(remove_redundant(_chart_polytope(args))))
    lines = [f"vertex {_point_str(e.vertex)}: {e.label}" for e in report.entries]
    lines.append("smooth: " + ("yes" if report.is_smooth else "no"))
    _emit(args, report.to_json_dict(), lines)
    return 0


def _cmd_facets(args: argparse.Namespace) -> int:
    s = _parse_side(args)
    P = remove_redundant(polygon_hrep(s))
    labels = facet_labels(s, P)
    payload = {"facets": [
        {"tags": list(l.tags), "normal": [frac_str(c) for c in l.normal],
         "rhs": frac_str(l.rhs)} for l in labels]}
    lines = [f"{','.join(l.tags)}: {_vec_str(l.normal)} <= {frac_str(l.rhs)}"
             for l in labels]
    _emit(args, payload, lines)
    return 0


def _cmd_ehrhart(args: argparse.Namespace) -> int:
    P = _chart_polytope(args)
    counts = count_dilates(P, args.t_max)
    fit = ehrhart_fit(counts)
    payload = {"counts": list(counts.counts), **fit.to_json_dict()}
    lines = ["counts: " + ",".join(str(c) for c in counts.counts),
             f"mode: {fit.mode}", f"period: {fit.period}", f"degree: {fit.degree}"]
    for cls, coeffs in enumerate(fit.coeffs_by_class):
        lines.append(f"class {cls}: " + ",".join(frac_str(c) for c in coeffs))
    _emit(args, payload, lines)
    return 0


def _cmd_mult(args: argparse.Namespace) -> int:
    q = MultiplicityQuery.from_side(_parse_side(args), args.dilate)
    value = weight_multiplicity(q)
    _emit(args, {"multiplicity": value}, [str(value)])
    return 0


def _cmd_verify_identity(args: argparse.Namespace) -> int:
    report = verify_ehrhart_identity(_parse_side(args), args.t_max)
    lines = [f"t={c.dilate}: count={c.lattice_count} mult={c.multiplicity} "
             + ("PASS" if c.passed else "FAIL") for c in report.checks]
    lines.append("all pass" if report.all_pass else "FAILED")
    _emit(args, report.to_json_dict(), lines)
    return 0 if report.all_pass else 1


def _cmd_dual(args: argparse.Namespace) -> int:
    s = _parse_side(args)
    report = verify_duality(s, args.t_max)
    dual = dual_side_data(s)
    lines = [f"dual m: {dual.m}", f"dual r: {_vec_str(dual.r)}"]
    for inv in report.invariants:
        status = "PASS" if inv.primal == inv.dual else "FAIL"
        lines.append(f"{inv.name}: {inv.primal} vs {inv.dual} {status}")
    lines.append("all pass" if report.all_pass else "FAILED")
    _emit(args, report.to_json_dict(), lines)
    return 0 if report.all_pass else 1


def _cmd_fibers(args: argparse.Namespace) -> int:
    value = real_fiber_size(args.m, args.n)
    _emit(args, {"fiber_size": value}, [str(value)])
    return 0


def _cmd_fingerprint(args: argparse.Namespace) -> int:
    fp = combinatorial_fingerprint(_chart_polytope(args))
    _emit(args, {"fingerprint": fp}, [fp])
    return 0


def _cmd_paper_examples(args: argparse.Namespace) -> int:
    report = reference_battery()
    lines = []
    for c in report.claims:
        if c.passed:
            lines.append(f"{c.claim_id}: PASS")
        else:
            lines.append(f"{c.claim_id}: FAIL (expected {c.expected}, computed {c.computed})")
    lines.append("all pass" if report.all_pass else "FAILED")
    _emit(args, report.to_json_dict(), lines)
    return 0 if report.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="weightpoly",
        description="Exact geometry of spatial polygon moduli: polytopes, "
                    "toric data, and lattice point counts.")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, func, *, side=True, polytope_file=False,
            chart=None, t_max=None, dilate=False):
        p = sub.add_parser(name, help=help_text)
        _add_format(p)
        if side:
            _add_side_source(p, with_polytope_file=polytope_file)
        if chart is not None:
            _add_chart(p, chart)
        if t_max is not None:
            p.add_argument("--t-max", type=int, default=t_max,
                           help=f"largest dilation factor (default: {t_max})")
        if dilate:
            p.add_argument("--dilate", type=int, default=1,
                           help="dilation factor (default: 1)")
        p.set_defaults(func=func)
        return p

    add("polytope", "print the inequality description of a chart",
        _cmd_polytope, polytope_file=True, chart="diag")
    add("vertices", "print the vertex list of a chart",
        _cmd_vertices, polytope_file=True, chart="diag")
    add("fan", "print the normal fan (one cone per vertex)",
        _cmd_fan, polytope_file=True, chart="diag")
    add("singular", "classify each vertex of the associated toric variety",
        _cmd_singular, polytope_file=True, chart="diag")
    add("facets", "label each polygon facet by its catalogue tag",
        _cmd_facets)
    add("ehrhart", "count lattice points in dilates and fit the counting function",
        _cmd_ehrhart, polytope_file=True, chart="entry", t_max=6)
    add("mult", "weight multiplicity via the determinant formula",
        _cmd_mult, dilate=True)
    add("verify-identity", "check lattice counts against multiplicities",
        _cmd_verify_identity, t_max=3)
    add("dual", "build the complementary side data and compare invariants",
        _cmd_dual, t_max=3)
    fib = sub.add_parser("fibers", help="generic real torus fiber size")
    _add_format(fib)
    fib.add_argument("--m", type=int, required=True)
    fib.add_argument("--n", type=int, required=True)
    fib.set_defaults(func=_cmd_fibers)
    add("fingerprint", "canonical combinatorial fingerprint of a chart",
        _cmd_fingerprint, polytope_file=True, chart="diag")
    add("paper-examples", "run the built-in battery of frozen worked examples",
        _cmd_paper_examples, side=False)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_InputError, ValueError, UnboundedPolytopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
