"""``mec-atlas`` command line."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterable

from .bounds import BoundsError
from .families import (
    FamilyError,
    binary_tree_counts,
    binary_tree_ratio_check,
    build,
    family_count,
    family_polynomial,
    family_spectrum,
    k2p_immorality_number,
    parse_family,
)
from .graph import GraphError, format_graph6, read_graph_file
from .graphgen import graph_from_id
from .oracle import DEFAULT_CAP, EnumerationCapError, enumerate_mecs, polynomial_of, spectrum_of, worker_count
from .polycomb import format_polynomial
from .survey import enumerate_graph, fmt_decimal, fmt_fraction, invariant_check, run_survey, survey_csv
from .verify import (
    Check,
    FamilyScope,
    bounds_checks,
    family_checks,
    identity_checks,
    lucas_triangle_checks,
)


def _emit(lines: Iterable[str]) -> None:
    sys.stdout.write("".join(line + "\n" for line in lines))


def _fail(msg: str, code: int = 2) -> int:
    print(f"mec-atlas: error: {msg}", file=sys.stderr)
    return code


def enumerate_lines(path: str, cap: int, as_json: bool, workers: int) -> list[str]:
    g = read_graph_file(path)
    report = enumerate_graph(g, cap, workers)
    if len(report.components) > 1:
        print(f"mec-atlas: warning: graph has {len(report.components)} components; "
              "classes are enumerated per component and counts multiply", file=sys.stderr)
    classes = []
    for comp, mec in report.classes:
        labels = report.component_graphs[comp][1]
        classes.append({
            "component": comp,
            "size": mec.size,
            "immoralities": mec.n_immoralities,
            "key": [f"{labels[i.tails[0]]}->{labels[i.head]}<-{labels[i.tails[1]]}" for i in mec.immoralities],
        })
    if as_json:
        doc = {
            "p": g.n,
            "edges": g.m,
            "components": len(report.components),
            "M": report.count,
            "polynomial": format_polynomial(report.polynomial),
            "m": report.polynomial.degree,
            "orientations": report.orientations,
            "spectrum": {str(s): c for s, c in sorted(report.spectrum.items())},
            "classes": classes,
        }
        return [json.dumps(doc, sort_keys=True)]
    lines = [
        f"p={g.n}",
        f"edges={g.m}",
        f"components={len(report.components)}",
        f"M={report.count}",
        f"M(G;x)={format_polynomial(report.polynomial)}",
        f"m={report.polynomial.degree}",
        f"orientations={report.orientations}",
        f"spectrum={report.spectrum}",
    ]
    for c in classes:
        key = ";".join(c["key"]) or "-"
        lines.append(f"class component={c['component']} size={c['size']} "
                     f"immoralities={c['immoralities']} key={key}")
    return lines


def cmd_enumerate(args) -> int:
    try:
        _emit(enumerate_lines(args.file, args.cap, args.json, worker_count()))
    except (OSError, GraphError) as e:
        return _fail(str(e))
    except EnumerationCapError as e:
        return _fail(str(e), 3)
    return 0


def family_lines(text: str, oracle: bool, cap: int) -> tuple[list[str], bool]:
    """Report lines and whether every requested comparison agreed."""
    spec = parse_family(text)
    g = build(spec)
    lines = [f"family={spec}", f"nodes={g.n}", f"edges={g.m}"]
    poly = family_polynomial(spec)
    count = family_count(spec)
    spec_sizes = family_spectrum(spec)
    if spec.kind in ("binary_tree", "additive_tree"):
        k = spec.params[0]
        c = binary_tree_counts(k)
        rc = binary_tree_ratio_check(k)
        lines += [f"T={c.T}", f"A={c.A}", f"X={c.X}", f"Y={c.Y}", f"Z={c.Z}",
                  f"ratio={fmt_fraction(rc.ratio)}", f"ratio_dec={fmt_decimal(rc.ratio)}",
                  f"ratio_within_bounds={str(rc.within_bounds).lower()}",
                  f"Z_below_T={str(rc.z_below_t).lower()}"]
        if rc.note:
            lines.append(f"note={rc.note}")
    if poly is not None:
        lines += [f"M(G;x)={format_polynomial(poly)}", f"m={poly.degree}"]
    elif spec.kind == "k2p":
        lines.append(f"m={k2p_immorality_number(spec.params[0])}")
    if count is not None:
        lines.append(f"M={count}")
    if spec_sizes is not None:
        lines.append(f"spectrum={spec_sizes}")
    if poly is None and count is None:
        lines.append("formula=none")
    ok = True
    if oracle:
        classes = enumerate_mecs(g, cap)
        o_poly, o_spec = polynomial_of(classes), spectrum_of(classes)
        lines += [f"oracle_M(G;x)={format_polynomial(o_poly)}", f"oracle_M={o_poly.eval_at_one()}",
                  f"oracle_m={o_poly.degree}", f"oracle_spectrum={o_spec}"]
        if poly is not None:
            ok &= poly == o_poly
        if count is not None:
            ok &= count == o_poly.eval_at_one()
        if spec_sizes is not None:
            ok &= spec_sizes == o_spec
        if spec.kind == "k2p":
            ok &= k2p_immorality_number(spec.params[0]) == o_poly.degree
        lines.append(f"agree={str(ok).lower()}")
    return lines, ok


def cmd_family(args) -> int:
    try:
        lines, ok = family_lines(args.spec, args.oracle, args.cap)
    except FamilyError as e:
        return _fail(str(e))
    except EnumerationCapError as e:
        return _fail(f"oracle refused: {e}", 3)
    _emit(lines)
    return 0 if ok else 1


def verify_checks(args) -> Iterable[Check]:
    picked = args.families or args.bounds or args.lucas_triangle
    if args.families or not picked:
        yield from family_checks(FamilyScope.up_to(args.p or 10))
        yield from identity_checks()
    if args.bounds or not picked:
        yield from bounds_checks(args.p or 9)
    if args.lucas_triangle or not picked:
        yield from lucas_triangle_checks(args.p or 24)


def cmd_verify(args) -> int:
    failed = total = 0
    try:
        for check in verify_checks(args):
            total += 1
            failed += not check.passed
            print(check.line(), flush=True)
    except (BoundsError, GraphError, FamilyError) as e:
        return _fail(str(e))
    print(f"checks={total} passed={total - failed} failed={failed}")
    return 1 if failed else 0


def cmd_survey(args) -> int:
    try:
        records = run_survey(args.p, args.triangle_free, worker_count())
    except GraphError as e:
        return _fail(str(e))
    text = survey_csv(records)
    if args.output in (None, "-"):
        sys.stdout.write(text)
        return 0
    try:
        Path(args.output).write_text(text)
    except OSError as e:
        return _fail(f"cannot write {args.output}: {e}")
    print(f"wrote {len(records)} rows to {args.output}", file=sys.stderr)
    return 0


def cmd_invariant_check(args) -> int:
    try:
        rep = invariant_check(args.p, args.triangle_free, worker_count())
    except GraphError as e:
        return _fail(str(e))
    lines = [f"p={rep.p}", f"triangle_free={str(rep.triangle_free).lower()}",
             f"graphs={rep.graphs}", f"collisions={len(rep.collisions)}"]
    for poly, ids in rep.collisions:
        g6 = ",".join(format_graph6(graph_from_id(i)) for i in ids)
        lines.append(f"collision M(G;x)={format_polynomial(poly)} graphs={g6}")
    _emit(lines)
    return 1 if rep.triangle_free and rep.collisions else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mec-atlas", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="brute-force the equivalence classes of one graph")
    p.add_argument("file", help="edge list or graph6 file")
    p.add_argument("--json", action="store_true", help="print one JSON object instead of key=value lines")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum edges per component (default %(default)s)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("family", help="evaluate family formulas, e.g. caterpillar:14 or k2p:3")
    p.add_argument("spec")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="edge cap for --oracle (default %(default)s)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run formula-vs-oracle and identity checks")
    p.add_argument("--families", action="store_true", help="family and identity checks")
    p.add_argument("--bounds", action="store_true", help="tree bound sweeps")
    p.add_argument("--lucas-triangle", action="store_true", help="Lucas triangle identity")
    p.add_argument("--p", type=int, help="size limit for the selected suites")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("survey", help="statistics for every connected graph on p vertices, as CSV")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--triangle-free", action="store_true")
    p.add_argument("-o", "--output", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("invariant-check", help="look for graphs sharing a class-count polynomial")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--triangle-free", action="store_true")
    p.set_defaults(func=cmd_invariant_check)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        return _fail(str(e))


if __name__ == "__main__":
    sys.exit(main())
