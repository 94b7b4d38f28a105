"""Command-line front end.

Results go to stdout, timing lines to stderr. Exit status: 0 on success,
2 on refusals (bad input, hyperelliptic, degenerate, inconclusive without
``--assume-nondegenerate``, failed verification), 1 on internal invariant
violations.
"""

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import io
from .algebra import QQ, parse_field
from .canonical import canonical_ideal, curve_context
from .errors import CanforgeError, InvariantViolation, LowGenusError, ParseError, RefusalError
from .lattice import classify, ehrhart_count, format_polygon, interior_hull, parse_polygons
from .laurent import Status, check_nondegenerate, newton_polygon, parse_laurent
from .toric import toric_ideal
from .verify import (
    SamplingWarning,
    report,
    sample_curve_points,
    span_and_minimality,
    canonical_ideal_dimension,
    vanishing_check,
)

DEFAULT_PRIME = 10007


def _read_input(value):
    if value is None or value == "-":
        return sys.stdin.read()
    path = Path(value)
    if len(value) < 4096 and "\n" not in value and path.is_file():
        return path.read_text()
    return value


def _read_poly(args):
    text = _read_input(args.input).strip()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 1:
        raise ParseError("expected exactly one polynomial", 1, 1)
    return parse_laurent(lines[0], args.field)


def _read_polygon(args):
    text = args.poly if args.poly is not None else _read_input(args.input)
    polys = parse_polygons(text)
    if len(polys) != 1:
        raise ParseError(f"expected exactly one polygon, got {len(polys)}", 1, 1)
    return polys[0]


def _timed(label, fn, *a, **kw):
    t0 = time.perf_counter()
    out = fn(*a, **kw)
    print(f"Time: {time.perf_counter() - t0:.3f}  ({label})", file=sys.stderr)
    return out


def _emit(args, obj):
    sys.stdout.write(obj if obj.endswith("\n") else obj + "\n")


def _points_json(points):
    return [list(p) for p in points]


# --------------------------------------------------------------------------
# commands


def cmd_polygon_info(args):
    P = _read_polygon(args)
    if P.dim != 2:
        raise RefusalError(f"polygon has dimension {P.dim}", condition="dim < 2")
    cls = classify(P)
    inner = interior_hull(P)
    info = {
        "vertices": _points_json(P.vertices),
        "lattice_points": len(P.lattice_points),
        "boundary_points": P.boundary_count,
        "interior_points": len(P.interior_points),
        "doubled_area": P.doubled_area,
        "interior_hull": _points_json(inner.vertices),
        "interior_hull_dim": inner.dim,
        "class": cls.tag.value,
        "r": cls.r,
        "ehrhart": [ehrhart_count(P, k) for k in range(1, 6)],
    }
    if args.output == "json":
        _emit(args, io.dumps(info))
    else:
        lines = [format_polygon(P)]
        for k, v in info.items():
            if k != "vertices":
                lines.append(f"{k}: {v}")
        _emit(args, "\n".join(lines))
    return 0


def cmd_toric_ideal(args):
    P = _read_polygon(args)
    if P.dim != 2:
        raise RefusalError(f"polygon has dimension {P.dim}", condition="dim < 2")
    T = _timed("toric-ideal", toric_ideal, P, args.field)
    if args.output == "json":
        obj = {
            "polygon": _points_json(P.vertices),
            "field": str(args.field),
            "class": T.cls.tag.value,
            "quadric_count": len(T.quadrics),
            "cubic_count": len(T.cubics),
            "points": _points_json(T.points),
            "generators": [io.form_to_json(F) for F in T.generators],
        }
        _emit(args, io.dumps(obj))
    elif args.output == "cas":
        _emit(args, io.cas_script(T.generators, T.points, args.field, args.cas))
    else:
        lines = [
            format_polygon(P),
            f"class: {T.cls.tag.value}",
            f"quadrics: {len(T.quadrics)}",
            f"cubics: {len(T.cubics)}",
        ]
        lines += [io.form_to_text(F) for F in T.generators]
        _emit(args, "\n".join(lines))
    return 0


def cmd_genus(args):
    f = _read_poly(args)
    delta = newton_polygon(f)
    if delta.dim != 2:
        raise RefusalError("Newton polygon is not two-dimensional", condition="dim(Δ) < 2")
    inner = interior_hull(delta)
    g = len(inner.lattice_points)
    if g == 0:
        raise LowGenusError("genus 0: the Newton polygon has no interior lattice points", genus=0)
    kind = "non-hyperelliptic" if inner.dim == 2 else ("hyperelliptic" if g >= 2 else "elliptic")
    if args.output == "json":
        _emit(args, io.dumps({"genus": g, "type": kind, "interior_hull": _points_json(inner.vertices)}))
    else:
        _emit(args, f"genus: {g}\ntype: {kind}")
    return 0


def cmd_check(args):
    f = _read_poly(args)
    v = _timed("check-nondegenerate", check_nondegenerate, f)
    if args.output == "json":
        _emit(args, io.dumps(v.to_dict()))
    else:
        lines = [f"status: {v.status.value}"]
        if v.face is not None:
            lines.append(f"face: {v.face}")
        if v.explanation:
            lines.append(f"explanation: {v.explanation}")
        if v.witness is not None:
            lines.append("witness: " + ", ".join(str(w) for w in v.witness))
        _emit(args, "\n".join(lines))
    return 0


def _canonical_json(C):
    return {
        **C.counts,
        "chi_identity_checked": True,
        "field": str(C.context.f.field),
        "polynomial": str(C.context.f),
        "points": _points_json(C.points),
        "generators": [io.form_to_json(F) for F in C.generators],
        "extra": [{"w": [w.a, w.b, w.den], "index": len(C.toric_forms) + k} for k, (w, _) in enumerate(C.extra)],
    }


def cmd_canonical(args):
    f = _read_poly(args)
    C = _timed("canonical-ideal", canonical_ideal, f, assume_nondegenerate=args.assume_nondegenerate)
    if args.output == "json":
        _emit(args, io.dumps(_canonical_json(C)))
    elif args.output == "cas":
        _emit(args, io.cas_script(C.generators, C.points, f.field, args.cas))
    else:
        c = C.counts
        lines = [
            f"genus: {c['genus']}",
            f"case: {c['case']}",
            f"quadrics: {c['quadric_count']}",
            f"cubics: {c['cubic_count']}",
            f"quartics: {c['quartic_count']}",
            f"chi identity: verified for {len(C.extra)} forms",
        ]
        lines += [io.form_to_text(F) for F in C.generators]
        _emit(args, "\n".join(lines))
    return 0


def _sampling_prime(args, f):
    if args.prime:
        return args.prime
    return f.field.p if f.field is not QQ else DEFAULT_PRIME


def cmd_verify(args):
    f = _read_poly(args)
    try:
        data = json.loads(Path(args.generators).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read generator file: {exc}") from None
    ctx = curve_context(f)
    points = tuple(ctx.points)
    inputs = (str(f), Path(args.generators).read_text())
    reports = []
    claimed = [tuple(p) for p in data.get("points", [])]
    reports.append(report("ambient_points", inputs, _points_json(points), [list(p) for p in claimed]))
    forms = [io.form_from_json(obj, points, f.field) for obj in data.get("generators", [])]
    p = _sampling_prime(args, f)
    samples = sample_curve_points(f, p, args.count, args.seed)
    flags = vanishing_check(forms, samples, points)
    reports.append(report("vanishing", inputs, len(forms), sum(flags), args.seed, passed=all(flags) and samples))
    for d in (2, 3):
        low = [F for F in forms if F.degree <= d]
        expected = canonical_ideal_dimension(ctx.genus, d)
        rep = span_and_minimality(low, d, expected, points)
        reports.append(report(f"span_degree_{d}", inputs, expected, rep.computed, args.seed))
        reports.append(report(f"minimality_degree_{d}", inputs, len(low), sum(map(bool, rep.minimal)), args.seed))
    ok = all(r["pass"] for r in reports)
    if args.output == "json":
        _emit(args, io.dumps(reports))
    else:
        lines = []
        for r in reports:
            status = "PASS" if r["pass"] else "FAIL"
            if r["check"] == "ambient_points":
                lines.append(f"{status} {r['check']}")
            else:
                lines.append(f"{status} {r['check']}: expected {r['expected']}, computed {r['computed']}")
        _emit(args, "\n".join(lines))
    if not ok:
        print("refused: verification_failed", file=sys.stderr)
        return 2
    return 0


def cmd_sample(args):
    f = _read_poly(args)
    p = _sampling_prime(args, f)
    pts = sample_curve_points(f, p, args.count, args.seed)
    if args.output == "json":
        _emit(args, io.dumps({"prime": p, "seed": args.seed, "points": [[s.x0, s.y0] for s in pts]}))
    else:
        _emit(args, "\n".join([f"prime: {p}", f"points: {len(pts)}"] + [f"({s.x0},{s.y0})" for s in pts]))
    return 0


# --------------------------------------------------------------------------


def _field_arg(text):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=QQ, help="q (default) or fp:P for F_P")
    common.add_argument("--output", choices=("text", "json", "cas"), default="text")
    common.add_argument("--cas", choices=("magma", "m2"), default="magma", help="dialect for --output cas")
    seed_default = int(os.environ.get("CANFORGE_SEED", "0"))
    common.add_argument("--seed", type=int, default=seed_default)
    common.add_argument("--assume-nondegenerate", action="store_true")

    parser = argparse.ArgumentParser(prog="canforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, poly_input=False):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        if poly_input:
            sp.add_argument("--poly", help="polygon as '(x1,y1) (x2,y2) ...'")
        sp.add_argument("input", nargs="?", help="inline text, a file path, or '-' for stdin")
        return sp

    add("polygon-info", cmd_polygon_info, "lattice polygon invariants", poly_input=True)
    add("toric-ideal", cmd_toric_ideal, "minimal generators of I(Tor(P))", poly_input=True)
    add("genus", cmd_genus, "genus of the curve defined by f")
    add("check-nondegenerate", cmd_check, "non-degeneracy certificate for f")
    add("canonical-ideal", cmd_canonical, "minimal generators of the canonical ideal of C_f")
    v = add("verify", cmd_verify, "re-check a JSON generator file against f")
    v.add_argument("--generators", required=True, help="JSON file written by canonical-ideal --output json")
    v.add_argument("--prime", type=int, default=None)
    v.add_argument("--count", type=int, default=100)
    s = add("sample-points", cmd_sample, "torus points of f = 0 over F_p")
    s.add_argument("--prime", type=int, default=None)
    s.add_argument("--count", type=int, default=20)
    return parser


def _refuse(args, reason, message, details=None):
    if getattr(args, "output", "text") == "json":
        sys.stdout.write(json.dumps({"status": "refused", "reason": reason, "message": message, **(details or {})}) + "\n")
    else:
        sys.stdout.write(f"refused: {reason}: {message}\n")
    return 2


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        return _refuse(args, "parse_error", str(exc), {"line": exc.line, "column": exc.column})
    except RefusalError as exc:
        details = {k: v for k, v in exc.details.items() if isinstance(v, (int, str, dict, list))}
        return _refuse(args, exc.reason, str(exc), details)
    except (CanforgeError, ValueError) as exc:
        return _refuse(args, "invalid_input", str(exc))


def main(argv=None):
    import warnings

    warnings.simplefilter("default", SamplingWarning)
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
