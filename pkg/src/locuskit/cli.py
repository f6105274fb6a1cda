"""Command-line interface.

Every subcommand prints one result envelope to stdout::

    {"status": ..., "command": ..., "params": ..., "result": ..., "diagnostics": ...}

Error envelopes carry ``"result": null`` and an ``"error": {"code", "message"}``
object. Floats are written with 17 significant digits and keys in a fixed
order, so identical invocations give byte-identical output.

Exit codes: 0 ok, 2 parse error, 3 domain error, 4 numeric overflow,
5 no root.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import config
from .errors import LocusKitError, ParseError
from .locus import (
    LocusKind,
    WeightedPointSet,
    classify_power_locus,
    classify_weighted_locus,
    solve_radius,
    weighted_scale,
)
from .polygon import PlanarPoint, ProbePoint, RegularPolygon
from .power_sums import (
    PowerSumSpec,
    alpha_scan,
    closed_form_terms,
    power_sum_closed,
    power_sum_direct,
)
from .trig import (
    cosine_multiple_sum,
    cosine_multiple_sum_direct,
    cosine_power_sum_direct,
    cosine_power_sum_exact,
    power_reduction,
)

FORMATS = ("json", "csv", "plain")


# -- output -----------------------------------------------------------------

def format_float(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None
    s = format(x, ".17g")
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def to_json(obj):
    """Serialize ``obj`` with fixed key order and 17-digit floats."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, LocusKind):
        return json.dumps(obj.value)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        s = format_float(obj)
        return "null" if s is None else s
    if isinstance(obj, (str, Fraction)):
        return json.dumps(str(obj))
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _flatten(prefix, obj, out):
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(obj, (list, tuple)) and any(isinstance(v, (dict, list, tuple)) for v in obj):
        for i, v in enumerate(obj):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        if isinstance(obj, float):
            text = format_float(obj) or repr(obj)
        elif isinstance(obj, (list, tuple)):
            text = " ".join(to_json(v) for v in obj)
        elif obj is None:
            text = "null"
        elif isinstance(obj, LocusKind):
            text = obj.value
        else:
            text = str(obj).lower() if isinstance(obj, bool) else str(obj)
        out.append(f"{prefix}: {text}")


def render(envelope, fmt, rows=None):
    if fmt == "json":
        return to_json(envelope) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["alpha", "sum"])
        for alpha, s in rows:
            writer.writerow([format_float(alpha), format_float(s)])
        return buf.getvalue()
    lines = []
    _flatten("", envelope, lines)
    return "\n".join(lines) + "\n"


# -- parsing ----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)

    def exit(self, status=0, message=None):
        if status:
            raise ParseError((message or "invalid arguments").strip())
        super().exit(status, message)


def _points(text):
    try:
        pts = []
        for chunk in text.split(";"):
            if not chunk.strip():
                continue
            x, y = chunk.split(",")
            pts.append((float(x), float(y)))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'x1,y1;x2,y2;...', got {text!r}") from None
    if not pts:
        raise argparse.ArgumentTypeError("no points given")
    return pts


def _weights(text):
    try:
        return [float(w) for w in text.split(",") if w.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'w1,w2,...', got {text!r}") from None


def _finite(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return value


def _positive(text):
    value = _finite(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


# flag name -> (argparse kwargs, params key)
_FLAGS = {
    "n": dict(type=int, help="vertex count"),
    "m": dict(type=int, help="half-power; the distance power is 2m"),
    "r": dict(type=_finite, help="circumradius"),
    "ell": dict(type=_finite, help="distance of the probe from the center"),
    "alpha": dict(type=_finite, help="angular position (radians unless --degrees)"),
    "sum": dict(type=_finite, help="constant value of the sum"),
    "samples": dict(type=int, help="alpha grid size"),
    "points": dict(type=_points, help="'x1,y1;x2,y2;...'"),
    "weights": dict(type=_weights, help="'w1,w2,...'"),
}

_COMMANDS = {
    "eval": ("closed-form power sum", ["n", "m", "r", "ell"], {"alpha": 0.0}),
    "oracle": ("direct vertex-by-vertex power sum", ["n", "m", "r", "ell", "alpha"], {}),
    "terms": ("integer coefficients of the closed form", ["m"], {}),
    "solve": ("circle radius for a given sum", ["n", "m", "r", "sum"], {}),
    "classify": ("circle / point / empty classification", ["n", "m", "r", "sum"], {}),
    "weighted": ("locus of a weighted sum of squared distances", ["points", "weights", "sum"], {}),
    "lemma1": ("multiple-argument cosine sum, analytic vs direct", ["n", "m", "alpha"], {}),
    "lemma2": ("cosine power sum, analytic vs direct", ["n", "m", "alpha"], {}),
    "reduce": ("power-reduction expansion of cos^m", ["m"], {}),
    "scan": ("alpha sweep of the direct power sum", ["n", "m", "r", "ell"], {"samples": 256}),
}


def build_parser():
    parser = _Parser(prog="locuskit", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True, parser_class=_Parser)
    for name, (help_text, required, optional) in _COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        for flag in required:
            p.add_argument(f"--{flag}", required=True, **_FLAGS[flag])
        for flag, default in optional.items():
            p.add_argument(f"--{flag}", default=default, **_FLAGS[flag])
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--degrees", action="store_true", help="angles in degrees")
        p.add_argument("--rel-tol", type=_positive, default=None, dest="rel_tol",
                       help=f"tolerance override (also via ${config.ENV_REL_TOL})")
    return parser


def _params(args):
    _, required, optional = _COMMANDS[args.command]
    params = {flag: getattr(args, flag) for flag in list(required) + list(optional)}
    if "points" in params:
        params["points"] = [list(p) for p in params["points"]]
    params["degrees"] = args.degrees
    params["rel_tol"] = args.rel_tol
    return params


# -- commands ---------------------------------------------------------------

def _angle(args):
    return math.radians(args.alpha) if args.degrees else args.alpha


def _cmd_eval(args, tol):
    spec = PowerSumSpec(args.n, args.m)
    value = power_sum_closed(spec, args.r, args.ell)
    alpha = _angle(args)
    direct = power_sum_direct(RegularPolygon(args.n, args.r), ProbePoint(args.ell, alpha), args.m)
    residual = abs(value - direct) / value
    return {"sum": value, "center_sum": args.n * args.r ** (2 * args.m)}, {
        "rel_tol": tol,
        "oracle_alpha": alpha,
        "oracle_sum": direct,
        "oracle_rel_residual": residual,
        "oracle_agrees": residual <= tol,
    }


def _cmd_oracle(args, tol):
    spec = PowerSumSpec(args.n, args.m)
    poly = RegularPolygon(args.n, args.r)
    value = power_sum_direct(poly, ProbePoint(args.ell, _angle(args)), args.m)
    diag = {"rel_tol": tol, "closed_form_applies": spec.circle_theorem_applies}
    if spec.circle_theorem_applies:
        closed = power_sum_closed(spec, args.r, args.ell)
        diag["closed_form_sum"] = closed
        diag["closed_form_rel_residual"] = abs(value - closed) / closed
        diag["closed_form_agrees"] = diag["closed_form_rel_residual"] <= tol
    return {"sum": value}, diag


def _cmd_terms(args, tol):
    terms = closed_form_terms(args.m)
    return {
        "m": args.m,
        "terms": [{"k": t.k, "coeff": t.coeff} for t in terms],
    }, {"exact": True}


def _cmd_solve(args, tol):
    spec = PowerSumSpec(args.n, args.m)
    ell, info = solve_radius(spec, args.r, args.sum, rel_tol=tol, full_output=True)
    back = power_sum_closed(spec, args.r, ell)
    return {"ell": ell}, {
        "rel_tol": tol,
        "iterations": info.iterations,
        "converged": info.converged,
        "round_trip_sum": back,
        "round_trip_rel_residual": abs(back - args.sum) / args.sum,
    }


def _locus_payload(res):
    out = {"kind": res.kind}
    if res.circle_radius is not None:
        out["radius"] = res.circle_radius
    if res.circle_center is not None:
        out["center"] = [res.circle_center.x, res.circle_center.y]
    if res.line_coeffs is not None:
        out["line_coeffs"] = list(res.line_coeffs)
    return out


def _cmd_classify(args, tol):
    spec = PowerSumSpec(args.n, args.m)
    res = classify_power_locus(spec, args.r, args.sum, rel_tol=tol)
    diag = {"rel_tol": tol, "center_sum": args.n * args.r ** (2 * args.m)}
    if res.kind is LocusKind.CIRCLE:
        poly = RegularPolygon(args.n, args.r)
        worst = max(
            abs(power_sum_direct(poly, ProbePoint(res.circle_radius, 2 * math.pi * j / 16), args.m) - args.sum)
            for j in range(16)
        )
        diag["membership_rel_residual"] = worst / args.sum
    return _locus_payload(res), diag


def _cmd_weighted(args, tol):
    wps = WeightedPointSet([PlanarPoint(x, y) for x, y in args.points], args.weights, args.sum)
    res = classify_weighted_locus(wps, rel_tol=tol)
    scale = weighted_scale(wps)
    diag = {"rel_tol": tol, "scale": scale, "weight_total": math.fsum(wps.weights)}
    if res.kind is LocusKind.CIRCLE:
        c, rho = res.circle_center, res.circle_radius
        samples = [(c.x + rho * math.cos(2 * math.pi * j / 16), c.y + rho * math.sin(2 * math.pi * j / 16))
                   for j in range(16)]
        diag["membership_abs_residual"] = max(abs(wps.weighted_sum(x, y) - wps.target) for x, y in samples)
    elif res.kind is LocusKind.LINE:
        a, b, c0 = res.line_coeffs
        foot = (-a * c0, -b * c0)
        samples = [(foot[0] - b * t, foot[1] + a * t) for t in (-1.0, 0.0, 1.0)]
        diag["membership_abs_residual"] = max(abs(wps.weighted_sum(x, y) - wps.target) for x, y in samples)
    return _locus_payload(res), diag


def _lemma_payload(analytic, direct, n, tol, exact=None):
    residual = abs(analytic - direct)
    result = {"analytic": analytic, "direct": direct}
    if exact is not None:
        result["analytic_exact"] = exact
    return result, {
        "abs_tol": tol * n,
        "residual": residual,
        "agrees": residual <= tol * n,
    }


def _cmd_lemma1(args, tol):
    alpha = _angle(args)
    return _lemma_payload(
        cosine_multiple_sum(args.n, args.m, alpha),
        cosine_multiple_sum_direct(args.n, args.m, alpha),
        args.n,
        tol,
    )


def _cmd_lemma2(args, tol):
    alpha = _angle(args)
    exact = cosine_power_sum_exact(args.n, args.m)
    return _lemma_payload(
        float(exact), cosine_power_sum_direct(args.n, args.m, alpha), args.n, tol, exact=exact
    )


def _cmd_reduce(args, tol):
    exp = power_reduction(args.m)
    thetas = [2 * math.pi * j / 200 for j in range(200)]
    worst = max(abs(exp(t) - math.cos(t) ** args.m) for t in thetas)
    return {
        "m": args.m,
        "denominator": 2**args.m,
        "constant_term": exp.constant_term,
        "constant_numerator": exp.constant_numerator,
        "harmonics": [
            {"frequency": j, "weight": w, "numerator": num}
            for (j, w), (_, num) in zip(exp.harmonics, exp.harmonic_numerators)
        ],
    }, {
        "abs_tol": tol,
        "reconstruction_max_error": worst,
        "reconstruction_agrees": worst <= tol,
    }


def _cmd_scan(args, tol):
    rep = alpha_scan(RegularPolygon(args.n, args.r), args.ell, args.m, args.samples)
    rows = [(math.degrees(a) if args.degrees else a, s) for a, s in rep.grid]
    return {
        "n": rep.n,
        "m": rep.m,
        "r": rep.r,
        "ell": rep.ell,
        "samples": rep.samples,
        "s_min": rep.s_min,
        "s_max": rep.s_max,
        "amplitude": rep.amplitude,
        "relative_amplitude": rep.relative_amplitude,
    }, {
        "rel_tol": tol,
        "closed_form_applies": rep.m <= rep.n - 1,
        "alpha_independent": rep.relative_amplitude <= tol,
        "rows": rows,
    }


_HANDLERS = {
    "eval": (_cmd_eval, config.EQUIVALENCE_REL_TOL),
    "oracle": (_cmd_oracle, config.EQUIVALENCE_REL_TOL),
    "terms": (_cmd_terms, None),
    "solve": (_cmd_solve, config.BISECTION_REL_TOL),
    "classify": (_cmd_classify, config.POINT_BAND_REL_TOL),
    "weighted": (_cmd_weighted, config.WEIGHTED_REL_TOL),
    "lemma1": (_cmd_lemma1, config.LEMMA_ABS_TOL_PER_TERM),
    "lemma2": (_cmd_lemma2, config.LEMMA_ABS_TOL_PER_TERM),
    "reduce": (_cmd_reduce, config.REDUCTION_ABS_TOL),
    "scan": (_cmd_scan, config.ALPHA_INDEPENDENCE_REL_TOL),
}


def run(argv):
    """Parse ``argv`` and execute it. Returns ``(exit_code, text)``."""
    envelope = {"status": "ok", "command": None, "params": {}, "result": None, "diagnostics": {}}
    fmt = "json"
    rows = None
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        envelope["command"] = args.command
        envelope["params"] = _params(args)
        if fmt == "csv" and args.command != "scan":
            fmt = "json"
            raise ParseError("csv output is only available for scan", code="FORMAT_UNSUPPORTED")
        handler, default_tol = _HANDLERS[args.command]
        tol = args.rel_tol
        if tol is None:
            tol = config.env_rel_tol()
        if tol is None:
            tol = default_tol
        result, diagnostics = handler(args, tol)
        if args.command == "scan":
            rows = diagnostics.pop("rows")
        envelope["result"] = result
        envelope["diagnostics"] = diagnostics
        code = 0
    except LocusKitError as exc:
        envelope["status"] = "error"
        envelope["result"] = None
        envelope["error"] = {"code": exc.code, "message": str(exc)}
        code = exc.exit_code
        if fmt == "csv":
            fmt = "json"
    return code, render(envelope, fmt, rows)


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(argv)
        return 0
    code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
