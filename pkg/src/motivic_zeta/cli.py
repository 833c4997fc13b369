"""Command-line interface.

One command per invocation; every command builds a JSON payload from its
flags, validates it against a schema, runs, and prints a JSON report with
sorted keys.  Exit codes: 0 success, 1 usage error, 2 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import jsonschema

from . import constructors as zc
from . import oracle
from .curves import DEFAULT_BUDGET, count_points, model_from_json, model_to_json
from .errors import MotivicError, ParseError
from .ring import RingElement, parse
from .series import RationalForm
from .severi_brauer import SBClassData, sb_filtration_class, sb_isotypic_class, sb_reduced_class

RING_TEXT = {"type": "string", "minLength": 1}
POS_INT = {"type": "integer", "minimum": 1}
NONNEG_INT = {"type": "integer", "minimum": 0}
PRECISION = {"type": ["integer", "null"], "minimum": 1, "maximum": zc.MAX_PRECISION}

MODEL_SCHEMA = {
    "oneOf": [
        {
            "type": "object",
            "required": ["kind", "p", "poly"],
            "properties": {
                "kind": {"const": "plane"},
                "p": {"type": "integer", "minimum": 2},
                "e": POS_INT,
                "genus": NONNEG_INT,
                "poly": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "type": "array",
                        "prefixItems": [
                            {"type": "integer"},
                            {"type": "array", "items": NONNEG_INT, "minItems": 3, "maxItems": 3},
                        ],
                        "minItems": 2,
                        "maxItems": 2,
                    },
                },
            },
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["kind", "p", "f"],
            "properties": {
                "kind": {"const": "hyperelliptic"},
                "p": {"type": "integer", "minimum": 3},
                "e": POS_INT,
                "genus": NONNEG_INT,
                "f": {"type": "array", "items": {"type": "integer"}, "minItems": 2},
            },
            "additionalProperties": False,
        },
    ]
}

ENUM_OPTIONS = {
    "jobs": POS_INT,
    "budget": POS_INT,
}


def _obj(required, **props):
    return {
        "type": "object",
        "required": list(required),
        "properties": props,
        "additionalProperties": False,
    }


SCHEMAS = {
    "zeta-pn": _obj(["n"], n=NONNEG_INT, precision=PRECISION),
    "zeta-pointed": _obj(
        ["g", "low_classes", "pic0"],
        g={"type": "integer", "minimum": 0, "maximum": zc.MAX_GENUS},
        low_classes={"type": "array", "items": RING_TEXT},
        pic0=RING_TEXT,
        precision=PRECISION,
    ),
    "zeta-pointless": _obj(
        ["g", "n", "sym_classes"],
        g={"type": "integer", "minimum": 0, "maximum": zc.MAX_GENUS},
        n={"type": "integer", "minimum": 1, "maximum": zc.MAX_CYCLE_DEGREE},
        sym_classes={"type": "array", "items": RING_TEXT, "minItems": 1},
        precision=PRECISION,
    ),
    "zeta-zerodim": _obj(
        ["degrees"], degrees={"type": "array", "items": POS_INT}, precision=PRECISION
    ),
    "sb-ladder": _obj(["reduced", "r", "d"], reduced=RING_TEXT, r=POS_INT, d=POS_INT),
    "sb-reduce": _obj(["full", "r", "d"], full=RING_TEXT, r=POS_INT, d=POS_INT),
    "sb-filter": _obj(["c1", "r1", "c3", "r3"], c1=RING_TEXT, r1=POS_INT, c3=RING_TEXT, r3=POS_INT),
    "count": _obj(["model", "m"], model=MODEL_SCHEMA, m=POS_INT, **ENUM_OPTIONS),
    "weil": {
        "oneOf": [
            _obj(["model"], model=MODEL_SCHEMA, **ENUM_OPTIONS),
            _obj(
                ["counts", "q", "g"],
                counts={"type": "array", "items": NONNEG_INT, "minItems": 1},
                q={"type": "integer", "minimum": 2},
                g=NONNEG_INT,
            ),
        ]
    },
    "verify": _obj(["model"], model=MODEL_SCHEMA, precision=PRECISION, **ENUM_OPTIONS),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_json(text: str):
    """Inline JSON if it looks like an object, otherwise a file path ('-' = stdin)."""
    try:
        if text.lstrip().startswith("{"):
            return json.loads(text)
        if text == "-":
            return json.load(sys.stdin)
        return json.loads(Path(text).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {text!r}: {exc}") from exc


def _ring(text: str) -> RingElement:
    return parse(text)


def _drop_none(d: dict) -> dict:
    return {k: v for k, v in d.items() if v is not None}


# payload builders ---------------------------------------------------------


def _payload(args) -> dict:
    cmd = args.command
    enum = {"jobs": args.jobs, "budget": args.budget}
    if cmd == "zeta-pn":
        return _drop_none({"n": args.n, "precision": args.precision})
    if cmd in ("zeta-pointed", "zeta-pointless"):
        data = _load_json(args.data)
        if not isinstance(data, dict):
            raise UsageError("curve data must be a JSON object")
        if args.precision is not None:
            data = {**data, "precision": args.precision}
        return data
    if cmd == "zeta-zerodim":
        return _drop_none({"degrees": args.degrees, "precision": args.precision})
    if cmd == "sb-ladder":
        return {"reduced": args.reduced, "r": args.r, "d": args.d}
    if cmd == "sb-reduce":
        return {"full": args.full, "r": args.r, "d": args.d}
    if cmd == "sb-filter":
        return {"c1": args.c1, "r1": args.r1, "c3": args.c3, "r3": args.r3}
    if cmd == "count":
        return _drop_none({"model": _load_json(args.model), "m": args.m, **enum})
    if cmd == "weil":
        if args.model is not None:
            if args.counts is not None:
                raise UsageError("give either --model or --counts, not both")
            return _drop_none({"model": _load_json(args.model), **enum})
        return _drop_none({"counts": args.counts, "q": args.q, "g": args.genus})
    if cmd == "verify":
        return _drop_none({"model": _load_json(args.model), "precision": args.precision, **enum})
    raise UsageError(f"unknown command {cmd!r}")


# command implementations ---------------------------------------------------


def _form_report(form: RationalForm, precision: int) -> dict:
    return {
        "form": form.to_json(),
        "precision": precision,
        "expansion": [str(c) for c in form.expand(precision)],
    }


def _run_zeta_pn(p):
    form = zc.zeta_projective_space(p["n"])
    return _form_report(form, p.get("precision") or 8)


def _run_zeta_pointed(p):
    data = zc.PointedCurveData(p["g"], [_ring(x) for x in p["low_classes"]], _ring(p["pic0"]))
    prec = p.get("precision") or 4 * data.g + 4
    form = zc.zeta_pointed_curve(data, prec)
    out = _form_report(form, prec)
    rep = zc.pointed_degree_report(form, data.g)
    out["degree_bound"] = rep.bound
    out["attains_degree_bound"] = rep.attains_bound
    return out


def _run_zeta_pointless(p):
    data = zc.PointlessCurveData(p["g"], p["n"], [_ring(x) for x in p["sym_classes"]])
    bound = 2 * data.g + 2 * data.n - 2
    prec = p.get("precision") or 2 * bound + 4
    form = zc.zeta_pointless_curve(data, prec)
    out = _form_report(form, prec)
    out["degree_bound"] = bound
    out["attains_degree_bound"] = form.degree == bound
    out["periodic_parts"] = {str(m): str(v) for m, v in zc.periodic_parts(data).items()}
    return out


def _run_zeta_zerodim(p):
    form = zc.zeta_zero_dim_counting(p["degrees"])
    prec = p.get("precision") or 8
    out = _form_report(form, prec)
    out["level"] = "counting"
    out["counts"] = [c.constant_term() for c in form.expand(prec)]
    del out["expansion"]
    return out


def _run_sb_ladder(p):
    value = sb_isotypic_class(SBClassData(_ring(p["reduced"]), p["r"], p["d"]))
    return {"class": str(value)}


def _run_sb_reduce(p):
    return {"reduced": str(sb_reduced_class(_ring(p["full"]), p["r"], p["d"]))}


def _run_sb_filter(p):
    value, symmetric = sb_filtration_class(_ring(p["c1"]), p["r1"], _ring(p["c3"]), p["r3"])
    return {"class": str(value), "symmetry": symmetric}


def _enum(p):
    return {"budget": p.get("budget", DEFAULT_BUDGET), "jobs": p.get("jobs", 1)}


def _run_count(p):
    model = model_from_json(p["model"])
    n = count_points(model, p["m"], **_enum(p))
    return {"q": model.q, "m": p["m"], "genus": model.genus, "points": n}


def _run_weil(p):
    if "model" in p:
        model = model_from_json(p["model"])
        counts, profile = oracle.curve_profile(model, **_enum(p))
    else:
        counts = p["counts"]
        profile = oracle.weil_zeta_from_counts(counts, p["q"], p["g"])
    return {"counts": list(counts), "profile": profile.to_json(), "pic0_order": oracle.pic0_order(profile)}


def _run_verify(p):
    model = model_from_json(p["model"])
    prec = p.get("precision") or 4 * model.genus + 4
    res = oracle.verify_curve(model, prec, **_enum(p))
    out = res.report.to_json()
    out.update(
        {
            "model": model_to_json(model),
            "counts": res.counts,
            "profile": res.profile.to_json(),
            "assignment": res.assignment,
            "form": res.form.to_json(),
        }
    )
    return out


COMMANDS = {
    "zeta-pn": _run_zeta_pn,
    "zeta-pointed": _run_zeta_pointed,
    "zeta-pointless": _run_zeta_pointless,
    "zeta-zerodim": _run_zeta_zerodim,
    "sb-ladder": _run_sb_ladder,
    "sb-reduce": _run_sb_reduce,
    "sb-filter": _run_sb_filter,
    "count": _run_count,
    "weil": _run_weil,
    "verify": _run_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="motivic-zeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--output", help="also write the report to this file")
        sp.add_argument("--timing", action="store_true", help="include wall-clock timing")
        sp.add_argument("--precision", type=int)
        sp.add_argument("--jobs", type=int, help="point enumeration processes")
        sp.add_argument("--budget", type=int, help="point enumeration cap")
        return sp

    add("zeta-pn", "zeta function of projective space").add_argument("--n", type=int, required=True)
    add("zeta-pointed", "curve with a rational point").add_argument("--data", required=True)
    add("zeta-pointless", "curve with a degree-n rational 0-cycle").add_argument("--data", required=True)
    add("zeta-zerodim", "counting-level zeta of closed points").add_argument(
        "--degrees", type=int, nargs="+", required=True
    )
    sp = add("sb-ladder", "P * (1 + L^r + ... + L^(d-r))")
    sp.add_argument("--reduced", required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp = add("sb-reduce", "recover P from a Severi-Brauer class")
    sp.add_argument("--full", required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp = add("sb-filter", "class of the middle term of an extension")
    sp.add_argument("--c1", required=True)
    sp.add_argument("--r1", type=int, required=True)
    sp.add_argument("--c3", required=True)
    sp.add_argument("--r3", type=int, required=True)
    sp = add("count", "brute-force point count over F_{q^m}")
    sp.add_argument("--model", required=True)
    sp.add_argument("--m", type=int, default=1)
    sp = add("weil", "L-polynomial from a model or from point counts")
    sp.add_argument("--model")
    sp.add_argument("--counts", type=int, nargs="+")
    sp.add_argument("--q", type=int)
    sp.add_argument("--genus", type=int)
    sp = add("verify", "check the symbolic zeta against brute-force counts")
    sp.add_argument("--model", required=True)
    return parser


def _emit(report: dict, output: str | None) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    sys.stdout.write(text)
    if output:
        Path(output).write_text(text)


def main(argv: list[str] | None = None) -> int:
    output = None
    command = None
    payload: dict | None = None
    try:
        args = build_parser().parse_args(argv)
        output, command = args.output, args.command
        payload = _payload(args)
        try:
            jsonschema.validate(payload, SCHEMAS[command])
        except jsonschema.ValidationError as exc:
            raise UsageError(f"invalid payload: {exc.message}") from exc
        start = time.perf_counter()
        result = COMMANDS[command](payload)
        elapsed = time.perf_counter() - start
    except UsageError as exc:
        _emit({"command": command, "inputs": payload, "error": {"name": "UsageError", "message": str(exc)}}, output)
        return 1
    except ParseError as exc:
        _emit({"command": command, "inputs": payload, "error": {"name": exc.name, "message": str(exc)}}, output)
        return 1
    except MotivicError as exc:
        _emit({"command": command, "inputs": payload, "error": {"name": exc.name, "message": str(exc)}}, output)
        return 2
    report = {"command": command, "inputs": payload, "result": result}
    if args.timing:
        report["timing_seconds"] = round(elapsed, 6)
    _emit(report, output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
