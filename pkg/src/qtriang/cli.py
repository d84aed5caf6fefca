"""Command-line front end.

Commands map onto the library one-to-one: ``classify`` enumerates and
verifies structures on a group, ``verify`` re-checks a supplied element,
``markov`` extracts and validates the Markov element, ``adams`` and
``lambda`` apply the twisted operations to the bundled test characters,
``exterior`` compares braided exterior powers against the Newton
recursion (optionally with the cyclic-operation traces at a prime),
``koszul-twist`` builds the graded twist, and ``selftest`` runs the full
acceptance suite.

Exit status: 0 when every requested check passes, 1 on check failures,
2 on unreadable input, 3 on invariant violations.  Reports are canonical
JSON: identical inputs produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance, jsonio
from .charring import (
    adams_twisted,
    cyclic_operation_char,
    exterior_power_char,
    lambda_from_adams,
    linear_character_reps,
    regular_rep,
)
from .classify import COMPLETENESS_NOTE, default_threads, enumerate_qt
from .cyclotomic import root_of_unity
from .groups import CATALOG_NAMES
from .rmatrix import (
    DatumError,
    build_r,
    koszul_twist,
    markov_element,
    markov_element_flipped,
    verify_markov,
    verify_markov_equation,
    verify_qt,
    verify_unitary,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_INVARIANT = 3


class InputError(Exception):
    """Unreadable or unparseable input."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtriang",
        description="Exact R-matrix classification and twisted character operations "
        "on small finite group algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--group", help="bundled group name or path to a group JSON file")
        p.add_argument("--datum", help="path to a classification-datum JSON file")
        p.add_argument("--rmatrix", help="path to a tensor JSON file")
        p.add_argument("--out", help="write the JSON report here instead of stdout")

    p = sub.add_parser("classify", help="enumerate and verify all structures on a group")
    add_common(p)
    p.add_argument("--triangular", action="store_true", help="unitary structures only")

    p = sub.add_parser("verify", help="run the full identity verifier on a tensor")
    add_common(p)

    p = sub.add_parser("markov", help="Markov element with its structural checks")
    add_common(p)

    p = sub.add_parser("adams", help="twisted Adams operation on the test characters")
    add_common(p)
    p.add_argument("--u", type=int, default=None, help="central involution (element index)")
    p.add_argument("--n", type=int, default=1, help="operation degree")

    p = sub.add_parser("lambda", help="twisted exterior-power operation on the test characters")
    add_common(p)
    p.add_argument("--u", type=int, default=None, help="central involution (element index)")
    p.add_argument("--n", type=int, default=1, help="operation degree")

    p = sub.add_parser("exterior", help="braided exterior powers against the Newton recursion")
    add_common(p)
    p.add_argument("--n", type=int, default=2, help="exterior power degree")
    p.add_argument("--p", type=int, default=None, help="also run cyclic operations at this prime")
    p.add_argument("--eps", type=int, default=1, help="exponent k of the root zeta_p^k")

    p = sub.add_parser("koszul-twist", help="graded twist of a triangular datum")
    add_common(p)

    p = sub.add_parser("selftest", help="run the full acceptance suite")
    add_common(p)

    return parser


def _load_json(path: str) -> dict:
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _resolve_group(args, fallback_name: str | None = None):
    if args.group:
        try:
            return jsonio.resolve_group(args.group)
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise InputError(f"cannot load group {args.group!r}: {exc}") from exc
    if fallback_name and fallback_name in CATALOG_NAMES:
        return jsonio.resolve_group(fallback_name)
    raise InputError("no --group given and the input does not name a bundled group")


def _load_rmatrix(args):
    if args.rmatrix:
        doc = _load_json(args.rmatrix)
        group = _resolve_group(args, doc.get("group"))
        return jsonio.tensor_from_json(doc, group), group, None
    if args.datum:
        doc = _load_json(args.datum)
        group = _resolve_group(args, doc.get("group"))
        datum = jsonio.datum_from_json(doc, group)
        return build_r(datum), group, datum
    raise InputError("either --rmatrix or --datum is required")


def _test_rep_set(group):
    reps = list(linear_character_reps(group))
    reps.append(regular_rep(group))
    return reps


def _cmd_classify(args):
    group = _resolve_group(args)
    catalog = enumerate_qt(
        group, triangular_only=args.triangular, threads=default_threads()
    )
    entries = []
    for idx, datum in enumerate(catalog.data):
        entries.append(
            {
                "datum": jsonio.datum_to_json(datum),
                "rmatrix": jsonio.tensor_to_json(catalog.rmats[idx]),
                "verification": jsonio.report_to_json(catalog.reports[idx]),
                "markov": jsonio.tensor_to_json(catalog.markovs[idx]),
                "triangular": datum.triangular,
                "unitary": catalog.unitary[idx],
                "dedup_class": catalog.dedup_class_of(idx),
            }
        )
    doc = {
        "command": "classify",
        "group": group.name,
        "note": COMPLETENESS_NOTE,
        "triangular_only": bool(args.triangular),
        "entries": entries,
        "dedup_classes": catalog.dedup,
        "counts": {
            "data": len(catalog),
            "distinct": len(catalog.dedup),
            "unitary": sum(catalog.unitary),
        },
    }
    return doc, catalog.all_verified


def _cmd_verify(args):
    tensor, group, _ = _load_rmatrix(args)
    report = verify_qt(tensor)
    doc = {
        "command": "verify",
        "group": group.name,
        "rmatrix": jsonio.tensor_to_json(tensor),
        "verification": jsonio.report_to_json(report),
        "unitary": verify_unitary(tensor) if report.all_passed else None,
    }
    return doc, report.all_passed


def _cmd_markov(args):
    tensor, group, datum = _load_rmatrix(args)
    u = markov_element(tensor)
    report = verify_markov(tensor)
    doc = {
        "command": "markov",
        "group": group.name,
        "markov": jsonio.tensor_to_json(u),
        "markov_flipped": jsonio.tensor_to_json(markov_element_flipped(tensor)),
        "verification": jsonio.report_to_json(report),
    }
    ok = report.all_passed
    if datum is not None and datum.triangular:
        value_eq = verify_markov_equation(datum, u)
        doc["value_equation"] = value_eq
        ok = ok and value_eq
    return doc, ok


def _character_table(args, operation):
    group = _resolve_group(args)
    u = group.identity if args.u is None else args.u
    reps = _test_rep_set(group)
    rows = []
    for rep in reps:
        out = operation(rep.character(), u, args.n)
        rows.append(
            {"character": rep.name, "result": jsonio.class_function_to_json(out)}
        )
    return group, u, rows


def _cmd_adams(args):
    group, u, rows = _character_table(args, adams_twisted)
    doc = {
        "command": "adams",
        "group": group.name,
        "u": u,
        "n": args.n,
        "results": rows,
    }
    return doc, True


def _cmd_lambda(args):
    group, u, rows = _character_table(args, lambda x, u, n: lambda_from_adams(x, n, u))
    doc = {
        "command": "lambda",
        "group": group.name,
        "u": u,
        "n": args.n,
        "results": rows,
    }
    return doc, True


def _cmd_exterior(args):
    tensor, group, _ = _load_rmatrix(args)
    u = markov_element(tensor)
    u_idx = u.grouplike_index()
    rows = []
    ok = True
    for rep in _test_rep_set(group):
        if rep.dim**args.n > 4096:
            continue
        ext = exterior_power_char(rep, tensor, args.n)
        newton = lambda_from_adams(rep.character(), args.n, u_idx)
        match = ext == newton
        ok = ok and match
        row = {
            "representation": rep.name,
            "character": jsonio.class_function_to_json(ext),
            "matches_newton_recursion": match,
        }
        if args.p is not None:
            eps = root_of_unity(args.p, args.eps)
            values = cyclic_operation_char(rep, tensor, args.p, eps)
            row["cyclic_traces"] = {
                str(z): jsonio.scalar_to_json(v) for z, v in sorted(values.items())
            }
        rows.append(row)
    doc = {
        "command": "exterior",
        "group": group.name,
        "n": args.n,
        "markov": jsonio.tensor_to_json(u),
        "results": rows,
    }
    return doc, ok


def _cmd_koszul_twist(args):
    if not args.datum:
        raise InputError("koszul-twist needs --datum")
    doc_in = _load_json(args.datum)
    group = _resolve_group(args, doc_in.get("group"))
    datum = jsonio.datum_from_json(doc_in, group)
    twist = koszul_twist(datum)
    doc = {
        "command": "koszul-twist",
        "group": group.name,
        "datum": jsonio.datum_to_json(datum),
        "twist": jsonio.tensor_to_json(twist.twist),
        "gamma": [list(row) for row in twist.gamma.matrix],
        "beta_u": [list(row) for row in twist.beta_u.matrix],
        "base_rmatrix": jsonio.tensor_to_json(twist.base),
        "verification": jsonio.report_to_json(twist.report),
    }
    return doc, twist.all_passed


def _cmd_selftest(args):
    results = acceptance.run_all(emit=lambda line: print(line, file=sys.stderr))
    doc = {
        "command": "selftest",
        "criteria": [
            {
                "number": r.number,
                "name": r.name,
                "passed": r.passed,
                "details": r.details,
                "seconds": round(r.seconds, 3),
            }
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    return doc, doc["all_passed"]


_COMMANDS = {
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "markov": _cmd_markov,
    "adams": _cmd_adams,
    "lambda": _cmd_lambda,
    "exterior": _cmd_exterior,
    "koszul-twist": _cmd_koszul_twist,
    "selftest": _cmd_selftest,
}


def _emit(doc, args) -> None:
    payload = jsonio.canonical_dumps(doc)
    if getattr(args, "out", None):
        with open(args.out, "w") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, ok = _COMMANDS[args.command](args)
    except InputError as exc:
        _emit({"error": {"kind": "input", "message": str(exc)}}, args)
        return EXIT_PARSE_ERROR
    except (DatumError, ValueError) as exc:
        _emit({"error": {"kind": "invariant", "message": str(exc)}}, args)
        return EXIT_INVARIANT
    _emit(doc, args)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
