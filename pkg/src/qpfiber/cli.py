"""Command-line interface.

One verb per run; the report is a single JSON document on stdout, with the
wall-clock duration on stderr so that stdout stays byte-identical across
runs.  Exit codes: 0 success, 1 malformed input, 2 precondition violation
(e.g. NotFull, NotQuasipositive), 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .braidcore import BandRepresentation, BraidWord, beta, exponent_sum, permutation_cycles
from .constructions import expand_bands, nabla, pad_into_nabla, q_rep, verify_fiber
from .errors import InternalError, InvalidInput, PreconditionError, QpfiberError
from .graphcalc import CombedGraph, reduce_with_trace
from .invariants import alexander_from_braid
from .qpize import quasipositize, quasipositize_handle_subsurface
from .selfcheck import run_all
from .surface import BraidedSurface, euler_characteristic, summary


def _read_document(path: str):
    if path == "-":
        data = sys.stdin.read()
        digest = hashlib.sha256(data.encode()).hexdigest()
    else:
        with open(path, "rb") as handle:
            raw = handle.read()
        digest = hashlib.sha256(raw).hexdigest()
        data = raw.decode()
    try:
        return json.loads(data), digest
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"input is not JSON: {exc}") from exc


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpfiber",
        description="braided Seifert surfaces, fiber models, and quasipositive band representations",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("nabla", help="torus-link fiber word on n strands")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("qrep", help="quasipositive fiber model on (n-1)^2+1 strands")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("pad", help="embed a positive word's surface into the fiber")
    p.add_argument("--input", required=True, help="braid word JSON ('-' for stdin)")

    p = sub.add_parser("expand", help="embed a quasipositive surface into a positive word's surface")
    p.add_argument("--input", required=True, help="band representation JSON ('-' for stdin)")

    p = sub.add_parser("invariants", help="summary and Alexander data of a band representation")
    p.add_argument("--input", required=True, help="band representation JSON ('-' for stdin)")

    p = sub.add_parser("verify-fiber", help="cross-check the two fiber models")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("reduce", help="Whitehead-reduce a combed graph")
    p.add_argument("--input", required=True, help="combed graph JSON ('-' for stdin)")

    p = sub.add_parser("quasipositize", help="quasipositive representation of a full subsurface of S(q_n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input", help="combed graph JSON ('-' for stdin)")
    p.add_argument("--subset", help="comma-separated fine 1-handle indices (spine input)")

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--seed", type=int, default=20600)

    return parser


def _dispatch(args, inputs: dict) -> dict:
    if args.verb == "nabla":
        return {"representation": nabla(args.n).to_json()}
    if args.verb == "qrep":
        return {"representation": q_rep(args.n).to_json()}
    if args.verb == "pad":
        doc, digest = _read_document(args.input)
        inputs[args.input] = digest
        n, graph = pad_into_nabla(BraidWord.from_json(doc))
        return {"n": n, "graph": graph.to_json()}
    if args.verb == "expand":
        doc, digest = _read_document(args.input)
        inputs[args.input] = digest
        word, graph = expand_bands(BandRepresentation.from_json(doc))
        return {"word": word.to_json(), "graph": graph.to_json()}
    if args.verb == "invariants":
        doc, digest = _read_document(args.input)
        inputs[args.input] = digest
        rep = BandRepresentation.from_json(doc)
        surface = BraidedSurface(rep)
        word = beta(rep)
        return {
            "chi": euler_characteristic(surface),
            "components": len(summary(surface).components),
            "boundary": len(permutation_cycles(word)),
            "exponent_sum": exponent_sum(word),
            "alexander": alexander_from_braid(word).coefficient_list() if rep.strands >= 1 else [],
            "summary": summary(surface).to_json(),
        }
    if args.verb == "verify-fiber":
        return verify_fiber(args.n).to_json()
    if args.verb == "reduce":
        doc, digest = _read_document(args.input)
        inputs[args.input] = digest
        graph, trace = reduce_with_trace(CombedGraph.from_json(doc))
        return {"graph": graph.to_json(), "trace": [site.to_json() for site in trace]}
    if args.verb == "quasipositize":
        if (args.input is None) == (args.subset is None):
            raise InvalidInput("quasipositize needs exactly one of --input or --subset")
        if args.subset is not None:
            selected = [int(x) for x in args.subset.split(",") if x.strip()] if args.subset.strip() else []
            result = quasipositize_handle_subsurface(args.n, selected)
        else:
            doc, digest = _read_document(args.input)
            inputs[args.input] = digest
            result = quasipositize(args.n, CombedGraph.from_json(doc))
        return result.to_json()
    if args.verb == "selftest":
        checks = run_all(args.seed)
        report = {"checks": [c.to_json() for c in checks], "ok": all(c.ok for c in checks)}
        if not report["ok"]:
            raise InternalError(json.dumps(report, sort_keys=True))
        return report
    raise InvalidInput(f"unknown verb {args.verb!r}")


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    started = time.monotonic()
    inputs: dict[str, str] = {}
    try:
        result = _dispatch(args, inputs)
    except InvalidInput as exc:
        _emit({"command": argv, "error": str(exc), "kind": "malformed-input", "ok": False})
        return 1
    except PreconditionError as exc:
        _emit({"command": argv, "error": str(exc), "kind": type(exc).__name__, "ok": False})
        return 2
    except InternalError as exc:
        _emit({"command": argv, "error": str(exc), "kind": type(exc).__name__, "ok": False})
        return 3
    except FileNotFoundError as exc:
        _emit({"command": argv, "error": str(exc), "kind": "missing-input", "ok": False})
        return 1
    except QpfiberError as exc:
        _emit({"command": argv, "error": str(exc), "kind": type(exc).__name__, "ok": False})
        return 1
    _emit({"command": argv, "inputs": inputs, "result": result, "ok": True})
    sys.stderr.write(f"duration: {time.monotonic() - started:.3f}s\n")
    return 0


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
