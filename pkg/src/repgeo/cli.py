"""Command-line front end.

Exit codes: 0 = holds / equivalent / member, 1 = fails / not equivalent /
non-member, 2 = unknown, 3 = input or cap error.  With --json the output
is a single JSON document; the human output mirrors it.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .audit import SUPPORTED_PRIMES, paper_demo, render_report, report_jsonable
from .config import DEFAULT_BOUNDS, SearchBounds
from .errors import ParseError, RepGeoError
from .freemod import ModuleAtom, QuasiIdentity
from .geometry import (
    AtChainCertificate,
    AtWitness,
    Equivalent,
    GeoCertificate,
    InseparabilityWitness,
    NotEquivalent,
    SeparationCertificate,
    Unknown,
    at_equivalent,
    fulfills_qid,
    geo_equivalent,
    in_at_closure,
    in_closure,
)
from .groups import GroupHom, enumerate_group_homs
from .reps import RepHom, enumerate_rep_homs, faithful_image
from .textio import (
    infer_context,
    parse_atom,
    parse_group_file,
    parse_qid,
    parse_rep_file,
    parse_system_file,
    serialize,
    serialize_qid,
)

_EXIT = {
    "equivalent": 0,
    "fulfilled": 0,
    "member": 0,
    "ok": 0,
    "not-equivalent": 1,
    "not-fulfilled": 1,
    "non-member": 1,
    "unknown": 2,
    "error": 3,
}


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, GroupHom):
        return {"image": [obj.codomain.names[i] for i in obj.image]}
    if isinstance(obj, RepHom):
        return {
            "matrix": [list(r) for r in obj.matrix],
            "group_image": [
                obj.target.group.names[i] for i in obj.grouphom.image
            ],
        }
    if isinstance(obj, SeparationCertificate):
        return {
            "homs": [_jsonable(h) for h in obj.homs],
            "notes": list(obj.notes),
        }
    if isinstance(obj, GeoCertificate):
        return {"forward": _jsonable(obj.forward), "backward": _jsonable(obj.backward)}
    if isinstance(obj, AtChainCertificate):
        return {
            "chain": "each side is action-type equivalent to its faithful image; "
            "the faithful images are geometrically equivalent",
            "quotient_geo": _jsonable(obj.quotient_geo.certificate),
        }
    if isinstance(obj, InseparabilityWitness):
        return {
            "direction": obj.direction,
            "sort": obj.sort,
            "pair": _jsonable(obj.pair),
            "separating_qid": None
            if obj.separating_qid is None
            else serialize_qid(obj.separating_qid),
        }
    if isinstance(obj, AtWitness):
        return {
            "system": [serialize(u) for u in obj.system.module_part],
            "candidate": serialize(obj.candidate),
            "in_first": obj.in_first,
            "in_second": obj.in_second,
        }
    if isinstance(obj, QuasiIdentity):
        return serialize_qid(obj)
    return str(obj)


def _emit(args, payload: dict, human: str) -> int:
    code = _EXIT[payload["outcome"]]
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(human)
    return code


def _verdict_payload(verdict) -> tuple[str, dict]:
    if isinstance(verdict, Equivalent):
        return "equivalent", {"certificate": _jsonable(verdict.certificate)}
    if isinstance(verdict, NotEquivalent):
        return "not-equivalent", {"witness": _jsonable(verdict.witness)}
    assert isinstance(verdict, Unknown)
    return "unknown", {"bounds": vars(verdict.bounds)}


def _bounds_from(args) -> SearchBounds:
    b = DEFAULT_BOUNDS
    return SearchBounds(
        max_xvars=getattr(args, "max_vars", None) or b.max_xvars,
        max_yvars=getattr(args, "max_vars", None) or b.max_yvars,
        max_system=b.max_system,
        max_terms=getattr(args, "max_terms", None) or b.max_terms,
        max_word_len=getattr(args, "max_word_len", None) or b.max_word_len,
        max_premises=b.max_premises,
    )


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="repgeo")
    ap.add_argument("--json", action="store_true", help="emit JSON output")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-geo-groups", help="geometric equivalence of two groups")
    s.add_argument("g1")
    s.add_argument("g2")

    s = sub.add_parser("check-geo", help="geometric equivalence of two representations")
    s.add_argument("r1")
    s.add_argument("r2")

    s = sub.add_parser("check-at", help="action-type geometric equivalence")
    s.add_argument("r1")
    s.add_argument("r2")
    s.add_argument("--max-word-len", type=int)
    s.add_argument("--max-terms", type=int)
    s.add_argument("--max-vars", type=int)

    s = sub.add_parser("qid", help="check a quasi-identity on a representation")
    s.add_argument("rep")
    s.add_argument("formula")

    s = sub.add_parser("closure", help="closure membership of an atom")
    s.add_argument("rep")
    s.add_argument("--system", required=True)
    s.add_argument("--member", required=True)
    s.add_argument("--action-type", action="store_true")

    s = sub.add_parser("faithful", help="compute the faithful image")
    s.add_argument("rep")
    s.add_argument("-o", "--output")

    s = sub.add_parser("homs", help="enumerate homomorphisms")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--reps", action="store_true")

    s = sub.add_parser("paper-demo", help="audit the counterexample construction")
    s.add_argument("--p", type=int, default=2, choices=SUPPORTED_PRIMES)
    return ap


def run(argv) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()

    def done(payload: dict, human: str) -> int:
        payload["timing_ms"] = int((time.perf_counter() - t0) * 1000)
        return _emit(args, payload, human)

    try:
        if args.command == "check-geo-groups":
            g1 = parse_group_file(_read(args.g1))
            g2 = parse_group_file(_read(args.g2))
            verdict = geo_equivalent(g1, g2)
            outcome, extra = _verdict_payload(verdict)
            return done(
                {"command": args.command, "inputs": [args.g1, args.g2], "outcome": outcome, **extra},
                f"{outcome}",
            )

        if args.command == "check-geo":
            r1 = parse_rep_file(_read(args.r1))
            r2 = parse_rep_file(_read(args.r2))
            verdict = geo_equivalent(r1, r2)
            outcome, extra = _verdict_payload(verdict)
            return done(
                {"command": args.command, "inputs": [args.r1, args.r2], "outcome": outcome, **extra},
                f"{outcome}",
            )

        if args.command == "check-at":
            r1 = parse_rep_file(_read(args.r1))
            r2 = parse_rep_file(_read(args.r2))
            bounds = _bounds_from(args)
            verdict = at_equivalent(r1, r2, bounds)
            outcome, extra = _verdict_payload(verdict)
            return done(
                {
                    "command": args.command,
                    "inputs": [args.r1, args.r2],
                    "outcome": outcome,
                    "bounds": vars(bounds),
                    **extra,
                },
                f"{outcome}",
            )

        if args.command == "qid":
            rep = parse_rep_file(_read(args.rep))
            ctx = infer_context(args.formula)
            q = parse_qid(args.formula, ctx, rep.field)
            ok, witness = fulfills_qid(rep, q)
            outcome = "fulfilled" if ok else "not-fulfilled"
            wit = (
                None
                if witness is None
                else {
                    "x": [list(v) for v in witness.xmap],
                    "y": [rep.group.names[i] for i in witness.ymap],
                }
            )
            human = outcome if ok else f"{outcome}, witness {wit}"
            return done(
                {
                    "command": args.command,
                    "inputs": [args.rep, args.formula],
                    "outcome": outcome,
                    "witness": wit,
                },
                human,
            )

        if args.command == "closure":
            rep = parse_rep_file(_read(args.rep))
            ctx, system = parse_system_file(_read(args.system), rep.field)
            atom = parse_atom(args.member, ctx, rep.field)
            if args.action_type:
                if not isinstance(atom, ModuleAtom) or not system.is_action_type():
                    raise RepGeoError(
                        "--action-type needs a module atom and a system without group equations"
                    )
                member = in_at_closure(rep, system, atom.element)
            else:
                member = in_closure(rep, system, atom)
            outcome = "member" if member else "non-member"
            return done(
                {
                    "command": args.command,
                    "inputs": [args.rep, args.system, args.member],
                    "outcome": outcome,
                },
                outcome,
            )

        if args.command == "faithful":
            rep = parse_rep_file(_read(args.rep))
            fi = faithful_image(rep)
            text = serialize(fi.quotient)
            if args.output:
                Path(args.output).write_text(text, encoding="utf-8")
            human = text if not args.output else f"written to {args.output}"
            return done(
                {
                    "command": args.command,
                    "inputs": [args.rep],
                    "outcome": "ok",
                    "certificate": {
                        "quotient": text,
                        "sigma": [
                            fi.quotient.group.names[c] for c in fi.sigma
                        ],
                    },
                },
                human,
            )

        if args.command == "homs":
            if args.reps:
                a = parse_rep_file(_read(args.a))
                b = parse_rep_file(_read(args.b))
                homs = enumerate_rep_homs(a, b)
            else:
                a = parse_group_file(_read(args.a))
                b = parse_group_file(_read(args.b))
                homs = enumerate_group_homs(a, b)
            human = f"{len(homs)} homomorphisms"
            return done(
                {
                    "command": args.command,
                    "inputs": [args.a, args.b],
                    "outcome": "ok",
                    "certificate": {"count": len(homs), "homs": [_jsonable(h) for h in homs]},
                },
                human,
            )

        if args.command == "paper-demo":
            report = paper_demo(args.p)
            return done(
                {
                    "command": args.command,
                    "inputs": {"p": args.p},
                    "outcome": "ok",
                    "certificate": report_jsonable(report),
                },
                render_report(report),
            )

        raise RepGeoError(f"unknown command {args.command!r}")
    except RepGeoError as e:
        payload = {"command": args.command, "outcome": "error", "error": str(e)}
        if isinstance(e, ParseError):
            payload["span"] = {
                "line": e.span.line,
                "column": e.span.column,
                "length": e.span.length,
            }
        payload["timing_ms"] = int((time.perf_counter() - t0) * 1000)
        return _emit(args, payload, f"error: {e}")
    except OSError as e:
        payload = {
            "command": args.command,
            "outcome": "error",
            "error": str(e),
            "timing_ms": int((time.perf_counter() - t0) * 1000),
        }
        return _emit(args, payload, f"error: {e}")


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
