"""Command-line entry point.

Machine-readable JSON goes to stdout, human summaries to stderr.  Exit
codes: 0 success, 1 domain error (JSON error object on stdout), 2 usage.
"""
from __future__ import annotations

import argparse
import json
import sys

from .core import (
    QuiverError,
    linear_quiver,
    quiver_from_json_str,
    quiver_to_json,
    validate,
)
from .classify import is_member
from .mutation import MutationSequence, NotAMemberError, mutate_power
from .enumeration import labelled_class_size, mutation_class
from .analysis import clique_number, verify_energy, zero_part, zero_part_cycles, zero_part_valency
from .reduction import reduce_to_line
from . import verification


def _read_quiver(args):
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    q = quiver_from_json_str(text)
    report = validate(q)
    if not report.ok:
        raise QuiverError(f"invalid quiver: {report.summary()}")
    return q


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _cmd_mutate(args) -> int:
    q = _read_quiver(args)
    result = mutate_power(q, args.vertex - 1, args.power)
    _emit(quiver_to_json(result))
    return 0


def _cmd_classify(args) -> int:
    q = _read_quiver(args)
    verdict = is_member(q)
    _emit(verdict.to_json())
    print(f"member: {verdict.member}", file=sys.stderr)
    return 0


def _cmd_enumerate(args) -> int:
    if args.seed:
        with open(args.seed, "r", encoding="utf-8") as fh:
            seed = quiver_from_json_str(fh.read())
    else:
        if not args.n or not args.m:
            raise QuiverError("enumerate needs either --seed or both --n and --m")
        seed = linear_quiver(args.n, args.m)
    cls = mutation_class(seed, limit=args.limit)
    out = {
        "count": len(cls),
        "labelled_count": labelled_class_size(seed),
        "representatives": [quiver_to_json(q) for q in cls.representatives.values()],
    }
    if args.emit_orbit_graph:
        forms = {form: i for i, form in enumerate(cls.representatives)}
        edges = [
            {"from": forms[src], "vertex": v + 1, "to": forms[dst]}
            for (src, v), dst in sorted(cls.orbit.items())
        ]
        if args.emit_orbit_graph == "json":
            out["orbit"] = edges
        else:
            lines = ["digraph orbit {"]
            lines += [f'  {e["from"]} -> {e["to"]} [label="{e["vertex"]}"];' for e in edges]
            lines.append("}")
            out["orbit_dot"] = "\n".join(lines)
    _emit(out)
    print(f"{len(cls)} isomorphism classes", file=sys.stderr)
    return 0


def _cmd_analyze(args) -> int:
    q = _read_quiver(args)
    out: dict = {}
    if args.clique_number:
        out["clique_number"] = clique_number(q)
    if args.energy:
        out["energy"] = verify_energy(q).to_json()
    if args.zero_part:
        zp = zero_part(q)
        out["zero_part"] = zp.to_json()
        out["zero_part"]["cycles"] = zero_part_cycles(q).to_json()
        out["zero_part"]["valency"] = zero_part_valency(q).to_json()
        if args.dot:
            out["zero_part"]["dot"] = zp.to_dot()
    if not out:
        raise QuiverError("analyze: pick at least one of --energy, --zero-part, --clique-number")
    _emit(out)
    return 0


def _cmd_reduce(args) -> int:
    q = _read_quiver(args)
    line, seq = reduce_to_line(q)
    out = {"line": quiver_to_json(line), "sequence": seq.to_json()}
    if args.verify:
        forward = seq.apply(q) == line
        backward = seq.inverse(q.m).apply(line) == q
        out["verified"] = {"forward": forward, "inverse": backward}
        if not (forward and backward):
            raise QuiverError("reduction replay failed")
    _emit(out)
    print(f"reduced in {len(seq)} mutation steps", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    pairs = []
    for spec_pair in args.pair or ["2,1", "3,1", "4,1", "2,2", "3,2", "4,2"]:
        n, m = (int(x) for x in spec_pair.split(","))
        pairs.append((n, m))
    results = verification.run_all(tuple(pairs), samples=args.samples)
    for res in results:
        print(res.line(), file=sys.stderr)
    _emit({"ok": all(r.ok for r in results), "criteria": [r.to_json() for r in results]})
    return 0 if all(r.ok for r in results) else 1


def _cmd_serve(args) -> int:
    from .service import serve

    serve(host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cquivers",
        description="Coloured quiver mutation of type A_n",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="apply a mutation power to a quiver")
    p.add_argument("--vertex", type=int, required=True, help="1-based vertex")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--file", help="quiver JSON file (default: stdin)")
    p.set_defaults(fn=_cmd_mutate)

    p = sub.add_parser("classify", help="membership verdict for a quiver")
    p.add_argument("--file")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("enumerate", help="enumerate a mutation class")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", help="seed quiver JSON file instead of the linear quiver")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--emit-orbit-graph", choices=["dot", "json"])
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("analyze", help="energy / zero-part / clique-number reports")
    p.add_argument("--file")
    p.add_argument("--energy", action="store_true")
    p.add_argument("--zero-part", action="store_true")
    p.add_argument("--clique-number", action="store_true")
    p.add_argument("--dot", action="store_true", help="include DOT for the zero part")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("reduce", help="reduce a class member to a line quiver")
    p.add_argument("--file")
    p.add_argument("--verify", action="store_true", help="replay both directions")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--pair", action="append", help="n,m pair (repeatable)")
    p.add_argument("--samples", type=int, default=10_000)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("serve", help="run the local explorer service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8977)
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NotAMemberError as exc:
        _emit({"error": str(exc), "verdict": exc.verdict.to_json()})
        return 1
    except QuiverError as exc:
        _emit({"error": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
