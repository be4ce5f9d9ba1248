"""Command-line front end.

Exit codes: 0 verified / success, 1 verification failed (witnesses are
printed), 2 usage or input errors (including malformed JSON, reported with
its location).

    twistpost verify <file> [--kind auto|left|right|two-sided] [--json]
    twistpost convert <file> --to truss|tpg|rbs|brace|ring|hopf|ybe [--out F]
    twistpost decompose <file> [--json]
    twistpost laws <file> [--json]
    twistpost enumerate --group SPEC --kind twisted|weak [--two-sided]
                        [--out CATALOG] [--max-raw N] [--time-budget S]
                        [--parallelism P] [--json]
    twistpost catalog list <file> | show <file> <id> [--json]
    twistpost corpus [name]
    twistpost selftest
"""

from __future__ import annotations

import argparse
import json
import sys

from twistpost import serialize
from twistpost.errors import TwistpostError


def _load(path: str):
    try:
        return serialize.load_file(path)
    except FileNotFoundError:
        raise _Usage(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise _Usage(f"malformed JSON in {path} at line {exc.lineno} column {exc.colno}")


class _Usage(Exception):
    pass


class _Failed(Exception):
    """Verification failure with a payload to print."""

    def __init__(self, payload):
        self.payload = payload
        super().__init__(str(payload))


def _emit(args, human: str, payload: dict):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True, default=str))
    else:
        print(human)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _cmd_verify(args):
    from twistpost.tpg import classify, classify_right, classify_two_sided

    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise _Usage(f"no such file: {args.file}")
    except json.JSONDecodeError as exc:
        raise _Usage(
            f"malformed JSON in {args.file} at line {exc.lineno} column {exc.colno}"
        )

    kind_detected = serialize.detect_kind(data)
    if kind_detected not in ("tpg", "hopf"):
        # non-tpg files verify through their loaders, which re-check laws
        try:
            _, obj = serialize.load_structure(data)
        except TwistpostError as exc:
            raise _Failed({"verified": False, "kind": kind_detected,
                           "error": str(exc),
                           "report": getattr(getattr(exc, "report", None),
                                             "to_json", lambda: None)()})
        _emit(args, f"verified: {kind_detected}",
              {"verified": True, "kind": kind_detected})
        return 0

    from twistpost.serialize import group_from_json

    group = group_from_json(data["group"])
    tri = data.get("tri")
    tri_right = data.get("tri_right")
    phi = data["phi"]

    want = args.kind
    if want == "auto":
        want = ("two-sided" if tri is not None and tri_right is not None
                else "left" if tri is not None else "right")

    if want == "left":
        if tri is None:
            raise _Usage("file has no left action table")
        report = classify(group, tri, phi)
    elif want == "right":
        if tri_right is None:
            raise _Usage("file has no right action table")
        report = classify_right(group, tri_right, phi)
    elif want == "two-sided":
        if tri is None or tri_right is None:
            raise _Usage("two-sided verification needs both action tables")
        report = classify_two_sided(group, tri, tri_right, phi)
    else:
        raise _Usage(f"unknown kind {want!r}")

    payload = report.to_json()
    if report.kind is None:
        raise _Failed(payload)
    note = " (post structure)" if all(
        phi[a] == a for a in range(group.n)
    ) and report.kind in ("left_twisted", "two_sided_twisted") else ""
    _emit(args, f"verified: {report.kind}{note}", payload)
    return 0


# ---------------------------------------------------------------------------
# convert
# ---------------------------------------------------------------------------


def _cmd_convert(args):
    kind, obj = _load(args.file)
    target = args.to

    def as_tpg(o, k):
        from twistpost.braces import brace_to_tpg
        from twistpost.rota_baxter import rbs_to_tpg
        from twistpost.truss import truss_to_weak_tpg

        if k in ("tpg", "hopf"):
            return o.base if k == "hopf" else o
        if k == "truss":
            return truss_to_weak_tpg(o)
        if k == "rbs":
            return rbs_to_tpg(o)
        if k == "brace":
            return brace_to_tpg(o)
        raise _Usage(f"cannot view a {k} file as a twisted structure")

    try:
        if target == "tpg":
            out = as_tpg(obj, kind)
        elif target == "truss":
            from twistpost.truss import tpg_to_truss

            out = tpg_to_truss(as_tpg(obj, kind))
        elif target == "rbs":
            from twistpost.rota_baxter import NotInner, reconstruct_rbs

            res = reconstruct_rbs(as_tpg(obj, kind))
            if isinstance(res, NotInner):
                raise _Failed({"error": "not inner", "witness": res.witness,
                               "row": list(res.row)})
            if not res:
                raise _Failed({"error": "no compatible system found"})
            out = res[0]
        elif target == "brace":
            from twistpost.braces import to_skew_brace, two_sided_brace

            t = as_tpg(obj, kind)
            out = two_sided_brace(t) if t.is_two_sided() else to_skew_brace(t)
        elif target == "ring":
            from twistpost.braces import to_radical_ring

            out = to_radical_ring(as_tpg(obj, kind))
        elif target == "hopf":
            from twistpost.hopf import linearize

            out = linearize(as_tpg(obj, kind))
        elif target == "ybe":
            from twistpost.braces import yang_baxter_map

            out = yang_baxter_map(as_tpg(obj, kind))
        else:
            raise _Usage(f"unknown conversion target {target!r}")
    except TwistpostError as exc:
        raise _Failed({"error": str(exc)})

    text = json.dumps(serialize.dump_json(out), sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


# ---------------------------------------------------------------------------
# decompose / laws
# ---------------------------------------------------------------------------


def _require_left_twisted(kind, obj):
    if kind == "hopf":
        obj = obj.base
        kind = "tpg"
    if kind != "tpg" or not obj.is_left_twisted():
        raise _Failed({"error": "file is not a left twisted structure"})
    return obj


def _cmd_decompose(args):
    from twistpost.tpg import decompose

    kind, obj = _load(args.file)
    t = _require_left_twisted(kind, obj)
    dec = decompose(t)
    payload = {
        "components": {str(c.idempotent): list(c.members) for c in dec.components},
        "idempotents": list(dec.idempotents),
        "base_size": len(dec.base.members),
        "partition_ok": dec.partition_ok,
        "psi_bijective": dec.psi_bijective,
        "psi_multiplicative": dec.psi_multiplicative,
        "pairwise_isomorphic": dec.pairwise_isomorphic,
        "witness": dec.witness,
    }
    if not dec.all_pass:
        raise _Failed(payload)
    human = (f"{len(dec.components)} component(s) of sizes "
             f"{[len(c.members) for c in dec.components]}; "
             f"product decomposition verified")
    _emit(args, human, payload)
    return 0


def _cmd_laws(args):
    kind, obj = _load(args.file)
    payload = {"kind": kind}
    failed = False

    if kind == "hopf":
        obj = obj.base
        kind = "tpg"

    if kind == "tpg":
        from twistpost.tpg import (
            check_subadjacent_laws,
            classify,
            classify_right,
            cocycle_lemmas,
            decompose,
        )
        from twistpost.truss import roundtrip_check, tpg_to_truss

        if obj.tri is not None:
            rep = classify(obj.group, obj.tri, obj.phi)
            payload["classification"] = rep.to_json()
            failed |= rep.kind is None
            if rep.kind == "left_twisted":
                laws = check_subadjacent_laws(obj)
                payload["derived_laws"] = laws.to_json()
                failed |= not laws.all_pass
                dec = decompose(obj)
                payload["decomposition_ok"] = dec.all_pass
                failed |= not dec.all_pass
                lem = cocycle_lemmas(obj)
                payload["cocycle_biconditional_ok"] = lem.biconditional_ok
                failed |= not lem.all_pass
            if rep.kind is not None:
                payload["roundtrip_ok"] = roundtrip_check(obj)
                failed |= not payload["roundtrip_ok"]
                payload["truss_valid"] = True
                tpg_to_truss(obj)
        if obj.tri_right is not None:
            rep = classify_right(obj.group, obj.tri_right, obj.phi)
            payload["classification_right"] = rep.to_json()
            failed |= rep.kind is None
    elif kind == "truss":
        from twistpost.truss import is_right_divisible, roundtrip_check, verify_truss

        rep = verify_truss(obj.group, obj.circ, obj.phi, two_sided=obj.two_sided)
        payload["truss_report"] = rep.to_json()
        payload["roundtrip_ok"] = roundtrip_check(obj)
        div, wit = is_right_divisible(obj)
        payload["right_divisible"] = div
        failed |= not (rep.valid and payload["roundtrip_ok"])
    elif kind == "rbs":
        from twistpost.rota_baxter import rbs_to_right_tpg, rbs_to_tpg, verify_rbs

        rep = verify_rbs(obj.group, obj.b1, obj.b2)
        payload["rbs_report"] = rep.to_json()
        failed |= not rep.valid
        if rep.valid:
            payload["left_kind"] = rbs_to_tpg(obj).kind
            payload["right_kind"] = rbs_to_right_tpg(obj).right_kind
    elif kind == "brace":
        from twistpost.braces import brace_to_tpg, verify_brace

        rep = verify_brace(obj.group, obj.circ, obj.side)
        payload["brace_report"] = rep.to_json()
        failed |= not rep.valid
        payload["tpg_kind"] = brace_to_tpg(obj).best_kind()
    elif kind == "ring":
        from twistpost.braces import verify_radical_ring

        rep, _ = verify_radical_ring(obj.n, obj.add, obj.star)
        payload["ring_valid"] = rep.valid
        failed |= not rep.valid
    elif kind == "ybe":
        from twistpost.braces import verify_ybe

        rep = verify_ybe(obj.n, obj.r1, obj.r2)
        payload["braiding_valid"] = rep.valid
        payload["witness"] = rep.witness_braid
        failed |= not rep.valid
    elif kind == "lie":
        from twistpost.lie import phi_image_subalgebra, sub_adjacent_bracket, verify_tpla

        rep = verify_tpla(obj)
        payload["lie_report"] = rep.to_json()
        failed |= not rep.valid
        if rep.valid:
            sub_adjacent_bracket(obj)
            payload["image_closed"] = phi_image_subalgebra(obj).closed
            failed |= not payload["image_closed"]
    elif kind == "group":
        payload["group_valid"] = True

    if failed:
        raise _Failed(payload)
    _emit(args, "all applicable law suites passed", payload)
    return 0


# ---------------------------------------------------------------------------
# enumerate / catalog / selftest
# ---------------------------------------------------------------------------


def _cmd_enumerate(args):
    from twistpost.catalog import catalog_store
    from twistpost.enumeration import EnumerationTask, enumerate_tpg
    from twistpost.groups import builtin_group

    group = builtin_group(args.group)
    task = EnumerationTask(
        group=group,
        kind=args.kind,
        two_sided=args.two_sided,
        max_raw=args.max_raw,
        time_budget=args.time_budget,
        parallelism=args.parallelism,
    )
    result = enumerate_tpg(task)
    if args.out:
        catalog_store(result.entries, args.out)
    payload = {
        "group": args.group,
        "kind": args.kind,
        "two_sided": args.two_sided,
        "raw_count": result.raw_count,
        "distinct_up_to_isomorphism": len(result.entries),
        "truncated": result.truncated,
        "ids": [e.id for e in result.entries],
    }
    human = (f"{result.raw_count} structure(s), "
             f"{len(result.entries)} up to relabeling"
             + (" [truncated]" if result.truncated else ""))
    _emit(args, human, payload)
    return 0


def _cmd_catalog(args):
    from twistpost.catalog import catalog_load

    entries = catalog_load(args.file)
    if args.action == "list":
        payload = [
            {"id": e.id, "kind": e.kind, "order": e.order} for e in entries
        ]
        if getattr(args, "json", False):
            print(json.dumps(payload, sort_keys=True))
        else:
            for row in payload:
                print(f"{row['id']}  order={row['order']}  {row['kind']}")
        return 0
    entry = next((e for e in entries if e.id == args.id), None)
    if entry is None:
        raise _Usage(f"no entry {args.id} in {args.file}")
    print(json.dumps(entry.to_json(), sort_keys=True))
    return 0


def _cmd_corpus(args):
    from twistpost import corpus as corpus_mod

    if args.name is None:
        for entry in corpus_mod.corpus():
            print(f"{entry.name:<20} {entry.tpg.best_kind():<20} {entry.description}")
        return 0
    try:
        entry = corpus_mod.get(args.name)
    except KeyError:
        raise _Usage(f"no corpus entry named {args.name!r}")
    print(json.dumps(serialize.dump_json(entry.tpg), sort_keys=True))
    return 0


def _cmd_selftest(args):
    from twistpost.selftest import run_selftest

    return run_selftest()


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistpost",
        description="verify, convert, decompose and enumerate finite twisted "
                    "post structures and their relatives",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="classify and verify a structure file")
    p.add_argument("file")
    p.add_argument("--kind", choices=["auto", "left", "right", "two-sided"],
                   default="auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("convert", help="convert between structure kinds")
    p.add_argument("file")
    p.add_argument("--to", required=True,
                   choices=["tpg", "truss", "rbs", "brace", "ring", "hopf", "ybe"])
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("decompose", help="split a structure into its component groups")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("laws", help="run every applicable invariant suite")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_laws)

    p = sub.add_parser("enumerate", help="enumerate structures over a builtin group")
    p.add_argument("--group", required=True, help="e.g. cyclic(3), klein_four")
    p.add_argument("--kind", choices=["twisted", "weak"], default="twisted")
    p.add_argument("--weak", dest="kind", action="store_const", const="weak",
                   help="shorthand for --kind weak")
    p.add_argument("--two-sided", action="store_true")
    p.add_argument("--max-raw", type=int, default=None)
    p.add_argument("--time-budget", type=float, default=None)
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--out", help="write entries to this catalog file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("catalog", help="inspect a catalog file")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("file")
    p.add_argument("id", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("corpus", help="list built-in examples or print one as JSON")
    p.add_argument("name", nargs="?")
    p.set_defaults(fn=_cmd_corpus)

    p = sub.add_parser("selftest", help="run the built-in example battery")
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _Failed as exc:
        print(json.dumps(exc.payload, sort_keys=True, default=str))
        return 1
    except TwistpostError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
