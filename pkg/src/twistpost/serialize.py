"""JSON interchange for every structure kind.

Formats (all tables are dense row-major integer lists):

  group   {"n": int, "mul": [[int]], "labels": [str]?}
  tpg     {"group": <group>, "tri": [[int]], "tri_right": [[int]]?, "phi": [int]}
          ("hopf": true marks a group-algebra extension of the same data;
           right-only structures carry "tri_right" without "tri")
  truss   {"group": <group>, "circ": [[int]], "phi": [int], "two_sided": bool}
  rbs     {"group": <group>, "b1": [int], "b2": [int]}
  brace   {"group": <group>, "circ": [[int]], "side": "left|right|two_sided"}
  ring    {"n": int, "add": [[int]], "star": [[int]]}
  ybe     {"n": int, "r": [[[int, int]]]}  with r[a][b] = [c, d]
  lie     {"dim": int, "bracket": [[["p/q"]]], "tri": [[["p/q"]]],
           "phi": [["p/q"]]}  rationals as strings; row i of "phi" holds
           the image coordinates of basis vector i

Identities, inverses and classification tags are never serialized; loaders
recompute and re-verify everything.
"""

from __future__ import annotations

import json
from fractions import Fraction

from twistpost.braces import RadicalRing, SkewBrace, YBESolution, make_skew_brace
from twistpost.groups import FiniteGroup, make_group
from twistpost.hopf import GroupAlgebraTPHA, linearize
from twistpost.lie import TwistedPostLieAlgebra, make_tpla
from twistpost.rota_baxter import RotaBaxterSystem, make_rbs
from twistpost.tpg import TwistedPostGroup, make_tpg
from twistpost.truss import SkewTruss, make_truss


def group_to_json(g: FiniteGroup) -> dict:
    out = {"n": g.n, "mul": [list(row) for row in g.mul]}
    if g.labels is not None:
        out["labels"] = list(g.labels)
    return out


def group_from_json(data: dict) -> FiniteGroup:
    return make_group(data["mul"], labels=data.get("labels"))


def tpg_to_json(t: TwistedPostGroup) -> dict:
    out = {"group": group_to_json(t.group), "phi": list(t.phi)}
    if t.tri is not None:
        out["tri"] = [list(row) for row in t.tri]
    if t.tri_right is not None:
        out["tri_right"] = [list(row) for row in t.tri_right]
    return out


def tpg_from_json(data: dict) -> TwistedPostGroup:
    group = group_from_json(data["group"])
    return make_tpg(group, data.get("tri"), data["phi"], data.get("tri_right"))


def truss_to_json(s: SkewTruss) -> dict:
    return {
        "group": group_to_json(s.group),
        "circ": [list(row) for row in s.circ],
        "phi": list(s.phi),
        "two_sided": s.two_sided,
    }


def truss_from_json(data: dict) -> SkewTruss:
    group = group_from_json(data["group"])
    return make_truss(group, data["circ"], data.get("phi"),
                      two_sided=data.get("two_sided", False),
                      infer=data.get("phi") is None)


def rbs_to_json(r: RotaBaxterSystem) -> dict:
    return {"group": group_to_json(r.group), "b1": list(r.b1), "b2": list(r.b2)}


def rbs_from_json(data: dict) -> RotaBaxterSystem:
    return make_rbs(group_from_json(data["group"]), data["b1"], data["b2"])


def brace_to_json(b: SkewBrace) -> dict:
    return {
        "group": group_to_json(b.group),
        "circ": [list(row) for row in b.circ],
        "side": b.side,
    }


def brace_from_json(data: dict) -> SkewBrace:
    return make_skew_brace(group_from_json(data["group"]), data["circ"],
                           data.get("side", "left"))


def ring_to_json(r: RadicalRing) -> dict:
    return {
        "n": r.n,
        "add": [list(row) for row in r.add],
        "star": [list(row) for row in r.star],
    }


def ring_from_json(data: dict):
    from twistpost.braces import verify_radical_ring
    from twistpost.errors import InvalidStructure

    report, witnesses = verify_radical_ring(data["n"], data["add"], data["star"])
    if not report.valid:
        raise InvalidStructure("tables do not form a radical ring", report)
    from twistpost.groups import _as_table

    return RadicalRing(n=data["n"], add=_as_table(data["add"]),
                       star=_as_table(data["star"]), radical_witness=witnesses)


def ybe_to_json(sol: YBESolution) -> dict:
    return {
        "n": sol.n,
        "r": [
            [[sol.r1[a][b], sol.r2[a][b]] for b in range(sol.n)]
            for a in range(sol.n)
        ],
    }


def ybe_from_json(data: dict) -> YBESolution:
    from twistpost.braces import verify_ybe
    from twistpost.errors import InvalidStructure

    n = data["n"]
    r1 = [[data["r"][a][b][0] for b in range(n)] for a in range(n)]
    r2 = [[data["r"][a][b][1] for b in range(n)] for a in range(n)]
    report = verify_ybe(n, r1, r2)
    if not report.valid:
        raise InvalidStructure("map is not a non-degenerate braiding", report)
    from twistpost.groups import _as_table

    return YBESolution(n=n, r1=_as_table(r1), r2=_as_table(r2))


def _frac_str(x: Fraction) -> str:
    return str(x)


def lie_to_json(L: TwistedPostLieAlgebra) -> dict:
    return {
        "dim": L.dim,
        "bracket": [[[_frac_str(x) for x in vec] for vec in plane]
                    for plane in L.bracket],
        "tri": [[[_frac_str(x) for x in vec] for vec in plane]
                for plane in L.tri],
        "phi": [[_frac_str(x) for x in row] for row in L.phi],
    }


def lie_from_json(data: dict) -> TwistedPostLieAlgebra:
    conv3 = lambda t: [[[Fraction(x) for x in vec] for vec in plane] for plane in t]
    conv2 = lambda m: [[Fraction(x) for x in row] for row in m]
    return make_tpla(data["dim"], conv3(data["bracket"]), conv3(data["tri"]),
                     conv2(data["phi"]))


def hopf_to_json(h: GroupAlgebraTPHA) -> dict:
    out = tpg_to_json(h.base)
    out["hopf"] = True
    return out


def hopf_from_json(data: dict) -> GroupAlgebraTPHA:
    return linearize(tpg_from_json(data))


# ---------------------------------------------------------------------------
# detection for the CLI
# ---------------------------------------------------------------------------

_LOADERS = {
    "tpg": tpg_from_json,
    "hopf": hopf_from_json,
    "truss": truss_from_json,
    "rbs": rbs_from_json,
    "brace": brace_from_json,
    "ring": ring_from_json,
    "ybe": ybe_from_json,
    "lie": lie_from_json,
    "group": group_from_json,
}


def detect_kind(data: dict) -> str:
    if "bracket" in data:
        return "lie"
    if "r" in data:
        return "ybe"
    if "add" in data and "star" in data:
        return "ring"
    if "b1" in data:
        return "rbs"
    if "circ" in data:
        return "brace" if "side" in data else "truss"
    if data.get("hopf"):
        return "hopf"
    if "tri" in data or "tri_right" in data:
        return "tpg"
    if "mul" in data:
        return "group"
    raise ValueError("cannot determine structure kind from the given fields")


def load_structure(data: dict):
    kind = detect_kind(data)
    return kind, _LOADERS[kind](data)


def load_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return load_structure(data)


def dump_json(obj) -> dict:
    dumpers = {
        TwistedPostGroup: tpg_to_json,
        SkewTruss: truss_to_json,
        RotaBaxterSystem: rbs_to_json,
        SkewBrace: brace_to_json,
        RadicalRing: ring_to_json,
        YBESolution: ybe_to_json,
        TwistedPostLieAlgebra: lie_to_json,
        GroupAlgebraTPHA: hopf_to_json,
        FiniteGroup: group_to_json,
    }
    for cls, fn in dumpers.items():
        if isinstance(obj, cls):
            return fn(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")
