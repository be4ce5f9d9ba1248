"""Persistent catalog of discovered structures, one JSON object per line.

The id of an entry is a content hash of its canonical tables, so any edit
to the stored tables breaks the id binding; loading re-verifies both the
hash and the classification of every entry and refuses silently corrupted
files. Verification digests stored alongside are advisory only.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from twistpost.errors import VerificationMismatch
from twistpost.groups import FiniteGroup, make_group
from twistpost.tpg import classify, classify_right, classify_two_sided


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: str                     # recomputed classification tag
    order: int
    mul: tuple
    phi: tuple
    tri: tuple | None = None
    tri_right: tuple | None = None
    provenance: dict = field(default_factory=dict)
    digest: str = ""

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "order": self.order,
            "mul": [list(r) for r in self.mul],
            "tri": [list(r) for r in self.tri] if self.tri else None,
            "tri_right": [list(r) for r in self.tri_right] if self.tri_right else None,
            "phi": list(self.phi),
            "provenance": self.provenance,
            "digest": self.digest,
        }


def _classify_tables(group: FiniteGroup, tri, tri_right, phi):
    """(kind tag, report) for whatever sides are present."""
    if tri is not None and tri_right is not None:
        rep = classify_two_sided(group, tri, tri_right, phi)
        kind = rep.kind or (rep.left.kind and f"{rep.left.kind}+{rep.right.kind}")
        return kind, rep
    if tri is not None:
        rep = classify(group, tri, phi)
        return rep.kind, rep
    rep = classify_right(group, tri_right, phi)
    return rep.kind, rep


def _content_payload(mul, tri, tri_right, phi) -> str:
    return json.dumps({
        "mul": [list(r) for r in mul],
        "tri": [list(r) for r in tri] if tri else None,
        "tri_right": [list(r) for r in tri_right] if tri_right else None,
        "phi": list(phi),
    }, sort_keys=True)


def entry_from_tables(group_hint: FiniteGroup, key: tuple, provenance: dict) -> CatalogEntry:
    """Build a verified entry from canonical (mul, tri, tri_right, phi)."""
    mul, tri, tri_right, phi = key
    group = make_group(mul)
    kind, rep = _classify_tables(group, tri, tri_right, phi)
    if kind is None:
        raise VerificationMismatch("entry tables do not classify")
    payload = _content_payload(mul, tri, tri_right, phi)
    digest = hashlib.sha256(
        json.dumps(rep.to_json(), sort_keys=True).encode()
    ).hexdigest()[:16]
    return CatalogEntry(
        id=hashlib.sha256(payload.encode()).hexdigest()[:16],
        kind=kind,
        order=group.n,
        mul=mul,
        tri=tri,
        tri_right=tri_right,
        phi=phi,
        provenance=provenance,
        digest=digest,
    )


def catalog_store(entries, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for entry in entries:
            fh.write(json.dumps(entry.to_json(), sort_keys=True) + "\n")


def catalog_append(entries, path) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for entry in entries:
            fh.write(json.dumps(entry.to_json(), sort_keys=True) + "\n")


def catalog_load(path) -> list[CatalogEntry]:
    """Parse and re-verify every line; stored digests are never trusted."""
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            mul = tuple(tuple(r) for r in data["mul"])
            tri = tuple(tuple(r) for r in data["tri"]) if data.get("tri") else None
            tri_right = (tuple(tuple(r) for r in data["tri_right"])
                         if data.get("tri_right") else None)
            phi = tuple(data["phi"])

            expected_id = hashlib.sha256(
                _content_payload(mul, tri, tri_right, phi).encode()
            ).hexdigest()[:16]
            if expected_id != data["id"]:
                raise VerificationMismatch(
                    f"entry {data['id']} (line {lineno}): content hash mismatch"
                )
            try:
                group = make_group(mul)
                kind, _ = _classify_tables(group, tri, tri_right, phi)
            except Exception as exc:
                raise VerificationMismatch(
                    f"entry {data['id']} (line {lineno}): {exc}"
                ) from exc
            if kind is None or kind != data["kind"]:
                raise VerificationMismatch(
                    f"entry {data['id']} (line {lineno}): "
                    f"stored kind {data['kind']!r} but re-verification says {kind!r}"
                )
            out.append(CatalogEntry(
                id=data["id"], kind=data["kind"], order=data["order"],
                mul=mul, tri=tri, tri_right=tri_right, phi=phi,
                provenance=data.get("provenance", {}),
                digest=data.get("digest", ""),
            ))
    return out
