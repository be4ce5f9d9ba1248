"""The built-in corpus of named example structures.

These instances exercise every corner of the library and anchor the
acceptance suite: trivial structures on small cyclic groups and the
symmetric group on three letters, a projection cocycle on the Klein
four-group, a shifted cocycle imported from a truss, a nonlinear two-sided
structure on Z4, field multiplication as a weak structure on Z3, and a
Klein-group structure whose action rows include an outer automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from twistpost.groups import cyclic, klein_four, symmetric
from twistpost.tpg import TwistedPostGroup, make_tpg, trivial_tpg
from twistpost.truss import SkewTruss, make_truss


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    description: str
    tpg: TwistedPostGroup


def _klein_projection() -> TwistedPostGroup:
    # indices are lexicographic pairs over Z2 x Z2: 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1)
    g = klein_four()
    tri = tuple(tuple(range(4)) for _ in range(4))
    phi = (0, 0, 2, 2)  # projection onto the first factor
    return make_tpg(g, tri, phi)


def _z2_shifted() -> TwistedPostGroup:
    # from the truss a o b = a + b + 1 with phi(a) = a + 1 on Z2
    g = cyclic(2)
    tri = ((0, 1), (0, 1))
    phi = (1, 0)
    return make_tpg(g, tri, phi)


def _z4_two_sided() -> TwistedPostGroup:
    # a |> b = b + 2ab, a <| b = a + 2ab, phi = id; derived op a+b+2ab
    g = cyclic(4)
    tri = tuple(tuple((b + 2 * a * b) % 4 for b in range(4)) for a in range(4))
    tri_right = tuple(tuple((a + 2 * a * b) % 4 for b in range(4)) for a in range(4))
    phi = (0, 1, 2, 3)
    return make_tpg(g, tri, phi, tri_right)


def _z3_field_weak() -> TwistedPostGroup:
    # field multiplication with the zero cocycle; weak only (row of 0 collapses)
    g = cyclic(3)
    tri = tuple(tuple((a * b) % 3 for b in range(3)) for a in range(3))
    phi = (0, 0, 0)
    return make_tpg(g, tri, phi, tri_right=tri)


def _klein_swap() -> TwistedPostGroup:
    # action by the coordinate swap on the parity of x+y: rows are honest
    # automorphisms but not inner (the Klein group has trivial inner group)
    g = klein_four()
    ident = (0, 1, 2, 3)
    swap = (0, 2, 1, 3)
    tri = (ident, swap, swap, ident)
    phi = (0, 1, 2, 3)
    return make_tpg(g, tri, phi)


def corpus() -> list[CorpusEntry]:
    entries = [
        CorpusEntry(f"trivial_z{n}", f"trivial structure on the cyclic group of order {n}",
                    trivial_tpg(cyclic(n), two_sided=True))
        for n in range(2, 7)
    ]
    entries += [
        CorpusEntry("trivial_s3", "trivial structure on the symmetric group S3",
                    trivial_tpg(symmetric(3), two_sided=True)),
        CorpusEntry("klein_projection",
                    "Klein four-group with the first-factor projection cocycle",
                    _klein_projection()),
        CorpusEntry("z2_shifted", "shifted cocycle on Z2 imported from a truss",
                    _z2_shifted()),
        CorpusEntry("z4_two_sided", "two-sided structure a+b+2ab on Z4",
                    _z4_two_sided()),
        CorpusEntry("z3_field_weak", "Z3 field multiplication, zero cocycle (weak)",
                    _z3_field_weak()),
        CorpusEntry("klein_swap",
                    "Klein four-group acted on by the coordinate swap (not inner)",
                    _klein_swap()),
    ]
    return entries


def corpus_left_twisted() -> list[CorpusEntry]:
    return [e for e in corpus() if e.tpg.is_left_twisted()]


def corpus_trusses() -> list[tuple[str, SkewTruss]]:
    """Named trusses: conversions of the corpus plus hand-built ones."""
    from twistpost.truss import tpg_to_truss

    out = [(f"{e.name}_as_truss", tpg_to_truss(e.tpg)) for e in corpus()
           if e.tpg.tri is not None]
    g3 = cyclic(3)
    out.append((
        "z3_multiplicative",
        make_truss(g3, [[(a * b) % 3 for b in range(3)] for a in range(3)],
                   [0, 0, 0]),
    ))
    g2 = cyclic(2)
    out.append((
        "z2_shifted_truss",
        make_truss(g2, [[(a + b + 1) % 2 for b in range(2)] for a in range(2)],
                   [1, 0]),
    ))
    out.append(("z4_group_truss",
                make_truss(cyclic(4), cyclic(4).mul, [0, 1, 2, 3])))
    return out


def get(name: str) -> CorpusEntry:
    for entry in corpus():
        if entry.name == name:
            return entry
    raise KeyError(name)
