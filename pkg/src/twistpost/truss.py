"""Skew trusses and the two conversions to and from weak twisted structures.

A skew truss binds a group (G, *) and a semigroup (G, o) through a cocycle
phi by the distributivity law

    a o (b * c) = (a o b) * phi(a)^-1 * (a o c).

Putting b = c = 1 forces phi(a) = a o 1, so the cocycle can always be
inferred from the tables; the explicit form is the default and inference is
opt-in. The conversions here are entrywise inverse to each other, and a
truss converts to a *twisted* (not merely weak) structure exactly when every
row of its o-table is a permutation (right divisibility).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from twistpost._kernels import assoc_witness
from twistpost.errors import (
    DimensionMismatch,
    InternalInconsistency,
    InvalidStructure,
)
from twistpost.groups import FiniteGroup, Table, _as_table
from twistpost.tpg import (
    LEFT_TWISTED,
    TwistedPostGroup,
    compose_circ,
    make_tpg,
    sub_adjacent,
)


@dataclass(frozen=True)
class SkewTruss:
    group: FiniteGroup
    circ: Table
    phi: tuple[int, ...]
    two_sided: bool = False

    @property
    def n(self) -> int:
        return self.group.n


@dataclass(frozen=True)
class TrussReport:
    associative: bool
    distributive: bool
    right_distributive: bool | None   # only evaluated for two-sided candidates
    abelian: bool | None
    witness_associative: tuple | None = None
    witness_distributive: tuple | None = None
    witness_right: tuple | None = None

    @property
    def valid(self) -> bool:
        base = self.associative and self.distributive
        if self.right_distributive is None:
            return base
        return base and self.right_distributive and bool(self.abelian)

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "associative": self.associative,
            "distributive": self.distributive,
            "right_distributive": self.right_distributive,
            "abelian": self.abelian,
            "witness_associative": self.witness_associative,
            "witness_distributive": self.witness_distributive,
            "witness_right": self.witness_right,
        }


def infer_phi(group: FiniteGroup, circ) -> tuple[int, ...]:
    """The cocycle forced by the distributivity law: phi(a) = a o 1."""
    circ = _as_table(circ)
    return tuple(circ[a][group.identity] for a in range(group.n))


def verify_truss(group: FiniteGroup, circ, phi, two_sided: bool = False) -> TrussReport:
    circ = _as_table(circ)
    phi = tuple(int(x) for x in phi)
    n = group.n
    if len(circ) != n or any(len(r) != n for r in circ):
        raise DimensionMismatch("o-table size does not match group order")
    if len(phi) != n:
        raise DimensionMismatch("cocycle length does not match group order")
    mul = group.mul
    inv = group.inv

    w_assoc = assoc_witness(circ)

    w_dist = None
    for a, b, c in product(range(n), repeat=3):
        lhs = circ[a][mul[b][c]]
        rhs = mul[mul[circ[a][b]][inv[phi[a]]]][circ[a][c]]
        if lhs != rhs:
            w_dist = (a, b, c)
            break

    w_right = None
    abelian = None
    right_ok = None
    if two_sided:
        abelian = group.is_abelian()
        right_ok = True
        for a, b, c in product(range(n), repeat=3):
            lhs = circ[mul[a][b]][c]
            rhs = mul[mul[circ[a][c]][inv[phi[c]]]][circ[b][c]]
            if lhs != rhs:
                right_ok = False
                w_right = (a, b, c)
                break

    return TrussReport(
        associative=w_assoc is None,
        distributive=w_dist is None,
        right_distributive=right_ok,
        abelian=abelian,
        witness_associative=w_assoc,
        witness_distributive=w_dist,
        witness_right=w_right,
    )


def make_truss(group: FiniteGroup, circ, phi=None, two_sided: bool = False,
               infer: bool = False) -> SkewTruss:
    circ = _as_table(circ)
    if phi is None:
        if not infer:
            raise DimensionMismatch("phi is required unless inference is requested")
        phi = infer_phi(group, circ)
    report = verify_truss(group, circ, tuple(phi), two_sided=two_sided)
    if not report.valid:
        raise InvalidStructure("tables do not form a skew truss", report)
    return SkewTruss(group=group, circ=circ, phi=tuple(phi), two_sided=two_sided)


# ---------------------------------------------------------------------------
# conversions
# ---------------------------------------------------------------------------


def tpg_to_truss(t: TwistedPostGroup) -> SkewTruss:
    """The derived o-table of a (possibly weak) left structure is a truss."""
    if t.tri is None:
        raise InvalidStructure("conversion needs a left structure")
    circ = compose_circ(t.group, t.tri, t.phi)
    two_sided = False
    if t.group.is_abelian():
        two_sided = verify_truss(t.group, circ, t.phi, two_sided=True).valid
    report = verify_truss(t.group, circ, t.phi, two_sided=two_sided)
    if not report.valid:
        raise InternalInconsistency(
            f"derived o-table of a classified structure fails the truss law: "
            f"{report.to_json()}"
        )
    return SkewTruss(group=t.group, circ=circ, phi=t.phi, two_sided=two_sided)


def truss_to_weak_tpg(s: SkewTruss) -> TwistedPostGroup:
    """Recover the action table a |> b = phi(a)^-1 * (a o b); at least weak."""
    mul = s.group.mul
    inv = s.group.inv
    n = s.n
    tri = tuple(
        tuple(mul[inv[s.phi[a]]][s.circ[a][b]] for b in range(n)) for a in range(n)
    )
    tri_right = None
    if s.two_sided:
        tri_right = tuple(
            tuple(mul[s.circ[a][b]][inv[s.phi[b]]] for b in range(n)) for a in range(n)
        )
    try:
        return make_tpg(s.group, tri, s.phi, tri_right)
    except InvalidStructure as exc:
        raise InternalInconsistency(
            f"valid truss produced an unclassifiable action table: {exc}"
        ) from exc


def roundtrip_check(x) -> bool:
    """Entrywise identity of convert-and-convert-back, both directions."""
    if isinstance(x, SkewTruss):
        back = tpg_to_truss(truss_to_weak_tpg(x))
        return back.circ == x.circ and back.phi == x.phi and back.group.mul == x.group.mul
    if isinstance(x, TwistedPostGroup):
        if x.tri is None:
            raise InvalidStructure("roundtrip needs a left structure")
        back = truss_to_weak_tpg(tpg_to_truss(x))
        same = back.tri == x.tri and back.phi == x.phi
        if x.tri_right is not None and back.tri_right is not None:
            same = same and back.tri_right == x.tri_right
        return same
    raise TypeError(f"roundtrip_check cannot handle {type(x).__name__}")


def is_right_divisible(s: SkewTruss):
    """True iff every a o (-) is a permutation; else (False, offending row)."""
    n = s.n
    for a in range(n):
        if len(set(s.circ[a])) != n:
            return False, a
    return True, None


@dataclass(frozen=True)
class TrussHomReport:
    """Morphism check; cocycle compatibility is reported separately because
    the defining conditions only involve * and o."""

    mul_ok: bool
    circ_ok: bool
    phi_compatible: bool
    witness_mul: tuple | None = None
    witness_circ: tuple | None = None
    witness_phi: int | None = None

    @property
    def ok(self) -> bool:
        return self.mul_ok and self.circ_ok


def truss_homomorphism_check(f, src: SkewTruss, dst: SkewTruss) -> TrussHomReport:
    f = tuple(int(x) for x in f)
    if len(f) != src.n or any(not 0 <= x < dst.n for x in f):
        raise DimensionMismatch("map size does not match")
    w_mul = w_circ = None
    w_phi = None
    for a, b in product(range(src.n), repeat=2):
        if f[src.group.mul[a][b]] != dst.group.mul[f[a]][f[b]]:
            w_mul = (a, b)
            break
    for a, b in product(range(src.n), repeat=2):
        if f[src.circ[a][b]] != dst.circ[f[a]][f[b]]:
            w_circ = (a, b)
            break
    for a in range(src.n):
        if dst.phi[f[a]] != f[src.phi[a]]:
            w_phi = a
            break
    return TrussHomReport(
        mul_ok=w_mul is None,
        circ_ok=w_circ is None,
        phi_compatible=w_phi is None,
        witness_mul=w_mul,
        witness_circ=w_circ,
        witness_phi=w_phi,
    )


def is_twisted_after_conversion(s: SkewTruss) -> bool:
    """Does the recovered action classify as fully twisted (not just weak)?"""
    return truss_to_weak_tpg(s).kind == LEFT_TWISTED


def weak_tpg_sub_adjacent_matches(t: TwistedPostGroup, s: SkewTruss) -> bool:
    """Diagnostic: the truss o-table of a converted structure matches."""
    return sub_adjacent(t).circ == s.circ
