"""Rota-Baxter systems of groups and their twisted-structure counterparts.

A Rota-Baxter system on (G, *) is a pair of maps B1, B2 with

    B1(a) B1(b) = B1(B1(a) b B2(a))
    B2(b) B2(a) = B2(B1(a) b B2(a))      (note the reversed left-hand side)

for all a, b. Every system induces a left structure via conjugation by
B2(a) with cocycle B1(a)B2(a), and a right structure via conjugation by
B1(b) with the same cocycle. Conversely, a left twisted structure comes
from such a system exactly when every action row is an inner automorphism;
the reconstruction below searches the full centre-coset product instead of
assuming the conjugating element is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from twistpost import config
from twistpost.errors import (
    DimensionMismatch,
    InternalInconsistency,
    InvalidStructure,
    SearchSpaceExceeded,
)
from twistpost.groups import FiniteGroup, inner_automorphisms
from twistpost.tpg import (
    LEFT_TWISTED,
    RIGHT_TWISTED,
    TwistedPostGroup,
    make_tpg,
)


@dataclass(frozen=True)
class RotaBaxterSystem:
    group: FiniteGroup
    b1: tuple[int, ...]
    b2: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.group.n


@dataclass(frozen=True)
class RbsReport:
    law1: bool                      # B1(a)B1(b) = B1(B1(a) b B2(a))
    law2: bool                      # B2(b)B2(a) = B2(B1(a) b B2(a))
    witness1: tuple | None = None
    witness2: tuple | None = None

    @property
    def valid(self) -> bool:
        return self.law1 and self.law2

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "law1": self.law1,
            "law2": self.law2,
            "witness1": self.witness1,
            "witness2": self.witness2,
        }


def verify_rbs(group: FiniteGroup, b1, b2) -> RbsReport:
    b1 = tuple(int(x) for x in b1)
    b2 = tuple(int(x) for x in b2)
    n = group.n
    if len(b1) != n or len(b2) != n:
        raise DimensionMismatch("map length does not match group order")
    if any(not 0 <= x < n for x in b1 + b2):
        raise DimensionMismatch("map entry out of range")
    mul = group.mul

    w1 = w2 = None
    for a, b in product(range(n), repeat=2):
        m = mul[mul[b1[a]][b]][b2[a]]
        if mul[b1[a]][b1[b]] != b1[m]:
            w1 = (a, b)
            break
    for a, b in product(range(n), repeat=2):
        m = mul[mul[b1[a]][b]][b2[a]]
        if mul[b2[b]][b2[a]] != b2[m]:
            w2 = (a, b)
            break
    return RbsReport(law1=w1 is None, law2=w2 is None, witness1=w1, witness2=w2)


def make_rbs(group: FiniteGroup, b1, b2) -> RotaBaxterSystem:
    report = verify_rbs(group, b1, b2)
    if not report.valid:
        raise InvalidStructure("maps do not form a Rota-Baxter system", report)
    return RotaBaxterSystem(group=group, b1=tuple(b1), b2=tuple(b2))


def rbs_to_tpg(r: RotaBaxterSystem) -> TwistedPostGroup:
    """a |> b = B2(a)^-1 b B2(a), phi(a) = B1(a)B2(a); always fully twisted."""
    mul = r.group.mul
    inv = r.group.inv
    n = r.n
    tri = tuple(
        tuple(mul[mul[inv[r.b2[a]]][b]][r.b2[a]] for b in range(n)) for a in range(n)
    )
    phi = tuple(mul[r.b1[a]][r.b2[a]] for a in range(n))
    t = make_tpg(r.group, tri, phi)
    if t.kind != LEFT_TWISTED:
        raise InternalInconsistency(
            f"induced left structure classified as {t.kind}, expected twisted"
        )
    return t


def rbs_to_right_tpg(r: RotaBaxterSystem) -> TwistedPostGroup:
    """a <| b = B1(b) a B1(b)^-1 with the same cocycle; always right twisted."""
    mul = r.group.mul
    inv = r.group.inv
    n = r.n
    tri_right = tuple(
        tuple(mul[mul[r.b1[b]][a]][inv[r.b1[b]]] for b in range(n)) for a in range(n)
    )
    phi = tuple(mul[r.b1[a]][r.b2[a]] for a in range(n))
    t = make_tpg(r.group, tri=None, phi=phi, tri_right=tri_right)
    if t.right_kind != RIGHT_TWISTED:
        raise InternalInconsistency(
            f"induced right structure classified as {t.right_kind}, expected twisted"
        )
    return t


# ---------------------------------------------------------------------------
# reconstruction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NotInner:
    """Returned when some action row is not an inner automorphism."""

    witness: int          # the element a with L_a outside the inner group
    row: tuple[int, ...]  # the offending row


def reconstruct_rbs(t: TwistedPostGroup, bounds: config.Bounds | None = None):
    """All Rota-Baxter systems whose induced structure is exactly t.

    For each a the candidate set T_a = {s : conjugation by s equals the row
    of a} is a centre coset; the search runs over the full product of those
    cosets in lexicographic (a, s) order, prunes with the two system laws
    restricted to already-fixed values, and re-verifies every hit. Returns
    the (possibly capped) solution list, or NotInner when some T_a is empty.
    """
    if not t.is_left_twisted():
        raise InvalidStructure("reconstruction needs a left twisted structure")
    bounds = bounds or config.default_bounds()
    group = t.group
    n = t.n
    mul = group.mul
    inv = group.inv

    conj = {s: row for s, row in inner_automorphisms(group)}
    candidates = []
    for a in range(n):
        row = t.tri[a]
        ts = tuple(s for s in range(n) if conj[s] == row)
        if not ts:
            return NotInner(witness=a, row=row)
        candidates.append(ts)

    space = 1
    for ts in candidates:
        space *= len(ts)
        if space > bounds.reconstruction_product_cap:
            raise SearchSpaceExceeded(
                f"candidate space exceeds {bounds.reconstruction_product_cap}"
            )

    # The derived o-table is fixed by t, and both laws only mention values
    # B1/B2 at a, b and a o b, so partial assignments can be checked early.
    from twistpost.tpg import compose_circ

    circ = compose_circ(group, t.tri, t.phi)
    phi = t.phi

    def b1_of(a, b2a):
        return mul[phi[a]][inv[b2a]]

    solutions: list[RotaBaxterSystem] = []
    assignment: list[int | None] = [None] * n

    def consistent(k: int) -> bool:
        # check every pair whose three participating points are all fixed
        for a in range(k + 1):
            for b in range(k + 1):
                m = circ[a][b]
                if m > k:
                    continue
                b1a = b1_of(a, assignment[a])
                if mul[b1a][b1_of(b, assignment[b])] != b1_of(m, assignment[m]):
                    return False
                if mul[assignment[b]][assignment[a]] != assignment[m]:
                    return False
        return True

    def search(k: int):
        if len(solutions) >= bounds.reconstruction_solution_cap:
            return
        if k == n:
            b2 = tuple(assignment)
            b1 = tuple(b1_of(a, b2[a]) for a in range(n))
            report = verify_rbs(group, b1, b2)
            if report.valid:
                solutions.append(RotaBaxterSystem(group=group, b1=b1, b2=b2))
            return
        for s in candidates[k]:
            assignment[k] = s
            if consistent(k):
                search(k + 1)
            assignment[k] = None

    search(0)

    for sol in solutions:
        back = rbs_to_tpg(sol)
        if back.tri != t.tri or back.phi != t.phi:
            raise InternalInconsistency(
                "reconstructed system does not reproduce the input tables"
            )
    return solutions
