"""Twisted post groups: classification, sub-adjacent data, inner structure.

A left structure on a group (G, *) is a pair of tables: a binary operation
``tri`` (written a |> b) and a unary map ``phi``, with the derived operation
a o b = phi(a) * (a |> b). Classification checks, exhaustively:

  rows_homomorphic   every map b -> a |> b preserves *
  rows_bijective     every such map is a bijection
  action_associative (a o b) |> c = a |> (b |> c)
  cocycle_compatible phi(a o b) = a o phi(b)

"twisted" needs all four, "weak" drops bijectivity. Right structures mirror
this with column maps a -> a <| b and a o b = (a <| b) * phi(b); a two-sided
structure is a left and a right structure sharing the same derived o-table.

Every report carries the lexicographically first witness for each failing
law, so error messages are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from twistpost._kernels import left_scan, right_scan
from twistpost.errors import (
    DimensionMismatch,
    InternalInconsistency,
    InvalidStructure,
)
from twistpost.groups import FiniteGroup, Table, _as_table

LEFT_TWISTED = "left_twisted"
LEFT_WEAK = "left_weak"
RIGHT_TWISTED = "right_twisted"
RIGHT_WEAK = "right_weak"
TWO_SIDED_TWISTED = "two_sided_twisted"
TWO_SIDED_WEAK = "two_sided_weak"


@dataclass(frozen=True)
class ClassificationReport:
    side: str  # "left" or "right"
    rows_homomorphic: bool
    rows_bijective: bool
    action_associative: bool
    cocycle_compatible: bool
    witness_homomorphic: tuple | None = None
    witness_bijective: int | None = None
    witness_associative: tuple | None = None
    witness_cocycle: tuple | None = None

    @property
    def twisted(self) -> bool:
        return (self.rows_homomorphic and self.rows_bijective
                and self.action_associative and self.cocycle_compatible)

    @property
    def weak(self) -> bool:
        return (self.rows_homomorphic and self.action_associative
                and self.cocycle_compatible)

    @property
    def kind(self) -> str | None:
        if self.twisted:
            return LEFT_TWISTED if self.side == "left" else RIGHT_TWISTED
        if self.weak:
            return LEFT_WEAK if self.side == "left" else RIGHT_WEAK
        return None

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "kind": self.kind,
            "rows_homomorphic": self.rows_homomorphic,
            "rows_bijective": self.rows_bijective,
            "action_associative": self.action_associative,
            "cocycle_compatible": self.cocycle_compatible,
            "witness_homomorphic": self.witness_homomorphic,
            "witness_bijective": self.witness_bijective,
            "witness_associative": self.witness_associative,
            "witness_cocycle": self.witness_cocycle,
        }


@dataclass(frozen=True)
class TwoSidedReport:
    left: ClassificationReport
    right: ClassificationReport
    same_circ: bool
    witness_circ: tuple | None
    abelian: bool

    @property
    def kind(self) -> str | None:
        if not self.same_circ:
            return None
        if self.left.twisted and self.right.twisted:
            return TWO_SIDED_TWISTED
        if self.left.weak and self.right.weak:
            return TWO_SIDED_WEAK
        return None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "abelian": self.abelian,
            "same_sub_adjacent": self.same_circ,
            "witness_sub_adjacent": self.witness_circ,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }


def _check_sizes(group: FiniteGroup, table: Table, phi):
    n = group.n
    if len(table) != n or any(len(row) != n for row in table):
        raise DimensionMismatch("operation table size does not match group order")
    if any(not 0 <= x < n for row in table for x in row):
        raise DimensionMismatch("operation table entry out of range")
    if len(phi) != n or any(not 0 <= x < n for x in phi):
        raise DimensionMismatch("cocycle length or entry out of range")


def compose_circ(group: FiniteGroup, tri: Table, phi) -> Table:
    """Left sub-adjacent table: circ[a][b] = phi(a) * (a |> b)."""
    mul = group.mul
    return tuple(
        tuple(mul[phi[a]][x] for x in tri[a]) for a in range(group.n)
    )


def compose_circ_right(group: FiniteGroup, tri_right: Table, phi) -> Table:
    """Right sub-adjacent table: circ[a][b] = (a <| b) * phi(b)."""
    mul = group.mul
    n = group.n
    return tuple(
        tuple(mul[tri_right[a][b]][phi[b]] for b in range(n)) for a in range(n)
    )


def classify(group: FiniteGroup, tri, phi) -> ClassificationReport:
    tri = _as_table(tri)
    phi = tuple(int(x) for x in phi)
    _check_sizes(group, tri, phi)
    w_hom, w_bij, w_assoc, w_cocycle = left_scan(group.mul, tri, phi)
    return ClassificationReport(
        side="left",
        rows_homomorphic=w_hom is None,
        rows_bijective=w_bij is None,
        action_associative=w_assoc is None,
        cocycle_compatible=w_cocycle is None,
        witness_homomorphic=w_hom,
        witness_bijective=w_bij,
        witness_associative=w_assoc,
        witness_cocycle=w_cocycle,
    )


def classify_right(group: FiniteGroup, tri_right, phi) -> ClassificationReport:
    tri_right = _as_table(tri_right)
    phi = tuple(int(x) for x in phi)
    _check_sizes(group, tri_right, phi)
    w_hom, w_bij, w_assoc, w_cocycle = right_scan(group.mul, tri_right, phi)
    return ClassificationReport(
        side="right",
        rows_homomorphic=w_hom is None,
        rows_bijective=w_bij is None,
        action_associative=w_assoc is None,
        cocycle_compatible=w_cocycle is None,
        witness_homomorphic=w_hom,
        witness_bijective=w_bij,
        witness_associative=w_assoc,
        witness_cocycle=w_cocycle,
    )


def classify_two_sided(group: FiniteGroup, tri, tri_right, phi) -> TwoSidedReport:
    left = classify(group, tri, phi)
    right = classify_right(group, tri_right, phi)
    circ_l = compose_circ(group, _as_table(tri), tuple(phi))
    circ_r = compose_circ_right(group, _as_table(tri_right), tuple(phi))
    witness = None
    for a, b in product(range(group.n), repeat=2):
        if circ_l[a][b] != circ_r[a][b]:
            witness = (a, b)
            break
    return TwoSidedReport(
        left=left,
        right=right,
        same_circ=witness is None,
        witness_circ=witness,
        abelian=group.is_abelian(),
    )


@dataclass(frozen=True)
class TwistedPostGroup:
    """A verified structure; ``kind`` is always recomputed, never trusted."""

    group: FiniteGroup
    phi: tuple[int, ...]
    tri: Table | None = None
    tri_right: Table | None = None
    kind: str | None = None
    right_kind: str | None = None
    two_sided_kind: str | None = None

    @property
    def n(self) -> int:
        return self.group.n

    def is_left(self) -> bool:
        return self.tri is not None

    def is_left_twisted(self) -> bool:
        return self.kind == LEFT_TWISTED

    def is_two_sided(self) -> bool:
        return self.two_sided_kind is not None

    def is_abelian(self) -> bool:
        return self.group.is_abelian()

    def best_kind(self) -> str:
        return self.two_sided_kind or self.kind or self.right_kind


def make_tpg(group: FiniteGroup, tri=None, phi=None, tri_right=None) -> TwistedPostGroup:
    """Classify the given tables and wrap them; raises InvalidStructure
    unless the data is at least a weak structure on its given side(s)."""
    if phi is None:
        raise DimensionMismatch("phi is required")
    if tri is None and tri_right is None:
        raise DimensionMismatch("at least one of tri / tri_right is required")
    phi = tuple(int(x) for x in phi)

    kind = right_kind = two_sided_kind = None
    tri_t = _as_table(tri) if tri is not None else None
    trr_t = _as_table(tri_right) if tri_right is not None else None

    if tri_t is not None and trr_t is not None:
        rep = classify_two_sided(group, tri_t, trr_t, phi)
        kind = rep.left.kind
        right_kind = rep.right.kind
        two_sided_kind = rep.kind
        if kind is None or right_kind is None:
            raise InvalidStructure("tables fail both one-sided classifications", rep)
    elif tri_t is not None:
        rep = classify(group, tri_t, phi)
        kind = rep.kind
        if kind is None:
            raise InvalidStructure("left classification failed", rep)
    else:
        rep = classify_right(group, trr_t, phi)
        right_kind = rep.kind
        if right_kind is None:
            raise InvalidStructure("right classification failed", rep)

    return TwistedPostGroup(
        group=group, phi=phi, tri=tri_t, tri_right=trr_t,
        kind=kind, right_kind=right_kind, two_sided_kind=two_sided_kind,
    )


def trivial_tpg(group: FiniteGroup, two_sided: bool = False) -> TwistedPostGroup:
    """a |> b = b and phi = id; with two_sided also a <| b = a."""
    n = group.n
    tri = tuple(tuple(range(n)) for _ in range(n))
    phi = tuple(range(n))
    tri_right = None
    if two_sided:
        tri_right = tuple(tuple(a for _ in range(n)) for a in range(n))
    return make_tpg(group, tri, phi, tri_right)


# ---------------------------------------------------------------------------
# sub-adjacent data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubAdjacent:
    """The derived operation with its local identities and inverses.

    e[a] is the unique solution of a o e[a] = a, computed as
    Linv_a(phi(a)^-1 * a); dagger[a] = Linv_a(phi(a)^-1 * e[a]) is the local
    inverse datum. For weak structures both are None at every a whose row
    is not invertible; ``undefined`` lists those a.
    """

    circ: Table
    e: tuple[int | None, ...]
    dagger: tuple[int | None, ...]
    undefined: tuple[int, ...]


def sub_adjacent(t: TwistedPostGroup) -> SubAdjacent:
    if t.tri is None:
        raise InvalidStructure("sub-adjacent data needs a left structure")
    group = t.group
    n = group.n
    mul = group.mul
    inv = group.inv
    circ = compose_circ(group, t.tri, t.phi)

    e = []
    dagger = []
    undefined = []
    for a in range(n):
        row = t.tri[a]
        if len(set(row)) != n:
            e.append(None)
            dagger.append(None)
            undefined.append(a)
            continue
        inv_row = [0] * n
        for b in range(n):
            inv_row[row[b]] = b
        ea = inv_row[mul[inv[t.phi[a]]][a]]
        da = inv_row[mul[inv[t.phi[a]]][ea]]
        e.append(ea)
        dagger.append(da)
    return SubAdjacent(circ=circ, e=tuple(e), dagger=tuple(dagger),
                       undefined=tuple(undefined))


_LAW_NAMES = (
    "circ_associative",
    "left_cancellative",
    "local_identity_absorbs",      # a o e_a = a
    "local_inverse",               # a o a+ = e_a
    "cocycle_kills_idempotents",   # phi(e_a) = identity
    "idempotent_acts_trivially",   # e_a |> b = b
    "idempotent_left_neutral",     # e_a o b = b
    "idempotent_of_product",       # e_{a o b} = e_b
)


@dataclass(frozen=True)
class LawReport:
    """Outcome of the eight derived-law checks on a twisted structure.

    These laws are consequences of the axioms, so any failure on a
    classified-twisted input indicates an internal inconsistency; they are
    reported rather than raised so corrupted inputs can be diagnosed.
    """

    results: dict = field(default_factory=dict)  # name -> (ok, witness)

    @property
    def all_pass(self) -> bool:
        return all(ok for ok, _ in self.results.values())

    def failures(self):
        return {k: w for k, (ok, w) in self.results.items() if not ok}

    def to_json(self) -> dict:
        return {k: {"ok": ok, "witness": w} for k, (ok, w) in self.results.items()}


def check_subadjacent_laws(t: TwistedPostGroup) -> LawReport:
    if not t.is_left_twisted():
        raise InvalidStructure("law suite needs a left twisted structure")
    group = t.group
    n = group.n
    rng = range(n)
    sub = sub_adjacent(t)
    circ, e, dag = sub.circ, sub.e, sub.dagger
    results = {}

    w = None
    for a, b, c in product(rng, repeat=3):
        if circ[circ[a][b]][c] != circ[a][circ[b][c]]:
            w = (a, b, c)
            break
    results["circ_associative"] = (w is None, w)

    w = None
    for a in rng:
        if len(set(circ[a])) != n:
            w = a
            break
    results["left_cancellative"] = (w is None, w)

    w = next((a for a in rng if circ[a][e[a]] != a), None)
    results["local_identity_absorbs"] = (w is None, w)

    w = next((a for a in rng if circ[a][dag[a]] != e[a]), None)
    results["local_inverse"] = (w is None, w)

    w = next((a for a in rng if t.phi[e[a]] != group.identity), None)
    results["cocycle_kills_idempotents"] = (w is None, w)

    w = None
    for a, b in product(rng, repeat=2):
        if t.tri[e[a]][b] != b:
            w = (a, b)
            break
    results["idempotent_acts_trivially"] = (w is None, w)

    w = None
    for a, b in product(rng, repeat=2):
        if circ[e[a]][b] != b:
            w = (a, b)
            break
    results["idempotent_left_neutral"] = (w is None, w)

    w = None
    for a, b in product(rng, repeat=2):
        if e[circ[a][b]] != e[b]:
            w = (a, b)
            break
    results["idempotent_of_product"] = (w is None, w)

    return LawReport(results=results)


# ---------------------------------------------------------------------------
# inner structure: components and decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """A piece of the partition: the o-group attached to one local identity."""

    members: tuple[int, ...]          # global indices, sorted
    idempotent: int                   # e_a, the component's identity
    group: FiniteGroup                # the o-operation restricted to members
    local_index: dict                 # global -> local position


def component(t: TwistedPostGroup, a: int) -> Component:
    """The set {b o e_a | b in G} with the induced group structure."""
    if not t.is_left_twisted():
        raise InvalidStructure("components need a left twisted structure")
    from twistpost.groups import make_group

    sub = sub_adjacent(t)
    circ = sub.circ
    ea = sub.e[a]
    members = tuple(sorted({circ[b][ea] for b in range(t.n)}))
    local = {g: i for i, g in enumerate(members)}
    table = [[local[circ[x][y]] for y in members] for x in members]
    try:
        grp = make_group(table, labels=[t.group.label(g) for g in members])
    except Exception as exc:  # a failure here contradicts the classification
        raise InternalInconsistency(
            f"component at {a} is not a group under o: {exc}"
        ) from exc
    if members[grp.identity] != ea:
        raise InternalInconsistency("component identity differs from local identity")
    # the predicted inverse x -> x+ o e_a must match the group inverse
    for x in members:
        predicted = circ[sub.dagger[x]][ea]
        if predicted != members[grp.inv[local[x]]]:
            raise InternalInconsistency("component inverse differs from dagger formula")
    return Component(members=members, idempotent=ea, group=grp, local_index=local)


@dataclass(frozen=True)
class Decomposition:
    """Partition of G into o-groups plus the product-form isomorphism."""

    components: tuple[Component, ...]   # keyed by idempotent, sorted
    idempotents: tuple[int, ...]        # the set K = {e_a}, sorted
    base: Component                     # the component of the group identity
    psi: tuple[tuple[int, int], ...]    # a -> (a o e_1, e_a)
    partition_ok: bool
    psi_bijective: bool
    psi_multiplicative: bool
    pairwise_isomorphic: bool
    witness: tuple | None = None

    @property
    def all_pass(self) -> bool:
        return (self.partition_ok and self.psi_bijective
                and self.psi_multiplicative and self.pairwise_isomorphic)


def decompose(t: TwistedPostGroup) -> Decomposition:
    if not t.is_left_twisted():
        raise InvalidStructure("decomposition needs a left twisted structure")
    n = t.n
    rng = range(n)
    sub = sub_adjacent(t)
    circ, e = sub.circ, sub.e

    idempotents = tuple(sorted(set(e)))
    comps = tuple(component(t, next(a for a in rng if e[a] == k))
                  for k in idempotents)
    witness = None

    # the components must be pairwise disjoint and exhaust G
    seen: dict[int, int] = {}
    partition_ok = True
    for comp in comps:
        for x in comp.members:
            if x in seen:
                partition_ok = False
                witness = witness or ("overlap", x)
            seen[x] = comp.idempotent
    if len(seen) != n:
        partition_ok = False
        witness = witness or ("missing", next(x for x in rng if x not in seen))

    e1 = e[t.group.identity]
    base = next(c for c in comps if c.idempotent == e1)
    psi = tuple((circ[a][e1], e[a]) for a in rng)

    psi_bijective = len(set(psi)) == n and all(
        img in base.members for img, _ in psi
    ) and len(base.members) * len(idempotents) == n

    psi_multiplicative = True
    for a, b in product(rng, repeat=2):
        lhs = psi[circ[a][b]]
        x1, _ = psi[a]
        x2, k2 = psi[b]
        rhs = (circ[x1][x2], k2)
        if lhs != rhs:
            psi_multiplicative = False
            witness = witness or ("psi", a, b)
            break

    # every map x -> x o e_k is a group isomorphism between components
    pairwise = True
    for src in comps:
        for dst in comps:
            imgs = [circ[x][dst.idempotent] for x in src.members]
            if sorted(imgs) != list(dst.members):
                pairwise = False
                witness = witness or ("pi_bijective", src.idempotent, dst.idempotent)
                break
            for x, y in product(src.members, repeat=2):
                if circ[circ[x][dst.idempotent]][circ[y][dst.idempotent]] != \
                        circ[circ[x][y]][dst.idempotent]:
                    pairwise = False
                    witness = witness or ("pi_hom", src.idempotent, dst.idempotent, x, y)
                    break
            if not pairwise:
                break
        if not pairwise:
            break

    return Decomposition(
        components=comps,
        idempotents=idempotents,
        base=base,
        psi=psi,
        partition_ok=partition_ok,
        psi_bijective=psi_bijective,
        psi_multiplicative=psi_multiplicative,
        pairwise_isomorphic=pairwise,
        witness=witness,
    )


# ---------------------------------------------------------------------------
# cocycle lemmas and homomorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CocycleReport:
    idempotent: bool                 # phi(phi(a)) = phi(a) for all a
    fixes_identity: bool             # phi(1) = 1
    biconditional_ok: bool           # the two agree on this instance
    fixed_action_ok: bool | None     # a |> b = phi(a) |> b; None unless idempotent
    witness: tuple | None = None

    @property
    def all_pass(self) -> bool:
        return self.biconditional_ok and self.fixed_action_ok in (True, None)


def cocycle_lemmas(t: TwistedPostGroup) -> CocycleReport:
    if not t.is_left_twisted():
        raise InvalidStructure("cocycle lemmas need a left twisted structure")
    phi = t.phi
    idem = all(phi[phi[a]] == phi[a] for a in range(t.n))
    fixes = phi[t.group.identity] == t.group.identity
    fixed_action = None
    witness = None
    if idem:
        fixed_action = True
        for a, b in product(range(t.n), repeat=2):
            if t.tri[a][b] != t.tri[phi[a]][b]:
                fixed_action = False
                witness = (a, b)
                break
    return CocycleReport(
        idempotent=idem,
        fixes_identity=fixes,
        biconditional_ok=idem == fixes,
        fixed_action_ok=fixed_action,
        witness=witness,
    )


@dataclass(frozen=True)
class HomReport:
    mul_ok: bool
    tri_ok: bool
    phi_ok: bool
    circ_ok: bool | None             # induced; only evaluated when ok
    witness_mul: tuple | None = None
    witness_tri: tuple | None = None
    witness_phi: int | None = None

    @property
    def ok(self) -> bool:
        return self.mul_ok and self.tri_ok and self.phi_ok


def tpg_homomorphism_check(f, src: TwistedPostGroup, dst: TwistedPostGroup) -> HomReport:
    """Compatibility of a map with *, |> and phi; on success the induced
    o-compatibility is confirmed as well (it must follow)."""
    f = tuple(int(x) for x in f)
    if len(f) != src.n or any(not 0 <= x < dst.n for x in f):
        raise DimensionMismatch("map size does not match")
    if src.tri is None or dst.tri is None:
        raise InvalidStructure("homomorphism check needs left structures")

    w_mul = w_tri = None
    w_phi = None
    for a, b in product(range(src.n), repeat=2):
        if f[src.group.mul[a][b]] != dst.group.mul[f[a]][f[b]]:
            w_mul = (a, b)
            break
    for a, b in product(range(src.n), repeat=2):
        if f[src.tri[a][b]] != dst.tri[f[a]][f[b]]:
            w_tri = (a, b)
            break
    for a in range(src.n):
        if dst.phi[f[a]] != f[src.phi[a]]:
            w_phi = a
            break

    circ_ok = None
    if w_mul is None and w_tri is None and w_phi is None:
        circ_src = compose_circ(src.group, src.tri, src.phi)
        circ_dst = compose_circ(dst.group, dst.tri, dst.phi)
        circ_ok = all(
            f[circ_src[a][b]] == circ_dst[f[a]][f[b]]
            for a, b in product(range(src.n), repeat=2)
        )
        if not circ_ok:
            raise InternalInconsistency(
                "map preserves *, |>, phi but not the derived o-operation"
            )
    return HomReport(
        mul_ok=w_mul is None,
        tri_ok=w_tri is None,
        phi_ok=w_phi is None,
        circ_ok=circ_ok,
        witness_mul=w_mul,
        witness_tri=w_tri,
        witness_phi=w_phi,
    )
