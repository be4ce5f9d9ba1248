"""Group-algebra linearization of twisted structures over the rationals.

Everything here lives in Q[G] with the group-like coproduct d(g) = g (x) g,
counit eps(g) = 1 and antipode S(g) = g^-1. A left twisted structure whose
cocycle fixes the identity extends linearly to this algebra; the Hopf-level
laws

  (h1)  x |> (y z) = (x_1 |> y)(x_2 |> z)
  (h2)  (x o y) |> z = x |> (y |> z)
  (h3)  phi(x o y) = x o phi(y)

collapse on the basis to the table-level laws, and the convolution inverse
of the left action is just the inverse permutation of each action row. The
span of the cocycle image then carries its own Hopf structure whose antipode
sends a basis element to its local inverse datum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from twistpost.errors import (
    CocycleNotNormalized,
    InternalInconsistency,
    InvalidStructure,
)
from twistpost.groups import FiniteGroup, make_group
from twistpost.tpg import (
    TwistedPostGroup,
    compose_circ,
    make_tpg,
    sub_adjacent,
)


class GroupAlgebra:
    """Q[G] with sparse elements: {basis index: nonzero Fraction}."""

    def __init__(self, group: FiniteGroup):
        self.group = group

    def element(self, coeffs: dict) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self, {
            g: Fraction(c) for g, c in coeffs.items() if c != 0
        })

    def basis(self, g: int) -> "GroupAlgebraElement":
        return self.element({g: 1})

    def zero(self) -> "GroupAlgebraElement":
        return self.element({})

    def one(self) -> "GroupAlgebraElement":
        return self.basis(self.group.identity)


@dataclass(frozen=True)
class GroupAlgebraElement:
    algebra: GroupAlgebra
    coeffs: dict = field(default_factory=dict)

    def __add__(self, other):
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, Fraction(0)) + c
        return self.algebra.element(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, Fraction(0)) - c
        return self.algebra.element(out)

    def scale(self, c):
        c = Fraction(c)
        return self.algebra.element({g: c * x for g, x in self.coeffs.items()})

    def __mul__(self, other):
        mul = self.algebra.group.mul
        out: dict = {}
        for g, cg in self.coeffs.items():
            for h, ch in other.coeffs.items():
                k = mul[g][h]
                out[k] = out.get(k, Fraction(0)) + cg * ch
        return self.algebra.element(out)

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def counit(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def coproduct(self) -> dict:
        """Sparse tensor-square: {(g, g): c} under the group-like coproduct."""
        return {(g, g): c for g, c in self.coeffs.items()}

    def tensor_square(self) -> dict:
        """Sparse x (x) x."""
        out: dict = {}
        for g, cg in self.coeffs.items():
            for h, ch in self.coeffs.items():
                out[(g, h)] = out.get((g, h), Fraction(0)) + cg * ch
        return {k: v for k, v in out.items() if v != 0}

    def antipode(self) -> "GroupAlgebraElement":
        inv = self.algebra.group.inv
        return self.algebra.element({inv[g]: c for g, c in self.coeffs.items()})

    def is_group_like(self) -> bool:
        """d(x) = x (x) x and eps(x) = 1."""
        return self.coproduct() == self.tensor_square() and self.counit() == 1


@dataclass(frozen=True)
class GroupAlgebraTPHA:
    """A left twisted structure extended to Q[G], with the action inverses."""

    base: TwistedPostGroup
    algebra: GroupAlgebra
    circ: tuple            # derived o-table on the basis
    tri_inverse: tuple     # row a -> inverse permutation of the action row

    @property
    def n(self) -> int:
        return self.base.n

    # linear / bilinear extensions of the table operations ------------------

    def act(self, x: GroupAlgebraElement, y: GroupAlgebraElement) -> GroupAlgebraElement:
        tri = self.base.tri
        out: dict = {}
        for g, cg in x.coeffs.items():
            for h, ch in y.coeffs.items():
                k = tri[g][h]
                out[k] = out.get(k, Fraction(0)) + cg * ch
        return self.algebra.element(out)

    def cocycle(self, x: GroupAlgebraElement) -> GroupAlgebraElement:
        phi = self.base.phi
        out: dict = {}
        for g, c in x.coeffs.items():
            k = phi[g]
            out[k] = out.get(k, Fraction(0)) + c
        return self.algebra.element(out)

    def circ_op(self, x: GroupAlgebraElement, y: GroupAlgebraElement) -> GroupAlgebraElement:
        circ = self.circ
        out: dict = {}
        for g, cg in x.coeffs.items():
            for h, ch in y.coeffs.items():
                k = circ[g][h]
                out[k] = out.get(k, Fraction(0)) + cg * ch
        return self.algebra.element(out)


def linearize(t: TwistedPostGroup) -> GroupAlgebraTPHA:
    """Extend a left twisted structure with a normalised cocycle to Q[G].

    The basis-level laws (h1)-(h3) are re-verified exhaustively, and the
    convolution-inverse data of the action is computed as the inverse of
    each row permutation. Raises CocycleNotNormalized when the cocycle
    moves the group identity.
    """
    if not t.is_left_twisted():
        raise InvalidStructure("linearization needs a left twisted structure")
    if t.phi[t.group.identity] != t.group.identity:
        raise CocycleNotNormalized(
            f"cocycle sends identity {t.group.identity} to {t.phi[t.group.identity]}"
        )
    n = t.n
    mul = t.group.mul
    tri = t.tri
    circ = compose_circ(t.group, t.tri, t.phi)

    for a, b, c in product(range(n), repeat=3):
        if tri[a][mul[b][c]] != mul[tri[a][b]][tri[a][c]]:
            raise InternalInconsistency(f"(h1) fails on basis at {(a, b, c)}")
        if tri[circ[a][b]][c] != tri[a][tri[b][c]]:
            raise InternalInconsistency(f"(h2) fails on basis at {(a, b, c)}")
    for a, b in product(range(n), repeat=2):
        if t.phi[circ[a][b]] != circ[a][t.phi[b]]:
            raise InternalInconsistency(f"(h3) fails on basis at {(a, b)}")

    tri_inverse = []
    for a in range(n):
        row = tri[a]
        ir = [0] * n
        for b in range(n):
            ir[row[b]] = b
        tri_inverse.append(tuple(ir))

    return GroupAlgebraTPHA(
        base=t,
        algebra=GroupAlgebra(t.group),
        circ=circ,
        tri_inverse=tuple(tri_inverse),
    )


def hopf_truss_roundtrip(h: GroupAlgebraTPHA) -> bool:
    """Build the truss-side operation on the basis, check its cocycle law

        g o (y z) = (g o y) * S(phi(g)) * (g o z),

    convert back through x |> y = S(phi(x_1)) (x_2 o y), and compare with
    the original action entrywise.
    """
    t = h.base
    n = h.n
    mul = t.group.mul
    inv = t.group.inv
    circ = h.circ

    for g, y, z in product(range(n), repeat=3):
        lhs = circ[g][mul[y][z]]
        rhs = mul[mul[circ[g][y]][inv[t.phi[g]]]][circ[g][z]]
        if lhs != rhs:
            return False

    for g, y in product(range(n), repeat=2):
        back = mul[inv[t.phi[g]]][circ[g][y]]
        if back != t.tri[g][y]:
            return False
    return True


@dataclass(frozen=True)
class SubAdjacentHopf:
    """The Hopf structure carried by the span of the cocycle image."""

    members: tuple[int, ...]          # basis of the image, sorted
    group: FiniteGroup                # (image, o) as a validated group
    antipode: dict                    # g -> S'(g) on the image basis
    closure_ok: bool
    unital_ok: bool
    antipode_left_ok: bool
    antipode_right_ok: bool
    antipode_is_dagger: bool
    involutive_ok: bool
    cocommutative: bool               # structural on a group algebra
    commutative: bool                 # informational only
    witness: tuple | None = None

    @property
    def all_pass(self) -> bool:
        return (self.closure_ok and self.unital_ok and self.antipode_left_ok
                and self.antipode_right_ok and self.antipode_is_dagger
                and self.involutive_ok)


def sub_adjacent_hopf(h: GroupAlgebraTPHA) -> SubAdjacentHopf:
    """Restrict the derived operation to the cocycle image and verify the
    unit, antipode and involutivity laws on that basis."""
    t = h.base
    n = h.n
    circ = h.circ
    ident = t.group.identity
    members = tuple(sorted(set(t.phi)))
    member_set = set(members)
    witness = None

    closure = True
    for g, k in product(members, repeat=2):
        if circ[g][k] not in member_set:
            closure = False
            witness = ("closure", g, k)
            break

    unital = True
    for g in members:
        if circ[ident][g] != g or circ[g][ident] != g:
            unital = False
            witness = witness or ("unital", g)
            break

    sub = sub_adjacent(t)
    antipode = {}
    for g in members:
        antipode[g] = h.tri_inverse[g][t.group.inv[t.phi[g]]]

    left_ok = all(circ[g][antipode[g]] == ident for g in members)
    right_ok = all(circ[antipode[g]][g] == ident for g in members)
    if not left_ok or not right_ok:
        witness = witness or ("antipode", next(
            g for g in members
            if circ[g][antipode[g]] != ident or circ[antipode[g]][g] != ident
        ))
    dagger_ok = all(antipode[g] == sub.dagger[g] for g in members)
    involutive = all(antipode[antipode[g]] == g for g in members)

    local = {g: i for i, g in enumerate(members)}
    table = [[local[circ[x][y]] for y in members] for x in members] if closure else None
    grp = None
    if table is not None:
        try:
            grp = make_group(table, labels=[t.group.label(g) for g in members])
        except Exception as exc:
            raise InternalInconsistency(
                f"cocycle image is not a group under the derived operation: {exc}"
            ) from exc

    commutative = bool(grp) and grp.is_abelian()

    return SubAdjacentHopf(
        members=members,
        group=grp,
        antipode=antipode,
        closure_ok=closure,
        unital_ok=unital,
        antipode_left_ok=left_ok,
        antipode_right_ok=right_ok,
        antipode_is_dagger=dagger_ok,
        involutive_ok=involutive,
        cocommutative=True,
        commutative=commutative,
        witness=witness,
    )


def group_likes(h: GroupAlgebraTPHA) -> TwistedPostGroup:
    """Recover the table-level structure from the algebra's group-likes.

    Over Q[G] with the group-like coproduct the group-like elements are
    exactly the basis; each candidate is checked symbolically, the tables
    are rebuilt from the linear operations restricted to them, and the
    result is asserted equal to the base structure entrywise.
    """
    n = h.n
    alg = h.algebra
    basis = [alg.basis(g) for g in range(n)]
    for x in basis:
        if not x.is_group_like():
            raise InternalInconsistency(f"basis element {x} is not group-like")

    index = {}
    for g, x in enumerate(basis):
        index[frozenset(x.coeffs.items())] = g

    def as_basis(x: GroupAlgebraElement) -> int:
        key = frozenset(x.coeffs.items())
        if key not in index:
            raise InternalInconsistency("operation left the group-like locus")
        return index[key]

    mul_t = tuple(
        tuple(as_basis(basis[a] * basis[b]) for b in range(n)) for a in range(n)
    )
    tri_t = tuple(
        tuple(as_basis(h.act(basis[a], basis[b])) for b in range(n)) for a in range(n)
    )
    phi_t = tuple(as_basis(h.cocycle(basis[a])) for a in range(n))

    rebuilt = make_tpg(make_group(mul_t, labels=h.base.group.labels), tri_t, phi_t)
    if (rebuilt.group.mul != h.base.group.mul or rebuilt.tri != h.base.tri
            or rebuilt.phi != h.base.phi):
        raise InternalInconsistency("recovered structure differs from the base")
    return rebuilt
