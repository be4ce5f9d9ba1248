"""Twisted post Lie algebras over exact rationals.

Structure data lives in a fixed basis e_0..e_{d-1}: a bilinear operation is
a d x d x d array of Fractions (coeffs[i][j][k] = coefficient of e_k in
op(e_i, e_j)) and the linear map phi is a d x d matrix whose row i holds
the coordinates of phi(e_i). Every law is bilinear or trilinear in its
arguments, so checking it on basis tuples is checking it everywhere; all
arithmetic is exact and there are no tolerances anywhere in this module.

The defining laws, written with x |> y for the second operation:

  (t1)  x |> [y,z] = [x |> y, z] + [y, x |> z]
  (t2)  ([px,py] + x |> py - y |> px) |> z = x |> (y |> z) - y |> (x |> z)
  (t3)  p(1/2 [px,y] + 1/2 [x,py] + x |> y - y |> x)
            = [px,py] + x |> py - y |> px
  (t4)  p(x) |> y = x |> y
  (t5)  p(p(x)) = p(x)

with p = phi. The right side of (t3) is the derived bracket [x,y]' used
throughout; the half factors are why the base field must have
characteristic different from two.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from twistpost.errors import DimensionMismatch, InternalInconsistency, InvalidStructure

HALF = Fraction(1, 2)

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]
Tensor = tuple[tuple[Vector, ...], ...]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def as_tensor(coeffs) -> Tensor:
    return tuple(
        tuple(tuple(_frac(x) for x in vec) for vec in plane) for plane in coeffs
    )


def as_matrix(rows) -> Matrix:
    return tuple(tuple(_frac(x) for x in row) for row in rows)


def zero_vector(d: int) -> Vector:
    return (Fraction(0),) * d


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(c, u: Vector) -> Vector:
    c = _frac(c)
    return tuple(c * a for a in u)

def is_zero(u: Vector) -> bool:
    return all(a == 0 for a in u)


def bilinear(tensor: Tensor, u: Vector, v: Vector) -> Vector:
    """Evaluate the bilinear operation encoded by ``tensor`` at (u, v)."""
    d = len(tensor)
    out = [Fraction(0)] * d
    for i in range(d):
        ci = u[i]
        if ci == 0:
            continue
        plane = tensor[i]
        for j in range(d):
            cj = v[j]
            if cj == 0:
                continue
            w = plane[j]
            c = ci * cj
            for k in range(d):
                if w[k]:
                    out[k] += c * w[k]
    return tuple(out)


def apply_matrix(m: Matrix, u: Vector) -> Vector:
    d = len(m)
    out = [Fraction(0)] * d
    for i in range(d):
        if u[i] == 0:
            continue
        row = m[i]
        for k in range(d):
            if row[k]:
                out[k] += u[i] * row[k]
    return tuple(out)


def basis_vector(d: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(d))


@dataclass(frozen=True)
class TwistedPostLieAlgebra:
    dim: int
    bracket: Tensor
    tri: Tensor
    phi: Matrix


def make_tpla(dim: int, bracket, tri, phi) -> TwistedPostLieAlgebra:
    bracket = as_tensor(bracket)
    tri = as_tensor(tri)
    phi = as_matrix(phi)
    for name, tensor in (("bracket", bracket), ("tri", tri)):
        if len(tensor) != dim or any(
            len(plane) != dim or any(len(vec) != dim for vec in plane)
            for plane in tensor
        ):
            raise DimensionMismatch(f"{name} tensor is not {dim}^3")
    if len(phi) != dim or any(len(row) != dim for row in phi):
        raise DimensionMismatch("phi matrix does not match dimension")
    return TwistedPostLieAlgebra(dim=dim, bracket=bracket, tri=tri, phi=phi)


@dataclass(frozen=True)
class TplaReport:
    antisymmetric: bool
    jacobi: bool
    law1: bool
    law2: bool
    law3: bool
    law4: bool
    law5: bool
    witness: dict | None = None   # name -> (indices, lhs, rhs) for first failure

    @property
    def valid(self) -> bool:
        return (self.antisymmetric and self.jacobi and self.law1 and self.law2
                and self.law3 and self.law4 and self.law5)

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "antisymmetric": self.antisymmetric,
            "jacobi": self.jacobi,
            "law1": self.law1,
            "law2": self.law2,
            "law3": self.law3,
            "law4": self.law4,
            "law5": self.law5,
            "witness": {
                k: {"at": v[0], "lhs": [str(x) for x in v[1]],
                    "rhs": [str(x) for x in v[2]]}
                for k, v in (self.witness or {}).items()
            },
        }


def verify_tpla(L: TwistedPostLieAlgebra) -> TplaReport:
    d = L.dim
    rng = range(d)
    br, tr, ph = L.bracket, L.tri, L.phi
    witness: dict = {}

    def note(name, at, lhs, rhs):
        if name not in witness:
            witness[name] = (at, lhs, rhs)

    antisym = True
    for i, j in product(rng, repeat=2):
        lhs = br[i][j]
        rhs = vec_scale(-1, br[j][i])
        if lhs != rhs:
            antisym = False
            note("antisymmetric", (i, j), lhs, rhs)
            break

    jacobi = True
    for i, j, k in product(rng, repeat=3):
        total = vec_add(
            vec_add(
                bilinear(br, basis_vector(d, i), br[j][k]),
                bilinear(br, basis_vector(d, j), br[k][i]),
            ),
            bilinear(br, basis_vector(d, k), br[i][j]),
        )
        if not is_zero(total):
            jacobi = False
            note("jacobi", (i, j, k), total, zero_vector(d))
            break

    phi_rows = ph  # row i = coordinates of phi(e_i)

    law1 = True
    for i, j, k in product(rng, repeat=3):
        lhs = bilinear(tr, basis_vector(d, i), br[j][k])
        rhs = vec_add(
            bilinear(br, tr[i][j], basis_vector(d, k)),
            bilinear(br, basis_vector(d, j), tr[i][k]),
        )
        if lhs != rhs:
            law1 = False
            note("law1", (i, j, k), lhs, rhs)
            break

    def derived(i: int, j: int) -> Vector:
        # [p(ei), p(ej)] + ei |> p(ej) - ej |> p(ei)
        return vec_add(
            bilinear(br, phi_rows[i], phi_rows[j]),
            vec_sub(
                bilinear(tr, basis_vector(d, i), phi_rows[j]),
                bilinear(tr, basis_vector(d, j), phi_rows[i]),
            ),
        )

    law2 = True
    for i, j, k in product(rng, repeat=3):
        lhs = bilinear(tr, derived(i, j), basis_vector(d, k))
        rhs = vec_sub(
            bilinear(tr, basis_vector(d, i), tr[j][k]),
            bilinear(tr, basis_vector(d, j), tr[i][k]),
        )
        if lhs != rhs:
            law2 = False
            note("law2", (i, j, k), lhs, rhs)
            break

    law3 = True
    for i, j in product(rng, repeat=2):
        inner = vec_add(
            vec_add(
                vec_scale(HALF, bilinear(br, phi_rows[i], basis_vector(d, j))),
                vec_scale(HALF, bilinear(br, basis_vector(d, i), phi_rows[j])),
            ),
            vec_sub(tr[i][j], tr[j][i]),
        )
        lhs = apply_matrix(ph, inner)
        rhs = derived(i, j)
        if lhs != rhs:
            law3 = False
            note("law3", (i, j), lhs, rhs)
            break

    law4 = True
    for i, j in product(rng, repeat=2):
        lhs = bilinear(tr, phi_rows[i], basis_vector(d, j))
        rhs = tr[i][j]
        if lhs != rhs:
            law4 = False
            note("law4", (i, j), lhs, rhs)
            break

    law5 = True
    for i in rng:
        lhs = apply_matrix(ph, phi_rows[i])
        if lhs != phi_rows[i]:
            law5 = False
            note("law5", (i,), lhs, phi_rows[i])
            break

    return TplaReport(
        antisymmetric=antisym, jacobi=jacobi,
        law1=law1, law2=law2, law3=law3, law4=law4, law5=law5,
        witness=witness or None,
    )


def sub_adjacent_bracket(L: TwistedPostLieAlgebra) -> Tensor:
    """The derived bracket [x,y]' = [px,py] + x|>py - y|>px as a tensor.

    Also asserts, entrywise on the basis, that the result is again a Lie
    bracket and that phi fixes it; both are consequences of the defining
    laws, so failures raise InternalInconsistency.
    """
    report = verify_tpla(L)
    if not report.valid:
        raise InvalidStructure("sub-adjacent bracket needs a verified instance", report)
    d = L.dim
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            row.append(
                vec_add(
                    bilinear(L.bracket, L.phi[i], L.phi[j]),
                    vec_sub(
                        bilinear(L.tri, basis_vector(d, i), L.phi[j]),
                        bilinear(L.tri, basis_vector(d, j), L.phi[i]),
                    ),
                )
            )
        out.append(tuple(row))
    tensor = tuple(out)

    for i, j in product(range(d), repeat=2):
        if tensor[i][j] != vec_scale(-1, tensor[j][i]):
            raise InternalInconsistency("derived bracket is not antisymmetric")
        if apply_matrix(L.phi, tensor[i][j]) != tensor[i][j]:
            raise InternalInconsistency("phi does not fix the derived bracket")
    for i, j, k in product(range(d), repeat=3):
        total = vec_add(
            vec_add(
                bilinear(tensor, basis_vector(d, i), tensor[j][k]),
                bilinear(tensor, basis_vector(d, j), tensor[k][i]),
            ),
            bilinear(tensor, basis_vector(d, k), tensor[i][j]),
        )
        if not is_zero(total):
            raise InternalInconsistency("derived bracket fails the Jacobi identity")
    return tensor


# ---------------------------------------------------------------------------
# image subalgebra
# ---------------------------------------------------------------------------


def _row_reduce(vectors) -> list[Vector]:
    """Reduced basis (row echelon, exact) of the span of the given vectors."""
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for vec in vectors:
        row = list(vec)
        for piv, b in zip(pivots, basis):
            if row[piv]:
                factor = row[piv] / b[piv]
                row = [x - factor * y for x, y in zip(row, b)]
        lead = next((k for k, x in enumerate(row) if x != 0), None)
        if lead is None:
            continue
        basis.append(row)
        pivots.append(lead)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return [tuple(basis[i]) for i in order]


def _in_span(basis: list[Vector], vec: Vector) -> bool:
    row = list(vec)
    for b in basis:
        piv = next(k for k, x in enumerate(b) if x != 0)
        if row[piv]:
            factor = row[piv] / b[piv]
            row = [x - factor * y for x, y in zip(row, b)]
    return all(x == 0 for x in row)


@dataclass(frozen=True)
class ImageReport:
    basis: tuple[Vector, ...]
    closed: bool
    witness: tuple | None = None


def phi_image_subalgebra(L: TwistedPostLieAlgebra) -> ImageReport:
    """Basis of phi's image plus closure of the derived bracket on it."""
    report = verify_tpla(L)
    if not report.valid:
        raise InvalidStructure("image subalgebra needs a verified instance", report)
    basis = _row_reduce(L.phi)
    derived = sub_adjacent_bracket(L)
    witness = None
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            w = bilinear(derived, u, v)
            if not _in_span(basis, w):
                witness = (i, j)
                break
        if witness:
            break
    return ImageReport(basis=tuple(basis), closed=witness is None, witness=witness)


def specialize_phi_identity(L: TwistedPostLieAlgebra) -> TwistedPostLieAlgebra:
    """Same operations with phi replaced by the identity matrix."""
    d = L.dim
    ident = tuple(basis_vector(d, i) for i in range(d))
    return TwistedPostLieAlgebra(dim=d, bracket=L.bracket, tri=L.tri, phi=ident)


# ---------------------------------------------------------------------------
# instance generator
# ---------------------------------------------------------------------------


def _idempotent_matrices(d: int) -> list[Matrix]:
    """Small idempotent matrices used as cocycle candidates: the identity,
    zero, and all 0/1 diagonal projections, plus a few shear-conjugated
    projections with entries in {-1, 0, 1}."""
    out = []
    for mask in product((0, 1), repeat=d):
        out.append(tuple(
            tuple(Fraction(1) if (i == j and mask[i]) else Fraction(0)
                  for j in range(d))
            for i in range(d)
        ))
    if d >= 2:
        extras = [
            [[1, 1], [0, 0]],
            [[1, 0], [1, 0]],
            [[0, 1], [0, 1]],
            [[0, 0], [1, 1]],
        ]
        for m in extras:
            mat = [[Fraction(0)] * d for _ in range(d)]
            for i in range(2):
                for j in range(2):
                    mat[i][j] = Fraction(m[i][j])
            mat = tuple(tuple(row) for row in mat)
            sq = tuple(apply_matrix(mat, row) for row in mat)
            if sq == mat:
                out.append(mat)
    seen = []
    for m in out:
        if m not in seen:
            seen.append(m)
    return seen


def random_tpla_search(d: int, seed: int, budget: int) -> list[TwistedPostLieAlgebra]:
    """Deterministic random search over small-integer structure tensors.

    Draws antisymmetric brackets and action tensors with entries in
    {-1, 0, 1} and a cocycle from the idempotent pool, keeps whatever
    passes verification, and returns the distinct hits in draw order.
    Reproducible given (seed, budget); budget counts candidate draws.
    """
    if d > 4:
        raise DimensionMismatch("random search supports dimension at most 4")
    rng = random.Random(seed)
    idempotents = _idempotent_matrices(d)
    hits: list[TwistedPostLieAlgebra] = []
    seen = set()
    for _ in range(budget):
        bracket = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
        for i in range(d):
            for j in range(i + 1, d):
                vec = [Fraction(rng.choice((-1, 0, 0, 1))) for _ in range(d)]
                bracket[i][j] = vec
                bracket[j][i] = [-x for x in vec]
        tri = [
            [[Fraction(rng.choice((-1, 0, 0, 1))) for _ in range(d)]
             for _ in range(d)]
            for _ in range(d)
        ]
        phi = rng.choice(idempotents)
        cand = make_tpla(d, bracket, tri, phi)
        if verify_tpla(cand).valid:
            key = (cand.bracket, cand.tri, cand.phi)
            if key not in seen:
                seen.add(key)
                hits.append(cand)
    return hits
