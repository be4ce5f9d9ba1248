"""Finite groups as validated Cayley tables.

Elements are dense indices 0..n-1; optional labels are display-only. The
identity is located by scan rather than pinned at index 0, so imported
tables need no re-indexing. All structures are immutable after validation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from twistpost import config
from twistpost._kernels import assoc_witness
from twistpost.errors import (
    BoundExceeded,
    DimensionMismatch,
    NoIdentity,
    NoInverse,
    NotAssociative,
    UnsupportedOrder,
)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteGroup:
    n: int
    mul: Table
    identity: int
    inv: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conjugate(self, t: int, a: int) -> int:
        """t^-1 * a * t."""
        return self.mul[self.mul[self.inv[t]][a]][t]

    def is_abelian(self) -> bool:
        mul = self.mul
        n = self.n
        return all(mul[a][b] == mul[b][a] for a in range(n) for b in range(a + 1, n))

    def element_order(self, a: int) -> int:
        x = a
        k = 1
        while x != self.identity:
            x = self.mul[x][a]
            k += 1
        return k

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    def center(self) -> tuple[int, ...]:
        mul = self.mul
        n = self.n
        return tuple(
            z for z in range(n) if all(mul[z][a] == mul[a][z] for a in range(n))
        )


def _as_table(rows) -> Table:
    return tuple(tuple(int(x) for x in row) for row in rows)


def make_group(mul, labels=None) -> FiniteGroup:
    """Validate a Cayley table and return the group.

    Raises NotAssociative / NoIdentity / NoInverse with witnesses, and
    DimensionMismatch when the table is not square or has out-of-range
    entries.
    """
    table = _as_table(mul)
    n = len(table)
    if n == 0:
        raise DimensionMismatch("empty multiplication table")
    for row in table:
        if len(row) != n:
            raise DimensionMismatch(f"table is {n} rows but a row has {len(row)} entries")
        for x in row:
            if not 0 <= x < n:
                raise DimensionMismatch(f"entry {x} out of range [0, {n})")

    witness = assoc_witness(table)
    if witness is not None:
        raise NotAssociative(witness)

    identity = None
    for e in range(n):
        if all(table[e][a] == a and table[a][e] == a for a in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided neutral element")

    inv = []
    for a in range(n):
        b = next(
            (b for b in range(n) if table[a][b] == identity and table[b][a] == identity),
            None,
        )
        if b is None:
            raise NoInverse(a)
        inv.append(b)

    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise DimensionMismatch("labels length does not match order")

    return FiniteGroup(n=n, mul=table, identity=identity, inv=tuple(inv), labels=labels)


# ---------------------------------------------------------------------------
# builtin constructors
# ---------------------------------------------------------------------------

_SPEC_RE = re.compile(r"^\s*([a-z_0-9]+)\s*(?:\((.*)\))?\s*$", re.IGNORECASE)


def _split_args(argstr: str) -> list[str]:
    """Split a comma-separated argument list, respecting nested parentheses."""
    parts = []
    depth = 0
    current = ""
    for ch in argstr:
        if ch == "," and depth == 0:
            parts.append(current)
            current = ""
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        current += ch
    if current.strip():
        parts.append(current)
    return [p.strip() for p in parts]


def _cyclic(n: int) -> FiniteGroup:
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    return make_group(mul, labels=[str(i) for i in range(n)])


def _dihedral(n: int) -> FiniteGroup:
    # elements: rotations r^i at index i, reflections s*r^i at index n+i;
    # s^e1 r^i1 * s^e2 r^i2 = s^(e1+e2) r^(i1*(-1)^e2 + i2)
    order = 2 * n
    mul = [[0] * order for _ in range(order)]
    for e1, i1 in product(range(2), range(n)):
        for e2, i2 in product(range(2), range(n)):
            e = (e1 + e2) % 2
            i = (i1 * (-1 if e2 else 1) + i2) % n
            mul[e1 * n + i1][e2 * n + i2] = e * n + i
    labels = [f"r{i}" for i in range(n)] + [f"sr{i}" for i in range(n)]
    return make_group(mul, labels=labels)


def _symmetric(n: int) -> FiniteGroup:
    # permutations in lexicographic one-line order; (p*q)(x) = p(q(x))
    elems = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    mul = [
        [index[tuple(p[q[k]] for k in range(n))] for q in elems] for p in elems
    ]
    labels = ["".join(str(x) for x in p) for p in elems]
    return make_group(mul, labels=labels)


def _direct_product(factors: list[FiniteGroup]) -> FiniteGroup:
    # lexicographic pairs: index = i1 * n2 * n3 ... + i2 * n3 ... + ...
    sizes = [g.n for g in factors]
    total = 1
    for s in sizes:
        total *= s

    def decode(idx):
        coords = []
        for s in reversed(sizes):
            coords.append(idx % s)
            idx //= s
        return tuple(reversed(coords))

    def encode(coords):
        idx = 0
        for s, c in zip(sizes, coords):
            idx = idx * s + c
        return idx

    mul = [[0] * total for _ in range(total)]
    for i in range(total):
        ci = decode(i)
        for j in range(total):
            cj = decode(j)
            mul[i][j] = encode(tuple(g.mul[a][b] for g, a, b in zip(factors, ci, cj)))
    labels = [
        "(" + ",".join(g.label(c) for g, c in zip(factors, decode(i))) + ")"
        for i in range(total)
    ]
    return make_group(mul, labels=labels)


def _spec_order(spec: str) -> int:
    """Order of the group a spec describes, without building it."""
    m = _SPEC_RE.match(spec)
    if m is None:
        raise ValueError(f"cannot parse group spec {spec!r}")
    name = m.group(1).lower()
    args = _split_args(m.group(2)) if m.group(2) else []
    if name == "klein_four":
        return 4
    if name == "cyclic":
        return int(args[0])
    if name == "dihedral":
        return 2 * int(args[0])
    if name == "symmetric":
        k = int(args[0])
        out = 1
        for i in range(2, k + 1):
            out *= i
        return out
    if name == "direct_product":
        out = 1
        for a in args:
            out *= _spec_order(a)
        return out
    raise ValueError(f"unknown group spec {name!r}")


def builtin_group(spec: str, bounds: config.Bounds | None = None) -> FiniteGroup:
    """Build a named group from a spec string.

    Supported specs: ``cyclic(n)``, ``dihedral(n)``, ``symmetric(n)`` for
    n <= 5, ``klein_four`` and ``direct_product(spec, spec, ...)``. Raises
    UnsupportedOrder when the result would exceed the configured maximum
    (checked before any table is built).
    """
    bounds = bounds or config.default_bounds()
    order = _spec_order(spec)
    if order > bounds.max_order:
        raise UnsupportedOrder(
            f"order {order} exceeds the configured maximum {bounds.max_order}"
        )

    m = _SPEC_RE.match(spec)
    name = m.group(1).lower()
    args = _split_args(m.group(2)) if m.group(2) else []

    if name == "klein_four":
        return _direct_product([_cyclic(2), _cyclic(2)])
    if name == "cyclic":
        return _cyclic(int(args[0]))
    if name == "dihedral":
        return _dihedral(int(args[0]))
    if name == "symmetric":
        k = int(args[0])
        if k > 5:
            raise UnsupportedOrder(f"symmetric({k}) is beyond the supported range")
        return _symmetric(k)
    return _direct_product([builtin_group(a, bounds) for a in args])


# ---------------------------------------------------------------------------
# homomorphisms and automorphisms
# ---------------------------------------------------------------------------


def is_homomorphism(f, src: FiniteGroup, dst: FiniteGroup):
    """True iff f(a*b) = f(a)*f(b) for all pairs; else (False, witness pair)."""
    f = tuple(int(x) for x in f)
    if len(f) != src.n:
        raise DimensionMismatch("map length does not match source order")
    if any(not 0 <= x < dst.n for x in f):
        raise DimensionMismatch("map entry out of target range")
    for a in range(src.n):
        fa = dst.mul[f[a]]
        row = src.mul[a]
        for b in range(src.n):
            if f[row[b]] != fa[f[b]]:
                return False, (a, b)
    return True, None


def _generating_sequence(group: FiniteGroup):
    """Greedy generators plus, for every element, a build recipe.

    Returns (gens, recipe) where recipe[x] is either ('gen', k) or
    ('mul', y, k) meaning x = y * gens[k] with y already built.
    """
    n = group.n
    mul = group.mul
    gens: list[int] = []
    recipe: dict[int, tuple] = {group.identity: ("id",)}
    frontier = [group.identity]
    while len(recipe) < n:
        g = next(x for x in range(n) if x not in recipe)
        gens.append(g)
        k = len(gens) - 1
        recipe[g] = ("gen", k)
        frontier.append(g)
        # close under right multiplication by all current generators
        changed = True
        while changed:
            changed = False
            for x in list(recipe):
                for j, h in enumerate(gens):
                    y = mul[x][h]
                    if y not in recipe:
                        recipe[y] = ("mul", x, j)
                        changed = True
    return gens, recipe


def _extend_map(group: FiniteGroup, gens, recipe, images):
    """Build the full map determined by generator images, in index order."""
    n = group.n
    mul = group.mul
    out = [None] * n
    # recipes refer to already-built elements; resolve by walking the recipe
    # graph with memoization
    def resolve(x):
        if out[x] is not None:
            return out[x]
        r = recipe[x]
        if r[0] == "id":
            v = group.identity
        elif r[0] == "gen":
            v = images[r[1]]
        else:
            v = mul[resolve(r[1])][images[r[2]]]
        out[x] = v
        return v

    for x in range(n):
        resolve(x)
    return tuple(out)


def endomorphisms(group: FiniteGroup, bounds: config.Bounds | None = None):
    """All self-homomorphisms, in lexicographic order of their tables."""
    bounds = bounds or config.default_bounds()
    if group.n > bounds.automorphism_bound:
        raise BoundExceeded(
            f"endomorphism enumeration bounded at order {bounds.automorphism_bound}"
        )
    gens, recipe = _generating_sequence(group)
    orders = [group.element_order(a) for a in range(group.n)]
    found = []
    for images in product(range(group.n), repeat=len(gens)):
        # order of image must divide order of generator
        if any(orders[g] % orders[img] for g, img in zip(gens, images)):
            continue
        cand = _extend_map(group, gens, recipe, images)
        ok, _ = is_homomorphism(cand, group, group)
        if ok:
            found.append(cand)
    return sorted(set(found))


def automorphisms(group: FiniteGroup, bounds: config.Bounds | None = None,
                  oracle: bool = False):
    """All bijective self-homomorphisms, lexicographically ordered.

    ``oracle=True`` switches to the plain scan over all n! bijections
    (allowed up to the oracle bound); the default is generator-image
    backtracking with element-order pruning. Both modes return identical
    lists, which is exactly what the oracle is for.
    """
    bounds = bounds or config.default_bounds()
    if oracle:
        if group.n > bounds.automorphism_oracle_bound:
            raise BoundExceeded(
                f"oracle automorphism scan bounded at order {bounds.automorphism_oracle_bound}"
            )
        out = []
        for perm in permutations(range(group.n)):
            ok, _ = is_homomorphism(perm, group, group)
            if ok:
                out.append(tuple(perm))
        return out

    if group.n > bounds.automorphism_bound:
        raise BoundExceeded(
            f"automorphism enumeration bounded at order {bounds.automorphism_bound}"
        )
    gens, recipe = _generating_sequence(group)
    orders = [group.element_order(a) for a in range(group.n)]
    found = []
    for images in product(range(group.n), repeat=len(gens)):
        if any(orders[g] != orders[img] for g, img in zip(gens, images)):
            continue
        cand = _extend_map(group, gens, recipe, images)
        if len(set(cand)) != group.n:
            continue
        ok, _ = is_homomorphism(cand, group, group)
        if ok:
            found.append(cand)
    return sorted(set(found))


def inner_automorphisms(group: FiniteGroup):
    """[(t, map)] with map = conjugation by t; one entry per t, duplicates kept."""
    return [
        (t, tuple(group.conjugate(t, a) for a in range(group.n)))
        for t in range(group.n)
    ]


@lru_cache(maxsize=None)
def _cached_builtin(spec: str) -> FiniteGroup:
    return builtin_group(spec)


def cyclic(n: int) -> FiniteGroup:
    return _cached_builtin(f"cyclic({n})")


def symmetric(n: int) -> FiniteGroup:
    return _cached_builtin(f"symmetric({n})")


def klein_four() -> FiniteGroup:
    return _cached_builtin("klein_four")


def dihedral(n: int) -> FiniteGroup:
    return _cached_builtin(f"dihedral({n})")
