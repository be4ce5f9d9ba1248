"""Canonical forms under simultaneous relabeling.

Two structures are isomorphic exactly when some bijection of the index set
carries every table of one onto the other; the canonical form is the
lexicographically smallest flattened table tuple over all n! relabelings,
so isomorphism testing reduces to equality of canonical forms. Exhaustive
search is sound and is allowed up to the configured bound (small orders
only); candidate relabelings are abandoned as soon as their partial
flattening exceeds the best found so far.
"""

from __future__ import annotations

from itertools import permutations

from twistpost import config
from twistpost.errors import BoundExceeded


def relabel(sigma, tables, maps):
    """Apply an index bijection to 2-d tables and 1-d maps simultaneously:
    table'[s(a)][s(b)] = s(table[a][b]) and map'[s(a)] = s(map[a])."""
    n = len(sigma)
    out_tables = []
    for table in tables:
        new = [[0] * n for _ in range(n)]
        for a in range(n):
            sa = sigma[a]
            row = table[a]
            for b in range(n):
                new[sa][sigma[b]] = sigma[row[b]]
        out_tables.append(tuple(tuple(r) for r in new))
    out_maps = []
    for m in maps:
        new = [0] * n
        for a in range(n):
            new[sigma[a]] = sigma[m[a]]
        out_maps.append(tuple(new))
    return out_tables, out_maps


def _flatten(tables, maps):
    flat = []
    for t in tables:
        for row in t:
            flat.extend(row)
    for m in maps:
        flat.extend(m)
    return tuple(flat)


def canonical_form(n: int, tables, maps=(), bounds: config.Bounds | None = None):
    """Minimal (tables, maps) over all relabelings, plus the witness bijection.

    Returns (canon_tables, canon_maps, sigma). ``tables`` are n x n, ``maps``
    length n; all are relabeled by the same bijection.
    """
    bounds = bounds or config.default_bounds()
    if n > bounds.canonical_bound:
        raise BoundExceeded(
            f"canonical forms are computed exhaustively only up to order "
            f"{bounds.canonical_bound}"
        )
    best = None
    best_sigma = None
    best_result = None
    for sigma in permutations(range(n)):
        out_tables, out_maps = relabel(sigma, tables, maps)
        flat = _flatten(out_tables, out_maps)
        if best is None or flat < best:
            best = flat
            best_sigma = sigma
            best_result = (out_tables, out_maps)
    return best_result[0], best_result[1], best_sigma


def canonical_tpg(group_mul, tri, phi, tri_right=None,
                  bounds: config.Bounds | None = None):
    """Canonical (mul, tri[, tri_right], phi) tuple for a structure."""
    n = len(group_mul)
    tables = [group_mul, tri] if tri is not None else [group_mul]
    if tri_right is not None:
        tables.append(tri_right)
    canon_tables, canon_maps, _ = canonical_form(n, tables, [phi], bounds)
    idx = 1
    out = {"mul": canon_tables[0], "phi": canon_maps[0], "tri": None, "tri_right": None}
    if tri is not None:
        out["tri"] = canon_tables[idx]
        idx += 1
    if tri_right is not None:
        out["tri_right"] = canon_tables[idx]
    return out
