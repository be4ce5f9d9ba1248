"""Structure enumeration: a propagating fast search and a naive oracle.

The fast search exploits that a left structure on (G, *) is exactly a map
F(a) = (phi(a), L_a) into the holomorph-style monoid G x End(G), where the
compatibility laws say F(F(a) . b) = F(a) F(b) with F(a) . b the natural
affine action phi(a) * L_a(b). Assigning whole endomorphism rows instead of
individual table entries shrinks the space from |G|^(n^2) to at most
(|End| n)^n, and each new assignment forces the value of F at every point
reachable through the action, so conflicts prune early.

The oracle is deliberately naive: iterate every action table and every
cocycle map, filter by the real classifier. Its only virtue is that it
shares no logic with the fast search, which is why equality of the two
counts is meaningful.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from twistpost import config
from twistpost.canonical import canonical_tpg
from twistpost.errors import BoundExceeded
from twistpost.groups import FiniteGroup, automorphisms, endomorphisms
from twistpost.tpg import classify, classify_right, compose_circ

KIND_TWISTED = "twisted"
KIND_WEAK = "weak"


@dataclass(frozen=True)
class EnumerationTask:
    group: FiniteGroup
    kind: str = KIND_TWISTED            # "twisted" | "weak"
    two_sided: bool = False
    max_raw: int | None = None          # cap on raw structures visited
    time_budget: float | None = None    # seconds
    parallelism: int = 1

    def __post_init__(self):
        if self.kind not in (KIND_TWISTED, KIND_WEAK):
            raise ValueError(f"unknown target kind {self.kind!r}")
        if self.max_raw is not None and self.max_raw <= 0:
            raise ValueError("max_raw must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.parallelism <= 0:
            raise ValueError("parallelism must be positive")


@dataclass
class EnumerationResult:
    entries: list = field(default_factory=list)   # CatalogEntry, canonical order
    raw_count: int = 0
    truncated: bool = False


def _derive_right(group: FiniteGroup, tri, phi):
    """The only right table that can share a structure's derived operation:
    a <| b = (a o b) * phi(b)^-1."""
    mul = group.mul
    inv = group.inv
    n = group.n
    circ = compose_circ(group, tri, phi)
    return tuple(
        tuple(mul[circ[a][b]][inv[phi[b]]] for b in range(n)) for a in range(n)
    )


def _accepts(group: FiniteGroup, tri, phi, kind: str, two_sided: bool) -> bool:
    rep = classify(group, tri, phi)
    ok = rep.twisted if kind == KIND_TWISTED else rep.weak
    if not ok:
        return False
    if two_sided:
        right = classify_right(group, _derive_right(group, tri, phi), phi)
        ok = right.twisted if kind == KIND_TWISTED else right.weak
    return ok


class _Budget:
    """Shared across subtrees so caps are global even under parallelism."""

    def __init__(self, task: EnumerationTask):
        self.max_raw = task.max_raw
        self.deadline = (time.monotonic() + task.time_budget
                         if task.time_budget else None)
        self.exhausted = False
        self._lock = threading.Lock()

    def note_emit(self) -> None:
        if self.max_raw is None:
            return
        with self._lock:
            self.max_raw -= 1
            if self.max_raw <= 0:
                self.exhausted = True

    def spent(self) -> bool:
        if self.exhausted:
            return True
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.exhausted = True
        return self.exhausted


def _search_from(group, endo_rows, comp, first_choice, budget, sink):
    """Explore the subtree where F at the first branch point is fixed."""
    n = group.n
    mul = group.mul
    fg = [-1] * n
    fe = [-1] * n
    alive: list[int] = []

    def assign(c, g, e, queue, trail):
        fg[c] = g
        fe[c] = e
        trail.append(c)
        alive.append(c)
        for x in alive:
            queue.append((c, x))
            if x != c:
                queue.append((x, c))

    def undo(trail):
        for c in trail:
            fg[c] = -1
            fe[c] = -1
            alive.pop()

    def propagate(queue, trail) -> bool:
        qi = 0
        while qi < len(queue):
            a, b = queue[qi]
            qi += 1
            c = mul[fg[a]][endo_rows[fe[a]][b]]
            g = mul[fg[a]][endo_rows[fe[a]][fg[b]]]
            e = comp[fe[a]][fe[b]]
            if fg[c] == -1:
                assign(c, g, e, queue, trail)
            elif fg[c] != g or fe[c] != e:
                return False
        return True

    def dfs() -> bool:
        """Returns False when the budget ran out."""
        if budget.spent():
            return False
        free = next((x for x in range(n) if fg[x] == -1), None)
        if free is None:
            sink.emit(tuple(endo_rows[fe[a]] for a in range(n)),
                      tuple(fg[a] for a in range(n)))
            return True
        for g, e in product(range(n), range(len(endo_rows))):
            queue = []
            trail = []
            assign(free, g, e, queue, trail)
            if propagate(queue, trail):
                if not dfs():
                    undo(trail)
                    return False
            undo(trail)
        return True

    g0, e0 = first_choice
    queue = []
    trail = []
    assign(0, g0, e0, queue, trail)
    ok = not propagate(queue, trail) or dfs()
    undo(trail)
    return ok


class _Sink:
    """Collects raw structures that pass the final classification."""

    def __init__(self, group, kind, two_sided, budget):
        self.group = group
        self.kind = kind
        self.two_sided = two_sided
        self.budget = budget
        self.raw_count = 0
        self.structures = []

    def emit(self, tri, phi):
        if _accepts(self.group, tri, phi, self.kind, self.two_sided):
            self.raw_count += 1
            self.budget.note_emit()
            right = (_derive_right(self.group, tri, phi)
                     if self.two_sided else None)
            self.structures.append((tri, right, phi))


def fast_enumerate(task: EnumerationTask, bounds: config.Bounds | None = None):
    """All structures of the requested kind on the task's group.

    Returns (structures, raw_count, truncated) with structures as
    (tri, tri_right | None, phi) tuples in deterministic order.
    """
    bounds = bounds or config.default_bounds()
    group = task.group
    if group.n > bounds.enumeration_order_bound:
        raise BoundExceeded(
            f"enumeration bounded at order {bounds.enumeration_order_bound}"
        )
    n = group.n
    if task.kind == KIND_TWISTED:
        endo_rows = automorphisms(group, bounds)
    else:
        endo_rows = endomorphisms(group, bounds)
    eidx = {row: i for i, row in enumerate(endo_rows)}
    comp = [
        [eidx[tuple(e1[e2[x]] for x in range(n))] for e2 in endo_rows]
        for e1 in endo_rows
    ]

    budget = _Budget(task)
    first_choices = list(product(range(n), range(len(endo_rows))))

    if task.parallelism > 1:
        # one sink per top-level subtree; deterministic merge afterwards
        sinks = [_Sink(group, task.kind, task.two_sided, budget)
                 for _ in first_choices]
        with ThreadPoolExecutor(max_workers=task.parallelism) as pool:
            list(pool.map(
                lambda pair: _search_from(group, endo_rows, comp, pair[0],
                                          budget, pair[1]),
                zip(first_choices, sinks),
            ))
        structures = [s for sink in sinks for s in sink.structures]
        raw = sum(sink.raw_count for sink in sinks)
    else:
        sink = _Sink(group, task.kind, task.two_sided, budget)
        for choice in first_choices:
            if not _search_from(group, endo_rows, comp, choice, budget, sink):
                break
        structures = sink.structures
        raw = sink.raw_count

    structures.sort()
    return structures, raw, budget.exhausted


def brute_force_enumerate(group: FiniteGroup, kind: str = KIND_TWISTED,
                          two_sided: bool = False, collect: bool = False):
    """The oracle: every action table against every cocycle, filtered by the
    classifier. Exponential in n^2; intended for n <= 3."""
    n = group.n
    rows = list(product(range(n), repeat=n))
    count = 0
    structures = []
    for tri in product(rows, repeat=n):
        for phi in rows:
            if _accepts(group, tri, phi, kind, two_sided):
                count += 1
                if collect:
                    right = _derive_right(group, tri, phi) if two_sided else None
                    structures.append((tri, right, phi))
    return count, structures


# ---------------------------------------------------------------------------
# deduplication up to relabeling
# ---------------------------------------------------------------------------


def canonical_key(group: FiniteGroup, tri, phi, tri_right=None,
                  bounds: config.Bounds | None = None) -> tuple:
    canon = canonical_tpg(group.mul, tri, phi, tri_right, bounds)
    return (canon["mul"], canon["tri"], canon["tri_right"], canon["phi"])


def enumerate_tpg(task: EnumerationTask, bounds: config.Bounds | None = None) -> EnumerationResult:
    """Fast search plus isomorphism deduplication; output order is canonical
    and independent of any parallel schedule."""
    from twistpost.catalog import CatalogEntry, entry_from_tables

    bounds = bounds or config.default_bounds()
    structures, raw, truncated = fast_enumerate(task, bounds)
    seen: dict[tuple, CatalogEntry] = {}
    for tri, tri_right, phi in structures:
        key = canonical_key(task.group, tri, phi, tri_right, bounds)
        if key in seen:
            continue
        provenance = {
            "source": "enumerated",
            "kind_requested": task.kind,
            "two_sided": task.two_sided,
        }
        seen[key] = entry_from_tables(task.group, key, provenance)
    entries = sorted(seen.values(), key=lambda e: e.id)
    return EnumerationResult(entries=entries, raw_count=raw, truncated=truncated)
