"""Built-in example battery behind the ``selftest`` CLI subcommand.

Each check is a named callable returning None on success or a short
failure description. The battery covers every documented example family:
group constructors, classification of the corpus, derived-law suites,
conversions and roundtrips, reconstruction, brace/ring/braiding
extraction, the Lie and Hopf layers, enumeration against the naive oracle
at order two, and catalog persistence.
"""

from __future__ import annotations

import tempfile
from pathlib import Path

from twistpost import corpus as corpus_mod
from twistpost.braces import (
    idempotent_transform,
    to_radical_ring,
    to_skew_brace,
    trivial_cocycle_check,
    two_sided_brace,
    yang_baxter_map,
)
from twistpost.enumeration import (
    EnumerationTask,
    brute_force_enumerate,
    enumerate_tpg,
    fast_enumerate,
)
from twistpost.groups import (
    automorphisms,
    builtin_group,
    cyclic,
    inner_automorphisms,
    is_homomorphism,
    klein_four,
    symmetric,
)
from twistpost.hopf import group_likes, hopf_truss_roundtrip, linearize, sub_adjacent_hopf
from twistpost.lie import (
    make_tpla,
    phi_image_subalgebra,
    random_tpla_search,
    sub_adjacent_bracket,
    verify_tpla,
)
from twistpost.rota_baxter import NotInner, make_rbs, rbs_to_right_tpg, rbs_to_tpg, reconstruct_rbs
from twistpost.tpg import (
    check_subadjacent_laws,
    classify,
    cocycle_lemmas,
    decompose,
    sub_adjacent,
    trivial_tpg,
)
from twistpost.truss import is_right_divisible, roundtrip_check, tpg_to_truss, truss_to_weak_tpg


def _check(condition, message):
    return None if condition else message


def check_builtin_groups():
    z4 = cyclic(4)
    if z4.mul != tuple(tuple((i + j) % 4 for j in range(4)) for i in range(4)):
        return "cyclic(4) table wrong"
    k4 = klein_four()
    if any(k4.element_order(a) != 2 for a in range(1, 4)):
        return "klein_four has an element of order != 2"
    s3 = symmetric(3)
    if s3.n != 6 or s3.is_abelian():
        return "symmetric(3) malformed"
    d3 = builtin_group("dihedral(3)")
    return _check(d3.n == 6 and not d3.is_abelian(), "dihedral(3) malformed")


def check_automorphism_counts():
    if len(automorphisms(cyclic(4))) != 2:
        return "cyclic(4) automorphism count != 2"
    if len(automorphisms(klein_four())) != 6:
        return "klein_four automorphism count != 6"
    inner = inner_automorphisms(symmetric(3))
    return _check(len({m for _, m in inner}) == 6, "S3 inner map count != 6")


def check_homomorphisms():
    z4 = cyclic(4)
    ok, _ = is_homomorphism([0, 2, 0, 2], z4, z4)
    if not ok:
        return "doubling on Z4 rejected"
    ok, witness = is_homomorphism([0, 2, 1, 3], z4, z4)
    return _check(not ok and witness == (1, 1), "swap map accepted or bad witness")


def check_corpus_classification():
    for entry in corpus_mod.corpus():
        kind = entry.tpg.best_kind()
        if kind is None:
            return f"{entry.name} failed to classify"
        if entry.name == "z3_field_weak" and entry.tpg.kind != "left_weak":
            return "field example should be weak only"
    return None


def check_law_suites():
    for entry in corpus_mod.corpus_left_twisted():
        report = check_subadjacent_laws(entry.tpg)
        if not report.all_pass:
            return f"{entry.name}: {report.failures()}"
    return None


def check_decompositions():
    for entry in corpus_mod.corpus_left_twisted():
        dec = decompose(entry.tpg)
        if not dec.all_pass:
            return f"{entry.name}: {dec.witness}"
        if len(dec.base.members) * len(dec.idempotents) != entry.tpg.n:
            return f"{entry.name}: component count mismatch"
    kp = corpus_mod.get("klein_projection").tpg
    dec = decompose(kp)
    return _check(
        len(dec.idempotents) == 2 and all(len(c.members) == 2 for c in dec.components),
        "projection example should split into two blocks of two",
    )


def check_truss_roundtrips():
    for entry in corpus_mod.corpus():
        if entry.tpg.tri is None:
            continue
        if not roundtrip_check(entry.tpg):
            return f"{entry.name}: structure roundtrip failed"
        if not roundtrip_check(tpg_to_truss(entry.tpg)):
            return f"{entry.name}: truss roundtrip failed"
    return None


def check_right_divisibility():
    for name, truss in corpus_mod.corpus_trusses():
        divisible, _ = is_right_divisible(truss)
        twisted = truss_to_weak_tpg(truss).kind == "left_twisted"
        if divisible != twisted:
            return f"{name}: divisibility/classification mismatch"
    divisible, _ = is_right_divisible(dict(corpus_mod.corpus_trusses())["z3_multiplicative"])
    return _check(not divisible, "multiplicative truss should not be right divisible")


def check_rbs_examples():
    s3 = symmetric(3)
    ident = tuple(range(6))
    ones = tuple(s3.identity for _ in range(6))
    r = make_rbs(s3, ident, ones)
    t = rbs_to_tpg(r)
    if t.kind != "left_twisted":
        return "B1=id, B2=1 gave a non-twisted structure"
    rt = rbs_to_right_tpg(r)
    if rt.right_kind != "right_twisted":
        return "right structure not twisted"
    sols = reconstruct_rbs(trivial_tpg(cyclic(4)))
    if isinstance(sols, NotInner) or not sols:
        return "trivial Z4 reconstruction found nothing"
    swap = corpus_mod.get("klein_swap").tpg
    res = reconstruct_rbs(swap)
    return _check(isinstance(res, NotInner), "outer rows should report NotInner")


def check_brace_ring_ybe():
    z4 = corpus_mod.get("z4_two_sided").tpg
    brace = two_sided_brace(z4)
    ring = to_radical_ring(z4)
    if any(ring.star[a][b] != (2 * a * b) % 4 for a in range(4) for b in range(4)):
        return "Z4 ring multiplication is not 2ab"
    if brace.side != "two_sided":
        return "Z4 brace is not two-sided"
    sol = yang_baxter_map(trivial_tpg(symmetric(3)))
    if sol.n != 6:
        return "S3 braiding has wrong size"
    rep = trivial_cocycle_check(corpus_mod.get("z3_field_weak").tpg)
    if not (rep.phi_trivial and rep.circ_is_ring_mul and rep.weak_biconditional_ok):
        return "field example should be a ring with zero cocycle"
    norm = idempotent_transform(corpus_mod.get("z2_shifted").tpg)
    if any(norm.phi[norm.phi[a]] != norm.phi[a] for a in range(2)):
        return "normalised cocycle is not idempotent"
    brace2 = to_skew_brace(z4)
    return _check(brace2.side == "left", "Z4 left brace extraction failed")


def check_lie_examples():
    zero1 = make_tpla(1, [[[0]]], [[[0]]], [[0]])
    if not verify_tpla(zero1).valid:
        return "zero algebra rejected"
    pre = make_tpla(1, [[[0]]], [[[1]]], [[1]])
    if not verify_tpla(pre).valid:
        return "one-dimensional action algebra rejected"
    two = make_tpla(2, [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
                    [[[0, 1], [0, 0]], [[0, 0], [0, 0]]],
                    [[1, 0], [0, 1]])
    if not verify_tpla(two).valid:
        return "two-dimensional example rejected"
    sub_adjacent_bracket(two)
    if not phi_image_subalgebra(two).closed:
        return "image not closed"
    hits = random_tpla_search(1, seed=0, budget=200)
    return _check(any(all(x == 0 for plane in h.tri for vec in plane for x in vec)
                      and all(x == 0 for row in h.phi for x in row)
                      for h in hits),
                  "search did not find the zero algebra")


def check_hopf_examples():
    for name in ("trivial_z3", "klein_projection", "z4_two_sided"):
        t = corpus_mod.get(name).tpg
        h = linearize(t)
        if not hopf_truss_roundtrip(h):
            return f"{name}: truss roundtrip failed at the algebra level"
        sah = sub_adjacent_hopf(h)
        if not sah.all_pass:
            return f"{name}: sub-adjacent Hopf checks failed ({sah.witness})"
        group_likes(h)
    from twistpost.errors import CocycleNotNormalized

    try:
        linearize(corpus_mod.get("z2_shifted").tpg)
        return "shifted cocycle should be rejected"
    except CocycleNotNormalized:
        return None


def check_enumeration_oracle_z2():
    z2 = cyclic(2)
    for kind in ("twisted", "weak"):
        fast = fast_enumerate(EnumerationTask(group=z2, kind=kind))
        naive, _ = brute_force_enumerate(z2, kind)
        if fast[1] != naive:
            return f"Z2 {kind}: fast {fast[1]} != oracle {naive}"
    result = enumerate_tpg(EnumerationTask(group=z2, kind="twisted"))
    return _check(len(result.entries) == 3 and result.raw_count == 3,
                  "Z2 twisted should have three structures")


def check_catalog_roundtrip():
    from twistpost.catalog import catalog_load, catalog_store

    result = enumerate_tpg(EnumerationTask(group=klein_four(), kind="twisted"))
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "catalog.ndjson"
        catalog_store(result.entries, path)
        loaded = catalog_load(path)
        if [e.id for e in loaded] != [e.id for e in result.entries]:
            return "catalog roundtrip changed the entry set"
    return None


CHECKS = [
    ("builtin groups", check_builtin_groups),
    ("automorphism counts", check_automorphism_counts),
    ("homomorphism witness", check_homomorphisms),
    ("corpus classification", check_corpus_classification),
    ("derived-law suites", check_law_suites),
    ("decompositions", check_decompositions),
    ("truss roundtrips", check_truss_roundtrips),
    ("right divisibility", check_right_divisibility),
    ("Rota-Baxter layer", check_rbs_examples),
    ("brace / ring / braiding", check_brace_ring_ybe),
    ("Lie layer", check_lie_examples),
    ("Hopf layer", check_hopf_examples),
    ("enumeration oracle (order 2)", check_enumeration_oracle_z2),
    ("catalog persistence", check_catalog_roundtrip),
]


def run_selftest(emit=print) -> int:
    failures = 0
    for name, fn in CHECKS:
        try:
            problem = fn()
        except Exception as exc:  # count crashes as failures with detail
            problem = f"{type(exc).__name__}: {exc}"
        if problem is None:
            emit(f"PASS {name}")
        else:
            failures += 1
            emit(f"FAIL {name}: {problem}")
    emit(f"{len(CHECKS) - failures}/{len(CHECKS)} checks passed")
    return 0 if failures == 0 else 1
