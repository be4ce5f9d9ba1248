"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines. Everything is exact integer or rational arithmetic; there are no
tolerances anywhere, and the time bounds asserted here are generous
ceilings for commodity hardware.
"""

import random
import time
from itertools import product

import pytest

from twistpost import corpus as corpus_mod
from twistpost.braces import (
    idempotent_transform,
    to_radical_ring,
    to_skew_brace,
    two_sided_brace,
    verify_ybe,
    yang_baxter_map,
)
from twistpost.enumeration import (
    EnumerationTask,
    brute_force_enumerate,
    enumerate_tpg,
    fast_enumerate,
)
from twistpost.groups import builtin_group, cyclic, make_group, symmetric
from twistpost.hopf import group_likes, hopf_truss_roundtrip, linearize, sub_adjacent_hopf
from twistpost.lie import (
    make_tpla,
    phi_image_subalgebra,
    random_tpla_search,
    sub_adjacent_bracket,
    verify_tpla,
)
from twistpost.rota_baxter import NotInner, rbs_to_tpg, reconstruct_rbs, verify_rbs
from twistpost.tpg import (
    check_subadjacent_laws,
    classify,
    decompose,
    make_tpg,
    sub_adjacent,
    trivial_tpg,
)
from twistpost.truss import (
    is_right_divisible,
    roundtrip_check,
    tpg_to_truss,
    truss_to_weak_tpg,
)

SMALL_GROUP_SPECS = ["cyclic(2)", "cyclic(3)", "cyclic(4)", "klein_four",
                     "cyclic(5)", "cyclic(6)", "symmetric(3)"]


def _enumerated_small_instances():
    """Deduplicated fully-twisted structures on every builtin group of
    order at most six."""
    out = []
    for spec in SMALL_GROUP_SPECS:
        group = builtin_group(spec)
        result = enumerate_tpg(EnumerationTask(group=group, kind="twisted"))
        assert not result.truncated
        for entry in result.entries:
            out.append((f"{spec}#{entry.id[:6]}",
                        make_tpg(make_group(entry.mul), entry.tri, entry.phi)))
    return out


def _law_corpus():
    named = [(e.name, e.tpg) for e in corpus_mod.corpus_left_twisted()]
    return named + _enumerated_small_instances()


def test_criterion_1_subadjacent_law_suite():
    started = time.monotonic()
    instances = _law_corpus()
    for name, t in instances:
        report = check_subadjacent_laws(t)
        assert report.all_pass, (name, report.failures())
        assert len(report.results) == 8
    elapsed = time.monotonic() - started
    assert elapsed < 10.0, f"law suite took {elapsed:.1f}s"
    print(f"\nPASS criterion 1: eight derived laws hold on {len(instances)} "
          f"instances in {elapsed:.2f}s")


def test_criterion_2_decomposition():
    instances = _law_corpus()
    for name, t in instances:
        dec = decompose(t)
        assert dec.partition_ok, name
        assert dec.psi_bijective and dec.psi_multiplicative, name
        assert dec.pairwise_isomorphic, name
        assert len(dec.base.members) * len(dec.idempotents) == t.n, name
        covered = sorted(x for c in dec.components for x in c.members)
        assert covered == list(range(t.n)), name
    print(f"\nPASS criterion 2: decomposition verified on {len(instances)} "
          f"instances")


def test_criterion_3_category_roundtrip():
    count = 0
    for entry in corpus_mod.corpus():
        if entry.tpg.tri is None:
            continue
        assert roundtrip_check(entry.tpg), entry.name
        assert roundtrip_check(tpg_to_truss(entry.tpg)), entry.name
        count += 1
    saw_false_case = False
    for name, truss in corpus_mod.corpus_trusses():
        assert roundtrip_check(truss), name
        divisible, witness = is_right_divisible(truss)
        twisted = truss_to_weak_tpg(truss).kind == "left_twisted"
        assert divisible == twisted, name
        if name == "z3_multiplicative":
            assert not divisible and witness == 0
            saw_false_case = True
        count += 1
    assert saw_false_case
    print(f"\nPASS criterion 3: entrywise roundtrips and the divisibility "
          f"biconditional hold on {count} objects")


def test_criterion_4_rota_baxter_correspondence():
    # every system on Z3, plus the named families on larger groups,
    # induces a fully twisted structure
    z3 = cyclic(3)
    induced = 0
    for b1 in product(range(3), repeat=3):
        for b2 in product(range(3), repeat=3):
            if verify_rbs(z3, b1, b2).valid:
                from twistpost.rota_baxter import RotaBaxterSystem

                t = rbs_to_tpg(RotaBaxterSystem(group=z3, b1=b1, b2=b2))
                assert t.kind == "left_twisted"
                induced += 1
    s3 = symmetric(3)
    for g, b1, b2 in [
        (s3, tuple(range(6)), (s3.identity,) * 6),
        (s3, (s3.identity,) * 6, tuple(range(6))),
    ]:
        from twistpost.rota_baxter import RotaBaxterSystem

        assert verify_rbs(g, b1, b2).valid
        assert rbs_to_tpg(RotaBaxterSystem(group=g, b1=b1, b2=b2)).kind == \
            "left_twisted"
        induced += 1

    # reconstruction on the all-inner corpus instances reproduces the tables
    from twistpost.groups import inner_automorphisms

    reconstructed = 0
    for entry in corpus_mod.corpus_left_twisted():
        t = entry.tpg
        inner = {m for _, m in inner_automorphisms(t.group)}
        if not all(row in inner for row in t.tri):
            continue
        sols = reconstruct_rbs(t)
        assert not isinstance(sols, NotInner), entry.name
        assert sols, entry.name
        for sol in sols:
            back = rbs_to_tpg(sol)
            assert back.tri == t.tri and back.phi == t.phi, entry.name
        reconstructed += 1
    assert reconstructed >= 8

    res = reconstruct_rbs(corpus_mod.get("klein_swap").tpg)
    assert isinstance(res, NotInner) and res.witness == 1
    print(f"\nPASS criterion 4: {induced} induced structures re-classified, "
          f"{reconstructed} instances reconstructed, outer rows rejected")


def test_criterion_5_brace_ring_braiding():
    started = time.monotonic()
    for entry in corpus_mod.corpus_left_twisted():
        out = idempotent_transform(entry.tpg)
        assert all(out.phi[out.phi[a]] == out.phi[a] for a in range(out.n)), \
            entry.name

    z4t = corpus_mod.get("z4_two_sided").tpg
    brace = two_sided_brace(z4t)
    assert brace.side == "two_sided"
    ring = to_radical_ring(z4t)
    assert ring.star == tuple(tuple((2 * a * b) % 4 for b in range(4))
                              for a in range(4))
    assert len(ring.radical_witness) == 4
    for a, b in enumerate(ring.radical_witness):
        assert (a + b + ring.star[a][b]) % 4 == 0

    sol = yang_baxter_map(trivial_tpg(symmetric(3)))
    rep = verify_ybe(sol.n, sol.r1, sol.r2)
    assert rep.valid  # braid relation holds on all 216 triples
    elapsed = time.monotonic() - started
    assert elapsed < 5.0, f"brace suite took {elapsed:.1f}s"
    print(f"\nPASS criterion 5: idempotent transforms, the order-4 brace and "
          f"ring, and the 216-triple braiding verified in {elapsed:.2f}s")


def test_criterion_6_lie_suite():
    hand = [
        make_tpla(1, [[[0]]], [[[0]]], [[0]]),
        make_tpla(1, [[[0]]], [[[1]]], [[1]]),
        make_tpla(2, [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
                  [[[0, 1], [0, 0]], [[0, 0], [0, 0]]],
                  [[1, 0], [0, 1]]),
    ]
    for L in hand:
        assert verify_tpla(L).valid

    accepted = list(hand)
    for d in (1, 2):
        hits = random_tpla_search(d, seed=0, budget=10**4)
        assert hits
        for h in hits:
            assert verify_tpla(h).valid
        accepted.extend(hits)

    from twistpost.lie import apply_matrix

    for L in accepted:
        derived = sub_adjacent_bracket(L)  # asserts antisymmetry + Jacobi
        for i in range(L.dim):
            for j in range(L.dim):
                assert apply_matrix(L.phi, derived[i][j]) == derived[i][j]
        assert phi_image_subalgebra(L).closed
    print(f"\nPASS criterion 6: {len(accepted)} instances accepted; derived "
          f"bracket, fixed-point and image-closure laws hold exactly")


def test_criterion_7_hopf_suite():
    count = 0
    for entry in corpus_mod.corpus_left_twisted():
        t = entry.tpg
        if t.phi[t.group.identity] != t.group.identity:
            continue
        h = linearize(t)  # re-verifies the three algebra laws on the basis
        assert hopf_truss_roundtrip(h), entry.name
        sah = sub_adjacent_hopf(h)
        assert sah.all_pass, (entry.name, sah.witness)
        sub = sub_adjacent(t)
        assert all(sah.antipode[g] == sub.dagger[g] for g in sah.members), \
            entry.name
        rebuilt = group_likes(h)
        assert rebuilt.group.mul == t.group.mul
        assert rebuilt.tri == t.tri and rebuilt.phi == t.phi
        count += 1
    assert count >= 9
    print(f"\nPASS criterion 7: algebra laws, truss roundtrip, antipode and "
          f"group-like recovery verified on {count} instances")


def test_criterion_8_enumeration_oracle_equivalence():
    started = time.monotonic()
    results = {}
    for spec in ("cyclic(2)", "cyclic(3)"):
        group = builtin_group(spec)
        for kind in ("twisted", "weak"):
            fast = fast_enumerate(EnumerationTask(group=group, kind=kind))[1]
            naive, _ = brute_force_enumerate(group, kind)
            assert fast == naive, (spec, kind, fast, naive)
            results[(spec, kind)] = fast
    elapsed = time.monotonic() - started
    assert elapsed < 60.0, f"oracle comparison took {elapsed:.1f}s"
    assert results[("cyclic(2)", "twisted")] == 3
    assert results[("cyclic(2)", "weak")] == 8
    assert results[("cyclic(3)", "twisted")] == 4
    assert results[("cyclic(3)", "weak")] == 32
    print(f"\nPASS criterion 8: fast counts equal oracle counts "
          f"{dict((k, v) for k, v in results.items())} in {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# criterion 9: mutation robustness
# ---------------------------------------------------------------------------


def _mutate_tables(rng, tables):
    """Flip one random entry of one random table to a different value in
    range; returns mutable copies. Tables must have order at least two."""
    tables = [list(map(list, t)) if isinstance(t[0], (list, tuple)) else list(t)
              for t in tables]
    t = tables[rng.randrange(len(tables))]
    n = len(t)
    assert n > 1
    if isinstance(t[0], list):
        a, b = rng.randrange(n), rng.randrange(len(t[0]))
        old = t[a][b]
        t[a][b] = rng.choice([v for v in range(len(t[0])) if v != old])
    else:
        a = rng.randrange(n)
        old = t[a]
        t[a] = rng.choice([v for v in range(n) if v != old])
    return tables


def _run_mutation_trials(name, rng, trials, pipeline):
    """Every flipped table must be caught: either some law/classification
    check fails outright, or the structure re-verifies as valid but its
    recomputed certificate no longer matches the frozen one (the content
    binding used by the catalog). Counts both detection channels."""
    law_failures = 0
    binding_only = 0
    for _ in range(trials):
        outcome = pipeline(rng)
        assert outcome in ("law", "binding"), f"{name}: silent pass"
        if outcome == "law":
            law_failures += 1
        else:
            binding_only += 1
    return law_failures, binding_only


def test_criterion_9_mutation_robustness():
    rng = random.Random(20260808)
    trials = 100
    report_lines = []

    # --- laws / decomposition pipeline on twisted structures ---------------
    twisted = corpus_mod.corpus_left_twisted()

    def pipeline_laws(rng):
        entry = rng.choice(twisted)
        t = entry.tpg
        tri, phi = _mutate_tables(rng, [t.tri, t.phi])[:2]
        rep = classify(t.group, tri, phi)
        if rep.kind != "left_twisted":
            return "law"
        mutant = make_tpg(t.group, tri, phi)
        if not check_subadjacent_laws(mutant).all_pass:
            return "law"
        if not decompose(mutant).all_pass:
            return "law"
        # valid but different structure: the content binding must notice
        return "binding" if (mutant.tri, mutant.phi) != (t.tri, t.phi) else "silent"

    report_lines.append(("laws+decomposition",
                         _run_mutation_trials("laws", rng, trials, pipeline_laws)))

    # --- truss roundtrip pipeline ------------------------------------------
    trusses = corpus_mod.corpus_trusses()

    def pipeline_truss(rng):
        _, s = rng.choice(trusses)
        circ, phi = _mutate_tables(rng, [s.circ, s.phi])[:2]
        from twistpost.truss import SkewTruss, verify_truss

        rep = verify_truss(s.group, circ, phi)
        if not rep.valid:
            return "law"
        mutant = SkewTruss(group=s.group, circ=tuple(map(tuple, circ)),
                           phi=tuple(phi), two_sided=False)
        if not roundtrip_check(mutant):
            return "law"
        return "binding" if (mutant.circ, mutant.phi) != (s.circ, s.phi) \
            else "silent"

    report_lines.append(("truss-roundtrip",
                         _run_mutation_trials("truss", rng, trials, pipeline_truss)))

    # --- Rota-Baxter pipeline ----------------------------------------------
    s3 = symmetric(3)
    base_rbs = [(s3, tuple(range(6)), (s3.identity,) * 6),
                (cyclic(4), (0,) * 4, (0, 1, 2, 3)),
                (cyclic(4), (0, 1, 2, 3), (0,) * 4)]

    def pipeline_rbs(rng):
        g, b1, b2 = rng.choice(base_rbs)
        m1, m2 = _mutate_tables(rng, [b1, b2])
        rep = verify_rbs(g, m1, m2)
        if not rep.valid:
            assert rep.witness1 is not None or rep.witness2 is not None
            return "law"
        return "binding" if (tuple(m1), tuple(m2)) != (b1, b2) else "silent"

    report_lines.append(("rota-baxter",
                         _run_mutation_trials("rbs", rng, trials, pipeline_rbs)))

    # --- brace / ring / braiding pipeline -----------------------------------
    z4t = corpus_mod.get("z4_two_sided").tpg
    frozen_sol = yang_baxter_map(z4t)

    def pipeline_ybe(rng):
        tri, phi = _mutate_tables(rng, [z4t.tri, z4t.phi])[:2]
        rep = classify(z4t.group, tri, phi)
        if rep.kind != "left_twisted":
            return "law"
        mutant = make_tpg(z4t.group, tri, phi)
        if len(set(mutant.phi)) != mutant.n:
            return "law"  # surjectivity precondition now fails
        try:
            sol = yang_baxter_map(mutant)
        except Exception:
            return "law"
        if not verify_ybe(sol.n, sol.r1, sol.r2).valid:
            return "law"
        return "binding" if (sol.r1, sol.r2) != (frozen_sol.r1, frozen_sol.r2) \
            else "silent"

    report_lines.append(("brace-ring-braiding",
                         _run_mutation_trials("ybe", rng, trials, pipeline_ybe)))

    # --- Lie pipeline --------------------------------------------------------
    lie_base = make_tpla(2, [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
                         [[[0, 1], [0, 0]], [[0, 0], [0, 0]]],
                         [[1, 0], [0, 1]])

    def pipeline_lie(rng):
        # flip one rational entry of one tensor by +-1
        bracket = [[[x for x in vec] for vec in plane] for plane in lie_base.bracket]
        tri = [[[x for x in vec] for vec in plane] for plane in lie_base.tri]
        phi = [[x for x in row] for row in lie_base.phi]
        target = rng.choice(("bracket", "tri", "phi"))
        i, j, k = rng.randrange(2), rng.randrange(2), rng.randrange(2)
        delta = rng.choice((-1, 1))
        if target == "bracket":
            bracket[i][j][k] += delta
        elif target == "tri":
            tri[i][j][k] += delta
        else:
            phi[i][j] += delta
        mutant = make_tpla(2, bracket, tri, phi)
        if not verify_tpla(mutant).valid:
            return "law"
        return "binding" if (mutant.bracket, mutant.tri, mutant.phi) != \
            (lie_base.bracket, lie_base.tri, lie_base.phi) else "silent"

    report_lines.append(("lie",
                         _run_mutation_trials("lie", rng, trials, pipeline_lie)))

    # --- Hopf pipeline -------------------------------------------------------
    normalized = [e.tpg for e in corpus_mod.corpus_left_twisted()
                  if e.tpg.phi[e.tpg.group.identity] == e.tpg.group.identity]

    def pipeline_hopf(rng):
        t = rng.choice(normalized)
        tri, phi = _mutate_tables(rng, [t.tri, t.phi])[:2]
        rep = classify(t.group, tri, phi)
        if rep.kind != "left_twisted":
            return "law"
        mutant = make_tpg(t.group, tri, phi)
        try:
            h = linearize(mutant)
        except Exception:
            return "law"
        if not (hopf_truss_roundtrip(h) and sub_adjacent_hopf(h).all_pass):
            return "law"
        return "binding" if (mutant.tri, mutant.phi) != (t.tri, t.phi) \
            else "silent"

    report_lines.append(("hopf",
                         _run_mutation_trials("hopf", rng, trials, pipeline_hopf)))

    # --- catalog binding pipeline (pure identity channel) --------------------
    import json as json_mod

    from twistpost.catalog import catalog_load, catalog_store
    from twistpost.errors import VerificationMismatch

    entries = enumerate_tpg(EnumerationTask(group=cyclic(3), kind="twisted")).entries

    def pipeline_catalog(rng):
        import tempfile
        from pathlib import Path

        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "cat.ndjson"
            catalog_store(entries, path)
            lines = path.read_text().splitlines()
            k = rng.randrange(len(lines))
            data = json_mod.loads(lines[k])
            table = rng.choice(["tri", "phi"])
            if table == "phi":
                i = rng.randrange(len(data["phi"]))
                old = data["phi"][i]
                while data["phi"][i] == old:
                    data["phi"][i] = rng.randrange(len(data["phi"]))
            else:
                i, j = rng.randrange(3), rng.randrange(3)
                old = data["tri"][i][j]
                while data["tri"][i][j] == old:
                    data["tri"][i][j] = rng.randrange(3)
            lines[k] = json_mod.dumps(data, sort_keys=True)
            path.write_text("\n".join(lines) + "\n")
            try:
                catalog_load(path)
            except VerificationMismatch:
                return "law"
            return "silent"

    report_lines.append(("catalog",
                         _run_mutation_trials("catalog", rng, trials,
                                              pipeline_catalog)))

    summary = "; ".join(
        f"{name}: {law} semantic + {bind} binding"
        for name, (law, bind) in report_lines
    )
    assert all(law + bind == trials for _, (law, bind) in report_lines)
    print(f"\nPASS criterion 9: {trials} seeded single-entry flips per suite "
          f"all detected ({summary})")
