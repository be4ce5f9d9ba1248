"""Exact-arithmetic toolkit for finite twisted post structures.

Construct, verify, convert, decompose and enumerate the finite relatives
of skew braces: left/right/two-sided twisted post structures on groups,
skew trusses, Rota-Baxter systems of groups, radical rings, twisted post
Lie algebras over the rationals, their group-algebra Hopf extensions, and
verified non-degenerate set-theoretic Yang-Baxter solutions.

Everything is integer or rational arithmetic on dense index tables; every
constructor re-verifies its output exhaustively, and every verifier
returns the lexicographically first witness on failure.
"""

from twistpost._kernels import IMPL as kernel_impl
from twistpost.braces import (
    RadicalRing,
    SkewBrace,
    YBESolution,
    brace_to_tpg,
    idempotent_transform,
    make_skew_brace,
    to_radical_ring,
    to_skew_brace,
    trivial_cocycle_check,
    two_sided_brace,
    verify_brace,
    verify_radical_ring,
    verify_ybe,
    yang_baxter_map,
)
from twistpost.enumeration import (
    EnumerationResult,
    EnumerationTask,
    brute_force_enumerate,
    enumerate_tpg,
    fast_enumerate,
)
from twistpost.groups import (
    FiniteGroup,
    automorphisms,
    builtin_group,
    cyclic,
    dihedral,
    endomorphisms,
    inner_automorphisms,
    is_homomorphism,
    klein_four,
    make_group,
    symmetric,
)
from twistpost.hopf import (
    GroupAlgebra,
    GroupAlgebraElement,
    GroupAlgebraTPHA,
    group_likes,
    hopf_truss_roundtrip,
    linearize,
    sub_adjacent_hopf,
)
from twistpost.lie import (
    TwistedPostLieAlgebra,
    make_tpla,
    phi_image_subalgebra,
    random_tpla_search,
    sub_adjacent_bracket,
    verify_tpla,
)
from twistpost.rota_baxter import (
    NotInner,
    RotaBaxterSystem,
    make_rbs,
    rbs_to_right_tpg,
    rbs_to_tpg,
    reconstruct_rbs,
    verify_rbs,
)
from twistpost.tpg import (
    ClassificationReport,
    SubAdjacent,
    TwistedPostGroup,
    check_subadjacent_laws,
    classify,
    classify_right,
    classify_two_sided,
    cocycle_lemmas,
    component,
    decompose,
    make_tpg,
    sub_adjacent,
    tpg_homomorphism_check,
    trivial_tpg,
)
from twistpost.truss import (
    SkewTruss,
    is_right_divisible,
    make_truss,
    roundtrip_check,
    tpg_to_truss,
    truss_homomorphism_check,
    truss_to_weak_tpg,
    verify_truss,
)

__version__ = "0.1.0"
