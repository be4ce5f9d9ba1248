"""All search and enumeration bounds, in one place.

Every exhaustive routine reads its limit from a :class:`Bounds` record, so
callers can loosen or tighten the package in one spot. ``TWISTPOST_MAX_ORDER``
in the environment overrides ``max_order`` for the default record.
"""

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Bounds:
    # largest group the builtin constructors will produce
    max_order: int = 720
    # largest order for automorphism enumeration (generator backtracking)
    automorphism_bound: int = 24
    # full n!-scan oracle for automorphisms is allowed up to here
    automorphism_oracle_bound: int = 8
    # canonical forms are computed exhaustively up to this order
    canonical_bound: int = 8
    # default order ceiling for structure enumeration
    enumeration_order_bound: int = 8
    # reconstruction search gives up above this many candidate assignments
    reconstruction_product_cap: int = 10**6
    # and returns at most this many reconstructed systems
    reconstruction_solution_cap: int = 16


def default_bounds() -> Bounds:
    bounds = Bounds()
    env = os.environ.get("TWISTPOST_MAX_ORDER")
    if env is not None:
        bounds = replace(bounds, max_order=int(env))
    return bounds


DEFAULT = default_bounds()
