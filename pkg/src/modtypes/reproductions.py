"""
End-to-end reproductions of two worked cases.

* ``division_algebra_q8``: level-zero cuspidal parameters of D^x for a
  quaternion algebra D over a field with residue cardinality 8, at ell = 3.
* ``nonliftable_q4_ell17``: GL_2(D) with D quaternion over residue field F_4
  at ell = 17, where the reduction of the order-17 parameter admits no
  lift with reduction length 1.
"""

from __future__ import annotations

from .arith import mult_order
from .charorbits import CharCtx, is_regular, lifts, reduce_mod_ell
from .cuspidal import CHAR_ZERO, TypeDatum, invariants, liftability_search, reduction_length

__all__ = ["division_algebra_q8", "nonliftable_q4_ell17", "REPRODUCTIONS"]


def division_algebra_q8() -> dict:
    """Every one of the 63 parameters has reduced b = 1; non-Frobenius-fixed ones have a = 2."""
    q, ell = 8, 3
    ctx = CharCtx(q**2, 1)
    rows = []
    for chi in ctx.all_chars():
        datum = TypeDatum(1, 2, q, 1, 1, 1, 2, chi)
        red = invariants(datum, ell)
        a = reduction_length(datum, ell)
        moved = (chi.k * q) % ctx.modulus != chi.k
        o = mult_order(pow(q, red.n_rho, ell), ell)
        rows.append({"k": chi.k, "moved_by_frobenius": moved, "b_reduced": red.b_rho, "a": a, "order_factor": o})
    moved = [r for r in rows if r["moved_by_frobenius"]]
    results = {
        "num_parameters": len(rows),
        "all_reduced_b_one": all(r["b_reduced"] == 1 for r in rows),
        "num_moved": len(moved),
        "moved_all_a_two": all(r["a"] == 2 for r in moved),
        "moved_a_equals_order_factor": all(r["a"] == r["order_factor"] for r in moved),
        "fixed_all_a_one": all(r["a"] == 1 for r in rows if not r["moved_by_frobenius"]),
    }
    checks = [
        ("parameter_count", results["num_parameters"] == 63),
        ("reduced_b_is_one", results["all_reduced_b_one"]),
        ("moved_parameters_split_in_two", results["moved_all_a_two"] and results["num_moved"] > 0),
        ("split_length_is_order_of_q", results["moved_a_equals_order_factor"]),
        ("fixed_parameters_stay_irreducible", results["fixed_all_a_one"]),
    ]
    return {"inputs": {"q": q, "d": 2, "m": 1, "ell": ell}, "results": results, "checks": checks}


def nonliftable_q4_ell17() -> dict:
    """The order-17 parameter reduces to the trivial character and no lift has a = 1."""
    q, ell = 4, 17
    datum = TypeDatum.build(2, 2, q, 1, 1, 15)
    red_chi = reduce_mod_ell(datum.chi, ell)
    red = invariants(datum, ell)
    top = invariants(datum, CHAR_ZERO)
    all_lifts = lifts(red_chi, ell, datum.chi.ctx)
    lift_rows = []
    for c in all_lifts:
        reg = is_regular(c)
        b = invariants(datum.with_chi(c), CHAR_ZERO).b_rho
        lift_rows.append({"k": c.k, "regular": reg, "b": b})
    found = liftability_search(datum.with_chi(red_chi), ell)
    a = reduction_length(datum, ell)
    results = {
        "chi": datum.chi.k,
        "chi_order": datum.chi.order,
        "reduced_chi": red_chi.k,
        "reduced_modulus": red_chi.ctx.modulus,
        "b_reduced": red.b_rho,
        "b_lift": top.b_rho,
        "num_lifts": len(all_lifts),
        "lifts": lift_rows,
        "liftable": found is not None,
        "a": a,
    }
    checks = [
        ("order_seventeen", datum.chi.order == 17),
        ("reduces_to_trivial", red_chi.k == 0),
        ("reduced_b_is_one", red.b_rho == 1),
        ("seventeen_lifts", len(all_lifts) == 17),
        ("no_lift_with_a_one", found is None and not any(r["regular"] and r["b"] == 1 for r in lift_rows)),
        ("reduction_length_two", a == 2),
    ]
    return {"inputs": {"q": q, "d": 2, "m": 2, "ell": ell, "chi": 15}, "results": results, "checks": checks}


# ids accepted by the `examples` subcommand
REPRODUCTIONS = {
    "3.25": ("division_algebra_q8", division_algebra_q8),
    "3.31": ("nonliftable_q4_ell17", nonliftable_q4_ell17),
}
