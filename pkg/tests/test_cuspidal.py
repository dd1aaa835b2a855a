from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from modtypes.charorbits import CharCtx, IdentityViolation, is_regular, reduce_mod_ell
from modtypes.cuspidal import (
    CHAR_ZERO,
    TypeDatum,
    admissible_data,
    check_reducible_reduction_order,
    check_sweep_record,
    invariants,
    is_banal,
    liftability_search,
    order_representatives,
    reducibility_points,
    reduction_length,
    reduction_shape,
    sweep,
    zeta_identities,
)
from modtypes.fields import GF, QQ
from oracles import brute_mult_order, brute_orbit


def division_algebra_datum(k=1):
    return TypeDatum.build(1, 2, 8, 1, 1, k)


def nonliftable_datum(k=15):
    return TypeDatum.build(2, 2, 4, 1, 1, k, m_prime=2, d_prime=2)


def split_datum(q=3, k=0):
    return TypeDatum.build(1, 1, q, 1, 1, k)


def test_datum_validation():
    d = division_algebra_datum()
    assert (d.m_prime, d.d_prime, d.residue_card, d.chi.ctx.modulus) == (1, 2, 64, 63)
    ctx = CharCtx(64, 1)
    with pytest.raises(ValueError):
        TypeDatum(1, 2, 8, 1, 3, 1, 2, ctx.char(1))  # e f does not divide m d
    with pytest.raises(ValueError):
        TypeDatum(1, 2, 8, 1, 1, 2, 2, ctx.char(1))  # m' d' != m d / (e f)
    with pytest.raises(ValueError):
        TypeDatum(1, 2, 8, 1, 1, 1, 2, CharCtx(8, 1).char(1))  # chi over the wrong field
    with pytest.raises(ValueError):
        TypeDatum.build(1, 2, 1, 1, 1, 0)
    assert d.as_dict()["chi_modulus"] == 63


def test_invariants_division_algebra_example():
    inv = invariants(division_algebra_datum(), CHAR_ZERO)
    assert (inv.f_chi, inv.f_prime_chi, inv.b_rho, inv.s_rho) == (2, 1, 2, 1)
    assert (inv.f_rho, inv.n_rho, inv.q_rho) == (2, 2, 64)
    red = invariants(division_algebra_datum(), 3)
    assert (red.b_rho, red.s_rho, red.f_rho, red.wpl_valuation, red.n_rho) == (1, 2, 2, 1, 1)
    assert red.ell_exponent == 0


def test_invariants_split_case():
    inv = invariants(split_datum(5, 2))
    assert (inv.b_rho, inv.s_rho, inv.f_rho, inv.n_rho) == (1, 1, 1, 1)


def test_invariants_match_orbit_oracle():
    datum = division_algebra_datum()
    assert invariants(datum).f_chi == len(brute_orbit(1, 63, 8))
    assert invariants(datum).f_prime_chi == len(brute_orbit(1, 63, 64))


def test_invariant_errors():
    with pytest.raises(ValueError):
        invariants(division_algebra_datum(), 2)
    with pytest.raises(ValueError):
        invariants(division_algebra_datum(), 9)


@pytest.mark.parametrize("q,d,m", [(2, 2, 1), (3, 2, 2), (4, 2, 2), (4, 1, 2), (5, 2, 1), (8, 2, 1), (2, 1, 3), (3, 1, 3)])
def test_invariants_depend_only_on_character_order(q, d, m):
    # justifies sweeping one character per order
    for m_, d_, q_, e, f, mp, dp in admissible_data([q], [d], [m]):
        ctx = CharCtx(q ** (f * dp), mp)
        N = ctx.modulus
        if N > 4000:
            continue
        by_gcd = {}
        for k in range(N):
            datum = TypeDatum(m_, d_, q_, e, f, mp, dp, ctx.char(k))
            key = gcd(k, N)
            sig = (is_regular(datum.chi), invariants(datum), invariants(datum, 3 if q % 3 else 5))
            assert by_gcd.setdefault(key, sig) == sig


def test_order_representatives_cover_every_order():
    ctx = CharCtx(4, 2)
    reps = order_representatives(ctx)
    assert sorted(c.order for c in reps) == [1, 3, 5, 15]


def test_reduction_length_examples():
    assert reduction_length(division_algebra_datum(), 3) == 2
    assert brute_mult_order(8, 3) == 2
    assert reduction_length(nonliftable_datum(), 17) == 2
    # ell prime to the order of chi gives a = 1
    datum = nonliftable_datum(1)
    assert datum.chi.order % 7 and reduction_length(datum, 7) == 1


def test_reduction_length_rejects_irregular_and_char_zero():
    with pytest.raises(ValueError):
        reduction_length(nonliftable_datum(0), 17)
    with pytest.raises(ValueError):
        reduction_length(division_algebra_datum(), CHAR_ZERO)


def test_reduction_shape():
    shape = reduction_shape(division_algebra_datum(), 3)
    assert shape.symbolic() == ["rho", "rho*nu"] and shape.nu_order == 2
    assert reduction_shape(nonliftable_datum(), 17).symbolic() == ["rho", "rho*nu"]
    # a banal datum reduces irreducibly
    datum = TypeDatum.build(1, 2, 2, 1, 1, 1)
    assert is_banal(1, 2, 2, 5)
    shape = reduction_shape(datum, 5)
    assert shape.a == 1 and shape.symbolic() == ["rho"] and shape.a_prime_to_ell == 1


def test_is_banal_examples():
    assert not is_banal(1, 2, 8, 3)
    assert is_banal(1, 2, 2, 5)
    assert not is_banal(2, 1, 3, 2)
    with pytest.raises(ValueError):
        is_banal(1, 1, 9, 3)


def test_reducible_reduction_order():
    assert check_reducible_reduction_order(division_algebra_datum(), 3)
    assert check_reducible_reduction_order(nonliftable_datum(), 17)
    assert pow(4, 4, 17) == 1
    assert check_reducible_reduction_order(nonliftable_datum(1), 17)


def test_zeta_identities_examples():
    rep = zeta_identities(division_algebra_datum(), 3)
    assert (rep.e_star, rep.card_Z, rep.o_rho) == (2, 1, 1) and rep.consistent
    rep = zeta_identities(split_datum(3, 1), 7)
    assert rep.card_Z == rep.o_rho == brute_mult_order(3, 7) == 6
    rep = zeta_identities(nonliftable_datum(), 17)
    red = invariants(nonliftable_datum(), 17)
    assert (red.n_rho, red.s_rho, red.f_rho) == (2, 2, 4)
    assert rep.e_star == 4 and rep.card_Z == rep.o_rho == 1
    with pytest.raises(ValueError):
        zeta_identities(split_datum(), CHAR_ZERO)


def test_reducibility_points():
    assert reducibility_points(division_algebra_datum()) == (64, Fraction(1, 64))
    F3 = GF(3)
    assert reducibility_points(division_algebra_datum(), F3) == (F3(1), F3(1))
    assert reducibility_points(split_datum(3)) == (3, Fraction(1, 3))
    F7 = GF(7)
    z, zi = reducibility_points(split_datum(3), F7)
    assert z == 3 and z * zi == 1
    with pytest.raises(ValueError):
        reducibility_points(split_datum(3), GF(3))


def test_liftability_supercuspidal_case():
    full = CharCtx(4, 2)
    reduced = reduce_mod_ell(full.char(3), 3)
    assert (reduced.k, reduced.ctx.modulus) == (3, 5)
    datum = TypeDatum(2, 1, 4, 1, 1, 2, 1, full.char(3))
    lift = liftability_search(datum.with_chi(reduced), 3)
    assert lift is not None and lift.chi.order == 5 and lift.chi.k == 3
    assert reduction_length(lift, 3) == 1


def test_liftability_nonliftable_case():
    datum = nonliftable_datum()
    assert reduce_mod_ell(datum.chi, 17).k == 0
    assert invariants(datum, 17).b_rho == 1
    assert liftability_search(datum, 17) is None


def test_liftability_without_ell_torsion():
    datum = TypeDatum.build(1, 2, 2, 1, 1, 1)  # modulus 3, ell = 5 gives v = 0
    lift = liftability_search(datum, 5)
    assert lift.chi == datum.chi and reduction_length(lift, 5) == 1


def test_admissible_data_constraints():
    data = admissible_data((2, 3), (1, 2), (1, 2, 3))
    assert len(set(data)) == len(data)
    for m, d, q, e, f, mp, dp in data:
        assert (m * d) % (e * f) == 0 and mp * dp == m * d // (e * f)
        assert dp == d // gcd(d, e * f)
    assert (1, 2, 8, 1, 1, 1, 2) in admissible_data((8,), (2,), (1,))


def test_sweep_record_division_algebra():
    rec = check_sweep_record(division_algebra_datum(), 3)
    assert rec.a == 2 and all(rec.checks.values())


def test_full_sweep():
    n = 0
    for rec in sweep():
        assert all(rec.checks.values()), (rec.datum, rec.ell, rec.checks)
        n += 1
    assert 1000 <= n <= 10_000


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from(admissible_data((2, 3, 4, 5, 7, 8, 9), (1, 2, 3), (1, 2))),
    st.integers(0, 10**6),
    st.sampled_from([2, 3, 5, 7, 13, 17]),
)
def test_sweep_identities_random_characters(params, k, ell):
    m, d, q, e, f, mp, dp = params
    ctx = CharCtx(q ** (f * dp), mp)
    if q % ell == 0 or ctx.modulus > 10**7:
        return
    datum = TypeDatum(m, d, q, e, f, mp, dp, ctx.char(k))
    if not is_regular(datum.chi):
        return
    try:
        rec = check_sweep_record(datum, ell)
    except IdentityViolation as exc:  # pragma: no cover
        pytest.fail(str(exc))
    assert all(rec.checks.values())
