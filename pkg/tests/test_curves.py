import random

import pytest

from twocubes.appendix import PRINTED_FORMS, closed_form_c4_c6
from twocubes.arith import jacobi_symbol, valuation
from twocubes.curves import (
    BadReductionError,
    CurveModel,
    FAMILIES,
    SingularModelError,
    count_points,
    curve_indices,
    discriminant_square_class,
    family_classes,
    family_q,
    four_divisibility_predicate,
    instantiate_family_curve,
    is_square_class_instance,
    quadratic_twist,
    to_two_torsion_form,
    trace_of_frobenius,
    weierstrass_invariants,
)
from twocubes.verify import appendix_sweep, sample_valid_params


def short(a4, a6):
    return CurveModel(0, 0, 0, a4, a6)


def test_invariants_frey_example():
    inv = weierstrass_invariants(short(-6, 9))
    assert (inv.c4, inv.c6, inv.disc) == (288, -7776, -21168)
    assert -21168 == -(2**4) * 27 * 49


def test_invariants_cm_curve():
    inv = weierstrass_invariants(short(1, 0))
    assert (inv.c4, inv.c6, inv.disc) == (-48, 0, -64)
    assert inv.c4**3 - inv.c6**2 == 1728 * inv.disc


def test_invariants_reject_singular():
    with pytest.raises(SingularModelError):
        weierstrass_invariants(short(0, 0))


def test_family_instance_191():
    # q = 191 = 2^6 * 3 - 1
    params = {"a": 6, "b": 1, "de": 1}
    assert family_q("18q.1", params) == 191
    model = instantiate_family_curve("18q.1", params, "a1")
    inv = weierstrass_invariants(model)
    assert inv.disc == 2**4 * 3**8 * 191**2


def test_family_instance_examples():
    m = instantiate_family_curve("72q.1", {"b": 3}, "a1")
    assert (m.a2, m.a4) == (24 * 7 - 3, 4 * 3**5 * 7)
    m = instantiate_family_curve("18q.2", {"a": 5}, "a1")
    assert (m.a2, m.a4) == (-3 * 2**4 - 1, 2 * 27 * 11)


def test_family_instance_rejects_q_one():
    with pytest.raises(ValueError):
        instantiate_family_curve("36q.2", {"d": 1}, "a1")  # gives q = 1
    with pytest.raises(ValueError):
        instantiate_family_curve("nope.1", {}, "a1")
    with pytest.raises(ValueError):
        # side condition: d = 1 mod 8 required
        instantiate_family_curve("36q.2", {"d": 5}, "a1")


def test_square_class_examples():
    sc = discriminant_square_class(2**4 * 3**8 * 191**2)
    assert sc.kind == "square" and sc.witness == 4 * 81 * 191
    sc = discriminant_square_class(-21168)
    assert sc.kind == "minus3-square" and sc.witness == 84
    assert discriminant_square_class(60).kind == "other"


def test_trace_examples():
    assert trace_of_frobenius(short(-6, 9), 5) == -2
    assert trace_of_frobenius(short(1, 0), 3) == 0
    with pytest.raises(BadReductionError):
        trace_of_frobenius(short(-6, 9), 7)  # 7 | disc


def test_appendix_sweep_is_clean():
    report = appendix_sweep(seed=20260809, count=200)
    assert report["ok"], report["mismatches"][:5]


def test_printed_forms_disagree_with_models():
    # the overridden rows must genuinely contradict the coefficient tables,
    # otherwise the corrections would be unjustified
    rng = random.Random(5)
    for name, (c4_fn, c6_fn) in PRINTED_FORMS.items():
        family, which = name.rsplit(".", 1)
        if family in ("36q.5", "72q.10", "72q.12"):
            continue
        tuples = sample_valid_params(family, rng, 40)
        saw_conflict = False
        for params in tuples:
            q = family_q(family, params)
            inv = weierstrass_invariants(instantiate_family_curve(family, params, which))
            if (inv.c4, inv.c6) != (c4_fn(q, params), c6_fn(q, params)):
                saw_conflict = True
        assert saw_conflict, f"printed form for {name} matches after all"


def test_square_class_census_split():
    # every census instance must carry a T^2 or -3T^2 discriminant on some
    # curve of its class; for the others at least one sampled instance must not
    rng = random.Random(11)
    census_rows = 0
    for family in sorted(FAMILIES):
        if family in ("36q.5", "72q.10", "72q.12"):
            continue
        tuples = sample_valid_params(family, rng, 30)
        for letter in family_classes(family):
            non_census_witness = False
            for params in tuples:
                q = family_q(family, params)
                kinds = set()
                for which in curve_indices(family, letter):
                    inv = weierstrass_invariants(instantiate_family_curve(family, params, which))
                    kinds.add(discriminant_square_class(inv.disc).kind)
                if is_square_class_instance(family, letter, params):
                    census_rows += 1
                    assert kinds & {"square", "minus3-square"}, (family, letter, params)
                elif kinds & {"square", "minus3-square"}:
                    pass  # accidental square class is possible off-census
                else:
                    non_census_witness = True
            if tuples and not any(
                is_square_class_instance(family, letter, params) for params in tuples
            ):
                assert non_census_witness or family in ("36q.4",), (family, letter)
    assert census_rows > 100


def test_four_divisibility_matches_group_order():
    rng = random.Random(3)
    checked = 0
    for _ in range(50):
        u = rng.randint(-30, 30)
        v = rng.randint(-30, 30)
        if v == 0 or u * u == 4 * v:
            continue
        model = CurveModel(0, u, 0, v, 0)
        disc = 16 * v * v * (u * u - 4 * v)
        for ell in [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                    67, 71, 73, 79, 83, 89, 97]:
            if disc % ell == 0:
                continue
            order = count_points(model, ell)
            a = ell + 1 - order
            assert a * a <= 4 * ell
            assert four_divisibility_predicate(u, v, ell) == (order % 4 == 0)
            assert (order % 4 == 0) == (a % 4 == (ell + 1) % 4)
            checked += 1
    assert checked > 500


def test_two_torsion_trace_congruence_on_census_curves():
    # split primes 1 mod 6 see a full 2-torsion group on square-class curves
    params = {"a": 6, "b": 1, "de": 1}  # q = 191
    model = instantiate_family_curve("18q.1", params, "a1")
    u, v = to_two_torsion_form(model)
    disc = 16 * v * v * (u * u - 4 * v)
    for ell in [7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97]:
        if disc % ell == 0:
            continue
        a = trace_of_frobenius(CurveModel(0, u, 0, v, 0), ell)
        assert a % 4 == (ell + 1) % 4, ell


def test_quadratic_twist_formula_and_minus3_valuation():
    base = CurveModel(0, 5, 0, 7, 0)
    assert quadratic_twist(base, 1) == CurveModel(0, 5, 0, 7, 0)
    tw = quadratic_twist(base, -3)
    assert (tw.a2, tw.a4, tw.a6) == (-15, 63, 0)
    with pytest.raises(ValueError):
        quadratic_twist(base, 4)  # not squarefree
    with pytest.raises(ValueError):
        quadratic_twist(CurveModel(1, 0, 0, 1, 0), -3)  # a1 != 0

    # after the -3 twist the 3-adic discriminant valuation of the now
    # multiplicative curve equals 2b (seen through the twist-invariant j)
    for a, b, de in [(6, 1, 1), (5, 3, 0), (7, 2, 1)]:
        q = 2**a * 3**b + (1 if de == 0 else -1)
        try:
            model = instantiate_family_curve("18q.1", {"a": a, "b": b, "de": de}, "a1")
        except ValueError:
            continue
        inv = weierstrass_invariants(model)
        assert valuation(inv.disc, 3) - 3 * valuation(inv.c4, 3) == 2 * b


def test_twist_scales_disc_by_t6():
    base = CurveModel(0, 5, 0, 7, 0)
    for t in (-3, 2, -1, 15):
        tw = quadratic_twist(base, t)
        assert weierstrass_invariants(tw).disc == t**6 * weierstrass_invariants(base).disc


def test_hasse_bound_on_sampled_family_curves():
    rng = random.Random(17)
    for family in ["18q.3", "36q.2", "72q.4", "72q.8"]:
        for params in sample_valid_params(family, rng, 5):
            model = instantiate_family_curve(
                family, params, curve_indices(family, family_classes(family)[0])[0])
            inv = weierstrass_invariants(model)
            for ell in [5, 7, 11, 13]:
                if inv.disc % ell == 0:
                    continue
                a = trace_of_frobenius(model, ell)
                assert a * a <= 4 * ell


def test_goose_bound_example_q53():
    # d = -7, b = 0 gives q = 53; the first split prime with both symbols -1
    # is 19, giving the exponent bound below 29
    q = family_q("36q.7", {"d": -7, "b": 0})
    assert q == 53
    ell = None
    for cand in [7, 13, 19, 31, 37, 43]:
        if jacobi_symbol(-1, cand) == -1 and jacobi_symbol(53, cand) == -1:
            ell = cand
            break
    assert ell == 19
    assert ell + 1 + 2 * ell**0.5 < 29
