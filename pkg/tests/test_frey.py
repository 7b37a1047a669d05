import pytest

from twocubes.arith import valuation
from twocubes.curves import discriminant_square_class, weierstrass_invariants
from twocubes.frey import (
    NotASolutionError,
    brute_force_solutions,
    frey_conductor,
    frey_curve,
    frey_invariants_closed_form,
    normalize_solution,
)


def test_normalize_example():
    s = normalize_solution(2, -1, 1, 7, 1, p=5)
    assert (s.A, s.B, s.C) == (-2, 1, -1)
    assert s.branch == 1
    assert s.B % 4 == 1 and (s.A * s.C) % 2 == 0


def test_normalize_swaps():
    # (-1)^3 + 2^3 = 7: the swap puts the even entry first, then negation
    # fixes B mod 4
    s = normalize_solution(-1, 2, 1, 7, 1, p=5)
    assert (s.A, s.B, s.C) == (-2, 1, -1)


def test_normalize_rejects_non_solutions():
    with pytest.raises(NotASolutionError):
        normalize_solution(2, 1, 1, 3, 2, p=5)  # q = 3 < 5
    with pytest.raises(NotASolutionError):
        normalize_solution(2, 1, 1, 7, 1, p=5)  # 9 != 7
    with pytest.raises(NotASolutionError):
        normalize_solution(2, 4, 1, 7, 1, p=5)  # gcd 2


def test_frey_curve_example():
    s = normalize_solution(2, -1, 1, 7, 1, p=5)
    m = frey_curve(s)
    assert (m.a4, m.a6) == (-6, 9)
    inv = weierstrass_invariants(m)
    assert (inv.c4, inv.c6, inv.disc) == (288, -7776, -21168)
    c4, c6, disc = frey_invariants_closed_form(s)
    assert (c4, c6) == (288, -7776)
    assert disc == -(2**4) * 27 * 49 * 1  # C = -1, p odd


def test_frey_conductor_example():
    s = normalize_solution(2, -1, 1, 7, 1, p=5)
    cc = frey_conductor(s)
    assert cc.level == 504 and cc.cofactor == 1 and cc.conductor == 504


def test_frey_conductor_cases():
    # C odd with v2(A) >= 2 lands at level 36q
    s = normalize_solution(17, -14, 3, 13, 2, p=3) if False else None
    # constructed case: (-4, 1, C) style with symbolic p
    s = normalize_solution(-4, 1, -1, 7, 2, p=None)
    assert s.branch == 1 and not s.verified
    assert frey_conductor(s).level == 36 * 7


def test_brute_force_properties():
    sols = brute_force_solutions(60, exponents=(5, 7), q_max=100)
    assert sols, "expected at least the trivial-style solutions"
    seen_branches = set()
    for s in sols:
        m = frey_curve(s)
        inv = weierstrass_invariants(m)
        c4, c6, disc = frey_invariants_closed_form(s)
        assert (inv.c4, inv.c6, inv.disc) == (c4, c6, disc), s
        assert discriminant_square_class(inv.disc).kind == "minus3-square", s
        cc = frey_conductor(s)
        if s.branch == 0:
            assert cc.level == 18 * s.q
            assert valuation(inv.disc, 2) == 2 * s.p * valuation(s.C, 2) - 8
        else:
            assert cc.level in (36 * s.q, 72 * s.q)
        seen_branches.add(s.branch)
    assert seen_branches == {0, 1}


def test_even_branch_parity_guard():
    # both A, B odd forces C even in any true solution; a C odd claim fails
    with pytest.raises(NotASolutionError):
        normalize_solution(3, 5, 1, 7, 1, p=5)
