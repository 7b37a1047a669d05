import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twocubes.arith import (
    ResidueClassSet,
    character_profile,
    factorize,
    is_prime,
    is_square,
    jacobi_symbol,
    next_prime,
    nth_root_exact,
    primes_up_to,
    squarefree_part,
    symbol_at_class,
    valuation_split,
)


def brute_legendre(k, p):
    # independent oracle: scan the squares mod p
    k %= p
    if k == 0:
        return 0
    squares = {x * x % p for x in range(1, p)}
    return 1 if k in squares else -1


def test_jacobi_examples():
    assert jacobi_symbol(1, 9) == 1
    assert jacobi_symbol(6, 7) == -1  # squares mod 7 are {1,2,4}
    for p in [7, 17, 23, 31, 41, 47]:
        expected = 1 if p % 8 in (1, 7) else -1
        assert jacobi_symbol(2, p) == expected


def test_jacobi_rejects_bad_modulus():
    with pytest.raises(ValueError):
        jacobi_symbol(3, 10)
    with pytest.raises(ValueError):
        jacobi_symbol(3, -7)


def test_jacobi_matches_brute_force_legendre():
    for p in primes_up_to(500):
        if p == 2:
            continue
        for k in range(-200, 201):
            assert jacobi_symbol(k, p) == brute_legendre(k, p), (k, p)


def test_valuation_split_examples():
    assert valuation_split(9, 3) == valuation_split(9, 3)
    assert (valuation_split(9, 3).exponent, valuation_split(9, 3).unit_part) == (2, 1)
    assert (valuation_split(-21168, 2).exponent, valuation_split(-21168, 2).unit_part) == (4, -1323)
    assert (valuation_split(-21168, 3).exponent, valuation_split(-21168, 3).unit_part) == (3, -784)
    with pytest.raises(ValueError):
        valuation_split(0, 3)


@given(st.integers(min_value=-(10**12), max_value=10**12).filter(lambda t: t != 0),
       st.sampled_from([2, 3, 5, 7, 11]))
def test_valuation_split_round_trip(t, prime):
    sv = valuation_split(t, prime)
    assert prime**sv.exponent * sv.unit_part == t
    assert sv.unit_part % prime != 0


def test_character_profile_minus6():
    profile = character_profile(-6, 24)
    assert {r for r, v in profile.items() if v == 1} == {1, 5, 7, 11}
    assert {r for r, v in profile.items() if v == -1} == {13, 17, 19, 23}


def test_character_profile_trivial_and_minus_one():
    assert set(character_profile(1, 8).values()) == {1}
    profile = character_profile(-1, 8)
    assert profile == {1: 1, 3: -1, 5: 1, 7: -1}


def test_character_profile_rejects_bad_args():
    with pytest.raises(ValueError):
        character_profile(0, 24)
    with pytest.raises(ValueError):
        character_profile(-6, 8)  # misses the odd prime 3
    with pytest.raises(ValueError):
        character_profile(5, 20)  # not a multiple of 8


def test_character_profile_consistent_with_witness_primes():
    rng = random.Random(7)
    kappas = [-1, 2, -2, 3, -3, 6, -6, 5, -15, -30, 12, -9, 10]
    for _ in range(100):
        kappa = rng.choice(kappas)
        modulus = 8 * math.prod(sorted({p for p in factorize(kappa) if p != 2}), start=1)
        profile = character_profile(kappa, modulus)
        r = rng.choice(sorted(profile))
        values = []
        p = r
        while len(values) < 3:
            p += modulus
            if is_prime(p) and kappa % p != 0:
                values.append(jacobi_symbol(kappa % p, p))
        assert values == [profile[r]] * 3, (kappa, modulus, r)


def test_symbol_at_class_agrees_with_profile():
    for kappa in [-6, -2, 3, -15, 2]:
        modulus = 120
        profile = character_profile(kappa, modulus)
        for r, v in profile.items():
            assert symbol_at_class(kappa, r, modulus) == v


def test_residue_set_meet_example():
    a = ResidueClassSet.of(8, [1, 5])
    b = ResidueClassSet.of(3, [1, 2])
    met = a.meet(b)
    assert met.modulus == 24
    assert met.residues == {1, 5, 13, 17}


def test_residue_set_meet_identity_and_disjoint():
    x = ResidueClassSet.of(8, [1, 3])
    assert x.meet(ResidueClassSet.all_units(1)).residues == x.residues
    met = ResidueClassSet.of(8, [3]).meet(ResidueClassSet.of(8, [1]))
    assert len(met) == 0 and met.modulus == 8


def test_residue_set_lift_and_project_round_trip():
    x = ResidueClassSet.of(24, [1, 11, 13])
    lifted = x.lift_to(120)
    assert lifted.minimized().residues == x.residues
    assert lifted.minimized().modulus == 24


def test_residue_set_meet_algebra():
    rng = random.Random(99)
    moduli = [1, 2, 3, 4, 6, 8, 12, 24, 5, 40]
    sets = []
    for _ in range(60):
        m = rng.choice(moduli)
        units = [r for r in range(m) if math.gcd(r, m) == 1]
        sets.append(ResidueClassSet.of(m, rng.sample(units, rng.randint(0, len(units)))))
    for _ in range(500):
        a, b, c = rng.choice(sets), rng.choice(sets), rng.choice(sets)
        ab = a.meet(b)
        ba = b.meet(a)
        assert ab.residues == ba.residues and ab.modulus == ba.modulus
        left = a.meet(b.meet(c))
        right = a.meet(b).meet(c)
        assert left.lift_to(right.modulus).residues == right.lift_to(left.modulus).residues
        aa = a.meet(a)
        assert aa.residues == a.residues


def test_residue_set_minimized_finds_paper_style_moduli():
    # {11, 23} mod 24 is really a single class mod 12
    s = ResidueClassSet.of(24, [11, 23]).minimized()
    assert (s.modulus, s.sorted_residues()) == (12, [11])
    s = ResidueClassSet.of(24, [5, 11, 17, 23]).minimized()
    assert (s.modulus, s.sorted_residues()) == (6, [5])


def test_is_prime_against_sieve():
    sieve = set(primes_up_to(10_000))
    for n in range(10_000):
        assert is_prime(n) == (n in sieve)


def test_is_prime_large_deterministic():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**62 + 1)
    assert next_prime(10**9) == 1_000_000_007


def test_nth_root_and_squares():
    assert nth_root_exact(32, 5) == 2
    assert nth_root_exact(-32, 5) == -2
    assert nth_root_exact(33, 5) is None
    assert nth_root_exact(-16, 4) is None
    assert is_square(53144100)
    assert squarefree_part(60) == 15
    assert squarefree_part(-21168) == -3


@settings(max_examples=200)
@given(st.integers(min_value=2, max_value=10**6), st.integers(min_value=2, max_value=7))
def test_nth_root_round_trip(base, n):
    assert nth_root_exact(base**n, n) == base
