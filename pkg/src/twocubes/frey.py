"""Frey curves for A^3 + B^3 = q^alpha * C^p and their conductors.

A solution is normalized so that A*C is even and B = (-1)^(C+1) mod 4, using
the symmetry group generated by swapping A and B and negating all three
entries (legitimate for odd exponents).  The attached curve then lands in
one of two branches, indexed by the parity of C.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .arith import is_prime, nth_root_exact, valuation, valuation_split
from .curves import CurveModel, weierstrass_invariants


class NotASolutionError(ValueError):
    """The integers do not satisfy the defining identity."""


class NormalizationError(ValueError):
    """No element of the symmetry group reaches the normal form."""


@dataclass(frozen=True)
class FreySolution:
    A: int
    B: int
    C: int
    q: int
    alpha: int
    branch: int            # 0 when C is even, else 1
    p: int | None = None   # None = exponent kept symbolic
    verified: bool = True  # identity checked (requires concrete p)

    def to_json(self) -> str:
        return json.dumps({"A": self.A, "B": self.B, "C": self.C, "q": self.q,
                           "alpha": self.alpha, "branch": self.branch,
                           "p": self.p}, sort_keys=True)


@dataclass(frozen=True)
class ConductorClass:
    level: int      # 18q, 36q or 72q as an integer
    cofactor: int   # product of primes dividing C away from 6q
    cofactor_known: bool = True

    @property
    def conductor(self) -> int:
        return self.level * self.cofactor


def _identity_holds(A: int, B: int, C: int, q: int, alpha: int, p: int) -> bool:
    return A**3 + B**3 == q**alpha * C**p


def normalize_solution(A: int, B: int, C: int, q: int, alpha: int,
                       p: int | None = None) -> FreySolution:
    """Bring a solution to the normal form A*C even, B = (-1)^(C+1) mod 4.

    With p = None the triple is stored with the exponent symbolic and the
    identity unchecked (flagged through `verified`); the symmetry group is
    still applied, using that the eventual exponent is odd.
    """
    if A == 0 or B == 0 or C == 0:
        raise NotASolutionError("A, B, C must be nonzero")
    if q < 5 or not is_prime(q):
        raise NotASolutionError(f"q must be a prime >= 5, got {q}")
    if alpha < 1:
        raise NotASolutionError("alpha must be a positive integer")
    if math.gcd(A, B) != 1:
        raise NotASolutionError(f"gcd(A, B) = {math.gcd(A, B)} != 1")
    if p is not None:
        if p % 2 == 0:
            raise NotASolutionError("the exponent must be odd")
        if not _identity_holds(A, B, C, q, alpha, p):
            raise NotASolutionError(
                f"{A}^3 + {B}^3 != {q}^{alpha} * {C}^{p}")
    for a, b, c in ((A, B, C), (B, A, C), (-A, -B, -C), (-B, -A, -C)):
        if (a * c) % 2 != 0:
            continue
        if b % 4 != (3 if c % 2 == 0 else 1):
            continue
        return FreySolution(a, b, c, q, alpha, branch=0 if c % 2 == 0 else 1,
                            p=p, verified=p is not None)
    raise NormalizationError(f"({A}, {B}, {C}) admits no normal form")


def frey_curve(s: FreySolution) -> CurveModel:
    """The curve attached to a normalized solution.

    Branch 1 (C odd):  y^2 = x^3 + 3AB x + (B^3 - A^3).
    Branch 0 (C even): the a1 = 1 model whose fractional-looking coefficients
    are integral exactly in the normal form; integrality is asserted.
    """
    A, B = s.A, s.B
    if s.branch == 1:
        return CurveModel(0, 0, 0, 3 * A * B, B**3 - A**3, label="frey-odd")
    num2, r2 = divmod(3 * (B - A) + 2, 8)
    num4, r4 = divmod(3 * (A + B) ** 2, 64)
    num6, r6 = divmod(9 * (B - A) * (A + B) ** 2, 512)
    if r2 or r4 or r6:
        raise NormalizationError(
            f"even-branch coefficients not integral for {s}; normalization bug")
    return CurveModel(1, num2, 0, num4, num6, label="frey-even")


def frey_invariants_closed_form(s: FreySolution) -> tuple[int, int, int | None]:
    """(c4, c6, disc) from the closed forms; disc needs a concrete p."""
    i = s.branch
    c4 = -(2 ** (4 * i)) * 9 * s.A * s.B
    c6 = 2 ** (6 * i - 1) * 27 * (s.A**3 - s.B**3)
    disc = None
    if s.p is not None:
        # -2^(12 i - 8) 3^3 q^(2 alpha) C^(2p), an integer in both branches
        disc = -(2 ** (12 * i) * 27 * s.q ** (2 * s.alpha) * s.C ** (2 * s.p))
        assert disc % 256 == 0
        disc //= 256
    return c4, c6, disc


TRIAL_DIVISION_BUDGET = 10**6


def frey_conductor(s: FreySolution) -> ConductorClass:
    """Conductor shape per the parity of C and the 2-adic valuation of A."""
    if s.branch == 0:
        level = 18 * s.q
    else:
        v2 = valuation(s.A, 2)
        if v2 == 0:
            raise NormalizationError("odd branch needs an even A")
        level = 36 * s.q if v2 >= 2 else 72 * s.q
    c = abs(s.C)
    cofactor = 1
    known = True
    for p in (2, 3, s.q):
        while c % p == 0:
            c //= p
    f = 5
    while f * f <= c and f <= TRIAL_DIVISION_BUDGET:
        if c % f == 0:
            cofactor *= f
            while c % f == 0:
                c //= f
        f += 2
    if c > 1:
        if is_prime(c):
            cofactor *= c
        else:
            known = False  # unfactored composite cofactor
    return ConductorClass(level, cofactor, known)


def brute_force_solutions(size: int, exponents=(5, 7), q_max: int = 100):
    """All primitive normalized solutions with |A|, |B| <= size.

    For each coprime pair the right-hand side is split as q^alpha * C^p with
    q prime in [5, q_max], alpha the full q-valuation, and C a perfect p-th
    power (sign allowed).  Solutions are reported normalized, deduplicated.
    """
    from .arith import primes_up_to

    found = {}
    primes = [p for p in primes_up_to(q_max) if p >= 5]
    for A in range(-size, size + 1):
        for B in range(-size, size + 1):
            if A == 0 or B == 0 or math.gcd(A, B) != 1:
                continue
            m = A**3 + B**3
            if m == 0:
                continue
            for q in primes:
                if m % q:
                    continue
                sv = valuation_split(m, q)
                for p in exponents:
                    c = nth_root_exact(sv.unit_part, p)
                    if c is None or c == 0:
                        continue
                    sol = normalize_solution(A, B, c, q, sv.exponent, p)
                    found[(sol.A, sol.B, sol.C, sol.q, sol.alpha, p)] = sol
    return sorted(found.values(), key=lambda s: (s.q, s.alpha, s.p, s.A, s.B))
