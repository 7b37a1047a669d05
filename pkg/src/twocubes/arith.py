"""Exact integer primitives.

Everything in here is plain integer arithmetic: quadratic residue symbols,
valuations, primality, perfect-power detection, and sets of residue classes
combined under the Chinese remainder theorem.  All functions are pure and
safe to call concurrently.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

INT128_MAX = 2**127 - 1

# Miller-Rabin with this witness set is a deterministic primality test for
# everything below 2**64 (Sorenson-Webster).
_MR_WITNESSES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_PROBABLE_ROUNDS = 32
_PROBABLE_SEED = 0x5EED


class OverflowGuardError(OverflowError):
    """A value left the supported 128-bit signed range."""


def check_int128(value: int) -> int:
    """Return *value* unchanged, raising OverflowGuardError outside 128 bits."""
    if abs(value) > INT128_MAX:
        raise OverflowGuardError(f"value exceeds 128-bit signed range: ~2^{value.bit_length()}")
    return value


# ---------------------------------------------------------------------------
# primality
# ---------------------------------------------------------------------------

def _miller_rabin(n: int, witnesses) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in witnesses:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test, deterministic below 2**64 and strongly probable above.

    Use :func:`primality_certainty` when the caller needs to report whether
    the answer is proved or merely probable.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n < 2**64:
        return _miller_rabin(n, _MR_WITNESSES_64)
    # above the deterministic range: fixed-seed random witnesses, reproducible
    rng = random.Random(_PROBABLE_SEED ^ (n & 0xFFFFFFFF))
    witnesses = list(_MR_WITNESSES_64) + [rng.randrange(2, n - 2) for _ in range(_PROBABLE_ROUNDS)]
    return _miller_rabin(n, witnesses)


def primality_certainty(n: int) -> str:
    """'proved' when is_prime's verdict is deterministic for n, else 'probable'."""
    return "proved" if n < 2**64 else "probable"


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, by sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    candidate = n + 1
    if candidate <= 2:
        return 2
    if candidate % 2 == 0:
        candidate += 1
    while not is_prime(candidate):
        candidate += 2
    return candidate


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; meant for small inputs only."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


# ---------------------------------------------------------------------------
# valuations, squares, powers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SplitValuation:
    """t = prime**exponent * unit_part with the prime not dividing unit_part."""

    exponent: int
    unit_part: int


def valuation_split(t: int, prime: int) -> SplitValuation:
    """Split a nonzero integer into prime-power part and cofactor."""
    if t == 0:
        raise ValueError("valuation of 0 is undefined")
    if prime < 2:
        raise ValueError(f"not a prime: {prime}")
    e = 0
    while t % prime == 0:
        t //= prime
        e += 1
    return SplitValuation(e, t)


def valuation(t: int, prime: int) -> int:
    return valuation_split(t, prime).exponent


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def sqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def nth_root_exact(m: int, n: int) -> int | None:
    """Integer r with r**n == m, or None.  Negative m allowed for odd n."""
    if n <= 0:
        raise ValueError("root index must be positive")
    if m < 0:
        if n % 2 == 0:
            return None
        r = nth_root_exact(-m, n)
        return -r if r is not None else None
    if m in (0, 1):
        return m
    r = round(m ** (1.0 / n))
    for candidate in (r - 1, r, r + 1, r + 2):
        if candidate >= 0 and candidate**n == m:
            return candidate
    # float seed can be off for very large m; fix up by integer search
    lo, hi = 1, 1 << (m.bit_length() // n + 2)
    while lo <= hi:
        mid = (lo + hi) // 2
        power = mid**n
        if power == m:
            return mid
        if power < m:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def squarefree_part(n: int) -> int:
    """The squarefree integer s with n = s * t**2 (sign carried by s)."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    s = 1
    for p, e in factorize(n).items():
        if e % 2:
            s *= p
    return sign * s


# ---------------------------------------------------------------------------
# quadratic residue symbols
# ---------------------------------------------------------------------------

def jacobi_symbol(k: int, m: int) -> int:
    """Jacobi symbol (k/m) for odd positive m; Legendre symbol at primes."""
    if m <= 0 or m % 2 == 0:
        raise ValueError(f"modulus must be odd and positive, got {m}")
    k %= m
    result = 1
    while k != 0:
        while k % 2 == 0:
            k //= 2
            if m % 8 in (3, 5):
                result = -result
        k, m = m, k
        if k % 4 == 3 and m % 4 == 3:
            result = -result
        k %= m
    return result if m == 1 else 0


def legendre_symbol(k: int, p: int) -> int:
    """Legendre symbol (k/p) for an odd prime p."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"not an odd prime: {p}")
    return jacobi_symbol(k, p)


def _symbol_of_odd_prime_at_class(p: int, r: int) -> int:
    # (p/x) for any prime x = r mod 4p lifts, via quadratic reciprocity
    flip = -1 if (p % 4 == 3 and r % 4 == 3) else 1
    return flip * jacobi_symbol(r % p, p)


def character_profile(kappa: int, modulus: int) -> dict[int, int]:
    """Common value of the symbol (kappa/p) on each unit class mod *modulus*.

    The value of (kappa/p) over primes p depends only on p modulo
    8 * |odd radical of kappa|, so it is well defined on unit classes of any
    modulus divisible by that.  Computed factor by factor through quadratic
    reciprocity, never through a Jacobi symbol with negative modulus.
    """
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    if modulus <= 0 or modulus % 8 != 0:
        raise ValueError(f"modulus must be a positive multiple of 8, got {modulus}")
    factors = factorize(kappa)
    for p in factors:
        if p != 2 and modulus % p != 0:
            raise ValueError(f"modulus {modulus} misses odd prime {p} dividing kappa")
    e2 = factors.get(2, 0)
    odd_primes = [(p, e) for p, e in factors.items() if p != 2 and e % 2 == 1]
    profile: dict[int, int] = {}
    for r in range(1, modulus):
        if math.gcd(r, modulus) != 1:
            continue
        value = 1
        if kappa < 0 and r % 4 == 3:
            value = -value
        if e2 % 2 == 1 and r % 8 in (3, 5):
            value = -value
        for p, _ in odd_primes:
            value *= _symbol_of_odd_prime_at_class(p, r)
        profile[r] = value
    return profile


def symbol_at_class(kappa: int, r: int, modulus: int) -> int:
    """(kappa/p) for primes p = r (mod modulus); preconditions as above."""
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    if modulus % 8 != 0:
        raise ValueError("modulus must be a multiple of 8")
    if math.gcd(r, modulus) != 1:
        raise ValueError(f"{r} is not a unit mod {modulus}")
    value = 1
    factors = factorize(kappa)
    if kappa < 0 and r % 4 == 3:
        value = -value
    if factors.get(2, 0) % 2 == 1 and r % 8 in (3, 5):
        value = -value
    for p, e in factors.items():
        if p == 2 or e % 2 == 0:
            continue
        if modulus % p != 0:
            raise ValueError(f"modulus {modulus} misses odd prime {p} dividing kappa")
        value *= _symbol_of_odd_prime_at_class(p, r)
    return value


# ---------------------------------------------------------------------------
# residue class sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResidueClassSet:
    """A modulus together with a set of unit residues modulo it."""

    modulus: int
    residues: frozenset[int]

    def __post_init__(self):
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")
        for r in self.residues:
            if not (0 <= r < self.modulus):
                raise ValueError(f"residue {r} out of range for modulus {self.modulus}")
            if math.gcd(r, self.modulus) != 1:
                raise ValueError(f"residue {r} not coprime to modulus {self.modulus}")

    @classmethod
    def of(cls, modulus: int, residues) -> "ResidueClassSet":
        return cls(modulus, frozenset(r % modulus for r in residues))

    @classmethod
    def all_units(cls, modulus: int) -> "ResidueClassSet":
        return cls(modulus, frozenset(r for r in range(modulus) if math.gcd(r, modulus) == 1))

    @classmethod
    def empty(cls, modulus: int) -> "ResidueClassSet":
        return cls(modulus, frozenset())

    def sorted_residues(self) -> list[int]:
        return sorted(self.residues)

    def lift_to(self, new_modulus: int) -> "ResidueClassSet":
        """Rewrite on a modulus that is a multiple of the current one."""
        if new_modulus % self.modulus != 0:
            raise ValueError(f"{new_modulus} is not a multiple of {self.modulus}")
        lifted = frozenset(
            r
            for r in range(new_modulus)
            if math.gcd(r, new_modulus) == 1 and (r % self.modulus) in self.residues
        )
        return ResidueClassSet(new_modulus, lifted)

    def meet(self, other: "ResidueClassSet") -> "ResidueClassSet":
        """Intersection, computed on the lcm of the two moduli."""
        m = math.lcm(self.modulus, other.modulus)
        a = self.lift_to(m)
        b = other.lift_to(m)
        return ResidueClassSet(m, a.residues & b.residues)

    def join(self, other: "ResidueClassSet") -> "ResidueClassSet":
        """Union, computed on the lcm of the two moduli."""
        m = math.lcm(self.modulus, other.modulus)
        return ResidueClassSet(m, self.lift_to(m).residues | other.lift_to(m).residues)

    def complement(self) -> "ResidueClassSet":
        units = frozenset(r for r in range(self.modulus) if math.gcd(r, self.modulus) == 1)
        return ResidueClassSet(self.modulus, units - self.residues)

    def contains(self, n: int) -> bool:
        return n % self.modulus in self.residues

    def density(self) -> float:
        phi = sum(1 for r in range(self.modulus) if math.gcd(r, self.modulus) == 1)
        return len(self.residues) / phi

    def density_fraction(self) -> tuple[int, int]:
        phi = sum(1 for r in range(self.modulus) if math.gcd(r, self.modulus) == 1)
        g = math.gcd(len(self.residues), phi) or 1
        return (len(self.residues) // g, phi // g)

    def minimized(self) -> "ResidueClassSet":
        """Smallest modulus dividing the current one that still describes the set.

        When the modulus is even, only even candidate moduli are considered:
        the sets here describe odd primes, for which the factor 2 carries no
        information, and reports conventionally keep it.
        """
        best = self
        for divisor in sorted(_divisors(self.modulus)):
            if divisor == self.modulus:
                break
            if self.modulus % 2 == 0 and divisor % 2 != 0:
                continue
            projected = frozenset(r % divisor for r in self.residues)
            if any(math.gcd(r, divisor) != 1 for r in projected):
                continue
            candidate = ResidueClassSet(divisor, projected)
            if candidate.lift_to(self.modulus).residues == self.residues:
                best = candidate
                break
        return best

    def __len__(self) -> int:
        return len(self.residues)


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    divs = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            divs.append(d)
            if d != n // d:
                divs.append(n // d)
    return tuple(sorted(divs))


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result
