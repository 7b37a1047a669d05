"""Prime classification: the parametrized sets S1..S8, the curve families,
and the bounded special-equation searches.

Two notions are kept deliberately separate.  Membership of q in the sets
S1..S8 follows their defining equations (e.g. S4 wants a in {2, 4} or a >= 8
even), while a curve-family representation follows the side conditions of the
corresponding coefficient table (18q.4 wants a >= 7).  A classification
record carries both.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .arith import (
    INT128_MAX,
    is_prime,
    primality_certainty,
    primes_up_to,
    sqrt_exact,
    valuation_split,
)
from .curves import FAMILIES, family_q, is_square_class_instance
from .fixed_classes import (
    S0_FIXED_CLASSES,
    fixed_classes_for_prime,
)


@dataclass(frozen=True)
class SearchBounds:
    """Explicit caps for every representation search; recorded in reports."""

    a_max: int = 64
    b_max: int = 40
    n_values: tuple[int, ...] = (7, 11, 13)

    def describe(self) -> str:
        return f"a,b <= {self.a_max},{self.b_max}; n in {list(self.n_values)}"


DEFAULT_BOUNDS = SearchBounds()


@dataclass(frozen=True, order=True)
class Representation:
    """One parametrized way a prime fits a set or a curve family."""

    family: str
    items: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, family: str, **params: int) -> "Representation":
        return cls(family, tuple(sorted(params.items())))

    @property
    def params(self) -> dict[str, int]:
        return dict(self.items)

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.items)
        return f"{self.family}({inner})"


def _norm_sign_mod4(d: int) -> int:
    """The representative of {d, -d} congruent to 1 mod 4 (d odd)."""
    return d if d % 4 == 1 else -d


def _pow3_exponent(m: int) -> int | None:
    if m < 1:
        return None
    sv = valuation_split(m, 3)
    return sv.exponent if sv.unit_part == 1 else None


def _pow2_exponent(m: int) -> int | None:
    if m < 1:
        return None
    sv = valuation_split(m, 2)
    return sv.exponent if sv.unit_part == 1 else None


def _two_three_split(m: int) -> tuple[int, int] | None:
    """m = 2^a 3^b exactly, or None."""
    if m < 1:
        return None
    a = valuation_split(m, 2)
    b = valuation_split(a.unit_part, 3)
    return (a.exponent, b.exponent) if b.unit_part == 1 else None


# ---------------------------------------------------------------------------
# the sets S1..S8 (and T)
# ---------------------------------------------------------------------------

def _s1_reps(q: int, bounds: SearchBounds) -> list[Representation]:
    out = []
    for de, m in ((0, q - 1), (1, q + 1)):
        split = _two_three_split(m)
        if split is None:
            continue
        a, b = split
        if (a in (2, 3) or a >= 5) and b >= 0 and a <= bounds.a_max:
            out.append(Representation.of("S1", a=a, b=b, de=de))
    return out


def _s2_reps(q: int, bounds: SearchBounds) -> list[Representation]:
    # q = |2^a +- 3^b| with b >= 1; parametrized as q = (-1)^d1 2^a + (-1)^d2 3^b
    out = []
    for a in [2, 3, *range(5, bounds.a_max + 1)]:
        two = 1 << a
        for d1, d2 in ((0, 0), (0, 1), (1, 0)):
            target = {(0, 0): q - two, (0, 1): two - q, (1, 0): q + two}[(d1, d2)]
            b = _pow3_exponent(target)
            if b is not None and 1 <= b <= bounds.b_max:
                out.append(Representation.of("S2", a=a, b=b, d1=d1, d2=d2))
    return sorted(set(out))


def _s3_reps(q: int, bounds: SearchBounds) -> list[Representation]:
    a = _pow2_exponent(3 * q - 1)
    if a is not None and a >= 5 and a % 2 == 1 and a <= bounds.a_max:
        return [Representation.of("S3", a=a)]
    return []


def _s4_reps(q: int, bounds: SearchBounds) -> list[Representation]:
    out = []
    for a in [2, 4, *range(8, bounds.a_max + 1, 2)]:
        for b in range(1, bounds.b_max + 1, 2):
            m = (1 << a) * 3**b
            if m >= q:
                break
            d = sqrt_exact(q - m)
            if d is not None and d > 0:
                out.append(Representation.of("S4", d=d, a=a, b=b))
    return out


def _s5_reps(q: int, bounds: SearchBounds) -> list[Representation]:
    out = []
    for a in [2, 4, *range(8, bounds.a_max + 1, 2)]:
        m = q - (1 << a)
        if m <= 0:
            break
        if m % 3 == 0:
            d = sqrt_exact(m // 3)
            if d is not None and d > 0:
                out.append(Representation.of("S5", d=d, a=a))
    return out


def _s6_reps(q: int, bounds: SearchBounds) -> list[Representation]:
    out = []
    for b in range(1, bounds.b_max + 1, 2):
        m = 4 * q - 3**b
        if m <= 0:
            break
        d = sqrt_exact(m)
        if d is not None and d % 2 == 1:
            out.append(Representation.of("S6", d=d, b=b))
    return out


def _s7_reps(q: int, bounds: SearchBounds) -> list[Representation]:
    m = 4 * q - 1
    if m % 3 == 0:
        d = sqrt_exact(m // 3)
        if d is not None and d % 2 == 1:
            return [Representation.of("S7", d=d)]
    return []


def _s8_reps(q: int, bounds: SearchBounds) -> list[Representation]:
    m = 2 * q + 1
    if m % 3 == 0:
        v = sqrt_exact(m // 3)
        if v is not None:
            u = sqrt_exact(3 * v * v - 2)
            if u is not None:
                return [Representation.of("S8", v=v, u=u)]
    return []


SET_SEARCHES = {
    "S1": _s1_reps, "S2": _s2_reps, "S3": _s3_reps, "S4": _s4_reps,
    "S5": _s5_reps, "S6": _s6_reps, "S7": _s7_reps, "S8": _s8_reps,
}


def set_reps(q: int, name: str, bounds: SearchBounds = DEFAULT_BOUNDS) -> list[Representation]:
    if name not in SET_SEARCHES:
        raise ValueError(f"unknown set: {name}")
    return sorted(SET_SEARCHES[name](q, bounds))


def in_set(q: int, name: str, bounds: SearchBounds = DEFAULT_BOUNDS) -> bool:
    return bool(set_reps(q, name, bounds))


def in_s0(q: int, bounds: SearchBounds = DEFAULT_BOUNDS) -> bool:
    return any(SET_SEARCHES[name](q, bounds) for name in SET_SEARCHES)


def in_t(q: int, bounds: SearchBounds = DEFAULT_BOUNDS) -> bool:
    if _s7_reps(q, bounds):
        return True
    m = q - 16
    return m > 0 and m % 3 == 0 and sqrt_exact(m // 3) is not None


# ---------------------------------------------------------------------------
# curve-family representation search
# ---------------------------------------------------------------------------

def _fam_18q1(q, bounds):
    for de, m in ((0, q - 1), (1, q + 1)):
        split = _two_three_split(m)
        if split and split[0] >= 5:
            yield {"a": split[0], "b": split[1], "de": de}


def _fam_18q2(q, bounds):
    a = _pow2_exponent(3 * q - 1)
    if a is not None and a >= 5 and a % 2 == 1:
        yield {"a": a}


def _fam_18q3(q, bounds):
    for a in range(5, bounds.a_max + 1):
        two = 1 << a
        for d1, d2 in ((0, 0), (0, 1), (1, 0)):
            target = q - two if d1 == 0 else q + two
            if d2 == 1:
                target = two - q
            if target < 3:
                continue
            b = _pow3_exponent(target)
            if b is not None and 1 <= b <= bounds.b_max:
                yield {"a": a, "b": b, "d1": d1, "d2": d2}


def _fam_18q4(q, bounds):
    for a in range(7, bounds.a_max + 1):
        for b in range(0, bounds.b_max + 1):
            m = (1 << a) * 3**b
            if m > INT128_MAX:
                break
            for d1, d2 in ((0, 0), (0, 1), (1, 0)):
                target = {(0, 0): q - m, (0, 1): q + m, (1, 0): m - q}[(d1, d2)]
                if target <= 0:
                    continue
                d = sqrt_exact(target)
                if d is None or d == 0:
                    continue
                params = {"d": _norm_sign_mod4(d), "a": a, "b": b, "d1": d1, "d2": d2}
                if FAMILIES["18q.4"].condition(params):
                    yield params


def _fam_18q5(q, bounds):
    for a in range(7, bounds.a_max + 1):
        two = 1 << a
        for d1, d2 in ((0, 0), (0, 1), (1, 0)):
            target = {(0, 0): q - two, (0, 1): q + two, (1, 0): two - q}[(d1, d2)]
            if target <= 0 or target % 3 != 0:
                continue
            d = sqrt_exact(target // 3)
            if d is None or d == 0:
                continue
            yield {"d": _norm_sign_mod4(d), "a": a, "d1": d1, "d2": d2}


def _fam_18q6(q, bounds):
    for b in range(1, bounds.b_max + 1):
        base = q * 3**b
        if base > INT128_MAX:
            break
        for a in range(7, bounds.a_max + 1, 2):
            target = base - (1 << a)
            if target <= 0:
                break
            d = sqrt_exact(target)
            if d is not None and d % 2 == 1:
                yield {"d": _norm_sign_mod4(d), "a": a, "b": b}


def _fam_36q1(q, bounds):
    m = 2 * q + 1
    if m % 3 == 0:
        v = sqrt_exact(m // 3)
        if v is not None and v % 2 == 1:
            u = sqrt_exact(3 * v * v - 2)
            if u is not None:
                yield {"u": _norm_sign_mod4(u), "v": _norm_sign_mod4(v)}


def _fam_36q2(q, bounds):
    m = 4 * q - 1
    if m % 3 == 0:
        d = sqrt_exact(m // 3)
        if d is not None and d % 8 in (1, 7):
            yield {"d": d if d % 8 == 1 else -d}


def _fam_36q3(q, bounds):
    if q % 4 != 3:
        return
    for b in range(1, bounds.b_max + 1, 2):
        target = 4 * q - 3**b
        if target <= 0:
            break
        d = sqrt_exact(target)
        if d is not None:
            yield {"d": _norm_sign_mod4(d), "b": b}


def _fam_36q4(q, bounds):
    for b in range(1, bounds.b_max + 1, 2):
        m = 4 * 3**b
        for de in (0, 1):
            target = m + q if de == 0 else m - q
            if target <= 0:
                continue
            d = sqrt_exact(target)
            if d is not None:
                yield {"d": _norm_sign_mod4(d), "b": b, "de": de}


def _fam_36q5(q, bounds):
    for n in bounds.n_values:
        power = q**n
        if power > INT128_MAX:
            continue
        for b in range(1, bounds.b_max + 1, 2):
            m = 4 * 3**b
            for de in (0, 1):
                target = m + power if de == 0 else m - power
                if target <= 0:
                    continue
                d = sqrt_exact(target)
                if d is not None:
                    yield {"d": _norm_sign_mod4(d), "b": b, "de": de, "n": n}


def _fam_36q6(q, bounds):
    m = q + 4
    if m % 3 == 0:
        d = sqrt_exact(m // 3)
        if d is not None and d % 2 == 1:
            yield {"d": _norm_sign_mod4(d)}


def _fam_36q7(q, bounds):
    for b in range(0, bounds.b_max + 1, 2):
        target = q - 4 * 3**b
        if target <= 0:
            break
        d = sqrt_exact(target)
        if d is not None and d % 2 == 1:
            yield {"d": _norm_sign_mod4(d), "b": b}


def _fam_72q1(q, bounds):
    b = _pow3_exponent(4 * q - 1)
    if b is not None and b % 2 == 1 and b >= 1:
        yield {"b": b}


def _fam_72q2(q, bounds):
    for de, m in ((0, q - 1), (1, q + 1)):
        split = _two_three_split(m)
        if split and split[0] in (2, 3):
            yield {"a": split[0], "b": split[1], "de": de}


def _fam_72q3(q, bounds):
    for a in (2, 3):
        for de in (0, 1):
            target = q - (1 << a) if de == 0 else q + (1 << a)
            if target < 1:
                continue
            b = _pow3_exponent(target)
            if b is not None and b <= bounds.b_max:
                yield {"a": a, "b": b, "de": de}


def _fam_72q4(q, bounds):
    m = q - 4
    if m > 0 and m % 3 == 0:
        d = sqrt_exact(m // 3)
        if d is not None and d % 2 == 1:
            yield {"d": _norm_sign_mod4(d)}


def _fam_72q5(q, bounds):
    for a in (4, 5):
        for de in (0, 1):
            m = q - (1 << a) if de == 0 else q + (1 << a)
            if m <= 0 or m % 3 != 0:
                continue
            d = sqrt_exact(m // 3)
            if d is not None and d % 2 == 1:
                yield {"d": _norm_sign_mod4(d), "a": a, "de": de}


def _fam_72q6(q, bounds):
    m = 4 * q - 1
    if m % 3 == 0:
        d = sqrt_exact(m // 3)
        if d is not None and d % 8 in (3, 5):
            yield {"d": d if d % 8 == 5 else -d}


def _fam_72q7(q, bounds):
    if q % 4 != 1:
        return
    for b in range(1, bounds.b_max + 1, 2):
        target = 4 * q - 3**b
        if target <= 0:
            break
        d = sqrt_exact(target)
        if d is not None:
            yield {"d": _norm_sign_mod4(d), "b": b}


def _fam_72q8(q, bounds):
    for b in range(1, bounds.b_max + 1, 2):
        target = q - 4 * 3**b
        if target <= 0:
            break
        d = sqrt_exact(target)
        if d is not None and d % 2 == 1:
            yield {"d": _norm_sign_mod4(d), "b": b}


def _fam_72q9(q, bounds):
    for a in (4, 5):
        for b in range(0, bounds.b_max + 1):
            m = (1 << a) * 3**b
            for d1, d2 in ((0, 0), (0, 1), (1, 0)):
                target = {(0, 0): q - m, (0, 1): q + m, (1, 0): m - q}[(d1, d2)]
                if target <= 0:
                    continue
                d = sqrt_exact(target)
                if d is None or d == 0:
                    continue
                params = {"d": _norm_sign_mod4(d), "a": a, "b": b, "d1": d1, "d2": d2}
                if FAMILIES["72q.9"].condition(params):
                    yield params


def _fam_72q10(q, bounds):
    for n in bounds.n_values:
        power = q**n
        if power > INT128_MAX:
            continue
        for a in (4, 5):
            for b in range(0, bounds.b_max + 1):
                if a == 4 and b % 2 == 0:
                    continue
                m = (1 << a) * 3**b
                for de in (0, 1):
                    target = m + power if de == 0 else m - power
                    if target <= 0:
                        continue
                    d = sqrt_exact(target)
                    if d is not None:
                        yield {"d": _norm_sign_mod4(d), "a": a, "b": b, "de": de, "n": n}


def _fam_72q11(q, bounds):
    for b in range(0, bounds.b_max + 1):
        base = q * 3**b
        if base > INT128_MAX:
            break
        d = sqrt_exact(base - 32)
        if d is not None and d % 2 == 1:
            yield {"d": _norm_sign_mod4(d), "b": b}


def _fam_72q12(q, bounds):
    for n in bounds.n_values:
        power = q**n
        for b in range(0, bounds.b_max + 1):
            base = power * 3**b
            if base > INT128_MAX:
                break
            d = sqrt_exact(base - 32)
            if d is not None and d % 2 == 1:
                yield {"d": _norm_sign_mod4(d), "b": b, "n": n}


FAMILY_SEARCHES = {
    "18q.1": _fam_18q1, "18q.2": _fam_18q2, "18q.3": _fam_18q3, "18q.4": _fam_18q4,
    "18q.5": _fam_18q5, "18q.6": _fam_18q6,
    "36q.1": _fam_36q1, "36q.2": _fam_36q2, "36q.3": _fam_36q3, "36q.4": _fam_36q4,
    "36q.5": _fam_36q5, "36q.6": _fam_36q6, "36q.7": _fam_36q7,
    "72q.1": _fam_72q1, "72q.2": _fam_72q2, "72q.3": _fam_72q3, "72q.4": _fam_72q4,
    "72q.5": _fam_72q5, "72q.6": _fam_72q6, "72q.7": _fam_72q7, "72q.8": _fam_72q8,
    "72q.9": _fam_72q9, "72q.10": _fam_72q10, "72q.11": _fam_72q11, "72q.12": _fam_72q12,
}


def search_family(q: int, family: str, bounds: SearchBounds = DEFAULT_BOUNDS) -> list[Representation]:
    """All representations of a prime q in one family, within bounds.

    Every returned representation is validated against the family's side
    conditions and reproduces q (or q^n) exactly.  The list is complete
    within the stated bounds and sorted deterministically.
    """
    if q < 5 or not is_prime(q):
        raise ValueError(f"q must be a prime >= 5, got {q}")
    if family in SET_SEARCHES:
        return set_reps(q, family, bounds)
    if family not in FAMILY_SEARCHES:
        raise ValueError(f"unknown family: {family}")
    reps = []
    for params in FAMILY_SEARCHES[family](q, bounds):
        assert family_q(family, params) == q, (family, params)
        reps.append(Representation.of(family, **params))
    return sorted(set(reps))


# ---------------------------------------------------------------------------
# classification records
# ---------------------------------------------------------------------------

@dataclass
class CurveInstance:
    """A curve class attached to q: family class + parameters (or fixed label)."""

    label: str                      # e.g. "18q.4.a" or a fixed class label
    rep: Representation | None      # None for fixed classes
    square_class: bool              # lies in the T^2 / -3T^2 census

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "params": self.rep.params if self.rep else None,
            "square_class": self.square_class,
        }


@dataclass
class ClassificationRecord:
    q: int
    reps: list[Representation]
    in_s: bool
    in_s0: bool
    in_t: bool
    fixed_classes: list[str]
    curve_instances: list[CurveInstance]
    bounds: SearchBounds = field(default=DEFAULT_BOUNDS)

    def set_reps(self) -> list[Representation]:
        return [r for r in self.reps if r.family.startswith("S")]

    def family_reps(self) -> list[Representation]:
        return [r for r in self.reps if not r.family.startswith("S")]

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "in_S": self.in_s,
            "in_S0": self.in_s0,
            "in_T": self.in_t,
            "set_reps": [{"family": r.family, "params": r.params} for r in self.set_reps()],
            "family_reps": [{"family": r.family, "params": r.params} for r in self.family_reps()],
            "fixed_classes": self.fixed_classes,
            "curve_instances": [ci.to_dict() for ci in self.curve_instances],
            "bounds": self.bounds.describe(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def classify_prime(q: int, bounds: SearchBounds = DEFAULT_BOUNDS) -> ClassificationRecord:
    """Full classification of one prime q >= 5."""
    if q < 5 or not is_prime(q):
        raise ValueError(f"q must be a prime >= 5, got {q}")
    reps: list[Representation] = []
    for name in SET_SEARCHES:
        reps.extend(set_reps(q, name, bounds))
    instances: list[CurveInstance] = []
    for family in FAMILY_SEARCHES:
        for rep in search_family(q, family, bounds):
            letter_map = FAMILIES[family].coefficients
            reps.append(rep)
            for letter in sorted(letter_map):
                instances.append(CurveInstance(
                    label=f"{family}.{letter}",
                    rep=rep,
                    square_class=is_square_class_instance(family, letter, rep.params),
                ))
    fixed = fixed_classes_for_prime(q)
    for label in fixed:
        instances.append(CurveInstance(
            label=label, rep=None, square_class=label in S0_FIXED_CLASSES))
    record = ClassificationRecord(
        q=q,
        reps=sorted(set(reps)),
        in_s=bool(instances),
        in_s0=in_s0(q, bounds),
        in_t=in_t(q, bounds),
        fixed_classes=fixed,
        curve_instances=instances,
        bounds=bounds,
    )
    assert not record.in_s0 or record.in_s or not fixed, record
    return record


# ---------------------------------------------------------------------------
# range scans
# ---------------------------------------------------------------------------

SCAN_SELECTORS = ("outside-S", "S-minus-S0", "S0", "T", "census")
DESK_SCALE_LIMIT = 10**7


def scan_range(x_max: int, which: str, bounds: SearchBounds = DEFAULT_BOUNDS,
               allow_large: bool = False):
    """Scan the primes in [5, x_max].

    Selectors "outside-S", "S-minus-S0", "S0" and "T" return the sorted list
    of matching primes; "census" returns cumulative (x, #S, #S0, #T) rows at
    powers of ten.
    """
    if which not in SCAN_SELECTORS:
        raise ValueError(f"unknown selector: {which}")
    if x_max > DESK_SCALE_LIMIT and not allow_large:
        raise ValueError(f"x_max > {DESK_SCALE_LIMIT}; pass allow_large to override")
    primes = [p for p in primes_up_to(x_max) if p >= 5]
    if which == "S0":
        return [q for q in primes if in_s0(q, bounds)]
    if which == "T":
        return [q for q in primes if in_t(q, bounds)]

    def in_s_flag(q: int) -> bool:
        if fixed_classes_for_prime(q):
            return True
        return any(next(iter(FAMILY_SEARCHES[f](q, bounds)), None) is not None
                   for f in FAMILY_SEARCHES)

    if which == "outside-S":
        return [q for q in primes if not in_s_flag(q)]
    if which == "S-minus-S0":
        return [q for q in primes if not in_s0(q, bounds) and in_s_flag(q)]
    # census
    rows = []
    checkpoints = []
    x = 10
    while x <= x_max:
        checkpoints.append(x)
        x *= 10
    if not checkpoints or checkpoints[-1] != x_max:
        checkpoints.append(x_max)
    count_s = count_s0 = count_t = 0
    idx = 0
    for cp in checkpoints:
        while idx < len(primes) and primes[idx] <= cp:
            q = primes[idx]
            if in_s_flag(q):
                count_s += 1
            if in_s0(q, bounds):
                count_s0 += 1
            if in_t(q, bounds):
                count_t += 1
            idx += 1
        rows.append((cp, count_s, count_s0, count_t))
    return rows


# ---------------------------------------------------------------------------
# special bounded equation searches
# ---------------------------------------------------------------------------

def special_equation_search(equation: str, bound: int = 60) -> list[tuple]:
    """Complete solution lists for three auxiliary equations, within bounds.

    "frosty":           2^x = 3 y^2 + 5 in positive integers, x <= bound
    "s2s6":             d^2 = 4*3^b2 - 3^b6 + 16, all odd positive, exps <= bound
    "levi-ben-gerson":  2^x - 3^y = 1 with x >= 2, x <= bound
    """
    if equation == "frosty":
        out = []
        for x in range(1, bound + 1):
            m = (1 << x) - 5
            if m <= 0 or m % 3 != 0:
                continue
            y = sqrt_exact(m // 3)
            if y is not None and y > 0:
                out.append((x, y))
        return out
    if equation == "s2s6":
        out = []
        for b2 in range(1, bound + 1, 2):
            for b6 in range(1, bound + 1, 2):
                m = 4 * 3**b2 - 3**b6 + 16
                if m <= 0:
                    break
                d = sqrt_exact(m)
                if d is not None and d % 2 == 1:
                    out.append((d, b2, b6))
        return sorted(out)
    if equation == "levi-ben-gerson":
        out = []
        for x in range(2, bound + 1):
            y_candidate = _pow3_exponent((1 << x) - 1)
            if y_candidate is not None and y_candidate >= 1:
                out.append((x, y_candidate))
        return out
    raise ValueError(f"unknown equation: {equation}")


def trivial_solutions(q: int, alpha: int = 1) -> dict | None:
    """A C = +-1 style solution when the prime forces one.

    q^alpha = (3 d^2 + 1)/4 yields ((d+1)/2)^3 + ((1-d)/2)^3 = q^alpha, and
    q = 3 d^2 + 16 yields the related (d+4)^3 + (4-d)^3 = 8 q, reported with
    its own tag since the cube on the right is 2^3.
    """
    if q < 5:
        raise ValueError("q must be at least 5")
    power = q**alpha
    m = 4 * power - 1
    if m % 3 == 0:
        d = sqrt_exact(m // 3)
        if d is not None and d % 2 == 1:
            a, b = (d + 1) // 2, (1 - d) // 2
            assert a**3 + b**3 == power
            return {"kind": "trivial", "A": a, "B": b, "C": 1, "d": d}
    if alpha == 1 and (q - 16) % 3 == 0 and q > 16:
        d = sqrt_exact((q - 16) // 3)
        if d is not None:
            assert (d + 4) ** 3 + (4 - d) ** 3 == 8 * q
            return {"kind": "eight-q", "A": d + 4, "B": 4 - d, "C": 2, "d": d}
    return None


# ---------------------------------------------------------------------------
# the unit-norm recurrence behind S8
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PellRow:
    k: int
    v: int
    u: int
    q_candidate: int
    status: str  # "prime" | "composite" | "probable-prime" | "unit"


def pell_sequence_S8(count: int) -> tuple[list[PellRow], bool]:
    """First terms of v(k+1) = 4 v(k) - v(k-1), v0 = 1, v1 = 3, with
    u recovered from u^2 = 3 v^2 - 2 and the prime candidate (3 v^2 - 1)/2.

    Returns (rows, truncated); truncated is set when the candidate leaves the
    128-bit guard range before `count` rows are produced.
    """
    if count < 1:
        raise ValueError("count must be positive")
    vs, us = [1, 3], [1, 5]
    while len(vs) < count:
        vs.append(4 * vs[-1] - vs[-2])
        us.append(4 * us[-1] - us[-2])
    rows: list[PellRow] = []
    truncated = False
    for k, (v, u) in enumerate(zip(vs[:count], us[:count])):
        assert u * u - 3 * v * v == -2
        q_cand = (3 * v * v - 1) // 2
        if q_cand > INT128_MAX:
            truncated = True
            break
        if q_cand == 1:
            status = "unit"
        elif is_prime(q_cand):
            status = "prime" if primality_certainty(q_cand) == "proved" else "probable-prime"
        else:
            status = "composite"
        rows.append(PellRow(k, v, u, q_cand, status))
    return rows, truncated
