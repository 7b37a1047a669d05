"""Weierstrass models and the parametrized curve families of conductor 18q/36q/72q.

Each family is stored twice, on purpose: once as long-Weierstrass coefficient
tables (with the discriminant columns kept for validation), and once as closed
forms for c4 and c6 (see appendix_forms).  The two transcriptions are
independent, so the test suite can cross-check them against the generic
b/c invariant formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .arith import jacobi_symbol, squarefree_part, sqrt_exact, valuation


class SingularModelError(ValueError):
    """The coefficients describe a singular cubic (discriminant zero)."""


class BadReductionError(ValueError):
    """A local computation was requested at a prime of bad reduction."""


@dataclass(frozen=True)
class CurveModel:
    """Long Weierstrass model y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    label: str | None = None

    def ainvs(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)


@dataclass(frozen=True)
class Invariants:
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    disc: int
    # signs of the valuation of j = c4^3 / disc at 2 and 3
    j_valuations: dict[int, int] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class SquareClass:
    """disc = witness**2, disc = -3 * witness**2, or neither."""

    kind: str  # "square" | "minus3-square" | "other"
    witness: int | None = None


def weierstrass_invariants(m: CurveModel) -> Invariants:
    """Exact b- and c-invariants; raises SingularModelError when disc = 0."""
    a1, a2, a3, a4, a6 = m.ainvs()
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -b2**3 + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if disc == 0:
        raise SingularModelError(f"singular model {m.ainvs()}")
    assert c4**3 - c6**2 == 1728 * disc
    jvals = {}
    for ell in (2, 3):
        vj = 3 * valuation(c4, ell) - valuation(disc, ell) if c4 != 0 else 10**9
        jvals[ell] = (vj > 0) - (vj < 0)
    return Invariants(b2, b4, b6, b8, c4, c6, disc, jvals)


def discriminant_square_class(disc: int) -> SquareClass:
    if disc == 0:
        raise ValueError("discriminant must be nonzero")
    if disc > 0:
        t = sqrt_exact(disc)
        if t is not None:
            return SquareClass("square", t)
    if disc < 0 and (-disc) % 3 == 0:
        t = sqrt_exact(-disc // 3)
        if t is not None:
            return SquareClass("minus3-square", t)
    return SquareClass("other")


# ---------------------------------------------------------------------------
# point counting
# ---------------------------------------------------------------------------

def count_points(m: CurveModel, ell: int) -> int:
    """#E(F_ell) by exhaustive x-scan; requires ell >= 3 of good reduction."""
    if ell < 3:
        raise ValueError("counting needs an odd prime")
    inv = weierstrass_invariants(m)
    if inv.disc % ell == 0:
        raise BadReductionError(f"bad reduction at {ell}")
    b2, b4, b6 = inv.b2 % ell, inv.b4 % ell, inv.b6 % ell
    total = ell + 1
    for x in range(ell):
        rhs = (((4 * x + b2) * x + 2 * b4) * x + b6) % ell
        if rhs:
            total += jacobi_symbol(rhs, ell)
    return total


def trace_of_frobenius(m: CurveModel, ell: int) -> int:
    """a_ell = ell + 1 - #E(F_ell); Hasse bound asserted."""
    a = ell + 1 - count_points(m, ell)
    assert a * a <= 4 * ell
    return a


def four_divisibility_predicate(u: int, v: int, ell: int) -> bool:
    """For y^2 = x^3 + u*x^2 + v*x at a good prime ell >= 5:

    true exactly when the group over F_ell has order divisible by 4, which
    happens iff the discriminant or v is a square mod ell.
    """
    if ell < 5:
        raise ValueError("predicate needs ell >= 5")
    disc = 16 * v * v * (u * u - 4 * v)
    if disc == 0:
        raise SingularModelError(f"singular: u={u} v={v}")
    if disc % ell == 0:
        raise BadReductionError(f"bad reduction at {ell}")
    return jacobi_symbol(u * u - 4 * v, ell) == 1 or jacobi_symbol(v, ell) == 1


def quadratic_twist(m: CurveModel, t: int) -> CurveModel:
    """Twist of a y^2 = x^3 + a2 x^2 + a4 x + a6 model by squarefree t."""
    if m.a1 != 0 or m.a3 != 0:
        raise ValueError("twist needs an a1 = a3 = 0 model; complete the square first")
    if t == 0 or squarefree_part(t) != t:
        raise ValueError(f"twist scalar must be squarefree and nonzero: {t}")
    return CurveModel(0, t * m.a2, 0, t * t * m.a4, t**3 * m.a6)


def to_two_torsion_form(m: CurveModel) -> tuple[int, int]:
    """Move a rational 2-torsion point to (0, 0).

    Returns (u, v) with the curve isomorphic to y^2 = x^3 + u*x^2 + v*x.
    Scales x by 4 when completing the square, which multiplies the
    discriminant by 2^12 and so leaves it unchanged modulo squares.
    """
    inv = weierstrass_invariants(m)
    b2, b4, b6 = inv.b2, inv.b4, inv.b6
    root = _integer_cubic_root(b2, 8 * b4, 16 * b6)
    if root is None:
        raise ValueError("model has no rational 2-torsion point with integral x")
    u = 3 * root + b2
    v = 3 * root * root + 2 * b2 * root + 8 * b4
    return u, v


def _integer_cubic_root(A: int, B: int, C: int) -> int | None:
    # integer roots of x^3 + A x^2 + B x + C, by bisection on each monotone piece
    def g(x: int) -> int:
        return ((x + A) * x + B) * x + C

    bound = 4 * (2 + max(abs(A), math.isqrt(abs(B) + 1), round(abs(C) ** (1 / 3)) + 1))
    crit: list[int] = []
    disc = A * A - 3 * B
    if disc > 0:
        r = math.isqrt(disc)
        crit = sorted({(-A - r) // 3, (-A + r) // 3})
    cuts = [-bound] + [c for c in crit if -bound < c < bound] + [bound]
    for lo, hi in zip(cuts, cuts[1:]):
        glo, ghi = g(lo), g(hi)
        if glo == 0:
            return lo
        if ghi == 0:
            return hi
        if (glo < 0) == (ghi < 0):
            continue
        rising = glo < 0
        a, b = lo, hi
        while a <= b:
            mid = (a + b) // 2
            val = g(mid)
            if val == 0:
                return mid
            if (val < 0) == rising:
                a = mid + 1
            else:
                b = mid - 1
    return None


# ---------------------------------------------------------------------------
# the parametrized families
# ---------------------------------------------------------------------------

def _s(e: int) -> int:
    """(-1)**e"""
    return -1 if e % 2 else 1


def _xdiv(n: int, d: int) -> int:
    q, r = divmod(n, d)
    if r:
        raise ArithmeticError(f"non-integral table entry: {n}/{d}")
    return q


@dataclass(frozen=True)
class FamilySpec:
    """One parametrized family of curves sharing a conductor shape."""

    family: str                 # e.g. "18q.3"
    level: int                  # 18, 36 or 72 (conductor / q)
    params: tuple[str, ...]
    q_power: str                # "1" or "n"
    # value(params): the integer that must equal q (or q**n); -1 when malformed
    value: Callable[[Mapping[str, int]], int]
    condition: Callable[[Mapping[str, int]], bool]
    # class letter -> curve index -> (a2, a4, a6) builders
    coefficients: dict[str, dict[str, Callable[[int, Mapping[str, int]], tuple[int, int, int]]]]
    # curve index -> tabulated discriminant
    disc: dict[str, Callable[[int, Mapping[str, int]], int]]
    # class letter -> params -> class belongs to the square-discriminant census
    square_class: dict[str, Callable[[Mapping[str, int]], bool]]
    designated: dict[str, str]  # class letter -> curve index with v_q(disc) = 2


def _cond_18q4(p) -> bool:
    ok = p["a"] >= 7 and p["b"] >= 0 and (p["d1"], p["d2"]) != (1, 1) and p["d"] % 4 == 1
    if ok and p["a"] % 2 == 0 and p["b"] % 2 == 0:
        ok = (p["d1"], p["d2"]) == (0, 0)
    return ok


def _cond_72q9(p) -> bool:
    ok = p["a"] in (4, 5) and p["b"] >= 0 and (p["d1"], p["d2"]) != (1, 1) and p["d"] % 4 == 1
    if ok and p["a"] == 4 and p["d1"] != p["d2"]:
        ok = p["b"] % 2 == 1
    return ok


def _lpf_at_least_7(n: int) -> bool:
    return n > 1 and all(n % f for f in (2, 3, 5))


FAMILIES: dict[str, FamilySpec] = {}


def _register(spec: FamilySpec) -> None:
    FAMILIES[spec.family] = spec


_register(FamilySpec(
    family="18q.1", level=18, params=("a", "b", "de"), q_power="1",
    value=lambda p: 2 ** p["a"] * 3 ** p["b"] + _s(p["de"]),
    condition=lambda p: p["a"] >= 5 and p["b"] >= 0 and p["de"] in (0, 1),
    coefficients={"a": {
        "a1": lambda q, p: (_s(p["de"] + 1) * 2 ** (p["a"] - 1) * 3 ** (p["b"] + 1) - 1,
                            2 ** (p["a"] - 4) * 3 ** (p["b"] + 2) * q, 0),
        "a2": lambda q, p: (_s(p["de"] + 1) * 2 ** (p["a"] - 1) * 3 ** (p["b"] + 1) - 1,
                            -(2 ** (p["a"] - 2)) * 3 ** (p["b"] + 2) * q,
                            _s(p["de"]) * 2 ** (p["a"] - 4) * 3 ** (p["b"] + 3) * (2 * q - _s(p["de"])) * q),
        "a3": lambda q, p: (_s(p["de"] + 1) * 2 ** (p["a"] - 3) * 3 ** (p["b"] + 1) - 1,
                            2 ** (2 * p["a"] - 8) * 3 ** (2 * p["b"] + 2), 0),
        "a4": lambda q, p: (_s(p["de"]) * 2 ** (p["a"] - 2) * 3 ** (p["b"] + 1) - 1,
                            _s(p["de"]) * 2 ** (p["a"] - 2) * 3 ** (p["b"] + 2),
                            2 ** (p["a"] - 4) * 3 ** (p["b"] + 3) * (q - 2 * _s(p["de"]))),
    }},
    disc={
        "a1": lambda q, p: 2 ** (2 * p["a"] - 8) * 3 ** (2 * p["b"] + 6) * q * q,
        "a2": lambda q, p: 2 ** (p["a"] - 4) * 3 ** (p["b"] + 6) * q,
        "a3": lambda q, p: _s(p["de"]) * 2 ** (4 * p["a"] - 16) * 3 ** (4 * p["b"] + 6) * q,
        "a4": lambda q, p: _s(p["de"] + 1) * 2 ** (p["a"] - 4) * 3 ** (p["b"] + 6) * q**4,
    },
    square_class={"a": lambda p: True},
    designated={"a": "a1"},
))

_register(FamilySpec(
    family="18q.2", level=18, params=("a",), q_power="1",
    value=lambda p: (2 ** p["a"] + 1) // 3 if (2 ** p["a"] + 1) % 3 == 0 else -1,
    condition=lambda p: p["a"] >= 5 and p["a"] % 2 == 1,
    coefficients={"a": {
        "a1": lambda q, p: (-3 * 2 ** (p["a"] - 1) - 1, 2 ** (p["a"] - 4) * 27 * q, 0),
        "a2": lambda q, p: (-3 * 2 ** (p["a"] - 1) - 1, -(2 ** (p["a"] - 2)) * 27 * q,
                            2 ** (p["a"] - 4) * 81 * (2 ** (p["a"] + 1) + 1) * q),
        "a3": lambda q, p: (-3 * 2 ** (p["a"] - 3) - 1, 2 ** (2 * p["a"] - 8) * 9, 0),
        "a4": lambda q, p: (3 * 2 ** (p["a"] - 2) - 1, 2 ** (p["a"] - 2) * 9,
                            2 ** (p["a"] - 4) * 27 * (2 ** p["a"] - 1)),
    }},
    disc={
        "a1": lambda q, p: 2 ** (2 * p["a"] - 8) * 3**8 * q * q,
        "a2": lambda q, p: 2 ** (p["a"] - 4) * 3**7 * q,
        "a3": lambda q, p: 2 ** (4 * p["a"] - 16) * 3**7 * q,
        "a4": lambda q, p: -(2 ** (p["a"] - 4)) * 3**10 * q**4,
    },
    square_class={"a": lambda p: True},
    designated={"a": "a1"},
))


def _a2_18q3_main(q, p):
    s, s1 = _s(p["b"] + p["d1"] + p["d2"] + 1), _s(p["d1"])
    return _xdiv(-1 + s * (3 * 2 ** p["a"] + s1 * 3 * q), 4)


def _a2_18q3_a3(q, p):
    s = _s(p["b"] + p["d1"] + p["d2"] + 1)
    return s * 3 * 2 ** (p["a"] - 3) + _xdiv(-1 - _s(p["b"]) * 3 ** (p["b"] + 1), 4)


def _a2_18q3_a4(q, p):
    s, s1 = _s(p["b"] + p["d1"] + p["d2"] + 1), _s(p["d1"])
    return _xdiv(-1 - s * (3 * 2 ** (p["a"] + 1) - s1 * 3 * q), 4)


_register(FamilySpec(
    family="18q.3", level=18, params=("a", "b", "d1", "d2"), q_power="1",
    value=lambda p: _s(p["d1"]) * 2 ** p["a"] + _s(p["d2"]) * 3 ** p["b"],
    condition=lambda p: p["a"] >= 5 and p["b"] >= 1 and p["d1"] in (0, 1) and p["d2"] in (0, 1),
    coefficients={"a": {
        "a1": lambda q, p: (_a2_18q3_main(q, p), _s(p["d1"]) * 2 ** (p["a"] - 4) * 9 * q, 0),
        "a2": lambda q, p: (_a2_18q3_main(q, p), _s(p["d1"] + 1) * 2 ** (p["a"] - 2) * 9 * q,
                            _s(p["b"] + p["d2"]) * 27 * 2 ** (p["a"] - 4)
                            * (2 ** (p["a"] + 1) + _s(p["d1"] + p["d2"]) * 3 ** p["b"]) * q),
        "a3": lambda q, p: (_a2_18q3_a3(q, p), 2 ** (2 * p["a"] - 8) * 9, 0),
        "a4": lambda q, p: (_a2_18q3_a4(q, p), _s(p["d1"] + p["d2"]) * 2 ** (p["a"] - 2) * 3 ** (p["b"] + 2),
                            _s(p["b"] + p["d1"] + p["d2"] + 1) * 3 ** (p["b"] + 3) * 2 ** (p["a"] - 4)
                            * (3 ** p["b"] + _s(1 + p["d1"] + p["d2"]) * 2 ** p["a"])),
    }},
    disc={
        "a1": lambda q, p: 2 ** (2 * p["a"] - 8) * 3 ** (2 * p["b"] + 6) * q * q,
        # the tabulated a2 entry misses the (-1)**d1 factor; restored here
        "a2": lambda q, p: _s(p["d1"]) * 2 ** (p["a"] - 4) * 3 ** (4 * p["b"] + 6) * q,
        "a3": lambda q, p: _s(p["d2"]) * 2 ** (4 * p["a"] - 16) * 3 ** (p["b"] + 6) * q,
        "a4": lambda q, p: _s(p["d1"] + p["d2"] + 1) * 2 ** (p["a"] - 4) * 3 ** (p["b"] + 6) * q**4,
    },
    square_class={"a": lambda p: True},
    designated={"a": "a1"},
))

_register(FamilySpec(
    family="18q.4", level=18, params=("d", "a", "b", "d1", "d2"), q_power="1",
    value=lambda p: _s(p["d1"]) * p["d"] ** 2 + _s(p["d2"]) * 2 ** p["a"] * 3 ** p["b"],
    condition=_cond_18q4,
    coefficients={"a": {
        "a1": lambda q, p: (-_xdiv(3 * p["d"] + 1, 4),
                            _s(p["d1"] + p["d2"] + 1) * 2 ** (p["a"] - 6) * 3 ** (p["b"] + 2), 0),
        "a2": lambda q, p: (-_xdiv(3 * p["d"] + 1, 4),
                            _s(p["d1"] + p["d2"]) * 2 ** (p["a"] - 4) * 3 ** (p["b"] + 2),
                            _s(p["d1"] + p["d2"] + 1) * 2 ** (p["a"] - 6) * 3 ** (p["b"] + 3) * p["d"]),
    }},
    disc={
        "a1": lambda q, p: _s(p["d1"]) * 2 ** (2 * p["a"] - 12) * 3 ** (2 * p["b"] + 6) * q,
        "a2": lambda q, p: _s(p["d1"] + p["d2"] + 1) * 2 ** (p["a"] - 6) * 3 ** (p["b"] + 6) * q * q,
    },
    square_class={"a": lambda p: p["d1"] == p["d2"] == 0 and p["a"] % 2 == 0 and p["b"] % 2 == 1},
    designated={"a": "a2"},
))

_register(FamilySpec(
    family="18q.5", level=18, params=("d", "a", "d1", "d2"), q_power="1",
    value=lambda p: _s(p["d1"]) * 3 * p["d"] ** 2 + _s(p["d2"]) * 2 ** p["a"],
    condition=lambda p: p["a"] >= 7 and (p["d1"], p["d2"]) != (1, 1) and p["d"] % 4 == 1,
    coefficients={
        "a": {
            "a1": lambda q, p: (-_xdiv(3 * p["d"] + 1, 4),
                                _s(p["d1"] + p["d2"] + 1) * 2 ** (p["a"] - 6) * 3, 0),
            "a2": lambda q, p: (-_xdiv(3 * p["d"] + 1, 4),
                                _s(p["d1"] + p["d2"]) * 2 ** (p["a"] - 4) * 3,
                                _s(p["d1"] + p["d2"] + 1) * 2 ** (p["a"] - 6) * 9 * p["d"]),
        },
        "b": {
            "b1": lambda q, p: (_xdiv(9 * p["d"] - 1, 4),
                                _s(p["d1"] + p["d2"] + 1) * 2 ** (p["a"] - 6) * 27, 0),
            "b2": lambda q, p: (_xdiv(9 * p["d"] - 1, 4),
                                _s(p["d1"] + p["d2"]) * 2 ** (p["a"] - 4) * 27,
                                _s(p["d1"] + p["d2"]) * 2 ** (p["a"] - 6) * 3**5 * p["d"]),
        },
    },
    disc={
        "a1": lambda q, p: _s(p["d1"]) * 2 ** (2 * p["a"] - 12) * 27 * q,
        "a2": lambda q, p: _s(p["d1"] + p["d2"] + 1) * 2 ** (p["a"] - 6) * 27 * q * q,
        "b1": lambda q, p: _s(p["d1"]) * 2 ** (2 * p["a"] - 12) * 3**9 * q,
        "b2": lambda q, p: _s(p["d1"] + p["d2"] + 1) * 2 ** (p["a"] - 6) * 3**9 * q * q,
    },
    square_class={
        "a": lambda p: p["d1"] == p["d2"] == 0 and p["a"] % 2 == 0,
        "b": lambda p: p["d1"] == p["d2"] == 0 and p["a"] % 2 == 0,
    },
    designated={"a": "a2", "b": "b2"},
))

_register(FamilySpec(
    family="18q.6", level=18, params=("d", "a", "b"), q_power="1",
    value=lambda p: (p["d"] ** 2 + 2 ** p["a"]) // 3 ** p["b"]
    if (p["d"] ** 2 + 2 ** p["a"]) % 3 ** p["b"] == 0 else -1,
    condition=lambda p: p["a"] >= 7 and p["a"] % 2 == 1 and p["b"] >= 1 and p["d"] % 4 == 1,
    coefficients={"a": {
        "a1": lambda q, p: (-_xdiv(3 * p["d"] + 1, 4), -(2 ** (p["a"] - 6)) * 9, 0),
        "a2": lambda q, p: (-_xdiv(3 * p["d"] + 1, 4), 2 ** (p["a"] - 4) * 9,
                            -(2 ** (p["a"] - 6)) * 27 * p["d"]),
    }},
    disc={
        "a1": lambda q, p: 2 ** (2 * p["a"] - 12) * 3 ** (p["b"] + 6) * q,
        "a2": lambda q, p: -(2 ** (p["a"] - 6)) * 3 ** (2 * p["b"] + 6) * q * q,
    },
    square_class={"a": lambda p: False},
    designated={"a": "a2"},
))

_register(FamilySpec(
    family="36q.1", level=36, params=("u", "v"), q_power="1",
    value=lambda p: (3 * p["v"] ** 2 - 1) // 2,
    condition=lambda p: p["u"] % 4 == 1 and p["v"] % 4 == 1
    and p["u"] ** 2 - 3 * p["v"] ** 2 == -2,
    coefficients={
        "a": {
            "a1": lambda q, p: (-3 * p["u"] * p["v"], 3 * q * q, 0),
            "a2": lambda q, p: (6 * p["u"] * p["v"], -3, 0),
        },
        "b": {
            "b1": lambda q, p: (9 * p["u"] * p["v"], 27 * q * q, 0),
            "b2": lambda q, p: (-18 * p["u"] * p["v"], -27, 0),
        },
    },
    disc={
        "a1": lambda q, p: -(2**4) * 27 * q**4,
        "a2": lambda q, p: 2**8 * 27 * q * q,
        "b1": lambda q, p: -(2**4) * 3**9 * q**4,
        "b2": lambda q, p: 2**8 * 3**9 * q * q,
    },
    square_class={"a": lambda p: True, "b": lambda p: True},
    designated={"a": "a2", "b": "b2"},
))

_register(FamilySpec(
    family="36q.2", level=36, params=("d",), q_power="1",
    value=lambda p: (3 * p["d"] ** 2 + 1) // 4,
    condition=lambda p: p["d"] % 8 == 1,
    coefficients={
        "a": {
            "a1": lambda q, p: (-3 * p["d"], 3 * q, 0),
            "a2": lambda q, p: (6 * p["d"], -3, 0),
        },
        "b": {
            "b1": lambda q, p: (9 * p["d"], 27 * q, 0),
            "b2": lambda q, p: (-18 * p["d"], -27, 0),
        },
    },
    disc={
        "a1": lambda q, p: -(2**4) * 27 * q * q,
        "a2": lambda q, p: 2**8 * 27 * q,
        "b1": lambda q, p: -(2**4) * 3**9 * q * q,
        "b2": lambda q, p: 2**8 * 3**9 * q,
    },
    square_class={"a": lambda p: True, "b": lambda p: True},
    designated={"a": "a1", "b": "b1"},
))

_register(FamilySpec(
    family="36q.3", level=36, params=("d", "b"), q_power="1",
    value=lambda p: (p["d"] ** 2 + 3 ** p["b"]) // 4
    if (p["d"] ** 2 + 3 ** p["b"]) % 4 == 0 else -1,
    condition=lambda p: p["b"] >= 1 and p["b"] % 2 == 1 and p["d"] % 4 == 1
    and ((p["d"] ** 2 + 3 ** p["b"]) // 4) % 4 == 3,
    coefficients={"a": {
        "a1": lambda q, p: (-3 * p["d"], 9 * q, 0),
        "a2": lambda q, p: (6 * p["d"], -(3 ** (p["b"] + 2)), 0),
    }},
    disc={
        "a1": lambda q, p: -(2**4) * 3 ** (p["b"] + 6) * q * q,
        "a2": lambda q, p: 2**8 * 3 ** (2 * p["b"] + 6) * q,
    },
    square_class={"a": lambda p: True},
    designated={"a": "a1"},
))

_register(FamilySpec(
    family="36q.4", level=36, params=("d", "b", "de"), q_power="1",
    value=lambda p: _s(p["de"]) * (p["d"] ** 2 - 4 * 3 ** p["b"]),
    condition=lambda p: p["b"] >= 1 and p["b"] % 2 == 1 and p["d"] % 4 == 1 and p["de"] in (0, 1),
    coefficients={"a": {
        "a1": lambda q, p: (-3 * p["d"], 3 ** (p["b"] + 2), 0),
        "a2": lambda q, p: (6 * p["d"], _s(p["de"]) * 9 * q, 0),
    }},
    disc={
        "a1": lambda q, p: _s(p["de"]) * 2**4 * 3 ** (2 * p["b"] + 6) * q,
        "a2": lambda q, p: 2**8 * 3 ** (p["b"] + 6) * q * q,
    },
    square_class={"a": lambda p: False},
    designated={"a": "a2"},
))

_register(FamilySpec(
    family="36q.5", level=36, params=("d", "b", "de", "n"), q_power="n",
    value=lambda p: _s(p["de"]) * (p["d"] ** 2 - 4 * 3 ** p["b"]),
    condition=lambda p: p["b"] >= 1 and p["b"] % 2 == 1 and p["d"] % 4 == 1
    and p["de"] in (0, 1) and _lpf_at_least_7(p["n"]),
    coefficients={"a": {
        "a1": lambda q, p: (-3 * p["d"], 3 ** (p["b"] + 2), 0),
        "a2": lambda q, p: (6 * p["d"], _s(p["de"]) * 9 * q ** p["n"], 0),
    }},
    disc={
        "a1": lambda q, p: _s(p["de"]) * 2**4 * 3 ** (2 * p["b"] + 6) * q ** p["n"],
        "a2": lambda q, p: 2**8 * 3 ** (p["b"] + 6) * q ** (2 * p["n"]),
    },
    square_class={"a": lambda p: False},
    designated={"a": "a2"},
))

_register(FamilySpec(
    family="36q.6", level=36, params=("d",), q_power="1",
    value=lambda p: 3 * p["d"] ** 2 - 4,
    condition=lambda p: p["d"] % 4 == 1,
    coefficients={
        "a": {
            "a1": lambda q, p: (-3 * p["d"], 3, 0),
            "a2": lambda q, p: (6 * p["d"], 3 * q, 0),
        },
        "b": {
            "b1": lambda q, p: (9 * p["d"], 27, 0),
            "b2": lambda q, p: (-18 * p["d"], 27 * q, 0),
        },
    },
    disc={
        "a1": lambda q, p: 2**4 * 27 * q,
        "a2": lambda q, p: 2**8 * 27 * q * q,
        "b1": lambda q, p: 2**4 * 3**9 * q,
        "b2": lambda q, p: 2**8 * 3**9 * q * q,
    },
    square_class={"a": lambda p: False, "b": lambda p: False},
    designated={"a": "a2", "b": "b2"},
))

_register(FamilySpec(
    family="36q.7", level=36, params=("d", "b"), q_power="1",
    value=lambda p: p["d"] ** 2 + 4 * 3 ** p["b"],
    condition=lambda p: p["b"] >= 0 and p["b"] % 2 == 0 and p["d"] % 4 == 1,
    coefficients={"a": {
        "a1": lambda q, p: (-3 * p["d"], -(3 ** (p["b"] + 2)), 0),
        "a2": lambda q, p: (6 * p["d"], 9 * q, 0),
    }},
    disc={
        "a1": lambda q, p: 2**4 * 3 ** (2 * p["b"] + 6) * q,
        "a2": lambda q, p: -(2**8) * 3 ** (p["b"] + 6) * q * q,
    },
    square_class={"a": lambda p: False},
    designated={"a": "a2"},
))

_register(FamilySpec(
    family="72q.1", level=72, params=("b",), q_power="1",
    value=lambda p: (3 ** p["b"] + 1) // 4 if (3 ** p["b"] + 1) % 4 == 0 else -1,
    condition=lambda p: p["b"] >= 1 and p["b"] % 2 == 1,
    coefficients={"a": {
        "a1": lambda q, p: (24 * q - 3, 4 * 3 ** (p["b"] + 2) * q, 0),
        "a2": lambda q, p: (-48 * q + 6, 9, 0),
        "a3": lambda q, p: (24 * q + 6, 3 ** (2 * p["b"] + 2), 0),
        "a4": lambda q, p: (6 * q - 3, 9 * q * q, 0),
    }},
    disc={
        "a1": lambda q, p: 2**8 * 3 ** (2 * p["b"] + 6) * q * q,
        "a2": lambda q, p: 2**10 * 3 ** (p["b"] + 6) * q,
        "a3": lambda q, p: 2**10 * 3 ** (4 * p["b"] + 6) * q,
        "a4": lambda q, p: -(2**4) * 3 ** (p["b"] + 6) * q**4,
    },
    square_class={"a": lambda p: True},
    designated={"a": "a1"},
))

_register(FamilySpec(
    family="72q.2", level=72, params=("a", "b", "de"), q_power="1",
    value=lambda p: 2 ** p["a"] * 3 ** p["b"] + _s(p["de"]),
    condition=lambda p: p["a"] in (2, 3) and p["b"] >= 0 and p["de"] in (0, 1),
    coefficients={"a": {
        "a1": lambda q, p: (_s(p["de"] + 1) * 2 ** (p["a"] + 1) * 3 ** (p["b"] + 1) - 3,
                            2 ** p["a"] * 3 ** (p["b"] + 2) * q, 0),
        "a2": lambda q, p: (_s(p["de"]) * 2 ** (p["a"] + 2) * 3 ** (p["b"] + 1) + 6, 9, 0),
        "a3": lambda q, p: (_s(p["de"] + 1) * 2 ** (p["a"] - 1) * 3 ** (p["b"] + 1) - 3,
                            2 ** (2 * p["a"] - 4) * 3 ** (2 * p["b"] + 2), 0),
        "a4": lambda q, p: (_s(p["de"] + 1) * 2 ** (p["a"] + 1) * 3 ** (p["b"] + 1) + 6,
                            9 * q * q, 0),
    }},
    disc={
        "a1": lambda q, p: 2 ** (2 * p["a"] + 4) * 3 ** (2 * p["b"] + 6) * q * q,
        "a2": lambda q, p: 2 ** (p["a"] + 8) * 3 ** (p["b"] + 6) * q,
        "a3": lambda q, p: _s(p["de"]) * 2 ** (4 * p["a"] - 4) * 3 ** (4 * p["b"] + 6) * q,
        "a4": lambda q, p: _s(p["de"] + 1) * 2 ** (p["a"] + 8) * 3 ** (p["b"] + 6) * q**4,
    },
    square_class={"a": lambda p: True},
    designated={"a": "a1"},
))

_register(FamilySpec(
    family="72q.3", level=72, params=("a", "b", "de"), q_power="1",
    value=lambda p: 3 ** p["b"] + _s(p["de"]) * 2 ** p["a"],
    condition=lambda p: p["a"] in (2, 3) and p["b"] >= 0 and p["de"] in (0, 1),
    coefficients={"a": {
        "a1": lambda q, p: (_s(p["b"] + 1) * 3 * (3 ** p["b"] - _s(p["de"]) * 2 ** p["a"]),
                            _s(p["de"] + 1) * 2 ** p["a"] * 3 ** (p["b"] + 2), 0),
        "a2": lambda q, p: (_s(p["b"]) * 6 * (3 ** p["b"] - _s(p["de"]) * 2 ** p["a"]),
                            9 * q * q, 0),
        "a3": lambda q, p: (_s(p["b"]) * 6 * (3 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] + 1)),
                            3 ** (2 * p["b"] + 2), 0),
        "a4": lambda q, p: (_s(p["b"] + 1) * 3 * (3 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] - 1)),
                            2 ** (2 * p["a"] - 4) * 9, 0),
    }},
    disc={
        "a1": lambda q, p: 2 ** (2 * p["a"] + 4) * 3 ** (2 * p["b"] + 6) * q * q,
        "a2": lambda q, p: _s(p["de"] + 1) * 2 ** (p["a"] + 8) * 3 ** (p["b"] + 6) * q**4,
        "a3": lambda q, p: _s(p["de"]) * 2 ** (p["a"] + 8) * 3 ** (4 * p["b"] + 6) * q,
        "a4": lambda q, p: 2 ** (4 * p["a"] - 4) * 3 ** (p["b"] + 6) * q,
    },
    square_class={"a": lambda p: True},
    designated={"a": "a1"},
))

_register(FamilySpec(
    family="72q.4", level=72, params=("d",), q_power="1",
    value=lambda p: 3 * p["d"] ** 2 + 4,
    condition=lambda p: p["d"] % 4 == 1,
    coefficients={
        "a": {
            "a1": lambda q, p: (3 * p["d"], -3, 0),
            "a2": lambda q, p: (-6 * p["d"], 3 * q, 0),
        },
        "b": {
            "b1": lambda q, p: (-9 * p["d"], -27, 0),
            "b2": lambda q, p: (18 * p["d"], 27 * q, 0),
        },
    },
    disc={
        "a1": lambda q, p: 2**4 * 27 * q,
        "a2": lambda q, p: -(2**8) * 27 * q * q,
        "b1": lambda q, p: 2**4 * 3**9 * q,
        "b2": lambda q, p: -(2**8) * 3**9 * q * q,
    },
    square_class={"a": lambda p: True, "b": lambda p: True},
    designated={"a": "a2", "b": "b2"},
))

_register(FamilySpec(
    family="72q.5", level=72, params=("d", "a", "de"), q_power="1",
    value=lambda p: 3 * p["d"] ** 2 + _s(p["de"]) * 2 ** p["a"],
    condition=lambda p: p["a"] in (4, 5) and p["de"] in (0, 1) and p["d"] % 4 == 1,
    coefficients={
        "a": {
            "a1": lambda q, p: (-3 * p["d"], _s(p["de"] + 1) * 2 ** (p["a"] - 2) * 3, 0),
            "a2": lambda q, p: (6 * p["d"], 3 * q, 0),
        },
        "b": {
            "b1": lambda q, p: (9 * p["d"], _s(p["de"] + 1) * 2 ** (p["a"] - 2) * 27, 0),
            "b2": lambda q, p: (-18 * p["d"], 27 * q, 0),
        },
    },
    disc={
        "a1": lambda q, p: 2 ** (2 * p["a"]) * 27 * q,
        "a2": lambda q, p: _s(p["de"] + 1) * 2 ** (p["a"] + 6) * 27 * q * q,
        "b1": lambda q, p: 2 ** (2 * p["a"]) * 3**9 * q,
        "b2": lambda q, p: _s(p["de"] + 1) * 2 ** (p["a"] + 6) * 3**9 * q * q,
    },
    square_class={
        "a": lambda p: p["de"] == 0 and p["a"] == 4,
        "b": lambda p: p["de"] == 0 and p["a"] == 4,
    },
    designated={"a": "a2", "b": "b2"},
))

_register(FamilySpec(
    family="72q.6", level=72, params=("d",), q_power="1",
    value=lambda p: (3 * p["d"] ** 2 + 1) // 4,
    condition=lambda p: p["d"] % 8 == 5,
    coefficients={
        "a": {
            "a1": lambda q, p: (3 * p["d"], 3 * q, 0),
            "a2": lambda q, p: (-6 * p["d"], -3, 0),
        },
        "b": {
            "b1": lambda q, p: (-9 * p["d"], 27 * q, 0),
            "b2": lambda q, p: (18 * p["d"], -27, 0),
        },
    },
    disc={
        "a1": lambda q, p: -(2**4) * 27 * q * q,
        "a2": lambda q, p: 2**8 * 27 * q,
        "b1": lambda q, p: -(2**4) * 3**9 * q * q,
        "b2": lambda q, p: 2**8 * 3**9 * q,
    },
    square_class={"a": lambda p: True, "b": lambda p: True},
    designated={"a": "a1", "b": "b1"},
))

_register(FamilySpec(
    family="72q.7", level=72, params=("d", "b"), q_power="1",
    value=lambda p: (p["d"] ** 2 + 3 ** p["b"]) // 4
    if (p["d"] ** 2 + 3 ** p["b"]) % 4 == 0 else -1,
    condition=lambda p: p["b"] >= 1 and p["b"] % 2 == 1 and p["d"] % 4 == 1
    and ((p["d"] ** 2 + 3 ** p["b"]) // 4) % 4 == 1,
    coefficients={"a": {
        "a1": lambda q, p: (3 * p["d"], 9 * q, 0),
        "a2": lambda q, p: (-6 * p["d"], -(3 ** (p["b"] + 2)), 0),
    }},
    disc={
        "a1": lambda q, p: -(2**4) * 3 ** (p["b"] + 6) * q * q,
        "a2": lambda q, p: 2**8 * 3 ** (2 * p["b"] + 6) * q,
    },
    square_class={"a": lambda p: True},
    designated={"a": "a1"},
))

_register(FamilySpec(
    family="72q.8", level=72, params=("d", "b"), q_power="1",
    value=lambda p: p["d"] ** 2 + 4 * 3 ** p["b"],
    condition=lambda p: p["b"] >= 1 and p["b"] % 2 == 1 and p["d"] % 4 == 1,
    coefficients={"a": {
        "a1": lambda q, p: (3 * p["d"], -(3 ** (p["b"] + 2)), 0),
        "a2": lambda q, p: (-6 * p["d"], 9 * q, 0),
    }},
    disc={
        "a1": lambda q, p: 2**4 * 3 ** (2 * p["b"] + 6) * q,
        "a2": lambda q, p: -(2**8) * 3 ** (p["b"] + 6) * q * q,
    },
    square_class={"a": lambda p: True},
    designated={"a": "a2"},
))

_register(FamilySpec(
    family="72q.9", level=72, params=("d", "a", "b", "d1", "d2"), q_power="1",
    value=lambda p: _s(p["d1"]) * p["d"] ** 2 + _s(p["d2"]) * 2 ** p["a"] * 3 ** p["b"],
    condition=_cond_72q9,
    coefficients={"a": {
        "a1": lambda q, p: (-3 * p["d"],
                            _s(p["d1"] + p["d2"] + 1) * 2 ** (p["a"] - 2) * 3 ** (p["b"] + 2), 0),
        "a2": lambda q, p: (6 * p["d"], _s(p["d1"]) * 9 * q, 0),
    }},
    disc={
        "a1": lambda q, p: _s(p["d1"]) * 2 ** (2 * p["a"]) * 3 ** (2 * p["b"] + 6) * q,
        "a2": lambda q, p: _s(p["d1"] + p["d2"] + 1) * 2 ** (p["a"] + 6) * 3 ** (p["b"] + 6) * q * q,
    },
    square_class={"a": lambda p: p["d1"] == p["d2"] == 0 and p["a"] == 4 and p["b"] % 2 == 1},
    designated={"a": "a2"},
))

_register(FamilySpec(
    family="72q.10", level=72, params=("d", "a", "b", "de", "n"), q_power="n",
    value=lambda p: _s(p["de"]) * (p["d"] ** 2 - 2 ** p["a"] * 3 ** p["b"]),
    condition=lambda p: p["a"] in (4, 5) and p["b"] >= 0 and p["de"] in (0, 1)
    and (p["a"] != 4 or p["b"] % 2 == 1) and p["d"] % 4 == 1 and _lpf_at_least_7(p["n"]),
    coefficients={"a": {
        "a1": lambda q, p: (-3 * p["d"], 2 ** (p["a"] - 2) * 3 ** (p["b"] + 2), 0),
        "a2": lambda q, p: (6 * p["d"], _s(p["de"]) * 9 * q ** p["n"], 0),
    }},
    disc={
        "a1": lambda q, p: _s(p["de"]) * 2 ** (2 * p["a"]) * 3 ** (2 * p["b"] + 6) * q ** p["n"],
        "a2": lambda q, p: 2 ** (p["a"] + 6) * 3 ** (p["b"] + 6) * q ** (2 * p["n"]),
    },
    square_class={"a": lambda p: False},
    designated={"a": "a2"},
))

_register(FamilySpec(
    family="72q.11", level=72, params=("d", "b"), q_power="1",
    value=lambda p: (p["d"] ** 2 + 32) // 3 ** p["b"]
    if (p["d"] ** 2 + 32) % 3 ** p["b"] == 0 else -1,
    condition=lambda p: p["b"] >= 0 and p["d"] % 4 == 1,
    coefficients={"a": {
        "a1": lambda q, p: (-3 * p["d"], -72, 0),
        "a2": lambda q, p: (6 * p["d"], 3 ** (p["b"] + 2) * q, 0),
    }},
    disc={
        "a1": lambda q, p: 2**10 * 3 ** (p["b"] + 6) * q,
        "a2": lambda q, p: -(2**11) * 3 ** (2 * p["b"] + 6) * q * q,
    },
    square_class={"a": lambda p: False},
    designated={"a": "a2"},
))

_register(FamilySpec(
    family="72q.12", level=72, params=("d", "b", "n"), q_power="n",
    value=lambda p: (p["d"] ** 2 + 32) // 3 ** p["b"]
    if (p["d"] ** 2 + 32) % 3 ** p["b"] == 0 else -1,
    condition=lambda p: p["b"] >= 0 and p["d"] % 4 == 1 and _lpf_at_least_7(p["n"]),
    coefficients={"a": {
        "a1": lambda q, p: (-3 * p["d"], -72, 0),
        "a2": lambda q, p: (6 * p["d"], 3 ** (p["b"] + 2) * q ** p["n"], 0),
    }},
    disc={
        "a1": lambda q, p: 2**10 * 3 ** (p["b"] + 6) * q ** p["n"],
        "a2": lambda q, p: -(2**11) * 3 ** (2 * p["b"] + 6) * q ** (2 * p["n"]),
    },
    square_class={"a": lambda p: False},
    designated={"a": "a2"},
))


def family_level(family: str) -> int:
    return FAMILIES[family].level


def family_classes(family: str) -> list[str]:
    return sorted(FAMILIES[family].coefficients)


def curve_indices(family: str, letter: str) -> list[str]:
    return sorted(FAMILIES[family].coefficients[letter])


def family_q(family: str, params: Mapping[str, int]) -> int:
    """The prime the parameters represent; raises when malformed."""
    from .arith import is_prime, nth_root_exact

    spec = FAMILIES.get(family)
    if spec is None:
        raise ValueError(f"unknown family: {family}")
    missing = [name for name in spec.params if name not in params]
    if missing:
        raise ValueError(f"family {family} needs parameters {missing}")
    if not spec.condition(params):
        raise ValueError(f"parameters violate the side conditions of {family}: {dict(params)}")
    value = spec.value(params)
    if spec.q_power == "n":
        base = nth_root_exact(value, params["n"]) if value > 0 else None
        if base is None:
            raise ValueError(f"{family}: value {value} is not an exact n-th power")
        q = base
    else:
        q = value
    if q < 5 or not is_prime(q):
        raise ValueError(f"{family}: parameters give q = {q}, not a prime >= 5")
    return q


def instantiate_family_curve(family: str, params: Mapping[str, int], which: str,
                             q: int | None = None) -> CurveModel:
    """Build the named curve of a family at a parameter point.

    `which` is a curve index like "a1" or "b2".  The prime q is recomputed
    from the parameters (and checked against the argument when given); all
    side conditions of the family are enforced.
    """
    spec = FAMILIES[family] if family in FAMILIES else None
    if spec is None:
        raise ValueError(f"unknown family: {family}")
    qq = family_q(family, params)
    if q is not None and q != qq:
        raise ValueError(f"{family}: parameters give q = {qq}, expected {q}")
    letter = which[:1]
    table = spec.coefficients.get(letter, {})
    if which not in table:
        raise ValueError(f"unknown curve index {which} for family {family}")
    a2, a4, a6 = table[which](qq, params)
    a1 = 1 if spec.level == 18 else 0
    return CurveModel(a1, a2, 0, a4, a6, label=f"{family}.{which}")


def family_disc(family: str, which: str, params: Mapping[str, int], q: int) -> int:
    """The tabulated discriminant of one curve of a family."""
    return FAMILIES[family].disc[which](q, params)


def designated_curve(family: str, letter: str) -> str:
    """Curve index used for sieve rules: the class member with v_q(disc) = 2."""
    return FAMILIES[family].designated[letter]


def is_square_class_instance(family: str, letter: str, params: Mapping[str, int]) -> bool:
    """Whether this instance belongs to the square-discriminant census
    (some curve of the class has discriminant T^2 or -3 T^2)."""
    return FAMILIES[family].square_class[letter](params)
