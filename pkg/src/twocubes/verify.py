"""Verification sweeps: coefficient tables vs. closed forms, and search checks.

These are the bulk self-checks the command line exposes: instantiate family
curves on pseudorandom valid parameters and confirm that the tabulated
discriminants and the closed c4/c6 forms agree with the invariants computed
from the coefficients.
"""

from __future__ import annotations

import random
from typing import Iterable

from .appendix import closed_form_c4_c6
from .arith import is_prime
from .curves import (
    FAMILIES,
    curve_indices,
    family_classes,
    family_disc,
    instantiate_family_curve,
    weierstrass_invariants,
)


def _candidate_params(family: str, rng: random.Random) -> dict[str, int]:
    d = rng.choice([1, 5, 9, 13, 17, 21, 25, 29, -3, -7, -11, -15, -19, -23, -27])
    draws = {
        "18q.1": lambda: {"a": rng.randint(5, 14), "b": rng.randint(0, 7), "de": rng.randint(0, 1)},
        "18q.2": lambda: {"a": rng.choice([5, 7, 11, 13, 17, 19, 23, 31, 43, 61])},
        "18q.3": lambda: {"a": rng.randint(5, 14), "b": rng.randint(1, 8),
                          "d1": rng.randint(0, 1), "d2": rng.randint(0, 1)},
        "18q.4": lambda: {"d": d, "a": rng.randint(7, 14), "b": rng.randint(0, 5),
                          "d1": rng.randint(0, 1), "d2": rng.randint(0, 1)},
        "18q.5": lambda: {"d": d, "a": rng.randint(7, 14),
                          "d1": rng.randint(0, 1), "d2": rng.randint(0, 1)},
        "18q.6": lambda: {"d": d, "a": rng.choice([7, 9, 11, 13]), "b": rng.randint(1, 4)},
        "36q.1": lambda: rng.choice([{"u": 5, "v": -3}, {"u": -19, "v": -11}, {"u": -71, "v": 41},
                                     {"u": 265, "v": 153}, {"u": 989, "v": 571},
                                     {"u": -3691, "v": -2131}, {"u": 13775, "v": 7953}]),
        "36q.2": lambda: {"d": rng.choice([9, 17, 25, 33, 41, 49, 57, -7, -15, -23, -31, -39])},
        "36q.3": lambda: {"d": d, "b": rng.choice([1, 3, 5, 7])},
        "36q.4": lambda: {"d": d, "b": rng.choice([1, 3, 5]), "de": rng.randint(0, 1)},
        "36q.5": lambda: {"d": d, "b": rng.choice([1, 3, 5]), "de": rng.randint(0, 1),
                          "n": rng.choice([7, 11, 13])},
        "36q.6": lambda: {"d": d},
        "36q.7": lambda: {"d": d, "b": rng.choice([0, 2, 4, 6])},
        "72q.1": lambda: {"b": rng.choice([3, 5, 7, 13])},
        "72q.2": lambda: {"a": rng.randint(2, 3), "b": rng.randint(0, 8), "de": rng.randint(0, 1)},
        "72q.3": lambda: {"a": rng.randint(2, 3), "b": rng.randint(0, 8), "de": rng.randint(0, 1)},
        "72q.4": lambda: {"d": d},
        "72q.5": lambda: {"d": d, "a": rng.choice([4, 5]), "de": rng.randint(0, 1)},
        "72q.6": lambda: {"d": rng.choice([5, 13, 21, 29, 37, -11, -19, -27, -35])},
        "72q.7": lambda: {"d": d, "b": rng.choice([1, 3, 5, 7])},
        "72q.8": lambda: {"d": d, "b": rng.choice([1, 3, 5])},
        "72q.9": lambda: {"d": d, "a": rng.choice([4, 5]), "b": rng.randint(0, 5),
                          "d1": rng.randint(0, 1), "d2": rng.randint(0, 1)},
        "72q.10": lambda: {"d": d, "a": rng.choice([4, 5]), "b": rng.randint(0, 4),
                           "de": rng.randint(0, 1), "n": rng.choice([7, 11, 13])},
        "72q.11": lambda: {"d": d, "b": rng.randint(0, 3)},
        "72q.12": lambda: {"d": d, "b": rng.randint(0, 3), "n": rng.choice([7, 11, 13])},
    }
    return draws[family]()


def sample_valid_params(family: str, rng: random.Random, count: int,
                        max_tries: int = 200_000) -> list[dict[str, int]]:
    """Pseudorandom parameter tuples satisfying all side conditions of the
    family and representing a prime (sampling with replacement); for the
    power families (q^n shapes) valid desk-scale tuples may not exist, in
    which case the list is empty."""
    from .curves import family_q

    spec = FAMILIES[family]
    out: list[dict[str, int]] = []
    for _ in range(max_tries):
        if len(out) >= count:
            break
        params = _candidate_params(family, rng)
        if not spec.condition(params):
            continue
        try:
            family_q(family, params)
        except (ValueError, ArithmeticError):
            continue
        out.append(params)
    return out


def sweep_family_row(family: str, which: str, tuples: Iterable[dict[str, int]]) -> list[dict]:
    """Compare computed invariants against tabulated disc and closed c4/c6.

    Returns a list of mismatch records (empty = all good)."""
    from .curves import family_q

    mismatches = []
    for params in tuples:
        q = family_q(family, params)
        model = instantiate_family_curve(family, params, which)
        inv = weierstrass_invariants(model)
        expected_disc = family_disc(family, which, params, q)
        c4, c6 = closed_form_c4_c6(family, which, q, params)
        record = {"family": family, "which": which, "params": dict(params), "q": q}
        if inv.disc != expected_disc:
            mismatches.append({**record, "kind": "disc", "computed": inv.disc,
                               "tabulated": expected_disc})
        if (inv.c4, inv.c6) != (c4, c6):
            mismatches.append({**record, "kind": "c4c6", "computed": (inv.c4, inv.c6),
                               "closed_form": (c4, c6)})
    return mismatches


POWER_FAMILIES = ("36q.5", "72q.10", "72q.12")


def _sweep_power_family(family: str, rng: random.Random, count: int) -> list[dict]:
    """Identity check for the q^n families.

    No prime power representation is expected to exist at desk scale, so the
    coefficient/closed-form/discriminant agreement is checked as a formal
    identity: the tables only involve the combination q^n, which is replaced
    by the parametrized value directly (n = 1 below is that substitution,
    not a claim about n)."""
    from .curves import CurveModel

    spec = FAMILIES[family]
    mismatches: list[dict] = []
    done = 0
    while done < count:
        params = _candidate_params(family, rng)
        params["n"] = 1
        value = spec.value(params)
        if value in (-1, 0, 1):
            continue
        if value < 0:
            continue
        done += 1
        for letter, table in spec.coefficients.items():
            for which, build in table.items():
                a2, a4, a6 = build(value, params)
                inv = weierstrass_invariants(CurveModel(0, a2, 0, a4, a6))
                record = {"family": family, "which": which, "params": dict(params),
                          "q": value}
                if inv.disc != spec.disc[which](value, params):
                    mismatches.append({**record, "kind": "disc", "computed": inv.disc,
                                       "tabulated": spec.disc[which](value, params)})
                c4, c6 = closed_form_c4_c6(family, which, value, params)
                if (inv.c4, inv.c6) != (c4, c6):
                    mismatches.append({**record, "kind": "c4c6",
                                       "computed": (inv.c4, inv.c6),
                                       "closed_form": (c4, c6)})
    return mismatches


def appendix_sweep(seed: int = 0, count: int = 200) -> dict:
    """Run the closed-form and discriminant cross-check on every family row."""
    rng = random.Random(seed)
    report = {"rows": {}, "mismatches": [], "formal_identity": list(POWER_FAMILIES)}
    for family in sorted(FAMILIES):
        if family in POWER_FAMILIES:
            bad = _sweep_power_family(family, rng, count)
            for letter in family_classes(family):
                for which in curve_indices(family, letter):
                    n_bad = sum(1 for m in bad if m["which"] == which)
                    report["rows"][f"{family}.{which}"] = {
                        "tuples": count, "mismatches": n_bad, "formal": True}
            report["mismatches"].extend(bad[:3])
            continue
        tuples = sample_valid_params(family, rng, count)
        for letter in family_classes(family):
            for which in curve_indices(family, letter):
                bad = sweep_family_row(family, which, tuples)
                report["rows"][f"{family}.{which}"] = {
                    "tuples": len(tuples), "mismatches": len(bad)}
                report["mismatches"].extend(bad[:3])
    report["ok"] = not report["mismatches"]
    return report
