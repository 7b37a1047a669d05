"""Closed forms for c4 and c6 of every family curve.

These are transcribed independently of the coefficient tables in
:mod:`twocubes.curves`, so that comparing the two catches transcription
slips in either.  A few rows of the source tables are internally
inconsistent (they contradict the coefficient tables for every parameter
choice); those rows ship here in corrected, re-derived form, with the
inconsistent originals kept in PRINTED_FORMS so the discrepancy stays
checkable.
"""

from __future__ import annotations

from typing import Callable, Mapping

Form = Callable[[int, Mapping[str, int]], int]


def _s(e: int) -> int:
    return -1 if e % 2 else 1


C4_FORMS: dict[str, Form] = {}
C6_FORMS: dict[str, Form] = {}

# rows replacing an inconsistent printed form; value = the printed (c4, c6)
PRINTED_FORMS: dict[str, tuple[Form, Form]] = {}


def _row(name: str, c4: Form, c6: Form) -> None:
    C4_FORMS[name] = c4
    C6_FORMS[name] = c6


# --- conductor 18q ---------------------------------------------------------

_row("18q.1.a1",
     lambda q, p: 9 * (4 ** p["a"] * 9 ** p["b"] + _s(p["de"]) * 2 ** p["a"] * 3 ** p["b"] + 1),
     lambda q, p: _s(p["de"] + 1) * 27
     * (2 ** (p["a"] + 1) * 3 ** p["b"] + _s(p["de"]))
     * (2 ** p["a"] * 3 ** p["b"] + _s(p["de"] + 1))
     * (2 ** (p["a"] - 1) * 3 ** p["b"] + _s(p["de"])))
_row("18q.1.a2",
     lambda q, p: 9 * (2 ** (2 * p["a"] + 4) * 9 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] + 4) * 3 ** p["b"] + 1),
     # printed without the leading sign; (-1)**(de+1) restored to match the model
     lambda q, p: _s(p["de"] + 1) * 27 * (2 ** (p["a"] + 1) * 3 ** p["b"] + _s(p["de"]))
     * (2 ** (2 * p["a"] + 5) * 9 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] + 5) * 3 ** p["b"] - 1))
PRINTED_FORMS["18q.1.a2"] = (
    C4_FORMS["18q.1.a2"],
    lambda q, p: 27 * (2 ** (p["a"] + 1) * 3 ** p["b"] + _s(p["de"]))
    * (2 ** (2 * p["a"] + 5) * 9 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] + 5) * 3 ** p["b"] - 1))
_row("18q.1.a3",
     lambda q, p: 9 * (2 ** (2 * p["a"] - 4) * 9 ** p["b"] + _s(p["de"]) * 2 ** p["a"] * 3 ** p["b"] + 1),
     lambda q, p: _s(p["de"] + 1) * 27 * (2 ** (p["a"] - 1) * 3 ** p["b"] + _s(p["de"]))
     * (2 ** (2 * p["a"] - 5) * 9 ** p["b"] + _s(p["de"] + 1) * 2 ** p["a"] * 3 ** p["b"] - 1))
_row("18q.1.a4",
     lambda q, p: 9 * (4 ** p["a"] * 9 ** p["b"] + _s(p["de"] + 1) * 7 * 2 ** (p["a"] + 1) * 3 ** p["b"] + 1),
     lambda q, p: _s(p["de"] + 1) * 27 * (2 ** p["a"] * 3 ** p["b"] + _s(p["de"] + 1))
     * (4 ** p["a"] * 9 ** p["b"] + _s(p["de"]) * 17 * 2 ** (p["a"] + 1) * 3 ** p["b"] + 1))

_row("18q.2.a1",
     lambda q, p: 9 * (4 ** p["a"] + 2 ** p["a"] + 1),
     lambda q, p: -27 * (2 ** (p["a"] + 1) + 1) * (2 ** p["a"] - 1) * (2 ** (p["a"] - 1) + 1))
_row("18q.2.a2",
     lambda q, p: 9 * (2 ** (2 * p["a"] + 4) + 2 ** (p["a"] + 4) + 1),
     lambda q, p: -27 * (2 ** (p["a"] + 1) + 1) * (2 ** (2 * p["a"] + 5) + 2 ** (p["a"] + 5) - 1))
_row("18q.2.a3",
     lambda q, p: 9 * (2 ** (2 * p["a"] - 4) + 2 ** p["a"] + 1),
     lambda q, p: -27 * (2 ** (p["a"] - 1) + 1) * (2 ** (2 * p["a"] - 5) - 2 ** p["a"] - 1))
_row("18q.2.a4",
     lambda q, p: 9 * (4 ** p["a"] - 7 * 2 ** (p["a"] + 1) + 1),
     lambda q, p: -27 * (2 ** p["a"] - 1) * (4 ** p["a"] + 17 * 2 ** (p["a"] + 1) + 1))


def _sig(p) -> int:
    # (-1)**(d1 + d2)
    return _s(p["d1"] + p["d2"])


def _de3(p) -> int:
    # the derived sign exponent for the mixed-power family
    return p["b"] + p["d1"] + p["d2"] + 1


_row("18q.3.a1",
     lambda q, p: 9 * (4 ** p["a"] + _sig(p) * 2 ** p["a"] * 3 ** p["b"] + 9 ** p["b"]),
     lambda q, p: _s(_de3(p)) * 27
     * (2 ** (p["a"] + 1) + _sig(p) * 3 ** p["b"])
     * (2 ** p["a"] - _sig(p) * 3 ** p["b"])
     * (2 ** (p["a"] - 1) + _sig(p) * 3 ** p["b"]))
_row("18q.3.a2",
     lambda q, p: 9 * (2 ** (2 * p["a"] + 4) + _sig(p) * 2 ** (p["a"] + 4) * 3 ** p["b"] + 9 ** p["b"]),
     lambda q, p: _s(_de3(p)) * 27 * (2 ** (p["a"] + 1) + _sig(p) * 3 ** p["b"])
     * (2 ** (2 * p["a"] + 5) + _sig(p) * 2 ** (p["a"] + 5) * 3 ** p["b"] - 9 ** p["b"]))
_row("18q.3.a3",
     lambda q, p: 9 * (2 ** (2 * p["a"] - 4) + _sig(p) * 2 ** p["a"] * 3 ** p["b"] + 9 ** p["b"]),
     lambda q, p: _s(p["b"] + 1) * 27 * (_sig(p) * 2 ** (p["a"] - 1) + 3 ** p["b"])
     * (2 ** (2 * p["a"] - 5) - _sig(p) * 2 ** p["a"] * 3 ** p["b"] - 9 ** p["b"]))
_row("18q.3.a4",
     lambda q, p: 9 * (4 ** p["a"] + _s(1 + p["d1"] + p["d2"]) * 7 * 2 ** (p["a"] + 1) * 3 ** p["b"] + 9 ** p["b"]),
     lambda q, p: _s(p["b"]) * 27 * (3 ** p["b"] + _s(p["b"] + _de3(p)) * 2 ** p["a"])
     * (4 ** p["a"] + _sig(p) * 17 * 2 ** (p["a"] + 1) * 3 ** p["b"] + 9 ** p["b"]))

_row("18q.4.a1",
     lambda q, p: _s(p["d1"]) * 9 * (q - _s(p["d2"]) * 2 ** (p["a"] - 2) * 3 ** p["b"]),
     lambda q, p: 27 * p["d"] * (p["d"] ** 2 + _sig(p) * 2 ** (p["a"] - 3) * 3 ** (p["b"] + 2)))
_row("18q.4.a2",
     lambda q, p: _s(p["d1"]) * 9 * (q - _s(p["d2"]) * 2 ** (p["a"] + 2) * 3 ** p["b"]),
     lambda q, p: 27 * p["d"] * (p["d"] ** 2 + _sig(p) * 2 ** p["a"] * 3 ** (p["b"] + 2)))

_row("18q.5.a1",
     lambda q, p: 9 * (p["d"] ** 2 + _sig(p) * 2 ** (p["a"] - 2)),
     lambda q, p: 27 * p["d"] * (p["d"] ** 2 + _sig(p) * 2 ** (p["a"] - 3) * 3))
_row("18q.5.a2",
     lambda q, p: 9 * (p["d"] ** 2 - _sig(p) * 2 ** p["a"]),
     lambda q, p: 27 * p["d"] * (p["d"] ** 2 + _sig(p) * 2 ** p["a"] * 3))
_row("18q.5.b1",
     lambda q, p: 81 * (p["d"] ** 2 + _sig(p) * 2 ** (p["a"] - 2)),
     lambda q, p: -729 * p["d"] * (p["d"] ** 2 + _sig(p) * 2 ** (p["a"] - 3) * 3))
_row("18q.5.b2",
     lambda q, p: 81 * (p["d"] ** 2 - _sig(p) * 2 ** p["a"]),
     lambda q, p: -729 * p["d"] * (p["d"] ** 2 + _sig(p) * 2 ** p["a"] * 3))

_row("18q.6.a1",
     lambda q, p: 9 * (p["d"] ** 2 + 3 * 2 ** (p["a"] - 2)),
     lambda q, p: 27 * p["d"] * (p["d"] ** 2 + 2 ** (p["a"] - 3) * 9))
_row("18q.6.a2",
     lambda q, p: 9 * (p["d"] ** 2 - 3 * 2 ** p["a"]),
     lambda q, p: 27 * p["d"] * (p["d"] ** 2 + 2 ** p["a"] * 9))

# --- conductor 36q ---------------------------------------------------------

_row("36q.1.a1",
     lambda q, p: 48 * (q * q - 1),
     lambda q, p: -288 * p["u"] * p["v"] * (q * q + 2))
_row("36q.1.a2",
     lambda q, p: 48 * (16 * q * q - 1),
     lambda q, p: -576 * p["u"] * p["v"] * (32 * q * q + 1))
_row("36q.1.b1",
     lambda q, p: 432 * (q * q - 1),
     lambda q, p: 7776 * p["u"] * p["v"] * (q * q + 2))
_row("36q.1.b2",
     lambda q, p: 432 * (16 * q * q - 1),
     lambda q, p: 15552 * p["u"] * p["v"] * (32 * q * q + 1))

_row("36q.2.a1",
     lambda q, p: 36 * (p["d"] ** 2 - 1),
     lambda q, p: -216 * p["d"] * (p["d"] ** 2 + 3))
_row("36q.2.a2",
     lambda q, p: 144 * (4 * p["d"] ** 2 + 1),
     lambda q, p: -1728 * p["d"] * (8 * p["d"] ** 2 + 3))
_row("36q.2.b1",
     lambda q, p: 324 * (p["d"] ** 2 - 1),
     lambda q, p: 5832 * p["d"] * (p["d"] ** 2 + 3))
_row("36q.2.b2",
     lambda q, p: 1296 * (4 * p["d"] ** 2 + 1),
     lambda q, p: 46656 * p["d"] * (8 * p["d"] ** 2 + 3))

_row("36q.3.a1",
     lambda q, p: 36 * (p["d"] ** 2 - 3 ** (p["b"] + 1)),
     lambda q, p: -216 * p["d"] * (p["d"] ** 2 + 3 ** (p["b"] + 2)))
_row("36q.3.a2",
     lambda q, p: 144 * (4 * p["d"] ** 2 + 3 ** (p["b"] + 1)),
     lambda q, p: -1728 * p["d"] * (8 * p["d"] ** 2 + 3 ** (p["b"] + 2)))

_row("36q.4.a1",
     lambda q, p: 144 * (p["d"] ** 2 - 3 ** (p["b"] + 1)),
     lambda q, p: 864 * p["d"] * (2 * p["d"] ** 2 - 3 ** (p["b"] + 2)))
_row("36q.4.a2",
     lambda q, p: 144 * (p["d"] ** 2 + 4 * 3 ** (p["b"] + 1)),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 - 4 * 3 ** (p["b"] + 2)))

_row("36q.5.a1",
     lambda q, p: 144 * (p["d"] ** 2 - 3 ** (p["b"] + 1)),
     lambda q, p: 864 * p["d"] * (2 * p["d"] ** 2 - 3 ** (p["b"] + 2)))
_row("36q.5.a2",
     lambda q, p: 144 * (p["d"] ** 2 + 4 * 3 ** (p["b"] + 1)),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 - 4 * 3 ** (p["b"] + 2)))

_row("36q.6.a1",
     lambda q, p: 144 * (p["d"] ** 2 - 1),
     lambda q, p: 864 * p["d"] * (2 * p["d"] ** 2 - 3))
_row("36q.6.a2",
     lambda q, p: 144 * (p["d"] ** 2 + 4),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 - 12))
_row("36q.6.b1",
     lambda q, p: 1296 * (p["d"] ** 2 - 1),
     lambda q, p: -23328 * p["d"] * (2 * p["d"] ** 2 - 3))
_row("36q.6.b2",
     lambda q, p: 1296 * (p["d"] ** 2 + 4),
     lambda q, p: -46656 * p["d"] * (p["d"] ** 2 - 12))

_row("36q.7.a1",
     lambda q, p: 144 * (p["d"] ** 2 + 3 ** (p["b"] + 1)),
     lambda q, p: 864 * p["d"] * (2 * p["d"] ** 2 + 3 ** (p["b"] + 2)))
_row("36q.7.a2",
     lambda q, p: 144 * (p["d"] ** 2 - 4 * 3 ** (p["b"] + 1)),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 + 4 * 3 ** (p["b"] + 2)))

# --- conductor 72q ---------------------------------------------------------

_row("72q.1.a1",
     lambda q, p: 144 * (9 ** p["b"] + 3 ** p["b"] + 1),
     lambda q, p: 864 * (3 ** p["b"] - 1) * (3 ** p["b"] + 2) * (2 * 3 ** p["b"] + 1))
_row("72q.1.a2",
     lambda q, p: 144 * (16 * 9 ** p["b"] + 16 * 3 ** p["b"] + 1),
     lambda q, p: 1728 * (2 * 3 ** p["b"] + 1) * (32 * 9 ** p["b"] + 32 * 3 ** p["b"] - 1))
# The printed a3/a4 rows repeat the a2 row; the forms below are re-derived
# from the coefficient table and satisfy c4^3 - c6^2 = 1728*disc.
_row("72q.1.a3",
     lambda q, p: 144 * (9 ** p["b"] + 16 * 3 ** p["b"] + 16),
     lambda q, p: 1728 * (3 ** p["b"] + 2) * (9 ** p["b"] - 32 * 3 ** p["b"] - 32))
_row("72q.1.a4",
     lambda q, p: 9 * (9 ** p["b"] - 14 * 3 ** p["b"] + 1),
     lambda q, p: 27 * (3 ** p["b"] - 1) * (9 ** p["b"] + 34 * 3 ** p["b"] + 1))
PRINTED_FORMS["72q.1.a3"] = (C4_FORMS["72q.1.a2"], C6_FORMS["72q.1.a2"])
PRINTED_FORMS["72q.1.a4"] = (C4_FORMS["72q.1.a2"], C6_FORMS["72q.1.a2"])

_row("72q.2.a1",
     lambda q, p: 144 * (4 ** p["a"] * 9 ** p["b"] + _s(p["de"]) * 2 ** p["a"] * 3 ** p["b"] + 1),
     lambda q, p: -1728 * (_s(p["de"]) * 2 ** (p["a"] + 1) * 3 ** p["b"] + 1)
     * (2 ** (2 * p["a"] - 1) * 9 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] - 1) * 3 ** p["b"] - 1))
_row("72q.2.a2",
     lambda q, p: 144 * (2 ** (2 * p["a"] + 4) * 9 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] + 4) * 3 ** p["b"] + 1),
     lambda q, p: -1728 * (_s(p["de"]) * 2 ** (p["a"] + 1) * 3 ** p["b"] + 1)
     * (2 ** (2 * p["a"] + 5) * 9 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] + 5) * 3 ** p["b"] - 1))
_row("72q.2.a3",
     lambda q, p: 144 * (2 ** (2 * p["a"] - 4) * 9 ** p["b"] + _s(p["de"]) * 2 ** p["a"] * 3 ** p["b"] + 1),
     lambda q, p: 864 * (_s(p["de"]) * 2 ** (p["a"] - 1) * 3 ** p["b"] + 1)
     * (-(2 ** (2 * p["a"] - 4)) * 9 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] + 1) * 3 ** p["b"] + 2))
_row("72q.2.a4",
     # printed with (-1)**de on the middle term; the model needs (-1)**(de+1)
     lambda q, p: 144 * (4 ** p["a"] * 9 ** p["b"] + _s(p["de"] + 1) * 7 * 2 ** (p["a"] + 1) * 3 ** p["b"] + 1),
     lambda q, p: -1728 * (_s(p["de"]) * 2 ** p["a"] * 3 ** p["b"] - 1)
     * (4 ** p["a"] * 9 ** p["b"] + _s(p["de"]) * 17 * 2 ** (p["a"] + 1) * 3 ** p["b"] + 1))
PRINTED_FORMS["72q.2.a4"] = (
    lambda q, p: 144 * (4 ** p["a"] * 9 ** p["b"] + _s(p["de"]) * 7 * 2 ** (p["a"] + 1) * 3 ** p["b"] + 1),
    C6_FORMS["72q.2.a4"])

_row("72q.3.a1",
     lambda q, p: 144 * (9 ** p["b"] + _s(p["de"]) * 2 ** p["a"] * 3 ** p["b"] + 4 ** p["a"]),
     lambda q, p: 1728 * _s(p["b"]) * (3 ** p["b"] - _s(p["de"]) * 2 ** p["a"])
     * (4 ** p["a"] + _s(p["de"]) * 5 * 2 ** (p["a"] - 1) * 3 ** p["b"] + 9 ** p["b"]))
_row("72q.3.a2",
     lambda q, p: 144 * (9 ** p["b"] - _s(p["de"]) * 7 * 2 ** (p["a"] + 1) * 3 ** p["b"] + 4 ** p["a"]),
     lambda q, p: 1728 * _s(p["b"]) * (3 ** p["b"] - _s(p["de"]) * 2 ** p["a"])
     * (4 ** p["a"] + _s(p["de"]) * 17 * 2 ** (p["a"] + 1) * 3 ** p["b"] + 9 ** p["b"]))
_row("72q.3.a3",
     lambda q, p: 144 * (9 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] + 4) * 3 ** p["b"] + 2 ** (2 * p["a"] + 4)),
     lambda q, p: -1728 * _s(p["b"]) * (3 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] + 1))
     * (2 ** (2 * p["a"] + 5) + _s(p["de"]) * 2 ** (p["a"] + 5) * 3 ** p["b"] - 9 ** p["b"]))
_row("72q.3.a4",
     lambda q, p: 144 * (9 ** p["b"] + _s(p["de"]) * 2 ** p["a"] * 3 ** p["b"] + 2 ** (2 * p["a"] - 4)),
     lambda q, p: 864 * _s(p["b"]) * (3 ** p["b"] + _s(p["de"]) * 2 ** (p["a"] - 1))
     * (-(2 ** (2 * p["a"] - 4)) + _s(p["de"]) * 2 ** (p["a"] + 1) * 3 ** p["b"] + 2 * 9 ** p["b"]))

_row("72q.4.a1",
     lambda q, p: 144 * (p["d"] ** 2 + 1),
     lambda q, p: -864 * p["d"] * (2 * p["d"] ** 2 + 3))
_row("72q.4.a2",
     lambda q, p: 144 * (p["d"] ** 2 - 4),
     lambda q, p: -1728 * p["d"] * (p["d"] ** 2 + 12))
_row("72q.4.b1",
     lambda q, p: 1296 * (p["d"] ** 2 + 1),
     lambda q, p: 23328 * p["d"] * (2 * p["d"] ** 2 + 3))
_row("72q.4.b2",
     lambda q, p: 1296 * (p["d"] ** 2 - 4),
     lambda q, p: 46656 * p["d"] * (p["d"] ** 2 + 12))

# The printed c6 entries for this family put (-1)**de inside the bracket and
# a fixed overall sign, which fails for de = 0; the model gives the forms below.
_row("72q.5.a1",
     lambda q, p: 144 * (p["d"] ** 2 + _s(p["de"]) * 2 ** (p["a"] - 2)),
     lambda q, p: 864 * p["d"] * (2 * p["d"] ** 2 + _s(p["de"]) * 3 * 2 ** (p["a"] - 2)))
_row("72q.5.a2",
     lambda q, p: 144 * (p["d"] ** 2 - _s(p["de"]) * 2 ** p["a"]),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 + _s(p["de"]) * 3 * 2 ** p["a"]))
_row("72q.5.b1",
     lambda q, p: 1296 * (p["d"] ** 2 + _s(p["de"]) * 2 ** (p["a"] - 2)),
     lambda q, p: -23328 * p["d"] * (2 * p["d"] ** 2 + _s(p["de"]) * 3 * 2 ** (p["a"] - 2)))
_row("72q.5.b2",
     lambda q, p: 1296 * (p["d"] ** 2 - _s(p["de"]) * 2 ** p["a"]),
     lambda q, p: -46656 * p["d"] * (p["d"] ** 2 + _s(p["de"]) * 3 * 2 ** p["a"]))
PRINTED_FORMS["72q.5.a1"] = (
    C4_FORMS["72q.5.a1"],
    lambda q, p: -864 * p["d"] * (_s(p["de"]) * 2 * p["d"] ** 2 + 3 * 2 ** (p["a"] - 2)))
PRINTED_FORMS["72q.5.a2"] = (
    C4_FORMS["72q.5.a2"],
    lambda q, p: -1728 * p["d"] * (_s(p["de"]) * p["d"] ** 2 + 3 * 2 ** p["a"]))
PRINTED_FORMS["72q.5.b1"] = (
    C4_FORMS["72q.5.b1"],
    lambda q, p: 23328 * p["d"] * (_s(p["de"]) * 2 * p["d"] ** 2 + 3 * 2 ** (p["a"] - 2)))
PRINTED_FORMS["72q.5.b2"] = (
    C4_FORMS["72q.5.b2"],
    lambda q, p: 46656 * p["d"] * (_s(p["de"]) * p["d"] ** 2 + 3 * 2 ** p["a"]))

_row("72q.6.a1",
     lambda q, p: 36 * (p["d"] ** 2 - 1),
     lambda q, p: 864 * p["d"] * ((p["d"] ** 2 + 3) // 4))
_row("72q.6.a2",
     lambda q, p: 144 * (4 * p["d"] ** 2 + 1),
     lambda q, p: 1728 * p["d"] * (8 * p["d"] ** 2 + 3))
_row("72q.6.b1",
     lambda q, p: 324 * (p["d"] ** 2 - 1),
     lambda q, p: -23328 * p["d"] * ((p["d"] ** 2 + 3) // 4))
_row("72q.6.b2",
     lambda q, p: 1296 * (4 * p["d"] ** 2 + 1),
     lambda q, p: -46656 * p["d"] * (8 * p["d"] ** 2 + 3))

_row("72q.7.a1",
     lambda q, p: 36 * (p["d"] ** 2 - 3 ** (p["b"] + 1)),
     lambda q, p: 864 * p["d"] * ((p["d"] ** 2 + 3 ** (p["b"] + 2)) // 4))
_row("72q.7.a2",
     # printed with a minus on the 3-power; the model has a4 < 0, so it is a plus
     lambda q, p: 144 * (4 * p["d"] ** 2 + 3 ** (p["b"] + 1)),
     lambda q, p: 1728 * p["d"] * (8 * p["d"] ** 2 + 3 ** (p["b"] + 2)))
PRINTED_FORMS["72q.7.a2"] = (
    lambda q, p: 144 * (4 * p["d"] ** 2 - 3 ** (p["b"] + 1)),
    C6_FORMS["72q.7.a2"])

_row("72q.8.a1",
     lambda q, p: 144 * (p["d"] ** 2 + 3 ** (p["b"] + 1)),
     lambda q, p: -864 * p["d"] * (2 * p["d"] ** 2 + 3 ** (p["b"] + 2)))
_row("72q.8.a2",
     lambda q, p: 144 * (p["d"] ** 2 - 4 * 3 ** (p["b"] + 1)),
     lambda q, p: -1728 * p["d"] * (p["d"] ** 2 + 4 * 3 ** (p["b"] + 2)))

_row("72q.9.a1",
     lambda q, p: 144 * (p["d"] ** 2 + _sig(p) * 2 ** (p["a"] - 2) * 3 ** (p["b"] + 1)),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 + _sig(p) * 2 ** (p["a"] - 3) * 3 ** (p["b"] + 2)))
_row("72q.9.a2",
     lambda q, p: 144 * (p["d"] ** 2 + _s(p["d1"] + p["d2"] + 1) * 2 ** p["a"] * 3 ** (p["b"] + 1)),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 + _sig(p) * 2 ** p["a"] * 3 ** (p["b"] + 2)))

_row("72q.10.a1",
     lambda q, p: 144 * (p["d"] ** 2 - 2 ** (p["a"] - 2) * 3 ** (p["b"] + 1)),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 - 2 ** (p["a"] - 3) * 3 ** (p["b"] + 2)))
_row("72q.10.a2",
     lambda q, p: 144 * (p["d"] ** 2 + 2 ** p["a"] * 3 ** (p["b"] + 1)),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 - 2 ** p["a"] * 3 ** (p["b"] + 2)))

_row("72q.11.a1",
     lambda q, p: 144 * (p["d"] ** 2 + 24),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 + 36))
_row("72q.11.a2",
     lambda q, p: 144 * (p["d"] ** 2 - 96),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 + 288))

_row("72q.12.a1",
     lambda q, p: 144 * (p["d"] ** 2 + 24),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 + 36))
_row("72q.12.a2",
     lambda q, p: 144 * (p["d"] ** 2 - 96),
     lambda q, p: 1728 * p["d"] * (p["d"] ** 2 + 288))


def closed_form_c4_c6(family: str, which: str, q: int, params: Mapping[str, int]) -> tuple[int, int]:
    name = f"{family}.{which}"
    return C4_FORMS[name](q, params), C6_FORMS[name](q, params)
