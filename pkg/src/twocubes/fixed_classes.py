"""The finitely many named isogeny classes at special conductors.

A handful of conductors of the shape 18q/36q/72q carry isogeny classes with
rational 2-torsion that no parametrized family produces; they are known by
name and enter classification and sieving as fixed data.  Their Weierstrass
models live in a small versioned text dataset shipped with the package
(``data/fixed_classes.txt``), regenerable with scripts/rebuild_fixed_classes.py
and overridable through the TCL_FIXED_CLASSES environment variable.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .curves import CurveModel

# conductor -> (q, level) for every special conductor
FIXED_CONDUCTORS: dict[int, tuple[int, int]] = {
    90: (5, 18), 126: (7, 18), 180: (5, 36), 198: (11, 18), 252: (7, 36),
    306: (17, 18), 342: (19, 18), 360: (5, 72), 414: (23, 18), 468: (13, 36),
    936: (13, 72), 1314: (73, 18), 2088: (29, 72), 3384: (47, 72),
    5256: (73, 72), 13896: (193, 72), 83016: (1153, 72),
}

# all named classes with rational 2-torsion, by conductor
FIXED_CLASS_LABELS: dict[int, tuple[str, ...]] = {
    90: ("90a", "90b", "90c"),
    126: ("126a", "126b"),
    180: ("180a",),
    198: ("198b", "198c", "198d", "198e"),
    252: ("252a",),
    306: ("306a", "306b", "306c"),
    342: ("342c", "342f"),
    360: ("360a", "360b", "360c", "360d"),
    414: ("414a",),
    468: ("468d",),
    936: ("936a", "936d", "936f"),
    1314: ("1314a", "1314f"),
    2088: ("2088b", "2088h"),
    3384: ("3384a",),
    5256: ("5256e",),
    13896: ("13896f",),
    83016: ("83016c",),
}

# the named classes whose discriminant is T^2 or -3T^2 on some member
S0_FIXED_CLASSES = frozenset(
    {"90c", "126b", "252a", "306c", "342f", "360a", "360d", "936d", "5256e"})

ENV_DATASET = "TCL_FIXED_CLASSES"
DATASET_VERSION = "fixed-classes v1"


def fixed_classes_for_prime(q: int) -> list[str]:
    """Named class labels whose conductor is 18q, 36q or 72q."""
    labels: list[str] = []
    for level in (18, 36, 72):
        n = level * q
        if n in FIXED_CONDUCTORS and FIXED_CONDUCTORS[n][0] == q:
            labels.extend(FIXED_CLASS_LABELS[n])
    return labels


def conductor_of_label(label: str) -> int:
    head = label.rstrip("abcdefgh")
    return int(head)


@dataclass(frozen=True)
class FixedClass:
    label: str
    conductor: int
    curves: tuple[CurveModel, ...]
    source: str


class DatasetError(RuntimeError):
    pass


def _dataset_text() -> str:
    override = os.environ.get(ENV_DATASET)
    if override:
        with open(override, "r", encoding="utf-8") as fh:
            return fh.read()
    ref = resources.files("twocubes").joinpath("data/fixed_classes.txt")
    try:
        return ref.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise DatasetError(
            "fixed-class dataset missing; regenerate with "
            "scripts/rebuild_fixed_classes.py or set TCL_FIXED_CLASSES") from exc


def parse_dataset(text: str) -> dict[str, FixedClass]:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# " + DATASET_VERSION):
        raise DatasetError(f"dataset header must declare '{DATASET_VERSION}'")
    by_label: dict[str, list[tuple[int, CurveModel, str]]] = {}
    conductors: dict[str, int] = {}
    for line in lines[1:]:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 9:
            raise DatasetError(f"malformed record: {line!r}")
        label, index, conductor = parts[0], int(parts[1]), int(parts[2])
        a1, a2, a3, a4, a6 = (int(x) for x in parts[3:8])
        source = parts[8]
        model = CurveModel(a1, a2, a3, a4, a6, label=f"{label}{index}")
        by_label.setdefault(label, []).append((index, model, source))
        conductors[label] = conductor
    out = {}
    for label, entries in by_label.items():
        entries.sort()
        out[label] = FixedClass(
            label=label,
            conductor=conductors[label],
            curves=tuple(m for _, m, _ in entries),
            source=entries[0][2],
        )
    return out


@lru_cache(maxsize=1)
def load_fixed_classes() -> dict[str, FixedClass]:
    """All named classes with their curve models, from the active dataset."""
    return parse_dataset(_dataset_text())


def fixed_class_models(label: str) -> FixedClass:
    table = load_fixed_classes()
    if label not in table:
        raise DatasetError(f"class {label} missing from the fixed-class dataset")
    return table[label]


def write_dataset(path: str, records: list[tuple[str, int, int, CurveModel]],
                  source_tag: str, source_digest: str | None = None) -> None:
    """Serialize (label, index, conductor, model) records in dataset format."""
    lines = [f"# {DATASET_VERSION}"]
    if source_digest:
        lines.append(f"# source sha256: {source_digest}")
    for label, index, conductor, m in sorted(records):
        lines.append(
            f"{label} {index} {conductor} {m.a1} {m.a2} {m.a3} {m.a4} {m.a6} {source_tag}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def ingest_database_export(export_path: str, out_path: str) -> int:
    """Convert a plain curve table into the dataset format.

    The export format is one curve per line: ``label N a1 a2 a3 a4 a6``
    where label ends with the curve index (e.g. 90c2).  Only the named
    classes are kept.  Returns the number of records written.
    """
    wanted = {lbl for labels in FIXED_CLASS_LABELS.values() for lbl in labels}
    with open(export_path, "rb") as fh:
        raw = fh.read()
    digest = hashlib.sha256(raw).hexdigest()
    records = []
    for line in raw.decode("utf-8").splitlines():
        parts = line.split()
        if len(parts) != 7:
            continue
        full_label, conductor = parts[0], int(parts[1])
        head = full_label.rstrip("0123456789")
        index = int(full_label[len(head):] or "1")
        if head not in wanted:
            continue
        a1, a2, a3, a4, a6 = (int(x) for x in parts[2:7])
        records.append((head, index, conductor, CurveModel(a1, a2, a3, a4, a6)))
    write_dataset(out_path, records, "db-export", digest)
    return len(records)
