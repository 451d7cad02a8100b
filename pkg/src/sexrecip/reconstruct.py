"""Assemble the large 1-to-3 reciprocal table from the 23 basic tables.

Every row of every basic table contributes up to two entries: the head
column and the tail column are each moved into ``[1, 60)`` and kept if the
result lies in ``[1, 3)``.  Its partner is the other column moved the same
way and then divided by 60, so the pair multiplies to exactly 1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .regular import ReciprocalPair, reciprocal
from .sexcore import ONE, SexNumber, compare, normalize_mantissa, parse, shift_point
from .tables import generate_family, standard_families

EXPECTED_TOTAL = 157
WINDOW_LOW = ONE
WINDOW_HIGH = SexNumber((3,))

# Pairs reproduced on the tablet, as printed.
TABLET_LINES = [
    ("1;0,16,53,53,20", "0;59,43,10,50,52,48"),
    ("1;0,40,53,20", "0;59,19,34,13,7,30"),
    ("1;0,45", "0;59,15,33,20"),
    ("1;1,2,6,33,45", "0;58,58,56,38,24"),
    ("1;1,26,24", "0;58,35,37,30"),
    ("1;1,30,33,45", "0;58,31,39,35,18,31,6,40"),
    ("1;29,12,19,26,34,23,19,49,38,8,36,52,20,44,26,40", "0;40,21,22,41,0,9"),
    ("2;15", "0;26,40"),
    ("2;55,46,52,30", "0;20,28,48"),
    ("2;57,46,40", "0;20,15"),
]

# Tablet pairs read off the 2^n * 5^3 doubling table after moving the point,
# keyed by the row n they come from.
POINT_ADJUSTED = {
    4: ("1;48", "0;33,20"),
    5: ("1;6,40", "0;54"),
    6: ("2;13,20", "0;27"),
    10: ("1;41,15", "0;35,33,20"),
    11: ("1;11,6,40", "0;50,37,30"),
    16: ("1;34,55,18,45", "0;37,55,33,20"),
    17: ("1;15,51,6,40", "0;47,27,39,22,30"),
    18: ("2;31,42,13,20", "0;23,43,49,41,15"),
    22: ("1;28,59,21,19,41,15", "0;40,27,15,33,20"),
    23: ("1;20,54,31,6,40", "0;44,29,40,39,50,37,30"),
}

CATCHLINE = ReciprocalPair(WINDOW_HIGH, reciprocal(WINDOW_HIGH), ("catchline", 0))


@dataclass(frozen=True)
class TableEntry:
    head: SexNumber
    tail: SexNumber
    provenance: tuple = ()


@dataclass(frozen=True)
class Mismatch:
    kind: str  # "absent" or "tail"
    head: SexNumber
    expected: SexNumber
    got: SexNumber | None = None

    def describe(self):
        if self.kind == "absent":
            return f"absent: igi {self.head} {self.expected}"
        return f"tail mismatch at igi {self.head}: expected {self.expected}, got {self.got}"


@dataclass
class ReconstructionReport:
    entries: list
    mismatches: list = field(default_factory=list)
    matched_golden: int = 0
    golden_total: int = 0
    unattested: list = field(default_factory=list)
    catchline: ReciprocalPair = CATCHLINE
    expected_total: int = EXPECTED_TOTAL

    @property
    def total(self):
        return len(self.entries)

    @property
    def surplus(self):
        """Entries beyond (positive) or short of (negative) the expected count."""
        return self.total - self.expected_total

    @property
    def ok(self):
        return not self.mismatches and self.total == self.expected_total


def golden_excerpts():
    """Reference pairs, each tagged with where on the tablet it comes from."""
    pairs = [ReciprocalPair(ONE, ONE, ("opening line", 0))]
    for i, (h, t) in enumerate(TABLET_LINES, 1):
        pairs.append(ReciprocalPair(parse(h), parse(t), ("tablet line", i)))
    for n, (h, t) in POINT_ADJUSTED.items():
        pairs.append(ReciprocalPair(parse(h), parse(t), ("point-adjusted 2^n*5^3", n)))
    return pairs


def in_window(v):
    return compare(v, WINDOW_LOW) >= 0 and compare(v, WINDOW_HIGH) < 0


def _partner(v, other):
    w, _ = normalize_mantissa(other)
    return w if v == ONE else shift_point(w, -1)


def window_candidates(pair):
    """Point-adjusted pairs with head in ``[1, 3)`` drawn from either column.

    Yields ``(head, tail, column)`` where ``column`` names the column of
    ``pair`` that supplied the head.
    """
    for column, here, there in (("head", pair.head, pair.tail), ("tail", pair.tail, pair.head)):
        v, _ = normalize_mantissa(here)
        if in_window(v):
            yield v, _partner(v, there), column


def reconstruct(golden=None, n_max=30):
    found = {ONE: (ONE, [("seed", 0, "head")])}
    for spec in standard_families(n_max):
        for row in generate_family(spec).rows:
            family_id, n = row.provenance
            for head, tail, column in window_candidates(row):
                if head in found:
                    found[head][1].append((family_id, n, column))
                else:
                    found[head] = (tail, [(family_id, n, column)])
    entries = [
        TableEntry(head, tail, tuple(sorted(prov)))
        for head, (tail, prov) in sorted(found.items(), key=lambda kv: kv[0])
    ]
    if golden is None:
        golden = golden_excerpts()
    report = ReconstructionReport(entries)
    report.mismatches = diff(report, golden)
    report.golden_total = len(golden)
    report.matched_golden = len(golden) - len(report.mismatches)
    attested = {p.head for p in golden}
    report.unattested = [e.head for e in entries if e.head not in attested]
    return report


def diff(report, golden):
    """Compare golden pairs against report entries by exact head value."""
    by_head = {e.head: e for e in report.entries}
    out = []
    for pair in golden:
        entry = by_head.get(pair.head)
        if entry is None:
            out.append(Mismatch("absent", pair.head, pair.tail))
        elif entry.tail != pair.tail:
            out.append(Mismatch("tail", pair.head, pair.tail, entry.tail))
    return out


def check_entries(report):
    """Heads inside the window, strictly ascending, each pair multiplying to 1."""
    previous = None
    for e in report.entries:
        if not in_window(e.head) or e.head * e.tail != ONE:
            return False
        if previous is not None and not previous < e.head:
            return False
        previous = e.head
    return True


def render_text(report):
    lines = [f"igi {e.head} {e.tail}" for e in report.entries]
    lines.append(f"catchline: igi {report.catchline.head} {report.catchline.tail}")
    return "\n".join(lines) + "\n"


def summary_lines(report):
    lines = [
        f"entries: {report.total} (expected {report.expected_total}, surplus {report.surplus:+d})",
        f"golden pairs matched: {report.matched_golden}/{report.golden_total}",
        f"entries not attested by golden pairs: {len(report.unattested)}",
    ]
    lines += [m.describe() for m in report.mismatches]
    return lines


def entry_to_dict(entry):
    return {
        "head": str(entry.head),
        "tail": str(entry.tail),
        "provenance": [
            {"family": f, "n": n, "column": c} for f, n, c in entry.provenance
        ],
    }


def report_to_dict(report):
    return {
        "entries": [entry_to_dict(e) for e in report.entries],
        "total": report.total,
        "expected_total": report.expected_total,
        "surplus": report.surplus,
        "catchline": {"head": str(report.catchline.head), "tail": str(report.catchline.tail)},
        "diff": {
            "golden_total": report.golden_total,
            "matched_golden": report.matched_golden,
            "mismatches": [
                {
                    "kind": m.kind,
                    "head": str(m.head),
                    "expected": str(m.expected),
                    "got": None if m.got is None else str(m.got),
                }
                for m in report.mismatches
            ],
            "unattested": [str(h) for h in report.unattested],
        },
    }


def load_golden(path):
    """Read golden pairs from a report-shaped JSON file (``{"entries": [...]}``)."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    rows = data["entries"] if isinstance(data, dict) else data
    pairs = []
    for i, row in enumerate(rows):
        pairs.append(ReciprocalPair(parse(row["head"]), parse(row["tail"]), ("file", i)))
    return pairs
