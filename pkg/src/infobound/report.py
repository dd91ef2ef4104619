"""Side-by-side tables of entropy bounds, oracle minima and measured worst cases.

One row per (problem, n). Cells that would need an oracle or an
exhaustive sweep beyond its cap are left empty rather than estimated.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Optional

from .comparisons import EXHAUSTIVE_CAP, SORTS, worst_case_exhaustive
from .entropy import ceil_log2, log2_factorial_exact, stirling_log2_factorial
from .oracle import ORACLE_CAP, min_comparisons_max, min_comparisons_sort

COLUMNS = (
    "problem", "n", "state_count", "entropy_exact_bits", "entropy_stirling_bits",
    "ceil_entropy", "oracle_min", "algo", "worst_case", "bound_met",
)

PROBLEMS = ("max", "sort")


def sig7(x: float) -> float:
    """Round to the 7 significant digits used in emitted tables."""
    return float(f"{x:.7g}")


@dataclass(frozen=True)
class BoundRow:
    problem: str
    n: int
    state_count: int
    entropy_exact_bits: float
    entropy_stirling_bits: Optional[float]
    ceil_entropy: int
    oracle_min: Optional[int]
    algos: tuple[str, ...]
    worst_cases: tuple[int, ...]
    bound_met: Optional[bool]

    def cells(self) -> list[str]:
        def num(x):
            return "" if x is None else f"{x:.7g}"

        def opt(x):
            return "" if x is None else str(x)

        met = "" if self.bound_met is None else str(self.bound_met).lower()
        return [
            self.problem, str(self.n), str(self.state_count),
            num(self.entropy_exact_bits), num(self.entropy_stirling_bits),
            str(self.ceil_entropy), opt(self.oracle_min),
            ";".join(self.algos), ";".join(map(str, self.worst_cases)), met,
        ]

    @classmethod
    def from_cells(cls, cells: dict) -> "BoundRow":
        def num(s):
            return float(s) if s else None

        def opt(s):
            return int(s) if s else None

        met = {"true": True, "false": False, "": None}[cells["bound_met"]]
        return cls(
            problem=cells["problem"],
            n=int(cells["n"]),
            state_count=int(cells["state_count"]),
            entropy_exact_bits=float(cells["entropy_exact_bits"]),
            entropy_stirling_bits=num(cells["entropy_stirling_bits"]),
            ceil_entropy=int(cells["ceil_entropy"]),
            oracle_min=opt(cells["oracle_min"]),
            algos=tuple(cells["algo"].split(";")) if cells["algo"] else (),
            worst_cases=tuple(int(w) for w in cells["worst_case"].split(";"))
            if cells["worst_case"] else (),
            bound_met=met,
        )

    def violations(self) -> list[str]:
        """Breaks of ceil_entropy <= oracle_min <= every measured worst case."""
        out = []
        tag = f"{self.problem} n={self.n}"
        if self.oracle_min is not None and self.ceil_entropy > self.oracle_min:
            out.append(f"{tag}: ceil_entropy {self.ceil_entropy} > oracle_min {self.oracle_min}")
        floor = self.ceil_entropy if self.oracle_min is None else self.oracle_min
        for algo, worst in zip(self.algos, self.worst_cases):
            if worst < floor:
                out.append(f"{tag}: {algo} worst case {worst} below lower bound {floor}")
        return out


@dataclass(frozen=True)
class BoundReport:
    rows: tuple[BoundRow, ...]

    def violations(self) -> list[str]:
        return [v for row in self.rows for v in row.violations()]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in self.rows:
            writer.writerow(row.cells())
        return buf.getvalue()

    def to_markdown(self) -> str:
        lines = ["| " + " | ".join(COLUMNS) + " |",
                 "|" + "|".join("---" for _ in COLUMNS) + "|"]
        lines += ["| " + " | ".join(row.cells()) + " |" for row in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "BoundReport":
        reader = csv.DictReader(io.StringIO(text))
        if tuple(reader.fieldnames or ()) != COLUMNS:
            raise ValueError(f"unexpected CSV header {reader.fieldnames!r}")
        return cls(tuple(BoundRow.from_cells(r) for r in reader))


def max_row(n: int, *, workers: int = 1) -> BoundRow:
    oracle = min_comparisons_max(n).min_worst_case if n <= ORACLE_CAP else None
    algos, worst = (), ()
    if n <= EXHAUSTIVE_CAP:
        algos = ("max_scan",)
        worst = (worst_case_exhaustive("max_scan", n, workers=workers).worst_case,)
    return BoundRow(
        problem="max", n=n, state_count=2 ** (n - 1),
        entropy_exact_bits=float(n - 1), entropy_stirling_bits=None,
        ceil_entropy=n - 1, oracle_min=oracle, algos=algos, worst_cases=worst,
        bound_met=None if oracle is None else oracle == n - 1,
    )


def sort_row(n: int, *, workers: int = 1) -> BoundRow:
    count = math.factorial(n)
    ceil_h = ceil_log2(count)
    oracle = min_comparisons_sort(n).min_worst_case if n <= ORACLE_CAP else None
    algos, worst = (), ()
    if n <= EXHAUSTIVE_CAP:
        algos = tuple(SORTS)
        worst = tuple(worst_case_exhaustive(a, n, workers=workers).worst_case for a in algos)
    return BoundRow(
        problem="sort", n=n, state_count=count,
        entropy_exact_bits=sig7(log2_factorial_exact(n)),
        entropy_stirling_bits=sig7(stirling_log2_factorial(n)),
        ceil_entropy=ceil_h, oracle_min=oracle, algos=algos, worst_cases=worst,
        bound_met=None if oracle is None else oracle == ceil_h,
    )


def build_report(lo: int, hi: int, *, workers: int = 1) -> BoundReport:
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid n range {lo}..{hi}")
    builders = {"max": max_row, "sort": sort_row}
    rows = [builders[p](n, workers=workers) for p in PROBLEMS for n in range(lo, hi + 1)]
    return BoundReport(tuple(rows))


def parse_range(text: str) -> tuple[int, int]:
    """Parse ``"A..B"`` (inclusive) into (A, B)."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"expected A..B, got {text!r}")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i < 1 or hi_i < lo_i:
        raise ValueError(f"empty or non-positive range {text!r}")
    return lo_i, hi_i
