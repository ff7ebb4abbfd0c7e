"""Scan descriptions and reports.

A ``ScanSpec`` pins everything a suite run depends on (grids, sample count,
seed, tolerance), so a report is reproducible from its spec alone.  CSV
output is the machine interface: fixed schema
``suite,<params...>,lhs,rhs,margin,pass`` with floats at 17 significant
digits (round-trip safe) and canonical row order.  The human-readable
summary, including the seed, goes to stderr, never into the CSV.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from hgf.ineq import IneqCase

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class GridSpec:
    """One parameter axis: count points from lo to hi, linear or log spaced."""

    lo: float
    hi: float
    count: int
    spacing: str = "linear"

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count!r}")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo <= self.hi):
            raise ValueError(f"need finite lo <= hi, got {self.lo!r}, {self.hi!r}")
        if self.spacing not in ("linear", "log"):
            raise ValueError(f"spacing must be 'linear' or 'log', got {self.spacing!r}")
        if self.spacing == "log" and self.lo <= 0.0:
            raise ValueError("log spacing needs lo > 0")

    def points(self) -> np.ndarray:
        if self.count == 1:
            return np.array([self.lo])
        if self.spacing == "log":
            return np.geomspace(self.lo, self.hi, self.count)
        return np.linspace(self.lo, self.hi, self.count)

    def describe(self) -> str:
        if self.count == 1:
            return f"{self.lo:g}"
        tag = ":log" if self.spacing == "log" else ""
        return f"{self.lo:g}:{self.hi:g}:{self.count}{tag}"


@dataclass
class ScanSpec:
    """Grid/sample description for one suite run."""

    suite: str
    grids: dict[str, GridSpec] = field(default_factory=dict)
    samples: int | None = None
    seed: int = DEFAULT_SEED
    tol: float | None = None
    out: str | None = None
    jobs: int = 0  # 0 means choose automatically

    def __post_init__(self):
        if self.samples is not None and self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples!r}")
        if self.tol is not None and not (math.isfinite(self.tol) and self.tol > 0.0):
            raise ValueError(f"tol must be > 0, got {self.tol!r}")
        if self.jobs < 0:
            raise ValueError(f"jobs must be >= 0, got {self.jobs!r}")


def format_float(x: float) -> str:
    return f"{x:.17g}"


@dataclass
class Report:
    """Rows plus the context needed to reproduce them."""

    suite: str
    version: str
    seed: int
    tol: float
    grid_desc: str
    param_names: tuple[str, ...]
    rows: list[IneqCase]
    expectation: str  # human-readable statement of the expected outcome
    ok: bool          # expectation met

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def violations(self) -> int:
        return sum(1 for r in self.rows if not r.passed)

    @property
    def passes(self) -> int:
        return self.total - self.violations

    @property
    def min_margin(self) -> float:
        return min((r.margin for r in self.rows), default=math.nan)

    @property
    def argmin_params(self) -> dict[str, float]:
        if not self.rows:
            return {}
        worst = min(self.rows, key=lambda r: r.margin)
        return worst.params

    def write_csv(self, f) -> None:
        cols = ["suite", *self.param_names, "lhs", "rhs", "margin", "pass"]
        f.write(",".join(cols) + "\n")
        for row in self.rows:
            vals = [row.name]
            vals += [format_float(row.params.get(p, math.nan)) for p in self.param_names]
            vals += [format_float(row.lhs), format_float(row.rhs), format_float(row.margin)]
            vals += ["true" if row.passed else "false"]
            f.write(",".join(vals) + "\n")

    def summary(self) -> str:
        argmin = ",".join(f"{k}={v:.6g}" for k, v in self.argmin_params.items())
        lines = [
            f"suite={self.suite} version={self.version} seed={self.seed} tol={self.tol:g}",
            f"grid: {self.grid_desc}",
            f"rows={self.total} passes={self.passes} violations={self.violations} "
            f"min_margin={self.min_margin:.6g} argmin[{argmin}]",
            f"expectation: {self.expectation} -> {'ok' if self.ok else 'FAILED'}",
        ]
        return "\n".join(lines)
