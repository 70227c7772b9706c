"""Numerical checks of the elementary inequalities behind the quotient machinery.

Covered here:

* the real subset-sum inequality  sum |x_k| <= 2 max_F |sum_F x_k|
  (constant 2 is sharp; the max is computed exactly from the positive /
  negative split, no enumeration needed);
* its complex version with constant 4, sharp constant pi
  (exact subset enumeration at desk scale, plus the half-plane arc scan
  that finds the optimum in O(n^2));
* the lp-lq sandwich  ||v||_q <= ||v||_p <= n^(1/p-1/q) ||v||_q  over random
  vectors;
* empirical lower bounds for the sign-pattern constant K in
  sum ||x_k||_2 <= K max_{s in {-1,1}^n} ||sum s_k x_k||_1,
  reported against a configurable upper envelope.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .seqspace import EPS_NUM, Exponent, ExponentLike, norm, row_norms
from .unconditionality import (
    DEFAULT_N_EXH,
    KG_UPPER,
    Family,
    sign_max_norm,
    subset_max_norm,
)

logger = logging.getLogger(__name__)

#: Upper envelope for the sign-pattern constant; exceeds every published bound.
DEFAULT_KG_UPPER = KG_UPPER
#: Sharp constant for the complex subset-sum inequality, to 1e-12.
SHARP_COMPLEX_BOUND = 3.141592653589793

REAL_SUBSET_BOUND = 2.0
COMPLEX_SUBSET_BOUND = 4.0


@dataclass(frozen=True, eq=False)
class RatioReport:
    """A ratio, the inequality's constant it is measured against, and the input."""

    ratio: float
    bound: float
    slack: float
    witness: object
    certified: bool
    sharp_bound: Optional[float] = None

    def _witness_json(self):
        w = self.witness
        if isinstance(w, Family):
            return w.to_json()
        arr = np.asarray(w)
        if np.iscomplexobj(arr):
            return [[float(z.real), float(z.imag)] for z in arr]
        return [float(v) for v in arr]

    def to_json(self) -> dict:
        return {
            "ratio": self.ratio,
            "bound": self.bound,
            "slack": self.slack,
            "witness": self._witness_json(),
            "certified": self.certified,
        }


def real_subset_ratio(x: Sequence[float]) -> RatioReport:
    """sum |x_k| divided by the exact subset max |sum_F x_k|.

    The subset max is max(sum of positives, -sum of negatives): one of the
    two sign classes always attains it, so no enumeration is involved.
    """
    arr = np.asarray(x, dtype=np.float64).reshape(-1)
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError("entries must be finite")
    pos = float(arr[arr > 0].sum())
    neg = float(-arr[arr < 0].sum())
    denom = max(pos, neg)
    if denom <= 0.0:
        raise ValueError("degenerate input: all entries are zero")
    ratio = float(np.abs(arr).sum()) / denom
    return RatioReport(ratio, REAL_SUBSET_BOUND, REAL_SUBSET_BOUND - ratio, arr.copy(), True)


def _as_complex(z) -> np.ndarray:
    arr = np.asarray(z, dtype=np.complex128).reshape(-1)
    if arr.size and not np.all(np.isfinite(arr.real) & np.isfinite(arr.imag)):
        raise ValueError("entries must be finite")
    return arr


def _complex_planar_family(arr: np.ndarray) -> Family:
    # |sum_F z_k| is the l2 row norm of the (Re, Im) pair, so the complex
    # subset max reduces to the planar subset max with its stable modulus.
    return Family(np.column_stack([arr.real, arr.imag]))


def complex_subset_max(z, *, n_exh: int = DEFAULT_N_EXH) -> tuple[float, int]:
    """Exact max_F |sum_F z_k| by subset enumeration; returns (value, bitmask)."""
    arr = _as_complex(z)
    res = subset_max_norm(_complex_planar_family(arr), 2, "exhaustive", n_exh=n_exh)
    return res.value, res.argmax_subset


def halfplane_subset_max(z) -> float:
    """max_F |sum_F z_k| via the half-plane scan.

    The optimal subset is always of the form {k : Re(e^{-i theta} z_k) > 0};
    sweeping theta across the 2n membership-change angles and summing each
    arc costs O(n^2).
    """
    arr = _as_complex(z)
    nz = arr[arr != 0]
    if nz.size == 0:
        return 0.0
    ang = np.angle(nz)
    events = np.concatenate([ang - 0.5 * math.pi, ang + 0.5 * math.pi])
    events = np.unique(np.mod(events, 2.0 * math.pi))
    # midpoints of consecutive arcs, including the wrap-around arc
    thetas = (events + np.roll(events, -1)) / 2.0
    thetas[-1] = (events[-1] + events[0] + 2.0 * math.pi) / 2.0
    best = 0.0
    for theta in thetas:
        members = np.cos(ang - theta) > 0.0
        val = abs(nz[members].sum())
        if val > best:
            best = float(val)
    return best


def complex_subset_ratio(z, *, n_exh: int = DEFAULT_N_EXH) -> RatioReport:
    """sum |z_k| divided by the exact subset max, certified by enumeration."""
    arr = _as_complex(z)
    if arr.size > n_exh:
        raise ValueError(
            f"{arr.size} entries exceed the exhaustive cap {n_exh}; "
            "use complex_halfplane_ratio"
        )
    total = float(np.abs(arr).sum())
    if total <= 0.0:
        raise ValueError("degenerate input: all entries are zero")
    denom, _ = complex_subset_max(arr, n_exh=n_exh)
    ratio = total / denom
    return RatioReport(
        ratio,
        COMPLEX_SUBSET_BOUND,
        COMPLEX_SUBSET_BOUND - ratio,
        arr.copy(),
        True,
        sharp_bound=SHARP_COMPLEX_BOUND,
    )


def complex_halfplane_ratio(z, *, n_exh: int = DEFAULT_N_EXH) -> RatioReport:
    """Like complex_subset_ratio but via the arc scan, so any n is allowed.

    Certified only when enumeration is feasible and agrees with the scan;
    the scan is not trusted on its own.
    """
    arr = _as_complex(z)
    total = float(np.abs(arr).sum())
    if total <= 0.0:
        raise ValueError("degenerate input: all entries are zero")
    denom = halfplane_subset_max(arr)
    certified = False
    if arr.size <= n_exh:
        exact, _ = complex_subset_max(arr, n_exh=n_exh)
        certified = abs(denom - exact) <= EPS_NUM * max(1.0, exact)
        denom = exact if certified else denom
    ratio = total / denom
    return RatioReport(
        ratio,
        COMPLEX_SUBSET_BOUND,
        COMPLEX_SUBSET_BOUND - ratio,
        arr.copy(),
        certified,
        sharp_bound=SHARP_COMPLEX_BOUND,
    )


def grothendieck_ratio(
    fam,
    *,
    kg_upper: float = DEFAULT_KG_UPPER,
    n_exh: int = DEFAULT_N_EXH,
) -> RatioReport:
    """sum_k ||x_k||_2 divided by the exact sign-pattern max of ||sum s_k x_k||_1.

    Every returned ratio is a valid lower bound for the constant of the sign
    inequality; a ratio above ``kg_upper`` would be a critical finding and is
    logged as such.
    """
    fam = Family.of(fam)
    smax = sign_max_norm(fam, 1, n_exh=n_exh)
    if smax.value <= 0.0:
        raise ValueError("degenerate family: all vectors are zero")
    numer = float(row_norms(fam.matrix, 2).sum())
    ratio = numer / smax.value
    if ratio > kg_upper + EPS_NUM:
        logger.critical(
            "sign-pattern ratio %.12g exceeds the configured upper bound %.3g "
            "on a %d-vector family; this contradicts the inequality envelope",
            ratio,
            kg_upper,
            fam.size,
        )
    return RatioReport(ratio, kg_upper, kg_upper - ratio, fam, True)


def grothendieck_search(
    n: int,
    dim: int,
    budget: int,
    seed: Optional[int] = None,
    *,
    kg_upper: float = DEFAULT_KG_UPPER,
    n_exh: int = DEFAULT_N_EXH,
) -> RatioReport:
    """Best sign-pattern ratio over seeded random families with sign-flip refinement.

    Negating a single entry never changes sum ||x_k||_2, so refinement only
    drives the denominator down.  The running best is nondecreasing over the
    budget, and the whole run is deterministic per seed.
    """
    if budget < 1:
        raise ValueError("empty budget")
    if n < 1 or dim < 1:
        raise ValueError("n and dim must be >= 1")
    if n > n_exh:
        raise ValueError(f"family size {n} exceeds the exhaustive cap {n_exh}")
    best: Optional[RatioReport] = None
    children = np.random.SeedSequence(seed).spawn(budget)
    for trial, child in enumerate(children):
        rng = np.random.default_rng(child)
        if trial % 2 == 0:
            X = (rng.integers(0, 2, size=(n, dim)) * 2 - 1).astype(np.float64)
        else:
            X = rng.standard_normal((n, dim))
        try:
            rep = grothendieck_ratio(Family(X), kg_upper=kg_upper, n_exh=n_exh)
        except ValueError:
            continue
        # sign-flip hill climb on single entries
        for _ in range(8):
            improved = False
            for i in range(n):
                for j in range(dim):
                    X[i, j] = -X[i, j]
                    try:
                        cand = grothendieck_ratio(Family(X), kg_upper=kg_upper, n_exh=n_exh)
                    except ValueError:
                        cand = None
                    if cand is not None and cand.ratio > rep.ratio:
                        rep = cand
                        improved = True
                    else:
                        X[i, j] = -X[i, j]
            if not improved:
                break
        if best is None or rep.ratio > best.ratio:
            best = rep
    if best is None:
        raise ValueError("search drew only degenerate families; increase the budget")
    return best


@dataclass(frozen=True)
class SandwichSweepRecord:
    p: Exponent
    q: Exponent
    dim: int
    trials: int
    violations: int
    min_lower_slack: float
    min_upper_slack: float

    def to_json(self) -> dict:
        return {
            "p": self.p.to_json(),
            "q": self.q.to_json(),
            "dim": self.dim,
            "trials": self.trials,
            "violations": self.violations,
            "min_lower_slack": self.min_lower_slack,
            "min_upper_slack": self.min_upper_slack,
        }


@dataclass(frozen=True)
class SandwichSweepReport:
    records: tuple[SandwichSweepRecord, ...]

    @property
    def violations(self) -> int:
        return sum(r.violations for r in self.records)

    def to_json(self) -> dict:
        return {
            "violations": self.violations,
            "records": [r.to_json() for r in self.records],
        }


def sandwich_sweep(
    dims: Sequence[int],
    p_q_pairs: Sequence[tuple[ExponentLike, ExponentLike]],
    trials: int,
    seed: Optional[int] = None,
) -> SandwichSweepReport:
    """Probe the lp-lq sandwich on random vectors.

    For each pair and dimension, draws ``trials`` standard-normal vectors and
    records the violation count (which must stay zero) and the tightest slack
    observed on each side.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    records = []
    for pv, qv in p_q_pairs:
        p = Exponent.of(pv)
        q = Exponent.of(qv)
        if q.is_infinite or p.is_infinite or p.value > q.value:
            raise ValueError("pairs must satisfy 1 <= p <= q < inf")
        for dim in dims:
            violations = 0
            min_lower = math.inf
            min_upper = math.inf
            factor = float(dim) ** (p.reciprocal - q.reciprocal)
            for _ in range(trials):
                v = rng.standard_normal(dim)
                np_ = norm(v, p)
                nq = norm(v, q)
                lower_slack = np_ - nq
                upper_slack = factor * nq - np_
                if lower_slack < -EPS_NUM * max(1.0, np_) or upper_slack < -EPS_NUM * max(1.0, np_):
                    violations += 1
                min_lower = min(min_lower, lower_slack)
                min_upper = min(min_upper, upper_slack)
            records.append(
                SandwichSweepRecord(p, q, int(dim), trials, violations, min_lower, min_upper)
            )
    return SandwichSweepReport(tuple(records))
