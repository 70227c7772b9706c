"""Subset-maximum norms and unconditionality quotients of finite families.

The central quantity is the quotient

    ||sum_k a_k x_k||_r  /  ( max_k ||a_k||_p * max_{F subset of n} ||sum_{k in F} x_k||_q )

whose supremum over all finite families is the smallest constant making the
action unconditional.  Every quotient computed here is therefore a certified
lower bound for that constant.

Exhaustive enumerations walk the reflected-Gray-code order over subsets (or
sign patterns), updating a running sum one flip at a time.  The walk is
processed in fixed-size blocks, each re-seeded from scratch, so results are
bit-identical no matter how many worker threads share the index range, and
ties resolve to the first subset attained in Gray order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .seqspace import (
    EPS_NUM,
    Exponent,
    ExponentLike,
    ExponentTriple,
    FinSeq,
    row_norms,
)

logger = logging.getLogger(__name__)

#: Default cap on family size for exhaustive 2^n enumeration.
DEFAULT_N_EXH = 24

#: Conservative upper envelope for the constant of the sign-pattern
#: inequality; chosen above every published bound, so a genuine violation of
#: a check run at this level is a critical finding, not noise.
KG_UPPER = 1.8

# Rows per enumeration block.  Fixed (never derived from the thread count) so
# that the floating-point accumulation pattern, and hence every reported
# value, is independent of how the blocks are scheduled.
_BLOCK = 1 << 15


@dataclass(frozen=True, eq=False)
class Family:
    """An ordered family of n vectors sharing one ambient length (rows of ``matrix``)."""

    matrix: np.ndarray

    def __post_init__(self):
        arr = np.array(self.matrix, dtype=np.float64, copy=True)
        if arr.ndim != 2:
            raise ValueError("family matrix must be 2-d (one row per vector)")
        if arr.size and not np.all(np.isfinite(arr)):
            raise ValueError("family entries must be finite numbers")
        arr.setflags(write=False)
        object.__setattr__(self, "matrix", arr)

    @staticmethod
    def of(vectors) -> "Family":
        """Build a family from an iterable of vectors (FinSeq or array-like rows)."""
        if isinstance(vectors, Family):
            return vectors
        if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
            return Family(vectors)
        rows = []
        for v in vectors:
            rows.append(v.entries if isinstance(v, FinSeq) else np.asarray(v, dtype=np.float64))
        if not rows:
            return Family(np.zeros((0, 0)))
        lengths = {r.size for r in rows}
        if len(lengths) != 1:
            raise ValueError("family vectors must share one ambient length")
        return Family(np.stack(rows))

    @property
    def size(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def ambient_len(self) -> int:
        return int(self.matrix.shape[1])

    def __len__(self):
        return self.size

    def __getitem__(self, k: int) -> FinSeq:
        return FinSeq(self.matrix[k])

    @property
    def vectors(self) -> tuple[FinSeq, ...]:
        return tuple(FinSeq(row) for row in self.matrix)

    def __eq__(self, other):
        if not isinstance(other, Family):
            return NotImplemented
        return np.array_equal(self.matrix, other.matrix)

    def to_json(self) -> list:
        return [[float(v) for v in row] for row in self.matrix]

    def __repr__(self):
        return f"Family(n={self.size}, ambient_len={self.ambient_len})"


@dataclass(frozen=True)
class SubsetMaxResult:
    """Outcome of a subset (or sign-pattern) maximization.

    ``argmax_subset`` is a bitmask over the family index; for sign patterns,
    bit = 1 means sign -1.  ``certified`` is True only for exhaustive
    enumeration; randomized search yields a lower bound.
    """

    value: float
    argmax_subset: int
    certified: bool
    mode: str
    seed: Optional[int] = None

    def to_json(self) -> dict:
        out = {
            "value": self.value,
            "subset_bitmask": f"{self.argmax_subset:#x}",
            "certified": self.certified,
            "mode": self.mode,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out


@dataclass(frozen=True)
class QuotientResult:
    """An unconditionality quotient with its two ingredients."""

    numerator: float
    denominator: float
    quotient: float
    certified: bool
    subset: SubsetMaxResult

    def to_json(self) -> dict:
        out = {
            "quotient": self.quotient,
            "subset_bitmask": f"{self.subset.argmax_subset:#x}",
            "certified": self.certified,
            "mode": self.subset.mode,
        }
        if self.subset.seed is not None:
            out["seed"] = self.subset.seed
        return out


def _gray(i: int) -> int:
    return i ^ (i >> 1)


def _mask_rows_sum(X: np.ndarray, mask: int) -> np.ndarray:
    """Scratch sum of the rows selected by ``mask`` (index order)."""
    members = [k for k in range(X.shape[0]) if (mask >> k) & 1]
    if not members:
        return np.zeros(X.shape[1])
    return X[members].sum(axis=0)


def _walk_block_best(X: np.ndarray, q: Exponent, lo: int, hi: int, signs: bool):
    """Best (norm, Gray index) over Gray positions [lo, hi).

    For ``signs=False`` position i holds the subset-sum of gray(i); for
    ``signs=True`` it holds sum_k s_k x_k where s_k = -1 exactly on the bits
    of gray(i), and one flip is a +-2 x_k update.
    """
    d = X.shape[1]
    g_lo = _gray(lo)
    if signs:
        base = X.sum(axis=0) - 2.0 * _mask_rows_sum(X, g_lo)
        on_coeff, off_coeff = -2.0, 2.0
    else:
        base = _mask_rows_sum(X, g_lo)
        on_coeff, off_coeff = 1.0, -1.0
    count = hi - lo
    sums = np.empty((count, d))
    sums[0] = base
    if count > 1:
        idx = np.arange(lo + 1, hi, dtype=np.int64)
        # bit flipped at step i is the lowest set bit of i; exact via log2 of a power of two
        b = np.log2((idx & -idx).astype(np.float64)).astype(np.int64)
        on = ((idx ^ (idx >> 1)) >> b) & 1
        delta = np.where(on[:, None] == 1, on_coeff, off_coeff) * X[b]
        np.cumsum(delta, axis=0, out=delta)
        sums[1:] = base + delta
    norms = row_norms(sums, q)
    k = int(np.argmax(norms))
    return float(norms[k]), lo + k


def _exhaustive_best(X: np.ndarray, q: Exponent, signs: bool, threads: int = 1):
    """Exact max over all 2^n Gray positions; ties keep the smallest index."""
    n = X.shape[0]
    total = 1 << n
    starts = list(range(0, total, _BLOCK))

    def run(lo):
        return _walk_block_best(X, q, lo, min(lo + _BLOCK, total), signs)

    if threads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, starts))
    else:
        results = [run(lo) for lo in starts]
    best_val, best_idx = results[0]
    for val, idx in results[1:]:
        if val > best_val:
            best_val, best_idx = val, idx
    return best_val, best_idx


def _require_exhaustible(n: int, n_exh: int):
    if n > n_exh:
        raise ValueError(
            f"family size {n} exceeds the exhaustive cap {n_exh} "
            f"(2^{n} subsets); use mode='randomized' with a budget"
        )


def _normalize_mode(mode: str) -> str:
    m = str(mode).strip().lower()
    if m in ("exhaustive", "exh"):
        return "exhaustive"
    if m in ("randomized", "random", "rand"):
        return "randomized"
    raise ValueError(f"unknown mode {mode!r}; expected 'exhaustive' or 'randomized'")


def _randomized_subset_best(X: np.ndarray, q: Exponent, budget: int, seed):
    """Random restarts plus single-flip hill climbing; returns (value, mask)."""
    n = X.shape[0]
    best_val, best_mask = 0.0, 0
    if n == 0:
        return best_val, best_mask
    children = np.random.SeedSequence(seed).spawn(budget)
    for child in children:
        rng = np.random.default_rng(child)
        mask = int(rng.integers(0, 1 << n))
        cur = _mask_rows_sum(X, mask)
        cur_val = float(row_norms(cur.reshape(1, -1), q)[0])
        while True:
            in_set = np.array([(mask >> k) & 1 for k in range(n)], dtype=bool)
            flips = np.where(in_set[:, None], -1.0, 1.0) * X
            cand = cur[None, :] + flips
            vals = row_norms(cand, q)
            k = int(np.argmax(vals))
            if vals[k] <= cur_val:
                break
            cur = cand[k]
            cur_val = float(vals[k])
            mask ^= 1 << k
        # report the scratch-recomputed value so climbing drift cannot inflate it
        exact = float(row_norms(_mask_rows_sum(X, mask).reshape(1, -1), q)[0])
        if exact > best_val:
            best_val, best_mask = exact, mask
    return best_val, best_mask


def subset_max_norm(
    fam,
    q: ExponentLike,
    mode: str = "exhaustive",
    *,
    budget: Optional[int] = None,
    seed: Optional[int] = None,
    n_exh: int = DEFAULT_N_EXH,
    threads: int = 1,
) -> SubsetMaxResult:
    """max over subsets F of ||sum_{k in F} x_k||_q.

    Exhaustive mode is exact and certified (Gray-code walk over all 2^n
    subsets, one vector add/subtract per step, n <= n_exh).  Randomized mode
    runs ``budget`` seeded restarts with single-flip hill climbing and returns
    an uncertified lower bound.
    """
    fam = Family.of(fam)
    q = Exponent.of(q)
    mode = _normalize_mode(mode)
    if mode == "exhaustive":
        _require_exhaustible(fam.size, n_exh)
        val, idx = _exhaustive_best(fam.matrix, q, signs=False, threads=threads)
        return SubsetMaxResult(val, _gray(idx), True, "exhaustive")
    if budget is None or budget < 1:
        raise ValueError("empty budget")
    val, mask = _randomized_subset_best(fam.matrix, q, budget, seed)
    return SubsetMaxResult(val, mask, False, "randomized", seed)


def sign_max_norm(
    fam,
    q: ExponentLike,
    *,
    n_exh: int = DEFAULT_N_EXH,
    threads: int = 1,
) -> SubsetMaxResult:
    """max over sign patterns s in {-1,1}^n of ||sum_k s_k x_k||_q.

    Exact Gray-code enumeration (flipping one sign is a +-2 x_k update); the
    argmax bitmask has bit = 1 where the sign is -1.
    """
    fam = Family.of(fam)
    q = Exponent.of(q)
    _require_exhaustible(fam.size, n_exh)
    val, idx = _exhaustive_best(fam.matrix, q, signs=True, threads=threads)
    return SubsetMaxResult(val, _gray(idx), True, "exhaustive")


def _product_row(avec: Family, xvec: Family) -> np.ndarray:
    return (avec.matrix * xvec.matrix).sum(axis=0)


def unconditionality_quotient(
    avec,
    xvec,
    t: ExponentTriple,
    mode: str = "exhaustive",
    *,
    budget: Optional[int] = None,
    seed: Optional[int] = None,
    n_exh: int = DEFAULT_N_EXH,
    threads: int = 1,
) -> QuotientResult:
    """The quotient ||sum a_k x_k||_r / (max_k ||a_k||_p * subset_max(x, q)).

    Any constant C making the action unconditional satisfies C >= quotient,
    so exhaustive quotients are certified lower bounds.  All-zero a- or
    x-families make the denominator vanish and are rejected as degenerate.
    """
    avec = Family.of(avec)
    xvec = Family.of(xvec)
    if avec.size != xvec.size:
        raise ValueError("a-family and x-family must have the same size")
    if avec.size and avec.ambient_len != xvec.ambient_len:
        raise ValueError("a-family and x-family must share the ambient length")
    if not t.holder_valid:
        raise ValueError(f"triple {t} is not valid: 1/r > 1/p + 1/q")
    numerator = float(row_norms(_product_row(avec, xvec).reshape(1, -1), t.r)[0])
    a_max = float(row_norms(avec.matrix, t.p).max()) if avec.size else 0.0
    sub = subset_max_norm(
        xvec, t.q, mode, budget=budget, seed=seed, n_exh=n_exh, threads=threads
    )
    denominator = a_max * sub.value
    if denominator <= 0.0:
        raise ValueError("degenerate family: denominator is zero")
    return QuotientResult(numerator, denominator, numerator / denominator, sub.certified, sub)


def main1_bound_check(
    avec,
    xvec,
    q: ExponentLike,
    K: float,
    *,
    n_exh: int = DEFAULT_N_EXH,
    threads: int = 1,
) -> bool:
    """Check ||sum a_k x_k||_q <= 2 K max_k ||a_k||_2 * subset_max(x, q).

    The a-family is measured in the l2 norm; for coordinatewise
    multiplication l2 x lq -> lq the relevant operator norm is 1, so the
    right side needs no extra factor.  The comparison is denominator-free:
    all-zero families satisfy it as 0 <= 0.
    """
    avec = Family.of(avec)
    xvec = Family.of(xvec)
    if avec.size != xvec.size:
        raise ValueError("a-family and x-family must have the same size")
    if avec.size and avec.ambient_len != xvec.ambient_len:
        raise ValueError("a-family and x-family must share the ambient length")
    q = Exponent.of(q)
    lhs = float(row_norms(_product_row(avec, xvec).reshape(1, -1), q)[0])
    a_max = float(row_norms(avec.matrix, Exponent(2.0)).max()) if avec.size else 0.0
    sub = subset_max_norm(xvec, q, "exhaustive", n_exh=n_exh, threads=threads)
    rhs = 2.0 * K * a_max * sub.value
    ok = lhs <= rhs * (1.0 + EPS_NUM)
    if not ok and K >= KG_UPPER:
        logger.critical(
            "2K inequality violated at conservative K=%.3g: lhs %.12g > rhs %.12g "
            "on a %d-vector family; this should be impossible",
            K,
            lhs,
            rhs,
            avec.size,
        )
    return ok


def _quotient_or_none(A: np.ndarray, X: np.ndarray, t: ExponentTriple, n_exh: int):
    try:
        return unconditionality_quotient(Family(A), Family(X), t, n_exh=n_exh)
    except ValueError:
        return None


def _refine_families(A, X, t, n_exh, best_q, sweeps=2, steps=(0.5, 0.1)):
    """Coordinate-wise perturbation refinement; returns improved (A, X, result)."""
    A = A.copy()
    X = X.copy()
    best = best_q
    n, dim = A.shape
    for _ in range(sweeps):
        improved = False
        for scale in steps:
            for M in (A, X):
                for i in range(n):
                    for j in range(dim):
                        span = max(1.0, abs(M[i, j]))
                        orig = M[i, j]
                        for delta in (scale * span, -scale * span):
                            M[i, j] = orig + delta
                            res = _quotient_or_none(A, X, t, n_exh)
                            if res is not None and res.quotient > best.quotient:
                                best = res
                                orig = M[i, j]
                                improved = True
                            else:
                                M[i, j] = orig
        if not improved:
            break
    return A, X, best


def quotient_lower_bound_search(
    t: ExponentTriple,
    n: int,
    dim: int,
    budget: int,
    seed: Optional[int] = None,
    *,
    n_exh: int = DEFAULT_N_EXH,
    refine: bool = True,
) -> QuotientResult:
    """Best exhaustive quotient over ``budget`` seeded random families.

    Restarts alternate entries drawn from the {-1,0,1} lattice and from the
    standard normal distribution, each followed by coordinate-wise local
    perturbation refinement of promising draws.  Deterministic given ``seed``.
    """
    if budget < 1:
        raise ValueError("empty budget")
    if n < 1 or dim < 1:
        raise ValueError("n and dim must be >= 1")
    _require_exhaustible(n, n_exh)
    if not t.holder_valid:
        raise ValueError(f"triple {t} is not valid: 1/r > 1/p + 1/q")
    best: Optional[QuotientResult] = None
    children = np.random.SeedSequence(seed).spawn(budget)
    for trial, child in enumerate(children):
        rng = np.random.default_rng(child)
        if trial % 2 == 0:
            A = rng.integers(-1, 2, size=(n, dim)).astype(np.float64)
            X = rng.integers(-1, 2, size=(n, dim)).astype(np.float64)
        else:
            A = rng.standard_normal((n, dim))
            X = rng.standard_normal((n, dim))
        res = _quotient_or_none(A, X, t, n_exh)
        if res is None:
            continue
        if refine and (best is None or res.quotient > 0.8 * best.quotient):
            _, _, res = _refine_families(A, X, t, n_exh, res)
        if best is None or res.quotient > best.quotient:
            best = res
    if best is None:
        raise ValueError("search drew only degenerate families; increase the budget")
    return best
