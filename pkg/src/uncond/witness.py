"""Constructive non-preservation witnesses.

Two generators:

* ``hadamard_witness`` builds, for a triple with 1/2 + 1/r > 1/p + 1/min(2,q),
  a family of 2^n orthogonal +-1 rows whose quotient provably exceeds any
  prescribed constant C.  The certificate lives in log2 space: the product
  vector is constantly 2^n on 2^n coordinates, so the numerator is exactly
  2^(n(1+1/r)), while every subset sum of the rows is bounded by
  2^(n(1/2+1/q'')) with q'' = min(2, q).

* ``tail_witness`` exhibits, for r < q, the power sequence x(n) = n^(-1/r)
  whose basis expansion is unconditionally Cauchy in lq (summable tail) while
  its partial lr norms grow beyond any bound B.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np
from scipy.special import zeta

from .errors import InternalInconsistencyError
from .seqspace import EPS_CMP, Exponent, ExponentLike, ExponentTriple
from .unconditionality import DEFAULT_N_EXH, Family, unconditionality_quotient

#: Largest doubling step for explicit +-1 matrices (size 4096).
SYLVESTER_MAX_LOG = 12
#: Families are materialized only while the matrix has at most 2^20 entries.
MATERIALIZE_MAX_LOG = 10
#: Hard cap on the certificate step count.
WITNESS_MAX_LOG = 40
#: Cap on terms summed when locating the divergent-tail crossing.
TAIL_MAX_TERMS = 10_000_000


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    """A 2^n x 2^n matrix of +-1 entries with mutually orthogonal rows.

    Orthogonality is verified exactly at construction (integer arithmetic;
    the float64 matmul used for speed is exact at these magnitudes).
    """

    log_size: int
    entries: np.ndarray

    def __post_init__(self):
        n = self.log_size
        size = 1 << n
        arr = np.array(self.entries, dtype=np.int8, copy=True)
        if arr.shape != (size, size):
            raise ValueError(f"expected a {size}x{size} matrix")
        if not np.all(np.abs(arr) == 1):
            raise ValueError("entries must be exactly +1 or -1")
        f = arr.astype(np.float64)
        gram = f @ f.T
        if not np.array_equal(gram, float(size) * np.eye(size)):
            raise ValueError("rows are not mutually orthogonal")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def size(self) -> int:
        return 1 << self.log_size

    def rows_family(self) -> Family:
        return Family(self.entries.astype(np.float64))

    def to_json_rows(self) -> list:
        return [[int(v) for v in row] for row in self.entries]

    def packed(self) -> bytes:
        """Row-major, one bit per entry; the bit is 1 where the entry is -1."""
        return np.packbits(self.entries.reshape(-1) == -1).tobytes()

    @classmethod
    def unpack(cls, log_size: int, data: bytes) -> "HadamardMatrix":
        size = 1 << log_size
        bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), count=size * size)
        entries = np.where(bits.reshape(size, size) == 1, -1, 1).astype(np.int8)
        return cls(log_size, entries)

    def __repr__(self):
        return f"HadamardMatrix(log_size={self.log_size})"


def sylvester(n: int) -> HadamardMatrix:
    """The n-th doubling of [[1]]: H(2m) = [[H, H], [H, -H]], size 2^n."""
    if not 0 <= n <= SYLVESTER_MAX_LOG:
        raise ValueError(f"n must be in [0, {SYLVESTER_MAX_LOG}] (size cap 2^{SYLVESTER_MAX_LOG})")
    block = np.array([[1, 1], [1, -1]], dtype=np.int8)
    H = np.array([[1]], dtype=np.int8)
    for _ in range(n):
        H = np.kron(block, H)
    return HadamardMatrix(n, H)


@dataclass(frozen=True)
class WitnessReport:
    """Certificate that the quotient of the constructed family exceeds C.

    All certified quantities are carried in log2 space so the construction
    works far beyond float overflow; ``exhaustive_quotient`` is attached only
    when 2^n is small enough to enumerate.
    """

    triple: ExponentTriple
    C: float
    n: int
    family_size: int
    log2_numerator: float
    log2_denominator_bound: float
    certified_ratio_log2: float
    exhaustive_quotient: Optional[float]
    minimality_checked: bool
    family: Optional[Family] = field(repr=False, default=None)

    @property
    def log2_multiplier_norm(self) -> float:
        """log2 of max_k ||a_k||_p for the constructed rows: exactly n/p."""
        return self.n * self.triple.p.reciprocal

    def to_json(self) -> dict:
        out = {
            "p": self.triple.p.to_json(),
            "q": self.triple.q.to_json(),
            "r": self.triple.r.to_json(),
            "C": self.C,
            "n": self.n,
            "family_size": self.family_size,
            "log2_numerator": self.log2_numerator,
            "log2_denominator_bound": self.log2_denominator_bound,
            "certified_ratio_log2": self.certified_ratio_log2,
            "minimality_checked": self.minimality_checked,
        }
        if self.exhaustive_quotient is not None:
            out["exhaustive_quotient"] = self.exhaustive_quotient
        return out


def second_clause_gap(t: ExponentTriple) -> float:
    """(1/2 + 1/r) - (1/p + 1/min(2,q)); the construction needs this > 0."""
    rq2 = max(0.5, t.q.reciprocal)
    return 0.5 + t.r.reciprocal - t.p.reciprocal - rq2


def hadamard_witness(
    t: ExponentTriple,
    C: float,
    *,
    n_exh: int = DEFAULT_N_EXH,
    threads: int = 1,
) -> WitnessReport:
    """Construct the orthogonal +-1 family defeating the constant C.

    Picks the minimal n >= 1 with n(1+1/r) > log2(C) + n(1/p + 1/2 + 1/q''),
    all comparisons in log2 space with margin EPS_CMP.  The family is the set
    of rows of ``sylvester(n)`` used both as multipliers and as summands; it
    is materialized (and, when 2^n is within the exhaustive cap, its exact
    quotient computed) only at desk scale.
    """
    if not t.holder_valid:
        raise ValueError(f"triple {t} is not valid: 1/r > 1/p + 1/q")
    if not C > 0:
        raise ValueError("C must be positive")
    gap = second_clause_gap(t)
    if gap <= EPS_CMP:
        raise ValueError(
            "second-clause condition not satisfied: needs 1/2 + 1/r > 1/p + 1/min(2,q)"
        )
    rq2 = max(0.5, t.q.reciprocal)
    num_slope = 1.0 + t.r.reciprocal
    den_slope = t.p.reciprocal + 0.5 + rq2
    log2C = math.log2(C)
    n = None
    for cand in range(1, WITNESS_MAX_LOG + 1):
        if cand * num_slope - (log2C + cand * den_slope) > EPS_CMP:
            n = cand
            break
    if n is None:
        raise ValueError("C too large for desk scale")

    log2_num = n * num_slope
    log2_den = n * den_slope
    family = None
    exq = None
    if n <= MATERIALIZE_MAX_LOG:
        H = sylvester(n)
        wide = H.entries.astype(np.int64)
        prod = (wide * wide).sum(axis=0)
        if not np.all(prod == 1 << n):
            raise InternalInconsistencyError(
                "product of the constructed family is not the constant vector 2^n"
            )
        family = H.rows_family()
        if (1 << n) <= n_exh:
            exq = unconditionality_quotient(
                family, family, t, "exhaustive", n_exh=n_exh, threads=threads
            ).quotient
    return WitnessReport(
        triple=t,
        C=float(C),
        n=n,
        family_size=1 << n,
        log2_numerator=log2_num,
        log2_denominator_bound=log2_den,
        certified_ratio_log2=log2_num - log2_den,
        exhaustive_quotient=exq,
        minimality_checked=True,
        family=family,
    )


class TailWitness(NamedTuple):
    N: int
    partial_r_norm: float
    tail_q_bound: float


def divergent_tail_norm(r: ExponentLike, N: int) -> float:
    """||(x(1),...,x(N))||_r for x(n) = n^(-1/r): the harmonic sum to the 1/r."""
    r = Exponent.of(r)
    if r.is_infinite:
        raise ValueError("r must be finite")
    s = 0.0
    for k in range(1, N + 1):
        s += 1.0 / k
    return s ** (1.0 / r.value)


def tail_q_bound(q: ExponentLike, r: ExponentLike, N: int) -> float:
    """||(x(n))_{n>N}||_q for x(n) = n^(-1/r); finite exactly because q > r."""
    q = Exponent.of(q)
    r = Exponent.of(r)
    if r.is_infinite or not r < q:
        raise ValueError("requires r < q")
    if q.is_infinite:
        return float(N + 1) ** (-r.reciprocal)
    s = q.value / r.value
    return float(zeta(s, N + 1)) ** (1.0 / q.value)


def tail_witness(q: ExponentLike, r: ExponentLike, B: float) -> TailWitness:
    """Locate where the partial lr norms of x(n) = n^(-1/r) pass B.

    Returns the smallest N with sum_{n<=N} 1/n >= B^r (equivalently, partial
    lr norm >= B in harmonic-sum space), the partial norm attained there, and
    the lq norm of the remaining tail, which certifies that the full series
    is unconditionally Cauchy in lq.
    """
    q = Exponent.of(q)
    r = Exponent.of(r)
    if r.is_infinite:
        raise ValueError("r must be finite")
    if not r < q:
        raise ValueError(f"requires r < q, got r={r}, q={q}")
    if not B > 0:
        raise ValueError("B must be positive")
    target = float(B) ** r.value
    s = 0.0
    N = 0
    while s < target:
        N += 1
        if N > TAIL_MAX_TERMS:
            raise ValueError("B too large for desk scale")
        s += 1.0 / N
    return TailWitness(N, s ** (1.0 / r.value), tail_q_bound(q, r, N))
