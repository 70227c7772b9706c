"""Coordinatewise multiplication between lp spaces, gated by the exponent condition.

The product map lp x lq -> lr is well-defined and continuous exactly when
1/r <= 1/p + 1/q, in which case ||ax||_r <= ||a||_p ||x||_q.  Triples failing
the condition are rejected at action construction; the decision engine treats
them separately as NotApplicable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .seqspace import EPS_NUM, ExponentTriple, FinSeq, norm


def multiply(a: FinSeq, x: FinSeq) -> FinSeq:
    """The coordinatewise product (a_k * x_k)_k of two equal-length vectors."""
    if a.ambient_len != x.ambient_len:
        raise ValueError(
            f"ambient length mismatch: {a.ambient_len} vs {x.ambient_len}"
        )
    return FinSeq(a.entries * x.entries)


def holder_bound_check(a: FinSeq, x: FinSeq, t: ExponentTriple) -> bool:
    """Whether ||ax||_r <= ||a||_p ||x||_q holds, with relative slack EPS_NUM.

    True for every input when the triple is valid; this is checked by tests
    rather than assumed.
    """
    if not t.holder_valid:
        raise ValueError(f"triple {t} is not valid: 1/r > 1/p + 1/q")
    prod = multiply(a, x)
    return norm(prod, t.r) <= norm(a, t.p) * norm(x, t.q) * (1.0 + EPS_NUM)


@dataclass(frozen=True)
class MultiplicationAction:
    """The coordinatewise-multiplication action for one validated exponent triple."""

    triple: ExponentTriple

    def __post_init__(self):
        if not self.triple.holder_valid:
            raise ValueError(
                f"triple {self.triple} is not valid: 1/r > 1/p + 1/q"
            )

    def multiply(self, a: FinSeq, x: FinSeq) -> FinSeq:
        return multiply(a, x)

    def bound_check(self, a: FinSeq, x: FinSeq) -> bool:
        return holder_bound_check(a, x, self.triple)
