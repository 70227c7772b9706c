import numpy as np
import pytest

from uncond.classifier import (
    Classification,
    Clause,
    GRID_CSV_HEADER,
    Verdict,
    classify,
    cross_validate,
    grid_to_csv,
    region_grid,
)
from uncond.seqspace import INF, Exponent, ExponentTriple


def T(p, q, r):
    return ExponentTriple.of(p, q, r)


class TestDecisionTable:
    @pytest.mark.parametrize(
        "triple, verdict, clause",
        [
            ((2, 2, 2), Verdict.PRESERVES, Clause.SMALL_P_NESTED_Q),
            ((1, 1, "inf"), Verdict.PRESERVES, Clause.R_INFINITE),
            (("inf", 2, 1), Verdict.NOT_PRESERVES, Clause.R_BELOW_Q),
            ((3, 2, 2), Verdict.NOT_PRESERVES, Clause.STRICT_GAP),
            ((3, 3, 3), Verdict.UNKNOWN, Clause.OPEN),
            ((3, 3, 1), Verdict.NOT_APPLICABLE, Clause.HOLDER_INVALID),
        ],
    )
    def test_table(self, triple, verdict, clause):
        c = classify(T(*triple))
        assert c.verdict is verdict
        assert c.clause is clause

    def test_strict_clause_arithmetic(self):
        # (3,2,2): valid since 1/2 <= 1/3 + 1/2, and 1/2 + 1/2 > 1/3 + 1/2
        t = T(3, 2, 2)
        assert t.holder_valid
        assert 0.5 + 0.5 > 1 / 3 + 0.5

    def test_r_below_q_with_valid_triple(self):
        c = classify(T(2, 3, 2))
        assert c.verdict is Verdict.NOT_PRESERVES
        assert c.clause is Clause.R_BELOW_Q

    def test_sup_output_always_preserves(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            p = Exponent(float(rng.uniform(1, 8))) if rng.integers(2) else INF
            q = Exponent(float(rng.uniform(1, 8))) if rng.integers(2) else INF
            c = classify(ExponentTriple(p, q, INF))
            assert c.verdict is Verdict.PRESERVES
            assert c.clause is Clause.R_INFINITE

    def test_margin_examples(self):
        # (2,2,2) sits on the p = 2 and q = r planes
        assert classify(T(2, 2, 2)).margin == 0.0
        # (3,3,3) distances: holder 1/3, p-plane 1/6, q=r 0 -> 0
        assert classify(T(3, 3, 3)).margin == 0.0
        c = classify(T(3, 2, 4))
        assert c.margin > 0.0

    def test_no_inconsistency_on_lattice(self):
        values = [Exponent(v) for v in (1.0, 1.25, 1.5, 2.0, 2.5, 3.0, 4.0, 8.0, 64.0)]
        values.append(INF)
        count = 0
        for p in values:
            for q in values:
                for r in values:
                    c = classify(ExponentTriple(p, q, r))  # must never raise
                    assert isinstance(c, Classification)
                    count += 1
        assert count == 1000

    def test_r_ladder_monotone_for_small_p(self):
        order = {
            Verdict.NOT_APPLICABLE: 0,
            Verdict.NOT_PRESERVES: 1,
            Verdict.UNKNOWN: 2,
            Verdict.PRESERVES: 3,
        }
        ladder = [Exponent(v) for v in (1.0, 1.2, 1.5, 2.0, 3.0, 5.0, 16.0)] + [INF]
        for p in (1.0, 1.5, 2.0):
            for q in (1.0, 2.0, 3.0, 6.0):
                ranks = [
                    order[classify(ExponentTriple(Exponent(p), Exponent(q), r)).verdict]
                    for r in ladder
                ]
                assert ranks == sorted(ranks)


class TestRegionGrid:
    def test_four_by_four_at_r2(self):
        rows = region_grid(2, (1, 4), (1, 4), 1.0)
        assert len(rows) == 25  # 16 lattice points plus the inf samples
        by_pq = {
            (c.triple.p.token(), c.triple.q.token()): c for c in rows
        }
        assert by_pq[("1.0", "1.0")].verdict is Verdict.PRESERVES
        assert by_pq[("2.0", "2.0")].verdict is Verdict.PRESERVES
        assert by_pq[("3.0", "2.0")].verdict is Verdict.NOT_PRESERVES
        # r < q fires at (3, 3): 2 < 3 while the triple is still valid
        assert by_pq[("3.0", "3.0")].verdict is Verdict.NOT_PRESERVES
        assert by_pq[("3.0", "3.0")].clause is Clause.R_BELOW_Q
        assert by_pq[("inf", "inf")].verdict is Verdict.NOT_PRESERVES

    def test_sup_r_grid_all_preserve(self):
        rows = region_grid("inf", (1, 4), (1, 4), 0.5)
        assert rows
        for c in rows:
            assert c.verdict is Verdict.PRESERVES

    def test_empty_range(self):
        assert region_grid(2, (3, 2), (1, 4), 1.0) == []

    def test_range_validation(self):
        with pytest.raises(ValueError):
            region_grid(2, (0.5, 4), (1, 4), 1.0)
        with pytest.raises(ValueError):
            region_grid(2, (1, 65), (1, 4), 1.0)
        with pytest.raises(ValueError):
            region_grid(2, (1, 4), (1, 4), 0.0)

    def test_threads_match_serial(self):
        serial = region_grid(2, (1, 8), (1, 8), 0.5)
        threaded = region_grid(2, (1, 8), (1, 8), 0.5, threads=4)
        assert serial == threaded

    def test_csv_format(self):
        rows = region_grid(2, (1, 2), (1, 2), 1.0)
        text = grid_to_csv(rows)
        lines = text.strip().split("\n")
        assert lines[0] == GRID_CSV_HEADER == "p,q,r,verdict,clause,margin"
        assert len(lines) == len(rows) + 1
        assert any(",inf," in line or line.startswith("inf,") for line in lines[1:])
        # every line parses into six fields
        assert all(len(line.split(",")) == 6 for line in lines)


class TestCrossValidate:
    def test_strict_branch(self):
        cv = cross_validate(T("inf", 2, 2), budget=10, seed=0, n=2, dim=2)
        assert cv.classification.clause is Clause.STRICT_GAP
        kinds = [(c.kind, c.parameter) for c in cv.checks]
        assert kinds == [("hadamard", 1.0), ("hadamard", 10.0), ("hadamard", 100.0)]
        assert [c.detail["n"] for c in cv.checks] == [1, 7, 14]
        assert all(c.ok for c in cv.checks)
        assert cv.best_quotient is None

    def test_tail_branch(self):
        cv = cross_validate(T("inf", 2, 1), budget=10, seed=0)
        assert cv.classification.clause is Clause.R_BELOW_Q
        assert [(c.kind, c.parameter) for c in cv.checks] == [("tail", 2.0), ("tail", 5.0)]
        assert cv.checks[1].detail["N"] == 83

    def test_tail_branch_with_sup_q(self):
        cv = cross_validate(T(1, "inf", 2), budget=10, seed=0)
        assert cv.classification.clause is Clause.R_BELOW_Q
        assert all(c.ok for c in cv.checks)

    def test_preserves_branch_bounded(self):
        cv = cross_validate(T(2, 2, 2), budget=30, seed=1, n=3, dim=3)
        assert cv.classification.verdict is Verdict.PRESERVES
        assert cv.best_quotient is not None
        assert cv.best_quotient <= 2 * 1.8 + 1e-9

    def test_unknown_branch_reports_evidence_only(self):
        cv = cross_validate(T(3, 3, 3), budget=20, seed=2, n=2, dim=2)
        assert cv.classification.verdict is Verdict.UNKNOWN
        assert cv.best_quotient is not None
        assert cv.checks[0].kind == "search"

    def test_rejects_invalid_triple(self):
        with pytest.raises(ValueError, match="not valid"):
            cross_validate(T(3, 3, 1), budget=5, seed=0)

    def test_every_not_preserves_verdict_backed_by_witness(self):
        values = [1.0, 1.5, 2.0, 3.0, 6.0]
        exps = [Exponent(v) for v in values] + [INF]
        for p in exps:
            for q in exps:
                for r in exps:
                    t = ExponentTriple(p, q, r)
                    c = classify(t)
                    if c.verdict is Verdict.NOT_PRESERVES:
                        cv = cross_validate(t, budget=4, seed=0, n=2, dim=2)
                        assert all(chk.ok for chk in cv.checks)

    def test_json_shape(self):
        cv = cross_validate(T("inf", 2, 2), budget=5, seed=0, n=2, dim=2)
        out = cv.to_json()
        assert out["classification"]["verdict"] == "NotPreserves"
        assert len(out["checks"]) == 3
