"""Verification harness: report structure, target dispatch, and agreement
between the vectorized counters and the library's divisor counting.
"""

import pytest

from sumdiv import FiniteSet, PreconditionError, divisor_count
from sumdiv.verify import (
    CONJECTURE_TARGETS,
    THEOREM_TARGETS,
    _direct_divisor_count,
    _zero_rooted_divisor_count,
    run_target,
)


class TestCounters:
    def test_zero_rooted_matches_library(self):
        for mask in range(1, 1 << 8, 2):
            a = FiniteSet.from_mask(mask)
            assert _zero_rooted_divisor_count(mask) == divisor_count(a)

    def test_direct_matches_library(self):
        for mask in range(1, 1 << 8):
            a = FiniteSet.from_mask(mask)
            assert _direct_divisor_count(mask) == divisor_count(a)


class TestDispatch:
    def test_unknown_target(self):
        with pytest.raises(PreconditionError):
            run_target("nope")

    def test_unknown_parameter(self):
        with pytest.raises(PreconditionError):
            run_target("L15", workers=1, bogus=3)

    def test_all_targets_run_small(self):
        for name in THEOREM_TARGETS:
            r = run_target(name, workers=1, max_k=4)
            assert r.status == "pass"
            assert r.counterexamples == []
        for name in CONJECTURE_TARGETS:
            r = run_target(name, workers=1, max_k=5)
            assert r.status == "evidence-only"

    def test_report_sections(self):
        r = run_target("L15", workers=1, max_k=5)
        d = r.to_dict()
        assert set(d) == {"data", "meta"}
        assert "elapsed_seconds" in d["meta"]
        assert d["data"]["target"] == "L15"

    def test_crleven_records_documented_ties(self):
        r = run_target("crleven", workers=1, max_k=4)
        assert r.status == "pass"
        assert set(r.details["ties"]) == {1, 3}

    def test_worker_count_does_not_change_data(self):
        one = run_target("crlodd", workers=1, max_k=6, promotion_max_k=4)
        two = run_target("crlodd", workers=2, max_k=6, promotion_max_k=4)
        assert one.data_dict() == two.data_dict()

    def test_odd2_prediction_rows(self):
        r = run_target("odd2", workers=1, max_k=8)
        for row in r.details["rows"]:
            if row["covered_by_conjecture"]:
                assert row["predicted_hit"]
            else:
                assert row["k"] == 5
