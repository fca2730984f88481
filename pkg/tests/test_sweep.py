"""Instance generation and campaign plumbing."""
from fractions import Fraction

import pytest

from rootsep import ExactPoly, ValidationError
from rootsep.sweep import SweepParams, generate_instance, run_instance, run_sweep


class TestGenerate:
    def test_byte_for_byte_determinism(self):
        params = SweepParams(count=1)
        for idx in range(20):
            p1, g1, m1 = generate_instance(42, idx, params)
            p2, g2, m2 = generate_instance(42, idx, params)
            assert p1 == p2 and g1 == g2 and m1 == m2

    def test_seed_changes_instance(self):
        params = SweepParams(count=1)
        outcomes = {generate_instance(s, 0, params)[0] for s in range(8)}
        assert len(outcomes) > 1

    def test_square_free_when_mult_one(self):
        params = SweepParams(count=1, max_multiplicity=1)
        from rootsep.poly import square_free_decomposition

        for idx in range(15):
            p, _, meta = generate_instance(9, idx, params)
            decomposition = square_free_decomposition(p)
            assert all(m == 1 for _, m in decomposition)

    def test_degree_cap(self):
        params = SweepParams(count=1, max_degree=6)
        for idx in range(25):
            p, _, _ = generate_instance(3, idx, params)
            assert p.degree <= 6

    def test_force_cluster_distance(self):
        eps = Fraction(1, 10**4)
        params = SweepParams(count=1, force_cluster=eps)
        for idx in range(10):
            p, _, meta = generate_instance(5, idx, params)
            if meta["distinct"] >= 2:
                # the two constructed roots sit at distance exactly eps (or eps/2)
                from rootsep import find_roots

                roots = find_roots(p, 128)
                dmin = min(
                    roots.distance(i, j).mid
                    for j in range(roots.r)
                    for i in range(j)
                )
                assert dmin <= float(eps)


class TestRunInstance:
    def test_record_fields(self):
        params = SweepParams(count=1)
        rec = run_instance(42, 0, params)
        assert rec["verdict_final"] in ("holds", "inconclusive")
        assert not rec["violated"]
        assert rec["certificate_rel_discrepancy"] is None or rec["certificate_rel_discrepancy"] <= 1e-10

    def test_params_validation(self):
        with pytest.raises(ValidationError):
            SweepParams(count=0).validate()
        with pytest.raises(ValidationError):
            SweepParams(precision_bits=100).validate()
        with pytest.raises(ValidationError):
            SweepParams(graph_kinds=("ring",)).validate()


class TestRunSweep:
    def test_summary_and_determinism(self):
        params = SweepParams(count=12)
        s1 = run_sweep(11, params)
        s2 = run_sweep(11, params)
        assert s1 == s2
        assert s1["violations"] == 0
        assert len(s1["instances"]) == 12

    def test_parallel_matches_sequential(self):
        params = SweepParams(count=8)
        assert run_sweep(13, params, jobs=2) == run_sweep(13, params, jobs=1)
