import numpy as np
import pytest

import specrad as sr
from specrad import bounds
from helpers import cyclic_matrix, random_sparse


def test_lower_sequence_cyclic_stays_zero():
    assert sr.lower_sequence(cyclic_matrix(), 5) == [0.0] * 6


def test_lower_sequence_symmetric_is_constant():
    rng = np.random.default_rng(11)
    sym = sr.NonnegMatrix(sr.arithmetic_symmetrization(random_sparse(rng, 7)).entries)
    r = max(sr.jacobi_eigenvalues(sr.SymmetricNonnegMatrix.from_matrix(sym)))
    for value in sr.lower_sequence(sym, 4):
        assert value == pytest.approx(r, rel=1e-9)


def test_lower_sequence_positive_matrix_converges_to_oracle():
    rng = np.random.default_rng(12)
    a = sr.make_matrix(rng.uniform(0.05, 1.0, (8, 8)))
    rho = sr.lower_sequence(a, 6)
    assert all(b >= a_ - 1e-9 * max(1.0, a_) for a_, b in zip(rho, rho[1:]))
    assert rho[-1] == pytest.approx(sr.gelfand_radius(a).value, abs=1e-6)


def test_upper_sequence_cyclic_is_one():
    sigma = sr.upper_sequence(cyclic_matrix(), 4)
    assert len(sigma) == 5
    for value in sigma:
        assert value == pytest.approx(1.0, abs=1e-9)


def test_upper_sequence_cyclic_matches_jacobi_per_level():
    # reference: Jacobi top eigenvalue of M(A^(2^k)) at every ladder level
    level = sr.to_scaled(cyclic_matrix())
    sigma = sr.upper_sequence(cyclic_matrix(), 3)
    for k in range(4):
        if k > 0:
            level = sr.scaled_square(level)
        top = max(sr.jacobi_eigenvalues(sr.arithmetic_symmetrization(level.base)))
        assert sigma[k] == pytest.approx(top ** (0.5**k), rel=1e-11)


def test_upper_sequence_truncated_shift_head():
    sigma = sr.upper_sequence(sr.build_shift(sr.ShiftSpec(1, 200)), 1)
    assert sigma[0] == pytest.approx(2.5, abs=1e-2)
    assert sigma[1] == pytest.approx(2.0, abs=1e-2)


def test_sequences_report_failing_level(monkeypatch):
    a = random_sparse(np.random.default_rng(13), 6)
    monkeypatch.setattr(bounds, "DEFAULT_MAX_ITER", 1)
    with pytest.raises(sr.NoConvergenceError) as exc:
        sr.lower_sequence(a, 2)
    assert exc.value.level == 0


def test_sandwich_identity_converges_at_level_zero():
    report = sr.sandwich(sr.make_matrix(np.eye(3)), 10)
    assert report.converged and report.k_max == 0
    assert report.final_interval == (1.0, 1.0)
    assert report.per_level_log_scale == [0.0]


def test_sandwich_cyclic_does_not_converge():
    report = sr.sandwich(cyclic_matrix(), 6, 1e-6)
    assert not report.converged
    assert report.rho == [0.0] * 7
    assert report.final_interval[0] == 0.0
    assert report.final_interval[1] == pytest.approx(1.0, abs=1e-9)


def test_sandwich_positive_matrix_converges_and_contains_oracle():
    rng = np.random.default_rng(14)
    a = sr.make_matrix(rng.uniform(0.1, 1.0, (10, 10)))
    report = sr.sandwich(a, 30, 1e-6)
    assert report.converged
    lo, hi = report.final_interval
    g = sr.gelfand_radius(a).value
    assert lo - 1e-8 <= g <= hi + 1e-8


def test_sandwich_zero_matrix():
    report = sr.sandwich(sr.make_matrix(np.zeros((2, 2))), 4)
    assert report.converged and report.final_interval == (0.0, 0.0)


def test_sandwich_stops_at_nilpotent_collapse():
    # A^2 vanishes exactly, so only level 0 is informative
    report = sr.sandwich(sr.make_matrix([[0.0, 1.0], [0.0, 0.0]]), 5)
    assert report.k_max == 0
    assert not report.converged
    assert report.final_interval == (0.0, 0.5)


def test_sequences_keep_exact_zeros_past_collapse():
    sigma = sr.upper_sequence(sr.make_matrix([[0.0, 1.0], [0.0, 0.0]]), 2)
    assert sigma == [0.5, 0.0, 0.0]


def test_sandwich_rejects_bad_tolerances():
    with pytest.raises(sr.InvalidToleranceError):
        sr.sandwich(cyclic_matrix(), 3, 0.0)
    with pytest.raises(sr.InvalidToleranceError):
        sr.sandwich(cyclic_matrix(), 3, 1e-8, -1.0)
    with pytest.raises(ValueError):
        sr.sandwich(cyclic_matrix(), -1)


def test_report_is_consistent_with_sequences():
    rng = np.random.default_rng(15)
    a = random_sparse(rng, 9)
    report = sr.sandwich(a, 4, 1e-300)  # gap tolerance too small to stop early
    assert report.rho == pytest.approx(sr.lower_sequence(a, report.k_max), rel=1e-12)
    assert report.sigma == pytest.approx(sr.upper_sequence(a, report.k_max), rel=1e-12)
