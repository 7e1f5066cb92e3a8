"""Smoke tests for the python bindings.

Locates the compiled extension either from an installed `ptomo` package
or from the build tree via the PTOMO_EXT_DIR environment variable.
"""

import os
import sys
from fractions import Fraction

import numpy as np
import pytest

ext_dir = os.environ.get("PTOMO_EXT_DIR")
if ext_dir:
    sys.path.insert(0, ext_dir)
    import _core as ptomo
else:
    ptomo = pytest.importorskip("ptomo")


def test_distance_measures_on_pure_states():
    u = np.zeros((3, 3), dtype=complex)
    u[0, 0] = 1.0
    v = np.zeros((3, 3), dtype=complex)
    v[1, 1] = 1.0
    assert ptomo.trace_distance(u, v) == pytest.approx(1.0)
    assert ptomo.fidelity(u, v) == pytest.approx(0.0, abs=1e-9)
    assert ptomo.bures_distance(u, v) == pytest.approx(np.sqrt(2.0))
    assert ptomo.affinity(u, u) == pytest.approx(1.0)


def test_haar_unitary_is_seeded_and_unitary():
    a = ptomo.haar_unitary(4, seed=7)
    b = ptomo.haar_unitary(4, seed=7)
    c = ptomo.haar_unitary(4, seed=8)
    assert np.allclose(a, b)
    assert not np.allclose(a, c)
    assert np.allclose(a.conj().T @ a, np.eye(4), atol=1e-10)


def test_jordan_overlaps():
    p = np.diag([1.0, 0.0]).astype(complex)
    plus = np.full((2, 2), 0.5, dtype=complex)
    omegas = ptomo.jordan_overlaps(p, plus)
    assert len(omegas) == 1
    assert omegas[0] == pytest.approx(1.0 / np.sqrt(2.0))
    td, fid, aff = ptomo.jordan_metrics(p, plus)
    assert td == pytest.approx(np.sqrt(0.5))
    assert fid == pytest.approx(1.0 / np.sqrt(2.0))
    assert aff == pytest.approx(0.5)


def test_exact_combinatorics():
    assert ptomo.num_ssyt([2, 1], 3) == 8
    assert ptomo.num_syt([2, 1]) == 2
    assert ptomo.hook_length([4, 3, 2], 2, 1) == 4
    assert ptomo.cell_content(2, 1) == -1
    assert ptomo.pieri_expand([2, 1], 2) == [[3, 1], [2, 2]]
    assert ptomo.schur_eval([2, 1], [1, 1, 1]) == Fraction(8)
    assert ptomo.haar_irrep_scalar([2, 1], 2, 3) == Fraction(1, 4)
    assert not ptomo.lr_admissible([1], [1, 1], [3], 3)


def test_wss_distribution_exact():
    table = dict()
    for parts, prob in ptomo.wss_distribution(2, 2, 2):
        table[tuple(parts)] = prob
    assert table == {(2,): Fraction(3, 4), (1, 1): Fraction(1, 4)}
    samples = ptomo.wss_sample(2, 2, 2, seed=3, count=200)
    assert all(tuple(s) in table for s in samples)
    assert ptomo.wss_sample(2, 2, 2, seed=3, count=200) == samples


def test_bounds_and_thresholds():
    assert ptomo.pure_moment_bound(10, 4, 1) == Fraction(11, 14)
    assert ptomo.pure_threshold(64, Fraction(1, 8)) == Fraction(64)
    assert ptomo.projector_threshold(4, 2, "0.0125") == Fraction(400)
    assert ptomo.choose_k(Fraction(1, 8)) == 4
    assert ptomo.sym_dimension(2, 2) == 3


def test_pgm_expected_affinity():
    assert ptomo.pgm_expected_affinity(1, 2, 1) == Fraction(2, 3)
    assert ptomo.pgm_expected_affinity(5, 3, 3) == Fraction(1)
    value, bound, ok = ptomo.pgm_affinity_bound_check(12, 3, 2)
    assert ok and value >= bound
    with pytest.raises(ptomo.CapacityError):
        ptomo.pgm_expected_affinity(500, 3, 2)


def test_hayashi_overlaps():
    overlaps = ptomo.hayashi_overlaps(10, 4, samples=20000, seed=11)
    mean = float(np.mean(overlaps))
    se = float(np.std(overlaps) / np.sqrt(len(overlaps)))
    assert abs(mean - 11.0 / 14.0) <= 4 * se


def test_bootstrap_trial():
    out = ptomo.bootstrap_trial(24, 8, 0.1, 0.3, "adversarial", seed=5)
    assert out["tr_r_rho"] >= 0.96
    assert out["rank_r"] <= 16
    assert np.isfinite(out["final_bures_error"])
