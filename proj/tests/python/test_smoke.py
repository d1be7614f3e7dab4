"""End-to-end smoke tests for the python layer over the compiled core."""

import numpy as np
import pytest

import starsim


def test_generate_and_inspect():
    h = starsim.generate(16, d=3, seed=4, diagonal=True)
    assert h.n == 16
    assert h.d == 3
    assert 0 < h.edge_count <= 16 * 3 // 2
    assert "SparseHermitian" in repr(h)

    dense = h.to_dense()
    assert dense.shape == (16, 16)
    assert np.allclose(dense, dense.conj().T)

    norms = h.norms()
    assert norms["max_entry"] <= norms["max_column"] + 1e-12
    assert norms["max_column"] <= norms["spectral"] + 1e-12


def test_json_round_trip():
    h = starsim.generate(12, d=2, seed=9)
    text = h.to_json()
    assert starsim.matrix_from_json(text).to_json() == text


def test_file_round_trip(tmp_path):
    h = starsim.generate(10, d=2, seed=5, diagonal=True)
    path = tmp_path / "instance.json"
    h.save(str(path))
    assert starsim.load_matrix(str(path)).to_json() == h.to_json()


def test_combinatorial_helpers():
    assert starsim.rounds(16) == 3
    assert starsim.log_star(16) == 3
    assert starsim.unit_query_cost(16, 2) == 8


def test_decompose_report_passes():
    h = starsim.generate(32, d=4, seed=2)
    report = starsim.decompose(h)
    assert report["pass"] is True
    assert report["d"] == 4
    assert len(report["galaxies"]) == 24
    assert all(check["pass"] for check in report["checks"].values())


def test_simulate_tracks_the_dense_reference():
    h = starsim.generate(16, d=2, seed=7, diagonal=True)
    state, report = starsim.simulate(h, t=0.4, epsilon=1e-2, state_seed=3)
    reference = starsim.reference_state(h, t=0.4, state_seed=3)
    metrics = starsim.compare(state, reference)
    assert metrics["trace_distance"] <= 1e-2
    assert abs(np.linalg.norm(state) - 1.0) < 1e-9
    assert report["r"] >= 1
    assert report["circuit_cost"] > 0
    assert report["bounds"]["star_decomposition"] > 0


def test_simulate_accepts_an_explicit_state():
    h = starsim.generate(8, d=2, seed=1)
    e0 = np.zeros(8, dtype=complex)
    e0[0] = 1.0
    state, _ = starsim.simulate(h, t=0.3, epsilon=1e-2, state=e0)
    reference = starsim.reference_state(h, t=0.3, state=e0)
    assert starsim.compare(state, reference)["trace_distance"] <= 1e-2


def test_verify_report_passes():
    h = starsim.generate(12, d=2, seed=6, diagonal=True)
    report = starsim.verify(h, t=0.5, epsilon=1e-3)
    assert report["pass"] is True
    assert report["accuracy"]["trace_distance"] <= 1e-3


def test_invalid_requests_raise():
    with pytest.raises(ValueError):
        starsim.generate(1, d=1)
    with pytest.raises(ValueError):
        starsim.matrix_from_json("{")
    h = starsim.generate(8, d=2, seed=1)
    with pytest.raises(ValueError):
        starsim.simulate(h, t=-1.0)
    with pytest.raises(ValueError):
        starsim.simulate(h, norm="banana")
