"""End-to-end smoke tests for the python bindings.

Runs the pi/3 two-vector fixture through the main operations and checks a few
hand-computable matrices. Not a numerics suite — that lives in the C++ tests.
"""

import math

import numpy as np
import pytest

import framekz as fk

RT3 = math.sqrt(3.0)


def angle_units():
    e0 = np.array([1.0, 0.0], dtype=complex)
    e1 = np.array([0.5, RT3 / 2], dtype=complex)
    return [e0, e1]


def test_auxiliary_sequence_fixture():
    gs = fk.auxiliary_sequence(angle_units())
    assert np.allclose(gs[0], [1.0, 0.0], atol=1e-14)
    assert np.allclose(gs[1], [0.0, RT3 / 2], atol=1e-14)


def test_inner_is_conjugate_linear_in_second_slot():
    u = np.array([1.0j, 0.0], dtype=complex)
    v = np.array([1.0, 0.0], dtype=complex)
    assert fk.inner(u, v) == 1.0j
    assert fk.inner(v, u) == -1.0j


def test_kaczmarz_trace():
    x = np.array([0.0, 1.0], dtype=complex)
    trace = fk.run_kaczmarz(x, angle_units())
    assert trace.residual_norms == pytest.approx([1.0, 0.5], abs=1e-14)
    assert trace.defect == pytest.approx(0.25, abs=1e-14)
    assert len(trace.iterates) == 2


def test_triangular_pair_and_identities():
    pair = fk.triangular_pair(angle_units())
    assert pair.u[1, 0] == pytest.approx(-0.5, abs=1e-14)
    assert fk.identity13_residual(pair) < 1e-12
    assert fk.trace_dimension(pair) == pytest.approx(1.75, abs=1e-14)


def test_synthesis_round_trip():
    es = angle_units()
    gs = fk.auxiliary_sequence(es)
    result = fk.synthesize_admissible(gs)
    assert result.unique
    assert result.method == fk.SynthesisMethod.admissible
    for got, want in zip(result.units, es):
        assert np.allclose(got, want, atol=1e-12)
    assert result.kernel_events[0].lambda_ == pytest.approx(0.5, abs=1e-14)

    tri = fk.synthesize_triangular(gs)
    back = fk.auxiliary_sequence(tri.units)
    for got, want in zip(back, gs):
        assert np.allclose(got, want, atol=1e-12)


def test_validation_error_raised():
    bad = [np.array([0.8, 0.0], dtype=complex)]
    with pytest.raises(fk.ValidationError):
        fk.auxiliary_sequence(bad)


def test_validate_bessel_reports_violations():
    g = np.array([1.0, 0.0], dtype=complex)
    v = fk.validate_bessel([g, g])
    assert not v.ok
    assert [w.name for w in v.violations] == ["g0_orthogonality", "gram_contraction"]


def test_tight_frame():
    gs = [
        np.array([1.0, 0.0], dtype=complex),
        np.array([0.0, 0.6], dtype=complex),
        np.array([0.0, 0.8], dtype=complex),
    ]
    assert fk.is_tight_frame(gs)
    assert not fk.is_tight_frame([gs[0], 0.5 * gs[1], 0.5 * gs[2]])


def test_stability_and_proposition2():
    es = angle_units()
    rep = fk.stability_report(es, fk.SequenceKind.units)
    assert rep.stable()
    assert rep.consecutive_overlaps == pytest.approx([0.5], abs=1e-14)
    assert fk.proposition2_check(es)


def test_cholesky_psd():
    ones = np.ones((3, 3), dtype=complex)
    f = fk.cholesky_psd(ones)
    assert f.rank == 1
    assert f.pivots.indices == [1]
    assert np.allclose(f.v @ f.v.conj().T, ones, atol=1e-14)

    with pytest.raises(fk.ValidationError):
        fk.cholesky_psd(np.array([[1.0, 2.0], [2.0, 1.0]], dtype=complex))


def test_tolerances_control_rank_decisions():
    b = np.diag([1.0, 1e-7]).astype(complex)
    assert fk.pivot_sequence(b).indices == [1, 2]
    loose = fk.Tolerances(eps_rank=1e-3)
    assert fk.pivot_sequence(b, loose).indices == [1]
    with pytest.raises(ValueError):
        fk.Tolerances(eps_unit=-1.0)
