import math

import numpy as np
import pytest

from helios.errors import DomainError
from helios.harmonics import CoefficientSpectrum
from helios.lab import DecayProfile, make_real_perturbation
from helios.obstacle import (
    BoundaryPerturbation,
    default_cutoff,
    forward_hard,
    forward_soft,
    incident_trace,
    inversion_gain_soft,
    invert_hard,
    invert_soft,
)

# mpmath (40 digits), frozen: |a_00| for a unit d_00 at k = 4, R = 1
SOFT_GAIN_K4 = 5.1675465702316842   # sqrt(17 pi / 2)
HARD_GAIN_K4 = 1.1795897762969414   # 16 / (17 sqrt(2/pi))


def unit_monopole(max_degree=0):
    return BoundaryPerturbation(CoefficientSpectrum(max_degree, {(0, 0): 1.0}))


def test_incident_soft_trace():
    wave = incident_trace("soft", 4.0, 1.0)
    assert wave.trace_value == 1.0
    assert wave.trace_radial_derivative == pytest.approx(4.0j - 1.0)


def test_incident_hard_trace():
    wave = incident_trace("hard", 4.0, 1.0)
    assert wave.trace_radial_derivative == 1.0
    assert wave.trace_value == pytest.approx(1.0 / (4.0j - 1.0))


def test_incident_rejects():
    with pytest.raises(DomainError):
        incident_trace("mixed", 4.0, 1.0)
    with pytest.raises(DomainError):
        incident_trace("soft", -1.0, 1.0)


def test_default_cutoff():
    assert default_cutoff(4.0, 1.0) == 2
    assert default_cutoff(50.0, 1.0) == 7
    assert default_cutoff(2.0, 1.0) == 1


def test_forward_soft_monopole_magnitude():
    out = forward_soft(unit_monopole(), 4.0, 1.0)
    assert abs(out[0, 0]) == pytest.approx(SOFT_GAIN_K4, rel=1e-12)


def test_forward_hard_monopole_magnitude():
    out = forward_hard(unit_monopole(), 4.0, 1.0)
    assert abs(out[0, 0]) == pytest.approx(HARD_GAIN_K4, rel=1e-12)


def test_forward_linearity():
    d = make_real_perturbation(DecayProfile("exponential", 0.8, 6, seed=3))
    scaled = BoundaryPerturbation(d.spectrum.scaled(2.0))
    a = forward_soft(d, 5.0, 1.0)
    b = forward_soft(scaled, 5.0, 1.0)
    for key, v in a.items():
        assert b[key] == pytest.approx(2.0 * v, rel=1e-14)


@pytest.mark.parametrize("kind", ["soft", "hard"])
@pytest.mark.parametrize("kR", [2.0, 4.0, 10.0, 50.0])
def test_round_trip(kind, kR):
    d = make_real_perturbation(DecayProfile("algebraic", 1.2, 30, seed=17))
    forward = forward_soft if kind == "soft" else forward_hard
    invert = invert_soft if kind == "soft" else invert_hard
    amplitude = forward(d, kR, 1.0)
    recovered = invert(amplitude, kR, 1.0, n_cut=30)
    worst = max(abs(recovered.spectrum[key] - v) for key, v in d.spectrum.items())
    assert worst <= 1e-9


def test_invert_truncates_at_cutoff():
    d = make_real_perturbation(DecayProfile("exponential", 0.5, 10, seed=1))
    amplitude = forward_soft(d, 4.0, 1.0)
    recovered = invert_soft(amplitude, 4.0, 1.0)  # default cutoff = 2
    for (n, m), v in recovered.spectrum.items():
        if n > 2:
            assert v == 0.0
    assert recovered.spectrum[2, 1] == pytest.approx(d.spectrum[2, 1], rel=1e-12)


def test_conjugate_symmetry_preserved():
    d = make_real_perturbation(DecayProfile("exponential", 0.7, 8, seed=9))
    assert d.conjugate_symmetry_residual() <= 1e-15
    recovered = invert_soft(forward_soft(d, 6.0, 1.0), 6.0, 1.0, n_cut=8)
    assert recovered.conjugate_symmetry_residual() <= 1e-12


def test_synthesized_perturbation_is_real():
    d = make_real_perturbation(DecayProfile("algebraic", 1.0, 6, seed=4))
    assert d.imaginary_residual() <= 1e-12


def test_inversion_gain_grows_past_kr():
    gain = inversion_gain_soft(4.0, 1.0, 20)
    assert np.all(np.diff(gain[4:]) > 0)


def test_inversion_gain_monopole_value():
    gain = inversion_gain_soft(4.0, 1.0, 0)
    # k * |H_0(k)| = k * sqrt(2/pi)/k = sqrt(2/pi)
    assert gain[0] == pytest.approx(math.sqrt(2.0 / math.pi), rel=1e-12)
