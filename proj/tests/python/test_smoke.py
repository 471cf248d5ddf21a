import math

import pytest

import ptd


def test_ground_energy():
    assert ptd.energy(3, 0, 0, alpha=0.5) == pytest.approx(-0.23539450377412, rel=1e-12)
    assert ptd.energy(1, 0, 0, alpha=1.0) == pytest.approx(-0.5, rel=1e-13)


def test_principal_degeneracy():
    e = ptd.energy_principal(2, 3, alpha=0.1)
    assert ptd.energy(3, 0, 1, alpha=0.1) == pytest.approx(e, rel=1e-14)
    assert ptd.energy(3, 2, 0, alpha=0.1) == pytest.approx(e, rel=1e-14)


def test_unbound_raises():
    assert not ptd.is_bound(3, 0, 0, alpha=1.0)
    with pytest.raises(ptd.NoBoundStateError):
        ptd.energy(3, 0, 0, alpha=1.0)


def test_critical_alpha():
    assert ptd.critical_alpha(0, 3) == pytest.approx(1.0, rel=1e-13)
    assert ptd.critical_alpha(1, 3) == pytest.approx(0.5773502691896258, rel=1e-13)
    with pytest.raises(ptd.InapplicableError):
        ptd.critical_alpha(0, 1)


def test_count_bound_states():
    assert ptd.count_bound_states(3, 0, alpha=0.25) == 3
    assert ptd.count_bound_states(3, 0, alpha=1.0) == 0


def test_wavefunction_and_norm():
    assert ptd.norm_constant(3, 0, 0, alpha=0.5) == pytest.approx(1.5044558516484, rel=1e-11)
    values = ptd.radial_wavefunction(3, 0, 0, 0.5, [0.5, 1.0, 2.0, 5.0])
    assert len(values) == 4
    assert all(v > 0 for v in values)
    # Midpoint spot value, s = tanh^2(alpha r) = 0.5.
    r_half = math.atanh(math.sqrt(0.5)) / 0.5
    assert ptd.radial_wavefunction(3, 0, 0, 0.5, [r_half])[0] == pytest.approx(
        0.66117363856841, rel=1e-10
    )


def test_expectation_report():
    rep = ptd.expectation_report(3, 0, 0, alpha=0.5)
    assert rep["potential_hft"] == pytest.approx(-0.477767032132906, rel=1e-11)
    assert rep["kinetic"] + rep["potential_hft"] == pytest.approx(rep["energy"], rel=1e-12)
    planar = ptd.expectation_report(2, 0, 0, alpha=0.5)
    assert math.isnan(planar["inv_r2_hft"])
    assert planar["potential_hft"] < 0


def test_numerov_matches_closed_form():
    closed = ptd.energy(3, 0, 0, alpha=0.5)
    assert ptd.numerov_energy(3, 0, 0, alpha=0.5) == pytest.approx(closed, abs=1e-6)


def test_bad_arguments():
    with pytest.raises(ValueError):
        ptd.energy(0, 0, 0, alpha=0.5)
    with pytest.raises(ValueError):
        ptd.energy(3, 0, 0, alpha=-1.0)
