"""Spectrum enumeration, counting function, and the Courant-sharp filters."""

import math

import pytest
from scipy import special

from squarenodal import spectrum


def brute_force_multiplicity(v: int) -> int:
    top = int(math.isqrt(v))
    return sum(
        1
        for m in range(1, top + 1)
        for n in range(1, top + 1)
        if m * m + n * n == v
    )


def test_enumeration_head():
    entries = spectrum.enumerate_spectrum(8)
    assert [(e.k, e.eigenvalue) for e in entries] == [(1, 2), (2, 5), (3, 5), (4, 8)]
    assert entries[0].modes == (spectrum.Mode(1, 1),)
    assert entries[1].modes == (spectrum.Mode(1, 2),)
    assert entries[1].modes == entries[2].modes


def test_enumeration_through_73():
    entries = spectrum.enumerate_spectrum(73)
    assert len(entries) == 50
    assert entries[-2].eigenvalue == 73 and entries[-1].eigenvalue == 73
    # the eigenvalue 65 carries two distinct unordered pairs
    cluster65 = [e for e in entries if e.eigenvalue == 65]
    assert len(cluster65) == 4
    assert cluster65[0].modes == (spectrum.Mode(1, 8), spectrum.Mode(4, 7))


def test_smallest_window():
    entries = spectrum.enumerate_spectrum(2)
    assert len(entries) == 1
    assert entries[0] == spectrum.SpectrumEntry(1, 2, (spectrum.Mode(1, 1),))
    with pytest.raises(ValueError):
        spectrum.enumerate_spectrum(1.5)


def test_multiplicity_matches_brute_force():
    for entry in spectrum.enumerate_spectrum(100):
        assert entry.multiplicity == brute_force_multiplicity(entry.eigenvalue)


def test_counting_function_examples():
    assert spectrum.counting_function(2) == 0
    assert spectrum.counting_function(5) == 1
    assert spectrum.counting_function(10) == 4


def test_counting_function_consistency():
    entries = spectrum.enumerate_spectrum(73)
    for e in entries:
        cluster_start = min(x.k for x in entries if x.eigenvalue == e.eigenvalue)
        assert spectrum.counting_function(e.eigenvalue) == cluster_start - 1


def test_pleijel_lower_bound_values():
    assert spectrum.pleijel_lower_bound(0) == -1.0
    expected = 0.25 * math.pi * 68 - 2.0 * math.sqrt(68) - 1.0
    assert spectrum.pleijel_lower_bound(68) == pytest.approx(expected, abs=1e-12)
    assert spectrum.pleijel_lower_bound(68) == pytest.approx(35.9146526086, abs=1e-9)


def test_counting_beats_lower_bound_everywhere():
    for e in spectrum.enumerate_spectrum(73):
        assert spectrum.counting_function(e.eigenvalue) > spectrum.pleijel_lower_bound(
            e.eigenvalue
        )


def test_bessel_zero_against_scipy():
    j01 = spectrum.bessel_j0_first_zero()
    assert j01 == pytest.approx(special.jn_zeros(0, 1)[0], abs=1e-12)
    assert spectrum.faber_krahn_ratio() < 0.54323


def test_faber_krahn_examples():
    assert spectrum.faber_krahn_pass(5, 10)
    assert not spectrum.faber_krahn_pass(11, 18)
    assert spectrum.faber_krahn_pass(1, 2)


def test_candidates():
    assert spectrum.courant_sharp_candidates() == {1, 2, 4, 5, 7, 9}
    assert spectrum.courant_sharp_candidates(lambda_max=8) == {1, 2, 4}
    assert 3 not in spectrum.courant_sharp_candidates()


def test_candidate_bound_is_tight():
    bound = spectrum.candidate_eigenvalue_bound()
    assert 68 <= bound < 69


def test_audit_invariant():
    for audit in spectrum.courant_audit():
        if audit.candidate:
            assert audit.is_first_of_cluster
            assert audit.faber_krahn
            assert audit.eigenvalue <= 68


def test_first_index():
    assert spectrum.first_index_of_eigenvalue(2) == 1
    assert spectrum.first_index_of_eigenvalue(5) == 2
    assert spectrum.first_index_of_eigenvalue(10) == 5
    assert spectrum.first_index_of_eigenvalue(65) == 42
