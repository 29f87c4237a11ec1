import json
from fractions import Fraction

import pytest

from siegeltrace.sp4char import LocalSystem
from siegeltrace.trace2 import (CSV_COLUMNS, FormulaConsistencyError,
                                TraceReport, WeightPair, csv_row,
                                endoscopic_term, hecke_trace_genus2,
                                jacobian_locus_trace, product_locus_trace,
                                second_row, trace_ec_a2)

DIM0_WEIGHTS = ((6, 4), (7, 5), (8, 4), (8, 6), (9, 5), (10, 4))


def test_weight_validation():
    w = WeightPair(8, 6)
    assert (w.r1, w.r2) == (12, 4)
    assert w.local_system == LocalSystem(5, 3)
    for bad in [(7, 4), (6, 6), (4, 6), (8, 3), (5, 4), (9, 2)]:
        with pytest.raises(ValueError):
            WeightPair(*bad)


def test_companion_weights():
    w = WeightPair(14, 8)
    assert w.r1 == 20 and w.r2 == 8
    assert w.local_system == LocalSystem(11, 5)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_trivial_system_total_mass(p, bank):
    got = trace_ec_a2(LocalSystem(0, 0), bank.genus2(p), bank.elliptic(p),
                      bank.elliptic_ext(p))
    assert got == p ** 3 + p ** 2


@pytest.mark.parametrize("p", [3, 5, 7])
def test_product_locus_mass(p, bank):
    mass = product_locus_trace(LocalSystem(0, 0), bank.elliptic(p),
                               bank.elliptic_ext(p))
    assert mass == Fraction(p * p)


@pytest.mark.parametrize("p", [3, 5])
def test_odd_parity_vanishes_by_locus(p, bank):
    for (l, m) in ((1, 0), (2, 1), (4, 1), (5, 2)):
        sys = LocalSystem(l, m)
        assert jacobian_locus_trace(sys, bank.genus2(p)) == 0
        assert product_locus_trace(sys, bank.elliptic(p),
                                   bank.elliptic_ext(p)) == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_second_row_closed_forms(p, bank):
    ell = bank.elliptic(p)
    assert second_row(WeightPair(6, 4), p, ell) == 0
    assert second_row(WeightPair(7, 5), p, ell) == 1
    assert second_row(WeightPair(8, 6), p, ell) == -p ** 4


def test_endoscopic_term_values():
    assert endoscopic_term(WeightPair(17, 7), 3) == 61236
    # r2 = 8 has no cusp forms, so the term dies for these weights
    assert endoscopic_term(WeightPair(14, 8), 3) == 0
    assert endoscopic_term(WeightPair(8, 6), 5) == 0


@pytest.mark.parametrize("k1,k2", DIM0_WEIGHTS)
@pytest.mark.parametrize("p", [3, 5, 7])
def test_dim0_suite(k1, k2, p, bank):
    report = hecke_trace_genus2(WeightPair(k1, k2), p, bank)
    assert report.checks_passed
    assert report.hecke_trace == 0
    assert report.four_times_trace == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_divisibility_sweep(p, bank):
    weights = []
    for k2 in range(4, 12):
        k1 = k2 + 2
        while k1 + k2 <= 24:
            weights.append(WeightPair(k1, k2))
            k1 += 2
    assert len(weights) == 36
    for w in weights:
        report = hecke_trace_genus2(w, p, bank, strict=False)
        assert report.four_times_trace % 4 == 0, (w.k1, w.k2, p)
        assert report.checks_passed


SYM6_DET8_EIGENVALUES = {3: -27000, 5: 2843100, 7: -107822000}


@pytest.mark.parametrize("p", [3, 5, 7])
def test_sym6_det8_eigenvalues(p, bank):
    """The one-dimensional space at (14, 8): the assembled quantity
    before the factor-4 normalization lands exactly on the published
    eigenvalues of the unique eigenform."""
    report = hecke_trace_genus2(WeightPair(14, 8), p, bank)
    assert report.four_times_trace == SYM6_DET8_EIGENVALUES[p]
    assert report.hecke_trace == SYM6_DET8_EIGENVALUES[p] // 4
    # normalization 1 reports the eigenvalue itself
    raw = hecke_trace_genus2(WeightPair(14, 8), p, bank, normalization=1)
    assert raw.hecke_trace == SYM6_DET8_EIGENVALUES[p]


def test_report_fields_and_serialization(bank):
    report = hecke_trace_genus2(WeightPair(8, 6), 3, bank)
    assert isinstance(report, TraceReport)
    assert report.eisenstein_term == report.second_row + report.endoscopic_term
    assert report.four_times_trace == -report.trace_a2 + report.second_row
    assert report.jacobian_term + report.product_term == report.trace_a2
    payload = json.loads(report.to_json())
    assert payload["k1"] == 8 and payload["p"] == 3
    assert payload["heckeTrace"] == 0
    assert payload["checksPassed"] is True
    assert set(payload["provenance"]["census_checksums"]) == {
        "genus2-p3", "elliptic-p3", "elliptic-q9"}
    row = csv_row(report)
    assert len(row) == len(CSV_COLUMNS)
    assert row[:3] == (8, 6, 3)


def test_strict_divisibility_failure_raises(bank):
    # (14,8) at p=3 gives -27000, which 7 does not divide
    with pytest.raises(FormulaConsistencyError):
        hecke_trace_genus2(WeightPair(14, 8), 3, bank, normalization=7)
    report = hecke_trace_genus2(WeightPair(14, 8), 3, bank, normalization=7,
                                strict=False)
    assert not report.checks_passed
    assert report.hecke_trace is None
    assert csv_row(report)[7] == ""


def test_bad_normalization_rejected(bank):
    with pytest.raises(ValueError):
        hecke_trace_genus2(WeightPair(8, 6), 3, bank, normalization=0)
