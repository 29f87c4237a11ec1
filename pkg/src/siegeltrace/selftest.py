"""Invariant battery: every structural identity the pipeline rests on,
runnable on demand (and wired into the CLI as the `selftest` command).

Each suite is independent and reports one line.  The battery builds the
p = 3 and p = 5 censuses if they are not cached; everything else is
pure arithmetic.  A failure prints the captured reason instead of a
stack trace, and the battery keeps going so one broken invariant does
not hide another.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .census import CensusBank, elliptic_census
from .ff import build_prime_field, build_quad_ext
from .modform1 import (delta_series, delta_series_product, dim_cusp_sl2,
                       trace_ec_a1, trace_hecke_sl2)
from .oracles import genus2_orbit_stabilizer_histogram
from .sp4char import (FREUDENTHAL_BUDGET, LocalSystem, freudenthal_agreement,
                      sp4_trace, weyl_dimension)
from .trace2 import (WeightPair, endoscopic_term, hecke_trace_genus2,
                     jacobian_locus_trace, product_locus_trace, second_row)
from types import SimpleNamespace


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""


def _suite_field_characters() -> str:
    """Quadratic character tables: balance, multiplicativity, norm rule."""
    import random
    rng = random.Random(17)
    for p in (3, 5, 7, 11):
        fp = build_prime_field(p)
        assert sum(fp.chi[1:]) == 0
        ext = build_quad_ext(fp)
        for _ in range(50):
            x = rng.randrange(p)
            y = rng.randrange(p)
            assert fp.chi[fp.mul(x, y)] == fp.chi[x] * fp.chi[y] or 0 in (x, y)
            u = rng.randrange(ext.q)
            v = rng.randrange(ext.q)
            assert ext.chi[ext.mul(u, v)] == ext.chi[u] * ext.chi[v] or 0 in (u, v)
            # the character of the extension restricted along the norm
            if u:
                assert ext.chi[u] == fp.chi[ext.norm(u)]
        # every nonzero prime-field element is a square upstairs
        for x in range(1, p):
            assert ext.chi[ext.embed(x)] == 1
    return "p in (3,5,7,11), with quadratic extensions"


def _suite_elliptic_masses() -> str:
    """Total-count and mass identities for the elliptic censuses."""
    for p in (3, 5):
        fp = build_prime_field(p)
        for field in (fp, build_quad_ext(fp)):
            census = elliptic_census(field)
            q = census.q
            assert census.total_models == q * q * (q - 1)
            assert census.mass() == Fraction(q)
    return "q in (3,9,5,25): total q^2(q-1), mass q"


def _suite_genus2_masses(bank: CensusBank) -> str:
    """Genus-2 census totals, mass p^3, Weil bounds, twist symmetry."""
    details = []
    for p in (3, 5):
        table = bank.genus2(p)
        table.check()
        total = sum(table.counts.values())
        assert total == (p - 1) * (p ** 6 - p ** 4)
        assert Fraction(total, table.normalizer) == p ** 3
        details.append(f"p={p}: {len(table.counts)} classes")
    return "; ".join(details)


def _suite_orbit_stabilizer(bank: CensusBank) -> str:
    """The vectorized p=3 census equals the explicit group-action oracle."""
    hist, masses = genus2_orbit_stabilizer_histogram(3)
    table = bank.genus2(3)
    assert dict(table.counts) == hist
    order = table.normalizer
    for key, count in hist.items():
        assert masses[key] == Fraction(count, order)
    return f"{len(hist)} classes, masses = count/{order}"


def _suite_characters() -> str:
    """Production character vs Freudenthal, plus identity-class dims."""
    identity = SimpleNamespace(a1=4, a2=6, p=1)
    checked = 0
    for l in range(FREUDENTHAL_BUDGET + 1):
        for m in range(min(l, FREUDENTHAL_BUDGET - l) + 1):
            sys = LocalSystem(l, m)
            assert sp4_trace(sys, identity) == weyl_dimension(sys)
            checked += 1
    agreed = 0
    for l in range(9):
        for m in range(min(l, 8 - l) + 1):
            assert freudenthal_agreement(LocalSystem(l, m), samples=10)
            agreed += 1
    return f"{checked} identity-class dims, {agreed} Freudenthal agreements"


def _suite_eichler_shimura(bank: CensusBank) -> str:
    """Census Lefschetz traces against cusp-space Hecke traces."""
    d_alg = delta_series(30)
    assert d_alg == delta_series_product(30)
    assert d_alg[3] == 252 and d_alg[5] == 4830
    for p in (3, 5):
        ell = bank.elliptic(p)
        assert trace_hecke_sl2(12, p) == d_alg[p]
        for n in range(2, 21, 2):
            assert trace_ec_a1(n, p, ell) == -trace_hecke_sl2(n + 2, p) - 1
        for n in range(1, 20, 2):
            assert trace_ec_a1(n, p, ell) == 0
        assert trace_ec_a1(0, p, ell) == p
    return "n <= 20 at p in (3,5); discriminant form cross-checked"


def _suite_parity_vanishing(bank: CensusBank) -> str:
    """Odd-parity local systems pair off to zero on both loci."""
    for p in (3, 5):
        table = bank.genus2(p)
        ell = bank.elliptic(p)
        ext = bank.elliptic_ext(p)
        for (l, m) in ((1, 0), (2, 1), (3, 0), (4, 3)):
            sys = LocalSystem(l, m)
            assert jacobian_locus_trace(sys, table) == 0
            assert product_locus_trace(sys, ell, ext) == 0
    return "four odd systems vanish on both loci at p in (3,5)"


def _suite_dim0(bank: CensusBank) -> str:
    """Weights with zero-dimensional cusp space give trace zero."""
    zero_weights = ((6, 4), (7, 5), (8, 4), (8, 6), (9, 5), (10, 4))
    for (k1, k2) in zero_weights:
        for p in (3, 5):
            report = hecke_trace_genus2(WeightPair(k1, k2), p, bank)
            assert report.checks_passed and report.hecke_trace == 0
    return f"{len(zero_weights)} weights x p in (3,5), all zero"


def _suite_second_row(bank: CensusBank) -> str:
    """Closed-form second-row values and the endoscopic anchor."""
    for p in (3, 5):
        ell = bank.elliptic(p)
        assert second_row(WeightPair(6, 4), p, ell) == 0
        assert second_row(WeightPair(7, 5), p, ell) == 1
        assert second_row(WeightPair(8, 6), p, ell) == -p ** 4
    assert endoscopic_term(WeightPair(17, 7), 3) == 1 * 3 ** 5 * 252
    assert dim_cusp_sl2(22) == 1
    return "(6,4)->0, (7,5)->1, (8,6)->-p^4; endoscopic (17,7,3)=61236"


def run_selftest(cache_dir=None, workers: int = 1, emit=print) -> bool:
    """Run every suite; emit one line per suite; return overall success."""
    bank = CensusBank(cache_dir=cache_dir, workers=workers)
    suites = [
        ("field-characters", _suite_field_characters),
        ("elliptic-masses", _suite_elliptic_masses),
        ("genus2-masses", lambda: _suite_genus2_masses(bank)),
        ("orbit-stabilizer-p3", lambda: _suite_orbit_stabilizer(bank)),
        ("character-freudenthal", _suite_characters),
        ("eichler-shimura", lambda: _suite_eichler_shimura(bank)),
        ("parity-vanishing", lambda: _suite_parity_vanishing(bank)),
        ("dim0-suite", lambda: _suite_dim0(bank)),
        ("second-row-closed-forms", lambda: _suite_second_row(bank)),
    ]
    results = []
    for name, fn in suites:
        try:
            detail = fn()
            results.append(SuiteResult(name, True, detail))
        except Exception as exc:  # noqa: BLE001 - battery must keep going
            results.append(SuiteResult(name, False, f"{type(exc).__name__}: {exc}"))
    ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        emit(f"[{status}] {r.name}: {r.detail}")
        ok = ok and r.passed
    emit(f"selftest: {sum(r.passed for r in results)}/{len(results)} suites passed")
    return ok
