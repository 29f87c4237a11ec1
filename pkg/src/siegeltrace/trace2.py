"""Exact Hecke traces on vector-valued genus-2 Siegel cusp forms.

The computation has two halves that must agree on divisibility before a
trace is reported:

  * a geometric side: the mass-weighted character sum over the degree-2
    census (Jacobians of genus-2 curves plus the product locus), giving
    the Frobenius trace on the inner cohomology of the local system;
  * a spectral correction row built from level-1 elliptic data: cusp
    space dimensions, elliptic Hecke traces, and symmetric-power
    Lefschetz numbers.

Four times the Hecke trace equals the negated geometric sum plus the
correction row.  The factor 4 must divide exactly; a failure of that
divisibility (or any fractional mass where an integer is required)
raises FormulaConsistencyError rather than rounding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .census import CensusBank, CensusTable, EllipticCensus, FrobeniusClass
from .modform1 import dim_cusp_sl2, trace_ec_a1, trace_hecke_sl2
from .sp4char import LocalSystem, sp4_trace


class FormulaConsistencyError(Exception):
    """An exactness invariant of the trace formula failed."""


@dataclass(frozen=True)
class WeightPair:
    """Regular vector-valued weight (k1, k2): k1 > k2 > 3, even sum.

    The parity condition is what makes the coefficient system symplectic
    rather than merely orthogonal; irregular or odd-sum weights are
    rejected up front because none of the formulas below apply to them.
    """

    k1: int
    k2: int

    def __post_init__(self):
        if not (isinstance(self.k1, int) and isinstance(self.k2, int)):
            raise ValueError("weights must be integers")
        if not self.k1 > self.k2 > 3:
            raise ValueError(
                f"weight must be regular: k1 > k2 > 3, got ({self.k1}, {self.k2})")
        if (self.k1 + self.k2) % 2:
            raise ValueError(
                f"weight sum must be even (symplectic parity), got "
                f"({self.k1}, {self.k2}) with odd k1 + k2")

    @property
    def r1(self) -> int:
        """Weight of the long elliptic companion: k1 + k2 - 2."""
        return self.k1 + self.k2 - 2

    @property
    def r2(self) -> int:
        """Weight of the short elliptic companion: k1 - k2 + 2."""
        return self.k1 - self.k2 + 2

    @property
    def local_system(self) -> LocalSystem:
        return LocalSystem(self.k1 - 3, self.k2 - 3)


def jacobian_locus_trace(sys: LocalSystem, table: CensusTable) -> Fraction:
    """Mass-weighted character sum over the genus-2 Jacobian locus."""
    total = 0
    for cls, count in table.classes():
        total += count * sp4_trace(sys, cls)
    return Fraction(total, table.normalizer)


def product_locus_trace(sys: LocalSystem, ell: EllipticCensus,
                        ell_ext: EllipticCensus) -> Fraction:
    """Mass-weighted character sum over principally polarized products.

    Unordered pairs of prime-field curves contribute through the class
    (a + a', aa' + 2p); a curve over the quadratic extension together
    with its conjugate contributes through (0, -a').  The half factor
    implements the unordered/conjugate-pair bookkeeping exactly.
    """
    p = ell.p
    if ell.degree != 1 or ell_ext.degree != 2 or ell_ext.p != p:
        raise ValueError("need matched degree-1 and degree-2 censuses")
    pair_sum = 0
    items = sorted(ell.counts.items())
    for a, ca in items:
        for b, cb in items:
            cls = FrobeniusClass(p=p, a1=a + b, a2=a * b + 2 * p)
            pair_sum += ca * cb * sp4_trace(sys, cls)
    ext_sum = 0
    for a, ca in sorted(ell_ext.counts.items()):
        cls = FrobeniusClass(p=p, a1=0, a2=-a)
        ext_sum += ca * sp4_trace(sys, cls)
    return (Fraction(pair_sum, ell.normalizer ** 2)
            + Fraction(ext_sum, ell_ext.normalizer)) / 2


def trace_ec_a2(sys: LocalSystem, table: CensusTable, ell: EllipticCensus,
                ell_ext: EllipticCensus) -> int:
    """Frobenius trace of the local system over the full degree-2 locus.

    Sum of the Jacobian and product contributions; always an integer,
    and that is enforced, not assumed.
    """
    total = jacobian_locus_trace(sys, table) + product_locus_trace(sys, ell, ell_ext)
    if total.denominator != 1:
        raise FormulaConsistencyError(
            f"degree-2 character sum is not integral: {total}")
    return int(total)


def second_row(weight: WeightPair, p: int,
               ell: EllipticCensus | None = None) -> int:
    """Elliptic correction row for the weight.

    Combines the long-companion cusp dimension against a short
    symmetric-power Lefschetz trace, the short-companion dimension, a
    signed middle Lefschetz trace, and the parity constant.
    """
    k1, k2 = weight.k1, weight.k2
    term1 = dim_cusp_sl2(weight.r1) * p ** (k2 - 2) \
        * trace_ec_a1(weight.r2 - 2, p, ell)
    term2 = dim_cusp_sl2(weight.r2)
    k = k1 if k1 % 2 == 0 else k2 - 1
    term3 = (-1) ** k1 * trace_ec_a1(k - 2, p, ell)
    term4 = (1 + (-1) ** k1) // 2
    return term1 + term2 + term3 + term4


def endoscopic_term(weight: WeightPair, p: int) -> int:
    """dim of the long companion times p^(k2-2) times the short
    companion's Hecke trace."""
    return dim_cusp_sl2(weight.r1) * p ** (weight.k2 - 2) \
        * trace_hecke_sl2(weight.r2, p)


@dataclass(frozen=True)
class TraceReport:
    """One (weight, prime) evaluation with all intermediate quantities.

    `hecke_trace` is None exactly when `checks_passed` is False, which
    happens only in non-strict mode when the factor-4 divisibility
    fails.
    """

    k1: int
    k2: int
    p: int
    trace_a2: int
    jacobian_term: Fraction
    product_term: Fraction
    second_row: int
    endoscopic_term: int
    eisenstein_term: int
    four_times_trace: int
    hecke_trace: int | None
    normalization: int
    checks_passed: bool
    provenance: dict = field(default_factory=dict, compare=False)

    def to_json_dict(self) -> dict:
        return {
            "k1": self.k1,
            "k2": self.k2,
            "p": self.p,
            "traceA2": self.trace_a2,
            "jacobianTerm": str(self.jacobian_term),
            "productTerm": str(self.product_term),
            "secondRow": self.second_row,
            "endoscopicTerm": self.endoscopic_term,
            "eisensteinTerm": self.eisenstein_term,
            "fourTimesTrace": self.four_times_trace,
            "heckeTrace": self.hecke_trace,
            "normalization": self.normalization,
            "checksPassed": self.checks_passed,
            "provenance": self.provenance,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=False)


CSV_COLUMNS = ("k1", "k2", "p", "traceA2", "secondRow", "endoTerm",
               "fourTimesTrace", "heckeTrace", "checksPassed")


def csv_row(report: TraceReport) -> tuple:
    return (report.k1, report.k2, report.p, report.trace_a2,
            report.second_row, report.endoscopic_term,
            report.four_times_trace,
            "" if report.hecke_trace is None else report.hecke_trace,
            report.checks_passed)


def hecke_trace_genus2(weight: WeightPair, p: int,
                       bank: CensusBank | None = None,
                       normalization: int = 4,
                       strict: bool = True) -> TraceReport:
    """Exact Hecke trace at p for the given vector-valued weight.

    Pulls (or builds) the three censuses for p from the bank, assembles
    the geometric character sum and the elliptic correction row, checks
    divisibility by `normalization`, and returns the full report.  With
    strict=True a divisibility failure raises; with strict=False it is
    recorded as checks_passed=False and hecke_trace=None.
    """
    if normalization <= 0:
        raise ValueError("normalization must be a positive integer")
    if bank is None:
        bank = CensusBank()
    table = bank.genus2(p)
    ell = bank.elliptic(p)
    ell_ext = bank.elliptic_ext(p)

    sys = weight.local_system
    jac = jacobian_locus_trace(sys, table)
    prod = product_locus_trace(sys, ell, ell_ext)
    total = jac + prod
    if total.denominator != 1:
        raise FormulaConsistencyError(
            f"degree-2 character sum is not integral at "
            f"({weight.k1},{weight.k2}), p={p}: {total}")
    trace_a2 = int(total)

    row = second_row(weight, p, ell)
    endo = endoscopic_term(weight, p)
    four = -trace_a2 + row
    ok = four % normalization == 0
    if not ok and strict:
        raise FormulaConsistencyError(
            f"trace not divisible by {normalization} at "
            f"({weight.k1},{weight.k2}), p={p}: got {four}")
    return TraceReport(
        k1=weight.k1,
        k2=weight.k2,
        p=p,
        trace_a2=trace_a2,
        jacobian_term=jac,
        product_term=prod,
        second_row=row,
        endoscopic_term=endo,
        eisenstein_term=row + endo,
        four_times_trace=four,
        hecke_trace=four // normalization if ok else None,
        normalization=normalization,
        checks_passed=ok,
        provenance={
            "census_checksums": {
                name: bank.checksums[name]
                for name in (f"genus2-p{p}", f"elliptic-p{p}", f"elliptic-q{p * p}")
                if name in bank.checksums
            },
        },
    )
