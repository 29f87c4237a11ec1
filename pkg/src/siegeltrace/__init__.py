"""Exact Hecke traces on vector-valued genus-2 Siegel cusp forms,
computed from exhaustive curve censuses over small finite fields.

The pipeline: enumerate curves over F_p and F_{p^2} (`census`),
evaluate symplectic characters on their Frobenius classes (`sp4char`),
correct by level-1 elliptic modular data (`modform1`), and assemble the
trace with its divisibility checks (`trace2`).  Everything downstream
of the numpy census kernels is exact integer or rational arithmetic.
"""

from .census import (CacheError, CensusBank, CensusError, CensusTable,
                     EllipticCensus, FrobeniusClass, census_checksum,
                     census_load, census_store, elliptic_census,
                     frobenius_class, genus2_census, weil_root_check)
from .ff import PrimeField, QuadExtField, build_prime_field, build_quad_ext
from .modform1 import (cusp_basis, delta_series, dim_cusp_sl2,
                       eisenstein_series, sym_power_trace, trace_ec_a1,
                       trace_hecke_sl2)
from .selftest import run_selftest
from .sp4char import (LocalSystem, freudenthal_agreement, freudenthal_oracle,
                      h_sequence, sp4_trace, weyl_dimension)
from .trace2 import (FormulaConsistencyError, TraceReport, WeightPair,
                     endoscopic_term, hecke_trace_genus2,
                     jacobian_locus_trace, product_locus_trace, second_row,
                     trace_ec_a2)

__version__ = "0.1.0"

__all__ = [
    "CacheError", "CensusBank", "CensusError", "CensusTable",
    "EllipticCensus", "FormulaConsistencyError", "FrobeniusClass",
    "LocalSystem", "PrimeField", "QuadExtField", "TraceReport", "WeightPair",
    "build_prime_field", "build_quad_ext", "census_checksum", "census_load",
    "census_store", "cusp_basis", "delta_series", "dim_cusp_sl2",
    "eisenstein_series", "elliptic_census", "endoscopic_term",
    "freudenthal_agreement", "freudenthal_oracle", "frobenius_class",
    "genus2_census", "h_sequence", "hecke_trace_genus2",
    "jacobian_locus_trace", "product_locus_trace", "run_selftest",
    "second_row", "sp4_trace", "sym_power_trace", "trace_ec_a1",
    "trace_ec_a2", "trace_hecke_sl2", "weil_root_check", "weyl_dimension",
    "__version__",
]
