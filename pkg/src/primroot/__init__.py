"""Primitive-root analytics at desk scale.

Cross-validated machinery around primitive roots mod p: three equivalent
characteristic-function representations, exponential-sum kernels with
their a-priori bounds, interval/witness theorems, and the distribution
constants (density and gap-scale Euler products), all testable for
primes up to about 1e6-1e7.

The sweep kernels run compiled (Cython) when the extension is built,
with an output-identical pure-Python fallback; see primroot.kernels.
"""

from .arith import (
    Factorization,
    PrimeTable,
    divisors,
    factorize,
    is_prime,
    mangoldt,
    moebius,
    next_prime,
    omega,
    sieve_primes,
    totient,
    totient_table,
)
from .charfun import (
    LITERAL_CAP,
    PsiEvaluation,
    Representation,
    order_character_sum,
    psi_divisor_character,
    psi_divisor_free_collapsed,
    psi_divisor_free_literal,
    psi_field_sum,
    psi_field_table,
    ramanujan_sum,
)
from .expsum import (
    SumValue,
    complete_geometric_sum,
    coprime_filtered_sum,
    equivalence_gap,
    gauss_mixed_sum,
    incomplete_power_sum,
    kernel_coprime_sum,
    kernel_coprime_sum_direct,
    kernel_full_sum,
    kernel_full_sum_direct,
)
from .intervals import (
    IntervalReport,
    IntervalSpec,
    WitnessMode,
    interval_psi_sum,
    interval_weighted_sum,
    verify_least_root_bound,
    verify_prime_window_theorem,
    verify_short_interval_theorem,
)
from .kernels import BACKEND
from .primctx import (
    Family,
    PrimeContext,
    ScanRecord,
    build_context,
    discrete_log,
    enumerate_primitive_roots,
    families,
    is_primitive_root,
    least_prime_primitive_root,
    least_primitive_root,
    multiplicative_order,
    scan_range,
)
from .stats import (
    ARTIN_REF,
    EULER_GAMMA,
    GAP_REF,
    ConstantEstimate,
    WindowHistogram,
    artin_empirical,
    artin_product,
    gap_empirical,
    gap_product,
    gap_sequence,
    mertens_normalized,
    mertens_product,
    poisson_windows,
    weyl_sum,
)

__version__ = "0.1.0"

__all__ = [
    "ARTIN_REF",
    "BACKEND",
    "EULER_GAMMA",
    "GAP_REF",
    "LITERAL_CAP",
    "ConstantEstimate",
    "Factorization",
    "Family",
    "IntervalReport",
    "IntervalSpec",
    "PrimeContext",
    "PrimeTable",
    "PsiEvaluation",
    "Representation",
    "ScanRecord",
    "SumValue",
    "WindowHistogram",
    "WitnessMode",
    "artin_empirical",
    "artin_product",
    "build_context",
    "complete_geometric_sum",
    "coprime_filtered_sum",
    "discrete_log",
    "divisors",
    "enumerate_primitive_roots",
    "equivalence_gap",
    "factorize",
    "families",
    "gap_empirical",
    "gap_product",
    "gap_sequence",
    "gauss_mixed_sum",
    "incomplete_power_sum",
    "interval_psi_sum",
    "interval_weighted_sum",
    "is_prime",
    "is_primitive_root",
    "kernel_coprime_sum",
    "kernel_coprime_sum_direct",
    "kernel_full_sum",
    "kernel_full_sum_direct",
    "least_prime_primitive_root",
    "least_primitive_root",
    "mangoldt",
    "mertens_normalized",
    "mertens_product",
    "moebius",
    "multiplicative_order",
    "next_prime",
    "omega",
    "order_character_sum",
    "poisson_windows",
    "psi_divisor_character",
    "psi_divisor_free_collapsed",
    "psi_divisor_free_literal",
    "psi_field_sum",
    "psi_field_table",
    "ramanujan_sum",
    "scan_range",
    "sieve_primes",
    "totient",
    "totient_table",
    "verify_least_root_bound",
    "verify_prime_window_theorem",
    "verify_short_interval_theorem",
    "weyl_sum",
    "__version__",
]
