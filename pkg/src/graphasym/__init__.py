"""Exact and asymptotic enumeration of sparse connected labelled graphs.

The package counts connected labelled graphs by excess k = m - n exactly,
expresses the counts through tree polynomials and Ramanujan's Q-function,
and derives symbolic asymptotic expansions for the counts, for binomial
totals, and for the probability that a random graph is connected.
"""
from .assembly import (
    CrosscheckReport,
    Decomposition,
    ExpansionTable,
    Normalization,
    asym_c,
    asym_g,
    asym_p,
    decompose,
    exact_count_via_t,
    exact_probability,
    exact_total,
    expansion,
    expansion_table,
    fss_crosscheck,
    normalization,
)
from .errors import (
    ConstantTermError,
    CrosscheckFailure,
    GraphAsymError,
    IllConditioned,
    InsufficientPoints,
    NonMonomialDivisor,
    OrderMismatch,
    ResidualNonzero,
    UnderdeterminedSystem,
    UnknownLeadingTerm,
    VerificationFailure,
)
from .fitting import FitResult, lsq_fit, reconstruct_symbolic
from .graphs import (
    AkPolynomial,
    CountTable,
    WPolySeries,
    connected_counts,
    graph_egf,
    recover_ak,
    w_series,
)
from .ramanujan import (
    d_asym,
    d_coefficients,
    d_numeric,
    delta_log_series,
    q_asym,
    q_egf_check,
    q_exact,
    r_numeric,
)
from .series import Series, egf_coefficient, tree_function
from .symbolic import AsymSeries, SymConst, bernoulli, stirling_series
from .treepoly import (
    TreePolyNormalForm,
    t_asym,
    t_normal_form,
    t_recurrence_check,
    t_series,
    t_value,
)

__version__ = "0.1.0"
