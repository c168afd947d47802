"""Assembled expansions: connected graphs, all graphs, connectivity odds.

Everything here is derived, not transcribed.  Connected counts are split
exactly over tree polynomials, the split is re-verified against the edge
recurrence for small n, and the asymptotic rows come from pushing the exact
split through the symbolic half-grid machinery.  The all-graphs row uses
the falling-factorial logarithm of the binomial, whose large-scale terms
(n log n, log n, n, n log 2, log pi) must cancel against the normalizing
prefactor; those cancellations are asserted, not assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import mpmath

from . import _poly
from .errors import CrosscheckFailure, VerificationFailure
from .graphs import connected_counts, recover_ak
from .ramanujan import q_asym, q_exact
from .series import Series
from .symbolic import AsymSeries, SymConst, bernoulli
from .treepoly import t_asym, t_normal_form, t_value


# ---------------------------------------------------------------------------
# exact decomposition over tree polynomials


@dataclass(frozen=True)
class Decomposition:
    """c(n, n+k) = sum_l beta_l t_n(l) + qterm * Q(n) n**(n-1) + constant."""

    k: int
    beta: tuple[tuple[int, Fraction], ...]
    qterm: Fraction
    constant: Fraction
    verified_n_max: int

    def beta_dict(self) -> dict[int, Fraction]:
        return dict(self.beta)

    def evaluate(self, n: int) -> Fraction:
        total = Fraction(self.constant)
        for l, b in self.beta:
            total += b * t_value(n, l)
        if self.qterm:
            total += self.qterm * q_exact(n) * n ** (n - 1)
        return total


@lru_cache(maxsize=None)
def decompose(k: int, verify_n_max: int = 12) -> Decomposition:
    """Exact split of the excess-k connected count over t_n(y) and Q(n).

    For k >= 1 the split comes from expanding the numerator polynomial
    around 1: A_k(T) (1-T)**(-3k) = sum_j gamma_j (1-T)**(j-3k), so each
    term is a tree polynomial of index 3k - j.  For k = 0 the closed form
    is c(n,n) = Q(n) n**(n-1)/2 - n**(n-1) + n**(n-2)/2.
    """
    if k < 0:
        raise ValueError("decompositions start at excess 0")
    if k == 0:
        beta = ((-2, Fraction(-1, 4)), (-1, Fraction(1)))
        dec = Decomposition(0, beta, Fraction(1, 2), Fraction(0), verify_n_max)
    else:
        a = recover_ak(k)
        gamma = _poly.compose_affine(a.coeffs, Fraction(-1), Fraction(1))
        beta = tuple(
            (3 * k - j, g) for j, g in enumerate(gamma) if g != 0
        )
        dec = Decomposition(k, tuple(sorted(beta)), Fraction(0), Fraction(0), verify_n_max)
    table = connected_counts(verify_n_max, max(k, 0))
    for n in range(1, verify_n_max + 1):
        want = Fraction(table.get(n, n + k))
        got = dec.evaluate(n)
        if want != got:
            raise VerificationFailure(
                f"excess-{k} decomposition disagrees with the edge recurrence "
                f"at n={n}: {got} != {want}"
            )
    return dec


def exact_count_via_t(n: int, k: int) -> int:
    """c(n, n+k) evaluated through the tree-polynomial split."""
    if n < 1:
        raise ValueError("counts need n >= 1")
    if k == -1:
        return 1 if n == 1 else n ** (n - 2)
    val = decompose(k).evaluate(n)
    if val.denominator != 1 or val < 0:
        raise VerificationFailure(f"non-count value {val} at n={n}, k={k}")
    return int(val)


# ---------------------------------------------------------------------------
# connected graphs: expansion of c(n, n+k) / n**(n + (3k-1)/2)


@lru_cache(maxsize=None)
def asym_c(k: int, depth: int) -> AsymSeries:
    """Expansion of c(n, n+k) normalized by n**(n + (3k-1)/2).

    The excess -1 row is exact: c(n, n-1) = n**(n-2) gives the constant 1.
    """
    if k < -1:
        raise ValueError("excess below -1 is empty")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if k == -1:
        return AsymSeries.build(0, [1] + [0] * depth)
    dec = decompose(k)
    floor_nn = (3 * k - 1) - depth
    acc = AsymSeries.zero(floor_nn)
    for l, b in dec.beta:
        if l == 0:
            continue
        nf = t_normal_form(l)
        if nf.kind == "u":
            if not nf.e or floor_nn > -2:
                continue
            part = AsymSeries.from_u_polynomial(list(nf.e), -2, floor_nn)
        else:
            lead_p = 2 * _poly.degree(nf.p)
            lead_r = 2 * _poly.degree(nf.r) + 1 if nf.r else lead_p
            lead_l = max(lead_p, lead_r)
            if lead_l < floor_nn:
                continue
            part = t_asym(l, lead_l - floor_nn)
        acc = acc + part.scale(b)
    if dec.qterm:
        q_depth = max(0, -1 - floor_nn)
        acc = acc + q_asym(q_depth).shift(-2).scale(dec.qterm)
    shifted = acc.shift(-(3 * k - 1))
    if shifted.lead != 0:
        raise VerificationFailure(
            f"excess-{k} expansion has leading half-exponent {shifted.lead}, not 0"
        )
    return shifted.truncate(depth)


# ---------------------------------------------------------------------------
# all graphs: expansion of binom(n(n-1)/2, n+k)


def _faulhaber(j: int) -> list[Fraction]:
    """Coefficients in m of S_j(m) = sum_{i<m} i**j, index p holds [m**p]."""
    out = [Fraction(0)] * (j + 2)
    for r in range(j + 1):
        out[j + 1 - r] = Fraction(comb(j + 1, r)) * bernoulli(r) / (j + 1)
    return out


@lru_cache(maxsize=None)
def asym_g(k: int, depth: int) -> AsymSeries:
    """Expansion of g(n, n+k) / [sqrt(2/pi) e**(n-2) (n/2)**n n**((2k-1)/2)].

    Runs in exact series over u = 1/n.  ln binom(N, m) with N = n(n-1)/2,
    m = n+k is accumulated as coefficients of n ln n, ln n, n, n ln 2, ln 2,
    ln pi plus a power series in u; after subtracting the prefactor all
    large-scale coefficients must vanish and the ln 2 weight must be the
    integer -(k+1).  Both facts are asserted.  What remains exponentiates
    to the expansion, which has only integer powers of 1/n.
    """
    if k < -1:
        raise ValueError("needs n + k >= n - 1 >= 0 edges")
    jw = depth + 2
    one = Series.one(jw)
    one_ku = Series([1, k] + [0] * (jw - 1))
    one_mu = Series([1, -1] + [0] * (jw - 1))

    nlogn = Fraction(0)
    logn = Fraction(0)
    ncoef = Fraction(0)
    nln2 = Fraction(0)
    ln2c = Fraction(0)
    lnpic = Fraction(0)
    upart = Series.zero(jw)

    # m ln N with ln N = 2 ln n + ln(1-u) - ln 2 and m = n + k = (1+ku)/u
    nlogn += 2
    logn += 2 * k
    nln2 -= 1
    ln2c -= k
    log_one_mu = one_mu.log()
    l1 = Series(log_one_mu.coeffs()[1:])  # ln(1-u)/u, constant -1
    upart = upart + one_ku.truncate(jw - 1) * l1

    # - sum_j S_j(m) / (j N**j) from the falling factorial, 1/N = 2u**2/(1-u)
    inv_pow = one  # (1-u)**(-j), updated incrementally
    inv_one_mu = one_mu.inverse()
    ku_pows = [one]
    for _ in range(jw + 2):
        ku_pows.append(ku_pows[-1] * one_ku)
    for j in range(1, jw + 2):
        inv_pow = inv_pow * inv_one_mu
        s = _faulhaber(j)
        factor = Fraction(-(2 ** j), j)
        block = Series.zero(jw)
        for p, sp in enumerate(s):
            if sp == 0:
                continue
            shift = 2 * j - p
            if shift > jw:
                continue
            block = block + (ku_pows[p] * inv_pow).shift(shift).truncate(jw).scale(sp)
        upart = upart + block.scale(factor)

    # - ln m! by Stirling at m = n + k
    log_one_ku = one_ku.log()
    nlogn -= 1
    logn -= k
    upart = upart - one_ku.truncate(jw - 1) * Series(log_one_ku.coeffs()[1:])
    ncoef += 1
    upart = upart + Series([k] + [0] * jw)
    logn -= Fraction(1, 2)
    upart = upart - log_one_ku.scale(Fraction(1, 2))
    ln2c -= Fraction(1, 2)
    lnpic -= Fraction(1, 2)
    for i in range(1, (jw + 1) // 2 + 1):
        coeff = bernoulli(2 * i) / (2 * i * (2 * i - 1))
        upart = upart - one_ku.pow(1 - 2 * i).shift(2 * i - 1).truncate(jw).scale(coeff)

    # subtract ln of the prefactor sqrt(2/pi) e**(n-2) (n/2)**n n**((2k-1)/2)
    ln2c -= Fraction(1, 2)
    lnpic += Fraction(1, 2)
    ncoef -= 1
    nlogn -= 1
    nln2 += 1
    logn -= Fraction(2 * k - 1, 2)
    upart = upart + Series([2] + [0] * jw)

    for name, val in (
        ("n ln n", nlogn),
        ("ln n", logn),
        ("n", ncoef),
        ("n ln 2", nln2),
        ("ln pi", lnpic),
    ):
        assert val == 0, f"{name} fails to cancel: {val}"
    assert ln2c == -(k + 1), f"ln 2 weight {ln2c} is not -(k+1)"
    assert upart[0] == 0, f"constant fails to cancel: {upart[0]}"

    ratio = upart.exp().scale(Fraction(2) ** int(ln2c))
    slots: list[SymConst] = []
    for h in range(0, -(2 * depth + 2), -1):
        if h % 2 == 0:
            slots.append(SymConst.rational(ratio[-h // 2]))
        else:
            slots.append(SymConst.zero())
    return AsymSeries(0, tuple(slots))


def exact_total(n: int, k: int) -> int:
    """g(n, n+k) = binom(n(n-1)/2, n+k) exactly."""
    m = n + k
    if m < 0:
        return 0
    return comb(comb(n, 2), m)


def exact_probability(n: int, k: int) -> Fraction:
    """P(n, n+k), the chance a uniform (n, n+k)-graph is connected."""
    g = exact_total(n, k)
    if g == 0:
        raise ValueError(f"no graphs with n={n}, m={n + k}")
    return Fraction(exact_count_via_t(n, k), g)


# ---------------------------------------------------------------------------
# probability of connectedness


@lru_cache(maxsize=None)
def asym_p(k: int, depth: int) -> AsymSeries:
    """Expansion of P(n, n+k) / [2**n e**(2-n) n**(k/2) xi].

    The two normalizations were chosen so the quotient of the connected
    and all-graphs expansions times 1/2 lands exactly on this scale,
    independent of k.
    """
    num = asym_c(k, depth)
    den = asym_g(k, (depth + 1) // 2)
    return (num / den).scale(Fraction(1, 2)).truncate(depth)


# ---------------------------------------------------------------------------
# cross-check of the corrected literature formula


@dataclass(frozen=True)
class CrosscheckReport:
    k: int
    a0_series: str
    a0_formula: str
    rel_a0: float
    ratio_series: str
    ratio_formula: str
    rel_ratio: float
    tolerance: float
    passed: bool


def fss_crosscheck(k: int, bits: int = 256, tolerance: float = 1e-12) -> CrosscheckReport:
    """Compare the assembled leading coefficients against the closed form

        a_0 = A_k(1) sqrt(pi) / (2**((3k-1)/2) Gamma(3k/2)),
        a_1/a_0 = -(A_k'(1)/A_k(1) - k) sqrt(2) Gamma(3k/2) / Gamma((3k-1)/2),

    the sign and scale of which differ from the form usually quoted.
    """
    if k < 2:
        raise ValueError("the closed form is compared for k >= 2")
    series = asym_c(k, 1)
    a = recover_ak(k)
    with mpmath.workprec(bits):
        a0 = series.coeffs[0].evaluate(bits)
        a1 = series.coeffs[1].evaluate(bits)
        a_one = mpmath.mpf(a.at_one().numerator) / a.at_one().denominator
        ap_one = mpmath.mpf(a.derivative_at_one().numerator) / a.derivative_at_one().denominator
        rhs_a0 = (
            a_one
            * mpmath.sqrt(mpmath.pi)
            / (mpmath.power(2, mpmath.mpf(3 * k - 1) / 2) * mpmath.gamma(mpmath.mpf(3 * k) / 2))
        )
        lhs_ratio = a1 / a0
        rhs_ratio = (
            -(ap_one / a_one - k)
            * mpmath.sqrt(2)
            * mpmath.gamma(mpmath.mpf(3 * k) / 2)
            / mpmath.gamma(mpmath.mpf(3 * k - 1) / 2)
        )
        rel_a0 = float(abs(a0 - rhs_a0) / abs(rhs_a0))
        rel_ratio = float(abs(lhs_ratio - rhs_ratio) / abs(rhs_ratio))
        report = CrosscheckReport(
            k=k,
            a0_series=mpmath.nstr(a0, 25),
            a0_formula=mpmath.nstr(rhs_a0, 25),
            rel_a0=rel_a0,
            ratio_series=mpmath.nstr(lhs_ratio, 25),
            ratio_formula=mpmath.nstr(rhs_ratio, 25),
            rel_ratio=rel_ratio,
            tolerance=tolerance,
            passed=rel_a0 <= tolerance and rel_ratio <= tolerance,
        )
    if not report.passed:
        raise CrosscheckFailure(
            f"closed form disagrees at k={k}: rel errors {rel_a0}, {rel_ratio}"
        )
    return report


# ---------------------------------------------------------------------------
# tables and normalizations


@dataclass(frozen=True)
class Normalization:
    kind: str
    description: str

    def evaluate(self, k: int, n: int, bits: int = 256) -> mpmath.mpf:
        with mpmath.workprec(bits):
            nn = mpmath.mpf(n)
            if self.kind == "connected":
                return mpmath.power(nn, n + mpmath.mpf(3 * k - 1) / 2)
            if self.kind == "total":
                return (
                    mpmath.sqrt(2 / mpmath.pi)
                    * mpmath.exp(nn - 2)
                    * mpmath.power(nn / 2, n)
                    * mpmath.power(nn, mpmath.mpf(2 * k - 1) / 2)
                )
            if self.kind == "probability":
                return (
                    mpmath.power(2, n)
                    * mpmath.exp(2 - nn)
                    * mpmath.power(nn, mpmath.mpf(k) / 2)
                    * mpmath.sqrt(2 * mpmath.pi)
                )
            raise ValueError(f"unknown normalization kind {self.kind!r}")


_NORMALIZATIONS = {
    "connected": Normalization("connected", "n**(n + (3k-1)/2)"),
    "total": Normalization(
        "total", "sqrt(2/pi) * exp(n-2) * (n/2)**n * n**((2k-1)/2)"
    ),
    "probability": Normalization(
        "probability", "2**n * exp(2-n) * n**(k/2) * sqrt(2*pi)"
    ),
}

_EXPANSIONS = {"connected": asym_c, "total": asym_g, "probability": asym_p}


def normalization(kind: str) -> Normalization:
    return _NORMALIZATIONS[kind]


def expansion(kind: str, k: int, depth: int) -> AsymSeries:
    return _EXPANSIONS[kind](k, depth)


@dataclass(frozen=True)
class ExpansionTable:
    kind: str
    depth: int
    rows: tuple[tuple[int, AsymSeries], ...]

    def csv_rows(self):
        yield "k,j,power_of_n,coeff_rat,coeff_xi_rat"
        for k, series in self.rows:
            for j, c in enumerate(series.coeffs):
                power = Fraction(series.lead - j, 2)
                yield f"{k},{j},{power},{c.rational_part()},{c.xi_part()}"

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "normalization": normalization(self.kind).description,
            "depth": self.depth,
            "rows": {str(k): s.to_json_dict() for k, s in self.rows},
        }


def expansion_table(kind: str, ks: tuple[int, ...], depth: int) -> ExpansionTable:
    builder = _EXPANSIONS[kind]
    rows = tuple((k, builder(k, depth)) for k in ks)
    return ExpansionTable(kind, depth, rows)


def exact_value(kind: str, n: int, k: int) -> Fraction:
    if kind == "connected":
        return Fraction(exact_count_via_t(n, k))
    if kind == "total":
        return Fraction(exact_total(n, k))
    if kind == "probability":
        return exact_probability(n, k)
    raise ValueError(f"unknown kind {kind!r}")
