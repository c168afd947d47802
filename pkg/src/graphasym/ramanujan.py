"""Ramanujan's Q-function, its companion R, and their asymptotic expansions.

    Q(n) = sum_{k=1}^{n} n!/(n-k)! / n**k          (exact rational)
    R(n) = sum_{k>=0} n**k * n!/(n+k)!             (convergent sum)

They satisfy Q(n) + R(n) = n! e**n / n**n exactly, so the difference
D(n) = R(n) - Q(n) pins down the expansion of Q once D is known.  D has an
expansion in integer powers of 1/n whose coefficients are derived exactly
here, not transcribed: writing psi(d) = log(d**2 / (2(1-(1+d)e**(-d)))) and
expanding around the dominant saddle gives

    D(n) = sum_{k>=1} [d**k] psi(d) * (-1)**k * E_k(1/n),

where E_k(u) = sum_{r=1}^{k} C(k,r)(-1)**r * r * prod_{i<r}(1-iu) is the
finite-difference polynomial with E_k(1/n) = n**(1-n) * n![z**n](1-T)**k.
The u**j coefficient of E_k is a polynomial in k of degree 2j+1, so only
k <= 2j+1 contribute to the n**(-j) term and each coefficient is a finite
exact sum.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import mpmath

from .errors import VerificationFailure
from .series import Series, tree_function
from .symbolic import AsymSeries, SymConst, stirling_series


@lru_cache(maxsize=None)
def q_exact(n: int) -> Fraction:
    """Q(n) as an exact rational over the common denominator n**n."""
    if n < 1:
        raise ValueError("Q(n) needs n >= 1")
    t = n ** n  # n falling 0, rescaled
    total = 0
    for k in range(1, n + 1):
        t = t * (n - k + 1) // n  # exact: n**(n-k) | t * (n-k+1)
        total += t
    return Fraction(total, n ** n)


def r_numeric(n: int, bits: int = 256) -> mpmath.mpf:
    """R(n) by direct summation of its convergent series."""
    if n < 1:
        raise ValueError("R(n) needs n >= 1")
    with mpmath.workprec(bits + 64):
        term = mpmath.mpf(1)
        total = mpmath.mpf(0)
        k = 0
        eps = mpmath.mpf(2) ** (-(bits + 48))
        while True:
            total += term
            k += 1
            term = term * n / (n + k)
            # positive terms; once k > n the tail is below term * n / (k - n)
            if k > n and term * n / (k - n) < eps * total:
                break
        return +total


def d_numeric(n: int, bits: int = 256) -> mpmath.mpf:
    """D(n) = R(n) - Q(n) at the requested precision."""
    q = q_exact(n)
    with mpmath.workprec(bits + 64):
        qv = mpmath.mpf(q.numerator) / q.denominator
        return +(r_numeric(n, bits) - qv)


@lru_cache(maxsize=None)
def delta_log_series(order: int) -> Series:
    """Series of psi(d) = log(d**2 / (2(1-(1+d)e**(-d)))) around d = 0.

    The argument of the log tends to 1, so psi(0) = 0; the first
    coefficients are 2/3, -1/36, -1/810, ...
    """
    pad = order + 2
    expm = Series([Fraction((-1) ** i, factorial(i)) for i in range(pad + 1)])
    one_plus_d = Series([1, 1] + [0] * (pad - 1))
    inner = one_plus_d * expm  # (1+d) e**(-d) = 1 - d**2/2 + d**3/3 - ...
    shifted = [-2 * inner[i + 2] for i in range(order + 1)]
    g = Series(shifted)  # 2(1 - (1+d)e**(-d)) / d**2, constant term 1
    return -g.log()


def _difference_polynomial(k: int, order: int) -> list[Fraction]:
    """Coefficients of E_k(u) = sum_r C(k,r)(-1)**r r prod_{i<r}(1-iu)."""
    out = [Fraction(0)] * (order + 1)
    prod = [Fraction(1)] + [Fraction(0)] * order
    for r in range(1, k + 1):
        if r > 1:
            for j in range(order, 0, -1):
                prod[j] -= (r - 1) * prod[j - 1]
        c = Fraction(comb(k, r) * (-1) ** r * r)
        for j in range(order + 1):
            if prod[j]:
                out[j] += c * prod[j]
    return out


@lru_cache(maxsize=None)
def d_coefficients(order: int) -> tuple[Fraction, ...]:
    """Exact coefficients d_j with D(n) = sum_j d_j n**(-j) + O(n**-order-1)."""
    psi = delta_log_series(2 * order + 1)
    out = [Fraction(0)] * (order + 1)
    for k in range(1, 2 * order + 2):
        ek = _difference_polynomial(k, order)
        sign = (-1) ** k
        for j in range(order + 1):
            if ek[j]:
                out[j] += sign * psi[k] * ek[j]
    return tuple(out)


def d_asym(depth: int) -> AsymSeries:
    """D(n) as a half-grid expansion; only integer powers appear."""
    d = d_coefficients(depth)
    slots: list[SymConst] = []
    for h in range(0, -(2 * depth + 2), -1):
        if h % 2 == 0:
            slots.append(SymConst.rational(d[-h // 2]))
        else:
            slots.append(SymConst.zero())
    return AsymSeries(0, tuple(slots))


def q_asym(depth: int) -> AsymSeries:
    """Expansion of Q(n), leading term xi/2 * n**(1/2).

    Built from the exact identity 2*Q = (Q+R) - D, where Q+R is the
    Stirling factor n! e**n / n**n; the identity is re-asserted on the
    symbolic objects after assembly.
    """
    stirl = stirling_series(depth)
    d = d_asym(depth // 2)
    q = (stirl - d).scale(Fraction(1, 2))
    recombined = q.scale(2) + d
    for h in range(recombined.lead, recombined.known_floor - 1, -1):
        assert recombined.coefficient_at(h) == stirl.coefficient_at(h)
    return q.truncate(depth)


def q_egf_check(order: int) -> bool:
    """Verify sum_n Q(n) n**(n-1) z**n / n! = -log(1 - T) through z**order."""
    lhs = [Fraction(0)]
    for n in range(1, order + 1):
        lhs.append(q_exact(n) * Fraction(n ** (n - 1), factorial(n)))
    rhs = -(Series.one(order) - tree_function(order)).log()
    for n in range(order + 1):
        if lhs[n] != rhs[n]:
            raise VerificationFailure(
                f"Q generating function mismatch at z**{n}: {lhs[n]} != {rhs[n]}"
            )
    return True
