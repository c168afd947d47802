"""Least-squares recovery of expansion coefficients from exact counts.

The model is y(n) = sum_j b_j x**j with x = n**(-1/2) and y the exactly
computed normalized count.  The solve is orthogonal (Householder QR), never
normal equations, and runs at a configurable binary precision.  For
conditioning, x is mapped affinely onto [-1, 1] before solving and the
coefficients are mapped back by exact polynomial composition at working
precision.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .assembly import exact_count_via_t
from .errors import IllConditioned, InsufficientPoints
from .symbolic import SymConst


def _to_fraction(x: mpmath.mpf) -> Fraction:
    x = mpmath.mpf(x)
    if not mpmath.isfinite(x):
        raise ValueError(f"cannot convert non-finite value {x!r} to a fraction")
    sign, man, exp, _ = x._mpf_
    f = Fraction(int(man))
    if sign:
        f = -f
    return f * Fraction(2) ** int(exp)


def _qr_solve(rows: list[list[mpmath.mpf]], rhs: list[mpmath.mpf]) -> tuple[list[mpmath.mpf], mpmath.mpf, mpmath.mpf]:
    """Householder least squares; returns (solution, rms residual, cond)."""
    m = len(rows)
    p = len(rows[0])
    a = [row[:] for row in rows]
    b = rhs[:]
    for col in range(p):
        norm = mpmath.sqrt(mpmath.fsum(a[i][col] ** 2 for i in range(col, m)))
        if norm == 0:
            raise IllConditioned(f"column {col} is numerically zero")
        alpha = -norm if a[col][col] >= 0 else norm
        v = [mpmath.mpf(0)] * m
        v[col] = a[col][col] - alpha
        for i in range(col + 1, m):
            v[i] = a[i][col]
        vtv = mpmath.fsum(v[i] ** 2 for i in range(col, m))
        if vtv == 0:
            continue
        for jcol in range(col, p):
            dot = mpmath.fsum(v[i] * a[i][jcol] for i in range(col, m))
            f = 2 * dot / vtv
            for i in range(col, m):
                a[i][jcol] -= f * v[i]
        dot = mpmath.fsum(v[i] * b[i] for i in range(col, m))
        f = 2 * dot / vtv
        for i in range(col, m):
            b[i] -= f * v[i]
    diag = [abs(a[i][i]) for i in range(p)]
    cond = max(diag) / min(diag)
    x = [mpmath.mpf(0)] * p
    for i in range(p - 1, -1, -1):
        acc = b[i] - mpmath.fsum(a[i][j] * x[j] for j in range(i + 1, p))
        x[i] = acc / a[i][i]
    rss = mpmath.fsum(b[i] ** 2 for i in range(p, m))
    rms = mpmath.sqrt(rss / m)
    return x, rms, cond


@dataclass(frozen=True)
class FitResult:
    """Estimated coefficients of n**(-j/2), j = 0..degree."""

    k: int
    degree: int
    n_min: int
    n_max: int
    npoints: int
    bits: int
    estimates: tuple[mpmath.mpf, ...]
    residual_rms: mpmath.mpf
    condition: mpmath.mpf

    def _digits(self) -> int:
        return self.bits * 30103 // 100000 + 3

    def to_json_dict(self) -> dict:
        d = self._digits()
        return {
            "k": self.k,
            "degree": self.degree,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "npoints": self.npoints,
            "precision_bits": self.bits,
            "estimates": [mpmath.nstr(e, d) for e in self.estimates],
            "residual_rms": mpmath.nstr(self.residual_rms, d),
            "condition": mpmath.nstr(self.condition, 8),
        }


def lsq_fit(
    k: int,
    degree: int,
    n_min: int,
    n_max: int,
    bits: int = 256,
    values: dict[int, Fraction] | None = None,
) -> FitResult:
    """Fit c(n, n+k) / n**(n + (3k-1)/2) by a polynomial in n**(-1/2).

    `values` overrides the exact counts (used for synthetic-data tests);
    entries are the normalized values as exact rationals or floats keyed
    by n.
    """
    ns = list(range(n_min, n_max + 1))
    if len(ns) < degree + 1:
        raise InsufficientPoints(f"{len(ns)} points cannot fix {degree + 1} coefficients")
    with mpmath.workprec(bits):
        xs = [1 / mpmath.sqrt(n) for n in ns]
        ys = []
        for n in ns:
            if values is not None:
                v = values[n]
                if isinstance(v, Fraction):
                    ys.append(mpmath.mpf(v.numerator) / v.denominator)
                else:
                    ys.append(mpmath.mpf(v))
            else:
                c = exact_count_via_t(n, k)
                scale = mpmath.power(n, n + mpmath.mpf(3 * k - 1) / 2)
                ys.append(mpmath.mpf(c) / scale)
        x_lo, x_hi = min(xs), max(xs)
        halfspan = (x_hi - x_lo) / 2
        center = (x_hi + x_lo) / 2
        ss = [(x - center) / halfspan for x in xs]
        rows = []
        for s in ss:
            row = [mpmath.mpf(1)]
            for _ in range(degree):
                row.append(row[-1] * s)
            rows.append(row)
        sol, rms, cond = _qr_solve(rows, ys)
        if cond > mpmath.power(2, bits // 2):
            raise IllConditioned(
                f"condition estimate {mpmath.nstr(cond, 5)} exceeds 2**{bits // 2}"
            )
        # map back: b(s) with s = (x - center)/halfspan, by Horner over x-polys
        inv = 1 / halfspan
        lin = [-center * inv, inv]  # s as a polynomial in x
        acc = [mpmath.mpf(0)]
        for c in reversed(sol):
            nxt = [mpmath.mpf(0)] * (len(acc) + 1)
            for i, ai in enumerate(acc):
                nxt[i] += ai * lin[0]
                nxt[i + 1] += ai * lin[1]
            while len(nxt) > 1 and nxt[-1] == 0:
                nxt.pop()
            nxt[0] += c
            acc = nxt
        acc += [mpmath.mpf(0)] * (degree + 1 - len(acc))
        return FitResult(
            k=k,
            degree=degree,
            n_min=n_min,
            n_max=n_max,
            npoints=len(ns),
            bits=bits,
            estimates=tuple(acc),
            residual_rms=+rms,
            condition=+cond,
        )


def reconstruct_symbolic(
    value: mpmath.mpf, max_denominator: int, tolerance: float = 1e-8
) -> SymConst | None:
    """Match a float against p/q or (p/q)*xi with bounded denominator.

    A candidate p/q only counts when err * q**2 <= 1/100, i.e. when the value
    sits at least 100x closer to p/q than the generic spacing of denominator-q
    rationals; otherwise any wide tolerance would "identify" an arbitrary
    float.  Among qualifying candidates within tolerance the smaller
    denominator wins; on a denominator tie the plain rational is preferred.
    Returns None when nothing qualifies.
    """
    with mpmath.workprec(max(mpmath.mp.prec, 256)):
        x = mpmath.mpf(value)
        xi = mpmath.sqrt(2 * mpmath.pi)
        candidates = []
        for is_xi, target in ((0, x), (1, x / xi)):
            r = _to_fraction(target).limit_denominator(max_denominator)
            cand = SymConst.xi(r) if is_xi else SymConst.rational(r)
            err = abs(mpmath.mpf(r.numerator) / r.denominator * (xi if is_xi else 1) - x)
            if err <= tolerance and err * r.denominator**2 <= 0.01:
                candidates.append((r.denominator, is_xi, err, cand))
        if not candidates:
            return None
        candidates.sort(key=lambda t: (t[0], t[1]))
        return candidates[0][3]
