"""Independent reference implementations used only by the test suite.

Everything here is deliberately written against different identities (or by
plain exhaustion) than the library code, so agreement is meaningful.
"""

from fractions import Fraction
from itertools import combinations
from math import comb, factorial


def brute_force_connected(n: int, m: int) -> int:
    """Count connected labelled graphs on n nodes with m edges by exhaustion.

    Only sane for n <= 7 (2**21 edge subsets).
    """
    if n == 1:
        return 1 if m == 0 else 0
    edges = list(combinations(range(n), 2))
    total = 0
    for subset in combinations(edges, m):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in subset:
            parent[find(u)] = find(v)
        if len({find(v) for v in range(n)}) == 1:
            total += 1
    return total


def connected_counts_via_log(n_max: int, w_cap: int) -> list[list[Fraction]]:
    """Rows of C(z, w) = log G(z, w) computed through C' = G'/G.

    Returns r with r[n][m] = c(n, m)/n! for m <= w_cap.  Uses a genuine
    series reciprocal followed by one product and a term-wise integration,
    rather than the component-rooting recurrence the library uses.
    """
    wz = w_cap + 1

    def wmul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * wz
        for a, pa in enumerate(p):
            if not pa:
                continue
            for b in range(wz - a):
                qb = q[b]
                if qb:
                    out[a + b] += pa * qb
        return out

    # g[n][m] = binom(binom(n,2), m)/n!, the EGF of all graphs (g[0] = 1).
    g: list[list[Fraction]] = []
    for n in range(n_max + 1):
        fn = factorial(n)
        row = [Fraction(comb(comb(n, 2), m), fn) for m in range(wz)]
        g.append(row)

    # inv = 1/G in the z-direction (coefficients are w-polynomials).
    inv: list[list[Fraction]] = [[Fraction(0)] * wz for _ in range(n_max + 1)]
    inv[0][0] = Fraction(1)
    for n in range(1, n_max + 1):
        acc = [Fraction(0)] * wz
        for j in range(1, n + 1):
            prod = wmul(g[j], inv[n - j])
            for m in range(wz):
                acc[m] -= prod[m]
        inv[n] = acc

    # C' = G' * (1/G); integrate: c[n] = (G' * inv)[n-1] / n.
    c: list[list[Fraction]] = [[Fraction(0)] * wz for _ in range(n_max + 1)]
    for n in range(1, n_max + 1):
        acc = [Fraction(0)] * wz
        for j in range(0, n):  # (G')_j = (j+1) g_{j+1}
            gp = [(j + 1) * x for x in g[j + 1]]
            prod = wmul(gp, inv[n - 1 - j])
            for m in range(wz):
                acc[m] += prod[m]
        c[n] = [x / n for x in acc]
    return c


def q_direct(n: int) -> Fraction:
    """Ramanujan's Q as a literal sum of falling-factorial ratios."""
    total = Fraction(0)
    for k in range(1, n + 1):
        num = 1
        for i in range(k):
            num *= n - i
        total += Fraction(num, n**k)
    return total
