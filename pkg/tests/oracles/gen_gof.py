"""Print frozen oracle values for tests/test_gof.py.

The three Anderson-Darling variants are defined by weighted Cramer-von
Mises integrals of the squared empirical-cdf discrepancy,

    AD   = n * int (Fn(u) - u)^2 / (u (1 - u)) du      over (0, 1)
    ADR  = n * int (Fn(u) - u)^2 / (1 - u)     du
    AD2R = n * int (Fn(u) - u)^2 / (1 - u)^2   du

where Fn is the empirical cdf of the probability-transformed sample.  For
a tiny sample the integrals are evaluated piecewise with mpmath (the
empirical cdf is constant between order statistics, so each piece is
smooth) and compared against an independent hand-expansion of the
order-statistic sum formulas.  Both routes agree to 25+ digits before the
values are frozen.

    python3 tests/oracles/gen_gof.py
"""

import mpmath as mp

mp.mp.dps = 30


def empirical_cdf(points):
    pts = sorted(points)

    def fn(u):
        return mp.mpf(sum(1 for p in pts if p <= u)) / len(pts)

    return fn


def integral_stat(points, weight):
    n = len(points)
    fn = empirical_cdf(points)
    edges = [mp.mpf(0)] + [mp.mpf(p) for p in sorted(points)] + [mp.mpf(1)]
    total = mp.mpf(0)
    for lo, hi in zip(edges[:-1], edges[1:]):
        if hi > lo:
            mid = (lo + hi) / 2
            level = fn(mid)
            total += mp.quad(lambda u: (level - u) ** 2 * weight(u), [lo, hi])
    return n * total


def sum_stats(points):
    """Direct expansion of the order-statistic formulas."""
    u = sorted(mp.mpf(p) for p in points)
    n = len(u)
    rev = u[::-1]
    ad = -n - sum((2 * i + 1) * (mp.log(u[i]) + mp.log(1 - rev[i])) for i in range(n)) / n
    adr = mp.mpf(n) / 2 - 2 * sum(u) - sum((2 * i + 1) * mp.log(1 - rev[i]) for i in range(n)) / n
    ad2r = 2 * sum(mp.log(1 - ui) for ui in u) + sum((2 * i + 1) / (1 - rev[i]) for i in range(n)) / n
    return ad, adr, ad2r


def main():
    weights = {
        "ad": lambda u: 1 / (u * (1 - u)),
        "adr": lambda u: 1 / (1 - u),
        "ad2r": lambda u: 1 / (1 - u) ** 2,
    }
    for points in ([0.25, 0.75], [0.1, 0.4, 0.65, 0.9]):
        print(f"u = {points}")
        sums = dict(zip(("ad", "adr", "ad2r"), sum_stats(points)))
        for name, w in weights.items():
            integral = integral_stat(points, w)
            gap = abs(integral - sums[name])
            print(f"  {name:5s} sum={mp.nstr(sums[name], 17)}  integral gap={mp.nstr(gap, 3)}")

    # perfectly calibrated plotting positions
    n = 10**4
    u = [(mp.mpf(i) - mp.mpf(1) / 2) / n for i in range(1, n + 1)]
    ad, adr, ad2r = sum_stats(u)
    print(f"plotting positions n={n}: ad={mp.nstr(ad, 12)} adr={mp.nstr(adr, 12)} ad2r={mp.nstr(ad2r, 12)}")


if __name__ == "__main__":
    main()
