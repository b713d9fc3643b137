"""Walkthrough: bounds, the coupled series, and even-argument partial sums.

Both transforms are pinched between elementary envelopes, satisfy a pair of
mutually recursive series identities, and admit central-binomial series at
even arguments whose exact summands this package produces.
Run:  python demos/05_bounds_and_series.py
"""

from mpmath import mp, mpf

from arcmellin import (
    check_asymptotic_constants,
    check_bounds,
    check_coupled,
    mellin_even_partial,
    quad_phi,
)


def main():
    print("Envelope check on a grid of s:")
    report = check_bounds(s_grid=("1.1", "2", "5", "25"), prec=25)
    for cell in report.cells:
        print(f"  s={cell.params[0]:>4} {cell.params[1]}: {'ok' if cell.ok else 'VIOLATED'}")

    print("\nCoupled series at s = 4, truncation 30:")
    for cell in check_coupled(4, truncation=30, prec=25).cells:
        print(f"  {cell.params[1]}: {cell.detail}")

    print("\nExpansion constants near the pole at s = 1:")
    for cell in check_asymptotic_constants(prec=25).cells:
        if cell.params[1] == "limit-trend":
            print(f"  {cell.params[0]} |Phi(1+eps) - 1/eps - C| for eps = 1e-1..1e-6:")
            print(f"    {cell.detail}")

    print("\nEven arguments: partial sums of the central-binomial series.")
    print("Phi_2(4) = pi 2^{-3} * sum of exact terms; the terms decay slowly,")
    print("so a couple of hundred still only give two digits:")
    m = 2
    terms = mellin_even_partial(2, m, 200)
    with mp.workdps(40):
        partial = mp.pi * mpf(2) ** (1 - 2 * m) * sum(
            mpf(t.numerator) / t.denominator for t in terms
        )
        direct = quad_phi(2, 2 * m, 25).value
        print(f"  partial sum (200 terms) = {mp.nstr(partial, 12)}")
        print(f"  quadrature              = {mp.nstr(direct, 12)}")
        print(f"  |difference|            = {mp.nstr(abs(partial - direct), 3)}")


if __name__ == "__main__":
    main()
