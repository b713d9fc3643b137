"""Walkthrough: odd-argument Mellin values over the negative-argument basis.

The Mellin transforms of 1/arctanh(x) and 1/(sqrt(1-x^2) arctanh(x)) at odd
integers s = 2n+1 are rational combinations of eta'(-1), eta'(-3), ... and
beta'(0), beta'(-2), ... respectively.  The coefficients come from the two
root-product coefficient triangles.
Run:  python demos/02_odd_mellin_values.py
"""

from fractions import Fraction

from arcmellin import (
    eta_prime_neg_coeffs,
    phi_odd_closed_form,
    root_product_tables,
)


def main():
    print("The coefficient triangles (rows n = 0..4):")
    tables = root_product_tables(4)
    for n in range(5):
        row_int = [tables.integer_root(k, n) for k in range(n + 1)]
        row_odd = [tables.odd_root(k, n) for k in range(n + 1)]
        print(f"  n={n}:  integer-root {row_int}   odd-root {row_odd}")

    print("\nOdd values of the plain transform, int_0^1 x^{2n}/arctanh(x) dx:")
    for n in range(1, 5):
        print(f"  s={2 * n + 1}:  {phi_odd_closed_form(1, n).latex()}")

    print("\nOdd values of the weighted transform:")
    for n in range(1, 5):
        print(f"  s={2 * n + 1}:  {phi_odd_closed_form(2, n).latex()}")

    print("\nThe leading coefficient obeys a clean law: coeff of eta'(-1) is")
    print("4/(2n+1) for every n.")
    for n in (1, 7, 25, 50):
        lead = eta_prime_neg_coeffs(n)[0]
        assert lead == Fraction(4, 2 * n + 1)
        print(f"  n={n:3d}: {lead}")


if __name__ == "__main__":
    main()
