"""Walkthrough: high-precision numerics against the exact closed forms.

Every closed form is checked two independent ways: evaluating its basis
symbols through accelerated Dirichlet sums and differentiated reflection
formulas, and integrating the defining integral with double-exponential
quadrature.  The two routes agree far beyond the 25 digits demanded of them.
Run:  python demos/03_numeric_crosscheck.py
"""

from mpmath import mp

from arcmellin import (
    eval_closed_form,
    phi_odd_closed_form,
    quad_c_constant,
    quad_phi,
    quad_sinh_over_z,
    sinh_over_z_integral,
)
from arcmellin.catalog import C1_CLOSED_FORM, C2_CLOSED_FORM


def main():
    prec = 30
    print(f"Working precision: {prec} digits\n")

    for q, n_exp, s in ((1, 4, 3), (2, 6, 5), (3, 8, 7)):
        form = sinh_over_z_integral(q, n_exp)
        symbolic = eval_closed_form(form, prec)
        quad = quad_sinh_over_z(q, n_exp, prec)
        with mp.workdps(prec + 15):
            diff = abs(symbolic - quad.value)
        print(f"sinh^{2*q}/(z cosh^{n_exp}):")
        print(f"  symbolic   = {mp.nstr(symbolic, prec)}")
        print(f"  quadrature = {mp.nstr(quad.value, prec)}  "
              f"({quad.nodes_used} nodes, estimate {mp.nstr(quad.error_estimate, 2)})")
        print(f"  |diff|     = {mp.nstr(diff, 2)}\n")

    print("Odd Mellin values through the negative-argument basis agree too:")
    for which, n in ((1, 1), (2, 2)):
        a = eval_closed_form(phi_odd_closed_form(which, n), prec)
        b = quad_phi(which, 2 * n + 1, prec).value
        with mp.workdps(prec + 15):
            print(f"  transform {which}, s={2*n+1}: |neg-basis - quad| = {mp.nstr(abs(a - b), 2)}")

    print("\nThe two expansion constants at s -> 1+, to 30 digits:")
    for which, form in ((1, C1_CLOSED_FORM), (2, C2_CLOSED_FORM)):
        closed = eval_closed_form(form, prec)
        quad = quad_c_constant(which, prec).value
        print(f"  C{which} closed form = {mp.nstr(closed, prec)}")
        print(f"  C{which} quadrature  = {mp.nstr(quad, prec)}")


if __name__ == "__main__":
    main()
