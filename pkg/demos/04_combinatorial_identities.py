"""Walkthrough: the vanishing identities behind the closed forms.

The residue pipeline works because several binomial / Eulerian / kernel
sums vanish on an initial segment and hit a clean closed value at the
boundary.  All of them are decided here in exact rational arithmetic.
Run:  python demos/04_combinatorial_identities.py
"""

from arcmellin import IdentityFamily, binomial, run_identity


def main():
    print("One family in full, n = 3:")
    print("  sum_k (-1)^k C(7,k) (7-2k)^{2j+1} for j = 0..3:")
    for j in range(4):
        value = sum((-1) ** k * binomial(7, k) * (7 - 2 * k) ** (2 * j + 1) for k in range(4))
        note = "vanishes" if j < 3 else "= 4^3 * 7!"
        print(f"    j={j}: {value:>8}   {note}")

    print("\nAll suites over their default ranges:")
    for family in (
        IdentityFamily.ALT_BINOM_ODD,
        IdentityFamily.ALT_BINOM_EVEN,
        IdentityFamily.C_ODD_POWER,
        IdentityFamily.EULERIAN_A_SUM,
        IdentityFamily.EULERIAN_B_SUM,
        IdentityFamily.BINOM_COSH_SUM,
        IdentityFamily.VANISHING,
        IdentityFamily.ETA_COEFF,
        IdentityFamily.ZETA2_COEFF,
        IdentityFamily.D_IDENTITY,
        IdentityFamily.EULER_BERNOULLI,
    ):
        print(" ", run_identity(family).summary())


if __name__ == "__main__":
    main()
