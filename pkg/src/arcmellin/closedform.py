"""Symbolic closed forms over a fixed transcendental basis.

Every integral family handled by this package evaluates to a rational linear
combination of the basis symbols

    1,  ln 2,  ln pi,
    zeta'(2p+2) / pi^{2p+2},   beta'(2p+1) / pi^{2p+1}      (p >= 0),
    eta'(-2i-1),               beta'(-2i)                   (i >= 0),

and a :class:`ClosedForm` is exactly such a combination: a map from
:class:`BasisSymbol` to ``Fraction`` with no zero entries.  Equality is exact
and structural; nothing in this module ever touches floating point.

The three integral families and their coefficient pipelines:

* ``log_integral_odd_cosh(q, n)``:
      I(q, n) = int_0^oo sinh^{2q+1}(z) ln(z) / cosh^{2n+1}(z) dz
              = sum_p H[p] zeta'(2p+2)/pi^{2p+2} + I0 + J ln(pi) + (K - J) ln(2)
  where, with S[p] = sum_{m=p+1}^{n} c[2n-2m] / (2m)! * C(2m, 2p+2) * W(q, m-p-1),
  c[j] the x^j coefficient of (x/sinh x)^{2n+1} and W the binomial power sum,
      H[p] = (-1)^{q+n+p} 2 (2p+1)! (2^{2p+2} - 1) S[p],
      J    = (-1)^{q+n+1} sum_p 2^{2p+1} (2^{2p+2}-1) B_{2p+2} S[p] / (p+1),
      K    = (-1)^{q+n}   sum_p 2^{2p+1}              B_{2p+2} S[p] / (p+1),
      I0   = (-1)^{q+n}   sum_p 2^{2p+1} (2^{2p+2}-1) B_{2p+2} H_{2p+1} S[p] / (p+1).

* ``log_integral_even_cosh(q, n)``: the cosh^{2n} analogue, expanding over
  beta'(2p+1)/pi^{2p+1} with Euler-number coefficients in place of Bernoulli.

* ``sinh_over_z_integral(q, N)``:
      int_0^oo sinh^{2q}(z) / (z cosh^N(z)) dz
  assembled by one integration by parts as
      -2q * log_integral(q-1, N-1)  +  N * log_integral(q, N+1),
  after which the ln(pi) contributions cancel identically (this is checked,
  not assumed).

* ``phi_odd_closed_form(which, n)``: the odd-argument values of the two
  Mellin transforms on (0, 1),
      int_0^1 x^{2n} / arctanh(x) dx                  (which = 1),
      int_0^1 x^{2n} / (sqrt(1-x^2) arctanh(x)) dx    (which = 2),
  expanded over eta'(-2i-1) resp. beta'(-2i) with coefficients built from the
  root-product triangles.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .exact import DomainError, bernoulli, binomial, euler_number, harmonic
from .series import (
    binomial_power_sum,
    reciprocal_arctanh_coeffs,
    root_product_tables,
    x_over_sinh_coeffs,
)

_KINDS = (
    "zeta_prime_ratio",
    "beta_prime_ratio",
    "eta_prime_neg",
    "beta_prime_neg",
    "one",
    "lnpi",
    "ln2",
)
_RANK = {kind: i for i, kind in enumerate(_KINDS)}
_INDEXED = frozenset(_KINDS[:4])
_INDEX_KEY = {
    "zeta_prime_ratio": "p",
    "beta_prime_ratio": "p",
    "eta_prime_neg": "i",
    "beta_prime_neg": "i",
}


@dataclass(frozen=True, order=False)
class BasisSymbol:
    """One transcendental basis term; totally ordered for canonical output."""

    kind: str
    index: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _RANK:
            raise DomainError(f"unknown basis symbol kind {self.kind!r}")
        if self.kind in _INDEXED:
            if self.index is None or self.index < 0:
                raise DomainError(f"{self.kind} requires an index >= 0")
        elif self.index is not None:
            raise DomainError(f"{self.kind} takes no index")

    def sort_key(self) -> tuple[int, int]:
        return (_RANK[self.kind], self.index or 0)

    def __lt__(self, other: "BasisSymbol") -> bool:
        return self.sort_key() < other.sort_key()

    def latex(self) -> str:
        if self.kind == "zeta_prime_ratio":
            e = 2 * self.index + 2
            return rf"\frac{{\zeta'({e})}}{{\pi^{{{e}}}}}"
        if self.kind == "beta_prime_ratio":
            e = 2 * self.index + 1
            denom = r"\pi" if e == 1 else rf"\pi^{{{e}}}"
            return rf"\frac{{\beta'({e})}}{{{denom}}}"
        if self.kind == "eta_prime_neg":
            return rf"\eta'({-(2 * self.index + 1)})"
        if self.kind == "beta_prime_neg":
            return rf"\beta'({-2 * self.index})"
        if self.kind == "lnpi":
            return r"\ln \pi"
        if self.kind == "ln2":
            return r"\ln 2"
        return ""  # "one": the coefficient stands alone


ONE = BasisSymbol("one")
LNPI = BasisSymbol("lnpi")
LN2 = BasisSymbol("ln2")


def zeta_prime_ratio(p: int) -> BasisSymbol:
    """zeta'(2p+2) / pi^{2p+2}."""
    return BasisSymbol("zeta_prime_ratio", p)


def beta_prime_ratio(p: int) -> BasisSymbol:
    """beta'(2p+1) / pi^{2p+1}."""
    return BasisSymbol("beta_prime_ratio", p)


def eta_prime_neg_symbol(i: int) -> BasisSymbol:
    """eta'(-2i-1)."""
    return BasisSymbol("eta_prime_neg", i)


def beta_prime_neg_symbol(i: int) -> BasisSymbol:
    """beta'(-2i)."""
    return BasisSymbol("beta_prime_neg", i)


class ClosedForm:
    """Rational linear combination of basis symbols; exact, immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[BasisSymbol, Fraction] | Iterable[tuple[BasisSymbol, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[BasisSymbol, Fraction] = {}
        for sym, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                acc[sym] = acc.get(sym, Fraction(0)) + coeff
        object.__setattr__(self, "_terms", {s: c for s, c in acc.items() if c})

    def __setattr__(self, *_args) -> None:
        raise AttributeError("ClosedForm is immutable")

    def coefficient(self, symbol: BasisSymbol) -> Fraction:
        return self._terms.get(symbol, Fraction(0))

    def items(self) -> list[tuple[BasisSymbol, Fraction]]:
        """Terms in canonical symbol order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def symbols(self) -> list[BasisSymbol]:
        return [s for s, _ in self.items()]

    def __iter__(self) -> Iterator[tuple[BasisSymbol, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClosedForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __add__(self, other: "ClosedForm") -> "ClosedForm":
        merged = dict(self._terms)
        for sym, coeff in other._terms.items():
            merged[sym] = merged.get(sym, Fraction(0)) + coeff
        return ClosedForm(merged)

    def __sub__(self, other: "ClosedForm") -> "ClosedForm":
        return self + other.scale(-1)

    def scale(self, c) -> "ClosedForm":
        c = Fraction(c)
        return ClosedForm({s: c * v for s, v in self._terms.items()})

    def __mul__(self, c) -> "ClosedForm":
        return self.scale(c)

    __rmul__ = __mul__

    @staticmethod
    def combine(pairs: Iterable[tuple[Fraction, "ClosedForm"]]) -> "ClosedForm":
        """sum of coeff * form over the given pairs."""
        total = ClosedForm()
        for coeff, form in pairs:
            total = total + form.scale(coeff)
        return total

    def to_json(self) -> str:
        terms = []
        for sym, coeff in self.items():
            entry: dict[str, object] = {"symbol": sym.kind}
            if sym.kind in _INDEXED:
                entry[_INDEX_KEY[sym.kind]] = sym.index
            entry["coeff"] = f"{coeff.numerator}/{coeff.denominator}"
            terms.append(entry)
        return json.dumps({"terms": terms})

    @staticmethod
    def from_json(text: str) -> "ClosedForm":
        data = json.loads(text)
        pairs = []
        for entry in data["terms"]:
            kind = entry["symbol"]
            if kind not in _RANK:
                raise DomainError(f"unknown symbol {kind!r} in JSON closed form")
            index = entry.get(_INDEX_KEY[kind]) if kind in _INDEXED else None
            num, _, den = entry["coeff"].partition("/")
            pairs.append((BasisSymbol(kind, index), Fraction(int(num), int(den or "1"))))
        return ClosedForm(pairs)

    def latex(self) -> str:
        """Render in display style: derivative ratios ascending, then the
        rational constant, then ln pi, then ln 2."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for sym, coeff in self.items():
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if mag.denominator == 1:
                body = str(mag.numerator)
            else:
                body = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            symtex = sym.latex()
            if symtex:
                term = symtex if mag == 1 else rf"{body}\,{symtex}"
            else:
                term = body
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        out = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    def __repr__(self) -> str:
        inner = ", ".join(f"{s.kind}[{s.index}]: {c}" if s.index is not None else f"{s.kind}: {c}"
                          for s, c in self.items())
        return f"ClosedForm({{{inner}}})"


def s_coeff(p: int, q: int, n: int) -> Fraction:
    """Weighted kernel sum S(p, q, n) feeding every cosh^{2n+1} coefficient.

    S = sum_{m=p+1}^{n} c[2n-2m] / (2m)! * C(2m, 2p+2) * W(q, m-p-1), with
    c the (x/sinh x)^{2n+1} coefficients and W the binomial power sum.
    """
    if q < 0:
        raise DomainError("s_coeff requires q >= 0")
    if not 0 <= p <= n - 1:
        raise DomainError(f"s_coeff requires 0 <= p <= n-1, got p={p}, n={n}")
    c = x_over_sinh_coeffs(2 * n + 1, 2 * n)
    return sum(
        (
            c[2 * n - 2 * m]
            / math.factorial(2 * m)
            * binomial(2 * m, 2 * p + 2)
            * binomial_power_sum(q, m - p - 1)
        )
        for m in range(p + 1, n + 1)
    )


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@lru_cache(maxsize=None)
def log_integral_odd_cosh(q: int, n: int) -> ClosedForm:
    """Closed form of int_0^oo sinh^{2q+1}(z) ln(z) / cosh^{2n+1}(z) dz.

    Requires 2q+1 < 2n+1 (i.e. 0 <= q <= n-1) for convergence.
    """
    if n < 1 or q < 0 or q > n - 1:
        raise DomainError(
            f"convergence requires 2q+1 < 2n+1 with q >= 0, n >= 1; got q={q}, n={n}"
        )
    s_vals = [s_coeff(p, q, n) for p in range(n)]
    pairs: list[tuple[BasisSymbol, Fraction]] = []
    for p, s in enumerate(s_vals):
        h_coeff = (
            _sign(q + n + p)
            * 2
            * math.factorial(2 * p + 1)
            * (2 ** (2 * p + 2) - 1)
            * s
        )
        pairs.append((zeta_prime_ratio(p), h_coeff))
    j_coeff = _sign(q + n + 1) * sum(
        Fraction(2 ** (2 * p + 1) * (2 ** (2 * p + 2) - 1), p + 1) * bernoulli(2 * p + 2) * s_vals[p]
        for p in range(n)
    )
    k_coeff = _sign(q + n) * sum(
        Fraction(2 ** (2 * p + 1), p + 1) * bernoulli(2 * p + 2) * s_vals[p]
        for p in range(n)
    )
    i_coeff = _sign(q + n) * sum(
        Fraction(2 ** (2 * p + 1) * (2 ** (2 * p + 2) - 1), p + 1)
        * bernoulli(2 * p + 2)
        * harmonic(2 * p + 1)
        * s_vals[p]
        for p in range(n)
    )
    pairs += [(ONE, i_coeff), (LNPI, j_coeff), (LN2, k_coeff - j_coeff)]
    return ClosedForm(pairs)


@lru_cache(maxsize=None)
def log_integral_even_cosh(q: int, n: int) -> ClosedForm:
    """Closed form of int_0^oo sinh^{2q+1}(z) ln(z) / cosh^{2n}(z) dz.

    Requires 2q+1 < 2n (i.e. 0 <= q <= n-1) for convergence.
    """
    if n < 1 or q < 0 or q > n - 1:
        raise DomainError(
            f"convergence requires 2q+1 < 2n with q >= 0, n >= 1; got q={q}, n={n}"
        )
    d = x_over_sinh_coeffs(2 * n, 2 * n)
    pairs: list[tuple[BasisSymbol, Fraction]] = []
    for p in range(n):
        l_coeff = (
            _sign(q + n + p)
            * 2 ** (2 * p + 2)
            * math.factorial(2 * p)
            * sum(
                d[2 * n - 2 * m - 2]
                / math.factorial(2 * m + 1)
                * binomial(2 * m + 1, 2 * m - 2 * p)
                * binomial_power_sum(q, m - p)
                for m in range(p, n)
            )
        )
        pairs.append((beta_prime_ratio(p), l_coeff))
    n_coeff = _sign(q + n + 1) * sum(
        d[2 * n - 2 * m - 2]
        / math.factorial(2 * m + 1)
        * sum(
            binomial(2 * m + 1, 2 * m - 2 * p)
            * binomial_power_sum(q, m - p)
            * euler_number(2 * p)
            for p in range(m + 1)
        )
        for m in range(n)
    )
    m_coeff = _sign(q + n) * sum(
        d[2 * n - 2 * m - 2]
        / math.factorial(2 * m + 1)
        * sum(
            binomial(2 * m + 1, 2 * m - 2 * p)
            * binomial_power_sum(q, m - p)
            * harmonic(2 * p)
            * euler_number(2 * p)
            for p in range(m + 1)
        )
        for m in range(n)
    )
    pairs += [(ONE, m_coeff), (LNPI, n_coeff), (LN2, -n_coeff)]
    return ClosedForm(pairs)


@lru_cache(maxsize=None)
def sinh_over_z_integral(q: int, n_exponent: int) -> ClosedForm:
    """Closed form of int_0^oo sinh^{2q}(z) / (z cosh^N(z)) dz, N = n_exponent.

    Requires 0 < 2q < N.  Built from the two neighbouring log-integral closed
    forms; the resulting ln(pi) coefficient must cancel to exactly zero and is
    verified here rather than assumed.
    """
    N = n_exponent
    if not 0 < 2 * q < N:
        raise DomainError(f"convergence requires 0 < 2q < N; got q={q}, N={N}")
    if N % 2 == 0:
        lower = log_integral_odd_cosh(q - 1, (N - 2) // 2)
        upper = log_integral_odd_cosh(q, N // 2)
    else:
        lower = log_integral_even_cosh(q - 1, (N - 1) // 2)
        upper = log_integral_even_cosh(q, (N + 1) // 2)
    form = lower.scale(-2 * q) + upper.scale(N)
    residue = form.coefficient(LNPI)
    if residue != 0:
        raise AssertionError(
            f"ln(pi) coefficient failed to cancel for (q={q}, N={N}): {residue}"
        )
    return form


def eta_prime_neg_coeffs(n: int) -> tuple[Fraction, ...]:
    """Coefficients of eta'(-2i-1), i = 0..n, in the odd Mellin value of
    the 1/arctanh transform at s = 2n+1."""
    if n < 1:
        raise DomainError("odd Mellin values require n >= 1 (s = 1 is a pole)")
    tables = root_product_tables(n)
    return tuple(
        sum(
            Fraction(binomial(n, k) * 2 ** (2 * k + 2), math.factorial(2 * k + 1))
            * tables.integer_root(i, k)
            for k in range(i, n + 1)
        )
        for i in range(n + 1)
    )


def beta_prime_neg_coeffs(n: int) -> tuple[Fraction, ...]:
    """Coefficients of beta'(-2i), i = 0..n, in the odd Mellin value of the
    1/(sqrt(1-x^2) arctanh) transform at s = 2n+1."""
    if n < 1:
        raise DomainError("odd Mellin values require n >= 1 (s = 1 is a pole)")
    tables = root_product_tables(n)
    return tuple(
        sum(
            Fraction(binomial(n, k) * 2, math.factorial(2 * k))
            * tables.odd_root(i, k)
            for k in range(i, n + 1)
        )
        for i in range(n + 1)
    )


def phi_odd_closed_form(which: int, n: int) -> ClosedForm:
    """Odd-argument Mellin value Phi_which(2n+1) over the negative-argument
    derivative basis (eta'(-2i-1) for which=1, beta'(-2i) for which=2)."""
    if which not in (1, 2):
        raise DomainError(f"which must be 1 or 2, got {which}")
    if n < 1:
        raise DomainError("n must be >= 1: the transforms have a pole at s = 1")
    if which == 1:
        coeffs = eta_prime_neg_coeffs(n)
        return ClosedForm((eta_prime_neg_symbol(i), c) for i, c in enumerate(coeffs))
    coeffs = beta_prime_neg_coeffs(n)
    return ClosedForm((beta_prime_neg_symbol(i), c) for i, c in enumerate(coeffs))


@dataclass(frozen=True)
class IntegralSpec:
    """Tagged description of one integral request.

    Families and parameters (mirroring the construction functions):

    * ``"log-odd"``: sinh^{2q+1} ln z / cosh^{2n+1}, needs 0 <= q <= n-1;
    * ``"log-even"``: sinh^{2q+1} ln z / cosh^{2n}, needs 0 <= q <= n-1;
    * ``"sinh-over-z"``: sinh^{2q} / (z cosh^n) with the full exponent in
      ``n``, needs 0 < 2q < n;
    * ``"phi1"`` / ``"phi2"``: the Mellin transform at argument ``s`` > 1.

    Construction is validated eagerly, so holding an IntegralSpec means the
    request converges.
    """

    family: str
    q: int | None = None
    n: int | None = None
    s: object = None

    _LOG_FAMILIES = ("log-odd", "log-even")

    def __post_init__(self) -> None:
        if self.family in self._LOG_FAMILIES:
            if self.q is None or self.n is None or not 0 <= self.q <= self.n - 1:
                raise DomainError(
                    f"{self.family} requires 0 <= q <= n-1, got q={self.q}, n={self.n}"
                )
        elif self.family == "sinh-over-z":
            if self.q is None or self.n is None or not 0 < 2 * self.q < self.n:
                raise DomainError(
                    f"sinh-over-z requires 0 < 2q < n, got q={self.q}, n={self.n}"
                )
        elif self.family in ("phi1", "phi2"):
            if self.s is None or not Fraction(str(self.s)) > 1:
                raise DomainError(f"{self.family} requires s > 1, got s={self.s}")
        else:
            raise DomainError(f"unknown integral family {self.family!r}")

    def closed_form(self) -> ClosedForm:
        """The exact closed form, where one exists.

        Mellin-transform requests admit a finite closed form only at odd
        integer arguments s = 2n+1 >= 3; anything else raises.
        """
        if self.family == "log-odd":
            return log_integral_odd_cosh(self.q, self.n)
        if self.family == "log-even":
            return log_integral_even_cosh(self.q, self.n)
        if self.family == "sinh-over-z":
            return sinh_over_z_integral(self.q, self.n)
        s = Fraction(str(self.s))
        if s.denominator != 1 or s < 3 or s.numerator % 2 == 0:
            raise DomainError(
                f"no finite closed form at s={self.s}; odd integers s >= 3 only"
            )
        return phi_odd_closed_form(1 if self.family == "phi1" else 2, (s.numerator - 1) // 2)


def mellin_even_partial(which: int, m: int, terms: int) -> list[Fraction]:
    """Exact leading summands of the even-argument Mellin value series.

    For which=2 the series for Phi_2(2m) / (pi 2^{1-2m}) has terms
        p_n 4^{-n} C(2(m+n-1), m+n-1),
    and for which=1 the series for Phi_1(2m) / (pi 2^{1-2m}) has terms
        q_n 4^{-n} C(2(m+n-1), m+n-1) / (2(m+n)),
    where p_n, q_n are the reciprocal-arctanh expansion coefficients.  The
    caller supplies the pi 2^{1-2m} prefactor at evaluation time.
    """
    if which not in (1, 2):
        raise DomainError(f"which must be 1 or 2, got {which}")
    if m < 1 or terms < 1:
        raise DomainError("requires m >= 1 and terms >= 1")
    rc = reciprocal_arctanh_coeffs(terms - 1)
    out = []
    for n in range(terms):
        central = Fraction(binomial(2 * (m + n - 1), m + n - 1), 4**n)
        if which == 2:
            out.append(rc.inv_arctanh[n] * central)
        else:
            out.append(rc.inv_sqrt_arctanh[n] * central / (2 * (m + n)))
    return out
