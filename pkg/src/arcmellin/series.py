"""Exact formal power series and the coefficient families built from them.

A :class:`PowerSeries` holds finitely many exact Taylor coefficients.  All
arithmetic (addition, multiplication, reciprocal, powers) is closed over
``Fraction`` and truncates to the shortest operand; nothing is extended
silently, so the set of known-correct coefficients is always explicit.

The coefficient families produced here feed the closed-form assembly:

* ``x_over_sinh_coeffs(e, K)`` -- Taylor coefficients of (x / sinh x)^e,
  the kernel weights of the residue expansion of 1 / cosh^e at its poles.
* ``root_product_tables(n)`` -- integer coefficient triangles of the
  polynomials x * prod_{i<=n} (x^2 - i^2)  and  prod_{i<=n} (y^2 - (2i-1)^2),
  generated by the two-term recurrences
      g[k][n] = g[k-1][n-1] - n^2 g[k][n-1],
      h[k][n] = h[k-1][n-1] - (2n-1)^2 h[k][n-1].
* ``binomial_power_sum(q, p)`` -- 4^{-q} sum_{k=0}^{q} C(2q+1,k) (2q+1-2k)^{2p},
  the normalized even-order derivative of sinh^{2q+1} at its imaginary poles.
* ``reciprocal_arctanh_coeffs(N)`` -- expansion coefficients of 1/arctanh(x)
  and 1/(sqrt(1-x^2) arctanh(x)) as sums of x^{2n-1}.
* ``arctanh_squared_coeff(n)`` -- [x^{2n}] arctanh(x)^2.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import DomainError, binomial


@dataclass(frozen=True)
class PowerSeries:
    """Truncated exact power series; ``coeffs[k]`` is the x^k coefficient."""

    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        """Number of known coefficients (indices 0 .. order-1)."""
        return len(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient {k} not computed (order {self.order})")
        return self.coeffs[k]

    def truncate(self, length: int) -> "PowerSeries":
        if length > self.order:
            raise DomainError(
                f"cannot truncate to {length} coefficients, only {self.order} known"
            )
        return PowerSeries(self.coeffs[:length])

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(n)))

    def scale(self, c) -> "PowerSeries":
        c = Fraction(c)
        return PowerSeries(tuple(c * a for a in self.coeffs))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a:
                for j in range(n - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return PowerSeries(tuple(out))

    def reciprocal(self) -> "PowerSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self.order == 0 or self.coeffs[0] == 0:
            raise DomainError("reciprocal requires a nonzero constant term")
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * (self.order - 1)
        for m in range(1, self.order):
            acc = sum(self.coeffs[i] * out[m - i] for i in range(1, m + 1))
            out[m] = -acc * inv0
        return PowerSeries(tuple(out))

    def pow(self, e: int) -> "PowerSeries":
        """e-th power by binary exponentiation, e >= 0."""
        if e < 0:
            raise DomainError("pow exponent must be >= 0")
        result = PowerSeries((Fraction(1),) + (Fraction(0),) * (self.order - 1))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def compose_x_squared(self) -> "PowerSeries":
        """Substitute x -> x^2; the result keeps the same number of coefficients."""
        out = [Fraction(0)] * self.order
        for k, a in enumerate(self.coeffs):
            if 2 * k >= self.order:
                break
            out[2 * k] = a
        return PowerSeries(tuple(out))


def sinh_x_over_x_series(order: int) -> PowerSeries:
    """sinh(x)/x = sum x^{2k} / (2k+1)! up to ``order`` coefficients inclusive."""
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(0, order + 1, 2):
        coeffs[k] = Fraction(1, math.factorial(k + 1))
    return PowerSeries(tuple(coeffs))


def cosh_series(order: int) -> PowerSeries:
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(0, order + 1, 2):
        coeffs[k] = Fraction(1, math.factorial(k))
    return PowerSeries(tuple(coeffs))


def arctanh_over_x_series(order: int) -> PowerSeries:
    """arctanh(x)/x = sum x^{2k} / (2k+1)."""
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(0, order + 1, 2):
        coeffs[k] = Fraction(1, k + 1)
    return PowerSeries(tuple(coeffs))


def inv_sqrt_one_minus_x2_series(order: int) -> PowerSeries:
    """(1-x^2)^{-1/2} = sum C(2k,k) x^{2k} / 4^k."""
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(0, order + 1, 2):
        coeffs[k] = Fraction(binomial(k, k // 2), 4 ** (k // 2))
    return PowerSeries(tuple(coeffs))


@lru_cache(maxsize=None)
def x_over_sinh_coeffs(power: int, order: int) -> tuple[Fraction, ...]:
    """Taylor coefficients 0..order of (x / sinh x)^power.

    Computed as the ``power``-th power of the exact reciprocal of sinh(x)/x.
    Odd-index coefficients are identically zero (the function is even).
    """
    if power < 0 or order < 0:
        raise DomainError("x_over_sinh_coeffs requires power >= 0 and order >= 0")
    base = sinh_x_over_x_series(order).reciprocal()
    return base.pow(power).coeffs


_tables_lock = threading.RLock()
_int_root_rows: list[list[int]] = [[1]]   # rows n, entries k = 0..n
_odd_root_rows: list[list[int]] = [[1]]


def _grow_rows(rows: list[list[int]], n: int, step_factor) -> None:
    while len(rows) <= n:
        m = len(rows)
        prev = rows[m - 1]
        f = step_factor(m)
        row = [
            (prev[k - 1] if k >= 1 else 0) - f * (prev[k] if k < len(prev) else 0)
            for k in range(m + 1)
        ]
        rows.append(row)


@dataclass(frozen=True)
class RootProductTables:
    """Coefficient triangles of the two root-product polynomial families.

    ``integer_root(k, n)`` is the x^{2k+1} coefficient of
    x * prod_{i=1}^{n} (x^2 - i^2), whose roots are 0, +-1, ..., +-n.
    ``odd_root(k, n)`` is the y^{2k} coefficient of
    prod_{i=1}^{n} (y^2 - (2i-1)^2), whose roots are +-1, +-3, ..., +-(2n-1).
    Both are 0 outside 0 <= k <= n.
    """

    max_n: int

    def integer_root(self, k: int, n: int) -> int:
        if k < 0 or n < 0 or k > n:
            return 0
        if n > self.max_n:
            raise DomainError(f"table built to n={self.max_n}, requested n={n}")
        return _int_root_rows[n][k]

    def odd_root(self, k: int, n: int) -> int:
        if k < 0 or n < 0 or k > n:
            return 0
        if n > self.max_n:
            raise DomainError(f"table built to n={self.max_n}, requested n={n}")
        return _odd_root_rows[n][k]


def root_product_tables(n_max: int) -> RootProductTables:
    """Build (or reuse) both triangles up to row ``n_max``."""
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    with _tables_lock:
        _grow_rows(_int_root_rows, n_max, lambda m: m * m)
        _grow_rows(_odd_root_rows, n_max, lambda m: (2 * m - 1) ** 2)
    return RootProductTables(n_max)


def binomial_power_sum(q: int, p: int) -> Fraction:
    """4^{-q} sum_{k=0}^{q} C(2q+1, k) (2q+1-2k)^{2p}, exactly."""
    if q < 0 or p < 0:
        raise DomainError("binomial_power_sum requires q >= 0 and p >= 0")
    total = sum(binomial(2 * q + 1, k) * (2 * q + 1 - 2 * k) ** (2 * p) for k in range(q + 1))
    return Fraction(total, 4**q)


@dataclass(frozen=True)
class ReciprocalArctanhCoeffs:
    """Coefficients of the two reciprocal expansions around 0.

    ``inv_arctanh[n]`` is the x^{2n-1} coefficient of 1/arctanh(x);
    ``inv_sqrt_arctanh[n]`` that of 1/(sqrt(1-x^2) arctanh(x)).  Both lead
    with coefficient 1 (each function behaves like 1/x at the origin).
    """

    inv_arctanh: tuple[Fraction, ...]
    inv_sqrt_arctanh: tuple[Fraction, ...]


def reciprocal_arctanh_coeffs(order: int) -> ReciprocalArctanhCoeffs:
    """First ``order``+1 coefficients of both reciprocal expansions."""
    if order < 0:
        raise DomainError("order must be >= 0")
    k = 2 * order
    plain = arctanh_over_x_series(k).reciprocal()
    weighted = plain * inv_sqrt_one_minus_x2_series(k)
    return ReciprocalArctanhCoeffs(
        inv_arctanh=tuple(plain.coeffs[2 * i] for i in range(order + 1)),
        inv_sqrt_arctanh=tuple(weighted.coeffs[2 * i] for i in range(order + 1)),
    )


def arctanh_squared_coeff(n: int) -> Fraction:
    """[x^{2n}] arctanh(x)^2: 0 for n = 0, else (1/n) sum_{k=1}^{n} 1/(2k-1)."""
    if n < 0:
        raise DomainError("index must be >= 0")
    if n == 0:
        return Fraction(0)
    return Fraction(1, n) * sum(Fraction(1, 2 * k - 1) for k in range(1, n + 1))
