"""Double-exponential quadrature oracles for every integral family.

All integrals are taken over (0, oo) after the substitution x = tanh(u),
which removes the arctanh endpoint singularity of the Mellin integrands:

    Phi_1(s) = int_0^oo tanh^{s-1}(u) sech^2(u) / u du,
    Phi_2(s) = int_0^oo tanh^{s-1}(u) sech(u)   / u du,
    int_0^oo sinh^{2q+1}(z) ln(z) / cosh^N(z) dz
             = int_0^oo tanh^{2q+1}(z) sech^{N-2q-1}(z) ln(z) dz,
    int_0^oo sinh^{2q}(z) / (z cosh^N(z)) dz
             = int_0^oo tanh^{2q}(z) sech^{N-2q}(z) / z dz.

The integrands decay exponentially at infinity and have at worst integrable
algebraic/logarithmic behaviour at 0, so the node map

    z = exp(t - exp(-t)),   dz = (1 + exp(-t)) z dt

turns the trapezoid sum into a double-exponentially convergent rule.  Levels
halve the mesh; each level reuses the previous sum and adds the odd
multiples of the new spacing, extending each wing adaptively until terms are
negligible.  The reported error estimate is the last level-to-level change
plus a geometric bound on the truncated tails; it is computed, never asserted.

Results are cached per (family, parameters, precision); cached replies are
bit-identical.  A module lock serializes the global mpmath context, so the
evaluators are safe to call concurrently.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf

from .exact import DomainError, PrecisionError, bernoulli

DEFAULT_PREC = 30
MAX_PREC = 100

_MP_LOCK = threading.RLock()
_cache_lock = threading.Lock()
_quad_cache: dict[tuple, "QuadResult"] = {}


@dataclass(frozen=True)
class QuadResult:
    """One quadrature answer with its computed error estimate."""

    value: mpf
    error_estimate: mpf
    nodes_used: int
    levels: int

    def __float__(self) -> float:
        return float(self.value)


def _check_prec(prec: int) -> None:
    if not 1 <= prec <= MAX_PREC:
        raise DomainError(f"quadrature precision must be in [1, {MAX_PREC}], got {prec}")


def _as_mpf(x) -> mpf:
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, float):
        return mpf(x)
    return mp.mpmathify(x)


def _de_halfline(f, prec: int, max_level: int = 12) -> QuadResult:
    """Integrate f over (0, oo) with the exp(t - exp(-t)) node map.

    Must be called inside the working-precision context.
    """
    eps_term = mpf(10) ** (-(mp.dps + 5))
    target = mpf(10) ** (-(prec + 2))
    nodes = 0
    tail_mag = mpf(0)

    def term(t: mpf) -> mpf:
        u = mp.exp(-t)
        z = mp.exp(t - u)
        return f(z) * (1 + u) * z

    def wing(h: mpf, start: int, step: int) -> tuple[mpf, mpf, int]:
        """Sum term(k*h) for k = start, start+step, ... on both sides.

        Also returns the larger of the two truncation-boundary magnitudes
        (the last term on each side still above the negligibility cutoff).
        """
        total = mpf(0)
        last = mpf(0)
        count = 0
        for sign in (1, -1):
            consec = 0
            k = start
            boundary = mpf(0)
            while consec < 3:
                val = term(sign * k * h)
                total += val
                count += 1
                mag = abs(val)
                if mag < eps_term:
                    consec += 1
                else:
                    consec = 0
                    boundary = mag
                k += step
                if k > 600_000:
                    raise PrecisionError("double-exponential wing failed to terminate")
            last = max(last, boundary)
        return total, last, count

    h = mpf(1)
    center = term(mpf(0))
    nodes += 1
    wing_sum, last_mag, n = wing(h, 1, 1)
    nodes += n
    tail_mag = last_mag
    value = h * (center + wing_sum)
    prev = value
    level = 0
    change = abs(value)
    for level in range(1, max_level + 1):
        h = h / 2
        odd_sum, last_mag, n = wing(h, 1, 2)
        nodes += n
        tail_mag = max(tail_mag, last_mag)
        value = prev / 2 + h * odd_sum
        change = abs(value - prev)
        if change < target * max(mpf(1), abs(value)):
            break
        prev = value
    # tails decay far faster than geometrically; ratio 1/2 is conservative
    error = change + 2 * h * tail_mag
    return QuadResult(value=value, error_estimate=error, nodes_used=nodes, levels=level)


def _cached_quad(key: tuple, prec: int, make_integrand) -> QuadResult:
    with _cache_lock:
        hit = _quad_cache.get(key)
    if hit is not None:
        return hit
    with _MP_LOCK, mp.workdps(prec + 15):
        result = _de_halfline(make_integrand(), prec)
    with _cache_lock:
        return _quad_cache.setdefault(key, result)


def quad_phi(which: int, s, prec: int = DEFAULT_PREC) -> QuadResult:
    """Mellin transform value Phi_which(s), s > 1.

    which=1 integrates x^{s-1}/arctanh(x), which=2 integrates
    x^{s-1}/(sqrt(1-x^2) arctanh(x)), both over (0, 1).
    """
    _check_prec(prec)
    if which not in (1, 2):
        raise DomainError(f"which must be 1 or 2, got {which}")
    with _MP_LOCK, mp.workdps(prec + 15):
        sv = _as_mpf(s)
        if not sv > 1:
            raise DomainError(f"Phi_{which} converges only for s > 1, got s={s}")

    def make():
        sv = _as_mpf(s)
        power = sv - 1
        sech_exp = 3 - which  # 2 for Phi_1, 1 for Phi_2

        def f(z: mpf) -> mpf:
            return mp.tanh(z) ** power * mp.sech(z) ** sech_exp / z

        return f

    return _cached_quad(("phi", which, s, prec), prec, make)


def quad_log_family(q: int, n_exponent: int, prec: int = DEFAULT_PREC) -> QuadResult:
    """int_0^oo sinh^{2q+1}(z) ln(z) / cosh^N(z) dz with N = n_exponent > 2q+1."""
    _check_prec(prec)
    if q < 0 or 2 * q + 1 >= n_exponent:
        raise DomainError(
            f"convergence requires 2q+1 < N with q >= 0; got q={q}, N={n_exponent}"
        )

    def make():
        decay = n_exponent - 2 * q - 1

        def f(z: mpf) -> mpf:
            return mp.tanh(z) ** (2 * q + 1) * mp.sech(z) ** decay * mp.log(z)

        return f

    return _cached_quad(("log", q, n_exponent, prec), prec, make)


def quad_sinh_over_z(q: int, n_exponent: int, prec: int = DEFAULT_PREC) -> QuadResult:
    """int_0^oo sinh^{2q}(z) / (z cosh^N(z)) dz with 0 < 2q < N = n_exponent."""
    _check_prec(prec)
    if not 0 < 2 * q < n_exponent:
        raise DomainError(
            f"convergence requires 0 < 2q < N; got q={q}, N={n_exponent}"
        )

    def make():
        decay = n_exponent - 2 * q

        def f(z: mpf) -> mpf:
            return mp.tanh(z) ** (2 * q) * mp.sech(z) ** decay / z

        return f

    return _cached_quad(("soz", q, n_exponent, prec), prec, make)


def quad_integral(spec, prec: int = DEFAULT_PREC) -> QuadResult:
    """Quadrature of the integral described by an
    :class:`~arcmellin.closedform.IntegralSpec`."""
    if spec.family == "log-odd":
        return quad_log_family(spec.q, 2 * spec.n + 1, prec)
    if spec.family == "log-even":
        return quad_log_family(spec.q, 2 * spec.n, prec)
    if spec.family == "sinh-over-z":
        return quad_sinh_over_z(spec.q, spec.n, prec)
    if spec.family == "phi1":
        return quad_phi(1, spec.s, prec)
    if spec.family == "phi2":
        return quad_phi(2, spec.s, prec)
    raise DomainError(f"unknown integral family {spec.family!r}")


def _one_over_z_minus_coth(z: mpf) -> mpf:
    """1/z - coth(z), evaluated without subtractive cancellation near 0."""
    if z > mpf(3) / 4:
        return 1 / z - mp.cosh(z) / mp.sinh(z)
    # 1/z - coth z = -sum_{k>=1} 4^k B_{2k} z^{2k-1} / (2k)!
    eps = mpf(10) ** (-(mp.dps + 5))
    total = mpf(0)
    k = 1
    while True:
        b = bernoulli(2 * k)
        term = (
            mpf(4) ** k
            * mpf(b.numerator)
            / b.denominator
            * z ** (2 * k - 1)
            / mp.factorial(2 * k)
        )
        total -= term
        if abs(term) < eps * max(abs(total), mpf(1)):
            return total
        k += 1


def _sinh_minus_z(z: mpf) -> mpf:
    """sinh(z) - z without cancellation near 0."""
    if z > mpf(3) / 4:
        return mp.sinh(z) - z
    eps = mpf(10) ** (-(mp.dps + 5))
    total = mpf(0)
    k = 1
    while True:
        term = z ** (2 * k + 1) / mp.factorial(2 * k + 1)
        total += term
        if term < eps * total:
            return total
        k += 1


def quad_c_constant(which: int, prec: int = DEFAULT_PREC) -> QuadResult:
    """The constant term of Phi_which(s) - 1/(s-1) at s -> 1+, as an integral:

    which=1: int_0^1 (1/arctanh(x) - 1/x) dx,
    which=2: int_0^1 (1/(sqrt(1-x^2) arctanh(x)) - 1/x) dx,

    both evaluated on (0, oo) through x = tanh(u) with cancellation-safe
    integrand brackets.
    """
    _check_prec(prec)
    if which not in (1, 2):
        raise DomainError(f"which must be 1 or 2, got {which}")

    def make():
        if which == 1:
            def f(z: mpf) -> mpf:
                return _one_over_z_minus_coth(z) * mp.sech(z) ** 2

            return f

        def f(z: mpf) -> mpf:
            # cosh z / z - coth z = cosh(z) (sinh z - z) / (z sinh z)
            bracket = mp.cosh(z) * _sinh_minus_z(z) / (z * mp.sinh(z))
            return bracket * mp.sech(z) ** 2

        return f

    return _cached_quad(("c_constant", which, prec), prec, make)
