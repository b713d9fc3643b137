"""High-precision evaluation of the transcendental basis.

All basis symbols reduce to four ingredients:

* alternating Dirichlet sums eta(s), eta'(s), beta(s), beta'(s) for s >= 1,
  summed with Chebyshev-polynomial convergence acceleration (about 0.77
  correct digits per retained term, with an explicit term cap -- exceeding
  it raises :class:`PrecisionError` rather than degrading silently);
* exact special values zeta(2k) and beta(2k+1) through Bernoulli and Euler
  numbers;
* the reflection formulas of zeta and beta, differentiated once and
  rearranged *symbolically* (never by numeric differentiation), which push
  the derivative evaluations to negative arguments:
      eta'(-2i-1)  from  zeta(2i+2), zeta'(2i+2), ln 2, ln pi, gamma,
      beta'(-2i)   from  beta'(2i+1), Euler numbers, ln(pi/2), gamma;
* elementary constants ln 2, ln pi, gamma.

Every public function takes a target precision in decimal digits and
computes with ``GUARD_DIGITS`` extra working digits; results are correct to
at least the requested precision.  Values are cached per (symbol, precision)
and cache hits return bit-identical numbers.  The mpmath working context is
global, so a module lock serializes precision changes; all entry points are
safe to call from multiple threads.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from mpmath import mp, mpf

from .closedform import ClosedForm
from .exact import DomainError, PrecisionError, bernoulli, euler_number, harmonic

GUARD_DIGITS = 15

_MAX_PREC = 1000

_MP_LOCK = threading.RLock()

_cache_lock = threading.Lock()
_constant_cache: dict[tuple, mpf] = {}


def _check_prec(prec: int) -> None:
    if not 1 <= prec <= _MAX_PREC:
        raise DomainError(f"precision must be in [1, {_MAX_PREC}] digits, got {prec}")


def _as_mpf(x) -> mpf:
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, float):
        return mpf(x)
    return mp.mpmathify(x)


def _frac(x: Fraction) -> mpf:
    return mpf(x.numerator) / x.denominator


def _cached(key: tuple, builder):
    with _cache_lock:
        hit = _constant_cache.get(key)
    if hit is not None:
        return hit
    value = builder()
    with _cache_lock:
        return _constant_cache.setdefault(key, value)


# ---------------------------------------------------------------------------
# accelerated alternating sums
# ---------------------------------------------------------------------------

def alternating_sum(term, prec: int, max_terms: int | None = None) -> mpf:
    """sum_{k>=0} (-1)^k term(k) by Chebyshev acceleration.

    ``term(k)`` must return an mpf-compatible value; the terms should decay
    like moments of a measure on [0, 1] (all the Dirichlet-type sums used
    here qualify).  Raises :class:`PrecisionError` when the required number
    of terms exceeds ``max_terms`` (default 4x the working precision).
    """
    work = mp.dps
    needed = int(work / 0.75) + 8  # ~0.765 digits gained per term
    cap = max_terms if max_terms is not None else 4 * work
    if needed > cap:
        raise PrecisionError(
            f"{needed} terms needed for {work} working digits, cap is {cap}"
        )
    n = needed
    d = (3 + mp.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b, c, s = mpf(-1), -d, mpf(0)
    for k in range(n):
        c = b - c
        s += c * term(k)
        b = (k + n) * (k - n) * b / ((k + mpf(1) / 2) * (k + 1))
    return s / d


def _require_s_ge_1(s: mpf) -> None:
    if not s >= 1:
        raise DomainError(f"alternating-series region requires s >= 1, got {s}")


def eta_value(s, prec: int, max_terms: int | None = None) -> mpf:
    """Dirichlet eta(s) = sum (-1)^{n-1} n^{-s} for real s >= 1."""
    _check_prec(prec)
    with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
        sv = _as_mpf(s)
        _require_s_ge_1(sv)
        return alternating_sum(lambda k: (k + 1) ** -sv, prec, max_terms)


def eta_prime(s, prec: int, max_terms: int | None = None) -> mpf:
    """eta'(s) = sum (-1)^n ln(n) n^{-s} (n >= 1), accelerated, s >= 1."""
    _check_prec(prec)
    with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
        sv = _as_mpf(s)
        _require_s_ge_1(sv)
        return -alternating_sum(
            lambda k: mp.log(k + 1) * (k + 1) ** -sv if k else mpf(0), prec, max_terms
        )


def beta_value(s, prec: int, max_terms: int | None = None) -> mpf:
    """Dirichlet beta(s) = sum (-1)^n (2n+1)^{-s} for real s >= 1."""
    _check_prec(prec)
    with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
        sv = _as_mpf(s)
        _require_s_ge_1(sv)
        return alternating_sum(lambda k: (2 * k + 1) ** -sv, prec, max_terms)


def beta_prime_value(s, prec: int, max_terms: int | None = None) -> mpf:
    """beta'(s) = sum (-1)^{n+1} ln(2n+1) (2n+1)^{-s}, accelerated, s >= 1."""
    _check_prec(prec)
    with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
        sv = _as_mpf(s)
        _require_s_ge_1(sv)
        return -alternating_sum(
            lambda k: mp.log(2 * k + 1) * (2 * k + 1) ** -sv if k else mpf(0),
            prec,
            max_terms,
        )


# ---------------------------------------------------------------------------
# exact-rational special values and elementary constants
# ---------------------------------------------------------------------------

def zeta_even_value(k: int, prec: int) -> mpf:
    """zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!), k >= 1."""
    _check_prec(prec)
    if k < 1:
        raise DomainError("zeta_even_value requires k >= 1")
    def build():
        with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
            b = bernoulli(2 * k)
            sign = 1 if k % 2 else -1
            return sign * _frac(b) * (2 * mp.pi) ** (2 * k) / (2 * mp.factorial(2 * k))
    return _cached(("zeta_even", k, prec), build)


def beta_odd_value(k: int, prec: int) -> mpf:
    """beta(2k+1) = (-1)^k E_{2k} pi^{2k+1} / (4^{k+1} (2k)!), k >= 0."""
    _check_prec(prec)
    if k < 0:
        raise DomainError("beta_odd_value requires k >= 0")
    def build():
        with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
            sign = -1 if k % 2 else 1
            return (
                sign
                * euler_number(2 * k)
                * mp.pi ** (2 * k + 1)
                / (4 ** (k + 1) * mp.factorial(2 * k))
            )
    return _cached(("beta_odd", k, prec), build)


def eta_at_negative_odd(i: int) -> Fraction:
    """Exact rational eta(-2i-1) = (1 - 2^{2i+2}) zeta(-2i-1)."""
    if i < 0:
        raise DomainError("index must be >= 0")
    zeta_neg = -bernoulli(2 * i + 2) / (2 * i + 2)
    return (1 - Fraction(2) ** (2 * i + 2)) * zeta_neg


def beta_at_negative_even(i: int) -> Fraction:
    """Exact rational beta(-2i) = E_{2i} / 2."""
    if i < 0:
        raise DomainError("index must be >= 0")
    return Fraction(euler_number(2 * i), 2)


def ln2(prec: int) -> mpf:
    _check_prec(prec)
    return _cached(("ln2", prec), lambda: _with_work(prec, lambda: mp.log(2)))


def ln_pi(prec: int) -> mpf:
    _check_prec(prec)
    return _cached(("lnpi", prec), lambda: _with_work(prec, lambda: mp.log(mp.pi)))


def euler_gamma(prec: int) -> mpf:
    """Euler-Mascheroni constant, cached alongside the basis constants."""
    _check_prec(prec)
    return _cached(("gamma", prec), lambda: _with_work(prec, lambda: +mp.euler))


def _with_work(prec: int, thunk):
    with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
        return thunk()


# ---------------------------------------------------------------------------
# derivatives at the paper-facing argument families
# ---------------------------------------------------------------------------

def zeta_prime_even(p: int, prec: int, max_terms: int | None = None) -> mpf:
    """zeta'(2p+2), from eta'(s) = 2^{1-s} ln2 zeta(s) + (1-2^{1-s}) zeta'(s)."""
    _check_prec(prec)
    if p < 0:
        raise DomainError("zeta_prime_even requires p >= 0")
    def build():
        s = 2 * p + 2
        ep = eta_prime(s, prec, max_terms)
        with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
            two = mpf(2) ** (1 - s)
            return (ep - two * mp.log(2) * zeta_even_value(p + 1, prec)) / (1 - two)
    return _cached(("zeta_prime_even", p, prec), build)


def beta_prime_odd(p: int, prec: int, max_terms: int | None = None) -> mpf:
    """beta'(2p+1) by the accelerated alternating sum."""
    if p < 0:
        raise DomainError("beta_prime_odd requires p >= 0")
    return _cached(
        ("beta_prime_odd", p, prec),
        lambda: beta_prime_value(2 * p + 1, prec, max_terms),
    )


def _zeta_prime_at_negative_odd(k: int, prec: int) -> mpf:
    # zeta'(1-2k) = -B_{2k}/(2k) (ln 2pi + gamma - H_{2k-1})
    #              + (-1)^{k+1} 2 (2k-1)! zeta'(2k) / (2 pi)^{2k}
    zp = zeta_prime_even(k - 1, prec)
    with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
        b_term = _frac(-bernoulli(2 * k) / (2 * k))
        h = _frac(harmonic(2 * k - 1))
        first = b_term * (mp.log(2 * mp.pi) + mp.euler - h)
        sign = 1 if k % 2 else -1
        second = sign * 2 * mp.factorial(2 * k - 1) * zp / (2 * mp.pi) ** (2 * k)
        return first + second


def eta_prime_neg(i: int, prec: int, via: str = "zeta") -> mpf:
    """eta'(-2i-1) through a differentiated reflection formula.

    ``via="zeta"`` (default) rearranges through zeta'(2i+2) and the exact
    rational zeta(-2i-1); ``via="eta"`` differentiates the eta-to-eta
    reflection directly and consumes eta(2i+2), eta'(2i+2), and digamma.
    The two arrangements agree to working precision and serve as mutual
    checks.
    """
    _check_prec(prec)
    if i < 0:
        raise DomainError("eta_prime_neg requires i >= 0")
    if via == "zeta":
        def build():
            k = i + 1
            zp_neg = _zeta_prime_at_negative_odd(k, prec)
            with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
                zeta_neg = _frac(-bernoulli(2 * i + 2) / (2 * i + 2))
                scale = mpf(2) ** (2 * i + 2)
                return scale * mp.log(2) * zeta_neg + (1 - scale) * zp_neg
        return _cached(("eta_prime_neg", i, prec), build)
    if via == "eta":
        ev = eta_value(2 * i + 2, prec)
        ep = eta_prime(2 * i + 2, prec)
        with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
            s0 = -2 * i - 1
            sin_half = -mpf(1) if i % 2 == 0 else mpf(1)  # sin(pi s0 / 2)
            pow_hi = mpf(2) ** (1 - s0)
            pow_lo = mpf(2) ** s0
            f = (
                (1 - pow_hi)
                * pow_lo
                * mp.pi ** (s0 - 1)
                * sin_half
                * mp.gamma(1 - s0)
                / (1 - pow_lo)
            )
            logderiv = (
                pow_hi * mp.log(2) / (1 - pow_hi)
                + mp.log(2)
                + mp.log(mp.pi)
                - mp.digamma(1 - s0)
                + pow_lo * mp.log(2) / (1 - pow_lo)
            )
            return f * logderiv * ev - f * ep
    raise DomainError(f"unknown arrangement {via!r}; expected 'zeta' or 'eta'")


def beta_prime_neg(i: int, prec: int, via: str = "odd") -> mpf:
    """beta'(-2i) through the differentiated beta reflection formula.

    ``via="odd"`` (default) uses the exact rational beta(-2i) = E_{2i}/2 and
    beta'(2i+1); ``via="reflection"`` differentiates the reflection product
    directly, consuming beta(2i+1) from the accelerated sum and digamma.
    """
    _check_prec(prec)
    if i < 0:
        raise DomainError("beta_prime_neg requires i >= 0")
    if via == "odd":
        def build():
            bp = beta_prime_odd(i, prec)
            with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
                e_half = _frac(beta_at_negative_even(i))
                h = _frac(harmonic(2 * i))
                sign = -1 if i % 2 else 1
                first = e_half * (mp.log(mp.pi / 2) + mp.euler - h)
                second = (
                    sign
                    * mpf(2) ** (2 * i + 1)
                    * mp.factorial(2 * i)
                    * bp
                    / mp.pi ** (2 * i + 1)
                )
                return first - second
        return _cached(("beta_prime_neg", i, prec), build)
    if via == "reflection":
        bv = beta_value(2 * i + 1, prec)
        bp = beta_prime_value(2 * i + 1, prec)
        with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
            s0 = -2 * i
            sign = -1 if i % 2 else 1
            g = (mp.pi / 2) ** (s0 - 1) * mp.gamma(1 - s0) * sign
            gp = g * (mp.log(mp.pi / 2) - mp.digamma(1 - s0))
            return gp * bv - g * bp
    raise DomainError(f"unknown arrangement {via!r}; expected 'odd' or 'reflection'")


# ---------------------------------------------------------------------------
# closed-form evaluation and bounds
# ---------------------------------------------------------------------------

def symbol_value(kind: str, index: int | None, prec: int) -> mpf:
    """Numeric value of one basis symbol at the requested precision."""
    _check_prec(prec)
    if kind == "one":
        return mpf(1)
    if kind == "ln2":
        return ln2(prec)
    if kind == "lnpi":
        return ln_pi(prec)
    if kind == "zeta_prime_ratio":
        def build():
            zp = zeta_prime_even(index, prec)
            with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
                return zp / mp.pi ** (2 * index + 2)
        return _cached(("zeta_prime_ratio", index, prec), build)
    if kind == "beta_prime_ratio":
        def build():
            bp = beta_prime_odd(index, prec)
            with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
                return bp / mp.pi ** (2 * index + 1)
        return _cached(("beta_prime_ratio", index, prec), build)
    if kind == "eta_prime_neg":
        return eta_prime_neg(index, prec)
    if kind == "beta_prime_neg":
        return beta_prime_neg(index, prec)
    raise DomainError(f"unsupported basis symbol {kind!r}")


def eval_closed_form(form: ClosedForm, prec: int) -> mpf:
    """Evaluate a closed form numerically; deterministic for fixed prec."""
    _check_prec(prec)
    values = [(coeff, symbol_value(sym.kind, sym.index, prec)) for sym, coeff in form.items()]
    with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
        total = mpf(0)
        for coeff, value in values:
            total += _frac(coeff) * value
        return total


def phi1_bounds(s, prec: int) -> tuple[mpf, mpf]:
    """Strict enclosure 2/(s^2-1) < Phi_1(s) < 1/(s-1) for s > 1."""
    _check_prec(prec)
    with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
        sv = _as_mpf(s)
        if not sv > 1:
            raise DomainError(f"bounds require s > 1, got {s}")
        return 2 / (sv * sv - 1), 1 / (sv - 1)


def mellin_bound_gamma_ratio(s, prec: int) -> tuple[mpf, mpf]:
    """Strict enclosure of Phi_2(s) for s > 1:

    sqrt(pi)/(2s) * G < Phi_2(s) < sqrt(pi)/2 * G,  G = Gamma((s-1)/2)/Gamma(s/2).
    """
    _check_prec(prec)
    with _MP_LOCK, mp.workdps(prec + GUARD_DIGITS):
        sv = _as_mpf(s)
        if not sv > 1:
            raise DomainError(f"bounds require s > 1, got {s}")
        ratio = mp.gamma((sv - 1) / 2) / mp.gamma(sv / 2)
        upper = mp.sqrt(mp.pi) / 2 * ratio
        return upper / sv, upper
