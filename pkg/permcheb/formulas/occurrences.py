"""132-avoiders (and 321-avoiders) containing a pattern exactly r times.

Dispatch prefers the narrowest statement that covers (pattern, r);
:func:`G_exact_all` evaluates every statement in range so overlapping
ones can be compared.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator

from permcheb.algebra.cheb import TExpr, U, to_ratfun, two_t_power
from permcheb.algebra.exactalg import RatFun, binomial, catalan
from permcheb.errors import OutOfStatedRange, ParameterError, UnsupportedPattern
from permcheb.models import Identity, Layered, PatternSpec, TwoLayered

logger = logging.getLogger(__name__)


def _check_r(r: int) -> None:
    if r < 1:
        raise ParameterError(f"Occurrence count must be positive, got r={r}")


def identity_upto_k(k: int, r: int) -> RatFun:
    """Exactly r occurrences of [k], 1 <= r <= k."""
    _check_r(r)
    if not r <= k:
        raise OutOfStatedRange(f"r={r} exceeds k={k}")
    return to_ratfun(U(k - 1) ** (r - 1) / (two_t_power(r - 1) * U(k) ** (r + 1)))


def identity_extended(k: int, r: int) -> RatFun:
    """Exactly r occurrences of [k], 1 <= r <= k(k+3)/2."""
    _check_r(r)
    if 2 * r > k * (k + 3):
        raise OutOfStatedRange(f"r={r} exceeds k(k+3)/2 for k={k}")
    base = U(k - 1) ** (r - 1) / (two_t_power(r - 1) * U(k) ** (r + 1))
    ratio = two_t_power(k - 2) * U(k) ** k / U(k - 1) ** k
    total = TExpr.coerce(0)
    for j in range((r - 1) // k + 1):
        total = total + binomial(r - k * j + j - 1, j) * ratio**j
    return to_ratfun(base * total)


def _weight_sequences(k: int, r: int, index: int = 1) -> Iterator[tuple[int, ...]]:
    """Sequences (l_index, l_index+1, ...) with sum l_i * C(k+i-2, k-1) = r, trailing zeros dropped."""
    if r == 0:
        yield ()
        return
    weight = binomial(k + index - 2, k - 1)
    if weight > r:
        return
    for count in range(r // weight + 1):
        for rest in _weight_sequences(k, r - count * weight, index + 1):
            yield (count,) + rest


def _chain_binomial(n: int, j: int) -> int:
    # C(n, 0) = 1 for every n, including n = -1
    return 1 if j == 0 else binomial(n, j)


def identity_general(k: int, r: int) -> RatFun:
    """Exactly r occurrences of [k] for any r, summed over weighted sequences (k >= 2)."""
    _check_r(r)
    if k < 2:
        raise OutOfStatedRange("The weighted-sequence sum needs k >= 2")
    total = TExpr.coerce(0)
    for sequence in _weight_sequences(k, r):
        coefficient = 1
        for current, following in zip(sequence, sequence[1:]):
            coefficient *= _chain_binomial(current + following - 1, following)
        if not coefficient:
            continue
        l1 = sequence[0]
        rest = sum(sequence[1:])
        term = U(k - 1) ** (l1 - 1) / U(k) ** (l1 + 1) * two_t_power(-(l1 - 1) - 2 * rest)
        total = total + coefficient * term
    return to_ratfun(total)


def two_layered_one_once(k: int) -> RatFun:
    """Exactly one occurrence of [k, 1], k >= 2."""
    if k < 2:
        raise ParameterError(f"[k,1] needs k >= 2, got {k}")
    return to_ratfun(1 / (two_t_power(2) * U(k - 2) * U(k)))


def two_layered_one(k: int, r: int) -> RatFun:
    """Exactly r occurrences of [k, 1], 1 <= r <= k - 1; a divisor sum over l | r."""
    _check_r(r)
    if k < 2:
        raise ParameterError(f"[k,1] needs k >= 2, got {k}")
    if r > k - 1:
        raise OutOfStatedRange(f"r={r} exceeds k-1={k - 1}")
    total = TExpr.coerce(0)
    for l in range(1, r + 1):
        if r % l:
            continue
        q = r // l
        # U_{k-3}^(q-1) / U_{k-2}^q keeps k = 2 finite where U_{-1} = 0
        term = two_t_power(1 - 2 * l - q) * U(k - 3) ** (q - 1) / U(k - 2) ** q
        total = total + catalan(l) * term
    return to_ratfun(total / U(k))


def two_layered_once(k: int, m: int) -> RatFun:
    """Exactly one occurrence of [k, m], k > m > 0.

    The product form holds for m <= k/2. Inversion fixes 132 and sends
    [k, m] to [k, k - m], so larger m are evaluated at k - m.
    """
    if not k > m > 0:
        raise ParameterError(f"[k,m] needs k > m > 0, got k={k}, m={m}")
    if 2 * m > k:
        logger.debug("[%s,%s] exactly once evaluated at its inverse [%s,%s]", k, m, k, k - m)
        m = k - m
    return to_ratfun(1 / (two_t_power(1) * U(k) * U(m) * U(k - m - 1)))


def _two_layered_params(tau: PatternSpec) -> tuple[int, int] | None:
    if isinstance(tau, TwoLayered):
        return tau.k, tau.m
    if isinstance(tau, Layered) and len(tau.parts) == 2:
        return tau.parts[0], tau.parts[1]
    return None


def _identity_length(tau: PatternSpec) -> int | None:
    if isinstance(tau, Identity):
        return tau.k
    if isinstance(tau, Layered) and len(tau.parts) == 1:
        return tau.parts[0]
    return None


def G_exact_all(base: str, tau: PatternSpec, r: int) -> dict[str, RatFun]:
    """Every stated closed form covering (base, tau, r), keyed by statement name."""
    _check_r(r)
    results: dict[str, RatFun] = {}
    k = _identity_length(tau)
    if base == "132" and k is not None:
        if k < 1:
            raise ParameterError(f"[k] needs k >= 1, got {k}")
        if r == 1:
            results["identity_once"] = to_ratfun(1 / U(k) ** 2)
        if r <= k:
            results["identity_upto_k"] = identity_upto_k(k, r)
        if 2 * r <= k * (k + 3):
            results["identity_extended"] = identity_extended(k, r)
        if k >= 2:
            results["identity_general"] = identity_general(k, r)
        return results

    params = _two_layered_params(tau)
    if params is None:
        raise UnsupportedPattern(f"No occurrence formula for ({base}, {tau})")
    k, m = params
    if base == "321":
        if m != 1 or k < 3:
            raise UnsupportedPattern(f"321-avoiders are covered only for [k,1] with k >= 3, got {tau}")
        if r <= k - 1:
            results["restricted321_two_layered_one"] = identity_upto_k(k, r)
        return results
    if base != "132":
        raise UnsupportedPattern(f"Base pattern must be 132 or 321, got {base!r}")
    if r == 1:
        results["two_layered_once"] = two_layered_once(k, m)
    if m == 1:
        if r == 1:
            results["two_layered_one_once"] = two_layered_one_once(k)
        if r <= k - 1:
            results["two_layered_one"] = two_layered_one(k, r)
    return results


# narrowest statement first
_PREFERENCE = (
    "identity_upto_k",
    "identity_extended",
    "identity_general",
    "two_layered_one_once",
    "two_layered_one",
    "two_layered_once",
    "restricted321_two_layered_one",
    "identity_once",
)


def G_exact(base: str, tau: PatternSpec, r: int) -> RatFun:
    """Generating function of base-avoiders containing ``tau`` exactly r times.

    Raises:
        UnsupportedPattern: If no statement covers ``tau`` for ``base``.
        OutOfStatedRange: If r lies beyond every applicable statement's range.
    """
    results = G_exact_all(base, tau, r)
    for name in _PREFERENCE:
        if name in results:
            logger.debug("G(%s, %s, r=%s) via %s", base, tau, r, name)
            return results[name]
    raise OutOfStatedRange(f"r={r} is outside every stated range for ({base}, {tau})")


def G_triple(k: int, m: int, l: int, *, literal_ranges: bool = False) -> RatFun:
    """132- and [k, m]-avoiders containing [l] exactly once, k - m >= m.

    The l > k - m formula also serves l = k - m, where the [k, m] restriction
    still matters; for k - m > l > m the restriction is implied and the
    value is that of [l] alone. ``literal_ranges`` uses the second formula
    on k - m >= l > m instead.
    """
    if not 1 <= m <= k - m:
        raise ParameterError(f"Need k - m >= m >= 1, got k={k}, m={m}")
    if l < 1:
        raise ParameterError(f"Identity length must be positive, got l={l}")
    if m >= l:
        return G_exact("132", Identity(l), 1)
    ratio_m = U(m - 1) / U(m)
    if l > k - m or (l == k - m and not literal_ranges):
        ratio_km = U(k - m - 1) / U(k - m)
        inner = TExpr.coerce(1)
        for j in range(m + 2, k - m + 1):
            inner = inner + U(j - m - 2) / (U(j - 2) * U(j - 1)) * ratio_m ** (m + 1 - j)
        value = ratio_m ** (l - m) * ratio_km ** (l + m - k) * inner / (U(m) * U(k - m))
        return to_ratfun(value)
    inner = TExpr.coerce(1)
    for j in range(m + 1, l + 1):
        inner = inner + U(j - m - 1) / (U(j - 1) * U(j)) * ratio_m ** (m - j)
    return to_ratfun(ratio_m ** (l - m) * inner / (U(l) * U(m)))
