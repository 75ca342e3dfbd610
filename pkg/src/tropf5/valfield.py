"""Exact rationals with a p-adic valuation.

Coefficients are plain :class:`fractions.Fraction` values; they are always in
lowest terms with a positive denominator, which is exactly the invariant the
coefficient field needs.  The valuation is a separate object so one rational
can be looked at under several primes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

ValuedScalar = Fraction

INF = math.inf


def parse_rational(text: str) -> Fraction:
    """Parse ``int`` or ``int/int``."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        den_i = int(den)
        if den_i == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(int(num), den_i)
    return Fraction(int(text))


def inv(q: Fraction) -> Fraction:
    if q == 0:
        raise ZeroDivisionError("inverse of zero")
    return 1 / q


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=1 << 16)
def _multiplicity(k: int, p: int) -> int:
    m = 0
    while k % p == 0:
        k //= p
        m += 1
    return m


def p_adic_valuation(q, p: int):
    """Return v_p(q), with ``math.inf`` for zero.

    Negative values are allowed (``v_3(1/9) == -2``).
    """
    q = Fraction(q)
    if q == 0:
        return INF
    return _multiplicity(abs(q.numerator), p) - _multiplicity(q.denominator, p)


class Valuation:
    """The p-adic valuation on Q for a fixed prime."""

    __slots__ = ("prime",)

    def __init__(self, prime: int):
        if not isinstance(prime, int) or not is_prime(prime):
            raise ValueError(f"valuation needs a prime, got {prime!r}")
        self.prime = prime

    def __call__(self, q):
        return p_adic_valuation(q, self.prime)

    def __eq__(self, other):
        return isinstance(other, Valuation) and other.prime == self.prime

    def __hash__(self):
        return hash(("Valuation", self.prime))

    def __repr__(self):
        return f"Valuation({self.prime})"


def val(q, v: Valuation):
    return v(q)
