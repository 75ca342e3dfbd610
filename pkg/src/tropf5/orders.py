"""Tropical term order on D_n^(h) and the signature order on module monomials.

Both orders are realized as sort keys.  A term ``c * h^g x^a d^b`` gets

    (total degree, w.(a,b), -val(c) + omega.(a,b), tiebreak(a,b))

and a module monomial ``m * e_i`` gets

    (i, deg m, w.(a,b), [m e_i is a multiple of a known syzygy LM], tiebreak(a,b))

so comparing keys with ``<`` is the comparison.  Rational weights are scaled
to integers once, at construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .valfield import Valuation, _multiplicity as _mult, parse_rational
from .weylcore import Mono, Operator, mono_divides

LESS, EQUAL, GREATER = -1, 0, 1

TIEBREAKS = ("lex", "grlex", "grevlex")
_TIEBREAK_ALIASES = {
    "lex": "lex",
    "graded-lex": "grlex",
    "grlex": "grlex",
    "deglex": "grlex",
    "graded-reverse-lex": "grevlex",
    "grevlex": "grevlex",
    "degrevlex": "grevlex",
}


def _as_fraction(v) -> Fraction:
    if isinstance(v, str):
        return parse_rational(v)
    return Fraction(v)


def _integerize(vec: Sequence[Fraction]) -> Tuple[int, Tuple[int, ...]]:
    den = 1
    for v in vec:
        den = lcm(den, v.denominator)
    return den, tuple(int(v * den) for v in vec)


def default_precedence(n: int) -> Tuple[str, ...]:
    """d1 > ... > dn > x1 > ... > xn."""
    return tuple(f"d{i}" for i in range(1, n + 1)) + tuple(f"x{i}" for i in range(1, n + 1))


def _precedence_positions(names: Sequence[str], n: int) -> Tuple[int, ...]:
    """Map variable names to positions in the h-stripped vector (a, b)."""
    pos = []
    for name in names:
        kind, idx = name[0], name[1:]
        if kind not in "xd" or not idx.isdigit() or not 1 <= int(idx) <= n:
            raise ValueError(f"bad variable {name!r} in precedence for n={n}")
        i = int(idx) - 1
        pos.append(i if kind == "x" else n + i)
    if sorted(pos) != list(range(2 * n)):
        raise ValueError("precedence must list every x_i and d_i exactly once")
    return tuple(pos)


class OrderConfig:
    """Weights, tie-break order and valuation for the tropical term order."""

    def __init__(self, n: int, w, omega, tiebreak: str = "lex",
                 precedence: Optional[Sequence[str]] = None, prime: int = 2):
        if n < 1:
            raise ValueError("n must be positive")
        w = tuple(_as_fraction(v) for v in w)
        omega = tuple(_as_fraction(v) for v in omega)
        if len(w) != 2 * n or len(omega) != 2 * n:
            raise ValueError(f"w and omega need {2 * n} entries")
        if any(v < 0 for v in w[:n]):
            raise ValueError("weights of x variables must be nonnegative")
        wmax = max(w[:n])
        if any(not wmax < v for v in w[n:]):
            raise ValueError("every weight of a d variable must exceed all x weights")
        try:
            self.tiebreak = _TIEBREAK_ALIASES[tiebreak]
        except KeyError:
            raise ValueError(f"unknown tie-break order {tiebreak!r}") from None
        self.n = n
        self.w = w
        self.omega = omega
        self.precedence = tuple(precedence) if precedence is not None else default_precedence(n)
        self._pos = _precedence_positions(self.precedence, n)
        self._rev_pos = tuple(reversed(self._pos))
        self.valuation = Valuation(prime)
        self.prime = prime
        _, self._w_int = _integerize(w)
        self._om_den, self._om_int = _integerize(omega)
        self._parts: Dict[Mono, tuple] = {}

    def __repr__(self):
        return (f"OrderConfig(n={self.n}, w={[str(v) for v in self.w]}, "
                f"omega={[str(v) for v in self.omega]}, tiebreak={self.tiebreak!r}, "
                f"precedence={list(self.precedence)}, prime={self.prime})")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "prime": self.prime,
            "w": [str(v) for v in self.w],
            "omega": [str(v) for v in self.omega],
            "tiebreak": self.tiebreak,
            "precedence": list(self.precedence),
        }

    # -- pieces of the keys --------------------------------------------------
    def w_weight(self, mono: Mono) -> int:
        """Integer-scaled ``w . (a, b)``."""
        return sum(a * b for a, b in zip(self._w_int, mono[1:]))

    def tiebreak_key(self, mono: Mono):
        ab = mono[1:]
        if self.tiebreak == "lex":
            return tuple(ab[p] for p in self._pos)
        if self.tiebreak == "grlex":
            return (sum(ab),) + tuple(ab[p] for p in self._pos)
        return (sum(ab),) + tuple(-ab[p] for p in self._rev_pos)

    def _mono_parts(self, mono: Mono):
        ab = mono[1:]
        w = 0
        om = 0
        for a, wi, oi in zip(ab, self._w_int, self._om_int):
            if a:
                w += a * wi
                om += a * oi
        parts = (sum(mono), w, om, self.tiebreak_key(mono))
        self._parts[mono] = parts
        return parts

    def term_key(self, mono: Mono, coeff):
        """Sort key of the term ``coeff * mono`` under <_h."""
        parts = self._parts.get(mono) or self._mono_parts(mono)
        if isinstance(coeff, Fraction) and coeff:
            v = _mult(abs(coeff.numerator), self.prime) - _mult(coeff.denominator, self.prime)
        else:
            v = self.valuation(coeff)
        return (parts[0], parts[1], parts[2] - self._om_den * v, parts[3])

    def mono_key(self, mono: Mono):
        """Key of a bare monomial (coefficient of valuation zero)."""
        return self.term_key(mono, 1)


# -- terms --------------------------------------------------------------------

class Term(NamedTuple):
    coeff: Fraction
    mono: Mono


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def cmp_terms(t1: Term, t2: Term, cfg: OrderConfig) -> int:
    return _cmp(cfg.term_key(t1.mono, t1.coeff), cfg.term_key(t2.mono, t2.coeff))


def leading_in(terms: Dict[Mono, Fraction], cfg: OrderConfig) -> Tuple[Mono, Fraction]:
    """Leading ``(mono, coeff)`` of a raw term map."""
    key = cfg.term_key
    best_m = None
    best_c = None
    best_k = None
    for m, c in terms.items():
        k = key(m, c)
        if best_k is None or k > best_k:
            best_m, best_c, best_k = m, c, k
    if best_m is None:
        raise ValueError("the zero operator has no leading term")
    return best_m, best_c


def leading(f: Operator, cfg: OrderConfig) -> Term:
    m, c = leading_in(f.terms, cfg)
    return Term(c, m)


def leading_monomial(f: Operator, cfg: OrderConfig) -> Mono:
    return leading_in(f.terms, cfg)[0]


def leading_coefficient(f: Operator, cfg: OrderConfig) -> Fraction:
    return leading_in(f.terms, cfg)[1]


def leading_key(f: Operator, cfg: OrderConfig):
    m, c = leading_in(f.terms, cfg)
    return cfg.term_key(m, c)


# -- module monomials ----------------------------------------------------------

class ModMono(NamedTuple):
    """``mono * e_idx`` with a 1-based basis index."""

    idx: int
    mono: Mono

    def times(self, mono: Mono) -> "ModMono":
        return ModMono(self.idx, tuple(a + b for a, b in zip(self.mono, mono)))


def mod_divides(d: ModMono, m: ModMono) -> bool:
    return d.idx == m.idx and mono_divides(d.mono, m.mono)


class SyzygySet:
    """Append-only list of known leading monomials of syzygies.

    Membership means "divisible by some stored element".  Answers are
    memoized; a negative answer is only re-checked against entries appended
    since it was computed.
    """

    def __init__(self, monos: Sequence[ModMono] = ()):
        self.monos: List[ModMono] = []
        self._by_idx: Dict[int, List[Mono]] = {}
        self._memo: Dict[ModMono, Tuple[bool, int]] = {}
        for m in monos:
            self.add(m)

    def __len__(self):
        return len(self.monos)

    def __iter__(self):
        return iter(self.monos)

    def add(self, m: ModMono) -> bool:
        """Append ``m`` unless it is already a multiple; report if added."""
        m = ModMono(m.idx, tuple(m.mono))
        if self.contains(m):
            return False
        self.monos.append(m)
        self._by_idx.setdefault(m.idx, []).append(m.mono)
        return True

    def contains(self, m: ModMono) -> bool:
        lst = self._by_idx.get(m.idx)
        if not lst:
            return False
        hit = self._memo.get(m)
        start = 0
        if hit is not None:
            if hit[0]:
                return True
            start = hit[1]
        found = any(mono_divides(d, m.mono) for d in lst[start:])
        self._memo[m] = (found, len(lst))
        return found

    def copy(self) -> "SyzygySet":
        return SyzygySet(self.monos)


_EMPTY = SyzygySet()


def sign_key(m: ModMono, S: Optional[SyzygySet], cfg: OrderConfig):
    member = 1 if (S is not None and S.contains(m)) else 0
    return (m.idx, sum(m.mono), cfg.w_weight(m.mono), member, cfg.tiebreak_key(m.mono))


def cmp_sign(m1: ModMono, m2: ModMono, S: Optional[SyzygySet], cfg: OrderConfig) -> int:
    return _cmp(sign_key(m1, S, cfg), sign_key(m2, S, cfg))


def check_dimension(f: Operator, cfg: OrderConfig) -> None:
    if f.n != cfg.n:
        raise ValueError(f"operator lives in n={f.n}, order expects n={cfg.n}")


__all__ = [
    "EQUAL", "GREATER", "LESS", "ModMono", "OrderConfig", "SyzygySet", "Term",
    "cmp_sign", "cmp_terms", "default_precedence", "leading", "leading_coefficient",
    "leading_in", "leading_key", "leading_monomial", "mod_divides", "sign_key",
]
