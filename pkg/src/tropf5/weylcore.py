"""Sparse elements of the homogenized Weyl algebra over Q.

A monomial ``h^g x^a d^b`` is stored as one flat tuple
``(g, a_1, ..., a_n, b_1, ..., b_n)``; an :class:`Operator` maps such tuples
to nonzero :class:`~fractions.Fraction` coefficients.  Every operator is kept
in the normal form ``x^a d^b h^g`` (x left of d, h central), so the term map
is unique.  Products use the commutation rule ``d_i x_i = x_i d_i + h^2``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from math import comb, factorial
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

Mono = Tuple[int, ...]


# -- monomial helpers ---------------------------------------------------------

def mono_one(n: int) -> Mono:
    return (0,) * (2 * n + 1)


def make_mono(n: int, gamma: int = 0, alpha=None, beta=None) -> Mono:
    alpha = tuple(alpha) if alpha is not None else (0,) * n
    beta = tuple(beta) if beta is not None else (0,) * n
    if len(alpha) != n or len(beta) != n:
        raise ValueError("exponent vectors must have length n")
    if gamma < 0 or min(alpha + beta, default=0) < 0:
        raise ValueError("exponents must be nonnegative")
    return (gamma,) + alpha + beta


def mono_n(m: Mono) -> int:
    return (len(m) - 1) // 2


def split_mono(m: Mono):
    """Return ``(gamma, alpha, beta)``."""
    n = mono_n(m)
    return m[0], m[1:1 + n], m[1 + n:]


def mono_deg(m: Mono) -> int:
    return sum(m)


def mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_quotient(b: Mono, a: Mono) -> Mono:
    """Commutative quotient ``b / a``; caller guarantees ``a | b``."""
    return tuple(y - x for x, y in zip(a, b))


def mono_times(a: Mono, b: Mono) -> Mono:
    """Commutative product of symbols (exponent addition)."""
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


# -- noncommutative product ---------------------------------------------------

@lru_cache(maxsize=None)
def commute_single(b: int, a: int) -> Tuple[Tuple[int, int], ...]:
    """Expand ``d^b x^a`` in one variable pair.

    Returns ``((coeff, k), ...)`` meaning ``sum coeff * x^(a-k) d^(b-k) h^(2k)``
    with ``coeff = k! C(a,k) C(b,k)``.
    """
    return tuple((factorial(k) * comb(a, k) * comb(b, k), k)
                 for k in range(min(a, b) + 1))


@lru_cache(maxsize=1 << 18)
def mono_product(m1: Mono, m2: Mono) -> Tuple[Tuple[int, Mono], ...]:
    """Normal-form expansion of ``m1 * m2`` as ``((int_coeff, mono), ...)``."""
    n = mono_n(m1)
    g = m1[0] + m2[0]
    a1 = m1[1:1 + n]
    b1 = m1[1 + n:]
    a2 = m2[1:1 + n]
    b2 = m2[1 + n:]
    alpha = [x + y for x, y in zip(a1, a2)]
    beta = [x + y for x, y in zip(b1, b2)]
    clash = [i for i in range(n) if b1[i] and a2[i]]
    if not clash:
        return ((1, (g,) + tuple(alpha) + tuple(beta)),)
    out = []
    for choice in _cartesian(*(commute_single(b1[i], a2[i]) for i in clash)):
        coeff = 1
        ks = 0
        al = list(alpha)
        be = list(beta)
        for i, (c, k) in zip(clash, choice):
            coeff *= c
            ks += k
            al[i] -= k
            be[i] -= k
        out.append((coeff, (g + 2 * ks,) + tuple(al) + tuple(be)))
    return tuple(out)


def _add_into(acc: Dict[Mono, Fraction], m: Mono, c) -> None:
    v = acc.get(m)
    if v is None:
        acc[m] = c
    else:
        v += c
        if v:
            acc[m] = v
        else:
            del acc[m]


def mul_term_terms(coeff, mono: Mono, terms: Dict[Mono, Fraction]) -> Dict[Mono, Fraction]:
    """Left product ``(coeff*mono) * g`` on raw term maps."""
    out: Dict[Mono, Fraction] = {}
    for m, c in terms.items():
        cc = coeff * c
        for k, mm in mono_product(mono, m):
            _add_into(out, mm, cc * k if k != 1 else cc)
    return out


# -- operators ----------------------------------------------------------------

class Operator:
    """An element of D_n^(h)(Q); treat instances as immutable."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Dict[Mono, Fraction]] = None, *, _trusted=False):
        self.n = n
        if _trusted:
            self.terms = terms
            return
        clean: Dict[Mono, Fraction] = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != 2 * n + 1:
                    raise ValueError(f"monomial {m} does not fit n={n}")
                if c:
                    clean[m] = Fraction(c)
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, n: int) -> "Operator":
        return cls(n, {}, _trusted=True)

    @classmethod
    def constant(cls, n: int, c=1) -> "Operator":
        c = Fraction(c)
        return cls(n, {mono_one(n): c} if c else {}, _trusted=True)

    @classmethod
    def monomial(cls, mono: Mono, coeff=1) -> "Operator":
        return cls(mono_n(mono), {tuple(mono): Fraction(coeff)})

    @classmethod
    def x(cls, i: int, n: int) -> "Operator":
        m = [0] * (2 * n + 1)
        m[i] = 1
        return cls(n, {tuple(m): Fraction(1)}, _trusted=True)

    @classmethod
    def d(cls, i: int, n: int) -> "Operator":
        m = [0] * (2 * n + 1)
        m[n + i] = 1
        return cls(n, {tuple(m): Fraction(1)}, _trusted=True)

    @classmethod
    def h(cls, n: int) -> "Operator":
        m = [0] * (2 * n + 1)
        m[0] = 1
        return cls(n, {tuple(m): Fraction(1)}, _trusted=True)

    # basic protocol
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Operator):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Operator.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def items(self) -> List[Tuple[Mono, Fraction]]:
        """Terms in lexicographic order of the exponent tuple."""
        return sorted(self.terms.items())

    def __iter__(self) -> Iterator[Tuple[Mono, Fraction]]:
        return iter(self.items())

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def coeff(self, mono: Mono) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    # arithmetic
    def _check(self, other: "Operator"):
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def _coerce(self, other):
        if isinstance(other, Operator):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Operator.constant(self.n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(out, m, c)
        return Operator(self.n, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Operator(self.n, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(out, m, -c)
        return Operator(self.n, out, _trusted=True)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Operator":
        c = Fraction(c)
        if not c:
            return Operator.zero(self.n)
        return Operator(self.n, {m: c * v for m, v in self.terms.items()}, _trusted=True)

    def mul_term(self, coeff, mono: Mono) -> "Operator":
        """Left product ``(coeff * mono) * self``."""
        return Operator(self.n, mul_term_terms(Fraction(coeff), tuple(mono), self.terms), _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Operator):
            return NotImplemented
        self._check(other)
        out: Dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                cc = c1 * c2
                for k, mm in mono_product(m1, m2):
                    _add_into(out, mm, cc * k if k != 1 else cc)
        return Operator(self.n, out, _trusted=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = Operator.constant(self.n, 1)
        for _ in range(e):
            out = out * self
        return out

    # grading
    def degrees(self) -> set:
        return {sum(m) for m in self.terms}

    def degree(self) -> int:
        """Maximal total degree (h counted); -1 for zero."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogenize(self) -> "Operator":
        top = self.degree()
        out: Dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            mm = (m[0] + top - sum(m),) + m[1:]
            _add_into(out, mm, c)
        return Operator(self.n, out, _trusted=True)

    def dehomogenize(self) -> "Operator":
        out: Dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            _add_into(out, (0,) + m[1:], c)
        return Operator(self.n, out, _trusted=True)

    def __repr__(self):
        return f"Operator({self.n}, {format_operator(self)!r})"

    def __str__(self):
        return format_operator(self)


def homogenize(f: Operator) -> Operator:
    return f.homogenize()


def dehomogenize(f: Operator) -> Operator:
    return f.dehomogenize()


def is_homogeneous(f: Operator) -> bool:
    return f.is_homogeneous()


def mul(f: Operator, g: Operator) -> Operator:
    return f * g


def mul_mono(b: int, a: int, i: int, n: int) -> Operator:
    """``d_i^b * x_i^a`` in normal form (``i`` is 1-based)."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range for n={n}")
    out = {}
    for c, k in commute_single(b, a):
        m = [0] * (2 * n + 1)
        m[0] = 2 * k
        m[i] = a - k
        m[n + i] = b - k
        out[tuple(m)] = Fraction(c)
    return Operator(n, out)


# -- printing -----------------------------------------------------------------

_ALIASES = ("x", "y", "z")


def var_names(n: int, aliases: bool = False) -> Tuple[List[str], List[str]]:
    if aliases and n <= 3:
        xs = list(_ALIASES[:n])
        return xs, ["d" + v for v in xs]
    return [f"x{i}" for i in range(1, n + 1)], [f"d{i}" for i in range(1, n + 1)]


def format_mono(m: Mono, aliases: bool = False) -> str:
    n = mono_n(m)
    xs, ds = var_names(n, aliases)
    parts = []
    for name, e in zip(xs + ds, m[1:]):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    if m[0] == 1:
        parts.append("h")
    elif m[0] > 1:
        parts.append(f"h^{m[0]}")
    return "*".join(parts) if parts else "1"


def format_operator(f: Operator, order_key=None, aliases: bool = False) -> str:
    """Render ``f`` in the input grammar; re-parsing gives back ``f``.

    ``order_key(mono, coeff)`` puts the largest term first when supplied.
    """
    if not f.terms:
        return "0"
    if order_key is None:
        items = sorted(f.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    else:
        items = sorted(f.terms.items(), key=lambda t: order_key(t[0], t[1]), reverse=True)
    out = []
    for idx, (m, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        body = format_mono(m, aliases)
        if body == "1":
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        if idx == 0:
            out.append(("-" if sign == "-" else "") + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


def operators_from(items: Iterable[Tuple[Mono, object]], n: int) -> Operator:
    out: Dict[Mono, Fraction] = {}
    for m, c in items:
        _add_into(out, tuple(m), Fraction(c))
    return Operator(n, out, _trusted=True)
