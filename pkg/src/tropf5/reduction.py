"""Tropical division with ecart-guided reducer choice.

Because the tropical order looks at coefficient valuations, plain top
reduction can walk down forever through terms with the same monomial and
growing valuation.  The cure is the Mora-style cache: working operators whose
chosen reducer had positive ecart are remembered, and a later working operator
with the same leading monomial may be reduced by one of them, followed by the
rescaling ``q <- q' / (1 - c)``.  Here ``val(c) > 0``, so ``1 - c`` is a unit
and the leading term keeps descending.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .orders import ModMono, OrderConfig, SyzygySet, leading_in, sign_key
from .weylcore import Mono, Operator, mono_divides, mono_quotient, mul_term_terms

MAX_STEPS = 500_000


class ReductionError(RuntimeError):
    pass


@dataclass
class ReductionOutcome:
    remainder: Operator
    quotients: Dict[int, Operator]
    reduced_to_zero: bool
    steps: int = 0
    lt_trace: List[tuple] = field(default_factory=list, repr=False)
    corrections: List[Fraction] = field(default_factory=list, repr=False)


def ecart(f: Operator, g: Operator) -> int:
    """Number of support monomials of ``g`` missing from ``f``."""
    return sum(1 for m in g.terms if m not in f.terms)


def _ecart(q: Dict[Mono, Fraction], g: Dict[Mono, Fraction]) -> int:
    return sum(1 for m in g if m not in q)


def _axpy(acc: Dict, c, x: Dict) -> None:
    """acc += c * x, dropping cancellations."""
    for m, v in x.items():
        old = acc.get(m)
        new = c * v if old is None else old + c * v
        if new:
            acc[m] = new
        elif old is not None:
            del acc[m]


def _combine(cur: Dict, old: Dict, c, inv) -> Dict:
    """(cur - c*old) * inv."""
    out = dict(cur)
    _axpy(out, -c, old)
    return {m: v * inv for m, v in out.items()}


def _copy_h(H: Optional[Dict[int, Dict]]):
    if H is None:
        return None
    return {k: dict(v) for k, v in H.items()}


def _divide(f: Operator, reducers: Sequence[Operator], cfg: OrderConfig,
            admissible: Optional[Callable[[int, Mono], bool]], full: bool,
            with_quotients: bool) -> ReductionOutcome:
    n = f.n
    key = cfg.term_key
    val = cfg.valuation
    red = []
    for g in reducers:
        if g.n != n:
            raise ValueError("reducer dimension mismatch")
        gm, _ = leading_in(g.terms, cfg)
        red.append((g.terms, gm))
    products: Dict[Tuple[int, Mono], Dict] = {}

    q: Dict[Mono, Fraction] = dict(f.terms)
    r: Dict[Mono, Fraction] = {}
    H: Optional[Dict[int, Dict]] = {k: {} for k in range(len(red))} if with_quotients else None
    cache: List[tuple] = []  # (q_terms, lm, lc, H, r)
    trace: List[tuple] = []
    corrections: List[Fraction] = []
    steps = 0

    while q:
        steps += 1
        if steps > MAX_STEPS:
            raise ReductionError("reduction exceeded the step limit")
        lm, lc = leading_in(q, cfg)
        trace.append(key(lm, lc))

        best = None  # (ecart, class, index, t)
        for k, (gt, gm) in enumerate(red):
            if not mono_divides(gm, lm):
                continue
            t = mono_quotient(lm, gm)
            if admissible is not None and not admissible(k, t):
                continue
            tg = products.get((k, t))
            if tg is None:
                tg = mul_term_terms(Fraction(1), t, gt)
                products[(k, t)] = tg
            cand = (_ecart(q, tg), 0, k, t)
            if best is None or cand[:3] < best[:3]:
                best = cand
        for ci, entry in enumerate(cache):
            if entry[1] == lm:
                cand = (_ecart(q, entry[0]), 1, ci, None)
                if best is None or cand[:3] < best[:3]:
                    best = cand

        if best is None:
            if not full:
                break
            cache.append((dict(q), lm, lc, _copy_h(H), dict(r)))
            r[lm] = lc
            del q[lm]
            continue

        e, cls, idx, t = best
        snapshot = (dict(q), lm, lc, _copy_h(H), dict(r)) if e > 0 else None
        if cls == 0:
            tg = products[(idx, t)]
            c = lc / tg[lm]
            _axpy(q, -c, tg)
            if H is not None:
                _axpy(H[idx], Fraction(1), {t: c})
        else:
            qk, _, lck, Hk, rk = cache[idx]
            c = lc / lck
            if not val(c) > 0:
                raise ReductionError(f"cache correction with val(c) = {val(c)} <= 0")
            corrections.append(c)
            inv = 1 / (1 - c)
            q = _combine(q, qk, c, inv)
            if H is not None:
                H = {k: _combine(H[k], Hk[k], c, inv) for k in H}
            if r or rk:
                r = _combine(r, rk, c, inv)
        if snapshot is not None:
            cache.append(snapshot)

    remainder = dict(r)
    _axpy(remainder, Fraction(1), q)
    quotients = {}
    if H is not None:
        quotients = {k: Operator(n, v, _trusted=True) for k, v in H.items() if v}
    return ReductionOutcome(
        remainder=Operator(n, remainder, _trusted=True),
        quotients=quotients,
        reduced_to_zero=not remainder,
        steps=steps,
        lt_trace=trace,
        corrections=corrections,
    )


def normal_form(f: Operator, G: Sequence[Operator], cfg: OrderConfig,
                with_quotients: bool = True) -> ReductionOutcome:
    """Full tropical division of ``f`` by ``G``.

    No term of the remainder is divisible by a leading monomial of ``G``, and
    ``f == sum(quotients[k] * G[k]) + remainder`` exactly.
    """
    G = [g for g in G]
    if any(not g for g in G):
        raise ValueError("cannot divide by the zero operator")
    return _divide(f, G, cfg, None, True, with_quotients)


def s_top_reduce(f: Operator, sig: ModMono, G: Sequence[Tuple[Operator, ModMono]],
                 S: SyzygySet, cfg: OrderConfig,
                 with_quotients: bool = True) -> ReductionOutcome:
    """Signature-respecting top reduction of ``f`` with guessed signature ``sig``.

    ``t*g`` may cancel the leading term only when ``LM(t)*s(g)`` is strictly
    below ``sig``.
    Stops as soon as the leading term has no admissible reducer.
    """
    ops = [g for g, _ in G]
    sigs = [s for _, s in G]
    target = sign_key(sig, S, cfg)

    def admissible(k: int, t: Mono) -> bool:
        m = sigs[k].times(t)
        if S.contains(m):
            return False  # true signature of t*g unknown
        return sign_key(m, S, cfg) < target

    return _divide(f, ops, cfg, admissible, False, with_quotients)


def reconstruct(outcome: ReductionOutcome, G: Sequence[Operator]) -> Operator:
    """``sum(H_k * G[k]) + remainder``; equals the divided operator."""
    total = outcome.remainder
    for k, Hk in outcome.quotients.items():
        total = total + Hk * G[k]
    return total
