"""Signature-based (F5) Groebner bases for left ideals of D_n^(h)(Q).

Only signatures are tracked, never full module representations: each basis
element carries the leading module monomial it was certified with, and the
set ``S`` collects leading monomials of syzygies as they are discovered
(reductions to zero, redundant S-pairs).
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .orders import ModMono, OrderConfig, SyzygySet, check_dimension, leading_in, sign_key
from .reduction import normal_form, s_top_reduce
from .weylcore import (
    Operator, mono_divides, mono_lcm, mono_one, mono_quotient, mono_times, mul_term_terms,
)


class SignatureOrderError(AssertionError):
    pass


@dataclass(frozen=True)
class Signature:
    mono: ModMono
    coeff: Fraction = Fraction(1)  # carried along, never used for ordering


@dataclass(frozen=True)
class SigOperator:
    op: Operator
    sig: Signature


@dataclass
class SigPair:
    spair_op: Operator
    guessed_sig: Signature
    provenance: Tuple[int, int]
    lt_key: tuple = ()
    seq: int = 0


@dataclass
class Stats:
    algorithm: str = "f5"
    pairs_generated: int = 0
    pruned_by_syzygy: int = 0
    pruned_rewritable: int = 0
    pruned_redundant: int = 0
    rejected_equal_signature: int = 0
    rejected_covered: int = 0
    pruned_by_completion: int = 0
    abandoned_pairs: int = 0
    repair_seeds: int = 0
    completion_checks: int = 0
    completion_reductions: int = 0
    normal_pairs_processed: int = 0
    zero_reductions: int = 0
    basis_size: int = 0
    skipped_generators: int = 0
    elapsed: float = 0.0

    @property
    def zero_ratio(self) -> float:
        if not self.normal_pairs_processed:
            return 0.0
        return self.zero_reductions / self.normal_pairs_processed

    def to_dict(self) -> dict:
        d = asdict(self)
        d["zero_ratio"] = self.zero_ratio
        return d


@dataclass
class F5Result:
    basis: List[Operator]
    basis_dehom: List[Operator]
    S: SyzygySet
    stats: Stats
    sig_basis: List[SigOperator] = field(default_factory=list)
    popped: List[ModMono] = field(default_factory=list)
    popped_s: List[int] = field(default_factory=list)  # len(S) at each pop


# -- S-pairs ------------------------------------------------------------------

def _pair_parts(g1: Operator, g2: Operator, cfg: OrderConfig):
    m1, c1 = leading_in(g1.terms, cfg)
    m2, c2 = leading_in(g2.terms, cfg)
    lcm = mono_lcm(m1, m2)
    t1 = mono_quotient(lcm, m1)
    t2 = mono_quotient(lcm, m2)
    return (c2, t1), (c1, t2)


def spair_operator(g1: Operator, g2: Operator, cfg: OrderConfig) -> Operator:
    """``u1*g1 - u2*g2`` with the cofactor terms built from the leading terms."""
    (d, t1), (c, t2) = _pair_parts(g1, g2, cfg)
    out = mul_term_terms(d, t1, g1.terms)
    for m, v in mul_term_terms(c, t2, g2.terms).items():
        nv = out.get(m, 0) - v
        if nv:
            out[m] = nv
        else:
            out.pop(m, None)
    return Operator(g1.n, out, _trusted=True)


def spair(g1: SigOperator, g2: SigOperator, cfg: OrderConfig,
          S: Optional[SyzygySet] = None, provenance: Tuple[int, int] = (0, 1)) -> SigPair:
    """S-pair of two signed operators with its guessed signature."""
    if not g1.op or not g2.op:
        raise ValueError("S-pair of the zero operator")
    (d, t1), (c, t2) = _pair_parts(g1.op, g2.op, cfg)
    s1 = g1.sig.mono.times(t1)
    s2 = g2.sig.mono.times(t2)
    k1 = sign_key(s1, S, cfg)
    k2 = sign_key(s2, S, cfg)
    if k1 >= k2:
        guessed = Signature(s1, d * g1.sig.coeff)
        if k1 > k2 and t1 == mono_one(g1.op.n):
            raise SignatureOrderError("dominating cofactor of an S-pair is 1")
    else:
        guessed = Signature(s2, c * g2.sig.coeff)
        if t2 == mono_one(g2.op.n):
            raise SignatureOrderError("dominating cofactor of an S-pair is 1")
    op = spair_operator(g1.op, g2.op, cfg)
    return SigPair(op, guessed, provenance, _lt_key(op, cfg, guessed.coeff))


def _lt_key(op: Operator, cfg: OrderConfig, scale=1):
    """Key of ``LT(op / scale)``; dividing by the signature coefficient makes
    leading terms of elements with the same signature comparable."""
    if not op:
        return (-1,)
    m, c = leading_in(op.terms, cfg)
    return cfg.term_key(m, c / scale)


# -- redundancy ----------------------------------------------------------------

def redundancy_witness(f: Operator, sig: Signature, G: Sequence[SigOperator],
                       S: Optional[SyzygySet], cfg: OrderConfig) -> Optional[ModMono]:
    """Return ``LM(t)*s(g)`` if ``f == t*g`` with ``sig < LM(t)*s(g)``, else None."""
    if not f:
        raise ValueError("redundancy of the zero operator")
    fm, fc = leading_in(f.terms, cfg)
    target = sign_key(sig.mono, S, cfg)
    for g in G:
        gm, gc = leading_in(g.op.terms, cfg)
        if len(g.op.terms) > len(f.terms) or not all(a <= b for a, b in zip(gm, fm)):
            continue
        t = mono_quotient(fm, gm)
        cand = g.sig.mono.times(t)
        if not target < sign_key(cand, S, cfg):
            continue
        if mul_term_terms(fc / gc, t, g.op.terms) == f.terms:
            return cand
    return None


def is_redundant(f: Operator, sig: Signature, G: Sequence[SigOperator],
                 cfg: OrderConfig, S: Optional[SyzygySet] = None) -> bool:
    return redundancy_witness(f, sig, G, S, cfg) is not None


# -- pair bookkeeping -----------------------------------------------------------

def make_normal_pairs(new: SigOperator, G: Sequence[SigOperator], S: SyzygySet,
                      cfg: OrderConfig, stats: Optional[Stats] = None,
                      new_id: Optional[int] = None, seq_start: int = 0):
    """Pairs of ``new`` with every element of ``G`` that pass the normal-pair filters.

    Filters: neither guessed side is a multiple of ``S``; the two guessed
    sides differ; the S-pair is not redundant to ``G + [new]`` (a redundant
    one certifies a syzygy leading monomial, which is appended to ``S``).
    """
    stats = stats if stats is not None else Stats()
    new_id = len(G) if new_id is None else new_id
    pool = list(G) + [new]
    pairs: List[SigPair] = []
    for j, g in enumerate(G):
        stats.pairs_generated += 1
        (d, t1), (c, t2) = _pair_parts(new.op, g.op, cfg)
        s1 = new.sig.mono.times(t1)
        s2 = g.sig.mono.times(t2)
        if S.contains(s1) or S.contains(s2):
            stats.pruned_by_syzygy += 1
            continue
        if s1 == s2:
            stats.rejected_equal_signature += 1
            continue
        p = spair(new, g, cfg, S, (new_id, j))
        if p.spair_op:
            w = redundancy_witness(p.spair_op, p.guessed_sig, pool, S, cfg)
            if w is not None:
                S.add(w)
                stats.pruned_redundant += 1
                continue
        p.seq = seq_start + len(pairs)
        pairs.append(p)
    return pairs, S


def prune(P: Sequence[SigPair], S: SyzygySet, cfg: OrderConfig,
          stats: Optional[Stats] = None) -> List[SigPair]:
    """Drop pairs whose signature is a multiple of ``S``; keep one pair per signature."""
    stats = stats if stats is not None else Stats()
    best = {}
    for p in P:
        m = p.guessed_sig.mono
        if S.contains(m):
            stats.pruned_by_syzygy += 1
            continue
        cur = best.get(m)
        if cur is None:
            best[m] = p
        else:
            stats.pruned_rewritable += 1
            if (p.lt_key, p.seq) < (cur.lt_key, cur.seq):
                best[m] = p
    return sorted(best.values(), key=lambda p: p.seq)


# -- main loops ----------------------------------------------------------------

class _Engine:
    def __init__(self, cfg: OrderConfig, stats: Stats, S: SyzygySet, check: bool = True,
                 completion: bool = True):
        self.cfg = cfg
        self.stats = stats
        self.S = S
        self.check = check
        self.popped: List[ModMono] = []
        self.popped_s: List[int] = []
        self.seq = 0
        self.completion = completion
        self.closed = set()  # basis index pairs whose S-pair is known to reduce to 0

    def add_pairs(self, P, new, G, new_id):
        pairs, _ = make_normal_pairs(new, G, self.S, self.cfg, self.stats, new_id, self.seq)
        self.seq += len(pairs)
        P.extend(pairs)

    def sig_gr(self, seed: SigOperator, G_prev: Sequence[SigOperator]):
        """One signature loop; returns the new basis and operators to re-seed."""
        cfg, S, stats = self.cfg, self.S, self.stats
        G = list(G_prev)
        P: List[SigPair] = []
        self.add_pairs(P, seed, G, len(G))
        G.append(seed)
        lead = [self.lead(g) for g in G]
        seed_deg = seed.op.degree()
        prev = None
        while P:
            P = prune(P, S, cfg, stats)
            if not P:
                break
            pick = min(P, key=lambda p: (sign_key(p.guessed_sig.mono, S, cfg), p.seq))
            sig = pick.guessed_sig
            if self.completion and prev is not None and sum(sig.mono.mono) > sum(prev.mono):
                # all signatures of degree <= deg(prev) are done
                done, repairs = self.completion_status(G, sum(prev.mono) + seed_deg)
                if done:
                    stats.pruned_by_completion += len(P)
                    return G, []
                if repairs:
                    stats.abandoned_pairs += len(P)
                    return G, repairs
            P.remove(pick)
            if self.check and prev is not None:
                # both were non-multiples of S when popped, so compare without S
                if sign_key(sig.mono, None, cfg) < sign_key(prev, None, cfg):
                    raise SignatureOrderError(f"signature {sig.mono} popped after {prev}")
            prev = sig.mono
            self.popped.append(sig.mono)
            self.popped_s.append(len(S))
            if self.rewritable(pick, lead):
                stats.pruned_rewritable += 1
                continue
            if pick.spair_op:
                w = redundancy_witness(pick.spair_op, sig, G, S, cfg)
                if w is not None:
                    S.add(w)
                    stats.pruned_redundant += 1
                    continue
            stats.normal_pairs_processed += 1
            out = s_top_reduce(pick.spair_op, sig.mono, [(g.op, g.sig.mono) for g in G],
                               S, cfg, with_quotients=False)
            if out.reduced_to_zero:
                stats.zero_reductions += 1
                S.add(sig.mono)
                continue
            new = SigOperator(out.remainder, sig)
            if self.covered(new, lead):
                stats.rejected_covered += 1
                continue
            w = redundancy_witness(new.op, sig, G, S, cfg)
            if w is not None:
                S.add(w)
                stats.pruned_redundant += 1
                continue
            self.add_pairs(P, new, G, len(G))
            G.append(new)
            lead.append(self.lead(new))
        if self.completion:
            _, repairs = self.completion_status(G, None)
            return G, repairs
        return G, []

    def completion_status(self, G: Sequence[SigOperator], bound: Optional[int]):
        """Buchberger's criterion on the operators of ``G``.

        Pairs whose lcm has degree ``<= bound`` (all pairs if ``bound`` is None)
        are due: the loop has passed their degree, so a nonzero remainder there
        is an ideal element the loop missed.  Returns ``(is_groebner, remainders
        of failing due pairs)``.  Pairs reducing to zero are remembered.
        """
        cfg = self.cfg
        ops = [g.op for g in G]
        lms = [leading_in(g.terms, cfg)[0] for g in ops]
        self.stats.completion_checks += 1
        due, later = [], []
        for j in range(len(ops)):
            for i in range(j):
                if (i, j) in self.closed:
                    continue
                d = sum(mono_lcm(lms[i], lms[j]))
                (due if bound is None or d <= bound else later).append((d, i, j))
        repairs = []
        for _, i, j in sorted(due):
            r = self._pair_remainder(ops, i, j)
            if r:
                repairs.append(r)
        if repairs:
            return False, self._minimal(repairs)
        for _, i, j in sorted(later):
            if self._pair_remainder(ops, i, j):
                return False, []
        return True, []

    def _minimal(self, ops: Sequence[Operator]) -> List[Operator]:
        """Keep operators whose leading monomial no kept one divides; others resurface later."""
        kept, lms = [], []
        for f in sort_generators(dedupe(ops), self.cfg):
            m = leading_in(f.terms, self.cfg)[0]
            if not any(mono_divides(k, m) for k in lms):
                kept.append(f)
                lms.append(m)
        return kept

    def _pair_remainder(self, ops, i, j) -> Operator:
        self.stats.completion_reductions += 1
        sp = spair_operator(ops[i], ops[j], self.cfg)
        r = normal_form(sp, ops, self.cfg, with_quotients=False).remainder if sp else sp
        if not r:
            self.closed.add((i, j))
        return r

    def lead(self, g: SigOperator):
        m, c = leading_in(g.op.terms, self.cfg)
        return g.sig.mono, m, c / g.sig.coeff

    def covered(self, f: SigOperator, lead) -> bool:
        """Is ``(LM(f), s(f))`` a componentwise multiple of ``(LM(g), s(g))`` for a basis ``g``?

        Keeping only non-multiples makes the stored pairs an antichain, which
        is finite by Dickson's lemma.
        """
        sig = f.sig.mono
        m, _ = leading_in(f.op.terms, self.cfg)
        for s, gm, _ in lead:
            if s.idx == sig.idx and mono_divides(s.mono, sig.mono) and mono_divides(gm, m):
                if mono_quotient(sig.mono, s.mono) == mono_quotient(m, gm):
                    return True
        return False

    def rewritable(self, pair: SigPair, lead) -> bool:
        """Is ``sigma = t*s(g)`` for some basis ``g`` with ``LT(t*g) <= LT(spair)``?

        ``LT(t*g) == t*LT(g)`` since commutation terms have lower w-weight.
        """
        sig = pair.guessed_sig.mono
        key = self.cfg.term_key
        for s, m, c in lead:
            if s.idx != sig.idx or not mono_divides(s.mono, sig.mono):
                continue
            t = mono_quotient(sig.mono, s.mono)
            if key(mono_times(t, m), c) <= pair.lt_key:
                return True
        return False


def sig_gr(seed: SigOperator, G_prev: Sequence[SigOperator], S: SyzygySet,
           cfg: OrderConfig, stats: Optional[Stats] = None):
    """Extend the s-Groebner basis ``G_prev`` by the seed (signature ``e_i``)."""
    stats = stats if stats is not None else Stats()
    eng = _Engine(cfg, stats, S, completion=False)
    G, _ = eng.sig_gr(seed, G_prev)
    stats.basis_size = len(G)
    return G, S, stats


def sort_generators(F: Sequence[Operator], cfg: OrderConfig) -> List[Operator]:
    """Increasing leading term of the monic operator; stable, so scaling an input
    never reorders the inputs."""
    return sorted(F, key=lambda f: cfg.mono_key(leading_in(f.terms, cfg)[0]))


def dedupe(ops: Sequence[Operator]) -> List[Operator]:
    seen = set()
    out = []
    for f in ops:
        if f and f not in seen:
            seen.add(f)
            out.append(f)
    return out


def f5_groebner(F: Sequence[Operator], cfg: OrderConfig, check: bool = True,
                completion: bool = True) -> F5Result:
    """Tropical F5: Groebner basis of the left ideal generated by ``F``.

    Inputs are homogenized, sorted by leading term, reduced against the basis
    built so far, and fed one at a time into the signature loop.
    """
    F = [f for f in F if f]
    if not F:
        raise ValueError("need at least one nonzero generator")
    for f in F:
        check_dimension(f, cfg)
    start = time.perf_counter()
    stats = Stats(algorithm="f5")
    S = SyzygySet()
    eng = _Engine(cfg, stats, S, check=check, completion=completion)
    G: List[SigOperator] = []
    index = 0
    queue = deque(sort_generators([f.homogenize() for f in F], cfg))
    while queue:
        f = queue.popleft()
        r = normal_form(f, [g.op for g in G], cfg, with_quotients=False).remainder if G else f
        if not r:
            stats.skipped_generators += 1
            continue
        index += 1
        seed = SigOperator(r, Signature(ModMono(index, mono_one(cfg.n))))
        if not G:
            G = [seed]
            continue
        G, repairs = eng.sig_gr(seed, G)
        if repairs:
            # missed ideal elements go next, ahead of the remaining inputs
            stats.repair_seeds += len(repairs)
            queue.extendleft(reversed(sort_generators(repairs, cfg)))
    stats.basis_size = len(G)
    stats.elapsed = time.perf_counter() - start
    basis = [g.op for g in G]
    return F5Result(
        basis=basis,
        basis_dehom=dedupe([g.dehomogenize() for g in basis]),
        S=S,
        stats=stats,
        sig_basis=G,
        popped=eng.popped,
        popped_s=eng.popped_s,
    )
