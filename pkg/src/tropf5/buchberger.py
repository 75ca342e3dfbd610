"""Naive tropical Buchberger algorithm, used as a baseline and as a checker."""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple

from .orders import OrderConfig, check_dimension, leading_monomial
from .reduction import normal_form
from .sigengine import Stats, dedupe, spair_operator
from .weylcore import Operator, mono_divides, mono_lcm


@dataclass
class BuchbergerResult:
    basis: List[Operator]
    basis_dehom: List[Operator]
    stats: Stats


def _pair_entry(G, i, j, cfg, seq):
    lcm = mono_lcm(leading_monomial(G[i], cfg), leading_monomial(G[j], cfg))
    return (cfg.mono_key(lcm), seq, i, j)


def buchberger(F: Sequence[Operator], cfg: OrderConfig) -> BuchbergerResult:
    """Every pair is formed and reduced; no criteria are applied."""
    F = [f for f in F if f]
    if not F:
        raise ValueError("need at least one nonzero generator")
    for f in F:
        check_dimension(f, cfg)
    start = time.perf_counter()
    stats = Stats(algorithm="buchberger")
    G = dedupe([f.homogenize() for f in F])
    queue: List[Tuple] = []
    seq = 0
    for i, j in combinations(range(len(G)), 2):
        heapq.heappush(queue, _pair_entry(G, i, j, cfg, seq))
        seq += 1
    stats.pairs_generated = seq
    while queue:
        _, _, i, j = heapq.heappop(queue)
        stats.normal_pairs_processed += 1
        sp = spair_operator(G[i], G[j], cfg)
        r = normal_form(sp, G, cfg, with_quotients=False).remainder if sp else sp
        if not r:
            stats.zero_reductions += 1
            continue
        G.append(r)
        k = len(G) - 1
        for i in range(k):
            heapq.heappush(queue, _pair_entry(G, i, k, cfg, seq))
            seq += 1
            stats.pairs_generated += 1
    stats.basis_size = len(G)
    stats.elapsed = time.perf_counter() - start
    return BuchbergerResult(G, dedupe([g.dehomogenize() for g in G]), stats)


def groebner_failures(G: Sequence[Operator], cfg: OrderConfig) -> List[Tuple[int, int]]:
    """Index pairs whose S-pair does not reduce to zero modulo ``G``."""
    G = [g for g in G if g]
    bad = []
    for i, j in combinations(range(len(G)), 2):
        sp = spair_operator(G[i], G[j], cfg)
        if sp and normal_form(sp, G, cfg, with_quotients=False).remainder:
            bad.append((i, j))
    return bad


def verify_groebner(G: Sequence[Operator], cfg: OrderConfig) -> bool:
    return not groebner_failures(G, cfg)


def same_leading_ideal(G1: Sequence[Operator], G2: Sequence[Operator], cfg: OrderConfig) -> bool:
    """Do the leading monomials of ``G1`` and ``G2`` generate the same monomial ideal?"""
    L1 = [leading_monomial(g, cfg) for g in G1 if g]
    L2 = [leading_monomial(g, cfg) for g in G2 if g]

    def covered(A, B):
        return all(any(mono_divides(b, a) for b in B) for a in A)

    return covered(L1, L2) and covered(L2, L1)
