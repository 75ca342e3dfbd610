import random

import pytest

from tropf5 import (
    ModMono, OrderConfig, Signature, SigOperator, Stats, SyzygySet, buchberger, f5_groebner,
    is_redundant, make_normal_pairs, parse_operator, prune, same_leading_ideal, sig_gr, spair,
    verify_groebner,
)
from tropf5.sigengine import SigPair, SignatureOrderError
from tropf5.weylcore import make_mono

from conftest import worked, f5_run, random_homogeneous

CFG, (F1, F2) = worked()


def p(src):
    return parse_operator(src, 2)


def sig(idx, alpha=(0, 0), beta=(0, 0), gamma=0):
    return Signature(ModMono(idx, make_mono(2, gamma, alpha, beta)))


f1 = SigOperator(F1, sig(1))
f2 = SigOperator(F2, sig(2))
g1 = SigOperator(p("8*x1*h^2"), sig(2, beta=(0, 1)))


def test_spair_examples():
    pr = spair(f2, f1, CFG)
    assert pr.spair_op == p("6*x1^2*d2 - 4*x1*x2^2 + 8*x1*h^2")
    assert pr.guessed_sig.mono == sig(2, beta=(0, 1)).mono
    pr = spair(g1, f1, CFG)
    assert pr.spair_op == p("-8*x1*x2*h^2")
    assert pr.guessed_sig.mono == sig(2, beta=(0, 2)).mono
    assert not spair(f2, f2, CFG).spair_op


def test_spair_rejects_unit_cofactor_on_dominant_side():
    a = SigOperator(p("x1*x2"), sig(2))
    b = SigOperator(p("x1"), sig(1))
    with pytest.raises(SignatureOrderError):
        spair(a, b, CFG)


def test_redundancy_examples():
    assert is_redundant(p("-24*x1^2*h^2"), sig(2, alpha=(0, 1), beta=(0, 1)), [f1, f2, g1], CFG)
    assert not is_redundant(F2, sig(2), [], CFG)
    assert not is_redundant(g1.op, g1.sig, [g1], CFG)


def test_make_normal_pairs_examples():
    pairs, S = make_normal_pairs(f2, [f1], SyzygySet(), CFG)
    assert [pr.provenance for pr in pairs] == [(1, 0)]
    stats = Stats()
    pairs, S = make_normal_pairs(g1, [f1, f2], SyzygySet(), CFG, stats)
    assert [pr.provenance for pr in pairs] == [(2, 0)]
    assert stats.pruned_redundant == 1
    assert S.contains(ModMono(2, make_mono(2, 0, (1, 0), (0, 1))))
    # both sides divisible by S
    S = SyzygySet([ModMono(1, make_mono(2)), ModMono(2, make_mono(2))])
    assert make_normal_pairs(f2, [f1], S, CFG)[0] == []


def _pair(s, key, seq):
    return SigPair(p("x1"), s, (0, 0), key, seq)


def test_prune():
    S = SyzygySet([sig(2, beta=(0, 2)).mono])
    assert prune([_pair(sig(2, beta=(0, 3)), (1,), 0)], S, CFG) == []
    small, big = _pair(sig(1), (1,), 1), _pair(sig(1), (2,), 0)
    assert prune([big, small], SyzygySet(), CFG) == [small]
    assert prune([], SyzygySet(), CFG) == []


def test_sig_gr_example():
    S = SyzygySet()
    G, S, stats = sig_gr(f2, [f1], S, CFG)
    assert [g.op for g in G] == [F1, F2, p("8*x1*h^2")]
    assert S.contains(sig(2, beta=(0, 2)).mono)
    assert stats.zero_reductions == 1 and stats.normal_pairs_processed == 2


def test_sig_gr_single_seed():
    G, S, stats = sig_gr(f1, [], SyzygySet(), CFG)
    assert [g.op for g in G] == [F1] and stats.pairs_generated == 0


@pytest.mark.parametrize("completion", [True, False])
def test_f5_example(completion):
    res = f5_groebner([F1, F2], CFG, completion=completion)
    assert res.basis_dehom == [F1, F2, p("8*x1")]
    assert verify_groebner(res.basis, CFG)


def test_f5_singleton_and_duplicates():
    res = f5_groebner([F2], CFG)
    assert res.basis == [F2] and res.stats.pairs_generated == 0
    res = f5_groebner([F2, F2.scale(3)], CFG)
    assert len(res.basis) == 1 and res.stats.skipped_generators == 1
    with pytest.raises(ValueError):
        f5_groebner([p("0")], CFG)


def test_row1_pure_and_completed_agree():
    pure = f5_run("bench_row1", completion=False)
    full = f5_run("bench_row1")
    from conftest import corpus_setup
    cfg, _ = corpus_setup("bench_row1")
    assert verify_groebner(pure.basis, cfg) and verify_groebner(full.basis, cfg)
    assert same_leading_ideal(pure.basis, full.basis, cfg)
    assert full.stats.normal_pairs_processed <= pure.stats.normal_pairs_processed


def test_random_inputs_terminate_with_groebner_bases():
    rng = random.Random(5)
    cfg = OrderConfig(2, [1, 1, 2, 2], [-1, -1, 1, 1], "lex", prime=3)
    for _ in range(25):
        F = [random_homogeneous(rng, 2, rng.randint(1, 3), 3) for _ in range(rng.randint(2, 3))]
        res = f5_groebner(F, cfg)
        assert verify_groebner(res.basis, cfg)
        assert same_leading_ideal(res.basis, buchberger(F, cfg).basis, cfg)
