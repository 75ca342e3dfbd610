import random
from fractions import Fraction

from tropf5 import ModMono, SyzygySet, normal_form, parse_operator, s_top_reduce
from tropf5.orders import leading_monomial
from tropf5.reduction import ecart, reconstruct
from tropf5.weylcore import make_mono, mono_divides

from conftest import worked, random_homogeneous

CFG, (F1, F2) = worked()


def p(src, n=2):
    return parse_operator(src, n)


def e(idx, beta=(0, 0), alpha=(0, 0)):
    return ModMono(idx, make_mono(2, 0, alpha, beta))


def test_ecart():
    assert ecart(p("x1 + x2", 3), p("x1 + x3", 3)) == 1
    assert ecart(F2, F2) == 0
    assert ecart(p("6*x1^2*d2 - 4*x1*x2^2 + 8*x1*h^2"), p("6*x1^2*d2 + 3*x1^2*x2")) == 1


def test_normal_form_examples():
    assert normal_form(F2, [], CFG).remainder == F2
    assert normal_form(F2, [F2], CFG).reduced_to_zero
    out = normal_form(p("8*x1^2*x2 + 6*x1^3 + x1*h^2"), [F2], CFG)
    assert out.remainder == p("x1*h^2")


def test_s_top_reduce_example_step():
    sp = p("6*x1^2*d2 - 4*x1*x2^2 + 8*x1*h^2")
    G = [(F1, e(1)), (F2, e(2))]
    out = s_top_reduce(sp, e(2, beta=(0, 1)), G, SyzygySet(), CFG)
    assert out.remainder == p("8*x1*h^2")
    assert reconstruct(out, [F1, F2]) == sp
    # after cancelling 6x^2 d_y by 3x^2 f1 the working operator is -4xy^2 - 3x^2y + 8xh^2
    first = sp - p("3*x1^2") * F1
    assert first == p("-4*x1*x2^2 - 3*x1^2*x2 + 8*x1*h^2")
    assert out.lt_trace[0] > out.lt_trace[1]


def test_s_top_reduce_to_zero():
    g1 = p("8*x1*h^2")
    G = [(F1, e(1)), (F2, e(2)), (g1, e(2, beta=(0, 1)))]
    out = s_top_reduce(p("-8*x1*x2*h^2"), e(2, beta=(0, 2)), G, SyzygySet(), CFG)
    assert out.reduced_to_zero


def test_s_top_reduce_without_reducers():
    out = s_top_reduce(F2, e(3), [], SyzygySet(), CFG)
    assert out.remainder == F2 and not out.quotients


def test_signature_blocks_reduction():
    # f2 cannot reduce itself at its own signature
    out = s_top_reduce(F2, e(2), [(F2, e(2))], SyzygySet(), CFG)
    assert out.remainder == F2


def test_random_division_contracts():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(1, 2)
        G = [random_homogeneous(rng, n, rng.randint(1, 2)) for _ in range(rng.randint(1, 3))]
        f = random_homogeneous(rng, n, 3, 5)
        cfg = CFG if n == 2 else _cfg1()
        out = normal_form(f, G, cfg)
        assert reconstruct(out, G) == f
        assert all(a > b for a, b in zip(out.lt_trace, out.lt_trace[1:]))
        for c in out.corrections:
            assert cfg.valuation(c) > 0
        lms = [leading_monomial(g, cfg) for g in G]
        assert not any(mono_divides(l, m) for l in lms for m in out.remainder.terms)


def _cfg1():
    from tropf5 import OrderConfig
    return OrderConfig(1, [1, 2], [-1, 1], prime=3)


def test_cache_correction_branch():
    # found by random search; the unit 1 - c rescaling fires four times
    G = [p("-4*h + 4*x1 - 4*x2"), p("8*x2 - 2*d2"), p("-9*x1 + 5*x2")]
    f = p("-6*h^3 - 4*x1*x2*d2 + 6*x2*d1*d2 + 9*x2*d2^2")
    out = normal_form(f, G, CFG)
    assert out.corrections == [Fraction(9, 5)] * 4
    assert all(CFG.valuation(c) > 0 for c in out.corrections)
    assert reconstruct(out, G) == f
    assert out.remainder == p("-1617*h^3 + 243/2*d1*h^2")
