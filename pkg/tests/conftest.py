"""Shared helpers: corpus settings, random operators, a rewriting oracle."""

from __future__ import annotations

import json
import random
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Dict, Tuple

import pytest

from tropf5 import OrderConfig, Operator, buchberger, f5_groebner, parse_operator

CORPUS = ["bench_row1", "bench_row2", "bench_row3", "bench_row4", "bench_row5"]


def load_corpus(name: str) -> dict:
    return json.loads((resources.files("tropf5") / "corpus" / f"{name}.json").read_text())


def corpus_setup(name: str):
    d = load_corpus(name)
    cfg = OrderConfig(d["n"], d["w"], d["omega"], d["tiebreak"], d["precedence"], d["prime"])
    return cfg, [parse_operator(s, d["n"]) for s in d["generators"]]


@lru_cache(maxsize=None)
def f5_run(name: str, completion: bool = True):
    cfg, F = corpus_setup(name)
    return f5_groebner(F, cfg, completion=completion)


@lru_cache(maxsize=None)
def bb_run(name: str):
    cfg, F = corpus_setup(name)
    return buchberger(F, cfg)


def worked():
    return corpus_setup("worked_example")


# -- random data --------------------------------------------------------------

def random_mono(rng: random.Random, n: int, max_deg: int, gamma: bool = True):
    d = rng.randint(0, max_deg)
    m = [0] * (2 * n + 1)
    slots = list(range(0 if gamma else 1, 2 * n + 1))
    for _ in range(d):
        m[rng.choice(slots)] += 1
    return tuple(m)


def random_coeff(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([k for k in range(-9, 10) if k]))


def random_operator(rng: random.Random, n: int, max_deg: int = 4, max_terms: int = 5,
                    gamma: bool = True) -> Operator:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_mono(rng, n, max_deg, gamma)] = random_coeff(rng)
    return Operator(n, terms)


def random_homogeneous(rng: random.Random, n: int, deg: int, max_terms: int = 4) -> Operator:
    f = random_operator(rng, n, deg, max_terms, gamma=False)
    while not f:
        f = random_operator(rng, n, deg, max_terms, gamma=False)
    return f.homogenize()


# -- rewriting oracle for the product -------------------------------------------
# A word is a tuple of letters; letter 0 is h, 1..n are x_i, n+1..2n are d_i.
# The normal form is h^* x^* d^* in letter order; the only non-trivial rule
# is d_i x_i -> x_i d_i + h h.  Everything else commutes.

def _mono_to_word(m) -> Tuple[int, ...]:
    word = []
    for letter, e in enumerate(m):
        word.extend([letter] * e)
    return tuple(word)


def rewrite_product(f: Operator, g: Operator) -> Operator:
    n = f.n
    todo: Dict[Tuple[int, ...], Fraction] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            w = _mono_to_word(m1) + _mono_to_word(m2)
            todo[w] = todo.get(w, 0) + c1 * c2
    done: Dict[Tuple[int, ...], Fraction] = {}
    while todo:
        w, c = todo.popitem()
        if not c:
            continue
        k = next((i for i in range(len(w) - 1) if w[i] > w[i + 1]), None)
        if k is None:
            done[w] = done.get(w, 0) + c
            continue
        a, b = w[k], w[k + 1]
        swapped = w[:k] + (b, a) + w[k + 2:]
        todo[swapped] = todo.get(swapped, 0) + c
        if a == b + n and 1 <= b <= n:
            extra = w[:k] + (0, 0) + w[k + 2:]
            todo[extra] = todo.get(extra, 0) + c
    terms = {}
    for w, c in done.items():
        if c:
            m = [0] * (2 * n + 1)
            for letter in w:
                m[letter] += 1
            terms[tuple(m)] = c
    return Operator(n, terms)


@pytest.fixture
def rng():
    return random.Random(20240611)




# -- acceptance summary ---------------------------------------------------------

ACCEPTANCE: Dict[int, Tuple[str, bool]] = {}
NOTES: Dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k} ({title}): {'PASS' if ok else 'FAIL'}")
    for key in sorted(NOTES):
        terminalreporter.write_line(f"  {key}: {NOTES[key]}")
