"""Shared builders for the test suite: example machines and random corpora."""

import random
from fractions import Fraction
from itertools import product
from pathlib import Path

from fza.automata import EPS, new_enfa, new_nfa

FIXTURES = Path(__file__).parent / "fixtures"

Q5 = ["q0", "q1", "q2", "q3", "q4"]
FINAL = {"q2": "0.5", "q4": "0.9"}

NFA_DELTA = {
    ("q0", "a"): [{"q1": "0.9", "q2": "0.2"}, {"q2": "0.2", "q3": "0.9"}],
    ("q1", "b"): [{"q1": "0.1", "q4": "0.7"}, {"q2": "0.7", "q4": "0.1"}],
    ("q2", "a"): [{"q4": "0.5"}],
    ("q3", "b"): [{"q2": "0.7", "q4": "0.1"}, {"q3": "0.1", "q4": "0.7"}],
}

ENFA_DELTA = {
    **NFA_DELTA,
    ("q0", EPS): [{"q2": "0.7"}],
    ("q1", EPS): [{"q4": "0.8"}],
    ("q3", EPS): [{"q4": "0.5"}],
}


def sample_nfa():
    return new_nfa(Q5, ["a", "b"], NFA_DELTA, "q0", FINAL)


def sample_enfa():
    return new_enfa(Q5, ["a", "b"], ENFA_DELTA, "q0", FINAL)


def fixture_text(name):
    return (FIXTURES / f"{name}.fza.json").read_text(encoding="utf-8")


GRID = [Fraction(i, 10) for i in range(11)]


def strings(alphabet, max_len):
    for k in range(max_len + 1):
        yield from product(sorted(alphabet), repeat=k)


def random_dist(rng, states, grid=GRID, zero_bias=0.5):
    """Distribution on ``grid``; about half the states left at 0."""
    positive = [v for v in grid if v]
    return {q: rng.choice(positive) for q in states if rng.random() > zero_bias}


def random_nfa(rng, max_states=4, alphabet=("a", "b"), max_alts=2, grid=GRID):
    n = rng.randint(1, max_states)
    states = [f"s{i}" for i in range(n)]
    delta = {}
    for q in states:
        for a in alphabet:
            delta[(q, a)] = [random_dist(rng, states, grid) for _ in range(rng.randint(0, max_alts))]
    final = {q: rng.choice(grid) for q in states}
    return new_nfa(states, alphabet, delta, rng.choice(states), final)


def random_enfa(rng, max_states=4, alphabet=("a", "b"), eps_density=0.3, max_alts=2, grid=GRID):
    base = random_nfa(rng, max_states, alphabet, max_alts, grid)
    delta = dict(base.delta)
    for q in base.states:
        if rng.random() < eps_density:
            delta[(q, EPS)] = [random_dist(rng, base.states, grid)]
    return new_enfa(base.states, base.alphabet, delta, base.initial, base.final)


def nfa_corpus(seed, count, **kw):
    rng = random.Random(seed)
    return [random_nfa(rng, **kw) for _ in range(count)]


def enfa_corpus(seed, count, **kw):
    rng = random.Random(seed)
    return [random_enfa(rng, **kw) for _ in range(count)]


def random_crisp_nfa(rng, max_states=4, alphabet=("a", "b")):
    n = rng.randint(1, max_states)
    states = [f"c{i}" for i in range(n)]
    delta = {
        (q, a): [p for p in states if rng.random() < 0.4] for q in states for a in alphabet
    }
    final = [q for q in states if rng.random() < 0.4]
    return states, list(alphabet), delta, rng.choice(states), final


def crisp_accepts(delta, initial, final, word):
    """Plain boolean subset simulation of an ordinary NFA."""
    current = {initial}
    for a in word:
        current = {p for q in current for p in delta.get((q, a), ())}
    return bool(current & set(final))


# criterion number -> (passed, label, seconds); filled by test_acceptance, printed by conftest
ACCEPTANCE = {}
