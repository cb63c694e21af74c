"""Brute-force run semantics and bounded equivalence checking.

The run oracles enumerate every explicit run of a machine on a string and
fold each run with ``min``, taking the ``max`` over runs. They share no
code with :mod:`fza.semantics`, which computes the same degrees through
the set-valued recurrences, so the two can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Optional, Tuple

from .automata import EPS, Enfa, _Machine
from .errors import AlphabetMismatchError, ResourceLimitError, UnknownSymbolError
from .fuzzy import ONE, ZERO, FuzzySet
from .semantics import Evaluator

__all__ = [
    "DEFAULT_MAX_RUNS",
    "Verdict",
    "nfa_run_degree_oracle",
    "enfa_run_degree_oracle",
    "run_degree_oracle",
    "enumerate_language",
    "equiv_up_to",
]

DEFAULT_MAX_RUNS = 10**7
DEFAULT_MAX_STRINGS = 10**6


def _split(m: _Machine, s) -> Tuple[str, ...]:
    toks = tuple(s.split()) if isinstance(s, str) else tuple(s)
    for t in toks:
        if t not in m.alphabet:
            raise UnknownSymbolError(t)
    return toks


def _choices(m: _Machine, p: str, a: str):
    target = m.delta[(p, a)]
    if isinstance(target, FuzzySet):  # Dfa: exactly one alternative
        return (target,)
    return target


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResourceLimitError(f"run enumeration exceeded {self.limit} explored runs")


def nfa_run_degree_oracle(m: _Machine, s, max_runs: int = DEFAULT_MAX_RUNS) -> Fraction:
    """Max over all runs ``q0 -mu1-> p1 ... -mun-> pn`` of ``min(mu1(p1), ..., mun(pn), F(pn))``.

    Accepts a Dfa as well (each transition is its only alternative).
    """
    if isinstance(m, Enfa):
        raise TypeError("use enfa_run_degree_oracle for machines with ε-moves")
    toks = _split(m, s)
    n = len(toks)
    budget = _Budget(max_runs)
    best = ZERO
    stack = [(0, m.initial, ONE)]
    while stack:
        i, p, level = stack.pop()
        budget.spend()
        if i == n:
            best = max(best, min(level, m.final[p]))
            continue
        for mu in _choices(m, p, toks[i]):
            for nxt, v in mu.items():
                stack.append((i + 1, nxt, min(level, v)))
    return best


def enfa_run_degree_oracle(
    m: Enfa, s, max_runs: int = DEFAULT_MAX_RUNS, max_chain: Optional[int] = None
) -> Fraction:
    """Run oracle with ε-steps allowed before, between and after symbols.

    By default each maximal block of consecutive ε-steps must visit
    pairwise-distinct states; a repeated state closes a cycle whose removal
    can only raise the running minimum. With ``max_chain`` set, states may
    repeat instead, and blocks are cut at ``max_chain`` ε-steps.
    """
    if not isinstance(m, Enfa):
        raise TypeError("expected an Enfa")
    toks = _split(m, s)
    n = len(toks)
    budget = _Budget(max_runs)
    best = ZERO
    # (position, state, running min, states seen in the current ε-block, block length)
    stack = [(0, m.initial, ONE, frozenset([m.initial]), 0)]
    while stack:
        i, p, level, seen, chain = stack.pop()
        budget.spend()
        if i == n:
            best = max(best, min(level, m.final[p]))
        for mu in m.delta[(p, EPS)]:
            for nxt, v in mu.items():
                if max_chain is None:
                    if nxt in seen:
                        continue
                elif chain >= max_chain:
                    continue
                stack.append((i, nxt, min(level, v), seen | {nxt}, chain + 1))
        if i < n:
            for mu in m.delta[(p, toks[i])]:
                for nxt, v in mu.items():
                    stack.append((i + 1, nxt, min(level, v), frozenset([nxt]), 0))
    return best


def run_degree_oracle(m: _Machine, s, max_runs: int = DEFAULT_MAX_RUNS) -> Fraction:
    if isinstance(m, Enfa):
        return enfa_run_degree_oracle(m, s, max_runs)
    return nfa_run_degree_oracle(m, s, max_runs)


def _strings(alphabet, max_len: int) -> Iterator[Tuple[str, ...]]:
    for k in range(max_len + 1):
        yield from product(alphabet, repeat=k)


def _count(k: int, max_len: int) -> int:
    return sum(k**i for i in range(max_len + 1))


def iter_language(
    m: _Machine, max_len: int, oracle: bool = False, limit: int = DEFAULT_MAX_STRINGS
) -> Iterator[Tuple[Tuple[str, ...], Fraction]]:
    """Lazily yield ``(string, degree)`` in length-lexicographic order.

    Symbols are ordered by sorted token name. With ``oracle=True`` each
    degree comes from the run oracle instead of the recurrences.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    alphabet = sorted(m.alphabet)
    total = _count(len(alphabet), max_len)
    if total > limit:
        raise ResourceLimitError(f"{total} strings up to length {max_len} exceeds limit {limit}")
    if oracle:
        for s in _strings(alphabet, max_len):
            yield s, run_degree_oracle(m, s)
        return
    ev = Evaluator(m)
    level = [((), ev.start())]
    for k in range(max_len + 1):
        for s, cfg in level:
            yield s, ev.degree(cfg)
        if k < max_len:
            level = [(s + (a,), ev.step(cfg, a)) for s, cfg in level for a in alphabet]


def enumerate_language(
    m: _Machine, max_len: int, oracle: bool = False, limit: int = DEFAULT_MAX_STRINGS
) -> List[Tuple[Tuple[str, ...], Fraction]]:
    """Degrees of every string up to ``max_len``, zeros included."""
    return list(iter_language(m, max_len, oracle, limit))


@dataclass(frozen=True)
class Verdict:
    bound: int
    counterexample: Optional[Tuple[Tuple[str, ...], Fraction, Fraction]] = None

    @property
    def equivalent(self) -> bool:
        return self.counterexample is None

    def __bool__(self) -> bool:
        return self.equivalent


def equiv_up_to(
    a: _Machine, b: _Machine, max_len: int, oracle: bool = False, limit: int = DEFAULT_MAX_STRINGS
) -> Verdict:
    """Compare degrees on every string up to ``max_len``.

    Returns the length-lexicographically least string on which the machines
    disagree, if any.
    """
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetMismatchError(
            f"alphabets differ: {sorted(a.alphabet)} vs {sorted(b.alphabet)}"
        )
    for (s, da), (_, db) in zip(
        iter_language(a, max_len, oracle, limit), iter_language(b, max_len, oracle, limit)
    ):
        if da != db:
            return Verdict(max_len, (s, da, db))
    return Verdict(max_len)
