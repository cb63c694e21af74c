"""Extended transition functions and language degrees.

Strings are sequences of alphabet tokens. A plain ``str`` is split on
whitespace, so ``"a b"`` and ``["a", "b"]`` denote the same two-symbol
string and ``""`` or ``[]`` is the empty string.

For the set-valued machines the reached configuration is a
:class:`DistSet`; for a :class:`Dfa` it is a single distribution. The
degree of acceptance is the largest ``height(mu ∩ F)`` over the reached
distributions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from .automata import EPS, Dfa, DistSet, Enfa, Nfa, _Machine
from .errors import ResourceLimitError, UnknownSymbolError, ValidationError
from .fuzzy import EMPTY, ZERO, FuzzySet, singleton

__all__ = [
    "Evaluator",
    "EvalTrace",
    "tokens",
    "dfa_extended_delta",
    "dfa_language_degree",
    "nfa_extended_delta",
    "nfa_language_degree",
    "epsilon_closure_state",
    "epsilon_closure_dist",
    "enfa_extended_delta",
    "enfa_language_degree",
    "language_degree",
    "extended_delta",
    "set_degree",
    "trace",
]

DEFAULT_MAX_SET_SIZE = 200_000

Config = Union[FuzzySet, DistSet]


def tokens(m: _Machine, s) -> Tuple[str, ...]:
    """Normalise ``s`` to a tuple of tokens, checking each against ``m``."""
    toks = tuple(s.split()) if isinstance(s, str) else tuple(s)
    alphabet = set(m.alphabet)
    for t in toks:
        if t not in alphabet:
            raise UnknownSymbolError(t)
    return toks


def set_degree(dists, final: FuzzySet) -> Fraction:
    """``∨ {height(mu ∩ final) | mu ∈ dists}``; 0 for an empty collection."""
    return max(((mu & final).height() for mu in dists), default=ZERO)


class Evaluator:
    """Step-by-step evaluation of one machine.

    Caches ε-closures of states, so one evaluator can be reused across many
    strings (see :func:`fza.oracle.enumerate_language`). Instances are not
    meant to be shared between threads.
    """

    def __init__(self, machine: _Machine, max_set_size: int = DEFAULT_MAX_SET_SIZE):
        self.machine = machine
        self.max_set_size = max_set_size
        self._closures: Dict[str, DistSet] = {}

    def _guard(self, ds: DistSet) -> DistSet:
        if len(ds) > self.max_set_size:
            raise ResourceLimitError(
                f"distribution set grew to {len(ds)} members (limit {self.max_set_size})"
            )
        return ds

    def start(self, q: str | None = None) -> Config:
        """Configuration reached from ``q`` on the empty string."""
        m = self.machine
        q = m.initial if q is None else q
        if isinstance(m, Dfa):
            return singleton(q)
        if isinstance(m, Enfa):
            return self.closure(q)
        return DistSet([singleton(q)])

    def step(self, cur: Config, a: str) -> Config:
        """Configuration after reading one more symbol ``a``."""
        m = self.machine
        delta = m.delta
        if isinstance(m, Dfa):
            acc = EMPTY
            for p, v in cur.items():
                acc = acc | delta[(p, a)].scale(v)
            return acc
        out = set()
        for mu_s in cur:
            for p, v in mu_s.items():
                for mu_p in delta[(p, a)]:
                    nu = mu_p.scale(v)
                    if isinstance(m, Enfa):
                        out.update(self.closure_of(nu))
                    else:
                        out.add(nu)
        return self._guard(DistSet(out))

    def degree(self, cur: Config) -> Fraction:
        final = self.machine.final
        if isinstance(cur, FuzzySet):
            return (cur & final).height()
        return set_degree(cur, final)

    def run(self, s, q: str | None = None) -> Config:
        cur = self.start(q)
        for a in tokens(self.machine, s):
            cur = self.step(cur, a)
        return cur

    def closure(self, q: str) -> DistSet:
        """ε-closure of state ``q``: every distribution reachable by ε-moves.

        Computed as the least fixpoint of
        ``S <- S ∪ {mu(p)·eta | mu ∈ S, p ∈ supp(mu), eta ∈ {1/p} ∪ delta(p, eps)}``
        starting from ``{1/q} ∪ delta(q, eps)``. Memberships stay inside the
        machine's finite value set, so the fixpoint is reached.
        """
        cached = self._closures.get(q)
        if cached is not None:
            return cached
        m = self.machine
        if not isinstance(m, Enfa):
            result = DistSet([singleton(q)])
        else:

            def one_step(p):
                return (singleton(p),) + tuple(m.delta[(p, EPS)])

            seen = set(one_step(q))
            todo = list(seen)
            while todo:
                mu = todo.pop()
                for p, v in mu.items():
                    for eta in one_step(p):
                        nu = eta.scale(v)
                        if nu not in seen:
                            seen.add(nu)
                            todo.append(nu)
                            if len(seen) > self.max_set_size:
                                raise ResourceLimitError(
                                    f"ε-closure of {q!r} exceeded {self.max_set_size} members"
                                )
            result = DistSet(seen)
        self._closures[q] = result
        return result

    def closure_of(self, mu: FuzzySet) -> DistSet:
        """ε-closure of a distribution: ``{mu} ∪ {mu(q)·eta | eta ∈ closure(q)}``."""
        out = {mu}
        for q, v in mu.items():
            out.update(eta.scale(v) for eta in self.closure(q))
        return DistSet(out)


def _expect(m, cls):
    if not isinstance(m, cls):
        raise TypeError(f"expected {cls.__name__}, got {type(m).__name__}")


def extended_delta(m: _Machine, q: str, s) -> Config:
    """Dispatch to the extended transition function of ``m``'s type."""
    if q not in m.states:
        raise ValidationError(f"unknown state {q!r}")
    return Evaluator(m).run(s, q)


def dfa_extended_delta(m: Dfa, q: str, s) -> FuzzySet:
    _expect(m, Dfa)
    return extended_delta(m, q, s)


def dfa_language_degree(m: Dfa, s) -> Fraction:
    return (dfa_extended_delta(m, m.initial, s) & m.final).height()


def nfa_extended_delta(m: Nfa, q: str, s) -> DistSet:
    _expect(m, Nfa)
    return extended_delta(m, q, s)


def nfa_language_degree(m: Nfa, s) -> Fraction:
    return set_degree(nfa_extended_delta(m, m.initial, s), m.final)


def epsilon_closure_state(m: Enfa, q: str) -> DistSet:
    _expect(m, Enfa)
    return Evaluator(m).closure(q)


def epsilon_closure_dist(m: Enfa, mu: FuzzySet) -> DistSet:
    _expect(m, Enfa)
    known = set(m.states)
    for q in mu:
        if q not in known:
            raise ValidationError(f"unknown state {q!r} in distribution")
    return Evaluator(m).closure_of(mu)


def enfa_extended_delta(m: Enfa, q: str, s) -> DistSet:
    _expect(m, Enfa)
    return extended_delta(m, q, s)


def enfa_language_degree(m: Enfa, s) -> Fraction:
    return set_degree(enfa_extended_delta(m, m.initial, s), m.final)


def language_degree(m: _Machine, s) -> Fraction:
    """Degree to which ``m`` accepts ``s``, for any machine type."""
    ev = Evaluator(m)
    return ev.degree(ev.run(s))


@dataclass
class EvalTrace:
    """Configurations after each prefix of ``string`` (index 0 is the empty prefix)."""

    string: Tuple[str, ...]
    configs: List[Config] = field(default_factory=list)
    degree: Fraction = ZERO


def trace(m: _Machine, s: Sequence[str] | str) -> EvalTrace:
    ev = Evaluator(m)
    toks = tokens(m, s)
    cur = ev.start()
    configs = [cur]
    for a in toks:
        cur = ev.step(cur, a)
        configs.append(cur)
    return EvalTrace(toks, configs, ev.degree(cur))
