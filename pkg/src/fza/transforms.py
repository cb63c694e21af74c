"""Language-preserving conversions between machine types.

None of these constructions change the state set; only transitions (and,
for ε-elimination, the final set) are rewritten.
"""

from __future__ import annotations

from typing import Union

from .automata import Dfa, DistSet, Enfa, Nfa
from .errors import KindMismatchError
from .fuzzy import FuzzySet
from .semantics import DEFAULT_MAX_SET_SIZE, Evaluator

__all__ = ["determinize", "eliminate_epsilon", "compile", "prune_dominated", "prune_machine"]


def _require(m, cls, op):
    if type(m) is not cls:
        raise KindMismatchError(f"{op} expects a {cls.kind} machine, got {getattr(m, 'kind', type(m).__name__)}")


def determinize(m: Nfa) -> Dfa:
    """Collapse every transition set to the pointwise union of its members."""
    _require(m, Nfa, "determinize")
    delta = {key: ds.union_all() for key, ds in m.delta.items()}
    return Dfa(m.states, m.alphabet, delta, m.initial, m.final)


def eliminate_epsilon(m: Enfa, max_set_size: int = DEFAULT_MAX_SET_SIZE) -> Nfa:
    """Remove ε-moves.

    Symbol transitions become the one-symbol extended transitions of ``m``
    (ε-moves folded in before and after), and each state's final degree is
    the acceptance degree of its ε-closure.
    """
    _require(m, Enfa, "eliminate_epsilon")
    ev = Evaluator(m, max_set_size)
    delta = {}
    for q in m.states:
        start = ev.start(q)
        for a in m.alphabet:
            delta[(q, a)] = ev.step(start, a)
    final = FuzzySet({q: ev.closure(q).union_all().intersect(m.final).height() for q in m.states})
    return Nfa(m.states, m.alphabet, delta, m.initial, final)


def compile(m: Enfa, max_set_size: int = DEFAULT_MAX_SET_SIZE) -> Dfa:  # noqa: A001
    """ε-elimination followed by determinization."""
    return determinize(eliminate_epsilon(m, max_set_size))


def prune_dominated(ds: DistSet) -> DistSet:
    """Keep only the members not pointwise below another member.

    The union of the set is unchanged, and therefore so is every degree
    computed from it.
    """
    members = ds.canonical()
    kept = [mu for mu in members if not any(mu != other and mu <= other for other in members)]
    return DistSet(kept)


def prune_machine(m: Union[Nfa, Enfa]) -> Union[Nfa, Enfa]:
    """Apply :func:`prune_dominated` to every transition set of ``m``."""
    if not isinstance(m, (Nfa, Enfa)):
        raise KindMismatchError("pruning applies to nfa and enfa machines only")
    delta = {key: prune_dominated(ds) for key, ds in m.delta.items()}
    return type(m)(m.states, m.alphabet, delta, m.initial, m.final)
