"""Deterministic, nondeterministic and ε-nondeterministic fuzzy automata.

All three machine types share ``states``, ``alphabet``, ``initial`` and a
fuzzy ``final`` set. They differ in what ``delta`` maps a
``(state, symbol)`` pair to:

* :class:`Dfa` -- one possibility distribution (a :class:`FuzzySet`,
  possibly empty);
* :class:`Nfa` -- a :class:`DistSet` of alternative distributions;
* :class:`Enfa` -- like :class:`Nfa`, with the extra symbol :data:`EPS`.

``delta`` is always total: constructors fill missing pairs with the empty
distribution or the empty set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple

from .errors import ValidationError
from .fuzzy import EMPTY, ONE, ZERO, FuzzySet, check_name, singleton

__all__ = [
    "EPS",
    "DistSet",
    "Dfa",
    "Nfa",
    "Enfa",
    "new_dfa",
    "new_nfa",
    "new_enfa",
    "embed_dfa_as_nfa",
    "embed_crisp_nfa",
    "embed_nfa_as_enfa",
    "values_of",
]

#: Reserved token for ε-moves; never allowed in an alphabet.
EPS = "eps"


class DistSet(frozenset):
    """Deduplicated set of possibility distributions with Φ removed.

    The empty distribution contributes nothing to any language degree, so
    it is silently dropped on construction.
    """

    def __new__(cls, members: Iterable[FuzzySet] = ()):
        kept = []
        for m in members:
            if not isinstance(m, FuzzySet):
                raise ValidationError(f"DistSet member must be a FuzzySet, got {m!r}")
            if m:
                kept.append(m)
        return super().__new__(cls, kept)

    def canonical(self) -> Tuple[FuzzySet, ...]:
        """Members in a fixed, platform-independent order."""
        return tuple(sorted(self, key=FuzzySet.sort_key))

    def union_all(self) -> FuzzySet:
        """Pointwise union of every member (Φ for the empty set)."""
        acc = EMPTY
        for m in self:
            acc = acc | m
        return acc

    def __or__(self, other):
        return DistSet(frozenset.union(self, other))

    def __repr__(self) -> str:
        return "{" + ", ".join(map(repr, self.canonical())) + "}"


EMPTY_SET = DistSet()


def _dist(x) -> FuzzySet:
    return x if isinstance(x, FuzzySet) else FuzzySet(x)


def _distset(x) -> DistSet:
    if isinstance(x, DistSet):
        return x
    if isinstance(x, (FuzzySet, Mapping)):
        raise ValidationError("expected a collection of distributions, got a single distribution")
    return DistSet(_dist(m) for m in x)


@dataclass(frozen=True, eq=False)
class _Machine:
    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    delta: Dict[Tuple[str, str], object]
    initial: str
    final: FuzzySet

    kind = "?"

    def _columns(self) -> Tuple[str, ...]:
        return self.alphabet

    def __post_init__(self):
        states = tuple(self.states)
        alphabet = tuple(self.alphabet)
        for s in states:
            check_name(s)
        for a in alphabet:
            check_name(a)
            if a == EPS:
                raise ValidationError(f"{EPS!r} is reserved and cannot be an alphabet symbol")
        if len(set(states)) != len(states):
            raise ValidationError("duplicate state name")
        if len(set(alphabet)) != len(alphabet):
            raise ValidationError("duplicate alphabet symbol")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "alphabet", alphabet)
        known = set(states)
        if self.initial not in known:
            raise ValidationError(f"initial state {self.initial!r} is not a declared state")
        final = _dist(self.final)
        self._check_support(final, "final set")

        object.__setattr__(self, "final", final)

        cols = set(self._columns())
        raw = dict(self.delta)
        delta = {}
        for key, target in raw.items():
            try:
                q, a = key
            except (TypeError, ValueError):
                raise ValidationError(f"transition key must be (state, symbol), got {key!r}") from None
            if q not in known:
                raise ValidationError(f"unknown state {q!r} in transition")
            if a not in cols:
                raise ValidationError(f"unknown symbol {a!r} in transition from {q!r}")
            delta[(q, a)] = self._coerce_target(target, q, a)
        for q in states:
            for a in self._columns():
                delta.setdefault((q, a), self._default())
        object.__setattr__(self, "delta", delta)

    def _check_support(self, dist: FuzzySet, where: str) -> None:
        known = set(self.states)
        for p in dist:
            if p not in known:
                raise ValidationError(f"unknown state {p!r} in {where}")

    def _default(self):
        return EMPTY_SET

    def _coerce_target(self, target, q, a):
        ds = _distset(target)
        for m in ds:
            self._check_support(m, f"transition ({q}, {a})")
        return ds

    def __eq__(self, other) -> bool:
        # declaration order is presentational; equality is on the tuple's content
        if type(self) is not type(other):
            return NotImplemented
        return (
            set(self.states) == set(other.states)
            and set(self.alphabet) == set(other.alphabet)
            and self.initial == other.initial
            and self.final == other.final
            and self.delta == other.delta
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(|Q|={len(self.states)}, |Σ|={len(self.alphabet)}, "
            f"initial={self.initial!r}, final={self.final!r})"
        )


class Dfa(_Machine):
    """Deterministic fuzzy automaton: ``delta[q, a]`` is a single distribution."""

    kind = "dfa"

    def _default(self):
        return EMPTY

    def _coerce_target(self, target, q, a):
        dist = _dist(target)
        self._check_support(dist, f"transition ({q}, {a})")
        return dist


class Nfa(_Machine):
    """Nondeterministic fuzzy automaton: ``delta[q, a]`` is a :class:`DistSet`."""

    kind = "nfa"


class Enfa(_Machine):
    """Nondeterministic fuzzy automaton with ε-moves, keyed by ``(q, EPS)``."""

    kind = "enfa"

    def _columns(self):
        return self.alphabet + (EPS,)


def new_dfa(states, alphabet, delta, initial, final) -> Dfa:
    return Dfa(states, alphabet, delta, initial, final)


def new_nfa(states, alphabet, delta, initial, final) -> Nfa:
    return Nfa(states, alphabet, delta, initial, final)


def new_enfa(states, alphabet, delta, initial, final) -> Enfa:
    return Enfa(states, alphabet, delta, initial, final)


def embed_dfa_as_nfa(m: Dfa) -> Nfa:
    """View a Dfa as an Nfa with singleton transition sets."""
    return Nfa(m.states, m.alphabet, {k: DistSet([d]) for k, d in m.delta.items()}, m.initial, m.final)


def embed_nfa_as_enfa(m: Nfa) -> Enfa:
    return Enfa(m.states, m.alphabet, m.delta, m.initial, m.final)


def embed_crisp_nfa(
    states: Iterable[str],
    alphabet: Iterable[str],
    delta: Mapping[Tuple[str, str], Iterable[str]],
    initial: str,
    final: Iterable[str],
) -> Nfa:
    """Lift an ordinary NFA, keeping its nondeterminism.

    Each target state ``p`` of ``delta[q, a]`` becomes its own alternative
    ``1/p``; final states get degree 1.
    """
    states = tuple(states)
    known = set(states)
    fuzzy_delta = {}
    for key, targets in delta.items():
        targets = list(targets)
        for p in targets:
            if p not in known:
                raise ValidationError(f"unknown state {p!r} in transition {key!r}")
        fuzzy_delta[key] = DistSet(singleton(p) for p in targets)
    final = list(final)
    for q in final:
        if q not in known:
            raise ValidationError(f"unknown state {q!r} in final set")
    return Nfa(states, alphabet, fuzzy_delta, initial, FuzzySet({q: ONE for q in set(final)}))


def values_of(m: _Machine) -> frozenset:
    """Every degree appearing in ``m``, plus 0 and 1.

    Max-min evaluation never leaves this set, so it bounds every language
    degree and every membership any derived distribution can hold.
    """
    vals = {ZERO, ONE}
    vals.update(v for _, v in m.final.items())
    for target in m.delta.values():
        dists = [target] if isinstance(target, FuzzySet) else target
        for d in dists:
            vals.update(v for _, v in d.items())
    return frozenset(vals)


def transitions(m: _Machine, q: str, a: str) -> Tuple[FuzzySet, ...]:
    """Alternatives for ``(q, a)`` as a tuple, regardless of machine type."""
    target = m.delta[(q, a)]
    if isinstance(target, FuzzySet):
        return (target,) if target else ()
    return tuple(target)

