"""Deterministic and nondeterministic fuzzy automata under max-min semantics."""

from .automata import (
    EPS,
    Dfa,
    DistSet,
    Enfa,
    Nfa,
    embed_crisp_nfa,
    embed_dfa_as_nfa,
    embed_nfa_as_enfa,
    new_dfa,
    new_enfa,
    new_nfa,
    values_of,
)
from .errors import (
    AlphabetMismatchError,
    FormatError,
    FzaError,
    KindMismatchError,
    ResourceLimitError,
    UnknownSymbolError,
    ValidationError,
)
from .fuzzy import EMPTY, FuzzySet, format_value, make_fuzzy_set, parse_value
from .io_format import dump, load, parse_automaton, serialize_automaton
from .oracle import Verdict, enumerate_language, equiv_up_to, run_degree_oracle
from .semantics import extended_delta, language_degree
from .transforms import compile, determinize, eliminate_epsilon, prune_dominated, prune_machine

__version__ = "0.1.0"
