"""``.fza.json`` documents.

A document is a JSON object::

    {
      "format": 1,
      "kind": "nfa",
      "states": ["q0", "q1"],
      "alphabet": ["a"],
      "initial": "q0",
      "final": {"q1": "0.9"},
      "transitions": [
        {"from": "q0", "symbol": "a", "dist": {"q0": "1/3", "q1": "0.5"}}
      ]
    }

Degrees are always strings (decimal or ``num/den``) so they stay exact.
For ``nfa`` and ``enfa`` each record is one alternative of ``delta[from,
symbol]``; ``enfa`` documents may use the reserved symbol ``"eps"``.
Pairs without records default to the empty distribution or set.

:func:`serialize_automaton` emits a canonical form: names sorted,
transitions sorted by ``(from, symbol, dist)``, empty transitions
omitted, values in canonical literal form.
"""

from __future__ import annotations

import json
from collections import defaultdict
from pathlib import Path
from typing import Union

from .automata import EPS, Dfa, DistSet, Enfa, Nfa, _Machine
from .errors import FormatError, ValidationError
from .fuzzy import FuzzySet, format_value, parse_value

__all__ = ["FORMAT_VERSION", "parse_automaton", "serialize_automaton", "load", "dump"]

FORMAT_VERSION = 1
SUFFIX = ".fza.json"

_KINDS = {"dfa": Dfa, "nfa": Nfa, "enfa": Enfa}
_TOP_KEYS = {"format", "kind", "states", "alphabet", "initial", "final", "transitions"}
_RECORD_KEYS = {"from", "symbol", "dist"}


def _no_duplicates(pairs):
    obj = {}
    for k, v in pairs:
        if k in obj:
            raise FormatError(f"duplicate key {k!r}")
        obj[k] = v
    return obj


def _str_list(doc, key):
    value = doc[key]
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise FormatError(f"{key!r} must be a list of strings")
    return value


def _dist(obj, where) -> FuzzySet:
    if not isinstance(obj, dict):
        raise FormatError(f"{where} must be an object mapping states to value strings")
    pairs = []
    for state, lit in obj.items():
        if not isinstance(lit, str):
            raise FormatError(f"{where}: value for {state!r} must be a string literal, got {lit!r}")
        try:
            pairs.append((state, parse_value(lit)))
        except ValidationError as exc:
            raise FormatError(f"{where}: {exc}") from None
    return FuzzySet(pairs)


def parse_automaton(text: str) -> _Machine:
    """Parse and validate a document, returning a Dfa, Nfa or Enfa."""
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    missing = _TOP_KEYS - doc.keys()
    if missing:
        raise FormatError(f"missing field(s): {', '.join(sorted(missing))}")
    extra = doc.keys() - _TOP_KEYS
    if extra:
        raise FormatError(f"unknown field(s): {', '.join(sorted(extra))}")
    if isinstance(doc["format"], bool) or doc["format"] != FORMAT_VERSION:
        raise FormatError(f"unsupported format version {doc['format']!r}")
    kind = doc["kind"]
    if kind not in _KINDS:
        raise FormatError(f"kind must be one of dfa, nfa, enfa; got {kind!r}")
    states = _str_list(doc, "states")
    alphabet = _str_list(doc, "alphabet")
    initial = doc["initial"]
    if not isinstance(initial, str):
        raise FormatError("'initial' must be a string")
    final = _dist(doc["final"], "'final'")
    records = doc["transitions"]
    if not isinstance(records, list):
        raise FormatError("'transitions' must be a list")

    grouped = defaultdict(list)
    for i, rec in enumerate(records):
        where = f"transition #{i + 1}"
        if not isinstance(rec, dict) or rec.keys() != _RECORD_KEYS:
            raise FormatError(f"{where} must have exactly the fields from, symbol, dist")
        q, a = rec["from"], rec["symbol"]
        if not isinstance(q, str) or not isinstance(a, str):
            raise FormatError(f"{where}: 'from' and 'symbol' must be strings")
        if a == EPS and kind != "enfa":
            raise FormatError(f"{where}: {EPS!r} transitions are only allowed in enfa documents")
        if kind == "dfa" and (q, a) in grouped:
            raise FormatError(f"{where}: second record for ({q}, {a}) in a dfa")
        grouped[(q, a)].append(_dist(rec["dist"], where))

    if kind == "dfa":
        delta = {key: dists[0] for key, dists in grouped.items()}
    else:
        delta = {key: DistSet(dists) for key, dists in grouped.items()}
    return _KINDS[kind](states, alphabet, delta, initial, final)


def _dist_obj(d: FuzzySet) -> dict:
    return {k: format_value(v) for k, v in d.items()}


def serialize_automaton(m: _Machine) -> str:
    """Canonical document text (ends with a newline)."""
    records = []
    for (q, a), target in m.delta.items():
        dists = [target] if isinstance(target, FuzzySet) else list(target)
        for d in dists:
            if d:
                records.append(((q, a, d.sort_key()), {"from": q, "symbol": a, "dist": _dist_obj(d)}))
    records.sort(key=lambda r: r[0])
    doc = {
        "format": FORMAT_VERSION,
        "kind": m.kind,
        "states": sorted(m.states),
        "alphabet": sorted(m.alphabet),
        "initial": m.initial,
        "final": _dist_obj(m.final),
        "transitions": [r[1] for r in records],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load(path: Union[str, Path]) -> _Machine:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"not UTF-8: {exc}") from None
    return parse_automaton(text)


def dump(m: _Machine, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_automaton(m), encoding="utf-8")

