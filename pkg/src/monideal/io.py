"""Text and structured (JSON) formats for monomials, ideals and presentations.

Text grammar::

    monomial := factor (('*' | ' ')? factor)* | '1'
    factor   := var ('^' int)?
    var      := 'x' int | letter          (a -> x1, b -> x2, ...)
    ideal    := monomial (',' monomial)*  | '0'

Letters may be juxtaposed, so ``def, cef`` is accepted as written.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Optional

from .core import DomainError, Monomial, MonomialIdeal, MonomialPrime, make_ideal

_FACTOR = re.compile(r"\s*(?:(x)(\d+)|([a-z]))\s*(?:\^\s*(\d+))?\s*\*?")


class ParseError(DomainError):
    pass


def _parse_factors(text: str) -> dict:
    text = text.strip()
    if text == "1":
        return {}
    exps: dict = {}
    pos = 0
    while pos < len(text):
        match = _FACTOR.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(f"cannot parse monomial {text!r} at position {pos}")
        if match.group(1):
            idx = int(match.group(2))
            if idx < 1:
                raise ParseError(f"variable index must be positive in {text!r}")
        else:
            idx = ord(match.group(3)) - ord("a") + 1
        exp = int(match.group(4)) if match.group(4) is not None else 1
        exps[idx] = exps.get(idx, 0) + exp
        pos = match.end()
    return exps


def parse_monomial(text: str, nvars: int) -> Monomial:
    exps = _parse_factors(text)
    if exps and max(exps) > nvars:
        raise ParseError(f"variable index {max(exps)} exceeds nvars={nvars}")
    return Monomial(exps.get(i, 0) for i in range(1, nvars + 1))


def _split_ideal(text: str) -> list:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return [part for part in (p.strip() for p in text.split(",")) if part]


def infer_nvars(text: str) -> int:
    parts = _split_ideal(text)
    if parts == ["0"]:
        return 0
    return max((max(_parse_factors(p), default=0) for p in parts), default=0)


def parse_ideal(text: str, nvars: Optional[int] = None) -> MonomialIdeal:
    """Parse a comma-separated monomial list; ``nvars`` defaults to the largest index used."""
    parts = _split_ideal(text)
    if nvars is None:
        nvars = infer_nvars(text)
    if parts in ([], ["0"]):
        return MonomialIdeal.zero(nvars)
    return make_ideal(nvars, [parse_monomial(p, nvars) for p in parts])


def ideal_to_dict(ideal: MonomialIdeal) -> dict:
    return {"nvars": ideal.nvars, "gens": [list(g) for g in ideal.gens]}


def ideal_from_dict(doc: dict) -> MonomialIdeal:
    try:
        return make_ideal(int(doc["nvars"]), doc["gens"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed ideal document: {exc}") from exc


def dumps_ideal(ideal: MonomialIdeal) -> str:
    return json.dumps(ideal_to_dict(ideal))


def loads_ideal(text: str) -> MonomialIdeal:
    return ideal_from_dict(json.loads(text))


def presentation_to_list(terms) -> list:
    """(prime, exponent) pairs as ``[[sorted variable indices], exponent]``."""
    return [[sorted(p.vars), int(d)] for p, d in terms]


def presentation_from_list(nvars: int, items) -> list:
    return [(MonomialPrime(nvars, frozenset(v)), int(d)) for v, d in items]


def load_ideal_arg(value: str, nvars: Optional[int] = None) -> MonomialIdeal:
    """Read an ideal from inline text, a text file, or a JSON document/file."""
    path = Path(value)
    if len(value) < 4096 and path.is_file():
        value = path.read_text()
    stripped = value.strip()
    if stripped.startswith("{"):
        ideal = loads_ideal(stripped)
        if nvars is not None and nvars != ideal.nvars:
            raise ParseError(f"document has nvars={ideal.nvars}, --nvars says {nvars}")
        return ideal
    return parse_ideal(stripped, nvars)
