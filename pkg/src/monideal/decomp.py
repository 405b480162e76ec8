"""Irreducible decomposition, associated primes and prime-power presentations."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product as cartesian
from typing import Callable, Optional

from .core import (
    DomainError,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    ResourceCapError,
    compositions,
    intersect,
    is_subideal,
    localize,
    make_ideal,
    minimalize,
)

#: Largest variable count for which minimal covers are enumerated.
MAX_COVER_VARS = 16


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal (x_i^{e_i} : i in exps), stored as sorted (index, exponent) pairs."""

    nvars: int
    exps: tuple

    @classmethod
    def from_map(cls, nvars: int, exps: dict) -> "IrreducibleComponent":
        if not exps or any(e < 1 for e in exps.values()):
            raise DomainError(f"invalid irreducible component {exps}")
        return cls(nvars, tuple(sorted(exps.items())))

    @property
    def prime(self) -> MonomialPrime:
        return MonomialPrime(self.nvars, frozenset(i for i, _ in self.exps))

    def contains_component(self, other: "IrreducibleComponent") -> bool:
        """self ⊇ other."""
        mine = dict(self.exps)
        return all(i in mine and mine[i] <= e for i, e in other.exps)

    def as_ideal(self) -> MonomialIdeal:
        return make_ideal(self.nvars, [Monomial.var(self.nvars, i, e) for i, e in self.exps])

    def __str__(self):
        return "(" + ", ".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self.exps) + ")"


def prime_power(prime: MonomialPrime, k: int) -> MonomialIdeal:
    """p^k: all degree-k monomials in the variables of ``prime``."""
    n = prime.nvars
    if k == 0:
        warnings.warn("prime_power with k = 0 gives the unit ideal", stacklevel=2)
        return MonomialIdeal.unit(n)
    if k < 0:
        raise DomainError("negative power")
    if not prime.vars:
        raise DomainError("prime_power of the zero prime")
    variables = sorted(prime.vars)
    gens = []
    for combo in compositions(k, len(variables)):
        exps = [0] * n
        for v, e in zip(variables, combo):
            exps[v - 1] = e
        gens.append(exps)
    return make_ideal(n, gens)


def intersect_presentation(terms, nvars: Optional[int] = None) -> MonomialIdeal:
    """Evaluate the intersection of p^d over (prime, d) pairs, left to right."""
    terms = list(terms)
    if not terms:
        if nvars is None:
            raise DomainError("empty presentation needs nvars")
        return MonomialIdeal.unit(nvars)
    result = None
    for prime, d in terms:
        piece = prime_power(prime, d)
        result = piece if result is None else intersect(result, piece)
    return result


def _require_proper_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero():
        raise DomainError("operation undefined for the zero ideal")
    if ideal.is_unit():
        raise DomainError("operation undefined for the unit ideal")


@lru_cache(maxsize=4096)
def _split(nvars: int, gens: tuple) -> tuple:
    # pivot: first generator (in canonical order) that is not a pure power
    for u in gens:
        supp = [i for i, e in enumerate(u) if e]
        if len(supp) > 1:
            break
    else:
        exps = {}
        for u in gens:
            (i,) = [i for i, e in enumerate(u) if e]
            exps[i + 1] = min(exps.get(i + 1, u[i]), u[i])
        return (IrreducibleComponent.from_map(nvars, exps),)
    i = supp[0]
    pure = [0] * nvars
    pure[i] = u[i]
    rest = list(u)
    rest[i] = 0
    left = minimalize(gens + (tuple(pure),))
    right = minimalize(gens + (tuple(rest),))
    return _split(nvars, left) + _split(nvars, right)


def irreducible_decomposition(ideal: MonomialIdeal) -> list:
    """Irredundant list of irreducible components whose intersection is ``ideal``."""
    _require_proper_nonzero(ideal)
    raw = list(dict.fromkeys(_split(ideal.nvars, tuple(tuple(g) for g in ideal.gens))))
    # drop any component that contains another one
    pruned = [
        c for c in raw
        if not any(d != c and c.contains_component(d) for d in raw)
    ]
    # full irredundancy pass: drop components containing the intersection of the rest
    comps = list(pruned)
    idx = 0
    while idx < len(comps) and len(comps) > 1:
        others = comps[:idx] + comps[idx + 1:]
        rest = others[0].as_ideal()
        for c in others[1:]:
            rest = intersect(rest, c.as_ideal())
        if is_subideal(rest, comps[idx].as_ideal()):
            comps.pop(idx)
        else:
            idx += 1
    return sorted(comps, key=lambda c: (c.prime.sort_key(), c.exps))


def ass_primes(ideal: MonomialIdeal) -> list:
    """Associated primes of R/I in canonical order."""
    primes = {c.prime for c in irreducible_decomposition(ideal)}
    return sorted(primes, key=MonomialPrime.sort_key)


def minimal_covers(ideal: MonomialIdeal, max_vars: int = MAX_COVER_VARS) -> list:
    """Inclusion-minimal variable sets meeting the support of every generator."""
    _require_proper_nonzero(ideal)
    if ideal.nvars > max_vars:
        raise ResourceCapError(f"minimal cover enumeration capped at {max_vars} variables")
    supports = [g.support() for g in ideal.gens]
    covers: list = []
    for k in range(1, ideal.nvars + 1):
        for combo in combinations(range(1, ideal.nvars + 1), k):
            s = frozenset(combo)
            if any(c <= s for c in covers):
                continue
            if all(s & supp for supp in supports):
                covers.append(s)
    return sorted((MonomialPrime(ideal.nvars, c) for c in covers), key=MonomialPrime.sort_key)


def _inclusion_minimal(primes) -> list:
    return [p for p in primes if not any(q != p and q.vars <= p.vars for q in primes)]


def min_primes(ideal: MonomialIdeal) -> list:
    covers = minimal_covers(ideal)
    from_ass = _inclusion_minimal(ass_primes(ideal))
    if set(covers) != set(from_ass):
        raise AssertionError(
            f"minimal primes disagree: covers {covers} vs minimal associated {from_ass}"
        )
    return covers


def height(ideal: MonomialIdeal) -> int:
    return min(p.height for p in minimal_covers(ideal))


def is_unmixed(ideal: MonomialIdeal) -> bool:
    h = height(ideal)
    return all(p.height == h for p in ass_primes(ideal))


def has_embedded(ideal: MonomialIdeal) -> bool:
    return len(ass_primes(ideal)) > len(min_primes(ideal))


@dataclass
class StrongIntersectionResult:
    holds: bool
    presentation: list
    evaluated: MonomialIdeal

    def __bool__(self):
        return self.holds


def _default_reg() -> Callable:
    from .resolution import regularity

    return regularity


def strong_intersection_check(ideal: MonomialIdeal, reg_fn: Optional[Callable] = None) -> StrongIntersectionResult:
    """Test I = ∩_{p ∈ Ass} p^{reg(I(p))}.

    ``reg_fn`` maps a localized ideal to its regularity (default: over GF(32003)).
    """
    _require_proper_nonzero(ideal)
    if ideal.equigenerated_degree() is None:
        raise DomainError("strong intersection check needs an equigenerated ideal")
    reg_fn = reg_fn or _default_reg()
    terms = [(p, reg_fn(localize(ideal, p))) for p in ass_primes(ideal)]
    evaluated = intersect_presentation(terms)
    return StrongIntersectionResult(evaluated == ideal, terms, evaluated)


def presentation_bound_check(ideal: MonomialIdeal, terms, reg_fn: Optional[Callable] = None) -> list:
    """For each (p, d) return (p, d, reg(I(p)), d <= reg(I(p)))."""
    reg_fn = reg_fn or _default_reg()
    out = []
    for p, d in terms:
        r = reg_fn(localize(ideal, p))
        out.append((p, d, r, d <= r))
    return out


def find_presentations(ideal: MonomialIdeal, max_candidates: int = 20000) -> list:
    """All exponent assignments d on Ass(R/I) with I = ∩ p^{d_p}, by exhaustive search.

    Each d_p is bounded by the smallest p-degree of a generator, since I ⊆ p^{d_p}.
    """
    _require_proper_nonzero(ideal)
    primes = ass_primes(ideal)
    ranges = []
    total = 1
    for p in primes:
        cols = [i - 1 for i in p.vars]
        top = int(ideal.array[:, cols].sum(axis=1).min())
        ranges.append(range(1, top + 1))
        total *= max(top, 1)
    if total > max_candidates:
        raise ResourceCapError(f"{total} candidate presentations exceed cap {max_candidates}")
    powers = {}
    found = []
    for choice in cartesian(*ranges):
        result = None
        for p, d in zip(primes, choice):
            piece = powers.setdefault((p, d), prime_power(p, d))
            result = piece if result is None else intersect(result, piece)
        if result == ideal:
            found.append(list(zip(primes, choice)))
    return found


def truncate_at(ideal: MonomialIdeal, d: int) -> MonomialIdeal:
    """Ideal generated by the degree-d part of ``ideal``."""
    n = ideal.nvars
    out = []
    for g in ideal.gens:
        e = g.degree
        if e >= d:
            out.append(tuple(g))
            continue
        for combo in compositions(d - e, n):
            out.append(tuple(a + b for a, b in zip(g, combo)))
    return make_ideal(n, out)

