"""Monomials and monomial ideals in K[x1, ..., xn].

A monomial is stored as its exponent tuple.  A monomial ideal is stored
through its minimal generating set G(I), kept sorted in descending
lexicographic order so that printing and comparison are reproducible.

Variable indices exposed by the public API are 1-based (x1 is index 1),
matching the usual notation; exponent tuples are 0-based like any tuple.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

#: Default ceiling on any single exponent produced by product/power.
MAX_EXPONENT = 2 ** 16


class MonomialIdealError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(MonomialIdealError, ValueError):
    """Operands live in polynomial rings with different variable counts."""


class DomainError(MonomialIdealError, ValueError):
    """An operation was called outside of its mathematical domain."""


class ResourceCapError(MonomialIdealError):
    """A configured size or exponent cap was exceeded."""


class Monomial(tuple):
    """Exponent vector of a monomial; ``Monomial((2, 0, 1))`` is x1^2*x3."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int] = ()):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise DomainError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "Monomial":
        """The pure power x_i^power (1-based ``i``)."""
        _check_index(nvars, i)
        exps = [0] * nvars
        exps[i - 1] = power
        return cls(exps)

    @property
    def nvars(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def support(self) -> frozenset:
        """1-based indices of the variables dividing this monomial."""
        return frozenset(i + 1 for i, e in enumerate(self) if e)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __mul__(self, other):
        _same_nvars(self, other)
        return Monomial(a + b for a, b in zip(self, other))

    def __truediv__(self, other):
        if not other.divides(self):
            raise DomainError(f"{format_monomial(other)} does not divide {format_monomial(self)}")
        return Monomial(a - b for a, b in zip(self, other))

    def lcm(self, other: "Monomial") -> "Monomial":
        _same_nvars(self, other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def gcd(self, other: "Monomial") -> "Monomial":
        _same_nvars(self, other)
        return Monomial(min(a, b) for a, b in zip(self, other))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self)

    def is_pure_power(self) -> bool:
        return sum(1 for e in self if e) == 1

    def __repr__(self):
        return f"Monomial({format_monomial(self)})"


def _check_index(nvars: int, i: int) -> None:
    if not 1 <= i <= nvars:
        raise DomainError(f"variable index {i} out of range 1..{nvars}")


def _same_nvars(a, b) -> None:
    if len(a) != len(b):
        raise DimensionError(f"monomials of length {len(a)} and {len(b)}")


def format_monomial(m: Iterable[int]) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def compositions(total: int, parts: int):
    """Exponent tuples of length ``parts`` summing to ``total``, descending lex."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def minimalize(monomials: Iterable[tuple]) -> tuple:
    """Divisibility-minimal elements of ``monomials``, deduplicated, descending lex."""
    unique = sorted(set(tuple(m) for m in monomials), key=lambda m: (sum(m), m))
    if not unique:
        return ()
    if len(unique) > 64:
        return _minimalize_numpy(unique)
    kept: list[tuple] = []
    for m in unique:
        # only strictly lower degrees can divide m; all of them are already in `kept`
        if not any(all(a <= b for a, b in zip(g, m)) for g in kept):
            kept.append(m)
    return tuple(sorted((Monomial(m) for m in kept), reverse=True))


def _minimalize_numpy(unique: list) -> tuple:
    arr = np.array(unique, dtype=np.int64)
    degrees = arr.sum(axis=1)
    keep = np.ones(len(arr), dtype=bool)
    for idx in range(len(arr)):
        lower = np.nonzero(keep[:idx] & (degrees[:idx] < degrees[idx]))[0]
        if lower.size and np.any(np.all(arr[lower] <= arr[idx], axis=1)):
            keep[idx] = False
    return tuple(sorted((Monomial(unique[i]) for i in np.nonzero(keep)[0]), reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Build instances with :func:`make_ideal` (or :meth:`from_gens`); the raw
    constructor trusts that ``gens`` is already minimal and sorted.
    """

    nvars: int
    gens: tuple = ()
    _array: Optional[np.ndarray] = field(default=None, repr=False, compare=False, hash=False)

    @classmethod
    def from_gens(cls, nvars: int, gens: Iterable[Iterable[int]]) -> "MonomialIdeal":
        return make_ideal(nvars, gens)

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, (Monomial.one(nvars),))

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ())

    @property
    def array(self) -> np.ndarray:
        """Generators as an (ngens, nvars) integer array (cached)."""
        if self._array is None:
            arr = np.array(self.gens, dtype=np.int64).reshape(len(self.gens), self.nvars)
            object.__setattr__(self, "_array", arr)
        return self._array

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].degree == 0

    def is_principal(self) -> bool:
        return len(self.gens) == 1

    def is_proper(self) -> bool:
        return not self.is_unit()

    def degrees(self) -> list:
        return [g.degree for g in self.gens]

    def equigenerated_degree(self) -> Optional[int]:
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def support(self) -> frozenset:
        out = frozenset()
        for g in self.gens:
            out |= g.support()
        return out

    def lcm(self) -> Monomial:
        if not self.gens:
            return Monomial.one(self.nvars)
        return Monomial(self.array.max(axis=0))

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, k):
        return power(self, k)

    def __str__(self):
        return format_ideal(self)


def format_ideal(ideal: MonomialIdeal) -> str:
    if ideal.is_zero():
        return "0"
    return ", ".join(format_monomial(g) for g in ideal.gens)


def make_ideal(nvars: int, raw_gens: Iterable[Iterable[int]]) -> MonomialIdeal:
    """Normalize an arbitrary generating set to G(I)."""
    if nvars < 0:
        raise DomainError("nvars must be non-negative")
    raw = [tuple(int(e) for e in g) for g in raw_gens]
    for g in raw:
        if len(g) != nvars:
            raise DimensionError(f"monomial {g} has length {len(g)}, expected {nvars}")
        if any(e < 0 for e in g):
            raise DomainError(f"negative exponent in {g}")
    return MonomialIdeal(nvars, minimalize(raw))


def _check_compatible(ideal: MonomialIdeal, other) -> None:
    n = other.nvars if isinstance(other, MonomialIdeal) else len(other)
    if ideal.nvars != n:
        raise DimensionError(f"variable counts differ: {ideal.nvars} vs {n}")


def contains(ideal: MonomialIdeal, m: Iterable[int]) -> bool:
    """True iff some minimal generator divides ``m``."""
    m = tuple(m)
    _check_compatible(ideal, m)
    if not ideal.gens:
        return False
    return bool(np.any(np.all(ideal.array <= np.asarray(m, dtype=np.int64), axis=1)))


def is_subideal(small: MonomialIdeal, big: MonomialIdeal) -> bool:
    _check_compatible(small, big)
    return all(contains(big, g) for g in small.gens)


def _check_cap(gens: Iterable[tuple], max_exponent: int) -> None:
    for g in gens:
        if g and max(g) > max_exponent:
            raise ResourceCapError(f"exponent {max(g)} exceeds cap {max_exponent}")


def product(a: MonomialIdeal, b: MonomialIdeal, max_exponent: int = MAX_EXPONENT) -> MonomialIdeal:
    """The product ideal IJ."""
    _check_compatible(a, b)
    if a.is_zero() or b.is_zero():
        return MonomialIdeal.zero(a.nvars)
    prods = (a.array[:, None, :] + b.array[None, :, :]).reshape(-1, a.nvars)
    if prods.size and prods.max() > max_exponent:
        raise ResourceCapError(f"exponent {prods.max()} exceeds cap {max_exponent}")
    return MonomialIdeal(a.nvars, minimalize(map(tuple, prods.tolist())))


def power(ideal: MonomialIdeal, k: int, max_exponent: int = MAX_EXPONENT) -> MonomialIdeal:
    if k < 1:
        raise DomainError("power exponent must be at least 1")
    result = ideal
    for _ in range(k - 1):
        result = product(result, ideal, max_exponent)
    return result


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_compatible(a, b)
    return MonomialIdeal(a.nvars, minimalize(a.gens + b.gens))


def colon_monomial(ideal: MonomialIdeal, m: Iterable[int]) -> MonomialIdeal:
    """I : m, generated by u / gcd(u, m) for u in G(I)."""
    m = tuple(m)
    _check_compatible(ideal, m)
    if ideal.is_zero():
        return ideal
    quotients = np.maximum(ideal.array - np.asarray(m, dtype=np.int64), 0)
    return MonomialIdeal(ideal.nvars, minimalize(map(tuple, quotients.tolist())))


def _zero_out(ideal: MonomialIdeal, indices: Iterable[int]) -> MonomialIdeal:
    cols = [i - 1 for i in indices]
    if ideal.is_zero() or not cols:
        return ideal
    arr = ideal.array.copy()
    arr[:, cols] = 0
    return MonomialIdeal(ideal.nvars, minimalize(map(tuple, arr.tolist())))


def saturate_var(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """I : x_i^infinity (the ideal written I[i])."""
    _check_index(ideal.nvars, i)
    return _zero_out(ideal, [i])


def saturate_graded(ideal: MonomialIdeal) -> MonomialIdeal:
    """I : m^infinity for the graded maximal ideal m = (x1, ..., xn)."""
    if ideal.is_zero():
        raise DomainError("saturation of the zero ideal")
    n = ideal.nvars
    current = ideal
    while True:
        nxt = colon_monomial(current, Monomial.var(n, 1))
        for i in range(2, n + 1):
            nxt = intersect(nxt, colon_monomial(current, Monomial.var(n, i)))
        if nxt == current:
            return current
        current = nxt


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """I ∩ J, generated by the pairwise lcms."""
    _check_compatible(a, b)
    if a.is_zero() or b.is_zero():
        return MonomialIdeal.zero(a.nvars)
    lcms = np.maximum(a.array[:, None, :], b.array[None, :, :]).reshape(-1, a.nvars)
    return MonomialIdeal(a.nvars, minimalize(map(tuple, lcms.tolist())))


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """Prime ideal generated by the variables with (1-based) indices ``vars``."""

    nvars: int
    vars: frozenset

    def __post_init__(self):
        object.__setattr__(self, "vars", frozenset(int(v) for v in self.vars))
        for v in self.vars:
            _check_index(self.nvars, v)

    @classmethod
    def maximal(cls, nvars: int) -> "MonomialPrime":
        return cls(nvars, frozenset(range(1, nvars + 1)))

    @classmethod
    def from_complement(cls, nvars: int, a: Iterable[int]) -> "MonomialPrime":
        """The prime generated by the variables NOT indexed by ``a``."""
        return cls(nvars, frozenset(range(1, nvars + 1)) - frozenset(a))

    @property
    def height(self) -> int:
        return len(self.vars)

    def sort_key(self):
        return (len(self.vars), tuple(sorted(self.vars)))

    def is_maximal(self) -> bool:
        return len(self.vars) == self.nvars

    def as_ideal(self) -> MonomialIdeal:
        return make_ideal(self.nvars, [Monomial.var(self.nvars, i) for i in self.vars])

    def __str__(self):
        return "(" + ", ".join(f"x{i}" for i in sorted(self.vars)) + ")"

    def __repr__(self):
        return f"MonomialPrime{self}"


def all_primes(nvars: int) -> list:
    """Every nonempty monomial prime, ordered by size then index list."""
    out = []
    for k in range(1, nvars + 1):
        for combo in combinations(range(1, nvars + 1), k):
            out.append(MonomialPrime(nvars, frozenset(combo)))
    return out


def localize(ideal: MonomialIdeal, prime: MonomialPrime) -> MonomialIdeal:
    """Monomial localization I(p): set every variable outside ``prime`` to 1.

    The ambient variable count is kept; the result is supported in ``prime``.
    """
    if prime.nvars != ideal.nvars:
        raise DimensionError(f"prime lives in {prime.nvars} variables, ideal in {ideal.nvars}")
    outside = [i for i in range(1, ideal.nvars + 1) if i not in prime.vars]
    return _zero_out(ideal, outside)


def localize_via_saturation(ideal: MonomialIdeal, prime: MonomialPrime) -> MonomialIdeal:
    """I : (prod of variables outside ``prime``)^infinity, by repeated colon."""
    if prime.nvars != ideal.nvars:
        raise DimensionError(f"prime lives in {prime.nvars} variables, ideal in {ideal.nvars}")
    w = Monomial(0 if i + 1 in prime.vars else 1 for i in range(ideal.nvars))
    current = ideal
    while True:
        nxt = colon_monomial(current, w)
        if nxt == current:
            return current
        current = nxt


@dataclass(frozen=True)
class Descriptors:
    gcd: Monomial
    support: frozenset
    bounds: tuple
    equigenerated_degree: Optional[int]
    squarefree: bool
    pure_powers: frozenset

    @property
    def full_supported(self) -> bool:
        return len(self.support) == len(self.bounds)


def exponent_bounds(ideal: MonomialIdeal) -> tuple:
    """a_i = max deg_{x_i} over G(I)."""
    return tuple(int(v) for v in ideal.lcm())


def descriptors(ideal: MonomialIdeal) -> Descriptors:
    if ideal.is_zero():
        raise DomainError("descriptors of the zero ideal")
    d = ideal.equigenerated_degree()
    pure = frozenset()
    if d is not None and d > 0:
        pure = frozenset(
            i for i in range(1, ideal.nvars + 1) if Monomial.var(ideal.nvars, i, d) in ideal.gens
        )
    return Descriptors(
        gcd=Monomial(ideal.array.min(axis=0)),
        support=ideal.support(),
        bounds=exponent_bounds(ideal),
        equigenerated_degree=d,
        squarefree=ideal.is_squarefree(),
        pure_powers=pure,
    )
