"""Exchange-property checks and the Veronese-type / transversal families."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    DomainError,
    MonomialIdeal,
    compositions,
    exponent_bounds,
    make_ideal,
    product,
)


@dataclass(frozen=True)
class ExchangeVerdict:
    polymatroidal: bool
    # (u, v, i): deg_{x_i} u > deg_{x_i} v and no j repairs u / x_i
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.polymatroidal


def _require_proper_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero() or ideal.is_unit():
        raise DomainError("exchange check needs a proper nonzero ideal")


def is_polymatroidal(ideal: MonomialIdeal) -> ExchangeVerdict:
    """Check the exchange property on every ordered pair of minimal generators."""
    _require_proper_nonzero(ideal)
    if ideal.equigenerated_degree() is None:
        return ExchangeVerdict(False)
    gens = set(ideal.gens)
    n = ideal.nvars
    for u in ideal.gens:
        for v in ideal.gens:
            if u == v:
                continue
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                repaired = False
                for j in range(n):
                    if v[j] > u[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        # w has degree d, so w ∈ I iff w ∈ G(I)
                        if tuple(w) in gens:
                            repaired = True
                            break
                if not repaired:
                    return ExchangeVerdict(False, (u, v, i + 1))
    return ExchangeVerdict(True)


def is_matroidal(ideal: MonomialIdeal) -> bool:
    _require_proper_nonzero(ideal)
    return ideal.is_squarefree() and bool(is_polymatroidal(ideal))


def veronese_type(nvars: int, d: int, bounds) -> MonomialIdeal:
    """All degree-d monomials with deg_{x_i} <= bounds[i]."""
    bounds = tuple(int(b) for b in bounds)
    if len(bounds) != nvars:
        raise DomainError(f"{len(bounds)} bounds for {nvars} variables")
    if d < 1 or any(b < 0 for b in bounds):
        raise DomainError("need d >= 1 and non-negative bounds")
    if sum(bounds) < d:
        raise DomainError(f"bounds {bounds} admit no monomial of degree {d}")
    gens = [c for c in compositions(d, nvars) if all(e <= b for e, b in zip(c, bounds))]
    return make_ideal(nvars, gens)


def is_veronese_type(ideal: MonomialIdeal) -> Optional[tuple]:
    """Return (d, bounds) when I = I_(d; bounds), else None."""
    if ideal.is_zero() or ideal.is_unit():
        raise DomainError("Veronese-type test needs a proper nonzero ideal")
    d = ideal.equigenerated_degree()
    if d is None:
        return None
    bounds = exponent_bounds(ideal)
    if veronese_type(ideal.nvars, d, bounds) == ideal:
        return d, bounds
    return None


def transversal(primes) -> MonomialIdeal:
    """Product of the given monomial primes."""
    primes = list(primes)
    if not primes:
        raise DomainError("transversal ideal of an empty prime list")
    result = primes[0].as_ideal()
    for p in primes[1:]:
        result = product(result, p.as_ideal())
    return result


def is_transversal_of(ideal: MonomialIdeal, primes) -> bool:
    """Equality test against a candidate multiset of primes (no recognition)."""
    return transversal(primes) == ideal


def squarefree_veronese(nvars: int, d: int) -> MonomialIdeal:
    return veronese_type(nvars, d, (1,) * nvars)


def maximal_power(nvars: int, d: int) -> MonomialIdeal:
    return veronese_type(nvars, d, (d,) * nvars)

