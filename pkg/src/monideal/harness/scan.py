"""Localization scans, saturation checks and theorem-precondition checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..core import (
    DomainError,
    MonomialIdeal,
    MonomialPrime,
    all_primes,
    descriptors,
    localize,
    product,
    saturate_var,
)
from ..decomp import has_embedded, height, is_unmixed
from ..polymatroid import is_polymatroidal, is_veronese_type
from ..resolution import DEFAULT_CHAR, regularity


def _regularity_or_none(ideal: MonomialIdeal, p: int) -> Optional[int]:
    if ideal.is_unit():
        return None
    return regularity(ideal, p)


def _linear(ideal: MonomialIdeal, reg: Optional[int]) -> bool:
    if ideal.is_unit() or ideal.is_principal():
        return True
    d = ideal.equigenerated_degree()
    return d is not None and reg == d


@dataclass
class ScanRow:
    prime: MonomialPrime
    ideal: MonomialIdeal
    degree: Optional[int]  # None when generators have mixed degrees
    regularity: Optional[int]  # None for the unit ideal
    linear: bool

    def to_dict(self) -> dict:
        return {
            "prime": sorted(self.prime.vars),
            "ideal": [list(g) for g in self.ideal.gens],
            "degree": self.degree if self.degree is not None else "mixed",
            "regularity": self.regularity,
            "linear": self.linear,
        }


@dataclass
class LocalizationScanReport:
    ideal: MonomialIdeal
    rows: list
    polymatroidal: bool
    witness: Optional[tuple] = None

    @property
    def all_linear(self) -> bool:
        return all(r.linear for r in self.rows)

    @property
    def consistent(self) -> bool:
        return self.all_linear == self.polymatroidal

    @property
    def failures(self) -> list:
        return [r for r in self.rows if not r.linear]

    def to_dict(self) -> dict:
        return {
            "nvars": self.ideal.nvars,
            "gens": [list(g) for g in self.ideal.gens],
            "rows": [r.to_dict() for r in self.rows],
            "all_linear": self.all_linear,
            "polymatroidal": self.polymatroidal,
            "consistent": self.consistent,
        }


def scan_localizations(ideal: MonomialIdeal, p: int = DEFAULT_CHAR) -> LocalizationScanReport:
    """Localize at every nonempty monomial prime and test each for linearity."""
    if ideal.is_zero() or ideal.is_unit():
        raise DomainError("scan needs a proper nonzero ideal")
    if ideal.equigenerated_degree() is None:
        raise DomainError("scan needs an equigenerated ideal")
    cache: dict = {}
    rows = []
    for prime in all_primes(ideal.nvars):
        loc = localize(ideal, prime)
        if loc not in cache:
            cache[loc] = _regularity_or_none(loc, p)
        reg = cache[loc]
        rows.append(ScanRow(prime, loc, loc.equigenerated_degree(), reg, _linear(loc, reg)))
    verdict = is_polymatroidal(ideal)
    return LocalizationScanReport(ideal, rows, verdict.polymatroidal, verdict.witness)


@dataclass
class SaturationReport:
    ideal: MonomialIdeal
    ideal_linear: bool
    rows: list  # (i, I[i], linear)

    @property
    def all_linear(self) -> bool:
        return self.ideal_linear and all(lin for _, _, lin in self.rows)


def check_saturations(ideal: MonomialIdeal, p: int = DEFAULT_CHAR) -> SaturationReport:
    if ideal.is_zero():
        raise DomainError("saturation check of the zero ideal")

    def linear(j: MonomialIdeal) -> bool:
        return _linear(j, _regularity_or_none(j, p))

    rows = []
    for i in range(1, ideal.nvars + 1):
        sat = saturate_var(ideal, i)
        rows.append((i, sat, linear(sat)))
    return SaturationReport(ideal, linear(ideal), rows)


# flag -> (hypothesis, structural conclusion checked against all_linear)
THEOREMS = {
    "height_n_minus_1": ("height(I) = n - 1", "veronese"),
    "pure_powers_n_minus_1": ("at least n - 1 pure powers in G(I)", "veronese"),
    "pure_powers_n_minus_2": ("at least n - 2 pure powers in G(I)", "polymatroidal"),
    "pure_powers_n_minus_3": ("at least n - 3 pure powers in G(I)", "polymatroidal"),
    "four_vars": ("at most four variables", "polymatroidal"),
    "unmixed_h2_4vars": ("four variables, unmixed, height 2", "polymatroidal"),
    "no_embedded_4vars": ("four variables, no embedded primes", "polymatroidal"),
}


@dataclass
class TheoremApplicability:
    height_n_minus_1: bool = False
    pure_powers_n_minus_1: bool = False
    pure_powers_n_minus_2: bool = False
    pure_powers_n_minus_3: bool = False
    four_vars: bool = False
    unmixed_h2_4vars: bool = False
    no_embedded_4vars: bool = False

    def active(self) -> list:
        return [name for name in THEOREMS if getattr(self, name)]

    def any(self) -> bool:
        return bool(self.active())


def theorem_preconditions(ideal: MonomialIdeal) -> TheoremApplicability:
    """Which of the proven cases of the conjecture cover ``ideal``."""
    if ideal.is_zero() or ideal.is_unit() or ideal.equigenerated_degree() is None:
        raise DomainError("theorem preconditions need a proper equigenerated ideal")
    n = ideal.nvars
    pure = len(descriptors(ideal).pure_powers)
    h = height(ideal)
    return TheoremApplicability(
        height_n_minus_1=h == n - 1,
        pure_powers_n_minus_1=pure >= n - 1,
        pure_powers_n_minus_2=pure >= n - 2,
        pure_powers_n_minus_3=pure >= n - 3,
        four_vars=n <= 4,
        unmixed_h2_4vars=n == 4 and h == 2 and is_unmixed(ideal),
        no_embedded_4vars=n == 4 and not has_embedded(ideal),
    )


@dataclass
class TheoremCheck:
    flag: str
    hypothesis: str
    conclusion: str
    all_linear: bool
    conclusion_holds: bool

    @property
    def holds(self) -> bool:
        return self.all_linear == self.conclusion_holds


@dataclass
class TheoremReport:
    flags: TheoremApplicability
    scan: LocalizationScanReport
    checks: list = field(default_factory=list)

    @property
    def violations(self) -> list:
        return [c for c in self.checks if not c.holds]


def check_theorems(ideal: MonomialIdeal, p: int = DEFAULT_CHAR,
                   scan: Optional[LocalizationScanReport] = None) -> TheoremReport:
    """Evaluate every applicable biconditional: all localizations linear <=> conclusion."""
    flags = theorem_preconditions(ideal)
    scan = scan or scan_localizations(ideal, p)
    veronese = None
    checks = []
    for name in flags.active():
        hypothesis, conclusion = THEOREMS[name]
        if conclusion == "veronese":
            if veronese is None:
                veronese = is_veronese_type(ideal) is not None
            holds = veronese
        else:
            holds = scan.polymatroidal
        checks.append(TheoremCheck(name, hypothesis, conclusion, scan.all_linear, holds))
    return TheoremReport(flags, scan, checks)


@dataclass
class PowerRow:
    k: int
    degree: Optional[int]
    regularity: int
    linear: bool


def powers_linearity_profile(ideal: MonomialIdeal, kmax: int, p: int = DEFAULT_CHAR) -> list:
    if ideal.equigenerated_degree() is None:
        raise DomainError("powers profile needs an equigenerated ideal")
    if kmax < 1:
        raise DomainError("kmax must be at least 1")
    rows = []
    current = ideal
    for k in range(1, kmax + 1):
        if k > 1:
            current = product(current, ideal)
        reg = regularity(current, p)
        rows.append(PowerRow(k, current.equigenerated_degree(), reg, _linear(current, reg)))
    return rows


def product_polymatroidality(a: MonomialIdeal, b: MonomialIdeal) -> tuple:
    """(IJ polymatroidal, I polymatroidal, J polymatroidal)."""
    ab = product(a, b)
    return (
        is_polymatroidal(ab).polymatroidal,
        is_polymatroidal(a).polymatroidal,
        is_polymatroidal(b).polymatroidal,
    )

