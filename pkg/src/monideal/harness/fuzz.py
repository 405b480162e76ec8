"""Seeded random ideals, test corpora and the conjecture fuzzer."""
from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from itertools import combinations

from ..core import DomainError, MonomialIdeal, MonomialPrime, compositions, make_ideal
from ..io import ideal_to_dict
from ..resolution import DEFAULT_CHAR
from .scan import check_theorems, scan_localizations

log = logging.getLogger(__name__)

# beyond this many candidate monomials we sample instead of enumerating
_ENUMERATION_LIMIT = 200_000


def _candidate_count(nvars: int, degree: int, squarefree: bool) -> int:
    if squarefree:
        return math.comb(nvars, degree)
    return math.comb(nvars + degree - 1, degree)


def _random_monomial(rng: random.Random, nvars: int, degree: int, squarefree: bool) -> tuple:
    if squarefree:
        chosen = set(rng.sample(range(nvars), degree))
        return tuple(1 if i in chosen else 0 for i in range(nvars))
    exps = [0] * nvars
    for _ in range(degree):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def random_ideal(seed: int, nvars: int, degree: int, gen_count: int,
                 squarefree: bool = False) -> MonomialIdeal:
    """Deterministic random ideal generated by ``gen_count`` distinct degree-``degree`` monomials."""
    if nvars < 1 or degree < 1 or gen_count < 1:
        raise DomainError("need nvars, degree and gen_count >= 1")
    total = _candidate_count(nvars, degree, squarefree)
    if gen_count > total:
        kind = "squarefree " if squarefree else ""
        raise DomainError(f"only {total} {kind}monomials of degree {degree} in {nvars} variables")
    rng = random.Random(seed)
    if total <= _ENUMERATION_LIMIT:
        if squarefree:
            pool = [tuple(1 if i in c else 0 for i in range(nvars))
                    for c in combinations(range(nvars), degree)]
        else:
            pool = list(compositions(degree, nvars))
        gens = rng.sample(pool, gen_count)
    else:
        picked: set = set()
        while len(picked) < gen_count:
            picked.add(_random_monomial(rng, nvars, degree, squarefree))
        gens = sorted(picked)
    return make_ideal(nvars, gens)


def random_prime(rng: random.Random, nvars: int) -> MonomialPrime:
    k = rng.randint(1, nvars)
    return MonomialPrime(nvars, frozenset(rng.sample(range(1, nvars + 1), k)))


def squarefree_corpus(max_vars: int = 4, max_degree: int = 3, max_gens: int = 6) -> list:
    """Every squarefree equigenerated ideal with the given bounds."""
    out = []
    for n in range(1, max_vars + 1):
        for d in range(1, min(max_degree, n) + 1):
            pool = [tuple(1 if i in c else 0 for i in range(n)) for c in combinations(range(n), d)]
            for k in range(1, min(max_gens, len(pool)) + 1):
                for gens in combinations(pool, k):
                    out.append(make_ideal(n, gens))
    return out


def random_corpus(seed: int, count: int, max_vars: int = 4, max_degree: int = 3,
                  max_gens: int = 8, min_vars: int = 2) -> list:
    """``count`` random equigenerated ideals; sample parameters also come from ``seed``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(min_vars, max_vars)
        d = rng.randint(min(2, max_degree), max_degree)
        squarefree = d <= n and rng.random() < 0.3
        total = _candidate_count(n, d, squarefree)
        g = rng.randint(min(2, total), min(max_gens, total))
        out.append(random_ideal(rng.randrange(2 ** 31), n, d, g, squarefree))
    return out


@dataclass
class Finding:
    seed: int
    params: dict
    ideal: MonomialIdeal
    kind: str  # "conjecture" or a theorem flag name
    detail: str

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "params": self.params,
            "ideal": ideal_to_dict(self.ideal),
            "kind": self.kind,
            "detail": self.detail,
        }


@dataclass
class FuzzReport:
    samples: int = 0
    all_linear: int = 0
    polymatroidal: int = 0
    covered: int = 0
    findings: list = field(default_factory=list)

    @property
    def theorem_violations(self) -> list:
        return [f for f in self.findings if f.kind != "conjecture"]

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "all_linear": self.all_linear,
            "polymatroidal": self.polymatroidal,
            "covered_by_theorems": self.covered,
            "findings": [f.to_dict() for f in self.findings],
        }


def fuzz(seed: int, samples: int, nvars: int, degrees=(2, 3), max_gens: int = 8,
         squarefree: bool = False, p: int = DEFAULT_CHAR) -> FuzzReport:
    """Scan random ideals; conjecture mismatches and theorem violations become findings.

    A mismatch on an ideal covered by a proven case is a theorem violation; an
    uncovered mismatch is only reported.
    """
    master = random.Random(seed)
    report = FuzzReport()
    for _ in range(samples):
        sample_seed = master.randrange(2 ** 31)
        d = master.choice(list(degrees))
        if squarefree and d > nvars:
            d = nvars
        total = _candidate_count(nvars, d, squarefree)
        g = master.randint(1, min(max_gens, total))
        params = {"nvars": nvars, "degree": d, "gen_count": g, "squarefree": squarefree}
        ideal = random_ideal(sample_seed, nvars, d, g, squarefree)
        scan = scan_localizations(ideal, p)
        result = check_theorems(ideal, p, scan)
        report.samples += 1
        report.all_linear += scan.all_linear
        report.polymatroidal += scan.polymatroidal
        report.covered += result.flags.any()
        for check in result.violations:
            report.findings.append(Finding(
                sample_seed, params, ideal, check.flag,
                f"all_linear={check.all_linear} but {check.conclusion}={check.conclusion_holds}",
            ))
        if not scan.consistent and not result.violations:
            report.findings.append(Finding(
                sample_seed, params, ideal, "conjecture",
                f"all_linear={scan.all_linear} polymatroidal={scan.polymatroidal}",
            ))
        if not scan.consistent:
            log.warning("finding for seed %d: %s", sample_seed, ideal)
    return report
