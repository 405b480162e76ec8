"""Registry of the worked examples, each with its pinned facts.

Keys are the identifiers accepted by ``monideal examples run``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..core import (
    Monomial,
    MonomialPrime,
    contains,
    descriptors,
    power,
    saturate_var,
)
from ..decomp import ass_primes, intersect_presentation, strong_intersection_check
from ..io import parse_ideal
from ..polymatroid import is_matroidal, is_polymatroidal, is_veronese_type
from ..resolution import DEFAULT_CHAR, has_linear_resolution, regularity
from .scan import check_saturations, product_polymatroidality, scan_localizations

SECOND_CHAR = 2


def _prime(n, *vars_):
    return MonomialPrime(n, frozenset(vars_))


IDEALS = {
    "example-1.4": lambda: parse_ideal("x1*x2, x1*x3, x2^2", 3),
    "example-1.6": lambda: parse_ideal(
        "x1^3, x1^2*x2, x1^2*x3, x2*x3*x4, x1*x2*x3, x1*x3*x4, x1^2*x4", 4),
    "example-1.7": lambda: parse_ideal(
        "x1*x3*x5, x1*x2*x3, x1*x2*x4, x2*x3*x4, x3*x4*x5, x2*x4*x5", 5),
    "example-1.12": lambda: intersect_presentation([
        (_prime(4, 1, 2), 2), (_prime(4, 1, 2, 3), 3), (_prime(4, 1, 2, 4), 3), (_prime(4, 1, 2, 3, 4), 5),
    ]),
    "example-1.22": lambda: parse_ideal(
        "ace, acf, acg, ade, bcd, bfg, cde, cdf, cdg, cef, ceg, cfg, def, deg, dfg, efg", 7),
    "sturmfels": lambda: parse_ideal("def, cef, cdf, cde, bef, bcd, acf, ade", 6),
    "example-1.24": lambda: (parse_ideal("x1, x2", 2), parse_ideal("x1^2, x2^2", 2)),
    "example-1.25": lambda: (parse_ideal("x1^2, x2^2, x1*x3, x2*x3", 3),
                             parse_ideal("x1^2, x3^2, x1*x2, x2*x3", 3)),
}

# other numberings of the same two examples
ALIASES = {"example-1.10": "example-1.6", "example-1.11": "example-1.7"}


@dataclass
class Check:
    claim: str
    expected: object
    observed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


@dataclass
class ExampleReport:
    name: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, claim: str, expected, observed) -> None:
        self.checks.append(Check(claim, expected, observed))

    def format(self) -> str:
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok " if c.ok else "BAD"
            lines.append(f"  [{mark}] {c.claim}: expected {c.expected}, got {c.observed}")
        return "\n".join(lines)


def _linear_but_not_polymatroidal(r: ExampleReport, p: int) -> None:
    ideal = IDEALS["example-1.4"]()
    r.add("reg(I)", 2, regularity(ideal, p))
    r.add("I has a linear resolution", True, has_linear_resolution(ideal, p))
    r.add("I polymatroidal", False, is_polymatroidal(ideal).polymatroidal)
    scan = scan_localizations(ideal, p)
    r.add("some localization non-linear", True, not scan.all_linear)
    r.add("I((x1, x2)) non-linear", False,
          next(row.linear for row in scan.rows if row.prime == _prime(3, 1, 2)))


def _linear_saturations(r: ExampleReport, p: int) -> None:
    ideal = IDEALS["example-1.6"]()
    sat = check_saturations(ideal, p)
    r.add("I linear", True, sat.ideal_linear)
    for i, _, lin in sat.rows:
        r.add(f"I[{i}] linear", True, lin)
    r.add("I polymatroidal", False, is_polymatroidal(ideal).polymatroidal)
    r.add("scan finds a non-linear localization", True, not scan_localizations(ideal, p).all_linear)


def _squarefree_non_matroidal(r: ExampleReport, p: int) -> None:
    ideal = IDEALS["example-1.7"]()
    r.add("reg(I)", 3, regularity(ideal, p))
    for i in range(1, 6):
        sat = saturate_var(ideal, i)
        r.add(f"I[{i}] squarefree of degree 2", (True, 2), (sat.is_squarefree(), sat.equigenerated_degree()))
        r.add(f"reg(I[{i}])", 2, regularity(sat, p))
    r.add("I matroidal", False, is_matroidal(ideal))


def _presented_polymatroidal(r: ExampleReport, p: int) -> None:
    ideal = IDEALS["example-1.12"]()
    n = 4
    desc = descriptors(ideal)
    r.add("generated in degree", 5, desc.equigenerated_degree)
    r.add("x1^5 in G(I)", True, Monomial.var(n, 1, 5) in ideal.gens)
    r.add("x2^5 in G(I)", True, Monomial.var(n, 2, 5) in ideal.gens)
    r.add("pure powers", {1, 2}, set(desc.pure_powers))
    r.add("a_3", 2, desc.bounds[2])
    r.add("x1*x3^2*x4^2 in I", False, contains(ideal, (1, 0, 2, 2)))
    r.add("Veronese type", None, is_veronese_type(ideal))
    r.add("I polymatroidal", True, is_polymatroidal(ideal).polymatroidal)
    r.add("Ass(R/I)", ["(x1, x2)", "(x1, x2, x3)", "(x1, x2, x4)", "(x1, x2, x3, x4)"],
          [str(q) for q in ass_primes(ideal)])
    sic = strong_intersection_check(ideal, lambda j: regularity(j, p))
    r.add("strong intersection type", True, sic.holds)
    r.add("exponents reg(I(p))", [2, 3, 3, 5], [d for _, d in sic.presentation])
    r.add("all localizations linear", True, scan_localizations(ideal, p).all_linear)


def _powers_regularity(r: ExampleReport, p: int) -> None:
    ideal = IDEALS["example-1.22"]()
    r.add("16 minimal generators", 16, len(ideal.gens))
    for q in sorted({p, SECOND_CHAR}):
        current = ideal
        for k, expected in ((1, 3), (2, 6), (3, 10)):
            if k > 1:
                current = current * ideal
            r.add(f"reg(I^{k}) over GF({q})", expected, regularity(current, q))


def _nonlinear_square(r: ExampleReport, p: int) -> None:
    ideal = IDEALS["sturmfels"]()
    square = power(ideal, 2)
    r.add("squarefree, degree 3", (True, 3), (ideal.is_squarefree(), ideal.equigenerated_degree()))
    r.add("I linear", True, has_linear_resolution(ideal, p))
    r.add("I^2 generated in degree", 6, square.equigenerated_degree())
    r.add("I^2 linear", False, has_linear_resolution(square, p))
    r.add("reg(I^2) >= 7", True, regularity(square, p) >= 7)


def _product_of_linear_and_nonpolymatroidal(r: ExampleReport, p: int) -> None:
    a, b = IDEALS["example-1.24"]()
    r.add("(IJ, I, J) polymatroidal", (True, True, False), product_polymatroidality(a, b))


def _product_of_two_nonpolymatroidal(r: ExampleReport, p: int) -> None:
    a, b = IDEALS["example-1.25"]()
    r.add("(IJ, I, J) polymatroidal", (True, False, False), product_polymatroidality(a, b))


RUNNERS: dict = {
    "example-1.4": _linear_but_not_polymatroidal,
    "example-1.6": _linear_saturations,
    "example-1.7": _squarefree_non_matroidal,
    "example-1.12": _presented_polymatroidal,
    "example-1.22": _powers_regularity,
    "example-1.24": _product_of_linear_and_nonpolymatroidal,
    "example-1.25": _product_of_two_nonpolymatroidal,
    "sturmfels": _nonlinear_square,
}


def example_names() -> list:
    return sorted(set(RUNNERS) | set(ALIASES), key=_name_key)


def _name_key(name: str):
    if name.startswith("example-"):
        return (0, tuple(int(x) for x in name.split("-")[1].split(".")))
    return (1, (name,))


def example_ideal(name: str):
    return IDEALS[ALIASES.get(name, name)]()


def run_example(name: str, p: int = DEFAULT_CHAR) -> ExampleReport:
    key = ALIASES.get(name, name)
    runner: Callable = RUNNERS.get(key)
    if runner is None:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(example_names())}")
    report = ExampleReport(name)
    runner(report, p)
    return report
