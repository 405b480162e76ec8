"""Brute-force oracles and hypothesis strategies shared by the test modules.

The oracles deliberately avoid the package's own helpers (no numpy, no
minimalize) so that they check the implementation rather than mirror it.
"""
import itertools

import pytest
from hypothesis import strategies as st

from monideal import make_ideal


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def brute_contains(gens, m):
    return any(divides(g, m) for g in gens)


def brute_minimal(monomials):
    mons = set(tuple(m) for m in monomials)
    return {m for m in mons if not any(o != m and divides(o, m) for o in mons)}


def box(bound):
    """Every exponent vector componentwise <= bound."""
    return itertools.product(*(range(b + 1) for b in bound))


def gens_set(ideal):
    return {tuple(g) for g in ideal.gens}


def same_membership(gens_a, gens_b, bound):
    """Do the two generator sets define the same ideal on the box <= bound?"""
    return all(brute_contains(gens_a, m) == brute_contains(gens_b, m) for m in box(bound))


def brute_exchange(ideal):
    """Exchange property straight from the definition, with divisor-scan membership."""
    gens = [tuple(g) for g in ideal.gens]
    if len({sum(g) for g in gens}) != 1:
        return False
    n = ideal.nvars
    for u in gens:
        for v in gens:
            for i in range(n):
                if u[i] > v[i]:
                    ok = False
                    for j in range(n):
                        if v[j] > u[j]:
                            w = list(u)
                            w[i] -= 1
                            w[j] += 1
                            if brute_contains(gens, w):
                                ok = True
                    if not ok:
                        return False
    return True


@st.composite
def ideals(draw, max_vars=4, max_exp=3, max_gens=5, min_vars=1, allow_unit=False):
    n = draw(st.integers(min_vars, max_vars))
    mono = st.tuples(*[st.integers(0, max_exp)] * n)
    gens = draw(st.lists(mono, min_size=1, max_size=max_gens))
    if not allow_unit:
        gens = [g for g in gens if any(g)] or [tuple([1] + [0] * (n - 1))]
    return make_ideal(n, gens)


@st.composite
def equigenerated_ideals(draw, max_vars=4, max_degree=3, max_gens=6):
    n = draw(st.integers(1, max_vars))
    d = draw(st.integers(1, max_degree))
    pool = [c for c in itertools.product(range(d + 1), repeat=n) if sum(c) == d]
    gens = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_gens, unique=True))
    return make_ideal(n, gens)


@pytest.fixture
def ex14():
    from monideal import parse_ideal

    return parse_ideal("x1*x2, x1*x3, x2^2", 3)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion, taken from recorded properties."""
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", None) != "call":
                continue
            props = dict(report.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL",
                              props.get("title", ""), props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for number, verdict, title, detail in sorted(lines):
            terminalreporter.write_line(f"{verdict} criterion {number:>2}: {title}  {detail}".rstrip())
