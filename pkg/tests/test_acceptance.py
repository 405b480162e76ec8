"""Acceptance criteria, one test per criterion.

Each test records its criterion number and a short outcome; the summary hook in
conftest prints one PASS/FAIL line per criterion at the end of the run.
"""
import random
import time

import pytest

from monideal import MonomialPrime, is_polymatroidal, localize, make_ideal, power
from monideal.core import contains, descriptors, saturate_graded, saturate_var
from monideal.decomp import (
    ass_primes,
    find_presentations,
    intersect_presentation,
    presentation_bound_check,
    truncate_at,
)
from monideal.harness import examples
from monideal.harness.fuzz import fuzz, random_corpus, random_ideal, squarefree_corpus
from monideal.harness.scan import product_polymatroidality, scan_localizations
from monideal.polymatroid import (
    is_matroidal,
    is_veronese_type,
    transversal,
    veronese_type,
)
from monideal.resolution import (
    betti,
    check_quotient_order,
    has_linear_resolution,
    linear_quotients,
    regularity,
    taylor_betti,
)

CHARS = (32003, 2)


@pytest.fixture
def criterion(record_property):
    def mark(number, title):
        record_property("criterion", number)
        record_property("title", title)
        return lambda detail: record_property("detail", detail)
    return mark


def equigenerated_corpus():
    """Exhaustive small squarefree ideals plus seeded random equigenerated ones."""
    return squarefree_corpus(4, 3, 6) + random_corpus(2024, 300, max_vars=4, max_degree=3, max_gens=8)


CORPUS = equigenerated_corpus()


def test_regularity_of_powers_over_two_fields(criterion):
    detail = criterion(1, "reg of I, I^2, I^3 = 3, 6, 10 over GF(32003) and GF(2), <= 120 s")
    ideal = examples.example_ideal("example-1.22")
    start = time.perf_counter()
    observed = {}
    for p in CHARS:
        current = ideal
        for k in (1, 2, 3):
            if k > 1:
                current = current * ideal
            observed[(p, k)] = regularity(current, p)
    elapsed = time.perf_counter() - start
    detail(f"{observed} in {elapsed:.1f}s")
    assert all(observed[(p, k)] == r for p in CHARS for k, r in ((1, 3), (2, 6), (3, 10)))
    assert elapsed <= 120


def test_linear_ideal_with_nonlinear_square(criterion):
    detail = criterion(2, "linear I with non-linear I^2 (reg >= 7), <= 10 s")
    ideal = examples.example_ideal("sturmfels")
    start = time.perf_counter()
    linear = has_linear_resolution(ideal)
    square = power(ideal, 2)
    square_linear = has_linear_resolution(square)
    reg2 = regularity(square)
    elapsed = time.perf_counter() - start
    detail(f"linear={linear}, square linear={square_linear}, reg(I^2)={reg2}, {elapsed:.2f}s")
    assert linear and not square_linear and reg2 >= 7
    assert elapsed <= 10


def test_three_variable_example(criterion):
    detail = criterion(3, "reg 2, linear, not polymatroidal, some localization non-linear")
    ideal = examples.example_ideal("example-1.4")
    for p in CHARS:
        assert regularity(ideal, p) == 2
        assert has_linear_resolution(ideal, p)
        assert not scan_localizations(ideal, p).all_linear
    assert not is_polymatroidal(ideal)
    failing = [str(r.prime) for r in scan_localizations(ideal).failures]
    detail(f"non-linear at {failing}")
    assert failing


def test_linear_saturations_without_polymatroidality(criterion):
    detail = criterion(4, "I and every I[i] linear, not polymatroidal, failing prime exists")
    ideal = examples.example_ideal("example-1.6")
    for p in CHARS:
        assert has_linear_resolution(ideal, p)
        for i in range(1, 5):
            assert has_linear_resolution(saturate_var(ideal, i), p)
    assert not is_polymatroidal(ideal)
    failing = scan_localizations(ideal).failures
    detail(f"first failing prime {failing[0].prime}" if failing else "no failing prime")
    assert failing


def test_squarefree_non_matroidal_example(criterion):
    detail = criterion(5, "reg(I) = 3, reg(I[i]) = 2 for every i, not matroidal")
    ideal = examples.example_ideal("example-1.7")
    regs = {p: (regularity(ideal, p), [regularity(saturate_var(ideal, i), p) for i in range(1, 6)])
            for p in CHARS}
    detail(str(regs))
    for reg, sats in regs.values():
        assert reg == 3 and sats == [2] * 5
    assert not is_matroidal(ideal)


def test_presented_polymatroidal_example(criterion):
    detail = criterion(6, "presented ideal: degree 5, x1^5, x2^5, a_3 = 2, non-member, not Veronese, polymatroidal")
    ideal = intersect_presentation([
        (MonomialPrime(4, frozenset({1, 2})), 2),
        (MonomialPrime(4, frozenset({1, 2, 3})), 3),
        (MonomialPrime(4, frozenset({1, 2, 4})), 3),
        (MonomialPrime.maximal(4), 5),
    ])
    desc = descriptors(ideal)
    detail(f"{len(ideal.gens)} generators, bounds {desc.bounds}")
    assert desc.equigenerated_degree == 5
    assert (5, 0, 0, 0) in ideal.gens and (0, 5, 0, 0) in ideal.gens
    assert desc.bounds[2] == 2
    assert not contains(ideal, (1, 0, 2, 2))
    assert is_veronese_type(ideal) is None
    assert is_polymatroidal(ideal)


def test_product_polymatroidality(criterion):
    detail = criterion(7, "products: (True, True, False) and (True, False, False)")
    first = product_polymatroidality(*examples.example_ideal("example-1.24"))
    second = product_polymatroidality(*examples.example_ideal("example-1.25"))
    detail(f"{first} {second}")
    assert first == (True, True, False)
    assert second == (True, False, False)


def _random_mixed_ideals(seed, count, max_gens=8):
    """Arbitrary (not necessarily equigenerated) ideals with at most ``max_gens`` generators."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, 4)
        gens = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, max_gens))]
        gens = [g for g in gens if any(g)]
        if gens:
            out.append(make_ideal(n, gens))
    return out


def test_betti_matches_taylor_oracle(criterion):
    detail = criterion(8, "betti = taylor_betti entrywise on the squarefree corpus and 500 random ideals")
    corpus = squarefree_corpus(4, 3, 6)
    corpus += random_corpus(8, 250, max_vars=4, max_degree=3, max_gens=8)
    corpus += _random_mixed_ideals(88, 250)
    mismatches = [ideal for ideal in corpus if betti(ideal).entries != taylor_betti(ideal).entries]
    detail(f"{len(corpus)} ideals, {len(mismatches)} mismatches")
    assert not mismatches, mismatches[:3]


def _closure_samples(seed, count=200):
    """Seeded mix of random, Veronese-type and transversal ideals; n <= 4, d <= 4, |G| <= 10."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, 4)
        d = rng.randint(1, 4)
        kind = rng.choice(("random", "veronese", "transversal"))
        if kind == "random":
            total = len(list(veronese_type(n, d, (d,) * n).gens))
            ideal = random_ideal(rng.randrange(2 ** 31), n, d, rng.randint(1, min(10, total)))
        elif kind == "veronese":
            bounds = [rng.randint(0, d) for _ in range(n)]
            if sum(bounds) < d:
                continue
            ideal = veronese_type(n, d, bounds)
        else:
            primes = [MonomialPrime(n, frozenset(rng.sample(range(1, n + 1), rng.randint(1, n))))
                      for _ in range(d)]
            ideal = transversal(primes)
        if len(ideal.gens) <= 10:
            out.append(ideal)
    return out


def test_closure_properties(criterion):
    detail = criterion(9, "polymatroidal => localizations, squares, cubes polymatroidal; quotients => linear")
    violations = []
    counts = {}
    samples = _closure_samples(901)
    poly = [i for i in samples if is_polymatroidal(i)]
    counts["localization"] = len(poly)
    for ideal in poly:
        for p in (MonomialPrime(ideal.nvars, frozenset(s)) for s in _subsets(ideal.nvars)):
            loc = localize(ideal, p)
            if not loc.is_unit() and not is_polymatroidal(loc):
                violations.append(("localization", ideal, p))
    samples = _closure_samples(902)
    poly = [i for i in samples if is_polymatroidal(i)]
    counts["powers"] = len(poly)
    for ideal in poly:
        square = power(ideal, 2)
        if not is_polymatroidal(square) or not is_polymatroidal(square * ideal):
            violations.append(("power", ideal))
    samples = _closure_samples(903)
    poly = [i for i in samples if is_polymatroidal(i)]
    counts["quotients"] = len(poly)
    for ideal in poly:
        result = linear_quotients(ideal)
        if not result.found or not check_quotient_order(result.order) or not has_linear_resolution(ideal):
            violations.append(("quotients", ideal))
    detail(f"polymatroidal samples per property {counts}, {len(violations)} violations")
    assert min(counts.values()) >= 50
    assert not violations, violations[:3]


def _subsets(n):
    return [[i for i in range(1, n + 1) if mask >> (i - 1) & 1] for mask in range(1, 2 ** n)]


def test_presentation_from_localized_regularity(criterion):
    detail = criterion(10, "Ass-linear ideals equal their reg-presentation; valid exponents never exceed reg")
    reproduced = bounded = violations = 0
    for ideal in CORPUS:
        primes = ass_primes(ideal)
        regs = {p: regularity(localize(ideal, p)) for p in primes}
        if all(has_linear_resolution(localize(ideal, p)) for p in primes):
            evaluated = intersect_presentation([(p, regs[p]) for p in primes])
            reproduced += 1
            if evaluated != ideal:
                violations += 1
        for terms in find_presentations(ideal):
            bounded += 1
            rows = presentation_bound_check(ideal, terms, lambda j: regularity(j))
            if not all(ok for *_, ok in rows):
                violations += 1
    detail(f"{reproduced} Ass-linear ideals, {bounded} presentations checked, {violations} violations")
    assert reproduced and bounded
    assert violations == 0


def test_four_variable_fuzz(criterion):
    detail = criterion(11, "200 random 4-variable ideals: all_linear <=> polymatroidal, <= 5 min")
    start = time.perf_counter()
    report = fuzz(seed=1118, samples=200, nvars=4, degrees=(2, 3, 4), max_gens=8)
    elapsed = time.perf_counter() - start
    detail(f"{report.samples} samples, {report.polymatroidal} polymatroidal, "
           f"{len(report.findings)} findings, {elapsed:.1f}s")
    assert report.samples == 200
    assert not report.findings
    assert report.all_linear == report.polymatroidal
    assert elapsed <= 300


def test_truncation_identity(criterion):
    detail = criterion(12, "d-linear I equals the degree-d truncation of its saturation")
    checked = violations = 0
    for ideal in CORPUS:
        d = ideal.equigenerated_degree()
        if has_linear_resolution(ideal):
            checked += 1
            if truncate_at(saturate_graded(ideal), d) != ideal:
                violations += 1
    detail(f"{checked} linear ideals, {violations} violations")
    assert checked and violations == 0
