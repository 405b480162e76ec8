import itertools
import warnings

import pytest
from hypothesis import given, settings

from monideal import DomainError, MonomialIdeal, MonomialPrime, localize, make_ideal, parse_ideal
from monideal.core import all_primes, compositions, saturate_graded
from monideal.decomp import (
    ass_primes,
    find_presentations,
    has_embedded,
    height,
    intersect_presentation,
    irreducible_decomposition,
    is_unmixed,
    min_primes,
    minimal_covers,
    presentation_bound_check,
    prime_power,
    strong_intersection_check,
    truncate_at,
)
from monideal.resolution import regularity

from conftest import box, brute_contains, ideals


def P(n, *vs):
    return MonomialPrime(n, frozenset(vs))


def brute_component_contains(comp, m):
    return any(m[i - 1] >= e for i, e in comp.exps)


class TestPrimePower:
    @pytest.mark.parametrize("n,k", [(2, 1), (3, 2), (4, 3), (4, 5)])
    def test_generator_count(self, n, k):
        from math import comb

        assert len(prime_power(MonomialPrime.maximal(n), k).gens) == comb(n + k - 1, k)

    def test_single_variable(self):
        assert prime_power(P(3, 2), 4) == parse_ideal("x2^4", 3)

    def test_zero_power_warns(self):
        with pytest.warns(UserWarning):
            assert prime_power(P(2, 1), 0).is_unit()

    def test_localization_at_larger_prime_is_identity(self):
        q = P(4, 1, 3)
        for p in all_primes(4):
            loc = localize(prime_power(q, 3), p)
            if q.vars <= p.vars:
                assert loc == prime_power(q, 3)
            else:
                assert loc.is_unit()


class TestIntersectPresentation:
    def test_two_coordinate_lines(self):
        ideal = intersect_presentation([(P(3, 1, 2), 1), (P(3, 1, 3), 1)])
        assert ideal == parse_ideal("x1, x2*x3", 3)

    def test_six_height_two_primes(self):
        # every pair of 4 variables at exponent 1: the squarefree Veronese of degree 3
        terms = [(P(4, *pair), 1) for pair in itertools.combinations(range(1, 5), 2)]
        ideal = intersect_presentation(terms)
        assert ideal == parse_ideal("x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4", 4)

    def test_mixed_exponents_membership(self):
        terms = [(P(4, 1, 2), 2), (P(4, 1, 2, 3), 3), (P(4, 1, 2, 4), 3), (MonomialPrime.maximal(4), 5)]
        ideal = intersect_presentation(terms)
        for m in box((5, 5, 5, 5)):
            inside = all(sum(m[i - 1] for i in p.vars) >= d for p, d in terms)
            assert brute_contains(ideal.gens, m) == inside

    def test_empty(self):
        assert intersect_presentation([], nvars=3).is_unit()
        with pytest.raises(DomainError):
            intersect_presentation([])


class TestDecomposition:
    def test_example(self):
        comps = irreducible_decomposition(parse_ideal("x1*x2, x1*x3, x2^2", 3))
        assert sorted(str(c) for c in comps) == sorted(["(x1, x2^2)", "(x2, x3)"])

    def test_rejects_zero_and_unit(self):
        with pytest.raises(DomainError):
            irreducible_decomposition(MonomialIdeal.zero(2))
        with pytest.raises(DomainError):
            irreducible_decomposition(MonomialIdeal.unit(2))

    @settings(max_examples=80, deadline=None)
    @given(ideals(max_vars=4, max_exp=3, max_gens=5))
    def test_membership_oracle(self, ideal):
        comps = irreducible_decomposition(ideal)
        bound = [b + 1 for b in ideal.lcm()]
        for m in box(bound):
            assert brute_contains(ideal.gens, m) == all(brute_component_contains(c, m) for c in comps)
        # irredundant: dropping any component enlarges the intersection somewhere in the box
        for k in range(len(comps)):
            rest = comps[:k] + comps[k + 1:]
            if not rest:
                continue
            assert any(
                all(brute_component_contains(c, m) for c in rest) and not brute_component_contains(comps[k], m)
                for m in box(bound)
            )

    @settings(max_examples=60, deadline=None)
    @given(ideals(max_vars=4))
    def test_min_primes_are_minimal_ass(self, ideal):
        mins = min_primes(ideal)
        ass = ass_primes(ideal)
        assert set(mins) <= set(ass)
        assert height(ideal) == min(p.height for p in mins)

    def test_ass_of_presented_example(self):
        terms = [(P(4, 1, 2), 2), (P(4, 1, 2, 3), 3), (P(4, 1, 2, 4), 3), (MonomialPrime.maximal(4), 5)]
        ideal = intersect_presentation(terms)
        assert ass_primes(ideal) == [p for p, _ in terms]
        assert min_primes(ideal) == [P(4, 1, 2)]
        assert has_embedded(ideal)
        assert not is_unmixed(ideal)
        assert height(ideal) == 2

    def test_squarefree_unmixed(self):
        ideal = parse_ideal("x1*x2, x2*x3, x3*x4, x1*x4", 4)
        assert is_unmixed(ideal) and not has_embedded(ideal)
        assert {str(p) for p in minimal_covers(ideal)} == {"(x1, x3)", "(x2, x4)"}


class TestStrongIntersection:
    def test_maximal_power(self):
        ideal = make_ideal(3, list(compositions(2, 3)))
        result = strong_intersection_check(ideal)
        assert result.holds and result.presentation == [(MonomialPrime.maximal(3), 2)]

    def test_fails_for_nonlinear(self):
        ideal = parse_ideal("x1^2, x2^2", 2)
        assert not strong_intersection_check(ideal).holds

    def test_custom_reg_fn(self):
        ideal = parse_ideal("x1*x2, x1*x3, x2*x3", 3)
        result = strong_intersection_check(ideal, lambda j: regularity(j, 2))
        assert result.holds

    def test_needs_equigenerated(self):
        with pytest.raises(DomainError):
            strong_intersection_check(parse_ideal("x1, x2^2", 2))

    def test_presentation_search_and_bound(self):
        ideal = parse_ideal("x1^2, x1*x2", 2)
        found = find_presentations(ideal)
        assert found == [[(P(2, 1), 1), (MonomialPrime.maximal(2), 2)]]
        rows = presentation_bound_check(ideal, found[0])
        assert all(ok for *_, ok in rows)


class TestTruncation:
    def test_truncate(self):
        ideal = parse_ideal("x1, x2^2", 2)
        assert truncate_at(ideal, 2) == parse_ideal("x1^2, x1*x2, x2^2", 2)

    def test_identity_on_linear_example(self):
        ideal = parse_ideal("x1^2, x1*x2", 2)
        assert truncate_at(saturate_graded(ideal), 2) == ideal

    @settings(max_examples=40, deadline=None)
    @given(ideals(max_vars=3, max_exp=3))
    def test_truncation_contains_degree_part(self, ideal):
        d = max(ideal.degrees())
        t = truncate_at(ideal, d)
        assert set(t.degrees()) == {d}
        for m in box([d] * ideal.nvars):
            if sum(m) == d:
                assert brute_contains(t.gens, m) == brute_contains(ideal.gens, m)


def test_no_warning_for_positive_power():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        prime_power(P(3, 1, 2), 2)
