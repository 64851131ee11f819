"""Tests for lens-space invariant pairs and the generator-pair search."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lensbordism.errors import DegeneratePair, ModulusMismatch, NotAUnit
from lensbordism.lens import (
    GeneratorPairResult,
    LensSpace,
    PontrjaginPair,
    canonical_form,
    find_generator_pair,
    independent,
    independent_bruteforce,
    is_null_bordant,
    pontrjagin_pair,
    q_sum,
    reparametrize,
)
from lensbordism.numtheory import (
    PrimeModulus,
    ResidueClass,
    is_quadratic_residue,
    primes_in_range,
)


def lens(p, *weights):
    return LensSpace(PrimeModulus(p), tuple(weights))


def pair(b0, b1, p):
    return PontrjaginPair.from_ints(b0, b1, p)


class TestLensSpace:
    def test_weights_reduced_and_checked(self):
        L = lens(5, 6, 1, 2)
        assert L.weight_values() == (1, 1, 2)

    def test_zero_weight_rejected(self):
        with pytest.raises(NotAUnit):
            lens(5, 1, 1, 5)

    def test_even_p_rejected(self):
        with pytest.raises(ValueError):
            lens(2, 1, 1, 1)


class TestQSum:
    def test_examples(self):
        assert int(q_sum(lens(5, 1, 1, 1))) == 3
        assert int(q_sum(lens(5, 1, 1, 2))) == 1
        assert int(q_sum(lens(7, 1, 2, 2))) == 2


class TestPontrjaginPair:
    def test_examples(self):
        assert pontrjagin_pair(lens(5, 1, 1, 1)).values() == (1, 3)
        assert pontrjagin_pair(lens(5, 1, 1, 2)).values() == (1, 1)
        assert pontrjagin_pair(lens(7, 1, 1, 1)).values() == (1, 3)

    def test_invariant_under_weight_permutation(self):
        for weights in [(1, 2, 3), (2, 3, 4), (1, 1, 4)]:
            values = {
                pontrjagin_pair(lens(7, *perm)).values()
                for perm in itertools.permutations(weights)
            }
            assert len(values) == 1

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatch):
            PontrjaginPair(ResidueClass(1, 5), ResidueClass(1, 7))


class TestReparametrize:
    def test_examples(self):
        base = pair(1, 3, 5)
        assert reparametrize(base, 1).values() == (1, 3)
        assert reparametrize(base, 2).values() == (3, 1)
        assert reparametrize(base, 4).values() == (4, 2)

    def test_non_unit_rejected(self):
        with pytest.raises(NotAUnit):
            reparametrize(pair(1, 3, 5), 0)
        with pytest.raises(NotAUnit):
            reparametrize(pair(1, 3, 5), 5)

    @given(
        st.sampled_from([5, 7, 11, 13]),
        st.integers(0, 200),
        st.integers(0, 200),
        st.integers(1, 200),
        st.integers(1, 200),
    )
    @settings(max_examples=80)
    def test_group_action_law(self, p, b0, b1, k1, k2):
        if k1 % p == 0:
            k1 += 1
        if k2 % p == 0:
            k2 += 1
        x = pair(b0, b1, p)
        assert reparametrize(reparametrize(x, k1), k2) == reparametrize(x, k1 * k2)


class TestCanonicalForm:
    def test_examples(self):
        assert canonical_form(pair(1, 3, 5)).values() == (1, 3)
        assert canonical_form(pair(3, 1, 5)).values() == (1, 3)
        assert canonical_form(pair(0, 0, 7)).values() == (0, 0)

    def test_orbit_of_1_3_mod_5(self):
        orbit = {reparametrize(pair(1, 3, 5), k).values() for k in range(1, 5)}
        assert orbit == {(1, 3), (3, 1), (2, 4), (4, 2)}

    @pytest.mark.parametrize("p", [5, 7, 11])
    def test_idempotent_and_orbit_constant(self, p):
        for b0 in range(p):
            for b1 in range(p):
                x = pair(b0, b1, p)
                canon = canonical_form(x)
                assert canonical_form(canon) == canon
                for k in range(1, p):
                    assert canonical_form(reparametrize(x, k)) == canon


class TestIsNullBordant:
    def test_examples(self):
        assert is_null_bordant(pair(0, 0, 5)) is True
        assert is_null_bordant(pair(1, 3, 5)) is False
        assert is_null_bordant(pair(0, 2, 5)) is False

    def test_lens_pairs_never_null(self):
        for p in (5, 7):
            for weights in itertools.product(range(1, p), repeat=3):
                L = lens(p, *weights)
                assert not is_null_bordant(pontrjagin_pair(L))


class TestIndependent:
    def test_examples(self):
        assert independent(pair(1, 3, 5), pair(1, 6, 5)) is True
        assert independent(pair(1, 3, 5), pair(1, 3, 5)) is False
        assert independent(pair(1, 3, 7), pair(1, 2, 7)) is True

    def test_zero_slope_cases(self):
        # exactly one vanishing slope: independent; both: dependent
        assert independent(pair(1, 0, 7), pair(1, 2, 7)) is True
        assert independent(pair(1, 2, 7), pair(1, 0, 7)) is True
        assert independent(pair(1, 0, 7), pair(1, 0, 7)) is False

    def test_degenerate_pair_rejected(self):
        with pytest.raises(DegeneratePair):
            independent(pair(0, 1, 5), pair(1, 1, 5))

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatch):
            independent(pair(1, 1, 5), pair(1, 1, 7))

    def test_small_modulus_rejected(self):
        with pytest.raises(ValueError):
            independent(pair(1, 1, 3), pair(1, 2, 3))

    def test_symmetric_for_all_small_primes(self):
        for pm in primes_in_range(5, 31):
            p = int(pm)
            for q in range(p):
                for r in range(p):
                    a, b = pair(1, q, p), pair(1, r, p)
                    assert independent(a, b) == independent(b, a)

    def test_self_dependence(self):
        for p in (5, 7, 11, 13):
            for weights in [(1, 1, 1), (1, 1, 2), (1, 2, 3)]:
                A = pontrjagin_pair(lens(p, *weights))
                assert independent(A, A) is False


def _independent_by_four_variable_scan(p, q, r):
    """Raw four-variable oracle: scan all unit (a, b, k, l)."""
    cubes = [k * k * k % p for k in range(p)]
    for a in range(1, p):
        for b in range(1, p):
            for k in range(1, p):
                for l in range(1, p):
                    if (a * cubes[k] + b * cubes[l]) % p == 0 and (
                        a * k * q + b * l * r
                    ) % p == 0:
                        return False
    return True


class TestIndependentBruteforce:
    def test_examples(self):
        assert independent_bruteforce(pair(1, 3, 5), pair(1, 6, 5)) is True
        assert independent_bruteforce(pair(1, 3, 5), pair(1, 3, 5)) is False

    def test_truth_table_matches_independent_mod_7(self):
        for q in range(7):
            for r in range(7):
                a, b = pair(1, q, 7), pair(1, r, 7)
                assert independent_bruteforce(a, b) == independent(a, b)

    @pytest.mark.parametrize("p", [5, 7])
    def test_matches_four_variable_scan(self, p):
        for q in range(p):
            for r in range(p):
                got = independent_bruteforce(pair(1, q, p), pair(1, r, p))
                assert got == _independent_by_four_variable_scan(p, q, r)


class TestFindGeneratorPair:
    def test_p5_first_stage(self):
        res = find_generator_pair(PrimeModulus(5))
        assert res.first.weight_values() == (1, 1, 1)
        assert res.second.weight_values() == (1, 1, 2)
        assert (res.q, res.r, res.stage) == (3, 6, "i")
        assert res.certificate == 3  # (p+1)/2, a non-residue mod 5

    def test_p7_second_stage(self):
        res = find_generator_pair(PrimeModulus(7))
        assert res.first.weight_values() == (1, 1, 1)
        assert res.second.weight_values() == (1, 2, 2)
        assert (res.q, res.r, res.stage) == (3, 2, "ii")
        assert res.certificate == 5  # (p+3)/2, a non-residue mod 7

    def test_p13_first_stage(self):
        res = find_generator_pair(PrimeModulus(13))
        assert res.first.weight_values() == (1, 1, 1)
        assert res.second.weight_values() == (1, 1, 2)
        assert res.stage == "i"

    def test_stage_one_exactly_when_half_plus_one_is_nonresidue(self):
        for pm in primes_in_range(5, 200):
            p = int(pm)
            res = find_generator_pair(pm)
            expect_stage_one = not is_quadratic_residue((p + 1) // 2, pm)
            assert (res.stage == "i") == expect_stage_one

    def test_small_p_rejected(self):
        with pytest.raises(ValueError):
            find_generator_pair(PrimeModulus(3))

    def test_results_reverify_up_to_500(self):
        for pm in primes_in_range(5, 500):
            p = int(pm)
            res = find_generator_pair(pm)
            assert isinstance(res, GeneratorPairResult)
            a = pontrjagin_pair(res.first)
            b = pontrjagin_pair(res.second)
            assert independent(a, b) is True
            # nominal stage values reduce to the realized weight-square sums
            assert int(q_sum(res.first)) == res.q % p
            assert int(q_sum(res.second)) == res.r % p
            last = res.proof_trace[-1]
            assert last.independent_ok and last.realized
            assert (last.q, last.r, last.stage) == (res.q, res.r, res.stage)

    def test_trace_records_failed_attempts(self):
        res = find_generator_pair(PrimeModulus(7))
        assert len(res.proof_trace) == 2  # stage i failed, stage ii won
        first = res.proof_trace[0]
        assert (first.stage, first.independent_ok) == ("i", False)
