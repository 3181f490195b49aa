import random
from fractions import Fraction

import pytest

from hypothesis import given, settings

from qpfiber.braidcore import BandRepresentation, BraidWord, EmbeddedBand, beta, word_from_letters
from qpfiber.errors import NonExactDivision
from qpfiber.invariants import (
    LaurentPolynomial,
    SeifertMatrix,
    alexander_from_braid,
    alexander_from_seifert,
    eq_up_to_units,
    identity_matrix,
    mat_det,
    mat_mul,
    reduced_burau,
    seifert_matrix,
)
from qpfiber.surface import BraidedSurface, summary

from conftest import braid_words


def L(coeffs):
    return LaurentPolynomial(coeffs)


HOPF = BandRepresentation(2, (EmbeddedBand(1, 2, 1), EmbeddedBand(1, 2, 1)))
TREFOIL = BandRepresentation(2, tuple(EmbeddedBand(1, 2, 1) for _ in range(3)))


class TestLaurent:
    def test_canonical_form(self):
        assert L({-3: -2, -1: 2}).canonical() == L({0: 2, 2: -2})
        assert L({}).canonical() == L({})

    def test_exact_division(self):
        p = L({0: 1, 1: 1}) * L({0: 1, 1: -1, 2: 1})
        assert p.exact_div(L({0: 1, 1: 1})) == L({0: 1, 1: -1, 2: 1})
        with pytest.raises(NonExactDivision):
            L({0: 1, 1: 1}).exact_div(L({0: 2}))
        with pytest.raises(NonExactDivision):
            L({0: 1, 2: 1}).exact_div(L({0: 1, 1: 1}))

    def test_eq_up_to_units(self):
        assert eq_up_to_units(L({0: -1, 1: 1}), L({0: 1, 1: -1}))       # t-1 vs 1-t
        assert eq_up_to_units(L({0: 1, 1: -1, 2: 1}), L({1: 1, 2: -1, 3: 1}))  # shift by t
        assert not eq_up_to_units(L({0: -1, 1: 1}), L({0: 1, 1: 1}))

    def test_evaluate(self):
        assert L({-1: 2, 1: 3}).evaluate(Fraction(2)) == Fraction(7)


class TestBurau:
    def test_empty_word_is_identity(self):
        assert reduced_burau(BraidWord(2, ())) == identity_matrix(1)

    def test_inverse_pair(self):
        assert reduced_burau(word_from_letters(3, [1, -1])) == identity_matrix(2)
        assert reduced_burau(word_from_letters(4, [-2, 2])) == identity_matrix(3)

    def test_braid_relations(self):
        for n in (3, 4, 5):
            for i in range(1, n - 1):
                a = word_from_letters(n, [i, i + 1, i])
                b = word_from_letters(n, [i + 1, i, i + 1])
                assert reduced_burau(a) == reduced_burau(b)
        a = reduced_burau(word_from_letters(4, [1, 3]))
        b = reduced_burau(word_from_letters(4, [3, 1]))
        assert a == b

    @given(braid_words(max_strands=4, max_length=5), braid_words(max_strands=4, max_length=5))
    @settings(max_examples=40)
    def test_homomorphism(self, w1, w2):
        n = max(w1.strands, w2.strands)
        w1, w2 = w1.retag(n), w2.retag(n)
        assert reduced_burau(w1 * w2) == mat_mul(reduced_burau(w1), reduced_burau(w2))

    @given(braid_words(max_strands=4, max_length=6))
    @settings(max_examples=40)
    def test_determinant_at_one_is_permutation_sign(self, word):
        det = mat_det(reduced_burau(word)).evaluate(Fraction(1))
        sign = -1 if len(word.letters) % 2 else 1
        assert det == sign


class TestAlexanderFromBraid:
    def test_unknot(self):
        assert alexander_from_braid(word_from_letters(2, [1])) == L({0: 1})
        assert alexander_from_braid(BraidWord(1, ())) == L({0: 1})

    def test_trefoil(self):
        assert alexander_from_braid(word_from_letters(2, [1, 1, 1])) == L({0: 1, 1: -1, 2: 1})

    def test_hopf_link(self):
        assert eq_up_to_units(alexander_from_braid(word_from_letters(2, [1, 1])), L({0: -1, 1: 1}))

    def test_split_unlink_vanishes(self):
        assert alexander_from_braid(BraidWord(2, ())).is_zero()

    @given(braid_words(max_strands=4, max_length=5))
    @settings(max_examples=25, deadline=None)
    def test_markov_conjugation_invariance(self, word):
        rng = random.Random(len(word.letters) * 31 + word.strands)
        g = word_from_letters(
            word.strands,
            [rng.choice([1, -1]) * rng.randint(1, word.strands - 1) for _ in range(2)],
        )
        conjugated = g * word * g.inverse()
        assert eq_up_to_units(alexander_from_braid(word), alexander_from_braid(conjugated))

    @given(braid_words(max_strands=4, max_length=5))
    @settings(max_examples=25, deadline=None)
    def test_markov_positive_stabilization(self, word):
        stabilized = BraidWord(word.strands + 1, word.letters + ((word.strands, 1),))
        assert eq_up_to_units(alexander_from_braid(word), alexander_from_braid(stabilized))


class TestSeifert:
    def test_empty(self):
        assert seifert_matrix(BandRepresentation(3, ())).entries == ()
        assert alexander_from_seifert(SeifertMatrix(())) == L({0: 1})

    def test_hopf_band(self):
        assert seifert_matrix(HOPF).entries == ((-1,),)

    def test_trefoil_matrix(self):
        v = seifert_matrix(TREFOIL)
        # congruent to [[-1, 1], [0, -1]]; frozen as computed, checked by the
        # determinant pair which is congruence-invariant
        target = ((-1, 1), (0, -1))
        assert v.size == 2
        det = lambda m: m[0][0] * m[1][1] - m[0][1] * m[1][0]
        sym = lambda m: tuple(tuple(m[i][j] + m[j][i] for j in range(2)) for i in range(2))
        assert det(v.entries) == det(target)
        assert det(sym(v.entries)) == det(sym(target))

    def test_alexander_from_matrices(self):
        assert eq_up_to_units(alexander_from_seifert(SeifertMatrix(((-1,),))), L({0: -1, 1: 1}))
        assert alexander_from_seifert(SeifertMatrix(((-1, 1), (0, -1)))) == L({0: 1, 1: -1, 2: 1})

    def test_size_formula(self, rng):
        from qpfiber.sampling import random_band_representation

        for _ in range(40):
            rep = random_band_representation(rng, 5, 6)
            comps = len(summary(BraidedSurface(rep)).components)
            expected = len(rep.bands) - rep.strands + comps
            assert seifert_matrix(rep).size == expected

    def test_cross_oracle_smoke(self, rng):
        from qpfiber.sampling import random_connected_quasipositive

        for _ in range(25):
            rep = random_connected_quasipositive(rng, 4, 5)
            a = alexander_from_seifert(seifert_matrix(rep))
            b = alexander_from_braid(beta(rep))
            assert eq_up_to_units(a, b), rep.to_json()

    def test_cross_oracle_with_negative_bands(self, rng):
        from qpfiber.sampling import random_band_representation

        done = 0
        while done < 25:
            rep = random_band_representation(rng, 4, 5, min_strands=2)
            if len(summary(BraidedSurface(rep)).components) != 1:
                continue
            done += 1
            a = alexander_from_seifert(seifert_matrix(rep))
            b = alexander_from_braid(beta(rep))
            assert eq_up_to_units(a, b), rep.to_json()
