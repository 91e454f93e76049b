from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from canon_descent.canon import (
    InvalidPermutation,
    InvalidTableau,
    RectTableau,
    SizeMismatch,
    can,
    can_tableau,
    check_permutation,
    complement,
    contains_pattern,
    decreasing,
    des,
    Des,
    descent_set,
    format_word,
    identity,
    parse_permutation,
    partner,
)
from canon_descent.dyck import enumerate_dyck, lpk, parse_path

from conftest import dyck_paths

P = parse_path


def occurrence_split(word):
    """First and second occurrences of each letter, in word order, plus first-occurrence positions."""
    seen, first, second, first_pos = set(), [], [], []
    for i, x in enumerate(word):
        if x in seen:
            second.append(x)
        else:
            seen.add(x)
            first.append(x)
            first_pos.append(i)
    return first, second, first_pos


class TestCan:
    def test_examples(self):
        assert str(can(P("UUDUDD"), (1, 2, 3))) == "121323"
        assert str(can(P("UUDUDD"), (2, 1, 3))) == "212313"
        assert str(can(P("UUDUDDUDUUDD"), (5, 4, 1, 6, 2, 3))) == "545141662323"
        assert can(P("UD"), (1,)).word == (1, 1)

    def test_errors(self):
        with pytest.raises(SizeMismatch):
            can(P("UUDD"), (1, 2, 3))
        with pytest.raises(InvalidPermutation):
            can(P("UUDD"), (1, 1))
        with pytest.raises(InvalidPermutation):
            parse_permutation("13")

    def test_parse_and_format(self):
        assert parse_permutation("4132") == parse_permutation("4,1,3,2") == parse_permutation("4 1 3 2") == (4, 1, 3, 2)
        assert format_word((1, 2)) == "12"
        assert format_word((10, 1, 2)) == "10,1,2"
        assert check_permutation([2, 1]) == (2, 1)

    @given(st.data())
    def test_occurrence_characterization(self, data):
        d = data.draw(dyck_paths())
        sigma = tuple(data.draw(st.permutations(range(1, d.semilength + 1))))
        first, second, first_pos = occurrence_split(can(d, sigma).word)
        assert tuple(first) == tuple(second) == sigma
        assert first_pos == [i for i, s in enumerate(d.steps) if s == 1]

    @given(dyck_paths())
    def test_partner_pairs_same_label(self, d):
        word = can(d, decreasing(d.semilength)).word
        for i in range(len(word)):
            j = partner(d, i)
            assert partner(d, j) == i and word[i] == word[j] and i != j

    @pytest.mark.parametrize("n", range(1, 5))
    def test_nonnesting_words_are_exactly_canon(self, n):
        letters = [x for x in range(1, n + 1) for _ in range(2)]
        nonnesting = {
            w for w in set(permutations(letters)) if not contains_pattern(w, (1, 2, 2, 1)) and not contains_pattern(w, (2, 1, 1, 2))
        }
        canon = {can(d, s).word for d in enumerate_dyck(n) for s in permutations(range(1, n + 1))}
        assert canon == nonnesting

    def test_contains_pattern(self):
        assert contains_pattern((1, 2, 2, 1), (1, 2, 2, 1))
        assert contains_pattern((3, 1, 2, 2, 1), (2, 1, 1, 2)) is False
        assert contains_pattern((2, 3, 1, 1, 3, 2), (2, 1, 1, 2))


class TestDescents:
    def test_examples(self):
        assert des(P("UUDUDD"), (1, 2, 3)) == 2
        assert Des(P("UUDUDD"), (1, 2, 3)) == frozenset({2, 4})
        for n in range(1, 7):
            assert des(P("UD" * n), identity(n)) == 0
        for s in [(3, 4, 2, 1), (4, 1, 3, 2), (4, 2, 3, 1), (4, 3, 2, 1)]:
            assert des(P("UUDUDDUD"), s) == 4
        assert descent_set((3, 1, 2)) == frozenset({1})

    def test_complement(self):
        assert complement((1, 2, 3)) == (3, 2, 1)
        assert complement((5, 4, 1, 6, 2, 3)) == (2, 3, 6, 1, 5, 4)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_complement_identity(self, n):
        for d in enumerate_dyck(n):
            k = 2 * n - 1 - lpk(d)
            for s in permutations(range(1, n + 1)):
                assert des(d, s) + des(d, complement(s)) == k

    @given(st.permutations(range(1, 8)))
    def test_complement_involution(self, s):
        s = tuple(s)
        assert complement(complement(s)) == s


class TestTableau:
    def test_column_reading(self):
        T = RectTableau.column_reading(3, 3)
        assert T.rows == ((1, 4, 7), (2, 5, 8), (3, 6, 9))
        assert can_tableau(T, (1, 2, 3)) == (1, 2, 3) * 3

    def test_invalid(self):
        with pytest.raises(InvalidTableau):
            RectTableau(((1, 3), (2, 2)))
        with pytest.raises(InvalidTableau):
            RectTableau(((2, 1), (3, 4)))
        with pytest.raises(InvalidTableau):
            RectTableau(((1, 2), (3,)))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_two_column_tableau_matches_path(self, n):
        sigmas = list(permutations(range(1, n + 1)))[:: max(1, len(list(permutations(range(n)))) // 60)]
        for d in enumerate_dyck(n):
            T = RectTableau.from_path(d)
            for s in sigmas:
                assert can_tableau(T, s) == can(d, s).word

    @given(st.integers(1, 4), st.integers(1, 4), st.data())
    def test_letter_multiset(self, n, m, data):
        s = tuple(data.draw(st.permutations(range(1, n + 1))))
        w = can_tableau(RectTableau.column_reading(n, m), s)
        assert sorted(w) == sorted(list(range(1, n + 1)) * m)
