from itertools import permutations

import pytest
from hypothesis import given

from canon_descent.canon import Des, decreasing, des, identity
from canon_descent.dyck import (
    bounce,
    bounce_peaks_are_peaks,
    bpk,
    enumerate_dyck,
    is_under,
    parse_path,
    peak_positions,
    pk,
    reverse_bounce,
    valley_positions,
)
from canon_descent.maximizers import (
    CyclicRelation,
    InvalidChoice,
    LabeledPath,
    LabelOrderViolated,
    MaxPoset,
    NotAValley,
    NotInBSet,
    b_set,
    b_set_bruteforce,
    bperm,
    bperm_labeling,
    count_linear_extensions,
    decreasing_runs_hold,
    generalized_bperm,
    generalized_bperm_outputs,
    is_in_b_set,
    linear_extensions,
    max_descents,
    max_partition,
    max_poset,
    max_set,
    max_set_by_posets,
    maximizer_descent_sets,
    maximizer_report,
    peak_descent_set,
    valley_climb,
    valley_swap,
    vperm,
)
from canon_descent.polynomials import canon_descent_poly

from conftest import dyck_paths

P = parse_path
W = lambda s: tuple(int(c) for c in s)  # noqa: E731
THIRTEEN = "UUD" * 2 + "D" + "U" + "DD" + "U" + "UD" * 2 + "UU" + "DDD" + "U" + "UD" * 2 + "D"


class TestAlgorithmGoldens:
    @pytest.mark.parametrize(
        "path, want",
        [("UUUDDUDUDUUDDD", "7625143"), ("UUDUDDUD", "4132"), ("UUDUDUDUDD", "52413"), ("UD", "1")],
    )
    def test_bperm(self, path, want):
        assert bperm(P(path)) == W(want)

    @pytest.mark.parametrize(
        "path, want",
        [("UUUDUDUDDUUDDUDD", "86172534"), ("UUDUDUDUDD", "53412"), ("UUDUDDUD", "4231"), ("UD", "1")],
    )
    def test_vperm(self, path, want):
        assert vperm(P(path)) == W(want)

    def test_thirteen(self):
        d = P(THIRTEEN)
        assert d.semilength == 13
        assert bperm(d) == (13, 1, 12, 2, 11, 10, 8, 9, 7, 6, 5, 3, 4)
        assert vperm(d) == (13, 9, 12, 10, 11, 8, 6, 7, 5, 4, 3, 1, 2)
        assert des(d, bperm(d)) == des(d, vperm(d)) == max_descents(d)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_staircase_gives_decreasing(self, n):
        d = P("U" * n + "D" * n)
        assert bperm(d) == vperm(d) == decreasing(n)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_both_attain_maximum(self, n):
        for d in enumerate_dyck(n):
            m = max_descents(d)
            assert des(d, bperm(d)) == m
            assert des(d, vperm(d)) == m
            assert decreasing_runs_hold(bperm_labeling(d))
            assert bperm_labeling(d).is_canon()

    def test_bounce_paths_take_no_swaps(self):
        for d in enumerate_dyck(6):
            if bounce(d) == d:
                assert len(valley_climb(d, d)) == 1
                assert vperm(d) == decreasing(6)


class TestValleySwap:
    def test_worked_example(self):
        d = P("UUUDUUDDDUDUDDUD")
        before = LabeledPath(d, (8, 4, 3, 8, 7, 5, 4, 3, 7, 6, 5, 2, 6, 2, 1, 1))
        assert before.is_canon()
        after = valley_swap(before, 10)
        assert str(after.path) == "UUUDUUDDDUUDDDUD"
        assert after.labels == (8, 3, 2, 8, 7, 4, 3, 2, 7, 6, 5, 4, 6, 5, 1, 1)
        assert after.labels[10:12] == (5, 4)

    def test_consecutive_labels_just_trade_places(self):
        c = LabeledPath.from_perm(P("UDUDUD"), (3, 2, 1))
        out = valley_swap(c, 1)
        assert c.labels == (3, 3, 2, 2, 1, 1)
        assert str(out.path) == "UUDDUD"
        assert out.perm() == (2, 3, 1)
        assert out.labels[1:3] == (3, 2)

    def test_errors(self):
        c = LabeledPath.from_perm(P("UDUD"), (1, 2))
        with pytest.raises(LabelOrderViolated):
            valley_swap(c, 1)
        with pytest.raises(NotAValley):
            valley_swap(c, 0)

    @given(dyck_paths(min_n=2, max_n=7))
    def test_descent_set_and_lattice(self, d):
        trace = valley_climb(d, bounce(d))
        sets = {frozenset(i + 1 for i in range(len(c.labels) - 1) if c.labels[i] > c.labels[i + 1]) for c in trace}
        assert len(sets) == 1
        for a, b in zip(trace, trace[1:]):
            assert is_under(a.path, b.path) and a.path != b.path
            assert b.is_canon()
            # leftmost valley whose swap stays under d
            swapped = [x - 1 for x in valley_positions(a.path) if a.path.steps[x - 1] != b.path.steps[x - 1]]
            legal = [
                x - 1
                for x in valley_positions(a.path)
                if is_under(type(d)(a.path.steps[: x - 1] + (1, 0) + a.path.steps[x + 1 :]), d)
            ]
            assert swapped[0] == legal[0]


class TestGeneralized:
    def test_k_one_is_bperm(self):
        for d in enumerate_dyck(6):
            assert generalized_bperm(d, lambda q, kmax: 1) == bperm(d)

    def test_example_outputs(self):
        d = P("UUDUDUDUDD")
        assert generalized_bperm_outputs(d) == {W("52413"), W("53412")}
        assert vperm(d) in generalized_bperm_outputs(d)

    def test_invalid_choice(self):
        with pytest.raises(InvalidChoice):
            generalized_bperm(P("UUDUDUDUDD"), lambda q, kmax: kmax + 1)
        with pytest.raises(InvalidChoice):
            generalized_bperm(P("UUDUDUDUDD"), [])

    @pytest.mark.parametrize("n", range(1, 7))
    def test_outputs_are_maximizers(self, n):
        for d in enumerate_dyck(n):
            assert generalized_bperm_outputs(d) <= max_set(d)


class TestMaxSet:
    def test_examples(self):
        assert max_set(P("UUDUDDUD")) == {W("3421"), W("4132"), W("4231"), W("4321")}
        assert max_set(P("UD")) == {(1,)}
        assert max_set(P("UUDUDUDUDUDD")) == {W("635241"), W("645231")}

    @pytest.mark.parametrize("n", range(1, 6))
    def test_against_naive(self, n):
        for d in enumerate_dyck(n):
            values = {s: des(d, s) for s in permutations(range(1, n + 1))}
            top = max(values.values())
            assert top == max_descents(d)
            assert max_set(d) == {s for s, v in values.items() if v == top}
            assert len(max_set(d)) == canon_descent_poly(d).leading_coefficient()

    @pytest.mark.parametrize("n", range(1, 8))
    def test_corollaries(self, n):
        delta = decreasing(n)
        for d in enumerate_dyck(n):
            m = max_set(d)
            assert (delta in m) == (pk(d) == bpk(d))
            assert (m == {delta}) == (bounce(d) == d)


class TestBSet:
    def test_examples(self):
        d = P("UUDUUDDUDUDD")
        assert len(b_set(d)) == 3
        for n in range(1, 7):
            assert b_set(P("UD" * n)) == [P("UD" * n)]
        assert b_set(P("UUDUDUDUDUDD")) == [bounce(P("UUDUDUDUDUDD"))]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_against_filter(self, n):
        for d in enumerate_dyck(n):
            bs = b_set(d)
            assert bs == b_set_bruteforce(d)
            assert bounce(d) in bs and reverse_bounce(d) in bs
            assert (d in bs) == (pk(d) == bpk(d))
            assert (len(bs) == 1) == bounce_peaks_are_peaks(d)
            for b in bs:
                assert pk(b) == bpk(d) and is_under(b, d)
                assert all(b.heights[x] == d.heights[x] for x in peak_positions(b))

    def test_membership_errors(self):
        d = P("UUDUDDUD")
        assert not is_in_b_set(P("UDUDUDUD"), d)
        with pytest.raises(NotInBSet):
            max_poset(d, P("UDUDUDUD"))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_descent_sets(self, n):
        for d in enumerate_dyck(n):
            left = maximizer_descent_sets(d)
            right = {peak_descent_set(b) for b in b_set(d)}
            assert left == right
            assert len(left) == len(b_set(d))
            for b in b_set(d):
                assert peak_descent_set(b) == Des(b, decreasing(n))


class TestPosets:
    def test_worked_poset(self):
        d, b = P("UUDUDUDUDD"), P("UUDDUDUUDD")
        poset = max_poset(d, b)
        assert poset.cover_relations() == {(1, 3), (3, 2), (4, 3), (3, 5)}
        assert linear_extensions(poset) == [W("41352"), W("42351"), W("51342"), W("52341")]
        assert not poset.is_chain()

    def test_three_blocks(self):
        blocks = {str(b): set(e) for b, e in max_partition(P("UUDUDDUUDD"))}
        assert blocks == {
            "UDUUDDUUDD": {W("45321")},
            "UUDDUDUUDD": {W("51432"), W("52431"), W("53421")},
            "UUDUDDUUDD": {W("54321")},
        }

    def test_bounce_gives_chain(self):
        for d in enumerate_dyck(5):
            if bounce(d) == d:
                poset = max_poset(d, d)
                assert poset.is_chain()
                assert linear_extensions(poset) == [decreasing(5)]

    def test_small_posets(self):
        assert len(linear_extensions(MaxPoset(4, frozenset()))) == 24
        chain = MaxPoset(4, frozenset({(1, 2), (2, 3), (3, 4)}))
        assert linear_extensions(chain) == [(4, 3, 2, 1)]
        with pytest.raises(CyclicRelation):
            linear_extensions(MaxPoset(2, frozenset({(1, 2), (2, 1)})))
        with pytest.raises(CyclicRelation):
            count_linear_extensions(MaxPoset(2, frozenset({(1, 2), (2, 1)})))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_partition(self, n):
        for d in enumerate_dyck(n):
            blocks = max_partition(d)
            union = set()
            for b, ext in blocks:
                poset = max_poset(d, b)
                assert poset.is_acyclic()
                assert count_linear_extensions(poset) == len(ext)
                assert not union & set(ext)
                union |= set(ext)
                for s in ext:
                    assert Des(d, s) == peak_descent_set(b)
            assert union == max_set(d) == max_set_by_posets(d)
            assert canon_descent_poly(d).leading_coefficient() >= len(blocks)
            base = set(linear_extensions(max_poset(d, bounce(d))))
            assert bperm(d) in base and vperm(d) in base

    def test_identity_word_used_for_relations(self):
        d = P("UUDUDDUD")
        assert max_poset(d, bounce(d)).size == 4
        assert identity(4) == (1, 2, 3, 4)


class TestReport:
    def test_fields(self):
        r = maximizer_report(P("UUDUDDUD"))
        assert r["m_d"] == 4 and r["bperm"] == [4, 1, 3, 2] and len(r["M_d"]) == 4
        assert set(r) == {"path", "m_d", "bperm", "vperm", "B_d", "partition", "M_d"}

    def test_omitted_beyond_bound(self):
        r = maximizer_report(P("UD" * 5), bound=4)
        assert "M_d" not in r and "M_d_omitted" in r
