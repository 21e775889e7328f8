"""Uniqueness scores, the color law, and span folding."""

import pytest
from hypothesis import given, settings, strategies as st

from nway.scoring import (
    DEFAULT_SCALE,
    ColorScale,
    Hue,
    color,
    highlight,
    score,
)
from nway.solutions import SolutionSet, solution_set_from_texts
from nway.units import UnitMode

from .oracles import oracle_color_level, oracle_scores

texts_strategy = st.lists(
    st.text(alphabet="abcd", max_size=12), min_size=1, max_size=4
)


def vectors(texts, mode=UnitMode.CHAR):
    return score(solution_set_from_texts(texts), mode).per_solution


class TestScoreExamples:
    def test_identical_solutions_score_zero(self):
        assert vectors(["abc", "abc", "abc"]) == ((0,) * 3,) * 3

    def test_two_alike_one_apart(self):
        assert vectors(["ab", "ab", "xy"]) == ((1, 1), (1, 1), (2, 2))

    def test_single_char_substitution(self):
        assert vectors(["abc", "abd", "abc"]) == (
            (0, 0, 1),
            (0, 0, 2),
            (0, 0, 1),
        )

    def test_single_solution_scores_zero(self):
        assert vectors(["anything"]) == ((0,) * 8,)

    def test_empty_solution_set_rejected(self):
        with pytest.raises(ValueError):
            SolutionSet(solutions=())

    def test_token_mode_scores_whole_tokens(self):
        per = vectors(["x = max(lst)", "x = max(vals)"], UnitMode.TOKEN)
        assert per[0] == (0, 0, 0, 0, 0, 0, 1, 0)
        assert per[1] == (0, 0, 0, 0, 0, 0, 1, 0)


class TestScoreProperties:
    @settings(max_examples=200)
    @given(texts=texts_strategy)
    def test_matches_brute_force_oracle(self, texts):
        expected = tuple(tuple(v) for v in oracle_scores(texts))
        assert vectors(texts) == expected

    @given(texts=texts_strategy)
    def test_scores_stay_in_range(self, texts):
        n = len(texts)
        for vector in vectors(texts):
            assert all(0 <= value <= n - 1 for value in vector)

    @given(texts=texts_strategy, seed=st.integers(0, 2**32 - 1))
    def test_permutation_equivariance(self, texts, seed):
        import random

        order = list(range(len(texts)))
        random.Random(seed).shuffle(order)
        original = vectors(texts)
        permuted = vectors([texts[i] for i in order])
        for new_position, old_position in enumerate(order):
            assert permuted[new_position] == original[old_position]

    def test_disjoint_solutions_score_maximum(self):
        per = vectors(["aa", "bb", "cc", "dd"])
        assert per == ((3, 3),) * 4


class TestColorLaw:
    def test_exact_levels_at_five(self):
        assert color(0, 5) == (0, 0, 0)
        assert color(1, 5) == (0, 0, 159)
        assert color(2, 5) == (0, 0, 191)
        assert color(3, 5) == (0, 0, 223)
        assert color(4, 5) == (0, 0, 255)

    def test_generalized_midpoint(self):
        assert color(1, 3) == (0, 0, 191)

    def test_hue_selects_the_channel(self):
        assert color(1, 2, ColorScale(hue=Hue.RED)) == (255, 0, 0)
        assert color(1, 2, ColorScale(hue=Hue.GREEN)) == (0, 255, 0)
        assert color(1, 2, ColorScale(hue=Hue.BLUE)) == (0, 0, 255)

    def test_single_solution_only_score_zero(self):
        assert color(0, 1) == (0, 0, 0)
        with pytest.raises(ValueError):
            color(1, 1)

    def test_out_of_range_scores_rejected(self):
        with pytest.raises(ValueError):
            color(-1, 5)
        with pytest.raises(ValueError):
            color(5, 5)
        with pytest.raises(ValueError):
            color(0, 0)

    @given(n=st.integers(2, 128))
    def test_strictly_monotone_reaching_ceiling(self, n):
        levels = [color(s, n)[2] for s in range(1, n)]
        assert levels[0] >= DEFAULT_SCALE.floor + 1
        assert all(x < y for x, y in zip(levels, levels[1:]))
        assert levels[-1] == DEFAULT_SCALE.ceiling

    @given(n=st.integers(2, 64), s=st.integers(0, 63))
    def test_matches_fraction_oracle(self, n, s):
        if s <= n - 1:
            assert color(s, n) == oracle_color_level(s, n)

    def test_scale_shape_is_validated(self):
        with pytest.raises(ValueError):
            ColorScale(floor=100, span=100, ceiling=255)


class TestHighlight:
    def test_single_black_span_for_identical_solutions(self):
        docs = highlight(solution_set_from_texts(["abc", "abc"]))
        for doc in docs:
            assert len(doc.spans) == 1
            span = doc.spans[0]
            assert (span.text, span.score, span.color) == ("abc", 0, (0, 0, 0))

    def test_fully_unique_solutions_glow_at_maximum(self):
        docs = highlight(solution_set_from_texts(["x", "y", "z"]))
        for doc in docs:
            assert len(doc.spans) == 1
            assert doc.spans[0].score == 2
            assert doc.spans[0].color == (0, 0, 255)

    def test_spans_concatenate_to_the_text(self):
        texts = ["print(1)\n", "print(2)\n", "echo 3\n"]
        docs = highlight(solution_set_from_texts(texts))
        for text, doc in zip(texts, docs):
            assert doc.text() == text

    def test_adjacent_spans_have_different_scores(self):
        texts = ["abcxyz", "abcxyz", "abc123", "hello!"]
        for doc in highlight(solution_set_from_texts(texts)):
            scores = [span.score for span in doc.spans]
            assert all(x != y for x, y in zip(scores, scores[1:]))

    def test_span_colors_follow_the_law(self):
        texts = ["abcd", "abxd", "ab"]
        scale = ColorScale(hue=Hue.GREEN)
        for doc in highlight(solution_set_from_texts(texts), scale=scale):
            for span in doc.spans:
                assert span.color == color(span.score, len(texts), scale)

    def test_hue_applies_to_all_documents(self):
        docs = highlight(
            solution_set_from_texts(["q", "r"]), scale=ColorScale(hue=Hue.RED)
        )
        assert docs[0].spans[0].color == (255, 0, 0)

    @given(texts=texts_strategy)
    def test_highlight_agrees_with_score(self, texts):
        solution_set = solution_set_from_texts(texts)
        per = score(solution_set).per_solution
        docs = highlight(solution_set)
        for vector, doc in zip(per, docs):
            unrolled = []
            for span in doc.spans:
                unrolled.extend([span.score] * len(span.text))
            assert unrolled == list(vector)
