from math import log2

import numpy as np
import pytest

from graphentropy.seqentropy import (
    best_integer_fill,
    fill_entropy,
    grouped_entropy,
    majorizes,
    optimal_fill,
    padded_entropy,
    shannon_entropy,
    two_level_fill_entropy,
)


class TestShannonEntropy:
    def test_uniform(self):
        assert shannon_entropy([1, 1, 1, 1]) == pytest.approx(2.0, abs=1e-12)

    def test_scale_invariance(self):
        assert shannon_entropy([5, 5]) == pytest.approx(1.0, abs=1e-12)
        assert shannon_entropy([0.3, 0.3]) == pytest.approx(1.0, abs=1e-12)

    def test_quarter_three_quarters(self):
        # oracle: -(1/4)log2(1/4) - (3/4)log2(3/4), evaluated at 40 digits
        assert shannon_entropy([1, 3]) == pytest.approx(0.8112781244591328, abs=1e-12)

    def test_singleton_is_zero(self):
        assert shannon_entropy([7.0]) == 0.0

    def test_rejects_empty_and_nonpositive(self):
        with pytest.raises(ValueError):
            shannon_entropy([])
        with pytest.raises(ValueError):
            shannon_entropy([1.0, 0.0])
        with pytest.raises(ValueError):
            shannon_entropy([1.0, -2.0])

    def test_grouped_matches_expanded(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            vals = rng.uniform(0.2, 9.0, rng.integers(1, 6))
            mult = rng.integers(1, 5, vals.size)
            expanded = np.repeat(vals, mult)
            assert grouped_entropy(vals, mult) == pytest.approx(
                shannon_entropy(expanded), abs=1e-12
            )


class TestMajorizes:
    def test_basic(self):
        assert majorizes([3, 1], [2, 2])
        assert majorizes([2, 2], [2, 2])
        assert not majorizes([3, 2], [2, 2])  # sums differ
        assert not majorizes([2, 2], [3, 1])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            majorizes([1, 2], [1, 2, 3])


class TestOptimalFill:
    def test_constant_sequence(self):
        sol = optimal_fill([2, 2, 2])
        assert sol.fill_value == pytest.approx(2.0, abs=1e-12)
        assert sol.residual == pytest.approx(0.0, abs=1e-12)

    def test_unit_weights(self):
        assert optimal_fill([1, 1]).fill_value == pytest.approx(1.0, abs=1e-12)

    def test_two_eight(self):
        # 2^((2*1 + 8*3)/10) = 2^2.6, at 40 digits
        sol = optimal_fill([2, 8])
        assert sol.fill_value == pytest.approx(6.062866266041592, abs=1e-9)
        assert sol.residual == pytest.approx(2 - 10 / sol.fill_value, abs=1e-12)
        assert sol.residual < 2

    def test_fill_count_carried(self):
        assert optimal_fill([2, 8], fill_count=3).fill_count == 3
        with pytest.raises(ValueError):
            optimal_fill([2, 8], fill_count=-1)


class TestPaddedEntropy:
    def test_uniform_fill_hits_log(self):
        assert padded_entropy([2, 2], 5) == pytest.approx(log2(5), abs=1e-12)

    def test_two_eight_to_ten(self):
        # oracle value of log2(10 - r), also equal to the direct padded entropy
        assert padded_entropy([2, 8], 10) == pytest.approx(3.2704369789979518, abs=1e-12)

    def test_seven_term_residual(self):
        # r computed at 40 digits; stays above 0.17
        sol = optimal_fill([3, 4, 4, 5, 5, 6, 6])
        assert sol.residual == pytest.approx(0.17013436544968126, abs=1e-12)
        assert sol.residual > 0.17

    def test_rejects_short_target(self):
        with pytest.raises(ValueError):
            padded_entropy([1, 2, 3], 2)


class TestBestIntegerFill:
    def test_integer_optimum(self):
        assert best_integer_fill([4, 4], 2) == 4

    def test_two_eight(self):
        # brute force: H at fill 6 = 2.217021885879718 beats fill 7 = 2.2137300728639821
        assert best_integer_fill([2, 8], 3) == 6
        assert fill_entropy([2, 8], 6, 3) == pytest.approx(2.217021885879718, abs=1e-12)
        assert fill_entropy([2, 8], 7, 3) == pytest.approx(2.2137300728639821, abs=1e-12)

    def test_fifteen_fills(self):
        # brute force: fill 3 gives 4.310522787779625 > fill 4 gives 4.307009421281389
        assert best_integer_fill([2, 3, 3, 4, 4], 15) == 3

    def test_requires_weights_above_one(self):
        with pytest.raises(ValueError):
            best_integer_fill([1, 4, 4], 2)


class TestTwoLevelFill:
    def test_endpoints(self):
        assert two_level_fill_entropy(0, 2, 1) == pytest.approx(1.0, abs=1e-12)
        assert two_level_fill_entropy(2, 2, 1) == pytest.approx(1.0, abs=1e-12)

    def test_midpoint_strictly_convex(self):
        mid = two_level_fill_entropy(2, 4, 2)
        avg = 0.5 * (two_level_fill_entropy(1, 4, 2) + two_level_fill_entropy(3, 4, 2))
        assert mid < avg

    def test_domain(self):
        with pytest.raises(ValueError):
            two_level_fill_entropy(-0.5, 2, 1)
        with pytest.raises(ValueError):
            two_level_fill_entropy(3, 2, 1)
        with pytest.raises(ValueError):
            two_level_fill_entropy(1, 2, 0.5)
