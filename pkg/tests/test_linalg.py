import random

import pytest

from levifusion.linalg import (bareiss_rank, fraction_rank, identity, mat_mul,
                               nilpotent_partition, partition_from_ranks,
                               rank_sequence, solve_fraction, zeros)
from fractions import Fraction


def test_bareiss_matches_fraction_elimination_on_random_matrices():
    rng = random.Random(7)
    for trial in range(400):
        n = rng.randint(1, 9)
        m = rng.randint(1, 9)
        a = [[rng.randint(-20, 20) for _ in range(m)] for _ in range(n)]
        if trial % 4 == 0 and n > 1:
            a[-1] = [3 * x for x in a[0]]          # force rank deficiency
        assert bareiss_rank(a) == fraction_rank(a)


def test_rank_of_structured_matrices():
    assert bareiss_rank(identity(5)) == 5
    assert bareiss_rank(zeros(4, 6)) == 0
    assert bareiss_rank([[2, 4], [1, 2]]) == 1
    assert bareiss_rank([]) == 0


def test_mat_mul():
    a = [[1, 2], [3, 4]]
    b = [[0, 1], [1, 0]]
    assert mat_mul(a, b) == [[2, 1], [4, 3]]
    assert mat_mul(a, identity(2)) == a


def test_rank_sequence_and_partition():
    # One nilpotent Jordan block of size 3 plus one of size 1.
    n = zeros(4, 4)
    n[0][1] = 1
    n[1][2] = 1
    assert rank_sequence(n) == [4, 2, 1, 0]
    assert partition_from_ranks([4, 2, 1, 0]) == (3, 1)
    assert nilpotent_partition(n) == (3, 1)
    assert nilpotent_partition(zeros(3, 3)) == (1, 1, 1)


def test_rank_sequence_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        rank_sequence(identity(3))


def test_partition_from_ranks_validates():
    with pytest.raises(ValueError):
        partition_from_ranks([4, 2, 1])      # does not end at 0


def test_solve_fraction():
    a = [[Fraction(2), Fraction(-1)], [Fraction(-1), Fraction(2)]]
    x = solve_fraction(a, [Fraction(2), Fraction(2)])
    assert x == [Fraction(2), Fraction(2)]
