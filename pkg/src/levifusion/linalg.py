"""Exact integer linear algebra: ranks, matrix powers, rational solves.

Everything here works over Z or Q with arbitrary-precision arithmetic.
No floating point is used anywhere; ranks are exact.
"""
from __future__ import annotations

from fractions import Fraction

IntMatrix = list          # list of rows, each a list of ints


def zeros(n: int, m: int) -> IntMatrix:
    return [[0] * m for _ in range(n)]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Integer matrix product a @ b."""
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k, "inner dimensions differ"
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([sum(x * y for x, y in zip(row, col) if x) for col in bt])
    return out


def is_zero(a: IntMatrix) -> bool:
    return all(all(x == 0 for x in row) for row in a)


def bareiss_rank(a: IntMatrix) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    All intermediate divisions are exact, so the result is the rank over Q.
    """
    m = [row[:] for row in a]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, rows):
            mic = m[i][c]
            row_i, row_r = m[i], m[r]
            # Every row below is rescaled by pivot/prev, even when mic == 0;
            # skipping that breaks the exactness of later divisions.
            for j in range(c + 1, cols):
                num = pivot * row_i[j] - mic * row_r[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division not exact"
                row_i[j] = q
            row_i[c] = 0
        prev = pivot
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def fraction_rank(a: IntMatrix) -> int:
    """Rank by plain Gaussian elimination over Fraction.

    Independent of bareiss_rank; used as its cross-check.
    """
    m = [[Fraction(x) for x in row] for row in a]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        inv = 1 / pr[c]
        m[r] = pr = [x * inv for x in pr]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], pr)]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def rank_sequence(a: IntMatrix, max_power: int | None = None) -> list[int]:
    """[rank(a^0), rank(a^1), ...] until the power vanishes.

    Raises if ``a`` is not nilpotent within ``max_power`` steps
    (default: its dimension).
    """
    n = len(a)
    if max_power is None:
        max_power = n
    ranks = [n]
    p = a
    k = 1
    while True:
        r = bareiss_rank(p)
        ranks.append(r)
        if r == 0:
            return ranks
        if k >= max_power:
            raise ValueError("matrix is not nilpotent")
        p = mat_mul(p, a)
        k += 1


def partition_from_ranks(ranks: list[int]) -> tuple[int, ...]:
    """Jordan partition of a nilpotent matrix from its power-rank sequence.

    Multiplicity of part j is r_{j-1} - 2 r_j + r_{j+1}.
    """
    rs = list(ranks)
    if rs[-1] != 0:
        raise ValueError("rank sequence does not terminate at 0")
    rs.append(0)
    parts: list[int] = []
    for j in range(1, len(rs) - 1):
        mult = rs[j - 1] - 2 * rs[j] + rs[j + 1]
        assert mult >= 0, "rank sequence is not convex"
        parts.extend([j] * mult)
    parts.sort(reverse=True)
    assert sum(parts) == rs[0], "partition does not sum to the dimension"
    return tuple(parts)


def nilpotent_partition(a: IntMatrix) -> tuple[int, ...]:
    """Jordan partition of a nilpotent integer matrix (exact)."""
    return partition_from_ranks(rank_sequence(a))


def solve_fraction(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Solve a x = b for square nonsingular a over Q."""
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]
