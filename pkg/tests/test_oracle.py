import json
import os

import pytest

from levifusion import (InputError, ad_matrix, ad_rank_signature,
                        build_root_system, classical_matrix, jordan_partition,
                        labeled_diagram, signature_fuse, signature_table)
from levifusion.linalg import rank_sequence, zeros
from levifusion.oracle import ad_jordan_partition
from levifusion.rootsystem import regular_levi_ad_signature


def test_classical_matrix_type_a_entries():
    ld = labeled_diagram("A", 3, plus=[1, 3], minus=[2])
    m = classical_matrix(ld)
    expect = zeros(4, 4)
    expect[0][1] = 1      # E_{1,2}
    expect[2][3] = 1      # E_{3,4}
    expect[2][1] = 1      # E_{3,2}
    assert m == expect
    assert jordan_partition(m) == (2, 2)


def test_classical_matrix_type_d_entry_pairs():
    ld = labeled_diagram("D", 6, plus=[3, 4, 5], minus=[1, 2, 6])
    m = classical_matrix(ld)
    entries = sum(abs(x) for row in m for x in row)
    assert entries == 12                      # six labels, two entries each
    assert len(m) == 12
    assert jordan_partition(m) == (4, 4, 2, 2)


def test_classical_matrix_a1():
    m = classical_matrix(labeled_diagram("A", 1, plus=[1]))
    assert m == [[0, 1], [0, 0]]


def test_jordan_partition_examples():
    ld = labeled_diagram("A", 11, plus=[1, 4, 5, 8],
                         minus=[2, 3, 6, 7, 9, 10, 11])
    assert jordan_partition(classical_matrix(ld)) == (4, 3, 3, 1, 1)
    assert jordan_partition(zeros(5, 5)) == (1, 1, 1, 1, 1)
    with pytest.raises(InputError, match="not nilpotent"):
        jordan_partition([[1, 0], [0, 1]])


def test_ad_matrix_sl2():
    ld = labeled_diagram("A", 1, plus=[1])
    m = ad_matrix(ld)
    assert len(m) == 3
    assert jordan_partition(m) == (3,)


def test_ad_zero_when_unlabeled():
    ld = labeled_diagram("A", 2)
    assert ad_rank_signature(ld) == (8, 0)
    m = ad_matrix(ld)
    assert all(all(x == 0 for x in row) for row in m)


def test_regular_full_plus_kernels():
    for fam, rank in (("A", 3), ("D", 4), ("E", 6)):
        ld = labeled_diagram(fam, rank, plus=range(1, rank + 1))
        sig = ad_rank_signature(ld)
        assert sig[0] - sig[1] == rank        # regular centralizer dimension


def test_signature_routes_agree():
    rs = build_root_system("D", 4)
    for j in ((), (1,), (1, 3), (3, 4), (1, 2, 3), (1, 2, 3, 4)):
        ld = labeled_diagram("D", 4, plus=j)
        graded = ad_rank_signature(ld)
        dense = tuple(rank_sequence(ad_matrix(ld)))
        sl2 = regular_levi_ad_signature(rs, j)
        assert graded == dense == sl2


def test_ad_jordan_partition_mixed_signs():
    ld = labeled_diagram("D", 4, plus=[1, 3], minus=[2, 4])
    graded = ad_rank_signature(ld)
    dense = tuple(rank_sequence(ad_matrix(ld)))
    assert graded == dense
    assert sum(ad_jordan_partition(ld)) == 28


def test_signature_fuse_e8_paper_examples():
    m = signature_fuse(labeled_diagram("E", 8, plus=[1, 2, 3, 4],
                                       minus=[5, 6, 7, 8]))
    assert not m.ambiguous
    assert sorted(m.j) == [1, 2, 3, 4, 6, 7, 8]
    m = signature_fuse(labeled_diagram("E", 8, plus=[1, 3, 5, 6],
                                       minus=[2, 4, 7, 8]))
    assert sorted(m.j) == [1, 2, 3, 5, 6, 8]


def test_signature_fuse_regular():
    m = signature_fuse(labeled_diagram("E", 6, plus=range(1, 7)))
    assert sorted(m.j) == [1, 2, 3, 4, 5, 6]


def test_signature_table_cached_to_disk():
    from levifusion import build_diagram
    d = build_diagram("E", 6)
    table = signature_table(d)
    cache = os.environ["FUSION_CACHE_DIR"]
    files = [f for f in os.listdir(cache) if f.startswith("signatures_E6")]
    assert files
    data = json.loads(open(os.path.join(cache, files[0])).read())
    assert data["convention"]
    assert len(data["entries"]) == len(table)
    # A second call must reproduce the same table from the cache file.
    assert signature_table(d) == table
