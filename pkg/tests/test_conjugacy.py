import itertools

import pytest

from levifusion import (CapabilityError, InputError, build_diagram,
                        canonicalize, class_representatives, elementary_move,
                        is_conjugate, orbit_is_conjugate)
from levifusion.conjugacy import orbit_classes
from levifusion.diagram import levi_type


def all_subsets(d):
    verts = sorted(d.vertices)
    for size in range(len(verts) + 1):
        yield from (frozenset(c) for c in itertools.combinations(verts, size))


def test_elementary_move_examples():
    a3 = build_diagram("A", 3)
    assert elementary_move(a3, {1}, {1, 2, 3}) == {3}
    d5 = build_diagram("D", 5)
    # K = {3,4,5} is the intact fork (a D3 = A3 path 4-3-5): tips swap.
    assert elementary_move(d5, {4}, {3, 4, 5}) == {5}
    # A_1 and even-D components are involution-free.
    d4 = build_diagram("D", 4)
    assert elementary_move(d4, {1, 3}, {1, 2, 3, 4}) == {1, 3}
    with pytest.raises(InputError, match="J must be contained in K"):
        elementary_move(a3, {1}, {2, 3})


def test_is_conjugate_examples():
    a2 = build_diagram("A", 2)
    assert is_conjugate(a2, {1}, {2})
    a3 = build_diagram("A", 3)
    assert not is_conjugate(a3, {1, 3}, {1, 2})     # 2A1 vs A2
    d4 = build_diagram("D", 4)
    assert not is_conjugate(d4, {1, 3}, {3, 4})
    assert not orbit_is_conjugate(d4, {1, 3}, {3, 4})
    assert orbit_is_conjugate(d4, {1, 3}, {1, 3})


def test_equivalence_relation_rank4():
    for d in (build_diagram("A", 4), build_diagram("D", 4)):
        subsets = list(all_subsets(d))
        canon = {J: canonicalize(d, J) for J in subsets}
        for J in subsets:
            assert is_conjugate(d, J, J)
            assert canon[canon[J]] == canon[J]
        for J, K in itertools.combinations(subsets, 2):
            assert is_conjugate(d, J, K) == is_conjugate(d, K, J)
            assert is_conjugate(d, J, K) == (canon[J] == canon[K])


def test_moves_preserve_levi_type():
    d = build_diagram("E", 6)
    for J in all_subsets(d):
        assert levi_type(d, canonicalize(d, J)) == levi_type(d, J)


def test_canonicalize_examples():
    a2 = build_diagram("A", 2)
    assert canonicalize(a2, {2}) == {1}
    d4 = build_diagram("D", 4)
    reps = class_representatives(d4)
    assert frozenset({1, 3}) in reps
    assert frozenset({3, 4}) in reps
    assert len(reps) == 11


def test_class_representatives_match_orbit_oracle_small():
    for fam, rank in (("A", 4), ("D", 4), ("D", 5)):
        d = build_diagram(fam, rank)
        oc = orbit_classes(d)
        move_classes = {}
        for J in all_subsets(d):
            move_classes.setdefault(canonicalize(d, J), set()).add(J)
        orbit_partition = {}
        for J, cid in oc.items():
            orbit_partition.setdefault(cid, set()).add(J)
        assert sorted(map(sorted, (map(sorted, s) for s in move_classes.values()))) \
            == sorted(map(sorted, (map(sorted, s) for s in orbit_partition.values())))


def test_orbit_oracle_guard():
    d = build_diagram("A", 7)
    with pytest.raises(CapabilityError, match="rank"):
        orbit_is_conjugate(d, {1}, {2})
    # The guard is configurable.
    assert orbit_is_conjugate(d, {1}, {2}, max_rank=7)


def test_conjugacy_in_folded_families():
    f4 = build_diagram("F", 4)
    assert is_conjugate(f4, {1, 3}, {1, 4})
    assert is_conjugate(f4, {1, 4}, {2, 4})
    assert canonicalize(f4, {1, 4}) == {1, 3}
    assert not is_conjugate(f4, {1, 2}, {3, 4})    # long A2 vs short A2
    b3 = build_diagram("B", 3)
    assert is_conjugate(b3, {1}, {2})
    assert not is_conjugate(b3, {1}, {3})          # long A1 vs short A1
