import itertools

import pytest

from levifusion import (InputError, UnsupportedFamilyError, apply_pattern,
                        build_diagram, epattern_fuse, find_pattern,
                        is_conjugate, labeled_diagram, weight_fuse)


def test_find_pattern_kind2_on_e8():
    ld = labeled_diagram("E", 8, plus=[1, 3, 5, 6], minus=[2, 4, 7, 8])
    m = find_pattern(ld)
    assert m.kind == 2
    assert m.removed == 4
    roles = m.role_map
    # The matched A4 path is 1-3-4-2 with both plus vertices first.
    assert {roles["alpha1"], roles["alpha2"]} == {1, 3}
    assert {roles["beta1"], roles["beta2"]} == {4, 2}
    after = apply_pattern(ld, m)
    assert after.sign(4) is None
    assert after.plus == ld.plus


def test_find_pattern_kind5_full_split():
    ld = labeled_diagram("E", 8, plus=[1, 2, 3, 4], minus=[5, 6, 7, 8])
    m = find_pattern(ld)
    assert m.kind == 5 and m.removed == 5 and not m.flipped
    flipped = labeled_diagram("E", 8, plus=[5, 6, 7, 8], minus=[1, 2, 3, 4])
    m = find_pattern(flipped)
    assert m.kind == 5 and m.removed == 5 and m.flipped


def test_find_pattern_kind1():
    ld = labeled_diagram("E", 6, plus=[1, 2, 4, 5, 6], minus=[3])
    m = find_pattern(ld)
    assert m.kind == 1
    assert m.removed == 3


def test_find_pattern_single_sign_is_none():
    assert find_pattern(labeled_diagram("E", 6, plus=range(1, 7))) is None


def test_find_pattern_family_guard():
    with pytest.raises(UnsupportedFamilyError):
        find_pattern(labeled_diagram("A", 4, plus=[1], minus=[2]))


def test_apply_pattern_stale_match():
    ld = labeled_diagram("E", 8, plus=[1, 3, 5, 6], minus=[2, 4, 7, 8])
    m = find_pattern(ld)
    smaller = apply_pattern(ld, m)
    with pytest.raises(InputError, match="stale"):
        apply_pattern(smaller, m)


def test_epattern_fuse_paper_examples():
    ld = labeled_diagram("E", 8, plus=[1, 3, 5, 6], minus=[2, 4, 7, 8])
    assert sorted(epattern_fuse(ld)) == [1, 2, 3, 5, 6, 8]
    ld = labeled_diagram("E", 8, plus=[1, 2, 3, 4], minus=[5, 6, 7, 8])
    assert sorted(epattern_fuse(ld)) == [1, 2, 3, 4, 6, 7, 8]
    assert sorted(epattern_fuse(labeled_diagram("E", 6, plus=range(1, 7)))) \
        == [1, 2, 3, 4, 5, 6]


def test_epattern_fuse_delegates_classical_components():
    # After the kind-2 rewrite the remaining {5,6,7,8} component is an A4.
    ld = labeled_diagram("E", 7, plus=[1, 2, 3, 4], minus=[5, 6, 7])
    j = epattern_fuse(ld)
    assert is_conjugate(ld.diagram, j, weight_fuse(ld))


def test_epattern_strict_covers_all_e6():
    d = build_diagram("E", 6)
    for signs in itertools.product("+-", repeat=6):
        plus = frozenset(i + 1 for i, s in enumerate(signs) if s == "+")
        ld = labeled_diagram("E", 6, plus=plus,
                             minus=frozenset(range(1, 7)) - plus)
        epattern_fuse(ld, relaxed=False)   # must not raise a detection gap


def test_epattern_fuse_simply_laced_guard():
    with pytest.raises(UnsupportedFamilyError):
        epattern_fuse(labeled_diagram("F", 4, plus=[1], minus=[2]))


def test_pattern_step_removes_exactly_one_label():
    ld = labeled_diagram("E", 8, plus=[1, 3, 4, 7], minus=[2, 5, 6, 8])
    m = find_pattern(ld)
    after = apply_pattern(ld, m)
    assert len(after.labeled) == len(ld.labeled) - 1
