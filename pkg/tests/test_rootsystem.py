import itertools
import random

import pytest

from levifusion import UnsupportedFamilyError, build_root_system, structure_constants
from levifusion.linalg import mat_mul
from levifusion.rootsystem import adjoint_algebra


def test_root_counts():
    assert len(build_root_system("A", 2).roots) == 6
    assert len(build_root_system("A", 5).roots) == 30
    assert len(build_root_system("D", 4).roots) == 24
    assert len(build_root_system("E", 6).roots) == 72
    assert len(build_root_system("E", 8).roots) == 240


def test_simply_laced_only():
    from levifusion import build_diagram
    from levifusion.rootsystem import RootSystem
    with pytest.raises(UnsupportedFamilyError):
        RootSystem(build_diagram("B", 3))


def test_reflections_permute_roots():
    rs = build_root_system("D", 4)
    for i in range(4):
        image = {rs.reflect(i, r) for r in rs.roots}
        assert image == set(rs.roots)


def test_constants_antisymmetry_and_negation():
    rs = build_root_system("D", 4)
    for a in rs.roots:
        for b in rs.roots:
            if rs.add(a, b) in rs.root_set:
                n = rs.structure_constant(a, b)
                assert n in (-1, 1)
                assert rs.structure_constant(b, a) == -n
                assert rs.structure_constant(rs.neg(a), rs.neg(b)) == -n


def test_extraspecial_pairs_get_plus_one():
    rs = build_root_system("E", 6)
    for gamma, (alpha, beta) in rs._extraspecial.items():
        assert rs.structure_constant(alpha, beta) == 1


def test_structure_constants_table_object():
    rs = build_root_system("A", 2)
    sc = structure_constants(rs)
    a1, a2 = rs.simple_root(1), rs.simple_root(2)
    assert sc.n(a1, a2) in (-1, 1)
    table = sc.table()
    assert len(table) == 12               # 6 unordered bracketing pairs, signed
    assert all(v in (-1, 1) for v in table.values())


def _ad_of_root(rs, alg, r):
    dim = alg.dim
    m = [[0] * dim for _ in range(dim)]
    nroots = len(alg.basis_roots)
    for j, s in enumerate(alg.basis_roots):
        out = rs.bracket(r, s)
        if out is None:
            continue
        if out[0] == "root":
            m[alg.index[out[1]]][j] += out[2]
        else:
            for i, c in enumerate(out[1]):
                if c:
                    m[nroots + i][j] += c
    for i in range(rs.rank):
        c = -rs.pairing_simple(i, r)
        if c:
            m[alg.index[r]][nroots + i] += c
    return m


def _jacobi_violations(fam, rank, sample=None):
    rs = build_root_system(fam, rank)
    alg = adjoint_algebra(fam, rank)
    dim = alg.dim
    ads = {r: _ad_of_root(rs, alg, r) for r in rs.roots}
    pairs = list(itertools.combinations(rs.roots, 2))
    if sample is not None:
        pairs = random.Random(11).sample(pairs, sample)
    bad = 0
    for a, b in pairs:
        commutator = [[x - y for x, y in zip(r1, r2)]
                      for r1, r2 in zip(mat_mul(ads[a], ads[b]),
                                        mat_mul(ads[b], ads[a]))]
        out = rs.bracket(a, b)
        if out is None:
            expect = [[0] * dim for _ in range(dim)]
        elif out[0] == "root":
            expect = [[out[2] * x for x in row] for row in ads[out[1]]]
        else:
            expect = [[0] * dim for _ in range(dim)]
            for j, s in enumerate(alg.basis_roots):
                expect[j][j] = rs.pairing(out[1], s)
        if commutator != expect:
            bad += 1
    return bad


def test_jacobi_identity_small_types_exhaustive():
    assert _jacobi_violations("A", 2) == 0
    assert _jacobi_violations("A", 3) == 0
    assert _jacobi_violations("D", 4) == 0


def test_jacobi_identity_e6_sampled():
    assert _jacobi_violations("E", 6, sample=120) == 0


def test_sl2_normalization():
    # [X_a, X_{-a}] = h_a and [h_a, X_a] = 2 X_a for every root.
    rs = build_root_system("D", 4)
    for r in rs.roots:
        kind, coords = rs.bracket(r, rs.neg(r))
        assert kind == "cartan" and coords == r
        assert rs.pairing(r, r) == 2
