"""Non-simply-laced fusion by folding.

Every B/C/F/G diagram is the orbit diagram of a simply-laced cover under a
diagram automorphism: A_{2n-1} -> C_n, A_{2n} -> B_n, D_{n+1} -> B_n,
E_6 -> F_4, D_4 -> G_2.  Labels lift to orbit preimages (so the lifted sets
are automorphism-stable), fusion runs upstairs, and any automorphism-stable
output folds back through the orbit projection.  Some tie choice of the
weight algorithm always lands on a stable output; finding none would
falsify that and raises loudly.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import conjugacy
from .diagram import LabeledDiagram, build_diagram
from .errors import InputError, InternalConsistencyError, StabilityError, \
    UnsupportedFamilyError
from .weight import weight_fuse_outcomes


@dataclass(frozen=True)
class Folding:
    """Orbit data of one folding: target vertex -> cover orbit."""

    target_family: str
    target_rank: int
    cover_family: str
    cover_rank: int
    orbits: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def name(self) -> str:
        return (f"{self.cover_family}{self.cover_rank}->"
                f"{self.target_family}{self.target_rank}")

    @property
    def orbit_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.orbits)

    def project(self, cover_vertex: int) -> int:
        for target, orbit in self.orbits:
            if cover_vertex in orbit:
                return target
        raise InputError(f"vertex {cover_vertex} missing from the orbit table")


def foldings_for(family: str, rank: int) -> list[Folding]:
    """Available foldings onto (family, rank); the default cover comes first."""
    n = rank
    if family == "C":
        orbits = tuple((i, (i, 2 * n - i)) for i in range(1, n)) + ((n, (n,)),)
        return [Folding("C", n, "A", 2 * n - 1, orbits)]
    if family == "B":
        d_orbits = tuple((i, (i,)) for i in range(1, n)) + ((n, (n, n + 1)),)
        a_orbits = tuple((i, (i, 2 * n + 1 - i)) for i in range(1, n + 1))
        return [Folding("B", n, "D", n + 1, d_orbits),
                Folding("B", n, "A", 2 * n, a_orbits)]
    if family == "F":
        return [Folding("F", 4, "E", 6,
                        ((1, (2,)), (2, (4,)), (3, (3, 5)), (4, (1, 6))))]
    if family == "G":
        return [Folding("G", 2, "D", 4, ((1, (2,)), (2, (1, 3, 4))))]
    raise UnsupportedFamilyError(
        f"folding applies to families B, C, F, G; got {family}")


def _pick_folding(family: str, rank: int, cover: str | None) -> Folding:
    options = foldings_for(family, rank)
    if cover is None:
        return options[0]
    for f in options:
        if f.cover_family == cover:
            return f
    raise InputError(
        f"no {cover}-type cover for {family}{rank}; available: "
        f"{[f.cover_family + str(f.cover_rank) for f in options]}")


def unfold(ld: LabeledDiagram, cover: str | None = None):
    """(cover labeling with orbit-preimage labels, the folding used)."""
    fold = _pick_folding(ld.diagram.family, ld.diagram.rank, cover)
    omap = fold.orbit_map
    lift = lambda vs: frozenset(w for v in vs for w in omap[v])
    cover_ld = LabeledDiagram(build_diagram(fold.cover_family, fold.cover_rank),
                              lift(ld.plus), lift(ld.minus))
    return cover_ld, fold


def fold_back(j_cover, fold: Folding) -> frozenset[int]:
    """Project an automorphism-stable cover subset down to the target."""
    j_cover = frozenset(j_cover)
    covered = set()
    out = set()
    for target, orbit in fold.orbits:
        hit = j_cover & set(orbit)
        if not hit:
            continue
        if len(hit) != len(orbit):
            raise StabilityError(
                f"{sorted(j_cover)} is not a union of {fold.name} orbits "
                f"(orbit {orbit} is only partially covered)")
        out.add(target)
        covered |= hit
    if covered != set(j_cover):
        raise InputError(f"vertices {sorted(set(j_cover) - covered)} missing "
                         "from the orbit table")
    return frozenset(out)


def _is_stable(j, fold: Folding) -> bool:
    return all(not (j & set(orbit)) or j >= set(orbit)
               for _, orbit in fold.orbits)


def fold_fuse(ld: LabeledDiagram, cover: str | None = None) -> frozenset[int]:
    """Fusion subset for a B/C/F/G labeling: unfold, fuse, fold back.

    Walks the weight algorithm's tie choices depth-first until an
    automorphism-stable output appears, folds it down, and returns the
    canonical member of its target conjugacy class (deterministic and
    independent of which stable output was hit first).
    """
    cover_ld, fold = unfold(ld, cover)
    for j in weight_fuse_outcomes(cover_ld):
        if _is_stable(j, fold):
            projected = fold_back(j, fold)
            return conjugacy.canonicalize(ld.diagram, projected)
    raise InternalConsistencyError(
        f"no tie choice gave a {fold.name}-stable output for "
        f"+{sorted(ld.plus)} -{sorted(ld.minus)}; this should be impossible")
