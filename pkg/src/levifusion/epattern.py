"""Type-E fusion by local pattern rewriting.

Five local configurations each license erasing one label (conjugating X into
a smaller Levi): an opposite-sign A2 pair, an A4 path split (+,+,-,-), an A6
path split (+,+,+,-,-,-), an E6-shaped split with the minus arm free at its
end, and the one genuinely global E8 half-half split.  All are closed under
swapping the two signs, and embeddings are searched in every orientation, so
diagram symmetries come for free.  A two-sign E component always matches
some pattern; classical components delegate to the partition pipeline and
single-sign components are already fused.

The E6 pattern's hypothesis that nothing attaches at the far minus-arm
vertex is enforced literally by default; ``relaxed=True`` also accepts
plus-labeled attachments there, which is the reading the detection argument
itself appears to use.  The exhaustive oracle comparison adjudicates.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import LabeledDiagram, labeled_components
from .errors import DetectionGapError, InputError, UnsupportedFamilyError
from .partition import partition_fuse


@dataclass(frozen=True)
class PatternMatch:
    kind: int
    roles: tuple[tuple[str, int], ...]   # role name -> vertex id
    flipped: bool                        # True when signs were swapped to match
    removed: int                         # vertex whose label the rewrite erases

    @property
    def role_map(self) -> dict[str, int]:
        return dict(self.roles)


def _paths_of_length(d, m: int) -> list[tuple[int, ...]]:
    """All ordered induced paths on m vertices (both directions listed)."""
    out = []

    def grow(path):
        if len(path) == m:
            out.append(tuple(path))
            return
        for w in d.neighbors(path[-1]):
            if w not in path:
                path.append(w)
                grow(path)
                path.pop()

    for v in d.vertices:
        grow([v])
    return sorted(out)


def _externals(d, subset) -> dict[int, list[int]]:
    """Outside vertices adjacent to the subset -> their attachment points."""
    sub = set(subset)
    out: dict[int, list[int]] = {}
    for v in sub:
        for w in d.neighbors(v):
            if w not in sub:
                out.setdefault(w, []).append(v)
    return out


def _sides(ld: LabeledDiagram, flipped: bool):
    return (ld.minus, ld.plus) if flipped else (ld.plus, ld.minus)


def _match_path_pattern(ld: LabeledDiagram, kind: int, n_plus: int,
                        removed_pos: int) -> PatternMatch | None:
    """Patterns 1-3: a path with a plus prefix and minus suffix, every
    external attachment plus-labeled; erases the first minus vertex."""
    d = ld.diagram
    m = 2 * n_plus
    for flipped in (False, True):
        j1, j2 = _sides(ld, flipped)
        for path in _paths_of_length(d, m):
            if not all(v in j1 for v in path[:n_plus]):
                continue
            if not all(v in j2 for v in path[n_plus:]):
                continue
            if not all(w in j1 for w in _externals(d, path)):
                continue
            names = [f"alpha{i + 1}" for i in range(n_plus)] + \
                    [f"beta{i + 1}" for i in range(n_plus)]
            if n_plus == 1:
                names = ["alpha", "beta"]
            return PatternMatch(kind, tuple(zip(names, path)), flipped,
                                removed=path[removed_pos])
    return None


def _e6_embeddings(d) -> list[dict[str, int]]:
    """Role maps of every E6-shaped induced subdiagram.

    Roles: beta1-beta3-alpha1-alpha2-alpha3 is the long path, beta2 pendant
    on alpha1 (the branch).  Both arm assignments are returned.
    """
    if d.family != "E":
        return []
    out = []
    b, p = 4, 2
    arm_a = (3, 1)
    arm_b = (5, 6)
    for (near1, far1), (near2, far2) in ((arm_a, arm_b), (arm_b, arm_a)):
        out.append({"beta1": far1, "beta3": near1, "alpha1": b,
                    "alpha2": near2, "alpha3": far2, "beta2": p})
    return out


def _match_e6_pattern(ld: LabeledDiagram, relaxed: bool) -> PatternMatch | None:
    d = ld.diagram
    for flipped in (False, True):
        j1, j2 = _sides(ld, flipped)
        for roles in _e6_embeddings(d):
            verts = set(roles.values())
            if not all(roles[r] in j1 for r in ("alpha1", "alpha2", "alpha3")):
                continue
            if not all(roles[r] in j2 for r in ("beta1", "beta2", "beta3")):
                continue
            ext = _externals(d, verts)
            if not all(w in j1 for w in ext):
                continue
            if not relaxed and any(roles["beta1"] in at for at in ext.values()):
                continue
            return PatternMatch(4, tuple(sorted(roles.items())), flipped,
                                removed=roles["beta2"])
    return None


def _match_e8_split(ld: LabeledDiagram) -> PatternMatch | None:
    if ld.diagram.family != "E" or ld.diagram.rank != 8:
        return None
    half1 = frozenset({1, 2, 3, 4})
    half2 = frozenset({5, 6, 7, 8})
    for flipped in (False, True):
        j1, j2 = _sides(ld, flipped)
        if j1 == half1 and j2 == half2:
            roles = tuple((f"alpha{v}", v) for v in range(1, 9))
            return PatternMatch(5, roles, flipped, removed=5)
    return None


def find_pattern(ld: LabeledDiagram, relaxed: bool = False) -> PatternMatch | None:
    """First matching local pattern of an E-type labeled diagram.

    Search order (1), (2), (3), (5), (4); embeddings are tried in both path
    directions and both sign assignments, which covers the flip and diagram
    automorphism symmetries.  Returns None when only one sign is present.
    """
    if ld.diagram.family != "E":
        raise UnsupportedFamilyError(
            f"pattern search applies to type E, got {ld.diagram.family}")
    if not ld.plus or not ld.minus:
        return None
    for kind, n_plus, removed_pos in ((1, 1, 1), (2, 2, 2), (3, 3, 3)):
        m = _match_path_pattern(ld, kind, n_plus, removed_pos)
        if m is not None:
            return m
    m = _match_e8_split(ld)
    if m is not None:
        return m
    return _match_e6_pattern(ld, relaxed)


def apply_pattern(ld: LabeledDiagram, m: PatternMatch) -> LabeledDiagram:
    """Erase the matched vertex's label; everything else is unchanged."""
    v = m.removed
    if ld.sign(v) is None:
        raise InputError(f"stale pattern match: vertex {v} carries no label")
    return LabeledDiagram(ld.diagram, ld.plus - {v}, ld.minus - {v})


def epattern_fuse(ld: LabeledDiagram, relaxed: bool = False) -> frozenset[int]:
    """Fusion subset by pattern rewriting; classical parts use partitions.

    Accepts any simply-laced labeling: single-sign components contribute all
    their vertices, A/D components go through partition_fuse, E components
    erase one label per step and recurse.
    """
    if not ld.diagram.is_simply_laced:
        raise UnsupportedFamilyError(
            f"epattern_fuse is simply-laced only, got {ld.diagram.family}")
    out: set[int] = set()
    for comp in labeled_components(ld):
        local = comp.local
        if not local.plus or not local.minus:
            out |= comp.vertices
            continue
        fam = local.diagram.family
        if fam in ("A", "D"):
            out |= comp.map_back(partition_fuse(local))
            continue
        if fam != "E":
            raise UnsupportedFamilyError(
                f"unexpected component family {fam} in a simply-laced diagram")
        match = find_pattern(local, relaxed)
        if match is None:
            raise DetectionGapError(
                f"no local pattern matches the two-sign E{local.diagram.rank} "
                f"component +{sorted(local.plus)} -{sorted(local.minus)}",
                labeled=local)
        smaller = apply_pattern(local, match)
        out |= comp.map_back(epattern_fuse(smaller, relaxed))
    return frozenset(out)
