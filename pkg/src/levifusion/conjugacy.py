"""Weyl-conjugacy of simple-root subsets.

Two subsets J, J' are equivalent when some Weyl element maps one set of
simple roots onto the other; equivalently, when the standard Levi subgroups
L_J and L_{J'} are conjugate.  The decision procedure closes J under
elementary moves tau_K: for a parabolic subset K containing (the relevant
part of) J, the longest element of W_K acts on the simple roots of K by
the diagram involution of each component of K (reversal for A_m, fork-tip
swap for odd D_m, the E6 flip, identity otherwise), realizing L-conjugacy.

These moves generate the full equivalence: a chain of such subsets exists
whenever two standard Levis are conjugate.  Completeness is cross-validated
at small rank against an independent oracle that walks the W-orbit of the
root set itself under simple reflections.
"""
from __future__ import annotations

from functools import lru_cache

from .diagram import (DynkinDiagram, Shape, classify_subgraph,
                      connected_components, levi_type)
from .errors import CapabilityError, InputError, InternalConsistencyError, \
    UnsupportedFamilyError
from .rootsystem import build_root_system

ORBIT_ORACLE_MAX_RANK = 6


def _component_involution(shape: Shape) -> dict[int, int]:
    """The diagram involution induced by -w0 of one connected parabolic."""
    fam, rank = shape.family, shape.rank
    fl = shape.from_local
    ident = {v: v for v in fl.values()}
    if fam == "A" and rank >= 2:
        return {fl[i]: fl[rank + 1 - i] for i in range(1, rank + 1)}
    if fam == "D" and rank % 2 == 1:
        out = dict(ident)
        out[fl[rank - 1]], out[fl[rank]] = fl[rank], fl[rank - 1]
        return out
    if fam == "E" and rank == 6:
        flip = {1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}
        return {fl[i]: fl[flip[i]] for i in range(1, 7)}
    return ident


def elementary_move(d: DynkinDiagram, J, K) -> frozenset[int]:
    """tau_K(J): apply the longest-element involution of W_K to J <= K."""
    J = frozenset(J)
    K = frozenset(K)
    verts = set(d.vertices)
    if not J <= K:
        raise InputError("J must be contained in K")
    if not K <= verts:
        raise InputError("K must consist of diagram vertices")
    out = set()
    for comp in connected_components(K, lambda v: [w for w in d.neighbors(v) if w in K]):
        inv = _component_involution(classify_subgraph(d, comp))
        out.update(inv[v] for v in J & comp)
    return frozenset(out)


@lru_cache(maxsize=None)
def _connected_subsets(family: str, rank: int) -> tuple[frozenset[int], ...]:
    """All connected vertex subsets of the diagram (BFS growth with dedupe)."""
    d = DynkinDiagram(family, rank)
    found = {frozenset([v]) for v in d.vertices}
    frontier = list(found)
    while frontier:
        nxt = []
        for s in frontier:
            for v in s:
                for w in d.neighbors(v):
                    if w not in s:
                        grown = s | {w}
                        if grown not in found:
                            found.add(grown)
                            nxt.append(grown)
        frontier = nxt
    return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))


@lru_cache(maxsize=None)
def _local_moves(family: str, rank: int):
    """(K, neighborhood-of-K, involution) for each connected subset K.

    tau_K extends to any J with J & K nonempty and J \\ K disjoint from K's
    neighborhood: K together with the untouched components of J forms a
    legal parabolic superset, on which the longest element fixes J \\ K
    setwise and applies the involution on J & K.
    """
    d = DynkinDiagram(family, rank)
    out = []
    for K in _connected_subsets(family, rank):
        inv = _component_involution(classify_subgraph(d, K))
        if all(inv[v] == v for v in K):
            continue
        closed = set(K)
        for v in K:
            closed.update(d.neighbors(v))
        out.append((K, frozenset(closed), inv))
    return tuple(out)


_closure_cache: dict = {}
_canonical_cache: dict = {}


def _closure(d: DynkinDiagram, J: frozenset[int]) -> frozenset[frozenset[int]]:
    key = (d.family, d.rank, J)
    cached = _closure_cache.get(key)
    if cached is not None:
        return cached
    moves = _local_moves(d.family, d.rank)
    start_type = levi_type(d, J)
    seen = {J}
    stack = [J]
    while stack:
        cur = stack.pop()
        for K, closed, inv in moves:
            touched = cur & K
            if not touched:
                continue
            if any(v in closed for v in cur - K):
                continue
            new = (cur - K) | {inv[v] for v in touched}
            if new not in seen:
                if levi_type(d, new) != start_type:
                    raise InternalConsistencyError(
                        "elementary move changed the abstract Levi type")
                seen.add(new)
                stack.append(new)
    closure = frozenset(seen)
    for member in closure:
        _closure_cache[(d.family, d.rank, member)] = closure
    return closure


def is_conjugate(d: DynkinDiagram, J, J2) -> bool:
    """Whether w . J = J2 for some Weyl group element w."""
    J = frozenset(J)
    J2 = frozenset(J2)
    if len(J) != len(J2):
        return False
    return J2 in _closure(d, J)


def canonicalize(d: DynkinDiagram, J) -> frozenset[int]:
    """Lexicographically least member of the conjugacy class of J."""
    J = frozenset(J)
    key = (d.family, d.rank, J)
    cached = _canonical_cache.get(key)
    if cached is not None:
        return cached
    best = min(_closure(d, J), key=lambda s: tuple(sorted(s)))
    for member in _closure(d, J):
        _canonical_cache[(d.family, d.rank, member)] = best
    return best


def class_representatives(d: DynkinDiagram) -> list[frozenset[int]]:
    """One canonical member per conjugacy class of subsets of the vertices."""
    from itertools import combinations

    reps = []
    seen = set()
    verts = sorted(d.vertices)
    for size in range(len(verts) + 1):
        for combo in combinations(verts, size):
            J = frozenset(combo)
            if J in seen:
                continue
            cls = _closure(d, J)
            seen.update(cls)
            reps.append(canonicalize(d, J))
    reps.sort(key=lambda s: (len(s), sorted(s)))
    return reps


# ---------------------------------------------------------------------------
# Independent oracle: walk the W-orbit of the root set itself
# ---------------------------------------------------------------------------

def _canon_root(r):
    for x in r:
        if x > 0:
            return r
        if x < 0:
            return tuple(-y for y in r)
    return r


def _orbit_states(d: DynkinDiagram, J, max_rank: int):
    if not d.is_simply_laced:
        raise UnsupportedFamilyError("the root-orbit oracle is simply-laced only")
    if d.rank > max_rank:
        raise CapabilityError(
            f"root-orbit oracle limited to rank <= {max_rank} (got {d.rank})")
    rs = build_root_system(d.family, d.rank)
    start = frozenset(_canon_root(rs.simple_root(v)) for v in J)
    seen = {start}
    stack = [start]
    while stack:
        state = stack.pop()
        for i in range(d.rank):
            new = frozenset(_canon_root(rs.reflect(i, r)) for r in state)
            if new not in seen:
                seen.add(new)
                stack.append(new)
    return seen


def orbit_is_conjugate(d: DynkinDiagram, J, J2,
                       max_rank: int = ORBIT_ORACLE_MAX_RANK) -> bool:
    """Brute-force conjugacy: is the root set of J2 in the W-orbit of J's?

    States are root sets normalized sign-per-element; this quotient is sound
    because a Levi subsystem is determined by its roots up to sign.
    """
    J = frozenset(J)
    J2 = frozenset(J2)
    if len(J) != len(J2):
        return False
    if J == J2:
        return True
    rs = build_root_system(d.family, d.rank)
    target = frozenset(_canon_root(rs.simple_root(v)) for v in J2)
    return target in _orbit_states(d, J, max_rank)


def orbit_classes(d: DynkinDiagram,
                  max_rank: int = ORBIT_ORACLE_MAX_RANK) -> dict[frozenset[int], int]:
    """Class index of every subset of vertices, via the root-orbit oracle."""
    from itertools import combinations

    rs = build_root_system(d.family, d.rank)
    simple = {v: _canon_root(rs.simple_root(v)) for v in d.vertices}
    assigned: dict[frozenset[int], int] = {}
    next_id = 0
    verts = sorted(d.vertices)
    for size in range(len(verts) + 1):
        for combo in combinations(verts, size):
            J = frozenset(combo)
            if J in assigned:
                continue
            states = _orbit_states(d, J, max_rank)
            state_sets = set(states)
            for other in combinations(verts, size):
                K = frozenset(other)
                if frozenset(simple[v] for v in K) in state_sets:
                    assigned[K] = next_id
            assert assigned.get(J) == next_id
            next_id += 1
    return assigned
