"""Dynkin diagrams, two-sign labelings, components, chunks, and symmetries.

Vertex numbering follows Bourbaki throughout: A_n is the path 1..n; B_n/C_n
are the path 1..n with a double bond between n-1 and n (short root n for B,
n-1 for C); D_n has the branching vertex n-2 with fork tips n-1 and n
(D_2 is two disconnected vertices, D_3 is the path 2-1-3); E_n is the path
1-3-4-...-n with vertex 2 pendant on 4; F_4 is 1-2=3-4 (short side 3,4);
G_2 is a triple bond with vertex 1 long.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, UnsupportedFamilyError

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_RANK_RULES = {
    "A": (1, None, "rank must be at least 1"),
    "B": (2, None, "rank must be at least 2"),
    "C": (2, None, "rank must be at least 2"),
    "D": (2, None, "rank must be at least 2"),
    "E": (6, 8, "rank must be 6, 7, or 8"),
    "F": (4, 4, "rank must be 4"),
    "G": (2, 2, "rank must be 2"),
}


def _check_family_rank(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; expected one of {''.join(FAMILIES)}")
    lo, hi, msg = _RANK_RULES[family]
    if not isinstance(rank, int) or rank < lo or (hi is not None and rank > hi):
        raise InputError(f"invalid rank {rank} for family {family}: {msg}")


@lru_cache(maxsize=None)
def _edges(family: str, rank: int) -> tuple[tuple[int, int, int, int | None], ...]:
    """Edges as (u, v, multiplicity, short_vertex or None), u < v."""
    n = rank
    if family == "A":
        return tuple((i, i + 1, 1, None) for i in range(1, n))
    if family == "B":
        chain = [(i, i + 1, 1, None) for i in range(1, n - 1)]
        return tuple(chain + [(n - 1, n, 2, n)])
    if family == "C":
        chain = [(i, i + 1, 1, None) for i in range(1, n - 1)]
        return tuple(chain + [(n - 1, n, 2, n - 1)])
    if family == "D":
        if n == 2:
            return ()
        chain = [(i, i + 1, 1, None) for i in range(1, n - 1)]
        return tuple(chain + [(n - 2, n, 1, None)])
    if family == "E":
        chain = [(1, 3, 1, None)] + [(i, i + 1, 1, None) for i in range(3, n)]
        return tuple(chain + [(2, 4, 1, None)])
    if family == "F":
        return ((1, 2, 1, None), (2, 3, 2, 3), (3, 4, 1, None))
    if family == "G":
        # Short/long assignment fixed by the folding tables (vertex 2 short).
        return ((1, 2, 3, 2),)
    raise UnsupportedFamilyError(family)


@dataclass(frozen=True)
class DynkinDiagram:
    """An irreducible Dynkin diagram in Bourbaki numbering."""

    family: str
    rank: int

    def __post_init__(self):
        _check_family_rank(self.family, self.rank)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def is_simply_laced(self) -> bool:
        return self.family in ("A", "D", "E")

    def edges(self) -> tuple[tuple[int, int, int, int | None], ...]:
        return _edges(self.family, self.rank)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return _adjacency(self.family, self.rank)[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def bond(self, u: int, v: int) -> tuple[int, int | None]:
        """(multiplicity, short vertex) of the edge u-v."""
        a, b = min(u, v), max(u, v)
        for eu, ev, mult, short in self.edges():
            if (eu, ev) == (a, b):
                return mult, short
        raise InputError(f"no edge between {u} and {v}")

    @property
    def branching_vertex(self) -> int | None:
        """The unique degree-3 vertex (types D with rank >= 3, and E)."""
        if self.family == "D" and self.rank >= 3:
            return self.rank - 2 if self.rank >= 4 else 1
        if self.family == "E":
            return 4
        return None

    def __repr__(self):
        return f"DynkinDiagram({self.family!r}, {self.rank})"


@lru_cache(maxsize=None)
def _adjacency(family: str, rank: int) -> dict[int, tuple[int, ...]]:
    adj: dict[int, list[int]] = {v: [] for v in range(1, rank + 1)}
    for u, v, _, _ in _edges(family, rank):
        adj[u].append(v)
        adj[v].append(u)
    return {v: tuple(sorted(ns)) for v, ns in adj.items()}


def build_diagram(family: str, rank: int) -> DynkinDiagram:
    """Bourbaki diagram for (family, rank); validates the rank bounds."""
    return DynkinDiagram(family, rank)


@dataclass(frozen=True)
class LabeledDiagram:
    """A diagram plus two disjoint vertex sets: plus (J1) and minus (J2)."""

    diagram: DynkinDiagram
    plus: frozenset[int] = frozenset()
    minus: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "plus", frozenset(self.plus))
        object.__setattr__(self, "minus", frozenset(self.minus))
        verts = set(self.diagram.vertices)
        for v in sorted(self.plus | self.minus):
            if v not in verts:
                raise InputError(f"vertex {v} out of range 1..{self.diagram.rank}")
        overlap = self.plus & self.minus
        if overlap:
            raise InputError(f"labels overlap at vertex {min(overlap)}")

    @property
    def labeled(self) -> frozenset[int]:
        return self.plus | self.minus

    def sign(self, v: int) -> str | None:
        if v in self.plus:
            return "+"
        if v in self.minus:
            return "-"
        return None

    def __repr__(self):
        return (f"LabeledDiagram({self.diagram.family}{self.diagram.rank}, "
                f"+{sorted(self.plus)}, -{sorted(self.minus)})")


def labeled_diagram(family: str, rank: int, plus=(), minus=()) -> LabeledDiagram:
    return LabeledDiagram(build_diagram(family, rank), frozenset(plus), frozenset(minus))


def flip_labels(ld: LabeledDiagram) -> LabeledDiagram:
    """Swap the roles of J1 and J2 (an involution)."""
    return LabeledDiagram(ld.diagram, ld.minus, ld.plus)


def list_automorphisms(d: DynkinDiagram) -> list[dict[int, int]]:
    """All diagram automorphisms, identity first.

    A_1, B, C, E_7, E_8, F_4, G_2: identity only.  A_n (n >= 2) and E_6: the
    order-2 flip.  D_n (n != 4): the fork-tip swap.  D_4: the full S_3 on the
    outer vertices (triality).
    """
    n = d.rank
    ident = {v: v for v in d.vertices}
    fam = d.family
    if fam == "A" and n >= 2:
        return [ident, {v: n + 1 - v for v in d.vertices}]
    if fam == "D":
        if n == 4:
            perms = []
            from itertools import permutations
            for img in permutations((1, 3, 4)):
                p = {2: 2}
                p.update(dict(zip((1, 3, 4), img)))
                perms.append(p)
            perms.sort(key=lambda p: tuple(p[v] for v in d.vertices))
            perms.remove(ident)
            return [ident] + perms
        swap = dict(ident)
        swap[n - 1], swap[n] = n, n - 1
        return [ident, swap]
    if fam == "E" and n == 6:
        return [ident, {1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}]
    return [ident]


def apply_automorphism(ld: LabeledDiagram, sigma: dict[int, int]) -> LabeledDiagram:
    if sigma not in list_automorphisms(ld.diagram):
        raise InputError(f"{sigma} is not a diagram automorphism of "
                         f"{ld.diagram.family}{ld.diagram.rank}")
    return LabeledDiagram(ld.diagram,
                          frozenset(sigma[v] for v in ld.plus),
                          frozenset(sigma[v] for v in ld.minus))


# ---------------------------------------------------------------------------
# Subgraph shape classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Shape:
    """Abstract type of a connected induced subdiagram.

    ``to_local`` renumbers the vertices Bourbaki-style for the classified
    (family, rank); ``branch`` is the original id of the degree-3 vertex
    when there is one.
    """

    family: str
    rank: int
    to_local: tuple[tuple[int, int], ...]
    branch: int | None = None

    @property
    def local_map(self) -> dict[int, int]:
        return dict(self.to_local)

    @property
    def from_local(self) -> dict[int, int]:
        return {loc: orig for orig, loc in self.to_local}

    @property
    def type_name(self) -> str:
        return f"{self.family}{self.rank}"


def _path_order(vertices: set[int], adj: dict[int, list[int]]) -> list[int]:
    """Vertices of a path subgraph in order, lower-id endpoint first."""
    if len(vertices) == 1:
        return list(vertices)
    ends = sorted(v for v in vertices if len(adj[v]) == 1)
    assert len(ends) == 2, "not a path"
    order = [ends[0]]
    prev = None
    while len(order) < len(vertices):
        nxt = [w for w in adj[order[-1]] if w != prev]
        assert len(nxt) == 1
        prev = order[-1]
        order.append(nxt[0])
    return order


def _arms(branch: int, vertices: set[int], adj: dict[int, list[int]]) -> list[list[int]]:
    """Arms out of the branch vertex, each listed from the branch outward."""
    arms = []
    for start in adj[branch]:
        arm = [start]
        prev = branch
        while True:
            nxt = [w for w in adj[arm[-1]] if w != prev]
            if not nxt:
                break
            assert len(nxt) == 1
            prev = arm[-1]
            arm.append(nxt[0])
        arms.append(arm)
    return arms


def classify_subgraph(diagram: DynkinDiagram, vertices) -> Shape:
    """Classify the connected induced subdiagram on ``vertices``.

    A path through a double (triple) bond is typed B/C/F (G); simply-laced
    shapes are typed A, D, or E by the arm profile at the degree-3 vertex.
    A three-vertex subset consisting of the fork of a type-D ambient diagram
    keeps the family tag D (rank 3), since the fork is intact there.
    """
    vs = set(vertices)
    assert vs, "empty subgraph"
    adj = {v: [w for w in diagram.neighbors(v) if w in vs] for v in vs}
    multi = [(u, v, m, s) for (u, v, m, s) in diagram.edges()
             if m > 1 and u in vs and v in vs]

    if multi:
        return _classify_multibond(vs, adj, multi)

    degrees = {v: len(adj[v]) for v in vs}
    branches = [v for v, deg in degrees.items() if deg >= 3]
    if not branches:
        # Path.  Special case: the intact fork {n-2, n-1, n} of a D ambient.
        if (diagram.family == "D" and len(vs) == 3
                and diagram.branching_vertex in vs
                and vs == {diagram.rank - 2, diagram.rank - 1, diagram.rank}
                and diagram.rank >= 3):
            b = diagram.branching_vertex
            tips = sorted(vs - {b})
            return Shape("D", 3, ((b, 1), (tips[0], 2), (tips[1], 3)), branch=b)
        order = _path_order(vs, adj)
        return Shape("A", len(order), tuple((v, i + 1) for i, v in enumerate(order)))

    assert len(branches) == 1 and degrees[branches[0]] == 3, \
        f"unexpected subgraph shape on {sorted(vs)}"
    b = branches[0]
    arms = _arms(b, vs, adj)
    arms.sort(key=lambda a: (len(a), min(a)))
    (a1, a2, a3) = arms
    rank = len(vs)
    if len(a1) == 1 and len(a2) == 1:
        # D shape: a3 is the chain, tips are a1/a2 (smaller id first).
        tips = sorted([a1[0], a2[0]])
        pairs = [(b, rank - 2), (tips[0], rank - 1), (tips[1], rank)]
        for i, v in enumerate(reversed(a3)):           # far end gets local 1
            pairs.append((v, i + 1))
        return Shape("D", rank, tuple(sorted(pairs)), branch=b)
    if len(a1) == 1 and len(a2) == 2 and len(a3) in (2, 3, 4):
        if len(a3) == 2 and len(a2) == 2:
            # E6: pick the arm with the smaller vertex set as the (3, 1) arm.
            a2, a3 = sorted((a2, a3), key=lambda a: sorted(a))
        pairs = [(a1[0], 2), (b, 4), (a2[0], 3), (a2[1], 1)]
        pairs.extend((v, 5 + i) for i, v in enumerate(a3))
        return Shape("E", rank, tuple(sorted(pairs)), branch=b)
    raise UnsupportedFamilyError(
        f"subdiagram on {sorted(vs)} has arm profile "
        f"{tuple(len(a) for a in arms)}, which is not of type A/D/E")


def _classify_multibond(vs, adj, multi) -> Shape:
    assert len(multi) == 1, "more than one multiple bond in a component"
    u, v, mult, short = multi[0]
    if mult == 3:
        assert vs == {u, v}
        long_v = u if short == v else v
        return Shape("G", 2, ((long_v, 1), (short, 2)))
    order = _path_order(vs, adj)
    k = len(order)
    # Position of the double bond along the path.
    pos = next(i for i in range(k - 1) if {order[i], order[i + 1]} == {u, v})
    if pos == k - 2 or pos == 0:
        if pos == 0:
            order.reverse()
            pos = k - 2
        end = order[-1]
        fam = "B" if short == end else "C"
        if k == 2 and short != end:
            order.reverse()
            fam = "B"          # B2 = C2; canonical orientation has short last
        return Shape(fam, k, tuple((w, i + 1) for i, w in enumerate(order)))
    # Interior double bond: F4 only.
    assert k == 4 and pos in (1, 2), "interior double bond in a non-F4 chain"
    if short == order[pos]:
        order.reverse()
    return Shape("F", 4, tuple((w, i + 1) for i, w in enumerate(order)))


# ---------------------------------------------------------------------------
# Labeled components
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LabeledComponent:
    """A connected component of the labeled subdiagram, with its local view."""

    vertices: frozenset[int]
    shape: Shape
    local: LabeledDiagram

    @property
    def from_local(self) -> dict[int, int]:
        return self.shape.from_local

    @property
    def to_local(self) -> dict[int, int]:
        return self.shape.local_map

    def map_back(self, local_vertices) -> frozenset[int]:
        fl = self.from_local
        return frozenset(fl[v] for v in local_vertices)


def connected_components(vertices, neighbors) -> list[frozenset[int]]:
    """Connected components of ``vertices`` under the ``neighbors`` callable."""
    remaining = set(vertices)
    comps = []
    while remaining:
        seed = min(remaining)
        seen = {seed}
        stack = [seed]
        while stack:
            x = stack.pop()
            for y in neighbors(x):
                if y in remaining and y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(frozenset(seen))
        remaining -= seen
    comps.sort(key=min)
    return comps


def labeled_components(ld: LabeledDiagram) -> list[LabeledComponent]:
    """Split the induced subdiagram on J1 u J2 into classified components.

    Unlabeled vertices are dropped; each component carries a local Bourbaki
    renumbering and the embedding back to original vertex ids.
    """
    d = ld.diagram
    labeled = ld.labeled

    def nbrs(v):
        return [w for w in d.neighbors(v) if w in labeled]

    out = []
    for comp in connected_components(labeled, nbrs):
        shape = classify_subgraph(d, comp)
        to_local = shape.local_map
        local = LabeledDiagram(
            build_diagram(shape.family, shape.rank),
            frozenset(to_local[v] for v in ld.plus & comp),
            frozenset(to_local[v] for v in ld.minus & comp))
        out.append(LabeledComponent(comp, shape, local))
    return out


def levi_type(d: DynkinDiagram, subset) -> str:
    """Abstract type of the Levi subset, e.g. 'A2+A1+A1'; '0' when empty."""
    vs = frozenset(subset)
    if not vs:
        return "0"
    comps = connected_components(vs, lambda v: [w for w in d.neighbors(v) if w in vs])
    names = [classify_subgraph(d, c).type_name for c in comps]
    names.sort(key=lambda s: (-int(s[1:]), s))
    return "+".join(names)


# ---------------------------------------------------------------------------
# Chunks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Chunk:
    """A connected component of J1 or of J2 inside an ambient region."""

    vertices: frozenset[int]
    sign: str                    # "+" or "-"
    family: str                  # type of the induced subdiagram: A, D, or E
    rank: int
    flag: str | None = None      # "D3", "Ab", or "Asharp"

    def sort_key(self):
        return tuple(sorted(self.vertices))

    def __repr__(self):
        flag = f", {self.flag}" if self.flag else ""
        return f"Chunk({self.sign}{sorted(self.vertices)}, {self.family}{self.rank}{flag})"


def _chunk_shape(diagram: DynkinDiagram, vertices) -> tuple[str, int]:
    """Structural A/D/E type of a chunk (no ambient D3 re-tagging)."""
    vs = set(vertices)
    adj = {v: [w for w in diagram.neighbors(v) if w in vs] for v in vs}
    branches = [v for v in vs if len(adj[v]) == 3]
    if not branches:
        return "A", len(vs)
    arms = sorted(len(a) for a in _arms(branches[0], vs, adj))
    if arms[0] == 1 and arms[1] == 1:
        return "D", len(vs)
    return "E", len(vs)


def _classify_flag(diagram: DynkinDiagram, region_shape: Shape,
                   chunk_vertices: frozenset[int], fam: str, rank: int) -> str | None:
    """Positional flag of a chunk inside its region.

    D3: in a D-shaped region, the chunk is exactly {branch, both fork tips}.
    Ab: in an E-shaped region, the two terminal vertices of the unique
        longest arm (so only in E7/E8-shaped regions).
    Asharp: in an E-shaped region, a rank-3 A-chunk through the branch, or a
        rank-4 A-chunk through the branch containing its pendant neighbor,
        with the branch interior either way.
    """
    if region_shape.family == "D":
        if fam != "A" or rank != 3:
            return None
        b = region_shape.branch
        fl = region_shape.from_local
        tips = {fl[region_shape.rank - 1], fl[region_shape.rank]}
        if chunk_vertices == tips | {b}:
            return "D3"
        return None
    if region_shape.family == "E":
        if fam != "A":
            return None
        b = region_shape.branch
        fl = region_shape.from_local
        pendant = fl[2]
        if rank == 2:
            if region_shape.rank < 7:
                return None          # E6 has no unique longest arm
            tail = {fl[region_shape.rank - 1], fl[region_shape.rank]}
            if chunk_vertices == tail:
                return "Ab"
            return None
        if rank in (3, 4) and b in chunk_vertices:
            interior = sum(1 for w in diagram.neighbors(b) if w in chunk_vertices) == 2
            if not interior:
                return None
            if rank == 3:
                return "Asharp"
            if pendant in chunk_vertices:
                return "Asharp"
        return None
    return None


def chunks_in_region(ld: LabeledDiagram, region: frozenset[int],
                     region_shape: Shape) -> list[Chunk]:
    """Chunks of the labeled region, classified against the region's shape."""
    d = ld.diagram
    out = []
    for sign, vs in (("+", ld.plus & region), ("-", ld.minus & region)):
        def nbrs(v, _vs=vs):
            return [w for w in d.neighbors(v) if w in _vs]
        for comp in connected_components(vs, nbrs):
            fam, rank = _chunk_shape(d, comp)
            flag = _classify_flag(d, region_shape, comp, fam, rank)
            out.append(Chunk(comp, sign, fam, rank, flag))
    out.sort(key=Chunk.sort_key)
    return out


def chunks(ld: LabeledDiagram) -> list[Chunk]:
    """Chunks of a simply-laced labeled diagram, flags per the full diagram."""
    if not ld.diagram.is_simply_laced:
        raise UnsupportedFamilyError(
            f"chunks require a simply-laced diagram, got {ld.diagram.family}; "
            "unfold first")
    if not ld.labeled:
        return []
    region = frozenset(ld.diagram.vertices)
    shape = classify_subgraph(ld.diagram, region)
    return chunks_in_region(ld, region, shape)


# ---------------------------------------------------------------------------
# JSON interface
# ---------------------------------------------------------------------------

def to_json(ld: LabeledDiagram) -> str:
    return json.dumps({
        "family": ld.diagram.family,
        "rank": ld.diagram.rank,
        "plus": sorted(ld.plus),
        "minus": sorted(ld.minus),
    })


def parse_json(text: str) -> LabeledDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON: {e}") from e
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    missing = {"family", "rank"} - obj.keys()
    if missing:
        raise InputError(f"missing keys: {sorted(missing)}")
    plus = obj.get("plus", [])
    minus = obj.get("minus", [])
    if not all(isinstance(v, int) for v in list(plus) + list(minus)):
        raise InputError("plus/minus must be lists of integers")
    return labeled_diagram(obj["family"], obj["rank"], plus, minus)
