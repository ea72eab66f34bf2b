"""The weight algorithm: chunk weights, selections, and the fusion recursion.

Each pass works on one connected component of the still-labeled subdiagram:
chunks get weights (A_n: n+1; D_n: 2n-1; the fork chunk D_3: 5; E: infinite;
the positional flags Ab/Asharp keep the plain A-weights), the heaviest
chunks form candidate selections (maximum sets of pairwise non-adjacent
dominant chunks), a five-step priority cascade narrows the candidates, the
survivor's vertices join the output, the labels of vertices adjacent to it
are erased, and the remaining labeled components recurse.

Ties surviving the cascade are broken lexicographically for determinism, and
every routine exposes the full tie set so choice independence can be tested
by exhaustive branching.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import (Chunk, LabeledDiagram, Shape, chunks_in_region,
                      classify_subgraph, connected_components)
from .errors import InputError, UnsupportedFamilyError

INFINITY = float("inf")


def chunk_weight(c: Chunk, ambient_family: str):
    """Weight of a chunk; the flag can only raise the bare type-A weight."""
    if ambient_family not in ("A", "D", "E"):
        raise UnsupportedFamilyError(
            f"chunk weights are defined for simply-laced ambients, got {ambient_family}")
    if c.flag == "D3":
        return 5
    if c.family == "E":
        return INFINITY
    if c.family == "D":
        return 2 * c.rank - 1
    return c.rank + 1


@dataclass(frozen=True)
class Selection:
    """A set of pairwise non-adjacent dominant chunks."""

    chunks: tuple[Chunk, ...]

    def sort_key(self):
        return tuple(c.sort_key() for c in self.chunks)

    def vertices(self) -> frozenset[int]:
        out = set()
        for c in self.chunks:
            out |= c.vertices
        return frozenset(out)

    def __repr__(self):
        return f"Selection({list(self.chunks)})"


def _selection(chunks_iter) -> Selection:
    return Selection(tuple(sorted(chunks_iter, key=Chunk.sort_key)))


def _chunks_adjacent(d, a: Chunk, b: Chunk) -> bool:
    return any(w in b.vertices for v in a.vertices for w in d.neighbors(v))


def _max_independent_selections(d, dominant: list[Chunk]) -> list[Selection]:
    """All maximum-cardinality sets of pairwise non-adjacent chunks."""
    n = len(dominant)
    conflict = [[_chunks_adjacent(d, dominant[i], dominant[j])
                 for j in range(n)] for i in range(n)]
    best: list[tuple[int, ...]] = []
    best_size = 0

    def extend(idx: int, chosen: tuple[int, ...]):
        nonlocal best, best_size
        if idx == n:
            if len(chosen) > best_size:
                best, best_size = [chosen], len(chosen)
            elif len(chosen) == best_size:
                best.append(chosen)
            return
        if len(chosen) + (n - idx) < best_size:
            return
        extend(idx + 1, chosen)
        if all(not conflict[i][idx] for i in chosen):
            extend(idx + 1, chosen + (idx,))
    extend(0, ())
    sels = [_selection(dominant[i] for i in combo) for combo in best]
    sels.sort(key=Selection.sort_key)
    return sels


def _region_chunks(ld: LabeledDiagram, region: frozenset[int],
                   shape: Shape) -> list[Chunk]:
    if shape.family not in ("A", "D", "E"):
        raise UnsupportedFamilyError(
            f"the weight algorithm needs a simply-laced region, got {shape.family}")
    return chunks_in_region(ld, region, shape)


def _extra_vertices(ld: LabeledDiagram, region: frozenset[int], shape: Shape,
                    sel: Selection) -> frozenset[int]:
    """Vertices outside the selection whose only neighbor is a selected branch."""
    branch = shape.branch
    if branch is None:
        return frozenset()
    selected = sel.vertices()
    if branch not in selected:
        return frozenset()
    d = ld.diagram
    out = set()
    for v in region - selected:
        nbrs = [w for w in d.neighbors(v) if w in region]
        if nbrs == [branch]:
            out.add(v)
    return frozenset(out)


def _refine(ld: LabeledDiagram, region: frozenset[int], shape: Shape,
            candidates: list[Selection]) -> list[Selection]:
    """Steps 2-5 of the cascade; a filter that empties the pool is skipped."""
    pool = sorted(candidates, key=Selection.sort_key)

    def apply(pred):
        nonlocal pool
        if len(pool) <= 1:
            return
        kept = [s for s in pool if pred(s)]
        if kept:
            pool = kept

    def n_type_a(sel):
        return sum(1 for c in sel.chunks if c.family == "A" and c.flag != "D3")

    max_a = max((n_type_a(s) for s in pool), default=0)
    apply(lambda s: n_type_a(s) == max_a)                               # Step 2
    apply(lambda s: not _extra_vertices(ld, region, shape, s))          # Step 3
    apply(lambda s: any(c.flag == "Asharp" for c in s.chunks))          # Step 4
    apply(lambda s: all(c.flag != "Ab" for c in s.chunks))              # Step 5
    return pool


def _whole_diagram_regions(ld: LabeledDiagram):
    """(region, shape) pairs for the full diagram (one, except for D_2)."""
    d = ld.diagram
    out = []
    for region in connected_components(set(d.vertices), d.neighbors):
        out.append((region, classify_subgraph(d, region)))
    return out


def max_selections(ld: LabeledDiagram) -> list[Selection]:
    """Step 1 on the whole labeled subdiagram: maximal dominant selections."""
    if not ld.labeled:
        raise InputError("no labeled vertices")
    weighted = []
    for region, shape in _whole_diagram_regions(ld):
        for c in _region_chunks(ld, region, shape):
            weighted.append((c, chunk_weight(c, shape.family)))
    top = max(w for _, w in weighted)
    dominant = [c for c, w in weighted if w == top]
    return _max_independent_selections(ld.diagram, dominant)


def refine_selection(ld: LabeledDiagram, candidates: list[Selection]):
    """Steps 2-6: returns (deterministic representative, full tie set)."""
    if not candidates:
        raise InputError("no candidate selections")
    pool = sorted(candidates, key=Selection.sort_key)
    for region, shape in _whole_diagram_regions(ld):
        if ld.labeled & region:
            pool = _refine(ld, region, shape, pool)
    return pool[0], pool


def _component_pass(ld: LabeledDiagram, comp: frozenset[int]) -> list[Selection]:
    """One Step 1-6 pass on a labeled component; returns the final tie set."""
    shape = classify_subgraph(ld.diagram, comp)
    all_chunks = _region_chunks(ld, comp, shape)
    weights = [chunk_weight(c, shape.family) for c in all_chunks]
    top = max(weights)
    dominant = [c for c, w in zip(all_chunks, weights) if w == top]
    selections = _max_independent_selections(ld.diagram, dominant)
    return _refine(ld, comp, shape, selections)


def _fuse_labels(ld: LabeledDiagram, plus: frozenset[int], minus: frozenset[int],
                 branch_ties: bool):
    """Yield fusion outputs for the given label sets (DFS over tie choices)."""
    labeled = plus | minus
    if not labeled:
        yield frozenset()
        return
    d = ld.diagram
    comps = connected_components(labeled,
                                 lambda v: [w for w in d.neighbors(v) if w in labeled])

    def component_outcomes(comp: frozenset[int]):
        sub = LabeledDiagram(d, plus & comp, minus & comp)
        tied = _component_pass(sub, comp)
        if not branch_ties:
            tied = tied[:1]
        for sel in tied:
            chosen = sel.vertices()
            removed = {v for v in comp - chosen
                       if any(w in chosen for w in d.neighbors(v))}
            rest_plus = (plus & comp) - chosen - removed
            rest_minus = (minus & comp) - chosen - removed
            for sub_j in _fuse_labels(ld, rest_plus, rest_minus, branch_ties):
                yield chosen | sub_j

    def product(idx: int):
        if idx == len(comps):
            yield frozenset()
            return
        for head in component_outcomes(comps[idx]):
            for rest in product(idx + 1):
                yield head | rest

    yield from product(0)


def _require_simply_laced(ld: LabeledDiagram):
    if not ld.diagram.is_simply_laced:
        raise UnsupportedFamilyError(
            f"the weight algorithm is simply-laced only, got family "
            f"{ld.diagram.family}; unfold first")


def weight_fuse(ld: LabeledDiagram) -> frozenset[int]:
    """Fusion subset J computed with the deterministic tie-break."""
    _require_simply_laced(ld)
    return next(_fuse_labels(ld, ld.plus, ld.minus, branch_ties=False))


def weight_fuse_outcomes(ld: LabeledDiagram):
    """All fusion outputs over every tie choice at every recursion level.

    Yields frozensets in a deterministic DFS order (the first one equals
    weight_fuse); duplicates are possible, callers dedupe as needed.
    """
    _require_simply_laced(ld)
    yield from _fuse_labels(ld, ld.plus, ld.minus, branch_ties=True)
