"""Types A and D: digraph peeling to a Jordan partition, and partition -> J.

The defining-representation matrix of X = sum_{J1} X_a + sum_{J2} X_{-b} is
the signed adjacency matrix of a digraph: a path on n+1 vertices for A_n, a
chain-diamond-chain on 2n vertices for D_n, with both edges carrying a given
diagram label co-oriented (forward for J1, backward for J2, absent for
unlabeled).  Repeatedly deleting a maximum family of vertex-disjoint longest
directed paths and recording their vertex counts yields the Jordan partition
of X.

The reverse constructions build, for each partition arising this way, a
subset J whose regular Levi class has that Jordan type: consecutive blocks
separated by single omitted vertices, plus (in type D) a fork tail D_q for
partitions [.., 2q-1, 1] with q >= 2.  Very even type-D partitions instead
reduce to the type-A problem on the chain after normalizing the labels near
the fork and dropping the last vertex.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import (LabeledDiagram, build_diagram, flip_labels,
                      labeled_components)
from .errors import (CapabilityError, InputError, InternalConsistencyError,
                     UnsupportedFamilyError)


@dataclass(frozen=True)
class PathDigraph:
    """Digraph on v_1..v_size; arcs are ordered pairs of 1-based indices."""

    size: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.arcs:
            if not (1 <= u <= self.size and 1 <= v <= self.size):
                raise InputError(f"arc ({u},{v}) out of range")


def _labeled_edges(ld: LabeledDiagram):
    """Digraph edges as (tail_if_forward, head_if_forward, diagram label)."""
    n = ld.diagram.rank
    fam = ld.diagram.family
    if fam == "A":
        return [(i, i + 1, i) for i in range(1, n + 1)]
    if fam == "D":
        edges = [(i, i + 1, i) for i in range(1, n - 1)]              # left chain
        edges += [(n - 1, n, n - 1), (n - 1, n + 1, n),               # diamond
                  (n, n + 2, n), (n + 1, n + 2, n - 1)]
        edges += [(n + 1 + k, n + 2 + k, n - 1 - k) for k in range(1, n - 1)]
        return edges
    raise UnsupportedFamilyError(
        f"digraph realizations exist for families A and D, got {fam}")


def build_digraph(ld: LabeledDiagram) -> PathDigraph:
    """Oriented digraph of the labeling; unlabeled vertices give no arcs."""
    size = ld.diagram.rank + 1 if ld.diagram.family == "A" else 2 * ld.diagram.rank
    arcs = set()
    for u, v, label in _labeled_edges(ld):
        if label in ld.plus:
            arcs.add((u, v))
        elif label in ld.minus:
            arcs.add((v, u))
    return PathDigraph(size, frozenset(arcs))


def _check_acyclic(size: int, arcs) -> list[int]:
    """Topological order; the construction cannot create cycles."""
    outs = {v: [] for v in range(1, size + 1)}
    indeg = {v: 0 for v in range(1, size + 1)}
    for u, v in arcs:
        outs[u].append(v)
        indeg[v] += 1
    order = [v for v in range(1, size + 1) if indeg[v] == 0]
    i = 0
    while i < len(order):
        for w in outs[order[i]]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
        i += 1
    if len(order) != size:
        raise InternalConsistencyError("label digraph acquired a cycle")
    return order


def _longest_paths(size: int, arcs) -> tuple[int, list[tuple[int, ...]]]:
    """(length L, all directed paths with L arcs), L maximal."""
    order = _check_acyclic(size, arcs)
    outs = {v: sorted(w for (u, w) in arcs if u == v) for v in range(1, size + 1)}
    ins = {v: sorted(u for (u, w) in arcs if w == v) for v in range(1, size + 1)}
    depth = {}                       # longest path length ending at v
    for v in order:
        depth[v] = max((depth[u] + 1 for u in ins[v]), default=0)
    best = max(depth.values(), default=0)

    paths = []

    def walk(prefix):
        if len(prefix) == best + 1:
            paths.append(tuple(prefix))
            return
        for w in outs[prefix[-1]]:
            if depth[w] == len(prefix):
                prefix.append(w)
                walk(prefix)
                prefix.pop()

    for v in range(1, size + 1):
        if depth[v] == 0 and best >= 0:
            walk([v])
    # Only keep paths of the maximal length (walk built exactly those).
    return best, sorted(paths)


def _max_disjoint_families(paths: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """All maximum-cardinality families of vertex-disjoint paths (as index
    tuples into ``paths``, which is lex-sorted)."""
    n = len(paths)
    vsets = [frozenset(p) for p in paths]
    best: list[tuple[int, ...]] = []
    best_size = 0

    def extend(idx, chosen, used):
        nonlocal best, best_size
        if idx == n:
            if len(chosen) > best_size:
                best, best_size = [chosen], len(chosen)
            elif len(chosen) == best_size:
                best.append(chosen)
            return
        if len(chosen) + (n - idx) < best_size:
            return
        if not (vsets[idx] & used):
            extend(idx + 1, chosen + (idx,), used | vsets[idx])
        extend(idx + 1, chosen, used)
    extend(0, (), frozenset())
    return sorted(best)


def _peel(size: int, arcs: frozenset, branch_choices: bool):
    """Yield partitions; branch over every maximum disjoint family if asked."""
    if size == 0:
        yield ()
        return
    if not arcs:
        yield (1,) * size
        return
    length, paths = _longest_paths(size, arcs)
    families = _max_disjoint_families(paths)
    if not branch_choices:
        families = families[:1]
    for family in families:
        removed = set()
        for i in family:
            removed.update(paths[i])
        rest_arcs = frozenset((u, v) for (u, v) in arcs
                              if u not in removed and v not in removed)
        head = (length + 1,) * len(family)
        for tail in _relabelled_peel(size, removed, rest_arcs, branch_choices):
            yield tuple(sorted(head + tail, reverse=True))


def _relabelled_peel(size, removed, arcs, branch_choices):
    """Peel the digraph on the surviving vertices (identity relabeling)."""
    survivors = size - len(removed)
    if survivors == 0:
        yield ()
        return
    if not arcs:
        yield (1,) * survivors
        return
    # Keep original vertex ids; only the count of survivors matters.
    keep = [v for v in range(1, size + 1) if v not in removed]
    index = {v: i + 1 for i, v in enumerate(keep)}
    sub_arcs = frozenset((index[u], index[v]) for (u, v) in arcs)
    yield from _peel(survivors, sub_arcs, branch_choices)


def peel_partition(g: PathDigraph) -> tuple[int, ...]:
    """Jordan partition by longest-disjoint-path peeling (deterministic)."""
    return next(_peel(g.size, g.arcs, branch_choices=False))


def peel_partition_outcomes(g: PathDigraph) -> set[tuple[int, ...]]:
    """Partitions over every choice of maximum disjoint family at every stage.

    The algorithm promises this is a single partition; tests assert it.
    """
    return set(_peel(g.size, g.arcs, branch_choices=True))


# ---------------------------------------------------------------------------
# Partition validity and partition -> J
# ---------------------------------------------------------------------------

def is_very_even(parts) -> bool:
    return bool(parts) and all(p % 2 == 0 for p in parts)


def check_d_partition(parts) -> None:
    """Enforce the type-D constraint observed by the peeling algorithm:

    either one odd part != 1 has odd multiplicity and 1 has odd multiplicity,
    or every part has even multiplicity.
    """
    mult: dict[int, int] = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    if all(m % 2 == 0 for m in mult.values()):
        return
    odd_parts = sorted(p for p, m in mult.items() if m % 2 == 1)
    if (len(odd_parts) == 2 and odd_parts[0] == 1 and odd_parts[1] % 2 == 1
            and odd_parts[1] != 1):
        return
    raise InputError(
        f"partition {list(parts)} violates the type-D multiplicity rule")


def _blocks_to_vertices(block_sizes) -> set[int]:
    """Consecutive blocks separated by single omitted vertices, leftmost."""
    out = set()
    pos = 1
    for size in block_sizes:
        out.update(range(pos, pos + size))
        pos += size + 1
    return out


def partition_to_J(parts, ld: LabeledDiagram) -> frozenset[int]:
    """A subset J whose regular Levi class has Jordan type ``parts``."""
    parts = tuple(sorted(parts, reverse=True))
    fam = ld.diagram.family
    n = ld.diagram.rank
    if any(p <= 0 for p in parts):
        raise InputError("partition parts must be positive")
    if fam == "A":
        if sum(parts) != n + 1:
            raise InputError(f"partition must sum to {n + 1} for A{n}")
        return frozenset(_blocks_to_vertices([p - 1 for p in parts]))
    if fam == "D":
        if sum(parts) != 2 * n:
            raise InputError(f"partition must sum to {2 * n} for D{n}")
        check_d_partition(parts)
        if is_very_even(parts):
            raise InputError(
                "very even partition: the matrix data cannot pick between the "
                "two orbits; go through very_even_reduce")
        mult: dict[int, int] = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        odd = sorted((p for p, m in mult.items() if m % 2 == 1), reverse=True)
        if odd:                                       # case [.., 2q-1, 1]
            q = (odd[0] + 1) // 2
            mult[odd[0]] -= 1
            mult[1] -= 1
        else:
            q = 0
        pair_sizes = []
        for p, m in sorted(mult.items(), reverse=True):
            assert m % 2 == 0
            pair_sizes.extend([p] * (m // 2))
        J = _blocks_to_vertices([p - 1 for p in pair_sizes])
        if q >= 2:
            J.update(range(n - q + 1, n + 1))
        return frozenset(J)
    raise UnsupportedFamilyError(
        f"partition constructions exist for families A and D, got {fam}")


def regular_partition(d, subset) -> tuple[int, ...]:
    """Jordan type of a regular nilpotent element of the Levi ``subset``.

    Computed combinatorially from the component structure: in type A each
    A_k component contributes one block k+1; in type D an A_k component
    contributes (k+1)^2 and a fork component D_q contributes [2q-1, 1];
    leftover dimensions are 1's.
    """
    from .diagram import classify_subgraph, connected_components

    vs = frozenset(subset)
    fam = d.family
    n = d.rank
    total = n + 1 if fam == "A" else 2 * n
    if fam not in ("A", "D"):
        raise UnsupportedFamilyError(
            f"regular partitions by blocks exist for A and D, got {fam}")
    parts: list[int] = []
    skip: frozenset[int] = frozenset()
    if fam == "D" and {n - 1, n} <= vs and (n - 2) not in vs:
        # Two isolated fork tips span a D_2 = A_1 x A_1 whose root vectors
        # share matrix coordinates: jointly [3, 1], not [2, 2] twice.
        parts.extend([3, 1])
        skip = frozenset({n - 1, n})
    for comp in connected_components(vs - skip,
                                     lambda v: [w for w in d.neighbors(v)
                                                if w in vs]):
        shape = classify_subgraph(d, comp)
        k = len(comp)
        if fam == "A":
            parts.append(k + 1)
        elif shape.family == "D":
            parts.extend([2 * k - 1, 1])
        else:
            parts.extend([k + 1, k + 1])
    parts.extend([1] * (total - sum(parts)))
    return tuple(sorted(parts, reverse=True))


_VERY_EVEN_PATTERNS = {
    ("+", "+", "+", "-"): (False, False),
    ("+", "+", "-", "+"): (False, True),
    ("-", "-", "-", "+"): (True, False),
    ("-", "-", "+", "-"): (True, True),
}


def _very_even_normalize(ld: LabeledDiagram):
    """(normalized ld, flipped, tips swapped) with fork labels (+,+,+,-)."""
    n = ld.diagram.rank
    signs = tuple(ld.sign(v) for v in (n - 3, n - 2, n - 1, n))
    if None in signs:
        raise CapabilityError(
            "very even reduction needs the four fork vertices labeled; "
            "reduce a sparse labeling to its components first")
    if signs not in _VERY_EVEN_PATTERNS:
        raise InternalConsistencyError(
            f"very even partition with fork labels {signs}; only four fully "
            "labeled fork patterns can produce one")
    flipped, swapped = _VERY_EVEN_PATTERNS[signs]
    out = flip_labels(ld) if flipped else ld
    if swapped:
        swap = {v: v for v in ld.diagram.vertices}
        swap[n - 1], swap[n] = n, n - 1
        out = LabeledDiagram(ld.diagram,
                             frozenset(swap[v] for v in out.plus),
                             frozenset(swap[v] for v in out.minus))
    return out, flipped, swapped


def very_even_reduce(ld: LabeledDiagram) -> LabeledDiagram:
    """Reduce a very even type-D labeling to the chain A_{n-1} problem.

    Normalizes the four possible fork labelings to (+,+,+,-) and drops the
    last vertex; vertex ids 1..n-1 are unchanged.
    """
    reduced, _, _ = _very_even_reduce_tracked(ld)
    return reduced


def _very_even_reduce_tracked(ld: LabeledDiagram):
    if ld.diagram.family != "D":
        raise UnsupportedFamilyError("very_even_reduce applies to type D")
    n = ld.diagram.rank
    parts = peel_partition(build_digraph(ld))
    if not is_very_even(parts):
        raise InputError("the labeling does not produce a very even partition")
    assert n % 2 == 0, "very even partitions need even rank"
    norm, flipped, swapped = _very_even_normalize(ld)
    chain = build_diagram("A", n - 1)
    reduced = LabeledDiagram(chain,
                             frozenset(v for v in norm.plus if v < n),
                             frozenset(v for v in norm.minus if v < n))
    return reduced, flipped, swapped


def partition_fuse(ld: LabeledDiagram) -> frozenset[int]:
    """Fusion subset for a type A or D labeling, via the partition pipeline.

    Works component by component (so sparse labelings are fine); very even
    type-D components go through the chain reduction, and the fork-swap
    normalization is transported back so the reported J identifies the
    correct one of the two very even orbits.
    """
    if ld.diagram.family not in ("A", "D"):
        raise UnsupportedFamilyError(
            f"partition_fuse applies to families A and D, got {ld.diagram.family}")
    out: set[int] = set()
    for comp in labeled_components(ld):
        local = comp.local
        fam = local.diagram.family
        if fam == "A":
            local_j = partition_to_J(peel_partition(build_digraph(local)), local)
        elif fam == "D":
            parts = peel_partition(build_digraph(local))
            if is_very_even(parts):
                reduced, _, swapped = _very_even_reduce_tracked(local)
                chain_j = partition_to_J(
                    peel_partition(build_digraph(reduced)), reduced)
                n = local.diagram.rank
                if swapped and (n - 1) in chain_j:
                    local_j = frozenset(chain_j - {n - 1}) | {n}
                else:
                    local_j = frozenset(chain_j)
            else:
                local_j = partition_to_J(parts, local)
        else:
            raise UnsupportedFamilyError(
                f"unexpected component family {fam} inside type "
                f"{ld.diagram.family}")
        out |= comp.map_back(local_j)
    return frozenset(out)
