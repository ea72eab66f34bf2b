"""Root systems in simple-root coordinates, with an integral Chevalley basis.

Roots are integer coefficient vectors over the simple roots; for the
simply-laced families the symmetrized Cartan matrix is the Gram matrix, so
all pairings are integers and every computation here is exact.

Structure-constant signs follow the extraspecial-pair convention: positive
roots are totally ordered by (height, coordinates); for each non-simple
positive root the minimal decomposition gets constant +1, and every other
constant is propagated from a sign cocycle rescaled to that normalization.
The resulting basis satisfies N(a,b) = -N(b,a), N(-a,-b) = -N(a,b),
|N| = 1, and [X_a, X_{-a}] = h_a.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagram import DynkinDiagram, build_diagram
from .errors import InternalConsistencyError, UnsupportedFamilyError
from .linalg import solve_fraction

Root = tuple  # integer coordinates over the simple roots

_EXPECTED_COUNTS = {"A": lambda n: n * (n + 1), "D": lambda n: 2 * n * (n - 1),
                    "E": lambda n: {6: 72, 7: 126, 8: 240}[n]}


class RootSystem:
    """All roots of a simply-laced diagram, plus Chevalley-basis data."""

    def __init__(self, diagram: DynkinDiagram):
        if not diagram.is_simply_laced:
            raise UnsupportedFamilyError(
                f"root system construction requires a simply-laced family, "
                f"got {diagram.family}")
        self.diagram = diagram
        n = diagram.rank
        self.rank = n
        self.cartan = tuple(
            tuple(2 if i == j else (-1 if diagram.adjacent(i + 1, j + 1) else 0)
                  for j in range(n))
            for i in range(n))
        self.positive_roots = self._generate_positive()
        self.roots = self.positive_roots + tuple(
            tuple(-x for x in r) for r in self.positive_roots)
        self.root_set = frozenset(self.roots)
        expected = _EXPECTED_COUNTS[diagram.family](n)
        if len(self.roots) != expected:
            raise InternalConsistencyError(
                f"generated {len(self.roots)} roots for "
                f"{diagram.family}{n}, expected {expected}")
        self._order = {r: i for i, r in enumerate(self.positive_roots)}
        self._extraspecial = self._build_extraspecial()
        self._n_memo: dict[tuple[Root, Root], int] = {}

    # -- root combinatorics -------------------------------------------------

    def _generate_positive(self) -> tuple[Root, ...]:
        n = self.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(n):
                    if self.pairing_simple(i, r) == -1:
                        cand = tuple(
                            x + (1 if j == i else 0) for j, x in enumerate(r))
                        if cand not in found:
                            found.add(cand)
                            nxt.append(cand)
            frontier = nxt
        return tuple(sorted(found, key=lambda r: (sum(r), r)))

    def simple_root(self, v: int) -> Root:
        """Coordinate vector of the simple root for diagram vertex v (1-based)."""
        return tuple(1 if j == v - 1 else 0 for j in range(self.rank))

    def pairing_simple(self, i: int, r: Root) -> int:
        """(alpha_{i+1}, r) for the 0-based simple index i."""
        return sum(self.cartan[i][j] * r[j] for j in range(self.rank) if r[j])

    def pairing(self, a: Root, b: Root) -> int:
        return sum(a[i] * self.pairing_simple(i, b) for i in range(self.rank) if a[i])

    def reflect(self, i: int, r: Root) -> Root:
        """Simple reflection s_{i+1} applied to r (0-based simple index)."""
        c = self.pairing_simple(i, r)
        if not c:
            return r
        out = list(r)
        out[i] -= c
        return tuple(out)

    def is_root(self, r) -> bool:
        return tuple(r) in self.root_set

    @staticmethod
    def height(r: Root) -> int:
        return sum(r)

    @staticmethod
    def is_positive(r: Root) -> bool:
        return sum(r) > 0

    def add(self, a: Root, b: Root) -> Root:
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a: Root) -> Root:
        return tuple(-x for x in a)

    # -- Chevalley structure constants --------------------------------------

    def _build_extraspecial(self) -> dict[Root, tuple[Root, Root]]:
        """gamma -> its extraspecial pair: the decomposition gamma = a + b
        into positive roots with a minimal in the (height, lex) order."""
        out = {}
        for r in self.positive_roots:
            if sum(r) == 1:
                continue
            alpha = next(a for a in self.positive_roots
                         if sum(a) < sum(r)
                         and tuple(x - y for x, y in zip(r, a)) in self.root_set)
            beta = tuple(x - y for x, y in zip(r, alpha))
            out[r] = (alpha, beta)
        return out

    def structure_constant(self, a: Root, b: Root) -> int:
        """N(a, b) for roots with a + b a root; valued in {-1, +1}.

        Extraspecial pairs get +1; everything else follows from the standard
        identities N(a,b) = -N(b,a) = -N(-a,-b), the three-cycle identity for
        a+b+c = 0, and the four-term identity for quadruples summing to zero
        (with the length corrections trivial in the simply-laced case).
        """
        s = self.add(a, b)
        if s not in self.root_set:
            raise ValueError("sum of the two roots is not a root")
        return self._n(a, b)

    def _n(self, a: Root, b: Root) -> int:
        memo = self._n_memo
        got = memo.get((a, b))
        if got is not None:
            return got
        val = self._n_compute(a, b)
        memo[(a, b)] = val
        memo[(b, a)] = -val
        return val

    def _n_compute(self, a: Root, b: Root) -> int:
        a_pos = sum(a) > 0
        b_pos = sum(b) > 0
        if not a_pos and not b_pos:
            return -self._n(self.neg(a), self.neg(b))
        if a_pos != b_pos:
            if not a_pos:
                return -self._n(b, a)
            s = self.add(a, b)
            if sum(s) > 0:
                # a + b + (-s) = 0, so N(a,b) = N(b,-s) = -N(-b,s).
                return -self._n(self.neg(b), s)
            return -self._n(self.neg(a), self.neg(b))
        # Both positive.
        gamma = self.add(a, b)
        alpha, beta = self._extraspecial[gamma]
        if (a, b) == (alpha, beta):
            return 1
        if (a, b) == (beta, alpha):
            return -1
        if self._order[a] > self._order[b]:
            return -self._n(b, a)
        # Quadruple identity on (alpha, beta, -a, -b), no two opposite:
        #   N(alpha,beta) N(-a,-b) + N(beta,-a) N(alpha,-b)
        #                          + N(-a,alpha) N(beta,-b) = 0.
        na, nb = self.neg(a), self.neg(b)
        total = 0
        if self.add(beta, na) in self.root_set:
            total += self._n(beta, na) * self._n(alpha, nb)
        if self.add(na, alpha) in self.root_set:
            total += self._n(na, alpha) * self._n(beta, nb)
        assert total in (-1, 1), "special-pair recursion lost unimodularity"
        return total

    def bracket(self, a: Root, b: Root):
        """[X_a, X_b] in the Chevalley basis.

        Returns ("root", r, n) for n X_r, ("cartan", a) for h_a (coroot
        coordinates equal root coordinates here), or None for zero.
        """
        if all(x == -y for x, y in zip(a, b)):
            return ("cartan", a)
        s = self.add(a, b)
        if s in self.root_set:
            return ("root", s, self.structure_constant(a, b))
        return None


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    return RootSystem(build_diagram(family, rank))


@dataclass(frozen=True)
class StructureConstants:
    """Table view of N(a, b) over pairs whose sum is a root."""

    system: RootSystem

    def n(self, a: Root, b: Root) -> int:
        return self.system.structure_constant(a, b)

    def table(self) -> dict[tuple[Root, Root], int]:
        rs = self.system
        out = {}
        for a in rs.roots:
            for b in rs.roots:
                if rs.add(a, b) in rs.root_set:
                    out[(a, b)] = rs.structure_constant(a, b)
        return out


def structure_constants(rs: RootSystem) -> StructureConstants:
    return StructureConstants(rs)


# ---------------------------------------------------------------------------
# The adjoint representation of X = sum_{J1} X_a + sum_{J2} X_{-b}
# ---------------------------------------------------------------------------

class AdjointAlgebra:
    """Chevalley-basis adjoint action helpers for one root system.

    Basis order: all roots (positive then negative, each height-then-lex
    sorted), then the Cartan generators h_1..h_n.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.basis_roots = list(rs.roots)
        self.dim = len(self.basis_roots) + rs.rank
        self.index = {r: i for i, r in enumerate(self.basis_roots)}

    def _x_columns(self, plus, minus):
        """Sparse columns of ad(X): column j -> list of (row, coeff)."""
        rs = self.rs
        terms = [rs.simple_root(v) for v in sorted(plus)]
        terms += [rs.neg(rs.simple_root(v)) for v in sorted(minus)]
        nroots = len(self.basis_roots)
        cols: list[list[tuple[int, int]]] = [[] for _ in range(self.dim)]
        for j, r in enumerate(self.basis_roots):
            for t in terms:
                out = rs.bracket(t, r)
                if out is None:
                    continue
                if out[0] == "root":
                    cols[j].append((self.index[out[1]], out[2]))
                else:
                    # [X_t, X_{-t}] = h_t: coroot coordinates of t.
                    for i, coeff in enumerate(out[1]):
                        if coeff:
                            cols[j].append((nroots + i, coeff))
        for i in range(rs.rank):
            # [X, h_i] = -(alpha_i, t) X_t summed over the terms of X.
            col = cols[nroots + i]
            for t in terms:
                coeff = -rs.pairing_simple(i, t)
                if coeff:
                    col.append((self.index[t], coeff))
        return cols

    def ad_matrix(self, plus, minus):
        """Dense integer matrix of ad(X) on the Chevalley basis."""
        cols = self._x_columns(plus, minus)
        m = [[0] * self.dim for _ in range(self.dim)]
        for j, col in enumerate(cols):
            for i, coeff in col:
                m[i][j] += coeff
        return m

    def _degrees(self, plus, minus):
        """Grading with deg = +1 on J1 roots and -1 on J2 roots.

        ad(X) is homogeneous of degree +1, which lets every power rank be
        computed block by block.
        """
        plus = set(plus)
        minus = set(minus)
        degs = []
        for r in self.basis_roots:
            d = 0
            for i, coeff in enumerate(r):
                if not coeff:
                    continue
                if (i + 1) in plus:
                    d += coeff
                elif (i + 1) in minus:
                    d -= coeff
            degs.append(d)
        degs.extend([0] * self.rs.rank)
        return degs

    def ad_rank_signature(self, plus, minus) -> tuple[int, ...]:
        """[rank(M^0), rank(M^1), ..., 0] for M = ad(X), computed exactly."""
        from .linalg import bareiss_rank, mat_mul

        if not plus and not minus:
            return (self.dim, 0)
        cols = self._x_columns(plus, minus)
        degs = self._degrees(plus, minus)
        by_deg: dict[int, list[int]] = {}
        for idx, d in enumerate(degs):
            by_deg.setdefault(d, []).append(idx)
        pos_in_deg = {idx: k for d, idxs in by_deg.items()
                      for k, idx in enumerate(idxs)}
        # One block per degree: M_d maps the degree-d piece into degree d+1.
        blocks: dict[int, list[list[int]]] = {}
        for d, idxs in by_deg.items():
            rows = by_deg.get(d + 1, [])
            m = [[0] * len(idxs) for _ in rows]
            for jj, idx in enumerate(idxs):
                for i, coeff in cols[idx]:
                    assert degs[i] == d + 1, "ad(X) is not degree-homogeneous"
                    m[pos_in_deg[i]][jj] += coeff
            if m and m[0]:
                blocks[d] = m

        ranks = [self.dim]
        power = {d: m for d, m in blocks.items() if any(any(row) for row in m)}
        k = 1
        while power:
            ranks.append(sum(bareiss_rank(m) for m in power.values()))
            if ranks[-1] == 0:
                break
            if k > self.dim:
                raise InternalConsistencyError("ad(X) is not nilpotent")
            nxt = {}
            for d, m in power.items():
                step = blocks.get(d + k)
                if step is None:
                    continue
                prod = mat_mul(step, m)
                if any(any(row) for row in prod):
                    nxt[d] = prod
            power = nxt
            k += 1
        if ranks[-1] != 0:
            ranks.append(0)
        return tuple(ranks)


@lru_cache(maxsize=None)
def adjoint_algebra(family: str, rank: int) -> AdjointAlgebra:
    return AdjointAlgebra(build_root_system(family, rank))


def regular_levi_ad_signature(rs: RootSystem, subset) -> tuple[int, ...]:
    """ad-rank signature of a regular nilpotent element of the Levi ``subset``.

    Computed from sl2 weight multiplicities: the semisimple element h of the
    triple through X_J = sum_{j in J} X_j satisfies (alpha_j, h) = 2 on J, and
    each irreducible sl2 summand of the adjoint representation contributes one
    Jordan block of its dimension.  Independent of the power-rank route.
    """
    J = sorted(subset)
    dim = len(rs.roots) + rs.rank
    if not J:
        return (dim, 0)
    aj = [[Fraction(rs.cartan[i - 1][j - 1]) for j in J] for i in J]
    c = solve_fraction(aj, [Fraction(2)] * len(J))
    mult: dict[int, int] = {0: rs.rank}
    for r in rs.roots:
        w = sum(cj * rs.pairing_simple(j - 1, r) for cj, j in zip(c, J))
        if w.denominator != 1:
            raise InternalConsistencyError("non-integral sl2 weight")
        w = int(w)
        mult[w] = mult.get(w, 0) + 1
    parts: list[int] = []
    for w in range(max(mult), -1, -1):
        n_irr = mult.get(w, 0) - mult.get(w + 2, 0)
        if n_irr < 0:
            raise InternalConsistencyError("sl2 weight multiplicities not unimodal")
        parts.extend([w + 1] * n_irr)
    if sum(parts) != dim:
        raise InternalConsistencyError("sl2 decomposition does not fill the algebra")
    ranks = [dim]
    k = 1
    while ranks[-1] > 0:
        ranks.append(sum(max(p - k, 0) for p in parts))
        k += 1
    return tuple(ranks)
