"""Ground-truth oracles: matrix realizations, Jordan types, ad signatures.

Types A and D get the defining-representation matrices of
X = sum_{J1} X_a + sum_{J2} X_{-b}; any simply-laced type gets the adjoint
matrix on a Chevalley basis.  Jordan data is derived from exact integer
ranks of matrix powers.  For type E, the class of X is identified by
matching its full ad-rank signature against precomputed signatures of the
regular nilpotent elements of all Levi classes.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from . import conjugacy
from .diagram import DynkinDiagram, LabeledDiagram
from .errors import InputError, InternalConsistencyError, UnsupportedFamilyError
from .linalg import partition_from_ranks, rank_sequence, zeros
from .rootsystem import adjoint_algebra, build_root_system, \
    regular_levi_ad_signature

CONVENTION_ID = "extraspecial-height-lex-v1"


def classical_matrix(ld: LabeledDiagram):
    """Defining-representation matrix of X for a type A or D labeling.

    Type A: X_{a_i} = E_{i,i+1} on C^{n+1}.
    Type D: X_{a_i} = E_{i,i+1} - E_{i+1+n,i+n} for i < n and
    X_{a_n} = E_{n-1,2n} - E_{n,2n-1} on C^{2n}; minus labels contribute
    the transposes.
    """
    fam = ld.diagram.family
    n = ld.diagram.rank
    if fam == "A":
        m = zeros(n + 1, n + 1)
        for v in ld.plus:
            m[v - 1][v] += 1
        for v in ld.minus:
            m[v][v - 1] += 1
        return m
    if fam == "D":
        m = zeros(2 * n, 2 * n)

        def entries(v):
            if v < n:
                return (((v, v + 1), 1), ((v + 1 + n, v + n), -1))
            return (((n - 1, 2 * n), 1), ((n, 2 * n - 1), -1))

        for v in ld.plus:
            for (i, j), c in entries(v):
                m[i - 1][j - 1] += c
        for v in ld.minus:
            for (i, j), c in entries(v):
                m[j - 1][i - 1] += c
        return m
    raise UnsupportedFamilyError(
        f"classical matrix realizations exist for families A and D, got {fam}")


def jordan_partition(m) -> tuple[int, ...]:
    """Jordan type of a nilpotent integer matrix, via exact power ranks."""
    try:
        ranks = rank_sequence(m)
    except ValueError as e:
        raise InputError(str(e)) from e
    return partition_from_ranks(ranks)


def ad_matrix(ld: LabeledDiagram):
    """Integer matrix of ad(X) on the Chevalley basis (roots then Cartan)."""
    alg = adjoint_algebra(ld.diagram.family, ld.diagram.rank)
    return alg.ad_matrix(ld.plus, ld.minus)


def ad_rank_signature(ld: LabeledDiagram) -> tuple[int, ...]:
    """Exact [rank(ad X^0), rank(ad X^1), ..., 0], block-graded computation."""
    alg = adjoint_algebra(ld.diagram.family, ld.diagram.rank)
    return alg.ad_rank_signature(ld.plus, ld.minus)


def ad_jordan_partition(ld: LabeledDiagram) -> tuple[int, ...]:
    return partition_from_ranks(list(ad_rank_signature(ld)))


# ---------------------------------------------------------------------------
# Signature table and class identification for type E
# ---------------------------------------------------------------------------

def _cache_dir() -> Path:
    env = os.environ.get("FUSION_CACHE_DIR")
    if env:
        return Path(env)
    return Path(os.path.expanduser("~")) / ".cache" / "levifusion"


def signature_table(d: DynkinDiagram) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Canonical Levi representative -> ad-rank signature of its regular class.

    Built once per (family, rank) and cached as JSON keyed by the sign
    convention; candidate signatures come from the sl2-weight route, which is
    independent of the power-rank route used on inputs.
    """
    path = _cache_dir() / f"signatures_{d.family}{d.rank}_{CONVENTION_ID}.json"
    if path.exists():
        try:
            data = json.loads(path.read_text())
            if data.get("convention") == CONVENTION_ID:
                return {tuple(e["j"]): tuple(e["signature"])
                        for e in data["entries"]}
        except (json.JSONDecodeError, KeyError):
            pass  # stale or foreign cache: rebuild
    rs = build_root_system(d.family, d.rank)
    table = {}
    for rep in conjugacy.class_representatives(d):
        table[tuple(sorted(rep))] = regular_levi_ad_signature(rs, rep)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".tmp.{os.getpid()}")
        tmp.write_text(json.dumps({
            "convention": CONVENTION_ID,
            "family": d.family,
            "rank": d.rank,
            "entries": [{"j": list(j), "signature": list(sig)}
                        for j, sig in sorted(table.items())],
        }))
        os.replace(tmp, path)   # atomic: concurrent writers cannot corrupt
    except OSError:
        pass  # caching is best-effort
    return table


@dataclass(frozen=True)
class SignatureMatch:
    """Outcome of signature-based class identification."""

    signature: tuple[int, ...]
    matches: tuple[frozenset[int], ...]   # canonical class representatives

    @property
    def ambiguous(self) -> bool:
        return len(self.matches) > 1

    @property
    def j(self) -> frozenset[int]:
        if self.ambiguous:
            raise InternalConsistencyError(
                f"signature matches {len(self.matches)} classes; "
                "adjudicate with another method")
        return self.matches[0]


def signature_fuse(ld: LabeledDiagram) -> SignatureMatch:
    """Identify the fusion class of a type-E labeling by ad-rank signature.

    Every input must match at least one Levi class (each X is regular in
    some Levi); zero matches would falsify the machinery and raise.
    """
    if ld.diagram.family != "E":
        raise UnsupportedFamilyError("signature_fuse applies to type E")
    table = signature_table(ld.diagram)
    sig = ad_rank_signature(ld)
    matches = tuple(frozenset(j) for j, s in sorted(table.items()) if s == sig)
    if not matches:
        raise InternalConsistencyError(
            f"no Levi class matches the ad signature {sig} of "
            f"+{sorted(ld.plus)} -{sorted(ld.minus)} in "
            f"{ld.diagram.family}{ld.diagram.rank}")
    return SignatureMatch(sig, matches)
