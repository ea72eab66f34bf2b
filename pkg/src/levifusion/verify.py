"""Exhaustive multi-method verification harness.

Runs every labeling of a diagram (all +/- assignments; optionally sparse
ones with unlabeled vertices too) through a chosen set of methods and
cross-compares: partitions must agree exactly, fusion subsets must be
Weyl-conjugate, and type-E signature identification must contain the class
the combinatorial methods produce.  Independent labelings can be distributed
over worker processes; results are aggregated order-independently.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import conjugacy, oracle
from .diagram import LabeledDiagram, build_diagram
from .epattern import epattern_fuse
from .errors import DetectionGapError, InputError
from .folding import fold_fuse
from .partition import (build_digraph, check_d_partition, partition_fuse,
                        peel_partition, peel_partition_outcomes)
from .weight import weight_fuse, weight_fuse_outcomes

DEFAULT_METHODS = {
    "A": ("weight", "partition", "oracle"),
    "D": ("weight", "partition", "oracle"),
    "E": ("weight", "epattern", "oracle"),
    "B": ("fold", "fold_a"),
    "C": ("fold",),
    "F": ("fold",),
    "G": ("fold",),
}

_J_METHODS = ("weight", "partition", "epattern", "fold", "fold_a")


@dataclass
class VerifyReport:
    family: str
    rank: int
    methods: tuple[str, ...]
    sparse: bool
    branch_ties: bool
    inputs_checked: int = 0
    mismatches: list = field(default_factory=list)
    detection_gaps: list = field(default_factory=list)
    ambiguous_signatures: int = 0
    per_method: dict = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "methods": list(self.methods),
            "sparse": self.sparse,
            "branch_ties": self.branch_ties,
            "inputs_checked": self.inputs_checked,
            "mismatches": self.mismatches,
            "detection_gaps": self.detection_gaps,
            "ambiguous_signatures": self.ambiguous_signatures,
            "per_method": self.per_method,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "ok": self.ok,
        }


def assignments(rank: int, sparse: bool):
    """All (plus, minus) label assignments, deterministic order."""
    alphabet = "+-0" if sparse else "+-"
    for signs in itertools.product(alphabet, repeat=rank):
        plus = tuple(i + 1 for i, s in enumerate(signs) if s == "+")
        minus = tuple(i + 1 for i, s in enumerate(signs) if s == "-")
        yield plus, minus


def _check_one(d, plus, minus, methods, branch_ties, relaxed_pattern4):
    """Run one labeling; returns (mismatch detail lines, gap flag, ambig flag)."""
    ld = LabeledDiagram(d, frozenset(plus), frozenset(minus))
    fam = d.family
    problems: list[str] = []
    gap = False
    ambiguous = False

    js: dict[str, frozenset] = {}
    partitions: dict[str, tuple] = {}
    signature_matches = None

    for method in methods:
        if method == "weight":
            js[method] = weight_fuse(ld)
        elif method == "partition":
            p = peel_partition(build_digraph(ld))
            if fam == "D":
                try:
                    check_d_partition(p)
                except InputError as e:
                    problems.append(f"peel partition invalid: {e}")
            partitions[method] = p
            js[method] = partition_fuse(ld)
        elif method == "epattern":
            try:
                js[method] = epattern_fuse(ld, relaxed=False)
            except DetectionGapError:
                gap = True
                js[method] = epattern_fuse(ld, relaxed=True)
        elif method == "oracle":
            if fam in ("A", "D"):
                partitions[method] = oracle.jordan_partition(
                    oracle.classical_matrix(ld))
            else:
                match = oracle.signature_fuse(ld)
                ambiguous = match.ambiguous
                signature_matches = match.matches
        elif method == "fold":
            js[method] = fold_fuse(ld)
        elif method == "fold_a":
            js[method] = fold_fuse(ld, cover="A")
        else:
            raise InputError(f"unknown verification method {method!r}")

    if len(partitions) == 2:
        vals = list(partitions.values())
        if vals[0] != vals[1]:
            problems.append(
                f"partitions differ: {dict((k, list(v)) for k, v in partitions.items())}")

    named = sorted(js)
    for m1, m2 in itertools.combinations(named, 2):
        if not conjugacy.is_conjugate(d, js[m1], js[m2]):
            problems.append(f"{m1} J={sorted(js[m1])} not conjugate to "
                            f"{m2} J={sorted(js[m2])}")

    if signature_matches is not None and js:
        some = js[named[0]]
        canon = conjugacy.canonicalize(d, some)
        if not any(canon == frozenset(m) for m in signature_matches):
            problems.append(
                f"signature classes {[sorted(m) for m in signature_matches]} "
                f"exclude the computed class {sorted(canon)}")

    if branch_ties:
        if fam in ("A", "D", "E") and ("weight" in methods):
            outcomes = set(weight_fuse_outcomes(ld))
            canons = {conjugacy.canonicalize(d, j) for j in outcomes}
            if len(canons) > 1:
                problems.append(
                    f"tie choices produce non-conjugate outputs: "
                    f"{[sorted(j) for j in sorted(outcomes, key=sorted)]}")
        if fam in ("A", "D"):
            peels = peel_partition_outcomes(build_digraph(ld))
            if len(peels) > 1:
                problems.append(f"peeling choices produce distinct partitions: "
                                f"{sorted(peels)}")
    return problems, gap, ambiguous


def _run_batch(args):
    family, rank, batch, methods, branch_ties, relaxed_pattern4 = args
    d = build_diagram(family, rank)
    out = []
    for plus, minus in batch:
        out.append((plus, minus,
                    *_check_one(d, plus, minus, methods, branch_ties,
                                relaxed_pattern4)))
    return out


def run_verify(family: str, rank: int, methods=None, sparse: bool = False,
               branch_ties: bool = False, relaxed_pattern4: bool = False,
               workers: int = 1) -> VerifyReport:
    d = build_diagram(family, rank)
    if methods is None:
        methods = DEFAULT_METHODS[family]
    methods = tuple(methods)
    report = VerifyReport(family, rank, methods, sparse, branch_ties)
    report.per_method = {m: {"runs": 0} for m in methods}
    if "oracle" in methods and family == "E":
        oracle.signature_table(d)  # build (and cache) before any fan-out

    work = list(assignments(rank, sparse))
    t0 = time.time()
    if workers > 1:
        size = max(1, len(work) // (workers * 4))
        batches = [work[i:i + size] for i in range(0, len(work), size)]
        args = [(family, rank, b, methods, branch_ties, relaxed_pattern4)
                for b in batches]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_batch, args))
        results = [row for chunk in chunks for row in chunk]
    else:
        results = _run_batch((family, rank, work, methods, branch_ties,
                              relaxed_pattern4))

    results.sort(key=lambda row: (row[0], row[1]))
    for plus, minus, problems, gap, ambiguous in results:
        report.inputs_checked += 1
        for m in methods:
            report.per_method[m]["runs"] += 1
        if gap:
            report.detection_gaps.append({"plus": list(plus), "minus": list(minus)})
        if ambiguous:
            report.ambiguous_signatures += 1
        for detail in problems:
            report.mismatches.append(
                {"plus": list(plus), "minus": list(minus), "detail": detail})
    report.elapsed_seconds = time.time() - t0
    return report


def enumerate_table(family: str, rank: int):
    """One fusion record per disjoint (J1, J2) pair, unlabeled allowed."""
    from .fuse import fuse

    d = build_diagram(family, rank)
    for plus, minus in assignments(rank, sparse=True):
        ld = LabeledDiagram(d, frozenset(plus), frozenset(minus))
        res = fuse(ld)
        yield {
            "plus": list(plus),
            "minus": list(minus),
            "j": sorted(res.j),
            "canonical_j": sorted(res.canonical_j) if res.canonical_j is not None else None,
            "levi_type": res.levi,
        }
