"""Service-layer handlers: one function per endpoint, shared with the CLI."""
from __future__ import annotations

from .. import conjugacy
from ..diagram import LabeledDiagram, build_diagram
from ..fuse import fuse
from ..partition import build_digraph, peel_partition
from ..verify import enumerate_table, run_verify
from . import schemas


def _labeled(d: schemas.DiagramIn) -> LabeledDiagram:
    return LabeledDiagram(build_diagram(d.family, d.rank),
                          frozenset(d.plus), frozenset(d.minus))


def handle_fuse(req: schemas.FuseRequest) -> schemas.FuseResponse:
    result = fuse(_labeled(req.diagram), method=req.method,
                  relaxed_pattern4=req.relaxed_pattern4)
    return schemas.FuseResponse(
        j=sorted(result.j),
        canonical_j=sorted(result.canonical_j) if result.canonical_j is not None else None,
        method=result.method,
        partition=list(result.partition) if result.partition is not None else None,
        levi_type=result.levi,
        notes=list(result.notes),
    )


def handle_partition(req: schemas.PartitionRequest) -> schemas.PartitionResponse:
    ld = _labeled(req.diagram)
    g = build_digraph(ld)
    return schemas.PartitionResponse(
        partition=list(peel_partition(g)),
        digraph_size=g.size,
        arcs=sorted([u, v] for u, v in g.arcs),
    )


def handle_conjugacy(req: schemas.ConjugacyRequest) -> schemas.ConjugacyResponse:
    d = build_diagram(req.family, req.rank)
    j = frozenset(req.j)
    j2 = frozenset(req.j_prime)
    if req.orbit_oracle:
        verdict = conjugacy.orbit_is_conjugate(d, j, j2)
    else:
        verdict = conjugacy.is_conjugate(d, j, j2)
    return schemas.ConjugacyResponse(
        conjugate=verdict,
        canonical_j=sorted(conjugacy.canonicalize(d, j)),
        canonical_j_prime=sorted(conjugacy.canonicalize(d, j2)),
        orbit_oracle_used=req.orbit_oracle,
    )


def handle_enumerate(req: schemas.EnumerateRequest) -> schemas.EnumerateResponse:
    records = [schemas.EnumerateRecord(**rec)
               for rec in enumerate_table(req.family, req.rank)]
    return schemas.EnumerateResponse(family=req.family, rank=req.rank,
                                     records=records)


def handle_verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    report = run_verify(req.family, req.rank, methods=req.methods,
                        sparse=req.sparse, branch_ties=req.branch_ties,
                        relaxed_pattern4=req.relaxed_pattern4,
                        workers=req.workers)
    return schemas.VerifyResponse(**report.to_dict())
