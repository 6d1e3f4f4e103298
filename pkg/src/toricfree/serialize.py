"""JSON interchange: cone/fan documents and self-verifying reports.

Integers within the IEEE-754 exact range are serialized as JSON numbers;
anything larger becomes a decimal string, and the parser accepts both.
Reports embed every cone they talk about, so a report can be re-verified
later with no other inputs (see ``recheck_report``).
"""

from __future__ import annotations

from typing import Any, Union

from . import __version__
from .cones import Cone
from .fans import Fan
from .klyachko import (
    DecompositionCertificate,
    FanFreenessReport,
    LocalFreenessReport,
    decide_tangent_locally_free,
    diagnose_certificate,
    tangent_family,
)
from .lattice import RationalSubspace, Vector
from .smoothness import SmoothnessReport, is_smooth_cone
from .verifier import AgreementRecord, SweepSummary

SAFE_INT = 2 ** 53 - 1

Geometry = Union[Cone, Fan]


def encode_int(value: int) -> int | str:
    return value if -SAFE_INT <= value <= SAFE_INT else str(value)


def decode_int(value: Any) -> int:
    if isinstance(value, bool):
        raise ValueError(f"expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise ValueError(f"expected a decimal integer string, got {value!r}") from None
    raise ValueError(f"expected an integer, got {value!r}")


def encode_vector(v: Vector) -> list:
    return [encode_int(c) for c in v]


def decode_vector(value: Any, rank: int | None = None) -> Vector:
    if not isinstance(value, list):
        raise ValueError(f"expected a list of integers, got {value!r}")
    v = tuple(decode_int(c) for c in value)
    if rank is not None and len(v) != rank:
        raise ValueError(f"vector {v} has length {len(v)}, expected {rank}")
    return v


def cone_to_document(cone: Cone) -> dict:
    return {
        "rank": cone.rank,
        "generators": [encode_vector(g) for g in cone.generators],
    }


def parse_cone_document(doc: Any) -> Cone:
    if not isinstance(doc, dict):
        raise ValueError("cone document must be a JSON object")
    if "rank" not in doc or "generators" not in doc:
        raise ValueError("cone document requires 'rank' and 'generators'")
    rank = decode_int(doc["rank"])
    gens_field = doc["generators"]
    if not isinstance(gens_field, list):
        raise ValueError("'generators' must be a list of integer vectors")
    generators = [decode_vector(g, rank) for g in gens_field]
    return Cone(generators, rank)


def fan_to_document(fan: Fan) -> dict:
    return {
        "rank": fan.rank,
        "cones": [[encode_vector(g) for g in c.generators] for c in fan.maximal_cones()],
    }


def parse_fan_document(doc: Any) -> Fan:
    if not isinstance(doc, dict):
        raise ValueError("fan document must be a JSON object")
    if "rank" not in doc or "cones" not in doc:
        raise ValueError("fan document requires 'rank' and 'cones'")
    rank = decode_int(doc["rank"])
    cones_field = doc["cones"]
    if not isinstance(cones_field, list):
        raise ValueError("'cones' must be a list of generator lists")
    cones = []
    for gens in cones_field:
        if not isinstance(gens, list):
            raise ValueError("each fan cone must be a list of integer vectors")
        cones.append(Cone([decode_vector(g, rank) for g in gens], rank))
    return Fan(cones, rank)


def parse_geometry_document(doc: Any) -> Geometry:
    """Dispatch a parsed JSON document to a cone or a fan by its shape."""
    if not isinstance(doc, dict):
        raise ValueError("geometry document must be a JSON object")
    if "cones" in doc:
        return parse_fan_document(doc)
    if "generators" in doc:
        return parse_cone_document(doc)
    raise ValueError("document is neither a cone ('generators') nor a fan ('cones')")


def geometry_cones(geometry: Geometry) -> tuple[Cone, ...]:
    if isinstance(geometry, Fan):
        return geometry.cones
    return (geometry,)


def _subspace_rows(sub: RationalSubspace) -> list:
    return [encode_vector(row) for row in sub.integer_basis()]


def certificate_to_document(cert: DecompositionCertificate) -> dict:
    return {
        "entries": [
            {"weight_class": encode_vector(m), "subspace_basis": _subspace_rows(sub)}
            for m, sub in cert.entries
        ],
    }


def parse_certificate_document(doc: Any, cone: Cone) -> DecompositionCertificate:
    if not isinstance(doc, dict) or not isinstance(doc.get("entries"), list):
        raise ValueError("certificate document requires an 'entries' list")
    entries = []
    for entry in doc["entries"]:
        if not isinstance(entry, dict):
            raise ValueError("certificate entry must be an object")
        weight = decode_vector(entry.get("weight_class"), cone.rank)
        basis_field = entry.get("subspace_basis")
        if not isinstance(basis_field, list):
            raise ValueError("certificate entry requires a 'subspace_basis' list")
        rows = [decode_vector(r, cone.rank) for r in basis_field]
        entries.append((weight, RationalSubspace.span(cone.rank, rows)))
    return DecompositionCertificate(cone, entries)


def smoothness_to_document(report: SmoothnessReport) -> dict:
    doc: dict = {"verdict": report.verdict}
    if report.reason is not None:
        doc["reason"] = report.reason
    if report.invariant_factor is not None:
        doc["invariant_factor"] = encode_int(report.invariant_factor)
    return doc


def freeness_to_document(report: LocalFreenessReport) -> dict:
    doc: dict = {"verdict": report.verdict}
    if report.witnesses is not None:
        doc["witnesses"] = [
            {"ray": encode_vector(u), "weight": encode_vector(m)}
            for u, m in sorted(report.witnesses.items())
        ]
    if report.certificate is not None:
        doc["certificate"] = certificate_to_document(report.certificate)
    if report.failure is not None:
        doc["failure"] = report.failure
    if report.failing_ray is not None:
        doc["failing_ray"] = encode_vector(report.failing_ray)
    return doc


def _tool_stamp() -> dict:
    return {"name": "toricfree", "version": __version__}


def smooth_report(geometry: Geometry) -> dict:
    entries = []
    for cone in geometry_cones(geometry):
        entries.append({
            "cone": cone_to_document(cone),
            "smooth": smoothness_to_document(is_smooth_cone(cone)),
        })
    return {
        "tool": _tool_stamp(),
        "kind": "smooth",
        "verdict": all(e["smooth"]["verdict"] for e in entries),
        "entries": entries,
    }


def locally_free_report(geometry: Geometry) -> dict:
    entries = []
    for cone in geometry_cones(geometry):
        entries.append({
            "cone": cone_to_document(cone),
            "locally_free": freeness_to_document(decide_tangent_locally_free(cone)),
        })
    return {
        "tool": _tool_stamp(),
        "kind": "locally-free",
        "verdict": all(e["locally_free"]["verdict"] for e in entries),
        "entries": entries,
    }


def agreement_to_entry(record: AgreementRecord) -> dict:
    return {
        "cone": cone_to_document(record.cone),
        "smooth": smoothness_to_document(record.smooth),
        "locally_free": freeness_to_document(record.locally_free),
        "agree": record.agree,
    }


def verify_report(geometry: Geometry) -> dict:
    from .verifier import check_zariski_lipman

    entries = [agreement_to_entry(check_zariski_lipman(c)) for c in geometry_cones(geometry)]
    return {
        "tool": _tool_stamp(),
        "kind": "verify",
        "verdict": all(e["agree"] for e in entries),
        "entries": entries,
    }


def sweep_report(summary: SweepSummary, config_doc: dict) -> dict:
    return {
        "tool": _tool_stamp(),
        "kind": "sweep",
        "config": config_doc,
        "count": summary.count,
        "agreements": summary.agreements,
        "disagreements": [agreement_to_entry(r) for r in summary.disagreements],
        "smooth_count": summary.smooth_count,
        "smooth_rate": summary.smooth_count / summary.count if summary.count else 0.0,
        "elapsed": summary.elapsed_seconds,
    }


def fan_freeness_verdict(report: FanFreenessReport) -> bool:
    return report.verdict


def recheck_report(doc: Any) -> list[str]:
    """Re-validate every certificate inside a parsed ReportDocument.

    Returns a list of failure descriptions; empty means every entry that
    claims local freeness carries a certificate that verifies against the
    tangent filtrations of its embedded cone.
    """
    if not isinstance(doc, dict) or not isinstance(doc.get("entries"), list):
        raise ValueError("report document requires an 'entries' list")
    failures = []
    for pos, entry in enumerate(doc["entries"]):
        if not isinstance(entry, dict) or "cone" not in entry:
            raise ValueError(f"entry {pos} is malformed: no embedded cone")
        cone = parse_cone_document(entry["cone"])
        free_doc = entry.get("locally_free")
        if free_doc is None:
            continue
        if not isinstance(free_doc, dict):
            raise ValueError(f"entry {pos}: 'locally_free' must be an object")
        if not free_doc.get("verdict"):
            continue
        cert_doc = free_doc.get("certificate")
        if cert_doc is None:
            failures.append(f"entry {pos} ({cone.generators}): verdict true without certificate")
            continue
        cert = parse_certificate_document(cert_doc, cone)
        problem = diagnose_certificate(cone, tangent_family(cone), cert)
        if problem is not None:
            failures.append(f"entry {pos} ({cone.generators}): {problem}")
    return failures
