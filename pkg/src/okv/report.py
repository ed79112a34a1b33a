"""Deterministic, exact serialization of results into report payloads.

Rationals are rendered as strings like "3/2" with no floating point
anywhere; collections are sorted, so identical inputs yield identical
bytes.
"""

from __future__ import annotations

from fractions import Fraction

from .degeneration import (
    DegenerationReport,
    Presentation,
    RelationSet,
    WeightVector,
)
from .fields import FpElement
from .polytopes import RationalPolytope
from .semigroups import GenerationReport, GradedSemigroup, NormalityRecord
from .valuation import SaturationRecord


def scalar_str(value) -> str:
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, FpElement):
        return str(value.value)
    raise TypeError(f"not an exact scalar: {value!r}")


def parse_scalar_str(text: str) -> Fraction:
    return Fraction(text)


def point_list(point) -> list[int]:
    return [int(c) for c in point]


def graded_point(point) -> list:
    m, u = point
    return [m, point_list(u)]


def polytope_dict(poly: RationalPolytope) -> dict:
    return {
        "ambient_dim": poly.ambient_dim,
        "affine_dim": poly.affine_dim,
        "vertices": [[scalar_str(c) for c in v] for v in poly.vertices],
        "halfspaces": [
            {"normal": point_list(n), "offset": scalar_str(c)}
            for n, c in poly.halfspaces
        ],
    }


def semigroup_dict(gamma: GradedSemigroup) -> dict:
    return {
        "dim": gamma.dim,
        "max_degree": gamma.max_degree,
        "slices": [sorted(point_list(u) for u in s) for s in gamma.slices],
        "hilbert": [len(s) for s in gamma.slices],
    }


def generation_dict(report: GenerationReport) -> dict:
    out = {"status": report.status, "checked_degree": report.checked_degree}
    if report.witness is not None:
        out["witness"] = graded_point(report.witness)
    return out


def normality_dict(record: NormalityRecord) -> dict:
    return {
        "normal": record.normal,
        "dilation": record.dilation,
        "lattice_count": record.lattice_count,
        "missing": sorted(point_list(u) for u in record.missing),
    }


def saturation_dict(record: SaturationRecord) -> dict:
    return {
        "saturated": record.saturated,
        "values": sorted(record.values),
        "interval": list(record.interval),
    }


def weight_vector_dict(pi: WeightVector) -> dict:
    return {"alphas": list(pi.alphas)}


def presentation_dict(pres: Presentation, weights=None) -> dict:
    gens = []
    for i, g in enumerate(pres.generators):
        entry = {
            "label": g.label,
            "degree": graded_point(g.degree),
            "lift": str(g.lift),
        }
        if weights is not None:
            entry["weight"] = weights[i]
        gens.append(entry)
    return {"model_variables": list(pres.model_variables), "generators": gens}


def relations_dict(relset: RelationSet) -> dict:
    rels = []
    for rel in relset.relations:
        entry = {"poly": str(rel.poly), "degree": graded_point(rel.degree)}
        if rel.initial is not None:
            entry["initial"] = str(rel.initial)
        if rel.weight is not None:
            entry["weight"] = rel.weight
        if rel.rees is not None:
            entry["rees"] = str(rel.rees)
        rels.append(entry)
    return {"truncation_degree": relset.truncation_degree, "relations": rels}


def degeneration_dict(report: DegenerationReport) -> dict:
    return {
        "presentation": presentation_dict(
            report.presentation, report.generator_weights
        ),
        "weight_vector": weight_vector_dict(report.weight_vector),
        "relations": relations_dict(report.relations),
        "flatness": {
            "verdict": report.flatness.verdict,
            "binomial_initial": report.flatness.binomial_initial,
            "checked_degree": report.flatness.checked_degree,
            "rows": [
                {
                    "degree": r.degree,
                    "quotient_dim": r.quotient_dim,
                    "initial_quotient_dim": r.initial_quotient_dim,
                    "semigroup_count": r.semigroup_count,
                }
                for r in report.flatness.rows
            ],
        },
        "semigroup": semigroup_dict(report.gamma),
        "relation_degree": report.relation_degree,
    }


def render_text(data, indent: int = 0) -> str:
    """Plain-text rendering of a report dictionary."""
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
    elif isinstance(data, list):
        if all(not isinstance(v, (dict, list)) for v in data):
            lines.append(f"{pad}{data}")
        else:
            for value in data:
                lines.append(render_text(value, indent))
    else:
        lines.append(f"{pad}{data}")
    return "\n".join(line for line in lines if line)
