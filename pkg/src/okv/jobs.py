"""Job descriptions for the command line, plus the named example fixtures."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import ValidationError
from .fields import QQ, PrimeField
from .polynomials import Polynomial, parse_polynomial
from .degeneration import DEFAULT_MATRIX_CAP
from .spaces import DEFAULT_MONOMIAL_CAP, SectionSpace, reduce_to_basis
from .valuation import FlagSpec


@dataclass(frozen=True)
class JobSpec:
    """A validated, serializable description of one computation."""

    field_spec: object = "Q"  # "Q" or {"Fp": prime}
    variables: tuple[str, ...] | None = None
    sections: tuple[str, ...] | None = None
    semigroup_generators: tuple[tuple[int, ...], ...] | None = None
    max_degree: int = 2
    relation_degree: int | None = None
    cap_monomials: int = DEFAULT_MONOMIAL_CAP
    cap_matrix: int = DEFAULT_MATRIX_CAP
    restriction_index: int | None = None
    orders: tuple[int, ...] | None = None
    subsystem: tuple[str, ...] | None = None
    change_of_coordinates: tuple[tuple[str, ...], ...] | None = None
    fixture: str | None = None
    description: str = ""

    def __post_init__(self):
        has_sections = self.sections is not None
        has_generators = self.semigroup_generators is not None
        if has_sections == has_generators:
            raise ValidationError(
                "exactly one of sections / semigroup_generators must be given"
            )
        if has_sections and not self.variables:
            raise ValidationError("polynomial sections need a variable list")
        if self.max_degree < 1:
            raise ValidationError("max_degree must be at least 1")
        if self.relation_degree is not None and self.relation_degree < 1:
            raise ValidationError("relation_degree must be at least 1")
        if has_generators:
            gens = self.semigroup_generators
            if not gens:
                raise ValidationError("semigroup generator list is empty")
            width = len(gens[0])
            if width < 2 or any(len(g) != width for g in gens):
                raise ValidationError("generators must be [m, u...] rows of one width")

    @property
    def coefficient_field(self):
        if self.field_spec == "Q":
            return QQ
        if isinstance(self.field_spec, dict) and set(self.field_spec) == {"Fp"}:
            return PrimeField(self.field_spec["Fp"])
        raise ValidationError(f"unknown field specification {self.field_spec!r}")

    @property
    def is_abstract(self) -> bool:
        return self.semigroup_generators is not None

    def flag(self) -> FlagSpec:
        if self.variables is None:
            raise ValidationError("this job has no polynomial variables")
        return FlagSpec(tuple(self.variables))

    def generator_points(self) -> list[tuple[int, tuple[int, ...]]]:
        return [(g[0], tuple(g[1:])) for g in self.semigroup_generators]

    def _parse_sections(self, strings) -> list[Polynomial]:
        fld = self.coefficient_field
        variables = tuple(self.variables)
        polys = [parse_polynomial(s, variables, fld) for s in strings]
        if self.change_of_coordinates is not None:
            matrix_rows = self.change_of_coordinates
            if len(matrix_rows) != len(variables) or any(
                len(r) != len(variables) for r in matrix_rows
            ):
                raise ValidationError("coordinate change must be a square matrix")
            numeric = [[fld(Fraction(c)) for c in row] for row in matrix_rows]
            if len(linalg.rref(numeric, len(variables))[0]) != len(variables):
                raise ValidationError("coordinate change must be invertible")
            images = {
                v: _linear_form(variables, row, fld)
                for v, row in zip(variables, matrix_rows)
            }
            polys = [p.substitute(images, variables) for p in polys]
        return polys

    def section_space(self) -> SectionSpace:
        polys = self._parse_sections(self.sections)
        return reduce_to_basis(
            polys, variables=tuple(self.variables), cap_monomials=self.cap_monomials
        )

    def subsystem_space(self) -> SectionSpace:
        if not self.subsystem:
            raise ValidationError("this job has no subsystem sections")
        polys = self._parse_sections(self.subsystem)
        return reduce_to_basis(
            polys, variables=tuple(self.variables), cap_monomials=self.cap_monomials
        )


def _linear_form(variables, row, fld) -> Polynomial:
    coeffs = {}
    for j, entry in enumerate(row):
        value = fld(Fraction(entry))
        if value:
            exp = tuple(1 if t == j else 0 for t in range(len(variables)))
            coeffs[exp] = value
    return Polynomial.from_dict(variables, coeffs)


_JOB_KEYS = {
    "field": "field_spec",
    "variables": "variables",
    "sections": "sections",
    "semigroup_generators": "semigroup_generators",
    "max_degree": "max_degree",
    "relation_degree": "relation_degree",
    "cap_monomials": "cap_monomials",
    "cap_matrix": "cap_matrix",
    "restriction_index": "restriction_index",
    "orders": "orders",
    "subsystem": "subsystem",
    "change_of_coordinates": "change_of_coordinates",
    "fixture": "fixture",
    "description": "description",
}


def jobspec_from_dict(raw: dict) -> JobSpec:
    """Build a JobSpec from parsed structured text; unknown keys are rejected."""
    if not isinstance(raw, dict):
        raise ValidationError("job description must be a mapping")
    unknown = set(raw) - set(_JOB_KEYS)
    if unknown:
        raise ValidationError(f"unknown job keys: {sorted(unknown)}")
    kwargs = {}
    for key, attr in _JOB_KEYS.items():
        if key not in raw:
            continue
        value = raw[key]
        if attr in {"variables", "sections", "subsystem"} and value is not None:
            value = tuple(str(v) for v in value)
        elif attr == "semigroup_generators" and value is not None:
            value = tuple(tuple(int(c) for c in row) for row in value)
        elif attr == "orders" and value is not None:
            value = tuple(int(c) for c in value)
        elif attr == "change_of_coordinates" and value is not None:
            value = tuple(tuple(str(c) for c in row) for row in value)
        elif attr in {"max_degree", "relation_degree", "cap_monomials", "cap_matrix", "restriction_index"}:
            value = None if value is None else int(value)
        kwargs[attr] = value
    return JobSpec(**kwargs)


def jobspec_to_dict(job: JobSpec) -> dict:
    """Canonical echo of a JobSpec for reports."""
    out = {}
    for key, attr in _JOB_KEYS.items():
        value = getattr(job, attr)
        if value is None or (attr == "description" and not value):
            continue
        if isinstance(value, tuple):
            value = [list(v) if isinstance(v, tuple) else v for v in value]
        out[key] = value
    return out


# ---------------------------------------------------------------------------
# Named fixtures.

def _fixture_counterexample(max_degree):
    return JobSpec(
        variables=("x", "y"),
        sections=("1", "x", "y + x*y^3", "x*y"),
        max_degree=max_degree or 2,
        relation_degree=4,
        fixture="counterexample-p1xp1",
        description=(
            "Four sections on a product of two projective lines whose square "
            "gains an extra valuation point"
        ),
    )


def _fixture_bott_samelson_u(max_degree):
    return JobSpec(
        variables=("x", "y", "z"),
        sections=("1", "x", "y", "z", "x*z", "y*z", "x^2*z + x*y", "x*y*z + y^2"),
        max_degree=max_degree or 3,
        fixture="bott-samelson-u",
        description="Eight-section system on a three-fold in local coordinates",
    )


def _fixture_bott_samelson_m(max_degree):
    base = ("1", "x", "y", "z", "x*z", "y*z", "x^2*z + x*y", "x*y*z + y^2")
    multiples = tuple(f"x*({s})" for s in base)
    return JobSpec(
        variables=("x", "y", "z"),
        sections=base + multiples,
        max_degree=max_degree or 2,
        fixture="bott-samelson-m",
        description=(
            "The eight-section system enlarged by its first-coordinate "
            "multiples; reduces to thirteen dimensions"
        ),
    )


def _fixture_elliptic_good(max_degree):
    return JobSpec(
        semigroup_generators=((1, 0), (1, 1), (1, 3)),
        max_degree=max_degree or 6,
        relation_degree=3,
        fixture="elliptic-good",
        description=(
            "Degree-three system on an elliptic curve flagged at an inflection "
            "point; the limit is a cuspidal cubic"
        ),
    )


def _fixture_elliptic_bad(max_degree):
    bound = max_degree or 6
    gens = [(1, 0), (1, 1), (1, 2)] + [(m, 3 * m - 1) for m in range(2, bound + 1)]
    return JobSpec(
        semigroup_generators=tuple(tuple(g) for g in gens),
        max_degree=bound,
        relation_degree=bound,
        fixture="elliptic-bad",
        description=(
            "Degree-three system on an elliptic curve flagged at a general "
            "point; every boundary point is a fresh generator, truncated here "
            f"to degree {bound}"
        ),
    )


def _fixture_hirzebruch(max_degree):
    return JobSpec(
        semigroup_generators=(
            (1, 0, 0),
            (1, 1, 0),
            (1, 0, 1),
            (1, 1, 1),
            (1, 2, 1),
            (1, 3, 1),
        ),
        max_degree=max_degree or 2,
        fixture="hirzebruch-trapezoid",
        description=(
            "Lattice points of the trapezoid with corners (0,0), (1,0), (3,1), "
            "(0,1): a ruled-surface body"
        ),
    )


def _fixture_abelian(max_degree):
    return JobSpec(
        semigroup_generators=((1, 0, 0), (1, 1, 0), (1, 0, 5), (1, 1, 3)),
        max_degree=max_degree or 2,
        fixture="abelian-trapezoid",
        description=(
            "Vertex generators of the trapezoid with corners (0,0), (1,0), "
            "(0,5), (1,3): an abelian-surface body used as polytope test data"
        ),
    )


_FIXTURES = {
    "counterexample-p1xp1": _fixture_counterexample,
    "bott-samelson-u": _fixture_bott_samelson_u,
    "bott-samelson-m": _fixture_bott_samelson_m,
    "elliptic-good": _fixture_elliptic_good,
    "elliptic-bad": _fixture_elliptic_bad,
    "hirzebruch-trapezoid": _fixture_hirzebruch,
    "abelian-trapezoid": _fixture_abelian,
}


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)


def load_fixture(name: str, max_degree: int | None = None) -> JobSpec:
    """The canonical JobSpec for a named example."""
    builder = _FIXTURES.get(name)
    if builder is None:
        raise ValidationError(
            f"unknown fixture {name!r}; known: {', '.join(fixture_names())}"
        )
    return builder(max_degree)
