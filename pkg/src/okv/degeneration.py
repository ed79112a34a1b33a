"""Toric degenerations: weight vectors, presentations, kernel ideals, Rees families.

The flow is: pick generators of the graded value semigroup and lift them to
sections; compute the kernel of the induced polynomial presentation degree
by degree with exact linear algebra; collapse the modified order on the
finitely many degrees that occur to a single integer weighting; homogenize
each relation into a one-parameter family interpolating between the
relation and its initial form; certify flatness by matching three Hilbert
functions degreewise.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import InvariantError, ResourceCapError, ValidationError
from . import linalg
from .fields import QQ
from .polynomials import Polynomial, polynomial_field
from .semigroups import (
    GradedPoint,
    GradedSemigroup,
    build_gamma,
    gamma_from_generators,
    gamma_from_slices,
    minimal_generators,
    okounkov_body_estimate,
)
from .spaces import DEFAULT_MONOMIAL_CAP, SectionSpace, is_subspace, product_space
from .valuation import FlagSpec, nu_image, restricted_system
from .polytopes import RationalPolytope, face_restriction, polytopes_equal

DEFAULT_MATRIX_CAP = 500_000

REES_PARAMETER = "t"


def flatten_point(point: GradedPoint) -> tuple:
    m, u = point
    return (m, *u)


def unflatten_point(flat) -> GradedPoint:
    return (flat[0], tuple(flat[1:]))


@dataclass(frozen=True)
class WeightVector:
    """Integer linear form (m, u) -> a0*m - sum(ai*ui) collapsing the order."""

    alphas: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.alphas) - 1

    def weight_flat(self, flat) -> int:
        if len(flat) != len(self.alphas):
            raise ValidationError("point dimension does not match the weight vector")
        return self.alphas[0] * flat[0] - sum(
            a * c for a, c in zip(self.alphas[1:], flat[1:])
        )

    def weight(self, point: GradedPoint) -> int:
        return self.weight_flat(flatten_point(point))


def modified_flat_key(flat) -> tuple:
    return (flat[0],) + tuple(-c for c in flat[1:])


def choose_weight_vector(points, dim: int | None = None) -> WeightVector:
    """Smallest canonical weights preserving the modified order on the set.

    Zero and the standard basis of the graded orthant are always included.
    The gap constant is one more than the largest coordinate difference over
    pairs, and each weight is the least integer exceeding the gap constant
    times the sum of the later weights.
    """
    pts = {tuple(int(c) for c in p) for p in points}
    if dim is None:
        if not pts:
            raise ValidationError("cannot infer dimension from an empty point set")
        dim = len(next(iter(pts))) - 1
    if dim < 1:
        raise ValidationError("weight vectors need at least one value coordinate")
    if any(len(p) != dim + 1 for p in pts):
        raise ValidationError("points of mixed dimension")
    pts.add((0,) * (dim + 1))
    for i in range(dim + 1):
        pts.add(tuple(1 if j == i else 0 for j in range(dim + 1)))
    gap = 1
    plist = sorted(pts)
    for p in plist:
        for q in plist:
            for a, b in zip(p, q):
                if a - b >= gap:
                    gap = a - b + 1
    alphas = [0] * (dim + 1)
    alphas[dim] = 1
    for k in range(dim - 1, -1, -1):
        alphas[k] = gap * sum(alphas[k + 1 :]) + 1
    return WeightVector(tuple(alphas))


def preserves_modified_order(pi: WeightVector, points) -> bool:
    """Brute-force pairwise check of strict order preservation."""
    pts = sorted({tuple(p) for p in points}, key=modified_flat_key)
    weights = [pi.weight_flat(p) for p in pts]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i] != pts[j] and not weights[i] < weights[j]:
                return False
    return True


# ---------------------------------------------------------------------------
# Presentations.

@dataclass(frozen=True)
class PresentationGenerator:
    label: str
    degree: GradedPoint
    lift: Polynomial


@dataclass(frozen=True)
class Presentation:
    """Labelled semigroup generators together with their section lifts."""

    generators: tuple[PresentationGenerator, ...]
    model_variables: tuple[str, ...]
    field: object

    @property
    def size(self) -> int:
        return len(self.generators)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(g.label for g in self.generators)

    @property
    def grades(self) -> tuple[int, ...]:
        return tuple(g.degree[0] for g in self.generators)

    @property
    def degrees(self) -> tuple[GradedPoint, ...]:
        return tuple(g.degree for g in self.generators)

    def generator_by_degree(self, degree: GradedPoint) -> PresentationGenerator:
        for g in self.generators:
            if g.degree == degree:
                return g
        raise ValidationError(f"no generator of degree {degree}")


def _gamma_and_powers(space, flag, max_degree, cap_monomials):
    if space.is_zero:
        raise ValidationError("cannot present the zero space")
    powers = [space]
    for _ in range(2, max_degree + 1):
        powers.append(product_space(powers[-1], space, cap_monomials=cap_monomials))
    slices = [{(0,) * flag.dim}] + [nu_image(p, flag) for p in powers]
    return gamma_from_slices(slices, flag.dim), powers


def build_presentation(
    space: SectionSpace,
    flag: FlagSpec,
    max_degree: int,
    cap_monomials: int = DEFAULT_MONOMIAL_CAP,
) -> Presentation:
    """One labelled generator per minimal semigroup generator, with its lift.

    The lift of (m, u) is the reduced-basis element of the m-th power space
    whose leading exponent is u, so the choice is canonical.
    """
    gamma, powers = _gamma_and_powers(space, flag, max_degree, cap_monomials)
    gens = minimal_generators(gamma)
    out = []
    for i, (m, u) in enumerate(gens, start=1):
        lift = powers[m - 1].element_with_leading_exponent(u)
        out.append(PresentationGenerator(f"X{i}", (m, u), lift))
    field = polynomial_field(space.basis[0])
    return Presentation(tuple(out), space.variables, field)


def presentation_from_generators(generators) -> Presentation:
    """Monomial model for an abstract semigroup: (m, u) becomes s^m t^u."""
    gens = sorted((int(m), tuple(int(c) for c in u)) for m, u in generators)
    if not gens:
        raise ValidationError("empty generator list")
    if any(m < 1 for m, _ in gens):
        raise ValidationError("generator degrees must be at least 1")
    d = len(gens[0][1])
    if any(len(u) != d for _, u in gens):
        raise ValidationError("generators of mixed dimension")
    variables = ("s",) + tuple(f"t{i}" for i in range(1, d + 1))
    out = []
    for i, (m, u) in enumerate(gens, start=1):
        lift = Polynomial.monomial(variables, (m, *u), Fraction(1))
        out.append(PresentationGenerator(f"X{i}", (m, u), lift))
    return Presentation(tuple(out), variables, QQ)


# ---------------------------------------------------------------------------
# Truncated kernel ideals.

@dataclass(frozen=True)
class Relation:
    """A polynomial identity among the generator labels."""

    poly: Polynomial
    degree: GradedPoint
    initial: Polynomial | None = None
    weight: int | None = None
    rees: Polynomial | None = None


@dataclass(frozen=True)
class RelationSet:
    relations: tuple[Relation, ...]
    truncation_degree: int


def _label_monomials(grades: tuple[int, ...], total: int) -> list[tuple]:
    """Exponent vectors a with sum a_i * grades_i equal to the total degree."""
    out: list[tuple] = []

    def rec(i: int, remaining: int, prefix: tuple):
        if i == len(grades):
            if remaining == 0:
                out.append(prefix)
            return
        step = grades[i]
        top = remaining // step
        for a in range(top + 1):
            rec(i + 1, remaining - a * step, prefix + (a,))

    rec(0, total, ())
    return out


def _monomial_value(presentation: Presentation, a: tuple) -> tuple:
    d = len(presentation.generators[0].degree[1])
    total = [0] * d
    for count, gen in zip(a, presentation.generators):
        if count:
            for i, c in enumerate(gen.degree[1]):
                total[i] += count * c
    return tuple(total)


def _monomial_key(presentation: Presentation, a: tuple) -> tuple:
    return (_monomial_value(presentation, a), a)


class _Evaluator:
    """Memoized evaluation of label monomials in the polynomial model."""

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        one = presentation.field.one
        self.cache = {
            (0,) * presentation.size: Polynomial.constant(presentation.model_variables, one)
        }

    def __call__(self, a: tuple) -> Polynomial:
        hit = self.cache.get(a)
        if hit is not None:
            return hit
        i = next(j for j, c in enumerate(a) if c)
        previous = a[:i] + (a[i] - 1,) + a[i + 1 :]
        value = self(previous) * self.presentation.generators[i].lift
        self.cache[a] = value
        return value


def _matrix_rows(evaluations, field):
    columns = sorted({exp for p in evaluations for exp, _ in p.terms})
    index = {exp: j for j, exp in enumerate(columns)}
    zero = field.zero
    rows = []
    for p in evaluations:
        row = [zero] * len(columns)
        for exp, c in p.terms:
            row[index[exp]] = c
        rows.append(row)
    return rows, len(columns)


def _vector_to_polynomial(vector, monomials, labels) -> Polynomial:
    coeffs = {a: c for a, c in zip(monomials, vector) if c}
    return Polynomial.from_dict(labels, coeffs)


def _polynomial_to_vector(poly: Polynomial, index: dict, zero) -> list:
    row = [zero] * len(index)
    for exp, c in poly.terms:
        if exp not in index:
            raise InvariantError("relation multiple leaves the expected degree")
        row[index[exp]] = c
    return row


def kernel_ideal_truncated(
    presentation: Presentation,
    relation_degree: int,
    matrix_cap: int = DEFAULT_MATRIX_CAP,
) -> RelationSet:
    """Minimal generators of the kernel ideal up to the truncation degree.

    In each degree the nullspace of the monomial evaluation matrix is
    computed exactly, multiples of lower-degree relations are projected out,
    and the survivors are put in reduced echelon form, so the output is
    canonical.  Monomial columns are ordered by (value, exponent), which
    places each relation's pivot inside its initial form.
    """
    if relation_degree < 1:
        raise ValidationError("relation truncation degree must be at least 1")
    field = presentation.field
    labels = presentation.labels
    evaluate = _Evaluator(presentation)
    relations: list[Relation] = []
    for degree in range(1, relation_degree + 1):
        monomials = sorted(
            _label_monomials(presentation.grades, degree),
            key=lambda a: _monomial_key(presentation, a),
        )
        if not monomials:
            continue
        evaluations = [evaluate(a) for a in monomials]
        rows, ncols = _matrix_rows(evaluations, field)
        if len(monomials) * max(ncols, 1) > matrix_cap:
            raise ResourceCapError(
                f"matrix cap exceeded in degree {degree}: "
                f"{len(monomials)}x{ncols} > {matrix_cap}"
            )
        transpose = [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]
        kernel = linalg.nullspace(
            transpose, len(monomials), field.one, max_cells=matrix_cap
        )
        if not kernel:
            continue
        mon_index = {a: j for j, a in enumerate(monomials)}
        old_vectors = []
        for rel in relations:
            shift = degree - rel.degree[0]
            for b in _label_monomials(presentation.grades, shift):
                multiple = rel.poly * Polynomial.monomial(labels, b, field.one)
                old_vectors.append(_polynomial_to_vector(multiple, mon_index, field.zero))
        if (len(old_vectors) + len(kernel)) * len(monomials) > matrix_cap:
            raise ResourceCapError(
                f"matrix cap exceeded reducing degree-{degree} relations: "
                f"{len(old_vectors) + len(kernel)}x{len(monomials)} > {matrix_cap}"
            )
        old_rref, old_pivots = linalg.rref(old_vectors, len(monomials))
        fresh = []
        for vec in kernel:
            reduced = linalg.reduce_against(vec, old_rref, old_pivots)
            if any(reduced):
                fresh.append(reduced)
        fresh, _ = linalg.rref(fresh, len(monomials))
        for vec in fresh:
            poly = _vector_to_polynomial(vec, monomials, labels)
            value = min(_monomial_value(presentation, a) for a, _ in poly.terms)
            relations.append(Relation(poly, (degree, value)))
    return RelationSet(tuple(relations), relation_degree)


# ---------------------------------------------------------------------------
# Initial forms and the Rees family.

def initial_form(poly: Polynomial, presentation: Presentation, pi: WeightVector) -> Polynomial:
    """Sum of the terms of maximal total weight under the generator weights."""
    if poly.is_zero:
        raise ValidationError("the zero relation has no initial form")
    weights = [pi.weight(g.degree) for g in presentation.generators]
    term_weight = {
        exp: sum(a * w for a, w in zip(exp, weights)) for exp, _ in poly.terms
    }
    top = max(term_weight.values())
    kept = {exp: c for exp, c in poly.terms if term_weight[exp] == top}
    return Polynomial.from_dict(poly.variables, kept)


def rees_relations(
    relation_set: RelationSet,
    presentation: Presentation,
    pi: WeightVector,
) -> RelationSet:
    """Homogenize each relation into the one-parameter family equation.

    Every term receives the parameter raised to the weight deficit against
    the initial form, so setting the parameter to one recovers the relation
    and setting it to zero leaves the initial form.
    """
    weights = [pi.weight(g.degree) for g in presentation.generators]
    labels = presentation.labels
    rees_vars = labels + (REES_PARAMETER,)
    enriched = []
    for rel in relation_set.relations:
        bar = initial_form(rel.poly, presentation, pi)
        top = sum(a * w for a, w in zip(bar.terms[0][0], weights))
        coeffs = {}
        for exp, c in rel.poly.terms:
            deficit = top - sum(a * w for a, w in zip(exp, weights))
            if deficit < 0:
                raise InvariantError("weight vector fails order preservation")
            coeffs[exp + (deficit,)] = c
        rees = Polynomial.from_dict(rees_vars, coeffs)
        enriched.append(replace(rel, initial=bar, weight=top, rees=rees))
    return RelationSet(tuple(enriched), relation_set.truncation_degree)


def specialize_rees(relation: Relation, presentation: Presentation, tau) -> Polynomial:
    """The family equation at a fixed parameter value, in the labels."""
    if relation.rees is None:
        raise ValidationError("relation has no family form yet")
    labels = presentation.labels
    values = {REES_PARAMETER: Polynomial.constant(labels, tau)}
    return relation.rees.substitute(values, labels)


def fiber_check(
    relation_set: RelationSet,
    presentation: Presentation,
    pi: WeightVector,
    t0,
) -> bool:
    """Whether the fiber at a nonzero parameter is the original ideal.

    Rescaling each label by the parameter raised to its weight must turn
    every specialized family equation into an exact scalar multiple of the
    relation it came from.
    """
    field = presentation.field
    t0 = field(t0)
    if not t0:
        raise ValidationError("fiber parameter must be nonzero; use initial forms at zero")
    labels = presentation.labels
    weights = [pi.weight(g.degree) for g in presentation.generators]
    for rel in relation_set.relations:
        if rel.rees is None or rel.weight is None:
            raise ValidationError("run the family homogenization first")
        values = {
            label: Polynomial.monomial(
                labels,
                tuple(1 if j == i else 0 for j in range(len(labels))),
                t0 ** w,
            )
            for i, (label, w) in enumerate(zip(labels, weights))
        }
        values[REES_PARAMETER] = Polynomial.constant(labels, t0)
        specialized = rel.rees.substitute(values, labels)
        expected = rel.poly.scale(t0 ** rel.weight)
        if specialized != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# Flatness certificates.

@dataclass(frozen=True)
class FlatnessRow:
    degree: int
    quotient_dim: int
    initial_quotient_dim: int
    semigroup_count: int


@dataclass(frozen=True)
class FlatnessReport:
    rows: tuple[FlatnessRow, ...]
    binomial_initial: bool
    verdict: bool
    checked_degree: int


def flatness_report(
    presentation: Presentation,
    relation_set: RelationSet,
    gamma: GradedSemigroup,
    check_degree: int,
    matrix_cap: int = DEFAULT_MATRIX_CAP,
) -> FlatnessReport:
    """Degreewise Hilbert comparison of the generic fiber, the special fiber,
    and the semigroup algebra, plus a binomial-shape check on the special fiber.
    """
    if relation_set.truncation_degree < check_degree:
        raise ValidationError("relations were not computed far enough")
    if gamma.max_degree < check_degree:
        raise ValidationError("semigroup was not built far enough")
    if any(rel.initial is None for rel in relation_set.relations):
        raise ValidationError("initial forms missing; run the homogenization first")
    field = presentation.field
    labels = presentation.labels
    evaluate = _Evaluator(presentation)
    rows = []
    binomial = True
    for degree in range(0, check_degree + 1):
        monomials = sorted(
            _label_monomials(presentation.grades, degree),
            key=lambda a: _monomial_key(presentation, a),
        )
        mon_index = {a: j for j, a in enumerate(monomials)}
        evaluations = [evaluate(a) for a in monomials]
        mat, ncols = _matrix_rows(evaluations, field)
        if len(monomials) * max(ncols, 1) > matrix_cap:
            raise ResourceCapError("matrix cap exceeded in the flatness check")
        quotient_dim = len(linalg.rref(mat, ncols)[0])
        initial_vectors = []
        for rel in relation_set.relations:
            shift = degree - rel.degree[0]
            if shift < 0:
                continue
            for b in _label_monomials(presentation.grades, shift):
                multiple = rel.initial * Polynomial.monomial(labels, b, field.one)
                initial_vectors.append(
                    _polynomial_to_vector(multiple, mon_index, field.zero)
                )
        if len(initial_vectors) * max(len(monomials), 1) > matrix_cap:
            raise ResourceCapError("matrix cap exceeded in the flatness check")
        initial_rref, _ = linalg.rref(initial_vectors, len(monomials))
        for vec in initial_rref:
            support = [(monomials[j], c) for j, c in enumerate(vec) if c]
            two_term = (
                len(support) == 2
                and support[0][1] == field.one
                and support[1][1] == -field.one
                and _monomial_value(presentation, support[0][0])
                == _monomial_value(presentation, support[1][0])
            )
            if not two_term:
                binomial = False
        rows.append(
            FlatnessRow(
                degree,
                quotient_dim,
                len(monomials) - len(initial_rref),
                len(gamma.slice(degree)),
            )
        )
    verdict = all(
        r.quotient_dim == r.initial_quotient_dim == r.semigroup_count for r in rows
    )
    return FlatnessReport(tuple(rows), binomial, verdict, check_degree)


# ---------------------------------------------------------------------------
# End-to-end pipelines.

@dataclass(frozen=True)
class DegenerationReport:
    presentation: Presentation
    weight_vector: WeightVector
    generator_weights: tuple[int, ...]
    relations: RelationSet
    flatness: FlatnessReport
    gamma: GradedSemigroup
    max_degree: int
    relation_degree: int


def weight_vector_for(
    presentation: Presentation, relation_set: RelationSet
) -> WeightVector:
    """Canonical weight vector from relation degree differences and generators."""
    return choose_weight_vector(
        _difference_points(presentation, relation_set),
        dim=len(presentation.generators[0].degree[1]),
    )


def _difference_points(presentation: Presentation, relation_set: RelationSet) -> set:
    pts = {flatten_point(g.degree) for g in presentation.generators}
    for rel in relation_set.relations:
        values = sorted(
            {(_monomial_value(presentation, a)) for a, _ in rel.poly.terms}
        )
        n = rel.degree[0]
        top = flatten_point((n, rel.degree[1]))
        for v in values:
            if v != rel.degree[1]:
                other = flatten_point((n, v))
                pts.add(tuple(x - y for x, y in zip(top, other)))
    return pts


def run_degeneration(
    presentation: Presentation,
    gamma: GradedSemigroup,
    relation_degree: int,
    matrix_cap: int = DEFAULT_MATRIX_CAP,
) -> DegenerationReport:
    kernel = kernel_ideal_truncated(presentation, relation_degree, matrix_cap)
    pi = weight_vector_for(presentation, kernel)
    enriched = rees_relations(kernel, presentation, pi)
    flatness = flatness_report(presentation, enriched, gamma, relation_degree, matrix_cap)
    weights = tuple(pi.weight(g.degree) for g in presentation.generators)
    return DegenerationReport(
        presentation,
        pi,
        weights,
        enriched,
        flatness,
        gamma,
        gamma.max_degree,
        relation_degree,
    )


def default_relation_degree(presentation: Presentation) -> int:
    return 2 * max(presentation.grades)


def degenerate_section_space(
    space: SectionSpace,
    flag: FlagSpec,
    max_degree: int,
    relation_degree: int | None = None,
    cap_monomials: int = DEFAULT_MONOMIAL_CAP,
    matrix_cap: int = DEFAULT_MATRIX_CAP,
) -> DegenerationReport:
    """Full pipeline for a polynomial linear system."""
    presentation = build_presentation(space, flag, max_degree, cap_monomials)
    depth = relation_degree or default_relation_degree(presentation)
    gamma = build_gamma(space, flag, max(max_degree, depth), cap_monomials)
    return run_degeneration(presentation, gamma, depth, matrix_cap)


def degenerate_semigroup(
    generators,
    max_degree: int,
    relation_degree: int | None = None,
    matrix_cap: int = DEFAULT_MATRIX_CAP,
) -> DegenerationReport:
    """Full pipeline for an abstract finitely generated value semigroup."""
    presentation = presentation_from_generators(generators)
    depth = relation_degree or default_relation_degree(presentation)
    gamma = gamma_from_generators(generators, max(max_degree, depth))
    return run_degeneration(presentation, gamma, depth, matrix_cap)


# ---------------------------------------------------------------------------
# Compatibility checks.

@dataclass(frozen=True)
class CompatibilityRecord:
    shared_pi: WeightVector
    body_inclusion: bool
    checked_degree: int
    relation_degree: int


def subsystem_compatibility(
    subsystem: SectionSpace,
    space: SectionSpace,
    flag: FlagSpec,
    max_degree: int,
    relation_degree: int | None = None,
    cap_monomials: int = DEFAULT_MONOMIAL_CAP,
    matrix_cap: int = DEFAULT_MATRIX_CAP,
) -> CompatibilityRecord:
    """A single weight vector valid for both degenerations, plus body inclusion."""
    if not is_subspace(subsystem, space):
        raise ValidationError("the subsystem is not contained in the ambient system")
    pres_big = build_presentation(space, flag, max_degree, cap_monomials)
    pres_small = build_presentation(subsystem, flag, max_degree, cap_monomials)
    depth = relation_degree or max(
        default_relation_degree(pres_big), default_relation_degree(pres_small)
    )
    kernel_big = kernel_ideal_truncated(pres_big, depth, matrix_cap)
    kernel_small = kernel_ideal_truncated(pres_small, depth, matrix_cap)
    union = _difference_points(pres_big, kernel_big) | _difference_points(
        pres_small, kernel_small
    )
    shared_pi = choose_weight_vector(union, dim=flag.dim)
    body_big = okounkov_body_estimate(build_gamma(space, flag, max_degree, cap_monomials))
    body_small = okounkov_body_estimate(
        build_gamma(subsystem, flag, max_degree, cap_monomials)
    )
    inclusion = all(body_big.contains(v) for v in body_small.vertices)
    return CompatibilityRecord(shared_pi, inclusion, max_degree, depth)


@dataclass(frozen=True)
class RestrictionRecord:
    face: RationalPolytope
    restricted_body: RationalPolytope
    match: bool
    checked_degree: int


def flag_restriction_check(
    space: SectionSpace,
    flag: FlagSpec,
    r: int,
    max_degree: int,
    cap_monomials: int = DEFAULT_MONOMIAL_CAP,
) -> RestrictionRecord:
    """Body of the restricted system against the vanishing-coordinate face."""
    if not 0 <= r <= flag.dim:
        raise ValidationError(f"restriction index {r} out of range")
    ambient_body = okounkov_body_estimate(
        build_gamma(space, flag, max_degree, cap_monomials)
    )
    if r == 0:
        return RestrictionRecord(ambient_body, ambient_body, True, max_degree)
    restricted = restricted_system(space, flag, (0,) * r)
    if restricted.is_zero:
        raise ValidationError(
            "every section vanishes on the flag member; restriction undefined"
        )
    if r == flag.dim:
        restricted_body = RationalPolytope(0, ((),), (), 0)
    else:
        rest_flag = FlagSpec(restricted.variables)
        restricted_body = okounkov_body_estimate(
            build_gamma(restricted, rest_flag, max_degree, cap_monomials)
        )
    face = face_restriction(ambient_body, r)
    return RestrictionRecord(
        face, restricted_body, polytopes_equal(face, restricted_body), max_degree
    )
