"""Exact rational polytopes: V-representation, H-representation, lattice points.

Hulls are computed over the rationals with no floating point anywhere:
the affine span is reduced first, vertices are filtered with an exact
phase-one simplex, and facets are enumerated from vertex subsets, which
stays cheap because the hulls of interest have few vertices.  Both
representations are cross-validated on construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from .errors import InvariantError, ValidationError
from . import linalg

Point = tuple  # tuple[Fraction, ...]
Halfspace = tuple  # (normal: tuple[int, ...], offset: Fraction), meaning <n, x> <= c


@dataclass(frozen=True)
class RationalPolytope:
    """A bounded convex polytope with matching V- and H-representations.

    `halfspaces` cut out exactly the polytope, including its affine hull
    (lower-dimensional polytopes carry pairs of opposite halfspaces).  The
    empty polytope has `affine_dim` -1 and one infeasible constraint.
    """

    ambient_dim: int
    vertices: tuple[Point, ...]
    halfspaces: tuple[Halfspace, ...]
    affine_dim: int

    @property
    def is_empty(self) -> bool:
        return self.affine_dim < 0

    def contains(self, point) -> bool:
        point = tuple(Fraction(c) for c in point)
        if len(point) != self.ambient_dim:
            raise ValidationError("point has wrong dimension")
        return all(_dot(n, point) <= c for n, c in self.halfspaces)

    def scaled_contains(self, point, k: int) -> bool:
        """Membership of an exact point in the k-fold dilation."""
        point = tuple(Fraction(c) for c in point)
        return all(_dot(n, point) <= k * c for n, c in self.halfspaces)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def empty_polytope(ambient_dim: int) -> RationalPolytope:
    infeasible = ((0,) * ambient_dim, Fraction(-1))
    return RationalPolytope(ambient_dim, (), (infeasible,), -1)


# ---------------------------------------------------------------------------
# Exact linear programming: convex-combination feasibility.

def in_convex_hull(point, points) -> bool:
    """Exact test for membership of `point` in the hull of `points`."""
    points = [tuple(Fraction(c) for c in q) for q in points]
    point = tuple(Fraction(c) for c in point)
    if not points:
        return False
    dim = len(point)
    rows = [[q[i] for q in points] for i in range(dim)]
    rows.append([Fraction(1)] * len(points))
    rhs = list(point) + [Fraction(1)]
    return _phase_one_feasible(rows, rhs)


def _phase_one_feasible(rows: list[list[Fraction]], rhs: list[Fraction]) -> bool:
    """Feasibility of {A x = b, x >= 0} by phase-one simplex with Bland's rule."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    tableau = []
    b = []
    for i in range(m):
        row = list(rows[i])
        bi = rhs[i]
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        tableau.append(row + [Fraction(0)] * m)
        tableau[i][n + i] = Fraction(1)
        b.append(bi)
    basis = [n + i for i in range(m)]
    # reduced costs for minimizing the sum of artificial variables
    cost = [Fraction(0)] * (n + m)
    for j in range(n):
        cost[j] = -sum(tableau[i][j] for i in range(m))
    while True:
        entering = next((j for j in range(n + m) if cost[j] < 0), None)
        if entering is None:
            break
        leaving = None
        best = None
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = b[i] / coeff
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leaving]
                ):
                    best = ratio
                    leaving = i
        if leaving is None:
            raise InvariantError("unbounded phase-one objective")
        pivot = tableau[leaving][entering]
        tableau[leaving] = [v / pivot for v in tableau[leaving]]
        b[leaving] = b[leaving] / pivot
        for i in range(m):
            if i != leaving and tableau[i][entering]:
                f = tableau[i][entering]
                tableau[i] = [a - f * c for a, c in zip(tableau[i], tableau[leaving])]
                b[i] -= f * b[leaving]
        if cost[entering]:
            f = cost[entering]
            cost = [a - f * c for a, c in zip(cost, tableau[leaving])]
        basis[leaving] = entering
    residual = sum((b[i] for i in range(m) if basis[i] >= n), Fraction(0))
    return residual == 0


# ---------------------------------------------------------------------------
# Hull construction.

def _affine_basis(points: list[Point]) -> tuple[Point, list[list[Fraction]]]:
    base = points[0]
    diffs = [[c - b for c, b in zip(p, base)] for p in points[1:]]
    basis, _ = linalg.rref(diffs, len(base))
    return base, basis


def _span_coordinates(points, base, basis) -> list[tuple[Fraction, ...]]:
    """Coordinates of each point in the affine basis (rows of `basis`)."""
    if not basis:
        return [() for _ in points]
    matrix = [[basis[j][i] for j in range(len(basis))] for i in range(len(base))]
    coords = []
    for p in points:
        rhs = [c - b for c, b in zip(p, base)]
        sol = linalg.solve_unique(matrix, rhs)
        if sol is None:
            raise InvariantError("point outside its own affine span")
        coords.append(tuple(sol))
    return coords


def _filter_vertices(coords: list[tuple]) -> list[int]:
    """Indices of extreme points, by exact LP against the surviving set."""
    candidates = list(range(len(coords)))
    for idx in sorted(range(len(coords)), key=lambda i: coords[i]):
        others = [coords[j] for j in candidates if j != idx]
        if idx in candidates and in_convex_hull(coords[idx], others):
            candidates.remove(idx)
    return candidates


def _primitive(normal, offset):
    """Clear denominators and divide by the gcd; orientation is preserved."""
    denoms = [v.denominator for v in normal] + [offset.denominator]
    scale = 1
    for d in denoms:
        scale = scale * d // gcd(scale, d)
    ints = [int(v * scale) for v in normal]
    off = offset * scale
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    g = gcd(g, abs(off.numerator)) if off.denominator == 1 else g
    if g > 1:
        ints = [v // g for v in ints]
        off = off / g
    return tuple(ints), off


def _facets_from_vertices(verts: list[tuple], k: int) -> list[Halfspace]:
    """All facet halfspaces of a full-dimensional hull in dimension k."""
    one = Fraction(1)
    facets: dict = {}
    for subset in itertools.combinations(range(len(verts)), k):
        pts = [verts[i] for i in subset]
        diffs = [[c - b for c, b in zip(p, pts[0])] for p in pts[1:]]
        kernel = linalg.nullspace(diffs, k, one)
        if len(kernel) != 1:
            continue  # affinely degenerate subset, or not a hyperplane
        normal = tuple(kernel[0])
        offset = _dot(normal, pts[0])
        side_low = all(_dot(normal, v) <= offset for v in verts)
        side_high = all(_dot(normal, v) >= offset for v in verts)
        if side_low and not side_high:
            key = _primitive(normal, offset)
        elif side_high and not side_low:
            key = _primitive(tuple(-c for c in normal), -offset)
        else:
            continue  # not supporting, or all vertices on it (degenerate hull)
        facets[key] = True
    return sorted(facets)


def _lift_halfspaces(span_halfspaces, base, basis, ambient_dim):
    """Map halfspace constraints on span coordinates back to ambient space."""
    k = len(basis)
    lifted = []
    if k:
        gram = [[_dot(basis[i], basis[j]) for j in range(k)] for i in range(k)]
        # rows of A recover span coordinates: c_i(x) = <A_i, x - base>
        a_rows = []
        for i in range(k):
            unit = [Fraction(1) if j == i else Fraction(0) for j in range(k)]
            col = linalg.solve_unique(gram, unit)
            if col is None:
                raise InvariantError("affine basis gram matrix is singular")
            a_rows.append([
                sum(col[j] * basis[j][t] for j in range(k)) for t in range(ambient_dim)
            ])
        for normal, offset in span_halfspaces:
            amb = [sum(normal[j] * a_rows[j][t] for j in range(k)) for t in range(ambient_dim)]
            off = offset + _dot(amb, base)
            lifted.append(_primitive(tuple(Fraction(v) for v in amb), Fraction(off)))
    # equalities cutting out the affine hull, as opposite halfspace pairs
    kernel = linalg.nullspace([list(row) for row in basis], ambient_dim, Fraction(1))
    for w in kernel:
        off = _dot(w, base)
        lifted.append(_primitive(tuple(Fraction(v) for v in w), Fraction(off)))
        lifted.append(_primitive(tuple(Fraction(-v) for v in w), Fraction(-off)))
    return sorted(set(lifted))


def convex_hull(points) -> RationalPolytope:
    """Exact convex hull: irredundant vertices plus a validated H-representation."""
    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    if not pts:
        raise ValidationError("convex hull of an empty point set")
    ambient_dim = len(pts[0])
    if any(len(p) != ambient_dim for p in pts):
        raise ValidationError("points of mixed dimension")
    base, basis = _affine_basis(pts)
    k = len(basis)
    coords = _span_coordinates(pts, base, basis)
    if k == 0:
        vertex_ids = [0]
        span_facets: list[Halfspace] = []
    else:
        vertex_ids = _filter_vertices(coords)
        span_facets = _facets_from_vertices([coords[i] for i in vertex_ids], k)
    halfspaces = _lift_halfspaces(span_facets, base, basis, ambient_dim)
    vertices = tuple(sorted(pts[i] for i in vertex_ids))
    poly = RationalPolytope(ambient_dim, vertices, tuple(halfspaces), k)
    _validate(poly)
    return poly


def _validate(poly: RationalPolytope) -> None:
    for v in poly.vertices:
        tight = 0
        for n, c in poly.halfspaces:
            val = _dot(n, v)
            if val > c:
                raise InvariantError("vertex violates a halfspace")
            if val == c:
                tight += 1
        if tight < poly.affine_dim:
            raise InvariantError("vertex tight on too few halfspaces")


def polytope_from_halfspaces(halfspaces, ambient_dim: int) -> RationalPolytope:
    """Vertex enumeration for a bounded halfspace intersection.

    Candidates are the solutions of square tight subsystems; the input must
    describe a bounded set for the result to be meaningful.
    """
    halfspaces = [
        (tuple(Fraction(c) for c in n), Fraction(c0)) for n, c0 in halfspaces
    ]
    if ambient_dim == 0:
        feasible = all(c >= 0 for _, c in halfspaces)
        if not feasible:
            return empty_polytope(0)
        return RationalPolytope(0, ((),), (), 0)
    candidates = set()
    for subset in itertools.combinations(range(len(halfspaces)), ambient_dim):
        matrix = [list(halfspaces[i][0]) for i in subset]
        rhs = [halfspaces[i][1] for i in subset]
        sol = linalg.solve_unique(matrix, rhs)
        if sol is None:
            continue
        point = tuple(sol)
        if all(_dot(n, point) <= c for n, c in halfspaces):
            candidates.add(point)
    if not candidates:
        return empty_polytope(ambient_dim)
    return convex_hull(candidates)


def lattice_points(poly: RationalPolytope, dilation: int = 1) -> set:
    """All integer points of the dilated polytope, by bounding-box scan.

    Cost is proportional to the volume of the bounding box.
    """
    if dilation < 1:
        raise ValidationError("dilation factor must be at least 1")
    if poly.is_empty:
        return set()
    lo = [min(v[i] for v in poly.vertices) * dilation for i in range(poly.ambient_dim)]
    hi = [max(v[i] for v in poly.vertices) * dilation for i in range(poly.ambient_dim)]
    ranges = [range(ceil(a), floor(b) + 1) for a, b in zip(lo, hi)]
    found = set()
    for candidate in itertools.product(*ranges):
        if poly.scaled_contains(candidate, dilation):
            found.add(candidate)
    return found


def face_restriction(poly: RationalPolytope, r: int) -> RationalPolytope:
    """Slice where the first r coordinates vanish, in the last d-r coordinates."""
    if not 0 <= r <= poly.ambient_dim:
        raise ValidationError(f"face index {r} out of range")
    if r == 0:
        return poly
    if poly.is_empty:
        return empty_polytope(poly.ambient_dim - r)
    sliced = [(n[r:], c) for n, c in poly.halfspaces]
    return polytope_from_halfspaces(sliced, poly.ambient_dim - r)


def polytopes_equal(a: RationalPolytope, b: RationalPolytope) -> bool:
    return a.ambient_dim == b.ambient_dim and a.vertices == b.vertices


def normalized_volume(poly: RationalPolytope) -> int:
    """Lattice-normalized volume (dimension factorial times the volume).

    Computed as the top finite difference of the lattice-point counts of the
    first dilations, so it requires integer vertices; full-dimensional
    comparisons across examples use this together with vertex and lattice
    counts.
    """
    if poly.is_empty:
        return 0
    if any(c.denominator != 1 for v in poly.vertices for c in v):
        raise ValidationError("normalized volume needs integer vertices")
    d = poly.affine_dim
    if d == 0:
        return 1
    counts = [1] + [len(lattice_points(poly, k)) for k in range(1, d + 1)]
    total = 0
    sign = 1 if d % 2 == 0 else -1
    binom = 1
    for i in range(d + 1):
        total += sign * binom * counts[i]
        sign = -sign
        binom = binom * (d - i) // (i + 1)
    return total
