"""Small independent oracles used by the test suites.

These deliberately avoid the library's own linear algebra and hull code so
expected values are computed along a second, unrelated path.
"""

import itertools
from fractions import Fraction


def solve_exact(matrix, rhs):
    """Plain Gaussian elimination; None when inconsistent or underdetermined."""
    n = len(matrix)
    width = len(matrix[0]) if n else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    row = 0
    pivots = []
    for col in range(width):
        pivot = next((i for i in range(row, n) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        aug[row] = [v / aug[row][col] for v in aug[row]]
        for i in range(n):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    for i in range(row, n):
        if aug[i][-1]:
            return None
    if len(pivots) < width:
        return None
    x = [Fraction(0)] * width
    for r, c in enumerate(pivots):
        x[c] = aug[r][-1]
    return x


def oracle_in_hull(point, points):
    """Caratheodory brute force over all (dim+1)-point subsets."""
    dim = len(point)
    size = min(dim + 1, len(points))
    for subset in itertools.combinations(points, size):
        matrix = [[Fraction(q[i]) for q in subset] for i in range(dim)]
        matrix.append([Fraction(1)] * len(subset))
        sol = solve_exact(matrix, list(point) + [1])
        if sol is not None and all(c >= 0 for c in sol):
            return True
    return False


def oracle_lattice_points(points, dilation):
    """Integer points of the dilated hull by box scan over the oracle test."""
    dim = len(points[0])
    lo = [min(p[i] for p in points) * dilation for i in range(dim)]
    hi = [max(p[i] for p in points) * dilation for i in range(dim)]
    found = set()
    for candidate in itertools.product(
        *(range(int(a), int(b) + 1) for a, b in zip(lo, hi))
    ):
        scaled = tuple(Fraction(c, dilation) for c in candidate)
        if oracle_in_hull(scaled, points):
            found.add(candidate)
    return found


def oracle_sumset_slices(generators, max_degree):
    """Degreewise natural-number combinations of graded generators."""
    dim = len(generators[0][1])
    slices = [{(0,) * dim}]
    for m in range(1, max_degree + 1):
        acc = set()
        for gm, gu in generators:
            if gm <= m:
                for w in slices[m - gm]:
                    acc.add(tuple(a + b for a, b in zip(w, gu)))
        slices.append(acc)
    return slices
