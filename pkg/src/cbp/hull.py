"""Exact rational polyhedra and a brute-force facet oracle.

Everything here runs on fractions.Fraction or int; no floats ever enter
the geometry.  Inequality rows are stored as (a, b) meaning a . x <= b,
scaled by the unique positive rational that makes the entries coprime
integers, so two rows describe the same halfspace exactly when their
normalized forms are equal.

The facet oracle converts a full-dimensional point set V into its
irredundant facet list by the double description method on the dual cone
{y in R^(d+1) : y0 + y . v >= 0 for all v in V}: extreme rays of that cone
correspond one-to-one to facets of conv(V).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionCap, DimensionMismatch, NotFullDimensional

Row = tuple[tuple[int, ...], int]

MAX_BRUTE_FORCE_DIM = 10


@dataclass(frozen=True)
class RationalPolyhedron:
    """An intersection of halfspaces a . x <= b with normalized integer rows."""

    dim: int
    rows: tuple[Row, ...]


@dataclass(frozen=True)
class Certificate:
    """Tightness data of one inequality against a vertex list.

    The inequality is facet-defining exactly when the tight vertices have
    affine rank dim-1 and at least one vertex is strictly slack.
    """

    tight_vertex_indices: tuple[int, ...]
    affine_rank: int
    slack_witness: int | None

    def confirms_facet(self, ambient_dim: int) -> bool:
        return self.affine_rank == ambient_dim - 1 and self.slack_witness is not None


def normalize_row(a, b) -> Row:
    """Scale (a, b) by a positive rational to coprime integers."""
    fa = [Fraction(x) for x in a]
    fb = Fraction(b)
    denom = fb.denominator
    for x in fa:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ia = [int(x * denom) for x in fa]
    ib = int(fb * denom)
    g = abs(ib)
    for x in ia:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero row cannot be normalized")
    return tuple(x // g for x in ia), ib // g


def same_hyperplane(r1: Row, r2: Row) -> bool:
    """True when the rows are positive multiples of each other."""
    return normalize_row(*r1) == normalize_row(*r2)


def _echelon_rank(rows: list[list[Fraction]]) -> int:
    """Rank by Gaussian elimination over the rationals; consumes its input."""
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / pv
                for j in range(c, cols):
                    rows[i][j] -= f * rows[r][j]
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


def affine_rank(points) -> int:
    """Dimension of the affine hull of the points (0 for a single point)."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise ValueError("affine_rank requires at least one point")
    dim = len(pts[0])
    for p in pts:
        if len(p) != dim:
            raise DimensionMismatch("points of different dimensions")
    base = pts[0]
    diffs = [[p[j] - base[j] for j in range(dim)] for p in pts[1:]]
    if not diffs:
        return 0
    return _echelon_rank(diffs)


def contains_point(h: RationalPolyhedron, x) -> bool:
    """Exact membership test of a rational point."""
    p = tuple(Fraction(v) for v in x)
    if len(p) != h.dim:
        raise DimensionMismatch(f"point has dimension {len(p)}, polyhedron {h.dim}")
    for a, b in h.rows:
        if sum(c * v for c, v in zip(a, p)) > b:
            return False
    return True


def _primitive(vec: list[int]) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero ray")
    return tuple(x // g for x in vec)


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Matrix inverse by Gauss-Jordan elimination; raises on singularity."""
    n = len(matrix)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if aug[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            raise ValueError("singular matrix")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def brute_force_facets(points, max_dim: int = MAX_BRUTE_FORCE_DIM) -> RationalPolyhedron:
    """Irredundant facet description of the convex hull of the points.

    The points must affinely span the ambient space.  Intended as the
    trusted oracle for small dimensions; the cap keeps runtimes sane.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    dim = len(pts[0])
    for p in pts:
        if len(p) != dim:
            raise DimensionMismatch("points of different dimensions")
    if dim < 1:
        raise NotFullDimensional("ambient dimension must be at least 1")
    if dim > max_dim:
        raise DimensionCap(f"ambient dimension {dim} exceeds cap {max_dim}")
    pts = sorted(set(pts))
    if affine_rank(pts) != dim:
        raise NotFullDimensional("points do not affinely span the ambient space")

    # dual-cone constraint rows (1, v); every valid inequality a.x <= b maps
    # to the cone point y = (b, -a)
    cons = [(Fraction(1),) + p for p in pts]

    # pick an affinely independent seed whose constraint matrix is invertible
    seed_idx: list[int] = []
    seed_rows: list[list[Fraction]] = []
    for i, row in enumerate(cons):
        trial = seed_rows + [list(row)]
        if _echelon_rank([r[:] for r in trial]) == len(trial):
            seed_idx.append(i)
            seed_rows.append(list(row))
        if len(seed_idx) == dim + 1:
            break
    inv = _invert(seed_rows)
    rays: list[tuple[int, ...]] = []
    for j in range(dim + 1):
        col = [inv[i][j] for i in range(dim + 1)]
        denom = 1
        for x in col:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        rays.append(_primitive([int(x * denom) for x in col]))

    processed = list(seed_idx)

    def zero_set(ray: tuple[int, ...]) -> frozenset[int]:
        return frozenset(
            k for k in processed if sum(c * r for c, r in zip(cons[k], ray)) == 0
        )

    for k, row in enumerate(cons):
        if k in seed_idx:
            continue
        vals = [sum(c * r for c, r in zip(row, ray)) for ray in rays]
        if all(v >= 0 for v in vals):
            processed.append(k)
            continue
        zsets = [zero_set(ray) for ray in rays]
        plus = [i for i, v in enumerate(vals) if v > 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        new_rays: list[tuple[int, ...]] = [rays[i] for i in plus + zero]
        for i in plus:
            for j in minus:
                common = zsets[i] & zsets[j]
                adjacent = True
                for t in range(len(rays)):
                    if t != i and t != j and common <= zsets[t]:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = [
                    vals[i] * rays[j][c] - vals[j] * rays[i][c]
                    for c in range(dim + 1)
                ]
                denom = 1
                for x in combo:
                    denom = denom * x.denominator // gcd(denom, x.denominator)
                new_rays.append(_primitive([int(x * denom) for x in combo]))
        processed.append(k)
        # dedupe; combinations from different pairs can coincide
        rays = sorted(set(new_rays))

    rows = []
    for ray in rays:
        b = ray[0]
        a = tuple(-c for c in ray[1:])
        rows.append(normalize_row(a, b))
    rows = sorted(set(rows), key=lambda r: (r[1], r[0]))

    # sanity: every input point satisfies every output row
    for a, b in rows:
        for p in pts:
            if sum(c * v for c, v in zip(a, p)) > b:
                raise AssertionError("facet computation produced a violated row")
    return RationalPolyhedron(dim=dim, rows=tuple(rows))
