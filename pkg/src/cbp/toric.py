"""Toric ideal of the polytope: Groebner basis and unimodular triangulation.

One polynomial variable per connected blockset (the empty set included).
The term order is degree reverse lexicographic over the linear extension
of reverse inclusion that sorts blocksets by cardinality descending and
then lexicographically; larger sets get smaller variables.  The claimed
Groebner basis has one binomial per unordered incomparable pair with
connected union:

    x_A1 * x_A2  -  x_(A1 intersect A2) * x_(A1 union A2)

whose leading term is the incomparable product.  All leading terms being
squarefree quadratics, the initial complex is the flag complex of the
compatibility relation (comparable, or union disconnected), and it is a
regular unimodular triangulation of the polytope whose h-polynomial must
reproduce the h* vector.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AssertionFailure,
    BudgetExceeded,
    LeadingTermMismatch,
    NonUnimodalSimplex,
    ReductionDiverges,
)
from .graphs import BlockDecomposition, graph_to_json
from .vertices import BlockSubset, enumerate_vertices, is_connected_blockset

MAX_GROEBNER_VARIABLES = 60
MAX_REDUCTION_STEPS = 10**6
DEFAULT_FIBER_CAP = 200000

Mono = dict[int, int]  # variable rank -> positive exponent


@dataclass(eq=False)
class TermOrder:
    """Variables by rank; rank 0 is the smallest variable (largest blockset)."""

    variables: tuple[BlockSubset, ...]
    rank: dict[BlockSubset, int]

    def variable_count(self) -> int:
        return len(self.variables)


def make_term_order(d: BlockDecomposition, verts: tuple[BlockSubset, ...] | None = None) -> TermOrder:
    """Cardinality-descending, then lexicographic, over the connected blocksets."""
    if verts is None:
        verts = enumerate_vertices(d)
    ordered = sorted(verts, key=lambda a: (-len(a), a))
    return TermOrder(variables=tuple(ordered), rank={a: i for i, a in enumerate(ordered)})


def mono_degree(m: Mono) -> int:
    return sum(m.values())


def mono_cmp(m1: Mono, m2: Mono) -> int:
    """-1, 0, or 1 as m1 is smaller, equal, or larger in the term order.

    Degree first; on ties scan ranks upward from the smallest variable,
    and the monomial with the larger exponent at the first difference is
    the smaller one (reverse lexicographic).
    """
    d1, d2 = mono_degree(m1), mono_degree(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    for r in sorted(set(m1) | set(m2)):
        e1, e2 = m1.get(r, 0), m2.get(r, 0)
        if e1 != e2:
            return 1 if e1 < e2 else -1
    return 0


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    out = dict(m1)
    for r, e in m2.items():
        out[r] = out.get(r, 0) + e
    return out


def mono_divides(m1: Mono, m2: Mono) -> bool:
    return all(m2.get(r, 0) >= e for r, e in m1.items())


def mono_div(m1: Mono, m2: Mono) -> Mono:
    out = {}
    for r, e in m1.items():
        rest = e - m2.get(r, 0)
        if rest < 0:
            raise ValueError("not divisible")
        if rest:
            out[r] = rest
    return out


def mono_lcm(m1: Mono, m2: Mono) -> Mono:
    out = dict(m1)
    for r, e in m2.items():
        if out.get(r, 0) < e:
            out[r] = e
    return out


def mono_key(m: Mono) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(m.items()))


@dataclass(frozen=True)
class Binomial:
    """A difference of two monomials with disjoint supports, keyed by blockset."""

    plus: tuple[tuple[BlockSubset, int], ...]
    minus: tuple[tuple[BlockSubset, int], ...]

    @staticmethod
    def from_maps(plus: dict[BlockSubset, int], minus: dict[BlockSubset, int]) -> "Binomial":
        return Binomial(tuple(sorted(plus.items())), tuple(sorted(minus.items())))

    def plus_map(self) -> dict[BlockSubset, int]:
        return dict(self.plus)

    def minus_map(self) -> dict[BlockSubset, int]:
        return dict(self.minus)


def _to_rank(m: dict[BlockSubset, int], order: TermOrder) -> Mono:
    return {order.rank[a]: e for a, e in m.items() if e}


def binomial_is_homogeneous(d: BlockDecomposition, f: Binomial) -> bool:
    """Degrees match and the summed indicator vectors agree on both sides."""
    n = len(d.blocks)

    def image(side):
        deg = 0
        total = [0] * n
        for a, e in side:
            deg += e
            for b in a:
                total[b] += e
        return deg, tuple(total)

    return image(f.plus) == image(f.minus)


def groebner_candidates(
    d: BlockDecomposition,
    order: TermOrder | None = None,
    verts: tuple[BlockSubset, ...] | None = None,
) -> tuple[Binomial, ...]:
    """One binomial per unordered incomparable pair with connected union.

    Raises LeadingTermMismatch if some binomial's leading term is not the
    incomparable product, which would contradict the order analysis.
    """
    if verts is None:
        verts = enumerate_vertices(d)
    if order is None:
        order = make_term_order(d, verts)
    out = []
    for a1, a2 in itertools.combinations(verts, 2):
        s1, s2 = frozenset(a1), frozenset(a2)
        if s1 <= s2 or s2 <= s1:
            continue
        if not is_connected_blockset(d, s1 | s2):
            continue
        meet = tuple(sorted(s1 & s2))
        join = tuple(sorted(s1 | s2))
        plus = {a1: 1, a2: 1}
        minus: dict[BlockSubset, int] = {}
        for a in (meet, join):
            minus[a] = minus.get(a, 0) + 1
        f = Binomial.from_maps(plus, minus)
        if mono_cmp(_to_rank(plus, order), _to_rank(minus, order)) <= 0:
            raise LeadingTermMismatch(f"pair {a1}, {a2} does not lead with the product")
        out.append(f)
    out.sort(key=lambda f: mono_key(_to_rank(f.plus_map(), order)))
    return tuple(out)


def _reduce_difference(
    p_plus: Mono,
    p_minus: Mono,
    basis: list[tuple[Mono, Mono]],
    max_steps: int = MAX_REDUCTION_STEPS,
) -> bool:
    """True when the difference p_plus - p_minus reduces to zero.

    The basis entries are (leading, trailing) monomial pairs; reduction
    always uses the dividing element with the smallest leading term, and
    the difference-of-monomials shape is preserved by every step.
    """
    steps = 0
    while True:
        c = mono_cmp(p_plus, p_minus)
        if c == 0:
            return True
        lead, trail = (p_plus, p_minus) if c > 0 else (p_minus, p_plus)
        divisor = None
        for lt, tail in basis:
            if mono_divides(lt, lead):
                divisor = (lt, tail)
                break
        if divisor is None:
            return False
        q = mono_div(lead, divisor[0])
        new_lead = mono_mul(q, divisor[1])
        if c > 0:
            p_plus = new_lead
        else:
            p_minus = new_lead
        steps += 1
        if steps > max_steps:
            raise ReductionDiverges(f"no termination after {max_steps} reduction steps")


def _rank_basis(g: tuple[Binomial, ...], order: TermOrder) -> list[tuple[Mono, Mono]]:
    basis = [(_to_rank(f.plus_map(), order), _to_rank(f.minus_map(), order)) for f in g]
    # smallest leading term first makes the reduction strategy deterministic
    basis.sort(key=functools.cmp_to_key(lambda x, y: mono_cmp(x[0], y[0])))
    return basis


def buchberger_verify(
    g: tuple[Binomial, ...],
    order: TermOrder,
    max_variables: int = MAX_GROEBNER_VARIABLES,
    max_steps: int = MAX_REDUCTION_STEPS,
) -> bool:
    """True when every leading term is squarefree and every S-pair reduces to zero."""
    if order.variable_count() > max_variables:
        raise BudgetExceeded(
            f"{order.variable_count()} variables exceed the cap {max_variables}"
        )
    basis = _rank_basis(g, order)
    for lt, _ in basis:
        if any(e > 1 for e in lt.values()):
            return False
    for (lt1, tail1), (lt2, tail2) in itertools.combinations(basis, 2):
        lcm = mono_lcm(lt1, lt2)
        s_plus = mono_mul(mono_div(lcm, lt2), tail2)
        s_minus = mono_mul(mono_div(lcm, lt1), tail1)
        if not _reduce_difference(s_plus, s_minus, basis, max_steps=max_steps):
            return False
    return True


def fiber_reduction_test(
    d: BlockDecomposition,
    g: tuple[Binomial, ...],
    order: TermOrder,
    maxdeg: int = 3,
    max_monomials: int = DEFAULT_FIBER_CAP,
) -> bool:
    """Differences of equal-image monomials up to maxdeg all reduce to zero.

    Two monomials have equal image when their degrees and summed indicator
    vectors agree; every such difference lies in the toric ideal, so a
    correct basis must reduce it away.
    """
    basis = _rank_basis(g, order)
    n = len(d.blocks)
    nvars = order.variable_count()
    total = 0
    for deg in range(2, maxdeg + 1):
        groups: dict[tuple[int, ...], list[Mono]] = {}
        for combo in itertools.combinations_with_replacement(range(nvars), deg):
            total += 1
            if total > max_monomials:
                raise BudgetExceeded(f"more than {max_monomials} fiber monomials")
            image = [0] * n
            mono: Mono = {}
            for r in combo:
                mono[r] = mono.get(r, 0) + 1
                for b in order.variables[r]:
                    image[b] += 1
            groups.setdefault(tuple(image), []).append(mono)
        for members in groups.values():
            for m1, m2 in itertools.combinations(members, 2):
                if not _reduce_difference(dict(m1), dict(m2), basis):
                    return False
    return True


@dataclass(eq=False)
class SimplicialComplex:
    """Flag complex on the connected blocksets, as non-faces plus facets."""

    ground: tuple[BlockSubset, ...]
    minimal_nonfaces: tuple[tuple[int, int], ...]
    maximal_faces: tuple[tuple[int, ...], ...]


def _compatible(d: BlockDecomposition, a1: BlockSubset, a2: BlockSubset) -> bool:
    s1, s2 = frozenset(a1), frozenset(a2)
    if s1 <= s2 or s2 <= s1:
        return True
    return not is_connected_blockset(d, s1 | s2)


def _det_pm1(rows: list[list[int]]) -> int:
    """Exact determinant via Gaussian elimination over the rationals."""
    n = len(rows)
    mat = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if mat[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            return 0
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            det = -det
        det *= mat[c][c]
        pv = mat[c][c]
        for r in range(c + 1, n):
            if mat[r][c] != 0:
                f = mat[r][c] / pv
                for k in range(c, n):
                    mat[r][k] -= f * mat[c][k]
    assert det.denominator == 1
    return int(det)


def triangulation(
    d: BlockDecomposition,
    g: tuple[Binomial, ...] | None = None,
    order: TermOrder | None = None,
    max_variables: int = MAX_GROEBNER_VARIABLES,
) -> SimplicialComplex:
    """The initial complex of the basis: cliques of the compatibility relation.

    Verifies flagness (every leading term is a squarefree quadratic),
    that every maximal face has exactly dim+1 vertices, and that each
    maximal simplex is unimodular; a bad determinant raises
    NonUnimodalSimplex.
    """
    verts = enumerate_vertices(d)
    if order is None:
        order = make_term_order(d, verts)
    if order.variable_count() > max_variables:
        raise BudgetExceeded(
            f"{order.variable_count()} variables exceed the cap {max_variables}"
        )
    if g is None:
        g = groebner_candidates(d, order, verts)
    ground = order.variables
    index = {a: i for i, a in enumerate(ground)}
    dim = len(d.blocks)

    nonfaces: set[tuple[int, int]] = set()
    for f in g:
        support = [index[a] for a, _ in f.plus]
        exps = [e for _, e in f.plus]
        if sum(exps) != 2 or len(support) != 2:
            raise AssertionFailure(
                "leading term is not a squarefree quadratic",
                payload={"graph": graph_to_json(d.graph), "binomial": str(f)},
            )
        nonfaces.add(tuple(sorted(support)))

    m = len(ground)
    compat = [[True] * m for _ in range(m)]
    for i, j in nonfaces:
        compat[i][j] = compat[j][i] = False
    for i in range(m):
        compat[i][i] = False
    # consistency: the nonface pairs must match the compatibility predicate
    for i in range(m):
        for j in range(i + 1, m):
            if compat[i][j] != _compatible(d, ground[i], ground[j]):
                raise AssertionFailure(
                    "leading terms disagree with the compatibility relation",
                    payload={"graph": graph_to_json(d.graph), "pair": [list(ground[i]), list(ground[j])]},
                )

    maximal: list[tuple[int, ...]] = []

    def extend(clique: list[int], candidates: list[int], banned: list[int]):
        if not candidates and not banned:
            maximal.append(tuple(clique))
            return
        pivot_pool = candidates + banned
        pivot = pivot_pool[0]
        branch = [v for v in candidates if not compat[pivot][v]]
        for v in branch:
            new_cand = [w for w in candidates if compat[v][w]]
            new_ban = [w for w in banned if compat[v][w]]
            extend(clique + [v], new_cand, new_ban)
            candidates = [w for w in candidates if w != v]
            banned = banned + [v]

    extend([], list(range(m)), [])
    maximal.sort()

    for face in maximal:
        if len(face) != dim + 1:
            raise AssertionFailure(
                f"maximal face has {len(face)} vertices, expected {dim + 1}",
                payload={"graph": graph_to_json(d.graph), "face": [list(ground[i]) for i in face]},
            )
        base = ground[face[0]]
        base_vec = [1 if b in base else 0 for b in range(dim)]
        rows = []
        for i in face[1:]:
            vec = [1 if b in ground[i] else 0 for b in range(dim)]
            rows.append([vec[c] - base_vec[c] for c in range(dim)])
        det = _det_pm1(rows)
        if det not in (1, -1):
            raise NonUnimodalSimplex(
                f"simplex {[list(ground[i]) for i in face]} has determinant {det}"
            )

    return SimplicialComplex(
        ground=ground,
        minimal_nonfaces=tuple(sorted(nonfaces)),
        maximal_faces=tuple(maximal),
    )


@dataclass(frozen=True)
class TriangulationReport:
    f_vector: tuple[int, ...]
    h_vector: tuple[int, ...]
    hstar: tuple[int, ...]
    maximal_face_count: int


def triangulation_checks(
    d: BlockDecomposition, c: SimplicialComplex, hstar: tuple[int, ...]
) -> TriangulationReport:
    """Assert h(triangulation) = h* and #maximal faces = sum(h*).

    The f-vector counts cliques of every size (the empty face included);
    the h-vector solves f(t) = sum_i h_i t^i (t+1)^(dim+1-i).
    """
    from math import comb

    dim = len(d.blocks)
    m = len(c.ground)
    compat = [[True] * m for _ in range(m)]
    for i, j in c.minimal_nonfaces:
        compat[i][j] = compat[j][i] = False
    for i in range(m):
        compat[i][i] = False

    counts = [0] * (dim + 2)
    counts[0] = 1

    def count_cliques(start: int, size: int, members: list[int]):
        for v in range(start, m):
            if all(compat[v][w] for w in members):
                counts[size + 1] += 1
                if size + 1 <= dim:
                    members.append(v)
                    count_cliques(v + 1, size + 1, members)
                    members.pop()

    count_cliques(0, 0, [])

    h: list[int] = []
    for k in range(dim + 2):
        acc = counts[k]
        for i, hi in enumerate(h):
            acc -= hi * comb(dim + 1 - i, k - i)
        h.append(acc)
    padded_hstar = tuple(hstar) + (0,) * (dim + 2 - len(hstar))
    report = TriangulationReport(
        f_vector=tuple(counts),
        h_vector=tuple(h),
        hstar=tuple(hstar),
        maximal_face_count=len(c.maximal_faces),
    )
    if tuple(h) != padded_hstar:
        raise AssertionFailure(
            "triangulation h-vector does not match hstar",
            payload={"graph": graph_to_json(d.graph), "h": h, "hstar": list(hstar)},
        )
    if len(c.maximal_faces) != sum(hstar):
        raise AssertionFailure(
            "maximal face count does not match the hstar sum",
            payload={
                "graph": graph_to_json(d.graph),
                "count": len(c.maximal_faces),
                "hstar_sum": sum(hstar),
            },
        )
    return report
