"""Exact convex polytopes over the rationals.

H-representations (inequalities normal . x <= rhs plus equalities), V-representations
(vertex lists), and the conversions between them via the double description method.
Everything is computed over Fraction; output orders are canonical (lexicographic)
so equal polytopes serialize identically.

An empty polytope in H-form is represented by the canonical infeasibility
certificate 0 . x <= -1, the only inequality allowed to carry a zero normal.
This works uniformly in every ambient dimension, including 0.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import (
    Vec,
    ceil_div,
    dot,
    floor_div,
    frac,
    frac_str,
    integer_kernel_basis,
    mat_inverse,
    nullspace,
    primitive_vector,
    rank,
    solve_integer,
    solve_linear,
    transpose,
    vec,
    vec_sub,
)


class UnboundedPolytopeError(ValueError):
    """Raised when an operation that needs a bounded polytope meets a recession ray."""


def _normalize_constraint(normal: Sequence, rhs) -> tuple[Vec, Fraction]:
    return vec(normal), frac(rhs)


@dataclass(frozen=True)
class HPolytope:
    """Intersection of halfspaces (and hyperplanes) in Q^dim.

    Duplicate inequality normals are deduplicated on construction, keeping the
    tighter right-hand side.  A zero normal is rejected unless it is the
    infeasibility certificate (rhs < 0).
    """

    dim: int
    ineqs: tuple[tuple[Vec, Fraction], ...] = ()
    eqs: tuple[tuple[Vec, Fraction], ...] = ()

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("ambient dimension must be >= 0")
        seen: dict[Vec, int] = {}
        ineqs: list[tuple[Vec, Fraction]] = []
        for raw_normal, raw_rhs in self.ineqs:
            normal, rhs = _normalize_constraint(raw_normal, raw_rhs)
            if len(normal) != self.dim:
                raise ValueError("inequality normal has wrong length")
            if all(c == 0 for c in normal) and rhs >= 0:
                raise ValueError("inequality with zero normal (and no infeasibility)")
            if normal in seen:
                at = seen[normal]
                if rhs < ineqs[at][1]:
                    ineqs[at] = (normal, rhs)
            else:
                seen[normal] = len(ineqs)
                ineqs.append((normal, rhs))
        eqs: list[tuple[Vec, Fraction]] = []
        for raw_normal, raw_rhs in self.eqs:
            normal, rhs = _normalize_constraint(raw_normal, raw_rhs)
            if len(normal) != self.dim:
                raise ValueError("equality normal has wrong length")
            if all(c == 0 for c in normal):
                raise ValueError("equality with zero normal")
            if (normal, rhs) not in eqs:
                eqs.append((normal, rhs))
        object.__setattr__(self, "ineqs", tuple(ineqs))
        object.__setattr__(self, "eqs", tuple(eqs))

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "ineqs": [{"a": [frac_str(c) for c in a], "b": frac_str(b)}
                      for a, b in self.ineqs],
            "eqs": [{"a": [frac_str(c) for c in a], "b": frac_str(b)}
                    for a, b in self.eqs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "HPolytope":
        dim = data["dim"]
        if not isinstance(dim, int):
            raise ValueError("dim must be an integer")
        ineqs = tuple((vec(row["a"]), frac(row["b"])) for row in data.get("ineqs", ()))
        eqs = tuple((vec(row["a"]), frac(row["b"])) for row in data.get("eqs", ()))
        return cls(dim, ineqs, eqs)


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of finitely many points, stored in sorted order.

    Producers in this module only store extreme points; use from_points to
    convexify an arbitrary point set.
    """

    dim: int
    vertices: tuple[Vec, ...] = ()

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("ambient dimension must be >= 0")
        verts = sorted({vec(v) for v in self.vertices})
        for v in verts:
            if len(v) != self.dim:
                raise ValueError("vertex has wrong length")
        object.__setattr__(self, "vertices", tuple(verts))

    @classmethod
    def from_points(cls, dim: int, points: Iterable[Sequence]) -> "VPolytope":
        """Convex hull of the points, keeping extreme points only."""
        staged = cls(dim, tuple(tuple(frac(c) for c in p) for p in points))
        if not staged.vertices:
            return staged
        return h_to_v(v_to_h(staged))

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "vertices": [[frac_str(c) for c in v] for v in self.vertices],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "VPolytope":
        dim = data["dim"]
        if not isinstance(dim, int):
            raise ValueError("dim must be an integer")
        return cls(dim, tuple(vec(v) for v in data.get("vertices", ())))


@dataclass(frozen=True)
class AffineMap:
    """x -> matrix @ x + offset, exact over the rationals."""

    domain_dim: int
    codomain_dim: int
    matrix: tuple[Vec, ...]
    offset: Vec

    def __post_init__(self):
        matrix = tuple(vec(row) for row in self.matrix)
        offset = vec(self.offset)
        if len(matrix) != self.codomain_dim or len(offset) != self.codomain_dim:
            raise ValueError("matrix/offset rows must match the codomain dimension")
        for row in matrix:
            if len(row) != self.domain_dim:
                raise ValueError("matrix columns must match the domain dimension")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "offset", offset)

    def apply(self, point: Sequence) -> Vec:
        x = vec(point)
        if len(x) != self.domain_dim:
            raise ValueError("point has wrong dimension")
        return tuple(dot(row, x) + c for row, c in zip(self.matrix, self.offset))

    @property
    def is_injective(self) -> bool:
        return rank(self.matrix) == self.domain_dim

    @classmethod
    def identity(cls, dim: int) -> "AffineMap":
        rows = tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim))
        return cls(dim, dim, rows, tuple(Fraction(0) for _ in range(dim)))

    def to_json_dict(self) -> dict:
        return {
            "domain_dim": self.domain_dim,
            "codomain_dim": self.codomain_dim,
            "matrix": [[frac_str(c) for c in row] for row in self.matrix],
            "offset": [frac_str(c) for c in self.offset],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "AffineMap":
        return cls(
            data["domain_dim"], data["codomain_dim"],
            tuple(vec(row) for row in data["matrix"]), vec(data["offset"]),
        )


def empty_hrep(dim: int) -> HPolytope:
    """Canonical infeasible system: 0 . x <= -1."""
    zero = tuple(Fraction(0) for _ in range(dim))
    return HPolytope(dim, ((zero, Fraction(-1)),), ())


def _idot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


class _NotPointedError(Exception):
    pass


def _dd_extreme_rays(rows: list[tuple[int, ...]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {y : row . y >= 0 for every row}.

    Incremental double description: a simplicial start from the first
    linearly independent rows, then one inequality at a time with the
    combinatorial adjacency test.  Raises _NotPointedError when the rows do
    not span (the cone contains a line).
    """
    basis_idx: list[int] = []
    basis_rows: list[tuple[int, ...]] = []
    for idx, row in enumerate(rows):
        if len(basis_rows) == dim:
            break
        if rank(basis_rows + [row]) > len(basis_rows):
            basis_idx.append(idx)
            basis_rows.append(row)
    if len(basis_rows) < dim:
        raise _NotPointedError
    inv = mat_inverse(basis_rows)
    rays: list[tuple[int, ...]] = [primitive_vector(col) for col in transpose(inv)]
    processed: list[int] = list(basis_idx)

    def zero_sets_of(ray_list: list[tuple[int, ...]]) -> list[frozenset[int]]:
        return [frozenset(i for i in processed if _idot(rows[i], r) == 0)
                for r in ray_list]

    zsets = zero_sets_of(rays)

    def adjacent(pi: int, qi: int) -> bool:
        common = zsets[pi] & zsets[qi]
        if len(common) < dim - 2:
            return False
        for si in range(len(rays)):
            if si in (pi, qi):
                continue
            if common <= zsets[si]:
                return False
        return True

    in_basis = set(basis_idx)
    for idx, row in enumerate(rows):
        if idx in in_basis:
            continue
        vals = [_idot(row, r) for r in rays]
        if any(v < 0 for v in vals):
            kept = [i for i in range(len(rays)) if vals[i] >= 0]
            fresh: list[tuple[int, ...]] = []
            for pi in range(len(rays)):
                if vals[pi] <= 0:
                    continue
                for qi in range(len(rays)):
                    if vals[qi] >= 0 or not adjacent(pi, qi):
                        continue
                    p, q = rays[pi], rays[qi]
                    combo = tuple(vals[pi] * qc - vals[qi] * pc for pc, qc in zip(p, q))
                    fresh.append(primitive_vector(combo))
            rays = [rays[i] for i in kept] + fresh
        processed.append(idx)
        zsets = zero_sets_of(rays)
    return rays


def _homogeneous_rows(P: HPolytope) -> list[tuple[int, ...]]:
    rows = {tuple([1] + [0] * P.dim)}
    for a, b in P.ineqs:
        rows.add(primitive_vector((b,) + tuple(-c for c in a)))
    for e, f in P.eqs:
        rows.add(primitive_vector((f,) + tuple(-c for c in e)))
        rows.add(primitive_vector((-f,) + tuple(c for c in e)))
    return sorted(rows)


def _has_positive_t_direction(rows: list[tuple[int, ...]]) -> bool:
    """Whether the cone {y : row . y >= 0} reaches t > 0 (first coordinate).

    Used when the cone has a lineality space: the constraint functionals are
    pushed down to the quotient (where the cone is pointed) and the t
    functional, one of the rows, is evaluated on the quotient's extreme rays.
    """
    basis: list[tuple[int, ...]] = []
    for row in rows:
        if rank(basis + [row]) > len(basis):
            basis.append(row)
    r = len(basis)
    gram = [[Fraction(_idot(a, b)) for b in basis] for a in basis]
    ginv = mat_inverse(gram)
    quotient: dict[tuple[int, ...], tuple[Fraction, ...]] = {}
    for row in rows:
        proj = tuple(Fraction(_idot(b, row)) for b in basis)
        quotient[row] = tuple(dot(g_row, proj) for g_row in ginv)
    qrows = sorted({primitive_vector(c) for c in quotient.values()})
    rays = _dd_extreme_rays(qrows, r)
    t_row = rows[rows.index(tuple([1] + [0] * (len(rows[0]) - 1)))]
    t_func = quotient[t_row]
    return any(dot(t_func, tuple(Fraction(c) for c in ray)) > 0 for ray in rays)


@functools.lru_cache(maxsize=512)
def h_to_v(P: HPolytope) -> VPolytope:
    """Vertex enumeration of a bounded H-polytope (double description).

    Raises UnboundedPolytopeError when the feasible set is nonempty and has a
    recession direction.  Returns the empty VPolytope exactly when P is empty.
    """
    rows = _homogeneous_rows(P)
    try:
        rays = _dd_extreme_rays(rows, P.dim + 1)
    except _NotPointedError:
        # The homogenization has a lineality space (always at t = 0, since the
        # t >= 0 row is present).  Feasible then means unbounded.
        if _has_positive_t_direction(rows):
            raise UnboundedPolytopeError(
                "polytope is unbounded (recession line); bounded input required"
            ) from None
        return VPolytope(P.dim, ())
    vertices = []
    recession = False
    for ray in rays:
        t = ray[0]
        if t == 0:
            recession = True
        elif t < 0:
            raise AssertionError("homogenization row t >= 0 violated")
        else:
            vertices.append(tuple(Fraction(c, t) for c in ray[1:]))
    if vertices and recession:
        raise UnboundedPolytopeError(
            "polytope is unbounded (recession ray); bounded input required")
    return VPolytope(P.dim, tuple(vertices))


def _joint_primitive(normal: Sequence[Fraction], rhs: Fraction) -> tuple[Vec, Fraction]:
    """Scale (normal, rhs) by a positive rational to coprime integers."""
    combined = primitive_vector(tuple(normal) + (rhs,))
    return tuple(Fraction(c) for c in combined[:-1]), Fraction(combined[-1])


def _affine_hull_equalities(verts: Sequence[Vec], dim: int) -> tuple[tuple[Vec, Fraction], ...]:
    space = nullspace([v + (Fraction(1),) for v in verts], dim + 1)
    eqs = []
    for z in space:
        prim = primitive_vector(z)
        lead = next((c for c in prim[:-1] if c != 0), None)
        if lead is None:
            continue
        if lead < 0:
            prim = tuple(-c for c in prim)
        eqs.append((tuple(Fraction(c) for c in prim[:-1]), Fraction(-prim[-1])))
    return tuple(sorted(eqs))


@functools.lru_cache(maxsize=512)
def v_to_h(V: VPolytope) -> HPolytope:
    """Irredundant facet system plus affine-hull equalities of conv(V).

    Facets are found as extreme rays of the dual cone inside an exact affine
    chart of the hull, then pulled back; the output is canonically ordered and
    scaled (coprime integer rows).
    """
    d = V.dim
    verts = V.vertices
    if not verts:
        return empty_hrep(d)
    eqs = _affine_hull_equalities(verts, d)
    v0 = verts[0]
    basis: list[Vec] = []
    for v in verts[1:]:
        cand = vec_sub(v, v0)
        if rank(basis + [cand]) > len(basis):
            basis.append(cand)
    k = len(basis)
    if k == 0:
        return HPolytope(d, (), eqs)
    u_cols = basis                      # chart: x = v0 + sum y_i * u_cols[i]
    u_t = u_cols                        # rows of U^T
    gram = [[dot(a, b) for b in u_cols] for a in u_cols]
    gram_inv = mat_inverse(gram)
    w_rows = [tuple(dot(g_row, col) for col in zip(*u_t)) for g_row in gram_inv]
    # w_rows is (U^T U)^{-1} U^T, a left inverse of U: y = W (x - v0).
    dual_rows = set()
    for v in verts:
        delta = vec_sub(v, v0)
        y = tuple(dot(w, delta) for w in w_rows)
        dual_rows.add(primitive_vector((Fraction(1),) + y))
    rays = _dd_extreme_rays(sorted(dual_rows), k + 1)
    ineqs = []
    for z in rays:
        c_chart = z[1:]
        if all(c == 0 for c in c_chart):
            continue
        a_amb = tuple(
            sum(Fraction(-c_chart[i]) * w_rows[i][j] for i in range(k))
            for j in range(d)
        )
        rhs = Fraction(z[0]) + dot(a_amb, v0)
        ineqs.append(_joint_primitive(a_amb, rhs))
    return HPolytope(d, tuple(sorted(ineqs)), eqs)


def remove_redundant(P: HPolytope) -> HPolytope:
    """Minimal subsystem defining the same set.

    Retains original inequality objects (first match per facet) so an
    already-irredundant system passes through unchanged; equalities come out
    in canonical affine-hull form.  Idempotent.  An empty polytope yields the
    canonical infeasibility certificate.
    """
    V = h_to_v(P)
    if not V.vertices:
        return empty_hrep(P.dim)
    canon = v_to_h(V)
    facet_keys = {(_joint_primitive(a, b)) for a, b in canon.ineqs}
    retained: list[tuple[Vec, Fraction]] = []
    covered = set()
    for a, b in P.ineqs:
        if all(c == 0 for c in a):
            continue
        key = _joint_primitive(a, b)
        if key in facet_keys and key not in covered:
            covered.add(key)
            retained.append((a, b))
    for a, b in canon.ineqs:
        key = _joint_primitive(a, b)
        if key not in covered:
            covered.add(key)
            retained.append((a, b))
    return HPolytope(P.dim, tuple(retained), canon.eqs)


def contains(P: HPolytope, point: Sequence) -> bool:
    x = vec(point)
    if len(x) != P.dim:
        raise ValueError("point has wrong dimension")
    for a, b in P.ineqs:
        if dot(a, x) > b:
            return False
    for e, f in P.eqs:
        if dot(e, x) != f:
            return False
    return True


def polytope_dim(P: HPolytope) -> int:
    """Dimension of the affine hull; -1 for the empty polytope."""
    verts = h_to_v(P).vertices
    if not verts:
        return -1
    v0 = verts[0]
    return rank([vec_sub(v, v0) for v in verts[1:]])


def _int_constraint(normal: Sequence[Fraction], rhs: Fraction) -> tuple[tuple[int, ...], int]:
    prim = primitive_vector(tuple(normal) + (rhs,)) if (any(c != 0 for c in normal) or rhs != 0) \
        else tuple([0] * len(normal)) + (0,)
    return prim[:-1], prim[-1]


def _scan_integer_points(rows: list[tuple[tuple[int, ...], int]],
                         lo: list[int], hi: list[int]) -> list[tuple[int, ...]]:
    """Integer points in the box [lo, hi] satisfying coeffs . x <= rhs rows.

    Depth-first over coordinates in order, narrowing the active coordinate's
    range with every row whose trailing nonzero coordinate is the active one.
    Output is in lexicographic order.
    """
    d = len(lo)
    if any(l > h for l, h in zip(lo, hi)):
        return []
    rows_at: list[list[tuple[tuple[int, ...], int, tuple[int, ...]]]] = [[] for _ in range(d)]
    for coeffs, rhs in rows:
        support = tuple(j for j in range(d) if coeffs[j])
        if not support:
            if rhs < 0:
                return []
            continue
        rows_at[support[-1]].append((coeffs, rhs, support[:-1]))
    if d == 0:
        return [()]
    out: list[tuple[int, ...]] = []
    x = [0] * d

    def descend(j: int) -> None:
        lo_j, hi_j = lo[j], hi[j]
        for coeffs, rhs, prefix in rows_at[j]:
            s = rhs - sum(coeffs[k] * x[k] for k in prefix)
            c = coeffs[j]
            if c > 0:
                hi_j = min(hi_j, floor_div(s, c))
            else:
                lo_j = max(lo_j, ceil_div(-s, -c))
            if lo_j > hi_j:
                return
        if j == d - 1:
            head = tuple(x[:j])
            out.extend(head + (xj,) for xj in range(lo_j, hi_j + 1))
            return
        for xj in range(lo_j, hi_j + 1):
            x[j] = xj
            descend(j + 1)

    descend(0)
    return out


def lattice_points(P: HPolytope, dilate: int = 1) -> list[tuple[int, ...]]:
    """All integer x with x/dilate in P, in lexicographic order.

    Explicit equalities are eliminated through an integer chart of their
    solution lattice first, so lower-dimensional systems scan a box of the
    right dimension.
    """
    if not isinstance(dilate, int) or dilate < 1:
        raise ValueError("dilate must be a positive integer")
    V = h_to_v(P)
    if not V.vertices:
        return []
    if P.dim == 0:
        return [()]
    if P.eqs:
        return _lattice_points_with_equalities(P, dilate)
    rows = [_int_constraint(a, dilate * b) for a, b in P.ineqs]
    lo = [min(v[j] * dilate for v in V.vertices) for j in range(P.dim)]
    hi = [max(v[j] * dilate for v in V.vertices) for j in range(P.dim)]
    lo_i = [ceil_div(f.numerator, f.denominator) for f in lo]
    hi_i = [floor_div(f.numerator, f.denominator) for f in hi]
    return _scan_integer_points(rows, lo_i, hi_i)


def _lattice_points_with_equalities(P: HPolytope, dilate: int) -> list[tuple[int, ...]]:
    d = P.dim
    eq_rows = []
    eq_rhs = []
    for e, f in P.eqs:
        coeffs, rhs = _int_constraint(e, f)
        eq_rows.append(coeffs)
        eq_rhs.append(rhs * dilate)
    x0 = solve_integer(eq_rows, eq_rhs)
    if x0 is None:
        return []
    kernel = integer_kernel_basis(eq_rows, d)
    k = len(kernel)
    chart_ineqs = []
    for a, b in P.ineqs:
        coeffs = tuple(dot(a, tuple(Fraction(c) for c in basis_vec)) for basis_vec in kernel)
        rhs = dilate * b - dot(a, tuple(Fraction(c) for c in x0))
        if all(c == 0 for c in coeffs):
            if rhs < 0:
                return []
            continue
        chart_ineqs.append((coeffs, rhs))
    if k == 0:
        return [x0]
    chart = HPolytope(k, tuple(chart_ineqs), ())
    chart_verts = h_to_v(chart).vertices
    if not chart_verts:
        return []
    rows = [_int_constraint(a, b) for a, b in chart.ineqs]
    lo = []
    hi = []
    for j in range(k):
        mn = min(v[j] for v in chart_verts)
        mx = max(v[j] for v in chart_verts)
        lo.append(ceil_div(mn.numerator, mn.denominator))
        hi.append(floor_div(mx.numerator, mx.denominator))
    points = []
    for y in _scan_integer_points(rows, lo, hi):
        xpt = tuple(x0[i] + sum(y[j] * kernel[j][i] for j in range(k)) for i in range(d))
        points.append(xpt)
    return sorted(points)


@functools.lru_cache(maxsize=512)
def _vertex_graph(P: HPolytope):
    """Vertices of P plus the edge adjacency between them.

    Two vertices are adjacent iff the constraints tight at both span a space
    of rank dim - 1 (their minimal common face is a segment); valid whether or
    not the system is irredundant or full-dimensional.
    """
    verts = h_to_v(P).vertices
    d = P.dim
    eq_normals = [e for e, _ in P.eqs]
    active = []
    for v in verts:
        active.append(frozenset(
            i for i, (a, b) in enumerate(P.ineqs) if dot(a, v) == b))
    neighbors: dict[int, list[int]] = {i: [] for i in range(len(verts))}
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            common = active[i] & active[j]
            normals = eq_normals + [P.ineqs[kdx][0] for kdx in sorted(common)]
            if rank(normals) == d - 1:
                neighbors[i].append(j)
                neighbors[j].append(i)
    return verts, neighbors


def edges_at_vertex(P: HPolytope, vertex: Sequence) -> tuple[tuple[int, ...], ...]:
    """Primitive edge directions leaving the given vertex, sorted."""
    v = vec(vertex)
    verts, neighbors = _vertex_graph(P)
    try:
        idx = verts.index(v)
    except ValueError:
        raise ValueError(f"{tuple(map(str, v))} is not a vertex of this polytope") from None
    dirs = [primitive_vector(vec_sub(verts[j], v)) for j in neighbors[idx]]
    return tuple(sorted(dirs))


def affine_image(P: HPolytope | VPolytope, f: AffineMap) -> HPolytope | VPolytope:
    """Image polytope under an exact affine map.

    V input maps vertices and re-extremizes.  H input requires an injective
    map; a square map transforms the constraint system directly, otherwise the
    image is rebuilt from vertices (equalities then carry the affine hull).
    """
    if isinstance(P, VPolytope):
        if P.dim != f.domain_dim:
            raise ValueError("map domain does not match the polytope dimension")
        return VPolytope.from_points(f.codomain_dim, [f.apply(v) for v in P.vertices])
    if P.dim != f.domain_dim:
        raise ValueError("map domain does not match the polytope dimension")
    if not f.is_injective:
        raise ValueError("H-representation image needs an injective affine map")
    if f.domain_dim == f.codomain_dim:
        minv = mat_inverse(f.matrix)
        minv_cols = list(zip(*minv))
        ineqs = []
        for a, b in P.ineqs:
            a_new = tuple(dot(a, col) for col in minv_cols)  # a M^{-1}
            ineqs.append((a_new, b + dot(a_new, f.offset)))
        eqs = []
        for e, g in P.eqs:
            e_new = tuple(dot(e, col) for col in minv_cols)
            eqs.append((e_new, g + dot(e_new, f.offset)))
        return HPolytope(f.codomain_dim, tuple(ineqs), tuple(eqs))
    verts = h_to_v(P).vertices
    if not verts:
        return empty_hrep(f.codomain_dim)
    return v_to_h(VPolytope.from_points(f.codomain_dim, [f.apply(v) for v in verts]))


def restrict_to_affine_hull(P: HPolytope) -> tuple[HPolytope, AffineMap]:
    """Chart P into the solution lattice of its explicit equalities.

    Returns (chart polytope without equalities, affine embedding back into
    ambient space).  The chart basis is an integer kernel-lattice basis, and
    the offset is integral whenever the equality system has an integer
    solution, so lattice structure is preserved in that case.  Implicit
    equalities are not detected; canonicalize with remove_redundant first.
    """
    if not P.eqs:
        return P, AffineMap.identity(P.dim)
    d = P.dim
    eq_rows = []
    eq_rhs = []
    for e, f in P.eqs:
        coeffs, rhs = _int_constraint(e, f)
        eq_rows.append(coeffs)
        eq_rhs.append(rhs)
    x0_int = solve_integer(eq_rows, eq_rhs)
    if x0_int is not None:
        x0 = tuple(Fraction(c) for c in x0_int)
    else:
        status, sol = solve_linear(eq_rows, eq_rhs)
        if status == "no solution":
            raise ValueError("equality system is infeasible")
        if status == "unique":
            x0 = sol
        else:
            x0 = _particular_solution(eq_rows, eq_rhs)
    kernel = integer_kernel_basis(eq_rows, d)
    k = len(kernel)
    chart_ineqs = []
    for a, b in P.ineqs:
        coeffs = tuple(dot(a, tuple(Fraction(c) for c in kv)) for kv in kernel)
        rhs = b - dot(a, x0)
        if all(c == 0 for c in coeffs):
            if rhs < 0:
                return empty_hrep(k), AffineMap(
                    k, d, tuple(tuple(Fraction(kv[i]) for kv in kernel) for i in range(d)), x0)
            continue
        chart_ineqs.append(_joint_primitive(coeffs, rhs))
    matrix = tuple(tuple(Fraction(kv[i]) for kv in kernel) for i in range(d))
    return HPolytope(k, tuple(chart_ineqs), ()), AffineMap(k, d, matrix, x0)


def _particular_solution(rows: Sequence[Sequence], rhs: Sequence) -> Vec:
    """Any rational solution of a consistent system (free variables at 0)."""
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    aug = [[frac(v) for v in row] + [frac(b)] for row, b in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [a / pv for a in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                fct = aug[i][c]
                aug[i] = [a - fct * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][ncols] != 0:
            raise ValueError("equality system is infeasible")
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncols]
    return tuple(x)


def canonical_incidence(n_left: int, left_labels: Sequence | None,
                        right_sets: Sequence[frozenset[int]]) -> str:
    """Canonical encoding of a bipartite incidence structure.

    Left items may be permuted (respecting their labels); right items carry no
    identity beyond their left-neighbor sets.  Two structures get equal
    encodings iff they are isomorphic, via color refinement with
    individualization backtracking (exact at this problem scale).
    """
    labels = list(left_labels) if left_labels is not None else [0] * n_left
    rights = [frozenset(s) for s in right_sets]

    def refine(colors: list[int]) -> list[int]:
        while True:
            keys = []
            for i in range(n_left):
                incident = sorted(
                    tuple(sorted(colors[j] for j in s)) for s in rights if i in s)
                keys.append((colors[i], tuple(incident)))
            ranking = {key: pos for pos, key in enumerate(sorted(set(keys)))}
            new_colors = [ranking[k] for k in keys]
            if new_colors == colors:
                return colors
            colors = new_colors

    def encode(colors: list[int]) -> str:
        order = sorted(range(n_left), key=lambda i: colors[i])
        pos = {item: p for p, item in enumerate(order)}
        left_part = ",".join(repr(labels[i]) for i in order)
        right_part = "|".join(sorted(
            ",".join(str(pos[j]) for j in sorted(s, key=lambda j: pos[j]))
            for s in rights))
        return f"L[{left_part}];R[{right_part}]"

    def search(colors: list[int]) -> str:
        colors = refine(colors)
        classes: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            classes.setdefault(c, []).append(i)
        tied = [members for _, members in sorted(classes.items()) if len(members) > 1]
        if not tied:
            return encode(colors)
        members = tied[0]
        best = None
        fresh = max(colors) + 1
        for i in members:
            branched = list(colors)
            branched[i] = fresh
            cand = search(branched)
            if best is None or cand < best:
                best = cand
        return best

    if n_left == 0:
        return "L[];R[" + "|".join(sorted(",".join(map(str, sorted(s))) for s in rights)) + "]"
    init = {lab: r for r, lab in enumerate(sorted(set(map(repr, labels))))}
    return search([init[repr(lab)] for lab in labels])


def combinatorial_fingerprint(P: HPolytope) -> str:
    """Canonical form of the vertex-facet incidence (atom-coatom) structure.

    Equal fingerprints iff the face lattices are isomorphic: for polytopes the
    vertex-facet incidences determine the whole face lattice.
    """
    V = h_to_v(P)
    if not V.vertices:
        return "dim=-1;empty"
    H = v_to_h(V)
    facets = H.ineqs
    vert_sets = []
    for v in V.vertices:
        vert_sets.append(frozenset(
            i for i, (a, b) in enumerate(facets) if dot(a, v) == b))
    enc = canonical_incidence(len(facets), None, vert_sets)
    return f"dim={polytope_dim(P)};facets={len(facets)};vertices={len(V.vertices)};{enc}"
