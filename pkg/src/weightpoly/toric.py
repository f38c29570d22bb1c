"""Vertex fans, singularity classification, and facet naming.

For a full-dimensional lattice-rational polytope, each vertex spans a cone on
its primitive inward edge directions.  The toric variety this fan describes is
smooth at a vertex exactly when those directions form a lattice basis; a
simplicial cone of lattice index k >= 2 is a cyclic quotient of order k, and
cones with more than dim rays are reported as non-simplicial, never refined.

Facets of the m=1 diagonal polytopes are matched against the fixed catalogue
of supporting hyperplanes x_1 = r_1 +- r_2, x_{i-1} +- x_{i-2} = r_i,
x_{n-3} = r_{n-1} +- r_n, and labeled N1/N2/N3 by index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .builders import SideData
from .exact import Vec, frac_str, lattice_index, primitive_vector, vec
from .polytopes import (
    HPolytope,
    _joint_primitive,
    _vertex_graph,
    canonical_incidence,
    polytope_dim,
)


@dataclass(frozen=True)
class Cone:
    """A cone spanned by primitive, pairwise non-parallel integer rays."""

    rays: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rays = tuple(tuple(int(c) for c in ray) for ray in self.rays)
        for ray in rays:
            if primitive_vector(ray) != ray:
                raise ValueError("cone rays must be primitive integer vectors")
        for i in range(len(rays)):
            for j in range(i + 1, len(rays)):
                if rays[i] == rays[j] or rays[i] == tuple(-c for c in rays[j]):
                    raise ValueError("cone rays must be pairwise non-parallel")
        object.__setattr__(self, "rays", rays)


@dataclass(frozen=True)
class Fan:
    """One maximal cone per vertex of the source polytope, tagged with it."""

    ambient_dim: int
    maximal_cones: tuple[tuple[Vec, Cone], ...]

    def __post_init__(self):
        cones = tuple((vec(v), c) for v, c in self.maximal_cones)
        for v, c in cones:
            if len(v) != self.ambient_dim:
                raise ValueError("cone vertex has wrong dimension")
            for ray in c.rays:
                if len(ray) != self.ambient_dim:
                    raise ValueError("cone ray has wrong dimension")
        object.__setattr__(self, "maximal_cones", cones)


@dataclass(frozen=True)
class VertexSingularity:
    """Local classification at one vertex: smooth, cyclic quotient, or worse."""

    vertex: Vec
    kind: str                   # "smooth" | "cyclic_quotient" | "non_simplicial"
    index: int

    @property
    def label(self) -> str:
        if self.kind == "cyclic_quotient":
            return f"cyclic_quotient({self.index})"
        return self.kind

    @property
    def json_status(self) -> str:
        return {"smooth": "smooth", "cyclic_quotient": "cyclic",
                "non_simplicial": "nonsimplicial"}[self.kind]


@dataclass(frozen=True)
class SingularityReport:
    entries: tuple[VertexSingularity, ...]

    @property
    def singular(self) -> tuple[VertexSingularity, ...]:
        return tuple(e for e in self.entries if e.kind != "smooth")

    @property
    def is_smooth(self) -> bool:
        return not self.singular

    def to_json_dict(self) -> dict:
        return {"vertices": [
            {"vertex": [frac_str(c) for c in e.vertex],
             "status": e.json_status, "index": e.index}
            for e in self.entries]}


@dataclass(frozen=True)
class FacetLabel:
    """A facet inequality together with every catalogue tag it matches."""

    normal: Vec
    rhs: Fraction
    tags: tuple[str, ...]


def normal_fan(P: HPolytope) -> Fan:
    """The fan of vertex tangent cones (primitive inward edge directions).

    Requires a bounded, full-dimensional polytope; cones are ordered by vertex
    and there is exactly one per vertex.
    """
    if polytope_dim(P) != P.dim:
        raise ValueError("restrict to affine hull first")
    verts, neighbors = _vertex_graph(P)
    cones = []
    for i, v in enumerate(verts):
        rays = tuple(sorted(
            primitive_vector(tuple(w - u for u, w in zip(v, verts[j])))
            for j in neighbors[i]))
        if len(rays) < P.dim:
            raise AssertionError("vertex with fewer edges than the dimension")
        cones.append((v, Cone(rays)))
    return Fan(P.dim, tuple(cones))


def singularity_report(F: Fan) -> SingularityReport:
    """Classify each maximal cone: lattice-basis rays are smooth, simplicial
    cones of index k >= 2 are cyclic quotients of order k, and cones with more
    rays than the dimension are non-simplicial (index still reported for the
    lattice their rays generate)."""
    entries = []
    for v, cone in F.maximal_cones:
        idx = lattice_index(cone.rays, F.ambient_dim)
        if len(cone.rays) > F.ambient_dim:
            kind = "non_simplicial"
        elif idx == 1:
            kind = "smooth"
        else:
            kind = "cyclic_quotient"
        entries.append(VertexSingularity(v, kind, idx))
    return SingularityReport(tuple(entries))


def _catalogue(s: SideData) -> list[tuple[str, tuple[Vec, Fraction]]]:
    n, r = s.n, s.r
    d = n - 3

    def row(entries: dict[int, int], rhs) -> tuple[Vec, Fraction]:
        normal = [Fraction(0)] * d
        for j, c in entries.items():
            normal[j] = Fraction(c)
        return _joint_primitive(tuple(normal), Fraction(rhs))

    cat = [
        ("N1(2)", row({0: 1}, r[0] + r[1])),
        ("N2(2)", row({0: -1}, r[0] - r[1])),
        ("N3(2)", row({0: -1}, r[1] - r[0])),
    ]
    for i in range(3, n - 1):
        cat.append((f"N1({i})", row({i - 2: 1, i - 3: -1}, r[i - 1])))
        cat.append((f"N2({i})", row({i - 3: -1, i - 2: -1}, -r[i - 1])))
        cat.append((f"N3({i})", row({i - 3: 1, i - 2: -1}, r[i - 1])))
    cat.extend([
        (f"N1({n - 1})", row({d - 1: -1}, r[n - 2] - r[n - 1])),
        (f"N2({n - 1})", row({d - 1: -1}, r[n - 1] - r[n - 2])),
        (f"N3({n - 1})", row({d - 1: 1}, r[n - 2] + r[n - 1])),
    ])
    return cat


def facet_labels(s: SideData, P: HPolytope) -> list[FacetLabel]:
    """Tag each facet of an m=1 diagonal polytope with its catalogue names.

    Coincident catalogue hyperplanes (e.g. r_1 = r_2 making two entries both
    read x_1 = 0) put several tags on one facet.  A facet matching nothing
    raises, since the catalogue is exhaustive for these polytopes.
    """
    if s.m != 1:
        raise ValueError("facet catalogue applies to m=1 only")
    cat = _catalogue(s)
    labels = []
    for a, b in P.ineqs:
        if all(c == 0 for c in a):
            continue
        key = _joint_primitive(a, b)
        tags = tuple(tag for tag, cat_key in cat if cat_key == key)
        if not tags:
            raise ValueError(
                f"facet outside the label catalogue: {[frac_str(c) for c in a]} <= {frac_str(b)}")
        labels.append(FacetLabel(key[0], key[1], tags))
    return labels


def _cone_adjacency(F: Fan) -> list[frozenset[int]]:
    """Pairs of maximal cones whose vertices form an edge of the polytope."""
    ray_sets = [set(c.rays) for _, c in F.maximal_cones]
    verts = [v for v, _ in F.maximal_cones]
    edges = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            delta = tuple(b - a for a, b in zip(verts[i], verts[j]))
            if all(c == 0 for c in delta):
                continue
            if primitive_vector(delta) in ray_sets[i] and \
                    primitive_vector(tuple(-c for c in delta)) in ray_sets[j]:
                edges.append(frozenset((i, j)))
    return edges


def fan_fingerprint(F: Fan) -> str:
    """Canonical encoding of the fan's combinatorics.

    Cones are labeled by (ray count, lattice index, simplicial or not) and the
    cone-adjacency graph is canonicalized; equal fingerprints are necessary
    for the fans to define the same toric variety, not sufficient (the rays'
    exact positions are deliberately forgotten beyond the index).
    """
    report = singularity_report(F)
    labels = [(len(c.rays), e.index, e.kind != "non_simplicial")
              for (_, c), e in zip(F.maximal_cones, report.entries)]
    edges = _cone_adjacency(F)
    enc = canonical_incidence(len(labels), labels, edges)
    return f"ambient={F.ambient_dim};cones={len(labels)};{enc}"


def fan_to_json_dict(F: Fan) -> dict:
    report = singularity_report(F)
    return {"cones": [
        {"vertex": [frac_str(c) for c in v],
         "rays": [list(ray) for ray in cone.rays],
         "index": e.index,
         "status": e.json_status}
        for (v, cone), e in zip(F.maximal_cones, report.entries)]}
