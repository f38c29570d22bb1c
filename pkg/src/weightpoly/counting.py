"""Lattice-point counts, Ehrhart (quasi-)polynomial fits, and weight
multiplicities by symmetric functions.

The central identity checked here: the number of integer points of the
entry chart at dilation t equals the multiplicity of the weight t*r in the
irreducible gl_n module with highest weight (tP,...,tP,0,...,0).  The right
side is computed by a Jacobi-Trudi determinant over complete homogeneous
symmetric functions, a code path that shares nothing with the polytope
scanning on the left side, so agreement is strong evidence for both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import lcm

from .builders import SideData, dual_side_data, gt_slice
from .exact import frac_str, solve_linear
from .polytopes import (
    HPolytope,
    combinatorial_fingerprint,
    h_to_v,
    lattice_points,
    polytope_dim,
    v_to_h,
)


@dataclass(frozen=True)
class DilateCounts:
    """Exact lattice-point counts of t*P for t = 0..t_max.

    Index 0 is the convention count: 1 for a nonempty polytope (the origin of
    the zero dilate), 0 for an empty one.
    """

    polytope: HPolytope
    counts: tuple[int, ...]

    @property
    def t_max(self) -> int:
        return len(self.counts) - 1

    def count(self, t: int) -> int:
        return self.counts[t]

    def to_json_dict(self) -> dict:
        return {"counts": {str(t): c for t, c in enumerate(self.counts)}}


def count_dilates(P: HPolytope, t_max: int) -> DilateCounts:
    """Exact lattice-point counts of the dilates t*P, t = 1..t_max."""
    if not isinstance(t_max, int) or t_max < 1:
        raise ValueError("t_max must be a positive integer")
    nonempty = bool(h_to_v(P).vertices)
    counts = [1 if nonempty else 0]
    for t in range(1, t_max + 1):
        counts.append(len(lattice_points(P, t)))
    return DilateCounts(P, tuple(counts))


@dataclass(frozen=True)
class EhrhartFit:
    """A degree-`degree` (quasi-)polynomial reproducing sampled dilate counts.

    period == 1 is plain polynomial mode; otherwise one coefficient list per
    residue class of t mod period, each ascending in degree.
    """

    mode: str
    period: int
    degree: int
    coeffs_by_class: tuple[tuple[Fraction, ...], ...]

    def evaluate(self, t: int) -> Fraction:
        coeffs = self.coeffs_by_class[t % self.period]
        acc = Fraction(0)
        power = Fraction(1)
        for c in coeffs:
            acc += c * power
            power *= t
        return acc

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs_by_class[0][-1]

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "period": self.period,
            "degree": self.degree,
            "coefficients": [[frac_str(c) for c in coeffs]
                             for coeffs in self.coeffs_by_class],
        }


def ehrhart_fit(c: DilateCounts, dim: int | None = None) -> EhrhartFit:
    """Fit the dilate counts exactly.

    Polynomial mode when the polytope has integral vertices; otherwise quasi
    mode with period = lcm of the vertex coordinate denominators (determined
    from the geometry, never guessed from the counts).  The fit must reproduce
    every sample; anything else raises.
    """
    verts = h_to_v(c.polytope).vertices
    if not verts:
        fit = EhrhartFit("polynomial", 1, 0, ((Fraction(0),),))
        _check_reproduces(fit, c)
        return fit
    period = lcm(1, *(x.denominator for v in verts for x in v))
    degree = polytope_dim(c.polytope) if dim is None else dim
    degree = max(0, degree)
    mode = "polynomial" if period == 1 else "quasi"
    coeffs_by_class = []
    for residue in range(period):
        ts = [t for t in range(0 if residue == 0 else residue, c.t_max + 1, period)
              if t % period == residue]
        if len(ts) < degree + 1:
            raise ValueError(
                f"insufficient samples: residue class {residue} needs {degree + 1} "
                f"dilates, has {len(ts)}")
        nodes = ts[:degree + 1]
        rows = [[Fraction(t) ** k for k in range(degree + 1)] for t in nodes]
        status, coeffs = solve_linear(rows, [Fraction(c.count(t)) for t in nodes])
        if status != "unique":
            raise AssertionError("Vandermonde system must be uniquely solvable")
        coeffs_by_class.append(coeffs)
    fit = EhrhartFit(mode, period, degree, tuple(coeffs_by_class))
    _check_reproduces(fit, c)
    return fit


def _check_reproduces(fit: EhrhartFit, c: DilateCounts) -> None:
    for t in range(c.t_max + 1):
        if fit.evaluate(t) != c.count(t):
            raise ValueError("counts not (quasi-)polynomial at this period")


@dataclass(frozen=True)
class MultiplicityQuery:
    """Weight-multiplicity input: integral level P and integral weight r."""

    m: int
    n: int
    P: int
    r: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError("m must be a positive integer")
        if not isinstance(self.n, int) or self.n <= self.m + 1:
            raise ValueError("need n > m+1")
        if not isinstance(self.P, int) or self.P < 0:
            raise ValueError("P must be a nonnegative integer")
        r = tuple(self.r)
        if len(r) != self.n or any(not isinstance(x, int) or x < 0 for x in r):
            raise ValueError(f"r must be {self.n} nonnegative integers")
        if sum(r) != (self.m + 1) * self.P:
            raise ValueError("weight total must equal (m+1) * P")
        object.__setattr__(self, "r", r)

    @classmethod
    def from_side(cls, s: SideData, dilate: int = 1) -> "MultiplicityQuery":
        P = dilate * s.P
        r = [dilate * w for w in s.r]
        if P.denominator != 1 or any(w.denominator != 1 for w in r):
            raise ValueError("multiplicity defined for integral dilations only")
        return cls(s.m, s.n, int(P), tuple(int(w) for w in r))


def _perm_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def _h_product_coefficient(degrees: tuple[int, ...], weight: tuple[int, ...]) -> int:
    """Coefficient of x^weight in the product of complete homogeneous h_d.

    Counts nonnegative integer matrices with row sums `degrees` and column
    sums `weight`, by distributing each weight column over the rows.
    """
    if sum(degrees) != sum(weight):
        return 0
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def column(j: int, remaining: tuple[int, ...]) -> int:
        if j == len(weight):
            return 1 if all(d == 0 for d in remaining) else 0
        key = (j, remaining)
        cached = memo.get(key)
        if cached is not None:
            return cached
        target = weight[j]
        rows = len(remaining)

        def place(i: int, left: int, state: list[int]) -> int:
            if i == rows - 1:
                if left > state[i]:
                    return 0
                state[i] -= left
                result = column(j + 1, tuple(sorted(state)))
                state[i] += left
                return result
            total = 0
            for take in range(min(left, state[i]) + 1):
                state[i] -= take
                total += place(i + 1, left - take, state)
                state[i] += take
            return total

        value = place(0, target, list(remaining))
        memo[key] = value
        return value

    return column(0, tuple(sorted(degrees)))


def weight_multiplicity(q: MultiplicityQuery) -> int:
    """Multiplicity of the weight r in the gl_n module of highest weight
    (P,...,P,0,...,0) with m+1 copies of P.

    Jacobi-Trudi: the Schur function is det(h_{P-i+j}), 1 <= i,j <= m+1,
    expanded over permutations; each product's x^r coefficient comes from
    _h_product_coefficient.
    """
    size = q.m + 1
    total = 0
    for perm in permutations(range(size)):
        degrees = tuple(q.P - (i + 1) + (perm[i] + 1) for i in range(size))
        if any(d < 0 for d in degrees):
            continue
        total += _perm_sign(perm) * _h_product_coefficient(degrees, q.r)
    if total < 0:
        raise AssertionError("multiplicity must be nonnegative")
    return total


@dataclass(frozen=True)
class IdentityCheck:
    dilate: int
    lattice_count: int
    multiplicity: int
    passed: bool


@dataclass(frozen=True)
class IdentityReport:
    side: SideData
    checks: tuple[IdentityCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {"checks": [
            {"dilate": c.dilate, "lattice_count": c.lattice_count,
             "multiplicity": c.multiplicity, "pass": c.passed}
            for c in self.checks]}


def verify_ehrhart_identity(s: SideData, t_max: int) -> IdentityReport:
    """Entry-chart lattice count versus weight multiplicity, per dilate.

    Only dilates t where both t*P and every t*r_i are integral are checked
    (others have no multiplicity side); results are returned, not asserted.
    """
    if not isinstance(t_max, int) or t_max < 1:
        raise ValueError("t_max must be a positive integer")
    entry = gt_slice(s).entry_chart
    checks = []
    for t in range(1, t_max + 1):
        if (t * s.P).denominator != 1:
            continue
        if any((t * w).denominator != 1 for w in s.r):
            continue
        count = len(lattice_points(entry, t))
        mult = weight_multiplicity(MultiplicityQuery.from_side(s, t))
        checks.append(IdentityCheck(t, count, mult, count == mult))
    return IdentityReport(s, tuple(checks))


def real_fiber_size(m: int, n: int) -> int:
    """Generic fiber cardinality 2^(mn - 2m - m^2) of the real-form covering."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    if not isinstance(n, int) or n <= m + 1:
        raise ValueError("need n > m+1")
    return 2 ** (m * n - 2 * m - m * m)


@dataclass(frozen=True)
class DualityInvariant:
    name: str
    primal: object
    dual: object

    @property
    def passed(self) -> bool:
        return self.primal == self.dual


@dataclass(frozen=True)
class DualityReport:
    side: SideData
    dual_side: SideData
    invariants: tuple[DualityInvariant, ...]

    @property
    def all_pass(self) -> bool:
        return all(iv.passed for iv in self.invariants)

    def to_json_dict(self) -> dict:
        return {
            "dual": self.dual_side.to_json_dict(),
            "invariants": [
                {"name": iv.name, "primal": iv.primal, "dual": iv.dual,
                 "pass": iv.passed}
                for iv in self.invariants],
        }


def verify_duality(s: SideData, t_max: int) -> DualityReport:
    """Invariants of the complementary-weight slice versus the original.

    Compares the entry charts of s and dual_side_data(s): dimension, vertex
    and facet counts, dilate counts 1..t_max, and the canonical incidence
    fingerprint.  Mismatches are reported, not raised.
    """
    d = dual_side_data(s)
    A = gt_slice(s).entry_chart
    B = gt_slice(d).entry_chart
    a_verts = h_to_v(A)
    b_verts = h_to_v(B)
    invariants = [
        DualityInvariant("dimension", polytope_dim(A), polytope_dim(B)),
        DualityInvariant("vertex_count", len(a_verts.vertices), len(b_verts.vertices)),
        DualityInvariant("facet_count",
                         len(v_to_h(a_verts).ineqs), len(v_to_h(b_verts).ineqs)),
        DualityInvariant("dilate_counts",
                         list(count_dilates(A, t_max).counts[1:]),
                         list(count_dilates(B, t_max).counts[1:])),
        DualityInvariant("fingerprint",
                         combinatorial_fingerprint(A), combinatorial_fingerprint(B)),
    ]
    return DualityReport(s, d, tuple(invariants))
