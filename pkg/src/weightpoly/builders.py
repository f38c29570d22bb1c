"""Weight polytopes of weighted point configurations in projective m-space.

A configuration is described by SideData: n positive rational weights r_i and
the ambient projective dimension m, with the critical level P = (sum r_i)/(m+1)
(for m=1, half the polygon perimeter).  Three constructions live here:

* polygon_hrep: for m=1, the diagonal-length polytope cut out by the triangle
  inequalities of the fan triangulation of an n-gon with side lengths r.
* gt_hrep: the interlacing-pattern polytope of a weakly decreasing top row.
* fm_polytope / gt_slice: the pattern polytope for the top row
  (P,...,P,0,...,0) sliced by fixed row sums s_j = r_1+...+r_j, reduced to a
  full-dimensional chart in the surviving free entries, together with the
  affine change of coordinates to per-row difference (action) variables.

Patterns are stored with weakly decreasing rows; displayed coordinate order is
bottom row to top row, each row listed in increasing value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import Vec, frac, frac_str, vec
from .polytopes import AffineMap, HPolytope, affine_image, empty_hrep


@dataclass(frozen=True)
class SideData:
    """Weights r_1..r_n on n points in projective m-space."""

    m: int
    n: int
    r: tuple[Fraction, ...]
    P: Fraction = field(init=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 1:
            raise ValueError("m must be a positive integer")
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise ValueError("n must be an integer")
        r = vec(self.r)
        if len(r) != self.n:
            raise ValueError(f"expected {self.n} weights, got {len(r)}")
        if self.n <= self.m + 1:
            raise ValueError("need n > m+1")
        if any(w <= 0 for w in r):
            raise ValueError("all weights must be positive")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "P", sum(r, Fraction(0)) / (self.m + 1))

    @classmethod
    def from_weights(cls, m: int, weights: Sequence) -> "SideData":
        w = tuple(frac(x) for x in weights)
        return cls(m, len(w), w)

    def to_json_dict(self) -> dict:
        return {"m": self.m, "r": [frac_str(w) for w in self.r]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "SideData":
        weights = tuple(frac(x) for x in data["r"])
        m = data["m"]
        if "n" in data and data["n"] != len(weights):
            raise ValueError("n does not match the number of weights")
        return cls.from_weights(m, weights)


@dataclass(frozen=True)
class GTSpec:
    """Interlacing-pattern data: rank k, top row lam, optional fixed row sums."""

    k: int
    lam: tuple[Fraction, ...]
    row_sums: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError("k must be a positive integer")
        lam = vec(self.lam)
        if len(lam) != self.k:
            raise ValueError(f"top row must have {self.k} entries")
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise ValueError("top row must be weakly decreasing")
        if any(a < 0 for a in lam):
            raise ValueError("top row entries must be nonnegative")
        object.__setattr__(self, "lam", lam)
        if self.row_sums is not None:
            sums = vec(self.row_sums)
            if len(sums) != self.k - 1:
                raise ValueError(f"need {self.k - 1} row sums")
            total = sum(lam, Fraction(0))
            if any(s < 0 or s > total for s in sums):
                raise ValueError("each row sum must lie between 0 and the top-row total")
            object.__setattr__(self, "row_sums", sums)


@dataclass(frozen=True)
class ChartedSlice:
    """A row-sum slice of a pattern polytope in two coordinate systems.

    entry_chart: coordinates are the surviving free entries (constant entries
    and one row-sum-eliminated entry per row removed), rows bottom to top, each
    row in increasing value order; its integer points are exactly the integral
    patterns, so all lattice counting happens here.
    diag_chart: coordinates are the differences of adjacent variable entries
    per row; integer points of this chart overcount the patterns (differences
    of integral patterns satisfy extra congruences, parity for m=1).
    entry_to_diag maps the first chart onto the second, injectively.
    """

    entry_chart: HPolytope
    diag_chart: HPolytope
    entry_to_diag: AffineMap
    entry_coords: tuple[tuple[int, int], ...]
    lattice_note: str = (
        "integer points of entry_chart are exactly the integral patterns; "
        "integer points of diag_chart overcount them (congruence conditions)")

    def to_json_dict(self) -> dict:
        return {
            "entry_chart": self.entry_chart.to_json_dict(),
            "diag_chart": self.diag_chart.to_json_dict(),
            "entry_to_diag": self.entry_to_diag.to_json_dict(),
            "entry_coords": [[t, i] for t, i in self.entry_coords],
            "lattice_note": self.lattice_note,
        }


def admissible(s: SideData) -> bool:
    """Whether every weight clears the critical level: r_i <= P for all i."""
    return all(w <= s.P for w in s.r)


def dual_side_data(s: SideData) -> SideData:
    """The complementary-weight data (n-m-2, P-r_1, ..., P-r_n).

    An involution with the same critical level P; defined when every dual
    weight is positive and the dual projective dimension is at least 1.
    """
    if any(w >= s.P for w in s.r):
        raise ValueError("dual weight nonpositive: need r_i < P for all i")
    if s.n < s.m + 3:
        raise ValueError("dual projective dimension would be < 1: need n >= m+3")
    return SideData.from_weights(s.n - s.m - 2, tuple(s.P - w for w in s.r))


def polygon_hrep(s: SideData) -> HPolytope:
    """Triangle-inequality system on the diagonals of a weighted n-gon (m=1).

    Coordinates x_1..x_{n-3} are the diagonal lengths d_3..d_{n-1} of the fan
    triangulation; each of the n-2 triangles (r_1, r_2, d_3), (d_j, r_j,
    d_{j+1}) for 3 <= j <= n-2, (d_{n-1}, r_{n-1}, r_n) contributes its three
    inequalities, 3(n-2) in all before redundancy removal.
    """
    if s.m != 1:
        raise ValueError("diagonal coordinates exist only for m=1")
    if s.n < 4:
        raise ValueError("need at least 4 sides")
    n, r = s.n, s.r
    d = n - 3
    zero = [Fraction(0)] * d

    def unit(i: int, c: int) -> tuple[Fraction, ...]:
        row = list(zero)
        row[i] = Fraction(c)
        return tuple(row)

    def pair(i: int, ci: int, j: int, cj: int) -> tuple[Fraction, ...]:
        row = list(zero)
        row[i] = Fraction(ci)
        row[j] = Fraction(cj)
        return tuple(row)

    ineqs: list[tuple[Vec, Fraction]] = []
    # (r_1, r_2, x_1): each side at most the sum of the other two.
    ineqs.append((unit(0, 1), r[0] + r[1]))
    ineqs.append((unit(0, -1), r[1] - r[0]))
    ineqs.append((unit(0, -1), r[0] - r[1]))
    # (x_{j-2}, r_j, x_{j-1}) for the middle triangles.
    for j in range(3, n - 1):
        a, b = j - 3, j - 2
        ineqs.append((pair(a, 1, b, -1), r[j - 1]))
        ineqs.append((pair(a, -1, b, 1), r[j - 1]))
        ineqs.append((pair(a, -1, b, -1), -r[j - 1]))
    # (x_{n-3}, r_{n-1}, r_n).
    ineqs.append((unit(d - 1, 1), r[n - 2] + r[n - 1]))
    ineqs.append((unit(d - 1, -1), r[n - 1] - r[n - 2]))
    ineqs.append((unit(d - 1, -1), r[n - 2] - r[n - 1]))
    return HPolytope(d, tuple(ineqs), ())


def _entry_index(t: int, i: int) -> int:
    # Rows bottom to top, each row in increasing value order (position t first).
    return t * (t - 1) // 2 + (t - i)


def gt_hrep(spec: GTSpec) -> HPolytope:
    """Interlacing-pattern polytope of the top row, in all-entries coordinates.

    One coordinate per entry of rows 1..k-1 (k(k-1)/2 in total); row k is the
    fixed top row.  Constraints are row_{t+1,i} >= row_{t,i} >= row_{t+1,i+1};
    fixed row sums, when present, are added as equalities.
    """
    k, lam = spec.k, spec.lam
    dim = k * (k - 1) // 2

    def unit(t: int, i: int, c: int) -> list[Fraction]:
        row = [Fraction(0)] * dim
        row[_entry_index(t, i)] = Fraction(c)
        return row

    ineqs: list[tuple[Vec, Fraction]] = []
    for t in range(1, k):
        for i in range(1, t + 1):
            if t + 1 == k:
                ineqs.append((tuple(unit(t, i, 1)), lam[i - 1]))
                ineqs.append((tuple(unit(t, i, -1)), -lam[i]))
            else:
                upper = unit(t, i, 1)
                upper[_entry_index(t + 1, i)] = Fraction(-1)
                ineqs.append((tuple(upper), Fraction(0)))
                lower = unit(t, i, -1)
                lower[_entry_index(t + 1, i + 1)] = Fraction(1)
                ineqs.append((tuple(lower), Fraction(0)))
    eqs: list[tuple[Vec, Fraction]] = []
    if spec.row_sums is not None:
        for t in range(1, k):
            row = [Fraction(0)] * dim
            for i in range(1, t + 1):
                row[_entry_index(t, i)] = Fraction(1)
            eqs.append((tuple(row), spec.row_sums[t - 1]))
    return HPolytope(dim, tuple(ineqs), tuple(eqs))


class _Expr:
    """Affine expression c + sum coeff_j * chart_j, over a fixed chart width."""

    __slots__ = ("coeffs", "const")

    def __init__(self, coeffs: tuple[Fraction, ...], const: Fraction):
        self.coeffs = coeffs
        self.const = const

    def __sub__(self, other: "_Expr") -> "_Expr":
        return _Expr(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
                     self.const - other.const)


def _slice_rows(s: SideData):
    """Free-position bookkeeping per row of the sliced pattern polytope.

    Row t (1 <= t <= n-1) has entries forced to P at positions
    i <= m+1-n+t, forced to 0 at positions i >= m+2, and free in between.
    With the row sum fixed, the free entry at the lowest position (the largest
    value) is eliminated; S_t is the row sum left for the free block.
    """
    m, n, P = s.m, s.n, s.P
    sums = []
    acc = Fraction(0)
    for w in s.r[:-1]:
        acc += w
        sums.append(acc)
    rows = []
    for t in range(1, n):
        lo = max(1, m + 2 - n + t)
        hi = min(t, m + 1)
        forced_p = max(0, m + 1 - n + t)
        S_t = sums[t - 1] - P * forced_p
        rows.append((t, lo, hi, S_t))
    return rows


def _chart_layout(s: SideData) -> tuple[tuple[int, int], ...]:
    coords: list[tuple[int, int]] = []
    for t, lo, hi, _ in _slice_rows(s):
        for i in range(hi, lo, -1):
            coords.append((t, i))
    return tuple(coords)


def _entry_exprs(s: SideData):
    """Every pattern entry as an affine expression in the chart coordinates."""
    m, n, P = s.m, s.n, s.P
    layout = _chart_layout(s)
    dim = len(layout)
    index = {pos: j for j, pos in enumerate(layout)}
    zero = tuple([Fraction(0)] * dim)

    def unit(j: int) -> tuple[Fraction, ...]:
        row = [Fraction(0)] * dim
        row[j] = Fraction(1)
        return tuple(row)

    exprs: dict[tuple[int, int], _Expr] = {}
    for t, lo, hi, S_t in _slice_rows(s):
        for i in range(1, t + 1):
            if i < lo:
                exprs[(t, i)] = _Expr(zero, P)
            elif i > hi:
                exprs[(t, i)] = _Expr(zero, Fraction(0))
            elif i > lo:
                exprs[(t, i)] = _Expr(unit(index[(t, i)]), Fraction(0))
        remainder = [Fraction(0)] * dim
        for i in range(lo + 1, hi + 1):
            remainder[index[(t, i)]] = Fraction(-1)
        exprs[(t, lo)] = _Expr(tuple(remainder), S_t)
    for i in range(1, n + 1):
        exprs[(n, i)] = _Expr(zero, P if i <= m + 1 else Fraction(0))
    return layout, exprs


def fm_polytope(s: SideData) -> ChartedSlice:
    """Row-sum slice of the (P,...,P,0,...,0) pattern polytope, fully charted.

    The entry chart keeps one coordinate per non-forced entry after the row
    sums eliminate one entry per row; generically its dimension is
    mn - 2m - m^2.  The diag chart rewrites each row by the differences of its
    adjacent variable entries; for m=1 these are the polygon diagonals and the
    chart equals the triangle-inequality system of polygon_hrep.
    """
    layout, exprs = _entry_exprs(s)
    dim = len(layout)
    n = s.n
    ineqs: list[tuple[Vec, Fraction]] = []
    infeasible = False
    for t in range(1, n):
        for i in range(1, t + 1):
            for diff in (exprs[(t, i)] - exprs[(t + 1, i)],
                         exprs[(t + 1, i + 1)] - exprs[(t, i)]):
                # The constraint is diff <= 0, i.e. coeffs . x <= -const.
                if all(c == 0 for c in diff.coeffs):
                    if diff.const > 0:
                        infeasible = True
                else:
                    ineqs.append((diff.coeffs, -diff.const))
    rows = _slice_rows(s)
    diag_exprs: list[_Expr] = []
    for t, lo, hi, _ in rows:
        display = [exprs[(t, i)] for i in range(hi, lo - 1, -1)]
        for left, right in zip(display, display[1:]):
            diag_exprs.append(right - left)
    entry_to_diag = AffineMap(
        dim, dim,
        tuple(e.coeffs for e in diag_exprs),
        tuple(e.const for e in diag_exprs),
    )
    if infeasible:
        entry_chart = empty_hrep(dim)
    else:
        entry_chart = HPolytope(dim, tuple(ineqs), ())
    diag_chart = affine_image(entry_chart, entry_to_diag)
    return ChartedSlice(entry_chart, diag_chart, entry_to_diag, layout)


def gt_slice(s: SideData) -> ChartedSlice:
    """Alias of fm_polytope: the pattern-polytope slice for any m >= 1."""
    return fm_polytope(s)


def entry_to_diag_map(s: SideData) -> AffineMap:
    """Chart change from free entries to adjacent-difference coordinates.

    For m=1 the coordinates map is a_t -> s_t - 2 a_t per row, so the linear
    part is -2 times the identity.
    """
    return fm_polytope(s).entry_to_diag
