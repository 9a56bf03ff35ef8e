"""Betti numbers and threshold data for degeneracy loci.

Three flavours of locus are covered, always inside an ambient smooth
projective X whose Betti numbers are known:

* general: points where a bundle map E -> F (ranks e <= f) has rank <= r;
* skew: points where a skew-symmetric twisted map E -> E* ⊗ L has rank
  <= 2r;
* orthogonal: points where two maximal isotropic subbundles of a twisted
  orthogonal bundle meet in dimension >= r.

Below the expected dimension of the locus, its Betti numbers are those of
the ambient space shifted by a partition count; the calculators here just
evaluate those counting formulas, and refuse to answer outside the proven
degree range.  The threshold report collects the expected dimension, the
weak-Lefschetz degree, and connectedness bounds for a given setup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional, Union

from .partitions import count_box_partitions, count_strict_partitions
from .tables import BettiTable


@dataclass(frozen=True)
class AmbientData:
    """Dimension and integral Betti numbers of the ambient space."""

    dim: int
    betti: tuple[int, ...]

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")
        b = tuple(int(x) for x in self.betti)
        if any(x < 0 for x in b):
            raise ValueError("Betti numbers must be nonnegative")
        if len(b) > 2 * self.dim + 1 and any(b[2 * self.dim + 1:]):
            raise ValueError("nonzero Betti number above twice the dimension")
        b = (b + (0,) * (2 * self.dim + 1))[: 2 * self.dim + 1]
        if b[0] < 1:
            raise ValueError("b_0 must be at least 1")
        object.__setattr__(self, "betti", b)

    def h(self, p: int) -> int:
        if p < 0 or p >= len(self.betti):
            return 0
        return self.betti[p]

    @classmethod
    def point(cls) -> "AmbientData":
        return cls(0, (1,))

    @classmethod
    def projective_space(cls, n: int) -> "AmbientData":
        if n < 0:
            raise ValueError("n must be nonnegative")
        return cls(n, tuple(1 - (p % 2) for p in range(2 * n + 1)))

    @classmethod
    def abelian_variety(cls, g: int) -> "AmbientData":
        """A g-dimensional complex torus: b_p = C(2g, p)."""
        if g < 0:
            raise ValueError("g must be nonnegative")
        return cls(g, tuple(comb(2 * g, p) for p in range(2 * g + 1)))

    def to_json_obj(self) -> dict:
        return {"dim": self.dim, "betti": list(self.betti)}


@dataclass(frozen=True)
class MorphismSetup:
    """Parameters of the degeneracy problem.

    kind "general": ranks e <= f, locus rank r, optional everywhere-rank
    bound max_rank (defaults to e).
    kind "skew": rank e, locus rank 2r, optional even everywhere-rank bound.
    kind "orthogonal": intersection jump r, ambient jump k (same parity).
    """

    kind: str
    e: Optional[int] = None
    f: Optional[int] = None
    r: int = 0
    max_rank: Optional[int] = None
    ambient_jump: Optional[int] = None
    lower_locus_empty: bool = True
    amplitude_assumed: bool = True

    def __post_init__(self):
        if self.kind == "general":
            if self.e is None or self.f is None:
                raise ValueError("general setup needs e and f")
            if not 0 <= self.r <= self.e <= self.f:
                raise ValueError(f"need 0 <= r <= e <= f, got r={self.r}, "
                                 f"e={self.e}, f={self.f}")
            k = self.e if self.max_rank is None else self.max_rank
            if not self.r <= k <= self.e:
                raise ValueError(f"everywhere-rank bound {k} out of range")
            object.__setattr__(self, "max_rank", k)
        elif self.kind == "skew":
            if self.e is None or self.f is not None:
                raise ValueError("skew setup needs e only")
            if not 0 <= 2 * self.r <= self.e:
                raise ValueError(f"need 0 <= 2r <= e, got r={self.r}, e={self.e}")
            k = 2 * (self.e // 2) if self.max_rank is None else self.max_rank
            if k % 2 or not 2 * self.r <= k <= self.e:
                raise ValueError(f"everywhere-rank bound {k} must be even and "
                                 f"between 2r and e")
            object.__setattr__(self, "max_rank", k)
        elif self.kind == "orthogonal":
            if self.e is not None or self.f is not None:
                raise ValueError("orthogonal setup needs only r and ambient_jump")
            k = 0 if self.ambient_jump is None else self.ambient_jump
            if self.r < 0 or k < 0 or k > self.r or (self.r - k) % 2:
                raise ValueError("need 0 <= ambient_jump <= r with r - ambient_jump even")
            object.__setattr__(self, "ambient_jump", k)
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    def to_json_obj(self) -> dict:
        out: dict = {"kind": self.kind, "r": self.r}
        if self.e is not None:
            out["e"] = self.e
        if self.f is not None:
            out["f"] = self.f
        if self.kind in ("general", "skew"):
            out["max_rank"] = self.max_rank
        if self.kind == "orthogonal":
            out["ambient_jump"] = self.ambient_jump
        out["lower_locus_empty"] = self.lower_locus_empty
        out["amplitude_assumed"] = self.amplitude_assumed
        return out


# ---------------------------------------------------------------------------
# expected dimensions and Lefschetz thresholds


def expected_dimension_general(dim_x: int, e: int, f: int, r: int) -> int:
    return dim_x - (f - r) * (e - r)


def expected_dimension_skew(dim_x: int, e: int, r: int) -> int:
    return dim_x - comb(e - 2 * r, 2)


def expected_codimension_orthogonal(r: int) -> int:
    return comb(r, 2)


def epsilon_general(m: int) -> int:
    """Degree allowance in the weak-Lefschetz hypothesis, general case:
    1, 2, 0, 1, 0, 1, ..."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return 1
    if m == 1:
        return 2
    return m % 2


def epsilon_skew(m: int) -> int:
    """Degree allowance in the weak-Lefschetz hypothesis, skew case:
    1, 2, 3, 4, 0, 1, 2, 3, 0, 1, ..."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return m + 1 if m < 4 else m % 4


def max_lefschetz_general(dim_x: int, e: int, f: int, r: int) -> Optional[int]:
    """Largest m with the restriction to the locus bijective on H^p, p <= m:
    needs m//2 <= r and expected dimension at rank r - m//2 at least
    epsilon_general(m)."""
    best = None
    for m in range(0, 2 * r + 2):
        if expected_dimension_general(dim_x, e, f, r - m // 2) >= epsilon_general(m):
            best = m
    return best


def max_lefschetz_skew(dim_x: int, e: int, r: int) -> Optional[int]:
    best = None
    for m in range(0, 4 * r + 4):
        if expected_dimension_skew(dim_x, e, r - m // 4) >= epsilon_skew(m):
            best = m
    return best


@dataclass
class ThresholdsReport:
    setup: MorphismSetup
    dim_x: int
    expected_dimension: int
    expected_codimension: int
    epsilon_table: list[list[int]]
    max_lefschetz: Optional[int]
    connectivity_offset: int
    connected_if_dim_above: int
    notes: tuple[str, ...] = ()

    def to_json_obj(self) -> dict:
        return {
            "setup": self.setup.to_json_obj(),
            "dim_x": self.dim_x,
            "expected_dimension": self.expected_dimension,
            "expected_codimension": self.expected_codimension,
            "epsilon_table": self.epsilon_table,
            "max_lefschetz": self.max_lefschetz,
            "connectivity_offset": self.connectivity_offset,
            "connected_if_dim_above": self.connected_if_dim_above,
            "notes": list(self.notes),
        }


def thresholds_report(setup: MorphismSetup, dim_x: int) -> ThresholdsReport:
    """Expected dimension, weak-Lefschetz degree and connectedness bound.

    The connectivity offset is what the locus loses against the ambient
    space: a d-connected ambient gives a (d - offset)-connected locus, so an
    irreducible ambient of dimension above ``connected_if_dim_above`` has a
    connected locus.
    """
    if dim_x < 0:
        raise ValueError("dim_x must be nonnegative")
    notes = []
    if setup.kind == "general":
        e, f, r, k = setup.e, setup.f, setup.r, setup.max_rank
        expected = expected_dimension_general(dim_x, e, f, r)
        codim = (f - r) * (e - r)
        eps = [[m, epsilon_general(m)] for m in range(0, 2 * r + 2)]
        lef = max_lefschetz_general(dim_x, e, f, r)
        offset = (f - r) * (e - r) - (e - k) * (f - k)
        notes.append("Lefschetz range holds with integer coefficients")
    elif setup.kind == "skew":
        e, r = setup.e, setup.r
        expected = expected_dimension_skew(dim_x, e, r)
        codim = comb(e - 2 * r, 2)
        eps = [[m, epsilon_skew(m)] for m in range(0, 4 * r + 4)]
        lef = max_lefschetz_skew(dim_x, e, r)
        k2 = setup.max_rank
        offset = comb(e - 2 * r, 2) - comb(e - k2, 2)
        notes.append("Lefschetz range holds with integer coefficients")
    else:
        r, k = setup.r, setup.ambient_jump
        codim = expected_codimension_orthogonal(r)
        expected = dim_x - codim
        eps = []
        lef = None
        offset = comb(r, 2) - comb(k, 2)
        notes.append("no Lefschetz range is asserted for intersection loci")
    if not setup.lower_locus_empty:
        notes.append("lower locus not assumed empty: only connectedness applies")
    if not setup.amplitude_assumed:
        notes.append("twisting not assumed ample: all bounds are conjectural here")
    return ThresholdsReport(setup, dim_x, expected, codim, eps, lef,
                            offset, offset, tuple(notes))


# ---------------------------------------------------------------------------
# growth inequalities backing the Lefschetz induction


@dataclass
class GrowthReport:
    checked: dict[str, int] = field(default_factory=dict)
    passed: bool = True
    failure: Optional[str] = None

    def note_failure(self, msg: str) -> None:
        self.passed = False
        if self.failure is None:
            self.failure = msg

    def to_json_obj(self) -> dict:
        return {"checked": dict(sorted(self.checked.items())),
                "passed": self.passed, "failure": self.failure}


def verify_growth_inequalities(kind: str, e: int, r: int, f: Optional[int] = None,
                               t_max: int = 100) -> GrowthReport:
    """Check the inequalities that drive the induction on the rank.

    kind "general" (needs r < e <= f): the codimension gap
    ``delta(t) - delta(t-s)`` must dominate s(s+2) for 0 <= s <= t <= r, and
    the allowance sequence must satisfy
    ``epsilon(t) + [t/2]([t/2]+2) > t`` for t <= t_max.
    kind "skew" (needs e >= 2r+2): the gap ``alpha(t) - alpha(t-s)`` must
    dominate s(2s+3), and ``epsilon'(t) + [t/4](2[t/4]+3) > t``.
    Expected dimensions are affine in dim(X), so checking at dim(X) = 0
    covers every ambient space.  Failures are lemma-level bugs and are
    reported with a witness.
    """
    report = GrowthReport()
    if kind == "general":
        if f is None:
            raise ValueError("general kind needs f")
        if not 0 <= r < e <= f:
            raise ValueError(f"need 0 <= r < e <= f, got r={r}, e={e}, f={f}")
        n = 0
        for t in range(0, r + 1):
            for s in range(0, t + 1):
                gap = (expected_dimension_general(0, e, f, t)
                       - expected_dimension_general(0, e, f, t - s))
                n += 1
                if gap < s * (s + 2):
                    report.note_failure(f"codimension gap fails at t={t}, s={s}")
        report.checked["codimension_gap"] = n
        for t in range(0, t_max + 1):
            half = t // 2
            if epsilon_general(t) + half * (half + 2) <= t:
                report.note_failure(f"allowance fails at t={t}")
        report.checked["allowance"] = t_max + 1
    elif kind == "skew":
        if f is not None:
            raise ValueError("skew kind takes no f")
        if not (0 <= 2 * r and 2 * r + 2 <= e):
            raise ValueError(f"need e >= 2r+2, got r={r}, e={e}")
        n = 0
        for t in range(0, r + 1):
            for s in range(0, t + 1):
                gap = (expected_dimension_skew(0, e, t)
                       - expected_dimension_skew(0, e, t - s))
                n += 1
                if gap < s * (2 * s + 3):
                    report.note_failure(f"codimension gap fails at t={t}, s={s}")
        report.checked["codimension_gap"] = n
        for t in range(0, t_max + 1):
            quarter = t // 4
            if epsilon_skew(t) + quarter * (2 * quarter + 3) <= t:
                report.note_failure(f"allowance fails at t={t}")
        report.checked["allowance"] = t_max + 1
    else:
        raise ValueError(f"kind must be 'general' or 'skew', got {kind!r}")
    return report


def verify_growth_sweep(max_rank: int = 12, t_max: int = 100) -> GrowthReport:
    """Run verify_growth_inequalities over every admissible rank combination
    with e, f up to max_rank; merge the counts."""
    merged = GrowthReport()
    for e in range(1, max_rank + 1):
        for f in range(e, max_rank + 1):
            for r in range(0, e):
                rep = verify_growth_inequalities("general", e, r, f, t_max=0)
                merged.checked["general_gap"] = (
                    merged.checked.get("general_gap", 0) + rep.checked["codimension_gap"])
                if not rep.passed:
                    merged.note_failure(f"e={e} f={f}: {rep.failure}")
    for e in range(2, max_rank + 1):
        for r in range(0, (e - 2) // 2 + 1):
            rep = verify_growth_inequalities("skew", e, r, t_max=0)
            merged.checked["skew_gap"] = (
                merged.checked.get("skew_gap", 0) + rep.checked["codimension_gap"])
            if not rep.passed:
                merged.note_failure(f"e={e}: {rep.failure}")
    for t in range(0, t_max + 1):
        half, quarter = t // 2, t // 4
        if epsilon_general(t) + half * (half + 2) <= t:
            merged.note_failure(f"general allowance fails at t={t}")
        if epsilon_skew(t) + quarter * (2 * quarter + 3) <= t:
            merged.note_failure(f"skew allowance fails at t={t}")
    merged.checked["general_allowance"] = t_max + 1
    merged.checked["skew_allowance"] = t_max + 1
    return merged


# ---------------------------------------------------------------------------
# Betti calculators


def betti_degeneracy(ambient: AmbientData, e: int, f: int, r: int) -> BettiTable:
    """Betti table of the rank <= r locus of a general map E -> F.

    Valid strictly below the expected dimension: there
    ``b_p = sum over partitions in an (e-r) x r box of b_(p-2|shape|)(X)``.
    """
    if not 0 <= r <= e <= f:
        raise ValueError(f"need 0 <= r <= e <= f, got r={r}, e={e}, f={f}")
    valid_below = max(expected_dimension_general(ambient.dim, e, f, r), 0)
    entries: dict[int, int] = {}
    for p in range(valid_below):
        total = 0
        for q in range(p // 2 + 1):
            mult = count_box_partitions(q, r, e - r)
            if mult:
                total += mult * ambient.h(p - 2 * q)
        if total:
            entries[p] = total
    return BettiTable(
        entries, valid_below,
        setup={"kind": "general", "e": e, "f": f, "r": r, "dim_x": ambient.dim},
        assumptions=("rank < r locus is empty",
                     "the hom bundle is ample",
                     "ambient is smooth projective"),
    )


def betti_skew(ambient: AmbientData, e: int, r: int) -> BettiTable:
    """Betti table of the rank <= 2r locus of a skew-symmetric twisted map.

    Valid strictly below the expected dimension: there
    ``b_p = sum over partitions with parts <= r of b_(p-4|shape|)(X)``
    (any number of rows; the shift is four per box).
    """
    if not 0 <= 2 * r <= e:
        raise ValueError(f"need 0 <= 2r <= e, got r={r}, e={e}")
    valid_below = max(expected_dimension_skew(ambient.dim, e, r), 0)
    entries: dict[int, int] = {}
    for p in range(valid_below):
        total = 0
        for q in range(p // 4 + 1):
            mult = count_box_partitions(q, r)
            if mult:
                total += mult * ambient.h(p - 4 * q)
        if total:
            entries[p] = total
    return BettiTable(
        entries, valid_below,
        setup={"kind": "skew", "e": e, "r": r, "dim_x": ambient.dim},
        assumptions=("rank < 2r locus is empty",
                     "the twisted square bundle is ample",
                     "ambient is smooth projective"),
    )


def betti_orthogonal_special(ambient: AmbientData, case: str) -> BettiTable:
    """Betti table of a small intersection locus of two maximal isotropic
    subbundles.

    case "even": generic intersection dimension 0 and no jump to 6; the
    jump-4 locus has the ambient Betti numbers for p <= 3 and one extra
    class at p = 4, valid for p < dim(X) - 9.
    case "odd": generic intersection dimension 1 and no jump to 5; same
    shape for the jump-3 locus, valid for p < dim(X) - 4.
    """
    if case == "even":
        valid_below = min(5, ambient.dim - 9)
        jump, empty_jump, generic = 4, 6, 0
    elif case == "odd":
        valid_below = min(5, ambient.dim - 4)
        jump, empty_jump, generic = 3, 5, 1
    else:
        raise ValueError(f"case must be 'even' or 'odd', got {case!r}")
    valid_below = max(valid_below, 0)
    entries: dict[int, int] = {}
    for p in range(valid_below):
        b = ambient.h(p) + (1 if p == 4 else 0)
        if b:
            entries[p] = b
    return BettiTable(
        entries, valid_below,
        setup={"kind": "orthogonal-special", "case": case, "jump": jump,
               "dim_x": ambient.dim},
        assumptions=(f"generic intersection dimension is {generic}",
                     f"no point has intersection dimension {empty_jump}",
                     "the twisted pairing bundle is ample"),
    )


def skew_to_orthogonal(e: int, r: int) -> tuple[int, int]:
    """Translate a skew rank <= 2r condition on a rank-e bundle into the
    kernel-intersection picture: returns (jump, expected codimension)."""
    if not 0 <= 2 * r <= e:
        raise ValueError(f"need 0 <= 2r <= e, got r={r}, e={e}")
    jump = e - 2 * r
    return jump, comb(jump, 2)


# ---------------------------------------------------------------------------
# fibrations with cellular fibers


@dataclass(frozen=True)
class GrassmannBundle:
    """Fiber: d-planes in a rank-e bundle."""

    d: int
    e: int

    def __post_init__(self):
        if not 0 <= self.d <= self.e:
            raise ValueError(f"need 0 <= d <= e, got d={self.d}, e={self.e}")

    @property
    def fiber_dimension(self) -> int:
        return self.d * (self.e - self.d)

    def shift_count(self, q: int) -> int:
        return count_box_partitions(q, self.e - self.d, self.d)

    def describe(self) -> dict:
        return {"fiber": "grassmann", "d": self.d, "e": self.e}


@dataclass(frozen=True)
class LagrangianBundle:
    """Fiber: maximal isotropic r-planes in a rank-2r symplectic bundle."""

    r: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("r must be nonnegative")

    @property
    def fiber_dimension(self) -> int:
        return self.r * (self.r + 1) // 2

    def shift_count(self, q: int) -> int:
        return count_strict_partitions(q, self.r)

    def describe(self) -> dict:
        return {"fiber": "lagrangian", "r": self.r}


Fiber = Union[GrassmannBundle, LagrangianBundle]


def fibration_ambient(ambient: AmbientData, fiber: Fiber) -> AmbientData:
    """Ambient data of the total space of a cellular-fiber bundle.

    The cohomology is free over the base with one shifted copy per cell, so
    ``b_p(total) = sum_q shift_count(q) * b_(p-2q)(base)`` in every degree.
    Returning AmbientData lets towers of bundles compose.
    """
    dim = ambient.dim + fiber.fiber_dimension
    betti = []
    for p in range(2 * dim + 1):
        total = 0
        for q in range(p // 2 + 1):
            mult = fiber.shift_count(q)
            if mult:
                total += mult * ambient.h(p - 2 * q)
        betti.append(total)
    return AmbientData(dim, tuple(betti))


def fibration_betti(ambient: AmbientData, fiber: Fiber) -> BettiTable:
    """Betti table of the total space of a cellular-fiber bundle; exact in
    every degree (valid_below is open-ended)."""
    total = fibration_ambient(ambient, fiber)
    entries = {p: b for p, b in enumerate(total.betti) if b}
    return BettiTable(
        entries, None,
        setup={"kind": "fibration", "dim_x": ambient.dim,
               "dim_total": total.dim, **fiber.describe()},
        assumptions=(),
    )
