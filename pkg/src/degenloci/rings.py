"""Integral cohomology rings of Grassmannians as explicit graded quotients.

Two presentations are built here, both on generators ``c_1..c_d`` with
``c_i`` in cohomological degree 2i:

* ordinary Grassmannian of d-planes in n-space: kill the components of
  index n-d+1 .. n of the inverse of ``1 - c_1 + c_2 - ...``;
* Lagrangian-type Grassmannian of isotropic d-planes in a symplectic
  2r-space: kill the components of index 2(r-d+1), 2(r-d+2), .., 2r of the
  inverse of ``(sum c_i) * (sum (-1)^i c_i)`` (odd components of that
  inverse vanish identically).

Graded tables (rank, torsion, monomial basis per degree) are computed with
exact integer elimination, so rank deficits and torsion cannot hide behind
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .chern import ChernPoly, Monomial, cgen, series_inverse
from .errors import VerificationError
from .intlinalg import fraction_free_echelon, torsion_invariants
from .partitions import BoxConstraint, enumerate_box_partitions


def grassmannian_dimension(d: int, n: int) -> int:
    return d * (n - d)


def isotropic_dimension(d: int, r: int) -> int:
    """Dimension of the space of isotropic d-planes in a symplectic 2r-space."""
    return d * (2 * r - d) - d * (d - 1) // 2


@dataclass(frozen=True)
class RingPresentation:
    """A graded quotient Z[c_1..c_d] / (relations)."""

    label: str
    params: tuple[tuple[str, int], ...]
    num_generators: int
    relations: tuple[ChernPoly, ...]

    @property
    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(2 * i for i in range(1, self.num_generators + 1))

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    def to_json_obj(self) -> dict:
        return {
            "label": self.label,
            "params": {k: v for k, v in self.params},
            "num_generators": self.num_generators,
            "generator_degrees": list(self.generator_degrees),
            "relations": [rel.to_json_obj() for rel in self.relations],
        }


def grassmannian_presentation(d: int, n: int) -> RingPresentation:
    """Cohomology of the Grassmannian of d-planes in C^n."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    signed = [ChernPoly.one()] + [(-1) ** i * cgen(i) for i in range(1, d + 1)]
    inv = series_inverse(signed, n)
    relations = tuple(inv[j] for j in range(n - d + 1, n + 1))
    return RingPresentation("grassmannian", (("d", d), ("n", n)), d, relations)


def _symplectic_kernel_inverse(d: int, cap: int) -> list[ChernPoly]:
    """Inverse series of ``(sum c_i) * (sum (-1)^i c_i)`` up to index cap."""
    plain = [ChernPoly.one()] + [cgen(i) for i in range(1, d + 1)]
    signed = [ChernPoly.one()] + [(-1) ** i * cgen(i) for i in range(1, d + 1)]
    product = []
    for j in range(cap + 1):
        acc = ChernPoly.zero()
        for a in range(max(0, j - d), min(j, d) + 1):
            acc = acc + plain[a] * signed[j - a]
        product.append(acc)
    return series_inverse(product, cap)


def isotropic_presentation(d: int, r: int) -> RingPresentation:
    """Cohomology of the Grassmannian of isotropic d-planes in a symplectic
    2r-space."""
    if not 1 <= d <= r:
        raise ValueError(f"need 1 <= d <= r, got d={d}, r={r}")
    inv = _symplectic_kernel_inverse(d, 2 * r)
    for j in range(1, 2 * r + 1, 2):
        if not inv[j].is_zero():
            raise VerificationError(f"odd component {j} of the inverse is nonzero")
    relations = tuple(inv[2 * m] for m in range(r - d + 1, r + 1))
    return RingPresentation("isotropic", (("d", d), ("r", r)), d, relations)


def monomials_of_half_degree(num_generators: int, q: int) -> list[Monomial]:
    """Monomials in c_1..c_d of cohomological degree 2q, in the canonical
    order induced by lex-descending partition enumeration."""
    out: list[Monomial] = []
    for lam in enumerate_box_partitions(q, BoxConstraint(num_generators)):
        exps: dict[int, int] = {}
        for p in lam:
            exps[p] = exps.get(p, 0) + 1
        out.append(tuple(sorted((f"c{i}", e) for i, e in exps.items())))
    return out


def relation_rows(pres: RingPresentation, q: int,
                  columns: Optional[dict[Monomial, int]] = None
                  ) -> tuple[list[list[int]], list[Monomial]]:
    """Integer rows spanning the degree-2q piece of the relation ideal,
    expressed in the monomial basis of that degree."""
    monos = monomials_of_half_degree(pres.num_generators, q)
    col = columns if columns is not None else {m: i for i, m in enumerate(monos)}
    rows: list[list[int]] = []
    for rel in pres.relations:
        deg = rel.homogeneous_degree()
        if deg is None or deg % 2:
            raise VerificationError("relation is zero or of odd degree")
        h = deg // 2
        if h > q:
            continue
        for mono in monomials_of_half_degree(pres.num_generators, q - h):
            shifted = rel * ChernPoly({mono: 1})
            row = [0] * len(col)
            for mon, coeff in shifted.terms.items():
                row[col[mon]] = coeff
            rows.append(row)
    return rows, monos


@dataclass
class GradedRow:
    degree: int
    num_monomials: int
    rank: int
    torsion: tuple[int, ...]
    basis: tuple[Monomial, ...]


@dataclass
class GradedTable:
    label: str
    params: tuple[tuple[str, int], ...]
    max_degree: int
    rows: list[GradedRow]

    def rank(self, degree: int) -> int:
        if degree < 0 or degree > self.max_degree:
            raise ValueError(f"degree {degree} outside table (max {self.max_degree})")
        return self.rows[degree].rank

    def ranks(self) -> list[int]:
        return [row.rank for row in self.rows]

    def torsion_free(self) -> bool:
        return all(not row.torsion for row in self.rows)

    def to_json_obj(self) -> dict:
        return {
            "label": self.label,
            "params": {k: v for k, v in self.params},
            "max_degree": self.max_degree,
            "rows": [
                {
                    "degree": row.degree,
                    "monomials": row.num_monomials,
                    "rank": row.rank,
                    "torsion": list(row.torsion),
                    "basis": [[[name, e] for name, e in mon] for mon in row.basis],
                }
                for row in self.rows
            ],
        }

    def to_csv(self) -> str:
        lines = ["degree,rank,torsion"]
        for row in self.rows:
            tor = ";".join(str(t) for t in row.torsion)
            lines.append(f"{row.degree},{row.rank},{tor}")
        return "\n".join(lines) + "\n"


def graded_table(pres: RingPresentation, up_to_degree: int) -> GradedTable:
    """Rank, torsion and a standard-monomial basis of every graded piece of
    the quotient up to the given cohomological degree."""
    if up_to_degree < 0:
        raise ValueError("up_to_degree must be nonnegative")
    rows: list[GradedRow] = []
    for p in range(up_to_degree + 1):
        if p % 2:
            rows.append(GradedRow(p, 0, 0, (), ()))
            continue
        q = p // 2
        rel_rows, monos = relation_rows(pres, q)
        if rel_rows:
            ideal_rank, pivots = fraction_free_echelon(rel_rows)
            torsion = tuple(torsion_invariants(rel_rows))
        else:
            ideal_rank, torsion, pivots = 0, (), []
        pivot_set = set(pivots)
        basis = tuple(m for i, m in enumerate(monos) if i not in pivot_set)
        rows.append(GradedRow(p, len(monos), len(monos) - ideal_rank, torsion, basis))
    return GradedTable(pres.label, pres.params, up_to_degree, rows)


def restriction_containment(d: int, r: int) -> bool:
    """Certify that the ordinary-Grassmannian relations (d-planes in 2r-space)
    lie in the isotropic relation ideal.

    Writing h for the inverse of ``sum (-1)^i c_i`` and s for the inverse of
    ``(sum c_i)(sum (-1)^i c_i)``, convolution gives
    ``h_j = sum_i c_i s_(j-i)``; for j > 2r-d every index j-i that survives
    is even and at least 2(r-d+1), i.e. each h_j is an explicit combination
    of isotropic relation generators.  This function checks that identity
    symbolically and raises on any mismatch.
    """
    if not 1 <= d <= r:
        raise ValueError(f"need 1 <= d <= r, got d={d}, r={r}")
    n = 2 * r
    signed = [ChernPoly.one()] + [(-1) ** i * cgen(i) for i in range(1, d + 1)]
    h = series_inverse(signed, n)
    s = _symplectic_kernel_inverse(d, n)
    lowest_relation = 2 * (r - d + 1)
    for j in range(n - d + 1, n + 1):
        acc = ChernPoly.zero()
        for i in range(0, d + 1):
            k = j - i
            if k < 0 or s[k].is_zero():
                continue
            if k > 0 and k < lowest_relation:
                raise VerificationError(
                    f"h_{j} needs inverse component {k} outside the relation range")
            acc = acc + (cgen(i) if i else ChernPoly.one()) * s[k]
        if acc != h[j]:
            raise VerificationError(f"containment identity failed at index {j}")
    return True


@dataclass
class RestrictionRow:
    half_degree: int
    rank_source: int
    rank_target: int
    surjective: bool
    injective: bool

    @property
    def bijective(self) -> bool:
        return self.surjective and self.injective


@dataclass
class RestrictionReport:
    d: int
    r: int
    bound: int
    rows: list[RestrictionRow]
    first_non_bijective: Optional[int]

    def to_json_obj(self) -> dict:
        return {
            "d": self.d,
            "r": self.r,
            "bijective_bound": self.bound,
            "first_non_bijective": self.first_non_bijective,
            "rows": [
                {
                    "half_degree": row.half_degree,
                    "rank_source": row.rank_source,
                    "rank_target": row.rank_target,
                    "surjective": row.surjective,
                    "injective": row.injective,
                    "bijective": row.bijective,
                }
                for row in self.rows
            ],
        }


def restriction_report(d: int, n: int, r: int,
                       up_to_half_degree: Optional[int] = None) -> RestrictionReport:
    """Degreewise behaviour of restriction from the ordinary Grassmannian of
    d-planes in C^n (n = 2r) to the isotropic one, generators to generators.

    Surjectivity in every degree follows from the containment certificate
    plus the fact that the map is the identity on monomials; injectivity in
    degree 2p is rank equality.  Raises if surjectivity fails anywhere or if
    bijectivity fails for p <= 2(r-d)+1.
    """
    if n != 2 * r:
        raise ValueError(f"the isotropic side needs n = 2r, got n={n}, r={r}")
    if not 1 <= d <= r:
        raise ValueError(f"need 1 <= d <= r, got d={d}, r={r}")
    restriction_containment(d, r)
    cap = isotropic_dimension(d, r) if up_to_half_degree is None else up_to_half_degree
    table_g = graded_table(grassmannian_presentation(d, n), 2 * cap)
    table_l = graded_table(isotropic_presentation(d, r), 2 * cap)
    bound = 2 * (r - d) + 1
    rows: list[RestrictionRow] = []
    first_bad: Optional[int] = None
    for p in range(cap + 1):
        rank_g = table_g.rank(2 * p)
        rank_l = table_l.rank(2 * p)
        if rank_l > rank_g:
            raise VerificationError(
                f"restriction cannot be surjective at half-degree {p}: "
                f"{rank_g} -> {rank_l}")
        row = RestrictionRow(p, rank_g, rank_l, True, rank_g == rank_l)
        rows.append(row)
        if not row.bijective and first_bad is None:
            first_bad = p
        if not row.bijective and (p <= bound or d <= 1):
            raise VerificationError(
                f"expected bijectivity at half-degree {p} (bound {bound}, d={d})")
    return RestrictionReport(d, r, bound, rows, first_bad)
