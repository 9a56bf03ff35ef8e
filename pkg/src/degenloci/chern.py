"""Sparse polynomial algebra over integer Chern-class generators.

A generator is a name like ``c3`` or ``s1``: a letter block followed by a
positive index i, carrying cohomological degree 2i.  Polynomials are sparse
maps from monomials (sorted tuples of (name, exponent) pairs) to nonzero
arbitrary-precision integer coefficients, so all identities here are exact.

Total Chern-class style data is passed around as a *component list*
``c = [c_0, c_1, ..., c_N]`` whose i-th entry is the (polynomial) component
of cohomological degree 2i; indices outside the list are read as zero and
``c_0`` must be 1 where a unit is required.
"""

from __future__ import annotations

import re
from typing import Optional, Sequence, Union

Monomial = tuple[tuple[str, int], ...]

_GEN_RE = re.compile(r"([A-Za-z]+)([0-9]+)$")


def generator_degree(name: str) -> int:
    """Cohomological degree of a generator: ``c3`` -> 6, ``s1`` -> 2."""
    m = _GEN_RE.match(name)
    if not m or int(m.group(2)) < 1:
        raise ValueError(f"bad generator name {name!r}; want letters + positive index")
    return 2 * int(m.group(2))


def monomial_degree(mon: Monomial) -> int:
    return sum(generator_degree(name) * e for name, e in mon)


def _mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for name, e in b:
        acc[name] = acc.get(name, 0) + e
    return tuple(sorted(acc.items()))


class ChernPoly:
    """Immutable-by-convention sparse integer polynomial."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict[Monomial, int]] = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for mon, coeff in terms.items():
                if coeff:
                    clean[tuple(sorted(mon))] = int(coeff)
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "ChernPoly":
        return ChernPoly()

    @staticmethod
    def const(k: int) -> "ChernPoly":
        return ChernPoly({(): k}) if k else ChernPoly()

    @staticmethod
    def one() -> "ChernPoly":
        return ChernPoly.const(1)

    @staticmethod
    def gen(name: str, exp: int = 1) -> "ChernPoly":
        generator_degree(name)  # validates the name
        if exp < 0:
            raise ValueError("exponent must be nonnegative")
        if exp == 0:
            return ChernPoly.one()
        return ChernPoly({((name, exp),): 1})

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other: Union["ChernPoly", int]) -> "ChernPoly":
        if isinstance(other, ChernPoly):
            return other
        if isinstance(other, int):
            return ChernPoly.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Union["ChernPoly", int]) -> "ChernPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for mon, coeff in other.terms.items():
            acc[mon] = acc.get(mon, 0) + coeff
        return ChernPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "ChernPoly":
        return ChernPoly({mon: -c for mon, c in self.terms.items()})

    def __sub__(self, other: Union["ChernPoly", int]) -> "ChernPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union["ChernPoly", int]) -> "ChernPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["ChernPoly", int]) -> "ChernPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = _mul_monomials(m1, m2)
                acc[mon] = acc.get(mon, 0) + c1 * c2
        return ChernPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ChernPoly":
        if n < 0:
            raise ValueError("negative power")
        result = ChernPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ChernPoly.const(other)
        return isinstance(other, ChernPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mon: Monomial) -> int:
        return self.terms.get(tuple(sorted(mon)), 0)

    def homogeneous_degree(self) -> Optional[int]:
        """Common cohomological degree of all terms; None for the zero
        polynomial; raises if the polynomial is inhomogeneous."""
        degs = {monomial_degree(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous polynomial, degrees {sorted(degs)}")
        return degs.pop()

    def homogeneous_part(self, degree: int) -> "ChernPoly":
        return ChernPoly({m: c for m, c in self.terms.items()
                          if monomial_degree(m) == degree})

    def generators(self) -> set[str]:
        return {name for mon in self.terms for name, _ in mon}

    def substitute(self, name: str, value: Union["ChernPoly", int]) -> "ChernPoly":
        """Replace one generator by a polynomial (or integer)."""
        value = self._coerce(value)
        out = ChernPoly.zero()
        for mon, coeff in self.terms.items():
            piece = ChernPoly.const(coeff)
            for gname, e in mon:
                factor = value if gname == name else ChernPoly.gen(gname)
                piece = piece * factor ** e
            out = out + piece
        return out

    # -- serialization -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in graded-lexicographic monomial order (the canonical order
        used for printing and serialization)."""
        return sorted(self.terms.items(),
                      key=lambda kv: (monomial_degree(kv[0]), kv[0]))

    def to_json_obj(self) -> list[dict]:
        out = []
        for mon, coeff in self.sorted_terms():
            out.append({"monomial": [[name, e] for name, e in mon],
                        "coefficient": str(coeff)})
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mon, coeff in self.sorted_terms():
            body = "*".join(name if e == 1 else f"{name}^{e}" for name, e in mon)
            if not body:
                bits.append(f"{coeff}")
            elif coeff == 1:
                bits.append(body)
            elif coeff == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{coeff}*{body}")
        s = " + ".join(bits)
        return s.replace("+ -", "- ")

    __repr__ = __str__


def cgen(i: int) -> ChernPoly:
    """The standard generator ``c_i`` (cohomological degree 2i)."""
    return ChernPoly.gen(f"c{i}")


Components = Sequence[Union[ChernPoly, int]]


def _component(c: Components, i: int) -> ChernPoly:
    """i-th entry of a component list; 0 outside the list."""
    if i < 0 or i >= len(c):
        return ChernPoly.zero()
    entry = c[i]
    return entry if isinstance(entry, ChernPoly) else ChernPoly.const(entry)


def series_inverse(c: Components, cap: int) -> list[ChernPoly]:
    """Components ``s_0..s_cap`` of the multiplicative inverse of the series
    with components ``c``, solved degree by degree from the convolution
    ``sum_i c_i * s_(j-i) = 0`` for j >= 1.

    Requires ``c_0 == 1``.  The defining identity is re-checked on the result
    before returning, so a wrong answer cannot escape silently.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    if _component(c, 0) != ChernPoly.one():
        raise ValueError("series must start with component 1")
    s: list[ChernPoly] = [ChernPoly.one()]
    for j in range(1, cap + 1):
        acc = ChernPoly.zero()
        for i in range(1, j + 1):
            ci = _component(c, i)
            if not ci.is_zero():
                acc = acc + ci * s[j - i]
        s.append(-acc)
    for j in range(1, cap + 1):
        conv = ChernPoly.zero()
        for i in range(0, j + 1):
            conv = conv + _component(c, i) * s[j - i]
        if not conv.is_zero():
            raise ArithmeticError(f"inverse series failed self-check at index {j}")
    return s


def schur_determinant(shape: Sequence[int], c: Components,
                      size: Optional[int] = None) -> ChernPoly:
    """Giambelli-style determinant ``det(c_(shape_i + j - i))`` of order
    ``size``, the Schur polynomial of ``shape`` in the components ``c``.

    ``shape`` is padded with zeros up to ``size`` (default: its own length);
    component index 0 reads as 1 and negative or out-of-range indices as 0.
    """
    parts = [int(p) for p in shape]
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"shape not weakly decreasing: {shape!r}")
    if any(p < 0 for p in parts):
        raise ValueError(f"negative entry in shape: {shape!r}")
    n = len(parts) if size is None else int(size)
    if n < len([p for p in parts if p]):
        raise ValueError("size smaller than the number of nonzero parts")
    parts = (parts + [0] * n)[:n]
    if n == 0:
        return ChernPoly.one()

    def entry(i: int, j: int) -> ChernPoly:
        idx = parts[i] + j - i
        if idx == 0:
            return ChernPoly.one()
        return _component(c, idx)

    # Laplace expansion along columns, memoized on the surviving row set.
    cache: dict[tuple[int, ...], ChernPoly] = {}

    def minor(rows: tuple[int, ...]) -> ChernPoly:
        if not rows:
            return ChernPoly.one()
        if rows in cache:
            return cache[rows]
        j = n - len(rows)
        acc = ChernPoly.zero()
        for pos, i in enumerate(rows):
            e = entry(i, j)
            if e.is_zero():
                continue
            sub = minor(rows[:pos] + rows[pos + 1:])
            term = e * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        cache[rows] = acc
        return acc

    return minor(tuple(range(n)))


def qtilde(mu: Sequence[int], c: Components) -> ChernPoly:
    """Pfaffian-style Schur Q-polynomial in the components ``c``.

    For a strict shape ``mu``: the empty shape gives 1, a single row (i)
    gives ``c_i``, a two-row shape (i, j) gives
    ``c_i*c_j + 2*sum_{k=1..j} (-1)^k c_(i+k)*c_(j-k)``, and longer shapes
    expand along the first row after padding odd lengths with a zero part.
    """
    parts = [int(p) for p in mu if p != 0]
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {mu!r}")
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"shape not strictly decreasing: {mu!r}")

    def two_row(i: int, j: int) -> ChernPoly:
        if j == 0:
            return _component(c, i) if i else ChernPoly.one()
        acc = _component(c, i) * _component(c, j)
        for k in range(1, j + 1):
            term = 2 * _component(c, i + k) * _component(c, j - k)
            acc = acc + (-term if k % 2 else term)
        return acc

    def expand(rows: tuple[int, ...]) -> ChernPoly:
        if not rows:
            return ChernPoly.one()
        if len(rows) == 1:
            return two_row(rows[0], 0)
        if len(rows) % 2 == 1:
            rows = rows + (0,)
        if len(rows) == 2:
            return two_row(rows[0], rows[1])
        acc = ChernPoly.zero()
        for j in range(1, len(rows)):
            rest = rows[1:j] + rows[j + 1:]
            term = two_row(rows[0], rows[j]) * expand(rest)
            acc = acc + (term if j % 2 == 1 else -term)
        return acc

    return expand(tuple(parts))
