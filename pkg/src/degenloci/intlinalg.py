"""Exact linear algebra over the integers.

Small dense routines used for graded ring tables: rank via fraction-free
(Bareiss) elimination and elementary divisors via Smith reduction.  Inputs
are lists of rows of Python ints; everything stays in exact arithmetic.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence


def _echelon(rows: Sequence[Sequence[int]]) -> tuple[int, list[int], int]:
    """Bareiss elimination core.

    Returns (rank, pivot column indices, last pivot).  By the fraction-free
    invariant the k-th pivot is, up to sign, the k x k minor of the input on
    the pivot rows and columns chosen so far, so the last pivot is a
    maximal-rank minor of the matrix.
    """
    m = [list(map(int, row)) for row in rows if any(row)]
    if not m:
        return 0, [], 1
    ncols = len(m[0])
    if any(len(row) != ncols for row in m):
        raise ValueError("ragged matrix")
    rank = 0
    prev = 1
    col = 0
    pivots: list[int] = []
    while rank < len(m) and col < ncols:
        pivot_row = None
        for i in range(rank, len(m)):
            if m[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            col += 1
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        piv = m[rank][col]
        for i in range(rank + 1, len(m)):
            if not any(m[i][col:]):
                continue
            factor = m[i][col]
            for j in range(col, ncols):
                m[i][j] = (piv * m[i][j] - factor * m[rank][j]) // prev
        prev = piv
        pivots.append(col)
        rank += 1
        col += 1
    return rank, pivots, prev


def fraction_free_echelon(rows: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Bareiss elimination; returns (rank, pivot column indices).

    Columns are consumed left to right, so with a graded-lex column order the
    non-pivot columns are the standard monomials of the quotient.
    """
    rank, pivots, _ = _echelon(rows)
    return rank, pivots


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals, computed fraction-free."""
    return _echelon(rows)[0]


def elementary_divisors(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form, divisibility-ordered.

    The length of the result is the rank; entries greater than 1 are the
    torsion invariants of the cokernel ``Z^ncols / rowspan``.
    """
    m = [list(map(int, row)) for row in rows if any(row)]
    if not m:
        return []
    ncols = len(m[0])
    if any(len(row) != ncols for row in m):
        raise ValueError("ragged matrix")

    divisors: list[int] = []
    top = 0  # active submatrix starts at (top, top) after column pruning
    nrows = len(m)

    def find_pivot(t: int) -> tuple[int, int] | None:
        best = None
        best_val = None
        for i in range(t, nrows):
            row = m[i]
            for j in range(t, ncols):
                v = row[j]
                if v:
                    a = abs(v)
                    if best_val is None or a < best_val:
                        best, best_val = (i, j), a
                        if a == 1:
                            return best
        return best

    while True:
        pos = find_pivot(top)
        if pos is None:
            break
        pi, pj = pos
        m[top], m[pi] = m[pi], m[top]
        for row in m:
            row[top], row[pj] = row[pj], row[top]
        # clear the pivot column and row, re-picking a smaller pivot whenever
        # a division leaves a remainder
        while True:
            piv = m[top][top]
            dirty = False
            for i in range(top + 1, nrows):
                v = m[i][top]
                if not v:
                    continue
                q = v // piv
                if q:
                    for j in range(top, ncols):
                        m[i][j] -= q * m[top][j]
                if m[i][top]:
                    m[top], m[i] = m[i], m[top]
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(top + 1, ncols):
                v = m[top][j]
                if not v:
                    continue
                q = v // piv
                if q:
                    for i in range(top, nrows):
                        m[i][j] -= q * m[i][top]
                if m[top][j]:
                    for i in range(top, nrows):
                        m[i][top], m[i][j] = m[i][j], m[i][top]
                    dirty = True
                    break
            if not dirty:
                break
        # make the pivot divide every remaining entry
        piv = m[top][top]
        offender = None
        for i in range(top + 1, nrows):
            row = m[i]
            for j in range(top + 1, ncols):
                if row[j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, ncols):
                m[top][j] += m[offender][j]
            continue
        divisors.append(abs(piv))
        top += 1
        if top >= nrows or top >= ncols:
            break

    # collect any full-zero tail handled above; normalize the divisor chain
    for k in range(len(divisors) - 1):
        if divisors[k + 1] % divisors[k]:
            raise ArithmeticError("Smith reduction produced a broken chain")
    return divisors


def rank_mod_prime(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank of the matrix over the field with p elements."""
    m = [[x % p for x in row] for row in rows]
    m = [row for row in m if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = pow(m[rank][col], -1, p)
        pivot = [(inv * x) % p for x in m[rank]]
        m[rank] = pivot
        for i in range(rank + 1, len(m)):
            factor = m[i][col]
            if factor:
                row = m[i]
                for j in range(col, ncols):
                    row[j] = (row[j] - factor * pivot[j]) % p
        rank += 1
        if rank == len(m):
            break
    return rank


def _small_prime_factors(value: int, bound: int = 1_000_000) -> tuple[list[int], int]:
    """Trial division: distinct primes up to the bound, plus any leftover."""
    primes = []
    for p in range(2, bound + 1):
        if p * p > value:
            break
        if value % p == 0:
            primes.append(p)
            while value % p == 0:
                value //= p
    if 1 < value <= bound * bound:
        primes.append(value)
        value = 1
    return primes, value


def torsion_invariants(rows: Sequence[Sequence[int]]) -> list[int]:
    """Elementary divisors greater than 1 (the torsion of the cokernel).

    The gcd of all maximal-rank minors is the product of the elementary
    divisors, so the cokernel is torsion-free exactly when that gcd is 1.
    Each Bareiss run hands us one maximal minor for free (the last pivot),
    and a few row/column shufflings usually drive the running gcd to 1.
    When a stubborn factor survives, every torsion prime must divide it, so
    a rank computation modulo each of its prime factors settles the
    question.  Only when a modular rank actually drops, witnessing real
    torsion, does the full Smith reduction run.
    """
    m = [list(map(int, row)) for row in rows if any(row)]
    if not m:
        return []
    rank, _, minor = _echelon(m)
    witness = abs(minor)
    third = len(m) // 3 or 1
    variants = (
        m[::-1],
        [row[::-1] for row in m],
        [row[::-1] for row in m[::-1]],
        m[third:] + m[:third],
        [row[::-1] for row in m[third:] + m[:third]],
    )
    for shuffled in variants:
        if witness == 1:
            return []
        rank2, _, minor2 = _echelon(shuffled)
        if rank2 != rank:
            raise ArithmeticError("rank changed under row reordering")
        witness = gcd(witness, abs(minor2))
    if witness == 1:
        return []
    primes, leftover = _small_prime_factors(witness)
    if leftover == 1 and all(rank_mod_prime(m, p) == rank for p in primes):
        return []
    return [d for d in elementary_divisors(rows) if d > 1]
