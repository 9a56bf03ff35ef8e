"""Bounded integer partitions and the part-doubling bijection.

Everything downstream counts partitions inside a box (at most ``max_length``
rows, each part at most ``max_part``) or strict partitions with bounded
largest part.  Enumeration order is lexicographic descending and is part of
the contract: serialized output must be reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence


def _normalize(parts: Sequence[int]) -> tuple[int, ...]:
    out = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {parts!r}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts!r}")
    return out


class Partition:
    """A weakly decreasing tuple of positive integers.  () is the empty one."""

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[int] = ()):
        object.__setattr__(self, "parts", _normalize(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, i: int) -> int:
        """i-th part, 1-indexed, zero once i exceeds the length."""
        if i < 1:
            raise IndexError("parts are 1-indexed")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [sum(1 for p in self.parts if p > j) for j in range(self.parts[0])]
        return Partition(cols)

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.parts))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.parts)})"


class StrictPartition(Partition):
    """A partition with pairwise distinct parts."""

    __slots__ = ()

    def __init__(self, parts: Sequence[int] = ()):
        super().__init__(parts)
        ps = self.parts
        if any(ps[i] == ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"parts not strictly decreasing: {parts!r}")


@dataclass(frozen=True)
class BoxConstraint:
    """Bounds for partition enumeration; max_length=None means unbounded."""

    max_part: int
    max_length: Optional[int] = None


def enumerate_box_partitions(weight: int, box: BoxConstraint) -> list[Partition]:
    """All partitions of ``weight`` fitting in ``box``, lex descending."""
    if weight < 0:
        raise ValueError("weight must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, slots: Optional[int], prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if slots is not None and slots == 0:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, None if slots is None else slots - 1, prefix)
            prefix.pop()

    rec(weight, box.max_part, box.max_length, [])
    return out


def enumerate_strict_partitions(weight: int, max_part: int) -> list[StrictPartition]:
    """All strict partitions of ``weight`` with parts <= max_part, lex descending."""
    if weight < 0:
        raise ValueError("weight must be nonnegative")
    out: list[StrictPartition] = []

    def rec(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(StrictPartition(prefix))
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p - 1, prefix)
            prefix.pop()

    rec(weight, max_part, [])
    return out


@lru_cache(maxsize=None)
def _count_box(weight: int, max_part: int, max_length: int) -> int:
    # max_length == -1 encodes "unbounded"
    if weight == 0:
        return 1
    if max_part <= 0 or max_length == 0:
        return 0
    total = _count_box(weight, max_part - 1, max_length)
    if weight >= max_part:
        total += _count_box(weight - max_part, max_part,
                            max_length - 1 if max_length > 0 else -1)
    return total


def count_box_partitions(weight: int, max_part: int,
                         max_length: Optional[int] = None) -> int:
    """Number of partitions of ``weight`` with parts <= max_part and at most
    max_length rows.  Exact integer arithmetic, safe for weights in the
    hundreds."""
    if weight < 0:
        raise ValueError("weight must be nonnegative")
    return _count_box(weight, max(max_part, 0), -1 if max_length is None else max_length)


@lru_cache(maxsize=None)
def count_strict_partitions(weight: int, max_part: int) -> int:
    """Number of strict partitions of ``weight`` with parts <= max_part."""
    if weight < 0:
        raise ValueError("weight must be nonnegative")
    if weight == 0:
        return 1
    if max_part <= 0:
        return 0
    total = count_strict_partitions(weight, max_part - 1)
    if weight >= max_part:
        total += count_strict_partitions(weight - max_part, max_part - 1)
    return total


def merge_doubled(lam: Partition, mu: StrictPartition) -> Partition:
    """Interleave two copies of every part of ``lam`` with the parts of ``mu``.

    The result has weight 2*|lam| + |mu|.  Together with :func:`split_doubled`
    this realizes the bijection behind the rank-count identity
    ``#{partitions of w, parts <= r} = sum over w = s + 2t of
    #{strict partitions of s} * #{partitions of t}`` (parts <= r throughout).
    """
    doubled = [p for p in lam for _ in (0, 1)]
    merged = sorted(list(mu.parts) + doubled, reverse=True)
    return Partition(merged)


def split_doubled(nu: Partition) -> tuple[StrictPartition, Partition]:
    """Inverse of :func:`merge_doubled`.

    Parts with odd multiplicity contribute one copy to the strict partition;
    every remaining pair goes to the doubled partition.
    """
    mu: list[int] = []
    lam: list[int] = []
    for p in sorted(set(nu.parts), reverse=True):
        m = nu.parts.count(p)
        if m % 2 == 1:
            mu.append(p)
        lam.extend([p] * (m // 2))
    return StrictPartition(mu), Partition(sorted(lam, reverse=True))


@dataclass
class DoublingReport:
    """Outcome of a doubling-bijection verification sweep."""

    q_max: int
    max_part: int
    weights_checked: int
    pairs_checked: int
    passed: bool
    failure: Optional[str] = None

    def to_json_obj(self) -> dict:
        return {
            "q_max": self.q_max,
            "max_part": self.max_part,
            "weights_checked": self.weights_checked,
            "pairs_checked": self.pairs_checked,
            "passed": self.passed,
            "failure": self.failure,
        }


def verify_doubling_bijection(q_max: int, max_part: int) -> DoublingReport:
    """Check the cardinality identity and the merge/split round trip for every
    weight up to ``q_max`` with parts bounded by ``max_part``."""
    pairs = 0
    for w in range(q_max + 1):
        lhs = count_box_partitions(w, max_part)
        rhs = 0
        for s in range(w + 1):
            t, rem = divmod(w - s, 2)
            if rem:
                continue
            rhs += count_strict_partitions(s, max_part) * count_box_partitions(t, max_part)
        if lhs != rhs:
            return DoublingReport(q_max, max_part, w, pairs, False,
                                  f"count mismatch at weight {w}: {lhs} != {rhs}")
        seen: set[tuple[int, ...]] = set()
        for s in range(w + 1):
            t, rem = divmod(w - s, 2)
            if rem:
                continue
            for mu in enumerate_strict_partitions(s, max_part):
                for lam in enumerate_box_partitions(t, BoxConstraint(max_part)):
                    nu = merge_doubled(lam, mu)
                    pairs += 1
                    if nu.weight != w:
                        return DoublingReport(q_max, max_part, w, pairs, False,
                                              f"merge weight off for {mu!r}, {lam!r}")
                    back_mu, back_lam = split_doubled(nu)
                    if back_mu != mu or back_lam != lam:
                        return DoublingReport(q_max, max_part, w, pairs, False,
                                              f"round trip failed for {mu!r}, {lam!r}")
                    if nu.parts in seen:
                        return DoublingReport(q_max, max_part, w, pairs, False,
                                              f"merge not injective at {nu!r}")
                    seen.add(nu.parts)
        if len(seen) != lhs:
            return DoublingReport(q_max, max_part, w, pairs, False,
                                  f"merge not surjective at weight {w}")
    return DoublingReport(q_max, max_part, q_max + 1, pairs, True)
