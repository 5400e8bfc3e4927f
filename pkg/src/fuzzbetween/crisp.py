"""Classical subsets of a finite universe, stored as indicator vectors.

Covers the indicator algebra, the Jaccard index, the weighted
symmetric-difference distance ``D_sigma(A, B) = sigma(A ^ B)`` and crisp
betweenness ``A & B <= C <= A | B``, whose triangle-equality
characterization is the reason ``D_sigma`` (and not its square root) is the
distance of interest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .core import FiniteUniverse, WeightedMeasure, check_same_universe, measure_of
from .errors import GuardExceededError, ValidationError

#: Largest |A ^ B| accepted by :func:`enumerate_between`.
ENUMERATION_GUARD = 24


@dataclass(frozen=True)
class CrispSet:
    universe: FiniteUniverse
    bits: tuple[bool, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        if len(bits) != len(self.universe):
            raise ValidationError(
                f"indicator has {len(bits)} entries, universe has {len(self.universe)}"
            )
        for b in bits:
            if b not in (0, 1):
                raise ValidationError(f"indicator values must be 0 or 1, got {b!r}")
        object.__setattr__(self, "bits", tuple(bool(b) for b in bits))

    @classmethod
    def from_members(cls, universe: FiniteUniverse, members: Iterable[str]) -> "CrispSet":
        members = list(members)
        for m in members:
            universe.position(m)
        chosen = set(members)
        return cls(universe, tuple(e in chosen for e in universe))

    @classmethod
    def empty(cls, universe: FiniteUniverse) -> "CrispSet":
        return cls(universe, (False,) * len(universe))

    @classmethod
    def full(cls, universe: FiniteUniverse) -> "CrispSet":
        return cls(universe, (True,) * len(universe))

    @classmethod
    def from_array(cls, universe: FiniteUniverse, bits) -> "CrispSet":
        return cls(universe, tuple(bool(b) for b in np.asarray(bits).tolist()))

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.bits, dtype=bool)
        arr.flags.writeable = False
        return arr

    @property
    def members(self) -> tuple[str, ...]:
        return tuple(e for e, b in zip(self.universe, self.bits) if b)

    def __len__(self) -> int:
        return sum(self.bits)

    def __contains__(self, element: object) -> bool:
        i = self.universe.index.get(element)  # type: ignore[arg-type]
        return i is not None and self.bits[i]

    def __iter__(self) -> Iterator[str]:
        return iter(self.members)

    def _binary(self, other: "CrispSet", op) -> "CrispSet":
        check_same_universe(self, other)
        return CrispSet(self.universe, tuple(op(p, q) for p, q in zip(self.bits, other.bits)))

    # Indicator identities: 1_{A|B} = 1_A + 1_B - 1_A 1_B, 1_{A&B} = 1_A 1_B,
    # 1_{A^B} = 1_A + 1_B - 2 1_A 1_B, 1_{X\A} = 1 - 1_A.
    def __or__(self, other: "CrispSet") -> "CrispSet":
        return self._binary(other, lambda p, q: p + q - p * q)

    def __and__(self, other: "CrispSet") -> "CrispSet":
        return self._binary(other, lambda p, q: p * q)

    def __xor__(self, other: "CrispSet") -> "CrispSet":
        return self._binary(other, lambda p, q: p + q - 2 * p * q)

    def __sub__(self, other: "CrispSet") -> "CrispSet":
        return self._binary(other, lambda p, q: p * (1 - q))

    def __invert__(self) -> "CrispSet":
        return CrispSet(self.universe, tuple(1 - p for p in self.bits))

    def __le__(self, other: "CrispSet") -> bool:
        check_same_universe(self, other)
        return all(q or not p for p, q in zip(self.bits, other.bits))

    def __ge__(self, other: "CrispSet") -> bool:
        return other <= self

    def __repr__(self) -> str:
        return "{" + ", ".join(self.members) + "}"


class SetAlgebra(NamedTuple):
    union: CrispSet
    intersection: CrispSet
    sym_diff: CrispSet
    complement_of_a: CrispSet


class Jaccard(NamedTuple):
    index: float
    distance: float


def set_algebra(a: CrispSet, b: CrispSet) -> SetAlgebra:
    check_same_universe(a, b)
    return SetAlgebra(a | b, a & b, a ^ b, ~a)


def jaccard(a: CrispSet, b: CrispSet) -> Jaccard:
    """Jaccard index |A & B| / |A | B| on raw cardinalities, and 1 - index.

    J(empty, empty) is 0 by convention, so the distance of the empty set to
    itself is 1.
    """
    check_same_universe(a, b)
    union = len(a | b)
    index = len(a & b) / union if union else 0.0
    return Jaccard(index, 1.0 - index)


def d_sigma(m: WeightedMeasure, a: CrispSet, b: CrispSet) -> float:
    """Weighted symmetric-difference distance sigma(A ^ B)."""
    check_same_universe(m, a, b)
    return measure_of(m, a ^ b)


def between_mask(a, b, c) -> np.ndarray:
    """Batched crisp betweenness over the last axis of boolean arrays.

    True where ``a & b <= c <= a | b`` holds at every element.
    """
    a = np.asarray(a, dtype=bool)
    b = np.asarray(b, dtype=bool)
    c = np.asarray(c, dtype=bool)
    lower_ok = ~(a & b) | c
    upper_ok = ~c | a | b
    return np.all(lower_ok & upper_ok, axis=-1)


def is_between(a: CrispSet, b: CrispSet, c: CrispSet) -> bool:
    check_same_universe(a, b, c)
    return (a & b) <= c <= (a | b)


def triangle_gap(m: WeightedMeasure, a: CrispSet, b: CrispSet, c: CrispSet) -> float:
    """D(A,C) + D(C,B) - D(A,B); zero exactly when C is between A and B."""
    check_same_universe(m, a, b, c)
    return d_sigma(m, a, c) + d_sigma(m, c, b) - d_sigma(m, a, b)


def triangle_gap_product_form(m: WeightedMeasure, a: CrispSet, b: CrispSet, c: CrispSet) -> float:
    """The same gap written as 2 * sum_x w(x) (1_A - 1_C)(x) (1_B - 1_C)(x)."""
    check_same_universe(m, a, b, c)
    return 2.0 * math.fsum(
        w * (p - r) * (q - r) for w, p, q, r in zip(m.weights, a.bits, b.bits, c.bits)
    )


def sqrt_triangle_gap(m: WeightedMeasure, a: CrispSet, b: CrispSet, c: CrispSet) -> float:
    """Triangle gap for sqrt(D_sigma); zero only when C equals A or B."""
    check_same_universe(m, a, b, c)
    return (
        math.sqrt(d_sigma(m, a, c)) + math.sqrt(d_sigma(m, c, b)) - math.sqrt(d_sigma(m, a, b))
    )


def between_decomposition(a: CrispSet, b: CrispSet, c: CrispSet) -> CrispSet | None:
    """Return Z = C minus (A & B) when C is between A and B, else None.

    Z is a subset of A ^ B and 1_C = 1_{A & B} + 1_Z.
    """
    if not is_between(a, b, c):
        return None
    return c - (a & b)


def enumerate_between(a: CrispSet, b: CrispSet) -> Iterator[CrispSet]:
    """Yield each of the 2**|A ^ B| sets between A and B exactly once."""
    check_same_universe(a, b)
    base = a & b
    free = [i for i, bit in enumerate((a ^ b).bits) if bit]
    if len(free) > ENUMERATION_GUARD:
        raise GuardExceededError(
            f"|A ^ B| = {len(free)} exceeds the enumeration guard of {ENUMERATION_GUARD}"
        )
    for choice in product((False, True), repeat=len(free)):
        bits = list(base.bits)
        for i, on in zip(free, choice):
            bits[i] = on
        yield CrispSet(a.universe, tuple(bits))
