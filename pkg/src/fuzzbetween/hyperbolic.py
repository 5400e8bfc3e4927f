"""Hyperbolic (split-complex) numbers as symmetric 2x2 matrices.

``z = a + b k`` with ``k**2 = 1`` is the matrix ``[[a, b], [b, a]]``.  All
such matrices are diagonalized by the same orthogonal matrix
``U = [[1, 1], [1, -1]] / sqrt(2)``::

    z = U diag(a + b, a - b) U = (a + b) P + (a - b) Q

with the orthogonal projections ``P = [[1, 1], [1, 1]] / 2`` and
``Q = [[1, -1], [-1, 1]] / 2``.  The eigenvalues ``plus = a + b`` and
``minus = a - b`` are the idempotent components.  Products, the matrix
(Loewner) order, meet and join all act independently on the two components.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Mapping, NamedTuple

import numpy as np

from .errors import NullConeError, ValidationError

U = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)
P = np.array([[0.5, 0.5], [0.5, 0.5]])
Q = np.array([[0.5, -0.5], [-0.5, 0.5]])
I2 = np.eye(2)
K = np.array([[0.0, 1.0], [1.0, 0.0]])

for _m in (U, P, Q, I2, K):
    _m.flags.writeable = False

NULL_CONE_RTOL = 1e-12


@dataclass(frozen=True)
class Hyperbolic:
    """The hyperbolic number ``a + b k``; stored canonically as ``(a, b)``."""

    a: float
    b: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    @classmethod
    def from_idempotent(cls, plus: float, minus: float) -> "Hyperbolic":
        """Build from the components along P and Q (eigenvalues a+b, a-b)."""
        return cls((plus + minus) / 2.0, (plus - minus) / 2.0)

    @classmethod
    def from_matrix(cls, m) -> "Hyperbolic":
        m = np.asarray(m, dtype=float)
        if m.shape != (2, 2) or m[0, 0] != m[1, 1] or m[0, 1] != m[1, 0]:
            raise ValidationError(f"not a hyperbolic matrix [[a, b], [b, a]]: {m.tolist()}")
        return cls(m[0, 0], m[0, 1])

    @classmethod
    def from_mapping(cls, data: Mapping[str, float]) -> "Hyperbolic":
        keys = set(data)
        if keys == {"a", "b"}:
            return cls(data["a"], data["b"])
        if keys == {"plus", "minus"}:
            return cls.from_idempotent(float(data["plus"]), float(data["minus"]))
        raise ValidationError(
            f"hyperbolic number needs exactly one of {{a, b}} or {{plus, minus}}, got keys {sorted(keys)}"
        )

    @property
    def plus(self) -> float:
        return self.a + self.b

    @property
    def minus(self) -> float:
        return self.a - self.b

    @property
    def idempotent(self) -> tuple[float, float]:
        return (self.plus, self.minus)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.b, self.a]])

    def idempotent_matrix(self) -> np.ndarray:
        """U diag(plus, minus) U, which equals :attr:`matrix` up to rounding."""
        return U @ np.diag([self.plus, self.minus]) @ U

    def projection_form(self) -> np.ndarray:
        """plus * P + minus * Q."""
        return self.plus * P + self.minus * Q

    def to_mapping(self, form: str = "ab") -> dict[str, float]:
        if form == "ab":
            return {"a": self.a, "b": self.b}
        if form == "idempotent":
            return {"plus": self.plus, "minus": self.minus}
        raise ValueError(f"unknown form {form!r}")

    # arithmetic -------------------------------------------------------------

    def __add__(self, other: "Hyperbolic") -> "Hyperbolic":
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Hyperbolic") -> "Hyperbolic":
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Hyperbolic":
        return Hyperbolic(-self.a, -self.b)

    def __mul__(self, other) -> "Hyperbolic":
        if isinstance(other, Hyperbolic):
            # [[a, b], [b, a]] @ [[c, d], [d, c]]
            return Hyperbolic(
                self.a * other.a + self.b * other.b, self.a * other.b + self.b * other.a
            )
        if isinstance(other, (int, float)):
            return Hyperbolic(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def norm_form(self) -> float:
        """a**2 - b**2, the determinant; zero exactly on the null cone."""
        return self.a * self.a - self.b * self.b

    def is_null_cone(self) -> bool:
        return abs(self.norm_form()) <= NULL_CONE_RTOL * max(1.0, self.a**2 + self.b**2)

    # order --------------------------------------------------------------------

    def __le__(self, other: "Hyperbolic") -> bool:
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return self.plus <= other.plus and self.minus <= other.minus

    def __ge__(self, other: "Hyperbolic") -> bool:
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return other <= self

    def __repr__(self) -> str:
        return f"Hyperbolic(a={self.a!r}, b={self.b!r})"


ZERO = Hyperbolic(0.0, 0.0)
ONE = Hyperbolic(1.0, 0.0)
UNIT_K = Hyperbolic(0.0, 1.0)


class HArith(NamedTuple):
    sum: Hyperbolic
    product: Hyperbolic
    negation: Hyperbolic


def h_arith(z: Hyperbolic, w: Hyperbolic) -> HArith:
    """Sum z + w, product z w and negation -z."""
    return HArith(z + w, z * w, -z)


def h_inverse(z: Hyperbolic) -> Hyperbolic:
    """(a - b k) / (a**2 - b**2); raises NullConeError on zero divisors."""
    if z.is_null_cone():
        raise NullConeError(f"{z!r} lies on the null cone a^2 = b^2 and has no inverse")
    det = z.norm_form()
    return Hyperbolic(z.a / det, -z.b / det)


class Ordering(str, enum.Enum):
    EQUAL = "equal"
    LESS_EQUAL = "less-or-equal"
    GREATER_EQUAL = "greater-or-equal"
    INCOMPARABLE = "incomparable"


def h_partial_cmp(z: Hyperbolic, w: Hyperbolic) -> Ordering:
    """Compare in the matrix order: z <= w iff w - z is positive semi-definite."""
    le, ge = z <= w, w <= z
    if le and ge:
        return Ordering.EQUAL
    if le:
        return Ordering.LESS_EQUAL
    if ge:
        return Ordering.GREATER_EQUAL
    return Ordering.INCOMPARABLE


class MeetJoin(NamedTuple):
    meet: Hyperbolic
    join: Hyperbolic


def h_meet_join(z: Hyperbolic, w: Hyperbolic) -> MeetJoin:
    """Greatest lower and least upper bound: componentwise min/max along P, Q."""
    return MeetJoin(meet(z, w), join(z, w))


# Comparable arguments return an operand unchanged, so the lattice order and
# meet/join agree exactly even where the (a, b) round trip would round.
def meet(z: Hyperbolic, w: Hyperbolic) -> Hyperbolic:
    if z <= w:
        return z
    if w <= z:
        return w
    return Hyperbolic.from_idempotent(min(z.plus, w.plus), min(z.minus, w.minus))


def join(z: Hyperbolic, w: Hyperbolic) -> Hyperbolic:
    if w <= z:
        return z
    if z <= w:
        return w
    return Hyperbolic.from_idempotent(max(z.plus, w.plus), max(z.minus, w.minus))


def in_D(z: Hyperbolic) -> bool:
    """0 <= z <= I2, i.e. both a + b and a - b lie in [0, 1]."""
    return 0.0 <= z.plus <= 1.0 and 0.0 <= z.minus <= 1.0


@dataclass(frozen=True)
class HInterval:
    """The order interval {x : lo <= x <= hi}, with lo = z meet w, hi = z join w."""

    lo: Hyperbolic
    hi: Hyperbolic

    def __post_init__(self) -> None:
        if not self.lo <= self.hi:
            raise ValidationError(f"interval bounds are not ordered: {self.lo!r} !<= {self.hi!r}")

    def __contains__(self, x: Hyperbolic) -> bool:
        return self.lo <= x <= self.hi

    def point(self, tau: Hyperbolic) -> Hyperbolic:
        """lo + tau (hi - lo) for tau in D; sweeping D covers the interval."""
        if not in_D(tau):
            raise ValidationError(f"interval parameter {tau!r} is not in D")
        return self.lo + tau * (self.hi - self.lo)

    def parameter(self, x: Hyperbolic) -> Hyperbolic | None:
        """Some tau in D with point(tau) == x, solved per component, or None."""
        ts = []
        for lo, hi, v in zip(self.lo.idempotent, self.hi.idempotent, x.idempotent):
            if hi == lo:
                if v != lo:
                    return None
                ts.append(0.0)
            else:
                t = (v - lo) / (hi - lo)
                if not 0.0 <= t <= 1.0:
                    return None
                ts.append(t)
        return Hyperbolic.from_idempotent(*ts)


def h_interval(z: Hyperbolic, w: Hyperbolic) -> HInterval:
    mj = h_meet_join(z, w)
    return HInterval(mj.meet, mj.join)


def h_interval_contains(z: Hyperbolic, w: Hyperbolic, x: Hyperbolic) -> bool:
    """True iff z meet w <= x <= z join w."""
    return x in h_interval(z, w)


# ---------------------------------------------------------------------------
# batched helpers; last axis holds the idempotent components (plus, minus)
# ---------------------------------------------------------------------------


def le_array(z, w) -> np.ndarray:
    return np.all(np.asarray(z) <= np.asarray(w), axis=-1)


def meet_array(z, w) -> np.ndarray:
    return np.minimum(z, w)


def join_array(z, w) -> np.ndarray:
    return np.maximum(z, w)
