"""D-valued membership functions.

A map ``M`` from the universe into D (hyperbolic numbers between 0 and I2)
is the same thing as an ordered pair of classical membership functions::

    M(x) = mu1(x) P + mu2(x) Q
         = 1/2 [[mu1 + mu2, mu1 - mu2], [mu1 - mu2, mu1 + mu2]]

so every operation here reduces to the corresponding classical one along P
and along Q.  Batched functions take arrays of shape ``(..., n, 2)``: the
universe on axis -2 and the idempotent components ``(mu1, mu2)`` on axis -1,
matching the ``(plus, minus)`` layout of :mod:`fuzzbetween.hyperbolic`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import fuzzy
from .core import FiniteUniverse, LevelMeasure, WeightedMeasure, check_same_universe
from .crisp import CrispSet
from .errors import ValidationError
from .fuzzy import MembershipFn, metric_D_array
from .hyperbolic import Hyperbolic, join_array, le_array, meet_array

CUT_MODES = ("pair", "intersection")


@dataclass(frozen=True)
class HMembershipFn:
    """A D-valued membership function stored as its components along P and Q."""

    mu1: MembershipFn
    mu2: MembershipFn

    def __post_init__(self) -> None:
        check_same_universe(self.mu1, self.mu2)

    @property
    def universe(self) -> FiniteUniverse:
        return self.mu1.universe

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.stack([self.mu1.array, self.mu2.array], axis=-1)
        arr.flags.writeable = False
        return arr

    @classmethod
    def from_array(cls, universe: FiniteUniverse, arr) -> "HMembershipFn":
        arr = np.asarray(arr, dtype=float)
        return cls(
            MembershipFn.from_array(universe, arr[..., 0]),
            MembershipFn.from_array(universe, arr[..., 1]),
        )

    @classmethod
    def from_values(cls, universe: FiniteUniverse, values) -> "HMembershipFn":
        """Build from per-element hyperbolic numbers; each must lie in D."""
        values = list(values)
        if len(values) != len(universe):
            raise ValidationError(f"expected {len(universe)} values, got {len(values)}")
        return cls(
            MembershipFn(universe, tuple(z.plus for z in values)),
            MembershipFn(universe, tuple(z.minus for z in values)),
        )

    def value(self, element: str) -> Hyperbolic:
        i = self.universe.position(element)
        return Hyperbolic.from_idempotent(self.mu1.values[i], self.mu2.values[i])

    def values(self) -> tuple[Hyperbolic, ...]:
        return tuple(
            Hyperbolic.from_idempotent(p, q) for p, q in zip(self.mu1.values, self.mu2.values)
        )

    def matrices(self) -> np.ndarray:
        """Shape (n, 2, 2): the symmetric matrix M(x) for every element."""
        p, q = self.mu1.array, self.mu2.array
        a, b = (p + q) / 2.0, (p - q) / 2.0
        return np.stack([np.stack([a, b], -1), np.stack([b, a], -1)], -2)


def h_from_pair(mu1: MembershipFn, mu2: MembershipFn) -> HMembershipFn:
    return HMembershipFn(mu1, mu2)


def h_components(m: HMembershipFn) -> tuple[MembershipFn, MembershipFn]:
    return m.mu1, m.mu2


def _wrap(universe: FiniteUniverse, arr: np.ndarray) -> HMembershipFn:
    return HMembershipFn.from_array(universe, arr)


def h_complement(m: HMembershipFn) -> HMembershipFn:
    """I2 - M, i.e. the classical complements (1 - mu1, 1 - mu2)."""
    return HMembershipFn(fuzzy.complement(m.mu1), fuzzy.complement(m.mu2))


def h_product(m: HMembershipFn, n: HMembershipFn) -> HMembershipFn:
    """Pointwise matrix product; the algebraic product along P and along Q."""
    u = check_same_universe(m, n)
    return _wrap(u, m.array * n.array)


class HJoinMeet(NamedTuple):
    join: HMembershipFn
    meet: HMembershipFn


def h_join_meet(m: HMembershipFn, n: HMembershipFn) -> HJoinMeet:
    u = check_same_universe(m, n)
    return HJoinMeet(_wrap(u, join_array(m.array, n.array)), _wrap(u, meet_array(m.array, n.array)))


# ---------------------------------------------------------------------------
# levels and cuts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HLevel:
    """A cut level alpha = [[alpha1, alpha2], [alpha2, alpha1]] in D.

    The cut thresholds are ``alpha1 + alpha2`` along P and ``alpha1 - alpha2``
    along Q.  :meth:`from_thresholds` keeps the thresholds exactly as given,
    since recomputing them from (alpha1, alpha2) can round.
    """

    alpha1: float
    alpha2: float
    thresholds: tuple[float, float] = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        a1, a2 = float(self.alpha1), float(self.alpha2)
        object.__setattr__(self, "alpha1", a1)
        object.__setattr__(self, "alpha2", a2)
        if self.thresholds is None:
            object.__setattr__(self, "thresholds", (a1 + a2, a1 - a2))
        t1, t2 = self.thresholds
        if not (0.0 <= t1 <= 1.0 and 0.0 <= t2 <= 1.0):
            raise ValidationError(
                f"level ({a1}, {a2}) is outside D: need 0 <= a1+a2 <= 1 and 0 <= a1-a2 <= 1"
            )

    @classmethod
    def from_thresholds(cls, upper: float, lower: float) -> "HLevel":
        upper, lower = float(upper), float(lower)
        return cls((upper + lower) / 2.0, (upper - lower) / 2.0, (upper, lower))

    def as_hyperbolic(self) -> Hyperbolic:
        return Hyperbolic(self.alpha1, self.alpha2)


def h_alpha_cut(m: HMembershipFn, level: HLevel) -> CrispSet:
    """{x : M(x) > alpha}: mu1 > alpha1 + alpha2 and mu2 > alpha1 - alpha2."""
    first, second = h_alpha_cut_pair(m, level)
    return first & second


def h_alpha_cut_pair(m: HMembershipFn, level: HLevel) -> tuple[CrispSet, CrispSet]:
    """The strong cuts along P and along Q separately.

    Together they form the crisp D-valued set 1_{A1} P + 1_{A2} Q; this is
    the cut used for a-betweenness.
    """
    t1, t2 = level.thresholds
    u = m.universe
    return (
        CrispSet(u, tuple(v > t1 for v in m.mu1.values)),
        CrispSet(u, tuple(v > t2 for v in m.mu2.values)),
    )


def is_atanassov(m: HMembershipFn) -> bool:
    """mu1 >= mu2 everywhere."""
    return all(p >= q for p, q in zip(m.mu1.values, m.mu2.values))


def atanassov_pair(m: HMembershipFn) -> tuple[MembershipFn, MembershipFn]:
    """Membership (mu1 + mu2)/2 and non-membership (mu1 - mu2)/2.

    Both are membership functions, summing to at most 1, when ``m`` is Atanassov.
    """
    if not is_atanassov(m):
        raise ValidationError("not an Atanassov hyperbolic fuzzy set (mu1 < mu2 somewhere)")
    p, q = m.mu1.array, m.mu2.array
    return (
        MembershipFn.from_array(m.universe, (p + q) / 2.0),
        MembershipFn.from_array(m.universe, (p - q) / 2.0),
    )


# ---------------------------------------------------------------------------
# betweenness
# ---------------------------------------------------------------------------


def h_between_mask(a, b, c) -> np.ndarray:
    """meet(A, B)(x) <= C(x) <= join(A, B)(x) in the hyperbolic order, all x."""
    a, b, c = np.asarray(a), np.asarray(b), np.asarray(c)
    ok = le_array(meet_array(a, b), c) & le_array(c, join_array(a, b))
    return np.all(ok, axis=-1)


def h_is_between(a: HMembershipFn, b: HMembershipFn, c: HMembershipFn) -> bool:
    check_same_universe(a, b, c)
    return bool(h_between_mask(a.array, b.array, c.array))


def h_witness_decomposition(
    a: HMembershipFn, b: HMembershipFn, c: HMembershipFn
) -> HMembershipFn | None:
    """M_Z = C - meet(A, B) when C is between A and B, else None."""
    if not h_is_between(a, b, c):
        return None
    return _wrap(c.universe, c.array - meet_array(a.array, b.array))


def h_a_between_mask(a, b, c, cuts: str = "pair") -> np.ndarray:
    """Crisp betweenness of the a-cuts at every level a in D.

    Betweenness of crisp sets is checked element by element, and whether x
    lies in a strong cut changes only when a threshold crosses one of the
    values at x.  So for each element it is enough to test thresholds drawn
    from {0} plus that element's own component values.  With ``cuts="pair"``
    each cut is the pair of component cuts and betweenness is required along
    P and along Q; ``cuts="intersection"`` uses the single set where both
    thresholds are exceeded.

    Only the order of the values matters, so integer-coded grids (with 0
    kept as 0) may be passed instead of floats.
    """
    if cuts not in CUT_MODES:
        raise ValueError(f"cuts must be one of {CUT_MODES}, got {cuts!r}")
    a, b, c = (np.asarray(v) for v in (a, b, c))
    comps = [(a[..., k], b[..., k], c[..., k]) for k in (0, 1)]  # each (..., n)
    ok = np.ones(np.broadcast_shapes(a.shape, b.shape, c.shape)[:-2], dtype=bool)
    if cuts == "pair":
        for vals in comps:
            for level in (0, *vals):
                ok &= _crisp_between_cells(*(v > level for v in vals)).all(axis=-1)
        return ok
    for lv1 in (0, *comps[0]):
        for lv2 in (0, *comps[1]):
            joint = [(p > lv1) & (q > lv2) for p, q in zip(*comps)]
            ok &= _crisp_between_cells(*joint).all(axis=-1)
    return ok


def _crisp_between_cells(ca, cb, cc) -> np.ndarray:
    return (~(ca & cb) | cc) & (~cc | ca | cb)


def h_is_a_between(
    a: HMembershipFn, b: HMembershipFn, c: HMembershipFn, cuts: str = "pair"
) -> bool:
    check_same_universe(a, b, c)
    return bool(h_a_between_mask(a.array, b.array, c.array, cuts=cuts))


# ---------------------------------------------------------------------------
# hyperbolic-valued distance
# ---------------------------------------------------------------------------


def h_metric_D_array(weights, eta: LevelMeasure, a, b) -> np.ndarray:
    """Idempotent components (D(mu1_A, mu1_B), D(mu2_A, mu2_B)), shape (..., 2)."""
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    return np.stack(
        [metric_D_array(weights, eta, a[..., 0], b[..., 0]),
         metric_D_array(weights, eta, a[..., 1], b[..., 1])],
        axis=-1,
    )


def h_metric_D(
    m: WeightedMeasure, eta: LevelMeasure, a: HMembershipFn, b: HMembershipFn
) -> Hyperbolic:
    """U diag(D(mu1_A, mu1_B), D(mu2_A, mu2_B)) U as a hyperbolic number."""
    check_same_universe(m, a, b)
    plus, minus = h_metric_D_array(m.array, eta, a.array, b.array).tolist()
    return Hyperbolic.from_idempotent(plus, minus)


def h_metric_D_triangle_gap(
    m: WeightedMeasure,
    eta: LevelMeasure,
    a: HMembershipFn,
    b: HMembershipFn,
    c: HMembershipFn,
) -> tuple[float, float]:
    """Idempotent components of D_H(A,C) + D_H(C,B) - D_H(A,B)."""
    check_same_universe(m, a, b, c)
    w = m.array
    gap = (
        h_metric_D_array(w, eta, a.array, c.array)
        + h_metric_D_array(w, eta, c.array, b.array)
        - h_metric_D_array(w, eta, a.array, b.array)
    )
    return float(gap[0]), float(gap[1])
