"""[0, 1]-valued membership functions on a finite universe.

Three notions of "c lies between f and g" live here:

* pointwise: ``min(f, g) <= c <= max(f, g)`` at every element;
* alpha-betweenness: the strong cuts ``c > alpha`` are crisp-between the
  strong cuts of ``f`` and ``g`` at every level ``alpha`` in [0, 1];
* metric: equality in the triangle inequality for the level-integrated
  symmetric-difference distance :func:`metric_D`.

Functions suffixed ``_mask`` / ``_array`` take numpy arrays whose last axis
runs over the universe and broadcast over any leading batch axes; the
object-level functions are thin validated wrappers around them.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, NamedTuple

import numpy as np

from .core import (
    DEFAULT_TOL,
    LEBESGUE,
    FiniteUniverse,
    LevelMeasure,
    WeightedMeasure,
    check_same_universe,
)
from .crisp import CrispSet, between_mask
from .errors import DegenerateLevelMeasureWarning, ValidationError


@dataclass(frozen=True)
class MembershipFn:
    universe: FiniteUniverse
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        if len(values) != len(self.universe):
            raise ValidationError(
                f"membership function has {len(values)} values, universe has {len(self.universe)}"
            )
        for e, v in zip(self.universe, values):
            if not 0.0 <= v <= 1.0:
                raise ValidationError(f"membership value of {e!r} must lie in [0, 1], got {v}")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_mapping(cls, universe: FiniteUniverse, values: Mapping[str, float]) -> "MembershipFn":
        """Build from ``{element: value}``; elements not listed get 0.0."""
        for e in values:
            universe.position(e)
        return cls(universe, tuple(float(values.get(e, 0.0)) for e in universe))

    @classmethod
    def indicator(cls, s: CrispSet) -> "MembershipFn":
        return cls(s.universe, tuple(1.0 if b else 0.0 for b in s.bits))

    @classmethod
    def from_array(cls, universe: FiniteUniverse, values) -> "MembershipFn":
        return cls(universe, tuple(np.asarray(values, dtype=float).tolist()))

    @classmethod
    def constant(cls, universe: FiniteUniverse, value: float) -> "MembershipFn":
        return cls(universe, (float(value),) * len(universe))

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.asarray(self.values, dtype=float)
        arr.flags.writeable = False
        return arr

    def as_mapping(self) -> dict[str, float]:
        return dict(zip(self.universe, self.values))

    def is_crisp(self) -> bool:
        return all(v in (0.0, 1.0) for v in self.values)

    def to_crisp(self) -> CrispSet:
        if not self.is_crisp():
            raise ValidationError("membership function is not {0,1}-valued")
        return CrispSet(self.universe, tuple(v == 1.0 for v in self.values))


def _wrap(universe: FiniteUniverse, arr: np.ndarray) -> MembershipFn:
    return MembershipFn(universe, tuple(arr.tolist()))


class PointwiseOps(NamedTuple):
    join: MembershipFn
    meet: MembershipFn
    product: MembershipFn
    complement_of_f: MembershipFn


def pointwise_ops(f: MembershipFn, g: MembershipFn) -> PointwiseOps:
    """Max (union), min (intersection), algebraic product and complement 1 - f."""
    u = check_same_universe(f, g)
    return PointwiseOps(
        join=_wrap(u, np.maximum(f.array, g.array)),
        meet=_wrap(u, np.minimum(f.array, g.array)),
        product=_wrap(u, f.array * g.array),
        complement_of_f=complement(f),
    )


def complement(f: MembershipFn) -> MembershipFn:
    return _wrap(f.universe, 1.0 - f.array)


# ---------------------------------------------------------------------------
# d_r distances and straight segments
# ---------------------------------------------------------------------------


def d_r_array(weights, f, g, r: float) -> np.ndarray:
    """(sum_x w(x) |f - g|^r)^(1/r); for r = inf, the max of |f - g|."""
    if not r >= 1.0:
        raise ValidationError(f"d_r needs r >= 1, got {r}")
    diff = np.abs(np.asarray(f, dtype=float) - np.asarray(g, dtype=float))
    if math.isinf(r):
        return diff.max(axis=-1)
    w = np.asarray(weights, dtype=float)
    if r == 1.0:
        return (w * diff).sum(axis=-1)
    return ((w * diff**r).sum(axis=-1)) ** (1.0 / r)


def d_r(m: WeightedMeasure, f: MembershipFn, g: MembershipFn, r: float) -> float:
    check_same_universe(m, f, g)
    return float(d_r_array(m.array, f.array, g.array, r))


def linear_between(f: MembershipFn, g: MembershipFn, t: float) -> MembershipFn:
    """The point t*f + (1-t)*g of the straight segment from g to f."""
    u = check_same_universe(f, g)
    if not 0.0 <= t <= 1.0:
        raise ValidationError(f"segment parameter must lie in [0, 1], got {t}")
    values = np.clip(t * f.array + (1.0 - t) * g.array, 0.0, 1.0)
    return _wrap(u, values)


def segment_parameter(f, g, c, tol: float = DEFAULT_TOL) -> float | None:
    """Find t in [0, 1] with c == t*f + (1-t)*g (within ``tol``), else None.

    Accepts MembershipFn objects or plain sequences.  t is solved from the
    coordinate where |f - g| is largest and then checked on every coordinate.
    """
    f, g, c = (np.asarray(getattr(v, "array", v), dtype=float) for v in (f, g, c))
    diff = f - g
    if not diff.any():
        return 0.0 if np.all(np.abs(c - g) <= tol) else None
    k = int(np.argmax(np.abs(diff)))
    t = (c[k] - g[k]) / diff[k]
    if t < -tol or t > 1.0 + tol:
        return None
    t = min(max(t, 0.0), 1.0)
    if np.all(np.abs(t * f + (1.0 - t) * g - c) <= tol):
        return float(t)
    return None


# ---------------------------------------------------------------------------
# pointwise betweenness
# ---------------------------------------------------------------------------


def pointwise_between_mask(f, g, c) -> np.ndarray:
    f, g, c = np.asarray(f), np.asarray(g), np.asarray(c)
    return np.all((np.minimum(f, g) <= c) & (c <= np.maximum(f, g)), axis=-1)


def is_pointwise_between(f: MembershipFn, g: MembershipFn, c: MembershipFn) -> bool:
    check_same_universe(f, g, c)
    return bool(pointwise_between_mask(f.array, g.array, c.array))


def witness_decomposition(f: MembershipFn, g: MembershipFn, c: MembershipFn) -> MembershipFn | None:
    """mu_Z = c - min(f, g) when c is pointwise between f and g, else None.

    0 <= mu_Z <= max(f, g) - min(f, g) and c == min(f, g) + mu_Z.
    """
    if not is_pointwise_between(f, g, c):
        return None
    return _wrap(c.universe, c.array - np.minimum(f.array, g.array))


# ---------------------------------------------------------------------------
# strong alpha-cuts and alpha-betweenness
# ---------------------------------------------------------------------------


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValidationError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def strong_alpha_cut(f: MembershipFn, alpha: float) -> CrispSet:
    """The set {x : f(x) > alpha}."""
    alpha = _check_alpha(alpha)
    return CrispSet(f.universe, tuple(v > alpha for v in f.values))


def cut_levels(*funcs) -> np.ndarray:
    """Breakpoint levels {0} + all values, shape (..., 1 + sum of sizes).

    Strong cuts are right-continuous step functions of alpha that only change
    at these values, so checking a property of the cuts at each of them
    covers every alpha in [0, 1].
    """
    arrays = [np.asarray(f, dtype=float) for f in funcs]
    batch = np.broadcast_shapes(*(a.shape[:-1] for a in arrays))
    arrays = [np.broadcast_to(a, batch + a.shape[-1:]) for a in arrays]
    return np.concatenate([np.zeros(batch + (1,))] + arrays, axis=-1)


def strong_cuts_array(f, levels) -> np.ndarray:
    """Cut indicators ``f > level`` of shape (..., n_levels, n)."""
    f = np.asarray(f, dtype=float)
    levels = np.asarray(levels, dtype=float)
    return f[..., None, :] > levels[..., :, None]


def alpha_between_mask(f, g, c) -> np.ndarray:
    levels = cut_levels(f, g, c)
    per_level = between_mask(
        strong_cuts_array(f, levels), strong_cuts_array(g, levels), strong_cuts_array(c, levels)
    )
    return np.all(per_level, axis=-1)


def is_alpha_between(f: MembershipFn, g: MembershipFn, c: MembershipFn) -> bool:
    check_same_universe(f, g, c)
    return bool(alpha_between_mask(f.array, g.array, c.array))


# ---------------------------------------------------------------------------
# the level-integrated distance
# ---------------------------------------------------------------------------


def metric_D_array(weights, eta: LevelMeasure, f, g) -> np.ndarray:
    """Integral over alpha of sigma(cut_f(alpha) ^ cut_g(alpha)) d eta(alpha).

    Exact: the integrand is a step function of alpha.  For Lebesgue eta it
    is constant on each [b_k, b_{k+1}) between sorted breakpoints, so it is
    evaluated at b_k and multiplied by the interval length.  Discrete atoms
    at alpha use the strong cut at alpha itself.
    """
    w = np.asarray(weights, dtype=float)
    f = np.asarray(f, dtype=float)
    g = np.asarray(g, dtype=float)
    if eta.is_lebesgue:
        levels = np.sort(cut_levels(f, g, np.ones(1)), axis=-1)
        lower = levels[..., :-1]
        widths = np.diff(levels, axis=-1)
        differ = strong_cuts_array(f, lower) ^ strong_cuts_array(g, lower)
        return ((differ * w).sum(axis=-1) * widths).sum(axis=-1)
    alphas = np.array([a for a, _ in eta.levels])
    masses = np.array([m for _, m in eta.levels])
    differ = (f[..., None, :] > alphas[:, None]) ^ (g[..., None, :] > alphas[:, None])
    return ((differ * w).sum(axis=-1) * masses).sum(axis=-1)


def metric_D(
    m: WeightedMeasure, eta: LevelMeasure, f: MembershipFn, g: MembershipFn
) -> float:
    """Level-integrated symmetric-difference distance between f and g.

    Emits :class:`DegenerateLevelMeasureWarning` when a discrete ``eta``
    returns 0 for f != g, i.e. the atoms are too sparse to separate them.
    """
    check_same_universe(m, f, g)
    value = float(metric_D_array(m.array, eta, f.array, g.array))
    if value == 0.0 and f != g and not eta.is_lebesgue:
        warnings.warn(
            "discrete level measure cannot distinguish these membership functions",
            DegenerateLevelMeasureWarning,
            stacklevel=2,
        )
    return value


def metric_D_is_degenerate(m: WeightedMeasure, eta: LevelMeasure, f: MembershipFn, g: MembershipFn) -> bool:
    check_same_universe(m, f, g)
    return f != g and float(metric_D_array(m.array, eta, f.array, g.array)) == 0.0


def metric_D_triangle_gap(
    m: WeightedMeasure,
    eta: LevelMeasure,
    f: MembershipFn,
    g: MembershipFn,
    c: MembershipFn,
) -> float:
    """D(f, c) + D(c, g) - D(f, g)."""
    check_same_universe(m, f, g, c)
    w = m.array
    return float(
        metric_D_array(w, eta, f.array, c.array)
        + metric_D_array(w, eta, c.array, g.array)
        - metric_D_array(w, eta, f.array, g.array)
    )


__all__ = [
    "LEBESGUE",
    "MembershipFn",
    "PointwiseOps",
    "alpha_between_mask",
    "complement",
    "cut_levels",
    "d_r",
    "d_r_array",
    "is_alpha_between",
    "is_pointwise_between",
    "linear_between",
    "metric_D",
    "metric_D_array",
    "metric_D_is_degenerate",
    "metric_D_triangle_gap",
    "pointwise_between_mask",
    "pointwise_ops",
    "segment_parameter",
    "strong_alpha_cut",
    "strong_cuts_array",
    "witness_decomposition",
]
