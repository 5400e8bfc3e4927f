"""Finite universes, point-weighted measures, level measures and kernel metrics.

Everything in the package lives on a :class:`FiniteUniverse`: an ordered
tuple of distinct element identifiers.  Indicator vectors, membership values
and weights are all aligned with that order, so integrals over the universe
reduce to weighted sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

import numpy as np

from .errors import UniverseMismatchError, ValidationError

if TYPE_CHECKING:
    from .crisp import CrispSet

#: Absolute tolerance used when comparing metric values.
DEFAULT_TOL = 1e-12
#: Eigenvalue tolerance for the positive semi-definiteness check.
PSD_TOL = 1e-9


@dataclass(frozen=True)
class FiniteUniverse:
    """An ordered finite ground set."""

    elements: tuple[str, ...]

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        for e in elements:
            if not isinstance(e, str) or not e:
                raise ValidationError(f"element identifiers must be non-empty strings, got {e!r}")
        if len(set(elements)) != len(elements):
            dup = sorted({e for e in elements if elements.count(e) > 1})
            raise ValidationError(f"duplicate element identifiers: {dup}")

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.index

    def position(self, element: str) -> int:
        try:
            return self.index[element]
        except KeyError:
            raise ValidationError(f"unknown element {element!r}") from None

    def subsets(self) -> Iterable["CrispSet"]:
        """All 2**n subsets, ordered by bitmask (bit i <-> element i)."""
        from .crisp import CrispSet

        n = len(self)
        for mask in range(1 << n):
            yield CrispSet(self, tuple(bool(mask >> i & 1) for i in range(n)))

    @classmethod
    def of_size(cls, n: int, prefix: str = "x") -> "FiniteUniverse":
        return cls(tuple(f"{prefix}{i + 1}" for i in range(n)))


def check_same_universe(*objs) -> FiniteUniverse:
    """Return the common universe of ``objs`` or raise UniverseMismatchError."""
    universe = objs[0].universe
    for other in objs[1:]:
        if other.universe != universe:
            raise UniverseMismatchError(
                f"operands live on different universes: {universe.elements} vs {other.universe.elements}"
            )
    return universe


@dataclass(frozen=True)
class WeightedMeasure:
    """Point masses on a finite universe; every weight must be strictly positive.

    Positivity makes the symmetric-difference distance separate points, so no
    quotient by null sets is ever needed.
    """

    universe: FiniteUniverse
    weights: tuple[float, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.universe) == 0:
            raise ValidationError("a measure needs a non-empty universe")
        weights = tuple(float(w) for w in self.weights) if self.weights else (1.0,) * len(self.universe)
        if len(weights) != len(self.universe):
            raise ValidationError(
                f"expected {len(self.universe)} weights, got {len(weights)}"
            )
        for e, w in zip(self.universe, weights):
            if not math.isfinite(w) or w <= 0.0:
                raise ValidationError(f"weight of {e!r} must be finite and > 0, got {w}")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def counting(cls, universe: FiniteUniverse) -> "WeightedMeasure":
        return cls(universe, (1.0,) * len(universe))

    @property
    def total(self) -> float:
        return math.fsum(self.weights)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.asarray(self.weights, dtype=float)
        arr.flags.writeable = False
        return arr


def measure_of(m: WeightedMeasure, s: "CrispSet") -> float:
    """Weighted size of a crisp set: sum of the weights of its members."""
    check_same_universe(m, s)
    return math.fsum(w for w, bit in zip(m.weights, s.bits) if bit)


@dataclass(frozen=True)
class LevelMeasure:
    """A measure on the level interval [0, 1].

    ``kind`` is ``"lebesgue"`` (no parameters) or ``"discrete"``, in which
    case ``levels`` holds ``(alpha, weight)`` atoms with distinct ascending
    alphas and positive weights.
    """

    kind: str = "lebesgue"
    levels: tuple[tuple[float, float], ...] = ()

    def __post_init__(self) -> None:
        if self.kind == "lebesgue":
            if self.levels:
                raise ValidationError("the Lebesgue level measure takes no atoms")
            return
        if self.kind != "discrete":
            raise ValidationError(f"unknown level measure kind {self.kind!r}")
        if not self.levels:
            raise ValidationError("a discrete level measure needs at least one atom")
        atoms = tuple(sorted((float(a), float(w)) for a, w in self.levels))
        for a, w in atoms:
            if not 0.0 <= a <= 1.0:
                raise ValidationError(f"level {a} outside [0, 1]")
            if not math.isfinite(w) or w <= 0.0:
                raise ValidationError(f"level weight must be > 0, got {w}")
        alphas = [a for a, _ in atoms]
        if len(set(alphas)) != len(alphas):
            raise ValidationError("discrete levels must be distinct")
        object.__setattr__(self, "levels", atoms)

    @classmethod
    def lebesgue(cls) -> "LevelMeasure":
        return cls("lebesgue")

    @classmethod
    def discrete(cls, levels: Iterable[tuple[float, float]]) -> "LevelMeasure":
        return cls("discrete", tuple(levels))

    @property
    def is_lebesgue(self) -> bool:
        return self.kind == "lebesgue"


LEBESGUE = LevelMeasure()


@dataclass(frozen=True)
class KernelMatrix:
    """A labelled symmetric real matrix, intended to be positive semi-definite."""

    labels: tuple[str, ...]
    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        entries = tuple(tuple(float(v) for v in row) for row in self.entries)
        n = len(labels)
        if len(set(labels)) != n:
            raise ValidationError("kernel labels must be unique")
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ValidationError(f"kernel matrix must be {n}x{n} to match its labels")
        for i in range(n):
            for j in range(i):
                if entries[i][j] != entries[j][i]:
                    raise ValidationError(
                        f"kernel matrix is not symmetric at ({labels[i]!r}, {labels[j]!r})"
                    )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "entries", entries)

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.entries, dtype=float).reshape(len(self.labels), len(self.labels))
        arr.flags.writeable = False
        return arr

    @classmethod
    def from_array(cls, labels: Sequence[str], matrix) -> "KernelMatrix":
        matrix = np.asarray(matrix, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValidationError(f"kernel matrix must be square, got shape {matrix.shape}")
        return cls(tuple(labels), tuple(tuple(row) for row in matrix.tolist()))


def subset_label(members: Iterable[str]) -> str:
    return "{" + ",".join(members) + "}"


def intersection_kernel(universe: FiniteUniverse, measure: WeightedMeasure | None = None) -> KernelMatrix:
    """The kernel K(A, B) = sigma(A & B) on the power set of ``universe``.

    Labels are ``{}``, ``{x1}``, ``{x1,x2}`` ... listed by subset size, then
    lexicographically by universe position.  With the counting measure this is
    the intersection-cardinality kernel.
    """
    weights = (measure or WeightedMeasure.counting(universe)).array
    n = len(universe)
    subsets = [c for k in range(n + 1) for c in combinations(range(n), k)]
    ind = np.zeros((len(subsets), n))
    for row, members in enumerate(subsets):
        ind[row, list(members)] = 1.0
    gram = (ind * weights) @ ind.T
    labels = [subset_label(universe.elements[i] for i in members) for members in subsets]
    return KernelMatrix.from_array(labels, gram)


def check_psd(k: KernelMatrix, tol: float = PSD_TOL) -> bool:
    """True iff the smallest eigenvalue of ``k`` is at least ``-tol``."""
    if len(k.labels) == 0:
        return True
    return bool(np.linalg.eigvalsh(k.array)[0] >= -tol)


def kernel_metric(k: KernelMatrix, i: str, j: str, tol: float = PSD_TOL) -> float:
    """Distance sqrt(K(i,i) + K(j,j) - 2 K(i,j)) induced by a PSD kernel.

    Tiny negative radicands (down to ``-tol``) from rounding are clamped to 0;
    anything below that means the kernel is not PSD.
    """
    try:
        p, q = k.index[i], k.index[j]
    except KeyError as exc:
        raise ValidationError(f"unknown kernel label {exc.args[0]!r}") from None
    if p == q:
        return 0.0
    e = k.entries
    radicand = e[p][p] + e[q][q] - 2.0 * e[p][q]
    if radicand < -tol:
        raise ValidationError(
            f"negative radicand {radicand} for ({i!r}, {j!r}); kernel is not positive semi-definite"
        )
    return math.sqrt(max(radicand, 0.0))


def universe_from_mapping(data: Mapping) -> tuple[FiniteUniverse, WeightedMeasure]:
    """Parse ``{"elements": [...], "weights": [...]}`` (weights optional)."""
    if "elements" not in data:
        raise ValidationError("universe object needs an 'elements' field")
    universe = FiniteUniverse(tuple(data["elements"]))
    weights = data.get("weights")
    if weights is None:
        return universe, WeightedMeasure.counting(universe)
    return universe, WeightedMeasure(universe, tuple(weights))
