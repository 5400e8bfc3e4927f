"""Property suites: exhaustive small-instance scans and seeded random trials.

Each suite returns a list of :class:`PropertyResult`.  Results depend only on
the seed and the size configuration, so two runs with the same arguments
produce identical reports.  A single ``numpy.random.Generator`` is threaded
through the suites in a fixed order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import crisp, fuzzy, hfuzzy, hyperbolic
from .core import (
    DEFAULT_TOL,
    LEBESGUE,
    FiniteUniverse,
    WeightedMeasure,
    check_psd,
    intersection_kernel,
    kernel_metric,
    measure_of,
)
from .crisp import CrispSet
from .errors import GuardExceededError, NullConeError
from .fuzzy import MembershipFn
from .hfuzzy import HLevel, HMembershipFn
from .hyperbolic import Hyperbolic, h_inverse, h_meet_join, meet, join

SUITES = ("crisp", "fuzzy", "hyper", "hfuzzy")
MAX_EXHAUSTIVE = 4
MAX_GRID = 5


@dataclass
class PropertyResult:
    name: str
    passed: bool
    cases: int
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "counterexample": self.counterexample}


@dataclass(frozen=True)
class CheckConfig:
    exhaustive: int = MAX_EXHAUSTIVE
    grid: int = MAX_GRID
    random_cases: int = 1000
    algebra_cases: int = 10_000
    tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        if not 1 <= self.exhaustive <= MAX_EXHAUSTIVE:
            raise GuardExceededError(f"--exhaustive must be in 1..{MAX_EXHAUSTIVE}, got {self.exhaustive}")
        if not 2 <= self.grid <= MAX_GRID:
            raise GuardExceededError(f"--grid must be in 2..{MAX_GRID}, got {self.grid}")


class _Tracker:
    """Counts cases for one property and keeps the first failure."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.counterexample: dict | None = None

    def check(self, ok: bool, case: Callable[[], dict] | dict) -> None:
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = case() if callable(case) else case

    def bulk(self, ok: np.ndarray, case: Callable[[tuple], dict]) -> None:
        """Record a boolean array of outcomes; ``case`` maps a failing index to a dict."""
        ok = np.asarray(ok)
        self.cases += int(ok.size)
        if self.counterexample is None and not ok.all():
            idx = tuple(int(i) for i in np.argwhere(~ok)[0])
            self.counterexample = case(idx)

    def result(self) -> PropertyResult:
        return PropertyResult(self.name, self.counterexample is None, self.cases, self.counterexample)


def _bits(s: CrispSet) -> list[str]:
    return list(s.members)


def _grid(levels: int) -> np.ndarray:
    return np.linspace(0.0, 1.0, levels)


def _all_functions(n: int, levels: int) -> np.ndarray:
    """Every function from n elements into the level grid, shape (levels**n, n)."""
    g = _grid(levels)
    return np.array(list(itertools.product(g, repeat=n)), dtype=float).reshape(-1, n)


def _random_weights(rng: np.random.Generator, n: int) -> tuple[float, ...]:
    return tuple(float(w) for w in rng.uniform(0.1, 2.0, n))


# ---------------------------------------------------------------------------
# crisp
# ---------------------------------------------------------------------------


def crisp_suite(rng: np.random.Generator, config: CheckConfig) -> list[PropertyResult]:
    tol = config.tol
    t_metric = _Tracker("d_sigma_metric_axioms")
    t_gap = _Tracker("triangle_gap_iff_between")
    t_form = _Tracker("triangle_gap_product_form")
    t_sqrt = _Tracker("sqrt_triangle_gap_iff_endpoint")
    t_enum = _Tracker("enumerate_between_matches_scan")
    t_decomp = _Tracker("between_decomposition_identity")
    t_ind = _Tracker("indicator_identities")
    t_jac = _Tracker("jaccard_distance_metric")
    t_add = _Tracker("measure_additive_on_disjoint_sets")

    for n in range(1, config.exhaustive + 1):
        X = FiniteUniverse.of_size(n)
        m = WeightedMeasure(X, _random_weights(rng, n))
        subsets = list(X.subsets())
        k = len(subsets)
        dist = [[crisp.d_sigma(m, a, b) for b in subsets] for a in subsets]
        jac = [[crisp.jaccard(a, b).distance for b in subsets] for a in subsets]
        weights = list(m.weights)

        for i, a in enumerate(subsets):
            for j, b in enumerate(subsets):
                case = lambda: {"n": n, "weights": weights, "A": _bits(a), "B": _bits(b)}
                t_metric.check(
                    dist[i][j] == dist[j][i] and ((dist[i][j] == 0.0) == (i == j)) and dist[i][j] >= 0.0,
                    case,
                )
                alg = crisp.set_algebra(a, b)
                ok = True
                for p, q, u, v, d, c in zip(a.bits, b.bits, alg.union.bits, alg.intersection.bits,
                                            alg.sym_diff.bits, alg.complement_of_a.bits):
                    p, q = int(p), int(q)
                    ok &= int(u) == p + q - p * q == max(p, q)
                    ok &= int(v) == min(p, q) == p * q
                    ok &= int(d) == p + q - 2 * p * q == max(p, q) - min(p, q) == (p - q) ** 2
                    ok &= int(c) == 1 - p
                ok &= alg.sym_diff == (alg.union - alg.intersection)
                t_ind.check(ok, case)
                if not (i == 0 and j == 0):
                    t_jac.check(
                        jac[i][j] == jac[j][i] and ((jac[i][j] == 0.0) == (i == j)) and 0.0 <= jac[i][j] <= 1.0,
                        case,
                    )
                if not (a & b).bits.count(True):
                    t_add.check(
                        abs(measure_of(m, a | b) - measure_of(m, a) - measure_of(m, b)) <= tol, case
                    )
                between = [c for c in subsets if crisp.is_between(a, b, c)]
                listed = list(crisp.enumerate_between(a, b))
                t_enum.check(
                    len(listed) == len(set(listed)) == 2 ** len(a ^ b) and set(listed) == set(between),
                    case,
                )

        for i, j, l in itertools.product(range(k), repeat=3):
            a, b, c = subsets[i], subsets[j], subsets[l]
            case = lambda: {"n": n, "weights": weights, "A": _bits(a), "B": _bits(b), "C": _bits(c)}
            t_metric.check(dist[i][j] <= dist[i][l] + dist[l][j] + tol, case)
            t_jac.check(jac[i][j] <= jac[i][l] + jac[l][j] + tol, case)
            gap = crisp.triangle_gap(m, a, b, c)
            between = crisp.is_between(a, b, c)
            t_gap.check(gap >= -tol and (abs(gap) <= tol) == between, case)
            t_form.check(abs(gap - crisp.triangle_gap_product_form(m, a, b, c)) <= tol, case)
            sgap = crisp.sqrt_triangle_gap(m, a, b, c)
            t_sqrt.check(sgap >= -tol and (abs(sgap) <= tol) == (c == a or c == b), case)
            z = crisp.between_decomposition(a, b, c)
            if between:
                ab = a & b
                t_decomp.check(
                    z is not None and z <= (a ^ b)
                    and all(int(cc) == int(p) + int(q) for cc, p, q in zip(c.bits, ab.bits, z.bits)),
                    case,
                )
            else:
                t_decomp.check(z is None, case)

    results = [t.result() for t in (t_metric, t_gap, t_form, t_sqrt, t_enum, t_decomp, t_ind, t_jac, t_add)]
    results.append(_kernel_property(min(config.exhaustive, 3), tol))
    return results


def _kernel_property(max_n: int, tol: float) -> PropertyResult:
    t = _Tracker("kernel_metric_on_intersection_kernel")
    for n in range(1, max_n + 1):
        X = FiniteUniverse.of_size(n)
        K = intersection_kernel(X)
        t.check(check_psd(K), {"n": n, "reason": "kernel not PSD"})
        labels = K.labels
        members = {lab: set(lab.strip("{}").split(",")) - {""} for lab in labels}
        d = {(p, q): kernel_metric(K, p, q) for p in labels for q in labels}
        for p in labels:
            for q in labels:
                expected = math.sqrt(len(members[p] ^ members[q]))
                t.check(
                    abs(d[p, q] - expected) <= tol and d[p, q] == d[q, p] and ((d[p, q] == 0.0) == (p == q)),
                    {"n": n, "A": p, "B": q, "distance": d[p, q], "expected": expected},
                )
                for r in labels:
                    t.check(d[p, q] <= d[p, r] + d[r, q] + tol, {"n": n, "A": p, "B": q, "C": r})
    return t.result()


# ---------------------------------------------------------------------------
# fuzzy
# ---------------------------------------------------------------------------


def riemann_metric_D(weights, f, g, levels: int = 10_000) -> float:
    """Midpoint-rule approximation of the Lebesgue level integral (an oracle)."""
    alphas = (np.arange(levels) + 0.5) / levels
    f, g, w = np.asarray(f), np.asarray(g), np.asarray(weights)
    differ = (f[None, :] > alphas[:, None]) != (g[None, :] > alphas[:, None])
    return float((differ * w).sum() / levels)


def fuzzy_suite(rng: np.random.Generator, config: CheckConfig) -> list[PropertyResult]:
    tol = config.tol
    results = [
        _bretagne(config),
        _thm73(config),
    ]

    t_cake = _Tracker("layer_cake_equals_weighted_l1")
    t_riem = _Tracker("layer_cake_matches_riemann_oracle")
    t_axioms = _Tracker("metric_D_axioms_random")
    t_nest = _Tracker("strong_cut_nesting")
    for _ in range(config.random_cases):
        n = int(rng.integers(1, 6))
        X = FiniteUniverse.of_size(n)
        w = rng.uniform(0.1, 2.0, n)
        w = w / w.sum()
        m = WeightedMeasure(X, tuple(w))
        f, g, c = (MembershipFn.from_array(X, rng.random(n)) for _ in range(3))
        D = fuzzy.metric_D(m, LEBESGUE, f, g)
        l1 = fuzzy.d_r(m, f, g, 1)
        case = lambda: {"weights": list(m.weights), "f": list(f.values), "g": list(g.values), "c": list(c.values)}
        t_cake.check(abs(D - l1) <= tol, case)
        t_riem.check(abs(D - riemann_metric_D(m.array, f.array, g.array)) <= 2e-4, case)
        dfc = fuzzy.metric_D(m, LEBESGUE, f, c)
        dcg = fuzzy.metric_D(m, LEBESGUE, c, g)
        t_axioms.check(
            fuzzy.metric_D(m, LEBESGUE, f, f) == 0.0
            and (D > 0.0) == (f != g)
            and D == fuzzy.metric_D(m, LEBESGUE, g, f)
            and D <= dfc + dcg + tol,
            case,
        )
        lo, hi = sorted(rng.random(2))
        t_nest.check(fuzzy.strong_alpha_cut(f, hi) <= fuzzy.strong_alpha_cut(f, lo),
                     lambda: {"f": list(f.values), "alpha": lo, "beta": hi})
    results += [t_cake.result(), t_riem.result(), t_axioms.result(), t_nest.result()]
    results.append(_strict_convexity(rng, config))
    results.append(_linf_counterexample())
    return results


def _bretagne(config: CheckConfig) -> PropertyResult:
    t = _Tracker("alpha_between_iff_pointwise_between")
    for n in range(1, min(config.exhaustive, 3) + 1):
        F = _all_functions(n, config.grid)
        for i, f in enumerate(F):
            alpha = fuzzy.alpha_between_mask(f, F[:, None, :], F[None, :, :])
            point = fuzzy.pointwise_between_mask(f, F[:, None, :], F[None, :, :])
            t.bulk(alpha == point, lambda idx: {
                "f": F[i].tolist(), "g": F[idx[0]].tolist(), "c": F[idx[1]].tolist(),
                "alpha_between": bool(alpha[idx]), "pointwise_between": bool(point[idx])})
    return t.result()


def _thm73(config: CheckConfig) -> PropertyResult:
    tol = config.tol
    t = _Tracker("metric_D_triangle_equality_iff_between")
    for n in range(1, min(config.exhaustive, 2) + 1):
        F = _all_functions(n, config.grid)
        w = np.ones(n)
        D = fuzzy.metric_D_array(w, LEBESGUE, F[:, None, :], F[None, :, :])
        for i, f in enumerate(F):
            # axis 0: g, axis 1: c
            gap = D[i][None, :] + D.T - D[i][:, None]
            between = fuzzy.pointwise_between_mask(f, F[:, None, :], F[None, :, :])
            ok = (gap >= -tol) & ((np.abs(gap) <= tol) == between)
            t.bulk(ok, lambda idx: {"f": F[i].tolist(), "g": F[idx[0]].tolist(), "c": F[idx[1]].tolist(),
                                    "gap": float(gap[idx]), "between": bool(between[idx])})
    return t.result()


def _strict_convexity(rng: np.random.Generator, config: CheckConfig) -> PropertyResult:
    tol = config.tol
    t = _Tracker("strict_convexity_converse_r2_r3")
    for r in (2.0, 3.0):
        for _ in range(config.random_cases):
            n = int(rng.integers(1, 5))
            X = FiniteUniverse.of_size(n)
            m = WeightedMeasure(X, _random_weights(rng, n))
            f, g = (MembershipFn.from_array(X, rng.random(n)) for _ in range(2))
            c = fuzzy.linear_between(f, g, float(rng.random()))
            gap = fuzzy.d_r(m, f, c, r) + fuzzy.d_r(m, c, g, r) - fuzzy.d_r(m, f, g, r)
            t.check(abs(gap) <= tol and fuzzy.segment_parameter(f, g, c, 1e-9) is not None,
                    lambda: {"r": r, "f": list(f.values), "g": list(g.values), "c": list(c.values), "gap": gap})
        F = _all_functions(2, config.grid)
        w = np.ones(2)
        for f in F:
            dfc = fuzzy.d_r_array(w, f, F, r)
            dfg = fuzzy.d_r_array(w, f, F, r)
            dcg = fuzzy.d_r_array(w, F[:, None, :], F[None, :, :], r)  # [c, g]
            gap = dfc[:, None] + dcg - dfg[None, :]
            for ci, gi in np.argwhere(np.abs(gap) <= tol):
                t.check(fuzzy.segment_parameter(f, F[gi], F[ci], 1e-9) is not None,
                        {"r": r, "f": f.tolist(), "g": F[gi].tolist(), "c": F[ci].tolist()})
    return t.result()


def _linf_counterexample() -> PropertyResult:
    t = _Tracker("linf_equality_without_betweenness")
    X = FiniteUniverse.of_size(2)
    m = WeightedMeasure.counting(X)
    u = MembershipFn(X, (0.0, 0.0))
    v = MembershipFn(X, (1.0, 0.25))
    w = MembershipFn(X, (0.5, 0.25))
    inf = math.inf
    lhs = fuzzy.d_r(m, u, v, inf)
    rhs = fuzzy.d_r(m, u, w, inf) + fuzzy.d_r(m, w, v, inf)
    on_segment = fuzzy.segment_parameter(v, u, w, 1e-12)
    t.check(abs(lhs - rhs) <= 1e-15 and on_segment is None,
            {"d(u,v)": lhs, "d(u,w)+d(w,v)": rhs, "t": on_segment})
    return t.result()


# ---------------------------------------------------------------------------
# hyperbolic numbers
# ---------------------------------------------------------------------------


def _dyadic(rng: np.random.Generator, size, scale: int = 8, bits: int = 10) -> np.ndarray:
    """Random multiples of 2**-bits in [-scale, scale]; sums, halves and
    products of these are exact in float64."""
    d = 1 << bits
    return rng.integers(-scale * d, scale * d + 1, size=size) / d


def hyper_suite(rng: np.random.Generator, config: CheckConfig) -> list[PropertyResult]:
    N = config.algebra_cases
    results = [_worked_example(), _non_transitivity(), _segment_failure()]

    t_lat = _Tracker("lattice_laws")
    t_bound = _Tracker("meet_join_extremal_bounds")
    t_round = _Tracker("idempotent_round_trip")
    t_prod = _Tracker("product_componentwise")
    t_int = _Tracker("interval_order_characterization")
    ab = _dyadic(rng, (N, 3, 2))
    slack = np.abs(_dyadic(rng, (N, 4)))
    for row, (s0, s1, s2, s3) in zip(ab, slack):
        z, w, x = (Hyperbolic(a, b) for a, b in row)
        case = lambda: {"z": z.to_mapping(), "w": w.to_mapping(), "x": x.to_mapping()}
        mzw, jzw = meet(z, w), join(z, w)
        ok = (
            mzw == meet(w, z) and jzw == join(w, z)
            and meet(meet(z, w), x) == meet(z, meet(w, x))
            and join(join(z, w), x) == join(z, join(w, x))
            and meet(z, z) == z and join(z, z) == z
            and meet(z, join(z, w)) == z and join(z, meet(z, w)) == z
            and (z <= w) == (mzw == z) == (jzw == w)
            and mzw <= z <= jzw and mzw <= w <= jzw
        )
        t_lat.check(ok, case)
        lower = Hyperbolic.from_idempotent(mzw.plus - s0, mzw.minus - s1)
        upper = Hyperbolic.from_idempotent(jzw.plus + s2, jzw.minus + s3)
        t_bound.check(
            lower <= z and lower <= w and z <= upper and w <= upper
            and lower <= mzw and jzw <= upper,
            case,
        )
        t_round.check(
            Hyperbolic.from_idempotent(z.plus, z.minus) == z
            and np.allclose(z.matrix, z.idempotent_matrix(), rtol=0, atol=1e-12)
            and np.allclose(z.matrix, z.projection_form(), rtol=0, atol=1e-12),
            case,
        )
        zw = z * w
        t_prod.check(zw.idempotent == (z.plus * w.plus, z.minus * w.minus), case)
        iv = hyperbolic.h_interval(z, w)
        tau = iv.parameter(x)
        t_int.check(
            (x in iv) == (tau is not None)
            and (tau is None or (hyperbolic.in_D(tau) and _close(iv.point(tau), x, 1e-12))),
            case,
        )
        # points produced from parameters in D always land in the interval
        tau_in = Hyperbolic.from_idempotent(s0 / (1 + s0), s1 / (1 + s1))
        t_int.check(iv.point(tau_in) in iv, case)
    results += [t_lat.result(), t_bound.result(), t_round.result(), t_prod.result(), t_int.result()]
    results.append(_projections())
    results.append(_inverse_law(rng, N))
    return results


def _close(z: Hyperbolic, w: Hyperbolic, tol: float) -> bool:
    return abs(z.a - w.a) <= tol and abs(z.b - w.b) <= tol


def _worked_example() -> PropertyResult:
    t = _Tracker("worked_example_meet_join")
    z = Hyperbolic.from_idempotent(1, 2)
    w = Hyperbolic.from_idempotent(3, 0)
    mj = h_meet_join(z, w)
    t.check(
        mj.meet.idempotent == (1.0, 0.0) and mj.join.idempotent == (3.0, 2.0)
        and hyperbolic.h_partial_cmp(z, w) is hyperbolic.Ordering.INCOMPARABLE,
        {"meet": list(mj.meet.idempotent), "join": list(mj.join.idempotent)},
    )
    return t.result()


def _non_transitivity() -> PropertyResult:
    t = _Tracker("non_transitivity_witness")
    z = Hyperbolic.from_idempotent(1, 2)
    w = Hyperbolic.from_idempotent(3, 0)
    u = Hyperbolic.from_idempotent(2, 0)
    v = Hyperbolic.from_idempotent(5, 0.5)
    contains = hyperbolic.h_interval_contains
    verdicts = {"u_in_zw": contains(z, w, u), "w_in_uv": contains(u, v, w), "u_in_zv": contains(z, v, u)}
    t.check(verdicts == {"u_in_zw": True, "w_in_uv": True, "u_in_zv": False}, verdicts)
    return t.result()


def _segment_failure() -> PropertyResult:
    """meet + t (join - meet) with real t in [0, 1] misses both z and w."""
    t = _Tracker("straight_segment_misses_endpoints")
    z = Hyperbolic.from_idempotent(1, 2)
    w = Hyperbolic.from_idempotent(3, 0)
    mj = h_meet_join(z, w)
    for target in (z, w):
        ts = set()
        solvable = True
        for lo, hi, v in zip(mj.meet.idempotent, mj.join.idempotent, target.idempotent):
            if hi == lo:
                solvable &= v == lo
            else:
                ts.add((v - lo) / (hi - lo))
        hit = solvable and len(ts) <= 1 and all(0.0 <= s <= 1.0 for s in ts)
        t.check(not hit, {"target": target.to_mapping("idempotent"), "t_per_component": sorted(ts)})
    return t.result()


def _projections() -> PropertyResult:
    t = _Tracker("projection_identities")
    P, Q, I2, K = hyperbolic.P, hyperbolic.Q, hyperbolic.I2, hyperbolic.K
    checks = {
        "P^2=P": np.abs(P @ P - P).max(),
        "Q^2=Q": np.abs(Q @ Q - Q).max(),
        "PQ=0": np.abs(P @ Q).max(),
        "QP=0": np.abs(Q @ P).max(),
        "P+Q=I": np.abs(P + Q - I2).max(),
        "P=(I+K)/2": np.abs(P - (I2 + K) / 2).max(),
        "Q=(I-K)/2": np.abs(Q - (I2 - K) / 2).max(),
        "k^2=1": np.abs(K @ K - I2).max(),
    }
    for name, err in checks.items():
        t.check(err <= 1e-15, {"identity": name, "error": float(err)})
    kk = hyperbolic.UNIT_K * hyperbolic.UNIT_K
    t.check(kk == hyperbolic.ONE, {"identity": "k*k", "value": kk.to_mapping()})
    return t.result()


def _inverse_law(rng: np.random.Generator, N: int) -> PropertyResult:
    t = _Tracker("inverse_group_law")
    mags = rng.uniform(0.1, 10.0, (N, 2)) * rng.choice([-1.0, 1.0], (N, 2))
    for plus, minus in mags:
        z = Hyperbolic.from_idempotent(plus, minus)
        inv = h_inverse(z)
        back = h_inverse(inv)
        prod = z * inv
        t.check(
            abs(back.a - z.a) <= 1e-9 and abs(back.b - z.b) <= 1e-9
            and abs(prod.a - 1.0) <= 1e-12 and abs(prod.b) <= 1e-12,
            lambda: {"z": z.to_mapping(), "inverse": inv.to_mapping(), "double_inverse": back.to_mapping()},
        )
    for a, b in ((1.0, 1.0), (2.0, -2.0), (0.0, 0.0)):
        try:
            h_inverse(Hyperbolic(a, b))
            rejected = False
        except NullConeError:
            rejected = True
        t.check(rejected, {"z": {"a": a, "b": b}, "reason": "null cone element was inverted"})
    return t.result()


# ---------------------------------------------------------------------------
# D-valued membership functions
# ---------------------------------------------------------------------------


def hfuzzy_suite(rng: np.random.Generator, config: CheckConfig) -> list[PropertyResult]:
    tol = config.tol
    t_red = _Tracker("componentwise_reduction")
    t_sand = _Tracker("sandwich_between_min_and_max")
    t_cut = _Tracker("alpha_cut_consistency")
    t_ata = _Tracker("atanassov_product_closure")
    t_id = _Tracker("complement_and_swap_identities")

    for _ in range(config.random_cases):
        n = int(rng.integers(1, 5))
        X = FiniteUniverse.of_size(n)
        m = WeightedMeasure(X, _random_weights(rng, n))
        A, B, C = (HMembershipFn.from_array(X, _random_component_grid(rng, n)) for _ in range(3))
        case = lambda: {"A": A.array.tolist(), "B": B.array.tolist(), "C": C.array.tolist(),
                        "weights": list(m.weights)}
        jm = hfuzzy.h_join_meet(A, B)
        ops_1 = fuzzy.pointwise_ops(A.mu1, B.mu1)
        ops_2 = fuzzy.pointwise_ops(A.mu2, B.mu2)
        DH = hfuzzy.h_metric_D(m, LEBESGUE, A, B)
        D1 = fuzzy.metric_D(m, LEBESGUE, A.mu1, B.mu1)
        D2 = fuzzy.metric_D(m, LEBESGUE, A.mu2, B.mu2)
        wz = hfuzzy.h_witness_decomposition(A, B, C)
        w1 = fuzzy.witness_decomposition(A.mu1, B.mu1, C.mu1)
        w2 = fuzzy.witness_decomposition(A.mu2, B.mu2, C.mu2)
        ok = (
            hfuzzy.h_complement(A) == HMembershipFn(fuzzy.complement(A.mu1), fuzzy.complement(A.mu2))
            and hfuzzy.h_product(A, B) == HMembershipFn(ops_1.product, ops_2.product)
            and jm.join == HMembershipFn(ops_1.join, ops_2.join)
            and jm.meet == HMembershipFn(ops_1.meet, ops_2.meet)
            and abs(DH.plus - D1) <= tol and abs(DH.minus - D2) <= tol
            and hfuzzy.h_is_between(A, B, C)
            == (fuzzy.is_pointwise_between(A.mu1, B.mu1, C.mu1) and fuzzy.is_pointwise_between(A.mu2, B.mu2, C.mu2))
            and (wz is None) == (w1 is None or w2 is None)
            and (wz is None or wz == HMembershipFn(w1, w2))
        )
        t_red.check(ok, case)

        # min(mu1, mu2) I <= M(x) <= max(mu1, mu2) I, compared along P and Q
        arr = A.array
        t_sand.check(
            bool(hyperbolic.le_array(arr.min(-1, keepdims=True), arr).all()
                 and hyperbolic.le_array(arr, arr.max(-1, keepdims=True)).all()),
            case,
        )

        for level in _levels_for(rng, A):
            t1, t2 = level.thresholds
            expected = fuzzy.strong_alpha_cut(A.mu1, t1) & fuzzy.strong_alpha_cut(A.mu2, t2)
            t_cut.check(hfuzzy.h_alpha_cut(A, level) == expected,
                        lambda: {"A": A.array.tolist(), "level": [level.alpha1, level.alpha2]})

        Aa = _make_atanassov(A)
        Ba = _make_atanassov(B)
        prod = hfuzzy.h_product(Aa, Ba)
        mu, nu = hfuzzy.atanassov_pair(Aa)
        t_ata.check(
            hfuzzy.is_atanassov(Aa) and hfuzzy.is_atanassov(Ba) and hfuzzy.is_atanassov(prod)
            and all(x + y <= 1.0 for x, y in zip(mu.values, nu.values)),
            case,
        )

        swapped = hfuzzy.h_product(A, HMembershipFn(A.mu2, A.mu1))
        pair = HMembershipFn(A.mu1, fuzzy.complement(A.mu1))
        mats = pair.matrices()
        expected = 0.5 * np.stack([
            np.stack([np.ones(n), 2 * A.mu1.array - 1], -1),
            np.stack([2 * A.mu1.array - 1, np.ones(n)], -1)], -2)
        t_id.check(
            all(z.b == 0.0 for z in swapped.values())
            and np.allclose([z.a for z in swapped.values()], A.mu1.array * A.mu2.array, rtol=0, atol=tol)
            and np.allclose(mats, expected, rtol=0, atol=tol)
            and hfuzzy.h_complement(hfuzzy.h_complement(A)) == A,
            case,
        )

    # exhaustive Atanassov closure on |X| = 2, values {0, 1/2, 1}
    F = _all_functions(2, 3)
    H = [HMembershipFn.from_array(FiniteUniverse.of_size(2), np.stack([p, q], -1)) for p in F for q in F]
    atanassov = [h for h in H if hfuzzy.is_atanassov(h)]
    for a in atanassov:
        for b in atanassov:
            t_ata.check(hfuzzy.is_atanassov(hfuzzy.h_product(a, b)),
                        lambda: {"A": a.array.tolist(), "B": b.array.tolist()})

    results = [t_red.result(), t_sand.result(), t_cut.result(), t_ata.result(), t_id.result()]
    results += _hfuzzy_exhaustive(config)
    return results


def _random_component_grid(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random (n, 2) component values; half the entries snap to a 0.25 grid
    so that ties with cut levels and between bounds actually occur."""
    vals = rng.random((n, 2))
    snap = rng.random((n, 2)) < 0.5
    return np.where(snap, np.round(vals * 4) / 4, vals)


def _levels_for(rng: np.random.Generator, m: HMembershipFn) -> list[HLevel]:
    ts1 = [0.0, 1.0, float(rng.random())] + list(m.mu1.values)
    ts2 = [0.0, 1.0, float(rng.random())] + list(m.mu2.values)
    return [HLevel.from_thresholds(a, b) for a in ts1 for b in ts2]


def _make_atanassov(m: HMembershipFn) -> HMembershipFn:
    arr = m.array
    return HMembershipFn.from_array(m.universe, np.stack([arr.max(-1), arr.min(-1)], -1))


def _hfuzzy_exhaustive(config: CheckConfig) -> list[PropertyResult]:
    """Every triple (A, B, C) of grid-valued D-valued functions on |X| <= 2.

    Both betweenness notions and the D_H gap are symmetric in A and B, so
    only B at or after A (in enumeration order) is scanned.  The order-only
    predicates run on integer grid codes laid out with the (element,
    component) axes outermost in memory; numpy then reduces over them with
    plain elementwise operations.
    """
    tol = config.tol
    t_a = _Tracker("a_between_iff_between")
    t_d = _Tracker("DH_triangle_equality_iff_between")
    for n in range(1, min(config.exhaustive, 2) + 1):
        F = _all_functions(n, config.grid)
        H = np.stack(np.broadcast_arrays(F[:, None, :], F[None, :, :]), -1).reshape(-1, n, 2)
        DH = hfuzzy.h_metric_D_array(np.ones(n), LEBESGUE, H[:, None], H[None, :])
        D = [np.ascontiguousarray(DH[..., k]) for k in (0, 1)]  # symmetric matrices
        codes = np.rint(H * (config.grid - 1)).astype(np.int8)
        coded = np.ascontiguousarray(codes.transpose(1, 2, 0))  # (n, 2, |H|)
        Cs = coded[:, :, None, :].transpose(2, 3, 0, 1)  # (1, |H|, n, 2) view
        for i in range(len(H)):
            a = codes[i]
            Bs = coded[:, :, i:, None].transpose(2, 3, 0, 1)  # axis 0: B from A on; axis 1: C
            between = hfuzzy.h_between_mask(a, Bs, Cs)
            a_between = hfuzzy.h_a_between_mask(a, Bs, Cs)

            def case(idx, **extra):
                return {"A": H[i].tolist(), "B": H[i + idx[0]].tolist(), "C": H[idx[1]].tolist(), **extra}

            t_a.bulk(a_between == between, lambda idx: case(
                idx, a_between=bool(a_between[idx]), between=bool(between[idx])))
            gaps = [Dk[i][None, :] + Dk[i:] - Dk[i, i:][:, None] for Dk in D]
            zero = (np.abs(gaps[0]) <= tol) & (np.abs(gaps[1]) <= tol)
            ok = (gaps[0] >= -tol) & (gaps[1] >= -tol) & (zero == between)
            t_d.bulk(ok, lambda idx: case(
                idx, gap=[float(g[idx]) for g in gaps], between=bool(between[idx])))
    return [t_a.result(), t_d.result()]


_SUITE_FUNCS = {
    "crisp": crisp_suite,
    "fuzzy": fuzzy_suite,
    "hyper": hyper_suite,
    "hfuzzy": hfuzzy_suite,
}


def run_checks(suites, seed: int, config: CheckConfig | None = None) -> dict[str, list[PropertyResult]]:
    """Run the named suites (``"all"`` expands to every suite) in a fixed order."""
    config = config or CheckConfig()
    if isinstance(suites, str):
        suites = [suites]
    wanted = list(SUITES) if "all" in suites else [s for s in SUITES if s in suites]
    unknown = set(suites) - set(SUITES) - {"all"}
    if unknown:
        raise ValueError(f"unknown suite(s): {sorted(unknown)}")
    rng = np.random.default_rng(seed)
    return {name: _SUITE_FUNCS[name](rng, config) for name in wanted}
