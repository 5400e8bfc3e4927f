"""Acceptance criteria 1-9, each at its stated tolerance.

Every criterion prints one PASS/FAIL line; the lines are also collected for
the pytest terminal summary.  Run directly with ``python -m tests.test_acceptance``
or through pytest.
"""

import itertools
import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from fuzzbetween import LEBESGUE, FiniteUniverse, Hyperbolic, MembershipFn, WeightedMeasure
from fuzzbetween import crisp as C
from fuzzbetween import fuzzy as F
from fuzzbetween import hfuzzy as HF
from fuzzbetween import hyperbolic as H

from .conftest import ACCEPTANCE_LINES

TOL = 1e-12
GRID = np.linspace(0.0, 1.0, 5)


def verdict(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def best_time(fn, repeats=5):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def grid_functions(n):
    return np.array(list(itertools.product(GRID, repeat=n))).reshape(-1, n)


def test_criterion_1_worked_example():
    def run():
        z, w = Hyperbolic.from_idempotent(1, 2), Hyperbolic.from_idempotent(3, 0)
        u, v = Hyperbolic.from_idempotent(2, 0), Hyperbolic.from_idempotent(5, 0.5)
        mj = H.h_meet_join(z, w)
        return (
            mj.meet.idempotent == (1.0, 0.0) and mj.join.idempotent == (3.0, 2.0)
            and H.h_interval_contains(z, w, u)
            and H.h_interval_contains(u, v, w)
            and not H.h_interval_contains(z, v, u)
        )

    ok, dt = best_time(run)
    verdict(1, ok and dt < 1e-3, f"meet/join exact, u in [z,w], w in [u,v], u not in [z,v] ({dt * 1e6:.0f} us)")


def test_criterion_2_sup_norm_counterexample():
    def run():
        X = FiniteUniverse.of_size(2)
        m = WeightedMeasure.counting(X)
        u, v, w = MembershipFn(X, (0, 0)), MembershipFn(X, (1, 0.25)), MembershipFn(X, (0.5, 0.25))
        d = lambda p, q: F.d_r(m, p, q, math.inf)
        return d(u, v), d(u, w) + d(w, v), F.segment_parameter(v, u, w)

    (lhs, rhs, t), dt = best_time(run)
    ok = abs(lhs - rhs) <= 1e-15 and t is None and dt < 1e-3
    verdict(2, ok, f"d_inf(u,v)={lhs} d_inf(u,w)+d_inf(w,v)={rhs}, w off the segment ({dt * 1e6:.0f} us)")


def test_criterion_3_alpha_iff_pointwise_exhaustive():
    mismatches, triples, elapsed = 0, 0, {}
    for n in (2, 3):
        fs = grid_functions(n)
        t0 = time.perf_counter()
        for f in fs:
            g, c = fs[:, None, :], fs[None, :, :]
            mismatches += int((F.alpha_between_mask(f, g, c) != F.pointwise_between_mask(f, g, c)).sum())
            triples += len(fs) ** 2
        elapsed[n] = time.perf_counter() - t0
    ok = mismatches == 0 and triples == 5**6 + 5**9 and elapsed[3] < 30
    verdict(3, ok, f"{triples} triples, {mismatches} mismatches, |X|=3 in {elapsed[3]:.1f} s")


def test_criterion_4_gap_iff_between():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    crisp_mis = crisp_n = 0
    for n in range(1, 5):
        X = FiniteUniverse.of_size(n)
        m = WeightedMeasure(X, tuple(rng.uniform(0.1, 3.0, n)))
        subsets = list(X.subsets())
        for a, b, c in itertools.product(subsets, repeat=3):
            crisp_n += 1
            crisp_mis += (abs(C.triangle_gap(m, a, b, c)) <= TOL) != C.is_between(a, b, c)
    fuzzy_mis = fuzzy_n = 0
    for n in (1, 2):
        fs = grid_functions(n)
        D = F.metric_D_array(np.ones(n), LEBESGUE, fs[:, None], fs[None, :])
        for i, f in enumerate(fs):
            gap = D[i][None, :] + D.T - D[i][:, None]  # [g, c]: D(f,c) + D(c,g) - D(f,g)
            between = F.pointwise_between_mask(f, fs[:, None], fs[None, :])
            fuzzy_mis += int(((np.abs(gap) <= TOL) != between).sum())
            fuzzy_n += gap.size
    dt = time.perf_counter() - t0
    ok = crisp_mis == 0 and fuzzy_mis == 0 and dt < 60
    verdict(4, ok, f"crisp {crisp_n} triples / {crisp_mis} mismatches, fuzzy {fuzzy_n} / {fuzzy_mis}, {dt:.1f} s")


def test_criterion_5_sqrt_collapse():
    rng = np.random.default_rng(5)
    mis = total = 0
    for n in range(1, 5):
        X = FiniteUniverse.of_size(n)
        m = WeightedMeasure(X, tuple(rng.uniform(0.1, 3.0, n)))
        for a, b, c in itertools.product(list(X.subsets()), repeat=3):
            total += 1
            mis += (abs(C.sqrt_triangle_gap(m, a, b, c)) <= TOL) != (c == a or c == b)
    verdict(5, mis == 0, f"{total} triples, {mis} mismatches")


def test_criterion_6_layer_cake():
    rng = np.random.default_rng(6)
    worst_l1 = worst_riemann = 0.0
    levels = 10_000
    alphas = (np.arange(levels) + 0.5) / levels
    for _ in range(1000):
        n = int(rng.integers(1, 6))
        X = FiniteUniverse.of_size(n)
        w = rng.uniform(0.1, 2.0, n)
        w /= w.sum()
        m = WeightedMeasure(X, tuple(w))
        f, g = (MembershipFn.from_array(X, rng.random(n)) for _ in range(2))
        d = F.metric_D(m, LEBESGUE, f, g)
        l1 = math.fsum(wi * abs(a - b) for wi, a, b in zip(m.weights, f.values, g.values))
        differ = (f.array > alphas[:, None]) != (g.array > alphas[:, None])
        riemann = float((differ * m.array).sum()) / levels
        worst_l1 = max(worst_l1, abs(d - l1))
        worst_riemann = max(worst_riemann, abs(d - riemann))
    ok = worst_l1 <= 1e-12 and worst_riemann <= 2e-4
    verdict(6, ok, f"max |D - L1| = {worst_l1:.1e}, max |D - Riemann| = {worst_riemann:.1e}")


def test_criterion_7_hyperbolic_suite():
    rng = np.random.default_rng(7)
    N = 10_000
    t0 = time.perf_counter()
    dy = rng.integers(-8 * 1024, 8 * 1024 + 1, size=(N, 3, 2)) / 1024
    lattice = round_trip = 0
    for row in dy:
        z, w, x = (Hyperbolic.from_idempotent(p, q) for p, q in row)
        mz, jz = H.meet(z, w), H.join(z, w)
        lattice += (
            mz == H.meet(w, z) and jz == H.join(w, z)
            and H.meet(mz, x) == H.meet(z, H.meet(w, x)) and H.join(jz, x) == H.join(z, H.join(w, x))
            and H.meet(z, z) == z and H.join(z, z) == z
            and H.meet(z, H.join(z, w)) == z and H.join(z, H.meet(z, w)) == z
            and (z <= w) == (mz == z) == (jz == w)
        )
        round_trip += Hyperbolic.from_idempotent(*z.idempotent) == z and z.idempotent == tuple(row[0])
    proj = max(
        np.abs(H.P @ H.P - H.P).max(), np.abs(H.Q @ H.Q - H.Q).max(),
        np.abs(H.P @ H.Q).max(), np.abs(H.P + H.Q - H.I2).max(),
    )
    inverse = 0
    mags = rng.uniform(0.1, 10.0, (N, 2)) * rng.choice([-1.0, 1.0], (N, 2))
    for p, q in mags:
        z = Hyperbolic.from_idempotent(p, q)
        back = H.h_inverse(H.h_inverse(z))
        inverse += abs(back.a - z.a) <= 1e-9 and abs(back.b - z.b) <= 1e-9
    dt = time.perf_counter() - t0
    ok = lattice == N and round_trip == N and proj <= 1e-15 and inverse == N and dt < 5
    verdict(7, ok, f"lattice {lattice}/{N}, round trip {round_trip}/{N}, projections {proj:.0e}, "
                   f"inverse {inverse}/{N}, {dt:.2f} s")


def test_criterion_8_hfuzzy_exhaustive():
    mis_reduction = mis_a = mis_gap = total = 0
    for n in (1, 2):
        fs = grid_functions(n)
        hs = np.stack(np.broadcast_arrays(fs[:, None], fs[None, :]), -1).reshape(-1, n, 2)
        DH = HF.h_metric_D_array(np.ones(n), LEBESGUE, hs[:, None], hs[None, :])
        # (element, component) axes outermost in memory keeps the reductions cheap
        lay = np.ascontiguousarray(hs.transpose(1, 2, 0))
        B = lay[:, :, :, None].transpose(2, 3, 0, 1)
        Cc = lay[:, :, None, :].transpose(2, 3, 0, 1)
        for i, a in enumerate(hs):
            order = HF.h_between_mask(a, B, Cc)
            cuts = HF.h_a_between_mask(a, B, Cc)
            comp = (F.pointwise_between_mask(a[:, 0], B[..., 0], Cc[..., 0])
                    & F.pointwise_between_mask(a[:, 1], B[..., 1], Cc[..., 1]))
            gap = DH[i][None, :, :] + DH.transpose(1, 0, 2) - DH[i][:, None, :]
            zero = np.all(np.abs(gap) <= TOL, axis=-1)
            mis_reduction += int((order != comp).sum())
            mis_a += int((cuts != order).sum())
            mis_gap += int((zero != order).sum())
            total += order.size
    ok = mis_reduction == mis_a == mis_gap == 0 and total == 25**3 + 625**3
    verdict(8, ok, f"{total} triples: componentwise {mis_reduction}, a-cuts {mis_a}, D_H gap {mis_gap} mismatches")


def test_criterion_9_cli_end_to_end():
    cmd = [sys.executable, "-m", "fuzzbetween", "check", "--suite", "all", "--seed", "1"]
    runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
    report = json.loads(runs[0].stdout)
    suites = report["results"]["suites"]
    listed = set(suites) == {"crisp", "fuzzy", "hyper", "hfuzzy"}
    all_passed = all(s["passed"] and all(p["passed"] for p in s["properties"]) for s in suites.values())
    ok = (all(r.returncode == 0 for r in runs) and listed and all_passed
          and runs[0].stdout == runs[1].stdout)
    verdict(9, ok, f"exit {[r.returncode for r in runs]}, suites {sorted(suites)} passed={all_passed}, "
                   f"byte-identical={runs[0].stdout == runs[1].stdout}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
