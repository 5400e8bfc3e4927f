import numpy as np
import pytest
from hypothesis import given, strategies as st

from fuzzbetween import HInterval, Hyperbolic, NullConeError, Ordering, ValidationError
from fuzzbetween import hyperbolic as H

# dyadic values keep every sum, half and product exact
dyadic = st.integers(-4096, 4096).map(lambda k: k / 512)
hyp = st.builds(Hyperbolic.from_idempotent, dyadic, dyadic)

Z = Hyperbolic.from_idempotent(1, 2)
W = Hyperbolic.from_idempotent(3, 0)
U_ = Hyperbolic.from_idempotent(2, 0)
V = Hyperbolic.from_idempotent(5, 0.5)


class TestRepresentation:
    def test_idempotent_components(self):
        z = Hyperbolic(1.5, -0.5)
        assert z.idempotent == (1.0, 2.0)
        assert Hyperbolic.from_idempotent(1.0, 2.0) == z

    def test_matrix_forms(self):
        z = Hyperbolic(1.5, -0.5)
        assert np.array_equal(z.matrix, [[1.5, -0.5], [-0.5, 1.5]])
        assert np.allclose(z.idempotent_matrix(), z.matrix, atol=1e-15, rtol=0)
        assert np.allclose(z.projection_form(), z.matrix, atol=1e-15, rtol=0)
        assert Hyperbolic.from_matrix(z.matrix) == z

    def test_from_matrix_rejects(self):
        with pytest.raises(ValidationError):
            Hyperbolic.from_matrix([[1.0, 2.0], [3.0, 1.0]])

    def test_mapping_forms(self):
        assert Hyperbolic.from_mapping({"a": 1.5, "b": -0.5}) == Hyperbolic(1.5, -0.5)
        assert Hyperbolic.from_mapping({"plus": 1.0, "minus": 2.0}) == Hyperbolic(1.5, -0.5)
        with pytest.raises(ValidationError):
            Hyperbolic.from_mapping({"a": 1.0, "plus": 2.0})
        with pytest.raises(ValidationError):
            Hyperbolic.from_mapping({"a": 1.0})
        assert Hyperbolic(1.5, -0.5).to_mapping("idempotent") == {"plus": 1.0, "minus": 2.0}

    def test_projections(self):
        assert np.abs(H.P @ H.P - H.P).max() <= 1e-15
        assert np.abs(H.Q @ H.Q - H.Q).max() <= 1e-15
        assert np.abs(H.P @ H.Q).max() <= 1e-15
        assert np.abs(H.P + H.Q - H.I2).max() <= 1e-15
        assert np.allclose(H.U @ H.U, H.I2, atol=1e-15, rtol=0)
        with pytest.raises(ValueError):
            H.P[0, 0] = 2.0


class TestArithmetic:
    def test_unit(self):
        assert H.h_arith(H.ONE, W).product == W

    def test_componentwise_product(self):
        assert (Z * W).idempotent == (3.0, 0.0)

    def test_k_squared(self):
        assert H.UNIT_K * H.UNIT_K == H.ONE

    def test_inverse_example(self):
        z = Hyperbolic(1.5, -0.5)
        inv = H.h_inverse(z)
        assert (inv.a, inv.b) == pytest.approx((0.75, 0.25), abs=1e-15)
        assert z * inv == H.ONE
        assert H.h_inverse(H.ONE) == H.ONE

    @pytest.mark.parametrize("z", [Hyperbolic(1, 1), Hyperbolic(2, -2), H.ZERO])
    def test_null_cone(self, z):
        assert z.is_null_cone()
        with pytest.raises(NullConeError):
            H.h_inverse(z)

    def test_sum_and_negation(self):
        r = H.h_arith(Z, W)
        assert r.sum.idempotent == (4.0, 2.0)
        assert r.negation.idempotent == (-1.0, -2.0)

    def test_scalar_product(self):
        assert (2 * Z).idempotent == (2.0, 4.0)


class TestOrder:
    def test_cmp_examples(self):
        assert H.h_partial_cmp(Z, Z) is Ordering.EQUAL
        assert H.h_partial_cmp(Z, W) is Ordering.INCOMPARABLE
        assert H.h_partial_cmp(H.ZERO, Hyperbolic(0.5, 0.5)) is Ordering.LESS_EQUAL
        assert H.h_partial_cmp(W, H.ZERO) is Ordering.GREATER_EQUAL

    def test_order_is_loewner(self):
        # z <= w iff w - z is positive semi-definite
        rng = np.random.default_rng(0)
        for _ in range(200):
            z, w = (Hyperbolic(*rng.integers(-4, 5, 2) / 2) for _ in range(2))
            psd = np.linalg.eigvalsh((w - z).matrix).min() >= 0
            assert (z <= w) == psd

    def test_meet_join_example(self):
        mj = H.h_meet_join(Z, W)
        assert mj.meet.idempotent == (1.0, 0.0)
        assert mj.join.idempotent == (3.0, 2.0)
        assert np.allclose(mj.meet.matrix, H.U @ np.diag([1.0, 0.0]) @ H.U, atol=1e-15, rtol=0)
        assert np.allclose(mj.join.matrix, H.U @ np.diag([3.0, 2.0]) @ H.U, atol=1e-15, rtol=0)

    def test_meet_join_trivial(self):
        assert H.h_meet_join(Z, Z) == (Z, Z)
        lo = Hyperbolic.from_idempotent(0, 1)
        assert H.h_meet_join(lo, Z) == (lo, Z)


class TestD:
    @pytest.mark.parametrize("z,inside", [
        (Hyperbolic(0.5, 0.5), True), (Hyperbolic(1, 0), True), (Hyperbolic(1.1, 0), False),
        (Hyperbolic(0.5, 0.6), False), (H.ZERO, True),
    ])
    def test_in_D(self, z, inside):
        assert H.in_D(z) == inside


class TestInterval:
    def test_endpoints(self):
        assert H.h_interval_contains(Z, W, Z)
        assert H.h_interval_contains(Z, W, W)

    def test_worked_example(self):
        assert H.h_interval_contains(Z, W, U_)
        assert H.h_interval_contains(U_, V, W)
        assert not H.h_interval_contains(Z, V, U_)

    def test_parameter(self):
        iv = H.h_interval(Z, W)
        tau = iv.parameter(U_)
        assert H.in_D(tau) and iv.point(tau) == U_
        assert iv.parameter(V) is None

    def test_straight_segment_misses_endpoints(self):
        mj = H.h_meet_join(Z, W)
        for t in np.linspace(0, 1, 101):
            p = mj.meet + t * (mj.join - mj.meet)
            assert p != Z and p != W

    def test_unordered_bounds(self):
        with pytest.raises(ValidationError):
            HInterval(W, Z)

    def test_point_requires_D(self):
        with pytest.raises(ValidationError):
            H.h_interval(Z, W).point(Hyperbolic(2, 0))


@given(hyp, hyp, hyp)
def test_lattice_laws(z, w, x):
    m, j = H.meet(z, w), H.join(z, w)
    assert m == H.meet(w, z) and j == H.join(w, z)
    assert H.meet(m, x) == H.meet(z, H.meet(w, x))
    assert H.join(j, x) == H.join(z, H.join(w, x))
    assert H.meet(z, H.join(z, w)) == z and H.join(z, H.meet(z, w)) == z
    assert (z <= w) == (m == z) == (j == w)


@given(hyp, hyp, hyp)
def test_meet_join_are_extremal(z, w, x):
    if x <= z and x <= w:
        assert x <= H.meet(z, w)
    if z <= x and w <= x:
        assert H.join(z, w) <= x


@given(hyp)
def test_round_trip_exact(z):
    assert Hyperbolic.from_idempotent(*z.idempotent) == z


@given(hyp, hyp)
def test_product_componentwise(z, w):
    assert (z * w).idempotent == (z.plus * w.plus, z.minus * w.minus)


@given(st.floats(0.1, 10), st.floats(0.1, 10), st.booleans(), st.booleans())
def test_inverse_law(p, q, sp, sq):
    z = Hyperbolic.from_idempotent(-p if sp else p, -q if sq else q)
    back = H.h_inverse(H.h_inverse(z))
    assert back.a == pytest.approx(z.a, abs=1e-9) and back.b == pytest.approx(z.b, abs=1e-9)
    prod = z * H.h_inverse(z)
    assert prod.a == pytest.approx(1.0, abs=1e-12) and prod.b == pytest.approx(0.0, abs=1e-12)


@given(hyp, hyp, hyp)
def test_batched_helpers_match(z, w, x):
    arr = np.array([z.idempotent, w.idempotent])
    assert H.le_array(arr[0], arr[1]) == (z <= w)
    assert tuple(H.meet_array(arr[0], arr[1])) == H.meet(z, w).idempotent
    assert tuple(H.join_array(arr[0], arr[1])) == H.join(z, w).idempotent
