import math

import numpy as np
import pytest

from fuzzbetween import (
    LEBESGUE,
    CrispSet,
    FiniteUniverse,
    KernelMatrix,
    LevelMeasure,
    ValidationError,
    WeightedMeasure,
    check_psd,
    intersection_kernel,
    kernel_metric,
    measure_of,
)
from fuzzbetween.core import check_same_universe, subset_label, universe_from_mapping
from fuzzbetween.errors import UniverseMismatchError

from .conftest import crisp


class TestUniverse:
    def test_of_size(self):
        assert FiniteUniverse.of_size(3).elements == ("x1", "x2", "x3")

    @pytest.mark.parametrize("elements", [("a", "a"), ("",), (1, 2)])
    def test_rejects_bad_elements(self, elements):
        with pytest.raises(ValidationError):
            FiniteUniverse(elements)

    def test_position_unknown(self, X3):
        with pytest.raises(ValidationError):
            X3.position("x9")

    def test_subsets_in_bitmask_order(self, X2):
        assert [s.members for s in X2.subsets()] == [(), ("x1",), ("x2",), ("x1", "x2")]

    def test_mismatch(self, X2, X3):
        with pytest.raises(UniverseMismatchError):
            check_same_universe(CrispSet.empty(X2), CrispSet.empty(X3))


class TestMeasure:
    def test_counting_default(self, X3):
        assert WeightedMeasure(X3).weights == (1.0, 1.0, 1.0)

    def test_unit_weights(self, unit3, X3):
        assert measure_of(unit3, crisp(X3, "x1", "x3")) == 2.0

    def test_empty_set(self, X3):
        m = WeightedMeasure(X3, (0.5, 2.0, 1.5))
        assert measure_of(m, CrispSet.empty(X3)) == 0.0

    def test_weighted(self, X3):
        m = WeightedMeasure(X3, (0.5, 2.0, 1.5))
        assert measure_of(m, crisp(X3, "x2", "x3")) == 3.5
        assert m.total == 4.0

    @pytest.mark.parametrize("weights", [(1.0, 0.0, 1.0), (1.0, -1.0, 1.0), (1.0, math.inf, 1.0), (1.0, 2.0)])
    def test_rejects_bad_weights(self, X3, weights):
        with pytest.raises(ValidationError):
            WeightedMeasure(X3, weights)

    def test_array_is_read_only(self, unit3):
        with pytest.raises(ValueError):
            unit3.array[0] = 2.0

    def test_from_mapping(self):
        u, m = universe_from_mapping({"elements": ["a", "b"], "weights": [2.0, 3.0]})
        assert u.elements == ("a", "b") and m.weights == (2.0, 3.0)
        u, m = universe_from_mapping({"elements": ["a"]})
        assert m.weights == (1.0,)


class TestLevelMeasure:
    def test_lebesgue(self):
        assert LEBESGUE.is_lebesgue and LevelMeasure.lebesgue() == LEBESGUE

    def test_discrete_sorted(self):
        eta = LevelMeasure.discrete([(0.7, 1.0), (0.2, 2.0)])
        assert eta.levels == ((0.2, 2.0), (0.7, 1.0))

    @pytest.mark.parametrize("levels", [[], [(1.5, 1.0)], [(0.5, 0.0)], [(0.5, 1.0), (0.5, 2.0)]])
    def test_discrete_rejects(self, levels):
        with pytest.raises(ValidationError):
            LevelMeasure.discrete(levels)

    def test_unknown_kind(self):
        with pytest.raises(ValidationError):
            LevelMeasure("gaussian")


class TestKernel:
    def test_identity_psd(self):
        assert check_psd(KernelMatrix.from_array(["a", "b", "c"], np.eye(3)))

    def test_indefinite(self):
        k = KernelMatrix.from_array(["a", "b"], [[1.0, 2.0], [2.0, 1.0]])
        assert not check_psd(k)
        assert np.allclose(sorted(np.linalg.eigvalsh(k.array)), [-1.0, 3.0])

    def test_intersection_kernel_on_pair(self):
        k = intersection_kernel(FiniteUniverse(("a", "b")))
        assert k.labels == ("{}", "{a}", "{b}", "{a,b}")
        assert check_psd(k)
        # explicit eigendecomposition: Gram matrix of indicators is PSD
        assert np.linalg.eigvalsh(k.array).min() >= -1e-12
        assert kernel_metric(k, "{a}", "{b}") == pytest.approx(math.sqrt(2), abs=1e-15)
        assert kernel_metric(k, "{a,b}", "{b}") == 1.0
        assert kernel_metric(k, "{a}", "{a}") == 0.0

    def test_asymmetric_rejected(self):
        with pytest.raises(ValidationError):
            KernelMatrix(("a", "b"), ((1.0, 0.5), (0.4, 1.0)))

    def test_non_square_rejected(self):
        with pytest.raises(ValidationError):
            KernelMatrix(("a", "b"), ((1.0,), (0.4, 1.0)))

    def test_unknown_label(self):
        k = intersection_kernel(FiniteUniverse(("a",)))
        with pytest.raises(ValidationError):
            kernel_metric(k, "{a}", "{z}")

    def test_negative_radicand_rejected(self):
        k = KernelMatrix.from_array(["a", "b"], [[1.0, 2.0], [2.0, 1.0]])
        with pytest.raises(ValidationError):
            kernel_metric(k, "a", "b")

    def test_weighted_kernel_gives_sqrt_sigma_of_symdiff(self, X3):
        m = WeightedMeasure(X3, (0.5, 2.0, 1.5))
        k = intersection_kernel(X3, m)
        d = kernel_metric(k, subset_label(["x1"]), subset_label(["x3"]))
        assert d == pytest.approx(math.sqrt(2.0), abs=1e-15)
