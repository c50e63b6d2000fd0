"""Differential operators as matrices: graph agreement, sl2, dualities."""

import math

import pytest

from bruhatops.hasse import build_hasse, layer_matrix, weighted_path_count
from bruhatops.operators import (
    OperatorSpec,
    commutator_check,
    differential_layer_matrix,
    transpose_duality_check,
    verify_delta_theorem,
    verify_macdonald,
    verify_nabla_theorem,
    verify_path_identities,
)
from bruhatops.permutations import (
    identity,
    longest_element,
    num_inversions_max,
    w0_times,
)
from bruhatops.schubert import principal_specialization, schubert


class TestOperatorSpec:
    def test_validation(self):
        OperatorSpec("nabla", "monomial", 3)
        with pytest.raises(ValueError):
            OperatorSpec("gradient", "monomial", 3)
        with pytest.raises(ValueError):
            OperatorSpec("nabla", "fourier", 3)
        with pytest.raises(ValueError):
            OperatorSpec("nabla", "monomial", 0)


class TestGraphAgreement:
    """The padded-basis differential composite must reproduce the weighted
    path-count matrices of the matching cover diagram, entry for entry."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_delta_equals_strong_code_layers(self, n):
        g = build_hasse(n, "strong", "code")
        spec = OperatorSpec("delta", "padded-schubert", n)
        for low in range(g.top_rank + 1):
            for high in range(low, g.top_rank + 1):
                assert differential_layer_matrix(spec, low, high) == layer_matrix(g, low, high)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_nabla_equals_weak_layers(self, n):
        g = build_hasse(n, "weak", "nabla")
        spec = OperatorSpec("nabla", "padded-schubert", n)
        for low in range(g.top_rank + 1):
            for high in range(low, g.top_rank + 1):
                assert differential_layer_matrix(spec, low, high) == layer_matrix(g, low, high)

    def test_printed_example_window(self):
        # the single possible simultaneous reordering of the printed 2x2
        # matrices: rows (213, 132), columns (231, 312)
        delta = differential_layer_matrix(OperatorSpec("delta", "padded-schubert", 3), 1, 2)
        nabla = differential_layer_matrix(OperatorSpec("nabla", "padded-schubert", 3), 1, 2)
        assert delta == [[1, 3], [1, 1]]
        assert nabla == [[0, 1], [2, 0]]
        reorder = lambda m: [[m[1][0], m[1][1]], [m[0][0], m[0][1]]]
        assert reorder(delta) == [[1, 1], [1, 3]]
        assert reorder(nabla) == [[2, 0], [0, 1]]

    def test_monomial_window_validation(self):
        spec = OperatorSpec("delta", "monomial", 3)
        with pytest.raises(ValueError):
            differential_layer_matrix(spec, 2, 1)
        with pytest.raises(ValueError):
            differential_layer_matrix(spec, 0, 4)


class TestActionTheorems:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_nabla_action(self, n):
        report = verify_nabla_theorem(n)
        assert report["failures"] == []
        assert report["checked"] == len(build_hasse(n, "weak", "nabla").edges)

    def test_nabla_unit_reading_refuted_beyond_n2(self):
        assert verify_nabla_theorem(2)["unit_weight_reading_consistent"] is True
        assert verify_nabla_theorem(3)["unit_weight_reading_consistent"] is False

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_delta_action(self, n):
        report = verify_delta_theorem(n)
        assert report["failures"] == []
        assert report["checked"] == len(build_hasse(n, "strong", "code").edges)


class TestCommutator:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_sl2_relation(self, n):
        assert commutator_check(n)


class TestPathIdentities:
    def test_five_way_frozen_u132(self):
        strong = build_hasse(3, "strong", "code")
        weak = build_hasse(3, "weak", "nabla")
        u = (1, 3, 2)
        w0 = longest_element(3)
        eps = identity(3)
        s = principal_specialization(schubert(u))
        assert s == 2
        assert weighted_path_count(strong, u, w0) == s * math.factorial(3 - 1)
        assert weighted_path_count(weak, eps, u) == s * math.factorial(1)
        assert weighted_path_count(strong, eps, w0_times(u)) == s * math.factorial(2)
        assert weighted_path_count(weak, w0_times(u), w0) == s * math.factorial(1)

    def test_identity_permutation_all_ones(self):
        strong = build_hasse(3, "strong", "code")
        weak = build_hasse(3, "weak", "nabla")
        eps = identity(3)
        w0 = longest_element(3)
        n_fact = math.factorial(3)
        assert weighted_path_count(strong, eps, w0) == n_fact
        assert weighted_path_count(weak, eps, w0) == n_fact

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_suite_passes(self, n):
        report = verify_path_identities(n)
        assert report["failures"] == []
        assert report["checked"] == 4 * math.factorial(n)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_macdonald(self, n):
        report = verify_macdonald(n)
        assert report["failures"] == []
        assert report["checked"] == math.factorial(n)

    def test_macdonald_frozen_u231(self):
        weak = build_hasse(3, "weak", "nabla")
        assert weighted_path_count(weak, (1, 2, 3), (2, 3, 1)) == 2
        assert math.factorial(2) * principal_specialization(schubert((2, 3, 1))) == 2

    @pytest.mark.parametrize("order,weights", [("strong", "code"), ("strong", "chevalley"), ("weak", "nabla")])
    def test_total_count_is_factorial_of_top(self, order, weights):
        # all three systems agree on the bottom-to-top weighted count
        for n in (2, 3, 4, 5):
            g = build_hasse(n, order, weights)
            want = math.factorial(num_inversions_max(n))
            assert weighted_path_count(g, identity(n), longest_element(n)) == want


class TestTransposeDuality:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_all_windows(self, n):
        top = num_inversions_max(n)
        for low in range(top + 1):
            for high in range(low, top + 1):
                if low + high <= top:
                    assert transpose_duality_check(n, low, high), (n, low, high)
