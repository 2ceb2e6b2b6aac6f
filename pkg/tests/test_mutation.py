import random

import pytest

from clusterkit.errors import BoundExceeded, NotSkewSymmetrizable
from clusterkit.mutation import (
    ExchangeMatrix,
    canonical_key,
    enumerate_exchange_graph,
    initial_seed,
    mutate_seed,
)
from clusterkit.poly import is_positive_polynomial
from clusterkit.rootsys import Orientation
from support import (
    cartan_a2,
    cartan_a3,
    cartan_b2,
    cartan_g2,
    cartan_wild,
    ori_linear,
    random_acyclic_exchange_matrix,
)


def B(cartan, ori=None):
    if ori is None:
        ori = ori_linear(cartan)
    return ExchangeMatrix.from_quiver(cartan, ori)


class TestMatrixMutation:
    def test_a2_sign_flip(self):
        assert B(cartan_a2()).mutate(1).rows == ((0, -1), (1, 0))

    def test_b2_sign_flip(self):
        assert B(cartan_b2()).mutate(2).rows == ((0, -2), (1, 0))

    def test_a3_creates_three_cycle(self):
        m = B(cartan_a3()).mutate(2)
        assert m.rows == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))

    def test_involutive(self):
        for cartan in (cartan_a2(), cartan_a3(), cartan_b2(), cartan_g2()):
            m = B(cartan)
            for z in range(1, m.n + 1):
                assert m.mutate(z).mutate(z) == m

    def test_symmetrizer_relation_enforced(self):
        with pytest.raises(NotSkewSymmetrizable):
            ExchangeMatrix([[0, 2], [-1, 0]], d=(1, 1))

    def test_sinks_sources_from_signs(self):
        m = B(cartan_a2())  # arrow 2->1
        assert m.sinks_and_sources() == ((1,), (2,))


class TestSeedMutation:
    def test_a2_direction_1(self):
        seed = mutate_seed(initial_seed(B(cartan_a2())), 1)
        assert seed.vars[0].display() == "(u2+1)/u1"
        assert seed.vars[1].display() == "u2"
        assert seed.path == (1,)

    def test_b2_direction_2(self):
        seed = mutate_seed(initial_seed(B(cartan_b2())), 2)
        assert seed.vars[0].display() == "u1"
        assert seed.vars[1].display() == "(u1^2+1)/u2"

    def test_involution_restores_seed(self):
        root = initial_seed(B(cartan_a2()))
        twice = mutate_seed(mutate_seed(root, 1), 1)
        assert twice.vars == root.vars
        assert twice.matrix == root.matrix
        assert twice.path == (1, 1)

    def test_pentagon_recurrence(self):
        # A2: five alternating mutations return the initial cluster as a set
        seed = initial_seed(B(cartan_a2()))
        root_key = canonical_key(seed)
        for z in (1, 2, 1, 2, 1):
            seed = mutate_seed(seed, z)
        assert canonical_key(seed) == root_key


class TestCanonicalKey:
    def test_invariant_under_variable_order(self):
        seed = initial_seed(B(cartan_a2()))
        swapped = type(seed)(tuple(reversed(seed.vars)), seed.matrix, seed.path)
        assert canonical_key(seed) == canonical_key(swapped)

    def test_mutation_changes_key(self):
        seed = initial_seed(B(cartan_a2()))
        assert canonical_key(seed) != canonical_key(mutate_seed(seed, 1))

    def test_double_mutation_same_key(self):
        seed = initial_seed(B(cartan_a2()))
        assert canonical_key(seed) == canonical_key(
            mutate_seed(mutate_seed(seed, 2), 2)
        )


class TestEnumeration:
    def test_a2_counts_and_variables(self):
        result = enumerate_exchange_graph(B(cartan_a2()), debug_checks=True)
        assert result.cluster_count == 5
        assert result.variable_count == 5
        shown = {v.display() for v in result.variables}
        assert shown == {
            "u1",
            "u2",
            "(u2+1)/u1",
            "(u1+1)/u2",
            "(u1+u2+1)/(u1*u2)",
        }

    def test_b2_counts(self):
        result = enumerate_exchange_graph(B(cartan_b2()), debug_checks=True)
        assert (result.cluster_count, result.variable_count) == (6, 6)

    def test_a3_counts(self):
        result = enumerate_exchange_graph(B(cartan_a3()), debug_checks=True)
        assert (result.cluster_count, result.variable_count) == (14, 9)

    def test_g2_counts(self):
        result = enumerate_exchange_graph(B(cartan_g2()))
        assert (result.cluster_count, result.variable_count) == (8, 8)

    def test_bound_exceeded_carries_partial(self):
        with pytest.raises(BoundExceeded) as info:
            enumerate_exchange_graph(B(cartan_wild()), max_seeds=25)
        partial = info.value.partial
        assert partial.truncated
        assert partial.cluster_count == 25

    def test_counts_stable_under_reorientation(self):
        for cartan, expected in (
            (cartan_a3(), (14, 9)),
            (cartan_b2(), (6, 6)),
        ):
            edges = cartan.undirected_edges()
            for mask in range(2 ** len(edges)):
                oriented = [
                    (i, j) if (mask >> t) & 1 else (j, i)
                    for t, (i, j) in enumerate(edges)
                ]
                ori = Orientation(cartan.n, oriented)
                if not ori.is_acyclic():
                    continue
                result = enumerate_exchange_graph(
                    ExchangeMatrix.from_quiver(cartan, ori)
                )
                assert (result.cluster_count, result.variable_count) == expected

    def test_every_cluster_has_n_distinct_vars(self):
        result = enumerate_exchange_graph(B(cartan_a3()))
        for node in result.nodes.values():
            assert len({v.key() for v in node.seed.vars}) == 3

    def test_laurent_and_positivity_over_graph(self):
        for cartan in (cartan_a2(), cartan_b2(), cartan_g2()):
            result = enumerate_exchange_graph(B(cartan))
            for v in result.variables:
                if v.is_indeterminate():
                    continue
                assert all(x >= 0 for x in v.den)
                assert is_positive_polynomial(v.num)

    def test_skew_symmetrizability_preserved_with_fixed_d(self):
        m = B(cartan_g2())
        d = m.d
        result = enumerate_exchange_graph(m)
        for node in result.nodes.values():
            rows = node.seed.matrix.rows
            for i in range(m.n):
                for j in range(m.n):
                    assert rows[i][j] * d[j] == -rows[j][i] * d[i]


def test_randomized_double_mutation_identity():
    rng = random.Random(20240811)
    for _ in range(120):
        matrix = random_acyclic_exchange_matrix(rng)
        seed = initial_seed(matrix)
        for _ in range(rng.randint(0, 3)):
            seed = mutate_seed(seed, rng.randint(1, matrix.n))
        z = rng.randint(1, matrix.n)
        back = mutate_seed(mutate_seed(seed, z), z)
        assert back.vars == seed.vars
        assert back.matrix == seed.matrix
