import pytest

from clusterkit.coxeter import (
    ar_recursion_oracle,
    coxeter_orbit,
    orbit_period,
    preprojective_dim_vector,
    sigma_hat_orbits,
    sigma_orbit_period,
    t_i_apply,
    verify_denominator_theorem,
)
from clusterkit.errors import WindowInconsistent
from clusterkit.mutation import (
    ExchangeMatrix,
    enumerate_exchange_graph,
    initial_seed,
    mutate_seed,
)
from clusterkit.poly import ReducedFraction
from clusterkit.rootsys import (
    admissible_sink_sequence,
    neg_simple,
    reflect_orientation,
)
from support import (
    cartan_a2,
    cartan_a3,
    cartan_b2,
    cartan_g2,
    cartan_wild,
    ori_linear,
    rank2_fixture,
)

A2, A2_ORI = rank2_fixture(cartan_a2())
B2, B2_ORI = rank2_fixture(cartan_b2())
G2, G2_ORI = rank2_fixture(cartan_g2())
WILD, WILD_ORI = rank2_fixture(cartan_wild())


def initial_vars(n):
    return tuple(ReducedFraction.indeterminate(n, i) for i in range(1, n + 1))


class TestTiApply:
    def test_a2_t1(self):
        out = t_i_apply(A2, 1, initial_vars(2))
        assert out[0].display() == "(u2+1)/u1"
        assert out[1].display() == "u2"

    def test_b2_t2_valued_exponent(self):
        out = t_i_apply(B2, 2, initial_vars(2))
        assert out[0].display() == "u1"
        assert out[1].display() == "(u1^2+1)/u2"

    def test_involution(self):
        for cartan in (A2, B2, G2):
            vars0 = initial_vars(cartan.n)
            for i in range(1, cartan.n + 1):
                assert t_i_apply(cartan, i, t_i_apply(cartan, i, vars0)) == vars0


class TestCoxeterOrbit:
    def test_a2_table(self):
        table = coxeter_orbit(A2, (1, 2), 0, 2)
        assert table.variable(1, 2).display() == "(u1+1)/u2"
        assert table.variable(1, 1).display() == "(u1+u2+1)/(u1*u2)"
        assert table.variable(2, 2).display() == "(u2+1)/u1"
        assert table.variable(2, 1).display() == "u2"

    def test_b2_table(self):
        from clusterkit.poly import IntPolynomial

        table = coxeter_orbit(B2, (1, 2), 0, 2)
        assert table.variable(1, 2).display() == "(u1^2+1)/u2"
        assert table.variable(1, 1).display() == "(u1^2+u2+1)/(u1*u2)"
        # T^2(u_2) = (u2^2 + 2u2 + u1^2 + 1) / (u1^2 u2)
        expected = ReducedFraction.normalized(
            IntPolynomial(2, {(0, 2): 1, (0, 1): 2, (2, 0): 1, (0, 0): 1}), (2, 1)
        )
        assert table.variable(2, 2) == expected

    def test_a2_backward(self):
        table = coxeter_orbit(A2, (1, 2), -1, 0)
        assert table.variable(-1, 1).display() == "(u2+1)/u1"
        assert table.variable(-1, 2).display() == "(u1+u2+1)/(u1*u2)"

    def test_window_invariant_enforced_throughout(self):
        # check_window=True asserts denominator == orbit vector after every
        # single slot update; a pass means the running theorem held everywhere
        coxeter_orbit(G2, (1, 2), -6, 6, check_window=True)
        coxeter_orbit(WILD, (1, 2), -6, 6, check_window=True)
        coxeter_orbit(cartan_a3(), (1, 2, 3), -4, 4, check_window=True)

    def test_window_inconsistency_detected_for_flipped_reflection(self):
        # computing dims with the wrong (row) reflection convention must trip
        # the window check immediately on a valued quiver
        from clusterkit import coxeter as cox

        def flipped_sigma_hat(cartan, order, v):
            out = list(v)
            for i in order:
                j = None
                hit = [t for t, x in enumerate(out) if x != 0]
                if len(hit) == 1 and out[hit[0]] == -1 and hit[0] != i - 1:
                    continue
                row = cartan.rows[i - 1]
                out[i - 1] = -out[i - 1] - sum(
                    row[t] * out[t] for t in range(cartan.n) if t != i - 1
                )
            return tuple(out)

        original = cox.sigma_hat
        cox.sigma_hat = flipped_sigma_hat
        try:
            with pytest.raises(WindowInconsistent):
                coxeter_orbit(B2, (1, 2), 0, 2, check_window=True)
        finally:
            cox.sigma_hat = original


class TestDimVectors:
    def test_m_zero(self):
        for cartan in (A2, B2, G2, WILD):
            for k in range(1, cartan.n + 1):
                assert preprojective_dim_vector(cartan, (1, 2), 0, k) == neg_simple(
                    cartan.n, k
                )

    def test_a2_values(self):
        assert preprojective_dim_vector(A2, (1, 2), 1, 1) == (1, 1)
        assert preprojective_dim_vector(A2, (1, 2), 1, 2) == (0, 1)
        assert preprojective_dim_vector(A2, (1, 2), 2, 1) == (0, -1)

    def test_b2_values(self):
        assert preprojective_dim_vector(B2, (1, 2), 1, 1) == (1, 1)
        assert preprojective_dim_vector(B2, (1, 2), 2, 2) == (2, 1)


class TestArOracle:
    def test_a2_first_level(self):
        table = ar_recursion_oracle(A2, (1, 2), 2)
        assert table[(1, 1)] == (1, 1)
        assert table[(1, 2)] == (0, 1)

    def test_a2_wrap_through_exclusion(self):
        table = ar_recursion_oracle(A2, (1, 2), 2)
        assert table[(2, 1)] == (0, -1)

    def test_wild_growth(self):
        table = ar_recursion_oracle(WILD, (1, 2), 8)
        for m in range(1, 8):
            for k in (1, 2):
                cur, nxt = table[(m, k)], table[(m + 1, k)]
                assert all(x >= 0 for x in cur) and any(cur)
                assert sum(nxt) > sum(cur)
                assert all(a <= b for a, b in zip(cur, nxt))

    def test_matches_sigma_hat_orbit(self):
        cases = [
            (A2, (1, 2)),
            (B2, (1, 2)),
            (G2, (1, 2)),
            (WILD, (1, 2)),
            (cartan_a3(), (1, 2, 3)),
        ]
        for cartan, order in cases:
            table = ar_recursion_oracle(cartan, order, 8)
            for (m, k), vec in table.items():
                assert vec == preprojective_dim_vector(cartan, order, m, k), (
                    cartan,
                    m,
                    k,
                )


class TestPeriodicity:
    def test_a2_single_orbit_of_size_five(self):
        orbits = sigma_hat_orbits(A2, (1, 2))
        assert len(orbits) == 1 and len(orbits[0]) == 5

    def test_a2_periods(self):
        assert sigma_orbit_period(A2, (1, 2), 1) == 5
        assert sigma_orbit_period(A2, (1, 2), 2) == 5
        assert orbit_period(A2, (1, 2)) == 5

    def test_t_power_returns_initial_variable(self):
        fixtures = [
            (A2, (1, 2)),
            (B2, (1, 2)),
            (G2, (1, 2)),
            (cartan_a3(), (1, 2, 3)),
        ]
        for cartan, order in fixtures:
            periods = {
                k: sigma_orbit_period(cartan, order, k)
                for k in range(1, cartan.n + 1)
            }
            table = coxeter_orbit(cartan, order, 0, max(periods.values()))
            for k, p in periods.items():
                assert table.variable(p, k) == ReducedFraction.indeterminate(
                    cartan.n, k
                )

    def test_sigma_hat_is_bijection_covering_roots(self):
        for cartan, order in ((A2, (1, 2)), (B2, (1, 2)), (G2, (1, 2))):
            orbits = sigma_hat_orbits(cartan, order)
            from clusterkit.rootsys import almost_positive_roots

            flattened = [v for orbit in orbits for v in orbit]
            assert sorted(flattened) == sorted(almost_positive_roots(cartan))


class TestConventionConsistency:
    def test_t1_is_mutation_at_first_sink(self):
        fixtures = [
            (A2, A2_ORI),
            (B2, B2_ORI),
            (G2, G2_ORI),
            (cartan_a3(), ori_linear(cartan_a3())),
            (WILD, WILD_ORI),
        ]
        for cartan, ori in fixtures:
            k = admissible_sink_sequence(ori)[0]
            b_matrix = ExchangeMatrix.from_quiver(cartan, ori)
            reflected = ExchangeMatrix.from_quiver(
                cartan, reflect_orientation(ori, k)
            )
            mutated = mutate_seed(initial_seed(reflected), k)
            assert mutated.vars == t_i_apply(
                cartan, k, initial_vars(cartan.n)
            )
            assert mutated.matrix == b_matrix


class TestVerifier:
    def test_a2_full_orbit(self):
        report = verify_denominator_theorem(A2, A2_ORI, -2, 2)
        assert report.ok
        assert report.distinct_variables == 5
        assert report.period == 5

    def test_b2_full_orbit(self):
        report = verify_denominator_theorem(B2, B2_ORI, -3, 3)
        assert report.ok
        assert report.distinct_variables == 6
        assert report.period == 3

    def test_wild_range(self):
        report = verify_denominator_theorem(WILD, WILD_ORI, -8, 8)
        assert report.ok
        assert report.distinct_variables == 34
        assert report.period is None

    def test_orbit_variables_belong_to_cluster_algebra(self):
        for cartan, ori in ((A2, A2_ORI), (B2, B2_ORI), (G2, G2_ORI)):
            graph = enumerate_exchange_graph(ExchangeMatrix.from_quiver(cartan, ori))
            known = {v.key() for v in graph.variables}
            period = orbit_period(cartan, admissible_sink_sequence(ori))
            table = coxeter_orbit(cartan, admissible_sink_sequence(ori), -period, period)
            for _, _, var, _ in table.entries():
                assert var.key() in known
