"""Shared fixtures: small Cartan matrices, orientations, random seeds and
service-replay helpers used across tests."""

import json
from fractions import Fraction

from clusterkit.catalog import parse_quiver_record
from clusterkit.mutation import ExchangeMatrix, mutate_seed, seed_from_quiver
from clusterkit.rootsys import CartanMatrix, Orientation


def cartan_a2() -> CartanMatrix:
    return CartanMatrix([[2, -1], [-1, 2]])


def cartan_a3() -> CartanMatrix:
    return CartanMatrix([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])


def cartan_b2() -> CartanMatrix:
    return CartanMatrix([[2, -1], [-2, 2]])


def cartan_g2() -> CartanMatrix:
    return CartanMatrix([[2, -1], [-3, 2]])


def cartan_wild() -> CartanMatrix:
    # rank-2 infinite-type stress fixture
    return CartanMatrix([[2, -1], [-4, 2]])


def ori_linear(cartan: CartanMatrix) -> Orientation:
    """Every edge {i,j}, i<j oriented j->i; (1..n) is then admissible."""
    edges = [(j, i) for i, j in cartan.undirected_edges()]
    return Orientation.checked(cartan, edges)


def rank2_fixture(cartan: CartanMatrix):
    return cartan, Orientation.checked(cartan, [(2, 1)])


def random_acyclic_exchange_matrix(rng, max_rank=5):
    """Random valued forest with random acyclic orientation, rank 2..max_rank."""
    n = rng.randint(2, max_rank)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for j in range(1, n):
        if n > 2 and rng.random() < 0.2:
            continue  # allow forests
        i = rng.randrange(j)
        pair = rng.choice([(1, 1), (1, 1), (1, 2), (2, 1), (1, 3)])
        a[i][j], a[j][i] = -pair[0], -pair[1]
    cartan = CartanMatrix(a)
    edges = []
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    rank_of = {v: t for t, v in enumerate(perm)}
    for i, j in cartan.undirected_edges():
        edges.append((i, j) if rank_of[i] < rank_of[j] else (j, i))
    return ExchangeMatrix.from_quiver(cartan, Orientation(n, edges))


def canonical_view(view) -> str:
    """Byte-stable encoding of the algebraic part of a session view."""
    return json.dumps(
        {key: view[key] for key in ("vars", "matrix", "sinks", "sources", "history")},
        separators=(",", ":"),
    )


class LibraryReplay:
    """Ground truth for service traces: the same steps via the library."""

    def __init__(self, spec):
        cartan, orientation = parse_quiver_record(spec)
        self.seed = seed_from_quiver(cartan, orientation)
        self.history = []

    def apply(self, step):
        if step["op"] == "mutate":
            self.seed = mutate_seed(self.seed, step["k"])
            self.history.append(step["k"])
        else:
            last = self.history.pop()
            self.seed = mutate_seed(self.seed, last)

    def view(self):
        sinks, sources = self.seed.matrix.sinks_and_sources()
        return {
            "vars": [v.to_json() for v in self.seed.vars],
            "matrix": [list(row) for row in self.seed.matrix.rows],
            "sinks": list(sinks),
            "sources": list(sources),
            "history": list(self.history),
        }


def leading_minors_positive(cartan: CartanMatrix) -> bool:
    """Independent finite-type oracle: the symmetrization diag(d)*A is
    positive definite iff all leading principal minors are positive."""
    n = cartan.n
    m = [
        [Fraction(cartan.d[i] * cartan.rows[i][j]) for j in range(n)]
        for i in range(n)
    ]
    # fraction-exact Gaussian elimination; pivots multiply to the minors
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            factor = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= factor * m[k][j]
    return True
