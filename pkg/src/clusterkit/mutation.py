"""Seeds, matrix/seed mutation, and exchange-graph enumeration.

Mutation directions are 1-based.  Seeds carry their provenance path from the
root seed; the exchange graph deduplicates seeds by the unordered multiset of
cluster variables, which in the acyclic regime explored here determines the
seed up to simultaneous permutation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BoundExceeded, LaurentViolation, NotDivisible, NotSkewSymmetrizable
from .poly import ReducedFraction, product
from .rootsys import CartanMatrix, Orientation, cartan_counterpart, exchange_matrix_rows

DEFAULT_MAX_SEEDS = 10**6


class ExchangeMatrix:
    """Skew-symmetrizable integer matrix with its fixed symmetrizer d.

    The symmetrizer is the Cartan one and satisfies b[i][j]*d[j] ==
    -b[j][i]*d[i]; mutation preserves this relation with the SAME d.
    """

    __slots__ = ("n", "rows", "d")

    def __init__(self, rows: Iterable[Iterable[int]], d: Sequence[int] | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise NotSkewSymmetrizable("matrix must be square")
        if d is None:
            d = cartan_counterpart(rows).d
        d = tuple(d)
        for i in range(n):
            if rows[i][i] != 0:
                raise NotSkewSymmetrizable("nonzero diagonal")
            for j in range(n):
                if rows[i][j] * d[j] != -rows[j][i] * d[i]:
                    raise NotSkewSymmetrizable(
                        f"d does not skew-symmetrize B at ({i + 1},{j + 1})"
                    )
        self.n = n
        self.rows = rows
        self.d = d

    @classmethod
    def from_quiver(cls, cartan: CartanMatrix, orientation: Orientation) -> "ExchangeMatrix":
        return cls(exchange_matrix_rows(cartan, orientation), cartan.d)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def mutate(self, z: int) -> "ExchangeMatrix":
        """Matrix mutation in direction z; involutive, keeps d."""
        n = self.n
        k = z - 1
        b = self.rows
        new = [
            [
                -b[x][y]
                if (x == k or y == k)
                else b[x][y] + (abs(b[x][k]) * b[k][y] + b[x][k] * abs(b[k][y])) // 2
                for y in range(n)
            ]
            for x in range(n)
        ]
        out = ExchangeMatrix.__new__(ExchangeMatrix)
        out.n = n
        out.rows = tuple(tuple(row) for row in new)
        out.d = self.d
        return out

    def sinks_and_sources(self) -> tuple:
        """Read arrow directions off the signs: an arrow x->z has b[x][z] < 0."""
        sinks = tuple(
            i + 1 for i in range(self.n) if all(x >= 0 for x in self.rows[i])
        )
        sources = tuple(
            i + 1 for i in range(self.n) if all(x <= 0 for x in self.rows[i])
        )
        return sinks, sources

    def __eq__(self, other) -> bool:
        return isinstance(other, ExchangeMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"ExchangeMatrix({list(map(list, self.rows))})"


@dataclass(frozen=True)
class Seed:
    """Cluster variables (as fractions in the root indeterminates) plus B."""

    vars: tuple
    matrix: ExchangeMatrix
    path: tuple = ()

    @property
    def n(self) -> int:
        return self.matrix.n


def initial_seed(matrix: ExchangeMatrix) -> Seed:
    n = matrix.n
    return Seed(
        tuple(ReducedFraction.indeterminate(n, i) for i in range(1, n + 1)), matrix
    )


def seed_from_quiver(cartan: CartanMatrix, orientation: Orientation) -> Seed:
    return initial_seed(ExchangeMatrix.from_quiver(cartan, orientation))


def exchange_products(seed: Seed, z: int) -> tuple:
    """The two exchange monomials (positive-column part, negative-column part)."""
    n = seed.n
    col = z - 1
    pos = product(
        (seed.vars[x] ** seed.matrix.rows[x][col] for x in range(n) if seed.matrix.rows[x][col] > 0),
        n,
    )
    neg = product(
        (seed.vars[x] ** -seed.matrix.rows[x][col] for x in range(n) if seed.matrix.rows[x][col] < 0),
        n,
    )
    return pos, neg


def mutate_seed(seed: Seed, z: int) -> Seed:
    """Seed mutation in direction z: z*z' = prod_{b_xz>0} x^b + prod_{b_xz<0} x^-b."""
    if not 1 <= z <= seed.n:
        raise ValueError(f"mutation direction {z} out of range 1..{seed.n}")
    pos, neg = exchange_products(seed, z)
    try:
        new_var = (pos + neg).div(seed.vars[z - 1])
    except NotDivisible as exc:
        raise LaurentViolation(
            f"exchange relation in direction {z} did not divide exactly"
        ) from exc
    vars_out = tuple(
        new_var if x == z - 1 else seed.vars[x] for x in range(seed.n)
    )
    return Seed(vars_out, seed.matrix.mutate(z), seed.path + (z,))


def canonical_key(seed: Seed) -> tuple:
    """Order-free identity of the cluster: sorted variable encodings."""
    return tuple(sorted(v.key() for v in seed.vars))


@dataclass
class GraphNode:
    seed: Seed
    neighbors: dict = field(default_factory=dict)

    @property
    def path(self) -> tuple:
        return self.seed.path


@dataclass
class EnumerationResult:
    nodes: dict
    variables: tuple
    truncated: bool = False

    @property
    def cluster_count(self) -> int:
        return len(self.nodes)

    @property
    def variable_count(self) -> int:
        return len(self.variables)

    def to_json(self) -> dict:
        return {
            "clusters": self.cluster_count,
            "variables": self.variable_count,
            "variable_list": [v.to_json() for v in self.variables],
            "truncated": self.truncated,
        }


def _matrix_consistency_check(existing: Seed, arrived: Seed) -> None:
    """When two paths meet, the matrices must agree up to the simultaneous
    variable permutation removed by the canonical key."""
    order_a = sorted(range(existing.n), key=lambda i: existing.vars[i].key())
    order_b = sorted(range(arrived.n), key=lambda i: arrived.vars[i].key())
    for x in range(existing.n):
        for y in range(existing.n):
            if (
                existing.matrix.rows[order_a[x]][order_a[y]]
                != arrived.matrix.rows[order_b[x]][order_b[y]]
            ):
                raise AssertionError(
                    f"matrix mismatch where paths {existing.path} and {arrived.path} meet"
                )


def enumerate_exchange_graph(
    matrix: ExchangeMatrix,
    max_seeds: int = DEFAULT_MAX_SEEDS,
    debug_checks: bool = False,
) -> EnumerationResult:
    """Breadth-first closure of the initial seed under all mutations.

    Deterministic: frontier is FIFO from the root, directions ascending.
    Raises BoundExceeded (carrying the partial result) once more than
    max_seeds distinct clusters appear; infinite-type inputs are expected to
    end up there.
    """
    if max_seeds < 1:
        raise ValueError("max_seeds must be >= 1")
    root = initial_seed(matrix)
    nodes: dict = {canonical_key(root): GraphNode(root)}
    variables = {v.key(): v for v in root.vars}
    queue = deque(nodes)
    truncated = None
    while queue:
        key = queue.popleft()
        node = nodes[key]
        for z in range(1, matrix.n + 1):
            nxt = mutate_seed(node.seed, z)
            nkey = canonical_key(nxt)
            if nkey not in nodes:
                if len(nodes) >= max_seeds:
                    truncated = EnumerationResult(
                        nodes, tuple(sorted(variables.values())), truncated=True
                    )
                    raise BoundExceeded(
                        f"exchange graph exceeds {max_seeds} seeds", partial=truncated
                    )
                nodes[nkey] = GraphNode(nxt)
                for v in nxt.vars:
                    variables.setdefault(v.key(), v)
                queue.append(nkey)
            elif debug_checks:
                _matrix_consistency_check(nodes[nkey].seed, nxt)
            node.neighbors[z] = nkey
    return EnumerationResult(nodes, tuple(sorted(variables.values())))
