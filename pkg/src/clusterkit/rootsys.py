"""Generalized Cartan matrices, valued-quiver orientations and root combinatorics.

Vertices are 1-based throughout the public surface; root vectors are plain
integer tuples in the simple-root basis (coordinate i at position i-1).

Reflection convention (pinned, see the convention-consistency tests):
    s_i(v)_i = -v_i - sum_{j != i} a[j][i] * v_j
i.e. s_i reads column i of the Cartan matrix.  Only this pairing with the
row-based exchange automorphisms makes the denominator machinery close up.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import (
    CyclicOrientation,
    InfiniteTypeError,
    NotAlmostPositive,
    NotBipartite,
    NotGeneralizedCartan,
    NotSinkOrSource,
    NotSkewSymmetrizable,
    NotSymmetrizable,
    ReductionDidNotTerminate,
)

# -- root vector helpers ----------------------------------------------------


def neg_simple(n: int, i: int) -> tuple:
    """-alpha_i as a coordinate vector (i 1-based)."""
    return tuple(-1 if j == i - 1 else 0 for j in range(n))


def unit(n: int, i: int) -> tuple:
    """alpha_i (= dim E_i) as a coordinate vector (i 1-based)."""
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def neg_simple_index(v: Sequence[int]) -> int | None:
    """Return i if v == -alpha_i, else None."""
    hit = None
    for j, x in enumerate(v):
        if x == 0:
            continue
        if x != -1 or hit is not None:
            return None
        hit = j + 1
    return hit


def is_almost_positive_shape(v: Sequence[int]) -> bool:
    """Positive (componentwise >= 0, nonzero) or a negative simple."""
    if all(x >= 0 for x in v) and any(v):
        return True
    return neg_simple_index(v) is not None


# -- Cartan matrices ---------------------------------------------------------


class CartanMatrix:
    """Generalized Cartan matrix with its minimal positive symmetrizer d.

    d satisfies d[i]*a[i][j] == d[j]*a[j][i]; entries are scaled so each
    connected component has gcd 1.
    """

    __slots__ = ("n", "rows", "d")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise NotGeneralizedCartan("matrix must be square and non-empty")
        for i in range(n):
            if rows[i][i] != 2:
                raise NotGeneralizedCartan(f"diagonal entry a[{i + 1}][{i + 1}] != 2")
            for j in range(n):
                if i == j:
                    continue
                if rows[i][j] > 0:
                    raise NotGeneralizedCartan(
                        f"off-diagonal entry a[{i + 1}][{j + 1}] must be <= 0"
                    )
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise NotGeneralizedCartan(
                        f"zero pattern not symmetric at ({i + 1},{j + 1})"
                    )
        self.n = n
        self.rows = rows
        self.d = self._minimal_symmetrizer()

    def _minimal_symmetrizer(self) -> tuple:
        n, rows = self.n, self.rows
        vals: list = [None] * n
        for start in range(n):
            if vals[start] is not None:
                continue
            vals[start] = Fraction(1)
            comp = [start]
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if i == j or rows[i][j] == 0:
                        continue
                    # d_i a_ij = d_j a_ji  =>  d_j = d_i * a_ij / a_ji
                    ratio = vals[i] * Fraction(rows[i][j], rows[j][i])
                    if vals[j] is None:
                        vals[j] = ratio
                        comp.append(j)
                        stack.append(j)
                    elif vals[j] != ratio:
                        raise NotSymmetrizable(
                            f"inconsistent symmetrizer ratio on edge ({i + 1},{j + 1})"
                        )
            scale = lcm(*(vals[i].denominator for i in comp))
            ints = [int(vals[i] * scale) for i in comp]
            g = gcd(*ints)
            for i, value in zip(comp, ints):
                vals[i] = value // g
        return tuple(vals)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def neighbors(self, i: int) -> tuple:
        return tuple(j + 1 for j in range(self.n) if j != i - 1 and self.rows[i - 1][j] != 0)

    def undirected_edges(self) -> tuple:
        """Unordered underlying-graph edges as (i, j) with i < j, 1-based."""
        return tuple(
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.rows[i][j] != 0
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, CartanMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"CartanMatrix({list(map(list, self.rows))})"


@dataclass(frozen=True)
class SymmetrizerReport:
    """Validation summary: minimal symmetrizer plus Dynkin classification."""

    cartan: CartanMatrix
    finite: bool
    label: str | None
    positive_roots: int | None

    @property
    def symmetrizer(self) -> tuple:
        return self.cartan.d

    @property
    def rank(self) -> int:
        return self.cartan.n


def _component_arms(comp: list, adj: dict, branch: int) -> list:
    lengths = []
    for first in adj[branch]:
        length, prev, cur = 1, branch, first
        while True:
            nxt = [v for v in adj[cur] if v != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return sorted(lengths)


def _path_order(comp: list, adj: dict) -> list:
    ends = [v for v in comp if len(adj[v]) <= 1]
    start = min(ends)
    order, prev, cur = [start], None, start
    while len(order) < len(comp):
        nxt = [v for v in adj[cur] if v != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def _classify_component(rows, comp: list) -> tuple | None:
    """(label, positive_root_count) for a finite-type component, else None."""
    r = len(comp)
    if r == 1:
        return ("A1", 1)
    edges = [
        (i, j) for k, i in enumerate(comp) for j in comp[k + 1 :] if rows[i][j] != 0
    ]
    if len(edges) != r - 1:
        return None  # contains a cycle
    adj = {v: [w for w in comp if w != v and rows[v][w] != 0] for v in comp}
    if max(len(adj[v]) for v in comp) >= 4:
        return None
    branches = [v for v in comp if len(adj[v]) == 3]
    if len(branches) > 1:
        return None
    weights = {e: rows[e[0]][e[1]] * rows[e[1]][e[0]] for e in edges}
    if any(w >= 4 for w in weights.values()):
        return None
    triple = [e for e, w in weights.items() if w == 3]
    double = [e for e, w in weights.items() if w == 2]
    if triple:
        if r == 2 and len(triple) == 1 and not double:
            return ("G2", 6)
        return None
    if len(double) > 1:
        return None
    if len(double) == 1:
        if branches:
            return None
        if r == 2:
            return ("B2/C2", 4)
        path = _path_order(comp, adj)
        a, b = double[0]
        if a in (path[0], path[-1]) or b in (path[0], path[-1]):
            return (f"B{r}/C{r}", r * r)
        if r == 4 and {a, b} == {path[1], path[2]}:
            return ("F4", 24)
        return None
    # simply laced tree
    if not branches:
        return (f"A{r}", r * (r + 1) // 2)
    arms = _component_arms(comp, adj, branches[0])
    if arms[0] == 1 and arms[1] == 1:
        return (f"D{r}", r * (r - 1))
    if arms == [1, 2, 2]:
        return ("E6", 36)
    if arms == [1, 2, 3]:
        return ("E7", 63)
    if arms == [1, 2, 4]:
        return ("E8", 120)
    return None


def _components(cartan: CartanMatrix) -> list:
    n, rows = cartan.n, cartan.rows
    seen, comps = [False] * n, []
    for start in range(n):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and j != i and rows[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


@lru_cache(maxsize=None)
def classify(cartan: CartanMatrix) -> SymmetrizerReport:
    """Dynkin classification of the underlying valued graph."""
    labels, total = [], 0
    finite = True
    for comp in _components(cartan):
        result = _classify_component(cartan.rows, comp)
        if result is None:
            finite = False
            break
        labels.append(result[0])
        total += result[1]
    if not finite:
        return SymmetrizerReport(cartan, False, None, None)
    return SymmetrizerReport(cartan, True, "×".join(labels), total)


def validate(rows: Iterable[Iterable[int]]) -> SymmetrizerReport:
    """Check the generalized-Cartan invariants and classify the valued graph."""
    return classify(CartanMatrix(rows))


def require_finite(cartan: CartanMatrix) -> SymmetrizerReport:
    report = classify(cartan)
    if not report.finite:
        raise InfiniteTypeError("operation requires a finite-type Cartan matrix")
    return report


# -- reflections -------------------------------------------------------------


def simple_reflection(cartan: CartanMatrix, i: int, v: Sequence[int]) -> tuple:
    """s_i, acting on any integer vector (column-i convention, see module doc)."""
    col = i - 1
    acc = 0
    for j in range(cartan.n):
        if j != col:
            acc += cartan.rows[j][col] * v[j]
    out = list(v)
    out[col] = -v[col] - acc
    return tuple(out)


def truncated_reflection(cartan: CartanMatrix, i: int, v: Sequence[int]) -> tuple:
    """sigma_i: fixes -alpha_j for j != i, otherwise acts as s_i."""
    if not is_almost_positive_shape(v):
        raise NotAlmostPositive(f"{tuple(v)} is neither positive nor a negative simple")
    j = neg_simple_index(v)
    if j is not None and j != i:
        return tuple(v)
    return simple_reflection(cartan, i, v)


@lru_cache(maxsize=None)
def bipartition(cartan: CartanMatrix) -> tuple:
    """2-coloring (plus, minus) of the vertices; lowest vertex of each
    component goes to the plus part."""
    n = cartan.n
    color: list = [None] * n
    for start in range(n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if j == i or cartan.rows[i][j] == 0:
                    continue
                if color[j] is None:
                    color[j] = 1 - color[i]
                    queue.append(j)
                elif color[j] == color[i]:
                    raise NotBipartite("underlying graph contains an odd cycle")
    plus = tuple(i + 1 for i in range(n) if color[i] == 0)
    minus = tuple(i + 1 for i in range(n) if color[i] == 1)
    return plus, minus


def sigma_pm(cartan: CartanMatrix, part: str, v: Sequence[int]) -> tuple:
    """Product of sigma_i over one part of the bipartition ("+" or "-").

    The part is totally disconnected, so the factors commute and the
    application order is irrelevant.
    """
    plus, minus = bipartition(cartan)
    indices = plus if part == "+" else minus
    out = tuple(v)
    for i in indices:
        out = truncated_reflection(cartan, i, out)
    return out


# -- root enumeration ---------------------------------------------------------


@lru_cache(maxsize=None)
def positive_roots(cartan: CartanMatrix) -> tuple:
    """All positive roots, by reflection closure from the simples."""
    report = classify(cartan)
    if not report.finite:
        raise InfiniteTypeError("positive-root enumeration needs finite type")
    bound = report.positive_roots
    roots = {unit(cartan.n, i) for i in range(1, cartan.n + 1)}
    frontier = list(roots)
    while frontier:
        v = frontier.pop()
        for i in range(1, cartan.n + 1):
            w = simple_reflection(cartan, i, v)
            if all(x >= 0 for x in w) and w not in roots:
                roots.add(w)
                frontier.append(w)
                if len(roots) > bound:
                    raise InfiniteTypeError(
                        "reflection closure exceeded the classification bound"
                    )
    if len(roots) != bound:
        raise AssertionError(
            f"closure found {len(roots)} positive roots, classification says {bound}"
        )
    return tuple(sorted(roots))


@lru_cache(maxsize=None)
def almost_positive_roots(cartan: CartanMatrix) -> tuple:
    """Positive roots plus the n negative simples, sorted."""
    negs = tuple(neg_simple(cartan.n, i) for i in range(1, cartan.n + 1))
    return tuple(sorted(negs + positive_roots(cartan)))


# -- compatibility degree ------------------------------------------------------


def compatibility_degree(
    cartan: CartanMatrix, alpha: Sequence[int], beta: Sequence[int]
) -> int:
    """(alpha || beta): negative-simple base case + sigma_pm invariance.

    Deterministic schedule: apply sigma_minus, sigma_plus alternately to both
    arguments until the first becomes a negative simple.  The alternating walk
    covers the whole dihedral <sigma_+, sigma_-> orbit, which always contains
    a negative simple in finite type, so 2*|Phi_{>=-1}| steps suffice.
    """
    roots = set(almost_positive_roots(cartan))
    alpha, beta = tuple(alpha), tuple(beta)
    if alpha not in roots or beta not in roots:
        raise NotAlmostPositive("compatibility degree needs almost positive roots")
    limit = 2 * len(roots) + 2
    part = "-"
    for _ in range(limit):
        j = neg_simple_index(alpha)
        if j is not None:
            return max(beta[j - 1], 0)
        alpha = sigma_pm(cartan, part, alpha)
        beta = sigma_pm(cartan, part, beta)
        part = "+" if part == "-" else "-"
    raise ReductionDidNotTerminate(
        "sigma reduction did not reach a negative simple (non-finite input?)"
    )


# -- orientations ---------------------------------------------------------------


class Orientation:
    """A direction for every edge of the underlying valued graph."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple]):
        self.n = n
        self.edges = frozenset((int(i), int(j)) for i, j in edges)

    @classmethod
    def checked(
        cls,
        cartan: CartanMatrix,
        edges: Iterable[tuple],
        require_acyclic: bool = True,
    ) -> "Orientation":
        ori = cls(cartan.n, edges)
        want = set(cartan.undirected_edges())
        seen = set()
        for i, j in ori.edges:
            if i == j or not (1 <= i <= cartan.n and 1 <= j <= cartan.n):
                raise NotGeneralizedCartan(f"bad arrow ({i},{j})")
            key = (min(i, j), max(i, j))
            if key not in want:
                raise NotGeneralizedCartan(f"arrow ({i},{j}) is not an edge of the graph")
            if key in seen:
                raise NotGeneralizedCartan(f"edge {key} oriented twice")
            seen.add(key)
        if seen != want:
            missing = sorted(want - seen)
            raise NotGeneralizedCartan(f"unoriented edges: {missing}")
        if require_acyclic and not ori.is_acyclic():
            raise CyclicOrientation("orientation contains an oriented cycle")
        return ori

    def out_neighbors(self, k: int) -> tuple:
        return tuple(sorted(j for i, j in self.edges if i == k))

    def in_neighbors(self, k: int) -> tuple:
        return tuple(sorted(i for i, j in self.edges if j == k))

    def is_acyclic(self) -> bool:
        try:
            admissible_sink_sequence(self)
        except CyclicOrientation:
            return False
        return True

    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Orientation)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        arrows = ",".join(f"{i}->{j}" for i, j in self.sorted_edges())
        return f"Orientation({arrows})"


def sinks_and_sources(orientation: Orientation) -> tuple:
    """(sinks, sources): no outgoing / no incoming arrows, sorted 1-based."""
    outs = {i for i, _ in orientation.edges}
    ins = {j for _, j in orientation.edges}
    sinks = tuple(k for k in range(1, orientation.n + 1) if k not in outs)
    sources = tuple(k for k in range(1, orientation.n + 1) if k not in ins)
    return sinks, sources


def reflect_orientation(orientation: Orientation, k: int) -> Orientation:
    """s_k Omega: reverse every arrow at a sink or source k."""
    sinks, sources = sinks_and_sources(orientation)
    if k not in sinks and k not in sources:
        raise NotSinkOrSource(f"vertex {k} is neither a sink nor a source")
    flipped = {
        (j, i) if k in (i, j) else (i, j) for i, j in orientation.edges
    }
    return Orientation(orientation.n, flipped)


def admissible_sink_sequence(orientation: Orientation) -> tuple:
    """Reverse topological order: k_1 a sink, each k_{t+1} a sink after
    reflecting at k_1..k_t.  Smallest index first on ties."""
    n = orientation.n
    out_deg = {v: 0 for v in range(1, n + 1)}
    into: dict = {v: [] for v in range(1, n + 1)}
    for i, j in orientation.edges:
        out_deg[i] += 1
        into[j].append(i)
    heap = [v for v in range(1, n + 1) if out_deg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        k = heapq.heappop(heap)
        order.append(k)
        for w in into[k]:
            out_deg[w] -= 1
            if out_deg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != n:
        raise CyclicOrientation("orientation contains an oriented cycle")
    return tuple(order)


# -- exchange-matrix correspondence ---------------------------------------------


def exchange_matrix_rows(cartan: CartanMatrix, orientation: Orientation) -> tuple:
    """B from (A, Omega): b[x][z] = a[z][x] for an arrow x->z, the negative
    for z->x, zero otherwise."""
    n = cartan.n
    b = [[0] * n for _ in range(n)]
    for i, j in orientation.edges:
        b[i - 1][j - 1] = cartan.rows[j - 1][i - 1]
        b[j - 1][i - 1] = -cartan.rows[i - 1][j - 1]
    return tuple(tuple(row) for row in b)


def cartan_counterpart(rows: Iterable[Iterable[int]]) -> CartanMatrix:
    """A from B: a[i][i] = 2, a[i][j] = -|b[j][i]|.  Round-trips with
    exchange_matrix_rows for every acyclic orientation."""
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise NotSkewSymmetrizable("matrix must be square")
    for i in range(n):
        if rows[i][i] != 0:
            raise NotSkewSymmetrizable("nonzero diagonal")
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] * rows[j][i] > 0 or (rows[i][j] == 0) != (rows[j][i] == 0):
                raise NotSkewSymmetrizable(
                    f"entries ({i + 1},{j + 1}) do not have opposite signs"
                )
    a = [
        [2 if i == j else -abs(rows[j][i]) for j in range(n)] for i in range(n)
    ]
    try:
        return CartanMatrix(a)
    except NotSymmetrizable as exc:
        raise NotSkewSymmetrizable(str(exc)) from exc
