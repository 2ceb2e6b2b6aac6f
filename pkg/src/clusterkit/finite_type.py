"""Finite-type cluster-category combinatorics and the any-cluster verifier.

In finite type the indecomposable objects are labeled bijectively by the
almost positive roots (via the orientation's dimension-vector map), clusters
by their root sets, and the shift/AR-translate acts as sigma_hat.

The extension pairing between objects is computed from two facts alone:
shifted projectives pair by coordinate reading, and the pairing is invariant
under the Coxeter shift.  Since every root lies on the sigma_hat orbit of a
negative simple, reducing the first argument backwards along sigma_hat until
it IS a negative simple -alpha_k and reading max(coordinate_k, 0) of the
co-transported second argument decides every pair.  For an alternating
orientation this agrees with the orientation-free compatibility degree
(sigma_hat is then sigma_minus o sigma_plus); for other acyclic orientations
the two differ and the sigma_hat-invariant pairing is the one the
denominator verifier needs.

A tilting set is stored as the n member-variable roots of its cluster; the
argument order of the pairing was calibrated once against symbolically
recomputed A2 denominators (see calibrate_pairing) and is frozen below:
component i of gamma_V(M) reduces the tilting root, and members themselves
map to -e_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .coxeter import sigma_hat, sigma_hat_inverse, sigma_hat_power
from .errors import CalibrationError, PathInvalid
from .mutation import (
    DEFAULT_MAX_SEEDS,
    ExchangeMatrix,
    canonical_key,
    enumerate_exchange_graph,
    initial_seed,
    mutate_seed,
)
from .rootsys import (
    CartanMatrix,
    Orientation,
    admissible_sink_sequence,
    almost_positive_roots,
    compatibility_degree,
    neg_simple_index,
    require_finite,
    unit,
)

# Frozen calibration constants (re-derived by calibrate_pairing in tests):
# net shift 0 (pair against the member-variable root itself) and the
# tilting root as the REDUCED (first) argument of the pairing.
PAIRING_SHIFT = 0
TILTING_ROOT_FIRST = True


def objects_of(cartan: CartanMatrix) -> tuple:
    """One object per almost positive root (finite type only)."""
    require_finite(cartan)
    return almost_positive_roots(cartan)


def tau_object(cartan: CartanMatrix, order: Sequence[int], root: Sequence[int]) -> tuple:
    """AR translate = shift on objects: root -> sigma_hat(root)."""
    require_finite(cartan)
    return sigma_hat(cartan, order, root)


def ext_pairing(
    cartan: CartanMatrix,
    order: Sequence[int],
    beta: Sequence[int],
    alpha: Sequence[int],
) -> int:
    """Extension pairing of the objects labeled beta, alpha (in that order).

    Walk beta backwards along sigma_hat until it is -alpha_k, co-transporting
    alpha, then read max(alpha_k, 0).  Equals the compatibility degree
    (beta || alpha) whenever the orientation is alternating.
    """
    beta, alpha = tuple(beta), tuple(alpha)
    bound = len(almost_positive_roots(cartan)) + 1
    for _ in range(bound):
        k = neg_simple_index(beta)
        if k is not None:
            return max(alpha[k - 1], 0)
        beta = sigma_hat_inverse(cartan, order, beta)
        alpha = sigma_hat_inverse(cartan, order, alpha)
    raise AssertionError("sigma_hat orbit missed every negative simple")


def is_cluster_tilting(
    cartan: CartanMatrix, roots: Sequence, order: Sequence[int] | None = None
) -> bool:
    """True iff the n distinct roots pair to zero in BOTH orders.

    Without an order the orientation-free compatibility degree is used
    (roots as labels of the alternating orientation); with an order the
    sigma_hat-invariant pairing decides, matching enumerated cluster root
    sets for that orientation.
    """
    require_finite(cartan)
    roots = [tuple(r) for r in roots]
    if len(roots) != cartan.n or len(set(roots)) != cartan.n:
        return False
    if order is None:
        pair = lambda a, b: compatibility_degree(cartan, a, b)  # noqa: E731
    else:
        pair = lambda a, b: ext_pairing(cartan, order, a, b)  # noqa: E731
    for a, b in combinations(roots, 2):
        if pair(a, b) or pair(b, a):
            return False
    return True


def cluster_tilting_sets(
    cartan: CartanMatrix, order: Sequence[int] | None = None
) -> tuple:
    """All maximal pairwise-compatible n-subsets of the almost positive
    roots; independent recount of the cluster number."""
    roots = objects_of(cartan)
    return tuple(
        subset
        for subset in combinations(roots, cartan.n)
        if is_cluster_tilting(cartan, subset, order)
    )


def _gamma_with(
    cartan: CartanMatrix,
    order: Sequence[int],
    tilting: Sequence,
    root: Sequence[int],
    shift: int,
    tilting_first: bool,
) -> tuple:
    betas = [sigma_hat_power(cartan, order, r, shift) for r in tilting]
    root = tuple(root)
    for i, beta in enumerate(betas):
        if root == beta:
            return tuple(-x for x in unit(cartan.n, i + 1))
    if tilting_first:
        return tuple(ext_pairing(cartan, order, beta, root) for beta in betas)
    return tuple(ext_pairing(cartan, order, root, beta) for beta in betas)


def gamma_V(
    cartan: CartanMatrix,
    order: Sequence[int],
    tilting: Sequence,
    root: Sequence[int],
) -> tuple:
    """Dimension vector of the object `root` relative to the tilting set.

    Members map to -e_i; otherwise component i is the pairing with the
    tilting root reduced first.  With the initial tilting set {-alpha_i}
    this reproduces the absolute denominator table exactly.
    """
    require_finite(cartan)
    return _gamma_with(
        cartan, order, [tuple(r) for r in tilting], root, PAIRING_SHIFT,
        TILTING_ROOT_FIRST,
    )


def sigma_V(
    cartan: CartanMatrix,
    order: Sequence[int],
    tilting: Sequence,
    root: Sequence[int],
) -> tuple:
    """Root-to-root form of gamma_V (objects are identified with their roots)."""
    return gamma_V(cartan, order, tilting, root)


# -- ground truth by symbolic replay ---------------------------------------------


@dataclass
class ClusterDenominators:
    """Every cluster variable re-expressed over one target cluster.

    pairs maps the variable as written in the initial indeterminates to the
    same variable written in fresh indeterminates y_1..y_n attached to the
    target cluster; the y-denominator vector is the ground truth that
    gamma_V must predict.
    """

    path: tuple
    members: tuple  # the target cluster's variables in the u-world
    pairs: list  # (u_fraction, y_fraction), deterministic order

    def member_roots(self) -> tuple:
        return tuple(v.denominator_vector() for v in self.members)

    def denominator_of(self, u_key) -> tuple:
        for u, y in self.pairs:
            if u.key() == u_key:
                return y.denominator_vector()
        raise KeyError("variable not found in replay")


def denominators_wrt_cluster(
    matrix: ExchangeMatrix, path: Sequence[int], max_seeds: int = DEFAULT_MAX_SEEDS
) -> ClusterDenominators:
    """Replay `path`, then enumerate a FRESH seed (y, B_x) in lockstep with
    the u-world seeds, correlating variables by identical mutation paths."""
    useed = initial_seed(matrix)
    for z in path:
        if not 1 <= z <= matrix.n:
            raise PathInvalid(f"direction {z} out of range 1..{matrix.n}")
        useed = mutate_seed(useed, z)
    yseed = initial_seed(useed.matrix)

    found: dict = {}  # u-variable key -> (u_fraction, y_fraction)
    nodes = {canonical_key(useed): (useed, yseed)}
    frontier = [canonical_key(useed)]
    order_seen = []
    while frontier:
        key = frontier.pop(0)
        u_node, y_node = nodes[key]
        for u_var, y_var in zip(u_node.vars, y_node.vars):
            prior = found.get(u_var.key())
            if prior is None:
                found[u_var.key()] = (u_var, y_var)
                order_seen.append(u_var.key())
            elif prior[1] != y_var:
                raise AssertionError(
                    "replay produced two different y-expressions for one variable"
                )
        for z in range(1, matrix.n + 1):
            nxt_u = mutate_seed(u_node, z)
            nxt_y = mutate_seed(y_node, z)
            nkey = canonical_key(nxt_u)
            if nkey not in nodes:
                if len(nodes) >= max_seeds:
                    raise PathInvalid("replay exceeded the seed bound")
                nodes[nkey] = (nxt_u, nxt_y)
                frontier.append(nkey)
    pairs = [found[k] for k in order_seen]
    return ClusterDenominators(tuple(path), useed.vars, pairs)


# -- calibration -------------------------------------------------------------------


def calibrate_pairing() -> tuple:
    """Re-derive the frozen pairing constants from the A2 anchor.

    Tries every (shift, argument-order) candidate against the symbolically
    recomputed A2 initial-cluster denominators; all fitting candidates must
    agree pointwise on A2 (the order axis is degenerate there because the
    simply-laced degree is symmetric), and the preferred fit is returned.
    Raises CalibrationError if none fits or if the fits disagree.
    """
    cartan = CartanMatrix([[2, -1], [-1, 2]])
    orientation = Orientation(2, [(2, 1)])
    order = admissible_sink_sequence(orientation)
    matrix = ExchangeMatrix.from_quiver(cartan, orientation)
    ground = denominators_wrt_cluster(matrix, ())
    members = ground.member_roots()

    candidates = [
        (shift, tilting_first)
        for shift in (0, 1, -1, -2)
        for tilting_first in (True, False)
    ]
    fits, tables = [], {}
    for shift, tilting_first in candidates:
        table = {}
        good = True
        for u_var, y_var in ground.pairs:
            alpha = u_var.denominator_vector()
            pred = _gamma_with(cartan, order, members, alpha, shift, tilting_first)
            table[alpha] = pred
            if pred != y_var.denominator_vector():
                good = False
        tables[(shift, tilting_first)] = tuple(sorted(table.items()))
        if good:
            fits.append((shift, tilting_first))
    if not fits:
        raise CalibrationError("no pairing candidate reproduces the A2 table")
    if len({tables[c] for c in fits}) != 1:
        raise CalibrationError(f"A2 table fit by conflicting candidates: {fits}")
    # prefer reducing the tilting root, then the smallest |shift|
    fits.sort(key=lambda c: (not c[1], abs(c[0]), c[0] < 0))
    return fits[0]


# -- the any-cluster denominator verifier ----------------------------------------------


@dataclass
class AxiomReport:
    label: str | None
    pairs_checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": "axioms",
            "type": self.label,
            "pairs_checked": self.pairs_checked,
            "failures": self.failures,
        }


def verify_compatibility_axioms(cartan: CartanMatrix) -> AxiomReport:
    """Exhaustively check the two defining properties of the compatibility
    degree over all ordered pairs of almost positive roots."""
    from .rootsys import neg_simple, sigma_pm

    report = require_finite(cartan)
    roots = almost_positive_roots(cartan)
    failures = []
    pairs = 0
    for beta in roots:
        for i in range(1, cartan.n + 1):
            want = max(beta[i - 1], 0)
            got = compatibility_degree(cartan, neg_simple(cartan.n, i), beta)
            if got != want:
                failures.append(
                    {"base_case": [i, list(beta)], "got": got, "want": want}
                )
    for alpha in roots:
        for beta in roots:
            pairs += 1
            d = compatibility_degree(cartan, alpha, beta)
            for part in ("+", "-"):
                moved = compatibility_degree(
                    cartan, sigma_pm(cartan, part, alpha), sigma_pm(cartan, part, beta)
                )
                if moved != d:
                    failures.append(
                        {
                            "invariance": part,
                            "alpha": list(alpha),
                            "beta": list(beta),
                            "got": moved,
                            "want": d,
                        }
                    )
    return AxiomReport(report.label, pairs, failures)


@dataclass
class Prop48Report:
    label: str | None
    clusters_checked: int
    objects_checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": "prop48",
            "type": self.label,
            "clusters_checked": self.clusters_checked,
            "objects_checked": self.objects_checked,
            "failures": self.failures,
        }


def verify_any_cluster_denominators(
    cartan: CartanMatrix,
    orientation: Orientation,
    max_seeds: int = DEFAULT_MAX_SEEDS,
) -> Prop48Report:
    """For EVERY cluster: the symbolically replayed denominators must equal
    the gamma_V predictions, numerators must be content-free, and the
    denominator map must be injective per cluster."""
    report = require_finite(cartan)
    order = admissible_sink_sequence(orientation)
    matrix = ExchangeMatrix.from_quiver(cartan, orientation)
    graph = enumerate_exchange_graph(matrix, max_seeds)
    object_count = len(objects_of(cartan))
    zero = (0,) * cartan.n

    failures = []
    paths = sorted(
        (node.path for node in graph.nodes.values()), key=lambda p: (len(p), p)
    )
    for path in paths:
        ground = denominators_wrt_cluster(matrix, path, max_seeds)
        members = ground.member_roots()
        if len(ground.pairs) != object_count:
            failures.append(
                {"path": list(path), "error": "replay missed variables",
                 "found": len(ground.pairs)}
            )
        seen_dens = {}
        for u_var, y_var in ground.pairs:
            alpha = u_var.denominator_vector()
            predicted = gamma_V(cartan, order, members, alpha)
            actual = y_var.denominator_vector()
            if predicted != actual:
                failures.append(
                    {
                        "path": list(path),
                        "variable": u_var.display(),
                        "root": list(alpha),
                        "predicted": list(predicted),
                        "actual": list(actual),
                    }
                )
            if y_var.num.content() != zero:
                failures.append(
                    {
                        "path": list(path),
                        "variable": u_var.display(),
                        "error": "numerator divisible by a cluster variable",
                    }
                )
            if actual in seen_dens:
                failures.append(
                    {
                        "path": list(path),
                        "error": "denominator map not injective",
                        "den": list(actual),
                    }
                )
            seen_dens[actual] = u_var
    return Prop48Report(report.label, len(paths), object_count, failures)
