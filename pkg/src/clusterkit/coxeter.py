"""Coxeter automorphism orbits and the denominator-vector machinery.

T = T_{k_n} ... T_{k_1} along an admissible sink sequence (k_1..k_n); its
orbit T^m(u_k) is computed by a window recurrence: a forward sweep updates
slots in reverse sequence order, each update being the T_i substitution
applied to the current mixed window, and costs one polynomial multiply-add
plus one exact division.  sigma_hat = sigma_{k_n} o ... o sigma_{k_1} is the
dimension-vector shadow; the engine asserts at every single-step update that
the new slot's denominator vector equals its sigma_hat-orbit vector, so the
denominator theorem is enforced at every intermediate tuple, not just at
sweep boundaries.

An independent additive recursion over Auslander-Reiten triangles reproduces
the dimension-vector table without any reflections; it is kept strictly
separate as the cross-oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LaurentViolation, NotDivisible, WindowInconsistent
from .poly import ReducedFraction, is_positive_polynomial, product
from .rootsys import (
    CartanMatrix,
    Orientation,
    admissible_sink_sequence,
    almost_positive_roots,
    classify,
    neg_simple,
    neg_simple_index,
    truncated_reflection,
    unit,
)

# -- sigma_hat ---------------------------------------------------------------


def sigma_hat(cartan: CartanMatrix, order: Sequence[int], v: Sequence[int]) -> tuple:
    """Composition of truncated reflections along the admissible order."""
    out = tuple(v)
    for k in order:
        out = truncated_reflection(cartan, k, out)
    return out


def sigma_hat_inverse(cartan: CartanMatrix, order: Sequence[int], v: Sequence[int]) -> tuple:
    out = tuple(v)
    for k in reversed(order):
        out = truncated_reflection(cartan, k, out)
    return out


def sigma_hat_power(
    cartan: CartanMatrix, order: Sequence[int], v: Sequence[int], m: int
) -> tuple:
    out = tuple(v)
    step = sigma_hat if m >= 0 else sigma_hat_inverse
    for _ in range(abs(m)):
        out = step(cartan, order, out)
    return out


def preprojective_dim_vector(
    cartan: CartanMatrix, order: Sequence[int], m: int, k: int
) -> tuple:
    """sigma_hat^m(-alpha_k), the dimension vector of the m-th Coxeter shift
    of the k-th shifted projective."""
    return sigma_hat_power(cartan, order, neg_simple(cartan.n, k), m)


def sigma_orbit_period(cartan: CartanMatrix, order: Sequence[int], k: int) -> int:
    """Smallest p >= 1 with sigma_hat^p(-alpha_k) = -alpha_k (finite type)."""
    start = neg_simple(cartan.n, k)
    v = sigma_hat(cartan, order, start)
    p = 1
    bound = 2 * len(almost_positive_roots(cartan)) + 1
    while v != start:
        v = sigma_hat(cartan, order, v)
        p += 1
        if p > bound:
            raise AssertionError("sigma_hat orbit failed to close in finite type")
    return p


def sigma_hat_orbits(cartan: CartanMatrix, order: Sequence[int]) -> tuple:
    """Partition of the almost positive roots into sigma_hat orbits."""
    remaining = set(almost_positive_roots(cartan))
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = [start]
        remaining.remove(start)
        v = sigma_hat(cartan, order, start)
        while v != start:
            orbit.append(v)
            remaining.remove(v)
            v = sigma_hat(cartan, order, v)
        orbits.append(tuple(orbit))
    return tuple(orbits)


# -- exchange automorphisms ----------------------------------------------------


def t_i_apply(cartan: CartanMatrix, i: int, vars: Sequence[ReducedFraction]) -> tuple:
    """Substitution automorphism T_i on an n-tuple: slot i becomes
    (prod_{a[i][k]<0} vars[k]^{-a[i][k]} + 1) / vars[i]."""
    n = cartan.n
    row = cartan.rows[i - 1]
    factor = product(
        (vars[k] ** -row[k] for k in range(n) if k != i - 1 and row[k] < 0), n
    )
    one = ReducedFraction.one(n)
    try:
        new = (factor + one).div(vars[i - 1])
    except NotDivisible as exc:
        raise LaurentViolation(f"T_{i} substitution did not divide exactly") from exc
    return tuple(new if k == i - 1 else vars[k] for k in range(n))


# -- the orbit window ------------------------------------------------------------


@dataclass
class OrbitTable:
    """T^m(u_k) and sigma_hat^m(-alpha_k) for m_from <= m <= m_to."""

    cartan: CartanMatrix
    order: tuple
    m_from: int
    m_to: int
    vars: dict
    dims: dict

    def variable(self, m: int, k: int) -> ReducedFraction:
        return self.vars[(m, k)]

    def dim(self, m: int, k: int) -> tuple:
        return self.dims[(m, k)]

    def entries(self):
        for m in range(self.m_from, self.m_to + 1):
            for k in range(1, self.cartan.n + 1):
                yield m, k, self.vars[(m, k)], self.dims[(m, k)]


def _sweep(cartan, order, window, dims, forward: bool, check_window: bool):
    slots = tuple(reversed(order)) if forward else tuple(order)
    shift = sigma_hat if forward else sigma_hat_inverse
    for i in slots:
        window = t_i_apply(cartan, i, window)
        dims = list(dims)
        dims[i - 1] = shift(cartan, order, dims[i - 1])
        if check_window and window[i - 1].denominator_vector() != tuple(dims[i - 1]):
            raise WindowInconsistent(
                f"slot {i}: denominator {window[i - 1].denominator_vector()} "
                f"!= orbit vector {tuple(dims[i - 1])}"
            )
        dims = tuple(dims)
    return window, dims


def coxeter_orbit(
    cartan: CartanMatrix,
    order: Sequence[int],
    m_from: int,
    m_to: int,
    check_window: bool = True,
) -> OrbitTable:
    """Compute the orbit table by forward/backward window sweeps.

    Every produced fraction is normalized; with check_window the running
    denominator theorem is asserted after each slot update.
    """
    if sorted(order) != list(range(1, cartan.n + 1)):
        raise ValueError("order must be a permutation of 1..n")
    if not m_from <= 0 <= m_to:
        raise ValueError("orbit range must contain m = 0")
    n = cartan.n
    order = tuple(order)
    init_vars = tuple(ReducedFraction.indeterminate(n, i) for i in range(1, n + 1))
    init_dims = tuple(neg_simple(n, i) for i in range(1, n + 1))
    table_vars, table_dims = {}, {}

    def record(m, window, dims):
        for k in range(1, n + 1):
            table_vars[(m, k)] = window[k - 1]
            table_dims[(m, k)] = dims[k - 1]

    record(0, init_vars, init_dims)
    window, dims = init_vars, init_dims
    for m in range(1, m_to + 1):
        window, dims = _sweep(cartan, order, window, dims, True, check_window)
        record(m, window, dims)
    window, dims = init_vars, init_dims
    for m in range(-1, m_from - 1, -1):
        window, dims = _sweep(cartan, order, window, dims, False, check_window)
        record(m, window, dims)
    return OrbitTable(cartan, order, m_from, m_to, table_vars, table_dims)


def orbit_period(cartan: CartanMatrix, order: Sequence[int]) -> int | None:
    """Sweep count after which the whole window returns to the start; None
    for infinite type.  Capped at 2*|Phi_{>=-1}| sweeps."""
    if not classify(cartan).finite:
        return None
    n = cartan.n
    order = tuple(order)
    init_vars = tuple(ReducedFraction.indeterminate(n, i) for i in range(1, n + 1))
    init_dims = tuple(neg_simple(n, i) for i in range(1, n + 1))
    cap = 2 * len(almost_positive_roots(cartan))
    window, dims = init_vars, init_dims
    for p in range(1, cap + 1):
        window, dims = _sweep(cartan, order, window, dims, True, True)
        if window == init_vars and dims == init_dims:
            return p
    raise AssertionError("finite-type orbit failed to close within the cap")


# -- the AR-recursion oracle ------------------------------------------------------


def ar_recursion_oracle(
    cartan: CartanMatrix, order: Sequence[int], m_max: int
) -> dict:
    """Dimension-vector table for 0 <= m <= m_max from the additive
    Auslander-Reiten recursion alone (no reflections).

    Middle-term summands whose stored vector is a negative simple are
    dropped; when the subtracted vector is -alpha_t the wrap rule
    d(m+1, i) = e_t + sum(kept summands) applies.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    n = cartan.n
    order = tuple(order)
    table = {(0, k): neg_simple(n, k) for k in range(1, n + 1)}
    for m in range(m_max):
        for idx in range(n - 1, -1, -1):
            i = order[idx]
            total = [0] * n
            for j in order[idx + 1 :]:  # sequence-later vertices, level m+1
                coef = -cartan.entry(i, j)
                vec = table[(m + 1, j)]
                if coef and neg_simple_index(vec) is None:
                    for t in range(n):
                        total[t] += coef * vec[t]
            for j in order[:idx]:  # sequence-earlier vertices, level m
                coef = -cartan.entry(i, j)
                vec = table[(m, j)]
                if coef and neg_simple_index(vec) is None:
                    for t in range(n):
                        total[t] += coef * vec[t]
            prev = table[(m, i)]
            wrap = neg_simple_index(prev)
            if wrap is not None:
                base = unit(n, wrap)
                table[(m + 1, i)] = tuple(total[t] + base[t] for t in range(n))
            else:
                table[(m + 1, i)] = tuple(total[t] - prev[t] for t in range(n))
    return table


# -- the denominator-theorem verifier -----------------------------------------------


@dataclass
class OrbitRow:
    m: int
    k: int
    variable: ReducedFraction
    dim: tuple
    denominator_ok: bool
    positive_ok: bool
    content_ok: bool

    @property
    def ok(self) -> bool:
        return self.denominator_ok and self.positive_ok and self.content_ok

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "variable": self.variable.to_json(),
            "dim": list(self.dim),
            "denominator_ok": self.denominator_ok,
            "positive_ok": self.positive_ok,
        }


@dataclass
class DenominatorReport:
    label: str | None
    rows: list
    failures: list
    distinct_variables: int
    period: int | None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": "thm44",
            "type": self.label,
            "rows_checked": len(self.rows),
            "distinct_variables": self.distinct_variables,
            "period": self.period,
            "failures": self.failures,
        }


def verify_denominator_theorem(
    cartan: CartanMatrix,
    orientation: Orientation,
    m_from: int,
    m_to: int,
) -> DenominatorReport:
    """Check, for every (m, k) in range: denominator vector == sigma_hat
    orbit vector, positivity of the numerator, content-freeness, and
    injectivity of the variable <-> dimension-vector correspondence."""
    order = admissible_sink_sequence(orientation)
    table = coxeter_orbit(cartan, order, m_from, m_to, check_window=False)
    rows, failures = [], []
    zero = (0,) * cartan.n
    for m, k, var, dim in table.entries():
        den_ok = var.denominator_vector() == dim
        pos_ok = is_positive_polynomial(var.num)
        content_ok = var.num.content() == zero
        row = OrbitRow(m, k, var, dim, den_ok, pos_ok, content_ok)
        rows.append(row)
        if not row.ok:
            failures.append(
                {
                    "m": m,
                    "k": k,
                    "variable": var.display(),
                    "dim": list(dim),
                    "denominator_ok": den_ok,
                    "positive_ok": pos_ok,
                    "content_ok": content_ok,
                }
            )
    # phi injectivity on the computed range: equal fractions <=> equal vectors
    by_var: dict = {}
    by_dim: dict = {}
    for row in rows:
        by_var.setdefault(row.variable.key(), set()).add(row.dim)
        by_dim.setdefault(row.dim, set()).add(row.variable.key())
    for key, dims in by_var.items():
        if len(dims) > 1:
            failures.append({"injectivity": "variable with two dimension vectors",
                             "dims": sorted(map(list, dims))})
    for dim, keys in by_dim.items():
        if len(keys) > 1:
            failures.append({"injectivity": "dimension vector with two variables",
                             "dim": list(dim)})
    report = classify(cartan)
    period = orbit_period(cartan, order) if report.finite else None
    return DenominatorReport(
        report.label, rows, failures, len(by_var), period
    )
