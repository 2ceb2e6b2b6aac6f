"""Exact-arithmetic engine for acyclic valued cluster algebras.

Core surface: Cartan/root combinatorics (rootsys), the polynomial kernel
(poly), seed mutation and exchange graphs (mutation), Coxeter orbits and the
denominator-theorem verifier (coxeter), the finite-type cluster-category
model with the any-cluster verifier (finite_type), plus a CLI and a local
explorer service.
"""

from .coxeter import (
    ar_recursion_oracle,
    coxeter_orbit,
    preprojective_dim_vector,
    sigma_hat,
    t_i_apply,
    verify_denominator_theorem,
)
from .finite_type import (
    cluster_tilting_sets,
    denominators_wrt_cluster,
    ext_pairing,
    gamma_V,
    is_cluster_tilting,
    objects_of,
    sigma_V,
    tau_object,
    verify_any_cluster_denominators,
    verify_compatibility_axioms,
)
from .mutation import (
    ExchangeMatrix,
    Seed,
    canonical_key,
    enumerate_exchange_graph,
    initial_seed,
    mutate_seed,
    seed_from_quiver,
)
from .poly import IntPolynomial, ReducedFraction, exact_divide, is_positive_polynomial
from .rootsys import (
    CartanMatrix,
    Orientation,
    admissible_sink_sequence,
    almost_positive_roots,
    bipartition,
    cartan_counterpart,
    compatibility_degree,
    exchange_matrix_rows,
    reflect_orientation,
    sigma_pm,
    simple_reflection,
    sinks_and_sources,
    truncated_reflection,
    validate,
)

__version__ = "0.1.0"
