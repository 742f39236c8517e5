"""Exact computation over intersecting error-correcting codes and the
matroids and q-matroids they induce.

Everything is exact: finite-field arithmetic on packed integer encodings,
integer/rational bound arithmetic, and exhaustive enumeration guarded by
explicit object-count budgets.
"""

from .budget import DEFAULT_BUDGET, BudgetExceededError, check_budget
from .bounds import (
    BoundReport,
    CodeParams,
    DensityPoint,
    density_experiment,
    ekr_wd,
    griesmer_type,
    hilton_milner,
    i_lower_bound,
    intersecting_dk,
    minimal_code_bound,
    minimal_weight_range_bound,
    search_shortest_intersecting,
    singleton,
)
from .codes import (
    CodeReport,
    LinearCode,
    analyze_code,
    code_from_generator,
    code_from_rows,
    codewords,
    codewords_projective,
    enumerate_codes,
    intersecting_degree,
    is_mds,
    is_minimal_code,
    is_minimal_codeword,
    is_t_intersecting,
    minimum_distance,
    random_code,
    random_code_stream,
    support,
    weight,
    weight_distribution,
    zero_code,
)
from .fields import FieldSpec, field_from_order, field_make
from .fileio import canonical_json, code_to_dict, load_code, parse_code
from .linalg import Matrix, matrix
from .matroid import (
    Matroid,
    Separation,
    check_matroid_axioms,
    circuits,
    cocircuits,
    connectivity_lambda,
    dual_matroid,
    has_disjoint_cocircuits,
    matroid_from_code,
    matroid_from_rank_table,
    uniform_matroid,
    vertical_connectivity,
)
from .qmatroid import (
    QMatroid,
    QSeparation,
    adapted_basis_for_separation,
    check_qmatroid_axioms,
    has_disjoint_q_circuits,
    induced_classical_matroid,
    q_circuits,
    q_dual,
    q_vertical_connectivity,
    qmatroid_from_rank_code,
    qmatroid_from_rank_table,
    uniform_qmatroid,
)
from .rankcodes import (
    ExtensionSpec,
    RankMetricCode,
    is_intersecting_rank,
    is_minimal_rank_codeword,
    min_rank_distance,
    rank_code_from_generator,
    rank_codewords_projective,
    rank_minimal_supports,
    rank_support,
    rank_weight,
)
from .subspaces import (
    Subspace,
    enumerate_subspaces,
    gaussian_binomial,
    orthogonal_complement,
    subspace_from_rows,
    subspace_intersection,
    subspace_lattice,
    subspace_sum,
)
from .verify import SuiteReport, run_suites, verify_classical, verify_q

__version__ = "0.1.0"
