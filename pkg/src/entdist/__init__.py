"""entdist: entanglement-based vector distance estimation and the
classification and clustering procedures built on it.
"""

from .core import (
    MixedState,
    SingleQubitState,
    StateVector,
    fidelity_with_pure,
    project_qubit,
    projection_probability_mixed,
    tensor,
)
from .ml import (
    BOUNDARY_TOL,
    ClassificationResult,
    ClusteringState,
    EmptyGroupError,
    LabeledReference,
    classify_two_cluster,
    mean_group_distance,
    nearest_neighbor_classify,
    unsupervised_cluster,
)
from .noise import (
    DEFAULT_STATE_FIDELITY,
    PAPER_PRESET,
    NoiseModel,
    UnreachableFidelityError,
    apply_noise,
    fidelity_to_mixing_weight,
    noise_preset,
)
from .protocol import (
    GENERATOR_NAME,
    DistanceEstimate,
    DistanceQuery,
    EstimatorConfig,
    ancilla_projection_state,
    build_entangled_state,
    distance_from_p,
    estimate_distance,
    estimate_distances,
    exact_p,
    inner_product_from_p,
    sample_p,
)
from .vectors import (
    DimensionError,
    EncodedVector,
    ProductFactorization,
    RealVector,
    ZeroVectorError,
    as_vector,
    decode,
    encode,
    factorize,
    load_vectors_csv,
    load_vectors_json,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # vectors
    "RealVector",
    "EncodedVector",
    "ProductFactorization",
    "DimensionError",
    "ZeroVectorError",
    "as_vector",
    "encode",
    "decode",
    "factorize",
    "load_vectors_csv",
    "load_vectors_json",
    # core
    "StateVector",
    "MixedState",
    "SingleQubitState",
    "tensor",
    "project_qubit",
    "projection_probability_mixed",
    "fidelity_with_pure",
    # noise
    "NoiseModel",
    "UnreachableFidelityError",
    "DEFAULT_STATE_FIDELITY",
    "PAPER_PRESET",
    "apply_noise",
    "fidelity_to_mixing_weight",
    "noise_preset",
    # protocol
    "DistanceQuery",
    "EstimatorConfig",
    "DistanceEstimate",
    "GENERATOR_NAME",
    "build_entangled_state",
    "ancilla_projection_state",
    "exact_p",
    "sample_p",
    "inner_product_from_p",
    "distance_from_p",
    "estimate_distance",
    "estimate_distances",
    # ml
    "BOUNDARY_TOL",
    "EmptyGroupError",
    "LabeledReference",
    "ClassificationResult",
    "ClusteringState",
    "classify_two_cluster",
    "nearest_neighbor_classify",
    "mean_group_distance",
    "unsupervised_cluster",
]
