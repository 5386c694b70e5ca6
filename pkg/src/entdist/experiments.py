"""Reproductions of the published tables and figures, plus the generic
single-query run.  These return plain data structures; the CLI layer is
responsible for files and plots.
"""

from __future__ import annotations

import math

import numpy as np

from .datasets import (
    FIG2_DEFAULT_COUNT,
    TABLE_DATASETS,
    TableDataset,
    fig2_references,
    fig2_test_vectors,
)
from .ml import (
    ClusteringState,
    LabeledReference,
    classify_two_cluster,
    nearest_neighbor_classify,
    unsupervised_cluster,
)
from .protocol import DistanceQuery, EstimatorConfig, estimate_distance
from .vectors import RealVector, as_vector

__all__ = [
    "rounds_to_printed",
    "estimate_run",
    "table_run",
    "fig2_run",
    "cluster_run",
    "nn_run",
]


def rounds_to_printed(value: float, printed: float, decimals: int = 2) -> bool:
    """True when value rounds to the two-decimal printed figure (half inclusive)."""
    return abs(value - printed) <= 0.5 * 10.0 ** -decimals + 1e-12


def estimate_run(u, v, cfg: EstimatorConfig) -> dict:
    """One distance estimate, flattened for serialization."""
    query = DistanceQuery(as_vector(u), as_vector(v))
    est = estimate_distance(query, cfg)
    return {
        "u": query.u.components.tolist(),
        "v": query.v.components.tolist(),
        "p_hat": est.p_hat,
        "distance": est.distance,
        "inner_product_unit": est.inner_product,
        "inner_product_raw": est.raw_inner_product,
        "norm_u": est.norm_u,
        "norm_v": est.norm_v,
        "shots_used": est.shots_used,
        "std_error_p": est.std_error_p,
        "overlap_out_of_range": est.overlap_out_of_range,
    }


def table_run(
    name: str,
    sampled_cfg: EstimatorConfig | None = None,
) -> dict:
    """Exact-mode D_A - D_B for every table row, checked against the printed
    theory column; optionally a sampled-mode column alongside.

    Row i of the sampled column runs on the substream (seed, i).
    """
    try:
        dataset: TableDataset = TABLE_DATASETS[name]
    except KeyError:
        raise ValueError(f"unknown table dataset {name!r}") from None
    ref_a = LabeledReference(as_vector(dataset.reference_a), "A")
    ref_b = LabeledReference(as_vector(dataset.reference_b), "B")
    exact_cfg = EstimatorConfig(mode="exact")
    rows = []
    for i, row in enumerate(dataset.rows):
        result = classify_two_cluster(as_vector(row.vector), ref_a, ref_b, exact_cfg)
        entry = {
            "index": row.index,
            "vector": list(row.vector),
            "theory_diff": row.theory_diff,
            "computed_diff": result.margin,
            "group": result.assigned_label,
            "matches_paper_theory": rounds_to_printed(result.margin, row.theory_diff),
            "paper_experiment_diff": row.experiment_diff,
            "paper_group": row.group,
        }
        if sampled_cfg is not None:
            sampled = classify_two_cluster(
                as_vector(row.vector), ref_a, ref_b, sampled_cfg.derive(i)
            )
            entry["sampled_diff"] = sampled.margin
            entry["sampled_group"] = sampled.assigned_label
        rows.append(entry)
    return {
        "name": dataset.name,
        "reference_a": list(dataset.reference_a),
        "reference_b": list(dataset.reference_b),
        "rows": rows,
        "all_match_paper_theory": all(r["matches_paper_theory"] for r in rows),
        "mismatched_rows": [r["index"] for r in rows if not r["matches_paper_theory"]],
    }


def fig2_run(
    sampled_cfg: EstimatorConfig,
    count: int = FIG2_DEFAULT_COUNT,
    vectors: list[RealVector] | None = None,
) -> dict:
    """Classify 2-D vectors against the reference pair, exactly and sampled.

    The default test set is seeded from sampled_cfg.seed; vector i runs on
    the substream (seed, i).  Misclassification means the sampled label
    disagrees with the exact one.
    """
    ref_a, ref_b = fig2_references()
    if vectors is None:
        vectors = fig2_test_vectors(count, sampled_cfg.seed)
    exact_cfg = EstimatorConfig(mode="exact")
    rows = []
    for i, u in enumerate(vectors):
        u = as_vector(u)
        exact = classify_two_cluster(u, ref_a, ref_b, exact_cfg)
        sampled = classify_two_cluster(u, ref_a, ref_b, sampled_cfg.derive(i))
        x, y = (float(c) for c in u.components)
        rows.append({
            "index": i,
            "x": x,
            "y": y,
            "norm": u.norm,
            "angle": math.atan2(y, x),
            "exact_diff": exact.margin,
            "exact_label": exact.assigned_label,
            "sampled_diff": sampled.margin,
            "sampled_label": sampled.assigned_label,
            "misclassified": sampled.assigned_label != exact.assigned_label,
        })
    errors = np.array([abs(r["sampled_diff"] - r["exact_diff"]) for r in rows])
    error_p90 = float(np.percentile(errors, 90))
    misclassified = [r for r in rows if r["misclassified"]]
    return {
        "reference_a": ref_a.vector.components.tolist(),
        "reference_b": ref_b.vector.components.tolist(),
        "rows": rows,
        "misclassified_count": len(misclassified),
        "mean_abs_error": float(errors.mean()),
        "error_p90": error_p90,
        "boundary_concentrated": all(
            abs(r["exact_diff"]) < error_p90 for r in misclassified
        ),
    }


def cluster_run(
    vectors,
    k: int,
    init,
    cfg: EstimatorConfig,
    max_iterations: int = 100,
) -> ClusteringState:
    return unsupervised_cluster(vectors, k, init, cfg, max_iterations)


def nn_run(
    test_vectors,
    initial_training,
    added_training: LabeledReference,
    cfg: EstimatorConfig,
) -> dict:
    """Nearest-neighbor labels before and after one extra training vector.

    Test vector i runs on the substream (seed, i) in both phases, so the
    distances to the original training vectors are reused unchanged.
    """
    full = list(initial_training) + [added_training]
    rows = []
    for i, u in enumerate(test_vectors):
        u = as_vector(u)
        before = nearest_neighbor_classify(u, list(initial_training), cfg.derive(i))
        after = nearest_neighbor_classify(u, full, cfg.derive(i))
        rows.append({
            "index": i,
            "vector": u.components.tolist(),
            "label_before": before.assigned_label,
            "label_after": after.assigned_label,
            "changed": before.assigned_label != after.assigned_label,
            "distances_before": dict(sorted(before.per_label_distance.items())),
            "distances_after": dict(sorted(after.per_label_distance.items())),
        })
    return {
        "rows": rows,
        "changed_indices": [r["index"] for r in rows if r["changed"]],
    }
