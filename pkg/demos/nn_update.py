"""Supervised nearest-neighbor on the shipped demo set: classify eight
test vectors against two training vectors, then add a third and see
exactly one label move.
"""

from entdist.datasets import FIGS1_DEMO
from entdist.experiments import nn_run
from entdist.protocol import EstimatorConfig

demo = FIGS1_DEMO
result = nn_run(demo.vectors(), list(demo.initial_training),
                demo.added_training, EstimatorConfig(mode="exact"))

print("training vectors:")
for t in demo.initial_training:
    print(f"  {t.label}: {t.vector.components.tolist()}")
print(f"  added later -> {demo.added_training.label}: "
      f"{demo.added_training.vector.components.tolist()}")

print(f"\n{'':>2} {'before':>7} {'after':>7}   nearest distances (after)")
for row, name in zip(result["rows"], demo.names):
    dists = ", ".join(f"{k} {v:.3f}" for k, v in row["distances_after"].items())
    mark = "  <- reassigned" if row["changed"] else ""
    print(f"{name:>2} {row['label_before']:>7} {row['label_after']:>7}   {dists}{mark}")

changed = [demo.names[i] for i in result["changed_indices"]]
print(f"\nlabels changed by the new training vector: {', '.join(changed) or 'none'}")
