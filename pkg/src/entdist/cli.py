"""Command-line front end.

Commands: estimate, classify, nn, cluster, and repro <fig2|table1|table2|
fig3|figS1>.  Experiments are described by a JSON (optionally TOML) config
file; flags override config fields.  Every output file embeds the resolved
config, seed, generator name, and artifact version, so identical runs are
byte-identical.

Exit status: 0 success (including reported non-convergence), 1 validation
error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from pathlib import Path

from . import __version__
from .datasets import FIG2_DEFAULT_COUNT, FIG2_NORM_RANGE, FIG3_DEMO, FIGS1_DEMO
from .experiments import cluster_run, estimate_run, fig2_run, nn_run, table_run
from .ml import LabeledReference, classify_two_cluster, nearest_neighbor_classify
from .noise import NOISE_PRESETS, PAPER_PRESET, NoiseModel, noise_preset
from .protocol import GENERATOR_NAME, EstimatorConfig
from .svgplot import cartesian_scatter_svg, contour_segments, polar_scatter_svg
from .vectors import as_vector, load_vectors_csv, load_vectors_json

REPRO_TARGETS = ("fig2", "table1", "table2", "fig3", "figS1")

TABLE_DEFAULT_SHOTS = 500
FIG2_DEFAULT_SHOTS = 10_000


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors; remap to 1
        return 0 if exc.code in (0, None) else 1
    try:
        return args.handler(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entdist",
        description="Entanglement-based distance estimation and classification.",
    )
    parser.add_argument("--version", action="version", version=f"entdist {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="JSON (or TOML) experiment config")
    common.add_argument("--shots", type=int, default=None, help="sampled mode with this many shots")
    common.add_argument("--exact", action="store_const", const=True, default=None,
                        help="exact mode (no sampling)")
    common.add_argument("--seed", type=int, default=None, help="unsigned 64-bit RNG seed")
    common.add_argument("--noise", metavar="PRESET|PATH", default=None,
                        help=f"noise preset ({', '.join(sorted(NOISE_PRESETS))}), JSON file, or 'none'")
    common.add_argument("--out", metavar="DIR", default=None, help="output directory")
    common.add_argument("--plot", action="store_const", const=True, default=None,
                        help="emit SVG plots (2-D data only)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", parents=[common], help="distance between two vectors")
    p.add_argument("--u", metavar="NUMS", help="new vector, e.g. '1,0'")
    p.add_argument("--v", metavar="NUMS", help="reference vector")
    p.set_defaults(handler=_cmd_estimate)

    p = sub.add_parser("classify", parents=[common], help="two-cluster assignment")
    p.add_argument("--vector", action="append", metavar="NUMS", help="test vector (repeatable)")
    p.add_argument("--vectors", metavar="PATH", help="CSV/JSON file of test vectors")
    p.add_argument("--ref-a", metavar="NUMS", help="cluster A reference vector")
    p.add_argument("--ref-b", metavar="NUMS", help="cluster B reference vector")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("nn", parents=[common], help="nearest-neighbor classification")
    p.add_argument("--vector", action="append", metavar="NUMS", help="test vector (repeatable)")
    p.add_argument("--vectors", metavar="PATH", help="CSV/JSON file of test vectors")
    p.set_defaults(handler=_cmd_nn)

    p = sub.add_parser("cluster", parents=[common], help="unsupervised clustering")
    p.add_argument("--vector", action="append", metavar="NUMS", help="input vector (repeatable)")
    p.add_argument("--vectors", metavar="PATH", help="CSV/JSON file of input vectors")
    p.add_argument("--k", type=int, default=None, help="number of groups (default 2)")
    p.add_argument("--init", type=int, default=None, metavar="SEED",
                   help="seed for the random initial labeling")
    p.add_argument("--max-iterations", type=int, default=None)
    p.set_defaults(handler=_cmd_cluster)

    p = sub.add_parser("repro", parents=[common], help="reproduce a published table or figure")
    p.add_argument("target", choices=REPRO_TARGETS)
    p.add_argument("--count", type=int, default=None, help="fig2: number of test vectors")
    p.set_defaults(handler=_cmd_repro)

    return parser


# ---------------------------------------------------------------- config


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    p = Path(path)
    if p.suffix.lower() == ".toml":
        try:
            import tomllib  # Python >= 3.11
        except ImportError:
            try:
                import tomli as tomllib
            except ImportError:
                raise ValueError("TOML configs need Python >= 3.11 or the tomli package") from None
        data = tomllib.loads(p.read_text(encoding="utf-8"))
    else:
        data = json.loads(p.read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ValueError(f"{path}: config must be a JSON/TOML object")
    return data


def _check_task(config: dict, invoked: str) -> None:
    task = config.get("task")
    if task is not None and task != invoked:
        raise ValueError(f"config task {task!r} does not match invoked command {invoked!r}")


def _parse_vector_arg(text: str) -> list[float]:
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens:
        raise ValueError(f"empty vector argument {text!r}")
    return [float(t) for t in tokens]


def _vectors_from(args, config: dict, key: str = "vectors"):
    """Test vectors from --vector flags, a --vectors file, or the config."""
    if getattr(args, "vector", None):
        return [as_vector(_parse_vector_arg(s)) for s in args.vector]
    path = getattr(args, "vectors", None) or None
    source = path if path is not None else config.get(key)
    if source is None:
        raise ValueError(f"no {key}: pass --vector/--vectors or set {key!r} in the config")
    return _load_vector_list(source)


def _load_vector_list(source):
    if isinstance(source, str):
        path = Path(source)
        if path.suffix.lower() == ".json":
            return load_vectors_json(path)
        return load_vectors_csv(path)
    if isinstance(source, list):
        if source and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in source):
            source = [source]
        return [as_vector(row) for row in source]
    raise ValueError(f"cannot read vectors from {source!r}")


def _noise_from(source) -> NoiseModel | None:
    if source is None or source == "none" or source == "off":
        return None
    if isinstance(source, NoiseModel):
        return source
    if isinstance(source, str):
        if source in NOISE_PRESETS:
            return noise_preset(source)
        path = Path(source)
        if path.exists():
            return _noise_from(json.loads(path.read_text(encoding="utf-8")))
        raise ValueError(f"unknown noise preset or missing file: {source!r}")
    if isinstance(source, dict):
        allowed = {"state_fidelity", "dark_count_fraction", "background_split"}
        unknown = set(source) - allowed
        if unknown:
            raise ValueError(f"unknown noise fields: {sorted(unknown)}")
        return NoiseModel(**source)
    raise ValueError(f"cannot build a noise model from {source!r}")


def _estimator_from(args, config: dict, default_mode="exact", default_shots=10_000,
                    default_noise=None) -> EstimatorConfig:
    est = dict(config.get("estimator", {}))
    mode = est.get("mode", default_mode)
    shots = est.get("shots", default_shots)
    seed = est.get("seed", 0)
    noise_source = config.get("noise", est.get("noise", default_noise))

    if args.exact and args.shots is not None:
        raise ValueError("choose one of --exact and --shots")
    if args.exact:
        mode = "exact"
    elif args.shots is not None:
        mode, shots = "sampled", args.shots
    if args.seed is not None:
        seed = args.seed
    if args.noise is not None:
        noise_source = args.noise
    return EstimatorConfig(mode=mode, shots=int(shots), seed=int(seed),
                           noise=_noise_from(noise_source))


def _out_dir(args, config: dict, required: bool = True) -> Path | None:
    out = args.out or config.get("output")
    if out is None:
        if required:
            raise ValueError("this command writes files: pass --out DIR (or 'output' in the config)")
        return None
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _plot_enabled(args, config: dict, default: bool) -> bool:
    if args.plot is not None:
        return bool(args.plot)
    return bool(config.get("emit_plot", default))


# ---------------------------------------------------------------- output


def _metadata(task: str, cfg: EstimatorConfig, extra: dict | None = None) -> dict:
    config = {
        "task": task,
        "estimator": {"mode": cfg.mode, "shots": cfg.shots, "seed": cfg.seed},
        "noise": cfg.noise.as_dict() if cfg.noise is not None else None,
    }
    if extra:
        config.update(extra)
    return {
        "artifact": "entdist",
        "version": __version__,
        "generator": GENERATOR_NAME,
        "seed": cfg.seed,
        "config": config,
    }


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return " ".join(f"{x:g}" for x in value)
    return str(value)


def _write_csv(path: Path, metadata: dict, fieldnames: list[str], rows: list[dict]) -> None:
    buf = io.StringIO()
    buf.write(f"# artifact: entdist {__version__}\n")
    buf.write(f"# generator: {metadata['generator']}\n")
    buf.write(f"# seed: {metadata['seed']}\n")
    buf.write(f"# config: {json.dumps(metadata['config'], sort_keys=True)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fieldnames)
    for row in rows:
        writer.writerow([_cell(row[f]) for f in fieldnames])
    path.write_text(buf.getvalue(), encoding="utf-8")


def _write_json(path: Path, metadata: dict, payload: dict) -> None:
    doc = {"metadata": metadata, **payload}
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


# ---------------------------------------------------------------- commands


def _cmd_estimate(args) -> int:
    config = _load_config(args.config)
    _check_task(config, "estimate")
    cfg = _estimator_from(args, config)
    u = _parse_vector_arg(args.u) if args.u else config.get("u")
    v = _parse_vector_arg(args.v) if args.v else config.get("v")
    if u is None or v is None:
        raise ValueError("estimate needs both vectors: --u/--v or config keys 'u'/'v'")
    payload = estimate_run(u, v, cfg)
    doc = {"metadata": _metadata("estimate", cfg), **payload}
    print(json.dumps(doc, indent=2, sort_keys=True))
    out = _out_dir(args, config, required=False)
    if out is not None:
        _write_json(out / "summary.json", doc["metadata"], payload)
    return 0


def _classification_rows(vectors, ref_a, ref_b, cfg):
    rows = []
    for i, u in enumerate(vectors):
        res = classify_two_cluster(u, ref_a, ref_b, cfg.derive(i))
        d = res.per_label_distance
        rows.append({
            "index": i,
            "vector": u.components.tolist(),
            f"distance_{ref_a.label}": d[ref_a.label],
            f"distance_{ref_b.label}": d[ref_b.label],
            "margin": res.margin,
            "assigned": res.assigned_label,
            "boundary_flag": res.boundary_flag,
        })
    return rows


def _cmd_classify(args) -> int:
    config = _load_config(args.config)
    _check_task(config, "classify")
    cfg = _estimator_from(args, config)
    ref_a, ref_b = _two_references(args, config)
    vectors = _vectors_from(args, config)
    rows = _classification_rows(vectors, ref_a, ref_b, cfg)

    out = _out_dir(args, config)
    meta = _metadata("classify", cfg, {
        "references": {ref_a.label: ref_a.vector.components.tolist(),
                       ref_b.label: ref_b.vector.components.tolist()},
        "n_vectors": len(vectors),
    })
    fields = ["index", "vector", f"distance_{ref_a.label}", f"distance_{ref_b.label}",
              "margin", "assigned", "boundary_flag"]
    _write_csv(out / "results.csv", meta, fields, rows)
    counts = {}
    for row in rows:
        counts[row["assigned"]] = counts.get(row["assigned"], 0) + 1
    _write_json(out / "summary.json", meta, {"rows": rows, "assigned_counts": counts})
    if _plot_enabled(args, config, default=False):
        _require_2d(vectors, "classification plot")
        text = _classification_svg(rows, ref_a, ref_b, meta)
        (out / "plot.svg").write_text(text, encoding="utf-8")
    return 0


def _two_references(args, config: dict) -> tuple[LabeledReference, LabeledReference]:
    refs = config.get("references")
    if getattr(args, "ref_a", None) or getattr(args, "ref_b", None):
        if not (args.ref_a and args.ref_b):
            raise ValueError("pass both --ref-a and --ref-b")
        return (
            LabeledReference(as_vector(_parse_vector_arg(args.ref_a)), "A"),
            LabeledReference(as_vector(_parse_vector_arg(args.ref_b)), "B"),
        )
    if isinstance(refs, list) and len(refs) == 2:
        made = [LabeledReference(as_vector(r["vector"]), str(r["label"])) for r in refs]
        return made[0], made[1]
    raise ValueError("classify needs two references: --ref-a/--ref-b or config 'references'")


def _training_from(config: dict) -> tuple[list[LabeledReference], LabeledReference | None]:
    spec = config.get("training")
    if spec is None:
        raise ValueError("nn needs a 'training' section in the config")
    if isinstance(spec, list):
        initial, added = spec, None
    elif isinstance(spec, dict):
        initial = spec.get("initial", [])
        added = spec.get("added")
    else:
        raise ValueError("'training' must be a list or an object with 'initial'/'added'")
    if not initial:
        raise ValueError("training set must be non-empty")
    refs = [LabeledReference(as_vector(t["vector"]), str(t["label"])) for t in initial]
    extra = None
    if added is not None:
        if isinstance(added, list):
            if len(added) != 1:
                raise ValueError("'added' must hold exactly one training vector")
            added = added[0]
        extra = LabeledReference(as_vector(added["vector"]), str(added["label"]))
    return refs, extra


def _cmd_nn(args) -> int:
    config = _load_config(args.config)
    _check_task(config, "nn")
    cfg = _estimator_from(args, config)
    training, added = _training_from(config)
    vectors = _vectors_from(args, config)
    out = _out_dir(args, config)
    meta = _metadata("nn", cfg, {
        "training": [{"label": t.label, "vector": t.vector.components.tolist()} for t in training],
        "added": ({"label": added.label, "vector": added.vector.components.tolist()}
                  if added else None),
        "n_vectors": len(vectors),
    })
    if added is None:
        rows = []
        for i, u in enumerate(vectors):
            res = nearest_neighbor_classify(u, training, cfg.derive(i))
            rows.append({
                "index": i,
                "vector": u.components.tolist(),
                "assigned": res.assigned_label,
                "margin": res.margin,
                "boundary_flag": res.boundary_flag,
            })
        _write_csv(out / "results.csv", meta,
                   ["index", "vector", "assigned", "margin", "boundary_flag"], rows)
        _write_json(out / "summary.json", meta, {"rows": rows})
        if _plot_enabled(args, config, default=False):
            _require_2d(vectors, "nearest-neighbor plot")
            text = _nn_phase_svg(vectors, [r["assigned"] for r in rows], training, (), meta,
                                 title="nearest neighbor")
            (out / "plot.svg").write_text(text, encoding="utf-8")
        return 0

    result = nn_run(vectors, training, added, cfg)
    _write_csv(out / "results.csv", meta,
               ["index", "vector", "label_before", "label_after", "changed"], result["rows"])
    _write_json(out / "summary.json", meta, result)
    if _plot_enabled(args, config, default=False):
        _require_2d(vectors, "nearest-neighbor plot")
        _write_nn_phase_plots(out, vectors, result, training, added, meta)
    return 0


def _cmd_cluster(args) -> int:
    config = _load_config(args.config)
    _check_task(config, "cluster")
    cfg = _estimator_from(args, config)
    vectors = _vectors_from(args, config)
    k = args.k if args.k is not None else int(config.get("k", 2))
    init = args.init if args.init is not None else config.get("init", cfg.seed)
    max_iter = (args.max_iterations if args.max_iterations is not None
                else int(config.get("max_iterations", 100)))
    out = _out_dir(args, config)
    meta = _metadata("cluster", cfg, {"k": k, "init": init, "max_iterations": max_iter,
                                      "n_vectors": len(vectors)})
    _run_cluster_and_write(out, vectors, k, init, cfg, max_iter, meta,
                           plot=_plot_enabled(args, config, default=False), names=())
    return 0


def _run_cluster_and_write(out, vectors, k, init, cfg, max_iter, meta, plot, names) -> None:
    state = cluster_run(vectors, k, init, cfg, max_iter)
    rows = [{
        "index": i,
        "name": names[i] if i < len(names) else str(i),
        "vector": v.components.tolist(),
        "initial_label": state.history[0][i],
        "final_label": state.labels[i],
    } for i, v in enumerate(vectors)]
    _write_csv(out / "results.csv", meta,
               ["index", "name", "vector", "initial_label", "final_label"], rows)
    _write_json(out / "summary.json", meta, {
        "converged": state.converged,
        "iterations": state.iteration,
        "history": [list(h) for h in state.history],
        "rows": rows,
    })
    if not state.converged:
        print(f"note: not converged after {state.iteration} rounds", file=sys.stderr)
    if plot:
        _require_2d(vectors, "clustering plot")
        points = [tuple(v.components.tolist()) for v in vectors]
        xlim, ylim = _square_limits(points)
        for r, labels in enumerate(state.history):
            text = cartesian_scatter_svg(
                points, list(labels), xlim, ylim, names=names,
                title=f"round {r}", metadata=meta,
            )
            (out / f"round_{r}.svg").write_text(text, encoding="utf-8")


def _cmd_repro(args) -> int:
    config = _load_config(args.config)
    _check_task(config, args.target)
    handler = {
        "table1": _repro_table,
        "table2": _repro_table,
        "fig2": _repro_fig2,
        "fig3": _repro_fig3,
        "figS1": _repro_figs1,
    }[args.target]
    return handler(args, config)


def _repro_table(args, config: dict) -> int:
    name = args.target
    cfg = _estimator_from(args, config, default_mode="sampled",
                          default_shots=TABLE_DEFAULT_SHOTS, default_noise=PAPER_PRESET)
    sampled_cfg = cfg if cfg.mode == "sampled" else None
    result = table_run(name, sampled_cfg)
    out = _out_dir(args, config)
    meta = _metadata(name, cfg, {"dataset": name,
                                 "sampled_column": sampled_cfg is not None})
    fields = ["index", "vector", "theory_diff", "computed_diff", "group",
              "matches_paper_theory"]
    if sampled_cfg is not None:
        fields += ["sampled_diff", "sampled_group"]
    rows = [{**r, "theory_diff": f"{r['theory_diff']:.2f}"} for r in result["rows"]]
    _write_csv(out / "results.csv", meta, fields, rows)
    _write_json(out / "summary.json", meta, result)
    status = "all rows match" if result["all_match_paper_theory"] else \
        f"rows off the printed two decimals: {result['mismatched_rows']}"
    print(f"{name}: {len(result['rows'])} rows; {status}")
    return 0


def _repro_fig2(args, config: dict) -> int:
    cfg = _estimator_from(args, config, default_mode="sampled",
                          default_shots=FIG2_DEFAULT_SHOTS, default_noise=PAPER_PRESET)
    count = args.count if args.count is not None else int(config.get("count", FIG2_DEFAULT_COUNT))
    vectors = None
    if config.get("vectors") is not None:
        vectors = _load_vector_list(config["vectors"])
    result = fig2_run(cfg, count=count, vectors=vectors)
    out = _out_dir(args, config)
    meta = _metadata("fig2", cfg, {"count": len(result["rows"])})
    fields = ["index", "x", "y", "norm", "angle", "exact_diff", "exact_label",
              "sampled_diff", "sampled_label", "misclassified"]
    _write_csv(out / "results.csv", meta, fields, result["rows"])
    _write_json(out / "summary.json", meta, result)
    if _plot_enabled(args, config, default=True):
        (out / "plot.svg").write_text(_fig2_svg(result, meta), encoding="utf-8")
    print(f"fig2: {len(result['rows'])} vectors, {result['misclassified_count']} misclassified "
          f"under noise (mean |error| {result['mean_abs_error']:.3f})")
    return 0


def _repro_fig3(args, config: dict) -> int:
    cfg = _estimator_from(args, config)
    out = _out_dir(args, config)
    demo = FIG3_DEMO
    meta = _metadata("fig3", cfg, {"dataset": "builtin-fig3-demo", "k": demo.k,
                                   "init": list(demo.initial_labels)})
    _run_cluster_and_write(out, demo.vectors(), demo.k, list(demo.initial_labels), cfg,
                           int(config.get("max_iterations", 100)), meta,
                           plot=_plot_enabled(args, config, default=True), names=demo.names)
    return 0


def _repro_figs1(args, config: dict) -> int:
    cfg = _estimator_from(args, config)
    out = _out_dir(args, config)
    demo = FIGS1_DEMO
    training = list(demo.initial_training)
    meta = _metadata("figS1", cfg, {"dataset": "builtin-figS1-demo"})
    result = nn_run(demo.vectors(), training, demo.added_training, cfg)
    for row, name in zip(result["rows"], demo.names):
        row["name"] = name
    _write_csv(out / "results.csv", meta,
               ["index", "name", "vector", "label_before", "label_after", "changed"],
               result["rows"])
    _write_json(out / "summary.json", meta, result)
    if _plot_enabled(args, config, default=True):
        _write_nn_phase_plots(out, demo.vectors(), result, training, demo.added_training,
                              meta, names=demo.names)
    changed = [result["rows"][i].get("name", i) for i in result["changed_indices"]]
    print(f"figS1: labels changed after the new training vector: {changed or 'none'}")
    return 0


# ---------------------------------------------------------------- plots


def _require_2d(vectors, what: str) -> None:
    if any(v.dimension != 2 for v in vectors):
        raise ValueError(f"{what} requires 2-D vectors")


def _square_limits(points, pad: float = 0.25):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    lo = min(min(xs), min(ys)) - pad
    hi = max(max(xs), max(ys)) + pad
    return (lo, hi), (lo, hi)


def _euclid(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def _bisector_segments(a, b, r_max: float):
    """Theory boundary D_A = D_B, clipped to the plotted quarter disk."""
    segments = contour_segments(
        lambda x, y: _euclid((x, y), a) - _euclid((x, y), b),
        (0.0, r_max), (0.0, r_max),
    )
    return [
        seg for seg in segments
        if math.hypot(*seg[0]) <= r_max and math.hypot(*seg[1]) <= r_max
    ]


def _fig2_svg(result: dict, metadata: dict) -> str:
    a = tuple(result["reference_a"])
    b = tuple(result["reference_b"])
    r_max = FIG2_NORM_RANGE[1]
    boundary = _bisector_segments(a, b, r_max)
    scale = max(
        (max(abs(r["exact_diff"]), abs(r["sampled_diff"])) for r in result["rows"]),
        default=1.0,
    ) or 1.0
    refs = [(a[0], a[1], "A"), (b[0], b[1], "B")]
    panels = []
    for key_diff, key_label, title in (
        ("exact_diff", "exact_label", "exact"),
        ("sampled_diff", "sampled_label", "sampled with noise"),
    ):
        panels.append({
            "title": title,
            "points": [(r["x"], r["y"], r[key_diff], r[key_label]) for r in result["rows"]],
            "fill_scale": scale,
            "labels": ["A", "B"],
            "references": refs,
            "boundary": boundary,
        })
    return polar_scatter_svg(panels, r_max, metadata=metadata)


def _classification_svg(rows, ref_a, ref_b, metadata: dict) -> str:
    a = tuple(ref_a.vector.components.tolist())
    b = tuple(ref_b.vector.components.tolist())
    points = [tuple(r["vector"]) for r in rows]
    xlim, ylim = _square_limits(points + [a, b])
    boundary = contour_segments(
        lambda x, y: _euclid((x, y), a) - _euclid((x, y), b), xlim, ylim
    )
    return cartesian_scatter_svg(
        points, [r["assigned"] for r in rows], xlim, ylim,
        references=[(a[0], a[1], ref_a.label), (b[0], b[1], ref_b.label)],
        boundary=boundary, title="two-cluster assignment", metadata=metadata,
    )


def _nn_boundary(training, xlim, ylim):
    """Piecewise boundary between the two label groups of the training set."""
    labels = sorted({t.label for t in training})
    if len(labels) != 2:
        return []
    first = [tuple(t.vector.components.tolist()) for t in training if t.label == labels[0]]
    second = [tuple(t.vector.components.tolist()) for t in training if t.label == labels[1]]

    def gap(x, y):
        p = (x, y)
        return min(_euclid(p, q) for q in first) - min(_euclid(p, q) for q in second)

    return contour_segments(gap, xlim, ylim)


def _nn_phase_svg(vectors, labels, training, names, metadata, title: str) -> str:
    points = [tuple(v.components.tolist()) for v in vectors]
    train_pts = [tuple(t.vector.components.tolist()) for t in training]
    xlim, ylim = _square_limits(points + train_pts)
    return cartesian_scatter_svg(
        points, labels, xlim, ylim,
        references=[(p[0], p[1], t.label) for p, t in zip(train_pts, training)],
        boundary=_nn_boundary(training, xlim, ylim),
        names=names, title=title, metadata=metadata,
    )


def _write_nn_phase_plots(out, vectors, result, training, added, metadata, names=()) -> None:
    _require_2d(vectors, "nearest-neighbor plot")
    before = [r["label_before"] for r in result["rows"]]
    after = [r["label_after"] for r in result["rows"]]
    (out / "phase_1.svg").write_text(
        _nn_phase_svg(vectors, before, training, names, metadata, "initial training set"),
        encoding="utf-8")
    (out / "phase_2.svg").write_text(
        _nn_phase_svg(vectors, after, list(training) + [added], names, metadata,
                      "after the new training vector"),
        encoding="utf-8")


if __name__ == "__main__":
    sys.exit(main())
