"""Time the compiled tree kernel against the numpy fallback.

    python benchmarks/bench_tree.py [--n 500] [--d 100] [--repeat 3]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from soiltab import _tree_py, tree


def _best_of(fn, repeat):
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=500)
    ap.add_argument("--d", type=int, default=100)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--trees", type=int, default=20, help="trees in the forest timing")
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    X = rng.normal(size=(args.n, args.d))
    y = X[:, 0] - 2 * X[:, 1] ** 2 + rng.normal(size=args.n)
    g, h = -y, np.ones(args.n)
    idx = np.arange(args.n, dtype=np.intp)
    feats = np.arange(args.d, dtype=np.intp)
    build_args = (X, g, h, idx, feats, 30, 2, 1, 0.0, 0.0, 0.0, 0.0, args.d, 0)

    print(f"tree backend in use: {tree.BACKEND}; data {args.n} x {args.d}")
    rows = [("python", _tree_py)]
    if tree.BACKEND == "cython":
        from soiltab import _tree_ext

        rows.insert(0, ("cython", _tree_ext))
    results = {}
    for name, mod in rows:
        t_build, out = _best_of(lambda: mod.build_tree(*build_args), args.repeat)
        t_pred, _ = _best_of(lambda: mod.predict_tree(X, *out[:5]), args.repeat)
        t_forest, _ = _best_of(
            lambda: [mod.build_tree(X, g, h, rng_i.integers(0, args.n, args.n).astype(np.intp), feats,
                                    30, 2, 1, 0.0, 0.0, 0.0, 0.0, max(1, int(0.8 * args.d)), s)
                     for s, rng_i in enumerate(np.random.default_rng(i) for i in range(args.trees))],
            1)
        results[name] = out
        print(f"{name:>7}: build {t_build * 1e3:9.2f} ms  predict {t_pred * 1e3:8.2f} ms  "
              f"forest({args.trees}) {t_forest:7.3f} s  nodes {len(out[0])}")
    if len(results) == 2:
        same = all(np.asarray(a).tobytes() == np.asarray(b).tobytes()
                   for a, b in zip(results["cython"], results["python"]))
        print(f"identical trees: {same}")


if __name__ == "__main__":
    main()
