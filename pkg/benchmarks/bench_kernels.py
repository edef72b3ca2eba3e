"""Time the numba and numpy kernel backends on MNIST-sized synthetic inputs.

    python benchmarks/bench_kernels.py [--rows 6000] [--repeat 3]

Prints one line per kernel with the best wall time of each backend and the
speedup. Inputs mimic one client of a 10-client split: 784 sparse features
(about 19% nonzero) and 10 classes.
"""
import argparse
import time

import numpy as np

from fedflip import kernels
from fedflip.dataset import ClientPartition
from fedflip.trees import bin_matrix, pack_steps, softmax_grad_hess
from fedflip.trees.ensemble import boost_local, empty_ensemble, tree_preset


def synthetic(n, seed=0):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(n, 784)).astype(np.float32)
    X[rng.random((n, 784)) < 0.81] = 0.0
    y = rng.integers(0, 10, n)
    return X, y


def best_of(fn, repeat):
    fn()  # warm-up (and numba compilation)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(X, y, backend):
    bm = bin_matrix(X, 32)
    n, F = bm.shape
    g, h = softmax_grad_hess(np.zeros((n, 10)), y)
    g0, h0 = g[:, 0].copy(), h[:, 0].copy()
    use_row = np.random.default_rng(1).random(n) < 0.97
    feats = np.arange(F, dtype=np.int64)
    slot = np.zeros(n, dtype=np.int64)

    part = ClientPartition(0, np.arange(n), X, y, y.copy())
    spec = tree_preset("xgb")
    steps = boost_local(spec, empty_ensemble(spec), part, 0)
    packed = pack_steps(steps * 10, spec.eta, 10)

    W = np.zeros((784, 10))
    b = np.zeros(10)
    order = np.random.default_rng(2).permutation(n)
    Xf = X.astype(np.float64)

    def epoch():
        W[:] = 0.0
        b[:] = 0.0
        backend.linear_epoch(Xf, y, order, W, b, np.zeros_like(W), np.zeros_like(b),
                             0.01, 0.9, 1e-4, 20, False)

    return {
        "build_histograms": lambda: backend.build_histograms(
            bm.row_ptr, bm.col, bm.code, slot, g0, h0, np.ones(F, bool), 1, F, bm.n_bins),
        "grow_tree depth 6": lambda: backend.grow_tree(
            bm.bins, bm.row_ptr, bm.col, bm.code, g0, h0, use_row, feats, 6, 8.0, 4.0, 1.0, bm.n_bins),
        "predict_margins 100 trees": lambda: backend.predict_margins(X, *packed, 10),
        "linear_epoch (mlr)": epoch,
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=6000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    X, y = synthetic(args.rows)
    try:
        backends = {"numba": kernels.get_backend("numba")}
    except ImportError:
        backends = {}
    backends["numpy"] = kernels.get_backend("numpy")
    results = {name: {k: best_of(fn, args.repeat) for k, fn in cases(X, y, be).items()}
               for name, be in backends.items()}
    print(f"{'kernel':28s} {'numba s':>10s} {'numpy s':>10s} {'speedup':>8s}")
    for k in results["numpy"]:
        t_np = results["numpy"][k]
        t_nb = results.get("numba", {}).get(k)
        nb = f"{t_nb:10.4f}" if t_nb is not None else f"{'n/a':>10s}"
        sp = f"{t_np / t_nb:7.1f}x" if t_nb else f"{'':>8s}"
        print(f"{k:28s} {nb} {t_np:10.4f} {sp}")


if __name__ == "__main__":
    main()
