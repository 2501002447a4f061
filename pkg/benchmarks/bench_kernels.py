"""Time the compiled kernels against the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from countlab import kernels


def cases(rng):
    x = rng.normal(size=(50 * 36, 10))
    g, b = np.ones(10), np.zeros(10)
    _, xhat, inv = kernels.get_backend("python").layer_norm_forward(x, g, b, 1e-5)
    logits = rng.normal(size=(36 * 50, 36))
    y = kernels.get_backend("python").softmax_forward(logits)
    pred = rng.normal(size=(400 * 100, 10))
    target = np.round(pred)
    colors = rng.integers(0, 10, size=81)
    n = 2048 * 2048
    p, grad, m, v = (rng.normal(size=n) for _ in range(4))
    v = np.abs(v)
    return {
        "layer_norm_forward": lambda k: k.layer_norm_forward(x, g, b, 1e-5),
        "layer_norm_backward": lambda k: k.layer_norm_backward(x, xhat, inv, g),
        "softmax_forward": lambda k: k.softmax_forward(logits),
        "softmax_backward": lambda k: k.softmax_backward(y, logits),
        "round_half_away": lambda k: k.round_half_away(pred),
        "grid_accuracy": lambda k: k.grid_accuracy(pred, target),
        "iterative_count": lambda k: k.iterative_count(colors),
        "adam_update_4M": lambda k: k.adam_update(p, grad, m, v, 0.9, 0.999, 1e-7, 0.5, 1e-8),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.available_backends()
    funcs = cases(np.random.default_rng(0))
    print(f"{'kernel':<22}" + "".join(f"{b + ' (us)':>16}" for b in backends) + f"{'python/cython':>15}")
    for name, f in funcs.items():
        times = []
        for b in backends:
            mod = kernels.get_backend(b)
            t = timeit.Timer(lambda: f(mod))
            n, _ = t.autorange()
            times.append(min(t.repeat(args.repeat, n)) / n * 1e6)
        by = dict(zip(backends, times))
        speed = f"{by['python'] / by['cython']:>9.1f}x" if "cython" in by else ""
        print(f"{name:<22}" + "".join(f"{t:>16.1f}" for t in times) + speed)


if __name__ == "__main__":
    main()
