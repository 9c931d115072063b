"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import time

import numpy as np

from dpcomb import kernels
from dpcomb.regularized import example_potential


def best_of(fn, repeat):
    fn()  # warm-up, also triggers jit compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    x = rng.uniform(-3, 3, 200_000)
    z1 = rng.normal(size=(80, 20_000)) + 1j * rng.normal(size=(80, 20_000))
    z2 = rng.normal(size=(80, 20_000)) + 1j * rng.normal(size=(80, 20_000))
    pot = example_potential(0.2)
    nodes = np.asarray(pot.v(np.linspace(-1, 1, 2 * 1024 + 1)))
    energies = (0.1 * np.linspace(0.01, 3, 2000)) ** 2
    return {
        "cheb_u_pair n=200, 2e5 pts": lambda b: b.cheb_u_pair(200, x),
        "su11_chain 80 x 2e4": lambda b: b.su11_chain(z1, z2),
        "rk4_fundamental 1024 steps x 2000": lambda b: b.rk4_fundamental(nodes, energies, 2 / 1024),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = {"numpy": kernels.numpy_backend, "numba": kernels.numba_backend}
    if backends["numba"] is None:
        print("numba not installed; only the numpy fallback is timed")
        del backends["numba"]
    print(f"{'kernel':<36}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for label, fn in cases().items():
        t = {name: best_of(lambda: fn(b), args.repeat) for name, b in backends.items()}
        row = f"{label:<36}" + "".join(f"{t[name] * 1e3:>10.1f}ms" for name in backends)
        if "numba" in t:
            row += f"{t['numpy'] / t['numba']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
