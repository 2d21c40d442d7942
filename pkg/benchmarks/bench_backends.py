"""Benchmark the compiled kernel backend against the pure-Python one.

Runs each kernel at a few sizes, reports best-of-repeats wall time and
the speedup ratio.  Exits cleanly (with a note) when the compiled
extension is not built, so this script is safe to run anywhere.

Usage: python3 benchmarks/bench_backends.py [--samples N] [--repeats K]
"""

import argparse
import time

from qtms_radar._kernels import available_backends, get_backend


def _best_of(repeats: int, fn) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=2_000_000,
                    help="largest kernel size to time (default 2e6)")
    ap.add_argument("--repeats", type=int, default=5,
                    help="repeats per measurement, best is kept (default 5)")
    args = ap.parse_args()

    names = available_backends()
    if "compiled" not in names:
        print("compiled backend not built; nothing to compare "
              "(run: pip install -e . --no-build-isolation)")
        return 0

    backends = {name: get_backend(name) for name in ("python", "compiled")}
    seed = 987654321
    sizes = [args.samples // 100, args.samples // 10, args.samples]

    print(f"{'kernel':<14} {'size':>10} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>8}")
    for n in sizes:
        rows = (
            ("u64_stream", lambda b, n=n: b.u64_stream(seed, 0, n)),
            ("normal_pairs", lambda b, n=n: b.normal_pairs(seed, 0, n)),
            ("exceed_count", lambda b, n=n: b.exceed_count(seed, 0, n, 1.5, 2.0)),
        )
        for label, call in rows:
            t = {name: _best_of(args.repeats, lambda b=backends[name]: call(b))
                 for name in ("python", "compiled")}
            ratio = t["python"] / t["compiled"] if t["compiled"] > 0 else float("inf")
            print(f"{label:<14} {n:>10} {t['python']:>12.4f} {t['compiled']:>13.4f} {ratio:>7.1f}x")

    # cross-checks: identical words, ulp-close floats, equal exceed counts
    w = [backends[n].u64_stream(seed, 0, 4096) for n in ("python", "compiled")]
    z = [backends[n].normal_pairs(seed, 0, 4096) for n in ("python", "compiled")]
    c = [backends[n].exceed_count(seed, 0, 100_000, 1.5, 2.0) for n in ("python", "compiled")]
    assert (w[0] == w[1]).all(), "u64 streams differ across backends"
    import numpy as np

    assert np.allclose(z[0], z[1], rtol=1e-12, atol=0.0), "normals differ beyond ulp"
    print(f"\ncross-check: u64 identical, normals ulp-close, "
          f"exceed counts {c[0]} vs {c[1]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
