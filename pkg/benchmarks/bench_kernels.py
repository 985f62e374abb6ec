"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the same workloads through both implementations and reports the
timings.  The transform-table sweep and the full-window inversion are the
loops that dominate real usage at the larger primes, which is what the
compiled extension exists for.

    python benchmarks/bench_kernels.py [--p 31] [--sweep-p 127]
"""

import argparse
import time

from zgf import kernels


def _nonzero(p):
    return [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]


def _inv(p, z):
    n_inv = pow((z[0] * z[0] + z[1] * z[1]) % p, p - 2, p)
    return z[0] * n_inv % p, (-z[1]) * n_inv % p


def bench_stream_sweep(impl, p, tail):
    # the per-point work behind a full transform table
    start = time.perf_counter()
    out = []
    for z in _nonzero(p):
        w = _inv(p, z)
        out.append(impl.stream_eval(p, [], [], tail, w[0], w[1], 1, 0))
    return time.perf_counter() - start, out


def bench_iffzt_window(impl, p):
    zs = _nonzero(p)
    z_re = [z[0] for z in zs]
    z_im = [z[1] for z in zs]
    # arbitrary deterministic table values
    v_re = [(a * b + 1) % p for a, b in zs]
    v_im = [(a + 2 * b) % p for a, b in zs]
    start = time.perf_counter()
    out = impl.iffzt_window(p, z_re, z_im, v_re, v_im)
    return time.perf_counter() - start, out


def bench_pow_table(impl, p, count):
    start = time.perf_counter()
    out = impl.gi_pow_table(p, 2, 3, count)
    return time.perf_counter() - start, out


def run_case(name, fn, *args):
    backends = kernels.backends()
    pure_time, pure_out = fn(backends["pure-python"], *args)
    row = f"{name:<38} pure {pure_time:>8.3f}s"
    if "compiled" in backends:
        comp_time, comp_out = fn(backends["compiled"], *args)
        assert comp_out == pure_out, f"{name}: backend results differ"
        row += f"   compiled {comp_time:>8.3f}s   speedup {pure_time / comp_time:>6.1f}x"
    print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--p", type=int, default=31, help="prime for the window inversion")
    parser.add_argument("--sweep-p", type=int, default=127, help="prime for the table sweep")
    args = parser.parse_args()

    print(f"kernel backends available: {', '.join(kernels.backends())}")
    p = args.sweep_p
    tail = [1]
    run_case(f"table sweep (step sequence, p={p})", bench_stream_sweep, p, tail)
    tail = [pow(3, k, p) for k in range(p - 1)]
    run_case(f"table sweep (long tail, p={p})", bench_stream_sweep, p, tail)
    run_case(f"full-window inversion (p={args.p})", bench_iffzt_window, args.p)
    run_case(f"power table (p={p}, 200000 entries)", bench_pow_table, p, 200_000)


if __name__ == "__main__":
    main()
