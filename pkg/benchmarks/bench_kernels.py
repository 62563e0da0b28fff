"""Compare the compiled kernels against the pure-numpy fallback.

Times the three table builders on each backend directly, then runs the
x = 2 partial-sum identity end to end in a subprocess per backend (the
backend is fixed at import time, so a fresh interpreter is the honest way
to measure it).

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --spf-limit 2000000 --skip-end-to-end
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from unitring.kernels import fallback

try:
    from unitring.kernels import _native as native
except ImportError:
    native = None

END_TO_END = """
import time
from unitring.series import SummationConfig, hardy_identity_check
t0 = time.perf_counter()
report = hardy_identity_check(2.0, SummationConfig(term_count={n}, prime_limit=100))
print(f"{{time.perf_counter() - t0:.3f}} {{report.abs_error:.3e}}")
"""


def best_of(repeat, fn, *args):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_backend(mod, spf_limit, values_limit, repeat):
    rows = {}
    rows["build_spf"], spf = best_of(repeat, mod.build_spf, spf_limit)
    rows["split_tables"], (comp, cof) = best_of(repeat, mod.split_tables, spf, values_limit)
    ppval = np.ones(values_limit + 1, dtype=np.complex128)
    is_prime_power = cof == 1
    is_prime_power[:2] = False
    ppval[is_prime_power] = 2.0
    rows["multiplicative_values"], vals = best_of(
        repeat, mod.multiplicative_values, ppval, comp, cof
    )
    assert vals[12] == 4.0  # 2^omega(12)
    return rows


def end_to_end(backend, n):
    env = dict(os.environ, UNITRING_KERNELS=backend)
    proc = subprocess.run(
        [sys.executable, "-c", END_TO_END.format(n=n)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    seconds, abs_error = proc.stdout.split()
    return float(seconds), float(abs_error)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--spf-limit", type=int, default=10_000_000)
    parser.add_argument("--values-limit", type=int, default=1_000_000)
    parser.add_argument("--end-to-end-terms", type=int, default=1_000_000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--skip-end-to-end", action="store_true")
    args = parser.parse_args(argv)

    if native is None:
        print("compiled extension not built; timing the fallback only", file=sys.stderr)

    results = {"fallback": bench_backend(fallback, args.spf_limit, args.values_limit, args.repeat)}
    if native is not None:
        results["native"] = bench_backend(native, args.spf_limit, args.values_limit, args.repeat)

    if not args.skip_end_to_end:
        for name in results:
            seconds, abs_error = end_to_end(name, args.end_to_end_terms)
            results[name]["end_to_end_x2"] = seconds
            if abs_error > 1e-3:
                print(f"warning: {name} end-to-end error {abs_error:.3e}", file=sys.stderr)

    sizes = {
        "build_spf": f"limit {args.spf_limit:,}",
        "split_tables": f"n {args.values_limit:,}",
        "multiplicative_values": f"n {args.values_limit:,}",
        "end_to_end_x2": f"N {args.end_to_end_terms:,}",
    }
    names = list(results["fallback"])
    print(f"{'kernel':<22} {'size':>16} {'fallback':>10}", end="")
    if "native" in results:
        print(f" {'native':>10} {'speedup':>8}")
    else:
        print()
    for row in names:
        line = f"{row:<22} {sizes[row]:>16} {results['fallback'][row]:>9.3f}s"
        if "native" in results:
            ratio = results["fallback"][row] / results["native"][row]
            line += f" {results['native'][row]:>9.3f}s {ratio:>7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
