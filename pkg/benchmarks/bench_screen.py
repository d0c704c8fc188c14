"""Benchmark the screening backends against each other.

Runs the compiled kernel and the batched-numpy fallback over the same mask
ranges, checks they return identical results, and reports throughput.

    python3 benchmarks/bench_screen.py [--full]

--full sweeps all of n = 7 with both backends (~15 s); the default keeps the
pure-python side to a 2^18 slice.
"""

import argparse
import sys
import time

from oddgirth import _screen_py

try:
    from oddgirth import _screen as _screen_ext
except ImportError:
    _screen_ext = None


def _run(fn, n, lo, hi):
    t0 = time.monotonic()
    examined, hits = fn(n, lo, hi)
    dt = time.monotonic() - t0
    return examined, hits, dt


def bench(n, lo, hi):
    masks = hi - lo
    print("n=%d, masks [%d, %d): %d graphs" % (n, lo, hi, masks))
    results = {}
    for name, mod in (("compiled", _screen_ext), ("pure", _screen_py)):
        if mod is None:
            print("  %-8s unavailable (extension not built)" % name)
            continue
        examined, hits, dt = _run(mod.screen_range, n, lo, hi)
        results[name] = (examined, hits)
        print(
            "  %-8s %8.3f s   %9.0f masks/s   (%d connected, %d hypothesis-met)"
            % (name, dt, masks / dt, examined, len(hits))
        )
    if len(results) == 2 and results["compiled"] != results["pure"]:
        print("  MISMATCH between backends", file=sys.stderr)
        return False
    return True


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--full", action="store_true",
                    help="run the pure backend over all of n=7 too")
    args = ap.parse_args()

    ok = True
    for n in (5, 6):
        total = 1 << (n * (n - 1) // 2)
        ok &= bench(n, 0, total)
    ok &= bench(7, 0, (1 << 21) if args.full else (1 << 18))
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
