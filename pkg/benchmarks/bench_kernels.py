"""Compare the pure-Python and compiled kernel backends.

Runs the GF(2) rank primitive on random matrices and the exact rank-width
search on small standard graphs, timing both implementations and checking
that they return identical results. Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from gslogic import generate
from gslogic._kernels import pure

try:
    from gslogic._kernels import _fast as fast
except ImportError:
    fast = None


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rank(repeat: int) -> list[tuple[str, float, float, object]]:
    rng = random.Random(7)
    cases = {
        "rank 48x48 x200": [
            [rng.getrandbits(48) for _ in range(48)] for _ in range(200)
        ],
        "rank 100x100 x50": [
            [rng.getrandbits(100) for _ in range(100)] for _ in range(50)
        ],
    }
    rows_out = []
    for label, batch in cases.items():
        ncols = int(label.split("x")[1].split()[0])

        def run(impl, batch=batch, ncols=ncols):
            return [impl.gf2_rank_rows(rows, ncols) for rows in batch]

        t_pure = _time(lambda: run(pure), repeat)
        t_fast = _time(lambda: run(fast), repeat) if fast else float("nan")
        if fast is not None and run(pure) != run(fast):
            raise AssertionError(f"backend mismatch on {label}")
        rows_out.append((label, t_pure, t_fast, None))
    return rows_out


def bench_search(repeat: int) -> list[tuple[str, float, float, object]]:
    cases = [
        ("rankwidth path(8), pruned", generate("path", 8), True),
        ("rankwidth grid(3), pruned", generate("grid", 3), True),
        ("rankwidth grid(3), unpruned", generate("grid", 3), False),
    ]
    rows_out = []
    for label, g, prune in cases:
        t_pure = _time(lambda: pure.rankwidth_search(g.adj, g.n, prune), repeat)
        if fast is not None:
            t_fast = _time(lambda: fast.rankwidth_search(g.adj, g.n, prune), repeat)
            got_p = pure.rankwidth_search(g.adj, g.n, prune)
            got_f = fast.rankwidth_search(g.adj, g.n, prune)
            if got_p != got_f:
                raise AssertionError(f"backend mismatch on {label}: {got_p} != {got_f}")
            result = got_f
        else:
            t_fast = float("nan")
            result = pure.rankwidth_search(g.adj, g.n, prune)
        rows_out.append((label, t_pure, t_fast, result[0]))
    return rows_out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3,
                    help="timing repetitions, best-of (default 3)")
    args = ap.parse_args()

    if fast is None:
        print("compiled backend not built; timing the pure backend only\n")

    table = bench_rank(args.repeat) + bench_search(args.repeat)
    width = max(len(r[0]) for r in table)
    print(f"{'case'.ljust(width)}  {'pure [s]':>10}  {'fast [s]':>10}  {'speedup':>8}")
    for label, t_pure, t_fast, _ in table:
        speed = t_pure / t_fast if t_fast == t_fast and t_fast > 0 else float("nan")
        print(f"{label.ljust(width)}  {t_pure:10.4f}  {t_fast:10.4f}  {speed:7.1f}x")


if __name__ == "__main__":
    main()
