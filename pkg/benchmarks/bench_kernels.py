"""Compare the pure-Python kernel with the compiled kernel.

Runs the exact maximum-set search on a spread of instances with both
backends, checks they agree, and prints a timing table.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeat 5 --kind gp
"""

from __future__ import annotations

import argparse
import sys
import time

from gpvis import PropertyKind, all_pairs_distances, parse_graph_spec
from gpvis._kernel import fast, pure

INSTANCES = [
    ("double(path:8)", "mv"),
    ("double(cycle:8)", "mv"),
    ("double(cycle:9)", "mv"),
    ("double(cycle:10)", "mv"),
    ("double(cycle:10)", "gp"),
    ("myc(path:10)", "mv"),
    ("myc(cycle:10)", "mv"),
    ("myc(cycle:9)", "gp"),
    ("double(kminus:8)", "gp"),
    ("double(balloon:2)", "total"),
]


def run_backend(kernel, g, d, code, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = kernel.solve_max(g.n, g.adj, d.data, code)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return result, best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="timing repetitions per instance (best is kept)")
    ap.add_argument("--kind", choices=["mv", "outer", "total", "gp"],
                    help="only run instances of this property kind")
    args = ap.parse_args(argv)

    if fast is None:
        print("compiled kernel is not available; nothing to compare",
              file=sys.stderr)
        return 1

    rows = [("instance", "kind", "value", "nodes", "pure", "fast", "speedup")]
    for spec, kind_token in INSTANCES:
        if args.kind and kind_token != args.kind:
            continue
        g = parse_graph_spec(spec)
        d = all_pairs_distances(g)
        code = PropertyKind.from_token(kind_token).code
        res_pure, t_pure = run_backend(pure, g, d, code, args.repeat)
        res_fast, t_fast = run_backend(fast, g, d, code, args.repeat)
        if res_pure != res_fast:
            print(f"MISMATCH on {spec} {kind_token}: {res_pure} vs {res_fast}",
                  file=sys.stderr)
            return 1
        value, _, nodes, _ = res_pure
        rows.append((
            spec,
            kind_token,
            str(value),
            str(nodes),
            f"{t_pure * 1000:.1f}ms",
            f"{t_fast * 1000:.1f}ms",
            f"{t_pure / t_fast:.1f}x",
        ))

    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
