"""Benchmark the compiled kernel against the pure-Python fallback on
representative Groebner basis computations.

Run:  python3 benchmarks/bench_kernel.py
"""

from __future__ import annotations

import time

from bel.bei import binomial_edge_ideal
from bel.graphs import Graph, net_graph
from bel.kernel import implementations


CASES = [
    ("path(6)", Graph.path(6)),
    ("cycle(6)", Graph.cycle(6)),
    ("star(5)", Graph.star(5)),
    ("complete(5)", Graph.complete(5)),
    ("net", net_graph()),
    ("net^2", None),  # square of the net edge ideal, built below
]


def systems():
    for name, G in CASES:
        if name == "net^2":
            I = binomial_edge_ideal(net_graph()).power(2)
        else:
            I = binomial_edge_ideal(G)
        yield name, [g.terms for g in I.gens], I.ring.nvars


def main():
    impls = implementations()
    print(f"kernels: {', '.join(sorted(impls))}")
    header = f"{'case':<14}" + "".join(f"{name:>12}" for name in sorted(impls)) + f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for case, gens, nvars in systems():
        times = {}
        results = {}
        for name, impl in sorted(impls.items()):
            t0 = time.perf_counter()
            results[name] = impl.buchberger(gens, nvars)
            times[name] = time.perf_counter() - t0
        assert len({tuple(map(tuple, r)) for r in results.values()}) == 1, (
            f"kernel outputs differ on {case}"
        )
        row = f"{case:<14}" + "".join(f"{times[n]:>11.3f}s" for n in sorted(impls))
        if "cython" in times and "python" in times and times["cython"] > 0:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
