#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Runs identical workloads in two subprocesses, one with DYNPLANAR_PURE=1
and one without, and reports wall times. Kernel selection happens at
import time, which is why each measurement needs its own process.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time

WORKLOADS = ("tables", "engine", "decomposition", "planarity")


def _fixture_edges(n: int, seed: int) -> list[tuple[int, int]]:
    """A deterministic planar-ish edge soup for the oracle workloads."""
    rng = random.Random(seed)
    edges = {(i, i + 1) for i in range(n - 1)}
    while len(edges) < 2 * n:
        a, b = rng.sample(range(n), 2)
        edges.add((a, b) if a < b else (b, a))
    return sorted(edges)


def run_workload(name: str, scale: int) -> float:
    from dynplanar.connectivity import ConnTables
    from dynplanar.engine import Engine
    from dynplanar.oracle import static_decomposition, static_planar

    t0 = time.perf_counter()
    if name == "tables":
        graphs = [_fixture_edges(48, s) for s in range(2)]
        for _ in range(scale):
            for g in graphs:
                ConnTables.from_edges(48, g)
    elif name == "engine":
        for seed in range(3):
            rng = random.Random(seed)
            eng = Engine(8)
            for _ in range(scale):
                edges = sorted(eng.graph.edges)
                if edges and rng.random() < 0.45:
                    eng.delete_edge(*edges[rng.randrange(len(edges))])
                else:
                    a, b = rng.sample(range(8), 2)
                    if not eng.graph.has_edge(a, b):
                        eng.insert_edge(a, b)
    elif name == "decomposition":
        graphs = [_fixture_edges(10, s) for s in range(4)]
        for _ in range(scale):
            for g in graphs:
                static_decomposition(10, g)
    else:
        graphs = [_fixture_edges(12, s) for s in range(4)]
        for _ in range(scale):
            for g in graphs:
                static_planar(12, g)
    return time.perf_counter() - t0


def child(name: str, scale: int) -> None:
    from dynplanar import connectivity
    from dynplanar.oracle import _decomp

    seconds = run_workload(name, scale)
    print(json.dumps({
        "seconds": seconds,
        "conn_compiled": connectivity.KERNEL_COMPILED,
        "oracle_compiled": _decomp.KERNEL_COMPILED,
    }))


def measure(name: str, scale: int, pure: bool) -> dict:
    env = dict(os.environ)
    env.pop("DYNPLANAR_PURE", None)
    if pure:
        env["DYNPLANAR_PURE"] = "1"
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__),
         "--child", name, "--scale", str(scale)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scale", type=int, default=200,
                    help="workload repetition factor")
    ap.add_argument("--child", choices=WORKLOADS,
                    help=argparse.SUPPRESS)
    ns = ap.parse_args(argv)

    if ns.child:
        child(ns.child, ns.scale)
        return 0

    print(f"{'workload':<16} {'compiled':>10} {'pure':>10} {'speedup':>9}")
    for name in WORKLOADS:
        fast = measure(name, ns.scale, pure=False)
        slow = measure(name, ns.scale, pure=True)
        if fast["conn_compiled"] and fast["oracle_compiled"]:
            note = ""
        else:
            note = "  (compiled kernels unavailable, fallback timed twice)"
        assert not slow["conn_compiled"] and not slow["oracle_compiled"]
        ratio = slow["seconds"] / fast["seconds"]
        print(f"{name:<16} {fast['seconds']:>9.3f}s {slow['seconds']:>9.3f}s"
              f" {ratio:>8.2f}x{note}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
