"""Benchmark the compiled kernel against the pure-Python fallback.

Runs three synthetic workloads, one per kernel entry point, in two child
processes (the backend is chosen at import time, so each child pins one via
ELPMEND_PURE) and prints a comparison table with speedups.

Usage, from the repository root after installing the package:

    python3 benchmarks/bench_kernel.py
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
import time

RUNS = 3


def _guess_heavy_program():
    """Eight mutually exclusive atom pairs: 65536 guesses to scan."""
    from elpmend.model import parse_program

    lines = []
    for i in range(8):
        lines.append(f"x{i} :- not y{i}.")
        lines.append(f"y{i} :- not x{i}.")
    return parse_program("\n".join(lines) + "\n")


def _fact_sweep_encoding():
    """A derivation chain plus a poison pair, swept under 4096 fact sets."""
    from elpmend.model import Literal, parse_program
    from elpmend.semantics import Encoding

    lines = [f"c{i + 1} :- c{i}." for i in range(13)]
    lines.append("-c13 :- c11.")
    enc = Encoding(parse_program("\n".join(lines) + "\n"))
    seed_bits = [enc.literal_bit(Literal(f"c{i}")) for i in range(12)]
    masks = []
    for bits in range(1 << 12):
        m = 0
        for j, bit in enumerate(seed_bits):
            if bits >> j & 1:
                m |= 1 << bit
        masks.append(m)
    return enc, masks


def _uniform_session():
    """A clean ten-rule program whose body atoms give 3^10 fact combinations."""
    from elpmend.model import parse_program
    from elpmend.session import Session

    lines = [f"g{i} :- s{i}, -s{(i + 1) % 10}." for i in range(10)]
    session = Session(parse_program("\n".join(lines) + "\n"))
    assert session.status == "clean"
    return session


def _time(fn) -> float:
    best = float("inf")
    for _ in range(RUNS):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_worker() -> None:
    from elpmend import kernel
    from elpmend.semantics import answer_sets

    results: dict[str, dict[str, float | int]] = {}

    p = _guess_heavy_program()
    res = answer_sets(p)
    results["answer_set_scan"] = {
        "seconds": _time(lambda: answer_sets(p)),
        "metric": len(res.sets),
    }

    enc, masks = _fact_sweep_encoding()

    def sweep():
        return kernel.facts_scan(
            enc.heads, enc.pos_masks, enc.neg_masks, enc.neg_universe, enc.evens, masks, 1 << 30
        )

    scanned, failures, truncated = sweep()
    assert scanned == len(masks) and not truncated
    results["facts_scan"] = {"seconds": _time(sweep), "metric": len(failures)}

    session = _uniform_session()
    report = session.check_uniform()
    assert report.exhaustive and report.ok
    results["uniform_scan"] = {
        "seconds": _time(session.check_uniform),
        "metric": report.scanned,
    }

    print(json.dumps({"backend": kernel.BACKEND, "results": results}))


def run_comparison() -> int:
    rows: dict[str, dict] = {}
    for pure in ("0", "1"):
        env = dict(os.environ, ELPMEND_PURE=pure)
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--worker"],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        rows[pure] = json.loads(out.stdout)
    compiled, pure = rows["0"], rows["1"]
    if compiled["backend"] == pure["backend"]:
        print("compiled backend unavailable; pure-Python timings only")
        for name, cell in pure["results"].items():
            print(f"  {name:16s} {cell['seconds'] * 1000:9.1f} ms  (metric {cell['metric']})")
        return 0
    print(f"{'workload':16s} {'compiled':>12s} {'pure':>12s} {'speedup':>9s}  metric")
    for name, cell in compiled["results"].items():
        fast, slow = cell["seconds"], pure["results"][name]["seconds"]
        print(
            f"{name:16s} {fast * 1000:9.1f} ms {slow * 1000:9.1f} ms "
            f"{slow / fast:8.1f}x  {cell['metric']}"
        )
    return 0


if __name__ == "__main__":
    if "--worker" in sys.argv:
        run_worker()
    else:
        sys.exit(run_comparison())
