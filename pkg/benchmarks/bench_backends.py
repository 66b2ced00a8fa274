#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Each workload runs in a fresh subprocess with the backend pinned through
GROUPLAB_KERNELS, so both backends get identical, isolated conditions.
Outputs are compared to confirm the backends agree bit for bit before any
timing is reported.

Usage:
    python benchmarks/bench_backends.py            # standard workload set
    python benchmarks/bench_backends.py --full     # adds the S(6) stress case
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = [
    (
        "profile sweep (catalog phi)",
        """
import grouplab as gl
out = []
for text in ['C(24)', 'D(20)', 'S(5)', 'A(5)', 'E(5^3)', 'G375']:
    g = gl.build_group(gl.parse_spec(text))
    p = gl.profile(g)
    out.append((text, p.exponent, p.phi))
result = out
""",
    ),
    (
        "lattice S(5) [156 subgroups]",
        """
import grouplab as gl
lat = gl.all_subgroups(gl.build_group(gl.parse_spec('S(5)')))
result = [s.mask.hex() for s in lat]
""",
    ),
    (
        "lattice A(6) [501 subgroups]",
        """
import grouplab as gl
lat = gl.all_subgroups(gl.build_group(gl.parse_spec('A(6)')))
result = [s.mask.hex() for s in lat]
""",
    ),
    (
        "verify G375 [274 sections]",
        """
import grouplab as gl
g = gl.build_group(gl.parse_spec('G375'))
r = gl.verify_theorem(g).to_json_dict()
r.pop('elapsed_s')
result = r
""",
    ),
]

FULL_WORKLOADS = [
    (
        "lattice S(6) [1455 subgroups]",
        """
import grouplab as gl
lat = gl.all_subgroups(gl.build_group(gl.parse_spec('S(6)')))
result = [s.mask.hex() for s in lat]
""",
    ),
]


def run_workload(code: str, backend: str) -> tuple[float, str]:
    script = (
        "import json, time\n"
        "t0 = time.perf_counter()\n"
        + code.strip()
        + "\nelapsed = time.perf_counter() - t0\n"
        "print(json.dumps({'elapsed': elapsed, 'result': result}, sort_keys=True))\n"
    )
    env = dict(os.environ, GROUPLAB_KERNELS=backend)
    proc = subprocess.run(
        [sys.executable, "-c", script], capture_output=True, text=True, env=env
    )
    if proc.returncode != 0:
        raise RuntimeError(f"workload failed on backend {backend}:\n{proc.stderr}")
    payload = json.loads(proc.stdout)
    return payload["elapsed"], json.dumps(payload["result"], sort_keys=True)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include the S(6) stress case")
    args = parser.parse_args()

    try:
        from grouplab._kernels import load_backend

        load_backend("c")
    except ImportError:
        print("compiled backend not built; run `pip install -e . --no-build-isolation`")
        return 1

    workloads = WORKLOADS + (FULL_WORKLOADS if args.full else [])
    width = max(len(name) for name, _ in workloads)
    print(f"{'workload':<{width}}  {'compiled':>9}  {'pure':>9}  {'speedup':>8}")
    print("-" * (width + 32))
    for name, code in workloads:
        c_time, c_result = run_workload(code, "c")
        p_time, p_result = run_workload(code, "pure")
        if c_result != p_result:
            print(f"{name:<{width}}  BACKEND MISMATCH")
            return 1
        print(
            f"{name:<{width}}  {c_time:>8.3f}s  {p_time:>8.3f}s  {p_time / c_time:>7.1f}x"
        )
    print("\nbackends agree on every workload output")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
