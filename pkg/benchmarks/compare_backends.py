"""Compare the two scalar backends on a representative verification load.

Runs the same corpus verification (generate + canonicalize + verify) in a
subprocess under FNOVIKOV_BACKEND=fraction and FNOVIKOV_BACKEND=gmpy2 and
prints the wall-clock time for each.

Usage:
    python3 benchmarks/compare_backends.py [--count N] [--seed S]
"""

import argparse
import os
import subprocess
import sys

WORKLOAD = """
import os, time
from fnovikov import generate_corpus, normalize_orientation, theorem_check
from fnovikov.scalars import BACKEND

count = int(os.environ["BENCH_COUNT"])
seed = int(os.environ["BENCH_SEED"])
start = time.monotonic()
ok = all(theorem_check(A, B, seed=31) for _, A, B in generate_corpus(seed, count))
elapsed = time.monotonic() - start
print(f"{BACKEND} backend: {count} instances in {elapsed:.2f}s (all pass: {ok})")
"""


def run(backend, count, seed):
    env = dict(os.environ)
    env["FNOVIKOV_BACKEND"] = backend
    env["BENCH_COUNT"] = str(count)
    env["BENCH_SEED"] = str(seed)
    result = subprocess.run(
        [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True
    )
    if result.returncode != 0:
        print(f"{backend} backend failed:\n{result.stderr}", file=sys.stderr)
        return False
    print(result.stdout, end="")
    return True


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=30, help="corpus size")
    parser.add_argument("--seed", type=int, default=2024, help="corpus seed")
    args = parser.parse_args()
    ok = True
    for backend in ("fraction", "gmpy2"):
        ok &= run(backend, args.count, args.seed)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
