"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Kernel-level timings call each module directly with cold caches; the
end-to-end rows run the library sweeps in a subprocess per backend.
"""

import argparse
import itertools
import os
import random
import subprocess
import sys
import time

from hdist import _pykernel

try:
    from hdist import _ckernel
except ImportError:
    _ckernel = None


def random_words(count, max_degree, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        deg = rng.randint(max_degree // 2, max_degree)
        parts = []
        while deg:
            p = rng.randint(1, min(deg, 12))
            parts.append(p)
            deg -= p
        out.append(tuple(parts))
    return out


def bench_normalize(k, words):
    k.clear_caches()
    t = time.perf_counter()
    for w in words:
        k.normalize_word(w)
    return time.perf_counter() - t


def bench_faces(k, n):
    codes = list(itertools.product((0, 1, 2), repeat=n))
    t = time.perf_counter()
    for c in codes:
        k.face_blocks(c)
    return time.perf_counter() - t


SWEEP = """
import time
from hdist import BACKEND
from hdist.faces import check_face_compatibility
from hdist.derivations import kristensen_kappa, kappa_squared, verify_well_defined, verify_derivation_property
t = time.perf_counter(); check_face_compatibility(9); a = time.perf_counter() - t
t = time.perf_counter(); verify_well_defined(kristensen_kappa(), 40); b = time.perf_counter() - t
t = time.perf_counter(); verify_derivation_property(kappa_squared(), -2, 16); c = time.perf_counter() - t
print(BACKEND, a, b, c)
"""


def end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["HDIST_PURE_PYTHON"] = "1"
    else:
        env.pop("HDIST_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
    name, *secs = out.stdout.split()
    return name, [float(s) for s in secs]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--words", type=int, default=3000)
    ap.add_argument("--degree", type=int, default=40)
    args = ap.parse_args()

    kernels = [_pykernel] + ([_ckernel] if _ckernel else [])
    if _ckernel is None:
        print("compiled kernel not built; only the pure-Python numbers are shown")
    words = random_words(args.words, args.degree)
    print(f"{'benchmark':<34}" + "".join(f"{k.NAME:>12}" for k in kernels))
    rows = [
        (f"normalize {args.words} words deg<={args.degree}", lambda k: bench_normalize(k, words)),
        ("face_blocks all codes n=9", lambda k: bench_faces(k, 9)),
    ]
    for label, fn in rows:
        times = [min(fn(k) for _ in range(args.repeat)) for k in kernels]
        print(f"{label:<34}" + "".join(f"{t:>11.4f}s" for t in times))

    print()
    print(f"{'end to end':<12}{'compat n=9':>12}{'kappa adem40':>14}{'kappa2 pairs16':>16}")
    for pure in ([True, False] if _ckernel else [True]):
        name, secs = end_to_end(pure)
        print(f"{name:<12}{secs[0]:>11.3f}s{secs[1]:>13.3f}s{secs[2]:>15.3f}s")


if __name__ == "__main__":
    main()
