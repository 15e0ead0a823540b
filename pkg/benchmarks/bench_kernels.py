"""Compare compiled and pure-Python kernels.

Run with ``python benchmarks/bench_kernels.py``. Each kernel is timed on the
same inputs under both backends, and the outputs are checked to agree.
"""

from __future__ import annotations

import argparse
import random
import timeit

from a2web import kernels
from a2web.bijection import all_inputs, phi
from a2web.web_core import _framed


def face_inputs(n: int, k: int, limit: int):
    out = []
    for t in all_inputs(n, k)[:limit]:
        fr = _framed(phi(t, k))
        total = len(fr.vertex)
        nxt = [fr.cw(d ^ 1) for d in range(total)]
        labels, count = kernels.cycle_labels(nxt)
        wall = [d >= fr.nd for d in range(total)]
        out.append((nxt, labels, count, wall, [d ^ 1 for d in range(total)], labels[fr.corner_dart]))
    return out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--perm-size", type=int, default=200)
    args = ap.parse_args()

    rng = random.Random(1)
    perms = []
    for _ in range(50):
        p = list(range(1, args.perm_size + 1))
        rng.shuffle(p)
        perms.append(p)
    webs = face_inputs(5, 3, 60)

    cases = {
        "rs_insert": lambda: [kernels.rs_insert(p) for p in perms],
        "cycle_labels": lambda: [kernels.cycle_labels(w[0]) for w in webs],
        "dual_bfs": lambda: [kernels.dual_bfs(w[1], w[4], w[3], w[2], w[5]) for w in webs],
    }
    backends = ["python"] + (["compiled"] if kernels._compiled is not None else [])
    print(f"{'kernel':<14}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in cases.items():
        times, results = [], []
        for b in backends:
            kernels.use_backend(b)
            results.append(fn())
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
        if any(r != results[0] for r in results):
            raise SystemExit(f"{name}: backends disagree")
        line = f"{name:<14}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
