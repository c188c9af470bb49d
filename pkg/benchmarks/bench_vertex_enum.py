"""Time vertex enumeration of CK(n) on each available kernel backend.

    python3 benchmarks/bench_vertex_enum.py --n 5 6 --repeat 3
"""
import argparse
import time

from composihedra.hull import backend, enumerate_vertices
from composihedra.realization import composihedron_hrep, composihedron_vrep


def bench(n, name, repeat):
    h = composihedron_hrep(n)
    best = float("inf")
    with backend.forced(name):
        for _ in range(repeat):
            t0 = time.perf_counter()
            v = enumerate_vertices(h)
            best = min(best, time.perf_counter() - t0)
    assert v.point_set() == composihedron_vrep(n).point_set()
    return best, len(v)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = backend.available()
    print(f"{'n':>3} {'vertices':>9} " + " ".join(f"{b:>10}" for b in names) + "   speedup")
    for n in args.n:
        times = {}
        for b in names:
            times[b], count = bench(n, b, args.repeat)
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "       -"
        print(f"{n:>3} {count:>9} " + " ".join(f"{times[b]:>9.4f}s" for b in names) + "  " + speed)


if __name__ == "__main__":
    main()
