"""Compare the compiled and pure-Python kernel backends.

Times the raw kernels on random exponent vectors and a few library
calls that lean on them, once per available backend.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from sympow import AmbientRing, kernels, power, primary_decomposition, symbolic_power


def _vectors(rng, count, nvars, top):
    return [tuple(rng.randint(0, top) for _ in range(nvars)) for _ in range(count)]


def cases():
    rng = random.Random(1)
    a = _vectors(rng, 120, 5, 6)
    b = _vectors(rng, 120, 5, 6)
    big = _vectors(rng, 4000, 5, 9)
    ring = AmbientRing.of("x,y,z,w,v")
    ideal = ring.ideal(_vectors(rng, 6, 5, 3))
    squarefree = ring.ideal([(1, 1, 0, 0, 0), (0, 1, 1, 0, 0), (0, 0, 1, 1, 0), (0, 0, 0, 1, 1), (1, 0, 0, 0, 1)])
    return {
        "minimalize(4000 vectors)": lambda: kernels.minimalize(big),
        "mul_all(120 x 120)": lambda: kernels.mul_all(a, b),
        "lcm_all(120 x 120)": lambda: kernels.lcm_all(a, b),
        "power(I, 4)": lambda: power(ideal, 4),
        "primary_decomposition(I^2)": lambda: primary_decomposition(power(ideal, 2)),
        "symbolic_power(5-cycle, 5)": lambda: symbolic_power(squarefree, 5),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = kernels.available_backends()
    table = {}
    for name in backends:
        kernels.set_backend(name)
        for label, fn in cases().items():
            fn()  # warm up
            table.setdefault(label, {})[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    width = max(map(len, table))
    header = f"{'case':<{width}}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += "  speedup"
    print(header)
    for label, row in table.items():
        line = f"{label:<{width}}  " + "  ".join(f"{row[b] * 1e3:8.2f}ms" for b in backends)
        if len(backends) == 2:
            line += f"  {row['python'] / row['cython']:6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
