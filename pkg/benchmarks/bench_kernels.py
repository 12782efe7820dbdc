"""Time the Morse boundary kernel on the compiled and pure-Python backends."""
import argparse
import timeit

from artin_morse import kernels
from artin_morse.catalog import matching_for

CASES = [("A", 10, 3), ("A", 12, 5), ("B", 10, 4), ("tA", 10, 4), ("tC", 10, 6)]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])
    print(f"{'case':<12}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for family, n, d in CASES:
        M = matching_for(family, n, d)
        dom, par = M.packed()
        times = []
        for b in backends:
            fn = lambda: kernels.morse_boundary(M.nbits, dom, par, backend=b)
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
        row = f"{family}{n} d={d}".ljust(12) + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
