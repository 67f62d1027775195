"""Compare the numba and pure-numpy kernels.

    python3 benchmarks/bench_kernels.py [--repeat R]

Each kernel is run once untimed so JIT compilation is excluded; the best
of R timed runs is reported.
"""

import argparse
import timeit

from diagseq import kernels as K

CASES = [
    ("partitions_array n=40", K.partitions_array_np, K.partitions_array_nb, (40,)),
    ("partitions_array n=50", K.partitions_array_np, K.partitions_array_nb, (50,)),
    ("diagonal_batch n=40", K.diagonal_batch_np, K.diagonal_batch_nb, (K.partitions_array_np(40),)),
    ("diagonal_batch n=50", K.diagonal_batch_np, K.diagonal_batch_nb, (K.partitions_array_np(50),)),
    ("bounded_rises 2,2,2,1,1 k=1", K.count_bounded_rises_np, K.count_bounded_rises_nb, ((2, 2, 2, 1, 1), 1)),
    ("bounded_rises 1^9 k=2", K.count_bounded_rises_np, K.count_bounded_rises_nb, ((1,) * 9, 2)),
]


def best(fn, args, repeat):
    fn(*args)
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if not K.NUMBA_AVAILABLE:
        print("numba is not installed; only the numpy column is meaningful")
    print(f"{'kernel':32} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for name, slow, fast, call_args in CASES:
        t_np = best(slow, call_args, args.repeat)
        t_nb = best(fast, call_args, args.repeat)
        print(f"{name:32} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
