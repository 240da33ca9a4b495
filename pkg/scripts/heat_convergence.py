#!/usr/bin/env python3
"""Convergence study for the discretized propagator.

Prints a table of max-entry errors between the composed first-order kernel
and the exact diagonal evolution, doubling the step count each row, plus the
machine-precision residual of the closed-form kernel for reference.
"""

import argparse

import numpy as np

from pga.dynamics import build_hamiltonian, discretized_propagator, exact_propagator
from pga.qarith import make_context


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--h", type=lambda s: [float(x) for x in s.split(",")],
                    default=[0.0, 1.0, 1.0])
    ap.add_argument("--time", type=float, default=1.0)
    ap.add_argument("--doublings", type=int, default=6)
    args = ap.parse_args()

    ham = build_hamiltonian(make_context(args.p), args.h)
    exact = exact_propagator(ham, args.time)
    print(f"p={args.p} h={args.h} t={args.time}")
    print(f"energies: {np.round(ham.energies.real, 12).tolist()}")
    print(f"{'steps':>8} {'euler error':>14} {'ratio':>8} {'expm error':>12}")
    prev = None
    steps = 16
    for _ in range(args.doublings):
        eul = discretized_propagator(ham, args.time, steps, kernel="euler")
        exm = discretized_propagator(ham, args.time, steps, kernel="expm")
        err = float(max(abs(eul - exact)))
        err_exm = float(max(abs(exm - exact)))
        ratio = "" if prev is None else f"{err / prev:.4f}"
        print(f"{steps:>8} {err:>14.8f} {ratio:>8} {err_exm:>12.2e}")
        prev = err
        steps *= 2


if __name__ == "__main__":
    main()
