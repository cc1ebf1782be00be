"""Schur positivity and surjection witnesses over all pairs of a given total.

    python3 demos/schur_sweep.py [n] [m] [total]
"""
import sys

from fusionrel.schur import sweep

args = [int(x) for x in sys.argv[1:]]
n, m, total = args + [2, 1, 4][len(args):]

for v in sweep(n, m, total, 3, diagnostic=True):
    mark = "pass" if v.passed else ("fail" if v.passed is False else "n/a ")
    print(f"{mark} ell={tuple(v.pair.ell)} r={tuple(v.pair.r)} dominant={v.dominates} "
          f"positive={v.schur_positive} witness={v.witness}")
