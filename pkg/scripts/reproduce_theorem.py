"""Compute H_1(J_k(Z)) by Smith normal form and compare with the closed form.

    python3 scripts/reproduce_theorem.py --kmax 16
"""
import argparse
import json
import time

from jenningslab import abelian


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--kmin", type=int, default=2)
    p.add_argument("--kmax", type=int, default=16)
    p.add_argument("--json", help="also write the per-k reports to this file")
    args = p.parse_args()

    t0 = time.perf_counter()
    rows, mismatches = [], 0
    for k in range(args.kmin, args.kmax + 1):
        rep = abelian.report(k)
        rows.append(rep)
        mismatches += not rep["matches_theorem"]
        flag = "ok" if rep["matches_theorem"] else "MISMATCH"
        print(f"k={k:3d}  {abelian.abelianization(k)!s:28}  {flag}  ({rep['runtime_ms']:.0f} ms)")
    print(f"{len(rows)} values of k, {mismatches} mismatches, {time.perf_counter() - t0:.2f} s total")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
