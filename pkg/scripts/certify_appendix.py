"""Grid-certify the Gamma_k closed forms and the composition theorem.

    python3 scripts/certify_appendix.py --kmin 5 --kmax 9
"""
import argparse

from jenningslab.gamma import certify


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--kmin", type=int, default=5)
    p.add_argument("--kmax", type=int, default=9)
    args = p.parse_args()

    failed = 0
    for k in range(args.kmin, args.kmax + 1):
        runs = [certify.certify_theorem(k)] + [certify.certify_closed_form(k, op) for op in certify.OPERATIONS]
        for res in runs:
            label = "theorem" if res.source == "composition theorem" else res.operation
            status = "ok" if res.ok else f"{len(res.failures)} FAILED"
            print(f"k={k} {label:10} {len(res.checks):3d} degrees on {res.grid_points:4d} points"
                  f"  {status}  ({res.runtime_ms:.0f} ms)")
            for c in res.failures:
                print(f"    x^{c.degree} ({c.mode}): {c.hypothesis}  vs oracle {c.oracle}")
            failed += not res.ok
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
