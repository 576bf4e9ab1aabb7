"""Invariant table of the default corpus for q = 0..3, as markdown or JSON."""

import argparse
import json
import time

from qtensor import builtin, invariant_report
from qtensor.catalog import DEFAULT_CORPUS

COLUMNS = ("group", "q", "tensor_order", "nabla_order", "wedge_order", "m_q", "b0_q", "b0_hat_q",
           "z_wedge", "e_wedge_q", "z_q", "z_hat_q", "capable")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--groups", default=",".join(DEFAULT_CORPUS))
    ap.add_argument("--q-list", default="0,1,2,3")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = []
    for name in args.groups.split(","):
        for q in map(int, args.q_list.split(",")):
            t0 = time.perf_counter()
            r = invariant_report(builtin(name), q)
            r["seconds"] = round(time.perf_counter() - t0, 2)
            rows.append(r)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    cols = COLUMNS + ("seconds",)
    print("| " + " | ".join(cols) + " |")
    print("|" + "---|" * len(cols))
    for r in rows:
        print("| " + " | ".join(str(r[c]) for c in cols) + " |")


if __name__ == "__main__":
    main()
