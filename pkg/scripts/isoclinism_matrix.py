"""Which corpus pairs are related under each isoclinism mode, per q."""

import argparse
import itertools

from qtensor import builtin
from qtensor.catalog import DEFAULT_CORPUS
from qtensor.isoclinism import MODES, check


def classes(names, mode, q):
    """Partition ``names`` into classes of the relation (it is an equivalence on these inputs)."""
    out: list[list[str]] = []
    for n in names:
        for cls in out:
            if check(builtin(cls[0]), builtin(n), mode, q) is not None:
                cls.append(n)
                break
        else:
            out.append([n])
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--groups", default=",".join(DEFAULT_CORPUS))
    ap.add_argument("--q-list", default="0,1,2,3")
    ap.add_argument("--modes", default=",".join(MODES))
    ap.add_argument("--pairs", action="store_true", help="check every pair instead of class representatives")
    args = ap.parse_args()
    names = args.groups.split(",")
    for mode in args.modes.split(","):
        for q in map(int, args.q_list.split(",")):
            if args.pairs:
                rel = [f"{a}~{b}" for a, b in itertools.combinations(names, 2)
                       if check(builtin(a), builtin(b), mode, q) is not None]
                print(f"{mode:16s} q={q}: {' '.join(rel) or '-'}")
            else:
                cls = classes(names, mode, q)
                print(f"{mode:16s} q={q}: " + "  ".join("{" + ",".join(c) + "}" for c in cls))


if __name__ == "__main__":
    main()
