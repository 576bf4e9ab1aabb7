"""Run the verification suites and print per-statement counts and times."""

import argparse
import collections

from qtensor.catalog import DEFAULT_CORPUS
from qtensor.harness import REGISTRY, HarnessConfig, registry_complete, run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suites", default="lemma,theorem,oracle")
    ap.add_argument("--extended", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    cfg = HarnessConfig(corpus=DEFAULT_CORPUS, extended=args.extended, jobs=args.jobs)
    reports = run_all(cfg, tuple(args.suites.split(",")))
    for r in reports:
        stats = collections.defaultdict(lambda: collections.Counter())
        secs = collections.Counter()
        for it in r.items:
            stats[it.statement][it.status] += 1
            secs[it.statement] += it.wall_time
        print(f"== {r.suite}: {r.counts()}")
        for sid, c in stats.items():
            print(f"  {sid:40s} {dict(c)}  {secs[sid]:.2f}s  {REGISTRY[sid][1]}")
    missing = registry_complete(reports)
    if missing and len(reports) == 3:
        print("unexercised:", missing)


if __name__ == "__main__":
    main()
