"""Euler brick and near-miss census for a range of limits, with timings."""
import argparse
import time

from ratcuboid.search import SearchConfig, enumerate_euler_bricks, verify_no_perfect

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--limits", type=int, nargs="+", default=[300, 697, 1000, 2000])
ap.add_argument("--shards", type=int, default=1)
args = ap.parse_args()

print(f"{'limit':>6} {'bricks':>7} {'primitive':>9} {'near':>5} {'perfect':>7} {'sec':>7}")
for limit in args.limits:
    t0 = time.perf_counter()
    cfg = SearchConfig(limit, shards=args.shards)
    bricks = enumerate_euler_bricks(cfg)
    prim = enumerate_euler_bricks(SearchConfig(limit, primitive_only=True, shards=args.shards))
    rep = verify_no_perfect(cfg)
    dt = time.perf_counter() - t0
    print(f"{limit:>6} {len(bricks):>7} {len(prim):>9} {rep.total_near_misses:>5} {len(rep.perfect):>7} {dt:>7.2f}")
