"""Brute-force cuboid search over integer edges up to a limit.

Faces are found through a "leg graph": ``x -- y`` when ``x^2 + y^2`` is a
perfect square.  Euler bricks are triangles in that graph; near misses need
only two face edges.  Work is sharded by the smallest edge (stride ``shards``)
and merged by sorting, so the output does not depend on the shard count.
"""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .arith import is_square
from .cuboid import Tag, classify, cuboid_from_edges

CSV_HEADER = ["a", "b", "d", "c2", "e2", "f2", "g2", "class"]


@dataclass(frozen=True)
class SearchConfig:
    limit: int
    require_odd_g2: bool = False
    primitive_only: bool = False
    shards: int = 1

    def __post_init__(self):
        if self.limit < 1:
            raise ValueError("limit must be >= 1")
        if self.shards < 1:
            raise ValueError("shards must be >= 1")


@dataclass(frozen=True, order=True)
class SearchHit:
    g2: int
    a: int
    b: int
    d: int
    tag: str = field(compare=False)
    status: tuple = field(compare=False)  # (c, e, f, g) perfect-square flags

    @property
    def c2(self) -> int:
        return self.a ** 2 + self.b ** 2

    @property
    def e2(self) -> int:
        return self.a ** 2 + self.d ** 2

    @property
    def f2(self) -> int:
        return self.b ** 2 + self.d ** 2

    def row(self) -> list:
        return [self.a, self.b, self.d, self.c2, self.e2, self.f2, self.g2, self.tag]


def make_hit(a: int, b: int, d: int) -> SearchHit:
    a, b, d = sorted((a, b, d))
    cls = classify(cuboid_from_edges(a, b, d))
    st = cls.status
    return SearchHit(a * a + b * b + d * d, a, b, d, cls.tag.value, (st["c"], st["e"], st["f"], st["g"]))


@lru_cache(maxsize=8)
def leg_graph(limit: int) -> tuple[frozenset, ...]:
    """``graph[x]`` = all ``y <= limit`` with ``x^2 + y^2`` square (Euclid enumeration)."""
    adj: list[set] = [set() for _ in range(limit + 1)]
    m = 2
    while 2 * m - 1 <= limit:
        for n in range(1, m):
            if (m - n) % 2 == 0 or math.gcd(m, n) != 1:
                continue
            x, y = m * m - n * n, 2 * m * n
            if min(x, y) > limit:
                continue
            k = 1
            while k * x <= limit and k * y <= limit:
                adj[k * x].add(k * y)
                adj[k * y].add(k * x)
                k += 1
        m += 1
    return tuple(frozenset(s) for s in adj)


def _keep(cfg: SearchConfig, a: int, b: int, d: int) -> bool:
    if cfg.primitive_only and math.gcd(a, math.gcd(b, d)) != 1:
        return False
    if cfg.require_odd_g2 and (a * a + b * b + d * d) % 2 == 0:
        return False
    return True


def _brick_shard(args) -> list[SearchHit]:
    cfg, shard = args
    g = leg_graph(cfg.limit)
    hits = []
    for a in range(1 + shard, cfg.limit + 1, cfg.shards):
        larger = sorted(y for y in g[a] if y > a)
        for i, b in enumerate(larger):
            gb = g[b]
            for d in larger[i + 1:]:
                if d in gb and _keep(cfg, a, b, d):
                    hits.append(make_hit(a, b, d))
    return hits


def _near_shard(args) -> list[SearchHit]:
    cfg, shard = args
    g = leg_graph(cfg.limit)
    seen = set()
    for x in range(1 + shard, cfg.limit + 1, cfg.shards):
        nbrs = sorted(g[x])
        for i, y in enumerate(nbrs):
            for z in nbrs[i + 1:]:
                key = tuple(sorted((x, y, z)))
                if len(set(key)) < 3 or key in seen:
                    continue
                seen.add(key)
    out = []
    for a, b, d in seen:
        if not _keep(cfg, a, b, d):
            continue
        a2, b2, d2 = a * a, b * b, d * d
        fails = sum(not is_square(v) for v in (a2 + b2, a2 + d2, b2 + d2, a2 + b2 + d2))
        if fails <= 1:
            out.append(make_hit(a, b, d))
    return out


def _run(worker, cfg: SearchConfig) -> list[SearchHit]:
    jobs = [(cfg, s) for s in range(cfg.shards)]
    if cfg.shards == 1:
        parts = [worker(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=cfg.shards) as pool:
            parts = list(pool.map(worker, jobs))
    merged = {(h.a, h.b, h.d): h for part in parts for h in part}
    return sorted(merged.values())


def enumerate_euler_bricks(cfg: SearchConfig) -> list[SearchHit]:
    """Every ``a <= b <= d <= limit`` with all three faces square, ordered by ``(g^2, a, b, d)``."""
    return _run(_brick_shard, cfg)


@dataclass
class NoPerfectReport:
    limit: int
    perfect: list
    near_misses: list
    total_near_misses: int

    @property
    def passed(self) -> bool:
        return not self.perfect


def verify_no_perfect(cfg: SearchConfig, cap: int = 50) -> NoPerfectReport:
    """Check that no integer box up to the limit is perfect; collect boxes with exactly one bad element.

    Near misses (Euler bricks and body cuboids) are sorted by ``g^2`` and capped.
    """
    hits = _run(_near_shard, cfg)
    perfect = [h for h in hits if h.tag == Tag.PERFECT.value]
    near = [h for h in hits if h.tag != Tag.PERFECT.value]
    return NoPerfectReport(cfg.limit, perfect, near[:cap], len(near))


def to_csv(hits: list[SearchHit]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for h in hits:
        w.writerow(h.row())
    return buf.getvalue()
