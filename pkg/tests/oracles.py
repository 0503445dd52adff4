"""Independent oracles used to cross-check the package's answers.

Everything here avoids the package's bitset machinery on purpose.
Visibility is decided by enumerating every geodesic explicitly and
looking at its interior; maxima are found by sweeping all subsets.
Slow, but trustworthy on the small graphs we feed them.
"""

from __future__ import annotations

import itertools
import random

from gpvis import DistanceMatrix, Graph, PropertyKind


def all_geodesics(g: Graph, d: DistanceMatrix, u: int, v: int) -> list[tuple[int, ...]]:
    """Every shortest u-v path, as vertex tuples starting at u."""
    if u == v:
        return [(u,)]
    if d.d(u, v) < 0:
        return []
    out = []
    stack = [(u, (u,))]
    while stack:
        x, path = stack.pop()
        for y in g.neighbors(x):
            if d.d(y, v) == d.d(x, v) - 1:
                if y == v:
                    out.append(path + (y,))
                else:
                    stack.append((y, path + (y,)))
    return out


def oracle_pair_visible(g, d, u, v, blocked) -> bool:
    """True if some u-v geodesic has no internal vertex in ``blocked``."""
    blocked = set(blocked)
    return any(
        all(w not in blocked for w in path[1:-1])
        for path in all_geodesics(g, d, u, v)
    )


def oracle_property_ok(g, d, members, kind: PropertyKind) -> bool:
    """Definition-level check of a property, via explicit geodesic lists."""
    ms = set(members)
    if kind is PropertyKind.GP:
        # In general position iff no geodesic of the graph carries three
        # member vertices.
        for u, v in itertools.combinations(range(g.n), 2):
            for path in all_geodesics(g, d, u, v):
                if sum(1 for w in path if w in ms) >= 3:
                    return False
        return True
    if kind is PropertyKind.MV:
        pairs = list(itertools.combinations(sorted(ms), 2))
    elif kind is PropertyKind.OUTER:
        pairs = [
            (u, v)
            for u, v in itertools.combinations(range(g.n), 2)
            if u in ms or v in ms
        ]
    elif kind is PropertyKind.TOTAL:
        pairs = list(itertools.combinations(range(g.n), 2))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return all(oracle_pair_visible(g, d, u, v, ms) for u, v in pairs)


def oracle_max_size(g, d, kind: PropertyKind) -> int:
    """Brute-force maximum over all subsets.  Only sane for n <= 12 or so."""
    best = 0
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size <= best:
            continue
        members = [i for i in range(g.n) if mask >> i & 1]
        if oracle_property_ok(g, d, members, kind):
            best = size
    return best


def oracle_max_sets(g, d, kind: PropertyKind) -> list[tuple[int, ...]]:
    """All maximum-size good subsets, as sorted member tuples."""
    best = oracle_max_size(g, d, kind)
    out = []
    for mask in range(1 << g.n):
        if mask.bit_count() != best:
            continue
        members = tuple(i for i in range(g.n) if mask >> i & 1)
        if oracle_property_ok(g, d, members, kind):
            out.append(members)
    return out


def random_subset(rng: random.Random, n: int) -> list[int]:
    return [i for i in range(n) if rng.random() < 0.5]
