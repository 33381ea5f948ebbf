"""Detection and enumeration of forbidden subgraphs inside host graphs.

Containment is always in the subgraph sense (never induced). The search
routines work on neighborhood bitmasks: a clique is grown by intersecting
candidate masks, J_k is located as a vertex pair whose common neighborhood
holds a (k-2)-clique, and so on for the other patterns in the family.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .coloring import EdgeColoring, color_class
from .graphs import Graph, complement, iter_bits
from .targets import (
    CLIQUE,
    CLIQUE_MINUS_EDGE,
    CLIQUE_MINUS_P3,
    CYCLE,
    TRIANGLE_PLUS_PENDANT,
    Target,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class CopyList:
    """All copies of a target in a host, each copy a sorted edge tuple."""

    target: Target
    copies: tuple[tuple[Edge, ...], ...]

    def __len__(self) -> int:
        return len(self.copies)


def has_clique(adj: Sequence[int], cand: int, k: int) -> bool:
    """Is there a k-clique using only vertices from the mask ``cand``?

    Ascending-vertex recursion: each clique is sought starting from its
    minimum vertex, so every branch shrinks the candidate mask.
    """
    if k <= 0:
        return True
    while cand:
        if cand.bit_count() < k:
            return False
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if has_clique(adj, cand & adj[v], k - 1):
            return True
    return False


def count_cliques(adj: Sequence[int], cand: int, k: int) -> int:
    """Number of k-cliques inside the mask ``cand``."""
    if k == 0:
        return 1
    if k == 1:
        return cand.bit_count()
    total = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        total += count_cliques(adj, cand & adj[v], k - 1)
    return total


def iter_cliques(adj: Sequence[int], cand: int, k: int) -> Iterator[int]:
    """Yield the vertex masks of all k-cliques inside ``cand``."""
    if k == 0:
        yield 0
        return
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        for rest in iter_cliques(adj, cand & adj[v], k - 1):
            yield rest | low


def contains(g: Graph, t: Target) -> bool:
    """Does ``g`` contain a (not necessarily induced) copy of ``t``?"""
    n, adj = g.n, g.adj
    if t.order > n:
        return False
    full = (1 << n) - 1
    if t.kind == CLIQUE:
        return has_clique(adj, full, t.k)
    if t.kind == CLIQUE_MINUS_EDGE:
        for x in range(n):
            ax = adj[x]
            for y in range(x + 1, n):
                if has_clique(adj, ax & adj[y], t.k - 2):
                    return True
        return False
    if t.kind == TRIANGLE_PLUS_PENDANT:
        for u in range(n):
            au = adj[u]
            for v in iter_bits(au >> (u + 1)):
                v += u + 1
                common = au & adj[v]
                if not common:
                    continue
                if au.bit_count() > 2 or adj[v].bit_count() > 2:
                    return True
                for w in iter_bits(common):
                    if adj[w].bit_count() > 2:
                        return True
        return False
    if t.kind == CLIQUE_MINUS_P3:
        for u in range(n):
            au = adj[u]
            for v in iter_bits(au >> (u + 1)):
                v += u + 1
                common = au & adj[v]
                for w in range(n):
                    if w == u or w == v:
                        continue
                    if has_clique(adj, common & adj[w], t.k - 3):
                        return True
        return False
    return _has_cycle(g, t.k)


def _has_cycle(g: Graph, k: int) -> bool:
    n, adj = g.n, g.adj
    for s in range(n):
        allowed = ~((1 << (s + 1)) - 1)  # only vertices above the start
        start_bit = 1 << s

        def dfs(v: int, depth: int, visited: int) -> bool:
            if depth == k:
                return bool(adj[v] & start_bit)
            for u in iter_bits(adj[v] & allowed & ~visited):
                if dfs(u, depth + 1, visited | (1 << u)):
                    return True
            return False

        if dfs(s, 1, start_bit):
            return True
    return False


def _clique_edges(mask: int) -> list[Edge]:
    verts = list(iter_bits(mask))
    return [(u, v) for i, u in enumerate(verts) for v in verts[i + 1 :]]


def list_copies(g: Graph, t: Target) -> CopyList:
    """Every distinct copy of ``t`` in ``g`` as a sorted edge tuple."""
    n, adj = g.n, g.adj
    copies: set[tuple[Edge, ...]] = set()
    full = (1 << n) - 1
    if t.order <= n:
        if t.kind == CLIQUE:
            for mask in iter_cliques(adj, full, t.k):
                copies.add(tuple(sorted(_clique_edges(mask))))
        elif t.kind == CLIQUE_MINUS_EDGE:
            for x in range(n):
                for y in range(x + 1, n):
                    common = adj[x] & adj[y]
                    for cmask in iter_cliques(adj, common, t.k - 2):
                        edges = _clique_edges(cmask)
                        for w in iter_bits(cmask):
                            edges.append((min(x, w), max(x, w)))
                            edges.append((min(y, w), max(y, w)))
                        copies.add(tuple(sorted(edges)))
        elif t.kind == TRIANGLE_PLUS_PENDANT:
            for tri in iter_cliques(adj, full, 3):
                for a in iter_bits(tri):
                    for p in iter_bits(adj[a] & ~tri):
                        edges = _clique_edges(tri)
                        edges.append((min(a, p), max(a, p)))
                        copies.add(tuple(sorted(edges)))
        elif t.kind == CLIQUE_MINUS_P3:
            for u in range(n):
                for v in iter_bits(adj[u] >> (u + 1)):
                    v += u + 1
                    common = adj[u] & adj[v]
                    for w in range(n):
                        if w == u or w == v:
                            continue
                        pool = common & adj[w] & ~(1 << w)
                        for cmask in iter_cliques(adj, pool, t.k - 3):
                            edges = _clique_edges(cmask)
                            edges.append((u, v))
                            for r in iter_bits(cmask):
                                edges.append((min(u, r), max(u, r)))
                                edges.append((min(v, r), max(v, r)))
                                edges.append((min(w, r), max(w, r)))
                            copies.add(tuple(sorted(set(edges))))
        else:
            for cyc in _iter_cycles(g, t.k):
                copies.add(cyc)
    return CopyList(t, tuple(sorted(copies)))


def _iter_cycles(g: Graph, k: int) -> Iterator[tuple[Edge, ...]]:
    n, adj = g.n, g.adj
    for s in range(n):
        allowed = ~((1 << (s + 1)) - 1)
        path = [s]

        def dfs(v: int, visited: int) -> Iterator[tuple[Edge, ...]]:
            if len(path) == k:
                # close the cycle; dedupe direction via second < last vertex
                if (adj[v] >> s) & 1 and path[1] < path[-1]:
                    edges = [
                        (min(a, b), max(a, b)) for a, b in zip(path, path[1:] + [s])
                    ]
                    yield tuple(sorted(edges))
                return
            for u in iter_bits(adj[v] & allowed & ~visited):
                path.append(u)
                yield from dfs(u, visited | (1 << u))
                path.pop()

        yield from dfs(s, 1 << s)


def is_good(g: Graph, t1: Target, t2: Target) -> bool:
    """No ``t1`` in ``g`` and no ``t2`` in its complement."""
    return not contains(g, t1) and not contains(complement(g), t2)


@dataclass(frozen=True)
class ColoringVerdict:
    """Outcome of validating a coloring against a target list.

    ``assignment[i]`` is the index of the target checked against color i;
    the identity assignment is tried first, then permutations of targets
    with equal multisets. On failure, the witness names the offending color
    and one monochromatic copy under the identity assignment.
    """

    valid: bool
    assignment: tuple[int, ...] | None = None
    witness_color: int | None = None
    witness_edges: tuple[Edge, ...] | None = None

    def __bool__(self) -> bool:
        return self.valid


def coloring_is_valid(c: EdgeColoring, targets: Sequence[Target]) -> ColoringVerdict:
    if len(targets) != c.m:
        raise ValueError(f"{len(targets)} targets for an {c.m}-coloring")
    classes = [color_class(c, i) for i in range(c.m)]
    orders = [contains(classes[i], targets[i]) for i in range(c.m)]
    if not any(orders):
        return ColoringVerdict(True, tuple(range(c.m)))
    seen = {tuple(targets)}
    for perm in sorted(permutations(range(c.m))):
        arranged = tuple(targets[j] for j in perm)
        if arranged in seen:
            continue
        seen.add(arranged)
        if not any(contains(classes[i], arranged[i]) for i in range(c.m)):
            return ColoringVerdict(True, perm)
    bad = orders.index(True)
    witness = list_copies(classes[bad], targets[bad]).copies[0]
    return ColoringVerdict(False, None, bad, witness)
