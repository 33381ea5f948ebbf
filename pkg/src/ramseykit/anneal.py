"""Simulated annealing for lower-bound colorings of complete graphs.

The state is a total edge coloring of K_n; its energy is the number of
monochromatic copies of target i inside color class i, summed over
colors, so a zero-energy state is a valid coloring. Moves recolor one
random edge, scored incrementally by counting only the copies through
that edge, and are accepted by the Metropolis rule under a geometric
cooling schedule with deterministic per-restart seeds.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

from .coloring import EdgeColoring, color_class
from .detect import coloring_is_valid, count_cliques, list_copies
from .graphs import iter_bits
from .targets import (
    CLIQUE,
    CLIQUE_MINUS_EDGE,
    CLIQUE_MINUS_P3,
    CYCLE,
    TRIANGLE_PLUS_PENDANT,
    Target,
)


@dataclass(frozen=True)
class AnnealParams:
    initial_temperature: float = 2.0
    cooling: float = 0.997
    sweeps_per_temperature: int = 1
    restarts: int = 20
    seed: int = 0
    min_temperature: float = 0.05

    def __post_init__(self) -> None:
        if self.initial_temperature <= 0:
            raise ValueError("initial temperature must be positive")
        if not 0 < self.cooling < 1:
            raise ValueError("cooling factor must lie strictly between 0 and 1")
        if self.min_temperature <= 0:
            raise ValueError("minimum temperature must be positive")


@dataclass(frozen=True)
class AnnealResult:
    """Search outcome: a validated coloring on success, else best energy."""

    coloring: EdgeColoring | None
    best_energy: int
    restarts_used: int

    @property
    def success(self) -> bool:
        return self.coloring is not None


def energy(c: EdgeColoring, targets: Sequence[Target]) -> int:
    """Monochromatic copies of target i in color class i, summed over i."""
    if len(targets) != c.m:
        raise ValueError(f"{len(targets)} targets for an {c.m}-coloring")
    return sum(
        len(list_copies(color_class(c, i), targets[i]).copies)
        for i in range(c.m)
    )


def count_copies_with_edge(
    masks: Sequence[int], n: int, t: Target, u: int, v: int
) -> int:
    """Copies of ``t`` through the present edge {u,v} of the mask graph."""
    if t.kind == CLIQUE:
        return count_cliques(masks, masks[u] & masks[v], t.k - 2)
    rest_pool = [w for w in range(n) if w != u and w != v]
    total = 0
    for combo in combinations(rest_pool, t.order - 2):
        total += _copies_on_set(masks, t, combo + (u, v), u, v)
    return total


def _copies_on_set(
    masks: Sequence[int], t: Target, verts: tuple[int, ...], u: int, v: int
) -> int:
    vs = sorted(verts)
    if t.kind == CLIQUE_MINUS_EDGE:
        nonedges = [
            (a, b) for a, b in combinations(vs, 2) if not (masks[a] >> b) & 1
        ]
        if not nonedges:
            return t.k * (t.k - 1) // 2 - 1  # any missing pair except {u,v}
        if len(nonedges) == 1:
            return 1
        return 0
    if t.kind == TRIANGLE_PLUS_PENDANT:
        count = 0
        e = (min(u, v), max(u, v))
        for d in vs:
            tri = [w for w in vs if w != d]
            a, b, c = tri
            if not (
                (masks[a] >> b) & 1 and (masks[a] >> c) & 1 and (masks[b] >> c) & 1
            ):
                continue
            for attach in tri:
                if (masks[attach] >> d) & 1:
                    edges = {
                        (a, b),
                        (min(a, c), max(a, c)),
                        (min(b, c), max(b, c)),
                        (min(attach, d), max(attach, d)),
                    }
                    if e in edges:
                        count += 1
        return count
    if t.kind == CLIQUE_MINUS_P3:
        count = 0
        e = (min(u, v), max(u, v))
        pairs = list(combinations(vs, 2))
        present = {p for p in pairs if (masks[p[0]] >> p[1]) & 1}
        for w in vs:
            others = [x for x in vs if x != w]
            for x, y in combinations(others, 2):
                removed = {(min(w, x), max(w, x)), (min(w, y), max(w, y))}
                if e in removed:
                    continue
                if all(p in present for p in pairs if p not in removed):
                    count += 1
        return count
    if t.kind == CYCLE:
        count = 0
        inner = [w for w in vs if w != u and w != v]
        for order in permutations(inner):
            chain = (v,) + order + (u,)
            if all((masks[a] >> b) & 1 for a, b in zip(chain, chain[1:])):
                count += 1
        return count
    raise ValueError(f"unsupported target kind {t.kind!r}")


def _restart_seed(seed: int, restart: int) -> int:
    return seed * 1_000_003 + restart


def anneal_search(
    n: int, targets: Sequence[Target], params: AnnealParams | None = None
) -> AnnealResult:
    """Look for a zero-energy coloring of K_n avoiding target i in color i.

    Deterministic for a fixed seed; a failed search reports the best energy
    seen across restarts.
    """
    if params is None:
        params = AnnealParams()
    m = len(targets)
    if not 1 <= m <= 4:
        raise ValueError("between 1 and 4 targets required")
    pairs = [(u, v) for v in range(n) for u in range(v)]
    if not pairs:
        return AnnealResult(EdgeColoring(n, m, b""), 0, 0)
    best_overall: int | None = None
    for restart in range(params.restarts):
        rng = random.Random(_restart_seed(params.seed, restart))
        colors = [rng.randrange(m) for _ in pairs]
        masks = [[0] * n for _ in range(m)]
        for (u, v), c in zip(pairs, colors):
            masks[c][u] |= 1 << v
            masks[c][v] |= 1 << u
        cur = _full_energy(masks, n, targets)
        if cur == 0:
            return _finish(n, m, colors, targets, restart)
        temp = params.initial_temperature
        while temp >= params.min_temperature:
            for _ in range(params.sweeps_per_temperature):
                for _ in range(len(pairs)):
                    ei = rng.randrange(len(pairs))
                    u, v = pairs[ei]
                    old = colors[ei]
                    new = rng.randrange(m - 1) if m > 1 else 0
                    if m == 1:
                        continue
                    if new >= old:
                        new += 1
                    delta = -count_copies_with_edge(masks[old], n, targets[old], u, v)
                    _move(masks, old, new, u, v)
                    delta += count_copies_with_edge(masks[new], n, targets[new], u, v)
                    if delta <= 0 or rng.random() < math.exp(-delta / temp):
                        colors[ei] = new
                        cur += delta
                        if cur == 0:
                            return _finish(n, m, colors, targets, restart)
                    else:
                        _move(masks, new, old, u, v)
            temp *= params.cooling
        if best_overall is None or cur < best_overall:
            best_overall = cur
    assert best_overall is not None
    return AnnealResult(None, best_overall, params.restarts)


def _move(masks: list[list[int]], frm: int, to: int, u: int, v: int) -> None:
    masks[frm][u] &= ~(1 << v)
    masks[frm][v] &= ~(1 << u)
    masks[to][u] |= 1 << v
    masks[to][v] |= 1 << u


def _full_energy(masks: Sequence[Sequence[int]], n: int, targets) -> int:
    from .graphs import Graph

    return sum(
        len(list_copies(Graph(n, tuple(masks[i])), targets[i]).copies)
        for i in range(len(targets))
    )


def _finish(n, m, colors, targets, restart) -> AnnealResult:
    vals = bytes(colors)
    out = EdgeColoring(n, m, vals)
    verdict = coloring_is_valid(out, targets)
    if not verdict.valid:
        raise AssertionError("zero-energy state failed validation")
    return AnnealResult(out, 0, restart + 1)
