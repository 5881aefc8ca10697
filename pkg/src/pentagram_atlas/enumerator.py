"""Exhaustive enumeration of the Mermin pentagrams of W(5,2).

Contexts are indexed 0..944 in canonical order.  A pentagram is a 5-clique of
the context graph (contexts meeting in exactly one point) whose ten pairwise
meets are distinct points.  The clique search only extends with contexts of
higher index, so every configuration is produced exactly once, rooted at its
lowest-index context; that root is also the unit of work handed to worker
processes.
"""
from __future__ import annotations

import functools
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadIntersection, EvenParity, EvenParityConfigurationFound, RepeatedMeetPoint
from .pauli import OBSERVABLES, symplectic_form
from .polar_space import KLEIN_QUADRIC, Context, make_context


@dataclass(frozen=True)
class Pentagram:
    contexts: tuple[Context, ...]
    points: tuple[int, ...]
    negative_context_count: int

    @property
    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.points for c in self.contexts)

    @property
    def labels(self) -> tuple[tuple[str, ...], ...]:
        return tuple(c.labels for c in self.contexts)

    def meet(self, i: int, j: int) -> int:
        """The point shared by contexts ``i`` and ``j``."""
        (p,) = set(self.contexts[i].points) & set(self.contexts[j].points)
        return p

    def to_json(self) -> dict:
        return {"contexts": [list(c.points) for c in self.contexts], "neg": self.negative_context_count}


@functools.lru_cache(maxsize=1)
def _contexts() -> tuple[Context, ...]:
    found = []
    for a, b, c in itertools.combinations(OBSERVABLES, 3):
        if symplectic_form(a, b) or symplectic_form(a, c) or symplectic_form(b, c):
            continue
        s = a + b
        if s is None or s == c:
            continue
        d = s + c
        # d > c keeps each 4-set once (a < b < c < d in id order)
        if d is None or d.id <= c.id:
            continue
        found.append(make_context((a, b, c, d)))
    return tuple(sorted(found, key=lambda ctx: ctx.points))


def enumerate_contexts() -> list[Context]:
    """All 945 contexts, canonically sorted."""
    return list(_contexts())


class ContextGraph:
    """Contexts as nodes, joined when they share exactly one point."""

    def __init__(self, contexts: Sequence[Context] | None = None):
        self.nodes = tuple(_contexts() if contexts is None else contexts)
        self.masks = [c.mask for c in self.nodes]
        self.index = {c.points: i for i, c in enumerate(self.nodes)}
        n = len(self.nodes)
        self.adjacency: list[frozenset[int]] = []
        for i in range(n):
            mi = self.masks[i]
            self.adjacency.append(frozenset(j for j in range(n) if (mi & self.masks[j]).bit_count() == 1))

    def __len__(self):
        return len(self.nodes)

    def search_from(self, root: int) -> list[tuple[int, ...]]:
        """All 5-configurations whose lowest context index is ``root``."""
        masks, adj = self.masks, self.adjacency
        out = []
        m0 = masks[root]
        level1 = sorted(j for j in adj[root] if j > root)
        for pos, j in enumerate(level1):
            used1 = m0 & masks[j]
            adj_j = adj[j]
            level2 = [k for k in level1[pos + 1:] if k in adj_j and not masks[k] & used1]
            for pos2, k in enumerate(level2):
                mk = masks[k]
                used2 = used1 | (m0 & mk) | (masks[j] & mk)
                adj_k = adj[k]
                level3 = [m for m in level2[pos2 + 1:] if m in adj_k and not masks[m] & used2]
                for pos3, m in enumerate(level3):
                    mm = masks[m]
                    used3 = used2 | (m0 & mm) | (masks[j] & mm) | (mk & mm)
                    adj_m = adj[m]
                    for q in level3[pos3 + 1:]:
                        if q in adj_m and not masks[q] & used3:
                            out.append((root, j, k, m, q))
        return out


@functools.lru_cache(maxsize=1)
def _worker_graph() -> ContextGraph:
    return ContextGraph()


def _search_roots(roots: list[int]) -> list[tuple[int, ...]]:
    graph = _worker_graph()
    return [cfg for r in roots for cfg in graph.search_from(r)]


def default_threads() -> int:
    return os.cpu_count() or 1


def search_configurations(graph: ContextGraph | None = None, threads: int | None = None) -> list[tuple[int, ...]]:
    """Index 5-tuples of every configuration, sorted, no parity filter."""
    threads = default_threads() if threads is None else threads
    if threads < 1:
        raise ValueError("threads must be >= 1")
    if threads == 1 or graph is not None:
        graph = graph or _worker_graph()
        found = [cfg for r in range(len(graph)) for cfg in graph.search_from(r)]
    else:
        n = len(_contexts())
        # interleave roots: low roots carry most of the work
        chunks = [list(range(w, n, threads)) for w in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            found = [cfg for part in pool.map(_search_roots, chunks) for cfg in part]
    found.sort()
    return found


def _build(contexts: tuple[Context, ...]) -> Pentagram:
    points = set()
    for c in contexts:
        points.update(c.points)
    neg = sum(c.negative for c in contexts)
    return Pentagram(contexts, tuple(sorted(points)), neg)


def enumerate_pentagrams(threads: int | None = None) -> list[Pentagram]:
    """Every Mermin pentagram, canonically sorted.

    The search does not filter on parity; any even configuration found is
    reported as :class:`EvenParityConfigurationFound`.
    """
    nodes = _contexts()
    result = []
    even = []
    for cfg in search_configurations(threads=threads):
        p = _build(tuple(nodes[i] for i in cfg))
        if p.negative_context_count % 2 == 0:
            even.append(p)
        result.append(p)
    if even:
        raise EvenParityConfigurationFound(
            f"{len(even)} even-parity configurations, first: {even[0].labels}"
        )
    return result


def pentagrams_from_keys(keys: Iterable[Sequence[Sequence[int]]]) -> list[Pentagram]:
    """Rebuild pentagrams from lists of context point ids (cache format)."""
    index = {c.points: c for c in _contexts()}
    return [_build(tuple(index[tuple(pts)] for pts in key)) for key in keys]


def validate_pentagram(contexts: Iterable[Context]) -> Pentagram:
    contexts = tuple(sorted(contexts, key=lambda c: c.points))
    if len(contexts) != 5:
        raise BadIntersection(f"a pentagram has 5 contexts, got {len(contexts)}")
    meets = {}
    for (i, a), (j, b) in itertools.combinations(enumerate(contexts), 2):
        shared = set(a.points) & set(b.points)
        if len(shared) != 1:
            raise BadIntersection(
                f"contexts {a.labels} and {b.labels} share {len(shared)} points, expected 1"
            )
        (p,) = shared
        if p in meets:
            raise RepeatedMeetPoint(
                f"{OBSERVABLES[p - 1].label} is the meet of contexts {meets[p]} and {(i, j)}"
            )
        meets[p] = (i, j)
    p = _build(contexts)
    assert len(p.points) == 10
    if p.negative_context_count % 2 == 0:
        raise EvenParity(f"{p.negative_context_count} negative contexts; the configuration is not magic")
    return p


def pentagrams_on_quadric(pentagrams: Iterable[Pentagram]) -> list[Pentagram]:
    return [p for p in pentagrams if KLEIN_QUADRIC.issuperset(p.points)]
