"""Deterministic constructors for every graph family the harness uses.

The paired counterexample families are 1-based in their defining formulas;
everything here converts to 0-based indexing (formula node i becomes node
i-1), so "the cut vertex with node number n" is node n-1.
"""

from __future__ import annotations

import heapq
import random

from .biconn import biconnectivity_report
from .graphs import Graph, connected_components


class GenerationError(ValueError):
    """Requested parameters cannot produce the promised structure."""


def example1(m: int, k: int) -> tuple[Graph, Graph]:
    """Equal-degree pair on 2km+1 nodes: one big cycle vs two cycles, plus
    a shared hub adjacent to every multiple of m.

    The second graph always has the hub as a cut vertex; with k=1 it also
    has cut vertices m-1 and 2m-1 and cut edges {m-1,n-1}, {2m-1,n-1}.
    Requires mk >= 3 so the cycles are simple.
    """
    if m < 1 or k < 1 or m * k < 3:
        raise GenerationError("example1 requires m,k >= 1 and mk >= 3")
    n = 2 * k * m + 1
    hub = n - 1
    e1 = [((i - 1), (i % (2 * k * m))) for i in range(1, 2 * k * m + 1)]
    e1 += [(hub, i - 1) for i in range(1, 2 * k * m + 1) if i % m == 0]
    e2 = [((i - 1), (i % (k * m))) for i in range(1, k * m + 1)]
    e2 += [((i + k * m - 1), (i % (k * m)) + k * m) for i in range(1, k * m + 1)]
    e2 += [(hub, i - 1) for i in range(1, 2 * k * m + 1) if i % m == 0]
    return Graph.from_edges(n, e1), Graph.from_edges(n, e2)


def example2(m: int) -> tuple[Graph, Graph]:
    """Equal-degree pair on 2m nodes: a 2m-cycle with a long chord vs two
    m-cycles joined by an edge; the joining edge {m-1, 2m-1} is a cut edge
    only in the second graph. Requires m >= 3.
    """
    if m < 3:
        raise GenerationError("example2 requires m >= 3")
    n = 2 * m
    e1 = [((i - 1), (i % n)) for i in range(1, n + 1)]
    e1.append((m - 1, 2 * m - 1))
    e2 = [((i - 1), (i % m)) for i in range(1, m + 1)]
    e2 += [((i + m - 1), (i % m) + m) for i in range(1, m + 1)]
    e2.append((m - 1, 2 * m - 1))
    return Graph.from_edges(n, e1), Graph.from_edges(n, e2)


def path(n: int) -> Graph:
    if n < 1:
        raise GenerationError("path requires n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GenerationError("cycle requires n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GenerationError("complete requires n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """Star on n nodes: center 0 plus n-1 leaves."""
    if n < 1:
        raise GenerationError("star requires n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def tree_random(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a seeded Pruefer sequence."""
    if n < 1:
        raise GenerationError("tree_random requires n >= 1")
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_gnp(n: int, p, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) from a seeded generator; identical parameters
    give identical edge sets on every platform."""
    if n < 1:
        raise GenerationError("random_gnp requires n >= 1")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def _generalized_petersen(n: int, k: int) -> Graph:
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))          # outer cycle
        edges.append((i, n + i))                 # spokes
        edges.append((n + i, n + (i + k) % n))   # inner star polygon
    return Graph.from_edges(2 * n, edges)


def _rook_4x4() -> Graph:
    edges = []
    for i in range(4):
        for j in range(4):
            a = 4 * i + j
            for jj in range(j + 1, 4):
                edges.append((a, 4 * i + jj))
            for ii in range(i + 1, 4):
                edges.append((a, 4 * ii + j))
    return Graph.from_edges(16, edges)


def _shrikhande() -> Graph:
    # Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}
    conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = set()
    for x in range(4):
        for y in range(4):
            a = 4 * x + y
            for dx, dy in conn:
                b = 4 * ((x + dx) % 4) + ((y + dy) % 4)
                if a != b:
                    edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(16, sorted(edges))


_NAMED = {
    "dodecahedron": lambda: _generalized_petersen(10, 2),
    "desargues": lambda: _generalized_petersen(10, 3),
    "petersen": lambda: _generalized_petersen(5, 2),
    "rook4x4": _rook_4x4,
    "shrikhande": _shrikhande,
}


def named_graph(name: str) -> Graph:
    try:
        return _NAMED[name]()
    except KeyError:
        raise GenerationError(
            f"unknown named graph {name!r}; choose from {sorted(_NAMED)}"
        ) from None


NAMED_GRAPHS = tuple(sorted(_NAMED))

REGULAR_WITH_CUTS_RETRIES = 1000


def _havel_hakimi(degrees: list[int]) -> set[tuple[int, int]] | None:
    """Deterministic simple graph with the given degree sequence, or None
    when the sequence is not graphical."""
    if sum(degrees) % 2:
        return None
    work = [[d, v] for v, d in enumerate(degrees)]
    edges: set[tuple[int, int]] = set()
    while True:
        work.sort(reverse=True)
        d, v = work[0]
        if d == 0:
            return edges
        if d > len(work) - 1:
            return None
        work[0][0] = 0
        for slot in work[1 : d + 1]:
            if slot[0] == 0:
                return None
            slot[0] -= 1
            u = slot[1]
            edges.add((u, v) if u < v else (v, u))


def _randomize_by_swaps(rng: random.Random, n: int, edges: set[tuple[int, int]]) -> Graph:
    """Degree-preserving double edge swaps; keeps the graph simple."""
    edge_list = sorted(edges)
    attempts = 10 * max(len(edge_list), 1)
    for _ in range(attempts):
        i = rng.randrange(len(edge_list))
        j = rng.randrange(len(edge_list))
        a, b = edge_list[i]
        c, d = edge_list[j]
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) != 4:
            continue
        e1 = (a, c) if a < c else (c, a)
        e2 = (b, d) if b < d else (d, b)
        if e1 in edges or e2 in edges:
            continue
        edges.discard(edge_list[i])
        edges.discard(edge_list[j])
        edges.add(e1)
        edges.add(e2)
        edge_list[i] = e1
        edge_list[j] = e2
    return Graph.from_edges(n, sorted(edges))


BLOCK_SAMPLE_RETRIES = 200


def _random_biconnected_block(rng: random.Random, degrees: list[int]) -> Graph | None:
    base = _havel_hakimi(degrees)
    if base is None:
        return None
    for _ in range(BLOCK_SAMPLE_RETRIES):
        g = _randomize_by_swaps(rng, len(degrees), set(base))
        if len(connected_components(g).classes) != 1:
            continue
        rep = biconnectivity_report(g)
        if rep.cut_vertices or rep.cut_edges:
            continue
        return g
    return None


def regular_with_cuts(d: int, blocks: int, block_size: int, seed: int) -> Graph:
    """Random d-regular graph whose cut structure is a chain of blocks.

    Odd d: biconnected blocks joined by bridges; attachment nodes carry one
    stub each and a block size is bumped by one when its internal degree
    sum would be odd (a bridge side of an odd-degree regular graph must
    have odd order). Even d: regular graphs cannot have bridges at all, so
    consecutive blocks share a cut vertex that splits its d edges evenly.
    Retries against the exact oracle until the intended cut set appears.
    """
    if d < 1 or blocks < 2 or block_size < d + 1:
        raise GenerationError(
            "regular_with_cuts requires d >= 1, blocks >= 2, block_size > d"
        )
    if d % 2 == 0 and d // 2 < 2:
        # a biconnected block needs the shared vertex at degree >= 2
        raise GenerationError("regular_with_cuts is infeasible for d = 2")
    rng = random.Random(seed)
    for _ in range(REGULAR_WITH_CUTS_RETRIES // 10):
        if d % 2:
            g, expected_cuts = _chain_by_bridges(rng, d, blocks, block_size)
        else:
            g, expected_cuts = _chain_by_shared_vertices(rng, d, blocks, block_size)
        if g is None:
            continue
        rep = biconnectivity_report(g)
        expected_vertices, expected_edges = expected_cuts
        if rep.cut_edges != expected_edges:
            continue
        if rep.cut_vertices != expected_vertices:
            continue
        if any(g.degree(v) != d for v in range(g.n)):
            continue
        return g
    raise GenerationError(
        f"regular_with_cuts({d},{blocks},{block_size}) infeasible after "
        f"{REGULAR_WITH_CUTS_RETRIES} retries"
    )


def _chain_by_bridges(rng, d, blocks, block_size):
    sizes = []
    for j in range(blocks):
        stubs = 1 if j in (0, blocks - 1) else 2
        size = block_size
        if (d * size - stubs) % 2:
            size += 1
        sizes.append(size)
    base = [0]
    for s in sizes[:-1]:
        base.append(base[-1] + s)
    parts = []
    for j, size in enumerate(sizes):
        degrees = [d] * size
        att = []
        if j > 0:
            att.append(0)
        if j < blocks - 1:
            att.append(1 if j > 0 else 0)
        for a in att:
            degrees[a] -= 1
        block = _random_biconnected_block(rng, degrees)
        if block is None:
            return None, None
        parts.append(block)
    edges = []
    for j, block in enumerate(parts):
        edges.extend((base[j] + u, base[j] + v) for u, v in block.edges)
    bridges = []
    cut_vertices = set()
    for j in range(blocks - 1):
        out_att = base[j] + (1 if j > 0 else 0)
        in_att = base[j + 1]
        bridges.append((min(out_att, in_att), max(out_att, in_att)))
        cut_vertices.update((out_att, in_att))
    edges.extend(bridges)
    g = Graph.from_edges(base[-1] + sizes[-1], edges)
    return g, (tuple(sorted(cut_vertices)), tuple(sorted(bridges)))


def _chain_by_shared_vertices(rng, d, blocks, block_size):
    half = d // 2
    # block j occupies nodes [j*(size-1), j*(size-1)+size); consecutive
    # blocks overlap in exactly one node
    size = block_size
    n = blocks * size - (blocks - 1)
    edges = []
    shared = [j * (size - 1) for j in range(1, blocks)]
    for j in range(blocks):
        offset = j * (size - 1)
        degrees = [d] * size
        if j > 0:
            degrees[0] = half
        if j < blocks - 1:
            degrees[size - 1] = half
        block = _random_biconnected_block(rng, degrees)
        if block is None:
            return None, None
        edges.extend((offset + u, offset + v) for u, v in block.edges)
    g = Graph.from_edges(n, edges)
    return g, (tuple(shared), ())
