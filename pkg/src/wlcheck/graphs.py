"""Simple undirected graphs: representation, parsing, and elementary utilities.

Nodes are dense 0-based integers. Graphs are immutable after construction,
so values can be shared freely between threads and cached by identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class GraphFormatError(ValueError):
    """Malformed graph input (edge list or graph6)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes 0..n-1.

    edges are stored as sorted (u, v) pairs with u < v, in lexicographic
    order; adjacency lists are sorted ascending. No self-loops, no
    duplicate edges.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        if n < 0:
            raise GraphFormatError(f"negative node count {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u},{v}) out of range [0,{n})")
            if u == v:
                raise GraphFormatError(f"self-loop at node {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {{{e[0]},{e[1]}}}")
            seen.add(e)
        sorted_edges = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted_edges:
            adj[u].append(v)
            adj[v].append(u)
        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        return Graph(n=n, edges=sorted_edges, adjacency=adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def __post_init__(self):
        object.__setattr__(self, "_edge_set", frozenset(self.edges))

    def __hash__(self):
        return hash((self.n, self.edges))


@dataclass(frozen=True)
class Partition:
    """Partition of 0..n-1 into disjoint covering classes.

    classes are tuples of sorted node indices, ordered by smallest member;
    class_of[v] is the index of v's class.
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @staticmethod
    def from_labels(labels) -> "Partition":
        groups: dict[object, list[int]] = {}
        for v, lab in enumerate(labels):
            groups.setdefault(lab, []).append(v)
        classes = tuple(sorted((tuple(sorted(g)) for g in groups.values())))
        class_of = [0] * len(labels)
        for i, cls in enumerate(classes):
            for v in cls:
                class_of[v] = i
        return Partition(classes=classes, class_of=tuple(class_of))

    def refines(self, coarser: "Partition") -> bool:
        """True if every class of self lies inside one class of coarser."""
        return all(
            len({coarser.class_of[v] for v in cls}) == 1 for cls in self.classes
        )


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list interchange format.

    First non-comment line is "n m", followed by exactly m lines "u v".
    Lines starting with '#' and blank lines are ignored. Errors carry the
    offending 1-based line number.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    edge_set: set[tuple[int, int]] = set()
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: header must be 'n m'")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header") from None
            if n < 0 or m < 0:
                raise GraphFormatError(f"line {lineno}: negative header value")
            header = (n, m)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: edge line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer edge") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: node out of range [0,{n})")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at node {u}")
        e = (u, v) if u < v else (v, u)
        if e in edge_set:
            raise GraphFormatError(f"line {lineno}: duplicate edge {{{u},{v}}}")
        edge_set.add(e)
        edges.append(e)
    if header is None:
        raise GraphFormatError("empty input: missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(
            f"expected {header[1]} edges, found {len(edges)}"
        )
    return Graph.from_edges(header[0], edges)


def encode_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _graph6_decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, offset of the first adjacency byte)."""
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        vals = [b - 63 for b in data[2:8]]
        n = 0
        for v in vals:
            n = (n << 6) | v
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("truncated graph6 size field")
    vals = [b - 63 for b in data[1:4]]
    n = 0
    for v in vals:
        n = (n << 6) | v
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (offset-63 printable bytes, upper triangle)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise GraphFormatError("non-ASCII byte in graph6 input") from None
    for b in data:
        if b < 63 or b > 126:
            raise GraphFormatError(f"non-printable graph6 byte {b}")
    n, off = _graph6_decode_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[off:]
    if len(body) != nbytes:
        raise GraphFormatError(
            f"graph6 body length {len(body)} != expected {nbytes} for n={n}"
        )
    bits: list[int] = []
    for b in body:
        v = b - 63
        bits.extend((v >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise GraphFormatError("graph6 supports at most 258047 nodes here")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = bytearray(head)
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return out.decode("ascii")


def connected_components(g: Graph) -> Partition:
    """Partition into maximal connected vertex sets (BFS)."""
    label = [-1] * g.n
    comp = 0
    for start in range(g.n):
        if label[start] != -1:
            continue
        queue = [start]
        label[start] = comp
        while queue:
            u = queue.pop()
            for w in g.adjacency[u]:
                if label[w] == -1:
                    label[w] = comp
                    queue.append(w)
        comp += 1
    return Partition.from_labels(label)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g).classes) == 1


def induced_subgraph(g: Graph, nodes) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on `nodes`, relabeled to 0..|nodes|-1.

    Returns (subgraph, relabeling) where relabeling[i] is the original id
    of new node i.
    """
    order = tuple(sorted(set(nodes)))
    for v in order:
        if not (0 <= v < g.n):
            raise GraphFormatError(f"node {v} out of range [0,{g.n})")
    index = {v: i for i, v in enumerate(order)}
    keep = set(order)
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in keep and v in keep
    ]
    return Graph.from_edges(len(order), edges), order


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return Graph.from_edges(a.n + b.n, edges)


def relabel(g: Graph, perm) -> Graph:
    """Graph with node i renamed to perm[i]."""
    perm = tuple(perm)
    if sorted(perm) != list(range(g.n)):
        raise GraphFormatError("relabeling is not a permutation of 0..n-1")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges))


BRUTE_FORCE_ISO_MAX_NODES = 10


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Exhaustive isomorphism test, pruned by degrees. Oracle use only.

    Capped at 10 nodes per graph; the search assigns images in order and
    backtracks on any adjacency mismatch against already-placed nodes.
    """
    if g.n > BRUTE_FORCE_ISO_MAX_NODES or h.n > BRUTE_FORCE_ISO_MAX_NODES:
        raise ValueError(
            f"brute_force_isomorphic capped at {BRUTE_FORCE_ISO_MAX_NODES} nodes"
        )
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    n = g.n
    # Place high-degree nodes first: fewer candidates, earlier pruning.
    order = sorted(range(n), key=g.degree, reverse=True)
    image = [-1] * n
    used = [False] * n
    h_adj = [set(h.adjacency[v]) for v in range(n)]

    def place(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for cand in range(n):
            if used[cand] or g.degree(u) != h.degree(cand):
                continue
            ok = True
            for w in g.adjacency[u]:
                iw = image[w]
                if iw != -1 and iw not in h_adj[cand]:
                    ok = False
                    break
            if ok:
                # non-edges must also map to non-edges
                for prev in order[:pos]:
                    if image[prev] in h_adj[cand] and not g.has_edge(u, prev):
                        ok = False
                        break
            if ok:
                image[u] = cand
                used[cand] = True
                if place(pos + 1):
                    return True
                image[u] = -1
                used[cand] = False
        return False

    return place(0)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms of a small graph (n <= 8), as permutation tuples."""
    if g.n > 8:
        raise ValueError("automorphism enumeration capped at 8 nodes")
    degs = [g.degree(v) for v in range(g.n)]
    autos = []
    for perm in itertools.permutations(range(g.n)):
        if any(degs[v] != degs[perm[v]] for v in range(g.n)):
            continue
        if all(g.has_edge(perm[u], perm[v]) for u, v in g.edges):
            autos.append(perm)
    return autos
