"""Color refinement: 1-WL, GD-WL (SPD/RD/pair), 2-FWL, DSS-WL, DS-WL, SC-WL.

Every run interns canonical structure encodings in one shared context, so
equal colors mean equal hashed structures across all the graphs refined
together. All graphs advance in lockstep and iterate until the joint
partition survives a full round unchanged; exceeding the theoretical
stabilization bound indicates an interning bug and raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .distances import UNREACHABLE, rd_matrix, spd_matrix, token_sort_key
from .graphs import Graph, Partition, automorphisms, connected_components


class InterningContext:
    """Injective mapping from canonical encodings to dense color ids."""

    def __init__(self):
        self._ids: dict[object, int] = {}

    def intern(self, key) -> int:
        ids = self._ids
        cid = ids.get(key)
        if cid is None:
            cid = len(ids)
            ids[key] = cid
        return cid

    def __len__(self):
        return len(self._ids)


@dataclass(frozen=True)
class Coloring:
    """Stable node coloring of one graph within a shared context."""

    colors: tuple[int, ...]
    rounds: int
    ctx: InterningContext = field(compare=False, repr=False)

    @property
    def representation(self) -> tuple[int, ...]:
        return tuple(sorted(self.colors))


@dataclass(frozen=True)
class PairColoring:
    """Stable 2-FWL coloring over ordered node pairs."""

    pair_colors: tuple[tuple[int, ...], ...]
    rounds: int
    ctx: InterningContext = field(compare=False, repr=False)

    @property
    def vertex_view(self) -> tuple[int, ...]:
        return tuple(self.pair_colors[v][v] for v in range(len(self.pair_colors)))

    @property
    def representation(self) -> tuple[int, ...]:
        return tuple(sorted(c for row in self.pair_colors for c in row))


def _partition_sig(colors_iter) -> tuple[int, ...]:
    """Canonical partition fingerprint, invariant under color renaming."""
    rename: dict[int, int] = {}
    out = []
    for c in colors_iter:
        r = rename.get(c)
        if r is None:
            r = len(rename)
            rename[c] = r
        out.append(r)
    return tuple(out)


class StabilizationError(RuntimeError):
    """Internal error: refinement exceeded its theoretical round bound."""


def _iterate(update, initial, total_elements):
    """Run lockstep rounds until the joint partition stabilizes.

    update(state) -> state; a state is a list (per graph) of color lists.
    Returns (state, rounds). The partition can strictly refine at most
    total_elements - 1 times, so the round cap is total_elements + 1.
    """
    state = initial
    sig = _partition_sig(c for graph_colors in state for c in graph_colors)
    rounds = 0
    cap = total_elements + 1
    while True:
        state = update(state)
        rounds += 1
        new_sig = _partition_sig(c for graph_colors in state for c in graph_colors)
        if new_sig == sig:
            return state, rounds
        sig = new_sig
        if rounds > cap:
            raise StabilizationError(
                f"no stabilization after {rounds} rounds (cap {cap})"
            )


def refine_1wl(graphs: list[Graph], ctx: InterningContext | None = None) -> list[Coloring]:
    """Classic color refinement: hash own color plus neighbor multiset."""
    ctx = ctx or InterningContext()
    c0 = ctx.intern(("init",))
    initial = [[c0] * g.n for g in graphs]

    def update(state):
        out = []
        for g, colors in zip(graphs, state):
            out.append(
                [
                    ctx.intern(
                        (
                            "1wl",
                            colors[v],
                            tuple(sorted(colors[w] for w in g.adjacency[v])),
                        )
                    )
                    for v in range(g.n)
                ]
            )
        return out

    state, rounds = _iterate(update, initial, sum(g.n for g in graphs))
    return [Coloring(tuple(c), rounds, ctx) for c in state]


def _distance_rows(g: Graph, kind: str):
    if kind == "spd":
        return spd_matrix(g).rows
    if kind == "rd":
        return rd_matrix(g).rows
    if kind == "spdrd":
        spd = spd_matrix(g).rows
        rd = rd_matrix(g).rows
        return tuple(
            tuple((spd[u][v], rd[u][v]) for v in range(g.n)) for u in range(g.n)
        )
    raise ValueError(f"unknown distance kind {kind!r}")


def refine_gdwl(
    graphs: list[Graph],
    distance_kind: str = "spd",
    ctx: InterningContext | None = None,
) -> list[Coloring]:
    """Generalized-distance refinement: aggregate (distance, color) over all nodes.

    distance_kind is 'spd', 'rd', or 'spdrd' (the ordered SPD/RD pair).
    Unreachable pairs contribute the UNREACHABLE token, so component
    structure is part of the hash.
    """
    ctx = ctx or InterningContext()
    c0 = ctx.intern(("init",))
    initial = [[c0] * g.n for g in graphs]
    # bucket nodes by distance token once; only colors change per round
    buckets_per_graph = []
    for g in graphs:
        rows = _distance_rows(g, distance_kind)
        node_buckets = []
        for v in range(g.n):
            by_token: dict[object, list[int]] = {}
            for u in range(g.n):
                by_token.setdefault(rows[v][u], []).append(u)
            ordered = sorted(by_token.items(), key=lambda kv: token_sort_key(kv[0]))
            node_buckets.append(
                [(ctx.intern(("dtok", tok)), nodes) for tok, nodes in ordered]
            )
        buckets_per_graph.append(node_buckets)

    def update(state):
        out = []
        for node_buckets, colors in zip(buckets_per_graph, state):
            new_colors = []
            for buckets in node_buckets:
                key = (
                    "gd",
                    tuple(
                        (tok_id, tuple(sorted(colors[u] for u in nodes)))
                        for tok_id, nodes in buckets
                    ),
                )
                new_colors.append(ctx.intern(key))
            out.append(new_colors)
        return out

    state, rounds = _iterate(update, initial, sum(g.n for g in graphs))
    return [Coloring(tuple(c), rounds, ctx) for c in state]


TWO_FWL_MAX_NODES = 40


def refine_2fwl(graphs: list[Graph], ctx: InterningContext | None = None) -> list[PairColoring]:
    """Folklore 2-WL on ordered pairs; Theta(n^3) per round per graph.

    Initial pair colors separate the diagonal, edges, and non-edges; the
    round update hashes the multiset of (color(u,w), color(w,v)) over all w.
    """
    for g in graphs:
        if g.n > TWO_FWL_MAX_NODES:
            raise ValueError(f"2-FWL capped at {TWO_FWL_MAX_NODES} nodes")
    ctx = ctx or InterningContext()
    initial = []
    for g in graphs:
        mat = [
            [
                ctx.intern(("2fwl0", u == v, g.has_edge(u, v)))
                for v in range(g.n)
            ]
            for u in range(g.n)
        ]
        initial.append(mat)

    def update(state):
        out = []
        for g, mat in zip(graphs, state):
            n = g.n
            rng = range(n)
            new_mat = []
            for u in rng:
                row_u = mat[u]
                new_row = []
                for v in rng:
                    items = sorted((row_u[w], mat[w][v]) for w in rng)
                    new_row.append(ctx.intern(("2fwl", row_u[v], tuple(items))))
                new_mat.append(new_row)
            out.append(new_mat)
        return out

    def flatten(state):
        return [[c for row in mat for c in row] for mat in state]

    state = initial
    sig = _partition_sig(c for mat in flatten(state) for c in mat)
    total = sum(g.n * g.n for g in graphs)
    rounds = 0
    while True:
        state = update(state)
        rounds += 1
        new_sig = _partition_sig(c for mat in flatten(state) for c in mat)
        if new_sig == sig:
            break
        sig = new_sig
        if rounds > total + 1:
            raise StabilizationError("2-FWL failed to stabilize within its bound")
    return [
        PairColoring(tuple(tuple(row) for row in mat), rounds, ctx) for mat in state
    ]


@dataclass(frozen=True)
class SubgraphPolicy:
    """Node-based subgraph generation policy for DSS-WL / DS-WL."""

    tag: str  # node_marking | node_deletion | ego | ego_marking
    k: int = 0

    @staticmethod
    def node_marking() -> "SubgraphPolicy":
        return SubgraphPolicy("node_marking")

    @staticmethod
    def node_deletion() -> "SubgraphPolicy":
        return SubgraphPolicy("node_deletion")

    @staticmethod
    def ego(k: int) -> "SubgraphPolicy":
        return SubgraphPolicy("ego", k)

    @staticmethod
    def ego_marking(k: int) -> "SubgraphPolicy":
        return SubgraphPolicy("ego_marking", k)

    @property
    def marks(self) -> bool:
        return self.tag in ("node_marking", "ego_marking")


def _policy_bag(g: Graph, policy: SubgraphPolicy):
    """Adjacency of each generated subgraph G_v (one per node, node-aligned)."""
    if policy.tag == "node_marking":
        return [g.adjacency] * g.n
    if policy.tag == "node_deletion":
        bags = []
        for v in range(g.n):
            bags.append(
                tuple(
                    ()
                    if u == v
                    else tuple(w for w in g.adjacency[u] if w != v)
                    for u in range(g.n)
                )
            )
        return bags
    if policy.tag in ("ego", "ego_marking"):
        spd = spd_matrix(g)
        bags = []
        for v in range(g.n):
            inside = [
                u
                for u in range(g.n)
                if spd[v, u] is not UNREACHABLE and spd[v, u] <= policy.k
            ]
            inside_set = set(inside)
            bags.append(
                tuple(
                    tuple(w for w in g.adjacency[u] if w in inside_set)
                    if u in inside_set
                    else ()
                    for u in range(g.n)
                )
            )
        return bags
    raise ValueError(f"unknown policy {policy.tag!r}")


DSS_WL_MAX_NODES = 64


def refine_dsswl(
    graphs: list[Graph],
    policy: SubgraphPolicy,
    ctx: InterningContext | None = None,
) -> list[Coloring]:
    """DSS-WL: per-round joint aggregation within and across the subgraph bag.

    Each subgraph color update hashes (own subgraph color, subgraph
    neighborhood, global node color, global neighborhood); the global node
    color is the hashed bag of that node's subgraph colors.
    """
    for g in graphs:
        if g.n > DSS_WL_MAX_NODES:
            raise ValueError(f"DSS-WL capped at {DSS_WL_MAX_NODES} nodes")
    ctx = ctx or InterningContext()
    c0 = ctx.intern(("init",))
    c1 = ctx.intern(("mark",))
    bags = [_policy_bag(g, policy) for g in graphs]
    sub_state = []
    for g in graphs:
        if policy.marks:
            sub_state.append(
                [[c1 if u == v else c0 for u in range(g.n)] for v in range(g.n)]
            )
        else:
            sub_state.append([[c0] * g.n for v in range(g.n)])

    def node_colors_of(sub_colors, g: Graph):
        return [
            ctx.intern(
                ("dssbag", tuple(sorted(sub_colors[i][v] for i in range(g.n))))
            )
            for v in range(g.n)
        ]

    node_state = [node_colors_of(sc, g) for sc, g in zip(sub_state, graphs)]
    total = sum(g.n * g.n for g in graphs)
    sig = _partition_sig(c for sc in sub_state for row in sc for c in row)
    rounds = 0
    while True:
        new_sub_state = []
        new_node_state = []
        for g, bag, sub, node in zip(graphs, bags, sub_state, node_state):
            n = g.n
            new_sub = []
            for i in range(n):
                sub_i = sub[i]
                adj_i = bag[i]
                new_sub.append(
                    [
                        ctx.intern(
                            (
                                "dss",
                                sub_i[v],
                                tuple(sorted(sub_i[w] for w in adj_i[v])),
                                node[v],
                                tuple(sorted(node[w] for w in g.adjacency[v])),
                            )
                        )
                        for v in range(n)
                    ]
                )
            new_sub_state.append(new_sub)
            new_node_state.append(node_colors_of(new_sub, g))
        sub_state, node_state = new_sub_state, new_node_state
        rounds += 1
        new_sig = _partition_sig(c for sc in sub_state for row in sc for c in row)
        if new_sig == sig:
            break
        sig = new_sig
        if rounds > total + 1:
            raise StabilizationError("DSS-WL failed to stabilize within its bound")
    return [Coloring(tuple(nc), rounds, ctx) for nc in node_state]


def refine_dswl(
    graphs: list[Graph],
    policy: SubgraphPolicy,
    ctx: InterningContext | None = None,
) -> list[Coloring]:
    """DS-WL: independent 1-WL in each subgraph, no cross-bag aggregation.

    The output color of node v is the whole-graph representation of its
    own subgraph G_v.
    """
    ctx = ctx or InterningContext()
    c0 = ctx.intern(("init",))
    c1 = ctx.intern(("mark",))
    bags = [_policy_bag(g, policy) for g in graphs]
    sub_state = []
    for g in graphs:
        if policy.marks:
            sub_state.append(
                [[c1 if u == v else c0 for u in range(g.n)] for v in range(g.n)]
            )
        else:
            sub_state.append([[c0] * g.n for v in range(g.n)])
    total = sum(g.n * g.n for g in graphs)
    sig = _partition_sig(c for sc in sub_state for row in sc for c in row)
    rounds = 0
    while True:
        new_sub_state = []
        for g, bag, sub in zip(graphs, bags, sub_state):
            new_sub_state.append(
                [
                    [
                        ctx.intern(
                            (
                                "1wl",
                                sub[i][v],
                                tuple(sorted(sub[i][w] for w in bag[i][v])),
                            )
                        )
                        for v in range(g.n)
                    ]
                    for i in range(g.n)
                ]
            )
        sub_state = new_sub_state
        rounds += 1
        new_sig = _partition_sig(c for sc in sub_state for row in sc for c in row)
        if new_sig == sig:
            break
        sig = new_sig
        if rounds > total + 1:
            raise StabilizationError("DS-WL failed to stabilize within its bound")
    colorings = []
    for g, sub in zip(graphs, sub_state):
        node_colors = tuple(
            ctx.intern(("dsrep", tuple(sorted(sub[v])))) for v in range(g.n)
        )
        colorings.append(Coloring(node_colors, rounds, ctx))
    return colorings


SUBSTRUCTURE_MAX_NODES = 8


def compute_orbits(h: Graph) -> Partition:
    """Vertex orbits under the full automorphism group (exhaustive)."""
    if h.n > SUBSTRUCTURE_MAX_NODES:
        raise ValueError(f"orbit computation capped at {SUBSTRUCTURE_MAX_NODES} nodes")
    parent = list(range(h.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in automorphisms(h):
        for v in range(h.n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[a] = b
    return Partition.from_labels([find(v) for v in range(h.n)])


@dataclass(frozen=True)
class Substructure:
    name: str
    graph: Graph
    orbit_index: tuple[int, ...]
    num_orbits: int
    aut_count: int


def make_substructure(name: str, h: Graph) -> Substructure:
    if h.n > SUBSTRUCTURE_MAX_NODES:
        raise ValueError(f"substructures capped at {SUBSTRUCTURE_MAX_NODES} nodes")
    if h.n > 1 and len(connected_components(h).classes) != 1:
        raise ValueError("substructures must be connected")
    orbits = compute_orbits(h)
    return Substructure(
        name=name,
        graph=h,
        orbit_index=orbits.class_of,
        num_orbits=len(orbits.classes),
        aut_count=len(automorphisms(h)),
    )


def _count_induced_occurrences(g: Graph, sub: Substructure) -> list[tuple[int, ...]]:
    """Per node, per orbit of `sub`: induced occurrences containing the node.

    Enumerates all induced embeddings of the substructure by backtracking
    and divides by |Aut| so each vertex set is counted once.
    """
    h = sub.graph
    hn = h.n
    # order H's vertices so each one (after the first) touches an earlier one
    order = [0]
    seen = {0}
    while len(order) < hn:
        nxt = next(
            v for v in range(hn) if v not in seen and any(w in seen for w in h.adjacency[v])
        )
        order.append(nxt)
        seen.add(nxt)
    h_adj = [set(h.adjacency[v]) for v in range(hn)]
    counts = [[0] * sub.num_orbits for _ in range(g.n)]
    image = [-1] * hn
    used = [False] * g.n

    def backtrack(pos: int):
        if pos == hn:
            for hv in range(hn):
                counts[image[hv]][sub.orbit_index[hv]] += 1
            return
        hv = order[pos]
        anchor = next(w for w in h_adj[hv] if image[w] != -1) if pos else None
        candidates = g.adjacency[image[anchor]] if pos else range(g.n)
        for cand in candidates:
            if used[cand] or g.degree(cand) < h.degree(hv):
                continue
            ok = True
            for prev in order[:pos]:
                want = prev in h_adj[hv]
                have = g.has_edge(cand, image[prev])
                if want != have:
                    ok = False
                    break
            if ok:
                image[hv] = cand
                used[cand] = True
                backtrack(pos + 1)
                image[hv] = -1
                used[cand] = False

    backtrack(0)
    out = []
    for v in range(g.n):
        row = []
        for c in counts[v]:
            if c % sub.aut_count:
                raise AssertionError("orbit count not divisible by |Aut(H)|")
            row.append(c // sub.aut_count)
        out.append(tuple(row))
    return out


def substructure_counts(g: Graph, subs: list[Substructure]) -> list[tuple[int, ...]]:
    """Concatenated per-orbit count vector for every node of g."""
    per_sub = [_count_induced_occurrences(g, s) for s in subs]
    return [
        tuple(x for vecs in per_sub for x in vecs[v]) for v in range(g.n)
    ]


def refine_scwl(
    graphs: list[Graph],
    substructures: list[Substructure],
    ctx: InterningContext | None = None,
) -> list[Coloring]:
    """1-WL augmented with per-node, per-orbit induced substructure counts."""
    ctx = ctx or InterningContext()
    c0 = ctx.intern(("init",))
    xs = [substructure_counts(g, substructures) for g in graphs]
    initial = [[c0] * g.n for g in graphs]

    def update(state):
        out = []
        for g, x, colors in zip(graphs, xs, state):
            out.append(
                [
                    ctx.intern(
                        (
                            "sc",
                            colors[v],
                            x[v],
                            tuple(
                                sorted((colors[w], x[w]) for w in g.adjacency[v])
                            ),
                        )
                    )
                    for v in range(g.n)
                ]
            )
        return out

    state, rounds = _iterate(update, initial, sum(g.n for g in graphs))
    return [Coloring(tuple(c), rounds, ctx) for c in state]


def graph_representation(coloring) -> tuple[int, ...]:
    """Sorted multiset of colors; 2-FWL uses all pair colors."""
    return coloring.representation


def edge_color(colors, u: int, v: int) -> tuple[int, int]:
    a, b = colors[u], colors[v]
    return (a, b) if a <= b else (b, a)


def node_partition(coloring) -> Partition:
    colors = (
        coloring.vertex_view if isinstance(coloring, PairColoring) else coloring.colors
    )
    return Partition.from_labels(colors)


@dataclass(frozen=True)
class AlgoResult:
    """Joint refinement output, one entry per input graph.

    node_colors holds the node-level color mapping (2-FWL: the diagonal);
    representations are the sorted graph-level color multisets (2-FWL: all
    pair colors).
    """

    spec: str
    node_colors: tuple[tuple[int, ...], ...]
    representations: tuple[tuple[int, ...], ...]
    rounds: int
    ctx: InterningContext = field(compare=False, repr=False)


def _named_substructure(token: str) -> Substructure:
    from . import generators

    name = token.strip().lower()
    aliases = {"triangle": "c3", "tri": "c3", "square": "c4", "edge": "p2"}
    name = aliases.get(name, name)
    kind, num = name[0], name[1:]
    if not num.isdigit():
        raise ValueError(f"unknown substructure {token!r}")
    n = int(num)
    if kind == "c":
        return make_substructure(name, generators.cycle(n))
    if kind == "p":
        return make_substructure(name, generators.path(n))
    if kind == "k":
        return make_substructure(name, generators.complete(n))
    if kind == "s":
        return make_substructure(name, generators.star(n))
    raise ValueError(f"unknown substructure {token!r}")


def parse_policy(token: str) -> SubgraphPolicy:
    parts = token.split(":")
    if parts[0] == "nm":
        return SubgraphPolicy.node_marking()
    if parts[0] == "nd":
        return SubgraphPolicy.node_deletion()
    if parts[0] == "ego" and len(parts) == 2:
        return SubgraphPolicy.ego(int(parts[1]))
    if parts[0] == "egom" and len(parts) == 2:
        return SubgraphPolicy.ego_marking(int(parts[1]))
    raise ValueError(f"unknown subgraph policy {token!r}")


def run_algorithm(
    spec: str, graphs: list[Graph], ctx: InterningContext | None = None
) -> AlgoResult:
    """Run an algorithm named by its CLI spec string on graphs jointly.

    Specs: 1wl | spdwl | rdwl | gdwl | 2fwl | dsswl:POLICY | dswl:POLICY |
    scwl:NAME[,NAME...] where POLICY is nm | nd | ego:K | egom:K and NAME
    is like c3 (triangle), c4, p3, k4, s3.
    """
    ctx = ctx or InterningContext()
    if spec == "1wl":
        results = refine_1wl(graphs, ctx)
    elif spec == "spdwl":
        results = refine_gdwl(graphs, "spd", ctx)
    elif spec == "rdwl":
        results = refine_gdwl(graphs, "rd", ctx)
    elif spec == "gdwl":
        results = refine_gdwl(graphs, "spdrd", ctx)
    elif spec == "2fwl":
        results = refine_2fwl(graphs, ctx)
        return AlgoResult(
            spec=spec,
            node_colors=tuple(r.vertex_view for r in results),
            representations=tuple(r.representation for r in results),
            rounds=results[0].rounds if results else 0,
            ctx=ctx,
        )
    elif spec.startswith("dsswl:"):
        results = refine_dsswl(graphs, parse_policy(spec[len("dsswl:"):]), ctx)
    elif spec.startswith("dswl:"):
        results = refine_dswl(graphs, parse_policy(spec[len("dswl:"):]), ctx)
    elif spec.startswith("scwl:"):
        subs = [_named_substructure(tok) for tok in spec[len("scwl:"):].split(",") if tok]
        results = refine_scwl(graphs, subs, ctx)
    else:
        raise ValueError(f"unknown algorithm spec {spec!r}")
    return AlgoResult(
        spec=spec,
        node_colors=tuple(r.colors for r in results),
        representations=tuple(r.representation for r in results),
        rounds=results[0].rounds if results else 0,
        ctx=ctx,
    )


ALGORITHM_SPECS = (
    "1wl",
    "spdwl",
    "rdwl",
    "gdwl",
    "2fwl",
    "dsswl:nm",
    "dsswl:nd",
    "dsswl:ego:K",
    "dsswl:egom:K",
    "dswl:nm",
    "dswl:nd",
    "scwl:NAMES",
)


def distinguishable(g: Graph, h: Graph, algo: str) -> bool:
    """True when the algorithm separates the two graph representations."""
    result = run_algorithm(algo, [g, h])
    return result.representations[0] != result.representations[1]


def representations_equal(a, b) -> bool:
    """Compare two colorings' representations; they must share a context."""
    if a.ctx is not b.ctx:
        raise ValueError("colorings come from different interning contexts")
    return a.representation == b.representation
