"""Pairwise distance preprocessing: integer SPD and exact-rational RD.

All resistance values are exact `fractions.Fraction`s so that refinement
can hash them; a single rounding anywhere would silently merge or split
color classes. Cross-component entries use the UNREACHABLE sentinel, which
orders after every finite value and hashes as its own token.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graphs import Graph, connected_components, induced_subgraph


class _Unreachable:
    __slots__ = ()

    def __repr__(self):
        return "UNREACHABLE"

    def __reduce__(self):
        return (_unreachable_instance, ())


def _unreachable_instance():
    return UNREACHABLE


UNREACHABLE = _Unreachable()


def token_sort_key(token):
    """Total order over distance tokens: finite values, then UNREACHABLE.

    Handles ints, Fractions, the sentinel, and (spd, rd) pairs.
    """
    if token is UNREACHABLE:
        return (2,)
    if isinstance(token, tuple):
        return (1, tuple(token_sort_key(t) for t in token))
    return (0, Fraction(token))


@dataclass(frozen=True)
class SpdMatrix:
    """Shortest path distances; entries are ints or UNREACHABLE."""

    n: int
    rows: tuple[tuple[object, ...], ...]

    def __getitem__(self, uv):
        u, v = uv
        return self.rows[u][v]


@dataclass(frozen=True)
class RdMatrix:
    """Resistance distances; entries are Fractions or UNREACHABLE."""

    n: int
    rows: tuple[tuple[object, ...], ...]

    def __getitem__(self, uv):
        u, v = uv
        return self.rows[u][v]


@lru_cache(maxsize=None)
def spd_matrix(g: Graph) -> SpdMatrix:
    """BFS from every node, Theta(n(n+m))."""
    rows = []
    for s in range(g.n):
        dist: list[object] = [UNREACHABLE] * g.n
        dist[s] = 0
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for w in g.adjacency[u]:
                if dist[w] is UNREACHABLE:
                    dist[w] = dist[u] + 1
                    dq.append(w)
        rows.append(tuple(dist))
    return SpdMatrix(n=g.n, rows=tuple(rows))


def _bareiss_inverse(a: list[list[int]]) -> list[list[Fraction]]:
    """Exact inverse of an integer matrix.

    Fraction-free forward elimination on [A | I] keeps everything integral
    (each 2x2-determinant step divides exactly by the previous pivot);
    Fractions appear only in the final back-substitution.
    """
    n = len(a)
    aug = [list(map(int, a[i])) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    width = 2 * n
    prev = 1
    for k in range(n):
        pivot = aug[k][k]
        if pivot == 0:
            # positive definite input: every leading principal minor > 0
            raise ArithmeticError("singular matrix in exact inversion")
        for i in range(k + 1, n):
            row_i = aug[i]
            row_k = aug[k]
            f = row_i[k]
            for j in range(k + 1, width):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    inv: list[list[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    for col in range(n):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            s = Fraction(aug[i][n + col])
            for j in range(i + 1, n):
                s -= aug[i][j] * x[j]
            x[i] = s / aug[i][i]
        for i in range(n):
            inv[i][col] = x[i]
    return inv


RD_MAX_COMPONENT_NODES = 128


@lru_cache(maxsize=None)
def rd_matrix(g: Graph) -> RdMatrix:
    """Exact resistance distance per connected component.

    On each component of size s the integer matrix s*L + J is inverted
    exactly; with M = (L + J/s)^{-1} = s * inv, the resistance between i
    and j is M[i][i] + M[j][j] - 2*M[i][j]. Cross-component entries are
    UNREACHABLE.
    """
    rows: list[list[object]] = [[UNREACHABLE] * g.n for _ in range(g.n)]
    for comp in connected_components(g).classes:
        s = len(comp)
        if s > RD_MAX_COMPONENT_NODES:
            raise ValueError(
                f"exact RD capped at components of {RD_MAX_COMPONENT_NODES} nodes"
            )
        if s == 1:
            rows[comp[0]][comp[0]] = Fraction(0)
            continue
        sub, names = induced_subgraph(g, comp)
        a = [[1] * s for _ in range(s)]
        for i in range(s):
            a[i][i] += s * sub.degree(i)
        for u, v in sub.edges:
            a[u][v] -= s
            a[v][u] -= s
        inv = _bareiss_inverse(a)
        for i in range(s):
            for j in range(s):
                # factor s from M = s * inv
                val = s * (inv[i][i] + inv[j][j] - 2 * inv[i][j])
                rows[names[i]][names[j]] = val
    return RdMatrix(n=g.n, rows=tuple(tuple(r) for r in rows))


HITTING_TIME_MAX_NODES = 30


def hitting_time_matrix(g: Graph) -> tuple[tuple[Fraction, ...], ...]:
    """Exact expected hitting times h(u, v) of the simple random walk.

    For each target v, h(., v) solves the linear system
    h(u, v) = 1 + mean of h(w, v) over neighbors w of u, with h(v, v) = 0.
    Oracle for the commute-time identity; dense solve, so guarded small.
    """
    n = g.n
    if n > HITTING_TIME_MAX_NODES:
        raise ValueError(f"hitting_time_matrix capped at {HITTING_TIME_MAX_NODES} nodes")
    if n > 1 and len(connected_components(g).classes) != 1:
        raise ValueError("hitting_time_matrix requires a connected graph")
    result = [[Fraction(0)] * n for _ in range(n)]
    for v in range(n):
        others = [u for u in range(n) if u != v]
        idx = {u: i for i, u in enumerate(others)}
        m = len(others)
        # rows scaled by deg(u) to stay integral: deg(u) h(u) - sum h(w) = deg(u)
        mat: list[list[int]] = [[0] * (m + 1) for _ in range(m)]
        for u in others:
            i = idx[u]
            mat[i][i] = g.degree(u)
            mat[i][m] = g.degree(u)
            for w in g.adjacency[u]:
                if w != v:
                    mat[i][idx[w]] -= 1
        sol = _solve_fraction(mat)
        for u in others:
            result[u][v] = sol[idx[u]]
    return tuple(tuple(r) for r in result)


def _solve_fraction(mat: list[list[int]]) -> list[Fraction]:
    """Gaussian elimination over Fractions on an augmented [A | b]."""
    m = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    for k in range(m):
        piv = next((r for r in range(k, m) if a[r][k] != 0), None)
        if piv is None:
            raise ArithmeticError("singular hitting-time system")
        a[k], a[piv] = a[piv], a[k]
        for i in range(k + 1, m):
            if a[i][k] == 0:
                continue
            f = a[i][k] / a[k][k]
            for j in range(k, m + 1):
                a[i][j] -= f * a[k][j]
    x = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        s = a[i][m]
        for j in range(i + 1, m):
            s -= a[i][j] * x[j]
        x[i] = s / a[i][i]
    return x


@dataclass(frozen=True)
class DistanceRegularProfile:
    """Distance-regularity verdict with the derived parameter arrays.

    kappa = (k_1..k_D) counts nodes per hop radius; iota holds the
    intersection array {b_0..b_{D-1}; c_1..c_D}. Both are empty when
    is_drg is False.
    """

    is_drg: bool
    diameter: int
    kappa: tuple[int, ...]
    iota_b: tuple[int, ...]
    iota_c: tuple[int, ...]


def distance_regular_profile(g: Graph) -> DistanceRegularProfile:
    """Check |N^i(u) ∩ N^j(v)| depends only on (i, j, dis(u, v))."""
    if g.n > 1 and len(connected_components(g).classes) != 1:
        raise ValueError("distance_regular_profile requires a connected graph")
    spd = spd_matrix(g)
    n = g.n
    diameter = 0
    for u in range(n):
        for v in range(n):
            d = spd[u, v]
            if d is not UNREACHABLE and d > diameter:
                diameter = d
    # hop sets per node
    hops: list[list[set[int]]] = []
    for u in range(n):
        sets = [set() for _ in range(diameter + 1)]
        for v in range(n):
            sets[spd[u, v]].add(v)
        hops.append(sets)
    signature_by_dist: dict[int, tuple] = {}
    for u in range(n):
        for v in range(n):
            d = spd[u, v]
            sig = tuple(
                len(hops[u][i] & hops[v][j])
                for i in range(diameter + 1)
                for j in range(diameter + 1)
            )
            if signature_by_dist.setdefault(d, sig) != sig:
                return DistanceRegularProfile(False, diameter, (), (), ())
    kappa = tuple(len(hops[0][i]) for i in range(1, diameter + 1))
    b = []
    c = []
    for d in range(diameter + 1):
        # pick any pair at distance d; regularity guarantees one exists
        pair = next(
            ((u, v) for u in range(n) for v in range(n) if spd[u, v] == d), None
        )
        u, v = pair
        if d < diameter:
            b.append(len(hops[u][1] & hops[v][d + 1]))
        if d >= 1:
            c.append(len(hops[u][1] & hops[v][d - 1]))
    return DistanceRegularProfile(
        is_drg=True,
        diameter=diameter,
        kappa=kappa,
        iota_b=tuple(b),
        iota_c=tuple(c),
    )


def rd_from_intersection_array(profile: DistanceRegularProfile, n: int) -> tuple[Fraction, ...]:
    """Resistance at each hop distance from the intersection array alone.

    r_0 = 0 and r_d = r_{d-1} + 2 * (k_d + ... + k_D) / (n * k_{d-1} * b_{d-1})
    with k_0 = 1; in a distance-regular graph the resistance between any
    pair at hop distance d equals r_d.
    """
    if not profile.is_drg:
        raise ValueError("rd_from_intersection_array requires a distance-regular profile")
    d_max = profile.diameter
    k = (1,) + profile.kappa
    r = [Fraction(0)]
    for d in range(1, d_max + 1):
        tail = sum(k[i] for i in range(d, d_max + 1))
        r.append(r[-1] + Fraction(2 * tail, n * k[d - 1] * profile.iota_b[d - 1]))
    return tuple(r)
