from fractions import Fraction

import pytest

from wlcheck import generators as gen
from wlcheck.distances import (
    UNREACHABLE,
    distance_regular_profile,
    hitting_time_matrix,
    rd_from_intersection_array,
    rd_matrix,
    spd_matrix,
    token_sort_key,
)
from wlcheck.graphs import Graph, connected_components


def two_triangles():
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])


def test_spd_p3():
    spd = spd_matrix(gen.path(3))
    assert spd[0, 2] == 2 and spd[0, 1] == 1 and spd[1, 1] == 0


def test_spd_cross_component_unreachable():
    spd = spd_matrix(two_triangles())
    assert spd[0, 3] is UNREACHABLE
    assert spd[0, 2] == 1


def test_spd_dodecahedron_histogram():
    g = gen.named_graph("dodecahedron")
    spd = spd_matrix(g)
    for u in range(g.n):
        hist = [0] * 6
        for v in range(g.n):
            hist[spd[u, v]] += 1
        assert hist[1:] == [3, 6, 6, 3, 1]


def test_rd_equals_spd_on_trees():
    for seed in range(10):
        t = gen.tree_random(4 + seed, seed)
        spd, rd = spd_matrix(t), rd_matrix(t)
        for u in range(t.n):
            for v in range(t.n):
                assert rd[u, v] == spd[u, v]


def test_rd_c4_and_k4():
    assert rd_matrix(gen.cycle(4))[0, 1] == Fraction(3, 4)
    k4 = rd_matrix(gen.complete(4))
    for u in range(4):
        for v in range(4):
            if u != v:
                assert k4[u, v] == Fraction(1, 2)


def test_rd_c4_matches_float_pseudoinverse():
    # independent floating-point cross-check of the exact kernel
    g = gen.cycle(4)
    rd = rd_matrix(g)
    n = g.n
    lap = [[0.0] * n for _ in range(n)]
    for v in range(n):
        lap[v][v] = g.degree(v)
    for u, v in g.edges:
        lap[u][v] -= 1.0
        lap[v][u] -= 1.0
    m = [[lap[i][j] + 1.0 / n for j in range(n)] for i in range(n)]
    # Gauss-Jordan inverse in floats
    aug = [row[:] + [1.0 if i == j else 0.0 for j in range(n)] for i, row in enumerate(m)]
    for k in range(n):
        piv = aug[k][k]
        aug[k] = [x / piv for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k]:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    inv = [row[n:] for row in aug]
    for u in range(n):
        for v in range(n):
            approx = inv[u][u] + inv[v][v] - 2 * inv[u][v]
            assert abs(float(rd[u, v]) - approx) < 1e-9


def test_rd_matches_float_inverse_on_a_bigger_graph():
    g = gen.random_gnp(25, 0.25, 42)
    if len(connected_components(g).classes) != 1:
        g = gen.random_gnp(25, 0.3, 43)
    assert len(connected_components(g).classes) == 1
    rd = rd_matrix(g)
    n = g.n
    # build L + J/n in floats and invert by Gauss-Jordan with pivoting
    mat = [[(g.degree(i) if i == j else 0.0) + 1.0 / n for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        mat[u][v] -= 1.0
        mat[v][u] -= 1.0
    aug = [row[:] + [1.0 if i == j else 0.0 for j in range(n)] for i, row in enumerate(mat)]
    for k in range(n):
        piv_row = max(range(k, n), key=lambda r: abs(aug[r][k]))
        aug[k], aug[piv_row] = aug[piv_row], aug[k]
        piv = aug[k][k]
        aug[k] = [x / piv for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k]:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    inv = [row[n:] for row in aug]
    for u in range(n):
        for v in range(n):
            approx = inv[u][u] + inv[v][v] - 2 * inv[u][v]
            assert abs(float(rd[u, v]) - approx) < 1e-8


def test_rd_cross_component_unreachable():
    rd = rd_matrix(two_triangles())
    assert rd[0, 3] is UNREACHABLE
    assert rd[0, 1] == Fraction(2, 3)


def test_rd_metric_axioms_and_spd_bound():
    for seed in range(12):
        g = gen.random_gnp(9, 0.35, seed)
        spd, rd = spd_matrix(g), rd_matrix(g)
        comp = connected_components(g)
        sizes = [len(comp.classes[comp.class_of[v]]) for v in range(g.n)]
        for u in range(g.n):
            assert rd[u, u] == 0
            for v in range(g.n):
                if rd[u, v] is UNREACHABLE:
                    assert spd[u, v] is UNREACHABLE
                    continue
                assert rd[u, v] == rd[v, u]
                assert rd[u, v] <= spd[u, v]
                if u != v:
                    assert 0 < rd[u, v] <= sizes[u] - 1
                for w in range(g.n):
                    if rd[v, w] is not UNREACHABLE:
                        assert rd[u, v] + rd[v, w] >= rd[u, w]


def test_hitting_time_k2_and_p3():
    assert hitting_time_matrix(gen.path(2))[0][1] == 1
    h = hitting_time_matrix(gen.path(3))
    assert h[0][2] == 4
    assert h[1][2] == 3
    assert h[0][1] == 1


def test_commute_time_identity():
    for g in (gen.cycle(5), gen.complete(5), gen.random_gnp(8, 0.5, 1), gen.tree_random(7, 2)):
        if len(connected_components(g).classes) != 1:
            continue
        rd = rd_matrix(g)
        h = hitting_time_matrix(g)
        for u in range(g.n):
            for v in range(g.n):
                assert h[u][v] + h[v][u] == 2 * g.m * rd[u, v]


def test_hitting_time_guards():
    with pytest.raises(ValueError):
        hitting_time_matrix(gen.path(31))
    with pytest.raises(ValueError):
        hitting_time_matrix(two_triangles())


def test_profiles_of_named_graphs():
    prof = distance_regular_profile(gen.named_graph("dodecahedron"))
    assert prof.is_drg and prof.diameter == 5
    assert prof.kappa == (3, 6, 6, 3, 1)
    assert prof.iota_b == (3, 2, 1, 1, 1)
    assert prof.iota_c == (1, 1, 1, 2, 3)

    prof = distance_regular_profile(gen.named_graph("desargues"))
    assert prof.kappa == (3, 6, 6, 3, 1)
    assert prof.iota_b == (3, 2, 2, 1, 1)
    assert prof.iota_c == (1, 1, 2, 2, 3)

    rook = distance_regular_profile(gen.named_graph("rook4x4"))
    shrik = distance_regular_profile(gen.named_graph("shrikhande"))
    assert rook.iota_b == shrik.iota_b == (6, 3)
    assert rook.iota_c == shrik.iota_c == (1, 2)

    assert distance_regular_profile(gen.named_graph("petersen")).is_drg


def test_profile_identity_k_recursion():
    for name in gen.NAMED_GRAPHS:
        g = gen.named_graph(name)
        prof = distance_regular_profile(g)
        assert prof.iota_b[0] == g.degree(0)
        k = (1,) + prof.kappa
        for j in range(1, prof.diameter + 1):
            assert k[j] * prof.iota_c[j - 1] == k[j - 1] * prof.iota_b[j - 1]


def test_irregular_graph_is_not_drg():
    prof = distance_regular_profile(gen.path(4))
    assert not prof.is_drg and prof.kappa == ()


def test_rd_recursion_base_and_agreement():
    for name, n in (("dodecahedron", 20), ("shrikhande", 16), ("petersen", 10)):
        g = gen.named_graph(name)
        prof = distance_regular_profile(g)
        r = rd_from_intersection_array(prof, n)
        assert r[0] == 0
        assert all(r[d] < r[d + 1] for d in range(len(r) - 1))
        rd, spd = rd_matrix(g), spd_matrix(g)
        for u in range(g.n):
            for v in range(g.n):
                assert rd[u, v] == r[spd[u, v]]


def test_rd_recursion_rejects_non_drg():
    prof = distance_regular_profile(gen.path(4))
    with pytest.raises(ValueError):
        rd_from_intersection_array(prof, 4)


def test_rd_component_guard():
    with pytest.raises(ValueError):
        rd_matrix(gen.cycle(200))


def test_token_sort_key_orders_unreachable_last():
    tokens = [UNREACHABLE, 3, Fraction(1, 2), (2, Fraction(5, 4)), 0]
    ordered = sorted(tokens, key=token_sort_key)
    assert ordered[0] == 0 and ordered[-1] is UNREACHABLE
