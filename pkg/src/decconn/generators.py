"""Random instance generators."""
from __future__ import annotations

import random

from .graph import Digraph, static_dominators


def random_digraph(n: int, m: int, rng: random.Random, loops: bool = False) -> Digraph:
    g = Digraph(n)
    while g.m < m and n:
        u, v = rng.randint(1, n), rng.randint(1, n)
        if u != v or loops:
            g.add_edge(u, v)
    return g


def strongly_connected(n: int, m: int, rng: random.Random) -> Digraph:
    """A random Hamiltonian cycle plus random extra edges; needs m >= n for n > 1."""
    g = Digraph(n)
    if n > 1:
        order = list(range(1, n + 1))
        rng.shuffle(order)
        for a, b in zip(order, order[1:] + order[:1]):
            g.add_edge(a, b)
    while g.m < m and n > 1:
        u, v = rng.randint(1, n), rng.randint(1, n)
        if u != v:
            g.add_edge(u, v)
    return g


def reducible_flowgraph(n: int, m: int, rng: random.Random, s: int = 1, back: float = 0.2) -> Digraph:
    """Forward edges along a random order from s, plus back edges only into dominators."""
    others = [v for v in range(1, n + 1) if v != s]
    rng.shuffle(others)
    order = [s, *others]
    g = Digraph(n)
    for i in range(1, n):
        g.add_edge(order[rng.randrange(i)], order[i])
    n_back = int((m - g.m) * back) if m > g.m else 0
    while g.m < m - n_back and n > 2:
        i, j = sorted(rng.sample(range(n), 2))
        g.add_edge(order[i], order[j])
    if n > 1:
        d = static_dominators(g, s)
        tries = 0
        while g.m < m and tries < 50 * m:
            tries += 1
            v = rng.randint(1, n)
            doms = d.path_to_root(v)
            g.add_edge(v, rng.choice(doms))
    return g


def omv_instance(n1: int, n2: int, n3: int, density: float, rng: random.Random):
    """Layered DAG whose parent queries encode Boolean vector-matrix-vector products.

    Vertices: s, then the path x_1..x_{n3+1}, then y_1..y_{n1}, then z_1..z_{n2}.
    Edges: s -> x_1, x_t -> x_{t+1}, x_{n3+1} -> z_j, x_t -> y_i for t <= n3, and
    y_i -> z_j wherever a random 0/1 matrix M has a one.
    Round t cuts the other out-edges of x_{t-1}, then x_t -> y_i where u_i = 0,
    and asks for the parent of z_j where v_j = 1. The parent is x_t exactly
    when u^T M v has a witness through column j.
    Returns (graph, script lines, matrix).
    """
    if min(n1, n2, n3) < 1:
        raise ValueError("n1, n2, n3 must be positive")
    s = 1
    xs = list(range(2, n3 + 3))
    ys = list(range(n3 + 3, n3 + 3 + n1))
    zs = list(range(n3 + 3 + n1, n3 + 3 + n1 + n2))
    g = Digraph(zs[-1])
    g.add_edge(s, xs[0])
    for a, b in zip(xs, xs[1:]):
        g.add_edge(a, b)
    for z in zs:
        g.add_edge(xs[-1], z)
    for x in xs[:-1]:
        for y in ys:
            g.add_edge(x, y)
    M = [[rng.random() < density for _ in zs] for _ in ys]
    for i, y in enumerate(ys):
        for j, z in enumerate(zs):
            if M[i][j]:
                g.add_edge(y, z)
    script = [f"source {s}"]
    kept: list[int] = []
    for t in range(n3):
        script.extend(f"del {xs[t - 1]} {y}" for y in kept)
        u = [rng.random() < 0.5 for _ in ys]
        v = [rng.random() < 0.5 for _ in zs]
        script.extend(f"del {xs[t]} {y}" for y, keep in zip(ys, u) if not keep)
        kept = [y for y, keep in zip(ys, u) if keep]
        script.extend(f"parent {z}" for z, ask in zip(zs, v) if ask)
    return g, script, M
