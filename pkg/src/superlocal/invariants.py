"""Degree-clique colouring bounds.

Global, local, and superlocal variants for simple graphs, the
nine-expression edge bound for multigraphs, the clique-average bound,
and the subgraph-neighbourhood-average bound. All values are exact
rationals or integers; no floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SizeLimitError
from .graphs import line_graph
from .stable_sets import maximal_cliques

SUBGRAPH_SCAN_LIMIT = 12


def _max_clique_size(adj, mask):
    """Largest clique inside the vertex mask, branch and bound."""
    best = 0

    def expand(size, p):
        nonlocal best
        if size + p.bit_count() <= best:
            return
        if p == 0:
            best = max(best, size)
            return
        while p:
            if size + p.bit_count() <= best:
                return
            b = p & -p
            v = b.bit_length() - 1
            expand(size + 1, p & adj[v])
            p ^= b

    expand(0, mask)
    return best


def clique_number(g):
    if g.n == 0:
        return 0
    adj = [g.adj_mask(v) for v in range(g.n)]
    return _max_clique_size(adj, (1 << g.n) - 1)


def omega_v(g, v):
    """Size of the largest clique containing v."""
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} out of range")
    adj = [g.adj_mask(u) for u in range(g.n)]
    return 1 + _max_clique_size(adj, adj[v])


def gamma_l_prime_vertex(g, v):
    """(d(v) + 1 + omega(v)) / 2, the per-vertex local bound."""
    return Fraction(g.degree(v) + 1 + omega_v(g, v), 2)


def gamma_l_prime_induced(g, v):
    """Same bound computed as the global bound of the closed neighbourhood.

    Coincides with gamma_l_prime_vertex because the closed neighbourhood
    has maximum degree d(v) and clique number omega(v); kept as an
    independent route for cross-checking.
    """
    from .graphs import induced_subgraph

    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} out of range")
    sub, _ = induced_subgraph(g, (v,) + g.neighbours(v))
    delta = max(sub.degree(u) for u in range(sub.n))
    return Fraction(delta + 1 + clique_number(sub), 2)


def gamma_ll_prime_edge(g, u, v):
    """(d(u) + d(v) + omega(u) + omega(v) + 2) / 4 for an edge uv."""
    if not g.has_edge(u, v):
        raise DomainError(f"({u},{v}) is not an edge")
    return Fraction(g.degree(u) + g.degree(v) + omega_v(g, u) + omega_v(g, v) + 2, 4)


def gamma_ll_prime(g):
    """Max of the per-edge bound; 1 on an edgeless nonempty graph, 0 on the empty graph."""
    if g.n == 0:
        return Fraction(0)
    if not g.edges:
        return Fraction(1)
    om = [omega_v(g, v) for v in range(g.n)]
    return max(
        Fraction(g.degree(u) + g.degree(v) + om[u] + om[v] + 2, 4) for u, v in g.edges
    )


def gamma_ll(g):
    return math.ceil(gamma_ll_prime(g))


@dataclass(frozen=True)
class VertexBounds:
    degree: tuple
    omega: tuple
    gamma_l_prime: tuple


def vertex_bounds(g):
    deg = tuple(g.degree(v) for v in range(g.n))
    om = tuple(omega_v(g, v) for v in range(g.n))
    glp = tuple(Fraction(deg[v] + 1 + om[v], 2) for v in range(g.n))
    return VertexBounds(degree=deg, omega=om, gamma_l_prime=glp)


@dataclass(frozen=True)
class GraphBounds:
    delta: int
    omega: int
    gamma_prime: Fraction
    gamma: int
    gamma_l_prime: Fraction
    gamma_l: int
    gamma_ll_prime: Fraction
    gamma_ll: int


def graph_bounds(g):
    if g.n == 0:
        z = Fraction(0)
        return GraphBounds(0, 0, z, 0, z, 0, z, 0)
    vb = vertex_bounds(g)
    delta = max(vb.degree)
    omega = max(vb.omega)
    gp = Fraction(delta + 1 + omega, 2)
    glp = max(vb.gamma_l_prime)
    gllp = gamma_ll_prime(g)
    return GraphBounds(
        delta=delta,
        omega=omega,
        gamma_prime=gp,
        gamma=math.ceil(gp),
        gamma_l_prime=glp,
        gamma_l=math.ceil(glp),
        gamma_ll_prime=gllp,
        gamma_ll=math.ceil(gllp),
    )


def t_value(mg, u, v):
    """max over common neighbours w of mu(uv) + mu(uw) + mu(vw); 0 without one."""
    base = mg.mu(u, v)
    if base == 0:
        raise DomainError(f"({u},{v}) is not an edge")
    best = 0
    for w in mg.neighbours(u):
        if w != v and mg.mu(v, w) > 0:
            best = max(best, base + mg.mu(u, w) + mg.mu(v, w))
    return best


def nine_expressions(mg, u, v, w, t_uv=None, t_vw=None):
    """The nine candidate values for the edge pair (uv, vw) with midpoint v."""
    du, dv, dw = mg.degree(u), mg.degree(v), mg.degree(w)
    mu_uv, mu_vw = mg.mu(u, v), mg.mu(v, w)
    if mu_uv == 0 or mu_vw == 0:
        raise DomainError("nine_expressions needs two edges sharing the midpoint")
    tuv = t_value(mg, u, v) if t_uv is None else t_uv
    tvw = t_value(mg, v, w) if t_vw is None else t_vw
    h = Fraction(1, 2)
    left = (du + h * (dv - mu_uv), dv + h * (du - mu_uv), h * (du + dv - mu_uv + tuv))
    right = (dv + h * (dw - mu_vw), dw + h * (dv - mu_vw), h * (dv + dw - mu_vw + tvw))
    return tuple(a + b for a in left for b in right)


def gamma_bar_ll(mg):
    """Ceiling of half the max of the nine expressions over adjacent edge pairs."""
    if mg.edge_count == 0:
        raise DomainError("edge bound undefined on an edgeless multigraph")
    if mg.edge_count == 1:
        return 1
    t_cache = {}

    def t_of(a, b):
        key = (a, b) if a < b else (b, a)
        if key not in t_cache:
            t_cache[key] = t_value(mg, a, b)
        return t_cache[key]

    best = Fraction(0)
    for v in range(mg.n):
        ids = mg.incident(v)
        for e1 in ids:
            a, b = mg.endpoints(e1)
            u = b if a == v else a
            for e2 in ids:
                if e2 == e1:
                    continue
                a, b = mg.endpoints(e2)
                w = b if a == v else a
                exprs = nine_expressions(mg, u, v, w, t_uv=t_of(u, v), t_vw=t_of(v, w))
                best = max(best, max(exprs))
    if best == 0:
        # no two edges share an endpoint: the line graph is edgeless
        return 1
    return math.ceil(best / 2)


def gamma_bar_ll_via_line_graph(mg):
    """Independent route: the superlocal bound of the line graph."""
    if mg.edge_count == 0:
        raise DomainError("edge bound undefined on an edgeless multigraph")
    return gamma_ll(line_graph(mg))


def clique_average_bound(g):
    """Max over maximal cliques of the average per-vertex local bound."""
    if g.n == 0:
        raise DomainError("clique average needs a nonempty vertex set")
    vb = vertex_bounds(g)
    best = Fraction(0)
    # no size refusal here: the scan is over the graph's own cliques
    for clique in maximal_cliques(g, limit=max(g.n, 1)):
        avg = Fraction(sum(vb.gamma_l_prime[v] for v in clique), len(clique))
        best = max(best, avg)
    return best


def neighbourhood_average(g, v):
    """Average of gamma_l_prime over the closed neighbourhood of v."""
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} out of range")
    members = (v,) + g.neighbours(v)
    total = sum(gamma_l_prime_vertex(g, u) for u in members)
    return Fraction(total, len(members))


def subgraph_neighbourhood_bound(g, limit=SUBGRAPH_SCAN_LIMIT):
    """Max closed-neighbourhood average over all nonempty induced subgraphs.

    Scans all 2^n - 1 subgraphs, so refuses above the limit.
    """
    if g.n > limit:
        raise SizeLimitError(
            f"subgraph scan limited to {limit} vertices, got {g.n}"
        )
    if g.n == 0:
        raise DomainError("bound needs a nonempty vertex set")
    adj = [g.adj_mask(v) for v in range(g.n)]
    best = Fraction(0)
    for mask in range(1, 1 << g.n):
        # per-vertex degree and clique number inside the induced subgraph
        glp = {}
        m = mask
        while m:
            b = m & -m
            v = b.bit_length() - 1
            nv = adj[v] & mask
            glp[v] = Fraction(nv.bit_count() + 2 + _max_clique_size(adj, nv), 2)
            m ^= b
        for v in glp:
            nv = adj[v] & mask
            total = glp[v]
            cnt = 1
            mm = nv
            while mm:
                b = mm & -mm
                total += glp[b.bit_length() - 1]
                cnt += 1
                mm ^= b
            best = max(best, Fraction(total, cnt))
    return best
