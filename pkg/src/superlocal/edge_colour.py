"""Constructive edge colouring at the nine-expression bound.

Vizing-style machinery: partial colourings with incremental missing
sets, maximal fans with witness chains, rotation, alternating-path
swaps, and the two-vertex fan sequence used when every relevant missing
set is pairwise disjoint. Situations the bound provably excludes raise
bug signals instead of being handled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InternalBugError
from .invariants import gamma_bar_ll


class PartialEdgeColouring:
    """Mutable proper partial colouring with per-vertex colour indexes."""

    def __init__(self, mg, k, assignment=None):
        if k < 0:
            raise DomainError("colour count must be nonnegative")
        self.mg = mg
        self.k = k
        self._col = {}
        self._at = [dict() for _ in range(mg.n)]
        self.stats = {}
        if assignment:
            for eid in sorted(assignment):
                self.assign(eid, assignment[eid])

    def copy(self):
        c = PartialEdgeColouring(self.mg, self.k)
        c._col = dict(self._col)
        c._at = [dict(d) for d in self._at]
        return c

    @property
    def assignment(self):
        return dict(self._col)

    def colour_of(self, eid):
        self.mg.endpoints(eid)
        return self._col.get(eid)

    def present(self, w):
        return set(self._at[w])

    def missing(self, w):
        return set(range(1, self.k + 1)) - set(self._at[w])

    def edge_at(self, w, colour):
        return self._at[w].get(colour)

    def assign(self, eid, colour):
        u, v = self.mg.endpoints(eid)
        if not 1 <= colour <= self.k:
            raise DomainError(f"colour {colour} outside 1..{self.k}")
        if eid in self._col:
            raise DomainError(f"edge {eid} already coloured")
        if colour in self._at[u] or colour in self._at[v]:
            raise DomainError(f"colour {colour} already present at an endpoint of edge {eid}")
        self._col[eid] = colour
        self._at[u][colour] = eid
        self._at[v][colour] = eid

    def unassign(self, eid):
        u, v = self.mg.endpoints(eid)
        if eid not in self._col:
            raise DomainError(f"edge {eid} is not coloured")
        colour = self._col.pop(eid)
        del self._at[u][colour]
        del self._at[v][colour]

    def is_complete(self):
        return len(self._col) == self.mg.edge_count

    def uncoloured(self):
        return tuple(e for e in range(self.mg.edge_count) if e not in self._col)

    def validate(self):
        """Recompute everything from the assignment; mismatch is a bug."""
        rebuilt = [dict() for _ in range(self.mg.n)]
        for eid, colour in self._col.items():
            if not 1 <= colour <= self.k:
                raise InternalBugError(f"edge {eid} carries colour {colour} outside 1..{self.k}")
            for w in self.mg.endpoints(eid):
                if colour in rebuilt[w]:
                    raise InternalBugError(
                        f"colour {colour} repeated at vertex {w} "
                        f"(edges {rebuilt[w][colour]} and {eid})"
                    )
                rebuilt[w][colour] = eid
        if rebuilt != self._at:
            raise InternalBugError("incremental colour index diverged from the assignment")
        return True


@dataclass(frozen=True)
class Fan:
    edge: int  # uncoloured edge
    hinge: int
    vertices: tuple  # distinct neighbours; vertices[0] is the edge's far endpoint
    edges: tuple  # edges[i] joins hinge to vertices[i]; edges[0] == edge
    witnesses: tuple  # witnesses[i] = (j < i, colour of edges[i] missing at vertices[j])


def _other(mg, eid, v):
    a, b = mg.endpoints(eid)
    return b if a == v else a


def _assign_or_bug(c, eid, colour, context):
    try:
        c.assign(eid, colour)
    except DomainError as exc:
        raise InternalBugError(f"{context}: {exc}") from exc


def build_maximal_fan(mg, c, e, hinge):
    """Greedy maximal fan; deterministic by ascending colour scans.

    Uncoloured edges other than e are treated as absent, so the fan
    lives in the already-inserted subgraph.
    """
    if c.colour_of(e) is not None:
        raise DomainError(f"edge {e} is already coloured")
    if hinge not in mg.endpoints(e):
        raise DomainError(f"vertex {hinge} is not an endpoint of edge {e}")
    v1 = _other(mg, e, hinge)
    vertices = [v1]
    edges = [e]
    witnesses = [None]
    in_fan = {v1}
    pool = {}  # colour -> earliest fan index missing it
    for colour in sorted(c.missing(v1)):
        pool.setdefault(colour, 0)
    while True:
        progressed = False
        for colour in sorted(pool):
            eid = c.edge_at(hinge, colour)
            if eid is None:
                continue
            w = _other(mg, eid, hinge)
            if w == hinge or w in in_fan:
                continue
            vertices.append(w)
            edges.append(eid)
            witnesses.append((pool[colour], colour))
            in_fan.add(w)
            for c2 in sorted(c.missing(w)):
                pool.setdefault(c2, len(vertices) - 1)
            progressed = True
            break
        if not progressed:
            break
    return Fan(
        edge=e,
        hinge=hinge,
        vertices=tuple(vertices),
        edges=tuple(edges),
        witnesses=tuple(witnesses),
    )


def rotate_fan(c, fan, j):
    """Move the uncoloured slot to the hinge edge of fan vertex j (1-based).

    Walks the witness chain from j back to the uncoloured edge; each
    hinge edge on the chain takes the witness colour of its successor.
    The hinge keeps the same present set.
    """
    if not 1 <= j <= len(fan.vertices):
        raise DomainError(f"rotation index {j} outside 1..{len(fan.vertices)}")
    cc = c.copy()
    if j == 1:
        return cc
    chain = [j - 1]
    while chain[-1] != 0:
        w = fan.witnesses[chain[-1]]
        if w is None:
            raise InternalBugError("witness chain broken: missing witness")
        chain.append(w[0])
    if cc.colour_of(fan.edges[chain[0]]) != fan.witnesses[chain[0]][1]:
        raise InternalBugError("witness chain broken: stale witness colour")
    cc.unassign(fan.edges[chain[0]])
    for m in range(len(chain) - 1):
        src, dst = chain[m], chain[m + 1]
        colour = fan.witnesses[src][1]
        if dst != 0:
            if cc.colour_of(fan.edges[dst]) != fan.witnesses[dst][1]:
                raise InternalBugError("witness chain broken: stale witness colour")
            cc.unassign(fan.edges[dst])
        _assign_or_bug(cc, fan.edges[dst], colour, "witness chain broken")
    cc.validate()
    return cc


def _walk_chain(c, a, b, start):
    """Vertices and edges of the maximal (a,b)-alternating path from start.

    start must miss at least one of the two colours, so the walk is a
    simple path; a revisited vertex means the colouring was broken.
    """
    follow = b if a in c.missing(start) else a
    vertices = [start]
    edges = []
    seen = {start}
    cur = start
    while True:
        eid = c.edge_at(cur, follow)
        if eid is None:
            return vertices, edges
        edges.append(eid)
        cur = _other(c.mg, eid, cur)
        if cur in seen:
            raise InternalBugError("alternating chain revisited a vertex")
        seen.add(cur)
        vertices.append(cur)
        follow = a if follow == b else b


def kempe_swap(c, a, b, start):
    """Exchange colours a and b along the alternating path from start."""
    if a == b:
        raise DomainError("swap needs two distinct colours")
    for colour in (a, b):
        if not 1 <= colour <= c.k:
            raise DomainError(f"colour {colour} outside 1..{c.k}")
    if not 0 <= start < c.mg.n:
        raise DomainError(f"vertex {start} out of range")
    miss = c.missing(start)
    if a not in miss and b not in miss:
        raise DomainError(f"vertex {start} misses neither colour {a} nor {b}")
    cc = c.copy()
    if a in miss and b in miss:
        return cc  # empty chain
    _, edges = _walk_chain(c, a, b, start)
    for eid in edges:
        cc.unassign(eid)
    for eid in edges:
        old = c.colour_of(eid)
        _assign_or_bug(cc, eid, b if old == a else a, "alternating swap collided")
    cc.validate()
    return cc


def _fresh_stats():
    return {
        "direct": 0,
        "rotation": 0,
        "kempe": 0,
        "sequence_steps": 0,
        "beta_swaps": 0,
    }


def _resolve_hole(mg, cur, hole, stats, forced_hinge=None):
    """Colour the hole edge, possibly moving it first; returns the colouring.

    Dispatch per state: direct colouring, fan rotation on a
    hinge/fan-vertex coincidence, alternating swap on a fan/fan
    coincidence, otherwise one fan-sequence transition. The step guard
    turns any latent non-termination into a bug signal.
    """
    budget = 4 * max(cur.k, 1) * mg.edge_count + 16
    steps = 0
    seq = None  # fan-sequence memory: alphas, previous hole, hinge for rebuild
    while True:
        steps += 1
        if steps > budget:
            raise InternalBugError(
                f"insertion exceeded {budget} steps at edge {hole}; "
                f"stats={stats}, uncoloured={cur.uncoloured()}"
            )
        u, v = mg.endpoints(hole)
        common = cur.missing(u) & cur.missing(v)
        if common:
            _assign_or_bug(cur, hole, min(common), "direct colouring collided")
            stats["direct"] += 1
            cur.validate()
            return cur

        if seq is not None:
            hinge = seq["hinge"]
        elif forced_hinge is not None:
            hinge = forced_hinge
            forced_hinge = None
        else:
            hinge = min(u, v)
        fan = build_maximal_fan(mg, cur, hole, hinge)
        ell = len(fan.vertices)
        if ell < 2:
            raise InternalBugError(
                f"maximal fan of size 1 at edge {hole}, hinge {hinge}: "
                "impossible at the nine-expression bound"
            )

        hinge_missing = cur.missing(hinge)
        for j in range(2, ell + 1):
            inter = hinge_missing & cur.missing(fan.vertices[j - 1])
            if inter:
                cur = rotate_fan(cur, fan, j)
                _assign_or_bug(cur, fan.edges[j - 1], min(inter), "rotation target collided")
                stats["rotation"] += 1
                cur.validate()
                return cur

        swap_pair = None
        for i in range(1, ell + 1):
            for j in range(i + 1, ell + 1):
                inter = cur.missing(fan.vertices[i - 1]) & cur.missing(fan.vertices[j - 1])
                if inter:
                    swap_pair = (fan.vertices[i - 1], fan.vertices[j - 1], min(inter))
                    break
            if swap_pair:
                break
        if swap_pair:
            vi, vj, gamma = swap_pair
            a = min(hinge_missing)
            chain_i, _ = _walk_chain(cur, a, gamma, vi)
            if hinge not in chain_i:
                cur = kempe_swap(cur, a, gamma, vi)
            else:
                chain_j, _ = _walk_chain(cur, a, gamma, vj)
                if hinge in chain_j:
                    raise InternalBugError(
                        "both alternating chains reached the hinge; "
                        "chains of one colour pair must be vertex-disjoint"
                    )
                cur = kempe_swap(cur, a, gamma, vj)
            stats["kempe"] += 1
            seq = None  # colours changed under the sequence's assumptions
            continue

        if ell > 2:
            raise InternalBugError(
                f"maximal fan of size {ell} with pairwise disjoint missing sets: "
                "impossible at the nine-expression bound"
            )

        # fan sequence: hole between v_prev and hinge, second fan vertex ahead
        v_prev = fan.vertices[0]
        v_next = fan.vertices[1]
        if seq is None:
            seq = {"alphas": [], "prev": None, "hinge": hinge}
        prev_missing = sorted(cur.missing(v_prev))
        if len(seq["alphas"]) >= 2:
            alpha = seq["alphas"][-2]
            if alpha not in prev_missing:
                raise InternalBugError(
                    f"forced colour {alpha} not missing at fan vertex {v_prev}"
                )
        else:
            alpha = prev_missing[0]

        eid_alpha = cur.edge_at(hinge, alpha)
        if eid_alpha is None:
            raise InternalBugError(f"colour {alpha} vanished from the hinge {hinge}")
        if _other(mg, eid_alpha, hinge) != v_next:
            raise InternalBugError(
                "the forced colour's hinge edge must end at the second fan vertex"
            )

        if seq["prev"] is not None:
            done = _try_beta_swap(
                mg, cur, hole, hinge, v_prev, v_next, alpha, eid_alpha, seq, stats
            )
            if done is not None:
                return done

        cur.unassign(eid_alpha)
        _assign_or_bug(cur, hole, alpha, "fan sequence transition collided")
        cur.validate()
        seq["alphas"].append(alpha)
        seq["prev"] = (hole, alpha, v_prev)
        seq["hinge"] = v_next
        hole = eid_alpha
        stats["sequence_steps"] += 1


def _try_beta_swap(mg, cur, hole, hinge, v_prev, v_next, alpha, eid_alpha, seq, stats):
    """Resolve by rolling back one transition and swapping a parallel edge.

    Needs a colour beta missing at the step-before vertex and at the
    vertex ahead, sitting on an edge parallel to the hole. Returns the
    finished colouring or None.
    """
    prev_hole, prev_alpha, prev_v = seq["prev"]
    if v_next == prev_v:
        return None  # the swap ahead would collide with the colouring behind
    for beta in sorted(cur.missing(prev_v)):
        if beta == alpha:
            continue
        eid_beta = cur.edge_at(hinge, beta)
        if eid_beta is None or _other(mg, eid_beta, hinge) != v_prev:
            continue
        if beta not in cur.missing(v_next):
            continue
        # roll back the previous transition
        cur.unassign(prev_hole)
        _assign_or_bug(cur, hole, prev_alpha, "rollback collided")
        # exchange the parallel beta edge with the forced-colour edge
        cur.unassign(eid_beta)
        cur.unassign(eid_alpha)
        _assign_or_bug(cur, eid_beta, alpha, "parallel swap collided")
        _assign_or_bug(cur, eid_alpha, beta, "parallel swap collided")
        _assign_or_bug(cur, prev_hole, beta, "freed colour collided")
        stats["beta_swaps"] += 1
        cur.validate()
        return cur
    return None


def fan_sequence_resolve(mg, c0, f0):
    """Run the insertion loop from a size-2 all-disjoint maximal fan."""
    if len(f0.vertices) != 2:
        raise DomainError(f"fan sequence needs a fan of size 2, got {len(f0.vertices)}")
    sets = [
        c0.missing(f0.hinge),
        c0.missing(f0.vertices[0]),
        c0.missing(f0.vertices[1]),
    ]
    for i in range(3):
        for j in range(i + 1, 3):
            if sets[i] & sets[j]:
                raise DomainError(
                    "fan sequence needs pairwise disjoint missing sets"
                )
    cur = c0.copy()
    stats = _fresh_stats()
    cur = _resolve_hole(mg, cur, f0.edge, stats, forced_hinge=f0.hinge)
    cur.validate()
    return cur


def edge_colour(mg, insertion_order=None):
    """Colour every edge with k equal to the nine-expression bound.

    Edges are inserted in listing order unless an explicit permutation
    of edge ids is given. Returns (k, colouring); colouring.stats counts
    how often each resolution case fired.
    """
    m = mg.edge_count
    if m == 0:
        raise DomainError("nothing to colour: the multigraph has no edges")
    if insertion_order is None:
        order = list(range(m))
    else:
        order = list(insertion_order)
        if sorted(order) != list(range(m)):
            raise DomainError("insertion order must be a permutation of all edge ids")
    k = gamma_bar_ll(mg)
    cur = PartialEdgeColouring(mg, k)
    stats = _fresh_stats()
    for eid in order:
        cur = _resolve_hole(mg, cur, eid, stats)
        cur.validate()
    if not cur.is_complete():
        raise InternalBugError(f"edges left uncoloured: {cur.uncoloured()}")
    cur.stats = stats
    return k, cur
