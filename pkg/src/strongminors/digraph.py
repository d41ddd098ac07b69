"""Immutable digraph/tournament core: connectivity, BFS layers, acyclic sets.

Vertices are 0-indexed integers.  Vertex sets travel internally as Python
ints used as bitmasks (bit v set <=> vertex v in the set), which keeps the
exhaustive searches elsewhere in the package cheap; public APIs accept and
return ordinary collections.

All types are frozen dataclasses, safe to share across threads; every
operation is a pure function of its arguments.  Ties (vertex choices, BFS
sibling order, insertion scans) are always broken by ascending vertex id,
so results are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional


class InternalInvariantError(RuntimeError):
    """A property the algorithms rely on failed: a bug, not bad input."""


# ---------------------------------------------------------------------------
# bitmask helpers

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# ---------------------------------------------------------------------------
# graph types

@dataclass(frozen=True)
class Digraph:
    """Loop-free simple directed graph; digons allowed.

    `edges` is a frozenset of ordered pairs (u, v) with u != v and
    0 <= u, v < n.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vertex count")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        m = [0] * self.n
        for u, v in self.edges:
            m[u] |= 1 << v
        return tuple(m)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        m = [0] * self.n
        for u, v in self.edges:
            m[v] |= 1 << u
        return tuple(m)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.out_masks[u] >> v) & 1 == 1

    def out_neighbors(self, v: int, within: int | None = None) -> list[int]:
        m = self.out_masks[v]
        if within is not None:
            m &= within
        return list(bits(m))

    def in_neighbors(self, v: int, within: int | None = None) -> list[int]:
        m = self.in_masks[v]
        if within is not None:
            m &= within
        return list(bits(m))

    def out_degree(self, v: int) -> int:
        return self.out_masks[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    def min_out_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty digraph")
        return min(m.bit_count() for m in self.out_masks)

    def has_digon(self) -> bool:
        return any((v, u) in self.edges for u, v in self.edges)

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", list[int]]:
        """Relabelled induced subdigraph plus the new->old vertex map."""
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        sub = frozenset(
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos
        )
        return type(self)(len(old), sub), old

    def reverse(self) -> "Digraph":
        return type(self)(self.n, frozenset((v, u) for u, v in self.edges))


@dataclass(frozen=True)
class Tournament(Digraph):
    """Digraph with exactly one edge per unordered vertex pair (no digons)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if 2 * len(self.edges) != self.n * (self.n - 1):
            raise ValueError("edge count does not match a tournament")
        for u, v in self.edges:
            if (v, u) in self.edges:
                raise ValueError(f"digon between {u} and {v}")


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly-connected components in condensation-topological order.

    Every edge between distinct parts goes from an earlier part to a
    later part.
    """

    parts: tuple[frozenset[int], ...]

    @property
    def source_set(self) -> frozenset[int]:
        """Union of all parts but the last."""
        out: set[int] = set()
        for p in self.parts[:-1]:
            out |= p
        return frozenset(out)

    @property
    def sink_set(self) -> frozenset[int]:
        return self.parts[-1]


@dataclass(frozen=True)
class BfsTree:
    """Shortest-path tree of a strongly-connected digraph.

    direction "out": layer(w) = dist(root, w), parent edges point away from
    the root (edge (parent(w), w) exists).  direction "in": layer(w) =
    dist(w, root), parent edges point toward the root (edge (w, parent(w))).
    """

    root: int
    direction: str
    parent: dict[int, int]
    layer: dict[int, int]

    @cached_property
    def layers(self) -> tuple[frozenset[int], ...]:
        depth = max(self.layer.values())
        out: list[set[int]] = [set() for _ in range(depth + 1)]
        for v, i in self.layer.items():
            out[i].add(v)
        return tuple(frozenset(s) for s in out)

    def path_from_root(self, v: int) -> tuple[int, ...]:
        """Directed root->v path (requires direction == "out")."""
        if self.direction != "out":
            raise ValueError("path_from_root needs an out-tree")
        rev = [v]
        while rev[-1] != self.root:
            rev.append(self.parent[rev[-1]])
        return tuple(reversed(rev))

    def path_to_root(self, v: int) -> tuple[int, ...]:
        """Directed v->root path (requires direction == "in")."""
        if self.direction != "in":
            raise ValueError("path_to_root needs an in-tree")
        out = [v]
        while out[-1] != self.root:
            out.append(self.parent[out[-1]])
        return tuple(out)


@dataclass(frozen=True)
class AcyclicSet:
    """Vertex set whose induced subdigraph is acyclic, with a witness order.

    Every induced edge goes forward in `order`.  In a tournament the order
    is the unique transitive order; order[0] is the source and order[-1]
    the sink.
    """

    vertices: frozenset[int]
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if frozenset(self.order) != self.vertices:
            raise ValueError("order does not enumerate the vertex set")

    @property
    def source(self) -> int:
        return self.order[0]

    @property
    def sink(self) -> int:
        return self.order[-1]


# ---------------------------------------------------------------------------
# strongly-connected components

def _scc_masks(d: Digraph, active: int) -> list[int]:
    """Tarjan over the vertices of `active`; parts in topological order."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[int] = []
    counter = 0

    for root in bits(active):
        if root in index:
            continue
        work: list[tuple[int, Iterator[int]]] = [
            (root, bits(d.out_masks[root] & active))
        ]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, bits(d.out_masks[w] & active)))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = 0
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp |= 1 << w
                    if w == v:
                        break
                comps.append(comp)
    comps.reverse()  # Tarjan emits sinks first
    return comps


def scc_decompose(d: Digraph) -> SccDecomposition:
    """Partition into strongly-connected parts, all inter-part edges forward."""
    if d.n == 0:
        raise ValueError("empty digraph")
    parts = tuple(frozenset(bits(m)) for m in _scc_masks(d, d.full_mask))
    return SccDecomposition(parts)


def _reach_mask(adj: tuple[int, ...], start: int, active: int) -> int:
    """All vertices of `active` reachable from bit `start` along adj."""
    seen = (1 << start) & active
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= active & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _is_sc_mask(d: Digraph, mask: int) -> bool:
    if mask == 0:
        return False
    v = lowest_bit(mask)
    if _reach_mask(d.out_masks, v, mask) != mask:
        return False
    return _reach_mask(d.in_masks, v, mask) == mask


def is_strongly_connected(d: Digraph) -> bool:
    if d.n == 0:
        raise ValueError("empty digraph")
    return _is_sc_mask(d, d.full_mask)


# ---------------------------------------------------------------------------
# vertex connectivity (Menger via vertex-split max-flow)

def _min_vertex_cut(d: Digraph, s: int, t: int, limit: int) -> tuple[int, Optional[frozenset[int]]]:
    """Size of a minimum s->t vertex cut, capped at `limit`.

    Requires (s, t) not an edge.  Returns (limit, None) when the local
    connectivity is at least `limit`, else (size, cut) with size < limit.
    Split nodes: in(v) = 2v, out(v) = 2v + 1.
    """
    if d.has_edge(s, t):
        raise ValueError("cut undefined across an existing edge")
    n = d.n
    big = n + 1
    size = 2 * n
    cap = [[0] * size for _ in range(size)]
    adj: list[list[int]] = [[] for _ in range(size)]

    def add(a: int, b: int, c: int) -> None:
        if b not in adj[a]:
            adj[a].append(b)
        if a not in adj[b]:
            adj[b].append(a)
        cap[a][b] += c

    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in sorted(d.edges):
        add(2 * u + 1, 2 * v, big)
    for lst in adj:
        lst.sort()

    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        parent = {src: src}
        q = deque([src])
        while q and snk not in parent:
            a = q.popleft()
            for b in adj[a]:
                if b not in parent and cap[a][b] > 0:
                    parent[b] = a
                    q.append(b)
        if snk not in parent:
            break
        # every augmenting path crosses a unit vertex arc
        b = snk
        while b != src:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    if flow >= limit:
        return limit, None
    reach = {src}
    q = deque([src])
    while q:
        a = q.popleft()
        for b in adj[a]:
            if b not in reach and cap[a][b] > 0:
                reach.add(b)
                q.append(b)
    cut = frozenset(
        v for v in range(n)
        if v not in (s, t) and 2 * v in reach and 2 * v + 1 not in reach
    )
    if len(cut) != flow:
        raise InternalInvariantError("flow/cut mismatch")
    return flow, cut


def is_k_strongly_connected(d: Digraph, k: int) -> bool:
    """At least k+1 vertices and still strongly connected after deleting
    any k-1 of them."""
    if k < 1:
        raise ValueError("k must be positive")
    if d.n < k + 1:
        return False
    if not is_strongly_connected(d):
        return False
    for s in range(d.n):
        for t in range(d.n):
            if s == t or d.has_edge(s, t):
                continue
            size, _ = _min_vertex_cut(d, s, t, k)
            if size < k:
                return False
    return True


def is_k_strongly_connected_bruteforce(d: Digraph, k: int) -> bool:
    """Exhaustive-subset cross-check of is_k_strongly_connected (tiny n only)."""
    from itertools import combinations

    if k < 1:
        raise ValueError("k must be positive")
    if d.n < k + 1:
        return False
    verts = range(d.n)
    for size in range(0, k):
        for removed in combinations(verts, size):
            rest = d.full_mask & ~mask_of(removed)
            if not _is_sc_mask(d, rest):
                return False
    return True


def smallest_cut_set(d: Digraph, max_size: int) -> Optional[frozenset[int]]:
    """Smallest X with |X| <= max_size whose removal leaves a non
    strongly-connected digraph, or None if no such X exists.

    The empty set qualifies when the digraph itself is not strongly
    connected.
    """
    if d.n == 0:
        raise ValueError("empty digraph")
    if not is_strongly_connected(d):
        return frozenset()
    best: Optional[frozenset[int]] = None
    best_size = max_size + 1
    for s in range(d.n):
        for t in range(d.n):
            if s == t or d.has_edge(s, t):
                continue
            size, cut = _min_vertex_cut(d, s, t, best_size)
            if cut is not None and size < best_size:
                best, best_size = cut, size
                if best_size == 1:
                    return best
    return best


# ---------------------------------------------------------------------------
# BFS trees and shortest paths

def bfs_tree(d: Digraph, root: int, direction: str, within: Iterable[int] | None = None) -> BfsTree:
    """Layered shortest-path tree; errors when some vertex is unreachable."""
    if direction not in ("out", "in"):
        raise ValueError("direction must be 'out' or 'in'")
    active = d.full_mask if within is None else mask_of(within)
    if not (active >> root) & 1:
        raise ValueError("root outside the active vertex set")
    adj = d.out_masks if direction == "out" else d.in_masks
    parent: dict[int, int] = {}
    layer: dict[int, int] = {root: 0}
    q = deque([root])
    while q:
        v = q.popleft()
        for w in bits(adj[v] & active):
            if w not in layer:
                layer[w] = layer[v] + 1
                parent[w] = v
                q.append(w)
    if len(layer) != active.bit_count():
        raise ValueError("not strongly connected")
    return BfsTree(root=root, direction=direction, parent=parent, layer=layer)


def shortest_path(d: Digraph, frm: int, to: int, within: Iterable[int] | None = None) -> tuple[int, ...]:
    """Minimal-length directed path, ties broken by ascending vertex id.

    In a tournament every edge between path vertices at path distance >= 2
    is oriented backwards; this is checked before returning.
    """
    path = _shortest_path_to_set(d, frm, {to}, within)
    if path is None:
        raise ValueError(f"{to} not reachable from {frm}")
    if isinstance(d, Tournament):
        for i in range(len(path)):
            for j in range(i + 2, len(path)):
                if not d.has_edge(path[j], path[i]):
                    raise InternalInvariantError(
                        "shortest tournament path with a forward chord"
                    )
    return path


def _shortest_path_to_set(
    d: Digraph, frm: int, targets: Iterable[int], within: Iterable[int] | None = None
) -> Optional[tuple[int, ...]]:
    active = d.full_mask if within is None else mask_of(within)
    goal = mask_of(targets) & active
    if not (active >> frm) & 1:
        raise ValueError("start vertex outside the active set")
    if (goal >> frm) & 1:
        return (frm,)
    parent: dict[int, int] = {frm: frm}
    q = deque([frm])
    while q:
        v = q.popleft()
        for w in bits(d.out_masks[v] & active):
            if w in parent:
                continue
            parent[w] = v
            if (goal >> w) & 1:
                rev = [w]
                while rev[-1] != frm:
                    rev.append(parent[rev[-1]])
                return tuple(reversed(rev))
            q.append(w)
    return None


# ---------------------------------------------------------------------------
# insertion-maximal acyclic sets

def _valid_positions(d: Digraph, order: list[int], v: int, lo: int, hi: int) -> Optional[int]:
    """Lowest position in [lo, hi] where v can be inserted keeping all
    induced edges forward, or None."""
    out_v = d.out_masks[v]
    in_v = d.in_masks[v]
    prefix = 0
    suffix = mask_of(order)
    pos = 0
    for pos in range(0, hi + 1):
        if pos >= lo and (out_v & prefix) == 0 and (in_v & suffix) == 0:
            return pos
        if pos < len(order):
            b = 1 << order[pos]
            prefix |= b
            suffix &= ~b
    return None


def _insertion_maximal(
    d: Digraph,
    start_order: list[int],
    candidates: Iterable[int],
    min_pos: int = 0,
    keep_last: bool = False,
) -> list[int]:
    """Grow `start_order` by repeated first-fit insertion until no candidate
    fits anywhere in the allowed position range."""
    order = list(start_order)
    cand = sorted(set(candidates) - set(order))
    changed = True
    while changed:
        changed = False
        for v in list(cand):
            hi = len(order) - 1 if keep_last else len(order)
            if hi < min_pos:
                continue
            pos = _valid_positions(d, order, v, min_pos, hi)
            if pos is not None:
                order.insert(pos, v)
                cand.remove(v)
                changed = True
    return order


def maximal_acyclic_set(
    d: Digraph,
    seed_order: Iterable[int] | None = None,
    within: Iterable[int] | None = None,
) -> AcyclicSet:
    """Insertion-maximal acyclic set: no outside vertex fits at any position
    of the returned order.

    In a tournament this means every outside vertex has both an in-neighbour
    and an out-neighbour inside the set.
    """
    if d.n == 0:
        raise ValueError("empty digraph")
    active = sorted(bits(d.full_mask if within is None else mask_of(within)))
    if not active:
        raise ValueError("empty vertex selection")
    cand = list(seed_order) if seed_order is not None else active
    if sorted(cand) != active:
        raise ValueError("seed_order must enumerate the active vertices")
    order = _insertion_maximal(d, [], cand)
    return AcyclicSet(frozenset(order), tuple(order))


def maximal_acyclic_set_with_sink(
    t: Tournament, sink: int, within: Iterable[int] | None = None
) -> AcyclicSet:
    """Insertion-maximal transitive set whose order ends at `sink`."""
    active = t.full_mask if within is None else mask_of(within)
    if not (active >> sink) & 1:
        raise ValueError("sink outside the active vertex set")
    cand = [v for v in bits(active) if v != sink]
    order = _insertion_maximal(t, [sink], cand, keep_last=True)
    return AcyclicSet(frozenset(order), tuple(order))


def is_forward_order(d: Digraph, order: Iterable[int]) -> bool:
    """True when every induced edge goes forward in `order`."""
    seq = list(order)
    pos = {v: i for i, v in enumerate(seq)}
    if len(pos) != len(seq):
        return False
    for u, v in d.edges:
        if u in pos and v in pos and pos[u] > pos[v]:
            return False
    return True


def is_acyclic_set(d: Digraph, vertices: Iterable[int]) -> bool:
    """True when the induced subdigraph has no directed cycle (Kahn)."""
    active = mask_of(vertices)
    indeg = {v: (d.in_masks[v] & active).bit_count() for v in bits(active)}
    q = deque(sorted(v for v, c in indeg.items() if c == 0))
    seen = 0
    while q:
        v = q.popleft()
        seen += 1
        for w in bits(d.out_masks[v] & active):
            indeg[w] -= 1
            if indeg[w] == 0:
                q.append(w)
    return seen == active.bit_count()


# ---------------------------------------------------------------------------
# domination

def dominates(d: Digraph, s: Iterable[int], mode: str) -> bool:
    """out: every outside vertex has an in-neighbour in S; in: an
    out-neighbour; both: the conjunction."""
    if mode not in ("out", "in", "both"):
        raise ValueError("mode must be 'out', 'in' or 'both'")
    s_mask = mask_of(s)
    outside = d.full_mask & ~s_mask
    for v in bits(outside):
        if mode in ("out", "both") and (d.in_masks[v] & s_mask) == 0:
            return False
        if mode in ("in", "both") and (d.out_masks[v] & s_mask) == 0:
            return False
    return True
