"""Uniform hypergraphs and their structural queries.

Vertices are labeled 0..n-1.  Edges are stored as sorted tuples of vertex
indices; the edge list itself is sorted lexicographically, so two equal
hypergraphs compare equal as values.  All operations are pure functions of
immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import CapacityError, InvalidArgumentError

VertexSet = frozenset[int]

#: Largest n for which canonical_form will run (n! search with pruning).
CANON_CAP = 12


def mask_of(vertices: Iterable[int]) -> int:
    """Pack a collection of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of vertex indices."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph on vertices 0..n-1 with a set of edges.

    Edges are deduplicated and normalized on construction.  Empty edges are
    rejected; isolated vertices are permitted and count toward n.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise InvalidArgumentError(f"vertex count must be >= 0, got {n}")
        norm = set()
        for e in edges:
            t = tuple(sorted(set(e)))
            if not t:
                raise InvalidArgumentError("empty edges are not allowed")
            if t[0] < 0 or t[-1] >= n:
                raise InvalidArgumentError(
                    f"edge {t} has a vertex outside 0..{n - 1}")
            norm.add(t)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Number of edges containing v."""
        if not 0 <= v < self.n:
            raise InvalidArgumentError(f"vertex {v} out of range 0..{self.n - 1}")
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        degs = [0] * self.n
        for e in self.edges:
            for v in e:
                degs[v] += 1
        return degs

    def uniformity(self) -> int | None:
        """Common edge size r, or None if edges have mixed sizes or there are none."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def regularity(self) -> int | None:
        """Common vertex degree d, or None if degrees differ (needs n >= 1)."""
        if self.n == 0:
            return None
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def is_independent(self, s: Iterable[int] | int) -> bool:
        """True iff no edge is fully contained in s."""
        smask = s if isinstance(s, int) else mask_of(s)
        if smask >> self.n:
            raise InvalidArgumentError("subset contains out-of-range vertices")
        return all(em & smask != em for em in self.edge_masks)

    def link(self, v: int) -> "Link":
        """The (r-1)-graph of edge remainders {e - {v} : v in e}.

        Vertex labels are preserved; the span of the remainders is reported
        alongside the graph.
        """
        if not 0 <= v < self.n:
            raise InvalidArgumentError(f"vertex {v} out of range 0..{self.n - 1}")
        r = self.uniformity()
        if r is None or r < 2:
            raise InvalidArgumentError(
                "link requires an r-uniform hypergraph with r >= 2")
        rem = [tuple(u for u in e if u != v) for e in self.edges if v in e]
        span = frozenset(u for e in rem for u in e)
        return Link(graph=Hypergraph(self.n, rem), span=span)

    def component_masks(self) -> list[int]:
        """Bitmasks of the vertex sets of connected components (edge-connectivity).

        Isolated vertices form singleton components.
        """
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            for u in e[1:]:
                ra, rb = find(e[0]), find(u)
                if ra != rb:
                    parent[rb] = ra
        comps: dict[int, int] = {}
        for v in range(self.n):
            root = find(v)
            comps[root] = comps.get(root, 0) | (1 << v)
        return [comps[k] for k in sorted(comps)]

    def restrict(self, vertices: Iterable[int]) -> "Hypergraph":
        """Relabel the induced sub-hypergraph on `vertices` to 0..k-1.

        Keeps only edges fully contained in `vertices`.
        """
        verts = sorted(set(vertices))
        relabel = {v: i for i, v in enumerate(verts)}
        keep = [tuple(relabel[u] for u in e) for e in self.edges
                if all(u in relabel for u in e)]
        return Hypergraph(len(verts), keep)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class Link:
    """A vertex link: the remainder graph plus the span of its edges."""

    graph: Hypergraph
    span: VertexSet

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return self.graph.edges

    def is_matching(self) -> bool:
        seen = 0
        for em in self.graph.edge_masks:
            if em & seen:
                return False
            seen |= em
        return True


@dataclass(frozen=True)
class QuasiBipartition:
    """Certificate that a hypergraph is quasi-bipartite.

    Every edge meets a_side in exactly one vertex, and each a_side vertex's
    link is a matching (its edges are pairwise disjoint).
    """

    a_side: VertexSet
    b_side: VertexSet
    link_matchings: dict[int, tuple[tuple[int, ...], ...]] = field(hash=False)

    def verify(self, g: Hypergraph) -> bool:
        """Re-check both conditions from scratch against g."""
        if self.a_side | self.b_side != frozenset(range(g.n)):
            return False
        if self.a_side & self.b_side:
            return False
        for e in g.edges:
            if sum(1 for v in e if v in self.a_side) != 1:
                return False
        for a in self.a_side:
            lk = g.link(a)
            if not lk.is_matching():
                return False
            if self.link_matchings.get(a, ()) != lk.edges:
                return False
        return True


def quasi_bipartition(g: Hypergraph) -> QuasiBipartition | None:
    """Search for an (A, B) partition satisfying both quasi-bipartite conditions.

    Exact backtracking over per-edge A-representative choices: assigning an
    edge's A-vertex forces all its other vertices into B.  Edges are processed
    in lexicographic order and representatives tried in increasing vertex
    order, so the certificate returned is deterministic.  Returns None when no
    valid partition exists.
    """
    r = g.uniformity()
    if g.num_edges and (r is None or r < 2):
        raise InvalidArgumentError(
            "quasi_bipartition requires an r-uniform hypergraph with r >= 2")

    side: list[str | None] = [None] * g.n
    edges = g.edges

    def complete() -> QuasiBipartition | None:
        a_side = frozenset(v for v in range(g.n) if side[v] == "A")
        b_side = frozenset(range(g.n)) - a_side
        matchings = {}
        for a in a_side:
            lk = g.link(a)
            if not lk.is_matching():
                return None
            matchings[a] = lk.edges
        cert = QuasiBipartition(a_side, b_side, matchings)
        return cert if cert.verify(g) else None

    def backtrack(i: int) -> QuasiBipartition | None:
        if i == len(edges):
            return complete()
        e = edges[i]
        a_here = [v for v in e if side[v] == "A"]
        if len(a_here) > 1:
            return None
        reps = a_here if a_here else [v for v in e if side[v] is None]
        for rep in reps:
            changes = []
            ok = True
            if side[rep] is None:
                side[rep] = "A"
                changes.append(rep)
            for v in e:
                if v == rep:
                    continue
                if side[v] == "A":
                    ok = False
                    break
                if side[v] is None:
                    side[v] = "B"
                    changes.append(v)
            if ok:
                found = backtrack(i + 1)
                if found is not None:
                    return found
            for v in changes:
                side[v] = None
        return None

    return backtrack(0)


def disjoint_union(gs: Iterable[Hypergraph]) -> Hypergraph:
    """Concatenate hypergraphs, relabeling each block by a vertex offset."""
    n = 0
    edges: list[tuple[int, ...]] = []
    for g in gs:
        edges.extend(tuple(v + n for v in e) for e in g.edges)
        n += g.n
    return Hypergraph(n, edges)


def canonical_form(g: Hypergraph, cap: int | None = None) -> Hypergraph:
    """A canonical representative of g's isomorphism class.

    Searches over vertex relabelings, assigning new labels 0..n-1 one at a
    time; an edge is emitted the moment its last vertex is labeled, which
    gives the search a comparable prefix at every depth and allows
    first-difference pruning.  Two hypergraphs are isomorphic iff their
    canonical forms are equal.
    """
    cap = CANON_CAP if cap is None else cap
    if g.n > cap:
        raise CapacityError(f"canonical_form capped at n <= {cap}, got n = {g.n}")
    n = g.n
    m = len(g.edges)
    edge_sets = [frozenset(e) for e in g.edges]
    # incident[v] = indices of edges containing v
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, e in enumerate(edge_sets):
        for v in e:
            incident[v].append(i)

    # Sequence entries are (-row_size, row): closing many small-label edges
    # early is preferred, which keeps the tie plateaus short on sparse inputs.
    best_seq: list | None = None
    best_edges: tuple | None = None
    new_label: dict[int, int] = {}

    def dfs(pos: int, seq: list, closed: int) -> None:
        nonlocal best_seq, best_edges
        if closed == m:
            # remaining vertices only ever add empty rows; any order ties
            tail = [(0, ())] * (n - pos)
            full = seq + tail
            if best_seq is None or full < best_seq:
                best_seq = full
                best_edges = tuple(t for _, row in seq for t in row)
            return
        for u in range(n):
            if u in new_label:
                continue
            new_label[u] = pos
            row = []
            for i in incident[u]:
                e = edge_sets[i]
                if all(w in new_label for w in e):
                    row.append(tuple(sorted(new_label[w] for w in e)))
            row.sort()
            seq.append((-len(row), tuple(row)))
            if best_seq is None or seq <= best_seq[: pos + 1]:
                dfs(pos + 1, seq, closed + len(row))
            seq.pop()
            del new_label[u]

    dfs(0, [], 0)
    assert best_edges is not None
    return Hypergraph(n, best_edges)
