"""Exhaustive generation of d-regular r-uniform hypergraphs on n labeled
vertices, optionally up to isomorphism.

Backtracking over candidate r-subsets in lexicographic order while tracking
residual degrees; a branch is pruned as soon as some vertex cannot reach its
target degree from the remaining candidates.  Emission order is deterministic.
The search tree can be partitioned by first-edge prefix for work-splitting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from . import core
from .core import Hypergraph, canonical_form
from .errors import CapacityError, InvalidArgumentError


@dataclass(frozen=True)
class EnumSpec:
    """Parameters of an enumeration run: d-regular r-uniform on n vertices."""

    r: int
    d: int
    n: int
    up_to_iso: bool = False
    prefix: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.r < 1 or self.d < 0 or self.n < 0:
            raise InvalidArgumentError(
                f"need r >= 1, d >= 0, n >= 0, got r={self.r}, d={self.d}, n={self.n}")
        if self.d >= 1 and 0 < self.n < self.r:
            raise InvalidArgumentError(
                f"no {self.r}-uniform edges fit on {self.n} vertices")
        if self.up_to_iso and self.n > core.CANON_CAP:
            raise CapacityError(
                f"up_to_iso is capped at n <= {core.CANON_CAP}, got n = {self.n}")

    @property
    def feasible(self) -> bool:
        return (self.n * self.d) % self.r == 0

    @property
    def num_edges(self) -> int:
        return (self.n * self.d) // self.r


def enumerate_regular(spec: EnumSpec,
                      visit: Callable[[Hypergraph], None] | None = None) -> int:
    """Emit every simple d-regular r-uniform hypergraph on vertices 0..n-1
    exactly once (one representative per isomorphism class when up_to_iso),
    calling `visit` on each.  Returns the number emitted."""
    if not spec.feasible:
        return 0
    candidates = list(itertools.combinations(range(spec.n), spec.r))
    m = spec.num_edges

    # suffix[i][v] = candidates at index >= i containing v
    suffix = [[0] * spec.n for _ in range(len(candidates) + 1)]
    for i in range(len(candidates) - 1, -1, -1):
        row = suffix[i]
        row[:] = suffix[i + 1]
        for v in candidates[i]:
            row[v] += 1

    residual = [spec.d] * spec.n
    chosen: list[tuple[int, ...]] = []

    start = 0
    for e in spec.prefix:
        try:
            idx = candidates.index(tuple(e))
        except ValueError:
            raise InvalidArgumentError(f"prefix edge {e} is not a valid candidate")
        if idx < start:
            raise InvalidArgumentError("prefix edges must be lexicographically increasing")
        if any(residual[v] == 0 for v in e):
            raise InvalidArgumentError(f"prefix edge {e} overfills a vertex degree")
        for v in e:
            residual[v] -= 1
        chosen.append(tuple(e))
        start = idx + 1

    seen_canon: set[Hypergraph] = set()
    emitted = 0

    def feasible_from(i: int) -> bool:
        return all(residual[v] <= suffix[i][v] for v in range(spec.n))

    def rec(i: int) -> None:
        nonlocal emitted
        if len(chosen) == m:
            if all(res == 0 for res in residual):
                g = Hypergraph(spec.n, chosen)
                if spec.up_to_iso:
                    canon = canonical_form(g)
                    if canon in seen_canon:
                        return
                    seen_canon.add(canon)
                    g = canon
                emitted += 1
                if visit is not None:
                    visit(g)
            return
        if i >= len(candidates) or not feasible_from(i):
            return
        e = candidates[i]
        if all(residual[v] >= 1 for v in e):
            for v in e:
                residual[v] -= 1
            chosen.append(e)
            rec(i + 1)
            chosen.pop()
            for v in e:
                residual[v] += 1
        rec(i + 1)

    rec(start)
    return emitted


def first_edge_choices(spec: EnumSpec) -> list[tuple[int, ...]]:
    """Candidate first edges, for partitioning a run across workers.

    Every emission either extends exactly one of these one-edge prefixes, so
    enumerating each prefix separately and concatenating reproduces the
    unsplit run.
    """
    if not spec.feasible or spec.num_edges == 0:
        return []
    return list(itertools.combinations(range(spec.n), spec.r))
