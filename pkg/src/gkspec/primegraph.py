"""Prime graphs of order spectra and exact coclique search.

The prime graph of a spectrum has the primes of the spectrum as vertices,
with p adjacent to q whenever p*q is a member.  Cocliques (independent
sets) of this graph drive the structural arguments the toolkit verifies,
so the search here is exact: branch and bound with a greedy clique-cover
bound, returning every maximum coclique in canonical sorted order.

Graphs are immutable; the search is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orderset import OrderSet


@dataclass(frozen=True)
class PrimeGraph:
    """Undirected loop-free graph on a sorted tuple of primes."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]  # (p, q) with p < q, each edge once

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices) or tuple(sorted(vset)) != self.vertices:
            raise ValueError("vertices must be sorted and distinct")
        for p, q in self.edges:
            if p >= q:
                raise ValueError("edges must be stored with smaller endpoint first")
            if p not in vset or q not in vset:
                raise ValueError("edge endpoint outside the vertex set")

    def adjacent(self, p: int, q: int) -> bool:
        if p == q:
            return False
        a, b = (p, q) if p < q else (q, p)
        return (a, b) in self.edges

    def is_coclique(self, primes) -> bool:
        """True iff no two distinct members of primes are adjacent."""
        ps = sorted(set(primes))
        for p in ps:
            if p not in set(self.vertices):
                raise ValueError(f"{p} is not a vertex of this graph")
        for i, p in enumerate(ps):
            for q in ps[i + 1:]:
                if (p, q) in self.edges:
                    return False
        return True

    def independence_number(self) -> int:
        return len(self.max_cocliques()[0]) if self.vertices else 0

    def max_cocliques(self) -> list[tuple[int, ...]]:
        """All maximum-cardinality cocliques, each sorted, lexicographic list."""
        n = len(self.vertices)
        if n == 0:
            return []
        if n > 64:
            raise ValueError("coclique search supports at most 64 vertices")
        index = {v: i for i, v in enumerate(self.vertices)}
        adj = [0] * n
        for p, q in self.edges:
            i, j = index[p], index[q]
            adj[i] |= 1 << j
            adj[j] |= 1 << i

        def cover_bound(mask: int) -> int:
            # alpha(G[mask]) <= number of cliques greedily covering mask
            count = 0
            rem = mask
            while rem:
                v = (rem & -rem).bit_length() - 1
                clique = 1 << v
                cands = rem & adj[v]
                while cands:
                    w = (cands & -cands).bit_length() - 1
                    clique |= 1 << w
                    cands &= adj[w]
                rem &= ~clique
                count += 1
            return count

        best = 0

        def search(mask: int, size: int):
            nonlocal best
            if size + cover_bound(mask) <= best:
                return
            if not mask:
                best = max(best, size)
                return
            v = (mask & -mask).bit_length() - 1
            search(mask & ~adj[v] & ~(1 << v), size + 1)
            search(mask & ~(1 << v), size)

        full = (1 << n) - 1
        search(full, 0)
        alpha = best

        found: list[tuple[int, ...]] = []

        def collect(mask: int, chosen: int, size: int):
            if size == alpha:
                found.append(
                    tuple(self.vertices[i] for i in range(n) if chosen >> i & 1)
                )
                return
            if size + cover_bound(mask) < alpha:
                return
            v = (mask & -mask).bit_length() - 1
            collect(mask & ~adj[v] & ~(1 << v), chosen | (1 << v), size + 1)
            collect(mask & ~(1 << v), chosen, size)

        collect(full, 0, 0)
        return sorted(found)

    def dot(self) -> str:
        """DOT text: vertices as decimal primes, each edge listed once."""
        lines = ["graph gk {"]
        for v in self.vertices:
            lines.append(f"  {v};")
        for p, q in sorted(self.edges):
            lines.append(f"  {p} -- {q};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_gk(s: OrderSet) -> PrimeGraph:
    """Prime graph of a spectrum: p ~ q iff p*q is a member."""
    vertices = s.pi()
    edges = set()
    for i, p in enumerate(vertices):
        for q in vertices[i + 1:]:
            if s.contains(p * q):
                edges.add((p, q))
    return PrimeGraph(vertices, frozenset(edges))
