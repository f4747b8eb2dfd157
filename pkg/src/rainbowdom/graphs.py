"""Graph families used throughout the package.

Vertices are dense integer ids ``0..n-1``.  A :class:`Graph` is immutable and
carries a :class:`Family` tag recording how it was built, so that
structure-aware solvers (the transfer DP) can dispatch on it.

Generalized Petersen numbering: outer vertex ``u_i`` is ``i`` and inner
vertex ``w_i`` is ``n + i``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import InvalidParameter, ParseError


@dataclass(frozen=True)
class Family:
    kind: str  # "circulant" | "petersen" | "custom"
    jumps: tuple = ()
    k: Optional[int] = None

    def spec(self, n):
        if self.kind == "circulant":
            return f"circulant:{n}:" + ",".join(str(s) for s in self.jumps)
        if self.kind == "petersen":
            return f"petersen:{n // 2}:{self.k}"
        return f"custom:{n}"


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple  # tuple of sorted tuples
    family: Family = field(default_factory=lambda: Family("custom"))

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    @cached_property
    def neighbor_masks(self):
        """Open neighbourhood of each vertex as an int bitmask."""
        masks = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            masks.append(m)
        return tuple(masks)

    @cached_property
    def edges(self):
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    @property
    def num_edges(self):
        return len(self.edges)

    def spec(self):
        return self.family.spec(self.n)

    def __repr__(self):
        return f"Graph({self.spec()})"


def _from_neighbor_sets(n, nbr_sets, family):
    for v, s in enumerate(nbr_sets):
        if v in s:
            raise InvalidParameter(f"self-loop at vertex {v}")
    return Graph(n, tuple(tuple(sorted(s)) for s in nbr_sets), family)


def make_circulant(n: int, jumps: Iterable[int]) -> Graph:
    """C(n; S): vertex i joined to i +- s (mod n) for every jump s.

    A jump with 2s == n contributes the single antipodal edge.
    """
    jumps = list(jumps)
    if n < 3:
        raise InvalidParameter(f"circulant needs n >= 3, got {n}")
    if not jumps:
        raise InvalidParameter("jump set is empty")
    if len(set(jumps)) != len(jumps):
        raise InvalidParameter(f"duplicate jumps in {jumps}")
    for s in jumps:
        if not 1 <= s <= n // 2:
            raise InvalidParameter(f"jump {s} outside 1..{n // 2} for n={n}")
    nbrs = [set() for _ in range(n)]
    for i in range(n):
        for s in jumps:
            nbrs[i].add((i + s) % n)
            nbrs[i].add((i - s) % n)
    return _from_neighbor_sets(n, nbrs, Family("circulant", tuple(sorted(jumps))))


def make_generalized_petersen(n: int, k: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"P(n,k) needs n >= 3, got {n}")
    if not (1 <= k and 2 * k < n):
        raise InvalidParameter(f"P(n,k) needs 1 <= k < n/2, got n={n}, k={k}")
    nbrs = [set() for _ in range(2 * n)]

    def join(a, b):
        nbrs[a].add(b)
        nbrs[b].add(a)

    for i in range(n):
        join(i, (i + 1) % n)
        join(i, n + i)
        join(n + i, n + (i + k) % n)
    return _from_neighbor_sets(2 * n, nbrs, Family("petersen", k=k))


def make_custom(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 1:
        raise InvalidParameter("graph needs at least one vertex")
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidParameter(f"edge ({u}, {v}) out of range")
        if u == v:
            raise InvalidParameter(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return _from_neighbor_sets(n, nbrs, Family("custom"))


def _check_vertex(g, v):
    if not 0 <= v < g.n:
        raise InvalidParameter(f"vertex {v} out of range 0..{g.n - 1}")


def open_neighborhood(g: Graph, v: int) -> frozenset:
    _check_vertex(g, v)
    return frozenset(g.adjacency[v])


def closed_neighborhood(g: Graph, v: int) -> frozenset:
    _check_vertex(g, v)
    return frozenset(g.adjacency[v]) | {v}


def regular_degree(g: Graph) -> Optional[int]:
    """Common degree K if the graph is K-regular, else None."""
    degs = {len(a) for a in g.adjacency}
    return degs.pop() if len(degs) == 1 else None


_INT = re.compile(r"\d+")


def parse_graph_spec(text: str) -> Graph:
    """Parse ``circulant:<n>:<j1>,<j2>,...`` or ``petersen:<n>:<k>``."""
    kind, sep, rest = text.partition(":")
    if not sep or kind not in ("circulant", "petersen"):
        raise ParseError(f"unknown graph family {kind!r}", 0)
    pos = len(kind) + 1

    def number(at, s):
        m = _INT.fullmatch(s)
        if m is None:
            raise ParseError(f"expected decimal integer, got {s!r}", at)
        return int(s)

    n_text, sep, params = rest.partition(":")
    if not sep:
        raise ParseError("missing ':' after vertex count", pos + len(n_text))
    n = number(pos, n_text)
    pos += len(n_text) + 1

    if kind == "petersen":
        return make_generalized_petersen(n, number(pos, params))

    jumps = []
    for piece in params.split(","):
        s = number(pos, piece)
        if s < 1:
            raise ParseError(f"jump {s} must be positive", pos)
        if jumps and s <= jumps[-1]:
            raise ParseError("jumps must be strictly increasing", pos)
        jumps.append(s)
        pos += len(piece) + 1
    return make_circulant(n, jumps)


def to_dot(g: Graph, f=None) -> str:
    """Undirected DOT text.  With an assignment, nodes carry their colour set
    and a style per class: empty (gray), partial (black), full (X-marked)."""
    if f is not None and len(f.labels) != g.n:
        raise InvalidParameter(f"assignment has {len(f.labels)} labels, graph has {g.n} vertices")
    lines = [f'graph "{g.spec()}" {{', "  node [shape=circle];"]
    for v in range(g.n):
        if f is None:
            lines.append(f"  v{v};")
            continue
        lab = f.labels[v]
        text = "{" + ",".join(str(c) for c in f.colors(v)) + "}"
        if lab == 0:
            style = 'style=filled, fillcolor=gray'
        elif lab == (1 << f.k) - 1:
            style = 'shape=Mcircle, xlabel="X"'
        else:
            style = 'style=filled, fillcolor=black, fontcolor=white'
        lines.append(f'  v{v} [label="{text}", {style}];')
    for u, v in g.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
