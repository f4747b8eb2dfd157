"""Depth-first branch and bound over vertex labels in id order.

Labels are tried in increasing encoded order, so the first assignment found
at a given weight is the lexicographically smallest one of that weight.
Pruning uses the incumbent, a closing check (a vertex whose closed
neighbourhood is fully labelled must be satisfied), and a coverage-deficiency
bound: every missing colour at an open vertex has to be supplied by a unit of
weight placed on a still-unlabelled vertex, and a unit placed on ``u`` can
reduce the total deficiency by at most ``open_deg(u)`` plus, for the first
unit, ``u``'s own deficiency.
"""
from __future__ import annotations

import sys

from ..formulas import regular_lower_bound
from ..graphs import Graph, regular_degree
from ..rdf import RainbowAssignment
from .common import NO_LIMITS, SearchLimits, SolverResult, Stopwatch


class _BudgetExhausted(Exception):
    pass


class _Search:
    def __init__(self, g, k, limits, target=None):
        self.g = g
        self.n = g.n
        self.k = k
        self.full = (1 << k) - 1
        self.nbr = g.neighbor_masks
        self.adj = g.adjacency
        self.limits = limits
        self.clock = Stopwatch()
        self.nodes = 0
        closers = [[] for _ in range(self.n)]
        for v in range(self.n):
            closers[max((v,) + self.adj[v])].append(v)
        self.closers = closers
        self.labels = [0] * self.n
        # has[c] = bitmask of labelled vertices holding colour c (bit index c)
        self.has = [0] * k
        self.popcount = [bin(x).count("1") for x in range(1 << k)]
        # enumeration mode collects every assignment of weight == target
        self.target = target
        self.found = []
        self.truncated = False
        self.best_w = k * self.n + 1
        self.best = None
        self.floor = 0

    def covered(self, v):
        m = self.nbr[v]
        cov = 0
        for c in range(self.k):
            if m & self.has[c]:
                cov |= 1 << c
        return cov

    def lower_bound(self, depth):
        """Minimum extra weight needed to clear every colour deficiency."""
        k, n = self.k, self.n
        need = [0] * n
        total = 0
        for v in range(n):
            if v < depth and self.labels[v]:
                continue
            d = k - self.popcount[self.covered(v)]
            need[v] = d
            total += d
        if total == 0:
            return 0
        caps = []
        for u in range(depth, n):
            d_u = 0
            for w in self.adj[u]:
                if need[w]:
                    d_u += 1
            caps.append(d_u + need[u])
            if d_u:
                caps.extend([d_u] * (k - 1))
        caps.sort(reverse=True)
        units = 0
        for cap in caps:
            if total <= 0:
                break
            total -= cap
            units += 1
        if total > 0:
            return k * n + 1  # infeasible
        return units

    def tick(self):
        self.nodes += 1
        lim = self.limits
        if lim.max_nodes is not None and self.nodes > lim.max_nodes:
            raise _BudgetExhausted
        if lim.max_seconds is not None and self.nodes & 1023 == 0:
            if self.clock.elapsed() > lim.max_seconds:
                raise _BudgetExhausted

    def run(self):
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * self.n + 100))
        try:
            self.dfs(0, 0)
        except _BudgetExhausted:
            return False
        finally:
            sys.setrecursionlimit(limit)
        return True

    def dfs(self, depth, cost):
        self.tick()
        if depth == self.n:
            self.leaf(cost)
            return
        v = depth
        bit = 1 << v
        for lab in range(1 << self.k):
            w = cost + self.popcount[lab]
            if self.pruned(w):
                continue
            self.labels[v] = lab
            for c in range(self.k):
                if lab >> c & 1:
                    self.has[c] |= bit
            if self.closing_ok(depth) and not self.pruned(w + self.lower_bound(depth + 1)):
                self.dfs(depth + 1, w)
            for c in range(self.k):
                self.has[c] &= ~bit
            self.labels[v] = 0
            if self.done():
                return

    def pruned(self, bound):
        if self.target is not None:
            return bound > self.target
        return bound >= self.best_w

    def done(self):
        if self.target is not None:
            return self.truncated
        return self.best_w <= self.floor

    def closing_ok(self, depth):
        for v in self.closers[depth]:
            if self.labels[v] == 0 and self.covered(v) != self.full:
                return False
        return True

    def leaf(self, cost):
        if self.target is not None:
            if cost == self.target:
                self.found.append(RainbowAssignment(self.k, tuple(self.labels)))
                cap = self.limits.max_optima
                if cap is not None and len(self.found) >= cap:
                    self.truncated = True
                    raise _BudgetExhausted
            return
        if cost < self.best_w:
            self.best_w = cost
            self.best = tuple(self.labels)


def _root_floor(g, k):
    K = regular_degree(g)
    if k == 2 and K:
        return regular_lower_bound(g.n, K)
    return 0


def solve_branch_bound(g: Graph, k: int = 2, limits: SearchLimits = NO_LIMITS) -> SolverResult:
    """Exact optimum unless the budget runs out (then ``exact`` is False)."""
    s = _Search(g, k, limits)
    s.floor = max(_root_floor(g, k), s.lower_bound(0))
    exact = s.run()
    if s.best is None:
        # budget hit before any leaf: fall back to the all-full labelling
        witness = RainbowAssignment(k, (s.full,) * g.n)
        optimum = k * g.n
    else:
        witness = RainbowAssignment(k, s.best)
        optimum = s.best_w
    return SolverResult("branch-bound", optimum, witness, nodes=s.nodes,
                        elapsed=s.clock.elapsed(), exact=exact, graph=g)


class OptimaList(list):
    """List of optimal assignments with a ``truncated`` flag."""
    truncated = False
    optimum = None


def enumerate_optima(g: Graph, k: int = 2, limits: SearchLimits = NO_LIMITS, optimum=None):
    """All assignments of minimum weight in lexicographic order, up to
    ``limits.max_optima``."""
    if optimum is None:
        res = solve_branch_bound(g, k, SearchLimits(limits.max_nodes, limits.max_seconds))
        if not res.exact:
            raise RuntimeError("optimum search exhausted its budget")
        optimum = res.optimum
    s = _Search(g, k, limits, target=optimum)
    complete = s.run()
    out = OptimaList(s.found)
    out.optimum = optimum
    out.truncated = not complete
    return out
