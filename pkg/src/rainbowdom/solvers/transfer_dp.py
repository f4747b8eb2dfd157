"""Exact 2-rainbow domination on C(n;{1,s}) by a cyclic transfer DP.

Vertices are placed in order 0..n-1.  Before placing vertex ``i`` the state
is the window of cells ``i-s..i-1``; each cell holds the vertex label and,
for empty vertices, the colours it still needs from neighbours ``>= i``.
Placing label ``L`` at ``i`` discharges ``L`` from cells ``i-1`` and ``i-s``;
cell ``i-s`` then leaves the window and must have no demand left.  The new
cell's demand is ``{1,2}`` minus the labels of ``i-1`` and ``i-s``.

A cell is encoded as an int: ``0..3`` empty with that residual demand,
``4..6`` labels ``{1}``, ``{2}``, ``{1,2}``.  That gives at most 7^s window
states; only the recurrent core (states with both a predecessor and a
successor) can lie on a cycle, and that core is what the tables index.

Cyclic closure: the window before vertex 0 covers vertices ``n-s..n-1``, and
after n placements the window covers the same vertices again, so a valid
labelling of the ring is exactly a closed walk of length n.  The optimum is
the minimum over start states of the (min,+) walk weight from the state back
to itself, i.e. the min-plus trace of the n-th power of the transfer matrix.
All start states are propagated together, so one sweep yields the optimum
for every ring length up to the sweep depth.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from ..errors import UnsupportedGraph, UnsupportedParameters
from ..graphs import Graph, make_circulant
from ..rdf import RainbowAssignment
from .common import SolverResult, Stopwatch

FULL = 3
INF = np.int32(1 << 28)
MAX_S = 6
# memory ceiling (int32 cells) for one batch of the all-start sweep / witness search
_BATCH_CELLS = 1 << 24


def cell_label(c):
    return 0 if c < 4 else c - 3


def cell_demand(c):
    return c if c < 4 else 0


def _step(state, lab):
    old = state[0]
    if old < 4 and old & ~lab:
        return None
    cells = list(state[1:])
    if cells and cells[-1] < 4:
        cells[-1] &= ~lab
    if lab:
        new = lab + 3
    else:
        new = FULL & ~(cell_label(state[-1]) | cell_label(state[0]))
    return tuple(cells) + (new,)


class RingAutomaton:
    """Transfer tables for one jump ``s`` (the core state set and its moves)."""

    def __init__(self, s):
        self.s = s
        every = list(itertools.product(range(7), repeat=s))
        index = {st: i for i, st in enumerate(every)}
        succ = np.full((len(every), 4), -1, dtype=np.int64)
        for st, i in index.items():
            for lab in range(4):
                nxt = _step(st, lab)
                if nxt is not None:
                    succ[i, lab] = index[nxt]
        alive = np.ones(len(every), dtype=bool)
        while True:
            ok = succ >= 0
            tgt = np.where(ok, succ, 0)
            live_edge = ok & alive[:, None] & alive[tgt]
            has_out = live_edge.any(axis=1)
            has_in = np.bincount(tgt[live_edge], minlength=len(every)) > 0
            nxt_alive = alive & has_out & has_in
            if (nxt_alive == alive).all():
                break
            alive = nxt_alive

        core = np.nonzero(alive)[0]
        # renumber the core by descending in-degree so that, in the padded
        # predecessor table, column p is only occupied on a prefix of states
        tgt = succ[core]
        indeg = np.bincount(tgt[(tgt >= 0) & alive[np.where(tgt >= 0, tgt, 0)]], minlength=len(every))[core]
        core = core[np.argsort(-indeg, kind="stable")]
        remap = np.full(len(every), -1, dtype=np.int64)
        remap[core] = np.arange(core.size)
        M = core.size
        self.size = M
        self.states = [every[i] for i in core]
        sc = succ[core]
        sc = np.where(sc >= 0, remap[np.where(sc >= 0, sc, 0)], -1)
        # dead moves point at the sentinel state M, which always holds INF and
        # only moves to itself
        self.succ = np.vstack([np.where(sc >= 0, sc, M), np.full((1, 4), M)])
        self.weight = np.array([bin(cell_label(st[-1])).count("1") for st in self.states], dtype=np.int32)

        preds = [[] for _ in range(M)]
        for x in range(M):
            for lab in range(4):
                y = sc[x, lab]
                if y >= 0:
                    preds[y].append(x)
        width = len(preds[0])
        self.pred = np.full((M, width), M, dtype=np.int64)
        for y, p in enumerate(preds):
            self.pred[y, :len(p)] = p
        counts = np.array([len(p) for p in preds])
        assert (np.diff(counts) <= 0).all() and counts[-1] >= 1
        # pred_rows[p]: number of states having more than p predecessors
        self.pred_rows = [int((counts > p).sum()) for p in range(width)]

        # sweep cache: optimum and optimal start states per ring length
        self._sweep = {}
        self._depth = 0
        self._rows = None

    def _advance(self, D):
        M = self.size
        new = np.full_like(D, INF)
        body = D[:, self.pred[:, 0]]
        for p in range(1, self.pred.shape[1]):
            rows = self.pred_rows[p]
            np.minimum(body[:, :rows], D[:, self.pred[:rows, p]], out=body[:, :rows])
        body += self.weight
        np.minimum(body, INF, out=body)
        new[:, :M] = body
        return new

    def sweep(self, n_max):
        """Extend the shared sweep so lengths 1..n_max are known."""
        M = self.size
        if n_max <= self._depth:
            return
        batch = max(1, _BATCH_CELLS // (M + 1))
        if self._rows is None:
            self._rows = []
            for lo in range(0, M, batch):
                hi = min(M, lo + batch)
                D = np.full((hi - lo, M + 1), INF, dtype=np.int32)
                D[np.arange(hi - lo), np.arange(lo, hi)] = 0
                self._rows.append((lo, hi, D))
        for t in range(self._depth + 1, n_max + 1):
            diag = np.empty(M, dtype=np.int32)
            rows = []
            for lo, hi, D in self._rows:
                D = self._advance(D)
                diag[lo:hi] = D[np.arange(hi - lo), np.arange(lo, hi)]
                rows.append((lo, hi, D))
            self._rows = rows
            opt = int(diag.min())
            self._sweep[t] = (opt, np.nonzero(diag == opt)[0])
        self._depth = n_max

    def optimum(self, n):
        self.sweep(n)
        return self._sweep[n]

    def witness(self, n, opt, starts):
        """Lexicographically smallest label sequence over all optimal closed walks."""
        best = None
        per = max(1, _BATCH_CELLS // ((n + 1) * (self.size + 1)))
        for lo in range(0, len(starts), per):
            labels = self._witness_batch(n, opt, starts[lo:lo + per])
            if best is None or labels < best:
                best = labels
        return best

    def _witness_batch(self, n, opt, starts):
        M = self.size
        C = len(starts)
        wts = np.array([0, 1, 1, 2], dtype=np.int32)
        # G[t][c, x]: cheapest completion from state x at time t back to starts[c]
        G = np.full((n + 1, C, M + 1), INF, dtype=np.int32)
        G[n, np.arange(C), starts] = 0
        for t in range(n - 1, -1, -1):
            nxt = G[t + 1]
            acc = nxt[:, self.succ[:M, 0]] + wts[0]
            for lab in range(1, 4):
                np.minimum(acc, nxt[:, self.succ[:M, lab]] + wts[lab], out=acc)
            np.minimum(acc, INF, out=acc)
            G[t, :, :M] = acc
        cur = np.asarray(starts, dtype=np.int64)
        alive = G[0, np.arange(C), cur] == opt
        spent = 0
        labels = []
        rows = np.arange(C)
        for t in range(n):
            for lab in range(4):
                nxt = self.succ[cur, lab]
                ok = alive & (spent + wts[lab] + G[t + 1, rows, nxt] == opt)
                if ok.any():
                    alive = ok
                    cur = nxt
                    spent += int(wts[lab])
                    labels.append(lab)
                    break
            else:
                raise AssertionError("no optimal continuation; DP tables inconsistent")
        return tuple(labels)


@lru_cache(maxsize=None)
def automaton(s):
    return RingAutomaton(s)


def _check(n, s, k):
    if k != 2:
        raise UnsupportedParameters(f"transfer DP handles k = 2 only, got k = {k}")
    if not 2 <= s <= MAX_S:
        raise UnsupportedGraph(f"transfer DP handles jump sets {{1, s}} with 2 <= s <= {MAX_S}, got s = {s}")
    if n < 2 * s + 1:
        raise UnsupportedGraph(f"transfer DP needs n >= 2s+1 = {2 * s + 1}, got n = {n}")


def solve_transfer_dp(n: int, s: int, k: int = 2) -> SolverResult:
    _check(n, s, k)
    clock = Stopwatch()
    auto = automaton(s)
    opt, starts = auto.optimum(n)
    labels = auto.witness(n, opt, starts)
    g = make_circulant(n, [1, s])
    M = auto.size
    return SolverResult("transfer-dp", opt, RainbowAssignment(2, labels),
                        nodes=M * M * n, elapsed=clock.elapsed(), graph=g)


def transfer_dp_optimum(n: int, s: int, k: int = 2) -> int:
    """Optimum only, no witness."""
    _check(n, s, k)
    return automaton(s).optimum(n)[0]


def dp_jump(g: Graph):
    """The ``s`` for which g is C(n;{1,s}) with a DP-supported s, else raise."""
    fam = g.family
    if fam.kind != "circulant" or len(fam.jumps) != 2 or fam.jumps[0] != 1:
        raise UnsupportedGraph(f"transfer DP needs a circulant C(n;{{1,s}}), got {g.spec()}")
    return fam.jumps[1]


def solve_transfer_dp_graph(g: Graph, k: int = 2) -> SolverResult:
    return solve_transfer_dp(g.n, dp_jump(g), k)
