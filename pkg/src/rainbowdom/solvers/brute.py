"""Exhaustive enumeration over every label vector.

An assignment is held as one vertex bitmask per colour.  For a bitmask S let
``dom[S]`` be the set of vertices with a neighbour in S.  An assignment
``(A_1..A_k)`` is a k-rainbow dominating function iff every vertex lies in
some ``A_c`` or in ``dom[A_c]`` for every c.  The outer colours are looped
over in Python; the last colour is swept as a numpy vector.
"""
from __future__ import annotations

import itertools

import numpy as np

from ..errors import InstanceTooLarge
from ..graphs import Graph
from ..rdf import RainbowAssignment
from .common import SolverResult, Stopwatch

SIZE_GUARD = 26  # n * k
CHUNK = 1 << 20


def _tables(g, k):
    n = g.n
    size = 1 << n
    dom = np.zeros(size, dtype=np.int64)
    pc = np.zeros(size, dtype=np.int64)
    spread = np.zeros(size, dtype=np.int64)
    base = 1 << k
    for b, m in enumerate(g.neighbor_masks):
        lo, hi = 1 << b, 1 << (b + 1)
        dom[lo:hi] = dom[:lo] | m
        pc[lo:hi] = pc[:lo] + 1
        spread[lo:hi] = spread[:lo] + base ** (n - 1 - b)
    return dom, pc, spread


def _check_guard(g, k, allow_large):
    if g.n * k > SIZE_GUARD and not allow_large:
        raise InstanceTooLarge(f"brute force over (2^{k})^{g.n} assignments exceeds the n*k <= {SIZE_GUARD} guard")


def _scan(g, k):
    """Yield (weights, keys) of every valid assignment, chunk by chunk.

    The key is the label vector read as a base-2^k number, vertex 0 most
    significant, so comparing keys compares assignments lexicographically.
    """
    dom, pc, spread = _tables(g, k)
    size = 1 << g.n
    full = size - 1
    top = 1 << (k - 1)
    for outer in itertools.product(range(size), repeat=k - 1):
        d, o, w0, key0 = full, 0, 0, 0
        for c, a in enumerate(outer):
            d &= int(dom[a])
            o |= a
            w0 += int(pc[a])
            key0 += int(spread[a]) << c
        for lo in range(0, size, CHUNK):
            hi = min(size, lo + CHUNK)
            last = np.arange(lo, hi, dtype=np.int64)
            ok = ((dom[lo:hi] & d) | last | o) == full
            idx = np.nonzero(ok)[0]
            if idx.size:
                yield w0, pc[lo:hi][idx] + w0, key0 + spread[lo:hi][idx] * top


def _decode(key, n, k):
    base = 1 << k
    labels = [0] * n
    for v in range(n - 1, -1, -1):
        key, labels[v] = divmod(key, base)
    return RainbowAssignment(k, tuple(labels))


def solve_bruteforce(g: Graph, k: int = 2, allow_large: bool = False) -> SolverResult:
    """Exact optimum by enumerating all (2^k)^n label vectors.

    The witness is the lexicographically smallest optimal assignment.
    """
    _check_guard(g, k, allow_large)
    clock = Stopwatch()
    best_w, best_key = None, None
    for w0, ws, keys in _scan(g, k):
        if best_w is not None and w0 > best_w:
            continue
        m = int(ws.min())
        if best_w is not None and m > best_w:
            continue
        kmin = int(keys[ws == m].min())
        if best_w is None or m < best_w or kmin < best_key:
            best_w, best_key = m, kmin
    witness = _decode(best_key, g.n, k)
    return SolverResult("brute", best_w, witness, nodes=(1 << g.n) ** k,
                        elapsed=clock.elapsed(), graph=g)


def enumerate_bruteforce(g: Graph, k: int, target: int, allow_large: bool = False):
    """Every valid assignment of weight exactly ``target``, in lexicographic order."""
    _check_guard(g, k, allow_large)
    keys = []
    for w0, ws, ks in _scan(g, k):
        if w0 > target:
            continue
        keys.extend(int(x) for x in ks[ws == target])
    keys.sort()
    return [_decode(key, g.n, k) for key in keys]
