"""Rainbow assignments, the rainbow-domination condition and the
V0/V1/V2 class bookkeeping behind the ``6 w(f) = 2n + beta`` identity.

A label is a small int: bit ``c-1`` set means colour ``c`` is present, so for
two colours ``0, 1, 2, 3`` stand for ``{}, {1}, {2}, {1,2}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from .errors import InvalidParameter, ParseError, UnsupportedGraph, UnsupportedParameters
from .graphs import Graph, regular_degree


@dataclass(frozen=True)
class RainbowAssignment:
    k: int
    labels: Tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise InvalidParameter(f"k must be >= 1, got {self.k}")
        top = 1 << self.k
        for v, lab in enumerate(self.labels):
            if not 0 <= lab < top:
                raise InvalidParameter(f"label {lab} at vertex {v} is not a subset of 1..{self.k}")

    @classmethod
    def from_sets(cls, k, sets):
        labels = []
        for s in sets:
            lab = 0
            for c in s:
                lab |= 1 << (c - 1)
            labels.append(lab)
        return cls(k, tuple(labels))

    @property
    def n(self):
        return len(self.labels)

    @property
    def full(self):
        return (1 << self.k) - 1

    def colors(self, v):
        lab = self.labels[v]
        return tuple(c for c in range(1, self.k + 1) if lab >> (c - 1) & 1)

    def weight(self):
        return weight(self)

    def __str__(self):
        return format_assignment(self)


def weight(f: RainbowAssignment) -> int:
    return sum(bin(lab).count("1") for lab in f.labels)


def parse_assignment(text: str, k: int) -> RainbowAssignment:
    """One digit per vertex for k <= 3, comma-separated encodings otherwise."""
    if k < 1:
        raise InvalidParameter(f"k must be >= 1, got {k}")
    top = 1 << k
    labels = []
    if k <= 3:
        for i, ch in enumerate(text):
            if not ch.isdigit() or int(ch) >= top:
                raise ParseError(f"label {ch!r} is not a subset encoding for k={k}", i)
            labels.append(int(ch))
    else:
        pos = 0
        for piece in text.split(","):
            if not piece.isdigit() or int(piece) >= top:
                raise ParseError(f"label {piece!r} is not a subset encoding for k={k}", pos)
            labels.append(int(piece))
            pos += len(piece) + 1
    if not labels:
        raise ParseError("empty assignment", 0)
    return RainbowAssignment(k, tuple(labels))


def format_assignment(f: RainbowAssignment) -> str:
    if f.k <= 3:
        return "".join(str(lab) for lab in f.labels)
    return ",".join(str(lab) for lab in f.labels)


def _check_length(g, f):
    if len(f.labels) != g.n:
        raise InvalidParameter(f"assignment has {len(f.labels)} labels, graph has {g.n} vertices")


@dataclass
class ValidationReport:
    valid: bool
    violations: List[Tuple[int, Tuple[int, ...]]] = field(default_factory=list)

    def to_dict(self):
        return {
            "valid": self.valid,
            "violations": [{"vertex": v, "missing": list(m)} for v, m in self.violations],
        }


def validate_krdf(g: Graph, f: RainbowAssignment) -> ValidationReport:
    _check_length(g, f)
    full = f.full
    violations = []
    for v, lab in enumerate(f.labels):
        if lab:
            continue
        seen = 0
        for u in g.adjacency[v]:
            seen |= f.labels[u]
        if seen != full:
            missing = full & ~seen
            violations.append((v, tuple(c for c in range(1, f.k + 1) if missing >> (c - 1) & 1)))
    return ValidationReport(not violations, violations)


def is_krdf(g: Graph, f: RainbowAssignment) -> bool:
    return validate_krdf(g, f).valid


# Coefficients of the V_ij classes in beta, keyed (i, j); classes absent here
# (V01, V20) carry coefficient 0.
BETA_VIJ_COEFFS = {
    (1, 1): 1, (1, 2): 3, (1, 3): 5,
    (2, 1): 2, (2, 2): 4,
    (3, 0): 1, (3, 1): 3,
    (4, 0): 2,
    (0, 2): 2, (0, 3): 4, (0, 4): 6,
}
ALLOWED_CLASSES = frozenset([
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 1), (1, 2), (1, 3),
    (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (4, 0),
])


@dataclass
class BetaAudit:
    n: int
    w: int
    v0: int
    v1: int
    v2: int
    vij: List[List[int]]
    e1: int
    e2: int
    e12: int
    beta: int
    eq1_lhs: int
    eq1_rhs: int
    eq2_lhs: int
    eq2_rhs: int

    @property
    def identity_holds(self):
        return 6 * self.w == 2 * self.n + self.beta

    def to_dict(self):
        return {
            "n": self.n, "weight": self.w,
            "v0": self.v0, "v1": self.v1, "v2": self.v2,
            "vij": [list(row) for row in self.vij],
            "e1": self.e1, "e2": self.e2, "e12": self.e12,
            "beta": self.beta,
            "eq1_lhs": self.eq1_lhs, "eq1_rhs": self.eq1_rhs,
            "eq2_lhs": self.eq2_lhs, "eq2_rhs": self.eq2_rhs,
            "identity_holds": self.identity_holds,
        }


def beta_audit(g: Graph, f: RainbowAssignment) -> BetaAudit:
    """Class counts and beta for a 2-colour assignment on a 4-regular graph.

    Works on invalid assignments too; the identity then may fail.
    """
    _check_length(g, f)
    if regular_degree(g) != 4:
        raise UnsupportedGraph("beta audit needs a 4-regular graph")
    if f.k != 2:
        raise UnsupportedParameters(f"beta audit needs k = 2, got k = {f.k}")

    cls = [0 if lab == 0 else (2 if lab == 3 else 1) for lab in f.labels]
    sizes = [cls.count(0), cls.count(1), cls.count(2)]
    vij = [[0] * 5 for _ in range(5)]
    for v, c in enumerate(cls):
        if c == 0:
            i = sum(1 for u in g.adjacency[v] if cls[u] == 1)
            j = sum(1 for u in g.adjacency[v] if cls[u] == 2)
            vij[i][j] += 1
    e1 = e2 = e12 = 0
    for u, v in g.edges:
        pair = {cls[u], cls[v]}
        if pair == {1}:
            e1 += 1
        elif pair == {2}:
            e2 += 1
        elif pair == {1, 2}:
            e12 += 1

    beta = sum(c * vij[i][j] for (i, j), c in BETA_VIJ_COEFFS.items())
    beta += 3 * e12 + 2 * e1 + 4 * e2 + 2 * sizes[2]

    return BetaAudit(
        n=g.n, w=weight(f), v0=sizes[0], v1=sizes[1], v2=sizes[2], vij=vij,
        e1=e1, e2=e2, e12=e12, beta=beta,
        eq1_lhs=4 * sizes[1] - 2 * e1 - e12,
        eq1_rhs=sum(i * vij[i][j] for i, j in ALLOWED_CLASSES),
        eq2_lhs=4 * sizes[2] - 2 * e2 - e12,
        eq2_rhs=sum(j * vij[i][j] for i, j in ALLOWED_CLASSES),
    )


def rotate(f: RainbowAssignment, shift: int) -> RainbowAssignment:
    n = len(f.labels)
    return RainbowAssignment(f.k, tuple(f.labels[(v - shift) % n] for v in range(n)))


def swap_colors(f: RainbowAssignment, c1: int, c2: int) -> RainbowAssignment:
    for c in (c1, c2):
        if not 1 <= c <= f.k:
            raise InvalidParameter(f"colour {c} outside 1..{f.k}")
    b1, b2 = 1 << (c1 - 1), 1 << (c2 - 1)

    def swap(lab):
        out = lab & ~(b1 | b2)
        if lab & b1:
            out |= b2
        if lab & b2:
            out |= b1
        return out

    return RainbowAssignment(f.k, tuple(swap(lab) for lab in f.labels))
