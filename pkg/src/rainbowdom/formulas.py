"""Closed forms, bounds and the explicit C(n;{1,4}) labelings."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameter, OutOfDomain
from .rdf import RainbowAssignment, parse_assignment


def ceil_div(a, b):
    return -(-a // b)


@dataclass(frozen=True)
class BoundResult:
    lower: int
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise InvalidParameter(f"empty interval [{self.lower}, {self.upper}]")

    @property
    def exact(self):
        return self.lower == self.upper

    def contains(self, value):
        return self.lower <= value <= self.upper

    def to_dict(self):
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact}


@dataclass(frozen=True)
class C14FormulaValue:
    n: int
    residue: int
    alpha: int
    value: int

    def to_dict(self):
        return {"n": self.n, "residue": self.residue, "alpha": self.alpha, "value": self.value}


C14_ALPHA = {0: 0, 1: 1, 2: 1, 3: 1, 4: 2, 5: 1}

BLOCK = "100200"
# residue -> (head, tail); the middle is filled with BLOCK repeats
C14_PIECES = {
    0: ("", ""),
    1: ("", "1002201"),
    2: ("", "10020210"),
    3: ("300200", "100"),
    4: ("", "1212"),
    5: ("", "10220"),
}


def gamma_r2_c14(n: int) -> C14FormulaValue:
    """2-rainbow domination number of C(n;{1,4}): ceil(n/3) + alpha."""
    if n < 9:
        raise OutOfDomain(f"C(n;{{1,4}}) formula needs n >= 9, got {n}")
    r = n % 6
    alpha = C14_ALPHA[r]
    return C14FormulaValue(n, r, alpha, ceil_div(n, 3) + alpha)


def c14_pattern(n: int) -> str:
    if n < 9:
        raise OutOfDomain(f"C(n;{{1,4}}) construction needs n >= 9, got {n}")
    head, tail = C14_PIECES[n % 6]
    blocks, rem = divmod(n - len(head) - len(tail), 6)
    assert rem == 0 and blocks >= 0
    return head + BLOCK * blocks + tail


def construct_c14(n: int) -> RainbowAssignment:
    return parse_assignment(c14_pattern(n), 2)


def gamma_r2_c13(n: int) -> int:
    if n < 7:
        raise OutOfDomain(f"C(n;{{1,3}}) formula needs n >= 7, got {n}")
    m, a = divmod(n, 5)
    if a == 0:
        return 2 * m
    if a in (1, 2):
        return 2 * m + 1
    return 2 * m + 2


def gamma_r2_pn2(n: int) -> int:
    """Generalized Petersen P(n,2)."""
    if n < 3:
        raise OutOfDomain(f"P(n,2) formula needs n >= 3, got {n}")
    base = ceil_div(4 * n, 5)
    return base if n % 10 in (0, 3, 4, 9) else base + 1


def gamma_r2_p5kk(k: int) -> BoundResult:
    """Value or open interval for P(5k,k)."""
    if k < 1:
        raise OutOfDomain(f"P(5k,k) needs k >= 1, got {k}")
    if k == 1:
        return BoundResult(5, 5)
    if k == 2:
        return BoundResult(10, 10)
    if k == 3:
        return BoundResult(13, 14)
    r = k % 10
    if r in (2, 8):
        return BoundResult(4 * k, 4 * k)
    if r in (5, 9):
        return BoundResult(4 * k + 1, 4 * k + 1)
    if r in (1, 6, 7):
        return BoundResult(4 * k + 1, 4 * k + 2)
    return BoundResult(4 * k + 1, 4 * k + 3)


def regular_lower_bound(n: int, K: int) -> int:
    """ceil(2n/(K+2)) for a K-regular graph on n vertices."""
    if n < 1 or K < 1:
        raise InvalidParameter(f"need n >= 1 and K >= 1, got n={n}, K={K}")
    return ceil_div(2 * n, K + 2)
