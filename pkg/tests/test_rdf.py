import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import repair
from rainbowdom.errors import InvalidParameter, ParseError, UnsupportedGraph, UnsupportedParameters
from rainbowdom.graphs import make_circulant, make_custom, make_generalized_petersen
from rainbowdom.rdf import (
    ALLOWED_CLASSES, RainbowAssignment, beta_audit, format_assignment, parse_assignment,
    rotate, swap_colors, validate_krdf, weight,
)


def A(text, k=2):
    return parse_assignment(text, k)


def test_weight():
    assert weight(A("000000000")) == 0
    assert weight(A("3" * 7)) == 14
    assert weight(A("100200100200")) == 4


def test_parse_assignment_digits():
    assert A("3").labels == (3,)
    assert A("100200") == RainbowAssignment.from_sets(2, [{1}, (), (), {2}, (), ()])
    with pytest.raises(ParseError) as exc:
        A("4")
    assert exc.value.position == 0
    with pytest.raises(ParseError) as exc:
        A("10a")
    assert exc.value.position == 2


def test_parse_assignment_wide():
    f = parse_assignment("15,0,3,8", 4)
    assert f.labels == (15, 0, 3, 8) and f.colors(0) == (1, 2, 3, 4)
    assert format_assignment(f) == "15,0,3,8"
    with pytest.raises(ParseError):
        parse_assignment("16", 4)


@given(st.integers(1, 6), st.data())
def test_format_parse_roundtrip(k, data):
    labels = data.draw(st.lists(st.integers(0, (1 << k) - 1), min_size=1, max_size=40))
    f = RainbowAssignment(k, tuple(labels))
    assert parse_assignment(format_assignment(f), k) == f


def test_assignment_rejects_bad_label():
    with pytest.raises(InvalidParameter):
        RainbowAssignment(2, (0, 4))


def test_validate_examples():
    assert validate_krdf(make_circulant(12, [1, 4]), A("100200100200")).valid
    assert validate_krdf(make_generalized_petersen(5, 2), A("3" * 10)).valid
    rep = validate_krdf(make_circulant(9, [1, 4]), A("100000000"))
    assert not rep.valid
    missing = dict(rep.violations)
    assert missing[2] == (1, 2)
    for v in (1, 4, 5, 8):
        assert missing[v] == (2,)
    assert set(missing) == set(range(1, 9))
    with pytest.raises(InvalidParameter):
        validate_krdf(make_circulant(9, [1, 4]), A("1000"))


def _literal_valid(g, f):
    # straight from the definition, using python sets of colours
    for v in range(g.n):
        if not f.colors(v):
            union = set()
            for u in g.adjacency[v]:
                union |= set(f.colors(u))
            if union != set(range(1, f.k + 1)):
                return False
    return True


@given(st.integers(5, 30), st.integers(1, 3), st.data())
def test_validate_matches_definition(n, k, data):
    g = make_circulant(n, [1, 2])
    labels = data.draw(st.lists(st.integers(0, (1 << k) - 1), min_size=n, max_size=n))
    f = RainbowAssignment(k, tuple(labels))
    assert validate_krdf(g, f).valid == _literal_valid(g, f)


def test_beta_audit_block_pattern():
    a = beta_audit(make_circulant(12, [1, 4]), A("100200100200"))
    assert (a.v0, a.v1, a.v2) == (8, 4, 0)
    assert a.vij[2][0] == 8 and sum(map(sum, a.vij)) == 8
    assert (a.e1, a.e2, a.e12) == (0, 0, 0)
    assert a.beta == 0 and a.identity_holds and 6 * 4 == 2 * 12 + 0


@pytest.mark.parametrize("n", [9, 10, 13, 25])
def test_beta_audit_all_full(n):
    a = beta_audit(make_circulant(n, [1, 4]), A("3" * n))
    assert a.v2 == n and a.e2 == 2 * n and a.beta == 10 * n
    assert 6 * 2 * n == 2 * n + a.beta


def test_beta_audit_n19_construction():
    a = beta_audit(make_circulant(19, [1, 4]), A("1002001002001002201"))
    assert a.w == 8 and a.beta == 6 * 8 - 2 * 19 == 10


def test_beta_audit_preconditions():
    with pytest.raises(UnsupportedGraph):
        beta_audit(make_generalized_petersen(5, 2), A("3" * 10))
    with pytest.raises(UnsupportedParameters):
        beta_audit(make_circulant(9, [1, 4]), parse_assignment("7" * 9, 3))


def test_beta_audit_serialises():
    d = beta_audit(make_circulant(12, [1, 4]), A("100200100200")).to_dict()
    assert set(d) >= {"n", "weight", "v0", "v1", "v2", "vij", "e1", "e2", "e12", "beta", "identity_holds"}
    assert len(d["vij"]) == 5 and all(len(r) == 5 for r in d["vij"])


def test_beta_audit_invalid_assignment_allowed():
    a = beta_audit(make_circulant(9, [1, 4]), A("000000000"))
    assert a.vij[0][0] == 9 and not a.identity_holds


def _random_circulant(data):
    n = data.draw(st.integers(5, 40))
    a, b = sorted(data.draw(st.sets(st.integers(1, (n - 1) // 2), min_size=2, max_size=2)))
    return make_circulant(n, [a, b])


@given(st.data())
def test_beta_identity_random_valid(data):
    g = _random_circulant(data)
    labels = data.draw(st.lists(st.sampled_from([0, 0, 0, 1, 2, 3]), min_size=g.n, max_size=g.n))
    f = repair(g, labels)
    assert validate_krdf(g, f).valid
    a = beta_audit(g, f)
    assert 6 * a.w == 2 * g.n + a.beta
    assert a.eq1_lhs == a.eq1_rhs and a.eq2_lhs == a.eq2_rhs
    assert a.vij[0][0] == 0 and a.vij[1][0] == 0
    assert a.beta >= 0
    assert a.v0 + a.v1 + a.v2 == g.n
    assert all(a.vij[i][j] == 0 for i in range(5) for j in range(5) if (i, j) not in ALLOWED_CLASSES and (i, j) != (0, 0))


@given(st.integers(6, 30), st.integers(0, 10_000), st.data())
def test_beta_identity_random_regular(n, seed, data):
    # any 4-regular graph, not only circulants
    G = nx.random_regular_graph(4, n, seed=seed)
    g = make_custom(n, G.edges)
    labels = data.draw(st.lists(st.sampled_from([0, 0, 1, 2, 3]), min_size=n, max_size=n))
    a = beta_audit(g, repair(g, labels))
    assert a.identity_holds and a.eq1_lhs == a.eq1_rhs and a.eq2_lhs == a.eq2_rhs


def test_beta_identity_exhaustive_small():
    # every valid 2RDF of C(9;{1,4}) (4^9 labellings)
    g = make_circulant(9, [1, 4])
    count = 0
    for labels in itertools.product(range(4), repeat=9):
        f = RainbowAssignment(2, labels)
        if _literal_valid(g, f):
            count += 1
            assert beta_audit(g, f).identity_holds
    assert count > 0


def test_rotate_swap_examples():
    f = A("100200100")
    assert rotate(f, 0) == f
    assert format_assignment(rotate(f, 3)) == "100100200"
    assert format_assignment(rotate(f, -6)) == "100100200"
    assert format_assignment(swap_colors(f, 1, 2)) == "200100200"
    assert swap_colors(f, 1, 1) == f
    with pytest.raises(InvalidParameter):
        swap_colors(f, 1, 3)


@given(st.data())
def test_symmetries(data):
    g = _random_circulant(data)
    labels = data.draw(st.lists(st.integers(0, 3), min_size=g.n, max_size=g.n))
    f = RainbowAssignment(2, tuple(labels))
    shift = data.draw(st.integers(-50, 50))
    valid = validate_krdf(g, f).valid
    assert validate_krdf(g, swap_colors(f, 1, 2)).valid == valid
    assert validate_krdf(g, rotate(f, shift)).valid == valid
    assert weight(rotate(f, shift)) == weight(f) == weight(swap_colors(f, 1, 2))
