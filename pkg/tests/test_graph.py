import random

import networkx as nx
import pytest
from hypothesis import given, settings

from oracles import encode_graph6, srg_parameters
from strategies import graphs
from wlreg.graph import (
    PAULUS_25_02,
    Graph,
    Graph6Error,
    RootedPattern,
    complement,
    complete,
    cycle,
    disjoint_union,
    generate,
    hypercube,
    is_strongly_regular,
    parse_generator,
    parse_graph6,
    path,
    paulus_25_02,
    petersen,
    read_graph6_file,
    relabel,
    rook,
    shrikhande,
    write_graph6,
)


def test_single_vertex_codec():
    g = parse_graph6("@")
    assert g.n == 1 and g.num_edges == 0
    assert write_graph6(Graph.empty(1)) == "@"


def test_path4_is_Ch():
    g = parse_graph6("Ch")
    assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert write_graph6(path(4)) == "Ch" == encode_graph6(path(4))


def test_paulus_string():
    g = parse_graph6(PAULUS_25_02)
    assert len(PAULUS_25_02) == 51
    assert g.n == 25 and set(g.degrees()) == {12}
    assert is_strongly_regular(g) == (25, 12, 5, 6)
    assert write_graph6(g) == PAULUS_25_02
    assert paulus_25_02() == g


def test_header_marker_accepted():
    assert parse_graph6(">>graph6<<Ch") == path(4)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("C", 1),  # payload too short
        ("Chh", 2),  # payload too long
        ("C\x20", 1),  # byte below 63
        ("Bx", 1),  # padding bits set
        ("~", 1),  # truncated long header
    ],
)
def test_graph6_errors_report_offset(text, offset):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(text)
    assert err.value.offset == offset


@given(graphs(max_n=12))
def test_graph6_roundtrip_and_oracle(g):
    code = write_graph6(g)
    assert code == encode_graph6(g)
    assert parse_graph6(code) == g


def test_graph6_long_header_against_networkx():
    rng = random.Random(3)
    for n in (62, 63, 64, 100):
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.1])
        code = write_graph6(g)
        assert code == encode_graph6(g)
        ref = nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
        assert code == ref
        assert parse_graph6(code) == g


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_read_file(tmp_path):
    f = tmp_path / "gs.g6"
    f.write_text(">>graph6<<Ch\n\n@\n")
    assert read_graph6_file(f) == [path(4), Graph.empty(1)]


def test_generators():
    s, r = shrikhande(), rook(4)
    assert s.n == r.n == 16
    assert is_strongly_regular(s) == is_strongly_regular(r) == (16, 6, 2, 2)
    assert not nx.is_isomorphic(_nx(s), _nx(r))
    assert cycle(3) == complete(3)
    assert nx.is_isomorphic(_nx(petersen()), nx.petersen_graph())
    assert nx.is_isomorphic(_nx(hypercube(3)), nx.hypercube_graph(3))
    # row-major ids on the 4x4 grid: (1,2) -> 6
    assert r.has_edge(6, 4) and r.has_edge(6, 14) and not r.has_edge(6, 5 + 4)
    assert s.has_edge(0, 5)  # (0,0) ~ (1,1)


def test_generator_errors():
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        generate("nope")
    with pytest.raises(ValueError):
        parse_generator("rook(")
    assert parse_generator("rook(4)") == rook(4)
    assert parse_generator("cycle(5)") == cycle(5)


def test_complement_examples():
    assert complement(complete(4)).num_edges == 0
    assert set(complement(shrikhande()).degrees()) == {9}


@given(graphs(max_n=9))
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_disjoint_union():
    assert disjoint_union(complete(1), complete(1)) == Graph.empty(2)
    u = disjoint_union(shrikhande(), rook(4))
    assert u.n == 32 and set(u.degrees()) == {6}
    assert not any(u.has_edge(a, b) for a in range(16) for b in range(16, 32))


@given(graphs(max_n=9))
@settings(max_examples=60)
def test_srg_matches_oracle(g):
    assert is_strongly_regular(g) == srg_parameters_strict(g)


def srg_parameters_strict(g):
    p = srg_parameters(g)
    if p is None or p[1] in (0, g.n - 1):
        return None
    return p


def test_srg_examples():
    assert is_strongly_regular(path(4)) is None
    assert is_strongly_regular(complete(5)) is None
    assert is_strongly_regular(Graph.empty(5)) is None
    assert is_strongly_regular(petersen()) == (10, 3, 0, 1)


def test_relabel_preserves_structure():
    g = path(4)
    h = relabel(g, [3, 2, 1, 0])
    assert h == g


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        RootedPattern(path(3), (5,))
