import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_nx
from effdom.ed import solve_ed, verify_ed
from effdom.eed import solve_eed, solve_mim, verify_eed, verify_mim
from effdom.generators import gen_dually_chordal, gen_hypertree
from effdom.graph import build_graph, square
from effdom.hyper import solve_exact_cover, verify_exact_cover
from effdom.hypergraph import Hypergraph, is_hypertree
from effdom.io import format_instance, parse_instance
from effdom.oracles import brute_ed, brute_exact_cover, brute_mim
from effdom.orderings import is_chordal, is_peo


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def hypergraphs(draw, max_n=7, max_m=8):
    n = draw(st.integers(1, max_n))
    edge = st.sets(st.integers(1, n), min_size=1, max_size=min(n, 3))
    edges = draw(st.lists(edge, max_size=max_m))
    return Hypergraph(n, tuple(tuple(sorted(e)) for e in edges))


@given(graphs())
def test_chordality_agrees_with_networkx(g):
    rep = is_chordal(g)
    assert rep.verdict == nx.is_chordal(to_nx(g))
    if rep.verdict:
        assert is_peo(g, rep.witness).valid


@given(graphs())
def test_ed_matches_oracle(g):
    cert = solve_ed(g)
    assert cert.status == brute_ed(g).status
    if cert.status == "solution":
        assert verify_ed(g, cert.D)
        assert sum(g.degree(d) + 1 for d in cert.D) == g.n


@given(graphs(max_n=7))
def test_eed_solutions_are_induced_matchings(g):
    cert = solve_eed(g)
    if cert.status == "solution":
        assert verify_eed(g, cert.M) and verify_mim(g, cert.M)
    mim = solve_mim(g)
    assert verify_mim(g, mim.M) and mim.size == brute_mim(g).size


@given(graphs())
def test_square_matches_networkx_power(g):
    expected = nx.power(to_nx(g), 2) if g.n else nx.Graph()
    assert {tuple(sorted(e)) for e in expected.edges()} == set(square(g).edges())


@given(hypergraphs())
def test_exact_cover_matches_oracle(h):
    cert = solve_exact_cover(h)
    assert cert.status == brute_exact_cover(h).status
    if cert.status == "solution":
        assert verify_exact_cover(h, cert.C)


@given(st.integers(1, 40), st.integers(1, 15), st.integers(0, 2**32))
@settings(max_examples=60)
def test_generated_instances_take_linear_paths(n, m, seed):
    assert is_hypertree(gen_hypertree(n, m, seed)).verdict
    g = gen_dually_chordal(n, m, seed)
    cert = solve_ed(g)
    assert cert.method == "dc"
    if cert.status == "solution":
        assert verify_ed(g, cert.D)


@given(st.one_of(graphs(), hypergraphs()))
def test_format_parse_round_trip(inst):
    assert parse_instance(format_instance(inst)) == inst
