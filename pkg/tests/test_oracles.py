"""Oracle examples plus re-enumeration checks of the oracles themselves."""
from itertools import chain, combinations

import pytest

from conftest import C4, K1, K3, K4, P4, TWO_K2, hyp
from effdom.ed import verify_ed
from effdom.eed import verify_eed, verify_mim
from effdom.errors import GateExceeded
from effdom.generators import gen_random_graph, gen_random_hypergraph
from effdom.graph import build_graph, is_independent_set, neighborhood_weights, path_graph
from effdom.hyper import verify_exact_cover
from effdom.oracles import (OracleGate, brute_ed, brute_eed, brute_exact_cover, brute_mim,
                            brute_mwis)


def subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def test_brute_ed_examples():
    cert = brute_ed(P4)
    assert cert.status == "solution" and cert.D == (1, 4) and cert.weight_sum == 4
    assert brute_ed(C4).status == "infeasible"
    assert brute_ed(K1).D == (1,)


def test_brute_eed_examples():
    cert = brute_eed(K3)
    assert cert.status == "solution" and len(cert.M) == 1
    assert brute_eed(K4).status == "infeasible"
    assert brute_eed(C4).status == "infeasible"


def test_brute_mwis_examples():
    assert brute_mwis(K3, {1: 5, 2: 3, 3: 2}).weight == 5
    assert brute_mwis(P4, neighborhood_weights(P4)).weight == 5
    assert brute_mwis(build_graph(3, []), {1: 1, 2: 1, 3: 1}).weight == 3


def test_brute_mim_examples():
    assert brute_mim(P4).size == 1
    assert brute_mim(TWO_K2).size == 2
    assert brute_mim(K3).size == 1


def test_brute_exact_cover_examples():
    assert brute_exact_cover(hyp({1, 2}, {3})).C == (1, 2)
    assert brute_exact_cover(hyp({1, 2}, {2, 3}, {1, 3})).status == "infeasible"
    assert brute_exact_cover(hyp({1})).C == (1,)


def test_gates():
    with pytest.raises(GateExceeded):
        brute_ed(path_graph(21))
    assert brute_ed(path_graph(21), OracleGate(max_n=21)).D == tuple(range(2, 21, 3))
    with pytest.raises(GateExceeded):
        brute_eed(path_graph(22))
    with pytest.raises(GateExceeded):
        brute_mwis(path_graph(5), {v: 1 for v in range(1, 6)}, OracleGate(max_n=4))


@pytest.mark.parametrize("seed", range(150))
def test_graph_oracles_against_enumeration(seed):
    g = gen_random_graph(1 + seed % 7, 0.2 + (seed % 5) / 8, seed)
    ed = brute_ed(g)
    found = [s for s in subsets(g.vertices) if verify_ed(g, s)]
    assert (ed.status == "solution") == bool(found)
    if found:
        assert verify_ed(g, ed.D)

    edges = g.edges()
    if len(edges) <= 12:
        eed = brute_eed(g)
        found = [s for s in subsets(edges) if verify_eed(g, s)]
        assert (eed.status == "solution") == bool(found)
        if found:
            assert verify_eed(g, eed.M)
        mim = brute_mim(g)
        assert verify_mim(g, mim.M)
        assert mim.size == max(len(s) for s in subsets(edges) if verify_mim(g, s))

    w = {v: (v * 7 + seed) % 5 for v in g.vertices}
    cert = brute_mwis(g, w)
    assert is_independent_set(g, cert.set) and cert.weight == sum(w[v] for v in cert.set)
    assert cert.weight == max(sum(w[v] for v in s) for s in subsets(g.vertices)
                              if is_independent_set(g, s))


@pytest.mark.parametrize("seed", range(150))
def test_hypergraph_oracles_against_enumeration(seed):
    h = gen_random_hypergraph(2 + seed % 6, 1 + seed % 8, seed, max_edge_size=3)
    xc = brute_exact_cover(h)
    idx = range(1, h.m + 1)
    found = [s for s in subsets(idx) if verify_exact_cover(h, s)]
    assert (xc.status == "solution") == bool(found)
    if found:
        assert verify_exact_cover(h, xc.C)
    eed = brute_eed(h)
    sets = [set(e) for e in h.edges]

    def dominates(s):
        return all(sum(1 for j in s if sets[j - 1] & e) == 1 for e in sets)

    assert (eed.status == "solution") == any(dominates(s) for s in subsets(idx))
    if eed.status == "solution":
        assert dominates(eed.M)
