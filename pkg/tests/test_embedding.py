from itertools import product

import pytest
from hypothesis import given, strategies as st

from edl import crg as C
from edl import graphs as G
from edl.config import CapExceeded
from edl.embedding import ForbFamily, check_witness, embeds, in_family
from strategies import crgs, graphs


def brute_embeds(H, K):
    return any(check_witness(H, K, a) for a in product(range(K.k), repeat=H.n))


@given(graphs(max_n=5), crgs(max_k=4))
def test_matches_exhaustive_search(H, K):
    w = embeds(H, K)
    assert (w is not None) == brute_embeds(H, K)
    if w is not None:
        assert check_witness(H, K, w.assignment)


@given(graphs(max_n=6), crgs(max_k=4))
def test_complement_duality(H, K):
    assert (embeds(H, K) is None) == (embeds(G.complement(H), C.complement_crg(K)) is None)


@given(graphs(max_n=6), crgs(max_k=4), st.data())
def test_induced_subgraphs_embed_too(H, K, data):
    if embeds(H, K) is None:
        return
    S = data.draw(st.sets(st.integers(0, H.n - 1), min_size=1))
    assert embeds(G.induced(H, S), K) is not None


@given(graphs(max_n=6), crgs(max_k=4), st.data())
def test_sub_crg_membership_is_hereditary(H, K, data):
    if embeds(H, K) is not None:
        return
    S = data.draw(st.sets(st.integers(0, K.k - 1), min_size=1))
    assert embeds(H, K.sub(S)) is None


@given(graphs(max_n=7), st.integers(0, 3), st.integers(0, 3))
def test_gray_crg_embedding_is_cocoloring(H, w, b):
    if w + b == 0:
        return
    assert (embeds(H, C.k_wb(w, b)) is not None) == G.cocoloring_exists(H, w, b)


@pytest.mark.parametrize("K,expected", [
    (C.k_wb(2, 1), True), (C.k_wb(1, 2), True), (C.K1_H9, False),
    (C.K4_H9, False), (C.K2_H9, False), (C.K3_H9, False),
])
def test_h9_facts(K, expected):
    H = G.h9()
    w = embeds(H, K)
    assert (w is not None) == expected
    if w is not None:
        assert check_witness(H, K, w.assignment)


def test_preimages():
    w = embeds(G.h9(), C.k_wb(2, 1))
    pre = w.preimages(3)
    assert sorted(v for part in pre for v in part) == list(range(9))


def test_family():
    F = ForbFamily.of(G.h9(), G.star(4))
    assert not in_family(C.k_wb(2, 1), F)
    assert in_family(C.K3_H9, ForbFamily.of(G.h9()))
    with pytest.raises(ValueError):
        ForbFamily(())


def test_caps():
    with pytest.raises(CapExceeded):
        embeds(G.empty(13), C.k_wb(1, 0))
