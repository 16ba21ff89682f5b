from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from edl import crg as C
from edl.edf import dyadic_grid
from strategies import closed_probabilities, crgs, probabilities

GRID = dyadic_grid(64)


# --- representation -------------------------------------------------------


def test_text_round_trip_and_validation():
    K = C.parse_crg("WWB;wbg")
    assert K.to_text() == "WWB;wbg"
    assert (K.edge(0, 1), K.edge(0, 2), K.edge(2, 1)) == ("w", "b", "g")
    for bad in ["WX;g", "WW;gg", "WW;x", ";", "WW"]:
        with pytest.raises(ValueError):
            C.parse_crg(bad)


def test_pair_mapping_constructor_matches_string():
    K = C.crg("WWB", {(0, 1): "w", (2, 0): "b", (1, 2): "g"})
    assert K == C.CRG("WWB", "wbg")
    with pytest.raises(ValueError):
        C.crg("WW", {})


def test_float_p_rejected():
    with pytest.raises(TypeError):
        C.g(C.K1_H9, 0.5)


@given(crgs(), st.randoms())
def test_relabel_then_sub(K, rnd):
    perm = list(range(K.k))
    rnd.shuffle(perm)
    L = K.relabel(perm)
    for i in range(K.k):
        assert L.vcolors[perm[i]] == K.vcolors[i]
        for j in range(i + 1, K.k):
            assert L.edge(perm[i], perm[j]) == K.edge(i, j)


# --- values quoted for the H9 analysis ------------------------------------


def test_named_crg_values():
    for p in GRID:
        assert C.g(C.K1_H9, p) == p / 3
        assert C.g(C.K4_H9, p) == (1 - p) / 2
        assert C.g(C.K2_H9, p) == min(p / 3, p / (2 + 2 * p))
        assert 1 / C.g(C.K3_H9, p) == 1 / p + 2 / min(p, Fraction(1, 2))
        # components BB;w and W give 1/g = 1/min(1-p, 1/2) + 1/p
        assert C.g(C.C6STAR_CRG, p) == (p / (1 + 2 * p) if p <= Fraction(1, 2) else p * (1 - p))


@pytest.mark.parametrize("K,p,expected", [
    (C.K1_H9, Fraction(1, 2), Fraction(1, 6)),
    (C.K4_H9, Fraction(1, 2), Fraction(1, 4)),
    (C.K3_H9, Fraction(3, 5), Fraction(3, 17)),
    (C.C6STAR_CRG, Fraction(1, 3), Fraction(1, 5)),
    (C.K2_H9, Fraction(3, 4), Fraction(3, 14)),
    (C.k_wb(1, 1), Fraction(1, 2), Fraction(1, 4)),
])
def test_spot_values(K, p, expected):
    assert C.g(K, p) == expected


def test_k3_weights():
    res = C.g_value(C.K3_H9, Fraction(3, 5))
    assert res.x == tuple(Fraction(t, 17) for t in (3, 3, 3, 3, 5))


def test_endpoints_are_allowed_for_g():
    assert C.g(C.k_wb(2, 1), 0) == 0
    assert C.g(C.black_clique(3), 1) == 0
    assert C.g(C.black_clique(3), 0) == Fraction(1, 3)


# --- general properties ------------------------------------------------------


@given(crgs(), closed_probabilities())
def test_f_dominates_g(K, p):
    assert C.f_value(K, p) >= C.g(K, p)
    assert C.f_value(K, p) == sum(sum(r) for r in C.m_matrix(K, p)) / K.k ** 2


@given(crgs(), closed_probabilities())
def test_complement_duality(K, p):
    assert C.g(C.complement_crg(K), 1 - p) == C.g(K, p)
    assert C.complement_crg(C.complement_crg(K)) == K


@given(crgs(max_k=6), probabilities())
def test_component_harmonic_identity(K, p):
    comps = C.components(K)
    assert sum(Kc.k for Kc in comps) == K.k
    assert 1 / C.g(K, p) == sum(1 / C.g(Kc, p) for Kc in comps)


@given(st.integers(0, 5), st.integers(0, 5), probabilities())
def test_gray_closed_form(w, b, p):
    if w + b == 0:
        return
    assert C.closed_form_gray(w, b)(p) == C.g(C.k_wb(w, b), p)


@given(st.integers(1, 6), probabilities())
def test_black_clique_closed_form(k, p):
    if p >= Fraction(1, 2):
        with pytest.raises(ValueError):
            C.black_clique_g(k, p)
        return
    assert C.g(C.black_clique(k), p) == C.black_clique_g(k, p) == p + (1 - 2 * p) / k


@given(crgs(), probabilities())
def test_adding_vertices_never_raises_g(K, p):
    gK = C.g(K, p)
    assert all(gK <= C.g(S, p) for S in C.sub_crgs(K))


# --- canonical form ---------------------------------------------------------


def _brute_color_isomorphic(K, L):
    if K.vcolors.count("W") != L.vcolors.count("W") or K.k != L.k:
        return False
    return any(K.relabel(perm) == L for perm in permutations(range(K.k)))


@given(crgs(), st.randoms())
def test_canonical_form_is_invariant(K, rnd):
    perm = list(range(K.k))
    rnd.shuffle(perm)
    assert C.canonical_form(K.relabel(perm)) == C.canonical_form(K)
    assert _brute_color_isomorphic(K, C.canonical_crg(K))


@given(crgs(max_k=4), crgs(max_k=4))
def test_canonical_form_separates(K, L):
    assert (C.canonical_form(K) == C.canonical_form(L)) == _brute_color_isomorphic(K, L)


def test_canonical_examples():
    assert C.canonical_form(C.CRG("WB", "g")) == C.canonical_form(C.CRG("BW", "g"))
    assert C.canonical_form(C.CRG("WWWW", "bggggg")) == C.canonical_form(C.CRG("WWWW", "gggggb"))
    assert C.canonical_form(C.k_wb(2, 0)) != C.canonical_form(C.CRG("WW", "w"))


# --- p-cores and localisation ----------------------------------------------


def test_p_core_examples():
    assert C.is_p_core(C.K3_H9, Fraction(3, 5))
    assert C.is_p_core(C.k_wb(3, 0), Fraction(1, 4))
    # a white edge between white vertices is wasted when p < 1/2
    assert not C.is_p_core(C.CRG("WW", "w"), Fraction(1, 4))
    for p in (0, 1):
        with pytest.raises(ValueError):
            C.is_p_core(C.K1_H9, p)
        with pytest.raises(ValueError):
            C.localization_quantities(C.K1_H9, p)


@given(crgs(max_k=4), probabilities(max_den=12))
def test_p_core_regularity(K, p):
    if not C.is_p_core(K, p):
        return
    res = C.g_value(K, p)
    assert all(t > 0 for t in res.x)
    for xv, d in C.localization_quantities(K, p, res):
        assert d.dG + d.dW + d.dB == 1
        assert p * d.dW + (1 - p) * d.dB == res.g


def test_degree_sums_validation():
    with pytest.raises(IndexError):
        C.degree_sums(C.K1_H9, [Fraction(1, 3)] * 3, 5)
    with pytest.raises(ValueError):
        C.degree_sums(C.K1_H9, [1], 0)
