import itertools
import json
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import H35_DUAL_EXACT, H35_EXACT
from mmnrel.exact import (
    CoefficientVector,
    EnumerationCapExceeded,
    binomial_row,
    brute_force_coefficients,
    coefficient_bounds,
    coefficients_from_csv,
    coefficients_from_json,
    coefficients_to_csv,
    coefficients_to_json,
    dual_coefficients,
    is_connected,
    pos_coefficients,
    sop_coefficients,
)
from mmnrel.network import dual, from_matrix, make_hammock, make_pos, make_sop, to_device_graph


def networkx_coefficients(net):
    """Independent count: build the lattice from scratch and test S-T paths."""
    l, w = net.l, net.w
    base = nx.MultiGraph()
    base.add_nodes_from(["S", "T"])
    for j in range(1, w + 1):
        base.add_edge("S", (0, j))
        base.add_edge("T", (l, j))
        for i in range(1, l):
            if j < w and net.matchstick(i, j):
                base.add_edge((i, j), (i, j + 1))
    devices = [((c - 1, j), (c, j)) for j in range(1, w + 1) for c in range(1, l + 1)]
    counts = [0] * (net.n + 1)
    for k in range(net.n + 1):
        for closed in itertools.combinations(devices, k):
            g = base.copy()
            g.add_edges_from(closed)
            counts[k] += nx.has_path(g, "S", "T")
    return counts


small = st.integers(1, 4)


@st.composite
def small_networks(draw, max_n=12):
    l = draw(st.integers(1, 4))
    w = draw(st.integers(1, max(1, min(4, max_n // l))))
    bits = draw(st.lists(st.integers(0, 1), min_size=(l - 1) * (w - 1), max_size=(l - 1) * (w - 1)))
    return from_matrix(l, w, bits)


def test_hammock_3x5_and_dual():
    net = make_hammock(3, 5)
    assert brute_force_coefficients(net).N == H35_EXACT
    assert brute_force_coefficients(dual(net)).N == H35_DUAL_EXACT


def test_pos_2x2():
    assert brute_force_coefficients(make_pos(2, 2)).N == (0, 0, 2, 4, 1)


@pytest.mark.parametrize("net", [make_hammock(3, 3), make_pos(2, 4), make_sop(3, 2), make_hammock(2, 4, "Hplus")])
def test_against_networkx(net):
    assert list(brute_force_coefficients(net).N) == networkx_coefficients(net)


@settings(max_examples=25)
@given(small_networks(max_n=9))
def test_bitslice_matches_networkx(net):
    assert list(brute_force_coefficients(net).N) == networkx_coefficients(net)


@settings(max_examples=40)
@given(small_networks(max_n=12))
def test_bitslice_matches_unionfind(net):
    assert brute_force_coefficients(net) == brute_force_coefficients(net, method="unionfind")


def test_split_and_workers_do_not_change_result():
    net = make_hammock(4, 5)
    ref = brute_force_coefficients(net)
    assert brute_force_coefficients(net, chunk_words=7) == ref
    assert brute_force_coefficients(net, workers=3, chunk_words=1000) == ref


def test_self_dual_5x5():
    cv = brute_force_coefficients(make_hammock(5, 5))
    row = binomial_row(25)
    assert all(cv[k] + cv[25 - k] == row[k] for k in range(26))
    assert max(cv.N) == 3162650


def test_cap():
    with pytest.raises(EnumerationCapExceeded):
        brute_force_coefficients(make_hammock(5, 5), cap=20)


def test_unknown_method():
    with pytest.raises(ValueError):
        brute_force_coefficients(make_pos(2, 2), method="magic")


def test_is_connected():
    g = to_device_graph(make_pos(2, 2))
    # devices d = j*l + (i-1): wire 0 carries devices 0 and 1
    assert is_connected(g, [0, 1])
    assert not is_connected(g, [0, 2])
    with pytest.raises(IndexError):
        is_connected(g, [9])


def test_pos_closed_form_small():
    # two wires of two devices in series: P = 1 - (1 - p^2)^2
    assert pos_coefficients(2, 2).N == (0, 0, 2, 4, 1)


@pytest.mark.parametrize("l,w", [(l, w) for l in range(1, 6) for w in range(1, 6) if l * w <= 20])
def test_pos_and_sop_closed_forms(l, w):
    assert pos_coefficients(l, w) == brute_force_coefficients(make_pos(l, w))
    assert sop_coefficients(l, w) == brute_force_coefficients(make_sop(l, w))


@settings(max_examples=30)
@given(small_networks(max_n=16))
def test_property_one(net):
    assert brute_force_coefficients(net).violations() == []


@settings(max_examples=30)
@given(small_networks(max_n=16))
def test_complementarity_against_brute_force(net):
    cv = brute_force_coefficients(net)
    assert dual_coefficients(cv) == brute_force_coefficients(dual(net))


@settings(max_examples=30)
@given(small_networks(max_n=16))
def test_sandwich(net):
    cv = brute_force_coefficients(net)
    for k in range(net.n + 1):
        lo, hi = coefficient_bounds(net.l, net.w, k)
        assert lo <= cv[k] <= hi


def test_bounds_are_pos_and_sop():
    for k in range(13):
        assert coefficient_bounds(3, 4, k) == (pos_coefficients(3, 4)[k], sop_coefficients(3, 4)[k])


def test_violations_reported():
    bad = CoefficientVector((0, 3, 1), (1, 2))
    assert bad.violations()


def test_dual_coefficients_rejects_invalid():
    with pytest.raises(ValueError):
        dual_coefficients(CoefficientVector((0, 0, 2)))


def test_binomial_row():
    assert binomial_row(25) == tuple(comb(25, k) for k in range(26))


def test_serialisation_round_trips():
    cv = brute_force_coefficients(make_hammock(3, 5))
    assert coefficients_from_json(coefficients_to_json(cv), (3, 5)) == cv
    assert coefficients_from_csv(coefficients_to_csv(cv), (3, 5)) == cv
    doc = json.dumps({"N": [str(v) for v in cv.N], "dims": [3, 5]})
    assert coefficients_from_json(doc) == cv


def test_csv_rejects_gaps():
    with pytest.raises(ValueError):
        coefficients_from_csv("k,N_k\n0,0\n2,1\n")
