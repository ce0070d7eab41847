import pytest
from hypothesis import given, strategies as st

from mmnrel.network import (
    Dims,
    MatchstickNetwork,
    dual,
    format_network,
    from_matrix,
    make_hammock,
    make_pos,
    make_sop,
    parse_network,
    read_network,
    to_device_graph,
    write_network,
)


@st.composite
def networks(draw, max_side=6):
    l = draw(st.integers(1, max_side))
    w = draw(st.integers(1, max_side))
    bits = draw(st.lists(st.integers(0, 1), min_size=(l - 1) * (w - 1), max_size=(l - 1) * (w - 1)))
    return from_matrix(l, w, bits)


def test_pos_and_sop_matrices():
    assert make_pos(3, 4).flat_bits() == [0] * 6
    assert make_sop(3, 4).flat_bits() == [1] * 6
    assert make_pos(1, 5).bits == ()


def test_hammock_4x4_brick_wall():
    # rows i = 1..3, columns j = 1..3: matchstick where i + j is odd
    assert make_hammock(4, 4).bits == ((0, 1, 0), (1, 0, 1), (0, 1, 0))
    assert make_hammock(4, 4, "Hplus").bits == ((1, 0, 1), (0, 1, 0), (1, 0, 1))


def test_hplus_needs_even_sides():
    with pytest.raises(ValueError):
        make_hammock(3, 4, "Hplus")
    with pytest.raises(ValueError):
        make_hammock(4, 4, "X")


def test_dims_validation():
    with pytest.raises(ValueError):
        Dims(0, 3)
    with pytest.raises(TypeError):
        Dims(2.0, 3)


def test_matrix_shape_and_entries_checked():
    with pytest.raises(ValueError):
        from_matrix(3, 3, [0, 1, 1])
    with pytest.raises(ValueError):
        MatchstickNetwork(Dims(2, 2), ((2,),))


def test_nested_and_flat_inputs_agree():
    assert from_matrix(3, 3, [[1, 0], [0, 1]]) == from_matrix(3, 3, [1, 0, 0, 1])


def test_dual_of_pos_is_sop_transposed_dims():
    d = dual(make_pos(3, 5))
    assert (d.l, d.w) == (5, 3)
    assert d == make_sop(5, 3)


def test_dual_of_odd_hammock_3x5():
    d = dual(make_hammock(3, 5))
    assert (d.l, d.w) == (5, 3)
    assert d.bits == ((1, 0), (0, 1), (1, 0), (0, 1))


@given(networks())
def test_dual_is_an_involution(net):
    assert dual(dual(net)) == net


@given(networks())
def test_dual_entries_complement_transpose(net):
    d = dual(net)
    for i in range(1, net.l):
        for j in range(1, net.w):
            assert d.matchstick(j, i) == 1 - net.matchstick(i, j)


@given(networks())
def test_text_round_trip(net):
    assert parse_network(format_network(net)) == net


def test_file_round_trip(tmp_path):
    net = make_hammock(4, 5)
    path = tmp_path / "h45.txt"
    write_network(net, path)
    back = read_network(path)
    assert back == net and back.label == "h45"


def test_parse_accepts_compact_rows_and_comments():
    net = parse_network("# brick wall\n3 3\n01\n10\n")
    assert net.bits == ((0, 1), (1, 0))


@pytest.mark.parametrize("text", ["", "3\n", "3 3\n01\n", "2 3\n0x\n"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_network(text)


def test_device_graph_sizes():
    net = make_hammock(3, 5)
    g = to_device_graph(net)
    assert g.n == 15
    assert len(g.device_edges) == 15
    assert len(g.perfect_edges) == 2 * 5 + sum(net.flat_bits())


def test_contracted_graph_sop_merges_columns():
    edges, s, t = to_device_graph(make_sop(3, 3)).contracted()
    # S, two internal cuts, T: 4 super-nodes
    assert len({v for e in edges for v in e} | {s, t}) == 4
