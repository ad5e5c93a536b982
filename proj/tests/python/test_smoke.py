import json
import math

import pytest

import bsconf


def test_poset_sizes():
    assert len(bsconf.poset(7)["elements"]) == 4
    assert len(bsconf.poset(12)["elements"]) == 6
    assert bsconf.compare(12, "tree_3", "tree_1") == bsconf.compare(12, "tree_3", "tree_2")
    assert "tree_1 -> tree_3" in bsconf.poset_dot(12)


def test_nadic_against_modular():
    for a in range(0, 216, 7):
        for b in range(0, 216, 11):
            x, y = bsconf.NAdic(6, 3, a), bsconf.NAdic(6, 3, b)
            assert (x + y).residue == (a + b) % 216
            assert (x * y).residue == (a * b) % 216


def test_base_n_numbers():
    x = bsconf.NAryNumber.from_fraction(1, 6, 6)
    assert str(x) == "0.1"
    assert x.shift(1) == bsconf.NAryNumber.parse("1", 6)
    assert math.isclose((x + x).to_float(), 1 / 3)
    with pytest.raises(bsconf.Error):
        bsconf.NAryNumber.from_fraction(1, 5, 6)


def test_word_lengths_agree():
    for k in range(1, 4):
        h = str(bsconf.NAryNumber.from_fraction(1, 2**k, 2))
        assert bsconf.word_length(2, h, 0, [1]) == 2 * k + 1
        assert bsconf.word_length_bfs(2, h, 0, [1], 2 * k + 1) == 2 * k + 1


def test_tree_ball_and_h2():
    ball = bsconf.tree_ball(2, [1], 2)
    assert len(ball["vertices"]) == 10
    assert math.isclose(bsconf.h2_displacement(5, "0", 1), math.log(5))


def test_confining_and_wreath():
    rep = bsconf.verify_s(6, [1], 3)
    assert rep["axiom_c_k0"] == 0
    facts = bsconf.qi_facts(2, 3, 11)
    assert facts["max_coeff"][3] == 8
    assert bsconf.separation_bound(10, 1, 2)["length_lower_bound"] == 16


def test_cli_passthrough():
    rc, out, err = bsconf.cli("poset", "--n", 30)
    assert rc == 0 and err == ""
    assert len(json.loads(out)["elements"]) == 10
    assert bsconf.cli("poset", "--n", 1)[0] == 1
