import math

import pytest

import hypotree as ht


def test_construct_and_inspect():
    s = ht.star(5)
    assert s.order() == 5
    assert s.degree(0) == 4
    assert ht.max_degree(s) == 4
    assert sorted(s.neighbors(0)) == [1, 2, 3, 4]
    assert len(s.edges()) == 4

    p = ht.path(4)
    assert ht.canonical_code(p) != ht.canonical_code(ht.star(4))
    assert ht.canonical_code(ht.Tree(3, [(0, 1), (1, 2)])) == ht.canonical_code(ht.path(3))


def test_energy_report():
    r = ht.energy(ht.star(5))
    assert r["energy"] == pytest.approx(4.0, abs=1e-9)
    assert r["nullity"] == 3
    assert r["method"] == "exact_roots"
    assert abs(r["energy"] - 4.0) <= r["error_bound"]
    assert ht.char_poly_coeffs(ht.star(5)) == ["0", "0", "0", "-4", "0", "1"]

    dense = ht.energy(ht.path(12), tol=1e-10, method="dense")
    exact = ht.energy(ht.path(12))
    assert dense["energy"] == pytest.approx(exact["energy"], abs=1e-8)


def test_families():
    t = ht.tstar(10, 3)
    assert t.order() == 10
    assert ht.max_degree(t) == 4
    assert ht.energy(t)["energy"] == pytest.approx(9.61686, abs=5e-5)

    digits = ht.tstar_digits(6, 3)
    assert digits["a"] == [10, 1]
    assert digits["terminal"] == "all_prev"

    m = ht.max_nullity_tree(11, 5)
    assert ht.nullity(m) == 7
    assert ht.nullity_cover_size(11, 5) == 2

    w = ht.figure1("W")
    assert w.order() == 7
    assert ht.energy(w)["energy"] == pytest.approx(2 * (2 + math.sqrt(2)), abs=1e-9)


def test_classification_and_witness():
    v = ht.strong_exists(9, 4)
    assert v["strong"] is True
    assert ht.hypo_exists(8, 3)["hypo"] is False
    assert ht.degree_feasible(4, 4) is False

    w = ht.witness(12, 5, strong=True)
    cert = w["certificate"]
    assert cert["energy"] + cert["error_bound"] < 11
    assert w["witness"].order() == 12
    assert ht.max_degree(w["witness"]) == 5
    assert len(w["witness"].edges()) == 11

    assert ht.certify(ht.star(6), strong=True)
    assert not ht.certify(ht.star(5), strong=True)


def test_enumeration():
    trees = ht.all_free_trees(7)
    assert len(trees) == 11
    codes = {ht.canonical_code(t) for t in trees}
    assert len(codes) == 11

    best, report, unique = ht.min_energy_tree(6, 4)
    assert unique
    assert ht.canonical_code(best) == ht.canonical_code(ht.tstar(6, 3))
    assert report["energy"] == pytest.approx(5.8186258, abs=1e-5)

    assert ht.exhaustive_verdict(7, 3, strong=False) is True
    assert ht.exhaustive_verdict(8, 5, strong=True) is False


def test_io_round_trip():
    t = ht.tstar(9, 3)
    again = ht.parse_edge_list(ht.serialize_edge_list(t))
    assert ht.canonical_code(again) == ht.canonical_code(t)
    assert "graph" in ht.to_dot(t)


def test_errors_surface_as_one_type():
    with pytest.raises(ht.HypotreeError):
        ht.Tree(4, [(0, 1), (1, 2), (2, 3), (3, 0)])  # a cycle, edge count wrong
    with pytest.raises(ht.HypotreeError):
        ht.figure1("nope")
    with pytest.raises(ht.HypotreeError):
        ht.exhaustive_verdict(25, 3, strong=False)
    with pytest.raises(ValueError):
        ht.energy(ht.star(4), tol=0.0)
