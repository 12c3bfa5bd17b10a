import pytest

import latcon


def test_s7_congruences():
    s7 = latcon.named_lattice("s7")
    assert s7.size == 7
    cons = latcon.congruences(s7.lattice)
    assert len(cons) == 5
    assert cons[0] == list(range(7))


def test_hom_count_matches_isotone_maps():
    con = latcon.congruence_lattice(latcon.named_lattice("s7").lattice)
    homs = latcon.bounded_homs(con, con)
    assert len(homs) == latcon.isotone_map_count(con, con) == 11


def test_filter_representation_all_homs():
    s7 = latcon.named_lattice("s7")
    for k in range(11):
        out = latcon.filter_representation(s7, s7, k)
        assert out["passed"]
        assert out["report"]["summary"] is True


def test_ideal_representation_and_condition():
    holds, witnesses = latcon.check_ideal(latcon.named_lattice("s7"))
    assert not holds
    assert witnesses == ["{1,3}{2,5}{4,6}"]
    with pytest.raises(latcon.LatconError):
        latcon.ideal_representation(latcon.named_lattice("m3"), latcon.named_lattice("s7"))
    g = latcon.grid(2, 3)
    assert latcon.ideal_representation(latcon.named_lattice("m3"), g)["passed"]
    assert latcon.is_simple(latcon.simple_ideal_embedding(g).lattice)


def test_json_round_trip():
    r = latcon.named_lattice("s7+eye")
    back = latcon.rect_from_json(r.to_json())
    assert back.lattice == r.lattice
    assert back.eyes == r.eyes


def test_errors():
    with pytest.raises(latcon.LatconError):
        latcon.named_lattice("nothing")
    with pytest.raises(latcon.LatconError):
        latcon.lattice_from_json({"size": 2})
    with pytest.raises(latcon.LatconError):
        latcon.grid(2, 2).lattice.meet(0, 9)


def test_render():
    svg = latcon.render_svg(latcon.named_lattice("s7"))
    assert svg.count("<circle") == 7
    assert svg.count('class="steep"') == 1
