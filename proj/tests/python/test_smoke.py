import json

import pytest

import mumford


def test_element_arithmetic():
    assert mumford.element_add(3, 1, "pi", "2*pi") == "0"
    assert mumford.element_mul(5, 1, "pi^(-1)", "pi^2") == "pi"
    assert mumford.element_valuation(2, 1, "pi^3 + pi^5") == 3
    assert mumford.element_valuation(2, 1, "0") is None


def test_tree_queries():
    assert mumford.tree_distance(2, 1, 0, 4) == 4
    win = json.loads(mumford.tree_window(2, 1, 2))
    # ball of radius 2 in a 3-regular tree: 1 + 3 + 6 vertices
    assert len(win["vertices"]) == 10
    mir = json.loads(mumford.translation_mirror(3, 1, "pi", 2))
    assert len(mir["vertices"]) > 0


def test_genus_bookkeeping():
    tree = json.dumps(
        {
            "vertices": [{"id": 0, "tag": "I"}, {"id": 1, "tag": "Dn(5)"}],
            "edges": [{"a": 0, "b": 1, "tag": "Zn(5)"}],
            "ends": [],
        }
    )
    from fractions import Fraction

    assert Fraction(mumford.tree_mu(tree, 7)) == Fraction(1, 5) - Fraction(1, 60) - Fraction(1, 10)
    assert mumford.tree_genus(tree, 7, "60") == "6"


def test_hurwitz():
    # classical Klein quartic data: |G| = 168, three tame branch points
    assert mumford.hurwitz_genus("168", [("2", "1"), ("3", "1"), ("7", "1")]) == "3"
    assert mumford.compare_to_bound("60", "6") == "greater"
    assert "48" in mumford.exceptional_orders("5")


def test_case_and_family_reports():
    rep = mumford.case_report(["F2", "p=3", "t=1", "n=2", "t1=0", "t2=0"])
    assert rep["mu"] == "1/12"
    assert rep["attains_bound"] is True
    fam = mumford.family_asm(3, 1)
    assert fam["genus"] == "4"
    assert fam["autOrder"] == "36"
    assert fam["boundVerdict"] == "equal"


def test_discreteness():
    good = mumford.asm_discrete(3, 1, -1, 2)
    assert good["disjoint"] is True
    assert good["violations"] == []
    bad = mumford.asm_discrete(3, 1, 0, 0)
    assert bad["disjoint"] is False


def test_tables_and_census():
    mumford.check_table("5.4.3")
    assert mumford.diff_table("6.3") == []
    rep = mumford.census()
    assert rep["total"] == 134
    assert rep["nonsolvable_total"] == 1
    with pytest.raises(mumford.TableMismatchError):
        raise mumford.TableMismatchError("sanity: exception type is exported")
