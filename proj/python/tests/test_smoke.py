import pytest

import poisson_ore as po

GWJ = "x=2*y,y=y^2+x"


def test_canonical_form():
    assert po.canonical("(x + i*y)*(x - i*y)") == "x^2 + y^2"


def test_bracket():
    assert po.bracket("z", "x", delta=GWJ) == "2*y"
    assert po.bracket("y", "z", exact="x^2+y^2") == "2*x"


def test_jacobi_residual():
    assert po.jacobi("y", "z", "x") == (False, "-x - y - z")
    assert po.jacobi("x*y-1", "y^3", "0") == (True, "0")


def test_ore_mul():
    assert po.ore_mul("x=1,y=0", "z", "x") == "x*z + 1"


def test_darboux():
    found = po.darboux(GWJ, dmax=2)
    assert [c["q"] for c in found["certificates"]] == ["y^2 + x + 1"]
    assert found["certificates"][0]["cofactor"] == "2*y"
    assert found["complete"]


def test_classify_sides():
    poisson = po.classify(GWJ)
    ore = po.classify(GWJ, side="ore")
    assert list(poisson) == ["side", "completeness", "entries"]
    assert ore["side"] == "ore"
    assert [e["generators"] for e in ore["entries"]] == [e["generators"] for e in poisson["entries"]]


def test_shamsuddin():
    assert po.shamsuddin("x=1,y=x*y+1") == (True, None)
    assert po.shamsuddin("x=1,y=x") == (False, "1/2*x^2")


def test_errors():
    with pytest.raises(po.ParseError):
        po.canonical("2x")
    with pytest.raises(po.UnknownVariable):
        po.canonical("w")
    with pytest.raises(ValueError):
        po.shamsuddin("x=x,y=1")


def test_cli_entry():
    code, out, _ = po.run("example", "gwj")
    assert code == 0
    assert "expected spectrum: match" in out
