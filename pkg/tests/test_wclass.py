"""Classes of 1-cells: closure axioms, fillers, saturation, quasi-units."""

import pytest

from bicfrac.builders import appendix_toy, arrow2, iso2, iso2_classes, toy_classes
from bicfrac.wclass import (
    WClass,
    check_bf,
    find_bf3_filler,
    internal_equivalences_class,
    is_saturated,
    quasi_units,
    saturate,
)


@pytest.fixture
def toy():
    return appendix_toy()


@pytest.fixture
def classes(toy):
    return toy_classes(toy)


def test_wclass_container_protocol(toy, classes):
    W = classes["W"]
    assert "v" in W and "idA" in W
    assert len(W) == 3
    assert set(W) == {"idA", "idB", "v"}
    assert WClass.of(toy, ["v"], "x").members == frozenset({"v"})
    with pytest.raises(Exception):
        WClass.of(toy, ["ghost"], "x")


def test_full_and_minimal_classes_satisfy_axioms(toy, classes):
    for name in ("W", "Wmin"):
        rep = check_bf(toy, classes[name])
        assert rep.passed, [v.axiom for v in rep.verdicts.values() if not v.holds]


def test_class_without_identity_fails(toy, classes):
    rep = check_bf(toy, classes["WnoId"])
    assert not rep.passed
    failed = {v.axiom for v in rep.verdicts.values() if not v.holds}
    assert failed == {"BF1", "BF3", "BF4"}
    assert rep["BF1"].counterexample == ("A", "idA")


def test_bf3_filler_square(toy, classes):
    W = classes["W"]
    # Cospan idB <- B -> B with v: the least square routes through A.
    assert find_bf3_filler(toy, W, "v", "idB") == ("A", "v", "idA", "iv")
    assert find_bf3_filler(toy, W, "idB", "idB") == ("A", "v", "v", "iv")
    assert find_bf3_filler(toy, classes["Wmin"], "idB", "idB") == ("B", "idB", "idB", "iB")


def test_saturation(toy, classes):
    W, Wmin = classes["W"], classes["Wmin"]
    sat_min = saturate(toy, Wmin)
    assert sat_min.members.members == {"idA", "idB"}
    assert saturate(toy, W).members.members == {"idA", "idB", "v"}
    assert is_saturated(toy, W)
    assert not is_saturated(iso2(), iso2_classes(iso2())["Wmin"])
    for f, (g, h) in sat_min.witnesses.items():
        assert toy.hcomp1[(f, g)] in Wmin and toy.hcomp1[(g, h)] in Wmin


def test_saturation_of_minimal_class_is_the_equivalences(toy, classes):
    i2 = iso2()
    got = saturate(i2, iso2_classes(i2)["Wmin"]).members.members
    assert got == internal_equivalences_class(i2).members
    assert (
        saturate(toy, classes["Wmin"]).members.members
        == internal_equivalences_class(toy).members
    )


def test_quasi_units(toy):
    assert quasi_units(toy).members == {"idA", "idB"}
    assert quasi_units(iso2()).members == {"idX", "idY"}
    assert quasi_units(arrow2()).members == {"idX", "idY"}


def test_bf_verdicts_carry_witnesses(toy, classes):
    rep = check_bf(toy, classes["W"])
    v3 = rep["BF3"]
    assert v3.holds and v3.witness is not None
    assert v3.checked > 0
