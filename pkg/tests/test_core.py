"""Tables, cell operations, pasting evaluation and the law checker."""

import dataclasses

import pytest

from bicfrac.builders import appendix_toy, discrete2, iso2, toyq
from bicfrac.core import (
    Assoc,
    Atom,
    FinBicat,
    IdOn,
    Inv,
    InvertibilityError,
    LUnit,
    RUnit,
    StructureError,
    TypingError,
    VComp,
    WhiskL,
    WhiskR,
    eval_pasting,
    hcompose1,
    hcompose2,
    infer_boundary,
    internal_equivalence_witness,
    internal_equivalences,
    inv_cells2,
    is_invertible2,
    two_cell_inverse,
    validate_bicat,
    vchain,
    vcompose,
    vcompose_all,
    whisker_left,
    whisker_right,
)


@pytest.fixture
def toy():
    return appendix_toy()


@pytest.fixture
def loopy():
    return appendix_toy(loop_square="loop")


def test_lookup_order_follows_declaration(toy):
    assert toy.hom1("A", "B") == ["v"]
    assert toy.hom1("B", "B") == ["idB"]
    assert [t.id for t in toy.two_cells] == ["iA", "iB", "iv", "loop"]
    assert toy.cells2("idB", "idB") == ["iB", "loop"]
    assert toy.cells2("v", "idA") == []


def test_structural_errors_at_construction(toy):
    with pytest.raises(StructureError):
        dataclasses.replace(toy, objects=("A", "A", "B"))
    bad = list(toy.two_cells)
    bad[3] = dataclasses.replace(bad[3], tgt="v")
    with pytest.raises(StructureError):
        dataclasses.replace(toy, two_cells=tuple(bad))


def test_cell_operations(toy):
    assert hcompose1(toy, "idB", "v") == "v"
    assert vcompose(toy, "loop", "loop") == "iB"
    assert whisker_left(toy, "idB", "loop") == "loop"
    assert whisker_right(toy, "loop", "v") == "iv"
    assert vcompose_all(toy, ["loop", "loop", "loop"]) == "loop"


def test_horizontal_composition_of_two_cells(toy):
    # Both whisker orders must agree; this is the interchange identity.
    assert hcompose2(toy, "loop", "iv") == "iv"
    left = vcompose(toy, whisker_right(toy, "loop", "v"), whisker_left(toy, "idB", "iv"))
    right = vcompose(toy, whisker_left(toy, "idB", "iv"), whisker_right(toy, "loop", "v"))
    assert left == right == "iv"


def test_inverses(toy, loopy):
    assert two_cell_inverse(toy, "loop") == "loop"
    assert two_cell_inverse(loopy, "loop") is None
    assert is_invertible2(toy, "loop")
    assert not is_invertible2(loopy, "loop")
    assert inv_cells2(toy, "idB", "idB") == ["iB", "loop"]
    assert inv_cells2(loopy, "idB", "idB") == ["iB"]


def test_internal_equivalences(toy):
    assert internal_equivalences(toy) == ["idA", "idB"]
    assert internal_equivalence_witness(toy, "v") is None
    i2 = iso2()
    assert internal_equivalences(i2) == ["idX", "idY", "e", "ep"]
    g, eta, eps = internal_equivalence_witness(i2, "e")
    assert g == "ep"


def test_locally_discrete_flag(toy):
    assert not toy.is_locally_discrete()
    assert toyq().is_locally_discrete()
    assert discrete2().is_locally_discrete()


def test_infer_boundary_and_eval(toy):
    e = vchain(Atom("loop"), Atom("loop"))
    assert infer_boundary(toy, e) == ("idB", "idB")
    assert eval_pasting(toy, e) == "iB"
    w = WhiskR(Atom("loop"), "v")
    assert infer_boundary(toy, w) == ("v", "v")
    assert eval_pasting(toy, w) == "iv"
    assert eval_pasting(toy, IdOn("v")) == "iv"
    assert eval_pasting(toy, Assoc("idB", "idB", "v")) == "iv"
    assert eval_pasting(toy, RUnit("v")) == "iv"
    assert eval_pasting(toy, LUnit("v")) == "iv"


def test_eval_inverse_nodes(toy, loopy):
    assert eval_pasting(toy, Inv(Atom("loop"))) == "loop"
    with pytest.raises(InvertibilityError):
        eval_pasting(loopy, Inv(Atom("loop")))


def test_typing_errors(toy):
    with pytest.raises(TypingError):
        infer_boundary(toy, VComp(Atom("iv"), Atom("loop")))
    with pytest.raises(TypingError):
        infer_boundary(toy, WhiskL("v", Atom("loop")))
    with pytest.raises(TypingError):
        eval_pasting(toy, WhiskR(Atom("iv"), "v"))


def test_whisker_nesting_matches_cell_table(toy):
    e = WhiskL("idB", WhiskR(Atom("loop"), "v"))
    assert eval_pasting(toy, e) == whisker_left(
        toy, "idB", whisker_right(toy, "loop", "v")
    )


def test_validator_passes_known_instances(toy, loopy):
    for B in (toy, loopy, toyq(), iso2(), discrete2()):
        rep = validate_bicat(B)
        assert rep.passed, rep.violations
    stripped = toy.without_strict_flag()
    assert not stripped.strict
    assert validate_bicat(stripped).passed


def test_validator_catches_broken_vcomp(toy):
    vc = dict(toy.vcomp)
    vc[("loop", "iB")] = "iB"  # composing with the identity must give loop back
    rep = validate_bicat(dataclasses.replace(toy, vcomp=vc))
    assert not rep.passed


def test_validator_catches_broken_whisker(toy):
    wr = dict(toy.whisk_right)
    wr[("loop", "v")] = "iv"  # already iv; break the other entry instead
    wr[("iB", "v")] = "iv"
    rep = validate_bicat(dataclasses.replace(toy, whisk_right=wr))
    assert rep.passed  # those are the true values
    wr[("loop", "idB")] = "iB"
    rep = validate_bicat(dataclasses.replace(toy, whisk_right=wr))
    assert not rep.passed


def test_validator_catches_strict_flag_lie(toy):
    assoc = dict(toy.assoc)
    assoc[("idB", "idB", "idB")] = "loop"
    rep = validate_bicat(dataclasses.replace(toy, assoc=assoc))
    assert not rep.passed
    assert any("strict" in law for law in rep.laws_failed()) or rep.violations


def test_validator_catches_missing_table_entry(toy):
    hc = dict(toy.hcomp1)
    del hc[("idB", "v")]
    rep = validate_bicat(dataclasses.replace(toy, hcomp1=hc))
    assert not rep.passed
