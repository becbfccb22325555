"""Spans, representative classes and the materialized fraction bicategory."""

import pytest

from bicfrac.builders import appendix_toy, arrow2, iso2, iso2_classes, toy_classes, toyq
from bicfrac.core import PreconditionError, validate_bicat
from bicfrac.fractions import (
    LocalizationError,
    Span,
    TwoCellRep,
    compose_spans,
    enumerate_spans,
    materialize_fractions,
    rep_equivalence_witness,
    reps_equivalent,
    span_is_equivalence,
    universal_pseudofunctor,
)
from bicfrac.wclass import WClass


@pytest.fixture
def toy():
    return appendix_toy()


@pytest.fixture
def classes(toy):
    return toy_classes(toy)


def test_span_enumeration(toy, classes):
    full = enumerate_spans(toy, classes["W"])
    assert len(full) == 5
    minimal = enumerate_spans(toy, classes["Wmin"])
    assert len(minimal) == 3
    assert Span("A", "idA", "v") in full
    assert Span("A", "v", "v") in full
    assert Span("A", "v", "v") not in minimal


def test_identity_span_composition_routes_through_the_class(toy, classes):
    # With v invertible-to-be, the least filler for the cospan (idB, idB)
    # has apex A, so composing identity spans at B leaves the identity.
    idB = Span("B", "idB", "idB")
    comp, filler = compose_spans(toy, classes["W"], idB, idB)
    assert comp == Span("A", "v", "v")
    comp_min, _ = compose_spans(toy, classes["Wmin"], idB, idB)
    assert comp_min == idB


def test_span_equivalence(toy, classes):
    assert span_is_equivalence(toy, classes["W"], Span("A", "idA", "v"))
    assert not span_is_equivalence(toy, classes["Wmin"], Span("A", "idA", "v"))
    assert span_is_equivalence(toy, classes["Wmin"], Span("B", "idB", "idB"))


def test_rep_equivalence_is_reflexive_and_symmetric(toy, classes):
    W = classes["W"]
    s = Span("B", "idB", "idB")
    r1 = TwoCellRep("B", "idB", "idB", "iB", "iB")
    r2 = TwoCellRep("B", "idB", "idB", "iB", "loop")
    assert reps_equivalent(toy, W, s, s, r1, r1)
    # The loop collapses onto the identity once v can be inverted.
    assert reps_equivalent(toy, W, s, s, r1, r2)
    assert reps_equivalent(toy, W, s, s, r2, r1)
    assert rep_equivalence_witness(toy, W, s, s, r1, r2) is not None
    assert not reps_equivalent(toy, classes["Wmin"], s, s, r1, r2)


def test_materialized_localization_shape(toy, classes):
    loc = materialize_fractions(toy, classes["W"])
    assert len(loc.bicat.one_cells) == 5
    assert len(loc.bicat.two_cells) == 7
    assert validate_bicat(loc.bicat).passed
    assert not loc.bicat.strict

    loc_min = materialize_fractions(toy, classes["Wmin"])
    assert len(loc_min.bicat.one_cells) == 3
    assert len(loc_min.bicat.two_cells) == 4
    assert validate_bicat(loc_min.bicat).passed


def test_localization_requires_the_axioms(toy, classes):
    with pytest.raises((LocalizationError, PreconditionError)):
        materialize_fractions(toy, classes["WnoId"])


def test_localization_accessors(toy, classes):
    loc = materialize_fractions(toy, classes["W"])
    idB = loc.id_span("B")
    assert idB == Span("B", "idB", "idB")
    assert loc.sid(idB) == "(B|idB|idB)"
    assert loc.span("(A|idA|v)") == Span("A", "idA", "v")
    assert [loc.sid(s) for s in loc.hom_spans("A", "B")]
    cid = loc.bicat.id2["(B|idB|idB)"]
    cls = loc.cls(cid)
    assert cls.src == idB and cls.tgt == idB
    for r in cls.reps:
        assert loc.class_of(idB, idB, r) == cid


def test_universal_map_collapses_exactly_when_the_class_demands(toy, classes):
    UW = universal_pseudofunctor(materialize_fractions(toy, classes["W"]))
    assert UW.f2["loop"] == UW.f2["iB"]
    Umin = universal_pseudofunctor(materialize_fractions(toy, classes["Wmin"]))
    assert Umin.f2["loop"] != Umin.f2["iB"]
    assert UW.f1["v"] == "(A|idA|v)"
    assert UW.f0 == {"A": "A", "B": "B"}


def test_other_fixture_localizations_validate():
    i2 = iso2()
    for cname, W in iso2_classes(i2).items():
        loc = materialize_fractions(i2, W)
        assert validate_bicat(loc.bicat).passed, cname
    a2 = arrow2()
    loc = materialize_fractions(a2, WClass.of(a2, ["idX", "idY"], "W"))
    assert validate_bicat(loc.bicat).passed
    q = toyq()
    loc = materialize_fractions(q, WClass.of(q, ["idA", "idB", "v"], "W"))
    assert validate_bicat(loc.bicat).passed
