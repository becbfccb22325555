"""Parsing, exporting, and round-tripping the JSON document format."""

import json

import pytest

from bicfrac.builders import (
    appendix_toy,
    collapse_loop,
    point_into_discrete2,
    toy_classes,
    toyq,
)
from bicfrac.cli import fixture_text
from bicfrac.fractions import materialize_fractions
from bicfrac.presentation import (
    Presentation,
    PresentationError,
    export_presentation,
    load_document,
    parse_presentation,
)
from bicfrac.psfun import identity_psfun, validate_psfun
from bicfrac.wclass import check_bf


def roundtrip(pres: Presentation) -> Presentation:
    return parse_presentation(export_presentation(pres))


def test_toy_roundtrip_is_exact():
    B = appendix_toy()
    pres = Presentation(
        bicat=B,
        classes=dict(toy_classes(B)),
        psfuns={"identity": identity_psfun(B)},
        name="appx-toy",
    )
    back = roundtrip(pres)
    assert back.bicat == B
    assert back.classes.keys() == pres.classes.keys()
    for k in pres.classes:
        assert back.classes[k].members == pres.classes[k].members
    assert back.psfuns["identity"] == pres.psfuns["identity"]
    # A second pass has to produce identical bytes.
    assert export_presentation(back) == export_presentation(pres)


def test_materialized_localization_roundtrips():
    B = appendix_toy()
    loc = materialize_fractions(B, toy_classes(B)["W"])
    pres = Presentation(bicat=loc.bicat, classes={}, psfuns={}, name="toy-frac")
    back = roundtrip(pres)
    assert back.bicat == loc.bicat


def test_fixture_documents_resolve_psfun_references():
    doc = load_document("fixtures/collapse-loop.json")
    F = doc.psfuns["collapse"]
    assert validate_psfun(F).passed
    B = appendix_toy()
    assert F == collapse_loop(B, toyq())

    doc = load_document("fixtures/point-into-discrete2.json")
    F = doc.psfuns["point"]
    assert validate_psfun(F).passed
    from bicfrac.builders import discrete2, trivial_one

    assert F.f0 == point_into_discrete2(trivial_one(), discrete2()).f0


def test_all_shipped_fixtures_parse_and_validate():
    from pathlib import Path

    from bicfrac.core import validate_bicat

    for path in sorted(Path("fixtures").glob("*.json")):
        doc = load_document(str(path))
        assert validate_bicat(doc.bicat).passed, path
        for F in doc.psfuns.values():
            assert validate_psfun(F).passed, path
        for cls in doc.classes.values():
            assert cls.members <= {c.id for c in doc.bicat.one_cells}


def test_classes_survive_roundtrip_through_bf_checker():
    text = fixture_text("appx-toy")
    doc = parse_presentation(text)
    assert check_bf(doc.bicat, doc.classes["W"]).passed


def mutate(edit):
    data = json.loads(fixture_text("appx-toy"))
    edit(data)
    return json.dumps(data)


@pytest.mark.parametrize(
    "edit, fragment",
    [
        (lambda d: d["one_cells"].append(["v", "A", "B"]), "duplicate id"),
        (lambda d: d["two_cells"].append(["bad", "idB", "idB"]), "missing entry"),
        (lambda d: d["vcomp"].pop(), "missing entry"),
        (lambda d: d["hcomp1"].append(["v", "ghost", "v"]), "undeclared"),
        (lambda d: d.pop("runit"), "runit"),
        (lambda d: d["id1"].pop(), "missing entry"),
        (lambda d: d["psfuns"][0]["f1"].pop(), "missing entry"),
        (lambda d: d["classes"].update(W=["v", "nope"]), "undeclared"),
    ],
)
def test_parser_names_the_broken_entry(edit, fragment):
    with pytest.raises(PresentationError, match=fragment):
        parse_presentation(mutate(edit))


def test_parser_rejects_non_json_and_wrong_shapes():
    with pytest.raises(PresentationError, match="JSON"):
        parse_presentation("not json {")
    with pytest.raises(PresentationError, match="object"):
        parse_presentation("[1, 2]")
    with pytest.raises(PresentationError, match="objects"):
        parse_presentation("{}")


def test_external_psfun_reference_requires_file_location():
    text = fixture_text("collapse-loop")
    with pytest.raises(PresentationError, match="file location"):
        parse_presentation(text)
