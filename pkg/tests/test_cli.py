"""End-to-end command behavior: exit codes, output formats, flag handling."""

import json

from bicfrac.cli import run_command
from bicfrac.presentation import load_document
from bicfrac.core import validate_bicat

TOY = "fixtures/appx-toy.json"
LOOPY = "fixtures/appx-toy-loopy.json"
ISO2 = "fixtures/iso2.json"
COLLAPSE = "fixtures/collapse-loop.json"


def run(capsys, *argv):
    code = run_command(list(argv))
    out = capsys.readouterr().out
    return code, out


def machine(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "machine")
    return code, json.loads(out)


def test_validate_good_document(capsys):
    code, out = run(capsys, "validate", TOY)
    assert code == 0
    assert "PASS" in out


def test_validate_missing_file_is_usage_error(capsys):
    code, out = run(capsys, "validate", "fixtures/no-such-doc.json")
    assert code == 2


def test_unknown_flag_is_usage_error(capsys):
    assert run_command(["validate", TOY, "--bogus-flag"]) == 2


def test_jobs_must_be_positive(capsys):
    code, _ = run(capsys, "check-bf", TOY, "--jobs", "0")
    assert code == 2


def test_check_bf_pass_and_fail(capsys):
    code, out = run(capsys, "check-bf", TOY, "--class", "W")
    assert code == 0
    code, out = run(capsys, "check-bf", TOY, "--class", "WnoId")
    assert code == 1
    assert "BF1" in out
    code, out = run(capsys, "check-bf", TOY, "--class", "nope")
    assert code == 2


def test_saturate_always_succeeds(capsys):
    code, out = run(capsys, "saturate", TOY, "--class", "Wmin")
    assert code == 0
    assert "idA" in out and "idB" in out


def test_saturate_machine_output(capsys):
    code, doc = machine(capsys, "saturate", TOY, "--class", "Wmin")
    assert code == 0
    assert sorted(doc["members"]) == ["idA", "idB"]
    assert set(doc["witnesses"]) <= set(doc["members"])


def test_localize_writes_valid_document(capsys, tmp_path):
    out_path = tmp_path / "frac.json"
    code, _ = run(capsys, "localize", TOY, "--class", "W", "--out", str(out_path))
    assert code == 0
    doc = load_document(str(out_path))
    assert validate_bicat(doc.bicat).passed
    assert not doc.bicat.strict


def test_localize_rejects_bad_class(capsys):
    code = run_command(["localize", TOY, "--class", "WnoId"])
    err = capsys.readouterr().err
    assert code == 3
    assert "precondition violation" in err and "BF1" in err


def test_check_ef_on_universal_map_fails(capsys):
    code, out = run(capsys, "check", TOY, "--conditions", "EF", "--psfun", "UW")
    assert code == 1
    assert "EF3" in out and "FAIL" in out


def test_check_b_on_universal_map_passes(capsys):
    code, out = run(capsys, "check", TOY, "--conditions", "B", "--psfun", "UW")
    assert code == 0
    for tag in ("B1", "B2", "B3", "B4", "B5"):
        assert tag in out


def test_check_b_on_identity_hits_precondition(capsys):
    code = run_command(["check", TOY, "--conditions", "B", "--psfun", "identity"])
    err = capsys.readouterr().err
    assert code == 3
    assert "precondition violation" in err and "internal equivalence" in err


def test_check_a_identity_full_class(capsys):
    code, out = run(
        capsys, "check", TOY, "--conditions", "A", "--psfun", "identity",
        "--class-src", "W", "--class-tgt", "W",
    )
    assert code == 0


def test_check_a_machine_payload_shape(capsys):
    code, doc = machine(
        capsys, "check", TOY, "--conditions", "A", "--psfun", "identity",
        "--class-src", "Wmin", "--class-tgt", "W",
    )
    assert code == 1
    tags = [r["tag"] for r in doc["reports"]]
    assert tags == ["A1", "A2", "A3", "A4", "A5"]
    by_tag = {r["tag"]: r for r in doc["reports"]}
    assert by_tag["A2"]["holds"] is False
    assert by_tag["A2"]["counterexample"] == ["A", "B", "A", "idA", "v"]
    assert by_tag["A4"]["holds"] is False
    assert by_tag["A4"]["counterexample"] == ["iB", "loop", "v"]
    assert by_tag["A1"]["holds"] is True
    assert isinstance(by_tag["A1"]["examined"], int)
    assert doc["passed"] is False


def test_strict_fast_path_does_not_change_verdicts(capsys):
    _, slow = machine(
        capsys, "check", TOY, "--conditions", "A", "--psfun", "identity",
        "--class-src", "Wmin", "--class-tgt", "W",
    )
    _, fast = machine(
        capsys, "check", TOY, "--conditions", "A", "--psfun", "identity",
        "--class-src", "Wmin", "--class-tgt", "W", "--strict-fast-path",
    )
    keep = lambda d: [
        {k: r[k] for k in ("tag", "holds", "counterexample")} for r in d["reports"]
    ]
    assert keep(slow) == keep(fast)


def test_check_x_flags_the_collapse(capsys):
    code, out = run(capsys, "check", COLLAPSE, "--conditions", "X", "--psfun", "collapse")
    assert code == 1
    assert "X2b" in out and "('iB', 'loop')" in out


def test_check_all_families_on_iso2(capsys):
    code, out = run(
        capsys, "check", ISO2, "--conditions", "all", "--psfun", "identity",
        "--class-src", "W", "--class-tgt", "W",
    )
    assert code == 0
    for tag in ("A1", "B1", "EF1", "X1"):
        assert tag in out


def test_cross_validate_exit_and_output(capsys):
    code, out = run(
        capsys, "cross-validate", TOY, "--psfun", "identity",
        "--class-src", "W", "--class-tgt", "Wmin",
    )
    assert code == 0
    assert "lift-biconditional" in out


def test_cross_validate_machine(capsys):
    code, doc = machine(
        capsys, "cross-validate", TOY, "--psfun", "identity",
        "--class-src", "W", "--class-tgt", "W",
    )
    assert code == 0
    one = doc["files"][0]
    names = [s["name"] for s in one["subchecks"]]
    assert "lift-biconditional" in names
    assert one["findings"] == []
    assert one["passed"] is True


def test_demo_appendix_toy(capsys):
    code, out = run(capsys, "demo", "appendix-toy")
    assert code == 0
    for needle in ("closure", "EF3", "B1", "identical"):
        assert needle in out, needle


def test_demo_machine(capsys):
    code, doc = machine(capsys, "demo", "appendix-toy")
    assert code == 0
    assert doc["passed"] is True
    assert len(doc["facts"]) == 5
    assert all(f["passed"] for f in doc["facts"])


def test_loopy_variant_same_condition_verdicts(capsys):
    _, a = machine(capsys, "check", TOY, "--conditions", "EF", "--psfun", "UW")
    _, b = machine(capsys, "check", LOOPY, "--conditions", "EF", "--psfun", "UW")
    assert [r["holds"] for r in a["reports"]] == [r["holds"] for r in b["reports"]]
