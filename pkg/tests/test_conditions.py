"""Decision procedures for the condition families and their cross-checks.

The expected verdicts and counterexamples below were derived by hand from
the table definitions before the checkers existed: the loop 2-cell
whiskered onto ``v`` equals the whiskered identity, so any class
containing ``v`` forces the two apart only over ``idB``, which pins every
failing condition to the pair ``(iB, loop)``.
"""

import pytest

from bicfrac.builders import appendix_toy, theorem_suite, toy_classes
from bicfrac.conditions import (
    build_a5_composite,
    check_A,
    check_B,
    check_EF,
    check_X,
    cross_validate_theorems,
    is_weak_equivalence,
    recheck_witness,
)
from bicfrac.core import (
    Assoc,
    AssocInv,
    Atom,
    Inv,
    PreconditionError,
    TypingError,
    VComp,
    WhiskL,
    WhiskR,
    eval_pasting,
)
from bicfrac.fractions import materialize_fractions, universal_pseudofunctor
from bicfrac.psfun import identity_psfun


@pytest.fixture(scope="module")
def toy():
    return appendix_toy()


@pytest.fixture(scope="module")
def classes(toy):
    return toy_classes(toy)


@pytest.fixture(scope="module")
def suite():
    return {c.name: c for c in theorem_suite()}


@pytest.fixture(scope="module")
def UW(toy, classes):
    return universal_pseudofunctor(materialize_fractions(toy, classes["W"]))


# -- the A family over the scenario suite -------------------------------------

A_FAILURES = {
    "identity-toy-full": {},
    "identity-toy-min": {},
    "identity-toy-mixed": {
        "A2": ("A", "B", "A", "idA", "v"),
        "A4": ("iB", "loop", "v"),
    },
    "collapse-loop-min": {"A4": ("iB", "loop", "idB")},
    "collapse-loop-full": {},
    "point-into-discrete2": {"A1": ("Y",)},
    "identity-iso2-mixed": {},
}


@pytest.mark.parametrize("name", sorted(A_FAILURES))
def test_a_family_verdicts(suite, name):
    case = suite[name]
    fails = {}
    for i in range(1, 6):
        r = check_A(case.psfun, case.w_src, case.w_tgt, i)
        assert r.examined >= 0
        if not r.holds:
            assert r.counterexample is not None
            fails[r.tag] = r.counterexample
        else:
            assert r.counterexample is None
    assert fails == A_FAILURES[name]


def test_a4_counterexample_content_is_the_collapse_pair(suite):
    r = check_A(*_args(suite["identity-toy-mixed"]), 4)
    g1, g2, z = r.counterexample
    assert {g1, g2} == {"iB", "loop"} and z == "v"


def _args(case):
    return case.psfun, case.w_src, case.w_tgt


def test_a_witnesses_recheck(suite):
    for case in suite.values():
        for i in range(1, 6):
            r = check_A(*_args(case), i)
            if r.holds and r.witness is not None:
                assert recheck_witness(case.psfun, r, case.w_src, case.w_tgt), (
                    case.name,
                    r.tag,
                )


def test_check_a_preconditions(toy, classes):
    F = identity_psfun(toy)
    with pytest.raises(PreconditionError, match="BF1"):
        check_A(F, classes["WnoId"], classes["W"], 1)
    with pytest.raises(PreconditionError, match="saturated target"):
        check_A(F, classes["W"], classes["Wmin"], 1)
    with pytest.raises(ValueError):
        check_A(F, classes["W"], classes["W"], 6)


# -- the composite that transports a 2-cell along the comparison data ----------


def test_a5_composite_on_identity_data(toy, classes):
    F = identity_psfun(toy)
    e = build_a5_composite(F, "idB", "idB", "idB", "idB", "idB", "idB", "iB", "iB")
    assert eval_pasting(toy, e) == "iB"
    e = build_a5_composite(F, "idB", "idB", "idB", "idB", "idB", "idB", "iB", "loop")
    assert eval_pasting(toy, e) == "loop"


def test_a5_composite_factor_shape(toy):
    F = identity_psfun(toy)
    e = build_a5_composite(F, "idB", "idB", "idB", "idB", "idB", "idB", "iB", "loop")
    factors = []
    while isinstance(e, VComp):
        factors.append(e.lower)
        e = e.upper
    factors.append(e)
    factors.reverse()
    kinds = [type(f) for f in factors]
    assert kinds == [AssocInv, WhiskL, Assoc, WhiskR, AssocInv, WhiskL, Assoc]
    assert isinstance(factors[1].expr, Atom)
    assert isinstance(factors[5].expr, Inv)
    mid = factors[3].expr
    chain = []
    while isinstance(mid, VComp):
        chain.append(mid.lower)
        mid = mid.upper
    chain.append(mid)
    chain.reverse()
    assert [type(c) for c in chain] == [Inv, Atom, Atom]


def test_a5_composite_rejects_mismatched_boundaries(toy):
    F = identity_psfun(toy)
    with pytest.raises(TypingError):
        build_a5_composite(F, "idB", "idB", "v", "idB", "idB", "idB", "iB", "loop")


def test_a5_nontrivial_universal_is_solved(toy, classes):
    # The loop as a 2-cell between whiskered identities needs the composite
    # route: the witness transports it through sigma and the compositors.
    r = check_A(identity_psfun(toy), classes["W"], classes["W"], 5)
    assert r.holds
    u, w = r.witness
    assert recheck_witness(identity_psfun(toy), r, classes["W"], classes["W"])


# -- the B family --------------------------------------------------------------


def test_b_family_on_universal_map(UW, classes):
    for i in range(1, 6):
        r = check_B(UW, classes["W"], i)
        assert r.holds, r
        if r.witness is not None:
            assert recheck_witness(UW, r, classes["W"])


def test_b_precondition_requires_equivalence_images(toy, classes):
    with pytest.raises(PreconditionError, match="internal equivalence"):
        check_B(identity_psfun(toy), classes["W"], 1)


def test_b4_uses_the_class_member_that_separates(UW, classes):
    r = check_B(UW, classes["W"], 4)
    u, w = r.witness
    assert set(u) == {"iB", "loop"}
    assert w == ("v",)


# -- the EF family -------------------------------------------------------------


def test_ef3_counterexample_is_the_collapsed_pair(UW, classes):
    r = check_EF(UW, classes["W"], 3)
    assert not r.holds
    f1, f2, cls, a, b = r.counterexample
    assert (f1, f2) == ("idB", "idB")
    assert {a, b} == {"iB", "loop"}
    assert "two distinct" in r.detail


def test_ef_family_on_identity(toy, classes):
    F = identity_psfun(toy)
    for i in range(1, 4):
        r = check_EF(F, classes["Wmin"], i)
        assert r.holds, r.tag
        assert recheck_witness(F, r, classes["Wmin"])


def test_ef1_fails_when_identities_do_not_compose_on_the_nose(UW, classes):
    # The materialized composition table routes the identity cospan at B
    # through the apex A, so no section pair composes to the identity span.
    r = check_EF(UW, classes["W"], 1)
    assert not r.holds
    assert r.counterexample == ("B",)


def test_ef3_on_collapse_reports_lost_distinction(toy):
    from bicfrac.builders import collapse_loop, toyq

    F = collapse_loop(toy, toyq())
    r = check_EF(F, toy_classes(toy)["Wmin"], 3)
    assert not r.holds
    assert "two distinct" in r.detail


# -- the X family and weak equivalence -----------------------------------------


def test_weak_equivalence_verdicts(toy, classes, UW):
    assert is_weak_equivalence(identity_psfun(toy)).passed
    rep = is_weak_equivalence(UW)
    assert not rep.passed
    x2b = rep["X2b"]
    assert not x2b.holds
    assert set(x2b.counterexample) == {"iB", "loop"}
    assert {r.tag for r in rep.reports} == {"X1", "X2a", "X2b", "X2c"}
    with pytest.raises(KeyError):
        rep["X9"]


def test_universal_map_at_minimal_class_is_weak_equivalence(toy, classes):
    Umin = universal_pseudofunctor(materialize_fractions(toy, classes["Wmin"]))
    assert is_weak_equivalence(Umin).passed


def test_check_x_rejects_unknown_tags(toy):
    with pytest.raises(ValueError):
        check_X(identity_psfun(toy), "X3")


def test_mutated_witness_is_rejected(toy, classes):
    F = identity_psfun(toy)
    r = check_A(F, classes["W"], classes["W"], 1)
    u, _ = r.witness
    forged = type(r)(r.tag, True, (u, ("A", "B", "idA", "idA")), None, r.examined)
    assert not recheck_witness(F, forged, classes["W"], classes["W"])
    vacuous = type(r)("A1", True, None, None, 0)
    with pytest.raises(ValueError):
        recheck_witness(F, vacuous, classes["W"], classes["W"])


# -- cross-validation ----------------------------------------------------------

COVERAGE = {
    "identity-toy-full": (True, False, False, False),
    "identity-toy-min": (True, True, True, True),
    "identity-toy-mixed": (True, False, True, True),
    "collapse-loop-min": (True, True, True, False),
    "collapse-loop-full": (True, False, False, False),
    "point-into-discrete2": (True, True, True, True),
    "identity-iso2-mixed": (True, False, True, True),
}

SUBCHECKS = (
    "lift-biconditional",
    "minimal-class-agreement",
    "strict-family-implication",
    "equivalence-reflection",
)


@pytest.mark.parametrize("name", sorted(COVERAGE))
def test_cross_validation_finds_no_disagreement(suite, name):
    case = suite[name]
    rep = cross_validate_theorems(case.psfun, case.w_src, case.w_tgt)
    assert rep.passed, rep.findings
    assert tuple(rep[s].ran for s in SUBCHECKS) == COVERAGE[name]
    for s in rep.subchecks:
        if s.ran:
            assert s.agrees is True
        else:
            assert s.agrees is None and s.reason.startswith("skipped")


def test_cross_validation_reports_vacuous_implications(suite):
    rep = cross_validate_theorems(*_args(suite["collapse-loop-min"]))
    assert "vacuous" in rep["strict-family-implication"].reason
    rep = cross_validate_theorems(*_args(suite["point-into-discrete2"]))
    assert "EF1" in rep["strict-family-implication"].reason
