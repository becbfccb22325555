"""Finite bicategories, fraction localizations and transfer conditions.

Everything is represented by exhaustive tables over string cell ids, so
every law and every condition is decidable by finite search.  The main
entry points, in the order a typical session uses them:

- `FinBicat`, `validate_bicat`: the data structure and its law checker.
- `eval_pasting`: evaluate a formal pasting tree to a single 2-cell.
- `WClass`, `check_bf`, `saturate`, `quasi_units`: classes of 1-cells and
  the closure axioms that allow inverting them.
- `materialize_fractions`, `universal_pseudofunctor`: the bicategory of
  fractions as explicit tables and the canonical map into it.
- `PsFun`, `validate_psfun`, `induce_g_tilde`: pseudofunctors and the
  induced map between localizations.
- `check_A`, `check_B`, `check_EF`, `check_X`, `is_weak_equivalence`,
  `cross_validate_theorems`: the condition families and their known
  relationships.
- `parse_presentation`, `load_document`, `export_presentation`: the JSON
  document format used by the command line.
"""

from .builders import (
    SuiteCase,
    appendix_toy,
    arrow2,
    build_strict,
    collapse_loop,
    discrete2,
    fold_discrete2,
    iso2,
    iso2_classes,
    point_into_discrete2,
    theorem_suite,
    toy_classes,
    toyq,
    toyq_classes,
    trivial_one,
)
from .conditions import (
    ConditionReport,
    SubCheck,
    TheoremReport,
    WeakEquivalenceReport,
    build_a5_composite,
    check_A,
    check_B,
    check_EF,
    check_X,
    cross_validate_theorems,
    is_weak_equivalence,
    recheck_witness,
)
from .core import (
    Assoc,
    AssocInv,
    Atom,
    CompositionError,
    FinBicat,
    HComp,
    IdOn,
    Inv,
    InvertibilityError,
    LUnit,
    LUnitInv,
    OneCell,
    PastingExpr,
    PreconditionError,
    RUnit,
    RUnitInv,
    StructureError,
    TwoCell,
    TypingError,
    ValidationReport,
    VComp,
    Violation,
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
from .fractions import (
    Localization,
    LocalizationError,
    Span,
    TwoCellClass,
    TwoCellRep,
    compose_spans,
    enumerate_spans,
    materialize_fractions,
    reps_equivalent,
    span_is_equivalence,
    universal_pseudofunctor,
)
from .presentation import (
    Presentation,
    PresentationError,
    export_presentation,
    load_document,
    parse_presentation,
)
from .psfun import (
    GTildeResult,
    PsFun,
    PsFunReport,
    g_tilde_on_two_cell,
    identity_psfun,
    induce_g_tilde,
    maps_into,
    validate_psfun,
)
from .wclass import (
    AxiomVerdict,
    BfReport,
    SaturationResult,
    WClass,
    check_bf,
    find_bf3_filler,
    internal_equivalences_class,
    is_saturated,
    quasi_units,
    saturate,
)

__version__ = "0.1.0"
