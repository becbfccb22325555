"""Finite bicategories given by exhaustive tables.

A `FinBicat` stores every cell and every structural operation of a finite
bicategory explicitly: objects, 1-cells, 2-cells, identities, horizontal and
vertical composition, the two whiskerings, associators and the two unitors.
Nothing is computed lazily from generators; the tables *are* the bicategory.
`validate_bicat` checks the axioms exhaustively, `eval_pasting` evaluates
formal pasting expressions against the tables, and small search utilities
(`two_cell_inverse`, `internal_equivalence_witness`) decide invertibility.

Derived composition of 2-cells (`hcompose2`) is defined from the whiskering
tables; the middle-four interchange law, checked by the validator, makes the
two possible whisker orders agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, Optional, Union


class StructureError(ValueError):
    """A table refers to undeclared cells, or a declaration is malformed."""


class CompositionError(ValueError):
    """A composite was requested for a non-composable pair of cells."""


class TypingError(ValueError):
    """A pasting expression does not type-check over the given bicategory."""


class InvertibilityError(ValueError):
    """An inverse was requested for a 2-cell that has none."""


class PreconditionError(ValueError):
    """A construction was invoked on data that fails its entry conditions."""


@dataclass(frozen=True)
class OneCell:
    id: str
    src: str
    tgt: str


@dataclass(frozen=True)
class TwoCell:
    id: str
    src: str  # 1-cell id
    tgt: str  # parallel 1-cell id


@dataclass
class FinBicat:
    """A finite bicategory with all structure tabulated.

    Table keys and values are cell id strings:

    - ``hcomp1[(g, f)]``       1-cell ``g∘f``, defined when ``src(g) == tgt(f)``
    - ``vcomp[(b, a)]``        2-cell ``b⊙a`` (``a`` first), when ``tgt1(a) == src1(b)``
    - ``whisk_left[(g, a)]``   ``i_g ∗ a``, when ``tgt(tgt1(a)) == src(g)``
    - ``whisk_right[(b, f)]``  ``b ∗ i_f``, when ``tgt(f) == src(src1(b))``
    - ``assoc[(h, g, f)]``     associator ``h∘(g∘f) ⇒ (h∘g)∘f``
    - ``runit[f]``             right unitor ``f∘id ⇒ f``
    - ``lunit[f]``             left unitor ``id∘f ⇒ f``

    ``strict`` declares that every associator and unitor component is an
    identity 2-cell; the validator verifies the claim, and evaluation uses it
    to short-circuit inverse searches.

    Declaration order of objects, 1-cells and 2-cells is the canonical order
    used whenever a search must return a least witness.
    """

    objects: tuple[str, ...]
    one_cells: tuple[OneCell, ...]
    two_cells: tuple[TwoCell, ...]
    id1: dict[str, str]
    id2: dict[str, str]
    hcomp1: dict[tuple[str, str], str]
    vcomp: dict[tuple[str, str], str]
    whisk_left: dict[tuple[str, str], str]
    whisk_right: dict[tuple[str, str], str]
    assoc: dict[tuple[str, str, str], str]
    runit: dict[str, str]
    lunit: dict[str, str]
    strict: bool = False
    name: str = field(default="", compare=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        self.objects = tuple(self.objects)
        self.one_cells = tuple(self.one_cells)
        self.two_cells = tuple(self.two_cells)
        self._build_index()

    def _build_index(self) -> None:
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            raise StructureError("duplicate object id")
        one_by_id: dict[str, OneCell] = {}
        for c in self.one_cells:
            if c.id in one_by_id:
                raise StructureError(f"duplicate 1-cell id {c.id!r}")
            if c.src not in objs or c.tgt not in objs:
                raise StructureError(f"1-cell {c.id!r} has undeclared endpoint")
            one_by_id[c.id] = c
        two_by_id: dict[str, TwoCell] = {}
        for t in self.two_cells:
            if t.id in two_by_id or t.id in one_by_id:
                raise StructureError(f"duplicate 2-cell id {t.id!r}")
            f, g = one_by_id.get(t.src), one_by_id.get(t.tgt)
            if f is None or g is None:
                raise StructureError(f"2-cell {t.id!r} has undeclared boundary")
            if (f.src, f.tgt) != (g.src, g.tgt):
                raise StructureError(f"2-cell {t.id!r} has non-parallel boundary")
            two_by_id[t.id] = t
        for table, arity in (
            (self.id1, "obj"), (self.id2, "one"), (self.runit, "one"), (self.lunit, "one"),
        ):
            for k, v in table.items():
                ok = k in objs if arity == "obj" else k in one_by_id
                if not ok or v not in (one_by_id if table is self.id1 else two_by_id):
                    raise StructureError(f"table entry {k!r} -> {v!r} refers to undeclared cell")
        for table, kn, vn in (
            (self.hcomp1, 2, one_by_id), (self.vcomp, 2, two_by_id),
            (self.whisk_left, 2, two_by_id), (self.whisk_right, 2, two_by_id),
            (self.assoc, 3, two_by_id),
        ):
            for k, v in table.items():
                parts = k if isinstance(k, tuple) else (k,)
                if len(parts) != kn or v not in vn:
                    raise StructureError(f"table entry {k!r} -> {v!r} is malformed")
                for p in parts:
                    if p not in one_by_id and p not in two_by_id:
                        raise StructureError(f"table key {k!r} refers to undeclared cell")
        c = self._cache
        c.clear()
        c["one_by_id"] = one_by_id
        c["two_by_id"] = two_by_id
        c["obj_pos"] = {x: i for i, x in enumerate(self.objects)}
        c["one_pos"] = {x.id: i for i, x in enumerate(self.one_cells)}
        c["two_pos"] = {x.id: i for i, x in enumerate(self.two_cells)}
        homs: dict[tuple[str, str], list[str]] = {}
        for x in self.one_cells:
            homs.setdefault((x.src, x.tgt), []).append(x.id)
        c["homs"] = homs
        frames: dict[tuple[str, str], list[str]] = {}
        for t in self.two_cells:
            frames.setdefault((t.src, t.tgt), []).append(t.id)
        c["frames"] = frames
        c["inverse"] = {}

    # -- lookups ----------------------------------------------------------

    def one(self, f: str) -> OneCell:
        try:
            return self._cache["one_by_id"][f]
        except KeyError:
            raise StructureError(f"unknown 1-cell {f!r}") from None

    def two(self, a: str) -> TwoCell:
        try:
            return self._cache["two_by_id"][a]
        except KeyError:
            raise StructureError(f"unknown 2-cell {a!r}") from None

    def src1(self, a: str) -> str:
        return self.two(a).src

    def tgt1(self, a: str) -> str:
        return self.two(a).tgt

    def hom1(self, x: str, y: str) -> list[str]:
        return self._cache["homs"].get((x, y), [])

    def cells2(self, f: str, g: str) -> list[str]:
        return self._cache["frames"].get((f, g), [])

    def pos1(self, f: str) -> int:
        return self._cache["one_pos"][f]

    def pos2(self, a: str) -> int:
        return self._cache["two_pos"][a]

    def posO(self, x: str) -> int:
        return self._cache["obj_pos"][x]

    def is_locally_discrete(self) -> bool:
        return all(t.src == t.tgt for t in self.two_cells) and all(
            self.id2.get(t.src) == t.id for t in self.two_cells
        )

    def without_strict_flag(self) -> "FinBicat":
        return replace(self, strict=False, _cache={}) if self.strict else self


# -- elementary operations -------------------------------------------------


def hcompose1(B: FinBicat, g: str, f: str) -> str:
    """Composite 1-cell ``g∘f`` (``f`` applied first)."""
    try:
        return B.hcomp1[(g, f)]
    except KeyError:
        raise CompositionError(f"1-cells not composable or missing entry: ({g!r}, {f!r})") from None


def vcompose(B: FinBicat, beta: str, alpha: str) -> str:
    """Vertical composite ``beta ⊙ alpha`` (``alpha`` applied first)."""
    try:
        return B.vcomp[(beta, alpha)]
    except KeyError:
        raise CompositionError(f"2-cells not vertically composable: ({beta!r}, {alpha!r})") from None


def whisker_left(B: FinBicat, g: str, alpha: str) -> str:
    try:
        return B.whisk_left[(g, alpha)]
    except KeyError:
        raise CompositionError(f"left whiskering undefined: ({g!r}, {alpha!r})") from None


def whisker_right(B: FinBicat, beta: str, f: str) -> str:
    try:
        return B.whisk_right[(beta, f)]
    except KeyError:
        raise CompositionError(f"right whiskering undefined: ({beta!r}, {f!r})") from None


def hcompose2(B: FinBicat, beta: str, alpha: str) -> str:
    """Horizontal composite ``beta ∗ alpha``, via ``(beta ∗ i) ⊙ (i ∗ alpha)``.

    The validator's interchange check guarantees the other whisker order
    yields the same cell.
    """
    g = B.src1(beta)
    f_tgt = B.tgt1(alpha)
    return vcompose(B, whisker_right(B, beta, f_tgt), whisker_left(B, g, alpha))


def vcompose_all(B: FinBicat, factors: list[str]) -> str:
    """Vertical composite of 2-cell ids listed in application order."""
    if not factors:
        raise CompositionError("empty vertical chain")
    out = factors[0]
    for nxt in factors[1:]:
        out = vcompose(B, nxt, out)
    return out


def two_cell_inverse(B: FinBicat, alpha: str) -> Optional[str]:
    """The unique vertical inverse of ``alpha``, or None. Results are cached."""
    cache = B._cache["inverse"]
    if alpha in cache:
        return cache[alpha]
    t = B.two(alpha)
    result = None
    i_src = B.id2[t.src]
    i_tgt = B.id2[t.tgt]
    for beta in B.cells2(t.tgt, t.src):
        if B.vcomp.get((beta, alpha)) == i_src and B.vcomp.get((alpha, beta)) == i_tgt:
            result = beta
            break
    cache[alpha] = result
    return result


def is_invertible2(B: FinBicat, alpha: str) -> bool:
    return two_cell_inverse(B, alpha) is not None


def inv_cells2(B: FinBicat, f: str, g: str) -> list[str]:
    """Invertible 2-cells ``f ⇒ g`` in canonical order."""
    key = ("inv2", f, g)
    if key not in B._cache:
        B._cache[key] = [a for a in B.cells2(f, g) if is_invertible2(B, a)]
    return B._cache[key]


def internal_equivalence_witness(
    B: FinBicat, f: str
) -> Optional[tuple[str, str, str]]:
    """First ``(g, eta, eps)`` making ``f`` an internal equivalence, or None.

    ``eta: id_src(f) ⇒ g∘f`` and ``eps: f∘g ⇒ id_tgt(f)``, both invertible.
    """
    key = ("equiv_wit", f)
    if key in B._cache:
        return B._cache[key]
    c = B.one(f)
    found = None
    for g in B.hom1(c.tgt, c.src):
        gf = B.hcomp1.get((g, f))
        fg = B.hcomp1.get((f, g))
        if gf is None or fg is None:
            continue
        etas = inv_cells2(B, B.id1[c.src], gf)
        if not etas:
            continue
        epss = inv_cells2(B, fg, B.id1[c.tgt])
        if not epss:
            continue
        found = (g, etas[0], epss[0])
        break
    B._cache[key] = found
    return found


def internal_equivalences(B: FinBicat) -> list[str]:
    """All 1-cells admitting an internal-equivalence witness."""
    if "equivs" not in B._cache:
        B._cache["equivs"] = [
            c.id for c in B.one_cells if internal_equivalence_witness(B, c.id) is not None
        ]
    return B._cache["equivs"]


# -- pasting expressions ----------------------------------------------------


@dataclass(frozen=True)
class Atom:
    cell: str


@dataclass(frozen=True)
class IdOn:
    cell: str  # a 1-cell


@dataclass(frozen=True)
class VComp:
    upper: "PastingExpr"  # applied first
    lower: "PastingExpr"


@dataclass(frozen=True)
class HComp:
    left: "PastingExpr"  # the factor on the codomain side
    right: "PastingExpr"


@dataclass(frozen=True)
class WhiskL:
    cell: str  # 1-cell g, composed on the left
    expr: "PastingExpr"


@dataclass(frozen=True)
class WhiskR:
    expr: "PastingExpr"
    cell: str  # 1-cell f, composed on the right


@dataclass(frozen=True)
class Assoc:
    h: str
    g: str
    f: str


@dataclass(frozen=True)
class AssocInv:
    h: str
    g: str
    f: str


@dataclass(frozen=True)
class RUnit:
    cell: str


@dataclass(frozen=True)
class RUnitInv:
    cell: str


@dataclass(frozen=True)
class LUnit:
    cell: str


@dataclass(frozen=True)
class LUnitInv:
    cell: str


@dataclass(frozen=True)
class Inv:
    expr: "PastingExpr"


PastingExpr = Union[
    Atom, IdOn, VComp, HComp, WhiskL, WhiskR,
    Assoc, AssocInv, RUnit, RUnitInv, LUnit, LUnitInv, Inv,
]


def vchain(*factors: PastingExpr) -> PastingExpr:
    """Nest factors, given in application order, into VComp nodes."""
    if not factors:
        raise TypingError("empty chain")
    expr = factors[0]
    for nxt in factors[1:]:
        expr = VComp(expr, nxt)
    return expr


def _h1(B: FinBicat, g: str, f: str, ctx: PastingExpr) -> str:
    try:
        return hcompose1(B, g, f)
    except CompositionError:
        raise TypingError(f"1-cells {g!r}, {f!r} not composable in {ctx!r}") from None


def infer_boundary(B: FinBicat, e: PastingExpr) -> tuple[str, str]:
    """Source and target 1-cells of a pasting expression, without evaluating."""
    if isinstance(e, Atom):
        t = B.two(e.cell)
        return t.src, t.tgt
    if isinstance(e, IdOn):
        B.one(e.cell)
        return e.cell, e.cell
    if isinstance(e, VComp):
        s1, t1 = infer_boundary(B, e.upper)
        s2, t2 = infer_boundary(B, e.lower)
        if t1 != s2:
            raise TypingError(f"vertical mismatch: {t1!r} vs {s2!r} in {e!r}")
        return s1, t2
    if isinstance(e, HComp):
        ls, lt = infer_boundary(B, e.left)
        rs, rt = infer_boundary(B, e.right)
        if B.one(rs).tgt != B.one(ls).src:
            raise TypingError(f"horizontal mismatch in {e!r}")
        return _h1(B, ls, rs, e), _h1(B, lt, rt, e)
    if isinstance(e, WhiskL):
        s, t = infer_boundary(B, e.expr)
        if B.one(t).tgt != B.one(e.cell).src:
            raise TypingError(f"left whisker mismatch in {e!r}")
        return _h1(B, e.cell, s, e), _h1(B, e.cell, t, e)
    if isinstance(e, WhiskR):
        s, t = infer_boundary(B, e.expr)
        if B.one(e.cell).tgt != B.one(s).src:
            raise TypingError(f"right whisker mismatch in {e!r}")
        return _h1(B, s, e.cell, e), _h1(B, t, e.cell, e)
    if isinstance(e, (Assoc, AssocInv)):
        gf = _h1(B, e.g, e.f, e)
        hg = _h1(B, e.h, e.g, e)
        lhs = _h1(B, e.h, gf, e)
        rhs = _h1(B, hg, e.f, e)
        return (lhs, rhs) if isinstance(e, Assoc) else (rhs, lhs)
    if isinstance(e, (RUnit, RUnitInv)):
        c = B.one(e.cell)
        fid = _h1(B, e.cell, B.id1[c.src], e)
        return (fid, e.cell) if isinstance(e, RUnit) else (e.cell, fid)
    if isinstance(e, (LUnit, LUnitInv)):
        c = B.one(e.cell)
        idf = _h1(B, B.id1[c.tgt], e.cell, e)
        return (idf, e.cell) if isinstance(e, LUnit) else (e.cell, idf)
    if isinstance(e, Inv):
        s, t = infer_boundary(B, e.expr)
        return t, s
    raise TypingError(f"unknown pasting node {e!r}")


def _inverse_or_raise(B: FinBicat, a: str, ctx: PastingExpr) -> str:
    inv = two_cell_inverse(B, a)
    if inv is None:
        raise InvertibilityError(f"2-cell {a!r} is not invertible in {ctx!r}")
    return inv


def eval_pasting(B: FinBicat, e: PastingExpr) -> str:
    """Evaluate a pasting expression to a 2-cell id, checking types as it goes."""
    if isinstance(e, Atom):
        B.two(e.cell)
        return e.cell
    if isinstance(e, IdOn):
        B.one(e.cell)
        return B.id2[e.cell]
    if isinstance(e, VComp):
        u = eval_pasting(B, e.upper)
        l = eval_pasting(B, e.lower)
        if B.tgt1(u) != B.src1(l):
            raise TypingError(f"vertical mismatch in {e!r}")
        return vcompose(B, l, u)
    if isinstance(e, HComp):
        lv = eval_pasting(B, e.left)
        rv = eval_pasting(B, e.right)
        if B.one(B.src1(rv)).tgt != B.one(B.src1(lv)).src:
            raise TypingError(f"horizontal mismatch in {e!r}")
        return hcompose2(B, lv, rv)
    if isinstance(e, WhiskL):
        v = eval_pasting(B, e.expr)
        try:
            return whisker_left(B, e.cell, v)
        except CompositionError as exc:
            raise TypingError(str(exc)) from None
    if isinstance(e, WhiskR):
        v = eval_pasting(B, e.expr)
        try:
            return whisker_right(B, v, e.cell)
        except CompositionError as exc:
            raise TypingError(str(exc)) from None
    if isinstance(e, Assoc):
        infer_boundary(B, e)
        try:
            return B.assoc[(e.h, e.g, e.f)]
        except KeyError:
            raise TypingError(f"no associator for {(e.h, e.g, e.f)!r}") from None
    if isinstance(e, AssocInv):
        s, _ = infer_boundary(B, e)
        if B.strict:
            return B.id2[s]
        return _inverse_or_raise(B, eval_pasting(B, Assoc(e.h, e.g, e.f)), e)
    if isinstance(e, RUnit):
        infer_boundary(B, e)
        return B.runit[e.cell]
    if isinstance(e, RUnitInv):
        s, _ = infer_boundary(B, e)
        if B.strict:
            return B.id2[s]
        return _inverse_or_raise(B, B.runit[e.cell], e)
    if isinstance(e, LUnit):
        infer_boundary(B, e)
        return B.lunit[e.cell]
    if isinstance(e, LUnitInv):
        s, _ = infer_boundary(B, e)
        if B.strict:
            return B.id2[s]
        return _inverse_or_raise(B, B.lunit[e.cell], e)
    if isinstance(e, Inv):
        return _inverse_or_raise(B, eval_pasting(B, e.expr), e)
    raise TypingError(f"unknown pasting node {e!r}")


# -- validation --------------------------------------------------------------


@dataclass
class Violation:
    law: str
    cells: tuple
    detail: str = ""


@dataclass
class ValidationReport:
    passed: bool
    violations: list[Violation]
    strict_flag: bool
    components_identity: bool

    def laws_failed(self) -> set[str]:
        return {v.law for v in self.violations}


def _structural_violations(B: FinBicat) -> list[Violation]:
    out: list[Violation] = []

    def add(law: str, cells: tuple, detail: str) -> None:
        out.append(Violation(law, cells, detail))

    for x in B.objects:
        f = B.id1.get(x)
        if f is None:
            add("structure:id1", (x,), "missing identity 1-cell")
        else:
            c = B.one(f)
            if (c.src, c.tgt) != (x, x):
                add("structure:id1", (x, f), "identity 1-cell has wrong endpoints")
    for k in B.id1:
        if k not in B._cache["obj_pos"]:
            add("structure:id1", (k,), "entry for undeclared object")
    for c in B.one_cells:
        a = B.id2.get(c.id)
        if a is None:
            add("structure:id2", (c.id,), "missing identity 2-cell")
        else:
            t = B.two(a)
            if (t.src, t.tgt) != (c.id, c.id):
                add("structure:id2", (c.id, a), "identity 2-cell has wrong boundary")
    want = {(g.id, f.id) for g in B.one_cells for f in B.one_cells if g.src == f.tgt}
    have = set(B.hcomp1)
    for k in sorted(want - have):
        add("structure:hcomp1", k, "composable pair missing")
    for k in sorted(have - want):
        add("structure:hcomp1", k, "non-composable pair present")
    for (g, f), v in B.hcomp1.items():
        if (g, f) in want:
            c = B.one(v)
            if (c.src, c.tgt) != (B.one(f).src, B.one(g).tgt):
                add("structure:hcomp1", (g, f, v), "composite has wrong endpoints")
    want2 = {
        (b.id, a.id) for b in B.two_cells for a in B.two_cells if a.tgt == b.src
    }
    have2 = set(B.vcomp)
    for k in sorted(want2 - have2):
        add("structure:vcomp", k, "composable pair missing")
    for k in sorted(have2 - want2):
        add("structure:vcomp", k, "non-composable pair present")
    for (b, a), v in B.vcomp.items():
        if (b, a) in want2:
            t = B.two(v)
            if (t.src, t.tgt) != (B.src1(a), B.tgt1(b)):
                add("structure:vcomp", (b, a, v), "composite has wrong boundary")
    wl_want = {
        (g.id, a.id)
        for g in B.one_cells
        for a in B.two_cells
        if B.one(a.tgt).tgt == g.src
    }
    for k in sorted(wl_want - set(B.whisk_left)):
        add("structure:whisk_left", k, "whiskerable pair missing")
    for k in sorted(set(B.whisk_left) - wl_want):
        add("structure:whisk_left", k, "non-whiskerable pair present")
    for (g, a), v in B.whisk_left.items():
        if (g, a) in wl_want and (g, B.src1(a)) in B.hcomp1 and (g, B.tgt1(a)) in B.hcomp1:
            t = B.two(v)
            if (t.src, t.tgt) != (B.hcomp1[(g, B.src1(a))], B.hcomp1[(g, B.tgt1(a))]):
                add("structure:whisk_left", (g, a, v), "whisker has wrong boundary")
    wr_want = {
        (b.id, f.id)
        for b in B.two_cells
        for f in B.one_cells
        if f.tgt == B.one(b.src).src
    }
    for k in sorted(wr_want - set(B.whisk_right)):
        add("structure:whisk_right", k, "whiskerable pair missing")
    for k in sorted(set(B.whisk_right) - wr_want):
        add("structure:whisk_right", k, "non-whiskerable pair present")
    for (b, f), v in B.whisk_right.items():
        if (b, f) in wr_want and (B.src1(b), f) in B.hcomp1 and (B.tgt1(b), f) in B.hcomp1:
            t = B.two(v)
            if (t.src, t.tgt) != (B.hcomp1[(B.src1(b), f)], B.hcomp1[(B.tgt1(b), f)]):
                add("structure:whisk_right", (b, f, v), "whisker has wrong boundary")
    tri = {
        (h.id, g.id, f.id)
        for h in B.one_cells
        for g in B.one_cells
        for f in B.one_cells
        if h.src == g.tgt and g.src == f.tgt
    }
    for k in sorted(tri - set(B.assoc)):
        add("structure:assoc", k, "composable triple missing")
    for k in sorted(set(B.assoc) - tri):
        add("structure:assoc", k, "non-composable triple present")
    for (h, g, f), v in B.assoc.items():
        if (h, g, f) in tri:
            try:
                lhs = B.hcomp1[(h, B.hcomp1[(g, f)])]
                rhs = B.hcomp1[(B.hcomp1[(h, g)], f)]
            except KeyError:
                continue
            t = B.two(v)
            if (t.src, t.tgt) != (lhs, rhs):
                add("structure:assoc", (h, g, f, v), "associator has wrong boundary")
    for c in B.one_cells:
        r = B.runit.get(c.id)
        if r is None:
            add("structure:runit", (c.id,), "missing right unitor")
        elif (c.id, B.id1.get(c.src)) in B.hcomp1:
            t = B.two(r)
            if (t.src, t.tgt) != (B.hcomp1[(c.id, B.id1[c.src])], c.id):
                add("structure:runit", (c.id, r), "right unitor has wrong boundary")
        l = B.lunit.get(c.id)
        if l is None:
            add("structure:lunit", (c.id,), "missing left unitor")
        elif (B.id1.get(c.tgt), c.id) in B.hcomp1:
            t = B.two(l)
            if (t.src, t.tgt) != (B.hcomp1[(B.id1[c.tgt], c.id)], c.id):
                add("structure:lunit", (c.id, l), "left unitor has wrong boundary")
    return out


def _law_violations(B: FinBicat) -> list[Violation]:
    out: list[Violation] = []
    V = B.vcomp
    add = out.append

    two = B.two_cells
    for a in two:
        ia, it = B.id2[a.src], B.id2[a.tgt]
        if V[(a.id, ia)] != a.id:
            add(Violation("hom-category:unit", (a.id,), "right identity fails"))
        if V[(it, a.id)] != a.id:
            add(Violation("hom-category:unit", (a.id,), "left identity fails"))
    by_src: dict[str, list[TwoCell]] = {}
    for t in two:
        by_src.setdefault(t.src, []).append(t)
    for a in two:
        for b in by_src.get(a.tgt, []):
            ba = V[(b.id, a.id)]
            for c in by_src.get(b.tgt, []):
                if V[(c.id, ba)] != V[(V[(c.id, b.id)], a.id)]:
                    add(Violation("hom-category:assoc", (c.id, b.id, a.id), ""))

    for g in B.one_cells:
        for f in B.one_cells:
            if g.src != f.tgt:
                continue
            gf = B.hcomp1[(g.id, f.id)]
            if B.whisk_left[(g.id, B.id2[f.id])] != B.id2[gf]:
                add(Violation("whisker:identity", (g.id, f.id), "left whisker of identity"))
            if B.whisk_right[(B.id2[g.id], f.id)] != B.id2[gf]:
                add(Violation("whisker:identity", (g.id, f.id), "right whisker of identity"))
    for a in two:
        for b in by_src.get(a.tgt, []):
            ba = V[(b.id, a.id)]
            ao = B.one(a.src)
            for g in B.one_cells:
                if g.src == ao.tgt:
                    lhs = B.whisk_left[(g.id, ba)]
                    rhs = V[(B.whisk_left[(g.id, b.id)], B.whisk_left[(g.id, a.id)])]
                    if lhs != rhs:
                        add(Violation("whisker:compose", (g.id, b.id, a.id), "left whisker"))
            for f in B.one_cells:
                if f.tgt == ao.src:
                    lhs = B.whisk_right[(ba, f.id)]
                    rhs = V[(B.whisk_right[(b.id, f.id)], B.whisk_right[(a.id, f.id)])]
                    if lhs != rhs:
                        add(Violation("whisker:compose", (b.id, a.id, f.id), "right whisker"))

    for a in two:  # a: f ⇒ f' over (X → Y)
        ao = B.one(a.src)
        for b in two:  # b: g ⇒ g' over (Y → Z)
            if B.one(b.src).src != ao.tgt:
                continue
            one = V[(B.whisk_right[(b.id, a.tgt)], B.whisk_left[(b.src, a.id)])]
            other = V[(B.whisk_left[(b.tgt, a.id)], B.whisk_right[(b.id, a.src)])]
            if one != other:
                add(Violation("interchange", (b.id, a.id), ""))

    for key, th in B.assoc.items():
        if two_cell_inverse(B, th) is None:
            add(Violation("assoc:invertible", key, ""))
    for f in B.one_cells:
        if two_cell_inverse(B, B.runit[f.id]) is None:
            add(Violation("unitor:invertible", (f.id, "right"), ""))
        if two_cell_inverse(B, B.lunit[f.id]) is None:
            add(Violation("unitor:invertible", (f.id, "left"), ""))

    comp_pairs = [(g, f) for g in B.one_cells for f in B.one_cells if g.src == f.tgt]
    for a in two:  # naturality of the associator in each slot
        ao = B.one(a.src)
        for (g, f) in comp_pairs:
            if g.tgt == ao.src:  # slot h
                gf = B.hcomp1[(g.id, f.id)]
                lhs = V[(B.assoc[(a.tgt, g.id, f.id)], B.whisk_right[(a.id, gf)])]
                rhs = V[(B.whisk_right[(B.whisk_right[(a.id, g.id)], f.id)], B.assoc[(a.src, g.id, f.id)])]
                if lhs != rhs:
                    add(Violation("assoc:natural", (a.id, g.id, f.id), "outer slot"))
        for h in B.one_cells:
            for f in B.one_cells:
                if h.src == ao.tgt and f.tgt == ao.src:  # slot g
                    lhs = V[(B.assoc[(h.id, a.tgt, f.id)], B.whisk_left[(h.id, B.whisk_right[(a.id, f.id)])])]
                    rhs = V[(B.whisk_right[(B.whisk_left[(h.id, a.id)], f.id)], B.assoc[(h.id, a.src, f.id)])]
                    if lhs != rhs:
                        add(Violation("assoc:natural", (h.id, a.id, f.id), "middle slot"))
        for (h, g) in comp_pairs:
            if g.src == ao.tgt:  # slot f
                hg = B.hcomp1[(h.id, g.id)]
                lhs = V[(B.assoc[(h.id, g.id, a.tgt)], B.whisk_left[(h.id, B.whisk_left[(g.id, a.id)])])]
                rhs = V[(B.whisk_left[(hg, a.id)], B.assoc[(h.id, g.id, a.src)])]
                if lhs != rhs:
                    add(Violation("assoc:natural", (h.id, g.id, a.id), "inner slot"))

    for a in two:
        ao = B.one(a.src)
        lhs = V[(B.runit[a.tgt], B.whisk_right[(a.id, B.id1[ao.src])])]
        if lhs != V[(a.id, B.runit[a.src])]:
            add(Violation("unitor:natural", (a.id, "right"), ""))
        lhs = V[(B.lunit[a.tgt], B.whisk_left[(B.id1[ao.tgt], a.id)])]
        if lhs != V[(a.id, B.lunit[a.src])]:
            add(Violation("unitor:natural", (a.id, "left"), ""))

    for k in B.one_cells:
        for h in B.one_cells:
            if h.tgt != k.src:
                continue
            for g in B.one_cells:
                if g.tgt != h.src:
                    continue
                for f in B.one_cells:
                    if f.tgt != g.src:
                        continue
                    kh = B.hcomp1[(k.id, h.id)]
                    hg = B.hcomp1[(h.id, g.id)]
                    gf = B.hcomp1[(g.id, f.id)]
                    two_step = V[(B.assoc[(kh, g.id, f.id)], B.assoc[(k.id, h.id, gf)])]
                    three_step = V[(
                        B.whisk_right[(B.assoc[(k.id, h.id, g.id)], f.id)],
                        V[(B.assoc[(k.id, hg, f.id)], B.whisk_left[(k.id, B.assoc[(h.id, g.id, f.id)])])],
                    )]
                    if two_step != three_step:
                        add(Violation("pentagon", (k.id, h.id, g.id, f.id), ""))

    for g in B.one_cells:
        for f in B.one_cells:
            if g.src != f.tgt:
                continue
            mid = B.id1[f.tgt]
            lhs = V[(B.whisk_right[(B.runit[g.id], f.id)], B.assoc[(g.id, mid, f.id)])]
            if lhs != B.whisk_left[(g.id, B.lunit[f.id])]:
                add(Violation("triangle", (g.id, f.id), ""))
    return out


def _components_identity(B: FinBicat) -> bool:
    for (h, g, f), v in B.assoc.items():
        t = B.two(v)
        if t.src != t.tgt or B.id2.get(t.src) != v:
            return False
    for table in (B.runit, B.lunit):
        for f, v in table.items():
            t = B.two(v)
            if t.src != t.tgt or B.id2.get(t.src) != v:
                return False
    return True


def validate_bicat(B: FinBicat) -> ValidationReport:
    """Exhaustively check every bicategory law over the tables.

    Structural problems (wrong table domains, mistyped entries) are reported
    first; the algebraic laws are only evaluated when the tables are total
    and well typed, since the law checks index into them freely.
    """
    violations = _structural_violations(B)
    components_id = False
    if not violations:
        components_id = _components_identity(B)
        violations = _law_violations(B)
        if B.strict and not components_id:
            violations.append(
                Violation("strict-flag", (), "declared strict but has non-identity components")
            )
    return ValidationReport(
        passed=not violations,
        violations=violations,
        strict_flag=B.strict,
        components_identity=components_id,
    )
