"""Localization of a finite bicategory at a class of 1-cells.

The 1-cells of the localized bicategory are spans whose backward leg lies in
the class, and its 2-cells are equivalence classes of span maps
(`TwoCellRep`).  Because everything is finite, the localized bicategory can
be *materialized*: every span, every representative, every class and every
structural table is enumerated explicitly, producing an ordinary `FinBicat`
that is then run through the full validator.

The decision procedure for 2-cells is `reps_equivalent`: two representatives
are identified when a common refinement of their apexes aligns both their
backward-leg and forward-leg data.  Classes are the connected components of
this relation, computed by union-find; on lawful inputs the one-step
relation is already transitive, which the test suite checks on the shipped
fixtures.  `same_alpha_equivalent` is the short decision rule available when
two representatives share all data except the forward-leg 2-cell.

Class-level composition never depends on which representative or which
filler the search returns first; the searches here scan candidates in
declaration order and take the least solution, so results are canonical
cell-for-cell, and the independence is separately exercised by tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import (
    Assoc,
    AssocInv,
    Atom,
    FinBicat,
    LUnit,
    OneCell,
    PastingExpr,
    PreconditionError,
    RUnitInv,
    StructureError,
    TwoCell,
    WhiskL,
    WhiskR,
    eval_pasting,
    inv_cells2,
    is_invertible2,
    two_cell_inverse,
    vchain,
    vcompose_all,
    whisker_left,
    whisker_right,
)
from .wclass import WClass, check_bf, find_bf3_filler, saturate


def _wl(g: str, a: str) -> PastingExpr:
    return WhiskL(g, Atom(a))


def _wr(a: str, f: str) -> PastingExpr:
    return WhiskR(Atom(a), f)


class LocalizationError(RuntimeError):
    """The materialized bicategory failed validation."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Span:
    """A 1-cell of the localization: ``back`` points at the source object."""

    apex: str
    back: str
    forward: str

    def src_obj(self, B: FinBicat) -> str:
        return B.one(self.back).tgt

    def tgt_obj(self, B: FinBicat) -> str:
        return B.one(self.forward).tgt


@dataclass(frozen=True)
class TwoCellRep:
    """A representative of a 2-cell between spans sharing source and target.

    For spans ``S1 = (P1, w1, f1)`` and ``S2 = (P2, w2, f2)``:

    - ``leg1: apex → P1`` and ``leg2: apex → P2``
    - ``alpha: w1∘leg1 ⇒ w2∘leg2`` invertible
    - ``beta:  f1∘leg1 ⇒ f2∘leg2`` arbitrary
    - ``w1∘leg1`` must lie in the class
    """

    apex: str
    leg1: str
    leg2: str
    alpha: str
    beta: str


@dataclass(frozen=True)
class Filler:
    """A chosen square over a cospan ``(f, u)`` with ``u`` in the class.

    ``left ∈ W`` sits under ``f``, ``right`` under ``u``, and
    ``rho: f∘left ⇒ u∘right`` is invertible.
    """

    apex: str
    left: str
    right: str
    rho: str


def span_id(s: Span) -> str:
    return f"({s.apex}|{s.back}|{s.forward})"


def enumerate_spans(
    B: FinBicat, W: WClass, src: Optional[str] = None, tgt: Optional[str] = None
) -> list[Span]:
    """All spans with backward leg in ``W``, in declaration order."""
    out = []
    for apex in B.objects:
        for back in B.one_cells:
            if back.src != apex or back.id not in W:
                continue
            if src is not None and back.tgt != src:
                continue
            for fwd in B.one_cells:
                if fwd.src != apex:
                    continue
                if tgt is not None and fwd.tgt != tgt:
                    continue
                out.append(Span(apex, back.id, fwd.id))
    return out


def rep_sort_key(B: FinBicat, r: TwoCellRep):
    return (
        B.posO(r.apex), B.pos1(r.leg1), B.pos1(r.leg2),
        B.pos2(r.alpha), B.pos2(r.beta),
    )


def is_valid_rep(B: FinBicat, W: WClass, S1: Span, S2: Span, r: TwoCellRep) -> bool:
    l1, l2 = B.one(r.leg1), B.one(r.leg2)
    if l1.src != r.apex or l2.src != r.apex:
        return False
    if l1.tgt != S1.apex or l2.tgt != S2.apex:
        return False
    w_side_src = B.hcomp1[(S1.back, r.leg1)]
    w_side_tgt = B.hcomp1[(S2.back, r.leg2)]
    a = B.two(r.alpha)
    if (a.src, a.tgt) != (w_side_src, w_side_tgt) or not is_invertible2(B, r.alpha):
        return False
    b = B.two(r.beta)
    f_side_src = B.hcomp1[(S1.forward, r.leg1)]
    f_side_tgt = B.hcomp1[(S2.forward, r.leg2)]
    if (b.src, b.tgt) != (f_side_src, f_side_tgt):
        return False
    return w_side_src in W


def enumerate_reps(B: FinBicat, W: WClass, S1: Span, S2: Span) -> list[TwoCellRep]:
    """All valid representatives for the frame ``S1 ⇒ S2``, in canonical order."""
    out = []
    for apex in B.objects:
        for leg1 in B.hom1(apex, S1.apex):
            w1l = B.hcomp1[(S1.back, leg1)]
            if w1l not in W:
                continue
            f1l = B.hcomp1[(S1.forward, leg1)]
            for leg2 in B.hom1(apex, S2.apex):
                w2l = B.hcomp1[(S2.back, leg2)]
                f2l = B.hcomp1[(S2.forward, leg2)]
                for alpha in inv_cells2(B, w1l, w2l):
                    for beta in B.cells2(f1l, f2l):
                        out.append(TwoCellRep(apex, leg1, leg2, alpha, beta))
    return out


def _refinement_routes_agree(
    B: FinBicat, back1: str, back2: str, a1: str, a2: str,
    r1: TwoCellRep, r2: TwoCellRep, z: str, zp: str, z1: str, z2: str,
) -> bool:
    """Route equality over one leg pair (backward or forward) of two reps.

    ``back1/back2`` are the span legs, ``a1/a2`` the corresponding rep
    2-cells, ``z1: leg1∘z ⇒ leg1'∘zp`` and ``z2: leg2∘z ⇒ leg2'∘zp`` the
    refinement 2-cells.
    """
    lhs = vchain(
        Assoc(back1, r1.leg1, z),
        _wr(a1, z),
        AssocInv(back2, r1.leg2, z),
        _wl(back2, z2),
    )
    rhs = vchain(
        _wl(back1, z1),
        Assoc(back1, r2.leg1, zp),
        _wr(a2, zp),
        AssocInv(back2, r2.leg2, zp),
    )
    return eval_pasting(B, lhs) == eval_pasting(B, rhs)


def rep_equivalence_witness(
    B: FinBicat, W: WClass, S1: Span, S2: Span, r1: TwoCellRep, r2: TwoCellRep
) -> Optional[tuple[str, str, str, str, str]]:
    """Least ``(E, z, zp, zeta1, zeta2)`` identifying ``r1`` and ``r2``, or None.

    ``z: E→apex(r1)`` and ``zp: E→apex(r2)`` with ``(w1∘leg1)∘z`` in the
    class, ``zeta1: leg1∘z ⇒ leg1'∘zp`` and ``zeta2: leg2∘z ⇒ leg2'∘zp``
    invertible, such that the refined backward-leg data of both
    representatives agree, and likewise the forward-leg data.
    """
    w1l1 = B.hcomp1[(S1.back, r1.leg1)]
    for E in B.objects:
        for z in B.hom1(E, r1.apex):
            if B.hcomp1[(w1l1, z)] not in W:
                continue
            for zp in B.hom1(E, r2.apex):
                c1src = B.hcomp1[(r1.leg1, z)]
                c1tgt = B.hcomp1[(r2.leg1, zp)]
                c2src = B.hcomp1[(r1.leg2, z)]
                c2tgt = B.hcomp1[(r2.leg2, zp)]
                for zeta1 in inv_cells2(B, c1src, c1tgt):
                    for zeta2 in inv_cells2(B, c2src, c2tgt):
                        ok_w = _refinement_routes_agree(
                            B, S1.back, S2.back, r1.alpha, r2.alpha,
                            r1, r2, z, zp, zeta1, zeta2,
                        )
                        if not ok_w:
                            continue
                        ok_f = _refinement_routes_agree(
                            B, S1.forward, S2.forward, r1.beta, r2.beta,
                            r1, r2, z, zp, zeta1, zeta2,
                        )
                        if ok_f:
                            return (E, z, zp, zeta1, zeta2)
    return None


def reps_equivalent(
    B: FinBicat, W: WClass, S1: Span, S2: Span, r1: TwoCellRep, r2: TwoCellRep
) -> bool:
    return rep_equivalence_witness(B, W, S1, S2, r1, r2) is not None


def same_alpha_equivalent(
    B: FinBicat, W: WClass, S1: Span, S2: Span, r1: TwoCellRep, r2: TwoCellRep
) -> bool:
    """Decision rule for representatives differing only in the forward 2-cell.

    Such representatives are identified iff some ``z`` keeps the backward
    composite in the class and equalizes the two forward 2-cells by right
    whiskering.
    """
    if (r1.apex, r1.leg1, r1.leg2, r1.alpha) != (r2.apex, r2.leg1, r2.leg2, r2.alpha):
        raise PreconditionError("representatives do not share their frame data")
    if r1.beta == r2.beta:
        return True
    w1l1 = B.hcomp1[(S1.back, r1.leg1)]
    for E in B.objects:
        for z in B.hom1(E, r1.apex):
            if B.hcomp1[(w1l1, z)] not in W:
                continue
            if whisker_right(B, r1.beta, z) == whisker_right(B, r2.beta, z):
                return True
    return False


@dataclass(frozen=True)
class TwoCellClass:
    """An equivalence class of representatives for one frame of spans."""

    id: str
    src: Span
    tgt: Span
    reps: tuple[TwoCellRep, ...]

    @property
    def rep(self) -> TwoCellRep:
        return self.reps[0]


def compose_spans(
    B: FinBicat, W: WClass, outer: Span, inner: Span
) -> tuple[Span, Filler]:
    """Composite span ``outer∘inner`` through the least filler square."""
    if inner.tgt_obj(B) != outer.src_obj(B):
        raise StructureError("spans are not composable")
    raw = find_bf3_filler(B, W, outer.back, inner.forward)
    if raw is None:
        raise PreconditionError(
            f"no filler for cospan ({inner.forward!r}, {outer.back!r})"
        )
    D, left, right, rho = raw
    filler = Filler(D, left, right, rho)
    comp = Span(
        D,
        B.hcomp1[(inner.back, left)],
        B.hcomp1[(outer.forward, right)],
    )
    return comp, filler


def span_is_equivalence(B: FinBicat, W: WClass, s: Span) -> bool:
    """Whether the span is an internal equivalence in the localization.

    Holds iff the backward leg is in the class (true of every enumerated
    span) and the forward leg is in its right saturation.
    """
    return s.back in W and s.forward in saturate(B, W).members


# -- materialization ---------------------------------------------------------


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


@dataclass
class Localization:
    """A fully materialized localization with its construction data.

    ``bicat`` is the localized bicategory as an ordinary `FinBicat` whose
    1-cells are span ids and whose 2-cells are class ids.  The remaining
    fields retain the data the construction chose: the span behind each
    1-cell id, the class (with all its representatives) behind each 2-cell
    id, and the filler square behind each composition table entry.
    """

    base: FinBicat
    wcls: WClass
    bicat: FinBicat
    spans: dict[str, Span]
    classes: dict[str, TwoCellClass]
    fillers: dict[tuple[str, str], Filler]
    _rep_to_class: dict[tuple[str, str], dict[TwoCellRep, str]] = field(repr=False)

    def sid(self, s: Span) -> str:
        i = span_id(s)
        if i not in self.spans:
            raise StructureError(f"span {s!r} is not a 1-cell of the localization")
        return i

    def span(self, sid: str) -> Span:
        try:
            return self.spans[sid]
        except KeyError:
            raise StructureError(f"unknown span id {sid!r}") from None

    def cls(self, cid: str) -> TwoCellClass:
        try:
            return self.classes[cid]
        except KeyError:
            raise StructureError(f"unknown class id {cid!r}") from None

    def id_span(self, obj: str) -> Span:
        return self.span(self.bicat.id1[obj])

    def hom_spans(self, src: str, tgt: str) -> list[Span]:
        return [self.spans[i] for i in self.bicat.hom1(src, tgt)]

    def class_of(self, S1: Span, S2: Span, rep: TwoCellRep) -> str:
        """Class id of a representative; the rep must be valid for the frame."""
        key = (self.sid(S1), self.sid(S2))
        table = self._rep_to_class.get(key, {})
        if rep in table:
            return table[rep]
        if not is_valid_rep(self.base, self.wcls, S1, S2, rep):
            raise StructureError(f"invalid representative {rep!r} for {key!r}")
        raise StructureError(f"representative {rep!r} missing from enumeration")

    def compose_rep_chain(self, factors: list[str]) -> str:
        return vcompose_all(self.bicat, factors)


def _conjugated(B: FinBicat, pre, mid, post) -> str:
    return eval_pasting(B, vchain(pre, mid, post))


def materialize_fractions(
    B: FinBicat,
    W: WClass,
    *,
    name: Optional[str] = None,
    require_axioms: bool = True,
    validate: bool = True,
) -> Localization:
    """Construct the localization of ``B`` at ``W`` as explicit tables.

    Requires the closure axioms for ``W`` (checked up front unless
    ``require_axioms`` is disabled for callers that already did).  The
    resulting bicategory is validated exhaustively; a failure raises
    `LocalizationError` carrying the validation report.
    """
    if require_axioms:
        bf = check_bf(B, W)
        if not bf.passed:
            bad = ", ".join(k for k, v in bf.verdicts.items() if not v.holds)
            raise PreconditionError(f"class {W.name or W.members!r} fails {bad}")

    spans = enumerate_spans(B, W)
    sids = {span_id(s): s for s in spans}
    span_pos = {span_id(s): i for i, s in enumerate(spans)}
    one_cells = tuple(
        OneCell(span_id(s), s.src_obj(B), s.tgt_obj(B)) for s in spans
    )
    id1 = {}
    for X in B.objects:
        s = Span(X, B.id1[X], B.id1[X])
        if span_id(s) not in sids:
            raise PreconditionError(f"identity span missing at {X!r}")
        id1[X] = span_id(s)

    fillers: dict[tuple[str, str], Filler] = {}
    hcomp1: dict[tuple[str, str], str] = {}
    for so in spans:
        for si in spans:
            if si.tgt_obj(B) != so.src_obj(B):
                continue
            comp, filler = compose_spans(B, W, so, si)
            key = (span_id(so), span_id(si))
            fillers[key] = filler
            hcomp1[key] = span_id(comp)

    frames: dict[tuple[str, str], list[TwoCellRep]] = {}
    for s1 in spans:
        for s2 in spans:
            if (s1.src_obj(B), s1.tgt_obj(B)) != (s2.src_obj(B), s2.tgt_obj(B)):
                continue
            frames[(span_id(s1), span_id(s2))] = enumerate_reps(B, W, s1, s2)

    classes: dict[str, TwoCellClass] = {}
    rep_to_class: dict[tuple[str, str], dict[TwoCellRep, str]] = {}
    two_cells: list[TwoCell] = []
    frame_keys = sorted(
        frames, key=lambda k: (span_pos[k[0]], span_pos[k[1]])
    )
    for key in frame_keys:
        s1, s2 = sids[key[0]], sids[key[1]]
        reps = sorted(frames[key], key=lambda r: rep_sort_key(B, r))
        uf = _UnionFind(len(reps))
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                if uf.find(i) == uf.find(j):
                    continue
                if reps_equivalent(B, W, s1, s2, reps[i], reps[j]):
                    uf.union(i, j)
        groups: dict[int, list[TwoCellRep]] = {}
        for i, r in enumerate(reps):
            groups.setdefault(uf.find(i), []).append(r)
        ordered = sorted(groups.values(), key=lambda g: rep_sort_key(B, g[0]))
        table: dict[TwoCellRep, str] = {}
        for k, group in enumerate(ordered):
            cid = f"[{key[0]}=>{key[1]}]#{k}"
            classes[cid] = TwoCellClass(cid, s1, s2, tuple(group))
            for r in group:
                table[r] = cid
            two_cells.append(TwoCell(cid, key[0], key[1]))
        rep_to_class[key] = table

    def locate(S1: Span, S2: Span, rep: TwoCellRep) -> str:
        key = (span_id(S1), span_id(S2))
        try:
            return rep_to_class[key][rep]
        except KeyError:
            raise LocalizationError(
                f"constructed representative {rep!r} missing from frame {key!r}"
            ) from None

    id2: dict[str, str] = {}
    for s in spans:
        sid = span_id(s)
        idap = B.id1[s.apex]
        rep = TwoCellRep(
            s.apex, idap, idap,
            B.id2[B.hcomp1[(s.back, idap)]],
            B.id2[B.hcomp1[(s.forward, idap)]],
        )
        id2[sid] = locate(s, s, rep)

    def h1(g: str, f: str) -> str:
        return B.hcomp1[(g, f)]

    def compose_classes(S1: Span, S2: Span, S3: Span, phi: TwoCellRep, psi: TwoCellRep) -> str:
        """Class of the vertical composite of ``psi`` after ``phi``."""
        P, Q = phi.apex, psi.apex
        p1, p2 = phi.leg1, phi.leg2
        q2, q3 = psi.leg1, psi.leg2
        for D in B.objects:
            for x in B.hom1(D, P):
                p1x = h1(p1, x)
                if h1(S1.back, p1x) not in W:
                    continue
                p2x = h1(p2, x)
                for y in B.hom1(D, Q):
                    q2y = h1(q2, y)
                    for rho in inv_cells2(B, p2x, q2y):
                        alpha = eval_pasting(B, vchain(
                            Assoc(S1.back, p1, x),
                            _wr(phi.alpha, x),
                            AssocInv(S2.back, p2, x),
                            _wl(S2.back, rho),
                            Assoc(S2.back, q2, y),
                            _wr(psi.alpha, y),
                            AssocInv(S3.back, q3, y),
                        ))
                        beta = eval_pasting(B, vchain(
                            Assoc(S1.forward, p1, x),
                            _wr(phi.beta, x),
                            AssocInv(S2.forward, p2, x),
                            _wl(S2.forward, rho),
                            Assoc(S2.forward, q2, y),
                            _wr(psi.beta, y),
                            AssocInv(S3.forward, q3, y),
                        ))
                        rep = TwoCellRep(D, p1x, h1(q3, y), alpha, beta)
                        return locate(S1, S3, rep)
        raise LocalizationError(
            f"no composition site for classes over {span_id(S1)!r} ⇒ {span_id(S3)!r}"
        )

    vcomp: dict[tuple[str, str], str] = {}
    for c1 in classes.values():
        for c2 in classes.values():
            if span_id(c1.tgt) != span_id(c2.src):
                continue
            vcomp[(c2.id, c1.id)] = compose_classes(
                c1.src, c1.tgt, c2.tgt, c1.rep, c2.rep
            )

    def whisk_right_class(psi_cls: TwoCellClass, S: Span) -> str:
        """Class of ``psi ∗ i_S`` for ``psi: T1 ⇒ T2`` and a span ``S``."""
        T1, T2 = psi_cls.src, psi_cls.tgt
        psi = psi_cls.rep
        f1 = fillers[(span_id(T1), span_id(S))]
        f2 = fillers[(span_id(T2), span_id(S))]
        D1, x1, y1, rho1 = f1.apex, f1.left, f1.right, f1.rho
        D2, x2, y2, rho2 = f2.apex, f2.left, f2.right, f2.rho
        comp1 = sids[hcomp1[(span_id(T1), span_id(S))]]
        comp2 = sids[hcomp1[(span_id(T2), span_id(S))]]
        rho1_inv = two_cell_inverse(B, rho1)
        q1, q2 = psi.leg1, psi.leg2
        for E in B.objects:
            for e1 in B.hom1(E, D1):
                if h1(comp1.back, e1) not in W:
                    continue
                x1e1 = h1(x1, e1)
                y1e1 = h1(y1, e1)
                for e2 in B.hom1(E, D2):
                    x2e2 = h1(x2, e2)
                    y2e2 = h1(y2, e2)
                    for xi in inv_cells2(B, x1e1, x2e2):
                        route1 = eval_pasting(B, vchain(
                            Assoc(T1.back, y1, e1),
                            _wr(rho1_inv, e1),
                            AssocInv(S.forward, x1, e1),
                            _wl(S.forward, xi),
                            Assoc(S.forward, x2, e2),
                            _wr(rho2, e2),
                            AssocInv(T2.back, y2, e2),
                        ))
                        for lam in B.hom1(E, psi.apex):
                            q1lam = h1(q1, lam)
                            q2lam = h1(q2, lam)
                            for k1 in inv_cells2(B, y1e1, q1lam):
                                for k2 in inv_cells2(B, y2e2, q2lam):
                                    k2_inv = two_cell_inverse(B, k2)
                                    route2 = eval_pasting(B, vchain(
                                        _wl(T1.back, k1),
                                        Assoc(T1.back, q1, lam),
                                        _wr(psi.alpha, lam),
                                        AssocInv(T2.back, q2, lam),
                                        _wl(T2.back, k2_inv),
                                    ))
                                    if route1 != route2:
                                        continue
                                    alpha = eval_pasting(B, vchain(
                                        AssocInv(S.back, x1, e1),
                                        _wl(S.back, xi),
                                        Assoc(S.back, x2, e2),
                                    ))
                                    beta = eval_pasting(B, vchain(
                                        AssocInv(T1.forward, y1, e1),
                                        _wl(T1.forward, k1),
                                        Assoc(T1.forward, q1, lam),
                                        _wr(psi.beta, lam),
                                        AssocInv(T2.forward, q2, lam),
                                        _wl(T2.forward, k2_inv),
                                        Assoc(T2.forward, y2, e2),
                                    ))
                                    rep = TwoCellRep(E, e1, e2, alpha, beta)
                                    return locate(comp1, comp2, rep)
        raise LocalizationError(
            f"no whiskering site for {psi_cls.id!r} ∗ {span_id(S)!r}"
        )

    def whisk_left_class(T: Span, phi_cls: TwoCellClass) -> str:
        """Class of ``i_T ∗ phi`` for a span ``T`` and ``phi: S1 ⇒ S2``."""
        S1, S2 = phi_cls.src, phi_cls.tgt
        phi = phi_cls.rep
        f1 = fillers[(span_id(T), span_id(S1))]
        f2 = fillers[(span_id(T), span_id(S2))]
        D1, x1, y1, rho1 = f1.apex, f1.left, f1.right, f1.rho
        D2, x2, y2, rho2 = f2.apex, f2.left, f2.right, f2.rho
        comp1 = sids[hcomp1[(span_id(T), span_id(S1))]]
        comp2 = sids[hcomp1[(span_id(T), span_id(S2))]]
        rho1_inv = two_cell_inverse(B, rho1)
        p1, p2 = phi.leg1, phi.leg2
        for E in B.objects:
            for e1 in B.hom1(E, D1):
                if h1(comp1.back, e1) not in W:
                    continue
                x1e1 = h1(x1, e1)
                y1e1 = h1(y1, e1)
                for e2 in B.hom1(E, D2):
                    x2e2 = h1(x2, e2)
                    y2e2 = h1(y2, e2)
                    for lam in B.hom1(E, phi.apex):
                        p1lam = h1(p1, lam)
                        p2lam = h1(p2, lam)
                        for i1 in inv_cells2(B, x1e1, p1lam):
                            for i2 in inv_cells2(B, x2e2, p2lam):
                                i2_inv = two_cell_inverse(B, i2)
                                delta = eval_pasting(B, vchain(
                                    Assoc(T.back, y1, e1),
                                    _wr(rho1_inv, e1),
                                    AssocInv(S1.forward, x1, e1),
                                    _wl(S1.forward, i1),
                                    Assoc(S1.forward, p1, lam),
                                    _wr(phi.beta, lam),
                                    AssocInv(S2.forward, p2, lam),
                                    _wl(S2.forward, i2_inv),
                                    Assoc(S2.forward, x2, e2),
                                    _wr(rho2, e2),
                                    AssocInv(T.back, y2, e2),
                                ))
                                for eps in B.cells2(y1e1, y2e2):
                                    if whisker_left(B, T.back, eps) != delta:
                                        continue
                                    alpha = eval_pasting(B, vchain(
                                        AssocInv(S1.back, x1, e1),
                                        _wl(S1.back, i1),
                                        Assoc(S1.back, p1, lam),
                                        _wr(phi.alpha, lam),
                                        AssocInv(S2.back, p2, lam),
                                        _wl(S2.back, i2_inv),
                                        Assoc(S2.back, x2, e2),
                                    ))
                                    beta = eval_pasting(B, vchain(
                                        AssocInv(T.forward, y1, e1),
                                        _wl(T.forward, eps),
                                        Assoc(T.forward, y2, e2),
                                    ))
                                    rep = TwoCellRep(E, e1, e2, alpha, beta)
                                    return locate(comp1, comp2, rep)
        raise LocalizationError(
            f"no whiskering site for {span_id(T)!r} ∗ {phi_cls.id!r}"
        )

    whisk_left: dict[tuple[str, str], str] = {}
    for g in spans:
        for c in classes.values():
            if c.src.tgt_obj(B) != g.src_obj(B):
                continue
            whisk_left[(span_id(g), c.id)] = whisk_left_class(g, c)
    whisk_right: dict[tuple[str, str], str] = {}
    for c in classes.values():
        for f in spans:
            if f.tgt_obj(B) != c.src.src_obj(B):
                continue
            whisk_right[(c.id, span_id(f))] = whisk_right_class(c, f)

    class_order = [t.id for t in two_cells]

    def connecting_class(src_sid: str, tgt_sid: str, context: str) -> str:
        """Least class in the frame that is invertible for the built tables."""
        for cid in class_order:
            t = classes[cid]
            if (span_id(t.src), span_id(t.tgt)) != (src_sid, tgt_sid):
                continue
            for did in class_order:
                u = classes[did]
                if (span_id(u.src), span_id(u.tgt)) != (tgt_sid, src_sid):
                    continue
                if (
                    vcomp[(did, cid)] == id2[src_sid]
                    and vcomp[(cid, did)] == id2[tgt_sid]
                ):
                    return cid
        raise LocalizationError(f"no invertible class for {context}: {src_sid!r} ⇒ {tgt_sid!r}")

    assoc: dict[tuple[str, str, str], str] = {}
    for hs in spans:
        for gs in spans:
            if hs.src_obj(B) != gs.tgt_obj(B):
                continue
            hg = hcomp1[(span_id(hs), span_id(gs))]
            for fs in spans:
                if gs.src_obj(B) != fs.tgt_obj(B):
                    continue
                gf = hcomp1[(span_id(gs), span_id(fs))]
                lhs = hcomp1[(span_id(hs), gf)]
                rhs = hcomp1[(hg, span_id(fs))]
                assoc[(span_id(hs), span_id(gs), span_id(fs))] = connecting_class(
                    lhs, rhs, "associator"
                )
    runit: dict[str, str] = {}
    lunit: dict[str, str] = {}
    for s in spans:
        sid = span_id(s)
        runit[sid] = connecting_class(
            hcomp1[(sid, id1[s.src_obj(B)])], sid, "right unitor"
        )
        lunit[sid] = connecting_class(
            hcomp1[(id1[s.tgt_obj(B)], sid)], sid, "left unitor"
        )

    mat = FinBicat(
        objects=B.objects,
        one_cells=one_cells,
        two_cells=tuple(two_cells),
        id1=id1,
        id2=id2,
        hcomp1=hcomp1,
        vcomp=vcomp,
        whisk_left=whisk_left,
        whisk_right=whisk_right,
        assoc=assoc,
        runit=runit,
        lunit=lunit,
        strict=False,
        name=name or f"{B.name}[{W.name or 'W'}^-1]",
    )
    components_id = all(
        mat.two(v).src == mat.two(v).tgt and mat.id2[mat.two(v).src] == v
        for table in (mat.assoc, mat.runit, mat.lunit)
        for v in table.values()
    )
    if components_id:
        mat.strict = True

    if validate:
        from .core import validate_bicat

        report = validate_bicat(mat)
        if not report.passed:
            laws = sorted(report.laws_failed())
            raise LocalizationError(
                f"materialized localization violates: {', '.join(laws)}", report
            )

    return Localization(
        base=B,
        wcls=W,
        bicat=mat,
        spans=sids,
        classes=classes,
        fillers=fillers,
        _rep_to_class=rep_to_class,
    )


def universal_functor_data(loc: Localization):
    """Tables of the canonical pseudofunctor from the base into the localization.

    Returns ``(f0, f1, f2, psi, sigma)`` as plain dicts; `bicfrac.psfun`
    wraps them into its pseudofunctor record.
    """
    B = loc.base
    f0 = {X: X for X in B.objects}
    f1 = {}
    for c in B.one_cells:
        f1[c.id] = loc.sid(Span(c.src, B.id1[c.src], c.id))
    f2 = {}
    for t in B.two_cells:
        f, g = B.one(t.src), B.one(t.tgt)
        A = f.src
        idA = B.id1[A]
        rep = TwoCellRep(
            A, idA, idA,
            B.id2[B.hcomp1[(idA, idA)]],
            whisker_right(B, t.id, idA),
        )
        f2[t.id] = loc.class_of(
            Span(A, idA, f.id), Span(A, idA, g.id), rep
        )
    psi = {}
    for gc in B.one_cells:
        for fc in B.one_cells:
            if gc.src != fc.tgt:
                continue
            A = fc.src
            idA = B.id1[A]
            ug = f1[gc.id]
            uf = f1[fc.id]
            filler = loc.fillers[(ug, uf)]
            D, vp, fp = filler.apex, filler.left, filler.right
            idD = B.id1[D]
            gf = B.hcomp1[(gc.id, fc.id)]
            alpha = eval_pasting(B, RUnitInv(B.hcomp1[(idA, vp)]))
            beta = eval_pasting(B, vchain(
                AssocInv(gc.id, fc.id, vp),
                _wl(gc.id, filler.rho),
                WhiskL(gc.id, LUnit(fp)),
                RUnitInv(B.hcomp1[(gc.id, fp)]),
            ))
            rep = TwoCellRep(D, vp, idD, alpha, beta)
            src_span = Span(A, idA, gf)
            tgt_span = loc.span(loc.bicat.hcomp1[(ug, uf)])
            psi[(gc.id, fc.id)] = loc.class_of(src_span, tgt_span, rep)
    sigma = {}
    for X in B.objects:
        sigma[X] = loc.bicat.id2[loc.bicat.id1[X]]
    return f0, f1, f2, psi, sigma


def universal_pseudofunctor(loc: Localization):
    """The canonical pseudofunctor from the base into its localization.

    Objects are fixed, a 1-cell ``f`` becomes the span with identity
    backward leg and forward leg ``f``, a 2-cell becomes the class of its
    right whiskering by the identity, and the compositor at ``(g, f)`` is
    built constructively from the filler square the composition table chose.
    """
    from .psfun import PsFun

    f0, f1, f2, psi, sigma = universal_functor_data(loc)
    return PsFun(
        source=loc.base,
        target=loc.bicat,
        f0=f0,
        f1=f1,
        f2=f2,
        psi=psi,
        sigma=sigma,
        name=f"U[{loc.bicat.name}]",
    )
