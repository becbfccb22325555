"""Pseudofunctors between finite bicategories, given by explicit tables.

A `PsFun` records object, 1-cell and 2-cell maps together with the
compositor ``psi[(g, f)]: F(g∘f) ⇒ F(g)∘F(f)`` and the unit comparison
``sigma[A]: F(id_A) ⇒ id_{F(A)}``.  `validate_psfun` checks the whole
definition exhaustively: totality and boundary preservation, strict
functoriality on 2-cells, invertibility of the comparison cells, naturality
of the compositor in both arguments at once, the associativity hexagon and
both unit triangles.

`induce_g_tilde` lifts a pseudofunctor to the localizations: the source is
localized at its class, the target at the right saturation of its class,
1-cells of spans are mapped legwise, 2-cell classes are mapped through
`g_tilde_on_two_cell` (conjugating the representative data by the
compositor), and the comparison cells of the lift are found by searching
each frame for its least invertible class.  The resulting pseudofunctor is
validated before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import (
    FinBicat,
    Violation,
    PreconditionError,
    hcompose2,
    inv_cells2,
    is_invertible2,
    two_cell_inverse,
    vcompose,
    vcompose_all,
    whisker_left,
    whisker_right,
)
from .wclass import WClass, saturate


@dataclass
class PsFun:
    source: FinBicat
    target: FinBicat
    f0: dict[str, str]
    f1: dict[str, str]
    f2: dict[str, str]
    psi: dict[tuple[str, str], str]
    sigma: dict[str, str]
    name: str = field(default="", compare=False)

    def apply0(self, obj: str) -> str:
        return self.f0[obj]

    def apply1(self, f: str) -> str:
        return self.f1[f]

    def apply2(self, a: str) -> str:
        return self.f2[a]


@dataclass
class PsFunReport:
    passed: bool
    violations: list[Violation]

    def laws_failed(self) -> set[str]:
        return {v.law for v in self.violations}


def identity_psfun(B: FinBicat) -> PsFun:
    return PsFun(
        source=B,
        target=B,
        f0={x: x for x in B.objects},
        f1={c.id: c.id for c in B.one_cells},
        f2={t.id: t.id for t in B.two_cells},
        psi={
            (g.id, f.id): B.id2[B.hcomp1[(g.id, f.id)]]
            for g in B.one_cells
            for f in B.one_cells
            if g.src == f.tgt
        },
        sigma={x: B.id2[B.id1[x]] for x in B.objects},
        name=f"id[{B.name}]" if B.name else "id",
    )


def _structural_psfun_violations(F: PsFun) -> list[Violation]:
    S, T = F.source, F.target
    out: list[Violation] = []

    def add(law: str, cells: tuple, detail: str) -> None:
        out.append(Violation(law, cells, detail))

    tob = {x for x in T.objects}
    for x in S.objects:
        y = F.f0.get(x)
        if y is None or y not in tob:
            add("psfun:objects", (x,), "object image missing or undeclared")
    for c in S.one_cells:
        v = F.f1.get(c.id)
        if v is None:
            add("psfun:one-cells", (c.id,), "1-cell image missing")
            continue
        try:
            vc = T.one(v)
        except Exception:
            add("psfun:one-cells", (c.id, v), "image is not a 1-cell of the target")
            continue
        if (vc.src, vc.tgt) != (F.f0.get(c.src), F.f0.get(c.tgt)):
            add("psfun:one-cells", (c.id, v), "image has wrong endpoints")
    for t in S.two_cells:
        v = F.f2.get(t.id)
        if v is None:
            add("psfun:two-cells", (t.id,), "2-cell image missing")
            continue
        try:
            vt = T.two(v)
        except Exception:
            add("psfun:two-cells", (t.id, v), "image is not a 2-cell of the target")
            continue
        if (vt.src, vt.tgt) != (F.f1.get(t.src), F.f1.get(t.tgt)):
            add("psfun:two-cells", (t.id, v), "image has wrong boundary")
    for g in S.one_cells:
        for f in S.one_cells:
            if g.src != f.tgt:
                continue
            p = F.psi.get((g.id, f.id))
            if p is None:
                add("psfun:compositor", (g.id, f.id), "compositor entry missing")
                continue
            try:
                pt = T.two(p)
            except Exception:
                add("psfun:compositor", (g.id, f.id, p), "not a target 2-cell")
                continue
            want_src = F.f1.get(S.hcomp1[(g.id, f.id)])
            want_tgt = T.hcomp1.get((F.f1.get(g.id), F.f1.get(f.id)))
            if (pt.src, pt.tgt) != (want_src, want_tgt):
                add("psfun:compositor", (g.id, f.id, p), "wrong boundary")
    for x in S.objects:
        s = F.sigma.get(x)
        if s is None:
            add("psfun:unit-comparison", (x,), "unit comparison missing")
            continue
        try:
            st = T.two(s)
        except Exception:
            add("psfun:unit-comparison", (x, s), "not a target 2-cell")
            continue
        want_src = F.f1.get(S.id1[x])
        want_tgt = T.id1.get(F.f0.get(x))
        if (st.src, st.tgt) != (want_src, want_tgt):
            add("psfun:unit-comparison", (x, s), "wrong boundary")
    return out


def _psfun_law_violations(F: PsFun) -> list[Violation]:
    S, T = F.source, F.target
    out: list[Violation] = []
    add = out.append

    for c in S.one_cells:
        if F.f2[S.id2[c.id]] != T.id2[F.f1[c.id]]:
            add(Violation("psfun:identities", (c.id,), "identity 2-cell not preserved"))
    for b in S.two_cells:
        for a in S.two_cells:
            if a.tgt != b.src:
                continue
            lhs = F.f2[S.vcomp[(b.id, a.id)]]
            rhs = T.vcomp[(F.f2[b.id], F.f2[a.id])]
            if lhs != rhs:
                add(Violation("psfun:vertical", (b.id, a.id), "composite not preserved"))

    for key, p in F.psi.items():
        if not is_invertible2(T, p):
            add(Violation("psfun:compositor-invertible", key, ""))
    for x, s in F.sigma.items():
        if not is_invertible2(T, s):
            add(Violation("psfun:unit-invertible", (x,), ""))
    if out:
        return out

    for b in S.two_cells:  # b: g ⇒ g'
        go = S.one(b.src)
        for a in S.two_cells:  # a: f ⇒ f'
            if S.one(a.src).tgt != go.src:
                continue
            lhs = vcompose(
                T,
                F.psi[(b.tgt, a.tgt)],
                F.f2[hcompose2(S, b.id, a.id)],
            )
            rhs = vcompose(
                T,
                hcompose2(T, F.f2[b.id], F.f2[a.id]),
                F.psi[(b.src, a.src)],
            )
            if lhs != rhs:
                add(Violation("psfun:compositor-natural", (b.id, a.id), ""))

    for h in S.one_cells:
        for g in S.one_cells:
            if h.src != g.tgt:
                continue
            hg = S.hcomp1[(h.id, g.id)]
            for f in S.one_cells:
                if g.src != f.tgt:
                    continue
                gf = S.hcomp1[(g.id, f.id)]
                route1 = vcompose_all(T, [
                    F.f2[S.assoc[(h.id, g.id, f.id)]],
                    F.psi[(hg, f.id)],
                    whisker_right(T, F.psi[(h.id, g.id)], F.f1[f.id]),
                ])
                route2 = vcompose_all(T, [
                    F.psi[(h.id, gf)],
                    whisker_left(T, F.f1[h.id], F.psi[(g.id, f.id)]),
                    T.assoc[(F.f1[h.id], F.f1[g.id], F.f1[f.id])],
                ])
                if route1 != route2:
                    add(Violation("psfun:hexagon", (h.id, g.id, f.id), ""))

    for c in S.one_cells:
        fid = F.f1[c.id]
        ida = S.id1[c.src]
        lhs = vcompose_all(T, [
            whisker_left(T, fid, F.sigma[c.src]),
            T.runit[fid],
        ])
        psi_inv = two_cell_inverse(T, F.psi[(c.id, ida)])
        rhs = vcompose_all(T, [psi_inv, F.f2[S.runit[c.id]]])
        if lhs != rhs:
            add(Violation("psfun:right-unit", (c.id,), ""))
        idb = S.id1[c.tgt]
        lhs = vcompose_all(T, [
            whisker_right(T, F.sigma[c.tgt], fid),
            T.lunit[fid],
        ])
        psi_inv = two_cell_inverse(T, F.psi[(idb, c.id)])
        rhs = vcompose_all(T, [psi_inv, F.f2[S.lunit[c.id]]])
        if lhs != rhs:
            add(Violation("psfun:left-unit", (c.id,), ""))
    return out


def validate_psfun(F: PsFun) -> PsFunReport:
    """Exhaustively check a pseudofunctor's tables against its laws.

    Structural problems (missing or mistyped entries) short-circuit the law
    checks, and invertibility failures of the comparison cells short-circuit
    the coherence checks, which compose their inverses.
    """
    violations = _structural_psfun_violations(F)
    if not violations:
        violations = _psfun_law_violations(F)
    return PsFunReport(not violations, violations)


def maps_into(F: PsFun, W_src: WClass, W_tgt: WClass) -> tuple[bool, Optional[str]]:
    """Whether ``F`` carries every member of one class into the other.

    Returns the first escaping member alongside the verdict.
    """
    for w in sorted(W_src.members, key=F.source.pos1):
        if F.f1[w] not in W_tgt:
            return False, w
    return True, None


# -- lifting to localizations ------------------------------------------------


@dataclass
class GTildeResult:
    psfun: PsFun
    source_loc: object
    target_loc: object
    report: PsFunReport


def g_tilde_on_two_cell(
    F: PsFun, source_loc, target_loc, class_id: str
) -> str:
    """Image in the target localization of a source-localization 2-cell.

    The canonical representative ``(E, l1, l2, a, b)`` of the class is mapped
    legwise through ``F``, with the representative 2-cells conjugated by the
    compositor so that they connect the composite legs of the image spans.
    """
    from .fractions import Span, TwoCellRep

    cls = source_loc.cls(class_id)
    S1, S2 = cls.src, cls.tgt
    r = cls.rep
    T = F.target

    def conj(back1: str, back2: str, mid: str) -> str:
        pre = two_cell_inverse(T, F.psi[(back1, r.leg1)])
        post = F.psi[(back2, r.leg2)]
        return vcompose_all(T, [pre, F.f2[mid], post])

    image = TwoCellRep(
        F.f0[r.apex],
        F.f1[r.leg1],
        F.f1[r.leg2],
        conj(S1.back, S2.back, r.alpha),
        conj(S1.forward, S2.forward, r.beta),
    )
    img_src = Span(F.f0[S1.apex], F.f1[S1.back], F.f1[S1.forward])
    img_tgt = Span(F.f0[S2.apex], F.f1[S2.back], F.f1[S2.forward])
    return target_loc.class_of(img_src, img_tgt, image)


def induce_g_tilde(
    F: PsFun,
    W_src: WClass,
    W_tgt: WClass,
    *,
    source_loc=None,
    target_loc=None,
) -> GTildeResult:
    """Lift ``F`` to a pseudofunctor between localizations.

    The source is localized at ``W_src`` and the target at the right
    saturation of ``W_tgt``; ``F`` must already send ``W_src`` into that
    saturation.  Comparison cells of the lift are the least invertible class
    of their frame, and the whole lift is validated before returning.
    """
    from .fractions import LocalizationError, Span, materialize_fractions

    report = validate_psfun(F)
    if not report.passed:
        raise PreconditionError("pseudofunctor fails validation; cannot lift")
    sat = saturate(F.target, W_tgt).members
    ok, escape = maps_into(F, W_src, sat)
    if not ok:
        raise PreconditionError(
            f"image of {escape!r} is outside the saturated target class"
        )
    if source_loc is None:
        source_loc = materialize_fractions(F.source, W_src)
    if target_loc is None:
        target_loc = materialize_fractions(
            F.target, sat, name=f"{F.target.name}[sat^-1]"
        )

    SB, TB = source_loc.bicat, target_loc.bicat
    f0 = {x: F.f0[x] for x in SB.objects}
    f1 = {}
    for sid in (c.id for c in SB.one_cells):
        s = source_loc.span(sid)
        f1[sid] = target_loc.sid(
            Span(F.f0[s.apex], F.f1[s.back], F.f1[s.forward])
        )
    f2 = {}
    for t in SB.two_cells:
        f2[t.id] = g_tilde_on_two_cell(F, source_loc, target_loc, t.id)

    psi = {}
    for g in SB.one_cells:
        for f in SB.one_cells:
            if g.src != f.tgt:
                continue
            src_cell = f1[SB.hcomp1[(g.id, f.id)]]
            tgt_cell = TB.hcomp1[(f1[g.id], f1[f.id])]
            cands = inv_cells2(TB, src_cell, tgt_cell)
            if not cands:
                raise LocalizationError(
                    f"no invertible comparison class at ({g.id!r}, {f.id!r})"
                )
            psi[(g.id, f.id)] = cands[0]
    sigma = {}
    for x in SB.objects:
        src_cell = f1[SB.id1[x]]
        tgt_cell = TB.id1[f0[x]]
        cands = inv_cells2(TB, src_cell, tgt_cell)
        if not cands:
            raise LocalizationError(f"no invertible unit comparison at {x!r}")
        sigma[x] = cands[0]

    lifted = PsFun(
        source=SB,
        target=TB,
        f0=f0,
        f1=f1,
        f2=f2,
        psi=psi,
        sigma=sigma,
        name=f"{F.name}~" if F.name else "lift",
    )
    lift_report = validate_psfun(lifted)
    if not lift_report.passed:
        laws = ", ".join(sorted(lift_report.laws_failed()))
        raise LocalizationError(f"lifted pseudofunctor violates: {laws}")
    return GTildeResult(lifted, source_loc, target_loc, lift_report)
