"""Reading and writing instances as JSON documents.

A document describes one bicategory by exhaustive tables, plus optional
named 1-cell classes and pseudofunctor blocks.  Composition tables are
arrays of ``[key..., value]`` rows so fixtures stay diffable and can be
emitted from any language.  Parsing checks that identifiers are unique,
that every reference is declared and that every table is total on its
domain, naming the offending entry; the coherence laws are deliberately
left to `validate_bicat` so a structurally well-formed but lawless
document can still be loaded and inspected.

A pseudofunctor block carries ``source`` and ``target`` fields that are
either ``"self"`` or a path to another document, resolved relative to the
referring file.  Exports preserve those references, so parse, export and
re-parse round-trip to equal values, including for materialized fraction
bicategories whose cell ids are generated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .core import FinBicat, OneCell, StructureError, TwoCell
from .psfun import PsFun
from .wclass import WClass


class PresentationError(ValueError):
    """A malformed document; the message names the offending entry."""


@dataclass
class Presentation:
    """A parsed document: one bicategory, named classes, pseudofunctors."""

    bicat: FinBicat
    classes: dict[str, WClass]
    psfuns: dict[str, PsFun]
    name: str = ""
    psfun_refs: dict[str, tuple[str, str]] = field(default_factory=dict)
    ref_docs: dict[str, "Presentation"] = field(default_factory=dict)


def _fail(path: str, msg: str) -> None:
    raise PresentationError(f"{path}: {msg}")


def _want(doc: dict, key: str, kind: type, path: str = "") -> object:
    loc = f"{path}.{key}" if path else key
    if key not in doc:
        _fail(loc, "missing field")
    val = doc[key]
    if not isinstance(val, kind):
        _fail(loc, f"expected {kind.__name__}, got {type(val).__name__}")
    return val


def _rows(doc: dict, key: str, width: int, path: str = "") -> list[tuple[str, ...]]:
    """Fixed-width rows of strings, reported per row index on mismatch."""
    raw = _want(doc, key, list, path)
    loc = f"{path}.{key}" if path else key
    out = []
    for i, row in enumerate(raw):
        if (
            not isinstance(row, list)
            or len(row) != width
            or not all(isinstance(x, str) for x in row)
        ):
            _fail(f"{loc}[{i}]", f"expected a row of {width} strings")
        out.append(tuple(row))
    return out


def _keyed(
    rows: list[tuple[str, ...]], nkeys: int, loc: str
) -> dict[tuple[str, ...], str]:
    table: dict[tuple[str, ...], str] = {}
    for row in rows:
        key = row[:nkeys]
        if key in table:
            shown = key[0] if nkeys == 1 else key
            _fail(f"{loc}[{shown!r}]", "duplicate entry")
        table[key] = row[nkeys]
    return table


def _parse_bicat(doc: dict, name: str) -> FinBicat:
    objects = _want(doc, "objects", list)
    for i, x in enumerate(objects):
        if not isinstance(x, str):
            _fail(f"objects[{i}]", "expected a string")
    ones = [OneCell(*r) for r in _rows(doc, "one_cells", 3)]
    twos = [TwoCell(*r) for r in _rows(doc, "two_cells", 3)]

    obj_set = set(objects)
    if len(obj_set) != len(objects):
        dup = next(x for i, x in enumerate(objects) if x in objects[:i])
        _fail(f"objects[{dup!r}]", "duplicate id")
    one_by: dict[str, OneCell] = {}
    for c in ones:
        if c.id in one_by:
            _fail(f"one_cells[{c.id!r}]", "duplicate id")
        if c.src not in obj_set:
            _fail(f"one_cells[{c.id!r}]", f"undeclared object {c.src!r}")
        if c.tgt not in obj_set:
            _fail(f"one_cells[{c.id!r}]", f"undeclared object {c.tgt!r}")
        one_by[c.id] = c
    two_by: dict[str, TwoCell] = {}
    for t in twos:
        if t.id in two_by or t.id in one_by:
            _fail(f"two_cells[{t.id!r}]", "duplicate id")
        for leg in (t.src, t.tgt):
            if leg not in one_by:
                _fail(f"two_cells[{t.id!r}]", f"undeclared 1-cell {leg!r}")
        two_by[t.id] = t

    def keyed(key: str, nkeys: int, keykind: dict, valkind: dict) -> dict:
        table = _keyed(_rows(doc, key, nkeys + 1), nkeys, key)
        for k, v in table.items():
            for part in k:
                if part not in keykind:
                    _fail(f"{key}[{k if nkeys > 1 else k[0]!r}]",
                          f"undeclared cell {part!r}")
            if v not in valkind:
                _fail(f"{key}[{k if nkeys > 1 else k[0]!r}]",
                      f"undeclared cell {v!r}")
        return table

    id1 = {k[0]: v for k, v in _keyed(_rows(doc, "id1", 2), 1, "id1").items()}
    for k, v in id1.items():
        if k not in obj_set:
            _fail(f"id1[{k!r}]", f"undeclared object {k!r}")
        if v not in one_by:
            _fail(f"id1[{k!r}]", f"undeclared cell {v!r}")
    id2 = {k[0]: v for k, v in _keyed(_rows(doc, "id2", 2), 1, "id2").items()}
    runit = {k[0]: v for k, v in _keyed(_rows(doc, "runit", 2), 1, "runit").items()}
    lunit = {k[0]: v for k, v in _keyed(_rows(doc, "lunit", 2), 1, "lunit").items()}
    for key, table in (("id2", id2), ("runit", runit), ("lunit", lunit)):
        for k, v in table.items():
            if k not in one_by:
                _fail(f"{key}[{k!r}]", f"undeclared cell {k!r}")
            if v not in two_by:
                _fail(f"{key}[{k!r}]", f"undeclared cell {v!r}")

    hcomp1 = keyed("hcomp1", 2, one_by, one_by)
    vcomp = keyed("vcomp", 2, two_by, two_by)
    wl = keyed("whisk_left", 2, {**one_by, **two_by}, two_by)
    wr = keyed("whisk_right", 2, {**one_by, **two_by}, two_by)
    assoc = keyed("assoc", 3, one_by, two_by)
    strict = doc.get("strict", False)
    if not isinstance(strict, bool):
        _fail("strict", "expected a boolean")

    # Totality on the composable domain, named per missing entry.
    for x in objects:
        if x not in id1:
            _fail(f"id1[{x!r}]", "missing entry")
    for c in ones:
        for key, table in (("id2", id2), ("runit", runit), ("lunit", lunit)):
            if c.id not in table:
                _fail(f"{key}[{c.id!r}]", "missing entry")
    for g in ones:
        for f in ones:
            if f.tgt == g.src and (g.id, f.id) not in hcomp1:
                _fail(f"hcomp1[{(g.id, f.id)}]", "missing entry")
    for b in twos:
        for a in twos:
            if a.tgt == b.src and (b.id, a.id) not in vcomp:
                _fail(f"vcomp[{(b.id, a.id)}]", "missing entry")
    for g in ones:
        for a in twos:
            if one_by[a.src].tgt == g.src and (g.id, a.id) not in wl:
                _fail(f"whisk_left[{(g.id, a.id)}]", "missing entry")
    for b in twos:
        for f in ones:
            if f.tgt == one_by[b.src].src and (b.id, f.id) not in wr:
                _fail(f"whisk_right[{(b.id, f.id)}]", "missing entry")
    for h in ones:
        for g in ones:
            if g.tgt != h.src:
                continue
            for f in ones:
                if f.tgt == g.src and (h.id, g.id, f.id) not in assoc:
                    _fail(f"assoc[{(h.id, g.id, f.id)}]", "missing entry")

    try:
        return FinBicat(
            objects=tuple(objects),
            one_cells=tuple(ones),
            two_cells=tuple(twos),
            id1=id1,
            id2=id2,
            hcomp1={(g, f): v for (g, f), v in hcomp1.items()},
            vcomp={(b, a): v for (b, a), v in vcomp.items()},
            whisk_left={(g, a): v for (g, a), v in wl.items()},
            whisk_right={(b, f): v for (b, f), v in wr.items()},
            assoc={(h, g, f): v for (h, g, f), v in assoc.items()},
            runit=runit,
            lunit=lunit,
            strict=strict,
            name=name,
        )
    except StructureError as e:
        raise PresentationError(str(e)) from e


def _parse_classes(doc: dict, bicat: FinBicat) -> dict[str, WClass]:
    raw = doc.get("classes", {})
    if not isinstance(raw, dict):
        _fail("classes", "expected an object of name -> member list")
    out: dict[str, WClass] = {}
    for cname, members in raw.items():
        if not isinstance(members, list):
            _fail(f"classes[{cname!r}]", "expected a member list")
        seen = set()
        for i, m in enumerate(members):
            if not isinstance(m, str):
                _fail(f"classes[{cname!r}][{i}]", "expected a string")
            if m in seen:
                _fail(f"classes[{cname!r}][{i}]", f"duplicate member {m!r}")
            try:
                bicat.one(m)
            except Exception:
                _fail(f"classes[{cname!r}][{i}]", f"undeclared 1-cell {m!r}")
            seen.add(m)
        out[cname] = WClass(frozenset(members), cname)
    return out


def _psfun_table(block: dict, key: str, nkeys: int, loc: str) -> dict:
    table = _keyed(_rows(block, key, nkeys + 1, loc), nkeys, f"{loc}.{key}")
    if nkeys == 1:
        return {k[0]: v for k, v in table.items()}
    return dict(table)


def _check_psfun_block(
    loc: str, F: PsFun
) -> None:
    src, tgt = F.source, F.target
    tgt_objs = set(tgt.objects)
    tgt_one = {c.id for c in tgt.one_cells}
    tgt_two = {t.id for t in tgt.two_cells}
    for x in src.objects:
        if x not in F.f0:
            _fail(f"{loc}.f0[{x!r}]", "missing entry")
        if F.f0[x] not in tgt_objs:
            _fail(f"{loc}.f0[{x!r}]", f"undeclared object {F.f0[x]!r}")
    for c in src.one_cells:
        if c.id not in F.f1:
            _fail(f"{loc}.f1[{c.id!r}]", "missing entry")
        if F.f1[c.id] not in tgt_one:
            _fail(f"{loc}.f1[{c.id!r}]", f"undeclared cell {F.f1[c.id]!r}")
    for t in src.two_cells:
        if t.id not in F.f2:
            _fail(f"{loc}.f2[{t.id!r}]", "missing entry")
        if F.f2[t.id] not in tgt_two:
            _fail(f"{loc}.f2[{t.id!r}]", f"undeclared cell {F.f2[t.id]!r}")
    for g in src.one_cells:
        for f in src.one_cells:
            if f.tgt != g.src:
                continue
            if (g.id, f.id) not in F.psi:
                _fail(f"{loc}.psi[{(g.id, f.id)}]", "missing entry")
            if F.psi[(g.id, f.id)] not in tgt_two:
                _fail(f"{loc}.psi[{(g.id, f.id)}]",
                      f"undeclared cell {F.psi[(g.id, f.id)]!r}")
    for x in src.objects:
        if x not in F.sigma:
            _fail(f"{loc}.sigma[{x!r}]", "missing entry")
        if F.sigma[x] not in tgt_two:
            _fail(f"{loc}.sigma[{x!r}]", f"undeclared cell {F.sigma[x]!r}")
    for x in F.f0:
        if x not in set(src.objects):
            _fail(f"{loc}.f0[{x!r}]", f"undeclared object {x!r}")
    src_one = {c.id for c in src.one_cells}
    src_two = {t.id for t in src.two_cells}
    for x in F.f1:
        if x not in src_one:
            _fail(f"{loc}.f1[{x!r}]", f"undeclared cell {x!r}")
    for x in F.f2:
        if x not in src_two:
            _fail(f"{loc}.f2[{x!r}]", f"undeclared cell {x!r}")
    for g, f in F.psi:
        if g not in src_one or f not in src_one:
            _fail(f"{loc}.psi[{(g, f)}]", "undeclared cell in key")
    for x in F.sigma:
        if x not in set(src.objects):
            _fail(f"{loc}.sigma[{x!r}]", f"undeclared object {x!r}")


def parse_presentation(
    text: str, *, base_dir: Optional[Path] = None, _depth: int = 0
) -> Presentation:
    """Parse one document into a bicategory, its classes and pseudofunctors.

    ``base_dir`` anchors pseudofunctor ``source``/``target`` file references;
    without it only ``"self"`` references are accepted.  Law checking is a
    separate step, so the result may still fail `validate_bicat`.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise PresentationError(f"not valid JSON: {e}") from e
    if not isinstance(doc, dict):
        _fail("document", "expected a JSON object")
    name = doc.get("name", "")
    if not isinstance(name, str):
        _fail("name", "expected a string")
    bicat = _parse_bicat(doc, name)
    classes = _parse_classes(doc, bicat)

    psfuns: dict[str, PsFun] = {}
    psfun_refs: dict[str, tuple[str, str]] = {}
    ref_docs: dict[str, Presentation] = {}
    raw_psfuns = doc.get("psfuns", [])
    if not isinstance(raw_psfuns, list):
        _fail("psfuns", "expected a list of blocks")
    if _depth > 2 and raw_psfuns:
        _fail("psfuns", "document reference chain too deep")

    def resolve(ref: str, loc: str) -> FinBicat:
        if ref == "self":
            return bicat
        if base_dir is None:
            _fail(loc, "document reference requires a file location")
        if ref not in ref_docs:
            path = (base_dir / ref).resolve()
            if not path.is_file():
                _fail(loc, f"referenced document {ref!r} not found")
            ref_docs[ref] = parse_presentation(
                path.read_text(encoding="utf-8"),
                base_dir=path.parent,
                _depth=_depth + 1,
            )
        return ref_docs[ref].bicat

    for i, block in enumerate(raw_psfuns):
        loc = f"psfuns[{i}]"
        if not isinstance(block, dict):
            _fail(loc, "expected an object")
        pname = _want(block, "name", str, loc)
        if pname in psfuns:
            _fail(f"{loc}.name", f"duplicate pseudofunctor {pname!r}")
        sref = block.get("source", "self")
        tref = block.get("target", "self")
        if not isinstance(sref, str) or not isinstance(tref, str):
            _fail(loc, "source and target must be strings")
        source = resolve(sref, f"{loc}.source")
        target = resolve(tref, f"{loc}.target")
        F = PsFun(
            source=source,
            target=target,
            f0=_psfun_table(block, "f0", 1, loc),
            f1=_psfun_table(block, "f1", 1, loc),
            f2=_psfun_table(block, "f2", 1, loc),
            psi=_psfun_table(block, "psi", 2, loc),
            sigma=_psfun_table(block, "sigma", 1, loc),
            name=pname,
        )
        _check_psfun_block(loc, F)
        psfuns[pname] = F
        psfun_refs[pname] = (sref, tref)

    return Presentation(bicat, classes, psfuns, name, psfun_refs, ref_docs)


def load_document(path: str | Path) -> Presentation:
    """Parse the file at ``path``, resolving references next to it."""
    p = Path(path)
    if not p.is_file():
        raise PresentationError(f"document {str(p)!r} not found")
    return parse_presentation(p.read_text(encoding="utf-8"), base_dir=p.parent)


def export_presentation(pres: Presentation) -> str:
    """Serialize back to document text; parsing the result round-trips."""
    B = pres.bicat
    doc: dict = {
        "name": pres.name or B.name,
        "objects": list(B.objects),
        "one_cells": [[c.id, c.src, c.tgt] for c in B.one_cells],
        "two_cells": [[t.id, t.src, t.tgt] for t in B.two_cells],
        "id1": [[x, B.id1[x]] for x in B.objects],
        "id2": [[c.id, B.id2[c.id]] for c in B.one_cells],
        "hcomp1": [[g, f, v] for (g, f), v in _sorted2(B, B.hcomp1, B.pos1)],
        "vcomp": [[b, a, v] for (b, a), v in _sorted2(B, B.vcomp, B.pos2)],
        "whisk_left": [
            [g, a, v]
            for (g, a), v in sorted(
                B.whisk_left.items(), key=lambda kv: (B.pos1(kv[0][0]), B.pos2(kv[0][1]))
            )
        ],
        "whisk_right": [
            [b, f, v]
            for (b, f), v in sorted(
                B.whisk_right.items(), key=lambda kv: (B.pos2(kv[0][0]), B.pos1(kv[0][1]))
            )
        ],
        "assoc": [
            [h, g, f, v]
            for (h, g, f), v in sorted(
                B.assoc.items(),
                key=lambda kv: (B.pos1(kv[0][0]), B.pos1(kv[0][1]), B.pos1(kv[0][2])),
            )
        ],
        "runit": [[f.id, B.runit[f.id]] for f in B.one_cells],
        "lunit": [[f.id, B.lunit[f.id]] for f in B.one_cells],
        "strict": B.strict,
    }
    if pres.classes:
        doc["classes"] = {
            n: sorted(w.members, key=B.pos1) for n, w in pres.classes.items()
        }
    if pres.psfuns:
        blocks = []
        for pname, F in pres.psfuns.items():
            sref, tref = pres.psfun_refs.get(pname, ("self", "self"))
            src, tgt = F.source, F.target
            blocks.append(
                {
                    "name": pname,
                    "source": sref,
                    "target": tref,
                    "f0": [[x, F.f0[x]] for x in src.objects],
                    "f1": [[c.id, F.f1[c.id]] for c in src.one_cells],
                    "f2": [[t.id, F.f2[t.id]] for t in src.two_cells],
                    "psi": [
                        [g, f, v]
                        for (g, f), v in sorted(
                            F.psi.items(),
                            key=lambda kv: (src.pos1(kv[0][0]), src.pos1(kv[0][1])),
                        )
                    ],
                    "sigma": [[x, F.sigma[x]] for x in src.objects],
                }
            )
        doc["psfuns"] = blocks
    return json.dumps(doc, indent=2) + "\n"


def _sorted2(B: FinBicat, table: dict, pos) -> list:
    return sorted(table.items(), key=lambda kv: (pos(kv[0][0]), pos(kv[0][1])))
