"""Regenerate the fixture documents from the in-code builders.

Writes identical copies into ``fixtures/`` (for command-line examples) and
``src/bicfrac/fixtures/`` (shipped with the package so ``bicfrac demo``
works from any directory).  Run from the repository root:

    python3 scripts/gen_fixtures.py
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from bicfrac.builders import (  # noqa: E402
    appendix_toy,
    arrow2,
    collapse_loop,
    discrete2,
    iso2,
    iso2_classes,
    point_into_discrete2,
    toy_classes,
    toyq,
    toyq_classes,
    trivial_one,
)
from bicfrac.presentation import Presentation, export_presentation  # noqa: E402
from bicfrac.psfun import identity_psfun  # noqa: E402
from bicfrac.wclass import WClass  # noqa: E402


def catalog() -> dict[str, Presentation]:
    toy = appendix_toy()
    loopy = appendix_toy(loop_square="loop")
    q = toyq()
    pt = trivial_one()
    d2 = discrete2()
    i2 = iso2()

    docs = {
        "appx-toy": Presentation(
            toy, toy_classes(toy), {"identity": identity_psfun(toy)}, "appx-toy",
            {"identity": ("self", "self")},
        ),
        "appx-toy-loopy": Presentation(
            loopy, toy_classes(loopy), {"identity": identity_psfun(loopy)},
            "appx-toy-loopy", {"identity": ("self", "self")},
        ),
        "toyq": Presentation(q, toyq_classes(q), {}, "toyq"),
        "iso2": Presentation(
            i2, iso2_classes(i2), {"identity": identity_psfun(i2)}, "iso2",
            {"identity": ("self", "self")},
        ),
        "arrow2": Presentation(
            arrow2(), {"W": WClass.of(arrow2(), ["idX", "idY"], "W")}, {}, "arrow2",
        ),
        "discrete2": Presentation(
            d2, {"W": WClass.of(d2, ["idX", "idY"], "W")}, {}, "discrete2",
        ),
        "collapse-loop": Presentation(
            toy, toy_classes(toy), {"collapse": collapse_loop(toy, q)},
            "collapse-loop", {"collapse": ("self", "toyq.json")},
        ),
        "point-into-discrete2": Presentation(
            pt, {"W": WClass.of(pt, ["idpt"], "W")},
            {"point": point_into_discrete2(pt, d2)},
            "point-into-discrete2", {"point": ("self", "discrete2.json")},
        ),
    }
    return docs


def main() -> None:
    targets = [ROOT / "fixtures", ROOT / "src" / "bicfrac" / "fixtures"]
    for d in targets:
        d.mkdir(parents=True, exist_ok=True)
    for name, pres in catalog().items():
        text = export_presentation(pres)
        for d in targets:
            (d / f"{name}.json").write_text(text, encoding="utf-8")
        print(f"wrote {name}.json ({len(text)} bytes)")


if __name__ == "__main__":
    main()
