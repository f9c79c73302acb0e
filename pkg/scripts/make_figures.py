"""Write the three-variable pictures plus JSON and Betti CSV for each object.

    python3 scripts/make_figures.py --out figures
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from boxres.constructions import ComplexVariant
from boxres.render import render_svg
from boxres.resolution import betti_counts


@dataclass
class FigureConfig:
    out: Path
    max_n: int = 4


def run(cfg: FigureConfig) -> list[Path]:
    cfg.out.mkdir(parents=True, exist_ok=True)
    written = []
    for n in range(2, cfg.max_n + 1):
        for tag in ("power", "pinched", "star", "star-hat"):
            X = ComplexVariant(tag, n).build()
            stem = cfg.out / f"{tag}-n{n}"
            for suffix, text in ((".json", X.to_json()), (".csv", betti_counts(X).to_csv())):
                path = stem.with_suffix(suffix)
                path.write_text(text)
                written.append(path)
            if n == 3:
                path = stem.with_suffix(".svg")
                path.write_text(render_svg(X))
                written.append(path)
    return written


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("figures"))
    ap.add_argument("--max-n", type=int, default=4)
    a = ap.parse_args()
    for path in run(FigureConfig(a.out, a.max_n)):
        print(path)


if __name__ == "__main__":
    main()
