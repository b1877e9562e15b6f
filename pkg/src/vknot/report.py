"""Report assembly for the command-line front end.

Builds a JSON-ready dictionary of selected invariants for one diagram,
renders it as text or canonical (byte-deterministic) JSON, and can plot
Betti tables as heatmap images.  Timing metadata is opt-in because it
breaks byte-for-byte reproducibility.
"""

from __future__ import annotations

import json
import time

from .arrow import flat_arrow, w_poly
from .bracket import DEFAULT_MAX_CROSSINGS, f_poly, jones
from .gauss import CLOSED, GaussCode
from .homology import (
    DEFAULT_MAX_HOMOLOGY_CROSSINGS,
    arrow_complex,
    betti,
    khovanov_complex,
)
from .parity import normalized_parity_bracket
from .poly import MultiPoly

ODD_WRITHE = "odd-writhe"
F = "f"
JONES = "jones"
ARROW = "arrow"
FLAT_ARROW = "flat-arrow"
PARITY_BRACKET = "parity-bracket"
KHOVANOV = "khovanov"
ARROW_HOMOLOGY = "arrow-homology"

ALL_INVARIANTS = (
    ODD_WRITHE,
    F,
    JONES,
    ARROW,
    FLAT_ARROW,
    PARITY_BRACKET,
    KHOVANOV,
    ARROW_HOMOLOGY,
)


def default_selection(code: GaussCode) -> tuple[str, ...]:
    """Cheap, flavor-appropriate invariants used when none are requested."""
    if code.is_flat:
        return (ODD_WRITHE, FLAT_ARROW)
    sel = [ODD_WRITHE, F, JONES, ARROW, FLAT_ARROW]
    if code.shape == CLOSED:
        sel.append(PARITY_BRACKET)
    return tuple(sel)


def _poly_entry(p: MultiPoly) -> dict:
    return {"text": p.text(), "terms": p.to_json()}


def _betti_entry(table: dict) -> dict:
    rows = [list(k) + [v] for k, v in sorted(table.items())]
    text = " ".join(
        "(" + ",".join(str(x) for x in row[:-1]) + f"):{row[-1]}" for row in rows
    ) or "0"
    return {"betti": rows, "text": text}


def compute(
    code: GaussCode,
    selection: tuple[str, ...],
    z_mode: bool = False,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    max_homology_crossings: int = DEFAULT_MAX_HOMOLOGY_CROSSINGS,
) -> dict[str, dict]:
    """Compute each selected invariant; raises on flavor/size violations."""
    out: dict[str, dict] = {}
    for name in selection:
        if name == ODD_WRITHE:
            # flat codes: the odd writhe of any lift (chirality-determined
            # on odd crossings, hence lift-independent)
            j = (code.lift() if code.is_flat else code).odd_writhe()
            out[name] = {"value": j, "text": str(j)}
        elif name == F:
            out[name] = _poly_entry(f_poly(code, max_crossings))
        elif name == JONES:
            v = jones(code, max_crossings)
            out[name] = (
                {"text": v.text(), "terms": v.to_json()}
                if v is not None
                else {"text": None, "terms": None}
            )
        elif name == ARROW:
            out[name] = _poly_entry(w_poly(code, max_crossings))
        elif name == FLAT_ARROW:
            out[name] = _poly_entry(flat_arrow(code, max_crossings))
        elif name == PARITY_BRACKET:
            pb = normalized_parity_bracket(code, z_mode=z_mode, max_crossings=max_crossings)
            out[name] = {"text": pb.text(), "terms": pb.to_json(), "z_mode": z_mode}
        elif name == KHOVANOV:
            out[name] = _betti_entry(betti(khovanov_complex(code, max_homology_crossings)))
        elif name == ARROW_HOMOLOGY:
            out[name] = _betti_entry(betti(arrow_complex(code, max_homology_crossings)))
        else:
            raise ValueError(f"unknown invariant {name!r}")
    return out


def build_report(
    code: GaussCode,
    selection: tuple[str, ...],
    z_mode: bool = False,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    max_homology_crossings: int = DEFAULT_MAX_HOMOLOGY_CROSSINGS,
    timing: bool = False,
) -> dict:
    started = time.perf_counter()
    results = compute(code, selection, z_mode, max_crossings, max_homology_crossings)
    report = {
        "input": code.serialize(),
        "shape": code.shape,
        "crossings": code.crossings,
        "flat": code.is_flat,
        "invariants": results,
    }
    if timing:
        report["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    return report


def render_text(report: dict) -> str:
    lines = [f"code: {report['input']}"]
    for name in ALL_INVARIANTS:
        if name not in report["invariants"]:
            continue
        entry = report["invariants"][name]
        text = entry["text"]
        lines.append(f"{name}: {text if text is not None else 'none (no pure t-form)'}")
    if "timing" in report:
        lines.append(f"time: {report['timing']['seconds']}s")
    return "\n".join(lines) + "\n"


def dumps(report: dict) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(report, sort_keys=True, separators=(",", ": "), indent=2) + "\n"


def render_figures(report: dict, directory) -> list[str]:
    """Render each Betti table in the report as a heatmap image file.

    Trigraded tables are collapsed over the third grading for display.
    Returns the written file paths.
    """
    import pathlib

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    directory = pathlib.Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written: list[str] = []
    for name in (KHOVANOV, ARROW_HOMOLOGY):
        entry = report["invariants"].get(name)
        if entry is None:
            continue
        cells: dict[tuple[int, int], int] = {}
        for row in entry["betti"]:
            i, j, dim = row[0], row[1], row[-1]
            cells[(i, j)] = cells.get((i, j), 0) + dim
        fig, ax = plt.subplots(figsize=(4, 4))
        if cells:
            i_vals = sorted({i for i, _ in cells})
            j_vals = sorted({j for _, j in cells})
            grid = [
                [cells.get((i, j), 0) for i in i_vals] for j in reversed(j_vals)
            ]
            im = ax.imshow(grid, cmap="viridis", aspect="auto")
            ax.set_xticks(range(len(i_vals)), [str(i) for i in i_vals])
            ax.set_yticks(range(len(j_vals)), [str(j) for j in reversed(j_vals)])
            fig.colorbar(im, ax=ax, shrink=0.8)
        ax.set_xlabel("homological grading i")
        ax.set_ylabel("quantum grading j")
        ax.set_title(name)
        path = directory / f"{name}.png"
        fig.savefig(path, dpi=100, bbox_inches="tight")
        plt.close(fig)
        written.append(str(path))
    return written
