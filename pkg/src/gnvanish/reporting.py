"""Report emission: JSON, CSV, SVG diagrams, and matplotlib figures.

Everything written here is byte-stable for a fixed (config, seed,
version): no timestamps, sorted keys, repr-exact float formatting, and a
pinned figure style.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .exponents.regions import RegionPolyline  # noqa: E402

_FIG_METADATA = {"Software": "gnvanish"}


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if hasattr(o, "to_dict"):
        return o.to_dict()
    raise TypeError(f"not JSON-serializable: {type(o)!r}")


def write_json(path: str | Path, obj) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True,
                                     default=_default) + "\n")


def _cell(v) -> str:
    if isinstance(v, float):
        return repr(v)
    if v is None:
        return ""
    return str(v)


def write_csv(path: str | Path, header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)]
    lines += [",".join(_cell(v) for v in row) for row in rows]
    Path(path).write_text("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Slope-fit figures.
# ---------------------------------------------------------------------------

def render_slope_figure(report, path: str | Path, title: str) -> None:
    fig, ax = plt.subplots(figsize=(5.0, 3.6), dpi=120)
    xs, ys = report.abscissae, report.ordinates
    ax.plot(xs, ys, "o", color="#1f6fb4", label="measured")
    if len(xs) >= 2:
        x0, x1 = min(xs), max(xs)
        mid_x = sum(xs) / len(xs)
        mid_y = sum(ys) / len(ys)
        ax.plot([x0, x1],
                [mid_y + report.fitted_slope * (x0 - mid_x),
                 mid_y + report.fitted_slope * (x1 - mid_x)],
                "-", color="#1f6fb4",
                label=f"fit slope {report.fitted_slope:.4f}")
        ax.plot([x0, x1],
                [mid_y + report.predicted_slope * (x0 - mid_x),
                 mid_y + report.predicted_slope * (x1 - mid_x)],
                "--", color="#c23b22",
                label=f"predicted {report.predicted_slope:.4f}")
    ax.set_xlabel("log2 scale")
    ax.set_ylabel("log2 value")
    ax.set_title(f"{title} [{report.verdict}]", fontsize=10)
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, metadata=_FIG_METADATA)
    plt.close(fig)


# ---------------------------------------------------------------------------
# Riesz-diagram SVG (hand-rolled SVG 1.1 so vertices can carry exact
# rational coordinates as attributes; the renderer never re-derives them).
# ---------------------------------------------------------------------------

_KIND_STYLE = {
    "ridge": 'stroke="#333333" stroke-width="2"',
    "boundary": 'stroke="#1f6fb4" stroke-width="2.5"',
    "strong": 'stroke="#2a9d2a" stroke-width="3"',
    "weak": 'stroke="#2a9d2a" stroke-width="3" stroke-dasharray="8,6"',
    "exceptional": 'stroke="#d62718" stroke-width="4"',
}

_SIZE, _MARGIN = 640, 70


def _px(x: Fraction | float) -> float:
    return _MARGIN + float(x) * (_SIZE - 2 * _MARGIN)


def _py(y: Fraction | float) -> float:
    return _SIZE - _MARGIN - float(y) * (_SIZE - 2 * _MARGIN)


def render_region_svg(polylines: list[RegionPolyline], path: str | Path,
                      title: str = "", xlabel: str = "1/p",
                      ylabel: str = "1/q") -> None:
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_SIZE}" height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<title>{title}</title>',
        f'<rect x="0" y="0" width="{_SIZE}" height="{_SIZE}" fill="white"/>',
        # axes and the unit square with its diagonal
        f'<line x1="{_px(0)}" y1="{_py(0)}" x2="{_px(1.05)}" y2="{_py(0)}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{_px(0)}" y1="{_py(0)}" x2="{_px(0)}" y2="{_py(1.05)}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{_px(0)}" y1="{_py(0)}" x2="{_px(1)}" y2="{_py(1)}" '
        'stroke="#999999" stroke-width="1"/>',
        f'<line x1="{_px(1)}" y1="{_py(0)}" x2="{_px(1)}" y2="{_py(1)}" '
        'stroke="#999999" stroke-width="1"/>',
        f'<text x="{_px(1.05) + 6}" y="{_py(0) + 4}" font-size="15">{xlabel}</text>',
        f'<text x="{_px(0) - 10}" y="{_py(1.05) - 8}" font-size="15">{ylabel}</text>',
        f'<text x="{_px(1) - 4}" y="{_py(0) + 18}" font-size="13">1</text>',
        f'<text x="{_px(0) - 16}" y="{_py(1) + 4}" font-size="13">1</text>',
    ]
    vertices_seen = set()
    for poly in polylines:
        style = _KIND_STYLE.get(poly.kind, _KIND_STYLE["boundary"])
        pts = " ".join(f"{_px(x):.2f},{_py(y):.2f}" for x, y in poly.vertices)
        parts.append(f'<polyline fill="none" {style} points="{pts}">'
                     f'<desc>{poly.label}</desc></polyline>')
        for (x, y) in poly.vertices:
            if (x, y) in vertices_seen or poly.kind == "boundary":
                continue
            vertices_seen.add((x, y))
            parts.append(
                f'<circle cx="{_px(x):.2f}" cy="{_py(y):.2f}" r="3.5" '
                f'fill="#222222" data-x="{x}" data-y="{y}"/>')
    meta = json.dumps([p.to_dict() for p in polylines], sort_keys=True)
    parts.append(f"<metadata>{meta}</metadata>")
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n")
