"""Deterministic SVG scatter plots of box classifications, plus CSV sidecars.

Fixed layout: one lattice unit = 20 px, origin at the bottom left, pure
gaps as filled red circles (#d62728), semigroup members as filled blue
circles (#1f77b4), remaining gaps as unfilled circles.  Identical inputs
produce byte-identical output (integer geometry, no timestamps).
"""

from __future__ import annotations

STEP = 20
RADIUS = 6
COLOR_PURE = "#d62728"
COLOR_SEMIGROUP = "#1f77b4"
COLOR_GAP_STROKE = "#666666"

_MARGIN_LEFT = 50
_MARGIN_RIGHT = 30
_MARGIN_TOP = 45
_MARGIN_BOTTOM = 50


def box_csv(points: list[tuple[int, int, str]]) -> str:
    """CSV body 't1,t2,class' for classified lattice points."""
    lines = ["t1,t2,class"]
    lines.extend(f"{t1},{t2},{cls}" for t1, t2, cls in points)
    return "\n".join(lines) + "\n"


def box_svg(points: list[tuple[int, int, str]], t1_max: int, t2_max: int) -> str:
    """SVG scatter of classified lattice points over [0, t1_max] x [0, t2_max]."""
    width = _MARGIN_LEFT + t1_max * STEP + _MARGIN_RIGHT
    height = _MARGIN_TOP + t2_max * STEP + _MARGIN_BOTTOM

    def x(t1: int) -> int:
        return _MARGIN_LEFT + t1 * STEP

    def y(t2: int) -> int:
        return _MARGIN_TOP + (t2_max - t2) * STEP

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]

    axis = 'stroke="black" stroke-width="1"'
    parts.append(f'<line x1="{x(0)}" y1="{y(0)}" x2="{x(t1_max)}" y2="{y(0)}" {axis}/>')
    parts.append(f'<line x1="{x(0)}" y1="{y(0)}" x2="{x(0)}" y2="{y(t2_max)}" {axis}/>')
    for t1 in range(0, t1_max + 1, 5):
        parts.append(
            f'<line x1="{x(t1)}" y1="{y(0)}" x2="{x(t1)}" y2="{y(0) + 4}" {axis}/>'
        )
        parts.append(
            f'<text x="{x(t1)}" y="{y(0) + 18}" font-size="11" '
            f'text-anchor="middle">{t1}</text>'
        )
    for t2 in range(0, t2_max + 1, 5):
        parts.append(
            f'<line x1="{x(0) - 4}" y1="{y(t2)}" x2="{x(0)}" y2="{y(t2)}" {axis}/>'
        )
        parts.append(
            f'<text x="{x(0) - 8}" y="{y(t2) + 4}" font-size="11" '
            f'text-anchor="end">{t2}</text>'
        )
    parts.append(
        f'<text x="{x(t1_max) // 2 + _MARGIN_LEFT // 2}" y="{height - 10}" '
        f'font-size="13" text-anchor="middle">t₁</text>'
    )
    parts.append(
        f'<text x="14" y="{(y(t2_max) + y(0)) // 2}" font-size="13" '
        f'text-anchor="middle">t₂</text>'
    )

    legend = [
        (COLOR_PURE, COLOR_PURE, "pure gap"),
        (COLOR_SEMIGROUP, COLOR_SEMIGROUP, "semigroup"),
        ("none", COLOR_GAP_STROKE, "gap"),
    ]
    lx = _MARGIN_LEFT
    for fill, stroke, label in legend:
        parts.append(
            f'<circle cx="{lx}" cy="18" r="{RADIUS}" fill="{fill}" '
            f'stroke="{stroke}" stroke-width="1"/>'
        )
        parts.append(f'<text x="{lx + 12}" y="22" font-size="12">{label}</text>')
        lx += 12 * len(label) + 40

    for t1, t2, cls in points:
        if cls == "pure_gap":
            style = f'fill="{COLOR_PURE}" stroke="{COLOR_PURE}"'
        elif cls == "semigroup":
            style = f'fill="{COLOR_SEMIGROUP}" stroke="{COLOR_SEMIGROUP}"'
        else:
            style = f'fill="none" stroke="{COLOR_GAP_STROKE}"'
        parts.append(
            f'<circle cx="{x(t1)}" cy="{y(t2)}" r="{RADIUS}" {style} stroke-width="1"/>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
