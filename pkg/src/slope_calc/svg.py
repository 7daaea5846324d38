"""Standalone SVG figure of a unit-ball polygon."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from fractions import Fraction

from satellite_mcp.unit_ball import UnitBall

SVG_NS = "http://www.w3.org/2000/svg"
SIZE = 400
MARGIN = 60


def _num(value: Fraction | float) -> str:
    text = f"{float(value):.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def common_denominator(vertices: tuple[tuple[Fraction, Fraction], ...]) -> int:
    return math.lcm(*(Fraction(c).denominator for vertex in vertices for c in vertex))


def polygon_path(vertices: tuple[tuple[Fraction, Fraction], ...]) -> str:
    """Closed SVG path through the vertices, scaled by their common denominator.

    Every coordinate in the path data is an integer.
    """
    denominator = common_denominator(vertices)
    points = [f"{int(x * denominator)} {int(y * denominator)}" for x, y in vertices]
    return "M " + " L ".join(points) + " Z"


def unit_ball_svg(ball: UnitBall, title: str = "unit ball") -> str:
    """Render axes, the polygon and exact vertex labels.

    The polygon group maps plane coordinates to the canvas (y pointing up) and undoes
    the common-denominator scaling of the path data.
    """
    extent = max(max(abs(x), abs(y)) for x, y in ball.vertices)
    scale = Fraction(SIZE // 2 - MARGIN) / extent
    center = SIZE // 2

    svg = ET.Element("svg", xmlns=SVG_NS, width=str(SIZE), height=str(SIZE), viewBox=f"0 0 {SIZE} {SIZE}")
    ET.SubElement(svg, "title").text = f"{title} ({ball.kind.value})"

    axes = ET.SubElement(svg, "g", stroke="#888888", attrib={"stroke-width": "1"})
    ET.SubElement(axes, "line", x1="0", y1=str(center), x2=str(SIZE), y2=str(center))
    ET.SubElement(axes, "line", x1=str(center), y1="0", x2=str(center), y2=str(SIZE))

    path_scale = scale / common_denominator(ball.vertices)
    plane = ET.SubElement(
        svg, "g", transform=f"translate({center} {center}) scale({_num(path_scale)} {_num(-path_scale)})"
    )
    ET.SubElement(
        plane,
        "path",
        d=polygon_path(ball.vertices),
        fill="#4a90d9",
        stroke="#1f4e79",
        attrib={"fill-opacity": "0.3", "stroke-width": "2", "vector-effect": "non-scaling-stroke"},
    )

    labels = ET.SubElement(svg, "g", attrib={"font-family": "monospace", "font-size": "12"})
    for x, y in ball.vertices:
        label = ET.SubElement(
            labels,
            "text",
            x=_num(center + scale * x + (6 if x >= 0 else -6)),
            y=_num(center - scale * y + (-6 if y >= 0 else 14)),
            attrib={"text-anchor": "start" if x >= 0 else "end"},
        )
        label.text = f"({x}, {y})"

    return ET.tostring(svg, encoding="unicode") + "\n"
