"""Reference values for the worked cuboids, as originally printed.

Some printed values are wrong; they are kept verbatim here so reports can
flag the discrepancy instead of silently adopting either number.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class AreaItem:
    key: str
    squares: tuple[int, int, int]  # signed (a^2, b^2, d^2)
    s1_16: int
    s2_16: int
    g2: int
    elements: str  # element listing as printed


# Cuboids on the diagonal 697 from (9,40,41) x (8,15,17), then two on 1105.
AREA_ITEMS = (
    AreaItem("g697-1", (104 ** 2, 672 ** 2, 153 ** 2), 62834616576, -173175767905, 697 ** 2,
             "a=104, d=153, b=672, c=680, e=185, f^2=474993, g=697"),
    AreaItem("g697-2", (328 ** 2, 171200, 455 ** 2), 304534553600, 68524169119, 697 ** 2,
             "a=328, b^2=171200, d=455, e=615, c=528, f^2=314609, g=697"),
    # a^2 is printed without its sign; g^2 = 697^2 forces a^2 = -344000
    AreaItem("g697-3", (-344000, 672 ** 2, 615 ** 2), -458616750400, -694626134881, 697 ** 2,
             "a^2=344000, b=672, d=615, c^2=107584, e=185, f^2=829809, g=697"),
    AreaItem("g697-4", (-183616, 680 ** 2, 455 ** 2), -108755123200, -344765507681, 697 ** 2,
             "a^2=-183616, b=680, d=455, c=528, e=153, f^2=669425, g=697"),
    AreaItem("g697-5", (320 ** 2, 600 ** 2, 135 ** 2), 181164960000, -49835430625, 480625,
             "a=320, b=600, d=135, c=680, e^2=120625, g^2=480625"),
    AreaItem("g1105-1", (520 ** 2, 576 ** 2, 618849), 1849472983296, 358570932671, 1105 ** 2,
             "a=520, d^2=618849, b=576, c=776, e=943, f=975, g=1105"),
    AreaItem("g1105-2", (448 ** 2, 264 ** 2, 975 ** 2), 1084149063936, -406752986689, 1105 ** 2,
             "a=448, d=975, b=264, c=520, e=1073, f^2=1020321, g=1105"),
)

# remaining 697-family boxes, given only by edges and irrational diagonals
PRODUCT_BOXES = {
    "g697-6": ((600, 320, 72), 467584),
    "g697-7": ((72, 135, 320), 125809),
    "g697-8": ((72, 135, 600), 383409),
}


@dataclass(frozen=True)
class PrintedPoint:
    s: int
    N: int
    x: int
    y_sq: int
    y_text: str


# first-family curves for edges (a, b, d) = (104, 672, 153)
FIRST_CURVES_104 = (
    PrintedPoint(1, -28305, 13 ** 2, (2 * 26 * 4) ** 2, "2*26*4"),
    PrintedPoint(-1, 28817, 4 ** 2, (26 ** 2) ** 2, "26^2"),
    PrintedPoint(-1, 456992, 2 ** 2, (2 * 26 ** 2) ** 2, "2*26^2"),
    PrintedPoint(1, -456960, 26 ** 2, (4 * 26) ** 2, "4*26"),
)

# first-family point for (a, b, d) = (240, 44, 117); y^2 as printed
FIRST_CURVE_240 = PrintedPoint(-1, 42489, 192, 108000, "y^2 = 108000")

PRINTED_FIRST_CURVES = {
    (104, 672, 153): FIRST_CURVES_104,
    (240, 44, 117): (FIRST_CURVE_240,),
}


@dataclass(frozen=True)
class SecondCurveValues:
    a1: Fraction
    ch: Fraction
    sh_sq: Fraction  # printed as 29.25
    m_sq: Fraction  # printed as 0.5
    model_N: int
    model_x: int
    model_y: int


SECOND_CURVE_240 = SecondCurveValues(Fraction(1, 11), Fraction(11, 2), Fraction(117, 4), Fraction(1, 2),
                                     -14157, 121, 242)

PRINTED_SECOND_CURVES = {(240, 44, 117): SECOND_CURVE_240}

EULER_N2_FACES = {(240, 44): 244, (240, 117): 267, (44, 117): 125}

PRODUCT_LEGS_697 = {(455, 528), (185, 672), (153, 680), (328, 615)}


def find_area_item(a2: int, b2: int, d2: int) -> Optional[AreaItem]:
    key = sorted((a2, b2, d2))
    for item in AREA_ITEMS:
        if sorted(item.squares) == key:
            return item
    return None
