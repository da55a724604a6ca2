"""Frozen census values N(X_k, n), n <= 2, as regression data.

Generated once from the recursion engine and checked in; it pins the output
against accidental edits to the transcribed tables, and is not an
independent derivation.
"""

from curve_census.algebra import DPoly

# fmt: off
SNAPSHOT: dict[tuple[str, int], DPoly] = {
    ("A1", 0): DPoly([3, -6, 3]),  # 3*d^2 - 6*d + 3
    ("A1", 1): DPoly([-3, 3]),  # 3*d - 3
    ("A1", 2): DPoly([1]),  # 1
    ("A2", 0): DPoly([24, -36, 12]),  # 12*d^2 - 36*d + 24
    ("A2", 1): DPoly([-12, 8]),  # 8*d - 12
    ("A2", 2): DPoly([2]),  # 2
    ("A3", 0): DPoly([168, -192, 50]),  # 50*d^2 - 192*d + 168
    ("A3", 1): DPoly([-48, 25]),  # 25*d - 48
    ("A3", 2): DPoly([5]),  # 5
    ("A4", 0): DPoly([900, -840, 180]),  # 180*d^2 - 840*d + 900
    ("A4", 1): DPoly([-168, 72]),  # 72*d - 168
    ("A4", 2): DPoly([12]),  # 12
    ("A5", 0): DPoly([4302, -3420, 630]),  # 630*d^2 - 3420*d + 4302
    ("A5", 1): DPoly([-570, 210]),  # 210*d - 570
    ("A5", 2): DPoly([30]),  # 30
    ("A6", 0): DPoly([19383, -13545, 2212]),  # 2212*d^2 - 13545*d + 19383
    ("A6", 1): DPoly([-1935, 632]),  # 632*d - 1935
    ("A6", 2): DPoly([79]),  # 79
    ("A7", 0): DPoly([84024, -52800, 7812]),  # 7812*d^2 - 52800*d + 84024
    ("A7", 1): DPoly([-6600, 1953]),  # 1953*d - 6600
    ("A7", 2): DPoly([217]),  # 217
    ("D4", 0): DPoly([60, -60, 15]),  # 15*d^2 - 60*d + 60
    ("D4", 1): DPoly([-12, 6]),  # 6*d - 12
    ("D4", 2): DPoly([1]),  # 1
    ("D5", 0): DPoly([456, -396, 84]),  # 84*d^2 - 396*d + 456
    ("D5", 1): DPoly([-66, 28]),  # 28*d - 66
    ("D5", 2): DPoly([4]),  # 4
    ("D6", 0): DPoly([1596, -1218, 224]),  # 224*d^2 - 1218*d + 1596
    ("D6", 1): DPoly([-174, 64]),  # 64*d - 174
    ("D6", 2): DPoly([8]),  # 8
    ("D7", 0): DPoly([6480, -4416, 720]),  # 720*d^2 - 4416*d + 6480
    ("D7", 1): DPoly([-552, 180]),  # 180*d - 552
    ("D7", 2): DPoly([20]),  # 20
    ("E6", 0): DPoly([567, -441, 84]),  # 84*d^2 - 441*d + 567
    ("E6", 1): DPoly([-63, 24]),  # 24*d - 63
    ("E6", 2): DPoly([3]),  # 3
    ("E7", 0): DPoly([2079, -1464, 252]),  # 252*d^2 - 1464*d + 2079
    ("E7", 1): DPoly([-183, 63]),  # 63*d - 183
    ("E7", 2): DPoly([7]),  # 7
}
# fmt: on
