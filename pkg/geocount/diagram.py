"""
SVG drawings of the diagram of a rank 2 space.

The document shows the square [-w, w]^2 (pi-units). The hyperplanes alpha = k are drawn
for every positive root and every integer k with k^2 <= w^2 <alpha, alpha>, the root
hyperplanes (k = 0) thicker. Dots mark the unit lattice, larger dots the fundamental lattice.
Elements are written in a fixed order, so equal input gives byte-identical output.
"""
import math
from fractions import Fraction
from typing import Sequence

from . import errors
from . import exact
from .lattice import LatticeBasis, fundamental_lattice

ns_svg = 'http://www.w3.org/2000/svg'

ROOT_STROKE_WIDTH = 2
DIAGRAM_STROKE_WIDTH = 1
LATTICE_DOT_RADIUS = 2
FUNDAMENTAL_DOT_RADIUS = 4
MARK_SIZE = 6


def _number(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{float(value):.4f}".rstrip("0")


def props_repr(d: dict) -> str:
    return ' '.join(f'{k.replace("_", "-")}="{v}"' for k, v in d.items())


def _element(tag: str, **props) -> str:
    return f'<{tag} {props_repr(props)}/>'


def _segment(covector: Sequence[Fraction], level: int, window: Fraction):
    """Return the two end points of {a . h = level} inside the square, None if it only touches it."""
    a, b = covector
    points = set()
    for x in (-window, window):
        if b != 0:
            y = (level - a * x) / b
            if -window <= y <= window:
                points.add((x, y))
    for y in (-window, window):
        if a != 0:
            x = (level - b * y) / a
            if -window <= x <= window:
                points.add((x, y))
    if len(points) < 2:
        return None
    ordered = sorted(points)
    return ordered[0], ordered[-1]


def _points_in_square(gamma: LatticeBasis, window: Fraction) -> list:
    identity = exact.RationalMatrix.identity(2)
    found = exact.enumerate_lattice_points_in_ball(gamma.basis, identity, exact.zero_vector(2), 2 * window ** 2)
    points = [gamma.vector(coordinates) for coordinates in found]
    return sorted(point for point in points if all(-window <= entry <= window for entry in point))


def emit_svg(space, window, marks: Sequence[Sequence] = (), pixels_per_unit: int = 100) -> str:
    """Return the SVG document of the diagram of a rank 2 space, marks drawn as crosses."""
    datum = space.datum
    if datum.rank != 2:
        raise RuntimeError(errors.DIAGRAM_RANK_UNSUPPORTED, datum.rank)
    window = exact.to_rational(window)
    scale = Fraction(pixels_per_unit)
    size = 2 * window * scale

    def x_of(point):
        return _number((point[0] + window) * scale)

    def y_of(point):
        return _number((window - point[1]) * scale)

    body = []
    for index in datum.positive_indices:
        covector = datum.gram.apply(datum.roots[index].covector)
        bound = window ** 2 * exact.norm_squared(datum.roots[index].covector, datum.gram)
        largest = math.isqrt(math.floor(bound)) + 1
        for level in range(-largest, largest + 1):
            if level ** 2 > bound:
                continue
            segment = _segment(covector, level, window)
            if segment is None:
                continue
            start, end = segment
            body.append(_element('line', x1=x_of(start), y1=y_of(start), x2=x_of(end), y2=y_of(end), stroke='black',
                                 stroke_width=ROOT_STROKE_WIDTH if level == 0 else DIAGRAM_STROKE_WIDTH))

    for point in _points_in_square(fundamental_lattice(datum), window):
        body.append(_element('circle', cx=x_of(point), cy=y_of(point), r=FUNDAMENTAL_DOT_RADIUS, fill='black'))
    for point in _points_in_square(space.gamma, window):
        body.append(_element('circle', cx=x_of(point), cy=y_of(point), r=LATTICE_DOT_RADIUS, fill='grey'))

    for mark in marks:
        mark = exact.vector(mark)
        if len(mark) != 2:
            raise RuntimeError(errors.INVALID_DIMENSION_MISMATCH, 2, len(mark))
        x, y = (mark[0] + window) * scale, (window - mark[1]) * scale
        path = (f"M {_number(x - MARK_SIZE)} {_number(y - MARK_SIZE)} L {_number(x + MARK_SIZE)} {_number(y + MARK_SIZE)} "
                f"M {_number(x - MARK_SIZE)} {_number(y + MARK_SIZE)} L {_number(x + MARK_SIZE)} {_number(y - MARK_SIZE)}")
        body.append(_element('path', d=path, stroke='red', stroke_width=DIAGRAM_STROKE_WIDTH, fill='none'))

    header = f'<svg xmlns="{ns_svg}" version="1.1" width="{_number(size)}" height="{_number(size)}" ' \
             f'viewBox="0 0 {_number(size)} {_number(size)}">'
    return "\n".join([header, f'<rect width="{_number(size)}" height="{_number(size)}" fill="white"/>']
                     + ["  " + line for line in body] + ["</svg>", ""])
