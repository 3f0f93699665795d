"""Hand-rolled SVG plots of real slices.

Everything here draws *real* slices of complex surfaces and says so in
the figure label: a fiber that is smooth and connected over C can look
empty or disconnected over R, and the double points of a split fiber
may have no real representative at all.  The rendering is deterministic
(fixed sampling, fixed float formatting), so plot files are diffable.
"""

import math

from ..hitchin import hitchin_quartic

WIDTH, HEIGHT = 480, 360
LEFT, RIGHT, TOP, BOTTOM = 42, 16, 40, 28


def _sx(x, x0, x1):
    return LEFT + (x - x0) / (x1 - x0) * (WIDTH - LEFT - RIGHT)


def _sy(y, y0, y1):
    return HEIGHT - BOTTOM - (y - y0) / (y1 - y0) * (HEIGHT - TOP - BOTTOM)


def _polyline(points, color):
    if len(points) < 2:
        return ""
    text = " ".join("%.2f,%.2f" % p for p in points)
    return ('<polyline fill="none" stroke="%s" stroke-width="1.5" '
            'points="%s"/>\n' % (color, text))


def _frame(title, subtitle, x0, x1, y0, y1, xlabel, ylabel):
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" '
             'height="%d" viewBox="0 0 %d %d">\n'
             % (WIDTH, HEIGHT, WIDTH, HEIGHT),
             '<rect width="%d" height="%d" fill="white"/>\n'
             % (WIDTH, HEIGHT),
             '<text x="%d" y="16" font-size="12" font-family="monospace">'
             '%s</text>\n' % (LEFT, title),
             '<text x="%d" y="30" font-size="9" font-family="monospace" '
             'fill="#555">%s</text>\n' % (LEFT, subtitle)]
    if x0 < 0 < x1:
        x_axis = _sx(0, x0, x1)
        parts.append('<line x1="%.2f" y1="%d" x2="%.2f" y2="%d" '
                     'stroke="#bbb"/>\n'
                     % (x_axis, TOP, x_axis, HEIGHT - BOTTOM))
    if y0 < 0 < y1:
        y_axis = _sy(0, y0, y1)
        parts.append('<line x1="%d" y1="%.2f" x2="%d" y2="%.2f" '
                     'stroke="#bbb"/>\n'
                     % (LEFT, y_axis, WIDTH - RIGHT, y_axis))
    parts.append('<text x="%d" y="%d" font-size="10" '
                 'font-family="monospace">%s</text>\n'
                 % (WIDTH - RIGHT - 8 * len(xlabel),
                    HEIGHT - BOTTOM + 16, xlabel))
    parts.append('<text x="%d" y="%d" font-size="10" '
                 'font-family="monospace">%s</text>\n'
                 % (6, TOP + 10, ylabel))
    return parts


def _real(value):
    if isinstance(value, complex):
        return value.real
    return float(value)


def fiber_slice_svg(curve, w):
    """The real (u, rho) points of rho^2 = g(u, w) for one base value."""
    wr = _real(w)
    g = hitchin_quartic(curve, wr if isinstance(w, complex) else w)
    x0, x1 = -3.0, 3.0
    y0, y1 = -3.2, 3.2
    steps = 481
    upper = []
    lower = []
    segments = []

    def flush():
        if upper:
            segments.append(list(upper))
            segments.append(list(lower))
            upper.clear()
            lower.clear()

    for i in range(steps):
        u = x0 + (x1 - x0) * i / (steps - 1)
        val = _real(g(u))
        if val < 0:
            flush()
            continue
        rho = val ** 0.5
        if rho > y1:
            flush()
            continue
        upper.append((_sx(u, x0, x1), _sy(rho, y0, y1)))
        lower.append((_sx(u, x0, x1), _sy(-rho, y0, y1)))
    flush()

    title = "fiber slice: rho^2 = g(u, w) at w = %s" % (w,)
    subtitle = ("real slice of a complex surface; components and "
                "crossings may live off the real locus")
    parts = _frame(title, subtitle, x0, x1, y0, y1, "u", "rho")
    for seg in segments:
        parts.append(_polyline(seg, "#1f77b4"))
    parts.append("</svg>\n")
    return "".join(parts)


def quadric_slice_svg(curve, w):
    """The real (b1, b2) trace of the improper quadric pencil at w.

    Eliminating b3 via the unit quadric leaves the conic
    (e1 - e3) b1^2 + (e2 - e3) b2^2 = w - e3 inside the disk where
    b3^2 = 1 - b1^2 - b2^2 stays nonnegative.
    """
    wr = _real(w)
    e = [_real(r) for r in curve.roots]
    x0, x1 = -1.25, 1.25
    y0, y1 = -1.25, 1.25
    parts = _frame(
        "improper quadric slice at w = %s" % (w,),
        "real (b1, b2) slice of a complex quadric intersection; "
        "b3^2 = 1 - b1^2 - b2^2",
        x0, x1, y0, y1, "b1", "b2")

    circle = []
    steps = 241
    for i in range(steps):
        t = 2 * math.pi * i / (steps - 1)
        circle.append((_sx(math.cos(t), x0, x1),
                       _sy(math.sin(t), y0, y1)))
    parts.append('<polyline fill="none" stroke="#ccc" stroke-width="1" '
                 'stroke-dasharray="3,3" points="%s"/>\n'
                 % " ".join("%.2f,%.2f" % p for p in circle))

    denom = e[1] - e[2]
    upper = []
    lower = []
    segments = []

    def flush():
        if upper:
            segments.append(list(upper))
            segments.append(list(lower))
            upper.clear()
            lower.clear()

    for i in range(801):
        b1 = -1.0 + 2.0 * i / 800
        b2sq = (wr - e[2] - (e[0] - e[2]) * b1 * b1) / denom
        if b2sq < 0 or b2sq > 1 - b1 * b1 + 1e-12:
            flush()
            continue
        b2 = b2sq ** 0.5
        upper.append((_sx(b1, x0, x1), _sy(b2, y0, y1)))
        lower.append((_sx(b1, x0, x1), _sy(-b2, y0, y1)))
    flush()
    for seg in segments:
        parts.append(_polyline(seg, "#d62728"))
    parts.append("</svg>\n")
    return "".join(parts)
