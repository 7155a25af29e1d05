"""SVG rendering of 2-D max-plus scenes: convex hulls, half-spaces,
labelled points with projection arrows, and the generic line shapes
max(a+u, b+v, c) = max(a'+u, b'+v, c').

Regions come from sampling the exact membership predicates on a pixel
grid; every sampled point is classified with the same exact arithmetic the
library uses everywhere, so only the picture is approximate, never the
algebra.  Output bytes are a pure function of the scene and the library
version.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .errors import SchemaError
from .freemod import GeneratingFamily, Vector, act, bot_vector, vec_lres, vjoin
from .jsonio import rational_from_json, scalar_from_json, vector_from_json
from .semiring import RMAX, Scalar, add, bot, fin, meet, unit
from .separate import HalfSpace, convex_projection, halfspace_contains, separate_from_convex

_TAGS = ("+", "-", ".")


@dataclass(frozen=True)
class LineSpec:
    """Signed coefficients of a generic line; tag "+" puts the coefficient on
    the left side of the equation, "-" on the right, "." on both."""

    a: tuple[str, Scalar]
    b: tuple[str, Scalar]
    c: tuple[str, Scalar]


@dataclass
class Scene:
    viewport: tuple[Fraction | int, Fraction | int, Fraction | int, Fraction | int]
    samples: int = 400
    generators: list[Vector] = field(default_factory=list)
    points: list[tuple[str, Vector]] = field(default_factory=list)
    halfspaces: list[HalfSpace] = field(default_factory=list)
    lines: list[LineSpec] = field(default_factory=list)


def _coef_from_json(obj) -> tuple[str, Scalar]:
    if (
        not isinstance(obj, list)
        or len(obj) != 2
        or obj[0] not in _TAGS
    ):
        raise SchemaError(f'line coefficient must be ["+"|"-"|".", scalar], got {obj!r}')
    return obj[0], scalar_from_json(RMAX, obj[1])


def scene_from_json(obj) -> Scene:
    if not isinstance(obj, dict):
        raise SchemaError("scene file must hold a JSON object")
    vp = obj.get("viewport")
    if not isinstance(vp, list) or len(vp) != 4:
        raise SchemaError('scene needs "viewport": [xmin, xmax, ymin, ymax]')
    xmin, xmax, ymin, ymax = (rational_from_json(v) for v in vp)
    if not (xmin < xmax and ymin < ymax):
        raise SchemaError("viewport must be nonempty")
    samples = obj.get("samples_per_axis", 400)
    if not isinstance(samples, int) or samples < 16:
        raise SchemaError("samples_per_axis must be an integer >= 16")
    scene = Scene((xmin, xmax, ymin, ymax), samples)
    for g in obj.get("generators", []):
        scene.generators.append(vector_from_json(RMAX, g, 2))
    for p in obj.get("points", []):
        if not isinstance(p, dict) or "label" not in p or "coords" not in p:
            raise SchemaError('scene points need {"label": ..., "coords": [...]}')
        scene.points.append((str(p["label"]), vector_from_json(RMAX, p["coords"], 2)))
    for h in obj.get("halfspaces", []):
        if not isinstance(h, dict) or not {"x_ref", "y", "nu"} <= set(h):
            raise SchemaError('half-spaces need {"x_ref", "y", "nu"}')
        scene.halfspaces.append(
            HalfSpace(
                vector_from_json(RMAX, h["x_ref"], 2),
                vector_from_json(RMAX, h["y"], 2),
                scalar_from_json(RMAX, h["nu"]),
            )
        )
    for l in obj.get("lines", []):
        if not isinstance(l, dict) or not {"a", "b", "c"} <= set(l):
            raise SchemaError('lines need coefficients "a", "b", "c"')
        scene.lines.append(
            LineSpec(_coef_from_json(l["a"]), _coef_from_json(l["b"]), _coef_from_json(l["c"]))
        )
    return scene


def _hull_member(gens: list[Vector], v: Vector) -> bool:
    """v is a convex combination of gens: the lifted projection fixes (v, e)."""
    if not gens:
        return False
    e = unit(RMAX)
    nu = bot(RMAX)
    y = bot_vector(RMAX, v.dim)
    for g in gens:
        lam = meet(vec_lres(g, v), e)
        nu = add(nu, lam)
        y = vjoin(y, act(g, lam))
    return nu == e and y == v


_NEG_INF = object()


def _line_side(spec: LineSpec, u, v):
    """Sign of lhs - rhs at exact coordinates: -1, 0, or 1."""
    lhs, rhs = _NEG_INF, _NEG_INF
    for (tag, coef), term_arg in ((spec.a, u), (spec.b, v), (spec.c, None)):
        if coef.kind != "fin":
            continue
        term = coef.value if term_arg is None else coef.value + term_arg
        if tag in ("+", "."):
            lhs = term if lhs is _NEG_INF else max(lhs, term)
        if tag in ("-", "."):
            rhs = term if rhs is _NEG_INF else max(rhs, term)
    if lhs is _NEG_INF and rhs is _NEG_INF:
        return 0
    if lhs is _NEG_INF:
        return -1
    if rhs is _NEG_INF:
        return 1
    return (lhs > rhs) - (lhs < rhs)


_W = 640
_MARGIN = 40
_LINE_COLORS = ("#1f4e9c", "#9c1f1f", "#1f7a3c", "#7a1f9c")


def render_scene(scene: Scene) -> tuple[str, dict]:
    """Build the SVG text plus an exact classification of the labelled
    points (hull membership and half-space membership)."""
    xmin, xmax, ymin, ymax = (Fraction(t) for t in scene.viewport)
    n = scene.samples
    span_x, span_y = xmax - xmin, ymax - ymin
    inner = _W - 2 * _MARGIN

    def px(u: Fraction) -> float:
        return float(_MARGIN + (u - xmin) / span_x * inner)

    def py(v: Fraction) -> float:
        return float(_W - _MARGIN - (v - ymin) / span_y * inner)

    us = [xmin + span_x * i / (n - 1) for i in range(n)]
    vs = [ymin + span_y * j / (n - 1) for j in range(n)]
    step = inner / (n - 1)
    half = step / 2

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_W}" '
        f'viewBox="0 0 {_W} {_W}">',
        f"<!-- idemod {__version__} -->",
        f'<rect x="0" y="0" width="{_W}" height="{_W}" fill="#ffffff"/>',
    ]

    def emit_region(classify, color: str, opacity: str) -> None:
        for j, v in enumerate(vs):
            run_start = None
            row_points = [Vector(RMAX, (fin(RMAX, u), fin(RMAX, v))) for u in us]
            flags = [classify(p) for p in row_points]
            for i in range(n + 1):
                inside = i < n and flags[i]
                if inside and run_start is None:
                    run_start = i
                elif not inside and run_start is not None:
                    x0 = px(us[run_start]) - half
                    x1 = px(us[i - 1]) + half
                    parts.append(
                        f'<rect x="{x0:.2f}" y="{py(v) - half:.2f}" '
                        f'width="{x1 - x0:.2f}" height="{step:.2f}" '
                        f'fill="{color}" fill-opacity="{opacity}"/>'
                    )
                    run_start = None

    for h in scene.halfspaces:
        emit_region(lambda p, h=h: halfspace_contains(h, p), "#b8b8b8", "0.6")
    if scene.generators:
        emit_region(lambda p: _hull_member(scene.generators, p), "#4a4a4a", "0.85")

    for li, spec in enumerate(scene.lines):
        color = _LINE_COLORS[li % len(_LINE_COLORS)]
        signs = [[_line_side(spec, u, v) for u in us] for v in vs]
        for j in range(n):
            for i in range(n):
                s = signs[j][i]
                crossing = s == 0
                if not crossing and i + 1 < n and signs[j][i + 1] != s:
                    crossing = True
                if not crossing and j + 1 < n and signs[j + 1][i] != s:
                    crossing = True
                if crossing:
                    parts.append(
                        f'<rect x="{px(us[i]) - half:.2f}" y="{py(vs[j]) - half:.2f}" '
                        f'width="{step:.2f}" height="{step:.2f}" fill="{color}"/>'
                    )

    # axes through the origin when visible
    if xmin <= 0 <= xmax:
        parts.append(
            f'<line x1="{px(Fraction(0)):.2f}" y1="{_MARGIN}" x2="{px(Fraction(0)):.2f}" '
            f'y2="{_W - _MARGIN}" stroke="#888888" stroke-width="1"/>'
        )
    if ymin <= 0 <= ymax:
        parts.append(
            f'<line x1="{_MARGIN}" y1="{py(Fraction(0)):.2f}" x2="{_W - _MARGIN}" '
            f'y2="{py(Fraction(0)):.2f}" stroke="#888888" stroke-width="1"/>'
        )

    fam = (
        GeneratingFamily(RMAX, 2, tuple(scene.generators)) if scene.generators else None
    )
    classification: dict[str, dict] = {}
    arrows = []
    labels = []
    for label, p in scene.points:
        info: dict = {}
        if fam is not None:
            sep = separate_from_convex(fam, p)
            info["in_convex"] = sep.member
            proj = convex_projection(fam, p)
            if proj is not None and proj != p:
                arrows.append((p, proj))
        for hi, h in enumerate(scene.halfspaces):
            info[f"in_halfspace_{hi}"] = halfspace_contains(h, p)
        classification[label] = info
        labels.append((label, p, info))

    parts.append(
        '<defs><marker id="arrow" viewBox="0 0 8 8" refX="7" refY="4" '
        'markerWidth="6" markerHeight="6" orient="auto">'
        '<path d="M0,0 L8,4 L0,8 z" fill="#222222"/></marker></defs>'
    )
    def finite_xy(p: Vector) -> tuple[float, float] | None:
        a, b = p.entries
        if a.kind != "fin" or b.kind != "fin":
            return None  # points at infinity are classified but not drawn
        return px(Fraction(a.value)), py(Fraction(b.value))

    for src, dst in arrows:
        s_xy, d_xy = finite_xy(src), finite_xy(dst)
        if s_xy is None or d_xy is None:
            continue
        parts.append(
            f'<line x1="{s_xy[0]:.2f}" y1="{s_xy[1]:.2f}" x2="{d_xy[0]:.2f}" '
            f'y2="{d_xy[1]:.2f}" stroke="#222222" stroke-width="1.5" '
            'marker-end="url(#arrow)"/>'
        )
    for g in scene.generators:
        g_xy = finite_xy(g)
        if g_xy is not None:
            parts.append(
                f'<circle cx="{g_xy[0]:.2f}" cy="{g_xy[1]:.2f}" r="4" fill="#111111"/>'
            )
    for label, p, info in labels:
        p_xy = finite_xy(p)
        if p_xy is None:
            continue
        x, y = p_xy
        data = "".join(
            f' data-{k.replace("_", "-")}="{str(v).lower()}"' for k, v in sorted(info.items())
        )
        parts.append(
            f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="#c02020"{data}/>'
        )
        parts.append(
            f'<text x="{x + 7:.2f}" y="{y - 7:.2f}" font-family="monospace" '
            f'font-size="14" fill="#111111">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n", classification
