"""Instance files, the seeded instance generator, and the sampling oracle.

The on-disk format is line-oriented text with exact "p/q" rationals so
fixtures diff cleanly and round-trip bit-exactly:

    # comment lines and blank lines are ignored
    mode translate|homothet
    seed 12345                  (optional provenance of generated instances)
    shape K
    ax ay b strict|closed       (K half-plane lines: ax*x + ay*y <= b)
    points N
    x y                         (N point lines)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, lcm

from . import backend
from .builder import PointSet
from .geometry import Point2
from .rng import SplitMix64, derive_seed, rational_in_window
from .shape import HOMOTHET, MODES, TRANSLATE, ConvexShape, HalfPlane, Placement


class ParseError(ValueError):
    def __init__(self, message: str, line_no: int | None = None):
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{where}{message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Instance:
    points: PointSet
    shape: ConvexShape
    mode: str
    seed: int | None = None


_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_rational(text: str, line_no: int | None = None) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"malformed rational {text!r}", line_no)
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in {text!r}", line_no)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    return str(value)


def parse_instance(text: str) -> Instance:
    lines = []  # (line_no, tokens)
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((no, body.split()))
    pos = 0

    def next_line(expect: str):
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(f"unexpected end of input, expected {expect}")
        no, toks = lines[pos]
        pos += 1
        return no, toks

    no, toks = next_line("'mode'")
    if toks[0] != "mode" or len(toks) != 2:
        raise ParseError("expected 'mode translate|homothet'", no)
    mode = toks[1]
    if mode not in MODES:
        raise ParseError(f"unknown mode {mode!r}", no)

    seed = None
    no, toks = next_line("'seed' or 'shape'")
    if toks[0] == "seed":
        if len(toks) != 2 or not toks[1].isdigit():
            raise ParseError("expected 'seed <unsigned integer>'", no)
        seed = int(toks[1])
        if seed >= 1 << 64:
            raise ParseError("seed exceeds 64 bits", no)
        no, toks = next_line("'shape'")

    if toks[0] != "shape" or len(toks) != 2 or not toks[1].isdigit():
        raise ParseError("expected 'shape <count>'", no)
    k = int(toks[1])
    halfplanes = []
    for _ in range(k):
        no, toks = next_line("half-plane line")
        if len(toks) != 4 or toks[3] not in ("strict", "closed"):
            raise ParseError("expected 'ax ay b strict|closed'", no)
        ax = parse_rational(toks[0], no)
        ay = parse_rational(toks[1], no)
        b = parse_rational(toks[2], no)
        if ax == 0 and ay == 0:
            raise ParseError("half-plane normal must be nonzero", no)
        halfplanes.append(HalfPlane((ax, ay), b, toks[3] == "strict"))

    no, toks = next_line("'points'")
    if toks[0] != "points" or len(toks) != 2 or not toks[1].isdigit():
        raise ParseError("expected 'points <count>'", no)
    n = int(toks[1])
    pts = []
    seen = set()
    for _ in range(n):
        no, toks = next_line("point line")
        if len(toks) != 2:
            raise ParseError("expected 'x y'", no)
        p = Point2(parse_rational(toks[0], no), parse_rational(toks[1], no))
        if p in seen:
            raise ParseError(f"duplicate point {toks[0]} {toks[1]}", no)
        seen.add(p)
        pts.append(p)
    if pos < len(lines):
        raise ParseError("trailing content", lines[pos][0])

    return Instance(PointSet(tuple(pts)), ConvexShape(tuple(halfplanes)), mode, seed)


def emit_instance(inst: Instance) -> str:
    out = [f"mode {inst.mode}"]
    if inst.seed is not None:
        out.append(f"seed {inst.seed}")
    out.append(f"shape {len(inst.shape.halfplanes)}")
    for h in inst.shape.halfplanes:
        kind = "strict" if h.strict else "closed"
        out.append(f"{format_rational(h.a[0])} {format_rational(h.a[1])} "
                   f"{format_rational(h.b)} {kind}")
    out.append(f"points {len(inst.points)}")
    for p in inst.points.points:
        out.append(f"{format_rational(p.x)} {format_rational(p.y)}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Seeded generation
# ---------------------------------------------------------------------------

# Integer direction vectors on a coarse angular grid, in angular order.
DIRECTION_GRID = (
    (1, 0), (2, 1), (1, 1), (1, 2), (0, 1), (-1, 2), (-1, 1), (-2, 1),
    (-1, 0), (-2, -1), (-1, -1), (-1, -2), (0, -1), (1, -2), (1, -1), (2, -1),
)

POINT_WINDOW = (-8, 8)
POINT_MAX_DEN = 8
OFFSET_WINDOW = (-6, 12)
OFFSET_MAX_DEN = 4


def _sample_points(gen: SplitMix64, n: int) -> PointSet:
    pts: list[Point2] = []
    seen = set()
    lo, hi = POINT_WINDOW
    guard = 0
    while len(pts) < n:
        p = Point2(rational_in_window(gen, lo, hi, POINT_MAX_DEN),
                   rational_in_window(gen, lo, hi, POINT_MAX_DEN))
        if p not in seen:
            seen.add(p)
            pts.append(p)
        guard += 1
        if guard > 1000 * n + 1000:
            raise RuntimeError("point sampling stalled; window too small for n")
    return PointSet(tuple(pts))


def generate_instance(seed: int, n: int, k: int, mode: str,
                      open_fraction: Fraction) -> Instance:
    """Deterministic fuzz instance for a seed.

    Roughly one seed in ten intentionally drops boundedness by using at
    most two half-planes; every half-plane is independently marked strict
    with probability open_fraction.  Points are distinct small-denominator
    rationals in the fixed window, which makes collinearity and boundary
    contact genuinely reachable.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    open_fraction = Fraction(open_fraction)
    if not 0 <= open_fraction <= 1:
        raise ValueError("open_fraction must be in [0, 1]")
    gen = SplitMix64(seed)

    k_eff = 1 + gen.below(2) if gen.below(10) == 0 else k
    chosen = []
    seen_dirs = set()
    for _ in range(k_eff):
        d = DIRECTION_GRID[gen.below(len(DIRECTION_GRID))]
        if d not in seen_dirs:
            seen_dirs.add(d)
            chosen.append(d)
    halfplanes = []
    for d in chosen:
        b = rational_in_window(gen, *OFFSET_WINDOW, OFFSET_MAX_DEN)
        strict = gen.chance(open_fraction.numerator, open_fraction.denominator)
        halfplanes.append(HalfPlane((Fraction(d[0]), Fraction(d[1])), b, strict))

    points = _sample_points(gen, n)
    return Instance(points, ConvexShape(tuple(halfplanes)), mode, seed)


def generate_bounded_instance(seed: int, n: int, k: int, mode: str) -> Instance:
    """Closed, bounded, full-dimensional shape variant (k >= 3): three
    anchor directions roughly 120 degrees apart guarantee boundedness, the
    strictly positive offsets guarantee an interior."""
    if n < 1 or k < 3:
        raise ValueError("need n >= 1 and k >= 3")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    gen = SplitMix64(seed)

    g = len(DIRECTION_GRID)
    r = gen.below(g)
    idx = [(r) % g, (r + 5) % g, (r + 11) % g]
    seen_dirs = {DIRECTION_GRID[i] for i in idx}
    for _ in range(k - 3):
        d = DIRECTION_GRID[gen.below(g)]
        if d not in seen_dirs:
            seen_dirs.add(d)
            idx.append(DIRECTION_GRID.index(d))
    halfplanes = []
    for i in idx:
        d = DIRECTION_GRID[i]
        b = rational_in_window(gen, 1, 10, OFFSET_MAX_DEN)
        halfplanes.append(HalfPlane((Fraction(d[0]), Fraction(d[1])), b, False))

    points = _sample_points(gen, n)
    return Instance(points, ConvexShape(tuple(halfplanes)), mode, seed)


# ---------------------------------------------------------------------------
# Sampling oracle
# ---------------------------------------------------------------------------

def _integer_shape_rows(shape: ConvexShape):
    rows = []
    for h in shape.halfplanes:
        scale = lcm(h.a[0].denominator, h.a[1].denominator, h.b.denominator)
        rows.append(((int(h.a[0] * scale), int(h.a[1] * scale), int(h.b * scale)),
                     h.strict))
    return rows


def _integer_points(points: PointSet):
    out = []
    for p in points.points:
        d = lcm(p.x.denominator, p.y.denominator)
        out.append((int(p.x * d), int(p.y * d), d))
    return out


def translation_window(points: PointSet) -> tuple[int, int, int, int]:
    """Integer translation bounds: the point bounding box padded by one
    full spread (at least 1) on every side."""
    xs = [p.x for p in points.points]
    ys = [p.y for p in points.points]
    lox, hix = floor(min(xs)), ceil(max(xs))
    loy, hiy = floor(min(ys)), ceil(max(ys))
    pad = max(hix - lox, hiy - loy, 1)
    return lox - pad, hix + pad, loy - pad, hiy + pad


def sample_witness_search(inst: Instance, i: int, j: int, trials: int,
                          seed: int) -> Placement | None:
    """One-sided randomized oracle: random placements until one contains
    exactly {p_i, p_j}; None when the budget runs out.  Positive answers
    are proofs (the caller can re-verify them); negative answers are only
    statistical evidence."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    if i == j:
        raise ValueError("pair endpoints must differ")
    hit = backend.sample_pair_search(
        _integer_shape_rows(inst.shape), _integer_points(inst.points),
        i, j, inst.mode == HOMOTHET, translation_window(inst.points),
        trials, seed)
    if hit is None:
        return None
    _, tx, ty, td, ln, ld = hit
    return Placement((Fraction(tx, td), Fraction(ty, td)), Fraction(ln, ld))


def sampled_edges(inst: Instance, per_pair_trials: int, seed: int) -> set[tuple[int, int]]:
    """Pairs confirmed by the sampling oracle, each pair searched with its
    own derived stream so results are order-independent."""
    n = len(inst.points)
    out = set()
    pair_index = 0
    for a in range(n):
        for b in range(a + 1, n):
            s = derive_seed(seed, pair_index)
            pair_index += 1
            if sample_witness_search(inst, a, b, per_pair_trials, s) is not None:
                out.add((a, b))
    return out
