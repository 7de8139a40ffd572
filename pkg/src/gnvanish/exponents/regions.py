"""Exact geometry of admissible regions in the Riesz diagram.

Two kinds of output, both as polylines with exact rational vertices:

* arrangement ridges of the decay-exponent calculus (the lines where two
  of the eight affine formulas tie for the minimum), plus the exceptional
  segments, which reproduce the labeled diagram of the slab bounds;
* boundaries of a checker's Strong region, extracted by marching a
  rational grid and bisecting membership flips edge by edge, entirely in
  exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import checkers
from .acalculus import (a_formulas, exceptional_horizontal,
                        exceptional_vertical)
from .profile import SymbolProfile
from .rational import RecipExponent, recip

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class RegionPolyline:
    vertices: tuple[Point, ...]
    label: str
    kind: str = "boundary"  # boundary | ridge | exceptional | strong | weak

    def __post_init__(self) -> None:
        for (x, y) in self.vertices:
            if not 0 <= y <= x <= 1:
                raise ValueError(
                    f"vertex ({x}, {y}) outside the triangle 0 <= 1/q <= 1/p <= 1")

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "kind": self.kind,
            "vertices": [[str(x), str(y)] for (x, y) in self.vertices],
        }


# ---------------------------------------------------------------------------
# Exceptional segments.
# ---------------------------------------------------------------------------

def exceptional_segments(k: int) -> list[RegionPolyline]:
    """The two segments of exponent pairs with weak-type dyadic bounds only."""
    vp, vq = exceptional_vertical(k)
    hp, hq = exceptional_horizontal(k)
    return [
        RegionPolyline(((vp, vq), (vp, Fraction(0))), "E-vertical", "exceptional"),
        RegionPolyline(((hp, hq), (Fraction(1), hq)), "E-horizontal", "exceptional"),
    ]


# ---------------------------------------------------------------------------
# Arrangement of the eight affine decay formulas.
# ---------------------------------------------------------------------------

def _affine_forms(d: int, k: int) -> dict[str, tuple[Fraction, Fraction, Fraction]]:
    """Coefficients (a, b, c) with f(x, y) = a x + b y + c for each formula."""
    half_k2 = Fraction(k + 2, 2)
    m3 = 2 * d - k - 1
    m4 = 2 * d - k - 2
    return {
        "A0": (Fraction(0), Fraction(0), Fraction(1)),
        "A1": (half_k2, -half_k2, Fraction(0)),
        "A2": (Fraction(0), Fraction(-(k + 1)), half_k2),
        "A2'": (Fraction(k + 1), Fraction(0), half_k2 - (k + 1)),
        "A3": (Fraction(0), Fraction(-m3), Fraction(2 * d - k, 2)),
        "A3'": (Fraction(m3), Fraction(0), Fraction(2 * d - k, 2) - m3),
        "A4": (half_k2, -half_k2 - m4, Fraction(m4, 2)),
        "A4'": (half_k2 + m4, -half_k2, Fraction(m4, 2) - m4),
    }


# Domain triangle 0 <= y <= x <= 1 as half-planes a x + b y + c >= 0.
_TRIANGLE = (
    (Fraction(0), Fraction(1), Fraction(0)),    # y >= 0
    (Fraction(1), Fraction(-1), Fraction(0)),   # x >= y
    (Fraction(-1), Fraction(0), Fraction(1)),   # x <= 1
)


def _eval(form, x, y):
    a, b, c = form
    return a * x + b * y + c


def acalculus_ridges(d: int, k: int) -> list[RegionPolyline]:
    """Segments where two of the eight formulas tie for the minimum.

    For each pair the tie line is clipped against "below every other
    formula" and the diagram triangle; the resulting endpoints are the
    labeled vertices of the diagram.  Exact throughout.
    """
    forms = _affine_forms(d, k)
    names = list(forms)
    seen: set[frozenset[Point]] = set()
    out: list[RegionPolyline] = []
    for i, ni in enumerate(names):
        for nj in names[i + 1:]:
            ai, bi, ci = forms[ni]
            aj, bj, cj = forms[nj]
            ga, gb, gc = ai - aj, bi - bj, ci - cj
            if ga == 0 and gb == 0:
                continue  # identical or parallel-disjoint formulas
            # Base point and direction of the tie line {f_i = f_j}.
            if gb != 0:
                p0 = (Fraction(0), -gc / gb)
            else:
                p0 = (-gc / ga, Fraction(0))
            direction = (-gb, ga)
            lo, hi = None, None  # parameter interval, None = unbounded

            def clip(a, b, c, sense, lo, hi):
                # constraint a x + b y + c (sense: >= 0) along p0 + t*dir
                base = a * p0[0] + b * p0[1] + c
                slope = a * direction[0] + b * direction[1]
                if slope == 0:
                    if base < 0:
                        return Fraction(1), Fraction(0)  # empty
                    return lo, hi
                t = -base / slope
                if slope > 0:
                    lo = t if lo is None else max(lo, t)
                else:
                    hi = t if hi is None else min(hi, t)
                return lo, hi

            for a, b, c in _TRIANGLE:
                lo, hi = clip(a, b, c, ">=", lo, hi)
            for nl in names:
                if nl in (ni, nj):
                    continue
                al, bl, cl = forms[nl]
                # need f_l - f_i >= 0 on the segment
                lo, hi = clip(al - ai, bl - bi, cl - ci, ">=", lo, hi)
            if lo is None or hi is None or lo >= hi:
                continue
            pa = (p0[0] + lo * direction[0], p0[1] + lo * direction[1])
            pb = (p0[0] + hi * direction[0], p0[1] + hi * direction[1])
            key = frozenset((pa, pb))
            if key in seen:
                continue
            seen.add(key)
            out.append(RegionPolyline((pa, pb), f"{ni}={nj}", "ridge"))
    return out


def acalculus_diagram(d: int, k: int) -> list[RegionPolyline]:
    return acalculus_ridges(d, k) + exceptional_segments(k)


def diagram_vertices(polylines: list[RegionPolyline]) -> list[Point]:
    verts = {v for p in polylines for v in p.vertices}
    return sorted(verts)


# ---------------------------------------------------------------------------
# Interior Sobolev lines at a fixed vanishing order.
# ---------------------------------------------------------------------------

def sobolev_lines(d: int, k: int, alpha) -> list[RegionPolyline]:
    """The exponent lines where the single-symbol bound at vanishing order
    alpha in (0, 1] holds: a strong segment, plus weak-type extensions
    (horizontal at fixed q, vertical at fixed p) when alpha > 1/2."""
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha = {alpha} outside (0, 1]")
    if alpha < Fraction(1, 2):
        y0 = Fraction(k + 2 - 4 * alpha, 2 * (k + 2))
        p_lo = (Fraction(1, 2), y0)
        p_hi = (1 - y0, Fraction(1, 2))
        return [RegionPolyline((p_lo, p_hi), f"alpha={alpha} strong", "strong")]
    x_lo = (k + 2 * alpha) / (2 * Fraction(k + 1))
    y_lo = x_lo - 2 * alpha / (k + 2)
    p_lo = (x_lo, y_lo)
    p_hi = (1 - y_lo, 1 - x_lo)
    out = [RegionPolyline((p_lo, p_hi), f"alpha={alpha} strong (open)", "strong")]
    if alpha > Fraction(1, 2):
        out.append(RegionPolyline(((p_hi[0], p_hi[1]), (Fraction(1), p_hi[1])),
                                  f"alpha={alpha} weak horizontal", "weak"))
        out.append(RegionPolyline(((p_lo[0], p_lo[1]), (p_lo[0], Fraction(0))),
                                  f"alpha={alpha} weak vertical", "weak"))
    return out


# ---------------------------------------------------------------------------
# Generic Strong-region boundary by marching + exact bisection.
# ---------------------------------------------------------------------------

def _bisect_edge(mem: Callable[[Fraction, Fraction], bool],
                 p_in: Point, p_out: Point, depth: int) -> Point:
    for _ in range(depth):
        mid = ((p_in[0] + p_out[0]) / 2, (p_in[1] + p_out[1]) / 2)
        if mem(*mid):
            p_in = mid
        else:
            p_out = mid
    return ((p_in[0] + p_out[0]) / 2, (p_in[1] + p_out[1]) / 2)


def strong_region_boundary(mem: Callable[[Fraction, Fraction], bool],
                           label: str, n: int = 48,
                           depth: int = 14) -> list[RegionPolyline]:
    """March an n x n rational grid over the unit square and return the
    membership boundary as polylines; each crossing is bisected to a width
    of 1/(n 2^depth) in exact arithmetic."""
    xs = [Fraction(i, n) for i in range(n + 1)]
    vals = [[mem(x, y) for y in xs] for x in xs]

    h_cross: dict[tuple[int, int], Point] = {}
    v_cross: dict[tuple[int, int], Point] = {}
    for i in range(n + 1):
        for j in range(n + 1):
            if i < n and vals[i][j] != vals[i + 1][j]:
                p, q = (xs[i], xs[j]), (xs[i + 1], xs[j])
                if not vals[i][j]:
                    p, q = q, p
                h_cross[(i, j)] = _bisect_edge(mem, p, q, depth)
            if j < n and vals[i][j] != vals[i][j + 1]:
                p, q = (xs[i], xs[j]), (xs[i], xs[j + 1])
                if not vals[i][j]:
                    p, q = q, p
                v_cross[(i, j)] = _bisect_edge(mem, p, q, depth)

    segments: list[tuple[Point, Point]] = []
    for i in range(n):
        for j in range(n):
            pts = []
            if (i, j) in h_cross:
                pts.append(("b", h_cross[(i, j)]))
            if (i + 1, j) in v_cross:
                pts.append(("r", v_cross[(i + 1, j)]))
            if (i, j + 1) in h_cross:
                pts.append(("t", h_cross[(i, j + 1)]))
            if (i, j) in v_cross:
                pts.append(("l", v_cross[(i, j)]))
            if len(pts) == 2:
                segments.append((pts[0][1], pts[1][1]))
            elif len(pts) == 4:
                # Saddle cell: pair crossings using the center sample.
                cx, cy = xs[i] + Fraction(1, 2 * n), xs[j] + Fraction(1, 2 * n)
                center_in = mem(cx, cy)
                corner_in = vals[i][j]
                by_side = dict(pts)
                if center_in == corner_in:
                    segments.append((by_side["b"], by_side["r"]))
                    segments.append((by_side["t"], by_side["l"]))
                else:
                    segments.append((by_side["b"], by_side["l"]))
                    segments.append((by_side["t"], by_side["r"]))

    return _chain(segments, label)


def _chain(segments: list[tuple[Point, Point]], label: str) -> list[RegionPolyline]:
    adj: dict[Point, list[int]] = {}
    for idx, (p, q) in enumerate(segments):
        adj.setdefault(p, []).append(idx)
        adj.setdefault(q, []).append(idx)
    used = [False] * len(segments)
    polylines = []
    for start in range(len(segments)):
        if used[start]:
            continue
        used[start] = True
        p, q = segments[start]
        chain = [p, q]
        for endpoint_side in (1, 0):
            cur = chain[-1] if endpoint_side else chain[0]
            while True:
                nxt = next((k for k in adj.get(cur, []) if not used[k]), None)
                if nxt is None:
                    break
                used[nxt] = True
                a, b = segments[nxt]
                cur = b if a == cur else a
                if endpoint_side:
                    chain.append(cur)
                else:
                    chain.insert(0, cur)
        polylines.append(RegionPolyline(tuple(chain), label, "boundary"))
    return polylines


# ---------------------------------------------------------------------------
# Dispatch.
# ---------------------------------------------------------------------------

def region_boundary(checker_id: str, params: dict, n: int = 48) -> list[RegionPolyline]:
    """Region boundaries for a named checker with all but two reciprocals
    pinned by params.  Exact-formula diagrams for 'acalculus' and
    'sobolev'; marching + bisection for the admissibility checkers."""
    cid = checker_id.lower()
    if cid == "acalculus":
        return acalculus_diagram(int(params["d"]), int(params["k"]))
    if cid == "sobolev":
        d, k = int(params["d"]), int(params["k"])
        out = []
        for key in ("alpha1", "alpha2", "alpha"):
            if key in params:
                out.extend(sobolev_lines(d, k, Fraction(params[key])))
        return out + exceptional_segments(k)

    def wrap(fn):
        return lambda x, y: fn(RecipExponent(x), RecipExponent(y)).ok

    if cid == "sphere":
        d, s, kappa = int(params["d"]), Fraction(params["s"]), Fraction(params["kappa"])
        mem = wrap(lambda ir, iq: checkers.check_gn_sphere(d, s, kappa, ir, iq))
    elif cid == "local":
        d, s, kappa = int(params["d"]), Fraction(params["s"]), Fraction(params["kappa"])
        mem = wrap(lambda ir, iq: checkers.check_local_gn(d, s, kappa, iq, ir))
    elif cid == "generalhd":
        profile = _profile_from(params)
        mem = wrap(lambda ir, iq: checkers.check_gn_highd_general(profile, iq, ir))
    elif cid == "oned":
        s, kappa = Fraction(params["s"]), Fraction(params["kappa"])
        ir2 = recip(params.get("ir2", 0))
        mem = wrap(lambda ir1, iq: checkers.check_gn_1d(kappa, s, iq, ir1, ir2))
    elif cid == "general1d":
        profile = _profile_from(params, d_default=1)
        ir2 = recip(params.get("ir2", 0))
        mem = wrap(lambda ir1, iq: checkers.check_gn1d_general(profile, iq, ir1, ir2))
    elif cid == "largefreq":
        profile = _profile_from(params)
        ir2 = recip(params.get("ir2", 0))
        mem = wrap(lambda ir1, iq: checkers.check_large_freq(profile, iq, ir1, ir2))
    else:
        raise ValueError(f"unknown checker-id {checker_id!r} for region extraction")

    out = strong_region_boundary(mem, f"{cid}-boundary", n=n)
    d = int(params.get("d", 2))
    if d >= 2:
        k = int(params.get("k", d - 1))
        out.extend(exceptional_segments(k))
    return out


def _profile_from(params: dict, d_default: int = 2) -> SymbolProfile:
    d = int(params.get("d", d_default))
    return SymbolProfile(
        d=d,
        k=int(params.get("k", max(d - 1, 1))),
        alpha1=Fraction(params.get("alpha1", 1)),
        alpha2=Fraction(params.get("alpha2", 0)),
        s1=Fraction(params.get("s1", params.get("s", 1))),
        s2=Fraction(params.get("s2", 0)),
        kappa=Fraction(params.get("kappa", Fraction(1, 2))),
    )
