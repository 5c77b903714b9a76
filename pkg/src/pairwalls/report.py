"""Chamber reports: assembly, rendering and JSON round-trip."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from . import cohom
from .numclass import ClassError, NumClass, chern_from_ch, curve_poly
from .ratpoly import RatPoly
from .spectrum import H0Bound, SpectrumCandidate, h0_lower_bound
from .subscheme import (
    CurveDescription,
    classify_stratum,
    min_euler,
    stratum_dim,
)
from .walls import (
    FamilyContext,
    Transition,
    WallError,
    WallRecord,
    check_invariants,
    classify_transition,
    enumerate_walls,
    named_walls,
    w0_exists,
)

SCHEMA = "pairwalls/1"
FORMATS = ("table", "json", "dot")


class InvariantError(RuntimeError):
    pass


@dataclass(frozen=True)
class Preset:
    name: str
    cls: NumClass
    twist: int
    chart: tuple  # (delta, P_A, P_B) strings
    curve_types: tuple = ()  # (label, components)
    annotations: tuple = ()


PRESETS = {
    p.name: p
    for p in (
        Preset(
            "odd-c1",
            NumClass(2, -1, "-1/2", "5/6"),
            1,
            (("1/2*t^2+3/2*t+1", "0", "t+1"),),
            annotations=("single wall: the Hilbert and Gieseker chambers coincide",),
        ),
        Preset(
            "null-correlation",
            NumClass(2, 0, -1, 0),
            1,
            (("t^2+4*t+3", "0", "2*t+2"), ("t+3", "t+2", "0"), ("t+1", "t+1", "1")),
            (
                ("plane conic + 1 pt", (cohom.planar_curve(2, 0), cohom.points(1))),
                ("two skew lines", (cohom.line(0), cohom.line(0))),
            ),
            ("curves of Z_0 (plane conic with a coplanar point) are lost when crossing W_0",),
        ),
        Preset(
            "c2-3-c3-8",
            NumClass(2, 0, -3, 4),
            1,
            (
                ("t^2+2*t+1", "0", "4*t"),
                ("3*t+5", "3*t+2", "0"),
                ("3*t+3", "3*t+1", "1"),
                ("3*t+1", "3*t", "2"),
                ("t+1", "2*t+1", "t+1"),
            ),
            (
                ("plane quartic + 2 pts", (cohom.planar_curve(4, 0), cohom.points(2))),
                ("elliptic quartic", (cohom.complete_intersection(2, 2),)),
            ),
            ("Gieseker moduli space known to be smooth and irreducible of dimension 21 (not computed)",),
        ),
        Preset(
            "c2-2-c3-0",
            NumClass(2, 0, -2, 0),
            1,
            (
                ("t^2+3*t", "0", "3*t+3"),
                ("2*t+6", "2*t+4", "0"),
                ("2*t+4", "2*t+3", "1"),
                ("2*t+2", "2*t+2", "2"),
                ("2*t", "2*t+1", "3"),
                ("2", "t+3", "t+1"),
            ),
        ),
        Preset(
            "c2-2-c3-2",
            NumClass(2, 0, -2, 1),
            1,
            (
                ("t^2+3*t+1", "0", "3*t+2"),
                ("2*t+5", "2*t+3", "0"),
                ("2*t+3", "2*t+2", "1"),
                ("2*t+1", "2*t+1", "2"),
                ("1", "t+2", "t+1"),
            ),
            annotations=("two generically saturated components in the Gieseker chamber",),
        ),
    )
}


def find_preset(v: NumClass, k: int) -> Optional[Preset]:
    for p in PRESETS.values():
        if p.cls == v and p.twist == k:
            return p
    return None


def row_key(w: WallRecord) -> tuple:
    pa, pb = w.rows()
    return (str(w.delta), str(pa), str(pb))


@dataclass(frozen=True)
class Chamber:
    lower: RatPoly
    upper: Optional[RatPoly]
    labels: tuple = ()

    def to_json(self) -> dict:
        return {
            "lower": self.lower.to_json(),
            "upper": None if self.upper is None else self.upper.to_json(),
            "labels": list(self.labels),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Chamber":
        upper = data["upper"]
        return cls(
            RatPoly.from_json(data["lower"]),
            None if upper is None else RatPoly.from_json(upper),
            tuple(data["labels"]),
        )

    def __str__(self):
        hi = "inf" if self.upper is None else str(self.upper)
        return f"({self.lower}, {hi})"


@dataclass(frozen=True)
class Stratum:
    index: int
    curve: CurveDescription
    dim: int
    fiber_dim: int

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "curve": self.curve.to_json(),
            "dim": self.dim,
            "fiber_dim": self.fiber_dim,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Stratum":
        return cls(data["index"], CurveDescription.from_json(data["curve"]), data["dim"], data["fiber_dim"])


@dataclass(frozen=True)
class ChamberReport:
    cls: NumClass
    twist: int
    walls: tuple
    transitions: tuple
    golden: tuple
    chambers: tuple
    curve_poly: RatPoly
    family_l: Optional[int]
    w0: Optional[tuple]
    named: dict
    strata: tuple
    curve_fibers: tuple  # (label, h^1) pairs
    spectrum: Optional[H0Bound]
    notes: tuple
    preset: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "class": self.cls.to_json(),
            "twist": self.twist,
            "preset": self.preset,
            "curve_poly": self.curve_poly.to_json(),
            "curve_poly_str": str(self.curve_poly),
            "family_l": self.family_l,
            "w0": None if self.w0 is None else list(self.w0),
            "named": dict(self.named),
            "walls": [
                dict(w.to_json(), transition=t.to_json(), golden=g)
                for w, t, g in zip(self.walls, self.transitions, self.golden)
            ],
            "chambers": [c.to_json() for c in self.chambers],
            "strata": [s.to_json() for s in self.strata],
            "curve_fibers": [list(p) for p in self.curve_fibers],
            "spectrum": None if self.spectrum is None else self.spectrum.to_json(),
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ChamberReport":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        h0 = data["spectrum"]
        if h0 is not None:
            spectra = tuple(SpectrumCandidate(tuple(s["ks"]), s["s"]) for s in h0["spectra"])
            h0 = H0Bound(h0["h0_bound"], h0["proven_positive"], spectra, tuple(h0["h2"]))
        return cls(
            NumClass.from_json(data["class"]),
            data["twist"],
            tuple(WallRecord.from_json(w) for w in data["walls"]),
            tuple(Transition.from_json(w["transition"]) for w in data["walls"]),
            tuple(w["golden"] for w in data["walls"]),
            tuple(Chamber.from_json(c) for c in data["chambers"]),
            RatPoly.from_json(data["curve_poly"]),
            data["family_l"],
            None if data["w0"] is None else tuple(data["w0"]),
            dict(data["named"]),
            tuple(Stratum.from_json(s) for s in data["strata"]),
            tuple(tuple(p) for p in data["curve_fibers"]),
            h0,
            tuple(data["notes"]),
            data["preset"],
        )


def _chambers(walls) -> tuple:
    values = []
    for w in walls:
        if not values or values[-1] != w.delta:
            values.append(w.delta)
    out = [Chamber(values[0], None, ("empty",))]
    bounds = values + [RatPoly()]
    for i in range(len(values)):
        labels = []
        if i == 0:
            labels.append("hilbert")
        if i == len(values) - 1:
            labels.append("gieseker")
        out.append(Chamber(bounds[i + 1], bounds[i], tuple(labels)))
    return tuple(out)


def _strata(v: NumClass, k: int, l: Optional[int]) -> tuple:
    if l is None:
        return ()
    p = curve_poly(v, k)
    d_y, chi_y = int(p.coeff(1)), int(p.coeff(0))
    if d_y < 1 or chi_y - min_euler(d_y) != l:
        return ()
    m = 2 * k + v.c1 - 4
    fiber = cohom.hilbert_fiber_dim(
        [cohom.planar_curve(d_y, 0)] + ([cohom.points(l)] if l else []), m
    )
    out = []
    for i in range(l + 1):
        y = CurveDescription(d_y, chi_y - i, i, False)
        label = classify_stratum(y, l, p)
        out.append(Stratum(label.index, y, stratum_dim(d_y, l, i), fiber))
    return tuple(out)


def build_report(v: NumClass, k: int, max_group: Optional[int] = None, jobs: int = 1,
                 check: bool = True) -> ChamberReport:
    if k < 1:
        raise ClassError("reports need twist k >= 1")
    walls = enumerate_walls(v, k, max_group, jobs)
    ctx = FamilyContext.of(v, k)
    transitions = tuple(classify_transition(w, ctx) for w in walls)
    preset = find_preset(v, k)
    chart = set(preset.chart) if preset else set()
    golden = tuple(row_key(w) in chart for w in walls)
    named = named_walls(walls, v, k)
    try:
        w0 = w0_exists(v, k)
    except WallError:
        w0 = None
    notes = [
        "critical values use the twist acting on the subscheme: P_{I_A(s)}(t) = P_O(t+s) - P_A(t+s)",
        "positive extension dimensions assume the connecting-map image vanishes (lower bound in general)",
    ]
    if any(w.family_index is not None and w.subA.degree for w in walls):
        notes.append("critical values of family walls exceed the untwisted convention by 2*d_A")
    if any(w.group >= 2 for w in walls):
        notes.append("walls in group >= 2 are numerical only; realizability on surfaces is not checked")
    if named.minimal_wall_check is False:
        notes.append("smallest wall does not come from (O(k-1), 1)")
    if preset:
        notes.extend(preset.annotations)
    h0 = None
    if v.c1 == 0:
        try:
            h0 = h0_lower_bound(v, k)
        except ClassError:
            h0 = None
    m = 2 * k + v.c1 - 4
    fibers = tuple((label, cohom.hilbert_fiber_dim(comps, m)) for label, comps in (preset.curve_types if preset else ()))
    report = ChamberReport(
        v,
        k,
        tuple(walls),
        transitions,
        golden,
        _chambers(walls),
        curve_poly(v, k),
        ctx.l,
        w0,
        named.to_json(),
        _strata(v, k, ctx.l),
        fibers,
        h0,
        tuple(notes),
        preset.name if preset else None,
    )
    if check:
        problems = check_invariants(v, k, walls) + check_chambers(report)
        if problems:
            raise InvariantError("; ".join(problems))
    return report


def check_chambers(report: ChamberReport) -> list[str]:
    problems = []
    inner = [c for c in report.chambers if c.upper is not None]
    if not inner or not inner[-1].lower.is_zero():
        problems.append("chambers do not reach 0")
    for hi, lo in zip(inner, inner[1:]):
        if hi.lower != lo.upper or not lo.lower < lo.upper:
            problems.append(f"chambers {hi} and {lo} are not adjacent")
    if inner and inner[0].upper != report.walls[0].delta:
        problems.append("top chamber does not end at the collapsing wall")
    if "hilbert" not in inner[0].labels:
        problems.append("missing hilbert chamber")
    return problems


# -- rendering -------------------------------------------------------------

_COLORS = {"verified": "\033[32m", "numerical": "\033[33m"}
_RESET = "\033[0m"


def _fmt_ext(t: Transition) -> str:
    if t.ext_plus is None:
        return "-"
    minus = t.ext_minus
    if len(t.ext_minus_cases) > 1:
        minus = "{" + ",".join(str(x) for x in t.ext_minus_cases.values()) + "}"
    return f"{t.ext_plus}/{minus}"


def _table(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def render_walls_table(walls, transitions, golden, color: bool = False) -> str:
    rows = [["#", "delta", "group", "P_A", "P_B", "family", "transition", "ext+/ext-", "dims ss/+/-", "status"]]
    for i, (w, t, g) in enumerate(zip(walls, transitions, golden)):
        pa, pb = w.rows()
        dims = "-" if t.ss_dim is None else f"{t.ss_dim}/{t.dim_plus or '-'}/{t.dim_minus or '-'}"
        status = w.actual + (" golden" if g else "")
        rows.append([
            str(i), str(w.delta), str(w.group), str(pa), str(pb),
            "-" if w.family_index is None else f"W_{w.family_index}",
            t.kind, _fmt_ext(t), dims, status,
        ])
    lines = _table(rows)
    if color:
        lines = [lines[0]] + [
            ln.replace(w.actual, _COLORS[w.actual] + w.actual + _RESET, 1) for ln, w in zip(lines[1:], walls)
        ]
    return "\n".join(lines)


def render_table(report: ChamberReport, color: bool = False) -> str:
    c1, c2, c3 = chern_from_ch(report.cls)
    out = [f"class {report.cls}  twist {report.twist}  chern (c1,c2,c3) = ({c1},{c2},{c3})"]
    if report.preset:
        out[0] += f"  preset {report.preset}"
    line = f"curve polynomial {report.curve_poly}"
    if report.family_l is not None:
        line += f"  l = {report.family_l}"
    if report.w0 is not None:
        exists, d_a, chi_a = report.w0
        line += f"  W_0 exists: {'yes' if exists else 'no'} (d_A={d_a}, chi_A={chi_a})"
    out.append(line)
    out.append("")
    out.append(render_walls_table(report.walls, report.transitions, report.golden, color))
    out.append("")
    out.append("chambers:")
    for c in report.chambers:
        out.append(f"  {c}  {' '.join(c.labels)}".rstrip())
    if report.strata:
        out.append("")
        out.append("strata:")
        for s in report.strata:
            y = s.curve
            out.append(
                f"  Z_{s.index}: plane degree-{y.d} curve, {y.chi - min_euler(y.d)} pts in plane,"
                f" {y.off_plane_points} off plane  dim {s.dim}  fiber {s.fiber_dim}"
            )
    if report.curve_fibers:
        out.append("")
        out.append("hilbert chamber fibers:")
        for label, dim in report.curve_fibers:
            out.append(f"  {label}: {dim}")
    if report.spectrum is not None:
        sp = report.spectrum
        out.append("")
        out.append("spectra: " + ", ".join(f"{sp_.ks} s={sp_.s}" for sp_ in sp.spectra))
        out.append(f"h0 bound at twist {report.twist}: {sp.bound}  proven positive: {sp.proven_positive}")
    out.append("")
    out.append("notes:")
    out.extend(f"  - {n}" for n in report.notes)
    return "\n".join(out) + "\n"


def render_dot(report: ChamberReport) -> str:
    out = ["digraph chambers {", "  rankdir=LR;"]
    for i, c in enumerate(report.chambers):
        label = str(c) + ("\\n" + " ".join(c.labels) if c.labels else "")
        out.append(f'  c{i} [shape=box, label="{label}"];')
    # chamber i sits above chamber i+1, separated by its lower wall
    for i, c in enumerate(report.chambers[:-1]):
        kinds = [t.kind for w, t in zip(report.walls, report.transitions) if w.delta == c.lower]
        out.append(f'  c{i} -> c{i + 1} [label="{c.lower}: {", ".join(kinds)}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def render_json(report: ChamberReport) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"


def render(report: ChamberReport, fmt: str = "table", color: bool = False) -> str:
    if fmt == "table":
        return render_table(report, color)
    if fmt == "json":
        return render_json(report)
    if fmt == "dot":
        return render_dot(report)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def parse_report(text: str) -> ChamberReport:
    return ChamberReport.from_json(json.loads(text))
