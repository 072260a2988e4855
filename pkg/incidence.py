"""
Exact projective geometry for the triangle relation A ∋ B:

    A ∋ B  iff  A1 lies on the line B2B3 and B1 lies on the line A2A3

Points and lines are homogeneous triples of Fractions, kept in a canonical
primitive-integer form so that projective equality is plain equality.
build_config() draws a random configuration of nineteen triangles

    O ∋ X, O ∋ Y, O ∋ Z
    X ∋ A, X ∋ A', Y ∋ B, Y ∋ B', Z ∋ C, Z ∋ C'
    A ∋ M, B ∋ M, A' ∋ M', B' ∋ M', A ∋ N, C ∋ N, A' ∋ N', C' ∋ N',
    B ∋ S, C ∋ S, B' ∋ S', C' ∋ S'
    M ∋ P, M' ∋ P, N ∋ Q, N' ∋ Q, S ∋ R, S' ∋ R

and verify_conclusion() looks for a triangle O' with P ∋ O', Q ∋ O' and
R ∋ O'. Such an O' exists iff P1, Q1, R1 are collinear and the side lines
P2P3, Q2Q3, R2R3 are concurrent.

Usage:
    python run_checks.py incidence --trials 100 --seed 42
    python run_checks.py incidence --trials 20 --seed 7 --counterexample-file cert.json
"""

import logging
import math
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from typing import Optional

import numpy as np
from tqdm import tqdm

from reports import CheckReport, verdict

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 100
DEFAULT_SEED = 42
COORD_BOUND = 997
RETRY_CAP = 200

TRIANGLES = ("O", "X", "Y", "Z", "A", "Ap", "B", "Bp", "C", "Cp",
             "M", "Mp", "N", "Np", "S", "Sp", "P", "Q", "R")
HYPOTHESES = (
    ("O", "X"), ("O", "Y"), ("O", "Z"),
    ("X", "A"), ("X", "Ap"), ("Y", "B"), ("Y", "Bp"), ("Z", "C"), ("Z", "Cp"),
    ("A", "M"), ("B", "M"), ("Ap", "Mp"), ("Bp", "Mp"),
    ("A", "N"), ("C", "N"), ("Ap", "Np"), ("Cp", "Np"),
    ("B", "S"), ("C", "S"), ("Bp", "Sp"), ("Cp", "Sp"),
    ("M", "P"), ("Mp", "P"), ("N", "Q"), ("Np", "Q"), ("S", "R"), ("Sp", "R"),
)


class DegenerateError(ValueError):
    """Coincident points or lines, or a triangle with collinear vertices."""


class ConstructionError(ValueError):
    """build_config gave up after RETRY_CAP degenerate draws."""


def display(name: str) -> str:
    return name[0] + "′" if name.endswith("p") else name


def _canonical(values, what):
    values = [Fraction(v) for v in values]
    if not any(values):
        raise DegenerateError(f"{what} with all-zero coordinates")
    scale = math.lcm(*(v.denominator for v in values))
    ints = [int(v * scale) for v in values]
    g = math.gcd(*ints)
    sign = -1 if next(v for v in ints if v) < 0 else 1
    return tuple(Fraction(sign * v // g) for v in ints)


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class HPoint:
    x: Fraction
    y: Fraction
    w: Fraction = Fraction(1)

    def __post_init__(self):
        for name, value in zip("xyw", _canonical((self.x, self.y, self.w), "point")):
            object.__setattr__(self, name, value)

    @property
    def coords(self) -> tuple:
        return self.x, self.y, self.w

    def __str__(self):
        if self.w:
            return f"({self.x / self.w}, {self.y / self.w})"
        return f"({self.x}:{self.y}:0)"


@dataclass(frozen=True)
class HLine:
    l1: Fraction
    l2: Fraction
    l3: Fraction

    def __post_init__(self):
        for name, value in zip(("l1", "l2", "l3"), _canonical((self.l1, self.l2, self.l3), "line")):
            object.__setattr__(self, name, value)

    @property
    def coeffs(self) -> tuple:
        return self.l1, self.l2, self.l3

    def __str__(self):
        return f"[{self.l1}x + {self.l2}y + {self.l3}w = 0]"


def point(x, y, w=1) -> HPoint:
    return HPoint(Fraction(x), Fraction(y), Fraction(w))


def line_through(p: HPoint, q: HPoint) -> HLine:
    c = _cross(p.coords, q.coords)
    if not any(c):
        raise DegenerateError(f"no unique line through coincident points {p} and {q}")
    return HLine(*c)


def meet(l: HLine, m: HLine) -> HPoint:
    c = _cross(l.coeffs, m.coeffs)
    if not any(c):
        raise DegenerateError(f"coincident lines {l} and {m} have no unique meet")
    return HPoint(*c)


def incident(p: HPoint, l: HLine) -> bool:
    return _dot(p.coords, l.coeffs) == 0


def collinear(p: HPoint, q: HPoint, r: HPoint) -> bool:
    return _dot(p.coords, _cross(q.coords, r.coords)) == 0


def concurrent(l1: HLine, l2: HLine, l3: HLine) -> bool:
    return _dot(l1.coeffs, _cross(l2.coeffs, l3.coeffs)) == 0


@dataclass(frozen=True)
class Triangle:
    v1: HPoint
    v2: HPoint
    v3: HPoint

    def __post_init__(self):
        if collinear(self.v1, self.v2, self.v3):
            raise DegenerateError(f"degenerate triangle {self}")

    @property
    def vertices(self) -> tuple:
        return self.v1, self.v2, self.v3

    def side(self) -> HLine:
        """The line v2v3 opposite the first vertex."""
        return line_through(self.v2, self.v3)

    def dual(self) -> "Triangle":
        """Side lines v2v3, v3v1, v1v2 read as points."""
        v1, v2, v3 = (v.coords for v in self.vertices)
        return Triangle(HPoint(*_cross(v2, v3)), HPoint(*_cross(v3, v1)), HPoint(*_cross(v1, v2)))

    def __str__(self):
        return "[" + ", ".join(str(v) for v in self.vertices) + "]"


def ni(ta: Triangle, tb: Triangle) -> bool:
    return incident(ta.v1, tb.side()) and incident(tb.v1, ta.side())


@dataclass(frozen=True)
class Config:
    O: Triangle
    X: Triangle
    Y: Triangle
    Z: Triangle
    A: Triangle
    Ap: Triangle
    B: Triangle
    Bp: Triangle
    C: Triangle
    Cp: Triangle
    M: Triangle
    Mp: Triangle
    N: Triangle
    Np: Triangle
    S: Triangle
    Sp: Triangle
    P: Triangle
    Q: Triangle
    R: Triangle
    seed: Optional[int] = None
    retries: int = 0

    def triangles(self) -> dict:
        return {name: getattr(self, name) for name in TRIANGLES}


@dataclass
class Conclusion:
    collinear_ok: bool
    concurrent_ok: bool
    o_prime: Optional[Triangle] = None
    witness_ok: bool = False
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.collinear_ok and self.concurrent_ok and self.witness_ok


class _Draw:
    """Seeded source of small rationals, points and lines."""

    def __init__(self, rng: np.random.Generator):
        self.rng = rng

    def rational(self) -> Fraction:
        num = int(self.rng.integers(-COORD_BOUND, COORD_BOUND + 1))
        den = int(self.rng.integers(1, COORD_BOUND + 1))
        return Fraction(num, den)

    def point(self) -> HPoint:
        return HPoint(self.rational(), self.rational(), Fraction(1))

    def on(self, l: HLine) -> HPoint:
        return meet(l, HLine(self.rational(), self.rational(), self.rational()))

    def triangle(self) -> Triangle:
        return Triangle(self.point(), self.point(), self.point())

    def child(self, parent: Triangle) -> Triangle:
        """T with parent ∋ T: T1 on the parent's side line, T3 on line(T2, parent1)."""
        t1 = self.on(parent.side())
        t2 = self.point()
        t3 = self.on(line_through(t2, parent.v1))
        return Triangle(t1, t2, t3)

    def joint(self, t: Triangle, u: Triangle) -> Triangle:
        """V with t ∋ V and u ∋ V: V1 where the side lines meet, V2V3 the line t1u1."""
        side = line_through(t.v1, u.v1)
        return Triangle(meet(t.side(), u.side()), self.on(side), self.on(side))


def _draw_config(draw: _Draw, seed) -> Config:
    steps = {}
    step = "O"
    try:
        steps["O"] = draw.triangle()
        for name in ("X", "Y", "Z"):
            step = name
            steps[name] = draw.child(steps["O"])
        for parent, kids in (("X", ("A", "Ap")), ("Y", ("B", "Bp")), ("Z", ("C", "Cp"))):
            for name in kids:
                step = name
                steps[name] = draw.child(steps[parent])
        for name, (t, u) in (("M", ("A", "B")), ("Mp", ("Ap", "Bp")), ("N", ("A", "C")),
                             ("Np", ("Ap", "Cp")), ("S", ("B", "C")), ("Sp", ("Bp", "Cp")),
                             ("P", ("M", "Mp")), ("Q", ("N", "Np")), ("R", ("S", "Sp"))):
            step = name
            steps[name] = draw.joint(steps[t], steps[u])
    except DegenerateError as exc:
        raise DegenerateError(f"step {display(step)}: {exc}") from exc
    return Config(**steps, seed=seed)


def build_config(seed: int) -> Config:
    """A random configuration satisfying every hypothesis exactly."""
    draw = _Draw(np.random.default_rng(seed))
    last = None
    for retries in range(RETRY_CAP + 1):
        try:
            cfg = _draw_config(draw, seed)
        except DegenerateError as exc:
            last = exc
            logger.debug("seed %d: redraw after %s", seed, exc)
            continue
        broken = [pair for pair, ok in hypotheses(cfg) if not ok]
        if broken:
            raise ConstructionError(f"seed {seed}: construction broke {_pairs(broken)}")
        if retries:
            logger.info("seed %d: %d degenerate draw(s) rejected", seed, retries)
        return replace(cfg, retries=retries)
    raise ConstructionError(f"seed {seed}: no valid configuration after {RETRY_CAP} retries, last at {last}")


def hypotheses(cfg: Config) -> list:
    """((left, right), holds) for every relation of the hypothesis list."""
    return [((a, b), ni(getattr(cfg, a), getattr(cfg, b))) for a, b in HYPOTHESES]


def _pairs(pairs) -> str:
    return ", ".join(f"{display(a)} ∋ {display(b)}" for a, b in pairs)


def _common_point(lines) -> Optional[HPoint]:
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            try:
                return meet(lines[i], lines[j])
            except DegenerateError:
                continue
    return None


def _common_line(points) -> Optional[HLine]:
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            try:
                return line_through(points[i], points[j])
            except DegenerateError:
                continue
    return None


_PROBES = (HLine(1, 0, 0), HLine(0, 1, 0), HLine(0, 0, 1), HLine(1, 1, 1), HLine(1, -1, 2))


def _witness(first: HPoint, side: HLine) -> Optional[Triangle]:
    """A triangle with vertex `first` and the other two vertices on `side`."""
    if incident(first, side):
        return None
    on_side = []
    for probe in _PROBES:
        try:
            p = meet(side, probe)
        except DegenerateError:
            continue
        if p not in on_side:
            on_side.append(p)
        if len(on_side) == 2:
            return Triangle(first, *on_side)
    return None


def verify_conclusion(cfg: Config) -> Conclusion:
    firsts = [cfg.P.v1, cfg.Q.v1, cfg.R.v1]
    sides = [cfg.P.side(), cfg.Q.side(), cfg.R.side()]
    result = Conclusion(collinear(*firsts), concurrent(*sides))
    if not (result.collinear_ok and result.concurrent_ok):
        return result
    line, centre = _common_line(firsts), _common_point(sides)
    if line is None or centre is None:
        result.note = "P1, Q1, R1 coincide or the three side lines coincide"
        return result
    o_prime = _witness(centre, line)
    if o_prime is None:
        result.note = f"common point {centre} lies on the common line {line}"
        return result
    result.o_prime = o_prime
    result.witness_ok = all(ni(t, o_prime) for t in (cfg.P, cfg.Q, cfg.R))
    return result


def perturbed(cfg: Config) -> Config:
    """Negative control: P1 moved off the line Q1R1."""
    x, y, w = cfg.P.v1.coords
    for k in range(1, 16):
        for candidate in (HPoint(x + k * w, y, w), HPoint(x, y + k * w, w), HPoint(x, y, w + k)):
            if collinear(candidate, cfg.Q.v1, cfg.R.v1) or collinear(candidate, cfg.P.v2, cfg.P.v3):
                continue
            return replace(cfg, P=Triangle(candidate, cfg.P.v2, cfg.P.v3))
    raise DegenerateError(f"cannot move P1 off the line through Q1 = {cfg.Q.v1} and R1 = {cfg.R.v1}")


def dual(cfg: Config) -> Config:
    """Every triangle replaced by its dual; hypotheses and conclusion carry over."""
    return replace(cfg, **{name: t.dual() for name, t in cfg.triangles().items()})


def certificate(cfg: Config, conclusion: Optional[Conclusion] = None) -> dict:
    """All coordinates as exact fraction strings."""
    out = {
        "seed": cfg.seed,
        "retries": cfg.retries,
        "triangles": {display(name): [[str(c) for c in v.coords] for v in t.vertices]
                      for name, t in cfg.triangles().items()},
    }
    if conclusion is not None:
        out["collinear_ok"] = conclusion.collinear_ok
        out["concurrent_ok"] = conclusion.concurrent_ok
        out["note"] = conclusion.note
    return out


def suite(trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED, progress: bool = True) -> list:
    """Build `trials` configurations from seeds seed, seed+1, ... and check each."""
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    seeds = list(range(seed, seed + trials))
    hyp_fail = concl_fail = control_fail = dual_fail = None
    cert = None
    retries = []
    for s in tqdm(seeds, desc="incidence", unit="config", disable=not progress):
        cfg = build_config(s)
        retries.append(cfg.retries)
        broken = [pair for pair, ok in hypotheses(cfg) if not ok]
        if broken and hyp_fail is None:
            hyp_fail = f"seed {s}: {_pairs(broken)} fail"

        conclusion = verify_conclusion(cfg)
        if not conclusion.holds and concl_fail is None:
            concl_fail = (f"seed {s}: collinear={conclusion.collinear_ok} concurrent={conclusion.concurrent_ok} "
                          f"witness={conclusion.witness_ok} {conclusion.note}".rstrip())
            cert = certificate(cfg, conclusion)

        control = perturbed(cfg)
        if verify_conclusion(control).collinear_ok and control_fail is None:
            control_fail = f"seed {s}: perturbed P1 = {control.P.v1} still collinear with Q1, R1"

        twin = dual(cfg)
        if dual_fail is None:
            if not verify_conclusion(twin).holds:
                dual_fail = f"seed {s}: dual configuration fails the conclusion"
            elif verify_conclusion(dual(control)).holds:
                dual_fail = f"seed {s}: dual of the perturbed configuration passes"
            elif dual(twin).triangles() != cfg.triangles():
                dual_fail = f"seed {s}: dualizing twice changed the configuration"

    logger.info("incidence: %d configurations, %d degenerate draws rejected", trials, sum(retries))
    common = {"seeds": [seeds[0], seeds[-1]]}
    conclusion_report = verdict("incidence_conclusion",
                                "P ∋ O′, Q ∋ O′, R ∋ O′ for some O′ (P1Q1R1 collinear, P2P3, Q2Q3, R2R3 concurrent)",
                                concl_fail, trials, str, **common)
    if cert is not None:
        conclusion_report.details["certificate"] = cert
    return [
        verdict("incidence_hypotheses", f"all {len(HYPOTHESES)} ∋ relations of the construction hold exactly",
                hyp_fail, trials * len(HYPOTHESES), str, max_retries=max(retries), **common),
        conclusion_report,
        verdict("incidence_negative_control", "moving P1 off Q1R1 breaks the conclusion",
                control_fail, trials, str, **common),
        verdict("incidence_duality", "the dual configuration behaves like the original; dual∘dual = id",
                dual_fail, trials, str, **common),
    ]


def failing_certificate(reports: list) -> Optional[dict]:
    for report in reports:
        if "certificate" in report.details:
            return report.details["certificate"]
    return None
