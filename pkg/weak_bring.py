"""
Weak B-ring axioms as an executable checker over finite operation tables.

A candidate is a 6-tuple (X, v, 0, ., 1, ^) on the carrier X = {0, ..., m-1},
given as raw tables. check_axioms() examines the eleven axioms exhaustively and
never assumes any of them, so it refutes non-examples just as readily as it
confirms the twisted pair structure on A x A:

    (a, b) v (c, d) = (a v c, b v d)
    (a, b) ^ (c, d) = (a ^ c, (a ^ d) v (b ^ c) v (b ^ d))
    (a, b)^         = (a^, b^)

with zero (0, 0), unit (1, 0) and h = (0, 1), which satisfies h ^ h = h.

Table file format (whitespace separated decimal indices):

    m zero one
    m rows of the join table
    m rows of the product table
    one row with the hat table

Usage:
    python run_checks.py boolean --import-table samples/z4_ring.txt
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from boolalg import BoolAlgebra, DomainError, Element, require_atoms
from reports import CheckReport, first_failure, verdict

logger = logging.getLogger(__name__)

MAX_CARRIER = 256
MAX_PAIR_ATOMS = 3
# Upper bound on the cells of one vectorised block in the m**3 scans.
BLOCK_CELLS = 1 << 20
AXIOM_COUNT = 11


class TableFormatError(ValueError):
    """Malformed, out-of-range or oversized operation tables."""


@dataclass
class BRingCandidate:
    m: int
    join_table: np.ndarray
    prod_table: np.ndarray
    hat_table: np.ndarray
    zero_index: int
    one_index: int
    name: str = "candidate"
    labels: Optional[list] = field(default=None, repr=False)

    def __post_init__(self):
        if not isinstance(self.m, (int, np.integer)) or not 1 <= self.m <= MAX_CARRIER:
            raise TableFormatError(f"carrier size must be in 1..{MAX_CARRIER}, got {self.m!r}")
        m = int(self.m)
        for attr, shape in (("join_table", (m, m)), ("prod_table", (m, m)), ("hat_table", (m,))):
            table = np.asarray(getattr(self, attr), dtype=np.int64)
            if table.shape != shape:
                raise TableFormatError(f"{attr} has shape {table.shape}, expected {shape}")
            if table.size and (table.min() < 0 or table.max() >= m):
                raise TableFormatError(f"{attr} has entries outside 0..{m - 1}")
            setattr(self, attr, table)
        for attr in ("zero_index", "one_index"):
            if not 0 <= getattr(self, attr) < m:
                raise TableFormatError(f"{attr}={getattr(self, attr)} outside 0..{m - 1}")
        if self.labels is not None and len(self.labels) != m:
            raise TableFormatError(f"{len(self.labels)} labels for a carrier of size {m}")

    def label(self, index) -> str:
        index = int(index)
        return self.labels[index] if self.labels is not None else str(index)


@dataclass(frozen=True)
class PairElement:
    a: Element
    b: Element

    def __post_init__(self):
        self.a._same(self.b)

    @property
    def algebra(self) -> BoolAlgebra:
        return self.a.algebra

    @property
    def index(self) -> int:
        return pair_index(self.algebra, self.a.mask, self.b.mask)

    def _same(self, other) -> BoolAlgebra:
        if not isinstance(other, PairElement):
            raise DomainError(f"expected a PairElement, got {type(other).__name__}")
        return self.a._same(other.a)

    def __or__(self, other):
        return pair_join(self, other)

    def __and__(self, other):
        return twisted_meet(self, other)

    def __invert__(self):
        return pair_hat(self)

    def __str__(self):
        return f"({self.a},{self.b})"


def pair(alg: BoolAlgebra, a: int, b: int) -> PairElement:
    return PairElement(alg.element(a), alg.element(b))


def h(alg: BoolAlgebra) -> PairElement:
    return pair(alg, 0, alg.full)


def unit(alg: BoolAlgebra) -> PairElement:
    return pair(alg, alg.full, 0)


def pair_index(alg: BoolAlgebra, a, b):
    return a * alg.size + b


def pair_at(alg: BoolAlgebra, index: int) -> PairElement:
    return pair(alg, index // alg.size, index % alg.size)


def twisted_masks(a, b, c, d):
    """(a, b) ^ (c, d) on masks or mask arrays."""
    return a & c, (a & d) | (b & c) | (b & d)


def twisted_meet(p: PairElement, q: PairElement) -> PairElement:
    alg = p._same(q)
    return pair(alg, *twisted_masks(p.a.mask, p.b.mask, q.a.mask, q.b.mask))


def pair_join(p: PairElement, q: PairElement) -> PairElement:
    alg = p._same(q)
    return pair(alg, p.a.mask | q.a.mask, p.b.mask | q.b.mask)


def pair_hat(p: PairElement) -> PairElement:
    alg = p.algebra
    return pair(alg, alg.complement_masks(p.a.mask), alg.complement_masks(p.b.mask))


def _pair_grid(alg):
    masks = alg.masks()
    a, b = masks[:, None], masks[None, :]
    return np.broadcast_to(a, (alg.size, alg.size)).ravel(), np.broadcast_to(b, (alg.size, alg.size)).ravel()


def build_pair_ring(alg: BoolAlgebra) -> BRingCandidate:
    """Operation tables of (A x A, v, ^, (0,0), (1,0), ^) indexed by a * 2^n + b."""
    require_atoms(alg, MAX_PAIR_ATOMS, "build_pair_ring")
    a, b = _pair_grid(alg)
    pa, pb = a[:, None], b[:, None]
    qa, qb = a[None, :], b[None, :]
    join_table = pair_index(alg, pa | qa, pb | qb)
    prod_table = pair_index(alg, *twisted_masks(pa, pb, qa, qb))
    hat_table = pair_index(alg, alg.complement_masks(a), alg.complement_masks(b))
    labels = [f"({alg.fmt(x)},{alg.fmt(y)})" for x, y in zip(a, b)]
    return BRingCandidate(alg.size ** 2, join_table, prod_table, hat_table,
                          zero_index=pair_index(alg, 0, 0), one_index=pair_index(alg, alg.full, 0),
                          name=f"pair_ring[n={alg.atom_count}]", labels=labels)


def boolean_algebra_ring(alg: BoolAlgebra) -> BRingCandidate:
    """(A, v, 0, ^, 1, complement) as a candidate."""
    if alg.size > MAX_CARRIER:
        raise TableFormatError(f"carrier {alg.size} exceeds {MAX_CARRIER}")
    masks = alg.masks()
    return BRingCandidate(alg.size,
                          alg.join_masks(masks[:, None], masks[None, :]),
                          alg.meet_masks(masks[:, None], masks[None, :]),
                          alg.complement_masks(masks), 0, alg.full,
                          name=f"boolean_algebra[n={alg.atom_count}]",
                          labels=[alg.fmt(x) for x in masks])


def integers_mod(m: int) -> BRingCandidate:
    """(Z/m, +, 0, *, 1, x -> -x) as a candidate."""
    idx = np.arange(m, dtype=np.int64)
    return BRingCandidate(m, (idx[:, None] + idx[None, :]) % m, (idx[:, None] * idx[None, :]) % m,
                          (-idx) % m, 0, 1 % m, name=f"integers_mod[m={m}]")


@dataclass
class AxiomReport:
    candidate: str
    entries: list

    def __post_init__(self):
        if len(self.entries) != AXIOM_COUNT:
            raise ValueError(f"expected {AXIOM_COUNT} axiom entries, got {len(self.entries)}")

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def axiom(self, number: int) -> CheckReport:
        return self.entries[number - 1]

    def failed(self) -> list:
        return [number for number, entry in enumerate(self.entries, 1) if not entry.passed]

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class Axiom:
    number: int
    ref: str
    arity: int
    lhs: Callable
    rhs: Callable
    as_printed: bool = False


def _axioms(J, P, H, zero, one):
    return [
        Axiom(1, "(x ∨ y) ∨ z = x ∨ (y ∨ z)", 3,
              lambda x, y, z: (J[J[x, y], z],), lambda x, y, z: (J[x, J[y, z]],)),
        Axiom(2, "x ∨ y = y ∨ x", 2, lambda x, y, z: (J[x, y],), lambda x, y, z: (J[y, x],)),
        Axiom(3, "x ∨ 0 = x", 1, lambda x, y, z: (J[x, zero],), lambda x, y, z: (x,)),
        Axiom(4, "(x · y) · z = x · (y · z)", 3,
              lambda x, y, z: (P[P[x, y], z],), lambda x, y, z: (P[x, P[y, z]],)),
        Axiom(5, "x · 1 = x = 1 · x", 1, lambda x, y, z: (P[x, one], P[one, x]), lambda x, y, z: (x, x)),
        Axiom(6, "x · 0 = 0 = 0 · x", 1,
              lambda x, y, z: (P[x, zero], P[zero, x]), lambda x, y, z: (zero + 0 * x, zero + 0 * x)),
        Axiom(7, "x · (y ∨ z) = (x · y) ∨ (x · z)", 3,
              lambda x, y, z: (P[x, J[y, z]],), lambda x, y, z: (J[P[x, y], P[x, z]],)),
        Axiom(8, "(x ∨ y) · z = (x · z) ∨ (y · z)", 3,
              lambda x, y, z: (P[J[x, y], z],), lambda x, y, z: (J[P[x, z], P[y, z]],)),
        Axiom(9, "x̂̂ = x", 1, lambda x, y, z: (H[H[x]],), lambda x, y, z: (x,)),
        Axiom(10, "x ∨ x̂ = x̂ ∨ x", 1, lambda x, y, z: (J[x, H[x]],), lambda x, y, z: (J[H[x], x],),
              as_printed=True),
        Axiom(11, "x · x̂ = x̂ · x", 1, lambda x, y, z: (P[x, H[x]],), lambda x, y, z: (P[H[x], x],),
              as_printed=True),
    ]


def _differs(lhs, rhs):
    out = np.zeros((), dtype=bool)
    for u, v in zip(lhs, rhs):
        out = out | (np.asarray(u) != np.asarray(v))
    return out


def scan(m: int, arity: int, lhs: Callable, rhs: Callable):
    """First (x, y, z) in lexicographic order where lhs and rhs differ.

    Returns (witness or None, cases). Blocks of x keep m**3 scans in memory.
    """
    idx = np.arange(m, dtype=np.int64)
    y, z = idx[None, :, None], idx[None, None, :]
    rows = max(1, BLOCK_CELLS // (m ** (arity - 1)))
    for start in range(0, m, rows):
        x = idx[start:start + rows, None, None]
        mismatch = np.broadcast_to(_differs(lhs(x, y, z), rhs(x, y, z)),
                                   (len(x),) + (m,) * (arity - 1) + (1,) * (3 - arity))
        witness = first_failure(mismatch)
        if witness is not None:
            return (start + witness[0],) + witness[1:arity], m ** arity
    return None, m ** arity


def check_axioms(cand: BRingCandidate) -> AxiomReport:
    J, P, H = cand.join_table, cand.prod_table, cand.hat_table
    entries = []
    for axiom in _axioms(J, P, H, cand.zero_index, cand.one_index):
        witness, cases = scan(cand.m, axiom.arity, axiom.lhs, axiom.rhs)

        def describe(w, axiom=axiom):
            padded = tuple(w) + (0,) * (3 - len(w))
            values = ", ".join(f"{v}={cand.label(i)}" for v, i in zip("xyz", w))
            lhs = "/".join(cand.label(v) for v in axiom.lhs(*padded))
            rhs = "/".join(cand.label(v) for v in axiom.rhs(*padded))
            return f"{cand.name} {values}: {lhs} != {rhs}"

        details = {"axiom": axiom.number}
        if axiom.as_printed:
            details["note"] = "as-printed"
        entries.append(verdict(f"{cand.name}:axiom_{axiom.number:02d}", axiom.ref, witness, cases,
                               describe, **details))
    report = AxiomReport(cand.name, entries)
    logger.debug("%s: axioms failing %s", cand.name, report.failed() or "none")
    return report


def check_commutative_product(cand: BRingCandidate) -> CheckReport:
    """x · y = y · x (not an axiom; holds for the pair ring)."""
    P = cand.prod_table
    witness, cases = scan(cand.m, 2, lambda x, y, z: (P[x, y],), lambda x, y, z: (P[y, x],))
    return verdict(f"{cand.name}:product_commutative", "x · y = y · x", witness, cases,
                   lambda w: f"x={cand.label(w[0])}, y={cand.label(w[1])}")


def check_decomposition(alg: BoolAlgebra) -> CheckReport:
    """(a, b) = (a, 0) v [h ^ (b, 0)] = a v hb for every pair."""
    require_atoms(alg, MAX_PAIR_ATOMS, "check_decomposition")
    a, b = _pair_grid(alg)
    ha, hb = twisted_masks(0, alg.full, b, 0)
    mismatch = ((a | ha) != a) | ((0 | hb) != b)
    witness = first_failure(mismatch)

    def describe(w):
        p = pair_at(alg, w[0])
        lhs = pair(alg, p.a.mask, 0) | (h(alg) & pair(alg, p.b.mask, 0))
        return f"n={alg.atom_count} (a,b)={p}: a v hb = {lhs}"

    return verdict(f"pair_decomposition[n={alg.atom_count}]", "(a, b) = (a, 0) ∨ [(0, 1) ∧ (b, 0)] = a ∨ hb",
                   witness, len(a), describe)


def suite(alg: BoolAlgebra) -> list:
    if alg.atom_count > MAX_PAIR_ATOMS:
        logger.info("n=%d: pair ring checks skipped above %d atoms", alg.atom_count, MAX_PAIR_ATOMS)
        return []
    ring = build_pair_ring(alg)
    logger.info("weak B-ring checks on carrier of size %d", ring.m)
    return list(check_axioms(ring)) + [check_commutative_product(ring), check_decomposition(alg)]


def candidate_suite(cand: BRingCandidate) -> list:
    return list(check_axioms(cand))


def read_table(path) -> BRingCandidate:
    """Header 'm zero one', m join rows, m product rows, one hat row; m integers per row."""
    try:
        with open(path) as fh:
            rows = [line.split() for line in fh if line.strip()]
    except OSError as exc:
        raise TableFormatError(f"{path}: {exc}") from exc
    try:
        rows = [[int(t) for t in row] for row in rows]
    except ValueError as exc:
        raise TableFormatError(f"{path}: non-integer entry ({exc})") from exc
    if not rows or len(rows[0]) != 3:
        raise TableFormatError(f"{path}: first line must be the header 'm zero one'")
    m, zero, one = rows[0]
    if not 1 <= m <= MAX_CARRIER:
        raise TableFormatError(f"{path}: carrier size must be in 1..{MAX_CARRIER}, got {m}")
    body = rows[1:]
    if len(body) != 2 * m + 1:
        raise TableFormatError(f"{path}: expected {2 * m + 1} table rows for m={m}, got {len(body)}")
    for lineno, row in enumerate(body, 2):
        if len(row) != m:
            raise TableFormatError(f"{path}: table row {lineno} has {len(row)} entries, expected {m}")
    body = np.asarray(body, dtype=np.int64)
    join_table, prod_table, hat_table = body[:m], body[m:2 * m], body[2 * m]
    logger.debug("read %d-element table from %s", m, path)
    return BRingCandidate(m, join_table, prod_table, hat_table, zero, one, name=f"table[{os.path.basename(str(path))}]")


def write_table(cand: BRingCandidate, path) -> None:
    def row(values):
        return " ".join(str(int(v)) for v in values)

    lines = [f"{cand.m} {cand.zero_index} {cand.one_index}"]
    lines += [row(r) for r in cand.join_table]
    lines += [row(r) for r in cand.prod_table]
    lines.append(row(cand.hat_table))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
