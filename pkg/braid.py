"""
Braid condition checker for finite maps phi: X x X -> X x X.

With phi12(x, y, z) = (phi(x, y), z) and phi23(x, y, z) = (x, phi(y, z)), phi
is a solution when

    phi12 phi23 phi12 = phi23 phi12 phi23

on every triple. Maps are stored as explicit tables and the checker never
trusts the constructor that produced them. Constructors cover the complement
map (x, y) -> (y^, y), the one-parameter family
(a, b) -> (a v xb, (x^ v xa) b) with its blend form x^ Id v P x, the map
P(a, b) = (a v b, ab), identity and swap.

Map file format:

    m
    i j -> p q        (one line per input pair, m*m lines)

Usage:
    python run_checks.py braid --atoms 2
    python run_checks.py braid --enumerate
    python run_checks.py braid --import-map samples/swap_map.txt
"""

import itertools
import logging
import re
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from boolalg import BoolAlgebra, Element, require_atoms
from reports import CheckReport, first_failure, verdict

logger = logging.getLogger(__name__)

MAX_CARRIER = 512
MAX_FAMILY_ATOMS = 3
BLOCK_CELLS = 1 << 20
ENUMERABLE_CARRIER = 2
# Number of braid solutions among the 256 maps on a 2-element carrier.
SOLUTION_COUNT_M2 = 43

_MAP_LINE = re.compile(r"^\s*(\d+)\s+(\d+)\s*->\s*(\d+)\s+(\d+)\s*$")


class BraidError(ValueError):
    pass


class TableFormatError(BraidError):
    """Malformed square-map table or map file."""


@dataclass(eq=False)
class SquareMapTable:
    m: int
    table: np.ndarray
    labels: Optional[list] = field(default=None, repr=False)

    def __post_init__(self):
        if not isinstance(self.m, (int, np.integer)) or not 1 <= self.m <= MAX_CARRIER:
            raise TableFormatError(f"carrier size must be in 1..{MAX_CARRIER}, got {self.m!r}")
        self.table = np.asarray(self.table, dtype=np.int64)
        if self.table.shape != (self.m, self.m, 2):
            raise TableFormatError(f"table has shape {self.table.shape}, expected ({self.m}, {self.m}, 2)")
        if self.table.min() < 0 or self.table.max() >= self.m:
            raise TableFormatError(f"table has outputs outside 0..{self.m - 1}")

    def __eq__(self, other):
        if not isinstance(other, SquareMapTable):
            return NotImplemented
        return self.m == other.m and np.array_equal(self.table, other.table)

    def __call__(self, i, j):
        return self.table[i, j, 0], self.table[i, j, 1]

    def label(self, index) -> str:
        index = int(index)
        return self.labels[index] if self.labels is not None else str(index)

    def show(self, triple) -> str:
        return "(" + ",".join(self.label(v) for v in triple) + ")"


@dataclass
class BraidVerdict:
    holds: bool
    witness: Optional[tuple] = None
    lhs: Optional[tuple] = None
    rhs: Optional[tuple] = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("a witness is present exactly when the braid condition fails")


def composites(phi: SquareMapTable, x, y, z):
    """Both sides of the braid condition on broadcast index arrays."""
    p, q = phi(x, y)
    r, s = phi(q, z)
    lhs = phi(p, r) + (s,)

    q, r = phi(y, z)
    p, s = phi(x, q)
    rhs = (p,) + phi(s, r)
    return lhs, rhs


def braid_check(phi: SquareMapTable) -> BraidVerdict:
    m = phi.m
    idx = np.arange(m, dtype=np.int64)
    y, z = idx[None, :, None], idx[None, None, :]
    rows = max(1, BLOCK_CELLS // (m * m))
    for start in range(0, m, rows):
        x = idx[start:start + rows, None, None]
        lhs, rhs = composites(phi, x, y, z)
        mismatch = np.zeros((len(x), m, m), dtype=bool)
        for u, v in zip(lhs, rhs):
            mismatch |= u != v
        hit = first_failure(mismatch)
        if hit is not None:
            witness = (start + hit[0], hit[1], hit[2])
            left, right = composites(phi, *witness)
            return BraidVerdict(False, witness, tuple(int(v) for v in left), tuple(int(v) for v in right))
    return BraidVerdict(True)


def _from_masks(alg: BoolAlgebra, f) -> SquareMapTable:
    masks = alg.masks()
    a, b = masks[:, None], masks[None, :]
    p, q = f(a, b)
    shape = (alg.size, alg.size)
    table = np.stack([np.broadcast_to(p, shape), np.broadcast_to(q, shape)], axis=-1)
    return SquareMapTable(alg.size, table, labels=[alg.fmt(v) for v in masks])


def phi_complement(alg: BoolAlgebra) -> SquareMapTable:
    """(x, y) -> (y^, y)"""
    require_atoms(alg, MAX_FAMILY_ATOMS, "phi_complement")
    return _from_masks(alg, lambda a, b: (alg.complement_masks(b), b + 0 * a))


def phi_param(alg: BoolAlgebra, x: Element) -> SquareMapTable:
    """(a, b) -> (a v xb, (x^ v xa) b)"""
    require_atoms(alg, MAX_FAMILY_ATOMS, "phi_param")
    xm, xc = x.mask, alg.complement_masks(x.mask)
    return _from_masks(alg, lambda a, b: (a | (xm & b), (xc | (xm & a)) & b))


def blend(alg: BoolAlgebra, x: Element) -> SquareMapTable:
    """x^ Id v P x, i.e. (x^a, x^b) v (x(a v b), xab)."""
    require_atoms(alg, MAX_FAMILY_ATOMS, "blend")
    xm, xc = x.mask, alg.complement_masks(x.mask)
    return _from_masks(alg, lambda a, b: ((xc & a) | (xm & (a | b)), (xc & b) | (xm & a & b)))


def pair_map(alg: BoolAlgebra) -> SquareMapTable:
    """P(a, b) = (a v b, ab)"""
    require_atoms(alg, MAX_FAMILY_ATOMS, "pair_map")
    return _from_masks(alg, lambda a, b: (a | b, a & b))


def identity(m: int, labels=None) -> SquareMapTable:
    idx = np.arange(m)
    i, j = np.meshgrid(idx, idx, indexing="ij")
    return SquareMapTable(m, np.stack([i, j], axis=-1), labels)


def swap(m: int, labels=None) -> SquareMapTable:
    idx = np.arange(m)
    i, j = np.meshgrid(idx, idx, indexing="ij")
    return SquareMapTable(m, np.stack([j, i], axis=-1), labels)


def _triples(m):
    idx = np.arange(m, dtype=np.int64)
    return idx[:, None, None], idx[None, :, None], idx[None, None, :]


def _compare_composites(phi, expected):
    """First triple where either composite differs from the expected triple of arrays."""
    x, y, z = _triples(phi.m)
    lhs, rhs = composites(phi, x, y, z)
    mismatch = np.zeros((phi.m,) * 3, dtype=bool)
    for side in (lhs, rhs):
        for u, v in zip(side, expected):
            mismatch |= u != v
    return first_failure(mismatch)


def _verdict_text(phi, v: BraidVerdict) -> str:
    return f"{phi.show(v.witness)}: {phi.show(v.lhs)} != {phi.show(v.rhs)}"


def check_complement_map(alg: BoolAlgebra) -> CheckReport:
    """The complement map is a solution and both composites send (x,y,z) to (z, z^, z)."""
    phi = phi_complement(alg)
    found = braid_check(phi)
    z = _triples(phi.m)[2]
    zc = alg.complement_masks(z)
    failure = None
    if not found.holds:
        failure = f"n={alg.atom_count} {_verdict_text(phi, found)}"
    else:
        hit = _compare_composites(phi, (z, zc, z))
        if hit is not None:
            lhs, rhs = composites(phi, *hit)
            failure = f"n={alg.atom_count} {phi.show(hit)}: composites {phi.show(lhs)}, {phi.show(rhs)} not (z,ẑ,z)"
    return verdict(f"braid_complement_map[n={alg.atom_count}]", "(x, y) ↦ (C_B(y), S_B(y)) satisfies φ¹²φ²³φ¹² = φ²³φ¹²φ²³",
                   failure, phi.m ** 3, str)


def _closed_form(alg, xm, a, b, c):
    """(a v x(b v c), x^b v xab v xac v xbc, x^c v xabc)"""
    xc = alg.complement_masks(xm)
    return (a | (xm & (b | c)),
            (xc & b) | (xm & a & b) | (xm & a & c) | (xm & b & c),
            (xc & c) | (xm & a & b & c))


def check_parametrised_family(alg: BoolAlgebra) -> CheckReport:
    """Every member of the parametrised family is a solution, and both
    composites agree with the closed form, for every parameter x."""
    require_atoms(alg, MAX_FAMILY_ATOMS, "check_parametrised_family")
    failure = None
    cases = 0
    for x in alg.masks():
        phi = phi_param(alg, alg.element(x))
        cases += phi.m ** 3
        found = braid_check(phi)
        if not found.holds:
            failure = f"n={alg.atom_count} x={alg.fmt(x)} {_verdict_text(phi, found)}"
            break
        a, b, c = _triples(phi.m)
        hit = _compare_composites(phi, _closed_form(alg, int(x), a, b, c))
        if hit is not None:
            expected = tuple(int(v) for v in _closed_form(alg, int(x), *hit))
            failure = f"n={alg.atom_count} x={alg.fmt(x)} {phi.show(hit)}: closed form gives {phi.show(expected)}"
            break
    return verdict(f"braid_parametrised_family[n={alg.atom_count}]",
                   "(a, b) ↦ (a ∨ xb, (x̂ ∨ xa)b); composites = (a ∨ x(b ∨ c), x̂b ∨ xab ∨ xac ∨ xbc, x̂c ∨ xabc)",
                   failure, cases, str, parameters=alg.size)


def check_blend(alg: BoolAlgebra) -> CheckReport:
    """blend(x) = phi_param(x) for all x; x = 0 gives Id and x = 1 gives P."""
    require_atoms(alg, MAX_FAMILY_ATOMS, "check_blend")
    failure = None
    for x in alg.masks():
        if blend(alg, alg.element(x)) != phi_param(alg, alg.element(x)):
            failure = f"n={alg.atom_count} x={alg.fmt(x)}: blend table differs from the parametrised map"
            break
    if failure is None and phi_param(alg, alg.element(0)) != identity(alg.size):
        failure = f"n={alg.atom_count} x=0: map is not the identity"
    if failure is None and phi_param(alg, alg.element(alg.full)) != pair_map(alg):
        failure = f"n={alg.atom_count} x=1: map is not P(a,b) = (a ∨ b, ab)"
    return verdict(f"braid_blend_form[n={alg.atom_count}]", "φ = C_B(x) Id ∨ P S_B(x)",
                   failure, alg.size * alg.size ** 2, str)


def check_map(phi: SquareMapTable, name: str = "imported_map") -> CheckReport:
    found = braid_check(phi)
    return verdict(f"braid_{name}[m={phi.m}]", "φ¹²φ²³φ¹² = φ²³φ¹²φ²³",
                   None if found.holds else _verdict_text(phi, found), phi.m ** 3, str)


def enumerate_solutions(m: int):
    """All braid solutions among the (m*m)**(m*m) maps on {0..m-1}, m = 2 only.

    Candidates run in lexicographic order of their output lists, input (0,0)
    first, so the returned list is stable.
    """
    if m != ENUMERABLE_CARRIER:
        raise BraidError(f"exhaustive enumeration supports m = {ENUMERABLE_CARRIER} only, got {m}")
    cells = m * m
    solutions = []
    for outputs in itertools.product(range(cells), repeat=cells):
        codes = np.asarray(outputs).reshape(m, m)
        phi = SquareMapTable(m, np.stack([codes // m, codes % m], axis=-1))
        if braid_check(phi).holds:
            solutions.append(phi)
    logger.info("%d of %d maps on m=%d are braid solutions", len(solutions), cells ** cells, m)
    return len(solutions), solutions


def check_enumeration() -> CheckReport:
    count, solutions = enumerate_solutions(ENUMERABLE_CARRIER)
    failure = None
    if count != SOLUTION_COUNT_M2:
        failure = f"found {count} solutions on m=2, expected {SOLUTION_COUNT_M2}"
    elif identity(2) not in solutions or swap(2) not in solutions:
        failure = "identity or swap missing from the m=2 solutions"
    return verdict("braid_enumeration[m=2]", f"{SOLUTION_COUNT_M2} solutions among 256 maps on a 2-element set",
                   failure, 256, str, solutions=count)


def suite(alg: BoolAlgebra) -> list:
    logger.info("braid checks on %d-element carrier", alg.size)
    return [check_complement_map(alg), check_parametrised_family(alg), check_blend(alg)]


def read_map(path) -> SquareMapTable:
    with open(path) as fh:
        lines = [line for line in (raw.strip() for raw in fh) if line and not line.startswith("#")]
    if not lines:
        raise TableFormatError(f"{path}: empty map file")
    try:
        m = int(lines[0])
    except ValueError as exc:
        raise TableFormatError(f"{path}: first line must be the carrier size") from exc
    if not 1 <= m <= MAX_CARRIER:
        raise TableFormatError(f"{path}: carrier size must be in 1..{MAX_CARRIER}, got {m}")
    table = np.full((m, m, 2), -1, dtype=np.int64)
    for lineno, line in enumerate(lines[1:], 2):
        match = _MAP_LINE.match(line)
        if match is None:
            raise TableFormatError(f"{path}:{lineno}: expected 'i j -> p q', got {line!r}")
        i, j, p, q = (int(g) for g in match.groups())
        if max(i, j, p, q) >= m:
            raise TableFormatError(f"{path}:{lineno}: index outside 0..{m - 1}")
        if table[i, j, 0] >= 0:
            raise TableFormatError(f"{path}:{lineno}: input ({i}, {j}) given twice")
        table[i, j] = (p, q)
    missing = np.argwhere(table[:, :, 0] < 0)
    if len(missing):
        raise TableFormatError(f"{path}: no output for input {tuple(int(v) for v in missing[0])}")
    return SquareMapTable(m, table)


def write_map(phi: SquareMapTable, path) -> None:
    lines = [str(phi.m)]
    for i in range(phi.m):
        for j in range(phi.m):
            p, q = phi(i, j)
            lines.append(f"{i} {j} -> {p} {q}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
