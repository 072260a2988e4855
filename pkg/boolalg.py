"""
Finite Boolean algebras as powerset algebras on n atoms.

Every finite Boolean algebra is isomorphic to the powerset of its atoms, so an
element is stored as an atom mask: bit i set means atom i lies below it. Join,
meet and complement are then |, & and XOR with the full mask.

The mask-level helpers on BoolAlgebra accept plain ints as well as numpy
integer arrays. The exhaustive checks in triple_trig, weak_bring, bring_euler
and braid run on whole arrays of masks at once; the Element API on top is what
tests and counterexample texts use.

Usage:
    python run_checks.py boolean --atoms 4

Example:
    >>> alg = BoolAlgebra(2)
    >>> str(join(alg.element(0b01), alg.element(0b10)))
    '11'
"""

import logging
from dataclasses import dataclass

import numpy as np

from reports import first_failure, verdict

logger = logging.getLogger(__name__)

MAX_ATOMS = 16
# Exhaustive law checks run over size**3 triples.
MAX_LAW_ATOMS = 4


class DomainError(ValueError):
    """Operands from different algebras, or a mask outside the carrier."""


@dataclass(frozen=True)
class BoolAlgebra:
    atom_count: int

    def __post_init__(self):
        if not isinstance(self.atom_count, (int, np.integer)) or not 1 <= self.atom_count <= MAX_ATOMS:
            raise DomainError(f"atom_count must be in 1..{MAX_ATOMS}, got {self.atom_count!r}")

    @property
    def size(self) -> int:
        return 1 << self.atom_count

    @property
    def full(self) -> int:
        return self.size - 1

    def join_masks(self, x, y):
        return x | y

    def meet_masks(self, x, y):
        return x & y

    def complement_masks(self, x):
        return x ^ self.full

    def top_like(self, x):
        """The top mask, shaped like x."""
        return x | self.full

    def bottom_like(self, x):
        return x & 0

    def masks(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)

    def element(self, mask: int) -> "Element":
        return Element(self, int(mask))

    def fmt(self, mask) -> str:
        return format(int(mask), f"0{self.atom_count}b")


@dataclass(frozen=True, eq=False)
class Element:
    algebra: BoolAlgebra
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < self.algebra.size:
            raise DomainError(f"mask {self.mask} outside algebra with {self.algebra.atom_count} atoms")

    def _same(self, other: "Element") -> BoolAlgebra:
        if not isinstance(other, Element):
            raise DomainError(f"expected an Element, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise DomainError(
                f"elements from different algebras ({self.algebra.atom_count} vs {other.algebra.atom_count} atoms)")
        return self.algebra

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._same(other)
        return self.mask == other.mask

    def __hash__(self):
        return hash((self.algebra.atom_count, self.mask))

    def __or__(self, other):
        return join(self, other)

    def __and__(self, other):
        return meet(self, other)

    def __invert__(self):
        return complement(self)

    def atoms(self) -> list:
        return [i for i in range(self.algebra.atom_count) if self.mask >> i & 1]

    def __str__(self):
        return self.algebra.fmt(self.mask)

    def __repr__(self):
        return f"Element({self}, n={self.algebra.atom_count})"


def join(x: Element, y: Element) -> Element:
    alg = x._same(y)
    return Element(alg, alg.join_masks(x.mask, y.mask))


def meet(x: Element, y: Element) -> Element:
    alg = x._same(y)
    return Element(alg, alg.meet_masks(x.mask, y.mask))


def complement(x: Element) -> Element:
    return Element(x.algebra, x.algebra.complement_masks(x.mask))


def top(alg: BoolAlgebra) -> Element:
    return Element(alg, alg.full)


def bottom(alg: BoolAlgebra) -> Element:
    return Element(alg, 0)


def elements(alg: BoolAlgebra) -> list:
    """All 2^n elements in ascending mask order."""
    return [Element(alg, mask) for mask in range(alg.size)]


def require_atoms(alg: BoolAlgebra, limit: int, what: str) -> None:
    if alg.atom_count > limit:
        raise DomainError(f"{what} is exhaustive and supports at most {limit} atoms, got {alg.atom_count}")


# Law name -> (arity, lhs, rhs) over index arrays, given the operation tables.
def _laws(join_t, meet_t, comp_t, top_i, bottom_i):
    return [
        ("join associative", 3, lambda x, y, z: join_t[join_t[x, y], z], lambda x, y, z: join_t[x, join_t[y, z]]),
        ("meet associative", 3, lambda x, y, z: meet_t[meet_t[x, y], z], lambda x, y, z: meet_t[x, meet_t[y, z]]),
        ("join commutative", 2, lambda x, y, z: join_t[x, y], lambda x, y, z: join_t[y, x]),
        ("meet commutative", 2, lambda x, y, z: meet_t[x, y], lambda x, y, z: meet_t[y, x]),
        ("absorption x v (x ^ y) = x", 2, lambda x, y, z: join_t[x, meet_t[x, y]], lambda x, y, z: x + 0 * y),
        ("absorption x ^ (x v y) = x", 2, lambda x, y, z: meet_t[x, join_t[x, y]], lambda x, y, z: x + 0 * y),
        ("meet distributes over join", 3,
         lambda x, y, z: meet_t[x, join_t[y, z]], lambda x, y, z: join_t[meet_t[x, y], meet_t[x, z]]),
        ("join distributes over meet", 3,
         lambda x, y, z: join_t[x, meet_t[y, z]], lambda x, y, z: meet_t[join_t[x, y], join_t[x, z]]),
        ("De Morgan for join", 2, lambda x, y, z: comp_t[join_t[x, y]], lambda x, y, z: meet_t[comp_t[x], comp_t[y]]),
        ("De Morgan for meet", 2, lambda x, y, z: comp_t[meet_t[x, y]], lambda x, y, z: join_t[comp_t[x], comp_t[y]]),
        ("x v x^ = 1", 1, lambda x, y, z: join_t[x, comp_t[x]], lambda x, y, z: top_i + 0 * x),
        ("x ^ x^ = 0", 1, lambda x, y, z: meet_t[x, comp_t[x]], lambda x, y, z: bottom_i + 0 * x),
        ("x v 0 = x", 1, lambda x, y, z: join_t[x, bottom_i], lambda x, y, z: x),
        ("x ^ 1 = x", 1, lambda x, y, z: meet_t[x, top_i], lambda x, y, z: x),
    ]


def check_boolean_tables(name: str, ref: str, join_t, meet_t, comp_t, top_i: int, bottom_i: int,
                         label=str):
    """Check the Boolean-algebra laws on operation tables indexed 0..m-1.

    `label` turns an index into display text for the counterexample.
    """
    m = len(comp_t)
    idx = np.arange(m)
    x, y, z = idx[:, None, None], idx[None, :, None], idx[None, None, :]
    cases = 0
    for law, arity, lhs, rhs in _laws(join_t, meet_t, comp_t, top_i, bottom_i):
        # Unused variables broadcast away, so the grid has m**arity cells.
        mismatch = np.asarray(lhs(x, y, z) != rhs(x, y, z))
        cases += mismatch.size
        witness = first_failure(mismatch)
        if witness is not None:
            text = f"{law}: " + ", ".join(f"{v}={label(i)}" for v, i in zip("xyz", witness[:arity]))
            return verdict(name, ref, witness, cases, lambda _: text)
    return verdict(name, ref, None, cases, str)


def check_laws(alg: BoolAlgebra):
    """Associativity, commutativity, absorption, distributivity, De Morgan and
    complement laws over every element (triples for the 3-variable laws)."""
    require_atoms(alg, MAX_LAW_ATOMS, "check_laws")
    masks = alg.masks()
    join_t = alg.join_masks(masks[:, None], masks[None, :])
    meet_t = alg.meet_masks(masks[:, None], masks[None, :])
    comp_t = alg.complement_masks(masks)
    logger.debug("law check over %d elements", alg.size)
    return check_boolean_tables(f"boolean_algebra_laws[n={alg.atom_count}]",
                                "(A, ∨, ∧, 0, 1, ˆ) is a Boolean algebra",
                                join_t, meet_t, comp_t, alg.full, 0, label=alg.fmt)
