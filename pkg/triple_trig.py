"""
Exponential, cosine and sine on the product algebra B = A x A x A.

For X = (a, b, c):

    e^X    = (a^, b^, 1)
    cos(X) = (1, b^, c^)
    sin(X) = (0, 0, c)

with J = (0, 1, 1) playing the imaginary unit and PI = (1, 0, 0) the angle
with cos(PI) = 1, sin(PI) = 0. The check_* functions verify the addition
formulas, both candidate fundamental formulas, the Euler-type formula
e^(J ^ X) = cos(X) v (J ^ sin(X)) and its product form by enumerating every
element (or pair of elements) of B.

Each formula is written once, on tuples of masks, so the same code evaluates a
single Triple and a whole numpy grid of them.

Usage:
    python run_checks.py boolean --atoms 1 2 3

Arguments:
    --atoms   atom counts n; every check here runs for n <= 4, the product
              algebra laws for n <= 2
"""

import functools
import logging
from dataclasses import dataclass

import numpy as np

from boolalg import BoolAlgebra, DomainError, Element, check_boolean_tables, require_atoms
from reports import CheckReport, first_failure, verdict

logger = logging.getLogger(__name__)

MAX_CHECK_ATOMS = 4
MAX_ALGEBRA_LAW_ATOMS = 2
# Rows of X per vectorised block in the pairwise scans.
PAIR_CHUNK = 64


@dataclass(frozen=True)
class Triple:
    a: Element
    b: Element
    c: Element

    def __post_init__(self):
        self.a._same(self.b)
        self.a._same(self.c)

    @classmethod
    def from_masks(cls, alg: BoolAlgebra, a, b, c) -> "Triple":
        return cls(alg.element(a), alg.element(b), alg.element(c))

    @property
    def algebra(self) -> BoolAlgebra:
        return self.a.algebra

    @property
    def masks(self) -> tuple:
        return self.a.mask, self.b.mask, self.c.mask

    def _same(self, other: "Triple") -> BoolAlgebra:
        if not isinstance(other, Triple):
            raise DomainError(f"expected a Triple, got {type(other).__name__}")
        return self.a._same(other.a)

    def __or__(self, other):
        alg = self._same(other)
        return Triple.from_masks(alg, *_join(self.masks, other.masks))

    def __and__(self, other):
        alg = self._same(other)
        return Triple.from_masks(alg, *_meet(self.masks, other.masks))

    def __invert__(self):
        alg = self.algebra
        return Triple.from_masks(alg, *(alg.complement_masks(v) for v in self.masks))

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


def triple(alg: BoolAlgebra, a: int, b: int, c: int) -> Triple:
    return Triple.from_masks(alg, a, b, c)


def J(alg: BoolAlgebra) -> Triple:
    return triple(alg, 0, alg.full, alg.full)


def PI(alg: BoolAlgebra) -> Triple:
    return triple(alg, alg.full, 0, 0)


def one(alg: BoolAlgebra) -> Triple:
    return triple(alg, alg.full, alg.full, alg.full)


def zero(alg: BoolAlgebra) -> Triple:
    return triple(alg, 0, 0, 0)


def _join(x, y):
    return tuple(u | v for u, v in zip(x, y))


def _meet(x, y):
    return tuple(u & v for u, v in zip(x, y))


def _exp(alg, x):
    a, b, c = x
    return alg.complement_masks(a), alg.complement_masks(b), alg.top_like(c)


def _cos(alg, x):
    a, b, c = x
    return alg.top_like(a), alg.complement_masks(b), alg.complement_masks(c)


def _sin(alg, x):
    a, b, c = x
    return alg.bottom_like(a), alg.bottom_like(b), c


def _j(alg):
    return 0, alg.full, alg.full


def exp3(X: Triple) -> Triple:
    return Triple.from_masks(X.algebra, *_exp(X.algebra, X.masks))


def cos3(X: Triple) -> Triple:
    return Triple.from_masks(X.algebra, *_cos(X.algebra, X.masks))


def sin3(X: Triple) -> Triple:
    return Triple.from_masks(X.algebra, *_sin(X.algebra, X.masks))


def _euler_rhs(alg, x):
    """cos(X) v [J ^ sin(X)]"""
    return _join(_cos(alg, x), _meet(_j(alg), _sin(alg, x)))


def triple_masks(alg: BoolAlgebra) -> tuple:
    """Component arrays of every Triple, ascending masks, lexicographic (a, b, c)."""
    size = alg.size
    idx = np.arange(size ** 3, dtype=np.int64)
    return idx // (size * size), (idx // size) % size, idx % size


def triple_at(alg: BoolAlgebra, index: int) -> Triple:
    size = alg.size
    return triple(alg, index // (size * size), (index // size) % size, index % size)


def _differs(lhs, rhs):
    return functools.reduce(np.logical_or, (np.asarray(u != v) for u, v in zip(lhs, rhs)))


def _scan_single(alg, identity):
    grid = triple_masks(alg)
    lhs, rhs = identity(grid)
    mismatch = np.broadcast_to(_differs(lhs, rhs), grid[0].shape)
    return first_failure(mismatch), mismatch.size


def _scan_pairs(alg, identity):
    """First (i, j) with identity(X_i, Y_j) violated, scanning X-major."""
    a, b, c = triple_masks(alg)
    n = len(a)
    Y = (a[None, :], b[None, :], c[None, :])
    for start in range(0, n, PAIR_CHUNK):
        stop = min(start + PAIR_CHUNK, n)
        X = (a[start:stop, None], b[start:stop, None], c[start:stop, None])
        lhs, rhs = identity(X, Y)
        hit = first_failure(np.broadcast_to(_differs(lhs, rhs), (stop - start, n)))
        if hit is not None:
            return (start + hit[0], hit[1]), n * n
    return None, n * n


def _pair_text(alg, pair, show):
    X, Y = triple_at(alg, pair[0]), triple_at(alg, pair[1])
    return f"n={alg.atom_count} X={X} Y={Y}: " + show(X, Y)


def check_exp_addition(alg: BoolAlgebra) -> CheckReport:
    require_atoms(alg, MAX_CHECK_ATOMS, "check_exp_addition")

    def identity(X, Y):
        xy = _join(X, Y)
        lhs = _exp(alg, xy) + _cos(alg, xy)
        rhs = _meet(_exp(alg, X), _exp(alg, Y)) + _meet(_cos(alg, X), _cos(alg, Y))
        return lhs, rhs

    def show(X, Y):
        return (f"e^(XvY)={exp3(X | Y)} e^X^e^Y={exp3(X) & exp3(Y)} "
                f"cos(XvY)={cos3(X | Y)} cosX^cosY={cos3(X) & cos3(Y)}")

    failure, cases = _scan_pairs(alg, identity)
    return verdict(f"triple_exp_cos_addition[n={alg.atom_count}]",
                   "e^(X∨Y) = e^X ∧ e^Y; cos(X∨Y) = cos(X) ∧ cos(Y)",
                   failure, cases, lambda p: _pair_text(alg, p, show))


def check_sin_addition(alg: BoolAlgebra) -> CheckReport:
    require_atoms(alg, MAX_CHECK_ATOMS, "check_sin_addition")

    def rhs_of(X, Y):
        sx, cx, sy, cy = _sin(alg, X), _cos(alg, X), _sin(alg, Y), _cos(alg, Y)
        return _join(_join(_meet(sx, cy), _meet(cx, sy)), _meet(sx, sy))

    def identity(X, Y):
        return _sin(alg, _join(X, Y)), rhs_of(X, Y)

    def show(X, Y):
        rhs = (sin3(X) & cos3(Y)) | (cos3(X) & sin3(Y)) | (sin3(X) & sin3(Y))
        return f"sin(XvY)={sin3(X | Y)} rhs={rhs}"

    failure, cases = _scan_pairs(alg, identity)
    return verdict(f"triple_sin_addition[n={alg.atom_count}]",
                   "sin(X∨Y) = [sin X ∧ cos Y] ∨ [cos X ∧ sin Y] ∨ [sin X ∧ sin Y]",
                   failure, cases, lambda p: _pair_text(alg, p, show))


def check_fundamental(alg: BoolAlgebra) -> CheckReport:
    """Both candidate fundamental formulas; neither is preferred."""
    require_atoms(alg, MAX_CHECK_ATOMS, "check_fundamental")

    def three_term(X):
        s, c = _sin(alg, X), _cos(alg, X)
        return _join(_join(_meet(s, s), _meet(c, c)), _cos(alg, s))

    def two_term(X):
        s = _sin(alg, X)
        return _join(s, _cos(alg, s))

    def identity(X):
        full = tuple(alg.top_like(v) for v in X)
        return three_term(X) + two_term(X), full + full

    failure, cases = _scan_single(alg, identity)

    def show(index):
        X = triple_at(alg, index[0])
        s, c = sin3(X), cos3(X)
        return (f"n={alg.atom_count} X={X}: three-term={(s & s) | (c & c) | cos3(s)} "
                f"two-term={s | cos3(s)}")

    return verdict(f"triple_fundamental_formulas[n={alg.atom_count}]",
                   "sin^{2∧}(X) ∨ cos^{2∧}(X) ∨ (cos∘sin)(X) = 1 and sin(X) ∨ (cos∘sin)(X) = 1",
                   failure, cases, show, variants=["three-term", "two-term"])


def check_euler_formula(alg: BoolAlgebra) -> CheckReport:
    require_atoms(alg, MAX_CHECK_ATOMS, "check_euler_formula")

    def identity(X):
        return _exp(alg, _meet(_j(alg), X)), _euler_rhs(alg, X)

    def show(index):
        X = triple_at(alg, index[0])
        return f"n={alg.atom_count} X={X}: e^(J^X)={exp3(J(alg) & X)} rhs={cos3(X) | (J(alg) & sin3(X))}"

    failure, cases = _scan_single(alg, identity)
    return verdict(f"triple_euler_formula[n={alg.atom_count}]",
                   "e^{J∧X} = cos(X) ∨ [J ∧ sin(X)], J = (0,1,1)",
                   failure, cases, show)


def check_product_formula(alg: BoolAlgebra) -> CheckReport:
    require_atoms(alg, MAX_CHECK_ATOMS, "check_product_formula")

    def identity(X, Y):
        return _euler_rhs(alg, _join(X, Y)), _meet(_euler_rhs(alg, X), _euler_rhs(alg, Y))

    def show(X, Y):
        def euler(T):
            return cos3(T) | (J(alg) & sin3(T))
        return f"lhs={euler(X | Y)} rhs={euler(X) & euler(Y)}"

    failure, cases = _scan_pairs(alg, identity)
    return verdict(f"triple_product_formula[n={alg.atom_count}]",
                   "cos(X∨Y) ∨ [J ∧ sin(X∨Y)] = [cos X ∨ (J ∧ sin X)] ∧ [cos Y ∨ (J ∧ sin Y)]",
                   failure, cases, lambda p: _pair_text(alg, p, show))


def check_pi_values(alg: BoolAlgebra) -> CheckReport:
    """cos(PI) = 1, sin(PI) = 0 and the Euler-identity analogue e^(J ^ PI) = 1."""
    pi = PI(alg)
    facts = [
        ("cos(PI)", cos3(pi), one(alg)),
        ("sin(PI)", sin3(pi), zero(alg)),
        ("e^(J^PI)", exp3(J(alg) & pi), one(alg)),
    ]
    failure = next((f"n={alg.atom_count} {label}={got}, expected {want}"
                    for label, got, want in facts if got != want), None)
    return verdict(f"triple_pi_identities[n={alg.atom_count}]",
                   "cos(Π) = 1, sin(Π) = 0, e^{J∧Π} = 1, Π = (1,0,0)",
                   failure, len(facts), str)


def check_shape_facts(alg: BoolAlgebra) -> CheckReport:
    """sin o sin = sin, and the first component of cos is always top."""
    require_atoms(alg, MAX_CHECK_ATOMS, "check_shape_facts")

    def identity(X):
        s = _sin(alg, X)
        return _sin(alg, s) + (_cos(alg, X)[0],), s + (alg.top_like(X[0]),)

    def show(index):
        X = triple_at(alg, index[0])
        return f"n={alg.atom_count} X={X}: sin(sin X)={sin3(sin3(X))} sin X={sin3(X)} cos X={cos3(X)}"

    failure, cases = _scan_single(alg, identity)
    return verdict(f"triple_shape_facts[n={alg.atom_count}]",
                   "sin ∘ sin = sin; first component of cos(X) is 1",
                   failure, cases, show)


def check_product_algebra(alg: BoolAlgebra) -> CheckReport:
    """Componentwise operations make B a Boolean algebra."""
    require_atoms(alg, MAX_ALGEBRA_LAW_ATOMS, "check_product_algebra")
    size = alg.size
    a, b, c = triple_masks(alg)
    X = (a[:, None], b[:, None], c[:, None])
    Y = (a[None, :], b[None, :], c[None, :])

    def encode(t):
        return (t[0] * size + t[1]) * size + t[2]

    join_t = encode(_join(X, Y))
    meet_t = encode(_meet(X, Y))
    comp_t = encode(tuple(alg.complement_masks(v) for v in (a, b, c)))
    return check_boolean_tables(f"triple_product_algebra_laws[n={alg.atom_count}]",
                                "B = A×A×A with pointwise operations is a Boolean algebra",
                                join_t, meet_t, comp_t, size ** 3 - 1, 0,
                                label=lambda i: str(triple_at(alg, i)))


def suite(alg: BoolAlgebra) -> list:
    logger.info("toy-model checks on %d triples", alg.size ** 3)
    checks = [
        check_exp_addition(alg),
        check_sin_addition(alg),
        check_fundamental(alg),
        check_euler_formula(alg),
        check_product_formula(alg),
        check_pi_values(alg),
        check_shape_facts(alg),
    ]
    if alg.atom_count <= MAX_ALGEBRA_LAW_ATOMS:
        checks.append(check_product_algebra(alg))
    return checks
