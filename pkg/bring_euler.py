"""
Exponential and trigonometric functions on a Boolean algebra A for a base
e != 0, and their extension E to the twisted pair structure on A x A:

    e^x    = x^ v e
    C_B(x) = x^,  S_B(x) = x
    E(a, b) = (e^a ^ b^, e^a ^ b)

The pair-level equality E(u v v) = E(u ^ v) fails as written (the smallest
counterexample is u = (0,0), v = (0,1) at n = 1, e = 1). It is checked and
reported as refuted-as-printed next to the homomorphism reading
E(u v v) = E(u) ^ E(v), which holds for every base.

Usage:
    python run_checks.py boolean --atoms 2
    python run_checks.py boolean --atoms 3 --base-e 5

Arguments:
    --base-e  the base e as a nonzero atom mask; without it every nonzero
              base is checked and the reports are merged per check
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from boolalg import BoolAlgebra, DomainError, Element, complement, require_atoms
from reports import CheckReport, DualCheckReport, first_failure, merge, verdict
from weak_bring import PairElement, pair, pair_at, twisted_masks

logger = logging.getLogger(__name__)

MAX_SCALAR_ATOMS = 4
MAX_PAIR_ATOMS = 3


@dataclass(frozen=True)
class ExpBase:
    e: Element

    def __post_init__(self):
        if self.e.mask == 0:
            raise DomainError("exponential base must be nonzero")

    @property
    def algebra(self) -> BoolAlgebra:
        return self.e.algebra

    def __str__(self):
        return str(self.e)


def exp_e(base: ExpBase, x: Element) -> Element:
    return complement(x) | base.e


def cb(x: Element) -> Element:
    return complement(x)


def sb(x: Element) -> Element:
    return x


def big_e(base: ExpBase, p: PairElement) -> PairElement:
    base.e._same(p.a)
    return pair(p.algebra, *_big_e(p.algebra, base.e.mask, p.a.mask, p.b.mask))


def nonzero_bases(alg: BoolAlgebra) -> list:
    return [ExpBase(alg.element(mask)) for mask in range(1, alg.size)]


def _exp(alg, e, x):
    return alg.complement_masks(x) | e


def _big_e(alg, e, a, b):
    ea = _exp(alg, e, a)
    return ea & alg.complement_masks(b), ea & b


def check_scalar_identities(alg: BoolAlgebra, base: ExpBase) -> list:
    """Addition formulas for e^x, C_B and S_B and both fundamental formulas.

    One report per identity, over every x (and y).
    """
    require_atoms(alg, MAX_SCALAR_ATOMS, "check_scalar_identities")
    e = base.e.mask
    masks = alg.masks()
    x, y = masks[:, None], masks[None, :]
    comp = alg.complement_masks
    full = np.full((alg.size, 1), alg.full)
    identities = [
        ("exp_join_to_meet", "e^{x∨y} = e^x ∧ e^y",
         _exp(alg, e, x | y), _exp(alg, e, x) & _exp(alg, e, y)),
        ("cos_join_to_meet", "C_B(x ∨ y) = C_B(x) ∧ C_B(y)", comp(x | y), comp(x) & comp(y)),
        ("sin_addition", "S_B(x ∨ y) = [S_B(x) ∧ C_B(y)] ∨ [C_B(x) ∧ S_B(y)] ∨ [S_B(x) ∧ S_B(y)]",
         x | y, (x & comp(y)) | (comp(x) & y) | (x & y)),
        ("fundamental_squares", "S_B^{2∧}(x) ∨ C_B^{2∧}(x) = 1", (x & x) | (comp(x) & comp(x)), full),
        ("fundamental_plain", "S_B(x) ∨ C_B(x) = 1", x | comp(x), full),
    ]
    reports = []
    for key, ref, lhs, rhs in identities:
        mismatch = np.asarray(lhs != rhs)
        witness = first_failure(mismatch)

        def describe(w, lhs=lhs, rhs=rhs, shape=mismatch.shape):
            where = f"x={alg.fmt(w[0])}" + (f" y={alg.fmt(w[1])}" if shape[1] > 1 else "")
            return (f"n={alg.atom_count} e={base} {where}: "
                    f"{alg.fmt(np.broadcast_to(lhs, shape)[w])} != "
                    f"{alg.fmt(np.broadcast_to(rhs, shape)[w])}")

        reports.append(verdict(f"scalar_{key}[n={alg.atom_count}]", ref, witness, mismatch.size, describe))
    return reports


def _pair_grids(alg):
    """Component masks of every (u, v), u outer, both in ascending pair order."""
    size = alg.size
    idx = np.arange(size * size, dtype=np.int64)
    a, b = idx // size, idx % size
    return (a[:, None], b[:, None]), (a[None, :], b[None, :])


def check_pair_exp_equality(alg: BoolAlgebra, base: ExpBase) -> DualCheckReport:
    """E(u v v) against E(u ^ v) as printed, and against E(u) ^ E(v)."""
    require_atoms(alg, MAX_PAIR_ATOMS, "check_pair_exp_equality")
    e = base.e.mask
    (ua, ub), (va, vb) = _pair_grids(alg)
    joined = _big_e(alg, e, ua | va, ub | vb)
    as_printed = _big_e(alg, e, *twisted_masks(ua, ub, va, vb))
    homomorphic = twisted_masks(*_big_e(alg, e, ua, ub), *_big_e(alg, e, va, vb))

    def mismatch(lhs, rhs):
        return (lhs[0] != rhs[0]) | (lhs[1] != rhs[1])

    def describe(w, show):
        u, v = pair_at(alg, w[0]), pair_at(alg, w[1])
        return f"n={alg.atom_count} e={base} u={u} v={v}: E(u∨v)={big_e(base, u | v)} but {show(u, v)}"

    cases = len(ua) * len(ua)
    printed = verdict(f"pair_exp_equality_as_printed[n={alg.atom_count}]",
                      "E((a ∨ hb) ∨ (x ∨ hy)) = E((a ∨ hb) ∧ (x ∨ hy))",
                      first_failure(mismatch(joined, as_printed)), cases,
                      lambda w: describe(w, lambda u, v: f"E(u∧v)={big_e(base, u & v)}"),
                      refuted=True, asserted=False)
    variant = verdict(f"pair_exp_homomorphism[n={alg.atom_count}]",
                      "E(u ∨ v) = E(u) ∧ E(v) (twisted product)",
                      first_failure(mismatch(joined, homomorphic)), cases,
                      lambda w: describe(w, lambda u, v: f"E(u)∧E(v)={big_e(base, u) & big_e(base, v)}"))
    return DualCheckReport(printed, variant)


def check_euler_pair(alg: BoolAlgebra, base: ExpBase) -> CheckReport:
    """E(hy) = C_B(y) v h S_B(y) for every y, and e^h = h."""
    require_atoms(alg, MAX_SCALAR_ATOMS, "check_euler_pair")
    y = alg.masks()
    ea, eb = _big_e(alg, base.e.mask, 0, y)
    # C_B(y) v h S_B(y) = (y^, 0) v (0, y); y = 1 is e^h = h
    mismatch = (ea != alg.complement_masks(y)) | (eb != y)
    return verdict(f"pair_euler_formula[n={alg.atom_count}]", "E(hy) = C_B(y) ∨ h S_B(y); e^h = h",
                   first_failure(mismatch), len(y),
                   lambda w: f"n={alg.atom_count} e={base} y={alg.fmt(w[0])}: "
                             f"E((0,y))={big_e(base, pair(alg, 0, int(y[w[0]])))}")


def check_pair_decomposition(alg: BoolAlgebra, base: ExpBase) -> CheckReport:
    """E(a v hb) = e^a b^ v h e^a b, the right side built with the twisted product."""
    require_atoms(alg, MAX_PAIR_ATOMS, "check_pair_decomposition")
    e = base.e.mask
    size = alg.size
    idx = np.arange(size * size, dtype=np.int64)
    a, b = idx // size, idx % size
    # a v hb as a pair, then E of it
    ha, hb = twisted_masks(0, alg.full, b, 0)
    lhs = _big_e(alg, e, a | ha, 0 | hb)
    ea = _exp(alg, e, a)
    ta, tb = twisted_masks(0, alg.full, ea & b, 0)
    rhs = (ea & alg.complement_masks(b)) | ta, tb
    mismatch = (lhs[0] != rhs[0]) | (lhs[1] != rhs[1])

    def describe(w):
        p = pair_at(alg, w[0])
        return f"n={alg.atom_count} e={base} (a,b)={p}: E={big_e(base, p)} rhs=({alg.fmt(rhs[0][w[0]])},{alg.fmt(rhs[1][w[0]])})"

    return verdict(f"pair_exp_decomposition[n={alg.atom_count}]", "E(a ∨ hb) = e^a b̂ ∨ h e^a b",
                   first_failure(mismatch), len(idx), describe)


def check_base_independence(alg: BoolAlgebra) -> CheckReport:
    """E((0, y)) is the same pair for every nonzero base e."""
    require_atoms(alg, MAX_SCALAR_ATOMS, "check_base_independence")
    e = np.arange(1, alg.size, dtype=np.int64)[:, None]
    y = alg.masks()[None, :]
    ea, eb = _big_e(alg, e, 0, y)
    mismatch = (ea != ea[:1]) | (eb != eb[:1])

    def describe(w):
        return (f"n={alg.atom_count} y={alg.fmt(w[1])}: E((0,y)) differs between "
                f"e={alg.fmt(1)} and e={alg.fmt(w[0] + 1)}")

    return verdict(f"pair_exp_base_independence[n={alg.atom_count}]", "E(hy) does not depend on e ≠ 0",
                   first_failure(mismatch), mismatch.size, describe)


def suite(alg: BoolAlgebra, base: Optional[ExpBase] = None) -> list:
    """Every check for one base, or merged over all nonzero bases."""
    bases = [base] if base is not None else nonzero_bases(alg)
    logger.info("exponential checks for %d base(s) at n=%d", len(bases), alg.atom_count)
    reports = []
    for b in bases:
        reports += check_scalar_identities(alg, b)
        reports.append(check_euler_pair(alg, b))
        if alg.atom_count <= MAX_PAIR_ATOMS:
            reports += list(check_pair_exp_equality(alg, b))
            reports.append(check_pair_decomposition(alg, b))
    merged = merge(reports)
    for report in merged:
        report.details["bases"] = [str(b) for b in bases]
    merged.append(check_base_independence(alg))
    return merged
