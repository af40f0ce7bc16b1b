"""Order-by-order star products on the plane.

A truncated deformation of the polynomial product is a list of arity-2
cochains ``p_1 .. p_N``; the deformed product is

    f * g = f g + sum_k t^k p_k(f, g),

and associativity through order N is equivalent to the coboundary equations
``delta p_k = B_k`` with ``B_k = 1/2 sum_{i+j=k} [p_i, p_j]``.  The solver
builds each ``B_k``, checks it is closed, and inverts the coboundary on the
finite bigrade blocks it touches: the coboundary preserves the bigrade, and
a fixed bigrade pins both the x-exponent and the total slot order, leaving
finitely many basis terms per arity.  Block systems are solved by exact
rational elimination with free variables pinned to zero, so the output is a
deterministic function of the input (no cocycle is ever added).

Conventions: callers hand the solver a Poisson bivector ``pi1`` and the head
coefficient is ``p_1 = pi1 / 2``; all reported cochains are the ``p_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional

from .cochains import (
    ArityError,
    BasisTerm,
    Cochain,
    DimensionMismatchError,
    Index,
    Polynomial,
    index_splits,
)
from .grading import (
    SemigroupSpec,
    decompose_by_bigrade,
    in_ideal,
    in_subalgebra,
)
from .linsolve import solve_particular
from .operations import bracket, hochschild_delta

HALF = Fraction(1, 2)


class CoboundaryError(Exception):
    """A 3-cochain block is not in the image of the coboundary."""

    def __init__(self, bigrade):
        super().__init__(f"no preimage under the coboundary in bigrade block {bigrade}")
        self.bigrade = bigrade


class SlotOrderCapError(RuntimeError):
    """An obstruction term exceeded the configured slot-order growth cap."""


@dataclass(frozen=True)
class Deformation:
    """Truncated deformation: ``cochains[k-1]`` is the coefficient of t^k."""

    dimension: int
    cochains: tuple[Cochain, ...]

    def __post_init__(self):
        for c in self.cochains:
            if c.dimension != self.dimension:
                raise DimensionMismatchError("deformation cochain dimension mismatch")
            if not c.is_zero and c.arities() != (2,):
                raise ArityError("deformation cochains must have arity 2")

    @property
    def order(self) -> int:
        return len(self.cochains)

    def coefficient(self, k: int) -> Cochain:
        if not 1 <= k <= self.order:
            raise ValueError(f"order {k} out of range 1..{self.order}")
        return self.cochains[k - 1]


def obstruction(deformation: Deformation, k: int) -> Cochain:
    """The arity-3 term ``1/2 sum_{i+j=k, i,j>=1} [p_i, p_j]``.

    Needs ``p_1 .. p_(k-1)``; well-defined for ``k`` up to order + 1.
    """
    if k < 1:
        raise ValueError("order must be at least 1")
    if k - 1 > deformation.order:
        raise ValueError(
            f"obstruction at order {k} needs cochains up to order {k - 1}, "
            f"deformation stops at {deformation.order}"
        )
    total = Cochain.zero(deformation.dimension)
    for i in range(1, k):
        total = total + bracket(deformation.coefficient(i), deformation.coefficient(k - i))
    return total * HALF


@dataclass(frozen=True)
class BlockSystem:
    """The coboundary restricted to one bigrade block, as an exact matrix.

    ``matrix[r][c]`` is the coefficient of ``basis3[r]`` in the coboundary of
    ``basis2[c]``; entries are integers (structure constants).
    """

    bigrade: tuple[Index, Index]
    basis2: tuple[BasisTerm, ...]
    basis3: tuple[BasisTerm, ...]
    matrix: tuple[tuple[int, ...], ...]


def _block_data(bigrade: tuple[Index, Index], dimension: int) -> tuple[Index, Index]:
    down, up = bigrade
    down = tuple(down)
    up = tuple(up)
    if len(down) != dimension or len(up) != dimension:
        raise DimensionMismatchError(f"bigrade {bigrade} does not match dimension {dimension}")
    x_part = []
    slot_total = []
    for d, u in zip(down, up):
        if (d + u) % 2 or (u - d) % 2 or d + u < 0 or u - d < 0:
            raise ValueError(f"invalid bigrade {bigrade}: parity or sign constraint violated")
        x_part.append((d + u) // 2)
        slot_total.append((u - d) // 2)
    return tuple(x_part), tuple(slot_total)


@lru_cache(maxsize=None)
def block_basis(bigrade: tuple[Index, Index], dimension: int, arity: int) -> tuple[BasisTerm, ...]:
    """All basis terms of the given arity and bigrade, lexicographically ordered."""
    x_part, slot_total = _block_data(bigrade, dimension)
    slot_lists = sorted(pieces for pieces, _ in index_splits(slot_total, arity))
    return tuple(BasisTerm(dimension, x_part, slots) for slots in slot_lists)


@lru_cache(maxsize=None)
def build_block(bigrade: tuple[Index, Index], dimension: int) -> BlockSystem:
    """Assemble the coboundary matrix from arity-2 to arity-3 terms of one bigrade."""
    basis2 = block_basis(bigrade, dimension, 2)
    basis3 = block_basis(bigrade, dimension, 3)
    position = {t: i for i, t in enumerate(basis3)}
    columns = []
    for e in basis2:
        col = [0] * len(basis3)
        for term, coeff in hochschild_delta(Cochain.single(e)).items():
            col[position[term]] = int(coeff)
        columns.append(col)
    matrix = tuple(
        tuple(columns[c][r] for c in range(len(basis2))) for r in range(len(basis3))
    )
    return BlockSystem(bigrade=bigrade, basis2=basis2, basis3=basis3, matrix=matrix)


def solve_delta(target: Cochain) -> Cochain:
    """Exact preimage of an arity-3 cochain under the coboundary.

    Decomposes by bigrade and solves each block system; raises
    ``CoboundaryError`` naming the first offending block when some component
    is not a coboundary.  The returned preimage is the reduced-echelon
    particular solution in every block (free variables zero), making the
    result deterministic.
    """
    if target.is_zero:
        return Cochain.zero(target.dimension)
    if target.arities() != (3,):
        raise ArityError("solve_delta expects an arity-3 cochain")
    solution = Cochain.zero(target.dimension)
    for bigrade, component in decompose_by_bigrade(target).items():
        block = build_block(bigrade, target.dimension)
        position = {t: i for i, t in enumerate(block.basis3)}
        rhs = [Fraction(0)] * len(block.basis3)
        for term, coeff in component.items():
            rhs[position[term]] = coeff
        x = solve_particular(block.matrix, rhs)
        if x is None:
            raise CoboundaryError(bigrade)
        solution = solution + Cochain(
            target.dimension, {t: c for t, c in zip(block.basis2, x) if c}
        )
    return solution


def _max_slot_order(c: Cochain) -> int:
    return max((sum(s) for t, _ in c.items() for s in t.slots), default=0)


def solve_maurer_cartan(
    pi1: Cochain,
    order: int,
    delta_spec: Optional[SemigroupSpec] = None,
    slot_order_cap: int = 64,
) -> Deformation:
    """Extend a Poisson bivector on the plane to a star product of given order.

    ``pi1`` must be an arity-2 cochain in dimension 2 whose half is closed
    (automatic for antisymmetric first-order bivectors).  Each higher
    coefficient solves ``delta p_k = B_k``; when ``delta_spec`` is given,
    ``pi1`` must lie in its weight subalgebra and every higher coefficient is
    verified to lie in the 2-fold ideal. Raises ``SlotOrderCapError`` instead
    of silently truncating when obstruction terms outgrow ``slot_order_cap``.
    """
    if pi1.dimension != 2:
        raise DimensionMismatchError(
            "the coboundary-inversion guarantee is specific to dimension 2"
        )
    if order < 1:
        raise ValueError("order must be at least 1")
    if not pi1.is_zero and pi1.arities() != (2,):
        raise ArityError("the Poisson bivector must have arity 2")
    p1 = pi1 * HALF
    if not hochschild_delta(p1).is_zero:
        raise ValueError("the bivector is not a cocycle: delta(pi1/2) != 0")
    if delta_spec is not None:
        decision = in_subalgebra(pi1, delta_spec)
        if not decision.is_yes:
            raise ValueError(
                f"pi1 is not in the weight subalgebra of {delta_spec.generators}: {decision.status}"
            )
    cochains = [p1]
    partial = Deformation(dimension=2, cochains=(p1,))
    for k in range(2, order + 1):
        b_k = obstruction(partial, k)
        if _max_slot_order(b_k) > slot_order_cap:
            raise SlotOrderCapError(
                f"slot order of the order-{k} obstruction exceeds cap {slot_order_cap}"
            )
        if not hochschild_delta(b_k).is_zero:
            raise AssertionError(f"order-{k} obstruction is not closed; bracket engine bug")
        p_k = solve_delta(b_k)
        if hochschild_delta(p_k) != b_k:
            raise AssertionError(f"order-{k} block solve failed verification")
        if delta_spec is not None and not b_k.is_zero:
            decision = in_ideal(p_k, delta_spec, fold=2)
            if not decision.is_yes:
                raise AssertionError(
                    f"order-{k} coefficient escaped the 2-fold ideal: {decision.status}"
                )
        cochains.append(p_k)
        partial = Deformation(dimension=2, cochains=tuple(cochains))
    return partial


TSeries = dict[int, Polynomial]


def star_apply(deformation: Deformation, f: Polynomial, g: Polynomial) -> TSeries:
    """The deformed product of two polynomials, by power of the parameter.

    Order 0 is the plain product; order k is ``p_k(f, g)``; zero coefficients
    are dropped.
    """
    return star_series(deformation, {0: f}, {0: g})


def star_series(deformation: Deformation, fs: Mapping[int, Polynomial], gs: Mapping[int, Polynomial]) -> TSeries:
    """Star product of two truncated series, truncated at the deformation order."""
    n = deformation.dimension
    order = deformation.order
    out: dict[int, Polynomial] = {}
    for i, fi in fs.items():
        if fi.dimension != n:
            raise DimensionMismatchError("series coefficient dimension mismatch")
        for j, gj in gs.items():
            base = i + j
            if base > order:
                continue
            plain = fi * gj
            if not plain.is_zero:
                out[base] = out.get(base, Polynomial.zero(n)) + plain
            for k in range(1, order - base + 1):
                value = deformation.coefficient(k).apply([fi, gj])
                if not value.is_zero:
                    out[base + k] = out.get(base + k, Polynomial.zero(n)) + value
    return {k: v for k, v in sorted(out.items()) if not v.is_zero}


def associativity_defect(
    deformation: Deformation, f: Polynomial, g: Polynomial, h: Polynomial
) -> TSeries:
    """``(f * g) * h - f * (g * h)`` through the deformation order.

    Identically empty exactly when the deformation is associative to that
    order.
    """
    left = star_series(deformation, star_apply(deformation, f, g), {0: h})
    right = star_series(deformation, {0: f}, star_apply(deformation, g, h))
    n = deformation.dimension
    out: dict[int, Polynomial] = {}
    for k in set(left) | set(right):
        value = left.get(k, Polynomial.zero(n)) - right.get(k, Polynomial.zero(n))
        if not value.is_zero:
            out[k] = value
    return dict(sorted(out.items()))
