"""Cup product, slot insertion, Gerstenhaber bracket, Hochschild coboundary.

The bracket is assembled from a single insertion primitive: substituting an
arity-q cochain into one slot of an arity-p cochain gives an arity-(p+q-1)
cochain, with the substituted slot's derivative expanded over the inserted
operator's x-part and slots by the generalized Leibniz rule.  The coboundary
is implemented twice on purpose: directly from its defining sum, and as
``-bracket(f, m)`` where ``m`` is the multiplication cochain; agreement of
the two code paths is one of the verified laws.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import perm

from .cochains import (
    BasisTerm,
    Cochain,
    DimensionMismatchError,
    ArityError,
    index_add,
    index_splits,
    index_sub,
    leibniz_split,
    zero_index,
)

_ZERO = Fraction(0)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _check_dims(f: Cochain, g: Cochain) -> None:
    if f.dimension != g.dimension:
        raise DimensionMismatchError(
            f"cochain dimensions differ: {f.dimension} vs {g.dimension}"
        )


def multiplication_cochain(dimension: int) -> Cochain:
    """The 2-cochain sending a pair of polynomials to their product."""
    zero = zero_index(dimension)
    return Cochain.single(BasisTerm(dimension, zero, (zero, zero)))


def cup(f: Cochain, g: Cochain) -> Cochain:
    """Cup product: x-exponents add, slot lists concatenate.

    On arguments it evaluates the first factor on the leading slots and the
    second on the trailing slots, multiplying the results.
    """
    _check_dims(f, g)
    acc: dict[BasisTerm, Fraction] = {}
    for tf, cf in f.items():
        for tg, cg in g.items():
            term = BasisTerm(f.dimension, index_add(tf.x_part, tg.x_part), tf.slots + tg.slots)
            acc[term] = acc.get(term, _ZERO) + cf * cg
    return Cochain(f.dimension, acc)


@lru_cache(maxsize=200_000)
def _insert_term(tf: BasisTerm, k: int, tg: BasisTerm) -> tuple[tuple[BasisTerm, int], ...]:
    """Substitute basis term ``tg`` into slot ``k`` (1-based) of ``tf``.

    The slot's derivative ``d^(a_k)`` distributes over ``tg``'s x-part and
    each of ``tg``'s slot outputs; the x-part absorbs part of the derivative
    with falling-factorial coefficients, the rest lands on ``tg``'s slots.
    Structure constants are integers.
    """
    n = tf.dimension
    q = tg.arity
    a_k = tf.slots[k - 1]
    b0 = tg.x_part
    acc: dict[BasisTerm, int] = {}
    if not any(b0):
        # x-part is 1: the whole derivative distributes over tg's slots.
        for pieces, mult in index_splits(a_k, q):
            slots = (
                tf.slots[: k - 1]
                + tuple(index_add(tg.slots[j], pieces[j]) for j in range(q))
                + tf.slots[k:]
            )
            term = BasisTerm(n, tf.x_part, slots)
            acc[term] = acc.get(term, 0) + mult
    else:
        for pieces, mult in index_splits(a_k, q + 1):
            c0 = pieces[0]
            if any(c0[i] > b0[i] for i in range(n)):
                continue
            fall = mult
            for i in range(n):
                fall *= perm(b0[i], c0[i])
            x_part = index_add(tf.x_part, index_sub(b0, c0))
            slots = (
                tf.slots[: k - 1]
                + tuple(index_add(tg.slots[j], pieces[j + 1]) for j in range(q))
                + tf.slots[k:]
            )
            term = BasisTerm(n, x_part, slots)
            acc[term] = acc.get(term, 0) + fall
    return tuple(item for item in acc.items() if item[1])


def insert(f: Cochain, k: int, g: Cochain) -> Cochain:
    """Composition of ``f`` with ``g`` substituted into slot ``k`` (1-based).

    Requires arity-homogeneous operands with ``1 <= k <= arity(f)``.
    Inserting an arity-0 cochain substitutes its polynomial value and
    consumes the slot.
    """
    _check_dims(f, g)
    if f.is_zero or g.is_zero:
        return Cochain.zero(f.dimension)
    p = f.homogeneous_arity()
    g.homogeneous_arity()  # homogeneity check only; any arity is legal, including 0
    if p < 1:
        raise ArityError("insertion needs at least one slot in the outer cochain")
    if not 1 <= k <= p:
        raise ArityError(f"slot position {k} out of range 1..{p}")
    acc: dict[BasisTerm, Fraction] = {}
    for tf, cf in f.items():
        for tg, cg in g.items():
            scale = cf * cg
            for term, structure in _insert_term(tf, k, tg):
                acc[term] = acc.get(term, _ZERO) + scale * structure
    return Cochain(f.dimension, acc)


def bracket(f: Cochain, g: Cochain) -> Cochain:
    """Gerstenhaber bracket, extended bilinearly over arity components.

    For arity-homogeneous ``f`` of arity p and ``g`` of arity q:

        [f, g] = sum_k (-1)^((k-1)(q-1)) f o_k g
                 - (-1)^((p-1)(q-1)) sum_k (-1)^((k-1)(p-1)) g o_k f
    """
    _check_dims(f, g)
    acc: dict[BasisTerm, Fraction] = {}
    for tf, cf in f.items():
        for tg, cg in g.items():
            p, q = tf.arity, tg.arity
            scale = cf * cg
            for k in range(1, p + 1):
                s = _sign((k - 1) * (q - 1)) * scale
                for term, structure in _insert_term(tf, k, tg):
                    acc[term] = acc.get(term, _ZERO) + s * structure
            swap = -_sign((p - 1) * (q - 1))
            for k in range(1, q + 1):
                s = swap * _sign((k - 1) * (p - 1)) * scale
                for term, structure in _insert_term(tg, k, tf):
                    acc[term] = acc.get(term, _ZERO) + s * structure
    return Cochain(f.dimension, acc)


@lru_cache(maxsize=200_000)
def _delta_term(t: BasisTerm) -> tuple[tuple[BasisTerm, int], ...]:
    """Coboundary of a basis term, straight from the defining sum.

    The outer summands prepend and append an identity slot; the k-th inner
    summand splits slot k over two arguments with binomial coefficients and
    sign (-1)^k.
    """
    n = t.dimension
    p = t.arity
    zero = zero_index(n)
    acc: dict[BasisTerm, int] = {}

    def add(term: BasisTerm, c: int) -> None:
        acc[term] = acc.get(term, 0) + c

    add(BasisTerm(n, t.x_part, (zero,) + t.slots), 1)
    add(BasisTerm(n, t.x_part, t.slots + (zero,)), _sign(p + 1))
    for k in range(1, p + 1):
        sk = _sign(k)
        for b, rest, coeff in leibniz_split(t.slots[k - 1]):
            slots = t.slots[: k - 1] + (b, rest) + t.slots[k:]
            add(BasisTerm(n, t.x_part, slots), sk * coeff)
    return tuple(item for item in acc.items() if item[1])


def hochschild_delta(f: Cochain) -> Cochain:
    """Hochschild coboundary, raising arity by one; linear in ``f``."""
    acc: dict[BasisTerm, Fraction] = {}
    for t, c in f.items():
        for term, structure in _delta_term(t):
            acc[term] = acc.get(term, _ZERO) + c * structure
    return Cochain(f.dimension, acc)


def delta_via_bracket(f: Cochain) -> Cochain:
    """The coboundary as ``-[f, m]``; an independent route to hochschild_delta."""
    return -bracket(f, multiplication_cochain(f.dimension))
