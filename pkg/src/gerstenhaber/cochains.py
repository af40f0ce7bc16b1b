"""Exact sparse model of polydifferential operators on polynomial algebras.

The coefficient field is the rationals (``fractions.Fraction``), so every
computation in this package is exact: ``==`` on two values decides equality
of the mathematical objects they represent.

Three layers:

* ``Polynomial`` -- sparse multivariate polynomial, exponent tuple -> coefficient.
* ``BasisTerm``  -- one monomial operator ``x^(a0) d^(a1) (x) ... (x) d^(ap)``
  acting on ``p`` polynomial arguments (the ``slots``).
* ``Cochain``    -- finite rational combination of basis terms; the arity-p
  part is a p-multilinear map from polynomials to polynomials.

All three are immutable and hashable, and are stored in canonical form: zero
coefficients dropped, like terms merged, deterministic term ordering (arity,
then the x-exponent, then the slot list).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from math import factorial, perm
from typing import Iterable, Iterator, Mapping, Sequence, Union

Index = tuple[int, ...]
Scalar = Union[int, Fraction]


class DimensionMismatchError(ValueError):
    """Objects of different ambient dimension were combined."""


class ArityError(ValueError):
    """An operation's arity precondition was violated."""


def zero_index(dimension: int) -> Index:
    return (0,) * dimension


def index_add(a: Index, b: Index) -> Index:
    return tuple(x + y for x, y in zip(a, b))


def index_sub(a: Index, b: Index) -> Index:
    return tuple(x - y for x, y in zip(a, b))


def _check_dimension(dimension: int) -> None:
    if not isinstance(dimension, int) or dimension < 1:
        raise DimensionMismatchError(f"dimension must be a positive integer, got {dimension!r}")


def _check_index(a: Sequence[int], dimension: int, *, nonnegative: bool) -> Index:
    a = tuple(a)
    if len(a) != dimension:
        raise DimensionMismatchError(f"index {a} has length {len(a)}, expected {dimension}")
    for entry in a:
        if not isinstance(entry, int):
            raise ValueError(f"index entries must be integers, got {entry!r}")
        if nonnegative and entry < 0:
            raise ValueError(f"exponent index must be nonnegative, got {a}")
    return a


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


def _term_pairs(terms) -> Iterable[tuple]:
    if isinstance(terms, Mapping):
        return terms.items()
    return terms


class Polynomial:
    """Sparse polynomial over the rationals in ``dimension`` variables.

    Terms map exponent tuples to nonzero coefficients; the zero polynomial
    stores no terms.  Instances are immutable.
    """

    __slots__ = ("dimension", "_terms")

    def __init__(self, dimension: int, terms=()):
        _check_dimension(dimension)
        acc: dict[Index, Fraction] = {}
        for expo, coeff in _term_pairs(terms):
            expo = _check_index(expo, dimension, nonnegative=True)
            c = acc.get(expo, _ZERO) + _as_fraction(coeff)
            if c:
                acc[expo] = c
            else:
                acc.pop(expo, None)
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "_terms", tuple(sorted(acc.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, dimension: int) -> Polynomial:
        return cls(dimension)

    @classmethod
    def constant(cls, dimension: int, value: Scalar) -> Polynomial:
        return cls(dimension, {zero_index(dimension): value})

    @classmethod
    def variable(cls, dimension: int, i: int) -> Polynomial:
        """The coordinate polynomial ``x_i`` (1-based index)."""
        if not 1 <= i <= dimension:
            raise ValueError(f"variable index {i} out of range 1..{dimension}")
        expo = [0] * dimension
        expo[i - 1] = 1
        return cls(dimension, {tuple(expo): 1})

    @classmethod
    def monomial(cls, dimension: int, expo: Sequence[int], coeff: Scalar = 1) -> Polynomial:
        return cls(dimension, {tuple(expo): coeff})

    def items(self) -> Iterator[tuple[Index, Fraction]]:
        return iter(self._terms)

    def coefficient(self, expo: Sequence[int]) -> Fraction:
        expo = tuple(expo)
        for e, c in self._terms:
            if e == expo:
                return c
        return _ZERO

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Maximum total degree; 0 for the zero polynomial."""
        return max((sum(e) for e, _ in self._terms), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.dimension == other.dimension
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.dimension, self._terms))

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check_same_dimension(other)
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, _ZERO) + c
        return Polynomial(self.dimension, acc)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.dimension, {e: -c for e, c in self._terms})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check_same_dimension(other)
            acc: dict[Index, Fraction] = {}
            for e1, c1 in self._terms:
                for e2, c2 in other._terms:
                    e = index_add(e1, e2)
                    acc[e] = acc.get(e, _ZERO) + c1 * c2
            return Polynomial(self.dimension, acc)
        return Polynomial(self.dimension, {e: c * _as_fraction(other) for e, c in self._terms})

    def __rmul__(self, other) -> Polynomial:
        return self.__mul__(other)

    def derive(self, a: Sequence[int]) -> Polynomial:
        """Apply the mixed partial derivative ``d^a = d1^(a1) ... dn^(an)``."""
        a = _check_index(a, self.dimension, nonnegative=True)
        acc: dict[Index, Fraction] = {}
        for e, c in self._terms:
            coeff = 1
            for ei, ai in zip(e, a):
                if ei < ai:
                    coeff = 0
                    break
                coeff *= perm(ei, ai)
            if coeff:
                acc[index_sub(e, a)] = c * coeff
        return Polynomial(self.dimension, acc)

    def _check_same_dimension(self, other: Polynomial) -> None:
        if self.dimension != other.dimension:
            raise DimensionMismatchError(
                f"polynomial dimensions differ: {self.dimension} vs {other.dimension}"
            )

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            factors = [f"x{i + 1}^{p}" if p > 1 else f"x{i + 1}" for i, p in enumerate(e) if p]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)


_ZERO = Fraction(0)


class BasisTerm:
    """One monomial polydifferential operator ``x^(x_part) d^(s1) (x) ... (x) d^(sp)``.

    ``slots`` may be empty (an arity-0 operator is a monomial of the algebra
    itself) and may contain the zero multi-index: a ``d^0`` slot acts as the
    identity on its argument, and is distinct from the slot being absent.
    """

    __slots__ = ("dimension", "x_part", "slots")

    def __init__(self, dimension: int, x_part: Sequence[int], slots: Iterable[Sequence[int]] = ()):
        _check_dimension(dimension)
        x_part = _check_index(x_part, dimension, nonnegative=True)
        slots = tuple(_check_index(s, dimension, nonnegative=True) for s in slots)
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "x_part", x_part)
        object.__setattr__(self, "slots", slots)

    def __setattr__(self, name, value):
        raise AttributeError("BasisTerm is immutable")

    @property
    def arity(self) -> int:
        return len(self.slots)

    @property
    def sort_key(self):
        return (len(self.slots), self.x_part, self.slots)

    def __eq__(self, other):
        return (
            isinstance(other, BasisTerm)
            and self.dimension == other.dimension
            and self.x_part == other.x_part
            and self.slots == other.slots
        )

    def __hash__(self):
        return hash((self.dimension, self.x_part, self.slots))

    def __lt__(self, other: BasisTerm):
        return self.sort_key < other.sort_key

    def __repr__(self):
        factors = []
        if any(self.x_part):
            factors.append(f"x^{self.x_part}")
        factors.extend(f"d^{s}" for s in self.slots)
        return "(x)".join(factors) if factors else "1"


class Cochain:
    """Finite rational combination of basis terms, kept in canonical form.

    Construction merges duplicate terms, drops zero coefficients and orders
    terms deterministically, so ``==`` decides mathematical equality.
    """

    __slots__ = ("dimension", "_terms")

    def __init__(self, dimension: int, terms=()):
        _check_dimension(dimension)
        acc: dict[BasisTerm, Fraction] = {}
        for term, coeff in _term_pairs(terms):
            if not isinstance(term, BasisTerm):
                raise TypeError(f"cochain terms must be BasisTerm, got {type(term).__name__}")
            if term.dimension != dimension:
                raise DimensionMismatchError(
                    f"term dimension {term.dimension} does not match cochain dimension {dimension}"
                )
            c = acc.get(term, _ZERO) + _as_fraction(coeff)
            if c:
                acc[term] = c
            else:
                acc.pop(term, None)
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(
            self, "_terms", tuple(sorted(acc.items(), key=lambda item: item[0].sort_key))
        )

    def __setattr__(self, name, value):
        raise AttributeError("Cochain is immutable")

    @classmethod
    def zero(cls, dimension: int) -> Cochain:
        return cls(dimension)

    @classmethod
    def single(cls, term: BasisTerm, coeff: Scalar = 1) -> Cochain:
        return cls(term.dimension, {term: coeff})

    def items(self) -> Iterator[tuple[BasisTerm, Fraction]]:
        return iter(self._terms)

    def coefficient(self, term: BasisTerm) -> Fraction:
        for t, c in self._terms:
            if t == term:
                return c
        return _ZERO

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def arities(self) -> tuple[int, ...]:
        return tuple(sorted({t.arity for t, _ in self._terms}))

    def homogeneous_arity(self) -> int:
        """Arity of an arity-homogeneous nonzero cochain."""
        arities = self.arities()
        if len(arities) != 1:
            raise ArityError(f"cochain is not arity-homogeneous (arities {arities})")
        return arities[0]

    def components_by_arity(self) -> dict[int, Cochain]:
        buckets: dict[int, list] = {}
        for t, c in self._terms:
            buckets.setdefault(t.arity, []).append((t, c))
        return {p: Cochain(self.dimension, pairs) for p, pairs in sorted(buckets.items())}

    def apply(self, args: Sequence[Polynomial]) -> Polynomial:
        """Evaluate on a tuple of polynomials, one per slot.

        Every term must have arity ``len(args)``; the zero cochain accepts
        any argument count.
        """
        for u in args:
            if not isinstance(u, Polynomial):
                raise TypeError("apply expects Polynomial arguments")
            if u.dimension != self.dimension:
                raise DimensionMismatchError(
                    f"argument dimension {u.dimension} does not match cochain dimension {self.dimension}"
                )
        p = len(args)
        acc: dict[Index, Fraction] = {}
        for term, coeff in self._terms:
            if term.arity != p:
                raise ArityError(f"term of arity {term.arity} applied to {p} arguments")
            value = Polynomial.monomial(self.dimension, term.x_part, coeff)
            for slot, u in zip(term.slots, args):
                if value.is_zero:
                    break
                value = value * u.derive(slot)
            for e, c in value.items():
                acc[e] = acc.get(e, _ZERO) + c
        return Polynomial(self.dimension, acc)

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.dimension == other.dimension
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.dimension, self._terms))

    def __add__(self, other: Cochain) -> Cochain:
        if not isinstance(other, Cochain):
            return NotImplemented
        if self.dimension != other.dimension:
            raise DimensionMismatchError(
                f"cochain dimensions differ: {self.dimension} vs {other.dimension}"
            )
        acc = dict(self._terms)
        for t, c in other._terms:
            acc[t] = acc.get(t, _ZERO) + c
        return Cochain(self.dimension, acc)

    def __sub__(self, other: Cochain) -> Cochain:
        return self + (-other)

    def __neg__(self) -> Cochain:
        return Cochain(self.dimension, {t: -c for t, c in self._terms})

    def __mul__(self, scalar) -> Cochain:
        s = _as_fraction(scalar)
        return Cochain(self.dimension, {t: c * s for t, c in self._terms})

    def __rmul__(self, scalar) -> Cochain:
        return self.__mul__(scalar)

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            repr(t) if c == 1 else f"{c}*{t!r}" for t, c in self._terms
        )


@lru_cache(maxsize=None)
def _int_compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    """Ordered compositions of ``total`` into ``parts`` nonnegative integers."""
    if parts == 0:
        return ((),) if total == 0 else ()
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total + 1):
        for rest in _int_compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def index_splits(a: Index, parts: int) -> tuple[tuple[tuple[Index, ...], int], ...]:
    """Ordered splits of a multi-index into ``parts`` pieces, with coefficients.

    Yields every tuple ``(b_1, ..., b_parts)`` of multi-indices summing to
    ``a`` componentwise, paired with the product over coordinates of the
    multinomial coefficient ``a_i! / (b_1_i! ... b_parts_i!)``.  This is the
    expansion rule for a mixed partial of a ``parts``-fold product.
    """
    n = len(a)
    if parts == 0:
        return (((), 1),) if not any(a) else ()
    per_dim = [_int_compositions(a[i], parts) for i in range(n)]
    out = []
    for combo in _cartesian(*per_dim):
        pieces = tuple(tuple(combo[i][j] for i in range(n)) for j in range(parts))
        coeff = 1
        for i in range(n):
            c = factorial(a[i])
            for v in combo[i]:
                c //= factorial(v)
            coeff *= c
        out.append((pieces, coeff))
    return tuple(out)


def leibniz_split(a: Sequence[int]) -> tuple[tuple[Index, Index, int], ...]:
    """All two-piece splits of ``a`` with binomial coefficients.

    ``d^a(u v) = sum coeff * (d^b u)(d^(a-b) v)`` over the returned triples
    ``(b, a - b, coeff)``.
    """
    a = tuple(a)
    return tuple((pieces[0], pieces[1], coeff) for pieces, coeff in index_splits(a, 2))
