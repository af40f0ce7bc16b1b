"""Weight and bigrade decompositions, semigroup subalgebras, involutions, filtration.

Bracketing with the commuting vector fields ``x_i d_i`` scales a basis term
by the integer vector ``x_part - sum(slots)``; that vector is the term's
*weight*, and the *bigrade* pairs it with ``x_part + sum(slots)``.  Direct
sums of weight spaces over an additive semigroup of weights are closed under
the cup product, the bracket and the coboundary, which is what the
membership, projection, ideal, involution and filtration operations in this
module compute with.

Semigroup membership in Z^n is decided by an exhaustive bounded search with
certificates.  The answer is three-valued: a negative is only reported when
the search space is provably exhausted, which happens exactly when the
origin is outside the convex hull of the generators (then any representation
has a certified length bound).  Otherwise a search that hits the cap reports
``inconclusive`` rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .cochains import BasisTerm, Cochain, DimensionMismatchError, Index, index_add, zero_index
from .linsolve import solve_unique

YES = "yes"
NO = "no"
INCONCLUSIVE = "inconclusive"


class InconclusiveMembershipError(Exception):
    """A definite semigroup decision was required but the search cap bound."""


def weight_of(term: BasisTerm) -> Index:
    """x-exponent minus the sum of slot orders, an integer vector."""
    total = term.x_part
    for s in term.slots:
        total = tuple(t - v for t, v in zip(total, s))
    return total


def bigrade_of(term: BasisTerm) -> tuple[Index, Index]:
    """The pair (x_part - sum(slots), x_part + sum(slots))."""
    down = term.x_part
    up = term.x_part
    for s in term.slots:
        down = tuple(d - v for d, v in zip(down, s))
        up = tuple(u + v for u, v in zip(up, s))
    return down, up


def decompose_by_weight(c: Cochain) -> dict[Index, Cochain]:
    buckets: dict[Index, list] = {}
    for t, coeff in c.items():
        buckets.setdefault(weight_of(t), []).append((t, coeff))
    return {w: Cochain(c.dimension, pairs) for w, pairs in sorted(buckets.items())}


def decompose_by_bigrade(c: Cochain) -> dict[tuple[Index, Index], Cochain]:
    buckets: dict[tuple[Index, Index], list] = {}
    for t, coeff in c.items():
        buckets.setdefault(bigrade_of(t), []).append((t, coeff))
    return {bg: Cochain(c.dimension, pairs) for bg, pairs in sorted(buckets.items())}


def is_weight_homogeneous(c: Cochain) -> bool:
    return len({weight_of(t) for t, _ in c.items()}) <= 1


def scaling_field(dimension: int, i: int) -> Cochain:
    """The vector field ``x_i d_i`` whose brackets read off weights (1-based i)."""
    if not 1 <= i <= dimension:
        raise ValueError(f"coordinate index {i} out of range 1..{dimension}")
    e = tuple(1 if j == i - 1 else 0 for j in range(dimension))
    return Cochain.single(BasisTerm(dimension, e, (e,)))


# ---------------------------------------------------------------------------
# Finitely generated additive semigroups of Z^n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemigroupSpec:
    """Additive subsemigroup of Z^n given by generators.

    Membership means a nonempty nonnegative integer combination of the
    generators; the zero vector belongs only if the generators can cancel.
    ``search_cap`` bounds the total number of generator uses the membership
    search will try.
    """

    dimension: int
    generators: tuple[Index, ...]
    search_cap: int = 32

    def __post_init__(self):
        if self.dimension < 1:
            raise DimensionMismatchError("dimension must be positive")
        gens = []
        for g in self.generators:
            g = tuple(g)
            if len(g) != self.dimension:
                raise DimensionMismatchError(
                    f"generator {g} has length {len(g)}, expected {self.dimension}"
                )
            gens.append(g)
        object.__setattr__(self, "generators", tuple(sorted(set(gens))))
        if self.search_cap < 1:
            raise ValueError("search_cap must be positive")


@dataclass(frozen=True)
class Membership:
    """Three-valued decision with an optional certificate.

    A ``yes`` carries generator multiplicities (aligned with the spec's
    sorted generators) witnessing the membership.
    """

    status: str
    certificate: Optional[tuple[int, ...]] = None

    @property
    def is_yes(self) -> bool:
        return self.status == YES

    @property
    def is_no(self) -> bool:
        return self.status == NO


def _min_norm_hull_point(
    generators: tuple[Index, ...],
) -> tuple[tuple[Fraction, ...], Fraction]:
    """Exact minimum-norm point of the convex hull of the generators.

    Enumerates affinely independent subsets (Caratheodory bound n+1),
    projects the origin onto each affine hull, and keeps the best projection
    that lands inside its simplex.  Returns the point and its squared norm;
    a squared norm of zero means the origin lies in the hull, i.e. the
    generators admit cancellation.
    """
    n = len(generators[0])
    best: Optional[tuple[Fraction, ...]] = None
    best_sq: Optional[Fraction] = None
    for size in range(1, min(len(generators), n + 1) + 1):
        for subset in combinations(generators, size):
            rows: list[list[Fraction]] = [[Fraction(1)] * size]
            rhs: list[Fraction] = [Fraction(1)]
            base = subset[0]
            for j in range(1, size):
                direction = [subset[j][i] - base[i] for i in range(n)]
                rows.append(
                    [Fraction(sum(subset[m][i] * direction[i] for i in range(n))) for m in range(size)]
                )
                rhs.append(Fraction(0))
            weights = solve_unique(rows, rhs)
            if weights is None or any(w < 0 for w in weights):
                continue
            point = tuple(
                sum((w * p[i] for w, p in zip(weights, subset)), Fraction(0)) for i in range(n)
            )
            sq = sum((v * v for v in point), Fraction(0))
            if best_sq is None or sq < best_sq:
                best, best_sq = point, sq
    assert best is not None and best_sq is not None
    return best, best_sq


def semigroup_member(spec: SemigroupSpec, a: Sequence[int], min_count: int = 1) -> Membership:
    """Decide whether ``a`` is a sum of at least ``min_count`` generators.

    Breadth-first over representation length.  Two negatives are provable: a
    target outside the integer span of the generators, and, when the origin
    is outside the convex hull of the generators, a search exhausted below
    the length bound ``<a, w> / |w|^2`` given by the hull's minimum-norm
    point ``w``.  Otherwise a cap-bound search is reported as inconclusive.
    """
    a = tuple(a)
    if len(a) != spec.dimension:
        raise DimensionMismatchError(
            f"target {a} has length {len(a)}, expected {spec.dimension}"
        )
    if min_count < 1:
        raise ValueError("min_count must be at least 1")
    gens = spec.generators
    if not gens:
        return Membership(NO)
    if not _in_lattice(a, _lattice_basis(gens, spec.dimension)):
        return Membership(NO)
    w, wsq = _min_norm_hull_point(gens)
    if wsq:
        dot = sum(Fraction(x) * y for x, y in zip(a, w))
        bound = dot / wsq
        limit = int(bound) if bound >= 0 else -1
        if limit < min_count:
            return Membership(NO)
        provable = limit <= spec.search_cap
        limit = min(limit, spec.search_cap)
    else:
        provable = False
        limit = spec.search_cap

    m = len(gens)
    level: dict[Index, tuple[int, ...]] = {zero_index(spec.dimension): (0,) * m}
    for steps in range(1, limit + 1):
        nxt: dict[Index, tuple[int, ...]] = {}
        for vec, counts in level.items():
            for gi, g in enumerate(gens):
                nv = index_add(vec, g)
                if nv not in nxt:
                    nxt[nv] = counts[:gi] + (counts[gi] + 1,) + counts[gi + 1:]
        level = nxt
        if steps >= min_count and a in level:
            return Membership(YES, level[a])
    return Membership(NO) if provable else Membership(INCONCLUSIVE)


def _combine_statuses(statuses: Iterable[str]) -> str:
    worst = YES
    for s in statuses:
        if s == NO:
            return NO
        if s == INCONCLUSIVE:
            worst = INCONCLUSIVE
    return worst


def in_subalgebra(c: Cochain, spec: SemigroupSpec) -> Membership:
    """Whether every weight component of ``c`` has weight in the semigroup."""
    if c.dimension != spec.dimension:
        raise DimensionMismatchError("cochain and semigroup dimensions differ")
    return Membership(
        _combine_statuses(semigroup_member(spec, w).status for w in decompose_by_weight(c))
    )


def project_subalgebra(c: Cochain, spec: SemigroupSpec) -> Cochain:
    """Keep exactly the weight components with weight in the semigroup.

    Raises ``InconclusiveMembershipError`` when some component cannot be
    decided within the search cap; an undecided component is never silently
    kept or dropped.
    """
    if c.dimension != spec.dimension:
        raise DimensionMismatchError("cochain and semigroup dimensions differ")
    kept = Cochain.zero(c.dimension)
    for w, component in decompose_by_weight(c).items():
        decision = semigroup_member(spec, w)
        if decision.status == INCONCLUSIVE:
            raise InconclusiveMembershipError(
                f"membership of weight {w} undecided within search cap {spec.search_cap}"
            )
        if decision.is_yes:
            kept = kept + component
    return kept


def in_ideal(c: Cochain, spec: SemigroupSpec, fold: int = 2) -> Membership:
    """Whether every weight of ``c`` is a sum of at least ``fold`` semigroup elements.

    A weight is a ``fold``-fold sum of members exactly when it is a sum of at
    least ``fold`` generators: any representation that long can be grouped
    into ``fold`` nonempty batches.
    """
    if fold < 1:
        raise ValueError("fold must be at least 1")
    if c.dimension != spec.dimension:
        raise DimensionMismatchError("cochain and semigroup dimensions differ")
    return Membership(
        _combine_statuses(
            semigroup_member(spec, w, min_count=fold).status for w in decompose_by_weight(c)
        )
    )


# ---------------------------------------------------------------------------
# Parity involutions
# ---------------------------------------------------------------------------


def _check_indices(indices: Sequence[int], dimension: int) -> tuple[int, ...]:
    idx = tuple(indices)
    if not idx:
        raise ValueError("index set must be nonempty")
    if len(set(idx)) != len(idx):
        raise ValueError(f"index set {idx} has repeats")
    for i in idx:
        if not 1 <= i <= dimension:
            raise ValueError(f"coordinate index {i} out of range 1..{dimension}")
    return idx


def theta_apply(c: Cochain, indices: Sequence[int]) -> Cochain:
    """Sign each term by the parity of its weight summed over ``indices`` (1-based)."""
    idx = _check_indices(indices, c.dimension)
    out = {}
    for t, coeff in c.items():
        w = weight_of(t)
        parity = sum(w[i - 1] for i in idx)
        out[t] = -coeff if parity % 2 else coeff
    return Cochain(c.dimension, out)


def theta_split(c: Cochain, indices: Sequence[int]) -> tuple[Cochain, Cochain]:
    """Split into the fixed and anti-fixed parts of the parity involution.

    Returns ``(plus, minus)`` with ``plus + minus == c``, the plus part fixed
    by ``theta_apply`` and the minus part negated by it.
    """
    half = Fraction(1, 2)
    image = theta_apply(c, indices)
    return (c + image) * half, (c - image) * half


def even_weight_sum(indices: Sequence[int], weight: Sequence[int]) -> bool:
    """Whether the selected weight coordinates sum to an even number."""
    return sum(weight[i - 1] for i in indices) % 2 == 0


# ---------------------------------------------------------------------------
# Subgroup / complement criterion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubgroupReport:
    """Outcome of checking a candidate weight subgroup against its complement.

    The candidate set is the monoid generated by ``generators`` (it always
    contains the zero weight, as any subgroup must).  ``is_subgroup`` is the
    decision whether that set is a subgroup; ``counterexample``, when
    present, is a pair ``(h, k)`` with ``h`` in the candidate, ``k`` outside,
    and ``h + k`` back inside, witnessing that products and brackets of the
    candidate's cochains with complement cochains escape the complement.
    ``sample_failures`` lists sampled cochain-level closure violations.
    """

    dimension: int
    generators: tuple[Index, ...]
    is_subgroup: str  # yes / no / inconclusive
    samples_run: int
    sample_failures: tuple[tuple[Index, Index], ...]
    counterexample: Optional[tuple[Index, Index]]

    @property
    def consistent(self) -> bool:
        """Whether the observations match the subgroup criterion both ways."""
        if self.is_subgroup == YES:
            return not self.sample_failures and self.counterexample is None
        if self.is_subgroup == NO:
            return self.counterexample is not None
        return False


def _candidate_status(spec: SemigroupSpec, v: Index) -> str:
    if not any(v):
        return YES
    return semigroup_member(spec, v).status


def _lattice_basis(vectors: Sequence[Index], n: int) -> list[list[int]]:
    """Integer echelon basis of the subgroup generated by the vectors."""
    rows = [list(v) for v in vectors if any(v)]
    basis: list[list[int]] = []
    for col in range(n):
        while True:
            rows = [r for r in rows if any(r)]
            nonzero = [r for r in rows if r[col]]
            if len(nonzero) <= 1:
                break
            nonzero.sort(key=lambda r: abs(r[col]))
            head = nonzero[0]
            for r in nonzero[1:]:
                q = r[col] // head[col]
                if q:
                    for i in range(n):
                        r[i] -= q * head[i]
        pivot = next((r for r in rows if r[col]), None)
        if pivot is not None:
            basis.append(pivot)
            rows = [r for r in rows if r is not pivot]
    return basis


def _in_lattice(v: Index, basis: Sequence[Sequence[int]]) -> bool:
    residue = list(v)
    for row in basis:
        lead = next(i for i, x in enumerate(row) if x)
        if residue[lead] % row[lead]:
            return False
        q = residue[lead] // row[lead]
        if q:
            for i in range(len(residue)):
                residue[i] -= q * row[i]
    return not any(residue)


def _window(dimension: int, radius: int) -> list[Index]:
    from itertools import product

    vectors = [tuple(v) for v in product(range(-radius, radius + 1), repeat=dimension)]
    vectors.sort(key=lambda v: (sum(abs(x) for x in v), v))
    return vectors


def subgroup_complement_check(
    spec: SemigroupSpec,
    *,
    trials: int = 20,
    seed: int = 0,
    window_radius: int = 3,
) -> SubgroupReport:
    """Check the two-sided subgroup criterion for a candidate weight set.

    The candidate is a subgroup exactly when every generator's negative is
    again a member; in that case the candidate coincides with the generated
    lattice and membership is decided exactly by integer echelon reduction.
    For the forward direction the check builds random weight-homogeneous
    cochains with weights inside the candidate and in its complement, and
    verifies cup products (both orders) and brackets stay in the
    complement's span.  For the converse it searches a small weight window
    for an explicit violation ``h + k`` back in the candidate.
    """
    from . import axioms
    from .operations import bracket, cup
    import random

    statuses = [_candidate_status(spec, tuple(-x for x in g)) for g in spec.generators]
    is_subgroup = _combine_statuses(statuses) if spec.generators else NO

    if is_subgroup == YES:
        basis = _lattice_basis(spec.generators, spec.dimension)

        def status(v: Index) -> str:
            return YES if _in_lattice(v, basis) else NO

    else:

        def status(v: Index) -> str:
            return _candidate_status(spec, v)

    window = _window(spec.dimension, window_radius)
    outside = [v for v in window if status(v) == NO]

    counterexample = None
    for h in window:
        if status(h) != YES:
            continue
        for k in outside:
            if status(index_add(h, k)) == YES:
                counterexample = (h, k)
                break
        if counterexample:
            break

    rng = random.Random(seed)
    failures: list[tuple[Index, Index]] = []
    samples_run = 0
    if spec.generators and outside:
        for _ in range(trials):
            counts = [rng.randint(0, 2) for _ in spec.generators]
            if not any(counts):
                counts[rng.randrange(len(counts))] = 1
            h = zero_index(spec.dimension)
            for g, c in zip(spec.generators, counts):
                for _ in range(c):
                    h = index_add(h, g)
            k = rng.choice(outside)
            phi = axioms.random_weight_homogeneous(rng, spec.dimension, h)
            psi = axioms.random_weight_homogeneous(rng, spec.dimension, k)
            samples_run += 1
            escaped = False
            for result in (cup(phi, psi), cup(psi, phi), bracket(phi, psi)):
                for w in decompose_by_weight(result):
                    if status(w) == YES:
                        escaped = True
            if escaped:
                failures.append((h, k))

    return SubgroupReport(
        dimension=spec.dimension,
        generators=spec.generators,
        is_subgroup=is_subgroup,
        samples_run=samples_run,
        sample_failures=tuple(failures),
        counterexample=counterexample,
    )


# ---------------------------------------------------------------------------
# Filtration by bigrade pairs
# ---------------------------------------------------------------------------

LITERAL = "literal"
CUMULATIVE = "cumulative"


def _check_mode(mode: str) -> str:
    if mode not in (LITERAL, CUMULATIVE):
        raise ValueError(f"mode must be '{LITERAL}' or '{CUMULATIVE}', got {mode!r}")
    return mode


def validate_filtration_index(alpha, dimension: int) -> tuple[Index, Index]:
    """An index is a pair (a, b) of integer vectors with a <= b lexicographically."""
    a, b = alpha
    a, b = tuple(a), tuple(b)
    if len(a) != dimension or len(b) != dimension:
        raise DimensionMismatchError(f"filtration index {alpha} does not match dimension {dimension}")
    if not a <= b:
        raise ValueError(f"filtration index {alpha} violates a <= b (lexicographic)")
    return a, b


def filtration_contains(c: Cochain, alpha, mode: str = CUMULATIVE) -> bool:
    """Whether every term of ``c`` lies in the stage indexed by ``alpha``.

    ``literal`` reads the stage as: weight equal to the first component and
    second bigrade component between the two, lexicographically.
    ``cumulative`` reads it as: bigrade at most ``alpha`` in the pair order
    (lexicographic on the first component, ties broken by the second); this
    is the reading under which the stages are monotone in the index, and is
    the default.
    """
    mode = _check_mode(mode)
    a, b = validate_filtration_index(alpha, c.dimension)
    for t, _ in c.items():
        down, up = bigrade_of(t)
        if mode == LITERAL:
            if down != a or not a <= up <= b:
                return False
        else:
            if (down, up) > (a, b):
                return False
    return True


def filtration_index(c: Cochain, mode: str = CUMULATIVE) -> tuple[Index, Index]:
    """The least stage containing ``c``; the zero cochain has none."""
    mode = _check_mode(mode)
    if c.is_zero:
        raise ValueError("the zero cochain has no filtration index")
    bigrades = [bigrade_of(t) for t, _ in c.items()]
    if mode == CUMULATIVE:
        return max(bigrades)
    weights = {bg[0] for bg in bigrades}
    if len(weights) != 1:
        raise ValueError(
            "cochain mixes weights and is contained in no literal filtration stage"
        )
    return (next(iter(weights)), max(bg[1] for bg in bigrades))
