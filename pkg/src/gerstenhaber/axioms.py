"""Seeded randomized verification of the algebra's defining laws.

Every law suite draws bounded random cochains from a seeded generator
(arity at most 3, exponents at most 3, slot orders at most 2, at most 4
terms), checks an exact identity, and reports the number of checks plus a
witness document on failure.  The CLI's ``verify-axioms`` subcommand and the
acceptance tests both run these suites; determinism comes from the seed, so
a reported counterexample can always be replayed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .cochains import (
    BasisTerm,
    Cochain,
    Polynomial,
    _int_compositions,
    leibniz_split,
    zero_index,
)
from .grading import (
    SemigroupSpec,
    bigrade_of,
    decompose_by_bigrade,
    decompose_by_weight,
    even_weight_sum,
    filtration_contains,
    filtration_index,
    in_ideal,
    in_subalgebra,
    scaling_field,
    semigroup_member,
    subgroup_complement_check,
    theta_apply,
    theta_split,
    weight_of,
)
from .operations import (
    bracket,
    cup,
    delta_via_bracket,
    hochschild_delta,
    multiplication_cochain,
)
from .starproduct import obstruction, solve_maurer_cartan, associativity_defect
from .sexpr import cochain_to_node

# ---------------------------------------------------------------------------
# Random generators (all bounds per the desk-scale sampling policy above)
# ---------------------------------------------------------------------------


def random_fraction(rng: random.Random) -> Fraction:
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    return Fraction(num, rng.randint(1, 3))


def random_exponent(rng: random.Random, dim: int, max_total: int) -> tuple[int, ...]:
    total = rng.randint(0, max_total)
    return rng.choice(_int_compositions(total, dim))


def random_basis_term(
    rng: random.Random, dim: int, arity: int, max_x: int = 3, max_slot: int = 2
) -> BasisTerm:
    x_part = random_exponent(rng, dim, max_x)
    slots = tuple(random_exponent(rng, dim, max_slot) for _ in range(arity))
    return BasisTerm(dim, x_part, slots)


def random_homogeneous_cochain(
    rng: random.Random,
    dim: int = 2,
    arity: Optional[int] = None,
    max_terms: int = 4,
    max_x: int = 3,
    max_slot: int = 2,
) -> Cochain:
    if arity is None:
        arity = rng.randint(0, 3)
    pairs = []
    for _ in range(rng.randint(1, max_terms)):
        pairs.append((random_basis_term(rng, dim, arity, max_x, max_slot), random_fraction(rng)))
    return Cochain(dim, pairs)


def random_cochain(rng: random.Random, dim: int = 2, max_terms: int = 4) -> Cochain:
    pairs = []
    for _ in range(rng.randint(1, max_terms)):
        pairs.append((random_basis_term(rng, dim, rng.randint(0, 3)), random_fraction(rng)))
    return Cochain(dim, pairs)


def random_polynomial(
    rng: random.Random, dim: int = 2, max_degree: int = 3, max_terms: int = 3
) -> Polynomial:
    pairs = []
    for _ in range(rng.randint(1, max_terms)):
        pairs.append((random_exponent(rng, dim, max_degree), random_fraction(rng)))
    return Polynomial(dim, pairs)


def random_vector_field(rng: random.Random, dim: int = 2, max_terms: int = 2) -> Cochain:
    """Arity-1 cochain whose slots are single first derivatives."""
    pairs = []
    for _ in range(rng.randint(1, max_terms)):
        axis = rng.randrange(dim)
        direction = tuple(1 if j == axis else 0 for j in range(dim))
        pairs.append(
            (BasisTerm(dim, random_exponent(rng, dim, 2), (direction,)), random_fraction(rng))
        )
    return Cochain(dim, pairs)


def random_weight_homogeneous(
    rng: random.Random,
    dim: int,
    weight: Sequence[int],
    max_terms: int = 2,
    max_extra: int = 2,
) -> Cochain:
    """Nonzero cochain all of whose terms carry the given weight."""
    weight = tuple(weight)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        arity = rng.randint(1, 3)
        total = tuple(max(0, -w) + rng.randint(0, max_extra) for w in weight)
        x_part = tuple(w + t for w, t in zip(weight, total))
        per_dim = [rng.choice(_int_compositions(total[i], arity)) for i in range(dim)]
        slots = tuple(tuple(per_dim[i][j] for i in range(dim)) for j in range(arity))
        terms[BasisTerm(dim, x_part, slots)] = random_fraction(rng)
    return Cochain(dim, terms)


# ---------------------------------------------------------------------------
# Law harness
# ---------------------------------------------------------------------------


@dataclass
class LawResult:
    name: str
    ok: bool
    checks: int
    witness: Optional[tuple] = None  # s-expression node attached to the report


Law = Callable[[random.Random, int], LawResult]


def _law_rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _fail(name: str, checks: int, *docs) -> LawResult:
    return LawResult(name, False, checks, ("counterexample",) + tuple(docs))


# -- core model laws --------------------------------------------------------


def law_canonical_form(rng: random.Random, trials: int) -> LawResult:
    name = "canonical-form"
    for i in range(trials):
        c = random_cochain(rng)
        # split every coefficient in two, shuffle, rebuild: same canonical form
        pairs = []
        for t, coeff in c.items():
            cut = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
            pairs.append((t, cut))
            pairs.append((t, coeff - cut))
        rng.shuffle(pairs)
        rebuilt = Cochain(c.dimension, pairs)
        if rebuilt != c or Cochain(c.dimension, dict(c.items())) != c:
            return _fail(name, i + 1, cochain_to_node(c))
        rejoined = Cochain.zero(c.dimension)
        for part in c.components_by_arity().values():
            rejoined = rejoined + part
        if rejoined != c:
            return _fail(name, i + 1, cochain_to_node(c))
        args = [random_polynomial(rng) for _ in range(3)]
        homog = random_homogeneous_cochain(rng, arity=3)
        if homog.apply(args) != Cochain(2, dict(homog.items())).apply(args):
            return _fail(name, i + 1, cochain_to_node(homog))
    return LawResult(name, True, trials)


def law_canonical_congruence(rng: random.Random, trials: int) -> LawResult:
    name = "canonical-congruence"
    for i in range(trials):
        a = random_cochain(rng)
        b = random_cochain(rng)
        s = random_fraction(rng)
        if (a + b) * s != a * s + b * s or a + b != b + a or a - a != Cochain.zero(2):
            return _fail(name, i + 1, cochain_to_node(a), cochain_to_node(b))
    return LawResult(name, True, trials)


def law_apply_multilinearity(rng: random.Random, trials: int) -> LawResult:
    name = "apply-multilinearity"
    for i in range(trials):
        p = rng.randint(1, 3)
        f = random_homogeneous_cochain(rng, arity=p)
        args = [random_polynomial(rng, max_degree=2) for _ in range(p)]
        j = rng.randrange(p)
        u = random_polynomial(rng, max_degree=2)
        v = random_polynomial(rng, max_degree=2)
        s, t = random_fraction(rng), random_fraction(rng)
        mixed = list(args)
        mixed[j] = u * s + v * t
        left = f.apply(mixed)
        with_u = list(args)
        with_u[j] = u
        with_v = list(args)
        with_v[j] = v
        right = f.apply(with_u) * s + f.apply(with_v) * t
        if left != right:
            return _fail(name, i + 1, cochain_to_node(f))
    return LawResult(name, True, trials)


def law_leibniz_consistency(rng: random.Random, trials: int) -> LawResult:
    name = "leibniz-consistency"
    for i in range(trials):
        u = random_polynomial(rng, max_degree=3)
        v = random_polynomial(rng, max_degree=3)
        a = random_exponent(rng, 2, 3)
        total = Polynomial.zero(2)
        for b, rest, coeff in leibniz_split(a):
            total = total + u.derive(b) * v.derive(rest) * coeff
        if total != (u * v).derive(a):
            return _fail(name, i + 1)
    return LawResult(name, True, trials)


# -- Gerstenhaber structure laws ---------------------------------------------


def law_cup_associativity(rng: random.Random, trials: int) -> LawResult:
    name = "cup-associativity"
    for i in range(trials):
        f, g, h = (random_cochain(rng) for _ in range(3))
        if cup(cup(f, g), h) != cup(f, cup(g, h)):
            return _fail(name, i + 1, cochain_to_node(f), cochain_to_node(g), cochain_to_node(h))
    return LawResult(name, True, trials)


def law_bracket_antisymmetry(rng: random.Random, trials: int) -> LawResult:
    name = "bracket-antisymmetry"
    for i in range(trials):
        p, q = rng.randint(0, 3), rng.randint(0, 3)
        f = random_homogeneous_cochain(rng, arity=p)
        g = random_homogeneous_cochain(rng, arity=q)
        sign = -1 if ((p + 1) * (q + 1)) % 2 else 1
        if bracket(f, g) != bracket(g, f) * (-sign):
            return _fail(name, i + 1, cochain_to_node(f), cochain_to_node(g))
    return LawResult(name, True, trials)


def law_jacobi_identity(rng: random.Random, trials: int) -> LawResult:
    name = "jacobi-identity"
    for i in range(trials):
        arities = [rng.randint(0, 3) for _ in range(3)]
        f, g, h = (random_homogeneous_cochain(rng, arity=p, max_terms=3) for p in arities)
        p, q, r = arities

        def sgn(e: int) -> int:
            return -1 if e % 2 else 1

        total = (
            bracket(f, bracket(g, h)) * sgn((p + 1) * (r + 1))
            + bracket(g, bracket(h, f)) * sgn((q + 1) * (p + 1))
            + bracket(h, bracket(f, g)) * sgn((r + 1) * (q + 1))
        )
        if not total.is_zero:
            return _fail(name, i + 1, cochain_to_node(f), cochain_to_node(g), cochain_to_node(h))
    return LawResult(name, True, trials)


def law_delta_squared(rng: random.Random, trials: int) -> LawResult:
    name = "delta-squared-zero"
    if not hochschild_delta(multiplication_cochain(2)).is_zero:
        return _fail(name, 0, cochain_to_node(multiplication_cochain(2)))
    for i in range(trials):
        f = random_cochain(rng)
        if not hochschild_delta(hochschild_delta(f)).is_zero:
            return _fail(name, i + 1, cochain_to_node(f))
    return LawResult(name, True, trials + 1)


def law_delta_bracket_agreement(rng: random.Random, trials: int) -> LawResult:
    name = "delta-bracket-agreement"
    for i in range(trials):
        f = random_cochain(rng)
        if hochschild_delta(f) != delta_via_bracket(f):
            return _fail(name, i + 1, cochain_to_node(f))
    return LawResult(name, True, trials)


def law_vector_field_leibniz(rng: random.Random, trials: int) -> LawResult:
    name = "vector-field-leibniz"
    for i in range(trials):
        chi = random_vector_field(rng)
        f = random_homogeneous_cochain(rng, max_terms=3)
        g = random_homogeneous_cochain(rng, max_terms=3)
        lhs = bracket(chi, cup(f, g))
        rhs = cup(bracket(chi, f), g) + cup(f, bracket(chi, g))
        if lhs != rhs:
            return _fail(
                name, i + 1, cochain_to_node(chi), cochain_to_node(f), cochain_to_node(g)
            )
    return LawResult(name, True, trials)


def _bracket_eval_direct(f: Cochain, g: Cochain, p: int, q: int, args: list[Polynomial]) -> Polynomial:
    """Right-hand side of the bracket's defining sum, evaluated on arguments
    without forming the bracket cochain (independent of the insertion engine)."""
    dim = f.dimension

    def sgn(e: int) -> int:
        return -1 if e % 2 else 1

    total = Polynomial.zero(dim)
    for k in range(1, p + 1):
        inner = g.apply(args[k - 1 : k - 1 + q])
        outer = f.apply(args[: k - 1] + [inner] + args[k - 1 + q :])
        total = total + outer * sgn((k - 1) * (q - 1))
    swap = -sgn((p - 1) * (q - 1))
    for k in range(1, q + 1):
        inner = f.apply(args[k - 1 : k - 1 + p])
        outer = g.apply(args[: k - 1] + [inner] + args[k - 1 + p :])
        total = total + outer * (swap * sgn((k - 1) * (p - 1)))
    return total


def law_evaluation_coherence(rng: random.Random, trials: int) -> LawResult:
    name = "evaluation-coherence"
    for i in range(trials):
        p = rng.randint(0, 2)
        q = rng.randint(max(0, 1 - p), 2)
        f = random_homogeneous_cochain(rng, arity=p, max_terms=2)
        g = random_homogeneous_cochain(rng, arity=q, max_terms=2)
        args = [random_polynomial(rng, max_degree=2, max_terms=2) for _ in range(p + q - 1)]
        via_cochain = bracket(f, g).apply(args)
        direct = _bracket_eval_direct(f, g, p, q, args)
        if via_cochain != direct:
            return _fail(name, i + 1, cochain_to_node(f), cochain_to_node(g))
    return LawResult(name, True, trials)


# -- grading laws ------------------------------------------------------------


def law_weight_eigenvalue(rng: random.Random, trials: int) -> LawResult:
    name = "weight-eigenvalue"
    checks = 0
    for i in range(trials):
        t = random_basis_term(rng, 2, rng.randint(0, 3))
        c = Cochain.single(t)
        w = weight_of(t)
        for axis in (1, 2):
            checks += 1
            if bracket(scaling_field(2, axis), c) != c * w[axis - 1]:
                return _fail(name, checks, cochain_to_node(c))
    h1, h2 = scaling_field(2, 1), scaling_field(2, 2)
    if not bracket(h1, h2).is_zero or not bracket(h1, h1).is_zero:
        return _fail(name, checks, cochain_to_node(h1))
    return LawResult(name, True, checks + 2)


def law_weight_additivity(rng: random.Random, trials: int) -> LawResult:
    name = "weight-additivity"
    for i in range(trials):
        a = (rng.randint(-2, 2), rng.randint(-2, 2))
        b = (rng.randint(-2, 2), rng.randint(-2, 2))
        f = random_weight_homogeneous(rng, 2, a)
        g = random_weight_homogeneous(rng, 2, b)
        target = tuple(x + y for x, y in zip(a, b))
        for result in (cup(f, g), bracket(f, g)):
            if set(decompose_by_weight(result)) - {target}:
                return _fail(name, i + 1, cochain_to_node(f), cochain_to_node(g))
        if set(decompose_by_weight(hochschild_delta(f))) - {a}:
            return _fail(name, i + 1, cochain_to_node(f))
    return LawResult(name, True, trials)


def law_delta_preserves_bigrade(rng: random.Random, trials: int) -> LawResult:
    name = "delta-preserves-bigrade"
    for i in range(trials):
        c = random_cochain(rng)
        for t, _ in c.items():
            bg = bigrade_of(t)
            image = hochschild_delta(Cochain.single(t))
            if any(bigrade_of(s) != bg for s, _ in image.items()):
                return _fail(name, i + 1, cochain_to_node(Cochain.single(t)))
    return LawResult(name, True, trials)


def law_decomposition_partition(rng: random.Random, trials: int) -> LawResult:
    name = "decomposition-partition"
    for i in range(trials):
        c = random_cochain(rng)
        total_w = Cochain.zero(2)
        for w, part in decompose_by_weight(c).items():
            if {weight_of(t) for t, _ in part.items()} != {w}:
                return _fail(name, i + 1, cochain_to_node(c))
            total_w = total_w + part
        total_b = Cochain.zero(2)
        for bg, part in decompose_by_bigrade(c).items():
            if {bigrade_of(t) for t, _ in part.items()} != {bg}:
                return _fail(name, i + 1, cochain_to_node(c))
            if {weight_of(t) for t, _ in part.items()} != {bg[0]}:
                return _fail(name, i + 1, cochain_to_node(c))
            total_b = total_b + part
        if total_w != c or total_b != c:
            return _fail(name, i + 1, cochain_to_node(c))
    return LawResult(name, True, trials)


_THETA_SETS = ((1,), (2,), (1, 2))


def law_theta_involution(rng: random.Random, trials: int) -> LawResult:
    name = "theta-involution"
    checks = 0
    for i in range(trials):
        c = random_cochain(rng)
        for idx in _THETA_SETS:
            checks += 1
            if theta_apply(theta_apply(c, idx), idx) != c:
                return _fail(name, checks, cochain_to_node(c))
            plus, minus = theta_split(c, idx)
            if plus + minus != c:
                return _fail(name, checks, cochain_to_node(c))
            if theta_apply(plus, idx) != plus or theta_apply(minus, idx) != -minus:
                return _fail(name, checks, cochain_to_node(c))
            if any(
                not even_weight_sum(idx, w) for w in decompose_by_weight(plus)
            ):
                return _fail(name, checks, cochain_to_node(plus))
    return LawResult(name, True, checks)


def law_theta_automorphism(rng: random.Random, trials: int) -> LawResult:
    name = "theta-automorphism"
    checks = 0
    for i in range(trials):
        f = random_cochain(rng, max_terms=3)
        g = random_cochain(rng, max_terms=3)
        for idx in _THETA_SETS:
            checks += 1
            tf, tg = theta_apply(f, idx), theta_apply(g, idx)
            if theta_apply(cup(f, g), idx) != cup(tf, tg):
                return _fail(name, checks, cochain_to_node(f), cochain_to_node(g))
            if theta_apply(bracket(f, g), idx) != bracket(tf, tg):
                return _fail(name, checks, cochain_to_node(f), cochain_to_node(g))
    return LawResult(name, True, checks)


def law_theta_split_table(rng: random.Random, trials: int) -> LawResult:
    name = "theta-split-table"
    checks = 0
    for i in range(trials):
        idx = _THETA_SETS[i % len(_THETA_SETS)]
        plus_f, minus_f = theta_split(random_cochain(rng, max_terms=3), idx)
        plus_g, minus_g = theta_split(random_cochain(rng, max_terms=3), idx)
        table = (
            (plus_f, plus_g, 1),
            (plus_f, minus_g, -1),
            (minus_f, plus_g, -1),
            (minus_f, minus_g, 1),
        )
        for a, b, expected in table:
            for op in (cup, bracket):
                checks += 1
                result = op(a, b)
                if theta_apply(result, idx) != result * expected:
                    return _fail(name, checks, cochain_to_node(a), cochain_to_node(b))
        checks += 1
        delta_plus = hochschild_delta(plus_f)
        if theta_apply(delta_plus, idx) != delta_plus:
            return _fail(name, checks, cochain_to_node(plus_f))
    return LawResult(name, True, checks)


_SAMPLE_SEMIGROUPS = (
    ((-1, -1),),
    ((0, -1),),
    ((1, 0), (-1, 0)),
)


def _random_semigroup_weight(
    rng: random.Random, spec: SemigroupSpec, min_count: int = 1, max_count: int = 3
) -> tuple[int, ...]:
    count = rng.randint(min_count, max_count)
    total = zero_index(spec.dimension)
    for _ in range(count):
        g = rng.choice(spec.generators)
        total = tuple(x + y for x, y in zip(total, g))
    return total


def law_semigroup_closure(rng: random.Random, trials: int) -> LawResult:
    name = "semigroup-closure"
    checks = 0
    for gens in _SAMPLE_SEMIGROUPS:
        spec = SemigroupSpec(dimension=2, generators=gens)
        for _ in range(trials):
            f = random_weight_homogeneous(rng, 2, _random_semigroup_weight(rng, spec))
            g = random_weight_homogeneous(rng, 2, _random_semigroup_weight(rng, spec))
            if not in_subalgebra(f, spec).is_yes:
                return _fail(name, checks, cochain_to_node(f))
            for result in (cup(f, g), bracket(f, g), hochschild_delta(f)):
                checks += 1
                if not result.is_zero and not in_subalgebra(result, spec).is_yes:
                    return _fail(name, checks, cochain_to_node(f), cochain_to_node(g))
    return LawResult(name, True, checks)


def law_ideal_absorption(rng: random.Random, trials: int) -> LawResult:
    name = "ideal-absorption"
    checks = 0
    for gens in _SAMPLE_SEMIGROUPS:
        spec = SemigroupSpec(dimension=2, generators=gens)
        for _ in range(trials):
            f = random_weight_homogeneous(
                rng, 2, _random_semigroup_weight(rng, spec, min_count=2)
            )
            g = random_weight_homogeneous(rng, 2, _random_semigroup_weight(rng, spec))
            if not in_ideal(f, spec, fold=2).is_yes:
                return _fail(name, checks, cochain_to_node(f))
            for result in (cup(f, g), cup(g, f), bracket(f, g)):
                checks += 1
                if not result.is_zero and not in_ideal(result, spec, fold=2).is_yes:
                    return _fail(name, checks, cochain_to_node(f), cochain_to_node(g))
    return LawResult(name, True, checks)


def law_ideal_sum_criterion(rng: random.Random, trials: int) -> LawResult:
    """2-fold ideal equals the subalgebra exactly when the semigroup is sum-stable."""
    name = "ideal-sum-criterion"
    stable = SemigroupSpec(dimension=2, generators=((1, 0), (-1, 0), (0, 1), (0, -1)))
    checks = 0
    for _ in range(trials):
        w = _random_semigroup_weight(rng, stable)
        checks += 1
        member = semigroup_member(stable, w)
        ideal = semigroup_member(stable, w, min_count=2)
        if not (member.is_yes and ideal.is_yes):
            return _fail(name, checks, ("weight",) + w)
    unstable = SemigroupSpec(dimension=2, generators=((-1, -1),))
    checks += 2
    if not semigroup_member(unstable, (-1, -1)).is_yes:
        return _fail(name, checks)
    if not semigroup_member(unstable, (-1, -1), min_count=2).is_no:
        return _fail(name, checks)
    return LawResult(name, True, checks)


def law_subgroup_criterion(rng: random.Random, trials: int) -> LawResult:
    name = "subgroup-criterion"
    lattice = SemigroupSpec(dimension=2, generators=((2, 0), (-2, 0), (0, 1), (0, -1)))
    ray = SemigroupSpec(dimension=2, generators=((1, 0),))
    good = subgroup_complement_check(lattice, trials=max(trials // 4, 5), seed=rng.randrange(2**30))
    bad = subgroup_complement_check(ray, trials=max(trials // 4, 5), seed=rng.randrange(2**30))
    checks = good.samples_run + bad.samples_run + 2
    if good.is_subgroup != "yes" or not good.consistent:
        return _fail(name, checks, ("candidate", "lattice"))
    if bad.is_subgroup != "no" or not bad.consistent or bad.counterexample is None:
        return _fail(name, checks, ("candidate", "ray"))
    h, k = bad.counterexample
    witness = ("witness", h, k, tuple(x + y for x, y in zip(h, k)))
    return LawResult(name, True, checks, witness)


def _pair_add(alpha, beta):
    return (
        tuple(x + y for x, y in zip(alpha[0], beta[0])),
        tuple(x + y for x, y in zip(alpha[1], beta[1])),
    )


def law_filtration_product_rule(rng: random.Random, trials: int) -> LawResult:
    name = "filtration-product-rule"
    for i in range(trials):
        a = (rng.randint(-2, 2), rng.randint(-2, 2))
        b = (rng.randint(-2, 2), rng.randint(-2, 2))
        f = random_weight_homogeneous(rng, 2, a)
        g = random_weight_homogeneous(rng, 2, b)
        alpha = filtration_index(f)
        beta = filtration_index(g)
        target = _pair_add(alpha, beta)
        for result in (cup(f, g), bracket(f, g)):
            if not result.is_zero and not filtration_contains(result, target):
                return _fail(name, i + 1, cochain_to_node(f), cochain_to_node(g))
        df = hochschild_delta(f)
        if not df.is_zero and not filtration_contains(df, alpha):
            return _fail(name, i + 1, cochain_to_node(f))
    return LawResult(name, True, trials)


def law_filtration_monotonicity(rng: random.Random, trials: int) -> LawResult:
    name = "filtration-monotonicity"
    for i in range(trials):
        c = random_cochain(rng)
        if c.is_zero:
            continue
        alpha = filtration_index(c)
        bumps = (
            (alpha[0], tuple(x + y for x, y in zip(alpha[1], (1, 0)))),
            (
                tuple(x + y for x, y in zip(alpha[0], (1, 0))),
                tuple(x + y for x, y in zip(alpha[1], (1, 0))),
            ),
            (alpha[0], tuple(x + y for x, y in zip(alpha[1], (0, 2)))),
        )
        for beta in bumps:
            if not alpha <= beta or not filtration_contains(c, beta):
                return _fail(name, i + 1, cochain_to_node(c))
        if not filtration_contains(c, alpha):
            return _fail(name, i + 1, cochain_to_node(c))
    return LawResult(name, True, trials)


def law_filtration_literal_gap(rng: random.Random, trials: int) -> LawResult:
    """The printed, weight-pinning reading of the stages is not monotone."""
    name = "filtration-literal-gap"
    m = multiplication_cochain(2)
    alpha = ((0, 0), (0, 0))
    beta = ((0, 1), (0, 1))
    ok = (
        alpha < beta
        and filtration_contains(m, alpha, mode="literal")
        and not filtration_contains(m, beta, mode="literal")
        and filtration_contains(m, beta, mode="cumulative")
    )
    witness = ("witness", ("alpha",) + alpha, ("beta",) + beta)
    return LawResult(name, ok, 1, witness if ok else ("counterexample", cochain_to_node(m)))


# -- star-product laws -------------------------------------------------------


def _constant_bivector() -> Cochain:
    return Cochain(
        2,
        {
            BasisTerm(2, (0, 0), ((1, 0), (0, 1))): 1,
            BasisTerm(2, (0, 0), ((0, 1), (1, 0))): -1,
        },
    )


def _linear_bivector() -> Cochain:
    return Cochain(
        2,
        {
            BasisTerm(2, (1, 0), ((1, 0), (0, 1))): 1,
            BasisTerm(2, (1, 0), ((0, 1), (1, 0))): -1,
        },
    )


def law_mc_order_correctness(rng: random.Random, trials: int) -> LawResult:
    name = "mc-order-correctness"
    deformation = solve_maurer_cartan(_constant_bivector(), order=3)
    checks = 0
    for k in range(2, 4):
        checks += 2
        b_k = obstruction(deformation, k)
        if not hochschild_delta(b_k).is_zero:
            return _fail(name, checks, ("order", k))
        if hochschild_delta(deformation.coefficient(k)) != b_k:
            return _fail(name, checks, ("order", k))
    again = solve_maurer_cartan(_constant_bivector(), order=3)
    checks += 1
    if again != deformation:
        return _fail(name, checks, ("order", 0))
    return LawResult(name, True, checks)


def law_mc_ideal_confinement(rng: random.Random, trials: int) -> LawResult:
    name = "mc-ideal-confinement"
    spec = SemigroupSpec(dimension=2, generators=((0, -1),))
    deformation = solve_maurer_cartan(_linear_bivector(), order=3, delta_spec=spec)
    checks = 0
    for k in range(2, 4):
        checks += 1
        if not in_ideal(deformation.coefficient(k), spec, fold=2).is_yes:
            return _fail(name, checks, ("order", k))
    return LawResult(name, True, checks)


def law_star_associativity(rng: random.Random, trials: int) -> LawResult:
    name = "star-associativity"
    deformation = solve_maurer_cartan(_constant_bivector(), order=3)
    rounds = min(max(trials // 10, 3), 10)
    for i in range(rounds):
        f, g, h = (random_polynomial(rng, max_degree=3) for _ in range(3))
        if associativity_defect(deformation, f, g, h):
            return _fail(name, i + 1)
    return LawResult(name, True, rounds)


def law_moyal_agreement(rng: random.Random, trials: int) -> LawResult:
    name = "moyal-agreement"
    deformation = solve_maurer_cartan(_constant_bivector(), order=2)
    eighth = Fraction(1, 8)
    moyal_p2 = Cochain(
        2,
        {
            BasisTerm(2, (0, 0), ((2, 0), (0, 2))): eighth,
            BasisTerm(2, (0, 0), ((1, 1), (1, 1))): -2 * eighth,
            BasisTerm(2, (0, 0), ((0, 2), (2, 0))): eighth,
        },
    )
    b2 = obstruction(deformation, 2)
    solver_p2 = deformation.coefficient(2)
    ok = (
        hochschild_delta(moyal_p2) == b2
        and hochschild_delta(solver_p2) == b2
        and hochschild_delta(solver_p2 - moyal_p2).is_zero
    )
    return LawResult(name, ok, 3, None if ok else ("counterexample", cochain_to_node(solver_p2)))


ALL_LAWS: tuple[tuple[str, Law], ...] = (
    ("canonical-form", law_canonical_form),
    ("canonical-congruence", law_canonical_congruence),
    ("apply-multilinearity", law_apply_multilinearity),
    ("leibniz-consistency", law_leibniz_consistency),
    ("cup-associativity", law_cup_associativity),
    ("bracket-antisymmetry", law_bracket_antisymmetry),
    ("jacobi-identity", law_jacobi_identity),
    ("delta-squared-zero", law_delta_squared),
    ("delta-bracket-agreement", law_delta_bracket_agreement),
    ("vector-field-leibniz", law_vector_field_leibniz),
    ("evaluation-coherence", law_evaluation_coherence),
    ("weight-eigenvalue", law_weight_eigenvalue),
    ("weight-additivity", law_weight_additivity),
    ("delta-preserves-bigrade", law_delta_preserves_bigrade),
    ("decomposition-partition", law_decomposition_partition),
    ("theta-involution", law_theta_involution),
    ("theta-automorphism", law_theta_automorphism),
    ("theta-split-table", law_theta_split_table),
    ("semigroup-closure", law_semigroup_closure),
    ("ideal-absorption", law_ideal_absorption),
    ("ideal-sum-criterion", law_ideal_sum_criterion),
    ("subgroup-criterion", law_subgroup_criterion),
    ("filtration-product-rule", law_filtration_product_rule),
    ("filtration-monotonicity", law_filtration_monotonicity),
    ("filtration-literal-gap", law_filtration_literal_gap),
    ("mc-order-correctness", law_mc_order_correctness),
    ("mc-ideal-confinement", law_mc_ideal_confinement),
    ("star-associativity", law_star_associativity),
    ("moyal-agreement", law_moyal_agreement),
)


def run_laws(seed: int, trials: int, names: Optional[Sequence[str]] = None) -> list[LawResult]:
    """Run the law suites with per-law derived seeds; deterministic in (seed, trials)."""
    selected = ALL_LAWS if names is None else tuple(
        (n, law) for n, law in ALL_LAWS if n in set(names)
    )
    results = []
    for name, law in selected:
        results.append(law(_law_rng(seed, name), trials))
    return results
