import random
from fractions import Fraction

import pytest

from gerstenhaber import (
    BasisTerm,
    Cochain,
    CoboundaryError,
    Deformation,
    Polynomial,
    SemigroupSpec,
    associativity_defect,
    bracket,
    build_block,
    hochschild_delta,
    in_ideal,
    obstruction,
    solve_delta,
    solve_maurer_cartan,
    star_apply,
    weight_of,
)
from gerstenhaber.cochains import ArityError, DimensionMismatchError
from gerstenhaber.axioms import random_homogeneous_cochain, random_polynomial


def term(x_part, *slots):
    return BasisTerm(2, x_part, slots)


def constant_bivector():
    return Cochain(2, {term((0, 0), (1, 0), (0, 1)): 1, term((0, 0), (0, 1), (1, 0)): -1})


def linear_bivector():
    return Cochain(2, {term((1, 0), (1, 0), (0, 1)): 1, term((1, 0), (0, 1), (1, 0)): -1})


X1 = Polynomial.variable(2, 1)
X2 = Polynomial.variable(2, 2)


# -- obstruction ---------------------------------------------------------------


def test_obstruction_first_order_is_zero():
    d = Deformation(dimension=2, cochains=(constant_bivector() * Fraction(1, 2),))
    assert obstruction(d, 1).is_zero


def test_obstruction_second_order_is_half_self_bracket():
    p1 = constant_bivector() * Fraction(1, 2)
    d = Deformation(dimension=2, cochains=(p1,))
    assert obstruction(d, 2) == bracket(p1, p1) * Fraction(1, 2)
    assert not obstruction(d, 2).is_zero


def test_obstruction_of_zero_deformation():
    d = Deformation(dimension=2, cochains=(Cochain.zero(2),))
    assert obstruction(d, 2).is_zero


def test_obstruction_needs_lower_orders():
    d = Deformation(dimension=2, cochains=(constant_bivector() * Fraction(1, 2),))
    with pytest.raises(ValueError):
        obstruction(d, 3)


def test_obstructions_closed_for_solver_output():
    d = solve_maurer_cartan(constant_bivector(), 4)
    for k in range(2, 5):
        assert hochschild_delta(obstruction(d, k)).is_zero


# -- blocks --------------------------------------------------------------------


def test_block_composition_count():
    block = build_block(((-2, -2), (2, 2)), 2)
    assert len(block.basis2) == 9  # ordered pairs summing to (2, 2)
    assert len(block.basis3) == 36


def test_diagonal_block_is_single_term():
    block = build_block(((3, 1), (3, 1)), 2)
    assert block.basis2 == (term((3, 1), (0, 0), (0, 0)),)


def test_block_columns_are_coboundary_coordinates():
    block = build_block(((-1, -1), (1, 1)), 2)
    for c, e in enumerate(block.basis2):
        image = hochschild_delta(Cochain.single(e))
        for r, t in enumerate(block.basis3):
            assert image.coefficient(t) == block.matrix[r][c]


def test_invalid_bigrade_rejected():
    with pytest.raises(ValueError):
        build_block(((0, 0), (1, 0)), 2)  # parity violation
    with pytest.raises(ValueError):
        build_block(((-1, 0), (-3, 0)), 2)  # negative slot total


# -- solve_delta ---------------------------------------------------------------


def test_solve_delta_zero():
    assert solve_delta(Cochain.zero(2)).is_zero


def test_solve_delta_roundtrip_random():
    rng = random.Random(101)
    found_nonzero = 0
    for _ in range(40):
        y = random_homogeneous_cochain(rng, arity=2, max_terms=3)
        b = hochschild_delta(y)
        if b.is_zero:
            continue
        found_nonzero += 1
        x = solve_delta(b)
        assert hochschild_delta(x) == b
    assert found_nonzero > 20


def test_solve_delta_rejects_non_coboundary():
    rng = random.Random(103)
    y = random_homogeneous_cochain(rng, arity=2, max_terms=3)
    b = hochschild_delta(y)
    while b.is_zero:
        y = random_homogeneous_cochain(rng, arity=2, max_terms=3)
        b = hochschild_delta(y)
    # perturb single arity-3 terms until the block system becomes inconsistent
    corrupted = None
    for t, _ in b.items():
        candidate = b + Cochain(2, {t: Fraction(1, 3)})
        try:
            solve_delta(candidate)
        except CoboundaryError as err:
            corrupted = err.bigrade
            break
    assert corrupted is not None


def test_solve_delta_requires_arity_three():
    with pytest.raises(ArityError):
        solve_delta(Cochain.single(term((0, 0), (1, 0))))


def test_solve_delta_deterministic():
    rng = random.Random(107)
    y = random_homogeneous_cochain(rng, arity=2, max_terms=3)
    b = hochschild_delta(y)
    assert solve_delta(b) == solve_delta(b)


# -- the full recursion ---------------------------------------------------------


def test_constant_symplectic_solves_to_order_four():
    d = solve_maurer_cartan(constant_bivector(), 4)
    for k in range(2, 5):
        assert hochschild_delta(d.coefficient(k)) == obstruction(d, k)
        weights = {weight_of(t) for t, _ in d.coefficient(k).items()}
        assert weights <= {(-k, -k)}


def test_zero_bivector_gives_zero_deformation():
    d = solve_maurer_cartan(Cochain.zero(2), 3)
    assert all(d.coefficient(k).is_zero for k in range(1, 4))


def test_linear_bivector_confined_to_ideal():
    spec = SemigroupSpec(dimension=2, generators=((0, -1),))
    d = solve_maurer_cartan(linear_bivector(), 4, delta_spec=spec)
    for k in range(2, 5):
        assert in_ideal(d.coefficient(k), spec, fold=2).is_yes
        weights = {weight_of(t) for t, _ in d.coefficient(k).items()}
        assert weights <= {(0, -k)}


def test_solver_requires_dimension_two():
    pi1 = Cochain(3, {BasisTerm(3, (0, 0, 0), ((1, 0, 0), (0, 1, 0))): 1})
    with pytest.raises(DimensionMismatchError):
        solve_maurer_cartan(pi1, 2)


def test_solver_rejects_non_cocycle():
    # second-order slots break the cocycle condition
    bad = Cochain(2, {term((0, 0), (2, 0), (0, 1)): 1})
    with pytest.raises(ValueError):
        solve_maurer_cartan(bad, 2)


def test_solver_rejects_bivector_outside_subalgebra():
    spec = SemigroupSpec(dimension=2, generators=((-1, -1),))
    with pytest.raises(ValueError):
        solve_maurer_cartan(linear_bivector(), 2, delta_spec=spec)


def test_solver_gauge_deterministic():
    assert solve_maurer_cartan(constant_bivector(), 3) == solve_maurer_cartan(
        constant_bivector(), 3
    )


def test_obstruction_weights_are_order_fold_sums():
    d = solve_maurer_cartan(linear_bivector(), 4)
    base = {(0, -1)}
    for k in range(2, 5):
        b_k = obstruction(d, k)
        for w in {weight_of(t) for t, _ in b_k.items()}:
            assert w == (0, -k)  # k-fold sum of the bivector's single weight


# -- the deformed product --------------------------------------------------------


def test_star_canonical_commutation():
    d = solve_maurer_cartan(constant_bivector(), 3)
    left = star_apply(d, X1, X2)
    right = star_apply(d, X2, X1)
    orders = sorted(set(left) | set(right))
    commutator = {
        k: left.get(k, Polynomial.zero(2)) - right.get(k, Polynomial.zero(2)) for k in orders
    }
    commutator = {k: v for k, v in commutator.items() if not v.is_zero}
    assert commutator == {1: Polynomial.constant(2, 1)}


def test_star_order_zero_is_plain_product():
    d = solve_maurer_cartan(linear_bivector(), 3)
    rng = random.Random(109)
    for _ in range(10):
        f, g = random_polynomial(rng), random_polynomial(rng)
        series = star_apply(d, f, g)
        assert series.get(0, Polynomial.zero(2)) == f * g


def test_star_with_constant_argument():
    d = solve_maurer_cartan(constant_bivector(), 3)
    one = Polynomial.constant(2, 1)
    rng = random.Random(113)
    for _ in range(10):
        g = random_polynomial(rng)
        assert star_apply(d, one, g) == ({0: g} if not g.is_zero else {})
        assert star_apply(d, g, one) == ({0: g} if not g.is_zero else {})


def test_associativity_defect_vanishes_for_solver_output():
    d = solve_maurer_cartan(constant_bivector(), 3)
    rng = random.Random(127)
    for _ in range(20):
        f, g, h = (random_polynomial(rng, max_degree=3) for _ in range(3))
        assert associativity_defect(d, f, g, h) == {}


def test_zeroing_a_coefficient_breaks_associativity_by_the_obstruction():
    d = solve_maurer_cartan(constant_bivector(), 2)
    broken = Deformation(dimension=2, cochains=(d.coefficient(1), Cochain.zero(2)))
    b2 = obstruction(d, 2)
    rng = random.Random(131)
    saw_nonzero = False
    for _ in range(10):
        f, g, h = (random_polynomial(rng, max_degree=2) for _ in range(3))
        defect = associativity_defect(broken, f, g, h)
        assert set(defect) <= {2}
        expected = b2.apply([f, g, h])
        observed = defect.get(2, Polynomial.zero(2))
        assert observed == expected
        saw_nonzero = saw_nonzero or not expected.is_zero
    assert saw_nonzero


def test_order_zero_defect_always_zero():
    d = Deformation(dimension=2, cochains=(constant_bivector() * Fraction(1, 2),))
    rng = random.Random(137)
    for _ in range(10):
        f, g, h = (random_polynomial(rng) for _ in range(3))
        defect = associativity_defect(d, f, g, h)
        assert 0 not in defect
