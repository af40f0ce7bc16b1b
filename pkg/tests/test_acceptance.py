"""Acceptance suite: one test per criterion, at the stated sample sizes.

Every identity is checked in exact rational arithmetic (zero tolerance).
Run with ``pytest tests/test_acceptance.py -v -s`` to see one summary line
per criterion.
"""

import random
import time
from fractions import Fraction

from gerstenhaber import (
    BasisTerm,
    Cochain,
    SemigroupSpec,
    associativity_defect,
    bracket,
    hochschild_delta,
    in_ideal,
    obstruction,
    solve_maurer_cartan,
    weight_of,
)
from gerstenhaber.axioms import (
    ALL_LAWS,
    LawResult,
    _law_rng,
    random_polynomial,
)

LAWS = dict(ALL_LAWS)


def run_law(name: str, trials: int, seed: int = 20250809) -> LawResult:
    result = LAWS[name](_law_rng(seed, name), trials)
    assert result.ok, f"law {name} failed after {result.checks} checks: {result.witness}"
    return result


def report(criterion: int, text: str) -> None:
    print(f"CRITERION {criterion}: PASS - {text}")


def test_criterion_1_gerstenhaber_axioms():
    started = time.time()
    cup_r = run_law("cup-associativity", 200)
    anti_r = run_law("bracket-antisymmetry", 200)
    jacobi_r = run_law("jacobi-identity", 200)
    elapsed = time.time() - started
    assert elapsed < 60, f"criterion 1 exceeded its runtime budget: {elapsed:.1f}s"
    report(
        1,
        f"cup associativity ({cup_r.checks}), graded antisymmetry ({anti_r.checks}), "
        f"Jacobi ({jacobi_r.checks}) all exact in {elapsed:.1f}s",
    )


def test_criterion_2_differential_structure():
    dsq = run_law("delta-squared-zero", 200)
    agree = run_law("delta-bracket-agreement", 200)
    report(
        2,
        f"coboundary squares to zero ({dsq.checks} incl. the multiplication cochain), "
        f"two coboundary routes agree ({agree.checks})",
    )


def test_criterion_3_vector_field_leibniz():
    result = run_law("vector-field-leibniz", 100)
    report(3, f"vector-field Leibniz rule exact on {result.checks} triples")


def test_criterion_4_weight_closure_and_ideals():
    additivity = run_law("weight-additivity", 100)
    closure = run_law("semigroup-closure", 100)
    absorption = run_law("ideal-absorption", 50)
    criterion = run_law("ideal-sum-criterion", 50)
    report(
        4,
        f"weight additivity ({additivity.checks}), subalgebra closure for three semigroups "
        f"({closure.checks} checks), ideal absorption ({absorption.checks} checks), "
        f"sum-stability criterion both ways ({criterion.checks} checks)",
    )


def test_criterion_5_involutions():
    involution = run_law("theta-involution", 100)
    automorphism = run_law("theta-automorphism", 100)
    table = run_law("theta-split-table", 100)
    report(
        5,
        f"involutivity and even-weight fixed space ({involution.checks}), automorphism "
        f"property ({automorphism.checks}), sign multiplication table with closed even part "
        f"({table.checks})",
    )


def test_criterion_6_subgroup_criterion():
    result = run_law("subgroup-criterion", 100)
    witness = result.witness
    assert witness is not None and witness[0] == "witness"
    h, k, total = witness[1], witness[2], witness[3]
    report(
        6,
        f"even lattice passes; positive ray refuted by {h} + {k} = {total} back in the candidate",
    )


def test_criterion_7_filtration():
    product = run_law("filtration-product-rule", 100)
    monotone = run_law("filtration-monotonicity", 100)
    gap = run_law("filtration-literal-gap", 1)
    report(
        7,
        f"stage product rule and coboundary stability ({product.checks}), cumulative "
        f"monotonicity ({monotone.checks}), literal-mode monotonicity gap witnessed at "
        f"{gap.witness[1][1:]} < {gap.witness[2][1:]}",
    )


def test_criterion_8_star_product_end_to_end():
    started = time.time()
    pi1 = Cochain(
        2,
        {
            BasisTerm(2, (1, 0), ((1, 0), (0, 1))): 1,
            BasisTerm(2, (1, 0), ((0, 1), (1, 0))): -1,
        },
    )
    spec = SemigroupSpec(dimension=2, generators=((0, -1),))
    deformation = solve_maurer_cartan(pi1, 4, delta_spec=spec)
    for k in range(2, 5):
        b_k = obstruction(deformation, k)
        assert hochschild_delta(b_k).is_zero
        assert hochschild_delta(deformation.coefficient(k)) == b_k
        assert in_ideal(deformation.coefficient(k), spec, fold=2).is_yes
        # every weight reached at order k is the k-fold sum of the bivector's weight
        assert {weight_of(t) for t, _ in deformation.coefficient(k).items()} <= {(0, -k)}
    rng = random.Random(20250809)
    for _ in range(20):
        f, g, h = (random_polynomial(rng, max_degree=3) for _ in range(3))
        assert associativity_defect(deformation, f, g, h) == {}
    elapsed = time.time() - started
    assert elapsed < 300, f"criterion 8 exceeded its runtime budget: {elapsed:.1f}s"
    report(
        8,
        f"linear Poisson bivector solved to order 4: coboundary equations exact, "
        f"coefficients confined to the 2-fold ideal, associativity defect zero on 20 "
        f"triples in {elapsed:.1f}s",
    )


def test_criterion_9_moyal_cross_check():
    pi1 = Cochain(
        2,
        {
            BasisTerm(2, (0, 0), ((1, 0), (0, 1))): 1,
            BasisTerm(2, (0, 0), ((0, 1), (1, 0))): -1,
        },
    )
    deformation = solve_maurer_cartan(pi1, 2)
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
    p1 = deformation.coefficient(1)
    assert b2 == bracket(p1, p1) * Fraction(1, 2)
    solver_p2 = deformation.coefficient(2)
    assert hochschild_delta(solver_p2) == b2
    assert hochschild_delta(moyal_p2) == b2
    assert hochschild_delta(solver_p2 - moyal_p2).is_zero
    report(
        9,
        "solver and hand-expanded order-2 exponential term both bound the obstruction "
        "and differ by a closed cochain",
    )
