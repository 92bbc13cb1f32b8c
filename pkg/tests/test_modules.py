"""Module-layer tests: class labels, simple modules, the regular module,
multiplicities, and concrete restriction.

Dimension and decomposition claims are checked against independent counting
oracles (basis enumeration by bottom boundary, last-letter counting for the
truncated subspace) rather than against the formulas used in the code.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from planar_rook.algebra import Element, identity_element, orbit_vector
from planar_rook.diagrams import (
    Boundary,
    Diagram,
    empty_diagram,
    enumerate_diagrams,
    unit_diagram,
)
from planar_rook.modules import (
    ClassLabel,
    ExplicitModule,
    act,
    adjunction_check,
    all_class_labels,
    class_dimension,
    decompose,
    extend_by_color,
    induce_class,
    multiplicity,
    regular_module,
    restrict,
    restrict_class,
    simple,
)


def label(n, *counts):
    return ClassLabel(n, tuple(counts))


# ---------------------------------------------------------------- class labels


def test_class_label_basics():
    lab = label(2, 1, 2, 2)
    assert lab.m == 5
    assert lab.key == "5|1,2,2"
    assert lab.canonical_boundary() == Boundary(5, 2, (0, 1, 1, 2, 2))


def test_class_label_validation():
    with pytest.raises(ValueError):
        ClassLabel(1, (1,))
    with pytest.raises(ValueError):
        ClassLabel(1, (1, -1))
    with pytest.raises(ValueError):
        ClassLabel(0, (1,))


def test_all_class_labels():
    labels = all_class_labels(2, 1)
    assert [lab.counts for lab in labels] == [(2, 0), (1, 1), (0, 2)]
    assert len(all_class_labels(3, 2)) == comb(3 + 2, 2)
    for m, n in [(2, 2), (4, 1)]:
        labels = all_class_labels(m, n)
        assert all(lab.m == m for lab in labels)
        assert len(set(labels)) == len(labels)


def test_class_dimension_against_enumeration():
    # dimension == number of diagrams with the canonical bottom boundary
    for m, n in [(2, 1), (3, 1), (2, 2), (3, 2)]:
        for lab in all_class_labels(m, n):
            word = lab.canonical_boundary()
            by_count = sum(
                1 for d in enumerate_diagrams(m, n) if d.bottom_boundary() == word
            )
            assert class_dimension(lab) == by_count


# ---------------------------------------------------------------- simple modules


def test_simple_dimensions():
    assert simple(label(1, 1, 1)).dimension == 2
    assert simple(label(2, 1, 2, 2)).dimension == 30
    assert simple(label(1, 3, 0)).dimension == 1
    assert simple(label(2, 0, 0, 2)).dimension == 1


def test_simple_basis_has_fixed_bottom_boundary():
    sm = simple(label(2, 1, 1, 1))
    assert sm.dimension == 6
    for d in sm.basis:
        assert d.bottom_boundary() == sm.boundary
    tops = [d.top_boundary().colors for d in sm.basis]
    assert tops == sorted(tops)


def test_identity_acts_as_identity():
    sm = simple(label(1, 1, 1))
    e = identity_element(2, 1)
    for j in range(sm.dimension):
        v = tuple(Fraction(int(k == j)) for k in range(sm.dimension))
        assert act(sm, e, v) == v


def test_edgeless_diagram_kills_colored_module():
    sm = simple(label(1, 1, 1))
    a = Element.from_diagram(empty_diagram(2, 1))
    v = (Fraction(1), Fraction(1))
    assert act(sm, a, v) == (Fraction(0), Fraction(0))


def test_act_respects_products_sampled():
    rng = random.Random(7)
    sm = simple(label(2, 0, 1, 1))
    diagrams = enumerate_diagrams(2, 2)
    for _ in range(40):
        a = Element(2, 2, {rng.choice(diagrams): Fraction(rng.randint(-3, 3))})
        b = Element(2, 2, {rng.choice(diagrams): Fraction(rng.randint(-3, 3))})
        v = tuple(Fraction(rng.randint(-2, 2)) for _ in range(sm.dimension))
        assert act(sm, a * b, v) == act(sm, a, act(sm, b, v))


def test_act_validates_input():
    sm = simple(label(1, 1, 1))
    with pytest.raises(ValueError):
        act(sm, identity_element(1, 1), (Fraction(1), Fraction(0)))
    with pytest.raises(ValueError):
        act(sm, identity_element(2, 1), (Fraction(1),))


def test_explicit_matrices_are_multiplicative():
    sm = simple(label(2, 1, 1, 0)).explicit()
    diagrams = enumerate_diagrams(2, 2)
    for d1 in diagrams:
        for d2 in diagrams:
            prod = sm.matrix_of(
                Element.from_diagram(d1) * Element.from_diagram(d2)
            )
            via = [
                [
                    sum(a * b for a, b in zip(row, col))
                    for col in zip(*sm.matrix(d2))
                ]
                for row in sm.matrix(d1)
            ]
            assert [list(r) for r in prod] == via


def test_explicit_module_validates():
    sm = simple(label(1, 1, 1)).explicit()
    with pytest.raises(ValueError):
        sm.matrix(unit_diagram(2, 1))
    with pytest.raises(ValueError):
        sm.matrix_of(identity_element(1, 1))
    bad = ExplicitModule(1, 1, 2, lambda d: [[1]])
    with pytest.raises(ValueError):
        bad.matrix(unit_diagram(1, 1))


# ---------------------------------------------------------------- regular module


def test_regular_module_dimensions():
    assert regular_module(2, 1).dimension == 6
    assert regular_module(3, 1).dimension == 20
    assert regular_module(2, 2).dimension == 15


def test_regular_identity_matrix():
    reg = regular_module(2, 2)
    mat = reg.matrix_of(identity_element(2, 2))
    for r in range(reg.dimension):
        for c in range(reg.dimension):
            assert mat[r][c] == (1 if r == c else 0)


# ---------------------------------------------------------------- multiplicity


def test_simple_modules_are_multiplicity_one():
    for m, n in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2)]:
        for lab in all_class_labels(m, n):
            mod = simple(lab).explicit()
            for other in all_class_labels(m, n):
                expected = 1 if other == lab else 0
                assert multiplicity(mod, other) == expected


def test_decompose_regular_small():
    dec = decompose(regular_module(2, 1))
    assert {lab.counts: k for lab, k in dec.items()} == {
        (2, 0): 1,
        (1, 1): 2,
        (0, 2): 1,
    }
    dec = decompose(regular_module(1, 2))
    assert {lab.counts: k for lab, k in dec.items()} == {
        (1, 0, 0): 1,
        (0, 1, 0): 1,
        (0, 0, 1): 1,
    }


def test_decompose_regular_multiplicity_equals_dimension():
    # the regular module contains each simple as many times as its dimension
    for m, n in [(2, 1), (3, 1), (2, 2)]:
        dec = decompose(regular_module(m, n))
        for lab, k in dec.items():
            assert k == class_dimension(lab)
        assert sum(k * class_dimension(lab) for lab, k in dec.items()) == len(
            enumerate_diagrams(m, n)
        )


def test_decompose_flags_non_module():
    # I0 and I1 cannot both act as stated: I0*I1 = I0 forces 1*0 == 1
    fake = ExplicitModule(
        1, 1, 1, lambda d: [[1 if not d.edges else 0]]
    )
    with pytest.raises(ValueError, match="dimension accounting"):
        decompose(fake)


def test_decompose_zero_module():
    zero = ExplicitModule(1, 1, 0, lambda d: [])
    assert decompose(zero) == {}


# ---------------------------------------------------------------- restriction


def test_extend_by_color():
    a = Element.from_diagram(unit_diagram(2, 1))
    ext = extend_by_color(a, 2)
    d_keep = Diagram(2, 2, ((1, 1, 1), (2, 2, 2)))
    d_drop = Diagram(2, 2, ((1, 1, 1),))
    assert ext.coefficient(d_keep) == 1
    assert ext.coefficient(d_drop) == -1
    ext0 = extend_by_color(a, 0)
    assert ext0 == Element.from_diagram(d_drop)
    with pytest.raises(ValueError):
        extend_by_color(a, 3)


def test_restrict_matches_last_letter_oracle():
    # the cut subspace is spanned by the basis vectors whose top word ends
    # in the chosen color, so its dimension counts those words
    for m, n in [(2, 1), (3, 1), (2, 2), (3, 2)]:
        for lab in all_class_labels(m, n):
            sm = simple(lab)
            for i in range(n + 1):
                res = restrict(i, sm)
                expected = sum(
                    1
                    for d in sm.basis
                    if d.top_boundary().colors[m - 1] == i
                )
                assert res.dimension == expected


def test_restrict_simple_examples():
    res = restrict(1, simple(label(1, 1, 1)))
    assert res.dimension == 1
    assert {lab.counts: k for lab, k in decompose(res).items()} == {(1, 0): 1}

    gone = restrict(1, simple(label(1, 2, 0)))
    assert gone.dimension == 0
    assert decompose(gone) == {}

    res0 = restrict(0, simple(label(1, 1, 1)))
    assert {lab.counts: k for lab, k in decompose(res0).items()} == {(0, 1): 1}


def test_restrict_drops_one_count():
    for m, n in [(2, 1), (3, 1), (2, 2), (3, 2)]:
        for lab in all_class_labels(m, n):
            for i in range(n + 1):
                dec = decompose(restrict(i, simple(lab)))
                target = restrict_class(i, lab)
                if target is None:
                    assert dec == {}
                else:
                    assert dec == {target: 1}


def test_restrict_validates():
    with pytest.raises(ValueError):
        restrict(2, simple(label(1, 1, 1)))
    with pytest.raises(ValueError):
        restrict(0, ExplicitModule(0, 1, 1, lambda d: [[1]]))


def test_restrict_is_a_module_action():
    # matrices of the restricted module still multiply correctly
    res = restrict(1, simple(label(2, 0, 1, 1)))
    diagrams = enumerate_diagrams(1, 2)
    for d1 in diagrams:
        for d2 in diagrams:
            lhs = res.matrix_of(Element.from_diagram(d1) * Element.from_diagram(d2))
            a, b = res.matrix(d1), res.matrix(d2)
            rhs = [
                [sum(x * y for x, y in zip(row, col)) for col in zip(*b)]
                for row in a
            ]
            assert [list(r) for r in lhs] == rhs


# ---------------------------------------------------------------- class maps


def test_restrict_class_arithmetic():
    assert restrict_class(1, label(1, 1, 1)) == label(1, 1, 0)
    assert restrict_class(1, label(1, 2, 0)) is None
    assert restrict_class(0, label(1, 1, 1)) == label(1, 0, 1)
    assert restrict_class(2, label(2, 1, 0, 2)) == label(2, 1, 0, 1)
    with pytest.raises(ValueError):
        restrict_class(3, label(2, 1, 0, 0))


def test_induce_class_arithmetic():
    assert induce_class(1, label(1, 1, 0)) == label(1, 1, 1)
    assert induce_class(0, label(1, 0, 1)) == label(1, 1, 1)
    with pytest.raises(ValueError):
        induce_class(-1, label(1, 1, 0))


def test_induce_then_restrict_round_trip():
    for lab in all_class_labels(3, 2):
        for i in range(3):
            assert restrict_class(i, induce_class(i, lab)) == lab


# ---------------------------------------------------------------- adjunction


def test_adjunction_examples():
    assert adjunction_check(1, label(1, 1, 0), label(1, 1, 1)) == (1, 1)
    assert adjunction_check(1, label(1, 1, 0), label(1, 2, 0)) == (0, 0)
    assert adjunction_check(0, label(1, 0, 1), label(1, 1, 1)) == (1, 1)


def test_adjunction_validates():
    with pytest.raises(ValueError):
        adjunction_check(1, label(1, 1, 0), label(1, 3, 0))
    with pytest.raises(ValueError):
        adjunction_check(1, label(1, 1, 0), label(2, 1, 1, 0))


def test_adjunction_exhaustive_small():
    for m in [1, 2]:
        for n in [1, 2]:
            for i in range(n + 1):
                for small in all_class_labels(m - 1, n):
                    for big in all_class_labels(m, n):
                        left, right = adjunction_check(i, small, big)
                        assert left == right
