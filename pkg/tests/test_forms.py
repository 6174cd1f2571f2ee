from fractions import Fraction

import pytest

from toricdiff.cones import Cone, NotInConeError
from toricdiff.forms import (
    FormExpression,
    FormTerm,
    degree_subspace,
    facet_subspace,
    graded_piece,
    integer_lifts,
    to_form,
    wedge_subsets,
)
from toricdiff.linalg import GF, QQ, subspace


@pytest.fixture(scope="module")
def quadric():
    return Cone([(0, 1), (2, -1)]).dual


@pytest.fixture(scope="module")
def orthant():
    return Cone([(1, 0), (0, 1)]).dual


class TestFacetSubspace:
    def test_quadric_facets_over_qq(self, quadric):
        f0, f1 = quadric.facets
        assert facet_subspace(f0, 0) == subspace(QQ, [(1, 0)])
        assert facet_subspace(f1, 0) == subspace(QQ, [(1, 2)])

    def test_quadric_facets_collapse_mod_2(self, quadric):
        f0, f1 = quadric.facets
        assert facet_subspace(f0, 2) == facet_subspace(f1, 2)
        assert facet_subspace(f1, 2).basis == ((1, 0),)

    def test_dimension_always_n_minus_one(self, quadric, orthant):
        for cone in (quadric, orthant):
            for f in cone.facets:
                for char in (0, 2, 3, 5):
                    assert facet_subspace(f, char).dim == 1


class TestDegreeSubspace:
    def test_interior_gets_everything(self, quadric):
        assert degree_subspace(quadric, (1, 1), 0).dim == 2
        assert degree_subspace(quadric, (2, 1), 3).dim == 2

    def test_on_one_facet(self, orthant):
        S = degree_subspace(orthant, (3, 0), 0)
        assert S == subspace(QQ, [(1, 0)])

    def test_origin_depends_on_characteristic(self, quadric):
        # over QQ the two facet lines only share 0; mod 2 they coincide
        assert degree_subspace(quadric, (0, 0), 0).dim == 0
        assert degree_subspace(quadric, (0, 0), 2).dim == 1
        assert degree_subspace(quadric, (0, 0), 3).dim == 0

    def test_outside_cone_rejected(self, quadric):
        with pytest.raises(NotInConeError):
            degree_subspace(quadric, (0, 1), 0)

    def test_scale_invariance(self, quadric):
        for m in ((1, 0), (1, 2), (1, 1), (0, 0)):
            for c in (2, 3, 7):
                scaled = tuple(c * x for x in m)
                assert degree_subspace(quadric, m, 5) == degree_subspace(quadric, scaled, 5)


class TestGradedPiece:
    def test_orthant_dims_are_binomials(self, orthant):
        piece = graded_piece(orthant, (2, 3), 0)
        assert (piece.dim(0), piece.dim(1), piece.dim(2)) == (1, 2, 1)
        piece = graded_piece(orthant, (2, 0), 0)
        assert (piece.dim(0), piece.dim(1), piece.dim(2)) == (1, 1, 0)

    def test_wedge_basis_indexing(self):
        assert wedge_subsets(3, 0) == ((),)
        assert wedge_subsets(3, 2) == ((0, 1), (0, 2), (1, 2))
        assert wedge_subsets(2, 3) == ()
        piece_like = wedge_subsets(4, 2)
        assert list(piece_like) == sorted(piece_like)

    def test_piece_records_degree_and_char(self, quadric):
        piece = graded_piece(quadric, (1, 1), 5)
        assert piece.degree == (1, 1)
        assert piece.characteristic == 5
        assert piece.subspace.dim == 2


class TestIntegerLifts:
    def test_prime_field_rows_lift_verbatim(self, quadric):
        S = degree_subspace(quadric, (0, 0), 2)
        assert integer_lifts(S) == ((1, 0),)

    def test_rational_rows_clear_denominators(self):
        S = subspace(QQ, [(2, 0, 1)])
        assert S.basis == ((Fraction(1), Fraction(0), Fraction(1, 2)),)
        assert integer_lifts(S) == ((2, 0, 1),)


class TestForms:
    def test_single_generator(self):
        assert str(to_form((2, 0), [(1, ((1, 0),))])) == "x^(1,0) dx^(1,0)"

    def test_wedge_of_two(self):
        form = to_form((2, 2), [(1, ((1, 0), (0, 1)))])
        assert str(form) == "x^(1,1) dx^(1,0)∧dx^(0,1)"

    def test_coefficients_and_sums(self):
        form = to_form((1, 1), [(2, ((1, 0),)), (Fraction(1, 3), ((0, 1),))])
        assert str(form) == "1/3*x^(1,0) dx^(0,1) + 2*x^(0,1) dx^(1,0)"

    def test_zero_coefficients_dropped(self):
        assert str(to_form((1, 0), [(0, ((1, 0),))])) == "0"

    def test_zero_form_expression(self):
        assert str(FormExpression(())) == "0"
        assert FormExpression.parse("0") == FormExpression(())

    def test_parse_round_trip(self):
        for text in (
            "x^(1,0)",
            "x^(0,0) dx^(1,0)",
            "x^(1,1) dx^(1,0)∧dx^(0,1)",
            "-2*x^(3,-1) dx^(1,2)",
            "5/2*x^(1,0) + x^(0,1) dx^(1,0)",
        ):
            expr = FormExpression.parse(text)
            assert str(expr) == text
            assert FormExpression.parse(str(expr)) == expr

    def test_parse_rejects_garbage(self):
        for text in ("x^(1,", "dx^(1,0)", "x^(a,b)", "x^(1,0) dy^(1,0)"):
            with pytest.raises(ValueError):
                FormExpression.parse(text)

    def test_negative_exponents_allowed(self):
        # a factor can exceed m coordinatewise; the monomial part then
        # carries negative entries, which is fine on the torus
        form = to_form((1, 0), [(1, ((1, 1),))])
        assert str(form) == "x^(0,-1) dx^(1,1)"

    def test_terms_sorted_by_factors(self):
        form = to_form((2, 2), [(1, ((0, 1),)), (1, ((1, 0),))])
        assert str(form) == "x^(2,1) dx^(0,1) + x^(1,2) dx^(1,0)"

    def test_term_structure(self):
        form = to_form((2, 4), [(1, ((1, 2),))])
        assert form.terms == (FormTerm(1, (1, 2), ((1, 2),)),)
