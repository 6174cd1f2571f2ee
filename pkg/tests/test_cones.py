import pytest

from toricdiff.cones import Cone, NotInConeError, NotPointedError
from toricdiff.linalg import saturate


class TestDuality:
    def test_quadric_dual(self):
        c = Cone([(0, 1), (2, -1)])
        assert c.dual.rays == ((1, 0), (1, 2))

    def test_orthant_self_dual(self):
        c = Cone([(1, 0), (0, 1)])
        assert c.dual.rays == c.rays

    def test_bidual_is_identity(self):
        for rays in ([(0, 1), (2, -1)], [(1, 0), (1, 2), (1, 1)], [(2, 1), (1, 3)]):
            c = Cone(rays)
            assert c.dual.dual == c
            assert c.dual.dual is c

    def test_square_cone_dual(self):
        c = Cone([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
        assert c.dual.rays == ((-1, 0, 1), (0, -1, 1), (0, 1, 0), (1, 0, 0))

    def test_halfplane_dual_is_a_ray(self):
        c = Cone([(1, 0), (-1, 0), (0, 1)])
        assert c.dual.rays == ((0, 1),)
        assert not c.has_vertex()
        assert c.dual.has_vertex()

    def test_zero_cone_and_full_space(self):
        z = Cone([], ambient_rank=2)
        assert z.rays == ()
        assert z.dual.rays == ((-1, 0), (0, -1), (0, 1), (1, 0))
        assert z.contains((0, 0)) and not z.contains((0, 1))
        assert z.dual.contains((-5, 7))


class TestCanonicalization:
    def test_redundant_and_scaled_generators(self):
        messy = Cone([(2, 0), (1, 1), (0, 3), (1, 2)])
        clean = Cone([(1, 0), (0, 1)])
        assert messy == clean
        assert hash(messy) == hash(clean)

    def test_duplicates_dropped(self):
        assert Cone([(1, 0), (2, 0), (0, 1)]).rays == ((0, 1), (1, 0))

    def test_lineality_generators_come_in_pairs(self):
        c = Cone([(1, 0), (-1, 0), (0, 1)])
        assert (1, 0) in c.rays and (-1, 0) in c.rays and (0, 1) in c.rays

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            Cone([(1, 0), (1,)])
        with pytest.raises(ValueError):
            Cone([(0.5, 1)])
        with pytest.raises(ValueError):
            Cone([])
        with pytest.raises(ValueError):
            Cone([(True, False)])


class TestMembership:
    def test_quadric_exponents(self):
        d = Cone([(0, 1), (2, -1)]).dual
        assert d.contains((1, 0)) and d.contains((1, 2)) and d.contains((1, 1))
        assert not d.contains((0, 1))
        assert not d.contains((-1, 0))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            Cone([(1, 0), (0, 1)]).contains((1, 0, 0))


class TestFacets:
    def test_orthant_has_n_facets(self):
        for n in (2, 3, 4):
            rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
            assert len(Cone(rays).facets) == n

    def test_quadric_facet_data(self):
        d = Cone([(0, 1), (2, -1)]).dual
        facets = d.facets
        assert [f.normal for f in facets] == [(0, 1), (2, -1)]
        assert facets[0].span == saturate([(1, 0)])
        assert facets[1].span == saturate([(1, 2)])

    def test_facet_spans_are_saturated(self):
        d = Cone([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]).dual
        for f in d.facets:
            assert saturate(f.span.basis, 3) == f.span
            assert f.span.rank == 2

    def test_not_full_dimensional_refused(self):
        ray = Cone([(0, 1)])  # a single ray in the plane
        with pytest.raises(NotPointedError):
            ray.facets

    def test_facets_containing(self):
        d = Cone([(0, 1), (2, -1)]).dual
        assert [f.normal for f in d.facets_containing((1, 0))] == [(0, 1)]
        assert [f.normal for f in d.facets_containing((1, 2))] == [(2, -1)]
        assert d.facets_containing((1, 1)) == ()
        assert len(d.facets_containing((0, 0))) == 2

    def test_facets_containing_outside(self):
        d = Cone([(0, 1), (2, -1)]).dual
        with pytest.raises(NotInConeError):
            d.facets_containing((0, 1))


class TestLatticePoints:
    def test_quadric_small_box(self):
        d = Cone([(0, 1), (2, -1)]).dual
        assert d.lattice_points(1) == ((0, 0), (1, 0), (1, 1))

    def test_origin_always_present(self):
        for rays in ([(1, 0), (0, 1)], [(0, 1), (2, -1)], [(1, 2), (3, 1)]):
            assert (0, 0) in Cone(rays).dual.lattice_points(0)

    def test_lex_sorted(self):
        pts = Cone([(1, 0), (0, 1)]).dual.lattice_points(2)
        assert list(pts) == sorted(pts)

    def test_negative_bound_rejected(self):
        with pytest.raises(ValueError):
            Cone([(1, 0), (0, 1)]).lattice_points(-1)

    def test_halfplane_points(self):
        # exponent cone with a line: every degree on the horizontal axis
        c = Cone([(1, 0), (-1, 0), (0, 1)])
        pts = c.lattice_points(1)
        assert pts == ((-1, 0), (-1, 1), (0, 0), (0, 1), (1, 0), (1, 1))


class TestPickling:
    def test_cone_round_trips(self):
        import pickle

        c = Cone([(0, 1), (2, -1)]).dual
        c.facets
        again = pickle.loads(pickle.dumps(c))
        assert again == c
        assert again.dual == c.dual
