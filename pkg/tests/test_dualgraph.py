import random
from fractions import Fraction

import pytest

from helpers import chain_graph, dynkin_graph, random_boundary, random_negdef_graph
from mmpkit.dualgraph import (
    Boundary,
    BoundaryComponent,
    BoundaryPoint,
    DualGraph,
    EdgePoint,
    FreePoint,
    SingularityClass,
    Vertex,
    blowup_vertex,
    check_contractible,
    detect_du_val,
    discrepancies,
)
from mmpkit.errors import (
    CoefficientOutOfRangeError,
    DisconnectedError,
    InvalidSiteError,
    NotContractibleError,
)
from mmpkit.linalg import mat_vec


def single_vertex(genus, self_int):
    return DualGraph(vertices=(Vertex(genus=genus, self_int=self_int),), edges=())


def blowup_formula_value(report, boundary, site):
    """Expected discrepancy of the new exceptional curve."""
    d = report.discrepancies
    if isinstance(site, FreePoint):
        return 1 + d[site.vertex]
    if isinstance(site, EdgePoint):
        return 1 + d[site.i] + d[site.j]
    comp = boundary.components[site.component]
    return 1 + d[site.vertex] - comp.coeff


class TestContractibility:
    def test_examples(self):
        assert check_contractible(single_vertex(0, -2)) is True
        assert check_contractible(single_vertex(0, 0)) is False
        assert check_contractible(chain_graph([-2, -2])) is True

    def test_disconnected_raises(self):
        graph = DualGraph(
            vertices=(Vertex(0, -2), Vertex(0, -2)),
            edges=(),
        )
        with pytest.raises(DisconnectedError):
            check_contractible(graph)

    def test_not_contractible_propagates(self):
        with pytest.raises(NotContractibleError):
            discrepancies(single_vertex(0, 1))


class TestRationalCurveContractions:
    def test_cone_over_rational_normal_curve(self):
        for a, expected_class in [(1, SingularityClass.TERMINAL_REL), (2, SingularityClass.CANONICAL)] + [
            (a, SingularityClass.KLT) for a in range(3, 13)
        ]:
            report = discrepancies(single_vertex(0, -a))
            assert report.discrepancies == (Fraction(a - 2, -a),)
            assert report.singularity_class is expected_class

    def test_genus_one(self):
        report = discrepancies(single_vertex(1, -1))
        assert report.discrepancies == (Fraction(-1),)
        assert report.singularity_class is SingularityClass.LC

    def test_genus_two(self):
        report = discrepancies(single_vertex(2, -1))
        assert report.discrepancies == (Fraction(-3),)
        assert report.singularity_class is SingularityClass.NOT_LC


class TestDuVal:
    def test_a2_chain(self):
        report = discrepancies(chain_graph([-2, -2]))
        assert report.discrepancies == (0, 0)
        assert report.du_val == "A2"

    def test_d4_star(self):
        report = discrepancies(dynkin_graph("D", 4))
        assert report.du_val == "D4"
        assert report.singularity_class is SingularityClass.CANONICAL

    def test_single_minus_three_is_not_du_val(self):
        assert detect_du_val(single_vertex(0, -3)) is None

    def test_full_ade_sweep(self):
        cases = [("A", n) for n in range(1, 11)]
        cases += [("D", n) for n in range(4, 11)]
        cases += [("E", n) for n in (6, 7, 8)]
        for kind, n in cases:
            graph = dynkin_graph(kind, n)
            report = discrepancies(graph)
            assert report.discrepancies == tuple([0] * n), (kind, n)
            assert report.singularity_class is SingularityClass.CANONICAL
            assert report.du_val == f"{kind}{n}"

    def test_du_val_forces_zero_discrepancies(self):
        rng = random.Random(2)
        for _ in range(50):
            kind, n = rng.choice(
                [("A", rng.randint(1, 8)), ("D", rng.randint(4, 8)), ("E", rng.choice([6, 7, 8]))]
            )
            report = discrepancies(dynkin_graph(kind, n))
            assert all(d == 0 for d in report.discrepancies)

    def test_genus_breaks_detection(self):
        graph = DualGraph(
            vertices=(Vertex(1, -2), Vertex(0, -2)), edges=((0, 1, 1),)
        )
        assert detect_du_val(graph) is None

    def test_multiplicity_breaks_detection(self):
        graph = DualGraph(
            vertices=(Vertex(0, -3), Vertex(0, -3)), edges=((0, 1, 2),)
        )
        assert detect_du_val(graph) is None


class TestBoundary:
    def test_coefficient_range_enforced(self):
        with pytest.raises(CoefficientOutOfRangeError):
            BoundaryComponent(coeff=Fraction(3, 2), meets=((0, 1),))
        with pytest.raises(CoefficientOutOfRangeError):
            BoundaryComponent(coeff=Fraction(-1, 2), meets=())

    def test_boundary_lowers_discrepancy(self):
        graph = single_vertex(0, -2)
        plain = discrepancies(graph).discrepancies[0]
        loaded = discrepancies(
            graph, Boundary((BoundaryComponent(coeff=Fraction(1, 2), meets=((0, 1),)),))
        ).discrepancies[0]
        assert plain == 0
        assert loaded == Fraction(-1, 4)

    def test_klt_needs_coefficients_below_one(self):
        graph = single_vertex(0, -3)
        half = Boundary((BoundaryComponent(coeff=Fraction(1, 2), meets=((0, 1),)),))
        full = Boundary((BoundaryComponent(coeff=Fraction(1), meets=((0, 1),)),))
        assert discrepancies(graph, half).singularity_class is SingularityClass.KLT
        assert discrepancies(graph, full).singularity_class is SingularityClass.LC

    def test_component_missing_the_point_is_ignored(self):
        graph = single_vertex(0, -3)
        aloof = Boundary((BoundaryComponent(coeff=Fraction(1), meets=()),))
        assert discrepancies(graph, aloof).singularity_class is SingularityClass.KLT


class TestBlowupBookkeeping:
    def test_free_point_on_a1(self):
        graph, _ = blowup_vertex(single_vertex(0, -2), None, FreePoint(0))
        assert [(v.genus, v.self_int) for v in graph.vertices] == [(0, -3), (0, -1)]
        assert graph.edges == ((0, 1, 1),)

    def test_edge_of_a2(self):
        graph, _ = blowup_vertex(chain_graph([-2, -2]), None, EdgePoint(0, 1))
        assert [(v.genus, v.self_int) for v in graph.vertices] == [
            (0, -3),
            (0, -3),
            (0, -1),
        ]
        assert graph.edges == ((0, 2, 1), (1, 2, 1))

    def test_free_point_on_genus_one(self):
        graph, _ = blowup_vertex(single_vertex(1, -1), None, FreePoint(0))
        assert [(v.genus, v.self_int) for v in graph.vertices] == [(1, -2), (0, -1)]
        assert graph.edges == ((0, 1, 1),)

    def test_boundary_passthrough(self):
        boundary = Boundary((BoundaryComponent(coeff=Fraction(1, 2), meets=((0, 2),)),))
        graph, new_boundary = blowup_vertex(single_vertex(0, -2), boundary, BoundaryPoint(0, 0))
        assert new_boundary.components[0].meets == ((0, 1), (1, 1))
        assert graph.edges == ((0, 1, 1),)

    def test_invalid_sites(self):
        graph = chain_graph([-2, -2])
        with pytest.raises(InvalidSiteError):
            blowup_vertex(graph, None, FreePoint(5))
        with pytest.raises(InvalidSiteError):
            blowup_vertex(graph, None, EdgePoint(0, 0))
        with pytest.raises(InvalidSiteError):
            blowup_vertex(graph, None, BoundaryPoint(0, 0))


def random_site(rng, graph, boundary):
    options = [FreePoint(rng.randrange(len(graph.vertices)))]
    if graph.edges:
        i, j, _ = rng.choice(graph.edges)
        options.append(EdgePoint(i, j))
    touching = [
        (k, v)
        for k, comp in enumerate(boundary.components)
        for v, _ in comp.meets
    ]
    if touching:
        k, v = rng.choice(touching)
        options.append(BoundaryPoint(vertex=v, component=k))
    return rng.choice(options)


class TestResolutionIndependence:
    def test_blowup_preserves_old_discrepancies(self):
        rng = random.Random(101)
        for _ in range(250):
            graph = random_negdef_graph(rng)
            boundary = random_boundary(rng, graph)
            report = discrepancies(graph, boundary)
            site = random_site(rng, graph, boundary)
            new_graph, new_boundary = blowup_vertex(graph, boundary, site)
            new_report = discrepancies(new_graph, new_boundary)
            n = len(graph.vertices)
            assert new_report.discrepancies[:n] == report.discrepancies
            assert new_report.discrepancies[n] == blowup_formula_value(report, boundary, site)

    def test_repeated_blowups_stay_consistent(self):
        rng = random.Random(7)
        graph = chain_graph([-3, -2, -4])
        boundary = Boundary((BoundaryComponent(coeff=Fraction(2, 3), meets=((1, 1),)),))
        report = discrepancies(graph, boundary)
        for _ in range(6):
            site = random_site(rng, graph, boundary)
            expected_new = blowup_formula_value(report, boundary, site)
            graph, boundary = blowup_vertex(graph, boundary, site)
            report = discrepancies(graph, boundary)
            assert report.discrepancies[-1] == expected_new


class TestMinimalResolutionTheorems:
    def test_negativity_and_never_terminal(self):
        rng = random.Random(57)
        for _ in range(250):
            graph = random_negdef_graph(rng, minimal=True)
            report = discrepancies(graph)
            assert report.minimal_resolution is True
            assert all(d <= 0 for d in report.discrepancies)
            assert report.singularity_class is not SingularityClass.TERMINAL_REL

    def test_klt_forces_rational_curves(self):
        rng = random.Random(58)
        for _ in range(250):
            graph = random_negdef_graph(rng, minimal=True)
            report = discrepancies(graph)
            if report.singularity_class in (
                SingularityClass.KLT,
                SingularityClass.CANONICAL,
            ):
                assert all(v.genus == 0 for v in graph.vertices)

    def test_solver_output_is_exact(self):
        rng = random.Random(59)
        for _ in range(200):
            graph = random_negdef_graph(rng)
            boundary = random_boundary(rng, graph)
            report = discrepancies(graph, boundary)
            lhs = mat_vec(graph.intersection_matrix(), report.discrepancies)
            rhs = [
                Fraction(k) + boundary.intersection_with(j)
                for j, k in enumerate(graph.canonical_degrees())
            ]
            assert list(lhs) == rhs


class TestNonLcDescent:
    def test_discrepancies_descend_without_bound(self):
        # blowing up the worst intersection point repeatedly drives the
        # minimum discrepancy of a non-lc point arbitrarily low
        graph, boundary = blowup_vertex(single_vertex(2, -1), None, FreePoint(0))
        report = discrepancies(graph, boundary)
        lows = [min(report.discrepancies)]
        for _ in range(6):
            pairs = [(i, j) for i, j, _ in graph.edges]
            best = min(
                pairs,
                key=lambda p: report.discrepancies[p[0]] + report.discrepancies[p[1]],
            )
            graph, boundary = blowup_vertex(graph, boundary, EdgePoint(*best))
            report = discrepancies(graph, boundary)
            lows.append(min(report.discrepancies))
        assert all(b < a for a, b in zip(lows, lows[1:]))
        assert lows[-1] < -8
