import pytest

from bel import corpus
from bel.bei import (
    AdmissiblePath,
    admissible_paths,
    binomial_edge_ideal,
    edge_binomial,
    gb_max_degree,
    graph_ring,
    groebner_combinatorial,
    initial_ideal,
    min_gb_degree,
)
from bel.errors import SizeLimitError
from bel.graphs import Graph, net_graph
from bel.recognizers import Labeling


def test_edge_binomial():
    R = graph_ring(Graph.path(3))
    f = edge_binomial(R, 2, 1)
    assert str(f) == "x1*y2 - x2*y1"


def test_admissible_paths_path_graph():
    got = admissible_paths(Graph.path(3))
    assert got == [AdmissiblePath(1, 2, ()), AdmissiblePath(2, 3, ())]
    # the path 1-2-3 is NOT admissible for (1,3): interior vertex 2 is
    # strictly between the endpoints
    assert all(not (p.i, p.j) == (1, 3) for p in got)


def test_admissible_paths_star():
    # center 1: every leaf pair i<j connects through 1 < i, an admissible
    # interior vertex
    got = admissible_paths(Graph.star(3))
    assert AdmissiblePath(2, 3, (1,)) in got
    assert AdmissiblePath(2, 4, (1,)) in got
    assert AdmissiblePath(3, 4, (1,)) in got
    assert AdmissiblePath(1, 2, ()) in got
    assert len(got) == 6


def test_star_basis_frozen():
    """Reduced basis of the 3-star: the three edge binomials plus one
    cubic per leaf pair, multiplied by y_1."""
    G = Graph.star(3)
    gb = groebner_combinatorial(G)
    rendered = sorted(str(g) for g in gb)
    assert rendered == sorted(
        [
            "x1*y2 - x2*y1",
            "x1*y3 - x3*y1",
            "x1*y4 - x4*y1",
            "x2*y1*y3 - x3*y1*y2",
            "x2*y1*y4 - x4*y1*y2",
            "x3*y1*y4 - x4*y1*y3",
        ]
    )
    assert list(gb) == list(binomial_edge_ideal(G).groebner())


def test_combinatorial_matches_buchberger_small():
    for G in corpus.connected_transversal_upto(4):
        assert list(groebner_combinatorial(G)) == list(binomial_edge_ideal(G).groebner())


def test_initial_ideal_squarefree_and_minimal():
    for G in [Graph.path(4), Graph.star(3), Graph.cycle(4), net_graph()]:
        I = initial_ideal(G)
        monos = [g.leading_monomial() for g in I.gens]
        for m in monos:
            assert all(e <= 1 for e in m)
        for i, m in enumerate(monos):
            for j, k in enumerate(monos):
                if i != j:
                    assert not all(a <= b for a, b in zip(k, m))


def test_gb_max_degree():
    assert gb_max_degree(Graph.path(4)) == 2
    assert gb_max_degree(Graph.star(3)) == 3
    assert gb_max_degree(Graph.complete(4)) == 2
    # a bad labeling of the path raises the degree
    assert gb_max_degree(Graph.path(3), Labeling.from_order([1, 3, 2])) == 3


def test_min_gb_degree():
    assert min_gb_degree(Graph.path(4)) == 2
    assert min_gb_degree(Graph.star(3)) == 3  # no labeling makes a non-path tree quadratic
    assert min_gb_degree(Graph.empty(2)) == 0
    with pytest.raises(SizeLimitError):
        min_gb_degree(Graph.path(8))


def test_min_degree_two_iff_closed():
    """A graph with edges has a quadratic reduced basis under some
    labeling exactly when it has a closed labeling."""
    from bel.recognizers import is_closed

    for G in corpus.connected_transversal_upto(5):
        if not G.edges:
            continue
        assert (min_gb_degree(G) == 2) == is_closed(G), sorted(G.edges)
