import pytest

from foamcalc import corpus
from foamcalc.linkcx import (
    ColoredDiagram,
    crossing_complex,
    cube,
    cube_edges,
    euler_char,
    koszul_sign,
    reorder_sign,
)
from foamcalc.poly import LaurentPoly
from foamcalc.symcore import qbinomial
from foamcalc.webmoy import moy_eval


def lp(text_terms):
    return LaurentPoly({(q, 0): c for q, c in text_terms.items()})


def test_crossing_complex_shapes():
    objs = crossing_complex(1, 1, 1, 2)
    assert [(o.q, o.t) for o in objs] == [(-1, 0), (0, 1)]
    assert len(objs[0].web.rotation) == 0 and len(objs[1].web.rotation) == 2
    assert [(o.q, o.t) for o in crossing_complex(1, 2, 1, 3)] == [(-2, 0), (-1, 1)]
    assert [(o.q, o.t) for o in crossing_complex(-1, 2, 2, 4)] == [(4, 0), (3, -1), (2, -2)]
    with pytest.raises(ValueError):
        crossing_complex(1, 0, 1, 2)


def test_cube_of_hopf():
    D = ColoredDiagram.from_braid(2, [1, 1], [1, 1])
    assert D.cube_size() == 4
    C = cube(D, 2)
    assert sorted(o.t for o in C.values()) == [0, 1, 1, 2]
    edges = cube_edges(D)
    assert len(edges) == 4
    # the square anticommutes
    assert sorted(e.sign for e in edges) == [-1, 1, 1, 1]


def test_cube_size_counts_states():
    D = ColoredDiagram.from_braid(2, [1, 1], [2, 2])
    assert D.cube_size() == 9 == len(cube(D, 3))


def test_koszul_and_reorder_signs():
    assert koszul_sign([1, 0, 1], 0) == 1
    assert koszul_sign([1, 0, 1], 2) == -1
    assert reorder_sign([1, 1], [1, 0]) == -1
    assert reorder_sign([1, 2], [1, 0]) == 1
    assert reorder_sign([1, 1, 1], [2, 1, 0]) == -1


@pytest.mark.parametrize("N", [2, 3])
@pytest.mark.parametrize("a", [1, 2])
def test_unknot_with_kinks(N, a):
    want = qbinomial(N, a)
    for word in ([], [1], [-1]):
        n = 1 if not word else 2
        D = ColoredDiagram.from_braid(n, word, [a])
        assert euler_char(D, N) == want


@pytest.mark.parametrize("N", [2, 3])
def test_mirror_is_bar(N):
    for word, cols in [([1, 1], [1, 1]), ([1, 1, 1], [1]), ([1, 1], [1, 2])]:
        D = ColoredDiagram.from_braid(2, word, cols)
        assert euler_char(D.mirror(), N) == euler_char(D, N).bar()


@pytest.mark.parametrize("N", [2, 3])
@pytest.mark.parametrize("group", sorted(corpus.groups()))
def test_corpus_groups_share_euler_char(N, group):
    diagrams = corpus.load_group(group)
    if max(max(D.components.values()) for D in diagrams) > N:
        pytest.skip("label above N")
    values = {str(euler_char(D, N)) for D in diagrams}
    assert len(values) == 1


def test_frozen_values():
    # computed once and pinned; mirror and corpus tests cross-check them
    trefoil = ColoredDiagram.from_braid(2, [1, 1, 1], [1])
    assert euler_char(trefoil, 2) == lp({-9: -1, -5: 1, -3: 1, -1: 1})
    hopf = ColoredDiagram.from_braid(2, [1, 1], [1, 1])
    assert euler_char(hopf, 2) == lp({-6: 1, -4: 1, -2: 1, 0: 1})
    assert euler_char(hopf, 3) == lp({-10: 1, -8: 2, -6: 2, -4: 2, -2: 1, 0: 1})


def test_two_unlinked_circles_multiply():
    D = ColoredDiagram.from_braid(2, [], [1, 2])
    assert euler_char(D, 3) == qbinomial(3, 1) * qbinomial(3, 2)


def test_states_are_webs_with_known_values():
    D = ColoredDiagram.from_braid(2, [1], [1])
    C = cube(D, 2)
    assert moy_eval(C[(0,)].web, 2) == qbinomial(2, 1) ** 2


def test_json_round_trip():
    D = ColoredDiagram.from_braid(3, [1, -2, 1], [1, 2])
    again = ColoredDiagram.from_json(D.to_json())
    assert again.to_json() == D.to_json()
    assert euler_char(again, 3) == euler_char(D, 3)


def test_open_diagram_rejected_by_euler():
    data = {"components": [{"id": 0, "color": 1}], "arcs": [{"id": 0, "component": 0}],
            "crossings": [], "boundary": [[0, "in"], [0, "out"]]}
    D = ColoredDiagram.from_json(data)
    with pytest.raises(ValueError):
        euler_char(D, 2)
