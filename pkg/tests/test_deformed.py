import itertools
from math import comb

import pytest

from foamcalc import corpus
from foamcalc.deformed import (
    SigmaSpec,
    colorings,
    crossing_shift,
    deformed_homology,
    lee_degrees,
    simple_resolution,
    state_summand,
)
from foamcalc.linkcx import ColoredDiagram
from foamcalc.poly import LaurentPoly


def tpoly(terms):
    return LaurentPoly({(0, t): c for t, c in terms.items()})


def linking_oracle(D, N):
    """Count colorings of an uncolored link by t-degree, one crossing at a time."""
    comps = list(D.components)
    out = {}
    for choice in itertools.product(range(N), repeat=len(comps)):
        col = dict(zip(comps, choice))
        t = 0
        for c in D.crossings:
            if col[D.arcs[c.over[0]]] != col[D.arcs[c.under[0]]]:
                t += c.sign
        out[t] = out.get(t, 0) + 1
    return tpoly(out)


def test_crossing_shift_examples():
    assert crossing_shift(1, {1}, {2}) == 1
    assert crossing_shift(-1, {1}, {2}) == -1
    assert crossing_shift(1, {1}, {1}) == 0
    assert crossing_shift(1, {1, 2}, {1}) == 0
    assert crossing_shift(1, {1, 2}, {3, 4}) == 2
    assert crossing_shift(-1, {1, 2}, {2, 3}) == -1


def test_sigma_parsing():
    assert SigmaSpec.parse("1,-1").N == 2
    with pytest.raises(ValueError, match="got 1,1"):
        SigmaSpec.parse("1,1")
    with pytest.raises(ValueError):
        SigmaSpec.parse("1,2,3", 2)


@pytest.mark.parametrize("N", range(1, 5))
def test_knots_give_N(N):
    for word in ([], [1], [1, 1, 1], [1, -2, 1, -2]):
        n = max((abs(g) for g in word), default=0) + 1
        D = ColoredDiagram.from_braid(n, word, [1])
        assert deformed_homology(D, N) == tpoly({0: N})


@pytest.mark.parametrize("N", range(1, 6))
def test_colored_unknot(N):
    for a in range(1, N + 1):
        for word in ([], [1], [-1]):
            D = ColoredDiagram.from_braid(1 if not word else 2, word, [a])
            assert deformed_homology(D, N) == tpoly({0: comb(N, a)})


def test_hopf_link():
    D = ColoredDiagram.from_braid(2, [1, 1], [1, 1])
    assert deformed_homology(D, SigmaSpec.parse("1,-1")) == tpoly({0: 2, 2: 2})
    assert deformed_homology(D.mirror(), 2) == tpoly({0: 2, -2: 2})
    # only the number of parameters matters
    assert deformed_homology(D, SigmaSpec.parse("3/2,7,-4")) == deformed_homology(D, 3)


@pytest.mark.parametrize("N", [2, 3])
def test_uncolored_links_match_linking_numbers(N):
    for group in corpus.groups():
        for D in corpus.load_group(group):
            if any(c != 1 for c in D.components.values()):
                continue
            want = linking_oracle(D, N)
            assert deformed_homology(D, N) == want
            assert lee_degrees(D, N) == want


@pytest.mark.parametrize("N", [2, 3])
@pytest.mark.parametrize("group", sorted(corpus.groups()))
def test_corpus_invariance(N, group):
    diagrams = corpus.load_group(group)
    if max(max(D.components.values()) for D in diagrams) > N:
        pytest.skip("label above N")
    values = {str(deformed_homology(D, N)) for D in diagrams}
    assert len(values) == 1


def test_total_rank_at_t_equal_one():
    for group in corpus.groups():
        for D in corpus.load_group(group):
            N = 3
            want = 1
            for a in D.components.values():
                want *= comb(N, a)
            assert sum(deformed_homology(D, N).coeffs.values()) == want


def test_colored_hopf():
    D = ColoredDiagram.from_braid(2, [1, 1], [1, 2])
    # {i} inside {j,k} for 6 of the 9 colorings
    assert deformed_homology(D, 3) == tpoly({0: 6, 2: 3})


def test_state_summand_degrees():
    D = ColoredDiagram.from_braid(2, [1, 1], [1, 1])
    rows = [state_summand(D, col, 2) for col in colorings(D, 2)]
    assert sorted(r["t"] for r in rows) == [0, 0, 2, 2]
    assert {r["state"] for r in rows} == {(0, 0), (1, 1)}


def test_simple_resolution_is_admissibly_colored():
    for group in corpus.groups():
        for D in corpus.load_group(group):
            W = simple_resolution(D)
            data = W.to_json()
            for e in data["edges"]:
                assert len(e["color"]) == e["label"]
            for v, vert in enumerate(data["vertices"]):
                thick, thin = None, []
                for ref in vert["order"]:
                    e = data["edges"][ref["edge"]]
                    incoming = ref["end"] == "to"
                    if incoming == (vert["kind"] == "split"):
                        thick = set(e["color"])
                    else:
                        thin.append(set(e["color"]))
                assert thin[0].isdisjoint(thin[1]) and thin[0] | thin[1] == thick


def test_simple_resolution_small_cases():
    hopf = ColoredDiagram.from_braid(2, [1, 1], [1, 1])
    W = simple_resolution(hopf)
    assert not W.rotation and tuple(W.circles) == (1, 1)
    W = simple_resolution(ColoredDiagram.from_braid(2, [1, 1], [1, 2]))
    assert len(W.rotation) == 4
    assert sorted(e["label"] for e in W.to_json()["edges"]) == [1, 1, 1, 1, 2, 2]
