import os
from pathlib import Path

import pytest

import greenseq as gs

DATA = Path(os.environ.get("GREENSEQ_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))


def test_matrix_mutation():
    b = [[0, 2, 0, 0], [-2, 0, 1, 0], [0, -1, 0, -1]]
    assert gs.mutate_matrix(b, 3, 2) == [[0, -2, 2, 0], [2, 0, -1, 0], [-2, 1, 0, -1]]


def test_a2():
    q = gs.Quiver.from_arrows(2, [(1, 2, 1)])
    assert gs.is_maximal_green(q, [1, 2])
    assert gs.is_maximal_green(q, [2, 1, 2])
    assert gs.c_vector_trace(q, [1, 2]) == [[1, 0], [0, 1]]
    assert gs.check_maximal_green(q, [1])[0] is False
    cert = gs.shortest_mgs(q, 4)
    assert cert["minimal_length"] == 2 and cert["exhaustive"]


def test_worked_examples():
    for name, length in [("fig10.json", 21), ("fig11.json", 38), ("fig12.json", 18)]:
        q = gs.Quiver.load(str(DATA / name))
        seq, _ = gs.min_mgs(q)
        assert len(seq) == length == gs.min_length(q)
        assert gs.is_maximal_green(q, seq)


def test_classify_and_formula():
    cycle = gs.Quiver.from_arrows(3, [(1, 2, 1), (2, 3, 1), (3, 1, 1)])
    family, length, breakdown = gs.length_formula(cycle)
    assert gs.classify(cycle) == family
    assert length == 4
    assert sum(breakdown.values()) == length


def test_type_iv_stages():
    stages = gs.type_iv_stages(gs.Quiver.load(str(DATA / "fig12.json")))
    assert stages[0] == [7, 11, 4, 10, 9, 2, 8]
    assert sum(map(len, stages)) == 18


def test_flip_matches_mutation():
    star = '{"boundary_points": 3, "arcs": [{"type": "radius", "end": 0, "tag": "plain"},' \
           ' {"type": "radius", "end": 1, "tag": "plain"}, {"type": "radius", "end": 2, "tag": "plain"}]}'
    q = gs.triangulation_quiver(star)
    assert gs.triangulation_quiver(gs.flip(star, 2)) == gs.mutate(q, 2)


def test_restrict():
    q = gs.Quiver.from_arrows(3, [(1, 2, 1), (2, 3, 1)])
    r = gs.restrict_mgs(q, [1, 2, 3], [1, 3])
    assert gs.is_maximal_green(gs.full_subquiver(q, [1, 3]), [[1, 3].index(v) + 1 for v in r])


def test_errors_carry_kind():
    q = gs.Quiver.from_arrows(2, [(1, 2, 1)])
    with pytest.raises(gs.GreenseqError) as info:
        gs.mutate(q, 5)
    assert info.value.kind
