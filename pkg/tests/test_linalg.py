from fractions import Fraction

from polysym.linalg import Echelon, nullspace, primitive, rank


def test_primitive_scales_to_coprime_integers():
    ivec, f = primitive({0: Fraction(-1, 2), 3: Fraction(1, 3)})
    assert ivec == {0: 3, 3: -2}
    assert f == -6


def test_rank_and_nullspace():
    cols = [{0: 1, 1: 2}, {0: 2, 1: 4}, {1: 1}, {0: 1}]
    assert rank(cols) == 2
    rels = nullspace(cols)
    assert len(rels) == 2
    for rel in rels:
        total = {}
        for i, c in rel.items():
            for k, v in cols[i].items():
                total[k] = total.get(k, 0) + c * v
        assert all(v == 0 for v in total.values())


def test_express_and_normal_form():
    e = Echelon(track=True)
    e.add({0: 1, 1: 1}, "a")
    e.add({1: 1, 2: 1}, "b")
    combo = e.express({0: 2, 1: 5, 2: 3})
    assert combo == {"a": 2, "b": 3}
    assert e.express({2: 1}) is None
    nf = e.normal_form({0: 1, 1: 1, 2: 1})
    assert nf == {2: 1}


def test_dependent_vector_records_relation():
    e = Echelon(track=True)
    e.add({0: 1}, "u")
    assert not e.add({0: Fraction(3, 2)}, "v")
    rel = e.last_relation
    assert rel["u"] * 1 + rel["v"] * Fraction(3, 2) == 0


def test_explicit_zero_entries_are_ignored():
    assert primitive({0: Fraction(0), 2: 0}) == ({}, 1)
    assert rank([{0: 0}, {1: Fraction(0, 3)}]) == 0
    assert nullspace([{0: 0}]) == [{0: 1}]
