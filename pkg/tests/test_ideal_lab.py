import json
from fractions import Fraction

import pytest

from polysym.free_algebra import phi_eval
from polysym.ideal_lab import (
    TableReport, build_secondary_generators, certificate_value, check_generation,
    check_minimality, kernel_component_basis, lowerbound_check, orbit_generators,
    permute_symbols, phi_rank, reduce_mod_P, translate_count, verify_congruence_table,
)
from polysym.invariant_ring import dim_invariant_component
from polysym.notation import invariant, tpoly
from polysym.polycore import DomainError
from polysym.relations import j32
from polysym.schur import dim_F_component


def test_kernel_component_examples():
    (k,) = kernel_component_basis(3, 2, (3, 2))
    J = j32().element
    # proportional to J_{3,2}
    lead, c = J.leading_term()
    assert k.scale(Fraction(c, k.coeff(lead))) == J
    assert kernel_component_basis(3, 2, (2, 2)) == ()
    assert len(kernel_component_basis(3, 2, (4, 2))) == 2


def test_rank_nullity_on_a_weight():
    a = (2, 2, 1)
    assert phi_rank(3, 3, a) + len(kernel_component_basis(3, 3, a)) == dim_F_component(3, 3, a)
    assert phi_rank(3, 3, a) == dim_invariant_component(3, 3, a)


@pytest.mark.parametrize("text,m,member", [
    ("[x^2y^2] - 1/3[xy]^2", 2, True),
    ("[x^2y][xy]", 2, True),
    ("[xy]", 2, False),
    ("6[xyzw] - [xy][zw] - [xz][yw] - [xw][yz]", 4, True),
    ("[x^2y][xz] + [x^2z][xy]", 3, True),
    ("[x^2y][xz]", 3, False),
])
def test_reduce_mod_P(text, m, member):
    p = invariant(text, 3, m)
    res = reduce_mod_P(p)
    assert res.member is member
    if member:
        assert certificate_value(res.certificate, 3, m) == p


def test_reduce_mod_P_needs_homogeneous_input():
    p = invariant("[xy] + [x]", 3, 2)
    with pytest.raises(DomainError):
        reduce_mod_P(p)


def test_translate_counts():
    f = tpoly("[xy][yz][zx]", 3)
    assert translate_count(f) == 1
    assert translate_count(f, 4) == 4
    assert translate_count(tpoly("[xy][x^2y]", 3)) == 6


def test_permute_symbols_swaps_variables():
    f = tpoly("[x^2y]", 2)
    assert permute_symbols(f, (1, 0)) == tpoly("[xy^2]", 2)


def test_table2_report_serializes():
    rep = verify_congruence_table(2)
    assert rep.ok
    doc = json.loads(json.dumps(rep.to_json()))
    assert doc["schema"] == "polysym-report/1"
    assert rep.to_tsv().count("\n") == 12


def test_failing_row_is_reported():
    rep = TableReport("t")
    assert rep.ok
    from polysym.ideal_lab import Entry
    rep.entries.append(Entry("x", (1,), "zero", "failed"))
    assert not rep.ok and rep.failures()[0].key == "x"


def test_secondary_generators_m2_counts_by_degree():
    chosen, rep = build_secondary_generators(2, 6)
    assert rep.ok
    by_degree = [0] * 7
    for alpha, picks in chosen.items():
        by_degree[sum(alpha)] += len(picks)
    assert by_degree == [1, 0, 1, 2, 1, 0, 1]


def test_secondary_generators_m3_example():
    chosen, rep = build_secondary_generators(3, 6)
    assert rep.ok
    assert len(chosen[(3, 2, 1)]) == 1


def test_generation_and_minimality_m2():
    G = orbit_generators(2)
    assert len(G) == 5
    assert all(not phi_eval(g.element, 3) for g in G.members)
    assert check_generation(G, 3, 2).ok
    res = check_minimality(G, 3, 2)
    assert res.ok and res.info["beta"] == 6


def test_generation_detects_a_missing_generator():
    G = orbit_generators(2)
    G.members = [g for g in G.members if not g.name.startswith("J_{4,2}")]
    res = check_generation(G, 3, 2, max_degree=6)
    assert not res.ok
    assert {tuple(f["multidegree"]) for f in res.failures} == {(4, 2), (3, 3), (2, 4)}


def test_lowerbound_small():
    assert lowerbound_check(2)["status"] == "pass"
    assert lowerbound_check(5)["status"] == "unsupported"


def test_lowerbound_budget_reports_unsupported():
    assert lowerbound_check(4, time_budget=0.0)["status"] == "unsupported"
