from polysym.free_algebra import phi_eval
from polysym.relations import (
    catalog, distributions, gram_relation, j222, j32, j42, psi,
)
from polysym.polycore import tmono_from_words


def test_bell_numbers():
    assert [len(distributions(k)) for k in range(1, 6)] == [1, 2, 5, 15, 52]


def test_psi_vanishes_on_examples():
    assert not phi_eval(psi(3, [(1, 0), (1, 0), (0, 1), (0, 1)]), 3)
    assert not phi_eval(psi(2, [(1, 1), (2, 0), (0, 1)]), 2)


def test_psi_does_not_vanish_for_too_few_rows():
    assert phi_eval(psi(3, [(1, 0)] * 4), 4)


def test_two_forms_of_the_explicit_relations_agree():
    for rec in (j32(), j42()):
        assert rec.forms["A"] == rec.forms["B"]
        assert not phi_eval(rec.element, 3)


def test_gram_relation_coefficient_is_stored_raw():
    # the raw determinant carries coefficient 6 on t(xy)t(xz)t(yz)
    J = j222().element
    key = tmono_from_words([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    assert J.coeff(key) == 6
    assert len(J) == 17


def test_gram_relation_degree():
    for n in (2, 3):
        rec = gram_relation(n)
        assert rec.element.degree() == 2 * n
        assert rec.weight == (2,) * n


def test_catalog_schema():
    doc = catalog(3)
    assert doc["schema"] == "polysym-relations/1"
    assert [r["name"] for r in doc["relations"]] == ["J_{3,2}", "J_{4,2}", "J_{2,2,2}"]


def test_catalog_matches_golden_file():
    import json
    from pathlib import Path
    golden = json.loads((Path(__file__).parent / "golden" / "relations_m3.json").read_text())
    assert json.loads(json.dumps(catalog(3))) == golden
    (j,) = [r for r in golden["relations"] if r["name"] == "J_{2,2,2}"]
    coeff = {t["text"]: t["coeff"] for t in j["terms"]}
    assert coeff["t(xy)*t(xz)*t(yz)"] == "6"
