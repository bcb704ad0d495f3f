import pytest

import matroidwb as mw


def test_example_lattice_path_bases():
    m = mw.lattice_path([1, 2, 5], [3, 5, 6])
    assert (m.size, m.rank, len(m)) == (6, 3, 15)
    assert [1, 2, 5] in m.bases and [3, 5, 6] in m.bases
    assert mw.Matroid.from_text(m.to_text()) == m


def test_truncation_with_single_element_flat():
    m = mw.lattice_path([1, 2, 5], [3, 5, 6])
    assert len(mw.principal_truncation(m, [6])) == 9
    assert len(mw.principal_extension(m, [6])) == 24


def test_invalid_bases_raise():
    with pytest.raises(mw.MatroidError):
        mw.Matroid(4, [[1, 2], [3, 4]])


def test_u24_rayleigh_difference():
    assert mw.rayleigh_diff(mw.uniform(2, 4), 1, 2) == "1 : x3^2\n1 : x3 x4\n1 : x4^2\n"


def test_verdicts():
    k4 = mw.atlas("MK4")
    assert mw.neg_corr(k4)["outcome"] == "Holds"
    v = mw.hpp(k4, budget=2000)
    assert v["outcome"] == "Holds"
    assert mw.positroid_order(k4) is None
    assert mw.positroid_order(mw.uniform(2, 4)) is not None


def test_fano_witness_is_exact():
    lines = [{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}]
    from fractions import Fraction
    from itertools import combinations

    bases = [list(b) for b in combinations(range(1, 8), 3) if set(b) not in lines]
    fano = mw.Matroid(7, bases)
    v = mw.strong_rayleigh(fano, sos=False)
    assert v["outcome"] == "Fails"
    assert Fraction(v["value"]) < 0


def test_sparse_paving_count():
    assert len(mw.sparse_paving_family(6, 3)) == 6


def test_reference_fixtures_report_example_defect():
    results = {r["name"]: r for r in mw.reference_fixtures()}
    assert results["example M[125,356] bases"]["passed"]
    assert not results["example truncation by F=[6]"]["passed"]
