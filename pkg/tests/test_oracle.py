import pytest

from hyperelliptic_census.algebra.polyring import pack
from hyperelliptic_census.analysis.stats import w3_class_counts
from hyperelliptic_census.core.census import curve_of, enumerate_genus, is_hyperelliptic
from hyperelliptic_census.validation.oracle import UnionFind, brute_enumerate, brute_w3_scan


def test_union_find_keeps_smallest_root():
    uf = UnionFind()
    for x in [(3, 1), (1, 2), (2, 0)]:
        uf.add(x)
    uf.union((3, 1), (2, 0))
    uf.union((2, 0), (1, 2))
    assert uf.find((3, 1)) == (1, 2)
    uf.union((9, 9), (1, 2))
    assert uf.find((9, 9)) == (1, 2), "missing nodes are added on union"


def _assert_census_matches_oracle(g, F):
    oracle = brute_enumerate(g, F)
    records = enumerate_genus(g, F)
    classes = [oracle.class_of_record(r) for r in records]
    assert len(set(classes)) == len(classes), "two census rows are isomorphic"
    assert set(classes) == set(oracle.classes()), "census misses an isomorphism class"
    for (v, u) in oracle.representatives():
        assert is_hyperelliptic(v, u, g)


def test_oracle_genus2_gf2(F2):
    _assert_census_matches_oracle(2, F2)


@pytest.mark.slow
def test_oracle_genus3_gf2(F2):
    _assert_census_matches_oracle(3, F2)


@pytest.mark.slow
def test_oracle_genus1_gf4(F4):
    _assert_census_matches_oracle(1, F4)


def test_representatives_are_sorted(F2):
    oracle = brute_enumerate(2, F2)
    reps = oracle.representatives()
    keys = [(pack(v), pack(u)) for v, u in reps]
    assert keys == sorted(keys)
    census = enumerate_genus(2, F2)
    assert len(reps) == len(census)
    first = curve_of(census[0])
    assert oracle.class_of(first.v, first.u) in set(oracle.classes())


@pytest.mark.slow
def test_brute_w3_scan_matches_lattice_count():
    assert brute_w3_scan(2).counts == w3_class_counts(2).counts
