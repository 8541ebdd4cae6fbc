"""Search harness against the golden transcriptions of the reference tables."""

from hyperk3.polyring import (
    is_unramified,
    lehmer_nf,
    parse_poly,
    salem_trace_deg11,
)
from hyperk3.search import (
    enumerate_ct_products,
    list_ct_catalog,
    scan_deg22,
)


def test_catalog_against_fixture(catalog_fixture):
    rows = list_ct_catalog()
    assert len(rows) == 41
    assert sum(1 for _k, _d, u in rows if u) == 15
    by_degree = {}
    for k, d, u in rows:
        by_degree.setdefault(d, ([], []))
        by_degree[d][0].append(k)
        if u:
            by_degree[d][1].append(k)
    expect = {d: (list(ks), list(unram)) for d, ks, unram in catalog_fixture}
    assert by_degree == expect


def test_enumerate_examples():
    sets5 = enumerate_ct_products(5, "sets_only")
    assert (4, 6, 7) in sets5
    assert enumerate_ct_products(0, "sets_only") == [()]
    deg10 = enumerate_ct_products(10, "one_multiple_le3")
    assert (1, 1, 1, 3, 4, 6, 16) in deg10
    # multiplicity rules: no repeated element outside {1,2,3,4,6}, none above 3
    for m in deg10:
        counts = {}
        for k in m:
            counts[k] = counts.get(k, 0) + 1
        rep = [(k, c) for k, c in counts.items() if c > 1]
        assert len(rep) <= 1
        for k, c in rep:
            assert k in (1, 2, 3, 4, 6) and c <= 3
    # sets_only output is a subset
    assert set(enumerate_ct_products(10, "sets_only")) <= set(deg10)


def test_salem_traces_all_minus_one():
    for i in range(1, 11):
        assert salem_trace_deg11(i).trace() == -1


def test_deg22_scans_match_fixture(svh_fixture, deg22_entries):
    assert len(svh_fixture) == 263
    assert sum(1 for r in svh_fixture if r[4] == "S") == 230
    assert sum(1 for r in svh_fixture if r[4] == "H") == 33
    deduped = sorted(set(svh_fixture))
    produced = sorted(
        (e.psi_label, e.case, e.k_multiset, e.st_label, e.verdict)
        for i in range(1, 11) for e in deg22_entries[i]
    )
    assert produced == deduped


def test_deg22_fixture_duplicates_are_r7(svh_fixture):
    seen = {}
    dupes = []
    for row in svh_fixture:
        if row in seen:
            dupes.append(row)
        seen[row] = True
    assert len(dupes) == 8
    assert all(r[0] == "R7" for r in dupes)


def test_deg22_certificates_consistent(deg22_entries):
    for i in (1, 6):
        for e in deg22_entries[i]:
            cert = e.certificate
            assert cert.side == "B" and cert.table == "hyp-B"
            assert cert.rho == 0 and not cert.projective
            assert cert.chi0 == cert.psi


def test_scan_deterministic():
    a = scan_deg22(4)
    b = scan_deg22(4)
    assert [e.row() for e in a] == [e.row() for e in b]


def test_lehmer_a_matches_fixture(min_a_fixture, lehmer_a_entries):
    assert len(lehmer_a_entries) == 15
    got_cmp = sorted(
        (e.psi_label, e.k_multiset, e.st_label, "+".join(e.dynkin),
         e.chi1_tilde.format("z"), e.trace_tilde, e.verdict)
        for e in lehmer_a_entries
    )
    expect_cmp = sorted(
        (p, k, st, "+".join(d), parse_poly(c)[1].format("z"), t, v)
        for p, k, st, d, c, t, v in min_a_fixture
    )
    assert got_cmp == expect_cmp


def test_lehmer_b_matches_fixture(min_b_fixture, lehmer_b_entries):
    assert len(lehmer_b_entries) == 24
    assert sorted(set(e.psi_label for e in lehmer_b_entries)) == ["L3", "L6", "L7", "L8"]
    got_cmp = sorted(
        (e.psi_label, e.case, e.k_multiset, e.st_label, "+".join(e.dynkin),
         e.chi1_tilde.format("z"), e.trace_tilde, e.verdict)
        for e in lehmer_b_entries
    )
    expect_cmp = sorted(
        (p, c, k, st, "+".join(d), parse_poly(chi)[1].format("z"), t, v)
        for p, c, k, st, d, chi, t, v in min_b_fixture
    )
    assert got_cmp == expect_cmp


def test_lehmer_nf_catalog():
    """Only the unramified L_i can support unimodular lattices at all."""
    for i in range(1, 9):
        psi = lehmer_nf(i)
        assert psi.degree == 11
    assert is_unramified(lehmer_nf(3))
