"""Certificates: tables, special traces, renormalization, chi factorization."""

import pytest

from hyperk3.clusters import compute_trace_clusters, index
from hyperk3.k3class import (
    antipode_pair,
    chi_factorization,
    classify_rank22,
    k3_certificate,
    k3_certificate_explain,
    special_trace_by_local_index,
)
from hyperk3.polyring import (
    IntPoly,
    cyclotomic,
    cyclotomic_trace,
    isolate_real_roots,
    lehmer,
    lehmer_nf,
    lehmer_trace,
    pair_from_trace,
    salem_deg22,
    salem_trace_deg11,
)

CT = cyclotomic_trace
W = IntPoly.variable()


def ctp(ks):
    out = IntPoly.one()
    for k in ks:
        out = out * CT(k)
    return out


def lehmer_xs():
    return [r for r in isolate_real_roots(lehmer_trace()) if -2 < r < 2]  # x4..x1 ascending


def salem_ys(i):
    inside = [r for r in isolate_real_roots(salem_trace_deg11(i)) if -2 < r < 2]
    return list(reversed(inside))  # y1..y10, y1 largest


def test_classify_rank22_case3():
    Phi = CT(1) ** 3 * ctp([3, 4, 6, 16])
    tc = compute_trace_clusters(Phi, salem_trace_deg11(1))
    assert classify_rank22(tc) == (3, 16)


def test_classify_rank22_case5():
    Phi = lehmer_trace() * ctp([3, 4, 6, 8])
    tc = compute_trace_clusters(Phi, salem_trace_deg11(3))
    assert classify_rank22(tc) == (5, 16)


def test_classify_rank22_none():
    # a unimodular-shaped but wrong-pattern input: all CT roots of one sign block
    Phi = ctp([5, 7, 11])  # degree 10
    tc = compute_trace_clusters(Phi, salem_trace_deg11(1))
    out = classify_rank22(tc)
    data = index(tc)
    if out is None:
        assert abs(data.p_minus_q) != 16
    else:
        assert abs(data.p_minus_q) == 16


def test_certificate_case1_deg22():
    Phi = CT(1) ** 3 * ctp([3, 4, 6, 16])
    phi, psi = pair_from_trace(Phi, salem_trace_deg11(1), "even")
    cert = k3_certificate(phi, psi, "B")
    assert cert is not None
    assert (cert.table, cert.case, cert.hodge_type) == ("hyp-B", 1, "hyperbolic")
    assert cert.renormalized and not cert.antipode
    assert cert.rho == 0 and not cert.projective
    assert cert.chi0 == salem_deg22(1)
    assert cert.chi1 == IntPoly.one()
    assert cert.special_trace == salem_ys(1)[7]  # y8


def test_certificate_worked_example_side_a():
    Phi = lehmer_trace() * ctp([3, 4, 6, 8])
    phi, psi = pair_from_trace(Phi, salem_trace_deg11(3), "even")
    cert = k3_certificate(phi, psi, "A")
    assert cert is not None
    assert (cert.table, cert.case) == ("hyp-A", 7)
    assert cert.special_trace == lehmer_xs()[1]  # x3
    assert cert.chi0 == lehmer()
    assert cert.rho == 12


def test_certificate_minA_row1():
    Phi = lehmer_trace() * ctp([4, 20])
    phi, psi = pair_from_trace(Phi, salem_trace_deg11(1), "even")
    cert = k3_certificate(phi, psi, "A")
    assert cert is not None and cert.special_trace == lehmer_xs()[0]  # x4


def test_certificate_rejects_low_rank():
    cert, reason = k3_certificate_explain(IntPoly((-1, 0, 1)), IntPoly((1, 1, 1)), "A")
    assert cert is None and "rank" in reason


def test_certificate_rejects_non_unimodular():
    Phi = ctp([5, 7, 11])
    phi, psi = pair_from_trace(Phi, salem_trace_deg11(1), "even")
    cert, reason = k3_certificate_explain(phi, psi, "B")
    assert cert is None and reason == "lattice is not unimodular"


def test_antipode_applied_automatically():
    """The mirror of a certified pair certifies with the antipode flag set."""
    Phi = CT(1) ** 3 * ctp([3, 4, 6, 16])
    phi, psi = pair_from_trace(Phi, salem_trace_deg11(1), "even")
    phi_m, psi_m = antipode_pair(phi, psi)
    base = k3_certificate(phi, psi, "B")
    cert = k3_certificate(phi_m, psi_m, "B")
    assert cert is not None and cert.antipode
    assert cert.case == base.case
    assert cert.special_trace == base.special_trace
    # untwisted certification fails because the Salem root sits below -2
    from hyperk3.polyring import trace_polynomial_pair
    PhiM, PsiM = trace_polynomial_pair(phi_m, psi_m)
    roots_above = [r for r in isolate_real_roots(PsiM) if r > 2]
    assert not roots_above


def test_parabolic_certificates_exist():
    """k containing index 1 puts a simple root at w = 2: parabolic type."""
    phi, psi = pair_from_trace(ctp([1, 3, 17]), salem_trace_deg11(1), "even")
    cert = k3_certificate(phi, psi, "A")
    assert cert is not None
    assert cert.hodge_type == "parabolic"
    assert cert.table == "ep-A"
    assert cert.projective  # root-of-unity special eigenvalue
    # z = 1 is a triple root of phi, all other roots simple
    one = IntPoly((-1, 1))
    count = 0
    rest = cert.phi
    while one.divides(rest):
        rest = rest.divexact(one)
        count += 1
    assert count == 3


def test_rare_hyp_a_cases_1_and_9():
    """Two hyp-A configurations beyond the minimum-entropy family."""
    Psi1 = ((W + 1) * (W * W - 4) - 1) * CT(60)
    Phi1 = lehmer_trace() * CT(18) * CT(5)
    phi1, psi1 = pair_from_trace(Phi1, Psi1, "even")
    cert1 = k3_certificate(phi1, psi1, "A")
    assert cert1 is not None and (cert1.table, cert1.case) == ("hyp-A", 1)

    Psi2 = (W * (W * W - 1) * (W * W - 3) * (W * W - 4) - 1) * CT(24)
    Phi2 = lehmer_trace() * CT(15) * CT(4)
    phi2, psi2 = pair_from_trace(Phi2, Psi2, "even")
    cert2 = k3_certificate(phi2, psi2, "A")
    assert cert2 is not None and (cert2.table, cert2.case) == ("hyp-A", 9)


def test_special_trace_local_index_agrees_with_tables():
    checked = 0
    for i, ks in [(1, [3, 4, 6, 16]), (3, [4, 36]), (5, [7, 24])]:
        Phi = CT(1) ** 3 * ctp(ks)
        assert Phi.degree == 10
        phi, psi = pair_from_trace(Phi, salem_trace_deg11(i), "even")
        cert = k3_certificate(phi, psi, "B")
        if cert is None:
            continue
        st2 = special_trace_by_local_index(cert.clusters, "B", cert.renormalized)
        assert st2 == cert.special_trace
        checked += 1
    assert checked >= 2


def test_chi_factorization_examples():
    ys = salem_ys(1)
    split = chi_factorization(salem_deg22(1), ys[7])
    assert split.chi0 == salem_deg22(1) and split.rho == 0 and not split.projective
    # Lehmer factor inside a product
    chi = lehmer() * cyclotomic(1) ** 4 * cyclotomic(2) ** 4 * cyclotomic(4) ** 2
    xs = lehmer_xs()
    split = chi_factorization(chi, xs[2])
    assert split.chi0 == lehmer() and split.rho == 12 and not split.projective
    # cyclotomic special trace: projective flag
    c12_trace_root = isolate_real_roots(CT(12))[1]  # sqrt 3
    chi2 = cyclotomic(12) * lehmer() * cyclotomic(1) ** 6 * cyclotomic(2) ** 2
    split2 = chi_factorization(chi2, c12_trace_root)
    assert split2.projective and split2.chi0 == cyclotomic(12)
    # a non-root tau is rejected
    with pytest.raises(ValueError):
        chi_factorization(chi, isolate_real_roots(IntPoly((-3, 0, 1)))[0])


def test_certificates_satisfy_cluster_simpleness():
    """Any non-null A cluster is simple except at most one of size 2 or 3."""
    for i, ks, mult in [(1, [3, 4, 6, 16], 3), (2, [9, 24], 3), (5, [17], 2)]:
        Phi = CT(1) ** mult * ctp(ks)
        if Phi.degree != 10:
            continue
        phi, psi = pair_from_trace(Phi, salem_trace_deg11(i), "even")
        cert = k3_certificate(phi, psi, "B")
        if cert is None:
            continue
        sizes = [s for s in cert.clusters.cluster_sizes("A") if s > 0]
        big = [s for s in sizes if s > 1]
        assert len(big) <= 1 and all(s <= 3 for s in big)


def test_elliptic_certificates():
    """Elliptic side-A examples: all eigenvalues of A on the unit circle."""
    # (R1, {3,5,6,7,9}): ep-A case 8, special trace = max of the double A_2
    phi, psi = pair_from_trace(ctp([3, 5, 6, 7, 9]), salem_trace_deg11(1), "even")
    cert = k3_certificate(phi, psi, "A")
    assert cert is not None
    assert (cert.table, cert.case, cert.hodge_type) == ("ep-A", 8, "elliptic")
    assert cert.projective
    assert cert.chi1.divides(cert.phi) and cert.chi0.divides(cert.phi)

    # (R2, {14,16,18}) certifies through the antipode as ep-A case 3:
    # the special trace is the middle element of the triple A cluster
    phi2, psi2 = pair_from_trace(ctp([14, 16, 18]), salem_trace_deg11(2), "even")
    cert2 = k3_certificate(phi2, psi2, "A")
    assert cert2 is not None and cert2.antipode
    assert (cert2.table, cert2.case, cert2.hodge_type) == ("ep-A", 3, "elliptic")
    triples = [c for c in cert2.clusters.a_clusters
               if sum(r.multiplicity for r in c) == 3]
    assert len(triples) == 1
    assert cert2.special_trace == triples[0][1]
    st2 = special_trace_by_local_index(cert2.clusters, "A", cert2.renormalized)
    assert st2 == cert2.special_trace


def test_minB_row_certificate():
    Phi = ctp([3, 6, 10, 21])
    phi, psi = pair_from_trace(Phi, lehmer_nf(3), "even")
    cert = k3_certificate(phi, psi, "B")
    assert cert is not None
    assert cert.case == 2 and cert.special_trace == lehmer_xs()[0]
    assert cert.chi0 == lehmer() and cert.rho == 12


def test_renormalized_signature_is_3_19():
    from hyperk3.hyplattice import build_lattice, signature_oracle

    Phi = CT(1) ** 3 * ctp([3, 4, 6, 16])
    phi, psi = pair_from_trace(Phi, salem_trace_deg11(1), "even")
    cert = k3_certificate(phi, psi, "B")
    lat = build_lattice(phi, psi)
    assert signature_oracle(lat.gram_a) == (19, 3)
    assert cert.renormalized
    negated = [[-x for x in row] for row in lat.gram_a]
    assert signature_oracle(negated) == (3, 19)
