"""Exhaustive searches over cyclotomic-trace products.

The three families:

  deg22    Phi = product of CT_k of total degree 10 (at most one repeated
           index, from {1,2,3,4,6}, multiplicity <= 3), Psi one of the ten
           degree-11 Salem trace polynomials, matrix B;
  lehmerA  Phi = LT * (CT product of degree 5, distinct indices),
           Psi in {R_1..R_10}, matrix A;
  lehmerB  Phi = CT product of degree 10 as in deg22, Psi in {L_1..L_8}
           (the degree-11 LT * CT products), matrix B.

Candidate generation is exhaustive and unimodularity is decided by the
cross-resultant criterion; nothing in here is transcribed from reference
tables (those live in the test fixtures).  Entries are emitted canonically
sorted so repeated scans are byte-identical.  Workers can run in parallel
across candidates (HYPERK3_THREADS) with a deterministic merge.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .k3class import K3Certificate, k3_certificate
from .picard import (
    bring_back,
    enumerate_root_system,
    picard_from_certificate,
    positive_simple_roots,
    preserves_positive_roots,
)
from .polyring import (
    IntPoly,
    cyclotomic_indices_up_to_degree,
    cyclotomic_trace,
    is_unramified,
    isolated_roots_shared,
    lehmer,
    lehmer_nf,
    lehmer_trace,
    pair_from_trace,
    resultant,
    salem_trace_deg11,
    totient_degree,
)
from .polyring.roots import isolate_with_known_factors
from .siegel import builtin_q, siegel_test, threshold_classify_deg22

MULTIPLE_OK = (1, 2, 3, 4, 6)  # the degree-one indices: integer-rooted CT_k


@lru_cache(maxsize=1)
def ct_catalog() -> tuple[tuple[int, int], ...]:
    """(k, deg CT_k) for every index with degree <= 10, sorted by (deg, k)."""
    idxs = cyclotomic_indices_up_to_degree(10)
    return tuple(sorted(((k, totient_degree(k)) for k in idxs),
                        key=lambda t: (t[1], t[0])))


def list_ct_catalog():
    """Catalog rows (k, degree, unramified) grouped as in the reference table."""
    return [(k, d, is_unramified(cyclotomic_trace(k))) for k, d in ct_catalog()]


def enumerate_ct_products(target_degree: int, multiplicity_rule: str = "sets_only"):
    """All index multisets with sum of CT degrees equal to target_degree.

    'sets_only' yields plain sets; 'one_multiple_le3' additionally allows one
    repeated element from {1, 2, 3, 4, 6} with multiplicity 2 or 3.  Output
    is canonically sorted (each multiset ascending, then lexicographic).
    """
    if target_degree < 0:
        raise ValueError("target degree must be >= 0")
    if multiplicity_rule not in ("sets_only", "one_multiple_le3"):
        raise ValueError("unknown multiplicity rule")
    catalog = ct_catalog()
    out = [tuple(s) for s in _subsets_summing(catalog, target_degree)]
    if multiplicity_rule == "one_multiple_le3":
        for mult in (2, 3):
            if target_degree < mult:  # each copy of the repeated index has degree 1
                continue
            for m in MULTIPLE_OK:
                rest = tuple((k, d) for k, d in catalog if k != m)
                for s in _subsets_summing(rest, target_degree - mult):
                    out.append(tuple(sorted(s + (m,) * mult)))
    canon = sorted({tuple(sorted(m)) for m in out})
    return canon


def _subsets_summing(catalog, target):
    """Distinct-index subsets with degree sum == target (ascending tuples)."""
    items = sorted(catalog)
    sols = []

    def rec(i, remaining, acc):
        if remaining == 0:
            sols.append(tuple(acc))
            return
        for j in range(i, len(items)):
            k, d = items[j]
            if d <= remaining:
                acc.append(k)
                rec(j + 1, remaining - d, acc)
                acc.pop()

    rec(0, target, [])
    return sols


def ct_product(multiset) -> IntPoly:
    out = IntPoly.one()
    for k in multiset:
        out = out * cyclotomic_trace(k)
    return out


def _multiset_ok(multiset) -> bool:
    counts = {}
    for k in multiset:
        counts[k] = counts.get(k, 0) + 1
    multiples = [(k, c) for k, c in counts.items() if c > 1]
    if not multiples:
        return True
    if len(multiples) > 1:
        return False
    k, c = multiples[0]
    return k in MULTIPLE_OK and c <= 3


@dataclass(frozen=True)
class SearchEntry:
    psi_label: str
    k_multiset: tuple[int, ...]
    case: int
    table: str
    st_label: str
    verdict: str
    certificate: K3Certificate
    dynkin: tuple | None = None
    chi1_tilde: IntPoly | None = None
    trace_tilde: int | None = None

    def row(self):
        out = [self.psi_label, str(self.case),
               ",".join(str(k) for k in self.k_multiset), self.st_label, self.verdict]
        if self.dynkin is not None:
            out.insert(4, "+".join(self.dynkin))
            out.insert(5, self.chi1_tilde.format("z"))
            out.insert(6, str(self.trace_tilde))
        return out


def _root_label(tau, poly, prefix: str) -> str:
    """y_j / x_j naming: index 1 is the largest root of poly inside (-2, 2)."""
    inside = [r for r in isolated_roots_shared(poly) if -2 < r < 2]
    for j, root in enumerate(reversed(inside), start=1):
        if tau == root:
            return f"{prefix}{j}"
    raise AssertionError("special trace is not an inside root of the expected polynomial")


def _ct_factor_roots(multiset):
    counts = {}
    for k in multiset:
        counts[k] = counts.get(k, 0) + 1
    return isolate_with_known_factors(
        [(cyclotomic_trace(k), c) for k, c in counts.items()])


def _worker_deg22(args):
    i, multiset = args
    R = salem_trace_deg11(i)
    phi, psi = pair_from_trace(ct_product(multiset), R, "even")
    cert = k3_certificate(phi, psi, "B", a_roots=_ct_factor_roots(multiset),
                          b_roots=list(isolated_roots_shared(R)))
    if cert is None:
        return None
    tau = cert.special_trace.retargeted(R)
    verdict = threshold_classify_deg22(tau)
    full = siegel_test(tau, builtin_q("fixed_point"))
    assert full.verdict == verdict
    return SearchEntry(f"R{i}", tuple(sorted(multiset)), cert.case, cert.table,
                       _root_label(tau, R, "y"), verdict, cert)


def scan_deg22(r_index: int, jobs: int | None = None) -> list[SearchEntry]:
    """Every K3 configuration with Psi = R_(r_index) and Phi a CT product of degree 10."""
    if not 1 <= r_index <= 10:
        raise ValueError("index must be 1..10")
    R = salem_trace_deg11(r_index)
    assert R.trace() == -1, "Salem trace polynomials here must have trace -1"
    candidates = []
    ok = _resultant_ok_map(R)
    for multiset in enumerate_ct_products(10, "one_multiple_le3"):
        if all(ok[k] for k in set(multiset)):
            candidates.append((r_index, multiset))
    results = _run(_worker_deg22, candidates, jobs)
    entries = [e for e in results if e is not None]
    entries.sort(key=_entry_key)
    return entries


def _resultant_ok_map(R: IntPoly):
    return {k: abs(resultant(cyclotomic_trace(k), R)) == 1 for k, _d in ct_catalog()}


def _entry_key(e: SearchEntry):
    return (e.psi_label[0], int(e.psi_label[1:]), e.case, e.k_multiset)


def _complete_lehmer_entry(entry: SearchEntry) -> SearchEntry:
    """Attach Dynkin type, modified characteristic factor and trace."""
    cert = entry.certificate
    pic = picard_from_certificate(cert)
    roots = enumerate_root_system(pic.gram_pos)
    rs = positive_simple_roots(roots, pic.gram_pos)
    result = bring_back(pic, rs)
    if not preserves_positive_roots(result, rs):
        raise AssertionError("modified matrix does not preserve the positive roots")
    return SearchEntry(entry.psi_label, entry.k_multiset, entry.case, entry.table,
                       entry.st_label, entry.verdict, cert,
                       dynkin=rs.dynkin, chi1_tilde=result.chi1_tilde,
                       trace_tilde=result.trace_tilde)


_Q_BY_DYNKIN = {
    ("E6", "E6"): "fixed_point",
    ("E8", "A2", "A2"): "e8a2a2",
    ("D10",): "d10",
    ("A2",): "a2",
}


def _worker_lehmer_a(args):
    i, kset = args
    R = salem_trace_deg11(i)
    Phi = lehmer_trace() * ct_product(kset)
    phi, psi = pair_from_trace(Phi, R, "even")
    a_roots = isolate_with_known_factors(
        [(lehmer_trace(), 1)] + [(cyclotomic_trace(k), 1) for k in kset])
    cert = k3_certificate(phi, psi, "A", a_roots=a_roots,
                          b_roots=list(isolated_roots_shared(R)))
    if cert is None or cert.projective:
        return None
    if cert.chi0 != lehmer():
        return None  # special eigenvalue not conjugate to Lehmer's number
    tau = cert.special_trace.retargeted(lehmer_trace())
    entry = SearchEntry(f"R{i}", tuple(sorted(kset)), cert.case, cert.table,
                        _root_label(tau, lehmer_trace(), "x"), "?", cert)
    entry = _complete_lehmer_entry(entry)
    q = builtin_q(_Q_BY_DYNKIN[entry.dynkin])
    verdict = siegel_test(tau, q).verdict
    return SearchEntry(entry.psi_label, entry.k_multiset, entry.case, entry.table,
                       entry.st_label, verdict, cert, entry.dynkin,
                       entry.chi1_tilde, entry.trace_tilde)


def _worker_lehmer_b(args):
    i, multiset = args
    Psi = lehmer_nf(i)
    phi, psi = pair_from_trace(ct_product(multiset), Psi, "even")
    cert = k3_certificate(phi, psi, "B", a_roots=_ct_factor_roots(multiset),
                          b_roots=list(isolated_roots_shared(Psi)))
    if cert is None or cert.projective:
        return None
    if cert.chi0 != lehmer():
        return None
    tau = cert.special_trace.retargeted(lehmer_trace())
    entry = SearchEntry(f"L{i}", tuple(sorted(multiset)), cert.case, cert.table,
                        _root_label(tau, lehmer_trace(), "x"), "?", cert)
    entry = _complete_lehmer_entry(entry)
    q = builtin_q(_Q_BY_DYNKIN[entry.dynkin])
    verdict = siegel_test(tau, q).verdict
    return SearchEntry(entry.psi_label, entry.k_multiset, entry.case, entry.table,
                       entry.st_label, verdict, cert, entry.dynkin,
                       entry.chi1_tilde, entry.trace_tilde)


def scan_lehmer(side: str, jobs: int | None = None) -> list[SearchEntry]:
    """Minimum-entropy scans: side A over (R_i, degree-5 CT sets), side B over (L_i, degree-10 CT products)."""
    if side == "A":
        candidates = []
        for i in range(1, 11):
            R = salem_trace_deg11(i)
            lt_ok = abs(resultant(lehmer_trace(), R)) == 1
            if not lt_ok:
                continue
            ok = _resultant_ok_map(R)
            for kset in enumerate_ct_products(5, "sets_only"):
                if all(ok[k] for k in kset):
                    candidates.append((i, kset))
        results = _run(_worker_lehmer_a, candidates, jobs)
    elif side == "B":
        candidates = []
        for i in range(1, 9):
            Psi = lehmer_nf(i)
            if not is_unramified(Psi):
                continue
            ok = {k: abs(resultant(cyclotomic_trace(k), Psi)) == 1 for k, _d in ct_catalog()}
            for multiset in enumerate_ct_products(10, "one_multiple_le3"):
                if all(ok[k] for k in set(multiset)):
                    candidates.append((i, multiset))
        results = _run(_worker_lehmer_b, candidates, jobs)
    else:
        raise ValueError("side must be 'A' or 'B'")
    entries = [e for e in results if e is not None]
    entries.sort(key=_entry_key)
    return entries


def _run(worker, candidates, jobs):
    if jobs is None:
        jobs = int(os.environ.get("HYPERK3_THREADS", "1") or "1")
    if jobs <= 1 or len(candidates) < 4:
        return [worker(c) for c in candidates]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, candidates, chunksize=16))
