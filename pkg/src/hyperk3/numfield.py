"""Units in Salem trace rings and the lattice-in-number-field comparison.

Given an even unimodular lattice with an isometry F whose characteristic
polynomial is an irreducible palindromic S(z) of degree 2N and a cyclic
vector r, the lattice is isomorphic to Z[z]/(S) with the trace form

    (g1, g2) = Tr^K_Q( U(w) g1(z) g2(1/z) / R'(w) ),   w = z + 1/z,

for a unique unit U(w) of Z[w]/(R).  The coefficients of U come out of a
triangular integer recurrence driven by the pairings (F^j r, r); the
converse direction rebuilds the reflection C in the vector 1 and recovers
the companion pair, hence the degree-halved polynomial of the second
generator.  Traces are computed as traces of exact multiplication matrices;
no number-field package is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .hyplattice import companion
from .polyring import IntPoly, pair_power, palindrome_class, trace_poly
from .polyring.roots import AlgebraicReal, isolated_roots_shared


def chebyshev_P(j: int) -> IntPoly:
    """P_j(z + 1/z) = z^j + z^-j: P_0 = 2, P_1 = w, P_(j+1) = w P_j - P_(j-1)."""
    return pair_power(j)


def _rem_top_coeff(g: IntPoly, R: IntPoly) -> int:
    """[g]_R: the coefficient of w^(N-1) in g mod R, guaranteed integral."""
    q, r = g.divmod_exact(R)
    n = R.degree
    return r.coeffs[n - 1] if r.degree == n - 1 else 0


@dataclass(frozen=True)
class UnitData:
    U: IntPoly
    R: IntPoly
    u: tuple[int, ...]          # u_1 .. u_N, leading coefficient first
    c_matrix: tuple             # c[j][k], 1-based triangular data as a tuple of rows


def unit_from_gram(gram_row, R: IntPoly) -> UnitData:
    """Solve the triangular recurrence for U(w) from (F^(j-1) r, r), j = 1..N.

    u_1 = (r, r)/2 and u_j = (F^(j-1) r, r) - sum_(k<j) c_jk u_k with
    c_jk = [P_(j-1) w^(N-k)]_R.  Raises if any u_j fails to be an integer
    (which would mean the Gram data does not come from a unimodular pair).
    """
    n = R.degree
    if not R.is_monic() or n < 1:
        raise ValueError("R must be monic of positive degree")
    if len(gram_row) != n:
        raise ValueError(f"need the pairings (F^j r, r) for j = 0..{n - 1}")
    if gram_row[0] % 2:
        raise ValueError("(r, r) must be even")
    c = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(1, n + 1):
        pj = chebyshev_P(j - 1)
        for k in range(1, n + 1):
            c[j][k] = _rem_top_coeff(pj * IntPoly.monomial(n - k, 1), R)
    u = [0] * (n + 1)
    u[1] = gram_row[0] // 2
    for j in range(2, n + 1):
        acc = gram_row[j - 1]
        for k in range(1, j):
            acc -= c[j][k] * u[k]
        if c[j][j] != 1:
            raise AssertionError("c_jj must be 1")
        u[j] = acc
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            if c[j][k] != 0:
                raise AssertionError("c_jk must vanish above the diagonal")
    U = IntPoly(tuple(u[n - i] for i in range(n)))  # u_1 w^(N-1) + ... + u_N
    return UnitData(U, R, tuple(u[1:]), tuple(tuple(row[1:]) for row in c[1:]))


def multiplication_matrix(g: IntPoly, modulus: IntPoly):
    """Matrix of multiplication by g on the power basis of Z[x]/(modulus)."""
    n = modulus.degree
    cols = []
    for i in range(n):
        _, r = (g * IntPoly.monomial(i, 1)).divmod_exact(modulus)
        col = list(r.coeffs) + [0] * (n - len(r.coeffs))
        cols.append(col)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def verify_unit(U: IntPoly, R: IntPoly, tau: AlgebraicReal | None = None):
    """Unit check plus, optionally, the compatibility condition at tau.

    Returns (ok, reason): det of multiplication by U mod R must be +-1; when
    tau is given, U(tau) R'(tau) > 0 must hold and tau must be the only root
    of R in (-2, 2) with that sign.
    """
    if U.degree >= R.degree:
        return False, "deg U must be below deg R"
    if U.is_zero():
        return False, "U = 0 is not a unit"
    det = linalg.bareiss_det(multiplication_matrix(U, R))
    if abs(det) != 1:
        return False, f"multiplication by U has determinant {det}"
    if tau is not None:
        rp = R.derivative()
        hits = []
        for root in isolated_roots_shared(R):
            if not (-2 < root < 2):
                continue
            if root.sign_of(U) * root.sign_of(rp) > 0:
                hits.append(root)
        if len(hits) != 1:
            return False, f"{len(hits)} roots satisfy U(t) R'(t) > 0 in (-2, 2)"
        if not hits[0] == tau:
            return False, "the positive-sign root differs from tau"
    return True, None


def trace_form_gram(U: IntPoly, S: IntPoly):
    """Gram of the basis 1, z, ..., z^(2N-1) of Z[z]/(S) under the trace form.

    (z^i, z^j) = Tr( multiplication by U(w) z^(i-j) / R'(w) mod S ), which
    depends only on i - j; computed exactly over Q and returned as integers.
    """
    if palindrome_class(S) != "palindromic" or S.degree % 2:
        raise ValueError("S must be palindromic of even degree")
    if abs(S.constant()) != 1:
        raise ValueError("S must have unit constant term")
    n = S.degree
    R = trace_poly(S)
    w_in_z = _w_mod_s(S)
    u_z = _eval_poly_mod(U, w_in_z, S)
    rp_z = _eval_poly_mod(R.derivative(), w_in_z, S)
    base = _frac_mat_mul(
        _to_frac(multiplication_matrix(u_z, S)),
        linalg.mat_inverse(_to_frac_sq(multiplication_matrix(rp_z, S))),
    )
    z_mat = companion(S)
    z_inv = linalg.mat_inverse(z_mat)
    traces = {}
    cur = [row[:] for row in base]
    for k in range(n):
        traces[k] = sum(cur[i][i] for i in range(n))
        cur = _frac_mat_mul(cur, _to_frac(z_mat))
    cur = _frac_mat_mul(base, _to_frac(z_inv))
    for k in range(1, n):
        traces[-k] = sum(cur[i][i] for i in range(n))
        cur = _frac_mat_mul(cur, _to_frac(z_inv))
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = traces[i - j]
            if v.denominator != 1:
                raise AssertionError("trace form produced a non-integer")
            out[i][j] = int(v)
    for k in range(1, n):
        if out[0][k] != out[k][0]:
            raise AssertionError("trace form is not symmetric")
    return out


def _w_mod_s(S: IntPoly) -> IntPoly:
    """z + 1/z reduced mod S: 1/z = -(S(z) - S(0)) / (z S(0)) as a polynomial."""
    s0 = S.constant()
    k = IntPoly(S.coeffs[1:])  # (S - S(0)) / z
    inv_z = IntPoly(tuple(-s0 * c for c in k.coeffs))  # s0^2 = 1
    return IntPoly.variable() + inv_z


def _eval_poly_mod(p: IntPoly, x: IntPoly, modulus: IntPoly) -> IntPoly:
    acc = IntPoly.zero()
    for c in reversed(p.coeffs):
        acc = acc * x + c
        _, acc = acc.divmod_exact(modulus)
    return acc


def _to_frac(m):
    return [[Fraction(x) for x in row] for row in m]


def _to_frac_sq(m):
    return [[Fraction(x) for x in row] for row in m]


def _frac_mat_mul(a, b):
    return linalg.mat_mul(a, b)


def recover_phi(U: IntPoly, S: IntPoly) -> IntPoly:
    """Recover the degree-halved polynomial of the reflection partner.

    Builds the trace-form Gram of Z[z]/(S), forms the reflection C in the
    vector 1 (which needs (1,1) = +-2), sets A := M_z C and returns the
    degree-(N-1) polynomial Phi with char(A) = (z^2-1) z^(N-1) Phi(z+1/z).
    """
    gram = trace_form_gram(U, S)
    n = S.degree
    norm1 = gram[0][0]
    if norm1 not in (2, -2):
        raise ValueError(f"(1,1) = {norm1}; the reflection construction needs +-2")
    # C v = v - 2 (v, 1)/(1,1) * 1
    c_mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for j in range(n):
        c_mat[0][j] -= 2 * gram[0][j] // norm1
    a_mat = linalg.mat_mul(companion(S), c_mat)
    phi = IntPoly(tuple(linalg.charpoly(a_mat)))
    if palindrome_class(phi) == "anti_palindromic":
        pass
    elif palindrome_class(IntPoly(tuple(-c for c in phi.coeffs))) == "anti_palindromic":
        phi = -phi
    else:
        raise AssertionError("recovered characteristic polynomial is not anti-palindromic")
    core = phi.divexact(IntPoly((-1, 0, 1)))
    return trace_poly(core)
