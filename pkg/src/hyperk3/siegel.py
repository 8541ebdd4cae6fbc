"""Siegel-disk versus hyperbolic classification of fixed points.

The criterion: for a special trace tau in (-2, 2) conjugate to a Salem
number, with q the rational function expressing the squared eigenvalue sum
(alpha + 1/alpha)^2 of the tangent map at the fixed point (or 3-cycle), the
point is the center of a Siegel disk when 0 <= q(tau) <= 4 and some
conjugate tau' in (-2, 2) has q(tau') > 4; it is hyperbolic when q(tau) > 4.

Four shapes of q cover the constructions here: the transverse fixed point
q = (w+1)^2/(w+2), and the three-cycle variants attached to the
E8+A2+A2, D10 and A2 exceptional sets.  All sign decisions are exact:
degeneracy (q(tau) in {0, 4}) is ruled out by resultants before any interval
refinement happens, and boundary cases come back as 'indeterminate'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import (
    IntPoly,
    cyclotomic,
    cyclotomic_trace,
    isolated_roots_shared,
    lehmer,
    lehmer_trace,
    poly_gcd,
    salem_trace_mt,
    salem_trace_nt,
)
from .polyring.roots import AlgebraicReal

W = IntPoly.variable()

Q_LABELS = ("fixed_point", "e8a2a2", "d10", "a2")


@dataclass(frozen=True)
class QFunction:
    label: str
    numerator: IntPoly
    denominator: IntPoly


def builtin_q(label: str) -> QFunction:
    """The catalogued q(w) for a given exceptional-set shape."""
    if label == "fixed_point":
        num = (W + 1) ** 2
        den = W + 2
    elif label == "e8a2a2":
        cube = IntPoly((0, -3, 0, 1))  # w^3 - 3w
        mt = salem_trace_mt().compose(cube)
        lt = lehmer_trace().compose(cube)
        num = (W + 2) * (W - 1) ** 2 * mt * mt
        den = lt * lt
    elif label == "d10":
        cube = IntPoly((0, -3, 0, 1))
        nt = salem_trace_nt().compose(cube)
        lt = lehmer_trace().compose(cube)
        num = (W + 2) * (W - 1) ** 2 * nt * nt
        den = lt * lt
    elif label == "a2":
        num = (W * W - 3) ** 2
        den = W + 2
    else:
        raise ValueError(f"unknown q label {label!r}; expected one of {Q_LABELS}")
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = num.divexact(g)
        den = den.divexact(g)
    return QFunction(label, num, den)


@dataclass(frozen=True)
class SiegelVerdict:
    verdict: str                 # 'S' | 'H' | 'indeterminate'
    tau: AlgebraicReal
    witness: AlgebraicReal | None  # conjugate with q > 4 for 'S', tau itself for 'H'


def _sign_q_minus(tau: AlgebraicReal, q: QFunction, c: int) -> int:
    """Exact sign of q(tau) - c, assuming the denominator is positive at tau."""
    p = q.numerator - IntPoly.const(c) * q.denominator
    den_sign = tau.sign_of(q.denominator)
    if den_sign == 0:
        raise ZeroDivisionError("q has a pole at tau")
    return tau.sign_of(p) * den_sign


def _is_salem_trace_shape(p: IntPoly) -> bool:
    """Squarefree with all roots real, exactly one above 2, the rest in (-2, 2)."""
    roots = isolated_roots_shared(p)
    if sum(r.multiplicity for r in roots) != p.degree:
        return False
    if any(r.multiplicity != 1 for r in roots):
        return False
    above = [r for r in roots if r > 2]
    return len(above) == 1 and all(-2 < r < 2 for r in roots if r is not above[0])


def siegel_test(tau: AlgebraicReal, q: QFunction) -> SiegelVerdict:
    """Apply the Siegel/hyperbolic criterion at tau with the given q.

    Preconditions checked exactly: tau's defining polynomial contains a
    Salem-trace factor through tau (so tau is conjugate to a Salem number),
    and q(tau) is not 0 or 4 (else the verdict is 'indeterminate').
    """
    minimal = _factor_through(tau)
    if not _is_salem_trace_shape(minimal):
        raise ValueError("tau must be a root of a Salem trace polynomial")
    if not (-2 < tau < 2):
        raise ValueError("tau must lie in (-2, 2)")
    if tau.sign_of(q.denominator) == 0:
        raise ZeroDivisionError("q has a pole at tau")
    s0 = _sign_q_minus(tau, q, 0)
    s4 = _sign_q_minus(tau, q, 4)
    if s0 == 0 or s4 == 0:
        return SiegelVerdict("indeterminate", tau, None)
    if s4 > 0:
        return SiegelVerdict("H", tau, tau)
    if s0 < 0:
        # q(tau) < 0 falls outside the criterion's hypotheses
        return SiegelVerdict("indeterminate", tau, None)
    for conj in isolated_roots_shared(minimal):
        if conj == tau or not (-2 < conj < 2):
            continue
        if conj.sign_of(q.denominator) != 0 and _sign_q_minus(conj, q, 4) > 0:
            return SiegelVerdict("S", tau, conj)
    return SiegelVerdict("indeterminate", tau, None)


def _factor_through(tau: AlgebraicReal) -> IntPoly:
    """The squarefree part of tau's defining polynomial (conjugate set carrier)."""
    return tau.minpoly


TAU0 = AlgebraicReal(IntPoly((-7, -2, 1)), (Fraction(-2), Fraction(0)))  # 1 - 2 sqrt 2


def threshold_classify_deg22(tau: AlgebraicReal) -> str:
    """Shortcut for degree-11 Salem traces: S iff tau > 1 - 2 sqrt(2).

    Equivalent to siegel_test with the fixed-point q, whose value crosses 4
    exactly at tau0 on (-2, 2); the agreement is asserted.
    """
    minimal = _factor_through(tau)
    if minimal.degree != 11 or not _is_salem_trace_shape(minimal):
        raise ValueError("tau must be a root in (-2,2) of a degree-11 Salem trace polynomial")
    if not (-2 < tau < 2):
        raise ValueError("tau must lie in (-2, 2)")
    if tau == TAU0:
        return "indeterminate"
    if tau > TAU0:
        witness = any(conj < TAU0 and -2 < conj
                      for conj in isolated_roots_shared(minimal) if not conj == tau)
        out = "S" if witness else "indeterminate"
    else:
        out = "H"
    full = siegel_test(tau, builtin_q("fixed_point"))
    if full.verdict != out:
        raise AssertionError("threshold shortcut disagrees with the full Siegel test")
    return out


def verify_D_identity() -> bool:
    """The closed form of the holomorphic fixed-point sum.

    D(z) := (1+z) - [ sum_{j=1..4} z/(1-(z^-j+z^(j+1))+z)
                    + sum_{j=1,2} z/(1-(z^-j+z^(j+1))+z)
                    + z/(1-(z^-1+z^2)+z) + z(z+1)/(z-1)^2 ]
    equals L(z) / ((z+1) C_1(z) C_3(z) C_5(z)) with C_1 = (z-1)^2, and in
    trace form z * LT(w) / ((z+1) CT_1(w) CT_3(w) CT_5(w)) with w = z + 1/z.
    Returns True when both identities hold as exact rational functions.
    """
    lhs = _RatZ.of(IntPoly((1, 1)))
    total = _RatZ.zero()
    for j in list(range(1, 5)) + [1, 2] + [1]:
        # z / (1 - (z^-j + z^(j+1)) + z): clear z^j from the denominator
        num = IntPoly.monomial(j + 1, 1)
        den = (IntPoly.monomial(j, 1) + IntPoly.monomial(j + 1, 1)
               - IntPoly.one() - IntPoly.monomial(2 * j + 1, 1))
        total = total + _RatZ(num, den)
    total = total + _RatZ(IntPoly((0, 1, 1)), IntPoly((1, -2, 1)))  # z(z+1)/(z-1)^2
    d = lhs - total
    closed = _RatZ(lehmer(),
                   IntPoly((1, 1)) * cyclotomic(1, "squared")
                   * cyclotomic(3) * cyclotomic(5))
    if not d.equals(closed):
        return False
    # w-form: substitute w = (z^2+1)/z into z LT(w) / ((z+1) CT_1 CT_3 CT_5)
    zz = _RatZ(IntPoly((1, 0, 1)), IntPoly((0, 1)))
    num_w = _RatZ.of(IntPoly((0, 1))) * _rat_compose(lehmer_trace(), zz)
    den_w = (_RatZ.of(IntPoly((1, 1)))
             * _rat_compose(cyclotomic_trace(1), zz) * _rat_compose(cyclotomic_trace(3), zz)
             * _rat_compose(cyclotomic_trace(5), zz))
    w_form = num_w / den_w
    return w_form.equals(closed)


class _RatZ:
    """Minimal exact rational-function arithmetic over Z[z]."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly):
        if den.is_zero():
            raise ZeroDivisionError
        g = poly_gcd(num, den) if not num.is_zero() else den
        if g.degree > 0 or abs(g.constant()) > 1:
            num = num.divexact(g) if not num.is_zero() else num
            den = den.divexact(g)
        if den.leading() < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @staticmethod
    def of(p: IntPoly) -> "_RatZ":
        return _RatZ(p, IntPoly.one())

    @staticmethod
    def zero() -> "_RatZ":
        return _RatZ(IntPoly.zero(), IntPoly.one())

    def __add__(self, other):
        return _RatZ(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return _RatZ(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        return _RatZ(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        return _RatZ(self.num * other.den, self.den * other.num)

    def equals(self, other) -> bool:
        return self.num * other.den == other.num * self.den


def _rat_compose(p: IntPoly, x: _RatZ) -> _RatZ:
    out = _RatZ.zero()
    for c in reversed(p.coeffs):
        out = out * x + _RatZ.of(IntPoly.const(c))
    return out
