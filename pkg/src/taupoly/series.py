"""Truncated formal power series in z over rational-coefficient polynomials.

The series here verify generating-function identities by exact
coefficient comparison.  Closed forms involving division or square roots
are checked multiplicatively: denominators are cleared and square roots
squared, so every computation stays inside the polynomial coefficient
ring and no inversion of a series with non-invertible leading coefficient
is ever attempted.  Any mismatch in any coefficient at any order is a
hard failure; there are no tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import formulas, weyl
from .dynkin import DynkinDiagram
from .errors import InsufficientTerms
from .polynomials import RAT_ONE, RAT_T, Polynomial, RatPolynomial


class TruncatedSeries:
    """Power series in z with RatPolynomial coefficients, kept to order N.

    Operations on two series truncate to the smaller order.  Equality is
    exact coefficientwise equality at the same order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [c if isinstance(c, RatPolynomial) else RatPolynomial(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) < order + 1:
            coeffs = coeffs + [RatPolynomial()] * (order + 1 - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs[: order + 1]))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([RAT_ONE], order)

    @classmethod
    def z(cls, order: int) -> "TruncatedSeries":
        return cls([RatPolynomial(), RAT_ONE], order)

    @classmethod
    def from_polynomials(cls, polys, exponential: bool, order: int) -> "TruncatedSeries":
        """Series whose z^n coefficient is polys[n], divided by n! when
        exponential."""
        if len(polys) < order + 1:
            raise InsufficientTerms(
                f"need {order + 1} coefficient polynomials, got {len(polys)}"
            )
        out = []
        for n in range(order + 1):
            p = polys[n]
            if isinstance(p, RatPolynomial):
                rp = p
            elif isinstance(p, Polynomial):
                rp = RatPolynomial.from_polynomial(p)
            else:
                rp = RatPolynomial(p)
            if exponential:
                rp = rp * Fraction(1, factorial(n))
            out.append(rp)
        return cls(out, order)

    @classmethod
    def exp_of_zt(cls, scalar_t_coeff, order: int) -> "TruncatedSeries":
        """exp(lambda(t) * z) truncated: z^n coefficient lambda(t)^n / n!."""
        lam = (
            scalar_t_coeff
            if isinstance(scalar_t_coeff, RatPolynomial)
            else RatPolynomial.from_polynomial(scalar_t_coeff)
            if isinstance(scalar_t_coeff, Polynomial)
            else RatPolynomial(scalar_t_coeff)
        )
        out = [RAT_ONE]
        power = RAT_ONE
        for n in range(1, order + 1):
            power = power * lam
            out.append(power * Fraction(1, factorial(n)))
        return cls(out, order)

    # -- arithmetic -------------------------------------------------------

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise InsufficientTerms(f"series only known to order {self.order}")
        return TruncatedSeries(list(self.coeffs[: order + 1]), order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], order
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatPolynomial)):
            factor = other if isinstance(other, RatPolynomial) else RatPolynomial.constant(other)
            return TruncatedSeries([c * factor for c in self.coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [RatPolynomial() for _ in range(order + 1)]
        for i in range(order + 1):
            ci = self.coeffs[i]
            if not ci:
                continue
            for j in range(order + 1 - i):
                cj = other.coeffs[j]
                if cj:
                    out[i + j] = out[i + j] + ci * cj
        return TruncatedSeries(out, order)

    __rmul__ = __mul__

    def shift_z(self, k: int) -> "TruncatedSeries":
        """Multiply by z^k, truncating at the same order."""
        out = [RatPolynomial()] * k + list(self.coeffs[: self.order + 1 - k])
        return TruncatedSeries(out, self.order)

    def derivative_z(self) -> "TruncatedSeries":
        """Termwise z-derivative; the order drops by one."""
        if self.order < 1:
            raise InsufficientTerms("cannot differentiate an order-0 series")
        out = [self.coeffs[n] * n for n in range(1, self.order + 1)]
        return TruncatedSeries(out, self.order - 1)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def first_mismatch(self, other: "TruncatedSeries") -> int | None:
        """Smallest z-power where the two series differ, up to the common
        order; None if they agree."""
        order = min(self.order, other.order)
        for n in range(order + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"


# ---------------------------------------------------------------------------
# The polynomial families entering the generating functions
# ---------------------------------------------------------------------------


def eulerian_family(count: int) -> list[Polynomial]:
    """Descent polynomials for ranks -1, 0, 1, ... (rank -1 reads as rank 0),
    i.e. the n-th entry belongs to the symmetric group on n letters."""
    return [weyl.eulerian_poly(_a_or_empty(n - 1)) for n in range(count)]


def narayana_family(count: int) -> list[Polynomial]:
    return [weyl.narayana_poly(_a_or_empty(n - 1)) for n in range(count)]


def _a_or_empty(rank: int):
    from .dynkin import DiagramUnion

    if rank <= 0:
        return DiagramUnion()
    return DynkinDiagram("A", rank)


def ppa_dim_family(count: int) -> list[Polynomial]:
    """Dimension polynomials of the type A doubled-quiver algebras, rank
    n-1 at index n; the rank-0 entries are 0."""
    out = []
    for n in range(count):
        if n - 1 < 1:
            out.append(Polynomial())
        else:
            spec = formulas.AlgebraSpec(formulas.PREPROJECTIVE, DynkinDiagram("A", n - 1))
            out.append(formulas.d_polynomial(spec))
    return out


def path_dim_family(count: int) -> list[Polynomial]:
    out = []
    for n in range(count):
        if n - 1 < 1:
            out.append(Polynomial())
        else:
            spec = formulas.AlgebraSpec(formulas.PATH, DynkinDiagram("A", n - 1))
            out.append(formulas.d_polynomial(spec))
    return out


def eulerian_egf(order: int) -> TruncatedSeries:
    """Exponential generating function of the descent polynomials."""
    return TruncatedSeries.from_polynomials(eulerian_family(order + 1), True, order)


def narayana_ogf(order: int) -> TruncatedSeries:
    """Ordinary generating function of the Narayana polynomials."""
    return TruncatedSeries.from_polynomials(narayana_family(order + 1), False, order)


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one exact identity check."""

    name: str
    order: int
    passed: bool
    mismatch_power: int | None = None
    expected: str | None = None
    actual: str | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out = {"identity": self.name, "order": self.order, "pass": self.passed}
        if not self.passed:
            out["first_failing_power"] = self.mismatch_power
            out["expected"] = self.expected
            out["actual"] = self.actual
        return out


def _report(name: str, order: int, lhs: TruncatedSeries, rhs: TruncatedSeries) -> IdentityReport:
    common = min(lhs.order, rhs.order)
    lhs, rhs = lhs.truncate(common), rhs.truncate(common)
    power = lhs.first_mismatch(rhs)
    if power is None:
        return IdentityReport(name, common, True)
    return IdentityReport(
        name,
        common,
        False,
        mismatch_power=power,
        expected=str(rhs.coeffs[power]),
        actual=str(lhs.coeffs[power]),
    )


def verify_identity_euler_ode(order: int) -> IdentityReport:
    """d/dz S = t S^2 + (1 - t) S for the descent-polynomial EGF."""
    s = eulerian_egf(order)
    lhs = s.derivative_z()
    one_minus_t = RatPolynomial((1, -1))
    rhs = (s * s) * RAT_T + s * one_minus_t
    return _report("euler-ode", order, lhs, rhs.truncate(order - 1))


def verify_euler_closed_form(order: int) -> IdentityReport:
    """S * (t - exp(z(t-1))) = t - 1, the closed form with denominator cleared."""
    s = eulerian_egf(order)
    t_minus_e = TruncatedSeries.one(order) * RAT_T - TruncatedSeries.exp_of_zt(
        RatPolynomial((-1, 1)), order
    )
    lhs = s * t_minus_e
    rhs = TruncatedSeries.one(order) * RatPolynomial((-1, 1))
    return _report("euler-closed-form", order, lhs, rhs)


def verify_identity_narayana_quadratic(order: int) -> IdentityReport:
    """t z C^2 - (1 + z(t-1)) C + 1 = 0 for the Narayana OGF."""
    c = narayana_ogf(order)
    tzc2 = ((c * c) * RAT_T).shift_z(1)
    one_plus = TruncatedSeries.one(order) + (TruncatedSeries.one(order) * RatPolynomial((-1, 1))).shift_z(1)
    lhs = tzc2 - one_plus * c + TruncatedSeries.one(order)
    return _report("narayana-quadratic", order, lhs, TruncatedSeries.zero(order))


def verify_narayana_sqrt_reconstruction(order: int) -> IdentityReport:
    """(1 + z(t-1) - 2tzC)^2 = 1 - 2z(t+1) + z^2 (t-1)^2.

    The left side reconstructs the square root appearing in the closed
    form of the Narayana OGF (the power-series branch of the quadratic),
    so squaring it must recover the radicand.
    """
    c = narayana_ogf(order)
    one = TruncatedSeries.one(order)
    t_minus_1 = RatPolynomial((-1, 1))
    f = one + (one * t_minus_1).shift_z(1) - (c * RAT_T * 2).shift_z(1)
    lhs = f * f
    rhs = (
        one
        - (one * RatPolynomial((2, 2))).shift_z(1)
        + (one * (t_minus_1 * t_minus_1)).shift_z(2)
    )
    return _report("narayana-sqrt-reconstruction", order, lhs, rhs)


def ppa_dim_egf(order: int, *, shift: int = 0) -> TruncatedSeries:
    """EGF of the type A doubled-quiver dimension polynomials, with an
    optional substitution t -> t + shift applied to each term."""
    polys = [p.shifted(shift) for p in ppa_dim_family(order + 1)]
    return TruncatedSeries.from_polynomials(polys, True, order)


def path_dim_ogf(order: int, *, shift: int = 0) -> TruncatedSeries:
    polys = [p.shifted(shift) for p in path_dim_family(order + 1)]
    return TruncatedSeries.from_polynomials(polys, False, order)


def verify_dpoly_genfun_ppa(order: int) -> IdentityReport:
    """Two checks on the doubled-quiver dimension EGF.

    With t -> t-1 it must equal (z^2/2) (dS/dz)^2; in the original
    variable the closed form is checked multiplicatively as
    D * 2 (t+1-e^{zt})^4 = z^2 t^4 e^{2zt}.
    """
    lhs = ppa_dim_egf(order, shift=-1)
    s = eulerian_egf(order)
    ds = s.derivative_z()
    # (ds*ds) is exact to order-1; prefixing two zeros realizes z^2*(ds)^2
    # exactly to the requested order
    sq = (ds * ds) * Fraction(1, 2)
    rhs = TruncatedSeries([RatPolynomial(), RatPolynomial()] + list(sq.coeffs[: order - 1]), order)
    first = _report("ppa-dim-egf-vs-eulerian", order, lhs, rhs)
    if not first.passed:
        return first
    dser = ppa_dim_egf(order)
    t_poly = RAT_T
    one_plus_t = RatPolynomial((1, 1))
    denom = TruncatedSeries.one(order) * one_plus_t - TruncatedSeries.exp_of_zt(t_poly, order)
    lhs2 = dser * 2 * denom * denom * denom * denom
    t4 = RatPolynomial((0, 0, 0, 0, 1))
    rhs2 = (TruncatedSeries.exp_of_zt(RatPolynomial((0, 2)), order) * t4).shift_z(2)
    second = _report("ppa-dim-egf-closed-form", order, lhs2, rhs2)
    if not second.passed:
        return second
    return IdentityReport("ppa-dim-egf", order, True)


def verify_dpoly_genfun_path(order: int) -> IdentityReport:
    """With t -> t-1 the path-family dimension OGF equals z^2 (dC/dz)^2."""
    lhs = path_dim_ogf(order, shift=-1)
    c = narayana_ogf(order)
    dc = c.derivative_z()
    sq = dc * dc
    rhs = TruncatedSeries([RatPolynomial(), RatPolynomial()] + list(sq.coeffs[: order - 1]), order)
    return _report("path-dim-ogf-vs-narayana", order, lhs, rhs)


def verify_ppa_closed_form_variants(order: int) -> IdentityReport:
    """The two published shapes of the doubled-quiver closed form agree:

    z^2 t^4 e^{2z(t+2)} (t+1-e^{zt})^4 = z^2 t^4 e^{2zt} (e^z(t+1)-e^{z(t+1)})^4,

    the cross-multiplied form of equality of the two quotients (they
    differ by e^{4z} in numerator and denominator).
    """
    t4 = RatPolynomial((0, 0, 0, 0, 1))
    one_plus_t = RatPolynomial((1, 1))
    a = TruncatedSeries.one(order) * one_plus_t - TruncatedSeries.exp_of_zt(RAT_T, order)
    lhs = (TruncatedSeries.exp_of_zt(RatPolynomial((4, 2)), order) * t4).shift_z(2)
    lhs = lhs * a * a * a * a
    b = TruncatedSeries.exp_of_zt(RatPolynomial((1,)), order) * one_plus_t - TruncatedSeries.exp_of_zt(
        one_plus_t, order
    )
    rhs = (TruncatedSeries.exp_of_zt(RatPolynomial((0, 2)), order) * t4).shift_z(2)
    rhs = rhs * b * b * b * b
    return _report("ppa-closed-form-variants", order, lhs, rhs)


DEFAULT_ORDER = 10

ALL_IDENTITIES = (
    verify_identity_euler_ode,
    verify_euler_closed_form,
    verify_identity_narayana_quadratic,
    verify_narayana_sqrt_reconstruction,
    verify_dpoly_genfun_ppa,
    verify_dpoly_genfun_path,
    verify_ppa_closed_form_variants,
)


def verify_all_identities(order: int = DEFAULT_ORDER) -> list[IdentityReport]:
    return [check(order) for check in ALL_IDENTITIES]
