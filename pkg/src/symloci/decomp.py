"""SL2-equivariant decomposition of map pairs into a form pair.

A degree-d pair (F1, F2) is equivalent, as an SL2 representation, to a
pair (H, J) where H = dF1/dX + dF2/dY is the divergence form of degree
d-1 and J = Y F1 - X F2 is the fixed-point form of degree d+1.  The
inverse is (X H + dJ/dY, Y H - dJ/dX) / (d+1).  The multiplicative group
acts by t.(H, J) = (tH, J/t), commuting with the substitution action, and
a scaled pair comes from a genuine degree-d map exactly when no multiple
zero of J is also a zero of H.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .forms import (
    BinaryForm,
    DegreeMismatch,
    RationalMap,
    form_gcd,
    partial_derivatives,
)

_C0 = Cyclotomic.rational(0)


class NotAnEigenvector(ValueError):
    """The form is not an eigenvector of the diagonal torus action."""


class ForbiddenMultipleZero(ValueError):
    """0 or infinity occurs as a multiple zero where that is not allowed."""


class FormPair:
    """(H, J) with deg H = d-1 and deg J = d+1, not both zero."""

    __slots__ = ("d", "H", "J")

    def __init__(self, d: int, H: BinaryForm, J: BinaryForm):
        if H.degree != d - 1 or J.degree != d + 1:
            raise DegreeMismatch("component degrees must be d-1 and d+1")
        if H.is_zero() and J.is_zero():
            raise ValueError("the zero pair is excluded")
        self.d = d
        self.H = H
        self.J = J

    def __eq__(self, other):
        return (
            isinstance(other, FormPair)
            and self.d == other.d
            and self.H == other.H
            and self.J == other.J
        )

    def proportional_to(self, other: FormPair) -> bool:
        if self.d != other.d:
            return False
        v = list(self.H.coeffs) + list(self.J.coeffs)
        w = list(other.H.coeffs) + list(other.J.coeffs)
        i = next((k for k, c in enumerate(v) if c), None)
        j = next((k for k, c in enumerate(w) if c), None)
        if i != j:
            return False
        return all(v[k] * w[i] == w[k] * v[i] for k in range(len(v)))

    def to_json(self) -> dict:
        return {"d": self.d, "H": self.H.to_json(), "J": self.J.to_json()}

    @classmethod
    def from_json(cls, obj) -> FormPair:
        return cls(int(obj["d"]), BinaryForm.from_json(obj["H"]), BinaryForm.from_json(obj["J"]))

    def __repr__(self):
        return f"FormPair(d={self.d}, H={self.H!r}, J={self.J!r})"


def decompose(f1: BinaryForm, f2: BinaryForm) -> FormPair:
    """(divergence, fixed-point form) of a degree-d pair."""
    if f1.degree != f2.degree or f1.degree < 1:
        raise DegreeMismatch("decompose expects two forms of equal degree >= 1")
    if f1.is_zero() and f2.is_zero():
        raise ValueError("the zero pair is not a map")
    d = f1.degree
    f1x, _ = partial_derivatives(f1) if not f1.is_zero() else (BinaryForm.zero(d - 1), None)
    _, f2y = partial_derivatives(f2) if not f2.is_zero() else (None, BinaryForm.zero(d - 1))
    h = f1x + f2y
    yf1 = BinaryForm(d + 1, [_C0] + list(f1.coeffs))
    xf2 = BinaryForm(d + 1, list(f2.coeffs) + [_C0])
    return FormPair(d, h, yf1 - xf2)


def decompose_map(phi: RationalMap) -> FormPair:
    return decompose(phi.F, phi.G)


def recompose(pair: FormPair) -> tuple[BinaryForm, BinaryForm]:
    """Inverse of decompose: (X H + dJ/dY, Y H - dJ/dX) / (d+1), exactly."""
    d = pair.d
    h, j = pair.H, pair.J
    xh = BinaryForm(d, list(h.coeffs) + [_C0])
    yh = BinaryForm(d, [_C0] + list(h.coeffs))
    if j.is_zero():
        jx = jy = BinaryForm.zero(d)
    else:
        jx, jy = partial_derivatives(j)
    scale = Cyclotomic.rational(Fraction(1, d + 1))
    return (xh + jy) * scale, (yh - jx) * scale


def recompose_map(pair: FormPair) -> RationalMap:
    f, g = recompose(pair)
    return RationalMap(f, g)


def gm_action(t: Cyclotomic, pair: FormPair) -> FormPair:
    """t . (H, J) = (t H, J / t)."""
    t = t if isinstance(t, Cyclotomic) else Cyclotomic.rational(t)
    if not t:
        raise ValueError("the torus parameter must be nonzero")
    return FormPair(pair.d, pair.H * t, pair.J * t.inverse())


def multiple_zero_locus(j: BinaryForm) -> BinaryForm:
    """Form whose roots are the multiple zeros of j (common zeros of the
    partials; valid in characteristic 0 by the Euler identity)."""
    jx, jy = partial_derivatives(j)
    if jx.is_zero() and jy.is_zero():
        return j.normalized()
    if jx.is_zero():
        return jy.normalized()
    if jy.is_zero():
        return jx.normalized()
    return form_gcd(jx, jy)


def meets_ratd(pair: FormPair) -> bool:
    """Does the torus orbit of [(H, J)] contain the image of a genuine
    degree-d map?  Exactly: no multiple zero of J may be a zero of H."""
    h, j = pair.H, pair.J
    if j.is_zero():
        # recompose gives (XH, YH)/(d+1), sharing the factor H for d >= 2
        return pair.d == 1 and not h.is_zero()
    if j.degree >= 1:
        mz = multiple_zero_locus(j)
    else:
        mz = BinaryForm(0, [Cyclotomic.rational(1)])
    if h.is_zero():
        return mz.degree == 0
    if mz.degree == 0:
        return True
    return form_gcd(mz, h).degree == 0


@dataclass
class EigenformReport:
    """Outcome of classifying a torus eigenform with simple 0/infinity zeros."""

    k: int
    m: int
    divisibility: str  # one of "m|k", "m|k-1", "m|k-2"
    eigenvalue: Cyclotomic

    def to_json(self):
        return {
            "k": self.k,
            "m": self.m,
            "divisibility": self.divisibility,
            "eigenvalue": self.eigenvalue.to_json(),
        }


def diagonal_eigenvalue(f: BinaryForm, eta: Cyclotomic) -> Cyclotomic:
    """Eigenvalue of F under X -> eta X, Y -> Y/eta; raises if F is not an
    eigenvector."""
    if f.is_zero():
        raise NotAnEigenvector("the zero form is not an eigenform here")
    k = f.degree
    lam = None
    eta_inv = eta.inverse()
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        val = eta ** (k - i) * eta_inv**i
        if lam is None:
            lam = val
        elif lam != val:
            raise NotAnEigenvector("coefficients force two different eigenvalues")
    return lam


def eigenform_classify(f: BinaryForm, m: int, eta: Cyclotomic) -> EigenformReport:
    """Classify an eigenform of the diagonal action by its values at 0 and
    infinity; eta must be a primitive 2m-th root of unity.

    The four cells:
      F(0) != 0, F(inf) != 0:  m | k,   lambda = (-1)^(k/m)
      F(0)  = 0, F(inf) != 0:  m | k-1, lambda = (-1)^((k-1)/m) eta
      F(0) != 0, F(inf)  = 0:  m | k-1, lambda = (-1)^((k-1)/m) / eta
      F(0)  = 0, F(inf)  = 0:  m | k-2, lambda = (-1)^((k-2)/m)
    """
    if eta.ru_order() != 2 * m:
        raise ValueError("eta must be a primitive 2m-th root of unity")
    lam = diagonal_eigenvalue(f, eta)
    k = f.degree
    c = f.coeffs
    at_zero = c[k]  # F(0,1)
    at_inf = c[0]  # F(1,0)
    if not at_zero and k >= 2 and not c[k - 1]:
        raise ForbiddenMultipleZero("0 is a multiple zero")
    if not at_inf and k >= 2 and not c[1]:
        raise ForbiddenMultipleZero("infinity is a multiple zero")
    minus_one = Cyclotomic.rational(-1)
    if at_zero and at_inf:
        if k % m:
            raise NotAnEigenvector("support contradicts the divisibility m|k")
        expected = minus_one ** (k // m)
        div = "m|k"
    elif not at_zero and at_inf:
        if (k - 1) % m:
            raise NotAnEigenvector("support contradicts m|k-1")
        expected = minus_one ** ((k - 1) // m) * eta
        div = "m|k-1"
    elif at_zero and not at_inf:
        if (k - 1) % m:
            raise NotAnEigenvector("support contradicts m|k-1")
        expected = minus_one ** ((k - 1) // m) * eta.inverse()
        div = "m|k-1"
    else:
        if (k - 2) % m:
            raise NotAnEigenvector("support contradicts m|k-2")
        expected = minus_one ** ((k - 2) // m)
        div = "m|k-2"
    assert lam == expected, "computed eigenvalue disagrees with the classification"
    return EigenformReport(k=k, m=m, divisibility=div, eigenvalue=lam)
