"""Exact polynomial arithmetic over Q(sqrt(-c)).

Builds the monic shift-product polynomials whose values are the products
(n-k + sqrt(-c)) ... (n + sqrt(-c)), the forward-difference calculus on
them, and the unique degree-<=k Bezout cofactor alpha with

    alpha * P + conj(alpha) * conj(P) = 1.

Two independent constructions of alpha are kept side by side (a closed
product formula for the Newton coefficients, and the alternating-sum
definition); their exact agreement is the module's main correctness check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .ring import QuadRat, RingMismatchError

Scalar = int | Fraction | QuadRat


class PoleError(ZeroDivisionError):
    """A denominator factor vanished at the requested evaluation point."""


class NonCoprimeError(ValueError):
    """The two polynomials share a factor of degree >= 1."""


class CertificateError(RuntimeError):
    """A Bezout certificate invariant failed; indicates an implementation bug."""


def _zero_rat(c: int) -> QuadRat:
    return QuadRat(Fraction(0), Fraction(0), c)


def _const_rat(c: int, value: int | Fraction) -> QuadRat:
    return QuadRat(Fraction(value), Fraction(0), c)


@dataclass(frozen=True)
class QuadPoly:
    """Dense polynomial with QuadRat coefficients, ascending degree, trimmed."""

    c: int
    coeffs: tuple[QuadRat, ...]

    def __post_init__(self) -> None:
        for co in self.coeffs:
            if co.c != self.c:
                raise RingMismatchError(f"coefficient ring {co.c} != polynomial ring {self.c}")
        trimmed = list(self.coeffs)
        while trimmed and trimmed[-1].is_zero():
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> QuadRat:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: QuadPoly) -> QuadPoly:
        if self.c != other.c:
            raise RingMismatchError(f"ring parameters differ: {self.c} != {other.c}")
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, co in enumerate(b):
            out[i] = out[i] + co
        return QuadPoly(self.c, tuple(out))

    def __neg__(self) -> QuadPoly:
        return QuadPoly(self.c, tuple(-co for co in self.coeffs))

    def __sub__(self, other: QuadPoly) -> QuadPoly:
        return self + (-other)

    def __mul__(self, other: QuadPoly) -> QuadPoly:
        if self.c != other.c:
            raise RingMismatchError(f"ring parameters differ: {self.c} != {other.c}")
        if self.is_zero() or other.is_zero():
            return QuadPoly(self.c, ())
        out = [_zero_rat(self.c) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] = out[i + j] + ci * cj
        return QuadPoly(self.c, tuple(out))

    def scale(self, s: Scalar) -> QuadPoly:
        if not isinstance(s, QuadRat):
            s = _const_rat(self.c, s)
        return QuadPoly(self.c, tuple(co * s for co in self.coeffs))

    def conj(self) -> QuadPoly:
        """Conjugate every coefficient; a ring morphism on polynomials."""
        return QuadPoly(self.c, tuple(co.conj() for co in self.coeffs))

    def eval(self, z: QuadRat) -> QuadRat:
        """Horner evaluation, exact."""
        acc = _zero_rat(self.c)
        for co in reversed(self.coeffs):
            acc = acc * z + co
        return acc

    def eval_int(self, n: int) -> QuadRat:
        return self.eval(_const_rat(self.c, n))

    def shift(self, h: int) -> QuadPoly:
        """Compose with X + h."""
        x_plus_h = QuadPoly(self.c, (_const_rat(self.c, h), _const_rat(self.c, 1)))
        acc = QuadPoly(self.c, ())
        for co in reversed(self.coeffs):
            acc = acc * x_plus_h + QuadPoly(self.c, (co,))
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"({co})X^{i}" for i, co in enumerate(self.coeffs))


def zero_poly(c: int) -> QuadPoly:
    return QuadPoly(c, ())


def one_poly(c: int) -> QuadPoly:
    return QuadPoly(c, (_const_rat(c, 1),))


def const_poly(c: int, value: int | Fraction | QuadRat) -> QuadPoly:
    if not isinstance(value, QuadRat):
        value = _const_rat(c, value)
    return QuadPoly(c, (value,))


def x_poly(c: int) -> QuadPoly:
    return QuadPoly(c, (_zero_rat(c), _const_rat(c, 1)))


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial with integer coefficients, ascending degree, trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        trimmed = list(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, co in enumerate(b):
            out[i] += co
        return IntPoly(tuple(out))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-co for co in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return IntPoly(tuple(out))

    def scale(self, s: int) -> IntPoly:
        return IntPoly(tuple(co * s for co in self.coeffs))

    def eval_int(self, n: int) -> int:
        acc = 0
        for co in reversed(self.coeffs):
            acc = acc * n + co
        return acc

    @classmethod
    def const(cls, value: int) -> IntPoly:
        return cls((value,))


def shift_product_poly(c: int, k: int) -> QuadPoly:
    """The monic degree-(k+1) polynomial (X + s)(X - 1 + s)...(X - k + s), s = sqrt(-c).

    Its value at an integer n > k is the product
    (n-k + sqrt(-c)) (n-k+1 + sqrt(-c)) ... (n + sqrt(-c)).
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    acc = one_poly(c)
    for j in range(k + 1):
        factor = QuadPoly(c, (QuadRat(Fraction(-j), Fraction(1), c), _const_rat(c, 1)))
        acc = acc * factor
    return acc


def split_parts(p: QuadPoly) -> tuple[IntPoly, IntPoly]:
    """Split p with Z[sqrt(-c)] coefficients as (A, B) with p = A + B*sqrt(-c)."""
    a_parts = []
    b_parts = []
    for i, co in enumerate(p.coeffs):
        if not co.is_integral():
            raise ValueError(f"coefficient of X^{i} is not in Z[sqrt(-c)]: {co}")
        a_parts.append(int(co.a))
        b_parts.append(int(co.b))
    return IntPoly(tuple(a_parts)), IntPoly(tuple(b_parts))


def recombine_parts(c: int, a: IntPoly, b: IntPoly) -> QuadPoly:
    """Inverse of split_parts: A + B*sqrt(-c) as a QuadPoly."""
    size = max(len(a.coeffs), len(b.coeffs))
    coeffs = []
    for i in range(size):
        ai = a.coeffs[i] if i < len(a.coeffs) else 0
        bi = b.coeffs[i] if i < len(b.coeffs) else 0
        coeffs.append(QuadRat(Fraction(ai), Fraction(bi), c))
    return QuadPoly(c, tuple(coeffs))


def forward_difference(p: QuadPoly, order: int) -> QuadPoly:
    """Apply the forward-difference operator `order` times.

    Computed along two independent routes that must agree exactly: n-fold
    repetition of p(X+1) - p(X), and the alternating binomial sum over
    shifts sum_m (-1)^(order-m) C(order, m) p(X+m).  Disagreement would
    mean a broken shift or arithmetic, so it raises immediately.
    """
    if order < 0:
        raise ValueError(f"need order >= 0, got {order}")
    repeated = p
    for _ in range(order):
        repeated = repeated.shift(1) - repeated
    binomial = zero_poly(p.c)
    for m in range(order + 1):
        sign = -1 if (order - m) % 2 else 1
        binomial = binomial + p.shift(m).scale(sign * comb(order, m))
    if repeated != binomial:
        raise AssertionError("forward-difference routes disagree; arithmetic bug")
    return repeated


def newton_basis(c: int, ell: int) -> QuadPoly:
    """(X - s)(X - s - 1)...(X - s - ell + 1) with s = sqrt(-c); 1 when ell = 0."""
    acc = one_poly(c)
    for j in range(ell):
        factor = QuadPoly(c, (QuadRat(Fraction(-j), Fraction(-1), c), _const_rat(c, 1)))
        acc = acc * factor
    return acc


def falling(x: QuadRat, n: int) -> QuadRat:
    """Falling factorial x (x-1) ... (x-n+1) in Q(sqrt(-c)); empty product is 1."""
    acc = _const_rat(x.c, 1)
    for t in range(n):
        acc = acc * QuadRat(x.a - t, x.b, x.c)
    return acc


def reciprocal_difference(c: int, k: int, ell: int, z: QuadRat) -> QuadRat:
    """The scaled ell-th forward difference of w -> 1/P(w + sqrt(-c)) at z.

    Evaluates (1/ell!) sum_j (-1)^(ell-j) C(ell, j) / P(z + j + sqrt(-c))
    where P = shift_product_poly(c, k).  Exact; raises PoleError when an
    evaluation point annihilates P.
    """
    if ell > k:
        raise ValueError(f"need ell <= k, got ell={ell}, k={k}")
    if z.c != c:
        raise RingMismatchError(f"z lives in ring {z.c}, expected {c}")
    p = shift_product_poly(c, k)
    total = _zero_rat(c)
    for j in range(ell + 1):
        w = QuadRat(z.a + j, z.b + 1, c)
        val = p.eval(w)
        if val.is_zero():
            raise PoleError(f"P vanishes at z + {j} + sqrt(-{c})")
        sign = -1 if (ell - j) % 2 else 1
        total = total + val.inverse() * _const_rat(c, sign * comb(ell, j))
    return total * _const_rat(c, Fraction(1, factorial(ell)))


def reciprocal_difference_closed(c: int, k: int, ell: int, z: QuadRat) -> QuadRat:
    """Closed product form of reciprocal_difference; equal on the common domain.

    (-1)^(k+ell) / (z + 2s) * C(k+ell, ell) / ((k - 2s - z)^falling_k
    (ell + 2s + z)^falling_ell) with s = sqrt(-c).  Each denominator factor
    gets an exact zero test before inversion.
    """
    if ell > k:
        raise ValueError(f"need ell <= k, got ell={ell}, k={k}")
    if z.c != c:
        raise RingMismatchError(f"z lives in ring {z.c}, expected {c}")
    factors = [QuadRat(z.a, z.b + 2, c)]
    for t in range(k):
        factors.append(QuadRat(Fraction(k - t) - z.a, Fraction(-2) - z.b, c))
    for t in range(ell):
        factors.append(QuadRat(Fraction(ell - t) + z.a, Fraction(2) + z.b, c))
    den = _const_rat(c, 1)
    for f in factors:
        if f.is_zero():
            raise PoleError(f"denominator factor vanishes at z = {z}")
        den = den * f
    sign = -1 if (k + ell) % 2 else 1
    return den.inverse() * _const_rat(c, sign * comb(k + ell, ell))


def newton_coeff(c: int, k: int, ell: int) -> QuadRat:
    """Newton forward-difference coefficient of the Bezout cofactor (sum form)."""
    return reciprocal_difference(c, k, ell, _zero_rat(c))


def newton_coeff_closed(c: int, k: int, ell: int) -> QuadRat:
    """Same coefficient from the closed product formula."""
    return reciprocal_difference_closed(c, k, ell, _zero_rat(c))


def bezout_poly(c: int, k: int) -> QuadPoly:
    """The unique degree-<=k cofactor alpha with alpha*P + conj(alpha)*conj(P) = 1.

    Assembled in the shifted falling-factorial basis from the closed-form
    Newton coefficients.
    """
    acc = zero_poly(c)
    for ell in range(k + 1):
        acc = acc + newton_basis(c, ell).scale(newton_coeff_closed(c, k, ell))
    return acc


def bezout_poly_interp(c: int, k: int) -> QuadPoly:
    """Same cofactor from the alternating-sum Newton coefficients.

    Exact agreement with bezout_poly is the finite identity behind the
    closed form, so the pair doubles as a cross check.
    """
    acc = zero_poly(c)
    for ell in range(k + 1):
        acc = acc + newton_basis(c, ell).scale(newton_coeff(c, k, ell))
    return acc


def divmod_poly(num: QuadPoly, den: QuadPoly) -> tuple[QuadPoly, QuadPoly]:
    """Euclidean division in Q(sqrt(-c))[X]: num = q*den + r, deg r < deg den."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.c != den.c:
        raise RingMismatchError(f"ring parameters differ: {num.c} != {den.c}")
    c = num.c
    q = [_zero_rat(c)] * max(0, num.degree - den.degree + 1)
    rem = list(num.coeffs)
    inv_lead = den.leading().inverse()
    for i in range(len(rem) - 1, den.degree - 1, -1):
        if rem[i].is_zero():
            continue
        factor = rem[i] * inv_lead
        q[i - den.degree] = factor
        for j, dco in enumerate(den.coeffs):
            rem[i - den.degree + j] = rem[i - den.degree + j] - factor * dco
    return QuadPoly(c, tuple(q)), QuadPoly(c, tuple(rem[: max(den.degree, 0)]))


def bezout_pair(p: QuadPoly, q: QuadPoly) -> tuple[QuadPoly, QuadPoly]:
    """The unique (U, V) with p*U + q*V = 1, deg U < deg q, deg V < deg p.

    Extended Euclid with the running remainder kept monic to control
    coefficient growth, then one division each to reduce the degrees.
    Raises NonCoprimeError when a common factor of degree >= 1 survives.
    """
    if p.degree < 1 or q.degree < 1:
        raise ValueError("both polynomials must be non-constant")
    c = p.c
    r0, r1 = p, q
    u0, u1 = one_poly(c), zero_poly(c)
    v0, v1 = zero_poly(c), one_poly(c)
    while not r1.is_zero():
        quo, rem = divmod_poly(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - quo * u1
        v0, v1 = v1, v0 - quo * v1
        if not r1.is_zero():
            inv_lead = r1.leading().inverse()
            r1 = r1.scale(inv_lead)
            u1 = u1.scale(inv_lead)
            v1 = v1.scale(inv_lead)
    if r0.degree >= 1:
        raise NonCoprimeError(f"common factor of degree {r0.degree}: {r0}")
    unit = r0.leading().inverse()
    u0 = u0.scale(unit)
    v0 = v0.scale(unit)
    _, u_red = divmod_poly(u0, q)
    _, v_red = divmod_poly(v0, p)
    if p * u_red + q * v_red != one_poly(c):
        raise AssertionError("Bezout reduction lost exactness; arithmetic bug")
    return u_red, v_red


@dataclass(frozen=True)
class BezoutCertificate:
    """Integer witness that the content of any value of P divides d.

    Carries alpha (the Bezout cofactor), the integer split P = A + B*sqrt(-c),
    d = c * prod_{l=1..k} (l^2 + 4c), and the split 2d*alpha = r + s*sqrt(-c),
    tied together by the exact identity r*A - c*s*B = d.
    """

    c: int
    k: int
    alpha: QuadPoly
    A: IntPoly
    B: IntPoly
    r: IntPoly
    s: IntPoly
    d: int

    def verify(self) -> None:
        """Re-check every certificate invariant exactly; raise CertificateError."""
        c, k = self.c, self.k
        if self.alpha.degree > k:
            raise CertificateError(f"deg alpha = {self.alpha.degree} exceeds k = {k}")
        p = shift_product_poly(c, k)
        if split_parts(p) != (self.A, self.B):
            raise CertificateError("A, B do not split the shift product polynomial")
        if self.alpha * p + self.alpha.conj() * p.conj() != one_poly(c):
            raise CertificateError("alpha*P + conj(alpha)*conj(P) != 1")
        d = c
        for ell in range(1, k + 1):
            d *= ell * ell + 4 * c
        if d != self.d:
            raise CertificateError(f"d = {self.d} != c * prod(l^2 + 4c) = {d}")
        try:
            r, s = split_parts(self.alpha.scale(2 * d))
        except ValueError as exc:
            raise CertificateError(f"2d*alpha leaves Z[sqrt(-c)][X]: {exc}") from None
        if (r, s) != (self.r, self.s):
            raise CertificateError("r, s do not split 2d*alpha")
        if self.r * self.A - (self.s * self.B).scale(c) != IntPoly.const(d):
            raise CertificateError("r*A - c*s*B != d")


def bezout_certificate(c: int, k: int) -> BezoutCertificate:
    """Build and fully verify the certificate for parameters (c, k).

    The cofactor is assembled along both construction routes, which must
    agree exactly; this is the standing defense against sign conventions
    drifting between conjugation and the closed product formula.
    """
    alpha = bezout_poly(c, k)
    if alpha != bezout_poly_interp(c, k):
        raise CertificateError("closed-form and sum-form cofactors disagree")
    p = shift_product_poly(c, k)
    a_part, b_part = split_parts(p)
    d = c
    for ell in range(1, k + 1):
        d *= ell * ell + 4 * c
    r, s = split_parts(alpha.scale(2 * d))
    cert = BezoutCertificate(c=c, k=k, alpha=alpha, A=a_part, B=b_part, r=r, s=s, d=d)
    cert.verify()
    return cert
