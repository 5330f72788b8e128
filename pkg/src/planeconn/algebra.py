"""Exact two-variable Puiseux-polynomial algebra.

The coefficient ring for everything symbolic in this package: finite sums of
terms c * x**(p/q) * y**m with rational coefficient, rational x-exponent and
natural y-exponent.  On top of it sit plane vector fields with the Lie
bracket and the closed class of invertible "monomial-triangular" coordinate
changes F(x, y) = (c*x**r, x**s*(a*y + g(x))).

All values are immutable and all operations are pure and exact; nothing here
ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainError, ExactnessError, SignError

Q = Fraction

TermKey = tuple[Fraction, int]


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"expected a rational, got {type(v).__name__}")


def integer_nth_root(n: int, q: int) -> int | None:
    """Exact q-th root of a nonnegative integer, or None if irrational."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1) or q == 1:
        return n
    lo, hi = 0, 1 << (n.bit_length() // q + 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**q < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**q == n else None


def rational_power(base: Fraction, exp: Fraction) -> Fraction:
    """base**exp as an exact rational.

    Raises SignError for a fractional power of a negative base, DomainError
    for a nonpositive power of zero, and ExactnessError when the root is
    irrational.
    """
    base = _as_fraction(base)
    exp = _as_fraction(exp)
    if exp.denominator == 1:
        e = exp.numerator
        if base == 0:
            if e > 0:
                return Q(0)
            raise DomainError(f"0**{e} undefined")
        return base**e
    if base < 0:
        raise SignError(f"({base})**({exp}) has no rational branch")
    if base == 0:
        if exp > 0:
            return Q(0)
        raise DomainError(f"0**({exp}) undefined")
    q = exp.denominator
    rn = integer_nth_root(base.numerator, q)
    rd = integer_nth_root(base.denominator, q)
    if rn is None or rd is None:
        raise ExactnessError(f"({base})**(1/{q}) is irrational")
    return Q(rn, rd) ** exp.numerator


class PuiseuxPoly:
    """Finite sum of terms c * x**xe * y**ye, keyed by (xe, ye).

    xe is an arbitrary Fraction, ye a nonnegative int.  The zero polynomial
    has an empty term map; no stored coefficient is ever zero.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[TermKey, Fraction] | Iterable | None = None):
        clean: dict[TermKey, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (xe, ye), c in items:
                c = _as_fraction(c)
                if not c:
                    continue
                xe = _as_fraction(xe)
                ye = int(ye)
                if ye < 0:
                    raise ValueError("y-exponent must be a natural number")
                key = (xe, ye)
                acc = clean.get(key)
                if acc is None:
                    clean[key] = c
                else:
                    acc = acc + c
                    if acc:
                        clean[key] = acc
                    else:
                        del clean[key]
        self._terms = clean
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> PuiseuxPoly:
        return cls()

    @classmethod
    def const(cls, c) -> PuiseuxPoly:
        return cls({(Q(0), 0): _as_fraction(c)})

    @classmethod
    def monomial(cls, c, xe=0, ye=0) -> PuiseuxPoly:
        return cls({(_as_fraction(xe), int(ye)): _as_fraction(c)})

    @classmethod
    def x_pow(cls, xe) -> PuiseuxPoly:
        return cls.monomial(1, xe, 0)

    @classmethod
    def y_pow(cls, ye) -> PuiseuxPoly:
        return cls.monomial(1, 0, ye)

    # -- inspection ---------------------------------------------------

    def terms(self) -> list[tuple[Fraction, int, Fraction]]:
        """Sorted list of (xe, ye, coeff), lexicographic in (xe, ye)."""
        return [(xe, ye, c) for (xe, ye), c in sorted(self._terms.items())]

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, xe, ye) -> Fraction:
        return self._terms.get((_as_fraction(xe), int(ye)), Q(0))

    def depends_on_y(self) -> bool:
        return any(ye for (_, ye) in self._terms)

    def whole_plane_ok(self) -> bool:
        """True when every x-exponent is a nonnegative integer."""
        return all(xe.denominator == 1 and xe >= 0 for (xe, _) in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for xe, ye, c in self.terms():
            piece = str(c)
            if xe:
                piece += f"*x^({xe})" if xe.denominator != 1 or xe < 0 else f"*x^{xe}"
            if ye:
                piece += f"*y^{ye}" if ye != 1 else "*y"
            parts.append(piece)
        return " + ".join(parts)

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> PuiseuxPoly:
        if isinstance(other, (int, Fraction)):
            other = PuiseuxPoly.const(other)
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            acc = out.get(key)
            if acc is None:
                out[key] = c
            else:
                acc = acc + c
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        p = PuiseuxPoly.__new__(PuiseuxPoly)
        p._terms = out
        p._hash = None
        return p

    __radd__ = __add__

    def __neg__(self) -> PuiseuxPoly:
        p = PuiseuxPoly.__new__(PuiseuxPoly)
        p._terms = {k: -c for k, c in self._terms.items()}
        p._hash = None
        return p

    def __sub__(self, other) -> PuiseuxPoly:
        if isinstance(other, (int, Fraction)):
            other = PuiseuxPoly.const(other)
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> PuiseuxPoly:
        return (-self) + other

    def __mul__(self, other) -> PuiseuxPoly:
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return PuiseuxPoly.zero()
            p = PuiseuxPoly.__new__(PuiseuxPoly)
            p._terms = {k: v * c for k, v in self._terms.items()}
            p._hash = None
            return p
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        out: dict[TermKey, Fraction] = {}
        for (xe1, ye1), c1 in self._terms.items():
            for (xe2, ye2), c2 in other._terms.items():
                key = (xe1 + xe2, ye1 + ye2)
                acc = out.get(key)
                prod = c1 * c2
                if acc is None:
                    out[key] = prod
                else:
                    acc = acc + prod
                    if acc:
                        out[key] = acc
                    else:
                        del out[key]
        p = PuiseuxPoly.__new__(PuiseuxPoly)
        p._terms = out
        p._hash = None
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int) -> PuiseuxPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("only natural powers of polynomials")
        out = PuiseuxPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def mul_monomial(self, c, xe=0, ye=0) -> PuiseuxPoly:
        c = _as_fraction(c)
        xe = _as_fraction(xe)
        ye = int(ye)
        if not c:
            return PuiseuxPoly.zero()
        p = PuiseuxPoly.__new__(PuiseuxPoly)
        p._terms = {(k0 + xe, k1 + ye): v * c for (k0, k1), v in self._terms.items()}
        p._hash = None
        return p

    def div_monomial(self, c, xe=0, ye=0) -> PuiseuxPoly:
        """Exact division by the single monomial c * x**xe * y**ye."""
        c = _as_fraction(c)
        if not c:
            raise ZeroDivisionError("division by zero monomial")
        ye = int(ye)
        if ye and any(t_ye < ye for (_, t_ye) in self._terms):
            raise ValueError("monomial division would produce a negative y-exponent")
        return self.mul_monomial(1 / c, -_as_fraction(xe), -ye)

    # -- calculus -----------------------------------------------------

    def diff(self, var: str) -> PuiseuxPoly:
        """Term-wise partial derivative; var is 'x' or 'y'."""
        out: dict[TermKey, Fraction] = {}
        if var == "x":
            for (xe, ye), c in self._terms.items():
                if xe:
                    out[(xe - 1, ye)] = c * xe
        elif var == "y":
            for (xe, ye), c in self._terms.items():
                if ye:
                    out[(xe, ye - 1)] = c * ye
        else:
            raise ValueError("var must be 'x' or 'y'")
        p = PuiseuxPoly.__new__(PuiseuxPoly)
        p._terms = out
        p._hash = None
        return p

    # -- evaluation ---------------------------------------------------

    def eval_exact(self, x0, y0) -> Fraction:
        x0 = _as_fraction(x0)
        y0 = _as_fraction(y0)
        total = Q(0)
        for (xe, ye), c in self._terms.items():
            if xe.denominator != 1 and x0 <= 0:
                raise DomainError(f"x**({xe}) undefined at x={x0}")
            if xe < 0 and x0 == 0:
                raise DomainError(f"x**({xe}) undefined at x=0")
            total += c * rational_power(x0, xe) * y0**ye
        return total

    def eval_float(self, x0: float, y0: float) -> float:
        x0 = float(x0)
        y0 = float(y0)
        total = 0.0
        for (xe, ye), c in self._terms.items():
            if xe.denominator == 1:
                e = xe.numerator
                if x0 == 0.0 and e < 0:
                    raise DomainError(f"x**({e}) undefined at x=0")
                xpart = x0**e
            else:
                if x0 <= 0.0:
                    raise DomainError(f"x**({xe}) undefined at x={x0}")
                xpart = x0 ** float(xe)
            total += float(c) * xpart * y0**ye
        return total

    # -- substitution -------------------------------------------------

    def subs_x(self, c, r) -> PuiseuxPoly:
        """Substitute x -> c * x**r into a polynomial (y left alone)."""
        c = _as_fraction(c)
        r = _as_fraction(r)
        out = PuiseuxPoly.zero()
        for (xe, ye), coeff in self._terms.items():
            out = out + PuiseuxPoly.monomial(coeff * rational_power(c, xe), xe * r, ye)
        return out

    def substitute(self, fmap: MonoTriMap) -> PuiseuxPoly:
        """Exact composition self âˆ˜ F for a monomial-triangular map F."""
        # x -> c*x**r,  y -> x**s * (a*y + g(x)); binomial powers cached per ye.
        inner_y = PuiseuxPoly.monomial(fmap.a, fmap.s, 1) + fmap.g.mul_monomial(1, fmap.s, 0)
        ypowers: dict[int, PuiseuxPoly] = {0: PuiseuxPoly.const(1)}
        out = PuiseuxPoly.zero()
        for (xe, ye), coeff in sorted(self._terms.items()):
            if ye not in ypowers:
                top = max(ypowers)
                while top < ye:
                    ypowers[top + 1] = ypowers[top] * inner_y
                    top += 1
            xfactor = PuiseuxPoly.monomial(coeff * rational_power(fmap.c, xe), xe * fmap.r, 0)
            out = out + xfactor * ypowers[ye]
        return out


@dataclass(frozen=True)
class VectorField2:
    """Plane vector field cx * d/dx + cy * d/dy with Puiseux components."""

    cx: PuiseuxPoly
    cy: PuiseuxPoly

    @classmethod
    def make(cls, cx, cy) -> VectorField2:
        def lift(v):
            if isinstance(v, PuiseuxPoly):
                return v
            return PuiseuxPoly.const(v)

        return cls(lift(cx), lift(cy))

    def is_zero(self) -> bool:
        return self.cx.is_zero() and self.cy.is_zero()

    def directional(self, f: PuiseuxPoly) -> PuiseuxPoly:
        """Derivative of the function f along this field."""
        return self.cx * f.diff("x") + self.cy * f.diff("y")

    def bracket(self, other: VectorField2) -> VectorField2:
        """Lie bracket [self, other]."""
        return VectorField2(
            self.directional(other.cx) - other.directional(self.cx),
            self.directional(other.cy) - other.directional(self.cy),
        )

    def __add__(self, other: VectorField2) -> VectorField2:
        return VectorField2(self.cx + other.cx, self.cy + other.cy)

    def __sub__(self, other: VectorField2) -> VectorField2:
        return VectorField2(self.cx - other.cx, self.cy - other.cy)

    def __neg__(self) -> VectorField2:
        return VectorField2(-self.cx, -self.cy)

    def scale(self, f) -> VectorField2:
        """Multiply both components by a scalar or a PuiseuxPoly."""
        return VectorField2(self.cx * f, self.cy * f)

    def eval_exact(self, x0, y0) -> tuple[Fraction, Fraction]:
        return (self.cx.eval_exact(x0, y0), self.cy.eval_exact(x0, y0))

    def pushforward(self, fmap: MonoTriMap) -> VectorField2:
        """Image of this field under F: (J_F . V) composed with F**-1."""
        j = fmap.jacobian()
        finv = fmap.invert()
        return VectorField2(
            (j[0][0] * self.cx + j[0][1] * self.cy).substitute(finv),
            (j[1][0] * self.cx + j[1][1] * self.cy).substitute(finv),
        )


def vf_bracket(v: VectorField2, w: VectorField2) -> VectorField2:
    return v.bracket(w)


@dataclass(frozen=True)
class MonoTriMap:
    """Invertible coordinate change F(x, y) = (c*x**r, x**s*(a*y + g(x))).

    The smallest class closed under composition and inversion that contains
    the reflections, the strip involution, the half-plane chart maps and the
    torus-example involution.  Inverses exist on {x > 0}.
    """

    c: Fraction
    r: Fraction
    a: Fraction
    s: Fraction
    g: PuiseuxPoly

    def __post_init__(self):
        object.__setattr__(self, "c", _as_fraction(self.c))
        object.__setattr__(self, "r", _as_fraction(self.r))
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "s", _as_fraction(self.s))
        if not self.c or not self.a or not self.r:
            raise ValueError("c, a and r must be nonzero")
        if self.g.depends_on_y():
            raise ValueError("g must not depend on y")

    @classmethod
    def make(cls, c, r, a, s, g=None) -> MonoTriMap:
        if g is None:
            g = PuiseuxPoly.zero()
        elif not isinstance(g, PuiseuxPoly):
            g = PuiseuxPoly.const(g)
        return cls(_as_fraction(c), _as_fraction(r), _as_fraction(a), _as_fraction(s), g)

    @classmethod
    def identity(cls) -> MonoTriMap:
        return cls.make(1, 1, 1, 0)

    def is_identity(self) -> bool:
        return (
            self.c == 1 and self.r == 1 and self.a == 1 and self.s == 0 and self.g.is_zero()
        )

    def components(self) -> tuple[PuiseuxPoly, PuiseuxPoly]:
        """The pair (F1, F2) as Puiseux polynomials in (x, y)."""
        f1 = PuiseuxPoly.monomial(self.c, self.r, 0)
        f2 = PuiseuxPoly.monomial(self.a, self.s, 1) + self.g.mul_monomial(1, self.s, 0)
        return f1, f2

    def compose(self, inner: MonoTriMap) -> MonoTriMap:
        """self after inner: (self âˆ˜ inner)(p) = self(inner(p))."""
        c2, r2, a2, s2, g2 = inner.c, inner.r, inner.a, inner.s, inner.g
        c_new = self.c * rational_power(c2, self.r)
        r_new = self.r * r2
        s_new = r2 * self.s + s2
        c2_pow_s = rational_power(c2, self.s)
        a_new = self.a * a2 * c2_pow_s
        # g'(x) = c2**s1 * (a1*g2(x) + x**(-s2) * g1(c2*x**r2))
        g_new = (self.g.subs_x(c2, r2).mul_monomial(1, -s2, 0) + g2 * self.a) * c2_pow_s
        return MonoTriMap(c_new, r_new, a_new, s_new, g_new)

    def invert(self) -> MonoTriMap:
        c_new = rational_power(self.c, Q(-1) / self.r)
        r_new = 1 / self.r
        s_new = -self.s / self.r
        c_pow = rational_power(self.c, self.s / self.r)
        a_new = c_pow / self.a
        # y = (1/a) * (Y*x**-s - g(x)) with x = c**(-1/r) * X**(1/r)
        g_new = self.g.subs_x(c_new, r_new).mul_monomial(Q(-1) / self.a, -s_new, 0)
        return MonoTriMap(c_new, r_new, a_new, s_new, g_new)

    def jacobian(self) -> tuple[tuple[PuiseuxPoly, PuiseuxPoly], tuple[PuiseuxPoly, PuiseuxPoly]]:
        f1, f2 = self.components()
        return (
            (f1.diff("x"), f1.diff("y")),
            (f2.diff("x"), f2.diff("y")),
        )

    def apply_float(self, x: float, y: float) -> tuple[float, float]:
        f1, f2 = self.components()
        return (f1.eval_float(x, y), f2.eval_float(x, y))

    def apply_exact(self, x, y) -> tuple[Fraction, Fraction]:
        f1, f2 = self.components()
        return (f1.eval_exact(x, y), f2.eval_exact(x, y))


def map_compose(outer: MonoTriMap, inner: MonoTriMap) -> MonoTriMap:
    return outer.compose(inner)


def map_invert(fmap: MonoTriMap) -> MonoTriMap:
    return fmap.invert()
