"""One-variable exact Laurent arithmetic with half-integer exponents.

``HLPoly`` is a Laurent polynomial over Q in the variable t whose exponents
may be half-integers; exponents are stored doubled, so the key k stands for
t^(k/2).  This makes symmetrized annihilators such as (t^(1/2)+t^(-1/2))/2
first-class citizens without a field extension.

``OneVarFrac`` is the corresponding fraction field element, kept in a
canonical reduced form: gcd 1 in the substituted variable s = t^(1/2),
denominator with lowest exponent 0 and leading coefficient 1.
"""

from __future__ import annotations

from fractions import Fraction

from . import densepoly as dp
from .errors import DivisionByZero


def _q(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"rational coefficient expected, got {type(c).__name__}")


class HLPoly:
    """Laurent polynomial in t with exponents in (1/2)Z, coefficients in Q.

    The constructor takes a mapping {doubled exponent: coefficient}; entries
    with zero coefficient are dropped, so the empty mapping is the zero
    polynomial.  Instances are immutable and hashable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                v = _q(v)
                if v:
                    c[int(k)] = v
        self._c = c
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "HLPoly":
        return cls()

    @classmethod
    def one(cls) -> "HLPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, q) -> "HLPoly":
        return cls({0: _q(q)})

    @classmethod
    def t(cls, n: int, c=1) -> "HLPoly":
        """The monomial c * t^n for an integer power n."""
        return cls({2 * n: _q(c)})

    @classmethod
    def half_power(cls, k2: int, c=1) -> "HLPoly":
        """The monomial c * t^(k2/2)."""
        return cls({k2: _q(c)})

    @classmethod
    def from_t(cls, coeffs) -> "HLPoly":
        """Build from a mapping {integer exponent: coefficient}."""
        return cls({2 * int(k): v for k, v in coeffs.items()})

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    def terms(self):
        """Sorted tuple of (doubled exponent, coefficient) pairs."""
        return tuple(sorted(self._c.items()))

    def coeff(self, k2: int) -> Fraction:
        return self._c.get(k2, Fraction(0))

    def min_exp2(self) -> int:
        return min(self._c)

    def max_exp2(self) -> int:
        return max(self._c)

    def has_half_exponents(self) -> bool:
        return any(k % 2 for k in self._c)

    def is_symmetric(self) -> bool:
        """Whether P(t) = P(t^-1)."""
        return all(self._c.get(-k) == v for k, v in self._c.items())

    def value_at_one(self) -> Fraction:
        return sum(self._c.values(), Fraction(0))

    def eval_rational(self, x) -> Fraction:
        """Evaluate at a rational point; requires integer exponents."""
        x = _q(x)
        acc = Fraction(0)
        for k, v in self._c.items():
            if k % 2:
                raise ValueError("cannot evaluate a half-integer power at a "
                                 "generic rational point")
            acc += v * x ** (k // 2)
        return acc

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "HLPoly") -> "HLPoly":
        c = dict(self._c)
        for k, v in other._c.items():
            w = c.get(k, 0) + v
            if w:
                c[k] = w
            elif k in c:
                del c[k]
        out = HLPoly.__new__(HLPoly)
        out._c = c
        out._hash = None
        return out

    def __neg__(self) -> "HLPoly":
        out = HLPoly.__new__(HLPoly)
        out._c = {k: -v for k, v in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other: "HLPoly") -> "HLPoly":
        return self + (-other)

    def __mul__(self, other: "HLPoly") -> "HLPoly":
        c = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                w = c.get(k, 0) + v1 * v2
                if w:
                    c[k] = w
                elif k in c:
                    del c[k]
        out = HLPoly.__new__(HLPoly)
        out._c = c
        out._hash = None
        return out

    def scale(self, q) -> "HLPoly":
        q = _q(q)
        out = HLPoly.__new__(HLPoly)
        out._c = {} if q == 0 else {k: v * q for k, v in self._c.items()}
        out._hash = None
        return out

    def __pow__(self, n: int) -> "HLPoly":
        if n < 0:
            if len(self._c) == 1:
                k, v = next(iter(self._c.items()))
                return HLPoly({n * k: v ** n})
            raise ValueError("negative power of a non-monomial")
        acc = HLPoly.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def invert_var(self) -> "HLPoly":
        """Substitute t -> t^-1."""
        out = HLPoly.__new__(HLPoly)
        out._c = {-k: v for k, v in self._c.items()}
        out._hash = None
        return out

    def derivative(self) -> "HLPoly":
        """d/dt, with d(t^(k/2))/dt = (k/2) t^(k/2 - 1)."""
        c = {}
        for k, v in self._c.items():
            if k:
                c[k - 2] = v * Fraction(k, 2)
        return HLPoly(c)

    def shift(self, k2: int) -> "HLPoly":
        """Multiply by t^(k2/2)."""
        out = HLPoly.__new__(HLPoly)
        out._c = {k + k2: v for k, v in self._c.items()}
        out._hash = None
        return out

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, HLPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms())
        return self._hash

    def __repr__(self):
        if not self._c:
            return "0"
        bits = []
        for k, v in self.terms():
            if k == 0:
                bits.append(str(v))
            else:
                e = str(k // 2) if k % 2 == 0 else f"{k}/2"
                coef = "" if v == 1 else ("-" if v == -1 else f"{v}*")
                bits.append(f"{coef}t^{e}" if e != "1" else f"{coef}t")
        return " + ".join(bits).replace("+ -", "- ")


def _to_s(p: HLPoly):
    """Write p = s^offset * P(s) with P(0) != 0; returns (offset, dense P)."""
    lo = p.min_exp2()
    hi = p.max_exp2()
    cs = [Fraction(0)] * (hi - lo + 1)
    for k, v in p._c.items():
        cs[k - lo] = v
    return lo, tuple(cs)


def _from_s(offset: int, cs) -> HLPoly:
    return HLPoly({offset + i: c for i, c in enumerate(cs) if c})


class OneVarFrac:
    """Reduced fraction of half-integer Laurent polynomials.

    Canonical form: numerator and denominator coprime as polynomials in
    s = t^(1/2); denominator with lowest exponent 0, integer coefficients
    of content 1, and positive leading coefficient (monomial and scalar
    units are folded into the numerator).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced=False):
        if not isinstance(num, HLPoly):
            num = HLPoly.const(num)
        if den is None:
            den = HLPoly.one()
        elif not isinstance(den, HLPoly):
            den = HLPoly.const(den)
        if den.is_zero:
            raise DivisionByZero("zero denominator")
        if num.is_zero:
            object.__setattr__(self, "num", HLPoly.zero())
            object.__setattr__(self, "den", HLPoly.one())
            return
        on, ns = _to_s(num)
        od, ds = _to_s(den)
        if not _reduced:
            g = dp.gcd(ns, ds)
            if dp.deg(g) > 0:
                ns = dp.divexact(ns, g)
                ds = dp.divexact(ds, g)
        ds_int = dp.clear_denoms(ds)
        cont = dp.i_content(ds_int)
        if ds_int[-1] < 0:
            cont = -cont
        unit = Fraction(ds_int[-1], cont) / ds[-1]
        if unit != 1:
            ns = dp.scale(ns, unit)
        object.__setattr__(self, "num", _from_s(on - od, ns))
        object.__setattr__(self, "den", _from_s(
            0, tuple(Fraction(c // cont) for c in ds_int)))

    def __setattr__(self, *a):
        raise AttributeError("OneVarFrac is immutable")

    @classmethod
    def zero(cls):
        return cls(HLPoly.zero())

    @classmethod
    def one(cls):
        return cls(HLPoly.one())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == HLPoly.one()

    def __add__(self, other: "OneVarFrac") -> "OneVarFrac":
        # Henrici's scheme: only the old common gcd can reappear.
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        _, b = _to_s(self.den)
        _, d = _to_s(other.den)
        g = dp.gcd(b, d)
        b1 = dp.divexact(b, g) if dp.deg(g) > 0 else b
        d1 = dp.divexact(d, g) if dp.deg(g) > 0 else d
        num = self.num * _from_s(0, d1) + other.num * _from_s(0, b1)
        if num.is_zero:
            return OneVarFrac.zero()
        on, ns = _to_s(num)
        h = dp.gcd(ns, g)
        if dp.deg(h) > 0:
            ns = dp.divexact(ns, h)
            g = dp.divexact(g, h)
        den = dp.mul(dp.mul(b1, d1), g)
        return OneVarFrac(_from_s(on, ns), _from_s(0, den), _reduced=True)

    def __neg__(self) -> "OneVarFrac":
        return OneVarFrac(-self.num, self.den, _reduced=True)

    def __sub__(self, other: "OneVarFrac") -> "OneVarFrac":
        return self + (-other)

    def __mul__(self, other: "OneVarFrac") -> "OneVarFrac":
        if self.is_zero or other.is_zero:
            return OneVarFrac.zero()
        oa, a = _to_s(self.num)
        ob, b = _to_s(self.den)
        oc, c = _to_s(other.num)
        od, d = _to_s(other.den)
        g1 = dp.gcd(a, d)
        if dp.deg(g1) > 0:
            a = dp.divexact(a, g1)
            d = dp.divexact(d, g1)
        g2 = dp.gcd(c, b)
        if dp.deg(g2) > 0:
            c = dp.divexact(c, g2)
            b = dp.divexact(b, g2)
        return OneVarFrac(_from_s(oa + oc, dp.mul(a, c)),
                          _from_s(ob + od, dp.mul(b, d)), _reduced=True)

    def scale(self, q) -> "OneVarFrac":
        q = _q(q)
        if q == 0:
            return OneVarFrac.zero()
        return OneVarFrac(self.num.scale(q), self.den, _reduced=True)

    def reciprocal(self) -> "OneVarFrac":
        if self.is_zero:
            raise DivisionByZero("reciprocal of zero")
        return OneVarFrac(self.den, self.num, _reduced=True)

    def __truediv__(self, other: "OneVarFrac") -> "OneVarFrac":
        return self * other.reciprocal()

    def invert_var(self) -> "OneVarFrac":
        """Substitute t -> t^-1 in numerator and denominator."""
        return OneVarFrac(self.num.invert_var(), self.den.invert_var(),
                          _reduced=True)

    def eval_rational(self, x) -> Fraction:
        d = self.den.eval_rational(x)
        if d == 0:
            raise DivisionByZero(f"pole at t={x}")
        return self.num.eval_rational(x) / d

    def __eq__(self, other):
        if not isinstance(other, OneVarFrac):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.is_polynomial:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"
