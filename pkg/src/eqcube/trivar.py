"""Exact arithmetic in the fraction field of Q[x^±1, y^±1] with z = (xy)^-1.

Elements of the quotient ring Q[x^±1, y^±1, z^±1]/(xyz = 1) are stored with
z eliminated, as reduced fractions of two-variable Laurent polynomials.
The permutation group of {x, y, z} acts by monomial substitutions; after a
substitution z is re-eliminated, so the action is by ring automorphisms of
the stored representation.

Canonical form mirrors the one-variable layer: numerator and denominator
coprime in Q[x, y], denominator with lowest exponents (0, 0) and leading
coefficient (in lexicographic order) equal to 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _math_gcd

from . import densepoly as dp
from .errors import DivisionByZero, HalfPowerResidue, NoLimit
from .halfint import HLPoly, OneVarFrac, _q


# ---------------------------------------------------------------------------
# plain-dict bivariate polynomials: {(xexp, yexp): Fraction}, origin-shifted
# ---------------------------------------------------------------------------

def _dict_is_origin(d):
    return (not d) or (min(i for i, _ in d) == 0 and min(j for _, j in d) == 0)


def _dict_mul(a, b):
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out


def _dict_add(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + v
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


def _dict_scale(a, q):
    if q == 0:
        return {}
    return {k: v * q for k, v in a.items()}


# yx form: {y exponent: dense x-polynomial tuple}

def _yx_from(d):
    rows = {}
    for (i, j), c in d.items():
        rows.setdefault(j, {})[i] = c
    out = {}
    for j, row in rows.items():
        hi = max(row)
        cs = [Fraction(0)] * (hi + 1)
        for i, c in row.items():
            cs[i] = c
        out[j] = tuple(cs)
    return out


def _yx_to(m):
    d = {}
    for j, cs in m.items():
        for i, c in enumerate(cs):
            if c:
                d[(i, j)] = c
    return d


def _yx_ydeg(m):
    return max(m)


def _yx_int(d):
    """Origin dict with Fraction coefficients -> yx form over Z (cleared by
    the global lcm of denominators; gcds are insensitive to the scalar)."""
    lcm = 1
    for c in d.values():
        den = c.denominator
        g = dp._igcd(lcm, den)
        lcm = lcm // g * den
    rows = {}
    for (i, j), c in d.items():
        rows.setdefault(j, {})[i] = int(c * lcm)
    out = {}
    for j, row in rows.items():
        hi = max(row)
        cs = [0] * (hi + 1)
        for i, c in row.items():
            cs[i] = c
        out[j] = tuple(cs)
    return out


def _yx_int_primitive(m):
    cont = ()
    for cs in m.values():
        cont = dp.i_gcd(cont, cs)
        if cont == (1,):
            return cont, m
    return cont, {j: dp.i_divexact(cs, cont) for j, cs in m.items()}


def _yx_prem(a, b):
    """Pseudo-remainder of a by b in the variable y, coefficients in Q[x]."""
    db = _yx_ydeg(b)
    lcb = b[db]
    r = dict(a)
    while r and _yx_ydeg(r) >= db:
        dr = _yx_ydeg(r)
        lcr = r[dr]
        nxt = {}
        for j, cs in r.items():
            if j != dr:
                nxt[j] = dp.mul(cs, lcb)
        for j, cs in b.items():
            if j != db:
                jj = j + dr - db
                val = dp.sub(nxt.get(jj, ()), dp.mul(cs, lcr))
                if val:
                    nxt[jj] = val
                elif jj in nxt:
                    del nxt[jj]
        r = nxt
    return r


class _NotDivisible(ArithmeticError):
    pass


def _yx_divexact(a, b):
    if not a:
        return {}
    db = _yx_ydeg(b)
    lcb = b[db]
    q = {}
    r = {j: cs for j, cs in a.items()}
    while r:
        dr = _yx_ydeg(r)
        if dr < db:
            raise _NotDivisible
        try:
            qc = dp.divexact(r[dr], lcb)
        except ArithmeticError:
            raise _NotDivisible from None
        q[dr - db] = qc
        for j, cs in b.items():
            jj = j + dr - db
            val = dp.sub(r.get(jj, ()), dp.mul(cs, qc))
            if val:
                r[jj] = val
            elif jj in r:
                del r[jj]
    return q


def _spec_gcd(ap, bp):
    """Sound specialization shortcut for the gcd of two x-primitive
    integer polynomials with positive y-degree.

    If gcd(A(x,c), B(x,c)) is constant at deg+1 sample values c, every
    x-positive coefficient of the gcd (a y-polynomial of bounded degree)
    vanishes at all samples, so the gcd lies in Q[y] and equals the gcd of
    the two column contents.  Returns the gcd in yx form over Z, or None
    when the shortcut cannot conclude.
    """
    bound = min(_yx_ydeg(ap), _yx_ydeg(bp))
    c = 0
    samples = 0
    while samples <= bound:
        ac = ()
        bc = ()
        for j, cs in ap.items():
            ac = dp.add(ac, dp.scale(cs, c ** j))
        for j, cs in bp.items():
            bc = dp.add(bc, dp.scale(cs, c ** j))
        if dp.is_zero(ac) or dp.is_zero(bc):
            return None
        if len(dp.i_gcd(ac, bc)) > 1:
            return None
        samples += 1
        c = -c if c > 0 else -c + 1

    def column_content(m):
        deg_x = max(dp.deg(cs) for cs in m.values())
        ydeg = _yx_ydeg(m)
        conts = []
        for i in range(deg_x + 1):
            col = [0] * (ydeg + 1)
            for j, cs in m.items():
                if i <= dp.deg(cs):
                    col[j] = cs[i]
            col = dp.trim(col)
            if col:
                conts.append(col)
        g = ()
        for col in conts:
            g = dp.i_gcd(g, col)
            if g == (1,):
                break
        return g

    g = dp.i_gcd(column_content(ap), column_content(bp))
    if len(g) == 1:
        return {0: (1,)}
    return {j: (c,) for j, c in enumerate(g) if c}


def _bi_gcd(da, db_):
    """gcd in Q[x, y] of two origin-shifted nonzero dicts.

    Runs over integer-cleared coefficients: contents and pseudo-remainder
    sequences in Z[x], with a specialization shortcut for the common
    coprime case.  The result is defined up to a rational unit; callers
    normalize."""
    a, b = _yx_int(da), _yx_int(db_)
    ca, ap = _yx_int_primitive(a)
    cb, bp = _yx_int_primitive(b)
    c = dp.i_gcd(ca, cb)
    if _yx_ydeg(ap) == 0 or _yx_ydeg(bp) == 0:
        return {(i, 0): Fraction(v) for i, v in enumerate(c) if v}
    g = _spec_gcd(ap, bp)
    if g is None:
        if _yx_ydeg(ap) < _yx_ydeg(bp):
            ap, bp = bp, ap
        while True:
            r = _yx_prem(ap, bp)
            if not r:
                g = bp
                break
            if _yx_ydeg(r) == 0:
                g = {0: (1,)}
                break
            ap, bp = bp, _yx_int_primitive(r)[1]
    out = {}
    for j, cs in g.items():
        prod = dp.mul(cs, c)
        for i, v in enumerate(prod):
            if v:
                out[(i, j)] = Fraction(v)
    return out


def _bi_divexact(da, db_):
    return _yx_to(_yx_divexact(_yx_from(da), _yx_from(db_)))


def _bi_try_divexact(da, db_):
    try:
        return _bi_divexact(da, db_)
    except _NotDivisible:
        return None


def _bi_lcm(da, db_):
    q = _bi_try_divexact(db_, da)
    if q is not None:
        return db_
    q = _bi_try_divexact(da, db_)
    if q is not None:
        return da
    g = _bi_gcd(da, db_)
    return _dict_mul(da, _bi_divexact(db_, g))


# ---------------------------------------------------------------------------
# BiLaurent
# ---------------------------------------------------------------------------

class BiLaurent:
    """Laurent polynomial in x, y over Q: finite map (xexp, yexp) -> coeff."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for (i, j), v in coeffs.items():
                v = _q(v)
                if v:
                    c[(int(i), int(j))] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, d) -> "BiLaurent":
        out = cls.__new__(cls)
        out._c = d
        out._hash = None
        return out

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, q):
        return cls({(0, 0): _q(q)})

    @property
    def is_zero(self):
        return not self._c

    def terms(self):
        return tuple(sorted(self._c.items()))

    def __add__(self, other):
        return BiLaurent._raw(_dict_add(self._c, other._c))

    def __neg__(self):
        return BiLaurent._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return BiLaurent._raw(_dict_mul(self._c, other._c))

    def scale(self, q):
        return BiLaurent._raw(_dict_scale(self._c, _q(q)))

    def shift(self, dx, dy):
        return BiLaurent._raw({(i + dx, j + dy): v
                               for (i, j), v in self._c.items()})

    def map_exponents(self, f):
        return BiLaurent._raw({f(i, j): v for (i, j), v in self._c.items()})

    def min_exps(self):
        return (min(i for i, _ in self._c), min(j for _, j in self._c))

    def max_exps(self):
        return (max(i for i, _ in self._c), max(j for _, j in self._c))

    def origin(self):
        """Return (origin-shifted plain dict, (shift_x, shift_y))."""
        if not self._c:
            return {}, (0, 0)
        mx, my = self.min_exps()
        return {(i - mx, j - my): v for (i, j), v in self._c.items()}, (mx, my)

    def eval_at(self, x0, y0):
        x0, y0 = _q(x0), _q(y0)
        acc = Fraction(0)
        for (i, j), v in self._c.items():
            acc += v * x0 ** i * y0 ** j
        return acc

    def __eq__(self, other):
        if not isinstance(other, BiLaurent):
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
        for (i, j), v in self.terms():
            pows = []
            for s, e in (("x", i), ("y", j)):
                if e == 1:
                    pows.append(s)
                elif e:
                    pows.append(f"{s}^{e}")
            mono = "*".join(pows) or "1"
            bits.append(f"{v}*{mono}" if mono != "1" else str(v))
        return " + ".join(bits).replace("+ -", "- ")


# The six permutations of (x, y, z) acting on monomial exponents, with
# z = (xy)^-1 re-eliminated after substitution.
PermMap = {
    "e": lambda i, j: (i, j),
    "xy": lambda i, j: (j, i),
    "xz": lambda i, j: (-i, j - i),
    "yz": lambda i, j: (i - j, -j),
    "xyz": lambda i, j: (-j, i - j),
    "xzy": lambda i, j: (j - i, -i),
}
PERMUTATIONS = tuple(PermMap)


class TriVarElem:
    """Reduced fraction in the field of the quotient ring with xyz = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced=False):
        if isinstance(num, (int, Fraction)):
            num = BiLaurent.const(num)
        if den is None:
            den = BiLaurent.one()
        elif isinstance(den, (int, Fraction)):
            den = BiLaurent.const(den)
        if den.is_zero:
            raise DivisionByZero("zero denominator")
        if num.is_zero:
            object.__setattr__(self, "num", BiLaurent.zero())
            object.__setattr__(self, "den", BiLaurent.one())
            return
        nd, (nx, ny) = num.origin()
        dd, (dx, dy) = den.origin()
        if not _reduced:
            g = _bi_gcd(nd, dd)
            if len(g) > 1 or (0, 0) not in g:
                nd = _bi_divexact(nd, g)
                dd = _bi_divexact(dd, g)
        # canonical unit: denominator primitive integer, lexicographically
        # leading coefficient positive
        lcm = 1
        for c in dd.values():
            d = c.denominator
            lcm = lcm // _math_gcd(lcm, d) * d
        ints = {k: c.numerator * (lcm // c.denominator)
                for k, c in dd.items()}
        cont = 0
        for v in ints.values():
            cont = _math_gcd(cont, v)
        if ints[max(ints)] < 0:
            cont = -cont
        unit = Fraction(lcm, cont)
        if unit != 1:
            nd = _dict_scale(nd, unit)
        dd = {k: Fraction(v // cont) for k, v in ints.items()}
        object.__setattr__(
            self, "num",
            BiLaurent._raw({(i + nx - dx, j + ny - dy): v
                            for (i, j), v in nd.items()}))
        object.__setattr__(self, "den", BiLaurent._raw(dd))

    def __setattr__(self, *a):
        raise AttributeError("TriVarElem is immutable")

    @classmethod
    def zero(cls):
        return cls(BiLaurent.zero())

    @classmethod
    def one(cls):
        return cls(BiLaurent.one())

    @classmethod
    def from_rational(cls, q):
        return cls(BiLaurent.const(q))

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_constant(self):
        return self.den == BiLaurent.one() and (
            self.num.is_zero or set(self.num._c) == {(0, 0)})

    def as_rational(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant element")
        return self.num._c.get((0, 0), Fraction(0))

    def __add__(self, other):
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        num = self.num * other.den + other.num * self.den
        return TriVarElem(num, self.den * other.den)

    def __neg__(self):
        return TriVarElem(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return TriVarElem.zero()
        a, _ = self.num.origin()
        b, _ = self.den.origin()
        c, _ = other.num.origin()
        d, _ = other.den.origin()
        g1 = _bi_gcd(a, d)
        if len(g1) > 1:
            a = _bi_divexact(a, g1)
            d = _bi_divexact(d, g1)
        g2 = _bi_gcd(c, b)
        if len(g2) > 1:
            c = _bi_divexact(c, g2)
            b = _bi_divexact(b, g2)
        sx = (self.num.min_exps()[0] - self.den.min_exps()[0]
              + other.num.min_exps()[0] - other.den.min_exps()[0])
        sy = (self.num.min_exps()[1] - self.den.min_exps()[1]
              + other.num.min_exps()[1] - other.den.min_exps()[1])
        num = BiLaurent._raw(_dict_mul(a, c)).shift(sx, sy)
        den = BiLaurent._raw(_dict_mul(b, d))
        return TriVarElem(num, den, _reduced=True)

    def scale(self, q):
        q = _q(q)
        if q == 0:
            return TriVarElem.zero()
        return TriVarElem(self.num.scale(q), self.den, _reduced=True)

    def reciprocal(self):
        if self.is_zero:
            raise DivisionByZero("reciprocal of zero")
        return TriVarElem(self.den, self.num, _reduced=True)

    def __truediv__(self, other):
        return self * other.reciprocal()

    def substitute(self, perm: str) -> "TriVarElem":
        """Apply a permutation of (x, y, z); z is re-eliminated."""
        f = PermMap[perm]
        return TriVarElem(self.num.map_exponents(f),
                          self.den.map_exponents(f), _reduced=True)

    def invert_vars(self) -> "TriVarElem":
        """Substitute (x, y, z) -> (x^-1, y^-1, z^-1)."""
        return TriVarElem(self.num.map_exponents(lambda i, j: (-i, -j)),
                          self.den.map_exponents(lambda i, j: (-i, -j)),
                          _reduced=True)

    def eval_at(self, x0, y0) -> Fraction:
        d = self.den.eval_at(x0, y0)
        if d == 0:
            raise DivisionByZero(f"pole at ({x0}, {y0})")
        return self.num.eval_at(x0, y0) / d

    def __eq__(self, other):
        if not isinstance(other, TriVarElem):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == BiLaurent.one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

def _parity(p: HLPoly):
    pars = {k % 2 for k in p._c}
    return pars.pop() if len(pars) == 1 else None


_SLOT_MAPS = {
    "x": lambda k: (k, 0),
    "y": lambda k: (0, k),
    "z": lambda k: (-k, -k),
}


def embed(f: OneVarFrac, slot: str) -> TriVarElem:
    """Substitute t by one of the quotient-ring variables.

    Half-integer exponents must cancel between numerator and denominator:
    the fraction is representable with integer exponents iff both parts
    have pure and equal exponent parity.  Otherwise HalfPowerResidue.
    """
    if slot not in _SLOT_MAPS:
        raise ValueError(f"slot must be one of x, y, z; got {slot!r}")
    if f.is_zero:
        return TriVarElem.zero()
    num, den = f.num, f.den
    pn, pd = _parity(num), _parity(den)
    if pn is None or pd is None or pn != pd:
        raise HalfPowerResidue(
            "fraction has irreducible half-integer exponents")
    if pn == 1:
        num = num.shift(1)
        den = den.shift(1)
    m = _SLOT_MAPS[slot]
    nb = BiLaurent({m(k // 2): v for k, v in num._c.items()})
    db = BiLaurent({m(k // 2): v for k, v in den._c.items()})
    return TriVarElem(nb, db, _reduced=True)


def sum_fractions(terms) -> TriVarElem:
    """Sum of TriVarElem values over a common denominator (one reduction)."""
    live = [t for t in terms if not t.is_zero]
    if not live:
        return TriVarElem.zero()
    if len(live) == 1:
        return live[0]
    dens = []
    for t in live:
        d, _ = t.den.origin()
        dens.append(d)
    big = dens[0]
    for d in dens[1:]:
        big = _bi_lcm(big, d)
    acc = {}
    for t, d in zip(live, dens):
        mult = _bi_divexact(big, d)
        shifted = t.num.shift(-t.den.min_exps()[0], -t.den.min_exps()[1])
        acc = _dict_add(acc, _dict_mul(shifted._c, mult))
    return TriVarElem(BiLaurent._raw(acc), BiLaurent._raw(big))


def tri_symmetrize(f: TriVarElem) -> TriVarElem:
    """Sum of f over all six permutations of (x, y, z)."""
    return sum_fractions(f.substitute(p) for p in PERMUTATIONS)


def tri_invert(f: TriVarElem) -> TriVarElem:
    return f.invert_vars()


_PROBE_BETAS = (2, 3, 5)


def tri_eval_111(f: TriVarElem) -> Fraction:
    """Limit of f at (x, y, z) = (1, 1, 1) by three generic-line probes.

    Each probe substitutes x = 1 + s, y = 1 + beta*s, cancels the power of
    s exactly and evaluates at s = 0.  The probes must exist and agree;
    otherwise NoLimit is raised.
    """
    if f.is_zero:
        return Fraction(0)
    values = []
    for beta in _PROBE_BETAS:
        pn = _probe_poly(f.num, beta)
        pd = _probe_poly(f.den, beta)
        if dp.is_zero(pd):
            raise NoLimit(f"denominator vanishes on the probe line beta={beta}")
        vn = dp.valuation(pn)
        vd = dp.valuation(pd)
        if vn is None:
            values.append(Fraction(0))
            continue
        if vn < vd:
            raise NoLimit(f"pole at (1,1,1) along the probe line beta={beta}")
        values.append(Fraction(0) if vn > vd else pn[vn] / pd[vd])
    if values[0] == values[1] == values[2]:
        return values[0]
    raise NoLimit(f"probe values disagree: {values}")


def _probe_poly(p: BiLaurent, beta: int):
    """p(1+s, 1+beta*s) * (1+s)^a (1+beta*s)^b as a dense polynomial in s,
    for the monomial normalization making all exponents nonnegative."""
    mx, my = p.min_exps()
    one_s = (Fraction(1), Fraction(1))
    one_bs = (Fraction(1), Fraction(beta))
    pow_x = {0: (Fraction(1),)}
    pow_y = {0: (Fraction(1),)}

    def _pow(cache, base, n):
        if n not in cache:
            m = max(cache)
            acc = cache[m]
            while m < n:
                acc = dp.mul(acc, base)
                m += 1
                cache[m] = acc
        return cache[n]

    acc = ()
    for (i, j), v in p._c.items():
        term = dp.mul(_pow(pow_x, one_s, i - mx), _pow(pow_y, one_bs, j - my))
        acc = dp.add(acc, dp.scale(term, v))
    return acc
