"""Dense univariate polynomial helpers over Fraction.

A polynomial is a tuple of Fractions, constant term first; the zero
polynomial is the empty tuple.  These routines back the gcd machinery of
both the one-variable fractions (in the variable s = t^(1/2)) and the
coefficient arithmetic of the bivariate layer.
"""

from fractions import Fraction
from math import gcd as _igcd

ZERO = Fraction(0)
ONE = Fraction(1)


def trim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def is_zero(cs):
    return len(cs) == 0


def deg(cs):
    return len(cs) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def neg(a):
    return tuple(-c for c in a)


def sub(a, b):
    return add(a, neg(b))


def scale(a, q):
    if q == 0:
        return ()
    return tuple(c * q for c in a)


def mul(a, b):
    """Product; the zero seed is type-neutral so integer tuples stay
    integer."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return trim(out)


def divmod_(a, b):
    """Exact field division: returns (q, r) with a = q*b + r, deg r < deg b."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [ZERO] * max(len(a) - db, 0)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            f = c / lb
            q[i - db] = f
            for j in range(db + 1):
                r[i - db + j] -= f * b[j]
    return trim(q), trim(r)


def divexact(a, b):
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(a):
    if not a:
        return a
    lc = a[-1]
    if lc == 1:
        return a
    return tuple(c / lc for c in a)


# -- integer layer ------------------------------------------------------
# add/sub/mul/trim/scale above are type-agnostic and reused for int tuples;
# the gcd machinery runs on integer-cleared coefficients (primitive PRS)
# because Fraction normalization on every operation is far too slow.

def clear_denoms(a):
    """Fraction tuple -> integer tuple (scaled by the lcm of denominators)."""
    if not a:
        return ()
    lcm = 1
    for c in a:
        d = c.denominator
        lcm = lcm // _igcd(lcm, d) * d
    return tuple(c.numerator * (lcm // c.denominator) for c in a)


def i_content(a):
    g = 0
    for c in a:
        g = _igcd(g, c)
        if g == 1:
            return 1
    return g


def i_primitive(a):
    g = i_content(a)
    if g in (0, 1):
        return a
    return tuple(c // g for c in a)


def i_divexact(a, b):
    """Exact division in Z[x]; assumes b | a."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [0] * max(len(a) - db, 0)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            if c % lb:
                raise ArithmeticError("inexact integer polynomial division")
            f = c // lb
            q[i - db] = f
            for j in range(db + 1):
                r[i - db + j] -= f * b[j]
    if trim(r):
        raise ArithmeticError("inexact integer polynomial division")
    return trim(q)


def i_prem(a, b):
    """Pseudo-remainder in Z[x]: leading coefficients are cross-multiplied
    so the arithmetic stays integral."""
    db, lb = len(b) - 1, b[-1]
    r = trim(a)
    while r and len(r) - 1 >= db:
        dr, lr = len(r) - 1, r[-1]
        nxt = [c * lb for c in r[:-1]]
        while len(nxt) < dr:
            nxt.append(0)
        for j in range(db):
            nxt[dr - db + j] -= lr * b[j]
        r = trim(nxt)
    return r


def i_gcd(a, b):
    """Primitive-PRS gcd in Z[x]; result primitive with positive leading
    coefficient."""
    a, b = i_primitive(trim(a)), i_primitive(trim(b))
    if not a:
        a, b = b, a
    while b:
        r = i_prem(a, b)
        a, b = b, i_primitive(r)
    if a and a[-1] < 0:
        a = tuple(-c for c in a)
    return a


def gcd(a, b):
    """Monic gcd over Q; gcd((), b) = monic(b)."""
    a, b = trim(a), trim(b)
    if not a:
        return monic(b)
    if not b:
        return monic(a)
    g = i_gcd(clear_denoms(a), clear_denoms(b))
    return monic(tuple(Fraction(c) for c in g))


def gcd_many(polys):
    g = ()
    for p in polys:
        g = gcd(g, p)
        if len(g) == 1:
            return g
    return g


def eval_at(a, x):
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def valuation(a):
    """Index of the lowest nonzero coefficient (None for the zero poly)."""
    for i, c in enumerate(a):
        if c:
            return i
    return None
