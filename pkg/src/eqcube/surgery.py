"""The surgery calculus for the equivariant cube invariant.

Implements the equivariant surgery kernel from symplectic Seifert-basis
linking data, the additive corrections of the invariant Q under surgery,
connected sum, framing change and knot change, the correction span Q_k
whose quotient defines the induced manifold invariant, and the symmetry
predicate every Q value must satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .alexander import AlexanderPair, i_delta, j_delta
from .casson import SurgeryCoefficient, lambda_lens
from .errors import NonPolynomialV, WindowOverflow, ZeroP
from .halfint import HLPoly, OneVarFrac
from .trivar import (BiLaurent, TriVarElem, PERMUTATIONS, _bi_divexact,
                     _bi_lcm, embed, sum_fractions, tri_symmetrize)


def _as_frac(x) -> OneVarFrac:
    if isinstance(x, OneVarFrac):
        return x
    if isinstance(x, HLPoly):
        return OneVarFrac(x)
    return OneVarFrac(HLPoly.const(x))


def _matrix(rows, g, name):
    if len(rows) != g or any(len(r) != g for r in rows):
        raise ValueError(f"{name} must be a {g}x{g} matrix")
    return tuple(tuple(_as_frac(x) for x in r) for r in rows)


@dataclass(frozen=True)
class SurgeryDatum:
    """Equivariant linking data of a genus-g Seifert surface in symplectic
    basis (a_i, b_i), plus the surgery coefficient p/q.

    laa[i][j] = lk_e(a_i, a_j+), lab[i][j] = lk_e(a_i, b_j+),
    lba[i][j] = lk_e(b_i, a_j+), lbb[i][j] = lk_e(b_i, b_j+).
    """

    g: int
    laa: tuple
    lab: tuple
    lba: tuple
    lbb: tuple
    coefficient: SurgeryCoefficient

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be nonnegative")
        if self.coefficient.p == 0:
            raise ZeroP("surgery requires p != 0")
        object.__setattr__(self, "laa", _matrix(self.laa, self.g, "laa"))
        object.__setattr__(self, "lab", _matrix(self.lab, self.g, "lab"))
        object.__setattr__(self, "lba", _matrix(self.lba, self.g, "lba"))
        object.__setattr__(self, "lbb", _matrix(self.lbb, self.g, "lbb"))

    @classmethod
    def from_constant_blocks(cls, laa, lab, lba, lbb, p, q) -> "SurgeryDatum":
        g = len(laa)
        return cls(g, laa, lab, lba, lbb, SurgeryCoefficient(p, q))


def lambda_e_prime(d: SurgeryDatum) -> TriVarElem:
    """The equivariant surgery kernel

        (1/12) sum_{i,j} sum_{S3(x,y,z)} (alpha_ij(x,y)
                + alpha_ij(1/x,1/y) + beta_ij(x,y)),

    alpha_ij(x,y) = lk_e(a_i,a_j+)(x) lk_e(b_i,b_j+)(y)
                    - lk_e(a_i,b_j+)(x) lk_e(b_i,a_j+)(y),
    beta_ij(x,y)  = B_i(x) B_j(y) with B_i = lk_e(a_i,b_i+) - lk_e(b_i+,a_i),
    where the exchanged pairing lk_e(b_i+, a_i) is the t -> 1/t image of
    lk_e(a_i, b_i+) (bilinearity of the pairing forces the exchange rule).

    The result is S3-symmetric and inversion-invariant by construction.
    """
    alpha = TriVarElem.zero()
    bsum = OneVarFrac.zero()
    for i in range(d.g):
        bsum = bsum + (d.lab[i][i] - d.lab[i][i].invert_var())
        for j in range(d.g):
            alpha = alpha + (embed(d.laa[i][j], "x") * embed(d.lbb[i][j], "y")
                             - embed(d.lab[i][j], "x")
                             * embed(d.lba[i][j], "y"))
    bracket = alpha + alpha.invert_vars()
    if not bsum.is_zero:
        bx = embed(bsum, "x")
        bracket = bracket + bx * embed(bsum, "y")
    return tri_symmetrize(bracket).scale(Fraction(1, 12))


def surgery_delta(d: SurgeryDatum) -> TriVarElem:
    """Change of Q under p/q surgery: 6 (q/p) lambda_e_prime plus six times
    the Casson-Walker invariant of the companion lens space."""
    ratio = Fraction(6 * d.coefficient.q, d.coefficient.p)
    lens = 6 * lambda_lens(d.coefficient)
    return (lambda_e_prime(d).scale(ratio)
            + TriVarElem.from_rational(lens))


def connected_sum_delta(lambda_n) -> TriVarElem:
    """Change of Q under connected sum with a rational homology sphere of
    Casson-Walker invariant lambda_n: the constant 6 lambda_n."""
    return TriVarElem.from_rational(6 * Fraction(lambda_n))


@dataclass(frozen=True)
class FramedKnotChange:
    """Antisymmetric polynomial V measuring a framed-knot change."""

    V: HLPoly

    def __post_init__(self):
        if self.V.invert_var() != -self.V:
            raise ValueError("V must satisfy V(1/t) = -V(t)")


def framing_V(pair: AlexanderPair, n: int) -> FramedKnotChange:
    """V for a parallel shifted by n positive meridians:
    -n (delta/2) t Delta'/Delta.  Requires delta * J to be polynomial."""
    dj = OneVarFrac(pair.delta) * j_delta(pair)
    if not dj.is_polynomial:
        raise NonPolynomialV(
            "delta * t Delta'/Delta is not a Laurent polynomial; "
            "delta is incompatible with Delta")
    return FramedKnotChange(dj.num.scale(Fraction(-n, 2)))


def seifert_V(pair: AlexanderPair, diag) -> FramedKnotChange:
    """V from a bounding surface with diagonal equivariant linkings
    diag[i] = lk_e(a_i, b_i+): V = delta * sum_i (L_i(t) - L_i(1/t))."""
    acc = OneVarFrac.zero()
    for L in diag:
        L = _as_frac(L)
        acc = acc + (L - L.invert_var())
    v = OneVarFrac(pair.delta) * acc
    if not v.is_polynomial:
        raise NonPolynomialV(
            "delta * sum(lk_e differences) is not a Laurent polynomial")
    return FramedKnotChange(v.num)


def _sym_product(u: OneVarFrac, pair: AlexanderPair) -> TriVarElem:
    """sum over S3(x,y,z) of u(x) I_Delta(y)."""
    return tri_symmetrize(embed(u, "x") * embed(i_delta(pair), "y"))


def knot_change_delta(v: FramedKnotChange, pair: AlexanderPair) -> TriVarElem:
    """Change of Q under a change of framed generating knot:
    sum over S3 of (V(x)/delta(x)) I_Delta(y)."""
    if v.V.is_zero:
        return TriVarElem.zero()
    return _sym_product(OneVarFrac(v.V) / OneVarFrac(pair.delta), pair)


@lru_cache(maxsize=None)
def q_k(pair: AlexanderPair, k: int) -> TriVarElem:
    """The correction span element
    sum over S3(x,y,z) of ((x^k - x^-k)/delta(x)) I_Delta(y)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    bead = HLPoly({2 * k: 1, -2 * k: -1})
    return _sym_product(OneVarFrac(bead) / OneVarFrac(pair.delta), pair)


def check_symmetry(f: TriVarElem) -> bool:
    """True iff f is fixed by all six permutations of (x, y, z) and by
    (x, y, z) -> (1/x, 1/y, 1/z)."""
    return (all(f.substitute(p) == f for p in PERMUTATIONS)
            and f.invert_vars() == f)


def reduce_mod_Qk(f: TriVarElem, pair: AlexanderPair, k_max: int, window):
    """Normal form of f modulo span{Q_k : 1 <= k <= k_max}.

    Everything is put over a common cleared denominator built from the Q_k
    denominators (the delta and I_Delta poles), so the column layout and
    the pivot structure depend only on (pair, k_max); this makes the row
    reduction a canonical projection and the operation idempotent and
    Q-linear.  All Laurent coefficient vectors must fit inside
    window = (lo, hi) on both exponents, else WindowOverflow.

    Returns (representative, coordinates) with
    f = sum coordinates[k-1] * Q_k + representative.
    """
    lo, hi = window
    if lo > hi:
        raise ValueError("empty window")
    qs = [q_k(pair, k) for k in range(1, k_max + 1)]
    big = {(0, 0): Fraction(1)}
    for g in qs:
        big = _bi_lcm(big, g.den.origin()[0])
    fden = f.den.origin()[0]
    big = _bi_lcm(big, fden)

    def cleared(g):
        mult = _bi_divexact(big, g.den.origin()[0])
        mx, my = g.den.min_exps()
        return _bi_mul_dict(g.num.shift(-mx, -my)._c, mult)

    qnums = [cleared(g) for g in qs]
    # Recenter by a common monomial chosen from the Q_k supports alone, so
    # the layout stays canonical and symmetric supports sit symmetrically.
    keys = [k for num in qnums for k in num]
    cx = cy = 0
    if keys:
        xs = [i for i, _ in keys]
        ys = [j for _, j in keys]
        cx = -((min(xs) + max(xs)) // 2)
        cy = -((min(ys) + max(ys)) // 2)
    recenter = (lambda num: {(i + cx, j + cy): c
                             for (i, j), c in num.items()})
    qnums = [recenter(num) for num in qnums]
    fnum = recenter(cleared(f)) if not f.is_zero else {}
    for what, num in [("f", fnum)] + [(f"Q_{k+1}", num)
                                      for k, num in enumerate(qnums)]:
        for (i, j) in num:
            if not (lo <= i <= hi and lo <= j <= hi):
                raise WindowOverflow(
                    f"{what} has exponent ({i}, {j}) outside [{lo}, {hi}] "
                    f"after clearing denominators")
    cols = sorted(set(fnum) | {k for num in qnums for k in num})
    col_index = {k: i for i, k in enumerate(cols)}

    def vec(num):
        row = [Fraction(0)] * len(cols)
        for k, c in num.items():
            row[col_index[k]] = c
        return row

    rows = [vec(num) for num in qnums]
    trans = [[Fraction(int(i == j)) for j in range(k_max)]
             for i in range(k_max)]
    pivots = []
    r = 0
    for c in range(len(cols)):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        trans[r], trans[piv] = trans[piv], trans[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        trans[r] = [x * inv for x in trans[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [a - fac * b for a, b in zip(rows[i], rows[r])]
                trans[i] = [a - fac * b for a, b in zip(trans[i], trans[r])]
        pivots.append((r, c))
        r += 1
    fvec = vec(fnum)
    coords = [Fraction(0)] * k_max
    for (rr, cc) in pivots:
        fac = fvec[cc]
        if fac:
            fvec = [a - fac * b for a, b in zip(fvec, rows[rr])]
            coords = [a + fac * b for a, b in zip(coords, trans[rr])]
    resid = {cols[i]: c for i, c in enumerate(fvec) if c}
    rep = TriVarElem(BiLaurent(resid), BiLaurent(big).shift(cx, cy))
    return rep, tuple(coords)


def _bi_mul_dict(a, b):
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
