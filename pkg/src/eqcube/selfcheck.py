"""Bundled invariant suite behind the `check` CLI subcommand.

Runs a fixed, seeded battery of the package's structural identities and
prints one pass/fail line per check.  Kept fast (a few seconds); the full
pytest suite is the authoritative gate.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .alexander import AlexanderPair, i_delta, j_delta
from .casson import SurgeryCoefficient, dedekind_sum, lambda_lens
from .diagrams import (DiagramVector, canonicalize, dumbbell, gauge_move,
                       permute_edges, psi, relabel_vertices, reverse_edge,
                       rotate_cyclic, swap_half_edges, theta,
                       enumerate_CS_n, normalization_constant)
from .halfint import HLPoly, OneVarFrac
from .pipeline import (ConnectedSumMove, FramingMove, Manifest, run_pipeline)
from .surgery import (SurgeryDatum, check_symmetry, lambda_e_prime, q_k,
                      reduce_mod_Qk, surgery_delta)
from .trivar import BiLaurent, TriVarElem, tri_eval_111, tri_invert, tri_symmetrize


def _rand_hl(rng, deg=2):
    return HLPoly.from_t({k: rng.randint(-4, 4) for k in range(-deg, deg + 1)})


def _rand_frac(rng, deg=2):
    num = _rand_hl(rng, deg)
    den = HLPoly.zero()
    while den.is_zero:
        den = _rand_hl(rng, 1)
    return OneVarFrac(num, den)


def _rand_tri(rng, deg=1):
    num = BiLaurent({(i, j): rng.randint(-3, 3)
                     for i in range(-deg, deg + 1)
                     for j in range(-deg, deg + 1)})
    den = BiLaurent.zero()
    while den.is_zero:
        den = BiLaurent({(i, j): rng.randint(-2, 2)
                         for i in range(0, deg + 1)
                         for j in range(0, deg + 1)})
    return TriVarElem(num, den)


def _rand_symmetric_pair(rng):
    c = Fraction(rng.randint(-3, 3))
    delta = HLPoly.from_t({1: c, 0: 1 - 2 * c, -1: c})
    return AlexanderPair(delta, delta)


def check_ring_axioms(rng):
    for _ in range(6):
        a, b, c = (_rand_frac(rng) for _ in range(3))
        if (a + b) * c != a * c + b * c or (a * b) * c != a * (b * c):
            return False
        u, v, w = (_rand_tri(rng) for _ in range(3))
        if (u + v) * w != u * w + v * w or (u * v) * w != u * (v * w):
            return False
    return True


def check_invert_automorphism(rng):
    for _ in range(8):
        a, b = _rand_frac(rng), _rand_frac(rng)
        if (a + b).invert_var() != a.invert_var() + b.invert_var():
            return False
        if (a * b).invert_var() != a.invert_var() * b.invert_var():
            return False
        if a.invert_var().invert_var() != a:
            return False
    return True


def check_symmetrize_fixed(rng):
    from .trivar import PERMUTATIONS
    for _ in range(4):
        f = _rand_tri(rng)
        s = tri_symmetrize(f)
        if any(s.substitute(p) != s for p in PERMUTATIONS):
            return False
        if tri_invert(tri_symmetrize(f)) != tri_symmetrize(tri_invert(f)):
            return False
    return True


def check_alexander_identities(rng):
    lead = OneVarFrac(HLPoly.from_t({0: 1, 1: 1}),
                      HLPoly.from_t({0: 1, 1: -1}))
    for _ in range(6):
        pair = _rand_symmetric_pair(rng)
        i, j = i_delta(pair), j_delta(pair)
        if i.invert_var() != -i or j.invert_var() != -j or i - j != lead:
            return False
    return True


def check_dedekind(rng):
    for p in range(2, 31):
        for q in range(1, p):
            if gcd(q, p) != 1:
                continue
            lhs = dedekind_sum(q, p) + dedekind_sum(p, q)
            rhs = (Fraction(-1, 4)
                   + (Fraction(p, q) + Fraction(q, p)
                      + Fraction(1, p * q)) / 12)
            if lhs != rhs:
                return False
            if dedekind_sum(-q, p) != -dedekind_sum(q, p):
                return False
    return all(lambda_lens(SurgeryCoefficient(s, qq)) == 0
               for s in (1, -1) for qq in range(1, 11))


def check_canonical_stability(rng):
    seeds = [theta(HLPoly.t(1), HLPoly.one(), HLPoly.t(-2)).support()[0],
             dumbbell(HLPoly.t(3), HLPoly.t(1)).support()[0]]
    movers = [
        lambda g: reverse_edge(g, rng.randrange(len(g.edges))),
        lambda g: gauge_move(g, rng.randrange(g.nv), rng.choice([-2, -1, 1, 2])),
        lambda g: relabel_vertices(g, rng.sample(range(g.nv), g.nv)),
        lambda g: permute_edges(g, rng.sample(range(len(g.edges)),
                                              len(g.edges))),
        lambda g: rotate_cyclic(g, rng.randrange(g.nv), rng.randrange(1, 3)),
    ]
    for g in seeds:
        target = canonicalize(g)
        h = g
        for _ in range(120):
            h = rng.choice(movers)(h)
        if canonicalize(h) != target:
            return False
        c, s = canonicalize(swap_half_edges(g, 0))
        if (c, -s) != target:
            return False
    return True


def check_psi(rng):
    if psi(theta(1, 1, 1)) != TriVarElem.from_rational(12):
        return False
    if psi(theta(HLPoly.t(1), HLPoly.t(1), HLPoly.t(1))) != psi(theta(1, 1, 1)):
        return False
    for _ in range(4):
        beads = [_rand_hl(rng, 1) for _ in range(3)]
        if any(b.is_zero for b in beads):
            continue
        if not check_symmetry(psi(theta(*beads))):
            return False
    return True


def _rand_datum(rng, g, pmax=7):
    def m():
        return [[Fraction(rng.randint(-3, 3)) for _ in range(g)]
                for _ in range(g)]
    while True:
        p = rng.randint(-pmax, pmax)
        q = rng.randint(-pmax, pmax)
        if p and q and gcd(abs(p), abs(q)) == 1:
            return SurgeryDatum.from_constant_blocks(m(), m(), m(), m(), p, q)


def check_surgery(rng):
    tref = SurgeryDatum.from_constant_blocks([[-1]], [[1]], [[0]], [[-1]], 1, 1)
    if lambda_e_prime(tref) != TriVarElem.from_rational(1):
        return False
    for _ in range(5):
        d = _rand_datum(rng, rng.randint(0, 2))
        sd = surgery_delta(d)
        if not check_symmetry(sd):
            return False
        lhs = tri_eval_111(sd)
        rhs = (Fraction(6 * d.coefficient.q, d.coefficient.p)
               * tri_eval_111(lambda_e_prime(d))
               + 6 * lambda_lens(d.coefficient))
        if lhs != rhs:
            return False
    return True


def check_framing_involution(rng):
    for _ in range(5):
        pair = _rand_symmetric_pair(rng)
        man = Manifest(pair, TriVarElem.zero(),
                       (FramingMove(1), FramingMove(-1)))
        rep = run_pipeline(man)
        if rep["final"]["Q"] != {"num": [], "den": [[0, 0, "1"]]}:
            return False
    return True


def check_reduction(rng):
    tref = HLPoly.from_t({1: 1, 0: -1, -1: 1})
    pair = AlexanderPair(tref, tref)
    rep, coords = reduce_mod_Qk(q_k(pair, 3), pair, 4, (-12, 12))
    if not rep.is_zero or coords[2] != 1:
        return False
    rep6, _ = reduce_mod_Qk(TriVarElem.from_rational(6), pair, 4, (-12, 12))
    rep6b, c6b = reduce_mod_Qk(rep6, pair, 4, (-12, 12))
    return (not rep6.is_zero) and rep6b == rep6 and all(c == 0 for c in c6b)


def check_enumeration(rng):
    return (len(enumerate_CS_n(1)) == 8
            and normalization_constant(1) == Fraction(1, 96))


def check_pipeline_basics(rng):
    empty = run_pipeline(Manifest(AlexanderPair.trivial(),
                                  TriVarElem.zero(), ()))
    if empty["final"]["eval_111"] != "0":
        return False
    one = run_pipeline(Manifest(AlexanderPair.trivial(), TriVarElem.zero(),
                                (ConnectedSumMove(Fraction(1)),)))
    return one["final"]["eval_111"] == "6"


CHECKS = [
    ("ring axioms (fractions, quotient ring)", check_ring_axioms),
    ("t -> 1/t is a ring automorphism", check_invert_automorphism),
    ("symmetrization is S3-fixed, commutes with inversion",
     check_symmetrize_fixed),
    ("I/J functional identities", check_alexander_identities),
    ("Dedekind reciprocity and lens values", check_dedekind),
    ("diagram canonical form stability", check_canonical_stability),
    ("psi values and symmetry", check_psi),
    ("surgery kernel and evaluation consistency", check_surgery),
    ("framing involution", check_framing_involution),
    ("reduction modulo the correction span", check_reduction),
    ("labeled graph enumeration", check_enumeration),
    ("pipeline base cases", check_pipeline_basics),
]


def run_all(seed: int = 0):
    """Run every check; returns a list of (name, passed) pairs."""
    results = []
    for name, fn in CHECKS:
        rng = random.Random(seed)
        try:
            ok = bool(fn(rng))
        except Exception:
            ok = False
        results.append((name, ok))
    return results
