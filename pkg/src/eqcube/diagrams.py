"""Beaded trivalent diagrams and their canonical forms.

A monomial diagram is an oriented trivalent multigraph whose edges carry
beads t^a * delta(t)^-b and whose vertices carry a cyclic order of their
three incident half-edges.  The diagram space is spanned by such graphs
modulo:

1. reversing an edge while negating its exponent (delta is symmetric, so
   the delta power is untouched);
2. Q-linearity in the beads (general beads are expanded into monomials);
3. the gauge action of Z^V on exponents, a_e -> a_e + n(head) - n(tail),
   which fixes loop exponents;
4. antisymmetry: reversing one vertex's cyclic order negates the diagram;
5. the three-term edge-reconnection (Jacobi) relation, which is *not*
   folded into the canonical form but exposed as a relation generator.

Half-edge convention: edge number e owns half-edges 2e (tail end) and
2e+1 (head end); each vertex's cyclic order is a triple of half-edge ids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import BadBead, NonThetaSupport, WindowTooLarge
from .halfint import HLPoly, OneVarFrac, _q
from .trivar import TriVarElem, embed, tri_symmetrize


# ---------------------------------------------------------------------------
# MonGraph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonGraph:
    """Monomial-beaded oriented trivalent graph.

    nv      -- number of vertices (even);
    edges   -- tuple of (tail, head, a, b): bead t^a * delta^-b;
    cyclic  -- per vertex, its three incident half-edge ids in cyclic order.
    """

    nv: int
    edges: tuple
    cyclic: tuple

    def __post_init__(self):
        if self.nv <= 0 or self.nv % 2:
            raise ValueError("vertex count must be a positive even number")
        if 2 * len(self.edges) != 3 * self.nv:
            raise ValueError("a trivalent graph on 2n vertices needs 3n edges")
        incident = {v: [] for v in range(self.nv)}
        for e, (t, h, a, b) in enumerate(self.edges):
            if not (0 <= t < self.nv and 0 <= h < self.nv):
                raise ValueError(f"edge {e} endpoint out of range")
            if b < 0:
                raise ValueError(f"edge {e} has negative delta power")
            incident[t].append(2 * e)
            incident[h].append(2 * e + 1)
        if len(self.cyclic) != self.nv:
            raise ValueError("one cyclic order per vertex required")
        for v, triple in enumerate(self.cyclic):
            if len(triple) != 3 or sorted(triple) != sorted(incident[v]):
                raise ValueError(
                    f"cyclic order at vertex {v} must list its three "
                    f"incident half-edges, got {triple}")

    def is_loop(self, e: int) -> bool:
        t, h, _, _ = self.edges[e]
        return t == h


# --- moves generating the relations (used by tests and callers) -----------

def reverse_edge(g: MonGraph, e: int) -> MonGraph:
    """Relation 1: reverse edge e and negate its exponent.  No sign."""
    t, h, a, b = g.edges[e]
    edges = list(g.edges)
    edges[e] = (h, t, -a, b)
    lo, hi = 2 * e, 2 * e + 1
    swap = {lo: hi, hi: lo}
    cyclic = tuple(tuple(swap.get(x, x) for x in tri) for tri in g.cyclic)
    return MonGraph(g.nv, tuple(edges), cyclic)


def gauge_move(g: MonGraph, v: int, n: int = 1) -> MonGraph:
    """Relation 3: add n to exponents of edges into v, subtract on edges
    out of v.  Loop exponents are untouched.  No sign."""
    edges = []
    for (t, h, a, b) in g.edges:
        a += n * ((h == v) - (t == v))
        edges.append((t, h, a, b))
    return MonGraph(g.nv, tuple(edges), g.cyclic)


def relabel_vertices(g: MonGraph, perm) -> MonGraph:
    """Rename vertex v to perm[v].  No sign."""
    edges = tuple((perm[t], perm[h], a, b) for (t, h, a, b) in g.edges)
    cyclic = [None] * g.nv
    for v, tri in enumerate(g.cyclic):
        cyclic[perm[v]] = tri
    return MonGraph(g.nv, edges, tuple(cyclic))


def permute_edges(g: MonGraph, perm) -> MonGraph:
    """Renumber edge e to perm[e] (renaming half-edge ids).  No sign."""
    edges = [None] * len(g.edges)
    idmap = {}
    for e, rec in enumerate(g.edges):
        edges[perm[e]] = rec
        idmap[2 * e] = 2 * perm[e]
        idmap[2 * e + 1] = 2 * perm[e] + 1
    cyclic = tuple(tuple(idmap[x] for x in tri) for tri in g.cyclic)
    return MonGraph(g.nv, tuple(edges), cyclic)


def rotate_cyclic(g: MonGraph, v: int, r: int = 1) -> MonGraph:
    """Rotate the cyclic order at v (pure re-encoding).  No sign."""
    r %= 3
    cyclic = list(g.cyclic)
    tri = cyclic[v]
    cyclic[v] = tri[r:] + tri[:r]
    return MonGraph(g.nv, g.edges, tuple(cyclic))


def swap_half_edges(g: MonGraph, v: int) -> MonGraph:
    """Relation 4 (AS): transpose two half-edges at v.  Sign -1."""
    cyclic = list(g.cyclic)
    a, b, c = cyclic[v]
    cyclic[v] = (b, a, c)
    return MonGraph(g.nv, g.edges, tuple(cyclic))


# --- canonical form --------------------------------------------------------

def _cyc_least(tri):
    a, b, c = tri
    return min((a, b, c), (b, c, a), (c, a, b))


def _gauge_potentials(nv, recs):
    """Deterministic gauge potentials: on a spanning forest of the
    endpoint structure, shift so the minimal class exponent is zero."""
    pair_min = {}
    for t, h, a, _b, _e, _f in recs:
        if t != h:
            k = (t, h)
            if k not in pair_min or a < pair_min[k]:
                pair_min[k] = a
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adj = {v: [] for v in range(nv)}
    for (t, h) in sorted(pair_min):
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[rt] = rh
            m = pair_min[(t, h)]
            adj[t].append((h, -m))
            adj[h].append((t, m))
    pot = [None] * nv
    for v in range(nv):
        if pot[v] is None:
            pot[v] = 0
            stack = [v]
            while stack:
                u = stack.pop()
                for w, d in adj[u]:
                    if pot[w] is None:
                        pot[w] = pot[u] + d
                        stack.append(w)
    return pot


def canonicalize(g: MonGraph):
    """Canonical form of a monomial diagram under relations 1, 3, 4 and
    vertex/edge renaming.

    Returns (canonical graph, sign).  The sign satisfies
    [g] = sign * [canonical]; it is 0 when the diagram is forced to vanish
    by antisymmetry (both signs reach the same canonical encoding).
    """
    nv = len(g.cyclic)
    loops = [e for e in range(len(g.edges)) if g.is_loop(e)]
    best_edges = None
    tied = []
    for perm in itertools.permutations(range(nv)):
        base = []
        for e, (t, h, a, b) in enumerate(g.edges):
            tt, hh = perm[t], perm[h]
            if tt <= hh:
                base.append([tt, hh, a, b, e, False])
            else:
                base.append([hh, tt, -a, b, e, True])
        for mask in range(1 << len(loops)):
            recs = [r[:] for r in base]
            for i, e in enumerate(loops):
                if mask >> i & 1:
                    recs[e][2] = -recs[e][2]
                    recs[e][5] = True
            pot = _gauge_potentials(nv, recs)
            for r in recs:
                if r[0] != r[1]:
                    r[2] += pot[r[1]] - pot[r[0]]
            recs.sort(key=lambda r: r[:4])
            key = tuple((r[0], r[1], r[2], r[3]) for r in recs)
            if best_edges is None or key < best_edges:
                best_edges = key
                tied = [(perm, recs)]
            elif key == best_edges:
                tied.append((perm, recs))

    groups = []
    start = 0
    for i in range(1, len(best_edges) + 1):
        if i == len(best_edges) or best_edges[i] != best_edges[start]:
            groups.append((start, i))
            start = i
    best_cyc = None
    signs = set()
    for perm, recs in tied:
        inv = [0] * nv
        for old, new in enumerate(perm):
            inv[new] = old
        for assign in itertools.product(
                *(itertools.permutations(range(s, e)) for s, e in groups)):
            slots = [s for grp in assign for s in grp]
            idmap = {}
            for pos, slot in enumerate(slots):
                _t, _h, _a, _b, orig, flipped = recs[pos]
                if flipped:
                    idmap[2 * orig] = 2 * slot + 1
                    idmap[2 * orig + 1] = 2 * slot
                else:
                    idmap[2 * orig] = 2 * slot
                    idmap[2 * orig + 1] = 2 * slot + 1
            sign = 1
            cyc = []
            for v in range(nv):
                tri = tuple(idmap[x] for x in g.cyclic[inv[v]])
                fwd = _cyc_least(tri)
                rev = _cyc_least((tri[2], tri[1], tri[0]))
                if fwd < rev:
                    cyc.append(fwd)
                else:
                    cyc.append(rev)
                    sign = -sign
            cyc = tuple(cyc)
            if best_cyc is None or cyc < best_cyc:
                best_cyc = cyc
                signs = {sign}
            elif cyc == best_cyc:
                signs.add(sign)
    canon = MonGraph(nv, best_edges, best_cyc)
    sign = 0 if len(signs) == 2 else signs.pop()
    return canon, sign


# ---------------------------------------------------------------------------
# DiagramVector
# ---------------------------------------------------------------------------

class DiagramVector:
    """Q-linear combination of canonical monomial diagrams."""

    __slots__ = ("_m",)

    def __init__(self, mapping=None):
        self._m = {}
        if mapping:
            for graph, c in mapping.items():
                self._add_canonical(graph, _q(c))

    def _add_canonical(self, graph, c):
        if not c:
            return
        w = self._m.get(graph, 0) + c
        if w:
            self._m[graph] = w
        else:
            del self._m[graph]

    @classmethod
    def zero(cls) -> "DiagramVector":
        return cls()

    @classmethod
    def single(cls, graph: MonGraph, coeff=1) -> "DiagramVector":
        """Canonicalize graph and return coeff * [graph]."""
        coeff = _q(coeff)
        out = cls()
        if coeff:
            canon, sign = canonicalize(graph)
            if sign:
                out._m[canon] = coeff * sign
        return out

    @property
    def is_zero(self) -> bool:
        return not self._m

    def items(self):
        return tuple(sorted(self._m.items(),
                            key=lambda kv: (kv[0].edges, kv[0].cyclic)))

    def support(self):
        return tuple(g for g, _ in self.items())

    def coeff(self, graph) -> Fraction:
        return self._m.get(graph, Fraction(0))

    def __add__(self, other):
        out = DiagramVector()
        out._m = dict(self._m)
        for graph, c in other._m.items():
            out._add_canonical(graph, c)
        return out

    def __neg__(self):
        out = DiagramVector()
        out._m = {g: -c for g, c in self._m.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, q) -> "DiagramVector":
        q = _q(q)
        out = DiagramVector()
        if q:
            out._m = {g: c * q for g, c in self._m.items()}
        return out

    def __eq__(self, other):
        if not isinstance(other, DiagramVector):
            return NotImplemented
        return self._m == other._m

    def __hash__(self):
        return hash(self.items())

    def __repr__(self):
        if not self._m:
            return "DiagramVector(0)"
        return "DiagramVector({} graphs)".format(len(self._m))


# ---------------------------------------------------------------------------
# beads and diagram builders
# ---------------------------------------------------------------------------

def as_bead(obj):
    """Coerce to a (Laurent polynomial, delta power) bead.

    Accepts an HLPoly, a rational, or a (poly, b) pair; the polynomial part
    must have integer exponents and b must be a nonnegative integer.
    """
    if isinstance(obj, tuple):
        poly, b = obj
    else:
        poly, b = obj, 0
    if isinstance(poly, (int, Fraction)):
        poly = HLPoly.const(poly)
    if not isinstance(poly, HLPoly):
        raise BadBead(f"cannot interpret {obj!r} as a bead")
    if not isinstance(b, int) or b < 0:
        raise BadBead("delta power must be a nonnegative integer")
    if poly.has_half_exponents():
        raise BadBead("bead polynomials must have integer exponents")
    return poly, b


def build_diagram(skeleton: MonGraph, beads) -> DiagramVector:
    """Expand one bead per edge of a bare skeleton into a combination of
    canonical monomial diagrams (relation 2 / linearity)."""
    if any(a or b for (_t, _h, a, b) in skeleton.edges):
        raise ValueError("skeleton edges must carry the trivial bead (0, 0)")
    beads = [as_bead(b) for b in beads]
    if len(beads) != len(skeleton.edges):
        raise ValueError("need exactly one bead per edge")
    choices = []
    for poly, b in beads:
        choices.append([(k2 // 2, b, c) for k2, c in poly.terms()])
    out = DiagramVector()
    for combo in itertools.product(*choices):
        coeff = Fraction(1)
        edges = []
        for (t, h, _a, _b), (a, b, c) in zip(skeleton.edges, combo):
            coeff *= c
            edges.append((t, h, a, b))
        graph = MonGraph(skeleton.nv, tuple(edges), skeleton.cyclic)
        out = out + DiagramVector.single(graph, coeff)
    return out


_THETA_SKELETON = MonGraph(
    2, ((0, 1, 0, 0), (0, 1, 0, 0), (0, 1, 0, 0)),
    ((0, 2, 4), (1, 3, 5)))

_DUMBBELL_SKELETON = MonGraph(
    2, ((0, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)),
    ((0, 1, 2), (3, 4, 5)))


def theta(p, q, r) -> DiagramVector:
    """Two vertices joined by three parallel co-oriented beaded edges."""
    return build_diagram(_THETA_SKELETON, (p, q, r))


def dumbbell(p, q) -> DiagramVector:
    """Two beaded loops joined by a bridge carrying the bead 1."""
    return build_diagram(_DUMBBELL_SKELETON, (p, 1, q))


# ---------------------------------------------------------------------------
# psi
# ---------------------------------------------------------------------------

def _is_theta_shaped(g: MonGraph) -> bool:
    return (g.nv == 2 and len(g.edges) == 3
            and all((t, h) == (0, 1) for (t, h, _a, _b) in g.edges))


def psi(v: DiagramVector, delta: HLPoly = None) -> TriVarElem:
    """Evaluate a degree-one diagram vector into the quotient ring.

    On a beaded theta with beads P, Q, R this is
    sum over the six permutations of (x, y, z) of
    P(x)Q(y)R(z) + P(1/x)Q(1/y)R(1/z), with z = (xy)^-1.  Diagrams that are
    not theta-shaped are rejected (NonThetaSupport): the evaluation is
    defined only by its theta values.
    """
    if delta is None:
        delta = HLPoly.one()
    if delta.is_zero:
        raise ValueError("delta must be nonzero")
    acc = TriVarElem.zero()
    for graph, coeff in v.items():
        if not _is_theta_shaped(graph):
            raise NonThetaSupport(
                "psi is defined only on theta-shaped diagrams")
        ref = MonGraph(2, graph.edges, _THETA_SKELETON.cyclic)
        ref_canon, sign = canonicalize(ref)
        if ref_canon != graph or sign == 0:
            raise AssertionError("inconsistent canonical theta form")
        fracs = [OneVarFrac(HLPoly.t(a), delta ** b)
                 for (_t, _h, a, b) in graph.edges]
        term = (embed(fracs[0], "x") * embed(fracs[1], "y")
                * embed(fracs[2], "z"))
        contrib = tri_symmetrize(term + term.invert_vars())
        acc = acc + contrib.scale(coeff * sign)
    return acc


# ---------------------------------------------------------------------------
# IHX relation generation
# ---------------------------------------------------------------------------

def _ihx_partners(g: MonGraph, f: int):
    """The two reconnections of g along the non-loop edge f (bead 1).

    With cyclic orders (f, a, b) at the tail and (f, c, d) at the head,
    the relation states
        [f,a,b | f,c,d] + [f,a,c | f,d,b] + [f,a,d | f,b,c] = 0.
    """
    t, h, _a, _b = g.edges[f]
    hf_t, hf_h = 2 * f, 2 * f + 1

    def rot(tri, first):
        i = tri.index(first)
        return tri[i:] + tri[:i]

    tu = rot(g.cyclic[t], hf_t)
    tv = rot(g.cyclic[h], hf_h)
    ha, hb = tu[1], tu[2]
    hc, hd = tv[1], tv[2]

    def rebuild(move_to_t, move_to_h, tri_t, tri_h):
        edges = [list(rec) for rec in g.edges]
        for hid, new_v in ((move_to_t, t), (move_to_h, h)):
            rec = edges[hid // 2]
            rec[hid % 2] = new_v
        cyclic = list(g.cyclic)
        cyclic[t] = tri_t
        cyclic[h] = tri_h
        return MonGraph(g.nv, tuple(tuple(r) for r in edges), tuple(cyclic))

    t2 = rebuild(hc, hb, (hf_t, ha, hc), (hf_h, hd, hb))
    t3 = rebuild(hd, hb, (hf_t, ha, hd), (hf_h, hb, hc))
    return t2, t3


def ihx_relation(g: MonGraph, f: int) -> DiagramVector:
    """The three-term reconnection relation of g along edge f."""
    t, h, a, b = g.edges[f]
    if t == h:
        raise ValueError("the reconnection edge must join distinct vertices")
    if a or b:
        raise ValueError("the reconnection edge must carry the bead 1")
    t2, t3 = _ihx_partners(g, f)
    return (DiagramVector.single(g) + DiagramVector.single(t2)
            + DiagramVector.single(t3))


def _trivalent_multigraphs(nv):
    """Loop-allowing trivalent multigraphs on nv vertices, up to
    isomorphism, as sorted tuples of endpoint pairs."""
    pairs = [(u, v) for u in range(nv) for v in range(u, nv)]
    sols = []
    deg = [0] * nv

    def rec(i, acc):
        if i == len(pairs):
            if all(d == 3 for d in deg):
                sols.append(tuple(acc))
            return
        u, v = pairs[i]
        step = 2 if u == v else 1
        top = min((3 - deg[u]) // step if u == v else 3 - deg[u],
                  3 if u == v else 3 - deg[v])
        for m in range(0, max(top, 0) + 1):
            deg[u] += step * m
            deg[v] += (0 if u == v else m)
            acc.extend([(u, v)] * m)
            rec(i + 1, acc)
            del acc[len(acc) - m:]
            deg[u] -= step * m
            deg[v] -= (0 if u == v else m)

    rec(0, [])
    seen = set()
    out = []
    for sol in sols:
        canon = min(
            tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in sol))
            for p in itertools.permutations(range(nv)))
        if canon not in seen:
            seen.add(canon)
            out.append(canon)
    return sorted(out)


def _default_cyclic(nv, edges):
    incident = {v: [] for v in range(nv)}
    for e, (t, h) in enumerate(edges):
        incident[t].append(2 * e)
        incident[h].append(2 * e + 1)
    return tuple(tuple(sorted(incident[v])) for v in range(nv))


def ihx_relations(n: int, a_window, b_max: int, cap: int = 20000):
    """All three-term reconnection relations anchored at canonical diagrams
    with 2n vertices, exponents inside a_window = (lo, hi) and delta powers
    at most b_max.  Raises WindowTooLarge past the cap."""
    if n < 1 or n > 3:
        raise ValueError("n must be between 1 and 3")
    lo, hi = a_window
    if lo > hi:
        return []
    if b_max < 0:
        raise ValueError("b_max must be nonnegative")
    span = (hi - lo + 1) * (b_max + 1)
    skeletons = _trivalent_multigraphs(2 * n)
    total = sum(span ** len(s) for s in skeletons)
    if total > cap:
        raise WindowTooLarge(
            f"{total} bead assignments exceed the cap of {cap}")
    canon = set()
    bead_options = [(a, b) for a in range(lo, hi + 1)
                    for b in range(b_max + 1)]
    for skel in skeletons:
        cyc = _default_cyclic(2 * n, skel)
        for combo in itertools.product(bead_options, repeat=len(skel)):
            edges = tuple((t, h, a, b)
                          for (t, h), (a, b) in zip(skel, combo))
            c, s = canonicalize(MonGraph(2 * n, edges, cyc))
            if s:
                canon.add(c)
    rels = []
    for g in sorted(canon, key=lambda m: (m.edges, m.cyclic)):
        for f, (t, h, a, b) in enumerate(g.edges):
            if t != h and a == 0 and b == 0:
                rels.append(ihx_relation(g, f))
    return rels


# ---------------------------------------------------------------------------
# labeled graphs for the degree-n normalization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LabeledGraph:
    """Connected loop-free trivalent graph with numbered vertices 1..2n and
    numbered oriented edges 1..3n (the edge tuple is the numbering)."""

    n: int
    edges: tuple

    def __post_init__(self):
        nv, ne = 2 * self.n, 3 * self.n
        if len(self.edges) != ne:
            raise ValueError(f"expected {ne} edges")
        deg = [0] * (nv + 1)
        parent = list(range(nv + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (t, h) in self.edges:
            if not (1 <= t <= nv and 1 <= h <= nv):
                raise ValueError("vertex label out of range")
            if t == h:
                raise ValueError("loops are not allowed")
            deg[t] += 1
            deg[h] += 1
            parent[find(t)] = find(h)
        if any(deg[v] != 3 for v in range(1, nv + 1)):
            raise ValueError("graph must be trivalent")
        if len({find(v) for v in range(1, nv + 1)}) != 1:
            raise ValueError("graph must be connected")


def enumerate_CS_n(n: int):
    """All connected loop-free trivalent graphs with numbered vertices and
    numbered oriented edges, by exhaustive assignment (sorted output)."""
    if n < 1 or n > 3:
        raise ValueError("n must be between 1 and 3")
    nv, ne = 2 * n, 3 * n
    ordered_pairs = [(t, h) for t in range(1, nv + 1)
                     for h in range(1, nv + 1) if t != h]
    out = []
    deg = [0] * (nv + 1)
    acc = []

    def rec(slot):
        remaining = ne - slot
        if remaining == 0:
            parent = list(range(nv + 1))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for (t, h) in acc:
                parent[find(t)] = find(h)
            if len({find(v) for v in range(1, nv + 1)}) == 1:
                out.append(LabeledGraph(n, tuple(acc)))
            return
        if any(3 - deg[v] > remaining for v in range(1, nv + 1)):
            return
        for (t, h) in ordered_pairs:
            if deg[t] < 3 and deg[h] < 3:
                deg[t] += 1
                deg[h] += 1
                acc.append((t, h))
                rec(slot + 1)
                acc.pop()
                deg[t] -= 1
                deg[h] -= 1

    rec(0)
    return out


def normalization_constant(n: int) -> Fraction:
    """1 / (2^(3n) (3n)! (2n)!)."""
    return Fraction(1, 2 ** (3 * n) * factorial(3 * n) * factorial(2 * n))
