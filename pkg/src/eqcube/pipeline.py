"""Manifest-driven pipelines of topological moves.

A pipeline starts from a rank-one state (Delta, delta, Q) -- by default the
product state with Delta = delta = 1 and Q = 0 -- and folds moves:

  surgery        p/q surgery on a null-homologous knot, with the post-move
                 (Delta, delta) supplied explicitly in the manifest (the
                 transformation of the Alexander data under surgery is not
                 part of this calculus and is never inferred);
  connected_sum  connected sum with a rational homology sphere of known
                 Casson-Walker invariant (Delta, delta unchanged);
  framing        change of the framing by n meridians (same manifold);
  knot_change    change of the generating framed knot measured by an
                 antisymmetric polynomial V (same manifold).

After every move the running Q must pass the S3 x inversion symmetry
check; a failure aborts with SymmetryViolation and the move index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import encoding as enc
from .alexander import AlexanderPair
from .casson import SurgeryCoefficient
from .errors import ManifestError, NoLimit, HalfPowerResidue, SymmetryViolation
from .halfint import HLPoly, OneVarFrac
from .surgery import (FramedKnotChange, SurgeryDatum, check_symmetry,
                      connected_sum_delta, framing_V, knot_change_delta,
                      reduce_mod_Qk, surgery_delta)
from .trivar import BiLaurent, TriVarElem, embed, tri_eval_111

RING_NOTE = ("all values are stored in the common fraction field Q(x, y) "
             "with z = (xy)^-1 eliminated; denominators are not coerced "
             "into any particular R_delta when delta changes across a move")


@dataclass(frozen=True)
class SurgeryMove:
    datum: SurgeryDatum
    pair_after: AlexanderPair


@dataclass(frozen=True)
class ConnectedSumMove:
    lambda_n: Fraction


@dataclass(frozen=True)
class FramingMove:
    n: int


@dataclass(frozen=True)
class KnotChangeMove:
    change: FramedKnotChange


@dataclass(frozen=True)
class Manifest:
    initial_pair: AlexanderPair
    initial_q: TriVarElem
    moves: tuple


@dataclass
class PipelineState:
    """Running (Delta, delta, Q) with a log of applied move kinds."""

    alex: AlexanderPair
    Q: TriVarElem
    log: list = field(default_factory=list)


def _require(cond, msg):
    if not cond:
        raise ManifestError(msg)


def parse_manifest(doc) -> Manifest:
    _require(isinstance(doc, dict), "manifest must be a JSON object")
    unknown = set(doc) - {"initial", "moves"}
    _require(not unknown, f"unknown manifest keys: {sorted(unknown)}")
    initial = doc.get("initial", {})
    _require(isinstance(initial, dict), "initial must be an object")
    unknown = set(initial) - {"Delta", "delta", "Q"}
    _require(not unknown, f"unknown initial keys: {sorted(unknown)}")
    delta_big = (enc.parse_hlpoly(initial["Delta"], "initial.Delta")
                 if "Delta" in initial else HLPoly.one())
    delta_small = (enc.parse_hlpoly(initial["delta"], "initial.delta")
                   if "delta" in initial else HLPoly.one())
    try:
        pair = AlexanderPair(delta_big, delta_small)
    except ValueError as exc:
        raise ManifestError(f"initial: {exc}") from None
    q0 = (enc.parse_trivar(initial["Q"], "initial.Q") if "Q" in initial
          else TriVarElem.zero())
    moves_doc = doc.get("moves", [])
    _require(isinstance(moves_doc, list), "moves must be a list")
    moves = []
    for i, mdoc in enumerate(moves_doc):
        moves.append(_parse_move(mdoc, f"moves[{i}]"))
    return Manifest(pair, q0, tuple(moves))


def _parse_move(mdoc, where):
    _require(isinstance(mdoc, dict), f"{where}: move must be an object")
    kind = mdoc.get("type")
    if kind == "surgery":
        allowed = {"type", "g", "Laa", "Lab", "Lba", "Lbb", "p", "q",
                   "Delta_after", "delta_after"}
        unknown = set(mdoc) - allowed
        _require(not unknown, f"{where}: unknown keys {sorted(unknown)}")
        for key in ("g", "Laa", "Lab", "Lba", "Lbb", "p", "q",
                    "Delta_after", "delta_after"):
            _require(key in mdoc, f"{where}: missing {key!r}")
        g = mdoc["g"]
        _require(isinstance(g, int) and g >= 0,
                 f"{where}.g: expected a nonnegative integer")
        _require(isinstance(mdoc["p"], int) and isinstance(mdoc["q"], int),
                 f"{where}: p and q must be integers")

        def mat(key):
            rows = mdoc[key]
            _require(isinstance(rows, list) and len(rows) == g,
                     f"{where}.{key}: expected {g} rows")
            out = []
            for r, row in enumerate(rows):
                _require(isinstance(row, list) and len(row) == g,
                         f"{where}.{key}[{r}]: expected {g} entries")
                out.append(tuple(enc.parse_frac(x, f"{where}.{key}[{r}][{c}]")
                                 for c, x in enumerate(row)))
            return tuple(out)

        try:
            coeff = SurgeryCoefficient(mdoc["p"], mdoc["q"])
        except ValueError as exc:
            raise ManifestError(f"{where}: {exc}") from None
        try:
            datum = SurgeryDatum(g, mat("Laa"), mat("Lab"), mat("Lba"),
                                 mat("Lbb"), coeff)
            pair_after = AlexanderPair(
                enc.parse_hlpoly(mdoc["Delta_after"], f"{where}.Delta_after"),
                enc.parse_hlpoly(mdoc["delta_after"], f"{where}.delta_after"))
        except ValueError as exc:
            raise ManifestError(f"{where}: {exc}") from None
        return SurgeryMove(datum, pair_after)
    if kind == "connected_sum":
        unknown = set(mdoc) - {"type", "lambda"}
        _require(not unknown, f"{where}: unknown keys {sorted(unknown)}")
        _require("lambda" in mdoc, f"{where}: missing 'lambda'")
        return ConnectedSumMove(enc.parse_rational(mdoc["lambda"],
                                                   f"{where}.lambda"))
    if kind == "framing":
        unknown = set(mdoc) - {"type", "n"}
        _require(not unknown, f"{where}: unknown keys {sorted(unknown)}")
        _require(isinstance(mdoc.get("n"), int),
                 f"{where}.n: expected an integer")
        return FramingMove(mdoc["n"])
    if kind == "knot_change":
        unknown = set(mdoc) - {"type", "V"}
        _require(not unknown, f"{where}: unknown keys {sorted(unknown)}")
        _require("V" in mdoc, f"{where}: missing 'V'")
        v = enc.parse_hlpoly(mdoc["V"], f"{where}.V")
        try:
            return KnotChangeMove(FramedKnotChange(v))
        except ValueError as exc:
            raise ManifestError(f"{where}.V: {exc}") from None
    raise ManifestError(f"{where}: unknown move type {kind!r}")


_MOVE_NAMES = {SurgeryMove: "surgery", ConnectedSumMove: "connected_sum",
               FramingMove: "framing", KnotChangeMove: "knot_change"}


def _move_delta(state: PipelineState, move):
    if isinstance(move, SurgeryMove):
        return surgery_delta(move.datum), move.pair_after
    if isinstance(move, ConnectedSumMove):
        return connected_sum_delta(move.lambda_n), state.alex
    if isinstance(move, FramingMove):
        v = framing_V(state.alex, move.n)
        return knot_change_delta(v, state.alex), state.alex
    if isinstance(move, KnotChangeMove):
        return knot_change_delta(move.change, state.alex), state.alex
    raise TypeError(f"unknown move {move!r}")


def _eval_entry(f: TriVarElem):
    try:
        return enc.rational_str(tri_eval_111(f))
    except NoLimit as exc:
        return {"no_limit": str(exc)}


def run_pipeline(manifest: Manifest, kmax=None, window=None) -> dict:
    """Fold the moves and return a JSON-ready report.

    When kmax (and optionally window, default (-15, 15)) is given, the
    final Q is also reduced modulo span{Q_k : k <= kmax} for the final
    (Delta, delta) pair.
    """
    state = PipelineState(manifest.initial_pair, manifest.initial_q)
    if not check_symmetry(state.Q):
        raise SymmetryViolation("initial Q fails the symmetry check")
    report_moves = []
    for idx, move in enumerate(manifest.moves):
        delta_q, pair_after = _move_delta(state, move)
        state.Q = state.Q + delta_q
        state.alex = pair_after
        state.log.append(type(move).__name__)
        if not check_symmetry(state.Q):
            raise SymmetryViolation(f"state after move {idx} fails the "
                                    f"symmetry check")
        report_moves.append({
            "index": idx,
            "type": _MOVE_NAMES[type(move)],
            "delta_Q": enc.encode_trivar(delta_q),
            "delta_eval_111": _eval_entry(delta_q),
            "symmetric": True,
        })
    final = {
        "Q": enc.encode_trivar(state.Q),
        "eval_111": _eval_entry(state.Q),
        "symmetric": True,
        "Delta": enc.encode_hlpoly(state.alex.Delta),
        "delta": enc.encode_hlpoly(state.alex.delta),
    }
    final.update(_cleared_form(state))
    report = {
        "initial": {
            "Delta": enc.encode_hlpoly(manifest.initial_pair.Delta),
            "delta": enc.encode_hlpoly(manifest.initial_pair.delta),
            "Q": enc.encode_trivar(manifest.initial_q),
        },
        "moves": report_moves,
        "final": final,
        "ring": RING_NOTE,
    }
    if kmax is not None:
        lo, hi = window if window is not None else (-15, 15)
        rep, coords = reduce_mod_Qk(state.Q, state.alex, kmax, (lo, hi))
        report["reduction"] = {
            "kmax": kmax,
            "window": [lo, hi],
            "representative": enc.encode_trivar(rep),
            "coordinates": [enc.rational_str(c) for c in coords],
        }
    return report


def _cleared_form(state: PipelineState):
    """delta(x) delta(y) delta(z) * Q, reported but never asserted to be
    a Laurent polynomial."""
    try:
        d = OneVarFrac(state.alex.delta)
        prod = embed(d, "x") * embed(d, "y") * embed(d, "z") * state.Q
        return {"delta_cleared": enc.encode_trivar(prod),
                "delta_cleared_polynomial": prod.den == BiLaurent.one()}
    except HalfPowerResidue:
        return {"delta_cleared": None,
                "delta_cleared_polynomial": None}
