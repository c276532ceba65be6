"""JSON-facing text encodings of the exact types.

All rationals are strings "num/den" (or plain "num") so no floats enter
reports; polynomial exponents are string integers or "k/2" for genuine
half-integer powers.
"""

from __future__ import annotations

from fractions import Fraction

from .diagrams import DiagramVector, MonGraph
from .errors import ManifestError
from .halfint import HLPoly, OneVarFrac
from .trivar import BiLaurent, TriVarElem


def rational_str(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s, where="rational") -> Fraction:
    try:
        if isinstance(s, int):
            return Fraction(s)
        if isinstance(s, str):
            return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        pass
    raise ManifestError(f"{where}: expected an exact rational string, "
                        f"got {s!r}")


def _exp_str(k2: int) -> str:
    return str(k2 // 2) if k2 % 2 == 0 else f"{k2}/2"


def _parse_exp(s, where) -> int:
    try:
        if isinstance(s, int):
            return 2 * s
        txt = str(s).strip()
        if "/" in txt:
            a, b = txt.split("/")
            if int(b) != 2:
                raise ValueError
            return int(a)
        return 2 * int(txt)
    except ValueError:
        raise ManifestError(f"{where}: exponent must be an integer or "
                            f"'k/2', got {s!r}") from None


def encode_hlpoly(p: HLPoly):
    return [[_exp_str(k2), rational_str(c)] for k2, c in p.terms()]


def parse_hlpoly(obj, where="polynomial") -> HLPoly:
    if not isinstance(obj, list):
        raise ManifestError(f"{where}: expected a list of "
                            f"[exponent, coefficient] pairs")
    coeffs = {}
    for i, item in enumerate(obj):
        if not (isinstance(item, list) and len(item) == 2):
            raise ManifestError(f"{where}[{i}]: expected a pair")
        k2 = _parse_exp(item[0], f"{where}[{i}]")
        c = parse_rational(item[1], f"{where}[{i}]")
        coeffs[k2] = coeffs.get(k2, Fraction(0)) + c
    return HLPoly(coeffs)


def encode_frac(f: OneVarFrac):
    return {"num": encode_hlpoly(f.num), "den": encode_hlpoly(f.den)}


def parse_frac(obj, where="fraction") -> OneVarFrac:
    if isinstance(obj, list):
        return OneVarFrac(parse_hlpoly(obj, where))
    if isinstance(obj, dict) and set(obj) <= {"num", "den"}:
        num = parse_hlpoly(obj.get("num", []), f"{where}.num")
        den = (parse_hlpoly(obj["den"], f"{where}.den")
               if "den" in obj else HLPoly.one())
        if den.is_zero:
            raise ManifestError(f"{where}: zero denominator")
        return OneVarFrac(num, den)
    raise ManifestError(f"{where}: expected a polynomial list or a "
                        f"num/den object")


def encode_bilaurent(b: BiLaurent):
    return [[i, j, rational_str(c)] for (i, j), c in b.terms()]


def parse_bilaurent(obj, where) -> BiLaurent:
    if not isinstance(obj, list):
        raise ManifestError(f"{where}: expected a list of "
                            f"[xexp, yexp, coeff] triples")
    coeffs = {}
    for i, item in enumerate(obj):
        if not (isinstance(item, list) and len(item) == 3
                and isinstance(item[0], int) and isinstance(item[1], int)):
            raise ManifestError(f"{where}[{i}]: expected "
                                f"[int, int, rational]")
        key = (item[0], item[1])
        c = parse_rational(item[2], f"{where}[{i}]")
        coeffs[key] = coeffs.get(key, Fraction(0)) + c
    return BiLaurent(coeffs)


def encode_trivar(f: TriVarElem):
    return {"num": encode_bilaurent(f.num), "den": encode_bilaurent(f.den)}


def parse_trivar(obj, where="element") -> TriVarElem:
    if not (isinstance(obj, dict) and set(obj) <= {"num", "den"}):
        raise ManifestError(f"{where}: expected a num/den object")
    num = parse_bilaurent(obj.get("num", []), f"{where}.num")
    den = (parse_bilaurent(obj["den"], f"{where}.den") if "den" in obj
           else BiLaurent.one())
    if den.is_zero:
        raise ManifestError(f"{where}: zero denominator")
    return TriVarElem(num, den)


def encode_mongraph(g: MonGraph):
    return {"vertices": g.nv,
            "cyclic": [list(tri) for tri in g.cyclic],
            "edges": [list(e) for e in g.edges]}


def parse_mongraph(obj, where="graph") -> MonGraph:
    if not isinstance(obj, dict):
        raise ManifestError(f"{where}: expected an object")
    try:
        nv = int(obj["vertices"])
        edges = tuple(tuple(int(x) for x in e) for e in obj["edges"])
        cyclic = tuple(tuple(int(x) for x in tri) for tri in obj["cyclic"])
        if any(len(e) != 4 for e in edges):
            raise ValueError("edges must be [tail, head, a, b]")
        return MonGraph(nv, edges, cyclic)
    except (KeyError, TypeError, ValueError) as exc:
        raise ManifestError(f"{where}: {exc}") from None


def encode_diagram_vector(v: DiagramVector):
    return [[encode_mongraph(g), rational_str(c)] for g, c in v.items()]


def parse_diagram_vector(obj, where="diagram vector") -> DiagramVector:
    if not isinstance(obj, list):
        raise ManifestError(f"{where}: expected a list of "
                            f"[graph, coefficient] pairs")
    acc = DiagramVector.zero()
    for i, item in enumerate(obj):
        if not (isinstance(item, list) and len(item) == 2):
            raise ManifestError(f"{where}[{i}]: expected a pair")
        g = parse_mongraph(item[0], f"{where}[{i}]")
        c = parse_rational(item[1], f"{where}[{i}]")
        acc = acc + DiagramVector.single(g, c)
    return acc
