"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 parse/usage error.  All output is
JSON or exact rational strings; reports are byte-deterministic functions
of their inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import encoding as enc
from .casson import SurgeryCoefficient, dedekind_sum, lambda_lens
from .diagrams import canonicalize, enumerate_CS_n, normalization_constant, psi
from .errors import EqCubeError, ManifestError
from .halfint import HLPoly
from .pipeline import parse_manifest, run_pipeline
from .selfcheck import run_all


def _dump(doc, out_path=None):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(kind, message, code, out_path=None, **extra):
    _dump({"error": dict(kind=kind, message=message, **extra)}, out_path)
    return code


def _parse_window(text):
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise ManifestError(
            f"window must look like '-15..15', got {text!r}") from None


def cmd_compute(args):
    try:
        with open(args.manifest) as fh:
            doc = json.load(fh)
    except OSError as exc:
        return _fail("io", str(exc), 2, args.out)
    except json.JSONDecodeError as exc:
        return _fail("parse", exc.msg, 2, args.out,
                     line=exc.lineno, column=exc.colno)
    try:
        window = _parse_window(args.window) if args.window else None
        manifest = parse_manifest(doc)
    except ManifestError as exc:
        return _fail("parse", str(exc), 2, args.out)
    try:
        report = run_pipeline(manifest, kmax=args.kmax, window=window)
    except EqCubeError as exc:
        return _fail("domain", str(exc), 1, args.out,
                     error_type=type(exc).__name__)
    _dump(report, args.out)
    return 0


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def cmd_psi(args):
    try:
        doc = _load_json(args.input)
        vec = enc.parse_diagram_vector(doc)
        delta = (enc.parse_hlpoly(json.loads(args.delta), "delta")
                 if args.delta else HLPoly.one())
    except (OSError, json.JSONDecodeError, ManifestError) as exc:
        return _fail("parse", str(exc), 2)
    try:
        value = psi(vec, delta)
    except EqCubeError as exc:
        return _fail("domain", str(exc), 1, error_type=type(exc).__name__)
    if value.is_constant:
        print(enc.rational_str(value.as_rational()))
    else:
        _dump(enc.encode_trivar(value))
    return 0


def cmd_diagram_canon(args):
    try:
        graph = enc.parse_mongraph(_load_json(args.input))
    except (OSError, json.JSONDecodeError, ManifestError) as exc:
        return _fail("parse", str(exc), 2)
    canon, sign = canonicalize(graph)
    _dump({"graph": enc.encode_mongraph(canon), "sign": sign})
    return 0


def cmd_enumerate(args):
    try:
        graphs = enumerate_CS_n(args.n)
    except ValueError as exc:
        return _fail("parse", str(exc), 2)
    _dump({
        "n": args.n,
        "count": len(graphs),
        "normalization_constant":
            enc.rational_str(normalization_constant(args.n)),
        "graphs": [[list(e) for e in g.edges] for g in graphs],
    })
    return 0


def cmd_lens(args):
    try:
        coeff = SurgeryCoefficient(args.p, args.q)
        value = lambda_lens(coeff)
    except (ValueError, EqCubeError) as exc:
        kind = "parse" if isinstance(exc, ValueError) else "domain"
        return _fail(kind, str(exc), 2 if kind == "parse" else 1)
    print(enc.rational_str(value))
    return 0


def cmd_dedekind(args):
    try:
        value = dedekind_sum(args.q, args.p)
    except (ValueError, EqCubeError) as exc:
        kind = "parse" if isinstance(exc, ValueError) else "domain"
        return _fail(kind, str(exc), 2 if kind == "parse" else 1)
    print(enc.rational_str(value))
    return 0


def cmd_check(args):
    results = run_all(seed=args.seed)
    width = max(len(name) for name, _ in results)
    ok_all = True
    for name, ok in results:
        print(f"{name:<{width}}  {'PASS' if ok else 'FAIL'}")
        ok_all = ok_all and ok
    print(f"{'overall':<{width}}  {'PASS' if ok_all else 'FAIL'}")
    return 0 if ok_all else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="eqcube",
        description="exact calculator for the equivariant cube of the "
                    "linking pairing of rank-one 3-manifolds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="run a pipeline manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--window", default=None,
                   help="exponent window for the reduction, e.g. -15..15")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("psi", help="evaluate a degree-one diagram vector")
    p.add_argument("--input", required=True)
    p.add_argument("--delta", default=None,
                   help="inline JSON for the annihilator polynomial")
    p.set_defaults(fn=cmd_psi)

    p = sub.add_parser("diagram-canon", help="canonical form of a diagram")
    p.add_argument("--input", required=True)
    p.set_defaults(fn=cmd_diagram_canon)

    p = sub.add_parser("enumerate",
                       help="labeled connected trivalent graphs")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("lens", help="Casson-Walker value of S^3(U; p/q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(fn=cmd_lens)

    p = sub.add_parser("dedekind", help="Dedekind sum s(q, p)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(fn=cmd_dedekind)

    p = sub.add_parser("check", help="run the bundled invariant suite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
