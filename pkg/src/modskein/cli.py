"""Command-line surface: bundle generation, validation, evaluation, caching.

All numeric output is exact ("p/q" strings and cyclotomic coefficient
records); `--float` adds a decimal rendering column that is clearly marked
non-authoritative.  Every command is bit-reproducible for identical inputs
and engine version: there is no randomness anywhere and all pivot orders are
fixed.  Expensive commands (slf, skalg, char-map) cache their canonical JSON
payload content-addressed by (input bytes, operation, parameters, version);
`--verify` recomputes on a cache hit and insists on byte equality.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, cache
from .bundles import uqsl2_bundle
from .coend import qchar, red_to_blue, slf_basis
from .cyclo import CycNum, ExactMatrix
from .errors import (CapabilityError, InadmissibleError, ModskeinError,
                     StructureError, TypingError)
from .hopf import (HopfBundle, bundle_from_obj, regular_rep, save_bundle,
                   trivial_rep, validate_bundle)
from .rt import evaluate, load_diagram
from .surface import algebra_to_obj, char_map, skalg

EXIT_OK = 0
EXIT_FAIL = 1       # axiom failures, typing errors, cache mismatches
EXIT_USAGE = 2      # unreadable/malformed inputs


def _canonical_payload(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
            ).encode("utf-8")


def _matrix_obj(mat: ExactMatrix, with_float: bool = False) -> dict:
    entries = []
    for r in range(mat.rows):
        for c in range(mat.cols):
            v = mat.data[r][c]
            if not v.is_zero():
                rec = [r, c, v.to_obj()]
                entries.append(rec)
    obj = {"rows": mat.rows, "cols": mat.cols, "entries": entries,
           "order": mat.field.order}
    if with_float:
        obj["float_approx"] = [
            [r, c, _float_str(mat.data[r][c])]
            for r in range(mat.rows) for c in range(mat.cols)
            if not mat.data[r][c].is_zero()]
        obj["float_note"] = "decimal rendering is non-authoritative"
    return obj


def _float_str(v: CycNum) -> str:
    z = v.to_complex()
    if abs(z.imag) < 1e-12:
        return "%.12g" % z.real
    return "%.12g%+.12gj" % (z.real, z.imag)


def _matrix_from_obj(obj: dict, field) -> ExactMatrix:
    mat = ExactMatrix.zeros(field, int(obj["rows"]), int(obj["cols"]))
    for (r, c, v) in obj["entries"]:
        mat.data[int(r)][int(c)] = CycNum.from_obj(v, field)
    return mat


def _read_bytes(path: str) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _bundle_from_bytes(data: bytes) -> HopfBundle:
    try:
        return bundle_from_obj(json.loads(data.decode("utf-8")))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise StructureError("malformed bundle JSON: %s" % exc)


def _emit(args, payload_obj, payload_bytes: bytes) -> None:
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload_bytes)
    if args.format == "json" or args.out is None:
        sys.stdout.write(payload_bytes.decode("utf-8"))


def _with_cache(args, op: str, params: dict, input_bytes: bytes, compute):
    """Content-addressed caching with optional --verify recomputation."""
    key = cache.cache_key(input_bytes, op, params)
    cached = cache.lookup(args.cache_dir, key)
    if cached is not None:
        if getattr(args, "verify", False):
            fresh = compute()
            if fresh != cached:
                raise ModskeinError(
                    "cache verification FAILED for %s (key %s)" % (op, key))
        return cached, True
    payload = compute()
    cache.store(args.cache_dir, key, payload, op, params, input_bytes)
    return payload, False


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_validate(args) -> int:
    try:
        bundle = _bundle_from_bytes(_read_bytes(args.bundle))
    except (OSError, StructureError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    failures = validate_bundle(bundle, threads=args.threads)
    if args.format == "text":
        if failures:
            for f in failures:
                print("FAIL %s" % f)
        else:
            print("VALID %s (dim %d)" % (bundle.name, bundle.dim))
    else:
        print(json.dumps({"bundle": bundle.name, "valid": not failures,
                          "failures": failures}, indent=1))
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_gen_uqsl2(args) -> int:
    bundle = uqsl2_bundle(args.p, with_r=args.with_r)
    save_bundle(bundle, args.out)
    failures = validate_bundle(bundle, threads=args.threads)
    note = {"bundle": bundle.name, "dim": bundle.dim, "out": args.out,
            "has_r": bundle.has_r, "valid": not failures,
            "failures": failures}
    if "r_candidate" in bundle.metadata:
        note["r_candidate"] = bundle.metadata["r_candidate"]
    if args.format == "text":
        print("wrote %s (dim %d, %s)" % (
            args.out, bundle.dim,
            "ribbon" if bundle.has_ribbon else "pivotal-only"))
        if failures:
            for f in failures:
                print("FAIL %s" % f)
    else:
        print(json.dumps(note, indent=1))
    return EXIT_OK if not failures else EXIT_FAIL


def _load_checked(args):
    data = _read_bytes(args.bundle)
    bundle = _bundle_from_bytes(data)
    return bundle, data


def _resolve_module(bundle: HopfBundle, name: str):
    if name == "regular":
        return regular_rep(bundle)
    if name == "trivial":
        return trivial_rep(bundle)
    return bundle.module(name)


def cmd_slf(args) -> int:
    bundle, data = _load_checked(args)

    def compute():
        basis = slf_basis(bundle)
        obj = {"bundle": bundle.name, "dim": len(basis),
               "basis": [f.to_obj(bundle) for f in basis]}
        return _canonical_payload(obj)

    payload, hit = _with_cache(args, "slf", {}, data, compute)
    obj = json.loads(payload)
    if args.float_col:
        obj = _add_float_columns(bundle, obj)
    _emit(args, obj, _canonical_payload(obj) if args.float_col else payload)
    if args.format == "text":
        print("slf dim %d (cache %s)" % (obj["dim"], "hit" if hit else "miss"),
              file=sys.stderr)
    return EXIT_OK


def _add_float_columns(bundle, obj):
    out = dict(obj)
    if "basis" in obj:
        out["float_approx"] = [
            [[label, _float_str(CycNum.from_obj(v, bundle.field))]
             for (label, v) in vec]
            for vec in obj["basis"]]
        out["float_note"] = "decimal rendering is non-authoritative"
    if "values" in obj:
        out["float_approx"] = [
            [label, _float_str(CycNum.from_obj(v, bundle.field))]
            for (label, v) in obj["values"]]
        out["float_note"] = "decimal rendering is non-authoritative"
    return out


def cmd_qchar(args) -> int:
    bundle, data = _load_checked(args)
    rep = _resolve_module(bundle, args.module)
    form = qchar(bundle, rep)
    obj = {"bundle": bundle.name, "module": args.module,
           "values": form.to_obj(bundle)}
    if args.float_col:
        obj = _add_float_columns(bundle, obj)
    payload = _canonical_payload(obj)
    _emit(args, obj, payload)
    return EXIT_OK


def cmd_skalg(args) -> int:
    bundle, data = _load_checked(args)
    params = {"g": args.g, "n": args.n}

    def compute():
        alg = skalg(bundle, args.g, args.n, threads=args.threads)
        return _canonical_payload(algebra_to_obj(alg))

    payload, hit = _with_cache(args, "skalg", params, data, compute)
    obj = json.loads(payload)
    if args.format == "csv":
        row = "%s,%d,%d,%d," % (obj["bundle"], obj["g"], obj["n"], obj["dim"])
        print("bundle,g,n,dim,image_rank")
        print(row)
        if args.out:
            with open(args.out, "wb") as fh:
                fh.write(payload)
    else:
        _emit(args, obj, payload)
    if args.format == "text":
        print("skalg dim %d (cache %s)" % (obj["dim"],
                                           "hit" if hit else "miss"),
              file=sys.stderr)
    return EXIT_OK


def cmd_char_map(args) -> int:
    bundle, data = _load_checked(args)

    def compute():
        alg = skalg(bundle, 0, 2, threads=args.threads)
        cm = char_map(bundle, alg)
        obj = {
            "bundle": bundle.name, "g": 0, "n": 2, "dim": alg.dim,
            "image_rank": cm["rank"],
            "multiplicative": cm["multiplicative"],
            "images": {name: [c.to_obj() for c in coords]
                       for name, coords in sorted(cm["images"].items())},
            "qchars": {name: form.to_obj(bundle)
                       for name, form in sorted(cm["qchars"].items())},
        }
        return _canonical_payload(obj)

    payload, hit = _with_cache(args, "char-map", {}, data, compute)
    obj = json.loads(payload)
    if args.format == "csv":
        print("bundle,g,n,dim,image_rank")
        print("%s,0,2,%d,%d" % (obj["bundle"], obj["dim"], obj["image_rank"]))
        if args.out:
            with open(args.out, "wb") as fh:
                fh.write(payload)
    else:
        _emit(args, obj, payload)
    return EXIT_OK


def cmd_rt_eval(args) -> int:
    try:
        bundle, _ = _load_checked(args)
        diagram = load_diagram(bundle, args.diagram)
    except (OSError, StructureError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    mat = evaluate(bundle, diagram)
    obj = _matrix_obj(mat, with_float=args.float_col)
    payload = _canonical_payload(obj)
    _emit(args, obj, payload)
    return EXIT_OK


def cmd_red_to_blue(args) -> int:
    bundle, _ = _load_checked(args)
    try:
        with open(args.job, "r", encoding="utf-8") as fh:
            job = json.load(fh)
        p_rep = _resolve_module(bundle, job["P"])
        x_rep = _resolve_module(bundle, job.get("X", "trivial"))
        k = int(job["k"])
        f = _matrix_from_obj(job["f"], bundle.field)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        print("error: malformed job file: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    terms = red_to_blue(bundle, f, p_rep, k, x_rep)
    obj = {"bundle": bundle.name, "k": k,
           "terms": [{"coefficient": c.to_obj(),
                      "matrix": _matrix_obj(m, with_float=args.float_col)}
                     for (c, m) in terms]}
    payload = _canonical_payload(obj)
    _emit(args, obj, payload)
    return EXIT_OK


def cmd_cache_verify(args) -> int:
    def recompute(op, params, input_bytes):
        bundle = _bundle_from_bytes(input_bytes)
        if op == "slf":
            basis = slf_basis(bundle)
            return _canonical_payload(
                {"bundle": bundle.name, "dim": len(basis),
                 "basis": [f.to_obj(bundle) for f in basis]})
        if op == "skalg":
            alg = skalg(bundle, int(params["g"]), int(params["n"]),
                        threads=args.threads)
            return _canonical_payload(algebra_to_obj(alg))
        if op == "char-map":
            alg = skalg(bundle, 0, 2, threads=args.threads)
            cm = char_map(bundle, alg)
            return _canonical_payload({
                "bundle": bundle.name, "g": 0, "n": 2, "dim": alg.dim,
                "image_rank": cm["rank"],
                "multiplicative": cm["multiplicative"],
                "images": {name: [c.to_obj() for c in coords]
                           for name, coords in sorted(cm["images"].items())},
                "qchars": {name: form.to_obj(bundle)
                           for name, form in sorted(cm["qchars"].items())},
            })
        raise ModskeinError("unknown cached operation %r" % op)

    report = cache.verify_all(args.cache_dir, recompute)
    bad = [r for r in report if r["status"] == "MISMATCH"]
    if args.format == "text":
        for r in report:
            print("%s %s %s" % (r["status"], r.get("op", "?"), r["key"]))
        print("%d entries, %d mismatches" % (len(report), len(bad)))
    else:
        print(json.dumps({"entries": report, "mismatches": len(bad)},
                         indent=1))
    return EXIT_OK if not bad else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modskein",
        description="Exact modified skein algebras for ribbon Hopf algebra "
                    "bundles.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=("json", "text", "csv"),
                        default="json")
    parser.add_argument("--cache-dir", default=cache.default_cache_dir(),
                        help="results cache (env %s)" % cache.ENV_VAR)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--float", dest="float_col", action="store_true",
                        help="add a non-authoritative decimal column")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check every bundle axiom")
    p.add_argument("bundle")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("gen-uqsl2",
                       help="generate the restricted quantum sl2 bundle")
    p.add_argument("p", type=int)
    p.add_argument("out")
    p.add_argument("--with-r", action="store_true",
                   help="attempt the candidate R-matrix (validator decides)")
    p.set_defaults(fn=cmd_gen_uqsl2)

    p = sub.add_parser("slf", help="basis of symmetric linear forms")
    p.add_argument("bundle")
    p.add_argument("--out")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(fn=cmd_slf)

    p = sub.add_parser("qchar", help="q-character of a module")
    p.add_argument("bundle")
    p.add_argument("module")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_qchar)

    p = sub.add_parser("skalg", help="modified skein algebra of a surface")
    p.add_argument("bundle")
    p.add_argument("g", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--out")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(fn=cmd_skalg)

    p = sub.add_parser("char-map",
                       help="canonical map from the classical annulus algebra")
    p.add_argument("bundle")
    p.add_argument("--out")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(fn=cmd_char_map)

    p = sub.add_parser("rt-eval", help="evaluate a diagram file")
    p.add_argument("bundle")
    p.add_argument("diagram")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_rt_eval)

    p = sub.add_parser("red-to-blue", help="resolve coend slots of a morphism")
    p.add_argument("bundle")
    p.add_argument("job")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_red_to_blue)

    p = sub.add_parser("cache", help="cache maintenance")
    csub = p.add_subparsers(dest="cache_command", required=True)
    cv = csub.add_parser("verify", help="recompute and compare every entry")
    cv.set_defaults(fn=cmd_cache_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    os.environ.setdefault(cache.ENV_VAR, args.cache_dir)
    try:
        return args.fn(args)
    except TypingError as exc:
        print("typing error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL
    except (CapabilityError, InadmissibleError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL
    except (StructureError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ModskeinError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
