"""Command-line front end.

One command per invocation (--command params | delta | verify | walls |
selftest).  Rationals are always printed as "num/den" with a positive
denominator; output is deterministic and byte-identical across runs unless
--meta adds the run-metadata block.

Exit codes: 0 success, 1 input error, 2 regime error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .closed import delta_l0, delta_l0_odd, delta_l1, delta_leading
from .errors import InvalidWallError, PreconditionError, RegimeError, SchemaError, WallCrossError
from .graded import frac
from .jacobian import InsertionWord, build_model, pairing_input_from_json, volume
from .oracle import delta_oracle_l0, delta_oracle_l1
from .surfaces import enumerate_walls, surface_from_json_dict
from .verify import Grid, parse_grid, run_checks
from .walls import WallGeometry

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_REGIME = 2
EXIT_VERIFY = 3


def _rat(x) -> str:
    f = frac(x)
    return f"{f.numerator}/{f.denominator}"


def _parse_int_list(text):
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError as exc:
        raise SchemaError(f"bad integer list {text!r}") from exc


def _load_input(path):
    if path is None:
        raise SchemaError("--input PATH is required for this command")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc


def _wall_from_doc(inp, wall_doc):
    if not wall_doc or "p1" not in wall_doc:
        raise SchemaError("the input document needs a 'wall' object with at least 'p1'")
    pr = inp.pairings
    try:
        return WallGeometry.build(
            p1=int(wall_doc["p1"]), q=inp.q,
            zeta2=int(pr.zeta2), zetaK=int(pr.zetaK),
            zetaW=int(wall_doc["zetaW"]) if "zetaW" in wall_doc else None,
            w2=int(wall_doc["w2"]) if "w2" in wall_doc else None,
            wK=int(wall_doc["wK"]) if "wK" in wall_doc else None)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad wall section: {exc}") from exc


def _emit(doc, rows, columns, opts):
    """Emit either the JSON document or the CSV rows, deterministically."""
    if opts.meta:
        doc = dict(doc)
        doc["meta"] = {"tool": "wallcross", "version": __version__}
    if opts.output == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())


def cmd_params(opts) -> int:
    inp, wall_doc = pairing_input_from_json(_load_input(opts.input))
    wall = _wall_from_doc(inp, wall_doc)
    model = build_model(inp)
    doc = {
        "schema_version": 1,
        "command": "params",
        "wall": {
            "p1": wall.p1, "q": wall.q, "zeta2": wall.zeta2, "zetaK": wall.zetaK,
            "d": wall.d, "l_zeta": wall.l_zeta,
            "h_plus": wall.h_plus, "h_minus": wall.h_minus,
            "n_plus": wall.n_plus, "n_minus": wall.n_minus,
            "empty_side": wall.empty_side,
            "sign_wall": wall.sign_wall(), "sign_complex": wall.sign_complex(),
        },
        "vol": _rat(volume(model)),
    }
    w = doc["wall"]
    rows = [[w[c] for c in ("p1", "q", "zeta2", "zetaK", "d", "l_zeta", "h_plus",
                            "h_minus", "n_plus", "n_minus", "empty_side",
                            "sign_wall", "sign_complex")] + [doc["vol"]]]
    _emit(doc, rows, ["p1", "q", "zeta2", "zetaK", "d", "l_zeta", "h_plus", "h_minus",
                      "n_plus", "n_minus", "empty_side", "sign_wall", "sign_complex", "vol"],
          opts)
    return EXIT_OK


def _delta_values(inp, wall, opts):
    model = build_model(inp)
    vol = volume(model)
    word = InsertionWord(r=opts.r, s=opts.s if opts.s is not None else max(wall.d - 2 * opts.r, 0),
                         gammas=_parse_int_list(opts.gammas), threes=_parse_int_list(opts.threes))
    values = []
    path = opts.path
    if path in ("auto", "closed"):
        if wall.l_zeta == 0:
            if word.odd_count():
                values.append(delta_l0_odd(wall, model, word))
            else:
                values.append(delta_l0(wall, inp.pairings, word.r, vol))
        elif wall.l_zeta == 1:
            if word.odd_count():
                raise RegimeError("odd insertions are only evaluated exactly at l_zeta = 0")
            values.append(delta_l1(wall, inp.pairings, word.r, vol))
        else:
            raise RegimeError(
                f"no exact evaluation for l_zeta = {wall.l_zeta} >= 2 (Hilbert-scheme "
                "cohomology not modeled); use --path leading for the two leading terms")
    if path in ("auto", "oracle") and wall.l_zeta <= 1:
        if wall.l_zeta == 0:
            values.append(delta_oracle_l0(model, wall, word))
        else:
            values.append(delta_oracle_l1(model, wall, word.r))
    if path == "oracle" and wall.l_zeta > 1:
        raise RegimeError(f"the ring oracle requires l_zeta <= 1, got {wall.l_zeta}")
    if path == "leading":
        values.append(delta_leading(wall, inp.pairings, word.r, vol))
    if not values:
        raise RegimeError("no evaluation path selected")
    return word, values


def cmd_delta(opts) -> int:
    inp, wall_doc = pairing_input_from_json(_load_input(opts.input))
    wall = _wall_from_doc(inp, wall_doc)
    word, values = _delta_values(inp, wall, opts)
    if opts.path == "auto" and len(values) == 2 and values[0].value != values[1].value:
        print(f"error: closed-form and oracle disagree: "
              f"{_rat(values[0].value)} vs {_rat(values[1].value)}", file=sys.stderr)
        return EXIT_VERIFY
    doc = {
        "schema_version": 1,
        "command": "delta",
        "word": word.describe(),
        "wall": {"p1": wall.p1, "q": wall.q, "zeta2": wall.zeta2, "d": wall.d,
                 "l_zeta": wall.l_zeta},
        "values": [
            {"value": _rat(v.value), "path": v.path,
             "modulus_exponent": v.modulus_exponent}
            for v in values
        ],
    }
    rows = [[word.describe(), _rat(v.value), v.path,
             "" if v.modulus_exponent is None else v.modulus_exponent] for v in values]
    _emit(doc, rows, ["word", "value", "path", "modulus_exponent"], opts)
    return EXIT_OK


def cmd_walls(opts) -> int:
    text = _load_input(opts.input)
    try:
        doc_in = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    surface = surface_from_json_dict(doc_in)
    if opts.w is None:
        raise SchemaError("--w v1,v2 is required for the walls command")
    if opts.p1 is None:
        raise SchemaError("--p1 INT is required for the walls command")
    w = _parse_int_list(opts.w)
    alpha = _parse_int_list(opts.alpha) if opts.alpha else None
    records = enumerate_walls(surface, w, opts.p1, opts.bound, alpha=alpha)
    rows = []
    entries = []
    for rec in records:
        delta_str = ""
        if rec.wall.l_zeta <= 1 and alpha is not None:
            model = build_model_from_record(surface, rec)
            vol = volume(model)
            if rec.wall.l_zeta == 0:
                value = delta_l0(rec.wall, rec.pairings, 0, vol).value
            else:
                value = delta_l1(rec.wall, rec.pairings, 0, vol).value
            delta_str = _rat(value)
        entry = {"a": rec.a, "b": rec.b, "zeta2": rec.wall.zeta2,
                 "l_zeta": rec.wall.l_zeta, "h_plus": rec.wall.h_plus,
                 "d": rec.wall.d}
        if delta_str:
            entry["delta_alpha_d"] = delta_str
        entries.append(entry)
        rows.append([rec.a, rec.b, rec.wall.zeta2, rec.wall.l_zeta,
                     rec.wall.h_plus, rec.wall.d, delta_str])
    doc = {"schema_version": 1, "command": "walls", "surface": surface.name,
           "p1": opts.p1, "w": list(w), "count": len(entries), "walls": entries}
    _emit(doc, rows, ["a", "b", "zeta2", "l_zeta", "h_plus", "d", "delta_alpha_d"], opts)
    return EXIT_OK


def build_model_from_record(surface, rec):
    from .jacobian import PairingInput
    return build_model(PairingInput(q=surface.q, pairings=rec.pairings))


def cmd_verify(opts) -> int:
    grid = parse_grid(opts.grid) if opts.grid else Grid(q_max=2, d_max=6, r_max=1,
                                                        pair_bound=2, sweep_bound=12)
    properties = opts.property.split(",") if opts.property else None
    results = run_checks(grid, properties=properties,
                         inject_sign_error=opts.inject_sign_error)
    ok = True
    for res in results:
        print(res.line())
        ok = ok and res.passed
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_selftest(opts) -> int:
    grid = Grid(q_max=1, d_max=4, r_max=1, pair_bound=1, sweep_bound=8)
    results = run_checks(grid, properties=["identities", "axioms", "segre",
                                           "simple-type", "scale"])
    ok = True
    for res in results:
        print(res.line())
        ok = ok and res.passed
    return EXIT_OK if ok else EXIT_VERIFY


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wallcross",
        description="Exact wall-crossing difference terms for Donaldson invariants "
                    "of surfaces with b+=1 and irregularity q >= 0.")
    parser.add_argument("--command", required=True,
                        choices=["params", "delta", "verify", "walls", "selftest"])
    parser.add_argument("--input", help="path to a JSON model/surface document")
    parser.add_argument("--output", choices=["json", "csv"], default="json")
    parser.add_argument("--r", type=int, default=0, help="multiplicity of the point class x")
    parser.add_argument("--s", type=int, default=None,
                        help="multiplicity of alpha (default: d - 2r)")
    parser.add_argument("--gammas", default="", help="H_1 insertion indices, e.g. '0,1'")
    parser.add_argument("--threes", default="", help="H_3 insertion indices, e.g. '0'")
    parser.add_argument("--path", choices=["auto", "closed", "oracle", "leading"],
                        default="auto", help="delta evaluation path")
    parser.add_argument("--alpha", default=None, help="alpha vector in the surface basis")
    parser.add_argument("--w", default=None, help="w vector in the surface basis")
    parser.add_argument("--p1", type=int, default=None, help="first Pontryagin number")
    parser.add_argument("--bound", type=int, default=10, help="wall enumeration bound")
    parser.add_argument("--grid", default=None, help="verify bounds, e.g. 'q=0..3,d<=8'")
    parser.add_argument("--property", default=None,
                        help="comma-separated property filter for verify")
    parser.add_argument("--meta", action="store_true", help="attach run metadata")
    parser.add_argument("--inject-sign-error", action="store_true",
                        help=argparse.SUPPRESS)  # mutation hook for tests
    return parser


def main(argv=None) -> int:
    opts = make_parser().parse_args(argv)
    handlers = {"params": cmd_params, "delta": cmd_delta, "walls": cmd_walls,
                "verify": cmd_verify, "selftest": cmd_selftest}
    try:
        return handlers[opts.command](opts)
    except RegimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except (SchemaError, InvalidWallError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except WallCrossError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
