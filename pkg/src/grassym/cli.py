"""Command-line front end.

Exit codes: 0 success, 1 domain error (e.g. input not symmetric), 2 usage or
parse error, 3 internal-consistency failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import decomp, oracle
from .errors import ConsistencyError, GrassymError, UsageError
from .falg import AlgebraElement, normalize_words, render as render_element
from .parsing import MAX_DEGREE, evaluate, evaluate_polynomial, evaluate_words, parse
from .render import (
    combo_json,
    element_json,
    render_combo,
    render_sigma,
    terms_json,
)
from .symmetry import is_symmetric, symmetrize, violating_transposition

log = logging.getLogger("grassym")

CACHE_FILE = "reduce_f.json"

# the worked example: f(2,4,5) through the three generators, nu3 kept as printed
WORKED_EXAMPLE_INPUT = "f(2,4,5)"
WORKED_EXAMPLE_COMBO = {
    "c010": "-sigma1 sigma3^3 + sigma1^2 sigma2 sigma3^2 - sigma2^2 sigma3^2",
    "c020": "nu3 sigma3^2 + sigma1 sigma2 sigma3^2 - 2 sigma3^3 - sigma1^3 sigma3^2 + sigma1 sigma2 sigma3^2",
    "c120": "sigma2 sigma3^2",
}


def _element(args, text: str | None = None) -> AlgebraElement:
    return evaluate(parse(text if text is not None else args.expr), args.arity, args.max_degree)


def _sigma_of(text: str):
    """Parse a sigma/nu expression into a SigmaPolynomial."""
    from .invariants import decompose_symmetric

    return decompose_symmetric(evaluate_polynomial(parse(text), 3))


def _load_cache(args):
    if args.cache_dir:
        path = Path(args.cache_dir) / CACHE_FILE
        if path.exists():
            decomp.import_reduce_table(json.loads(path.read_text()))


def _save_cache(args):
    if args.cache_dir:
        path = Path(args.cache_dir)
        path.mkdir(parents=True, exist_ok=True)
        (path / CACHE_FILE).write_text(json.dumps(decomp.export_reduce_table(), indent=1))


# ----- commands: each returns (record, text_lines, exit_code) -----

def cmd_normalize(args):
    f = _element(args)
    return {"input_normal_form": render_element(f), "result": element_json(f)}, [render_element(f)], 0


def cmd_is_symmetric(args):
    f = _element(args)
    sym = is_symmetric(f)
    viol = violating_transposition(f)
    result = {"symmetric": sym, "violating_transposition": list(viol.images) if viol else None}
    return {"input_normal_form": render_element(f), "result": result}, ["true" if sym else "false"], 0


def cmd_symmetrize(args):
    f = _element(args)
    g = symmetrize(f)
    return {"input_normal_form": render_element(f), "result": element_json(g)}, [render_element(g)], 0


def cmd_expand(args):
    f = _element(args)
    expansion = decomp.expand_in_fbasis(f)
    rendering = {str(idx): render_sigma(s, args.nu_rendering) for idx, s in expansion.items()}
    result = [{"index": list(idx), "coefficient": terms_json(s)} for idx, s in expansion.items()]
    text = [render_combo(expansion, args.nu_rendering)]
    return {"input_normal_form": render_element(f), "result": result, "sigma_rendering": rendering}, text, 0


def _combo_record(f, combo, nu):
    rendering = {name: render_sigma(c, nu) for name, c in zip(("c010", "c020", "c120"), combo.coefficients)}
    record = {"input_normal_form": render_element(f), "result": combo_json(combo), "sigma_rendering": rendering}
    text = [f"{name} = {r}" for name, r in rendering.items()] + [render_combo(combo, nu)]
    return record, text


def cmd_reduce(args):
    f = _element(args)
    combo = decomp.reduce_symmetric(f)
    if combo.evaluate() != f:
        raise ConsistencyError("generator combination does not reproduce the input")
    record, text = _combo_record(f, combo, args.nu_rendering)
    return record, text, 0


def cmd_reduce_n2(args):
    args.arity = 2
    f = _element(args)
    q = decomp.decompose_n2(f)
    if decomp.evaluate_n2(q) != f:
        raise ConsistencyError("decomposition does not reproduce the input")
    rendering = q.render()
    record = {"input_normal_form": render_element(f), "result": terms_json(q), "sigma_rendering": rendering}
    return record, [f"({rendering}) (x2 - x1)[x2,x1]"], 0


def cmd_check_freeness(args):
    v = decomp.check_freeness(args.degree)
    result = {"independent": v.independent, "max_degree": v.max_degree,
              "witness": None if v.witness is None else
              {str(k): terms_json(s) for k, s in v.witness.items()},
              "witness_degree": v.witness_degree}
    text = ["independent" if v.independent else f"dependent at degree {v.witness_degree}: "
            + render_combo(v.witness) + " = 0"]
    return {"result": result}, text, 0


def cmd_check_minimality(args):
    report = decomp.minimality_report()
    ok = all(report.values())
    result = {"minimal": ok, "excluded_from_span_of_others": {str(k): v for k, v in report.items()}}
    text = [f"{k} outside span of the other two: {v}" for k, v in report.items()]
    text.append("minimal" if ok else "NOT minimal")
    return {"result": result}, text, 0 if ok else 3


def _oracle(args):
    t0 = time.perf_counter()
    T = oracle.build(args.arity, args.degree, cap=args.oracle_cap)
    log.info("oracle n=%d D=%d built in %.2fs", args.arity, args.degree, time.perf_counter() - t0)
    return T


def _dimension_table(T):
    rows = []
    for d in range(1, T.D + 1):
        rows.append({"degree": d, "words": T.word_count(d), "relation_rank": T.relation_rank.get(d, 0),
                     "quotient_dimension": T.quotient_dimension(d),
                     "basis_count": oracle.basis_count(T.n, d)})
    return rows


def cmd_oracle_build(args):
    T = _oracle(args)
    rows = _dimension_table(T)
    text = ["degree words relation_rank quotient_dim basis_count"]
    text += [f"{r['degree']} {r['words']} {r['relation_rank']} {r['quotient_dimension']} {r['basis_count']}"
             for r in rows]
    return {"result": {"arity": T.n, "degree": T.D, "per_degree": rows}}, text, 0


def cmd_oracle_check(args):
    T = _oracle(args)
    if args.non_module_witness:
        ok = oracle.witness_non_module_n4(T) and oracle.bracket_product_nonzero_n4(T)
        text = ["witness confirmed" if ok else "witness NOT confirmed"]
        return {"result": {"witness_confirmed": ok}}, text, 0 if ok else 3
    if args.exprs:
        if len(args.exprs) != 2:
            raise UsageError("oracle-check compares exactly two expressions")
        a, b = (evaluate_words(parse(e), args.arity, args.max_degree) for e in args.exprs)
        equal = oracle.oracle_equal(a, b, T)
        result = {"oracle_equal": equal}
        text = [f"oracle: {'equal' if equal else 'different'}"]
        code = 0
        if args.arity in (2, 3):
            falg_equal = normalize_words(a, args.arity) == normalize_words(b, args.arity)
            result["normal_form_equal"] = falg_equal
            text.append(f"normal forms: {'equal' if falg_equal else 'different'}")
            if falg_equal != equal:
                code = 3
        return {"result": result}, text, code
    rows = _dimension_table(T)
    ok = all(r["quotient_dimension"] == r["basis_count"] for r in rows)
    text = [f"degree {r['degree']}: quotient {r['quotient_dimension']}, basis {r['basis_count']}" for r in rows]
    text.append("dimensions agree" if ok else "dimension MISMATCH")
    return {"result": {"dimensions_agree": ok, "per_degree": rows}}, text, 0 if ok else 3


def cmd_verify_worked_example(args):
    f = decomp.make_f((2, 4, 5))
    combo = decomp.reduce_f((2, 4, 5))
    expected = decomp.GeneratorCombo(*(_sigma_of(WORKED_EXAMPLE_COMBO[k]) for k in ("c010", "c020", "c120")))
    matches = combo == expected
    round_trip = combo.evaluate() == f
    ok = matches and round_trip
    record, text = _combo_record(f, combo, args.nu_rendering)
    record["result"] = {"combo": record["result"], "matches_reference": matches, "round_trip": round_trip}
    text += [f"matches reference combination: {matches}", f"round trip: {round_trip}",
             "verified" if ok else "FAILED"]
    return record, text, 0 if ok else 3


COMMANDS = {
    "normalize": (cmd_normalize, "normal form of an expression", True),
    "is-symmetric": (cmd_is_symmetric, "test invariance under the symmetric group", True),
    "symmetrize": (cmd_symmetrize, "average over the symmetric group", True),
    "expand": (cmd_expand, "expand a symmetric element over the f(a,b,c)", True),
    "reduce": (cmd_reduce, "write a symmetric element through f(0,1,0), f(0,2,0), f(1,2,0)", True),
    "reduce-n2": (cmd_reduce_n2, "rank two: q with f = q (x2 - x1)[x2,x1]", True),
    "check-freeness": (cmd_check_freeness, "search for relations among the generators", False),
    "check-minimality": (cmd_check_minimality, "check no generator is redundant", False),
    "oracle-build": (cmd_oracle_build, "build the truncated quotient and report dimensions", False),
    "oracle-check": (cmd_oracle_check, "compare against the truncated quotient", False),
    "verify-paper-example": (cmd_verify_worked_example, "reproduce the worked f(2,4,5) example", False),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--arity", type=int, choices=(2, 3, 4), default=3)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--nu-rendering", action="store_true",
                        help="write power sums nu_k where that shortens a coefficient")
    common.add_argument("--max-degree", type=int, default=MAX_DEGREE)
    common.add_argument("--cache-dir", help="directory for the memoized reduction table")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="grassym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_, takes_expr) in COMMANDS.items():
        p = sub.add_parser(name, help=help_, parents=[common])
        if takes_expr:
            p.add_argument("expr")
        if name == "check-freeness":
            p.add_argument("--degree", type=int, default=8)
        if name.startswith("oracle"):
            p.add_argument("--degree", type=int, default=4)
            p.add_argument("--oracle-cap", type=int, default=None,
                           help="raise the default truncation cap")
        if name == "oracle-check":
            p.add_argument("exprs", nargs="*")
            p.add_argument("--non-module-witness", action="store_true")
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    func = COMMANDS[args.command][0]
    if args.arity == 4 and args.command not in ("oracle-build", "oracle-check"):
        print("error: arity 4 is only available in oracle commands", file=sys.stderr)
        return 2
    try:
        _load_cache(args)
        record, text, code = func(args)
        _save_cache(args)
    except GrassymError as exc:
        if args.json:
            print(json.dumps({"command": args.command, "error": str(exc),
                              "kind": type(exc).__name__}), file=out)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    record = {"command": args.command, "input_normal_form": record.get("input_normal_form"),
              "result": record.get("result"), "sigma_rendering": record.get("sigma_rendering")}
    if args.json:
        print(json.dumps(record, indent=2), file=out)
    else:
        for line in text:
            print(line, file=out)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
