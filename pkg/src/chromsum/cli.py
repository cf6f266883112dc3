"""Command-line interface: ``chromsum <command> ...``.

Exit codes: 0 success (including "unknown" verdicts), 1 usage error,
2 input/parse error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from fractions import Fraction
from typing import Any

from . import graph as gr
from .bounds import BoundOptions, bounds_report, ceil_sqrt, mis_peeling
from .budget import Budget, BudgetExhausted
from .coloring import greedy_sum_coloring
from .dimacs import DimacsParseError, read_dimacs, write_dimacs
from .exact import chromatic_number, chromatic_sum_exact, solver_order
from .fractional import InternalCheckError, fractional_chromatic_number
from .homomorphism import Outcome, find_homomorphism, obstruction_test
from .kneser_lab import DEFAULT_ROW_NODES, InternalInvariantError, explore, format_table

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# JSON helpers


def rational_to_json(x: Fraction | int) -> dict[str, Any]:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator, "decimal": _decimal(x)}


def rational_from_json(d: dict[str, Any]) -> Fraction:
    return Fraction(d["num"], d["den"])


def _decimal(x: Fraction, digits: int = 6) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{float(x):.{digits}f}"


def _show(x: Fraction | int) -> str:
    """Exact form, with a decimal alongside when not an integer."""
    x = Fraction(x)
    return str(x) if x.denominator == 1 else f"{x} (~{_decimal(x)})"


def emit(envelope: dict[str, Any]) -> str:
    return json.dumps(envelope, indent=2, sort_keys=True)


def parse(text: str) -> dict[str, Any]:
    return json.loads(text)


def fingerprint(g: gr.Graph) -> dict[str, Any]:
    digest = hashlib.sha256(write_dimacs(g).encode()).hexdigest()
    return {"n": g.n, "e": g.num_edges, "sha256": digest}


def envelope(command, args, inputs, result, exact, nodes=None, elapsed=None) -> dict[str, Any]:
    return {
        "command": command,
        "args": args,
        "input": inputs,
        "result": result,
        "exact": exact,
        "nodes": nodes,
        "elapsed": elapsed,
    }


# ---------------------------------------------------------------------------
# commands


def _load(path: str) -> gr.Graph:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return read_dimacs(text)
    except DimacsParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _budget(args) -> Budget:
    if args.budget is not None:
        if args.budget < 1:
            raise UsageError("--budget must be positive")
        return Budget(max_nodes=args.budget)
    return Budget.from_env()


def _out(args, env: dict, text: str) -> None:
    print(emit(env) if args.json else text)


GEN_ARITY = {"kneser": 2, "circular": 2, "complete": 1, "cycle": 1, "path": 1, "petersen": 0, "gnp": 2}


def cmd_gen(args) -> int:
    fam, params = args.family, args.params
    if len(params) != GEN_ARITY[fam]:
        raise UsageError(f"{fam} takes {GEN_ARITY[fam]} parameter(s), got {len(params)}")
    try:
        if fam == "gnp":
            if args.seed is None:
                raise UsageError("gnp needs an explicit --seed")
            g = gr.random_gnp(int(params[0]), Fraction(params[1]), args.seed)
        else:
            ints = [int(p) for p in params]
            g = {
                "kneser": gr.kneser,
                "circular": gr.circular_complete,
                "complete": gr.complete,
                "cycle": gr.cycle,
                "path": gr.path,
                "petersen": gr.petersen,
            }[fam](*ints)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    desc = " ".join([fam, *params] + ([f"seed={args.seed}"] if fam == "gnp" else []))
    text = write_dimacs(g, comments=(f"generated by chromsum gen {desc}",))
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        directory = os.path.dirname(os.path.abspath(args.out))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, args.out)
        except BaseException:
            os.unlink(tmp)
            raise
    return EXIT_OK


def cmd_sum(args) -> int:
    g = _load(args.path)
    t0 = time.perf_counter()
    nodes = None
    if args.method == "exact":
        res = chromatic_sum_exact(g, _budget(args))
        coloring, exact, nodes = res.witness, res.optimal, res.nodes
    elif args.method == "greedy":
        coloring, exact = greedy_sum_coloring(g, solver_order(g)), False
    else:
        coloring, exact = mis_peeling(g, budget=_budget(args)), False
    elapsed = time.perf_counter() - t0
    result = {"sigma": coloring.sum, "sigma_kind": "exact" if exact else "upper-bound"}
    if exact:
        result["strength"] = coloring.num_colors
    if args.witness:
        result["witness"] = list(coloring.colors)
    env = envelope("sum", {"method": args.method}, fingerprint(g), result, exact, nodes, elapsed)
    lines = [f"sigma {coloring.sum} ({'exact' if exact else 'upper bound only'})"]
    if exact:
        lines.append(f"strength {coloring.num_colors}")
    elif args.method == "exact":
        lines.append("budget exhausted: best coloring found so far")
    if args.witness:
        lines.append("witness " + " ".join(map(str, coloring.colors)))
    _out(args, env, "\n".join(lines))
    return EXIT_OK


def _entry_json(b) -> dict[str, Any]:
    return {"name": b.name, "formula": b.formula, "value": rational_to_json(b.value),
            "strict": b.strict, "note": b.note}


def cmd_bounds(args) -> int:
    g = _load(args.path)
    t0 = time.perf_counter()
    rep = bounds_report(g, BoundOptions(chi=args.chi, chif=args.chif, sigma=args.sigma,
                                        budget=_budget(args)))
    bad = rep.violations()
    if bad:
        raise InternalInvariantError("inconsistent bounds: " + "; ".join(bad))
    result = {
        "stats": {
            "n": rep.n, "e": rep.e, "omega": rep.omega, "alpha": rep.alpha, "chi": rep.chi,
            "chif": rational_to_json(rep.chif) if rep.chif is not None else None,
            "vertex_transitive": rep.vertex_transitive,
        },
        "sigma": rep.sigma,
        "lower_bounds": [_entry_json(b) for b in rep.lower_bounds],
        "upper_bounds": [_entry_json(b) for b in rep.upper_bounds],
        "notes": rep.notes,
    }
    env = envelope("bounds", {"chi": args.chi, "chif": args.chif, "sigma": args.sigma},
                   fingerprint(g), result, True, None, time.perf_counter() - t0)
    lines = [f"n={rep.n} e={rep.e} omega={rep.omega} alpha={rep.alpha}"
             + (f" chi={rep.chi}" if rep.chi is not None else "")
             + (f" chi_f={rep.chif}" if rep.chif is not None else "")
             + (f" vertex-transitive={rep.vertex_transitive}")]
    for b in rep.lower_bounds:
        lines.append(f"lower  {b.name:<18} {b.formula:<26} {_show(b.value)}")
    for b in rep.upper_bounds:
        rel = "<" if b.strict else "<="
        lines.append(f"upper  {b.name:<18} {b.formula:<26} sigma {rel} {_show(b.value)}")
    if rep.sigma is not None:
        lines.append(f"sigma  {rep.sigma} (exact)")
    lines.extend(f"note   {s}" for s in rep.notes)
    _out(args, env, "\n".join(lines))
    return EXIT_OK


def cmd_chi(args) -> int:
    g = _load(args.path)
    t0 = time.perf_counter()
    try:
        chi, exact = chromatic_number(g, _budget(args)), True
    except BudgetExhausted:
        chi, exact = None, False
    env = envelope("chi", {}, fingerprint(g), {"chi": chi}, exact, None, time.perf_counter() - t0)
    _out(args, env, f"chi {chi}" if exact else "chi unknown (budget exhausted)")
    return EXIT_OK


def cmd_chif(args) -> int:
    g = _load(args.path)
    t0 = time.perf_counter()
    try:
        res = fractional_chromatic_number(g, cross_check=True, budget=_budget(args))
    except BudgetExhausted:
        env = envelope("chif", {}, fingerprint(g), {"chif": None}, False)
        _out(args, env, "chi_f unknown (budget exhausted)")
        return EXIT_OK
    result = {"chif": rational_to_json(res.value), "method": res.method}
    lines = [f"chi_f {_show(res.value)}"]
    if args.certificate and res.certificate is not None:
        cert = sorted(res.certificate.items(), key=lambda kv: sorted(kv[0]))
        result["certificate"] = [
            {"set": sorted(v + 1 for v in s), "weight": rational_to_json(w)} for s, w in cert
        ]
        lines += [f"  {w}  {{{', '.join(str(v + 1) for v in sorted(s))}}}" for s, w in cert]
    env = envelope("chif", {}, fingerprint(g), result, True, None, time.perf_counter() - t0)
    _out(args, env, "\n".join(lines))
    return EXIT_OK


def cmd_hom(args) -> int:
    g, h = _load(args.g_path), _load(args.h_path)
    budget = _budget(args)
    t0 = time.perf_counter()

    rg = chromatic_sum_exact(g, budget)
    sigma_g = rg.sigma if rg.optimal else max(g.n, ceil_sqrt(8 * g.num_edges))
    # any proper coloring's sum bounds sigma(H) from above
    sigma_h = chromatic_sum_exact(h, budget).sigma
    try:
        verdict = obstruction_test(g, h, sigma_g, sigma_h, budget)
    except BudgetExhausted:
        verdict = None

    result: dict[str, Any] = {
        "sigma_source": {"value": sigma_g, "kind": "exact" if rg.optimal else "lower-bound"},
        "sigma_target": {"value": sigma_h, "kind": "upper-bound"},
        "obstruction": None,
    }
    if verdict is not None:
        result["obstruction"] = {
            "outcome": verdict.outcome.value,
            "ratio_source": rational_to_json(verdict.ratio_source) if verdict.ratio_source is not None else None,
            "ratio_target": rational_to_json(verdict.ratio_target) if verdict.ratio_target is not None else None,
            "target_transitive": verdict.target_transitive,
        }
    proven = verdict is not None and verdict.outcome is Outcome.NO_HOMOMORPHISM_PROVEN

    mapping = None
    status = "unknown"
    source = None
    if proven:
        status, source = "none", "obstruction"
    if not args.obstruct_only:
        try:
            found = find_homomorphism(g, h, budget)
        except BudgetExhausted:
            found = "unknown"
        if isinstance(found, str):
            pass
        elif found is None:
            status = "none"
            source = "obstruction+exhaustive-search" if proven else "exhaustive-search"
        else:
            if proven:
                raise InternalInvariantError("obstruction contradicted by an explicit homomorphism")
            status, source = "exists", "explicit-map"
            mapping = [x + 1 for x in found.mapping]
    result.update(status=status, source=source, mapping=mapping)
    env = envelope("hom", {"obstruct_only": args.obstruct_only},
                   [fingerprint(g), fingerprint(h)], result, status != "unknown",
                   None, time.perf_counter() - t0)

    if status == "none" and proven:
        text = (f"no homomorphism (obstruction: {verdict.ratio_source} > {verdict.ratio_target})")
        if source != "obstruction":
            text += "; confirmed by exhaustive search"
    elif status == "none":
        text = "no homomorphism (exhaustive search)"
    elif status == "exists":
        text = "homomorphism: " + " ".join(f"{i + 1}->{x}" for i, x in enumerate(mapping))
    else:
        why = verdict.reason if verdict is not None else "transitivity check exhausted its budget"
        text = f"unknown (obstruction {verdict.outcome.value if verdict else 'unavailable'}: {why})"
    _out(args, env, text)
    return EXIT_OK


def cmd_explore(args) -> int:
    if args.max_n < 1 or args.max_m < 2 * args.max_n:
        raise UsageError("need --max-n >= 1 and --max-m >= 2 * --max-n")
    budget = _budget(args) if args.budget is not None else Budget.from_env(DEFAULT_ROW_NODES)
    t0 = time.perf_counter()
    rows = explore(args.max_m, args.max_n, budget)
    env = envelope("kneser-explore", {"max_m": args.max_m, "max_n": args.max_n,
                                      "budget": budget.max_nodes},
                   None, {"rows": [r.as_dict() for r in rows]},
                   all(r.exact_sigma is not None for r in rows), sum(r.nodes for r in rows),
                   time.perf_counter() - t0)
    _out(args, env, format_table(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chromsum", description="Exact chromatic sum toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def with_common(sp, budget=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if budget:
            sp.add_argument("--budget", type=int, default=None,
                            help="search node limit (default: $CHROMSUM_BUDGET or unlimited)")
        return sp

    s = sub.add_parser("gen", help="write a named graph in DIMACS format")
    s.add_argument("family", choices=sorted(GEN_ARITY))
    s.add_argument("params", nargs="*")
    s.add_argument("-o", "--out", default=None)
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=cmd_gen)

    s = with_common(sub.add_parser("sum", help="chromatic sum"))
    s.add_argument("path")
    m = s.add_mutually_exclusive_group()
    m.add_argument("--exact", dest="method", action="store_const", const="exact")
    m.add_argument("--greedy", dest="method", action="store_const", const="greedy")
    m.add_argument("--peel", dest="method", action="store_const", const="peel")
    s.add_argument("--witness", action="store_true")
    s.set_defaults(func=cmd_sum, method="exact")

    s = with_common(sub.add_parser("bounds", help="lower/upper bounds on the chromatic sum"))
    s.add_argument("path")
    s.add_argument("--chi", action="store_true", help="include (chi+1)/2*n")
    s.add_argument("--chif", action="store_true", help="include chi_f*n")
    s.add_argument("--sigma", action="store_true", help="also solve the chromatic sum exactly")
    s.set_defaults(func=cmd_bounds)

    s = with_common(sub.add_parser("chi", help="chromatic number"))
    s.add_argument("path")
    s.set_defaults(func=cmd_chi)

    s = with_common(sub.add_parser("chif", help="fractional chromatic number"))
    s.add_argument("path")
    s.add_argument("--certificate", action="store_true")
    s.set_defaults(func=cmd_chif)

    s = with_common(sub.add_parser("hom", help="homomorphism existence"))
    s.add_argument("g_path")
    s.add_argument("h_path")
    s.add_argument("--obstruct-only", action="store_true")
    s.set_defaults(func=cmd_hom)

    s = with_common(sub.add_parser("kneser-explore", help="Kneser chromatic sum table"))
    s.add_argument("--max-m", type=int, default=6)
    s.add_argument("--max-n", type=int, default=2)
    s.set_defaults(func=cmd_explore)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"chromsum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"chromsum: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InternalInvariantError, InternalCheckError) as exc:
        print(f"chromsum: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
