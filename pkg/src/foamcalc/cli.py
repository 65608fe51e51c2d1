"""Command-line front end.

Every command prints JSON by default (``--format text`` for a short
human-readable form).  Verification commands exit with status 1 when a
check fails; bad input exits with status 2.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import corpus
from .deformed import SigmaSpec, deformed_homology, simple_resolution
from .functorial import mutation_report, reidemeister_scalar, verify_movie_moves
from .grassmann import GrassmannAlgebra, idempotents
from .linkcx import ColoredDiagram, euler_char
from .symcore import Partition, lr_product, schur_difference
from .webmoy import Web, hom_dim, moy_eval


class InputError(Exception):
    pass


def _load_json(path: str) -> Any:
    if path.startswith("corpus:"):
        path = corpus.path(path.split(":", 1)[1] + ("" if path.endswith(".json") else ".json"))
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _need_N(args) -> int:
    if args.N is None:
        raise InputError("this command needs --N")
    if args.N < 1:
        raise InputError("--N must be positive")
    return args.N


def _sigma(args, N: int) -> SigmaSpec:
    if args.sigma is None:
        return SigmaSpec.default(N)
    if args.sigma == "random":
        rng = random.Random(args.seed)
        vals: list[Fraction] = []
        while len(vals) < N:
            v = Fraction(rng.randint(-50, 50), rng.randint(1, 7))
            if v not in vals:
                vals.append(v)
        return SigmaSpec(tuple(vals))
    try:
        return SigmaSpec.parse(args.sigma, N)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _fraction_str(x) -> str:
    return str(Fraction(x))


# --- commands -------------------------------------------------------------------

def cmd_lr(args) -> tuple[Any, int]:
    alpha, beta = _partition(args.alpha), _partition(args.beta)
    table = lr_product(alpha, beta, args.max_rows)
    items = sorted(table.items(), key=lambda kv: kv[0].parts, reverse=True)
    return {str(g): c for g, c in items}, 0


def cmd_schur_diff(args) -> tuple[Any, int]:
    lam = _partition(args.partition)
    return {"partition": str(lam), "a": args.a, "b": args.b,
            "value": str(schur_difference(lam, args.a, args.b))}, 0


def cmd_grassmann(args) -> tuple[Any, int]:
    N = _need_N(args)
    if not 0 <= args.a <= N:
        raise InputError(f"need 0 <= a <= N, got a={args.a}, N={N}")
    alg = GrassmannAlgebra(N, args.a)
    if args.op == "mult":
        if len(args.partitions) != 2:
            raise InputError("mult takes two partitions")
        x, y = (alg.schur(_partition(p)) for p in args.partitions)
        return alg.multiply(x, y).to_json(), 0
    if args.op == "trace":
        if len(args.partitions) != 1:
            raise InputError("trace takes one partition")
        return {"trace": str(alg.trace(alg.schur(_partition(args.partitions[0]))))}, 0
    sigma = _sigma(args, N)
    rows = []
    for subset, coeffs in idempotents(sigma.values, args.a):
        rows.append({"subset": [i + 1 for i in subset],
                     "coefficients": {str(lam): _fraction_str(c) for lam, c in sorted(coeffs.items())}})
    return {"sigma": [_fraction_str(v) for v in sigma.values], "idempotents": rows}, 0


def cmd_moy(args) -> tuple[Any, int]:
    N = _need_N(args)
    web = Web.from_json(_load_json(args.web))
    return moy_eval(web, N).to_json(), 0


def cmd_hom_dim(args) -> tuple[Any, int]:
    N = _need_N(args)
    V = Web.from_json(_load_json(args.source))
    W = Web.from_json(_load_json(args.target))
    return hom_dim(V, W, N).to_json(), 0


def cmd_euler(args) -> tuple[Any, int]:
    N = _need_N(args)
    D = ColoredDiagram.from_json(_load_json(args.link))
    return euler_char(D, N).to_json(), 0


def cmd_deformed(args) -> tuple[Any, int]:
    N = _need_N(args)
    sigma = _sigma(args, N)
    D = ColoredDiagram.from_json(_load_json(args.link))
    return deformed_homology(D, sigma).to_json(), 0


def cmd_simple_res(args) -> tuple[Any, int]:
    D = ColoredDiagram.from_json(_load_json(args.tangle))
    return simple_resolution(D).to_json(), 0


def cmd_reidemeister_scalars(args) -> tuple[Any, int]:
    N = _need_N(args)
    m = args.max_label
    if m > N:
        raise InputError("--max-label must not exceed --N")
    rows = []
    labels = range(1, m + 1)
    for a in labels:
        for variant in ("F", "G"):
            f, g = reidemeister_scalar("R1+", (a,), N, variant)
            rows.append({"move": "R1+", "variant": variant, "labels": [a], "F": str(f), "G": str(g)})
    for move in ("R2+", "R2-"):
        for a in labels:
            for b in labels:
                f, g = reidemeister_scalar(move, (a, b), N)
                rows.append({"move": move, "variant": "F", "labels": [a, b], "F": str(f), "G": str(g)})
    for a in labels:
        for b in labels:
            for c in labels:
                f, g = reidemeister_scalar("R3-", (a, b, c), N)
                rows.append({"move": "R3-", "variant": "F", "labels": [a, b, c], "F": str(f), "G": str(g)})
    return rows, 0


def cmd_verify(args) -> tuple[Any, int]:
    N = _need_N(args)
    if args.max_label > N:
        raise InputError("--max-label must not exceed --N")
    report = verify_movie_moves(args.max_label, N)
    code = 0 if report["all_pass"] else 1
    if args.mutations:
        muts = mutation_report(args.max_label, N)
        report["mutations"] = muts
        if any(v == 0 for v in muts.values()):
            code = 1
    return report, code


def _text(result: Any) -> str:
    if isinstance(result, dict) and "cases" in result:
        lines = [f"{r['status']:>13}  {r['move']:<5} {r['variant']:<22} {r['labels']}" for r in result["cases"]
                 if r["status"] != "pass"]
        pct = 100.0 * result["passed"] / max(result["checked"], 1)
        lines.append(f"{result['passed']}/{result['checked']} scripts pass ({pct:.0f}%), "
                     f"{result['untranscribed']} untranscribed")
        for rule, n in result.get("mutations", {}).items():
            lines.append(f"mutation {rule}: {n} failing checks")
        return "\n".join(lines)
    if isinstance(result, dict):
        return "\n".join(f"{k}: {v}" for k, v in result.items())
    if isinstance(result, list):
        return "\n".join(json.dumps(r, sort_keys=True) for r in result)
    return str(result)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, default=None, help="rank N of sl(N)")
    common.add_argument("--sigma", default=None,
                        help="comma-separated distinct rationals, or 'random' (uses --seed); default 1..N")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized choices")

    p = argparse.ArgumentParser(prog="foamcalc", description="Colored link homology calculators.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficients")
    s.add_argument("alpha")
    s.add_argument("beta")
    s.add_argument("--max-rows", type=int, default=None)
    s.set_defaults(func=cmd_lr)

    s = sub.add_parser("schur-diff", parents=[common], help="Schur function of a difference of alphabets")
    s.add_argument("partition")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.set_defaults(func=cmd_schur_diff)

    s = sub.add_parser("grassmann", parents=[common], help="equivariant Grassmannian cohomology")
    s.add_argument("op", choices=("mult", "trace", "idempotents"))
    s.add_argument("partitions", nargs="*")
    s.add_argument("--a", type=int, required=True)
    s.set_defaults(func=cmd_grassmann)

    s = sub.add_parser("moy", parents=[common], help="MOY evaluation of a closed web")
    s.add_argument("web")
    s.set_defaults(func=cmd_moy)

    s = sub.add_parser("hom-dim", parents=[common], help="graded dimension of a Hom space between webs")
    s.add_argument("source")
    s.add_argument("target")
    s.set_defaults(func=cmd_hom_dim)

    s = sub.add_parser("euler", parents=[common], help="graded Euler characteristic of a colored link")
    s.add_argument("link")
    s.set_defaults(func=cmd_euler)

    s = sub.add_parser("deformed", parents=[common], help="deformed homology of a colored link")
    s.add_argument("link")
    s.set_defaults(func=cmd_deformed)

    s = sub.add_parser("simple-res", parents=[common], help="simple resolution under the favourite coloring")
    s.add_argument("tangle")
    s.set_defaults(func=cmd_simple_res)

    s = sub.add_parser("reidemeister-scalars", parents=[common], help="normalisation scalars table")
    s.add_argument("--max-label", type=int, default=3)
    s.set_defaults(func=cmd_reidemeister_scalars)

    s = sub.add_parser("verify", parents=[common], help="check movie-move and Reidemeister scalar identities")
    s.add_argument("--max-label", type=int, default=3)
    s.add_argument("--mutations", action="store_true", help="also run sign-mutation sensitivity")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, code = args.func(args)
    except (InputError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(result, indent=1, sort_keys=True))
    else:
        print(_text(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
