"""Command-line front end.

    intervalrank check    FILE   full-rank decision with certificate
    intervalrank maxrank  FILE   maximal rank over contained matrices
    intervalrank rohn     FILE   sign-vector and vertex tests (must agree)
    intervalrank rect     FILE   rectangular |Cx| <= D|x| test
    intervalrank oracle   FILE   vertex determinant range or witness search
    intervalrank selftest        worked examples as golden checks

Exit codes: 0 full rank / success, 1 not full rank, 2 usage or input error,
3 internal disagreement between two routes that must agree.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Any, Callable

from . import catalog
from .core import GIMatrix, Kind, contains, det
from .detc import max_rank
from .genfull import full_rank_general, verify_verdict
from .oracle import SampleConfig, singular_witness, vertex_det_range
from .rectlp import rect_check
from .rohn import is_even_type, rohn_full_rank_signs, rohn_full_rank_vertex
from .textio import ParseError, decode_verdict, encode, encode_verdict, parse_document

EXIT_OK, EXIT_NOT_FULL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
MAX_DIM, MAX_BOUNDED = 8, 24

COMMANDS = ("check", "maxrank", "rohn", "rect", "oracle", "selftest")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n\n{self.format_usage()}")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="intervalrank", description="Full-rank decisions for general closed interval matrices.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("input", nargs="?", help="matrix file, or - for standard input")
    ap.add_argument("--format", choices=("text", "structured"), default="text")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--threads", type=int, default=1, help="worker cap; evaluation is currently serial")
    ap.add_argument("--verify-certificate", metavar="FILE", help="re-check a structured check report")
    ap.add_argument("--force", action="store_true", help="lift the size guard")
    ap.add_argument("--timings", action="store_true", help="add wall-clock timings (output no longer reproducible)")
    return ap


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _guard(mu: GIMatrix, force: bool) -> None:
    p, q = mu.shape
    nb = mu.count(Kind.BOUNDED)
    if not force and (max(p, q) > MAX_DIM or nb > MAX_BOUNDED):
        raise UsageError(
            f"matrix is {p}x{q} with {nb} bounded entries; limits are {MAX_DIM} and {MAX_BOUNDED} "
            "(enumeration is exponential). Pass --force to run anyway."
        )


def _require_square(mu: GIMatrix, what: str) -> None:
    if not mu.is_square:
        raise UsageError(f"{what} needs a square matrix, got {mu.shape[0]}x{mu.shape[1]}")


def _require_classical(mu: GIMatrix, what: str) -> None:
    if not mu.is_classical:
        raise UsageError(f"{what} needs bounded entries only")


def cmd_check(mu: GIMatrix, args) -> tuple[int, dict]:
    _require_square(mu, "check")
    if args.verify_certificate:
        try:
            data = json.loads(_read(args.verify_certificate))
            verdict = decode_verdict(data.get("verdict", data))
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read certificate: {exc}") from None
        ok = verify_verdict(mu, verdict)
        return (EXIT_OK if ok else EXIT_NOT_FULL), {"certificate_valid": ok, "decision": verdict.decision}
    v = full_rank_general(mu)
    return (EXIT_OK if v.full_rank else EXIT_NOT_FULL), {"verdict": encode_verdict(v)}


def cmd_maxrank(mu: GIMatrix, args) -> tuple[int, dict]:
    return EXIT_OK, {"max_rank": max_rank(mu), "shape": list(mu.shape)}


def cmd_rohn(mu: GIMatrix, args) -> tuple[int, dict]:
    _require_square(mu, "rohn")
    _require_classical(mu, "rohn")
    signs, vertex = rohn_full_rank_signs(mu), rohn_full_rank_vertex(mu)
    rep = {"sign_vector_test": signs, "even_vertex_test": vertex, "agree": signs == vertex}
    if signs != vertex:
        return EXIT_INTERNAL, rep
    return (EXIT_OK if signs else EXIT_NOT_FULL), rep


def cmd_rect(mu: GIMatrix, args) -> tuple[int, dict]:
    _require_classical(mu, "rect")
    res = rect_check(mu)
    rep: dict[str, Any] = {"full_rank": res.full_rank}
    if not res.full_rank:
        rep.update(matrix=encode(res.matrix), vector=encode(list(res.vector)), side=res.side,
                   verified=res.verify(mu))
    return (EXIT_OK if res.full_rank else EXIT_NOT_FULL), rep


def cmd_oracle(mu: GIMatrix, args) -> tuple[int, dict]:
    _require_square(mu, "oracle")
    if mu.is_classical:
        lo, hi = vertex_det_range(mu)
        full = lo > 0 or hi < 0
        return (EXIT_OK if full else EXIT_NOT_FULL), {
            "method": "vertex_det_range", "det_min": str(lo), "det_max": str(hi), "full_rank": full,
        }
    cfg = SampleConfig(seed=args.seed, trials=args.trials)
    w = singular_witness(mu, cfg)
    rep = {"method": "singular_witness", "seed": args.seed, "trials": args.trials,
           "witness": encode(w) if w is not None else None, "inconclusive": w is None}
    return (EXIT_NOT_FULL if w is not None else EXIT_OK), rep


def run_selftest(seed: int = 0) -> list[tuple[str, bool]]:
    """Golden checks on the worked matrices plus a small randomized cross-check."""
    out = []
    va = full_rank_general(catalog.ALPHA)
    out.append(("alpha: not full rank via condition 2",
                not va.full_rank and va.certificate.kind == "Condition2Violation" and verify_verdict(catalog.ALPHA, va)))
    out.append(("alpha: lower-end matrix has negative determinant", det(catalog.ALPHA_LEFT) < 0))
    out.append(("alpha: displayed vertex matrix has positive determinant", det(catalog.ALPHA_VERTEX) > 0))
    out.append(("alpha: 6/5 matrix is a singular completion",
                contains(catalog.ALPHA, catalog.ALPHA_SINGULAR) and det(catalog.ALPHA_SINGULAR) == 0))
    vb = full_rank_general(catalog.BETA)
    out.append(("beta: full rank", vb.full_rank))
    vd = full_rank_general(catalog.DELTA)
    out.append(("delta: not full rank via condition 1",
                not vd.full_rank and vd.certificate.kind == "Condition1Violation" and verify_verdict(catalog.DELTA, vd)))
    out.append(("vertex example: gamma is even type", is_even_type(catalog.VERTEX_DEMO, catalog.VERTEX_DEMO_EVEN)))
    out.append(("vertex example: delta is odd type", not is_even_type(catalog.VERTEX_DEMO, catalog.VERTEX_DEMO_ODD)))
    rng = random.Random(seed)
    agree = True
    for _ in range(50):
        mu = catalog.random_matrix(rng, rng.randint(1, 3))
        lo, hi = vertex_det_range(mu)
        ref = lo > 0 or hi < 0
        agree &= rohn_full_rank_signs(mu) == rohn_full_rank_vertex(mu) == ref == full_rank_general(mu).full_rank
    out.append(("random bounded 1..3: all routes agree", agree))
    return out


def cmd_selftest(args) -> tuple[int, dict]:
    results = run_selftest(args.seed)
    rep = {"checks": [{"name": n, "pass": ok} for n, ok in results], "all_pass": all(ok for _, ok in results)}
    return (EXIT_OK if rep["all_pass"] else EXIT_INTERNAL), rep


HANDLERS: dict[str, Callable] = {
    "check": cmd_check,
    "maxrank": cmd_maxrank,
    "rohn": cmd_rohn,
    "rect": cmd_rect,
    "oracle": cmd_oracle,
}


def _text(rep: Any, indent: str = "") -> list[str]:
    lines = []
    for k, v in rep.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.extend(_text(v, indent + "  "))
        elif isinstance(v, list) and v and isinstance(v[0], list):
            lines.append(f"{indent}{k}:")
            width = max(len(str(x)) for r in v for x in r)
            lines.extend(f"{indent}  " + " ".join(str(x).rjust(width) for x in r) for r in v)
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{indent}{k}:")
            for item in v:
                lines.append(f"{indent}  - " + ", ".join(f"{a}={b}" for a, b in item.items()))
        else:
            lines.append(f"{indent}{k}: {json.dumps(v) if isinstance(v, (bool, type(None))) else v}")
    return lines


def render(rep: dict, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(rep, indent=2) + "\n"
    return "\n".join(_text(rep)) + "\n"


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1 or args.trials < 1:
            raise UsageError("--threads and --trials must be positive")
        if not 0 <= args.seed < 2**64:
            raise UsageError("--seed must fit in 64 bits")
        t0 = time.perf_counter()
        rep: dict[str, Any] = {"command": args.command}
        if args.command == "selftest":
            code, body = cmd_selftest(args)
        else:
            if args.input is None:
                raise UsageError(f"{args.command} needs an input file (or -)")
            try:
                doc = parse_document(_read(args.input))
            except OSError as exc:
                raise UsageError(f"cannot read {args.input}: {exc}") from None
            mu = doc.matrix
            _guard(mu, args.force)
            rep["input"] = {"name": doc.name, "shape": list(mu.shape)}
            code, body = HANDLERS[args.command](mu, args)
        rep.update(body)
        if args.timings:
            rep["timings"] = {"seconds": round(time.perf_counter() - t0, 6)}
        sys.stdout.write(render(rep, args.format))
        return code
    except (UsageError, ParseError) as exc:
        sys.stderr.write(f"intervalrank: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
