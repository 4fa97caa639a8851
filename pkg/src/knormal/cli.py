"""Command-line front end: ``knormal {search,verify,extend,factor}``.

Field elements are written as integer encodings in [0, q).  Polynomials
are accepted as caret expressions (``x^4+x+1``) or little-endian
encoding lists (``1,1,0,0,1``).  Data goes to stdout (or ``--out``),
diagnostics to stderr; set ``KNORMAL_LOG=DEBUG`` for progress logging.

Exit statuses: 0 success, 1 verify found a different k, 2 parse or
validation error, 3 a hypothesis or trace gate failed, 4 internal
disagreement between methods.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .construct import (
    MAX_DEGREE,
    VERIFY_BUDGET,
    prop23_compose,
    prop24_sequence,
    theorem31_step,
    theorem32_sequence,
)
from .errors import BudgetExceeded, KNormalError, ValidationError
from .field import GF
from .knormality import classify
from .parse import format_poly, parse_poly
from .poly import Poly, divisor_table, factor_xn_minus_1, is_irreducible

log = logging.getLogger("knormal")

MAX_CANDIDATES = 1 << 20


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2, help="characteristic (default 2)")
    common.add_argument("--m", type=int, default=1, help="F_q = F_{p^m} (default 1)")
    common.add_argument("--modulus", help="modulus of F_q over F_p; default is the smallest irreducible")
    common.add_argument("--format", choices=["human", "jsonl"], default="human")
    common.add_argument("--out", help="write data output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="knormal", description="Construct and verify k-normal polynomials over F_q.")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("search", parents=[common], help="list monic irreducibles of degree n with a given k")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--jobs", type=int, default=1, help="worker processes")
    s.add_argument("--max-candidates", type=int, default=MAX_CANDIDATES)

    v = sub.add_parser("verify", parents=[common], help="classify one polynomial")
    v.add_argument("--poly", required=True)
    v.add_argument("--k", type=int)

    e = sub.add_parser("extend", parents=[common], help="extend a seed by a recursive construction")
    e.add_argument("--poly", required=True)
    mode = e.add_mutually_exclusive_group()
    mode.add_argument("--theorem", choices=["3.1", "3.2"])
    mode.add_argument("--prop", choices=["2.3", "2.4"])
    e.add_argument("--delta", type=int, default=1)
    e.add_argument("--delta0", type=int, default=0)
    e.add_argument("--delta1", type=int, default=1)
    e.add_argument("--delta2", type=int, default=1)
    e.add_argument("--steps", type=int, default=1)
    e.add_argument("--budget", type=int, default=VERIFY_BUDGET, help="largest degree re-checked by the oracles")
    e.add_argument("--max-degree", type=int, default=MAX_DEGREE)

    f = sub.add_parser("factor", parents=[common], help="factor x^n - 1 and count its divisors by degree")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--divisors", action="store_true", help="also list every divisor R and cofactor phi")
    return parser


def make_field(args) -> GF:
    modulus = None
    if args.modulus:
        modulus = parse_poly(args.modulus, GF.make(args.p)).coeffs
    return GF.make(args.p, args.m, modulus)


class Emitter:
    def __init__(self, stream, fmt: str):
        self.stream = stream
        self.fmt = fmt

    def record(self, obj: dict, human: str):
        if self.fmt == "jsonl":
            self.stream.write(json.dumps(obj, sort_keys=True) + "\n")
        else:
            self.stream.write(human + "\n")


# -- search ------------------------------------------------------------------


def _search_range(p, m, modulus, n, lo, hi):
    field = GF(p, m, modulus)
    lead = field.q**n
    out = []
    for low in range(lo, hi):
        f = Poly.from_encoding(field, lead + low)
        if f.coeffs[0] == 0:
            continue
        if is_irreducible(f):
            rep = classify(f)
            out.append((low, rep.k, rep.rank))
    return out


def cmd_search(field: GF, n: int, k=None, jobs: int = 1, max_candidates: int = MAX_CANDIDATES):
    """(polynomial, k, rank) for every monic irreducible of degree n, in encoding order."""
    if n < 1:
        raise ValidationError("n must be positive")
    total = field.q**n
    if total > max_candidates:
        raise BudgetExceeded(f"{total} candidates exceed the search cap {max_candidates}")
    if jobs > 1:
        step = -(-total // (jobs * 4))
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_search_range, field.p, field.m, field.modulus, n, lo, hi) for lo, hi in bounds]
            found = [row for fut in futures for row in fut.result()]
        found.sort()
    else:
        found = _search_range(field.p, field.m, field.modulus, n, 0, total)
    lead = field.q**n
    return [
        (Poly.from_encoding(field, lead + low), kk, rank)
        for low, kk, rank in found
        if k is None or kk == k
    ]


# -- rendering ---------------------------------------------------------------


def _entry_record(entry) -> tuple[dict, str]:
    obj = entry.to_dict()
    k = "?" if entry.k is None else entry.k
    human = f"u={entry.u} degree={entry.degree} k={k} {entry.verified} {format_poly(entry.poly)}"
    return obj, human


def _run(args, out: Emitter) -> int:
    field = make_field(args)
    if args.command == "search":
        for f, k, rank in cmd_search(field, args.n, args.k, args.jobs, args.max_candidates):
            out.record(
                {"coeffs": list(f.coeffs), "k": k, "rank": rank, "degree": f.degree},
                f"{format_poly(f)}  k={k} rank={rank}",
            )
        return 0

    if args.command == "verify":
        f = parse_poly(args.poly, field)
        rep = classify(f)
        obj = {"coeffs": list(f.coeffs), **rep.to_dict()}
        human = "\n".join(
            [
                f"poly: {format_poly(f)}",
                f"degree: {rep.n}",
                f"k: {rep.k}",
                f"rank: {rep.rank}",
                f"proper: {str(rep.proper).lower()}",
                "methods: gcd=agree characterization=agree rank=agree",
                f"gcd witness: {format_poly(rep.gcd_witness)}",
            ]
        )
        out.record(obj, human)
        if args.k is not None and args.k != rep.k:
            print(f"k mismatch: requested {args.k}, found {rep.k}", file=sys.stderr)
            return 1
        return 0

    if args.command == "extend":
        seed = parse_poly(args.poly, field)
        if args.prop == "2.3":
            res = prop23_compose(seed, args.delta0, args.delta1, args.delta2)
            verdict = res.predicted_irreducible
            obj = {
                "u": 1,
                "degree": res.poly.degree,
                "coeffs": list(res.poly.coeffs),
                "k": None,
                "verified": "constructed-unverified",
                "predicted_irreducible": verdict,
            }
            out.record(obj, f"u=1 degree={res.poly.degree} predicted_irreducible={str(verdict).lower()} {format_poly(res.poly)}")
            return 0
        if args.prop == "2.4":
            run = lambda: prop24_sequence(seed, args.delta0, args.delta1, args.steps, args.budget, args.max_degree)
        elif args.theorem == "3.1":
            run = lambda: [theorem31_step(seed, args.delta, args.budget)]
        else:
            run = lambda: theorem32_sequence(seed, args.delta, args.steps, args.budget, args.max_degree)
        try:
            entries = run()
        except BudgetExceeded as exc:
            for entry in exc.partial:
                out.record(*_entry_record(entry))
            raise
        for entry in entries:
            out.record(*_entry_record(entry))
        return 0

    if args.command == "factor":
        fact = factor_xn_minus_1(args.n, field)
        table = divisor_table(fact)
        counts = table.counts()
        obj = {
            "n": fact.n,
            "n1": fact.n1,
            "e": fact.e,
            "t": fact.t,
            "factors": [list(g.coeffs) for g in fact.factors],
            "u": counts,
        }
        lines = [
            f"n={fact.n} n1={fact.n1} e={fact.e} t={fact.t}",
            "factors: " + ", ".join(format_poly(g) for g in fact.factors),
            "u_s: " + " ".join(f"{s}:{c}" for s, c in enumerate(counts)),
        ]
        if args.divisors:
            obj["divisors"] = [
                {"s": s, "exponents": list(d.exponents), "R": list(d.R.coeffs), "phi": list(d.phi.coeffs)}
                for s in range(fact.n)
                for d in table.divisors(s)
            ]
            for s in range(fact.n):
                for d in table.divisors(s):
                    lines.append(f"s={s} R={format_poly(d.R)} phi={format_poly(d.phi)}")
        out.record(obj, "\n".join(lines))
        return 0
    raise AssertionError(args.command)


def main(argv=None) -> int:
    level = os.environ.get("KNORMAL_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    stream = open(args.out, "w") if args.out else sys.stdout
    try:
        return _run(args, Emitter(stream, args.format))
    except KNormalError as exc:
        stream.flush()
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    finally:
        if args.out:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
