"""Command line interface.

Exit codes: 0 success, 2 parse or validation error, 3 size guard exceeded,
4 internal verification failure.  ``--json`` switches every subcommand to
one JSON record per line.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .carlitz import (
    carlitz_identity,
    carlitz_rank,
    carlitz_rank_oracle,
    decompose_carlitz,
    rank_distribution,
    transposition_0a,
    zieve_identity,
)
from .errors import DepthExhausted, FieldError, GuardError, ParseError, VerificationError
from .gf import format_field, parse_field
from .perm import format_perm, parse_perm, star_stats
from .reps import (
    AlgebraicRep,
    CombinatorialRep,
    enumerate_A,
    enumerate_C,
    eval_algebraic,
    eval_combinatorial,
    format_rep,
    parse_rep,
    recipe_backward,
    recipe_forward,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_VERIFY = 4


class _Out:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def record(self, rec: dict, text: str):
        print(json.dumps(rec) if self.as_json else text, file=self.stream)


def _evaluate(rep):
    return eval_algebraic(rep) if isinstance(rep, AlgebraicRep) else eval_combinatorial(rep)


def cmd_convert(args, out: _Out) -> int:
    field = parse_field(args.field)
    rep = parse_rep(field, args.rep)
    if args.dir == "a2c":
        if not isinstance(rep, AlgebraicRep):
            raise ParseError("a2c expects an algebraic representation (alg: ...)")
        result = recipe_forward(rep)
    else:
        if not isinstance(rep, CombinatorialRep):
            raise ParseError("c2a expects a combinatorial representation (comb: ...)")
        result = recipe_backward(rep)
    sigma = _evaluate(rep)
    verified = _evaluate(result) == sigma
    rec = {
        "field": format_field(field),
        "input": format_rep(rep),
        "output": format_rep(result),
        "k": result.k,
        "verified": verified,
    }
    if args.perm_out:
        rec["perm"] = format_perm(sigma)
    text = f"{rec['output']}\nverified: {str(verified).lower()}"
    if args.perm_out:
        text += f"\nperm: {rec['perm']}"
    out.record(rec, text)
    return EXIT_OK if verified else EXIT_VERIFY


def _field_perm(args):
    field = parse_field(args.field)
    f = parse_perm(field, args.perm)
    if not f.fixes_infinity():
        raise ParseError("permutation moves inf; expected a permutation of GF(q)")
    return field, f


def cmd_rank(args, out: _Out) -> int:
    field, f = _field_perm(args)
    res = carlitz_rank(f)
    rec = {"field": format_field(field), "perm": format_perm(f), "rank": res.rank, "method": res.method}
    lines = [f"rank: {res.rank}"]
    status = EXIT_OK
    if args.witness:
        alg = res.algebraic()
        ok = eval_combinatorial(res.witness) == f and eval_algebraic(alg) == f
        rec.update(witness=format_rep(res.witness), algebraic=format_rep(alg), verified=ok)
        lines += [f"witness: {rec['witness']}", f"algebraic: {rec['algebraic']}", f"verified: {str(ok).lower()}"]
        if not ok:
            status = EXIT_VERIFY
    if args.oracle:
        oracle = carlitz_rank_oracle(f)
        agree = oracle == res.rank
        rec.update(oracle=oracle, agree=agree)
        lines += [f"oracle: {oracle}", f"agree: {str(agree).lower()}"]
        if not agree:
            status = EXIT_VERIFY
    out.record(rec, "\n".join(lines))
    return status


def cmd_decompose(args, out: _Out) -> int:
    field, f = _field_perm(args)
    try:
        rep = decompose_carlitz(f)
        verified = eval_algebraic(rep) == f and rep.mu.is_polynomial()
    except VerificationError:
        rep, verified = None, False
    st = star_stats(f)
    rec = {
        "field": format_field(field),
        "perm": format_perm(f),
        "k": rep.k if rep else None,
        "s": st.s,
        "t": st.t,
        "rep": format_rep(rep) if rep else None,
        "verified": verified,
    }
    out.record(rec, f"k: {rec['k']}\n{rec['rep']}\nverified: {str(verified).lower()}")
    return EXIT_OK if verified else EXIT_VERIFY


def cmd_enumerate(args, out: _Out) -> int:
    field = parse_field(args.field)
    sigma = parse_perm(field, args.perm)
    A = enumerate_A(sigma, args.k)
    C = enumerate_C(sigma, args.k)
    forward_ok = {recipe_forward(r) for r in A} == C
    backward_ok = {recipe_backward(r) for r in C} == A
    evals_ok = all(_evaluate(r) == sigma for r in A | C)
    ok = len(A) == len(C) and forward_ok and backward_ok and evals_ok
    rec = {
        "field": format_field(field),
        "perm": format_perm(sigma),
        "k": args.k,
        "A": len(A),
        "C": len(C),
        "bijection": "ok" if ok else "fail",
    }
    out.record(rec, f"|A|={len(A)} |C|={len(C)} bijection:{rec['bijection']}")
    if args.list:
        for r in sorted(A, key=lambda r: r.a_list):
            image = recipe_forward(r)
            out.record(
                {"alg": format_rep(r), "comb": format_rep(image)},
                f"{format_rep(r)}  <->  {format_rep(image)}",
            )
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_identities(args, out: _Out) -> int:
    field = parse_field(args.field)
    a = int(args.a)
    if not 0 < a < field.q:
        raise ParseError(f"--a must be a nonzero element of GF({field.q})")
    target = transposition_0a(field, a)
    status = EXIT_OK
    for name, builder in (("carlitz", carlitz_identity), ("zieve", zieve_identity)):
        try:
            rep = builder(field, a)
            ok = eval_algebraic(rep) == target
        except VerificationError:
            rep, ok = None, False
        if not ok:
            status = EXIT_VERIFY
        text_rep = format_rep(rep) if rep else None
        out.record(
            {"field": format_field(field), "a": a, "name": name, "rep": text_rep, "verified": ok},
            f"{name}: {text_rep}  verified: {str(ok).lower()}",
        )
    return status


def cmd_dist(args, out: _Out) -> int:
    field = parse_field(args.field)
    hist = rank_distribution(field, sample=args.sample, seed=args.seed)
    rec = {
        "field": format_field(field),
        "mode": "exhaustive" if args.sample is None else "sample",
        "histogram": {str(k): v for k, v in hist.items()},
        "total": sum(hist.values()),
    }
    if args.sample is not None:
        rec["seed"] = args.seed
    text = "{" + ", ".join(f"{k}: {v}" for k, v in hist.items()) + "}"
    out.record(rec, text)
    return EXIT_OK


def cmd_verify(args, out: _Out) -> int:
    field = parse_field(args.field)
    if args.suite == "all":
        names = list(verify_mod.SUITES)
    elif args.suite in verify_mod.SUITES:
        names = [args.suite]
    else:
        raise ParseError(f"unknown suite {args.suite!r}; choose from {', '.join(verify_mod.SUITES)} or all")
    failed = False
    for res in verify_mod.run_suites(field, names, seed=args.seed):
        failed |= res.status == "fail"
        rec = {"suite": res.name, "status": res.status, "checked": res.checked, "failures": res.failures}
        if res.skipped:
            rec["reason"] = res.skipped
        detail = res.skipped or f"{res.checked} checks"
        text = f"{res.status.upper():4} {res.name} ({detail})"
        for msg in res.failures:
            text += f"\n     {msg}"
        out.record(rec, text)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projperm",
        description="Chains of x^(q-2) and star transpositions on P^1(GF(q)); Carlitz rank.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--field", required=True, help="q=<p>^<n>[;mod=<c_n>,...,<c_0>]")
        p.add_argument("--json", action="store_true", help="one JSON record per line")
        p.set_defaults(func=func)
        return p

    p = add("convert", cmd_convert, "convert between algebraic and combinatorial representations")
    p.add_argument("--dir", required=True, choices=["a2c", "c2a"])
    p.add_argument("--rep", required=True)
    p.add_argument("--perm-out", action="store_true", help="also print the evaluated permutation")

    p = add("rank", cmd_rank, "exact Carlitz rank of a permutation of GF(q)")
    p.add_argument("--perm", required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check with breadth-first search")
    p.add_argument("--witness", action="store_true")

    p = add("decompose", cmd_decompose, "write a permutation of GF(q) as a chain of x^(q-2) and affine maps")
    p.add_argument("--perm", required=True)

    p = add("enumerate", cmd_enumerate, "enumerate both representation sets of a permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print every pair of matched representations")

    p = add("identities", cmd_identities, "the two classical chains for the 2-cycle (0 a)")
    p.add_argument("--a", required=True)

    p = add("dist", cmd_dist, "histogram of Carlitz ranks")
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    p = add("verify", cmd_verify, "run the built-in verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.json)
    try:
        return args.func(args, out)
    except (GuardError, DepthExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ParseError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
