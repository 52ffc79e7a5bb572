"""Command-line front end.

Exit status: 0 on success, 1 when a checked law fails (or terms differ),
2 on usage errors such as bad flags, unreadable files or ill-typed terms.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import compact as cc
from .feedback import (
    RelationSyntaxError,
    additive_trace,
    additive_trace_by_chains,
    parse_relation,
    sample_trajectories,
)
from .laws import LawId, iter_suite, solve_scalar, teleport_sides, trace_projector_sides
from .matcat import (
    Morphism,
    ObjectMismatch,
    TensorObject,
    compose,
    identity,
    scalar,
    scalar_mul,
    tensor,
)
from .semiring import HOMS, SEMIRINGS, CRat, SemiringError, get_semiring
from .termlang import (
    RandomEval,
    TermSyntaxError,
    TermTypeError,
    UnboundGenerator,
    eval_term,
    load_program,
    show,
    terms_equal,
)
from .termlang.syntax import Parser
from .transfer import apply_functor, check_preservation, lift

FEEDBACK_DEMO = """\
[X]
in
[Y]
out
[Z]
a, b, c
in -> a
a -> b
b -> a
b -> c
c -> out
"""


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, obj: dict, text: str):
    if args.format == "jsonl":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _matrix_json(m: Morphism) -> dict:
    return {"dom": str(m.dom), "cod": str(m.cod),
            "matrix": [[str(x) for x in r] for r in m.rows]}


# -- commands ------------------------------------------------------------------

def cmd_laws(args) -> int:
    S = get_semiring(args.semiring)
    wanted = set(args.law or ())
    failed = False
    for rep in iter_suite(S, args.dim, args.trials, args.seed):
        if wanted and rep.law.value not in wanted:
            continue
        failed |= not rep.passed
        print(rep.to_json() if args.format == "jsonl" else rep.to_text())
    return 1 if failed else 0


def cmd_eval(args) -> int:
    S = get_semiring(args.semiring)
    env, model, term = load_program(_read(args.term), S)
    if args.model:
        env, model, extra = load_program(_read(args.model), S, into=(env, model))
        if extra is not None:
            raise UsageError(f"{args.model} is a model file and may not contain a term")
    if term is None:
        raise UsageError(f"{args.term} has no term to evaluate")
    m = eval_term(term, env, model, S)
    _emit(args, {"term": show(term), **_matrix_json(m)},
          f"{show(term)} : {m.dom} -> {m.cod}\n{m.pretty()}")
    return 0


def cmd_equal(args) -> int:
    env, _, t1 = load_program(_read(args.left))
    env, _, t2 = load_program(_read(args.right), into=(env, {}))
    if t1 is None or t2 is None:
        raise UsageError("both files must contain a term")
    strategy = "wiring" if args.strategy == "wiring" else RandomEval(args.trials, args.seed)
    v = terms_equal(t1, t2, env, strategy)
    _emit(args, v.to_json(), v.to_text())
    return 0 if v.equal else 1


def cmd_demo(args) -> int:
    return {"teleport": _demo_teleport, "trace-projectors": _demo_trace_projectors,
            "feedback": _demo_feedback}[args.name](args)


def _parse_matrix(text: str) -> Morphism:
    p = Parser(text)
    try:
        rows = p.matrix()
        if p.tok.kind != "eof":
            p.error("expected end of input")
    except TermSyntaxError as exc:
        raise UsageError(f"bad matrix {text!r}: {exc.msg}") from None
    rows = [[CRat.from_literal(x) for x in r] for r in rows]
    return Morphism(rows, TensorObject.of(len(rows[0])), TensorObject.of(len(rows)), CRat)


def _demo_teleport(args) -> int:
    f = _parse_matrix(args.matrix)
    xi = cc.conjugate(f)
    lhs, rhs = teleport_sides(f, xi)
    s, holds = solve_scalar(lhs, rhs)
    ok = holds and s == CRat.one
    if args.format == "jsonl":
        print(json.dumps({"demo": "teleport", "f": f.literal(), "xi": xi.literal(),
                          "lhs": lhs.literal(), "rhs": rhs.literal(),
                          "s": None if s is None else str(s), "passed": ok}, sort_keys=True))
    else:
        print(f"f  : {f.dom} -> {f.cod}\n{f.pretty()}")
        print(f"xi = f_* : {xi.dom} -> {xi.cod}\n{xi.pretty()}")
        print("lhs = f (x) (|1| o |xi|_)")
        print(lhs.pretty())
        print("rhs = sigma o (P_1 (x) 1) o (1 (x) P_f)")
        print(rhs.pretty())
        print(f"s = {s}" if holds else "no scalar relates the two sides")
    return 0 if ok else 1


def _demo_trace_projectors(args) -> int:
    rng = random.Random(f"{args.seed}:trace-projectors")
    A, B, C = TensorObject.of(2), TensorObject.of(2), TensorObject.of(args.dim)
    S = CRat
    n = 2 * args.dim
    f = Morphism([[S(rng.randint(-3, 3), rng.randint(-1, 1)) for _ in range(n)] for _ in range(n)],
                 A @ C, B @ C, S)
    lhs, rhs = trace_projector_sides(f, A, B, C, identity(C, S))
    s, holds = solve_scalar(lhs, rhs)
    # bend the projector loops shut: (1 (x) |1|_) o rhs o (1 (x) |1|) = n^2 . Tr(f)
    closed = compose(compose(tensor(identity(B, S), cc.coname(identity(C, S))), rhs),
                     tensor(identity(A, S), cc.name(identity(C.dual, S))))
    d = S.from_int(C.total_dim)
    recovered = scalar_mul(scalar((d * d).inverse()), closed)
    direct = cc.trace(f, A, B, C)
    ok = holds and s == S.one and recovered == direct
    if args.format == "jsonl":
        print(json.dumps({"demo": "trace-projectors", "f": f.literal(),
                          "s": None if s is None else str(s),
                          "trace": direct.literal(), "recovered": recovered.literal(),
                          "passed": ok}, sort_keys=True))
    else:
        print(f"f : {f.dom} -> {f.cod}\n{f.pretty()}")
        print(f"sandwich (1 (x) P) o (f (x) 1) o (1 (x) P) equals s . Tr(f) (x) |1| o |1|_ "
              f"with s = {s}")
        print(f"Tr(f) recovered from the sandwich:\n{recovered.pretty()}")
        print(f"Tr(f) by index sum:\n{direct.pretty()}")
        print("match" if recovered == direct else "MISMATCH")
    return 0 if ok else 1


def _demo_feedback(args) -> int:
    text = _read(args.input) if args.input else FEEDBACK_DEMO
    try:
        R = parse_relation(text)
    except RelationSyntaxError as exc:
        raise UsageError(str(exc)) from None
    tr = additive_trace(R)
    oracle = additive_trace_by_chains(R)
    rng = random.Random(f"{args.seed}:feedback")
    walks = sample_trajectories(R, rng, walks=args.walks)
    pairs = [(R.name("x", i), R.name("y", j)) for j, i, _ in tr.entries()]
    ok = tr == oracle
    if args.format == "jsonl":
        print(json.dumps({"demo": "feedback", "trace": sorted(pairs),
                          "walks": walks, "passed": ok}, sort_keys=True))
    else:
        nx, ny, nz = R.sizes
        print(f"|X| = {nx}, |Y| = {ny}, |Z| = {nz}, {len(list(R.edges()))} edges")
        for w in walks:
            print("walk: " + " -> ".join(w))
        print("additive trace (reachability through Z):")
        for x, y in sorted(pairs):
            print(f"  {x} ~> {y}")
        if not pairs:
            print("  (empty)")
        print("closure agrees with chain search" if ok else "closure DISAGREES with chain search")
    return 0 if ok else 1


def cmd_transfer(args) -> int:
    F = lift(args.hom)
    if args.input:
        env, model, term = load_program(_read(args.input), F.source)
        for g in sorted(model):
            m = apply_functor(F, model[g])
            _emit(args, {"gen": g, **_matrix_json(m)}, f"F({g}) : {m.dom} -> {m.cod}\n{m.pretty()}")
        if term is not None:
            image_model = {g: apply_functor(F, m) for g, m in model.items()}
            a = apply_functor(F, eval_term(term, env, model, F.source))
            b = eval_term(term, env, image_model, F.target)
            same = a == b
            related = same or (F.lax and all(x <= y for ra, rb in zip(a.rows, b.rows)
                                             for x, y in zip(ra, rb)))
            _emit(args, {"term": show(term), "F(eval)": a.matrix_str(),
                         "eval(F)": b.matrix_str(), "equal": same},
                  f"F(eval t) = {a.matrix_str()}\neval(F t) = {b.matrix_str()}\n"
                  + ("equal" if same else "F(eval t) <= eval(F t)" if related else "NOT related"))
            return 0 if related else 1
        return 0
    failed = False
    for rep in check_preservation(F, args.trials, args.dim, args.seed):
        failed |= not rep.passed
        print(rep.to_json() if args.format == "jsonl" else rep.to_text())
    return 1 if failed else 0


# -- argument parsing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--semiring", choices=sorted(SEMIRINGS), default="crat")
    common.add_argument("--dim", type=_positive, default=3, help="dimension bound")
    common.add_argument("--trials", type=_positive, default=20)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "jsonl"), default="text")

    p = argparse.ArgumentParser(prog="compactcat",
                                description="Matrix models of strongly compact closed categories.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("laws", parents=[common], help="check the law catalog on random instances")
    s.add_argument("--law", action="append", choices=[l.value for l in LawId],
                   help="restrict to this law (repeatable)")
    s.set_defaults(fn=cmd_laws)

    s = sub.add_parser("eval", parents=[common], help="evaluate a term file")
    s.add_argument("term")
    s.add_argument("model", nargs="?", help="file with generator matrices")
    s.set_defaults(fn=cmd_eval)

    s = sub.add_parser("equal", parents=[common], help="compare the terms in two files")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--strategy", choices=("wiring", "random"), default="wiring")
    s.set_defaults(fn=cmd_equal)

    s = sub.add_parser("demo", parents=[common], help="run a worked example")
    s.add_argument("name", choices=("teleport", "trace-projectors", "feedback"))
    s.add_argument("input", nargs="?", help="relation file for the feedback demo")
    s.add_argument("--matrix", default="[[0,1],[1,0]]", help="f for the teleport demo")
    s.add_argument("--walks", type=_positive, default=3, help="sampled walks in the feedback demo")
    s.set_defaults(fn=cmd_demo)

    s = sub.add_parser("transfer", parents=[common],
                       help="push matrices along a semiring homomorphism")
    s.add_argument("hom", choices=sorted(HOMS))
    s.add_argument("input", nargs="?", help="term or model file over the source semiring")
    s.set_defaults(fn=cmd_transfer)
    return p


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, TermSyntaxError, TermTypeError, UnboundGenerator, SemiringError,
            ObjectMismatch, RelationSyntaxError) as exc:
        print(f"compactcat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
