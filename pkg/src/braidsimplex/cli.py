"""Command-line front end: ``braidsimplex <group> <command> ...``.

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage error,
3 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from .errors import BraidSimplexError, InternalAssertion
from .garside import DualPositiveWord, normal_form, qdegree_experiment, max_q_degree
from .matrix import EdgeMatrix
from .noncrossing import NCPartition, Permutation, complement, enumerate_nc, five_permutations
from .rep import BraidWord, RepMode, act_on_norms, evaluate_word
from .rescale import RescalingSpec, build_tree, rescaling_matrix
from .simplex import EdgeNormVector, embed, is_nondegenerate
from .verify import verify_relations, verify_theorem_a, verify_theorem_b

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _number(text: str, mode: str):
    try:
        val = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad number {text!r}") from exc
    return float(val) if mode == "float" else val


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("symbolic", "rational", "float"), default=None)
    p.add_argument("--q", default=None, help="numeric value for q, e.g. 2 or 1/3")
    p.add_argument("--t", default=None, help="numeric value for t (LKB only)")
    return p


# --- nc -------------------------------------------------------------------

def cmd_nc_list(args):
    parts = enumerate_nc(args.n)
    _emit(args, {"n": args.n, "count": len(parts), "partitions": [p.to_json() for p in parts]},
          "\n".join(str(p) for p in parts) + f"\n# {len(parts)} noncrossing partitions")
    return EXIT_OK


def cmd_nc_complement(args):
    sigma = Permutation.parse(args.perm, args.n)
    out = complement(sigma, args.side)
    _emit(args, {"n": args.n, "perm": str(sigma), "side": args.side, "complement": str(out)}, str(out))
    return EXIT_OK


def cmd_nc_five(args):
    s1, s2 = Permutation.parse(args.s1, args.n), Permutation.parse(args.s2, args.n)
    s3, s4, s5 = five_permutations(s1, s2)
    _emit(args, {"n": args.n, "s1": str(s1), "s2": str(s2), "s3": str(s3), "s4": str(s4), "s5": str(s5)},
          f"s3 = {s3}\ns4 = {s4}\ns5 = {s5}")
    return EXIT_OK


# --- rep / rescale --------------------------------------------------------

def _maybe_evaluate(args, m: EdgeMatrix, t_symbolic: bool) -> EdgeMatrix:
    mode = args.mode or "symbolic"
    if args.q is None and args.t is None:
        if mode != "symbolic":
            raise UsageError(f"--mode {mode} needs --q")
        return m
    q0 = _number(args.q, mode) if args.q is not None else None
    t0 = _number(args.t, mode) if args.t is not None else None
    if q0 is None:
        if t0 is None or t0 != int(t0):
            raise UsageError("--t without --q must be an integer")
        return m.subs_t(int(t0))
    return m.evaluate(q0, 1 if t0 is None else t0)


def cmd_rep_matrix(args):
    word = BraidWord.parse(args.word, args.n)
    rep = RepMode.parse(args.rep)
    m = evaluate_word(word, rep)
    m = _maybe_evaluate(args, m, rep.kind == "lkb")
    _emit(args, {"word": str(word), "rep": rep.kind, "matrix": m.to_json()}, m.pretty())
    return EXIT_OK


def cmd_rep_act(args):
    with open(args.norms) as fh:
        v = EdgeNormVector.from_json(json.load(fh))
    if v.n != args.n:
        raise UsageError(f"norms file has n={v.n}, expected {args.n}")
    if args.q is None:
        raise UsageError("rep act needs --q")
    mode = args.mode or "rational"
    q0 = _number(args.q, mode)
    if mode == "float":
        v = v.to_float()
    m = evaluate_word(BraidWord.parse(args.word, args.n), RepMode("simplicial"), q0)
    out = act_on_norms(m, v)
    valid = all(x > 0 for x in out.a) and is_nondegenerate(out)
    payload = {"input": v.to_json(), "output": out.to_json(), "nondegenerate": valid}
    _emit(args, payload, " ".join(str(x) for x in out.a) + f"\nnondegenerate: {valid}")
    return EXIT_OK if valid else EXIT_COUNTEREXAMPLE


def cmd_rescale_matrix(args):
    spec = RescalingSpec.make(args.n, NCPartition.parse(args.scaled, args.n).nontrivial_blocks,
                              _parse_blocks(args.fixed, args.n))
    m = _maybe_evaluate(args, rescaling_matrix(spec), False)
    tree = [{"edge": te.edge.to_json(), "factor": "q" if te.factor.q_degree() else "1"} for te in build_tree(spec)]
    _emit(args, {"spec": str(spec), "tree": tree, "matrix": m.to_json()}, str(spec) + "\n" + m.pretty())
    return EXIT_OK


def _parse_blocks(text: str, n: int):
    body = text.strip().strip("{}")
    out = []
    for part in body.split("|"):
        part = part.strip()
        if part:
            out.append([int(x) for x in (part.split(",") if "," in part else part)])
    return out


# --- verify ---------------------------------------------------------------

def _report_out(args, rep) -> int:
    _emit(args, rep.to_json(include_passing=False) | {"summary": rep.summary()},
          "\n".join([rep.summary()] + [f"FAIL {c.label} {c.detail}" for c in rep.failures]))
    return EXIT_OK if rep.passed else EXIT_COUNTEREXAMPLE


def cmd_verify(args):
    ns = args.n
    if args.what == "relations":
        reps = [verify_relations(n, RepMode.parse(args.rep)) for n in ns]
    elif args.what == "theorem-b":
        reps = [verify_theorem_b(n) for n in ns]
    else:
        q_values = [Fraction(x) for x in (args.q_values or "1/3,1/2,2,3").split(",")]
        reps = [verify_theorem_a(ns if len(ns) > 1 else ns[0], q_values, args.len, args.trials, args.seed)]
    codes = [_report_out(args, r) for r in reps]
    return max(codes)


# --- garside --------------------------------------------------------------

def cmd_garside_nf(args):
    w = DualPositiveWord.parse(args.word, args.n)
    nf = normal_form(w)
    deg = max_q_degree(nf.matrix())
    _emit(args, {"word": w.to_json(), "normal_form": nf.to_json(), "dual_length": len(nf), "max_q_degree": deg},
          f"{nf}\ndual length {len(nf)}, max q-degree {deg}")
    return EXIT_OK


def cmd_garside_qdeg(args):
    rep = qdegree_experiment(args.n, args.trials, args.max_factors, args.seed)
    _emit(args, rep.to_json(include_passing=False) | {"summary": rep.summary()},
          "\n".join([rep.summary(), f"agreement rate {rep.meta['agreement_rate']:.3f}"]
                    + [f"MISMATCH {c.detail}" for c in rep.failures]))
    # experimental: mismatches are findings, not failures
    return EXIT_OK


# --- export ---------------------------------------------------------------

def _faces(n: int) -> list[list[int]]:
    if n == 3:
        return [[0, 1, 2]]
    return [[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]]


def orbit_stages(n: int, word: BraidWord, q0, steps: int, exact: bool = True):
    """Stages v, Mv, M^2 v, ... starting from the regular simplex with unit edges."""
    v = EdgeNormVector(n, tuple(Fraction(1) for _ in range(n * (n - 1) // 2)))
    if not exact:
        v = v.to_float()
    m = evaluate_word(word, RepMode("simplicial"), q0)
    stages = []
    for step in range(steps + 1):
        p = embed(v)
        coords = [list(c) + [0.0] * (3 - len(c)) for c in p.float_coordinates()]
        stages.append({"step": step, "norms": v, "points": coords})
        v = act_on_norms(m, v)
    return stages


def off_mesh(stages, n: int) -> str:
    faces = _faces(n)
    verts = [c for s in stages for c in s["points"]]
    lines = ["OFF", f"{len(verts)} {len(faces) * len(stages)} 0"]
    lines += [" ".join(f"{x:.12g}" for x in c) for c in verts]
    for k in range(len(stages)):
        lines += [f"{len(f)} " + " ".join(str(i + k * n) for i in f) for f in faces]
    return "\n".join(lines) + "\n"


def cmd_export_orbit(args):
    if args.n not in (3, 4):
        raise UsageError("export orbit supports n = 3 or 4")
    if args.q is None:
        raise UsageError("export orbit needs --q")
    mode = args.mode or "rational"
    q0 = _number(args.q, mode)
    word = BraidWord.parse(args.word, args.n)
    stages = orbit_stages(args.n, word, q0, args.steps, exact=mode != "float")
    if args.format == "json":
        doc = {
            "n": args.n, "word": str(word), "q": str(args.q), "faces": _faces(args.n),
            "stages": [{"step": s["step"], "norms": s["norms"].to_json()["a"], "points": s["points"]} for s in stages],
        }
        text = json.dumps(doc, indent=2) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    if args.out and os.path.isdir(args.out):
        for s in stages:
            with open(os.path.join(args.out, f"stage_{s['step']:03d}.off"), "w") as fh:
                fh.write(off_mesh([s], args.n))
    elif args.out:
        with open(args.out, "w") as fh:
            fh.write(off_mesh(stages, args.n))
    else:
        sys.stdout.write(off_mesh(stages, args.n))
    return EXIT_OK


# --- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="braidsimplex", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    nc = groups.add_parser("nc", help="noncrossing partitions").add_subparsers(dest="cmd", required=True)
    p = nc.add_parser("list", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_nc_list)
    p = nc.add_parser("complement", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--perm", required=True)
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.set_defaults(func=cmd_nc_complement)
    p = nc.add_parser("five", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s1", required=True)
    p.add_argument("--s2", required=True)
    p.set_defaults(func=cmd_nc_five)

    rep = groups.add_parser("rep", help="representation matrices").add_subparsers(dest="cmd", required=True)
    p = rep.add_parser("matrix", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--rep", choices=("lkb", "simplicial", "perm"), default="simplicial")
    p.set_defaults(func=cmd_rep_matrix)
    p = rep.add_parser("act", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--norms", required=True, help='JSON file {"n": N, "a": [...]}')
    p.set_defaults(func=cmd_rep_act)

    rs = groups.add_parser("rescale", help="edge rescaling matrices").add_subparsers(dest="cmd", required=True)
    p = rs.add_parser("matrix", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--scaled", required=True, help='blocks rescaled by q, e.g. "{1,2}"')
    p.add_argument("--fixed", required=True, help='blocks held fixed, e.g. "{2,3,4}"')
    p.set_defaults(func=cmd_rescale_matrix)

    p = groups.add_parser("verify", parents=[common], help="verification suites")
    p.add_argument("what", choices=("relations", "theorem-a", "theorem-b"))
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--len", type=int, default=15)
    p.add_argument("--q-values", default=None, help="comma-separated q values for theorem-a")
    p.add_argument("--rep", choices=("lkb", "simplicial", "perm"), default="lkb")
    p.set_defaults(func=cmd_verify)

    gs = groups.add_parser("garside", help="dual normal forms").add_subparsers(dest="cmd", required=True)
    p = gs.add_parser("nf", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True, help='dual simples, e.g. "{1,2} {2,3}"')
    p.set_defaults(func=cmd_garside_nf)
    p = gs.add_parser("qdeg", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-factors", type=int, default=6)
    p.set_defaults(func=cmd_garside_qdeg)

    ex = groups.add_parser("export", help="mesh export").add_subparsers(dest="cmd", required=True)
    p = ex.add_parser("orbit", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--steps", type=int, default=5)
    p.add_argument("--format", choices=("off", "json"), default="off")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export_orbit)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InternalAssertion as exc:
        print(f"internal assertion: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, BraidSimplexError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
