"""Command line front end: check, analyze, is-a, decompose, generate, verify."""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
import time
from collections import Counter
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import __version__, generators
from .aclass import Undecided, is_A
from .decomp import DecompError, SplitFailed, triangular_decomposition
from .exactfield import FieldError, field_from_name
from .liealg import (
    LieAlgebra,
    LieAlgebraError,
    ParseError,
    algebra_to_json,
    check_jacobi,
    dump_algebra,
    load_algebra,
)
from .oracle import BudgetExceeded, EnumBudget
from .structure import structure_report
from .theorems import FAIL, THEOREM_IDS, verify_theorems

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_NOT_A, EXIT_UNDECIDED, EXIT_THEOREM = 0, 1, 2, 3, 4, 5

STATUSES = ("pass", "fail", "not_applicable", "proxy_mismatch", "budget")


@dataclass
class RunReport:
    input: dict
    seed: int
    budget: dict
    structure: dict | None = None
    certificate: dict | None = None
    decomposition: dict | None = None
    theorems: dict | None = None
    timings: dict | None = None
    version: str = __version__

    def to_json(self) -> dict:
        out = {"version": self.version, "input": self.input, "seed": self.seed, "budget": self.budget}
        for key in ("structure", "certificate", "decomposition", "theorems", "timings"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


class _Timer:
    def __init__(self, on: bool):
        self.on, self.marks = on, {}

    def run(self, key, fn):
        t = time.perf_counter()
        try:
            return fn()
        finally:
            if self.on:
                self.marks[key] = round(time.perf_counter() - t, 4)


def _budget(args) -> EnumBudget:
    return EnumBudget(max_subspaces=args.max_subspaces, max_pairs=args.max_pairs, wall_clock=args.wall_clock)


def _budget_json(b: EnumBudget) -> dict:
    return {"max_subspaces": b.max_subspaces, "max_pairs": b.max_pairs, "wall_clock": b.wall_clock}


def _emit(obj, out: str | None):
    text = json.dumps(obj, indent=1, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _load(path):
    """(algebra, None) or (None, exit code) after printing the problem."""
    try:
        L = load_algebra(path, check=False)
    except (ParseError, FieldError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return None, EXIT_PARSE
    try:
        check_jacobi(L)
    except LieAlgebraError as exc:
        print(f"invalid algebra: {exc}", file=sys.stderr)
        return None, EXIT_INVALID
    return L, None


def _certificate(L: LieAlgebra, method: str, budget: EnumBudget, seed: int):
    """(ACertificate or None, json)."""
    try:
        cert = is_A(L, method, budget, seed)
    except (Undecided, BudgetExceeded) as exc:
        return None, {"verdict": None, "undecided": f"{type(exc).__name__}: {exc}"}
    return cert, cert.to_json(L.field)


def _verdicts_json(verdicts) -> dict:
    return {k: v.to_json() for k, v in verdicts.items()}


# --- subcommands -----------------------------------------------------------------

def cmd_check(args) -> int:
    L, code = _load(args.path)
    if code is not None:
        return code
    print(f"ok: dim {L.dim} over {L.field}")
    return EXIT_OK


_A_METHODS = {"auto": "auto", "oracle": "oracle_pairs", "oracle_pairs": "oracle_pairs", "structural": "structural"}


def cmd_analyze(args) -> int:
    L, code = _load(args.path)
    if code is not None:
        return code
    budget = _budget(args)
    timer = _Timer(args.timings)
    cert, cert_json = timer.run("is_A", lambda: _certificate(L, _A_METHODS[args.method], budget, args.seed))
    is_a = None if cert is None else cert.verdict
    rep = timer.run("structure", lambda: structure_report(L, is_a, args.seed, budget))
    try:
        dec = timer.run("decomposition", lambda: triangular_decomposition(L, args.seed, budget)).to_json()
    except (DecompError, BudgetExceeded) as exc:
        dec = {"absent": f"{type(exc).__name__}: {exc}"}
    thm = None
    if not args.no_theorems:
        thm = _verdicts_json(timer.run("theorems", lambda: verify_theorems(L, args.seed, budget)))
    report = RunReport(
        input={"path": str(args.path), "field": str(L.field), "dim": L.dim, "algebra": algebra_to_json(L)},
        seed=args.seed, budget=_budget_json(budget), structure=rep.to_json(), certificate=cert_json,
        decomposition=dec, theorems=thm, timings=timer.marks if args.timings else None,
    )
    _emit(report.to_json(), args.out)
    return EXIT_OK


def cmd_is_a(args) -> int:
    L, code = _load(args.path)
    if code is not None:
        return code
    cert, js = _certificate(L, _A_METHODS[args.method], _budget(args), args.seed)
    print(json.dumps(js, sort_keys=True))
    if cert is None:
        return EXIT_UNDECIDED
    return EXIT_OK if cert.verdict else EXIT_NOT_A


def cmd_decompose(args) -> int:
    L, code = _load(args.path)
    if code is not None:
        return code
    try:
        t = triangular_decomposition(L, args.seed, _budget(args))
    except SplitFailed as exc:
        print(f"no split: {exc}", file=sys.stderr)
        return EXIT_NOT_A
    except (DecompError, BudgetExceeded) as exc:
        print(f"undecided: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    _emit(t.to_json(), args.out)
    return EXIT_OK


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _generate(args) -> LieAlgebra:
    f = field_from_name(args.field)
    kind = args.kind
    if kind == "abelian":
        return generators.abelian(f, args.dim)
    if kind == "two-dim":
        return generators.two_dim_nonabelian(f)
    if kind == "heisenberg":
        return generators.heisenberg(f)
    if kind == "example-2-4":
        return generators.example_2_4(f)
    if kind == "weyl-block":
        return generators.weyl_block(f)
    if kind == "theorem-6-1":
        rows = [_ints(r) for r in args.lambdas.split(";")]
        params = generators.Theorem61Params(len(rows), len(rows[0]), rows)
        return generators.theorem_6_1_algebra(params, f)
    if kind == "theorem-6-6":
        lam = _ints(args.lambdas) if args.lambdas else [0] * args.n
        return generators.theorem_6_6_algebra(f.characteristic, args.n, lam, f)
    if kind == "random-solvable":
        return generators.random_solvable(args.seed, args.dim_max, f)
    if kind == "random-a":
        return generators.random_A_candidate(args.seed, f, args.dim_max)
    raise ValueError(kind)


def cmd_generate(args) -> int:
    try:
        L = _generate(args)
    except (generators.GenerationError, FieldError, ValueError) as exc:
        print(f"cannot generate: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.out:
        dump_algebra(L, args.out)
    else:
        print(json.dumps(algebra_to_json(L), indent=1, sort_keys=True))
    return EXIT_OK


# --- verify ----------------------------------------------------------------------

def corpus_items(corpus: str, fields: list[str], dim_max: int, count: int, seed: int,
                 a_count: int = 0, files=()) -> list[dict]:
    """Descriptors of corpus members; each one regenerates its algebra on its own."""
    if corpus == "files":
        return [{"kind": "file", "path": str(p)} for p in files]
    items = []
    for i in range(count):
        items.append({"kind": "random_solvable", "field": fields[i % len(fields)],
                      "seed": seed * 100_000 + i, "dim_max": dim_max})
    for i in range(a_count):
        items.append({"kind": "random_A", "field": fields[i % len(fields)],
                      "seed": seed * 100_000 + i, "dim_max": dim_max})
    return items


def build_item(desc: dict) -> LieAlgebra:
    if desc["kind"] == "file":
        return load_algebra(desc["path"])
    f = field_from_name(desc["field"])
    if desc["kind"] == "random_solvable":
        return generators.random_solvable(desc["seed"], desc["dim_max"], f)
    return generators.random_A_candidate(desc["seed"], f, desc["dim_max"])


def _verify_one(job):
    desc, seed, budget = job
    try:
        L = build_item(desc)
    except (LieAlgebraError, FieldError, OSError) as exc:
        return {"item": desc, "error": f"{type(exc).__name__}: {exc}"}
    verdicts = verify_theorems(L, seed, budget)
    out = {"item": desc, "dim": L.dim, "theorems": _verdicts_json(verdicts)}
    if any(v.status == FAIL for v in verdicts.values()):
        out["algebra"] = algebra_to_json(L)
    return out


def run_corpus(items, seed: int, budget: EnumBudget, threads: int = 1) -> list[dict]:
    jobs = [(d, seed, budget) for d in items]
    if threads <= 1 or len(jobs) <= 1:
        return [_verify_one(j) for j in jobs]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(threads) as pool:
        # imap keeps input order whatever the completion order
        return list(pool.imap(_verify_one, jobs, chunksize=1))


def summary_rows(results) -> list[tuple]:
    counts = {k: Counter() for k in THEOREM_IDS}
    for r in results:
        for k, v in r.get("theorems", {}).items():
            counts[k][v["status"]] += 1
    return [(k,) + tuple(counts[k][s] for s in STATUSES) for k in THEOREM_IDS]


def cmd_verify(args) -> int:
    fields = [s for s in args.field.split(",") if s]
    items = corpus_items(args.corpus, fields, args.dim_max, args.count, args.seed, args.a_count, args.files)
    budget = _budget(args)
    t0 = time.perf_counter()
    results = run_corpus(items, args.seed, budget, args.threads)
    print("theorem\t" + "\t".join(STATUSES))
    for row in summary_rows(results):
        print("\t".join(str(x) for x in row))
    failed = False
    for r in results:
        if "error" in r:
            print(json.dumps({"item": r["item"], "error": r["error"]}, sort_keys=True), file=sys.stderr)
            failed = True
            continue
        for k, v in r["theorems"].items():
            if v["status"] == FAIL:
                failed = True
                # everything needed to replay the failing check
                print(json.dumps({"check": k, "item": r["item"], "verdict": v, "algebra": r["algebra"]},
                                 sort_keys=True), file=sys.stderr)
    if args.out:
        report = {"version": __version__, "seed": args.seed, "budget": _budget_json(budget),
                  "items": results}
        if args.timings:
            report["timings"] = {"total": round(time.perf_counter() - t0, 3)}
        _emit(report, args.out)
    return EXIT_THEOREM if failed else EXIT_OK


# --- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="solvlie", description="Exact analysis of solvable Lie algebras.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, path=True):
        if path:
            sp.add_argument("path")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--max-pairs", type=int, default=EnumBudget.max_pairs)
        sp.add_argument("--max-subspaces", type=int, default=EnumBudget.max_subspaces)
        sp.add_argument("--wall-clock", type=float, default=None)
        sp.add_argument("--out")

    sp = sub.add_parser("check", help="validate an algebra file")
    sp.add_argument("path")
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("analyze", help="full structure report")
    common(sp)
    sp.add_argument("--method", choices=sorted(_A_METHODS), default="auto")
    sp.add_argument("--timings", action="store_true")
    sp.add_argument("--no-theorems", action="store_true")
    sp.set_defaults(fn=cmd_analyze)

    sp = sub.add_parser("is-a", help="decide whether every nilpotent subalgebra is abelian")
    common(sp)
    sp.add_argument("--method", choices=sorted(_A_METHODS), default="auto")
    sp.set_defaults(fn=cmd_is_a)

    sp = sub.add_parser("decompose", help="triangular decomposition into abelian pieces")
    common(sp)
    sp.set_defaults(fn=cmd_decompose)

    sp = sub.add_parser("generate", help="write a named or random algebra")
    sp.add_argument("kind", choices=["abelian", "two-dim", "heisenberg", "example-2-4", "weyl-block",
                                     "theorem-6-1", "theorem-6-6", "random-solvable", "random-a"])
    sp.add_argument("--field", default="gf2")
    sp.add_argument("--dim", type=int, default=3)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--lambdas", default="")
    sp.add_argument("--dim-max", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_generate)

    sp = sub.add_parser("verify", help="run the theorem checks over a corpus")
    common(sp, path=False)
    sp.add_argument("--corpus", choices=["random", "files"], default="random")
    sp.add_argument("--files", nargs="*", default=[])
    sp.add_argument("--field", default="gf2")
    sp.add_argument("--dim-max", type=int, default=5)
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--a-count", type=int, default=0, help="extra random A-candidates")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--timings", action="store_true")
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
