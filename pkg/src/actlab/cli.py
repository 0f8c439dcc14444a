"""Command-line interface.

Exit codes: 0 when the command succeeds or the checked property holds, 1 when
it fails (a counterexample was found), 2 on bad input.
"""

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import report as rep
from .acts import make_hom
from .errors import ActlabError
from .fileio import dump_act, load_act, load_monoid, resolve_monoid_ref
from .independence import IndependenceQuery, dependence_witness, minimal_base, splitting_witness
from .independence import type_nonforking
from .injectivity import (
    coproduct_scan,
    is_absolutely_pure,
    is_injective,
    is_n_injective,
    is_weakly_injective,
)
from .monoid import (
    all_left_ideals,
    generation_degree,
    is_commutative,
    is_group,
    reversibility_witness,
    right_reversible,
)
from .saturation import cellular_factorize, chain_problems, saturate
from .typecalc import type_equality_witness, type_rep


class InputError(Exception):
    pass


def index_list(text):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _monoid_path(ref):
    path = resolve_monoid_ref(ref)
    if path is None:
        raise InputError(f"no monoid file or catalog entry named {ref!r}")
    return path


def _act(path):
    if not Path(path).is_file():
        raise InputError(f"no such act file: {path}")
    return load_act(path)


def _act_ref(path):
    """The monoid reference written in an act file's header."""
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            return line.split()[1]
    return "?"


# --- monoid ----------------------------------------------------------------


def analyze_monoid(M):
    ideals = all_left_ideals(M)
    return {
        "size": M.size,
        "ideals": [
            {"elements": i.sorted(), "min_generators": list(i.min_generators),
             "generator_count": i.generator_count}
            for i in ideals
        ],
        "ideal_count": len(ideals),
        "generation_degree": generation_degree(M),
        "right_reversible": right_reversible(M),
        "reversibility_witness": reversibility_witness(M),
        "commutative": is_commutative(M),
        "group": is_group(M),
    }


def cmd_monoid_analyze(args):
    path = _monoid_path(args.path)
    M = load_monoid(path)
    res = analyze_monoid(M)
    lines = [f"ideals: {res['ideal_count']}"]
    for i in res["ideals"]:
        lines.append(f"  {set(i['elements']) or '{}'}  generators {i['min_generators']}")
    lines.append(f"g(S) = {res['generation_degree']}")
    lines.append(f"right reversible: {str(res['right_reversible']).lower()}")
    lines.append(f"commutative: {str(res['commutative']).lower()}")
    return rep.monoid_subject(M, args.path), res, 0, lines


# --- act check -------------------------------------------------------------


def cmd_act_check(args):
    Q = _act(args.act)
    if args.injective:
        v = is_injective(Q)
    elif args.weakly_injective:
        v = is_weakly_injective(Q)
    elif args.n_injective is not None:
        v = is_n_injective(Q, args.n_injective)
    else:
        v = is_absolutely_pure(Q, args.pure)
    res = v.to_json()
    lines = [f"{v.level}: {str(v.verdict).lower()}"]
    if v.counterexample:
        lines.append(f"counterexample: {v.counterexample}")
    return rep.act_subject([Q], args.act), res, 0 if v.verdict else 1, lines


# --- types -----------------------------------------------------------------


def cmd_type_eq(args):
    N1, N2 = _act(args.act1), _act(args.act2)
    if len(args.params1) != len(args.params2):
        raise InputError("--params1 and --params2 must have the same length")
    labels = tuple(range(len(args.params1)))
    p = type_rep(N1, args.tuple1, args.params1, labels)
    q = type_rep(N2, args.tuple2, args.params2, labels)
    res = type_equality_witness(p, q)
    lines = [f"types equal: {str(res['equal']).lower()}"]
    lines.append(f"map: {res['map']}" if res["equal"] else f"violated equation: {res['equation']}")
    subject = rep.act_subject([N1, N2], f"{args.act1} {args.act2}")
    return subject, res, 0 if res["equal"] else 1, lines


# --- independence ----------------------------------------------------------


def cmd_indep_check(args):
    B = _act(args.act)
    w = dependence_witness(IndependenceQuery(B, args.base, args.left, args.right))
    res = {"independent": not w, "witness": sorted(w)}
    lines = [f"independent: {str(not w).lower()}"]
    if w:
        lines.append(f"witness: {sorted(w)}")
    return rep.act_subject([B], args.act), res, 0 if not w else 1, lines


def cmd_indep_base(args):
    B = _act(args.act)
    Z = minimal_base(B, args.base, args.element)
    res = {"base": list(Z), "size": len(Z), "generation_degree": generation_degree(B.monoid)}
    return rep.act_subject([B], args.act), res, 0, [f"minimal base: {list(Z)}"]


def cmd_indep_split(args):
    N = _act(args.act)
    p = type_rep(N, args.tuple, args.params)
    w = splitting_witness(N, p, args.base)
    nf = type_nonforking(p, args.base)
    res = {"splits": w is not None, "nonforking": nf.verdict,
           "forking_witness": sorted(nf.witness)}
    if w is not None:
        res["witness"] = {"N1": list(w[0]), "N2": list(w[1]),
                          "h": {str(k): v for k, v in sorted(w[2].items())}}
    lines = [f"splits: {str(w is not None).lower()}", f"nonforking: {str(nf.verdict).lower()}"]
    return rep.act_subject([N], args.act), res, 0 if w is not None else 1, lines


# --- saturation ------------------------------------------------------------


def cmd_factorize(args):
    K, L = _act(args.K), _act(args.L)
    f = make_hom(K, L, args.embedding)
    chain = cellular_factorize(f)
    steps = []
    for st in chain.steps:
        steps.append({
            "element": st.element,
            "cell": [list(r) for r in st.cell.action],
            "attaching": sorted(st.attaching),
            "attach_hom": list(st.attach_hom.map),
            "size_after": st.after.size,
            "into_target": list(st.to_target.map),
        })
    problems = chain_problems(chain)
    res = {"steps": steps, "composite": list(chain.composite.map),
           "comparison": list(chain.comparison.map), "problems": problems}
    lines = [f"{len(steps)} step(s)"]
    for i, s in enumerate(steps):
        lines.append(f"  step {i}: add orbit of {s['element']}, glued along {s['attaching']}")
    lines += problems
    subject = rep.act_subject([K, L], f"{args.K} {args.L}")
    return subject, res, 0 if not problems else 1, lines


def cmd_saturate(args):
    K = _act(args.act)
    r = saturate(K, args.max_steps, args.target, args.size_cap)
    text = dump_act(r.act, _act_ref(args.act))
    res = dict(r.to_json(), target=args.target, embedding=list(r.embedding.map), act_file=text)
    if args.output:
        Path(args.output).write_text(text)
    lines = [f"status: {r.status} after {r.steps} step(s), size {r.act.size}"]
    if not args.output:
        lines.append(text.rstrip())
    return rep.act_subject([K], args.act), res, 0 if r.reached else 1, lines


# --- zoo -------------------------------------------------------------------


def zoo_one(path, max_act):
    """Analysis record for one monoid file: ``("ok", report)`` or ``("error", record)``."""
    path = Path(path)
    try:
        M = load_monoid(path)
        res = analyze_monoid(M)
        injs, failures = coproduct_scan(M, max_act)
        res["injective_acts"] = len(injs)
        res["coproduct_failures"] = len(failures)
        res["coproduct_bound"] = max_act
        return "ok", rep.analysis_report(rep.monoid_subject(M, path.name), res, 0)
    except (ActlabError, OSError, UnicodeDecodeError) as exc:
        return "error", {"file": path.name, "error": rep.error_report(exc)["error"]}


def run_zoo(directory, max_act=3, parallelism=1, seed=0):
    files = sorted(Path(directory).glob("*.monoid"))
    if parallelism > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            outcomes = list(pool.map(zoo_one, files, [max_act] * len(files)))
    else:
        outcomes = [zoo_one(f, max_act) for f in files]
    reports = sorted((r for kind, r in outcomes if kind == "ok"), key=lambda r: r["subject"]["id"])
    errors = sorted((r for kind, r in outcomes if kind == "error"), key=lambda r: r["file"])
    for r in reports:
        r["seed"] = seed
    rows = [{"id": r["subject"]["id"], "right_reversible": r["results"]["right_reversible"],
             "coproduct_failures": r["results"]["coproduct_failures"]} for r in reports]
    violations = [row["id"] for row in rows if row["right_reversible"] and row["coproduct_failures"]]
    summary = {"table": rows, "violations": violations,
               "non_reversible_with_failures": [row["id"] for row in rows
                                                if not row["right_reversible"] and row["coproduct_failures"]]}
    return {"reports": reports, "errors": errors, "summary": summary,
            "toolVersion": rep.__version__, "seed": seed}


def cmd_zoo(args):
    if not Path(args.dir).is_dir():
        raise InputError(f"not a directory: {args.dir}")
    out = run_zoo(args.dir, args.max_act_size, args.parallelism, args.seed)
    lines = [f"{'monoid':<20} {'right-rev':<10} coproduct failures"]
    for row in out["summary"]["table"]:
        lines.append(f"{row['id']:<20} {str(row['right_reversible']).lower():<10} {row['coproduct_failures']}")
    for e in out["errors"]:
        lines.append(f"error in {e['file']}: {e['error']['message']}")
    lines.append(f"dichotomy violations: {len(out['summary']['violations'])}")
    return None, out, 1 if out["summary"]["violations"] else 0, lines


# --- selftest --------------------------------------------------------------


def cmd_selftest(args):
    from .selftest import run_selftest

    results = run_selftest(args.seed, args.sizes, args.trials, args.mutate)
    res = {r.name: r.to_json() for r in results}
    ok = all(r.passed for r in results)
    lines = []
    for r in results:
        if r.passed:
            lines.append(f"PASS {r.name} ({r.instances} instances)")
        else:
            lines.append(f"FAIL {r.name} at size {r.size}: {r.counterexample}")
    subject = rep.plain_subject("selftest", f"sizes={args.sizes}",
                                {"sizes": args.sizes, "trials": args.trials, "mutate": args.mutate})
    return subject, res, 0 if ok else 1, lines


# --- parser ----------------------------------------------------------------


def _globals():
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="randomization seed (u64)")
    g.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print a JSON report")
    g.add_argument("--parallelism", type=int, default=argparse.SUPPRESS, help="worker processes")
    return g


def build_parser():
    g = _globals()
    parser = argparse.ArgumentParser(prog="actlab", parents=[g],
                                     description="Finite monoids and their acts.")
    sub = parser.add_subparsers(dest="command", required=True)

    mon = sub.add_parser("monoid", parents=[g]).add_subparsers(dest="action", required=True)
    p = mon.add_parser("analyze", parents=[g], help="ideals, g(S), reversibility")
    p.add_argument("path")
    p.set_defaults(func=cmd_monoid_analyze)

    act = sub.add_parser("act", parents=[g]).add_subparsers(dest="action", required=True)
    p = act.add_parser("check", parents=[g], help="injectivity tests")
    p.add_argument("act")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--injective", action="store_true")
    mode.add_argument("--weakly-injective", action="store_true")
    mode.add_argument("--n-injective", type=int, metavar="N")
    mode.add_argument("--pure", type=int, metavar="BOUND")
    p.set_defaults(func=cmd_act_check)

    typ = sub.add_parser("type", parents=[g]).add_subparsers(dest="action", required=True)
    p = typ.add_parser("eq", parents=[g], help="compare two pointed types")
    p.add_argument("act1")
    p.add_argument("act2")
    p.add_argument("--tuple1", type=index_list, required=True)
    p.add_argument("--tuple2", type=index_list, required=True)
    p.add_argument("--params1", type=index_list, default=())
    p.add_argument("--params2", type=index_list, default=())
    p.set_defaults(func=cmd_type_eq)

    ind = sub.add_parser("indep", parents=[g]).add_subparsers(dest="action", required=True)
    p = ind.add_parser("check", parents=[g], help="is X independent from Y over the base")
    p.add_argument("act")
    p.add_argument("--base", type=index_list, default=())
    p.add_argument("--left", type=index_list, required=True)
    p.add_argument("--right", type=index_list, required=True)
    p.set_defaults(func=cmd_indep_check)
    p = ind.add_parser("base", parents=[g], help="minimal base for an element")
    p.add_argument("act")
    p.add_argument("--base", type=index_list, default=())
    p.add_argument("--element", type=int, required=True)
    p.set_defaults(func=cmd_indep_base)
    p = ind.add_parser("split", parents=[g], help="does a type split over a subact")
    p.add_argument("act")
    p.add_argument("--tuple", type=index_list, required=True)
    p.add_argument("--params", type=index_list, default=())
    p.add_argument("--base", type=index_list, default=())
    p.set_defaults(func=cmd_indep_split)

    p = sub.add_parser("factorize", parents=[g], help="cellular factorization of a mono")
    p.add_argument("K")
    p.add_argument("L")
    p.add_argument("--embedding", type=index_list, required=True)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("saturate", parents=[g], help="grow an act toward injectivity")
    p.add_argument("act")
    p.add_argument("--target", choices=["weak", "full"], default="weak")
    p.add_argument("--max-steps", type=int, default=8)
    p.add_argument("--size-cap", type=int, default=512)
    p.add_argument("--output", help="write the resulting act file here")
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("zoo", parents=[g], help="analyze every monoid file in a directory")
    p.add_argument("dir")
    p.add_argument("--max-act-size", type=int, default=3)
    p.set_defaults(func=cmd_zoo)

    p = sub.add_parser("selftest", parents=[g], help="run the randomized invariant suites")
    p.add_argument("--sizes", type=int, default=4, help="largest act size drawn (0 skips all)")
    p.add_argument("--trials", type=int, default=40)
    p.add_argument("--mutate", choices=["pushout"], help="run against a corrupted operation")
    p.set_defaults(func=cmd_selftest)
    return parser


def _emit(obj, as_json, lines, out):
    if as_json:
        rep.validate(obj)
        out.write(rep.dumps(obj))
    else:
        out.write("\n".join(lines) + "\n")


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    args.seed = getattr(args, "seed", 0)
    args.json = getattr(args, "json", False)
    args.parallelism = getattr(args, "parallelism", 1)
    if args.seed < 0 or args.parallelism < 1:
        parser.error("--seed must be non-negative and --parallelism positive")
    try:
        subject, res, code, lines = args.func(args)
    except (ActlabError, InputError, OSError, ValueError) as exc:
        err = rep.error_report(exc)
        if args.json:
            _emit(err, True, [], out)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    res = rep.jsonable(res)
    obj = res if subject is None else rep.analysis_report(subject, res, args.seed)
    _emit(obj, args.json, lines, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
