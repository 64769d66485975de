"""Command line: ``redindex run SESSION`` and ``redindex explain REPORT``."""

import argparse
import csv
import json
import sys
import time

from . import __version__
from .groebner import (
    NEG_INF,
    GroebnerLimitError,
    Ideal,
    applied_limits,
    is_groebner_basis,
    module_dimension,
    quotient_length,
)
from .homology import all_ext_duals
from .invariants import (
    DIM1_HEURISTIC,
    OutsideHypothesis,
    bound_report,
    difference_grid,
    index_of_reducibility,
    irreducible_decomposition_monomial,
    length_quotient,
    multiplicity,
    polynomial_type_empirical,
    polynomial_type_exact,
    socle_dimension,
)
from .idealops import PresentedModule
from .oracles import oracle_suite
from .session import SessionError, load_session
from .sop import NotASystemOfParameters, RearrangeError, certify_filter_regular, deep_sop, filter_regular_rearrange, is_sop, random_sop

SCHEMA = "redindex.report/1"
TIMING_KEYS = ("seconds", "run")


def _num(x):
    return "-inf" if x == NEG_INF else x


def _sample_seed(seed, k):
    return seed * 1_000_003 + k


# --- tasks --------------------------------------------------------------------------------

def task_gb(s, task, ctx):
    I = s.ideals[task.args[0]]
    order = task.options.get("order", "grevlex")
    if order != s.ring.order.kind:
        ring = s.ring.with_order(order)
        I = Ideal(ring, [ring.parse(str(g)) for g in I.generators])
    G = I.groebner()
    dim = module_dimension(G)
    return {
        "ideal": task.args[0],
        "order": order,
        "basis": [str(g) for g in G.basis_polys],
        "size": len(G.basis),
        "is_groebner": is_groebner_basis(G.basis, G.order, G.ring.field),
        "dimension": _num(dim),
        "quotient_length": quotient_length(G) if dim <= 0 else None,
    }, None


def task_invariants(s, task, ctx):
    M = s.module(task.args[0])
    forms = s.sops[task.args[1]]
    q = Ideal(s.ring, forms)
    out = {
        "module": task.args[0],
        "sop": [str(f) for f in forms],
        "length": length_quotient(M, q),
        "index_of_reducibility": index_of_reducibility(M, q),
        "multiplicity_koszul": multiplicity(forms, M, "koszul"),
    }
    try:
        out["multiplicity_hilbert_samuel"] = multiplicity(forms, M, "hilbert_samuel")
    except ValueError as exc:
        out["multiplicity_hilbert_samuel"] = None
        out["hilbert_samuel_error"] = str(exc)
    verdict = None
    if out["multiplicity_hilbert_samuel"] is not None:
        verdict = "pass" if out["multiplicity_hilbert_samuel"] == out["multiplicity_koszul"] else "fail"
    n = int(task.options.get("grid", 3))
    grid = difference_grid(forms, [range(1, n + 1)] * len(forms), M)
    out["difference_grid"] = [{"n": list(k), "value": v} for k, v in sorted(grid.values.items())]
    out["difference_constant"] = grid.is_constant()
    return out, verdict


def task_ptype(s, task, ctx):
    M = s.module(task.args[0])
    out = {"module": task.args[0], "ptype": _num(polynomial_type_exact(M))}
    if "sop" in task.options:
        forms = s.sops[task.options["sop"]]
        n = int(task.options.get("grid", 4))
        emp = polynomial_type_empirical(M, forms, [range(1, n + 1)] * len(forms))
        out["empirical"] = {k: _num(v) if not isinstance(v, list) else [_num(x) for x in v] for k, v in emp.items()}
    return out, None


def task_cohomology(s, task, ctx):
    M = s.module(task.args[0])
    duals = all_ext_duals(M)
    return {"module": task.args[0], "dimension": _num(M.dimension()), "duals": [K.as_dict() for K in duals]}, None


def _degree_plan(spec, d, rng):
    if "-" in spec:
        lo, hi = map(int, spec.split("-"))
        return [rng.randint(lo, hi) for _ in range(d)]
    parts = [int(x) for x in spec.split(",")]
    if len(parts) == 1:
        return parts * d
    if len(parts) != d:
        raise ValueError(f"degrees lists {len(parts)} values but dim M = {d}")
    return parts


def sweep_samples(M, count, seed, degrees="1", deep=None):
    import random

    d = M.dimension()
    out = []
    for k in range(count):
        sk = _sample_seed(seed, k)
        if deep is not None:
            out.append(deep_sop(M, deep, seed=sk))
        else:
            rng = random.Random(sk)
            out.append(random_sop(M, _degree_plan(degrees, d, rng), rng=rng))
    return out


def task_bound_sweep(s, task, ctx):
    M = s.module(task.args[0])
    count = int(task.options.get("count", 20))
    deep = int(task.options["deep"]) if "deep" in task.options else None
    samples = sweep_samples(M, count, s.seed, task.options.get("degrees", "1"), deep)
    rep = bound_report(M, samples, seed=s.seed, jobs=ctx["jobs"], lower_samples=int(task.options.get("lower", 20)),
                       name=task.args[0])
    out = rep.as_dict()
    out["count"] = count
    out["mode"] = f"deep {deep}" if deep is not None else f"degrees {task.options.get('degrees', '1')}"
    ctx["tables"].append((task.args[0], out["samples"]))
    return out, rep.verdict


def task_filter_regular(s, task, ctx):
    M = s.module(task.args[0])
    forms = s.sops[task.args[1]]
    given = certify_filter_regular(is_sop(forms, M), M)
    ps = filter_regular_rearrange(Ideal(s.ring, forms), M, seed=s.seed)
    ok = ps.is_filter_regular()
    return {
        "module": task.args[0],
        "input": [str(f) for f in forms],
        "input_flags": given.filter_regular,
        "output": ps.as_strings(),
        "output_flags": ps.filter_regular,
        "certificate": {k: _num(v) for k, v in ps.certificate.items()},
    }, "pass" if ok else "fail"


def task_decompose(s, task, ctx):
    I = s.ideals[task.args[0]]
    comps = irreducible_decomposition_monomial(I)
    soc = socle_dimension(PresentedModule.cyclic(I))
    return {
        "ideal": task.args[0],
        "components": [[str(g) for g in C.generators] for C in comps],
        "count": len(comps),
        "socle_dimension": soc,
    }, "pass" if len(comps) == soc else "fail"


def task_oracles(s, task, ctx):
    res = oracle_suite(splits=int(task.options.get("splits", 4)), seed=s.seed)
    bad = [r.as_dict() for r in res if r.violations]
    return {
        "instances": len(res),
        "violations": bad,
        "rows": [{"label": r.label, "length": r.length, "c": r.c, "r_dual": r.r_dual} for r in res],
    }, "fail" if bad else "pass"


TASKS = {
    "gb": task_gb,
    "invariants": task_invariants,
    "ptype": task_ptype,
    "cohomology": task_cohomology,
    "bound-sweep": task_bound_sweep,
    "filter-regular": task_filter_regular,
    "decompose-monomial": task_decompose,
    "oracle-suite": task_oracles,
}


def run_session(session, jobs=1):
    """Execute every task; returns the report dict and the sweep tables."""
    ctx = {"jobs": jobs, "tables": []}
    results = []
    with applied_limits(**session.limits):
        for task in session.tasks:
            t0 = time.perf_counter()
            entry = {"task": task.kind, "args": task.args, "options": task.options, "line": task.line}
            try:
                result, verdict = TASKS[task.kind](session, task, ctx)
                entry.update(status="ok", result=result, verdict=verdict)
            except GroebnerLimitError as exc:
                entry.update(status="limit", error=str(exc), verdict=None)
            except AssertionError as exc:
                entry.update(status="check-failed", error=str(exc), verdict="fail")
            except (NotASystemOfParameters, OutsideHypothesis, RearrangeError, ValueError) as exc:
                entry.update(status="error", error=f"{type(exc).__name__}: {exc}", verdict=None)
            entry["seconds"] = round(time.perf_counter() - t0, 4)
            results.append(entry)
    verdicts = [r["verdict"] for r in results if r["verdict"]]
    report = {
        "schema": SCHEMA,
        "version": __version__,
        "session_digest": session.digest(),
        "session": session.normalized(),
        "seed": session.seed,
        "results": results,
        "verdict": "fail" if "fail" in verdicts else "pass",
        "run": {"jobs": jobs, "python": sys.version.split()[0]},
    }
    return report, ctx["tables"]


def strip_timing(report):
    """Copy of ``report`` without timing fields (for determinism comparisons)."""
    out = {k: v for k, v in report.items() if k not in TIMING_KEYS}
    out["results"] = [{k: v for k, v in r.items() if k not in TIMING_KEYS} for r in report["results"]]
    return out


def write_csv(path, tables):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["module", "index", "degrees", "forms", "N"])
        for name, rows in tables:
            for r in rows:
                w.writerow([name, r["index"], " ".join(map(str, r["degrees"])), "; ".join(r["forms"]), r["N"]])


# --- explain --------------------------------------------------------------------------------

def explain_bound(res):
    d = res["dimension"]
    ups = res["r_upper"]
    terms = [f"C({d},{u['index']})·{u['value']}" for u in ups]
    rhs = " + ".join(terms + [str(res["socle_top"])])
    heur = [u for u in ups if u["tag"] == DIM1_HEURISTIC]
    Ns = [s["N"] for s in res["samples"]]
    lines = []
    if res["ptype"] == "-inf" and len(set(Ns)) <= 1 and Ns:
        lines.append(f"CM module: N = {Ns[0]} for all samples (Northcott)")
    cert = "certified" if not heur else "HEURISTIC"
    lines.append(f"N ≤ {rhs} = {res['rhs_main']}; {cert}")
    for u in heur:
        state = "dominates" if u["validated"] else "FAILS to dominate"
        lines.append(f"  ! r(H^{u['index']}) uses the dim-1 heuristic upper bound {u['value']}; "
                     f"it {state} sampled lower bounds (max {u['lower_bounds_max']})")
    extra = []
    for key, label in (("rhs_star", "RHS*"), ("buchsbaum_I", "Buchsbaum I"), ("cuong_truong_target", "socle target")):
        if res.get(key) is not None:
            extra.append(f"{label} = {res[key]}")
    if extra:
        lines.append("  " + ", ".join(extra))
    if Ns:
        lines.append(f"  {len(Ns)} samples ({res.get('mode', '')}): max N = {res['max_index']} at ({', '.join(res['argmax'])}); "
                     f"verdict {res['verdict']}")
    return lines


def explain(report):
    if report.get("schema") != SCHEMA:
        raise ValueError(f"not a report (schema {report.get('schema')!r})")
    lines = [f"report {report['session_digest'][:12]} seed {report['seed']}: overall {report['verdict']}"]
    for r in report["results"]:
        head = f"[{r['task']} {' '.join(r['args'])}]"
        if r["status"] != "ok":
            lines.append(f"{head} {r['status']}: {r.get('error', '')}")
            continue
        res = r["result"]
        if r["task"] == "bound-sweep":
            lines.append(head)
            lines += ["  " + x for x in explain_bound(res)]
        elif r["task"] == "ptype":
            emp = res.get("empirical")
            tail = f" (empirical estimate {emp['estimate']}: {emp['note']})" if emp else ""
            lines.append(f"{head} p = {res['ptype']}{tail}")
        elif r["task"] == "invariants":
            lines.append(f"{head} ℓ = {res['length']}, N = {res['index_of_reducibility']}, "
                         f"e = {res['multiplicity_koszul']} / {res['multiplicity_hilbert_samuel']}, "
                         f"difference constant: {res['difference_constant']}")
        elif r["task"] == "cohomology":
            parts = [f"K^{K['index']}: dim {K['dimension']}, ℓ {K['length']}, v {K['min_gens']}" for K in res["duals"]]
            lines.append(f"{head} " + "; ".join(parts))
        elif r["task"] == "gb":
            lines.append(f"{head} {res['size']} elements ({res['order']}), dim {res['dimension']}")
        elif r["task"] == "filter-regular":
            lines.append(f"{head} ({', '.join(res['input'])}) -> ({', '.join(res['output'])}), flags {res['output_flags']}")
        elif r["task"] == "decompose-monomial":
            comps = " ∩ ".join("(" + ", ".join(c) + ")" for c in res["components"])
            lines.append(f"{head} {comps}; {res['count']} components, socle dimension {res['socle_dimension']}")
        elif r["task"] == "oracle-suite":
            lines.append(f"{head} {res['instances']} instances, {len(res['violations'])} violations")
        if r.get("verdict"):
            lines[-1] += f"  [{r['verdict']}]"
    return "\n".join(lines)


# --- entry point ------------------------------------------------------------------------------

def _parse_limits(text):
    out = {}
    for item in filter(None, (t.strip() for t in text.split(","))):
        k, _, v = item.partition("=")
        out[k.strip()] = int(v)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(prog="redindex", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="execute a session file")
    run.add_argument("session")
    run.add_argument("--seed", type=int)
    run.add_argument("--out", help="JSON report path (default: stdout)")
    run.add_argument("--csv", help="write sweep samples as CSV")
    run.add_argument("--jobs", type=int, default=1)
    run.add_argument("--limits", default="", help="e.g. max_basis=5000,max_degree=40")
    ex = sub.add_parser("explain", help="summarize a JSON report")
    ex.add_argument("report")
    args = ap.parse_args(argv)

    if args.command == "explain":
        try:
            with open(args.report, encoding="utf-8") as fh:
                report = json.load(fh)
            print(explain(report))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            print(f"error: malformed report: {exc}", file=sys.stderr)
            return 2
        return 0

    try:
        session = load_session(args.session)
        if args.seed is not None:
            session.seed = args.seed
        session.limits.update(_parse_limits(args.limits))
    except SessionError as exc:
        print(f"{args.session}:{exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        report, tables = run_session(session, jobs=args.jobs)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(report, indent=2, ensure_ascii=False)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.csv:
        write_csv(args.csv, tables)
    return 1 if report["verdict"] == "fail" else 0


if __name__ == "__main__":
    sys.exit(main())
