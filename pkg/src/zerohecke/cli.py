"""Command line front end.

    zerohecke idempotents --n 3
    zerohecke omega-fibers --n 5 --format dot
    zerohecke stembridge-check --crystal A2:2,1

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from collections import Counter

from . import algebra, crystal, ndpf, orp, qpoly
from .affine import affine_contains_321, affine_elements_up_to, parse_affine
from .affine_ndpf import AffineNdpf, affine_quotient_P, affine_quotient_Q, affine_reconstruct_R
from .errors import SizeLimit, VerificationFailure, ZeroHeckeError
from .perms import catalan

SCHEMA_VERSION = 1


class UsageError(ZeroHeckeError):
    pass


class Outcome:
    def __init__(self, results, ok=True, rows=None, dot=None, anchor=""):
        self.results, self.ok, self.rows, self.dot, self.anchor = results, ok, rows, dot, anchor


def _need(args, name):
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")
    return v


def _ceiling(n, limit, flag):
    if n > limit:
        raise SizeLimit(f"n={n} exceeds the default ceiling {limit}; pass {flag} to raise it")


def parse_crystal(spec: str) -> crystal.CrystalGraph:
    """'A2:2,1' -> tableau crystal of type A_2, shape (2,1)."""
    try:
        kind, shape = spec.split(":")
        ct = crystal.CartanType.parse(kind)
        parts = tuple(int(p) for p in shape.split(",") if p.strip())
    except (ValueError, IndexError, ZeroHeckeError) as exc:
        raise UsageError(f"bad crystal spec {spec!r}; expected e.g. A2:2,1") from exc
    if ct.letter != "A":
        raise UsageError("only type A tableau crystals can be generated")
    return crystal.tableau_crystal(ct.n, parts)


# ---------------------------------------------------------------- hecke

def cmd_demipotent(args):
    D = algebra.SignedDiagram.parse(_need(args, "diagram"))
    C = algebra.diagram_demipotent(D)
    I, k = algebra.diagram_idempotent(D)
    L, R = algebra.diagram_LR(D)
    res = {"diagram": str(D), "L": repr(L), "R": repr(R), "C": repr(C),
           "nilpotence_degree": k, "degree_bound": algebra.degree_bound(D),
           "idempotent": repr(I), "is_idempotent": I * I == I}
    return Outcome(res, ok=res["is_idempotent"], rows=[res], anchor="diagram demipotent C_D = L_D R_D")


def cmd_idempotents(args):
    n = _need(args, "n")
    _ceiling(n, args.max_n or 7, "--max-n")
    fam = algebra.idempotent_family(n, verify=True, max_N=args.max_n or 7)
    rows = [{"diagram": str(D), "degree": k, "idempotent": repr(I), "terms": len(I),
             "unit_coefficients": all(abs(c) == 1 for _, c in I.sorted_terms())}
            for D, I, k in zip(fam.diagrams, fam.idempotents, fam.degrees)]
    res = {"n": n, "count": len(rows), "orthogonal": True, "sum_is_one": True, "idempotents": rows}
    return Outcome(res, rows=rows, anchor="orthogonal idempotents of H_0(S_N) indexed by signed diagrams")


def cmd_nilpotence_table(args):
    n = _need(args, "n")
    _ceiling(n, args.max_n or 7, "--max-n")
    degs = algebra.nilpotence_degrees(n)
    rows = [{"diagram": d, "degree": k, "bound": algebra.degree_bound(d)} for d, k in degs.items()]
    counts = Counter(degs.values())
    res = {"n": n, "counts": {str(k): v for k, v in sorted(counts.items())},
           "bound_holds": all(r["degree"] <= r["bound"] for r in rows), "table": rows}
    return Outcome(res, ok=res["bound_holds"], rows=rows, anchor="nilpotence degrees of C_D")


def cmd_universal_check(args):
    n = _need(args, "n")
    _ceiling(n, args.max_n or 7, "--max-n")
    rep = algebra.check_universal_word(n)
    return Outcome(rep, ok=not rep["failures"], rows=rep["rows"],
                   anchor="masked universal word 1..N-1..1 reproduces I_D")


# ---------------------------------------------------------------- ndpf

def cmd_fibers(args):
    n = _need(args, "n")
    _ceiling(n, args.max_n or 7, "--max-n")
    which = "psi" if args.psi else "phi"
    try:
        fibers = ndpf.all_fibers(n, which)
        ok, err = True, None
    except VerificationFailure as exc:
        fibers, ok, err = [], False, str(exc)
    rows = [{"f": repr(F.f), "size": len(F.members), "minimum": repr(F.minimum),
             "maximum": repr(F.maximum)} for F in fibers]
    res = {"n": n, "map": which, "fibers": len(rows), "catalan": catalan(n),
           "count_is_catalan": len(rows) == catalan(n), "error": err, "table": rows}
    ok = ok and res["count_is_catalan"]
    return Outcome(res, ok=ok, rows=rows, anchor="fibers of the NDPF quotient: [321] minimum, "
                   + ("[312]" if args.psi else "[231]") + " maximum")


def cmd_omega_fibers(args):
    n = _need(args, "n")
    G = ndpf.omega_fiber_digraph(n, max_N=args.max_n or 7)
    res = {"n": n, "components": len(G.components), "bad": len(G.bad),
           "omega_image_size": ndpf.omega_fiber_count(n) if n <= 7 else None}
    if args.verbose:
        res["summary"] = G.summary()
    ok = not G.bad and res["omega_image_size"] in (None, len(G.components))
    rows = [{k: v for k, v in r.items() if k != "members"} for r in G.summary()]
    return Outcome(res, ok=ok, rows=rows, dot=G.to_dot() if args.format == "dot" else None,
                   anchor="omega-fiber components under [4231] straightening")


def cmd_bndpf_count(args):
    n = _need(args, "n")
    rep = ndpf.bndpf_generate(n, max_N=args.max_n or 6)
    res = {"n": n, "count": rep["count"], "formula": rep["formula"], "matches": rep["matches"]}
    return Outcome(res, ok=rep["matches"], rows=[res], anchor="type B NDPF monoid size")


def affine_round_trip(n, L):
    """Q = P on all elements of length <= L; Q o R = id; one [321]-avoider per bounded fiber."""
    xs = list(affine_elements_up_to(n, L).values())
    qp = sum(affine_quotient_Q(x) == affine_quotient_P(x) for x in xs)
    fibers = {}
    for x in xs:
        fibers.setdefault(affine_quotient_Q(x), []).append(x)
    single = sum(sum(affine_contains_321(x) is None for x in m) == 1 for m in fibers.values())
    rt = sum(affine_quotient_Q(affine_reconstruct_R(f)) == f for f in fibers)
    return {"n": n, "max_length": L, "elements": len(xs), "q_equals_p": qp,
            "fibers": len(fibers), "round_trips": rt, "fibers_with_one_avoider": single}


def cmd_affine_quotient(args):
    if args.window:
        x = parse_affine(args.window)
        res = {"x": repr(x), "Q": repr(affine_quotient_Q(x)), "P": repr(affine_quotient_P(x))}
        res["equal"] = res["Q"] == res["P"]
        return Outcome(res, ok=res["equal"], rows=[res], anchor="affine NDPF quotient")
    res = affine_round_trip(_need(args, "n"), args.max_length or 6)
    ok = res["q_equals_p"] == res["elements"] and res["fibers_with_one_avoider"] == res["fibers"]
    return Outcome(res, ok=ok, rows=[res], anchor="combinatorial and algebraic affine quotients agree")


def cmd_affine_reconstruct(args):
    if args.window:
        f = AffineNdpf(json.loads(args.window) if args.window.startswith("[") else args.window.split(","))
        x = affine_reconstruct_R(f)
        res = {"f": repr(f), "R": repr(x), "avoids_321": affine_contains_321(x) is None,
               "round_trip": affine_quotient_Q(x) == f}
        return Outcome(res, ok=res["round_trip"], rows=[res], anchor="[321]-avoiding section of Q")
    res = affine_round_trip(_need(args, "n"), args.max_length or 6)
    ok = res["round_trips"] == res["fibers"]
    return Outcome(res, ok=ok, rows=[res], anchor="[321]-avoiding section of Q")


# ---------------------------------------------------------------- posets

def _poset(args):
    return orp.get_poset(_need(args, "poset"))


def cmd_orp(args):
    P = _poset(args)
    fs = orp.all_orp_functions(P)
    idem = orp.orp_idempotents(P)
    res = {"poset": P.name, "size": len(P), "monoid_size": len(fs), "idempotents": len(idem)}
    if P.name.startswith("chain"):
        res["catalan"] = catalan(len(P))
        res["matches_catalan"] = len(fs) == catalan(len(P))
    dot = None
    if args.format == "dot":
        lines = [f'digraph "{P.name}" {{']
        lines += [f'  "{P.labels[a]}" -> "{P.labels[b]}";' for a, b in P.covers()]
        dot = "\n".join(lines + ["}"])
    rows = [{"idempotent": " ".join(P.show(f))} for f in fs if f.is_idempotent()]
    return Outcome(res, ok=res.get("matches_catalan", True), rows=rows, dot=dot,
                   anchor="order preserving regressive functions")


def cmd_cartan_check(args):
    P = _poset(args)
    ok, bad = orp.cartan_triangularity_check(P, detail=True)
    res = {"poset": P.name, "extension": [P.labels[k] for k in P.extension()],
           "triangular": ok, "violations": [" ".join(b) for b in bad]}
    return Outcome(res, ok=ok, rows=[{"violation": v} for v in res["violations"]],
                   anchor="Cartan matrix uni-triangularity via lfix/rfix")


def cmd_semilattice_demipotents(args):
    P = _poset(args)
    rep = orp.semilattice_demipotents(P, max_size=args.max_size or 8)
    keys = ["sum_is_one", "all_demipotent", "all_directly_idempotent", "orthogonal",
            "idempotents_sum_to_one", "count_matches_idempotents"]
    rows = [{"signs": d.signs, "image": " ".join(d.image), "C": repr(d.C)} for d in rep["diagrams"]]
    res = {"poset": P.name, "diagrams": len(rows), **{k: rep[k] for k in keys}, "table": rows}
    return Outcome(res, ok=all(rep[k] for k in keys), rows=rows,
                   anchor="semilattice diagram demipotents")


# ---------------------------------------------------------------- crystals

def _crystals(args):
    specs = _need(args, "crystal")
    Bs = [parse_crystal(s) for s in specs]
    B = Bs[0]
    for C in Bs[1:]:
        B = crystal.tensor(B, C)
    return B


def _crystal_summary(B):
    comps = B.components()
    return {"type": str(B.ctype), "vertices": len(B), "edges": sum(len(e) for e in B.f_edges.values()),
            "components": len(comps), "component_sizes": sorted((len(c) for c in comps), reverse=True),
            "highest_weights": [repr(b) for b in B.highest_weight_vertices()]}


def _crystal_rows(B):
    return [{"from": repr(a), "to": repr(b), "color": i}
            for i in B.index_set for a, b in B.f_edges[i].items()]


def cmd_crystal_gen(args):
    B = _crystals(args)
    res = _crystal_summary(B)
    if args.verbose:
        res["graph"] = json.loads(B.to_json())
    anchor = "tensor product rule" if len(args.crystal or []) > 1 else "tableau crystal"
    return Outcome(res, rows=_crystal_rows(B), dot=B.to_dot(), anchor=anchor)


def cmd_crystal_tensor(args):
    if len(args.crystal or []) < 2:
        raise UsageError("crystal-tensor needs at least two --crystal factors")
    return cmd_crystal_gen(args)


def cmd_stembridge_check(args):
    B = _crystals(args)
    ok, log = crystal.check_stembridge(B, verbose=args.verbose)
    res = {**_crystal_summary(B), "passes": ok,
           "failures": [{"vertex": repr(x), "i": i, "j": j, "axiom": a} for x, i, j, a in log]}
    return Outcome(res, ok=ok, rows=res["failures"], anchor="Stembridge local axioms P3-P6")


def cmd_promotion_search(args):
    B = _crystals(args)
    found = crystal.promotion_search(B, max_size=args.max_size or 200)
    ops = [{"index": k, "connected": r["connected"],
            "pr": {repr(a): repr(b) for a, b in r["pr"].items()},
            "zero_edges": {repr(a): repr(b) for a, b in r["zero_edges"].items()}} for k, r in enumerate(found)]
    res = {**_crystal_summary(B), "operators": len(ops),
           "connected": sum(o["connected"] for o in ops), "details": ops}
    rows = [{"index": o["index"], "connected": o["connected"]} for o in ops]
    dot = None
    if args.format == "dot" and found:
        G = crystal.CrystalGraph(B.ctype, B.vertices, B.f_edges, B.wt, validate=False)
        G.f_edges[0] = found[0]["zero_edges"]
        lines = B.to_dot().splitlines()[:-1]
        lines += [f'  "{a!r}" -> "{b!r}" [label="0"];' for a, b in found[0]["zero_edges"].items()]
        dot = "\n".join(lines + ["}"])
    return Outcome(res, rows=rows, dot=dot, anchor="promotion operators and induced 0-arrows")


def cmd_q_identities(args):
    n = args.n or 8
    if n > 8:
        raise SizeLimit("q-identities are limited to j + k <= 8")
    rows = []
    ok = True
    for j in range(0, 7):
        for k in range(0, 7):
            if j + k > n:
                continue
            f_ok = qpoly.divided_power_identity_check(j, k)
            row = {"j": j, "k": k, "divided_powers": f_ok}
            if j and k:
                conn = qpoly.evaluation_zero_string(j, k, 0, 0)
                disc = qpoly.evaluation_zero_string(j, k, -k, j)
                row.update({"verdict_0_0": conn["verdict"], "verdict_-k_j": disc["verdict"],
                            "e0_top_term": conn["top_term"] and disc["top_term"],
                            "e0_closed_form": conn["closed_form"] and disc["closed_form"],
                            "e0_equals_f1": disc["identical_to_f1"]})
                ok &= (row["verdict_0_0"] == "connected" and row["verdict_-k_j"] == "disconnected"
                       and row["e0_top_term"] and row["e0_closed_form"] and row["e0_equals_f1"])
            ok &= f_ok
            rows.append(row)
    res = {"max_j_plus_k": n, "all_hold": ok, "table": rows}
    return Outcome(res, ok=ok, rows=rows, anchor="A_1 two-fold tensor q-identities")


COMMANDS = {
    "demipotent": cmd_demipotent,
    "idempotents": cmd_idempotents,
    "nilpotence-table": cmd_nilpotence_table,
    "universal-check": cmd_universal_check,
    "fibers": cmd_fibers,
    "omega-fibers": cmd_omega_fibers,
    "bndpf-count": cmd_bndpf_count,
    "affine-quotient": cmd_affine_quotient,
    "affine-reconstruct": cmd_affine_reconstruct,
    "orp": cmd_orp,
    "cartan-check": cmd_cartan_check,
    "semilattice-demipotents": cmd_semilattice_demipotents,
    "crystal-gen": cmd_crystal_gen,
    "crystal-tensor": cmd_crystal_tensor,
    "stembridge-check": cmd_stembridge_check,
    "promotion-search": cmd_promotion_search,
    "q-identities": cmd_q_identities,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zerohecke", description="0-Hecke, NDPF and crystal computations")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--n", type=int)
        s.add_argument("--diagram")
        s.add_argument("--poset", help="catalog name (chain4, B3, ...) or a poset file")
        s.add_argument("--crystal", action="append", help="TYPE:shape, e.g. A2:2,1; repeat to tensor")
        s.add_argument("--window", help="window of an affine element, e.g. 0,2,4")
        s.add_argument("--psi", action="store_true", help="use the twisted quotient")
        s.add_argument("--format", choices=("json", "dot", "csv"), default="json")
        s.add_argument("--max-length", type=int)
        s.add_argument("--max-n", type=int, help="raise the rank ceiling")
        s.add_argument("--max-size", type=int)
        s.add_argument("--timing", action="store_true", help="include wall time in the JSON")
        s.add_argument("--verbose", action="store_true")
    return p


def render(command, args, out: Outcome, elapsed) -> str:
    if args.format == "dot":
        if out.dot is None:
            raise UsageError(f"{command} has no DOT output")
        return out.dot + "\n"
    if args.format == "csv":
        rows = out.rows or []
        buf = io.StringIO()
        if rows:
            fields = list(dict.fromkeys(k for r in rows for k in r))
            w = csv.DictWriter(buf, fieldnames=fields, restval="", lineterminator="\n")
            w.writeheader()
            for r in rows:
                w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
        return buf.getvalue()
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "format", "verbose", "timing") and v not in (None, False)}
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "parameters": params,
           "anchor": out.anchor, "ok": out.ok, "results": out.results}
    if args.timing:
        doc["timing"] = {"seconds": round(elapsed, 4)}
    return json.dumps(doc, indent=2, sort_keys=False, default=repr) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        out = COMMANDS[args.command](args)
        text = render(args.command, args, out, time.perf_counter() - t0)
    except SizeLimit as exc:
        print(f"zerohecke {args.command}: {exc} (override with --max-n or --max-size)", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"zerohecke {args.command}: {exc}", file=sys.stderr)
        return 2
    except VerificationFailure as exc:
        print(f"zerohecke {args.command}: verification failed: {exc}", file=sys.stderr)
        return 1
    except ZeroHeckeError as exc:
        print(f"zerohecke {args.command}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return 0 if out.ok else 1


if __name__ == "__main__":
    sys.exit(main())
