"""Command-line front end.

One subcommand per capability: catalog, ktheory, spectra, af, crossed,
cohomology, building, tau.  Every invocation parses to a replayable
:class:`RunPlan`, executes to a plain dict report, and emits bytes that
are identical across runs for identical inputs (JSON by default; CSV and
text tables for the tabular views).  Module errors surface as JSON with
"code" and "witness" fields and a nonzero exit status.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import buildings, graphs, io, ktheory, shift, triples
from .errors import GraphSpectraError, UsageError

TRACE_TAIL_TOL = 1e-12


@dataclass(frozen=True)
class RunPlan:
    subcommand: str
    options: tuple  # sorted (key, value) pairs
    fmt: str = "json"
    out: str | None = None

    def option(self, key, default=None):
        return dict(self.options).get(key, default)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, witness=message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="graphspectra", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "csv", "table"], default="json")
        p.add_argument("--out", default=None)

    common(sub.add_parser("catalog", help="genus-2 dual graph catalog"))

    p = sub.add_parser("ktheory", help="K-groups of a 0/1 matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--compare", default=None,
                   help="second matrix for a stable-isomorphism verdict")
    common(p)

    p = sub.add_parser("spectra", help="grading, traces, commutators")
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--matrix", default=None)
    p.add_argument("--levels", type=int, default=6)
    p.add_argument("--t", default="1.0", help="comma-separated heat parameters")
    p.add_argument("--s", type=float, default=2.0)
    p.add_argument("--twist", default=None, help="comma-separated letter permutation")
    common(p)

    p = sub.add_parser("af", help="filtered-algebra summability schedule")
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--levels", type=int, default=6)
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--q", type=float, default=3.0)
    common(p)

    p = sub.add_parser("crossed", help="crossed-product spectrum slope")
    p.add_argument("--base", choices=["linear", "quadratic", "zero"], default="linear")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--cutoff", type=int, default=200)
    common(p)

    p = sub.add_parser("cohomology", help="filtration cohomology dimensions")
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--matrix", default=None)
    p.add_argument("--levels", type=int, default=3)
    common(p)

    p = sub.add_parser("building", help="polygonal presentations")
    p.add_argument("--q", type=int, default=None, help="family parameter")
    p.add_argument("--file", default=None, help="presentation JSON")
    p.add_argument("--cover", action="store_true")
    p.add_argument("--validate", action="store_true")
    p.add_argument("--links", action="store_true")
    p.add_argument("--stable-pairs", action="store_true")
    p.add_argument("--bm", action="store_true")
    common(p)

    p = sub.add_parser("tau", help="boundary exponent equation")
    p.add_argument("--weights", required=True, help="comma-separated integers >= 2")
    common(p)

    return parser


def parse_invocation(argv) -> RunPlan:
    ns = _build_parser().parse_args(argv)
    options = {k: v for k, v in vars(ns).items()
               if k not in ("subcommand", "format", "out")
               and v is not None and v is not False}
    return RunPlan(ns.subcommand, tuple(sorted(options.items())), ns.format, ns.out)


def render_plan(plan: RunPlan) -> list[str]:
    """Inverse of parse_invocation: an argv that parses back to the plan."""
    argv = [plan.subcommand]
    for key, value in plan.options:
        flag = "--" + key.replace("_", "-")
        if value is True:
            argv.append(flag)
        else:
            argv.extend([flag, str(value)])
    argv.extend(["--format", plan.fmt])
    if plan.out:
        argv.extend(["--out", plan.out])
    return argv


def _sft_from_options(plan: RunPlan, default_genus=None) -> shift.SFTData:
    genus = plan.option("genus", default_genus)
    matrix = plan.option("matrix")
    if matrix is not None:
        if str(matrix).lower().endswith(".csv"):
            em = io.load_matrix(matrix)
            return shift.SFTData(em.matrix, em.labels)
        return io.load_sft(matrix)
    if genus is None:
        raise UsageError("need --genus or --matrix")
    return shift.full_schottky_sft(int(genus))


def adaptive_theta(s: shift.SFTData, t: float,
                   tol: float = TRACE_TAIL_TOL) -> triples.ThetaTrace:
    """Heat-trace partial sum at the smallest power-of-two level count
    whose certified tail drops below tol (capped at 512 levels)."""
    levels = 16
    while True:
        result = triples.theta_trace(triples.grading_from_sft(s, levels), t, tol)
        if result.converged or levels >= 512:
            return result
        levels *= 2


def execute(plan: RunPlan) -> tuple[dict, list | None]:
    """Run a plan; returns the report and an optional tabular view."""
    handler = {
        "catalog": _run_catalog,
        "ktheory": _run_ktheory,
        "spectra": _run_spectra,
        "af": _run_af,
        "crossed": _run_crossed,
        "cohomology": _run_cohomology,
        "building": _run_building,
        "tau": _run_tau,
    }[plan.subcommand]
    return handler(plan)


def _run_catalog(plan: RunPlan):
    names = ["wedge_of_two_loops", "theta", "dumbbell"]
    entries = []
    for name, g in zip(names, graphs.genus2_catalog()):
        em = graphs.directed_edge_matrix(g)
        k0, k1 = ktheory.ck_k_theory(em)
        entries.append({
            "name": name,
            "vertices": len(g.vertices),
            "edges": len(g.edges),
            "betti": g.betti_number(),
            "k0": str(k0),
            "k1": str(k1),
        })
    return {"graphs": entries}, entries


def _run_ktheory(plan: RunPlan):
    rows_a, _ = io.load_matrix_rows(plan.option("matrix"))
    k0, k1 = ktheory.ck_k_theory(rows_a)
    report = io.k_theory_to_dict(k0, k1)
    rows = [{"group": "k0", "rank": k0.rank,
             "torsion": ",".join(map(str, k0.torsion)), "display": str(k0)},
            {"group": "k1", "rank": k1.rank, "torsion": "", "display": str(k1)}]
    other = plan.option("compare")
    if other:
        verdict = ktheory.stable_iso_verdict(rows_a, io.load_matrix_rows(other)[0])
        report["verdict"] = verdict.value
    return report, rows


def _run_spectra(plan: RunPlan):
    s = _sft_from_options(plan)
    levels = int(plan.option("levels", 6))
    ts = [float(x) for x in str(plan.option("t", "1.0")).split(",")]
    zeta_s = float(plan.option("s", 2.0))
    twist = plan.option("twist")
    twist = tuple(int(x) for x in twist.split(",")) if twist else None

    perron = shift.perron_data(s)
    trunc = triples.build_truncation(s, levels, twist=twist)
    residuals = trunc.ck_residuals()
    theta_rows = []
    for t in ts:
        res = adaptive_theta(s, t)
        theta_rows.append({"t": res.t, "partial": res.partial,
                           "tail_bound": res.tail_bound})
    zeta = triples.zeta_partial(triples.grading_from_sft(s, max(levels, 48)), zeta_s)
    commutators = []
    for letter in range(s.alphabet_size):
        norm, depth = trunc.commutator_norm(letter)
        commutators.append({"letter": s.labels[letter], "norm": norm, "k_i": depth})
    report = {
        "lambda_max": perron.value,
        "delta_h": perron.exponent,
        "theta": theta_rows if len(theta_rows) > 1 else theta_rows[0],
        "zeta": {"s": zeta_s, "partial": zeta.partial, "diagnosis": zeta.diagnosis},
        "commutators": commutators,
        "ck_residuals": {"unit_sum": residuals["unit_sum"],
                         "range_relation": residuals["range_relation"]},
    }
    return report, theta_rows


def _run_af(plan: RunPlan):
    s = shift.full_schottky_sft(int(plan.option("genus", 2)))
    levels = int(plan.option("levels", 6))
    p_val = float(plan.option("p", 1.0))
    q_val = float(plan.option("q", 3.0))
    core = triples.af_core_dims(s, levels - 1)
    af = triples.AFTriple(tuple(level.total for level in core), p_val, q_val)
    rep = triples.af_summability_report(af)
    rows = [{"n": n + 1, "dim": af.dims[n], "partial": rep.partials[n],
             "majorant": rep.majorant_partials[n]}
            for n in range(len(af.dims))]
    report = {
        "p": p_val,
        "q": q_val,
        "dims": list(af.dims),
        "partials": list(rep.partials),
        "majorants": list(rep.majorant_partials),
        "termwise_ok": rep.termwise_ok,
        "partials_ok": rep.partials_ok,
    }
    return report, rows


def _base_spectrum(kind: str, count: int) -> tuple:
    if kind == "zero":
        return ((0.0, 1),)
    if kind == "linear":
        return tuple((float(j), 1) for j in range(1, count + 1))
    return tuple((float(j * j), 1) for j in range(1, count + 1))


def _run_crossed(plan: RunPlan):
    base = _base_spectrum(plan.option("base", "linear"), int(plan.option("count", 200)))
    triple = triples.CrossedProductTriple(base, int(plan.option("cutoff", 200)))
    fit = triples.summability_exponent_fit(triple.spectrum())
    report = {"slope": fit.slope, "window": list(fit.window), "points": fit.points}
    return report, [report]


def _run_cohomology(plan: RunPlan):
    s = _sft_from_options(plan)
    levels = int(plan.option("levels", 3))
    dims = shift.cohomology_filtration_dims(s, levels)
    rows = [{"n": n + 1, "dim": d} for n, d in enumerate(dims)]
    return {"dims": list(dims)}, rows


def _run_building(plan: RunPlan):
    q = plan.option("q")
    source = plan.option("file")
    if (q is None) == (source is None):
        raise UsageError("need exactly one of --q or --file")
    pres = buildings.family_presentation(int(q)) if q is not None \
        else io.load_presentation(source)
    covered = bool(plan.option("cover"))
    if covered:
        pres = buildings.four_fold_cover(pres)
    report: dict = {"cover": covered, "presentation": io.presentation_to_dict(pres)}
    if plan.option("validate"):
        expected = None
        if q is not None:
            expected = (buildings.family_cover_link_graphs(int(q)) if covered
                        else [buildings.family_link_graph(int(q))])
        rep = buildings.validate_presentation(pres, expected or [])
        report["validation"] = {
            "rotation_closure": rep.rotation_closure.passed,
            "incidence": rep.incidence.passed if expected else None,
            "unique_continuation": rep.unique_continuation.passed,
            "ok": rep.ok if expected else
                  rep.rotation_closure.passed and rep.unique_continuation.passed,
        }
    if plan.option("links"):
        poly = buildings.polyhedron_from_presentation(pres)
        report["polyhedron"] = {
            "vertices": poly.vertex_count,
            "edges": poly.edge_count,
            "faces": poly.face_count,
            "links_complete_bipartite": [
                link.is_complete_bipartite() for link in poly.links],
        }
    if plan.option("stable_pairs"):
        res = buildings.stable_pairs_check(pres)
        report["stable_pairs"] = {"ok": res.ok,
                                  "witnesses": [list(w) for w in res.witnesses]}
    if plan.option("bm"):
        bm = buildings.bm_group_data(pres)
        report["bm"] = {
            "horizontal_generators": list(bm.horizontal_generators),
            "vertical_generators": list(bm.vertical_generators),
            "valences": list(bm.valences),
            "relations": [[[g, e] for g, e in rel] for rel in bm.relations],
        }
    return report, None


def _run_tau(plan: RunPlan):
    weights = [int(x) for x in str(plan.option("weights")).split(",")]
    x = buildings.solve_tau(weights)
    report = {"x": x, "residual": abs(buildings.tau_lhs(weights, x) - 2)}
    return report, [report]


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        plan = parse_invocation(argv)
        report, rows = execute(plan)
        payload = io.emit(report, plan.fmt, rows)
    except UsageError as exc:
        sys.stdout.buffer.write(io.emit(
            {"error": {"code": exc.code, "witness": str(exc)}}, "json"))
        return 64
    except GraphSpectraError as exc:
        sys.stdout.buffer.write(io.emit(
            {"error": {"code": exc.code,
                       "witness": repr(exc.witness) if exc.witness is not None
                       else str(exc)}}, "json"))
        return 2
    if plan.out:
        with open(plan.out, "wb") as handle:
            handle.write(payload)
    else:
        sys.stdout.buffer.write(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
