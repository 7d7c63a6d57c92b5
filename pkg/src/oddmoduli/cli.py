"""Command-line entry point: ``oddmoduli analyze`` and ``oddmoduli regress``."""

import argparse
import json
import logging
import sys
import traceback
from dataclasses import dataclass

from .canonical_ideal import initial_forms
from .deformation import (default_normalizations, parse_param, pre_deform,
                          read_normalization_file, render_param, residue_system)
from .errors import InvalidInput, ModuliError, UnknownParameter
from .moduli_solver import chart_dimension, solve_by_weight
from .polyring import p_render
from .semigroup import cubic_counts, from_generators, require_odd
from .syzygy import default_syzygies, render as render_syzygy
from .tangent import linearize, solve_T1
from .verify import run_samples

log = logging.getLogger("oddmoduli")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 3


@dataclass
class Analysis:
    S: object
    G: object
    syzygies: list
    D: object
    R: object
    linear: list
    T1: object
    P: object
    charts: dict
    best_chart: object
    verification: object
    requested_samples: int = 0


# Affine chart used for sampling when residual equations remain.
DEFAULT_CHART = {(6, 7, 8, 9, 10): "c_{14,5}"}


def run_pipeline(generators, normalization=None, samples=20, seed=0, max_degree=4, chart=None):
    """Semigroup to verified moduli presentation.  ``normalization`` may be a
    set of names or a path to an override file."""
    S = from_generators(generators)
    require_odd(S)
    log.info("semigroup %s, genus %d", S, S.genus)
    G = initial_forms(S)
    log.info("%d quadrics, %d cubics", len(G.quadratics), len(G.cubics))
    syz = default_syzygies(G)
    log.info("%d syzygies", len(syz))
    if isinstance(normalization, str):
        normalization = read_normalization_file(normalization, G)
    D = pre_deform(G, normalization if normalization is not None else default_normalizations(G))
    R = residue_system(D, syz)
    log.info("%d residue equations in %d parameters", len(R), len(D.params))
    lin = linearize(R)
    T1 = solve_T1(lin, D.params)
    log.info("T1 dimension %d", T1.dim)
    P = solve_by_weight(R, D.params)
    log.info("%d residual equations", len(P.residual))
    charts = {}
    chart = chart or DEFAULT_CHART.get(tuple(S.generators))
    wanted = None
    if chart and P.residual:
        wanted = parse_param(chart, G)
        if wanted not in P.free:
            raise UnknownParameter(f"{chart} is not a free coordinate")
    if P.residual:
        # sweeping every chart is only affordable on a minimal residual set
        for x in (P.free if P.minimal else [wanted] if wanted else []):
            charts[x] = chart_dimension(P, x)
            log.info("chart %s: dimension %d%s", x.render(), charts[x].dimension,
                     "" if charts[x].conclusive else " (lower bound)")
    conclusive = [c for c in charts.values() if c.conclusive]
    best = max(conclusive, key=lambda c: c.dimension) if conclusive else None
    if wanted is not None:
        best = charts[wanted] if charts[wanted].conclusive else None
    ver = None
    if samples and (best is not None or not P.residual):
        log.info("verifying %d samples", samples)
        ver = run_samples(D, R, syz, P, samples=samples, seed=seed, chart=best,
                          max_degree=max_degree)
    elif samples:
        log.warning("no conclusive chart: sample checks skipped")
    return Analysis(S, G, syz, D, R, lin, T1, P, charts, best, ver, samples)


def chart_dim(A):
    """Largest dimension over the conclusive charts."""
    if not A.P.residual:
        return len(A.P.free) - 1
    dims = [c.dimension for c in A.charts.values() if c.conclusive]
    return max(dims) if dims else None


def samples_requested(A):
    return A.requested_samples > 0


def build_report(A, seed=0, max_degree=4):
    G, P = A.G, A.P
    name = lambda x: render_param(x, G)  # noqa: E731
    eta, wp = cubic_counts(A.S)
    quad_syz = [r for r in A.syzygies if r.target[0] == "F"]
    cub_syz = [r for r in A.syzygies if r.target[0] == "G"]
    ver = A.verification
    return {
        "semigroup": {
            "generators": list(A.S.generators),
            "genus": A.S.genus,
            "gaps": list(A.S.gaps),
            "frobenius": A.S.frobenius,
            "nongaps": list(A.S.nongaps),
        },
        "counts": {
            "quadratics": len(G.quadratics),
            "cubics": len(G.cubics),
            "eta": eta,
            "wp": wp,
            "generators": {G.name(g.label): G.initial_form(g.label).render()
                           for g in G.quadratics + G.cubics},
        },
        "syzygies": {
            "quadratic": [render_syzygy(r, G) for r in quad_syz],
            "cubic": [render_syzygy(r, G) for r in cub_syz],
        },
        "residue": {
            "equations": len(A.R),
            "parameters": len(A.D.params),
            "normalized": sorted(name(x) for x in A.D.normalized),
            "redundant": P.redundant_count,
            "linearized": len(A.linear),
        },
        "t1": {
            "dim": A.T1.dim,
            "dims_by_weight": {str(w): d for w, d in A.T1.dims.items()},
            "alpha": A.T1.alpha,
            "free": [name(x) for x in A.T1.free],
        },
        "moduli": {
            "free": [{"name": name(x), "weight": x.w} for x in P.free],
            "elimination_classes": P.classes(),
            "eliminations": {name(x): p_render(P.eliminations[x], name) for x in P.order},
            "residual": [{"weight": w, "equation": p_render(r, name)} for w, r in P.residual],
            "raw_residual_weights": [w for w, _ in P.raw_residual],
            "residual_minimal": P.minimal,
            "chart_dimensions": {
                name(x): {"dimension": c.dimension, "conclusive": c.conclusive,
                          "solved": [name(y) for y in c.solved]}
                for x, c in A.charts.items()
            },
        },
        "verification": {
            "samples": ver.samples if ver else 0,
            "passed": ver.passed if ver else 0,
            "perturbed": ver.perturbed if ver else 0,
            "perturbed_detected": ver.perturbed_detected if ver else 0,
            "chart": render_param(A.best_chart.chart, G) if A.P.residual and A.best_chart else None,
            "skipped": ver is None and samples_requested(A),
            "seed": seed,
            "max_check_degree": max_degree,
        },
        "t1_dim": A.T1.dim,
        "alpha": A.T1.alpha,
        "residual_count": len(P.residual),
        "chart_dimension": chart_dim(A),
    }


def render_text(rep):
    lines = [f"semigroup <{', '.join(map(str, rep['semigroup']['generators']))}>, "
             f"genus {rep['semigroup']['genus']}"]
    c = rep["counts"]
    lines.append(f"{c['quadratics']} quadrics, {c['cubics']} cubics (eta={c['eta']}, wp={c['wp']})")
    for k, v in c["generators"].items():
        lines.append(f"  {k}^(0) = {v}")
    lines.append("syzygies:")
    for s in rep["syzygies"]["quadratic"] + rep["syzygies"]["cubic"]:
        lines.append(f"  {s} = 0")
    r = rep["residue"]
    lines.append(f"{r['equations']} equations in {r['parameters']} parameters, "
                 f"{r['redundant']} redundant")
    t = rep["t1"]
    dims = ", ".join(f"T1_-{w}: {d}" for w, d in t["dims_by_weight"].items())
    lines.append(f"dim T1,- = {t['dim']}  ({dims})")
    lines.append(f"alpha = ({', '.join(map(str, t['alpha']))})")
    lines.append("free: " + ", ".join(t["free"]))
    m = rep["moduli"]
    lines.append("eliminations:")
    for k, v in m["eliminations"].items():
        lines.append(f"  {k} = {v}")
    lines.append(f"residual equations: {rep['residual_count']}")
    for e in m["residual"]:
        lines.append(f"  [weight {e['weight']}] {e['equation']} = 0")
    lines.append(f"chart dimension: {rep['chart_dimension']}")
    v = rep["verification"]
    lines.append(f"verification: {v['passed']}/{v['samples']} solved points pass, "
                 f"{v['perturbed_detected']}/{v['perturbed']} perturbed points rejected")
    return "\n".join(lines) + "\n"


def _where(exc):
    frames = [f for f in traceback.extract_tb(exc.__traceback__) if "oddmoduli" in f.filename]
    if not frames:
        return "cli"
    return frames[-1].filename.rsplit("/", 1)[-1].removesuffix(".py")


def _fail(exc):
    code = EXIT_INPUT if isinstance(exc, InvalidInput) else EXIT_INVARIANT
    print(f"error [{_where(exc)}] {type(exc).__name__}: {exc}", file=sys.stderr)
    return code


def cmd_analyze(args):
    try:
        gens = [int(x) for x in args.generators.split(",") if x.strip()]
    except ValueError:
        print(f"error [cli] InvalidInput: bad generator list {args.generators!r}", file=sys.stderr)
        return EXIT_INPUT
    try:
        A = run_pipeline(gens, args.normalization_file, args.samples, args.seed,
                         args.max_check_degree, args.chart)
        rep = build_report(A, args.seed, args.max_check_degree)
    except ModuliError as exc:
        return _fail(exc)
    except OSError as exc:
        print(f"error [cli] {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = json.dumps(rep, indent=2) + "\n" if args.format == "json" else render_text(rep)
    if args.out in (None, "-", "stdout"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    ver = A.verification
    if ver and (ver.passed < ver.samples or ver.perturbed_detected < ver.perturbed):
        print("error [verify] sample checks failed", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


# Pinned results of the two worked examples.
CASES = {
    "genus5": {
        "generators": [5, 6, 7, 8],
        "quadratics": 3, "cubics": 4,
        "generators_text": {
            "F_{12}": "X_6^2 - X_5X_7", "F_{13}": "X_6X_7 - X_5X_8", "F_{14}": "X_7^2 - X_6X_8",
        },
        "equations": 70, "parameters": 64, "redundant": 16,
        "t1_dim": 10, "alpha": [2, 3, 4, 4, 5, 6, 7, 8, 9, 10],
        "free": ["d_{15,2}", "d_{15,3}", "c_{12,4}", "d_{15,4}", "d_{15,5}", "c_{12,6}",
                 "c_{13,7}", "d_{15,8}", "d_{15,9}", "d_{15,10}"],
        "classes": {"zero": 18, "linear": 11, "quadratic": 17, "higher": 8},
        "residual_weights": [],
        "chart_dimension": 9,
    },
    "genus6": {
        "generators": [6, 7, 8, 9, 10],
        "quadratics": 6, "cubics": 8,
        "equations": 188,
        "t1_dim": 15, "alpha": [2, 3, 4, 4, 5, 5, 6, 6, 7, 8, 8, 9, 10, 11, 12],
        "free": ["c_{14,2}", "d_{18,3}", "c_{14,4}", "d_{18,4}", "c_{14,5}", "d_{18,5}",
                 "c_{14,6}", "d_{18,6}", "c_{15,7}", "c_{15,8}", "c_{16,1,8}", "c_{16,1,9}",
                 "d_{18,10}", "d_{18,11}", "d_{18,12}"],
        "residual_weights": [13, 15, 16, 17, 19],
        "chart": "c_{14,5}", "chart_solved": ["c_{16,1,8}", "d_{18,10}", "d_{18,12}"],
        "chart_dimension": 11,
    },
}


def regress(case, samples=3, seed=0, out=None):
    """Run one pinned case; returns the list of (assertion, ok)."""
    expected = CASES[case]
    A = run_pipeline(expected["generators"], samples=samples, seed=seed)
    rep = build_report(A, seed)
    checks = [
        ("quadratic count", rep["counts"]["quadratics"] == expected["quadratics"]),
        ("cubic count", rep["counts"]["cubics"] == expected["cubics"]),
        ("equation count", rep["residue"]["equations"] == expected["equations"]),
        ("T1 dimension", rep["t1_dim"] == expected["t1_dim"]),
        ("alpha", rep["alpha"] == expected["alpha"]),
        ("free coefficients", rep["t1"]["free"] == expected["free"]),
        ("residual weights", sorted(e["weight"] for e in rep["moduli"]["residual"])
         == expected["residual_weights"]),
        ("chart dimension", rep["chart_dimension"] == expected["chart_dimension"]),
        ("normalization count", len(A.D.normalized) == len(A.S.nongaps) * (len(A.S.nongaps) - 1) // 2),
        ("sample checks", samples == 0 or A.verification is not None
         and A.verification.passed == samples and A.verification.perturbed_detected == samples),
    ]
    for key in ("generators_text",):
        if key in expected:
            gens = rep["counts"]["generators"]
            checks.append(("quadric text", all(gens.get(k) == v for k, v in expected[key].items())))
    if "parameters" in expected:
        checks.append(("parameter count", rep["residue"]["parameters"] == expected["parameters"]))
        checks.append(("redundant count", rep["residue"]["redundant"] == expected["redundant"]))
    if "classes" in expected:
        checks.append(("elimination classes", rep["moduli"]["elimination_classes"] == expected["classes"]))
    if "chart" in expected:
        c = rep["moduli"]["chart_dimensions"][expected["chart"]]
        checks.append(("chart solves", c["solved"] == expected["chart_solved"]
                       and c["dimension"] == expected["chart_dimension"]))
    out = out or sys.stdout
    for label, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {case}: {label}", file=out)
    return checks


def cmd_regress(args):
    if args.case not in CASES:
        print(f"error [cli] unknown case {args.case!r}; choose from {', '.join(CASES)}",
              file=sys.stderr)
        return EXIT_INPUT
    try:
        checks = regress(args.case, args.samples, args.seed)
    except ModuliError as exc:
        return _fail(exc)
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_FAIL


def build_parser():
    ap = argparse.ArgumentParser(prog="oddmoduli",
                                 description="Moduli of pointed curves with an odd Weierstrass semigroup")
    ap.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = ap.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", help="run the full pipeline for one semigroup")
    a.add_argument("--generators", required=True, help="comma separated, e.g. 5,6,7,8")
    a.add_argument("--normalization-file")
    a.add_argument("--max-check-degree", type=int, default=4, choices=(2, 3, 4))
    a.add_argument("--samples", type=int, default=20)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--chart", help="free coordinate set to 1 when sampling, e.g. c_{14,5}")
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.add_argument("--out", default="stdout")
    a.set_defaults(func=cmd_analyze)
    r = sub.add_parser("regress", help="check a pinned worked example")
    r.add_argument("--case", required=True)
    r.add_argument("--samples", type=int, default=3)
    r.add_argument("--seed", type=int, default=0)
    r.set_defaults(func=cmd_regress)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
