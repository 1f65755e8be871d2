"""Command-line front end.

Five subcommands over one shared flag grammar:

    tropical-refine <enumerate|invariant|quantum|realize|plot>
        --degree <path|inline> [--s N] [--n1 x,y] [--moments a/b,...]
        [--seed N] [--trials N] [--out PATH] [--format json|text|svg]

`enumerate` solves every combinatorial type against one moment constraint,
`invariant` runs the multi-seed invariance audit and reports N, R and the
Broccoli normalization, `quantum` tabulates quadrivalent quantum-index data
(it takes --m1 and --delta instead of a curve count), `realize` computes the
maximal splitting and first-order real multiplicity of every solution, and
`plot` is `enumerate` with an SVG default.

Degrees are read from a JSON file ({"entries": [[x, y], ...]}), an inline
JSON literal, or the compact form "x,y;x,y;...". Moments are exact rationals;
either n-1 values (the first end's moment is implied) or all n (checked to
sum to zero). All JSON and SVG output is deterministic byte for byte:
identical invocations produce identical files. Fatal mathematical conditions
print a one-line error JSON to stdout and exit 1.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import MenelausViolation, TropicalError
from .invariants import invariance_audit, r_from_n, random_generic_moments, refined_count
from .lattice import (Degree, MomentVector, Vec, build_delta_s, frac_str,
                      polygon_of, primitive, split_even_ends)
from .laurent import HalfLaurent
from .realsplit import (WeightedPlaneParam, c_k_values, coamoeba_area,
                        m_prime, maximal_split, oriented_solution_count,
                        quad_indices, quad_refined_sum)
from .solver import TropicalSolution
from .svgplot import render_svg

FORMATS = ("json", "text", "svg")


def parse_vec(text: str) -> Vec:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'x,y', got {text!r}")
    return Vec(int(parts[0]), int(parts[1]))


def load_degree(source: str) -> Degree:
    """A degree from a JSON file path, an inline JSON literal, or the
    compact "x,y;x,y;..." form."""
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return Degree.from_json(json.load(fh))
    stripped = source.strip()
    if stripped.startswith("{"):
        return Degree.from_json(json.loads(stripped))
    if stripped.startswith("["):
        return Degree.from_json({"entries": json.loads(stripped)})
    entries = [parse_vec(chunk) for chunk in stripped.split(";") if chunk]
    return Degree(tuple(entries))


def default_n1(delta: Degree, s: int) -> Vec:
    """The lexicographically smallest direction occurring with multiplicity
    at least 2s, the pairing side used when --n1 is not given."""
    counts: dict[Vec, int] = {}
    for v in delta.entries:
        counts[primitive(v)] = counts.get(primitive(v), 0) + 1
    eligible = [v for v, c in counts.items() if c >= 2 * s]
    if not eligible:
        raise TropicalError(f"no direction has multiplicity >= {2 * s}")
    return min(eligible)


def resolve_degree(args: argparse.Namespace) -> Degree:
    delta = load_degree(args.degree)
    if args.s == 0:
        return delta
    n1 = parse_vec(args.n1) if args.n1 else default_n1(delta, args.s)
    return build_delta_s(delta, n1, args.s)


def parse_moments(text: str, delta_s: Degree) -> MomentVector:
    values = [Fraction(chunk) for chunk in text.split(",") if chunk]
    n = len(delta_s)
    if len(values) == n:
        total = sum(values, Fraction(0))
        if total != 0:
            raise MenelausViolation(
                f"{n} moments must sum to zero, got {frac_str(total)}")
        values = values[1:]
    elif len(values) != n - 1:
        raise TropicalError(
            f"need {n - 1} or {n} moments for {n} ends, got {len(values)}")
    return MomentVector(tuple(values))


def resolve_moments(args: argparse.Namespace, delta_s: Degree) -> MomentVector:
    if args.moments is not None:
        return parse_moments(args.moments, delta_s)
    return random_generic_moments(delta_s, args.seed)


def degree_text(delta: Degree) -> str:
    return " ".join(f"({v.x},{v.y})" for v in delta.entries)


def solution_json(sol: TropicalSolution) -> dict:
    refined = sol.refined_multiplicity()
    return {
        "tree": sol.ctype.serialize(),
        "root": [frac_str(c) for c in sol.root],
        "vertexPositions": {
            str(v): [frac_str(x), frac_str(y)]
            for v, (x, y) in sorted(sol.positions().items())
        },
        "edgeLengths": {
            f"{a}-{b}": frac_str(ln)
            for (a, b), ln in sorted(sol.lengths.items())
        },
        "endMoments": [frac_str(mo) for mo in sol.end_moments()],
        "multiplicity": sol.classical_multiplicity(),
        "refinedMultiplicity": refined.to_json_pairs(),
        "refinedMultiplicityText": str(refined),
    }


def run_enumerate(args: argparse.Namespace) -> tuple[dict, str]:
    delta_s = resolve_degree(args)
    mu = resolve_moments(args, delta_s)
    n_trop, sols = refined_count(delta_s, mu)
    payload = {
        "command": "enumerate",
        "degree": delta_s.to_json(),
        "moments": [frac_str(v) for v in mu.full()],
        "solutionCount": len(sols),
        "refinedCount": n_trop.to_json_pairs(),
        "refinedCountText": str(n_trop),
        "solutions": [solution_json(s) for s in sols],
    }
    lines = [f"degree: {degree_text(delta_s)}",
             f"moments: {', '.join(frac_str(v) for v in mu.full())}",
             f"solutions: {len(sols)}"]
    for sol in sols:
        x, y = sol.root
        lines.append(f"  tree {sol.ctype.serialize()}  root "
                     f"({frac_str(x)}, {frac_str(y)})  mult "
                     f"{sol.classical_multiplicity()}  refined "
                     f"{sol.refined_multiplicity()}")
    lines.append(f"N = {n_trop}")
    return payload, "\n".join(lines) + "\n"


def run_invariant(args: argparse.Namespace) -> tuple[dict, str]:
    delta_s = resolve_degree(args)
    report = invariance_audit(delta_s, trials=args.trials, seed=args.seed)
    payload = {"command": "invariant", **report.to_json()}
    lines = [f"degree: {degree_text(delta_s)}   s = {report.s}   m = {report.m}",
             f"trials: {report.trials}, solutions per trial: "
             f"{list(report.solutions_per_trial)}",
             f"N = {report.n_trop}, R = {report.r_inv}",
             f"BG = {report.broccoli}"]
    return payload, "\n".join(lines) + "\n"


def run_quantum(args: argparse.Namespace) -> tuple[dict, str]:
    if args.m1 is None:
        raise TropicalError("quantum needs --m1 (and optionally --delta)")
    m1, delta = args.m1, args.delta
    indices = quad_indices(m1, delta)
    refined = quad_refined_sum(m1, delta)
    closed = (HalfLaurent.q_power(m1 * delta) - HalfLaurent.q_power(-m1 * delta)
              ).exact_div(HalfLaurent.q_power(delta) - HalfLaurent.q_power(-delta))
    areas = [coamoeba_area(m1, k) for k in range(m1)]
    cks = c_k_values(m1)
    payload = {
        "command": "quantum",
        "m1": m1,
        "delta": delta,
        "indices": indices,
        "refinedSum": refined.to_json_pairs(),
        "refinedSumText": str(refined),
        "closedFormAgrees": refined == closed,
        "coamoebaAreas": [frac_str(a) for a in areas],
        "ckValues": [frac_str(c) for c in cks],
    }
    lines = [f"quadrivalent vertex: m1 = {m1}, delta = {delta}",
             f"indices: {indices}",
             f"refined sum: {refined}",
             f"closed form agrees: {refined == closed}",
             "k | index | coamoeba area | c_k"]
    for k in range(m1):
        lines.append(f"{k} | {indices[k]} | {frac_str(areas[k])} "
                     f"| {frac_str(cks[k])}")
    return payload, "\n".join(lines) + "\n"


def run_realize(args: argparse.Namespace) -> tuple[dict, str]:
    delta_s = resolve_degree(args)
    mu = resolve_moments(args, delta_s)
    n_trop, sols = refined_count(delta_s, mu)
    delta, s = split_even_ends(delta_s)
    r_inv = r_from_n(n_trop, len(delta), s)
    total = HalfLaurent(0)
    entries = []
    lines = [f"degree: {degree_text(delta_s)}   s = {s}   m = {len(delta)}"]
    for sol in sols:
        split = maximal_split(WeightedPlaneParam.from_solution(sol))
        mp = m_prime(split, sol.ctype.multiplicities())
        total = total + mp
        entries.append({
            "tree": sol.ctype.serialize(),
            "root": [frac_str(c) for c in sol.root],
            "quadVertices": [[v, m] for v, m in split.quad_vertices],
            "fixedNodeCount": len(split.fixed_nodes),
            "realizable": split.is_realizable,
            "mPrime": mp.to_json_pairs(),
            "mPrimeText": str(mp),
            "orientedSolutions": oriented_solution_count(split),
        })
        lines.append(f"  tree {sol.ctype.serialize()}  quads "
                     f"{len(split.quad_vertices)}  m' = {mp}  oriented "
                     f"{oriented_solution_count(split)}")
    quarter = total.exact_div(HalfLaurent(4))
    payload = {
        "command": "realize",
        "degree": delta_s.to_json(),
        "moments": [frac_str(v) for v in mu.full()],
        "s": s,
        "m": len(delta),
        "solutions": entries,
        "sumMPrimeQuarter": quarter.to_json_pairs(),
        "realInvariant": r_inv.to_json_pairs(),
        "matchesRealInvariant": quarter == r_inv,
    }
    lines.append(f"sum m'/4 = {quarter}")
    lines.append(f"R = {r_inv}  ({'match' if quarter == r_inv else 'MISMATCH'})")
    return payload, "\n".join(lines) + "\n"


def run_plot(args: argparse.Namespace) -> tuple[dict, str]:
    return run_enumerate(args)


_RUNNERS = {
    "enumerate": run_enumerate,
    "invariant": run_invariant,
    "quantum": run_quantum,
    "realize": run_realize,
    "plot": run_plot,
}


def render_solutions_svg(args: argparse.Namespace) -> str:
    delta_s = resolve_degree(args)
    mu = resolve_moments(args, delta_s)
    _, sols = refined_count(delta_s, mu)
    return render_svg(sols, polygon_of(delta_s))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropical-refine",
        description="Refined tropical curve counts and their real forms.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _RUNNERS:
        p = sub.add_parser(name)
        p.add_argument("--degree", required=(name != "quantum"),
                       help="degree JSON file, inline JSON, or 'x,y;x,y;...'")
        p.add_argument("--s", type=int, default=0,
                       help="number of end pairs to merge into weight-2 ends")
        p.add_argument("--n1", default=None,
                       help="direction 'x,y' of the ends merged by --s")
        p.add_argument("--moments", default=None,
                       help="comma-separated rationals, n-1 or n of them")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for generated moments")
        p.add_argument("--trials", type=int, default=5,
                       help="constraint draws for the invariance audit")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=FORMATS,
                       default="svg" if name == "plot" else "json")
        if name == "quantum":
            p.add_argument("--m1", type=int, default=None,
                           help="first normal-form multiplicity of the vertex")
            p.add_argument("--delta", type=int, default=1,
                           help="index step of the vertex (default 1)")
    return parser


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.format == "svg":
            if args.command in ("invariant", "quantum"):
                raise TropicalError(
                    f"{args.command} has no curve picture; use json or text")
            text = render_solutions_svg(args)
        else:
            payload, rendered = _RUNNERS[args.command](args)
            if args.format == "json":
                text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
            else:
                text = rendered
    except (TropicalError, ValueError, OSError) as exc:
        error = {"error": type(exc).__name__, "message": str(exc)}
        sys.stdout.write(json.dumps(error, sort_keys=True) + "\n")
        return 1
    _write(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
