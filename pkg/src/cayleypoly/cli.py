"""Command-line surface.

Usage:
    cayleypoly hrep --family tutte --n 3 --q 1/2 --t 1
    cayleypoly simplices --family cayley --n 2
    cayleypoly pieces --family tutte --n 2 --q 1/2 --t 1
    cayleypoly volume --family tutte --n 3 --symbolic
    cayleypoly zpoly --n 4
    cayleypoly fvector --n 5 --q 1/2 --t 1
    cayleypoly vertices --family tutte --n 3 --q 1/2 --t 1
    cayleypoly recursion --n 6 --mode both
    cayleypoly cayley1857 --n 3
    cayleypoly verify --check all --nmax 3

Rational parameters are exact strings ("1/2", "2"); decimals are rejected.
Every command writes deterministic output (sorted keys, fixed enumeration
order), so identical flags produce byte-identical bytes.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 parameter outside its domain.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exact import format_rational, parse_rational
from .faces import cayley_vertices, tutte_f_vector, tutte_vertices
from .forests import enumerate_labeled_forests, enumerate_plane_forests, enumerate_plane_trees
from .geometry import (
    FAMILIES,
    ParameterDomainError,
    build_hrep,
    family_parameters,
    orthoscheme_vertices,
    piece_for_plane_forest,
    simplex_for_forest,
    vrep_to_text,
)
from .verify import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    run_all,
    verify_fiber,
    verify_piece_constructions,
    verify_refinement,
    verify_specializations,
    verify_subdivision,
    verify_triangulation,
)
from .volumes import (
    connected_gf,
    lattice_and_partition_counts,
    volume_report,
    z_bruteforce,
)

EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _emit(args, payload: dict | str) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _add_common(parser, family=False, q_t=True, fmt=True):
    if family:
        parser.add_argument("--family", choices=FAMILIES, required=True)
    parser.add_argument("--n", type=int, required=True)
    if q_t:
        parser.add_argument("--q", type=_rational, default=Fraction(1, 2))
        parser.add_argument("--t", type=_rational, default=Fraction(1))
    if fmt:
        parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--output", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cayleypoly", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hrep", help="H-representation of a family polytope")
    _add_common(p, family=True)

    p = sub.add_parser("simplices", help="triangulation simplices (V-reps)")
    _add_common(p, family=True)

    p = sub.add_parser("pieces", help="subdivision pieces (H-reps)")
    _add_common(p, family=True)

    p = sub.add_parser("volume", help="n!-scaled volume, three ways")
    _add_common(p, family=True)
    p.add_argument("--symbolic", action="store_true", help="skip the determinant pass")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("zpoly", help="spanning-subgraph sum of the complete graph")
    p.add_argument("--n", type=int, required=True, help="number of nodes of K_n")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", default=None)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("fvector", help="f-vector of the two-parameter polytope")
    _add_common(p, fmt=False)

    p = sub.add_parser("vertices", help="closed-form vertex set of a family polytope")
    _add_common(p, family=True)

    p = sub.add_parser("recursion", help="connected-graph edge generating function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("recursion", "bruteforce", "both"), default="both")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", default=None)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("cayley1857", help="integer-point and partition counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output", default=None)

    p = sub.add_parser("verify", help="run verification jobs; exit 0 iff all pass")
    p.add_argument(
        "--check",
        choices=(
            "triangulation",
            "subdivision",
            "refinement",
            "specializations",
            "pieces",
            "fiber",
            "all",
        ),
        default="all",
    )
    p.add_argument("--all", action="store_true", help="synonym for --check all")
    p.add_argument("--family", choices=FAMILIES, default="tutte")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--q", type=_rational, default=Fraction(1, 2))
    p.add_argument("--t", type=_rational, default=Fraction(1))
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", default=None)

    return parser


# ----------------------------------------------------------------------
# Command implementations
# ----------------------------------------------------------------------


def _cmd_hrep(args) -> int:
    hrep = build_hrep(args.family, args.n, args.q, args.t)
    if args.format == "text":
        _emit(args, hrep.to_text())
    else:
        q_eff, t_eff = family_parameters(args.family, args.q, args.t)
        _emit(
            args,
            {
                "family": args.family,
                "n": args.n,
                "q": format_rational(q_eff),
                "t": format_rational(t_eff),
                "hrep": hrep.to_json_obj(),
            },
        )
    return 0


def _cmd_simplices(args) -> int:
    q_eff, t_eff = family_parameters(args.family, args.q, args.t)
    trees_only = args.family in ("cayley", "tcayley")
    entries = []
    for f in enumerate_labeled_forests(args.n + 1, trees_only=trees_only):
        s = simplex_for_forest(f, q_eff, t_eff)
        entries.append((f.to_parent_text(), s))
    if args.format == "text":
        blocks = [f"forest {name}\n{s.to_text()}" for name, s in entries]
        _emit(args, "".join(blocks))
    else:
        _emit(
            args,
            {
                "family": args.family,
                "n": args.n,
                "count": len(entries),
                "simplices": [
                    {"forest": name, **s.to_json_obj()} for name, s in entries
                ],
            },
        )
    return 0


def _cmd_pieces(args) -> int:
    q_eff, t_eff = family_parameters(args.family, args.q, args.t)
    if args.family in ("cayley", "tcayley"):
        plane = enumerate_plane_trees(args.n + 1)
    else:
        plane = enumerate_plane_forests(args.n + 1)
    entries = [(pf.to_text(), piece_for_plane_forest(pf, q_eff, t_eff)) for pf in plane]
    if args.format == "text":
        blocks = [f"plane_forest {name}\n{hrep.to_text()}" for name, hrep in entries]
        _emit(args, "".join(blocks))
    else:
        _emit(
            args,
            {
                "family": args.family,
                "n": args.n,
                "count": len(entries),
                "pieces": [{"plane_forest": name, "hrep": h.to_json_obj()} for name, h in entries],
            },
        )
    return 0


def _cmd_volume(args) -> int:
    report = volume_report(
        args.family,
        args.n,
        args.q,
        args.t,
        with_determinant=not args.symbolic,
        jobs=args.jobs,
    )
    payload = {
        "family": args.family,
        "n": args.n,
        "agree": report.agree(),
        "polynomial": report.by_graph_sum.to_json_obj(),
        "by_closed_form": report.by_closed_form.to_json_obj(),
        "by_pieces": report.by_pieces.to_json_obj(),
    }
    if report.by_determinant is not None:
        payload["q"] = format_rational(report.q)
        payload["t"] = format_rational(report.t)
        payload["by_determinant"] = format_rational(report.by_determinant)
    _emit(args, payload)
    return 0 if report.agree() else EXIT_VERIFICATION_FAILURE


def _cmd_zpoly(args) -> int:
    poly = z_bruteforce(args.n, jobs=args.jobs)
    if args.format == "text":
        _emit(args, repr(poly) + "\n")
    else:
        _emit(args, {"nodes": args.n, "polynomial": poly.to_json_obj()})
    return 0


def _cmd_fvector(args) -> int:
    f = tutte_f_vector(args.n, args.q, args.t)
    _emit(
        args,
        {
            "n": args.n,
            "q": format_rational(args.q),
            "t": format_rational(args.t),
            "f": list(f),
        },
    )
    return 0


def _cmd_vertices(args) -> int:
    q_eff, t_eff = family_parameters(args.family, args.q, args.t)
    if args.family == "tutte":
        vs = tutte_vertices(args.n, args.q, args.t)
        points, provenance = vs.points, vs.provenance
    elif args.family in ("cayley", "tcayley"):
        vs = cayley_vertices(args.n, t_eff)
        points, provenance = vs.points, vs.provenance
    else:
        lengths = [(1 + t_eff) ** k for k in range(1, args.n + 1)]
        points = tuple(orthoscheme_vertices(lengths))
        provenance = tuple(f"prefix={k}" for k in range(args.n + 1))
    if args.format == "text":
        _emit(args, vrep_to_text(points, args.n))
    else:
        _emit(
            args,
            {
                "family": args.family,
                "n": args.n,
                "count": len(points),
                "points": [[format_rational(x) for x in p] for p in points],
                "provenance": list(provenance),
            },
        )
    return 0


def _cmd_recursion(args) -> int:
    payload: dict = {"n": args.n, "mode": args.mode}
    if args.mode in ("recursion", "both"):
        payload["recursion"] = connected_gf(args.n, "recursion").to_json_obj()
    if args.mode in ("bruteforce", "both"):
        payload["bruteforce"] = connected_gf(args.n, "bruteforce", jobs=args.jobs).to_json_obj()
    if args.mode == "both":
        payload["agree"] = payload["recursion"] == payload["bruteforce"]
    _emit(args, payload)
    if args.mode == "both" and not payload["agree"]:
        return EXIT_VERIFICATION_FAILURE
    return 0


def _cmd_cayley1857(args) -> int:
    lattice, partitions = lattice_and_partition_counts(args.n)
    _emit(args, {"n": args.n, "lattice_points": lattice, "partitions": partitions})
    return 0 if lattice == partitions else EXIT_VERIFICATION_FAILURE


def _cmd_verify(args) -> int:
    if getattr(args, "all", False):
        args.check = "all"
    kwargs = {"samples": args.samples, "seed": args.seed}
    if args.check == "all":
        reports = run_all(args.nmax, args.q, args.t, jobs=args.jobs, **kwargs)
    elif args.check == "fiber":
        nodes = (args.n + 1) if args.n else min(args.nmax + 1, 6)
        reports = [verify_fiber(nodes, jobs=args.jobs)]
    else:
        n_values = [args.n] if args.n else list(range(1, args.nmax + 1))
        reports = []
        for n in n_values:
            if args.check == "triangulation":
                reports.append(verify_triangulation(args.family, n, args.q, args.t, **kwargs))
            elif args.check == "subdivision":
                reports.append(verify_subdivision(args.family, n, args.q, args.t, **kwargs))
            elif args.check == "refinement":
                reports.append(verify_refinement(args.family, n, args.q, args.t))
            elif args.check == "specializations":
                reports.append(verify_specializations(n, args.q, args.t))
            elif args.check == "pieces":
                reports.append(verify_piece_constructions(n, args.q, args.t))
    all_passed = all(r.passed for r in reports)
    _emit(
        args,
        {
            "passed": all_passed,
            "jobs": [r.to_json_obj() for r in reports],
        },
    )
    return 0 if all_passed else EXIT_VERIFICATION_FAILURE


_COMMANDS = {
    "hrep": _cmd_hrep,
    "simplices": _cmd_simplices,
    "pieces": _cmd_pieces,
    "volume": _cmd_volume,
    "zpoly": _cmd_zpoly,
    "fvector": _cmd_fvector,
    "vertices": _cmd_vertices,
    "recursion": _cmd_recursion,
    "cayley1857": _cmd_cayley1857,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParameterDomainError as exc:
        print(f"parameter domain violation: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
