"""
Main entry point for the alternation / Kneser bound toolkit.

Usage:
    python main.py alt --family kneser:5,2 --mode alt          # alt(H) with a minimizing sigma
    python main.py alt --family pnks:8,2,2 --sigma identity    # alt(P(n,k,s), I)
    python main.py gale --family schrijver:6,2                 # configuration on S^d + verification
    python main.py gale --n 5 --d 1 --property p2 --family schrijver:5,2
    python main.py bounds --family sstable:8,2,2               # chi(KG(H)) against cd, alt, salt
    python main.py bounds --graph petersen                     # any graph via a Kneser representation
    python main.py multichi --family kneser:5,2 --m 2 --nmax 8 # chi_m(G) by homomorphism search
    python main.py boxcomplex --graph k2 --variant b0          # f-vector and Z2 checks of B0(G)
    python main.py ingest <file.json|directory>                # store hypergraph files for sweeps
    python main.py sweep [corpus.yaml]                         # bound reports + Gale checks for a corpus
    python main.py export-csv <out.csv>                        # CSV of the latest sweep
    python main.py stats                                       # summary of the latest sweep

Every command takes --format json|csv|text and --output PATH where it
emits a report.  Exit codes: 0 success, 2 input error, 3 capacity
refusal, 4 invariant violation.
"""
import argparse
import sys
from pathlib import Path

from alternation import (DEFAULT_SEED, SearchBudget, alt_min, alt_property, build_property, check_bijection,
                         format_sign_vector, identity, property_alt_min, property_for_mode, sigma_names)
from box_complex import build_box_complex, complex_to_dict
from coloring import (bound_report, chen_value, kneser_family_graph, kneser_representation, label_of,
                      meunier_value, multichromatic_number, stahl_value, verify_homomorphism)
from corpus import DEFAULT_CORPUS_FILE, export_csv, print_summary, run_sweep
from database import DB_PATH
from gale import build_configuration, check_general_position, configuration_to_dict, verify
from hypergraph import CapacityError, DomainError, Hypergraph
from ingest import family_graph, family_hypergraph, ingest_directory, ingest_file, load_hypergraph, parse_family
from reports import FORMATS, write_report


EXIT_OK, EXIT_INPUT, EXIT_CAPACITY, EXIT_INVARIANT = 0, 2, 3, 4
DEFAULT_NMAX = 12


class InvariantViolation(Exception):
    """A result contradicts an inequality every correct run satisfies."""


# ==================== INPUT RESOLUTION ====================

def _hypergraph(args) -> tuple[str, Hypergraph]:
    if getattr(args, "family", None):
        return args.family, family_hypergraph(args.family)
    if getattr(args, "input", None):
        return args.input, load_hypergraph(args.input)
    if getattr(args, "graph", None):
        return args.graph, kneser_representation(family_graph(args.graph))
    raise DomainError("give a hypergraph with --family or --input (or a graph with --graph)")


def _sigma(args, h: Hypergraph, mode: str) -> tuple[tuple[int, ...], bool]:
    """Resolve --sigma: 'identity', 'min' or a comma list of vertex names (position order)."""
    choice = (args.sigma or "identity").strip()
    if choice == "identity":
        return identity(h.n), True
    if choice == "min":
        result = alt_min(h, mode, _budget(args))
        return result.sigma, result.exact
    return check_bijection([h.index(name.strip()) for name in choice.split(",")], h.n), True


def _budget(args) -> SearchBudget:
    return SearchBudget(seed=args.seed, workers=max(1, args.threads))


def _property_spec(args) -> str | None:
    """An explicit --property, or the property a pnks family names."""
    if getattr(args, "property", None):
        return args.property
    if getattr(args, "family", None) and parse_family(args.family)[0] == "pnks":
        return args.family
    return None


def _emit(args, report: dict, title: str) -> None:
    write_report(report, args.format, args.output, title)


# ==================== COMMANDS ====================

def cmd_alt(args) -> int:
    source, h = _hypergraph(args)
    spec = _property_spec(args)
    report = {"command": "alt", "input": source, "vertices": h.n, "edges": len(h.edges),
              "degenerate": not h.edges}

    if spec is not None:
        prop = build_property(spec, h)
        if prop.n != h.n:
            raise DomainError(f"property {prop.name} is on {prop.n} vertices, the hypergraph has {h.n}")
        if args.sigma == "min":
            best = property_alt_min(spec, h, _budget(args))
            sigma, exact = best.sigma, best.exact
        else:
            sigma, exact = _sigma(args, h, args.mode)
        result = alt_property(prop, sigma)
        report.update({"property": prop.name, "value": result.value, "all_in_property": result.all_in_property,
                       "sigma": sigma_names(h.vertices, sigma), "exact": exact,
                       "witness": format_sign_vector(result.witness) if result.witness else None})
        _emit(args, report, "alternation of a property")
        return EXIT_OK

    if args.sigma is None or args.sigma == "min":
        result = alt_min(h, args.mode, _budget(args))
        sigma, value, exact = result.sigma, result.value, result.exact
    else:
        sigma, exact = _sigma(args, h, args.mode)
        value = alt_property(property_for_mode(h, args.mode), sigma).value
    witness = alt_property(property_for_mode(h, args.mode), sigma).witness
    report.update({"mode": args.mode, "value": value, "sigma": sigma_names(h.vertices, sigma), "exact": exact,
                   "witness": format_sign_vector(witness) if witness else None})
    _emit(args, report, f"{args.mode} number")
    return EXIT_OK


def cmd_gale(args) -> int:
    if args.n is not None or args.d is not None:
        if args.n is None or args.d is None:
            raise DomainError("--n and --d go together")
        z = build_configuration(args.n, args.d)
        h = family_hypergraph(args.family) if args.family else None
        prop = build_property(args.property, h) if args.property else None
        derived = False
    else:
        source, h = _hypergraph(args)
        spec = _property_spec(args)
        prop = build_property(spec, h) if spec else property_for_mode(h, args.mode)
        sigma, _exact = _sigma(args, h, args.mode)
        value = alt_property(prop, sigma).value
        if value in (h.n, -1):
            raise DomainError(f"alt(P, sigma) = {value}: d = |V| - alt - 1 leaves no sphere to place points on")
        z = build_configuration(h.n, h.n - value - 1, sigma, h.vertices)
        derived = True

    report = {"command": "gale", "d": z.d, "n": z.n, "configuration": configuration_to_dict(z),
              "general_position": not check_general_position(z)}
    if prop is None:
        _emit(args, report, "gale configuration")
        return EXIT_OK

    if prop.n != z.n:
        raise DomainError(f"property {prop.name} is on {prop.n} vertices, configuration has {z.n} points")
    result = verify(z, prop, args.verify, args.trials, args.seed)
    report.update({"property": prop.name, "verification": result.to_dict()})
    _emit(args, report, "gale verification")
    if derived and not result.ok:
        raise InvariantViolation(f"hemisphere trace outside {prop.name}: {result.counterexample}")
    return EXIT_OK


def _targets(spec: str | None, m: int = 1) -> dict:
    """Closed-form values for a named family, when one applies."""
    if not spec or ":" not in spec:
        return {}
    name, params = parse_family(spec)
    out = {}
    if name == "kneser":
        n, k = params
        if n >= 2 * k:
            out["stahl"], out["stahl_status"] = stahl_value(n, k, m)
    elif name in ("schrijver", "sstable"):
        n, k, s = (*params, 2) if name == "schrijver" else params
        if n >= s * k:
            out["meunier"], out["meunier_status"] = meunier_value(n, k, s)
            if s % 2 == 0 and m <= k:
                out["chen"] = chen_value(n, k, s, m)
    return out


def cmd_bounds(args) -> int:
    source, h = _hypergraph(args)
    report = bound_report(h, _budget(args))
    body = {"command": "bounds", "input": source, **report.to_dict(),
            "targets": _targets(args.family)}
    _emit(args, body, "bound report")
    if report.violations():
        raise InvariantViolation("; ".join(report.violations()))
    return EXIT_OK


def cmd_multichi(args) -> int:
    if args.family:
        source, g = args.family, family_graph(args.family)
    elif args.graph:
        source, g = args.graph, family_graph(args.graph)
    else:
        raise DomainError("give a graph with --family or --graph")
    result = multichromatic_number(g, args.m, args.nmax)
    target = kneser_family_graph(result.value, args.m)
    issues = verify_homomorphism(g, target, result.homomorphism)
    body = {"command": "multichi", "input": source, "m": args.m, "value": result.value,
            "homomorphism": {label_of(g, v): label_of(target, t) for v, t in sorted(result.homomorphism.items())},
            "targets": _targets(args.family, args.m)}
    _emit(args, body, "multichromatic number")
    if issues:
        raise InvariantViolation(f"homomorphism witness rejected: {issues[0]}")
    return EXIT_OK


def cmd_boxcomplex(args) -> int:
    if not args.graph:
        raise DomainError("give a graph with --graph")
    complex_ = build_box_complex(family_graph(args.graph), args.variant)
    body = {"command": "boxcomplex", "input": args.graph, **complex_to_dict(complex_)}
    _emit(args, body, f"box complex {args.variant}")
    z2 = body["z2"]
    if not (z2["hereditary"] and z2["involution_closed"] and z2["free"]):
        raise InvariantViolation(f"Z2 structure check failed: {z2['witnesses']}")
    return EXIT_OK


def cmd_ingest(args) -> int:
    if Path(args.target).is_dir():
        results = ingest_directory(args.target, args.db)
        print(f"\nIngested {sum(1 for r in results if not r['errors'])} of {len(results)} files")
        return EXIT_OK
    stats = ingest_file(args.target, args.db)
    if stats["errors"]:
        raise DomainError(stats["errors"][0])
    print(f"\nIngested: {stats['instance_id']}")
    print(f"  Vertices: {stats['vertices']}")
    print(f"  Edges: {stats['edges']}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    print("=" * 50)
    print("CORPUS SWEEP")
    print("=" * 50)
    stats = run_sweep(args.corpus, args.db, max(1, args.threads))
    if "error" in stats:
        raise DomainError(stats["error"])

    print(f"\nRun {stats['run_id']}: {stats['instances']} instances, {stats['gale_checks']} Gale checks")
    if stats["errors"]:
        print(f"\nWarnings ({len(stats['errors'])}):")
        for err in stats["errors"]:
            print(f"  - {err}")
    print_summary(args.db, stats["run_id"])
    if stats["violations"]:
        print(f"\nViolations ({len(stats['violations'])}):")
        for v in stats["violations"]:
            print(f"  - {v}")
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_export_csv(args) -> int:
    rows = export_csv(args.output_csv, args.db, args.run)
    print(f"Exported {rows} rows to {args.output_csv}")
    return EXIT_OK


def cmd_stats(args) -> int:
    print_summary(args.db, args.run)
    return EXIT_OK


# ==================== ARGUMENT PARSING ====================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="main.py", description="Alternation numbers, Gale configurations "
                                     "and chromatic bounds for Kneser-type graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs=("family", "input", "graph")):
        if "family" in inputs:
            p.add_argument("--family", help="kneser:n,k | schrijver:n,k | sstable:n,k,s | pnks:n,k,s")
        if "input" in inputs:
            p.add_argument("--input", help="hypergraph JSON file")
        if "graph" in inputs:
            p.add_argument("--graph", help="kN | petersen | family spec | adjacency JSON file")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--output", help="write the report here instead of stdout")

    p = sub.add_parser("alt", help="alt / salt of a hypergraph or alt(P, sigma) of a property")
    common(p)
    p.add_argument("--mode", choices=("alt", "salt"), default="alt")
    p.add_argument("--sigma", help="identity | min | comma list of vertex names (default: min; identity with --property)")
    p.add_argument("--property", help="p1 | p2 | pnks:n,k,s | empty | all")
    p.set_defaults(func=cmd_alt)

    p = sub.add_parser("gale", help="moment-curve configuration and hemisphere verification")
    common(p)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--mode", choices=("alt", "salt"), default="salt")
    p.add_argument("--sigma", help="identity | min | comma list of vertex names")
    p.add_argument("--property", help="p1 | p2 | pnks:n,k,s | empty | all")
    p.add_argument("--verify", choices=("auto", "exact", "sampled"), default="auto")
    p.add_argument("--trials", type=int, default=10_000)
    p.set_defaults(func=cmd_gale)

    p = sub.add_parser("bounds", help="chi(KG(H)) against cd, |V|-alt and |V|-salt+1")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("multichi", help="m-fold chromatic number by homomorphism search")
    common(p, ("family", "graph"))
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    p.set_defaults(func=cmd_multichi)

    p = sub.add_parser("boxcomplex", help="box complex B(G) or B0(G)")
    common(p, ("graph",))
    p.add_argument("--variant", choices=("b", "b0"), default="b0")
    p.set_defaults(func=cmd_boxcomplex)

    p = sub.add_parser("ingest", help="store hypergraph JSON files as sweep instances")
    p.add_argument("target")
    p.add_argument("--db", default=DB_PATH)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("sweep", help="bound reports and Gale checks for a corpus")
    p.add_argument("corpus", nargs="?", default=DEFAULT_CORPUS_FILE)
    p.add_argument("--db", default=DB_PATH)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export-csv", help="CSV of a stored sweep")
    p.add_argument("output_csv")
    p.add_argument("--db", default=DB_PATH)
    p.add_argument("--run", type=int)
    p.set_defaults(func=cmd_export_csv)

    p = sub.add_parser("stats", help="summary of a stored sweep")
    p.add_argument("--db", default=DB_PATH)
    p.add_argument("--run", type=int)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as e:
        print(f"Refused: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except InvariantViolation as e:
        print(f"Invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
