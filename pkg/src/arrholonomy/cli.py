"""``arr`` command line front end."""
from __future__ import annotations

import argparse
import json
import sys

from . import reports
from .arrangements import read_arrangement
from .errors import ArrangementError, DeformationFailed
from .hypersolvable import find_composition_series, verify_rank2_preserved, vertical_deformation
from .lattice import build_lattice, exponents_from_chain, find_modular_chain

COMMANDS = ("lattice", "supersolvable", "hypersolvable", "holonomy", "verify", "deform")

EXIT_OK, EXIT_USAGE, EXIT_CHECK = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arr", description="Intersection lattices and holonomy Lie algebras "
                                        "of central arrangements over Q.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file")
    p.add_argument("--max-degree", "-N", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; computations run sequentially")
    return p


def _deform(A, args) -> tuple[dict, int]:
    series = find_composition_series(A)
    if series is None:
        return {"status": "NOT_HYPERSOLVABLE"}, EXIT_CHECK
    D = vertical_deformation(A, series, args.seed)
    lat = build_lattice(D.base)
    chain = find_modular_chain(lat)
    rep = {
        "status": "OK",
        "s": D.s,
        "seed": D.seed,
        "offsets": [list(v) for v in D.offsets],
        "dim": D.base.dim,
        "rank2_preserved": verify_rank2_preserved(A, D),
        "supersolvable": chain is not None,
        "rank": lat.max_rank_computed,
        "exponents": list(exponents_from_chain(lat, chain)) if chain else None,
        "arrangement": D.base.to_text(),
    }
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(D.base.to_text())
        with open(args.output + ".json", "w", encoding="utf-8") as fh:
            json.dump(D.sidecar(), fh, indent=2)
            fh.write("\n")
        rep["arrangement"] = None
        rep["written"] = [args.output, args.output + ".json"]
    return rep, EXIT_OK


def run(args) -> tuple[dict, int]:
    A = read_arrangement(args.file)
    if args.command == "lattice":
        return reports.lattice_report(A), EXIT_OK
    if args.command == "supersolvable":
        return reports.lattice_report(A), EXIT_OK
    if args.command == "hypersolvable":
        return reports.hypersolvable_report(A), EXIT_OK
    if args.command == "holonomy":
        return reports.holonomy_report(A, args.max_degree), EXIT_OK
    if args.command == "verify":
        rep = reports.verify_report(A, args.max_degree)
        return rep, EXIT_OK if rep["status"] == reports.PASS else EXIT_CHECK
    return _deform(A, args)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_degree < 1:
        print("arr: error: --max-degree must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        rep, code = run(args)
    except OSError as exc:
        print(f"arr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DeformationFailed as exc:
        print(f"arr: DEFORMATION_FAILED: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except ArrangementError as exc:
        print(f"arr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = json.dumps(rep, indent=2) + "\n" if args.json else reports.render_text(args.command, rep)
    if args.output and args.command != "deform":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
