"""JSON-ready report dictionaries and their plain-text renderings."""
from __future__ import annotations

from .arrangements import Arrangement, Subarrangement, essential_rank
from .freelie import exponent_polynomial, lcs_product
from .holonomy import check_decomposition, check_lcs_formula, graded_ideal, kernel_report, phi_series
from .hypersolvable import find_composition_series
from .lattice import build_lattice, exponents_from_chain, find_modular_chain

PASS, FAIL, NOT_APPLICABLE = "PASS", "FAIL", "NOT_APPLICABLE"


def lattice_report(A: Arrangement) -> dict:
    lat = build_lattice(A)
    chain = find_modular_chain(lat)
    return {
        "dim": A.dim,
        "n": A.n,
        "rank": lat.max_rank_computed,
        "flats": [{"rank": f.rank, "closure": list(f.closure)} for f in lat],
        "supersolvable": chain is not None,
        "modular_chain": chain.closures() if chain else None,
        "exponents": list(exponents_from_chain(lat, chain)) if chain else None,
    }


def hypersolvable_report(A: Arrangement) -> dict:
    series = find_composition_series(A)
    if series is None:
        return {"hypersolvable": False, "series": None, "extension_kinds": None,
                "exponents": None, "ell": None, "s": None}
    return series.to_dict()


def _classify(A: Arrangement):
    lat = build_lattice(A)
    chain = find_modular_chain(lat)
    series = find_composition_series(A)
    return lat, chain, series


def holonomy_report(A: Arrangement, N: int) -> dict:
    """phi-series plus every check the available exponents allow."""
    lat, chain, series = _classify(A)
    ideal = graded_ideal(A, N)
    report = phi_series(A, N, ideal)
    out = report.to_dict()
    exps = None
    if chain is not None:
        exps = list(exponents_from_chain(lat, chain))
    elif series is not None:
        exps = list(series.exponents)
    if exps is not None:
        lcs = check_lcs_formula(A, exps, N, report)
        out["lcs_check"] = {"lhs": lcs.detail["lhs"], "rhs": lcs.detail["rhs"], "pass": lcs.passed}
        out["decomposition_check"] = check_decomposition(A, exps, N, report).to_dict()
    else:
        out["lcs_check"] = {"lhs": lcs_product(report.phi, N).to_list(), "rhs": None, "pass": None}
        out["decomposition_check"] = None
    out["kernel_report"] = None
    if chain is not None and len(chain.flats) >= 3:
        B = Subarrangement(A, chain.flats[-2].closure)
        out["kernel_report"] = kernel_report(A, B, N, ideal).to_dict()
    return out


def verify_report(A: Arrangement, N: int) -> dict:
    lat, chain, series = _classify(A)
    report = phi_series(A, N)
    out = {
        "n": A.n, "N": N, "rank": essential_rank(A),
        "supersolvable": chain is not None,
        "hypersolvable": series is not None,
        "chain_exponents": list(exponents_from_chain(lat, chain)) if chain else None,
        "series_exponents": list(series.exponents) if series else None,
        "phi": report.phi,
        "ideal_dims": report.ideal_dims,
    }
    if chain is not None:
        exps, source = out["chain_exponents"], "supersolvable"
    elif series is not None:
        exps, source = out["series_exponents"], "hypersolvable"
    else:
        out.update(status=NOT_APPLICABLE, exponent_source=None, exponents=None,
                   lcs_check=None, decomposition_check=None)
        return out
    lcs = check_lcs_formula(A, exps, N, report)
    dec = check_decomposition(A, exps, N, report)
    out.update(
        exponent_source=source,
        exponents=exps,
        lcs_check={"lhs": lcs.detail["lhs"], "rhs": lcs.detail["rhs"], "pass": lcs.passed},
        decomposition_check=dec.to_dict(),
        status=PASS if lcs.passed and dec.passed else FAIL,
    )
    return out


def format_poly(coeffs) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        mag = abs(c)
        body = f"{mag}{mono}" if mag != 1 or not mono else mono
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {s} {b}" for s, b in terms[1:])


def render_text(command: str, rep: dict) -> str:
    lines = []
    if command in ("lattice", "supersolvable"):
        sizes = {}
        for f in rep["flats"]:
            sizes[f["rank"]] = sizes.get(f["rank"], 0) + 1
        lines.append(f"dim {rep['dim']}, {rep['n']} hyperplanes, rank {rep['rank']}")
        lines.append(f"flats per rank: {[sizes[k] for k in sorted(sizes)]} ({len(rep['flats'])} total)")
        if command == "lattice":
            for f in rep["flats"]:
                lines.append(f"  rank {f['rank']}: {f['closure']}")
        lines.append(f"supersolvable: {rep['supersolvable']}")
        if rep["modular_chain"] is not None:
            lines.append(f"modular chain: {rep['modular_chain']}")
            lines.append(f"exponents: {rep['exponents']}")
    elif command == "hypersolvable":
        lines.append(f"hypersolvable: {rep['hypersolvable']}")
        if rep["hypersolvable"]:
            lines.append(f"series: {rep['series']}")
            lines.append(f"extensions: {rep['extension_kinds']}")
            lines.append(f"exponents: {rep['exponents']}  ell={rep['ell']}  s={rep['s']}")
    elif command in ("holonomy", "verify"):
        if "status" in rep:
            lines.append(f"status: {rep['status']}")
            lines.append(f"supersolvable: {rep['supersolvable']}  hypersolvable: {rep['hypersolvable']}")
            if rep.get("exponents") is not None:
                lines.append(f"exponents ({rep['exponent_source']}): {rep['exponents']}")
        lines.append(f"phi (N={rep['N']}): {rep['phi']}")
        lines.append(f"ideal dims: {rep['ideal_dims']}")
        lcs = rep.get("lcs_check")
        if lcs:
            lines.append(f"prod (1-t^j)^phi_j = {format_poly(lcs['lhs'])}  (mod t^{rep['N'] + 1})")
            if lcs["rhs"] is not None:
                lines.append(f"prod (1-d_i t)     = {format_poly(lcs['rhs'])}")
                lines.append(f"LCS formula: {'PASS' if lcs['pass'] else 'FAIL'}")
        dec = rep.get("decomposition_check")
        if dec:
            lines.append(f"decomposition: {'PASS' if dec['pass'] else 'FAIL at degree %s' % dec['first_failure']}")
        ker = rep.get("kernel_report")
        if ker:
            lines.append(f"kernel dims {ker['kernel_dims']} (free: {ker['free']}, almost-direct: {ker['almost_direct']})")
    elif command == "deform" and rep["status"] != "OK":
        lines.append(f"status: {rep['status']}")
    elif command == "deform":
        lines.append(f"s = {rep['s']}, seed = {rep['seed']}, offsets = {rep['offsets']}")
        lines.append(f"rank-2 lattice preserved: {rep['rank2_preserved']}")
        lines.append(f"supersolvable: {rep['supersolvable']}  rank: {rep['rank']}  exponents: {rep['exponents']}")
        if rep.get("arrangement"):
            lines.append(rep["arrangement"].rstrip("\n"))
    return "\n".join(lines) + "\n"


def exponent_poly_text(exponents, N) -> str:
    return format_poly(exponent_polynomial(exponents, N).to_list())
