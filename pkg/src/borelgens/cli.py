"""``borelgens`` command line.

Exit codes: 0 success, 1 internal disagreement (``--method both``, ``--verify``),
2 syntax error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, TextIO

from . import betti as _betti
from . import oracle
from .catalan import catalan_diagram
from .errors import DomainError, InternalError, ParseError
from .grammar import format_ideal, format_monomial, parse_expr, parse_monomial, var_name
from .ideal import BorelIdeal, _BorelBase, codim_pdim, membership, truncate_ideal
from .monomial import Monomial
from .primes import alexander_dual, ass_socle, ass_trunc, ass_trunc_trace
from .series import BiPoly, RationalBiSeries, format_poly
from .stanley import hilbert_series, multiplicity, stanley_decomposition, stanley_depth_depth

SCHEMA = "borelgens/1"

EXIT_OK, EXIT_INTERNAL, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3


class Outcome:
    """What a verb produced: plain lines, a JSON payload, and an optional oracle check."""

    def __init__(self, lines: list[str], payload: dict, check: Callable[[], bool] | None = None):
        self.lines = lines
        self.payload = payload
        self.check = check


# --- rendering helpers ------------------------------------------------------


def _ideal_payload(B: _BorelBase) -> dict:
    return {
        "ideal": format_ideal(B),
        "kind": "sfborel" if B.squarefree else "borel",
        "nvars": B.nvars,
        "bgens": [format_monomial(m) for m in B.bgens],
    }


def _term(c: int, d: int, e: int) -> str:
    head = format_poly([0] * d + [c])
    if e == 0:
        return head
    return f"{head}/(1-t)" if e == 1 else f"{head}/(1-t)^{e}"


def _normal_form(h, dim: int) -> str:
    body = format_poly(h)
    if dim == 0:
        return body
    return f"{body} / (1-t)" if dim == 1 else f"{body} / (1-t)^{dim}"


def _columns(rows: list[list[str]]) -> list[str]:
    """Right-justify ragged rows into aligned columns."""
    widths: list[int] = []
    for r in rows:
        for k, cell in enumerate(r):
            if k == len(widths):
                widths.append(0)
            widths[k] = max(widths[k], len(cell))
    return [" ".join(cell.rjust(widths[k]) for k, cell in enumerate(r)).rstrip() for r in rows]


def render_betti(table: _betti.BettiTable) -> list[str]:
    totals = table.totals()
    rows = table.rows()
    cols = len(totals)
    grid = [[""] + [str(i) for i in range(cols)], ["total:"] + [str(v) for v in totals]]
    # empty rows between the first and last are kept, as Macaulay2 prints them
    for r in range(min(rows), max(rows) + 1):
        values = rows.get(r, [0] * cols)
        grid.append([f"{r}:"] + [str(v) if v else "." for v in values])
    return _columns(grid)


def _u_poly(row: dict[int, int]) -> str:
    if not row:
        return "0"
    top = max(row)
    return format_poly([row.get(j, 0) for j in range(top + 1)], "u")


# --- verbs ------------------------------------------------------------------


def _as_ideal(args, expr: str | None = None) -> _BorelBase:
    value = parse_expr(expr if expr is not None else args.expr, args.nvars)
    if isinstance(value, Monomial):
        raise DomainError("expected an ideal such as borel{a*b,c^2} or sfborel{a*c}")
    return value


def _as_borel(args) -> BorelIdeal:
    B = _as_ideal(args)
    if B.squarefree:
        raise DomainError(f"'{args.verb}' needs a Borel ideal, not a squarefree one")
    return B


def _oracle_hilbert_cutoff(B) -> int:
    return max(8, 2 * B.maxdeg)


def cmd_bgens(args) -> Outcome:
    B = _as_ideal(args)
    return Outcome([format_ideal(B)], _ideal_payload(B))


def cmd_gens(args) -> Outcome:
    B = _as_ideal(args)
    gens = B.min_gens
    names = [format_monomial(m) for m in gens]

    def check():
        return sorted(oracle.expand(B).generators) == sorted(m.exponents for m in gens)

    return Outcome(names, {"count": len(names), "gens": names}, check)


def cmd_member(args) -> Outcome:
    B = _as_ideal(args)
    mu = parse_monomial(args.monomial, B.nvars)
    inside = membership(B, mu)

    def check():
        return oracle.naive_membership(oracle.expand(B), mu) == inside

    return Outcome(["true" if inside else "false"], {"monomial": format_monomial(mu), "member": inside}, check)


def cmd_trunc(args) -> Outcome:
    B = _as_borel(args)
    T = truncate_ideal(B, args.degree)

    def check():
        naive = oracle.naive_truncation(oracle.expand(B), args.degree, B.maxdeg)
        return sorted(naive.generators) == sorted(m.exponents for m in T.min_gens)

    return Outcome([format_ideal(T)], {"degree": args.degree, **_ideal_payload(T)}, check)


def cmd_ass(args) -> Outcome:
    B = _as_borel(args)
    results = {}
    if args.method in ("socle", "both"):
        results["socle"] = ass_socle(B)
    if args.method in ("trunc", "both"):
        results["trunc"] = ass_trunc(B)
    if args.method == "both" and results["socle"] != results["trunc"]:
        raise InternalError(f"socle method gave {results['socle']}, truncation method gave {results['trunc']}")
    primes = next(iter(results.values()))
    lines = [" ".join(f"P{p}" for p in primes)]
    payload: dict = {"method": args.method, "primes": primes}
    if args.trace:
        trace = ass_trunc_trace(B)
        for i, T, ps in trace:
            found = " ".join(f"P{p}" for p in ps) or "-"
            lines.append(f"trunc_{i}: {format_ideal(T)} -> {found}")
        payload["trace"] = [{"degree": i, "ideal": format_ideal(T), "primes": ps} for i, T, ps in trace]

    def check():
        return oracle.naive_ass(B) == primes

    return Outcome(lines, payload, check)


def cmd_dual(args) -> Outcome:
    B = _as_ideal(args)
    if not B.squarefree:
        raise DomainError("Alexander duals need a squarefree Borel ideal (sfborel{...})")
    dual = alexander_dual(B)

    def check():
        covers = oracle.minimal_vertex_covers(oracle.expand(B))
        return sorted(tuple(sorted(c)) for c in covers) == sorted(m.support for m in dual.min_gens)

    return Outcome([format_ideal(dual)], _ideal_payload(dual), check)


def cmd_stanley(args) -> Outcome:
    B = _as_borel(args)
    D = stanley_decomposition(B)
    n = B.nvars
    lines = [
        f"{format_monomial(s.base)} : [{','.join(var_name(j, n) for j in s.vars)}]" for s in D
    ]
    payload = {
        "count": len(D),
        "summands": [{"base": format_monomial(s.base), "vars": list(s.vars)} for s in D],
    }

    def check():
        cutoff = _oracle_hilbert_cutoff(B)
        std = oracle.std_monomials_upto(oracle.expand(B), cutoff)
        return _covered_once(D, std, n, cutoff)

    return Outcome(lines, payload, check)


def _covered_once(D, std: set, n: int, cutoff: int) -> bool:
    """Every standard monomial up to ``cutoff`` lies in exactly one summand, and nothing else does."""
    seen: dict[tuple[int, ...], int] = {}
    for s in D:
        base = s.base.exponents
        left = cutoff - s.base.degree
        if left < 0:
            continue
        for k in range(left + 1):
            for e in oracle.monomials_of_degree(len(s.vars), k):
                mono = list(base)
                for j, power in zip(s.vars, e):
                    mono[j - 1] += power
                key = tuple(mono)
                seen[key] = seen.get(key, 0) + 1
    return set(seen) == std and all(v == 1 for v in seen.values())


def cmd_hilbert(args) -> Outcome:
    B = _as_borel(args)
    H = hilbert_series(B)
    terms = " + ".join(_term(c, d, e) for c, d, e in H.terms)
    normal = _normal_form(H.h, H.dim)
    lines = [normal] if args.h_poly else [f"HS: {terms}", f"h: {normal}"]
    payload: dict = {
        "terms": [{"coefficient": c, "degree": d, "pole": e} for c, d, e in H.terms],
        "h": list(H.h),
        "dim": H.dim,
    }
    if args.values is not None:
        vals = H.values(args.values)
        lines.append("values: " + " ".join(map(str, vals)))
        payload["values"] = vals

    def check():
        cutoff = max(_oracle_hilbert_cutoff(B), args.values or 0)
        I = oracle.expand(B)
        return H.values(cutoff) == [oracle.naive_std_count(I, t) for t in range(cutoff + 1)]

    return Outcome(lines, payload, check)


def cmd_mult(args) -> Outcome:
    B = _as_borel(args)
    e = multiplicity(B)

    def check():
        # (dim-1)-th difference of the Hilbert function in a degree past all generators
        dim = B.nvars - codim_pdim(B)[0]
        I = oracle.expand(B)
        if dim == 0:
            return e == sum(oracle.naive_std_count(I, t) for t in range(B.maxdeg + 1))
        from math import comb

        top = B.maxdeg + dim + 1
        diff = sum((-1) ** k * comb(dim - 1, k) * oracle.naive_std_count(I, top - k) for k in range(dim))
        return diff == e

    return Outcome([str(e)], {"multiplicity": e}, check)


def cmd_depth(args) -> Outcome:
    B = _as_borel(args)
    sdepth, depth = stanley_depth_depth(B)
    codim, pdim = codim_pdim(B)

    def check():
        return B.nvars - max(oracle.naive_ass(B)) == depth

    return Outcome(
        [f"sdepth={sdepth} depth={depth} codim={codim} pdim={pdim}"],
        {"sdepth": sdepth, "depth": depth, "codim": codim, "pdim": pdim},
        check,
    )


def cmd_catalan(args) -> Outcome:
    m = parse_monomial(args.monomial, args.nvars)
    C = catalan_diagram(m)
    lines = _columns([[str(v) for v in row] for row in C.rows])
    lines.append("w: " + " ".join(map(str, C.bottom_row)))

    def check():
        gens = oracle.naive_borel_closure([m.exponents], m.n)
        top = m.max_index
        counts = [0] * top
        for g in gens:
            counts[max(k for k, e in enumerate(g) if e)] += 1
        return tuple(counts) == C.bottom_row

    payload = {"shape": format_monomial(m), "rows": [list(r) for r in C.rows], "w": list(C.bottom_row)}
    return Outcome(lines, payload, check)


def cmd_betti(args) -> Outcome:
    B = _as_ideal(args)
    tables = {}
    if args.method in ("ek", "both"):
        tables["ek"] = _betti.betti_ek(B)
    if args.method in ("ie", "both"):
        if B.squarefree:
            raise DomainError("the inclusion-exclusion method is for Borel ideals only")
        tables["ie"] = _betti.betti_ie(B)
    if args.method == "both" and tables["ek"].entries != tables["ie"].entries:
        raise InternalError("Eliahou-Kervaire and inclusion-exclusion Betti tables differ")
    table = next(iter(tables.values()))
    shown = table.quotient() if args.quotient else table
    payload = {
        "kind": shown.kind,
        "method": args.method,
        "totals": shown.totals(),
        "entries": [[i, j, v] for (i, j), v in shown.entries.items()],
    }

    def check():
        # the alternating sum of S/B's table over (1-t)^n must reproduce the Hilbert function
        from math import comb

        k_poly = table.quotient().alternating_sum()
        n = B.nvars
        cutoff = _oracle_hilbert_cutoff(B)
        I = oracle.expand(B)
        for t in range(cutoff + 1):
            from_betti = sum(c * comb(t - j + n - 1, n - 1) for j, c in enumerate(k_poly) if j <= t)
            if from_betti != oracle.naive_std_count(I, t):
                return False
        return True

    return Outcome(render_betti(shown), payload, check)


def cmd_poincare(args) -> Outcome:
    B = _as_ideal(args)
    wants_sqf = args.series in ("sqB", "sqk", "ext")
    if wants_sqf != B.squarefree:
        kind = "a squarefree Borel ideal" if wants_sqf else "a Borel ideal"
        raise DomainError(f"series {args.series!r} needs {kind}")
    if args.series in ("B", "sqB"):
        series = _betti.poincare_ideal(B)
        lines = [f"P(t,u) = {series}"]
        payload: dict = {"series": args.series, "numerator": series.to_json(), "denominator": None}
        expansion = series
    else:
        rational = _betti.poincare_exterior(B) if args.series == "ext" else _betti.poincare_residue_field(B)
        lines = [f"numerator: {rational.numerator}", f"denominator: {rational.denominator}"]
        payload = {"series": args.series, **rational.to_json()}
        expansion = rational.expand(args.expand if args.expand is not None else 0)
    if args.expand is not None:
        for i in range(args.expand + 1):
            lines.append(f"t^{i}: {_u_poly(expansion.t_coefficient(i))}")
        at1 = expansion.at_u1()[: args.expand + 1]
        at1 += [0] * (args.expand + 1 - len(at1))
        lines.append("u=1: " + " ".join(map(str, at1)))
        payload["expansion"] = [[i, j, c] for (i, j), c in expansion.coeffs.items() if i <= args.expand]
        payload["at_u1"] = at1
    return Outcome(lines, payload)


def cmd_ppt(args) -> Outcome:
    table = _betti.ppt_numbers(args.ell)
    row = [table[(args.ell, i)] for i in range(args.ell + 1)]
    lines = [f"a({args.ell},i): " + " ".join(map(str, row)), f"total: {sum(row)}"]
    return Outcome(lines, {"ell": args.ell, "row": row, "total": sum(row)})


COMMANDS = {
    "bgens": cmd_bgens,
    "gens": cmd_gens,
    "member": cmd_member,
    "trunc": cmd_trunc,
    "ass": cmd_ass,
    "dual": cmd_dual,
    "stanley": cmd_stanley,
    "hilbert": cmd_hilbert,
    "mult": cmd_mult,
    "catalan": cmd_catalan,
    "betti": cmd_betti,
    "poincare": cmd_poincare,
    "ppt": cmd_ppt,
    "depth": cmd_depth,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--nvars", type=int, help="number of variables (alternative to @n)")
    common.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")

    parser = argparse.ArgumentParser(prog="borelgens", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name: str, help_: str, expr: bool = True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if expr:
            p.add_argument("expr", help='ideal, e.g. "borel{a*d*e,c^4}@5"')
        return p

    verb("bgens", "minimal Borel generators")
    verb("gens", "minimal monomial generators")
    verb("member", "ideal membership").add_argument("monomial")
    verb("trunc", "d-truncation").add_argument("degree", type=int)
    p = verb("ass", "associated primes")
    p.add_argument("--method", choices=["socle", "trunc", "both"], default="both")
    p.add_argument("--trace", action="store_true", help="show the truncations examined")
    verb("dual", "Alexander dual of a squarefree Borel ideal")
    verb("stanley", "Stanley decomposition of S/B")
    p = verb("hilbert", "Hilbert series of S/B")
    p.add_argument("--values", type=int, metavar="N", help="also print dim (S/B)_t for t = 0..N")
    p.add_argument("--h-poly", action="store_true", help="print only h(t) / (1-t)^dim")
    verb("mult", "multiplicity of S/B")
    verb("catalan", "Catalan diagram of a monomial", expr=False).add_argument("monomial")
    p = verb("betti", "graded Betti numbers")
    p.add_argument("--method", choices=["ek", "ie", "both"], default="ek")
    p.add_argument("--quotient", action="store_true", help="table of S/B instead of B")
    p = verb("poincare", "Poincare series")
    p.add_argument("--series", choices=["B", "k", "sqB", "sqk", "ext"], default="B")
    p.add_argument("--expand", type=int, metavar="D", help="expand up to homological degree D")
    verb("ppt", "pointed pseudo-triangulation numbers a(l, i)", expr=False).add_argument("ell", type=int)
    verb("depth", "Stanley depth, depth, codim and pdim")
    return parser


def _fail(err: TextIO, code: int, message: str) -> int:
    print(f"error: {message}", file=err)
    return code


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        start = time.perf_counter()
        outcome = COMMANDS[args.verb](args)
        fast = time.perf_counter() - start
        verify = None
        if args.verify:
            if outcome.check is None:
                verify = {"status": "skipped"}
                print(f"verify: skipped (no oracle for '{args.verb}')", file=err)
            else:
                start = time.perf_counter()
                ok = outcome.check()
                slow = time.perf_counter() - start
                verify = {"status": "ok" if ok else "mismatch", "fast_seconds": fast, "oracle_seconds": slow}
                print(f"verify: {verify['status']} (fast {fast:.4f}s, oracle {slow:.4f}s)", file=err)
                if not ok:
                    raise InternalError("fast path and oracle disagree")
    except ParseError as exc:
        return _fail(err, EXIT_PARSE, str(exc))
    except InternalError as exc:
        return _fail(err, EXIT_INTERNAL, str(exc))
    except (DomainError, ValueError) as exc:
        return _fail(err, EXIT_DOMAIN, str(exc))
    if args.json:
        doc = {"schema": SCHEMA, "command": args.verb, "result": outcome.payload}
        if verify is not None:
            doc["verify"] = verify
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        for line in outcome.lines:
            print(line, file=out)
    return EXIT_OK


def run() -> None:
    sys.exit(main())
