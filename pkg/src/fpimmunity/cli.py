"""Command-line surface.

Subcommands compute immunity for named families, user truth tables, or
symmetric value vectors, expose the matrix and Hilbert-function helpers,
and run the full verification suite.  Every number printed is produced by
a library call; the CLI only formats and compares.

Exit codes: 0 success, 1 a verification or cross-check failed, 2 bad
input, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import hilbert as hilbert_mod
from . import linalg, residue, symmetric
from .errors import CheckFailed, FpImmunityError
from .gf import is_prime
from .immunity import (brute_force_weak_mod_m, immunity, verify_mod_bounds,
                       weak_mod_m_degree)
from .ring import BooleanFunction, mod_indicator, parse_truth_table, popcount

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


# ---------------------------------------------------------------------------
# formatting

def format_poly(poly, p: int) -> str:
    """Signed monomial list in graded-lex order, balanced coefficients:
    e.g. x1x3 - x1x4 - x2x3 + x2x4."""
    if poly is None or poly.is_zero():
        return "0"
    parts = []
    for mask, coeff in poly.sorted_terms():
        c = int(coeff)
        signed = c if c <= p // 2 or p == 2 else c - p
        sign = "-" if signed < 0 else "+"
        mag = abs(signed)
        if mask == 0:
            body = str(mag)
        else:
            mon = "".join(f"x{i + 1}" for i in range(32) if mask >> i & 1)
            body = mon if mag == 1 else f"{mag}{mon}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def _emit_report(report, p: int, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_json_dict(), sort_keys=True))
    elif fmt == "tsv":
        print(f"{report.degree}\t{report.method}\t{int(report.checked)}\t"
              f"{format_poly(report.witness, p)}")
    else:
        print(f"degree: {report.degree}")
        print(f"method: {report.method}")
        print(f"checked: {report.checked}")
        if report.witness is not None:
            print(f"witness: {format_poly(report.witness, p)}")


# ---------------------------------------------------------------------------
# function sources

def _load_function(args) -> tuple[BooleanFunction, int]:
    """Resolve exactly one of --family/--table/--sym to a Boolean function."""
    sources = [s for s in ("family", "table", "sym")
               if getattr(args, s, None) is not None]
    if len(sources) != 1:
        raise FpImmunityError(
            "exactly one of --family, --table, --sym is required")
    if args.table is not None:
        with open(args.table) as fh:
            f, p_file = parse_truth_table(fh.read())
        p = args.p if args.p is not None else p_file
        return f, p
    if args.p is None:
        raise FpImmunityError("--p is required")
    if args.sym is not None:
        values = [int(v) for v in args.sym.split(",")]
        sf = symmetric.SymmetricFn.from_values(values, args.p)
        return sf.support_function(), args.p
    if args.n is None or args.q is None:
        raise FpImmunityError("--family needs --n and --q")
    f = mod_indicator(args.n, args.q)
    if args.family == "notmod":
        f = f.negate()
    elif args.family != "mod":
        raise FpImmunityError(f"unknown family {args.family!r}")
    return f, args.p


def _as_symmetric(f: BooleanFunction, p: int):
    """Weight-value vector of f if f is symmetric, else None."""
    values = [None] * (f.n + 1)
    for x in range(1 << f.n):
        w = popcount(x)
        v = f.value(x)
        if values[w] is None:
            values[w] = v
        elif values[w] != v:
            return None
    return symmetric.SymmetricFn.from_values(values, p)


# ---------------------------------------------------------------------------
# subcommands

def cmd_immunity(args) -> int:
    f, p = _load_function(args)
    if not is_prime(p):
        raise FpImmunityError(f"{p} is not prime")
    report = immunity(f, p)
    if args.cross_check:
        sf = _as_symmetric(f, p)
        if sf is None:
            raise FpImmunityError("--cross-check requires a symmetric function")
        fast = symmetric.symmetric_immunity(sf, with_witness=False)
        if fast.degree != report.degree:
            print(f"cross-check mismatch: general={report.degree} "
                  f"symmetric={fast.degree}", file=sys.stderr)
            return EXIT_CHECK_FAILED
    _emit_report(report, p, args.format)
    return EXIT_OK


def cmd_symmetric(args) -> int:
    if args.sym is None:
        raise FpImmunityError("--sym is required")
    values = [int(v) for v in args.sym.split(",")]
    if not is_prime(args.p):
        raise FpImmunityError(f"{args.p} is not prime")
    sf = symmetric.SymmetricFn.from_values(values, args.p)
    report = symmetric.symmetric_immunity(sf)
    _emit_report(report, args.p, args.format)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    f, p = _load_function(args)
    if not is_prime(p):
        raise FpImmunityError(f"{p} is not prime")
    S = hilbert_mod.PointSet.zero_set(f)
    rows = []
    for m in range(f.n + 1):
        h = hilbert_mod.hilbert_function(S, m, p)
        rows.append({"m": m, "h_m": h,
                     "binom_sum": hilbert_mod.binom_sum(f.n, m),
                     "distance_bound": 2 * h - len(S)})
    if args.format == "json":
        print(json.dumps(rows, sort_keys=True))
    else:
        print("m\th_m\tbinom_sum\tdistance_bound")
        for row in rows:
            print(f"{row['m']}\t{row['h_m']}\t{row['binom_sum']}\t"
                  f"{row['distance_bound']}")
    return EXIT_OK


def cmd_residue(args) -> int:
    report = residue.verify_residue_immunity(args.n, args.q, args.basis)
    print(json.dumps(report.to_json_dict(), sort_keys=True))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _parse_matrix(text: str, p: int) -> linalg.MatrixGF:
    rows = [[int(v) for v in row.split(",")] for row in text.split(";")]
    return linalg.matrix(rows, p)


def cmd_matrix(args) -> int:
    if not is_prime(args.p):
        raise FpImmunityError(f"{args.p} is not prime")
    op = args.op
    if op == "pascal":
        M = linalg.pascal_matrix(args.p)
        for row in M.data:
            print("\t".join(str(int(v)) for v in row))
        return EXIT_OK
    if args.entries is None:
        raise FpImmunityError("--entries is required")
    A = _parse_matrix(args.entries, args.p)
    if op == "rank":
        print(A.rank())
    elif op == "det":
        print(A.det())
    elif op == "strong":
        print("true" if linalg.is_strong_nondegenerate(A) else "false")
    elif op == "weak":
        print("true" if linalg.is_weak_nondegenerate(A) else "false")
    elif op == "tensor":
        if args.entries2 is None:
            raise FpImmunityError("tensor needs --entries2")
        B = _parse_matrix(args.entries2, args.p)
        for row in linalg.tensor(A, B).data:
            print("\t".join(str(int(v)) for v in row))
    else:
        raise FpImmunityError(f"unknown matrix op {op!r}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify driver

def _check_mod_bounds(params):
    n, q, p, fault = params
    if fault:
        chi = mod_indicator(n, q)
        table = list(chi.table)
        table[0] ^= 1
        bad = BooleanFunction(n, table)
        measured = immunity(bad.negate(), p).degree
        formula = (n + q - 1) // q
        if measured != formula:
            raise CheckFailed(
                f"complement immunity {measured} != floor((n+q-1)/q)={formula} "
                f"at n={n}, q={q}, p={p}")
        return
    verify_mod_bounds(n, q, p)


def _check_symmetric_fast_path(params):
    n, p, seed = params
    rng = np.random.RandomState(seed)
    for _ in range(20):
        values = rng.randint(0, p, size=n + 1)
        sf = symmetric.SymmetricFn.from_values([int(v) for v in values], p)
        if sf.is_zero():
            continue
        fast = symmetric.symmetric_immunity(sf, with_witness=False).degree
        slow = immunity(sf.support_function(), p).degree
        if fast != slow:
            raise CheckFailed(
                f"symmetric fast path {fast} != general path {slow} "
                f"for values {list(values)} over F_{p}")


def _check_psi_basis(params):
    p, q, d, a = params
    M = symmetric.psi_matrix(d, [a + t * q for t in range(d)], p)
    want_det = pow(q, d * (d - 1) // 2, p)
    if M.rank() != d or M.det() != want_det:
        raise CheckFailed(
            f"binomial progression matrix not a basis with det q^(d(d-1)/2) "
            f"at p={p}, q={q}, d={d}, a={a}")


def _check_composite_reduction(params):
    n, m, seed = params
    rng = np.random.RandomState(seed)
    tables = ([list(map(int, np.binary_repr(t, 1 << n)))
               for t in range(1 << (1 << n))] if n == 2 else
              [list(rng.randint(0, 2, size=1 << n)) for _ in range(20)])
    for table in tables:
        f = BooleanFunction(n, [int(v) for v in table])
        if not any(f.table):
            continue
        oracle = brute_force_weak_mod_m(f, m, n)
        fast, _ = weak_mod_m_degree(f, m)
        if oracle != fast:
            raise CheckFailed(
                f"composite-modulus reduction mismatch oracle={oracle} "
                f"min-over-primes={fast} for m={m}, table={f.table}")


def _check_hilbert_saturation(params):
    n, q, p = params
    S = hilbert_mod.PointSet.zero_set(mod_indicator(n, q))
    for m in range((n + 1) // 2):
        h = hilbert_mod.hilbert_function(S, m, p)
        full = hilbert_mod.binom_sum(n, m)
        if h != full:
            raise CheckFailed(
                f"Hilbert function {h} below full dimension {full} at "
                f"n={n}, q={q}, p={p}, m={m}")


def _check_distance_bound(params):
    n, d, seed = params
    rng = np.random.RandomState(seed)
    for _ in range(20):
        f = BooleanFunction(n, [int(v) for v in rng.randint(0, 2, size=1 << n)])
        oracle = hilbert_mod.brute_force_min_distance(f, d, 2)
        bound = hilbert_mod.smolensky_bound(f, d, 2)
        if oracle < bound:
            raise CheckFailed(
                f"exhaustive min distance {oracle} below Hilbert bound "
                f"{bound} at n={n}, d={d}, table={f.table}")


def _check_residue(params):
    n, q, basis = params
    report = residue.verify_residue_immunity(n, q, basis)
    if not report.passed:
        raise CheckFailed(
            f"residue complement immunity {report.measured_immunity} not above "
            f"counting bound {report.bound_d} at n={n}, q={q}, basis={basis}")


def _check_transform_roundtrip(params):
    n, p, seed = params
    rng = np.random.RandomState(seed)
    for _ in range(20):
        v = [int(x) for x in rng.randint(0, p, size=n + 1)]
        back = symmetric.values_from_coeffs(symmetric.coeffs_from_values(v, p), p)
        if tuple(v) != back:
            raise CheckFailed(
                f"value/coefficient transform round trip failed at n={n}, "
                f"p={p}: {v} -> {list(back)}")


def _check_reflex_duality(params):
    n, p, seed = params
    rng = np.random.RandomState(seed)
    for _ in range(20):
        S = [w for w in range(n + 1) if rng.randint(0, 2)]
        d = int(rng.randint(1, n + 2))
        a = symmetric.reflex_dual_exists(S, d, n, p, "value_support")
        b = symmetric.reflex_dual_exists(S, d, n, p, "monomial_support")
        if a != b:
            raise CheckFailed(
                f"reflexive duality directions disagree at n={n}, p={p}, "
                f"S={S}, d={d}: {a} vs {b}")


def _check_restriction_bound(params):
    n, q, p = params
    symmetric.restriction_bound_check(n, q, p)


_CHECKS = {
    "complement-degree-formula": _check_mod_bounds,
    "symmetric-fast-path": _check_symmetric_fast_path,
    "binomial-progression-basis": _check_psi_basis,
    "composite-modulus-reduction": _check_composite_reduction,
    "hilbert-full-rank-below-half": _check_hilbert_saturation,
    "distance-lower-bound": _check_distance_bound,
    "residue-counting-bound": _check_residue,
    "transform-round-trip": _check_transform_roundtrip,
    "reflexive-duality": _check_reflex_duality,
    "restriction-lower-bound": _check_restriction_bound,
}


def _build_cells(max_n: int, primes, qs, fault: bool):
    """Ordered (check name, params) cells for the verify grid."""
    cells = []
    if fault:
        # negative control: one flipped truth-table bit must be caught
        cells.append(("complement-degree-formula", (4, 3, 2, True)))
    for n in range(2, max_n + 1):
        for q in qs:
            for p in primes:
                if q % p == 0:
                    continue
                cells.append(("complement-degree-formula", (n, q, p, False)))
    for n in range(2, min(max_n, 8) + 1):
        for p in primes:
            cells.append(("symmetric-fast-path", (n, p, 1000 + n)))
    for p in primes:
        for q in qs:
            if q % p == 0:
                continue
            for d in range(1, 6):
                cells.append(("binomial-progression-basis", (p, q, d, 1)))
    for n in (2, 3):
        if n <= max_n:
            for m in (6, 10, 15):
                cells.append(("composite-modulus-reduction", (n, m, 2000 + n)))
    for n in range(2, max_n + 1):
        for q in qs:
            for p in primes:
                if q % p == 0:
                    continue
                cells.append(("hilbert-full-rank-below-half", (n, q, p)))
    if max_n >= 4:
        for d in (0, 1):
            cells.append(("distance-lower-bound", (4, d, 3000 + d)))
    for n, q in ((4, 3), (4, 5), (6, 3), (6, 7)):
        if n <= max_n:
            for basis in ("polynomial", "random:1"):
                cells.append(("residue-counting-bound", (n, q, basis)))
    for n in range(2, max_n + 1):
        for p in primes:
            cells.append(("transform-round-trip", (n, p, 4000 + n)))
            cells.append(("reflexive-duality", (n, p, 5000 + n)))
    for n in range(4, max_n + 1):
        for q in qs:
            for p in primes:
                if q % p == 0:
                    continue
                cells.append(("restriction-lower-bound", (n, q, p)))
    return cells


def _run_cell(cell):
    name, params = cell
    try:
        _CHECKS[name](params)
        return name, params, True, ""
    except CheckFailed as exc:
        return name, params, False, str(exc)


def cmd_verify(args) -> int:
    primes = tuple(int(p) for p in args.primes.split(","))
    qs = tuple(int(q) for q in args.qs.split(","))
    for p in primes:
        if not is_prime(p):
            raise FpImmunityError(f"{p} is not prime")
    cells = _build_cells(args.max_n, primes, qs, args.inject_fault)
    jobs = args.jobs
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, cells, chunksize=4))
    else:
        results = [_run_cell(cell) for cell in cells]
    failures = 0
    for name, params, ok, msg in results:
        shown = tuple(x for x in params if not isinstance(x, bool))
        print(f"{'PASS' if ok else 'FAIL'}\t{name}\t{shown}")
        if not ok:
            failures += 1
            print(f"\t{msg}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpimmunity",
        description="Immunity (weak p-degree) of Boolean functions over "
                    "prime fields")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(sp):
        sp.add_argument("--family", choices=["mod", "notmod"],
                        help="built-in family (needs --n and --q)")
        sp.add_argument("--table", help="truth-table file: 'n p' then 2^n bits")
        sp.add_argument("--sym", help="symmetric weight values v0,v1,...,vn")
        sp.add_argument("--n", type=int)
        sp.add_argument("--q", type=int)
        sp.add_argument("--p", type=int)
        sp.add_argument("--format", choices=["json", "tsv", "text"],
                        default="text")

    sp = sub.add_parser("immunity", help="minimum ideal-member degree")
    add_source(sp)
    sp.add_argument("--cross-check", action="store_true",
                    help="also run the symmetric fast path and compare")

    sp = sub.add_parser("symmetric", help="fast path for symmetric functions")
    sp.add_argument("--sym", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--format", choices=["json", "tsv", "text"],
                    default="text")

    sp = sub.add_parser("hilbert",
                        help="Hilbert function table of the zero set")
    add_source(sp)

    sp = sub.add_parser("residue", help="residue-character immunity bound")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--basis", default="polynomial",
                    help="'polynomial' or 'random:SEED'")

    sp = sub.add_parser("matrix", help="matrix helpers over F_p")
    sp.add_argument("op", choices=["rank", "det", "strong", "weak",
                                   "pascal", "tensor"])
    sp.add_argument("--entries", help="rows 'a,b;c,d'")
    sp.add_argument("--entries2", help="second matrix for tensor")
    sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("verify", help="run the verification suite")
    sp.add_argument("--max-n", type=int, default=10)
    sp.add_argument("--primes", default="2,3,5")
    sp.add_argument("--qs", default="2,3,4,5,6,7")
    sp.add_argument("--jobs", type=int,
                    default=int(os.environ.get("IMMUNITY_JOBS", "1")))
    sp.add_argument("--inject-fault", action="store_true",
                    help=argparse.SUPPRESS)
    return parser


_DISPATCH = {
    "immunity": cmd_immunity,
    "symmetric": cmd_symmetric,
    "hilbert": cmd_hilbert,
    "residue": cmd_residue,
    "matrix": cmd_matrix,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except CheckFailed as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (FpImmunityError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
