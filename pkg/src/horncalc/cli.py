"""Command-line entry point.

Exit codes: 0 success (and mathematically "true" verdicts), 1 mathematical
"false"/violated verdicts (so shell pipelines can branch on them), 2 usage
errors including malformed JSON payloads, 3 internal assertion failures.

All output is deterministic for a fixed argv and --seed: JSON objects are
emitted with sorted keys and every randomized routine derives its streams
from the master seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import rng as rngmod
from .errors import BudgetError, DomainError, ShapeError
from .fields import DEFAULT_PRIME, QQ, SQRT5, PrimeField, field_from_tag, is_prime
from .flags import Flag, SubspaceBasis, position, sample_cell_point
from .hn import DEFAULT_SUBSPACE_BUDGET, hn_minimizer_exhaustive
from .horn import HornTable, horn0, horn_classes, horn_member
from .kirwan import kirwan_check, kirwan_inequality_set, lr_nonvanishing, tuple_from_weights
from .matrices import Mat, random_invertible
from .subsets import CardSubset, PositionTuple, Weight
from .tables import (
    APPENDIX_A_KEYS,
    APPENDIX_B,
    appendix_a_tuple,
    appendix_b_closure,
    two_point_flags,
    two_point_subspaces,
    two_point_tuple,
)
from .tangent import certify_intersecting, delta_determinant
from .variational import DEFAULT_TOLERANCE, variational_check

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class _UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"malformed JSON in {what} at position {exc.pos}: {exc.msg}") from exc


def _tuple_from_args(args, what: str = "--tuple") -> PositionTuple:
    lists = _parse_json(args.tuple, what)
    try:
        return PositionTuple.from_lists(args.n, lists)
    except (DomainError, ShapeError, TypeError) as exc:
        raise _UsageError(f"bad {what}: {exc}") from exc


def _field_from_args(args, default="rational"):
    prime = getattr(args, "prime", None)
    name = getattr(args, "field", None)
    if prime is not None:
        if not is_prime(prime):
            raise _UsageError(f"--prime {prime} is not prime")
        return PrimeField(prime)
    if name is None:
        name = default
    if name == "rational":
        return QQ
    if name == "sqrt5":
        return SQRT5
    if name == "prime":
        return PrimeField(DEFAULT_PRIME)
    raise _UsageError(f"unknown field {name!r}")


def _load_matrix_file(path: str) -> tuple[object, Mat]:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _UsageError(f"malformed JSON in {path} at position {exc.pos}: {exc.msg}") from exc
    try:
        field = field_from_tag(obj["field"])
        entries = [[field.parse(x) for x in row] for row in obj["entries"]]
        ncols = len(entries[0]) if entries else 0
        return field, Mat(field, entries, ncols)
    except (KeyError, DomainError, ShapeError, ValueError) as exc:
        raise _UsageError(f"bad matrix file {path}: {exc}") from exc


def _fraction_json(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def _format_subset(elems) -> str:
    return "{" + ",".join(str(x) for x in elems) + "}"


# ---------------------------------------------------------------- horn


def _horn_classes_parallel(r: int, n: int, s: int, cache: HornTable, jobs: int):
    """Membership queries as a parallel map over a completed table.

    The lower levels are built single-threaded first; afterwards the table
    is read-only, so chunks of candidate tuples can be filtered
    concurrently.  The merged output keeps the canonical order.
    """
    import itertools

    from .subsets import enumerate_subsets

    for d in range(1, r):
        cache.zero_slice(d, r, s)
    candidates = [
        PositionTuple(parts)
        for parts in itertools.product(enumerate_subsets(r, n), repeat=s)
    ]
    chunks = [candidates[i::jobs] for i in range(jobs)]

    def filter_chunk(chunk):
        return [(t, t.edim()) for t in chunk if horn_member(t, cache).member]

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        results = pool.map(filter_chunk, chunks)
    seen: dict[PositionTuple, int] = {}
    for part in results:
        for tup, e in part:
            seen.setdefault(tup.canonical(), e)
    return sorted(seen.items(), key=lambda item: item[0].sort_key())


def _cmd_horn_enumerate(args) -> int:
    cache = HornTable()
    if args.jobs and args.jobs > 1:
        classes = _horn_classes_parallel(args.r, args.n, args.s, cache, args.jobs)
    else:
        classes = horn_classes(args.r, args.n, args.s, cache)
    rows = [
        {"tuple": [list(p.elements) for p in tup.parts], "edim": e}
        for tup, e in classes
    ]
    if args.format == "json":
        _emit({"r": args.r, "n": args.n, "s": args.s, "classes": rows})
    elif args.format == "csv":
        lines = ["r,n," + ",".join(f"J{k + 1}" for k in range(args.s)) + ",edim"]
        for row in rows:
            cells = [str(args.r), str(args.n)]
            cells += [_format_subset(p) for p in row["tuple"]]
            cells.append(str(row["edim"]))
            lines.append(",".join(cells))
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(_render_table(args.r, args.n, args.s, rows, args.format) + "\n")
    return EXIT_OK


def _render_table(r: int, n: int, s: int, rows: list[dict], fmt: str) -> str:
    if fmt == "tex":
        lines = [f"% Horn({r},{n},{s})", "\\begin{tabular}{" + "c" * (s + 1) + "}"]
        lines.append(" & ".join(f"$J_{k + 1}$" for k in range(s)) + " & edim \\\\")
        for row in rows:
            cells = ["\\{" + ",".join(map(str, p)) + "\\}" for p in row["tuple"]]
            lines.append(" & ".join(cells + [str(row["edim"])]) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    lines = [f"Horn({r},{n},{s}) classes up to permutation"]
    for row in rows:
        cells = "  ".join(f"{_format_subset(p):<12}" for p in row["tuple"])
        lines.append(f"  {cells}edim {row['edim']}")
    return "\n".join(lines)


def _cmd_horn_check(args) -> int:
    tup = _tuple_from_args(args)
    verdict = horn_member(tup, HornTable())
    _emit({"tuple": tup.to_json(), **verdict.to_json()})
    return EXIT_OK if verdict.member else EXIT_FALSE


def _cmd_horn0(args) -> int:
    cache = HornTable()
    tuples = horn0(args.d, args.r, args.s, cache)
    _emit(
        {
            "d": args.d,
            "r": args.r,
            "s": args.s,
            "tuples": [[list(p.elements) for p in t.parts] for t in tuples],
        }
    )
    return EXIT_OK


# ---------------------------------------------------------------- intersect


def _cmd_intersect_certify(args) -> int:
    tup = _tuple_from_args(args)
    field = _field_from_args(args, default="prime")
    verdict = certify_intersecting(tup, field, args.samples, rngmod.spawn(args.seed, 0))
    _emit({"tuple": tup.to_json(), "seed": args.seed, **verdict.to_json()})
    return EXIT_OK if verdict.intersecting else EXIT_FALSE


# ---------------------------------------------------------------- kirwan / lr


def _cmd_kirwan_ineqs(args) -> int:
    cache = HornTable()
    ineqs = kirwan_inequality_set(args.r, args.s, cache)
    rows = [{"d": d, "parts": [list(p.elements) for p in j.parts]} for d, j in ineqs]
    if args.format == "json":
        _emit({"r": args.r, "s": args.s, "count": len(rows), "inequalities": rows})
    elif args.format == "csv":
        lines = ["d," + ",".join(f"J{k + 1}" for k in range(args.s))]
        for row in rows:
            lines.append(",".join([str(row["d"])] + [_format_subset(p) for p in row["parts"]]))
        sys.stdout.write("\n".join(lines) + "\n")
    elif args.format == "tex":
        lines = []
        for row in rows:
            terms = []
            for k, part in enumerate(row["parts"], start=1):
                terms.extend(f"\\xi_{{{k}}}({j})" for j in part)
            lines.append(" + ".join(terms) + " \\leq 0 \\\\")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        lines = [f"inequalities of the Kirwan cone for r={args.r}, s={args.s} (plus the trace equality)"]
        for row in rows:
            terms = []
            for k, part in enumerate(row["parts"], start=1):
                terms.extend(f"xi{k}({j})" for j in part)
            lines.append("  " + " + ".join(terms) + " <= 0")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _parse_xi(text: str):
    raw = _parse_json(text, "--xi")
    try:
        return [[Fraction(str(x)) for x in part] for part in raw]
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise _UsageError(f"bad rational entry in --xi: {exc}") from exc


def _cmd_kirwan_check(args) -> int:
    parts = _parse_xi(args.xi)
    cache = HornTable()
    try:
        ok, violated = kirwan_check(parts, cache)
    except (DomainError, ShapeError) as exc:
        raise _UsageError(str(exc)) from exc
    _emit(
        {
            "member": ok,
            "violations": [c.to_json() for c in violated],
        }
    )
    return EXIT_OK if ok else EXIT_FALSE


def _cmd_lr_nonzero(args) -> int:
    raw = _parse_json(args.lam, "--lambda")
    cache = HornTable()
    try:
        weights = [Weight(tuple(int(x) for x in part)) for part in raw]
        ok = lr_nonvanishing(weights, cache)
    except (DomainError, ShapeError, TypeError, ValueError) as exc:
        raise _UsageError(str(exc)) from exc
    out = {"nonzero": ok, "weights": [w.to_json() for w in weights]}
    if ok:
        n, tup = tuple_from_weights(weights)
        out["subset_tuple"] = tup.to_json()
    else:
        _, violated = kirwan_check([w.entries for w in weights], cache)
        out["violations"] = [c.to_json() for c in violated]
    _emit(out)
    return EXIT_OK if ok else EXIT_FALSE


# ---------------------------------------------------------------- geometry


def _cmd_pos_compute(args) -> int:
    field_f, flag_mat = _load_matrix_file(args.flag)
    field_s, sub_mat = _load_matrix_file(args.subspace)
    if field_f != field_s:
        raise _UsageError("flag and subspace files use different fields")
    try:
        flag = Flag(field_f, flag_mat)
        sub = SubspaceBasis(field_s, sub_mat)
        pos = position(sub, flag)
    except (DomainError, ShapeError) as exc:
        raise _UsageError(str(exc)) from exc
    _emit({"position": list(pos.elements), "ground": pos.ground})
    return EXIT_OK


def _cmd_cell_sample(args) -> int:
    elems = _parse_json(args.subset, "--subset")
    try:
        subset = CardSubset(args.n, tuple(int(x) for x in elems))
    except (DomainError, TypeError) as exc:
        raise _UsageError(f"bad --subset: {exc}") from exc
    field = _field_from_args(args, default="rational")
    rng = rngmod.spawn(args.seed, 0)
    if args.flag:
        ffield, fmat = _load_matrix_file(args.flag)
        if ffield != field:
            field = ffield
        flag = Flag(field, fmat)
    else:
        flag = Flag.standard(field, args.n)
    sample = sample_cell_point(subset, flag, rng)
    _emit(
        {
            "subset": subset.to_json(),
            "seed": args.seed,
            "field": field.to_json_tag(),
            "basis": sample.mat.format_entries(),
            "verified_position": list(position(sample, flag).elements),
        }
    )
    return EXIT_OK


def _cmd_hn_search(args) -> int:
    if not is_prime(args.q):
        raise _UsageError(f"--q {args.q} is not prime")
    field = PrimeField(args.q)
    rng = rngmod.spawn(args.seed, 0)
    flags = [Flag.random(field, args.r, rng) for _ in range(args.s)]
    if args.theta:
        raw = _parse_json(args.theta, "--theta")
        thetas = [Weight(tuple(int(x) for x in part)) for part in raw]
    else:
        thetas = []
        for _ in range(args.s):
            entries = sorted(rng.randrange(-4, 5) for _ in range(args.r))
            thetas.append(Weight(tuple(entries)))
    try:
        result = hn_minimizer_exhaustive(flags, thetas, budget=args.budget)
    except BudgetError as exc:
        raise _UsageError(str(exc)) from exc
    except (DomainError, ShapeError) as exc:
        raise _UsageError(str(exc)) from exc
    _emit(
        {
            "r": args.r,
            "q": args.q,
            "seed": args.seed,
            "thetas": [w.to_json() for w in thetas],
            "minimizer": result.minimizer.mat.format_entries(),
            "dim": result.minimizer.dim,
            "slope": _fraction_json(result.slope),
            "multiplicity": result.multiplicity,
            "subspaces_scanned": result.scanned,
        }
    )
    return EXIT_OK if result.multiplicity == 1 else EXIT_FALSE


def _cmd_delta_eval(args) -> int:
    tup = _tuple_from_args(args)
    if tup.edim() != 0:
        raise _UsageError(f"delta needs an edim-0 tuple, got edim {tup.edim()}")
    rng = rngmod.spawn(args.seed, 0)
    r, q = tup.cardinality, tup.ground - tup.cardinality
    gs = [random_invertible(QQ, r, rng) for _ in range(tup.s)]
    hs = [random_invertible(QQ, q, rng) for _ in range(tup.s)]
    value = delta_determinant(tup, gs, hs)
    _emit(
        {
            "tuple": tup.to_json(),
            "seed": args.seed,
            "delta": str(value),
            "g": [g.format_entries() for g in gs],
            "h": [h.format_entries() for h in hs],
        }
    )
    return EXIT_OK if value != 0 else EXIT_FALSE


def _cmd_variational_demo(args) -> int:
    elems = _parse_json(args.j, "--j")
    rng = rngmod.spawn(args.seed, 0)
    if args.xi:
        xi = sorted((float(x) for x in _parse_json(args.xi, "--xi")), reverse=True)
    else:
        xi = sorted((rng.uniform(-2.0, 2.0) for _ in range(args.r)), reverse=True)
    try:
        subset = CardSubset(args.r, tuple(int(x) for x in elems))
    except DomainError as exc:
        raise _UsageError(f"bad --j: {exc}") from exc
    report = variational_check(xi, subset, args.trials, args.tolerance, rngmod.derive_seed(args.seed, 1))
    _emit({"xi": xi, "j": list(subset.elements), **report.to_json()})
    return EXIT_OK if report.ok else EXIT_FALSE


# ---------------------------------------------------------------- tables & fixtures


def _cmd_tables_a(args) -> int:
    cache = HornTable()
    out = []
    for d, r in APPENDIX_A_KEYS:
        computed = horn_classes(d, r, 3, cache)
        expected = appendix_a_tuple(d, r)
        match = [(t.canonical(), e) for t, e in expected] == computed
        if not match:
            raise AssertionError(f"computed Horn({d},{r},3) deviates from the embedded table")
        out.append(
            {
                "d": d,
                "r": r,
                "classes": [
                    {"tuple": [list(p.elements) for p in t.parts], "edim": e}
                    for t, e in computed
                ],
            }
        )
    if args.format == "json":
        _emit({"tables": out, "verified": True})
    else:
        blocks = []
        for block in out:
            rows = block["classes"]
            blocks.append(_render_table(block["d"], block["r"], 3, rows, args.format))
        sys.stdout.write("\n\n".join(blocks) + "\n")
    return EXIT_OK


def _cmd_tables_b(args) -> int:
    cache = HornTable()
    out = []
    for r in sorted(APPENDIX_B):
        closure = appendix_b_closure(r)
        computed = set(kirwan_inequality_set(r, 3, cache))
        if closure != computed:
            raise AssertionError(f"computed cone system for r={r} deviates from the embedded table")
        reps = [
            {
                "d": d,
                "representative": [list(p) for p in rep],
                "closure_size": len(PositionTuple.from_lists(r, rep).permutations()),
            }
            for d, rep in APPENDIX_B[r]
        ]
        out.append({"r": r, "count": len(computed), "representatives": reps})
    if args.format == "json":
        _emit({"tables": out, "verified": True})
    else:
        lines = []
        for block in out:
            lines.append(f"r = {block['r']}: trace equality plus {block['count']} inequalities")
            for rep in block["representatives"]:
                subs = " ".join(_format_subset(p) for p in rep["representative"])
                lines.append(
                    f"  d={rep['d']}  {subs}  (x{rep['closure_size']} permutations)"
                )
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_fixtures_two_point(args) -> int:
    flags = two_point_flags()
    v1, v2 = two_point_subspaces()
    target = two_point_tuple().parts[0]
    results = []
    ok = True
    for name, sub in (("V1", v1), ("V2", v2)):
        for t, flag in zip((0, 1, -1), flags):
            pos = position(sub, flag)
            good = pos == target
            ok = ok and good
            results.append(
                {"subspace": name, "t": t, "position": list(pos.elements), "expected": list(target.elements)}
            )
    _emit({"field": "sqrt5", "ok": ok, "checks": results})
    return EXIT_OK if ok else EXIT_FALSE


# ---------------------------------------------------------------- wiring


def _add_common(parser, field_default=None):
    parser.add_argument("--seed", type=int, default=0, help="master seed for all randomness")
    parser.add_argument("--samples", type=int, default=3)
    parser.add_argument("--format", choices=["json", "csv", "tex", "text"], default="json")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--prime", type=int, default=None, help="use GF(p) with this prime")
    parser.add_argument(
        "--field",
        choices=["rational", "sqrt5", "prime"],
        default=field_default,
        help="scalar field (default depends on the subcommand)",
    )
    parser.add_argument("--budget", type=int, default=DEFAULT_SUBSPACE_BUDGET)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horncalc",
        description="Horn inequalities, Schubert intersection certificates, and Kirwan cone membership",
    )
    sub = parser.add_subparsers(dest="group", required=True)

    horn = sub.add_parser("horn", help="Horn recursion").add_subparsers(dest="action", required=True)
    p = horn.add_parser("enumerate")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=3)
    _add_common(p)
    p.set_defaults(func=_cmd_horn_enumerate)
    p = horn.add_parser("check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tuple", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_horn_check)

    p = sub.add_parser("horn0", help="edim-0 slice of a Horn set")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, default=3)
    _add_common(p)
    p.set_defaults(func=_cmd_horn0)

    inter = sub.add_parser("intersect").add_subparsers(dest="action", required=True)
    p = inter.add_parser("certify")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tuple", required=True)
    _add_common(p, field_default=None)
    p.set_defaults(func=_cmd_intersect_certify)

    kirwan = sub.add_parser("kirwan").add_subparsers(dest="action", required=True)
    p = kirwan.add_parser("ineqs")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, default=3)
    _add_common(p)
    p.set_defaults(func=_cmd_kirwan_ineqs)
    p = kirwan.add_parser("check")
    p.add_argument("--xi", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_kirwan_check)

    lr = sub.add_parser("lr").add_subparsers(dest="action", required=True)
    p = lr.add_parser("nonzero")
    p.add_argument("--lambda", dest="lam", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_lr_nonzero)

    pos = sub.add_parser("pos").add_subparsers(dest="action", required=True)
    p = pos.add_parser("compute")
    p.add_argument("--flag", required=True, help="JSON matrix file; columns are the adapted basis")
    p.add_argument("--subspace", required=True, help="JSON matrix file; columns span the subspace")
    _add_common(p)
    p.set_defaults(func=_cmd_pos_compute)

    cell = sub.add_parser("cell").add_subparsers(dest="action", required=True)
    p = cell.add_parser("sample")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--subset", required=True)
    p.add_argument("--flag", default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_cell_sample)

    hn = sub.add_parser("hn").add_subparsers(dest="action", required=True)
    p = hn.add_parser("search")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, default=2, help="small prime field order")
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--theta", default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_hn_search)

    delta = sub.add_parser("delta").add_subparsers(dest="action", required=True)
    p = delta.add_parser("eval")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tuple", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_delta_eval)

    var = sub.add_parser("variational").add_subparsers(dest="action", required=True)
    p = var.add_parser("demo")
    p.add_argument("--r", type=int, default=6)
    p.add_argument("--j", required=True)
    p.add_argument("--xi", default=None)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    _add_common(p)
    p.set_defaults(func=_cmd_variational_demo)

    tables = sub.add_parser("tables").add_subparsers(dest="action", required=True)
    p = tables.add_parser("appendix-a")
    _add_common(p)
    p.set_defaults(func=_cmd_tables_a)
    p = tables.add_parser("appendix-b")
    _add_common(p)
    p.set_defaults(func=_cmd_tables_b)

    fixtures = sub.add_parser("fixtures").add_subparsers(dest="action", required=True)
    p = fixtures.add_parser("two-point")
    _add_common(p)
    p.set_defaults(func=_cmd_fixtures_two_point)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed a message; normalize the code
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except AssertionError as exc:
        sys.stderr.write(f"internal assertion failure: {exc}\n")
        return EXIT_INTERNAL


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
