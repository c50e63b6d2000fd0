"""
Batch command line interface.

Three subcommands:

* ``hasse``    -- emit a weighted cover diagram as JSON, Graphviz DOT, or a
                  plain table;
* ``verify``   -- run one of the named verification suites and report
                  JSON/table results (exit 0 when everything holds, exit 1
                  on any counterexample);
* ``schubert`` -- print one Schubert polynomial, optionally padded, in the
                  standard convention, or principally specialized.

Exit codes: 0 success / verified, 1 counterexample found, 2 usage error.
Potentially large integers in JSON output are always decimal strings.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from typing import Callable, Sequence

from .chains import (
    base_change_unimodular_check,
    um_determinant_check,
    um_determinant_formula,
    um_snf_check,
)
from .hasse import build_hasse, diagram_to_dot, diagram_to_json, w0_symmetry_check
from .operators import (
    commutator_check,
    delta_action_chunk,
    macdonald_chunk,
    nabla_action_chunk,
    path_identities_chunk,
)
from .permutations import (
    num_inversions_max,
    parse as parse_permutation,
    permutations_by_rank,
    to_string,
)
from .schubert import (
    pad,
    principal_specialization,
    schubert,
    schubert_standard,
)
from .snf import verify_snf_theorem

__all__ = ["main", "entrypoint"]

SUITES = (
    "nabla-action",
    "delta-action",
    "sl2",
    "path-identities",
    "macdonald",
    "w0-symmetry",
    "snf",
    "chains-basis",
    "chains-snf",
    "chains-det",
)

# default size caps; --force overrides with a warning on stderr
PATH_SUITE_CAP = 6
DIFFERENTIAL_SUITE_CAP = 5
SNF_SUITE_CAP = 5
SNF_EXHAUSTIVE_CAP = 4
SNF_SAMPLE_PAIRS_N5 = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 10), (2, 8))

_SUITE_CAPS = {
    "nabla-action": DIFFERENTIAL_SUITE_CAP,
    "delta-action": DIFFERENTIAL_SUITE_CAP,
    "sl2": DIFFERENTIAL_SUITE_CAP,
    "path-identities": PATH_SUITE_CAP,
    "macdonald": PATH_SUITE_CAP,
    "w0-symmetry": PATH_SUITE_CAP,
    "snf": SNF_SUITE_CAP,
}


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    """Map preserving input order, optionally across processes."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with multiprocessing.Pool(min(jobs, len(items))) as pool:
        return pool.map(fn, items)


def _chunks(seq: Sequence, pieces: int) -> list[list]:
    pieces = max(1, min(pieces, len(seq)))
    out = []
    base, extra = divmod(len(seq), pieces)
    start = 0
    for i in range(pieces):
        step = base + (1 if i < extra else 0)
        out.append(list(seq[start : start + step]))
        start += step
    return out


# module-level workers so multiprocessing can pickle them

def _job_nabla(payload):
    n, perms = payload
    return nabla_action_chunk(n, perms)


def _job_delta(payload):
    n, perms = payload
    return delta_action_chunk(n, perms)


def _job_paths(payload):
    n, perms = payload
    return path_identities_chunk(n, perms)


def _job_macdonald(payload):
    n, perms = payload
    return macdonald_chunk(n, perms)


def _job_snf(payload):
    n, low, high = payload
    return verify_snf_theorem(n, low, high)


def _job_chains_snf(payload):
    M, low, high = payload
    return um_snf_check(M, low, high)


def _job_chains_basis(payload):
    M, rank = payload
    return rank, base_change_unimodular_check(M, rank)


def _job_chains_det(payload):
    M, low, high = payload
    return low, high, um_determinant_check(M, low, high)


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        _print_table(payload)


def _print_table(payload) -> None:
    """Minimal human-readable rendering of a report payload."""
    if isinstance(payload, dict) and "reports" in payload:
        for report in payload["reports"]:
            name = report.get("suite", "?")
            scope = []
            for key in ("n", "M", "from", "to"):
                if key in report and report[key] is not None:
                    scope.append(f"{key}={report[key]}")
            status = "ok" if not report.get("failures") else "FAIL"
            line = f"{name} [{', '.join(scope)}] checked={report.get('checked')} {status}"
            print(line)
            for failure in report.get("failures", []):
                print(f"  counterexample {failure}")
        verdict = "verified" if payload.get("ok") else "counterexample found"
        print(verdict)
    else:
        print(json.dumps(payload, indent=2))


def _perm_suite_report(args, suite: str) -> dict:
    n, jobs = args.n, args.jobs
    perms = [w for stratum in permutations_by_rank(n) for w in stratum]
    payloads = [(n, chunk) for chunk in _chunks(perms, jobs if jobs > 1 else 1)]
    if suite == "nabla-action":
        parts = _pmap(_job_nabla, payloads, jobs)
        checked = sum(p[0] for p in parts)
        unit_ok = all(p[1] for p in parts)
        failures = [f for p in parts for f in p[2]]
        return {
            "suite": suite,
            "n": n,
            "weight_convention": "cover by s_i carries coefficient i",
            "unit_weight_reading_consistent": unit_ok,
            "checked": checked,
            "failures": failures,
        }
    if suite == "delta-action":
        parts = _pmap(_job_delta, payloads, jobs)
        return {
            "suite": suite,
            "n": n,
            "checked": sum(p[0] for p in parts),
            "failures": [f for p in parts for f in p[1]],
        }
    if suite == "path-identities":
        parts = _pmap(_job_paths, payloads, jobs)
        return {
            "suite": suite,
            "n": n,
            "permutations": len(perms),
            "checked": 4 * len(perms),
            "failures": [f for p in parts for f in p],
        }
    parts = _pmap(_job_macdonald, payloads, jobs)
    return {
        "suite": "macdonald",
        "n": n,
        "checked": sum(p[0] for p in parts),
        "failures": [f for p in parts for f in p[1]],
    }


def _snf_pairs(n: int, low, high) -> list[tuple[int, int]]:
    top = num_inversions_max(n)
    if low is not None and high is not None:
        return [(low, high)]
    if low is not None or high is not None:
        raise ValueError("--from and --to must be given together")
    if n == 5:
        return list(SNF_SAMPLE_PAIRS_N5)
    return [(a, b) for a in range(top + 1) for b in range(a + 1, top + 1) if a + b <= top]


def _chain_pairs(total: int, low, high) -> list[tuple[int, int]]:
    if low is not None and high is not None:
        return [(low, high)]
    if low is not None or high is not None:
        raise ValueError("--from and --to must be given together")
    return [(a, b) for a in range(total + 1) for b in range(a + 1, total + 1) if a + b <= total]


def cmd_verify(args) -> int:
    suite = args.suite
    reports: list[dict] = []
    if suite in _SUITE_CAPS:
        if args.n is None:
            raise ValueError(f"suite {suite!r} needs --n")
        cap = _SUITE_CAPS[suite]
        if args.n > cap:
            if not args.force:
                raise ValueError(
                    f"suite {suite!r} is capped at n = {cap} by default; pass --force to override"
                )
            print(
                f"warning: running {suite} at n = {args.n} beyond the default cap {cap}; "
                "expect a long run",
                file=sys.stderr,
            )
    if suite in ("nabla-action", "delta-action", "path-identities", "macdonald"):
        reports.append(_perm_suite_report(args, suite))
    elif suite == "sl2":
        ok = commutator_check(args.n)
        reports.append(
            {
                "suite": "sl2",
                "n": args.n,
                "checked": num_inversions_max(args.n) + 1,
                "failures": []
                if ok
                else [
                    {
                        "witness": "commutator",
                        "expected": "scalar 2k - N on every rank k",
                        "actual": "mismatch",
                    }
                ],
            }
        )
    elif suite == "w0-symmetry":
        failures = []
        checked = 0
        for order, weights in (("weak", "nabla"), ("strong", "code"), ("strong", "chevalley")):
            diagram = build_hasse(args.n, order, weights)
            checked += len(diagram.edges)
            ok, witness = w0_symmetry_check(diagram)
            if not ok:
                failures.append({"witness": f"{order}/{weights}", **witness})
        reports.append(
            {"suite": "w0-symmetry", "n": args.n, "checked": checked, "failures": failures}
        )
    elif suite == "snf":
        pairs = _snf_pairs(args.n, args.from_rank, args.to_rank)
        reports.extend(_pmap(_job_snf, [(args.n, a, b) for a, b in pairs], args.jobs))
    elif suite in ("chains-basis", "chains-snf", "chains-det"):
        if args.M is None:
            raise ValueError(f"suite {suite!r} needs --M")
        M = args.M
        total = sum(M)
        if suite == "chains-basis":
            payloads = [(M, rank) for rank in range(total + 1)]
            results = _pmap(_job_chains_basis, payloads, args.jobs)
            failures = [
                {"witness": f"rank {rank}", "expected": "unimodular", "actual": "not unimodular"}
                for rank, ok in results
                if not ok
            ]
            reports.append(
                {
                    "suite": suite,
                    "M": list(M),
                    "checked": len(results),
                    "failures": failures,
                }
            )
        elif suite == "chains-snf":
            pairs = _chain_pairs(total, args.from_rank, args.to_rank)
            reports.extend(_pmap(_job_chains_snf, [(M, a, b) for a, b in pairs], args.jobs))
        else:
            payloads = [(M, k, total - k) for k in range(total // 2 + 1)]
            results = _pmap(_job_chains_det, payloads, args.jobs)
            failures = [
                {
                    "witness": f"raising[{a},{b}]",
                    "expected": str(um_determinant_formula(M, a, b)),
                    "actual": "determinant mismatch",
                }
                for a, b, ok in results
                if not ok
            ]
            reports.append(
                {"suite": suite, "M": list(M), "checked": len(results), "failures": failures}
            )
    else:  # pragma: no cover - argparse choices guard this
        raise ValueError(f"unknown suite: {suite!r}")
    ok = all(not r["failures"] for r in reports)
    _emit({"ok": ok, "reports": reports}, args.format)
    return 0 if ok else 1


def cmd_hasse(args) -> int:
    diagram = build_hasse(args.n, args.order, args.weights)
    if args.format == "dot":
        print(diagram_to_dot(diagram), end="")
    elif args.format == "table":
        print(f"# S_{args.n}, {args.order} order, {args.weights} weights")
        for src, dst, wt in diagram.edges:
            print(f"{to_string(src)} -> {to_string(dst)}  weight {wt}")
    else:
        print(json.dumps(diagram_to_json(diagram), indent=2))
    return 0


def cmd_schubert(args) -> int:
    w = parse_permutation(args.perm)
    poly = schubert_standard(w) if args.standard_convention else schubert(w)
    if args.specialize:
        value = principal_specialization(poly)
        payload: dict = {
            "perm": to_string(w),
            "n": len(w),
            "convention": "standard" if args.standard_convention else "left-multiplication",
            "value": str(value),
        }
        if args.format == "json":
            print(json.dumps(payload, indent=2))
        else:
            print(value)
        return 0
    rendered = pad(poly) if args.padded else poly
    payload = {
        "perm": to_string(w),
        "n": len(w),
        "convention": "standard" if args.standard_convention else "left-multiplication",
        "padded": bool(args.padded),
        "polynomial": str(rendered),
        "terms": [
            {"alpha": list(alpha), "coeff": str(coeff)} for alpha, coeff in rendered.sorted_terms()
        ],
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(rendered)
    return 0


def _parse_profile(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse chain profile: {text!r}") from None
    if any(m < 0 for m in out):
        raise argparse.ArgumentTypeError(f"chain lengths must be nonnegative: {text!r}")
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bruhatops",
        description="Weighted Bruhat orders, Schubert operators, and exact Smith form checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hasse = sub.add_parser("hasse", help="emit a weighted cover diagram")
    p_hasse.add_argument("--n", type=int, required=True)
    p_hasse.add_argument("--order", choices=["weak", "strong"], required=True)
    p_hasse.add_argument("--weights", choices=["nabla", "code", "chevalley", "unit"], required=True)
    p_hasse.add_argument("--format", choices=["dot", "json", "table"], default="json")
    p_hasse.set_defaults(fn=cmd_hasse)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=list(SUITES), required=True)
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--from", dest="from_rank", type=int)
    p_verify.add_argument("--to", dest="to_rank", type=int)
    p_verify.add_argument("--M", type=_parse_profile)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--force", action="store_true", help="override the default size caps")
    p_verify.add_argument("--format", choices=["json", "table"], default="json")
    p_verify.set_defaults(fn=cmd_verify)

    p_schub = sub.add_parser("schubert", help="print one Schubert polynomial")
    p_schub.add_argument("--perm", required=True)
    p_schub.add_argument("--padded", action="store_true")
    p_schub.add_argument("--standard-convention", action="store_true")
    p_schub.add_argument("--specialize", action="store_true")
    p_schub.add_argument("--format", choices=["json", "table"], default="json")
    p_schub.set_defaults(fn=cmd_schubert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:  # console-script shim
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
