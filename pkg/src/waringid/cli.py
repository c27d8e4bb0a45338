"""Command-line front end.

Exit codes: 0 success / positive verdict, 1 a test or property failed,
2 criterion not applicable, 64 malformed input or usage.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from .documents import (
    REPORT_SCHEMA,
    DocumentError,
    InputDocument,
    canonical_json,
    document_digest,
    parse_document,
    serialize_document,
)
from .errors import InputError, NumericalRangeError, WaringError, WrongRank
from .exactlin import RationalMatrix, as_rational, rank_float
from .geometry import apolar_pencil, castelnuovo_certificate, rnc_parameters, vandermonde_points
from .identify import (
    Decomposition,
    Verdict,
    certify,
    example_points,
    expected_terracini_dimension,
    terracini_test,
)
from .pointset import PointSet, hilbert_profile, kruskal_rank, satisfies_cb
from .veronese import tangent_basis

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_NOT_APPLICABLE = 2
EXIT_INPUT = 64

VERDICT_EXIT = {
    Verdict.IDENTIFIABLE.value: EXIT_OK,
    Verdict.RESHAPED_KRUSKAL_OK.value: EXIT_OK,
    Verdict.TEST_FAILED.value: EXIT_FAILED,
    Verdict.NOT_APPLICABLE.value: EXIT_NOT_APPLICABLE,
    "COMPUTED": EXIT_OK,
    "CB_HOLDS": EXIT_OK,
    "CB_FAILS": EXIT_FAILED,
    "LGP": EXIT_OK,
    "NOT_LGP": EXIT_FAILED,
    "PASS": EXIT_OK,
    "FAIL": EXIT_FAILED,
    "ON_RNC": EXIT_OK,
    "NO_LGP_SUBSET": EXIT_FAILED,
    "H2_TOO_BIG": EXIT_FAILED,
    "TOO_FEW_POINTS": EXIT_FAILED,
    "FAMILY_CERTIFIED": EXIT_OK,
    "NO_FAMILY": EXIT_FAILED,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _q(x: Fraction) -> str:
    return str(x)


def _read_input(path: str) -> tuple[InputDocument, str]:
    if path == "-":
        text, name = sys.stdin.read(), "<stdin>"
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from exc
        name = path
    try:
        return parse_document(text), name
    except DocumentError as exc:
        if exc.line is not None:
            raise InputError(f"{name}:{exc}") from exc
        raise InputError(f"{name}: {exc}") from exc
    except InputError as exc:
        raise InputError(f"{name}: {exc}") from exc


def _pointset(doc: InputDocument) -> PointSet:
    return PointSet(doc.points, doc.n)


def _decomposition(doc: InputDocument) -> Decomposition:
    return Decomposition(_pointset(doc), tuple(doc.weights or ()), doc.d)


# -- commands; each returns the report body with a "verdict" key ------------


def cmd_certify(doc: InputDocument, args) -> dict:
    report = certify(_decomposition(doc))
    body = report.evidence()
    body["notes"] = list(report.notes)
    return body


def cmd_hilbert(doc: InputDocument, args) -> dict:
    Z = _pointset(doc)
    prof = hilbert_profile(Z)
    return {
        "verdict": "COMPUTED",
        "cardinality": prof.cardinality,
        "h": list(prof.h),
        "h_vector": list(prof.dh),
        "socle_degree": prof.socle_degree,
        "separating_degree": len(prof.h) - 1,
        "residuals": [prof.residual(j) for j in range(len(prof.h))],
    }


def cmd_cb(doc: InputDocument, args) -> dict:
    Z = _pointset(doc)
    ok, witness = satisfies_cb(Z, args.degree)
    return {
        "verdict": "CB_HOLDS" if ok else "CB_FAILS",
        "degree": args.degree,
        "satisfied": ok,
        "witness": witness,
        "witness_point": None if witness is None else [_q(x) for x in Z[witness]],
    }


def cmd_kruskal(doc: InputDocument, args) -> dict:
    Z = _pointset(doc)
    k = kruskal_rank(Z)
    lgp = k == min(len(Z), Z.n + 1)
    return {"verdict": "LGP" if lgp else "NOT_LGP", "kruskal_rank": k, "lgp": lgp, "max_rank": min(len(Z), Z.n + 1)}


def cmd_terracini(doc: InputDocument, args) -> dict:
    D = _decomposition(doc)
    try:
        passed, dim = terracini_test(D)
    except WrongRank as exc:
        raise InputError(str(exc)) from exc
    body = {
        "verdict": "PASS" if passed else "FAIL",
        "terracini_dim": dim,
        "expected_dim": expected_terracini_dimension(D.n),
    }
    if args.tol is not None:
        rows = [v for p in D.points.integer_points for v in tangent_basis(p, 4)]
        try:
            body["diagnostic_float_rank"] = rank_float(RationalMatrix(rows), args.tol)
        except NumericalRangeError as exc:
            body["diagnostic_float_rank"] = None
            body["diagnostic_error"] = str(exc)
    return body


def cmd_castelnuovo(doc: InputDocument, args) -> dict:
    cert = castelnuovo_certificate(_pointset(doc))
    return {
        "verdict": cert.verdict.value,
        "h2": cert.h2,
        "lgp_subset": None if cert.lgp_subset is None else list(cert.lgp_subset),
    }


def cmd_pencil(doc: InputDocument, args) -> dict:
    Z = _pointset(doc)
    lambdas = rnc_parameters(Z)
    weights = list(doc.weights) if doc.weights is not None else [Fraction(1)] * len(Z)
    cert = apolar_pencil(weights, lambdas, Z.n)
    return {
        "verdict": "FAMILY_CERTIFIED" if cert.family_certified else "NO_FAMILY",
        "lambdas": [_q(t) for t in lambdas],
        "catalecticant_shape": list(cert.catalecticant.shape),
        "kernel_dim": cert.kernel_dim,
        "kernel": [[_q(x) for x in col] for col in cert.kernel.columns()],
    }


COMMANDS: dict[str, Callable] = {
    "certify": cmd_certify,
    "hilbert": cmd_hilbert,
    "cb": cmd_cb,
    "kruskal": cmd_kruskal,
    "terracini": cmd_terracini,
    "castelnuovo": cmd_castelnuovo,
    "pencil": cmd_pencil,
}


# -- generate ----------------------------------------------------------------


def parse_lambdas(spec: str) -> list[Fraction]:
    """``"0..8"`` (inclusive integer range) or comma-separated rationals."""
    spec = spec.strip()
    if ".." in spec:
        lo, _, hi = spec.partition("..")
        try:
            a, b = int(lo), int(hi)
        except ValueError as exc:
            raise InputError(f"bad lambda range {spec!r}") from exc
        if b < a:
            raise InputError(f"empty lambda range {spec!r}")
        return [Fraction(t) for t in range(a, b + 1)]
    return [as_rational(tok) for tok in spec.split(",") if tok.strip()]


def random_points(n: int, r: int, seed: int, bound: int) -> list[list[int]]:
    """Integer points with coordinates uniform in ``[-bound, bound]``.

    Uses :class:`random.Random` seeded with ``seed``; a drawn row that is zero
    or proportional to an earlier one is discarded and redrawn.
    """
    if n < 0 or r < 1 or bound < 1:
        raise InputError("random generation needs n >= 0, r >= 1, bound >= 1")
    if r > (2 * bound + 1) ** (n + 1) // 2:
        raise InputError("bound too small for that many distinct points")
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < r:
        row = [rng.randint(-bound, bound) for _ in range(n + 1)]
        if not any(row):
            continue
        lead = next(x for x in row if x)
        key = tuple(Fraction(x, lead) for x in row)
        if key in seen:
            continue
        seen.add(key)
        out.append(row)
    return out


def cmd_generate(args) -> InputDocument:
    if args.kind == "paper-example":
        return InputDocument.build(example_points(), n=4, d=4)
    if args.kind == "vandermonde":
        if args.n is None or args.lambdas is None:
            raise InputError("vandermonde needs --n and --lambda")
        Z = vandermonde_points(args.n, parse_lambdas(args.lambdas))
        return InputDocument.build(Z.points, n=args.n, d=4)
    if args.n is None or args.r is None or args.seed is None:
        raise InputError("random needs --n, --r and --seed")
    return InputDocument.build(random_points(args.n, args.r, args.seed, args.bound), n=args.n, d=4)


# -- plumbing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="waringid", description="Exact identifiability certificates for quartic Waring decompositions.")
    parser.add_argument("--version", action="version", version=f"waringid {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="input document (JSON or CSV); '-' for stdin")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="human", action="store_false", help="canonical JSON report (default)")
        fmt.add_argument("--human", dest="human", action="store_true", help="plain text report")
        p.set_defaults(human=False)
        return p

    add("certify", "run the identifiability pipeline")
    add("hilbert", "Hilbert function and h-vector")
    add("cb", "Cayley-Bacharach property").add_argument("--degree", "-i", type=int, required=True)
    add("kruskal", "Kruskal rank and linear general position")
    add("terracini", "Terracini tangent-space test (r = 2n+1)").add_argument(
        "--tol", type=float, default=None, help="also report a floating-point rank at this relative tolerance")
    add("castelnuovo", "rational normal curve certificate")
    add("pencil", "apolar pencil for points on the standard rational normal curve")

    gen = sub.add_parser("generate", help="write a fixture input document")
    gen.add_argument("kind", choices=["paper-example", "vandermonde", "random"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--r", type=int)
    gen.add_argument("--lambda", dest="lambdas", help="'a..b' or comma-separated rationals")
    gen.add_argument("--seed", type=int)
    gen.add_argument("--bound", type=int, default=9)
    gen.add_argument("--output", "-o", default="-")
    return parser


def _render_human(report: dict) -> str:
    lines = []
    for key in sorted(report):
        lines.append(f"{key}: {report[key]}")
    return "\n".join(lines) + "\n"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except SystemExit as exc:
        # --help / --version
        return int(exc.code or 0)

    try:
        if args.command == "generate":
            doc = cmd_generate(args)
            text = serialize_document(doc)
            if args.output == "-":
                stdout.write(text)
            else:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            return EXIT_OK
        doc, _ = _read_input(args.input)
        body = COMMANDS[args.command](doc, args)
    except (InputError, WaringError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT

    report = {
        "schema": REPORT_SCHEMA,
        "version": __version__,
        "command": args.command,
        "input_digest": document_digest(doc),
        **body,
    }
    stdout.write(_render_human(report) if args.human else canonical_json(report))
    return VERDICT_EXIT[body["verdict"]]


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
