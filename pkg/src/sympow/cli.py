"""Command-line interface.

Exit status is 0 on success, 2 on parse or usage errors and 3 on domain
errors (zero or unit ideal, failed preconditions, exhausted searches).
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import decomposition as dec
from . import invariants as inv
from . import polyhedra as poly
from . import symbolic as sym
from .errors import DomainError, ExponentOverflowError, ParseError, SympowError
from .output import OutputDocument, PolyhedronResult, emit_document
from .parsing import parse_ideal

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _common() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--vars", help="comma-separated variable names (fixes the ring order)")
    common.add_argument(
        "--min-primes",
        action="store_true",
        help="intersect over minimal primes instead of associated primes",
    )
    common.add_argument(
        "--strategy",
        choices=[s.value for s in sym.Strategy],
        default=sym.Strategy.AUTO.value,
    )
    common.add_argument("--sample-size", type=_positive_int, default=inv.DEFAULT_SAMPLE_SIZE)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--quiet", action="store_true", help="suppress informational messages")
    common.add_argument("--timing", action="store_true", help="report elapsed time on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="sympow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    common = [_common()]

    def add(name, help_text, *ints):
        p = sub.add_parser(name, parents=common, help=help_text)
        p.add_argument("ideal", help='ideal expression, e.g. "(x*y, x*z)"; "-" reads stdin')
        for arg in ints:
            p.add_argument(arg, type=_positive_int)
        return p

    add("symbolic-power", "n-th symbolic power", "n")
    add("primary-decomp", "irredundant primary decomposition")
    add("assoc-primes", "associated primes (minimal primes with --min-primes)")
    add("big-height", "largest height of an associated prime")
    add("minimal-part", "intersection of the minimal primary components")
    add("is-equal-ordinary", "decide whether I^(n) == I^n", "n")
    p = add("containment", "containment problem I^(a) in I^b")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--given-a", type=_positive_int, help="largest b for this a")
    g.add_argument("--given-b", type=_positive_int, help="smallest a for this b")
    add("symbolic-defect", "generators of I^(n) outside I^n", "n")
    add("polyhedron", "symbolic polyhedron with V-form and stats")
    p = add("waldschmidt", "Waldschmidt constant")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="exact value via LP (default)")
    g.add_argument("--approx", action="store_true", help="min of alpha(I^(m))/m over sample size")
    add("resurgence-bound", "lower bound on the resurgence", "N")
    add("alpha-sequence", "alpha(I^(m))/m for m = 1..k", "k")
    return parser


def _compute(args, ideal, opts, info):
    cmd = args.command
    if cmd == "symbolic-power":
        return sym.symbolic_power(ideal, args.n, opts)
    if cmd == "primary-decomp":
        return dec.primary_decomposition(ideal)
    if cmd == "assoc-primes":
        return dec.minimal_primes(ideal) if opts.minimal_primes else dec.associated_primes(ideal)
    if cmd == "big-height":
        return dec.big_height(ideal)
    if cmd == "minimal-part":
        return dec.minimal_part(ideal)
    if cmd == "is-equal-ordinary":
        return sym.is_symbolic_equal_ordinary(ideal, args.n)
    if cmd == "containment":
        if args.given_a is not None:
            return sym.containment_problem_given_a(ideal, args.given_a, opts)
        return sym.containment_problem(ideal, args.given_b, opts)
    if cmd == "symbolic-defect":
        return sym.symbolic_defect(ideal, args.n, opts)
    if cmd == "polyhedron":
        h = poly.symbolic_polyhedron(ideal, opts)
        return PolyhedronResult(h, poly.h_to_v(h), poly.polyhedron_stats(h))
    if cmd == "waldschmidt":
        if args.approx:
            info(f"approximating over the first {args.sample_size} symbolic powers (an upper bound)")
            return inv.waldschmidt_approx(ideal, args.sample_size, opts)
        info("monomial ideal: computing the Waldschmidt constant exactly")
        return inv.waldschmidt_exact(ideal, opts)
    if cmd == "resurgence-bound":
        return inv.lower_bound_resurgence(ideal, args.N, opts)
    if cmd == "alpha-sequence":
        return inv.alpha_sequence(ideal, args.k, opts)
    raise _UsageError(f"unknown command {cmd!r}")  # pragma: no cover


_INT_ARGS = ("n", "k", "N", "given_a", "given_b")


def _options_record(args, cmd: str) -> dict:
    out = {"min_primes": args.min_primes, "strategy": args.strategy}
    if cmd == "waldschmidt":
        out["mode"] = "approx" if args.approx else "exact"
        if args.approx:
            out["sample_size"] = args.sample_size
    return out


def run(argv, stdin=None, stdout=None, stderr=None) -> int:
    """Run one command; returns the process exit status."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    def info(message):
        if not args.quiet:
            print(message, file=stderr)

    start = time.perf_counter()
    try:
        text = stdin.read() if args.ideal == "-" else args.ideal
        variables = None
        if args.vars is not None:
            variables = [v.strip() for v in args.vars.split(",") if v.strip()]
        expr = parse_ideal(text.strip(), variables)
        ideal = expr.ideal()
        opts = sym.SymbolicOptions(minimal_primes=args.min_primes, strategy=args.strategy)
        result = _compute(args, ideal, opts, info)
    except (ParseError, ValueError) as exc:
        if isinstance(exc, DomainError):
            print(f"sympow: domain error: {exc}", file=stderr)
            return EXIT_DOMAIN
        print(f"sympow: parse error: {exc}", file=stderr)
        return EXIT_USAGE
    except (SympowError, ExponentOverflowError) as exc:
        print(f"sympow: domain error: {exc}", file=stderr)
        return EXIT_DOMAIN
    arguments = {k: getattr(args, k) for k in _INT_ARGS if getattr(args, k, None) is not None}
    doc = OutputDocument(
        command=args.command,
        ring=ideal.ring,
        input=ideal,
        arguments=arguments,
        options=_options_record(args, args.command),
        result=result,
    )
    stdout.write(emit_document(doc, args.format))
    stdout.flush()
    if args.timing:
        print(f"elapsed: {time.perf_counter() - start:.6f} s", file=stderr)
    return EXIT_OK


def main(argv=None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":  # pragma: no cover
    main()
