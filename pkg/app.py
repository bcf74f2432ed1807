import argparse
import logging
import sys
from typing import List, Optional, Tuple

from frontend.cli_commands import (
    GEN_FORMS,
    cmd_bounds,
    cmd_export,
    cmd_gen,
    cmd_lemmas,
    cmd_selfcheck,
    render_report,
)
from spherical.export import FORMATS, KINDS
from utils.config import Settings, get_settings
from utils.errors import ExportError, InvalidInputError
from utils.export_helpers import write_output
from utils.logger import logger
from utils.reports import OUTCOME_FAIL

# Constants
PROG = "quasihelix"
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def parse_window(text: str) -> Tuple[int, int]:
    """'LO:HI' -> (LO, HI)."""
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like LO:HI, got {text!r}")
    if not 0 <= lo < hi:
        raise argparse.ArgumentTypeError(f"window needs 0 <= LO < HI, got {text!r}")
    return lo, hi


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


class QuasiHelixApp:
    """Command-line front end: generators, verifications, searches and exports."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings

    def _build_parser(self, settings: Settings) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=PROG, description=__doc__ or self.__doc__)
        parser.add_argument("--threads", type=positive_int, default=settings.threads,
                            help="worker threads for exhaustive searches (default: QH_THREADS)")
        parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
        sub = parser.add_subparsers(dest="command", required=True)

        gen = sub.add_parser("gen", help="print the first terms of the sequence")
        gen.add_argument("--len", dest="length", type=positive_int, required=True)
        gen.add_argument("--form", choices=GEN_FORMS, default="signs")
        gen.add_argument("--out", default=None)

        check = sub.add_parser("selfcheck", help="run every exact verification")
        check.add_argument("--len", dest="length", type=positive_int, default=4096)
        check.add_argument("--out", default=None)

        bounds = sub.add_parser("bounds", help="extremal pair searches and ratio bounds")
        bounds.add_argument("--nmax", type=positive_int, default=256)
        bounds.add_argument("--window", type=parse_window, default=(16, 64))
        bounds.add_argument("--out", default=None)

        lemmas = sub.add_parser("lemmas", help="lemma tables and Hoelder constants")
        lemmas.add_argument("--scan-max", dest="scan_max", type=positive_int, default=4096)
        lemmas.add_argument("--out", default=None)

        export = sub.add_parser("export", help="write sampled points as CSV or JSON")
        export.add_argument("--kind", choices=KINDS, required=True)
        export.add_argument("--format", dest="fmt", choices=FORMATS, default="csv")
        export.add_argument("--out", default=None)
        export.add_argument("--count", type=positive_int, default=4096)
        export.add_argument("--t-min", dest="t_min", type=float, default=None)
        export.add_argument("--t-max", dest="t_max", type=float, default=16.0)
        export.add_argument("--anchor", type=float, default=1.0)
        export.add_argument("--steps", type=positive_int, default=256)
        export.add_argument("--nmax", dest="n_max", type=positive_int, default=64)
        export.add_argument("--max-samples", dest="max_samples", type=positive_int, default=None)
        return parser

    def _dispatch(self, args: argparse.Namespace) -> int:
        if args.command == "gen":
            cmd_gen(args.length, args.form, args.out)
            return EXIT_OK
        if args.command == "export":
            t_min = args.t_min if args.t_min is not None else (1.0 if args.kind == "central" else 0.0)
            cmd_export(args.kind, args.fmt, args.out, count=args.count, t_min=t_min, t_max=args.t_max,
                       anchor=args.anchor, steps=args.steps, n_max=args.n_max,
                       max_samples=args.max_samples)
            return EXIT_OK
        if args.command == "selfcheck":
            report = cmd_selfcheck(args.length)
        elif args.command == "bounds":
            report = cmd_bounds(args.nmax, args.window, threads=args.threads)
        else:
            report = cmd_lemmas(args.scan_max, threads=args.threads)
        write_output(render_report(report), args.out)
        return EXIT_VERIFICATION_FAILED if report.outcome == OUTCOME_FAIL else EXIT_OK

    def run(self, argv: Optional[List[str]] = None) -> int:
        try:
            settings = self.settings or get_settings()
        except InvalidInputError as e:
            logger.error("Invalid configuration", extra={"error": str(e)})
            print(f"{PROG}: error: {e}", file=sys.stderr)
            return EXIT_USAGE
        try:
            args = self._build_parser(settings).parse_args(argv)
        except SystemExit as e:
            return EXIT_USAGE if e.code else EXIT_OK
        if args.verbose:
            logger.set_level(logging.INFO)
        try:
            return self._dispatch(args)
        except InvalidInputError as e:
            logger.error("Invalid input", extra={"command": args.command, "error": str(e)})
            print(f"{PROG}: error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except ExportError as e:
            logger.error("Output could not be written", extra={"command": args.command, "error": str(e)})
            print(f"{PROG}: error: {e}", file=sys.stderr)
            return EXIT_IO


def main() -> None:
    sys.exit(QuasiHelixApp().run())


if __name__ == "__main__":
    main()
